//! Binary linear block codes: alist ingestion, generator derivation,
//! encoding, syndromes, and brute-force minimum distance.
//!
//! Codes are ingested from parity-check matrices in the standard alist text
//! format; nothing here constructs BCH or Polar codes from scratch.

use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::gf2::{BinaryMatrix, BinaryVector};

/// Guard for exhaustive 2^k enumerations (min distance, coset search).
pub const ENUMERATION_GUARD_K: usize = 24;

#[derive(Debug, Error)]
pub enum CodeError {
    #[error("alist parse error on line {line}: {msg}")]
    AlistParse { line: usize, msg: String },
    #[error("parity-check matrix is rank deficient: rank {rank} < {rows} rows")]
    RankDeficient { rank: usize, rows: usize },
    #[error("degenerate code: parity-check matrix leaves dimension k = 0")]
    ZeroDimension,
    #[error("dimension mismatch: expected length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error(
        "k = {k} exceeds the enumeration guard ({ENUMERATION_GUARD_K}); \
         supply d_min externally"
    )]
    EnumerationGuard { k: usize },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

/// An (n, k) binary linear block code bound to one parity-check realization.
#[derive(Clone)]
pub struct LinearCode {
    n: usize,
    k: usize,
    h: BinaryMatrix,
    g: BinaryMatrix,
    d_min: Option<usize>,
    /// SHA-256 of the canonical alist emission of H, hex encoded. Recorded in
    /// every dataset, checkpoint and result file so runs are comparable.
    hash: String,
}

impl LinearCode {
    /// Builds a code from a full-rank parity-check matrix.
    pub fn from_parity(h: BinaryMatrix, d_min: Option<usize>) -> Result<Self, CodeError> {
        let g = generator_from_parity(&h)?;
        let n = h.cols();
        let k = g.rows();
        let hash = hex_digest(emit_alist(&h).as_bytes());
        Ok(Self {
            n,
            k,
            h,
            g,
            d_min,
            hash,
        })
    }

    /// Parses an alist file and builds the code.
    pub fn from_alist_text(text: &str, d_min: Option<usize>) -> Result<Self, CodeError> {
        let h = parse_alist(text)?;
        Self::from_parity(h, d_min)
    }

    pub fn from_alist_path(
        path: &std::path::Path,
        d_min: Option<usize>,
    ) -> Result<Self, CodeError> {
        let text = std::fs::read_to_string(path)?;
        Self::from_alist_text(&text, d_min)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn redundancy(&self) -> usize {
        self.n - self.k
    }

    pub fn rate(&self) -> f64 {
        self.k as f64 / self.n as f64
    }

    pub fn parity_check(&self) -> &BinaryMatrix {
        &self.h
    }

    pub fn generator(&self) -> &BinaryMatrix {
        &self.g
    }

    pub fn d_min(&self) -> Option<usize> {
        self.d_min
    }

    pub fn set_d_min(&mut self, d: usize) {
        self.d_min = Some(d);
    }

    pub fn hash(&self) -> &str {
        &self.hash
    }

    /// `u * G` for a length-k message.
    pub fn encode(&self, u: &BinaryVector) -> Result<BinaryVector, CodeError> {
        if u.len() != self.k {
            return Err(CodeError::DimensionMismatch {
                expected: self.k,
                got: u.len(),
            });
        }
        let mut c = BinaryVector::zeros(self.n);
        for j in u.iter_ones() {
            c.xor_assign(&self.g.row(j));
        }
        Ok(c)
    }

    /// `z * H^t`; zero iff `z` is a codeword.
    pub fn syndrome(&self, z: &BinaryVector) -> Result<BinaryVector, CodeError> {
        if z.len() != self.n {
            return Err(CodeError::DimensionMismatch {
                expected: self.n,
                got: z.len(),
            });
        }
        Ok(self.h.mul_vec(z).expect("checked dims"))
    }

    /// Minimum Hamming weight over all nonzero codewords, by Gray-code
    /// enumeration of all 2^k - 1 of them. Guarded to k <= 24.
    pub fn min_distance_bruteforce(&self) -> Result<usize, CodeError> {
        if self.k > ENUMERATION_GUARD_K {
            return Err(CodeError::EnumerationGuard { k: self.k });
        }
        let mut current = BinaryVector::zeros(self.n);
        let mut best = usize::MAX;
        for step in 1u64..(1u64 << self.k) {
            let j = step.trailing_zeros() as usize;
            current.xor_assign(&self.g.row(j));
            best = best.min(current.weight());
        }
        Ok(best)
    }
}

impl std::fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "LinearCode(n={}, k={}, d_min={:?}, hash={})",
            self.n,
            self.k,
            self.d_min,
            &self.hash[..12]
        )
    }
}

pub fn hex_digest(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let out = hasher.finalize();
    out.iter().map(|b| format!("{b:02x}")).collect()
}

/// Derives a full-rank generator matrix from a full-rank parity check.
///
/// The identity block of G lands on the information positions chosen by the
/// systematic form of H; columns are restored to the original order before
/// returning.
pub fn generator_from_parity(h: &BinaryMatrix) -> Result<BinaryMatrix, CodeError> {
    let (hsys, perm, rank) = h.systematic_form();
    if rank != h.rows() {
        return Err(CodeError::RankDeficient {
            rank,
            rows: h.rows(),
        });
    }
    let n = h.cols();
    let r = h.rows();
    let k = n - r;
    if k == 0 {
        return Err(CodeError::ZeroDimension);
    }
    // hsys = [I_r | B] in permuted columns; G_sys = [B^t | I_k]
    let mut g = BinaryMatrix::zeros(k, n);
    for row in 0..k {
        for i in 0..r {
            g.set(row, perm[i], hsys.get(i, r + row));
        }
        g.set(row, perm[r + row], 1);
    }
    debug_assert_eq!(g.rank(), k);
    for row in 0..k {
        debug_assert!(h.mul_vec(&g.row(row)).expect("dims").is_zero());
    }
    Ok(g)
}

/// Parses the standard alist format: `cols rows`, max degrees, per-column and
/// per-row degree lists, then 1-based index lists (zero padding tolerated).
pub fn parse_alist(text: &str) -> Result<BinaryMatrix, CodeError> {
    let err = |line: usize, msg: &str| CodeError::AlistParse {
        line,
        msg: msg.to_string(),
    };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty());

    let mut ints = |expect_line: &str| -> Result<(usize, Vec<usize>), CodeError> {
        let (no, line) = lines
            .next()
            .ok_or_else(|| err(0, &format!("unexpected end of file, expected {expect_line}")))?;
        let vals: Result<Vec<usize>, _> = line.split_whitespace().map(str::parse).collect();
        match vals {
            Ok(v) => Ok((no, v)),
            Err(_) => Err(err(no, &format!("expected integers ({expect_line})"))),
        }
    };

    let (no, header) = ints("header `cols rows`")?;
    if header.len() != 2 {
        return Err(err(no, "header must contain exactly `cols rows`"));
    }
    let (cols, rows) = (header[0], header[1]);
    if cols == 0 || rows == 0 {
        return Err(err(no, "matrix dimensions must be positive"));
    }

    let (no, maxdeg) = ints("max degrees")?;
    if maxdeg.len() != 2 {
        return Err(err(no, "expected `max_col_degree max_row_degree`"));
    }

    let (no, col_degs) = ints("per-column degrees")?;
    if col_degs.len() != cols {
        return Err(err(
            no,
            &format!("expected {cols} column degrees, found {}", col_degs.len()),
        ));
    }
    let (no, row_degs) = ints("per-row degrees")?;
    if row_degs.len() != rows {
        return Err(err(
            no,
            &format!("expected {rows} row degrees, found {}", row_degs.len()),
        ));
    }

    let mut m = BinaryMatrix::zeros(rows, cols);
    for c in 0..cols {
        let (no, idx) = ints("column index list")?;
        let nonzero: Vec<usize> = idx.into_iter().filter(|&i| i != 0).collect();
        if nonzero.len() != col_degs[c] {
            return Err(err(
                no,
                &format!(
                    "column {} lists {} entries but declares degree {}",
                    c + 1,
                    nonzero.len(),
                    col_degs[c]
                ),
            ));
        }
        for i in nonzero {
            if i > rows {
                return Err(err(no, &format!("row index {i} out of range 1..={rows}")));
            }
            if m.get(i - 1, c) == 1 {
                return Err(err(no, &format!("duplicate entry for row {i}")));
            }
            m.set(i - 1, c, 1);
        }
    }
    for r in 0..rows {
        let (no, idx) = ints("row index list")?;
        let nonzero: Vec<usize> = idx.into_iter().filter(|&i| i != 0).collect();
        if nonzero.len() != row_degs[r] {
            return Err(err(
                no,
                &format!(
                    "row {} lists {} entries but declares degree {}",
                    r + 1,
                    nonzero.len(),
                    row_degs[r]
                ),
            ));
        }
        let mut seen = vec![false; cols];
        for j in &nonzero {
            if *j > cols {
                return Err(err(no, &format!("column index {j} out of range 1..={cols}")));
            }
            if m.get(r, j - 1) == 0 {
                return Err(err(
                    no,
                    &format!(
                        "row {} claims a 1 at column {} absent from the column lists",
                        r + 1,
                        j
                    ),
                ));
            }
            seen[j - 1] = true;
        }
        for c in 0..cols {
            if m.get(r, c) == 1 && !seen[c] {
                return Err(err(
                    no,
                    &format!(
                        "column lists place a 1 at row {} column {} missing from the row list",
                        r + 1,
                        c + 1
                    ),
                ));
            }
        }
    }
    Ok(m)
}

/// Canonical alist emission (no zero padding, single spaces, trailing newline).
/// The code hash is the SHA-256 of this emission.
pub fn emit_alist(m: &BinaryMatrix) -> String {
    let rows = m.rows();
    let cols = m.cols();
    let col_idx: Vec<Vec<usize>> = (0..cols)
        .map(|c| (0..rows).filter(|&r| m.get(r, c) == 1).map(|r| r + 1).collect())
        .collect();
    let row_idx: Vec<Vec<usize>> = (0..rows)
        .map(|r| (0..cols).filter(|&c| m.get(r, c) == 1).map(|c| c + 1).collect())
        .collect();
    let maxc = col_idx.iter().map(Vec::len).max().unwrap_or(0);
    let maxr = row_idx.iter().map(Vec::len).max().unwrap_or(0);
    let join = |v: &[usize]| {
        v.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut out = format!("{cols} {rows}\n{maxc} {maxr}\n");
    out.push_str(&join(
        &col_idx.iter().map(Vec::len).collect::<Vec<_>>(),
    ));
    out.push('\n');
    out.push_str(&join(
        &row_idx.iter().map(Vec::len).collect::<Vec<_>>(),
    ));
    out.push('\n');
    for c in &col_idx {
        out.push_str(&join(c));
        out.push('\n');
    }
    for r in &row_idx {
        out.push_str(&join(r));
        out.push('\n');
    }
    out
}
