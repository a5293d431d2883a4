//! Dense bit-packed linear algebra over GF(2).
//!
//! Vectors and matrices pack bits into `u64` words. Packing is an internal
//! detail: the public API speaks in bit indices and unpacked views, and the
//! tests only ever look at unpacked bits.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Gf2Error {
    #[error("dimension mismatch: matrix is {rows}x{cols}, vector has length {vec_len}")]
    DimensionMismatch {
        rows: usize,
        cols: usize,
        vec_len: usize,
    },
}

const WORD_BITS: usize = 64;

fn words_for(len: usize) -> usize {
    (len + WORD_BITS - 1) / WORD_BITS
}

/// A vector over GF(2) with at least one element.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryVector {
    words: Vec<u64>,
    len: usize,
}

impl BinaryVector {
    pub fn zeros(len: usize) -> Self {
        assert!(len >= 1, "BinaryVector length must be >= 1");
        Self {
            words: vec![0; words_for(len)],
            len,
        }
    }

    /// Builds a vector from 0/1 entries. Any nonzero byte counts as 1.
    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b != 0 {
                v.set(i, 1);
            }
        }
        v
    }

    pub fn from_fn(len: usize, mut f: impl FnMut(usize) -> u8) -> Self {
        let mut v = Self::zeros(len);
        for i in 0..len {
            if f(i) != 0 {
                v.set(i, 1);
            }
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn get(&self, i: usize) -> u8 {
        debug_assert!(i < self.len);
        ((self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1) as u8
    }

    #[inline]
    pub fn set(&mut self, i: usize, bit: u8) {
        debug_assert!(i < self.len);
        let w = i / WORD_BITS;
        let m = 1u64 << (i % WORD_BITS);
        if bit != 0 {
            self.words[w] |= m;
        } else {
            self.words[w] &= !m;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "xor of unequal lengths");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Number of ones.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Unpacked 0/1 view.
    pub fn bits(&self) -> Vec<u8> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i) == 1)
    }

    /// Lexicographic order on the bit sequence, index 0 first; 0 < 1.
    pub fn cmp_lex(&self, other: &Self) -> Ordering {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter().zip(&other.words) {
            let x = a ^ b;
            if x != 0 {
                let i = x.trailing_zeros();
                return if (a >> i) & 1 == 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        Ordering::Equal
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", self.get(i))?;
        }
        Ok(())
    }
}

/// A dense matrix over GF(2), rows packed into `u64` words.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

impl BinaryMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be >= 1");
        let wpr = words_for(cols);
        Self {
            rows,
            cols,
            words_per_row: wpr,
            data: vec![0; rows * wpr],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds from row-major 0/1 entries.
    pub fn from_rows(rows: &[&[u8]]) -> Self {
        assert!(!rows.is_empty());
        let cols = rows[0].len();
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged rows");
            for (j, &b) in r.iter().enumerate() {
                if b != 0 {
                    m.set(i, j, 1);
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u8 {
        debug_assert!(r < self.rows && c < self.cols);
        ((self.data[r * self.words_per_row + c / WORD_BITS] >> (c % WORD_BITS)) & 1) as u8
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, bit: u8) {
        debug_assert!(r < self.rows && c < self.cols);
        let idx = r * self.words_per_row + c / WORD_BITS;
        let m = 1u64 << (c % WORD_BITS);
        if bit != 0 {
            self.data[idx] |= m;
        } else {
            self.data[idx] &= !m;
        }
    }

    pub fn row(&self, r: usize) -> BinaryVector {
        let start = r * self.words_per_row;
        BinaryVector {
            words: self.data[start..start + self.words_per_row].to_vec(),
            len: self.cols,
        }
    }

    fn row_words(&self, r: usize) -> &[u64] {
        let start = r * self.words_per_row;
        &self.data[start..start + self.words_per_row]
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        let wpr = self.words_per_row;
        let (a, b) = (src * wpr, dst * wpr);
        for w in 0..wpr {
            let v = self.data[a + w];
            self.data[b + w] ^= v;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let wpr = self.words_per_row;
        for w in 0..wpr {
            self.data.swap(a * wpr + w, b * wpr + w);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            let x = self.get(r, a);
            let y = self.get(r, b);
            self.set(r, a, y);
            self.set(r, b, x);
        }
    }

    /// Matrix-vector product over GF(2): `result_i = XOR_j m[i][j] * v_j`.
    pub fn mul_vec(&self, v: &BinaryVector) -> Result<BinaryVector, Gf2Error> {
        if v.len() != self.cols {
            return Err(Gf2Error::DimensionMismatch {
                rows: self.rows,
                cols: self.cols,
                vec_len: v.len(),
            });
        }
        let mut out = BinaryVector::zeros(self.rows);
        for r in 0..self.rows {
            let mut acc = 0u64;
            for (a, b) in self.row_words(r).iter().zip(v.words()) {
                acc ^= a & b;
            }
            if acc.count_ones() & 1 == 1 {
                out.set(r, 1);
            }
        }
        Ok(out)
    }

    /// GF(2) row rank.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let piv = (r..m.rows).find(|&i| m.get(i, c) == 1);
            let Some(piv) = piv else { continue };
            m.swap_rows(r, piv);
            for i in 0..m.rows {
                if i != r && m.get(i, c) == 1 {
                    m.xor_row_into(r, i);
                }
            }
            r += 1;
        }
        r
    }

    /// Row-reduces and permutes columns so the leading `rank x rank` block is
    /// the identity. Returns `(reduced, perm, rank)` where `perm[new] = old`
    /// maps a column of the result back to a column of `self`.
    pub fn systematic_form(&self) -> (BinaryMatrix, Vec<usize>, usize) {
        let mut m = self.clone();
        let mut perm: Vec<usize> = (0..m.cols).collect();
        let mut rank = 0;
        for step in 0..m.rows.min(m.cols) {
            // find any 1 in the submatrix at rows >= step, cols >= step
            let mut found = None;
            'outer: for c in step..m.cols {
                for r in step..m.rows {
                    if m.get(r, c) == 1 {
                        found = Some((r, c));
                        break 'outer;
                    }
                }
            }
            let Some((pr, pc)) = found else { break };
            m.swap_rows(step, pr);
            m.swap_cols(step, pc);
            perm.swap(step, pc);
            for i in 0..m.rows {
                if i != step && m.get(i, step) == 1 {
                    m.xor_row_into(step, i);
                }
            }
            rank = step + 1;
        }
        (m, perm, rank)
    }

    /// True if `v` lies in the row space.
    pub fn row_space_contains(&self, v: &BinaryVector) -> bool {
        assert_eq!(v.len(), self.cols);
        let mut m = self.clone();
        let mut v = v.clone();
        let mut r = 0;
        for c in 0..m.cols {
            if r < m.rows {
                if let Some(piv) = (r..m.rows).find(|&i| m.get(i, c) == 1) {
                    m.swap_rows(r, piv);
                    for i in 0..m.rows {
                        if i != r && m.get(i, c) == 1 {
                            m.xor_row_into(r, i);
                        }
                    }
                    if v.get(c) == 1 {
                        let row = m.row(r);
                        v.xor_assign(&row);
                    }
                    r += 1;
                    continue;
                }
            }
            if v.get(c) == 1 {
                return false;
            }
        }
        v.is_zero()
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            for c in 0..self.cols {
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Spec fixture: rows 1110100 / 0111010 / 1101001.
    pub fn h7() -> BinaryMatrix {
        BinaryMatrix::from_rows(&[
            &[1, 1, 1, 0, 1, 0, 0],
            &[0, 1, 1, 1, 0, 1, 0],
            &[1, 1, 0, 1, 0, 0, 1],
        ])
    }

    /// Independent per-bit XOR oracle for the matrix-vector product.
    fn matvec_oracle(m: &BinaryMatrix, v: &BinaryVector) -> BinaryVector {
        BinaryVector::from_fn(m.rows(), |i| {
            let mut acc = 0u8;
            for j in 0..m.cols() {
                acc ^= m.get(i, j) & v.get(j);
            }
            acc
        })
    }

    #[test]
    fn matvec_identity() {
        let m = BinaryMatrix::identity(3);
        let v = BinaryVector::from_bits(&[1, 0, 1]);
        assert_eq!(m.mul_vec(&v).unwrap(), v);
    }

    #[test]
    fn matvec_zero_vector() {
        let m = h7();
        let v = BinaryVector::zeros(7);
        assert!(m.mul_vec(&v).unwrap().is_zero());
    }

    #[test]
    fn matvec_h7_against_oracle() {
        let m = h7();
        let v = BinaryVector::from_bits(&[1, 1, 0, 1, 0, 0, 1]);
        assert_eq!(m.mul_vec(&v).unwrap(), matvec_oracle(&m, &v));
    }

    #[test]
    fn matvec_dimension_mismatch_reports_dims() {
        let m = h7();
        let v = BinaryVector::zeros(5);
        let err = m.mul_vec(&v).unwrap_err();
        assert_eq!(
            err,
            Gf2Error::DimensionMismatch {
                rows: 3,
                cols: 7,
                vec_len: 5
            }
        );
        assert!(err.to_string().contains("3x7"));
    }

    #[test]
    fn rank_identity_and_zero() {
        assert_eq!(BinaryMatrix::identity(6).rank(), 6);
        assert_eq!(BinaryMatrix::zeros(2, 4).rank(), 0);
    }

    #[test]
    fn rank_h7_matches_span_enumeration() {
        // brute force: rank = log2 of the number of distinct row combinations
        let m = h7();
        let mut span = std::collections::HashSet::new();
        for mask in 0..8u32 {
            let mut acc = BinaryVector::zeros(7);
            for r in 0..3 {
                if (mask >> r) & 1 == 1 {
                    acc.xor_assign(&m.row(r));
                }
            }
            span.insert(acc.bits());
        }
        assert_eq!(span.len(), 8);
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn systematic_form_identity() {
        let m = BinaryMatrix::identity(4);
        let (s, perm, rank) = m.systematic_form();
        assert_eq!(s, m);
        assert_eq!(perm, vec![0, 1, 2, 3]);
        assert_eq!(rank, 4);
    }

    #[test]
    fn systematic_form_zero() {
        let m = BinaryMatrix::zeros(2, 4);
        let (s, perm, rank) = m.systematic_form();
        assert_eq!(s, m);
        assert_eq!(perm, vec![0, 1, 2, 3]);
        assert_eq!(rank, 0);
    }

    #[test]
    fn systematic_form_h7() {
        let m = h7();
        let (s, perm, rank) = m.systematic_form();
        assert_eq!(rank, 3);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(s.get(i, j), u8::from(i == j));
            }
        }
        // row space equality in both directions, undoing the column permutation
        let mut unpermuted = BinaryMatrix::zeros(3, 7);
        for r in 0..3 {
            for c in 0..7 {
                unpermuted.set(r, perm[c], s.get(r, c));
            }
        }
        for r in 0..3 {
            assert!(m.row_space_contains(&unpermuted.row(r)));
            assert!(unpermuted.row_space_contains(&m.row(r)));
        }
    }

    #[test]
    fn rank_preserved_by_systematic_form() {
        let m = h7();
        let (s, _, rank) = m.systematic_form();
        assert_eq!(s.rank(), rank);
        assert_eq!(m.rank(), rank);
    }

    prop_compose! {
        fn arb_matrix()(rows in 1usize..6, cols in 1usize..9)
            (rows in Just(rows), cols in Just(cols),
             bits in prop::collection::vec(0u8..2, rows * cols)) -> BinaryMatrix {
            let mut m = BinaryMatrix::zeros(rows, cols);
            for r in 0..rows {
                for c in 0..cols {
                    m.set(r, c, bits[r * cols + c]);
                }
            }
            m
        }
    }

    proptest! {
        #[test]
        fn matvec_is_linear(m in arb_matrix(), seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let a = BinaryVector::from_fn(m.cols(), |_| rng.gen_range(0..2));
            let b = BinaryVector::from_fn(m.cols(), |_| rng.gen_range(0..2));
            let lhs = m.mul_vec(&a.xor(&b)).unwrap();
            let rhs = m.mul_vec(&a).unwrap().xor(&m.mul_vec(&b).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn matvec_matches_bit_loop_oracle(m in arb_matrix(), seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let v = BinaryVector::from_fn(m.cols(), |_| rng.gen_range(0..2));
            prop_assert_eq!(m.mul_vec(&v).unwrap(), matvec_oracle(&m, &v));
        }

        #[test]
        fn systematic_form_preserves_row_space(m in arb_matrix()) {
            let (s, perm, rank) = m.systematic_form();
            prop_assert_eq!(s.rank(), rank);
            prop_assert_eq!(m.rank(), rank);
            let mut unpermuted = BinaryMatrix::zeros(m.rows(), m.cols());
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    unpermuted.set(r, perm[c], s.get(r, c));
                }
            }
            for r in 0..m.rows() {
                prop_assert!(m.row_space_contains(&unpermuted.row(r)));
                prop_assert!(unpermuted.row_space_contains(&m.row(r)));
            }
        }
    }
}
