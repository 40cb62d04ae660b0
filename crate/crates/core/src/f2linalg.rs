//! Exact linear algebra over F₂, bit-packed 64 bits to the word.
//!
//! The coboundary matrices this crate produces are tall and thin: the row
//! count is dim Cⁿ⁺¹ = (|G|−1)ⁿ⁺¹ while the column count is dim Cⁿ. All
//! elimination therefore runs over the *columns* (that is, on the transpose),
//! which bounds the work by cols² row-operations of rows/64 words each.
//! Matrices themselves are stored row-major and transposed on demand.
//!
//! Everything is exact; nothing here ever touches floating point. Inputs are
//! never mutated — elimination works on private copies — and all results are
//! deterministic.

use std::fmt;

/// A bit vector over F₂. Trailing bits of the last word are kept zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Vector {
    len: usize,
    words: Vec<u64>,
}

impl fmt::Debug for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Vector[")?;
        for i in 0..self.len.min(128) {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        if self.len > 128 {
            write!(f, "…")?;
        }
        write!(f, "]")
    }
}

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

impl F2Vector {
    pub fn zeros(len: usize) -> Self {
        F2Vector {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = F2Vector::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b & 1 == 1 {
                v.set(i, true);
            }
        }
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn xor_assign(&mut self, other: &F2Vector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Index of the first set bit, if any.
    pub fn leading_bit(&self) -> Option<usize> {
        for (w, &word) in self.words.iter().enumerate() {
            if word != 0 {
                return Some(w * 64 + word.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    pub fn to_bits(&self) -> Vec<u8> {
        (0..self.len).map(|i| u8::from(self.get(i))).collect()
    }
}

/// A row-major bit-packed matrix over F₂.
#[derive(Clone, PartialEq, Eq)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Matrix({}x{})", self.rows, self.cols)
    }
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words_per_row = words_for(cols);
        F2Matrix {
            rows,
            cols,
            words_per_row,
            data: vec![0; rows * words_per_row],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = F2Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        (self.data[r * self.words_per_row + c / 64] >> (c % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let idx = r * self.words_per_row + c / 64;
        let mask = 1u64 << (c % 64);
        if value {
            self.data[idx] |= mask;
        } else {
            self.data[idx] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, r: usize, c: usize) {
        let idx = r * self.words_per_row + c / 64;
        self.data[idx] ^= 1u64 << (c % 64);
    }

    #[inline]
    fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.words_per_row..(r + 1) * self.words_per_row]
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut t = F2Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            let row = self.row_words(r);
            for (w, &word) in row.iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let b = bits.trailing_zeros() as usize;
                    t.set(w * 64 + b, r, true);
                    bits &= bits - 1;
                }
            }
        }
        t
    }

    /// Matrix–vector product m·x over F₂.
    pub fn mul_vec(&self, x: &F2Vector) -> F2Vector {
        assert_eq!(x.len(), self.cols, "dimension mismatch in mul_vec");
        let mut out = F2Vector::zeros(self.rows);
        for r in 0..self.rows {
            let mut acc = 0u64;
            for (a, b) in self.row_words(r).iter().zip(&x.words) {
                acc ^= a & b;
            }
            if acc.count_ones() % 2 == 1 {
                out.set(r, true);
            }
        }
        out
    }

    /// Rank over F₂. The input is untouched; elimination runs on a copy of
    /// the transpose so the work is bounded by cols².
    pub fn rank(&self) -> usize {
        Echelon::new(self).rank()
    }

    /// A basis of `{x : m·x = 0}`. Every returned vector satisfies m·x = 0;
    /// the basis has size cols − rank.
    pub fn kernel_basis(&self) -> Vec<F2Vector> {
        Echelon::new(self).kernel_basis()
    }

    /// Some x with m·x = b, or None when the system is inconsistent. The
    /// returned solution is re-verified by multiplication before return.
    pub fn solve(&self, b: &F2Vector) -> Result<Option<F2Vector>, DimensionMismatch> {
        Echelon::new(self).solve(b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("right-hand side has length {rhs_len}, expected {rows}")]
pub struct DimensionMismatch {
    pub rows: usize,
    pub rhs_len: usize,
}

/// Echelonized transpose of a matrix, reusable across many solves against
/// the same coefficient matrix.
///
/// For m with shape rows × cols we reduce the augmented matrix [mᵀ | I].
/// Each reduced row is a pair (combination of columns of m, which columns
/// went into it); rows whose matrix part vanished span the kernel of m.
pub struct Echelon {
    rows: usize,
    cols: usize,
    /// Reduced rows with a nonzero matrix part, sorted by pivot position.
    /// Each entry is (pivot, matrix part as F2Vector over `rows` bits,
    /// column-combination part over `cols` bits).
    pivots: Vec<(usize, F2Vector, F2Vector)>,
    /// Column combinations that eliminated to zero: the kernel of m.
    kernel: Vec<F2Vector>,
}

impl Echelon {
    pub fn new(m: &F2Matrix) -> Self {
        let t = m.transpose();
        let mut pivots: Vec<(usize, F2Vector, F2Vector)> = Vec::new();
        let mut kernel = Vec::new();
        for c in 0..m.cols {
            let mut vec = F2Vector {
                len: m.rows,
                words: t.row_words(c).to_vec(),
            };
            let mut combo = F2Vector::zeros(m.cols);
            combo.set(c, true);
            // Reduce against existing pivot rows.
            for (p, pvec, pcombo) in &pivots {
                if vec.get(*p) {
                    vec.xor_assign(pvec);
                    combo.xor_assign(pcombo);
                }
            }
            match vec.leading_bit() {
                Some(p) => {
                    // Keep pivot rows sorted by pivot for the solve scan.
                    let pos = pivots.partition_point(|(q, _, _)| *q < p);
                    pivots.insert(pos, (p, vec, combo));
                }
                None => kernel.push(combo),
            }
        }
        Echelon {
            rows: m.rows,
            cols: m.cols,
            pivots,
            kernel,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn kernel_basis(&self) -> Vec<F2Vector> {
        self.kernel.clone()
    }

    pub fn solve(&self, b: &F2Vector) -> Result<Option<F2Vector>, DimensionMismatch> {
        if b.len() != self.rows {
            return Err(DimensionMismatch {
                rows: self.rows,
                rhs_len: b.len(),
            });
        }
        let mut residual = b.clone();
        let mut x = F2Vector::zeros(self.cols);
        for (p, pvec, pcombo) in &self.pivots {
            if residual.get(*p) {
                residual.xor_assign(pvec);
                x.xor_assign(pcombo);
            }
        }
        if residual.is_zero() {
            Ok(Some(x))
        } else {
            Ok(None)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    /// Independent dense boolean eliminator: the oracle for everything
    /// bit-packed. Written first; kept deliberately naive.
    fn naive_rank(m: &[Vec<bool>]) -> usize {
        let mut m: Vec<Vec<bool>> = m.to_vec();
        let rows = m.len();
        if rows == 0 {
            return 0;
        }
        let cols = m[0].len();
        let mut rank = 0;
        for c in 0..cols {
            if let Some(p) = (rank..rows).find(|&r| m[r][c]) {
                m.swap(rank, p);
                for r in 0..rows {
                    if r != rank && m[r][c] {
                        for k in 0..cols {
                            m[r][k] ^= m[rank][k];
                        }
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    fn random_matrix(rng: &mut StdRng, rows: usize, cols: usize) -> (F2Matrix, Vec<Vec<bool>>) {
        let mut m = F2Matrix::zeros(rows, cols);
        let mut dense = vec![vec![false; cols]; rows];
        for r in 0..rows {
            for c in 0..cols {
                if rng.gen_bool(0.5) {
                    m.set(r, c, true);
                    dense[r][c] = true;
                }
            }
        }
        (m, dense)
    }

    #[test]
    fn rank_identity_and_zero() {
        assert_eq!(F2Matrix::identity(3).rank(), 3);
        assert_eq!(F2Matrix::zeros(5, 7).rank(), 0);
    }

    #[test]
    fn rank_matches_naive_oracle() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let rows = rng.gen_range(1..50);
            let cols = rng.gen_range(1..80);
            let (m, dense) = random_matrix(&mut rng, rows, cols);
            assert_eq!(m.rank(), naive_rank(&dense));
        }
    }

    #[test]
    fn kernel_identity_empty_zero_full() {
        assert!(F2Matrix::identity(4).kernel_basis().is_empty());
        let basis = F2Matrix::zeros(4, 4).kernel_basis();
        assert_eq!(basis.len(), 4);
        // Any basis is fine; check span via rank of the stacked vectors.
        let mut stacked = F2Matrix::zeros(4, 4);
        for (i, v) in basis.iter().enumerate() {
            for j in v.iter_ones() {
                stacked.set(i, j, true);
            }
        }
        assert_eq!(stacked.rank(), 4);
    }

    #[test]
    fn kernel_vectors_annihilate_and_count() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..100 {
            let rows = rng.gen_range(1..40);
            let cols = rng.gen_range(1..40);
            let (m, _) = random_matrix(&mut rng, rows, cols);
            let basis = m.kernel_basis();
            assert_eq!(basis.len(), cols - m.rank());
            for v in &basis {
                assert!(m.mul_vec(v).is_zero());
            }
        }
    }

    #[test]
    fn solve_round_trip() {
        let mut rng = StdRng::seed_from_u64(13);
        for _ in 0..200 {
            let rows = rng.gen_range(1..50);
            let cols = rng.gen_range(1..50);
            let (m, _) = random_matrix(&mut rng, rows, cols);
            // Construct a solvable system.
            let mut x0 = F2Vector::zeros(cols);
            for c in 0..cols {
                if rng.gen_bool(0.5) {
                    x0.set(c, true);
                }
            }
            let b = m.mul_vec(&x0);
            let x = m.solve(&b).unwrap().expect("constructed system is solvable");
            assert_eq!(m.mul_vec(&x), b);
        }
    }

    #[test]
    fn solve_detects_inconsistency() {
        // Zero matrix, nonzero rhs.
        let m = F2Matrix::zeros(3, 3);
        let mut b = F2Vector::zeros(3);
        b.set(1, true);
        assert!(m.solve(&b).unwrap().is_none());

        // Identity: solution is b itself.
        let id = F2Matrix::identity(3);
        assert_eq!(id.solve(&b).unwrap().unwrap(), b);
    }

    #[test]
    fn inconsistent_means_rank_jump() {
        let mut rng = StdRng::seed_from_u64(17);
        let mut seen_inconsistent = 0;
        for _ in 0..200 {
            let rows = rng.gen_range(2..30);
            let cols = rng.gen_range(1..20);
            let (m, dense) = random_matrix(&mut rng, rows, cols);
            let mut b = F2Vector::zeros(rows);
            for r in 0..rows {
                if rng.gen_bool(0.5) {
                    b.set(r, true);
                }
            }
            let solved = m.solve(&b).unwrap();
            let mut augmented = dense.clone();
            for r in 0..rows {
                augmented[r].push(b.get(r));
            }
            if solved.is_none() {
                seen_inconsistent += 1;
                assert_eq!(naive_rank(&augmented), naive_rank(&dense) + 1);
            } else {
                assert_eq!(naive_rank(&augmented), naive_rank(&dense));
            }
        }
        assert!(seen_inconsistent > 10);
    }

    #[test]
    fn solve_rejects_bad_dimension() {
        let m = F2Matrix::zeros(3, 3);
        let b = F2Vector::zeros(4);
        assert!(m.solve(&b).is_err());
    }
}
