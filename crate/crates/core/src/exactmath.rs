//! Exact integer and rational linear algebra: arbitrary-precision scalars,
//! dense integer matrices, Smith/Hermite normal forms and kernel lattices.
//!
//! Everything here is exact; there is no floating point anywhere in this crate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Int = BigInt;
pub type Rat = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not invertible over the integers")]
    NotUnimodular,
}

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

pub fn int_vec(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

pub fn rat_vec(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| Rat::from_integer(Int::from(x))).collect()
}

pub fn dot_int(a: &[Int], b: &[Int]) -> Int {
    assert_eq!(a.len(), b.len(), "dot product length mismatch");
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_rat(a: &[Rat], b: &[Rat]) -> Rat {
    assert_eq!(a.len(), b.len(), "dot product length mismatch");
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_int_rat(a: &[Int], b: &[Rat]) -> Rat {
    assert_eq!(a.len(), b.len(), "dot product length mismatch");
    a.iter()
        .zip(b)
        .map(|(x, y)| Rat::from_integer(x.clone()) * y)
        .sum()
}

/// Divides out the gcd of the entries, preserving direction. Zero vectors pass through.
pub fn primitive(v: &[Int]) -> Vec<Int> {
    let mut g = Int::zero();
    for x in v {
        g = g.gcd(x);
    }
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Clears denominators of a rational vector and reduces to a primitive integer vector.
pub fn primitive_of_rat(v: &[Rat]) -> Vec<Int> {
    let mut l = Int::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    let ints: Vec<Int> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    primitive(&ints)
}

pub fn is_zero_vec(v: &[Int]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// Dense integer matrix in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Int>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Int>) -> Self {
        assert_eq!(rows * cols, entries.len(), "entry count must be rows*cols");
        IntMatrix { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix::new(rows, cols, vec![Int::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Int::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Int>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            entries.extend(row.iter().cloned());
        }
        IntMatrix::new(r, c, entries)
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        IntMatrix::from_rows(&rows.iter().map(|r| int_vec(r)).collect::<Vec<_>>())
    }

    pub fn at(&self, i: usize, j: usize) -> &Int {
        &self.entries[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Int {
        &mut self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> Vec<Int> {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Int>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn col_vecs(&self) -> Vec<Vec<Int>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = a * other.at(k, j);
                    *out.at_mut(i, j) += v;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows).map(|i| dot_int(&self.row(i), v)).collect()
    }

    pub fn mul_vec_rat(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| dot_int_rat(&self.row(i), v))
            .collect()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows)
            .all(|i| (0..self.cols).all(|j| i == j || self.at(i, j).is_zero()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            let c = self.cols;
            self.entries.swap(a * c + j, b * c + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            let c = self.cols;
            self.entries.swap(i * c + a, i * c + b);
        }
    }

    // row[a] += q * row[b]
    fn add_row_multiple(&mut self, a: usize, b: usize, q: &Int) {
        for j in 0..self.cols {
            let v = q * self.at(b, j);
            *self.at_mut(a, j) += v;
        }
    }

    fn add_col_multiple(&mut self, a: usize, b: usize, q: &Int) {
        for i in 0..self.rows {
            let v = q * self.at(i, b);
            *self.at_mut(i, a) += v;
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let v = -self.at(a, j).clone();
            *self.at_mut(a, j) = v;
        }
    }

    /// Exact determinant by fraction-free Gaussian elimination (Bareiss).
    pub fn det(&self) -> Int {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Int::one();
        }
        let mut m = self.clone();
        let mut sign = Int::one();
        let mut prev = Int::one();
        for k in 0..n - 1 {
            if m.at(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m.at(i, k).is_zero()) else {
                    return Int::zero();
                };
                m.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / &prev;
                    *m.at_mut(i, j) = v;
                }
                *m.at_mut(i, k) = Int::zero();
            }
            prev = m.at(k, k).clone();
        }
        sign * m.at(n - 1, n - 1).clone()
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<Rat>> = (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| Rat::from_integer(self.at(i, j).clone()))
                    .collect()
            })
            .collect();
        rat_rank(&mut m)
    }

    /// Inverse of a unimodular integer matrix (fails otherwise).
    pub fn inverse_unimodular(&self) -> Result<IntMatrix, MatrixError> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let d = self.det();
        if !d.abs().is_one() {
            return Err(MatrixError::NotUnimodular);
        }
        // rational Gauss-Jordan; result is integral because |det| = 1
        let mut a: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                let mut row: Vec<Rat> = (0..n)
                    .map(|j| Rat::from_integer(self.at(i, j).clone()))
                    .collect();
                let mut aug = vec![Rat::zero(); n];
                aug[i] = Rat::one();
                row.extend(aug);
                row
            })
            .collect();
        for col in 0..n {
            let piv = (col..n)
                .find(|&i| !a[i][col].is_zero())
                .expect("matrix is invertible");
            a.swap(col, piv);
            let p = a[col][col].clone();
            for x in a[col].iter_mut() {
                *x /= p.clone();
            }
            for i in 0..n {
                if i != col && !a[i][col].is_zero() {
                    let f = a[i][col].clone();
                    for j in 0..2 * n {
                        let v = &a[col][j] * &f;
                        a[i][j] -= v;
                    }
                }
            }
        }
        let mut out = IntMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                let v = &a[i][n + j];
                debug_assert!(v.is_integer());
                *out.at_mut(i, j) = v.to_integer();
            }
        }
        Ok(out)
    }
}

pub fn rat_rank(m: &mut [Vec<Rat>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut col = 0;
    while rank < rows && col < cols {
        let Some(p) = (rank..rows).find(|&i| !m[i][col].is_zero()) else {
            col += 1;
            continue;
        };
        m.swap(rank, p);
        let piv = m[rank][col].clone();
        for i in 0..rows {
            if i != rank && !m[i][col].is_zero() {
                let f = &m[i][col] / &piv;
                for j in col..cols {
                    let v = &m[rank][j] * &f;
                    m[i][j] -= v;
                }
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

pub fn rank_of_rat_rows(rows: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    rat_rank(&mut m)
}

/// Smith normal form: U*A*V = D with U, V unimodular and D diagonal with
/// d_i | d_{i+1}. Pivot selection takes the smallest nonzero entry in
/// absolute value to bound coefficient growth.
pub fn smith_normal_form(a: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let mut d = a.clone();
    let mut u = IntMatrix::identity(a.rows);
    let mut v = IntMatrix::identity(a.cols);
    let n = a.rows.min(a.cols);

    for t in 0..n {
        loop {
            // smallest-|entry| pivot in the remaining block
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..d.rows {
                for j in t..d.cols {
                    if !d.at(i, j).is_zero()
                        && pivot
                            .map(|(pi, pj)| d.at(i, j).abs() < d.at(pi, pj).abs())
                            .unwrap_or(true)
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                // remaining block is zero
                let (dd, uu, vv) = (d, u, v);
                return finish_snf(dd, uu, vv);
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..d.rows {
                if !d.at(i, t).is_zero() {
                    let q = -(d.at(i, t) / d.at(t, t));
                    if !q.is_zero() {
                        d.add_row_multiple(i, t, &q);
                        u.add_row_multiple(i, t, &q);
                    }
                    if !d.at(i, t).is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..d.cols {
                if !d.at(t, j).is_zero() {
                    let q = -(d.at(t, j) / d.at(t, t));
                    if !q.is_zero() {
                        d.add_col_multiple(j, t, &q);
                        v.add_col_multiple(j, t, &q);
                    }
                    if !d.at(t, j).is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                continue;
            }
            // force divisibility of the rest of the block by the pivot
            let mut needs_work = false;
            'outer: for i in t + 1..d.rows {
                for j in t + 1..d.cols {
                    if !(d.at(i, j) % d.at(t, t)).is_zero() {
                        d.add_row_multiple(t, i, &Int::one());
                        u.add_row_multiple(t, i, &Int::one());
                        needs_work = true;
                        break 'outer;
                    }
                }
            }
            if !needs_work {
                break;
            }
        }
    }
    finish_snf(d, u, v)
}

fn finish_snf(mut d: IntMatrix, mut u: IntMatrix, mut v: IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let n = d.rows.min(d.cols);
    for i in 0..n {
        if d.at(i, i).is_negative() {
            d.negate_row(i);
            u.negate_row(i);
        }
    }
    // push zero diagonal entries to the end
    for i in 0..n {
        if d.at(i, i).is_zero() {
            if let Some(j) = (i + 1..n).find(|&j| !d.at(j, j).is_zero()) {
                d.swap_rows(i, j);
                u.swap_rows(i, j);
                d.swap_cols(i, j);
                v.swap_cols(i, j);
            }
        }
    }
    (d, u, v)
}

/// Hermite normal form by row operations: U*A = H with U unimodular and H in
/// row-echelon form, pivots positive, entries above a pivot reduced mod it.
pub fn hermite_normal_form(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = a.clone();
    let mut u = IntMatrix::identity(a.rows);
    let mut pivot_row = 0;
    for col in 0..h.cols {
        if pivot_row >= h.rows {
            break;
        }
        // gcd out the column below pivot_row
        loop {
            let mut best: Option<usize> = None;
            for i in pivot_row..h.rows {
                if !h.at(i, col).is_zero()
                    && best
                        .map(|b| h.at(i, col).abs() < h.at(b, col).abs())
                        .unwrap_or(true)
                {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            h.swap_rows(pivot_row, b);
            u.swap_rows(pivot_row, b);
            let mut done = true;
            for i in pivot_row + 1..h.rows {
                if !h.at(i, col).is_zero() {
                    let q = -(h.at(i, col) / h.at(pivot_row, col));
                    if !q.is_zero() {
                        h.add_row_multiple(i, pivot_row, &q);
                        u.add_row_multiple(i, pivot_row, &q);
                    }
                    if !h.at(i, col).is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if h.at(pivot_row, col).is_zero() {
            continue;
        }
        if h.at(pivot_row, col).is_negative() {
            h.negate_row(pivot_row);
            u.negate_row(pivot_row);
        }
        for i in 0..pivot_row {
            let q = -(h.at(i, col).div_floor(h.at(pivot_row, col)));
            if !q.is_zero() {
                h.add_row_multiple(i, pivot_row, &q);
                u.add_row_multiple(i, pivot_row, &q);
            }
        }
        pivot_row += 1;
    }
    (h, u)
}

/// A basis of the saturated lattice {v : A v = 0}, as rows in Hermite form.
pub fn kernel_lattice(a: &IntMatrix) -> Vec<Vec<Int>> {
    let (d, _u, v) = smith_normal_form(a);
    let n = a.cols;
    let r = a.rows.min(a.cols);
    let mut basis: Vec<Vec<Int>> = Vec::new();
    for j in 0..n {
        let diag_zero = j >= r || d.at(j, j).is_zero();
        if diag_zero {
            basis.push(v.col(j));
        }
    }
    if basis.is_empty() {
        return basis;
    }
    let (h, _) = hermite_normal_form(&IntMatrix::from_rows(&basis));
    let mut out: Vec<Vec<Int>> = h
        .row_vecs()
        .into_iter()
        .filter(|r| !is_zero_vec(r))
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn snf_identity() {
        let a = IntMatrix::identity(2);
        let (d, u, v) = smith_normal_form(&a);
        assert_eq!(d, IntMatrix::identity(2));
        assert_eq!(u.mul(&a).mul(&v), d);
        assert!(u.det().abs().is_one());
        assert!(v.det().abs().is_one());
    }

    #[test]
    fn snf_2x2() {
        let a = IntMatrix::from_i64(&[&[2, 4], &[6, 8]]);
        let (d, u, v) = smith_normal_form(&a);
        assert_eq!(u.mul(&a).mul(&v), d);
        assert!(d.is_diagonal());
        assert_eq!(*d.at(0, 0), int(2));
        assert_eq!(*d.at(1, 1), int(4));
        assert!(u.det().abs().is_one());
        assert!(v.det().abs().is_one());
    }

    #[test]
    fn snf_zero() {
        let a = IntMatrix::zero(2, 3);
        let (d, u, v) = smith_normal_form(&a);
        assert_eq!(d, IntMatrix::zero(2, 3));
        assert_eq!(u, IntMatrix::identity(2));
        assert_eq!(v, IntMatrix::identity(3));
    }

    #[test]
    fn snf_divisibility_chain() {
        let a = IntMatrix::from_i64(&[&[2, 1, 0], &[0, 6, 4], &[2, 0, 9]]);
        let (d, u, v) = smith_normal_form(&a);
        assert_eq!(u.mul(&a).mul(&v), d);
        assert!(d.is_diagonal());
        let n = 3;
        for i in 0..n - 1 {
            if !d.at(i + 1, i + 1).is_zero() {
                assert!((d.at(i + 1, i + 1) % d.at(i, i)).is_zero());
            }
        }
    }

    #[test]
    fn kernel_simple() {
        let a = IntMatrix::from_i64(&[&[1, 1]]);
        let k = kernel_lattice(&a);
        assert_eq!(k.len(), 1);
        assert!(is_zero_vec(&a.mul_vec(&k[0])));

        let id = IntMatrix::identity(3);
        assert!(kernel_lattice(&id).is_empty());
    }

    #[test]
    fn kernel_rank_two() {
        let a = IntMatrix::from_i64(&[&[1, 1, 1]]);
        let k = kernel_lattice(&a);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(is_zero_vec(&a.mul_vec(v)));
        }
        // saturation: the 2x2 minors of the basis matrix have gcd 1
        let m = IntMatrix::from_rows(&k);
        let (d, _, _) = smith_normal_form(&m);
        assert!(d.at(0, 0).is_one());
        assert!(d.at(1, 1).is_one());
    }

    #[test]
    fn hnf_examples() {
        let a = IntMatrix::identity(2);
        let (h, _) = hermite_normal_form(&a);
        assert_eq!(h, IntMatrix::identity(2));

        let a = IntMatrix::from_i64(&[&[2, 0], &[0, 3]]);
        let (h, _) = hermite_normal_form(&a);
        assert_eq!(h, a);

        let a = IntMatrix::from_i64(&[&[4, 6], &[2, 2]]);
        let (h, u) = hermite_normal_form(&a);
        assert_eq!(*h.at(0, 0), int(2));
        assert_eq!(u.mul(&a), h);
        assert!(u.det().abs().is_one());
    }

    #[test]
    fn det_and_inverse() {
        let a = IntMatrix::from_i64(&[&[3, 4, 6], &[5, 7, 10], &[8, 10, 15]]);
        assert_eq!(a.det(), int(-1));
        let inv = a.inverse_unimodular().unwrap();
        assert_eq!(a.mul(&inv), IntMatrix::identity(3));
    }

    #[test]
    fn primitive_vectors() {
        assert_eq!(primitive(&int_vec(&[2, 4, -6])), int_vec(&[1, 2, -3]));
        assert_eq!(
            primitive_of_rat(&[rat(6, 5), rat(-1, 2)]),
            int_vec(&[12, -5])
        );
    }
}
