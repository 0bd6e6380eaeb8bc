//! Dense matrices over a generic scalar, with the exact operations the rest
//! of the crate needs: arithmetic, solving, inversion, determinant,
//! characteristic and minimal polynomials.

use crate::poly::Poly;
use crate::scalar::Scalar;
use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        Matrix { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c));
        Matrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        acc = acc + self[(i, j)].clone() * v[j].clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn scale(&self, c: &T) -> Self {
        let entries = self.entries.iter().map(|e| e.clone() * c.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, entries }
    }

    /// Gaussian elimination returning `(rank, solution)` for `self * x = b`,
    /// or `None` when the system is inconsistent. When the system is
    /// underdetermined the free variables are set to zero.
    pub fn solve(&self, b: &[T]) -> Option<Vec<T>> {
        assert_eq!(b.len(), self.rows);
        let mut a = self.clone();
        let mut rhs = b.to_vec();
        let mut pivot_col_of_row = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            let Some(p) = (r..self.rows).find(|&i| !a[(i, c)].is_zero()) else {
                continue;
            };
            a.swap_rows(r, p);
            rhs.swap(r, p);
            let inv = T::one() / a[(r, c)].clone();
            for j in c..self.cols {
                a[(r, j)] = a[(r, j)].clone() * inv.clone();
            }
            rhs[r] = rhs[r].clone() * inv;
            for i in 0..self.rows {
                if i != r && !a[(i, c)].is_zero() {
                    let f = a[(i, c)].clone();
                    for j in c..self.cols {
                        a[(i, j)] = a[(i, j)].clone() - f.clone() * a[(r, j)].clone();
                    }
                    rhs[i] = rhs[i].clone() - f * rhs[r].clone();
                }
            }
            pivot_col_of_row.push(c);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        for i in r..self.rows {
            if !rhs[i].is_zero() {
                return None;
            }
        }
        let mut x = vec![T::zero(); self.cols];
        for (row, &col) in pivot_col_of_row.iter().enumerate() {
            x[col] = rhs[row].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for c in 0..n {
            let p = (c..n).find(|&i| !a[(i, c)].is_zero())?;
            a.swap_rows(c, p);
            inv.swap_rows(c, p);
            let f = T::one() / a[(c, c)].clone();
            for j in 0..n {
                a[(c, j)] = a[(c, j)].clone() * f.clone();
                inv[(c, j)] = inv[(c, j)].clone() * f.clone();
            }
            for i in 0..n {
                if i != c && !a[(i, c)].is_zero() {
                    let f = a[(i, c)].clone();
                    for j in 0..n {
                        a[(i, j)] = a[(i, j)].clone() - f.clone() * a[(c, j)].clone();
                        inv[(i, j)] = inv[(i, j)].clone() - f.clone() * inv[(c, j)].clone();
                    }
                }
            }
        }
        Some(inv)
    }

    pub fn determinant(&self) -> T {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut det = T::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !a[(i, c)].is_zero()) else {
                return T::zero();
            };
            if p != c {
                a.swap_rows(c, p);
                det = det.neg();
            }
            det = det * a[(c, c)].clone();
            let f = T::one() / a[(c, c)].clone();
            for i in c + 1..n {
                if !a[(i, c)].is_zero() {
                    let g = a[(i, c)].clone() * f.clone();
                    for j in c..n {
                        a[(i, j)] = a[(i, j)].clone() - g.clone() * a[(c, j)].clone();
                    }
                }
            }
        }
        det
    }

    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut r = 0usize;
        for c in 0..self.cols {
            let Some(p) = (r..self.rows).find(|&i| !a[(i, c)].is_zero()) else {
                continue;
            };
            a.swap_rows(r, p);
            let f = T::one() / a[(r, c)].clone();
            for i in r + 1..self.rows {
                if !a[(i, c)].is_zero() {
                    let g = a[(i, c)].clone() * f.clone();
                    for j in c..self.cols {
                        a[(i, j)] = a[(i, j)].clone() - g.clone() * a[(r, j)].clone();
                    }
                }
            }
            r += 1;
            if r == self.rows {
                break;
            }
        }
        r
    }

    /// Basis of the right null space (columns `x` with `self * x = 0`).
    pub fn null_space(&self) -> Vec<Vec<T>> {
        let mut a = self.clone();
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            let Some(p) = (r..self.rows).find(|&i| !a[(i, c)].is_zero()) else {
                continue;
            };
            a.swap_rows(r, p);
            let inv = T::one() / a[(r, c)].clone();
            for j in 0..self.cols {
                a[(r, j)] = a[(r, j)].clone() * inv.clone();
            }
            for i in 0..self.rows {
                if i != r && !a[(i, c)].is_zero() {
                    let f = a[(i, c)].clone();
                    for j in 0..self.cols {
                        a[(i, j)] = a[(i, j)].clone() - f.clone() * a[(r, j)].clone();
                    }
                }
            }
            pivots.push((r, c));
            r += 1;
            if r == self.rows {
                break;
            }
        }
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![T::zero(); self.cols];
            v[free] = T::one();
            for &(row, col) in &pivots {
                v[col] = a[(row, free)].clone().neg();
            }
            basis.push(v);
        }
        basis
    }

    /// Characteristic polynomial by the Faddeev–LeVerrier recursion.
    pub fn char_poly(&self) -> Poly<T> {
        assert!(self.is_square());
        let n = self.rows;
        let mut coeffs = vec![T::zero(); n + 1];
        coeffs[n] = T::one();
        let mut m = Self::identity(n);
        let mut acc = T::one();
        for k in 1..=n {
            m = self * &m;
            let tr = m.trace();
            let mut kk = T::zero();
            for _ in 0..k {
                kk = kk + T::one();
            }
            let c = tr.neg() / kk;
            coeffs[n - k] = c.clone();
            for i in 0..n {
                m[(i, i)] = m[(i, i)].clone() + c.clone();
            }
            acc = acc * T::one();
        }
        Poly::new(coeffs)
    }

    pub fn trace(&self) -> T {
        assert!(self.is_square());
        let mut t = T::zero();
        for i in 0..self.rows {
            t = t + self[(i, i)].clone();
        }
        t
    }

    /// Monic generator of the annihilator ideal; divides the characteristic
    /// polynomial. Computed by Krylov chains at each standard basis vector.
    pub fn minimal_polynomial(&self) -> Poly<T> {
        assert!(self.is_square(), "minimal_polynomial: non-square input");
        let n = self.rows;
        let mut result = Poly::one();
        for start in 0..n {
            let mut v = vec![T::zero(); n];
            v[start] = T::one();
            // Krylov chain v, Mv, M^2 v, ... until dependence.
            let mut chain: Vec<Vec<T>> = vec![v.clone()];
            let ann = loop {
                let last = chain.last().unwrap();
                let next = self.mul_vec(last);
                // Solve chain^T * c = next to find dependence.
                let cols = chain.len();
                let mut sys = Matrix::zero(n, cols);
                for (j, w) in chain.iter().enumerate() {
                    for i in 0..n {
                        sys[(i, j)] = w[i].clone();
                    }
                }
                if let Some(c) = sys.solve(&next) {
                    // next = sum c_j M^j v  =>  annihilator x^cols - sum c_j x^j.
                    let mut coeffs = vec![T::zero(); cols + 1];
                    for (j, cj) in c.into_iter().enumerate() {
                        coeffs[j] = cj.neg();
                    }
                    coeffs[cols] = T::one();
                    break Poly::new(coeffs);
                }
                chain.push(next);
            };
            result = result.lcm(&ann);
            if result.degree() == Some(n) {
                break;
            }
        }
        result.monic()
    }

    /// Evaluate a polynomial at this matrix.
    pub fn eval_poly(&self, p: &Poly<T>) -> Self {
        assert!(self.is_square());
        let n = self.rows;
        let mut acc = Self::zero(n, n);
        for c in p.coeffs().iter().rev() {
            acc = &(&acc * self) + &Self::identity(n).scale(c);
        }
        acc
    }

    /// Integer matrix power; negative exponents require invertibility.
    pub fn pow_i64(&self, e: i64) -> Self {
        assert!(self.is_square());
        if e < 0 {
            return self
                .inverse()
                .expect("pow_i64: negative power of a singular matrix")
                .pow_i64(-e);
        }
        let mut result = Self::identity(self.rows);
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        result
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.entries[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.entries[i * self.cols + j]
    }
}

impl<T: Scalar> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Matrix { rows: self.rows, cols: self.cols, entries }
    }
}

impl<T: Scalar> Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        Matrix { rows: self.rows, cols: self.cols, entries }
    }
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Matrix::<T>::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    if rhs[(k, j)].is_zero() {
                        continue;
                    }
                    out[(i, j)] = out[(i, j)].clone() + a.clone() * rhs[(k, j)].clone();
                }
            }
        }
        out
    }
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self[(i, j)])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use crate::{rat, ratio, QMatrix};

    fn rotation() -> QMatrix {
        QMatrix::from_rows(vec![
            vec![ratio(3, 5), ratio(-4, 5)],
            vec![ratio(4, 5), ratio(3, 5)],
        ])
    }

    #[test]
    fn minimal_polynomial_identity() {
        let m = QMatrix::identity(2);
        let p = m.minimal_polynomial();
        // x - 1
        assert_eq!(p.coeffs(), &[rat(-1), rat(1)]);
    }

    #[test]
    fn minimal_polynomial_rotation() {
        let p = rotation().minimal_polynomial();
        // x^2 - (6/5)x + 1, checked by substituting back.
        assert_eq!(p.coeffs(), &[rat(1), ratio(-6, 5), rat(1)]);
        let z = rotation().eval_poly(&p);
        assert_eq!(z, QMatrix::zero(2, 2));
        assert!(p.divides(&rotation().char_poly()));
    }

    #[test]
    fn minimal_polynomial_block_jordan() {
        // B = [[A, 0], [I, A]] with A the rotation: min poly (x^2-(6/5)x+1)^2.
        let a = rotation();
        let mut b = QMatrix::zero(4, 4);
        for i in 0..2 {
            for j in 0..2 {
                b[(i, j)] = a[(i, j)].clone();
                b[(i + 2, j + 2)] = a[(i, j)].clone();
            }
            b[(i + 2, i)] = rat(1);
        }
        let p = b.minimal_polynomial();
        let base = crate::QPoly::new(vec![rat(1), ratio(-6, 5), rat(1)]);
        let expect = base.mul(&base).monic();
        assert_eq!(p, expect);
        assert_eq!(b.eval_poly(&p), QMatrix::zero(4, 4));
    }

    #[test]
    fn solve_and_inverse() {
        let m = QMatrix::from_rows(vec![vec![rat(2), rat(1)], vec![rat(1), rat(3)]]);
        let x = m.solve(&[rat(5), rat(10)]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![rat(5), rat(10)]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, QMatrix::identity(2));
        assert_eq!(m.determinant(), rat(5));
    }

    #[test]
    fn inconsistent_system_returns_none() {
        let m = QMatrix::from_rows(vec![vec![rat(1), rat(1)], vec![rat(2), rat(2)]]);
        assert!(m.solve(&[rat(1), rat(3)]).is_none());
    }

    #[test]
    fn random_minimal_polynomial_annihilates() {
        // Deterministic pseudo-random 4x4 matrices.
        let mut seed = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            (seed % 11) as i64 - 5
        };
        for _ in 0..10 {
            let m = QMatrix::new(4, 4, (0..16).map(|_| rat(next())).collect());
            let p = m.minimal_polynomial();
            assert_eq!(m.eval_poly(&p), QMatrix::zero(4, 4));
            assert!(p.divides(&m.char_poly()));
        }
    }
}
