//! Smith normal form over the Laurent ring, which is Euclidean for the
//! degree span once monomial units are normalized out.

use super::laurent::LaurentPoly;
use super::lmatrix::LaurentMatrix;

/// `U·M·V = D` with `U`, `V` invertible (inverses carried along and checked)
/// and `D` diagonal with the divisibility chain `d_1 | d_2 | …`.
#[derive(Clone, Debug)]
pub struct Smith {
    pub u: LaurentMatrix,
    pub u_inv: LaurentMatrix,
    pub d: LaurentMatrix,
    pub v: LaurentMatrix,
    pub v_inv: LaurentMatrix,
}

impl Smith {
    /// Diagonal entries, canonically normalized.
    pub fn diagonal(&self) -> Vec<LaurentPoly> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d[(i, i)].clone()).collect()
    }
}

pub fn laurent_snf(m: &LaurentMatrix) -> Smith {
    let rows = m.rows();
    let cols = m.cols();
    let mut d = m.clone();
    let mut u = LaurentMatrix::identity(rows);
    let mut u_inv = LaurentMatrix::identity(rows);
    let mut v = LaurentMatrix::identity(cols);
    let mut v_inv = LaurentMatrix::identity(cols);

    // Elementary operations, mirrored on the trackers. Row ops act on the
    // left (mirror inverse on u_inv's columns); column ops on the right.
    macro_rules! swap_rows {
        ($a:expr, $b:expr) => {{
            d.swap_rows($a, $b);
            u.swap_rows($a, $b);
            u_inv.swap_cols($a, $b);
        }};
    }
    macro_rules! swap_cols {
        ($a:expr, $b:expr) => {{
            d.swap_cols($a, $b);
            v.swap_cols($a, $b);
            v_inv.swap_rows($a, $b);
        }};
    }
    macro_rules! row_op {
        // row_i += f * row_j
        ($i:expr, $j:expr, $f:expr) => {{
            let f = $f;
            d.row_op($i, $j, &f);
            u.row_op($i, $j, &f);
            u_inv.col_op($j, $i, &f.neg());
        }};
    }
    macro_rules! col_op {
        // col_i += f * col_j
        ($i:expr, $j:expr, $f:expr) => {{
            let f = $f;
            d.col_op($i, $j, &f);
            v.col_op($i, $j, &f);
            v_inv.row_op($j, $i, &f.neg());
        }};
    }

    let k_max = rows.min(cols);
    for k in 0..k_max {
        'pivot: loop {
            // Find a minimal-span nonzero entry in the trailing block.
            let mut pivot: Option<(usize, usize, usize)> = None;
            for i in k..rows {
                for j in k..cols {
                    if let Some(span) = d[(i, j)].span() {
                        if pivot.map_or(true, |(_, _, s)| span < s) {
                            pivot = Some((i, j, span));
                        }
                    }
                }
            }
            let Some((pi, pj, _)) = pivot else {
                // Trailing block is zero: done with the whole matrix.
                break 'pivot;
            };
            swap_rows!(k, pi);
            swap_cols!(k, pj);
            // Clear column k.
            let mut dirty = false;
            for i in k + 1..rows {
                if d[(i, k)].is_zero() {
                    continue;
                }
                let (q, r) = d[(i, k)].div_rem(&d[(k, k)]);
                row_op!(i, k, q.neg());
                if !r.is_zero() {
                    swap_rows!(k, i);
                    dirty = true;
                }
            }
            if dirty {
                continue 'pivot;
            }
            // Clear row k.
            for j in k + 1..cols {
                if d[(k, j)].is_zero() {
                    continue;
                }
                let (q, r) = d[(k, j)].div_rem(&d[(k, k)]);
                col_op!(j, k, q.neg());
                if !r.is_zero() {
                    swap_cols!(k, j);
                    dirty = true;
                }
            }
            if dirty {
                continue 'pivot;
            }
            // Enforce the divisibility chain: the pivot must divide every
            // entry of the trailing block.
            let mut offender = None;
            'scan: for i in k + 1..rows {
                for j in k + 1..cols {
                    if !d[(k, k)].divides(&d[(i, j)]) {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    row_op!(k, i, LaurentPoly::one());
                }
                None => break 'pivot,
            }
        }
        // Normalize the pivot to its canonical associate: d_kk = q·target
        // with q a unit, so scale the row by q⁻¹.
        if !d[(k, k)].is_zero() {
            let target = d[(k, k)].normalize_unit();
            let (q, r) = d[(k, k)].div_rem(&target);
            debug_assert!(r.is_zero() && q.is_unit());
            let inv = q.unit_inverse().unwrap();
            d.scale_row(k, &inv);
            u.scale_row(k, &inv);
            for rr in 0..u_inv.rows() {
                let e = u_inv[(rr, k)].mul(&q);
                u_inv[(rr, k)] = e;
            }
        }
    }
    let s = Smith { u, u_inv, d, v, v_inv };
    debug_assert!(verify_smith(m, &s));
    s
}

/// Exactness check: U·M·V = D, U·U⁻¹ = I, V·V⁻¹ = I, divisibility chain.
pub fn verify_smith(m: &LaurentMatrix, s: &Smith) -> bool {
    if s.u.mul(m).mul(&s.v) != s.d {
        return false;
    }
    if s.u.mul(&s.u_inv) != LaurentMatrix::identity(m.rows()) {
        return false;
    }
    if s.v.mul(&s.v_inv) != LaurentMatrix::identity(m.cols()) {
        return false;
    }
    let diag = s.diagonal();
    for w in diag.windows(2) {
        if !w[0].is_zero() && !w[1].is_zero() && !w[0].divides(&w[1]) {
            return false;
        }
        if w[0].is_zero() && !w[1].is_zero() {
            return false;
        }
    }
    // Off-diagonal zero.
    for i in 0..s.d.rows() {
        for j in 0..s.d.cols() {
            if i != j && !s.d[(i, j)].is_zero() {
                return false;
            }
        }
    }
    true
}

/// Solve `M·x = rhs` over the Laurent ring via Smith normal form.
/// Returns `None` when no solution exists in the ring.
pub fn solve_linear(m: &LaurentMatrix, rhs: &[LaurentPoly]) -> Option<Vec<LaurentPoly>> {
    assert_eq!(rhs.len(), m.rows());
    let s = laurent_snf(m);
    let w = s.u.mul_vec(rhs);
    let mut y = vec![LaurentPoly::zero(); m.cols()];
    let k = m.rows().min(m.cols());
    for i in 0..m.rows() {
        if i < k && !s.d[(i, i)].is_zero() {
            let (q, r) = w[i].div_rem(&s.d[(i, i)]);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !w[i].is_zero() {
            return None;
        }
    }
    Some(s.v.mul_vec(&y))
}

/// Basis of the kernel of `M` over the ring: the columns of V at zero
/// diagonal positions.
pub fn kernel_basis(m: &LaurentMatrix) -> Vec<Vec<LaurentPoly>> {
    let s = laurent_snf(m);
    let k = m.rows().min(m.cols());
    let mut basis = Vec::new();
    for j in 0..m.cols() {
        let zero_diag = j >= k || s.d[(j, j)].is_zero();
        if zero_diag {
            basis.push(s.v.column(j));
        }
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    #[test]
    fn diagonal_is_fixed_point() {
        let m = LaurentMatrix::from_rows(vec![
            vec![lp("t - 1"), lp("0")],
            vec![lp("0"), lp("t^2 - 1")],
        ]);
        let s = laurent_snf(&m);
        assert!(verify_smith(&m, &s));
        assert_eq!(s.diagonal(), vec![lp("t - 1"), lp("t^2 - 1")]);
    }

    #[test]
    fn triangular_example() {
        // Entry gcd t-1 and determinant (t-1)^2 force diag(t-1, t-1).
        let m = LaurentMatrix::from_rows(vec![
            vec![lp("t - 1"), lp("t^2 - 1")],
            vec![lp("0"), lp("t - 1")],
        ]);
        let s = laurent_snf(&m);
        assert!(verify_smith(&m, &s));
        assert_eq!(s.diagonal(), vec![lp("t - 1"), lp("t - 1")]);
    }

    #[test]
    fn triangular_with_jordan_factor() {
        // Here the second invariant factor is an honest square.
        let m = LaurentMatrix::from_rows(vec![
            vec![lp("t - 1"), lp("t - 1")],
            vec![lp("0"), lp("t^2 - 2*t + 1")],
        ]);
        let s = laurent_snf(&m);
        assert!(verify_smith(&m, &s));
        assert_eq!(s.diagonal(), vec![lp("t - 1"), lp("t^2 - 2*t + 1")]);
    }

    #[test]
    fn zero_matrix() {
        let m = LaurentMatrix::zero(2, 3);
        let s = laurent_snf(&m);
        assert!(verify_smith(&m, &s));
        assert!(s.d.is_zero());
    }

    #[test]
    fn unit_entries_collapse() {
        let m = LaurentMatrix::from_rows(vec![
            vec![lp("t^-3"), lp("t - 1")],
            vec![lp("1"), lp("t^5")],
        ]);
        let s = laurent_snf(&m);
        assert!(verify_smith(&m, &s));
        let diag = s.diagonal();
        assert!(diag[0].is_unit());
    }

    #[test]
    fn solve_and_kernel() {
        let m = LaurentMatrix::from_rows(vec![vec![lp("t - 1"), lp("1 - t")]]);
        // (t-1)x - (t-1)y = t^2 - 1 is solvable.
        let sol = solve_linear(&m, &[lp("t^2 - 1")]).unwrap();
        let check = m.mul_vec(&sol);
        assert_eq!(check[0], lp("t^2 - 1"));
        // ... = 1 is not.
        assert!(solve_linear(&m, &[lp("1")]).is_none());
        let ker = kernel_basis(&m);
        assert_eq!(ker.len(), 1);
        let img = m.mul_vec(&ker[0]);
        assert!(img[0].is_zero());
    }

    #[test]
    fn random_small_matrices_verify() {
        let polys = [
            "t - 1", "t + 1", "1", "0", "t^2 - 1", "2*t^-1", "t^2 + t", "3",
        ];
        let mut seed = 7u64;
        let mut next = move || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            (seed % polys.len() as u64) as usize
        };
        for _ in 0..25 {
            let entries: Vec<LaurentPoly> = (0..6).map(|_| lp(polys[next()])).collect();
            let m = LaurentMatrix::new(2, 3, entries);
            let s = laurent_snf(&m);
            assert!(verify_smith(&m, &s));
        }
    }
}
