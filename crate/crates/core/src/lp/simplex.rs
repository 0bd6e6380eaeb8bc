//! Dense exact-rational simplex, two-phase, with Bland's anti-cycling rule.
//!
//! Semantics are fixed as: maximize `c·x` subject to `Ax ≤ b`, `x ≥ 0`.
//! Optimal results carry both certificates and are checked exactly before
//! being returned: primal feasibility, dual feasibility, and equality of the
//! two objective values as rationals.

use crate::{QMatrix, Rat};
use num_traits::Zero;

/// `maximize c·x subject to A x ≤ b, x ≥ 0`.
#[derive(Clone, Debug)]
pub struct StandardLP {
    pub a: QMatrix,
    pub b: Vec<Rat>,
    pub c: Vec<Rat>,
}

impl StandardLP {
    pub fn new(a: QMatrix, b: Vec<Rat>, c: Vec<Rat>) -> Self {
        assert_eq!(a.rows(), b.len(), "b length must match row count");
        assert_eq!(a.cols(), c.len(), "c length must match column count");
        StandardLP { a, b, c }
    }

    pub fn num_constraints(&self) -> usize {
        self.a.rows()
    }

    pub fn num_vars(&self) -> usize {
        self.a.cols()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LPStatus {
    Optimal,
    Unbounded,
    Infeasible,
}

/// Solution with certificates. When `status == Optimal`,
/// `c·primal = optimum = b·dual` exactly, `primal` is feasible, and `dual`
/// is feasible for the dual program.
#[derive(Clone, Debug)]
pub struct LPResult {
    pub status: LPStatus,
    pub optimum: Option<Rat>,
    pub primal: Vec<Rat>,
    pub dual: Vec<Rat>,
}

/// The dual in standard form: `min b·y s.t. Aᵀy ≥ c, y ≥ 0`, expressed as
/// `max (−b)·y s.t. (−Aᵀ)y ≤ −c, y ≥ 0`. Its optimum is the negation of the
/// dual objective value.
pub fn dual_of(lp: &StandardLP) -> StandardLP {
    let at = lp.a.transpose();
    let m = at.rows();
    let n = at.cols();
    let mut neg = QMatrix::zero(m, n);
    for i in 0..m {
        for j in 0..n {
            neg[(i, j)] = -at[(i, j)].clone();
        }
    }
    StandardLP::new(
        neg,
        lp.c.iter().map(|x| -x.clone()).collect(),
        lp.b.iter().map(|x| -x.clone()).collect(),
    )
}

struct Tableau {
    /// m rows of n_cols coefficients plus rhs at index n_cols.
    rows: Vec<Vec<Rat>>,
    /// Objective row: reduced costs, with the current objective value
    /// (negated) at index n_cols.
    obj: Vec<Rat>,
    basis: Vec<usize>,
    n_cols: usize,
    banned: Vec<bool>,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let inv = Rat::from_integer(1.into()) / self.rows[row][col].clone();
        for v in self.rows[row].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        let pivot_row = self.rows[row].clone();
        for (i, r) in self.rows.iter_mut().enumerate() {
            if i == row || r[col].is_zero() {
                continue;
            }
            let f = r[col].clone();
            for (v, p) in r.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v = v.clone() - f.clone() * p.clone();
                }
            }
        }
        if !self.obj[col].is_zero() {
            let f = self.obj[col].clone();
            for (v, p) in self.obj.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v = v.clone() - f.clone() * p.clone();
                }
            }
        }
        self.basis[row] = col;
    }

    /// One pivot. Entering column: under Bland's rule the lowest-index
    /// column with negative reduced cost, otherwise the most negative one.
    /// Leaving row: minimum ratio, ties broken by lowest basis index.
    /// Returns false at optimality.
    fn step(&mut self, bland: bool) -> Result<bool, LPStatus> {
        let col = if bland {
            (0..self.n_cols).find(|&j| !self.banned[j] && self.obj[j] < Rat::zero())
        } else {
            let mut best: Option<usize> = None;
            for j in 0..self.n_cols {
                if !self.banned[j] && self.obj[j] < Rat::zero() {
                    best = match best {
                        None => Some(j),
                        Some(b) if self.obj[j] < self.obj[b] => Some(j),
                        keep => keep,
                    };
                }
            }
            best
        };
        let Some(col) = col else {
            return Ok(false);
        };
        let mut best: Option<(Rat, usize, usize)> = None; // (ratio, basis idx, row)
        for i in 0..self.rows.len() {
            let coefficient = &self.rows[i][col];
            if *coefficient > Rat::zero() {
                let ratio = self.rows[i][self.n_cols].clone() / coefficient.clone();
                let candidate = (ratio, self.basis[i], i);
                best = match best {
                    None => Some(candidate),
                    Some(cur) => {
                        if candidate.0 < cur.0 || (candidate.0 == cur.0 && candidate.1 < cur.1) {
                            Some(candidate)
                        } else {
                            Some(cur)
                        }
                    }
                };
            }
        }
        match best {
            None => Err(LPStatus::Unbounded),
            Some((_, _, row)) => {
                self.pivot(row, col);
                Ok(true)
            }
        }
    }

    /// Dantzig pivoting with a Bland fallback: after a streak of degenerate
    /// pivots we switch to Bland's rule and keep it until the objective
    /// strictly improves. Bland alone terminates from any dictionary, so the
    /// hybrid terminates too.
    fn run(&mut self) -> Result<(), LPStatus> {
        const DEGENERATE_STREAK: usize = 16;
        let mut streak = 0usize;
        let mut bland = false;
        loop {
            let before = self.obj[self.n_cols].clone();
            match self.step(bland) {
                Ok(false) => return Ok(()),
                Err(s) => return Err(s),
                Ok(true) => {
                    if self.obj[self.n_cols] == before {
                        streak += 1;
                        if streak >= DEGENERATE_STREAK {
                            bland = true;
                        }
                    } else {
                        streak = 0;
                        bland = false;
                    }
                }
            }
        }
    }
}

/// Exact simplex solve with Bland's rule and two-phase initialization.
pub fn simplex_solve(lp: &StandardLP) -> LPResult {
    let m = lp.num_constraints();
    let n = lp.num_vars();
    // Columns: structural 0..n, auxiliary x0 at n, slacks n+1..n+1+m.
    let aux = n;
    let n_cols = n + 1 + m;
    let mut rows = Vec::with_capacity(m);
    for i in 0..m {
        let mut r = vec![Rat::zero(); n_cols + 1];
        for j in 0..n {
            r[j] = lp.a[(i, j)].clone();
        }
        r[aux] = -Rat::from_integer(1.into());
        r[n + 1 + i] = Rat::from_integer(1.into());
        r[n_cols] = lp.b[i].clone();
        rows.push(r);
    }
    let basis: Vec<usize> = (0..m).map(|i| n + 1 + i).collect();
    let mut banned = vec![false; n_cols];

    let needs_phase1 = lp.b.iter().any(|bi| *bi < Rat::zero());
    let mut t = Tableau {
        rows,
        obj: vec![Rat::zero(); n_cols + 1],
        basis,
        n_cols,
        banned: banned.clone(),
    };

    if needs_phase1 {
        // Phase 1: maximize -x0. Reduced-cost row for c = -e_aux is +1 there.
        t.obj[aux] = Rat::from_integer(1.into());
        // Special pivot making the dictionary feasible: enter x0, leave the
        // most negative row.
        let mut worst = 0usize;
        for i in 1..m {
            if t.rows[i][n_cols] < t.rows[worst][n_cols] {
                worst = i;
            }
        }
        t.pivot(worst, aux);
        match t.run() {
            Ok(()) => {}
            Err(_) => unreachable!("phase-1 objective is bounded by zero"),
        }
        // Optimal phase-1 value is -obj[rhs]; infeasible if x0 > 0.
        if !t.obj[n_cols].is_zero() {
            return LPResult {
                status: LPStatus::Infeasible,
                optimum: None,
                primal: Vec::new(),
                dual: Vec::new(),
            };
        }
        // Drive x0 out of the basis if it sits there at level zero.
        if let Some(r0) = t.basis.iter().position(|&b| b == aux) {
            if let Some(c0) = (0..n_cols).find(|&j| j != aux && !t.rows[r0][j].is_zero()) {
                t.pivot(r0, c0);
            }
            // An all-zero row means the constraint was redundant; x0 stays
            // basic at zero and is never selected again.
        }
    }
    t.banned[aux] = true;
    banned[aux] = true;

    // Install the phase-2 objective: reduced costs -c + sum over basic rows.
    let mut obj = vec![Rat::zero(); n_cols + 1];
    for j in 0..n {
        obj[j] = -lp.c[j].clone();
    }
    for (i, &bi) in t.basis.iter().enumerate() {
        if bi < n && !lp.c[bi].is_zero() {
            let f = lp.c[bi].clone();
            let row = t.rows[i].clone();
            for (v, p) in obj.iter_mut().zip(&row) {
                if !p.is_zero() {
                    *v = v.clone() + f.clone() * p.clone();
                }
            }
        }
    }
    t.obj = obj;

    match t.run() {
        Err(status) => LPResult {
            status,
            optimum: None,
            primal: Vec::new(),
            dual: Vec::new(),
        },
        Ok(()) => {
            let mut primal = vec![Rat::zero(); n];
            for (i, &bi) in t.basis.iter().enumerate() {
                if bi < n {
                    primal[bi] = t.rows[i][n_cols].clone();
                }
            }
            let dual: Vec<Rat> = (0..m).map(|i| t.obj[n + 1 + i].clone()).collect();
            let optimum = t.obj[n_cols].clone();
            let result = LPResult {
                status: LPStatus::Optimal,
                optimum: Some(optimum),
                primal,
                dual,
            };
            debug_assert!(verify_certificates(lp, &result));
            result
        }
    }
}

/// Exact certificate check: primal feasible, dual feasible, objectives equal.
pub fn verify_certificates(lp: &StandardLP, r: &LPResult) -> bool {
    if r.status != LPStatus::Optimal {
        return true;
    }
    let opt = r.optimum.as_ref().unwrap();
    let ax = lp.a.mul_vec(&r.primal);
    for (axi, bi) in ax.iter().zip(&lp.b) {
        if axi > bi {
            return false;
        }
    }
    if r.primal.iter().any(|x| *x < Rat::zero()) {
        return false;
    }
    if r.dual.iter().any(|y| *y < Rat::zero()) {
        return false;
    }
    let aty = lp.a.transpose().mul_vec(&r.dual);
    for (ayj, cj) in aty.iter().zip(&lp.c) {
        if ayj < cj {
            return false;
        }
    }
    let cx: Rat = lp
        .c
        .iter()
        .zip(&r.primal)
        .map(|(a, b)| a.clone() * b.clone())
        .sum();
    let by: Rat = lp
        .b
        .iter()
        .zip(&r.dual)
        .map(|(a, b)| a.clone() * b.clone())
        .sum();
    cx == *opt && by == *opt
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, QMatrix};

    fn lp1() -> StandardLP {
        // max x s.t. x <= 3
        StandardLP::new(QMatrix::new(1, 1, vec![rat(1)]), vec![rat(3)], vec![rat(1)])
    }

    #[test]
    fn simple_bounded() {
        let r = simplex_solve(&lp1());
        assert_eq!(r.status, LPStatus::Optimal);
        assert_eq!(r.optimum, Some(rat(3)));
        assert!(verify_certificates(&lp1(), &r));
    }

    #[test]
    fn infeasible_detected() {
        // max x s.t. -x <= -1, x <= 0
        let lp = StandardLP::new(
            QMatrix::new(2, 1, vec![rat(-1), rat(1)]),
            vec![rat(-1), rat(0)],
            vec![rat(1)],
        );
        assert_eq!(simplex_solve(&lp).status, LPStatus::Infeasible);
    }

    #[test]
    fn unbounded_detected() {
        // max x s.t. -x <= 0
        let lp = StandardLP::new(QMatrix::new(1, 1, vec![rat(-1)]), vec![rat(0)], vec![rat(1)]);
        assert_eq!(simplex_solve(&lp).status, LPStatus::Unbounded);
    }

    #[test]
    fn dual_of_simple() {
        // dual of (max x s.t. x <= 3) is min 3y s.t. y >= 1: optimum 3.
        let d = dual_of(&lp1());
        let r = simplex_solve(&d);
        assert_eq!(r.optimum, Some(rat(-3)));
        // Double dual recovers the primal optimum.
        let dd = dual_of(&d);
        assert_eq!(simplex_solve(&dd).optimum, Some(rat(3)));
    }

    #[test]
    fn degenerate_instance_terminates() {
        // A degenerate LP that cycles under naive pivoting.
        let lp = StandardLP::new(
            QMatrix::from_rows(vec![
                vec![rat(1), rat(-11), rat(-5), rat(18)],
                vec![rat(1), rat(-3), rat(-1), rat(2)],
                vec![rat(1), rat(0), rat(0), rat(0)],
            ]),
            vec![rat(0), rat(0), rat(1)],
            vec![rat(10), rat(-57), rat(-9), rat(-24)],
        );
        let r = simplex_solve(&lp);
        assert_eq!(r.status, LPStatus::Optimal);
        assert!(verify_certificates(&lp, &r));
    }

    #[test]
    fn equality_encoded_as_pair() {
        // max x+y s.t. x+y <= 2, -(x+y) <= -2 (i.e. x+y = 2)
        let lp = StandardLP::new(
            QMatrix::from_rows(vec![vec![rat(1), rat(1)], vec![rat(-1), rat(-1)]]),
            vec![rat(2), rat(-2)],
            vec![rat(1), rat(1)],
        );
        let r = simplex_solve(&lp);
        assert_eq!(r.status, LPStatus::Optimal);
        assert_eq!(r.optimum, Some(rat(2)));
    }
}
