//! Lifting homomorphisms for inclusions of based free chain complexes over
//! the Laurent ring: an equivariant one-sided inverse j with chain homotopy
//! u, built dimension by dimension through the acyclic range.

use super::laurent::LaurentPoly;
use super::lmatrix::LaurentMatrix;
use super::snf::{kernel_basis, laurent_snf, solve_linear};

/// A chain complex of free modules: `ranks[d]` generators in dimension `d`,
/// with `boundaries[d]: C_d → C_{d−1}` for `d ≥ 1` (so `boundaries[0]` is a
/// placeholder of shape `0 × ranks[0]`).
#[derive(Clone, Debug)]
pub struct LaurentComplex {
    pub ranks: Vec<usize>,
    pub boundaries: Vec<LaurentMatrix>,
}

impl LaurentComplex {
    pub fn new(ranks: Vec<usize>, boundaries: Vec<LaurentMatrix>) -> Self {
        assert_eq!(boundaries.len(), ranks.len());
        assert_eq!(boundaries[0].rows(), 0);
        for d in 1..ranks.len() {
            assert_eq!(boundaries[d].rows(), ranks[d - 1]);
            assert_eq!(boundaries[d].cols(), ranks[d]);
        }
        let cx = LaurentComplex { ranks, boundaries };
        for d in 2..cx.ranks.len() {
            assert!(
                cx.boundaries[d - 1].mul(&cx.boundaries[d]).is_zero(),
                "∂∘∂ ≠ 0 at dimension {d}"
            );
        }
        cx
    }

    pub fn dims(&self) -> usize {
        self.ranks.len()
    }

    pub fn boundary(&self, d: usize) -> &LaurentMatrix {
        &self.boundaries[d]
    }
}

/// An inclusion of based free complexes: the subcomplex is spanned by the
/// listed basis indices in each dimension, with the induced boundary.
#[derive(Clone, Debug)]
pub struct ComplexPair {
    pub total: LaurentComplex,
    /// Per dimension, ascending indices of the subcomplex basis cells.
    pub sub_basis: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LiftError {
    /// H_k of the quotient is nonzero for some k ≤ n.
    NonAcyclicQuotient { dim: usize },
    SubNotClosed { dim: usize },
}

/// The lifting homomorphism data through dimension n:
/// `j[d]: C_d(X) → C_d(K)` and `u[d]: C_d(X) → C_{d+1}(X)` with
/// `j∘i = id` and `i∘j − id = ∂u + u∂`, all exact.
#[derive(Clone, Debug)]
pub struct Lifting {
    pub n: usize,
    pub j: Vec<LaurentMatrix>,
    pub u: Vec<LaurentMatrix>,
}

impl ComplexPair {
    pub fn new(total: LaurentComplex, sub_basis: Vec<Vec<usize>>) -> Result<Self, LiftError> {
        assert_eq!(sub_basis.len(), total.ranks.len());
        let pair = ComplexPair { total, sub_basis };
        // The subcomplex must be closed under the boundary.
        for d in 1..pair.total.dims() {
            for &cell in &pair.sub_basis[d] {
                for i in 0..pair.total.ranks[d - 1] {
                    if !pair.total.boundaries[d][(i, cell)].is_zero()
                        && !pair.sub_basis[d - 1].contains(&i)
                    {
                        return Err(LiftError::SubNotClosed { dim: d });
                    }
                }
            }
        }
        Ok(pair)
    }

    fn quotient_boundary(&self, d: usize) -> LaurentMatrix {
        let rows: Vec<usize> = (0..self.total.ranks[d - 1])
            .filter(|i| !self.sub_basis[d - 1].contains(i))
            .collect();
        let cols: Vec<usize> = (0..self.total.ranks[d])
            .filter(|i| !self.sub_basis[d].contains(i))
            .collect();
        let mut m = LaurentMatrix::zero(rows.len(), cols.len());
        for (ri, &r) in rows.iter().enumerate() {
            for (ci, &c) in cols.iter().enumerate() {
                m[(ri, ci)] = self.total.boundaries[d][(r, c)].clone();
            }
        }
        m
    }

    /// `H_k(total/sub) = 0` for `k ≤ n`, decided by Smith normal form:
    /// every kernel vector of ∂_k must be in the image of ∂_{k+1}.
    pub fn quotient_acyclic_through(&self, n: usize) -> Result<(), LiftError> {
        for k in 0..=n.min(self.total.dims() - 1) {
            let quot_rank_k = self.total.ranks[k] - self.sub_basis[k].len();
            // Kernel of ∂_k on the quotient (k = 0: everything is a cycle).
            let cycles: Vec<Vec<LaurentPoly>> = if k == 0 {
                (0..quot_rank_k)
                    .map(|i| {
                        let mut v = vec![LaurentPoly::zero(); quot_rank_k];
                        v[i] = LaurentPoly::one();
                        v
                    })
                    .collect()
            } else {
                kernel_basis(&self.quotient_boundary(k))
            };
            if cycles.is_empty() {
                continue;
            }
            if k + 1 >= self.total.dims() {
                return Err(LiftError::NonAcyclicQuotient { dim: k });
            }
            let next = self.quotient_boundary(k + 1);
            for z in cycles {
                if solve_linear(&next, &z).is_none() {
                    return Err(LiftError::NonAcyclicQuotient { dim: k });
                }
            }
        }
        Ok(())
    }
}

/// Build j and u through dimension n by the inductive construction: for each
/// total-complex cell e outside the subcomplex, solve
/// `i(j_e) − e − u_{d−1}(∂e) = ∂u_e` over the ring. Both defining identities
/// are then checked exactly as matrix equations.
pub fn lifting_homomorphism(pair: &ComplexPair, n: usize) -> Result<Lifting, LiftError> {
    pair.quotient_acyclic_through(n)?;
    let x = &pair.total;
    let dims = x.dims();
    assert!(n < dims, "lifting range exceeds the complex dimension");
    let mut j: Vec<LaurentMatrix> = Vec::new();
    let mut u: Vec<LaurentMatrix> = Vec::new();
    for d in 0..=n {
        let rank = x.ranks[d];
        let sub = &pair.sub_basis[d];
        let sub_rank = sub.len();
        let next_rank = if d + 1 < dims { x.ranks[d + 1] } else { 0 };
        let mut jd = LaurentMatrix::zero(sub_rank, rank);
        let mut ud = LaurentMatrix::zero(next_rank, rank);
        // Inclusion matrix i_d: rank × sub_rank.
        let mut inc = LaurentMatrix::zero(rank, sub_rank);
        for (c, &cell) in sub.iter().enumerate() {
            inc[(cell, c)] = LaurentPoly::one();
        }
        for e in 0..rank {
            if let Some(pos) = sub.iter().position(|&s| s == e) {
                jd[(pos, e)] = LaurentPoly::one();
                continue;
            }
            // rhs = e + u_{d−1}(∂e)
            let mut rhs = vec![LaurentPoly::zero(); rank];
            rhs[e] = LaurentPoly::one();
            if d >= 1 {
                let de = x.boundaries[d].column(e);
                let ue = u[d - 1].mul_vec(&de);
                for (i, v) in ue.into_iter().enumerate() {
                    rhs[i] = rhs[i].add(&v);
                }
            }
            // Solve [inc | −∂_{d+1}] (j_e; u_e) = rhs.
            let system = if d + 1 < dims {
                let mut negb = x.boundaries[d + 1].clone();
                for i in 0..negb.rows() {
                    for c in 0..negb.cols() {
                        negb[(i, c)] = negb[(i, c)].neg();
                    }
                }
                inc.hcat(&negb)
            } else {
                inc.clone()
            };
            let sol = solve_linear(&system, &rhs)
                .ok_or(LiftError::NonAcyclicQuotient { dim: d })?;
            for c in 0..sub_rank {
                jd[(c, e)] = sol[c].clone();
            }
            for c in 0..next_rank {
                ud[(c, e)] = sol[sub_rank + c].clone();
            }
        }
        j.push(jd);
        u.push(ud);
    }
    let lifting = Lifting { n, j, u };
    assert!(
        verify_lifting(pair, &lifting),
        "lifting identities must hold exactly"
    );
    Ok(lifting)
}

/// Exact check of `j∘i = id` and `i∘j − id = ∂u + u∂` through dimension n.
pub fn verify_lifting(pair: &ComplexPair, l: &Lifting) -> bool {
    let x = &pair.total;
    let dims = x.dims();
    for d in 0..=l.n {
        let rank = x.ranks[d];
        let sub = &pair.sub_basis[d];
        let mut inc = LaurentMatrix::zero(rank, sub.len());
        for (c, &cell) in sub.iter().enumerate() {
            inc[(cell, c)] = LaurentPoly::one();
        }
        // j∘i = id on the subcomplex.
        if l.j[d].mul(&inc) != LaurentMatrix::identity(sub.len()) {
            return false;
        }
        // i∘j − id = ∂_{d+1} u_d + u_{d−1} ∂_d.
        let mut lhs = inc.mul(&l.j[d]);
        let id = LaurentMatrix::identity(rank);
        lhs = lhs.sub(&id);
        let mut rhs = LaurentMatrix::zero(rank, rank);
        if d + 1 < dims {
            rhs = rhs.add(&x.boundaries[d + 1].mul(&l.u[d]));
        }
        if d >= 1 {
            rhs = rhs.add(&l.u[d - 1].mul(&x.boundaries[d]));
        }
        if lhs != rhs {
            return false;
        }
        // u vanishes on the image of the inclusion.
        if !l.u[d].mul(&inc).is_zero() {
            return false;
        }
    }
    true
}

/// Rank of the image of a Laurent matrix (number of nonzero diagonal
/// entries of its Smith form); used by quotient-homology diagnostics.
pub fn matrix_rank(m: &LaurentMatrix) -> usize {
    let s = laurent_snf(m);
    let k = m.rows().min(m.cols());
    (0..k).filter(|&i| !s.d[(i, i)].is_zero()).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    /// Edge collapse: vertices v, w and an edge e with ∂e = w − v; K = {v}.
    fn edge_collapse() -> ComplexPair {
        let cx = LaurentComplex::new(
            vec![2, 1],
            vec![
                LaurentMatrix::zero(0, 2),
                LaurentMatrix::new(2, 1, vec![lp("-1"), lp("1")]),
            ],
        );
        ComplexPair::new(cx, vec![vec![0], vec![]]).unwrap()
    }

    #[test]
    fn edge_collapse_lifting() {
        let pair = edge_collapse();
        let l = lifting_homomorphism(&pair, 1).unwrap();
        // j(w) = v and u(w) = -e.
        assert_eq!(l.j[0][(0, 1)], lp("1"));
        assert_eq!(l.u[0][(0, 1)], lp("-1"));
        assert!(verify_lifting(&pair, &l));
    }

    #[test]
    fn identity_pair_is_trivial() {
        let cx = LaurentComplex::new(
            vec![1, 1],
            vec![
                LaurentMatrix::zero(0, 1),
                LaurentMatrix::new(1, 1, vec![lp("t - 1")]),
            ],
        );
        let pair = ComplexPair::new(cx, vec![vec![0], vec![0]]).unwrap();
        let l = lifting_homomorphism(&pair, 1).unwrap();
        assert_eq!(l.j[0], LaurentMatrix::identity(1));
        assert!(l.u[0].is_zero());
        assert!(l.u[1].is_zero());
    }

    #[test]
    fn tube_pair_fiber_inside() {
        // One n-cell a, one (n+1)-cell c with ∂c = (t−1)a; K = {a}.
        let cx = LaurentComplex::new(
            vec![1, 1],
            vec![
                LaurentMatrix::zero(0, 1),
                LaurentMatrix::new(1, 1, vec![lp("t - 1")]),
            ],
        );
        let pair = ComplexPair::new(cx, vec![vec![0], vec![]]).unwrap();
        let l = lifting_homomorphism(&pair, 0).unwrap();
        assert_eq!(l.j[0], LaurentMatrix::identity(1));
        assert!(l.u[0].is_zero());
        assert!(verify_lifting(&pair, &l));
    }

    #[test]
    fn subdivided_line_lifting() {
        // Two vertex orbits v, w; edges e1: v→w, e2: w→t·v. K = {v} with no
        // edges; the quotient is acyclic in dimension 0 only.
        let cx = LaurentComplex::new(
            vec![2, 2],
            vec![
                LaurentMatrix::zero(0, 2),
                LaurentMatrix::from_rows(vec![
                    vec![lp("-1"), lp("t")],
                    vec![lp("1"), lp("-1")],
                ]),
            ],
        );
        let pair = ComplexPair::new(cx, vec![vec![0], vec![]]).unwrap();
        assert!(pair.quotient_acyclic_through(0).is_ok());
        assert_eq!(
            pair.quotient_acyclic_through(1),
            Err(LiftError::NonAcyclicQuotient { dim: 1 })
        );
        let l = lifting_homomorphism(&pair, 0).unwrap();
        assert!(verify_lifting(&pair, &l));
        // j(w) is a single vertex orbit element: i(j(w)) − w = ∂(u(w)).
    }

    #[test]
    fn non_closed_subcomplex_rejected() {
        let cx = LaurentComplex::new(
            vec![2, 1],
            vec![
                LaurentMatrix::zero(0, 2),
                LaurentMatrix::new(2, 1, vec![lp("-1"), lp("1")]),
            ],
        );
        // Sub contains the edge but not both endpoints.
        assert_eq!(
            ComplexPair::new(cx, vec![vec![0], vec![0]]).unwrap_err(),
            LiftError::SubNotClosed { dim: 1 }
        );
    }
}
