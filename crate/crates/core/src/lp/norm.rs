//! Polyhedral norms `N(v) = max_ℓ c(ℓ)·v` with exact dual-norm evaluation.

use super::simplex::{simplex_solve, LPStatus, StandardLP};
use crate::{QMatrix, Rat};
use num_traits::{One, Zero};

/// A (perhaps asymmetric) polyhedral norm on F^r, given by its supporting
/// functionals. Definiteness — `max_ℓ c(ℓ)·v > 0` for all `v ≠ 0` — is
/// verified by LP at construction; seminorms are rejected.
#[derive(Clone, Debug)]
pub struct PolyhedralNorm {
    functionals: Vec<Vec<Rat>>,
    dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormError {
    Empty,
    MixedDimensions,
    NotDefinite,
}

impl PolyhedralNorm {
    pub fn new(functionals: Vec<Vec<Rat>>) -> Result<Self, NormError> {
        let dim = functionals.first().ok_or(NormError::Empty)?.len();
        if functionals.iter().any(|f| f.len() != dim) {
            return Err(NormError::MixedDimensions);
        }
        let norm = PolyhedralNorm { functionals, dim };
        if !norm.is_definite() {
            return Err(NormError::NotDefinite);
        }
        Ok(norm)
    }

    /// The absolute value on F^1.
    pub fn abs() -> Self {
        PolyhedralNorm {
            functionals: vec![vec![Rat::one()], vec![-Rat::one()]],
            dim: 1,
        }
    }

    /// `|x| / w` on F^1 for a positive weight `w`; its dual is `w·|y|`.
    pub fn abs_weighted(w: &Rat) -> Self {
        assert!(*w > Rat::zero());
        let inv = Rat::one() / w.clone();
        PolyhedralNorm {
            functionals: vec![vec![inv.clone()], vec![-inv]],
            dim: 1,
        }
    }

    /// The ℓ¹ norm on F^r: functionals are all sign patterns.
    pub fn l1(r: usize) -> Self {
        assert!(r >= 1);
        let mut functionals = Vec::with_capacity(1 << r);
        for mask in 0u32..(1 << r) {
            let f = (0..r)
                .map(|k| {
                    if mask >> k & 1 == 1 {
                        -Rat::one()
                    } else {
                        Rat::one()
                    }
                })
                .collect();
            functionals.push(f);
        }
        PolyhedralNorm { functionals, dim: r }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn functionals(&self) -> &[Vec<Rat>] {
        &self.functionals
    }

    pub fn eval(&self, v: &[Rat]) -> Rat {
        assert_eq!(v.len(), self.dim);
        self.functionals
            .iter()
            .map(|f| {
                f.iter()
                    .zip(v)
                    .map(|(a, b)| a.clone() * b.clone())
                    .sum::<Rat>()
            })
            .max()
            .unwrap()
    }

    /// Dual norm `N'(φ) = min { Σ t_ℓ : t ≥ 0, Σ t_ℓ c(ℓ) = φ }`: the least
    /// total weight writing φ as a nonnegative combination of the
    /// functionals.
    pub fn dual_eval(&self, phi: &[Rat]) -> Rat {
        assert_eq!(phi.len(), self.dim);
        let l = self.functionals.len();
        // max -Σ t subject to the paired equality rows Σ t c(ℓ)_k = φ_k.
        let mut a = QMatrix::zero(2 * self.dim, l);
        let mut b = Vec::with_capacity(2 * self.dim);
        for k in 0..self.dim {
            for (j, f) in self.functionals.iter().enumerate() {
                a[(2 * k, j)] = f[k].clone();
                a[(2 * k + 1, j)] = -f[k].clone();
            }
            b.push(phi[k].clone());
            b.push(-phi[k].clone());
        }
        let c = vec![-Rat::one(); l];
        let r = simplex_solve(&StandardLP::new(a, b, c));
        assert_eq!(
            r.status,
            LPStatus::Optimal,
            "dual norm of a definite polyhedral norm is always finite"
        );
        -r.optimum.unwrap()
    }

    /// Definite iff the unit ball `{ y : c(ℓ)·y ≤ 1 ∀ℓ }` is bounded, which
    /// we check with 2·dim coordinate LPs.
    fn is_definite(&self) -> bool {
        let l = self.functionals.len();
        let mut a = QMatrix::zero(l, 2 * self.dim);
        // y = y+ - y-: constraint rows c(ℓ)·(y+ - y-) ≤ 1.
        for (i, f) in self.functionals.iter().enumerate() {
            for k in 0..self.dim {
                a[(i, k)] = f[k].clone();
                a[(i, self.dim + k)] = -f[k].clone();
            }
        }
        let b = vec![Rat::one(); l];
        for k in 0..self.dim {
            for sign in [Rat::one(), -Rat::one()] {
                let mut c = vec![Rat::zero(); 2 * self.dim];
                c[k] = sign.clone();
                c[self.dim + k] = -sign.clone();
                let r = simplex_solve(&StandardLP::new(a.clone(), b.clone(), c));
                if r.status != LPStatus::Optimal {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio};
    use num_traits::Signed;

    #[test]
    fn abs_and_dual() {
        let n = PolyhedralNorm::abs();
        assert_eq!(n.eval(&[rat(-3)]), rat(3));
        assert_eq!(n.dual_eval(&[rat(-3)]), rat(3));
    }

    #[test]
    fn l1_dual_is_linf() {
        let n = PolyhedralNorm::l1(2);
        assert_eq!(n.eval(&[rat(3), rat(-4)]), rat(7));
        assert_eq!(n.dual_eval(&[rat(3), rat(-4)]), rat(4));
        assert_eq!(n.dual_eval(&[ratio(1, 2), ratio(1, 3)]), ratio(1, 2));
    }

    #[test]
    fn weighted_abs_dual_scales() {
        let n = PolyhedralNorm::abs_weighted(&rat(3));
        assert_eq!(n.eval(&[rat(6)]), rat(2));
        assert_eq!(n.dual_eval(&[rat(2)]), rat(6));
    }

    #[test]
    fn seminorm_rejected() {
        // Functionals that vanish on the second coordinate.
        let err = PolyhedralNorm::new(vec![
            vec![rat(1), rat(0)],
            vec![rat(-1), rat(0)],
        ]);
        assert_eq!(err.unwrap_err(), NormError::NotDefinite);
    }

    #[test]
    fn l1_dual_matches_linf_on_random_vectors() {
        let mut seed = 12345u64;
        let mut next = move || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            (seed % 19) as i64 - 9
        };
        let n = PolyhedralNorm::l1(3);
        for _ in 0..50 {
            let v = vec![rat(next()), rat(next()), rat(next())];
            let linf = v.iter().map(|x| x.clone().abs()).max().unwrap();
            assert_eq!(n.dual_eval(&v), linf);
        }
    }
}
