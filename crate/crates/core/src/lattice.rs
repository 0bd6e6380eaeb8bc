//! Full-rank integer lattices in Q^n with exact membership and rounding.

use crate::{Int, QMatrix, Rat};
use num_traits::{Signed, Zero};

/// Full-rank lattice given by a square invertible basis matrix whose columns
/// generate it.
#[derive(Clone, Debug)]
pub struct IntLattice {
    dimension: usize,
    basis: QMatrix,
    inverse: QMatrix,
}

impl IntLattice {
    pub fn new(basis: QMatrix) -> Self {
        assert!(basis.is_square(), "lattice basis must be square");
        let inverse = basis
            .inverse()
            .expect("lattice basis must be invertible");
        IntLattice {
            dimension: basis.rows(),
            basis,
            inverse,
        }
    }

    /// The standard lattice Z^n.
    pub fn standard(n: usize) -> Self {
        Self::new(QMatrix::identity(n))
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn basis(&self) -> &QMatrix {
        &self.basis
    }

    /// Exact membership: solve in the basis and check integrality.
    pub fn contains(&self, v: &[Rat]) -> bool {
        self.coordinates(v).iter().all(|c| c.is_integer())
    }

    /// Coordinates of `v` in the lattice basis.
    pub fn coordinates(&self, v: &[Rat]) -> Vec<Rat> {
        self.inverse.mul_vec(v)
    }

    /// Nearest lattice point by coordinate-wise rounding in the basis
    /// (round-half-up; a covering-radius bound, not a closest-vector solver).
    pub fn round(&self, v: &[Rat]) -> Vec<Rat> {
        let coords = self.coordinates(v);
        let rounded: Vec<Rat> = coords.iter().map(round_half_up).collect();
        self.basis.mul_vec(&rounded)
    }
}

/// Round a rational to the nearest integer, halves up.
pub fn round_half_up(x: &Rat) -> Rat {
    let two = Rat::from_integer(Int::from(2));
    let shifted = x + Rat::new(Int::from(1), Int::from(2));
    // floor(shifted)
    let n = shifted.numer().clone();
    let d = shifted.denom().clone();
    let q = if n.is_negative() && !(&n % &d).is_zero() {
        (&n / &d) - Int::from(1)
    } else {
        &n / &d
    };
    let _ = two;
    Rat::from_integer(q)
}

/// ℓ¹ norm of a rational vector.
pub fn l1_norm(v: &[Rat]) -> Rat {
    v.iter().map(|x| x.abs()).fold(Rat::zero(), |a, b| a + b)
}

/// Squared ℓ² norm of a rational vector (exact).
pub fn l2_norm_sq(v: &[Rat]) -> Rat {
    v.iter()
        .map(|x| x.clone() * x.clone())
        .fold(Rat::zero(), |a, b| a + b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio};

    #[test]
    fn standard_membership() {
        let l = IntLattice::standard(2);
        assert!(l.contains(&[rat(3), rat(-7)]));
        assert!(!l.contains(&[ratio(1, 2), rat(0)]));
    }

    #[test]
    fn sublattice_membership_and_rounding() {
        // Lattice generated by (-2,1) and (1,2): v with v1 ≡ 3 v2 (mod 5).
        let basis = QMatrix::from_rows(vec![vec![rat(-2), rat(1)], vec![rat(1), rat(2)]]);
        let l = IntLattice::new(basis);
        assert!(l.contains(&[rat(-2), rat(1)]));
        assert!(l.contains(&[rat(3), rat(1)])); // 3 ≡ 3·1 mod 5
        assert!(!l.contains(&[rat(1), rat(0)]));
        let p = l.round(&[ratio(7, 2), ratio(1, 3)]);
        assert!(l.contains(&p));
        // Within covering radius sqrt(10)/2 < sqrt(5): squared distance < 5/2.
        let dx = p[0].clone() - ratio(7, 2);
        let dy = p[1].clone() - ratio(1, 3);
        assert!(dx.clone() * dx + dy.clone() * dy <= ratio(5, 2));
    }

    #[test]
    fn rounding_halves_up() {
        assert_eq!(round_half_up(&ratio(1, 2)), rat(1));
        assert_eq!(round_half_up(&ratio(-1, 2)), rat(0));
        assert_eq!(round_half_up(&ratio(-3, 2)), rat(-1));
        assert_eq!(round_half_up(&ratio(7, 3)), rat(2));
    }
}
