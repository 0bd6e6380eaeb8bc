//! Exact test for roots on the complex unit circle.
//!
//! The verdict path is purely rational: strip `x` and `(x ∓ 1)` factors,
//! demand the remainder be palindromic, substitute `y = x + 1/x`, and count
//! real roots of the half-degree polynomial in `(-2, 2)` with a Sturm chain.

use crate::sturm::sturm_real_root_count;
use crate::{QPoly, Rat};
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CircleError {
    ZeroPolynomial,
}

/// Number of distinct roots of `p` lying exactly on the unit circle,
/// together with the number of distinct roots overall.
pub fn unit_circle_root_profile(p: &QPoly) -> Result<(usize, usize), CircleError> {
    if p.is_zero() {
        return Err(CircleError::ZeroPolynomial);
    }
    let sf = p.squarefree();
    let distinct = sf.degree().unwrap_or(0);
    // Roots at 0 are off the circle; roots at ±1 are on it.
    let mut q = sf.clone();
    let mut on_circle = 0usize;
    while q.coeff(0).is_zero() {
        // factor of x
        q = QPoly::new(q.coeffs()[1..].to_vec());
    }
    for root in [Rat::one(), -Rat::one()] {
        let lin = QPoly::new(vec![-root.clone(), Rat::one()]);
        if lin.divides(&q) {
            on_circle += 1;
            while lin.divides(&q) {
                q = q.div_rem(&lin).0;
            }
        }
    }
    if q.degree().unwrap_or(0) == 0 {
        return Ok((on_circle, distinct));
    }
    // Remaining circle roots pair as {λ, 1/λ}, so they divide gcd(q, q*).
    let g = q.gcd(&q.reversal());
    if g.degree().unwrap_or(0) == 0 {
        return Ok((on_circle, distinct));
    }
    // g is squarefree, palindromic up to sign, with g(0) ≠ 0 and g(±1) ≠ 0.
    // After the ±1 strip an anti-palindromic or odd-degree palindromic part
    // would force a root at ±1, so g is honestly palindromic of even degree.
    let d = g.degree().unwrap();
    debug_assert!(d % 2 == 0);
    debug_assert_eq!(g.reversal().monic(), g.monic());
    let half = reduce_palindromic(&g);
    // Circle roots of g correspond exactly to real roots of `half` in (-2, 2);
    // y = ±2 cannot occur because ±1 roots were divided out exactly.
    debug_assert!(!half.eval(&crate::rat(2)).is_zero());
    debug_assert!(!half.eval(&crate::rat(-2)).is_zero());
    let half_sf = half.squarefree();
    let real_in = sturm_real_root_count(&half_sf, &crate::rat(-2), &crate::rat(2))
        .expect("endpoints are not roots after exact division");
    // Each real y-root in (-2,2) corresponds to a conjugate pair on the circle.
    Ok((on_circle + 2 * real_in, distinct))
}

/// For palindromic `g` of even degree `2e`, the polynomial `q` of degree `e`
/// with `g(x) / x^e = q(x + 1/x)`, via `x^k + x^{-k} = C_k(y)`.
fn reduce_palindromic(g: &QPoly) -> QPoly {
    let d = g.degree().unwrap();
    let e = d / 2;
    // Chebyshev-like basis: C_0 = 2, C_1 = y, C_{k+1} = y C_k - C_{k-1}.
    let y = QPoly::x();
    let mut c_prev = QPoly::constant(crate::rat(2));
    let mut c_cur = y.clone();
    let mut acc = QPoly::constant(g.coeff(e));
    for k in 1..=e {
        acc = acc.add(&c_cur.scale(&g.coeff(e - k)));
        let next = y.mul(&c_cur).sub(&c_prev);
        c_prev = c_cur;
        c_cur = next;
    }
    acc
}

/// True iff every complex root of `p` has modulus exactly 1.
pub fn all_roots_on_unit_circle(p: &QPoly) -> Result<bool, CircleError> {
    let (on, total) = unit_circle_root_profile(p)?;
    Ok(on == total && total == p.squarefree().degree().unwrap_or(0))
}

/// True iff no complex root of `p` lies on the unit circle (the hyperbolic
/// hypothesis of the logarithmic decomposition).
pub fn no_roots_on_unit_circle(p: &QPoly) -> Result<bool, CircleError> {
    let (on, _) = unit_circle_root_profile(p)?;
    Ok(on == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio};

    #[test]
    fn rotation_charpoly_is_on_circle() {
        let p = QPoly::new(vec![rat(1), ratio(-6, 5), rat(1)]);
        assert!(all_roots_on_unit_circle(&p).unwrap());
    }

    #[test]
    fn mixed_palindromic_quartic_is_not() {
        // x^4 - 2x^3 - 2x + 1: two roots on the circle, two real.
        let p = QPoly::new(vec![rat(1), rat(-2), rat(0), rat(-2), rat(1)]);
        assert!(!all_roots_on_unit_circle(&p).unwrap());
        assert_eq!(unit_circle_root_profile(&p).unwrap(), (2, 4));
        assert!(!no_roots_on_unit_circle(&p).unwrap());
    }

    #[test]
    fn linear_off_circle() {
        let p = QPoly::new(vec![rat(-2), rat(1)]); // x - 2
        assert!(!all_roots_on_unit_circle(&p).unwrap());
        assert!(no_roots_on_unit_circle(&p).unwrap());
    }

    #[test]
    fn unit_factors_and_multiplicity() {
        // (x-1)^2 (x+1): all roots on the circle.
        let f = QPoly::new(vec![rat(-1), rat(1)]);
        let g = QPoly::new(vec![rat(1), rat(1)]);
        let p = f.mul(&f).mul(&g);
        assert!(all_roots_on_unit_circle(&p).unwrap());
    }

    #[test]
    fn squared_rotation_polynomial() {
        let base = QPoly::new(vec![rat(1), ratio(-6, 5), rat(1)]);
        let p = base.mul(&base);
        assert!(all_roots_on_unit_circle(&p).unwrap());
    }

    #[test]
    fn reciprocal_real_pair_is_off_circle() {
        // x^2 - (5/2)x + 1 has roots 2 and 1/2: palindromic but off circle.
        let p = QPoly::new(vec![rat(1), ratio(-5, 2), rat(1)]);
        assert!(!all_roots_on_unit_circle(&p).unwrap());
        assert!(no_roots_on_unit_circle(&p).unwrap());
    }

    #[test]
    fn zero_polynomial_is_an_error() {
        assert_eq!(
            all_roots_on_unit_circle(&QPoly::zero()),
            Err(CircleError::ZeroPolynomial)
        );
    }
}
