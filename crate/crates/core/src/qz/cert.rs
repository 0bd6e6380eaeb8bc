//! Distortion certificate chains over Q[Z]: the tube-stacking chains c_s
//! whose boundaries split as E(s) + F(s) + G(s) with E = 0, F confined to a
//! fixed window, and G of constant volume, while the pairing with the Euler
//! class grows linearly. All claims are computed symbolically and verified
//! exactly on every call.

use super::laurent::LaurentPoly;
use crate::circle::all_roots_on_unit_circle;
use crate::{rat, QMatrix, QPoly, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// The setup of the certificate construction: a cycle symbol z with relation
/// b = q(t)·z bounding a designated filling symbol c (∂c = b), the companion
/// matrix A_q of q, and the pairing seed μ = ⟨eu, c⟩ ∈ Q^r.
#[derive(Clone, Debug)]
pub struct CertificateSetup {
    /// Monic generator of the annihilator ideal, all roots on the unit
    /// circle (elliptic hypothesis).
    pub q: QPoly,
    /// Pairing seed in Q^r, r = deg q.
    pub mu: Vec<Rat>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertError {
    ZeroQ,
    NotElliptic,
    WrongMuDimension,
    SBelowDegree,
}

/// The verified data for one s.
#[derive(Clone, Debug)]
pub struct CertificateChain {
    pub s: usize,
    /// Group-ring coefficient of the filling symbol: c_s = coeff · c.
    pub c_s: LaurentPoly,
    /// The three-way split of ∂c_s = (E + F + G)·z.
    pub e_part: LaurentPoly,
    pub f_part: LaurentPoly,
    pub g_part: LaurentPoly,
    /// ℓ¹ volume of G(s); constant in s.
    pub g_volume: Rat,
    /// ℓ¹ norm of F(s); bounded independent of s.
    pub f_norm: Rat,
    /// Least positive integer K with K·G(s) integral.
    pub integrality_scale: crate::Int,
    /// ⟨eu, c_s⟩ = s·ρ([1−s])(μ), exact.
    pub pairing: Vec<Rat>,
}

impl CertificateSetup {
    pub fn new(q: QPoly, mu: Vec<Rat>) -> Result<Self, CertError> {
        if q.is_zero() || q.degree() == Some(0) {
            return Err(CertError::ZeroQ);
        }
        let q = q.monic();
        if !all_roots_on_unit_circle(&q).map_err(|_| CertError::ZeroQ)? {
            return Err(CertError::NotElliptic);
        }
        if mu.len() != q.degree().unwrap() {
            return Err(CertError::WrongMuDimension);
        }
        Ok(CertificateSetup { q, mu })
    }

    /// Companion matrix of q: multiplication by t on Q[t]/(q).
    pub fn companion(&self) -> QMatrix {
        let r = self.q.degree().unwrap();
        let mut a = QMatrix::zero(r, r);
        for i in 1..r {
            a[(i, i - 1)] = Rat::one();
        }
        for i in 0..r {
            a[(i, r - 1)] = -self.q.coeff(i);
        }
        a
    }
}

/// Apply a Laurent polynomial to the companion action: ρ(λ) = Σ λ_e A^e.
fn rho_apply(a: &QMatrix, lam: &LaurentPoly, v: &[Rat]) -> Vec<Rat> {
    let mut acc = vec![Rat::zero(); v.len()];
    for (e, c) in lam.terms() {
        let w = a.pow_i64(e).mul_vec(v);
        for (ai, wi) in acc.iter_mut().zip(w) {
            *ai = ai.clone() + c.clone() * wi;
        }
    }
    acc
}

/// T(w[m]) = t^m · Σ_i w_i t^{i−1}: the projection S[Z] → Q[Z] sending the
/// basis vector e_i at shift m to t^{i−1+m}.
fn project(w: &[Rat], shift: i64) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    for (i, c) in w.iter().enumerate() {
        if !c.is_zero() {
            acc = acc.add(&LaurentPoly::monomial(c.clone(), shift + i as i64));
        }
    }
    acc
}

/// Build and verify the certificate chain at level s ≥ deg q.
pub fn certificate_chains(setup: &CertificateSetup, s: usize) -> Result<CertificateChain, CertError> {
    let r = setup.q.degree().unwrap();
    if s < r {
        return Err(CertError::SBelowDegree);
    }
    let a = setup.companion();
    let q_l = LaurentPoly::from_poly(&setup.q);
    // Powers A^j e_1 for j = 0..s−1.
    let mut powers: Vec<Vec<Rat>> = Vec::with_capacity(s);
    let mut cur = vec![Rat::zero(); r];
    cur[0] = Rat::one();
    for _ in 0..s {
        powers.push(cur.clone());
        cur = a.mul_vec(&cur);
    }
    // c_s = Σ_{j=0}^{s−1} T(A^j e_1 [s−1−j]) · c.
    let mut c_s = LaurentPoly::zero();
    for (j, w) in powers.iter().enumerate() {
        c_s = c_s.add(&project(w, (s - 1 - j) as i64));
    }
    // ∂c_s = c_s · q(t) applied to z.
    let d_s = c_s.mul(&q_l);
    // E(s): Σ_{j'=0}^{s−1−r} T(q(A)·A^{j'} e_1 [s−1−j']) — zero since q(A)=0.
    // F(s): Σ_{d=0}^{r−1} T((Σ_{ℓ≤d} q_ℓ A^ℓ)·A^{s−1−d} e_1 [d]).
    // G(s): Σ_{ℓ=1}^{r} Σ_{j=0}^{ℓ−1} q_ℓ T(A^j e_1 [s−1−j+ℓ]).
    let mut partial = QMatrix::zero(r, r); // Σ_{ℓ≤d} q_ℓ A^ℓ, built incrementally
    let mut a_pow = QMatrix::identity(r);
    let mut f_part = LaurentPoly::zero();
    for d in 0..r {
        // partial += q_d A^d
        partial = &partial + &a_pow.scale(&setup.q.coeff(d));
        let vec = partial.mul_vec(&a.pow_i64((s - 1 - d) as i64).mul_vec(&e1(r)));
        f_part = f_part.add(&project(&vec, d as i64));
        a_pow = &a_pow * &a;
    }
    let mut g_part = LaurentPoly::zero();
    for l in 1..=r {
        let ql = setup.q.coeff(l);
        if ql.is_zero() {
            continue;
        }
        for (j, w) in powers.iter().enumerate().take(l) {
            let scaled: Vec<Rat> = w.iter().map(|x| x.clone() * ql.clone()).collect();
            g_part = g_part.add(&project(&scaled, (s - 1 - j + l) as i64));
        }
    }
    let e_part = d_s.sub(&f_part).sub(&g_part);
    // Verifications: E = 0, windows, pairing.
    assert!(e_part.is_zero(), "E(s) must vanish because q(A_q) = 0");
    if !f_part.is_zero() {
        assert!(f_part.lowest_exp() >= 0 && f_part.highest_exp() <= 2 * r as i64 - 2);
    }
    if !g_part.is_zero() {
        assert!(
            g_part.lowest_exp() >= s as i64 && g_part.highest_exp() <= (s + 2 * r - 1) as i64 - 1
        );
    }
    // Pairing: ⟨eu, λ·c⟩ = ρ(ι(λ))(μ) with ι the exponent inversion; must
    // equal s·ρ([1−s])(μ) because c_s ≡ s·t^{s−1} mod (q).
    let pairing = rho_apply(&a, &c_s.invert_variable(), &setup.mu);
    let expected: Vec<Rat> = a
        .pow_i64(1 - s as i64)
        .mul_vec(&setup.mu)
        .into_iter()
        .map(|x| x * rat(s as i64))
        .collect();
    assert_eq!(pairing, expected, "pairing must equal s·ρ([1−s])(μ) exactly");
    let g_volume = g_part.l1();
    let f_norm = f_part.l1();
    let mut scale = crate::Int::one();
    for (_, c) in g_part.terms() {
        scale = scale.lcm(c.denom());
    }
    Ok(CertificateChain {
        s,
        c_s,
        e_part,
        f_part,
        g_part,
        g_volume,
        f_norm,
        integrality_scale: scale,
        pairing,
    })
}

fn e1(r: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); r];
    v[0] = Rat::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio;

    fn setup_linear() -> CertificateSetup {
        // q = t − 1, the untwisted tube.
        CertificateSetup::new(QPoly::new(vec![rat(-1), rat(1)]), vec![ratio(2, 3)]).unwrap()
    }

    #[test]
    fn tube_pairing_grows_linearly() {
        let setup = setup_linear();
        for s in 1..=10 {
            let c = certificate_chains(&setup, s).unwrap();
            assert_eq!(c.pairing, vec![ratio(2 * s as i64, 3)]);
            assert!(c.e_part.is_zero());
            assert_eq!(c.g_volume, rat(1));
            // ∂c_s = t^s − 1 applied to z.
            assert_eq!(
                c.c_s.mul(&LaurentPoly::parse("t - 1").unwrap()),
                LaurentPoly::parse(&format!("t^{s} - 1")).unwrap()
            );
        }
    }

    #[test]
    fn single_layer_is_mu() {
        let setup = CertificateSetup::new(QPoly::new(vec![rat(-1), rat(1)]), vec![rat(1)]).unwrap();
        let c = certificate_chains(&setup, 1).unwrap();
        assert_eq!(c.pairing, vec![rat(1)]);
    }

    #[test]
    fn rotation_certificate() {
        // q = t² − (6/5)t + 1, elliptic of degree 2.
        let q = QPoly::new(vec![rat(1), ratio(-6, 5), rat(1)]);
        let setup = CertificateSetup::new(q, vec![rat(1), rat(0)]).unwrap();
        let c6 = certificate_chains(&setup, 6).unwrap();
        assert!(c6.e_part.is_zero());
        assert!(c6.f_part.lowest_exp() >= 0 && c6.f_part.highest_exp() <= 2);
        // Constant G-volume and bounded F across a range of s.
        for s in 2..=30 {
            let c = certificate_chains(&setup, s).unwrap();
            assert_eq!(c.g_volume, c6.g_volume);
            assert!(c.f_norm <= rat(20), "F(s) stays in a bounded window");
        }
    }

    #[test]
    fn hyperbolic_q_rejected() {
        let q = QPoly::new(vec![rat(-2), rat(1)]); // t − 2
        assert_eq!(
            CertificateSetup::new(q, vec![rat(1)]).unwrap_err(),
            CertError::NotElliptic
        );
    }

    #[test]
    fn s_below_degree_rejected() {
        let q = QPoly::new(vec![rat(1), ratio(-6, 5), rat(1)]);
        let setup = CertificateSetup::new(q, vec![rat(1), rat(0)]).unwrap();
        assert_eq!(certificate_chains(&setup, 1).unwrap_err(), CertError::SBelowDegree);
    }
}
