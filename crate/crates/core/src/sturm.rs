//! Sturm sequences for exact real-root counting over the rationals.

use crate::{QPoly, Rat};
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SturmError {
    ZeroPolynomial,
    EmptyInterval,
    /// An endpoint is a root; the caller must shift it by an exact rational.
    EndpointIsRoot,
}

/// Sturm chain of `p`: p, p', then negated remainders.
pub fn sturm_chain(p: &QPoly) -> Vec<QPoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[n - 2].div_rem(&chain[n - 1]).1.neg();
        if r.is_zero() {
            break;
        }
        chain.push(r);
    }
    chain
}

fn sign_changes(chain: &[QPoly], x: &Rat) -> usize {
    let signs: Vec<Rat> = chain
        .iter()
        .map(|p| p.eval(x))
        .filter(|v| !v.is_zero())
        .collect();
    signs
        .windows(2)
        .filter(|w| (w[0].clone() * w[1].clone()) < Rat::zero())
        .count()
}

/// Exact number of real roots of `p` in the open interval `(lo, hi)`.
///
/// `p` must be squarefree on the interval (divide out `gcd(p, p')` first)
/// and neither endpoint may be a root.
pub fn sturm_real_root_count(p: &QPoly, lo: &Rat, hi: &Rat) -> Result<usize, SturmError> {
    if p.is_zero() {
        return Err(SturmError::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(SturmError::EmptyInterval);
    }
    if p.eval(lo).is_zero() || p.eval(hi).is_zero() {
        return Err(SturmError::EndpointIsRoot);
    }
    let chain = sturm_chain(p);
    Ok(sign_changes(&chain, lo) - sign_changes(&chain, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio};

    #[test]
    fn sqrt3_pair_in_interval() {
        // y^2 - 3 on (-2, 2) has both roots.
        let p = QPoly::new(vec![rat(-3), rat(0), rat(1)]);
        assert_eq!(sturm_real_root_count(&p, &rat(-2), &rat(2)).unwrap(), 2);
    }

    #[test]
    fn linear_root_outside() {
        let p = QPoly::new(vec![rat(-5), rat(1)]); // y - 5
        assert_eq!(sturm_real_root_count(&p, &rat(-2), &rat(2)).unwrap(), 0);
    }

    #[test]
    fn palindromic_reduction_example() {
        // x^4 - 2x^3 - 2x + 1 reduces via y = x + 1/x to y^2 - 2y - 2,
        // which has exactly one root in (-2, 2).
        let q = QPoly::new(vec![rat(-2), rat(-2), rat(1)]);
        assert_eq!(sturm_real_root_count(&q, &rat(-2), &rat(2)).unwrap(), 1);
    }

    #[test]
    fn endpoint_root_is_error() {
        let p = QPoly::new(vec![rat(-2), rat(1)]); // y - 2
        assert_eq!(
            sturm_real_root_count(&p, &rat(-2), &rat(2)),
            Err(SturmError::EndpointIsRoot)
        );
        // Shifting the endpoint by an exact rational resolves it.
        assert_eq!(
            sturm_real_root_count(&p, &rat(-2), &ratio(5, 2)).unwrap(),
            1
        );
    }
}
