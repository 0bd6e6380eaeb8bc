//! Floating-point helpers: polynomial root finding (Aberth's method) and the
//! rational-to-float bridges. Nothing here is on a verdict path; results feed
//! rounding guides and cross-checks whose outputs are verified exactly.

use crate::{FPoly, QPoly, Rat};
use num_traits::ToPrimitive;

/// Complex number over f64, hand-rolled to keep the dependency tree flat.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct C64 {
    pub re: f64,
    pub im: f64,
}

impl C64 {
    pub fn new(re: f64, im: f64) -> Self {
        C64 { re, im }
    }
    pub fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }
    pub fn add(self, o: C64) -> C64 {
        C64::new(self.re + o.re, self.im + o.im)
    }
    pub fn sub(self, o: C64) -> C64 {
        C64::new(self.re - o.re, self.im - o.im)
    }
    pub fn mul(self, o: C64) -> C64 {
        C64::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
    pub fn div(self, o: C64) -> C64 {
        let d = o.re * o.re + o.im * o.im;
        C64::new(
            (self.re * o.re + self.im * o.im) / d,
            (self.im * o.re - self.re * o.im) / d,
        )
    }
}

pub fn rat_to_f64(x: &Rat) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        let n = x.numer().to_f64().unwrap_or(f64::MAX);
        let d = x.denom().to_f64().unwrap_or(f64::MAX);
        n / d
    })
}

pub fn qpoly_to_f64(p: &QPoly) -> FPoly {
    FPoly::new(p.coeffs().iter().map(rat_to_f64).collect())
}

fn eval_c(coeffs: &[f64], z: C64) -> C64 {
    let mut acc = C64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        acc = acc.mul(z).add(C64::new(c, 0.0));
    }
    acc
}

/// All complex roots of a float polynomial by Aberth–Ehrlich iteration.
pub fn roots_f64(p: &FPoly) -> Vec<C64> {
    let coeffs = p.coeffs();
    let n = match p.degree() {
        None | Some(0) => return Vec::new(),
        Some(n) => n,
    };
    let lead = coeffs[n];
    let monic: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();
    let dcoeffs: Vec<f64> = (1..=n).map(|i| monic[i] * i as f64).collect();
    // Initial guesses on a slightly eccentric circle of the Cauchy radius.
    let radius = 1.0
        + monic[..n]
            .iter()
            .fold(0.0f64, |m, c| m.max(c.abs()));
    let mut z: Vec<C64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.4;
            C64::new(radius * theta.cos(), radius * theta.sin())
        })
        .collect();
    for _ in 0..200 {
        let mut max_step = 0.0f64;
        for i in 0..n {
            let pi = eval_c(&monic, z[i]);
            let dpi = eval_c(&dcoeffs, z[i]);
            if pi.abs() < 1e-300 {
                continue;
            }
            let newton = pi.div(dpi);
            let mut sum = C64::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    sum = sum.add(C64::new(1.0, 0.0).div(z[i].sub(z[j])));
                }
            }
            let denom = C64::new(1.0, 0.0).sub(newton.mul(sum));
            let step = newton.div(denom);
            z[i] = z[i].sub(step);
            max_step = max_step.max(step.abs());
        }
        if max_step < 1e-14 {
            break;
        }
    }
    z
}

/// Roots of a rational polynomial, as floats.
pub fn qpoly_roots_f64(p: &QPoly) -> Vec<C64> {
    roots_f64(&qpoly_to_f64(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio};

    #[test]
    fn roots_of_rotation_poly_lie_on_circle() {
        let p = QPoly::new(vec![rat(1), ratio(-6, 5), rat(1)]);
        let roots = qpoly_roots_f64(&p);
        assert_eq!(roots.len(), 2);
        for r in roots {
            assert!((r.abs() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn roots_of_quartic_split_on_off_circle() {
        let p = QPoly::new(vec![rat(1), rat(-2), rat(0), rat(-2), rat(1)]);
        let roots = qpoly_roots_f64(&p);
        let on = roots.iter().filter(|r| (r.abs() - 1.0).abs() < 1e-6).count();
        assert_eq!(on, 2);
    }

    #[test]
    fn real_roots_found() {
        // (x-1)(x-2)(x-3)
        let p = QPoly::new(vec![rat(-6), rat(11), rat(-6), rat(1)]);
        let mut roots: Vec<f64> = qpoly_roots_f64(&p).iter().map(|r| r.re).collect();
        roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((roots[0] - 1.0).abs() < 1e-8);
        assert!((roots[1] - 2.0).abs() < 1e-8);
        assert!((roots[2] - 3.0).abs() < 1e-8);
    }
}
