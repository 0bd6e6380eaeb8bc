//! Laurent polynomials over Q: elements of Q[t, t⁻¹] in the canonical form
//! `t^offset · p(t)` with `p` having a nonzero constant term. The ring is
//! Euclidean for the degree span, with monomial units.

use crate::textfmt::ParseError;
use crate::{QPoly, Rat};
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    /// Zero polynomial, or one with nonzero constant coefficient.
    poly: QPoly,
    /// Monomial unit factored out; 0 for the zero element.
    offset: i64,
}

impl LaurentPoly {
    pub fn new(poly: QPoly, offset: i64) -> Self {
        if poly.is_zero() {
            return LaurentPoly { poly, offset: 0 };
        }
        let low = poly
            .coeffs()
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero polynomial has a nonzero coefficient");
        LaurentPoly {
            poly: QPoly::new(poly.coeffs()[low..].to_vec()),
            offset: offset + low as i64,
        }
    }

    pub fn zero() -> Self {
        LaurentPoly { poly: QPoly::zero(), offset: 0 }
    }

    pub fn one() -> Self {
        LaurentPoly { poly: QPoly::one(), offset: 0 }
    }

    pub fn t() -> Self {
        LaurentPoly { poly: QPoly::one(), offset: 1 }
    }

    pub fn monomial(c: Rat, exp: i64) -> Self {
        Self::new(QPoly::constant(c), exp)
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_poly(p: &QPoly) -> Self {
        Self::new(p.clone(), 0)
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// True iff the element is a unit `c·t^k`.
    pub fn is_unit(&self) -> bool {
        self.poly.degree() == Some(0)
    }

    /// Degree span: top exponent minus bottom exponent. The Euclidean size.
    pub fn span(&self) -> Option<usize> {
        self.poly.degree()
    }

    pub fn lowest_exp(&self) -> i64 {
        self.offset
    }

    pub fn highest_exp(&self) -> i64 {
        self.offset + self.poly.degree().unwrap_or(0) as i64
    }

    /// The underlying polynomial part (nonzero constant term).
    pub fn poly_part(&self) -> &QPoly {
        &self.poly
    }

    /// Coefficient of `t^exp`.
    pub fn coeff(&self, exp: i64) -> Rat {
        if self.is_zero() || exp < self.offset {
            return Rat::zero();
        }
        self.poly.coeff((exp - self.offset) as usize)
    }

    /// Support as (exponent, coefficient) pairs, ascending.
    pub fn terms(&self) -> Vec<(i64, Rat)> {
        self.poly
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.offset + i as i64, c.clone()))
            .collect()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.offset.min(rhs.offset);
        let hi = self.highest_exp().max(rhs.highest_exp());
        let mut coeffs = vec![Rat::zero(); (hi - lo + 1) as usize];
        for (e, c) in self.terms().into_iter().chain(rhs.terms()) {
            let idx = (e - lo) as usize;
            coeffs[idx] = coeffs[idx].clone() + c;
        }
        Self::new(QPoly::new(coeffs), lo)
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { poly: self.poly.neg(), offset: self.offset }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            poly: self.poly.mul(&rhs.poly),
            offset: self.offset + rhs.offset,
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.poly.scale(c), self.offset)
    }

    /// Inverse of a unit.
    pub fn unit_inverse(&self) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        let c = self.poly.coeff(0);
        Some(Self::monomial(Rat::one() / c, -self.offset))
    }

    /// Euclidean division by span: `self = q·rhs + r` with `r = 0` or
    /// `span(r) < span(rhs)`.
    pub fn div_rem(&self, rhs: &Self) -> (Self, Self) {
        assert!(!rhs.is_zero(), "Laurent division by zero");
        // Work on polynomial parts; units are absorbed into the quotient.
        let (q, r) = self.poly.div_rem(&rhs.poly);
        let quo = LaurentPoly::new(q, self.offset - rhs.offset);
        let rem = LaurentPoly::new(r, self.offset);
        (quo, rem)
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }

    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.normalize_unit()
    }

    /// Canonical associate: monic polynomial part at offset 0.
    pub fn normalize_unit(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            poly: self.poly.monic(),
            offset: 0,
        }
    }

    /// ℓ¹ norm of the coefficient vector.
    pub fn l1(&self) -> Rat {
        self.poly
            .coeffs()
            .iter()
            .map(|c| c.abs())
            .fold(Rat::zero(), |a, b| a + b)
    }

    /// Exponent inversion t ↦ t⁻¹.
    pub fn invert_variable(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.poly.coeffs().to_vec();
        coeffs.reverse();
        Self::new(QPoly::new(coeffs), -self.highest_exp())
    }

    /// Restriction to exponents in `[lo, hi]`.
    pub fn window(&self, lo: i64, hi: i64) -> Self {
        let mut acc = Self::zero();
        for (e, c) in self.terms() {
            if e >= lo && e <= hi {
                acc = acc.add(&Self::monomial(c, e));
            }
        }
        acc
    }

    /// Parse sums of monomials: `2 - 3*t + 1/2*t^-2`, `t^3 - t`.
    pub fn parse(s: &str) -> Result<Self, ParseError> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(ParseError("empty Laurent polynomial".into()));
        }
        // Split into signed monomial tokens.
        let mut tokens: Vec<String> = Vec::new();
        let mut cur = String::new();
        for (i, ch) in cleaned.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('^') && !cur.is_empty() {
                tokens.push(cur.clone());
                cur.clear();
            }
            cur.push(ch);
        }
        tokens.push(cur);
        let mut acc = Self::zero();
        for tok in tokens {
            acc = acc.add(&parse_monomial(&tok)?);
        }
        Ok(acc)
    }

    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms().into_iter().enumerate() {
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let coeff_txt = crate::textfmt::format_rat(&mag);
            match e {
                0 => out.push_str(&coeff_txt),
                _ => {
                    if mag.is_one() {
                        out.push_str(&format_power(e));
                    } else {
                        out.push_str(&format!("{coeff_txt}*{}", format_power(e)));
                    }
                }
            }
        }
        out
    }
}

fn format_power(e: i64) -> String {
    match e {
        1 => "t".into(),
        _ => format!("t^{e}"),
    }
}

fn parse_monomial(tok: &str) -> Result<LaurentPoly, ParseError> {
    let (sign, body) = match tok.strip_prefix('-') {
        Some(rest) => (-Rat::one(), rest),
        None => (Rat::one(), tok.strip_prefix('+').unwrap_or(tok)),
    };
    if body.is_empty() {
        return Err(ParseError(format!("dangling sign in {tok:?}")));
    }
    let (coeff_str, power) = match body.find('t') {
        None => (body, None),
        Some(pos) => {
            let coeff = &body[..pos];
            let rest = &body[pos + 1..];
            let exp = if rest.is_empty() {
                1i64
            } else {
                let stripped = rest
                    .strip_prefix('^')
                    .ok_or_else(|| ParseError(format!("expected ^ in {tok:?}")))?;
                stripped
                    .parse::<i64>()
                    .map_err(|e| ParseError(format!("{tok:?}: {e}")))?
            };
            (coeff.trim_end_matches('*'), Some(exp))
        }
    };
    let c = if coeff_str.is_empty() {
        Rat::one()
    } else {
        crate::textfmt::parse_rat(coeff_str)?
    };
    Ok(LaurentPoly::monomial(sign * c, power.unwrap_or(0)))
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio};

    fn lp(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    #[test]
    fn parse_and_print_roundtrip() {
        for s in ["t - 1", "1 - 2*t + t^2", "t^-1 + 3", "-1/2*t^-2 + t^3", "0"] {
            let p = lp(s);
            assert_eq!(LaurentPoly::parse(&p.to_text()).unwrap(), p);
        }
    }

    #[test]
    fn canonical_offset() {
        let p = LaurentPoly::new(QPoly::new(vec![rat(0), rat(0), rat(3)]), -1);
        assert_eq!(p.lowest_exp(), 1);
        assert_eq!(p.coeff(1), rat(3));
    }

    #[test]
    fn arithmetic_and_units() {
        let a = lp("t - 1");
        let b = lp("t + 1");
        assert_eq!(a.mul(&b), lp("t^2 - 1"));
        assert_eq!(a.add(&b), lp("2*t"));
        assert!(lp("3*t^-2").is_unit());
        let u = lp("3*t^-2");
        assert_eq!(u.mul(&u.unit_inverse().unwrap()), LaurentPoly::one());
    }

    #[test]
    fn euclidean_division_by_span() {
        let a = lp("t^3 - t^-1");
        let b = lp("t - 1");
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.is_zero() || r.span().unwrap() < b.span().unwrap());
    }

    #[test]
    fn gcd_normalized() {
        let a = lp("t^2 - 1").mul(&lp("2*t^-3"));
        let b = lp("t - 1").mul(&lp("t - 2"));
        assert_eq!(a.gcd(&b), lp("t - 1"));
    }

    #[test]
    fn variable_inversion() {
        let p = lp("1 + 2*t + 3*t^2");
        assert_eq!(p.invert_variable(), lp("t^-2").mul(&lp("3 + 2*t + t^2")));
        assert_eq!(p.invert_variable().invert_variable(), p);
    }

    #[test]
    fn coefficient_scale() {
        assert_eq!(lp("2*t - 2").scale(&ratio(1, 2)), lp("t - 1"));
    }
}
