//! Group word-problem oracles: canonical element forms with exact
//! multiplication, inversion, and generator expression. Equality is
//! structural equality of canonical forms.

use crate::Int;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::fmt::Debug;
use std::hash::Hash;

/// One letter of a word: generator index and exponent.
pub type Letter = (usize, i64);

/// Contract implemented by every shipped group.
pub trait GroupOracle: Clone {
    /// Canonical form of a group element; structural equality decides the
    /// word problem.
    type Elem: Clone + Eq + Ord + Hash + Debug;

    fn identity(&self) -> Self::Elem;
    fn generator_names(&self) -> Vec<String>;
    fn generator(&self, idx: usize) -> Self::Elem;
    fn multiply(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn invert(&self, a: &Self::Elem) -> Self::Elem;

    /// A word in the generators evaluating to the element.
    fn express(&self, a: &Self::Elem) -> Vec<Letter>;

    /// Printable canonical form, used for deterministic orderings and file
    /// output.
    fn key(&self, a: &Self::Elem) -> String {
        format!("{:?}", a)
    }

    fn evaluate_word(&self, word: &[Letter]) -> Self::Elem {
        let mut acc = self.identity();
        for &(g, e) in word {
            let gen = self.generator(g);
            let step = if e >= 0 { gen } else { self.invert(&gen) };
            for _ in 0..e.unsigned_abs() {
                acc = self.multiply(&acc, &step);
            }
        }
        acc
    }

    fn is_identity(&self, a: &Self::Elem) -> bool {
        *a == self.identity()
    }
}

/// Free abelian group Z^d with generator basis vectors.
#[derive(Clone, Debug)]
pub struct FreeAbelian {
    pub dim: usize,
    names: Vec<String>,
}

impl FreeAbelian {
    pub fn line() -> Self {
        FreeAbelian { dim: 1, names: vec!["t".into()] }
    }

    pub fn grid() -> Self {
        FreeAbelian { dim: 2, names: vec!["x".into(), "y".into()] }
    }
}

impl GroupOracle for FreeAbelian {
    type Elem = Vec<i64>;

    fn identity(&self) -> Vec<i64> {
        vec![0; self.dim]
    }

    fn generator_names(&self) -> Vec<String> {
        self.names.clone()
    }

    fn generator(&self, idx: usize) -> Vec<i64> {
        let mut v = self.identity();
        v[idx] = 1;
        v
    }

    fn multiply(&self, a: &Vec<i64>, b: &Vec<i64>) -> Vec<i64> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn invert(&self, a: &Vec<i64>) -> Vec<i64> {
        a.iter().map(|x| -x).collect()
    }

    fn express(&self, a: &Vec<i64>) -> Vec<Letter> {
        a.iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| (i, e))
            .collect()
    }

    fn key(&self, a: &Vec<i64>) -> String {
        let parts: Vec<String> = a.iter().map(|x| x.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

/// Free group on two generators; elements are freely reduced words over
/// letters ±1, ±2 (sign = inverse).
#[derive(Clone, Debug)]
pub struct FreeGroup2;

impl GroupOracle for FreeGroup2 {
    type Elem = Vec<i8>;

    fn identity(&self) -> Vec<i8> {
        Vec::new()
    }

    fn generator_names(&self) -> Vec<String> {
        vec!["x".into(), "y".into()]
    }

    fn generator(&self, idx: usize) -> Vec<i8> {
        vec![idx as i8 + 1]
    }

    fn multiply(&self, a: &Vec<i8>, b: &Vec<i8>) -> Vec<i8> {
        let mut out = a.clone();
        for &l in b {
            if out.last().map_or(false, |&last| last == -l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        out
    }

    fn invert(&self, a: &Vec<i8>) -> Vec<i8> {
        a.iter().rev().map(|&l| -l).collect()
    }

    fn express(&self, a: &Vec<i8>) -> Vec<Letter> {
        a.iter()
            .map(|&l| ((l.unsigned_abs() as usize) - 1, if l > 0 { 1 } else { -1 }))
            .collect()
    }

    fn key(&self, a: &Vec<i8>) -> String {
        if a.is_empty() {
            return "e".into();
        }
        a.iter()
            .map(|&l| {
                let name = if l.abs() == 1 { "x" } else { "y" };
                if l > 0 {
                    name.to_string()
                } else {
                    format!("{name}-")
                }
            })
            .collect()
    }
}

/// BS(1,2) = ⟨a, b | b⁻¹ab = a²⟩ in its faithful affine form: the element
/// (d, n) acts on the line by x ↦ x/2ⁿ + d with d a dyadic rational. The
/// canonical form is (num, pow, n) with d = num/2^pow in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bs12Elem {
    pub num: Int,
    pub pow: u32,
    pub n: i64,
}

impl Bs12Elem {
    fn normalize(mut num: Int, mut pow: u32, n: i64) -> Self {
        if num.is_zero() {
            return Bs12Elem { num, pow: 0, n };
        }
        while pow > 0 && num.is_even() {
            num /= 2;
            pow -= 1;
        }
        Bs12Elem { num, pow, n }
    }
}

#[derive(Clone, Debug)]
pub struct Bs12;

impl GroupOracle for Bs12 {
    type Elem = Bs12Elem;

    fn identity(&self) -> Bs12Elem {
        Bs12Elem { num: Int::zero(), pow: 0, n: 0 }
    }

    fn generator_names(&self) -> Vec<String> {
        vec!["a".into(), "b".into()]
    }

    fn generator(&self, idx: usize) -> Bs12Elem {
        match idx {
            0 => Bs12Elem { num: Int::from(1), pow: 0, n: 0 },
            1 => Bs12Elem { num: Int::zero(), pow: 0, n: 1 },
            _ => panic!("BS(1,2) has two generators"),
        }
    }

    fn multiply(&self, a: &Bs12Elem, b: &Bs12Elem) -> Bs12Elem {
        // (d1, n1)·(d2, n2) = (d1 + d2/2^{n1}, n1+n2)
        // d1 = p/2^r, d2 = q/2^s: sum = (p·2^{s+n1} + q·2^r)/2^{r+s+n1},
        // shifting negative exponents into the numerator as needed.
        let p = &a.num;
        let q = &b.num;
        let r = a.pow as i64;
        let s = b.pow as i64;
        let e1 = s + a.n; // exponent under d1's numerator
        let e2 = r; // exponent under d2's numerator
        let lift = 0i64.max(-e1).max(-e2);
        let num = p * Int::from(2).pow((e1 + lift) as u32) + q * Int::from(2).pow((e2 + lift) as u32);
        let pow = (r + s + a.n + lift).max(0);
        debug_assert!(r + s + a.n + lift >= 0);
        Bs12Elem::normalize(num, pow as u32, a.n + b.n)
    }

    fn invert(&self, a: &Bs12Elem) -> Bs12Elem {
        // (d, n)⁻¹ = (−d·2ⁿ, −n)
        let e = a.n - a.pow as i64;
        if e >= 0 {
            Bs12Elem::normalize(-a.num.clone() * Int::from(2).pow(e as u32), 0, -a.n)
        } else {
            Bs12Elem::normalize(-a.num.clone(), (-e) as u32, -a.n)
        }
    }

    fn express(&self, g: &Bs12Elem) -> Vec<Letter> {
        // (m/2^p, n) = b^p a^m b^{n−p}
        let mut word = Vec::new();
        let p = g.pow as i64;
        if p != 0 {
            word.push((1usize, p));
        }
        if !g.num.is_zero() {
            let m: i64 = num_traits::ToPrimitive::to_i64(&g.num)
                .expect("a-exponent fits in i64 at desk scale");
            word.push((0usize, m));
        }
        if g.n - p != 0 {
            word.push((1usize, g.n - p));
        }
        word
    }

    fn key(&self, a: &Bs12Elem) -> String {
        format!("{}/2^{}|{}", a.num, a.pow, a.n)
    }
}

/// Breadth-first ball of a group: elements with word length ≤ R, in
/// deterministic (length, key) order.
pub fn group_ball<G: GroupOracle>(oracle: &G, radius: usize) -> Vec<(G::Elem, usize)> {
    use std::collections::HashMap;
    let mut seen: HashMap<G::Elem, usize> = HashMap::new();
    let mut frontier = vec![oracle.identity()];
    seen.insert(oracle.identity(), 0);
    let gens: Vec<G::Elem> = (0..oracle.generator_names().len())
        .map(|i| oracle.generator(i))
        .collect();
    for depth in 1..=radius {
        let mut next = Vec::new();
        for g in &frontier {
            for gen in &gens {
                for h in [oracle.multiply(g, gen), oracle.multiply(g, &oracle.invert(gen))] {
                    if !seen.contains_key(&h) {
                        seen.insert(h.clone(), depth);
                        next.push(h);
                    }
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<(G::Elem, usize)> = seen.into_iter().collect();
    out.sort_by(|(g, lg), (h, lh)| (lg, oracle.key(g)).cmp(&(lh, oracle.key(h))));
    out
}

/// Exact word length of an element, by breadth-first search up to `max_r`.
pub fn word_length<G: GroupOracle>(oracle: &G, g: &G::Elem, max_r: usize) -> Option<usize> {
    group_ball(oracle, max_r)
        .into_iter()
        .find(|(h, _)| h == g)
        .map(|(_, l)| l)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_ball_counts() {
        let z = FreeAbelian::line();
        assert_eq!(group_ball(&z, 2).len(), 5);
        let z2 = FreeAbelian::grid();
        // |B(R)| in Z² is 2R²+2R+1.
        assert_eq!(group_ball(&z2, 2).len(), 13);
    }

    #[test]
    fn free_ball_counts() {
        // 1 + 4·(3^k − 1)/2 elements at radius k.
        let f = FreeGroup2;
        assert_eq!(group_ball(&f, 1).len(), 5);
        assert_eq!(group_ball(&f, 2).len(), 17);
    }

    #[test]
    fn bs12_relation_holds() {
        let bs = Bs12;
        let a = bs.generator(0);
        let b = bs.generator(1);
        // b⁻¹ a b = a².
        let lhs = bs.multiply(&bs.multiply(&bs.invert(&b), &a), &b);
        let a2 = bs.multiply(&a, &a);
        assert_eq!(lhs, a2);
        // b a b⁻¹ is not a power of a.
        let conj = bs.multiply(&bs.multiply(&b, &a), &bs.invert(&b));
        assert_eq!(conj.pow, 1);
    }

    #[test]
    fn bs12_express_roundtrip() {
        let bs = Bs12;
        for (g, _) in group_ball(&bs, 4) {
            let word = bs.express(&g);
            assert_eq!(bs.evaluate_word(&word), g);
        }
    }

    #[test]
    fn bs12_inverse_roundtrip() {
        let bs = Bs12;
        for (g, _) in group_ball(&bs, 3) {
            assert!(bs.is_identity(&bs.multiply(&g, &bs.invert(&g))));
        }
    }

    #[test]
    fn free_group_mixed_products() {
        let f = FreeGroup2;
        let x = f.generator(0);
        let y = f.generator(1);
        let w = f.multiply(&f.multiply(&x, &y), &f.invert(&y));
        assert_eq!(w, x);
    }
}
