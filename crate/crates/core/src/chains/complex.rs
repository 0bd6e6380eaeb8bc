//! Equivariant cellular chain complexes: orbit cells per dimension with
//! group-ring boundary matrices, chains in a universal cover, and the
//! ∂∘∂ = 0 validation gate.

use super::oracle::{GroupOracle, Letter};
use crate::Rat;
use num_traits::Zero;
use std::collections::BTreeMap;

/// Formal Q-linear combination of group elements.
pub type GroupRing<E> = Vec<(E, Rat)>;

pub fn ring_normalize<E: Ord + Clone>(terms: GroupRing<E>) -> GroupRing<E> {
    let mut map: BTreeMap<E, Rat> = BTreeMap::new();
    for (g, c) in terms {
        let entry = map.entry(g).or_insert_with(Rat::zero);
        *entry = entry.clone() + c;
    }
    map.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// Cellular chain supported in one dimension of the universal cover:
/// finitely many (orbit cell, group element) pairs with rational
/// coefficients; zero coefficients are absent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantChain<E: Ord + Clone> {
    pub dim: usize,
    pub terms: BTreeMap<(usize, E), Rat>,
}

impl<E: Ord + Clone> EquivariantChain<E> {
    pub fn zero(dim: usize) -> Self {
        EquivariantChain { dim, terms: BTreeMap::new() }
    }

    pub fn single(dim: usize, orbit: usize, g: E, coeff: Rat) -> Self {
        let mut c = Self::zero(dim);
        c.add_term(orbit, g, coeff);
        c
    }

    pub fn add_term(&mut self, orbit: usize, g: E, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let key = (orbit, g);
        let entry = self.terms.entry(key.clone()).or_insert_with(Rat::zero);
        *entry = entry.clone() + coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim);
        let mut out = self.clone();
        for ((orbit, g), c) in &rhs.terms {
            out.add_term(*orbit, g.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        EquivariantChain {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rat::from_integer(1.into()))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Cellular volume: ℓ¹ norm of the coefficients.
    pub fn volume(&self) -> Rat {
        self.terms
            .values()
            .map(|c| {
                let mut a = c.clone();
                if a < Rat::zero() {
                    a = -a;
                }
                a
            })
            .fold(Rat::zero(), |a, b| a + b)
    }

    /// Number of distinct support cells on which two chains differ.
    pub fn support_difference(&self, rhs: &Self) -> usize {
        self.sub(rhs).terms.len()
    }
}

/// Orbit cells per dimension plus group-ring boundary matrices.
#[derive(Clone, Debug)]
pub struct EquivariantComplex<G: GroupOracle> {
    pub oracle: G,
    /// Cell names per dimension.
    pub cells: Vec<Vec<String>>,
    /// `boundaries[d][cell] = [(cell in dim d−1, group-ring coefficient)]`.
    pub boundaries: Vec<Vec<Vec<(usize, GroupRing<G::Elem>)>>>,
}

#[derive(Debug, Clone)]
pub struct ValidationFailure {
    pub dim: usize,
    pub cell: String,
    /// The nonzero composite ∂∂ chain that witnesses the failure.
    pub witness_terms: usize,
}

impl<G: GroupOracle> EquivariantComplex<G> {
    pub fn new(
        oracle: G,
        cells: Vec<Vec<String>>,
        boundaries: Vec<Vec<Vec<(usize, GroupRing<G::Elem>)>>>,
    ) -> Self {
        assert_eq!(cells.len(), boundaries.len());
        for d in 0..cells.len() {
            assert_eq!(cells[d].len(), boundaries[d].len());
        }
        EquivariantComplex { oracle, cells, boundaries }
    }

    pub fn top_dim(&self) -> usize {
        self.cells.len() - 1
    }

    pub fn cell_index(&self, dim: usize, name: &str) -> Option<usize> {
        self.cells[dim].iter().position(|c| c == name)
    }

    /// Boundary of a single lifted cell g·e.
    pub fn boundary_of_cell(&self, dim: usize, orbit: usize, g: &G::Elem) -> EquivariantChain<G::Elem> {
        let mut out = EquivariantChain::zero(dim - 1);
        for (target, ring) in &self.boundaries[dim][orbit] {
            for (h, c) in ring {
                out.add_term(*target, self.oracle.multiply(g, h), c.clone());
            }
        }
        out
    }

    pub fn boundary(&self, chain: &EquivariantChain<G::Elem>) -> EquivariantChain<G::Elem> {
        assert!(chain.dim >= 1);
        let mut out = EquivariantChain::zero(chain.dim - 1);
        for ((orbit, g), c) in &chain.terms {
            let cell_boundary = self.boundary_of_cell(chain.dim, *orbit, g);
            out = out.add(&cell_boundary.scale(c));
        }
        out
    }

    /// Assert ∂∘∂ = 0 on every orbit representative; the first failing cell
    /// is reported with its composite chain.
    pub fn validate(&self) -> Result<(), ValidationFailure> {
        for d in 2..self.cells.len() {
            for orbit in 0..self.cells[d].len() {
                let dd = self.boundary(&self.boundary_of_cell(d, orbit, &self.oracle.identity()));
                if !dd.is_zero() {
                    return Err(ValidationFailure {
                        dim: d,
                        cell: self.cells[d][orbit].clone(),
                        witness_terms: dd.terms.len(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Chain evaluation: pushforward to the base complex by summing
    /// coefficients over each orbit.
    pub fn chain_evaluation(&self, chain: &EquivariantChain<G::Elem>) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.cells[chain.dim].len()];
        for ((orbit, _), c) in &chain.terms {
            out[*orbit] = out[*orbit].clone() + c.clone();
        }
        out
    }

    /// Base-complex boundary matrix from dimension d to d−1 (pushforward of
    /// the group-ring entries).
    pub fn base_boundary_matrix(&self, d: usize) -> crate::QMatrix {
        let rows = self.cells[d - 1].len();
        let cols = self.cells[d].len();
        let mut m = crate::QMatrix::zero(rows, cols);
        for (j, cell) in self.boundaries[d].iter().enumerate() {
            for (target, ring) in cell {
                for (_, c) in ring {
                    m[(*target, j)] = m[(*target, j)].clone() + c.clone();
                }
            }
        }
        m
    }

    /// Translate a chain by a group element on the left.
    pub fn translate(&self, g: &G::Elem, chain: &EquivariantChain<G::Elem>) -> EquivariantChain<G::Elem> {
        let mut out = EquivariantChain::zero(chain.dim);
        for ((orbit, h), c) in &chain.terms {
            out.add_term(*orbit, self.oracle.multiply(g, h), c.clone());
        }
        out
    }

    /// The 1-cycle traced by a word based at the identity vertex, in a
    /// complex whose dimension-0/1 cells come from a presentation.
    pub fn word_cycle(&self, word: &[Letter]) -> EquivariantChain<G::Elem> {
        let mut out = EquivariantChain::zero(1);
        let mut at = self.oracle.identity();
        for &(gen, e) in word {
            let step = self.oracle.generator(gen);
            let reps = e.unsigned_abs();
            for _ in 0..reps {
                if e >= 0 {
                    out.add_term(gen, at.clone(), Rat::from_integer(1.into()));
                    at = self.oracle.multiply(&at, &step);
                } else {
                    at = self.oracle.multiply(&at, &self.oracle.invert(&step));
                    out.add_term(gen, at.clone(), -Rat::from_integer(1.into()));
                }
            }
        }
        out
    }
}

/// Fox derivative of a relator word with respect to one generator,
/// evaluated in the group: ∂(uv)/∂x = ∂u/∂x + u·∂v/∂x with ∂x/∂x = 1 and
/// ∂x⁻¹/∂x = −x⁻¹.
pub fn fox_derivative<G: GroupOracle>(
    oracle: &G,
    relator: &[Letter],
    gen: usize,
) -> GroupRing<G::Elem> {
    let mut terms: GroupRing<G::Elem> = Vec::new();
    let mut prefix = oracle.identity();
    for &(g, e) in relator {
        let step_gen = oracle.generator(g);
        let reps = e.unsigned_abs();
        for _ in 0..reps {
            if e >= 0 {
                if g == gen {
                    terms.push((prefix.clone(), Rat::from_integer(1.into())));
                }
                prefix = oracle.multiply(&prefix, &step_gen);
            } else {
                prefix = oracle.multiply(&prefix, &oracle.invert(&step_gen));
                if g == gen {
                    terms.push((prefix.clone(), -Rat::from_integer(1.into())));
                }
            }
        }
    }
    ring_normalize(terms)
}

/// Presentation complex of ⟨generators | relators⟩: one vertex, one edge
/// per generator with ∂e_x = (x − 1)v, one 2-cell per relator with the Fox
/// boundary. ∂∘∂ = 0 holds exactly iff every relator is trivial in the
/// oracle's group.
pub fn presentation_complex<G: GroupOracle>(
    oracle: G,
    relators: Vec<(String, Vec<Letter>)>,
) -> EquivariantComplex<G> {
    let gen_names = oracle.generator_names();
    let n_gens = gen_names.len();
    let mut boundaries = vec![vec![vec![]]];
    let mut edge_bnd = Vec::new();
    for g in 0..n_gens {
        let x = oracle.generator(g);
        edge_bnd.push(vec![(
            0usize,
            vec![
                (x, Rat::from_integer(1.into())),
                (oracle.identity(), -Rat::from_integer(1.into())),
            ],
        )]);
    }
    boundaries.push(edge_bnd);
    let mut rel_bnd = Vec::new();
    let mut rel_names = Vec::new();
    for (name, rel) in &relators {
        assert!(
            oracle.is_identity(&oracle.evaluate_word(rel)),
            "relator {name} is not trivial in the group"
        );
        let mut row = Vec::new();
        for g in 0..n_gens {
            let d = fox_derivative(&oracle, rel, g);
            if !d.is_empty() {
                row.push((g, d));
            }
        }
        rel_bnd.push(row);
        rel_names.push(name.clone());
    }
    let mut cells = vec![vec!["v".to_string()], gen_names];
    let mut all_bnd = boundaries;
    if !relators.is_empty() {
        cells.push(rel_names);
        all_bnd.push(rel_bnd);
    }
    EquivariantComplex::new(oracle, cells, all_bnd)
}

/// Chain volume as an integer when all coefficients are integral.
pub fn integral_volume<E: Ord + Clone>(c: &EquivariantChain<E>) -> Option<crate::Int> {
    let v = c.volume();
    v.is_integer().then(|| v.numer().clone())
}
