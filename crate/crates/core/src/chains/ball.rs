//! Finite subcomplexes of a universal cover: all lifted cells whose group
//! element has word length ≤ R, plus boundary closure, with deterministic
//! ordering by normal form.

use super::complex::{EquivariantChain, EquivariantComplex};
use super::oracle::{group_ball, GroupOracle};
use crate::lp::FiniteBall;
use crate::Rat;
use std::collections::HashMap;

/// The (n, n+1)-dimensional slice of a ball in the universal cover, in the
/// layout the LP machinery consumes. Top cells are the (n+1)-cells based in
/// the ball; bottom cells are all n-cells their boundaries touch.
#[derive(Clone, Debug)]
pub struct CellBall<E: Ord + Clone> {
    pub dim_top: usize,
    pub radius: usize,
    pub top: Vec<(usize, E)>,
    pub bottom: Vec<(usize, E)>,
    pub bottom_index: HashMap<(usize, E), usize>,
    /// Per top cell: (bottom index, coefficient).
    pub incidence: Vec<Vec<(usize, Rat)>>,
    pub top_dist: Vec<usize>,
    pub bottom_dist: Vec<usize>,
    /// Bottom cells based inside the ball radius (not just in the closure).
    pub bottom_in_ball: Vec<bool>,
}

impl<E: Ord + Clone + std::hash::Hash + std::fmt::Debug> CellBall<E> {
    pub fn to_finite_ball<G: GroupOracle<Elem = E>>(&self, oracle: &G) -> FiniteBall {
        FiniteBall {
            top_labels: self
                .top
                .iter()
                .map(|(o, g)| format!("{}@{}", o, oracle.key(g)))
                .collect(),
            bottom_labels: self
                .bottom
                .iter()
                .map(|(o, g)| format!("{}@{}", o, oracle.key(g)))
                .collect(),
            incidence: self.incidence.clone(),
            bottom_interior: self.bottom_in_ball.clone(),
            top_dist: self.top_dist.clone(),
            bottom_dist: self.bottom_dist.clone(),
        }
    }

    /// Coefficient vector of a chain over the bottom cells; `None` when the
    /// chain has support outside them.
    pub fn bottom_vector(&self, chain: &EquivariantChain<E>) -> Option<Vec<Rat>> {
        let mut v = vec![Rat::from_integer(0.into()); self.bottom.len()];
        for ((orbit, g), c) in &chain.terms {
            let idx = self.bottom_index.get(&(*orbit, g.clone()))?;
            v[*idx] = c.clone();
        }
        Some(v)
    }
}

/// Extract the ball of radius R around the identity: cells (orbit, g) with
/// word_length(g) ≤ R in dimensions n and n+1, plus the boundary closure in
/// dimension n.
pub fn restrict_ball<G: GroupOracle>(
    cx: &EquivariantComplex<G>,
    dim_top: usize,
    radius: usize,
) -> CellBall<G::Elem> {
    assert!(dim_top >= 1 && dim_top <= cx.top_dim());
    let elements = group_ball(&cx.oracle, radius);
    let lengths: HashMap<G::Elem, usize> = elements.iter().cloned().collect();
    let mut top = Vec::new();
    let mut top_dist = Vec::new();
    for orbit in 0..cx.cells[dim_top].len() {
        for (g, l) in &elements {
            top.push((orbit, g.clone()));
            top_dist.push(*l);
        }
    }
    // Bottom closure: all n-cells based in the ball, plus any cell touched
    // by a top boundary.
    let mut bottom: Vec<(usize, G::Elem)> = Vec::new();
    let mut bottom_dist = Vec::new();
    let mut bottom_in_ball = Vec::new();
    let mut bottom_index: HashMap<(usize, G::Elem), usize> = HashMap::new();
    for orbit in 0..cx.cells[dim_top - 1].len() {
        for (g, l) in &elements {
            bottom_index.insert((orbit, g.clone()), bottom.len());
            bottom.push((orbit, g.clone()));
            bottom_dist.push(*l);
            bottom_in_ball.push(true);
        }
    }
    let mut incidence = Vec::with_capacity(top.len());
    for (orbit, g) in &top {
        let bnd = cx.boundary_of_cell(dim_top, *orbit, g);
        let mut row = Vec::new();
        for ((o, h), c) in &bnd.terms {
            let idx = match bottom_index.get(&(*o, h.clone())) {
                Some(&i) => i,
                None => {
                    let i = bottom.len();
                    bottom_index.insert((*o, h.clone()), i);
                    bottom.push((*o, h.clone()));
                    bottom_dist.push(lengths.get(h).copied().unwrap_or(radius + 1));
                    bottom_in_ball.push(lengths.contains_key(h));
                    i
                }
            };
            row.push((idx, c.clone()));
        }
        incidence.push(row);
    }
    CellBall {
        dim_top,
        radius,
        top,
        bottom,
        bottom_index,
        incidence,
        top_dist,
        bottom_dist,
        bottom_in_ball,
    }
}

/// Count of cells based strictly inside the ball, per dimension of the
/// (n, n+1) slice: (vertices-like, edges-like) for presentation complexes.
pub fn ball_cell_counts<G: GroupOracle>(
    cx: &EquivariantComplex<G>,
    radius: usize,
) -> Vec<usize> {
    let elements = group_ball(&cx.oracle, radius);
    cx.cells.iter().map(|orbits| orbits.len() * elements.len()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chains::library;

    #[test]
    fn line_ball_counts() {
        // R=2 on Z: 5 vertices, 5 edges based in the ball.
        let cx = library::line_complex();
        let ball = restrict_ball(&cx, 1, 2);
        assert_eq!(ball.top.len(), 5);
        // Closure adds the vertex at +3.
        assert_eq!(ball.bottom.len(), 6);
        let in_ball = ball.bottom_in_ball.iter().filter(|&&b| b).count();
        assert_eq!(in_ball, 5);
    }

    #[test]
    fn free_group_ball_counts() {
        // R=2 on the F₂ Cayley graph: 17 vertices; edges based in the ball.
        let cx = library::free2_complex();
        let ball = restrict_ball(&cx, 1, 2);
        let vertices = ball.bottom_in_ball.iter().filter(|&&b| b).count();
        assert_eq!(vertices, 17);
        assert_eq!(ball.top.len(), 2 * 17);
    }

    #[test]
    fn grid_ball_closure() {
        let cx = library::grid_complex();
        let ball = restrict_ball(&cx, 2, 1);
        // 2-cells at the 5 ball elements; every square's edges in closure.
        assert_eq!(ball.top.len(), 5);
        for row in &ball.incidence {
            assert_eq!(row.len(), 4);
        }
    }
}
