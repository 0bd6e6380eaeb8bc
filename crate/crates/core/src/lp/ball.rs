//! Finite balls: the cell data the duality LP runs on, plus direct builders
//! for the standard test geometries.

use super::norm::PolyhedralNorm;
use crate::{rat, Rat};

/// A finite piece of a complex, holding the (n+1)-cells that meet a ball,
/// the n-cells incident to them, and the incidence coefficients `∂_j e_i`.
///
/// `top` cells are the ones carrying the cochain ω in the cochain direction
/// (they are all constrained); `bottom` cells carry the unknown primitive.
/// In the transposed (chain) direction the unknown lives on `top` and the
/// target chain on `bottom`, with constraints imposed only on bottom cells
/// marked interior.
#[derive(Clone, Debug)]
pub struct FiniteBall {
    pub top_labels: Vec<String>,
    pub bottom_labels: Vec<String>,
    /// Per top cell: sparse boundary row (bottom index, coefficient).
    pub incidence: Vec<Vec<(usize, Rat)>>,
    /// Whether a bottom cell has its full star inside the ball.
    pub bottom_interior: Vec<bool>,
    /// Distance of each top cell from the basepoint (for weighted norms).
    pub top_dist: Vec<usize>,
    /// Distance of each bottom cell from the basepoint.
    pub bottom_dist: Vec<usize>,
}

impl FiniteBall {
    pub fn n_top(&self) -> usize {
        self.top_labels.len()
    }

    pub fn n_bottom(&self) -> usize {
        self.bottom_labels.len()
    }

    /// One copy of the same norm for every bottom cell.
    pub fn uniform_norms(&self, n: &PolyhedralNorm) -> Vec<PolyhedralNorm> {
        vec![n.clone(); self.n_bottom()]
    }

    /// Incidence transposed: per bottom cell, the incident top cells.
    pub fn coincidence(&self) -> Vec<Vec<(usize, Rat)>> {
        let mut t = vec![Vec::new(); self.n_bottom()];
        for (i, row) in self.incidence.iter().enumerate() {
            for (j, c) in row {
                t[*j].push((i, c.clone()));
            }
        }
        t
    }
}

/// Ball of the unit-square grid of Z²: 2-cells (squares) on top, 1-cells
/// (edges) on the bottom. The radius-R ball is the R×R block of squares
/// centered at the basepoint cell, the cells meeting a metric ball around
/// the basepoint.
pub fn ball_grid(radius: usize) -> FiniteBall {
    let lo = -((radius as i64 - 1) / 2 + (radius as i64 - 1) % 2);
    let hi = (radius as i64 - 1) / 2;
    let mut top_labels = Vec::new();
    let mut top_dist = Vec::new();
    let mut bottom_labels = Vec::new();
    let mut bottom_dist = Vec::new();
    let mut bottom_index = std::collections::HashMap::new();
    let mut incidence = Vec::new();
    let edge = |labels: &mut Vec<String>,
                    dists: &mut Vec<usize>,
                    index: &mut std::collections::HashMap<String, usize>,
                    dir: char,
                    x: i64,
                    y: i64|
     -> usize {
        let label = format!("{dir}({x},{y})");
        *index.entry(label.clone()).or_insert_with(|| {
            labels.push(label);
            dists.push((x.unsigned_abs() + y.unsigned_abs()) as usize);
            labels.len() - 1
        })
    };
    for x in lo..=hi {
        for y in lo..=hi {
            // Square [x,x+1]×[y,y+1]; boundary = bottom + right − top − left.
            top_labels.push(format!("sq({x},{y})"));
            top_dist.push((x.unsigned_abs() + y.unsigned_abs()) as usize);
            let bot = edge(&mut bottom_labels, &mut bottom_dist, &mut bottom_index, 'h', x, y);
            let right = edge(&mut bottom_labels, &mut bottom_dist, &mut bottom_index, 'v', x + 1, y);
            let top_e = edge(&mut bottom_labels, &mut bottom_dist, &mut bottom_index, 'h', x, y + 1);
            let left = edge(&mut bottom_labels, &mut bottom_dist, &mut bottom_index, 'v', x, y);
            incidence.push(vec![
                (bot, rat(1)),
                (right, rat(1)),
                (top_e, rat(-1)),
                (left, rat(-1)),
            ]);
        }
    }
    let bottom_interior = vec![true; bottom_labels.len()];
    FiniteBall {
        top_labels,
        bottom_labels,
        incidence,
        bottom_interior,
        top_dist,
        bottom_dist,
    }
}

/// Ball of the simplicial line Z: 1-cells (edges) on top, 0-cells (vertices)
/// on the bottom. Edge from k to k+1 is in the ball when |k| ≤ R.
pub fn ball_line(radius: usize) -> FiniteBall {
    let r = radius as i64;
    let mut top_labels = Vec::new();
    let mut top_dist = Vec::new();
    let mut bottom_labels = Vec::new();
    let mut bottom_dist = Vec::new();
    let mut incidence = Vec::new();
    let vid = |k: i64| (k + r) as usize;
    for k in -r..=r + 1 {
        bottom_labels.push(format!("v({k})"));
        bottom_dist.push(k.unsigned_abs() as usize);
    }
    for k in -r..=r {
        top_labels.push(format!("e({k})"));
        top_dist.push(k.unsigned_abs() as usize);
        incidence.push(vec![(vid(k + 1), rat(1)), (vid(k), rat(-1))]);
    }
    // A vertex is interior when both its edges are present.
    let bottom_interior = (-r..=r + 1)
        .map(|k| k > -r && k <= r)
        .collect();
    FiniteBall {
        top_labels,
        bottom_labels,
        incidence,
        bottom_interior,
        top_dist,
        bottom_dist,
    }
}

/// Ball of the 3-regular tree: edges on top, vertices on the bottom.
/// Vertices are reduced words over {1,2,3} with no immediate repetition, up
/// to depth R+1; edges join a depth-d vertex to its children, included when
/// the parent has depth ≤ R. Vertices of depth ≤ R are interior.
pub fn ball_tree3(radius: usize) -> FiniteBall {
    let mut bottom_labels = Vec::new();
    let mut bottom_dist = Vec::new();
    let mut top_labels = Vec::new();
    let mut top_dist = Vec::new();
    let mut incidence = Vec::new();
    // Enumerate vertices breadth-first.
    let mut verts: Vec<Vec<u8>> = vec![Vec::new()];
    let mut head = 0usize;
    while head < verts.len() {
        let w = verts[head].clone();
        if w.len() <= radius {
            for letter in 1u8..=3 {
                if w.last() == Some(&letter) {
                    continue;
                }
                let mut child = w.clone();
                child.push(letter);
                verts.push(child);
            }
        }
        head += 1;
    }
    let label = |w: &[u8]| {
        if w.is_empty() {
            "*".to_string()
        } else {
            w.iter().map(|d| d.to_string()).collect::<String>()
        }
    };
    let mut index = std::collections::HashMap::new();
    for w in &verts {
        index.insert(w.clone(), bottom_labels.len());
        bottom_labels.push(label(w));
        bottom_dist.push(w.len());
    }
    for w in &verts {
        if w.len() > radius {
            continue;
        }
        for letter in 1u8..=3 {
            if w.last() == Some(&letter) {
                continue;
            }
            let mut child = w.clone();
            child.push(letter);
            let ci = index[&child];
            let pi = index[w.as_slice()];
            top_labels.push(format!("{}-{}", label(w), label(&child)));
            top_dist.push(w.len());
            incidence.push(vec![(ci, rat(1)), (pi, rat(-1))]);
        }
    }
    let bottom_interior = verts.iter().map(|w| w.len() <= radius).collect();
    FiniteBall {
        top_labels,
        bottom_labels,
        incidence,
        bottom_interior,
        top_dist,
        bottom_dist,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_ball_counts() {
        let b = ball_grid(3);
        assert_eq!(b.n_top(), 9);
        assert_eq!(b.n_bottom(), 2 * 3 * 4);
        assert_eq!(ball_grid(5).n_top(), 25);
        // Every square has 4 boundary edges.
        assert!(b.incidence.iter().all(|row| row.len() == 4));
    }

    #[test]
    fn line_ball_counts() {
        let b = ball_line(2);
        assert_eq!(b.n_top(), 5);
        assert_eq!(b.n_bottom(), 6);
    }

    #[test]
    fn tree_ball_shells() {
        let b = ball_tree3(2);
        // 1 + 3 + 6 + 12 vertices, 3 + 6 + 12 edges.
        assert_eq!(b.n_bottom(), 22);
        assert_eq!(b.n_top(), 21);
        let interior = b.bottom_interior.iter().filter(|&&x| x).count();
        assert_eq!(interior, 10);
    }
}
