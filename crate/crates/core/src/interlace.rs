//! Interlacement graphs of chord diagrams.
//!
//! Vertices are chords; two chords are adjacent exactly when they interleave
//! around the circle. The adjacency lives in a [`Gf2Matrix`] so the parity
//! machinery can work on it directly; edge lists are derived views.

use crate::codec::{ChordDiagram, GaussCode};
use crate::gf2::Gf2Matrix;

/// Simple graph on the chords of a diagram; adjacency means interleaving.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InterlacementGraph {
    adj: Gf2Matrix,
}

impl InterlacementGraph {
    pub fn from_diagram(d: &ChordDiagram) -> Self {
        let n = d.chord_count();
        let mut adj = Gf2Matrix::zero(n);
        for i in 0..n {
            let (a, b) = d.chord(i);
            for j in i + 1..n {
                let (c, e) = d.chord(j);
                // exactly one endpoint of chord j strictly inside (a, b)
                let inside = |x: u16| a < x && x < b;
                if inside(c) != inside(e) {
                    adj.set(i, j, true);
                    adj.set(j, i, true);
                }
            }
        }
        InterlacementGraph { adj }
    }

    pub fn from_code(c: &GaussCode) -> Self {
        Self::from_diagram(&c.to_diagram())
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.dim()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj.get(i, j)
    }

    pub fn degree(&self, i: usize) -> usize {
        let n = self.vertex_count();
        (0..n).filter(|&j| self.adj.get(i, j)).count()
    }

    /// Degree parity of `i`, cheaper than [`Self::degree`].
    pub fn degree_parity(&self, i: usize) -> bool {
        self.adj.row_weight_parity(i)
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let n = self.vertex_count();
        (0..n).filter(move |&j| self.adj.get(i, j))
    }

    /// Edges as pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertex_count();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.adj.get(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn adjacency_matrix(&self) -> &Gf2Matrix {
        &self.adj
    }

    /// Parity of the number of common neighbors of `i` and `j`; equals the
    /// `(i, j)` entry of `M^2` over GF(2).
    pub fn common_neighbor_parity(&self, i: usize, j: usize) -> bool {
        self.adj.row_dot_parity(i, j)
    }

    /// Whether the graph is connected (vacuously true when empty). A chord
    /// diagram has a connected interlacement graph exactly when it is not a
    /// join of two smaller diagrams.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == n
    }

    pub fn weighted(&self) -> WeightedInterlacementGraph {
        WeightedInterlacementGraph::new(self.clone())
    }
}

/// Interlacement graph with the edge weight `w(i, j) = <m_i, m_j>`: the
/// common-neighbor parity of the endpoints.
#[derive(Clone, Debug)]
pub struct WeightedInterlacementGraph {
    base: InterlacementGraph,
    omega: Gf2Matrix,
}

impl WeightedInterlacementGraph {
    pub fn new(base: InterlacementGraph) -> Self {
        let n = base.vertex_count();
        let mut omega = Gf2Matrix::zero(n);
        for i in 0..n {
            for j in i + 1..n {
                if base.has_edge(i, j) && base.common_neighbor_parity(i, j) {
                    omega.set(i, j, true);
                    omega.set(j, i, true);
                }
            }
        }
        WeightedInterlacementGraph { base, omega }
    }

    pub fn base(&self) -> &InterlacementGraph {
        &self.base
    }

    /// Weight of the edge `(i, j)`; `None` when the vertices are not adjacent.
    pub fn weight(&self, i: usize, j: usize) -> Option<bool> {
        self.base.has_edge(i, j).then(|| self.omega.get(i, j))
    }

    /// Edges of weight 1, as pairs `(i, j)` with `i < j`.
    pub fn odd_edges(&self) -> Vec<(usize, usize)> {
        self.base
            .edges()
            .into_iter()
            .filter(|&(i, j)| self.omega.get(i, j))
            .collect()
    }
}
