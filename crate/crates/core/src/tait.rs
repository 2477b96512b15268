//! Checkerboard colorings, Tait graphs and spanning-tree counts.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::util::UnionFind;

/// Two-coloring of the faces of a connected shadow.
pub(crate) struct Checkerboard {
    pub face_count: usize,
    pub face_of: Vec<[usize; 4]>,
    /// `shaded[f]` for each face.
    pub shaded: Vec<bool>,
}

impl Checkerboard {
    /// Shading is anchored at the face on the left of the lowest-labelled arc,
    /// looking outward from its first occurrence.
    pub fn new(d: &LinkDiagram) -> Result<Self> {
        if d.crossing_count() == 0 || d.is_split() {
            return Err(Error::SplitDiagram);
        }
        let (faces, face_of) = d.faces();
        let nf = faces.len();
        // corners (c, w) and (c, w + 1) sit on opposite sides of one arc
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nf];
        for f in &face_of {
            for w in 0..4 {
                adj[f[w]].push(f[(w + 1) % 4]);
                adj[f[(w + 1) % 4]].push(f[w]);
            }
        }
        let lowest = d.crossings().iter().flatten().min().copied().unwrap();
        let (c0, p0) = d
            .crossings()
            .iter()
            .enumerate()
            .find_map(|(c, x)| x.iter().position(|&l| l == lowest).map(|p| (c, p)))
            .unwrap();
        let mut color: Vec<Option<bool>> = vec![None; nf];
        let root = face_of[c0][p0];
        color[root] = Some(true);
        let mut stack = vec![root];
        while let Some(f) = stack.pop() {
            let cf = color[f].unwrap();
            for &g in &adj[f] {
                match color[g] {
                    None => {
                        color[g] = Some(!cf);
                        stack.push(g);
                    }
                    Some(cg) if cg == cf => {
                        return Err(Error::Value("shadow is not checkerboard colorable (non-planar PD?)".into()))
                    }
                    _ => {}
                }
            }
        }
        Ok(Self {
            face_count: nf,
            face_of,
            shaded: color.into_iter().map(|c| c.unwrap_or(false)).collect(),
        })
    }

    /// Corner class `0` (wedges 0 and 2) or `1` (wedges 1 and 3) carrying the
    /// requested color at crossing `c`.
    pub fn corner_class(&self, c: usize, shaded: bool) -> usize {
        if self.shaded[self.face_of[c][0]] == shaded {
            0
        } else {
            1
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shading {
    /// The anchored color.
    Primary,
    /// The complementary color (planar dual graph).
    Dual,
}

/// Signed planar multigraph: one vertex per shaded face, one edge per crossing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaitGraph {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize, i8)>,
}

impl TaitGraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize, i8)>) -> Self {
        assert!(edges.iter().all(|&(u, v, _)| u < vertex_count && v < vertex_count));
        Self { vertex_count, edges }
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn laplacian(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.vertex_count);
        for &(u, v, _) in &self.edges {
            if u != v {
                m.add_to(u, u, 1);
                m.add_to(v, v, 1);
                m.add_to(u, v, -1);
                m.add_to(v, u, -1);
            }
        }
        m
    }

    fn component_count_without(&self, skip: Option<usize>) -> usize {
        let mut uf = UnionFind::new(self.vertex_count);
        for (i, &(u, v, _)) in self.edges.iter().enumerate() {
            if Some(i) != skip {
                uf.union(u, v);
            }
        }
        uf.count_roots(0..self.vertex_count)
    }
}

impl fmt::Display for TaitGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices {}", self.vertex_count)?;
        for &(u, v, s) in &self.edges {
            writeln!(f, "{u} {v} {}", if s > 0 { '+' } else { '-' })?;
        }
        Ok(())
    }
}

pub fn tait_graph(d: &LinkDiagram) -> Result<TaitGraph> {
    tait_graph_with(d, Shading::Primary)
}

pub fn tait_graph_with(d: &LinkDiagram, shading: Shading) -> Result<TaitGraph> {
    let board = Checkerboard::new(d)?;
    let want = shading == Shading::Primary;
    let mut index = vec![usize::MAX; board.face_count];
    let mut next = 0;
    for f in 0..board.face_count {
        if board.shaded[f] == want {
            index[f] = next;
            next += 1;
        }
    }
    let edges = (0..d.crossing_count())
        .map(|c| {
            let k = board.corner_class(c, want);
            let u = index[board.face_of[c][k]];
            let v = index[board.face_of[c][k + 2]];
            (u, v, if k == 0 { 1 } else { -1 })
        })
        .collect();
    Ok(TaitGraph::new(next, edges))
}

/// Matrix-Tree theorem on the unsigned Laplacian; loops are ignored.
pub fn spanning_tree_count(g: &TaitGraph) -> BigInt {
    if g.vertex_count <= 1 {
        return BigInt::one();
    }
    g.laplacian().minor(0).determinant()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphPredicates {
    pub connected: bool,
    pub has_loop: bool,
    pub has_bridge: bool,
    pub edge_count: usize,
}

pub fn graph_predicates(g: &TaitGraph) -> GraphPredicates {
    let base = g.component_count_without(None);
    let has_bridge = g
        .edges
        .iter()
        .enumerate()
        .filter(|(_, e)| e.0 != e.1)
        .any(|(i, _)| g.component_count_without(Some(i)) > base);
    GraphPredicates {
        connected: base <= 1,
        has_loop: g.edges.iter().any(|&(u, v, _)| u == v),
        has_bridge,
        edge_count: g.edge_count(),
    }
}
