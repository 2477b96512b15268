//! Planar diagram (PD) codes and the link diagrams built on them.
//!
//! A crossing is four arc labels listed counterclockwise, starting from the
//! incoming under-strand:
//!
//! ```text
//!        x[3]     x[2]
//!           \     /
//!            \   /
//!             \ /
//!              /        under-strand: x[0] -> x[2]
//!             / \       over-strand:  x[1] -- x[3]
//!            /   \
//!           /     \
//!        x[0]     x[1]
//! ```
//!
//! Positions 0 and 2 are always the under-strand and 1 and 3 the over-strand;
//! nothing here depends on orientation beyond that.

mod canon;
mod parse;
mod surgery;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::util::UnionFind;

pub use parse::parse_pd;
pub use surgery::Smoothing;

pub type Crossing = [u32; 4];

/// A half-edge end: (crossing index, position 0..4).
pub(crate) type Dart = (usize, usize);

/// Ordered list of crossings; every arc label occurs exactly twice.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Crossing>", into = "Vec<Crossing>")]
pub struct PdCode {
    crossings: Vec<Crossing>,
}

impl PdCode {
    pub fn new(crossings: Vec<Crossing>) -> Result<Self> {
        let mut counts: HashMap<u32, usize> = HashMap::new();
        for x in &crossings {
            for &l in x {
                if l == 0 {
                    return Err(Error::Value("arc labels must be positive".into()));
                }
                *counts.entry(l).or_default() += 1;
            }
        }
        let mut bad: Vec<_> = counts.into_iter().filter(|&(_, c)| c != 2).collect();
        bad.sort_unstable();
        if let Some(&(label, count)) = bad.first() {
            return Err(Error::Label { label, count });
        }
        Ok(Self { crossings })
    }

    /// Skips validation; callers guarantee the label invariant.
    pub(crate) fn new_unchecked(crossings: Vec<Crossing>) -> Self {
        debug_assert!(PdCode::new(crossings.clone()).is_ok());
        Self { crossings }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    pub fn max_label(&self) -> u32 {
        self.crossings.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Bracketed census form, `PD[X[..],X[..]]`.
    pub fn to_census_string(&self) -> String {
        let body: Vec<String> = self.crossings.iter().map(fmt_crossing).collect();
        format!("PD[{}]", body.join(","))
    }
}

impl TryFrom<Vec<Crossing>> for PdCode {
    type Error = Error;
    fn try_from(v: Vec<Crossing>) -> Result<Self> {
        PdCode::new(v)
    }
}

impl From<PdCode> for Vec<Crossing> {
    fn from(pd: PdCode) -> Self {
        pd.crossings
    }
}

fn fmt_crossing(x: &Crossing) -> String {
    format!("X[{},{},{},{}]", x[0], x[1], x[2], x[3])
}

impl fmt::Display for PdCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.crossings.iter().map(fmt_crossing).collect();
        f.write_str(&body.join(" "))
    }
}

/// A PD code plus a count of crossingless closed loops.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinkDiagram {
    pub pd: PdCode,
    pub free_loops: u32,
}

impl LinkDiagram {
    pub fn new(pd: PdCode, free_loops: u32) -> Self {
        Self { pd, free_loops }
    }

    pub fn from_crossings(crossings: Vec<Crossing>) -> Result<Self> {
        Ok(Self::new(PdCode::new(crossings)?, 0))
    }

    /// The crossingless unknot.
    pub fn unknot() -> Self {
        Self::new(PdCode::default(), 1)
    }

    /// `n` disjoint crossingless circles.
    pub fn unlink(n: u32) -> Self {
        Self::new(PdCode::default(), n)
    }

    pub fn crossing_count(&self) -> usize {
        self.pd.len()
    }

    pub fn crossings(&self) -> &[Crossing] {
        self.pd.crossings()
    }

    pub fn is_empty_unknot(&self) -> bool {
        self.pd.is_empty() && self.free_loops == 1
    }

    pub(crate) fn check_index(&self, index: usize) -> Result<()> {
        if index >= self.crossing_count() {
            return Err(Error::Index { index, len: self.crossing_count() });
        }
        Ok(())
    }

    /// Both ends of every arc label.
    pub(crate) fn arc_ends(&self) -> HashMap<u32, [Dart; 2]> {
        let mut ends: HashMap<u32, Vec<Dart>> = HashMap::new();
        for (c, x) in self.crossings().iter().enumerate() {
            for (p, &l) in x.iter().enumerate() {
                ends.entry(l).or_default().push((c, p));
            }
        }
        ends.into_iter().map(|(l, v)| (l, [v[0], v[1]])).collect()
    }

    /// For each dart, the dart at the other end of its arc.
    pub(crate) fn opposite_darts(&self) -> Vec<[Dart; 4]> {
        let ends = self.arc_ends();
        self.crossings()
            .iter()
            .enumerate()
            .map(|(c, x)| {
                let mut out = [(0, 0); 4];
                for p in 0..4 {
                    let [e0, e1] = ends[&x[p]];
                    out[p] = if e0 == (c, p) { e1 } else { e0 };
                }
                out
            })
            .collect()
    }

    /// Number of link components: strand-following orbits plus free loops.
    pub fn components(&self) -> usize {
        let n = self.pd.max_label() as usize + 1;
        let mut uf = UnionFind::new(n);
        for x in self.crossings() {
            uf.union(x[0] as usize, x[2] as usize);
            uf.union(x[1] as usize, x[3] as usize);
        }
        let labels = self.crossings().iter().flatten().map(|&l| l as usize);
        uf.count_roots(labels) + self.free_loops as usize
    }

    /// Connected components of the underlying 4-valent shadow (ignoring free loops).
    pub fn shadow_components(&self) -> usize {
        let n = self.crossing_count();
        if n == 0 {
            return 0;
        }
        let mut uf = UnionFind::new(n);
        for [a, b] in self.arc_ends().into_values() {
            uf.union(a.0, b.0);
        }
        uf.count_roots(0..n)
    }

    /// True when the drawing itself is disconnected (so the link is split).
    pub fn is_split(&self) -> bool {
        self.shadow_components() + self.free_loops as usize >= 2
    }

    /// Faces of the planar shadow, each a cycle of corners `(crossing, w)`
    /// where corner `w` is the wedge between positions `w` and `w + 1`.
    /// Returns the faces and, per crossing, the face index of each corner.
    pub(crate) fn faces(&self) -> (Vec<Vec<Dart>>, Vec<[usize; 4]>) {
        let opp = self.opposite_darts();
        let n = self.crossing_count();
        let mut face_of = vec![[usize::MAX; 4]; n];
        let mut faces = Vec::new();
        for c in 0..n {
            for w in 0..4 {
                if face_of[c][w] != usize::MAX {
                    continue;
                }
                let id = faces.len();
                let mut face = Vec::new();
                let (mut cc, mut ww) = (c, w);
                while face_of[cc][ww] == usize::MAX {
                    face_of[cc][ww] = id;
                    face.push((cc, ww));
                    (cc, ww) = opp[cc][(ww + 1) % 4];
                }
                faces.push(face);
            }
        }
        (faces, face_of)
    }

    /// Every arc runs from an over-position to an under-position.
    pub fn is_alternating(&self) -> bool {
        self.arc_ends()
            .values()
            .all(|[a, b]| a.1 % 2 != b.1 % 2)
    }

    /// No nugatory crossing: the four corners of each crossing lie in four
    /// distinct faces.
    pub fn is_reduced(&self) -> bool {
        let (_, face_of) = self.faces();
        face_of.iter().all(|f| {
            (0..4).all(|i| (i + 1..4).all(|j| f[i] != f[j]))
        })
    }

    /// Serialized form: the whitespace PD text; free loops cannot be written.
    pub fn serialize(&self) -> String {
        self.pd.to_string()
    }
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pd)?;
        if self.free_loops > 0 {
            if !self.pd.is_empty() {
                f.write_str(" ")?;
            }
            write!(f, "+{}O", self.free_loops)?;
        }
        Ok(())
    }
}

/// Standard fixtures used throughout the tests and examples.
pub mod fixtures {
    use super::*;

    pub const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
    pub const FIGURE_EIGHT: &str = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";
    pub const HOPF: &str = "X[4,1,3,2] X[2,3,1,4]";
    pub const ONE_CROSSING_UNKNOT: &str = "X[1,1,2,2]";

    pub fn trefoil() -> LinkDiagram {
        parse_pd(TREFOIL).expect("fixture")
    }

    pub fn figure_eight() -> LinkDiagram {
        parse_pd(FIGURE_EIGHT).expect("fixture")
    }

    pub fn hopf() -> LinkDiagram {
        parse_pd(HOPF).expect("fixture")
    }

    pub fn one_crossing_unknot() -> LinkDiagram {
        parse_pd(ONE_CROSSING_UNKNOT).expect("fixture")
    }
}
