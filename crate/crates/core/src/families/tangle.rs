use std::collections::HashMap;

use crate::diagram::{Crossing, LinkDiagram, PdCode};
use crate::util::UnionFind;

/// Four boundary arcs of a tangle in a disk.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Tangle {
    nw: u32,
    ne: u32,
    sw: u32,
    se: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Twist {
    /// Crossing added on the right: fraction `F -> F + 1`.
    Horizontal,
    /// Crossing added underneath: `1/F -> 1/F + 1`.
    Vertical,
}

/// Assembles diagrams from crossings and arc identifications; labels are
/// merged and renumbered when the diagram is finished.
#[derive(Default)]
pub(crate) struct TangleBuilder {
    next: u32,
    crossings: Vec<Crossing>,
    joins: Vec<(u32, u32)>,
}

impl TangleBuilder {
    fn fresh(&mut self) -> u32 {
        self.next += 1;
        self.next
    }

    /// Single crossing whose under-strand runs SW to NE (`positive`) or
    /// SE to NW.
    pub fn crossing(&mut self, positive: bool) -> Tangle {
        let (sw, se, ne, nw) = (self.fresh(), self.fresh(), self.fresh(), self.fresh());
        self.crossings.push(if positive { [sw, se, ne, nw] } else { [se, ne, nw, sw] });
        Tangle { nw, ne, sw, se }
    }

    /// Fraction 0: arcs NW–NE and SW–SE.
    pub fn zero(&mut self) -> Tangle {
        let (top, bottom) = (self.fresh(), self.fresh());
        Tangle { nw: top, ne: top, sw: bottom, se: bottom }
    }

    /// Fraction ∞: arcs NW–SW and NE–SE.
    pub fn infinity(&mut self) -> Tangle {
        let (left, right) = (self.fresh(), self.fresh());
        Tangle { nw: left, sw: left, ne: right, se: right }
    }

    /// `t + s`, side by side.
    pub fn add(&mut self, t: Tangle, s: Tangle) -> Tangle {
        self.joins.push((t.ne, s.nw));
        self.joins.push((t.se, s.sw));
        Tangle { nw: t.nw, sw: t.sw, ne: s.ne, se: s.se }
    }

    /// `t` on top of `s`.
    pub fn stack(&mut self, t: Tangle, s: Tangle) -> Tangle {
        self.joins.push((t.sw, s.nw));
        self.joins.push((t.se, s.ne));
        Tangle { nw: t.nw, ne: t.ne, sw: s.sw, se: s.se }
    }

    pub fn twist(&mut self, mut t: Tangle, dir: Twist, count: i64) -> Tangle {
        for _ in 0..count.unsigned_abs() {
            let x = self.crossing(count > 0);
            t = match dir {
                Twist::Horizontal => self.add(t, x),
                Twist::Vertical => self.stack(t, x),
            };
        }
        t
    }

    /// Applies twist runs in order, starting from the trivial tangle that the
    /// first run leaves unchanged (0 before horizontal, ∞ before vertical).
    pub fn twists(&mut self, runs: &[(Twist, i64)]) -> Tangle {
        let mut t = match runs.iter().find(|r| r.1 != 0) {
            Some((Twist::Vertical, _)) => self.infinity(),
            _ => self.zero(),
        };
        for &(dir, n) in runs {
            t = self.twist(t, dir, n);
        }
        t
    }

    /// Rational tangle of fraction `p/q` (`q > 0`) from the regular
    /// continued fraction of `|p|/q`, every crossing of the sign of `p`.
    pub fn rational(&mut self, p: i64, q: i64) -> Tangle {
        assert!(q > 0);
        if p == 0 {
            return self.zero();
        }
        let sign = p.signum();
        let mut terms = Vec::new();
        let (mut a, mut b) = (p.abs(), q);
        while b != 0 {
            terms.push(a / b);
            (a, b) = (b, a % b);
        }
        // term j is horizontal for even j; innermost first
        let runs: Vec<(Twist, i64)> = terms
            .iter()
            .enumerate()
            .rev()
            .map(|(j, &c)| (if j % 2 == 0 { Twist::Horizontal } else { Twist::Vertical }, sign * c))
            .collect();
        self.twists(&runs)
    }

    pub fn close_numerator(mut self, t: Tangle) -> LinkDiagram {
        self.joins.push((t.nw, t.ne));
        self.joins.push((t.sw, t.se));
        self.finish()
    }

    #[cfg_attr(not(test), allow(dead_code))]
    pub fn close_denominator(mut self, t: Tangle) -> LinkDiagram {
        self.joins.push((t.nw, t.sw));
        self.joins.push((t.ne, t.se));
        self.finish()
    }

    fn finish(self) -> LinkDiagram {
        let n = self.next as usize + 1;
        let mut uf = UnionFind::new(n);
        for (a, b) in self.joins {
            uf.union(a as usize, b as usize);
        }
        let mut relabel: HashMap<usize, u32> = HashMap::new();
        let crossings: Vec<Crossing> = self
            .crossings
            .iter()
            .map(|x| {
                x.map(|l| {
                    let r = uf.find(l as usize);
                    let next = relabel.len() as u32 + 1;
                    *relabel.entry(r).or_insert(next)
                })
            })
            .collect();
        let all_roots: Vec<usize> = (1..n).map(|l| uf.find(l)).collect();
        let mut loops: Vec<usize> = all_roots.into_iter().filter(|r| !relabel.contains_key(r)).collect();
        loops.sort_unstable();
        loops.dedup();
        let pd = PdCode::new(crossings).expect("tangle assembly keeps every arc two-ended");
        LinkDiagram::new(pd, loops.len() as u32)
    }
}
