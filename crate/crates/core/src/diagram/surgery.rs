use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{Crossing, LinkDiagram, PdCode};
use crate::error::{Error, Result};
use crate::util::UnionFind;

/// The two crossingless reconnections of a crossing.
///
/// `Zero` joins positions 0–3 and 1–2, `One` joins 0–1 and 2–3. On the
/// standard trefoil `Zero` yields the Hopf link and `One` the unknot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Smoothing {
    Zero,
    One,
}

impl Smoothing {
    fn joins(self) -> [(usize, usize); 2] {
        match self {
            Smoothing::Zero => [(0, 3), (1, 2)],
            Smoothing::One => [(0, 1), (2, 3)],
        }
    }
}

const PASS_THROUGH: [(usize, usize); 2] = [(0, 2), (1, 3)];

impl LinkDiagram {
    /// Deletes the given crossings, joining their arc ends pairwise as given,
    /// then renumbers labels densely. Strands that close up without any
    /// remaining crossing become free loops.
    fn excise(&self, removed: &[(usize, [(usize, usize); 2])]) -> LinkDiagram {
        let xs = self.crossings();
        let mut uf = UnionFind::new(self.pd.max_label() as usize + 1);
        let mut gone = vec![false; xs.len()];
        for &(c, joins) in removed {
            gone[c] = true;
            for (p, q) in joins {
                uf.union(xs[c][p] as usize, xs[c][q] as usize);
            }
        }
        let kept: Vec<Crossing> = xs
            .iter()
            .zip(&gone)
            .filter(|(_, g)| !**g)
            .map(|(x, _)| *x)
            .collect();

        let mut live = vec![false; uf_len(&self.pd)];
        for x in &kept {
            for &l in x {
                let r = uf.find(l as usize);
                live[r] = true;
            }
        }
        let touched: Vec<usize> = removed
            .iter()
            .flat_map(|&(c, _)| xs[c].iter().map(|&l| l as usize))
            .collect();
        let mut closed: Vec<usize> = touched.into_iter().map(|l| uf.find(l)).filter(|&r| !live[r]).collect();
        closed.sort_unstable();
        closed.dedup();

        let mut relabel: HashMap<usize, u32> = HashMap::new();
        let crossings = kept
            .iter()
            .map(|x| {
                x.map(|l| {
                    let r = uf.find(l as usize);
                    let next = relabel.len() as u32 + 1;
                    *relabel.entry(r).or_insert(next)
                })
            })
            .collect();
        LinkDiagram::new(PdCode::new_unchecked(crossings), self.free_loops + closed.len() as u32)
    }

    /// Dense renumbering by first appearance.
    pub fn relabeled(&self) -> LinkDiagram {
        self.excise(&[])
    }

    /// Replaces a crossing with one of its two smoothings.
    pub fn smooth(&self, index: usize, kind: Smoothing) -> Result<LinkDiagram> {
        self.check_index(index)?;
        Ok(self.excise(&[(index, kind.joins())]))
    }

    /// Connected sum along arc `arc1` of `self` and arc `arc2` of `other`.
    pub fn connected_sum(&self, arc1: u32, other: &LinkDiagram, arc2: u32) -> Result<LinkDiagram> {
        if self.pd.is_empty() || other.pd.is_empty() {
            return Err(Error::Value("connected sum needs two diagrams with crossings".into()));
        }
        let check = |d: &LinkDiagram, arc: u32| -> Result<()> {
            if !d.crossings().iter().flatten().any(|&l| l == arc) {
                return Err(Error::Index { index: arc as usize, len: d.pd.max_label() as usize });
            }
            Ok(())
        };
        check(self, arc1)?;
        check(other, arc2)?;

        let offset = self.pd.max_label();
        let fresh = offset + other.pd.max_label() + 1;
        let mut crossings: Vec<Crossing> = Vec::with_capacity(self.crossing_count() + other.crossing_count());
        // second end of arc1 gets the fresh label
        let mut seen = false;
        for x in self.crossings() {
            crossings.push(x.map(|l| {
                if l == arc1 {
                    let out = if seen { fresh } else { arc1 };
                    seen = true;
                    out
                } else {
                    l
                }
            }));
        }
        let mut seen = false;
        for x in other.crossings() {
            crossings.push(x.map(|l| {
                if l == arc2 {
                    let out = if seen { fresh } else { arc1 };
                    seen = true;
                    out
                } else {
                    l + offset
                }
            }));
        }
        let d = LinkDiagram::new(PdCode::new_unchecked(crossings), self.free_loops + other.free_loops);
        Ok(d.relabeled())
    }

    fn find_r1(&self) -> Option<usize> {
        self.crossings()
            .iter()
            .position(|x| (0..4).any(|p| x[p] == x[(p + 1) % 4]))
    }

    fn find_r2(&self) -> Option<(usize, usize)> {
        let (faces, _) = self.faces();
        faces.iter().find_map(|f| match f.as_slice() {
            &[(i, wi), (j, wj)] if i != j && (wi + 1) % 2 == wj % 2 => Some((i, j)),
            _ => None,
        })
    }

    /// Greedy Reidemeister I/II simplification to a fixpoint.
    pub fn reduce(&self) -> LinkDiagram {
        let mut d = self.clone();
        loop {
            if let Some(i) = d.find_r1() {
                d = d.excise(&[(i, PASS_THROUGH)]);
            } else if let Some((i, j)) = d.find_r2() {
                d = d.excise(&[(i, PASS_THROUGH), (j, PASS_THROUGH)]);
            } else {
                return d;
            }
        }
    }

    /// Replaces crossing `index` by a vertical column of `k` copies of itself,
    /// an alternating twist region whose `One` smoothing at any new crossing
    /// gives back the `One` smoothing of the original crossing.
    pub fn expand_crossing_to_integer_tangle(&self, index: usize, k: usize) -> Result<LinkDiagram> {
        self.check_index(index)?;
        if k == 0 {
            return Err(Error::Value("twist length k must be at least 1".into()));
        }
        let [a, b, c, d] = self.crossings()[index];
        let mut next = self.pd.max_label();
        let mut fresh = || {
            next += 1;
            next
        };
        // column positions: 0 = SW, 1 = SE, 2 = NE, 3 = NW; crossing i's top
        // (NW, NE) meets crossing i+1's bottom (SW, SE)
        let mut column: Vec<Crossing> = Vec::with_capacity(k);
        let (mut sw, mut se) = (a, b);
        for i in 0..k {
            let (ne, nw) = if i + 1 == k { (c, d) } else { (fresh(), fresh()) };
            column.push([sw, se, ne, nw]);
            (sw, se) = (nw, ne);
        }
        let mut crossings = self.crossings().to_vec();
        crossings.splice(index..=index, column);
        Ok(LinkDiagram::new(PdCode::new_unchecked(crossings), self.free_loops).relabeled())
    }
}

fn uf_len(pd: &PdCode) -> usize {
    pd.max_label() as usize + 1
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::parse_pd;
    use super::*;

    #[test]
    fn smoothing_one_crossing_unknot() {
        let u = one_crossing_unknot();
        let s0 = u.smooth(0, Smoothing::Zero).unwrap();
        let s1 = u.smooth(0, Smoothing::One).unwrap();
        assert_eq!((s0.crossing_count(), s0.components()), (0, 1));
        assert_eq!((s1.crossing_count(), s1.components()), (0, 2));
        assert!(matches!(u.smooth(1, Smoothing::Zero), Err(Error::Index { .. })));
    }

    #[test]
    fn trefoil_smoothings() {
        let t = trefoil();
        for i in 0..3 {
            let s0 = t.smooth(i, Smoothing::Zero).unwrap();
            assert_eq!(s0.components(), 2);
            assert_eq!(s0.reduce().crossing_count(), 2);
            let s1 = t.smooth(i, Smoothing::One).unwrap();
            assert_eq!(s1.components(), 1);
            assert!(s1.reduce().is_empty_unknot());
        }
    }

    #[test]
    fn smoothing_keeps_labels_dense() {
        let s = figure_eight().smooth(2, Smoothing::Zero).unwrap();
        let mut labels: Vec<u32> = s.crossings().iter().flatten().copied().collect();
        labels.sort_unstable();
        labels.dedup();
        assert_eq!(labels, (1..=6).collect::<Vec<_>>());
    }

    #[test]
    fn reduce_r1() {
        assert_eq!(one_crossing_unknot().reduce(), LinkDiagram::unknot());
        let kinks = parse_pd("X[1,1,2,3] X[2,4,4,3]").unwrap();
        assert_eq!(kinks.reduce(), LinkDiagram::unknot());
    }

    #[test]
    fn reduce_r2() {
        // two circles, one pushed under the other
        let r2 = parse_pd("X[1,3,2,4] X[2,3,1,4]").unwrap();
        assert_eq!(r2.components(), 2);
        assert!(r2.is_reduced());
        assert_eq!(r2.reduce(), LinkDiagram::unlink(2));
        // unknot: a clasp undone by one bigon, then a kink
        let d = parse_pd("X[1,2,3,4] X[5,6,2,1] X[5,4,3,6]").unwrap();
        assert_eq!(d.components(), 1);
        assert!(d.find_r1().is_none());
        assert_eq!(d.reduce(), LinkDiagram::unknot());
        // the Hopf bigon alternates, so it is not an R2 move
        assert!(hopf().find_r2().is_none());
    }

    #[test]
    fn reduce_leaves_reduced_diagrams() {
        assert_eq!(trefoil().reduce(), trefoil());
        assert_eq!(hopf().reduce(), hopf());
        assert_eq!(figure_eight().reduce(), figure_eight());
    }

    #[test]
    fn expand_identity_and_count() {
        let t = trefoil();
        for i in 0..3 {
            assert_eq!(t.expand_crossing_to_integer_tangle(i, 1).unwrap(), t.relabeled());
            // T(2,3) becomes T(2,6), a two-component link
            let e = t.expand_crossing_to_integer_tangle(i, 4).unwrap();
            assert_eq!(e.crossing_count(), 6);
            assert!(e.is_alternating());
            assert_eq!(e.components(), 2);
            let e = t.expand_crossing_to_integer_tangle(i, 3).unwrap();
            assert_eq!(e.components(), 1);
        }
        assert!(matches!(t.expand_crossing_to_integer_tangle(0, 0), Err(Error::Value(_))));
        assert!(matches!(t.expand_crossing_to_integer_tangle(3, 2), Err(Error::Index { .. })));
    }

    #[test]
    fn connected_sum_shape() {
        let s = trefoil().connected_sum(1, &trefoil(), 3).unwrap();
        assert_eq!(s.crossing_count(), 6);
        assert_eq!(s.components(), 1);
        assert_eq!(s.faces().0.len(), 8);
        let h = hopf().connected_sum(1, &hopf(), 2).unwrap();
        assert_eq!(h.components(), 3);
        assert!(trefoil().connected_sum(9, &hopf(), 1).is_err());
        assert!(trefoil().connected_sum(1, &LinkDiagram::unknot(), 1).is_err());
    }
}
