use std::collections::HashMap;

use super::{Crossing, Dart, LinkDiagram, PdCode};

impl LinkDiagram {
    /// Strand-traversal relabeling from one starting dart.
    fn traversal_labeling(&self, start: Dart, opp: &[[Dart; 4]]) -> Vec<Crossing> {
        let xs = self.crossings();
        let n = xs.len();
        let mut new_label: HashMap<u32, u32> = HashMap::new();
        let mut entry: Vec<Option<usize>> = vec![None; n];
        let mut order: Vec<usize> = Vec::with_capacity(n);

        let discover = |c: usize, p: usize, entry: &mut Vec<Option<usize>>, order: &mut Vec<usize>| {
            if entry[c].is_none() {
                entry[c] = Some(p);
                order.push(c);
            }
        };

        let mut next_start = Some(start);
        discover(start.0, (start.1 + 2) % 4, &mut entry, &mut order);
        while let Some((mut c, mut p)) = next_start.take() {
            while !new_label.contains_key(&xs[c][p]) {
                let l = new_label.len() as u32 + 1;
                new_label.insert(xs[c][p], l);
                let (c2, p2) = opp[c][p];
                discover(c2, p2, &mut entry, &mut order);
                (c, p) = (c2, (p2 + 2) % 4);
            }
            next_start = order.iter().find_map(|&ci| {
                let e = entry[ci].unwrap();
                [1, 3, 2, 0]
                    .iter()
                    .map(|s| (e + s) % 4)
                    .find(|&q| !new_label.contains_key(&xs[ci][q]))
                    .map(|q| (ci, q))
            });
            if next_start.is_none() {
                // a part of the shadow not reachable from what we have seen
                if let Some(ci) = (0..n).find(|&ci| entry[ci].is_none()) {
                    discover(ci, 2, &mut entry, &mut order);
                    next_start = Some((ci, 0));
                }
            }
        }

        let mut out: Vec<Crossing> = xs
            .iter()
            .map(|x| {
                let y = x.map(|l| new_label[&l]);
                let rot = [y[2], y[3], y[0], y[1]];
                y.min(rot)
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Relabeling that is minimal over all starting darts and both directions
    /// of travel. Equal canonical forms imply isomorphic PD codes.
    pub fn canonical(&self) -> LinkDiagram {
        let n = self.crossing_count();
        if n == 0 {
            return self.clone();
        }
        let opp = self.opposite_darts();
        let best = (0..n)
            .flat_map(|c| (0..4).map(move |p| (c, p)))
            .map(|s| self.traversal_labeling(s, &opp))
            .min()
            .unwrap();
        LinkDiagram::new(PdCode::new_unchecked(best), self.free_loops)
    }

    /// Canonical text key, including free loops.
    pub fn fingerprint(&self) -> String {
        let c = self.canonical();
        format!("{}|{}", c.pd.to_census_string(), c.free_loops)
    }
}
