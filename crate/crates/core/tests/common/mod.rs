#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::PathBuf;

use qalink::census::{load_census, CensusEntry};
use qalink::diagram::fixtures;
use qalink::families::{pretzel_diagram, rational_diagram, ContinuedFraction};
use qalink::{BigInt, LinkDiagram};

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

pub fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub fn census(file: &str) -> Vec<CensusEntry> {
    let c = load_census(data_dir().join(file)).unwrap();
    assert!(c.errors.is_empty(), "{file}: {:?}", c.errors);
    c.entries
}

/// `name -> det` from a two-column expected-values file.
pub fn expected_table(file: &str) -> BTreeMap<String, BigInt> {
    let mut r = csv::Reader::from_path(fixture_dir().join(file)).unwrap();
    r.records()
        .map(|rec| {
            let rec = rec.unwrap();
            (rec[0].to_string(), rec[1].parse().unwrap())
        })
        .collect()
}

pub struct Fixture {
    pub name: String,
    pub diagram: LinkDiagram,
}

fn fx(name: impl Into<String>, diagram: LinkDiagram) -> Fixture {
    Fixture { name: name.into(), diagram }
}

/// Hand-written diagrams plus a spread of family constructions.
pub fn small_fixtures() -> Vec<Fixture> {
    let mut v = vec![
        fx("trefoil", fixtures::trefoil()),
        fx("figure-eight", fixtures::figure_eight()),
        fx("hopf", fixtures::hopf()),
        fx("kinked unknot", fixtures::one_crossing_unknot()),
    ];
    for t in [vec![3, 3, 3], vec![2, 2, 2], vec![4, 3, -3], vec![5, 3, -3], vec![2, -3, 5], vec![1, 2, 3]] {
        v.push(fx(format!("pretzel {t:?}"), pretzel_diagram(&t).unwrap()));
    }
    for t in [vec![5], vec![2, 3], vec![3, 1, 2], vec![2, -2, 3], vec![1, 1, 1, 1, 1]] {
        v.push(fx(format!("cf {t:?}"), rational_diagram(&ContinuedFraction::new(t).unwrap())));
    }
    v
}

/// Every bundled census diagram plus the small fixtures.
pub fn all_fixtures() -> Vec<Fixture> {
    let mut v = small_fixtures();
    for f in ["knots_le11.csv", "links_le9.csv", "knots_12n.csv"] {
        for e in census(f) {
            if let Some(d) = e.pd {
                v.push(fx(e.name, d));
            }
        }
    }
    v
}

pub fn reduced_alternating(fixtures: &[Fixture]) -> Vec<&Fixture> {
    fixtures
        .iter()
        .filter(|f| f.diagram.crossing_count() > 0 && f.diagram.is_alternating() && f.diagram.is_reduced())
        .collect()
}
