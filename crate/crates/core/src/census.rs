//! Census files (`name,components,pd,det`) and the `c(L) <= det(L)` sweep.

use std::cmp::Ordering;
use std::fmt::Write as _;
use std::io::Read;
use std::path::Path;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use regex::Regex;
use serde::{Deserialize, Serialize};

use crate::diagram::{parse_pd, LinkDiagram};
use crate::error::{Error, Result};
use crate::invariants::determinant;
use crate::qa::{quick_obstructions, NotQaReason};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DetSource {
    Given,
    Computed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusEntry {
    pub name: String,
    pub crossing_number: u32,
    pub components: Option<u32>,
    pub pd: Option<LinkDiagram>,
    #[serde(with = "crate::util::decimal::option")]
    pub det: Option<BigInt>,
    pub det_source: Option<DetSource>,
}

fn name_regex() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"^(L?)(\d+)([_an])(\d+)$").unwrap())
}

/// Crossing number from a census name: `8_19`, `11n139`, `12n0019`, `L9n27`.
pub fn parse_name_crossings(name: &str) -> Result<u32> {
    name_key(name).map(|k| k.1)
}

/// Ordering key: knots before links, then crossings, then `_`/`a`/`n`, then index.
fn name_key(name: &str) -> Result<(bool, u32, u8, u64)> {
    let bad = || Error::NameFormat(name.to_string());
    let caps = name_regex().captures(name).ok_or_else(bad)?;
    let link = !caps[1].is_empty();
    let kind = caps[3].as_bytes()[0];
    if link && kind == b'_' {
        return Err(bad());
    }
    let n: u32 = caps[2].parse().map_err(|_| bad())?;
    let k: u64 = caps[4].parse().map_err(|_| bad())?;
    if n == 0 || k == 0 {
        return Err(bad());
    }
    Ok((link, n, kind, k))
}

fn natural_cmp(a: &str, b: &str) -> Ordering {
    match (name_key(a), name_key(b)) {
        (Ok(x), Ok(y)) => x.cmp(&y).then_with(|| a.cmp(b)),
        _ => a.cmp(b),
    }
}

/// Parsed census with the non-fatal problems found along the way.
#[derive(Clone, Debug, Default)]
pub struct Census {
    pub entries: Vec<CensusEntry>,
    pub errors: Vec<Error>,
}

#[derive(Debug, Deserialize)]
struct RawRow {
    name: String,
    components: Option<String>,
    pd: Option<String>,
    det: Option<String>,
}

fn nonempty(s: &Option<String>) -> Option<&str> {
    s.as_deref().map(str::trim).filter(|s| !s.is_empty())
}

fn parse_row(raw: &RawRow) -> std::result::Result<CensusEntry, String> {
    let name = raw.name.trim().to_string();
    let crossing_number = parse_name_crossings(&name).map_err(|e| e.to_string())?;
    let components = nonempty(&raw.components)
        .map(|s| s.parse::<u32>().map_err(|_| format!("bad component count {s:?}")))
        .transpose()?;
    let pd = nonempty(&raw.pd).map(|s| parse_pd(s).map_err(|e| e.to_string())).transpose()?;
    let det = nonempty(&raw.det)
        .map(|s| s.parse::<BigInt>().map_err(|_| format!("bad determinant {s:?}")))
        .transpose()?;
    if det.as_ref().is_some_and(|d| d < &BigInt::zero()) {
        return Err("negative determinant".into());
    }
    if let (Some(c), Some(d)) = (components, &pd) {
        if d.components() != c as usize {
            return Err(format!("pd has {} components, row says {c}", d.components()));
        }
    }
    let det_source = det.as_ref().map(|_| DetSource::Given);
    Ok(CensusEntry { name, crossing_number, components, pd, det, det_source })
}

/// Parses census CSV text. Row problems are collected rather than fatal;
/// determinants are computed from PD codes in parallel, filling missing
/// values and validating given ones.
pub fn parse_census<R: Read>(input: R) -> Result<Census> {
    let mut reader = csv::ReaderBuilder::new().trim(csv::Trim::Headers).from_reader(input);
    let mut census = Census::default();
    for (i, rec) in reader.deserialize::<RawRow>().enumerate() {
        let row = i + 2; // 1-based, after the header
        match rec.map_err(|e| e.to_string()).and_then(|raw| parse_row(&raw)) {
            Ok(entry) => census.entries.push(entry),
            Err(msg) => census.errors.push(Error::Row { row, msg }),
        }
    }
    let computed: Vec<Option<BigInt>> = census.entries.par_iter().map(|e| e.pd.as_ref().map(determinant)).collect();
    for (entry, det) in census.entries.iter_mut().zip(computed) {
        let Some(det) = det else { continue };
        match &entry.det {
            None => {
                entry.det = Some(det);
                entry.det_source = Some(DetSource::Computed);
            }
            Some(given) if *given != det => census.errors.push(Error::Validation {
                name: entry.name.clone(),
                given: given.to_string(),
                computed: det.to_string(),
            }),
            Some(_) => {}
        }
    }
    Ok(census)
}

pub fn load_census(path: impl AsRef<Path>) -> Result<Census> {
    let file = std::fs::File::open(path.as_ref())
        .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
    parse_census(std::io::BufReader::new(file))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub name: String,
    pub crossings: u32,
    #[serde(with = "crate::util::decimal")]
    pub det: BigInt,
    pub det_source: DetSource,
    pub violates: bool,
    pub obstruction: Option<NotQaReason>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    /// Every entry, in natural name order.
    pub rows: Vec<ReportRow>,
}

impl ConjectureReport {
    pub fn violations(&self) -> impl Iterator<Item = &ReportRow> {
        self.rows.iter().filter(|r| r.violates)
    }

    pub fn violation_count(&self) -> usize {
        self.violations().count()
    }

    pub fn total(&self) -> usize {
        self.rows.len()
    }

    /// Aligned table of the violating entries followed by a summary line.
    pub fn to_text(&self) -> String {
        let rows: Vec<&ReportRow> = self.violations().collect();
        let w = rows.iter().map(|r| r.name.len()).max().unwrap_or(0).max(4);
        let mut out = String::new();
        let _ = writeln!(out, "{:<w$}  {:>9}  {:>5}  note", "name", "crossings", "det");
        for r in &rows {
            let mut note = match r.det_source {
                DetSource::Given => String::new(),
                DetSource::Computed => "computed".to_string(),
            };
            if let Some(o) = r.obstruction {
                if !note.is_empty() {
                    note.push_str("; ");
                }
                let _ = write!(note, "NotQA ({o})");
            }
            let _ = writeln!(out, "{:<w$}  {:>9}  {:>5}  {note}", r.name, r.crossings, r.det);
            out.truncate(out.trim_end().len());
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "{} of {} entries have crossing number > determinant",
            rows.len(),
            self.total()
        );
        out
    }

    /// `name,crossings,det,violates` for every entry.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["name", "crossings", "det", "violates"]).unwrap();
        for r in &self.rows {
            w.write_record([r.name.clone(), r.crossings.to_string(), r.det.to_string(), r.violates.to_string()])
                .unwrap();
        }
        String::from_utf8(w.into_inner().unwrap()).unwrap()
    }
}

/// All entries with `crossing_number > det`, flagged within the full,
/// name-sorted list. Zero-determinant entries carry the NotQA obstruction.
pub fn verify_conjecture(entries: &[CensusEntry]) -> Result<ConjectureReport> {
    let missing: Vec<String> = entries.iter().filter(|e| e.det.is_none()).map(|e| e.name.clone()).collect();
    if !missing.is_empty() {
        return Err(Error::MissingDet(missing));
    }
    let mut rows: Vec<ReportRow> = entries
        .par_iter()
        .map(|e| {
            let det = e.det.clone().unwrap();
            let violates = BigInt::from(e.crossing_number) > det;
            let obstruction = match &e.pd {
                Some(d) if det.is_zero() => quick_obstructions(d),
                None if det.is_zero() => Some(NotQaReason::DetZero),
                _ => None,
            };
            ReportRow {
                name: e.name.clone(),
                crossings: e.crossing_number,
                det,
                det_source: e.det_source.unwrap_or(DetSource::Given),
                violates,
                obstruction,
            }
        })
        .collect();
    rows.sort_by(|a, b| natural_cmp(&a.name, &b.name));
    Ok(ConjectureReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names() {
        assert_eq!(parse_name_crossings("8_19").unwrap(), 8);
        assert_eq!(parse_name_crossings("12n0019").unwrap(), 12);
        assert_eq!(parse_name_crossings("L9n27").unwrap(), 9);
        assert_eq!(parse_name_crossings("11a367").unwrap(), 11);
        for bad in ["", "8", "L8_1", "x8_1", "8_", "0_1", "8n"] {
            assert!(matches!(parse_name_crossings(bad), Err(Error::NameFormat(_))), "{bad}");
        }
    }

    #[test]
    fn natural_order() {
        let mut v = vec!["10_124", "L2a1", "9_42", "11n139", "10n1", "11a5", "8_19", "11n57"];
        v.sort_by(|a, b| natural_cmp(a, b));
        assert_eq!(v, ["8_19", "9_42", "10_124", "10n1", "11a5", "11n57", "11n139", "L2a1"]);
    }

    const SAMPLE: &str = "name,components,pd,det
3_1,1,\"PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]\",
L8n6,2,,0
4_1,1,\"PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]\",7
bogus,1,,1
L2a1,2,\"PD[X[4,1,3,2],X[2,3,1,4]]\",2
";

    #[test]
    fn load_collects_errors() {
        let c = parse_census(SAMPLE.as_bytes()).unwrap();
        assert_eq!(c.entries.len(), 4);
        assert_eq!(c.entries[0].det, Some(BigInt::from(3)));
        assert_eq!(c.entries[0].det_source, Some(DetSource::Computed));
        assert_eq!(c.entries[1].det, Some(BigInt::from(0)));
        assert!(c.entries[1].pd.is_none());
        assert_eq!(c.errors.len(), 2);
        assert!(matches!(c.errors[0], Error::Row { row: 5, .. }));
        assert!(matches!(&c.errors[1], Error::Validation { name, .. } if name == "4_1"));
    }

    #[test]
    fn report() {
        let c = parse_census(SAMPLE.as_bytes()).unwrap();
        let r = verify_conjecture(&c.entries).unwrap();
        let names: Vec<&str> = r.rows.iter().map(|r| r.name.as_str()).collect();
        assert_eq!(names, ["3_1", "4_1", "L2a1", "L8n6"]);
        let v: Vec<&str> = r.violations().map(|r| r.name.as_str()).collect();
        assert_eq!(v, ["L8n6"]);
        assert_eq!(r.violations().next().unwrap().obstruction, Some(NotQaReason::DetZero));
        assert!(r.to_text().contains("NotQA (det-zero)"));
        assert!(r.to_csv().starts_with("name,crossings,det,violates\n3_1,3,3,false\n"));
    }

    #[test]
    fn missing_det() {
        let c = parse_census("name,components,pd,det\n5_1,1,,\n".as_bytes()).unwrap();
        assert_eq!(verify_conjecture(&c.entries).unwrap_err(), Error::MissingDet(vec!["5_1".into()]));
    }

    #[test]
    fn component_mismatch_is_a_row_error() {
        let c = parse_census("name,components,pd,det\nL2a1,1,\"X[4,1,3,2] X[2,3,1,4]\",2\n".as_bytes()).unwrap();
        assert!(c.entries.is_empty());
        assert!(matches!(c.errors[0], Error::Row { row: 2, .. }));
    }
}
