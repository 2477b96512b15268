//! Quasi-alternating certificates: depth-first search for a crossing whose
//! two smoothings both certify, with determinant additivity and positivity
//! at every step, bottoming out at diagrams that reduce to the unknot.

use std::collections::HashMap;
use std::fmt::{self, Write as _};
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::diagram::{LinkDiagram, Smoothing};
use crate::invariants::determinant;

pub const DEFAULT_BUDGET: usize = 100_000;

/// One smoothing step: both children are certificates for the reduced
/// smoothings of `crossing`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QaStep {
    pub crossing: usize,
    #[serde(with = "crate::util::decimal")]
    pub det: BigInt,
    #[serde(with = "crate::util::decimal")]
    pub det0: BigInt,
    #[serde(with = "crate::util::decimal")]
    pub det1: BigInt,
    pub zero: Box<QaCertificate>,
    pub one: Box<QaCertificate>,
}

/// Proof tree. A node without a step is an unknot leaf.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QaCertificate {
    pub fingerprint: String,
    pub diagram: LinkDiagram,
    pub step: Option<QaStep>,
}

impl QaCertificate {
    fn leaf(d: &LinkDiagram) -> Self {
        Self { fingerprint: d.fingerprint(), diagram: d.clone(), step: None }
    }

    pub fn is_leaf(&self) -> bool {
        self.step.is_none()
    }

    pub fn depth(&self) -> usize {
        self.step.as_ref().map_or(0, |s| 1 + s.zero.depth().max(s.one.depth()))
    }

    pub fn node_count(&self) -> usize {
        self.step.as_ref().map_or(1, |s| 1 + s.zero.node_count() + s.one.node_count())
    }

    fn render(&self, out: &mut String, indent: usize) {
        let pad = "  ".repeat(indent);
        match &self.step {
            None => {
                let _ = writeln!(out, "{pad}UNKNOT {}", self.fingerprint);
            }
            Some(s) => {
                let _ = writeln!(
                    out,
                    "{pad}{} crossing {} det {} = {} + {}",
                    self.fingerprint, s.crossing, s.det, s.det0, s.det1
                );
                s.zero.render(out, indent + 1);
                s.one.render(out, indent + 1);
            }
        }
    }
}

impl fmt::Display for QaCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.render(&mut s, 0);
        f.write_str(&s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NotQaReason {
    DetZero,
    Split,
}

impl fmt::Display for NotQaReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NotQaReason::DetZero => "det-zero",
            NotQaReason::Split => "split",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub budget: usize,
    pub expansions: usize,
    pub exhausted: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum QaVerdict {
    QuasiAlternating(QaCertificate),
    NotQa(NotQaReason),
    Unknown(SearchReport),
}

impl QaVerdict {
    pub fn certificate(&self) -> Option<&QaCertificate> {
        match self {
            QaVerdict::QuasiAlternating(c) => Some(c),
            _ => None,
        }
    }
}

impl fmt::Display for QaVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QaVerdict::QuasiAlternating(_) => f.write_str("QUASI-ALTERNATING"),
            QaVerdict::NotQa(r) => write!(f, "NOT-QA ({r})"),
            QaVerdict::Unknown(r) if r.exhausted => {
                write!(f, "UNKNOWN (budget of {} expansions exhausted)", r.budget)
            }
            QaVerdict::Unknown(r) => write!(f, "UNKNOWN (no certifying crossing; {} expansions)", r.expansions),
        }
    }
}

/// Sound obstructions only: a split diagram, or determinant zero.
pub fn quick_obstructions(d: &LinkDiagram) -> Option<NotQaReason> {
    if d.is_split() {
        Some(NotQaReason::Split)
    } else if determinant(d).is_zero() {
        Some(NotQaReason::DetZero)
    } else {
        None
    }
}

/// Successful certificates keyed by fingerprint, shareable across threads.
/// Entries are re-verified before use.
#[derive(Default)]
pub struct QaMemo {
    entries: RwLock<HashMap<String, QaCertificate>>,
}

impl QaMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.entries.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn get(&self, key: &str) -> Option<QaCertificate> {
        let hit = self.entries.read().unwrap().get(key).cloned()?;
        (hit.fingerprint == key && verify_certificate(&hit)).then_some(hit)
    }

    fn insert(&self, cert: &QaCertificate) {
        self.entries.write().unwrap().insert(cert.fingerprint.clone(), cert.clone());
    }
}

struct Search<'m> {
    budget: usize,
    expansions: usize,
    exhausted: bool,
    memo: &'m QaMemo,
}

impl Search<'_> {
    /// `d` must already be reduced.
    fn certify(&mut self, d: &LinkDiagram) -> Option<QaCertificate> {
        if d.is_empty_unknot() {
            return Some(QaCertificate::leaf(d));
        }
        let fingerprint = d.fingerprint();
        if let Some(hit) = self.memo.get(&fingerprint) {
            return Some(hit);
        }
        if self.expansions >= self.budget {
            self.exhausted = true;
            return None;
        }
        self.expansions += 1;
        let det = determinant(d);
        // det 1 off the unknot and det 0 cannot be certified here
        if det <= BigInt::one() {
            return None;
        }
        for c in 0..d.crossing_count() {
            let l0 = d.smooth(c, Smoothing::Zero).ok()?;
            let l1 = d.smooth(c, Smoothing::One).ok()?;
            let (det0, det1) = (determinant(&l0), determinant(&l1));
            if det0.is_zero() || det1.is_zero() || &det0 + &det1 != det {
                continue;
            }
            let zero = self.certify(&l0.reduce());
            if self.exhausted {
                return None;
            }
            let Some(zero) = zero else { continue };
            let one = self.certify(&l1.reduce());
            if self.exhausted {
                return None;
            }
            let Some(one) = one else { continue };
            let cert = QaCertificate {
                fingerprint,
                diagram: d.clone(),
                step: Some(QaStep { crossing: c, det, det0, det1, zero: Box::new(zero), one: Box::new(one) }),
            };
            self.memo.insert(&cert);
            return Some(cert);
        }
        None
    }
}

/// Budgeted certificate search with a fresh memo.
pub fn qa_search(d: &LinkDiagram, budget: usize) -> QaVerdict {
    qa_search_with_memo(d, budget, &QaMemo::new())
}

/// Search order is fixed (crossings ascending, `Zero` before `One`) and the
/// whole search stops the moment the budget runs out, so any certificate
/// found under one budget is found unchanged under every larger one.
pub fn qa_search_with_memo(d: &LinkDiagram, budget: usize, memo: &QaMemo) -> QaVerdict {
    if let Some(reason) = quick_obstructions(d) {
        return QaVerdict::NotQa(reason);
    }
    let mut s = Search { budget, expansions: 0, exhausted: false, memo };
    match s.certify(&d.reduce()) {
        Some(cert) => QaVerdict::QuasiAlternating(cert),
        None => QaVerdict::Unknown(SearchReport { budget, expansions: s.expansions, exhausted: s.exhausted }),
    }
}

/// Where and why a certificate fails, the path written as a sequence of
/// `0`/`1` child choices from the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateFailure {
    pub path: String,
    pub reason: String,
}

impl fmt::Display for CertificateFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let path = if self.path.is_empty() { "root" } else { &self.path };
        write!(f, "node {path}: {}", self.reason)
    }
}

fn check_node(cert: &QaCertificate, path: &mut String) -> Result<(), CertificateFailure> {
    let fail = |path: &String, reason: String| Err(CertificateFailure { path: path.clone(), reason });
    let d = &cert.diagram;
    if d.fingerprint() != cert.fingerprint {
        return fail(path, "fingerprint does not match diagram".into());
    }
    let Some(step) = &cert.step else {
        return if d.reduce().is_empty_unknot() { Ok(()) } else { fail(path, "leaf does not reduce to the unknot".into()) };
    };
    let det = determinant(d);
    if det != step.det {
        return fail(path, format!("det recorded {} but computed {det}", step.det));
    }
    let pairs = [(Smoothing::Zero, &step.det0, &step.zero, '0'), (Smoothing::One, &step.det1, &step.one, '1')];
    for (kind, recorded, child, tag) in &pairs {
        let smoothed = match d.smooth(step.crossing, *kind) {
            Ok(s) => s,
            Err(e) => return fail(path, e.to_string()),
        };
        let computed = determinant(&smoothed);
        if &computed != *recorded {
            return fail(path, format!("det{tag} recorded {recorded} but computed {computed}"));
        }
        if computed.is_zero() {
            return fail(path, format!("det{tag} is zero"));
        }
        if smoothed.reduce().fingerprint() != child.fingerprint {
            return fail(path, format!("child {tag} is not the reduced smoothing"));
        }
    }
    if &step.det0 + &step.det1 != step.det {
        return fail(path, format!("{} != {} + {}", step.det, step.det0, step.det1));
    }
    for (_, _, child, tag) in pairs {
        path.push(tag);
        check_node(child, path)?;
        path.pop();
    }
    Ok(())
}

/// Recomputes every determinant and smoothing in the tree.
pub fn check_certificate(cert: &QaCertificate) -> Result<(), CertificateFailure> {
    check_node(cert, &mut String::new())
}

pub fn verify_certificate(cert: &QaCertificate) -> bool {
    check_certificate(cert).is_ok()
}

/// True when `cert` is valid and its root is the reduction of `d`.
pub fn certifies(cert: &QaCertificate, d: &LinkDiagram) -> bool {
    d.reduce().fingerprint() == cert.fingerprint && verify_certificate(cert)
}
