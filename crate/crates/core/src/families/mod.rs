//! Rational, pretzel and Montesinos diagrams, their closed-form determinants,
//! Greene's pretzel classification and the inequality audits used in the
//! crossing-number-versus-determinant arguments.

mod tangle;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::diagram::{LinkDiagram, Smoothing};
use crate::error::{Error, Result};
use crate::invariants::determinant;
use tangle::{TangleBuilder, Twist};

/// Nonempty list of nonzero integers `a₁, …, aₙ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContinuedFraction {
    terms: Vec<i64>,
}

impl ContinuedFraction {
    pub fn new(terms: Vec<i64>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::Value("continued fraction needs at least one term".into()));
        }
        if terms.contains(&0) {
            return Err(Error::Value("continued fraction terms must be nonzero".into()));
        }
        Ok(Self { terms })
    }

    pub fn terms(&self) -> &[i64] {
        &self.terms
    }
}

/// `Nₖ = aₖ Nₖ₋₁ + Nₖ₋₂`, `N₀ = 1`, `N₋₁ = 0`.
pub fn cf_numerator(cf: &ContinuedFraction) -> BigInt {
    let (mut prev, mut cur) = (BigInt::zero(), BigInt::one());
    for &a in cf.terms() {
        let next = BigInt::from(a) * &cur + &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// The 2-bridge link `C(a₁, …, aₙ)`: twist runs alternating between
/// directions, ending horizontally, closed by the numerator.
pub fn rational_diagram(cf: &ContinuedFraction) -> LinkDiagram {
    let n = cf.terms().len();
    let runs: Vec<(Twist, i64)> = cf
        .terms()
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            let dir = if (n - 1 - i).is_multiple_of(2) { Twist::Horizontal } else { Twist::Vertical };
            (dir, a)
        })
        .collect();
    let mut b = TangleBuilder::default();
    let t = b.twists(&runs);
    b.close_numerator(t)
}

/// Pretzel link with one vertical tassel per entry; the sign gives the
/// twist direction.
pub fn pretzel_diagram(tassels: &[i64]) -> Result<LinkDiagram> {
    if tassels.is_empty() {
        return Err(Error::Value("pretzel needs at least one tassel".into()));
    }
    if tassels.contains(&0) {
        return Err(Error::Value("pretzel tassels must be nonzero".into()));
    }
    let mut b = TangleBuilder::default();
    let mut acc = None;
    for &t in tassels {
        let x = b.twists(&[(Twist::Vertical, t)]);
        acc = Some(match acc {
            None => x,
            Some(a) => b.add(a, x),
        });
    }
    Ok(b.close_numerator(acc.unwrap()))
}

/// `|Σᵢ Πⱼ≠ᵢ tⱼ|`.
pub fn pretzel_det_formula(tassels: &[i64]) -> BigInt {
    (0..tassels.len())
        .map(|i| {
            tassels
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(BigInt::one(), |acc, (_, &t)| acc * t)
        })
        .sum::<BigInt>()
        .abs()
}

/// `P(e; p₁, …, pₙ, −q₁, …, −q_m)` in Greene's normal form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PretzelSpec {
    pub e: u32,
    pub p: Vec<i64>,
    pub q: Vec<i64>,
}

impl PretzelSpec {
    pub fn new(e: u32, p: Vec<i64>, q: Vec<i64>) -> Self {
        Self { e, p, q }
    }

    fn check_normal_form(&self) -> Result<()> {
        if let Some(x) = self.p.iter().find(|&&x| x < 2) {
            return Err(Error::NormalForm(format!("p entry {x} < 2")));
        }
        if let Some(x) = self.q.iter().find(|&&x| x < 3) {
            return Err(Error::NormalForm(format!("q entry {x} < 3")));
        }
        if self.p.is_empty() && self.q.is_empty() {
            return Err(Error::NormalForm("no tassels".into()));
        }
        Ok(())
    }

    /// Tassel list with the `e` extra half-twists as single-crossing tassels.
    pub fn tassels(&self) -> Vec<i64> {
        std::iter::repeat_n(1, self.e as usize)
            .chain(self.p.iter().copied())
            .chain(self.q.iter().map(|q| -q))
            .collect()
    }

    pub fn diagram(&self) -> Result<LinkDiagram> {
        pretzel_diagram(&self.tassels())
    }

    pub fn to_montesinos(&self) -> MontesinosSpec {
        let tangles = self.p.iter().map(|&p| (p, 1)).chain(self.q.iter().map(|&q| (q, -1))).collect();
        MontesinosSpec { e: self.e as i64, tangles }
    }
}

/// `M(e; (α₁, β₁), …)`; tangle `i` has fraction `βᵢ/αᵢ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MontesinosSpec {
    pub e: i64,
    pub tangles: Vec<(i64, i64)>,
}

impl MontesinosSpec {
    pub fn new(e: i64, tangles: Vec<(i64, i64)>) -> Self {
        Self { e, tangles }
    }

    /// The alternating shape `M(0; (p₁,1), …, (q₁,q₁−1), …)`.
    pub fn alternating(p: &[i64], q: &[i64]) -> Self {
        let tangles = p.iter().map(|&p| (p, 1)).chain(q.iter().map(|&q| (q, q - 1))).collect();
        Self { e: 0, tangles }
    }
}

/// Tangles placed side by side (followed by `e` horizontal half-twists)
/// and closed by the numerator.
pub fn montesinos_diagram(spec: &MontesinosSpec) -> Result<LinkDiagram> {
    if spec.tangles.is_empty() {
        return Err(Error::Value("Montesinos link needs at least one tangle".into()));
    }
    if let Some(&(a, _)) = spec.tangles.iter().find(|t| t.0 < 2) {
        return Err(Error::Value(format!("tangle denominator {a} < 2")));
    }
    if let Some(&(a, b)) = spec.tangles.iter().find(|t| num_integer::gcd(t.0, t.1) != 1) {
        return Err(Error::Value(format!("tangle {b}/{a} is not in lowest terms")));
    }
    let mut b = TangleBuilder::default();
    let mut acc = None;
    for &(alpha, beta) in &spec.tangles {
        let t = b.rational(beta, alpha);
        acc = Some(match acc {
            None => t,
            Some(a) => b.add(a, t),
        });
    }
    let mut acc = acc.unwrap();
    if spec.e != 0 {
        let row = b.twists(&[(Twist::Horizontal, spec.e)]);
        acc = b.add(acc, row);
    }
    Ok(b.close_numerator(acc))
}

/// `|Πα · (e + Σ β/α)|`, the classical Montesinos determinant.
pub fn montesinos_det_formula(spec: &MontesinosSpec) -> BigInt {
    let prod: BigInt = spec.tangles.iter().map(|t| BigInt::from(t.0)).product();
    let mut total = &prod * spec.e;
    for &(alpha, beta) in &spec.tangles {
        total += &prod / alpha * beta;
    }
    total.abs()
}

/// `Πpᵢ · Π(qⱼ + 1)`, the closed form claimed for the alternating
/// `M(0; (pᵢ,1), (qⱼ,qⱼ−1))`.
pub fn montesinos_det_alternating(p: &[i64], q: &[i64]) -> Result<BigInt> {
    if let Some(x) = p.iter().find(|&&x| x < 2) {
        return Err(Error::Domain(format!("p entry {x} < 2")));
    }
    if let Some(x) = q.iter().find(|&&x| x < 3) {
        return Err(Error::Domain(format!("q entry {x} < 3")));
    }
    if p.is_empty() && q.is_empty() {
        return Err(Error::Domain("no tangles".into()));
    }
    let a: BigInt = p.iter().map(|&x| BigInt::from(x)).product();
    let b: BigInt = q.iter().map(|&x| BigInt::from(x + 1)).product();
    Ok(a * b)
}

/// Lower bound `Σpᵢ + Σqⱼ + k + 2` paired with the alternating Montesinos
/// determinant (requires `k ≥ 1`, `n + k ≥ 2`).
pub fn montesinos_lower_bound(p: &[i64], q: &[i64]) -> Result<BigInt> {
    if q.is_empty() || p.len() + q.len() < 2 {
        return Err(Error::Domain("need k >= 1 and n + k >= 2".into()));
    }
    montesinos_det_alternating(p, q)?;
    Ok(BigInt::from(p.iter().sum::<i64>() + q.iter().sum::<i64>() + q.len() as i64 + 2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GreeneCase {
    /// `e > m − 1`
    ExtraTwistsDominate,
    /// `e = m − 1 > 0`
    ExtraTwistsBalanced,
    /// `e = 0, n = 1, p₁ > min q`
    SinglePositive,
    /// `e = 0, m = 1, q₁ > min p`
    SingleNegative,
}

impl GreeneCase {
    pub fn number(self) -> u8 {
        match self {
            GreeneCase::ExtraTwistsDominate => 1,
            GreeneCase::ExtraTwistsBalanced => 2,
            GreeneCase::SinglePositive => 3,
            GreeneCase::SingleNegative => 4,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GreeneVerdict {
    Qa(GreeneCase),
    NotQa,
}

impl fmt::Display for GreeneVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GreeneVerdict::Qa(c) => write!(f, "QA (case {})", c.number()),
            GreeneVerdict::NotQa => f.write_str("NotQA"),
        }
    }
}

/// Greene's quasi-alternating criterion for pretzel links in normal form.
pub fn greene_classify_pretzel(spec: &PretzelSpec) -> Result<GreeneVerdict> {
    spec.check_normal_form()?;
    let (e, n, m) = (spec.e as i64, spec.p.len() as i64, spec.q.len() as i64);
    let min_p = spec.p.iter().min();
    let min_q = spec.q.iter().min();
    let case = if e > m - 1 {
        Some(GreeneCase::ExtraTwistsDominate)
    } else if e == m - 1 && e > 0 {
        Some(GreeneCase::ExtraTwistsBalanced)
    } else if e == 0 && n == 1 && min_q.is_some_and(|&mq| spec.p[0] > mq) {
        Some(GreeneCase::SinglePositive)
    } else if e == 0 && m == 1 && min_p.is_some_and(|&mp| spec.q[0] > mp) {
        Some(GreeneCase::SingleNegative)
    } else {
        None
    };
    Ok(case.map_or(GreeneVerdict::NotQa, GreeneVerdict::Qa))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductSum {
    #[serde(with = "crate::util::decimal")]
    pub product: BigInt,
    #[serde(with = "crate::util::decimal")]
    pub partial_sum: BigInt,
    pub holds: bool,
}

/// `Π xᵢ` against `Σ_{xᵢ > 1} xᵢ` for positive integers.
pub fn product_dominates_sum(xs: &[i64]) -> Result<ProductSum> {
    if let Some(x) = xs.iter().find(|&&x| x < 1) {
        return Err(Error::Domain(format!("entry {x} is not positive")));
    }
    let product: BigInt = xs.iter().map(|&x| BigInt::from(x)).product();
    let partial_sum: BigInt = xs.iter().filter(|&&x| x > 1).map(|&x| BigInt::from(x)).sum();
    let holds = product >= partial_sum;
    Ok(ProductSum { product, partial_sum, holds })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistCheck {
    #[serde(with = "crate::util::decimal")]
    pub lhs: BigInt,
    #[serde(with = "crate::util::decimal")]
    pub rhs: BigInt,
    pub equal: bool,
}

/// `det(L′)` against `det(L) + (k−1)·det(L₁)` where `L′` twists crossing
/// `index` into `k` crossings and `L₁` is its `One` smoothing.
pub fn twist_recurrence_check(d: &LinkDiagram, index: usize, k: usize) -> Result<TwistCheck> {
    let expanded = d.expand_crossing_to_integer_tangle(index, k)?;
    let l1 = d.smooth(index, Smoothing::One)?;
    let lhs = determinant(&expanded);
    let rhs = determinant(d) + BigInt::from(k - 1) * determinant(&l1);
    let equal = lhs == rhs;
    Ok(TwistCheck { lhs, rhs, equal })
}

/// Parameter sets for the determinant-versus-crossing audits of the
/// quasi-alternating Montesinos families.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum WidmerCase {
    /// `(a₁, a₂, n)` with `1 + a₁(a₂ − n) < 0`.
    One { a1: i64, a2: i64, n: i64 },
    /// `(a₁, a₂, c₁, c₂)` with `a₂ < c₂`, or `a₂ = c₂` and `a₁ > c₁`.
    Two { a1: i64, a2: i64, c1: i64, c2: i64 },
    /// `(a₁, a₂, a₃, n)` with `a₃ < n`.
    Three { a1: i64, a2: i64, a3: i64, n: i64 },
    /// `(a₁, a₂, a₃; c₁, c₂, c₃)` with
    /// `(1 + a₁a₂)/(1 + c₁c₂) > (a₁ + a₃ + a₁a₂a₃)/(c₁ + c₃ + c₁c₂c₃)`.
    Triple { a: [i64; 3], c: [i64; 3] },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WidmerCheck {
    #[serde(with = "crate::util::decimal")]
    pub det_lower_bound: BigInt,
    #[serde(with = "crate::util::decimal")]
    pub crossing_count: BigInt,
    pub holds: bool,
}

fn c2(a1: i64, a2: i64) -> BigInt {
    BigInt::one() + BigInt::from(a1) * a2
}

fn c3(a1: i64, a2: i64, a3: i64) -> BigInt {
    BigInt::from(a1) + a3 + BigInt::from(a1) * a2 * a3
}

pub fn widmer_inequality_check(case: &WidmerCase) -> Result<WidmerCheck> {
    let params: Vec<i64> = match case {
        WidmerCase::One { a1, a2, n } => vec![*a1, *a2, *n],
        WidmerCase::Two { a1, a2, c1, c2 } => vec![*a1, *a2, *c1, *c2],
        WidmerCase::Three { a1, a2, a3, n } => vec![*a1, *a2, *a3, *n],
        WidmerCase::Triple { a, c } => a.iter().chain(c).copied().collect(),
    };
    if params.iter().any(|&x| x < 1) {
        return Err(Error::Domain("parameters must be positive".into()));
    }
    let side = |ok: bool, what: &str| if ok { Ok(()) } else { Err(Error::Domain(what.to_string())) };
    let (lb, cc) = match *case {
        WidmerCase::One { a1, a2, n } => {
            side(1 + a1 * (a2 - n) < 0, "need 1 + a1(a2 - n) < 0")?;
            (BigInt::from(n) * c2(a1, a2) + 1, BigInt::from(a1 + a2 + 1 + n))
        }
        WidmerCase::Two { a1, a2, c1, c2: cc2 } => {
            side(a2 < cc2 || (a2 == cc2 && a1 > c1), "need a2 < c2, or a2 = c2 and a1 > c1")?;
            (c2(a1, a2) * c2(c1, cc2) + 1, BigInt::from(a1 + a2 + c1 + cc2 + 1))
        }
        WidmerCase::Three { a1, a2, a3, n } => {
            side(a3 < n, "need a3 < n")?;
            (BigInt::from(n) * c3(a1, a2, a3) + 1, BigInt::from(a1 + a2 + a3 + 1 + n))
        }
        WidmerCase::Triple { a, c } => {
            // cross-multiplied ratio comparison
            let lhs = c2(a[0], a[1]) * c3(c[0], c[1], c[2]);
            let rhs = c3(a[0], a[1], a[2]) * c2(c[0], c[1]);
            side(lhs > rhs, "ratio side condition fails")?;
            (
                c3(a[0], a[1], a[2]) * c3(c[0], c[1], c[2]) + 1,
                BigInt::from(a.iter().sum::<i64>() + c.iter().sum::<i64>() + 1),
            )
        }
    };
    let holds = lb >= cc;
    Ok(WidmerCheck { det_lower_bound: lb, crossing_count: cc, holds })
}

/// Family specifications as written on the command line:
/// `pretzel:4,3,-3`, `montesinos:e=0;2/1,3/2`, `cf:2,3,2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Pretzel(Vec<i64>),
    Montesinos(MontesinosSpec),
    Rational(ContinuedFraction),
}

impl FamilySpec {
    pub fn diagram(&self) -> Result<LinkDiagram> {
        match self {
            FamilySpec::Pretzel(t) => pretzel_diagram(t),
            FamilySpec::Montesinos(m) => montesinos_diagram(m),
            FamilySpec::Rational(cf) => Ok(rational_diagram(cf)),
        }
    }
}

fn int_list(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Value(format!("bad integer {t:?}"))))
        .collect()
}

impl FromStr for FamilySpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (kind, body) = s.split_once(':').ok_or_else(|| Error::Value(format!("expected kind:params, got {s:?}")))?;
        match kind.trim() {
            "pretzel" => Ok(FamilySpec::Pretzel(int_list(body)?)),
            "cf" => Ok(FamilySpec::Rational(ContinuedFraction::new(int_list(body)?)?)),
            "montesinos" => {
                let (e, rest) = match body.split_once(';') {
                    Some((head, rest)) => {
                        let v = head.trim().strip_prefix("e=").ok_or_else(|| Error::Value(format!("expected e=<int>, got {head:?}")))?;
                        (v.parse::<i64>().map_err(|_| Error::Value(format!("bad e {v:?}")))?, rest)
                    }
                    None => (0, body),
                };
                let tangles = rest
                    .split(',')
                    .map(|t| {
                        let (a, b) = t.split_once('/').ok_or_else(|| Error::Value(format!("expected alpha/beta, got {t:?}")))?;
                        let a = a.trim().parse::<i64>().map_err(|_| Error::Value(format!("bad alpha {a:?}")))?;
                        let b = b.trim().parse::<i64>().map_err(|_| Error::Value(format!("bad beta {b:?}")))?;
                        Ok((a, b))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(FamilySpec::Montesinos(MontesinosSpec::new(e, tangles)))
            }
            other => Err(Error::Value(format!("unknown family {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::determinant_oracle;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn cf(v: &[i64]) -> ContinuedFraction {
        ContinuedFraction::new(v.to_vec()).unwrap()
    }

    #[test]
    fn numerators() {
        assert_eq!(cf_numerator(&cf(&[5])), big(5));
        assert_eq!(cf_numerator(&cf(&[2, 3])), big(7));
        assert_eq!(cf_numerator(&cf(&[2, 2, 2])), big(12));
        assert!(ContinuedFraction::new(vec![]).is_err());
        assert!(ContinuedFraction::new(vec![1, 0]).is_err());
    }

    #[test]
    fn rational_diagrams_match_numerators() {
        for terms in [vec![3], vec![2, 3], vec![2, 2, 2], vec![1, 4, 2], vec![3, -2], vec![2, 1, 1, 3]] {
            let c = cf(&terms);
            let d = rational_diagram(&c);
            assert_eq!(determinant(&d), cf_numerator(&c).abs(), "{terms:?}");
            assert_eq!(d.crossing_count() as i64, terms.iter().map(|t| t.abs()).sum::<i64>());
        }
    }

    #[test]
    fn pretzel_examples() {
        let p = pretzel_diagram(&[4, 3, -3]).unwrap();
        assert_eq!(p.crossing_count(), 10);
        assert_eq!(p.components(), 1);
        assert_eq!(determinant(&p), big(9));
        assert_eq!(determinant_oracle(&p).unwrap(), big(9));
        let split = pretzel_diagram(&[2, -2]).unwrap();
        assert_eq!(determinant(&split), big(0));
        assert_eq!(determinant(&pretzel_diagram(&[3, 2]).unwrap()), big(5));
        // one tassel closes to an unknot, matching the pretzel formula
        assert_eq!(determinant(&pretzel_diagram(&[3]).unwrap()), big(1));
        assert!(pretzel_diagram(&[2, 0]).is_err());
    }

    #[test]
    fn pretzel_formula_agrees() {
        for ts in [vec![3, 3, 3], vec![2, 2, -3], vec![5, 3, -3], vec![1, 2, 3, -4], vec![-2, -3, 7]] {
            assert_eq!(determinant(&pretzel_diagram(&ts).unwrap()), pretzel_det_formula(&ts), "{ts:?}");
        }
    }

    #[test]
    fn montesinos_examples() {
        let m = montesinos_diagram(&MontesinosSpec::new(0, vec![(2, 1), (3, 2)])).unwrap();
        assert_eq!(determinant(&m), big(7));
        assert!(m.reduce().is_alternating());
        let pp = montesinos_diagram(&MontesinosSpec::new(0, vec![(2, 1), (2, 1)])).unwrap();
        assert_eq!(determinant(&pp), big(4));
        assert_eq!(determinant(&montesinos_diagram(&MontesinosSpec::new(0, vec![(5, 1)])).unwrap()), big(1));
        assert!(montesinos_diagram(&MontesinosSpec::new(0, vec![(1, 1)])).is_err());
    }

    #[test]
    fn montesinos_matches_classical_formula() {
        let specs = [
            MontesinosSpec::new(0, vec![(3, 1), (5, 2), (7, 3)]),
            MontesinosSpec::new(1, vec![(2, 1), (3, -1)]),
            MontesinosSpec::new(-2, vec![(3, 2), (4, 3), (5, -2)]),
            MontesinosSpec::new(2, vec![(5, 3)]),
        ];
        for s in specs {
            let d = montesinos_diagram(&s).unwrap();
            assert_eq!(determinant(&d), montesinos_det_formula(&s), "{s:?}");
            assert_eq!(determinant_oracle(&d).unwrap(), montesinos_det_formula(&s), "{s:?}");
        }
    }

    #[test]
    fn pretzel_spec_tassels() {
        let s = PretzelSpec::new(2, vec![3], vec![4]);
        assert_eq!(s.tassels(), vec![1, 1, 3, -4]);
        assert_eq!(determinant(&s.diagram().unwrap()), montesinos_det_formula(&s.to_montesinos()));
    }

    #[test]
    fn alternating_montesinos_closed_form() {
        assert_eq!(montesinos_det_alternating(&[2, 2], &[]).unwrap(), big(4));
        assert_eq!(montesinos_det_alternating(&[2], &[3]).unwrap(), big(8));
        assert_eq!(montesinos_det_alternating(&[3, 2], &[3, 4]).unwrap(), big(120));
        assert_eq!(montesinos_lower_bound(&[3, 2], &[3, 4]).unwrap(), big(16));
        assert!(matches!(montesinos_det_alternating(&[1], &[3]), Err(Error::Domain(_))));
        assert!(matches!(montesinos_det_alternating(&[2], &[2]), Err(Error::Domain(_))));
    }

    #[test]
    fn greene_cases() {
        use GreeneCase::*;
        let g = |e, p: &[i64], q: &[i64]| greene_classify_pretzel(&PretzelSpec::new(e, p.to_vec(), q.to_vec())).unwrap();
        assert_eq!(g(0, &[2, 3], &[4]), GreeneVerdict::Qa(SingleNegative));
        assert_eq!(g(0, &[4, 3], &[3]), GreeneVerdict::NotQa);
        assert_eq!(g(0, &[5, 3], &[3]), GreeneVerdict::NotQa);
        assert_eq!(g(2, &[2], &[3]), GreeneVerdict::Qa(ExtraTwistsDominate));
        assert_eq!(g(1, &[2], &[3, 3]), GreeneVerdict::Qa(ExtraTwistsBalanced));
        assert_eq!(g(0, &[5], &[3, 4]), GreeneVerdict::Qa(SinglePositive));
        assert!(matches!(
            greene_classify_pretzel(&PretzelSpec::new(0, vec![1], vec![3])),
            Err(Error::NormalForm(_))
        ));
        assert!(matches!(
            greene_classify_pretzel(&PretzelSpec::new(0, vec![2], vec![2])),
            Err(Error::NormalForm(_))
        ));
    }

    #[test]
    fn product_sum_examples() {
        let r = product_dominates_sum(&[1, 1, 1]).unwrap();
        assert_eq!((r.product, r.partial_sum, r.holds), (big(1), big(0), true));
        let r = product_dominates_sum(&[2, 3]).unwrap();
        assert_eq!((r.product, r.partial_sum), (big(6), big(5)));
        let r = product_dominates_sum(&[2, 2, 1]).unwrap();
        assert_eq!((r.product, r.partial_sum), (big(4), big(4)));
        assert!(product_dominates_sum(&[2, 0]).is_err());
    }

    #[test]
    fn twist_checks_on_trefoil() {
        let t = crate::diagram::fixtures::trefoil();
        for i in 0..3 {
            let r = twist_recurrence_check(&t, i, 1).unwrap();
            assert_eq!((r.lhs.clone(), r.equal), (big(3), true));
            let r = twist_recurrence_check(&t, i, 2).unwrap();
            assert_eq!((r.lhs.clone(), r.equal), (big(4), true));
            let r = twist_recurrence_check(&t, i, 3).unwrap();
            assert!(r.equal);
            assert_eq!(r.lhs, big(5));
        }
    }

    #[test]
    fn widmer_examples() {
        let r = widmer_inequality_check(&WidmerCase::One { a1: 2, a2: 2, n: 5 }).unwrap();
        assert_eq!((r.det_lower_bound, r.crossing_count, r.holds), (big(26), big(10), true));
        let r = widmer_inequality_check(&WidmerCase::Two { a1: 2, a2: 2, c1: 2, c2: 3 }).unwrap();
        assert_eq!((r.det_lower_bound, r.crossing_count, r.holds), (big(36), big(10), true));
        let r = widmer_inequality_check(&WidmerCase::Three { a1: 2, a2: 2, a3: 2, n: 3 }).unwrap();
        assert_eq!((r.det_lower_bound, r.crossing_count), (big(37), big(10)));
        let r = widmer_inequality_check(&WidmerCase::Triple { a: [2, 2, 2], c: [2, 2, 3] }).unwrap();
        assert_eq!((r.det_lower_bound, r.crossing_count, r.holds), (big(205), big(14), true));
        assert!(matches!(widmer_inequality_check(&WidmerCase::One { a1: 2, a2: 2, n: 1 }), Err(Error::Domain(_))));
        assert!(matches!(widmer_inequality_check(&WidmerCase::Three { a1: 2, a2: 2, a3: 4, n: 3 }), Err(Error::Domain(_))));
    }

    #[test]
    fn parse_family_specs() {
        assert_eq!("pretzel:4,3,-3".parse::<FamilySpec>().unwrap(), FamilySpec::Pretzel(vec![4, 3, -3]));
        assert_eq!(
            "montesinos:e=0;2/1,3/2".parse::<FamilySpec>().unwrap(),
            FamilySpec::Montesinos(MontesinosSpec::new(0, vec![(2, 1), (3, 2)]))
        );
        assert_eq!("cf:2,3,2".parse::<FamilySpec>().unwrap(), FamilySpec::Rational(cf(&[2, 3, 2])));
        assert!("torus:2,3".parse::<FamilySpec>().is_err());
        assert!("montesinos:e=x;2/1".parse::<FamilySpec>().is_err());
    }
}
