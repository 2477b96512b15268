use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::Zeta8;
use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};

pub const DEFAULT_BRACKET_CAP: usize = 16;

/// Laurent polynomial in `A` with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BracketPolynomial {
    terms: BTreeMap<i32, BigInt>,
}

impl BracketPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(exp: i32, coeff: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    /// `-A² - A⁻²`, the value of a crossingless loop.
    pub fn loop_value() -> Self {
        let mut p = Self::zero();
        p.add_term(2, BigInt::from(-1));
        p.add_term(-2, BigInt::from(-1));
        p
    }

    pub fn add_term(&mut self, exp: i32, coeff: BigInt) {
        let e = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *e += coeff;
        if e.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i32) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn eval_zeta8(&self) -> Zeta8 {
        self.terms.iter().fold(Zeta8::zero(), |acc, (e, c)| {
            &acc + &Zeta8::zeta_pow(*e as i64).scale(c)
        })
    }
}

impl Add for &BracketPolynomial {
    type Output = BracketPolynomial;
    fn add(self, rhs: &BracketPolynomial) -> BracketPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Mul for &BracketPolynomial {
    type Output = BracketPolynomial;
    fn mul(self, rhs: &BracketPolynomial) -> BracketPolynomial {
        let mut out = BracketPolynomial::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for BracketPolynomial {
    /// Highest power first: `-A^4 - A^-4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = mag.is_one();
            match *e {
                0 => write!(f, "{mag}")?,
                1 if unit => f.write_str("A")?,
                1 => write!(f, "{mag}A")?,
                _ if unit => write!(f, "A^{e}")?,
                _ => write!(f, "{mag}A^{e}")?,
            }
        }
        Ok(())
    }
}

fn loops_in_state(xs: &[[u32; 4]], state: u64, labels: usize, parent: &mut Vec<u8>) -> usize {
    parent.clear();
    parent.extend(0..labels as u8);
    fn find(p: &mut [u8], mut x: u8) -> u8 {
        while p[x as usize] != x {
            p[x as usize] = p[p[x as usize] as usize];
            x = p[x as usize];
        }
        x
    }
    let mut loops = labels - 1; // label 0 unused
    for (i, x) in xs.iter().enumerate() {
        // bit set: A-smoothing, positions 0-1 and 2-3; else 0-3 and 1-2
        let pairs = if state >> i & 1 == 1 { [(0, 1), (2, 3)] } else { [(0, 3), (1, 2)] };
        for (p, q) in pairs {
            let (a, b) = (find(parent, x[p] as u8), find(parent, x[q] as u8));
            if a != b {
                parent[a as usize] = b;
                loops -= 1;
            }
        }
    }
    loops
}

/// State sum with the default crossing cap.
pub fn kauffman_bracket(d: &LinkDiagram) -> Result<BracketPolynomial> {
    kauffman_bracket_capped(d, DEFAULT_BRACKET_CAP)
}

/// `Σ_s A^(a(s) - b(s)) (-A² - A⁻²)^(loops(s) - 1)`, normalised so a
/// crossingless circle is 1. The totally empty diagram is also taken as 1.
pub fn kauffman_bracket_capped(d: &LinkDiagram, cap: usize) -> Result<BracketPolynomial> {
    let n = d.crossing_count();
    if n > cap || n >= 63 {
        return Err(Error::CapExceeded { crossings: n, cap });
    }
    let xs = d.crossings();
    let labels = d.pd.max_label() as usize + 1;
    if labels > 255 {
        return Err(Error::CapExceeded { crossings: n, cap });
    }
    // counts[(a - b) + n][loops]
    let width = 2 * n + 1;
    let max_loops = 2 * n + d.free_loops as usize + 1;
    let counts = (0..1u64 << n)
        .into_par_iter()
        .fold(
            || (vec![0u64; width * (max_loops + 1)], Vec::with_capacity(labels)),
            |(mut acc, mut scratch), s| {
                let a = s.count_ones() as usize;
                let loops = if n == 0 { 0 } else { loops_in_state(xs, s, labels, &mut scratch) };
                let loops = loops + d.free_loops as usize;
                acc[(2 * a) * (max_loops + 1) + loops] += 1;
                (acc, scratch)
            },
        )
        .map(|(acc, _)| acc)
        .reduce(
            || vec![0u64; width * (max_loops + 1)],
            |mut x, y| {
                x.iter_mut().zip(y).for_each(|(a, b)| *a += b);
                x
            },
        );

    let delta = BracketPolynomial::loop_value();
    let mut out = BracketPolynomial::zero();
    for idx in 0..width {
        for loops in 0..=max_loops {
            let c = counts[idx * (max_loops + 1) + loops];
            if c == 0 {
                continue;
            }
            let sigma = idx as i32 - n as i32;
            if loops == 0 {
                out.add_term(sigma, BigInt::from(c));
                continue;
            }
            let term = &BracketPolynomial::monomial(sigma, BigInt::from(c)) * &delta.pow(loops as u32 - 1);
            out = &out + &term;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::fixtures::*;

    #[test]
    fn basic_values() {
        assert_eq!(kauffman_bracket(&LinkDiagram::unknot()).unwrap(), BracketPolynomial::one());
        assert_eq!(kauffman_bracket(&one_crossing_unknot()).unwrap().to_string(), "-A^3");
        assert_eq!(kauffman_bracket(&hopf()).unwrap().to_string(), "-A^4 - A^-4");
        assert_eq!(kauffman_bracket(&LinkDiagram::unlink(2)).unwrap(), BracketPolynomial::loop_value());
    }

    #[test]
    fn trefoil_bracket() {
        let b = kauffman_bracket(&trefoil()).unwrap();
        // one chirality or the other
        let s = b.to_string();
        assert!(s == "A^7 - A^3 - A^-5" || s == "-A^5 - A^-3 + A^-7", "{s}");
    }

    #[test]
    fn cap_enforced() {
        assert_eq!(
            kauffman_bracket_capped(&trefoil(), 2).unwrap_err(),
            Error::CapExceeded { crossings: 3, cap: 2 }
        );
    }

    #[test]
    fn display_formats() {
        let mut p = BracketPolynomial::zero();
        p.add_term(1, BigInt::from(2));
        p.add_term(0, BigInt::from(-3));
        p.add_term(-1, BigInt::from(1));
        assert_eq!(p.to_string(), "2A - 3 + A^-1");
        assert_eq!(BracketPolynomial::zero().to_string(), "0");
    }
}
