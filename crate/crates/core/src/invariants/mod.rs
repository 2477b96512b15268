//! Link determinant, computed from the Goeritz matrix and, as an independent
//! check, from the Kauffman bracket at `A = ζ₈`.

mod bracket;
mod zeta8;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use bracket::{kauffman_bracket, kauffman_bracket_capped, BracketPolynomial, DEFAULT_BRACKET_CAP};
pub use zeta8::Zeta8;

use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::tait::Checkerboard;

/// Goeritz matrix on the white (unshaded) faces with the first one deleted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoeritzMatrix(pub IntMatrix);

impl GoeritzMatrix {
    pub fn size(&self) -> usize {
        self.0.size()
    }

    pub fn det(&self) -> BigInt {
        self.0.determinant()
    }
}

/// Each crossing joins the two white faces at its opposite corners with
/// weight `±1`, the sign given by which corner pair (0/2 or 1/3) is white.
pub fn goeritz_matrix(d: &LinkDiagram) -> Result<GoeritzMatrix> {
    let board = Checkerboard::new(d)?;
    let mut index = vec![usize::MAX; board.face_count];
    let mut next = 0;
    for f in 0..board.face_count {
        if !board.shaded[f] {
            index[f] = next;
            next += 1;
        }
    }
    let mut g = IntMatrix::zeros(next);
    for c in 0..d.crossing_count() {
        let k = board.corner_class(c, false);
        let (i, j) = (index[board.face_of[c][k]], index[board.face_of[c][k + 2]]);
        if i == j {
            continue;
        }
        let eta = if k == 0 { 1 } else { -1 };
        g.add_to(i, i, eta);
        g.add_to(j, j, eta);
        g.add_to(i, j, -eta);
        g.add_to(j, i, -eta);
    }
    debug_assert!(g.is_symmetric());
    Ok(GoeritzMatrix(if next == 0 { g } else { g.minor(0) }))
}

/// `det(L)`. Split diagrams give 0; crossingless diagrams give 1 for one
/// circle (and for the empty diagram), 0 for two or more.
pub fn determinant(d: &LinkDiagram) -> BigInt {
    if d.pd.is_empty() {
        return if d.free_loops <= 1 { BigInt::one() } else { BigInt::zero() };
    }
    if d.is_split() {
        return BigInt::zero();
    }
    match goeritz_matrix(d) {
        Ok(g) => g.det().abs(),
        // non-planar input; report through the oracle path instead
        Err(_) => BigInt::zero(),
    }
}

/// `|<D>(ζ₈)|` computed exactly in `Z[ζ₈]`.
pub fn determinant_oracle(d: &LinkDiagram) -> Result<BigInt> {
    determinant_oracle_capped(d, DEFAULT_BRACKET_CAP)
}

pub fn determinant_oracle_capped(d: &LinkDiagram, cap: usize) -> Result<BigInt> {
    let z = kauffman_bracket_capped(d, cap)?.eval_zeta8();
    let n = z.norm_sq();
    let sq = n
        .as_integer()
        .ok_or_else(|| Error::Arithmetic(format!("|z|^2 = {n} is not a rational integer")))?;
    if sq.is_negative() {
        return Err(Error::Arithmetic(format!("|z|^2 = {sq} is negative")));
    }
    let root = sq.sqrt();
    if &(&root * &root) != sq {
        return Err(Error::Arithmetic(format!("|z|^2 = {sq} is not a perfect square")));
    }
    Ok(root)
}
