use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Element `c0 + c1 ζ + c2 ζ² + c3 ζ³` of `Z[ζ]`, `ζ` a primitive 8th root
/// of unity (`ζ⁴ = -1`).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Zeta8(pub [BigInt; 4]);

impl Zeta8 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(BigInt::one())
    }

    pub fn from_int(n: BigInt) -> Self {
        Self([n, BigInt::zero(), BigInt::zero(), BigInt::zero()])
    }

    /// `ζ^k` for any integer `k`.
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(8) as usize;
        let mut c: [BigInt; 4] = Default::default();
        c[k % 4] = if k < 4 { BigInt::one() } else { -BigInt::one() };
        Self(c)
    }

    /// Complex conjugate, `ζ ↦ ζ⁻¹ = -ζ³`.
    pub fn conj(&self) -> Self {
        let [a, b, c, d] = &self.0;
        Self([a.clone(), -d, -c, -b])
    }

    /// `|z|²` as an element of `Z[ζ]`.
    pub fn norm_sq(&self) -> Self {
        self * &self.conj()
    }

    /// `Some(n)` when the element is the rational integer `n`.
    pub fn as_integer(&self) -> Option<&BigInt> {
        self.0[1..].iter().all(Zero::is_zero).then_some(&self.0[0])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self(self.0.clone().map(|c| c * k))
    }
}

impl Add for &Zeta8 {
    type Output = Zeta8;
    fn add(self, rhs: &Zeta8) -> Zeta8 {
        let mut out = self.clone();
        for (a, b) in out.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
        out
    }
}

impl Sub for &Zeta8 {
    type Output = Zeta8;
    fn sub(self, rhs: &Zeta8) -> Zeta8 {
        self + &(-rhs)
    }
}

impl Neg for &Zeta8 {
    type Output = Zeta8;
    fn neg(self) -> Zeta8 {
        Zeta8(self.0.clone().map(|c| -c))
    }
}

impl Mul for &Zeta8 {
    type Output = Zeta8;
    fn mul(self, rhs: &Zeta8) -> Zeta8 {
        let mut out: [BigInt; 4] = Default::default();
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                let k = i + j;
                if k < 4 {
                    out[k] += a * b;
                } else {
                    out[k - 4] -= a * b;
                }
            }
        }
        Zeta8(out)
    }
}

impl fmt::Display for Zeta8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.0;
        write!(f, "{a} + {b}ζ + {c}ζ² + {d}ζ³")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(v: [i64; 4]) -> Zeta8 {
        Zeta8(v.map(BigInt::from))
    }

    #[test]
    fn powers() {
        assert_eq!(Zeta8::zeta_pow(4), z([-1, 0, 0, 0]));
        assert_eq!(Zeta8::zeta_pow(-1), z([0, 0, 0, -1]));
        assert_eq!(&Zeta8::zeta_pow(3) * &Zeta8::zeta_pow(5), Zeta8::one());
        assert_eq!(Zeta8::zeta_pow(1).conj(), Zeta8::zeta_pow(-1));
        // √2 = ζ + ζ⁻¹, squared is 2
        let r2 = &Zeta8::zeta_pow(1) + &Zeta8::zeta_pow(-1);
        assert_eq!((&r2 * &r2).as_integer(), Some(&BigInt::from(2)));
    }

    fn arb() -> impl Strategy<Value = Zeta8> {
        prop::array::uniform4(-20i64..20).prop_map(z)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb(), b in arb(), c in arb()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
            prop_assert_eq!(&a - &a, Zeta8::zero());
        }

        #[test]
        fn norm_is_real(a in arb()) {
            let n = a.norm_sq();
            prop_assert_eq!(n.conj(), n.clone());
            prop_assert!(n.0[2].is_zero());
        }
    }
}
