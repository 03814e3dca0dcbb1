//! Coefficient-ring abstraction shared by polynomials, skew polynomials,
//! matrices and Witt vectors.
//!
//! Elements carry a handle to their parent structure because the concrete
//! rings here (finite fields, Galois rings) are chosen at run time.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

pub trait Ring:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    type Parent: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync;

    fn parent(&self) -> Self::Parent;
    fn zero(parent: &Self::Parent) -> Self;
    fn one(parent: &Self::Parent) -> Self;
    /// Image of an integer under the unique ring map from ℤ.
    fn from_integer(parent: &Self::Parent, n: &BigInt) -> Self;
    /// Characteristic of the ring; zero for ℤ.
    fn characteristic(parent: &Self::Parent) -> BigUint;
    fn is_zero(&self) -> bool;
    fn inverse(&self) -> Option<Self>;
    /// Whether the ring has no zero divisors.
    fn is_integral_domain(parent: &Self::Parent) -> bool;

    fn from_i64(parent: &Self::Parent, n: i64) -> Self {
        Self::from_integer(parent, &BigInt::from(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one(&self.parent())
    }

    fn is_unit(&self) -> bool {
        self.inverse().is_some()
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.parent());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

/// Marker for rings in which every nonzero element is invertible.
pub trait FieldRing: Ring {}

/// A ring carrying a distinguished automorphism φ lifting the p-power map.
///
/// For finite fields φ is `x ↦ x^p`; for Galois rings it is the Witt vector
/// Frobenius. Both are automorphisms of finite order, so any integer power
/// makes sense.
pub trait FrobeniusRing: Ring {
    fn frobenius(&self, k: i64) -> Self;
    fn residue_characteristic(parent: &Self::Parent) -> u32;
    fn is_field(parent: &Self::Parent) -> bool;
    /// The distinguished generator `u` used by the text grammar.
    fn generator(parent: &Self::Parent) -> Self;
    /// Order of φ as an automorphism.
    fn frobenius_order(parent: &Self::Parent) -> usize;
}

/// The ring ℤ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntegerRing;

impl fmt::Display for IntegerRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Z")
    }
}

/// An exact integer.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Integer(pub BigInt);

impl Integer {
    pub fn new(v: impl Into<BigInt>) -> Self {
        Integer(v.into())
    }

    pub fn value(&self) -> &BigInt {
        &self.0
    }
}

impl fmt::Display for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<i64> for Integer {
    fn from(v: i64) -> Self {
        Integer(BigInt::from(v))
    }
}

impl Add for Integer {
    type Output = Integer;
    fn add(self, rhs: Integer) -> Integer {
        Integer(self.0 + rhs.0)
    }
}

impl Sub for Integer {
    type Output = Integer;
    fn sub(self, rhs: Integer) -> Integer {
        Integer(self.0 - rhs.0)
    }
}

impl Mul for Integer {
    type Output = Integer;
    fn mul(self, rhs: Integer) -> Integer {
        Integer(self.0 * rhs.0)
    }
}

impl Neg for Integer {
    type Output = Integer;
    fn neg(self) -> Integer {
        Integer(-self.0)
    }
}

impl Ring for Integer {
    type Parent = IntegerRing;

    fn parent(&self) -> IntegerRing {
        IntegerRing
    }
    fn zero(_: &IntegerRing) -> Self {
        Integer(BigInt::zero())
    }
    fn one(_: &IntegerRing) -> Self {
        Integer(BigInt::one())
    }
    fn from_integer(_: &IntegerRing, n: &BigInt) -> Self {
        Integer(n.clone())
    }
    fn is_integral_domain(_: &IntegerRing) -> bool {
        true
    }
    fn characteristic(_: &IntegerRing) -> BigUint {
        BigUint::zero()
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn inverse(&self) -> Option<Self> {
        if self.0.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_units() {
        assert!(Integer::from(-1).is_unit());
        assert!(!Integer::from(2).is_unit());
        assert_eq!(Integer::from(3).pow(4), Integer::from(81));
    }
}
