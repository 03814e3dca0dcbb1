//! Truncated big Witt vectors `1 + tR[t]/(t^{N+1})`.
//!
//! Witt addition is multiplication of series. Teichmüller elements are
//! `[a] = 1 − a·t`, so ghost components `−t·f'/f` of `[a]` are
//! `(a, a², a³, …)`. Multiplication and the Frobenius operators are
//! evaluated through universal integer polynomials, which makes them valid
//! over rings with torsion.

mod rational;
pub mod universal;

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::DensePoly;
use crate::ring::{Integer, IntegerRing, Ring};

pub use rational::{
    coefficients_to_roots, rational_to_big, roots_to_coefficients, RationalWitt, RootMultiset,
};
pub use universal::{
    generate, CacheSource, Operation, UniversalPolynomials, WittCache, MAX_UNIVERSAL_N,
};

#[derive(Clone, PartialEq, Eq)]
pub struct BigWitt<R: Ring> {
    parent: R::Parent,
    /// `c_1..c_N`; the constant term 1 is implicit.
    coeffs: Vec<R>,
}

impl<R: Ring> fmt::Debug for BigWitt<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<R: Ring> fmt::Display for BigWitt<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.series().to_series_text('t'))
    }
}

impl<R: Ring> BigWitt<R> {
    pub fn new(parent: &R::Parent, coeffs: Vec<R>) -> Self {
        BigWitt {
            parent: parent.clone(),
            coeffs,
        }
    }

    /// Truncates or pads a series with constant term 1.
    pub fn from_series(series: &DensePoly<R>, truncation: usize) -> Result<Self> {
        if !series.coeff(0).is_one() {
            return Err(Error::Invalid(format!(
                "a big Witt vector needs constant term 1, got {}",
                series.coeff(0)
            )));
        }
        Ok(BigWitt {
            parent: series.parent().clone(),
            coeffs: (1..=truncation).map(|i| series.coeff(i)).collect(),
        })
    }

    /// The additive identity, the series 1.
    pub fn zero(parent: &R::Parent, truncation: usize) -> Self {
        BigWitt {
            parent: parent.clone(),
            coeffs: vec![R::zero(parent); truncation],
        }
    }

    /// `[a] = 1 − a·t`.
    pub fn teichmuller(a: &R, truncation: usize) -> Self {
        let parent = a.parent();
        let mut coeffs = vec![R::zero(&parent); truncation];
        if let Some(c) = coeffs.first_mut() {
            *c = -a.clone();
        }
        BigWitt { parent, coeffs }
    }

    /// The multiplicative identity `[1] = 1 − t`.
    pub fn one(parent: &R::Parent, truncation: usize) -> Self {
        Self::teichmuller(&R::one(parent), truncation)
    }

    pub fn parent(&self) -> &R::Parent {
        &self.parent
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// The series `1 + Σ c_i t^i`.
    pub fn series(&self) -> DensePoly<R> {
        let mut v = Vec::with_capacity(self.coeffs.len() + 1);
        v.push(R::one(&self.parent));
        v.extend(self.coeffs.iter().cloned());
        DensePoly::new(&self.parent, v)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.parent != other.parent {
            return Err(Error::BaseMismatch(
                self.parent.to_string(),
                other.parent.to_string(),
            ));
        }
        if self.truncation() != other.truncation() {
            return Err(Error::Dimension(format!(
                "truncations differ: {} vs {}",
                self.truncation(),
                other.truncation()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.truncation();
        Self::from_series(&self.series().mul_trunc(&other.series(), n + 1), n)
    }

    /// The inverse series.
    pub fn neg(&self) -> Self {
        let n = self.truncation();
        let mut inv = vec![R::zero(&self.parent); n];
        // (1 + Σ a_i t^i)(1 + Σ b_i t^i) = 1
        for k in 1..=n {
            let mut s = self.coeffs[k - 1].clone();
            for i in 1..k {
                s = s + self.coeffs[i - 1].clone() * inv[k - i - 1].clone();
            }
            inv[k - 1] = -s;
        }
        BigWitt {
            parent: self.parent.clone(),
            coeffs: inv,
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// `k·a` in the Witt group, the series raised to the `k`-th power.
    pub fn multiple(&self, k: i64) -> Self {
        let base = if k < 0 { self.neg() } else { self.clone() };
        let mut acc = Self::zero(&self.parent, self.truncation());
        for _ in 0..k.unsigned_abs() {
            acc = acc.add(&base).expect("same shape");
        }
        acc
    }

    pub fn mul(&self, other: &Self, cache: &WittCache) -> Result<Self> {
        self.check(other)?;
        let n = self.truncation();
        if n == 0 {
            return Ok(self.clone());
        }
        let u = cache.get(Operation::Multiplication, n)?;
        let vals: Vec<R> = self.coeffs.iter().chain(&other.coeffs).cloned().collect();
        Ok(BigWitt {
            parent: self.parent.clone(),
            coeffs: u.eval(&self.parent, &vals),
        })
    }

    /// `F_n`, with output truncation `⌊N/n⌋`.
    pub fn frobenius(&self, n: usize, cache: &WittCache) -> Result<Self> {
        let len = self.truncation();
        if n == 0 || n > len.max(1) {
            return Err(Error::Invalid(format!("F_{n} needs 1 <= n <= N = {len}")));
        }
        if n == 1 {
            return Ok(self.clone());
        }
        let u = cache.get(Operation::Frobenius(n), len)?;
        Ok(BigWitt {
            parent: self.parent.clone(),
            coeffs: u.eval(&self.parent, &self.coeffs),
        })
    }

    /// `V_n f(t) = f(t^n)`, keeping the truncation `N`.
    pub fn verschiebung(&self, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("V_0 is undefined".into()));
        }
        let len = self.truncation();
        let mut coeffs = vec![R::zero(&self.parent); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            let k = (i + 1) * n;
            if k > len {
                break;
            }
            coeffs[k - 1] = c.clone();
        }
        Ok(BigWitt {
            parent: self.parent.clone(),
            coeffs,
        })
    }

    /// Ghost components `w_1..w_N`; only over torsion-free rings.
    pub fn ghost(&self) -> Result<Vec<R>> {
        if !R::characteristic(&self.parent).is_zero() {
            return Err(Error::TorsionRing(self.parent.to_string()));
        }
        let mut w: Vec<R> = Vec::with_capacity(self.truncation());
        for n in 1..=self.truncation() {
            let mut s = R::from_i64(&self.parent, -(n as i64)) * self.coeffs[n - 1].clone();
            for k in 1..n {
                s = s - self.coeffs[k - 1].clone() * w[n - k - 1].clone();
            }
            w.push(s);
        }
        Ok(w)
    }

    /// Entrywise image under a ring map.
    pub fn map<S: Ring>(&self, parent: &S::Parent, f: impl Fn(&R) -> S) -> BigWitt<S> {
        BigWitt {
            parent: parent.clone(),
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl BigWitt<Integer> {
    /// The integer Witt vector with given ghost components, when integral.
    pub fn from_ghost(w: &[Integer]) -> Result<Self> {
        let mut c: Vec<Integer> = Vec::with_capacity(w.len());
        for n in 1..=w.len() {
            let mut s = w[n - 1].0.clone();
            for k in 1..n {
                s += &c[k - 1].0 * &w[n - k - 1].0;
            }
            let d = num_bigint::BigInt::from(-(n as i64));
            if !(&s % &d).is_zero() {
                return Err(Error::Invalid(format!(
                    "ghost vector is not integral at index {n}"
                )));
            }
            c.push(Integer(s / d));
        }
        Ok(BigWitt::new(&IntegerRing, c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Field, FieldElement};
    use crate::parse::{parse_with, PolyAlgebra};

    fn z(s: &str, n: usize) -> BigWitt<Integer> {
        let alg = PolyAlgebra::<Integer> {
            parent: IntegerRing,
            var: 't',
            generator: None,
            max_degree: 64,
        };
        BigWitt::from_series(&parse_with(&alg, s).unwrap(), n).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&x| Integer::new(x)).collect()
    }

    #[test]
    fn addition_examples() {
        assert_eq!(z("1+t", 2).add(&z("1+t", 2)).unwrap(), z("1+2t+t^2", 2));
        assert_eq!(z("1+t", 2).add(&z("1", 2)).unwrap(), z("1+t", 2));
        assert_eq!(z("1+t", 2).add(&z("1-t", 2)).unwrap(), z("1-t^2", 2));
        assert_eq!(z("1+t", 3).neg(), z("1-t+t^2-t^3", 3));
        assert_eq!(z("1+t", 3).neg().to_string(), "1-t+t^2-t^3");
    }

    #[test]
    fn multiplication_examples() {
        let c = WittCache::shared();
        assert_eq!(z("1-2t", 3).mul(&z("1-3t", 3), c).unwrap(), z("1-6t", 3));
        assert_eq!(z("1", 3).mul(&z("1+5t-t^3", 3), c).unwrap(), z("1", 3));
        let one = BigWitt::one(&IntegerRing, 4);
        let a = z("1+2t-t^2+7t^4", 4);
        assert_eq!(one.mul(&a, c).unwrap(), a);
    }

    #[test]
    fn ghost_examples() {
        assert_eq!(z("1-5t", 4).ghost().unwrap(), ints(&[5, 25, 125, 625]));
        assert_eq!(z("1", 3).ghost().unwrap(), ints(&[0, 0, 0]));
        assert_eq!(z("(1-t)(1-2t)", 3).ghost().unwrap(), ints(&[3, 5, 9]));
        let f2 = Field::new(2, 1).unwrap();
        let w = BigWitt::teichmuller(&FieldElement::one(&f2), 2);
        assert!(matches!(w.ghost(), Err(Error::TorsionRing(_))));
        let a = z("1+3t-2t^2+t^3", 3);
        assert_eq!(BigWitt::from_ghost(&a.ghost().unwrap()).unwrap(), a);
        assert!(BigWitt::from_ghost(&ints(&[0, 1])).is_err());
    }

    #[test]
    fn frobenius_and_verschiebung_examples() {
        let c = WittCache::shared();
        assert_eq!(z("1-t", 4).verschiebung(2).unwrap(), z("1-t^2", 4));
        assert_eq!(z("1-3t", 4).frobenius(2, c).unwrap(), z("1-9t", 2));
        let fv = z("1-t", 4)
            .verschiebung(2)
            .unwrap()
            .frobenius(2, c)
            .unwrap();
        assert_eq!(fv, z("(1-t)^2", 2));
        assert!(z("1-t", 4).frobenius(5, c).is_err());
        assert!(z("1-t", 4).verschiebung(0).is_err());
    }

    #[test]
    fn torsion_rings_use_the_same_polynomials() {
        let c = WittCache::shared();
        let f3 = Field::new(3, 1).unwrap();
        let a = z("1+2t-t^2+4t^3", 3);
        let b = z("1-t+5t^2", 3);
        let red = |w: &BigWitt<Integer>| w.map(&f3, |x| FieldElement::from_integer(&f3, &x.0));
        let over_z = a.mul(&b, c).unwrap();
        assert_eq!(red(&a).mul(&red(&b), c).unwrap(), red(&over_z));
        assert!(BigWitt::from_series(&z("1+t", 2).series().scale(&Integer::new(2)), 2).is_err());
    }
}
