//! Twisted polynomials `R[F]` and twisted Laurent polynomials `R[F^{±1}]`
//! with the relation `F·a = φ(a)·F`, over finite fields and Galois rings.
//!
//! Elements are stored with left coefficients: `Σ a_i F^i`.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::{roots_of_additive, AdditiveRoots, Field, FieldElement};
use crate::parse::{parse_with, Algebra, ParseError};
use crate::ring::{FrobeniusRing, Ring};

#[derive(Clone, PartialEq, Eq)]
pub struct SkewPoly<R: FrobeniusRing> {
    parent: R::Parent,
    coeffs: Vec<R>,
}

impl<R: FrobeniusRing> fmt::Debug for SkewPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn term_text(out: &mut String, c: &str, power: &str) {
    let compound = c.contains(['+', '-']);
    if !out.is_empty() {
        out.push('+');
    }
    if power.is_empty() {
        out.push_str(c);
    } else if c == "1" {
        out.push_str(power);
    } else if compound {
        out.push_str(&format!("({c})*{power}"));
    } else {
        out.push_str(&format!("{c}*{power}"));
    }
}

fn power_text(k: i64) -> String {
    match k {
        0 => String::new(),
        1 => "F".into(),
        k if k < 0 => format!("F^({k})"),
        k => format!("F^{k}"),
    }
}

impl<R: FrobeniusRing> fmt::Display for SkewPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if !c.is_zero() {
                term_text(&mut out, &c.to_string(), &power_text(i as i64));
            }
        }
        f.write_str(&out)
    }
}

impl<R: FrobeniusRing> SkewPoly<R> {
    pub fn new(parent: &R::Parent, mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        SkewPoly {
            parent: parent.clone(),
            coeffs,
        }
    }

    pub fn zero(parent: &R::Parent) -> Self {
        Self::new(parent, Vec::new())
    }

    pub fn one(parent: &R::Parent) -> Self {
        Self::constant(parent, R::one(parent))
    }

    pub fn constant(parent: &R::Parent, c: R) -> Self {
        Self::new(parent, vec![c])
    }

    /// `c·F^k`.
    pub fn monomial(parent: &R::Parent, c: R, k: usize) -> Self {
        let mut v = vec![R::zero(parent); k];
        v.push(c);
        Self::new(parent, v)
    }

    /// The variable `F`.
    pub fn frobenius(parent: &R::Parent) -> Self {
        Self::monomial(parent, R::one(parent), 1)
    }

    pub fn base(&self) -> &R::Parent {
        &self.parent
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| R::zero(&self.parent))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    fn check_base(&self, other: &Self) -> Result<()> {
        if self.parent != other.parent {
            return Err(Error::BaseMismatch(
                self.parent.to_string(),
                other.parent.to_string(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_base(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        Ok(Self::new(
            &self.parent,
            (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect(),
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_base(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        Ok(Self::new(
            &self.parent,
            (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect(),
        ))
    }

    pub fn neg(&self) -> Self {
        Self::new(
            &self.parent,
            self.coeffs.iter().map(|c| -c.clone()).collect(),
        )
    }

    /// `c·self`.
    pub fn scale_left(&self, c: &R) -> Self {
        Self::new(
            &self.parent,
            self.coeffs.iter().map(|x| c.clone() * x.clone()).collect(),
        )
    }

    /// Applies φ^k to every coefficient.
    pub fn twist(&self, k: i64) -> Self {
        Self::new(
            &self.parent,
            self.coeffs.iter().map(|c| c.frobenius(k)).collect(),
        )
    }

    /// The twisted product `Σ a_i φ^i(b_j) F^{i+j}`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_base(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.parent);
        }
        let mut v = vec![R::zero(&self.parent); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                v[i + j] = v[i + j].clone() + a.clone() * b.frobenius(i as i64);
            }
        }
        Self::new(&self.parent, v)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.parent);
        for _ in 0..e {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// `a = q·b + r` with `deg r < deg b`; needs a unit leading coefficient
    /// in `b`.
    pub fn left_divmod(&self, b: &Self) -> Result<(Self, Self)> {
        self.check_base(b)?;
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let lead = b.coeffs[db].clone();
        if lead.inverse().is_none() {
            return Err(Error::NonUnitLeading(lead.to_string()));
        }
        let mut r = self.coeffs.clone();
        let mut q = vec![R::zero(&self.parent); r.len().saturating_sub(db)];
        while r.len() > db {
            let top = r.len() - 1;
            let s = top - db;
            if !r[top].is_zero() {
                let inv = lead.frobenius(s as i64).inverse().expect("unit");
                let c = r[top].clone() * inv;
                for (j, bj) in b.coeffs.iter().enumerate() {
                    if !bj.is_zero() {
                        r[s + j] = r[s + j].clone() - c.clone() * bj.frobenius(s as i64);
                    }
                }
                q[s] = c;
            }
            r.pop();
        }
        Ok((Self::new(&self.parent, q), Self::new(&self.parent, r)))
    }

    /// Evaluates `Σ a_i F^i` on a vector via a supplied action of `F` and
    /// of scalars.
    pub fn act<V: Clone>(
        &self,
        x: &V,
        apply_f: impl Fn(&V) -> V,
        scale: impl Fn(&R, &V) -> V,
        add: impl Fn(V, V) -> V,
        zero: V,
    ) -> V {
        let mut acc = zero;
        let mut cur = x.clone();
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                cur = apply_f(&cur);
            }
            if !a.is_zero() {
                acc = add(acc, scale(a, &cur));
            }
        }
        acc
    }
}

/// Monic right gcd via the left Euclidean algorithm.
pub fn right_gcd<R: FrobeniusRing>(a: &SkewPoly<R>, b: &SkewPoly<R>) -> Result<SkewPoly<R>> {
    a.check_base(b)?;
    if !R::is_field(&a.parent) {
        return Err(Error::NotAField(a.parent.to_string()));
    }
    if a.is_zero() && b.is_zero() {
        return Err(Error::Invalid("gcd of two zero polynomials".into()));
    }
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let (_, r) = x.left_divmod(&y)?;
        x = y;
        y = r;
    }
    let inv = x.leading().unwrap().inverse().expect("field element");
    Ok(x.scale_left(&inv))
}

pub type SkewPolyFq = SkewPoly<FieldElement>;

/// `x ↦ Σ a_i x^{p^i}`, with increasing exponents and nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdditivePoly {
    base: Field,
    terms: Vec<(usize, FieldElement)>,
}

impl AdditivePoly {
    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn terms(&self) -> &[(usize, FieldElement)] {
        &self.terms
    }

    /// Dense coefficient list `a_0..a_n`.
    pub fn dense(&self) -> Vec<FieldElement> {
        let n = self.terms.last().map_or(0, |t| t.0 + 1);
        let mut v = vec![FieldElement::zero(&self.base); n];
        for (i, a) in &self.terms {
            v[*i] = a.clone();
        }
        v
    }

    /// Evaluates at `x` in any extension of the base.
    pub fn eval(&self, x: &FieldElement) -> Result<FieldElement> {
        crate::field::evaluate_additive(&self.dense(), x)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AdditivePoly) -> Result<AdditivePoly> {
        let a = SkewPoly::new(&self.base, self.dense());
        let b = SkewPoly::new(&other.base, other.dense());
        Ok(a.mul(&b)?.to_additive())
    }

    /// Coefficients of the ordinary polynomial in `x` (index = exponent),
    /// when the degree is at most `limit`.
    pub fn expand(&self, limit: u64) -> Option<Vec<FieldElement>> {
        let p = self.base.p() as u64;
        let top = p.checked_pow(self.terms.last().map_or(0, |t| t.0) as u32)?;
        if top > limit {
            return None;
        }
        let mut v = vec![FieldElement::zero(&self.base); top as usize + 1];
        for (i, a) in &self.terms {
            v[p.pow(*i as u32) as usize] = a.clone();
        }
        Some(v)
    }
}

impl fmt::Display for AdditivePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let p = self.base.p() as u64;
        let mut out = String::new();
        for (i, a) in self.terms.iter().rev() {
            let power = match p.checked_pow(*i as u32) {
                Some(1) => "x".to_string(),
                Some(e) => format!("x^{e}"),
                None => format!("x^({p}^{i})"),
            };
            term_text(&mut out, &a.to_string(), &power);
        }
        f.write_str(&out)
    }
}

impl SkewPoly<FieldElement> {
    /// The substitution `F^i ↦ x^{p^i}`.
    pub fn to_additive(&self) -> AdditivePoly {
        AdditivePoly {
            base: self.parent.clone(),
            terms: self
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    /// The map `x ↦ φ^s(T(x)) = Σ φ^s(a_i) x^{p^{i+s}}`. A negative shift
    /// gives the p-th-root normalized form and needs `s ≥ −v`, `v` the
    /// lowest index with a nonzero coefficient.
    pub fn to_additive_shifted(&self, s: i64) -> Result<AdditivePoly> {
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = i as i64 + s;
            if e < 0 {
                return Err(Error::Invalid(format!(
                    "shift {s} leaves a negative p-power exponent"
                )));
            }
            terms.push((e as usize, c.frobenius_power(s)));
        }
        Ok(AdditivePoly {
            base: self.parent.clone(),
            terms,
        })
    }

    /// All roots of the additive realization in its splitting field.
    pub fn additive_roots(&self, max_degree: usize) -> Result<AdditiveRoots> {
        if self.is_zero() {
            return Err(Error::Invalid(
                "the zero polynomial has no finite root set".into(),
            ));
        }
        roots_of_additive(&self.coeffs, max_degree)
    }

    /// `T(x) = Σ a_i x^{p^i}` for `x` in an extension.
    pub fn eval_additive(&self, x: &FieldElement) -> Result<FieldElement> {
        crate::field::evaluate_additive(&self.coeffs, x)
    }
}

/// An element `F^v · body` of `R[F^{±1}]`, with `body(0) ≠ 0` unless zero.
#[derive(Clone, PartialEq, Eq)]
pub struct SkewLaurent<R: FrobeniusRing> {
    valuation: i64,
    body: SkewPoly<R>,
}

impl<R: FrobeniusRing> fmt::Debug for SkewLaurent<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<R: FrobeniusRing> fmt::Display for SkewLaurent<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        let left = self.left_coeffs();
        for (i, c) in left.iter().enumerate().rev() {
            if !c.is_zero() {
                let k = self.valuation + i as i64;
                term_text(&mut out, &c.to_string(), &power_text(k));
            }
        }
        f.write_str(&out)
    }
}

/// Normal form of `F^v · body`.
pub fn laurent_normalize<R: FrobeniusRing>(v: i64, body: SkewPoly<R>) -> SkewLaurent<R> {
    let Some(s) = body.coeffs.iter().position(|c| !c.is_zero()) else {
        return SkewLaurent { valuation: 0, body };
    };
    // body = F^s · Σ φ^{-s}(b_{j+s}) F^j
    let shifted = body.coeffs[s..]
        .iter()
        .map(|c| c.frobenius(-(s as i64)))
        .collect();
    SkewLaurent {
        valuation: v + s as i64,
        body: SkewPoly::new(&body.parent, shifted),
    }
}

impl<R: FrobeniusRing> SkewLaurent<R> {
    pub fn from_poly(p: SkewPoly<R>) -> Self {
        laurent_normalize(0, p)
    }

    /// `Σ c_i F^{v+i}` from left coefficients.
    pub fn from_left(parent: &R::Parent, v: i64, left: Vec<R>) -> Self {
        let body = left.into_iter().map(|c| c.frobenius(-v)).collect();
        laurent_normalize(v, SkewPoly::new(parent, body))
    }

    /// `F^k`.
    pub fn frobenius_power(parent: &R::Parent, k: i64) -> Self {
        laurent_normalize(k, SkewPoly::one(parent))
    }

    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    pub fn body(&self) -> &SkewPoly<R> {
        &self.body
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    /// Left coefficients `c_i` of `Σ c_i F^{v+i}`.
    pub fn left_coeffs(&self) -> Vec<R> {
        self.body
            .coeffs
            .iter()
            .map(|c| c.frobenius(self.valuation))
            .collect()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        // (F^v B)(F^w C) = F^{v+w} · B^{φ^{-w}} · C
        let b = self.body.twist(-other.valuation);
        let prod = b.mul(&other.body)?;
        Ok(laurent_normalize(self.valuation + other.valuation, prod))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.body.check_base(&other.body)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let v = self.valuation.min(other.valuation);
        let parent = self.body.parent.clone();
        let a = self.left_coeffs();
        let b = other.left_coeffs();
        let len = (self.valuation + a.len() as i64).max(other.valuation + b.len() as i64) - v;
        let mut left = vec![R::zero(&parent); len as usize];
        for (i, c) in a.into_iter().enumerate() {
            let k = (self.valuation - v) as usize + i;
            left[k] = left[k].clone() + c;
        }
        for (i, c) in b.into_iter().enumerate() {
            let k = (other.valuation - v) as usize + i;
            left[k] = left[k].clone() + c;
        }
        Ok(Self::from_left(&parent, v, left))
    }

    /// The polynomial part when the valuation is nonnegative.
    pub fn to_poly(&self) -> Option<SkewPoly<R>> {
        if self.is_zero() {
            return Some(self.body.clone());
        }
        if self.valuation < 0 {
            return None;
        }
        let mut left = vec![R::zero(&self.body.parent); self.valuation as usize];
        left.extend(self.left_coeffs());
        Some(SkewPoly::new(&self.body.parent, left))
    }
}

/// Grammar target for skew polynomials: `F` is the variable, `u` the base
/// generator; products are twisted.
pub struct SkewAlgebra<R: FrobeniusRing> {
    pub parent: R::Parent,
    pub max_degree: usize,
}

impl<R: FrobeniusRing> Algebra for SkewAlgebra<R> {
    type Value = SkewPoly<R>;
    fn integer(&self, n: &BigInt) -> Result<SkewPoly<R>, String> {
        Ok(SkewPoly::constant(
            &self.parent,
            R::from_integer(&self.parent, n),
        ))
    }
    fn variable(&self, name: char) -> Option<SkewPoly<R>> {
        match name {
            'F' => Some(SkewPoly::frobenius(&self.parent)),
            'u' => Some(SkewPoly::constant(&self.parent, R::generator(&self.parent))),
            _ => None,
        }
    }
    fn add(&self, a: SkewPoly<R>, b: SkewPoly<R>) -> Result<SkewPoly<R>, String> {
        a.add(&b).map_err(|e| e.to_string())
    }
    fn sub(&self, a: SkewPoly<R>, b: SkewPoly<R>) -> Result<SkewPoly<R>, String> {
        a.sub(&b).map_err(|e| e.to_string())
    }
    fn neg(&self, a: SkewPoly<R>) -> Result<SkewPoly<R>, String> {
        Ok(a.neg())
    }
    fn mul(&self, a: SkewPoly<R>, b: SkewPoly<R>) -> Result<SkewPoly<R>, String> {
        let d = a.degree().unwrap_or(0) + b.degree().unwrap_or(0);
        if d > self.max_degree {
            return Err(format!("degree {d} exceeds the limit {}", self.max_degree));
        }
        Ok(a.mul_unchecked(&b))
    }
    fn pow(&self, a: SkewPoly<R>, e: u64) -> Result<SkewPoly<R>, String> {
        let d = (a.degree().unwrap_or(0) as u64).saturating_mul(e);
        if d > self.max_degree as u64 {
            return Err(format!("degree {d} exceeds the limit {}", self.max_degree));
        }
        Ok(a.pow(e as u32))
    }
}

/// Degree bound for parsed skew polynomials.
pub const PARSE_MAX_DEGREE: usize = 4096;

pub fn parse_skew<R: FrobeniusRing>(
    parent: &R::Parent,
    text: &str,
) -> Result<SkewPoly<R>, ParseError> {
    parse_with(
        &SkewAlgebra::<R> {
            parent: parent.clone(),
            max_degree: PARSE_MAX_DEGREE,
        },
        text,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois_ring::{GaloisElement, GaloisRing};
    use crate::random::deterministic_rng;

    fn f4() -> Field {
        Field::new(2, 2).unwrap()
    }

    fn sp(k: &Field, s: &str) -> SkewPolyFq {
        parse_skew(k, s).unwrap()
    }

    #[test]
    fn defining_relation() {
        let k = f4();
        assert_eq!(sp(&k, "F*u"), sp(&k, "(u+1)*F"));
        assert_eq!(sp(&k, "(F+u^2)*(F+u)"), sp(&k, "F^2+1"));
        assert_eq!(sp(&k, "F*u").to_string(), "(u+1)*F");
    }

    #[test]
    fn generic_expansion_over_f9() {
        let k = Field::new(3, 2).unwrap();
        let a = k.generator();
        let lhs = sp(&k, "F+1")
            .mul(&SkewPoly::new(&k, vec![a.clone(), FieldElement::one(&k)]))
            .unwrap();
        let expect = SkewPoly::new(
            &k,
            vec![
                a.clone(),
                &a.frobenius_power(1) + &FieldElement::one(&k),
                FieldElement::one(&k),
            ],
        );
        assert_eq!(lhs, expect);
    }

    #[test]
    fn division_examples() {
        let k = f4();
        let (q, r) = sp(&k, "F^2").left_divmod(&sp(&k, "F+u")).unwrap();
        assert_eq!(q, sp(&k, "F+u^2"));
        assert_eq!(r, sp(&k, "1"));
        let a = sp(&k, "F+u");
        let (q, r) = a.left_divmod(&a).unwrap();
        assert!(q.is_one_poly() && r.is_zero());
        let (q, r) = sp(&k, "u").left_divmod(&sp(&k, "F")).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, sp(&k, "u"));
        assert_eq!(
            sp(&k, "F").left_divmod(&SkewPoly::zero(&k)).unwrap_err(),
            Error::DivisionByZero
        );
    }

    impl<R: FrobeniusRing> SkewPoly<R> {
        fn is_one_poly(&self) -> bool {
            self.coeffs.len() == 1 && self.coeffs[0].is_one()
        }
    }

    #[test]
    fn gcd_examples() {
        let f2 = Field::new(2, 1).unwrap();
        assert_eq!(
            right_gcd(&sp(&f2, "F+1"), &sp(&f2, "F+1")).unwrap(),
            sp(&f2, "F+1")
        );
        assert_eq!(
            right_gcd(&sp(&f2, "F^2+1"), &sp(&f2, "F+1")).unwrap(),
            sp(&f2, "F+1")
        );
        assert_eq!(
            right_gcd(&sp(&f2, "F"), &sp(&f2, "1")).unwrap(),
            sp(&f2, "1")
        );
        assert!(right_gcd(&SkewPolyFq::zero(&f2), &SkewPolyFq::zero(&f2)).is_err());
    }

    #[test]
    fn additive_realization() {
        let f2 = Field::new(2, 1).unwrap();
        assert_eq!(sp(&f2, "F-1").to_additive().to_string(), "x^2+x");
        let t = sp(&f2, "(F+1)*(F+1)").to_additive();
        assert_eq!(t.to_string(), "x^4+x");
        let a = sp(&f2, "F+1").to_additive();
        assert_eq!(a.compose(&a).unwrap(), t);
        let k = Field::new(3, 1).unwrap();
        assert_eq!(sp(&k, "F-1").to_additive().to_string(), "x^3+2*x");
    }

    #[test]
    fn laurent_examples() {
        let k = f4();
        let finv = SkewLaurent::<FieldElement>::frobenius_power(&k, -1);
        let u = SkewLaurent::from_poly(SkewPoly::constant(&k, k.generator()));
        let prod = finv.mul(&u).unwrap();
        assert_eq!(prod.valuation(), -1);
        assert_eq!(prod.left_coeffs(), vec![k.generator().frobenius_power(-1)]);
        // multiply by F on the left: back to u
        let f = SkewLaurent::<FieldElement>::frobenius_power(&k, 1);
        assert_eq!(f.mul(&prod).unwrap(), u);
        assert_eq!(f.mul(&finv).unwrap().to_poly().unwrap(), SkewPoly::one(&k));
        let z = laurent_normalize(3, SkewPoly::<FieldElement>::zero(&k));
        assert!(z.is_zero());
        assert_eq!(prod.to_string(), "(u+1)*F^(-1)");
    }

    #[test]
    fn ring_axioms_f4_degree_two_exhaustive() {
        let k = f4();
        let els: Vec<_> = k.elements().collect();
        let mut polys = Vec::new();
        for a in &els {
            for b in &els {
                polys.push(SkewPoly::new(&k, vec![a.clone(), b.clone()]));
            }
        }
        let mut rng = deterministic_rng(3);
        use rand::seq::SliceRandom;
        for x in &polys {
            for y in &polys {
                let z = polys.choose(&mut rng).unwrap();
                let xy = x.mul(y).unwrap();
                assert_eq!(xy.mul(z).unwrap(), x.mul(&y.mul(z).unwrap()).unwrap());
                assert_eq!(
                    x.mul(&y.add(z).unwrap()).unwrap(),
                    xy.add(&x.mul(z).unwrap()).unwrap()
                );
                if !x.is_zero() && !y.is_zero() {
                    assert_eq!(
                        xy.degree().unwrap(),
                        x.degree().unwrap() + y.degree().unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn galois_ring_division_needs_unit_leading() {
        let r = GaloisRing::new(2, 2, 2).unwrap();
        let two = GaloisElement::from_coeffs(&r, &[2]).unwrap();
        let b = SkewPoly::new(&r, vec![GaloisElement::one(&r), two]);
        let a = SkewPoly::frobenius(&r).pow(3);
        assert!(matches!(a.left_divmod(&b), Err(Error::NonUnitLeading(_))));
        let monic = parse_skew::<GaloisElement>(&r, "F^2+u*F+3").unwrap();
        let (q, rem) = a.left_divmod(&monic).unwrap();
        assert_eq!(q.mul(&monic).unwrap().add(&rem).unwrap(), a);
        assert!(matches!(right_gcd(&a, &monic), Err(Error::NotAField(_))));
    }
}
