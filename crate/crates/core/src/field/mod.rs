//! Finite fields 𝔽_{p^n} in a power basis over the prime field.
//!
//! Each `(p, n)` pair has exactly one canonical defining polynomial, so a
//! field value is just a shared handle to cached tables. Elements are
//! coordinate vectors in the basis `1, u, …, u^{n-1}` where `u` is the class
//! of `x` modulo the defining polynomial.

mod additive;
mod embed;

pub use additive::{additive_root_count, evaluate_additive, roots_of_additive, AdditiveRoots};
pub use embed::Embedding;

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use rand::Rng;

use crate::error::{Error, Result};
use crate::fp;
use crate::linalg::FpMatrix;
use crate::ring::{FieldRing, FrobeniusRing, Ring};

/// Largest supported characteristic (exclusive).
pub const MAX_PRIME: u64 = 1 << 20;
/// Largest supported absolute extension degree.
pub const MAX_DEGREE: usize = 512;

struct FieldInner {
    p: u32,
    n: usize,
    modulus: Vec<u32>,
    // u^n = Σ tail_j u^j
    tail: Vec<(usize, u32)>,
    frob: OnceLock<FpMatrix>,
    frob_inv: OnceLock<FpMatrix>,
    order: BigUint,
}

/// Handle to the canonical field 𝔽_{p^n}.
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

pub type FieldDescriptor = Field;

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.p == other.0.p && self.0.n == other.0.n)
    }
}
impl Eq for Field {}

impl Hash for Field {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.p.hash(state);
        self.0.n.hash(state);
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.0.p, self.0.n)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.0.p, self.0.n)
    }
}

fn registry() -> &'static Mutex<HashMap<(u32, usize), Field>> {
    static REG: OnceLock<Mutex<HashMap<(u32, usize), Field>>> = OnceLock::new();
    REG.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Validates a characteristic and returns it as `u32`.
pub(crate) fn check_prime(p: u64) -> Result<u32> {
    if p < MAX_PRIME {
        if !fp::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        return Ok(p as u32);
    }
    if p < (1 << 40) && !fp::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Err(Error::PrimeTooLarge { p, max: MAX_PRIME })
}

/// Least monic irreducible of degree `n`, ordering candidates by the integer
/// `Σ c_i p^i` of their lower coefficients.
fn canonical_modulus(p: u32, n: usize) -> Vec<u32> {
    let mut digits = vec![0u32; n];
    if n > 1 {
        digits[0] = 1;
    }
    loop {
        if n == 1 || digits[0] != 0 {
            let mut f = digits.clone();
            f.push(1);
            if fp::is_irreducible(&f, p) {
                return f;
            }
        }
        // increment, least significant digit first
        let mut i = 0;
        loop {
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
            i += 1;
            assert!(i < n, "no irreducible polynomial found");
        }
    }
}

impl Field {
    /// The canonical field of order `p^n`.
    pub fn new(p: u64, n: usize) -> Result<Field> {
        let p = check_prime(p)?;
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::DegreeOutOfRange { n, max: MAX_DEGREE });
        }
        if let Some(f) = registry().lock().unwrap().get(&(p, n)) {
            return Ok(f.clone());
        }
        // built outside the lock; racing builders produce identical values
        let modulus = canonical_modulus(p, n);
        let tail = (0..n)
            .filter(|&j| modulus[j] != 0)
            .map(|j| (j, fp::neg(modulus[j], p)))
            .collect();
        let field = Field(Arc::new(FieldInner {
            p,
            n,
            modulus,
            tail,
            frob: OnceLock::new(),
            frob_inv: OnceLock::new(),
            order: BigUint::from(p).pow(n as u32),
        }));
        let mut reg = registry().lock().unwrap();
        Ok(reg.entry((p, n)).or_insert(field).clone())
    }

    pub fn prime_field(&self) -> Field {
        Field::new(self.0.p as u64, 1).expect("valid prime")
    }

    /// The extension of degree `k` over this field.
    pub fn extension(&self, k: usize) -> Result<Field> {
        let n = self
            .0
            .n
            .checked_mul(k)
            .filter(|&d| k > 0 && d <= MAX_DEGREE)
            .ok_or(Error::DegreeOutOfRange {
                n: self.0.n.saturating_mul(k),
                max: MAX_DEGREE,
            })?;
        Field::new(self.0.p as u64, n)
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn n(&self) -> usize {
        self.0.n
    }

    pub fn order(&self) -> &BigUint {
        &self.0.order
    }

    /// Number of elements if it fits in a `u64`.
    pub fn size(&self) -> Option<u64> {
        self.0.order.to_u64()
    }

    /// Monic defining polynomial, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    /// `p:n`, the literal accepted by the command line.
    pub fn literal(&self) -> String {
        format!("{}:{}", self.0.p, self.0.n)
    }

    pub fn contains_subfield(&self, other: &Field) -> bool {
        self.0.p == other.0.p && self.0.n.is_multiple_of(other.0.n)
    }

    /// Matrix of `x ↦ x^p` on coordinates.
    pub fn frobenius_matrix(&self) -> &FpMatrix {
        self.0.frob.get_or_init(|| {
            let n = self.0.n;
            let p = self.0.p;
            let mut cols = Vec::with_capacity(n);
            let up = self.generator().pow(p as u64);
            let mut cur = FieldElement::one(self);
            for _ in 0..n {
                cols.push(cur.coeffs.clone());
                cur = &cur * &up;
            }
            FpMatrix::from_columns(p, n, &cols)
        })
    }

    /// Matrix of the inverse Frobenius.
    pub fn inverse_frobenius_matrix(&self) -> &FpMatrix {
        self.0.frob_inv.get_or_init(|| {
            self.frobenius_matrix()
                .inverse()
                .expect("Frobenius is bijective")
        })
    }

    /// The class `u` of `x`; zero for a prime field since its modulus is `x`.
    pub fn generator(&self) -> FieldElement {
        let mut c = vec![0u32; self.0.n];
        if self.0.n > 1 {
            c[1] = 1;
        } else {
            c[0] = fp::neg(self.0.modulus[0], self.0.p);
        }
        FieldElement {
            field: self.clone(),
            coeffs: c,
        }
    }

    /// All elements in index order, for small fields.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        let size = self.size().expect("field too large to enumerate");
        (0..size).map(move |i| FieldElement::from_index(self, i))
    }

    /// Canonical embedding into a field containing this one.
    pub fn embedding_into(&self, target: &Field) -> Result<Embedding> {
        Embedding::new(self, target)
    }
}

/// An element of a finite field.
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    coeffs: Vec<u32>,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}
impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.hash(state);
        self.coeffs.hash(state);
    }
}

/// Orders elements of one field like their indices.
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.field.p(), self.coeffs.len())
            .cmp(&(other.field.p(), other.coeffs.len()))
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('+');
            }
            match (i, c) {
                (0, _) => out.push_str(&c.to_string()),
                (_, 1) => out.push('u'),
                _ => out.push_str(&format!("{c}*u")),
            }
            if i > 1 {
                out.push_str(&format!("^{i}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

impl FieldElement {
    /// Builds an element from coordinates, reducing each modulo p. Missing
    /// trailing coordinates are zero.
    pub fn from_coeffs(field: &Field, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() > field.n() {
            return Err(Error::Dimension(format!(
                "{} coordinates for a degree-{} field",
                coeffs.len(),
                field.n()
            )));
        }
        let mut c: Vec<u32> = coeffs.iter().map(|&x| x % field.p()).collect();
        c.resize(field.n(), 0);
        Ok(FieldElement {
            field: field.clone(),
            coeffs: c,
        })
    }

    /// Reduces an arbitrary polynomial in `u` (constant term first).
    pub fn from_poly(field: &Field, poly: &[i64]) -> FieldElement {
        let p = field.p();
        let mut acc = FieldElement::zero(field);
        let u = field.generator();
        let mut pw = FieldElement::one(field);
        for &c in poly {
            let c = fp::reduce_i64(c, p);
            if c != 0 {
                acc = &acc + &pw.scale(c);
            }
            pw = &pw * &u;
        }
        acc
    }

    pub(crate) fn from_raw(field: &Field, coeffs: Vec<u32>) -> FieldElement {
        debug_assert_eq!(coeffs.len(), field.n());
        FieldElement {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn from_u64(field: &Field, v: u64) -> FieldElement {
        let mut c = vec![0u32; field.n()];
        c[0] = (v % field.p() as u64) as u32;
        FieldElement::from_raw(field, c)
    }

    /// Element whose base-p digits (constant coordinate least significant)
    /// spell `idx`.
    pub fn from_index(field: &Field, mut idx: u64) -> FieldElement {
        let p = field.p() as u64;
        let c = (0..field.n())
            .map(|_| {
                let d = (idx % p) as u32;
                idx /= p;
                d
            })
            .collect();
        FieldElement::from_raw(field, c)
    }

    /// Inverse of [`FieldElement::from_index`]; needs `|K| ≤ 2^64`.
    pub fn index(&self) -> u64 {
        let p = self.field.p() as u64;
        self.coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * p + c as u64)
    }

    pub fn random<G: Rng + ?Sized>(field: &Field, rng: &mut G) -> FieldElement {
        let p = field.p();
        let c = (0..field.n()).map(|_| rng.gen_range(0..p)).collect();
        FieldElement::from_raw(field, c)
    }

    pub fn random_nonzero<G: Rng + ?Sized>(field: &Field, rng: &mut G) -> FieldElement {
        loop {
            let x = Self::random(field, rng);
            if !x.is_zero() {
                return x;
            }
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// The prime-field value if the element lies in 𝔽_p.
    pub fn as_prime(&self) -> Option<u32> {
        if self.coeffs[1..].iter().all(|&c| c == 0) {
            Some(self.coeffs[0])
        } else {
            None
        }
    }

    fn same_field(&self, other: &FieldElement) {
        assert!(
            self.field == other.field,
            "field mismatch: {} vs {}",
            self.field,
            other.field
        );
    }

    pub fn scale(&self, c: u32) -> FieldElement {
        let p = self.field.p();
        let coeffs = self.coeffs.iter().map(|&x| fp::mul(x, c, p)).collect();
        FieldElement::from_raw(&self.field, coeffs)
    }

    fn mul_raw(&self, other: &FieldElement) -> FieldElement {
        self.same_field(other);
        let inner = &self.field.0;
        let n = inner.n;
        let p = inner.p as u64;
        if n == 1 {
            return FieldElement::from_raw(
                &self.field,
                vec![((self.coeffs[0] as u64 * other.coeffs[0] as u64) % p) as u32],
            );
        }
        let mut acc = vec![0u64; 2 * n - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let a = a as u64;
            for (slot, &b) in acc[i..i + n].iter_mut().zip(&other.coeffs) {
                *slot += a * b as u64;
            }
        }
        for i in (n..2 * n - 1).rev() {
            let c = acc[i] % p;
            if c == 0 {
                continue;
            }
            for &(j, t) in &inner.tail {
                acc[i - n + j] += c * t as u64;
            }
        }
        let coeffs = acc[..n].iter().map(|&v| (v % p) as u32).collect();
        FieldElement::from_raw(&self.field, coeffs)
    }

    pub fn square(&self) -> FieldElement {
        self.mul_raw(self)
    }

    pub fn pow_big(&self, e: &BigUint) -> FieldElement {
        let mut acc = FieldElement::one(&self.field);
        for i in (0..e.bits()).rev() {
            acc = acc.square();
            if e.bit(i) {
                acc = &acc * self;
            }
        }
        acc
    }

    /// `x^(p^k)`; negative `k` takes unique p-th roots.
    pub fn frobenius_power(&self, k: i64) -> FieldElement {
        let n = self.field.n() as i64;
        let k = k.rem_euclid(n);
        if k == 0 {
            return self.clone();
        }
        let (mat, times) = if k <= n - k {
            (self.field.frobenius_matrix(), k)
        } else {
            (self.field.inverse_frobenius_matrix(), n - k)
        };
        let mut c = self.coeffs.clone();
        for _ in 0..times {
            c = mat.mul_vec(&c);
        }
        FieldElement::from_raw(&self.field, c)
    }

    /// Trace to a subfield, returned as an element of that subfield.
    pub fn trace(&self, down_to: &Field) -> Result<FieldElement> {
        if !self.field.contains_subfield(down_to) {
            return Err(Error::Incompatible(format!(
                "{} is not a subfield of {}",
                down_to, self.field
            )));
        }
        let d = down_to.n() as i64;
        let steps = self.field.n() as i64 / d;
        let mut acc = FieldElement::zero(&self.field);
        let mut cur = self.clone();
        for _ in 0..steps {
            acc = &acc + &cur;
            cur = cur.frobenius_power(d);
        }
        let emb = down_to.embedding_into(&self.field)?;
        emb.preimage(&acc)
            .ok_or_else(|| Error::Invalid("trace left the subfield".into()))
    }

    /// True when the element lies in the subfield of degree `d`.
    pub fn lies_in_degree(&self, d: usize) -> bool {
        self.frobenius_power(d as i64) == *self
    }

    /// Maps the element into a field containing its own.
    pub fn embed(&self, target: &Field) -> Result<FieldElement> {
        if self.field == *target {
            return Ok(self.clone());
        }
        Ok(self.field.embedding_into(target)?.apply(self))
    }

    /// Pulls an element back along the canonical embedding, if it lies in
    /// the image.
    pub fn restrict(&self, to: &Field) -> Option<FieldElement> {
        if self.field == *to {
            return Some(self.clone());
        }
        to.embedding_into(&self.field).ok()?.preimage(self)
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.same_field(rhs);
        let p = self.field.p();
        let c = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| fp::add(a, b, p))
            .collect();
        FieldElement::from_raw(&self.field, c)
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.same_field(rhs);
        let p = self.field.p();
        let c = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| fp::sub(a, b, p))
            .collect();
        FieldElement::from_raw(&self.field, c)
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.mul_raw(rhs)
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let p = self.field.p();
        let c = self.coeffs.iter().map(|&a| fp::neg(a, p)).collect();
        FieldElement::from_raw(&self.field, c)
    }
}

macro_rules! owned_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}
pub(crate) use owned_ops;

owned_ops!(FieldElement);

impl Ring for FieldElement {
    type Parent = Field;

    fn parent(&self) -> Field {
        self.field.clone()
    }
    fn zero(parent: &Field) -> Self {
        FieldElement::from_raw(parent, vec![0; parent.n()])
    }
    fn one(parent: &Field) -> Self {
        let mut c = vec![0; parent.n()];
        c[0] = 1;
        FieldElement::from_raw(parent, c)
    }
    fn from_integer(parent: &Field, n: &BigInt) -> Self {
        let p = BigInt::from(parent.p());
        let r = ((n % &p) + &p) % &p;
        FieldElement::from_u64(parent, r.to_u64().unwrap())
    }
    fn is_integral_domain(_: &Field) -> bool {
        true
    }
    fn characteristic(parent: &Field) -> BigUint {
        BigUint::from(parent.p())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let p = self.field.p();
        if self.field.n() == 1 {
            return Some(FieldElement::from_raw(
                &self.field,
                vec![fp::inv(self.coeffs[0], p)?],
            ));
        }
        let mut a = self.coeffs.clone();
        fp::trim(&mut a);
        let mut inv = fp::poly_inv_mod(&a, self.field.modulus(), p)?;
        inv.resize(self.field.n(), 0);
        Some(FieldElement::from_raw(&self.field, inv))
    }
    fn pow(&self, e: u64) -> Self {
        self.pow_big(&BigUint::from(e))
    }
}

impl FieldRing for FieldElement {}

impl FrobeniusRing for FieldElement {
    fn frobenius(&self, k: i64) -> Self {
        self.frobenius_power(k)
    }
    fn residue_characteristic(parent: &Field) -> u32 {
        parent.p()
    }
    fn is_field(_: &Field) -> bool {
        true
    }
    fn generator(parent: &Field) -> Self {
        parent.generator()
    }
    fn frobenius_order(parent: &Field) -> usize {
        parent.n()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> Field {
        Field::new(2, 2).unwrap()
    }

    #[test]
    fn canonical_moduli() {
        assert_eq!(Field::new(2, 3).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(Field::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(Field::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(Field::new(2, 1).unwrap().modulus(), &[0, 1]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Field::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(
            Field::new(2, 0),
            Err(Error::DegreeOutOfRange { n: 0, .. })
        ));
        assert!(matches!(
            Field::new(2, MAX_DEGREE + 1),
            Err(Error::DegreeOutOfRange { .. })
        ));
        assert!(matches!(
            Field::new((1 << 20) + 7, 1),
            Err(Error::PrimeTooLarge { .. })
        ));
    }

    #[test]
    fn frobenius_on_f4() {
        let k = f4();
        let u = k.generator();
        let up1 = &u + &FieldElement::one(&k);
        assert_eq!(u.frobenius_power(1), up1);
        assert_eq!(u.frobenius_power(-1), up1);
        assert_eq!(u.frobenius_power(0), u);
        assert_eq!(u.frobenius_power(2), u);
    }

    #[test]
    fn trace_f4() {
        let k = f4();
        let f2 = Field::new(2, 1).unwrap();
        assert_eq!(k.generator().trace(&f2).unwrap(), FieldElement::one(&f2));
        assert!(FieldElement::one(&k).trace(&f2).unwrap().is_zero());
        let x = k.generator();
        assert_eq!(x.trace(&k).unwrap(), x);
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for (p, n) in [(2, 1), (2, 2), (2, 3), (3, 2), (5, 1), (3, 3), (2, 4)] {
            let k = Field::new(p, n).unwrap();
            let els: Vec<_> = k.elements().collect();
            for a in &els {
                if !a.is_zero() {
                    assert!((a * &a.inverse().unwrap()).is_one());
                }
                for b in &els {
                    assert_eq!(a * b, b * a);
                    assert_eq!(
                        (a + b).frobenius_power(1),
                        &a.frobenius_power(1) + &b.frobenius_power(1)
                    );
                }
            }
            let fixed = els.iter().filter(|a| a.frobenius_power(1) == **a).count();
            assert_eq!(fixed as u32, p as u32);
        }
    }

    #[test]
    fn display_and_index_round_trip() {
        let k = Field::new(3, 2).unwrap();
        let x = FieldElement::from_coeffs(&k, &[1, 2]).unwrap();
        assert_eq!(x.to_string(), "2*u+1");
        assert_eq!(FieldElement::from_index(&k, x.index()), x);
    }
}
