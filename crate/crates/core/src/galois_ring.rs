//! Galois rings GR(p^m, n) = W_m(𝔽_{p^n}).
//!
//! The defining polynomial is the lift of the field's canonical modulus
//! whose roots are Teichmüller: if `y` is the Teichmüller lift of `x` in any
//! lift of the field, the modulus is `∏ (X − y^{p^i})`. With this choice the
//! generator `u` itself is Teichmüller, so the Witt vector Frobenius is
//! `Σ c_i u^i ↦ Σ c_i u^{ip}`.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{check_prime, owned_ops, Field, FieldElement, MAX_DEGREE};
use crate::ring::{FrobeniusRing, Ring};

/// Largest supported `p^m` (exclusive).
pub const MAX_MODULUS: u64 = 1 << 62;

struct Inner {
    p: u32,
    m: u32,
    n: usize,
    pm: u64,
    lifted: Vec<u64>,
    tail: Vec<(usize, u64)>,
    residue: Field,
    frob: OnceLock<Vec<Vec<u64>>>,
}

/// Handle to GR(p^m, n).
#[derive(Clone)]
pub struct GaloisRing(Arc<Inner>);

pub type GaloisRingDescriptor = GaloisRing;

impl PartialEq for GaloisRing {
    fn eq(&self, o: &Self) -> bool {
        Arc::ptr_eq(&self.0, &o.0) || (self.0.p, self.0.m, self.0.n) == (o.0.p, o.0.m, o.0.n)
    }
}
impl Eq for GaloisRing {}

impl Hash for GaloisRing {
    fn hash<H: Hasher>(&self, state: &mut H) {
        (self.0.p, self.0.m, self.0.n).hash(state);
    }
}

impl fmt::Debug for GaloisRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GaloisRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GR({}^{}, {})", self.0.p, self.0.m, self.0.n)
    }
}

#[inline]
fn mulmod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

/// Product of two residue vectors modulo a monic polynomial given by its
/// tail (`u^n = Σ tail`).
fn poly_mulmod(a: &[u64], b: &[u64], tail: &[(usize, u64)], n: usize, pm: u64) -> Vec<u64> {
    let pmw = pm as u128;
    let mut acc = vec![0u128; 2 * n - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            acc[i + j] = (acc[i + j] + x as u128 * y as u128) % pmw;
        }
    }
    for i in (n..2 * n - 1).rev() {
        let c = acc[i] % pmw;
        if c == 0 {
            continue;
        }
        for &(j, t) in tail {
            acc[i - n + j] = (acc[i - n + j] + c * t as u128) % pmw;
        }
    }
    acc.truncate(n);
    acc.into_iter().map(|v| (v % pmw) as u64).collect()
}

fn poly_pow(a: &[u64], e: &BigUint, tail: &[(usize, u64)], n: usize, pm: u64) -> Vec<u64> {
    let mut acc = vec![0u64; n];
    acc[0] = 1 % pm;
    for i in (0..e.bits()).rev() {
        acc = poly_mulmod(&acc, &acc, tail, n, pm);
        if e.bit(i) {
            acc = poly_mulmod(&acc, a, tail, n, pm);
        }
    }
    acc
}

fn tail_of(monic: &[u64], pm: u64) -> Vec<(usize, u64)> {
    let n = monic.len() - 1;
    (0..n)
        .filter(|&j| !monic[j].is_multiple_of(pm))
        .map(|j| (j, (pm - monic[j] % pm) % pm))
        .collect()
}

type Registry = Mutex<HashMap<(u32, u32, usize), GaloisRing>>;

fn registry() -> &'static Registry {
    static R: OnceLock<Registry> = OnceLock::new();
    R.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Teichmüller-rooted lift of the residue modulus to ℤ/p^m.
fn lift_modulus(residue: &Field, m: u32, pm: u64) -> Vec<u64> {
    let n = residue.n();
    let naive: Vec<u64> = residue.modulus().iter().map(|&c| c as u64).collect();
    if m == 1 || n == 1 {
        if n == 1 {
            // x − Teich(root); the canonical degree-1 modulus is x
            return vec![0, 1];
        }
        return naive;
    }
    let tail = tail_of(&naive, pm);
    let q = BigUint::from(residue.p()).pow(n as u32);
    let mut x = vec![0u64; n];
    x[1] = 1;
    let y = poly_pow(&x, &q.pow(m - 1), &tail, n, pm);
    // ∏_{i<n} (X − y^{p^i}) with coefficients in the naive ring
    let p = BigUint::from(residue.p());
    let mut conj = y;
    let mut prod: Vec<Vec<u64>> = vec![{
        let mut one = vec![0u64; n];
        one[0] = 1;
        one
    }];
    for _ in 0..n {
        let neg: Vec<u64> = conj.iter().map(|&c| (pm - c) % pm).collect();
        let mut next = vec![vec![0u64; n]; prod.len() + 1];
        for (k, c) in prod.iter().enumerate() {
            for (a, b) in next[k + 1].iter_mut().zip(c) {
                *a = (*a + *b) % pm;
            }
            let t = poly_mulmod(c, &neg, &tail, n, pm);
            for (a, b) in next[k].iter_mut().zip(&t) {
                *a = (*a + *b) % pm;
            }
        }
        prod = next;
        conj = poly_pow(&conj, &p, &tail, n, pm);
    }
    prod.iter()
        .map(|c| {
            debug_assert!(
                c[1..].iter().all(|&x| x == 0),
                "coefficients must be scalars"
            );
            c[0]
        })
        .collect()
}

impl GaloisRing {
    pub fn new(p: u64, m: u32, n: usize) -> Result<GaloisRing> {
        let p = check_prime(p)?;
        if m == 0 {
            return Err(Error::Invalid("precision m must be at least 1".into()));
        }
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::DegreeOutOfRange { n, max: MAX_DEGREE });
        }
        let pm = (p as u64)
            .checked_pow(m)
            .filter(|&v| v < MAX_MODULUS)
            .ok_or_else(|| Error::ResourceLimit(format!("{p}^{m} exceeds 2^62")))?;
        if let Some(r) = registry().lock().unwrap().get(&(p, m, n)) {
            return Ok(r.clone());
        }
        let residue = Field::new(p as u64, n)?;
        let lifted = lift_modulus(&residue, m, pm);
        let tail = tail_of(&lifted, pm);
        let ring = GaloisRing(Arc::new(Inner {
            p,
            m,
            n,
            pm,
            lifted,
            tail,
            residue,
            frob: OnceLock::new(),
        }));
        Ok(registry()
            .lock()
            .unwrap()
            .entry((p, m, n))
            .or_insert(ring)
            .clone())
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }
    pub fn m(&self) -> u32 {
        self.0.m
    }
    pub fn n(&self) -> usize {
        self.0.n
    }
    /// `p^m`, the characteristic.
    pub fn modulus_int(&self) -> u64 {
        self.0.pm
    }
    /// Monic lifted modulus, constant term first.
    pub fn lifted_modulus(&self) -> &[u64] {
        &self.0.lifted
    }
    pub fn residue_field(&self) -> &Field {
        &self.0.residue
    }
    pub fn literal(&self) -> String {
        format!("{}:{}:{}", self.0.p, self.0.m, self.0.n)
    }

    pub fn size(&self) -> Option<u64> {
        self.0.pm.checked_pow(self.0.n as u32)
    }

    /// The ring of lower precision `j ≤ m`.
    pub fn truncation(&self, j: u32) -> Result<GaloisRing> {
        if j == 0 || j > self.0.m {
            return Err(Error::Invalid(format!(
                "precision {j} outside 1..={}",
                self.0.m
            )));
        }
        GaloisRing::new(self.0.p as u64, j, self.0.n)
    }

    pub fn generator(&self) -> GaloisElement {
        let mut c = vec![0u64; self.0.n];
        if self.0.n > 1 {
            c[1] = 1;
        }
        GaloisElement::from_raw(self, c)
    }

    pub fn elements(&self) -> impl Iterator<Item = GaloisElement> + '_ {
        let size = self.size().expect("ring too large to enumerate");
        (0..size).map(move |i| GaloisElement::from_index(self, i))
    }

    fn frobenius_table(&self) -> &Vec<Vec<u64>> {
        self.0.frob.get_or_init(|| {
            let up = self.generator().pow(self.0.p as u64);
            let mut cur = GaloisElement::one(self);
            let mut cols = Vec::with_capacity(self.0.n);
            for _ in 0..self.0.n {
                cols.push(cur.coeffs.clone());
                cur = &cur * &up;
            }
            cols
        })
    }

    /// Multiplicative section of the reduction map.
    pub fn teichmuller(&self, x: &FieldElement) -> Result<GaloisElement> {
        if x.field() != &self.0.residue {
            return Err(Error::BaseMismatch(
                x.field().to_string(),
                self.0.residue.to_string(),
            ));
        }
        let lift = GaloisElement::from_raw(self, x.coeffs().iter().map(|&c| c as u64).collect());
        let q = BigUint::from(self.0.p).pow(self.0.n as u32);
        Ok(lift.pow_big(&q.pow(self.0.m - 1)))
    }
}

/// An element of a Galois ring.
#[derive(Clone)]
pub struct GaloisElement {
    ring: GaloisRing,
    coeffs: Vec<u64>,
}

impl PartialEq for GaloisElement {
    fn eq(&self, o: &Self) -> bool {
        self.ring == o.ring && self.coeffs == o.coeffs
    }
}
impl Eq for GaloisElement {}

impl Hash for GaloisElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ring.hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for GaloisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GaloisElement {
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

impl GaloisElement {
    fn from_raw(ring: &GaloisRing, coeffs: Vec<u64>) -> Self {
        debug_assert_eq!(coeffs.len(), ring.n());
        GaloisElement {
            ring: ring.clone(),
            coeffs,
        }
    }

    pub fn from_coeffs(ring: &GaloisRing, coeffs: &[u64]) -> Result<Self> {
        if coeffs.len() > ring.n() {
            return Err(Error::Dimension(format!(
                "{} coordinates for residue degree {}",
                coeffs.len(),
                ring.n()
            )));
        }
        let mut c: Vec<u64> = coeffs.iter().map(|&x| x % ring.0.pm).collect();
        c.resize(ring.n(), 0);
        Ok(Self::from_raw(ring, c))
    }

    pub fn from_index(ring: &GaloisRing, mut idx: u64) -> Self {
        let pm = ring.0.pm;
        let c = (0..ring.n())
            .map(|_| {
                let d = idx % pm;
                idx /= pm;
                d
            })
            .collect();
        Self::from_raw(ring, c)
    }

    pub fn random<G: Rng + ?Sized>(ring: &GaloisRing, rng: &mut G) -> Self {
        let c = (0..ring.n()).map(|_| rng.gen_range(0..ring.0.pm)).collect();
        Self::from_raw(ring, c)
    }

    pub fn ring(&self) -> &GaloisRing {
        &self.ring
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Image in the residue field.
    pub fn reduce(&self) -> FieldElement {
        let p = self.ring.0.p as u64;
        let c: Vec<u32> = self.coeffs.iter().map(|&x| (x % p) as u32).collect();
        FieldElement::from_coeffs(&self.ring.0.residue, &c).expect("matching degree")
    }

    /// Image in the ring of precision `j`.
    pub fn truncate(&self, j: u32) -> Result<GaloisElement> {
        let r = self.ring.truncation(j)?;
        GaloisElement::from_coeffs(&r, &self.coeffs)
    }

    fn same_ring(&self, o: &Self) {
        assert!(
            self.ring == o.ring,
            "ring mismatch: {} vs {}",
            self.ring,
            o.ring
        );
    }

    pub fn pow_big(&self, e: &BigUint) -> Self {
        let r = &self.ring.0;
        Self::from_raw(&self.ring, poly_pow(&self.coeffs, e, &r.tail, r.n, r.pm))
    }

    /// The Witt vector Frobenius applied `k` times (any sign).
    pub fn frobenius_lift(&self, k: i64) -> Self {
        let n = self.ring.n() as i64;
        let k = k.rem_euclid(n);
        let pm = self.ring.0.pm;
        let table = self.ring.frobenius_table();
        let mut c = self.coeffs.clone();
        for _ in 0..k {
            let mut next = vec![0u64; c.len()];
            for (j, &cj) in c.iter().enumerate() {
                if cj == 0 {
                    continue;
                }
                for (slot, &t) in next.iter_mut().zip(&table[j]) {
                    *slot = (*slot + mulmod(cj, t, pm)) % pm;
                }
            }
            c = next;
        }
        Self::from_raw(&self.ring, c)
    }
}

impl Add for &GaloisElement {
    type Output = GaloisElement;
    fn add(self, o: &GaloisElement) -> GaloisElement {
        self.same_ring(o);
        let pm = self.ring.0.pm;
        let c = self
            .coeffs
            .iter()
            .zip(&o.coeffs)
            .map(|(&a, &b)| ((a as u128 + b as u128) % pm as u128) as u64)
            .collect();
        GaloisElement::from_raw(&self.ring, c)
    }
}

impl Sub for &GaloisElement {
    type Output = GaloisElement;
    fn sub(self, o: &GaloisElement) -> GaloisElement {
        self.same_ring(o);
        let pm = self.ring.0.pm;
        let c = self
            .coeffs
            .iter()
            .zip(&o.coeffs)
            .map(|(&a, &b)| ((a as u128 + pm as u128 - b as u128) % pm as u128) as u64)
            .collect();
        GaloisElement::from_raw(&self.ring, c)
    }
}

impl Mul for &GaloisElement {
    type Output = GaloisElement;
    fn mul(self, o: &GaloisElement) -> GaloisElement {
        self.same_ring(o);
        let r = &self.ring.0;
        if r.n == 1 {
            return GaloisElement::from_raw(
                &self.ring,
                vec![mulmod(self.coeffs[0], o.coeffs[0], r.pm)],
            );
        }
        GaloisElement::from_raw(
            &self.ring,
            poly_mulmod(&self.coeffs, &o.coeffs, &r.tail, r.n, r.pm),
        )
    }
}

impl Neg for &GaloisElement {
    type Output = GaloisElement;
    fn neg(self) -> GaloisElement {
        let pm = self.ring.0.pm;
        let c = self.coeffs.iter().map(|&a| (pm - a) % pm).collect();
        GaloisElement::from_raw(&self.ring, c)
    }
}

owned_ops!(GaloisElement);

impl Ring for GaloisElement {
    type Parent = GaloisRing;

    fn parent(&self) -> GaloisRing {
        self.ring.clone()
    }
    fn zero(r: &GaloisRing) -> Self {
        GaloisElement::from_raw(r, vec![0; r.n()])
    }
    fn one(r: &GaloisRing) -> Self {
        let mut c = vec![0; r.n()];
        c[0] = 1 % r.0.pm;
        GaloisElement::from_raw(r, c)
    }
    fn from_integer(r: &GaloisRing, n: &BigInt) -> Self {
        let pm = BigInt::from(r.0.pm);
        let v = ((n % &pm) + &pm) % &pm;
        let mut c = vec![0; r.n()];
        c[0] = v.to_u64().unwrap();
        GaloisElement::from_raw(r, c)
    }
    fn is_integral_domain(r: &GaloisRing) -> bool {
        r.m() == 1
    }
    fn characteristic(r: &GaloisRing) -> BigUint {
        BigUint::from(r.0.pm)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
    /// Units are exactly the elements with nonzero reduction; the inverse is
    /// lifted from the residue field by Newton iteration.
    fn inverse(&self) -> Option<Self> {
        let r0 = self.reduce().inverse()?;
        let mut x =
            GaloisElement::from_raw(&self.ring, r0.coeffs().iter().map(|&c| c as u64).collect());
        let two = GaloisElement::from_integer(&self.ring, &BigInt::from(2));
        for _ in 0..64 {
            let ax = self * &x;
            if ax.is_one() {
                return Some(x);
            }
            x = &x * &(&two - &ax);
        }
        None
    }
    fn pow(&self, e: u64) -> Self {
        self.pow_big(&BigUint::from(e))
    }
}

impl FrobeniusRing for GaloisElement {
    fn frobenius(&self, k: i64) -> Self {
        self.frobenius_lift(k)
    }
    fn residue_characteristic(r: &GaloisRing) -> u32 {
        r.p()
    }
    fn is_field(r: &GaloisRing) -> bool {
        r.m() == 1
    }
    fn generator(r: &GaloisRing) -> Self {
        r.generator()
    }
    fn frobenius_order(r: &GaloisRing) -> usize {
        r.n()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_rings() {
        let z4 = GaloisRing::new(2, 2, 1).unwrap();
        assert_eq!(z4.modulus_int(), 4);
        assert_eq!(z4.size(), Some(4));
        let r = GaloisRing::new(2, 1, 3).unwrap();
        assert_eq!(r.lifted_modulus(), &[1, 1, 0, 1]);
        let gr = GaloisRing::new(2, 2, 2).unwrap();
        assert_eq!(gr.lifted_modulus(), &[1, 1, 1]);
    }

    #[test]
    fn frobenius_of_u_in_gr4_2() {
        let gr = GaloisRing::new(2, 2, 2).unwrap();
        let u = gr.generator();
        assert_eq!(
            u.frobenius_lift(1),
            GaloisElement::from_coeffs(&gr, &[3, 3]).unwrap()
        );
        assert_eq!(u.frobenius_lift(2), u);
        assert_eq!(u.frobenius_lift(-1), u.frobenius_lift(1));
        let z4 = GaloisRing::new(2, 2, 1).unwrap();
        let x = GaloisElement::from_coeffs(&z4, &[3]).unwrap();
        assert_eq!(x.frobenius_lift(1), x);
    }

    #[test]
    fn teichmuller_is_cube_root_of_unity() {
        let gr = GaloisRing::new(2, 2, 2).unwrap();
        let u = gr.residue_field().generator();
        let t = gr.teichmuller(&u).unwrap();
        assert_eq!(t.reduce(), u);
        assert!(t.pow(3).is_one());
        assert_eq!(t, gr.generator());
    }

    #[test]
    fn ring_axioms_and_reduction_small() {
        for (p, m, n) in [
            (2u64, 2u32, 2usize),
            (2, 3, 2),
            (3, 2, 2),
            (2, 2, 3),
            (5, 2, 1),
            (2, 4, 2),
        ] {
            let r = GaloisRing::new(p, m, n).unwrap();
            if r.size().unwrap() > 256 {
                continue;
            }
            let els: Vec<_> = r.elements().collect();
            for a in &els {
                let fa = a.frobenius_lift(1);
                assert_eq!(fa.reduce(), a.reduce().frobenius_power(1));
                assert_eq!(a.frobenius_lift(n as i64), *a);
                for b in &els {
                    assert_eq!(a * b, b * a);
                    assert_eq!((a * b).frobenius_lift(1), &fa * &b.frobenius_lift(1));
                    assert_eq!((a + b).reduce(), &a.reduce() + &b.reduce());
                    for c in els.iter().step_by(7) {
                        assert_eq!(&(a * b) * c, a * &(b * c));
                        assert_eq!(a * &(b + c), &(a * b) + &(a * c));
                    }
                }
                match a.inverse() {
                    Some(ai) => assert!((a * &ai).is_one()),
                    None => assert!(a.reduce().is_zero()),
                }
            }
        }
    }

    #[test]
    fn teichmuller_multiplicative() {
        let r = GaloisRing::new(3, 2, 2).unwrap();
        let k = r.residue_field().clone();
        for x in k.elements() {
            let tx = r.teichmuller(&x).unwrap();
            assert_eq!(tx.pow(9), tx);
            for y in k.elements() {
                assert_eq!(
                    r.teichmuller(&(&x * &y)).unwrap(),
                    &tx * &r.teichmuller(&y).unwrap()
                );
            }
        }
    }
}
