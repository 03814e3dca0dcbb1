//! Dense univariate polynomials over a [`Ring`], little-endian.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;

use crate::field::FieldElement;
use crate::ring::{FieldRing, Ring};

#[derive(Clone, PartialEq, Eq)]
pub struct DensePoly<R: Ring> {
    parent: R::Parent,
    coeffs: Vec<R>,
}

impl<R: Ring> fmt::Debug for DensePoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DensePoly{:?}", self.coeffs)
    }
}

impl<R: Ring> fmt::Display for DensePoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_in('X', f)
    }
}

impl<R: Ring> DensePoly<R> {
    pub fn new(parent: &R::Parent, mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        DensePoly {
            parent: parent.clone(),
            coeffs,
        }
    }

    pub fn zero(parent: &R::Parent) -> Self {
        Self::new(parent, Vec::new())
    }

    pub fn one(parent: &R::Parent) -> Self {
        Self::constant(R::one(parent))
    }

    pub fn constant(c: R) -> Self {
        let parent = c.parent();
        Self::new(&parent, vec![c])
    }

    /// `c·X^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        let parent = c.parent();
        let mut v = vec![R::zero(&parent); k];
        v.push(c);
        Self::new(&parent, v)
    }

    pub fn x(parent: &R::Parent) -> Self {
        Self::monomial(R::one(parent), 1)
    }

    pub fn parent(&self) -> &R::Parent {
        &self.parent
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
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

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Self::new(&self.parent, v)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        Self::new(&self.parent, v)
    }

    pub fn neg(&self) -> Self {
        Self::new(
            &self.parent,
            self.coeffs.iter().map(|c| -c.clone()).collect(),
        )
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(
            &self.parent,
            self.coeffs.iter().map(|x| c.clone() * x.clone()).collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
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
                v[i + j] = v[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(&self.parent, v)
    }

    /// Product truncated to terms of degree `<= n`.
    pub fn mul_trunc(&self, other: &Self, n: usize) -> Self {
        let mut v = vec![R::zero(&self.parent); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                v[i + j] = v[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(&self.parent, v)
    }

    pub fn truncate(&self, n: usize) -> Self {
        Self::new(
            &self.parent,
            self.coeffs.iter().take(n + 1).cloned().collect(),
        )
    }

    pub fn eval(&self, x: &R) -> R {
        let mut acc = R::zero(&self.parent);
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn map<S: Ring>(&self, parent: &S::Parent, f: impl Fn(&R) -> S) -> DensePoly<S> {
        DensePoly::new(parent, self.coeffs.iter().map(f).collect())
    }

    /// The reversed polynomial `X^d f(1/X)` for `d = deg f`.
    pub fn reversed(&self) -> Self {
        let mut v = self.coeffs.clone();
        v.reverse();
        Self::new(&self.parent, v)
    }

    /// Writes the polynomial in descending order using variable `var`.
    pub fn fmt_in(&self, var: char, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(var))
    }

    pub fn to_text(&self, var: char) -> String {
        self.render(var, false)
    }

    /// Ascending order, as power series are usually written: `1-6*t+t^2`.
    pub fn to_series_text(&self, var: char) -> String {
        self.render(var, true)
    }

    fn render(&self, var: char, ascending: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        let order: Vec<usize> = if ascending {
            (0..self.coeffs.len()).collect()
        } else {
            (0..self.coeffs.len()).rev().collect()
        };
        for i in order {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let neg = cs.starts_with('-');
            let body = if neg { &cs[1..] } else { &cs[..] };
            let compound = body.contains(['+', '-']);
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { "-" } else { "+" });
            }
            let coeff_txt = if compound {
                format!("({body})")
            } else {
                body.to_string()
            };
            match i {
                0 => out.push_str(&coeff_txt),
                _ => {
                    if body != "1" {
                        out.push_str(&coeff_txt);
                        out.push('*');
                    }
                    out.push(var);
                    if i > 1 {
                        out.push_str(&format!("^{i}"));
                    }
                }
            }
        }
        out
    }
}

impl<R: FieldRing> DensePoly<R> {
    pub fn make_monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let inv = l.inverse().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Euclidean division by a nonzero divisor.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("polynomial division by zero");
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(&self.parent), self.clone());
        }
        let inv = d.coeffs[dd].inverse().expect("nonzero leading coefficient");
        let mut q = vec![R::zero(&self.parent); r.len() - dd];
        for top in (dd..r.len()).rev() {
            let c = r[top].clone() * inv.clone();
            if c.is_zero() {
                continue;
            }
            let shift = top - dd;
            for (j, b) in d.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    r[shift + j] = r[shift + j].clone() - c.clone() * b.clone();
                }
            }
            q[shift] = c;
        }
        r.truncate(dd);
        (Self::new(&self.parent, q), Self::new(&self.parent, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    /// Monic greatest common divisor (zero if both inputs vanish).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    pub fn mulmod(&self, other: &Self, m: &Self) -> Self {
        self.mul(other).rem(m)
    }

    pub fn powmod(&self, e: &BigUint, m: &Self) -> Self {
        let mut acc = Self::one(&self.parent).rem(m);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            acc = acc.mulmod(&acc, m);
            if e.bit(i) {
                acc = acc.mulmod(&base, m);
            }
        }
        acc
    }
}

impl DensePoly<FieldElement> {
    /// Distinct roots lying in the coefficient field, sorted by coordinates.
    pub fn roots(&self) -> Vec<FieldElement> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let field = self.parent.clone();
        let f = self.make_monic();
        let x = Self::x(&field);
        // X^(p^n) mod f by repeated p-th powers
        let p = BigUint::from(field.p());
        let mut xq = x.clone();
        for _ in 0..field.n() {
            xq = xq.powmod(&p, &f);
        }
        let g = f.gcd(&xq.sub(&x));
        let mut out = Vec::new();
        let mut rng = crate::random::deterministic_rng(0x005e_ed0f_2007);
        split_linear(&g, &mut rng, &mut out);
        out.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
        out
    }

    /// Roots with multiplicity, each root repeated as often as it divides.
    pub fn roots_with_multiplicity(&self) -> Vec<(FieldElement, usize)> {
        let mut out = Vec::new();
        for r in self.roots() {
            let lin = Self::new(
                &self.parent,
                vec![-r.clone(), FieldElement::one(&self.parent)],
            );
            let mut q = self.clone();
            let mut mult = 0;
            loop {
                let (qq, rr) = q.divrem(&lin);
                if !rr.is_zero() {
                    break;
                }
                mult += 1;
                q = qq;
            }
            out.push((r, mult));
        }
        out
    }
}

/// Equal-degree splitting of a squarefree product of linear factors.
fn split_linear<G: Rng>(g: &DensePoly<FieldElement>, rng: &mut G, out: &mut Vec<FieldElement>) {
    let Some(d) = g.degree() else { return };
    if d == 0 {
        return;
    }
    let field = g.parent().clone();
    if d == 1 {
        let g = g.make_monic();
        out.push(-g.coeff(0));
        return;
    }
    let order: BigUint = field.order().clone();
    loop {
        let delta = FieldElement::random(&field, rng);
        let lin = DensePoly::new(&field, vec![delta.clone(), FieldElement::one(&field)]);
        let w = if field.p() == 2 {
            // absolute trace of delta*X modulo g
            let mut t = DensePoly::new(&field, vec![FieldElement::zero(&field), delta]);
            let mut acc = t.clone();
            let two = BigUint::from(2u32);
            for _ in 1..field.n() {
                t = t.powmod(&two, g);
                acc = acc.add(&t);
            }
            acc
        } else {
            let e: BigUint = (&order - BigUint::one()) >> 1;
            lin.powmod(&e, g).sub(&DensePoly::one(&field))
        };
        let h = g.gcd(&w);
        let dh = h.degree().unwrap_or(0);
        if dh > 0 && dh < d && !h.is_zero() {
            let (q, _) = g.divrem(&h);
            split_linear(&h, rng, out);
            split_linear(&q, rng, out);
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::ring::Integer;
    use crate::ring::IntegerRing;

    #[test]
    fn integer_product_and_text() {
        let a = DensePoly::new(&IntegerRing, vec![Integer::from(1), Integer::from(1)]);
        let b = DensePoly::new(&IntegerRing, vec![Integer::from(1), Integer::from(-1)]);
        let c = a.mul(&b);
        assert_eq!(c.to_text('t'), "-t^2+1");
    }

    #[test]
    fn roots_over_f8() {
        let k = Field::new(2, 3).unwrap();
        // X^3 + X + 1 has the three conjugates of u as roots
        let one = FieldElement::one(&k);
        let zero = FieldElement::zero(&k);
        let f = DensePoly::new(&k, vec![one.clone(), one.clone(), zero, one]);
        let r = f.roots();
        assert_eq!(r.len(), 3);
        for x in &r {
            assert!(f.eval(x).is_zero());
        }
    }

    #[test]
    fn roots_over_odd_field() {
        let k = Field::new(3, 2).unwrap();
        // X^2 - 1 over F_9
        let f = DensePoly::new(
            &k,
            vec![
                FieldElement::from_i64(&k, -1),
                FieldElement::zero(&k),
                FieldElement::one(&k),
            ],
        );
        let r = f.roots();
        assert_eq!(r.len(), 2);
        let m = f.mul(&f).roots_with_multiplicity();
        assert!(m.iter().all(|(_, k)| *k == 2));
    }
}
