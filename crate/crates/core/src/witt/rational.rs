use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::poly::DensePoly;
use crate::ring::Ring;

use super::BigWitt;

/// A fraction `f/g` of polynomials with constant term 1 over a domain.
#[derive(Clone)]
pub struct RationalWitt<R: Ring> {
    num: DensePoly<R>,
    den: DensePoly<R>,
}

impl<R: Ring> fmt::Debug for RationalWitt<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<R: Ring> fmt::Display for RationalWitt<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})/({})",
            self.num.to_series_text('t'),
            self.den.to_series_text('t')
        )
    }
}

/// Cross-multiplied equality.
impl<R: Ring> PartialEq for RationalWitt<R> {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl<R: Ring> Eq for RationalWitt<R> {}

impl<R: Ring> RationalWitt<R> {
    pub fn new(num: DensePoly<R>, den: DensePoly<R>) -> Result<Self> {
        let parent = num.parent().clone();
        if den.parent() != &parent {
            return Err(Error::BaseMismatch(
                parent.to_string(),
                den.parent().to_string(),
            ));
        }
        if !R::is_integral_domain(&parent) {
            return Err(Error::Invalid(format!(
                "rational Witt vectors need an integral domain, got {parent}"
            )));
        }
        for p in [&num, &den] {
            if !p.coeff(0).is_one() {
                return Err(Error::Invalid(format!(
                    "numerator and denominator need constant term 1, got {}",
                    p.to_series_text('t')
                )));
            }
        }
        Ok(RationalWitt { num, den })
    }

    pub fn from_polynomial(f: DensePoly<R>) -> Result<Self> {
        let one = DensePoly::one(f.parent());
        Self::new(f, one)
    }

    pub fn numerator(&self) -> &DensePoly<R> {
        &self.num
    }

    pub fn denominator(&self) -> &DensePoly<R> {
        &self.den
    }

    /// The group law: product of fractions.
    pub fn add(&self, other: &Self) -> Self {
        RationalWitt {
            num: self.num.mul(&other.num),
            den: self.den.mul(&other.den),
        }
    }

    pub fn neg(&self) -> Self {
        RationalWitt {
            num: self.den.clone(),
            den: self.num.clone(),
        }
    }
}

/// The expansion of `f/g` as a truncated series.
pub fn rational_to_big<R: Ring>(r: &RationalWitt<R>, truncation: usize) -> Result<BigWitt<R>> {
    let f = BigWitt::from_series(&r.num, truncation)?;
    let g = BigWitt::from_series(&r.den, truncation)?;
    f.sub(&g)
}

/// `∏ (1 − a_j t)`.
pub fn roots_to_coefficients<R: Ring>(parent: &R::Parent, roots: &[R]) -> DensePoly<R> {
    roots.iter().fold(DensePoly::one(parent), |acc, a| {
        acc.mul(&DensePoly::new(parent, vec![R::one(parent), -a.clone()]))
    })
}

/// The multiset `{a_j}` with `f = ∏(1 − a_j t)`, over the least extension
/// where it exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootMultiset {
    /// Degree of the splitting field over the coefficient field.
    pub degree: usize,
    pub field: Field,
    /// Sorted, each root repeated by multiplicity.
    pub roots: Vec<FieldElement>,
}

/// Factors `f = 1 + c_1 t + … + c_i t^i` (with `c_i ≠ 0`) into Teichmüller
/// factors, searching extension degrees up to `max_degree`.
pub fn coefficients_to_roots(
    f: &DensePoly<FieldElement>,
    max_degree: usize,
) -> Result<RootMultiset> {
    let base = f.parent().clone();
    if !f.coeff(0).is_one() {
        return Err(Error::Invalid("constant term must be 1".into()));
    }
    let i = f.degree().unwrap_or(0);
    // t^i f(1/t) = ∏ (t − a_j) is monic, with nonzero constant term c_i
    let g = f.reversed();
    for k in 1..=max_degree.max(1) {
        let ext = base.extension(k)?;
        let emb = base.embedding_into(&ext)?;
        let gk = g.map(&ext, |c| emb.apply(c));
        let found = gk.roots_with_multiplicity();
        if found.iter().map(|(_, m)| m).sum::<usize>() == i {
            let mut roots: Vec<FieldElement> = found
                .into_iter()
                .flat_map(|(r, m)| std::iter::repeat_n(r, m))
                .collect();
            roots.sort();
            return Ok(RootMultiset {
                degree: k,
                field: ext,
                roots,
            });
        }
    }
    Err(Error::SplittingDegreeExceeded {
        max: max_degree,
        searched: max_degree,
        partial_count: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_with, PolyAlgebra};
    use crate::ring::{Integer, IntegerRing};

    fn zp(s: &str) -> DensePoly<Integer> {
        let alg = PolyAlgebra::<Integer> {
            parent: IntegerRing,
            var: 't',
            generator: None,
            max_degree: 64,
        };
        parse_with(&alg, s).unwrap()
    }

    fn big(s: &str, n: usize) -> BigWitt<Integer> {
        BigWitt::from_series(&zp(s), n).unwrap()
    }

    #[test]
    fn rational_examples() {
        let r = RationalWitt::new(zp("1"), zp("1+t")).unwrap();
        assert_eq!(rational_to_big(&r, 3).unwrap(), big("1-t+t^2-t^3", 3));
        let r = RationalWitt::from_polynomial(zp("1+t")).unwrap();
        for n in 1..5 {
            assert_eq!(rational_to_big(&r, n).unwrap(), big("1+t", n));
        }
        let r = RationalWitt::new(zp("(1+t)(1+2t)"), zp("1+2t")).unwrap();
        assert_eq!(rational_to_big(&r, 2).unwrap(), big("1+t", 2));
        assert_eq!(r, RationalWitt::from_polynomial(zp("1+t")).unwrap());
        assert!(RationalWitt::new(zp("2+t"), zp("1")).is_err());
    }

    #[test]
    fn group_law_is_respected() {
        let a = RationalWitt::new(zp("1+3t"), zp("1-t^2")).unwrap();
        let b = RationalWitt::new(zp("1-t+t^3"), zp("1+5t")).unwrap();
        let lhs = rational_to_big(&a.add(&b), 6).unwrap();
        let rhs = rational_to_big(&a, 6)
            .unwrap()
            .add(&rational_to_big(&b, 6).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
        let zero = rational_to_big(&a.add(&a.neg()), 6).unwrap();
        assert_eq!(zero, BigWitt::zero(&IntegerRing, 6));
    }

    #[test]
    fn roots_and_coefficients() {
        let a = Integer::new(2);
        let b = Integer::new(-5);
        assert_eq!(
            roots_to_coefficients(&IntegerRing, std::slice::from_ref(&a)),
            zp("1-2t")
        );
        assert_eq!(
            roots_to_coefficients(&IntegerRing, &[a.clone(), b.clone()]),
            zp("1+3t-10t^2")
        );
        assert_eq!(
            roots_to_coefficients(&IntegerRing, &[a.clone(), b.clone()]),
            roots_to_coefficients(&IntegerRing, &[b, a])
        );
    }

    #[test]
    fn factorization_recovers_the_multiset() {
        let f2 = Field::new(2, 1).unwrap();
        // 1 + t + t^2 is irreducible: roots are the two primitive cube roots
        let f = DensePoly::new(&f2, vec![FieldElement::one(&f2); 3]);
        let r = coefficients_to_roots(&f, 6).unwrap();
        assert_eq!(r.degree, 2);
        assert_eq!(
            roots_to_coefficients(&r.field, &r.roots),
            f.map(&r.field, |c| c.embed(&r.field).unwrap())
        );
        // repeated root: (1 - t)^2 = 1 + t^2 over F_2
        let g = DensePoly::new(
            &f2,
            vec![
                FieldElement::one(&f2),
                FieldElement::zero(&f2),
                FieldElement::one(&f2),
            ],
        );
        let r = coefficients_to_roots(&g, 4).unwrap();
        assert_eq!(r.degree, 1);
        assert_eq!(r.roots, vec![FieldElement::one(&f2); 2]);
        assert!(coefficients_to_roots(&f, 1).is_err());
    }
}
