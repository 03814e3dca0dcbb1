//! Roots of additive polynomials `Σ a_i x^{p^i}`.
//!
//! With `a_0 ≠ 0` and `m = deg`, a root `x` gives the vector
//! `X = (x, x^p, …, x^{p^{m-1}})` with `X^φ = C·X` for the companion matrix
//! `C` of the coefficients. Writing `A = C⁻¹` and `L = A·A^φ⋯A^{φ^{n-1}}`
//! (`n = [K:𝔽_p]`), the q-power Frobenius acts on roots as `L⁻¹`, so the
//! roots over `K_j` form a space of dimension `dim ker(L^j − 1)` and the
//! splitting degree is the multiplicative order of `L`.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::linalg::{FpMatrix, Matrix};
use crate::ring::Ring;

use super::{Field, FieldElement};

/// Above this many roots only a basis is returned.
pub const ENUMERATION_LIMIT: u64 = 1 << 20;

#[derive(Clone, Debug)]
pub struct AdditiveRoots {
    /// Field of the coefficients.
    pub base: Field,
    /// The splitting field `K_k`.
    pub field: Field,
    pub splitting_degree: usize,
    /// 𝔽_p-basis of the distinct roots.
    pub basis: Vec<FieldElement>,
    /// All distinct roots in index order, when there are few enough.
    pub roots: Option<Vec<FieldElement>>,
    /// Multiplicity `p^v` of every root, `v` the order of vanishing at `F^0`.
    pub multiplicity: u64,
    /// Degree `n` of the additive polynomial in `F`.
    pub degree: usize,
}

impl AdditiveRoots {
    pub fn distinct_count(&self) -> BigUint {
        BigUint::from(self.base.p()).pow(self.basis.len() as u32)
    }

    /// Root count with multiplicity; always `p^degree`.
    pub fn count_with_multiplicity(&self) -> BigUint {
        self.distinct_count() * BigUint::from(self.multiplicity)
    }
}

struct Reduced {
    base: Field,
    // coefficients from the first nonzero one on
    coeffs: Vec<FieldElement>,
    shift: usize,
}

fn reduce(coeffs: &[FieldElement]) -> Result<Reduced> {
    let last = coeffs
        .iter()
        .rposition(|c| !c.is_zero())
        .ok_or_else(|| Error::Invalid("the zero polynomial has no finite root set".into()))?;
    let shift = coeffs.iter().position(|c| !c.is_zero()).unwrap();
    Ok(Reduced {
        base: coeffs[0].field().clone(),
        coeffs: coeffs[shift..=last].to_vec(),
        shift,
    })
}

/// `L` for the reduced coefficients (requires degree ≥ 1).
fn norm_matrix(r: &Reduced) -> Matrix<FieldElement> {
    let k = &r.base;
    let m = r.coeffs.len() - 1;
    let mut c = Matrix::zeros(k, m, m);
    for i in 0..m - 1 {
        c.set(i, i + 1, FieldElement::one(k));
    }
    let lead_inv = r.coeffs[m].inverse().expect("nonzero leading coefficient");
    for j in 0..m {
        c.set(m - 1, j, -(&r.coeffs[j] * &lead_inv));
    }
    let a = c
        .inverse()
        .expect("companion matrix with nonzero constant term");
    let mut l = a.clone();
    let mut twisted = a;
    for _ in 1..k.n() {
        twisted = twisted.map(k, |x| x.frobenius_power(1));
        l = l.mul(&twisted);
    }
    l
}

fn kernel_dim_of_power_minus_one(l: &Matrix<FieldElement>, j: u64) -> usize {
    let id = Matrix::identity(l.parent(), l.rows());
    l.pow(j).sub(&id).kernel().len()
}

/// Number of distinct roots lying in the degree-`j` extension of the base.
pub fn additive_root_count(coeffs: &[FieldElement], j: usize) -> Result<BigUint> {
    let r = reduce(coeffs)?;
    let m = r.coeffs.len() - 1;
    if m == 0 {
        return Ok(BigUint::from(1u32));
    }
    let dim = kernel_dim_of_power_minus_one(&norm_matrix(&r), j as u64);
    Ok(BigUint::from(r.base.p()).pow(dim as u32))
}

/// Evaluates `Σ a_i x^{p^i}` with the coefficients mapped into `x`'s field.
pub fn evaluate_additive(coeffs: &[FieldElement], x: &FieldElement) -> Result<FieldElement> {
    let target = x.field();
    let mut acc = FieldElement::zero(target);
    let mut cur = x.clone();
    for (i, a) in coeffs.iter().enumerate() {
        if i > 0 {
            cur = cur.frobenius_power(1);
        }
        if !a.is_zero() {
            acc = &acc + &(&a.embed(target)? * &cur);
        }
    }
    Ok(acc)
}

/// All roots of `Σ a_i x^{p^i}` (coefficients `a_0..a_n` over one field) in
/// its splitting field, searching extension degrees up to `max_degree`.
pub fn roots_of_additive(coeffs: &[FieldElement], max_degree: usize) -> Result<AdditiveRoots> {
    let r = reduce(coeffs)?;
    let base = r.base.clone();
    let p = base.p();
    let m = r.coeffs.len() - 1;
    let multiplicity = (p as u64)
        .checked_pow(r.shift as u32)
        .ok_or_else(|| Error::ResourceLimit("root multiplicity overflows".into()))?;
    if m == 0 {
        return Ok(AdditiveRoots {
            base: base.clone(),
            field: base.clone(),
            splitting_degree: 1,
            basis: Vec::new(),
            roots: Some(vec![FieldElement::zero(&base)]),
            multiplicity,
            degree: r.shift,
        });
    }
    let l = norm_matrix(&r);
    let mut pw = l.clone();
    let mut k = None;
    for j in 1..=max_degree.max(1) {
        if pw.is_identity() {
            k = Some(j);
            break;
        }
        pw = pw.mul(&l);
    }
    let Some(k) = k else {
        let dim = kernel_dim_of_power_minus_one(&l, max_degree as u64);
        return Err(Error::SplittingDegreeExceeded {
            max: max_degree,
            searched: max_degree,
            partial_count: (p as u64).saturating_pow(dim as u32),
        });
    };
    let big = base.extension(k)?;
    let emb = base.embedding_into(&big)?;
    let lifted: Vec<FieldElement> = r.coeffs.iter().map(|c| emb.apply(c)).collect();
    let n = big.n();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let mut e = vec![0u32; n];
        e[j] = 1;
        let x = FieldElement::from_raw(&big, e);
        cols.push(evaluate_additive(&lifted, &x)?.coeffs().to_vec());
    }
    let op = FpMatrix::from_columns(p, n, &cols);
    let ker = op.kernel();
    if ker.len() != m {
        return Err(Error::Invalid(format!(
            "root space has dimension {} instead of {m}",
            ker.len()
        )));
    }
    let basis: Vec<FieldElement> = ker
        .into_iter()
        .map(|v| FieldElement::from_raw(&big, v).frobenius_power(-(r.shift as i64)))
        .collect();
    let roots = span(&basis, &big, ENUMERATION_LIMIT);
    Ok(AdditiveRoots {
        base,
        field: big,
        splitting_degree: k,
        basis,
        roots,
        multiplicity,
        degree: r.shift + m,
    })
}

/// All 𝔽_p-combinations of `basis`, sorted by index, if at most `limit`.
pub(crate) fn span(basis: &[FieldElement], field: &Field, limit: u64) -> Option<Vec<FieldElement>> {
    let p = field.p() as u64;
    let total = p.checked_pow(basis.len() as u32).filter(|&t| t <= limit)?;
    let mut out = Vec::with_capacity(total as usize);
    for idx in 0..total {
        let mut acc = FieldElement::zero(field);
        let mut rest = idx;
        for b in basis {
            let c = (rest % p) as u32;
            rest /= p;
            if c != 0 {
                acc = &acc + &b.scale(c);
            }
        }
        out.push(acc);
    }
    out.sort();
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(k: &Field, c: &[u32]) -> FieldElement {
        FieldElement::from_coeffs(k, c).unwrap()
    }

    #[test]
    fn artin_schreier_trivial() {
        let f2 = Field::new(2, 1).unwrap();
        let r = roots_of_additive(&[el(&f2, &[1]), el(&f2, &[1])], 8).unwrap();
        assert_eq!(r.splitting_degree, 1);
        assert_eq!(r.roots.unwrap().len(), 2);
    }

    #[test]
    fn degree_two_over_f2_splits_in_f8() {
        let f2 = Field::new(2, 1).unwrap();
        let one = el(&f2, &[1]);
        let r = roots_of_additive(&[one.clone(), one.clone(), one], 8).unwrap();
        assert_eq!(r.splitting_degree, 3);
        let roots = r.roots.unwrap();
        assert_eq!(roots.len(), 4);
        let f8 = Field::new(2, 3).unwrap();
        let beta = f8.generator();
        let mut expect = vec![
            FieldElement::zero(&f8),
            beta.clone(),
            &beta * &beta,
            &beta + &(&beta * &beta),
        ];
        expect.sort_by_key(|x| x.index());
        assert_eq!(roots, expect);
    }

    #[test]
    fn constant_has_only_zero() {
        let f2 = Field::new(2, 1).unwrap();
        let r = roots_of_additive(&[el(&f2, &[1])], 4).unwrap();
        assert_eq!(r.roots.unwrap(), vec![FieldElement::zero(&f2)]);
        assert_eq!(r.splitting_degree, 1);
    }

    #[test]
    fn inseparable_part_counts_with_multiplicity() {
        let f3 = Field::new(3, 1).unwrap();
        // x^9 - x^3 = (x^3 - x)^3
        let r = roots_of_additive(&[el(&f3, &[0]), el(&f3, &[2]), el(&f3, &[1])], 4).unwrap();
        assert_eq!(r.distinct_count(), BigUint::from(3u32));
        assert_eq!(r.count_with_multiplicity(), BigUint::from(9u32));
    }

    #[test]
    fn cap_is_reported() {
        let f2 = Field::new(2, 1).unwrap();
        let one = el(&f2, &[1]);
        let err = roots_of_additive(&[one.clone(), one.clone(), one], 2).unwrap_err();
        assert!(matches!(
            err,
            Error::SplittingDegreeExceeded {
                max: 2,
                partial_count: 1,
                ..
            }
        ));
    }

    #[test]
    fn counts_match_enumeration_over_f4() {
        let f4 = Field::new(2, 2).unwrap();
        let u = f4.generator();
        let coeffs = vec![u.clone(), FieldElement::one(&f4), FieldElement::one(&f4)];
        let r = roots_of_additive(&coeffs, 64).unwrap();
        for j in 1..=2 * r.splitting_degree {
            let cnt = additive_root_count(&coeffs, j).unwrap();
            if let Ok(kj) = f4.extension(j) {
                if let Some(size) = kj.size().filter(|&s| s <= 1 << 12) {
                    let brute = (0..size)
                        .map(|i| FieldElement::from_index(&kj, i))
                        .filter(|x| evaluate_additive(&coeffs, x).unwrap().is_zero())
                        .count();
                    assert_eq!(BigUint::from(brute), cnt, "j = {j}");
                }
            }
        }
    }
}
