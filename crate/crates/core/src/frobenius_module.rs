//! Finite-rank Frobenius modules over a finite field `K`.
//!
//! A module of rank `r` is `K^r` with `F(x) = A·x^φ`, where `x^φ` raises
//! every coordinate to the `p`-th power. The linearization `φ*M → M` then
//! has matrix `A`, so the module is unit exactly when `A` is invertible.

use num_bigint::BigUint;
use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::linalg::{FpMatrix, Matrix};
use crate::random::deterministic_rng;
use crate::ring::Ring;
use crate::skew::SkewPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobModule {
    base: Field,
    matrix: Matrix<FieldElement>,
}

/// Entrywise image of a matrix under the embedding of its field into `ext`.
pub(crate) fn embed_matrix(a: &Matrix<FieldElement>, ext: &Field) -> Result<Matrix<FieldElement>> {
    if a.parent() == ext {
        return Ok(a.clone());
    }
    let emb = a.parent().embedding_into(ext)?;
    Ok(a.map(ext, |x| emb.apply(x)))
}

/// `M^{φ^k}`, entrywise.
pub(crate) fn twist_matrix(a: &Matrix<FieldElement>, k: i64) -> Matrix<FieldElement> {
    a.map(a.parent(), |x| x.frobenius_power(k))
}

/// Concatenated 𝔽_p-coordinates of a vector over one field.
pub(crate) fn flatten(v: &[FieldElement]) -> Vec<u32> {
    v.iter().flat_map(|x| x.coeffs().iter().copied()).collect()
}

pub(crate) fn unflatten(field: &Field, raw: &[u32]) -> Vec<FieldElement> {
    raw.chunks(field.n())
        .map(|c| FieldElement::from_coeffs(field, c).expect("reduced residues"))
        .collect()
}

/// Every 𝔽_p-combination of `basis`, in counting order, when there are at
/// most `limit` of them.
pub(crate) fn fp_span(p: u32, basis: &[Vec<u32>], len: usize, limit: u64) -> Option<Vec<Vec<u32>>> {
    let total = (p as u64)
        .checked_pow(basis.len() as u32)
        .filter(|&t| t <= limit)?;
    let mut out = Vec::with_capacity(total as usize);
    for idx in 0..total {
        let mut v = vec![0u32; len];
        let mut rest = idx;
        for b in basis {
            let c = (rest % p as u64) as u32;
            rest /= p as u64;
            if c != 0 {
                for (x, y) in v.iter_mut().zip(b) {
                    *x = ((*x as u64 + c as u64 * *y as u64) % p as u64) as u32;
                }
            }
        }
        out.push(v);
    }
    Some(out)
}

/// 𝔽_p-matrix of `x ↦ A·x^φ` on `ext^r`, in flattened coordinates.
pub(crate) fn semilinear_fp_matrix(a: &Matrix<FieldElement>, ext: &Field) -> Result<FpMatrix> {
    let a = embed_matrix(a, ext)?;
    let r = a.rows();
    let n = ext.n();
    let p = ext.p();
    let mut cols = Vec::with_capacity(r * n);
    for j in 0..r {
        for t in 0..n {
            let mut e = vec![0u32; n];
            e[t] = 1;
            let w = FieldElement::from_coeffs(ext, &e)?.frobenius_power(1);
            let col: Vec<FieldElement> = (0..r).map(|i| a.get(i, j) * &w).collect();
            cols.push(flatten(&col));
        }
    }
    Ok(FpMatrix::from_columns(p, r * n, &cols))
}

impl FrobModule {
    pub fn new(base: &Field, matrix: Matrix<FieldElement>) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::Dimension(format!(
                "module matrix must be square, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        if matrix.parent() != base {
            return Err(Error::BaseMismatch(
                matrix.parent().to_string(),
                base.to_string(),
            ));
        }
        Ok(FrobModule {
            base: base.clone(),
            matrix,
        })
    }

    pub fn from_rows(base: &Field, rows: Vec<Vec<FieldElement>>) -> Result<Self> {
        if rows.iter().any(|r| r.len() != rows.len()) {
            return Err(Error::Dimension("module matrix must be square".into()));
        }
        if rows.iter().flatten().any(|x| x.field() != base) {
            return Err(Error::Invalid(format!("matrix entries must lie in {base}")));
        }
        if rows.is_empty() {
            return Ok(Self::zero(base));
        }
        Self::new(base, Matrix::from_rows(base, rows))
    }

    /// The rank-zero module.
    pub fn zero(base: &Field) -> Self {
        FrobModule {
            base: base.clone(),
            matrix: Matrix::zeros(base, 0, 0),
        }
    }

    /// `K^r` with the coordinatewise `p`-power map.
    pub fn constant(base: &Field, r: usize) -> Self {
        FrobModule {
            base: base.clone(),
            matrix: Matrix::identity(base, r),
        }
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn rank(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix<FieldElement> {
        &self.matrix
    }

    /// `F(x)` for `x` with coordinates in the base or an extension of it.
    pub fn apply(&self, x: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if x.len() != self.rank() {
            return Err(Error::Dimension(format!(
                "vector of length {} in a module of rank {}",
                x.len(),
                self.rank()
            )));
        }
        let Some(first) = x.first() else {
            return Ok(Vec::new());
        };
        let ext = first.field().clone();
        if x.iter().any(|c| c.field() != &ext) {
            return Err(Error::Invalid("coordinates over different fields".into()));
        }
        let a = embed_matrix(&self.matrix, &ext)?;
        let xp: Vec<FieldElement> = x.iter().map(|c| c.frobenius_power(1)).collect();
        Ok(a.mul_vec(&xp))
    }

    pub fn is_unit(&self) -> bool {
        self.matrix.is_invertible()
    }

    /// `φ*M`, with matrix `A^φ`.
    pub fn twist(&self) -> Self {
        FrobModule {
            base: self.base.clone(),
            matrix: twist_matrix(&self.matrix, 1),
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.base != other.base {
            return Err(Error::BaseMismatch(
                self.base.to_string(),
                other.base.to_string(),
            ));
        }
        Ok(FrobModule {
            base: self.base.clone(),
            matrix: self.matrix.direct_sum(&other.matrix),
        })
    }

    /// Matrix of `F^k`: `A·A^φ⋯A^{φ^{k-1}}`.
    pub fn iterate_matrix(&self, k: usize) -> Matrix<FieldElement> {
        let mut acc = Matrix::identity(&self.base, self.rank());
        let mut tw = self.matrix.clone();
        for i in 0..k {
            if i > 0 {
                tw = twist_matrix(&tw, 1);
            }
            acc = acc.mul(&tw);
        }
        acc
    }

    /// Matrix of `F^n`, `n = [K:𝔽_p]`: the `K`-linear q-power map.
    pub fn norm_matrix(&self) -> Matrix<FieldElement> {
        self.iterate_matrix(self.base.n())
    }

    /// The stable image `F^r(M)` as a unit module, with the inclusion as an
    /// `r×s` matrix. `F` restricted to it is bijective and every fixed point
    /// of `F` lies in it.
    pub fn unit_part(&self) -> (FrobModule, Matrix<FieldElement>) {
        let r = self.rank();
        if self.is_unit() {
            return (self.clone(), Matrix::identity(&self.base, r));
        }
        let s = canonical_column_basis(&self.iterate_matrix(r));
        if s.cols() == 0 {
            return (FrobModule::zero(&self.base), s);
        }
        let image = self.matrix.mul(&twist_matrix(&s, 1));
        let a = s.solve_matrix(&image).expect("stable image is F-invariant");
        (
            FrobModule {
                base: self.base.clone(),
                matrix: a,
            },
            s,
        )
    }

    /// Least monic `T` in `K[F]` with `T·x = 0`.
    pub fn min_annihilator(&self, x: &[FieldElement]) -> Result<AnnihilatorWitness> {
        if x.len() != self.rank() || x.iter().any(|c| c.field() != &self.base) {
            return Err(Error::Dimension(format!(
                "expected {} coordinates in {}",
                self.rank(),
                self.base
            )));
        }
        let k = &self.base;
        let mut orbit: Vec<Vec<FieldElement>> = vec![x.to_vec()];
        loop {
            let d = orbit.len() - 1;
            let last = orbit[d].clone();
            let relation = if d == 0 {
                last.iter().all(|c| c.is_zero()).then(Vec::new)
            } else {
                let prev = Matrix::from_columns(k, self.rank(), orbit[..d].to_vec());
                prev.solve_matrix(&Matrix::column_vector(k, last.clone()))
                    .map(|c| c.column(0))
            };
            if let Some(c) = relation {
                let mut coeffs: Vec<FieldElement> = c.into_iter().map(|v| -v).collect();
                coeffs.push(FieldElement::one(k));
                return Ok(AnnihilatorWitness {
                    element: x.to_vec(),
                    annihilator: SkewPoly::new(k, coeffs),
                    degree: d,
                });
            }
            orbit.push(self.apply(&last)?);
        }
    }

    /// Whether `h: self → other` commutes with `F`.
    pub fn is_hom_to(&self, other: &FrobModule, h: &Matrix<FieldElement>) -> bool {
        h.rows() == other.rank() && h.cols() == self.rank() && hom_defect(self, other, h).is_zero()
    }
}

/// `H·A_M − A_N·H^φ`; zero exactly for module maps.
fn hom_defect(m: &FrobModule, n: &FrobModule, h: &Matrix<FieldElement>) -> Matrix<FieldElement> {
    h.mul(&m.matrix).sub(&n.matrix.mul(&twist_matrix(h, 1)))
}

/// Basis of the column space read off the reduced echelon form of the
/// transpose, so that a full-rank input gives the identity.
pub(crate) fn canonical_column_basis(g: &Matrix<FieldElement>) -> Matrix<FieldElement> {
    let rows = g.transpose().row_space_basis();
    if rows.rows() == 0 {
        return Matrix::zeros(g.parent(), g.rows(), 0);
    }
    rows.transpose()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnihilatorWitness {
    pub element: Vec<FieldElement>,
    pub annihilator: SkewPoly<FieldElement>,
    pub degree: usize,
}

/// A module `N` with a linear map `f: N → φ*N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistMapData {
    base: Field,
    f: Matrix<FieldElement>,
}

impl TwistMapData {
    pub fn new(base: &Field, f: Matrix<FieldElement>) -> Result<Self> {
        // reuse the module validation; the shapes agree
        let m = FrobModule::new(base, f)?;
        Ok(TwistMapData {
            base: m.base,
            f: m.matrix,
        })
    }

    /// The inverse of the structure isomorphism of a unit module.
    pub fn from_unit_module(m: &FrobModule) -> Result<Self> {
        let f = m.matrix.inverse().ok_or(Error::NotUnit)?;
        Ok(TwistMapData {
            base: m.base.clone(),
            f,
        })
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn rank(&self) -> usize {
        self.f.rows()
    }

    pub fn map(&self) -> &Matrix<FieldElement> {
        &self.f
    }
}

#[derive(Clone, Debug)]
pub struct Unitalization {
    pub module: FrobModule,
    /// The canonical map `N → U`, an `s×r` matrix.
    pub structure_map: Matrix<FieldElement>,
    /// The level `k` at which `U` is read off inside `(φ*)^k N`.
    pub level: usize,
}

/// The colimit of `N → φ*N → (φ*)²N → ⋯`.
///
/// At a level `k ≥ rank N` that is a multiple of `[K:𝔽_p]` the image `W` of
/// `f_k = f^{φ^{k-1}}⋯f^φ·f` maps isomorphically onto the colimit, and the
/// transition `W → φ*W` is `f` itself. With `S` a basis of `W` and
/// `f·S = S^φ·B`, the unit structure `φ*U → U` is `B⁻¹`.
pub fn unitalize(data: &TwistMapData) -> Result<Unitalization> {
    let base = &data.base;
    let r = data.rank();
    let n = base.n();
    let level = n * r.max(1).div_ceil(n);
    let mut g = Matrix::identity(base, r);
    let mut tw = data.f.clone();
    for i in 0..level {
        if i > 0 {
            tw = twist_matrix(&tw, 1);
        }
        g = tw.mul(&g);
    }
    let s = canonical_column_basis(&g);
    if s.cols() == 0 {
        return Ok(Unitalization {
            module: FrobModule::zero(base),
            structure_map: Matrix::zeros(base, 0, r),
            level,
        });
    }
    let b = twist_matrix(&s, 1)
        .solve_matrix(&data.f.mul(&s))
        .ok_or_else(|| Error::Invalid("transition does not preserve the stable image".into()))?;
    let a = b
        .inverse()
        .ok_or_else(|| Error::Invalid("rank did not stabilize".into()))?;
    let structure_map = s
        .solve_matrix(&g)
        .expect("columns of f_k lie in their span");
    Ok(Unitalization {
        module: FrobModule::new(base, a)?,
        structure_map,
        level,
    })
}

/// An 𝔽_p-basis of `Hom_{K[F]}(M, N)`, as `rank N × rank M` matrices `H`
/// with `H·A_M = A_N·H^φ`.
pub fn hom_space(m: &FrobModule, n: &FrobModule) -> Result<Vec<Matrix<FieldElement>>> {
    if m.base != n.base {
        return Err(Error::BaseMismatch(m.base.to_string(), n.base.to_string()));
    }
    let k = &m.base;
    let (rn, rm, deg) = (n.rank(), m.rank(), k.n());
    if rn == 0 || rm == 0 {
        return Ok(Vec::new());
    }
    let mut cols = Vec::with_capacity(rn * rm * deg);
    for a in 0..rn {
        for b in 0..rm {
            for t in 0..deg {
                let mut e = vec![0u32; deg];
                e[t] = 1;
                let mut h = Matrix::zeros(k, rn, rm);
                h.set(a, b, FieldElement::from_coeffs(k, &e)?);
                cols.push(flatten(hom_defect(m, n, &h).entries()));
            }
        }
    }
    let op = FpMatrix::from_columns(k.p(), rn * rm * deg, &cols);
    Ok(op
        .kernel()
        .into_iter()
        .map(|v| {
            let entries = unflatten(k, &v);
            Matrix::from_rows(k, entries.chunks(rm).map(|c| c.to_vec()).collect())
        })
        .collect())
}

/// Combination `Σ c_i·basis_i` of `K`-matrices with `c_i ∈ 𝔽_p`.
fn combine(
    basis: &[Matrix<FieldElement>],
    c: &[u32],
    like: &Matrix<FieldElement>,
) -> Matrix<FieldElement> {
    let mut acc = Matrix::zeros(like.parent(), like.rows(), like.cols());
    for (b, &ci) in basis.iter().zip(c) {
        if ci != 0 {
            acc = acc.add(&b.map(like.parent(), |x| x.scale(ci)));
        }
    }
    acc
}

/// Exhaustive below this many candidates, sampled above it.
const ISO_ENUMERATION: u64 = 1 << 14;
const ISO_SAMPLES: usize = 4096;

/// An isomorphism of Frobenius modules `M → N`, if one is found.
///
/// Small hom spaces are searched exhaustively, so `None` is then a proof of
/// non-isomorphism; larger ones are sampled with a fixed seed.
pub fn find_isomorphism(m: &FrobModule, n: &FrobModule) -> Result<Option<Matrix<FieldElement>>> {
    if m.rank() != n.rank() {
        return Ok(None);
    }
    if m.rank() == 0 {
        return Ok(Some(Matrix::zeros(&m.base, 0, 0)));
    }
    let basis = hom_space(m, n)?;
    let Some(like) = basis.first().cloned() else {
        return Ok(None);
    };
    let p = m.base.p();
    let total = BigUint::from(p).pow(basis.len() as u32);
    if total <= BigUint::from(ISO_ENUMERATION) {
        let total = u64::try_from(total).expect("small");
        for idx in 1..total {
            let mut c = Vec::with_capacity(basis.len());
            let mut rest = idx;
            for _ in 0..basis.len() {
                c.push((rest % p as u64) as u32);
                rest /= p as u64;
            }
            let h = combine(&basis, &c, &like);
            if h.is_invertible() {
                return Ok(Some(h));
            }
        }
        return Ok(None);
    }
    let mut rng = deterministic_rng(0x150);
    for _ in 0..ISO_SAMPLES {
        let c: Vec<u32> = (0..basis.len()).map(|_| rng.gen_range(0..p)).collect();
        let h = combine(&basis, &c, &like);
        if h.is_invertible() {
            return Ok(Some(h));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_invertible, random_matrix};

    fn f2() -> Field {
        Field::new(2, 1).unwrap()
    }

    fn f4() -> Field {
        Field::new(2, 2).unwrap()
    }

    fn module(k: &Field, rows: &[&[u32]]) -> FrobModule {
        FrobModule::from_rows(
            k,
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&c| FieldElement::from_u64(k, c as u64))
                        .collect()
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn construction_and_unit() {
        let k = f4();
        let u = FrobModule::from_rows(&k, vec![vec![k.generator()]]).unwrap();
        assert!(u.is_unit());
        assert_eq!(
            u.apply(&[FieldElement::one(&k)]).unwrap(),
            vec![k.generator()]
        );
        assert!(FrobModule::constant(&k, 2).is_unit());
        assert!(!module(&f2(), &[&[0]]).is_unit());
        assert!(!module(&f2(), &[&[1, 1], &[0, 0]]).is_unit());
        assert!(FrobModule::from_rows(&k, vec![vec![k.generator()], vec![]]).is_err());
    }

    #[test]
    fn twist_examples() {
        let k = f4();
        let u = k.generator();
        let m = FrobModule::from_rows(&k, vec![vec![u.clone()]]).unwrap();
        assert_eq!(m.twist().matrix().get(0, 0), &(&u + &FieldElement::one(&k)));
        assert_eq!(m.twist().twist(), m);
        let p = module(&f2(), &[&[1, 1], &[0, 1]]);
        assert_eq!(p.twist(), p);
    }

    #[test]
    fn annihilators() {
        let k = f4();
        let one = FieldElement::one(&k);
        let m = FrobModule::constant(&k, 1);
        let w = m.min_annihilator(std::slice::from_ref(&one)).unwrap();
        assert_eq!(w.annihilator.to_string(), "F+1");
        let mu = FrobModule::from_rows(&k, vec![vec![k.generator()]]).unwrap();
        let w = mu.min_annihilator(&[one]).unwrap();
        assert_eq!(w.annihilator.to_string(), "F+u");
        let w = mu.min_annihilator(&[FieldElement::zero(&k)]).unwrap();
        assert_eq!(w.degree, 0);
        assert_eq!(w.annihilator.to_string(), "1");
    }

    #[test]
    fn annihilator_is_minimal_and_divides() {
        let k = Field::new(3, 2).unwrap();
        let mut rng = deterministic_rng(7);
        for _ in 0..20 {
            let m = FrobModule::new(&k, random_matrix(&k, 3, 3, &mut rng)).unwrap();
            let x: Vec<_> = (0..3).map(|_| FieldElement::random(&k, &mut rng)).collect();
            let w = m.min_annihilator(&x).unwrap();
            assert!(w.degree <= 3);
            let act = |t: &SkewPoly<FieldElement>| {
                t.act(
                    &x,
                    |v| m.apply(v).unwrap(),
                    |c, v| v.iter().map(|e| c * e).collect(),
                    |a, b| a.iter().zip(&b).map(|(s, t)| s + t).collect(),
                    vec![FieldElement::zero(&k); 3],
                )
            };
            assert!(act(&w.annihilator).iter().all(|c| c.is_zero()));
            // any left multiple of T annihilates x and is right-divisible by T
            let other = SkewPoly::frobenius(&k).pow(2).mul(&w.annihilator).unwrap();
            let (_, r) = other.left_divmod(&w.annihilator).unwrap();
            assert!(r.is_zero());
        }
    }

    #[test]
    fn unitalization_examples() {
        let k = f2();
        let one = TwistMapData::new(&k, Matrix::identity(&k, 1)).unwrap();
        assert_eq!(unitalize(&one).unwrap().module.rank(), 1);
        let zero = TwistMapData::new(&k, Matrix::zeros(&k, 1, 1)).unwrap();
        assert_eq!(unitalize(&zero).unwrap().module.rank(), 0);
        let idem = TwistMapData::new(&k, module(&k, &[&[1, 0], &[0, 0]]).matrix().clone()).unwrap();
        let u = unitalize(&idem).unwrap();
        assert_eq!(u.module.rank(), 1);
        assert!(u.module.is_unit());
    }

    #[test]
    fn unitalizing_a_unit_module_returns_it() {
        let k = Field::new(2, 3).unwrap();
        let mut rng = deterministic_rng(11);
        for r in 1..=3 {
            let m = FrobModule::new(&k, random_invertible(&k, r, &mut rng)).unwrap();
            let u = unitalize(&TwistMapData::from_unit_module(&m).unwrap()).unwrap();
            assert_eq!(u.module, m);
            // the structure map is the K-linear power F^{-k}, an automorphism
            assert!(u.structure_map.is_invertible());
            assert!(m.is_hom_to(&m, &u.structure_map));
        }
    }

    #[test]
    fn structure_map_is_compatible() {
        let k = Field::new(3, 2).unwrap();
        let mut rng = deterministic_rng(12);
        for _ in 0..20 {
            let f = random_matrix(&k, 3, 3, &mut rng);
            let f = f.mul(&Matrix::from_rows(
                &k,
                vec![
                    vec![
                        FieldElement::one(&k),
                        FieldElement::zero(&k),
                        FieldElement::zero(&k),
                    ],
                    vec![
                        FieldElement::zero(&k),
                        FieldElement::one(&k),
                        FieldElement::zero(&k),
                    ],
                    vec![FieldElement::zero(&k); 3],
                ],
            ));
            let data = TwistMapData::new(&k, f.clone()).unwrap();
            let u = unitalize(&data).unwrap();
            assert!(u.module.is_unit());
            let iota = &u.structure_map;
            if u.module.rank() > 0 {
                let lhs = u.module.matrix().mul(&twist_matrix(iota, 1)).mul(&f);
                assert_eq!(&lhs, iota);
            }
        }
    }

    #[test]
    fn hom_space_examples() {
        let k = Field::new(3, 2).unwrap();
        let triv = FrobModule::constant(&k, 1);
        assert_eq!(hom_space(&triv, &triv).unwrap().len(), 1);
        assert!(hom_space(&triv, &FrobModule::zero(&k)).unwrap().is_empty());
        let f2 = f2();
        assert!(hom_space(&module(&f2, &[&[0]]), &module(&f2, &[&[1]]))
            .unwrap()
            .is_empty());
        assert!(hom_space(&triv, &FrobModule::constant(&f2, 1)).is_err());
    }

    #[test]
    fn hom_space_matches_brute_force_over_f4() {
        let k = f4();
        let mut rng = deterministic_rng(5);
        for _ in 0..10 {
            let m = FrobModule::new(&k, random_matrix(&k, 2, 2, &mut rng)).unwrap();
            let n = FrobModule::new(&k, random_matrix(&k, 1, 1, &mut rng)).unwrap();
            let dim = hom_space(&m, &n).unwrap().len();
            let els: Vec<_> = k.elements().collect();
            let mut count = 0;
            for a in &els {
                for b in &els {
                    let h = Matrix::from_rows(&k, vec![vec![a.clone(), b.clone()]]);
                    if m.is_hom_to(&n, &h) {
                        count += 1;
                    }
                }
            }
            assert_eq!(count, 2usize.pow(dim as u32));
        }
    }

    #[test]
    fn twist_of_unit_module_is_isomorphic() {
        let k = Field::new(2, 3).unwrap();
        let mut rng = deterministic_rng(6);
        for _ in 0..10 {
            let m = FrobModule::new(&k, random_invertible(&k, 2, &mut rng)).unwrap();
            // A: φ*M → M is itself a module isomorphism
            let h = find_isomorphism(&m.twist(), &m).unwrap().unwrap();
            assert!(m.twist().is_hom_to(&m, &h));
        }
    }

    #[test]
    fn unit_part_of_nilpotent_plus_unit() {
        let k = f4();
        let u = k.generator();
        let z = FieldElement::zero(&k);
        let one = FieldElement::one(&k);
        let m = FrobModule::from_rows(
            &k,
            vec![vec![u.clone(), z.clone()], vec![one.clone(), z.clone()]],
        )
        .unwrap();
        let (w, s) = m.unit_part();
        assert_eq!(w.rank(), 1);
        assert!(w.is_unit());
        assert!(m.is_hom_to(&m, &Matrix::identity(&k, 2)));
        assert!(w.is_hom_to(&m, &s));
    }
}
