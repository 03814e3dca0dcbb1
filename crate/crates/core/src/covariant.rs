//! Unit Frobenius modules over `K = 𝔽_q` and finite Galois representations.
//!
//! For a unit module with matrix `A`, the fixed points `x = A·x^φ` over the
//! algebraic closure form an `𝔽_p`-space `V` of dimension `rank M`. Iterating
//! gives `x = L·x^{(q)}` with `L = A·A^φ⋯A^{φ^{n-1}}`, so the q-power
//! Frobenius acts on `V` like `L⁻¹` and all of `V` is defined over `K_k` with
//! `k = ord(L)`. Representations use the arithmetic Frobenius `x ↦ x^q`: with
//! a basis `X = [v_1 … v_d]`, the matrix `Φ` satisfies `X^{(q)} = X·Φ`.

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::frobenius_module::{
    embed_matrix, flatten, fp_span, semilinear_fp_matrix, twist_matrix, unflatten, FrobModule,
};
use crate::linalg::{FpMatrix, FpSubspace, Matrix};
use crate::random::deterministic_rng;
use crate::ring::Ring;

/// Solution sets are enumerated up to this size.
pub const SOLUTION_ENUMERATION: u64 = 1 << 12;

/// Search bound for the order of `L`.
pub const ORDER_CAP: u64 = 1 << 16;

/// A finite `𝔽_p`-space with an invertible q-Frobenius over `𝔽_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisRep {
    base: Field,
    frobenius: FpMatrix,
}

impl GaloisRep {
    pub fn new(base: &Field, frobenius: FpMatrix) -> Result<Self> {
        if frobenius.rows() != frobenius.cols() {
            return Err(Error::Dimension("Frobenius matrix must be square".into()));
        }
        if frobenius.prime() != base.p() {
            return Err(Error::Invalid(format!(
                "Frobenius matrix over Z/{} for a base of characteristic {}",
                frobenius.prime(),
                base.p()
            )));
        }
        if !frobenius.is_invertible() {
            return Err(Error::Singular);
        }
        Ok(GaloisRep {
            base: base.clone(),
            frobenius,
        })
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.frobenius.rows()
    }

    pub fn frobenius(&self) -> &FpMatrix {
        &self.frobenius
    }

    pub fn order(&self) -> u64 {
        if self.dim() == 0 {
            return 1;
        }
        self.frobenius
            .order(ORDER_CAP)
            .expect("finite order over F_p")
    }
}

/// An invertible `P` with `P·Φ_a = Φ_b·P`, if the representations are
/// isomorphic.
pub fn rep_isomorphism(a: &GaloisRep, b: &GaloisRep) -> Option<FpMatrix> {
    if a.dim() != b.dim() || a.base != b.base {
        return None;
    }
    let d = a.dim();
    let p = a.base.p();
    if d == 0 {
        return Some(FpMatrix::zeros(p, 0, 0));
    }
    let mut cols = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            let mut e = FpMatrix::zeros(p, d, d);
            e.set(i, j, 1);
            let defect = e.mul(&a.frobenius).sub(&b.frobenius.mul(&e));
            cols.push(defect.to_rows().concat());
        }
    }
    let kernel = FpMatrix::from_columns(p, d * d, &cols).kernel();
    let build =
        |v: &[u32]| FpMatrix::from_rows(p, &v.chunks(d).map(|c| c.to_vec()).collect::<Vec<_>>());
    if let Some(all) = fp_span(p, &kernel, d * d, 1 << 14) {
        return all.iter().map(|v| build(v)).find(|m| m.is_invertible());
    }
    let mut rng = deterministic_rng(0x2e9);
    (0..4096).find_map(|_| {
        let mut v = vec![0u32; d * d];
        for k in &kernel {
            let c = rng.gen_range(0..p) as u64;
            for (x, y) in v.iter_mut().zip(k) {
                *x = ((*x as u64 + c * *y as u64) % p as u64) as u32;
            }
        }
        Some(build(&v)).filter(|m| m.is_invertible())
    })
}

/// Kernel of `x ↦ A·x^φ − x` on `K_k^r`, with the q-Frobenius on it.
#[derive(Clone, Debug)]
pub struct SolutionSpace {
    /// The extension degree `k` over the base.
    pub degree: usize,
    /// The field `K_k` holding the coordinates.
    pub field: Field,
    /// 𝔽_p-basis, each vector given by its `rank M` coordinates.
    pub basis: Vec<Vec<FieldElement>>,
    /// All solutions when there are at most [`SOLUTION_ENUMERATION`].
    pub elements: Option<Vec<Vec<FieldElement>>>,
    /// Matrix of `x ↦ x^q` in the basis.
    pub frobenius: FpMatrix,
}

impl SolutionSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn count(&self) -> num_bigint::BigUint {
        num_bigint::BigUint::from(self.field.p()).pow(self.dim() as u32)
    }

    pub fn to_rep(&self, base: &Field) -> Result<GaloisRep> {
        GaloisRep::new(base, self.frobenius.clone())
    }
}

/// All fixed points of `F` with coordinates in the degree-`k` extension.
pub fn fixed_points(m: &FrobModule, k: usize) -> Result<SolutionSpace> {
    if k == 0 {
        return Err(Error::DegreeOutOfRange {
            n: 0,
            max: usize::MAX,
        });
    }
    let base = m.base();
    let ext = base.extension(k)?;
    let p = base.p();
    let r = m.rank();
    let len = r * ext.n();
    let basis_raw = if r == 0 {
        Vec::new()
    } else {
        semilinear_fp_matrix(m.matrix(), &ext)?
            .sub(&FpMatrix::identity(p, len))
            .kernel()
    };
    let q_power = base.n() as i64;
    let space = FpSubspace::new(p, len, basis_raw.clone());
    let mut cols = Vec::with_capacity(basis_raw.len());
    for v in &basis_raw {
        let moved: Vec<FieldElement> = unflatten(&ext, v)
            .iter()
            .map(|x| x.frobenius_power(q_power))
            .collect();
        cols.push(
            space
                .coordinates(&flatten(&moved))
                .ok_or_else(|| Error::Invalid("solution space not Galois stable".into()))?,
        );
    }
    let frobenius = FpMatrix::from_columns(p, basis_raw.len(), &cols);
    let elements = fp_span(p, &basis_raw, len, SOLUTION_ENUMERATION).map(|all| {
        let mut all: Vec<Vec<FieldElement>> = all.iter().map(|v| unflatten(&ext, v)).collect();
        all.sort();
        all
    });
    Ok(SolutionSpace {
        degree: k,
        field: ext.clone(),
        basis: basis_raw.iter().map(|v| unflatten(&ext, v)).collect(),
        elements,
        frobenius,
    })
}

/// Multiplicative order of an invertible matrix over a field.
pub(crate) fn matrix_order(l: &Matrix<FieldElement>, cap: u64) -> Result<u64> {
    if l.rows() == 0 {
        return Ok(1);
    }
    let mut acc = l.clone();
    for k in 1..=cap {
        if acc.is_identity() {
            return Ok(k);
        }
        acc = acc.mul(l);
    }
    Err(Error::ResourceLimit(format!("matrix order exceeds {cap}")))
}

/// Degree over the base of the field of definition of all fixed points.
pub fn splitting_degree(m: &FrobModule) -> Result<usize> {
    let (w, _) = m.unit_part();
    Ok(matrix_order(&w.norm_matrix(), ORDER_CAP)? as usize)
}

#[derive(Clone, Debug)]
pub struct Covariant {
    pub rep: GaloisRep,
    pub solutions: SolutionSpace,
    /// Rank of the unit part that was used.
    pub unit_rank: usize,
}

/// The Galois representation of fixed points. A non-unit module is replaced
/// by its unit part unless `require_unit` is set.
pub fn rh_cov(m: &FrobModule, require_unit: bool) -> Result<Covariant> {
    if require_unit && !m.is_unit() {
        return Err(Error::NotUnit);
    }
    let (w, _) = m.unit_part();
    let k = matrix_order(&w.norm_matrix(), ORDER_CAP)? as usize;
    let solutions = fixed_points(m, k)?;
    if solutions.dim() != w.rank() {
        return Err(Error::Invalid(format!(
            "found {} independent fixed points for a unit part of rank {}",
            solutions.dim(),
            w.rank()
        )));
    }
    Ok(Covariant {
        rep: solutions.to_rep(m.base())?,
        solutions,
        unit_rank: w.rank(),
    })
}

#[derive(Clone, Debug)]
pub struct Descent {
    pub module: FrobModule,
    /// Degree `k = ord Φ` of the splitting field.
    pub degree: usize,
    /// Columns are fixed points of `module` over `K_k` on which the
    /// q-Frobenius acts by exactly `Φ`.
    pub basis: Matrix<FieldElement>,
}

/// The unit module of a representation, by Galois descent.
///
/// A matrix `X` over `K_k` with `X^{(q)} = X·Φ` comes from averaging a
/// random `Y`: `X = Σ_i Y^{(q^i)}·Φ^{-i}`. Then `A = X·(X^φ)⁻¹` is fixed by
/// the q-power map, so it is defined over `K`, and the columns of `X` are
/// fixed points of `(K, A)`.
pub fn rh_inv(v: &GaloisRep) -> Result<Descent> {
    let base = &v.base;
    let d = v.dim();
    let k = v.order() as usize;
    let ext = base.extension(k)?;
    if d == 0 {
        return Ok(Descent {
            module: FrobModule::zero(base),
            degree: k,
            basis: Matrix::zeros(&ext, 0, 0),
        });
    }
    let to_ext = |m: &FpMatrix| {
        Matrix::from_rows(
            &ext,
            m.to_rows()
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|&c| FieldElement::from_u64(&ext, c as u64))
                        .collect()
                })
                .collect(),
        )
    };
    let phi_inv = to_ext(&v.frobenius.inverse().ok_or(Error::Singular)?);
    let q = base.n() as i64;
    let mut rng = deterministic_rng(0xde5c);
    for _ in 0..256 {
        let y = crate::random::random_matrix(&ext, d, d, &mut rng);
        let mut x = Matrix::zeros(&ext, d, d);
        let mut yi = y;
        let mut pi = Matrix::identity(&ext, d);
        for _ in 0..k {
            x = x.add(&yi.mul(&pi));
            yi = twist_matrix(&yi, q);
            pi = pi.mul(&phi_inv);
        }
        let Some(xphi_inv) = twist_matrix(&x, 1).inverse() else {
            continue;
        };
        let a = x.mul(&xphi_inv);
        let mut rows = Vec::with_capacity(d);
        for i in 0..d {
            let mut row = Vec::with_capacity(d);
            for j in 0..d {
                row.push(a.get(i, j).restrict(base).ok_or_else(|| {
                    Error::Invalid("descended matrix is not defined over the base".into())
                })?);
            }
            rows.push(row);
        }
        return Ok(Descent {
            module: FrobModule::from_rows(base, rows)?,
            degree: k,
            basis: x,
        });
    }
    Err(Error::ResourceLimit(
        "no invertible descent datum found".into(),
    ))
}

/// `∏ K_{d_i}` over `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaleAlgebra {
    pub base: Field,
    pub factors: Vec<usize>,
}

impl EtaleAlgebra {
    pub fn new(base: &Field, factors: Vec<usize>) -> Result<Self> {
        if let Some(&d) = factors.iter().find(|&&d| d == 0) {
            return Err(Error::DegreeOutOfRange {
                n: d,
                max: usize::MAX,
            });
        }
        Ok(EtaleAlgebra {
            base: base.clone(),
            factors,
        })
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().sum()
    }

    /// Number of `K`-algebra maps into `K_k`.
    pub fn point_count(&self, k: usize) -> usize {
        self.factors.iter().filter(|&&d| k.is_multiple_of(d)).sum()
    }

    /// Number of connected components of `Spec(B ⊗ K_k)`.
    pub fn component_count(&self, k: usize) -> usize {
        self.factors.iter().map(|&d| num_integer::gcd(d, k)).sum()
    }
}

/// Coordinates of `K_d` in the power basis `1, g, …, g^{d-1}` over `K`,
/// `g` the canonical generator of `K_d`.
pub(crate) struct PowerBasis {
    base: Field,
    pub powers: Vec<FieldElement>,
    to_coords: FpMatrix,
}

impl PowerBasis {
    pub fn new(base: &Field, d: usize) -> Result<Self> {
        let ext = base.extension(d)?;
        let g = ext.generator();
        let emb = base.embedding_into(&ext)?;
        let n = base.n();
        let powers: Vec<FieldElement> = (0..d).map(|j| g.pow(j as u64)).collect();
        let mut cols = Vec::with_capacity(n * d);
        for w in &powers {
            for t in 0..n {
                let mut e = vec![0u32; n];
                e[t] = 1;
                let c = FieldElement::from_coeffs(base, &e)?;
                cols.push((&emb.apply(&c) * w).coeffs().to_vec());
            }
        }
        let to_coords = FpMatrix::from_columns(base.p(), ext.n(), &cols)
            .inverse()
            .ok_or_else(|| Error::Invalid("power basis is degenerate".into()))?;
        Ok(PowerBasis {
            base: base.clone(),
            powers,
            to_coords,
        })
    }

    pub fn coords(&self, y: &FieldElement) -> Vec<FieldElement> {
        unflatten(&self.base, &self.to_coords.mul_vec(y.coeffs()))
    }
}

/// `B` as a `K`-module with the algebra Frobenius `b ↦ b^p`, in the
/// product of power bases.
pub fn etale_algebra_to_module(b: &EtaleAlgebra) -> Result<FrobModule> {
    let mut out = FrobModule::zero(&b.base);
    for &d in &b.factors {
        let pb = PowerBasis::new(&b.base, d)?;
        let cols: Vec<Vec<FieldElement>> = pb
            .powers
            .iter()
            .map(|w| pb.coords(&w.frobenius_power(1)))
            .collect();
        let block = FrobModule::new(&b.base, Matrix::from_columns(&b.base, d, cols))?;
        out = out.direct_sum(&block)?;
    }
    Ok(out)
}

/// Applies `H` (over the base) to coordinate vectors over an extension.
pub fn map_vectors(
    h: &Matrix<FieldElement>,
    vs: &[Vec<FieldElement>],
) -> Result<Vec<Vec<FieldElement>>> {
    let Some(ext) = vs
        .first()
        .and_then(|v| v.first())
        .map(|x| x.field().clone())
    else {
        return Ok(vs.to_vec());
    };
    let h = embed_matrix(h, &ext)?;
    Ok(vs.iter().map(|v| h.mul_vec(v)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frobenius_module::find_isomorphism;
    use crate::random::{random_fp_invertible, random_invertible};

    fn f2() -> Field {
        Field::new(2, 1).unwrap()
    }

    fn f4() -> Field {
        Field::new(2, 2).unwrap()
    }

    fn fp(p: u32, rows: &[&[u32]]) -> FpMatrix {
        FpMatrix::from_rows(p, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn fixed_point_examples() {
        let k = Field::new(3, 2).unwrap();
        let triv = FrobModule::constant(&k, 1);
        for deg in 1..=3 {
            let s = fixed_points(&triv, deg).unwrap();
            assert_eq!(s.dim(), 1);
            assert!(s.basis[0][0].as_prime().is_some());
        }
        let k4 = f4();
        let m = FrobModule::from_rows(&k4, vec![vec![k4.generator()]]).unwrap();
        let s = fixed_points(&m, 1).unwrap();
        let u2 = k4.generator().pow(2);
        assert_eq!(
            s.elements.unwrap(),
            vec![vec![FieldElement::zero(&k4)], vec![u2]]
        );
        let zero = FrobModule::from_rows(&f2(), vec![vec![FieldElement::zero(&f2())]]).unwrap();
        assert_eq!(fixed_points(&zero, 3).unwrap().dim(), 0);
    }

    #[test]
    fn covariant_examples() {
        let k = Field::new(3, 1).unwrap();
        let c = rh_cov(&FrobModule::constant(&k, 1), true).unwrap();
        assert_eq!(c.rep.frobenius(), &fp(3, &[&[1]]));
        let k4 = f4();
        let m = FrobModule::from_rows(&k4, vec![vec![k4.generator()]]).unwrap();
        let c = rh_cov(&m, true).unwrap();
        assert_eq!(c.rep.dim(), 1);
        assert!(c.rep.frobenius().is_identity());
        let b = etale_algebra_to_module(&EtaleAlgebra::new(&f2(), vec![2]).unwrap()).unwrap();
        let c = rh_cov(&b, true).unwrap();
        let swap = GaloisRep::new(&f2(), fp(2, &[&[0, 1], &[1, 0]])).unwrap();
        assert!(rep_isomorphism(&c.rep, &swap).is_some());
        let nonunit = FrobModule::from_rows(&f2(), vec![vec![FieldElement::zero(&f2())]]).unwrap();
        assert_eq!(rh_cov(&nonunit, true).unwrap_err(), Error::NotUnit);
        assert_eq!(rh_cov(&nonunit, false).unwrap().rep.dim(), 0);
    }

    #[test]
    fn etale_modules() {
        let f = f2();
        let m = etale_algebra_to_module(&EtaleAlgebra::new(&f, vec![2]).unwrap()).unwrap();
        assert_eq!(format!("{:?}", m.matrix()), "[[1, 1], [0, 1]]");
        let m = etale_algebra_to_module(&EtaleAlgebra::new(&f, vec![1, 1]).unwrap()).unwrap();
        assert!(m.matrix().is_identity());
        let k = Field::new(3, 2).unwrap();
        let m = etale_algebra_to_module(&EtaleAlgebra::new(&k, vec![1]).unwrap()).unwrap();
        assert!(m.matrix().is_identity());
        let m = etale_algebra_to_module(&EtaleAlgebra::new(&k, vec![3]).unwrap()).unwrap();
        assert!(m.is_unit());
        assert_eq!(rh_cov(&m, true).unwrap().rep.order(), 3);
    }

    #[test]
    fn descent_examples() {
        let f = f2();
        let triv = rh_inv(&GaloisRep::new(&f, fp(2, &[&[1]])).unwrap()).unwrap();
        assert!(find_isomorphism(&triv.module, &FrobModule::constant(&f, 1))
            .unwrap()
            .is_some());
        let swap = GaloisRep::new(&f, fp(2, &[&[0, 1], &[1, 0]])).unwrap();
        let d = rh_inv(&swap).unwrap();
        let b = etale_algebra_to_module(&EtaleAlgebra::new(&f, vec![2]).unwrap()).unwrap();
        assert!(find_isomorphism(&d.module, &b).unwrap().is_some());
        let zero = rh_inv(&GaloisRep::new(&f, FpMatrix::zeros(2, 0, 0)).unwrap()).unwrap();
        assert_eq!(zero.module.rank(), 0);
    }

    #[test]
    fn descent_basis_carries_the_given_frobenius() {
        let k = Field::new(2, 2).unwrap();
        let mut rng = deterministic_rng(21);
        for d in 1..=3 {
            let v = GaloisRep::new(&k, random_fp_invertible(2, d, &mut rng)).unwrap();
            let desc = rh_inv(&v).unwrap();
            let x = &desc.basis;
            let lifted = twist_matrix(x, k.n() as i64);
            let phi = Matrix::from_rows(
                x.parent(),
                v.frobenius()
                    .to_rows()
                    .iter()
                    .map(|r| {
                        r.iter()
                            .map(|&c| FieldElement::from_u64(x.parent(), c as u64))
                            .collect()
                    })
                    .collect(),
            );
            assert_eq!(lifted, x.mul(&phi));
            for j in 0..d {
                let col = x.column(j);
                assert_eq!(desc.module.apply(&col).unwrap(), col);
            }
        }
    }

    #[test]
    fn round_trips_small() {
        let mut rng = deterministic_rng(22);
        for (p, n) in [(2, 1), (3, 1), (2, 2), (2, 3), (3, 2)] {
            let k = Field::new(p, n).unwrap();
            for r in 1..=3 {
                let m = FrobModule::new(&k, random_invertible(&k, r, &mut rng)).unwrap();
                let c = rh_cov(&m, true).unwrap();
                assert_eq!(c.rep.dim(), r);
                let back = rh_inv(&c.rep).unwrap();
                assert!(find_isomorphism(&back.module, &m).unwrap().is_some());
                let again = rh_cov(&back.module, true).unwrap();
                assert!(rep_isomorphism(&again.rep, &c.rep).is_some());
            }
        }
    }

    #[test]
    fn counts() {
        let b = EtaleAlgebra::new(&f2(), vec![2, 3]).unwrap();
        assert_eq!(b.point_count(6), 5);
        assert_eq!(b.point_count(2), 2);
        assert_eq!(b.component_count(1), 2);
        assert_eq!(b.component_count(6), 5);
    }
}
