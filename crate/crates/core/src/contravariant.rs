//! Solutions of `F(x) = x` at field-valued points, the inhomogeneous
//! equation `F(x) − x = v`, and the dual construction for finite algebras.

use crate::covariant::{
    fixed_points, matrix_order, EtaleAlgebra, PowerBasis, SolutionSpace, ORDER_CAP,
};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::frobenius_module::{
    flatten, semilinear_fp_matrix, unflatten, unitalize, FrobModule, TwistMapData, Unitalization,
};
use crate::linalg::{FpMatrix, Matrix};
use crate::ring::Ring;

/// Kernel of `1 − F` on `M ⊗ K_k`.
pub fn sol_at(m: &FrobModule, k: usize) -> Result<SolutionSpace> {
    fixed_points(m, k)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LangSolution {
    pub x: Vec<FieldElement>,
    /// Degree over the base of the field holding `x`.
    pub degree: usize,
}

/// Degree `j` of the smallest extension `K_j` of `base` containing `field`.
fn relative_degree(base: &Field, field: &Field) -> Result<usize> {
    if field.p() != base.p() || !field.n().is_multiple_of(base.n()) {
        return Err(Error::Incompatible(format!(
            "{field} does not contain {base}"
        )));
    }
    Ok(field.n() / base.n())
}

/// Some `x` with `F(x) − x = v`, in the least extension of the field of `v`
/// where one exists.
///
/// If `v` lives over `K_j`, every solution lies over `K_{j·e·p}` with `e` the
/// splitting degree of the unit part, and the least field of definition of
/// a solution divides that degree. Only those degrees are tried.
pub fn lang_solve(m: &FrobModule, v: &[FieldElement], max_degree: usize) -> Result<LangSolution> {
    if v.len() != m.rank() {
        return Err(Error::Dimension(format!(
            "target has {} coordinates, module has rank {}",
            v.len(),
            m.rank()
        )));
    }
    let base = m.base();
    let Some(field) = v.first().map(|x| x.field().clone()) else {
        return Ok(LangSolution {
            x: Vec::new(),
            degree: 1,
        });
    };
    if v.iter().any(|x| x.field() != &field) {
        return Err(Error::Invalid(
            "target coordinates over different fields".into(),
        ));
    }
    let j = relative_degree(base, &field)?;
    if v.iter().all(|x| x.is_zero()) {
        return Ok(LangSolution {
            x: v.to_vec(),
            degree: j,
        });
    }
    let (w, _) = m.unit_part();
    let e = matrix_order(&w.norm_matrix(), ORDER_CAP)? as usize;
    let bound = j * e * base.p() as usize;
    let mut reached = j;
    for mult in (1..=bound / j).filter(|t| (bound / j).is_multiple_of(*t)) {
        let deg = j * mult;
        if deg > max_degree {
            break;
        }
        reached = deg;
        let ext = base.extension(deg)?;
        let emb = field.embedding_into(&ext)?;
        let rhs: Vec<FieldElement> = v.iter().map(|x| emb.apply(x)).collect();
        let n = m.rank() * ext.n();
        let op = semilinear_fp_matrix(m.matrix(), &ext)?.sub(&FpMatrix::identity(base.p(), n));
        if let Some(sol) = op.solve(&flatten(&rhs)) {
            return Ok(LangSolution {
                x: unflatten(&ext, &sol),
                degree: deg,
            });
        }
    }
    Err(Error::LangDegreeExceeded { reached })
}

/// A finite commutative unital `K`-algebra given by structure constants:
/// `b_i·b_j = Σ_k c[i][j][k]·b_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAlgebra {
    base: Field,
    mul: Vec<Vec<Vec<FieldElement>>>,
    unit: Vec<FieldElement>,
}

impl FiniteAlgebra {
    pub fn new(base: &Field, mul: Vec<Vec<Vec<FieldElement>>>) -> Result<Self> {
        let d = mul.len();
        if mul
            .iter()
            .any(|r| r.len() != d || r.iter().any(|c| c.len() != d))
        {
            return Err(Error::InvalidAlgebra(format!(
                "structure constants must have shape {d}x{d}x{d}"
            )));
        }
        if mul.iter().flatten().flatten().any(|x| x.field() != base) {
            return Err(Error::InvalidAlgebra(format!(
                "constants must lie in {base}"
            )));
        }
        let mut alg = FiniteAlgebra {
            base: base.clone(),
            mul,
            unit: Vec::new(),
        };
        for i in 0..d {
            for j in 0..i {
                if alg.mul[i][j] != alg.mul[j][i] {
                    return Err(Error::InvalidAlgebra(format!(
                        "not commutative: b{i}*b{j} != b{j}*b{i}"
                    )));
                }
            }
        }
        for i in 0..d {
            for j in 0..d {
                for l in 0..d {
                    let left = alg.multiply(&alg.mul[i][j].clone(), &alg.basis(l));
                    let right = alg.multiply(&alg.basis(i), &alg.mul[j][l].clone());
                    if left != right {
                        return Err(Error::InvalidAlgebra(format!(
                            "not associative at (b{i}*b{j})*b{l}"
                        )));
                    }
                }
            }
        }
        alg.unit = alg.find_unit()?;
        Ok(alg)
    }

    /// Structure constants of `∏ K_{d_i}` in the product of power bases.
    pub fn from_etale(b: &EtaleAlgebra) -> Result<Self> {
        let d = b.dim();
        let k = &b.base;
        let mut mul = vec![vec![vec![FieldElement::zero(k); d]; d]; d];
        let mut offset = 0;
        for &di in &b.factors {
            let pb = PowerBasis::new(k, di)?;
            for i in 0..di {
                for j in 0..di {
                    let c = pb.coords(&(&pb.powers[i] * &pb.powers[j]));
                    for (t, ct) in c.into_iter().enumerate() {
                        mul[offset + i][offset + j][offset + t] = ct;
                    }
                }
            }
            offset += di;
        }
        Self::new(k, mul)
    }

    /// `K[x]/(x^d)`.
    pub fn truncated_polynomial(base: &Field, d: usize) -> Result<Self> {
        let mut mul = vec![vec![vec![FieldElement::zero(base); d]; d]; d];
        for i in 0..d {
            for j in 0..d {
                if i + j < d {
                    mul[i][j][i + j] = FieldElement::one(base);
                }
            }
        }
        Self::new(base, mul)
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.mul.len()
    }

    pub fn structure_constants(&self) -> &[Vec<Vec<FieldElement>>] {
        &self.mul
    }

    pub fn unit(&self) -> &[FieldElement] {
        &self.unit
    }

    fn basis(&self, i: usize) -> Vec<FieldElement> {
        let mut v = vec![FieldElement::zero(&self.base); self.dim()];
        v[i] = FieldElement::one(&self.base);
        v
    }

    pub fn multiply(&self, x: &[FieldElement], y: &[FieldElement]) -> Vec<FieldElement> {
        let d = self.dim();
        let mut out = vec![FieldElement::zero(&self.base); d];
        for i in (0..d).filter(|&i| !x[i].is_zero()) {
            for j in (0..d).filter(|&j| !y[j].is_zero()) {
                let c = &x[i] * &y[j];
                for (o, s) in out.iter_mut().zip(&self.mul[i][j]) {
                    if !s.is_zero() {
                        *o = &*o + &(&c * s);
                    }
                }
            }
        }
        out
    }

    fn find_unit(&self) -> Result<Vec<FieldElement>> {
        // Σ_i e_i c[i][j][k] = δ_jk for all j, k
        let d = self.dim();
        let k = &self.base;
        if d == 0 {
            return Ok(Vec::new());
        }
        let mut rows = Vec::with_capacity(d * d);
        let mut rhs = Vec::with_capacity(d * d);
        for j in 0..d {
            for l in 0..d {
                rows.push((0..d).map(|i| self.mul[i][j][l].clone()).collect());
                rhs.push(vec![if j == l {
                    FieldElement::one(k)
                } else {
                    FieldElement::zero(k)
                }]);
            }
        }
        Matrix::from_rows(k, rows)
            .solve_matrix(&Matrix::from_rows(k, rhs))
            .map(|e| e.column(0))
            .ok_or_else(|| Error::InvalidAlgebra("no unit element".into()))
    }

    /// The Frobenius `b ↦ b^p` as a module: column `j` holds `b_j^p`.
    pub fn frobenius_module(&self) -> Result<FrobModule> {
        let d = self.dim();
        let p = self.base.p();
        let cols: Vec<Vec<FieldElement>> = (0..d)
            .map(|j| {
                let b = self.basis(j);
                let mut acc = self.unit.clone();
                for _ in 0..p {
                    acc = self.multiply(&acc, &b);
                }
                acc
            })
            .collect();
        if d == 0 {
            return Ok(FrobModule::zero(&self.base));
        }
        FrobModule::new(&self.base, Matrix::from_columns(&self.base, d, cols))
    }
}

/// Unitalization of the dual `B^∨` with the transpose of the algebra
/// Frobenius as its map `B^∨ → φ*B^∨`.
pub fn rh_cont_dual(b: &FiniteAlgebra) -> Result<Unitalization> {
    let frob = b.frobenius_module()?;
    unitalize(&TwistMapData::new(&b.base, frob.matrix().transpose())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covariant::etale_algebra_to_module;
    use crate::frobenius_module::find_isomorphism;

    fn f2() -> Field {
        Field::new(2, 1).unwrap()
    }

    #[test]
    fn sol_examples() {
        let k = Field::new(3, 1).unwrap();
        assert_eq!(sol_at(&FrobModule::constant(&k, 1), 4).unwrap().dim(), 1);
        let zero = FrobModule::from_rows(&f2(), vec![vec![FieldElement::zero(&f2())]]).unwrap();
        assert_eq!(sol_at(&zero, 2).unwrap().count(), 1u32.into());
        let k4 = Field::new(2, 2).unwrap();
        let m = FrobModule::from_rows(&k4, vec![vec![k4.generator()]]).unwrap();
        assert_eq!(sol_at(&m, 1).unwrap().count(), 2u32.into());
    }

    #[test]
    fn lang_examples() {
        let f = f2();
        let triv = FrobModule::constant(&f, 1);
        let s = lang_solve(&triv, &[FieldElement::one(&f)], 16).unwrap();
        assert_eq!(s.degree, 2);
        let x = &s.x[0];
        assert_eq!(&x.frobenius_power(1) + x, FieldElement::one(x.field()));
        let s = lang_solve(&triv, &[FieldElement::zero(&f)], 16).unwrap();
        assert_eq!((s.degree, s.x[0].is_zero()), (1, true));
        let k4 = Field::new(2, 2).unwrap();
        let u = k4.generator();
        let s = lang_solve(&triv, std::slice::from_ref(&u), 16).unwrap();
        assert_eq!(s.degree, 4);
        let x = &s.x[0];
        assert_eq!(&x.frobenius_power(1) + x, u.embed(x.field()).unwrap());
        assert_eq!(
            lang_solve(&triv, &[u], 2).unwrap_err(),
            Error::LangDegreeExceeded { reached: 2 }
        );
    }

    #[test]
    fn algebra_validation() {
        let f = f2();
        let z = FieldElement::zero(&f);
        let o = FieldElement::one(&f);
        // b0*b1 = b1 but b1*b0 = 0
        let bad = vec![
            vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]],
            vec![vec![z.clone(), z.clone()], vec![z.clone(), z.clone()]],
        ];
        assert!(matches!(
            FiniteAlgebra::new(&f, bad),
            Err(Error::InvalidAlgebra(_))
        ));
        let no_unit = vec![vec![vec![z.clone()]]];
        assert!(matches!(
            FiniteAlgebra::new(&f, no_unit),
            Err(Error::InvalidAlgebra(_))
        ));
    }

    #[test]
    fn dual_examples() {
        let f = f2();
        let b = FiniteAlgebra::from_etale(&EtaleAlgebra::new(&f, vec![1]).unwrap()).unwrap();
        let u = rh_cont_dual(&b).unwrap().module;
        assert_eq!(u.rank(), 1);
        assert_eq!(sol_at(&u, 1).unwrap().dim(), 1);
        let nil = FiniteAlgebra::truncated_polynomial(&f, 2).unwrap();
        assert_eq!(rh_cont_dual(&nil).unwrap().module.rank(), 1);
        let two = FiniteAlgebra::from_etale(&EtaleAlgebra::new(&f, vec![1, 1]).unwrap()).unwrap();
        let u = rh_cont_dual(&two).unwrap().module;
        assert!(u.matrix().is_identity());
        assert_eq!(sol_at(&u, 1).unwrap().count(), 4u32.into());
    }

    #[test]
    fn dual_agrees_with_covariant_image() {
        for k in [f2(), Field::new(2, 2).unwrap(), Field::new(3, 1).unwrap()] {
            for factors in [vec![2], vec![1, 2], vec![3]] {
                let e = EtaleAlgebra::new(&k, factors).unwrap();
                let dual = rh_cont_dual(&FiniteAlgebra::from_etale(&e).unwrap())
                    .unwrap()
                    .module;
                let cov = etale_algebra_to_module(&e).unwrap();
                assert!(find_isomorphism(&dual, &cov).unwrap().is_some());
            }
        }
    }

    #[test]
    fn solution_dimension_counts_components() {
        let f = Field::new(2, 2).unwrap();
        let e = EtaleAlgebra::new(&f, vec![1, 2, 3]).unwrap();
        let u = rh_cont_dual(&FiniteAlgebra::from_etale(&e).unwrap())
            .unwrap()
            .module;
        for k in 1..=6 {
            assert_eq!(
                sol_at(&u, k).unwrap().dim(),
                e.component_count(k),
                "k = {k}"
            );
        }
    }
}
