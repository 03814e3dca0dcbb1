//! Canonical embeddings between the library's fields.
//!
//! Choices are made so that every chain K ⊆ L ⊆ M commutes regardless of
//! the order in which embeddings are first requested:
//!
//! * 𝔽_{p^{ℓ^a}} → K_m (ℓ prime) is fixed one level at a time. The image of
//!   the degree-ℓ^{a-1} subfield is already fixed, and we take the least root
//!   in K_m of the relative minimal polynomial of the generator over it.
//! * For any other degree d the images of the prime-power subfields of K_d
//!   already determine the embedding; it is recovered by writing the
//!   generator of K_d in the product basis of those subfields.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::linalg::FpMatrix;
use crate::poly::DensePoly;
use crate::ring::Ring;

use super::{Field, FieldElement};

struct EmbeddingInner {
    source: Field,
    target: Field,
    image: FieldElement,
    matrix: FpMatrix,
    left_inverse: FpMatrix,
}

/// A field embedding K ↪ L fixing the prime field.
#[derive(Clone)]
pub struct Embedding(Arc<EmbeddingInner>);

impl fmt::Debug for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Embedding({} -> {}, u -> {})",
            self.0.source, self.0.target, self.0.image
        )
    }
}

type Key = (u32, usize, usize);

fn cache() -> &'static Mutex<HashMap<Key, Embedding>> {
    static C: OnceLock<Mutex<HashMap<Key, Embedding>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

fn prime_powers(mut d: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut l = 2;
    while l * l <= d {
        if d.is_multiple_of(l) {
            let mut a = 0;
            while d.is_multiple_of(l) {
                d /= l;
                a += 1;
            }
            out.push((l, a));
        }
        l += 1;
    }
    if d > 1 {
        out.push((d, 1));
    }
    out
}

impl Embedding {
    pub fn new(source: &Field, target: &Field) -> Result<Embedding> {
        if source.p() != target.p() || !target.n().is_multiple_of(source.n()) {
            return Err(Error::Incompatible(format!(
                "{source} does not embed in {target}"
            )));
        }
        let key = (source.p(), source.n(), target.n());
        if let Some(e) = cache().lock().unwrap().get(&key) {
            return Ok(e.clone());
        }
        let image = generator_image(source, target)?;
        let d = source.n();
        let mut cols = Vec::with_capacity(d);
        let mut pw = FieldElement::one(target);
        for _ in 0..d {
            cols.push(pw.coeffs().to_vec());
            pw = &pw * &image;
        }
        let matrix = FpMatrix::from_columns(target.p(), target.n(), &cols);
        let left_inverse = matrix.left_inverse().expect("embedding is injective");
        let emb = Embedding(Arc::new(EmbeddingInner {
            source: source.clone(),
            target: target.clone(),
            image,
            matrix,
            left_inverse,
        }));
        Ok(cache().lock().unwrap().entry(key).or_insert(emb).clone())
    }

    pub fn source(&self) -> &Field {
        &self.0.source
    }

    pub fn target(&self) -> &Field {
        &self.0.target
    }

    pub fn image_of_generator(&self) -> &FieldElement {
        &self.0.image
    }

    /// Columns are the images of `1, u, …, u^{d-1}`.
    pub fn matrix(&self) -> &FpMatrix {
        &self.0.matrix
    }

    pub fn apply(&self, x: &FieldElement) -> FieldElement {
        assert!(
            x.field() == &self.0.source,
            "element outside the source field"
        );
        FieldElement::from_raw(&self.0.target, self.0.matrix.mul_vec(x.coeffs()))
    }

    pub fn preimage(&self, y: &FieldElement) -> Option<FieldElement> {
        assert!(
            y.field() == &self.0.target,
            "element outside the target field"
        );
        let x = self.0.left_inverse.mul_vec(y.coeffs());
        if self.0.matrix.mul_vec(&x) != y.coeffs() {
            return None;
        }
        Some(FieldElement::from_raw(&self.0.source, x))
    }
}

fn generator_image(source: &Field, target: &Field) -> Result<FieldElement> {
    let d = source.n();
    if d == target.n() {
        return Ok(target.generator());
    }
    if d == 1 {
        return Ok(FieldElement::zero(target));
    }
    let pp = prime_powers(d);
    if pp.len() == 1 {
        prime_power_image(source, target, pp[0].0)
    } else {
        composite_image(source, target, &pp)
    }
}

fn prime_power_image(source: &Field, target: &Field, ell: usize) -> Result<FieldElement> {
    let d = source.n();
    let prev = d / ell;
    let lower = Field::new(source.p() as u64, prev)?;
    let into_target = lower.embedding_into(target)?;
    // minimal polynomial of u over the subfield of degree `prev`
    let h: DensePoly<FieldElement> = if prev == 1 {
        DensePoly::new(
            target,
            source
                .modulus()
                .iter()
                .map(|&c| FieldElement::from_u64(target, c as u64))
                .collect(),
        )
    } else {
        let into_source = lower.embedding_into(source)?;
        let u = source.generator();
        let mut h = DensePoly::one(source);
        for j in 0..ell {
            let conj = u.frobenius_power((prev * j) as i64);
            h = h.mul(&DensePoly::new(
                source,
                vec![-conj, FieldElement::one(source)],
            ));
        }
        let coeffs = h
            .coeffs()
            .iter()
            .map(|c| {
                into_source
                    .preimage(c)
                    .map(|x| into_target.apply(&x))
                    .ok_or_else(|| Error::Invalid("relative polynomial not over subfield".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        DensePoly::new(target, coeffs)
    };
    let roots = h.roots();
    roots
        .into_iter()
        .next()
        .ok_or_else(|| Error::Invalid(format!("no root of the defining polynomial in {target}")))
}

fn composite_image(source: &Field, target: &Field, pp: &[(usize, u32)]) -> Result<FieldElement> {
    let p = source.p() as u64;
    let d = source.n();
    let mut in_source = Vec::new();
    let mut in_target = Vec::new();
    let mut sizes = Vec::new();
    for &(l, a) in pp {
        let q = l.pow(a);
        let sub = Field::new(p, q)?;
        in_source.push(sub.embedding_into(source)?.image_of_generator().clone());
        in_target.push(sub.embedding_into(target)?.image_of_generator().clone());
        sizes.push(q);
    }
    // product basis over all exponent tuples
    let mut cols = Vec::with_capacity(d);
    let mut target_basis = Vec::with_capacity(d);
    let mut idx = vec![0usize; sizes.len()];
    loop {
        let mut s = FieldElement::one(source);
        let mut t = FieldElement::one(target);
        for (k, &e) in idx.iter().enumerate() {
            s = &s * &in_source[k].pow(e as u64);
            t = &t * &in_target[k].pow(e as u64);
        }
        cols.push(s.coeffs().to_vec());
        target_basis.push(t);
        let mut k = 0;
        loop {
            if k == idx.len() {
                break;
            }
            idx[k] += 1;
            if idx[k] < sizes[k] {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == idx.len() {
            break;
        }
    }
    let m = FpMatrix::from_columns(source.p(), d, &cols);
    let c = m
        .solve(source.generator().coeffs())
        .ok_or_else(|| Error::Invalid("product basis is degenerate".into()))?;
    let mut acc = FieldElement::zero(target);
    for (ci, b) in c.iter().zip(&target_basis) {
        if *ci != 0 {
            acc = &acc + &b.scale(*ci);
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_maps_by_unit() {
        let f2 = Field::new(2, 1).unwrap();
        let f8 = Field::new(2, 3).unwrap();
        let e = f2.embedding_into(&f8).unwrap();
        assert!(e.apply(&FieldElement::one(&f2)).is_one());
    }

    #[test]
    fn f4_into_f16_hits_a_root() {
        let f4 = Field::new(2, 2).unwrap();
        let f16 = Field::new(2, 4).unwrap();
        let r = f4
            .embedding_into(&f16)
            .unwrap()
            .image_of_generator()
            .clone();
        let one = FieldElement::one(&f16);
        assert!((&(&r * &r) + &(&r + &one)).is_zero());
    }

    #[test]
    fn incompatible_degrees() {
        let f4 = Field::new(2, 2).unwrap();
        let f8 = Field::new(2, 3).unwrap();
        assert!(matches!(
            f4.embedding_into(&f8),
            Err(Error::Incompatible(_))
        ));
    }

    #[test]
    fn chains_commute_elementwise() {
        for (p, top) in [(2u64, 12usize), (3, 6), (2, 6), (2, 8)] {
            let divs: Vec<usize> = (1..=top).filter(|d| top % d == 0).collect();
            for &a in &divs {
                for &b in &divs {
                    if b % a != 0 {
                        continue;
                    }
                    let ka = Field::new(p, a).unwrap();
                    let kb = Field::new(p, b).unwrap();
                    let kt = Field::new(p, top).unwrap();
                    let ab = ka.embedding_into(&kb).unwrap();
                    let bt = kb.embedding_into(&kt).unwrap();
                    let at = ka.embedding_into(&kt).unwrap();
                    let g = ka.generator();
                    assert_eq!(bt.apply(&ab.apply(&g)), at.apply(&g), "{p}: {a}|{b}|{top}");
                }
            }
        }
    }

    #[test]
    fn embedding_is_multiplicative() {
        let k = Field::new(2, 3).unwrap();
        let l = Field::new(2, 6).unwrap();
        let e = k.embedding_into(&l).unwrap();
        for x in k.elements() {
            for y in k.elements() {
                assert_eq!(e.apply(&(&x * &y)), &e.apply(&x) * &e.apply(&y));
            }
            assert_eq!(e.preimage(&e.apply(&x)), Some(x.clone()));
        }
    }
}
