//! Property checks shared by the acceptance test target and `frh selftest`.
//!
//! Each criterion returns a [`CriterionReport`]; nothing here panics on a
//! mathematical failure, so a red criterion still reports what it saw.

// field elements order by value; the cached field handle does not take part
#![allow(clippy::mutable_key_type)]

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::Rng;

use crate::contravariant::{lang_solve, rh_cont_dual, sol_at, FiniteAlgebra};
use crate::covariant::{
    etale_algebra_to_module, rep_isomorphism, rh_cov, rh_inv, splitting_degree, EtaleAlgebra,
    GaloisRep,
};
use crate::field::{Field, FieldElement};
use crate::frobenius_module::{
    find_isomorphism, hom_space, twist_matrix, unitalize, FrobModule, TwistMapData,
};
use crate::linalg::{FpMatrix, Matrix};
use crate::poly::DensePoly;
use crate::random::{
    deterministic_rng, random_fp_invertible, random_invertible, random_matrix, DetRng,
};
use crate::ring::{Integer, IntegerRing, Ring};
use crate::skew::SkewPolyFq;
use crate::witt::{generate, rational_to_big, BigWitt, Operation, RationalWitt, WittCache};

/// Full size for the acceptance target, reduced for the CLI self-test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scale {
    Full,
    Reduced,
}

impl Scale {
    fn count(self, full: usize) -> usize {
        match self {
            Scale::Full => full,
            Scale::Reduced => (full / 10).max(3),
        }
    }

    fn is_full(self) -> bool {
        self == Scale::Full
    }
}

#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}] {}: {} ({:.2}s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

pub const CRITERIA: [(u8, &str); 8] = [
    (1, "p^n root count"),
    (2, "Lang surjectivity"),
    (3, "Katz round trip"),
    (4, "unitalization universal property"),
    (5, "covariant/contravariant agreement on etale algebras"),
    (6, "degree-0 additive shadow"),
    (7, "Witt ring laws"),
    (8, "rigidity and stability of fixed points"),
];

type Check = std::result::Result<String, String>;

pub fn run(id: u8, scale: Scale, seed: u64, cache: &WittCache) -> CriterionReport {
    let start = Instant::now();
    let mut rng = deterministic_rng(seed ^ (u64::from(id) << 32));
    let outcome = match id {
        1 => root_counts(scale, &mut rng),
        2 => lang_surjectivity(scale, &mut rng),
        3 => katz_round_trip(scale, &mut rng),
        4 => universal_property(scale),
        5 => etale_agreement(scale),
        6 => additive_shadow(scale),
        7 => witt_laws(scale, &mut rng, cache),
        8 => rigidity(scale, &mut rng),
        _ => Err(format!("no criterion {id}")),
    };
    let title = CRITERIA
        .iter()
        .find(|(i, _)| *i == id)
        .map_or("unknown", |(_, t)| t);
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CriterionReport {
        id,
        title,
        passed,
        detail,
        elapsed: start.elapsed(),
    }
}

pub fn run_all(scale: Scale, seed: u64, cache: &WittCache) -> Vec<CriterionReport> {
    CRITERIA
        .iter()
        .map(|(id, _)| run(*id, scale, seed, cache))
        .collect()
}

fn err(e: impl fmt::Display) -> String {
    e.to_string()
}

fn field(p: u64, n: usize) -> Field {
    Field::new(p, n).expect("fixed small field")
}

fn pick_field(rng: &mut DetRng, choices: &[(u64, usize)]) -> Field {
    let (p, n) = choices[rng.gen_range(0..choices.len())];
    field(p, n)
}

/// Every `rows×cols` matrix over a small field, in index order.
fn all_matrices(k: &Field, rows: usize, cols: usize) -> Vec<Matrix<FieldElement>> {
    let q = k.size().expect("small field");
    let total = q.pow((rows * cols) as u32);
    (0..total)
        .map(|mut idx| {
            let mut m = Matrix::zeros(k, rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    m.set(i, j, FieldElement::from_index(k, idx % q));
                    idx /= q;
                }
            }
            m
        })
        .collect()
}

fn fp_vector(x: &FieldElement, len: usize) -> Vec<u32> {
    (0..len)
        .map(|i| x.coeffs().get(i).copied().unwrap_or(0))
        .collect()
}

// ---------------------------------------------------------------- 1

fn check_roots(t: &SkewPolyFq) -> std::result::Result<(), String> {
    let n = t.degree().expect("monic");
    let roots = t.additive_roots(256).map_err(err)?;
    let p = t.base().p();
    if roots.count_with_multiplicity() != BigUint::from(p).pow(n as u32) {
        return Err(format!(
            "{t}: {} roots with multiplicity",
            roots.count_with_multiplicity()
        ));
    }
    let len = roots.field.n();
    let rows: Vec<Vec<u32>> = roots.basis.iter().map(|b| fp_vector(b, len)).collect();
    if !rows.is_empty() && FpMatrix::from_rows(p, &rows).rank() != rows.len() {
        return Err(format!("{t}: dependent root basis"));
    }
    for b in &roots.basis {
        if !t.eval_additive(b).map_err(err)?.is_zero() {
            return Err(format!("{t}: basis element {b} is not a root"));
        }
    }
    if let Some(all) = &roots.roots {
        if BigUint::from(all.len()) != roots.distinct_count() {
            return Err(format!("{t}: {} listed roots", all.len()));
        }
        let set: BTreeSet<&FieldElement> = all.iter().collect();
        for r in all {
            if !t.eval_additive(r).map_err(err)?.is_zero() {
                return Err(format!("{t}: {r} is not a root"));
            }
            for b in &roots.basis {
                if !set.contains(&(r.clone() + b.clone())) {
                    return Err(format!("{t}: roots not closed under addition"));
                }
            }
        }
    }
    Ok(())
}

fn root_counts(scale: Scale, rng: &mut DetRng) -> Check {
    let mut checked = 0usize;
    let top = if scale.is_full() { 3 } else { 2 };
    for k in [field(2, 1), field(2, 2)] {
        for n in 0..=top {
            for lower in all_matrices(&k, 1, n) {
                let mut c = lower.row(0);
                c.push(FieldElement::one(&k));
                check_roots(&SkewPolyFq::new(&k, c))?;
                checked += 1;
            }
        }
    }
    let random = scale.count(100);
    for i in 0..random {
        let k = if i % 2 == 0 { field(2, 3) } else { field(3, 2) };
        let n = rng.gen_range(1..=4);
        let mut c: Vec<FieldElement> = (0..n).map(|_| FieldElement::random(&k, rng)).collect();
        c.push(FieldElement::one(&k));
        check_roots(&SkewPolyFq::new(&k, c))?;
        checked += 1;
    }
    Ok(format!(
        "{checked} monic polynomials, each with exactly p^n roots spanning an F_p-subspace"
    ))
}

// ---------------------------------------------------------------- 2

const LANG_FIELDS: [(u64, usize); 7] = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)];

fn lang_surjectivity(scale: Scale, rng: &mut DetRng) -> Check {
    let cases = scale.count(100);
    let mut over = Vec::new();
    let mut largest = 0usize;
    for _ in 0..cases {
        let k = pick_field(rng, &LANG_FIELDS);
        let r = rng.gen_range(1..=4);
        let m = FrobModule::new(&k, random_matrix(&k, r, r, rng)).map_err(err)?;
        let v: Vec<FieldElement> = (0..r).map(|_| FieldElement::random(&k, rng)).collect();
        let bound = 4 * r * k.n();
        // solve without the bound first, so every case is accounted for
        let cap = crate::field::MAX_DEGREE / k.n();
        let sol = lang_solve(&m, &v, cap).map_err(|e| format!("rank {r} over {k}: {e}"))?;
        let fx = m.apply(&sol.x).map_err(err)?;
        for ((a, b), c) in fx.iter().zip(&sol.x).zip(&v) {
            if a.clone() - b.clone() != c.embed(a.field()).map_err(err)? {
                return Err(format!("rank {r} over {k}: F(x) - x != v"));
            }
        }
        largest = largest.max(sol.degree);
        if sol.degree > bound {
            over.push(format!(
                "rank {r} over {k} needs degree {} > {bound}",
                sol.degree
            ));
        }
    }
    if over.is_empty() {
        Ok(format!(
            "{cases} pairs solved within 4*rank*n; largest degree {largest}"
        ))
    } else {
        Err(format!(
            "all {cases} pairs solved, but {} need more than 4*rank*n with n = [K:F_p]: {}",
            over.len(),
            over.join("; ")
        ))
    }
}

// ---------------------------------------------------------------- 3

const KATZ_FIELDS: [(u64, usize); 5] = [(2, 1), (3, 1), (2, 2), (2, 3), (3, 2)];

fn katz_round_trip(scale: Scale, rng: &mut DetRng) -> Check {
    let cases = scale.count(100);
    for _ in 0..cases {
        let k = pick_field(rng, &KATZ_FIELDS);
        let r = rng.gen_range(1..=4);
        let m = FrobModule::new(&k, random_invertible(&k, r, rng)).map_err(err)?;
        let cov = rh_cov(&m, true).map_err(err)?;
        if cov.solutions.dim() != r {
            return Err(format!(
                "rank {r} over {k}: fixed points of dimension {}",
                cov.solutions.dim()
            ));
        }
        let back = rh_inv(&cov.rep).map_err(err)?.module;
        match find_isomorphism(&back, &m).map_err(err)? {
            Some(h) if back.is_hom_to(&m, &h) && h.is_invertible() => {}
            _ => {
                return Err(format!(
                    "rank {r} over {k}: no isomorphism back to the module"
                ))
            }
        }
    }
    for _ in 0..cases {
        let k = pick_field(rng, &KATZ_FIELDS);
        let d = rng.gen_range(1..=4);
        let v = GaloisRep::new(&k, random_fp_invertible(k.p(), d, rng)).map_err(err)?;
        let module = rh_inv(&v).map_err(err)?.module;
        let w = rh_cov(&module, true).map_err(err)?.rep;
        match rep_isomorphism(&w, &v) {
            Some(p) if p.is_invertible() && p.mul(w.frobenius()) == v.frobenius().mul(&p) => {}
            _ => {
                return Err(format!(
                    "dimension {d} over {k}: representation not recovered"
                ))
            }
        }
    }
    Ok(format!(
        "{cases} unit modules and {cases} representations recovered up to explicit isomorphism"
    ))
}

// ---------------------------------------------------------------- 4

fn universal_property(scale: Scale) -> Check {
    let k = field(2, 1);
    let top = if scale.is_full() { 2 } else { 1 };
    let units: Vec<FrobModule> = (0..=top)
        .flat_map(|r| all_matrices(&k, r, r))
        .filter(|a| a.is_invertible())
        .map(|a| FrobModule::new(&k, a).expect("square"))
        .collect();
    let mut pairs = 0usize;
    let mut maps = 0usize;
    for rn in 0..=top {
        for f in all_matrices(&k, rn, rn) {
            let data = TwistMapData::new(&k, f.clone()).map_err(err)?;
            let u = unitalize(&data).map_err(err)?;
            let iota = &u.structure_map;
            for p in &units {
                let rp = p.rank();
                // h with A_P·h^φ·f = h, among all base-linear maps
                let equalizer: BTreeSet<Vec<FieldElement>> = all_matrices(&k, rp, rn)
                    .into_iter()
                    .filter(|h| p.matrix().mul(&twist_matrix(h, 1)).mul(&f) == *h)
                    .map(|h| h.entries().to_vec())
                    .collect();
                let basis = hom_space(&u.module, p).map_err(err)?;
                let mut images = BTreeSet::new();
                for c in all_matrices(&k, 1, basis.len()) {
                    let mut g = Matrix::zeros(&k, rp, u.module.rank());
                    for (b, ci) in basis.iter().zip(c.row(0)) {
                        g = g.add(&b.scale(&ci));
                    }
                    let image = g.mul(iota);
                    if !equalizer.contains(image.entries()) {
                        return Err(format!(
                            "N = {f:?}: composite with the structure map is not compatible"
                        ));
                    }
                    images.insert(image.entries().to_vec());
                }
                if images.len() != equalizer.len() || images.len() != 1 << basis.len() {
                    return Err(format!(
                        "rank N {rn}, rank P {rp}: {} unit maps give {} composites, {} compatible maps",
                        1 << basis.len(),
                        images.len(),
                        equalizer.len()
                    ));
                }
                pairs += 1;
                maps += equalizer.len();
            }
        }
    }
    Ok(format!(
        "{pairs} (N, P) pairs over F_2, {maps} compatible maps matched one to one"
    ))
}

// ---------------------------------------------------------------- 5

fn partitions(total: usize, max_part: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=max_part.min(total)).rev() {
        for mut rest in partitions(total - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn etale_agreement(scale: Scale) -> Check {
    let top = if scale.is_full() { 4 } else { 3 };
    let mut algebras = 0usize;
    let mut point_law = Vec::new();
    let mut component_law = Vec::new();
    let mut comparisons = 0usize;
    for k in [field(2, 1), field(2, 2)] {
        for total in 1..=top {
            for factors in partitions(total, total) {
                let b = EtaleAlgebra::new(&k, factors.clone()).map_err(err)?;
                let u = rh_cont_dual(&FiniteAlgebra::from_etale(&b).map_err(err)?)
                    .map_err(err)?
                    .module;
                let target = etale_algebra_to_module(&b).map_err(err)?;
                match find_isomorphism(&u, &target).map_err(err)? {
                    Some(h) if u.is_hom_to(&target, &h) && h.is_invertible() => {}
                    _ => {
                        return Err(format!(
                            "{factors:?} over {k}: dual module not isomorphic to the covariant one"
                        ))
                    }
                }
                for deg in 1..=6 {
                    let dim = sol_at(&u, deg).map_err(err)?.dim();
                    comparisons += 1;
                    if dim != b.point_count(deg) {
                        point_law.push(format!(
                            "{factors:?}/{k} k={deg}: dim {dim}, #Hom {}",
                            b.point_count(deg)
                        ));
                    }
                    if dim != b.component_count(deg) {
                        component_law.push(format!("{factors:?}/{k} k={deg}"));
                    }
                }
                algebras += 1;
            }
        }
    }
    let iso = format!("all {algebras} dual modules isomorphic to the covariant ones");
    if !component_law.is_empty() {
        return Err(format!(
            "{iso}; solution dimension matches neither law at {}",
            component_law.join(", ")
        ));
    }
    if point_law.is_empty() {
        Ok(format!(
            "{iso}; dim sol = #Hom_alg at all {comparisons} (B, k)"
        ))
    } else {
        Err(format!(
            "{iso}; dim sol = #Hom_alg fails at {} of {comparisons} (B, k), e.g. {}; \
             dim sol equals the component count sum gcd(d_i, k) everywhere",
            point_law.len(),
            point_law[0]
        ))
    }
}

// ---------------------------------------------------------------- 6

fn additive_shadow(scale: Scale) -> Check {
    let k64 = field(2, 6);
    let elems: Vec<FieldElement> = k64.elements().collect();
    let bits = 6;
    let words = (elems.len() * elems.len() * bits).div_ceil(64);
    let degrees = 16;
    // column i: the additivity defect of x^i at every pair, as a bit vector
    let defects: Vec<Vec<u64>> = (0..degrees)
        .map(|i| {
            let mut v = vec![0u64; words];
            let mut pos = 0;
            for x in &elems {
                let xi = x.pow(i as u64);
                for y in &elems {
                    let d = (x.clone() + y.clone()).pow(i as u64) - xi.clone() - y.pow(i as u64);
                    for (j, b) in fp_vector(&d, bits).into_iter().enumerate() {
                        if b != 0 {
                            v[(pos + j) / 64] |= 1 << ((pos + j) % 64);
                        }
                    }
                    pos += bits;
                }
            }
            v
        })
        .collect();
    // Gray-code walk over all 2^16 coefficient vectors
    let mut acc = vec![0u64; words];
    let mut code = 0u32;
    let mut additive = vec![0u32];
    for step in 1u32..(1 << degrees) {
        let i = step.trailing_zeros() as usize;
        code ^= 1 << i;
        for (a, d) in acc.iter_mut().zip(&defects[i]) {
            *a ^= d;
        }
        if acc.iter().all(|&w| w == 0) {
            additive.push(code);
        }
    }
    let p_mask = 0b1_0001_0110u32;
    if let Some(bad) = additive.iter().find(|&&c| c & !p_mask != 0) {
        return Err(format!(
            "additive polynomial with exponent mask {bad:#b} is not a p-polynomial"
        ));
    }
    if additive.len() != 16 {
        return Err(format!(
            "{} additive polynomials, expected 16",
            additive.len()
        ));
    }

    let k4 = field(2, 2);
    let ext = k4.extension(12).map_err(err)?;
    let g = ext.generator();
    let basis: Vec<FieldElement> = (0..ext.n() as u64).map(|i| g.pow(i)).collect();
    let top = if scale.is_full() { 3 } else { 2 };
    let mut seen = BTreeSet::new();
    let mut total = 0usize;
    for c in all_matrices(&k4, 1, top + 1) {
        let t = SkewPolyFq::new(&k4, c.row(0));
        let image: Vec<FieldElement> = basis
            .iter()
            .map(|x| t.eval_additive(x))
            .collect::<crate::Result<_>>()
            .map_err(err)?;
        seen.insert(image);
        total += 1;
    }
    if seen.len() != total {
        return Err(format!(
            "{total} skew polynomials over F_4 give only {} distinct maps on F_(4^12)",
            seen.len()
        ));
    }
    Ok(format!(
        "all 65536 polynomials of degree < 16 checked, the 16 additive ones are p-polynomials; \
         {total} skew polynomials separated on F_(4^12)"
    ))
}

// ---------------------------------------------------------------- 7

fn random_int_witt(rng: &mut DetRng, n: usize) -> BigWitt<Integer> {
    BigWitt::new(
        &IntegerRing,
        (0..n)
            .map(|_| Integer::new(rng.gen_range(-3i64..=3)))
            .collect(),
    )
}

fn random_one_series(k: &Field, rng: &mut DetRng, max_degree: usize) -> DensePoly<FieldElement> {
    let d = rng.gen_range(0..=max_degree);
    let mut c = vec![FieldElement::one(k)];
    c.extend((0..d).map(|_| FieldElement::random(k, rng)));
    DensePoly::new(k, c)
}

fn ghost_sum(a: &[Integer], b: &[Integer]) -> Vec<Integer> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.clone() + y.clone())
        .collect()
}

fn ghost_product(a: &[Integer], b: &[Integer]) -> Vec<Integer> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.clone() * y.clone())
        .collect()
}

fn witt_laws(scale: Scale, rng: &mut DetRng, cache: &WittCache) -> Check {
    let e = |e: crate::Error| e.to_string();
    let triples = scale.count(500);
    for _ in 0..triples {
        let n = rng.gen_range(1..=12);
        let (a, b, c) = (
            random_int_witt(rng, n),
            random_int_witt(rng, n),
            random_int_witt(rng, n),
        );
        let (ga, gb) = (a.ghost().map_err(e)?, b.ghost().map_err(e)?);
        let sum = a.add(&b).map_err(e)?;
        let prod = a.mul(&b, cache).map_err(e)?;
        if sum.ghost().map_err(e)? != ghost_sum(&ga, &gb)
            || prod.ghost().map_err(e)? != ghost_product(&ga, &gb)
        {
            return Err(format!("N = {n}: ghost map is not a ring map at {a}, {b}"));
        }
        let one = BigWitt::one(&IntegerRing, n);
        let laws = [
            ("commutativity", prod.clone(), b.mul(&a, cache).map_err(e)?),
            (
                "associativity",
                prod.mul(&c, cache).map_err(e)?,
                a.mul(&b.mul(&c, cache).map_err(e)?, cache).map_err(e)?,
            ),
            (
                "distributivity",
                a.mul(&b.add(&c).map_err(e)?, cache).map_err(e)?,
                prod.add(&a.mul(&c, cache).map_err(e)?).map_err(e)?,
            ),
            ("unit", a.mul(&one, cache).map_err(e)?, a.clone()),
            (
                "additive inverse",
                a.add(&a.neg()).map_err(e)?,
                BigWitt::zero(&IntegerRing, n),
            ),
            (
                "additive associativity",
                sum.add(&c).map_err(e)?,
                a.add(&b.add(&c).map_err(e)?).map_err(e)?,
            ),
        ];
        for (name, lhs, rhs) in laws {
            if lhs != rhs {
                return Err(format!("N = {n}: {name} fails at {a}, {b}, {c}"));
            }
        }
    }

    let top = if scale.is_full() { 8 } else { 5 };
    let mut generated = 0;
    for n in 1..=top {
        generate(Operation::Multiplication, n).map_err(e)?;
        generated += 1;
        for f in 2..=n {
            generate(Operation::Frobenius(f), n).map_err(e)?;
            generated += 1;
        }
    }

    let fv_cases = scale.count(100);
    let fields = [(2, 1), (3, 1), (2, 2), (5, 1), (3, 2)];
    for i in 0..fv_cases {
        let n = 1 + i % 4;
        let len = rng.gen_range(n..=12);
        let a = random_int_witt(rng, len);
        let lhs = a
            .verschiebung(n)
            .map_err(e)?
            .frobenius(n, cache)
            .map_err(e)?;
        let rhs = BigWitt::new(&IntegerRing, a.coeffs()[..len / n].to_vec()).multiple(n as i64);
        if lhs != rhs {
            return Err(format!("F_{n} V_{n} != {n} at {a} over Z"));
        }
        let k = pick_field(rng, &fields);
        let one = FieldElement::one(&k);
        let ak = a.map(&k, |c| {
            let v = i64::try_from(c.value()).expect("small coefficient");
            one.scale(v.rem_euclid(k.p() as i64) as u32)
        });
        let lhs = ak
            .verschiebung(n)
            .map_err(e)?
            .frobenius(n, cache)
            .map_err(e)?;
        let rhs = BigWitt::new(&k, ak.coeffs()[..len / n].to_vec()).multiple(n as i64);
        if lhs != rhs {
            return Err(format!("F_{n} V_{n} != {n} at {ak} over {k}"));
        }
    }

    let rational = scale.count(200);
    let rat_fields = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)];
    for _ in 0..rational {
        let k = pick_field(rng, &rat_fields);
        let n = rng.gen_range(1..=10);
        let mut series = || random_one_series(&k, rng, 4);
        let (f, g, h, u, c) = (series(), series(), series(), series(), series());
        let r1 = RationalWitt::new(f.clone(), g.clone()).map_err(e)?;
        let r2 = RationalWitt::new(h, u).map_err(e)?;
        let sum = rational_to_big(&r1.add(&r2), n).map_err(e)?;
        let parts = rational_to_big(&r1, n)
            .map_err(e)?
            .add(&rational_to_big(&r2, n).map_err(e)?)
            .map_err(e)?;
        if sum != parts {
            return Err(format!("image of {r1} + {r2} is not additive over {k}"));
        }
        let scaled = RationalWitt::new(f.mul(&c), g.mul(&c)).map_err(e)?;
        if scaled != r1
            || rational_to_big(&scaled, n).map_err(e)? != rational_to_big(&r1, n).map_err(e)?
        {
            return Err(format!("cancellation fails for {r1} over {k}"));
        }
    }

    Ok(format!(
        "{triples} ghost-verified triples over Z; {generated} universal families integral; \
         {fv_cases} F_nV_n = n cases over Z and F_q; {rational} rational cases over F_q"
    ))
}

// ---------------------------------------------------------------- 8

const DIVISORS_12: [usize; 6] = [1, 2, 3, 4, 6, 12];

fn rigidity(scale: Scale, rng: &mut DetRng) -> Check {
    let cases = scale.count(100);
    let mut stabilized = 0usize;
    for _ in 0..cases {
        let k = pick_field(rng, &LANG_FIELDS);
        let r = rng.gen_range(1..=4);
        let mut a = random_matrix(&k, r, r, rng);
        // keep some modules non-unit
        if rng.gen_bool(0.3) {
            let j = rng.gen_range(0..r);
            for i in 0..r {
                a.set(i, j, FieldElement::zero(&k));
            }
        }
        let m = FrobModule::new(&k, a).map_err(err)?;
        let s = m.unit_part().0.rank();
        let e = splitting_degree(&m).map_err(err)?;
        let dims: Vec<usize> = DIVISORS_12
            .iter()
            .map(|&d| sol_at(&m, d).map(|x| x.dim()))
            .collect::<crate::Result<_>>()
            .map_err(err)?;
        for (i, &k1) in DIVISORS_12.iter().enumerate() {
            if dims[i] > s {
                return Err(format!(
                    "rank {r} over {k}: dim {} at k = {k1} exceeds unit rank {s}",
                    dims[i]
                ));
            }
            if (dims[i] == s) != (k1 % e == 0) {
                return Err(format!(
                    "rank {r} over {k}: dim {} at k = {k1}, unit rank {s}, splitting degree {e}",
                    dims[i]
                ));
            }
            for (j, &k2) in DIVISORS_12.iter().enumerate() {
                if k2 % k1 == 0 && dims[j] < dims[i] {
                    return Err(format!(
                        "rank {r} over {k}: dimension drops from k = {k1} to k = {k2}"
                    ));
                }
                if k2 % k1 == 0 && dims[i] == s && dims[j] != s {
                    return Err(format!(
                        "rank {r} over {k}: dimension moves after stabilizing at k = {k1}"
                    ));
                }
            }
        }
        if 12 % e == 0 {
            stabilized += 1;
        }
    }
    Ok(format!(
        "{cases} modules monotone along k | 12; {stabilized} stabilized within k | 12 and stayed at the unit rank"
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_of_four() {
        assert_eq!(partitions(4, 4).len(), 5);
        assert_eq!(partitions(3, 3), vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
    }

    #[test]
    fn matrices_are_enumerated_once() {
        let k = field(2, 1);
        let all = all_matrices(&k, 2, 2);
        assert_eq!(all.len(), 16);
        let distinct: BTreeSet<_> = all.iter().map(|m| m.entries().to_vec()).collect();
        assert_eq!(distinct.len(), 16);
        assert_eq!(all_matrices(&k, 0, 3).len(), 1);
    }

    #[test]
    fn reduced_suite_runs() {
        let cache = WittCache::new(None);
        for id in [1, 4, 6] {
            let r = run(id, Scale::Reduced, 1, &cache);
            assert!(r.passed, "{r}");
        }
    }
}
