//! Universal integer polynomials for big Witt vector multiplication and the
//! Frobenius operators, in series coordinates, with an on-disk cache.
//!
//! With `f = 1 + Σ c_n t^n`, ghost components satisfy `−t·f'/f = Σ w_n t^n`,
//! i.e. `−n·c_n = w_n + Σ_{0<k<n} c_k w_{n-k}`. A polynomial operation on
//! ghost vectors is pulled back by solving this triangle over ℤ; every
//! division by `n` is checked to be exact, which is the integrality proof.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::Ring;

/// Sparse exponent vector: `(variable, exponent)` with increasing variables.
type Monomial = Vec<(u16, u16)>;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IntPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push((a[i].0, a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly::default()
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = IntPoly::zero();
        if !c.is_zero() {
            p.terms.insert(Vec::new(), c);
        }
        p
    }

    pub fn var(i: usize) -> Self {
        let mut p = IntPoly::zero();
        p.terms.insert(vec![(i as u16, 1)], BigInt::one());
        p
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> IntPoly {
        if k.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        let mut out = IntPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(mono_mul(ma, mb), ca * cb);
            }
        }
        out
    }

    /// `self / d` when every coefficient is divisible by `d`.
    pub fn div_exact(&self, d: &BigInt) -> Option<IntPoly> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            terms.insert(m.clone(), q);
        }
        Some(IntPoly { terms })
    }

    fn max_exponents(&self, nvars: usize) -> Vec<u16> {
        let mut out = vec![0u16; nvars];
        for m in self.terms.keys() {
            for &(v, e) in m {
                out[v as usize] = out[v as usize].max(e);
            }
        }
        out
    }

    /// Evaluates with integer coefficients mapped into `R`.
    pub fn eval<R: Ring>(&self, parent: &R::Parent, vals: &[R]) -> R {
        let powers = power_table(parent, vals, &self.max_exponents(vals.len()));
        self.eval_with(parent, &powers)
    }

    fn eval_with<R: Ring>(&self, parent: &R::Parent, powers: &[Vec<R>]) -> R {
        let mut acc = R::zero(parent);
        for (m, c) in &self.terms {
            let mut t = R::from_integer(parent, c);
            for &(v, e) in m {
                t = t * powers[v as usize][e as usize].clone();
            }
            acc = acc + t;
        }
        acc
    }
}

fn power_table<R: Ring>(parent: &R::Parent, vals: &[R], max: &[u16]) -> Vec<Vec<R>> {
    vals.iter()
        .zip(max)
        .map(|(x, &e)| {
            let mut row = vec![R::one(parent)];
            for _ in 0..e {
                let next = row.last().unwrap().clone() * x.clone();
                row.push(next);
            }
            row
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Operation {
    Multiplication,
    /// The Frobenius `F_n`.
    Frobenius(usize),
}

impl Operation {
    fn tag(&self) -> String {
        match self {
            Operation::Multiplication => "mul".into(),
            Operation::Frobenius(n) => format!("frob{n}"),
        }
    }
}

/// Polynomials `P_1..P_M` giving the output series coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalPolynomials {
    pub operation: Operation,
    /// Input truncation `N`.
    pub truncation: usize,
    /// Number of input variables: `2N` for multiplication, `N` otherwise.
    pub variables: usize,
    pub polys: Vec<IntPoly>,
}

impl UniversalPolynomials {
    /// Cache key, also the file stem.
    pub fn key(operation: Operation, truncation: usize) -> String {
        format!("{}-N{truncation}.v{FORMAT_VERSION}", operation.tag())
    }

    pub fn eval<R: Ring>(&self, parent: &R::Parent, vals: &[R]) -> Vec<R> {
        assert_eq!(vals.len(), self.variables);
        let mut max = vec![0u16; self.variables];
        for p in &self.polys {
            for (m, e) in max.iter_mut().zip(p.max_exponents(self.variables)) {
                *m = (*m).max(e);
            }
        }
        let powers = power_table(parent, vals, &max);
        self.polys
            .iter()
            .map(|p| p.eval_with(parent, &powers))
            .collect()
    }

    pub fn term_count(&self) -> usize {
        self.polys.iter().map(|p| p.len()).sum()
    }
}

/// Ghost polynomials `w_1..w_count` of the series with coefficients
/// `x_{offset}, x_{offset+1}, …`.
fn ghost_polys(offset: usize, count: usize) -> Vec<IntPoly> {
    let mut w: Vec<IntPoly> = Vec::with_capacity(count);
    for n in 1..=count {
        // w_n = −n·c_n − Σ_{0<k<n} c_k w_{n-k}
        let mut acc = IntPoly::var(offset + n - 1).scale(&BigInt::from(-(n as i64)));
        for k in 1..n {
            acc = acc.add(
                &IntPoly::var(offset + k - 1)
                    .mul(&w[n - k - 1])
                    .scale(&BigInt::from(-1)),
            );
        }
        w.push(acc);
    }
    w
}

/// Series coefficients from ghost polynomials, checking integrality.
fn from_ghost(w: &[IntPoly]) -> Result<Vec<IntPoly>> {
    let mut c: Vec<IntPoly> = Vec::with_capacity(w.len());
    for n in 1..=w.len() {
        let mut s = w[n - 1].clone();
        for k in 1..n {
            s = s.add(&c[k - 1].mul(&w[n - k - 1]));
        }
        let cn = s
            .div_exact(&BigInt::from(-(n as i64)))
            .ok_or_else(|| Error::Invalid(format!("universal polynomial {n} is not integral")))?;
        c.push(cn);
    }
    Ok(c)
}

/// Above this truncation the polynomials are not generated.
pub const MAX_UNIVERSAL_N: usize = 16;

pub fn generate(operation: Operation, truncation: usize) -> Result<UniversalPolynomials> {
    if truncation > MAX_UNIVERSAL_N {
        return Err(Error::ResourceLimit(format!(
            "universal polynomials are generated up to N = {MAX_UNIVERSAL_N}"
        )));
    }
    let (variables, ghosts) = match operation {
        Operation::Multiplication => {
            let a = ghost_polys(0, truncation);
            let b = ghost_polys(truncation, truncation);
            (
                2 * truncation,
                a.iter().zip(&b).map(|(x, y)| x.mul(y)).collect::<Vec<_>>(),
            )
        }
        Operation::Frobenius(n) => {
            if n == 0 {
                return Err(Error::Invalid("Frobenius index must be at least 1".into()));
            }
            let a = ghost_polys(0, truncation);
            let out = truncation / n;
            (
                truncation,
                (1..=out).map(|k| a[n * k - 1].clone()).collect(),
            )
        }
    };
    Ok(UniversalPolynomials {
        operation,
        truncation,
        variables,
        polys: from_ghost(&ghosts)?,
    })
}

const FORMAT_VERSION: u32 = 1;
const FORMAT_NAME: &str = "frobenii-witt-universal";

#[derive(Serialize, Deserialize)]
struct TermFile {
    /// `(variable, exponent)` pairs.
    e: Vec<(u16, u16)>,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    format: String,
    version: u32,
    operation: String,
    truncation: usize,
    variables: usize,
    polynomials: Vec<Vec<TermFile>>,
}

fn to_file(u: &UniversalPolynomials) -> CacheFile {
    CacheFile {
        format: FORMAT_NAME.into(),
        version: FORMAT_VERSION,
        operation: u.operation.tag(),
        truncation: u.truncation,
        variables: u.variables,
        polynomials: u
            .polys
            .iter()
            .map(|p| {
                p.terms
                    .iter()
                    .map(|(m, c)| TermFile {
                        e: m.clone(),
                        c: c.to_string(),
                    })
                    .collect()
            })
            .collect(),
    }
}

fn from_file(
    f: CacheFile,
    operation: Operation,
    truncation: usize,
) -> Option<UniversalPolynomials> {
    if f.format != FORMAT_NAME
        || f.version != FORMAT_VERSION
        || f.operation != operation.tag()
        || f.truncation != truncation
    {
        return None;
    }
    let mut polys = Vec::with_capacity(f.polynomials.len());
    for p in f.polynomials {
        let mut terms = BTreeMap::new();
        for t in p {
            if t.e.iter().any(|&(v, _)| v as usize >= f.variables) {
                return None;
            }
            terms.insert(t.e, t.c.parse().ok()?);
        }
        polys.push(IntPoly { terms });
    }
    Some(UniversalPolynomials {
        operation,
        truncation,
        variables: f.variables,
        polys,
    })
}

/// Serialized bytes of a cache artifact; identical for identical inputs.
pub fn serialize(u: &UniversalPolynomials) -> Vec<u8> {
    let mut bytes = serde_json::to_vec(&to_file(u)).expect("serializable");
    bytes.push(b'\n');
    bytes
}

fn write_atomically(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = path.parent().unwrap_or(Path::new("."));
    fs::create_dir_all(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
    let tmp = dir.join(format!(
        ".{}.tmp-{}-{:?}",
        path.file_name().and_then(|s| s.to_str()).unwrap_or("cache"),
        std::process::id(),
        std::thread::current().id()
    ));
    fs::write(&tmp, bytes).map_err(|e| Error::Io(format!("{}: {e}", tmp.display())))?;
    fs::rename(&tmp, path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Where a cache entry came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheSource {
    Memory,
    Disk,
    Generated,
}

/// In-memory cache of universal polynomials, optionally backed by a
/// directory of JSON artifacts.
#[derive(Debug, Default)]
pub struct WittCache {
    dir: Option<PathBuf>,
    memory: Mutex<HashMap<(Operation, usize), Arc<UniversalPolynomials>>>,
}

impl WittCache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        WittCache {
            dir,
            memory: Mutex::new(HashMap::new()),
        }
    }

    /// A process-wide cache without disk backing.
    pub fn shared() -> &'static WittCache {
        static SHARED: OnceLock<WittCache> = OnceLock::new();
        SHARED.get_or_init(|| WittCache::new(None))
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn path_for(&self, operation: Operation, truncation: usize) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| {
            d.join(format!(
                "{}.json",
                UniversalPolynomials::key(operation, truncation)
            ))
        })
    }

    pub fn get(
        &self,
        operation: Operation,
        truncation: usize,
    ) -> Result<Arc<UniversalPolynomials>> {
        self.get_with_source(operation, truncation).map(|(u, _)| u)
    }

    pub fn get_with_source(
        &self,
        operation: Operation,
        truncation: usize,
    ) -> Result<(Arc<UniversalPolynomials>, CacheSource)> {
        let key = (operation, truncation);
        if let Some(u) = self.memory.lock().unwrap().get(&key) {
            return Ok((u.clone(), CacheSource::Memory));
        }
        let path = self.path_for(operation, truncation);
        let from_disk = path.as_ref().and_then(|p| {
            let bytes = fs::read(p).ok()?;
            from_file(serde_json::from_slice(&bytes).ok()?, operation, truncation)
        });
        let (u, source) = match from_disk {
            Some(u) => (u, CacheSource::Disk),
            None => {
                let u = generate(operation, truncation)?;
                if let Some(p) = &path {
                    write_atomically(p, &serialize(&u))?;
                }
                (u, CacheSource::Generated)
            }
        };
        let mut mem = self.memory.lock().unwrap();
        let entry = mem.entry(key).or_insert_with(|| Arc::new(u));
        Ok((entry.clone(), source))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Integer, IntegerRing};

    fn int(v: i64) -> Integer {
        Integer::new(v)
    }

    #[test]
    fn first_multiplication_polynomials() {
        let u = generate(Operation::Multiplication, 3).unwrap();
        // c_1 = -a_1 b_1 with a at 0.., b at N..
        let mut expect = IntPoly::zero();
        expect.add_term(vec![(0, 1), (3, 1)], BigInt::from(-1));
        assert_eq!(u.polys[0], expect);
        // Teichmüller: (1-2t)(1-3t) ↦ 1-6t
        let vals = [int(-2), int(0), int(0), int(-3), int(0), int(0)];
        let out = u.eval(&IntegerRing, &vals);
        assert_eq!(out, vec![int(-6), int(0), int(0)]);
    }

    #[test]
    fn frobenius_polynomials() {
        let u = generate(Operation::Frobenius(2), 4).unwrap();
        assert_eq!(u.polys.len(), 2);
        let vals = [int(-3), int(0), int(0), int(0)];
        assert_eq!(u.eval(&IntegerRing, &vals), vec![int(-9), int(0)]);
    }

    #[test]
    fn integrality_up_to_eight() {
        for n in 1..=8 {
            generate(Operation::Multiplication, n).unwrap();
            for m in 1..=n {
                generate(Operation::Frobenius(m), n).unwrap();
            }
        }
        assert!(generate(Operation::Multiplication, MAX_UNIVERSAL_N + 1).is_err());
    }

    #[test]
    fn disk_round_trip_is_byte_identical() {
        let dir = tempfile::tempdir().unwrap();
        let cache = WittCache::new(Some(dir.path().to_path_buf()));
        let (a, src) = cache.get_with_source(Operation::Multiplication, 5).unwrap();
        assert_eq!(src, CacheSource::Generated);
        let path = cache.path_for(Operation::Multiplication, 5).unwrap();
        assert!(path.ends_with("mul-N5.v1.json"));
        let first = fs::read(&path).unwrap();
        let fresh = WittCache::new(Some(dir.path().to_path_buf()));
        let (b, src) = fresh.get_with_source(Operation::Multiplication, 5).unwrap();
        assert_eq!(src, CacheSource::Disk);
        assert_eq!(a, b);
        assert_eq!(serialize(&b), first);
        // a corrupt artifact is regenerated
        fs::write(&path, b"{").unwrap();
        let again = WittCache::new(Some(dir.path().to_path_buf()));
        let (_, src) = again.get_with_source(Operation::Multiplication, 5).unwrap();
        assert_eq!(src, CacheSource::Generated);
        assert_eq!(fs::read(&path).unwrap(), first);
    }

    #[test]
    fn concurrent_generators_agree() {
        let dir = tempfile::tempdir().unwrap();
        let handles: Vec<_> = (0..4)
            .map(|_| {
                let d = dir.path().to_path_buf();
                std::thread::spawn(move || {
                    let c = WittCache::new(Some(d));
                    serialize(&c.get(Operation::Frobenius(3), 7).unwrap())
                })
            })
            .collect();
        let outs: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert!(outs.windows(2).all(|w| w[0] == w[1]));
        let on_disk = fs::read(dir.path().join("frob3-N7.v1.json")).unwrap();
        assert_eq!(on_disk, outs[0]);
    }
}
