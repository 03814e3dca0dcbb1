use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use frobenii::contravariant::{lang_solve, rh_cont_dual, sol_at, FiniteAlgebra};
use frobenii::covariant::{rh_cov, rh_inv, SolutionSpace};
use frobenii::field::MAX_DEGREE;
use frobenii::frobenius_module::{hom_space, unitalize, TwistMapData, Unitalization};
use frobenii::galois_ring::GaloisElement;
use frobenii::io::{
    parse_field, parse_field_matrix, parse_series, render_field_matrix, AlgebraJson,
    EtaleAlgebraJson, GaloisRepJson, ModuleJson, RingSpec,
};
use frobenii::poly::DensePoly;
use frobenii::skew::{parse_skew, right_gcd, SkewPoly};
use frobenii::suite::{self, Scale};
use frobenii::witt::{
    rational_to_big, roots_to_coefficients, BigWitt, Operation, RationalWitt, UniversalPolynomials,
    WittCache,
};
use frobenii::{Error, Field, FieldElement, FrobeniusRing, Integer, IntegerRing, Ring};

use crate::args::{Cli, Command, ModuleOp, RhOp, SkewArgs, SkewOp, WittOp, WittRing};

/// A library error, with the command-line literal it came from when it is a
/// syntax error.
#[derive(Debug)]
pub struct CliError {
    pub error: Error,
    pub literal: Option<String>,
}

impl From<Error> for CliError {
    fn from(error: Error) -> Self {
        CliError {
            error,
            literal: None,
        }
    }
}

type Out<T> = Result<T, CliError>;

/// Attach `text` to parse failures so they can be located on the command line.
fn literal<T>(text: &str, parse: impl FnOnce(&str) -> frobenii::Result<T>) -> Out<T> {
    parse(text).map_err(|error| CliError {
        literal: matches!(error, Error::Parse(_)).then(|| text.to_string()),
        error,
    })
}

pub struct Outcome {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub cache_key: Option<String>,
    /// Set when the command ran but reported failed checks.
    pub failed: bool,
}

impl Outcome {
    fn new(command: &str, inputs: Value, result: Value) -> Self {
        Outcome {
            command: command.into(),
            inputs,
            result,
            cache_key: None,
            failed: false,
        }
    }
}

fn load_json<T: DeserializeOwned>(input: &str) -> Out<T> {
    let text = if input.trim_start().starts_with('{') {
        input.to_string()
    } else {
        std::fs::read_to_string(input).map_err(|e| Error::Io(format!("{input}: {e}")))?
    };
    Ok(serde_json::from_str(&text)
        .map_err(|e| Error::Invalid(format!("malformed JSON input: {e}")))?)
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

fn parse_vector(field: &Field, text: &str) -> Out<Vec<FieldElement>> {
    text.split(',')
        .map(|s| literal(s.trim(), |s| frobenii::io::parse_element(field, s)))
        .collect()
}

fn solutions_json(s: &SolutionSpace) -> Value {
    json!({
        "field": s.field.literal(),
        "degree": s.degree,
        "dim": s.dim(),
        "count": s.count().to_string(),
        "basis": s.basis.iter().map(|v| strings(v)).collect::<Vec<_>>(),
        "frobenius": s.frobenius.to_rows(),
    })
}

fn unitalization_json(u: &Unitalization) -> Value {
    json!({
        "module": ModuleJson::from_module(&u.module),
        "rank": u.module.rank(),
        "structure_map": render_field_matrix(&u.structure_map),
        "level": u.level,
    })
}

pub fn run(cli: &Cli) -> Out<Outcome> {
    match &cli.command {
        Command::Field { field } => field_info(field),
        Command::Skew(op) => skew(op),
        Command::Roots { field, skew } => roots(field, skew, cli.max_degree.unwrap_or(64)),
        Command::Module(op) => module(op),
        Command::Rh(op) => rh(op, cli.max_degree),
        Command::Witt(op) => witt(op, &WittCache::new(cli.witt_cache_dir.clone())),
        Command::Selftest { full, criteria } => selftest(*full, criteria, cli),
    }
}

fn field_info(text: &str) -> Out<Outcome> {
    let k = parse_field(text)?;
    let prime = k.prime_field();
    let modulus = DensePoly::new(
        &prime,
        k.modulus()
            .iter()
            .map(|&c| FieldElement::from_u64(&prime, c.into()))
            .collect(),
    );
    Ok(Outcome::new(
        "field",
        json!({ "field": k.literal() }),
        json!({
            "field": k.literal(),
            "characteristic": k.p(),
            "degree": k.n(),
            "order": k.order().to_string(),
            "modulus": modulus.to_text('x'),
            "generator": "u",
        }),
    ))
}

fn skew_op<R: FrobeniusRing>(parent: &R::Parent, name: &str, args: &SkewArgs) -> Out<Value> {
    let a: SkewPoly<R> = literal(&args.a, |s| Ok(parse_skew(parent, s)?))?;
    let b: SkewPoly<R> = literal(&args.b, |s| Ok(parse_skew(parent, s)?))?;
    Ok(match name {
        "mul" => json!({ "product": a.mul(&b)?.to_string() }),
        "div" => {
            let (q, r) = a.left_divmod(&b)?;
            json!({ "quotient": q.to_string(), "remainder": r.to_string() })
        }
        _ => json!({ "gcd": right_gcd(&a, &b)?.to_string() }),
    })
}

fn skew(op: &SkewOp) -> Out<Outcome> {
    let (name, args) = match op {
        SkewOp::Mul(a) => ("mul", a),
        SkewOp::Div(a) => ("div", a),
        SkewOp::Gcd(a) => ("gcd", a),
    };
    let (spec, result) = match (&args.field, &args.ring) {
        (Some(f), None) => {
            let k = parse_field(f)?;
            (k.literal(), skew_op::<FieldElement>(&k, name, args)?)
        }
        (None, Some(r)) => match r.parse::<RingSpec>()? {
            RingSpec::Field(k) => (k.literal(), skew_op::<FieldElement>(&k, name, args)?),
            RingSpec::Galois(g) => (g.literal(), skew_op::<GaloisElement>(&g, name, args)?),
            RingSpec::Integers => {
                return Err(
                    Error::Invalid("skew polynomials need a field or a Galois ring".into()).into(),
                )
            }
        },
        _ => return Err(Error::Invalid("give exactly one of --field or --ring".into()).into()),
    };
    Ok(Outcome::new(
        &format!("skew {name}"),
        json!({ "ring": spec, "a": args.a, "b": args.b }),
        result,
    ))
}

fn roots(field: &str, text: &str, max_degree: usize) -> Out<Outcome> {
    let k = parse_field(field)?;
    let t = literal(text, |s| frobenii::io::parse_skew_poly(&k, s))?;
    let r = t.additive_roots(max_degree)?;
    Ok(Outcome::new(
        "roots",
        json!({ "field": k.literal(), "skew": t.to_string() }),
        json!({
            "additive": t.to_additive().to_string(),
            "count": r.count_with_multiplicity().to_string(),
            "distinct": r.distinct_count().to_string(),
            "multiplicity": r.multiplicity,
            "splitting_degree": r.splitting_degree,
            "splitting_field": r.field.literal(),
            "basis": strings(&r.basis),
            "roots": r.roots.as_ref().map(|v| strings(v)),
        }),
    ))
}

fn module(op: &ModuleOp) -> Out<Outcome> {
    match op {
        ModuleOp::Unit { input } => {
            let m = load_json::<ModuleJson>(input)?.to_module()?;
            let (w, s) = m.unit_part();
            Ok(Outcome::new(
                "module unit",
                json!(ModuleJson::from_module(&m)),
                json!({
                    "is_unit": m.is_unit(),
                    "rank": m.rank(),
                    "unit_rank": w.rank(),
                    "unit_part": ModuleJson::from_module(&w),
                    "image_basis": render_field_matrix(&s),
                }),
            ))
        }
        ModuleOp::Annihilator { input, vector } => {
            let m = load_json::<ModuleJson>(input)?.to_module()?;
            let x = parse_vector(m.base(), vector)?;
            let w = m.min_annihilator(&x)?;
            Ok(Outcome::new(
                "module annihilator",
                json!({ "module": ModuleJson::from_module(&m), "vector": strings(&x) }),
                json!({ "annihilator": w.annihilator.to_string(), "degree": w.degree }),
            ))
        }
        ModuleOp::Unitalize { input } => {
            let j = load_json::<ModuleJson>(input)?;
            let f = parse_field_matrix(&j)?;
            let data = TwistMapData::new(&parse_field(&j.field)?, f)?;
            let u = unitalize(&data)?;
            Ok(Outcome::new(
                "module unitalize",
                json!(j),
                unitalization_json(&u),
            ))
        }
        ModuleOp::Hom { source, target } => {
            let m = load_json::<ModuleJson>(source)?.to_module()?;
            let n = load_json::<ModuleJson>(target)?.to_module()?;
            let basis = hom_space(&m, &n)?;
            Ok(Outcome::new(
                "module hom",
                json!({ "source": ModuleJson::from_module(&m), "target": ModuleJson::from_module(&n) }),
                json!({
                    "dim": basis.len(),
                    "basis": basis.iter().map(render_field_matrix).collect::<Vec<_>>(),
                }),
            ))
        }
    }
}

fn load_algebra(input: &str) -> Out<FiniteAlgebra> {
    let v: Value = load_json(input)?;
    let bad = |e: serde_json::Error| Error::Invalid(format!("malformed algebra: {e}"));
    if v.get("factors").is_some() {
        let e: EtaleAlgebraJson = serde_json::from_value(v).map_err(bad)?;
        Ok(FiniteAlgebra::from_etale(&e.to_algebra()?)?)
    } else {
        let a: AlgebraJson = serde_json::from_value(v).map_err(bad)?;
        Ok(a.to_algebra()?)
    }
}

fn rh(op: &RhOp, max_degree: Option<usize>) -> Out<Outcome> {
    match op {
        RhOp::Cov {
            input,
            require_unit,
        } => {
            let m = load_json::<ModuleJson>(input)?.to_module()?;
            let c = rh_cov(&m, *require_unit)?;
            Ok(Outcome::new(
                "rh cov",
                json!(ModuleJson::from_module(&m)),
                json!({
                    "representation": GaloisRepJson::from_rep(&c.rep),
                    "order": c.rep.order(),
                    "unit_rank": c.unit_rank,
                    "solutions": solutions_json(&c.solutions),
                }),
            ))
        }
        RhOp::Inv { input } => {
            let j = load_json::<GaloisRepJson>(input)?;
            let d = rh_inv(&j.to_rep()?)?;
            Ok(Outcome::new(
                "rh inv",
                json!(j),
                json!({
                    "module": ModuleJson::from_module(&d.module),
                    "degree": d.degree,
                    "basis": render_field_matrix(&d.basis),
                }),
            ))
        }
        RhOp::Sol { input, k } => {
            let m = load_json::<ModuleJson>(input)?.to_module()?;
            let s = sol_at(&m, *k)?;
            Ok(Outcome::new(
                "rh sol",
                json!({ "module": ModuleJson::from_module(&m), "k": k }),
                solutions_json(&s),
            ))
        }
        RhOp::Dual { input } => {
            let b = load_algebra(input)?;
            let u = rh_cont_dual(&b)?;
            Ok(Outcome::new(
                "rh dual",
                json!(AlgebraJson::from_algebra(&b)),
                unitalization_json(&u),
            ))
        }
        RhOp::Lang { input, target } => {
            let m = load_json::<ModuleJson>(input)?.to_module()?;
            let v = parse_vector(m.base(), target)?;
            let cap = max_degree.unwrap_or(MAX_DEGREE / m.base().n());
            let s = lang_solve(&m, &v, cap)?;
            Ok(Outcome::new(
                "rh lang",
                json!({ "module": ModuleJson::from_module(&m), "target": strings(&v) }),
                json!({
                    "x": strings(&s.x),
                    "degree": s.degree,
                    "field": s.x.first().map(|e| e.field().literal()),
                }),
            ))
        }
    }
}

fn witt_series<R: Ring>(
    parent: &R::Parent,
    generator: &Option<R>,
    text: &str,
    n: usize,
) -> Out<BigWitt<R>> {
    let p = literal(text, |s| parse_series(parent, generator.clone(), s))?;
    Ok(BigWitt::from_series(&p, n)?)
}

fn witt_json<R: Ring>(w: &BigWitt<R>) -> Value {
    json!({ "series": w.to_string(), "coefficients": strings(w.coeffs()) })
}

fn witt_in<R: Ring>(
    parent: &R::Parent,
    generator: Option<R>,
    op: &WittOp,
    cache: &WittCache,
) -> Out<(Value, Option<String>)> {
    let g = &generator;
    Ok(match op {
        WittOp::Add { ring, a, b } => {
            let n = ring.truncation;
            let x = witt_series(parent, g, a, n)?.add(&witt_series(parent, g, b, n)?)?;
            (witt_json(&x), None)
        }
        WittOp::Mul { ring, a, b } => {
            let n = ring.truncation;
            let x = witt_series(parent, g, a, n)?.mul(&witt_series(parent, g, b, n)?, cache)?;
            (
                witt_json(&x),
                Some(UniversalPolynomials::key(Operation::Multiplication, n)),
            )
        }
        WittOp::Ghost { ring, a } => {
            let w = witt_series(parent, g, a, ring.truncation)?.ghost()?;
            (json!({ "ghost": strings(&w) }), None)
        }
        WittOp::Frob { ring, n, a } => {
            let x = witt_series(parent, g, a, ring.truncation)?.frobenius(*n, cache)?;
            let key = (*n > 1)
                .then(|| UniversalPolynomials::key(Operation::Frobenius(*n), ring.truncation));
            (witt_json(&x), key)
        }
        WittOp::Versch { ring, n, a } => {
            let x = witt_series(parent, g, a, ring.truncation)?.verschiebung(*n)?;
            (witt_json(&x), None)
        }
        WittOp::Rat2big { ring, num, den } => {
            let f = literal(num, |s| parse_series(parent, generator.clone(), s))?;
            let h = literal(den, |s| parse_series(parent, generator.clone(), s))?;
            let x = rational_to_big(&RationalWitt::new(f, h)?, ring.truncation)?;
            (witt_json(&x), None)
        }
        WittOp::Roots2coef { roots, .. } => {
            let elems = roots
                .iter()
                .map(|r| literal(r, |s| ring_element(parent, g, s)))
                .collect::<Out<Vec<R>>>()?;
            let f = roots_to_coefficients(parent, &elems);
            (json!({ "series": f.to_series_text('t') }), None)
        }
    })
}

/// A constant, in the same grammar as series.
fn ring_element<R: Ring>(
    parent: &R::Parent,
    generator: &Option<R>,
    text: &str,
) -> frobenii::Result<R> {
    let p = parse_series(parent, generator.clone(), text)?;
    if p.degree().unwrap_or(0) > 0 {
        return Err(Error::Invalid(format!("'{text}' is not a constant")));
    }
    Ok(p.coeff(0))
}

fn witt_spec(op: &WittOp) -> (&str, Option<&WittRing>) {
    match op {
        WittOp::Add { ring, .. }
        | WittOp::Mul { ring, .. }
        | WittOp::Ghost { ring, .. }
        | WittOp::Frob { ring, .. }
        | WittOp::Versch { ring, .. }
        | WittOp::Rat2big { ring, .. } => (&ring.ring, Some(ring)),
        WittOp::Roots2coef { ring, .. } => (ring, None),
    }
}

fn witt(op: &WittOp, cache: &WittCache) -> Out<Outcome> {
    let (spec_text, ring) = witt_spec(op);
    let spec: RingSpec = spec_text.parse()?;
    let (result, key) = match &spec {
        RingSpec::Integers => witt_in::<Integer>(&IntegerRing, None, op, cache)?,
        RingSpec::Field(k) => witt_in::<FieldElement>(k, Some(k.generator()), op, cache)?,
        RingSpec::Galois(r) => witt_in::<GaloisElement>(r, Some(r.generator()), op, cache)?,
    };
    let name = match op {
        WittOp::Add { .. } => "add",
        WittOp::Mul { .. } => "mul",
        WittOp::Ghost { .. } => "ghost",
        WittOp::Frob { .. } => "frob",
        WittOp::Versch { .. } => "versch",
        WittOp::Rat2big { .. } => "rat2big",
        WittOp::Roots2coef { .. } => "roots2coef",
    };
    let operands: Vec<&String> = match op {
        WittOp::Add { a, b, .. } | WittOp::Mul { a, b, .. } => vec![a, b],
        WittOp::Ghost { a, .. } | WittOp::Frob { a, .. } | WittOp::Versch { a, .. } => vec![a],
        WittOp::Rat2big { num, den, .. } => vec![num, den],
        WittOp::Roots2coef { roots, .. } => roots.iter().collect(),
    };
    let mut inputs = json!({ "ring": spec.literal(), "operands": operands });
    if let Some(r) = ring {
        inputs["N"] = json!(r.truncation);
    }
    if let WittOp::Frob { n, .. } | WittOp::Versch { n, .. } = op {
        inputs["n"] = json!(n);
    }
    let mut out = Outcome::new(&format!("witt {name}"), inputs, result);
    out.cache_key = key;
    Ok(out)
}

fn selftest(full: bool, criteria: &[u8], cli: &Cli) -> Out<Outcome> {
    let scale = if full { Scale::Full } else { Scale::Reduced };
    let cache = WittCache::new(cli.witt_cache_dir.clone());
    let ids: Vec<u8> = if criteria.is_empty() {
        suite::CRITERIA.iter().map(|(i, _)| *i).collect()
    } else {
        criteria.to_vec()
    };
    let reports: Vec<_> = ids
        .iter()
        .map(|&id| suite::run(id, scale, cli.seed, &cache))
        .collect();
    let failed = reports.iter().filter(|r| !r.passed).count();
    let lines: Vec<String> = reports
        .iter()
        .map(|r| {
            format!(
                "{} [{}] {}: {}",
                if r.passed { "PASS" } else { "FAIL" },
                r.id,
                r.title,
                r.detail
            )
        })
        .collect();
    let mut out = Outcome::new(
        "selftest",
        json!({ "scale": if full { "full" } else { "reduced" }, "criteria": ids }),
        json!({ "criteria": lines, "failed": failed }),
    );
    out.failed = failed > 0;
    Ok(out)
}
