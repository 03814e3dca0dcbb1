use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

/// Exact computations with Frobenius modules, skew polynomials and Witt vectors.
#[derive(Parser, Debug)]
#[command(name = "frh", version)]
pub struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Seed for randomized searches and the self-test.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Largest extension degree searched.
    #[arg(long, global = true)]
    pub max_degree: Option<usize>,

    /// Directory for cached universal Witt polynomials.
    #[arg(long, global = true, env = "FRH_WITT_CACHE")]
    pub witt_cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Describe the field GF(p^n).
    Field {
        #[arg(long)]
        field: String,
    },
    /// Skew polynomial arithmetic in the variable F.
    #[command(subcommand)]
    Skew(SkewOp),
    /// Roots of the additive polynomial of a skew polynomial.
    Roots {
        #[arg(long)]
        field: String,
        #[arg(long)]
        skew: String,
    },
    /// Frobenius modules given as JSON (inline or a file path).
    #[command(subcommand)]
    Module(ModuleOp),
    /// The covariant and contravariant correspondences.
    #[command(subcommand)]
    Rh(RhOp),
    /// Big Witt vectors in series coordinates.
    #[command(subcommand)]
    Witt(WittOp),
    /// Run the property suites, at reduced scale unless --full.
    Selftest {
        #[arg(long)]
        full: bool,
        /// Restrict to these criteria.
        #[arg(long = "criterion")]
        criteria: Vec<u8>,
    },
}

#[derive(Args, Debug)]
pub struct SkewArgs {
    /// Coefficient field p:n.
    #[arg(long, conflicts_with = "ring")]
    pub field: Option<String>,
    /// Coefficient Galois ring p:m:n.
    #[arg(long)]
    pub ring: Option<String>,
    pub a: String,
    pub b: String,
}

#[derive(Subcommand, Debug)]
pub enum SkewOp {
    Mul(SkewArgs),
    /// Left division a = q·b + r.
    Div(SkewArgs),
    /// Monic right gcd.
    Gcd(SkewArgs),
}

#[derive(Subcommand, Debug)]
pub enum ModuleOp {
    /// Unit test and unit part.
    Unit { input: String },
    /// Minimal monic annihilator of a vector.
    Annihilator {
        input: String,
        /// Comma-separated coordinates.
        #[arg(long)]
        vector: String,
    },
    /// Unitalization of a map N → φ*N given by its matrix.
    Unitalize { input: String },
    /// Basis of the homomorphisms between two modules.
    Hom { source: String, target: String },
}

#[derive(Subcommand, Debug)]
pub enum RhOp {
    /// Fixed points as a Galois representation.
    Cov {
        input: String,
        /// Reject non-unit modules instead of using the unit part.
        #[arg(long)]
        require_unit: bool,
    },
    /// Unit module of a representation.
    Inv { input: String },
    /// Solutions over the degree-k extension.
    Sol {
        input: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Dual unit module of a finite algebra.
    Dual { input: String },
    /// Solve F(x) − x = v.
    Lang {
        input: String,
        /// Comma-separated coordinates of v.
        #[arg(long)]
        target: String,
    },
}

#[derive(Args, Debug)]
pub struct WittRing {
    /// Coefficient ring: Z, p:n or p:m:n.
    #[arg(long, default_value = "Z")]
    pub ring: String,
    /// Truncation length.
    #[arg(long = "N")]
    pub truncation: usize,
}

#[derive(Subcommand, Debug)]
pub enum WittOp {
    Add {
        #[command(flatten)]
        ring: WittRing,
        a: String,
        b: String,
    },
    Mul {
        #[command(flatten)]
        ring: WittRing,
        a: String,
        b: String,
    },
    Ghost {
        #[command(flatten)]
        ring: WittRing,
        a: String,
    },
    Frob {
        #[command(flatten)]
        ring: WittRing,
        #[arg(long)]
        n: usize,
        a: String,
    },
    Versch {
        #[command(flatten)]
        ring: WittRing,
        #[arg(long)]
        n: usize,
        a: String,
    },
    /// Expand a fraction num/den of series.
    Rat2big {
        #[command(flatten)]
        ring: WittRing,
        num: String,
        den: String,
    },
    /// The polynomial ∏(1 − a t) of a list of ring elements.
    Roots2coef {
        #[arg(long, default_value = "Z")]
        ring: String,
        #[arg(allow_negative_numbers = true)]
        roots: Vec<String>,
    },
}
