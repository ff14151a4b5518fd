use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

/// Certified numerics and exact algebra for the quadratic family x^2 + c.
#[derive(Debug, Parser)]
#[command(name = "dynheights", version, about)]
pub struct Cli {
    /// Worker threads for the quadrature (results never depend on it).
    #[arg(long, global = true, env = "DYNHEIGHTS_THREADS")]
    pub threads: Option<usize>,

    /// Print a human-readable table instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,

    /// Also write the JSON document to this file.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Certified <x^2 + c, x^2> by roots-of-unity quadrature.
    AzPair(AzPairArgs),
    /// The N=13, M=2^24 basilica run, checked against the reference value.
    ReproPaper,
    /// Weil height of a rational number.
    Height {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
    },
    /// Canonical height for x^2 + c with integer c.
    Canheight {
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Height of a root of an integer polynomial (coefficients highest degree first).
    MinpolyHeight {
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',', num_args = 1..)]
        coeffs: Vec<String>,
    },
    /// Classify the critical orbit of x^2 + c.
    Pcf {
        #[arg(long, allow_hyphen_values = true)]
        c: String,
    },
    /// Eisenstein stability certificate for (x^2 + c, alpha).
    Stability {
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
    },
    /// Discriminant of the n-th iterate of A x^2 + B x + C.
    Disc(DiscArgs),
    /// Chebyshev polynomial T_d.
    Cheb {
        #[arg(long)]
        d: u32,
    },
    /// Check the abelian transitive lemmas on a generated permutation group.
    Permcheck {
        #[arg(long)]
        n: usize,
        /// A generator in cycle notation, e.g. "(1 2 3 4)"; repeatable.
        #[arg(long = "gen", required = true)]
        generators: Vec<String>,
    },
    /// Exhaustive lemma sweep over pair-generated subgroups of S_n.
    Permsweep {
        #[arg(long)]
        n: usize,
    },
    /// Bounds d^n <= |Gal| <= d!^((d^n - 1)/(d - 1)).
    Bounds {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        n: u32,
    },
    /// Exact expansion of phi^n(x) - alpha.
    Preimage {
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long)]
        n: u32,
    },
    /// Mean heights of the backward orbit of alpha, level by level.
    Demo {
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long)]
        n: u32,
    },
    /// Conjugate A x^2 + B x + C to x^2 + c.
    Normalize(QuadraticArgs),
}

#[derive(Debug, Args)]
pub struct AzPairArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub c: String,
    /// Target analytic budget; picks N and M automatically.
    #[arg(long, conflicts_with_all = ["depth", "nodes"], required_unless_present_all = ["depth", "nodes"])]
    pub tol: Option<f64>,
    /// Truncation depth N.
    #[arg(long = "N", requires = "nodes")]
    pub depth: Option<u32>,
    /// Number M of roots of unity.
    #[arg(long = "M", requires = "depth")]
    pub nodes: Option<u64>,
    /// Fail with exit code 2 unless the verdict holds, e.g. below:AD_2POWER.
    #[arg(long, value_name = "below|above:NAME")]
    pub require_verdict: Option<String>,
}

#[derive(Debug, Args)]
pub struct QuadraticArgs {
    #[arg(long = "A", allow_hyphen_values = true)]
    pub a: String,
    #[arg(long = "B", allow_hyphen_values = true)]
    pub b: String,
    #[arg(long = "C", allow_hyphen_values = true)]
    pub c: String,
}

#[derive(Debug, Args)]
pub struct DiscArgs {
    #[command(flatten)]
    pub quadratic: QuadraticArgs,
    #[arg(long, default_value_t = 1)]
    pub n: u32,
}
