//! Command-line surface: subcommands, flags, and defaults. Per-kind
//! parameter completeness is validated in the command layer, not here, so
//! every numeric flag is optional at parse time.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::verify::DEFAULT_SEED;

#[derive(Debug, Parser)]
#[command(
    name = "segre-lab",
    version,
    about = "Exact Segre integrals over Hilbert schemes of points, symmetric products, \
             and Quot schemes, with positivity criteria, obstruction searches, and grid scans"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute one top Segre integral and its sign.
    Segre(SegreArgs),
    /// Print leading coefficients of a Segre generating series.
    Series(SeriesArgs),
    /// Scan a parameter grid and write a CSV or JSON report.
    Scan(ScanArgs),
    /// Run named verification properties (cross-checks and frozen values).
    Verify(VerifyArgs),
    /// Evaluate a worked bundle family against its positivity criterion.
    Examples {
        #[command(subcommand)]
        family: ExampleFamily,
    },
}

#[derive(Debug, Args)]
pub struct SegreArgs {
    /// Geometry: k3, abelian, bielliptic, enriques, curve, quot, blowup,
    /// rank1, or general-type. Curve and quot print the signed integrals
    /// that carry the positivity statements.
    #[arg(long)]
    pub kind: String,
    /// Number of points.
    #[arg(long)]
    pub k: usize,
    /// Bundle rank (surface kinds and curve).
    #[arg(long)]
    pub r: Option<u32>,
    /// Euler characteristic chi(F) (surface kinds).
    #[arg(long, allow_negative_numbers = true)]
    pub chi: Option<i64>,
    /// Discriminant invariant delta, an integer or num/den (surface kinds).
    #[arg(long, allow_hyphen_values = true)]
    pub delta: Option<String>,
    /// Curve genus (curve and quot).
    #[arg(long)]
    pub g: Option<u32>,
    /// Degree of the bundle (curve) or of the quotient line bundle (quot).
    #[arg(long, allow_negative_numbers = true)]
    pub d: Option<i64>,
    /// Rank of the trivial bundle (quot) or middle exponent (general-type).
    #[arg(long, allow_negative_numbers = true)]
    pub n: Option<i64>,
    /// Half polarization degree, H^2 = 2h (blowup).
    #[arg(long, allow_negative_numbers = true)]
    pub h: Option<i64>,
    /// Exceptional multiple in L = H - ell E (blowup).
    #[arg(long)]
    pub ell: Option<u32>,
    /// L^2 (rank1).
    #[arg(long, allow_negative_numbers = true)]
    pub l_sq: Option<i64>,
    /// chi(O) of the surface (rank1).
    #[arg(long, allow_negative_numbers = true)]
    pub chi_o: Option<i64>,
    /// L.K (rank1).
    #[arg(long, allow_negative_numbers = true)]
    pub l_dot_k: Option<i64>,
    /// K^2 of the surface (rank1).
    #[arg(long, allow_negative_numbers = true)]
    pub k_sq: Option<i64>,
    /// First exponent (general-type).
    #[arg(long, allow_negative_numbers = true)]
    pub m: Option<i64>,
    /// Last exponent (general-type).
    #[arg(long, allow_negative_numbers = true)]
    pub p: Option<i64>,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    /// Geometry: k3, enriques, or curve. Surface coefficients are the
    /// integrals themselves; curve coefficients carry the raw generating
    /// series, signed values come from the segre subcommand.
    #[arg(long)]
    pub kind: String,
    /// Highest order to print.
    #[arg(long)]
    pub k_max: usize,
    /// Output format: plain, csv, or json.
    #[arg(long, default_value = "plain")]
    pub format: String,
    /// Bundle rank.
    #[arg(long)]
    pub r: Option<u32>,
    /// c1^2 of the bundle (surface kinds).
    #[arg(long, allow_negative_numbers = true)]
    pub c1_sq: Option<i64>,
    /// c2 of the bundle (surface kinds).
    #[arg(long, allow_negative_numbers = true)]
    pub c2: Option<i64>,
    /// Curve genus.
    #[arg(long)]
    pub g: Option<u32>,
    /// Bundle degree (curve).
    #[arg(long, allow_negative_numbers = true)]
    pub d: Option<i64>,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// Grid to scan; enriques is the only kind and the default.
    #[arg(long)]
    pub kind: Option<String>,
    /// Scan exponent-form positivity windows instead of the Enriques grid.
    #[arg(long)]
    pub lemma41: bool,
    /// Rank range lo..hi (enriques grid).
    #[arg(long, allow_hyphen_values = true)]
    pub r: Option<String>,
    /// Point-count range lo..hi (enriques grid).
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<String>,
    /// Margin range lo..hi added to the naive bound (r+2)k (enriques grid).
    #[arg(long, allow_hyphen_values = true)]
    pub chi_margin: Option<String>,
    /// Integer delta bounds lo..hi; even ranks scan the half-integers between
    /// them (enriques grid).
    #[arg(long, allow_hyphen_values = true)]
    pub delta: Option<String>,
    /// First-exponent range lo..hi (lemma grid).
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<String>,
    /// Middle-exponent range lo..hi (lemma grid).
    #[arg(long, allow_hyphen_values = true)]
    pub n: Option<String>,
    /// Last-exponent range lo..hi (lemma grid).
    #[arg(long, allow_hyphen_values = true)]
    pub p: Option<String>,
    /// Report format: csv or json.
    #[arg(long)]
    pub format: Option<String>,
    /// Output path; defaults to segre-scan.csv or segre-scan.json.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads; the report is identical for every worker count.
    #[arg(long)]
    pub workers: Option<usize>,
    /// JSON file of defaults for these flags; explicit flags win.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Run a single named property instead of the full suite.
    #[arg(long)]
    pub only: Option<String>,
    /// Seed for the randomized engine-law cases.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum ExampleFamily {
    /// Rank-r bundle attached to a genus-g curve with a degree-d series on a
    /// K3 surface, twisted by the polarization.
    LazarsfeldMukai {
        #[arg(long)]
        g: i64,
        #[arg(long)]
        d: i64,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        k: usize,
    },
    /// Rank-2a Ulrich bundle on a K3 surface polarized by mH with H^2 = 2h.
    Ulrich {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        h: i64,
        #[arg(long, default_value_t = 1)]
        m: i64,
        #[arg(long)]
        k: usize,
    },
    /// Slope-(b/a) semihomogeneous bundle on a principally polarized abelian
    /// surface.
    Semihomogeneous {
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Line bundle H - ell E on the blowup of a K3 surface with H^2 = 2h.
    BlowupLineBundle {
        #[arg(long)]
        h: i64,
        #[arg(long)]
        ell: u32,
        #[arg(long)]
        k: usize,
    },
}
