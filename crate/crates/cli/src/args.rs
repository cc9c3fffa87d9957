use clap::{Parser, Subcommand, ValueEnum};
use fixpoint::{CycleType, Partition};

#[derive(Parser, Debug)]
#[command(name = "fixpoint", version, about = "Fixed points of random commutators and random i-cycle walks")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Master seed for Monte Carlo runs.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Arithmetic for real-valued walk moments: exact, 24, 53, 128 or 256 bits.
    #[arg(long, global = true, default_value = "128", value_parser = parse_precision)]
    pub precision: Precision,
    /// Worker threads; 0 or unset means one per core.
    #[arg(long, global = true, env = "FIXPOINT_THREADS")]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Precision {
    Exact,
    Bits24,
    Bits53,
    Bits128,
    Bits256,
}

impl Precision {
    pub fn label(self) -> &'static str {
        match self {
            Precision::Exact => "exact",
            Precision::Bits24 => "24",
            Precision::Bits53 => "53",
            Precision::Bits128 => "128",
            Precision::Bits256 => "256",
        }
    }
}

fn parse_precision(s: &str) -> Result<Precision, String> {
    match s.trim() {
        "exact" => Ok(Precision::Exact),
        "24" => Ok(Precision::Bits24),
        "53" => Ok(Precision::Bits53),
        "128" => Ok(Precision::Bits128),
        "256" => Ok(Precision::Bits256),
        other => Err(format!("unsupported precision '{other}' (use exact, 24, 53, 128 or 256)")),
    }
}

/// Accepts plain integers and integral scientific notation such as `1e6`.
pub fn parse_samples(s: &str) -> Result<u64, String> {
    if let Ok(v) = s.parse::<u64>() {
        return Ok(v);
    }
    let f: f64 = s.parse().map_err(|_| format!("'{s}' is not a sample count"))?;
    if f.is_finite() && f >= 0.0 && f.fract() == 0.0 && f <= u64::MAX as f64 {
        Ok(f as u64)
    } else {
        Err(format!("'{s}' is not a non-negative integer"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgChoice {
    Skew,
    Updown,
    Ding,
    Oracle,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MomentModel {
    CommutatorRandom,
    CommutatorFixed,
    Walk,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SimModel {
    Uniform,
    Commutator,
    Walk,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DistModel {
    Uniform,
    Commutator,
    Walk,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Identities,
    Asymptotics,
    Oracles,
    All,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Multiplicity of an irreducible in a tensor power of the defining representation.
    Mult {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value_t = AlgChoice::Skew)]
        alg: AlgChoice,
    },
    /// Exact moments of the fixed-point count with Poisson references.
    Moments {
        #[arg(value_enum)]
        model: MomentModel,
        #[arg(long)]
        n: Option<usize>,
        /// Cycle type of the fixed element, e.g. `8` or `2^3`.
        #[arg(long)]
        x: Option<CycleType>,
        #[arg(long)]
        i: Option<usize>,
        #[arg(long)]
        k: Option<u64>,
        /// Step count as `n ln n / i + c n`.
        #[arg(long, allow_hyphen_values = true)]
        c: Option<f64>,
        #[arg(long, default_value_t = 4)]
        r_max: usize,
    },
    /// Monte Carlo histogram of fixed points.
    Simulate {
        #[arg(long, value_enum)]
        model: SimModel,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        x: Option<CycleType>,
        #[arg(long)]
        i: Option<usize>,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long, allow_hyphen_values = true)]
        c: Option<f64>,
        #[arg(long, default_value = "1000000", value_parser = parse_samples)]
        samples: u64,
        #[arg(long, default_value_t = 4)]
        r_max: usize,
    },
    /// Run a verification suite; exit 3 if any gate fails.
    Verify {
        #[arg(value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Character ratio on an i-cycle, or its deviation from `1 - i t / n`.
    Ratio {
        #[arg(long)]
        lambda: Option<Partition>,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        n_list: Option<Vec<usize>>,
    },
    /// Exact fixed-point distribution by enumeration or class sums.
    Dist {
        #[arg(value_enum)]
        model: DistModel,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        x: Option<CycleType>,
        #[arg(long)]
        i: Option<usize>,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long, default_value_t = 4)]
        r_max: usize,
    },
}
