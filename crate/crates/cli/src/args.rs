use clap::{Args, Parser, Subcommand, ValueEnum};

use pseudo_binet::unity::NamedGroup;

#[derive(Debug, Parser)]
#[command(
    name = "pbinet",
    version,
    about = "Closed-form terms of linear recurrences and rotor arithmetic on roots of unity"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a rotor expression such as "2 / 3" or "1 _ 1 ~ 1 = 1"
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Characteristic roots of x^n = c_{n-1}x^{n-1} + ... + c_0
    Roots {
        #[command(flatten)]
        coeffs: CoeffArgs,
        #[command(flatten)]
        method: MethodArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Roots and Binet weights fitted to the seeds
    Solve {
        #[command(flatten)]
        rec: RecArgs,
        #[command(flatten)]
        method: MethodArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// One term by closed form, next to the exact iterate
    Term {
        #[command(flatten)]
        rec: RecArgs,
        /// Index of the term, counting the first seed as k = 0
        #[arg(short = 'k', value_name = "K")]
        k: u32,
        #[command(flatten)]
        method: MethodArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// The first terms of the sequence by exact iteration
    Seq {
        #[command(flatten)]
        rec: RecArgs,
        #[arg(long, value_name = "N")]
        count: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compare every closed-form route against iteration up to kmax
    Verify {
        #[command(flatten)]
        rec: RecArgs,
        #[arg(long, default_value_t = 50)]
        kmax: u32,
        #[arg(long, default_value_t = 1e-8, value_parser = parse_tolerance)]
        tol: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Multiplication table of a named rotor group
    Table {
        /// One of R3, C3, R4, C4, union3, union8
        #[arg(long, value_parser = parse_group)]
        group: NamedGroup,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Resolvents sigma (and A, B for cubics) of an order-2 or order-3 polynomial
    Sigma {
        #[command(flatten)]
        coeffs: CoeffArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CoeffArgs {
    /// Comma-separated c_0,c_1,...,c_{n-1}
    #[arg(long, value_name = "LIST", allow_hyphen_values = true, value_parser = parse_list)]
    pub coeffs: List,
}

#[derive(Debug, Args)]
pub struct RecArgs {
    /// Comma-separated c_0,c_1,...,c_{n-1}
    #[arg(long, value_name = "LIST", allow_hyphen_values = true, value_parser = parse_list)]
    pub coeffs: List,
    /// Comma-separated x_0,x_1,...,x_{n-1}
    #[arg(long, value_name = "LIST", allow_hyphen_values = true, value_parser = parse_list)]
    pub seeds: List,
}

#[derive(Debug, Args)]
pub struct MethodArgs {
    /// Root solver: closed forms up to degree 4, or Durand-Kerner
    #[arg(long, value_enum)]
    pub method: Option<MethodArg>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Closed,
    Numeric,
    Weights,
}

impl MethodArg {
    pub fn name(self) -> &'static str {
        match self {
            MethodArg::Closed => "closed",
            MethodArg::Numeric => "numeric",
            MethodArg::Weights => "weights",
        }
    }
}

/// A parsed comma-separated list of finite reals.
#[derive(Clone, Debug, PartialEq)]
pub struct List(pub Vec<f64>);

fn parse_list(text: &str) -> Result<List, String> {
    let values = text
        .split(',')
        .map(|item| {
            let item = item.trim();
            let value: f64 = item
                .parse()
                .map_err(|_| format!("`{item}` is not a decimal number"))?;
            if value.is_finite() {
                Ok(value)
            } else {
                Err(format!("`{item}` is not finite"))
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(List(values))
}

fn parse_tolerance(text: &str) -> Result<f64, String> {
    match text.parse::<f64>() {
        Ok(t) if t.is_finite() && t > 0.0 => Ok(t),
        _ => Err(format!("`{text}` is not a positive decimal number")),
    }
}

fn parse_group(text: &str) -> Result<NamedGroup, String> {
    NamedGroup::from_name(text).ok_or_else(|| {
        let names: Vec<&str> = NamedGroup::ALL.iter().map(|g| g.name()).collect();
        format!(
            "unknown group `{text}` (expected one of {})",
            names.join(", ")
        )
    })
}
