//! Command-line surface over the exact Padé/Appell machinery: table entries,
//! family members, approximated polynomials, the verification suites, figure
//! CSV emission, and the Bessel series.
//!
//! Exit status: 0 on success, 2 on usage errors, 3 when a requested Padé
//! table entry is defective, 1 on any other failure. Exact quantities print
//! as `p/q`.

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use appell_pade::error::Error;
use appell_pade::figures::{figure_csv, FigureId};
use appell_pade::grid::GridSpec;
use appell_pade::operator::pade_appell;
use appell_pade::pade::pade_of_amplitude;
use appell_pade::umbral::bessel_pade_series;
use appell_pade::verify::{run_suite, Suite};
use appell_pade::{Amplitude, Family, Rational};

#[derive(Parser)]
#[command(
    name = "appell-pade",
    version,
    about = "Exact Pade approximants of Appell amplitudes and their polynomial families"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one Padé table entry of an amplitude; print exact coefficients.
    Pade {
        /// Amplitude kind: exp_neg, exp_neg_half_square, trunc_exp, euler,
        /// bernoulli, hermite2.
        #[arg(long)]
        amplitude: String,
        /// Rational parameter for the parameterized amplitudes, e.g. -1 or 2/3.
        #[arg(long, allow_hyphen_values = true)]
        y: Option<String>,
        /// Numerator degree.
        #[arg(short)]
        m: usize,
        /// Denominator degree.
        #[arg(short)]
        n: usize,
        /// Emit JSON instead of text.
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        /// Emit CSV instead of text.
        #[arg(long)]
        csv: bool,
    },
    /// Print the exact degree-n member of a polynomial family.
    Family {
        /// Family kind: hermite1, hermite2, he, trunc_exp, trunc_exp2,
        /// euler, bernoulli.
        #[arg(long)]
        kind: String,
        /// Rational parameter for the parameterized families.
        #[arg(long, allow_hyphen_values = true)]
        y: Option<String>,
        /// Polynomial index.
        #[arg(short)]
        n: usize,
    },
    /// Apply an [m|n]-approximated amplitude operator to xⁿ and report
    /// whether the image equals the exact member.
    Approx {
        /// Family kind, as for `family`.
        #[arg(long)]
        kind: String,
        /// Rational parameter for the parameterized families.
        #[arg(long, allow_hyphen_values = true)]
        y: Option<String>,
        /// Padé orders M N.
        #[arg(long, num_args = 2, value_names = ["M", "N"])]
        pade: Vec<usize>,
        /// Polynomial index.
        #[arg(short)]
        n: usize,
    },
    /// Run a verification suite; exit 0 iff every check passes.
    Verify {
        /// One of pade, theorems, odes, monomiality, structural, umbral, all.
        #[arg(long)]
        suite: String,
    },
    /// Emit a comparison figure as CSV on standard output.
    Figure {
        /// Figure id: 1a, 1b, 2a–2d, 3a–3f, 4a, 4b, 5a, 5b.
        #[arg(long)]
        id: FigureId,
        #[arg(long, allow_hyphen_values = true)]
        xmin: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        xmax: Option<f64>,
        #[arg(long)]
        points: Option<usize>,
    },
    /// Print the even series coefficients of the [0|K]-approximated J₀.
    Bessel {
        /// Denominator order K ≥ 1.
        #[arg(long)]
        order: usize,
        /// Number of x² powers to keep.
        #[arg(long, default_value_t = 25)]
        terms: usize,
    },
}

enum Failure {
    /// Bad argument values; rendered like clap's own usage errors.
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit(self) -> ExitCode {
        match self {
            Failure::Usage(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
            Failure::Lib(e) => {
                eprintln!("error: {e}");
                match e {
                    Error::PadeDefect { .. } => ExitCode::from(3),
                    _ => ExitCode::FAILURE,
                }
            }
        }
    }
}

fn parse_rational(text: &str, flag: &str) -> Result<Rational, Failure> {
    text.parse()
        .map_err(|_| Failure::Usage(format!("{flag} expects a rational like -1 or 2/3, got `{text}`")))
}

fn required_y(y: Option<&String>, kind: &str) -> Result<Rational, Failure> {
    match y {
        Some(text) => parse_rational(text, "--y"),
        None => Err(Failure::Usage(format!("family kind `{kind}` needs --y"))),
    }
}

fn parse_amplitude(kind: &str, y: Option<&String>) -> Result<Amplitude, Failure> {
    match kind {
        "exp_neg" => Ok(Amplitude::ExpNeg),
        "exp_neg_half_square" => Ok(Amplitude::ExpNegHalfSquare),
        "euler" => Ok(Amplitude::Euler),
        "bernoulli" => Ok(Amplitude::Bernoulli),
        "trunc_exp" => Ok(Amplitude::TruncExp { y: required_y(y, kind)? }),
        "hermite2" => Ok(Amplitude::Hermite2 { y: required_y(y, kind)? }),
        other => Err(Failure::Usage(format!("unknown amplitude kind `{other}`"))),
    }
}

fn parse_family(kind: &str, y: Option<&String>) -> Result<Family, Failure> {
    match kind {
        "hermite1" => Ok(Family::Hermite1 { y: required_y(y, kind)? }),
        "hermite2" => Ok(Family::Hermite2 { y: required_y(y, kind)? }),
        "he" => Ok(Family::He),
        "trunc_exp" => Ok(Family::TruncExp { y: required_y(y, kind)? }),
        "trunc_exp2" => Ok(Family::TruncExp2 { y: required_y(y, kind)? }),
        "euler" => Ok(Family::Euler),
        "bernoulli" => Ok(Family::Bernoulli),
        "chebyshev2" => Err(Failure::Lib(Error::Unsupported(
            "chebyshev2 names a number sequence, not a polynomial family".into(),
        ))),
        other => Err(Failure::Usage(format!("unknown family kind `{other}`"))),
    }
}

fn coeff_list(coeffs: &[Rational]) -> String {
    coeffs.iter().map(Rational::to_string).collect::<Vec<_>>().join(", ")
}

fn run_pade(
    amplitude: &str,
    y: Option<&String>,
    m: usize,
    n: usize,
    json: bool,
    csv: bool,
) -> Result<(), Failure> {
    let amp = parse_amplitude(amplitude, y)?;
    let entry = pade_of_amplitude(&amp, m, n)?;
    let numer = entry.value().numer().coeffs();
    let denom = entry.value().denom().coeffs();
    if json {
        // Same rows as the CSV form, as an array of row objects.
        let cell = |c: &[Rational], k: usize| match c.get(k) {
            Some(v) => serde_json::Value::String(v.to_string()),
            None => serde_json::Value::Null,
        };
        let rows: Vec<serde_json::Value> = (0..numer.len().max(denom.len()))
            .map(|k| {
                serde_json::json!({
                    "k": k,
                    "numerator": cell(numer, k),
                    "denominator": cell(denom, k),
                })
            })
            .collect();
        println!("{}", serde_json::Value::Array(rows));
    } else if csv {
        println!("k,numerator,denominator");
        for k in 0..numer.len().max(denom.len()) {
            let cell = |c: &[Rational]| {
                c.get(k).map(Rational::to_string).unwrap_or_default()
            };
            println!("{k},{},{}", cell(numer), cell(denom));
        }
    } else {
        println!("[{m}|{n}] of amplitude {}", amp.name());
        println!("numerator: {}", coeff_list(numer));
        println!("denominator: {}", coeff_list(denom));
    }
    Ok(())
}

fn run_family(kind: &str, y: Option<&String>, n: usize) -> Result<(), Failure> {
    let family = parse_family(kind, y)?;
    let p = family.exact_polynomial(n)?;
    println!("{} index {n}", family.name());
    println!("coefficients: {}", coeff_list(p.coeffs()));
    Ok(())
}

fn run_approx(
    kind: &str,
    y: Option<&String>,
    pade: &[usize],
    index: usize,
) -> Result<(), Failure> {
    let family = parse_family(kind, y)?;
    let [m, n] = pade else {
        return Err(Failure::Usage("--pade expects exactly two orders".into()));
    };
    let image = pade_appell(&family, *m, *n, index)?;
    println!("{} index {index} via [{m}|{n}]", family.name());
    println!("coefficients: {}", coeff_list(image.value().coeffs()));
    println!("exact_equal: {}", image.matches_exact()?);
    Ok(())
}

fn run_verify(suite: &str) -> Result<ExitCode, Failure> {
    let filter = match suite {
        "all" => None,
        name => Some(
            name.parse::<Suite>()
                .map_err(|_| Failure::Usage(format!("unknown suite `{name}`")))?,
        ),
    };
    let reports = run_suite(filter);
    println!("{:<12} {:<44} status", "suite", "check");
    let mut all_passed = true;
    for report in &reports {
        let status = if report.passed() { "pass" } else { "FAIL" };
        println!("{:<12} {:<44} {status}", report.suite.name(), report.name);
        if let Some(detail) = &report.error {
            println!("{:<12} {:<44}   {detail}", "", "");
            all_passed = false;
        }
    }
    println!(
        "{} checks, {} failed",
        reports.len(),
        reports.iter().filter(|r| !r.passed()).count()
    );
    Ok(if all_passed { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn run_figure(
    id: FigureId,
    xmin: Option<f64>,
    xmax: Option<f64>,
    points: Option<usize>,
) -> Result<(), Failure> {
    let base = id.default_grid();
    let grid = GridSpec::new(
        xmin.unwrap_or_else(|| base.xmin()),
        xmax.unwrap_or_else(|| base.xmax()),
        points.unwrap_or_else(|| base.points()),
    )?;
    print!("{}", figure_csv(id, Some(&grid))?);
    Ok(())
}

fn run_bessel(order: usize, terms: usize) -> Result<(), Failure> {
    if order == 0 {
        return Err(Failure::Usage("--order must be at least 1".into()));
    }
    let series = bessel_pade_series(order, terms);
    for r in 0..=terms {
        println!("x^{}: {}", 2 * r, series.coefficient(2 * r));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Pade { amplitude, y, m, n, json, csv } => {
            run_pade(amplitude, y.as_ref(), *m, *n, *json, *csv).map(|()| ExitCode::SUCCESS)
        }
        Command::Family { kind, y, n } => {
            run_family(kind, y.as_ref(), *n).map(|()| ExitCode::SUCCESS)
        }
        Command::Approx { kind, y, pade, n } => {
            run_approx(kind, y.as_ref(), pade, *n).map(|()| ExitCode::SUCCESS)
        }
        Command::Verify { suite } => run_verify(suite),
        Command::Figure { id, xmin, xmax, points } => {
            run_figure(*id, *xmin, *xmax, *points).map(|()| ExitCode::SUCCESS)
        }
        Command::Bessel { order, terms } => {
            run_bessel(*order, *terms).map(|()| ExitCode::SUCCESS)
        }
    };
    match outcome {
        Ok(code) => code,
        Err(failure) => failure.exit(),
    }
}
