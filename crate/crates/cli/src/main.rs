//! zqft: exact computations with boson normal ordering and the
//! graph-counting series Z(L, V, λ).
//!
//! Exit codes: 0 on success, 1 on a verification/cross-check mismatch,
//! 2 on usage errors.

mod render;
mod schema;
mod verify;
mod weightspec;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use zqft_core::arith::{int, ratio, Rat};
use zqft_core::bell::{
    bell_numbers, hermite_kdf, idempotent_numbers, involution_numbers, modified_hermite_sequence,
    restricted_bell_numbers, WeightSequence, PRESET_NAMES,
};
use zqft_core::boson::{normal_order_word, v_sequence, BosonPolynomial, WordSpec};
use zqft_core::counting::{
    closed_form_series, z_series_bell, z_series_pf, ClosedForm, CountingProblem,
};

use render::Format;
use schema::{GraphRowDoc, SequenceDoc, SeriesDoc};

#[derive(Parser)]
#[command(
    name = "zqft",
    version,
    about = "Exact boson normal ordering and Feynman-type graph counting",
    after_help = "Rationals are always exact p/q strings; no output is ever a float."
)]
struct Cli {
    /// List the weight-sequence presets and exit.
    #[arg(long = "preset-list")]
    preset_list: bool,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a named sequence (bell, involution, idempotent,
    /// restricted-bell, hermite-kdf:M, modified-hermite).
    Sequence {
        name: String,
        #[arg(short = 'n', long, default_value_t = 8)]
        order: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Compute A_0..A_N by both routes, failing on any mismatch.
    Zseries {
        /// Origin multipliers L: preset name or explicit list.
        #[arg(long = "L")]
        l: String,
        /// Vertex strengths V: preset name or explicit list.
        #[arg(long = "V")]
        v: Option<String>,
        /// Derive V from a boson word instead ("ad a", "ad ad a", "a+ad").
        #[arg(long)]
        word: Option<String>,
        /// Substitution point for --word, as "z,zbar".
        #[arg(long, default_value = "1,1")]
        z: String,
        #[arg(short = 'n', long, default_value_t = 8)]
        order: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Normal-order a boson word.
    Normalorder {
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Tabulate graph isomorphism classes for n = 0..=order lines.
    /// Order 8 walks ~1.7e7 partition pairs and takes about a minute.
    Graphs {
        #[arg(long = "L")]
        l: String,
        #[arg(long = "V")]
        v: String,
        #[arg(short = 'n', long, default_value_t = 8)]
        order: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Expand a closed form of the fifth worked example.
    Closedform {
        #[arg(long = "closed-form", value_enum)]
        closed_form: ClosedFormArg,
        #[arg(short = 'n', long, default_value_t = 8)]
        order: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run the full cross-verification suite (nonzero exit on mismatch).
    Verify {
        #[arg(short = 'n', long, default_value_t = 8)]
        order: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
#[value(rename_all = "verbatim")]
enum ClosedFormArg {
    Z1,
    Z2,
    Z3,
}

impl From<ClosedFormArg> for ClosedForm {
    fn from(arg: ClosedFormArg) -> Self {
        match arg {
            ClosedFormArg::Z1 => ClosedForm::Z1,
            ClosedFormArg::Z2 => ClosedForm::Z2,
            ClosedFormArg::Z3 => ClosedForm::Z3,
        }
    }
}

#[derive(Debug)]
enum CliError {
    /// Bad input: exit 2.
    Usage(String),
    /// A cross-check tripped: exit 1.
    Verification(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.preset_list {
        for name in PRESET_NAMES {
            println!("{name}");
        }
        return ExitCode::SUCCESS;
    }
    let Some(command) = cli.command else {
        eprintln!("error: a subcommand is required (try --help)");
        return ExitCode::from(2);
    };
    match run(command) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<String, CliError> {
    match command {
        Command::Sequence {
            name,
            order,
            format,
        } => run_sequence(&name, order, format),
        Command::Zseries {
            l,
            v,
            word,
            z,
            order,
            format,
        } => run_zseries(&l, v.as_deref(), word.as_deref(), &z, order, format),
        Command::Normalorder { word, format } => run_normalorder(&word, format),
        Command::Graphs {
            l,
            v,
            order,
            format,
        } => run_graphs(&l, &v, order, format),
        Command::Closedform {
            closed_form,
            order,
            format,
        } => {
            let series = closed_form_series(closed_form.into(), order);
            Ok(render::render_series(
                &SeriesDoc::from_series(&series),
                format,
            ))
        }
        Command::Verify { order } => {
            let outcome = verify::run_verify(order);
            if outcome.failures == 0 {
                Ok(outcome.report)
            } else {
                // Report goes to stdout either way; the error drives the
                // exit code.
                print!("{}", outcome.report);
                Err(CliError::Verification(format!(
                    "{} check(s) failed",
                    outcome.failures
                )))
            }
        }
    }
}

fn run_sequence(name: &str, order: usize, format: Format) -> Result<String, CliError> {
    let values: Vec<Rat> = match name {
        "bell" => bell_numbers(order),
        "involution" => involution_numbers(order),
        "idempotent" => idempotent_numbers(order),
        "restricted-bell" => restricted_bell_numbers(order),
        // h_n(2), the sequence driving the fifth worked example.
        "modified-hermite" => modified_hermite_sequence(order, &int(2)),
        other => {
            if let Some(("hermite-kdf", param)) = other.split_once(':') {
                let m: usize = param.parse().map_err(|_| {
                    CliError::Usage(format!("`{param}` is not a valid Hermite index"))
                })?;
                if m < 1 {
                    return Err(CliError::Usage("the Hermite index M must be >= 1".into()));
                }
                // H_n^{(M)}(1, 1/M!): singleton-and-M-ton partition counts.
                let m_fact = Rat::from_integer(zqft_core::arith::factorial(m));
                hermite_kdf(m, &int(1), &(ratio(1, 1) / m_fact), order)
                    .map_err(|e| CliError::Usage(e.to_string()))?
            } else {
                return Err(CliError::Usage(format!(
                    "unknown sequence `{other}`; valid: bell, involution, idempotent, \
                     restricted-bell, hermite-kdf:M, modified-hermite"
                )));
            }
        }
    };
    let doc = SequenceDoc {
        name: name.into(),
        order,
        values: values.iter().map(|v| v.to_string()).collect(),
    };
    Ok(render::render_sequence(&doc, format))
}

fn run_zseries(
    l_spec: &str,
    v_spec: Option<&str>,
    word: Option<&str>,
    z: &str,
    order: usize,
    format: Format,
) -> Result<String, CliError> {
    let l = weightspec::parse_weight_spec(l_spec, order).map_err(CliError::Usage)?;
    let v: WeightSequence = match (v_spec, word) {
        (Some(spec), None) => {
            weightspec::parse_weight_spec(spec, order).map_err(CliError::Usage)?
        }
        (None, Some(word_text)) => {
            let w = weightspec::parse_word(word_text).map_err(CliError::Usage)?;
            let (z, z_bar) = weightspec::parse_z(z).map_err(CliError::Usage)?;
            v_sequence(&w, (&z, &z_bar), order).with_label(word_text.trim())
        }
        (Some(_), Some(_)) => {
            return Err(CliError::Usage(
                "--V and --word are mutually exclusive".into(),
            ))
        }
        (None, None) => {
            return Err(CliError::Usage(
                "zseries needs the vertex strengths: pass --V or --word".into(),
            ))
        }
    };
    let problem = CountingProblem::new(l, v, order).map_err(|e| CliError::Usage(e.to_string()))?;
    let bell_route = z_series_bell(&problem);
    let pf_route = z_series_pf(&problem);
    if bell_route != pf_route {
        // A disagreement here means a bug in one of the two routes: this
        // is a correctness tripwire, not a warning.
        return Err(CliError::Verification(
            "the Bell-product route and the product-formula route disagree".into(),
        ));
    }
    Ok(render::render_series(
        &SeriesDoc::from_series(&bell_route),
        format,
    ))
}

fn run_normalorder(word_text: &str, format: Format) -> Result<String, CliError> {
    let word = weightspec::parse_word(word_text).map_err(CliError::Usage)?;
    let poly = match &word {
        WordSpec::Word(ops) => normal_order_word(ops),
        // a + a† is already normally ordered.
        WordSpec::Sum => {
            let mut p = BosonPolynomial::monomial(1, 0, int(1));
            p.add_term(0, 1, int(1));
            p
        }
    };
    Ok(render::render_polynomial(
        &schema::polynomial_doc(&poly),
        format,
    ))
}

fn run_graphs(
    l_spec: &str,
    v_spec: &str,
    order: usize,
    format: Format,
) -> Result<String, CliError> {
    if order > zqft_core::graphs::MAX_ORACLE_LINES {
        return Err(CliError::Usage(format!(
            "graphs enumerates all partition pairs and is capped at order {}",
            zqft_core::graphs::MAX_ORACLE_LINES
        )));
    }
    let l = weightspec::parse_weight_spec(l_spec, order).map_err(CliError::Usage)?;
    let v = weightspec::parse_weight_spec(v_spec, order).map_err(CliError::Usage)?;
    let problem = CountingProblem::new(l, v, order).map_err(|e| CliError::Usage(e.to_string()))?;
    let expected = z_series_bell(&problem);
    let mut rows = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let row = graph_oracle_checked(&problem, n, &expected)?;
        rows.push(row);
    }
    Ok(render::render_graph_rows(&rows, format))
}

fn graph_oracle_checked(
    problem: &CountingProblem,
    n: usize,
    expected: &zqft_core::egf::EgfSeries,
) -> Result<GraphRowDoc, CliError> {
    let row =
        zqft_core::graphs::graph_oracle(problem, n).map_err(|e| CliError::Usage(e.to_string()))?;
    if &row.total != expected.coeff(n) {
        return Err(CliError::Verification(format!(
            "graph enumeration total at n = {n} disagrees with the Bell route"
        )));
    }
    Ok(GraphRowDoc::from_row(&row))
}
