//! `redei`: tables, constructions and walk-based verification of Redei permutations.

mod document;
mod render;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use redei::intmod::{factorize, gcd, is_prime};
use redei::redei::fixed_point_formula;
use redei::structure::{build_table, construct, count_md, odd_primes_with_cycles};
use redei::{AdmissibleQuery, Chi, Error, FieldElement, FieldSpec, ProjPoint, RedeiSpec};
use serde::Serialize;

use document::{
    ConstructDoc, CyclesDoc, FieldDoc, FullTableDoc, Section, StructureMap, TableDoc, VerifyDoc,
};

const MODULUS_ENV: &str = "REDEI_MODULUS_OVERRIDE";

#[derive(Parser)]
#[command(
    name = "redei",
    version,
    about = "Redei permutations of P^1(F_q) with 1- and j-cycles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Existence, counts and every exponent n, per cycle length j.
    Table {
        #[arg(long)]
        q: u64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_chi)]
        chi: Chi,
        /// Cycle length (2, 4 or an odd prime); all lengths when omitted.
        #[arg(long)]
        j: Option<u64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Exponents n for one admissible divisor d.
    Construct {
        #[arg(long)]
        q: u64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_chi)]
        chi: Chi,
        #[arg(long)]
        j: u64,
        #[arg(long)]
        d: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Walk R_{n,a} over P^1(F_q) and compare with the predicted cycle structure.
    Verify {
        #[arg(long)]
        q: u64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_chi)]
        chi: Chi,
        #[arg(long)]
        n: u64,
        /// Parameter a as comma-separated coefficients, lowest degree first.
        #[arg(long)]
        a: Option<String>,
        #[arg(long)]
        list_cycles: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// The modulus polynomial used for F_q.
    Field {
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Every cycle of R_{n,a}.
    Cycles {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_chi)]
        chi: Option<Chi>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn parse_chi(s: &str) -> Result<Chi, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Failure classes, mapped to exit codes 1, 2 and 3.
enum Failure {
    Invalid(String),
    Absent(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Inadmissible(_) => Failure::Absent(e.to_string()),
            Error::Consistency(_) | Error::Integrity(_) => Failure::Check(e.to_string()),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Check(format!("csv output: {e}"))
    }
}

/// What a command printed and whether it found what was asked for.
struct Outcome {
    text: String,
    code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}

fn json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

fn render<T: Serialize>(
    doc: &T,
    format: Format,
    text: impl FnOnce(&T) -> String,
    csv: impl FnOnce(&T) -> csv::Result<String>,
) -> Result<String, Failure> {
    Ok(match format {
        Format::Text => text(doc),
        Format::Json => json(doc),
        Format::Csv => csv(doc)?,
    })
}

/// `F_q`, using the modulus from the environment when it is set.
fn field(q: u64) -> Result<FieldSpec, Failure> {
    if q < 3 || q % 2 == 0 {
        return Err(Failure::Invalid(format!(
            "q = {q} must be an odd prime power"
        )));
    }
    let modulus = match std::env::var(MODULUS_ENV) {
        Ok(s) if !s.trim().is_empty() => Some(
            s.split(',')
                .map(|c| c.trim().parse::<u64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| {
                    Failure::Invalid(format!("{MODULUS_ENV}={s:?} is not a coefficient list"))
                })?,
        ),
        _ => None,
    };
    Ok(FieldSpec::with_order(q, modulus)?)
}

fn next_prime(after: u64) -> u64 {
    (after + 1..)
        .find(|&p| is_prime(p))
        .expect("primes are unbounded")
}

fn cmd_table(q: u64, chi: Chi, j: Option<u64>, format: Format) -> Result<Outcome, Failure> {
    let f = field(q)?;
    let modulus = f.modulus_string();
    if let Some(j) = j {
        let report = build_table(q, chi, j)?;
        let doc = TableDoc::new(q, chi.sign(), modulus, Section::from(&report));
        let text = render(&doc, format, render::table_text, render::table_csv)?;
        let code = if doc.exists { 0 } else { 2 };
        return Ok(Outcome { text, code });
    }
    let qminus = factorize(chi.q_minus(q))?;
    let primes = odd_primes_with_cycles(&qminus);
    let largest = primes.last().copied().unwrap_or(3);
    let mut lengths = vec![2, 3, 4];
    lengths.extend((5..=largest).filter(|&p| is_prime(p)));
    let sections = lengths
        .into_iter()
        .map(|j| build_table(q, chi, j).map(|r| Section::from(&r)))
        .collect::<Result<Vec<_>, _>>()?;
    let doc = FullTableDoc {
        q,
        chi: chi.sign(),
        qminus: qminus.value(),
        qminus_factorization: qminus.to_string(),
        field_modulus: modulus,
        sections,
        no_prime_from: next_prime(largest.max(4)),
    };
    Ok(Outcome::ok(render(
        &doc,
        format,
        render::full_table_text,
        render::full_table_csv,
    )?))
}

fn cmd_construct(q: u64, chi: Chi, j: u64, d: u64, format: Format) -> Result<Outcome, Failure> {
    let f = field(q)?;
    let m = chi.q_minus(q);
    if j >= m {
        return Err(Failure::Absent(format!(
            "no {j}-cycles fit in q - chi = {m}"
        )));
    }
    let query = AdmissibleQuery::for_order(q, chi, j)?;
    let n = construct(&query, d)?;
    let fixed_points = (d as i64 + chi.sign() + 1) as u64;
    let doc = ConstructDoc {
        q,
        chi: chi.sign(),
        j,
        d,
        md: count_md(&query, d)?,
        n,
        fixed_points,
        j_cycles: (q + 1 - fixed_points) / j,
        field_modulus: f.modulus_string(),
    };
    Ok(Outcome::ok(render(
        &doc,
        format,
        render::construct_text,
        render::construct_csv,
    )?))
}

/// The given parameter, or the first element of the requested character.
fn parameter(
    f: &FieldSpec,
    a: Option<&str>,
    chi: Option<Chi>,
) -> Result<(FieldElement, Chi), Failure> {
    let Some(text) = a else {
        let chi = chi.ok_or_else(|| Failure::Invalid("give --a or --chi".into()))?;
        return Ok((f.first_with_character(chi), chi));
    };
    let a = f.parse_element(text)?;
    let actual = f
        .quadratic_character(&a)
        .map_err(|_| Failure::Invalid("the parameter a must be nonzero".into()))?;
    if let Some(chi) = chi {
        if chi != actual {
            return Err(Failure::Invalid(format!("chi(a) = {actual}, not {chi}")));
        }
    }
    Ok((a, actual))
}

fn listing(f: &FieldSpec, cycles: &[Vec<ProjPoint>]) -> Vec<Vec<String>> {
    cycles
        .iter()
        .map(|c| c.iter().map(|p| f.format_point(p)).collect())
        .collect()
}

fn cmd_verify(
    q: u64,
    chi: Chi,
    n: u64,
    a: Option<&str>,
    list_cycles: bool,
    format: Format,
) -> Result<Outcome, Failure> {
    let f = field(q)?;
    let (a, chi) = parameter(&f, a, Some(chi))?;
    let spec = RedeiSpec::new(&f, a, n)?;
    let m = spec.modulus();
    if !spec.is_permutation() {
        return Err(Failure::Invalid(format!(
            "R_{{{n},a}} is not a permutation: gcd({n}, {m}) = {}",
            gcd(n % m, m)
        )));
    }
    let empirical = spec.empirical_cycles()?;
    let theoretical = spec.theoretical_cycles()?;
    let formula = fixed_point_formula(spec.n(), m, chi);
    let pass = empirical == theoretical && empirical.count(1) == formula;
    let doc = VerifyDoc {
        q,
        chi: chi.sign(),
        n: spec.n(),
        a: f.format_element(&a),
        modulus: m,
        field_modulus: f.modulus_string(),
        empirical: StructureMap::from(&empirical),
        theoretical: StructureMap::from(&theoretical),
        fixed_points: empirical.count(1),
        fixed_point_formula: formula,
        pass,
        cycles: if list_cycles {
            Some(listing(&f, &spec.cycle_listing()?))
        } else {
            None
        },
    };
    let text = render(&doc, format, render::verify_text, render::verify_csv)?;
    Ok(Outcome {
        text,
        code: if pass { 0 } else { 3 },
    })
}

fn cmd_field(q: u64, format: Format) -> Result<Outcome, Failure> {
    let f = field(q)?;
    let doc = FieldDoc {
        q,
        p: f.characteristic(),
        k: f.degree(),
        modulus: f.modulus().to_vec(),
        field_modulus: f.modulus_string(),
    };
    Ok(Outcome::ok(render(
        &doc,
        format,
        render::field_text,
        render::field_csv,
    )?))
}

fn cmd_cycles(
    q: u64,
    n: u64,
    a: Option<&str>,
    chi: Option<Chi>,
    format: Format,
) -> Result<Outcome, Failure> {
    let f = field(q)?;
    let (a, chi) = parameter(&f, a, chi)?;
    let spec = RedeiSpec::new(&f, a, n)?;
    let permutation = spec.is_permutation();
    let (structure, cycles, map) = if permutation {
        let cycles = spec.cycle_listing()?;
        (
            Some(StructureMap::from(&spec.empirical_cycles()?)),
            Some(listing(&f, &cycles)),
            None,
        )
    } else {
        let map = f
            .proj_points()
            .map(|p| (f.format_point(&p), f.format_point(&spec.eval(&p))))
            .collect();
        (None, None, Some(map))
    };
    let doc = CyclesDoc {
        q,
        chi: chi.sign(),
        n: spec.n(),
        a: f.format_element(&a),
        field_modulus: f.modulus_string(),
        permutation,
        structure,
        cycles,
        map,
    };
    Ok(Outcome::ok(render(
        &doc,
        format,
        render::cycles_text,
        render::cycles_csv,
    )?))
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    match cli.command {
        Command::Table { q, chi, j, format } => cmd_table(q, chi, j, format),
        Command::Construct {
            q,
            chi,
            j,
            d,
            format,
        } => cmd_construct(q, chi, j, d, format),
        Command::Verify {
            q,
            chi,
            n,
            a,
            list_cycles,
            format,
        } => cmd_verify(q, chi, n, a.as_deref(), list_cycles, format),
        Command::Field { q, format } => cmd_field(q, format),
        Command::Cycles {
            q,
            n,
            a,
            chi,
            format,
        } => cmd_cycles(q, n, a.as_deref(), chi, format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Absent(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("internal check failed: {msg}");
            ExitCode::from(3)
        }
    }
}
