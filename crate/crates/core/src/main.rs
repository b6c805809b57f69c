use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use bidouble::geometry::enumerate_triples;
use bidouble::numerics::FeasibilityVerdict;
use bidouble::query::{
    classify_all, lattice_search, parse_degree, parse_triples, render_csv, render_json_lines,
    render_table, render_text, to_json, LatticeSearchReport,
};
use bidouble::{
    classify, p1xp1_line_search, preset_lattice, rank1_rho1_search, validate_triple, Error,
    IntersectionLattice, Preset,
};

/// Boxes larger than this are refused unless an explicit --bound shrinks them.
const MAX_SEARCH_POINTS: f64 = 5e8;

#[derive(Parser)]
#[command(
    name = "bidouble",
    version,
    about = "Ulrich bundle classification for bidouble planes"
)]
struct Cli {
    /// Output format (default: text, or csv for batch).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a single triple of branch degrees.
    Classify {
        #[arg(value_parser = parse_degree)]
        n1: i64,
        #[arg(value_parser = parse_degree)]
        n2: i64,
        #[arg(value_parser = parse_degree)]
        n3: i64,
    },
    /// Classification table for a file of triples or all triples up to a degree.
    #[command(group(ArgGroup::new("source").required(true).args(["input", "max_degree"])))]
    Batch {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_parser = parse_degree)]
        max_degree: Option<i64>,
    },
    /// Run one of the feasibility searches and print its trace.
    Search {
        #[command(subcommand)]
        kind: SearchKind,
    },
    /// List lattice presets with their Gram matrices.
    Presets {
        #[arg(long)]
        preset: Option<String>,
    },
}

#[derive(Subcommand)]
enum SearchKind {
    /// Line-bundle elimination on an even cover with Picard number one.
    Rho1 {
        #[arg(long, num_args = 3, value_parser = parse_degree, required = true)]
        triple: Vec<i64>,
    },
    /// Line-bundle search on the (0,2,2n) cover via P1 x P1.
    P1xp1 {
        #[arg(long, value_parser = parse_degree)]
        n: i64,
        #[arg(long, value_parser = parse_degree)]
        bound: Option<i64>,
    },
    /// Exhaustive class search in a lattice preset.
    Lattice {
        #[arg(long)]
        preset: String,
        #[arg(long, value_parser = parse_degree)]
        bound: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        degree: i64,
        #[arg(long, allow_hyphen_values = true)]
        selfint: i64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn emit(s: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(s.as_bytes());
}

fn emit_json<T: Serialize>(value: &T) -> bidouble::Result<()> {
    emit(&to_json(value, true)?);
    emit("\n");
    Ok(())
}

fn run(cli: Cli) -> bidouble::Result<u8> {
    match cli.command {
        Command::Classify { n1, n2, n3 } => {
            let t = validate_triple(n1, n2, n3)?;
            let q = classify(&t)?;
            match cli.format.unwrap_or(Format::Text) {
                Format::Json => emit_json(&q)?,
                Format::Csv => emit(&render_csv(&[q])),
                Format::Text => emit(&render_text(&q)),
            }
            Ok(0)
        }
        Command::Batch { input, max_degree } => {
            let mut skipped = 0usize;
            let triples = match (input, max_degree) {
                (Some(path), _) => {
                    let content = std::fs::read_to_string(&path).map_err(|e| {
                        Error::Domain(format!("cannot read {}: {e}", path.display()))
                    })?;
                    let mut ts = Vec::new();
                    for parsed in parse_triples(&content) {
                        match parsed.result {
                            Ok(t) => ts.push(t),
                            Err(e) => {
                                skipped += 1;
                                eprintln!("{}:{}: skipped: {e}", path.display(), parsed.line);
                            }
                        }
                    }
                    ts
                }
                (None, Some(n)) => enumerate_triples(n),
                (None, None) => unreachable!("clap enforces a source"),
            };
            let results = classify_all(&triples)?;
            match cli.format.unwrap_or(Format::Csv) {
                Format::Csv => emit(&render_csv(&results)),
                Format::Json => emit(&render_json_lines(&results)?),
                Format::Text => emit(&render_table(&results)),
            }
            if skipped > 0 {
                eprintln!("{skipped} invalid row(s) skipped");
                return Ok(2);
            }
            Ok(0)
        }
        Command::Search { kind } => {
            let format = cli.format.unwrap_or(Format::Text);
            match kind {
                SearchKind::Rho1 { triple } => {
                    let t = validate_triple(triple[0], triple[1], triple[2])?;
                    print_verdict(&rank1_rho1_search(&t)?, format)
                }
                SearchKind::P1xp1 { n, bound } => {
                    print_verdict(&p1xp1_line_search(n, bound)?, format)
                }
                SearchKind::Lattice {
                    preset,
                    bound,
                    degree,
                    selfint,
                } => {
                    let lat = preset_lattice(preset.parse::<Preset>()?)?;
                    let bound = bound.unwrap_or(10 * (degree.abs() + 1));
                    let points = ((2 * bound + 1) as f64).powi(lat.rank() as i32);
                    if points > MAX_SEARCH_POINTS {
                        return Err(Error::Domain(format!(
                            "search box [-{bound},{bound}]^{} has {points:.0} points; pass a smaller --bound",
                            lat.rank()
                        )));
                    }
                    print_lattice_report(&lattice_search(&lat, bound, degree, selfint)?, format)
                }
            }
        }
        Command::Presets { preset } => {
            let lattices: Vec<IntersectionLattice> = match preset {
                Some(name) => vec![preset_lattice(name.parse::<Preset>()?)?],
                None => [Preset::P1xP1, Preset::DelPezzo(4), Preset::K3_024]
                    .into_iter()
                    .map(preset_lattice)
                    .collect::<bidouble::Result<_>>()?,
            };
            match cli.format.unwrap_or(Format::Text) {
                Format::Json => emit_json(&lattices)?,
                _ => {
                    for lat in &lattices {
                        emit(&render_lattice(lat));
                    }
                    emit("parametrized: delpezzoN (N in 1..=9), rank1_bidouble(n1,n2,n3) (even triples)\n");
                }
            }
            Ok(0)
        }
    }
}

fn print_verdict(v: &FeasibilityVerdict, format: Format) -> bidouble::Result<u8> {
    if format == Format::Json {
        emit_json(v)?;
        return Ok(0);
    }
    let mut s = format!(
        "status: {}\n",
        serde_json::to_value(v.status).unwrap().as_str().unwrap()
    );
    for step in &v.trace {
        s.push_str(&format!("  {step}\n"));
    }
    if v.candidates.is_empty() {
        s.push_str("candidates: none\n");
    } else {
        for c in &v.candidates {
            s.push_str(&format!(
                "candidate: c1 = {}, c2 = {}, rank {}\n",
                c.c1, c.c2, c.rank
            ));
        }
    }
    emit(&s);
    Ok(0)
}

fn print_lattice_report(r: &LatticeSearchReport, format: Format) -> bidouble::Result<u8> {
    if format == Format::Json {
        emit_json(r)?;
        return Ok(0);
    }
    let mut s = format!("preset: {}\n", r.preset);
    for step in &r.trace {
        s.push_str(&format!("  {step}\n"));
    }
    for hit in &r.candidates {
        s.push_str(&format!("candidate: {} genus {}\n", hit.class, hit.genus));
    }
    emit(&s);
    Ok(0)
}

fn render_lattice(lat: &IntersectionLattice) -> String {
    let mut s = format!("{} (rank {})\n", lat.name, lat.rank());
    s.push_str(&format!("  basis: {}\n", lat.basis_labels.join(" ")));
    for (label, row) in lat.basis_labels.iter().zip(&lat.gram) {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
        s.push_str(&format!("  {label:>4} [{}]\n", cells.join(" ")));
    }
    s.push_str(&format!("  H = {}, K = {}", lat.h, lat.k));
    if let Some(chi) = lat.chi {
        s.push_str(&format!(", χ = {chi}"));
    }
    s.push('\n');
    s
}
