//! Command-line front end: `compute`, `lattice` and `verify`.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use hodge_spectrum::document::{InputDocument, OutputDocument};
use hodge_spectrum::spectrum::BuildingSetChoice;
use hodge_spectrum::{fixtures, verify, Arrangement, Error, SpectrumEngine};

const EXIT_VALIDATION: u8 = 1;
const EXIT_INTERNAL: u8 = 2;
const EXIT_CHECKS_FAILED: u8 = 3;

#[derive(Parser)]
#[command(name = "hodge-spectrum", version, about = "Hodge spectrum of central hyperplane arrangements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    flags: Flags,
}

#[derive(Args)]
struct Flags {
    /// Structured JSON output (always on for `compute`).
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for the spectral evaluations (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// `maximal`, or a JSON file holding a list of closure sets.
    #[arg(long, global = true, value_name = "maximal|FILE")]
    building_set: Option<String>,
    /// Skip the consistency checks embedded in `compute` output.
    #[arg(long, global = true)]
    no_checks: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the spectrum.
    Compute { input: String },
    /// Dump the intersection lattice and the building set.
    Lattice { input: String },
    /// Run the consistency checks and report them.
    Verify { input: String },
}

enum Failure {
    Error(Error),
    ChecksFailed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::ChecksFailed) => ExitCode::from(EXIT_CHECKS_FAILED),
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_validation() { EXIT_VALIDATION } else { EXIT_INTERNAL })
        }
    }
}

/// Reads `input` as a document path, falling back to a built-in fixture.
fn load(input: &str, flags: &Flags) -> Result<(Arrangement, BuildingSetChoice), Error> {
    let (arr, mut choice) = if Path::new(input).is_file() {
        let text = std::fs::read_to_string(input)
            .map_err(|e| Error::Validation(format!("{input}: {e}")))?;
        let doc = InputDocument::parse(&text).map_err(|e| prefix(input, e))?;
        let arr = doc.to_arrangement().map_err(|e| prefix(input, e))?;
        (arr, doc.building_set.to_choice()?)
    } else {
        (fixtures::by_name(input)?, BuildingSetChoice::Maximal)
    };
    match flags.building_set.as_deref() {
        None => {}
        Some("maximal") => choice = BuildingSetChoice::Maximal,
        Some(path) => {
            let path = PathBuf::from(path);
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::Validation(format!("{}: {e}", path.display())))?;
            let closures: Vec<Vec<usize>> = serde_json::from_str(&text).map_err(|e| {
                Error::Validation(format!("{}: expected a list of closure sets: {e}", path.display()))
            })?;
            choice = BuildingSetChoice::Closures(closures);
        }
    }
    Ok((arr, choice))
}

fn prefix(input: &str, e: Error) -> Error {
    match e {
        Error::Validation(m) => Error::Validation(format!("{input}: {m}")),
        other => other,
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let flags = &cli.flags;
    match &cli.command {
        Command::Compute { input } => {
            let (arr, choice) = load(input, flags)?;
            let engine = SpectrumEngine::new(&arr, &choice)?;
            let result = engine.spectrum(flags.jobs)?;
            let checks = if flags.no_checks { None } else { Some(verify::run(&engine, flags.jobs)?) };
            let failed = checks.as_ref().is_some_and(|r| !r.passed());
            println!("{}", OutputDocument::new(&result, checks).to_json());
            if failed {
                return Err(Failure::ChecksFailed);
            }
        }
        Command::Lattice { input } => {
            let (arr, choice) = load(input, flags)?;
            let engine = SpectrumEngine::new(&arr, &choice)?;
            if flags.json {
                println!("{}", serde_json::to_string_pretty(&lattice_json(&engine)?).unwrap());
            } else {
                print!("{}", lattice_text(&engine)?);
            }
        }
        Command::Verify { input } => {
            let (arr, choice) = load(input, flags)?;
            let engine = SpectrumEngine::new(&arr, &choice)?;
            let report = verify::run(&engine, flags.jobs)?;
            let result = engine.spectrum(flags.jobs)?;
            let doc = OutputDocument::new(&result, Some(report.clone()));
            if flags.json {
                println!("{}", doc.to_json());
            } else {
                println!("Sp = {}", doc.polynomial());
                for w in &doc.warnings {
                    println!("warning: {w}");
                }
                print!("{report}");
            }
            if !report.passed() {
                return Err(Failure::ChecksFailed);
            }
        }
    }
    Ok(())
}

/// Covering relations `V ⊂ W` with `dim W = dim V + 1`.
fn covers(engine: &SpectrumEngine) -> Vec<(usize, usize)> {
    let lat = engine.lattice();
    let mut out = Vec::new();
    for v in 0..lat.len() {
        for w in 0..lat.len() {
            if lat.flat(w).dim == lat.flat(v).dim + 1 && lat.is_subspace(v, w) {
                out.push((v, w));
            }
        }
    }
    out
}

fn lattice_json(engine: &SpectrumEngine) -> Result<serde_json::Value, Error> {
    let lat = engine.lattice();
    let bs = engine.building_set();
    let flats: Vec<_> = lat
        .flats()
        .iter()
        .enumerate()
        .map(|(i, f)| {
            json!({"index": i, "closure": f.closure, "dim": f.dim, "codim": f.codim, "mobius": lat.mobius(i)})
        })
        .collect();
    let building: Vec<_> = bs
        .elements()
        .iter()
        .enumerate()
        .map(|(i, e)| json!({"index": i, "flat": e.flat, "dim": e.dim, "codim": e.codim}))
        .collect();
    Ok(json!({
        "n": lat.n(),
        "degree": engine.arrangement().degree(),
        "essential": lat.is_essential(),
        "flats": flats,
        "covers": covers(engine),
        "building_set": building,
        "quotient_ranks": engine.ideal().quotient_ranks(),
        "poincare_polynomial": lat.poincare_polynomial(),
        "euler_characteristic": lat.euler_projective_complement()?,
    }))
}

fn lattice_text(engine: &SpectrumEngine) -> Result<String, Error> {
    use std::fmt::Write;
    let lat = engine.lattice();
    let bs = engine.building_set();
    let mut s = String::new();
    let ess = if lat.is_essential() { "essential" } else { "not essential" };
    writeln!(s, "n = {}, d = {}, {ess}", lat.n(), engine.arrangement().degree()).unwrap();
    writeln!(s, "flats ({}):", lat.len()).unwrap();
    for (i, f) in lat.flats().iter().enumerate() {
        writeln!(
            s,
            "  #{i:<3} dim {} codim {} mu {:>3}  closure {:?}",
            f.dim,
            f.codim,
            lat.mobius(i),
            f.closure
        )
        .unwrap();
    }
    writeln!(s, "covers (V < W):").unwrap();
    for (v, w) in covers(engine) {
        writeln!(s, "  #{v} < #{w}").unwrap();
    }
    let names = bs.variable_names(lat);
    writeln!(s, "building set ({}):", bs.len()).unwrap();
    for (i, e) in bs.elements().iter().enumerate() {
        writeln!(s, "  {i:<3} {:<14} dim {}", names[i], e.dim).unwrap();
    }
    writeln!(s, "quotient ranks: {:?}", engine.ideal().quotient_ranks()).unwrap();
    writeln!(s, "poincare polynomial: {:?}", lat.poincare_polynomial()).unwrap();
    writeln!(s, "euler characteristic of the complement: {}", lat.euler_projective_complement()?)
        .unwrap();
    Ok(s)
}
