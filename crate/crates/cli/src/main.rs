use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use drd_cli::io::{load_text, parse_graphs};
use drd_cli::rank::rank_extremal;
use drd_cli::suites::{run_suite, SUITE_NAMES};
use drd_core::families::{build_cycle_pendant, build_family};
use drd_core::{
    effective_resistance, emit_graph6, enumerate_cacti, invariant_report, resistance_matrix,
    CactusParams, FamilyId,
};

#[derive(Parser)]
#[command(
    name = "drd",
    about = "Exact resistance-distance invariants on cactus graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the invariant report for each input graph as JSON lines.
    Invariants {
        /// Input file of graph6 lines or a whitespace edge list; "-" reads stdin.
        input: String,
    },
    /// Effective resistances of a single input graph.
    Resistance {
        /// Input file (graph6 or edge list); "-" reads stdin.
        input: String,
        /// Print the resistance between one vertex pair.
        #[arg(long, num_args = 2, value_names = ["U", "V"], conflicts_with = "all")]
        pair: Option<Vec<usize>>,
        /// Print the full matrix as JSON.
        #[arg(long)]
        all: bool,
    },
    /// Emit a named extremal family member as graph6.
    Construct {
        /// One of: g0, g3, g4, g5, g8, g10, cycle-pendant.
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        /// Cycle length for the cycle-pendant fragment.
        #[arg(long)]
        h: Option<usize>,
    },
    /// Enumerate all cacti with n vertices and t cycles, one graph6 line each.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        /// Write the lines to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also print a JSON count summary to stdout.
        #[arg(long)]
        manifest: bool,
    },
    /// Rank the cacti in a cell by degree resistance distance.
    Rank {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        /// How many leaders to print.
        #[arg(long, default_value_t = 3)]
        top: usize,
        /// CSV output instead of JSON lines.
        #[arg(long)]
        csv: bool,
    },
    /// Run a named verification suite, or "all".
    Verify {
        #[arg(long)]
        suite: String,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Invariants { input } => cmd_invariants(&input),
        Command::Resistance { input, pair, all } => cmd_resistance(&input, pair, all),
        Command::Construct { family, n, t, h } => cmd_construct(&family, n, t, h),
        Command::Enumerate {
            n,
            t,
            out,
            manifest,
        } => cmd_enumerate(n, t, out, manifest),
        Command::Rank { n, t, top, csv } => cmd_rank(n, t, top, csv),
        Command::Verify { suite } => cmd_verify(&suite),
    }
}

fn cmd_invariants(input: &str) -> Result<ExitCode, String> {
    let text = load_text(input).map_err(|e| format!("{input}: {e}"))?;
    let mut failed = false;
    for (line, parsed) in parse_graphs(&text) {
        match parsed.and_then(|g| invariant_report(&g).map_err(|e| e.to_string())) {
            Ok(report) => {
                println!(
                    "{}",
                    serde_json::to_string(&report).expect("report serializes")
                )
            }
            Err(e) => {
                eprintln!("line {line}: {e}");
                failed = true;
            }
        }
    }
    Ok(if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_resistance(input: &str, pair: Option<Vec<usize>>, all: bool) -> Result<ExitCode, String> {
    let text = load_text(input).map_err(|e| format!("{input}: {e}"))?;
    let graphs = parse_graphs(&text);
    if graphs.len() != 1 {
        return Err(format!(
            "expected exactly one graph, found {}",
            graphs.len()
        ));
    }
    let (line, parsed) = graphs.into_iter().next().unwrap();
    let g = parsed.map_err(|e| format!("line {line}: {e}"))?;
    match (pair, all) {
        (Some(uv), false) => {
            let r = effective_resistance(&g, uv[0], uv[1]).map_err(|e| e.to_string())?;
            println!("{r}");
            Ok(ExitCode::SUCCESS)
        }
        (None, true) => {
            let rm = resistance_matrix(&g).map_err(|e| e.to_string())?;
            println!("{}", serde_json::to_string(&rm).expect("matrix serializes"));
            Ok(ExitCode::SUCCESS)
        }
        _ => {
            eprintln!("error: pass exactly one of --pair U V or --all");
            Ok(ExitCode::from(2))
        }
    }
}

fn parse_family(name: &str) -> Option<FamilyId> {
    Some(match name {
        "g0" => FamilyId::G0,
        "g3" => FamilyId::G3,
        "g4" => FamilyId::G4,
        "g5" => FamilyId::G5,
        "g8" => FamilyId::G8,
        "g10" => FamilyId::G10,
        "cycle-pendant" => FamilyId::CyclePendant,
        _ => return None,
    })
}

fn cmd_construct(
    family: &str,
    n: Option<usize>,
    t: Option<usize>,
    h: Option<usize>,
) -> Result<ExitCode, String> {
    let Some(id) = parse_family(family) else {
        eprintln!(
            "error: unknown family {family:?} (expected g0, g3, g4, g5, g8, g10, or cycle-pendant)"
        );
        return Ok(ExitCode::from(2));
    };
    let built = if id == FamilyId::CyclePendant {
        let Some(h) = h else {
            eprintln!("error: cycle-pendant takes --h");
            return Ok(ExitCode::from(2));
        };
        if n.is_some_and(|n| n != h) || t.is_some_and(|t| t != 1) {
            eprintln!("error: cycle-pendant on h vertices has n = h and t = 1");
            return Ok(ExitCode::from(2));
        }
        build_cycle_pendant(h)
    } else {
        let (Some(n), Some(t)) = (n, t) else {
            eprintln!("error: {family} takes --n and --t");
            return Ok(ExitCode::from(2));
        };
        if h.is_some() {
            eprintln!("error: --h only applies to cycle-pendant");
            return Ok(ExitCode::from(2));
        }
        build_family(id, n, t)
    };
    match built {
        Ok(g) => {
            if id.is_inferred() {
                eprintln!(
                    "note: the {} layout is reconstructed from its difference formulas",
                    id.label()
                );
            }
            println!("{}", emit_graph6(&g).map_err(|e| e.to_string())?);
            Ok(ExitCode::SUCCESS)
        }
        Err(e) => {
            eprintln!("error: {e}");
            Ok(ExitCode::from(2))
        }
    }
}

fn cmd_enumerate(
    n: usize,
    t: usize,
    out: Option<PathBuf>,
    manifest: bool,
) -> Result<ExitCode, String> {
    if CactusParams::new(n, t).is_err() {
        eprintln!("error: no cactus has {n} vertices and {t} cycles");
        return Ok(ExitCode::from(2));
    }
    let corpus = enumerate_cacti(n, t).map_err(|e| e.to_string())?;
    let mut lines = String::new();
    for g in corpus.graphs() {
        lines.push_str(&emit_graph6(g).map_err(|e| e.to_string())?);
        lines.push('\n');
    }
    match out {
        Some(path) => {
            std::fs::write(&path, lines).map_err(|e| format!("{}: {e}", path.display()))?
        }
        None => print!("{lines}"),
    }
    if manifest {
        println!("{{\"n\":{n},\"t\":{t},\"count\":{}}}", corpus.len());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_rank(n: usize, t: usize, top: usize, csv: bool) -> Result<ExitCode, String> {
    if CactusParams::new(n, t).is_err() {
        eprintln!("error: no cactus has {n} vertices and {t} cycles");
        return Ok(ExitCode::from(2));
    }
    // Fetch one extra entry so a tie straddling the cutoff is visible.
    let mut ranked = rank_extremal(n, t, top + 1).map_err(|e| e.to_string())?;
    for w in ranked.windows(2).take(top) {
        if w[0].dr == w[1].dr {
            eprintln!(
                "warning: ranks {} and {} share D_R = {}; order among ties follows the certificate",
                w[0].rank, w[1].rank, w[0].dr
            );
        }
    }
    ranked.truncate(top);
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    if csv {
        writeln!(out, "rank,graph6,certificate,dr,family_match").map_err(|e| e.to_string())?;
        for e in &ranked {
            writeln!(
                out,
                "{},{},{},{},{}",
                e.rank,
                e.graph6,
                e.certificate,
                e.dr,
                e.family_match.map(FamilyId::label).unwrap_or("")
            )
            .map_err(|e| e.to_string())?;
        }
    } else {
        for e in &ranked {
            writeln!(
                out,
                "{}",
                serde_json::to_string(e).expect("entry serializes")
            )
            .map_err(|e| e.to_string())?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(suite: &str) -> Result<ExitCode, String> {
    let names: Vec<&str> = if suite == "all" {
        SUITE_NAMES.to_vec()
    } else if SUITE_NAMES.contains(&suite) {
        vec![suite]
    } else {
        eprintln!(
            "error: unknown suite {suite:?} (expected all or one of {})",
            SUITE_NAMES.join(", ")
        );
        return Ok(ExitCode::from(2));
    };
    let mut ok = true;
    for name in names {
        let outcome = run_suite(name).expect("names are validated above");
        print!("{}", outcome.render());
        ok &= outcome.overall();
    }
    println!("verify: {}", if ok { "PASS" } else { "FAIL" });
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}
