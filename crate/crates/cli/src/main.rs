//! `fpforge`: build complexes and covers, certify homology, emit
//! presentations and decide finiteness properties.

mod commands;
mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use fpforge_core::homology::RingSpec;
use fpforge_core::sigma::FpTarget;

const COMPLEX_FORMAT: &str = "\
Complex files list vertices and facets:
  {\"vertices\": [0, 1, 2], \"facets\": [[0, 1, 2]]}";

const COVER_FORMAT: &str = "\
Cover files name a base (inline or a path relative to the cover file), a
degree, and one-based permutation images on directed edges; unlisted edges
carry the identity:
  {\"base\": \"square.json\", \"degree\": 2,
   \"voltages\": [{\"edge\": [3, 0], \"images\": [2, 1]}]}";

const PRESENT_FORMAT: &str = "\
Spread files map heights to closed loops (first vertex = last):
  {\"2\": [[0, 1, 2, 0]], \"-1\": [[0, 2, 1, 0]]}
Family files give α and β loops and a height window:
  {\"alpha\": [[0, 1, 2, 0]], \"beta\": [[0, 2, 1, 0]], \"min\": -2, \"max\": 2}
Presentations are written as text unless the output ends in .json:
  gen e0_1 e0_2 e1_2
  rel e0_1 e1_2 e0_2'  # triangle";

const SIGMA_FORMAT: &str = "\
Sigma specs hold a registry (inline list or path), a base entry, exceptions
as [height, id] pairs and one tail per sign:
  {\"registry\": \"registry.json\", \"base_id\": \"L\",
   \"exceptions\": [[3, \"C\"]],
   \"positive_tail\": {\"recurrent\": [\"L5\"]},
   \"negative_tail\": {\"constant\": \"U\"}}
Other tails: {\"prime_family\": {\"members\": [[3, \"L3\"]], \"otherwise\": \"U\"}}
and {\"support_formula\": {\"constants\": [4, 5], \"assignments\": [[1, \"L3\"]],
\"default\": \"U\"}}. Registry entries record reduced homology per ring:
  {\"id\": \"L5\", \"kind\": {\"declared\": {\"note\": \"hand computation\"}},
   \"homology\": [{\"ring\": \"Z\", \"degrees\": [{\"rank\": 0, \"torsion\": []},
                  {\"rank\": 0, \"torsion\": [5]}], \"complete\": true}],
   \"simply_connected\": false, \"quotient_is_finite\": true, \"degree\": 5}";

const GRAPH_FORMAT: &str = "\
Graph files are edge lists, with isolated vertices optionally listed:
  {\"edges\": [[0, 1], [1, 2], [2, 0]], \"vertices\": [7]}";

#[derive(Parser)]
#[command(name = "fpforge", version, about = "Flag complexes, covers, homology and finiteness decisions")]
#[command(after_help = "Exit status: 0 on success, 1 when the input violates a mathematical \
precondition, 2 on unreadable files or bad flags. Reports go to standard output as JSON.")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Spherical double S(L) of a complex.
    #[command(after_help = COMPLEX_FORMAT)]
    Double {
        #[arg(long)]
        complex: PathBuf,
        /// Where to write S(L); vertex 2i is (i,+), 2i+1 is (i,-).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a cover from voltages, verify it and certify its homology.
    #[command(after_help = COVER_FORMAT)]
    Cover(CoverArgs),
    /// Reduced homology of a complex.
    #[command(after_help = COMPLEX_FORMAT)]
    Homology {
        #[arg(long)]
        complex: PathBuf,
        /// Z, Q or F<p>; repeatable. Defaults to Z and Q.
        #[arg(long = "ring")]
        rings: Vec<RingSpec>,
    },
    /// Presentation of the branched-cover group of a complex.
    #[command(after_help = PRESENT_FORMAT)]
    Present(PresentArgs),
    /// Decide FP_k(R), FP(R) or finite presentability for a sigma spec.
    #[command(after_help = SIGMA_FORMAT)]
    Decide {
        #[arg(long)]
        sigma: PathBuf,
        /// Z, Q or F<p>.
        #[arg(long)]
        ring: Option<RingSpec>,
        /// A degree, or FP for every degree.
        #[arg(long)]
        k: Option<FpTarget>,
        /// Decide finite presentability instead.
        #[arg(long, conflicts_with_all = ["ring", "k"])]
        finitely_presented: bool,
    },
    /// Build sigma specs and growth constants.
    #[command(subcommand, after_help = SIGMA_FORMAT)]
    Sigma(SigmaCommand),
    /// Taut loop length spectrum of a graph.
    #[command(after_help = GRAPH_FORMAT)]
    Spectrum {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 12)]
        lmax: usize,
        /// Coset rows allowed per enumeration.
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Whether two scanned spectra are k-related.
    Related {
        /// Comma-separated lengths of the first spectrum.
        #[arg(long, value_delimiter = ',')]
        h: Vec<u64>,
        /// Comma-separated lengths of the second spectrum.
        #[arg(long = "h2", value_delimiter = ',')]
        h2: Vec<u64>,
        /// Both spectra are complete up to this length.
        #[arg(long)]
        ceiling: u64,
        #[arg(long)]
        k: u64,
    },
    /// Select a subpresentation and the sigma spec it induces.
    #[command(after_help = PRESENT_FORMAT)]
    Subpres(SubpresArgs),
}

#[derive(Args)]
struct CoverArgs {
    #[arg(long)]
    cover: PathBuf,
    /// Prime fields to certify besides Z and Q, comma-separated.
    #[arg(long, value_delimiter = ',')]
    primes: Vec<u64>,
    /// Coset rows allowed when certifying simple connectivity.
    #[arg(long, default_value_t = 100_000)]
    budget: usize,
    /// Where to write the total space.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Where to write a registry entry for this cover.
    #[arg(long, requires = "entry_id")]
    entry_out: Option<PathBuf>,
    #[arg(long)]
    entry_id: Option<String>,
    /// Also double base and cover and check the result is a covering.
    #[arg(long)]
    double: bool,
}

#[derive(Args)]
struct PresentArgs {
    #[arg(long)]
    complex: PathBuf,
    /// Height → loops; no spreads when absent.
    #[arg(long, conflicts_with = "families")]
    spreads: Option<PathBuf>,
    /// α and β loops over a height window.
    #[arg(long)]
    families: Option<PathBuf>,
    /// Right-angled Artin group of the 1-skeleton instead.
    #[arg(long, conflicts_with_all = ["spreads", "families"])]
    raag: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SubpresArgs {
    /// Full presentation, JSON or text.
    #[arg(long)]
    presentation: PathBuf,
    /// Zero-based relator indices, comma-separated.
    #[arg(long, value_delimiter = ',')]
    select: Vec<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Registry for the induced spec.
    #[arg(long, requires_all = ["base", "off_entry", "sigma_out"])]
    registry: Option<PathBuf>,
    #[arg(long)]
    base: Option<String>,
    /// Entry at heights without selected β relators.
    #[arg(long)]
    off_entry: Option<String>,
    #[arg(long)]
    sigma_out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum SigmaCommand {
    /// σ(n) = L_n at primes n > 2, a fixed entry elsewhere.
    FieldExample {
        #[arg(long)]
        registry: PathBuf,
        #[arg(long)]
        base: String,
        /// Entry at non-prime heights.
        #[arg(long)]
        otherwise: String,
        /// p=ID, repeatable.
        #[arg(long = "member", value_parser = parse_member)]
        members: Vec<(u64, String)>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// L̄ below zero, the entries for a set of primes round-robin above.
    PrimeSet {
        #[arg(long)]
        registry: PathBuf,
        #[arg(long)]
        base: String,
        #[arg(long)]
        lbar: String,
        /// Comma-separated primes; empty for none.
        #[arg(long, value_delimiter = ',')]
        primes: Vec<u64>,
        /// p=ID, repeatable.
        #[arg(long = "member", value_parser = parse_member)]
        members: Vec<(u64, String)>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sparse spec with entries only at heights C_i^(2^i).
    SigmaF {
        #[arg(long)]
        registry: PathBuf,
        #[arg(long)]
        base: String,
        /// Comma-separated subset F of the naturals.
        #[arg(long, value_delimiter = ',')]
        f: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        constants: Vec<u64>,
        /// Entries L_{a_0}, L_{a_1}, …, comma-separated.
        #[arg(long, value_delimiter = ',')]
        a: Vec<String>,
        #[arg(long)]
        one: String,
        #[arg(long)]
        universal: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Least admissible growth constants and the separation check.
    Constants {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        m: usize,
        /// r_{b_0}, r_{b_1}, …, comma-separated; '-' for none.
        #[arg(long, value_delimiter = ',', value_parser = parse_optional)]
        r: Vec<Option<u64>>,
    },
    /// Least |n| where two specs differ.
    MOf {
        #[arg(long)]
        sigma: PathBuf,
        #[arg(long)]
        other: PathBuf,
    },
    /// Lower bound M·√(2/(d+1)) on kernel element lengths.
    KernelBound {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        d: u64,
    },
}

fn parse_member(s: &str) -> Result<(u64, String), String> {
    let (p, id) = s.split_once('=').ok_or_else(|| format!("expected p=ID, got {s:?}"))?;
    let p = p.trim().parse().map_err(|_| format!("bad prime {p:?}"))?;
    Ok((p, id.trim().to_string()))
}

fn parse_optional(s: &str) -> Result<Option<u64>, String> {
    if s == "-" {
        return Ok(None);
    }
    s.parse().map(Some).map_err(|_| format!("expected an integer or '-', got {s:?}"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(report) => {
            print!("{report}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
