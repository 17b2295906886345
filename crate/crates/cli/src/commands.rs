//! Subcommand bodies. Each returns the JSON report printed on success.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use fpforge_core::complex::{ComplexFile, SimplicialComplex};
use fpforge_core::covers::{build_cover, double_of_cover, CoverError, CoverFile};
use fpforge_core::double::spherical_double;
use fpforge_core::groups::{
    abelianization, glsigma_families, glsigma_presentation, raag_presentation, subpresentation_select,
    LoopWord, Presentation,
};
use fpforge_core::homology::{reduced_homology, RingSpec};
use fpforge_core::sigma::{
    alpha, choose_constants, induced_sigma, min_kernel_length_bound, separation_ratio_check, sigma_f,
    sigma_field_example, sigma_prime_set, FpTarget, RegistryEntry, SigmaError, SigmaFInput, SigmaSpec,
    SigmaSpecFile,
};
use fpforge_core::spectrum::{k_related, taut_spectrum, GraphFile, ScannedSpectrum};

use crate::io::{parent_dir, read_json, read_text, to_json, write_atomic, write_json, CliError, CliResult};
use crate::{Command, CoverArgs, PresentArgs, SigmaCommand, SubpresArgs};

pub fn run(command: Command) -> CliResult<String> {
    let report = match command {
        Command::Double { complex, out } => double(&complex, out.as_deref())?,
        Command::Cover(args) => cover(&args)?,
        Command::Homology { complex, rings } => homology(&complex, &rings)?,
        Command::Present(args) => present(&args)?,
        Command::Decide { sigma, ring, k, finitely_presented } => decide(&sigma, ring, k, finitely_presented)?,
        Command::Sigma(cmd) => sigma(cmd)?,
        Command::Spectrum { graph, lmax, budget, out } => spectrum(&graph, lmax, budget, out.as_deref())?,
        Command::Related { h, h2, ceiling, k } => {
            let a = ScannedSpectrum::new(h, ceiling).map_err(CliError::config)?;
            let b = ScannedSpectrum::new(h2, ceiling).map_err(CliError::config)?;
            json!({ "k": k, "ceiling": ceiling, "related": k_related(&a, &b, k).map_err(CliError::config)? })
        }
        Command::Subpres(args) => subpres(&args)?,
    };
    Ok(to_json(&report))
}

fn load_complex(path: &Path) -> CliResult<SimplicialComplex> {
    read_json::<ComplexFile>(path)?.into_complex().map_err(CliError::domain)
}

fn cover_error(e: CoverError) -> CliError {
    match e {
        CoverError::File(_) => CliError::config(e),
        _ => CliError::domain(e),
    }
}

fn sigma_error(e: SigmaError) -> CliError {
    match e {
        SigmaError::File(_) => CliError::config(e),
        _ => CliError::domain(e),
    }
}

fn load_spec(path: &Path) -> CliResult<SigmaSpec> {
    let file: SigmaSpecFile = read_json(path)?;
    file.into_spec(parent_dir(path).as_deref()).map_err(sigma_error)
}

fn load_registry(path: &Path) -> CliResult<Vec<RegistryEntry>> {
    read_json(path)
}

/// Writes the spec and reports it, with the registry inline.
fn emit_spec(spec: &SigmaSpec, out: Option<&Path>) -> CliResult<Value> {
    let file = spec.to_file();
    if let Some(out) = out {
        write_json(out, &file)?;
    }
    Ok(serde_json::to_value(&file).expect("spec serializes"))
}

fn double(path: &Path, out: Option<&Path>) -> CliResult<Value> {
    let base = load_complex(path)?;
    let doubled = spherical_double(&base).map_err(CliError::domain)?;
    if let Some(out) = out {
        write_json(out, doubled.complex())?;
    }
    Ok(json!({
        "base_f_vector": base.f_vector(),
        "f_vector": doubled.complex().f_vector(),
        "base_is_flag": base.is_flag().map_err(CliError::domain)?,
        "is_flag": doubled.complex().is_flag().map_err(CliError::domain)?,
    }))
}

fn cover(args: &CoverArgs) -> CliResult<Value> {
    let file: CoverFile = read_json(&args.cover)?;
    let assignment = file.into_assignment(parent_dir(&args.cover).as_deref()).map_err(cover_error)?;
    let cover = build_cover(&assignment).map_err(cover_error)?;
    let total = cover.total();
    let mut rings = vec![RingSpec::Integers, RingSpec::Rationals];
    for &p in &args.primes {
        rings.push(RingSpec::prime_field(p).map_err(CliError::config)?);
    }
    let homology: Vec<_> = rings.iter().map(|&r| reduced_homology(total, r)).collect();
    let regularity = if cover.is_connected() {
        let deck = cover.regularity().map_err(cover_error)?;
        json!({ "regular": deck.regular, "monodromy_order": deck.monodromy_order, "deck_order": deck.deck.len() })
    } else {
        Value::Null
    };
    let mut report = json!({
        "degree": cover.degree(),
        "base_f_vector": cover.base().f_vector(),
        "total_f_vector": total.f_vector(),
        "connected": cover.is_connected(),
        "covering_verified": cover.verify_covering(),
        "regularity": regularity,
        "homology": homology,
    });
    if args.double {
        let (doubled, doubled_cover) = double_of_cover(cover.base(), &cover).map_err(cover_error)?;
        report["double"] = json!({
            "base_f_vector": doubled.complex().f_vector(),
            "total_f_vector": doubled_cover.total().f_vector(),
            "degree": doubled_cover.degree(),
            "covering_verified": doubled_cover.verify_covering(),
        });
    }
    if let Some(out) = &args.out {
        write_json(out, total)?;
    }
    if let (Some(out), Some(id)) = (&args.entry_out, &args.entry_id) {
        let entry = RegistryEntry::constructed(id.clone(), &cover, &args.primes, args.budget).map_err(sigma_error)?;
        write_json(out, &entry)?;
        report["simply_connected"] = json!(entry.simply_connected);
    }
    Ok(report)
}

fn homology(path: &Path, rings: &[RingSpec]) -> CliResult<Value> {
    let complex = load_complex(path)?;
    let rings = if rings.is_empty() { vec![RingSpec::Integers, RingSpec::Rationals] } else { rings.to_vec() };
    let summaries: Vec<_> = rings.iter().map(|&r| reduced_homology(&complex, r)).collect();
    Ok(json!({ "f_vector": complex.f_vector(), "homology": summaries }))
}

#[derive(Deserialize)]
struct FamilyFile {
    alpha: Vec<LoopWord>,
    #[serde(default)]
    beta: Vec<LoopWord>,
    min: i64,
    max: i64,
}

/// Presentations are JSON when the path ends in `.json`, text otherwise.
fn is_json(path: &Path) -> bool {
    path.extension().is_some_and(|e| e == "json")
}

fn write_presentation(p: &Presentation, out: &Path) -> CliResult<()> {
    if is_json(out) {
        write_json(out, p)
    } else {
        write_atomic(out, &p.to_text())
    }
}

fn read_presentation(path: &Path) -> CliResult<Presentation> {
    if is_json(path) {
        read_json(path)
    } else {
        Presentation::from_text(&read_text(path)?).map_err(CliError::config)
    }
}

fn presentation_report(p: &Presentation, out: Option<&Path>) -> CliResult<Value> {
    let mut report = json!({
        "generators": p.generator_count(),
        "relators": p.relators().len(),
        "abelianization": abelianization(p),
    });
    match out {
        Some(out) => write_presentation(p, out)?,
        None => report["text"] = json!(p.to_text()),
    }
    Ok(report)
}

fn present(args: &PresentArgs) -> CliResult<Value> {
    let complex = load_complex(&args.complex)?;
    let p = if args.raag {
        raag_presentation(&complex)
    } else if let Some(path) = &args.families {
        let f: FamilyFile = read_json(path)?;
        glsigma_families(&complex, &f.alpha, &f.beta, f.min, f.max)
    } else {
        let spreads: BTreeMap<i64, Vec<LoopWord>> = match &args.spreads {
            Some(path) => read_json(path)?,
            None => BTreeMap::new(),
        };
        glsigma_presentation(&complex, &spreads)
    }
    .map_err(CliError::domain)?;
    presentation_report(&p, args.out.as_deref())
}

fn decide(path: &Path, ring: Option<RingSpec>, k: Option<FpTarget>, finitely_presented: bool) -> CliResult<Value> {
    let spec = load_spec(path)?;
    let (question, verdict) = if finitely_presented {
        ("finitely presented".to_string(), spec.finitely_presented_decide().map_err(sigma_error)?)
    } else {
        let ring = ring.ok_or_else(|| CliError::Config("--ring is required".into()))?;
        let k = k.ok_or_else(|| CliError::Config("--k is required".into()))?;
        let question = match k {
            FpTarget::Degree(k) => format!("FP_{k}({ring})"),
            FpTarget::All => format!("FP({ring})"),
        };
        (question, spec.fp_decide(ring, k).map_err(sigma_error)?)
    };
    Ok(json!({ "question": question, "verdict": verdict.label(), "witness": verdict.witness }))
}

fn members(list: &[(u64, String)]) -> BTreeMap<u64, String> {
    list.iter().cloned().collect()
}

fn sigma(cmd: SigmaCommand) -> CliResult<Value> {
    match cmd {
        SigmaCommand::FieldExample { registry, base, otherwise, members: m, out } => {
            let spec = sigma_field_example(load_registry(&registry)?, &base, &members(&m), &otherwise)
                .map_err(sigma_error)?;
            emit_spec(&spec, out.as_deref())
        }
        SigmaCommand::PrimeSet { registry, base, lbar, primes, members: m, out } => {
            let primes: BTreeSet<u64> = primes.into_iter().collect();
            let spec = sigma_prime_set(&primes, load_registry(&registry)?, &base, &lbar, &members(&m))
                .map_err(sigma_error)?;
            emit_spec(&spec, out.as_deref())
        }
        SigmaCommand::SigmaF { registry, base, f, constants, a, one, universal, out } => {
            let input = SigmaFInput { f: f.into_iter().collect(), constants, a_ids: a, one_id: one, universal_id: universal };
            let spec = sigma_f(load_registry(&registry)?, &base, &input).map_err(sigma_error)?;
            emit_spec(&spec, out.as_deref())
        }
        SigmaCommand::Constants { d, m, r } => {
            if d == 0 {
                return Err(CliError::Config("--d must be positive".into()));
            }
            let constants = choose_constants(d, &r, m);
            let separation = match separation_ratio_check(&constants, &r, d) {
                Ok(bound) => json!({
                    "holds": true,
                    "minimum_ratio_bound": bound.minimum.to_string(),
                    "ratio_bounds": bound.per_index.iter().map(ToString::to_string).collect::<Vec<_>>(),
                }),
                Err(failure) => json!({ "holds": false, "failure": failure }),
            };
            Ok(json!({ "alpha": alpha(d), "constants": constants, "separation": separation }))
        }
        SigmaCommand::MOf { sigma, other } => {
            let m = load_spec(&sigma)?.m_of(&load_spec(&other)?).map_err(sigma_error)?;
            Ok(json!({ "m": m.map_or(json!("infinite"), |m| json!(m)) }))
        }
        SigmaCommand::KernelBound { m, d } => {
            if d == 0 {
                return Err(CliError::Config("--d must be positive".into()));
            }
            Ok(json!({ "m": m, "d": d, "bound": min_kernel_length_bound(m, d) }))
        }
    }
}

fn spectrum(path: &Path, lmax: usize, budget: usize, out: Option<&Path>) -> CliResult<Value> {
    let graph = read_json::<GraphFile>(path)?.into_graph().map_err(CliError::domain)?;
    let report = taut_spectrum(&graph, lmax, budget).map_err(CliError::domain)?;
    if let Some(out) = out {
        write_json(out, &report)?;
    }
    Ok(json!({
        "spectrum": report.spectrum(),
        "certified": report.is_certified(),
        "report": report,
    }))
}

#[derive(Serialize)]
struct SubpresReport {
    generators: usize,
    relators: usize,
    beta_heights: BTreeSet<i64>,
}

fn subpres(args: &SubpresArgs) -> CliResult<Value> {
    let full = read_presentation(&args.presentation)?;
    let sub = subpresentation_select(&full, &args.select).map_err(CliError::domain)?;
    let mut report = serde_json::to_value(SubpresReport {
        generators: sub.presentation.generator_count(),
        relators: sub.presentation.relators().len(),
        beta_heights: sub.beta_heights.clone(),
    })
    .expect("report serializes");
    match &args.out {
        Some(out) => write_presentation(&sub.presentation, out)?,
        None => report["text"] = json!(sub.presentation.to_text()),
    }
    if let (Some(registry), Some(base), Some(off), Some(out)) =
        (&args.registry, &args.base, &args.off_entry, &args.sigma_out)
    {
        let spec = induced_sigma(load_registry(registry)?, &sub.beta_heights, off, base).map_err(sigma_error)?;
        emit_spec(&spec, Some(out))?;
    }
    Ok(report)
}
