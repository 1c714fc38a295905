//! Subcommand implementations. Every command loads the arrangement, computes
//! with arr-core, and renders either plain text or JSON; all collections are
//! ordered so output is byte-identical across runs.

use std::collections::BTreeSet;
use std::path::PathBuf;

use arr_core::arrangement::FactorizationKind;
use arr_core::bsideal;
use arr_core::corpus::builtin_corpus;
use arr_core::exactmath::{format_rational, LinearForm};
use arr_core::freeness::{self, FreenessResult};
use arr_core::lattice::{build_lattice, Lattice};
use arr_core::zeta;
use arr_core::Arrangement;

use crate::report;
use crate::{Cli, CliError, Command};

pub const SCHEMA_VERSION: u32 = 1;

pub fn run(cli: &Cli) -> Result<u8, CliError> {
    match &cli.command {
        Command::Lattice { file } => cmd_lattice(cli, file, false),
        Command::Dense { file } => cmd_lattice(cli, file, true),
        Command::Charpoly { file } => cmd_charpoly(cli, file),
        Command::Freeness { file } => cmd_freeness(cli, file),
        Command::BsRoots { file } => cmd_bs_roots(cli, file),
        Command::BsIdeal { file } => cmd_bs_ideal(cli, file),
        Command::BsLower { file } => cmd_bs_lower(cli, file),
        Command::Cc { file } => cmd_cc(cli, file),
        Command::Zeta { file } => cmd_zeta(cli, file),
        Command::VerifySmc { file } => cmd_verify_smc(cli, file),
        Command::Report { file } => report::cmd_report(cli, file),
        Command::Corpus { write } => cmd_corpus(cli, write.as_deref()),
    }
}

fn key_strings(lattice: &Lattice, idx: usize) -> Vec<Vec<String>> {
    lattice
        .edge(idx)
        .display_key_rows()
        .iter()
        .map(|row| row.iter().map(|x| x.to_string()).collect())
        .collect()
}

fn key_plain(lattice: &Lattice, idx: usize) -> String {
    if lattice.edge(idx).rank() == 0 {
        return "ambient".into();
    }
    let rows: Vec<String> = key_strings(lattice, idx)
        .iter()
        .map(|row| format!("[{}]", row.join(" ")))
        .collect();
    rows.join(",")
}

fn char_poly_coeffs(lattice: &Lattice, idx: usize) -> Vec<String> {
    lattice
        .char_poly(idx)
        .univariate_coeffs()
        .iter()
        .map(format_rational)
        .collect()
}

pub fn edge_json(lattice: &Lattice, idx: usize) -> serde_json::Value {
    let edge = lattice.edge(idx);
    serde_json::json!({
        "key": key_strings(lattice, idx),
        "rank": edge.rank(),
        "j": edge.j_set().iter().collect::<Vec<_>>(),
        "factor_set": edge.factor_set().iter().collect::<Vec<_>>(),
        "dense": lattice.is_dense(idx),
        "mobius": lattice.mobius(idx).to_string(),
        "char_poly": char_poly_coeffs(lattice, idx),
        "proj_complement_euler": lattice.proj_complement_euler(idx).ok().map(|v| v.to_string()),
    })
}

fn edge_plain(lattice: &Lattice, idx: usize) -> String {
    let edge = lattice.edge(idx);
    let j: Vec<String> = edge.j_set().iter().map(|i| i.to_string()).collect();
    let dense = if lattice.is_dense(idx) { " dense" } else { "" };
    format!(
        "edge {idx}: rank {} key {} J {{{}}} mu {}{} chi {}",
        edge.rank(),
        key_plain(lattice, idx),
        j.join(","),
        lattice.mobius(idx),
        dense,
        lattice.char_poly(idx).display(&|_| "t".into()),
    )
}

fn arrangement_json(a: &Arrangement) -> serde_json::Value {
    let mut v = a.to_json_value();
    v["kind"] = serde_json::json!(match a.kind() {
        FactorizationKind::Complete => "complete",
        FactorizationKind::Single => "single",
        FactorizationKind::General => "general",
    });
    v["rank"] = serde_json::json!(a.rank());
    v["reduced"] = serde_json::json!(a.is_reduced());
    v
}

fn cmd_lattice(cli: &Cli, file: &PathBuf, dense_only: bool) -> Result<u8, CliError> {
    let a = crate::read_arrangement(file)?;
    let lattice = build_lattice(&a);
    let indices: Vec<usize> = (0..lattice.num_edges())
        .filter(|&i| !dense_only || lattice.is_dense(i))
        .collect();
    if cli.json {
        let edges: Vec<serde_json::Value> =
            indices.iter().map(|&i| edge_json(&lattice, i)).collect();
        print_json(&serde_json::json!({
            "schema_version": SCHEMA_VERSION,
            "arrangement": arrangement_json(&a),
            "edge_count": lattice.num_edges(),
            "edges": edges,
        }));
    } else {
        println!(
            "arrangement: dim {}, {} hyperplanes, {} factors",
            a.dim(),
            a.num_hyperplanes(),
            a.factors()
        );
        println!("edges: {}", lattice.num_edges());
        for &i in &indices {
            println!("{}", edge_plain(&lattice, i));
        }
    }
    Ok(0)
}

fn cmd_charpoly(cli: &Cli, file: &PathBuf) -> Result<u8, CliError> {
    let a = crate::read_arrangement(file)?;
    let chi = build_lattice(&a).char_poly_global();
    if cli.json {
        print_json(&serde_json::json!({
            "schema_version": SCHEMA_VERSION,
            "char_poly": {
                "coefficients": chi.univariate_coeffs().iter().map(format_rational).collect::<Vec<_>>(),
                "display": chi.display(&|_| "t".into()),
            },
        }));
    } else {
        println!("{}", chi.display(&|_| "t".into()));
    }
    Ok(0)
}

pub fn freeness_json(result: &FreenessResult) -> serde_json::Value {
    match result {
        FreenessResult::Free {
            derivations,
            scalar,
            exponents,
        } => serde_json::json!({
            "status": "free",
            "exponents": exponents,
            "scalar": format_rational(scalar),
            "derivations": derivations.iter().map(|d| {
                serde_json::json!({ "degree": d.degree(), "display": d.display() })
            }).collect::<Vec<_>>(),
        }),
        FreenessResult::NotFree { char_poly } => serde_json::json!({
            "status": "not-free",
            "obstruction": {
                "char_poly": char_poly.univariate_coeffs().iter().map(format_rational).collect::<Vec<_>>(),
                "display": char_poly.display(&|_| "t".into()),
            },
        }),
        FreenessResult::Inconclusive { max_degree } => serde_json::json!({
            "status": "inconclusive",
            "max_degree": max_degree,
        }),
    }
}

fn freeness_plain(result: &FreenessResult) -> String {
    match result {
        FreenessResult::Free {
            derivations,
            scalar,
            exponents,
        } => {
            let mut out = String::from("status: free\n");
            let exps: Vec<String> = exponents.iter().map(|e| e.to_string()).collect();
            out.push_str(&format!("exponents: {{{}}}\n", exps.join(", ")));
            out.push_str(&format!("saito scalar: {}\n", format_rational(scalar)));
            for (i, d) in derivations.iter().enumerate() {
                out.push_str(&format!(
                    "derivation {} (degree {}): {}\n",
                    i + 1,
                    d.degree(),
                    d.display()
                ));
            }
            out
        }
        FreenessResult::NotFree { char_poly } => format!(
            "status: not-free\nobstruction: characteristic polynomial {} does not factor over the nonnegative integers\n",
            char_poly.display(&|_| "t".into())
        ),
        FreenessResult::Inconclusive { max_degree } => format!(
            "status: inconclusive (search bound: degree {max_degree})\n"
        ),
    }
}

fn cmd_freeness(cli: &Cli, file: &PathBuf) -> Result<u8, CliError> {
    let a = crate::read_arrangement(file)?;
    let reduced = a.reduce();
    let was_reduced = a.is_reduced();
    let result = freeness::saito_search(&reduced, cli.max_degree)?;
    if cli.json {
        let mut v = freeness_json(&result);
        v["schema_version"] = serde_json::json!(SCHEMA_VERSION);
        v["computed_on_reduction"] = serde_json::json!(!was_reduced);
        print_json(&v);
    } else {
        if !was_reduced {
            println!("note: freeness decided on the reduced arrangement (the divisor)");
        }
        print!("{}", freeness_plain(&result));
    }
    if cli.strict && matches!(result, FreenessResult::Inconclusive { .. }) {
        return Ok(3);
    }
    Ok(0)
}

/// Freeness gate shared by the outputs whose hypothesis is freeness.
/// Returns the status label and a caveat, or refuses (exit 2) when the
/// arrangement is proven not free and --assume-free was not given.
pub fn freeness_gate(
    cli: &Cli,
    arrangement: &Arrangement,
) -> Result<(FreenessResult, &'static str, Option<String>), CliError> {
    let result = freeness::saito_search(arrangement, cli.max_degree)?;
    match &result {
        FreenessResult::Free { .. } => Ok((result, "certified-free", None)),
        FreenessResult::NotFree { .. } => {
            if cli.assume_free {
                let caveat = "conjectural upper-bound set: the arrangement is NOT free \
                              (Terao obstruction); emitted under --assume-free"
                    .to_string();
                Ok((result, "not-free", Some(caveat)))
            } else {
                Err(CliError::Validation(
                    "arrangement is not free (Terao obstruction); the requested output is only \
                     a theorem for free arrangements. Re-run with --assume-free to emit the \
                     conjectural upper-bound set"
                        .into(),
                ))
            }
        }
        FreenessResult::Inconclusive { .. } => {
            let caveat =
                "conjectural upper-bound set: freeness unverified (certificate search inconclusive)"
                    .to_string();
            Ok((result, "unverified", Some(caveat)))
        }
    }
}

fn strict_exit(cli: &Cli, result: &FreenessResult) -> u8 {
    if cli.strict && matches!(result, FreenessResult::Inconclusive { .. }) {
        3
    } else {
        0
    }
}

fn cmd_bs_roots(cli: &Cli, file: &PathBuf) -> Result<u8, CliError> {
    let a = crate::read_arrangement(file)?;
    let lattice = build_lattice(&a);
    let roots = bsideal::free_roots(&lattice)?;
    let (result, status, caveat) = freeness_gate(cli, &a)?;
    let root_strings: Vec<String> = roots.iter().map(format_rational).collect();
    if cli.json {
        print_json(&serde_json::json!({
            "schema_version": SCHEMA_VERSION,
            "roots": root_strings,
            "freeness": status,
            "caveat": caveat,
        }));
    } else {
        if let Some(c) = &caveat {
            eprintln!("note: {c}");
        }
        println!("{}", root_strings.join(" "));
    }
    Ok(strict_exit(cli, &result))
}

fn cmd_bs_ideal(cli: &Cli, file: &PathBuf) -> Result<u8, CliError> {
    let a = crate::read_arrangement(file)?;
    let lattice = build_lattice(&a);
    let product = bsideal::maisonobe_generator(&lattice)?;
    let (result, status, caveat) = freeness_gate(cli, &a)?;
    if cli.json {
        let mut v = product.to_json_value();
        v["schema_version"] = serde_json::json!(SCHEMA_VERSION);
        v["freeness"] = serde_json::json!(status);
        v["caveat"] = serde_json::json!(caveat);
        print_json(&v);
    } else {
        if let Some(c) = &caveat {
            eprintln!("note: {c}");
        }
        println!("{}", product.display());
    }
    Ok(strict_exit(cli, &result))
}

fn cmd_bs_lower(cli: &Cli, file: &PathBuf) -> Result<u8, CliError> {
    let a = crate::read_arrangement(file)?;
    let lattice = build_lattice(&a);
    let forms = bsideal::lower_bound_components(&lattice)?;
    if cli.json {
        print_json(&serde_json::json!({
            "schema_version": SCHEMA_VERSION,
            "components": forms,
            "count": forms.len(),
        }));
    } else {
        for f in &forms {
            println!("{}", f.display_s());
        }
    }
    Ok(0)
}

fn cmd_cc(cli: &Cli, file: &PathBuf) -> Result<u8, CliError> {
    let a = crate::read_arrangement(file)?;
    let shifts = cli.parse_shifts()?;
    let lattice = build_lattice(&a);
    let components = bsideal::cc_components(&lattice, shifts)?;
    if cli.json {
        let comps: Vec<serde_json::Value> = components
            .iter()
            .map(|c| {
                serde_json::json!({
                    "edge": edge_json(&lattice, c.edge),
                    "shift": c.shift,
                    "multiplicity": c.multiplicity.to_string(),
                    "form": c.form,
                })
            })
            .collect();
        print_json(&serde_json::json!({
            "schema_version": SCHEMA_VERSION,
            "components": comps,
        }));
    } else {
        for c in &components {
            println!(
                "edge rank {} key {}: form {} multiplicity {} (shift {})",
                lattice.edge(c.edge).rank(),
                key_plain(&lattice, c.edge),
                c.form.as_ref().map_or("-".into(), |f| f.display_s()),
                c.multiplicity,
                c.shift,
            );
        }
    }
    Ok(0)
}

fn cmd_zeta(cli: &Cli, file: &PathBuf) -> Result<u8, CliError> {
    let a = crate::read_arrangement(file)?;
    let lattice = build_lattice(&a);
    let mut z = zeta::zeta_global(&a)?;
    let mut candidates: BTreeSet<LinearForm> =
        zeta::candidate_pole_forms(&lattice).into_iter().collect();
    if cli.single_variable && a.factors() > 1 {
        z = zeta::specialize_zeta_single(&z)?;
        candidates = candidates
            .into_iter()
            .map(|f| f.merge_variables(&vec![0; a.factors()], 1).map(|(g, _)| g))
            .collect::<Result<_, _>>()?;
    }
    let poles = zeta::pole_locus(&z);
    let pole_forms: BTreeSet<LinearForm> = poles.iter().map(|(f, _)| f.clone()).collect();
    let cancelled: Vec<&LinearForm> = candidates.iter().filter(|f| !pole_forms.contains(f)).collect();
    if cli.json {
        print_json(&serde_json::json!({
            "schema_version": SCHEMA_VERSION,
            "zeta": z.to_json_value(),
            "poles": poles.iter().map(|(f, o)| {
                serde_json::json!({ "form": f, "order": o })
            }).collect::<Vec<_>>(),
            "cancelled_candidates": cancelled,
        }));
    } else {
        println!("zeta = {}", z.display());
        for (f, o) in &poles {
            println!("pole: {} (order {o})", f.display_s());
        }
        for f in &cancelled {
            println!("cancelled candidate: {}", f.display_s());
        }
    }
    Ok(0)
}

fn cmd_verify_smc(cli: &Cli, file: &PathBuf) -> Result<u8, CliError> {
    let a = crate::read_arrangement(file)?;
    let report = zeta::verify_smc(&a)?;
    if cli.json {
        let mut v = serde_json::to_value(&report)
            .map_err(|e| CliError::Validation(e.to_string()))?;
        v["schema_version"] = serde_json::json!(SCHEMA_VERSION);
        print_json(&v);
    } else {
        println!(
            "factorization: {}",
            if report.factorization_complete {
                "complete (direct containment check)"
            } else {
                "not complete (checked through the canonical complete refinement)"
            }
        );
        for p in &report.poles {
            match &p.component {
                Some(c) => println!(
                    "pole {} (order {}) -> component {}",
                    p.pole.display_s(),
                    p.order,
                    c.display_s()
                ),
                None => println!(
                    "pole {} (order {}) -> NO MATCHING COMPONENT",
                    p.pole.display_s(),
                    p.order
                ),
            }
        }
        if report.pass {
            println!(
                "PASS: pole locus contained in the Bernstein-Sato lower bound ({} components)",
                report.component_count
            );
        } else {
            println!("VIOLATION: a pole escapes the guaranteed zero locus; this is an implementation bug");
        }
    }
    Ok(if report.pass { 0 } else { 4 })
}

fn cmd_corpus(cli: &Cli, write: Option<&std::path::Path>) -> Result<u8, CliError> {
    let entries = builtin_corpus();
    if let Some(dir) = write {
        std::fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
        for e in &entries {
            let json_path = dir.join(format!("{}.json", e.name));
            let plain_path = dir.join(format!("{}.txt", e.name));
            std::fs::write(&json_path, e.arrangement.to_json())
                .map_err(|err| CliError::Io(format!("{}: {err}", json_path.display())))?;
            std::fs::write(&plain_path, e.arrangement.to_plain())
                .map_err(|err| CliError::Io(format!("{}: {err}", plain_path.display())))?;
        }
        if !cli.json {
            println!("wrote {} arrangements to {}", entries.len(), dir.display());
        }
    }
    if cli.json {
        print_json(&serde_json::json!({
            "schema_version": SCHEMA_VERSION,
            "entries": entries.iter().map(|e| {
                serde_json::json!({
                    "name": e.name,
                    "description": e.description,
                    "arrangement": arrangement_json(&e.arrangement),
                })
            }).collect::<Vec<_>>(),
        }));
    } else {
        for e in &entries {
            println!(
                "{:16} dim {} p {} r {}  {}",
                e.name,
                e.arrangement.dim(),
                e.arrangement.num_hyperplanes(),
                e.arrangement.factors(),
                e.description
            );
        }
    }
    Ok(0)
}

pub fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}
