//! The `arr report` pipeline: lattice, dense edges, freeness, Bernstein-Sato
//! outputs, zeta function, and the strong-monodromy check, in one document.
//!
//! Output is deterministic for a fixed input and version: collections are
//! ordered and wall-clock timings are only included under --timings.

use std::path::PathBuf;
use std::time::Instant;

use arr_core::arrangement::FactorizationKind;
use arr_core::bsideal;
use arr_core::exactmath::format_rational;
use arr_core::freeness::{self, FreenessResult};
use arr_core::lattice::build_lattice;
use arr_core::zeta;

use crate::commands::{edge_json, freeness_json, print_json, SCHEMA_VERSION};
use crate::{Cli, CliError};

pub fn cmd_report(cli: &Cli, file: &PathBuf) -> Result<u8, CliError> {
    let a = crate::read_arrangement(file)?;
    let started = Instant::now();
    let mut timings: Vec<(&'static str, std::time::Duration)> = Vec::new();
    let stage = |name: &'static str, timings: &mut Vec<(&'static str, std::time::Duration)>, since: Instant| {
        timings.push((name, since.elapsed()));
        Instant::now()
    };

    let mut t = Instant::now();
    let lattice = build_lattice(&a);
    t = stage("lattice", &mut timings, t);

    let dense = lattice.dense_edges();

    // freeness is a statement about the divisor
    let reduced = a.reduce();
    let was_reduced = a.is_reduced();
    let free_result = freeness::saito_search(&reduced, cli.max_degree)?;
    t = stage("freeness", &mut timings, t);

    let freeness_label = match &free_result {
        FreenessResult::Free { .. } => "certified-free",
        FreenessResult::NotFree { .. } => "not-free",
        FreenessResult::Inconclusive { .. } => "unverified",
    };
    let caveat = match &free_result {
        FreenessResult::Free { .. } => None,
        FreenessResult::NotFree { .. } => Some(
            "conjectural upper-bound set: the arrangement is not free (Terao obstruction)",
        ),
        FreenessResult::Inconclusive { .. } => {
            Some("conjectural upper-bound set: freeness unverified")
        }
    };

    // root set predictions need the reduced hypothesis
    let bs_roots = if was_reduced {
        let roots = bsideal::free_roots(&lattice)?;
        serde_json::json!({
            "roots": roots.iter().map(format_rational).collect::<Vec<_>>(),
            "freeness": freeness_label,
            "caveat": caveat,
        })
    } else {
        serde_json::json!({ "skipped": "requires a reduced arrangement" })
    };

    let complete = a.kind() == FactorizationKind::Complete;
    let maisonobe = if was_reduced && complete {
        let product = bsideal::maisonobe_generator(&lattice)?;
        let mut v = product.to_json_value();
        v["freeness"] = serde_json::json!(freeness_label);
        v["caveat"] = serde_json::json!(caveat);
        v
    } else {
        serde_json::json!({
            "skipped": "requires a reduced arrangement with a complete factorization"
        })
    };

    // the zero-locus lower bound and characteristic-cycle components need a
    // complete factorization; fall back to the canonical refinement
    let (bs_arr, bs_factorization) = if complete {
        (a.clone(), "as-given")
    } else {
        (a.complete_refinement().0, "canonical-completion")
    };
    let bs_lattice = build_lattice(&bs_arr);
    let lower = bsideal::lower_bound_components(&bs_lattice)?;
    let shifts = cli.parse_shifts()?;
    let cc = bsideal::cc_components(&bs_lattice, shifts)?;
    t = stage("bernstein-sato", &mut timings, t);

    let z = zeta::zeta_global(&a)?;
    let z_single = if a.factors() > 1 {
        Some(zeta::specialize_zeta_single(&z)?)
    } else {
        None
    };
    t = stage("zeta", &mut timings, t);

    let smc = zeta::verify_smc(&a)?;
    stage("verify-smc", &mut timings, t);

    let mut per_rank = vec![0usize; a.dim() + 1];
    for e in lattice.edges() {
        per_rank[e.rank()] += 1;
    }

    let mut doc = serde_json::json!({
        "schema_version": SCHEMA_VERSION,
        "arrangement": {
            "echo": a.to_json_value(),
            "kind": match a.kind() {
                FactorizationKind::Complete => "complete",
                FactorizationKind::Single => "single",
                FactorizationKind::General => "general",
            },
            "rank": a.rank(),
            "reduced": was_reduced,
            "degree": a.degree(),
        },
        "lattice": {
            "edge_count": lattice.num_edges(),
            "per_rank_counts": per_rank,
            "lct": lattice.lct().ok().map(|v| format_rational(&v)),
            "edges": (0..lattice.num_edges()).map(|i| edge_json(&lattice, i)).collect::<Vec<_>>(),
        },
        "dense_edges": dense,
        "freeness": {
            "computed_on_reduction": !was_reduced,
            "result": freeness_json(&free_result),
        },
        "bs": {
            "free_roots": bs_roots,
            "maisonobe_generator": maisonobe,
            "lower_bound_components": {
                "factorization": bs_factorization,
                "components": lower,
                "count": lower.len(),
            },
            "cc_components": cc.iter().map(|c| serde_json::json!({
                "edge": c.edge,
                "shift": c.shift,
                "multiplicity": c.multiplicity.to_string(),
                "form": c.form,
            })).collect::<Vec<_>>(),
        },
        "zeta": {
            "multivariable": z.to_json_value(),
            "single_variable": z_single.as_ref().map(|s| s.to_json_value()),
            "poles": zeta::pole_locus(&z).iter().map(|(f, o)| serde_json::json!({
                "form": f, "order": o,
            })).collect::<Vec<_>>(),
        },
        "smc": serde_json::to_value(&smc).map_err(|e| CliError::Validation(e.to_string()))?,
    });
    if cli.timings {
        doc["timings"] = serde_json::json!({
            "stages": timings.iter().map(|(name, d)| serde_json::json!({
                "stage": name,
                "micros": d.as_micros() as u64,
            })).collect::<Vec<_>>(),
            "total_micros": started.elapsed().as_micros() as u64,
        });
    }

    if cli.json {
        print_json(&doc);
    } else {
        render_plain(cli, &a, &doc, &smc);
    }

    if !smc.pass {
        return Ok(4);
    }
    if cli.strict && matches!(free_result, FreenessResult::Inconclusive { .. }) {
        return Ok(3);
    }
    Ok(0)
}

fn render_plain(
    cli: &Cli,
    a: &arr_core::Arrangement,
    doc: &serde_json::Value,
    smc: &zeta::SmcReport,
) {
    println!("== arrangement ==");
    print!("{}", a.to_plain());
    println!(
        "kind: {}  rank: {}  reduced: {}",
        doc["arrangement"]["kind"].as_str().unwrap_or("?"),
        doc["arrangement"]["rank"],
        doc["arrangement"]["reduced"]
    );

    println!("\n== lattice ==");
    println!(
        "edges: {}  per-rank: {}",
        doc["lattice"]["edge_count"],
        doc["lattice"]["per_rank_counts"]
    );
    println!("dense edges: {}", doc["dense_edges"]);

    println!("\n== freeness ==");
    if doc["freeness"]["computed_on_reduction"].as_bool() == Some(true) {
        println!("(decided on the reduced arrangement)");
    }
    println!("status: {}", doc["freeness"]["result"]["status"].as_str().unwrap_or("?"));
    if let Some(exps) = doc["freeness"]["result"]["exponents"].as_array() {
        let e: Vec<String> = exps.iter().map(|x| x.to_string()).collect();
        println!("exponents: {{{}}}", e.join(", "));
    }
    if let Some(obs) = doc["freeness"]["result"]["obstruction"]["display"].as_str() {
        println!("obstruction: {obs}");
    }

    println!("\n== bernstein-sato ==");
    if let Some(roots) = doc["bs"]["free_roots"]["roots"].as_array() {
        let r: Vec<String> = roots
            .iter()
            .map(|x| x.as_str().unwrap_or("?").to_string())
            .collect();
        println!(
            "predicted roots [{}]: {}",
            doc["bs"]["free_roots"]["freeness"].as_str().unwrap_or("?"),
            r.join(" ")
        );
    } else {
        println!("predicted roots: skipped ({})", doc["bs"]["free_roots"]["skipped"].as_str().unwrap_or(""));
    }
    if let Some(display) = doc["bs"]["maisonobe_generator"]["display"].as_str() {
        println!("generator: {display}");
    }
    println!(
        "lower-bound components ({}): {}",
        doc["bs"]["lower_bound_components"]["factorization"].as_str().unwrap_or("?"),
        doc["bs"]["lower_bound_components"]["count"]
    );
    if let Some(comps) = doc["bs"]["lower_bound_components"]["components"].as_array() {
        for c in comps {
            println!("  {}", c["display"].as_str().unwrap_or("?"));
        }
    }

    println!("\n== zeta ==");
    println!("Z = {}", doc["zeta"]["multivariable"]["display"].as_str().unwrap_or("?"));
    if let Some(s) = doc["zeta"]["single_variable"]["display"].as_str() {
        println!("Z(s,..,s) = {s}");
    }
    if let Some(poles) = doc["zeta"]["poles"].as_array() {
        for p in poles {
            println!(
                "pole: {} (order {})",
                p["form"]["display"].as_str().unwrap_or("?"),
                p["order"]
            );
        }
    }

    println!("\n== strong monodromy ==");
    println!(
        "{}",
        if smc.pass {
            "PASS: pole locus contained in the Bernstein-Sato lower bound"
        } else {
            "VIOLATION: implementation bug"
        }
    );

    if cli.timings {
        println!("\n== timings ==");
        if let Some(stages) = doc["timings"]["stages"].as_array() {
            for s in stages {
                println!("{}: {} us", s["stage"].as_str().unwrap_or("?"), s["micros"]);
            }
        }
    }
}
