use rayon::prelude::*;
use serde_json::{json, Value};

use sbk_core::derivation::{
    identity_suite, prove_equal, replay, Budget, CorpusEntry, DerivationCertificate,
    Expectation, ProofOutcome,
};
use sbk_core::enumeration::{
    default_max_cosets, reidemeister_schreier, tietze_simplify, todd_coxeter, CosetTable,
};
use sbk_core::morphisms::{
    canonical_permutation_hom, chi_hom, expansion_permutation_hom, expected_abelianization,
    Homomorphism,
};
use sbk_core::presentations::{
    b0_generators, expand_pure_generator, pure_subgroup_generators, PureIndexing,
};
use sbk_core::solvers::abelian_invariants_from_relators;
use sbk_core::words::{parse_word_in, GenSym};
use sbk_core::{build, Family, Presentation, SurfaceParams, Word};

use crate::source::{from_id, read_input, PresentationArgs};
use crate::{usage, CliError, Command, Outcome, Payload, Status, SubgroupKind, Target};

pub fn run(cmd: Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Present(src) => present(&src),
        Command::Verify { source, target, all } => {
            if all {
                verify_all()
            } else {
                verify(&source.load()?, target.expect("clap requires --target"))
            }
        }
        Command::Abelianize { source, kill_sigma } => abelianize(&source.load()?, kill_sigma),
        Command::Enumerate { source, subgroup, csv, max_cosets } => {
            enumerate(&source.load()?, subgroup, csv, max_cosets)
        }
        Command::Subgroup { source, subgroup, raw, max_cosets } => {
            subgroup_presentation(&source.load()?, subgroup, raw, max_cosets)
        }
        Command::Prove { source, lhs, rhs, entry, corpus, max_nodes, max_len } => {
            let budget = Budget { max_nodes, max_len };
            if corpus {
                prove_corpus(budget)
            } else if let Some(name) = entry {
                prove_entry(&name, budget)
            } else {
                let (Some(lhs), Some(rhs)) = (lhs, rhs) else {
                    return Err(usage("prove needs --lhs and --rhs, --entry, or --corpus"));
                };
                let pres = source.load()?;
                let lhs = parse_word_in(&lhs, &pres.alphabet)?;
                let rhs = parse_word_in(&rhs, &pres.alphabet)?;
                prove(&pres, &lhs, &rhs, budget)
            }
        }
        Command::Replay { source, certificate } => {
            let cert = DerivationCertificate::from_json(&read_input(certificate.as_ref())?)?;
            let pres = if source.given() { source.load()? } else { from_id(&cert.presentation)? };
            let ok = replay(&pres, &cert)?;
            let out = Outcome::ok(json!({ "presentation": pres.id(), "replay": ok }));
            Ok(if ok { out } else { out.with_status(Status::Failed).note("moves do not reach the end word") })
        }
        Command::Expand { source, word } => expand(&source.load()?, word.as_deref()),
    }
}

fn present(src: &PresentationArgs) -> Result<Outcome, CliError> {
    let pres = src.load()?;
    let mut out = Outcome::ok(serde_json::to_value(pres.to_doc()).expect("json"));
    for note in &pres.notes {
        out = out.note(format!("note: {note}"));
    }
    Ok(out)
}

fn target_hom(pres: &Presentation, target: Target) -> Result<Homomorphism, CliError> {
    Ok(match target {
        Target::Symmetric if pres.family.is_pure() => expansion_permutation_hom(pres)?,
        Target::Symmetric => canonical_permutation_hom(pres)?,
        Target::Chi => chi_hom(pres)?,
        Target::AbelianExpected => unreachable!("not a homomorphism target"),
    })
}

fn verify(pres: &Presentation, target: Target) -> Result<Outcome, CliError> {
    if let Target::AbelianExpected = target {
        let expected = expected_abelianization(pres.family, &pres.params).ok_or_else(|| {
            usage(format!("no expected abelianization for {}", pres.family))
        })?;
        let computed = abelian_invariants_from_relators(pres.generator_count(), &pres.relation_matrix());
        let overall = computed == expected;
        let out = Outcome::ok(json!({
            "presentation": pres.id(),
            "target": "abelian-expected",
            "overall": overall,
            "computed": computed,
            "expected": expected,
        }));
        return Ok(if overall { out } else { out.with_status(Status::Failed).note("abelianization differs") });
    }
    let mut hom = target_hom(pres, target)?;
    let report = hom.verify();
    let mut payload = serde_json::to_value(&report).expect("json");
    payload["presentation"] = json!(pres.id());
    payload["target"] = json!(hom.name);
    let mut out = Outcome::ok(payload);
    if !report.overall {
        out = out.with_status(Status::Failed);
        for row in report.failures() {
            out = out.note(format!("relator {} maps to {}", row.label, row.image));
        }
    }
    Ok(out)
}

/// Every valid (family, n, g, p) with n ≤ 5, g ≤ 3, p ≤ 3.
fn grid() -> Vec<(Family, SurfaceParams)> {
    let mut out = Vec::new();
    for family in Family::ALL {
        for n in 1..=5 {
            for g in 0..=3 {
                for p in 0..=3 {
                    let params = family.params(n, g, p);
                    if family.validate(&params).is_ok() {
                        out.push((family, params));
                    }
                }
            }
        }
    }
    out
}

fn verify_all() -> Result<Outcome, CliError> {
    let jobs: Vec<(Family, SurfaceParams, Target)> = grid()
        .into_iter()
        .flat_map(|(f, p)| {
            let mut t = vec![(f, p, Target::Symmetric)];
            if f.is_pure() {
                t.push((f, p, Target::Chi));
            }
            t
        })
        .collect();
    let rows: Vec<Value> = jobs
        .par_iter()
        .map(|&(family, params, target)| {
            let SurfaceParams { n, g, p, .. } = params;
            let result = build(family, n, g, p)
                .map_err(CliError::from)
                .and_then(|pres| target_hom(&pres, target))
                .map(|mut h| (h.verify(), h.name.clone()));
            match result {
                Ok((report, name)) => json!({
                    "family": family.name(), "n": n, "g": g, "p": p,
                    "target": name, "overall": report.overall,
                    "failures": report.failures().map(|r| r.label.clone()).collect::<Vec<_>>(),
                }),
                Err(e) => json!({
                    "family": family.name(), "n": n, "g": g, "p": p,
                    "target": format!("{target:?}").to_lowercase(), "overall": false, "error": e.msg,
                }),
            }
        })
        .collect();
    let bad: Vec<&Value> = rows.iter().filter(|r| r["overall"] != json!(true)).collect();
    let diagnostics: Vec<String> = bad.iter().map(|r| format!("failed: {r}")).collect();
    let overall = bad.is_empty();
    let mut out = Outcome::ok(json!({ "overall": overall, "checked": rows.len(), "rows": rows }));
    out.diagnostics = diagnostics;
    Ok(if overall { out } else { out.with_status(Status::Failed) })
}

fn abelianize(pres: &Presentation, kill_sigma: bool) -> Result<Outcome, CliError> {
    let pres = if kill_sigma { pres.with_sigmas_killed() } else { pres.clone() };
    let inv = abelian_invariants_from_relators(pres.generator_count(), &pres.relation_matrix());
    Ok(Outcome::ok(serde_json::to_value(inv).expect("json")))
}

fn subgroup_words(pres: &Presentation, kind: SubgroupKind) -> Result<Vec<Word>, CliError> {
    Ok(match kind {
        SubgroupKind::B0 => b0_generators(pres)?.into_iter().map(|(_, w)| w).collect(),
        SubgroupKind::Pure => pure_subgroup_generators(pres)?,
    })
}

fn coset_table(pres: &Presentation, kind: SubgroupKind, max: Option<usize>) -> Result<CosetTable, CliError> {
    let words = subgroup_words(pres, kind)?;
    Ok(todd_coxeter(pres, &words, max.unwrap_or_else(default_max_cosets))?)
}

fn enumerate(pres: &Presentation, kind: SubgroupKind, csv: bool, max: Option<usize>) -> Result<Outcome, CliError> {
    let table = coset_table(pres, kind, max)?;
    if csv {
        return Ok(Outcome { status: Status::Ok, payload: Payload::Text(table.to_csv()), diagnostics: Vec::new() });
    }
    let name = match kind {
        SubgroupKind::B0 => "b0",
        SubgroupKind::Pure => "pure",
    };
    Ok(Outcome::ok(json!({
        "presentation": pres.id(),
        "subgroup": name,
        "index": table.index(),
        "complete": table.complete(),
    })))
}

fn subgroup_presentation(
    pres: &Presentation,
    kind: SubgroupKind,
    raw: bool,
    max: Option<usize>,
) -> Result<Outcome, CliError> {
    let table = coset_table(pres, kind, max)?;
    let rs = reidemeister_schreier(pres, &table)?;
    let before = rs.generator_count();
    let out = if raw { rs } else { tietze_simplify(&rs, before) };
    Ok(Outcome::ok(serde_json::to_value(out.to_doc()).expect("json")).note(format!(
        "index {}, {} Schreier generators, {} after simplification",
        table.index(),
        before,
        out.generator_count()
    )))
}

fn proof_outcome(pres: &Presentation, outcome: ProofOutcome) -> Result<Outcome, CliError> {
    Ok(match outcome {
        ProofOutcome::Proved { certificate } => {
            let ok = replay(pres, &certificate)?;
            let out = Outcome::ok(serde_json::to_value(&certificate).expect("json"))
                .note(format!("proved in {} moves", certificate.moves.len()));
            if ok { out } else { out.with_status(Status::Failed).note("certificate does not replay") }
        }
        other @ ProofOutcome::Unknown { .. } => Outcome::ok(serde_json::to_value(&other).expect("json"))
            .with_status(Status::Unknown)
            .note("search budget exhausted"),
        other @ ProofOutcome::Refuted { .. } => Outcome::ok(serde_json::to_value(&other).expect("json"))
            .with_status(Status::Failed)
            .note("the two sides differ in a quotient"),
    })
}

fn prove(pres: &Presentation, lhs: &Word, rhs: &Word, budget: Budget) -> Result<Outcome, CliError> {
    proof_outcome(pres, prove_equal(pres, lhs, rhs, budget)?)
}

fn entry_presentation(e: &CorpusEntry) -> Result<Presentation, CliError> {
    Ok(build(e.family, e.params.n, e.params.g, e.params.p)?)
}

fn prove_entry(name: &str, budget: Budget) -> Result<Outcome, CliError> {
    let e = identity_suite()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| usage(format!("no corpus entry named {name:?}")))?;
    let pres = entry_presentation(&e)?;
    prove(&pres, &e.lhs, &e.rhs, budget)
}

fn prove_corpus(budget: Budget) -> Result<Outcome, CliError> {
    let rows: Vec<Result<(Value, bool), CliError>> = identity_suite()
        .par_iter()
        .map(|e| {
            let pres = entry_presentation(e)?;
            let outcome = prove_equal(&pres, &e.lhs, &e.rhs, budget)?;
            let (verdict, moves, replays) = match &outcome {
                ProofOutcome::Proved { certificate } => {
                    ("proved", Some(certificate.moves.len()), Some(replay(&pres, certificate)?))
                }
                ProofOutcome::Unknown { .. } => ("unknown", None, None),
                ProofOutcome::Refuted { .. } => ("refuted", None, None),
            };
            let met = e.expect != Expectation::Certificate || replays == Some(true);
            let row = json!({
                "name": e.name,
                "presentation": pres.id(),
                "expect": e.expect,
                "verdict": verdict,
                "moves": moves,
                "replays": replays,
                "outcome": outcome,
            });
            Ok((row, met))
        })
        .collect();
    let rows = rows.into_iter().collect::<Result<Vec<_>, _>>()?;
    let missed: Vec<String> =
        rows.iter().filter(|(_, met)| !met).map(|(r, _)| format!("missed: {}", r["name"])).collect();
    let overall = missed.is_empty();
    let mut out = Outcome::ok(json!({
        "overall": overall,
        "entries": rows.into_iter().map(|(r, _)| r).collect::<Vec<_>>(),
    }));
    out.diagnostics = missed;
    Ok(if overall { out } else { out.with_status(Status::Failed) })
}

fn expand(pres: &Presentation, word: Option<&str>) -> Result<Outcome, CliError> {
    if !pres.family.is_pure() {
        return Err(usage(format!("expand needs a pure family, got {}", pres.family)));
    }
    let SurfaceParams { n, g, p, .. } = pres.params;
    let idx = PureIndexing::new(n, g, p);
    let image = |s: GenSym| match s {
        GenSym::PureA(i, j) => expand_pure_generator(i, j, &idx),
        other => Err(sbk_core::Error::UnknownSymbol(other)),
    };
    let braid_family = if pres.params.closed { Family::BraidClosedOrientableAB } else { Family::BraidPuncturedOrientable };
    let family = braid_family.name();
    match word {
        Some(text) => {
            let w = parse_word_in(text, &pres.alphabet)?;
            let mut parts = Vec::new();
            for l in w.letters() {
                let x = image(l.gen)?;
                parts.push(if l.inv { x.inverse() } else { x });
            }
            let braid = Word::product(parts.iter());
            Ok(Outcome::ok(json!({ "family": family, "word": w.to_string(), "braid": braid.to_string() })))
        }
        None => {
            let rows = pres
                .alphabet
                .symbols()
                .iter()
                .map(|&s| Ok(json!({ "generator": s.to_string(), "braid": image(s)?.to_string() })))
                .collect::<Result<Vec<_>, sbk_core::Error>>()?;
            Ok(Outcome::ok(json!({ "family": family, "generators": rows })))
        }
    }
}
