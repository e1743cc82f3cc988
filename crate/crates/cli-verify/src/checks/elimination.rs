use std::collections::BTreeMap;

use eliminator::{candidates, eliminate, CandidatePair, Outcome, Pattern, ScanOptions};
use group_model::GroupDescriptor;
use rayon::prelude::*;
use serde_json::json;

use crate::error::Result;
use crate::grid::{GridSpec, TARGET_FIELDS};
use crate::report::{failure, Failure, Run};

/// `L45`, `U45`, `S56`, `O57`, `O62+`, `O60-`: the name without the field.
pub fn base_name(g: &GroupDescriptor) -> String {
    let name = g.short_name();
    name.split('(').next().unwrap_or(&name).to_string()
}

/// Patterns that specific pairs of families must close with.
pub const EXPECTED_PATTERNS: [(&str, &str, Pattern); 8] = [
    ("O60-", "O60-", Pattern::CharCliqueFour),
    ("L45", "S58", Pattern::ClassMismatch),
    ("L45", "O60-", Pattern::ClassMismatch),
    ("O62+", "O64+", Pattern::ClassMismatch),
    ("O62+", "S62", Pattern::ClassMismatch),
    ("O60-", "S60", Pattern::ClassMismatch),
    ("S56", "O60+", Pattern::ClassMismatch),
    ("S56", "O56-", Pattern::ClassMismatch),
];

/// Targets at the rank floor of each selected family, over the given fields.
pub fn targets(spec: &GridSpec) -> Vec<GroupDescriptor> {
    let fields = spec.qs.clone().unwrap_or_else(|| TARGET_FIELDS.to_vec());
    let mut out = Vec::new();
    for &q in &fields {
        for kind in spec.selected_kinds() {
            let Ok(probe) = GroupDescriptor::new(kind.family, kind.sign, 45, q) else {
                continue;
            };
            if let Ok(g) = GroupDescriptor::new(kind.family, kind.sign, probe.theorem_floor(), q) {
                out.push(g);
            }
        }
    }
    out
}

fn rerun(pair: &CandidatePair) -> String {
    format!(
        "gkspec eliminate \"{}\" \"{}\"",
        pair.target, pair.candidate
    )
}

pub(crate) fn elimination(spec: &GridSpec) -> Result<Run> {
    let opts = ScanOptions {
        primes: spec
            .primes
            .clone()
            .unwrap_or_else(|| ScanOptions::default().primes),
        max_u: spec.u_max,
    };
    let targets = targets(spec);
    let mut run = Run::default();
    run.param(
        "targets",
        targets.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
    );
    run.param("primes", &opts.primes);
    run.param(
        "umax",
        opts.max_u.map_or("q^2".to_string(), |u| u.to_string()),
    );
    let mut pairs = Vec::new();
    for t in &targets {
        pairs.extend(candidates(t, &opts)?);
    }
    let results = pairs
        .par_iter()
        .map(|pair| {
            let outcome = eliminate(pair)?;
            let ok = match &outcome {
                Outcome::Eliminated(r) => r.verified && r.reverify()?,
                Outcome::NotEliminated(_) => false,
            };
            Ok((outcome, ok))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    let mut by_family: BTreeMap<(String, String), Vec<(CandidatePair, Pattern)>> = BTreeMap::new();
    let mut outcomes: Vec<Option<Failure>> = Vec::new();
    for (outcome, ok) in &results {
        let pair = *outcome.pair();
        *counts.entry(outcome.pattern().to_string()).or_default() += 1;
        by_family
            .entry((base_name(&pair.target), base_name(&pair.candidate)))
            .or_default()
            .push((pair, outcome.pattern()));
        outcomes.push((!ok).then(|| {
            let computed = match outcome {
                Outcome::Eliminated(r) => {
                    json!({ "outcome": "eliminated", "verified": false, "pattern": r.pattern })
                }
                Outcome::NotEliminated(s) => json!({
                    "outcome": "not-eliminated",
                    "pattern": s.pattern,
                    "open_k": s.open_k,
                    "reason": s.reason,
                }),
            };
            failure(
                &[
                    ("L", json!(pair.target.to_string())),
                    ("S", json!(pair.candidate.to_string())),
                ],
                json!({ "outcome": "eliminated", "verified": true }),
                computed,
                rerun(&pair),
            )
        }));
    }
    for (l, s, pattern) in EXPECTED_PATTERNS {
        let Some(found) = by_family.get(&(l.to_string(), s.to_string())) else {
            continue;
        };
        let wrong: Vec<String> = found
            .iter()
            .filter(|(_, p)| *p != pattern)
            .map(|(pair, p)| format!("{pair}: {p}"))
            .collect();
        outcomes.push((!wrong.is_empty()).then(|| {
            failure(
                &[("L", json!(l)), ("S", json!(s))],
                json!(pattern),
                json!(wrong),
                rerun(&found[0].0),
            )
        }));
        run.notes.push(format!(
            "{l} / {s}: {} pairs, expected {pattern}",
            found.len()
        ));
    }
    run.notes.push(format!(
        "{} candidate pairs; patterns {counts:?}",
        pairs.len()
    ));
    run.absorb(outcomes);
    Ok(run)
}
