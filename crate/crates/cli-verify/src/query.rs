use std::collections::BTreeMap;

use clap::ValueEnum;
use eliminator::{candidates, eliminate, CandidatePair, Outcome, ScanOptions};
use group_model::{max_root_height, p_exponent, GroupDescriptor};
use prime_graph::{
    char_coclique_formulas, closed_form_discrepancies, coclique_formulas, to_dot, to_json,
    zeta_closed_form, zeta_floor, zeta_table, IndexGraph, Vertex, TABLE_FLOOR,
};
use rayon::prelude::*;
use serde_json::{json, Value};
use torus_spectra::{big_spectral_element, max_spectral_bound};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Query {
    /// Largest coclique size t(L).
    T,
    /// t, E, J and the cocliques through the characteristic.
    Cocliques,
    /// M, N, ζ and the values T.
    Zeta,
    /// The index-level nonadjacency graph.
    Graph,
    /// A large element order and the bound on all element orders.
    Bigk,
    /// Exponent of a Sylow p-subgroup.
    Pexp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    Dot,
    Json,
}

fn envelope(g: &GroupDescriptor, what: Query, value: Value, sources: Value) -> Value {
    json!({
        "group": g.to_string(),
        "name": g.short_name(),
        "query": what.to_possible_value().map(|v| v.get_name().to_string()),
        "value": value,
        "sources": sources,
    })
}

fn indices(vs: std::collections::BTreeSet<Vertex>) -> Vec<u64> {
    vs.into_iter()
        .filter_map(|v| match v {
            Vertex::Index(i) => Some(i),
            Vertex::Characteristic => None,
        })
        .collect()
}

/// Computes one invariant, reporting the exact value next to its closed form where one exists.
pub fn query(g: &GroupDescriptor, what: Query) -> Result<Value> {
    let graph = IndexGraph::new(g)?;
    Ok(match what {
        Query::T => {
            let exact = graph.t();
            let formula = coclique_formulas(g).ok().map(|r| r.t);
            let formula = formula.map(|t| (json!(t), t == exact));
            envelope(
                g,
                what,
                json!(exact),
                sources(json!(exact), formula, TABLE_FLOOR, g),
            )
        }
        Query::Cocliques => {
            let a = graph.analysis();
            let exact = json!({
                "t": a.t,
                "E": a.e_set,
                "J": a.j_set,
                "t_p": graph.anchored_size(Vertex::Characteristic)?,
                "J_p": indices(graph.anchored_union(Vertex::Characteristic)?),
            });
            let formula = coclique_formulas(g).ok().map(|r| {
                let mut j = r.e_set.clone();
                j.extend(&r.j_minus_e);
                let ch = char_coclique_formulas(g).ok();
                json!({
                    "t": r.t,
                    "E": r.e_set,
                    "J": j,
                    "t_p": ch.as_ref().map(|c| c.t),
                    "J_p": ch.map(|c| c.j),
                })
            });
            let formula = formula.map(|f| {
                let ok = entries_agree(&exact, &f);
                (f, ok)
            });
            envelope(
                g,
                what,
                exact.clone(),
                sources(exact, formula, TABLE_FLOOR, g),
            )
        }
        Query::Zeta => {
            let z = zeta_table(&graph)?;
            let mut t_values: Vec<usize> = z.t_values.iter().copied().collect();
            t_values.reverse();
            let offsets: Vec<String> = t_values.iter().map(|&x| format!("t-{}", z.t - x)).collect();
            let value = json!({ "t": z.t, "T": t_values, "T_offsets": offsets });
            let exact = json!({ "M": z.m, "N": z.n, "zeta": z.zeta });
            let floor = zeta_floor(g);
            let formula = (g.n() >= floor).then(|| {
                let forms: BTreeMap<u64, u64> =
                    z.m.iter().map(|&i| (i, zeta_closed_form(g, i))).collect();
                let d = closed_form_discrepancies(&z);
                let ok = d.is_empty();
                (json!({ "zeta_on_M": forms, "discrepancies": d }), ok)
            });
            envelope(g, what, value, sources(exact, formula, floor, g))
        }
        Query::Graph => {
            let exact = to_json(&graph)?;
            envelope(g, what, exact, json!({ "exact": "index graph" }))
        }
        Query::Bigk => {
            let element = big_spectral_element(g)?;
            let bound = max_spectral_bound(g)?;
            let value = json!({ "element": element, "bound": bound.to_string() });
            envelope(
                g,
                what,
                value,
                json!({ "formula": "cyclotomic witness and q^(m+1)/(q-1)" }),
            )
        }
        Query::Pexp => {
            let value = p_exponent(g);
            envelope(
                g,
                what,
                json!(value),
                json!({ "formula": { "p": g.p(), "root_height": max_root_height(g), "least_power_above": value } }),
            )
        }
    })
}

fn sources(exact: Value, formula: Option<(Value, bool)>, floor: u32, g: &GroupDescriptor) -> Value {
    match formula {
        Some((f, agree)) => json!({ "exact": exact, "formula": f, "agree": agree }),
        None => json!({
            "exact": exact,
            "formula": format!("no closed form below n = {floor} (n = {})", g.n()),
        }),
    }
}

/// Whether every non-null formula entry equals the exact entry of the same key.
fn entries_agree(exact: &Value, formula: &Value) -> bool {
    formula.as_object().is_some_and(|f| {
        f.iter()
            .all(|(k, v)| v.is_null() || exact.get(k) == Some(v))
    })
}

pub fn export(g: &GroupDescriptor, format: ExportFormat) -> Result<String> {
    let graph = IndexGraph::new(g)?;
    Ok(match format {
        ExportFormat::Dot => to_dot(&graph)?,
        ExportFormat::Json => {
            serde_json::to_string_pretty(&to_json(&graph)?).unwrap_or_default() + "\n"
        }
    })
}

fn require_target(l: &GroupDescriptor) -> Result<()> {
    if !l.in_theorem_range() {
        return Err(CliError::Range(format!(
            "{} is out of scope: n = {} is below the floor n ≥ {}",
            l.short_name(),
            l.n(),
            l.theorem_floor()
        )));
    }
    Ok(())
}

/// Eliminates one pair after checking both sides are in scope.
pub fn eliminate_pair(l: &GroupDescriptor, s: &GroupDescriptor) -> Result<Outcome> {
    require_target(l)?;
    if s.n() < TABLE_FLOOR {
        return Err(CliError::Range(format!(
            "{} is out of scope: n = {} is below the floor n ≥ {TABLE_FLOOR}",
            s.short_name(),
            s.n()
        )));
    }
    if l.p() == s.p() {
        return Err(CliError::Range(format!(
            "{} and {} share the characteristic {}",
            l.short_name(),
            s.short_name(),
            l.p()
        )));
    }
    Ok(eliminate(&CandidatePair::new(*l, *s)?)?)
}

/// Eliminates every cross-characteristic candidate of `l`; results follow candidate order.
pub fn eliminate_scan(l: &GroupDescriptor, opts: &ScanOptions) -> Result<Vec<Outcome>> {
    require_target(l)?;
    let pairs = candidates(l, opts)?;
    pairs.par_iter().map(|p| Ok(eliminate(p)?)).collect()
}
