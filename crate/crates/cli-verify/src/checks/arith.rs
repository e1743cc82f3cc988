use std::collections::BTreeSet;

use group_model::prime_power;
use rayon::prelude::*;
use serde_json::json;
use zsig_arith::{
    count_eta_interval, eta, eta_interval_closed_form, gpd, gpd_exceeds_half_totient,
    has_primitive_prime_divisor, ki_check, ki_check_with_bound, large_index_bounds,
    prime_free_intervals, totient, IntervalMode, KiCase, Sign, SignedBase, ZSIGMONDY_EXCEPTIONS,
};

use crate::error::Result;
use crate::grid::{Check, GridSpec};
use crate::report::{failure, Failure, Run};

const SIGNS: [Sign; 2] = [Sign::Plus, Sign::Minus];

fn rerun(check: Check, flags: &str) -> String {
    format!("gkspec verify --check {check} {flags}")
}

pub(crate) fn gpd_values(_: &GridSpec) -> Result<Run> {
    let mut run = Run::default();
    let cases: [(u64, i64, i64); 5] = [(20, 2, 41), (6, 2, 1), (3, 4, 7), (2, 2, 3), (2, -2, 1)];
    run.param(
        "values",
        cases.map(|(i, a, k)| json!({"i": i, "a": a, "k": k})),
    );
    let outcomes = cases
        .iter()
        .map(|&(i, a, k)| {
            let got = gpd(i, SignedBase::from_i64(a)?);
            Ok((got != k.into()).then(|| {
                failure(
                    &[("i", json!(i)), ("a", json!(a))],
                    json!(k),
                    json!(got.to_string()),
                    rerun(Check::GpdValues, ""),
                )
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    run.absorb(outcomes);
    Ok(run)
}

pub(crate) fn zsigmondy(spec: &GridSpec) -> Result<Run> {
    let a_max = spec.a_max.unwrap_or(50);
    let i_max = spec.i_max.unwrap_or(50);
    let mut run = Run::default();
    run.param("amax", a_max);
    run.param("imax", i_max);
    let bases: Vec<i64> = (2..=a_max as i64).flat_map(|m| [m, -m]).collect();
    let rows = bases
        .par_iter()
        .map(|&a| {
            let base = SignedBase::from_i64(a)?;
            Ok((1..=i_max)
                .map(|i| (a, i, has_primitive_prime_divisor(i, base)))
                .collect::<Vec<_>>())
        })
        .collect::<Result<Vec<_>>>()?;
    let expected: BTreeSet<(i64, u64)> = ZSIGMONDY_EXCEPTIONS.into_iter().collect();
    let mut found = Vec::new();
    let outcomes = rows
        .into_iter()
        .flatten()
        .map(|(a, i, has)| {
            if !has {
                found.push((a, i));
            }
            let exception = expected.contains(&(a, i));
            (has == exception).then(|| {
                failure(
                    &[("a", json!(a)), ("i", json!(i))],
                    json!({ "primitive_divisor": !exception }),
                    json!({ "primitive_divisor": has }),
                    rerun(
                        Check::Zsigmondy,
                        &format!("--amax {} --imax {i}", a.unsigned_abs()),
                    ),
                )
            })
        })
        .collect();
    run.absorb(outcomes);
    run.notes
        .push(format!("bases without a primitive divisor: {found:?}"));
    Ok(run)
}

pub(crate) fn gpd_totient(spec: &GridSpec) -> Result<Run> {
    let a_max = spec.a_max.unwrap_or(40);
    let i_max = spec.i_max.unwrap_or(60);
    let mut run = Run::default();
    run.param("amax", a_max);
    run.param("imax", i_max);
    run.param("excluded", [(2, 3), (2, 6)]);
    let rows = (2..=a_max)
        .into_par_iter()
        .map(|a| {
            let mut out = Vec::new();
            for i in 3..=i_max {
                for sign in SIGNS {
                    out.push((a, i, sign, gpd_exceeds_half_totient(a, i, sign)?));
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut excluded_violations = Vec::new();
    let mut outcomes = Vec::new();
    for (a, i, sign, holds) in rows.into_iter().flatten() {
        if a == 2 && (i == 3 || i == 6) {
            if !holds {
                excluded_violations.push(format!("k_{i}({}{a})", sign.symbol()));
            }
            continue;
        }
        outcomes.push((!holds).then(|| {
            failure(
                &[
                    ("a", json!(a)),
                    ("i", json!(i)),
                    ("sign", json!(sign.to_string())),
                ],
                json!(format!("k_i > a^{}", totient(i) as f64 / 2.0)),
                json!(gpd(i, SignedBase::new(a, sign).unwrap()).to_string()),
                rerun(Check::GpdTotient, &format!("--amax {a} --imax {i}")),
            )
        }));
    }
    run.absorb(outcomes);
    run.notes.push(format!(
        "the excluded pairs fail at {}",
        excluded_violations.join(", ")
    ));
    Ok(run)
}

/// Indices `j` with `η(j) ≥ 11` and `φ(j) ≤ 14`, found by search.
pub fn small_totient_indices() -> BTreeSet<u64> {
    // φ(j) ≥ √j for j > 6, so j ≤ 196 covers φ(j) ≤ 14.
    (1..=1000u64)
        .filter(|&j| eta(j) >= 11 && totient(j) <= 14)
        .collect()
}

pub const SMALL_TOTIENT_SET: [u64; 11] = [42, 36, 30, 28, 26, 24, 22, 21, 15, 13, 11];

pub(crate) fn large_index(spec: &GridSpec) -> Result<Run> {
    let u_max = spec.u_max.unwrap_or(97);
    let j_max = spec.i_max.unwrap_or(60);
    let primes = spec.primes.clone().unwrap_or_else(|| vec![3, 5, 7, 11]);
    let mut run = Run::default();
    run.param("umax", u_max);
    run.param("jmax", j_max);
    run.param("primes", &primes);
    let stated: BTreeSet<u64> = SMALL_TOTIENT_SET.into_iter().collect();
    let found = small_totient_indices();
    let mut outcomes: Vec<Option<Failure>> = vec![(found != stated).then(|| {
        failure(
            &[("set", json!("eta >= 11, totient <= 14"))],
            json!(stated),
            json!(found),
            rerun(Check::LargeIndex, ""),
        )
    })];
    let mut js: BTreeSet<u64> = stated;
    js.extend((1..=j_max).filter(|&j| eta(j) >= 11));
    let us: Vec<u64> = (2..=u_max).filter(|&u| prime_power(u).is_some()).collect();
    let odd: Vec<u64> = primes.into_iter().filter(|&p| p > 2).collect();
    let rows = us
        .par_iter()
        .map(|&u| {
            let mut out = Vec::new();
            for sign in SIGNS {
                for &j in &js {
                    for &p in &odd {
                        let (first, second) = large_index_bounds(u, sign, j, p)?;
                        out.push((!(first && second)).then(|| {
                            failure(
                                &[
                                    ("u", json!(u)),
                                    ("sign", json!(sign.to_string())),
                                    ("j", json!(j)),
                                    ("p", json!(p)),
                                ],
                                json!({ "k_j > u^7": true, "k_jp > u^5p": true }),
                                json!({ "k_j > u^7": first, "k_jp > u^5p": second }),
                                rerun(
                                    Check::LargeIndex,
                                    &format!("--umax {u} --imax {j} --primes {p}"),
                                ),
                            )
                        }));
                    }
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    outcomes.extend(rows.into_iter().flatten());
    run.absorb(outcomes);
    run.notes.push(format!(
        "{} fields, {} indices j, odd primes {odd:?}",
        us.len(),
        js.len()
    ));
    Ok(run)
}

pub(crate) fn k_divisibility(spec: &GridSpec) -> Result<Run> {
    let a_max = spec.a_max.unwrap_or(20);
    let gamma_max = spec.gamma_max.unwrap_or(5);
    let mut run = Run::default();
    run.param("amax", a_max);
    run.param("gamma_max", gamma_max);
    let rows = (2..=a_max)
        .into_par_iter()
        .map(|a| {
            let base = SignedBase::plus(a)?;
            let mut out = Vec::new();
            for gamma in 2..=gamma_max {
                for case in KiCase::ALL {
                    let c = ki_check(base, case, gamma)?;
                    let stated = if case.stated_bound(gamma) != case.bound(gamma) {
                        let s = ki_check_with_bound(base, case, gamma, case.stated_bound(gamma))?;
                        Some(s.holds())
                    } else {
                        None
                    };
                    out.push((a, gamma, case, c, stated));
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut stated_total = 0;
    let mut stated_failures = Vec::new();
    let mut outcomes = Vec::new();
    for (a, gamma, _, c, stated) in rows.into_iter().flatten() {
        if let Some(ok) = stated {
            stated_total += 1;
            if !ok {
                stated_failures.push(format!("a={a} i={}", c.index));
            }
        }
        outcomes.push((!c.holds()).then(|| {
            failure(
                &[
                    ("a", json!(a)),
                    ("gamma", json!(gamma)),
                    ("index", json!(c.index)),
                ],
                json!({ "order_divides": c.bound, "residual": "1" }),
                json!({ "order_divides": c.bound, "residual": c.residual.to_string() }),
                rerun(
                    Check::KDivisibility,
                    &format!("--amax {a} --gamma-max {gamma}"),
                ),
            )
        }));
    }
    run.absorb(outcomes);
    let first: Vec<&String> = stated_failures.iter().take(3).collect();
    run.notes.push(format!(
        "index 5·2^(γ+1): the printed bound 2^(γ+1) fails in {} of {stated_total} cases (first {first:?}); the checked bound is 2^(γ+2)",
        stated_failures.len()
    ));
    Ok(run)
}

pub(crate) fn eta_count(spec: &GridSpec) -> Result<Run> {
    let b_max = spec.b_max.unwrap_or(200);
    let mut run = Run::default();
    run.param("bmax", b_max);
    let outcomes: Vec<Option<Failure>> = (2..=b_max)
        .into_par_iter()
        .flat_map_iter(|b| {
            (1..b).map(move |a| {
                count_eta_interval(a, b).err().map(|e| {
                    failure(
                        &[("a", json!(a)), ("b", json!(b))],
                        json!(eta_interval_closed_form(a, b)),
                        json!(e.to_string()),
                        rerun(Check::EtaCount, &format!("--bmax {b}")),
                    )
                })
            })
        })
        .collect();
    run.absorb(outcomes);
    Ok(run)
}

pub(crate) fn interval_prime(spec: &GridSpec) -> Result<Run> {
    let n_max = spec.n_max.unwrap_or(100_000).max(30);
    let mut run = Run::default();
    run.param("nmax", n_max);
    let found: Vec<(IntervalMode, Vec<u64>)> =
        [IntervalMode::FiveSixths, IntervalMode::EightNinths]
            .par_iter()
            .map(|&mode| (mode, prime_free_intervals(n_max, mode)))
            .collect();
    let mut outcomes = Vec::new();
    for (mode, free) in found {
        let (num, den) = mode.ratio();
        let expected: Vec<u64> = mode
            .exceptions()
            .iter()
            .copied()
            .filter(|&n| n <= n_max)
            .collect();
        run.notes.push(format!(
            "n in 30..={n_max} with no prime in ({num}n/{den}, n): {free:?}"
        ));
        outcomes.push((free != expected).then(|| {
            failure(
                &[
                    ("interval", json!(format!("({num}n/{den}, n)"))),
                    ("nmax", json!(n_max)),
                ],
                json!(expected),
                json!(free),
                rerun(Check::IntervalPrime, &format!("--nmax {n_max}")),
            )
        }));
    }
    run.absorb(outcomes);
    Ok(run)
}
