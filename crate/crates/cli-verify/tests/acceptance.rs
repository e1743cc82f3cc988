//! One PASS/FAIL line per acceptance criterion; exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use cli_verify::{run_check, Check, GridSpec, VerificationReport};

struct Criterion {
    number: u32,
    title: &'static str,
    checks: &'static [Check],
    extra: fn(&[VerificationReport]) -> Result<(), String>,
}

fn none(_: &[VerificationReport]) -> Result<(), String> {
    Ok(())
}

fn note_containing<'a>(reports: &'a [VerificationReport], needle: &str) -> Option<&'a String> {
    reports
        .iter()
        .flat_map(|r| r.notes.iter())
        .find(|n| n.contains(needle))
}

fn zsigmondy_pairs(reports: &[VerificationReport]) -> Result<(), String> {
    let expected = "[(2, 1), (2, 6), (-2, 2), (-2, 3), (3, 1), (-3, 2)]";
    note_containing(reports, expected)
        .map(|_| ())
        .ok_or_else(|| "exception list differs from the six pairs".into())
}

fn zeta_extras(reports: &[VerificationReport]) -> Result<(), String> {
    note_containing(reports, "O60-(2): t = 23, T = {t-2, t-3, t-5}")
        .ok_or("O60- values not reproduced")?;
    let literal = note_containing(reports, "read literally").ok_or("no statement report")?;
    if literal.contains(" in 0 of ") {
        return Err("the literal statement was expected to disagree somewhere".into());
    }
    Ok(())
}

fn interval_exceptions(reports: &[VerificationReport]) -> Result<(), String> {
    note_containing(reports, "(8n/9, n): [35, 36, 37, 53]")
        .map(|_| ())
        .ok_or_else(|| "8/9 exception set differs".into())
}

fn elimination_patterns(reports: &[VerificationReport]) -> Result<(), String> {
    let summary = note_containing(reports, "candidate pairs; patterns").ok_or("no summary")?;
    for p in ["\"tplneq4\"", "\"class-mismatch\""] {
        if !summary.contains(p) {
            return Err(format!("pattern {p} never fired"));
        }
    }
    note_containing(reports, "O60- / O60-")
        .map(|_| ())
        .ok_or_else(|| "no O60- / O60- pair on the grid".into())
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            number: 1,
            title: "greatest primitive divisor spot values",
            checks: &[Check::GpdValues],
            extra: none,
        },
        Criterion {
            number: 2,
            title: "Zsigmondy exceptions over |a| <= 50, i <= 50",
            checks: &[Check::Zsigmondy],
            extra: zsigmondy_pairs,
        },
        Criterion {
            number: 3,
            title: "largest cocliques t, E, J over all families, q <= 13, n <= 64",
            checks: &[Check::Cocliques],
            extra: none,
        },
        Criterion {
            number: 4,
            title: "cocliques through the characteristic and through small classes",
            checks: &[Check::CharCocliques, Check::AnchoredCocliques],
            extra: none,
        },
        Criterion {
            number: 5,
            title: "zeta closed forms and T windows",
            checks: &[Check::Zeta],
            extra: zeta_extras,
        },
        Criterion {
            number: 6,
            title: "arithmetic bounds",
            checks: &[
                Check::GpdTotient,
                Check::LargeIndex,
                Check::KDivisibility,
                Check::EtaCount,
                Check::IntervalPrime,
            ],
            extra: interval_exceptions,
        },
        Criterion {
            number: 7,
            title: "pairwise torus covers agree with adjacency",
            checks: &[Check::CoverAdjacency],
            extra: none,
        },
        Criterion {
            number: 8,
            title: "every candidate of the target grid eliminated and verified",
            checks: &[Check::Elimination],
            extra: elimination_patterns,
        },
    ];
    let spec = GridSpec::acceptance();
    let mut all_ok = true;
    for c in &criteria {
        let start = Instant::now();
        let reports: Result<Vec<VerificationReport>, String> = c
            .checks
            .iter()
            .map(|&check| run_check(check, &spec).map_err(|e| format!("{check}: {e}")))
            .collect();
        let verdict = reports.and_then(|reports| {
            let cases: usize = reports.iter().map(|r| r.grid.cases).sum();
            let failed: Vec<String> = reports
                .iter()
                .filter(|r| !r.passed())
                .map(|r| {
                    let first = serde_json::to_string(&r.failures[0]).unwrap_or_default();
                    format!("{}: {} failures, first {first}", r.check, r.failures.len())
                })
                .collect();
            if !failed.is_empty() {
                return Err(failed.join("; "));
            }
            (c.extra)(&reports)?;
            Ok(cases)
        });
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(cases) => println!(
                "PASS criterion {}: {} ({cases} cases, {secs:.2}s)",
                c.number, c.title
            ),
            Err(why) => {
                all_ok = false;
                println!("FAIL criterion {}: {} ({why})", c.number, c.title);
            }
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
