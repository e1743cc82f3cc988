mod arith;
mod elimination;
mod graphs;

use std::time::Instant;

pub use arith::{small_totient_indices, SMALL_TOTIENT_SET};
pub use elimination::{base_name, targets, EXPECTED_PATTERNS};
pub use graphs::expected_window;

use crate::error::Result;
use crate::grid::{Check, GridSpec};
use crate::report::VerificationReport;

/// Runs one check on the current rayon pool.
pub fn run_check(check: Check, spec: &GridSpec) -> Result<VerificationReport> {
    let start = Instant::now();
    let run = match check {
        Check::GpdValues => arith::gpd_values(spec),
        Check::Zsigmondy => arith::zsigmondy(spec),
        Check::Cocliques => graphs::cocliques(spec),
        Check::CharCocliques => graphs::char_cocliques(spec),
        Check::AnchoredCocliques => graphs::anchored_cocliques(spec),
        Check::Zeta => graphs::zeta(spec),
        Check::GpdTotient => arith::gpd_totient(spec),
        Check::LargeIndex => arith::large_index(spec),
        Check::KDivisibility => arith::k_divisibility(spec),
        Check::EtaCount => arith::eta_count(spec),
        Check::IntervalPrime => arith::interval_prime(spec),
        Check::CoverAdjacency => graphs::cover_adjacency(spec),
        Check::Elimination => elimination::elimination(spec),
    }?;
    let wall = spec.timing.then(|| start.elapsed().as_millis() as u64);
    Ok(run.into_report(check, wall))
}

/// Runs every selected check on a pool of `spec.workers` threads, handing each report to
/// `sink` as it completes.
pub fn verify_with(
    spec: &GridSpec,
    mut sink: impl FnMut(&VerificationReport),
) -> Result<Vec<VerificationReport>> {
    spec.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.workers)
        .build()?;
    let mut out = Vec::new();
    for &check in &spec.checks {
        let report = pool.install(|| run_check(check, spec))?;
        sink(&report);
        out.push(report);
    }
    Ok(out)
}

pub fn verify(spec: &GridSpec) -> Result<Vec<VerificationReport>> {
    verify_with(spec, |_| {})
}
