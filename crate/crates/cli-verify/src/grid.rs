use std::fmt;
use std::str::FromStr;

use clap::ValueEnum;
use group_model::{prime_power, Family, GroupDescriptor, Sign};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

/// A family together with its sign, as selected by `--families`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Kind {
    pub family: Family,
    pub sign: Sign,
}

impl Kind {
    pub const ALL: [Kind; 6] = [
        Kind::new(Family::LinearUnitary, Sign::Plus),
        Kind::new(Family::LinearUnitary, Sign::Minus),
        Kind::new(Family::Symplectic, Sign::Plus),
        Kind::new(Family::OddOrthogonal, Sign::Plus),
        Kind::new(Family::EvenOrthogonal, Sign::Plus),
        Kind::new(Family::EvenOrthogonal, Sign::Minus),
    ];

    pub const fn new(family: Family, sign: Sign) -> Kind {
        Kind { family, sign }
    }

    pub fn of(g: &GroupDescriptor) -> Kind {
        Kind::new(g.family(), g.sign())
    }

    pub fn label(self) -> &'static str {
        match (self.family, self.sign) {
            (Family::LinearUnitary, Sign::Plus) => "L+",
            (Family::LinearUnitary, Sign::Minus) => "L-",
            (Family::Symplectic, _) => "S",
            (Family::OddOrthogonal, _) => "O",
            (Family::EvenOrthogonal, Sign::Plus) => "O+",
            (Family::EvenOrthogonal, Sign::Minus) => "O-",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for Kind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

/// Parses `all` or a comma list of `L`, `L+`, `L-`, `U`, `S`, `O`, `O+`, `O-`.
pub fn parse_kinds(text: &str) -> Result<Vec<Kind>> {
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let picked: Vec<Kind> = match part {
            "all" => Kind::ALL.to_vec(),
            "L" => Kind::ALL[..2].to_vec(),
            "L+" => vec![Kind::ALL[0]],
            "L-" | "U" => vec![Kind::ALL[1]],
            "S" => vec![Kind::ALL[2]],
            "O" => vec![Kind::ALL[3]],
            "O+" => vec![Kind::ALL[4]],
            "O-" => vec![Kind::ALL[5]],
            other => {
                return Err(CliError::Usage(format!(
                    "unknown family {other:?}; use all, L, L+, L-, U, S, O, O+ or O-"
                )))
            }
        };
        out.extend(picked);
    }
    out.sort();
    out.dedup();
    if out.is_empty() {
        return Err(CliError::Usage("no families selected".into()));
    }
    Ok(out)
}

/// Parses a comma list of integers.
pub fn parse_list(text: &str) -> Result<Vec<u64>> {
    let mut out: Vec<u64> = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse()
                .map_err(|_| CliError::Usage(format!("{s:?} is not a non-negative integer")))
        })
        .collect::<Result<_>>()?;
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// The verification campaigns `verify` can run.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, ValueEnum,
)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// Spot values of the greatest primitive divisor.
    GpdValues,
    /// Bases and indices without a primitive prime divisor.
    Zsigmondy,
    /// t(L), E(L), J(L) against their closed forms.
    Cocliques,
    /// Cocliques through the characteristic against their closed forms.
    CharCocliques,
    /// Cocliques through small index classes against their rows.
    AnchoredCocliques,
    /// ζ closed forms, M/N exceptions and T windows.
    Zeta,
    /// k_i(±a) > a^{φ(i)/2}.
    GpdTotient,
    /// k_j(±u) > u^7 and k_{jp}(±u) > u^{5p} for η(j) ≥ 11.
    LargeIndex,
    /// Order bounds for primes dividing k_i(a) − 1.
    KDivisibility,
    /// Counting indices with η in an interval.
    EtaCount,
    /// Primes in (5n/6, n) and (8n/9, n).
    IntervalPrime,
    /// Torus covers of index pairs against graph adjacency.
    CoverAdjacency,
    /// Every candidate of the target grid is eliminated with a verified report.
    Elimination,
}

impl Check {
    pub fn id(self) -> &'static str {
        match self {
            Check::GpdValues => "gpd-values",
            Check::Zsigmondy => "zsigmondy",
            Check::Cocliques => "cocliques",
            Check::CharCocliques => "char-cocliques",
            Check::AnchoredCocliques => "anchored-cocliques",
            Check::Zeta => "zeta",
            Check::GpdTotient => "gpd-totient",
            Check::LargeIndex => "large-index",
            Check::KDivisibility => "k-divisibility",
            Check::EtaCount => "eta-count",
            Check::IntervalPrime => "interval-prime",
            Check::CoverAdjacency => "cover-adjacency",
            Check::Elimination => "elimination",
        }
    }

    pub fn all() -> Vec<Check> {
        Check::value_variants().to_vec()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Check {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Check> {
        <Check as ValueEnum>::from_str(s, false).map_err(CliError::Usage)
    }
}

pub const FIELDS: [u64; 9] = [2, 3, 4, 5, 7, 8, 9, 11, 13];
pub const TARGET_FIELDS: [u64; 4] = [3, 4, 5, 9];
pub const GROUP_N_MAX: u32 = 64;

/// Parameters of a verification campaign; `None` selects each check's own default.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec {
    pub checks: Vec<Check>,
    pub kinds: Vec<Kind>,
    pub sign: Option<Sign>,
    pub n_min: Option<u32>,
    pub n_max: Option<u64>,
    pub qs: Option<Vec<u64>>,
    pub a_max: Option<u64>,
    pub i_max: Option<u64>,
    pub gamma_max: Option<u32>,
    pub u_max: Option<u64>,
    pub b_max: Option<u64>,
    pub primes: Option<Vec<u64>>,
    /// Worker threads; 0 uses every core.
    pub workers: usize,
    /// Whether reports carry their wall time.
    pub timing: bool,
}

impl GridSpec {
    /// Every check on its default grid.
    pub fn acceptance() -> GridSpec {
        GridSpec::only(Check::all())
    }

    pub fn only(checks: Vec<Check>) -> GridSpec {
        GridSpec {
            checks,
            kinds: Kind::ALL.to_vec(),
            sign: None,
            n_min: None,
            n_max: None,
            qs: None,
            a_max: None,
            i_max: None,
            gamma_max: None,
            u_max: None,
            b_max: None,
            primes: None,
            workers: 0,
            timing: true,
        }
    }

    /// Rejects grids no check can run on.
    pub fn validate(&self) -> Result<()> {
        let usage = |m: String| Err(CliError::Usage(m));
        if self.checks.is_empty() {
            return usage("no checks selected; pass --check or --all".into());
        }
        if self.selected_kinds().is_empty() {
            return usage("the sign filter leaves no families".into());
        }
        if let Some(qs) = &self.qs {
            if qs.is_empty() {
                return usage("empty --qs".into());
            }
            if let Some(&q) = qs.iter().find(|&&q| prime_power(q).is_none()) {
                return usage(format!("q = {q} is not a prime power"));
            }
        }
        if let Some(ps) = &self.primes {
            if let Some(&p) = ps
                .iter()
                .find(|&&p| prime_power(p).map_or(true, |(_, f)| f != 1))
            {
                return usage(format!("{p} is not a prime"));
            }
        }
        if let (Some(lo), Some(hi)) = (self.n_min, self.n_max) {
            if lo as u64 > hi {
                return usage(format!("--nmin {lo} exceeds --nmax {hi}"));
            }
        }
        if self.a_max.is_some_and(|a| a < 2) {
            return usage("--amax must be at least 2".into());
        }
        if self.i_max.is_some_and(|i| i < 1) {
            return usage("--imax must be at least 1".into());
        }
        if self.gamma_max.is_some_and(|g| !(2..=16).contains(&g)) {
            return usage("--gamma-max must lie in 2..=16".into());
        }
        if self.b_max.is_some_and(|b| b < 2) {
            return usage("--bmax must be at least 2".into());
        }
        if self.u_max.is_some_and(|u| u < 2) {
            return usage("--umax must be at least 2".into());
        }
        Ok(())
    }

    pub fn selected_kinds(&self) -> Vec<Kind> {
        self.kinds
            .iter()
            .copied()
            .filter(|k| match self.sign {
                None => true,
                Some(s) => !k.family.is_signed() || k.sign == s,
            })
            .collect()
    }

    pub fn group_fields(&self) -> Vec<u64> {
        self.qs.clone().unwrap_or_else(|| FIELDS.to_vec())
    }

    pub fn group_n_max(&self) -> u32 {
        self.n_max
            .map_or(GROUP_N_MAX, |n| n.min(u32::MAX as u64) as u32)
    }
}

/// A requested lower rank raised to the floor a check is stated from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Clamp {
    pub family: Kind,
    pub requested: u32,
    pub floor: u32,
}

/// Groups of the selected kinds, fields and ranks, each rank range starting at `floor`.
pub fn group_grid(
    spec: &GridSpec,
    floor: impl Fn(Kind) -> u32,
) -> (Vec<GroupDescriptor>, Vec<Clamp>) {
    let mut groups = Vec::new();
    let mut clamps = Vec::new();
    let fields = spec.group_fields();
    let hi = spec.group_n_max();
    for kind in spec.selected_kinds() {
        let fl = floor(kind).max(kind.family.min_rank());
        let lo = match spec.n_min {
            Some(req) if req < fl => {
                clamps.push(Clamp {
                    family: kind,
                    requested: req,
                    floor: fl,
                });
                fl
            }
            Some(req) => req,
            None => fl,
        };
        for n in lo..=hi {
            for &q in &fields {
                if let Ok(g) = GroupDescriptor::new(kind.family, kind.sign, n, q) {
                    groups.push(g);
                }
            }
        }
    }
    (groups, clamps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kind_lists() {
        assert_eq!(parse_kinds("all").unwrap().len(), 6);
        assert_eq!(parse_kinds("L,S").unwrap().len(), 3);
        assert_eq!(
            parse_kinds("U, O-").unwrap(),
            vec![Kind::ALL[1], Kind::ALL[5]]
        );
        assert!(parse_kinds("Z").is_err());
    }

    #[test]
    fn check_ids_round_trip() {
        for c in Check::all() {
            assert_eq!(c.id().parse::<Check>().unwrap(), c);
        }
        assert_eq!(Check::KDivisibility.id(), "k-divisibility");
    }

    #[test]
    fn clamping_is_recorded() {
        let mut spec = GridSpec::only(vec![Check::Cocliques]);
        spec.kinds = vec![Kind::ALL[2]];
        spec.qs = Some(vec![3]);
        spec.n_min = Some(5);
        spec.n_max = Some(14);
        let (groups, clamps) = group_grid(&spec, |_| 13);
        assert_eq!(groups.len(), 2);
        assert_eq!(
            clamps,
            vec![Clamp {
                family: Kind::ALL[2],
                requested: 5,
                floor: 13
            }]
        );
        spec.n_min = Some(14);
        assert!(group_grid(&spec, |_| 13).1.is_empty());
    }

    #[test]
    fn malformed_grids() {
        let mut spec = GridSpec::acceptance();
        spec.qs = Some(vec![6]);
        assert!(spec.validate().is_err());
        let mut spec = GridSpec::acceptance();
        spec.n_min = Some(40);
        spec.n_max = Some(30);
        assert!(spec.validate().is_err());
        assert!(GridSpec::only(vec![]).validate().is_err());
        assert!(GridSpec::acceptance().validate().is_ok());
    }
}
