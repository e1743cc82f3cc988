use std::collections::BTreeSet;

use group_model::{valid_indices, Family, GroupDescriptor, Sign};
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use zsig_arith::{eta, nu_eps};

use crate::error::{GraphError, Result};

pub const TABLE_FLOOR: u32 = 13;

/// Largest cocliques: t(L), E(L) and J(L) \ E(L).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocliqueRow {
    pub t: usize,
    pub e_set: BTreeSet<u64>,
    pub j_minus_e: BTreeSet<u64>,
}

/// Cocliques through the characteristic: t(p,L) and J(p,L).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharCocliqueRow {
    pub t: usize,
    pub j: BTreeSet<u64>,
}

/// Comparison of `|εq − 1|_r` with `n_r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RPartRelation {
    Equal,
    Greater,
    Less,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AnchoredCondition {
    Always,
    Modulo { modulus: u64, residue: u64 },
    RPart(RPartRelation),
}

/// Small cocliques through a prime `r` with `e(r,q) = e`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnchoredRow {
    pub e: u64,
    pub condition: AnchoredCondition,
    pub t: usize,
    pub j: BTreeSet<u64>,
    /// Whether the row is decided by the index alone (`e > 2`).
    pub index_level: bool,
}

fn require_floor(group: &GroupDescriptor, floor: u32, table: &str) -> Result<()> {
    if group.n() < floor {
        return Err(GraphError::Range(format!(
            "{table} needs n ≥ {floor}, got n = {} for {}",
            group.n(),
            group.short_name()
        )));
    }
    Ok(())
}

fn half(x: u64) -> Ratio<u64> {
    Ratio::new(x, 2)
}

fn r(x: u64) -> Ratio<u64> {
    Ratio::from_integer(x)
}

pub fn coclique_formulas(group: &GroupDescriptor) -> Result<CocliqueRow> {
    require_floor(group, TABLE_FLOOR, "the largest-coclique table")?;
    let n = group.n() as u64;
    let sign = group.sign();
    let pick = |cond: &dyn Fn(u64) -> bool| -> BTreeSet<u64> {
        valid_indices(group)
            .into_iter()
            .filter(|&i| i > 2 && cond(i))
            .collect()
    };
    let h = |i: u64| r(eta(i));
    let set = |xs: &[u64]| xs.iter().copied().collect::<BTreeSet<u64>>();
    let (t, e_set, extra) = match group.family() {
        Family::LinearUnitary => {
            let v = |i: u64| r(nu_eps(i, sign));
            if n % 2 == 1 {
                (
                    (n + 1) / 2,
                    pick(&|i| half(n) < v(i) && v(i) <= r(n)),
                    set(&[]),
                )
            } else {
                (
                    n / 2,
                    pick(&|i| half(n) < v(i) && v(i) < r(n)),
                    set(&[nu_eps(n / 2, sign), nu_eps(n, sign)]),
                )
            }
        }
        Family::Symplectic | Family::OddOrthogonal => match n % 4 {
            0 => ((3 * n + 4) / 4, pick(&|i| half(n) <= h(i)), set(&[])),
            1 => ((3 * n + 5) / 4, pick(&|i| half(n) < h(i)), set(&[])),
            2 => ((3 * n + 2) / 4, pick(&|i| half(n) < h(i)), set(&[n / 2, n])),
            _ => (
                (3 * n + 3) / 4,
                pick(&|i| half(n + 1) < h(i)),
                set(&[(n - 1) / 2, n - 1, n + 1]),
            ),
        },
        Family::EvenOrthogonal => match (sign, n % 4) {
            (Sign::Plus, 0) => (
                3 * n / 4,
                pick(&|i| half(n) <= h(i) && i != 2 * n),
                set(&[]),
            ),
            (Sign::Plus, 1) => (
                (3 * n + 1) / 4,
                pick(&|i| half(n) < h(i) && i != 2 * n && i != n + 1),
                set(&[n - 1, n + 1]),
            ),
            (Sign::Plus, 2) => (
                (3 * n - 2) / 4,
                pick(&|i| half(n) < h(i) && i != 2 * n),
                set(&[n / 2, n]),
            ),
            (Sign::Plus, _) => (
                (3 * n + 3) / 4,
                pick(&|i| half(n - 1) <= h(i) && i != 2 * n && i != n - 1),
                set(&[]),
            ),
            (Sign::Minus, 0) => ((3 * n + 4) / 4, pick(&|i| half(n) <= h(i)), set(&[])),
            (Sign::Minus, 1) => (
                (3 * n + 1) / 4,
                pick(&|i| half(n) < h(i) && i != n && i != (n + 1) / 2),
                set(&[(n + 1) / 2, n - 1]),
            ),
            (Sign::Minus, 2) => (
                (3 * n + 2) / 4,
                pick(&|i| half(n) < h(i)),
                set(&[n / 2, n - 2, n]),
            ),
            (Sign::Minus, _) => (
                (3 * n + 3) / 4,
                pick(&|i| half(n - 1) <= h(i) && i != n && i != (n - 1) / 2),
                set(&[]),
            ),
        },
    };
    Ok(CocliqueRow {
        t: t as usize,
        e_set,
        j_minus_e: extra,
    })
}

fn char_row_excluded(group: &GroupDescriptor) -> Option<String> {
    let n = group.n();
    let q = group.q();
    let bad = match group.family() {
        Family::LinearUnitary => {
            let eq = group.sign().unit() * q as i64;
            n < 4 || matches!((n, eq), (4, -2) | (6, 2) | (7, 2))
        }
        Family::Symplectic | Family::OddOrthogonal => n < 3 || (n, q) == (3, 2),
        Family::EvenOrthogonal => n < 4 || (n, q) == (4, 2),
    };
    bad.then(|| format!("{} is outside the characteristic table", group.short_name()))
}

pub fn char_coclique_formulas(group: &GroupDescriptor) -> Result<CharCocliqueRow> {
    if let Some(msg) = char_row_excluded(group) {
        return Err(GraphError::Range(msg));
    }
    let n = group.n() as u64;
    let j: Vec<u64> = match group.family() {
        Family::LinearUnitary => vec![nu_eps(n - 1, group.sign()), nu_eps(n, group.sign())],
        Family::Symplectic | Family::OddOrthogonal if n % 2 == 0 => vec![2 * n],
        Family::Symplectic | Family::OddOrthogonal => vec![n, 2 * n],
        Family::EvenOrthogonal => match (group.sign(), n % 2) {
            (Sign::Plus, 0) => vec![n - 1, 2 * n - 2],
            (Sign::Plus, _) => vec![n, 2 * n - 2],
            (Sign::Minus, 0) => vec![n - 1, 2 * n - 2, 2 * n],
            (Sign::Minus, _) => vec![2 * n - 2, 2 * n],
        },
    };
    let j: BTreeSet<u64> = j.into_iter().collect();
    Ok(CharCocliqueRow { t: j.len() + 1, j })
}

struct RawRow {
    e: u64,
    condition: AnchoredCondition,
    t: usize,
    j: Vec<u64>,
}

fn row(e: u64, condition: AnchoredCondition, t: usize, j: Vec<u64>) -> RawRow {
    RawRow { e, condition, t, j }
}

fn modulo(modulus: u64, residue: u64) -> AnchoredCondition {
    AnchoredCondition::Modulo { modulus, residue }
}

/// All rows of the small-coclique table that apply at this `n`.
pub fn anchored_rows(group: &GroupDescriptor) -> Result<Vec<AnchoredRow>> {
    require_floor(group, TABLE_FLOOR, "the small-coclique table")?;
    let n = group.n() as u64;
    let s = group.sign();
    let v = |k: u64| nu_eps(k, s);
    use AnchoredCondition::Always;
    let rows: Vec<RawRow> = match group.family() {
        Family::LinearUnitary => {
            let four = [
                vec![n - 3, n - 2, n - 1],
                vec![n - 3, n - 2, n],
                vec![n - 3, n - 1, n],
                vec![n - 2, n - 1, n],
            ];
            let three = [vec![n - 2, n - 1], vec![n - 2, n], vec![n - 1, n]];
            vec![
                row(
                    v(1),
                    AnchoredCondition::RPart(RPartRelation::Equal),
                    3,
                    vec![v(n - 1), v(n)],
                ),
                row(
                    v(1),
                    AnchoredCondition::RPart(RPartRelation::Greater),
                    2,
                    vec![v(n)],
                ),
                row(
                    v(1),
                    AnchoredCondition::RPart(RPartRelation::Less),
                    2,
                    vec![v(n - 1)],
                ),
                row(
                    v(2),
                    modulo(2, n % 2),
                    2,
                    vec![if n % 2 == 0 { v(n - 1) } else { v(n) }],
                ),
                row(
                    v(3),
                    modulo(3, n % 3),
                    3,
                    three[(n % 3) as usize].iter().map(|&k| v(k)).collect(),
                ),
                row(
                    v(4),
                    modulo(4, n % 4),
                    4,
                    four[(n % 4) as usize].iter().map(|&k| v(k)).collect(),
                ),
            ]
        }
        Family::Symplectic | Family::OddOrthogonal => {
            let four = [
                (4, vec![n - 1, 2 * n - 2, 2 * n]),
                (4, vec![n, 2 * n - 2, 2 * n]),
                (3, vec![n - 1, 2 * n - 2]),
                (3, vec![n, 2 * n]),
            ];
            let (t4, j4) = four[(n % 4) as usize].clone();
            let mut rows = vec![
                row(1, Always, 2, vec![2 * n]),
                row(
                    2,
                    modulo(2, n % 2),
                    2,
                    vec![if n % 2 == 0 { 2 * n } else { n }],
                ),
                row(4, modulo(4, n % 4), t4, j4),
            ];
            if n % 6 == 4 {
                rows.push(row(3, modulo(6, 4), 4, vec![2 * n - 4, 2 * n - 2, 2 * n]));
                rows.push(row(6, modulo(6, 4), 4, vec![2 * n - 4, n - 1, 2 * n]));
            }
            rows
        }
        Family::EvenOrthogonal if s == Sign::Plus => {
            let four = [
                (3, vec![n - 1, 2 * n - 2]),
                (4, vec![n - 2, 2 * n - 2, n]),
                (3, vec![n - 1, 2 * n - 2]),
                (3, vec![n - 2, n]),
            ];
            let (t4, j4) = four[(n % 4) as usize].clone();
            let mut rows = vec![
                row(1, Always, 2, vec![2 * n - 2]),
                row(
                    2,
                    modulo(2, n % 2),
                    2,
                    vec![if n % 2 == 0 { n - 1 } else { n }],
                ),
                row(4, modulo(4, n % 4), t4, j4),
            ];
            if n % 6 == 4 {
                rows.push(row(
                    3,
                    modulo(6, 4),
                    4,
                    vec![2 * n - 6, 2 * n - 4, 2 * n - 2],
                ));
                rows.push(row(6, modulo(6, 4), 4, vec![2 * n - 4, n - 3, n - 1]));
            }
            if n % 6 == 5 {
                rows.push(row(6, modulo(6, 5), 4, vec![2 * n - 2, n - 2, n]));
            }
            rows
        }
        Family::EvenOrthogonal => {
            let four = [
                (4, vec![n - 1, 2 * n - 2, 2 * n]),
                (4, vec![2 * n - 4, 2 * n - 2, 2 * n]),
                (4, vec![n - 1, 2 * n - 4, 2 * n - 2]),
                (3, vec![2 * n - 4, 2 * n]),
            ];
            let (t4, j4) = four[(n % 4) as usize].clone();
            let mut rows = vec![
                row(1, Always, 2, vec![2 * n]),
                row(
                    2,
                    modulo(2, n % 2),
                    2,
                    vec![if n % 2 == 0 { 2 * n } else { 2 * n - 2 }],
                ),
                row(4, modulo(4, n % 4), t4, j4),
            ];
            if n % 6 == 5 {
                rows.push(row(3, modulo(6, 5), 4, vec![2 * n - 4, 2 * n - 2, 2 * n]));
            }
            rows
        }
    };
    Ok(rows
        .into_iter()
        .map(|r| AnchoredRow {
            e: r.e,
            condition: r.condition,
            t: r.t,
            j: r.j.into_iter().collect(),
            index_level: r.e > 2,
        })
        .collect())
}

/// The row for `e(r,q) = e`, or `None` when `t(r,L) > 4`.
pub fn anchored_lookup(
    group: &GroupDescriptor,
    e: u64,
    rpart: Option<RPartRelation>,
) -> Result<Option<AnchoredRow>> {
    let rows: Vec<AnchoredRow> = anchored_rows(group)?
        .into_iter()
        .filter(|r| r.e == e)
        .collect();
    let needs_rpart = rows
        .iter()
        .any(|r| matches!(r.condition, AnchoredCondition::RPart(_)));
    if needs_rpart {
        let rel = rpart.ok_or_else(|| {
            GraphError::Domain(format!(
                "e = {e} needs the comparison of |εq − 1|_r with n_r"
            ))
        })?;
        return Ok(rows
            .into_iter()
            .find(|r| r.condition == AnchoredCondition::RPart(rel)));
    }
    Ok(rows.into_iter().next())
}
