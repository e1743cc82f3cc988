use std::sync::OnceLock;

use group_model::{Family, GroupDescriptor, Sign};
use regex::Regex;

use crate::error::{CliError, Result};

pub const GRAMMAR: &str = "L45+(q=9), L45-(q=4), U45(q=4), S(n=28,q=3), O(n=28,q=5), \
O+(n=31,q=3), O-(n=30,u=2), or a short name such as S56(3) or O60-(4)";

fn pattern() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| {
        Regex::new(r"^(?P<fam>[LUSO])(?P<num>\d+)?(?P<sign>[+-])?\((?P<args>[^()]*)\)$").unwrap()
    })
}

fn fail(input: &str, reason: impl Into<String>) -> CliError {
    CliError::Parse {
        input: input.to_string(),
        reason: reason.into(),
        hint: GRAMMAR,
    }
}

fn number<T: std::str::FromStr>(input: &str, text: &str) -> Result<T> {
    text.parse()
        .map_err(|_| fail(input, format!("{text:?} is not a number")))
}

/// Parses a group descriptor; the field may be given as `q=`, `u=` or a bare number.
pub fn parse_descriptor(input: &str) -> Result<GroupDescriptor> {
    let text: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    let caps = pattern()
        .captures(&text)
        .ok_or_else(|| fail(input, "unrecognised shape"))?;
    let fam = &caps["fam"];
    let num: Option<u32> = caps
        .name("num")
        .map(|m| number(input, m.as_str()))
        .transpose()?;
    let sign = caps.name("sign").map(|m| match m.as_str() {
        "+" => Sign::Plus,
        _ => Sign::Minus,
    });
    let mut n_arg: Option<u32> = None;
    let mut field: Option<u64> = None;
    for part in caps["args"].split(',').filter(|s| !s.is_empty()) {
        let (key, value) = match part.split_once('=') {
            Some((k, v)) => (k, v),
            None => ("q", part),
        };
        match key {
            "n" if n_arg.is_none() => n_arg = Some(number(input, value)?),
            "q" | "u" if field.is_none() => field = Some(number(input, value)?),
            "n" | "q" | "u" => return Err(fail(input, format!("{key} given twice"))),
            other => return Err(fail(input, format!("unknown key {other:?}"))),
        }
    }
    let q = field.ok_or_else(|| fail(input, "missing field size q= or u="))?;
    let n_of = |dim_to_n: &dyn Fn(u32) -> Result<u32>| -> Result<u32> {
        match (num, n_arg) {
            (Some(_), Some(_)) => Err(fail(input, "rank given twice")),
            (Some(d), None) => dim_to_n(d),
            (None, Some(n)) => Ok(n),
            (None, None) => Err(fail(input, "missing rank")),
        }
    };
    let (family, sign, n) = match fam {
        "L" => {
            let n = n_of(&|d| Ok(d))?;
            (Family::LinearUnitary, sign.unwrap_or(Sign::Plus), n)
        }
        "U" => {
            if sign.is_some() {
                return Err(fail(input, "U takes no sign"));
            }
            (Family::LinearUnitary, Sign::Minus, n_of(&|d| Ok(d))?)
        }
        "S" => {
            if sign.is_some() {
                return Err(fail(input, "S takes no sign"));
            }
            let n = n_of(&|d| {
                if d % 2 == 0 {
                    Ok(d / 2)
                } else {
                    Err(fail(input, "symplectic dimension must be even"))
                }
            })?;
            (Family::Symplectic, Sign::Plus, n)
        }
        _ => {
            let n = n_of(&|d| match (d % 2, sign) {
                (1, None) => Ok(d / 2),
                (0, Some(_)) => Ok(d / 2),
                (1, Some(_)) => Err(fail(input, "odd dimension takes no sign")),
                _ => Err(fail(input, "even dimension needs a sign")),
            })?;
            match sign {
                None => (Family::OddOrthogonal, Sign::Plus, n),
                Some(s) => (Family::EvenOrthogonal, s, n),
            }
        }
    };
    GroupDescriptor::new(family, sign, n, q).map_err(|e| fail(input, e.to_string()))
}
