use std::ffi::OsString;

use crate::error::{CliError, Result};

pub const SUBCOMMANDS: [&str; 4] = ["verify", "query", "eliminate", "export"];

/// Parses `key = value` lines; `#` starts a comment.
pub fn parse_config(text: &str) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            CliError::Usage(format!("config line {}: expected key = value", no + 1))
        })?;
        let key = key.trim();
        if key.is_empty() || key.starts_with('-') || key.contains(char::is_whitespace) {
            return Err(CliError::Usage(format!(
                "config line {}: bad key {key:?}",
                no + 1
            )));
        }
        let value = value.trim().trim_matches('"');
        out.push((key.to_string(), value.to_string()));
    }
    Ok(out)
}

/// Turns config entries into flags; `true` becomes a bare switch and `false` is dropped.
pub fn config_flags(entries: &[(String, String)]) -> Vec<OsString> {
    let mut out = Vec::new();
    for (key, value) in entries {
        match value.as_str() {
            "true" => out.push(format!("--{key}").into()),
            "false" => {}
            v => {
                out.push(format!("--{key}").into());
                out.push(v.into());
            }
        }
    }
    out
}

/// Inserts the flags of a `--config FILE` right after the subcommand, so that flags given on
/// the command line win.
pub fn expand_config(args: Vec<OsString>) -> Result<Vec<OsString>> {
    let mut path = None;
    let mut it = args.iter().enumerate();
    while let Some((_, a)) = it.next() {
        let s = a.to_string_lossy();
        if s == "--config" {
            path = it.next().map(|(_, p)| p.clone());
            if path.is_none() {
                return Err(CliError::Usage("--config needs a file".into()));
            }
        } else if let Some(p) = s.strip_prefix("--config=") {
            path = Some(p.into());
        }
    }
    let Some(path) = path else {
        return Ok(args);
    };
    let text = std::fs::read_to_string(&path).map_err(|e| {
        CliError::Usage(format!(
            "cannot read config {}: {e}",
            path.to_string_lossy()
        ))
    })?;
    let flags = config_flags(&parse_config(&text)?);
    let at = args
        .iter()
        .position(|a| SUBCOMMANDS.contains(&a.to_string_lossy().as_ref()))
        .ok_or_else(|| CliError::Usage("a config file needs a subcommand".into()))?;
    let mut out = args[..=at].to_vec();
    out.extend(flags);
    out.extend_from_slice(&args[at + 1..]);
    Ok(out)
}
