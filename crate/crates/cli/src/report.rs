//! Output helpers. Every command writes one JSON document; floats are
//! rounded to a fixed number of significant digits so reruns are
//! byte-identical across platforms.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde::Serialize;
use serde_json::Value;

use crate::CliError;

const SIGNIFICANT: usize = 12;

fn round(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.*e}", SIGNIFICANT - 1, x).parse().unwrap_or(x)
}

/// Rounds every float in `v` in place.
pub fn fix_precision(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            if let Some(x) = n.as_f64().and_then(|x| serde_json::Number::from_f64(round(x))) {
                *n = x;
            }
        }
        Value::Array(items) => items.iter_mut().for_each(fix_precision),
        Value::Object(map) => map.values_mut().for_each(fix_precision),
        _ => {}
    }
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut v = serde_json::to_value(value).map_err(|e| CliError::Input(e.to_string()))?;
    fix_precision(&mut v);
    serde_json::to_string_pretty(&v).map_err(|e| CliError::Input(e.to_string()))
}

/// Writes to `path` when given, else to stdout.
pub fn emit<T: Serialize>(value: &T, path: Option<&Path>) -> Result<(), CliError> {
    let text = to_json(value)?;
    match path {
        Some(p) => fs::write(p, text + "\n").map_err(|e| CliError::Input(format!("{}: {e}", p.display()))),
        None => {
            let mut out = io::stdout().lock();
            match writeln!(out, "{text}") {
                Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(CliError::Input(format!("stdout: {e}"))),
                _ => Ok(()),
            }
        }
    }
}

pub fn read_json(path: &Path) -> Result<Value, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}
