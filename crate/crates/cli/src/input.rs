//! Parsing of angle expressions, grids and pair files.

use std::f64::consts::PI;
use std::path::Path;

use exmex::Express;

use chsh_spectra::operators::GeneralPair;
use chsh_spectra::tridiag::DenseSymmetricMatrix;

use crate::CliError;

/// Evaluates a real expression such as `2.0`, `pi/2` or `acos(-0.8)`.
pub fn parse_real(s: &str) -> Result<f64, CliError> {
    let err = |msg: String| CliError::Usage(format!("cannot evaluate '{s}': {msg}"));
    let expr = exmex::parse::<f64>(s.trim()).map_err(|e| err(e.to_string()))?;
    let vars = expr
        .var_names()
        .iter()
        .map(|v| if v == "pi" { Ok(PI) } else { Err(err(format!("unknown name '{v}'"))) })
        .collect::<Result<Vec<_>, _>>()?;
    let x = expr.eval(&vars).map_err(|e| err(e.to_string()))?;
    if x.is_finite() {
        Ok(x)
    } else {
        Err(CliError::Usage(format!("'{s}' is not a finite number")))
    }
}

/// Parses a single angle or a `start:step:stop` grid; every angle must lie in `(0, pi)`.
pub fn parse_grid(s: &str) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = s.split(':').collect();
    let values = match parts.as_slice() {
        [single] => vec![parse_real(single)?],
        [start, step, stop] => {
            let (start, step, stop) = (parse_real(start)?, parse_real(step)?, parse_real(stop)?);
            if step <= 0.0 {
                return Err(CliError::Usage(format!("grid step must be positive in '{s}'")));
            }
            if stop < start {
                return Err(CliError::Usage(format!("empty grid '{s}'")));
            }
            let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
            (0..count).map(|i| start + step * i as f64).collect()
        }
        _ => return Err(CliError::Usage(format!("expected a value or start:step:stop, got '{s}'"))),
    };
    if let Some(bad) = values.iter().find(|&&v| v <= 0.0 || v >= PI) {
        return Err(CliError::Usage(format!("angle {bad} outside (0, pi) in '{s}'")));
    }
    Ok(values)
}

/// Reads a pair file: the order `k`, then `k` rows of `A`, a blank line, then `k` rows of `B`.
pub fn read_pair_file(path: &Path) -> Result<GeneralPair, CliError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_pair(&text)
}

pub fn parse_pair(text: &str) -> Result<GeneralPair, CliError> {
    let bad = |msg: String| CliError::Usage(format!("pair file: {msg}"));
    let mut lines = text.lines().map(str::trim);
    let k: usize = lines
        .next()
        .and_then(|l| l.parse().ok())
        .filter(|&k| k > 0)
        .ok_or_else(|| bad("first line must be a positive order".into()))?;
    let mut read_matrix = |name: &str| -> Result<DenseSymmetricMatrix, CliError> {
        let mut entries = Vec::with_capacity(k * k);
        for row in lines.by_ref().filter(|l| !l.is_empty()).take(k) {
            let parsed: Vec<f64> = row
                .split_whitespace()
                .map(|t| t.parse::<f64>().map_err(|e| bad(format!("'{t}' in {name}: {e}"))))
                .collect::<Result<_, _>>()?;
            if parsed.len() != k {
                return Err(bad(format!("row of {name} has {} entries, expected {k}", parsed.len())));
            }
            entries.extend(parsed);
        }
        if entries.len() != k * k {
            return Err(bad(format!("{name} needs {k} rows")));
        }
        DenseSymmetricMatrix::new(k, entries).map_err(|e| bad(format!("{name}: {e}")))
    };
    let a = read_matrix("A")?;
    let b = read_matrix("B")?;
    GeneralPair::new(a, b).map_err(|e| bad(e.to_string()))
}
