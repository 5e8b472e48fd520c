use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use anyhow::{anyhow, Context};
use spline_core::{BoundaryCondition, ControlCurve, SecondDerivatives};

use crate::CliError;

/// Numerical Recipes' sentinel: slopes above this mean "natural".
const NATURAL_SENTINEL: f64 = 0.99e30;

/// Parses a boundary flag: the word "natural" or a slope value, with the
/// legacy huge-number sentinel mapped to natural here and nowhere else.
pub fn parse_boundary(text: &str) -> Result<BoundaryCondition, CliError> {
    if text.eq_ignore_ascii_case("natural") {
        return Ok(BoundaryCondition::Natural);
    }
    let value: f64 = text.parse().map_err(|_| {
        CliError::Validation(anyhow!(
            "boundary must be \"natural\" or a number, got {text:?}"
        ))
    })?;
    if value > NATURAL_SENTINEL {
        return Ok(BoundaryCondition::Natural);
    }
    if !value.is_finite() {
        return Err(CliError::Validation(anyhow!(
            "boundary slope must be finite, got {value}"
        )));
    }
    Ok(BoundaryCondition::Clamped(value))
}

fn data_rows(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(idx, line)| (idx + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
}

fn parse_row(line_no: usize, line: &str, want: usize) -> Result<Vec<f64>, CliError> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != want {
        return Err(CliError::Validation(anyhow!(
            "line {line_no}: expected {want} columns, found {}",
            fields.len()
        )));
    }
    fields
        .iter()
        .map(|f| {
            f.parse().map_err(|_| {
                CliError::Validation(anyhow!("line {line_no}: not a number: {f:?}"))
            })
        })
        .collect()
}

/// Reads a two-column curve file: x then y, tab- or space-separated, rows
/// strictly increasing in x, '#' lines ignored.
pub fn read_curve(path: &Path) -> Result<ControlCurve, CliError> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(CliError::Validation)?;
    let mut knots = Vec::new();
    let mut values = Vec::new();
    let mut row_lines = Vec::new();
    for (line_no, line) in data_rows(&text) {
        let row = parse_row(line_no, line, 2)?;
        knots.push(row[0]);
        values.push(row[1]);
        row_lines.push(line_no);
    }
    ControlCurve::new(knots, values).map_err(|e| match e {
        spline_core::SplineError::NonIncreasingKnots { index, prev, next } => {
            CliError::Validation(anyhow!(
                "line {}: knots must increase, got {next} after {prev}",
                row_lines[index]
            ))
        }
        other => CliError::Validation(other.into()),
    })
}

/// Reads a three-column x, y, y'' file produced by `derivs`, checking that
/// the first two columns match the curve.
pub fn read_ypp(path: &Path, curve: &ControlCurve) -> Result<SecondDerivatives, CliError> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(CliError::Validation)?;
    let mut ypp = Vec::new();
    for (line_no, line) in data_rows(&text) {
        let row = parse_row(line_no, line, 3)?;
        let idx = ypp.len();
        if idx >= curve.len() {
            return Err(CliError::Validation(anyhow!(
                "line {line_no}: more derivative rows than curve points"
            )));
        }
        if row[0] != curve.knots()[idx] || row[1] != curve.values()[idx] {
            return Err(CliError::Validation(anyhow!(
                "line {line_no}: derivative row does not match the curve at point {idx}"
            )));
        }
        ypp.push(row[2]);
    }
    if ypp.len() != curve.len() {
        return Err(CliError::Validation(anyhow!(
            "derivative file has {} rows for a {}-point curve",
            ypp.len(),
            curve.len()
        )));
    }
    Ok(SecondDerivatives::new(ypp))
}

/// Opens the output sink: the given path, or stdout.
pub fn sink(out: Option<&Path>) -> Result<Box<dyn Write>, CliError> {
    match out {
        Some(path) => {
            let file = File::create(path)
                .with_context(|| format!("creating {}", path.display()))
                .map_err(CliError::Validation)?;
            Ok(Box::new(BufWriter::new(file)))
        }
        None => Ok(Box::new(BufWriter::new(std::io::stdout()))),
    }
}
