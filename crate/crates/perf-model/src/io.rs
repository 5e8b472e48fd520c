use std::io::{BufRead, Write};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::ModelError;
use crate::params::{ModelParams, PARAM_COUNT};
use crate::sampler::PosteriorSamples;

/// Reads `(n, time_ns)` pairs for one algorithm column of a benchmark TSV.
///
/// `round` (1-based) keeps only trials where that algorithm ran in the given
/// round; the loop ID checked against the order code is the column's
/// position with `n` excluded, i.e. the no-op column is loop 0 and the first
/// algorithm column is loop 1.
pub fn read_bench_column<R: BufRead>(
    reader: R,
    algorithm: &str,
    round: Option<usize>,
) -> Result<Vec<(f64, f64)>, ModelError> {
    let mut lines = reader.lines().enumerate();
    let (_, header) = lines.next().ok_or(ModelError::BadInput {
        line: 1,
        reason: "missing header".into(),
    })?;
    let header = header?;
    let columns: Vec<String> = header.split('\t').map(str::to_string).collect();

    let col = columns
        .iter()
        .position(|c| c == algorithm)
        .ok_or_else(|| ModelError::MissingColumn {
            name: algorithm.to_string(),
            available: columns.clone(),
        })?;
    let n_col = columns
        .iter()
        .position(|c| c == "n")
        .ok_or_else(|| ModelError::MissingColumn {
            name: "n".into(),
            available: columns.clone(),
        })?;
    let order_col = columns
        .iter()
        .position(|c| c == "order")
        .ok_or_else(|| ModelError::MissingColumn {
            name: "order".into(),
            available: columns.clone(),
        })?;
    let loop_id = (col - 1) as u64;

    if let Some(round) = round {
        if round == 0 || round > 6 {
            return Err(ModelError::Domain {
                reason: format!("round must be in 1..=6, got {round}"),
            });
        }
    }

    let mut out = Vec::new();
    for (idx, line) in lines {
        let line = line?;
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let parse = |txt: &str| -> Result<f64, ModelError> {
            txt.parse().map_err(|_| ModelError::BadInput {
                line: idx + 1,
                reason: format!("not a number: {txt:?}"),
            })
        };
        let field = |pos: usize| -> Result<&str, ModelError> {
            fields.get(pos).copied().ok_or_else(|| ModelError::BadInput {
                line: idx + 1,
                reason: format!("missing column {pos}"),
            })
        };
        if let Some(round) = round {
            let order: u64 =
                field(order_col)?
                    .parse()
                    .map_err(|_| ModelError::BadInput {
                        line: idx + 1,
                        reason: "bad order code".into(),
                    })?;
            let slot = (order >> (3 * (round - 1))) & 0x7;
            if slot != loop_id {
                continue;
            }
        }
        out.push((parse(field(n_col)?)?, parse(field(col)?)?));
    }
    Ok(out)
}

/// Writes the posterior as tab-separated rows, nine columns in canonical
/// parameter order, no header. Draws are shuffled first so consumers see no
/// chain structure.
pub fn write_posterior<W: Write, R: Rng>(
    samples: &PosteriorSamples,
    rng: &mut R,
    out: &mut W,
) -> Result<(), ModelError> {
    let mut order: Vec<usize> = (0..samples.draws.len()).collect();
    order.shuffle(rng);
    for idx in order {
        let row = samples.draws[idx].to_array();
        let text: Vec<String> = row.iter().map(|v| format!("{v:e}")).collect();
        writeln!(out, "{}", text.join("\t"))?;
    }
    Ok(())
}

/// Reads a posterior file written by [`write_posterior`].
pub fn read_posterior<R: BufRead>(reader: R) -> Result<PosteriorSamples, ModelError> {
    let mut draws = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != PARAM_COUNT {
            return Err(ModelError::BadInput {
                line: idx + 1,
                reason: format!("expected {PARAM_COUNT} columns, got {}", fields.len()),
            });
        }
        let mut row = [0.0; PARAM_COUNT];
        for (slot, txt) in row.iter_mut().zip(&fields) {
            *slot = txt.parse().map_err(|_| ModelError::BadInput {
                line: idx + 1,
                reason: format!("not a number: {txt:?}"),
            })?;
        }
        draws.push(ModelParams::from_array(row));
    }
    Ok(PosteriorSamples { draws })
}
