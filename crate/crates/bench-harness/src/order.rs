use crate::error::HarnessError;

/// Six timed loops per trial: the no-op loop plus five algorithm variants.
pub const LOOP_COUNT: usize = 6;

/// Packs an execution order into a base-8 integer: the least three
/// significant bits hold the loop run first, the next three the second, and
/// so on.
pub fn encode_order(perm: &[u8]) -> Result<u64, HarnessError> {
    validate_permutation(perm)?;
    Ok(perm
        .iter()
        .enumerate()
        .map(|(slot, &id)| (id as u64) << (3 * slot))
        .sum())
}

/// Inverts [`encode_order`]. Fails if the code's digits are not a
/// permutation of the loop IDs.
pub fn decode_order(code: u64) -> Result<Vec<u8>, HarnessError> {
    if code >> (3 * LOOP_COUNT) != 0 {
        return Err(HarnessError::BadOrderCode { code });
    }
    let perm: Vec<u8> = (0..LOOP_COUNT)
        .map(|slot| ((code >> (3 * slot)) & 0x7) as u8)
        .collect();
    validate_permutation(&perm).map_err(|_| HarnessError::BadOrderCode { code })?;
    Ok(perm)
}

fn validate_permutation(perm: &[u8]) -> Result<(), HarnessError> {
    let mut seen = [false; LOOP_COUNT];
    let ok = perm.len() == LOOP_COUNT
        && perm.iter().all(|&id| {
            let idx = id as usize;
            idx < LOOP_COUNT && !std::mem::replace(&mut seen[idx], true)
        });
    if ok {
        Ok(())
    } else {
        Err(HarnessError::NotAPermutation {
            ids: perm.to_vec(),
        })
    }
}
