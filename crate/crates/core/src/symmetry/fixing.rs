//! Small families of blocks whose setwise stabiliser already fixes every
//! block.

use super::{PermGroup, Permutation, SymmetryError};
use crate::partition::Partition;

/// The permutation each group element induces on the blocks of a partition.
pub fn block_action(
    group: &PermGroup,
    blocks: &Partition,
) -> Result<Vec<Permutation>, SymmetryError> {
    let index = blocks.block_index(group.degree());
    group
        .elements()
        .iter()
        .map(|g| {
            let images = blocks
                .blocks()
                .iter()
                .enumerate()
                .map(|(b, block)| {
                    let target = index[g.apply(block[0])];
                    match target {
                        Some(t)
                            if blocks.blocks()[t].len() == block.len()
                                && block.iter().all(|&v| index[g.apply(v)] == Some(t)) =>
                        {
                            Ok(t)
                        }
                        _ => Err(SymmetryError::NotBlockAction { block: b }),
                    }
                })
                .collect::<Result<Vec<_>, _>>()?;
            Permutation::from_images(images).map_err(|_| SymmetryError::NotBlockAction { block: 0 })
        })
        .collect()
}

fn stabilizer_size(action: &[Permutation], fixed: &[usize]) -> usize {
    action
        .iter()
        .filter(|p| fixed.iter().all(|&b| p.fixes(b)))
        .count()
}

/// Greedy-then-prune choice of blocks `S₁,…,S_ℓ` (returned as indices into
/// `blocks`) whose joint setwise stabiliser equals the stabiliser of every
/// block.
///
/// The greedy pass picks the lowest-indexed block not yet fixed by the
/// running stabiliser, so each pick shrinks it strictly and the picks form
/// a subgroup chain. The prune pass then drops members in reverse insertion
/// order whenever the stabiliser equality survives; one pass suffices for
/// inclusion-minimality because dropping members only enlarges stabilisers.
///
/// `size_bound` is the admissible length; exceeding it means the caller's
/// bound does not apply and is reported as [`SymmetryError::BoundViolated`].
pub fn minimal_fixing_set(
    group: &PermGroup,
    blocks: &Partition,
    size_bound: usize,
) -> Result<Vec<usize>, SymmetryError> {
    let action = block_action(group, blocks)?;
    let all: Vec<usize> = (0..blocks.len()).collect();
    let target = stabilizer_size(&action, &all);

    let mut chosen = Vec::new();
    let mut current: Vec<&Permutation> = action.iter().collect();
    while current.len() > target {
        let pick = (0..blocks.len())
            .find(|&b| current.iter().any(|p| !p.fixes(b)))
            .expect("a larger stabiliser moves some block");
        chosen.push(pick);
        current.retain(|p| p.fixes(pick));
    }

    for idx in (0..chosen.len()).rev() {
        let mut without = chosen.clone();
        without.remove(idx);
        if stabilizer_size(&action, &without) == target {
            chosen = without;
        }
    }

    if chosen.len() > size_bound {
        return Err(SymmetryError::BoundViolated {
            length: chosen.len(),
            bound: size_bound,
        });
    }
    Ok(chosen)
}
