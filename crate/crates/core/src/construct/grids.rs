use std::collections::BTreeSet;

use super::{ConstructionResult, Method};
use crate::error::{Error, Result};
use crate::graphs::{find_isomorphism, generate, GraphFamily};
use crate::represent::decode;
use crate::words::{Pattern, Word};

fn check_k(k: usize, what: &str) -> Result<()> {
    if k < 1 {
        return Err(Error::InvalidParameters(format!("{what} needs k >= 1")));
    }
    Ok(())
}

fn interleave(a: impl Iterator<Item = u32>, b: impl Iterator<Item = u32>) -> impl Iterator<Item = u32> {
    a.zip(b).flat_map(|(x, y)| [x, y])
}

fn restricted(w: Word, keep: &[u32]) -> Word {
    w.restrict(&keep.iter().copied().collect()).reduce()
}

/// 12-representant of the L-shaped width-2 strip with arms of `2k` squares.
pub fn corner_word(k: usize) -> Result<Word> {
    check_k(k, "corner_word")?;
    if k == 1 {
        return Ok(restricted(corner_word(2)?, &[4, 6, 7, 8, 9, 10, 11, 13]));
    }
    let k = k as u32;
    let low = std::iter::once(1)
        .chain((2..=4 * k - 4).step_by(2))
        .chain([4 * k, 4 * k - 2]);
    let mut w = vec![3];
    w.extend(interleave((5..=4 * k + 5).step_by(2), low));
    w.push(4 * k);
    w.extend(interleave((4 * k + 7..=8 * k - 1).step_by(2), (4 * k + 2..=8 * k - 6).step_by(2)));
    w.extend([8 * k, 8 * k - 4, 8 * k - 2]);
    Word::new(w)
}

/// 12-representant of two width-2 runs of `2k` squares overlapping in a
/// Z shape.
pub fn skew_ladder_word(k: usize) -> Result<Word> {
    check_k(k, "skew_ladder_word")?;
    if k == 1 {
        return Ok(restricted(skew_ladder_word(2)?, &[4, 6, 7, 8, 9, 10, 11, 12, 13, 15]));
    }
    let k = k as u32;
    let low = std::iter::once(1).chain((2..=4 * k - 6).step_by(2));
    let mut w = vec![3];
    w.extend(interleave((5..=4 * k - 1).step_by(2), low));
    w.extend([
        4 * k + 1,
        4 * k + 3,
        4 * k - 4,
        4 * k + 1,
        4 * k - 2,
        4 * k + 5,
        4 * k + 2,
        4 * k + 7,
        4 * k,
        4 * k + 2,
    ]);
    w.extend(interleave((4 * k + 9..=8 * k + 1).step_by(2), (4 * k + 4..=8 * k - 4).step_by(2)));
    w.extend([8 * k + 2, 8 * k - 2, 8 * k]);
    Word::new(w)
}

/// 12-representant of the ladder with `rungs` rungs, cut out of one arm of
/// a corner word.
pub fn ladder_word(rungs: usize) -> Result<Word> {
    check_k(rungs, "ladder_word")?;
    let k = rungs.saturating_sub(1).div_ceil(2).max(2);
    let mut keep: BTreeSet<u32> = BTreeSet::from([1, 3]);
    for j in 1..rungs as u32 {
        keep.extend([2 * j, 2 * j + 3]);
    }
    Ok(corner_word(k)?.restrict(&keep).reduce())
}

fn represent_family(family: GraphFamily, word: Word, method: Method) -> Result<ConstructionResult> {
    let g = generate(&family)?;
    let decoded = decode(&word, &Pattern::twelve())?;
    let labeling = find_isomorphism(&g, &decoded).ok_or(Error::SelfCheckFailed)?;
    ConstructionResult::new(&g, labeling, word, Pattern::twelve(), method)
}

pub fn represent_corner(k: usize) -> Result<ConstructionResult> {
    represent_family(GraphFamily::Corner(k), corner_word(k)?, Method::Corner)
}

pub fn represent_skew_ladder(k: usize) -> Result<ConstructionResult> {
    represent_family(GraphFamily::SkewLadder(k), skew_ladder_word(k)?, Method::SkewLadder)
}

pub fn represent_ladder(rungs: usize) -> Result<ConstructionResult> {
    represent_family(GraphFamily::Ladder(rungs), ladder_word(rungs)?, Method::Ladder)
}
