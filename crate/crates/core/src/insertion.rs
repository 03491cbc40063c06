//! Inserting a new letter into a permutation and tracking what it does to
//! the major index.
//!
//! A permutation of length `n` has `n + 1` insertion spaces, numbered
//! `0..=n`; space `i` means "before the letter at 1-based position `i + 1`",
//! and space `n` appends. Relative to the letter `r` being inserted each
//! space is either RL or LR. RL spaces keep the descent count and are
//! labeled `0, 1, ...` from right to left; LR spaces add one descent and
//! continue the labels from left to right. The label of a space is exactly
//! the increase of the major index caused by inserting `r` there.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::perm::{des_maj, maj_of, Letter, Permutation};
use crate::{Error, Result};

/// Classification of an insertion space relative to the inserted letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpaceKind {
    /// Insertion keeps the number of descents.
    RightToLeft,
    /// Insertion adds one descent.
    LeftToRight,
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpaceKind::RightToLeft => "RL",
            SpaceKind::LeftToRight => "LR",
        })
    }
}

/// Kinds and labels of all `n + 1` spaces of a permutation relative to a letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalLabeling {
    pub kinds: Vec<SpaceKind>,
    pub labels: Vec<usize>,
    /// Number of RL spaces; always `des + 1`.
    pub rl_count: usize,
}

impl CanonicalLabeling {
    pub fn spaces_of_kind(&self, kind: SpaceKind) -> Vec<usize> {
        self.kinds.iter().enumerate().filter(|(_, &k)| k == kind).map(|(i, _)| i).collect()
    }
}

/// The major increments `im(sigma, 0, r), ..., im(sigma, n, r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MisSequence {
    pub increments: Vec<usize>,
}

impl MisSequence {
    /// Set of the first `len` increments.
    pub fn prefix_set(&self, len: usize) -> BTreeSet<usize> {
        self.increments[..len].iter().copied().collect()
    }
}

fn check_insertable(sigma: &Permutation, r: Letter) -> Result<()> {
    if sigma.contains(r) {
        return Err(Error::LetterPresent(r));
    }
    Ok(())
}

fn check_space(sigma: &Permutation, i: usize) -> Result<()> {
    if i > sigma.len() {
        return Err(Error::OutOfRange { what: "space", value: i, min: 0, max: sigma.len() });
    }
    Ok(())
}

/// `sigma` with `r` inserted at space `i`, i.e. before `sigma_{i+1}`.
pub fn insert_at(sigma: &Permutation, i: usize, r: Letter) -> Result<Permutation> {
    check_insertable(sigma, r)?;
    check_space(sigma, i)?;
    let mut letters = sigma.letters().to_vec();
    letters.insert(i, r);
    Ok(Permutation::from_distinct(letters))
}

/// The five RL cases, with 1-based `sigma_i` mapped to `letters[i - 1]`.
/// Space 0 of the empty permutation counts as RL.
pub(crate) fn is_rl_space(letters: &[Letter], i: usize, r: Letter) -> bool {
    let n = letters.len();
    if n == 0 {
        return true;
    }
    let case_end = i == n && letters[n - 1] < r;
    let case_start = i == 0 && r < letters[0];
    let interior = 0 < i && i < n;
    let (left, right) = if interior { (letters[i - 1], letters[i]) } else { (0, 0) };
    let case_descent_above = interior && left > right && right > r;
    let case_descent_below = interior && r > left && left > right;
    let case_ascent_around = interior && left < r && r < right;
    case_end || case_start || case_descent_above || case_descent_below || case_ascent_around
}

/// RL or LR, for space `i` of `sigma` relative to the letter `r`.
pub fn classify_space(sigma: &Permutation, i: usize, r: Letter) -> Result<SpaceKind> {
    check_insertable(sigma, r)?;
    check_space(sigma, i)?;
    Ok(if is_rl_space(sigma.letters(), i, r) { SpaceKind::RightToLeft } else { SpaceKind::LeftToRight })
}

/// Same verdict as [`is_rl_space`] for every space, in one pass: an interior
/// space is RL exactly when "the gap is a descent" and "`r` lies strictly
/// between the two neighbours" disagree.
fn rl_flags(letters: &[Letter], r: Letter, flags: &mut Vec<usize>) {
    flags.clear();
    let (Some(&first), Some(&last)) = (letters.first(), letters.last()) else {
        flags.push(1);
        return;
    };
    flags.push(usize::from(r < first));
    // r never equals a or b, so "r strictly between" is (a < r) != (b < r)
    flags.extend(letters.windows(2).map(|w| usize::from((w[0] > w[1]) ^ (w[0] < r) ^ (w[1] < r))));
    flags.push(usize::from(last < r));
}

/// Writes the canonical label of every space into `labels` (cleared first)
/// and returns the number of RL spaces.
pub(crate) fn labels_into(letters: &[Letter], r: Letter, labels: &mut Vec<usize>) -> usize {
    rl_flags(letters, r, labels);
    let rl_count: usize = labels.iter().sum();
    let mut rl_left = rl_count;
    let mut lr_label = rl_count;
    for label in labels.iter_mut() {
        if *label == 1 {
            rl_left -= 1;
            *label = rl_left;
        } else {
            *label = lr_label;
            lr_label += 1;
        }
    }
    rl_count
}

/// The first `len` canonical labels, each minus `shift`, written into `out`.
/// `rl_count` must be the number of RL spaces, i.e. `des(letters) + 1`.
pub(crate) fn shifted_label_prefix(
    letters: &[Letter],
    r: Letter,
    len: usize,
    rl_count: usize,
    shift: i64,
    out: &mut Vec<i64>,
) {
    out.clear();
    if len == 0 {
        return;
    }
    let n = letters.len();
    // RL spaces count down from rl_count - 1, LR spaces count up from rl_count
    let mut next_rl = rl_count as i64 - shift - 1;
    let mut next_lr = rl_count as i64 - shift;
    let mut emit = |rl: bool| {
        out.push(if rl { next_rl } else { next_lr });
        next_rl -= i64::from(rl);
        next_lr += i64::from(!rl);
    };
    emit(n == 0 || r < letters[0]);
    for j in 1..len.min(n) {
        let (a, b) = (letters[j - 1], letters[j]);
        emit((a > b) ^ (a < r) ^ (b < r));
    }
    if len > n && n > 0 {
        emit(letters[n - 1] < r);
    }
}

/// Kinds and canonical labels of all spaces of `sigma` relative to `r`.
pub fn canonical_labeling(sigma: &Permutation, r: Letter) -> Result<CanonicalLabeling> {
    check_insertable(sigma, r)?;
    let letters = sigma.letters();
    let kinds = (0..=letters.len())
        .map(|i| if is_rl_space(letters, i, r) { SpaceKind::RightToLeft } else { SpaceKind::LeftToRight })
        .collect();
    let mut labels = Vec::with_capacity(letters.len() + 1);
    let rl_count = labels_into(letters, r, &mut labels);
    Ok(CanonicalLabeling { kinds, labels, rl_count })
}

/// `maj(sigma^{(i)}(r)) - maj(sigma)`, computed from the two major indices.
pub fn major_increment(sigma: &Permutation, i: usize, r: Letter) -> Result<usize> {
    let inserted = insert_at(sigma, i, r)?;
    Ok(inserted.maj() - sigma.maj())
}

/// Major increments over all spaces, each computed by actually inserting.
pub fn mis(sigma: &Permutation, r: Letter) -> Result<MisSequence> {
    check_insertable(sigma, r)?;
    let base = sigma.maj();
    let mut scratch = Vec::with_capacity(sigma.len() + 1);
    let increments = (0..=sigma.len())
        .map(|i| {
            scratch.clear();
            scratch.extend_from_slice(&sigma.letters()[..i]);
            scratch.push(r);
            scratch.extend_from_slice(&sigma.letters()[i..]);
            maj_of(&scratch) - base
        })
        .collect();
    Ok(MisSequence { increments })
}

/// The set of the first `i` major increments, `0 <= i <= n + 1`.
pub fn mis_prefix_set(sigma: &Permutation, i: usize, r: Letter) -> Result<BTreeSet<usize>> {
    check_insertable(sigma, r)?;
    if i > sigma.len() + 1 {
        return Err(Error::OutOfRange { what: "prefix length", value: i, min: 0, max: sigma.len() + 1 });
    }
    Ok(mis(sigma, r)?.prefix_set(i))
}

/// Change in the descent count when inserting `r` at space `i`: 0 or 1.
pub fn descent_change(sigma: &Permutation, i: usize, r: Letter) -> Result<usize> {
    let inserted = insert_at(sigma, i, r)?;
    Ok(des_maj(inserted.letters()).0 - sigma.des())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn shifted_prefix_matches_full_labels() {
        for (word, r) in [("10 1 9 8 2 7 4 3 6", 5), ("5 1 6 2 4", 3), ("", 7), ("2", 1), ("2", 3), ("4 3 2 1", 5)] {
            let sigma = p(word);
            let mut full = Vec::new();
            let rl_count = labels_into(sigma.letters(), r, &mut full);
            assert_eq!(rl_count, sigma.des() + 1);
            let mut prefix = Vec::new();
            for len in 0..=full.len() {
                shifted_label_prefix(sigma.letters(), r, len, rl_count, 2, &mut prefix);
                let expected: Vec<i64> = full[..len].iter().map(|&x| x as i64 - 2).collect();
                assert_eq!(prefix, expected, "{word} / {r} / {len}");
            }
        }
    }

    #[test]
    fn compact_rule_agrees_with_the_five_cases() {
        let sigma = p("10 1 9 8 2 7 4 3 6");
        let mut flags = Vec::new();
        for r in [0, 5, 11] {
            rl_flags(sigma.letters(), r, &mut flags);
            let literal: Vec<usize> = (0..=9).map(|i| usize::from(is_rl_space(sigma.letters(), i, r))).collect();
            assert_eq!(flags, literal, "r = {r}");
        }
        rl_flags(&[], 3, &mut flags);
        assert_eq!(flags, vec![1]);
    }

    #[test]
    fn insertion() {
        let sigma = p("5 1 6 2 4");
        assert_eq!(insert_at(&sigma, 0, 3).unwrap(), p("3 5 1 6 2 4"));
        assert_eq!(insert_at(&sigma, 5, 3).unwrap(), p("5 1 6 2 4 3"));
        assert_eq!(insert_at(&Permutation::empty(), 0, 7).unwrap(), p("7"));
        assert_eq!(insert_at(&sigma, 1, 6), Err(Error::LetterPresent(6)));
        assert!(matches!(insert_at(&sigma, 6, 3), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn classification_of_displayed_example() {
        let sigma = p("10 1 9 8 2 7 4 3 6");
        let rl: Vec<usize> = (0..=9).filter(|&i| classify_space(&sigma, i, 5).unwrap() == SpaceKind::RightToLeft).collect();
        assert_eq!(rl, vec![0, 2, 3, 5, 7, 8]);
        assert_eq!(classify_space(&sigma, 9, 5), Ok(SpaceKind::LeftToRight));
        assert_eq!(classify_space(&p("6 3"), 2, 14), Ok(SpaceKind::RightToLeft));
        assert_eq!(classify_space(&sigma, 0, 9), Err(Error::LetterPresent(9)));
        assert!(classify_space(&sigma, 10, 5).is_err());
    }

    #[test]
    fn labeling_of_displayed_example() {
        let sigma = p("10 1 9 8 2 7 4 3 6");
        let lab = canonical_labeling(&sigma, 5).unwrap();
        assert_eq!(lab.labels, vec![5, 6, 4, 3, 7, 2, 8, 1, 0, 9]);
        assert_eq!(lab.rl_count, 6);
        assert_eq!(lab.spaces_of_kind(SpaceKind::LeftToRight), vec![1, 4, 6, 9]);
        assert_eq!(lab.rl_count, sigma.des() + 1);
    }

    #[test]
    fn labeling_of_empty_permutation() {
        let lab = canonical_labeling(&Permutation::empty(), 4).unwrap();
        assert_eq!(lab, CanonicalLabeling { kinds: vec![SpaceKind::RightToLeft], labels: vec![0], rl_count: 1 });
    }

    #[test]
    fn increments_table() {
        let sigma = p("5 1 6 2 4");
        assert_eq!(major_increment(&sigma, 3, 3), Ok(4));
        assert_eq!(major_increment(&sigma, 4, 3), Ok(0));
        assert_eq!(major_increment(&p("1 2"), 2, 3), Ok(0));
        assert_eq!(mis(&sigma, 3).unwrap().increments, vec![2, 3, 1, 4, 0, 5]);
        let changes: Vec<usize> = (0..=5).map(|i| descent_change(&sigma, i, 3).unwrap()).collect();
        assert_eq!(changes, vec![0, 1, 0, 1, 0, 1]);
    }

    #[test]
    fn prefix_sets_of_the_novick_example() {
        let sigma = p("5 8 1 4 6 2");
        assert_eq!(mis(&sigma, 7).unwrap().increments, vec![3, 2, 4, 5, 6, 1, 0]);
        assert_eq!(mis(&sigma, 9).unwrap().increments, vec![3, 4, 2, 5, 6, 1, 0]);
        assert_eq!(mis_prefix_set(&sigma, 5, 7).unwrap(), BTreeSet::from([2, 3, 4, 5, 6]));
        assert_eq!(mis_prefix_set(&p("5 8 1 4 7 6 2"), 5, 9).unwrap(), BTreeSet::from([3, 4, 5, 6, 7]));
        assert!(mis_prefix_set(&sigma, 0, 7).unwrap().is_empty());
        assert!(mis_prefix_set(&sigma, 8, 7).is_err());
        assert_eq!(mis_prefix_set(&sigma, 7, 7).unwrap().len(), 7);
    }
}
