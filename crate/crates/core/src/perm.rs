//! Permutations over arbitrary distinct letters and their descent statistics.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::qpoly::QPoly;
use crate::{Error, Result};

/// A letter of a permutation. Letters need not be `1..=n`; only their
/// relative order matters to every statistic.
pub type Letter = u32;

/// A finite sequence of pairwise distinct letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Permutation {
    letters: Vec<Letter>,
}

/// Descent set, descent number and major index of a permutation.
///
/// Descent positions are 1-based: `i` is a descent when `p_i > p_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DescentProfile {
    pub descent_set: Vec<usize>,
    pub des: usize,
    pub maj: usize,
}

impl Permutation {
    /// Builds a permutation, rejecting repeated letters.
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        let mut sorted = letters.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateLetter(w[0]));
        }
        Ok(Permutation { letters })
    }

    /// The permutation `1 2 ... n`.
    pub fn identity(n: usize) -> Self {
        Permutation { letters: (1..=n as Letter).collect() }
    }

    pub fn empty() -> Self {
        Permutation::default()
    }

    /// Caller guarantees the letters are distinct.
    pub(crate) fn from_distinct(letters: Vec<Letter>) -> Self {
        debug_assert!(Permutation::new(letters.clone()).is_ok());
        Permutation { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn contains(&self, letter: Letter) -> bool {
        self.letters.contains(&letter)
    }

    /// 0-based index of `letter`, if present.
    pub fn index_of(&self, letter: Letter) -> Option<usize> {
        self.letters.iter().position(|&l| l == letter)
    }

    pub fn descent_profile(&self) -> DescentProfile {
        let descent_set: Vec<usize> = descent_positions(&self.letters).collect();
        DescentProfile { des: descent_set.len(), maj: descent_set.iter().sum(), descent_set }
    }

    pub fn des(&self) -> usize {
        des_maj(&self.letters).0
    }

    pub fn maj(&self) -> usize {
        des_maj(&self.letters).1
    }

    /// Number of descents at positions `>= k`, for `1 <= k <= len`.
    pub fn tail_descent_count(&self, k: usize) -> Result<usize> {
        if k == 0 || k > self.len() {
            return Err(Error::OutOfRange { what: "position", value: k, min: 1, max: self.len() });
        }
        Ok(tail_descents(&self.letters, k))
    }

    /// True when `other` occurs in `self` as a (not necessarily contiguous)
    /// subsequence.
    pub fn has_subsequence(&self, other: &Permutation) -> bool {
        let mut it = self.letters.iter();
        other.letters.iter().all(|l| it.any(|x| x == l))
    }

    /// Removes `letter`, keeping the order of the rest.
    pub fn without(&self, letter: Letter) -> Permutation {
        Permutation { letters: self.letters.iter().copied().filter(|&l| l != letter).collect() }
    }
}

impl From<Permutation> for Vec<Letter> {
    fn from(p: Permutation) -> Self {
        p.letters
    }
}

impl TryFrom<Vec<Letter>> for Permutation {
    type Error = Error;

    fn try_from(letters: Vec<Letter>) -> Result<Self> {
        Permutation::new(letters)
    }
}

impl TryFrom<&[Letter]> for Permutation {
    type Error = Error;

    fn try_from(letters: &[Letter]) -> Result<Self> {
        Permutation::new(letters.to_vec())
    }
}

/// Parses whitespace- or comma-separated decimal letters, e.g. `"9 3 8 10"`
/// or `"9,3,8,10"`. The empty string is the empty permutation.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|tok| !tok.is_empty())
            .map(|tok| tok.parse::<Letter>().map_err(|e| Error::Parse(alloc::format!("{tok:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(letters)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

pub(crate) fn descent_positions(letters: &[Letter]) -> impl Iterator<Item = usize> + '_ {
    letters.windows(2).enumerate().filter(|(_, w)| w[0] > w[1]).map(|(i, _)| i + 1)
}

/// `(des, maj)` of a slice of distinct letters.
pub fn des_maj(letters: &[Letter]) -> (usize, usize) {
    let mut des = 0;
    let mut maj = 0;
    for (i, (a, b)) in letters.iter().zip(letters.iter().skip(1)).enumerate() {
        if a > b {
            des += 1;
            maj += i + 1;
        }
    }
    (des, maj)
}

pub(crate) fn maj_of(letters: &[Letter]) -> usize {
    des_maj(letters).1
}

/// Rearranges `letters` into the next permutation in lexicographic order.
/// Returns `false` (leaving the slice sorted ascending) after the last one.
pub fn next_permutation(letters: &mut [Letter]) -> bool {
    let Some(i) = letters.windows(2).rposition(|w| w[0] < w[1]) else {
        letters.reverse();
        return false;
    };
    let j = letters.iter().rposition(|&x| x > letters[i]).expect("letters[i + 1] qualifies");
    letters.swap(i, j);
    letters[i + 1..].reverse();
    true
}

/// Descents at 1-based positions `>= k`.
pub(crate) fn tail_descents(letters: &[Letter], k: usize) -> usize {
    let start = k.max(1);
    (start..letters.len()).filter(|&i| letters[i - 1] > letters[i]).count()
}

/// Number of descents at positions `>= k`, for `1 <= k <= len`.
pub fn tail_descent_count(p: &Permutation, k: usize) -> Result<usize> {
    p.tail_descent_count(k)
}

/// True iff the two permutations share no letter.
pub fn are_disjoint(p: &Permutation, q: &Permutation) -> bool {
    first_common_letter(p, q).is_none()
}

fn first_common_letter(p: &Permutation, q: &Permutation) -> Option<Letter> {
    let mut theirs = q.letters.clone();
    theirs.sort_unstable();
    p.letters.iter().copied().find(|l| theirs.binary_search(l).is_ok())
}

pub(crate) fn check_disjoint(p: &Permutation, q: &Permutation) -> Result<()> {
    match first_common_letter(p, q) {
        Some(l) => Err(Error::NotDisjoint(l)),
        None => Ok(()),
    }
}

/// Streaming enumeration of the shuffles of two disjoint permutations.
///
/// A shuffle is fixed by the set of slots (out of `m + n`) that hold the
/// letters of `pi`. The sets are visited in lexicographic order, so the first
/// shuffle puts all of `pi` in front and the last puts all of `sigma` in front.
#[derive(Debug, Clone)]
pub struct Shuffles {
    sigma: Vec<Letter>,
    pi: Vec<Letter>,
    /// Slots of `pi`, strictly increasing. `None` once exhausted.
    slots: Option<Vec<usize>>,
    remaining: u128,
}

impl Shuffles {
    fn new(sigma: &Permutation, pi: &Permutation) -> Self {
        let n = pi.len();
        let total = sigma.len() + n;
        Shuffles {
            sigma: sigma.letters.clone(),
            pi: pi.letters.clone(),
            slots: Some((0..n).collect()),
            remaining: binomial_u128(total, n),
        }
    }

    fn render(&self, slots: &[usize]) -> Permutation {
        let mut out = Vec::with_capacity(self.sigma.len() + self.pi.len());
        self.render_into(slots, &mut out);
        Permutation { letters: out }
    }

    fn render_into(&self, slots: &[usize], out: &mut Vec<Letter>) {
        out.clear();
        let total = self.sigma.len() + self.pi.len();
        let (mut si, mut pj) = (0, 0);
        for slot in 0..total {
            if pj < slots.len() && slots[pj] == slot {
                out.push(self.pi[pj]);
                pj += 1;
            } else {
                out.push(self.sigma[si]);
                si += 1;
            }
        }
    }

    fn advance(&mut self, mut slots: Vec<usize>) {
        let total = self.sigma.len() + self.pi.len();
        let n = slots.len();
        self.remaining -= 1;
        // next n-subset of 0..total in lexicographic order
        if let Some(i) = (0..n).rev().find(|&i| slots[i] < total - n + i) {
            slots[i] += 1;
            for j in i + 1..n {
                slots[j] = slots[j - 1] + 1;
            }
            self.slots = Some(slots);
        }
    }

    /// Writes the next shuffle into `out` instead of allocating one.
    /// Returns `false`, leaving `out` untouched, once exhausted.
    pub fn next_into(&mut self, out: &mut Vec<Letter>) -> bool {
        let Some(slots) = self.slots.take() else {
            return false;
        };
        self.render_into(&slots, out);
        self.advance(slots);
        true
    }
}

impl Iterator for Shuffles {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let slots = self.slots.take()?;
        let item = self.render(&slots);
        self.advance(slots);
        Some(item)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        match usize::try_from(self.remaining) {
            Ok(r) => (r, Some(r)),
            Err(_) => (usize::MAX, None),
        }
    }
}

impl core::iter::FusedIterator for Shuffles {}

/// Exact while the count fits in `usize`.
impl ExactSizeIterator for Shuffles {}

/// All `binomial(m + n, n)` shuffles of disjoint `sigma` and `pi`, lazily.
pub fn enumerate_shuffles(sigma: &Permutation, pi: &Permutation) -> Result<Shuffles> {
    check_disjoint(sigma, pi)?;
    Ok(Shuffles::new(sigma, pi))
}

/// Calls `visit` on every shuffle of `sigma` and `pi`, in the same order as
/// [`enumerate_shuffles`], reusing one buffer.
pub fn for_each_shuffle<F: FnMut(&[Letter])>(sigma: &Permutation, pi: &Permutation, mut visit: F) -> Result<()> {
    check_disjoint(sigma, pi)?;
    let mut buf = Vec::with_capacity(sigma.len() + pi.len());
    weave(&sigma.letters, &pi.letters, &mut buf, &mut visit);
    Ok(())
}

fn weave<F: FnMut(&[Letter])>(sigma: &[Letter], pi: &[Letter], buf: &mut Vec<Letter>, visit: &mut F) {
    match (sigma.split_first(), pi.split_first()) {
        (_, None) => {
            let len = buf.len();
            buf.extend_from_slice(sigma);
            visit(buf);
            buf.truncate(len);
        }
        (None, Some(_)) => {
            let len = buf.len();
            buf.extend_from_slice(pi);
            visit(buf);
            buf.truncate(len);
        }
        (Some((&a, sigma_rest)), Some((&b, pi_rest))) => {
            // a letter of pi placed earlier gives the lexicographically smaller slot set
            buf.push(b);
            weave(sigma, pi_rest, buf, visit);
            buf.pop();
            buf.push(a);
            weave(sigma_rest, pi, buf, visit);
            buf.pop();
        }
    }
}

/// `sum q^{maj(alpha)}` over the shuffles `alpha` of `sigma` and `pi` with
/// exactly `k` descents. The zero polynomial if no shuffle has `k` descents.
pub fn shuffle_generating_function(sigma: &Permutation, pi: &Permutation, k: usize) -> Result<QPoly> {
    let table = shuffle_statistics(sigma, pi)?;
    Ok(table.into_iter().nth(k).unwrap_or_else(QPoly::zero))
}

/// The generating functions for every descent count at once: entry `k` is
/// `sum q^{maj(alpha)}` over the shuffles with `k` descents. The vector has
/// `max(m + n, 1)` entries.
pub fn shuffle_statistics(sigma: &Permutation, pi: &Permutation) -> Result<Vec<QPoly>> {
    let counts = shuffle_counts(sigma, pi)?;
    Ok(counts.iter().map(|row| QPoly::from_u64_coefficients(row)).collect())
}

/// Number of shuffles with each `(des, maj)`: `counts[des][maj]`.
///
/// Walks the tree of interleavings depth-first, carrying the running
/// statistics, so each shuffle costs O(1) amortized. Counts are `u64`, which
/// bounds usable inputs far beyond what is enumerable anyway.
pub fn shuffle_counts(sigma: &Permutation, pi: &Permutation) -> Result<Vec<Vec<u64>>> {
    check_disjoint(sigma, pi)?;
    let total = sigma.len() + pi.len();
    let stride = total * total.saturating_sub(1) / 2 + 1;
    let mut walker = Walker { sigma: &sigma.letters, pi: &pi.letters, stride, flat: vec![0u64; stride * total.max(1)] };
    match (sigma.letters.first(), pi.letters.first()) {
        (None, None) => walker.flat[0] = 1,
        _ => {
            if let Some(&l) = sigma.letters.first() {
                walker.walk(1, 0, l, 0, 0);
            }
            if let Some(&l) = pi.letters.first() {
                walker.walk(0, 1, l, 0, 0);
            }
        }
    }
    let mut counts: Vec<Vec<u64>> = walker.flat.chunks(stride).map(<[u64]>::to_vec).collect();
    for row in counts.iter_mut() {
        while row.last() == Some(&0) {
            row.pop();
        }
    }
    Ok(counts)
}

/// Depth-first walk over interleavings; `last` is the most recently placed
/// letter and `(i, j)` count the letters used from each side.
struct Walker<'a> {
    sigma: &'a [Letter],
    pi: &'a [Letter],
    stride: usize,
    flat: Vec<u64>,
}

impl Walker<'_> {
    fn walk(&mut self, i: usize, j: usize, last: Letter, des: usize, maj: usize) {
        // 1-based position of `last`
        let pos = i + j;
        let mut leaf = true;
        if let Some(&next) = self.sigma.get(i) {
            leaf = false;
            if last > next {
                self.walk(i + 1, j, next, des + 1, maj + pos);
            } else {
                self.walk(i + 1, j, next, des, maj);
            }
        }
        if let Some(&next) = self.pi.get(j) {
            leaf = false;
            if last > next {
                self.walk(i, j + 1, next, des + 1, maj + pos);
            } else {
                self.walk(i, j + 1, next, des, maj);
            }
        }
        if leaf {
            self.flat[des * self.stride + maj] += 1;
        }
    }
}

fn binomial_u128(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Letters of `p` joined by single spaces.
pub fn render_letters(letters: &[Letter]) -> alloc::string::String {
    letters.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
}
