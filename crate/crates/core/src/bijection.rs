//! The bijection between the `k`-descent shuffles of two disjoint
//! permutations and pairs of bounded partitions.
//!
//! Notation: `sigma` has length `m` and `r` descents, `pi` has length `n`
//! and `s` descents, and `alpha` is a shuffle with `k` descents. Removing
//! `pi_1, ..., pi_i` from `alpha` gives `alpha^(i)`, so `alpha^(0) = alpha`
//! and `alpha^(n) = sigma`. With `d_i(pi)` the number of descents of `pi` at
//! positions `>= i`, the step values are
//!
//! ```text
//! t(i) = maj(alpha^(i-1)) - maj(alpha^(i)) - d_i(pi)
//! ```
//!
//! The forward map sends `alpha` to `(lambda, mu)`: `lambda` collects `t(i)`
//! over the steps where removing `pi_i` loses a descent (latest step first),
//! `mu` the remaining `t(i)` in step order. Then
//!
//! ```text
//! m >= lambda_1 >= ... >= lambda_{k-r} >= k - s >= mu_1 >= ... >= mu_{n-k+r} >= 0
//! maj(alpha) = |lambda| + |mu| + maj(sigma) + maj(pi)
//! ```
//!
//! Both sequences have fixed lengths and may end in zeros (`lambda` only
//! when `k = s`); the zero-dropped forms are ordinary partitions.
//!
//! The inverse rebuilds `alpha` by inserting `pi_n, ..., pi_1` into `sigma`.
//! Before inserting `pi_i` it lists the shifted major increments
//! `T_j = im(alpha^(i), j - 1, pi_i) - d_i(pi)` for `j = 1..=k_{i+1}`
//! (`k_{n+1} = m + 1`), picks the largest `j` whose `T_j` is still in the
//! multiset `M` of parts, inserts `pi_i` before position `j` and removes one
//! copy of `T_j` from `M`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::insertion::{mis, shifted_label_prefix};
use crate::partition::{is_weakly_decreasing, weakly_decreasing_sequences, Partition};
use crate::perm::{check_disjoint, des_maj, tail_descents, Letter, Permutation};
use crate::{Error, Result};

/// The removal chain of a shuffle together with its step statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShuffleDecomposition {
    pub sigma: Permutation,
    pub pi: Permutation,
    /// `alpha^(0), ..., alpha^(n)`.
    pub chain: Vec<Permutation>,
    /// `t(1), ..., t(n)`.
    pub t_values: Vec<usize>,
    /// Entry `i - 1` is true iff `des(alpha^(i-1)) = des(alpha^(i)) + 1`.
    pub descent_drop_flags: Vec<bool>,
    /// `k_1 <= ... <= k_n`: the 1-based position of `pi_i` in `alpha^(i-1)`.
    pub insertion_positions: Vec<usize>,
}

impl ShuffleDecomposition {
    pub fn alpha(&self) -> &Permutation {
        &self.chain[0]
    }

    /// `d_i(pi)` for `i = 1..=n`.
    pub fn tail_counts(&self) -> Vec<usize> {
        (1..=self.pi.len()).map(|i| tail_descents(self.pi.letters(), i)).collect()
    }

    /// The pair `(lambda, mu)` read off the step values.
    pub fn pair(&self) -> PartitionPair {
        let mut lambda: Vec<usize> =
            self.t_values.iter().zip(&self.descent_drop_flags).filter(|(_, &f)| f).map(|(&t, _)| t).collect();
        lambda.reverse();
        let mu = self.t_values.iter().zip(&self.descent_drop_flags).filter(|(_, &f)| !f).map(|(&t, _)| t).collect();
        PartitionPair { lambda, mu, k: self.alpha().des() }
    }
}

/// The image of a `k`-descent shuffle: `lambda` has exactly `k - r` entries
/// and `mu` exactly `n - k + r`, both weakly decreasing and possibly ending
/// in zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PartitionPair {
    pub lambda: Vec<usize>,
    pub mu: Vec<usize>,
    pub k: usize,
}

impl PartitionPair {
    pub fn new(lambda: Vec<usize>, mu: Vec<usize>, k: usize) -> Self {
        PartitionPair { lambda, mu, k }
    }

    pub fn lambda_partition(&self) -> Result<Partition> {
        Partition::from_padded(&self.lambda)
    }

    pub fn mu_partition(&self) -> Result<Partition> {
        Partition::from_padded(&self.mu)
    }

    /// `|lambda| + |mu|`
    pub fn weight(&self) -> usize {
        self.lambda.iter().sum::<usize>() + self.mu.iter().sum::<usize>()
    }
}

/// One insertion step of the inverse map, as seen by an observer.
#[derive(Debug, Clone, Copy)]
pub struct PsiStepView<'a> {
    /// `i`: the step inserts `pi_i`.
    pub index: usize,
    pub letter: Letter,
    /// `T_1, ..., T_{k_{i+1}}`.
    pub t_sequence: &'a [i64],
    /// Multiplicities of the multiset `M` before this step, indexed by value.
    pub multiset: &'a [usize],
    /// The chosen 1-based position `k_i`.
    pub position: usize,
    /// `alpha^(i)`, before `pi_i` goes in.
    pub alpha_before: &'a [Letter],
}

/// An owned record of one inverse step, for display.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiStep {
    pub index: usize,
    pub letter: Letter,
    pub t_sequence: Vec<i64>,
    /// `M^(i)` in non-increasing order.
    pub multiset: Vec<usize>,
    pub position: usize,
    pub alpha_before: Permutation,
}

/// Steps of the inverse map, from `i = n` down to `i = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PsiTrace {
    pub steps: Vec<PsiStep>,
}

impl PsiTrace {
    /// `k_1, ..., k_n`.
    pub fn positions(&self) -> Vec<usize> {
        self.steps.iter().rev().map(|s| s.position).collect()
    }
}

/// The bijection for one fixed pair `(sigma, pi)`, with reusable buffers so
/// that sweeping over many shuffles does not allocate per call.
#[derive(Debug, Clone)]
pub struct ShuffleBijection {
    sigma: Permutation,
    pi: Permutation,
    r: usize,
    s: usize,
    maj_sigma: usize,
    maj_pi: usize,
    /// `tail[i - 1] = d_i(pi)`
    tail: Vec<usize>,
    slots: Vec<usize>,
    desc_before: Vec<usize>,
    buf: Vec<Letter>,
    t_seq: Vec<i64>,
    counts: Vec<usize>,
    steps: Vec<(usize, bool)>,
}

impl ShuffleBijection {
    pub fn new(sigma: &Permutation, pi: &Permutation) -> Result<Self> {
        check_disjoint(sigma, pi)?;
        let (r, maj_sigma) = des_maj(sigma.letters());
        let (s, maj_pi) = des_maj(pi.letters());
        let tail = (1..=pi.len()).map(|i| tail_descents(pi.letters(), i)).collect();
        let total = sigma.len() + pi.len();
        Ok(ShuffleBijection {
            sigma: sigma.clone(),
            pi: pi.clone(),
            r,
            s,
            maj_sigma,
            maj_pi,
            tail,
            slots: Vec::with_capacity(pi.len()),
            desc_before: Vec::with_capacity(pi.len()),
            buf: Vec::with_capacity(total),
            t_seq: Vec::with_capacity(total + 1),
            counts: Vec::with_capacity(total + 1),
            steps: Vec::with_capacity(pi.len()),
        })
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn pi(&self) -> &Permutation {
        &self.pi
    }

    /// `(m, n, r, s)`
    pub fn parameters(&self) -> (usize, usize, usize, usize) {
        (self.sigma.len(), self.pi.len(), self.r, self.s)
    }

    pub fn maj_sigma(&self) -> usize {
        self.maj_sigma
    }

    pub fn maj_pi(&self) -> usize {
        self.maj_pi
    }

    /// Records the slot of every letter of `pi` in `alpha` together with the
    /// number of descents strictly left of it, failing at the first letter
    /// that breaks the interleaving. Returns `des(alpha)`.
    fn locate(&mut self, alpha: &[Letter]) -> Result<usize> {
        let sigma = self.sigma.letters();
        let pi = self.pi.letters();
        if alpha.len() != sigma.len() + pi.len() {
            return Err(Error::NotAShuffle(format!(
                "length {} differs from {} + {}",
                alpha.len(),
                sigma.len(),
                pi.len()
            )));
        }
        // one spare entry so every position can be written unconditionally
        self.slots.clear();
        self.slots.resize(pi.len() + 1, 0);
        self.desc_before.clear();
        self.desc_before.resize(pi.len() + 1, 0);
        let (mut si, mut pj, mut des) = (0, 0, 0);
        let mut prev = alpha.first().copied().unwrap_or_default();
        for (idx, &a) in alpha.iter().enumerate() {
            des += usize::from(prev > a);
            prev = a;
            let from_sigma = sigma.get(si) == Some(&a);
            if !(from_sigma | (pi.get(pj) == Some(&a))) {
                return Err(self.interleaving_error(a, idx, si, pj));
            }
            self.slots[pj] = idx;
            self.desc_before[pj] = des;
            si += usize::from(from_sigma);
            pj += usize::from(!from_sigma);
        }
        self.slots.truncate(pi.len());
        self.desc_before.truncate(pi.len());
        Ok(des)
    }

    #[cold]
    fn interleaving_error(&self, a: Letter, idx: usize, si: usize, pj: usize) -> Error {
        let expect = |x: Option<&Letter>| x.map_or(String::from("nothing"), |l| format!("{l}"));
        Error::NotAShuffle(format!(
            "letter {a} at position {} is neither the next letter of sigma ({}) nor of pi ({})",
            idx + 1,
            expect(self.sigma.letters().get(si)),
            expect(self.pi.letters().get(pj))
        ))
    }

    /// Fills `self.steps` with `(t(i), descent dropped)` for `i = 1..=n`
    /// and returns `des(alpha)`.
    ///
    /// When `pi_i` is removed, `pi_1..pi_{i-1}` are already gone and all sat
    /// to its left, so it stands at position `p` right after the `p - 1`
    /// letters of `sigma` before it, between the last of those and its
    /// right neighbour in `alpha`. Every descent right of `p` moves one
    /// place left, the descents touching `pi_i` go, and a descent may form
    /// across the gap at `p - 1`. Altogether the major index drops by the
    /// number of descents of `alpha` from `pi_i` onwards, plus `p - 1` when
    /// the descent count drops.
    fn run_removals(&mut self, alpha: &[Letter]) -> Result<usize> {
        let k = self.locate(alpha)?;
        self.steps.clear();
        let sigma = self.sigma.letters();
        for (i, &slot) in self.slots.iter().enumerate() {
            let x = alpha[slot];
            let before = slot - i;
            let right = alpha.get(slot + 1).copied();
            let dropped = match (before.checked_sub(1).map(|l| sigma[l]), right) {
                (Some(l), Some(r)) => usize::from(l > x) + usize::from(x > r) > usize::from(l > r),
                (Some(l), None) => l > x,
                (None, Some(r)) => x > r,
                (None, None) => false,
            };
            let drop = k - self.desc_before[i] + before * usize::from(dropped);
            let t = drop as i64 - self.tail[i] as i64;
            if t < 0 {
                return Err(Error::ContractViolation(format!("t({}) = {t} is negative", i + 1)));
            }
            self.steps.push((t as usize, dropped));
        }
        Ok(k)
    }

    /// The forward map, writing into `out` (its buffers are reused).
    pub fn phi_into(&mut self, alpha: &[Letter], out: &mut PartitionPair) -> Result<()> {
        let k = self.run_removals(alpha)?;
        out.k = k;
        // each step is written to both sequences and kept in one of them
        let n = self.steps.len();
        out.lambda.clear();
        out.lambda.resize(n + 1, 0);
        out.mu.clear();
        out.mu.resize(n + 1, 0);
        let (mut li, mut mi) = (0, 0);
        for &(t, dropped) in self.steps.iter().rev() {
            out.lambda[li] = t;
            out.mu[mi] = t;
            li += usize::from(dropped);
            mi += usize::from(!dropped);
        }
        out.lambda.truncate(li);
        out.mu.truncate(mi);
        out.mu.reverse();
        Ok(())
    }

    /// `(t(i), descent dropped)` for `i = 1..=n`, from the last successful
    /// [`phi_into`](Self::phi_into), [`phi`](Self::phi) or
    /// [`decompose`](Self::decompose).
    pub fn removal_steps(&self) -> &[(usize, bool)] {
        &self.steps
    }

    pub fn phi(&mut self, alpha: &Permutation) -> Result<PartitionPair> {
        let mut out = PartitionPair::default();
        self.phi_into(alpha.letters(), &mut out)?;
        Ok(out)
    }

    /// The full removal chain of `alpha`.
    pub fn decompose(&mut self, alpha: &Permutation) -> Result<ShuffleDecomposition> {
        self.run_removals(alpha.letters())?;
        let n = self.pi.len();
        let mut chain = Vec::with_capacity(n + 1);
        chain.push(alpha.clone());
        for i in 0..n {
            let next = chain[i].without(self.pi.letters()[i]);
            chain.push(next);
        }
        Ok(ShuffleDecomposition {
            sigma: self.sigma.clone(),
            pi: self.pi.clone(),
            chain,
            t_values: self.steps.iter().map(|&(t, _)| t).collect(),
            descent_drop_flags: self.steps.iter().map(|&(_, d)| d).collect(),
            insertion_positions: self.slots.iter().enumerate().map(|(i, &slot)| slot - i + 1).collect(),
        })
    }

    /// Checks the chain `m >= lambda_1 >= ... >= k - s >= mu_1 >= ... >= 0`
    /// and the lengths `k - r` and `n - k + r`.
    pub fn validate_pair(&self, k: usize, lambda: &[usize], mu: &[usize]) -> Result<()> {
        let (m, n, r, s) = self.parameters();
        if k < r || k > n + r {
            return Err(Error::InvalidPair(format!("k = {k} outside {r}..={}", n + r)));
        }
        if lambda.len() != k - r {
            return Err(Error::InvalidPair(format!("lambda needs exactly k - r = {} entries, got {}", k - r, lambda.len())));
        }
        if mu.len() != n + r - k {
            return Err(Error::InvalidPair(format!("mu needs exactly n - k + r = {} entries, got {}", n + r - k, mu.len())));
        }
        if !is_weakly_decreasing(lambda) || !is_weakly_decreasing(mu) {
            return Err(Error::InvalidPair(String::from("lambda and mu must be weakly decreasing")));
        }
        if lambda.first().is_some_and(|&x| x > m) {
            return Err(Error::InvalidPair(format!("lambda_1 exceeds m = {m}")));
        }
        let pivot = k as i64 - s as i64;
        if lambda.last().is_some_and(|&x| (x as i64) < pivot) {
            return Err(Error::InvalidPair(format!("smallest part of lambda is below k - s = {pivot}")));
        }
        if mu.first().is_some_and(|&x| x as i64 > pivot) {
            return Err(Error::InvalidPair(format!("largest part of mu exceeds k - s = {pivot}")));
        }
        Ok(())
    }

    /// The inverse map, reporting every step to `observe`. On success the
    /// returned slice is `alpha`.
    pub fn psi_observed<F>(&mut self, k: usize, lambda: &[usize], mu: &[usize], mut observe: F) -> Result<&[Letter]>
    where
        F: FnMut(&PsiStepView<'_>),
    {
        self.validate_pair(k, lambda, mu)?;
        let m = self.sigma.len();
        let top = lambda.iter().chain(mu).copied().max().unwrap_or(0).max(m);
        self.counts.clear();
        self.counts.resize(top + 1, 0);
        for &x in lambda.iter().chain(mu) {
            self.counts[x] += 1;
        }
        self.buf.clear();
        self.buf.extend_from_slice(self.sigma.letters());
        let mut bound = m + 1;
        // descents of the partial shuffle; it has one more RL space than that
        let mut des = self.r;
        for i in (1..=self.pi.len()).rev() {
            let letter = self.pi.letters()[i - 1];
            let shift = self.tail[i - 1] as i64;
            // canonical labels are the major increments
            shifted_label_prefix(&self.buf, letter, bound, des + 1, shift, &mut self.t_seq);
            let counts = &self.counts;
            let Some(chosen) =
                self.t_seq.iter().rposition(|&t| t >= 0 && counts.get(t as usize).is_some_and(|&c| c > 0))
            else {
                return Err(Error::ContractViolation(format!("no entry of T^({i}) left in the multiset of parts")));
            };
            observe(&PsiStepView {
                index: i,
                letter,
                t_sequence: &self.t_seq,
                multiset: &self.counts,
                position: chosen + 1,
                alpha_before: &self.buf,
            });
            let t = self.t_seq[chosen];
            self.counts[t as usize] -= 1;
            des += usize::from(t + shift > des as i64);
            self.buf.insert(chosen, letter);
            bound = chosen + 1;
        }
        let (des, maj) = des_maj(&self.buf);
        if des != k {
            return Err(Error::ContractViolation(format!("rebuilt shuffle has {des} descents, expected {k}")));
        }
        let expected_maj = lambda.iter().chain(mu).sum::<usize>() + self.maj_sigma + self.maj_pi;
        if maj != expected_maj {
            return Err(Error::ContractViolation(format!("rebuilt shuffle has maj {maj}, expected {expected_maj}")));
        }
        Ok(&self.buf)
    }

    pub fn psi(&mut self, k: usize, pair: &PartitionPair) -> Result<Permutation> {
        check_k(k, pair)?;
        let alpha = self.psi_observed(k, &pair.lambda, &pair.mu, |_| {})?;
        Ok(Permutation::from_distinct(alpha.to_vec()))
    }

    pub fn psi_traced(&mut self, k: usize, pair: &PartitionPair) -> Result<(Permutation, PsiTrace)> {
        check_k(k, pair)?;
        let mut steps = Vec::new();
        let alpha = self.psi_observed(k, &pair.lambda, &pair.mu, |view| {
            let mut multiset = Vec::new();
            for (value, &count) in view.multiset.iter().enumerate().rev() {
                multiset.extend(core::iter::repeat(value).take(count));
            }
            steps.push(PsiStep {
                index: view.index,
                letter: view.letter,
                t_sequence: view.t_sequence.to_vec(),
                multiset,
                position: view.position,
                alpha_before: Permutation::from_distinct(view.alpha_before.to_vec()),
            });
        })?;
        Ok((Permutation::from_distinct(alpha.to_vec()), PsiTrace { steps }))
    }

    /// Every valid pair for `k` descents: `lambda` ranging over
    /// `P_{k-r}(k-s, m)` and `mu` over `P_{<= n-k+r}(k-s)`, both padded to
    /// their fixed lengths.
    pub fn pairs(&self, k: usize) -> Vec<PartitionPair> {
        let (m, n, r, s) = self.parameters();
        if k < r || k > n + r {
            return Vec::new();
        }
        let pivot = k as i64 - s as i64;
        let mu_len = n + r - k;
        if pivot < 0 && mu_len > 0 {
            return Vec::new();
        }
        let pivot = pivot.max(0) as usize;
        let lambdas = weakly_decreasing_sequences(k - r, pivot, m);
        let mus = weakly_decreasing_sequences(mu_len, 0, pivot);
        let mut out = Vec::with_capacity(lambdas.len() * mus.len());
        for lambda in &lambdas {
            for mu in &mus {
                out.push(PartitionPair { lambda: lambda.clone(), mu: mu.clone(), k });
            }
        }
        out
    }
}

fn check_k(k: usize, pair: &PartitionPair) -> Result<()> {
    if pair.k != k {
        return Err(Error::InvalidPair(format!("pair is tagged with k = {} but k = {k} was requested", pair.k)));
    }
    Ok(())
}

/// The removal chain of `alpha`, with `t(i)`, the descent-drop flags and the
/// insertion positions `k_i`.
pub fn decompose(sigma: &Permutation, pi: &Permutation, alpha: &Permutation) -> Result<ShuffleDecomposition> {
    ShuffleBijection::new(sigma, pi)?.decompose(alpha)
}

/// The forward map: a shuffle of `sigma` and `pi` to its partition pair.
pub fn phi(sigma: &Permutation, pi: &Permutation, alpha: &Permutation) -> Result<PartitionPair> {
    ShuffleBijection::new(sigma, pi)?.phi(alpha)
}

/// The inverse map: the unique shuffle with `k` descents whose image is `pair`.
pub fn psi(sigma: &Permutation, pi: &Permutation, k: usize, pair: &PartitionPair) -> Result<Permutation> {
    ShuffleBijection::new(sigma, pi)?.psi(k, pair)
}

/// [`psi`] together with the table of intermediate steps.
pub fn psi_traced(sigma: &Permutation, pi: &Permutation, k: usize, pair: &PartitionPair) -> Result<(Permutation, PsiTrace)> {
    ShuffleBijection::new(sigma, pi)?.psi_traced(k, pair)
}

/// The value sets `ST^(i)` of the sequences
/// `T^(i) = (im(alpha^(i), j, pi_i) - d_i(pi))_{0 <= j < k_i}`, recomputed
/// from major-index differences, after checking that
///
/// * the entries of each `T^(i)` are distinct and nonnegative,
/// * `t(i)` is the last entry of `T^(i)` and is its maximum when removing
///   `pi_i` drops a descent, its minimum otherwise,
/// * `ST^(1) ⊆ ST^(2) ⊆ ... ⊆ ST^(n) ⊆ {0, ..., m}`.
pub fn t_sequence_check(decomp: &ShuffleDecomposition) -> Result<Vec<BTreeSet<usize>>> {
    let n = decomp.pi.len();
    let m = decomp.sigma.len();
    let tails = decomp.tail_counts();
    let mut sets: Vec<BTreeSet<usize>> = Vec::with_capacity(n);
    for i in 1..=n {
        let letter = decomp.pi.letters()[i - 1];
        let increments = mis(&decomp.chain[i], letter)?.increments;
        let len = decomp.insertion_positions[i - 1];
        let mut seq = Vec::with_capacity(len);
        for &im in &increments[..len] {
            let t = im as i64 - tails[i - 1] as i64;
            if t < 0 {
                return Err(Error::ContractViolation(format!("T^({i}) has negative entry {t}")));
            }
            seq.push(t as usize);
        }
        let set: BTreeSet<usize> = seq.iter().copied().collect();
        if set.len() != seq.len() {
            return Err(Error::ContractViolation(format!("T^({i}) repeats a value")));
        }
        let t = decomp.t_values[i - 1];
        if seq.last() != Some(&t) {
            return Err(Error::ContractViolation(format!("t({i}) is not the last entry of T^({i})")));
        }
        let extreme = if decomp.descent_drop_flags[i - 1] { set.last() } else { set.first() };
        if extreme != Some(&t) {
            return Err(Error::ContractViolation(format!("t({i}) is not the expected extreme of ST^({i})")));
        }
        if set.last().is_some_and(|&x| x > m) {
            return Err(Error::ContractViolation(format!("ST^({i}) exceeds {m}")));
        }
        if let Some(prev) = sets.last() {
            if !prev.is_subset(&set) {
                return Err(Error::ContractViolation(format!("ST^({}) is not contained in ST^({i})", i - 1)));
            }
        }
        sets.push(set);
    }
    Ok(sets)
}

/// Total number of pairs for `k`, by counting the two partition classes.
pub fn pair_count(m: usize, n: usize, r: usize, s: usize, k: usize) -> usize {
    if k < r || k > n + r {
        return 0;
    }
    let pivot = k as i64 - s as i64;
    let mu_len = n + r - k;
    if pivot < 0 && mu_len > 0 {
        return 0;
    }
    let pivot = pivot.max(0) as usize;
    weakly_decreasing_sequences(k - r, pivot, m).len() * weakly_decreasing_sequences(mu_len, 0, pivot).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn worked() -> (Permutation, Permutation, Permutation) {
        (p("9 3 8 10 12 4 7"), p("1 2 6 5 13 11"), p("1 9 2 6 3 5 13 8 10 12 11 4 7"))
    }

    #[test]
    fn worked_example_forward() {
        let (sigma, pi, alpha) = worked();
        let d = decompose(&sigma, &pi, &alpha).unwrap();
        assert_eq!(d.t_values, vec![3, 2, 3, 2, 4, 6]);
        assert_eq!(d.descent_drop_flags, vec![false, false, true, false, true, true]);
        assert_eq!(d.insertion_positions, vec![1, 2, 2, 3, 3, 6]);
        assert_eq!(d.chain[6], sigma);
        assert_eq!(d.chain[4], p("9 3 13 8 10 12 11 4 7"));
        assert_eq!(d.tail_counts(), vec![2, 2, 2, 1, 1, 0]);
        let pair = phi(&sigma, &pi, &alpha).unwrap();
        assert_eq!(pair, PartitionPair::new(vec![6, 4, 3], vec![3, 2, 2], 5));
        assert_eq!(d.pair(), pair);
    }

    #[test]
    fn worked_example_inverse() {
        let (sigma, pi, alpha) = worked();
        let pair = PartitionPair::new(vec![6, 4, 3], vec![3, 2, 2], 5);
        let (rebuilt, trace) = psi_traced(&sigma, &pi, 5, &pair).unwrap();
        assert_eq!(rebuilt, alpha);
        assert_eq!(trace.positions(), vec![1, 2, 2, 3, 3, 6]);
        let first = &trace.steps[0];
        assert_eq!(first.index, 6);
        assert_eq!(first.letter, 11);
        assert_eq!(first.t_sequence, vec![3, 2, 4, 5, 1, 6, 7, 0]);
        assert_eq!(first.multiset, vec![6, 4, 3, 3, 2, 2]);
        assert_eq!(trace.steps[1].t_sequence, vec![3, 2, 4, 5, 6, 1]);
        assert_eq!(trace.steps[2].t_sequence[..3], [3, 4, 2]);
        assert_eq!(trace.steps[5].multiset, vec![3]);
    }

    #[test]
    fn worked_example_novick_sets() {
        let (sigma, pi, alpha) = worked();
        let d = decompose(&sigma, &pi, &alpha).unwrap();
        let sets = t_sequence_check(&d).unwrap();
        assert_eq!(sets.len(), 6);
        assert_eq!(sets[5], BTreeSet::from([1, 2, 3, 4, 5, 6]));
        assert_eq!(sets[0], BTreeSet::from([3]));
    }

    #[test]
    fn empty_pi() {
        let sigma = p("4 1 3 2");
        let d = decompose(&sigma, &Permutation::empty(), &sigma).unwrap();
        assert_eq!(d.chain, vec![sigma.clone()]);
        assert!(d.t_values.is_empty());
        let pair = phi(&sigma, &Permutation::empty(), &sigma).unwrap();
        assert_eq!(pair, PartitionPair::new(vec![], vec![], 2));
        assert_eq!(psi(&sigma, &Permutation::empty(), 2, &pair).unwrap(), sigma);
    }

    #[test]
    fn small_chain() {
        let d = decompose(&p("6 3"), &p("1 4"), &p("1 6 4 3")).unwrap();
        assert_eq!(d.chain, vec![p("1 6 4 3"), p("6 4 3"), p("6 3")]);
        // maj 5 -> 3 -> 1, d_1(14) = d_2(14) = 0
        assert_eq!(d.t_values, vec![2, 2]);
        assert_eq!(d.descent_drop_flags, vec![false, true]);
        assert_eq!(phi(&p("6 3"), &p("1 4"), &p("1 6 4 3")).unwrap(), PartitionPair::new(vec![2], vec![2], 2));
    }

    #[test]
    fn single_letter_at_rl_space() {
        let sigma = p("5 1 6 2 4");
        let pi = p("3");
        let lab = crate::insertion::canonical_labeling(&sigma, 3).unwrap();
        for (space, kind) in lab.kinds.iter().enumerate() {
            let alpha = crate::insertion::insert_at(&sigma, space, 3).unwrap();
            let pair = phi(&sigma, &pi, &alpha).unwrap();
            let label = lab.labels[space];
            match kind {
                crate::insertion::SpaceKind::RightToLeft => {
                    assert_eq!(pair, PartitionPair::new(vec![], vec![label], 2));
                }
                crate::insertion::SpaceKind::LeftToRight => {
                    assert_eq!(pair, PartitionPair::new(vec![label], vec![], 3));
                }
            }
            assert_eq!(psi(&sigma, &pi, pair.k, &pair).unwrap(), alpha);
        }
    }

    #[test]
    fn not_a_shuffle() {
        let (sigma, pi, _) = worked();
        let err = phi(&sigma, &pi, &p("3 9 1 2 6 5 13 8 10 12 11 4 7")).unwrap_err();
        assert_eq!(
            err,
            Error::NotAShuffle(String::from(
                "letter 3 at position 1 is neither the next letter of sigma (9) nor of pi (1)"
            ))
        );
        let err = phi(&p("2 1"), &p("3"), &p("1 2 3")).unwrap_err();
        assert!(matches!(err, Error::NotAShuffle(_)));
        assert!(matches!(phi(&p("2 1"), &p("3"), &p("2 1")), Err(Error::NotAShuffle(_))));
        assert!(matches!(phi(&p("2 1"), &p("1"), &p("2 1")), Err(Error::NotDisjoint(1))));
    }

    #[test]
    fn invalid_pairs_are_rejected_up_front() {
        let (sigma, pi, _) = worked();
        let bad = [
            (5, vec![8, 4, 3], vec![3, 2, 2]), // lambda_1 > m
            (5, vec![6, 4, 2], vec![3, 2, 2]), // lambda below k - s
            (5, vec![6, 4, 3], vec![4, 2, 2]), // mu above k - s
            (5, vec![6, 4], vec![3, 2, 2]),    // wrong length
            (5, vec![3, 4, 6], vec![3, 2, 2]), // not decreasing
            (1, vec![], vec![0; 7]),           // k < r
            (9, vec![3; 7], vec![]),           // k > n + r
        ];
        for (k, lambda, mu) in bad {
            let pair = PartitionPair::new(lambda, mu, k);
            assert!(matches!(psi(&sigma, &pi, k, &pair), Err(Error::InvalidPair(_))), "{pair:?}");
        }
        let pair = PartitionPair::new(vec![6, 4, 3], vec![3, 2, 2], 5);
        assert!(matches!(psi(&sigma, &pi, 4, &pair), Err(Error::InvalidPair(_))));
    }

    #[test]
    fn removal_steps_match_recomputed_major_indices() {
        let words = ["4 1 5 3 2", "2 5 1 4 3", "5 4 3 2 1", "1 2 3 4 5", "3 1 5 2 4"];
        for word in words {
            let w = p(word);
            for cut in 0..=w.len() {
                let sigma = Permutation::new(w.letters()[..cut].to_vec()).unwrap();
                let pi = Permutation::new(w.letters()[cut..].to_vec()).unwrap();
                let mut bij = ShuffleBijection::new(&sigma, &pi).unwrap();
                for alpha in crate::perm::enumerate_shuffles(&sigma, &pi).unwrap() {
                    bij.run_removals(alpha.letters()).unwrap();
                    let mut current = alpha.clone();
                    for (i, &letter) in pi.letters().iter().enumerate() {
                        let next = current.without(letter);
                        let t = current.maj() as i64 - next.maj() as i64 - pi.tail_descent_count(i + 1).unwrap() as i64;
                        let dropped = current.des() != next.des();
                        assert_eq!(bij.steps[i], (t as usize, dropped), "{alpha} step {}", i + 1);
                        current = next;
                    }
                }
            }
        }
    }

    #[test]
    fn pairs_count_matches_shuffle_count() {
        let sigma = p("3 1 4");
        let pi = p("5 2");
        let bij = ShuffleBijection::new(&sigma, &pi).unwrap();
        let mut per_k = [0usize; 5];
        for alpha in crate::perm::enumerate_shuffles(&sigma, &pi).unwrap() {
            per_k[alpha.des()] += 1;
        }
        for (k, &count) in per_k.iter().enumerate() {
            assert_eq!(bij.pairs(k).len(), count, "k = {k}");
            assert_eq!(pair_count(3, 2, 1, 1, k), count);
        }
    }

    #[test]
    fn lambda_may_end_in_zeros_when_k_equals_s() {
        // sigma = 1, pi = 3 2: k = 1 = s admits lambda = (0)
        let sigma = p("1");
        let pi = p("3 2");
        let pair = phi(&sigma, &pi, &p("3 2 1")).unwrap();
        assert_eq!(pair.k, 2);
        let alpha = psi(&sigma, &pi, 1, &PartitionPair::new(vec![0], vec![0], 1)).unwrap();
        assert_eq!(alpha.des(), 1);
        assert_eq!(phi(&sigma, &pi, &alpha).unwrap(), PartitionPair::new(vec![0], vec![0], 1));
        // an empty sigma forces t(i) = 0 everywhere
        let pair = phi(&Permutation::empty(), &pi, &pi).unwrap();
        assert_eq!(pair, PartitionPair::new(vec![0], vec![0], 1));
    }
}
