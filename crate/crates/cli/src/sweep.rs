//! Exhaustive sweeps over all relative-order classes of disjoint pairs.
//!
//! Every statistic involved depends only on the relative order of the
//! letters, so the pairs `(sigma, pi)` with `m + n = N` are covered by
//! taking each permutation `w` of `1..=N` and splitting it after every
//! position: `sigma = w[..m]`, `pi = w[m..]`.

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use shuffle_core::bijection::{pair_count, PartitionPair, PsiStepView, ShuffleBijection};
use shuffle_core::perm::shuffle_counts;
use shuffle_core::{
    des_maj, for_each_shuffle, garsia_gessel_rhs, gaussian_binomial, next_permutation, q_chu_vandermonde_lhs,
    stanley_rhs, Error, Letter, Permutation, QPoly,
};

use crate::report::{Quantity, Theorem, VerificationReport};
use crate::verify::{describe, verify_garsia_gessel, verify_stanley};

/// Largest `m + n` swept by [`run_suite`] unless overridden.
pub const SUITE_CAP: usize = 9;

/// Failing instances kept in full per sweep; further ones are only counted.
const MAX_KEPT_FAILURES: usize = 50;

/// Calls `visit(sigma, pi)` once per relative-order class with `m + n <= max_len`,
/// by increasing `m + n`, then lexicographically in `w`, then by `m`.
pub fn for_each_class<F: FnMut(&Permutation, &Permutation)>(max_len: usize, mut visit: F) {
    for total in 0..=max_len {
        let mut w: Vec<Letter> = (1..=total as Letter).collect();
        loop {
            for m in 0..=total {
                let sigma = Permutation::new(w[..m].to_vec()).expect("distinct");
                let pi = Permutation::new(w[m..].to_vec()).expect("distinct");
                visit(&sigma, &pi);
            }
            if !next_permutation(&mut w) {
                break;
            }
        }
    }
}

/// Result of one sweep: a tally report per `(theorem, m, n)` plus the
/// failing instances in full.
#[derive(Debug, Clone, Default)]
pub struct SweepOutcome {
    pub tallies: Vec<VerificationReport>,
    pub failures: Vec<VerificationReport>,
    /// Instances checked, summed over theorems.
    pub instances: u64,
    /// Shuffles visited.
    pub shuffles: u64,
}

impl SweepOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.tallies.iter().all(VerificationReport::passed)
    }

    pub fn reports(&self) -> impl Iterator<Item = &VerificationReport> {
        self.tallies.iter().chain(&self.failures)
    }
}

#[derive(Default)]
struct Tally {
    counts: BTreeMap<(Theorem, usize, usize), (u64, u64)>,
    failures: Vec<VerificationReport>,
    instances: u64,
    shuffles: u64,
}

impl Tally {
    fn record(&mut self, theorem: Theorem, m: usize, n: usize, pass: bool) {
        let entry = self.counts.entry((theorem, m, n)).or_default();
        entry.0 += u64::from(pass);
        entry.1 += 1;
        self.instances += 1;
    }

    fn fail(&mut self, report: VerificationReport) {
        if self.failures.len() < MAX_KEPT_FAILURES {
            self.failures.push(report);
        }
    }

    fn finish(self, start: Instant) -> SweepOutcome {
        let elapsed = start.elapsed();
        let tallies = self
            .counts
            .into_iter()
            .map(|((theorem, m, n), (passed, total))| {
                VerificationReport::tally(theorem, format!("all classes with m={m}, n={n}"), passed, total)
                    .with_elapsed(elapsed)
            })
            .collect();
        SweepOutcome { tallies, failures: self.failures, instances: self.instances, shuffles: self.shuffles }
    }
}

fn count_vector(p: &QPoly) -> Vec<u64> {
    p.to_u64_coefficients().expect("closed forms for enumerable sizes fit in u64")
}

fn trimmed(row: &[u64]) -> &[u64] {
    let len = row.iter().rposition(|&c| c != 0).map_or(0, |i| i + 1);
    &row[..len]
}

/// Stanley's identity for every class with `m + n <= max_len` and every
/// `k` in `0..m+n`: enumerated `(des, maj)` counts against the closed form.
pub fn stanley_sweep(max_len: usize) -> SweepOutcome {
    let start = Instant::now();
    let mut tally = Tally::default();
    let mut closed: HashMap<[usize; 7], Vec<u64>> = HashMap::new();
    for_each_class(max_len, |sigma, pi| {
        let counts = shuffle_counts(sigma, pi).expect("classes are disjoint");
        let (m, n) = (sigma.len(), pi.len());
        let (r, maj_sigma) = des_maj(sigma.letters());
        let (s, maj_pi) = des_maj(pi.letters());
        tally.shuffles += counts.iter().flatten().sum::<u64>();
        for k in 0..(m + n).max(1) {
            let rhs = closed
                .entry([m, n, r, s, k, maj_sigma, maj_pi])
                .or_insert_with(|| count_vector(&stanley_rhs(m, n, r, s, k, maj_sigma, maj_pi)));
            let lhs = counts.get(k).map_or(&[][..], |row| trimmed(row));
            let pass = lhs == &rhs[..];
            tally.record(Theorem::Stanley, m, n, pass);
            if !pass {
                tally.fail(VerificationReport::compare(
                    Theorem::Stanley,
                    format!("{}, k={k}", describe(sigma, pi)),
                    Quantity::Polynomial(QPoly::from_u64_coefficients(lhs)),
                    Quantity::Polynomial(QPoly::from_u64_coefficients(rhs)),
                ));
            }
        }
    });
    tally.finish(start)
}

/// The Garsia–Gessel identity for every class with `m + n <= max_len`:
/// the `maj` distribution over all shuffles against the closed form.
pub fn garsia_gessel_sweep(max_len: usize) -> SweepOutcome {
    let start = Instant::now();
    let mut tally = Tally::default();
    let mut closed: HashMap<[usize; 4], Vec<u64>> = HashMap::new();
    let mut lhs: Vec<u64> = Vec::new();
    for_each_class(max_len, |sigma, pi| {
        let counts = shuffle_counts(sigma, pi).expect("classes are disjoint");
        let (m, n) = (sigma.len(), pi.len());
        let maj_sigma = des_maj(sigma.letters()).1;
        let maj_pi = des_maj(pi.letters()).1;
        lhs.clear();
        for row in &counts {
            if lhs.len() < row.len() {
                lhs.resize(row.len(), 0);
            }
            for (acc, &c) in lhs.iter_mut().zip(row) {
                *acc += c;
            }
        }
        tally.shuffles += lhs.iter().sum::<u64>();
        let rhs = closed
            .entry([m, n, maj_sigma, maj_pi])
            .or_insert_with(|| count_vector(&garsia_gessel_rhs(m, n, maj_sigma, maj_pi)));
        let pass = trimmed(&lhs) == &rhs[..];
        tally.record(Theorem::GarsiaGessel, m, n, pass);
        if !pass {
            tally.fail(VerificationReport::compare(
                Theorem::GarsiaGessel,
                describe(sigma, pi),
                Quantity::Polynomial(QPoly::from_u64_coefficients(&lhs)),
                Quantity::Polynomial(QPoly::from_u64_coefficients(rhs)),
            ));
        }
    });
    tally.finish(start)
}

/// Summing the closed forms over `k` gives the closed form for all
/// shuffles, for every `m, n <= max` and every admissible `r, s`; and the
/// q-Chu–Vandermonde sum equals `[m + n, h]_q` for every `h`.
pub fn chu_vandermonde_reports(max: usize) -> Vec<VerificationReport> {
    let mut reports = Vec::new();
    for m in 0..=max {
        for n in 0..=max {
            let start = Instant::now();
            let mut passed = 0;
            let mut total = 0;
            let rhs = garsia_gessel_rhs(m, n, 0, 0);
            for r in 0..m.max(1) {
                for s in 0..n.max(1) {
                    let lhs: QPoly = (0..=m + n).map(|k| stanley_rhs(m, n, r, s, k, 0, 0)).sum();
                    passed += u64::from(lhs == rhs);
                    total += 1;
                }
            }
            for h in 0..=m + n {
                passed += u64::from(q_chu_vandermonde_lhs(n, m, h) == gaussian_binomial((m + n) as i64, h as i64));
                total += 1;
            }
            reports.push(
                VerificationReport::tally(Theorem::GarsiaGessel, format!("closed-form sums, m={m}, n={n}"), passed, total)
                    .with_elapsed(start.elapsed()),
            );
        }
    }
    reports
}

/// Checks of the bijection on one class, reusing buffers across classes.
struct RoundTrip {
    pair: PartitionPair,
    steps: Vec<(usize, bool)>,
    per_k: Vec<usize>,
    /// Pair counts for every `k`, keyed by `(m, n, r, s)`.
    pair_counts: HashMap<(usize, usize, usize, usize), Vec<usize>>,
}

/// What went wrong first, if anything, for each of the two theorems.
#[derive(Default)]
struct ClassVerdict {
    bijection: Option<String>,
    nesting: Option<String>,
    shuffles: u64,
}

impl RoundTrip {
    fn new() -> Self {
        RoundTrip { pair: PartitionPair::default(), steps: Vec::new(), per_k: Vec::new(), pair_counts: HashMap::new() }
    }

    /// For every shuffle `alpha`: `Phi(alpha)` lies in the pair class for
    /// `des(alpha)`, the weight law holds, `Psi(Phi(alpha)) = alpha`, and the
    /// prefix sets of the `T` sequences seen by `Psi` are nested inside
    /// `{0, ..., m}` with `t(i)` last and extreme. Then for every `k` the
    /// number of shuffles equals the number of pairs; with `Psi . Phi = id`
    /// this makes `Phi` a bijection onto the pairs, hence `Phi . Psi = id`.
    /// With `literal`, `Phi(Psi(pair)) = pair` is also run on every pair.
    fn check(&mut self, sigma: &Permutation, pi: &Permutation, literal: bool) -> ClassVerdict {
        let mut verdict = ClassVerdict::default();
        let mut bij = ShuffleBijection::new(sigma, pi).expect("classes are disjoint");
        let (m, n, r, s) = bij.parameters();
        if m + 1 >= NESTING_LIMIT {
            verdict.nesting = Some(format!("prefix sets are tracked only for m < {}", NESTING_LIMIT - 1));
        }
        let base = bij.maj_sigma() + bij.maj_pi();
        self.per_k.clear();
        self.per_k.resize(m + n + 1, 0);
        let RoundTrip { pair, steps, per_k, pair_counts } = self;
        for_each_shuffle(sigma, pi, |alpha| {
            verdict.shuffles += 1;
            if verdict.bijection.is_some() {
                return;
            }
            let (des, maj) = des_maj(alpha);
            per_k[des] += 1;
            if let Err(e) = bij.phi_into(alpha, pair) {
                verdict.bijection = Some(format!("phi({}) failed: {e}", render(alpha)));
                return;
            }
            if pair.k != des {
                verdict.bijection = Some(format!("phi({}) reports k={} but des={des}", render(alpha), pair.k));
                return;
            }
            if maj != pair.weight() + base {
                verdict.bijection = Some(format!(
                    "weight law fails for {}: maj={maj}, |lambda|+|mu|+maj(sigma)+maj(pi)={}",
                    render(alpha),
                    pair.weight() + base
                ));
                return;
            }
            steps.clear();
            steps.extend_from_slice(bij.removal_steps());
            let mut nesting = NestingCheck::new(m, steps);
            let check_nesting = verdict.nesting.is_none();
            let back = bij.psi_observed(pair.k, &pair.lambda, &pair.mu, |view| {
                if check_nesting {
                    nesting.step(view);
                }
            });
            match back {
                Ok(back) if back == alpha => {}
                Ok(back) => {
                    verdict.bijection =
                        Some(format!("psi(phi({})) = {} differs", render(alpha), render(back)));
                }
                // psi checks membership in the pair class before anything else
                Err(e @ Error::InvalidPair(_)) => {
                    verdict.bijection = Some(format!("phi({}) = {pair:?} outside the pair class: {e}", render(alpha)));
                }
                Err(e) => verdict.bijection = Some(format!("psi(phi({})) failed: {e}", render(alpha))),
            }
            if check_nesting {
                if let Some(problem) = nesting.problem {
                    verdict.nesting = Some(format!("{}: {problem}", render(alpha)));
                }
            }
        })
        .expect("classes are disjoint");
        if verdict.bijection.is_none() {
            let counts = pair_counts
                .entry((m, n, r, s))
                .or_insert_with(|| (0..=m + n).map(|k| pair_count(m, n, r, s, k)).collect());
            for (k, (&count, &pairs)) in per_k.iter().zip(counts.iter()).enumerate() {
                if pairs != count {
                    verdict.bijection = Some(format!("k={k}: {count} shuffles but {pairs} pairs"));
                    break;
                }
            }
        }
        if literal && verdict.bijection.is_none() {
            verdict.bijection = literal_inverse_check(&mut bij, m + n);
        }
        verdict
    }
}

/// `Phi(Psi(pair)) = pair` for every pair and every `k`.
fn literal_inverse_check(bij: &mut ShuffleBijection, max_k: usize) -> Option<String> {
    let mut back = PartitionPair::default();
    for k in 0..=max_k {
        for pair in bij.pairs(k) {
            let alpha = match bij.psi_observed(k, &pair.lambda, &pair.mu, |_| {}) {
                Ok(alpha) => alpha.to_vec(),
                Err(e) => return Some(format!("psi({pair:?}) failed: {e}")),
            };
            if let Err(e) = bij.phi_into(&alpha, &mut back) {
                return Some(format!("phi(psi({pair:?})) failed: {e}"));
            }
            if back != pair {
                return Some(format!("phi(psi({pair:?})) = {back:?}"));
            }
        }
    }
    None
}

/// Prefix-set bookkeeping along one inverse run (steps arrive for
/// `i = n, n - 1, ..., 1`).
struct NestingCheck<'a> {
    /// `ST^(i+1)`, initially `{0, ..., m}`.
    outer: u64,
    steps: &'a [(usize, bool)],
    problem: Option<String>,
}

/// Prefix sets are bit masks, so entries must stay below this.
const NESTING_LIMIT: usize = 64;

impl<'a> NestingCheck<'a> {
    fn new(m: usize, steps: &'a [(usize, bool)]) -> Self {
        let outer = if m + 1 >= NESTING_LIMIT { u64::MAX } else { (1u64 << (m + 1)) - 1 };
        NestingCheck { outer, steps, problem: None }
    }

    fn step(&mut self, view: &PsiStepView<'_>) {
        if self.problem.is_some() {
            return;
        }
        let prefix = &view.t_sequence[..view.position];
        let mut set = 0u64;
        let mut in_range = true;
        for &t in prefix {
            in_range &= (t as u64) < NESTING_LIMIT as u64;
            set |= 1u64 << (t as u64 & 63);
        }
        let (t, dropped) = self.steps[view.index - 1];
        let extreme = if dropped { 63 - set.leading_zeros() as usize } else { set.trailing_zeros() as usize };
        let ok = in_range
            & (set.count_ones() as usize == prefix.len())
            & (set & !self.outer == 0)
            & (prefix.last() == Some(&(t as i64)))
            & (extreme == t);
        if ok {
            self.outer = set;
        } else {
            self.problem = Some(self.diagnose(view, set, in_range));
        }
    }

    #[cold]
    fn diagnose(&self, view: &PsiStepView<'_>, set: u64, in_range: bool) -> String {
        let i = view.index;
        let prefix = &view.t_sequence[..view.position];
        let (t, dropped) = self.steps[i - 1];
        if !in_range {
            format!("T^({i}) has entries outside 0..{NESTING_LIMIT}")
        } else if set.count_ones() as usize != prefix.len() {
            format!("T^({i}) repeats an entry")
        } else if set & !self.outer != 0 {
            format!("ST^({i}) is not contained in the next set")
        } else if prefix.last() != Some(&(t as i64)) {
            format!("t({i}) = {t} is not the last entry of T^({i})")
        } else {
            let which = if dropped { "maximum" } else { "minimum" };
            format!("t({i}) = {t} is not the {which} of ST^({i})")
        }
    }
}

fn render(letters: &[Letter]) -> String {
    shuffle_core::perm::render_letters(letters)
}

/// Round trips, the weight law, class membership and prefix-set nesting
/// over every class with `m + n <= max_len`. Classes with
/// `m + n <= literal_len` additionally run `Phi(Psi(pair))` on every pair.
pub fn roundtrip_sweep(max_len: usize, literal_len: usize) -> SweepOutcome {
    let start = Instant::now();
    let mut tally = Tally::default();
    let mut checker = RoundTrip::new();
    for_each_class(max_len, |sigma, pi| {
        let verdict = checker.check(sigma, pi, sigma.len() + pi.len() <= literal_len);
        tally.shuffles += verdict.shuffles;
        record_class(&mut tally, sigma, pi, Theorem::BijectionRoundtrip, verdict.bijection);
        record_class(&mut tally, sigma, pi, Theorem::NovickPrefix, verdict.nesting);
    });
    tally.finish(start)
}

fn record_class(tally: &mut Tally, sigma: &Permutation, pi: &Permutation, theorem: Theorem, problem: Option<String>) {
    tally.record(theorem, sigma.len(), pi.len(), problem.is_none());
    if let Some(problem) = problem {
        tally.fail(VerificationReport::compare(
            theorem,
            format!("{}; {problem}", describe(sigma, pi)),
            Quantity::Count(0),
            Quantity::Count(1),
        ));
    }
}

/// Random disjoint pair with `m + n = total`, letters drawn from `1..=3 * total`.
fn random_pair<R: Rng>(rng: &mut R, total: usize) -> (Permutation, Permutation) {
    let mut pool: Vec<Letter> = (1..=3 * total as Letter).collect();
    pool.shuffle(rng);
    pool.truncate(total);
    let m = rng.gen_range(0..=total);
    let pi = pool.split_off(m);
    (Permutation::new(pool).expect("distinct"), Permutation::new(pi).expect("distinct"))
}

/// Number of random instances beyond the exhaustive range.
const SPOT_CHECKS: usize = 6;

/// The exhaustive sweeps up to `max_len` followed by seeded random spot
/// checks on larger pairs. Apart from `elapsed_micros`, the report
/// sequence depends only on the arguments.
pub fn run_suite(max_len: usize, seed: u64, cap: usize) -> Result<Vec<VerificationReport>, Error> {
    if max_len > cap {
        return Err(Error::OutOfRange { what: "max total length", value: max_len, min: 0, max: cap });
    }
    let mut reports = Vec::new();
    for outcome in [stanley_sweep(max_len), garsia_gessel_sweep(max_len), roundtrip_sweep(max_len, max_len.min(6))] {
        reports.extend(outcome.reports().cloned());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checker = RoundTrip::new();
    for _ in 0..SPOT_CHECKS {
        let total = rng.gen_range(max_len + 1..=max_len + 3);
        let (sigma, pi) = random_pair(&mut rng, total);
        let start = Instant::now();
        let stanley = verify_stanley(&sigma, &pi)?;
        let passed = stanley.iter().filter(|r| r.passed()).count() as u64;
        reports.push(
            VerificationReport::tally(Theorem::Stanley, format!("spot check {}, all k", describe(&sigma, &pi)), passed, stanley.len() as u64)
                .with_elapsed(start.elapsed()),
        );
        reports.extend(stanley.into_iter().filter(|r| !r.passed()));
        reports.push(verify_garsia_gessel(&sigma, &pi)?);
        let start = Instant::now();
        let verdict = checker.check(&sigma, &pi, false);
        for (theorem, problem) in [(Theorem::BijectionRoundtrip, verdict.bijection), (Theorem::NovickPrefix, verdict.nesting)] {
            let mut parameters = format!("spot check {}", describe(&sigma, &pi));
            if let Some(p) = &problem {
                parameters.push_str(&format!("; {p}"));
            }
            reports.push(
                VerificationReport::tally(theorem, parameters, u64::from(problem.is_none()), 1).with_elapsed(start.elapsed()),
            );
        }
    }
    Ok(reports)
}
