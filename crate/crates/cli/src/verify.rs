//! Single-instance checks of the shuffle identities and the insertion lemma.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::Rng;
use shuffle_core::{
    canonical_labeling, descent_change, garsia_gessel_rhs, insert_at, mis, next_permutation, q_factorial, q_integer,
    shuffle_statistics, stanley_rhs, Error, Letter, Permutation, QPoly, SpaceKind,
};

use crate::report::{Quantity, Theorem, VerificationReport};

/// Largest `n` accepted by [`verify_macmahon`] unless overridden.
pub const MACMAHON_CAP: usize = 8;

pub(crate) fn describe(sigma: &Permutation, pi: &Permutation) -> String {
    format!("sigma=[{sigma}], pi=[{pi}]")
}

/// One report per `k` in `0..m+n` (just `k = 0` when both are empty),
/// comparing the enumerated generating function with the closed form.
pub fn verify_stanley(sigma: &Permutation, pi: &Permutation) -> Result<Vec<VerificationReport>, Error> {
    let start = Instant::now();
    let by_des = shuffle_statistics(sigma, pi)?;
    let (m, n) = (sigma.len(), pi.len());
    let (r, s) = (sigma.des(), pi.des());
    let reports = (0..(m + n).max(1))
        .map(|k| {
            let lhs = by_des.get(k).cloned().unwrap_or_default();
            let rhs = stanley_rhs(m, n, r, s, k, sigma.maj(), pi.maj());
            VerificationReport::compare(
                Theorem::Stanley,
                format!("{}, k={k}", describe(sigma, pi)),
                Quantity::Polynomial(lhs),
                Quantity::Polynomial(rhs),
            )
        })
        .collect::<Vec<_>>();
    let elapsed = start.elapsed() / reports.len() as u32;
    Ok(reports.into_iter().map(|r| r.with_elapsed(elapsed)).collect())
}

pub fn verify_garsia_gessel(sigma: &Permutation, pi: &Permutation) -> Result<VerificationReport, Error> {
    let start = Instant::now();
    let lhs: QPoly = shuffle_statistics(sigma, pi)?.into_iter().sum();
    let rhs = garsia_gessel_rhs(sigma.len(), pi.len(), sigma.maj(), pi.maj());
    Ok(VerificationReport::compare(
        Theorem::GarsiaGessel,
        describe(sigma, pi),
        Quantity::Polynomial(lhs),
        Quantity::Polynomial(rhs),
    )
    .with_elapsed(start.elapsed()))
}

/// `sum q^maj` over all permutations of `1..=n` against `[n]_q!`.
pub fn verify_macmahon(n: usize, cap: usize) -> Result<VerificationReport, Error> {
    if n > cap {
        return Err(Error::OutOfRange { what: "n", value: n, min: 0, max: cap });
    }
    let start = Instant::now();
    let mut counts = vec![0u64; n * n.saturating_sub(1) / 2 + 1];
    let mut w: Vec<Letter> = (1..=n as Letter).collect();
    loop {
        counts[shuffle_core::des_maj(&w).1] += 1;
        if !next_permutation(&mut w) {
            break;
        }
    }
    Ok(VerificationReport::compare(
        Theorem::Macmahon,
        format!("n={n}"),
        Quantity::Polynomial(QPoly::from_u64_coefficients(&counts)),
        Quantity::Polynomial(q_factorial(n)),
    )
    .with_elapsed(start.elapsed()))
}

/// The insertion lemma for one `(sigma, r)`.
///
/// The reported sides are `sum_i q^{maj(sigma^(i)(r))}` and
/// `[n + 1]_q q^{maj(sigma)}`; the verdict additionally requires that the
/// canonical label of every space equals its major increment, that there
/// are `des(sigma) + 1` RL spaces, and that inserting at an RL space keeps
/// the descent count while an LR space adds one.
pub fn verify_insertion_lemma(sigma: &Permutation, r: Letter) -> Result<VerificationReport, Error> {
    let start = Instant::now();
    let n = sigma.len();
    let increments = mis(sigma, r)?.increments;
    let labeling = canonical_labeling(sigma, r)?;
    let mut lhs = QPoly::zero();
    for i in 0..=n {
        lhs += QPoly::monomial(insert_at(sigma, i, r)?.maj());
    }
    let rhs = q_integer(n + 1).shifted(sigma.maj());
    let mut problems = Vec::new();
    if labeling.labels != increments {
        problems.push(format!("labels {:?} differ from increments {:?}", labeling.labels, increments));
    }
    if labeling.rl_count != sigma.des() + 1 {
        problems.push(format!("{} RL spaces, des + 1 = {}", labeling.rl_count, sigma.des() + 1));
    }
    for (i, kind) in labeling.kinds.iter().enumerate() {
        let expected = usize::from(*kind == SpaceKind::LeftToRight);
        if descent_change(sigma, i, r)? != expected {
            problems.push(format!("space {i} is {kind} but changes des by {}", 1 - expected));
        }
    }
    let mut sorted = increments.clone();
    sorted.sort_unstable();
    if sorted != (0..=n).collect::<Vec<_>>() {
        problems.push(format!("increments {increments:?} are not a permutation of 0..={n}"));
    }
    let mut parameters = format!("sigma=[{sigma}], r={r}, rl_count={}", labeling.rl_count);
    if !problems.is_empty() {
        parameters.push_str(&format!("; {}", problems.join("; ")));
    }
    let mut report =
        VerificationReport::compare(Theorem::InsertionLemma, parameters, Quantity::Polynomial(lhs), Quantity::Polynomial(rhs));
    if !problems.is_empty() {
        report.verdict = crate::report::Verdict::Fail;
    }
    Ok(report.with_elapsed(start.elapsed()))
}

/// A random permutation of `len` distinct letters from `1..=2 * len + 2` and
/// a letter from the same range that it does not contain.
pub fn random_insertion_instance<R: Rng>(rng: &mut R, len: usize) -> (Permutation, Letter) {
    let mut pool: Vec<Letter> = (1..=2 * len as Letter + 2).collect();
    pool.shuffle(rng);
    let r = pool[len];
    pool.truncate(len);
    (Permutation::new(pool).expect("distinct by construction"), r)
}

/// `count` insertion-lemma checks on random `(sigma, r)` with `|sigma| <= max_len`.
pub fn random_insertion_checks<R: Rng>(rng: &mut R, count: usize, max_len: usize) -> Vec<VerificationReport> {
    (0..count)
        .map(|_| {
            let len = rng.gen_range(0..=max_len);
            let (sigma, r) = random_insertion_instance(rng, len);
            verify_insertion_lemma(&sigma, r).expect("r is not a letter of sigma")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::all_passed;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn small_stanley_instances() {
        let reports = verify_stanley(&p("6 3"), &p("1 4")).unwrap();
        assert_eq!(reports.len(), 4);
        assert!(all_passed(&reports));
        let empty = verify_stanley(&Permutation::empty(), &Permutation::empty()).unwrap();
        assert_eq!(empty.len(), 1);
        assert!(all_passed(&empty));
    }

    #[test]
    fn pi_empty_gives_single_monomial() {
        let sigma = p("3 1 2");
        let reports = verify_stanley(&sigma, &Permutation::empty()).unwrap();
        for (k, rep) in reports.iter().enumerate() {
            assert!(rep.passed());
            let expected = if k == sigma.des() { QPoly::monomial(sigma.maj()) } else { QPoly::zero() };
            assert_eq!(rep.lhs, Quantity::Polynomial(expected));
        }
    }

    #[test]
    fn garsia_gessel_instances() {
        let rep = verify_garsia_gessel(&p("6 3"), &p("1 4")).unwrap();
        assert!(rep.passed());
        // [4 choose 2] shifted by maj(63) + maj(14) = 1
        assert_eq!(rep.rhs, Quantity::Polynomial(QPoly::from_u64_coefficients(&[0, 1, 1, 2, 1, 1])));
        assert!(verify_garsia_gessel(&Permutation::empty(), &Permutation::empty()).unwrap().passed());
        assert!(verify_garsia_gessel(&p("1 2"), &p("2 3")).is_err());
    }

    #[test]
    fn macmahon_small_and_capped() {
        let rep = verify_macmahon(3, MACMAHON_CAP).unwrap();
        assert_eq!(rep.lhs, Quantity::Polynomial(QPoly::from_u64_coefficients(&[1, 2, 2, 1])));
        assert!(rep.passed());
        assert!(verify_macmahon(0, MACMAHON_CAP).unwrap().passed());
        assert!(verify_macmahon(9, MACMAHON_CAP).is_err());
    }

    #[test]
    fn insertion_lemma_examples() {
        let rep = verify_insertion_lemma(&p("10 1 9 8 2 7 4 3 6"), 5).unwrap();
        assert!(rep.passed(), "{rep}");
        assert!(rep.parameters.contains("rl_count=6"));
        let rep = verify_insertion_lemma(&Permutation::empty(), 1).unwrap();
        assert!(rep.passed());
        assert!(rep.parameters.contains("rl_count=1"));
        assert!(verify_insertion_lemma(&p("5 1 6 2 4"), 3).unwrap().passed());
        assert!(verify_insertion_lemma(&p("5 1 6 2 4"), 6).is_err());
    }
}
