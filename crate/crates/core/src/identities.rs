//! Closed forms for the shuffle generating functions.

use crate::qpoly::{gaussian_binomial, QPoly};

/// Closed form for the shuffles with `k` descents of `sigma` (length `m`,
/// `r` descents) and `pi` (length `n`, `s` descents):
///
/// ```text
/// [m - r + s, k - r]_q [n - s + r, k - s]_q q^{maj(sigma) + maj(pi) + (k - s)(k - r)}
/// ```
///
/// Zero whenever either Gaussian factor vanishes, in particular for
/// `k < max(r, s)`.
pub fn stanley_rhs(m: usize, n: usize, r: usize, s: usize, k: usize, maj_sigma: usize, maj_pi: usize) -> QPoly {
    let (m, n, r, s, k) = (m as i64, n as i64, r as i64, s as i64, k as i64);
    let left = gaussian_binomial(m - r + s, k - r);
    if left.is_zero() {
        return QPoly::zero();
    }
    let right = gaussian_binomial(n - s + r, k - s);
    if right.is_zero() {
        return QPoly::zero();
    }
    // both factors nonzero implies k >= r and k >= s
    let shift = maj_sigma + maj_pi + ((k - s) * (k - r)) as usize;
    (&left * &right).shifted(shift)
}

/// Closed form for all shuffles regardless of descents:
/// `[n + m, m]_q q^{maj(sigma) + maj(pi)}`.
pub fn garsia_gessel_rhs(m: usize, n: usize, maj_sigma: usize, maj_pi: usize) -> QPoly {
    gaussian_binomial((n + m) as i64, m as i64).shifted(maj_sigma + maj_pi)
}

/// `sum_{k=0}^{h} [n, k]_q [m, h - k]_q q^{(n - k)(h - k)}`, which equals
/// `[m + n, h]_q`.
pub fn q_chu_vandermonde_lhs(n: usize, m: usize, h: usize) -> QPoly {
    (0..=h.min(n))
        .map(|k| {
            let term = &gaussian_binomial(n as i64, k as i64) * &gaussian_binomial(m as i64, (h - k) as i64);
            term.shifted((n - k) * (h - k))
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::q_integer;
    use num_traits::Zero;

    #[test]
    fn worked_example_parameters() {
        let rhs = stanley_rhs(7, 6, 2, 2, 5, 6, 8);
        let expected = (&gaussian_binomial(7, 3) * &gaussian_binomial(6, 3)).shifted(23);
        assert_eq!(rhs, expected);
        assert!(!rhs.coefficient(34).is_zero());
    }

    #[test]
    fn below_max_descents_is_zero() {
        assert!(stanley_rhs(7, 6, 2, 3, 2, 6, 8).is_zero());
        assert!(stanley_rhs(7, 6, 4, 1, 3, 6, 8).is_zero());
    }

    #[test]
    fn single_letter_pi_matches_insertion_counts() {
        // n = 1, s = 0: k = r gives [r+1]_q q^{maj sigma}, k = r + 1 gives q^{r+1}[m-r]_q q^{maj sigma}
        for m in 1..7usize {
            for r in 0..m {
                for maj in [0usize, 3, 10] {
                    assert_eq!(stanley_rhs(m, 1, r, 0, r, maj, 0), q_integer(r + 1).shifted(maj));
                    assert_eq!(stanley_rhs(m, 1, r, 0, r + 1, maj, 0), q_integer(m - r).shifted(maj + r + 1));
                    assert!(stanley_rhs(m, 1, r, 0, r + 2, maj, 0).is_zero());
                }
            }
        }
    }

    #[test]
    fn garsia_gessel_examples() {
        assert_eq!(garsia_gessel_rhs(2, 2, 0, 0), gaussian_binomial(4, 2));
        assert_eq!(garsia_gessel_rhs(5, 0, 2, 3), QPoly::monomial(5));
        assert_eq!(garsia_gessel_rhs(4, 3, 1, 1).eval_at_one(), 35u32.into());
        assert_eq!(garsia_gessel_rhs(0, 0, 0, 0), QPoly::one());
    }

    #[test]
    fn chu_vandermonde() {
        for n in 0..=6 {
            for m in 0..=6 {
                for h in 0..=n + m {
                    assert_eq!(q_chu_vandermonde_lhs(n, m, h), gaussian_binomial((m + n) as i64, h as i64));
                }
            }
        }
    }
}
