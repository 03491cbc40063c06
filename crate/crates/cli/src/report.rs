//! Verification reports and their JSON form.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use shuffle_core::QPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem {
    Stanley,
    GarsiaGessel,
    Macmahon,
    InsertionLemma,
    BijectionRoundtrip,
    NovickPrefix,
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::Stanley => "stanley",
            Theorem::GarsiaGessel => "garsia_gessel",
            Theorem::Macmahon => "macmahon",
            Theorem::InsertionLemma => "insertion_lemma",
            Theorem::BijectionRoundtrip => "bijection_roundtrip",
            Theorem::NovickPrefix => "novick_prefix",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(pass: bool) -> Self {
        if pass {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

/// One side of a comparison: a polynomial in `q` or a plain count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    /// Coefficients by ascending exponent, as decimal strings.
    Polynomial(#[serde(with = "qpoly_json")] QPoly),
    Count(u64),
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Polynomial(p) => write!(f, "{p}"),
            Quantity::Count(c) => write!(f, "{c}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: Theorem,
    /// Human-readable description of the instance or instance class.
    pub parameters: String,
    pub lhs: Quantity,
    pub rhs: Quantity,
    pub verdict: Verdict,
    pub elapsed_micros: u64,
}

impl VerificationReport {
    /// The verdict is derived from `lhs == rhs`.
    pub fn compare(theorem: Theorem, parameters: impl Into<String>, lhs: Quantity, rhs: Quantity) -> Self {
        let verdict = Verdict::from_bool(lhs == rhs);
        VerificationReport { theorem, parameters: parameters.into(), lhs, rhs, verdict, elapsed_micros: 0 }
    }

    /// Aggregate over a class of instances: `passed` out of `total`.
    pub fn tally(theorem: Theorem, parameters: impl Into<String>, passed: u64, total: u64) -> Self {
        Self::compare(theorem, parameters, Quantity::Count(passed), Quantity::Count(total))
    }

    pub fn with_elapsed(mut self, elapsed: std::time::Duration) -> Self {
        self.elapsed_micros = u64::try_from(elapsed.as_micros()).unwrap_or(u64::MAX);
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {} {}: lhs = {}, rhs = {}", self.verdict, self.theorem, self.parameters, self.lhs, self.rhs)
    }
}

pub fn all_passed(reports: &[VerificationReport]) -> bool {
    reports.iter().all(VerificationReport::passed)
}

/// `QPoly` as a JSON array of decimal strings, e.g. `["1", "0", "2"]`.
pub mod qpoly_json {
    use super::*;

    pub fn serialize<S: Serializer>(p: &QPoly, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(p.coefficients().iter().map(ToString::to_string))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<QPoly, D::Error> {
        let digits: Vec<String> = Vec::deserialize(deserializer)?;
        let coeffs = digits
            .iter()
            .map(|d| BigUint::from_str(d).map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(QPoly::from_coefficients(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let r = VerificationReport::compare(
            Theorem::GarsiaGessel,
            "sigma=6 3, pi=1 4",
            Quantity::Polynomial(QPoly::from_u64_coefficients(&[0, 1, 1, 2, 1, 1])),
            Quantity::Polynomial(QPoly::from_u64_coefficients(&[0, 1, 1, 2, 1, 1])),
        );
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"theorem":"garsia_gessel","parameters":"sigma=6 3, pi=1 4","lhs":{"polynomial":["0","1","1","2","1","1"]},"rhs":{"polynomial":["0","1","1","2","1","1"]},"verdict":"pass","elapsed_micros":0}"#
        );
        let back: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }

    #[test]
    fn tally_fails_on_mismatch() {
        assert!(VerificationReport::tally(Theorem::Stanley, "m=1, n=1", 2, 2).passed());
        assert!(!VerificationReport::tally(Theorem::Stanley, "m=1, n=1", 1, 2).passed());
    }
}
