//! Integer partitions with bounded length and part sizes.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::qpoly::QPoly;
use crate::{Error, Result};

/// A weakly decreasing sequence of positive parts. The empty partition has
/// weight zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(String::from("parts must be positive")));
        }
        if !is_weakly_decreasing(&parts) {
            return Err(Error::InvalidPartition(String::from("parts must be weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Drops the zero entries of a weakly decreasing sequence, e.g. the
    /// fixed-length `(3, 2, 0, 0)` becomes `(3, 2)`.
    pub fn from_padded(seq: &[usize]) -> Result<Self> {
        if !is_weakly_decreasing(seq) {
            return Err(Error::InvalidPartition(String::from("sequence must be weakly decreasing")));
        }
        Ok(Partition { parts: seq.iter().copied().filter(|&x| x > 0).collect() })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|lambda|`
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn largest(&self) -> Option<usize> {
        self.parts.first().copied()
    }

    pub fn smallest(&self) -> Option<usize> {
        self.parts.last().copied()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

pub(crate) fn is_weakly_decreasing(seq: &[usize]) -> bool {
    seq.windows(2).all(|w| w[0] >= w[1])
}

/// Weight first, then larger parts first: `(), (1), (2), (1,1), (2,1), ...`.
fn weight_then_reverse_lex(a: &Partition, b: &Partition) -> Ordering {
    a.weight().cmp(&b.weight()).then_with(|| b.parts.cmp(&a.parts))
}

/// Every weakly decreasing sequence of exactly `len` entries drawn from
/// `min..=max`, in reverse lexicographic order. Entries may be zero when
/// `min == 0`.
pub fn weakly_decreasing_sequences(len: usize, min: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if len > 0 && min > max {
        return out;
    }
    let mut current = Vec::with_capacity(len);
    fill(&mut out, &mut current, len, min, max);
    out
}

fn fill(out: &mut Vec<Vec<usize>>, current: &mut Vec<usize>, len: usize, min: usize, cap: usize) {
    if current.len() == len {
        out.push(current.clone());
        return;
    }
    for part in (min..=cap).rev() {
        current.push(part);
        fill(out, current, len, min, part);
        current.pop();
    }
}

/// The partitions with at most `max_len` parts, each at most `max_part`,
/// ordered by weight and then with larger parts first.
pub fn enumerate_bounded_partitions(max_len: usize, max_part: usize) -> Vec<Partition> {
    let mut out: Vec<Partition> = weakly_decreasing_sequences(max_len, 0, max_part)
        .iter()
        .map(|s| Partition::from_padded(s).expect("generated sequences are weakly decreasing"))
        .collect();
    out.sort_by(weight_then_reverse_lex);
    out
}

/// The partitions with exactly `len` parts lying in `min_part..=max_part`.
///
/// With `min_part == 0` the parts range over `0..=max_part` and zeros are
/// dropped afterwards, which yields the partitions with at most `len` parts.
/// Inconsistent bounds give an empty list.
pub fn enumerate_exact_partitions(len: usize, min_part: usize, max_part: usize) -> Vec<Partition> {
    let mut out: Vec<Partition> = weakly_decreasing_sequences(len, min_part, max_part)
        .iter()
        .map(|s| Partition::from_padded(s).expect("generated sequences are weakly decreasing"))
        .collect();
    out.sort_by(weight_then_reverse_lex);
    out
}

/// `sum q^{|lambda|}` over the given partitions.
pub fn weight_generating_function<'a>(partitions: impl IntoIterator<Item = &'a Partition>) -> QPoly {
    let mut counts: Vec<u64> = Vec::new();
    for p in partitions {
        let w = p.weight();
        if counts.len() <= w {
            counts.resize(w + 1, 0);
        }
        counts[w] += 1;
    }
    QPoly::from_u64_coefficients(&counts)
}
