//! Plain-text tables for decompositions, major increments and labelings.

use std::collections::BTreeSet;
use std::fmt::Write;

use shuffle_core::bijection::{PsiTrace, ShuffleDecomposition};
use shuffle_core::{CanonicalLabeling, Letter, MisSequence, Permutation};

/// Letters separated by spaces, with those in `marked` in brackets.
pub fn marked_letters(letters: &[Letter], marked: &BTreeSet<Letter>) -> String {
    letters
        .iter()
        .map(|l| if marked.contains(l) { format!("[{l}]") } else { l.to_string() })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Left-aligned columns separated by ` | `, a rule under the header, and no
/// trailing blanks.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
        padded.join(" | ").trim_end().to_string()
    };
    let mut out = line(header.to_vec());
    out.push('\n');
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    out.push_str(&rule.join("-+-"));
    out.push('\n');
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
        out.push('\n');
    }
    out
}

/// The removal chain: row `i` shows `alpha^(i)` and what removing `pi_i`
/// from `alpha^(i-1)` did. Letters of `pi` still present are bracketed.
pub fn phi_table(decomp: &ShuffleDecomposition) -> String {
    let pi = decomp.pi.letters();
    let n = pi.len();
    let tails = decomp.tail_counts();
    let mut rows = Vec::with_capacity(n + 1);
    for i in (0..=n).rev() {
        let marked: BTreeSet<Letter> = pi[i..].iter().copied().collect();
        let mut row = vec![i.to_string(), marked_letters(decomp.chain[i].letters(), &marked)];
        if i > 0 {
            let before = &decomp.chain[i - 1];
            let after = &decomp.chain[i];
            row.push(tails[i - 1].to_string());
            row.push((before.maj() - after.maj()).to_string());
            row.push(decomp.t_values[i - 1].to_string());
            row.push((before.des() - after.des()).to_string());
        }
        rows.push(row);
    }
    table(&["i", "alpha^(i)", "d_i(pi)", "maj(alpha^(i-1)) - maj(alpha^(i))", "t(i)", "des(alpha^(i-1)) - des(alpha^(i))"], &rows)
}

/// One row per space `i`: the inserted permutation with `r` bracketed, its
/// major index, the increment and the change in descents.
pub fn mis_table(sigma: &Permutation, r: Letter, mis: &MisSequence) -> String {
    let marked = BTreeSet::from([r]);
    let base_des = sigma.des();
    let rows: Vec<Vec<String>> = mis
        .increments
        .iter()
        .enumerate()
        .map(|(i, im)| {
            let mut letters = sigma.letters().to_vec();
            letters.insert(i, r);
            let inserted = Permutation::new(letters).expect("r is not in sigma");
            vec![
                i.to_string(),
                marked_letters(inserted.letters(), &marked),
                inserted.maj().to_string(),
                im.to_string(),
                (inserted.des() - base_des).to_string(),
            ]
        })
        .collect();
    table(&["i", "sigma^(i)(r)", "maj(sigma^(i)(r))", "im(sigma,i,r)", "des(sigma^(i)(r)) - des(sigma)"], &rows)
}

/// The inverse run: row `i` shows `pi_i`, the visible part of `T^(i)` with
/// the chosen entry bracketed, the multiset `M^(i)`, `k_i` and
/// `alpha^(i)` before `pi_i` is inserted.
pub fn psi_table(pi: &Permutation, trace: &PsiTrace, alpha: &Permutation) -> String {
    let mut rows = Vec::with_capacity(trace.steps.len() + 1);
    for step in &trace.steps {
        let marked: BTreeSet<Letter> = pi.letters()[step.index..].iter().copied().collect();
        let mut entries: Vec<String> = step
            .t_sequence
            .iter()
            .enumerate()
            .map(|(j, t)| if j + 1 == step.position { format!("[{t}]") } else { t.to_string() })
            .collect();
        if step.t_sequence.len() < step.alpha_before.len() + 1 {
            entries.push(String::from("..."));
        }
        let multiset: Vec<String> = step.multiset.iter().map(ToString::to_string).collect();
        rows.push(vec![
            step.index.to_string(),
            step.letter.to_string(),
            format!("({})", entries.join(", ")),
            format!("{{{}}}", multiset.join(", ")),
            step.position.to_string(),
            marked_letters(step.alpha_before.letters(), &marked),
        ]);
    }
    let all: BTreeSet<Letter> = pi.letters().iter().copied().collect();
    rows.push(vec![
        String::from("0"),
        String::new(),
        String::new(),
        String::from("∅"),
        String::new(),
        marked_letters(alpha.letters(), &all),
    ]);
    table(&["i", "pi_i", "T^(i)", "M^(i)", "k_i", "alpha^(i)"], &rows)
}

fn subscript(value: usize) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    value.to_string().chars().map(|c| DIGITS[c.to_digit(10).expect("decimal digit") as usize]).collect()
}

/// Each letter preceded by the label of the space before it, and the label
/// of the final space at the end: `₅10 ₆1 ₄9 ... ₀6 ₉`.
pub fn labeling_line(sigma: &Permutation, labeling: &CanonicalLabeling) -> String {
    let mut out = String::new();
    for (letter, &label) in sigma.letters().iter().zip(&labeling.labels) {
        write!(out, "{}{letter} ", subscript(label)).expect("writing to a String");
    }
    out.push_str(&subscript(*labeling.labels.last().expect("n + 1 labels")));
    out
}
