//! Braid and loop-braid words acting on factorizations from the right.
//!
//! The generator `σᵢ` replaces the adjacent factors `(τᵢ, τᵢ₊₁)` by
//! `(ᵗⁱτᵢ₊₁, τᵢ)`, its inverse by `(τᵢ₊₁, τᵢ^τᵢ₊₁)`, and the extra
//! loop-braid letter `sᵢ` simply swaps the two positions.  Words are plain
//! letter sequences; identities are checked as action equalities, never as
//! word-level normal forms.

use crate::egraph::Factorization;
use crate::perm::Permutation;
use crate::{Error, Result};
use std::fmt;

/// One letter of a loop-braid word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    /// `σᵢ` or `σᵢ⁻¹` for `1 ≤ i ≤ strands−1`.
    Sigma { index: usize, inverse: bool },
    /// The position swap `sᵢ`.
    Swap { index: usize },
}

impl Letter {
    pub fn sigma(index: usize) -> Letter {
        Letter::Sigma { index, inverse: false }
    }

    pub fn sigma_inv(index: usize) -> Letter {
        Letter::Sigma { index, inverse: true }
    }

    pub fn swap(index: usize) -> Letter {
        Letter::Swap { index }
    }

    pub fn inverted(self) -> Letter {
        match self {
            Letter::Sigma { index, inverse } => Letter::Sigma { index, inverse: !inverse },
            swap => swap,
        }
    }

    fn index(&self) -> usize {
        match *self {
            Letter::Sigma { index, .. } | Letter::Swap { index } => index,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Letter::Sigma { index, inverse: false } => write!(f, "s{index}"),
            Letter::Sigma { index, inverse: true } => write!(f, "S{index}"),
            Letter::Swap { index } => write!(f, "p{index}"),
        }
    }
}

/// A word in the braid group on `strands` strands: σ-letters only.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

/// A word in the loop braid group: σ-letters and swap letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LoopBraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

fn check_indices(strands: usize, letters: &[Letter]) -> Result<()> {
    for l in letters {
        if l.index() == 0 || l.index() + 1 > strands {
            return Err(Error::IndexOutOfRange(format!(
                "letter {l} needs strand {} but the word has {strands}",
                l.index() + 1
            )));
        }
    }
    Ok(())
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<BraidWord> {
        check_indices(strands, &letters)?;
        if letters.iter().any(|l| matches!(l, Letter::Swap { .. })) {
            return Err(Error::Parse("swap letters are not braid letters".into()));
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn empty(strands: usize) -> BraidWord {
        BraidWord { strands, letters: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch { word: other.strands, factors: self.strands });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// Reversed sequence of inverted letters.
    pub fn inverse(&self) -> BraidWord {
        let letters = self.letters.iter().rev().map(|l| l.inverted()).collect();
        BraidWord { strands: self.strands, letters }
    }

    /// Crossing reversal: `σᵢ^{±1} ↦ σᵢ^{∓1}` letterwise.
    pub fn star(&self) -> BraidWord {
        let letters = self.letters.iter().map(|l| l.inverted()).collect();
        BraidWord { strands: self.strands, letters }
    }

    /// The reversal automorphism `σₖ^{±1} ↦ σ_{m−k}^{∓1}` letterwise.
    pub fn reverse_word(&self) -> BraidWord {
        let m = self.strands;
        let letters = self
            .letters
            .iter()
            .map(|l| match *l {
                Letter::Sigma { index, inverse } => {
                    Letter::Sigma { index: m - index, inverse: !inverse }
                }
                swap => swap,
            })
            .collect();
        BraidWord { strands: m, letters }
    }

    pub fn into_loop_word(self) -> LoopBraidWord {
        LoopBraidWord { strands: self.strands, letters: self.letters }
    }

    /// Where each initial position ends up after the word.
    pub fn position_permutation(&self) -> Permutation {
        position_permutation(self.strands, &self.letters)
    }
}

impl LoopBraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<LoopBraidWord> {
        check_indices(strands, &letters)?;
        Ok(LoopBraidWord { strands, letters })
    }

    pub fn empty(strands: usize) -> LoopBraidWord {
        LoopBraidWord { strands, letters: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn concat(&self, other: &LoopBraidWord) -> Result<LoopBraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch { word: other.strands, factors: self.strands });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(LoopBraidWord { strands: self.strands, letters })
    }

    pub fn inverse(&self) -> LoopBraidWord {
        let letters = self.letters.iter().rev().map(|l| l.inverted()).collect();
        LoopBraidWord { strands: self.strands, letters }
    }

    /// Crossing reversal; swap letters are fixed.
    pub fn star(&self) -> LoopBraidWord {
        let letters = self.letters.iter().map(|l| l.inverted()).collect();
        LoopBraidWord { strands: self.strands, letters }
    }

    pub fn position_permutation(&self) -> Permutation {
        position_permutation(self.strands, &self.letters)
    }
}

fn position_permutation(strands: usize, letters: &[Letter]) -> Permutation {
    let mut slots: Vec<usize> = (1..=strands).collect();
    for l in letters {
        slots.swap(l.index() - 1, l.index());
    }
    // slots[j] = the strand now at position j+1, so the strand starting at
    // position i ends at the position holding i
    let mut images = vec![0; strands];
    for (j, &strand) in slots.iter().enumerate() {
        images[strand - 1] = j + 1;
    }
    Permutation::from_images(images).unwrap()
}

fn act_letters(rho: &Factorization, strands: usize, letters: &[Letter]) -> Result<Factorization> {
    if strands != rho.len() {
        return Err(Error::StrandMismatch { word: strands, factors: rho.len() });
    }
    let mut factors = rho.factors().to_vec();
    for l in letters {
        let i = l.index() - 1;
        match *l {
            Letter::Sigma { inverse: false, .. } => {
                let conj = factors[i + 1].conjugate_by(&factors[i]);
                factors[i + 1] = factors[i];
                factors[i] = conj;
            }
            Letter::Sigma { inverse: true, .. } => {
                let conj = factors[i].conjugate_by(&factors[i + 1]);
                factors[i] = factors[i + 1];
                factors[i + 1] = conj;
            }
            Letter::Swap { .. } => factors.swap(i, i + 1),
        }
    }
    Factorization::new(rho.degree(), factors)
}

/// Right action of a braid word on a factorization of the same length.
pub fn act(rho: &Factorization, word: &BraidWord) -> Result<Factorization> {
    act_letters(rho, word.strands, &word.letters)
}

/// Right action of a loop-braid word.
pub fn act_loop(rho: &Factorization, word: &LoopBraidWord) -> Result<Factorization> {
    act_letters(rho, word.strands, &word.letters)
}

/// `δ_{i,j} = σ_{j−1} σ_{j−2} … σᵢ`: moves the `j`-th point to place `i`
/// under everything in between.
pub fn delta_word(i: usize, j: usize, m: usize) -> Result<BraidWord> {
    if i == 0 || i >= j || j > m {
        return Err(Error::IndexOutOfRange(format!("delta_word needs 1 ≤ {i} < {j} ≤ {m}")));
    }
    let letters = (i..j).rev().map(Letter::sigma).collect();
    BraidWord::new(m, letters)
}

/// `λ_{i,j} = σᵢ σᵢ₊₁ … σ_{j−1}`: moves the `i`-th point to place `j` over
/// everything in between.
pub fn lambda_word(i: usize, j: usize, m: usize) -> Result<BraidWord> {
    if i == 0 || i >= j || j > m {
        return Err(Error::IndexOutOfRange(format!("lambda_word needs 1 ≤ {i} < {j} ≤ {m}")));
    }
    let letters = (i..j).map(Letter::sigma).collect();
    BraidWord::new(m, letters)
}

fn half_twist_letters(lo: usize, hi: usize) -> Vec<Letter> {
    let mut letters = Vec::new();
    for i in lo..hi {
        letters.extend((i..hi).rev().map(Letter::sigma));
    }
    letters
}

/// The half-twist word `Δ_{i,j} = δ_{i,j} δ_{i+1,j} … δ_{j−1,j}`.
pub fn delta_range_word(i: usize, j: usize, m: usize) -> Result<BraidWord> {
    if i == 0 || i > j || j > m {
        return Err(Error::IndexOutOfRange(format!("delta_range_word needs 1 ≤ {i} ≤ {j} ≤ {m}")));
    }
    BraidWord::new(m, half_twist_letters(i, j))
}

/// The half-twist `Δ_m` on all `m` strands; `m(m−1)/2` letters, the empty
/// word for `m ≤ 1`.
pub fn garside_word(m: usize) -> BraidWord {
    BraidWord { strands: m, letters: half_twist_letters(1, m) }
}

/// The swap-letter word realizing the full position reversal; same letter
/// pattern as the half twist.
pub fn reversal_swap_word(m: usize) -> LoopBraidWord {
    let letters = half_twist_letters(1, m)
        .into_iter()
        .map(|l| Letter::swap(l.index()))
        .collect();
    LoopBraidWord { strands: m, letters }
}

/// The dualizer `d_m`: the half twist followed by the position reversal.
/// Acting by it computes the dual of a factorization in one pass.
pub fn dualizer_word(m: usize) -> LoopBraidWord {
    let mut letters = garside_word(m).letters;
    letters.extend(reversal_swap_word(m).letters);
    LoopBraidWord { strands: m, letters }
}

/// The positive block crossing taking adjacent blocks of widths `(a, b)`
/// (with `p` strands untouched on the left) across each other, the left
/// block passing over; `a·b` letters.
fn block_crossing(p: usize, a: usize, b: usize) -> Vec<Letter> {
    let mut letters = Vec::with_capacity(a * b);
    for t in 0..b {
        letters.extend((p + 1 + t..=p + a + t).rev().map(Letter::sigma));
    }
    letters
}

/// Cables an outer word: each letter crosses two adjacent cables of the
/// current widths as blocks, tracking how the widths move.  The inner
/// braids of a full cabling are not included; append them at the cables'
/// final positions (see [`shifted_word`] and
/// [`BraidWord::position_permutation`]).
pub fn cable_word(outer: &BraidWord, widths: &[usize]) -> Result<BraidWord> {
    if widths.len() != outer.strands {
        return Err(Error::StrandMismatch { word: outer.strands, factors: widths.len() });
    }
    if widths.contains(&0) {
        return Err(Error::Parse("cable widths must be positive".into()));
    }
    let total = widths.iter().sum();
    let mut widths = widths.to_vec();
    let mut letters = Vec::new();
    for l in &outer.letters {
        let j = l.index() - 1;
        let p: usize = widths[..j].iter().sum();
        let (a, b) = (widths[j], widths[j + 1]);
        match l {
            Letter::Sigma { inverse: false, .. } => letters.extend(block_crossing(p, a, b)),
            Letter::Sigma { inverse: true, .. } => {
                letters.extend(block_crossing(p, b, a).into_iter().rev().map(Letter::inverted))
            }
            Letter::Swap { .. } => {
                return Err(Error::Parse("swap letters are not braid letters".into()))
            }
        }
        widths.swap(j, j + 1);
    }
    BraidWord::new(total, letters)
}

/// Re-indexes a word on `inner` strands so it acts on strands
/// `offset+1..offset+inner` of a word on `total` strands.
pub fn shifted_word(word: &BraidWord, offset: usize, total: usize) -> Result<BraidWord> {
    if offset + word.strands > total {
        return Err(Error::IndexOutOfRange(format!(
            "cannot place {} strands at offset {offset} within {total}",
            word.strands
        )));
    }
    let letters = word
        .letters
        .iter()
        .map(|l| match *l {
            Letter::Sigma { index, inverse } => Letter::Sigma { index: index + offset, inverse },
            Letter::Swap { index } => Letter::Swap { index: index + offset },
        })
        .collect();
    BraidWord::new(total, letters)
}

/// Parses the whitespace-separated word format: `s3` for `σ₃`, `S3` for
/// `σ₃⁻¹`, `p3` for the swap letter.
pub fn parse_word(text: &str, strands: usize) -> Result<LoopBraidWord> {
    let mut letters = Vec::new();
    for tok in text.split_whitespace() {
        let (kind, num) = tok
            .split_at_checked(1)
            .ok_or_else(|| Error::Parse(format!("unknown letter {tok:?}")))?;
        let index: usize =
            num.parse().map_err(|_| Error::Parse(format!("bad letter index in {tok:?}")))?;
        let letter = match kind {
            "s" => Letter::sigma(index),
            "S" => Letter::sigma_inv(index),
            "p" => Letter::swap(index),
            _ => return Err(Error::Parse(format!("unknown letter {tok:?}"))),
        };
        letters.push(letter);
    }
    LoopBraidWord::new(strands, letters)
}

pub fn format_word(letters: &[Letter]) -> String {
    letters.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fac(n: usize, pairs: &[(usize, usize)]) -> Factorization {
        Factorization::from_pairs(n, pairs).unwrap()
    }

    #[test]
    fn generator_action() {
        let rho = fac(3, &[(1, 2), (2, 3)]);
        let w = BraidWord::new(2, vec![Letter::sigma(1)]).unwrap();
        assert_eq!(act(&rho, &w).unwrap(), fac(3, &[(1, 3), (1, 2)]));

        let empty = BraidWord::empty(2);
        assert_eq!(act(&rho, &empty).unwrap(), rho);

        let cancel = BraidWord::new(2, vec![Letter::sigma(1), Letter::sigma_inv(1)]).unwrap();
        assert_eq!(act(&rho, &cancel).unwrap(), rho);

        let swap = LoopBraidWord::new(2, vec![Letter::swap(1)]).unwrap();
        assert_eq!(act_loop(&rho, &swap).unwrap(), fac(3, &[(2, 3), (1, 2)]));
    }

    #[test]
    fn sigma_preserves_monodromy() {
        let rho = fac(4, &[(3, 4), (1, 3), (1, 2), (3, 4), (2, 3)]);
        let w = BraidWord::new(5, vec![Letter::sigma(2), Letter::sigma_inv(4), Letter::sigma(1)])
            .unwrap();
        assert_eq!(act(&rho, &w).unwrap().monodromy(), rho.monodromy());
    }

    #[test]
    fn strand_mismatch() {
        let rho = fac(3, &[(1, 2), (2, 3)]);
        let w = BraidWord::new(3, vec![Letter::sigma(2)]).unwrap();
        assert!(matches!(act(&rho, &w), Err(Error::StrandMismatch { .. })));
    }

    #[test]
    fn garside_words() {
        assert_eq!(garside_word(1).letters(), &[]);
        assert_eq!(garside_word(2).letters(), &[Letter::sigma(1)]);
        assert_eq!(
            garside_word(3).letters(),
            &[Letter::sigma(2), Letter::sigma(1), Letter::sigma(2)]
        );
        for m in 1..8 {
            assert_eq!(garside_word(m).len(), m * (m - 1) / 2);
        }
        // Δ_m = δ_m Δ_{2,m}
        for m in 2..7 {
            let lhs = garside_word(m);
            let rhs = delta_word(1, m, m).unwrap().concat(&delta_range_word(2, m, m).unwrap());
            assert_eq!(lhs, rhs.unwrap());
        }
    }

    #[test]
    fn delta_and_lambda() {
        assert_eq!(
            delta_word(1, 3, 3).unwrap().letters(),
            &[Letter::sigma(2), Letter::sigma(1)]
        );
        assert_eq!(
            lambda_word(1, 3, 3).unwrap().letters(),
            &[Letter::sigma(1), Letter::sigma(2)]
        );
        assert!(delta_word(2, 2, 3).is_err());
    }

    #[test]
    fn star_and_reverse_words() {
        let w = BraidWord::new(3, vec![Letter::sigma(1), Letter::sigma(2)]).unwrap();
        assert_eq!(
            w.star().letters(),
            &[Letter::sigma_inv(1), Letter::sigma_inv(2)]
        );
        assert_eq!(w.star().star(), w);
        let single = BraidWord::new(3, vec![Letter::sigma(1)]).unwrap();
        assert_eq!(single.reverse_word().letters(), &[Letter::sigma_inv(2)]);
    }

    #[test]
    fn garside_action_reversed_is_dual() {
        let rho = fac(4, &[(3, 4), (1, 3), (1, 2), (3, 4), (2, 3)]);
        let via_garside = act(&rho, &garside_word(5)).unwrap().reverse();
        assert_eq!(via_garside, crate::trails::dual_factorization(&rho));
    }

    #[test]
    fn dualizer_action_is_dual() {
        let rho = fac(4, &[(3, 4), (1, 3), (1, 2), (3, 4), (2, 3)]);
        let dual = act_loop(&rho, &dualizer_word(5)).unwrap();
        assert_eq!(dual, fac(4, &[(3, 4), (1, 4), (2, 4), (1, 3), (3, 4)]));
        assert_eq!(act_loop(&dual, &dualizer_word(5)).unwrap(), rho);

        let single = fac(2, &[(1, 2)]);
        assert!(dualizer_word(1).letters().is_empty());
        assert_eq!(act_loop(&single, &dualizer_word(1)).unwrap(), single);
    }

    #[test]
    fn position_permutations() {
        let p = garside_word(4).position_permutation();
        for i in 1..=4 {
            assert_eq!(p.apply(i), 5 - i);
        }
        assert_eq!(
            reversal_swap_word(5).position_permutation(),
            garside_word(5).position_permutation()
        );
    }

    #[test]
    fn unit_width_cable_is_the_word_itself() {
        let w = BraidWord::new(2, vec![Letter::sigma(1)]).unwrap();
        assert_eq!(cable_word(&w, &[1, 1]).unwrap(), w);
    }

    #[test]
    fn cable_matches_half_twist_by_action() {
        // Δ₂ over widths [1, 2] plus the inner half twist equals Δ₃
        let outer = garside_word(2);
        for widths in [[1usize, 2], [2, 1], [2, 2], [1, 3]] {
            let total: usize = widths.iter().sum();
            let mut word = cable_word(&outer, &widths).unwrap();
            let perm = outer.position_permutation();
            // inner half twists at the cables' final positions
            for (i, &w) in widths.iter().enumerate() {
                let dest = perm.apply(i + 1);
                let mut offset = 0;
                for slot in 1..dest {
                    // width now at `slot` is the width that started at perm⁻¹(slot)
                    let src = (1..=widths.len()).find(|&s| perm.apply(s) == slot).unwrap();
                    offset += widths[src - 1];
                }
                word =
                    word.concat(&shifted_word(&garside_word(w), offset, total).unwrap()).unwrap();
            }
            let rho = fac(total + 1, &{
                let mut v = Vec::new();
                for k in 1..=total {
                    v.push((k, k + 1));
                }
                v
            });
            assert_eq!(
                act(&rho, &word).unwrap(),
                act(&rho, &garside_word(total)).unwrap(),
                "widths {widths:?}"
            );
        }
    }

    #[test]
    fn word_text_round_trip() {
        let w = parse_word("s2 s1 S2 p3", 4).unwrap();
        assert_eq!(format_word(w.letters()), "s2 s1 S2 p3");
        assert!(parse_word("q1", 3).is_err());
        assert!(parse_word("s9", 3).is_err());
    }
}
