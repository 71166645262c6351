//! Right-greedy normal form over the simple (Garside) generators.
//!
//! A braid is written uniquely as `D^p * A_1 * ... * A_k` where `D` is the
//! half twist, no `A_i` is trivial or equal to `D`, and every adjacent pair
//! `(A_i, A_{i+1})` is right-weighted: each crossing that can be split off the
//! bottom of `A_i` already starts `A_{i+1}`, so nothing can slide to the right.

use std::collections::VecDeque;
use std::fmt;

use super::simple::SimpleBraid;
use super::word::{BraidWord, Letter, Sign};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalForm {
    strands: usize,
    delta_power: i64,
    factors: Vec<SimpleBraid>,
}

impl NormalForm {
    pub fn identity(n: usize) -> Self {
        NormalForm {
            strands: n,
            delta_power: 0,
            factors: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    pub fn factors(&self) -> &[SimpleBraid] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    /// Number of letters in the spelled word: `|p|` half twists plus the factors.
    pub fn word_len(&self) -> usize {
        self.delta_power.unsigned_abs() as usize + self.factors.len()
    }

    /// The word `D^p A_1 ... A_k`.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let mut letters = Vec::with_capacity(self.word_len());
        let delta = SimpleBraid::delta(n);
        let sign = if self.delta_power >= 0 {
            Sign::Pos
        } else {
            Sign::Neg
        };
        for _ in 0..self.delta_power.unsigned_abs() {
            letters.push(Letter {
                simple: delta.clone(),
                sign,
            });
        }
        letters.extend(self.factors.iter().cloned().map(Letter::pos));
        BraidWord::from_letters_unchecked(n, letters)
    }

    /// Builds a normal form from its parts, checking every invariant.
    pub fn from_parts(n: usize, delta_power: i64, factors: Vec<SimpleBraid>) -> Result<Self> {
        for f in &factors {
            if f.strands() != n {
                return Err(Error::StrandMismatch {
                    left: n,
                    right: f.strands(),
                });
            }
            if f.is_identity() || f.is_delta() {
                return Err(Error::InvalidParams(
                    "normal-form factors must differ from the identity and the half twist".into(),
                ));
            }
        }
        if factors.windows(2).any(|w| !is_right_weighted(&w[0], &w[1])) {
            return Err(Error::InvalidParams(
                "normal-form factors are not right-weighted".into(),
            ));
        }
        Ok(NormalForm {
            strands: n,
            delta_power,
            factors,
        })
    }
}

impl fmt::Display for NormalForm {
    /// `D^p | perm1 ; perm2 ; ...`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{} |", self.delta_power)?;
        for (k, s) in self.factors.iter().enumerate() {
            f.write_str(if k == 0 { " " } else { " ; " })?;
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Whether no crossing can slide from the bottom of `a` to the top of `b`.
pub fn is_right_weighted(a: &SimpleBraid, b: &SimpleBraid) -> bool {
    (0..a.strands().saturating_sub(1)).all(|i| !a.finishes_with(i) || b.starts_with(i))
}

/// Slides crossings from the bottom of `a` into the top of `b` until the
/// pair is right-weighted. Returns whether anything moved.
fn make_right_weighted(a: &mut SimpleBraid, b: &mut SimpleBraid) -> bool {
    let n = a.strands();
    if n < 2 {
        return false;
    }
    let mut pending: Vec<usize> = (0..n - 1).collect();
    let mut queued = vec![true; n - 1];
    let mut moved = false;
    while let Some(i) = pending.pop() {
        queued[i] = false;
        if a.finishes_with(i) && !b.starts_with(i) {
            a.drop_last(i);
            b.push_first(i);
            moved = true;
            for j in [i.wrapping_sub(1), i + 1] {
                if j < n - 1 && !queued[j] {
                    queued[j] = true;
                    pending.push(j);
                }
            }
        }
    }
    moved
}

/// Computes the right-greedy normal form of `word`.
pub fn normal_form(word: &BraidWord) -> NormalForm {
    let n = word.strands();
    if n < 2 {
        return NormalForm::identity(n);
    }

    // Rewrite s^-1 as D^-1 * c with c the left complement of s, then push every
    // D^-1 to the front: x * D^-1 = D^-1 * flip(x). A factor pushed while the
    // running power was q ends up flipped (q - final) times.
    let mut power: i64 = 0;
    let mut pushed: Vec<(SimpleBraid, i64)> = Vec::with_capacity(word.len());
    for letter in word.letters() {
        match letter.sign {
            Sign::Pos => {
                if !letter.simple.is_identity() {
                    pushed.push((letter.simple.clone(), power));
                }
            }
            Sign::Neg => {
                power -= 1;
                let c = letter.simple.left_complement();
                if !c.is_identity() {
                    pushed.push((c, power));
                }
            }
        }
    }
    let positive: Vec<SimpleBraid> = pushed
        .into_iter()
        .map(|(s, q)| if (q - power) % 2 != 0 { s.flip() } else { s })
        .collect();

    // Right-greedy form of the positive part: prepend factors one at a time
    // and sweep to the right while pairs keep changing.
    let mut seq: VecDeque<SimpleBraid> = VecDeque::with_capacity(positive.len());
    for s in positive.into_iter().rev() {
        seq.push_front(s);
        let mut k = 0;
        while k + 1 < seq.len() {
            let (left, right) = pair_mut(&mut seq, k);
            if !make_right_weighted(left, right) {
                break;
            }
            k += 1;
        }
    }
    // One sweep per prepend suffices; this only confirms it.
    loop {
        let mut changed = false;
        for k in 0..seq.len().saturating_sub(1) {
            let (left, right) = pair_mut(&mut seq, k);
            changed |= make_right_weighted(left, right);
        }
        if !changed {
            break;
        }
    }

    // Identities collect on the left and half twists on the right.
    let mut factors: Vec<SimpleBraid> = seq.into_iter().filter(|s| !s.is_identity()).collect();
    let mut trailing = 0i64;
    while factors.last().is_some_and(SimpleBraid::is_delta) {
        factors.pop();
        trailing += 1;
    }
    if trailing % 2 != 0 {
        factors = factors.iter().map(SimpleBraid::flip).collect();
    }
    debug_assert!(factors.iter().all(|f| !f.is_delta()));
    NormalForm {
        strands: n,
        delta_power: power + trailing,
        factors,
    }
}

fn pair_mut(seq: &mut VecDeque<SimpleBraid>, k: usize) -> (&mut SimpleBraid, &mut SimpleBraid) {
    let (front, back) = seq.make_contiguous().split_at_mut(k + 1);
    (&mut front[k], &mut back[0])
}
