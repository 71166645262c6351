//! The Artin action of the braid group on the free group.
//!
//! `s_i` acts by `x_i -> x_i x_{i+1} x_i^-1`, `x_{i+1} -> x_i`. The action is
//! faithful, so two braids are equal exactly when their tables of images of
//! `x_1..x_n` agree. This gives an equality test that shares nothing with the
//! Garside normal form and is used as a test oracle. Word lengths grow
//! exponentially with braid length; there is no performance goal here.

use std::fmt;

use super::word::BraidWord;

/// A freely reduced word in `x_1..x_n`; `+k` is `x_k`, `-k` is `x_k^-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FreeWord(Vec<i32>);

impl FreeWord {
    pub fn generator(k: usize) -> Self {
        FreeWord(vec![k as i32])
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        FreeWord(self.0.iter().rev().map(|x| -x).collect())
    }

    /// Reduced product of several words.
    pub fn product(parts: &[&FreeWord]) -> Self {
        let mut out: Vec<i32> = Vec::with_capacity(parts.iter().map(|p| p.len()).sum());
        for part in parts {
            for &x in &part.0 {
                if out.last() == Some(&-x) {
                    out.pop();
                } else {
                    out.push(x);
                }
            }
        }
        FreeWord(out)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for x in &self.0 {
            if *x > 0 {
                write!(f, "x{x}")?;
            } else {
                write!(f, "X{}", -x)?;
            }
        }
        Ok(())
    }
}

/// Images of `x_1..x_n` under the automorphism induced by a braid.
pub type ActionTable = Vec<FreeWord>;

/// Table of the automorphism `phi_{l_1} o ... o phi_{l_k}` for the word
/// `l_1 ... l_k`, expanding every simple letter into Artin generators.
pub fn artin_action(word: &BraidWord) -> ActionTable {
    let n = word.strands();
    let mut table: ActionTable = (1..=n).map(FreeWord::generator).collect();
    for g in word.to_artin() {
        let i = g.unsigned_abs() as usize - 1;
        let xi = table[i].clone();
        let xj = table[i + 1].clone();
        if g > 0 {
            table[i] = FreeWord::product(&[&xi, &xj, &xi.inverse()]);
            table[i + 1] = xi;
        } else {
            table[i] = xj.clone();
            table[i + 1] = FreeWord::product(&[&xj.inverse(), &xi, &xj]);
        }
    }
    table
}

/// Oracle equality: same strand count and identical action tables.
pub fn action_equal(a: &BraidWord, b: &BraidWord) -> bool {
    a.strands() == b.strands() && artin_action(a) == artin_action(b)
}
