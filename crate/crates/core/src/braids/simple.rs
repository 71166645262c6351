use std::fmt;

use super::perm::Permutation;
use crate::error::{Error, Result};

/// A non-repeating positive braid (a Garside generator).
///
/// Such a braid is determined by the permutation it induces: strands `i < j`
/// cross exactly once when `perm(i) > perm(j)` and not at all otherwise.
/// Both the permutation and its inverse are kept since the start set reads
/// the former and the finishing set the latter.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleBraid {
    perm: Permutation,
    inv: Permutation,
}

impl SimpleBraid {
    pub fn from_permutation(perm: Permutation) -> Self {
        let inv = perm.inverse();
        SimpleBraid { perm, inv }
    }

    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        Ok(Self::from_permutation(Permutation::from_one_line(images)?))
    }

    pub fn identity(n: usize) -> Self {
        Self::from_permutation(Permutation::identity(n))
    }

    /// The half twist.
    pub fn delta(n: usize) -> Self {
        Self::from_permutation(Permutation::reversal(n))
    }

    /// Artin generator `s_i` (1-based) as a simple braid: the transposition of
    /// positions `i` and `i + 1`.
    pub fn artin(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::ArtinIndex {
                index: i,
                strands: n,
            });
        }
        let mut images: Vec<u32> = (0..n as u32).collect();
        images.swap(i - 1, i);
        Ok(Self::from_permutation(Permutation::from_images_unchecked(
            images,
        )))
    }

    pub fn strands(&self) -> usize {
        self.perm.len()
    }

    pub fn permutation(&self) -> &Permutation {
        &self.perm
    }

    pub fn inverse_permutation(&self) -> &Permutation {
        &self.inv
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity()
    }

    pub fn is_delta(&self) -> bool {
        let n = self.strands();
        self.perm
            .images()
            .iter()
            .enumerate()
            .all(|(i, &x)| x as usize == n - 1 - i)
    }

    /// Number of crossings, i.e. the inversion count of the permutation.
    pub fn crossings(&self) -> usize {
        let p = self.perm.images();
        let mut count = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Whether `s_{i+1}` (0-based `i`) is a left divisor: the strands entering
    /// at top positions `i` and `i + 1` cross.
    #[inline]
    pub fn starts_with(&self, i: usize) -> bool {
        self.perm.at(i) > self.perm.at(i + 1)
    }

    /// Whether `s_{i+1}` (0-based `i`) is a right divisor: the strands leaving
    /// at bottom positions `i` and `i + 1` cross.
    #[inline]
    pub fn finishes_with(&self, i: usize) -> bool {
        self.inv.at(i) > self.inv.at(i + 1)
    }

    /// The simple braid `c` with `c * self = delta`, so `self^-1 = delta^-1 * c`.
    pub fn left_complement(&self) -> Self {
        let n = self.strands();
        let images = (0..n).map(|i| self.inv.images()[n - 1 - i]).collect();
        Self::from_permutation(Permutation::from_images_unchecked(images))
    }

    /// Conjugation by the half twist, `delta^-1 * self * delta`.
    pub fn flip(&self) -> Self {
        let n = self.strands() as u32;
        let p = self.perm.images();
        let images = (0..n as usize)
            .map(|i| n - 1 - p[n as usize - 1 - i])
            .collect();
        Self::from_permutation(Permutation::from_images_unchecked(images))
    }

    /// Moves the crossing `s_{i+1}` (0-based `i`) off the bottom of `self`.
    /// Requires `finishes_with(i)`.
    pub(crate) fn drop_last(&mut self, i: usize) {
        debug_assert!(self.finishes_with(i));
        let a = self.inv.at(i);
        let b = self.inv.at(i + 1);
        self.inv.images_mut().swap(i, i + 1);
        let p = self.perm.images_mut();
        p[a] = (i + 1) as u32;
        p[b] = i as u32;
    }

    /// Prepends the crossing `s_{i+1}` (0-based `i`). Requires `!starts_with(i)`.
    pub(crate) fn push_first(&mut self, i: usize) {
        debug_assert!(!self.starts_with(i));
        let a = self.perm.at(i);
        let b = self.perm.at(i + 1);
        self.perm.images_mut().swap(i, i + 1);
        let q = self.inv.images_mut();
        q[a] = (i + 1) as u32;
        q[b] = i as u32;
    }

    /// Deletes the strand entering at top position `i` (0-based); returns the
    /// smaller braid and the bottom position the deleted strand left at.
    pub fn delete_strand(&self, i: usize) -> (Self, usize) {
        let exit = self.perm.at(i);
        (Self::from_permutation(self.perm.delete_point(i)), exit)
    }

    /// Doubles the strand entering at top position `i` (0-based); the two
    /// copies run parallel and occupy positions `i`, `i + 1` at the top.
    /// Returns the larger braid and the bottom position of the first copy.
    pub fn double_strand(&self, i: usize) -> (Self, usize) {
        let exit = self.perm.at(i);
        (Self::from_permutation(self.perm.double_point(i)), exit)
    }

    /// A positive Artin word (0-based generator indices) spelling this braid.
    pub fn artin_factors(&self) -> Vec<usize> {
        let mut p: Vec<u32> = self.perm.images().to_vec();
        let mut out = Vec::new();
        // Peel left divisors: if top strands i, i+1 cross, self = s_i * rest.
        while let Some(i) = (0..p.len().saturating_sub(1)).find(|&i| p[i] > p[i + 1]) {
            out.push(i);
            p.swap(i, i + 1);
        }
        out
    }
}

impl fmt::Display for SimpleBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.perm.fmt(f)
    }
}
