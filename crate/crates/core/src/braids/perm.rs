use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `n` points, stored as 0-based images.
///
/// For braids the convention is "top position to bottom position": the strand
/// entering at top position `i` leaves at bottom position `self[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n as u32).collect())
    }

    /// Order-reversing permutation `i -> n + 1 - i`.
    pub fn reversal(n: usize) -> Self {
        Permutation((0..n as u32).rev().collect())
    }

    /// Builds from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::NotAPermutation(n));
            }
            seen[x] = true;
        }
        Ok(Permutation(images))
    }

    /// Builds from one-line notation with 1-based images, e.g. `[2, 3, 1]`.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if images.iter().any(|&x| x == 0 || x > n) {
            return Err(Error::NotAPermutation(n));
        }
        Self::from_images(images.iter().map(|&x| (x - 1) as u32).collect())
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation(images)
    }

    /// One-line notation with 1-based images.
    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 0-based image of 0-based point `i`.
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub(crate) fn images_mut(&mut self) -> &mut [u32] {
        &mut self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation(inv)
    }

    /// Apply `self` first, then `next`.
    pub fn then(&self, next: &Permutation) -> Self {
        assert_eq!(
            self.len(),
            next.len(),
            "composing permutations of different degree"
        );
        Permutation(self.0.iter().map(|&x| next.0[x as usize]).collect())
    }

    /// Removes point `i` (0-based) and renumbers the rest order-preservingly.
    pub fn delete_point(&self, i: usize) -> Self {
        let target = self.0[i];
        Permutation(
            self.0
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, &x)| if x > target { x - 1 } else { x })
                .collect(),
        )
    }

    /// Splits point `i` (0-based) into two adjacent points that keep their order.
    pub fn double_point(&self, i: usize) -> Self {
        let target = self.0[i];
        let mut out = Vec::with_capacity(self.0.len() + 1);
        for (k, &x) in self.0.iter().enumerate() {
            if k == i {
                out.push(target);
                out.push(target + 1);
            } else {
                out.push(if x > target { x + 1 } else { x });
            }
        }
        Permutation(out)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", x + 1)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_line_round_trip() {
        let p = Permutation::from_one_line(&[2, 3, 1]).unwrap();
        assert_eq!(p.one_line(), vec![2, 3, 1]);
        assert_eq!(p.to_string(), "2 3 1");
        assert!(Permutation::from_one_line(&[1, 1]).is_err());
        assert!(Permutation::from_one_line(&[0, 1]).is_err());
        assert!(Permutation::from_one_line(&[1, 3]).is_err());
    }

    #[test]
    fn compose_and_invert() {
        let p = Permutation::from_one_line(&[2, 3, 1]).unwrap();
        assert!(p.then(&p.inverse()).is_identity());
        let q = Permutation::from_one_line(&[2, 1, 3]).unwrap();
        // 1 -> 2 -> 1, 2 -> 3 -> 3, 3 -> 1 -> 2
        assert_eq!(p.then(&q).one_line(), vec![1, 3, 2]);
    }

    #[test]
    fn surgery_on_points() {
        let p = Permutation::from_one_line(&[3, 1, 2]).unwrap();
        assert_eq!(p.delete_point(0).one_line(), vec![1, 2]);
        assert_eq!(p.double_point(0).one_line(), vec![3, 4, 1, 2]);
        assert_eq!(p.double_point(1).one_line(), vec![4, 1, 2, 3]);
        assert_eq!(p.double_point(2).delete_point(2), p);
    }
}
