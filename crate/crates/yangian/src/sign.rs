use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A 01-sequence: the parity assignment of the row/column indices.
///
/// Position `i` (1-based) carries digit `0` (even) or `1` (odd). The sequence
/// with `M` zeros followed by `N` ones is the standard one.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignSequence {
    digits: Vec<u8>,
}

impl SignSequence {
    /// May be empty: empty prefixes are legal for embeddings.
    pub fn new(digits: Vec<u8>) -> Result<Self> {
        if digits.iter().any(|&d| d > 1) {
            return Err(Error::BadDigit);
        }
        Ok(SignSequence { digits })
    }

    pub fn empty() -> Self {
        SignSequence { digits: Vec::new() }
    }

    /// The standard sequence 0^m 1^n.
    pub fn standard(m: usize, n: usize) -> Self {
        let mut digits = vec![0u8; m];
        digits.extend(std::iter::repeat_n(1u8, n));
        SignSequence { digits }
    }

    /// All 2^len sequences of the given length, in lexicographic order.
    pub fn enumerate(len: usize) -> Vec<Self> {
        (0..1usize << len)
            .map(|mask| SignSequence {
                digits: (0..len)
                    .map(|i| ((mask >> (len - 1 - i)) & 1) as u8)
                    .collect(),
            })
            .collect()
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Digit at 1-based position `i`.
    pub fn digit(&self, i: usize) -> u8 {
        self.digits[i - 1]
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn count_zeros(&self) -> usize {
        self.digits.iter().filter(|&&d| d == 0).count()
    }

    pub fn count_ones(&self) -> usize {
        self.digits.iter().filter(|&&d| d == 1).count()
    }

    /// 1-based positions carrying digit 0, ascending.
    pub fn zero_positions(&self) -> Vec<usize> {
        self.positions_of(0)
    }

    /// 1-based positions carrying digit 1, ascending.
    pub fn one_positions(&self) -> Vec<usize> {
        self.positions_of(1)
    }

    fn positions_of(&self, d: u8) -> Vec<usize> {
        self.digits
            .iter()
            .enumerate()
            .filter(|(_, &x)| x == d)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Zeros and ones interchanged.
    pub fn flipped(&self) -> Self {
        SignSequence {
            digits: self.digits.iter().map(|&d| 1 - d).collect(),
        }
    }

    pub fn reversed(&self) -> Self {
        let mut digits = self.digits.clone();
        digits.reverse();
        SignSequence { digits }
    }

    /// The flipped sequence, reversed.
    pub fn dagger(&self) -> Self {
        self.flipped().reversed()
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut digits = self.digits.clone();
        digits.extend_from_slice(&other.digits);
        SignSequence { digits }
    }

    /// First `i` digits.
    pub fn prefix(&self, i: usize) -> Self {
        SignSequence {
            digits: self.digits[..i].to_vec(),
        }
    }

    /// Digits from 1-based position `i+1` on.
    pub fn suffix(&self, i: usize) -> Self {
        SignSequence {
            digits: self.digits[i..].to_vec(),
        }
    }

    /// Digits at 1-based positions `start+1 ..= start+len`.
    pub fn slice(&self, start: usize, len: usize) -> Self {
        SignSequence {
            digits: self.digits[start..start + len].to_vec(),
        }
    }

    pub fn starts_with(&self, prefix: &Self) -> bool {
        self.digits.starts_with(&prefix.digits)
    }

    pub fn is_standard(&self) -> bool {
        *self == SignSequence::standard(self.count_zeros(), self.count_ones())
    }
}

impl fmt::Display for SignSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.digits {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignSequence({self})")
    }
}

impl FromStr for SignSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0u8),
                '1' => Ok(1u8),
                _ => Err(Error::BadDigit),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SignSequence { digits })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn involutions() {
        for seq in SignSequence::enumerate(4) {
            assert_eq!(seq.dagger().dagger(), seq);
            assert_eq!(seq.reversed().reversed(), seq);
            assert_eq!(seq.flipped().flipped(), seq);
        }
    }

    #[test]
    fn positions() {
        let s: SignSequence = "1010".parse().unwrap();
        assert_eq!(s.zero_positions(), vec![2, 4]);
        assert_eq!(s.one_positions(), vec![1, 3]);
        assert_eq!(s.count_zeros(), 2);
        assert_eq!(s.count_ones(), 2);
    }

    #[test]
    fn dagger_of_standard() {
        // 0011 -> flip 1100 -> reverse 0011
        let s = SignSequence::standard(2, 2);
        assert_eq!(s.dagger().to_string(), "0011");
        let t: SignSequence = "001".parse().unwrap();
        assert_eq!(t.dagger().to_string(), "011");
    }

    #[test]
    fn rejects_bad_digits() {
        assert_eq!("012".parse::<SignSequence>(), Err(Error::BadDigit));
        assert_eq!(SignSequence::new(vec![0, 2]), Err(Error::BadDigit));
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(SignSequence::enumerate(3).len(), 8);
        let all = SignSequence::enumerate(2);
        assert_eq!(
            all.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            vec!["00", "01", "10", "11"]
        );
    }
}
