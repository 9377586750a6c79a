//! Words over the Artin generators of the braid group `B_n`.
//!
//! A [`BraidWord`] is kept freely reduced at all times (no adjacent
//! `σ_i σ_i⁻¹` pair survives any operation) but is not otherwise
//! normalized; group-level equality is decided by the [`crate::action`]
//! oracle.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("strand count must be at least 2, got {0}")]
    InvalidStrandCount(usize),
    #[error("generator index {index} out of range 1..={max} for {n} strands")]
    IndexOutOfRange { index: usize, max: usize, n: usize },
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("invalid word token `{0}`")]
    BadToken(String),
}

/// Number of punctures/strands. Generator indices range over `1..=n-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrandCount(usize);

impl StrandCount {
    pub fn new(n: usize) -> Result<Self, WordError> {
        if n < 2 {
            return Err(WordError::InvalidStrandCount(n));
        }
        Ok(StrandCount(n))
    }

    pub fn get(self) -> usize {
        self.0
    }

    /// Largest admissible generator index, `n - 1`.
    pub fn max_index(self) -> usize {
        self.0 - 1
    }
}

impl fmt::Display for StrandCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One Artin generator or its inverse, stored as a signed index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(i32);

impl Letter {
    /// `σ_index` when `positive`, `σ_index⁻¹` otherwise. `index` must be ≥ 1.
    pub fn new(index: usize, positive: bool) -> Self {
        assert!(index >= 1 && index <= i32::MAX as usize, "bad generator index");
        let v = index as i32;
        Letter(if positive { v } else { -v })
    }

    /// Parses the external signed-integer form; `0` is forbidden.
    pub fn from_signed(value: i64, n: StrandCount) -> Result<Self, WordError> {
        if value == 0 {
            return Err(WordError::BadToken("0".to_string()));
        }
        let index = value.unsigned_abs() as usize;
        if index > n.max_index() {
            return Err(WordError::IndexOutOfRange {
                index,
                max: n.max_index(),
                n: n.get(),
            });
        }
        Ok(Letter(value as i32))
    }

    pub fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn inverse(self) -> Self {
        Letter(-self.0)
    }

    /// Signed external form: `index` for `σ_index`, `-index` for `σ_index⁻¹`.
    pub fn signed(self) -> i32 {
        self.0
    }

    fn cancels(self, other: Letter) -> bool {
        self.0 == -other.0
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A freely reduced word over the generators of `B_n`.
///
/// The empty word is the identity. Words compare letter-for-letter;
/// use [`crate::action::braids_equal`] for group equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    n: StrandCount,
    letters: Vec<Letter>,
}

/// Freely reduces a letter sequence: removes adjacent inverse pairs until
/// none remain. The result is independent of cancellation order.
pub fn free_reduce(letters: impl IntoIterator<Item = Letter>) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::new();
    for l in letters {
        if out.last().is_some_and(|t| t.cancels(l)) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

impl BraidWord {
    pub fn identity(n: StrandCount) -> Self {
        BraidWord { n, letters: Vec::new() }
    }

    /// The single-letter word `σ_index`.
    pub fn generator(n: StrandCount, index: usize) -> Result<Self, WordError> {
        Self::from_letters(n, [Letter::new(index, true)])
    }

    /// Builds a word from arbitrary letters, validating indices and freely reducing.
    pub fn from_letters(
        n: StrandCount,
        letters: impl IntoIterator<Item = Letter>,
    ) -> Result<Self, WordError> {
        let mut collected = Vec::new();
        for l in letters {
            if l.index() > n.max_index() {
                return Err(WordError::IndexOutOfRange {
                    index: l.index(),
                    max: n.max_index(),
                    n: n.get(),
                });
            }
            collected.push(l);
        }
        Ok(BraidWord { n, letters: free_reduce(collected) })
    }

    /// Parses whitespace-separated signed generator indices, e.g. `"1 2 -1"`.
    /// The empty string is the identity.
    pub fn parse(n: StrandCount, text: &str) -> Result<Self, WordError> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let value: i64 = token
                .parse()
                .map_err(|_| WordError::BadToken(token.to_string()))?;
            letters.push(Letter::from_signed(value, n)?);
        }
        Ok(BraidWord { n, letters: free_reduce(letters) })
    }

    pub fn n(&self) -> StrandCount {
        self.n
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

    /// Product of `self` and `other`: concatenation followed by free reduction.
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord, WordError> {
        if self.n != other.n {
            return Err(WordError::StrandMismatch(self.n.get(), other.n.get()));
        }
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            if letters.last().is_some_and(|t| t.cancels(l)) {
                letters.pop();
            } else {
                letters.push(l);
            }
        }
        Ok(BraidWord { n: self.n, letters })
    }

    /// Reversed letter order with all signs flipped; `w · w⁻¹` reduces to the
    /// empty word.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `g · self · g⁻¹`, freely reduced.
    pub fn conjugated_by(&self, g: &BraidWord) -> Result<BraidWord, WordError> {
        g.compose(self)?.compose(&g.inverse())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n3() -> StrandCount {
        StrandCount::new(3).unwrap()
    }

    fn w(text: &str) -> BraidWord {
        BraidWord::parse(n3(), text).unwrap()
    }

    #[test]
    fn strand_count_rejects_small() {
        assert!(StrandCount::new(0).is_err());
        assert!(StrandCount::new(1).is_err());
        assert!(StrandCount::new(2).is_ok());
    }

    #[test]
    fn compose_cancels_inverse() {
        assert!(w("1").compose(&w("-1")).unwrap().is_empty());
    }

    #[test]
    fn compose_without_reduction() {
        assert_eq!(w("1 2").compose(&w("2")).unwrap(), w("1 2 2"));
    }

    #[test]
    fn compose_partial_cancellation() {
        // hand free-reduction: 1 2 -1 · 1 -2 = 1
        assert_eq!(w("1 2 -1").compose(&w("1 -2")).unwrap(), w("1"));
    }

    #[test]
    fn compose_strand_mismatch() {
        let a = BraidWord::parse(n3(), "1").unwrap();
        let b = BraidWord::parse(StrandCount::new(4).unwrap(), "1").unwrap();
        assert!(matches!(a.compose(&b), Err(WordError::StrandMismatch(3, 4))));
    }

    #[test]
    fn inverse_examples() {
        assert!(w("").inverse().is_empty());
        assert_eq!(w("1 2").inverse(), w("-2 -1"));
        assert_eq!(w("1 -2 1").inverse(), w("-1 2 -1"));
    }

    #[test]
    fn free_reduce_examples() {
        assert!(w("1 -1").is_empty());
        assert!(w("1 2 -2 -1").is_empty());
        assert_eq!(w("2 1 -1 2"), w("2 2"));
    }

    #[test]
    fn parse_rejects_zero_and_out_of_range() {
        assert_eq!(
            BraidWord::parse(n3(), "1 0 2"),
            Err(WordError::BadToken("0".to_string()))
        );
        assert!(matches!(
            BraidWord::parse(n3(), "3"),
            Err(WordError::IndexOutOfRange { index: 3, max: 2, n: 3 })
        ));
        assert_eq!(
            BraidWord::parse(n3(), "1 x"),
            Err(WordError::BadToken("x".to_string()))
        );
    }

    #[test]
    fn parse_format_round_trip() {
        let text = "1  2   -1";
        let parsed = w(text);
        assert_eq!(parsed.to_string(), "1 2 -1");
        assert_eq!(w(""), BraidWord::identity(n3()));
        assert_eq!(w("").to_string(), "");
    }

    #[test]
    fn conjugation() {
        // g w g^-1 with g = "1", w = "2"
        assert_eq!(w("2").conjugated_by(&w("1")).unwrap(), w("1 2 -1"));
    }
}
