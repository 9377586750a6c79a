//! Half-twists as conjugates of standard generators, frames of `B_3`, the
//! central element `Δ_n²`, and frame factorizations.
//!
//! A [`HalfTwist`] carries the presentation `w σ_i w⁻¹` (conjugator plus
//! base generator). A [`Frame`] is an ordered pair of half-twists of `B_3`
//! satisfying the two checkable frame conditions: the braid relation
//! `h1 h2 h1 = h2 h1 h2` and `(h1 h2)³ = Δ_3²`. Both are verified by the
//! equality oracle at construction; conjugating a frame by any braid
//! preserves them.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::action::{braids_equal, canonical_key, ActionImage};
use crate::hurwitz::{Factorization, HurwitzError};
use crate::word::{BraidWord, Letter, StrandCount, WordError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FrameError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Hurwitz(#[from] HurwitzError),
    #[error("base index {index} out of range 1..={max}")]
    BadBase { index: usize, max: usize },
    #[error("frames are pairs over 3 strands, got {0}")]
    NotThreeStrands(usize),
    #[error("not a frame: {0}")]
    NotAFrame(&'static str),
    #[error("pattern must have 6 indices in {{1,2}}, got {0:?}")]
    BadPattern(Vec<usize>),
    #[error("not a Δ² factorization: pattern {0:?}")]
    NotDeltaFactorization(Vec<usize>),
    #[error("frame parse error: {0}")]
    Parse(String),
}

/// A braid presented as a conjugate of a standard generator:
/// `conjugator · σ_base · conjugator⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HalfTwist {
    conjugator: BraidWord,
    base: usize,
    element: BraidWord, // cached reduced element word
}

impl HalfTwist {
    pub fn new(conjugator: BraidWord, base: usize) -> Result<Self, FrameError> {
        let n = conjugator.n();
        if base < 1 || base > n.max_index() {
            return Err(FrameError::BadBase { index: base, max: n.max_index() });
        }
        let element = BraidWord::generator(n, base)?.conjugated_by(&conjugator)?;
        Ok(HalfTwist { conjugator, base, element })
    }

    /// `σ_index` with an empty conjugator.
    pub fn standard(n: StrandCount, index: usize) -> Result<Self, FrameError> {
        HalfTwist::new(BraidWord::identity(n), index)
    }

    pub fn n(&self) -> StrandCount {
        self.conjugator.n()
    }

    pub fn conjugator(&self) -> &BraidWord {
        &self.conjugator
    }

    pub fn base(&self) -> usize {
        self.base
    }

    /// The represented element `w σ_base w⁻¹`, freely reduced.
    pub fn element_word(&self) -> &BraidWord {
        &self.element
    }

    pub fn canonical_key(&self) -> ActionImage {
        canonical_key(&self.element)
    }

    /// The same half-twist conjugated by `g`: the conjugator becomes `g · w`.
    pub fn conjugated_by(&self, g: &BraidWord) -> Result<HalfTwist, FrameError> {
        HalfTwist::new(g.compose(&self.conjugator)?, self.base)
    }

    /// Length of the shortest conjugator presenting this element over any
    /// base generator: the breadth-first conjugation distance from the
    /// element to a standard generator. Never exceeds the current
    /// conjugator length, and ignores how the element is spelled, so
    /// central conjugators cost nothing.
    pub fn surrogate_length(&self) -> usize {
        self.surrogate_length_within(self.conjugator.len())
            .expect("a conjugate of a generator reaches one within its conjugator length")
    }

    /// As [`HalfTwist::surrogate_length`], but gives up beyond `cap`
    /// conjugation steps and returns `None`.
    pub fn surrogate_length_within(&self, cap: usize) -> Option<usize> {
        let n = self.n();
        let targets: HashSet<ActionImage> = (1..=n.max_index())
            .map(|i| canonical_key(&BraidWord::generator(n, i).expect("index in range")))
            .collect();
        let start_key = self.canonical_key();
        if targets.contains(&start_key) {
            return Some(0);
        }
        let cap = cap.min(self.conjugator.len());
        let mut seen = HashSet::new();
        seen.insert(start_key);
        let mut queue = VecDeque::new();
        queue.push_back((self.element.clone(), 0usize));
        let letters: Vec<Letter> = (1..=n.max_index())
            .flat_map(|i| [Letter::new(i, true), Letter::new(i, false)])
            .collect();
        while let Some((word, depth)) = queue.pop_front() {
            if depth >= cap {
                continue;
            }
            for &l in &letters {
                // extend the candidate conjugator by l: the element becomes l⁻¹ w l
                let conj = BraidWord::from_letters(n, [l.inverse()])
                    .expect("in range")
                    .compose(&word)
                    .and_then(|x| x.compose(&BraidWord::from_letters(n, [l]).expect("in range")))
                    .expect("same strand count");
                let key = canonical_key(&conj);
                if targets.contains(&key) {
                    return Some(depth + 1);
                }
                if seen.insert(key) {
                    queue.push_back((conj, depth + 1));
                }
            }
        }
        None
    }
}

impl fmt::Display for HalfTwist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(conj=\"{}\", base={})", self.conjugator, self.base)
    }
}

/// The word `(σ_1 … σ_{n-1})ⁿ`, the central element `Δ_n²`.
pub fn delta_squared(n: StrandCount) -> BraidWord {
    let mut letters = Vec::with_capacity(n.get() * n.max_index());
    for _ in 0..n.get() {
        for i in 1..=n.max_index() {
            letters.push(Letter::new(i, true));
        }
    }
    BraidWord::from_letters(n, letters).expect("indices in range")
}

/// An ordered pair of half-twists of `B_3` passing both frame conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    h1: HalfTwist,
    h2: HalfTwist,
}

impl Frame {
    /// Validates the braid relation and `(h1 h2)³ = Δ_3²` via the oracle.
    pub fn new(h1: HalfTwist, h2: HalfTwist) -> Result<Self, FrameError> {
        if h1.n().get() != 3 {
            return Err(FrameError::NotThreeStrands(h1.n().get()));
        }
        if h2.n().get() != 3 {
            return Err(FrameError::NotThreeStrands(h2.n().get()));
        }
        let e1 = h1.element_word();
        let e2 = h2.element_word();
        let lhs = e1.compose(e2)?.compose(e1)?;
        let rhs = e2.compose(e1)?.compose(e2)?;
        if !braids_equal(&lhs, &rhs)? {
            return Err(FrameError::NotAFrame("h1 h2 h1 != h2 h1 h2"));
        }
        let pair = e1.compose(e2)?;
        let cube = pair.compose(&pair)?.compose(&pair)?;
        if !braids_equal(&cube, &delta_squared(h1.n()))? {
            return Err(FrameError::NotAFrame("(h1 h2)^3 != Δ²"));
        }
        Ok(Frame { h1, h2 })
    }

    /// The frame `(σ_1, σ_2)`.
    pub fn standard() -> Frame {
        let n = StrandCount::new(3).expect("3 >= 2");
        Frame {
            h1: HalfTwist::standard(n, 1).expect("valid base"),
            h2: HalfTwist::standard(n, 2).expect("valid base"),
        }
    }

    pub fn h1(&self) -> &HalfTwist {
        &self.h1
    }

    pub fn h2(&self) -> &HalfTwist {
        &self.h2
    }

    pub fn n(&self) -> StrandCount {
        self.h1.n()
    }

    /// Component canonical keys, `(key(h1), key(h2))`.
    pub fn canonical_keys(&self) -> (ActionImage, ActionImage) {
        (self.h1.canonical_key(), self.h2.canonical_key())
    }

    /// Whether the pair equals `(σ_1, σ_2)` element-wise.
    pub fn is_standard(&self) -> bool {
        let std = Frame::standard();
        self.canonical_keys() == std.canonical_keys()
    }

    /// Both half-twists conjugated by `g`; the result is again a frame.
    pub fn conjugated_by(&self, g: &BraidWord) -> Result<Frame, FrameError> {
        Frame::new(self.h1.conjugated_by(g)?, self.h2.conjugated_by(g)?)
    }

    /// The 6-tuple `(h1, h2, h1, h2, h1, h2)`; its product is `Δ_3²` by the
    /// frame conditions.
    pub fn factorization(&self) -> Factorization {
        self.word_factorization(&[1, 2, 1, 2, 1, 2])
            .expect("alternating pattern spells Δ²")
    }

    /// The 6-tuple substituting `h1`/`h2` along `pattern`. The pattern read
    /// as a positive word in the standard generators must spell `Δ_3²`;
    /// the substituted product then equals `Δ_3²` as well, because the
    /// half-twists satisfy the same relations.
    pub fn word_factorization(&self, pattern: &[usize]) -> Result<Factorization, FrameError> {
        if pattern.len() != 6 || pattern.iter().any(|&i| i != 1 && i != 2) {
            return Err(FrameError::BadPattern(pattern.to_vec()));
        }
        let n = self.n();
        let spelled = BraidWord::from_letters(n, pattern.iter().map(|&i| Letter::new(i, true)))?;
        if !braids_equal(&spelled, &delta_squared(n))? {
            return Err(FrameError::NotDeltaFactorization(pattern.to_vec()));
        }
        let factors: Vec<BraidWord> = pattern
            .iter()
            .map(|&i| {
                if i == 1 { self.h1.element_word() } else { self.h2.element_word() }.clone()
            })
            .collect();
        Ok(Factorization::new(n, factors)?)
    }

    /// Parses the frame file form: `key = value` lines with keys `w1`,
    /// `b1`, `w2`, `b2`, or the compact form `frame: conj=<word>` meaning
    /// the standard frame conjugated by the given word. An optional
    /// `pattern = i1 .. i6` line rides along. Blank lines and `#` comments
    /// are ignored.
    pub fn parse_with_pattern(text: &str) -> Result<(Frame, Vec<usize>), FrameError> {
        let n = StrandCount::new(3).expect("3 >= 2");
        let mut w1: Option<BraidWord> = None;
        let mut b1: Option<usize> = None;
        let mut w2: Option<BraidWord> = None;
        let mut b2: Option<usize> = None;
        let mut conj: Option<BraidWord> = None;
        let mut pattern: Vec<usize> = vec![1, 2, 1, 2, 1, 2];
        for raw in text.lines() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() || line == "frame" {
                continue;
            }
            let line = line.strip_prefix("frame:").map(str::trim).unwrap_or(line);
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| FrameError::Parse(format!("expected key=value, got `{raw}`")))?;
            let key = key.trim();
            let value = value.trim();
            match key {
                "w1" => w1 = Some(BraidWord::parse(n, value)?),
                "w2" => w2 = Some(BraidWord::parse(n, value)?),
                "b1" => {
                    b1 = Some(value.parse().map_err(|_| {
                        FrameError::Parse(format!("bad base index `{value}`"))
                    })?)
                }
                "b2" => {
                    b2 = Some(value.parse().map_err(|_| {
                        FrameError::Parse(format!("bad base index `{value}`"))
                    })?)
                }
                "conj" => conj = Some(BraidWord::parse(n, value)?),
                "pattern" => {
                    pattern = value
                        .split_whitespace()
                        .map(|t| {
                            t.parse()
                                .map_err(|_| FrameError::Parse(format!("bad pattern token `{t}`")))
                        })
                        .collect::<Result<Vec<usize>, _>>()?;
                }
                _ => return Err(FrameError::Parse(format!("unknown key `{key}`"))),
            }
        }
        let frame = if let Some(g) = conj {
            if w1.is_some() || w2.is_some() || b1.is_some() || b2.is_some() {
                return Err(FrameError::Parse(
                    "give either conj= or the w1/b1/w2/b2 form, not both".to_string(),
                ));
            }
            Frame::standard().conjugated_by(&g)?
        } else {
            let w1 = w1.ok_or_else(|| FrameError::Parse("missing w1=".to_string()))?;
            let b1 = b1.ok_or_else(|| FrameError::Parse("missing b1=".to_string()))?;
            let w2 = w2.ok_or_else(|| FrameError::Parse("missing w2=".to_string()))?;
            let b2 = b2.ok_or_else(|| FrameError::Parse("missing b2=".to_string()))?;
            Frame::new(HalfTwist::new(w1, b1)?, HalfTwist::new(w2, b2)?)?
        };
        Ok((frame, pattern))
    }

    /// Inverse of [`Frame::parse_with_pattern`], explicit form.
    pub fn to_file_string(&self, pattern: &[usize]) -> String {
        let pat: Vec<String> = pattern.iter().map(|i| i.to_string()).collect();
        format!(
            "frame\nw1 = {}\nb1 = {}\nw2 = {}\nb2 = {}\npattern = {}\n",
            self.h1.conjugator(),
            self.h1.base(),
            self.h2.conjugator(),
            self.h2.base(),
            pat.join(" "),
        )
    }
}

impl fmt::Display for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[h1={}, h2={}]", self.h1, self.h2)
    }
}

/// All 6-index patterns over `{1, 2}` spelling `Δ_3²` in the standard
/// generators, in lexicographic order. Brute-force enumeration of all 64.
pub fn delta_patterns() -> Vec<[usize; 6]> {
    let n = StrandCount::new(3).expect("3 >= 2");
    let delta_key = canonical_key(&delta_squared(n));
    let mut out = Vec::new();
    for bits in 0..64u32 {
        let pattern: [usize; 6] =
            std::array::from_fn(|i| if bits & (1 << (5 - i)) == 0 { 1 } else { 2 });
        let word = BraidWord::from_letters(n, pattern.iter().map(|&i| Letter::new(i, true)))
            .expect("in range");
        if canonical_key(&word) == delta_key {
            out.push(pattern);
        }
    }
    out
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
    fn standard_frame_shape() {
        let f = Frame::standard();
        assert!(f.h1().conjugator().is_empty());
        assert_eq!(f.h1().base(), 1);
        assert_eq!(f.h1().element_word(), &w("1"));
        assert_eq!(f.h2().element_word(), &w("2"));
        assert!(f.is_standard());
        assert!(braids_equal(f.factorization().product(), &delta_squared(n3())).unwrap());
    }

    #[test]
    fn delta_squared_instances() {
        assert_eq!(delta_squared(StrandCount::new(2).unwrap()).to_string(), "1 1");
        assert_eq!(delta_squared(n3()), w("1 2 1 2 1 2"));
        assert!(braids_equal(&delta_squared(n3()), &w("2 1 2 1 2 1")).unwrap());
    }

    #[test]
    fn conjugated_frame_is_frame() {
        let f = Frame::standard().conjugated_by(&w("1")).unwrap();
        assert!(braids_equal(f.h1().element_word(), &w("1")).unwrap());
        assert!(braids_equal(f.h2().element_word(), &w("1 2 -1")).unwrap());
        // conjugating by the identity or by the central element changes nothing
        let id = Frame::standard().conjugated_by(&w("")).unwrap();
        assert!(id.is_standard());
        let central = Frame::standard().conjugated_by(&delta_squared(n3())).unwrap();
        assert!(central.is_standard());
    }

    #[test]
    fn non_frame_rejected() {
        let n = n3();
        let h1 = HalfTwist::standard(n, 1).unwrap();
        let also_h1 = HalfTwist::standard(n, 1).unwrap();
        assert!(matches!(Frame::new(h1, also_h1), Err(FrameError::NotAFrame(_))));
    }

    #[test]
    fn word_factorization_patterns() {
        let f = Frame::standard();
        let fac = f.word_factorization(&[1, 2, 1, 2, 1, 2]).unwrap();
        assert_eq!(fac.factors().len(), 6);
        assert_eq!(fac, f.factorization());
        assert!(f.word_factorization(&[2, 1, 2, 1, 2, 1]).is_ok());
        assert!(matches!(
            f.word_factorization(&[1, 1, 1, 1, 1, 1]),
            Err(FrameError::NotDeltaFactorization(_))
        ));
        assert!(matches!(
            f.word_factorization(&[1, 2, 3, 1, 2, 1]),
            Err(FrameError::BadPattern(_))
        ));
        assert!(matches!(
            f.word_factorization(&[1, 2, 1]),
            Err(FrameError::BadPattern(_))
        ));
    }

    #[test]
    fn conjugated_word_factorization_keeps_product() {
        let f = Frame::standard().conjugated_by(&w("2 -1 2")).unwrap();
        let fac = f.factorization();
        assert!(braids_equal(fac.product(), &delta_squared(n3())).unwrap());
    }

    #[test]
    fn surrogate_lengths() {
        let n = n3();
        assert_eq!(HalfTwist::standard(n, 1).unwrap().surrogate_length(), 0);
        assert_eq!(HalfTwist::standard(n, 2).unwrap().surrogate_length(), 0);
        // σ1 σ2 σ1⁻¹ needs exactly one conjugating letter
        let h = HalfTwist::new(w("1"), 2).unwrap();
        assert_eq!(h.surrogate_length(), 1);
        // a central conjugator presents the same element: cost stays 0
        let central = HalfTwist::new(delta_squared(n), 2).unwrap();
        assert_eq!(central.surrogate_length(), 0);
        // capped search reports misses
        let deep = HalfTwist::new(w("1 2 1 -2"), 2).unwrap();
        let exact = deep.surrogate_length();
        assert!(deep.surrogate_length_within(exact).is_some());
        if exact > 0 {
            assert_eq!(deep.surrogate_length_within(exact - 1), None);
        }
    }

    #[test]
    fn delta_pattern_enumeration() {
        let patterns = delta_patterns();
        assert_eq!(patterns.len(), 8);
        assert!(patterns.contains(&[1, 2, 1, 2, 1, 2]));
        assert!(patterns.contains(&[2, 1, 2, 1, 2, 1]));
        assert!(patterns.contains(&[1, 2, 1, 1, 2, 1]));
        assert!(patterns.contains(&[2, 1, 2, 2, 1, 2]));
        assert!(patterns.contains(&[1, 1, 2, 1, 1, 2]));
        assert!(patterns.contains(&[2, 2, 1, 2, 2, 1]));
        assert!(patterns.contains(&[1, 2, 2, 1, 2, 2]));
        assert!(patterns.contains(&[2, 1, 1, 2, 1, 1]));
    }

    #[test]
    fn frame_file_round_trip() {
        let f = Frame::standard().conjugated_by(&w("1 -2")).unwrap();
        let text = f.to_file_string(&[2, 1, 2, 1, 2, 1]);
        let (parsed, pattern) = Frame::parse_with_pattern(&text).unwrap();
        assert_eq!(parsed, f);
        assert_eq!(pattern, vec![2, 1, 2, 1, 2, 1]);

        let (compact, pattern) =
            Frame::parse_with_pattern("frame: conj=1 -2\n# comment\n").unwrap();
        assert_eq!(compact, f);
        assert_eq!(pattern, vec![1, 2, 1, 2, 1, 2]);

        assert!(Frame::parse_with_pattern("w1 = 1\n").is_err());
        assert!(Frame::parse_with_pattern("junk\n").is_err());
    }
}
