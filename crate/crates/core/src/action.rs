//! Equality oracle for braids via their action on the free group.
//!
//! `B_n` acts faithfully on the free group on `n` generators `x_1..x_n`:
//! `σ_i` sends `x_i ↦ x_i x_{i+1} x_i⁻¹`, `x_{i+1} ↦ x_i` and fixes the
//! rest; `σ_i⁻¹` sends `x_i ↦ x_{i+1}`, `x_{i+1} ↦ x_{i+1}⁻¹ x_i x_{i+1}`.
//! Words act letter by letter, left to right, so
//! `act(a·b, ·) = act(b, ·) ∘ act(a, ·)`.
//!
//! The tuple of images of all `n` free generators ([`ActionImage`]) is a
//! canonical key: two braid words are equal as group elements iff their
//! keys coincide.

use std::fmt;

use crate::word::{BraidWord, Letter, StrandCount, WordError};

/// One letter of a free-group word: a signed puncture index in `1..=n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeLetter(i32);

impl FreeLetter {
    pub fn new(puncture: usize, positive: bool) -> Self {
        assert!(puncture >= 1 && puncture <= i32::MAX as usize, "bad puncture index");
        let v = puncture as i32;
        FreeLetter(if positive { v } else { -v })
    }

    pub fn puncture(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn inverse(self) -> Self {
        FreeLetter(-self.0)
    }

    pub fn signed(self) -> i32 {
        self.0
    }

    fn cancels(self, other: FreeLetter) -> bool {
        self.0 == -other.0
    }
}

/// A freely reduced word in the free group on the punctures.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord(Vec<FreeLetter>);

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord(Vec::new())
    }

    /// The single generator `x_puncture`.
    pub fn generator(puncture: usize) -> Self {
        FreeWord(vec![FreeLetter::new(puncture, true)])
    }

    pub fn from_letters(letters: impl IntoIterator<Item = FreeLetter>) -> Self {
        let mut w = FreeWord::identity();
        for l in letters {
            w.push_reduced(l);
        }
        w
    }

    pub fn letters(&self) -> &[FreeLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn push_reduced(&mut self, l: FreeLetter) {
        if self.0.last().is_some_and(|t| t.cancels(l)) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    /// If this word is `u · x_j · u⁻¹` for some `u`, returns `j`.
    ///
    /// A reduced conjugate of a generator peels symmetrically: strip matching
    /// outer inverse pairs until a single positive letter remains.
    pub fn conjugate_of_generator(&self) -> Option<usize> {
        let w = &self.0;
        if w.len() % 2 == 0 {
            return None;
        }
        let mut lo = 0;
        let mut hi = w.len() - 1;
        while lo < hi {
            if !w[lo].cancels(w[hi]) {
                return None;
            }
            lo += 1;
            hi -= 1;
        }
        w[lo].is_positive().then(|| w[lo].puncture())
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.0 {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{}", l.signed())?;
            first = false;
        }
        Ok(())
    }
}

/// Image of one free letter under one braid letter, appended reduced.
fn substitute(l: Letter, fl: FreeLetter, out: &mut FreeWord) {
    let i = l.index();
    let j = fl.puncture();
    // images of the positive free letter x_j
    let img: &[FreeLetter] = if l.is_positive() {
        if j == i {
            &[
                FreeLetter::new(i, true),
                FreeLetter::new(i + 1, true),
                FreeLetter::new(i, false),
            ]
        } else if j == i + 1 {
            &[FreeLetter::new(i, true)]
        } else {
            &[fl]
        }
    } else if j == i {
        &[FreeLetter::new(i + 1, true)]
    } else if j == i + 1 {
        &[
            FreeLetter::new(i + 1, false),
            FreeLetter::new(i, true),
            FreeLetter::new(i + 1, true),
        ]
    } else {
        &[fl]
    };
    if fl.is_positive() {
        for &x in img {
            out.push_reduced(x);
        }
    } else {
        for &x in img.iter().rev() {
            out.push_reduced(x.inverse());
        }
    }
}

/// Applies the substitution for a single braid letter and freely reduces.
pub fn act_letter(l: Letter, fw: &FreeWord) -> FreeWord {
    let mut out = FreeWord(Vec::with_capacity(fw.len() + 2));
    for &fl in fw.letters() {
        substitute(l, fl, &mut out);
    }
    out
}

/// Applies a braid word letter by letter, left to right.
pub fn act(w: &BraidWord, fw: &FreeWord) -> FreeWord {
    let mut cur = fw.clone();
    for &l in w.letters() {
        cur = act_letter(l, &cur);
    }
    cur
}

/// The images of all `n` free generators under a braid word; the canonical
/// key used for equality and hashing throughout.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ActionImage {
    images: Vec<FreeWord>,
}

impl ActionImage {
    pub fn identity(n: StrandCount) -> Self {
        ActionImage {
            images: (1..=n.get()).map(FreeWord::generator).collect(),
        }
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Deterministic text form (one image per puncture, fixed order); the
    /// serialization hashed into certificate digests.
    pub fn digest_text(&self) -> String {
        let parts: Vec<String> = self.images.iter().map(|w| w.to_string()).collect();
        parts.join(";")
    }
}

impl fmt::Display for ActionImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.digest_text())
    }
}

/// Canonical key of a braid word: the [`ActionImage`] of all generators.
pub fn canonical_key(w: &BraidWord) -> ActionImage {
    let mut images: Vec<FreeWord> = (1..=w.n().get()).map(FreeWord::generator).collect();
    for &l in w.letters() {
        for img in images.iter_mut() {
            *img = act_letter(l, img);
        }
    }
    ActionImage { images }
}

/// Group-element equality via canonical keys.
pub fn braids_equal(w1: &BraidWord, w2: &BraidWord) -> Result<bool, WordError> {
    if w1.n() != w2.n() {
        return Err(WordError::StrandMismatch(w1.n().get(), w2.n().get()));
    }
    Ok(canonical_key(w1) == canonical_key(w2))
}
