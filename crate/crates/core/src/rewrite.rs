//! Rewriting of positive braid words by single relation applications.
//!
//! Two equal positive words are connected by a chain of single
//! applications of the commutation relation (`σ_i σ_j → σ_j σ_i`,
//! `|i−j| > 1`) or the triple relation (`σ_i σ_j σ_i → σ_j σ_i σ_j`,
//! `|i−j| = 1`), every intermediate word positive. [`find_relation_path`]
//! finds such a chain by bidirectional breadth-first search, and
//! [`relation_path_to_hurwitz`] translates it into Hurwitz moves: one
//! forward move per commutation, two forward moves (`R_{p+1}` then `R_p`)
//! per triple application.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::hurwitz::{HurwitzMove, MoveSequence};
use crate::word::{BraidWord, Letter, StrandCount, WordError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RewriteError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("relation move {mv} does not apply: {reason}")]
    InvalidMove { mv: RelationMove, reason: String },
    #[error("step {step} of relation path ({mv}) does not apply: {reason}")]
    InvalidStep { step: usize, mv: RelationMove, reason: String },
    #[error("bad relation move token `{0}`")]
    BadMoveToken(String),
}

/// A word using only positive powers of the generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PositiveWord {
    n: StrandCount,
    letters: Vec<usize>,
}

impl PositiveWord {
    pub fn new(n: StrandCount, letters: Vec<usize>) -> Result<Self, WordError> {
        for &i in &letters {
            if i < 1 || i > n.max_index() {
                return Err(WordError::IndexOutOfRange { index: i, max: n.max_index(), n: n.get() });
            }
        }
        Ok(PositiveWord { n, letters })
    }

    pub fn n(&self) -> StrandCount {
        self.n
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn to_braid_word(&self) -> BraidWord {
        BraidWord::from_letters(self.n, self.letters.iter().map(|&i| Letter::new(i, true)))
            .expect("indices validated at construction")
    }
}

impl fmt::Display for PositiveWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{i}")?;
            first = false;
        }
        Ok(())
    }
}

/// One relation application. `TripleLR` rewrites `i j i → j i j` with
/// `j = i + 1` (outer letter goes up); `TripleRL` is the reverse rewrite
/// with the outer letter going down. The split makes every move replayable
/// and invertible without re-matching.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RelationKind {
    Commute,
    TripleLR,
    TripleRL,
}

/// A relation application at a 0-based letter offset. Serialized `C@3`,
/// `T+@0`, `T-@2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RelationMove {
    pub kind: RelationKind,
    pub pos: usize,
}

impl RelationMove {
    /// The move undoing this one at the same position.
    pub fn inverse(self) -> RelationMove {
        let kind = match self.kind {
            RelationKind::Commute => RelationKind::Commute,
            RelationKind::TripleLR => RelationKind::TripleRL,
            RelationKind::TripleRL => RelationKind::TripleLR,
        };
        RelationMove { kind, pos: self.pos }
    }
}

impl fmt::Display for RelationMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.kind {
            RelationKind::Commute => "C",
            RelationKind::TripleLR => "T+",
            RelationKind::TripleRL => "T-",
        };
        write!(f, "{tag}@{}", self.pos)
    }
}

impl FromStr for RelationMove {
    type Err = RewriteError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (tag, pos) = s
            .split_once('@')
            .ok_or_else(|| RewriteError::BadMoveToken(s.to_string()))?;
        let kind = match tag {
            "C" => RelationKind::Commute,
            "T+" => RelationKind::TripleLR,
            "T-" => RelationKind::TripleRL,
            _ => return Err(RewriteError::BadMoveToken(s.to_string())),
        };
        let pos = pos.parse().map_err(|_| RewriteError::BadMoveToken(s.to_string()))?;
        Ok(RelationMove { kind, pos })
    }
}

/// Applies one relation move, validating the window it matches.
pub fn apply_relation_move(
    w: &PositiveWord,
    mv: RelationMove,
) -> Result<PositiveWord, RewriteError> {
    let letters = &w.letters;
    let fail = |reason: &str| RewriteError::InvalidMove { mv, reason: reason.to_string() };
    let mut out = letters.clone();
    match mv.kind {
        RelationKind::Commute => {
            if mv.pos + 1 >= letters.len() {
                return Err(fail("position out of range"));
            }
            let (a, b) = (letters[mv.pos], letters[mv.pos + 1]);
            if a.abs_diff(b) <= 1 {
                return Err(fail("letters do not commute"));
            }
            out.swap(mv.pos, mv.pos + 1);
        }
        RelationKind::TripleLR | RelationKind::TripleRL => {
            if mv.pos + 2 >= letters.len() {
                return Err(fail("position out of range"));
            }
            let (a, b, c) = (letters[mv.pos], letters[mv.pos + 1], letters[mv.pos + 2]);
            if a != c || a.abs_diff(b) != 1 {
                return Err(fail("window is not i j i with |i-j| = 1"));
            }
            let up = b == a + 1;
            if (mv.kind == RelationKind::TripleLR) != up {
                return Err(fail("triple direction does not match window"));
            }
            out[mv.pos] = b;
            out[mv.pos + 1] = a;
            out[mv.pos + 2] = b;
        }
    }
    Ok(PositiveWord { n: w.n, letters: out })
}

/// Exactly the words one relation application away, each paired with the
/// move producing it, scanned left to right.
pub fn neighbors(w: &PositiveWord) -> Vec<(RelationMove, PositiveWord)> {
    let letters = &w.letters;
    let mut out = Vec::new();
    for pos in 0..letters.len() {
        if pos + 1 < letters.len() && letters[pos].abs_diff(letters[pos + 1]) > 1 {
            let mv = RelationMove { kind: RelationKind::Commute, pos };
            out.push((mv, apply_relation_move(w, mv).expect("checked window")));
        }
        if pos + 2 < letters.len()
            && letters[pos] == letters[pos + 2]
            && letters[pos].abs_diff(letters[pos + 1]) == 1
        {
            let kind = if letters[pos + 1] == letters[pos] + 1 {
                RelationKind::TripleLR
            } else {
                RelationKind::TripleRL
            };
            let mv = RelationMove { kind, pos };
            out.push((mv, apply_relation_move(w, mv).expect("checked window")));
        }
    }
    out
}

/// Outcome of a relation-path search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RelationPath {
    Connected(Vec<RelationMove>),
    /// `exhausted = false`: a full connected component was searched, so the
    /// words are unequal as group elements. `exhausted = true`: the node
    /// budget ran out; inconclusive.
    NotConnected { exhausted: bool },
}

struct RelationSide {
    parents: HashMap<Vec<usize>, Option<(Vec<usize>, RelationMove)>>,
    queue: VecDeque<Vec<usize>>,
}

impl RelationSide {
    fn new(root: &[usize]) -> Self {
        let mut parents = HashMap::new();
        parents.insert(root.to_vec(), None);
        let mut queue = VecDeque::new();
        queue.push_back(root.to_vec());
        RelationSide { parents, queue }
    }

    fn path_from_root(&self, state: &[usize]) -> Vec<RelationMove> {
        let mut moves = Vec::new();
        let mut cur = state.to_vec();
        while let Some(Some((parent, mv))) = self.parents.get(&cur) {
            moves.push(*mv);
            cur = parent.clone();
        }
        moves.reverse();
        moves
    }
}

/// Bidirectional breadth-first search for a chain of relation moves
/// transforming `w1` into `w2`, within `budget` visited words.
///
/// Words of different lengths are immediately `NotConnected` with
/// `exhausted = false`: every relation move preserves length, and positive
/// words of different lengths are never equal. A returned path is
/// replay-verified before return.
pub fn find_relation_path(
    w1: &PositiveWord,
    w2: &PositiveWord,
    budget: usize,
) -> Result<RelationPath, RewriteError> {
    if w1.n() != w2.n() {
        return Err(WordError::StrandMismatch(w1.n().get(), w2.n().get()).into());
    }
    if w1.len() != w2.len() {
        return Ok(RelationPath::NotConnected { exhausted: false });
    }
    if w1.letters == w2.letters {
        return Ok(RelationPath::Connected(Vec::new()));
    }
    let n = w1.n();
    let mut fwd = RelationSide::new(&w1.letters);
    let mut bwd = RelationSide::new(&w2.letters);
    let mut nodes = 2usize;
    loop {
        if fwd.queue.is_empty() || bwd.queue.is_empty() {
            return Ok(RelationPath::NotConnected { exhausted: false });
        }
        let forward_turn = fwd.queue.len() <= bwd.queue.len();
        let (mine, other) = if forward_turn { (&mut fwd, &mut bwd) } else { (&mut bwd, &mut fwd) };
        let state = mine.queue.pop_front().expect("non-empty frontier");
        let word = PositiveWord { n, letters: state.clone() };
        for (mv, next) in neighbors(&word) {
            if mine.parents.contains_key(&next.letters) {
                continue;
            }
            mine.parents.insert(next.letters.clone(), Some((state.clone(), mv)));
            if other.parents.contains_key(&next.letters) {
                let (fwd_side, bwd_side) = if forward_turn { (&fwd, &bwd) } else { (&bwd, &fwd) };
                let mut path = fwd_side.path_from_root(&next.letters);
                let back = bwd_side.path_from_root(&next.letters);
                path.extend(back.iter().rev().map(|m| m.inverse()));
                let mut replay = w1.clone();
                for (step, &mv) in path.iter().enumerate() {
                    replay = apply_relation_move(&replay, mv).map_err(|e| match e {
                        RewriteError::InvalidMove { mv, reason } => {
                            RewriteError::InvalidStep { step, mv, reason }
                        }
                        other => other,
                    })?;
                }
                assert_eq!(
                    replay.letters, w2.letters,
                    "search invariant: reconstructed relation path must replay to the target"
                );
                return Ok(RelationPath::Connected(path));
            }
            nodes += 1;
            if nodes > budget {
                return Ok(RelationPath::NotConnected { exhausted: true });
            }
            mine.queue.push_back(next.letters);
        }
    }
}

/// Translates a relation path into Hurwitz moves, replaying from `start`
/// to keep positions honest: a commutation at `p` becomes the single move
/// `R_p`; a triple application at `p` becomes `R_{p+1}` then `R_p`.
///
/// Applied to a factorization whose factors satisfy the corresponding
/// relations (adjacent commuting elements for `Commute`, the braid relation
/// for triples), the output carries the factorization spelled by `start`
/// to the one spelled by the path's endpoint, component-wise as group
/// elements.
pub fn relation_path_to_hurwitz(
    start: &PositiveWord,
    path: &[RelationMove],
) -> Result<MoveSequence, RewriteError> {
    let mut seq = MoveSequence::new();
    let mut cur = start.clone();
    for (step, &mv) in path.iter().enumerate() {
        match mv.kind {
            RelationKind::Commute => seq.push(HurwitzMove::forward(mv.pos)),
            RelationKind::TripleLR | RelationKind::TripleRL => {
                seq.push(HurwitzMove::forward(mv.pos + 1));
                seq.push(HurwitzMove::forward(mv.pos));
            }
        }
        cur = apply_relation_move(&cur, mv).map_err(|e| match e {
            RewriteError::InvalidMove { mv, reason } => {
                RewriteError::InvalidStep { step, mv, reason }
            }
            other => other,
        })?;
    }
    Ok(seq)
}
