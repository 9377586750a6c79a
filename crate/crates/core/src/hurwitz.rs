//! The Hurwitz action on tuples of braids.
//!
//! The move `R_k` replaces adjacent factors `(t_k, t_{k+1})` by
//! `(t_k t_{k+1} t_k⁻¹, t_k)`; `R_k⁻¹` is its algebraic inverse
//! `(t_{k+1}, t_{k+1}⁻¹ t_k t_{k+1})`. Both preserve the product, so the
//! orbit of a factorization stays inside the factorizations of one group
//! element. Orbit states are keyed by per-factor canonical keys, never by
//! words, so distinct spellings of equal elements collapse to one state.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::action::{canonical_key, ActionImage};
use crate::word::{BraidWord, StrandCount, WordError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HurwitzError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("factorization must have at least one factor")]
    Empty,
    #[error("move index {index} out of range for {m} factors")]
    MoveOutOfRange { index: usize, m: usize },
    #[error("move {step} of sequence out of range: index {index} for {m} factors")]
    SequenceOutOfRange { step: usize, index: usize, m: usize },
    #[error("factorizations have different lengths: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("factorization parse error: {0}")]
    Parse(String),
}

/// An ordered tuple of braid words with its cached product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: StrandCount,
    factors: Vec<BraidWord>,
    product: BraidWord,
}

impl Factorization {
    pub fn new(n: StrandCount, factors: Vec<BraidWord>) -> Result<Self, HurwitzError> {
        if factors.is_empty() {
            return Err(HurwitzError::Empty);
        }
        let mut product = BraidWord::identity(n);
        for f in &factors {
            product = product.compose(f)?;
        }
        Ok(Factorization { n, factors, product })
    }

    pub fn n(&self) -> StrandCount {
        self.n
    }

    pub fn factors(&self) -> &[BraidWord] {
        &self.factors
    }

    /// Number of factors.
    pub fn m(&self) -> usize {
        self.factors.len()
    }

    /// The left-to-right product of the factors, freely reduced.
    pub fn product(&self) -> &BraidWord {
        &self.product
    }

    /// Tuple of per-factor canonical keys; two factorizations have equal
    /// keys iff they are component-wise equal as group elements.
    pub fn canonical_key(&self) -> FactorizationKey {
        FactorizationKey(self.factors.iter().map(canonical_key).collect())
    }

    /// Parses the file form: a header `n=<strands> m=<factors>` followed by
    /// exactly `m` lines, one word per line (a blank line is the identity).
    pub fn parse(text: &str) -> Result<Self, HurwitzError> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| HurwitzError::Parse("empty input".to_string()))?;
        let mut n_value: Option<usize> = None;
        let mut m_value: Option<usize> = None;
        for field in header.split_whitespace() {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| HurwitzError::Parse(format!("bad header field `{field}`")))?;
            let parsed: usize = value
                .parse()
                .map_err(|_| HurwitzError::Parse(format!("bad header value `{field}`")))?;
            match key {
                "n" => n_value = Some(parsed),
                "m" => m_value = Some(parsed),
                _ => return Err(HurwitzError::Parse(format!("unknown header key `{key}`"))),
            }
        }
        let n = StrandCount::new(
            n_value.ok_or_else(|| HurwitzError::Parse("header missing n=".to_string()))?,
        )?;
        let m = m_value.ok_or_else(|| HurwitzError::Parse("header missing m=".to_string()))?;
        let mut factors = Vec::with_capacity(m);
        for i in 0..m {
            let line = lines
                .next()
                .ok_or_else(|| HurwitzError::Parse(format!("missing factor line {}", i + 1)))?;
            factors.push(BraidWord::parse(n, line)?);
        }
        Factorization::new(n, factors)
    }

    /// Inverse of [`Factorization::parse`].
    pub fn to_file_string(&self) -> String {
        let mut out = format!("n={} m={}\n", self.n.get(), self.m());
        for f in &self.factors {
            out.push_str(&f.to_string());
            out.push('\n');
        }
        out
    }
}

/// The key of a factorization: one [`ActionImage`] per factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FactorizationKey(Vec<ActionImage>);

impl FactorizationKey {
    pub fn factor_keys(&self) -> &[ActionImage] {
        &self.0
    }

    /// Deterministic serialized form, factor keys joined by `/`.
    pub fn digest_text(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(|k| k.digest_text()).collect();
        parts.join("/")
    }

    /// Hex SHA-256 of the serialized key; the replay digest in certificates.
    pub fn digest(&self) -> String {
        use sha2::{Digest, Sha256};
        let mut hasher = Sha256::new();
        hasher.update(self.digest_text().as_bytes());
        let out = hasher.finalize();
        let mut hex = String::with_capacity(64);
        for b in out {
            hex.push_str(&format!("{b:02x}"));
        }
        hex
    }
}

/// A single Hurwitz move: index `k` in `0..=m-2`, forward `R_k` or
/// backward `R_k⁻¹`. Serialized `R3` / `r3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HurwitzMove {
    pub index: usize,
    pub forward: bool,
}

impl HurwitzMove {
    pub fn forward(index: usize) -> Self {
        HurwitzMove { index, forward: true }
    }

    pub fn backward(index: usize) -> Self {
        HurwitzMove { index, forward: false }
    }

    pub fn inverse(self) -> Self {
        HurwitzMove { index: self.index, forward: !self.forward }
    }
}

impl fmt::Display for HurwitzMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.forward { 'R' } else { 'r' }, self.index)
    }
}

impl FromStr for HurwitzMove {
    type Err = HurwitzError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let forward = match s.chars().next() {
            Some('R') => true,
            Some('r') => false,
            _ => return Err(HurwitzError::Parse(format!("bad move token `{s}`"))),
        };
        let index: usize = s[1..]
            .parse()
            .map_err(|_| HurwitzError::Parse(format!("bad move token `{s}`")))?;
        Ok(HurwitzMove { index, forward })
    }
}

/// An ordered list of Hurwitz moves, applied left to right.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MoveSequence(pub Vec<HurwitzMove>);

impl MoveSequence {
    pub fn new() -> Self {
        MoveSequence(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn moves(&self) -> &[HurwitzMove] {
        &self.0
    }

    pub fn push(&mut self, mv: HurwitzMove) {
        self.0.push(mv);
    }

    pub fn extend(&mut self, other: &MoveSequence) {
        self.0.extend_from_slice(&other.0);
    }

    /// Reversed order with every direction flipped; replaying the inverse
    /// from the endpoint returns to the start.
    pub fn inverse(&self) -> MoveSequence {
        MoveSequence(self.0.iter().rev().map(|m| m.inverse()).collect())
    }

    /// Parses whitespace-separated move tokens; the empty string is the
    /// empty sequence.
    pub fn parse(text: &str) -> Result<Self, HurwitzError> {
        text.split_whitespace()
            .map(HurwitzMove::from_str)
            .collect::<Result<Vec<_>, _>>()
            .map(MoveSequence)
    }
}

impl fmt::Display for MoveSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for m in &self.0 {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{m}")?;
            first = false;
        }
        Ok(())
    }
}

/// Applies one Hurwitz move. The product is preserved as a group element.
pub fn apply_move(f: &Factorization, mv: HurwitzMove) -> Result<Factorization, HurwitzError> {
    let m = f.m();
    if mv.index + 1 >= m {
        return Err(HurwitzError::MoveOutOfRange { index: mv.index, m });
    }
    let k = mv.index;
    let a = &f.factors[k];
    let b = &f.factors[k + 1];
    let (new_a, new_b) = if mv.forward {
        // (t_k t_{k+1} t_k⁻¹, t_k)
        (b.conjugated_by(a)?, a.clone())
    } else {
        // (t_{k+1}, t_{k+1}⁻¹ t_k t_{k+1})
        (b.clone(), a.conjugated_by(&b.inverse())?)
    };
    let mut factors = f.factors.clone();
    factors[k] = new_a;
    factors[k + 1] = new_b;
    Factorization::new(f.n, factors)
}

/// Applies a move sequence left to right; an out-of-range move is reported
/// with its step number.
pub fn apply_sequence(
    f: &Factorization,
    seq: &MoveSequence,
) -> Result<Factorization, HurwitzError> {
    let mut cur = f.clone();
    for (step, &mv) in seq.moves().iter().enumerate() {
        cur = apply_move(&cur, mv).map_err(|e| match e {
            HurwitzError::MoveOutOfRange { index, m } => {
                HurwitzError::SequenceOutOfRange { step, index, m }
            }
            other => other,
        })?;
    }
    Ok(cur)
}

/// All moves available on an `m`-tuple, in the fixed enumeration order used
/// by every search: index ascending, forward before backward.
fn move_menu(m: usize) -> impl Iterator<Item = HurwitzMove> {
    (0..m.saturating_sub(1)).flat_map(|k| [HurwitzMove::forward(k), HurwitzMove::backward(k)])
}

/// Interns per-factor keys so tuple states hash as small id vectors.
#[derive(Default)]
struct KeyInterner {
    ids: HashMap<ActionImage, u32>,
    word_cache: HashMap<BraidWord, u32>,
}

impl KeyInterner {
    fn factor_id(&mut self, w: &BraidWord) -> u32 {
        if let Some(&id) = self.word_cache.get(w) {
            return id;
        }
        let key = canonical_key(w);
        let next = self.ids.len() as u32;
        let id = *self.ids.entry(key).or_insert(next);
        self.word_cache.insert(w.clone(), id);
        id
    }

    fn tuple_id(&mut self, f: &Factorization) -> Vec<u32> {
        f.factors().iter().map(|w| self.factor_id(w)).collect()
    }
}

/// Result of an orbit enumeration: visited states keyed canonically, a
/// spanning tree for certificate extraction, and whether the node budget
/// ran out before the orbit was fully enumerated.
pub struct OrbitReport {
    size: usize,
    exhausted: bool,
    root: Vec<u32>,
    tree: HashMap<Vec<u32>, Option<(Vec<u32>, HurwitzMove)>>,
    interner: KeyInterner,
}

impl OrbitReport {
    /// Number of distinct states visited.
    pub fn size(&self) -> usize {
        self.size
    }

    /// True when the node budget ran out; false means the whole orbit was
    /// enumerated.
    pub fn exhausted(&self) -> bool {
        self.exhausted
    }

    /// Whether a factorization's state was visited.
    pub fn contains(&mut self, f: &Factorization) -> bool {
        let id = self.interner.tuple_id(f);
        self.tree.contains_key(&id)
    }

    /// Move sequence from the root to a visited factorization.
    pub fn path_to(&mut self, f: &Factorization) -> Option<MoveSequence> {
        let mut cur = self.interner.tuple_id(f);
        if !self.tree.contains_key(&cur) {
            return None;
        }
        let mut moves = Vec::new();
        while cur != self.root {
            let (parent, mv) = self.tree.get(&cur)?.clone()?;
            moves.push(mv);
            cur = parent;
        }
        moves.reverse();
        Some(MoveSequence(moves))
    }
}

/// Breadth-first enumeration of the Hurwitz orbit, up to `node_budget`
/// distinct states.
pub fn orbit_bfs(f: &Factorization, node_budget: usize) -> OrbitReport {
    let mut interner = KeyInterner::default();
    let root = interner.tuple_id(f);
    let mut tree: HashMap<Vec<u32>, Option<(Vec<u32>, HurwitzMove)>> = HashMap::new();
    tree.insert(root.clone(), None);
    let mut queue: VecDeque<(Factorization, Vec<u32>)> = VecDeque::new();
    queue.push_back((f.clone(), root.clone()));
    let mut exhausted = false;
    'outer: while let Some((state, state_id)) = queue.pop_front() {
        for mv in move_menu(state.m()) {
            let next = apply_move(&state, mv).expect("move index in range");
            let next_id = interner.tuple_id(&next);
            if tree.contains_key(&next_id) {
                continue;
            }
            if tree.len() >= node_budget {
                exhausted = true;
                break 'outer;
            }
            tree.insert(next_id.clone(), Some((state_id.clone(), mv)));
            queue.push_back((next, next_id));
        }
    }
    OrbitReport { size: tree.len(), exhausted, root, tree, interner }
}

/// Why [`find_path`] returned no sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotFoundReason {
    /// The products differ as group elements; no search was run.
    ProductMismatch,
    /// A full component was enumerated without meeting: the factorizations
    /// are provably not Hurwitz equivalent.
    OrbitExhausted,
    /// The node budget ran out; inconclusive.
    BudgetExhausted,
}

/// Outcome of a path search between factorizations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathSearch {
    Found(MoveSequence),
    NotFound(NotFoundReason),
}

struct SearchSide {
    parents: HashMap<Vec<u32>, Option<(Vec<u32>, HurwitzMove)>>,
    queue: VecDeque<(Factorization, Vec<u32>)>,
}

impl SearchSide {
    fn new(root: &Factorization, root_id: Vec<u32>) -> Self {
        let mut parents = HashMap::new();
        parents.insert(root_id.clone(), None);
        let mut queue = VecDeque::new();
        queue.push_back((root.clone(), root_id));
        SearchSide { parents, queue }
    }

    /// Moves from this side's root to the given visited state.
    fn path_from_root(&self, id: &[u32]) -> Vec<HurwitzMove> {
        let mut moves = Vec::new();
        let mut cur = id.to_vec();
        while let Some(Some((parent, mv))) = self.parents.get(&cur) {
            moves.push(*mv);
            cur = parent.clone();
        }
        moves.reverse();
        moves
    }
}

/// Bidirectional breadth-first search for a move sequence carrying `f1` to a
/// factorization component-wise equal to `f2`.
///
/// Tuple lengths must agree (hard error); differing products short-circuit
/// to `NotFound(ProductMismatch)`. `NotFound(OrbitExhausted)` is a proof of
/// non-equivalence. The returned sequence is replay-verified before return.
pub fn find_path(
    f1: &Factorization,
    f2: &Factorization,
    node_budget: usize,
) -> Result<PathSearch, HurwitzError> {
    if f1.n() != f2.n() {
        return Err(WordError::StrandMismatch(f1.n().get(), f2.n().get()).into());
    }
    if f1.m() != f2.m() {
        return Err(HurwitzError::LengthMismatch(f1.m(), f2.m()));
    }
    if !crate::action::braids_equal(f1.product(), f2.product())? {
        return Ok(PathSearch::NotFound(NotFoundReason::ProductMismatch));
    }

    let mut interner = KeyInterner::default();
    let start = interner.tuple_id(f1);
    let goal = interner.tuple_id(f2);
    if start == goal {
        return Ok(PathSearch::Found(MoveSequence::new()));
    }
    let mut fwd = SearchSide::new(f1, start);
    let mut bwd = SearchSide::new(f2, goal);
    let mut nodes = 2usize;

    loop {
        if fwd.queue.is_empty() || bwd.queue.is_empty() {
            // a full component was enumerated without meeting the other side
            return Ok(PathSearch::NotFound(NotFoundReason::OrbitExhausted));
        }
        // expand the side with the smaller frontier; ties go to the forward
        // side, keeping the traversal deterministic
        let forward_turn = fwd.queue.len() <= bwd.queue.len();
        let (mine, other) = if forward_turn { (&mut fwd, &mut bwd) } else { (&mut bwd, &mut fwd) };
        let (state, state_id) = mine.queue.pop_front().expect("non-empty frontier");
        for mv in move_menu(state.m()) {
            let next = apply_move(&state, mv).expect("move index in range");
            let next_id = interner.tuple_id(&next);
            if mine.parents.contains_key(&next_id) {
                continue;
            }
            mine.parents.insert(next_id.clone(), Some((state_id.clone(), mv)));
            if other.parents.contains_key(&next_id) {
                let (fwd_side, bwd_side) = if forward_turn { (&fwd, &bwd) } else { (&bwd, &fwd) };
                let mut moves = fwd_side.path_from_root(&next_id);
                let back = MoveSequence(bwd_side.path_from_root(&next_id));
                moves.extend(back.inverse().0);
                let seq = MoveSequence(moves);
                let replayed = apply_sequence(f1, &seq)?;
                assert_eq!(
                    replayed.canonical_key(),
                    f2.canonical_key(),
                    "search invariant: reconstructed path must replay to the target"
                );
                return Ok(PathSearch::Found(seq));
            }
            nodes += 1;
            if nodes > node_budget {
                return Ok(PathSearch::NotFound(NotFoundReason::BudgetExhausted));
            }
            mine.queue.push_back((next, next_id));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::braids_equal;

    fn n3() -> StrandCount {
        StrandCount::new(3).unwrap()
    }

    fn fac(words: &[&str]) -> Factorization {
        let factors = words.iter().map(|t| BraidWord::parse(n3(), t).unwrap()).collect();
        Factorization::new(n3(), factors).unwrap()
    }

    #[test]
    fn empty_factorization_rejected() {
        assert!(matches!(Factorization::new(n3(), vec![]), Err(HurwitzError::Empty)));
    }

    #[test]
    fn forward_move_on_pair() {
        let f = fac(&["1", "2"]);
        let g = apply_move(&f, HurwitzMove::forward(0)).unwrap();
        assert_eq!(g.factors()[0], BraidWord::parse(n3(), "1 2 -1").unwrap());
        assert_eq!(g.factors()[1], BraidWord::parse(n3(), "1").unwrap());
        assert!(braids_equal(g.product(), f.product()).unwrap());
    }

    #[test]
    fn move_round_trip_is_exact() {
        let f = fac(&["1 2", "-1 2 2"]);
        let g = apply_move(&f, HurwitzMove::forward(0)).unwrap();
        let back = apply_move(&g, HurwitzMove::backward(0)).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn move_out_of_range() {
        let f = fac(&["1", "2"]);
        assert!(matches!(
            apply_move(&f, HurwitzMove::forward(1)),
            Err(HurwitzError::MoveOutOfRange { index: 1, m: 2 })
        ));
        let single = fac(&["1"]);
        assert!(apply_move(&single, HurwitzMove::forward(0)).is_err());
    }

    #[test]
    fn sequence_empty_and_inverse_pair() {
        let f = fac(&["1", "2", "1"]);
        assert_eq!(apply_sequence(&f, &MoveSequence::new()).unwrap(), f);
        let seq = MoveSequence::parse("R0 r0").unwrap();
        assert_eq!(apply_sequence(&f, &seq).unwrap(), f);
    }

    #[test]
    fn sequence_error_names_step() {
        let f = fac(&["1", "2"]);
        let seq = MoveSequence::parse("R0 R1").unwrap();
        assert!(matches!(
            apply_sequence(&f, &seq),
            Err(HurwitzError::SequenceOutOfRange { step: 1, index: 1, m: 2 })
        ));
    }

    #[test]
    fn commuting_factors_swap_in_one_move() {
        let n4 = StrandCount::new(4).unwrap();
        let f = Factorization::new(
            n4,
            vec![BraidWord::parse(n4, "1").unwrap(), BraidWord::parse(n4, "3").unwrap()],
        )
        .unwrap();
        let g = apply_move(&f, HurwitzMove::forward(0)).unwrap();
        let want = Factorization::new(
            n4,
            vec![BraidWord::parse(n4, "3").unwrap(), BraidWord::parse(n4, "1").unwrap()],
        )
        .unwrap();
        assert_eq!(g.canonical_key(), want.canonical_key());
    }

    #[test]
    fn key_ignores_spelling() {
        assert_eq!(fac(&["1 2 -2", "2"]).canonical_key(), fac(&["1", "2"]).canonical_key());
        assert_ne!(fac(&["1", "2"]).canonical_key(), fac(&["2", "1"]).canonical_key());
    }

    #[test]
    fn move_sequence_round_trip_text() {
        let seq = MoveSequence::parse("R0 r3 R12").unwrap();
        assert_eq!(seq.to_string(), "R0 r3 R12");
        assert_eq!(MoveSequence::parse("").unwrap(), MoveSequence::new());
        assert!(MoveSequence::parse("Rx").is_err());
        assert!(MoveSequence::parse("7").is_err());
    }

    #[test]
    fn singleton_orbit() {
        let f = fac(&["1 2"]);
        let report = orbit_bfs(&f, 100);
        assert_eq!(report.size(), 1);
        assert!(!report.exhausted());
    }

    #[test]
    fn self_conjugation_orbit_is_fixed() {
        // brute-force baseline: orbit of ("1","1") has exactly one state
        let f = fac(&["1", "1"]);
        let report = orbit_bfs(&f, 1000);
        assert_eq!(report.size(), 1);
        assert!(!report.exhausted());
    }

    #[test]
    fn pair_orbit_exhaustive() {
        // brute-force baseline: orbit of ("1","2") has exactly three states
        let f = fac(&["1", "2"]);
        let mut report = orbit_bfs(&f, 1000);
        assert_eq!(report.size(), 3);
        assert!(!report.exhausted());
        let g = fac(&["1 2 -1", "1"]);
        assert!(report.contains(&g));
        let path = report.path_to(&g).unwrap();
        let replayed = apply_sequence(&f, &path).unwrap();
        assert_eq!(replayed.canonical_key(), g.canonical_key());
    }

    #[test]
    fn budget_of_one_reports_exhausted() {
        let f = fac(&["1", "2"]);
        let report = orbit_bfs(&f, 1);
        assert_eq!(report.size(), 1);
        assert!(report.exhausted());
    }

    #[test]
    fn find_path_trivial_and_triple() {
        let f = fac(&["1", "2", "1"]);
        match find_path(&f, &f, 1000).unwrap() {
            PathSearch::Found(seq) => assert!(seq.is_empty()),
            other => panic!("expected empty path, got {other:?}"),
        }
        let g = fac(&["2", "1", "2"]);
        match find_path(&f, &g, 1000).unwrap() {
            PathSearch::Found(seq) => {
                assert_eq!(seq.len(), 2);
                let replayed = apply_sequence(&f, &seq).unwrap();
                assert_eq!(replayed.canonical_key(), g.canonical_key());
            }
            other => panic!("expected path, got {other:?}"),
        }
    }

    #[test]
    fn find_path_product_mismatch() {
        let f = fac(&["1", "2"]);
        let g = fac(&["2", "1"]);
        assert_eq!(
            find_path(&f, &g, 1000).unwrap(),
            PathSearch::NotFound(NotFoundReason::ProductMismatch)
        );
    }

    #[test]
    fn find_path_proven_non_equivalent() {
        // equal products, equal length, but disjoint finite orbits: the
        // factors of ("1 2", "") are never conjugates of a generator
        let f = fac(&["1", "2"]);
        let g = fac(&["1 2", ""]);
        assert_eq!(
            find_path(&f, &g, 100_000).unwrap(),
            PathSearch::NotFound(NotFoundReason::OrbitExhausted)
        );
    }

    #[test]
    fn find_path_length_mismatch_is_error() {
        let f = fac(&["1", "2"]);
        let g = fac(&["1", "2", ""]);
        assert!(matches!(find_path(&f, &g, 100), Err(HurwitzError::LengthMismatch(2, 3))));
    }

    #[test]
    fn factorization_file_round_trip() {
        let f = fac(&["1 2 -1", "", "2"]);
        let text = f.to_file_string();
        let parsed = Factorization::parse(&text).unwrap();
        assert_eq!(parsed, f);
        assert!(Factorization::parse("m=2\n1\n2\n").is_err());
        assert!(Factorization::parse("n=3 m=2\n1\n").is_err());
        assert!(Factorization::parse("n=3 m=1\n0\n").is_err());
    }
}
