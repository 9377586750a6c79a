//! Frame descent and the end-to-end factorization connector.
//!
//! [`reduce_step`] lowers the surrogate length of a frame by conjugating
//! one half-twist by the other (four candidate directions, each with a
//! fixed Hurwitz move template on the alternating 6-tuple), picking the
//! candidate that strictly decreases the larger surrogate length.
//! [`reduce_to_standard`] iterates this to the standard frame, falling
//! back to a bidirectional path search when no candidate descends.
//! [`connect_factorizations`] chains pattern canonicalization, both
//! reductions, and inverses into one replay-verified certificate.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::action::ActionImage;
use crate::frames::{Frame, FrameError, HalfTwist};
use crate::hurwitz::{
    apply_sequence, find_path, HurwitzError, MoveSequence, NotFoundReason, PathSearch,
};
use crate::rewrite::{
    find_relation_path, relation_path_to_hurwitz, PositiveWord, RelationPath, RewriteError,
};
use crate::word::{StrandCount, WordError};

#[derive(Debug, Error)]
pub enum ReductionError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Frame(#[from] FrameError),
    #[error(transparent)]
    Hurwitz(#[from] HurwitzError),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error("descent stalled: no candidate strictly decreases the surrogate length")]
    DescentStalled,
    #[error("descent exceeded {iters} iterations at frame {frame}")]
    MaxItersExceeded { iters: usize, frame: String },
    #[error("fallback search failed at frame {frame}: {reason}")]
    FallbackFailed { frame: String, reason: String },
    #[error("stage {stage} failed: {detail}")]
    Stage { stage: &'static str, detail: String },
    #[error("certificate parse error: {0}")]
    Parse(String),
}

/// Search and iteration budgets used across the pipeline.
#[derive(Debug, Clone, Copy)]
pub struct Budgets {
    /// Node budget for Hurwitz-orbit path searches.
    pub node_budget: usize,
    /// Maximum descent iterations per frame.
    pub max_iters: usize,
    /// Node budget for positive-word relation-path searches.
    pub relation_budget: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets { node_budget: 100_000, max_iters: 64, relation_budget: 100_000 }
    }
}

/// Which conjugation a reduction step chose.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CandidateKind {
    /// New frame `(h1, h1⁻¹ h2 h1)`.
    ConjugateSecondByFirstInverse,
    /// New frame `(h1 h2 h1⁻¹, h1)`.
    ConjugateSecondByFirst,
    /// New frame `(h2 h1 h2⁻¹, h2)`.
    ConjugateFirstBySecond,
    /// New frame `(h2, h2⁻¹ h1 h2)`.
    ConjugateFirstBySecondInverse,
}

impl fmt::Display for CandidateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            CandidateKind::ConjugateSecondByFirstInverse => "conjugate-h2-by-h1-inverse",
            CandidateKind::ConjugateSecondByFirst => "conjugate-h2-by-h1",
            CandidateKind::ConjugateFirstBySecond => "conjugate-h1-by-h2",
            CandidateKind::ConjugateFirstBySecondInverse => "conjugate-h1-by-h2-inverse",
        };
        write!(f, "{name}")
    }
}

/// One descent step: the chosen conjugation, the Hurwitz moves realizing it
/// on the alternating 6-tuple, and the resulting frame. Constructing a step
/// replay-verifies the moves component-wise.
#[derive(Debug, Clone)]
pub struct ReductionStep {
    pub chosen: CandidateKind,
    pub moves: MoveSequence,
    pub new_frame: Frame,
}

/// Outcome of one descent step.
#[derive(Debug, Clone)]
pub enum StepOutcome {
    /// The frame is already the standard frame.
    AtMinimum,
    Reduced(ReductionStep),
}

/// The cycling template: carries `(A,B,A,B,A,B)` to `(B,A,B,A,B,A)`.
const CYCLE: [(usize, bool); 4] = [(1, true), (0, true), (4, true), (3, true)];
/// Conjugating templates on the alternating 6-tuple.
const CONJ_FORWARD: [(usize, bool); 3] = [(0, true), (2, true), (4, true)];
const CONJ_BACKWARD: [(usize, bool); 3] = [(0, false), (2, false), (4, false)];

fn template(parts: &[&[(usize, bool)]]) -> MoveSequence {
    let mut seq = MoveSequence::new();
    for part in parts {
        for &(index, forward) in *part {
            seq.push(crate::hurwitz::HurwitzMove { index, forward });
        }
    }
    seq
}

struct Candidate {
    kind: CandidateKind,
    frame: Frame,
    moves: MoveSequence,
}

/// The four conjugation candidates with their move templates, in the fixed
/// evaluation order.
fn candidates(f: &Frame) -> Result<Vec<Candidate>, FrameError> {
    let e1 = f.h1().element_word().clone();
    let e2 = f.h2().element_word().clone();
    Ok(vec![
        Candidate {
            kind: CandidateKind::ConjugateSecondByFirstInverse,
            frame: Frame::new(f.h1().clone(), f.h2().conjugated_by(&e1.inverse())?)?,
            moves: template(&[&CYCLE, &CONJ_BACKWARD]),
        },
        Candidate {
            kind: CandidateKind::ConjugateSecondByFirst,
            frame: Frame::new(f.h2().conjugated_by(&e1)?, f.h1().clone())?,
            moves: template(&[&CONJ_FORWARD]),
        },
        Candidate {
            kind: CandidateKind::ConjugateFirstBySecond,
            frame: Frame::new(f.h1().conjugated_by(&e2)?, f.h2().clone())?,
            moves: template(&[&CYCLE, &CONJ_FORWARD]),
        },
        Candidate {
            kind: CandidateKind::ConjugateFirstBySecondInverse,
            frame: Frame::new(f.h2().clone(), f.h1().conjugated_by(&e2.inverse())?)?,
            moves: template(&[&CONJ_BACKWARD]),
        },
    ])
}

/// Memo for surrogate lengths keyed by element canonical key; the same
/// half-twists recur across candidates and steps.
#[derive(Default)]
struct SurrogateCache {
    exact: HashMap<ActionImage, usize>,
}

impl SurrogateCache {
    fn exact(&mut self, h: &HalfTwist) -> usize {
        let key = h.canonical_key();
        if let Some(&s) = self.exact.get(&key) {
            return s;
        }
        let s = h.surrogate_length();
        self.exact.insert(key, s);
        s
    }

    /// Surrogate length if it is at most `cap`, else `None`.
    fn within(&mut self, h: &HalfTwist, cap: usize) -> Option<usize> {
        let key = h.canonical_key();
        if let Some(&s) = self.exact.get(&key) {
            return (s <= cap).then_some(s);
        }
        let found = h.surrogate_length_within(cap);
        if let Some(s) = found {
            self.exact.insert(key, s);
        }
        found
    }
}

fn reduce_step_cached(
    f: &Frame,
    cache: &mut SurrogateCache,
) -> Result<StepOutcome, ReductionError> {
    if f.is_standard() {
        return Ok(StepOutcome::AtMinimum);
    }
    let current = cache.exact(f.h1()).max(cache.exact(f.h2()));
    if current == 0 {
        // both components are standard generators but in the wrong order;
        // no conjugation can go below zero
        return Err(ReductionError::DescentStalled);
    }
    let cap = current - 1;
    let mut best: Option<(usize, String, Candidate)> = None;
    for cand in candidates(f)? {
        let s1 = match cache.within(cand.frame.h1(), cap) {
            Some(s) => s,
            None => continue,
        };
        let s2 = match cache.within(cand.frame.h2(), cap) {
            Some(s) => s,
            None => continue,
        };
        let score = s1.max(s2);
        // tie-break on the serialized canonical key of the new frame, then
        // on the fixed candidate order
        let serial = {
            let (k1, k2) = cand.frame.canonical_keys();
            format!("{}/{}", k1.digest_text(), k2.digest_text())
        };
        let better = match &best {
            None => true,
            Some((best_score, best_serial, _)) => {
                score < *best_score || (score == *best_score && serial < *best_serial)
            }
        };
        if better {
            best = Some((score, serial, cand));
        }
    }
    let Some((_, _, chosen)) = best else {
        return Err(ReductionError::DescentStalled);
    };
    // replay the template on the 6-tuple and require component-wise equality
    let replayed = apply_sequence(&f.factorization(), &chosen.moves)?;
    let target = chosen.frame.factorization();
    if replayed.canonical_key() != target.canonical_key() {
        return Err(ReductionError::Stage {
            stage: "step-replay",
            detail: format!("template {} does not reproduce its frame", chosen.kind),
        });
    }
    Ok(StepOutcome::Reduced(ReductionStep {
        chosen: chosen.kind,
        moves: chosen.moves,
        new_frame: chosen.frame,
    }))
}

/// One descent step on a frame. `AtMinimum` for the standard frame;
/// `Err(DescentStalled)` when no candidate strictly decreases the larger
/// surrogate length.
pub fn reduce_step(f: &Frame) -> Result<StepOutcome, ReductionError> {
    reduce_step_cached(f, &mut SurrogateCache::default())
}

/// Outcome of a full frame reduction.
#[derive(Debug, Clone)]
pub struct FrameReduction {
    /// Moves carrying the frame's alternating 6-tuple to the standard one.
    pub moves: MoveSequence,
    /// Number of successful descent steps.
    pub descent_steps: usize,
    /// True when the descent stalled and the fallback search finished the job.
    pub stalled: bool,
}

/// Iterates [`reduce_step`] until the standard frame, at most `max_iters`
/// times. On a stall, falls back to a bidirectional path search between the
/// current 6-tuple and the standard one within `node_budget`.
pub fn reduce_to_standard(
    f: &Frame,
    max_iters: usize,
    node_budget: usize,
) -> Result<FrameReduction, ReductionError> {
    let mut cache = SurrogateCache::default();
    let mut current = f.clone();
    let mut moves = MoveSequence::new();
    let mut steps = 0usize;
    loop {
        match reduce_step_cached(&current, &mut cache) {
            Ok(StepOutcome::AtMinimum) => {
                return Ok(FrameReduction { moves, descent_steps: steps, stalled: false });
            }
            Ok(StepOutcome::Reduced(step)) => {
                moves.extend(&step.moves);
                current = step.new_frame;
                steps += 1;
                if steps > max_iters {
                    return Err(ReductionError::MaxItersExceeded {
                        iters: max_iters,
                        frame: current.to_string(),
                    });
                }
            }
            Err(ReductionError::DescentStalled) => {
                let target = Frame::standard().factorization();
                match find_path(&current.factorization(), &target, node_budget)? {
                    PathSearch::Found(seq) => {
                        moves.extend(&seq);
                        return Ok(FrameReduction { moves, descent_steps: steps, stalled: true });
                    }
                    PathSearch::NotFound(reason) => {
                        return Err(ReductionError::FallbackFailed {
                            frame: current.to_string(),
                            reason: match reason {
                                NotFoundReason::ProductMismatch => "product mismatch".to_string(),
                                NotFoundReason::OrbitExhausted => {
                                    "orbit exhausted without meeting".to_string()
                                }
                                NotFoundReason::BudgetExhausted => "node budget exhausted".to_string(),
                            },
                        });
                    }
                }
            }
            Err(e) => return Err(e),
        }
    }
}

/// A replay-verified certificate that two factorizations are Hurwitz
/// equivalent: the move sequence plus the SHA-256 digest of the endpoint's
/// canonical key.
#[derive(Debug, Clone)]
pub struct TheoremCertificate {
    pub n: usize,
    pub m: usize,
    pub source: String,
    pub target: String,
    pub seed: Option<u64>,
    pub node_budget: usize,
    pub max_iters: usize,
    pub relation_budget: usize,
    /// How many of the two reductions needed the fallback search.
    pub stalls: usize,
    pub moves: MoveSequence,
    pub digest: String,
}

impl TheoremCertificate {
    /// Line-oriented text form, `key = value` plus a final digest line.
    pub fn to_file_string(&self) -> String {
        let mut out = String::from("certificate\n");
        out.push_str(&format!("n = {}\n", self.n));
        out.push_str(&format!("m = {}\n", self.m));
        out.push_str(&format!("source = {}\n", self.source));
        out.push_str(&format!("target = {}\n", self.target));
        if let Some(seed) = self.seed {
            out.push_str(&format!("seed = {seed}\n"));
        }
        out.push_str(&format!("node_budget = {}\n", self.node_budget));
        out.push_str(&format!("max_iters = {}\n", self.max_iters));
        out.push_str(&format!("relation_budget = {}\n", self.relation_budget));
        out.push_str(&format!("stalls = {}\n", self.stalls));
        out.push_str(&format!("moves = {}\n", self.moves));
        out.push_str(&format!("digest = {}\n", self.digest));
        out
    }

    pub fn parse(text: &str) -> Result<Self, ReductionError> {
        let mut lines = text.lines().map(|l| l.split('#').next().unwrap_or("").trim());
        let header = lines
            .by_ref()
            .find(|l| !l.is_empty())
            .ok_or_else(|| ReductionError::Parse("empty certificate".to_string()))?;
        if header != "certificate" {
            return Err(ReductionError::Parse(format!(
                "expected `certificate` header, got `{header}`"
            )));
        }
        let mut fields: HashMap<String, String> = HashMap::new();
        for line in lines {
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| ReductionError::Parse(format!("expected key = value, got `{line}`")))?;
            fields.insert(key.trim().to_string(), value.trim().to_string());
        }
        let get_usize = |fields: &HashMap<String, String>, key: &str, default: usize| {
            fields
                .get(key)
                .map(|v| {
                    v.parse::<usize>()
                        .map_err(|_| ReductionError::Parse(format!("bad {key} value `{v}`")))
                })
                .unwrap_or(Ok(default))
        };
        let n = get_usize(&fields, "n", 3)?;
        let m = get_usize(&fields, "m", 6)?;
        let moves = MoveSequence::parse(fields.get("moves").map(String::as_str).unwrap_or(""))
            .map_err(|e| ReductionError::Parse(e.to_string()))?;
        let digest = fields
            .get("digest")
            .cloned()
            .ok_or_else(|| ReductionError::Parse("missing digest =".to_string()))?;
        let seed = match fields.get("seed") {
            Some(v) => Some(
                v.parse::<u64>()
                    .map_err(|_| ReductionError::Parse(format!("bad seed value `{v}`")))?,
            ),
            None => None,
        };
        Ok(TheoremCertificate {
            n,
            m,
            source: fields.get("source").cloned().unwrap_or_default(),
            target: fields.get("target").cloned().unwrap_or_default(),
            seed,
            node_budget: get_usize(&fields, "node_budget", Budgets::default().node_budget)?,
            max_iters: get_usize(&fields, "max_iters", Budgets::default().max_iters)?,
            relation_budget: get_usize(
                &fields,
                "relation_budget",
                Budgets::default().relation_budget,
            )?,
            stalls: get_usize(&fields, "stalls", 0)?,
            moves,
            digest,
        })
    }
}

fn pattern_word(pattern: &[usize]) -> Result<PositiveWord, ReductionError> {
    let n = StrandCount::new(3)?;
    Ok(PositiveWord::new(n, pattern.to_vec())?)
}

fn describe(frame: &Frame, pattern: &[usize]) -> String {
    let pat: Vec<String> = pattern.iter().map(|i| i.to_string()).collect();
    format!("frame {} pattern \"{}\"", frame, pat.join(" "))
}

/// Moves carrying a frame's pattern tuple to its alternating `1 2 1 2 1 2`
/// tuple: a relation path between the positive words, translated to
/// Hurwitz moves. Patterns over `{1, 2}` never commute, so the path uses
/// triple applications only, which the frame conditions make valid on the
/// substituted tuple.
fn canonicalize_pattern(
    pattern: &[usize],
    relation_budget: usize,
    stage: &'static str,
) -> Result<MoveSequence, ReductionError> {
    let from = pattern_word(pattern)?;
    let to = pattern_word(&[1, 2, 1, 2, 1, 2])?;
    match find_relation_path(&from, &to, relation_budget)? {
        RelationPath::Connected(path) => Ok(relation_path_to_hurwitz(&from, &path)?),
        RelationPath::NotConnected { exhausted } => Err(ReductionError::Stage {
            stage,
            detail: if exhausted {
                "relation-path budget exhausted".to_string()
            } else {
                "pattern not connected to the alternating pattern".to_string()
            },
        }),
    }
}

/// Builds one replay-verified move sequence carrying the pattern tuple of
/// `frame_a` to the pattern tuple of `frame_b`:
/// canonicalize A, reduce A, then the inverses of B's reduction and
/// canonicalization.
pub fn connect_factorizations(
    frame_a: &Frame,
    pattern_a: &[usize],
    frame_b: &Frame,
    pattern_b: &[usize],
    budgets: &Budgets,
) -> Result<TheoremCertificate, ReductionError> {
    let fac_a = frame_a
        .word_factorization(pattern_a)
        .map_err(|e| ReductionError::Stage { stage: "pattern-a", detail: e.to_string() })?;
    let fac_b = frame_b
        .word_factorization(pattern_b)
        .map_err(|e| ReductionError::Stage { stage: "pattern-b", detail: e.to_string() })?;

    let canon_a = canonicalize_pattern(pattern_a, budgets.relation_budget, "canonicalize-a")?;
    let red_a = reduce_to_standard(frame_a, budgets.max_iters, budgets.node_budget)
        .map_err(|e| ReductionError::Stage { stage: "reduce-a", detail: e.to_string() })?;
    let red_b = reduce_to_standard(frame_b, budgets.max_iters, budgets.node_budget)
        .map_err(|e| ReductionError::Stage { stage: "reduce-b", detail: e.to_string() })?;
    let canon_b = canonicalize_pattern(pattern_b, budgets.relation_budget, "canonicalize-b")?;

    let mut moves = MoveSequence::new();
    moves.extend(&canon_a);
    moves.extend(&red_a.moves);
    moves.extend(&red_b.moves.inverse());
    moves.extend(&canon_b.inverse());

    let final_state = apply_sequence(&fac_a, &moves)
        .map_err(|e| ReductionError::Stage { stage: "replay", detail: e.to_string() })?;
    let final_key = final_state.canonical_key();
    if final_key != fac_b.canonical_key() {
        return Err(ReductionError::Stage {
            stage: "replay",
            detail: "endpoint differs from target factorization".to_string(),
        });
    }

    Ok(TheoremCertificate {
        n: 3,
        m: 6,
        source: describe(frame_a, pattern_a),
        target: describe(frame_b, pattern_b),
        seed: None,
        node_budget: budgets.node_budget,
        max_iters: budgets.max_iters,
        relation_budget: budgets.relation_budget,
        stalls: usize::from(red_a.stalled) + usize::from(red_b.stalled),
        moves,
        digest: final_key.digest(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::BraidWord;

    fn w(text: &str) -> BraidWord {
        BraidWord::parse(StrandCount::new(3).unwrap(), text).unwrap()
    }

    #[test]
    fn standard_frame_is_minimum() {
        match reduce_step(&Frame::standard()).unwrap() {
            StepOutcome::AtMinimum => {}
            other => panic!("expected AtMinimum, got {other:?}"),
        }
    }

    #[test]
    fn single_letter_conjugate_recovers_standard() {
        let f = Frame::standard().conjugated_by(&w("1")).unwrap();
        match reduce_step(&f).unwrap() {
            StepOutcome::Reduced(step) => {
                assert!(step.new_frame.is_standard(), "chose {}", step.chosen);
                let replayed = apply_sequence(&f.factorization(), &step.moves).unwrap();
                assert_eq!(
                    replayed.canonical_key(),
                    step.new_frame.factorization().canonical_key()
                );
            }
            other => panic!("expected a step, got {other:?}"),
        }
    }

    #[test]
    fn reduce_to_standard_on_standard_is_empty() {
        let red = reduce_to_standard(&Frame::standard(), 8, 1000).unwrap();
        assert!(red.moves.is_empty());
        assert_eq!(red.descent_steps, 0);
        assert!(!red.stalled);
    }

    #[test]
    fn reduce_conjugated_frame_end_to_end() {
        let g = w("1 -2 1 1");
        let f = Frame::standard().conjugated_by(&g).unwrap();
        let red = reduce_to_standard(&f, 64, 100_000).unwrap();
        let replayed = apply_sequence(&f.factorization(), &red.moves).unwrap();
        assert_eq!(
            replayed.canonical_key(),
            Frame::standard().factorization().canonical_key()
        );
    }

    #[test]
    fn swapped_generator_frame_falls_back() {
        // (σ2, σ1) is a frame with both surrogate lengths zero; only the
        // fallback search can reach (σ1, σ2)
        let n = StrandCount::new(3).unwrap();
        let f = Frame::new(
            HalfTwist::standard(n, 2).unwrap(),
            HalfTwist::standard(n, 1).unwrap(),
        )
        .unwrap();
        let red = reduce_to_standard(&f, 8, 100_000).unwrap();
        assert!(red.stalled);
        let replayed = apply_sequence(&f.factorization(), &red.moves).unwrap();
        assert_eq!(
            replayed.canonical_key(),
            Frame::standard().factorization().canonical_key()
        );
    }

    #[test]
    fn connect_trivial() {
        let cert = connect_factorizations(
            &Frame::standard(),
            &[1, 2, 1, 2, 1, 2],
            &Frame::standard(),
            &[1, 2, 1, 2, 1, 2],
            &Budgets::default(),
        )
        .unwrap();
        assert!(cert.moves.is_empty());
        assert_eq!(cert.stalls, 0);
    }

    #[test]
    fn connect_patterns_only() {
        let cert = connect_factorizations(
            &Frame::standard(),
            &[2, 1, 2, 1, 2, 1],
            &Frame::standard(),
            &[1, 2, 1, 2, 1, 2],
            &Budgets::default(),
        )
        .unwrap();
        assert!(!cert.moves.is_empty());
        let fac_a = Frame::standard().word_factorization(&[2, 1, 2, 1, 2, 1]).unwrap();
        let fac_b = Frame::standard().factorization();
        let replayed = apply_sequence(&fac_a, &cert.moves).unwrap();
        assert_eq!(replayed.canonical_key(), fac_b.canonical_key());
        assert_eq!(cert.digest, fac_b.canonical_key().digest());
    }

    #[test]
    fn connect_conjugated_frames() {
        let fa = Frame::standard().conjugated_by(&w("2 1 -2")).unwrap();
        let fb = Frame::standard().conjugated_by(&w("-1 -1 2")).unwrap();
        let cert = connect_factorizations(
            &fa,
            &[1, 2, 1, 1, 2, 1],
            &fb,
            &[2, 1, 2, 2, 1, 2],
            &Budgets::default(),
        )
        .unwrap();
        let fac_a = fa.word_factorization(&[1, 2, 1, 1, 2, 1]).unwrap();
        let fac_b = fb.word_factorization(&[2, 1, 2, 2, 1, 2]).unwrap();
        let replayed = apply_sequence(&fac_a, &cert.moves).unwrap();
        assert_eq!(replayed.canonical_key(), fac_b.canonical_key());
    }

    #[test]
    fn connect_rejects_bad_pattern() {
        let err = connect_factorizations(
            &Frame::standard(),
            &[1, 1, 1, 1, 1, 1],
            &Frame::standard(),
            &[1, 2, 1, 2, 1, 2],
            &Budgets::default(),
        )
        .unwrap_err();
        assert!(matches!(err, ReductionError::Stage { stage: "pattern-a", .. }));
    }

    #[test]
    fn certificate_round_trip() {
        let cert = TheoremCertificate {
            n: 3,
            m: 6,
            source: "frame [h1=(conj=\"\", base=1), h2=(conj=\"\", base=2)] pattern \"1 2 1 2 1 2\""
                .to_string(),
            target: "standard".to_string(),
            seed: Some(7),
            node_budget: 1000,
            max_iters: 8,
            relation_budget: 500,
            stalls: 1,
            moves: MoveSequence::parse("R1 r0 R4").unwrap(),
            digest: "abc123".to_string(),
        };
        let text = cert.to_file_string();
        let parsed = TheoremCertificate::parse(&text).unwrap();
        assert_eq!(parsed.moves, cert.moves);
        assert_eq!(parsed.digest, cert.digest);
        assert_eq!(parsed.seed, Some(7));
        assert_eq!(parsed.stalls, 1);
        assert!(TheoremCertificate::parse("not a certificate\n").is_err());
        assert!(TheoremCertificate::parse("certificate\nmoves = R0\n").is_err());
    }
}
