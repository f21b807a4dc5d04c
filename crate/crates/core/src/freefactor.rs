//! Decides whether the subgroup generated by a boundary tuple is a free
//! factor of the kernel it lives in, and produces replayable certificates.
//!
//! Positive route: drop `m` Schreier generators from the canonical basis and
//! check with a Stallings fold that the tuple plus the rest is again a basis
//! (a generating set of size equal to the rank is a basis, free groups being
//! Hopfian). Candidates are pruned by a unimodularity test on the dropped
//! columns of the exponent matrix and ordered so that generators occurring
//! exactly once in some tuple word come first.
//!
//! Negative route: walk the Nielsen ball of the pair; any member that is a
//! proper power, or non-primitive in the free group on its support, blocks
//! every basis extension.
//!
//! Neither route is complete, so `Unknown` is a possible outcome; retries
//! under ambient substitutions `a -> b^s a` and Nielsen pair replacements
//! cover the cases where the canonical transversal is an awkward fit.

use crate::coset::{CosetError, SchreierSystem};
use crate::fold::SubgroupGraph;
use crate::intmat::IntMatrix;
use crate::nielsen::{is_primitive_bounded, is_proper_power, nielsen_ball, NielsenMove};
use crate::word::{Substitution, Word, WordError};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FfError {
    #[error("free-factor analysis needs a finite quotient")]
    InfiniteQuotient,
    #[error(transparent)]
    Coset(#[from] CosetError),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// Search budgets; all defaults cover the bundled regression cases with
/// ample margin.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Budget {
    /// maximum Nielsen-ball radius for the negative search
    pub nielsen_radius: usize,
    /// maximum |s| for ambient substitutions a -> b^s a
    pub subst_max: i64,
    /// maximum number of dropped-generator candidates per positive search
    pub candidate_cap: u64,
    /// maximum support size for the primitivity obstruction; supports above
    /// 3 are only tested in the last-resort deep pass on a radius-1 ball
    pub support_bound: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            nielsen_radius: 3,
            subst_max: 2,
            candidate_cap: 1_000_000,
            support_bound: 8,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FfOutcome {
    FreeFactor,
    NotFreeFactor,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "preprocess")]
pub enum Preprocessing {
    /// the ambient basis change a -> b^s a applied before rebuilding
    AmbientSubstitution { exponent: i64 },
    /// the tuple was replaced by a Nielsen transform before the search
    PairMoves { moves: Vec<NielsenMove> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Witness {
    /// dropping these Schreier generators and adjoining the tuple passes
    /// `generates_whole`
    BasisExtension { removed: Vec<String> },
    /// the quotient is trivial, which forces a fibered contradiction
    UnitDeterminant,
    /// a Nielsen transform of the pair contains a non-primitive member
    NonPrimitiveElement {
        moves: Vec<NielsenMove>,
        element_index: usize,
        element: String,
        support: Vec<String>,
        proper_power: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FfVerdict {
    pub outcome: FfOutcome,
    pub witness: Option<Witness>,
    pub preprocessing: Vec<Preprocessing>,
    pub candidates_tried: u64,
    pub ball_pairs_checked: u64,
}

impl FfVerdict {
    fn unknown(candidates_tried: u64, ball_pairs_checked: u64) -> Self {
        FfVerdict {
            outcome: FfOutcome::Unknown,
            witness: None,
            preprocessing: Vec::new(),
            candidates_tried,
            ball_pairs_checked,
        }
    }
}

/// Positive certificate: indices of removed Schreier generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveCert {
    pub removed: Vec<usize>,
}

/// Negative certificate: element of a ball pair failing primitivity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NegativeCert {
    pub moves: Vec<NielsenMove>,
    pub element_index: usize,
    pub element: Word,
    pub proper_power: bool,
}

fn exponent_rows(gens: &[Word]) -> Vec<Vec<i64>> {
    gens.iter().map(Word::abelianize).collect()
}

fn minor_is_unimodular(rows: &[Vec<i64>], cols: &[usize]) -> bool {
    let m = IntMatrix::from_rows(
        rows.iter()
            .map(|r| cols.iter().map(|&c| BigInt::from(r[c])).collect())
            .collect(),
    )
    .expect("rectangular minor");
    m.determinant().map(|d| d.abs().is_one()).unwrap_or(false)
}

/// Iterates k-subsets of `0..n` in lexicographic order of positions.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            idx: (0..k).collect(),
            done: k > n || k == 0,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let cur = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] + 1 <= self.n - (k - i) {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(cur)
    }
}

/// Searches for `m` Schreier generators whose removal extends the rewritten
/// tuple to a free basis of the kernel. `gens` must already be rewritten
/// into the system's Schreier alphabet. Returns the removed letter indices
/// of the first certificate in the fixed search order.
pub fn certify_free_factor(
    sys: &SchreierSystem,
    gens: &[Word],
    budget: &Budget,
    candidates_tried: &mut u64,
) -> Option<PositiveCert> {
    let schreier = sys.schreier_alphabet();
    for g in gens {
        assert_eq!(g.alphabet(), schreier, "tuple must be rewritten first");
    }
    let rank = sys.rank();
    let m = gens.len();
    if m > rank || gens.iter().any(Word::is_identity) {
        return None;
    }
    let rows = exponent_rows(gens);

    // candidate pool: only generators occurring in the tuple can be dropped
    // (a zero column kills the unimodularity condition)
    let mut pool: Vec<usize> = Vec::new();
    {
        let mut seen = vec![false; rank];
        for g in gens {
            for &s in &g.support() {
                seen[s] = true;
            }
        }
        pool.extend((0..rank).filter(|&i| seen[i]));
    }
    if pool.len() < m {
        return None;
    }
    // generators occurring exactly once in some tuple word come first
    let occ: Vec<Vec<usize>> = gens.iter().map(Word::occurrence_counts).collect();
    pool.sort_by_key(|&g| {
        let once = occ.iter().any(|counts| counts[g] == 1);
        (if once { 0 } else { 1 }, g)
    });

    let single_letters: Vec<Word> = (0..rank).map(|g| Word::generator(schreier, g)).collect();
    for combo in Combinations::new(pool.len(), m) {
        *candidates_tried += 1;
        if *candidates_tried > budget.candidate_cap {
            return None;
        }
        let dropped: Vec<usize> = combo.iter().map(|&i| pool[i]).collect();
        if !minor_is_unimodular(&rows, &dropped) {
            continue;
        }
        let mut set: Vec<Word> = gens.to_vec();
        set.extend(
            (0..rank)
                .filter(|g| !dropped.contains(g))
                .map(|g| single_letters[g].clone()),
        );
        if SubgroupGraph::from_generators(schreier, &set).generates_whole() {
            let mut removed = dropped;
            removed.sort_unstable();
            return Some(PositiveCert { removed });
        }
    }
    None
}

/// Searches the Nielsen ball of a rewritten pair for an element obstructing
/// every basis extension: a proper power, or a word that is non-primitive in
/// the free group on its support.
pub fn certify_not_free_factor(
    sys: &SchreierSystem,
    pair: &[Word; 2],
    budget: &Budget,
    ball_pairs_checked: &mut u64,
) -> Option<NegativeCert> {
    certify_not_free_factor_radius(sys, pair, budget.nielsen_radius, budget, ball_pairs_checked)
}

fn certify_not_free_factor_radius(
    sys: &SchreierSystem,
    pair: &[Word; 2],
    radius: usize,
    budget: &Budget,
    ball_pairs_checked: &mut u64,
) -> Option<NegativeCert> {
    let schreier = sys.schreier_alphabet();
    for g in pair {
        assert_eq!(g.alphabet(), schreier, "pair must be rewritten first");
    }
    let bound = budget.support_bound.min(3);
    for t in nielsen_ball(pair, radius) {
        *ball_pairs_checked += 1;
        for (element_index, w) in t.pair.iter().enumerate() {
            if w.is_identity() {
                continue;
            }
            if is_proper_power(w) {
                return Some(NegativeCert {
                    moves: t.moves.clone(),
                    element_index,
                    element: w.clone(),
                    proper_power: true,
                });
            }
            if let Ok(false) = is_primitive_bounded(w, bound) {
                return Some(NegativeCert {
                    moves: t.moves.clone(),
                    element_index,
                    element: w.clone(),
                    proper_power: false,
                });
            }
        }
    }
    None
}

/// Last-resort negative pass: primitivity at supports 4..=bound is costly
/// (the Whitehead family grows like 4^support), so it only runs on the
/// radius-1 ball and only after every cheaper stage has failed.
fn certify_not_free_factor_deep(
    pair: &[Word; 2],
    budget: &Budget,
    ball_pairs_checked: &mut u64,
) -> Option<NegativeCert> {
    if budget.support_bound <= 3 {
        return None;
    }
    for t in nielsen_ball(pair, budget.nielsen_radius.min(1)) {
        *ball_pairs_checked += 1;
        for (element_index, w) in t.pair.iter().enumerate() {
            if w.support().len() <= 3 {
                continue; // already covered by the ball pass
            }
            if let Ok(false) = is_primitive_bounded(w, budget.support_bound) {
                return Some(NegativeCert {
                    moves: t.moves.clone(),
                    element_index,
                    element: w.clone(),
                    proper_power: false,
                });
            }
        }
    }
    None
}

struct Context {
    preprocessing: Vec<Preprocessing>,
    sys: SchreierSystem,
    rewritten: Vec<Word>,
}

impl Context {
    fn build(gens: &[Word], preprocessing: Vec<Preprocessing>) -> Result<Self, FfError> {
        let ambient = gens[0].alphabet().clone();
        let stack = IntMatrix::from_rows(
            gens.iter()
                .map(|g| g.abelianize().iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
        .expect("exponent rows are rectangular");
        let sys = match SchreierSystem::build(&ambient, &stack) {
            Ok(sys) => sys,
            Err(CosetError::InfiniteQuotient) => return Err(FfError::InfiniteQuotient),
            Err(e) => return Err(FfError::Coset(e)),
        };
        let rewritten: Vec<Word> = gens
            .iter()
            .map(|g| sys.rewrite(g))
            .collect::<Result<_, _>>()?;
        Ok(Context { preprocessing, sys, rewritten })
    }

    fn pair(&self) -> Option<[Word; 2]> {
        (self.rewritten.len() == 2).then(|| [self.rewritten[0].clone(), self.rewritten[1].clone()])
    }
}

struct Attempt<'a> {
    budget: &'a Budget,
    candidates: u64,
    ball_pairs: u64,
}

impl<'a> Attempt<'a> {
    /// Cheap stages: radius-0 precheck, canonical positive search, the full
    /// small-support negative ball, Nielsen replacements of the pair.
    fn fast(&mut self, ctx: &Context) -> Option<FfVerdict> {
        let sys = &ctx.sys;
        let pair = ctx.pair();

        if let Some(p) = &pair {
            if let Some(neg) =
                certify_not_free_factor_radius(sys, p, 0, self.budget, &mut self.ball_pairs)
            {
                return Some(self.negative(sys, neg, &ctx.preprocessing));
            }
        } else {
            let bound = self.budget.support_bound.min(3);
            for (i, w) in ctx.rewritten.iter().enumerate() {
                if w.is_identity() {
                    continue;
                }
                let power = is_proper_power(w);
                if power || is_primitive_bounded(w, bound) == Ok(false) {
                    let neg = NegativeCert {
                        moves: Vec::new(),
                        element_index: i,
                        element: w.clone(),
                        proper_power: power,
                    };
                    return Some(self.negative(sys, neg, &ctx.preprocessing));
                }
            }
        }

        if let Some(pos) = certify_free_factor(sys, &ctx.rewritten, self.budget, &mut self.candidates)
        {
            return Some(self.positive(sys, pos, ctx.preprocessing.clone()));
        }

        if let Some(p) = &pair {
            if let Some(neg) = certify_not_free_factor(sys, p, self.budget, &mut self.ball_pairs) {
                return Some(self.negative(sys, neg, &ctx.preprocessing));
            }
            // positive retries over Nielsen replacements of the pair
            for t in nielsen_ball(p, self.budget.nielsen_radius.min(1)) {
                if t.moves.is_empty() || t.pair.iter().any(Word::is_identity) {
                    continue;
                }
                if let Some(pos) =
                    certify_free_factor(sys, &t.pair, self.budget, &mut self.candidates)
                {
                    let mut pre = ctx.preprocessing.clone();
                    pre.push(Preprocessing::PairMoves { moves: t.moves });
                    return Some(self.positive(sys, pos, pre));
                }
            }
        }
        None
    }

    /// Deep stage: large-support primitivity on the radius-1 ball.
    fn deep(&mut self, ctx: &Context) -> Option<FfVerdict> {
        if let Some(p) = ctx.pair() {
            if let Some(neg) = certify_not_free_factor_deep(&p, self.budget, &mut self.ball_pairs)
            {
                return Some(self.negative(&ctx.sys, neg, &ctx.preprocessing));
            }
        } else if self.budget.support_bound > 3 {
            for (i, w) in ctx.rewritten.iter().enumerate() {
                if w.support().len() <= 3 {
                    continue;
                }
                if let Ok(false) = is_primitive_bounded(w, self.budget.support_bound) {
                    let neg = NegativeCert {
                        moves: Vec::new(),
                        element_index: i,
                        element: w.clone(),
                        proper_power: false,
                    };
                    return Some(self.negative(&ctx.sys, neg, &ctx.preprocessing));
                }
            }
        }
        None
    }

    fn positive(
        &self,
        sys: &SchreierSystem,
        cert: PositiveCert,
        preprocessing: Vec<Preprocessing>,
    ) -> FfVerdict {
        let removed = cert
            .removed
            .iter()
            .map(|&i| sys.schreier_alphabet().name(i).to_string())
            .collect();
        FfVerdict {
            outcome: FfOutcome::FreeFactor,
            witness: Some(Witness::BasisExtension { removed }),
            preprocessing,
            candidates_tried: self.candidates,
            ball_pairs_checked: self.ball_pairs,
        }
    }

    fn negative(
        &self,
        sys: &SchreierSystem,
        cert: NegativeCert,
        preprocessing: &[Preprocessing],
    ) -> FfVerdict {
        let support = cert
            .element
            .support()
            .into_iter()
            .map(|g| sys.schreier_alphabet().name(g).to_string())
            .collect();
        FfVerdict {
            outcome: FfOutcome::NotFreeFactor,
            witness: Some(Witness::NonPrimitiveElement {
                moves: cert.moves,
                element_index: cert.element_index,
                element: cert.element.to_string(),
                support,
                proper_power: cert.proper_power,
            }),
            preprocessing: preprocessing.to_vec(),
            candidates_tried: self.candidates,
            ball_pairs_checked: self.ball_pairs,
        }
    }
}

/// Full decision ladder for an ambient generating tuple of the boundary
/// subgroup. Round one runs the cheap stages on the canonical system and on
/// every ambient substitution `a -> b^s a` (rank-two ambients only); round
/// two revisits the same systems with the expensive large-support
/// obstruction. Deterministic given the budget.
pub fn decide(gens: &[Word], budget: &Budget) -> Result<FfVerdict, FfError> {
    assert!(!gens.is_empty());
    let ambient = gens[0].alphabet().clone();
    let mut attempt = Attempt { budget, candidates: 0, ball_pairs: 0 };

    let mut contexts = vec![Context::build(gens, Vec::new())?];
    if ambient.rank() == 2 {
        for s in [1i64, -1, 2, -2] {
            if s.abs() > budget.subst_max {
                continue;
            }
            // a -> b^s a, b -> b
            let b = Word::generator(&ambient, 1);
            let image_a = b.pow(s).concat(&Word::generator(&ambient, 0)).unwrap();
            let sub = Substitution::total(&ambient, &ambient, vec![image_a, b]);
            let mapped: Vec<Word> = gens
                .iter()
                .map(|g| g.substitute(&sub))
                .collect::<Result<_, _>>()?;
            contexts.push(Context::build(
                &mapped,
                vec![Preprocessing::AmbientSubstitution { exponent: s }],
            )?);
        }
    }

    for ctx in &contexts {
        if let Some(mut v) = attempt.fast(ctx) {
            v.candidates_tried = attempt.candidates;
            v.ball_pairs_checked = attempt.ball_pairs;
            return Ok(v);
        }
    }
    for ctx in &contexts {
        if let Some(mut v) = attempt.deep(ctx) {
            v.candidates_tried = attempt.candidates;
            v.ball_pairs_checked = attempt.ball_pairs;
            return Ok(v);
        }
    }
    Ok(FfVerdict::unknown(attempt.candidates, attempt.ball_pairs))
}

/// Replays a positive witness: the tuple plus the kept Schreier generators
/// must again generate the whole kernel. Used by tests and the verifier.
pub fn replay_basis_extension(sys: &SchreierSystem, gens: &[Word], removed: &[String]) -> bool {
    let schreier = sys.schreier_alphabet();
    let removed_idx: Vec<usize> = removed
        .iter()
        .filter_map(|n| schreier.index_of(n))
        .collect();
    if removed_idx.len() != removed.len() || removed_idx.len() != gens.len() {
        return false;
    }
    let mut set: Vec<Word> = gens.to_vec();
    set.extend(
        (0..sys.rank())
            .filter(|g| !removed_idx.contains(g))
            .map(|g| Word::generator(schreier, g)),
    );
    set.len() == sys.rank() && SubgroupGraph::from_generators(schreier, &set).generates_whole()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::PretzelKnot;

    fn boundary(knot: &PretzelKnot) -> (Vec<Word>, Vec<Word>) {
        let gens = knot.boundary_generators().unwrap();
        (gens.h, gens.k)
    }

    fn decide_side(gens: &[Word]) -> FfVerdict {
        decide(gens, &Budget::default()).unwrap()
    }

    fn system_for(gens: &[Word]) -> SchreierSystem {
        let stack = IntMatrix::from_rows(
            gens.iter()
                .map(|g| g.abelianize().iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
        .unwrap();
        SchreierSystem::build(gens[0].alphabet(), &stack).unwrap()
    }

    #[test]
    fn positive_with_known_witness() {
        // P(-5,7,7), H side: dropping {x2, x4} extends the pair to a basis.
        let knot = PretzelKnot::parse("P(-5,7,7)").unwrap();
        let (h, _) = boundary(&knot);
        let verdict = decide_side(&h);
        assert_eq!(verdict.outcome, FfOutcome::FreeFactor);

        let sys = system_for(&h);
        let rewritten: Vec<Word> = h.iter().map(|g| sys.rewrite(g).unwrap()).collect();
        // the found witness replays
        let Some(Witness::BasisExtension { removed }) = &verdict.witness else {
            panic!("expected a basis extension witness");
        };
        assert!(verdict.preprocessing.is_empty());
        assert!(replay_basis_extension(&sys, &rewritten, removed));
        // the published witness {x2, x4} also replays
        assert!(replay_basis_extension(
            &sys,
            &rewritten,
            &["x2".into(), "x4".into()]
        ));
    }

    #[test]
    fn positive_both_sides_small_case() {
        let knot = PretzelKnot::parse("P(-5,7,9)").unwrap();
        let (h, k) = boundary(&knot);
        assert_eq!(decide_side(&h).outcome, FfOutcome::FreeFactor);
        assert_eq!(decide_side(&k).outcome, FfOutcome::FreeFactor);
    }

    #[test]
    fn positive_k_side_index_two() {
        // P(-3,3,5): both sides extend; the K side is the classic index-2 rose.
        let knot = PretzelKnot::parse("P(-3,3,5)").unwrap();
        let (h, k) = boundary(&knot);
        assert_eq!(decide_side(&h).outcome, FfOutcome::FreeFactor);
        let verdict = decide_side(&k);
        assert_eq!(verdict.outcome, FfOutcome::FreeFactor);
    }

    #[test]
    fn negative_direct_obstruction() {
        // P(-3,5,11): the second boundary word itself is non-primitive.
        let knot = PretzelKnot::parse("P(-3,5,11)").unwrap();
        let (h, _) = boundary(&knot);
        let verdict = decide_side(&h);
        assert_eq!(verdict.outcome, FfOutcome::NotFreeFactor);
        let Some(Witness::NonPrimitiveElement { support, .. }) = &verdict.witness else {
            panic!("expected an element witness");
        };
        assert!(support.len() <= 3);
    }

    #[test]
    fn negative_needs_ball_move() {
        // P(-5,7,25): beta alpha collapses to x4^3 x0^-2.
        let knot = PretzelKnot::parse("P(-5,7,25)").unwrap();
        let (h, _) = boundary(&knot);
        let sys = system_for(&h);
        let pair = [
            sys.rewrite(&h[0]).unwrap(),
            sys.rewrite(&h[1]).unwrap(),
        ];
        let prod = pair[1].concat(&pair[0]).unwrap();
        assert_eq!(prod.to_string(), "x4^3 x0^-2");
        let verdict = decide_side(&h);
        assert_eq!(verdict.outcome, FfOutcome::NotFreeFactor);
    }

    #[test]
    fn negative_witness_replays() {
        let knot = PretzelKnot::parse("P(-3,7,7)").unwrap();
        let (h, _) = boundary(&knot);
        let verdict = decide_side(&h);
        assert_eq!(verdict.outcome, FfOutcome::NotFreeFactor);
        let Some(Witness::NonPrimitiveElement {
            moves,
            element_index,
            element,
            proper_power,
            ..
        }) = &verdict.witness
        else {
            panic!("expected an element witness");
        };
        // replay: apply the moves to the rewritten pair and re-check
        let sys = system_for(&h);
        let mut pair = [sys.rewrite(&h[0]).unwrap(), sys.rewrite(&h[1]).unwrap()];
        for &mv in moves {
            pair = crate::nielsen::apply_move(&pair, mv);
        }
        let w = &pair[*element_index];
        assert_eq!(&w.to_string(), element);
        if *proper_power {
            assert!(is_proper_power(w));
        } else {
            assert_eq!(is_primitive_bounded(w, 3), Ok(false));
        }
    }

    #[test]
    fn certifiers_are_mutually_exclusive_on_fixtures() {
        for spec in ["P(-5,7,7)", "P(-5,7,9)", "P(-3,5,11)", "P(-3,7,7)", "P(-3,3,7)"] {
            let knot = PretzelKnot::parse(spec).unwrap();
            let (h, _) = boundary(&knot);
            let sys = system_for(&h);
            let rewritten: Vec<Word> = h.iter().map(|g| sys.rewrite(g).unwrap()).collect();
            let pair = [rewritten[0].clone(), rewritten[1].clone()];
            let budget = Budget::default();
            let mut c = 0;
            let pos = certify_free_factor(&sys, &rewritten, &budget, &mut c);
            let mut b = 0;
            let neg = certify_not_free_factor(&sys, &pair, &budget, &mut b);
            assert!(
                !(pos.is_some() && neg.is_some()),
                "contradictory certificates for {spec}"
            );
        }
    }

    #[test]
    fn verdict_invariant_under_pair_symmetries() {
        let knot = PretzelKnot::parse("P(-5,7,7)").unwrap();
        let (h, _) = boundary(&knot);
        let base = decide_side(&h).outcome;
        let swapped = vec![h[1].clone(), h[0].clone()];
        assert_eq!(decide_side(&swapped).outcome, base);
        let inverted = vec![h[0].inverse(), h[1].clone()];
        assert_eq!(decide_side(&inverted).outcome, base);
        let mixed = vec![h[0].clone(), h[1].concat(&h[0]).unwrap()];
        assert_eq!(decide_side(&mixed).outcome, base);
    }
}
