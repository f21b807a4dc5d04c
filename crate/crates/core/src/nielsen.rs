//! Nielsen moves on word tuples, bounded Nielsen-ball enumeration, and
//! primitivity testing by Whitehead length descent.
//!
//! A word is primitive iff greedy descent under Whitehead automorphisms ends
//! at cyclic length one; at a descent fixpoint the word has minimal length in
//! its automorphism orbit (peak reduction), which makes the test exact.

use crate::word::{Letter, Word};
use serde::Serialize;
use std::collections::HashSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NielsenError {
    #[error("support size {support} exceeds the primitivity bound {max}")]
    SupportTooLarge { support: usize, max: usize },
    #[error("the empty word has no primitivity type")]
    EmptyWord,
}

/// Elementary Nielsen transformation of an ordered pair.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "snake_case", tag = "move")]
pub enum NielsenMove {
    Swap,
    InvertFirst,
    InvertSecond,
    /// first *= second^±1 (right) or first = second^±1 * first (left)
    MulFirst { from_right: bool, inverse: bool },
    /// second *= first^±1 (right) or second = first^±1 * second (left)
    MulSecond { from_right: bool, inverse: bool },
}

pub const ELEMENTARY_MOVES: [NielsenMove; 11] = [
    NielsenMove::Swap,
    NielsenMove::InvertFirst,
    NielsenMove::InvertSecond,
    NielsenMove::MulFirst { from_right: true, inverse: false },
    NielsenMove::MulFirst { from_right: true, inverse: true },
    NielsenMove::MulFirst { from_right: false, inverse: false },
    NielsenMove::MulFirst { from_right: false, inverse: true },
    NielsenMove::MulSecond { from_right: true, inverse: false },
    NielsenMove::MulSecond { from_right: true, inverse: true },
    NielsenMove::MulSecond { from_right: false, inverse: false },
    NielsenMove::MulSecond { from_right: false, inverse: true },
];

impl fmt::Display for NielsenMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NielsenMove::Swap => write!(f, "swap"),
            NielsenMove::InvertFirst => write!(f, "first := first^-1"),
            NielsenMove::InvertSecond => write!(f, "second := second^-1"),
            NielsenMove::MulFirst { from_right, inverse } => {
                let e = if *inverse { "^-1" } else { "" };
                if *from_right {
                    write!(f, "first := first second{e}")
                } else {
                    write!(f, "first := second{e} first")
                }
            }
            NielsenMove::MulSecond { from_right, inverse } => {
                let e = if *inverse { "^-1" } else { "" };
                if *from_right {
                    write!(f, "second := second first{e}")
                } else {
                    write!(f, "second := first{e} second")
                }
            }
        }
    }
}

pub fn apply_move(pair: &[Word; 2], mv: NielsenMove) -> [Word; 2] {
    let [u, v] = pair;
    let cat = |a: &Word, b: &Word| a.concat(b).expect("pair over one alphabet");
    match mv {
        NielsenMove::Swap => [v.clone(), u.clone()],
        NielsenMove::InvertFirst => [u.inverse(), v.clone()],
        NielsenMove::InvertSecond => [u.clone(), v.inverse()],
        NielsenMove::MulFirst { from_right, inverse } => {
            let m = if inverse { v.inverse() } else { v.clone() };
            let u2 = if from_right { cat(u, &m) } else { cat(&m, u) };
            [u2, v.clone()]
        }
        NielsenMove::MulSecond { from_right, inverse } => {
            let m = if inverse { u.inverse() } else { u.clone() };
            let v2 = if from_right { cat(v, &m) } else { cat(&m, v) };
            [u.clone(), v2]
        }
    }
}

/// A pair in the Nielsen ball together with the move sequence reaching it.
#[derive(Clone, Debug)]
pub struct TransformedPair {
    pub pair: [Word; 2],
    pub moves: Vec<NielsenMove>,
}

/// All pairs reachable from `pair` by at most `radius` elementary moves,
/// deduplicated, in breadth-first discovery order (the input pair first).
pub fn nielsen_ball(pair: &[Word; 2], radius: usize) -> Vec<TransformedPair> {
    let mut seen: HashSet<(Word, Word)> = HashSet::new();
    seen.insert((pair[0].clone(), pair[1].clone()));
    let mut out = vec![TransformedPair {
        pair: pair.clone(),
        moves: Vec::new(),
    }];
    let mut frontier_start = 0;
    for _ in 0..radius {
        let frontier_end = out.len();
        for i in frontier_start..frontier_end {
            for mv in ELEMENTARY_MOVES {
                let next = apply_move(&out[i].pair, mv);
                let key = (next[0].clone(), next[1].clone());
                if seen.insert(key) {
                    let mut moves = out[i].moves.clone();
                    moves.push(mv);
                    out.push(TransformedPair { pair: next, moves });
                }
            }
        }
        frontier_start = frontier_end;
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub enum ReduceStep {
    DropIdentity { index: usize },
    Replace { index: usize, by: usize, from_right: bool, inverse: bool },
}

/// Nielsen reduction of a generating tuple: greedily replaces a member by a
/// strictly shorter product with another member (or drops identities) until
/// no length-reducing elementary move exists. The subgroup is unchanged.
pub fn nielsen_reduce(gens: &[Word]) -> (Vec<Word>, Vec<ReduceStep>) {
    let mut gens: Vec<Word> = gens.to_vec();
    let mut log = Vec::new();
    'outer: loop {
        if let Some(i) = gens.iter().position(Word::is_identity) {
            gens.remove(i);
            log.push(ReduceStep::DropIdentity { index: i });
            continue;
        }
        for i in 0..gens.len() {
            for j in 0..gens.len() {
                if i == j {
                    continue;
                }
                for (from_right, inverse) in
                    [(true, false), (true, true), (false, false), (false, true)]
                {
                    let m = if inverse { gens[j].inverse() } else { gens[j].clone() };
                    let cand = if from_right {
                        gens[i].concat(&m)
                    } else {
                        m.concat(&gens[i])
                    }
                    .expect("tuple over one alphabet");
                    if cand.len() < gens[i].len() {
                        gens[i] = cand;
                        log.push(ReduceStep::Replace { index: i, by: j, from_right, inverse });
                        continue 'outer;
                    }
                }
            }
        }
        return (gens, log);
    }
}

/// True iff the cyclically reduced core is a proper power `u^k`, `k >= 2`.
pub fn is_proper_power(w: &Word) -> bool {
    let core = w.cyclic_reduce();
    let n = core.len();
    if n < 2 {
        return false;
    }
    let ls = core.letters();
    'period: for d in 1..n {
        if n % d != 0 {
            continue;
        }
        for i in d..n {
            if ls[i] != ls[i - d] {
                continue 'period;
            }
        }
        return true;
    }
    false
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Action {
    Id,
    Right, // g -> g m
    Left,  // g -> m^-1 g
    Conj,  // g -> m^-1 g m
}

/// Whitehead automorphism of multiplier type: fixes the multiplier letter
/// and hits every other generator with one of {id, right, left, conj}.
struct WhiteheadAuto {
    multiplier: Letter,
    actions: Vec<(usize, Action)>,
}

impl WhiteheadAuto {
    fn apply(&self, w: &Word) -> Word {
        let m = self.multiplier;
        let mut letters = Vec::with_capacity(w.len() * 3);
        for &l in w.letters() {
            let action = if l.gen == m.gen {
                Action::Id
            } else {
                self.actions
                    .iter()
                    .find(|(g, _)| *g == l.gen)
                    .map(|&(_, a)| a)
                    .unwrap_or(Action::Id)
            };
            match (action, l.inv) {
                (Action::Id, _) => letters.push(l),
                (Action::Right, false) => letters.extend([l, m]),
                (Action::Right, true) => letters.extend([m.inverse(), l]),
                (Action::Left, false) => letters.extend([m.inverse(), l]),
                (Action::Left, true) => letters.extend([l, m]),
                (Action::Conj, _) => letters.extend([m.inverse(), l, m]),
            }
        }
        Word::from_letters(w.alphabet(), letters)
    }
}

fn whitehead_autos(support: &[usize]) -> Vec<WhiteheadAuto> {
    let mut autos = Vec::new();
    let others: Vec<Vec<usize>> = support
        .iter()
        .map(|&m| support.iter().copied().filter(|&g| g != m).collect())
        .collect();
    for (mi, &mgen) in support.iter().enumerate() {
        for inv in [false, true] {
            let multiplier = Letter::new(mgen, inv);
            let k = others[mi].len();
            let count = 4usize.pow(k as u32);
            for code in 0..count {
                if code == 0 {
                    continue; // all-Id table is the identity map
                }
                let mut c = code;
                let mut actions = Vec::with_capacity(k);
                for &g in &others[mi] {
                    let a = match c % 4 {
                        0 => Action::Id,
                        1 => Action::Right,
                        2 => Action::Left,
                        _ => Action::Conj,
                    };
                    c /= 4;
                    actions.push((g, a));
                }
                autos.push(WhiteheadAuto { multiplier, actions });
            }
        }
    }
    autos
}

/// Greedy Whitehead descent on the cyclic word; the result has minimal
/// length in the automorphism orbit of `w`.
pub fn whitehead_minimize(w: &Word) -> Word {
    let mut cur = w.cyclic_reduce();
    loop {
        let support = cur.support();
        if support.len() <= 1 || cur.len() <= 1 {
            return cur;
        }
        let mut improved = false;
        for auto in whitehead_autos(&support) {
            let img = auto.apply(&cur).cyclic_reduce();
            if img.len() < cur.len() {
                cur = img;
                improved = true;
                break;
            }
        }
        if !improved {
            return cur;
        }
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

fn is_primitive_impl(w: &Word) -> bool {
    // necessary condition: unit gcd of exponent sums over the support
    let ab = w.abelianize();
    let g = w.support().iter().fold(0i64, |acc, &i| gcd(acc, ab[i]));
    if g != 1 {
        return false;
    }
    whitehead_minimize(w).len() == 1
}

/// Primitivity in the free group on the word's support (equivalently in any
/// ambient free group containing that support as part of a basis). Only
/// supports up to `max_support` are decided.
pub fn is_primitive_bounded(w: &Word, max_support: usize) -> Result<bool, NielsenError> {
    if w.is_identity() {
        return Err(NielsenError::EmptyWord);
    }
    let support = w.support().len();
    if support > max_support {
        return Err(NielsenError::SupportTooLarge { support, max: max_support });
    }
    Ok(is_primitive_impl(w))
}

/// Small-rank primitivity test (support of size at most 3).
pub fn is_primitive_small(w: &Word) -> Result<bool, NielsenError> {
    is_primitive_bounded(w, 3)
}
