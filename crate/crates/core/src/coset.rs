//! Schreier transversal and free basis for the kernel of a map onto a finite
//! abelian quotient, plus the Reidemeister-Schreier rewriting of kernel words
//! into that basis.
//!
//! The transversal is the canonical mixed-radix one determined by the Hermite
//! pivots: representatives `a1^e1 .. an^en` with `0 <= ei < pivot_i`. It is
//! prefix-closed, so the nontrivial elements `x_{c,g} = c g rep(cg)^-1` form
//! a free basis of the kernel of rank `index * (n - 1) + 1`.

use crate::intmat::{AbelianQuotient, IntMatrix};
use crate::word::{Alphabet, Letter, Substitution, Word, WordError};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CosetError {
    #[error("quotient is infinite; no finite transversal exists")]
    InfiniteQuotient,
    #[error("quotient index {0} exceeds the supported bound")]
    IndexTooLarge(String),
    #[error("relation matrix has {got} columns, ambient rank is {want}")]
    Shape { got: usize, want: usize },
    #[error("word `{0}` is not in the kernel")]
    NotInKernel(String),
    #[error(transparent)]
    Word(#[from] WordError),
}

const MAX_INDEX: usize = 4_000_000;

/// Transversal, Schreier generators, and rewriting tables for the kernel of
/// `F(ambient) -> Z^n / relations`.
#[derive(Debug)]
pub struct SchreierSystem {
    ambient: Alphabet,
    quotient: AbelianQuotient,
    schreier: Alphabet,
    tuples: Vec<Vec<i64>>,
    /// coset x generator -> schreier letter (None when the generator is trivial)
    gen_table: Vec<Vec<Option<usize>>>,
    /// coset x generator -> target coset
    step: Vec<Vec<usize>>,
    /// coset x generator -> source coset (inverse of `step` per generator)
    step_inv: Vec<Vec<usize>>,
    /// schreier letter -> (coset, generator) it was defined from
    letter_source: Vec<(usize, usize)>,
}

impl SchreierSystem {
    pub fn build(ambient: &Alphabet, relations: &IntMatrix) -> Result<Self, CosetError> {
        let n = ambient.rank();
        if relations.cols() != n {
            return Err(CosetError::Shape {
                got: relations.cols(),
                want: n,
            });
        }
        let quotient = relations.quotient();
        if !quotient.is_finite() {
            return Err(CosetError::InfiniteQuotient);
        }
        let index = quotient
            .order_usize()
            .filter(|&o| o <= MAX_INDEX)
            .ok_or_else(|| CosetError::IndexTooLarge(quotient.order().unwrap().to_string()))?;
        let tuples = quotient.rep_tuples().expect("finite quotient enumerates");
        debug_assert_eq!(tuples.len(), index);

        let mut step = vec![vec![0usize; n]; index];
        let mut step_inv = vec![vec![0usize; n]; index];
        for (c, tuple) in tuples.iter().enumerate() {
            for g in 0..n {
                let mut t = tuple.clone();
                t[g] += 1;
                let target = quotient.linearize(&quotient.reduce(&t));
                step[c][g] = target;
                step_inv[target][g] = c;
            }
        }

        // x_{c,g} is trivial exactly when appending g to the representative
        // word of c stays in canonical mixed-radix form.
        let pivots: Vec<i64> = quotient
            .pivots()
            .iter()
            .map(|p| i64::try_from(p).expect("pivot fits i64"))
            .collect();
        let mut gen_table = vec![vec![None; n]; index];
        let mut letter_source = Vec::new();
        for (c, tuple) in tuples.iter().enumerate() {
            for g in 0..n {
                let canonical_append =
                    tuple[g] + 1 < pivots[g] && tuple[g + 1..].iter().all(|&e| e == 0);
                if !canonical_append {
                    gen_table[c][g] = Some(letter_source.len());
                    letter_source.push((c, g));
                }
            }
        }
        debug_assert_eq!(letter_source.len(), index * (n - 1) + 1);
        let schreier = Alphabet::numbered("x", letter_source.len());

        Ok(SchreierSystem {
            ambient: ambient.clone(),
            quotient,
            schreier,
            tuples,
            gen_table,
            step,
            step_inv,
            letter_source,
        })
    }

    pub fn ambient(&self) -> &Alphabet {
        &self.ambient
    }

    pub fn schreier_alphabet(&self) -> &Alphabet {
        &self.schreier
    }

    pub fn quotient(&self) -> &AbelianQuotient {
        &self.quotient
    }

    pub fn index(&self) -> usize {
        self.tuples.len()
    }

    /// Number of Schreier generators: `index * (n - 1) + 1`.
    pub fn rank(&self) -> usize {
        self.letter_source.len()
    }

    /// Canonical representative word of coset `c`.
    pub fn transversal_word(&self, c: usize) -> Word {
        let mut letters = Vec::new();
        for (g, &e) in self.tuples[c].iter().enumerate() {
            for _ in 0..e {
                letters.push(Letter::new(g, false));
            }
        }
        Word::from_letters(&self.ambient, letters)
    }

    pub fn transversal(&self) -> Vec<Word> {
        (0..self.index()).map(|c| self.transversal_word(c)).collect()
    }

    /// Ambient definition `c g rep(cg)^-1` of Schreier letter `i`.
    pub fn definition(&self, i: usize) -> Word {
        let (c, g) = self.letter_source[i];
        let rep = self.transversal_word(c);
        let target = self.transversal_word(self.step[c][g]);
        rep.concat(&Word::generator(&self.ambient, g))
            .and_then(|w| w.concat(&target.inverse()))
            .expect("same alphabet")
    }

    pub fn definitions(&self) -> Vec<Word> {
        (0..self.rank()).map(|i| self.definition(i)).collect()
    }

    /// Coset of a word under the quotient map.
    pub fn coset_of(&self, w: &Word) -> usize {
        let mut c = 0usize;
        for l in w.letters() {
            c = if l.inv {
                self.step_inv[c][l.gen]
            } else {
                self.step[c][l.gen]
            };
        }
        c
    }

    /// Kernel membership (sound and complete: the subgroup is exactly the
    /// kernel of the abelian quotient map).
    pub fn contains(&self, w: &Word) -> bool {
        self.coset_of(w) == 0
    }

    /// Reidemeister-Schreier rewriting of a kernel word into the Schreier
    /// basis. Expanding each letter by its definition recovers the input.
    pub fn rewrite(&self, w: &Word) -> Result<Word, CosetError> {
        if w.alphabet() != &self.ambient {
            return Err(CosetError::Word(WordError::AlphabetMismatch(
                format!("{:?}", w.alphabet()),
                format!("{:?}", self.ambient),
            )));
        }
        let mut out = Vec::with_capacity(w.len());
        let mut c = 0usize;
        for l in w.letters() {
            if !l.inv {
                if let Some(x) = self.gen_table[c][l.gen] {
                    out.push(Letter::new(x, false));
                }
                c = self.step[c][l.gen];
            } else {
                let src = self.step_inv[c][l.gen];
                if let Some(x) = self.gen_table[src][l.gen] {
                    out.push(Letter::new(x, true));
                }
                c = src;
            }
        }
        if c != 0 {
            return Err(CosetError::NotInKernel(w.to_string()));
        }
        Ok(Word::from_letters(&self.schreier, out))
    }

    /// Inverse of [`Self::rewrite`]: substitute every Schreier letter by its
    /// ambient definition.
    pub fn expand(&self, w: &Word) -> Word {
        let sub = Substitution::total(&self.schreier, &self.ambient, self.definitions());
        w.substitute(&sub).expect("total substitution")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intmat::bi;

    fn ab() -> Alphabet {
        Alphabet::new(["a", "b"]).unwrap()
    }

    fn words(sys: &SchreierSystem) -> Vec<String> {
        sys.definitions().iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn index_two_basis() {
        let sys = SchreierSystem::build(&ab(), &IntMatrix::from_i64(&[&[1, 0], &[0, 2]])).unwrap();
        assert_eq!(sys.index(), 2);
        assert_eq!(words(&sys), vec!["a", "b a b^-1", "b^2"]);
        assert_eq!(sys.rank(), 3);
    }

    #[test]
    fn index_four_basis() {
        let sys = SchreierSystem::build(&ab(), &IntMatrix::from_i64(&[&[1, 0], &[0, 4]])).unwrap();
        assert_eq!(
            words(&sys),
            vec!["a", "b a b^-1", "b^2 a b^-2", "b^3 a b^-3", "b^4"]
        );
    }

    #[test]
    fn trivial_quotient_gives_ambient_basis() {
        let sys = SchreierSystem::build(&ab(), &IntMatrix::identity(2)).unwrap();
        assert_eq!(sys.index(), 1);
        assert_eq!(sys.transversal(), vec![Word::identity(&ab())]);
        assert_eq!(words(&sys), vec!["a", "b"]);
    }

    #[test]
    fn infinite_quotient_rejected() {
        let err = SchreierSystem::build(&ab(), &IntMatrix::zeros(2, 2)).unwrap_err();
        assert_eq!(err, CosetError::InfiniteQuotient);
    }

    #[test]
    fn rewrite_pinned_strings() {
        // relation stack of the high-twist boundary pair with Hermite form
        // [[1,0],[0,4]]; the two rewritten words are pinned byte-exact.
        let alpha = ab();
        let sys = SchreierSystem::build(&alpha, &IntMatrix::from_i64(&[&[1, -4], &[-3, 8]])).unwrap();
        let alpha_h = Word::parse(&alpha, "b^-1 a").unwrap().pow(4)
            .concat(&Word::parse(&alpha, "a^-3").unwrap())
            .unwrap();
        let beta_h = Word::parse(&alpha, "b^5").unwrap()
            .concat(&Word::parse(&alpha, "a^-1 b").unwrap().pow(3))
            .unwrap();
        assert_eq!(sys.rewrite(&alpha_h).unwrap().to_string(), "x4^-1 x3 x2 x1 x0^-2");
        assert_eq!(sys.rewrite(&beta_h).unwrap().to_string(), "x4 x1^-1 x2^-1 x3^-1 x4");
        // round trips
        assert_eq!(sys.expand(&sys.rewrite(&alpha_h).unwrap()), alpha_h);
        assert_eq!(sys.expand(&sys.rewrite(&beta_h).unwrap()), beta_h);
    }

    #[test]
    fn rewrite_identity_and_membership() {
        let sys = SchreierSystem::build(&ab(), &IntMatrix::from_i64(&[&[1, 1], &[0, 5]])).unwrap();
        assert!(sys.rewrite(&Word::identity(&ab())).unwrap().is_identity());
        let b = Word::parse(&ab(), "b").unwrap();
        assert!(!sys.contains(&b));
        assert!(matches!(sys.rewrite(&b), Err(CosetError::NotInKernel(_))));
        assert!(sys.contains(&b.pow(5)));
    }

    #[test]
    fn rewrite_is_homomorphic_on_kernel() {
        let sys = SchreierSystem::build(&ab(), &IntMatrix::from_i64(&[&[2, 1], &[0, 3]])).unwrap();
        let u = Word::parse(&ab(), "a^2 b^-1 a^-2 b").unwrap();
        let v = Word::parse(&ab(), "b^3 a b^-3 a^-1").unwrap();
        assert!(sys.contains(&u) && sys.contains(&v));
        let lhs = sys.rewrite(&u.concat(&v).unwrap()).unwrap();
        let rhs = sys.rewrite(&u).unwrap().concat(&sys.rewrite(&v).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rank_identity_small_cases() {
        for rel in [
            IntMatrix::from_i64(&[&[1, 0], &[0, 2]]),
            IntMatrix::from_i64(&[&[2, 1], &[0, 3]]),
            IntMatrix::from_i64(&[&[3, 0, 1], &[0, 2, 1], &[0, 0, 2]]),
        ] {
            let n = rel.cols();
            let alphabet = Alphabet::numbered("g", n);
            let sys = SchreierSystem::build(&alphabet, &rel).unwrap();
            assert_eq!(sys.rank(), sys.index() * (n - 1) + 1);
            assert_eq!(bi(sys.index() as i64), *sys.quotient().order().unwrap());
        }
    }
}
