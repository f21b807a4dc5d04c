//! Pretzel-knot domain layer: parameter normalization, Seifert matrices,
//! Alexander polynomials, boundary generator words, and the two analyzed
//! families (genus-one triples and the alternating-sign chain).

use crate::intmat::{bi, IntMatrix};
use crate::word::{Alphabet, Word};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KnotError {
    #[error("pretzel parameter {0} is even; all half-twist counts must be odd")]
    EvenParameter(i64),
    #[error("pretzel knots need an odd number of odd parameters, got {0}")]
    EvenStrandCount(usize),
    #[error("cannot parse knot spec `{0}`")]
    BadSpec(String),
    #[error("unsupported parameter pattern {0:?}: only three-strand pretzels and alternating-sign chains (3,-3,...,3,-3,2r+1) are analyzed")]
    UnsupportedParams(Vec<i64>),
    #[error("two-bridge pretzel {0:?} (a parameter is ±1); analysis declined")]
    TwoBridge(Vec<i64>),
    #[error("the prime-power test is undefined for zero")]
    ZeroPrimePower,
    #[error("alternating-sign chains need k >= 1 blocks")]
    EmptyFamily,
}

/// Genus-one normalized data: `P(2p+1, 2q+1, 2r+1)` with at most one
/// negative parameter, `1 <= q <= r` whenever the knot is not two-bridge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenusOne {
    pub p: i64,
    pub q: i64,
    pub r: i64,
    pub mirrored: bool,
    pub two_bridge: bool,
}

/// `P(3,-3,...,3,-3,2r+1)` with `k` sign-alternating blocks; genus `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlternatingSign {
    pub k: usize,
    pub r: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KnotForm {
    GenusOne(GenusOne),
    AlternatingSign(AlternatingSign),
}

/// A pretzel knot in one of the two analyzed families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PretzelKnot {
    original: Vec<i64>,
    form: KnotForm,
}

/// Boundary push-off images of the surface basis on both sides.
pub struct BoundaryGenerators {
    pub alphabet: Alphabet,
    pub h: Vec<Word>,
    pub k: Vec<Word>,
}

impl PretzelKnot {
    /// Normalizes an odd parameter triple: mirror when two or more
    /// parameters are <= -3, then sort ascending so a negative parameter
    /// (if any) comes first and the tail is increasing.
    pub fn from_triple(params: [i64; 3]) -> Result<Self, KnotError> {
        for &k in &params {
            if k % 2 == 0 {
                return Err(KnotError::EvenParameter(k));
            }
        }
        let mut ps = params.to_vec();
        let mirrored = ps.iter().filter(|&&k| k <= -3).count() >= 2;
        if mirrored {
            for k in &mut ps {
                *k = -*k;
            }
        }
        ps.sort_unstable();
        let two_bridge = ps.iter().any(|&k| k == 1 || k == -1);
        let form = KnotForm::GenusOne(GenusOne {
            p: (ps[0] - 1) / 2,
            q: (ps[1] - 1) / 2,
            r: (ps[2] - 1) / 2,
            mirrored,
            two_bridge,
        });
        Ok(PretzelKnot {
            original: params.to_vec(),
            form,
        })
    }

    /// The alternating-sign chain `P(3,-3,...,3,-3,2r+1)` with `k` blocks.
    pub fn family(k: usize, r: i64) -> Result<Self, KnotError> {
        if k == 0 {
            return Err(KnotError::EmptyFamily);
        }
        let mut original = Vec::with_capacity(2 * k + 1);
        for _ in 0..k {
            original.extend([3, -3]);
        }
        original.push(2 * r + 1);
        Ok(PretzelKnot {
            original,
            form: KnotForm::AlternatingSign(AlternatingSign { k, r }),
        })
    }

    /// Routes a parameter list: three parameters go through the genus-one
    /// normalizer, longer odd lists must match the alternating-sign pattern.
    pub fn from_params(params: &[i64]) -> Result<Self, KnotError> {
        for &k in params {
            if k % 2 == 0 {
                return Err(KnotError::EvenParameter(k));
            }
        }
        match params.len() {
            0 | 1 | 2 => Err(KnotError::UnsupportedParams(params.to_vec())),
            3 => PretzelKnot::from_triple([params[0], params[1], params[2]]),
            n if n % 2 == 0 => Err(KnotError::EvenStrandCount(n)),
            n => {
                let k = (n - 1) / 2;
                let pattern_ok = (0..k).all(|i| params[2 * i] == 3 && params[2 * i + 1] == -3);
                if !pattern_ok {
                    return Err(KnotError::UnsupportedParams(params.to_vec()));
                }
                let last = params[n - 1];
                let mut knot = PretzelKnot::family(k, (last - 1) / 2)?;
                knot.original = params.to_vec();
                Ok(knot)
            }
        }
    }

    /// Parses `P(-5,7,9)` / `P(3,-3,3,-3,7)`.
    pub fn parse(spec: &str) -> Result<Self, KnotError> {
        let s = spec.trim();
        let inner = s
            .strip_prefix("P(")
            .or_else(|| s.strip_prefix("p("))
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| KnotError::BadSpec(spec.to_string()))?;
        let params: Vec<i64> = inner
            .split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<Result<_, _>>()
            .map_err(|_| KnotError::BadSpec(spec.to_string()))?;
        PretzelKnot::from_params(&params)
    }

    pub fn form(&self) -> &KnotForm {
        &self.form
    }

    pub fn original_params(&self) -> &[i64] {
        &self.original
    }

    pub fn genus(&self) -> usize {
        match &self.form {
            KnotForm::GenusOne(_) => 1,
            KnotForm::AlternatingSign(f) => f.k,
        }
    }

    pub fn is_two_bridge(&self) -> bool {
        matches!(&self.form, KnotForm::GenusOne(g) if g.two_bridge)
    }

    pub fn genus_one(&self) -> Option<&GenusOne> {
        match &self.form {
            KnotForm::GenusOne(g) => Some(g),
            _ => None,
        }
    }

    /// Canonical display name of the normalized knot.
    pub fn name(&self) -> String {
        match &self.form {
            KnotForm::GenusOne(g) => {
                format!("P({},{},{})", 2 * g.p + 1, 2 * g.q + 1, 2 * g.r + 1)
            }
            KnotForm::AlternatingSign(f) => {
                let mut parts = Vec::with_capacity(2 * f.k + 1);
                for _ in 0..f.k {
                    parts.extend(["3".to_string(), "-3".to_string()]);
                }
                parts.push((2 * f.r + 1).to_string());
                format!("P({})", parts.join(","))
            }
        }
    }

    /// Seifert matrices `(S+, S-)` with `S- = S+^T`.
    pub fn seifert_matrices(&self) -> Result<(IntMatrix, IntMatrix), KnotError> {
        let s_plus = match &self.form {
            KnotForm::GenusOne(g) => {
                if g.two_bridge {
                    return Err(KnotError::TwoBridge(self.original.clone()));
                }
                let (p, q, r) = (g.p, g.q, g.r);
                IntMatrix::from_i64(&[&[p + q + 1, -q - 1], &[-q, q + r + 1]])
            }
            KnotForm::AlternatingSign(f) => {
                let n = 2 * f.k;
                let mut m = IntMatrix::zeros(n, n);
                for i in 1..=f.k {
                    // odd row 2i-1: -1 at col 2i-2 (i > 1), +1 at col 2i
                    let row = 2 * i - 2;
                    if i > 1 {
                        *m.entry_mut(row, 2 * i - 3) = bi(-1);
                    }
                    *m.entry_mut(row, 2 * i - 1) = bi(1);
                    // even row 2i: 2 at col 2i-1, -2 at col 2i+1 (i < k)
                    let row = 2 * i - 1;
                    *m.entry_mut(row, 2 * i - 2) = bi(2);
                    if i < f.k {
                        *m.entry_mut(row, 2 * i) = bi(-2);
                    }
                }
                *m.entry_mut(n - 1, n - 1) = bi(f.r - 1);
                m
            }
        };
        let s_minus = s_plus.transpose();
        Ok((s_plus, s_minus))
    }

    /// Leading Seifert determinant; for genus one this is the closed form
    /// `pq + pr + qr + p + q + r + 1`.
    pub fn seifert_det(&self) -> Result<BigInt, KnotError> {
        let (s_plus, _) = self.seifert_matrices()?;
        Ok(s_plus.determinant().expect("Seifert matrices are square"))
    }

    /// Push-off words on both sides. Exponent sums reproduce the rows of
    /// `S+` (H side) and `S-` (K side).
    pub fn boundary_generators(&self) -> Result<BoundaryGenerators, KnotError> {
        match &self.form {
            KnotForm::GenusOne(g) => {
                if g.two_bridge {
                    return Err(KnotError::TwoBridge(self.original.clone()));
                }
                let alphabet = Alphabet::new(["a", "b"]).unwrap();
                let a = Word::generator(&alphabet, 0);
                let b = Word::generator(&alphabet, 1);
                let cat = |u: &Word, v: &Word| u.concat(v).unwrap();
                let (p, q, r) = (g.p, g.q, g.r);
                let alpha_h = cat(&cat(&b.inverse(), &a).pow(q + 1), &a.pow(p));
                let beta_h = cat(&b.pow(r + 1), &cat(&a.inverse(), &b).pow(q));
                let alpha_k = cat(&cat(&a, &b.inverse()).pow(q), &a.pow(p + 1));
                let beta_k = cat(&b.pow(r), &cat(&b, &a.inverse()).pow(q + 1));
                Ok(BoundaryGenerators {
                    alphabet,
                    h: vec![alpha_h, beta_h],
                    k: vec![alpha_k, beta_k],
                })
            }
            KnotForm::AlternatingSign(f) => Ok(family_boundary_generators(f)),
        }
    }

    /// Rationally homologically fibered: nonzero Seifert determinant.
    pub fn rationally_homologically_fibered(&self) -> Result<bool, KnotError> {
        Ok(!self.seifert_det()?.is_zero())
    }
}

impl fmt::Display for PretzelKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Push-off words of the alternating-sign chain. The H side follows the
/// band template of the genus-one case applied block by block; the K side
/// shifts each band factor's winding by one in the opposite direction, which
/// is pinned down by the requirement that its exponent stack equal `S+^T`.
fn family_boundary_generators(f: &AlternatingSign) -> BoundaryGenerators {
    let k = f.k;
    let n = 2 * k;
    let alphabet = Alphabet::new((1..=n).map(|i| format!("a{i}"))).unwrap();
    let gen = |i: usize| Word::generator(&alphabet, i - 1); // 1-based band index
    let cat = |u: &Word, v: &Word| u.concat(v).unwrap();
    let pair = |i: usize, j: usize| cat(&gen(i).inverse(), &gen(j)); // a_i^-1 a_j
    let rpair = |i: usize, j: usize| cat(&gen(i), &gen(j).inverse()); // a_i a_j^-1

    let mut h = Vec::with_capacity(n);
    let mut kk = Vec::with_capacity(n);
    for i in 1..=k {
        // alpha_{2i-1} = (a_{2i-1}^-1 a_{2i}) (a_{2i-2}^-1 a_{2i-1}), the
        // first block closing with a_1 alone
        let left_h = pair(2 * i - 1, 2 * i);
        let alpha = if i == 1 {
            cat(&left_h, &gen(1))
        } else {
            cat(&left_h, &pair(2 * i - 2, 2 * i - 1))
        };
        h.push(alpha);
        // alpha_{2i} = (a_{2i+1}^-1 a_{2i})^2 (a_{2i}^-1 a_{2i-1})^2, the
        // last block opening with the twist power a_{2k}^{r+1}
        let right_h = pair(2 * i, 2 * i - 1).pow(2);
        let alpha = if i == k {
            cat(&gen(n).pow(f.r + 1), &right_h)
        } else {
            cat(&pair(2 * i + 1, 2 * i).pow(2), &right_h)
        };
        h.push(alpha);

        // beta_{2i-1} = (a_{2i} a_{2i-1}^-1)^2 (a_{2i-1} a_{2i-2}^-1)^2,
        // first block closing with a_1^2
        let left_k = rpair(2 * i, 2 * i - 1).pow(2);
        let beta = if i == 1 {
            cat(&left_k, &gen(1).pow(2))
        } else {
            cat(&left_k, &rpair(2 * i - 1, 2 * i - 2).pow(2))
        };
        kk.push(beta);
        // beta_{2i} = (a_{2i} a_{2i+1}^-1) (a_{2i-1} a_{2i}^-1), last block
        // opening with a_{2k}^r
        let beta = if i == k {
            cat(&gen(n).pow(f.r), &rpair(2 * i - 1, 2 * i))
        } else {
            cat(&rpair(2 * i, 2 * i + 1), &rpair(2 * i - 1, 2 * i))
        };
        kk.push(beta);
    }
    BoundaryGenerators { alphabet, h, k: kk }
}

/// Integer polynomial `det(t S+ - S+^T)`, stored verbatim (no unit
/// normalization); `d_i = d_{2g-i}` and `|Δ(1)| = 1` for every knot here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexanderPolynomial {
    coeffs: Vec<BigInt>,
}

impl AlexanderPolynomial {
    /// Computes `det(t S+ - S+^T)` by column-subset expansion; exact.
    pub fn from_seifert(s_plus: &IntMatrix) -> Self {
        let n = s_plus.rows();
        assert_eq!(n, s_plus.cols(), "Seifert matrix is square");
        let s_t = s_plus.transpose();
        // entry (i, j) is the linear polynomial  s_plus[i][j] t - s_t[i][j]
        let poly_mul_linear = |p: &[BigInt], a: &BigInt, b: &BigInt| -> Vec<BigInt> {
            // (a t + b) * p
            let mut out = vec![BigInt::zero(); p.len() + 1];
            for (i, c) in p.iter().enumerate() {
                out[i] += b * c;
                out[i + 1] += a * c;
            }
            out
        };
        // Laplace expansion memoized over column subsets
        let full_mask: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        let mut memo: std::collections::HashMap<u32, Vec<BigInt>> =
            std::collections::HashMap::new();
        memo.insert(0, vec![BigInt::one()]);
        fn det_rec(
            mask: u32,
            n: usize,
            s_plus: &IntMatrix,
            s_t: &IntMatrix,
            memo: &mut std::collections::HashMap<u32, Vec<BigInt>>,
            mul: &dyn Fn(&[BigInt], &BigInt, &BigInt) -> Vec<BigInt>,
        ) -> Vec<BigInt> {
            if let Some(p) = memo.get(&mask) {
                return p.clone();
            }
            let row = n - mask.count_ones() as usize; // rows 0..row consumed
            let mut acc = vec![BigInt::zero()];
            let mut sign = BigInt::one();
            for c in 0..n {
                if mask & (1 << c) == 0 {
                    continue;
                }
                let sub = det_rec(mask & !(1 << c), n, s_plus, s_t, memo, mul);
                let a = s_plus.entry(row, c);
                let b = -s_t.entry(row, c);
                let term = mul(&sub, a, &b);
                if acc.len() < term.len() {
                    acc.resize(term.len(), BigInt::zero());
                }
                for (i, v) in term.into_iter().enumerate() {
                    if sign.is_one() {
                        acc[i] += v;
                    } else {
                        acc[i] -= v;
                    }
                }
                sign = -sign;
            }
            memo.insert(mask, acc.clone());
            acc
        }
        let mut coeffs = det_rec(full_mask, n, s_plus, &s_t, &mut memo, &poly_mul_linear);
        coeffs.resize(n + 1, BigInt::zero());
        AlexanderPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn at_zero(&self) -> BigInt {
        self.coeffs.first().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Equality up to multiplication by a signed power of t.
    pub fn eq_up_to_unit(&self, other: &AlexanderPolynomial) -> bool {
        let strip = |c: &[BigInt]| -> Vec<BigInt> {
            let lo = c.iter().position(|x| !x.is_zero());
            let hi = c.iter().rposition(|x| !x.is_zero());
            match (lo, hi) {
                (Some(lo), Some(hi)) => c[lo..=hi].to_vec(),
                _ => Vec::new(),
            }
        };
        let a = strip(&self.coeffs);
        let b = strip(&other.coeffs);
        if a.len() != b.len() {
            return false;
        }
        a == b || a.iter().zip(&b).all(|(x, y)| *x == -y)
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        AlexanderPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.eq_up_to_unit(&AlexanderPolynomial::one())
    }

    /// Reference polynomial `(t-2)^k (2t-1)^k` of the alternating-sign chain.
    pub fn alternating_sign_reference(k: usize) -> Self {
        let mut coeffs = vec![BigInt::one()];
        let mul_linear = |p: &[BigInt], a: i64, b: i64| -> Vec<BigInt> {
            let mut out = vec![BigInt::zero(); p.len() + 1];
            for (i, c) in p.iter().enumerate() {
                out[i] += bi(b) * c;
                out[i + 1] += bi(a) * c;
            }
            out
        };
        for _ in 0..k {
            coeffs = mul_linear(&coeffs, 1, -2); // t - 2
            coeffs = mul_linear(&coeffs, 2, -1); // 2t - 1
        }
        AlexanderPolynomial { coeffs }
    }
}

impl fmt::Display for AlexanderPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                1 if a.is_one() => write!(f, "t")?,
                1 => write!(f, "{a}t")?,
                _ if a.is_one() => write!(f, "t^{i}")?,
                _ => write!(f, "{a}t^{i}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// True iff `n = p^k` for a prime `p` and `k >= 1`; `1` is not a prime power
/// (the trivial-quotient case is handled by its own obstruction).
pub fn is_prime_power(n: &BigInt) -> Result<bool, KnotError> {
    if n.is_zero() {
        return Err(KnotError::ZeroPrimePower);
    }
    let n = n.abs();
    let Ok(mut v) = u128::try_from(&n) else {
        // desk-scale inputs always fit; anything larger is factored slowly
        let mut n = n;
        let mut p = BigInt::from(2);
        while (&p * &p) <= n {
            if (&n % &p).is_zero() {
                while (&n % &p).is_zero() {
                    n /= &p;
                }
                return Ok(n.is_one());
            }
            p += 1;
        }
        return Ok(!n.is_one());
    };
    if v == 1 {
        return Ok(false);
    }
    let mut p = 2u128;
    while p * p <= v {
        if v % p == 0 {
            while v % p == 0 {
                v /= p;
            }
            return Ok(v == 1);
        }
        p += 1;
    }
    Ok(true) // v itself is prime
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triple(a: i64, b: i64, c: i64) -> PretzelKnot {
        PretzelKnot::from_triple([a, b, c]).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let k = triple(7, -5, 7);
        let g = k.genus_one().unwrap();
        assert_eq!((g.p, g.q, g.r), (-3, 3, 3));
        assert!(!g.mirrored);

        let k = triple(-3, -5, 7);
        let g = k.genus_one().unwrap();
        assert_eq!((g.p, g.q, g.r), (-4, 1, 2));
        assert!(g.mirrored);
        assert_eq!(k.name(), "P(-7,3,5)");

        let k = triple(3, 1, 5);
        assert!(k.is_two_bridge());

        assert!(matches!(
            PretzelKnot::from_triple([2, 3, 5]),
            Err(KnotError::EvenParameter(2))
        ));
    }

    #[test]
    fn normalize_idempotent_and_symmetric() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..500 {
            let params: Vec<i64> = (0..3).map(|_| 2 * rng.gen_range(-10i64..10) + 1).collect();
            let k = PretzelKnot::from_params(&params).unwrap();
            // permutation invariance
            let mut perm = params.clone();
            perm.swap(0, 2);
            assert_eq!(PretzelKnot::from_params(&perm).unwrap().name(), k.name());
            // mirror pairs normalize to one name (two-bridge triples keep
            // their ±1 parameters and are never mirrored)
            let mirror: Vec<i64> = params.iter().map(|&x| -x).collect();
            let km = PretzelKnot::from_params(&mirror).unwrap();
            if !k.is_two_bridge() {
                assert_eq!(km.name(), k.name());
            }
            // idempotence: renormalizing the normalized name is stable
            let again = PretzelKnot::parse(&k.name()).unwrap();
            assert_eq!(again.name(), k.name());
            let (g, h) = (k.genus_one().unwrap(), again.genus_one().unwrap());
            assert_eq!((g.p, g.q, g.r, g.two_bridge), (h.p, h.q, h.r, h.two_bridge));
        }
    }

    #[test]
    fn seifert_matrix_examples() {
        let (s_plus, s_minus) = triple(-5, 7, 7).seifert_matrices().unwrap();
        assert_eq!(s_plus, IntMatrix::from_i64(&[&[1, -4], &[-3, 7]]));
        assert_eq!(s_minus, s_plus.transpose());

        let fam = PretzelKnot::family(1, 3).unwrap();
        let (s_plus, _) = fam.seifert_matrices().unwrap();
        assert_eq!(s_plus, IntMatrix::from_i64(&[&[0, 1], &[2, 2]]));

        assert!(triple(1, 3, 5).seifert_matrices().is_err());
    }

    #[test]
    fn alexander_examples() {
        let (s_plus, _) = triple(-5, 7, 7).seifert_matrices().unwrap();
        let delta = AlexanderPolynomial::from_seifert(&s_plus);
        assert_eq!(delta.coeffs(), &[bi(-5), bi(11), bi(-5)]);
        assert_eq!(delta.at_zero(), bi(-5));
        assert_eq!(delta.at_one().abs(), bi(1));
        assert!(delta.is_palindromic());

        // N = 0 collapses to the trivial polynomial
        let (s_plus, _) = triple(-3, 5, 7).seifert_matrices().unwrap();
        let delta = AlexanderPolynomial::from_seifert(&s_plus);
        assert!(delta.is_trivial());

        // the alternating-sign chain factors as (t-2)^k (2t-1)^k
        for k in 1..=4 {
            for r in [0, 1, 5] {
                let fam = PretzelKnot::family(k, r).unwrap();
                let (s_plus, _) = fam.seifert_matrices().unwrap();
                let delta = AlexanderPolynomial::from_seifert(&s_plus);
                let reference = AlexanderPolynomial::alternating_sign_reference(k);
                assert!(delta.eq_up_to_unit(&reference), "k={k} r={r}: {delta:?}");
                assert_eq!(delta.at_zero().abs(), bi(2).pow(k as u32));
            }
        }
    }

    #[test]
    fn genus_one_closed_form() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..500 {
            let p = rng.gen_range(-50i64..=50);
            let q = rng.gen_range(1i64..=50);
            let r = rng.gen_range(q..=50);
            if p == 0 || p == -1 {
                continue;
            }
            let s_plus = IntMatrix::from_i64(&[&[p + q + 1, -q - 1], &[-q, q + r + 1]]);
            let n = s_plus.determinant().unwrap();
            assert_eq!(n, bi(p * q + p * r + q * r + p + q + r + 1));
            let delta = AlexanderPolynomial::from_seifert(&s_plus);
            assert_eq!(delta.coeffs()[0], n);
            assert_eq!(delta.coeffs()[2], n);
            assert_eq!(delta.coeffs()[1], bi(1) - bi(2) * &n);
            assert!(delta.is_palindromic());
            assert_eq!(delta.at_one().abs(), bi(1));
        }
    }

    #[test]
    fn counterexample_family_determinants() {
        // J_q = P(1-2q, 2q+1, 4q-3) has N = -(q-1)^2
        for q in 3..=12i64 {
            let k = triple(1 - 2 * q, 2 * q + 1, 4 * q - 3);
            assert_eq!(k.seifert_det().unwrap(), bi(-(q - 1) * (q - 1)));
        }
    }

    #[test]
    fn boundary_generators_match_seifert_rows() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        let mut checked = 0;
        while checked < 100 {
            let p = rng.gen_range(-8i64..=8);
            let q = rng.gen_range(1i64..=8);
            let r = rng.gen_range(q..=8);
            if p == 0 || p == -1 {
                continue;
            }
            checked += 1;
            let k = triple(2 * p + 1, 2 * q + 1, 2 * r + 1);
            let (s_plus, s_minus) = k.seifert_matrices().unwrap();
            let gens = k.boundary_generators().unwrap();
            for (i, w) in gens.h.iter().enumerate() {
                let row: Vec<BigInt> = w.abelianize().iter().map(|&v| bi(v)).collect();
                assert_eq!(&row[..], s_plus.row(i), "H row {i} of {k}");
            }
            for (i, w) in gens.k.iter().enumerate() {
                let row: Vec<BigInt> = w.abelianize().iter().map(|&v| bi(v)).collect();
                assert_eq!(&row[..], s_minus.row(i), "K row {i} of {k}");
            }
        }
        // same consistency for the chain family on both sides
        for k in 1..=4 {
            for r in [0, 2, 7] {
                let fam = PretzelKnot::family(k, r).unwrap();
                let (s_plus, s_minus) = fam.seifert_matrices().unwrap();
                let gens = fam.boundary_generators().unwrap();
                for (i, w) in gens.h.iter().enumerate() {
                    let row: Vec<BigInt> = w.abelianize().iter().map(|&v| bi(v)).collect();
                    assert_eq!(&row[..], s_plus.row(i), "family H row {i}");
                }
                for (i, w) in gens.k.iter().enumerate() {
                    let row: Vec<BigInt> = w.abelianize().iter().map(|&v| bi(v)).collect();
                    assert_eq!(&row[..], s_minus.row(i), "family K row {i}");
                }
            }
        }
    }

    #[test]
    fn boundary_generator_strings() {
        let gens = triple(-5, 7, 7).boundary_generators().unwrap();
        assert_eq!(gens.h[0].to_string(), "b^-1 a b^-1 a b^-1 a b^-1 a^-2");
        assert_eq!(gens.h[1].to_string(), "b^4 a^-1 b a^-1 b a^-1 b");
        let gens = triple(-3, 3, 5).boundary_generators().unwrap();
        assert_eq!(gens.k[0].to_string(), "a b^-1 a^-1");
    }

    #[test]
    fn prime_power_examples() {
        assert!(is_prime_power(&bi(5)).unwrap());
        assert!(is_prime_power(&bi(4)).unwrap());
        assert!(!is_prime_power(&bi(12)).unwrap());
        assert!(!is_prime_power(&bi(1)).unwrap());
        assert!(is_prime_power(&bi(-8)).unwrap());
        assert!(is_prime_power(&bi(2)).unwrap());
        assert!(matches!(
            is_prime_power(&bi(0)),
            Err(KnotError::ZeroPrimePower)
        ));
    }

    #[test]
    fn rhf_examples() {
        assert!(!triple(-3, 5, 7).rationally_homologically_fibered().unwrap());
        assert!(triple(-5, 7, 7).rationally_homologically_fibered().unwrap());
    }

    #[test]
    fn parse_and_route() {
        assert!(PretzelKnot::parse("P(-5,7,9)").is_ok());
        assert!(PretzelKnot::parse("P(3,-3,3,-3,7)").is_ok());
        assert!(matches!(
            PretzelKnot::parse("P(2,4,6)"),
            Err(KnotError::EvenParameter(_))
        ));
        assert!(matches!(
            PretzelKnot::parse("P(5,7,9,11,13)"),
            Err(KnotError::UnsupportedParams(_))
        ));
        assert!(PretzelKnot::parse("garbage").is_err());
    }
}
