//! Exact integer matrices: Hermite/Smith normal forms, determinants, and the
//! finite abelian quotient structure used for coset enumeration.
//!
//! Only row operations (left multiplication by unimodular matrices) are used
//! for the Hermite form, so columns keep their generator meaning.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("bad matrix shape: {0}")]
    Shape(String),
}

pub fn bi(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Dense integer matrix with arbitrary-precision entries.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            *m.entry_mut(i, i) = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self, MatError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(MatError::Shape("ragged rows".into()));
        }
        Ok(IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        IntMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| bi(v)).collect())
                .collect(),
        )
        .expect("slice rows are rectangular")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn entry_mut(&mut self, r: usize, c: usize) -> &mut BigInt {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *t.entry_mut(c, r) = self.entry(r, c).clone();
            }
        }
        t
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -std::mem::take(self.entry_mut(r, c));
            *self.entry_mut(r, c) = v;
        }
    }

    /// row[dst] -= q * row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let delta = q * self.entry(src, c);
            *self.entry_mut(dst, c) -= delta;
        }
    }

    /// Hermite form via unimodular row operations: staircase shape, positive
    /// pivots, entries above a pivot reduced into `[0, pivot)`.
    pub fn hermite_form(&self) -> IntMatrix {
        self.hermite_with_transform().0
    }

    /// Returns `(h, u)` with `u * self == h`, `u` unimodular.
    pub fn hermite_with_transform(&self) -> (IntMatrix, IntMatrix) {
        let mut h = self.clone();
        let mut u = IntMatrix::identity(self.rows);
        let mut pr = 0; // next pivot row
        for col in 0..h.cols {
            if pr == h.rows {
                break;
            }
            // gcd-eliminate the column below pr
            loop {
                let mut best: Option<usize> = None;
                for r in pr..h.rows {
                    if !h.entry(r, col).is_zero() {
                        best = match best {
                            None => Some(r),
                            Some(b) if h.entry(r, col).abs() < h.entry(b, col).abs() => Some(r),
                            other => other,
                        };
                    }
                }
                let Some(b) = best else { break };
                h.swap_rows(pr, b);
                u.swap_rows(pr, b);
                let mut dirty = false;
                for r in pr + 1..h.rows {
                    if !h.entry(r, col).is_zero() {
                        let q = h.entry(r, col) / h.entry(pr, col); // truncated
                        h.row_axpy(r, pr, &q);
                        u.row_axpy(r, pr, &q);
                        if !h.entry(r, col).is_zero() {
                            dirty = true;
                        }
                    }
                }
                if !dirty {
                    break;
                }
            }
            if h.entry(pr, col).is_zero() {
                continue;
            }
            if h.entry(pr, col).is_negative() {
                h.negate_row(pr);
                u.negate_row(pr);
            }
            let pivot = h.entry(pr, col).clone();
            for r in 0..pr {
                let q = h.entry(r, col).div_floor(&pivot);
                h.row_axpy(r, pr, &q);
                u.row_axpy(r, pr, &q);
            }
            pr += 1;
        }
        (h, u)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt, MatError> {
        if self.rows != self.cols {
            return Err(MatError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.entry(k, k).is_zero() {
                let Some(swap) = (k + 1..n).find(|&r| !a.entry(r, k).is_zero()) else {
                    return Ok(BigInt::zero());
                };
                a.swap_rows(k, swap);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = a.entry(i, j) * a.entry(k, k) - a.entry(i, k) * a.entry(k, j);
                    let (q, r) = v.div_rem(&prev);
                    debug_assert!(r.is_zero(), "Bareiss division is exact");
                    *a.entry_mut(i, j) = q;
                }
                *a.entry_mut(i, k) = BigInt::zero();
            }
            prev = a.entry(k, k).clone();
        }
        let det = a.entry(n - 1, n - 1).clone();
        Ok(if sign < 0 { -det } else { det })
    }

    /// Smith invariant factors d1 | d2 | ..., one per diagonal slot, zeros last.
    pub fn smith_invariants(&self) -> Vec<BigInt> {
        let mut a = self.clone();
        let n = self.rows.min(self.cols);
        let mut t = 0;
        'outer: while t < n {
            // locate a pivot of minimal absolute value in the remaining block
            let mut pivot: Option<(usize, usize)> = None;
            for r in t..a.rows {
                for c in t..a.cols {
                    if !a.entry(r, c).is_zero() {
                        pivot = match pivot {
                            None => Some((r, c)),
                            Some((pr, pc))
                                if a.entry(r, c).abs() < a.entry(pr, pc).abs() =>
                            {
                                Some((r, c))
                            }
                            other => other,
                        };
                    }
                }
            }
            let Some((pr, pc)) = pivot else { break };
            a.swap_rows(t, pr);
            a.swap_cols(t, pc);
            // clear row and column t
            let mut again = false;
            for r in t + 1..a.rows {
                if !a.entry(r, t).is_zero() {
                    let q = a.entry(r, t).div_floor(a.entry(t, t));
                    a.row_axpy(r, t, &q);
                    if !a.entry(r, t).is_zero() {
                        again = true;
                    }
                }
            }
            for c in t + 1..a.cols {
                if !a.entry(t, c).is_zero() {
                    let q = a.entry(t, c).div_floor(a.entry(t, t));
                    a.col_axpy(c, t, &q);
                    if !a.entry(t, c).is_zero() {
                        again = true;
                    }
                }
            }
            if again {
                continue 'outer;
            }
            // enforce divisibility of the remaining block by the pivot
            for r in t + 1..a.rows {
                for c in t + 1..a.cols {
                    if !(a.entry(r, c) % a.entry(t, t)).is_zero() {
                        // add row r to row t and restart this slot
                        let one = BigInt::from(-1);
                        a.row_axpy(t, r, &one);
                        continue 'outer;
                    }
                }
            }
            t += 1;
        }
        (0..n).map(|i| a.entry(i, i).abs()).collect()
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// col[dst] -= q * col[src]
    fn col_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let delta = q * self.entry(r, src);
            *self.entry_mut(r, dst) -= delta;
        }
    }

    /// The abelian group `Z^cols / rowspace(self)` with canonical coset data.
    pub fn quotient(&self) -> AbelianQuotient {
        AbelianQuotient::new(self)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entry(r, c))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix{self}")
    }
}

/// `Z^n` modulo an integer relation matrix, with the Hermite normal form,
/// invariant factors, and a canonical mixed-radix representative map.
#[derive(Clone, Debug)]
pub struct AbelianQuotient {
    rank: usize,
    hnf: IntMatrix,
    pivots: Vec<BigInt>,
    order: Option<BigInt>,
    invariant_factors: Vec<BigInt>,
}

impl AbelianQuotient {
    fn new(relations: &IntMatrix) -> Self {
        let rank = relations.cols();
        let hnf = relations.hermite_form();
        // Finite iff the staircase is exactly the diagonal with positive pivots.
        let mut pivots = Vec::with_capacity(rank);
        for i in 0..rank {
            if i < hnf.rows() && !hnf.entry(i, i).is_zero() {
                pivots.push(hnf.entry(i, i).clone());
            } else {
                pivots.push(BigInt::zero());
            }
        }
        let order = if pivots.iter().all(|p| p.is_positive()) {
            Some(pivots.iter().product())
        } else {
            None
        };
        let invariant_factors = relations.smith_invariants();
        AbelianQuotient {
            rank,
            hnf,
            pivots,
            order,
            invariant_factors,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn hermite(&self) -> &IntMatrix {
        &self.hnf
    }

    pub fn pivots(&self) -> &[BigInt] {
        &self.pivots
    }

    pub fn is_finite(&self) -> bool {
        self.order.is_some()
    }

    pub fn order(&self) -> Option<&BigInt> {
        self.order.as_ref()
    }

    pub fn order_usize(&self) -> Option<usize> {
        self.order.as_ref().and_then(|o| usize::try_from(o).ok())
    }

    /// Invariant factor chain of the relation matrix (Smith form diagonal).
    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    /// Canonical representative tuple of a vector: each coordinate reduced
    /// into `[0, pivot)` by the Hermite rows. Requires a finite quotient.
    pub fn reduce(&self, v: &[i64]) -> Vec<i64> {
        debug_assert!(self.is_finite(), "reduce needs a finite quotient");
        debug_assert_eq!(v.len(), self.rank);
        let mut w: Vec<BigInt> = v.iter().map(|&x| bi(x)).collect();
        for i in 0..self.rank {
            let q = w[i].div_floor(&self.pivots[i]);
            if !q.is_zero() {
                for c in i..self.rank {
                    let delta = &q * self.hnf.entry(i, c);
                    w[c] -= delta;
                }
            }
        }
        w.iter()
            .map(|x| i64::try_from(x).expect("representative coordinate fits i64"))
            .collect()
    }

    pub fn is_kernel(&self, v: &[i64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// All representative tuples in mixed-radix order (first coordinate
    /// outermost). Returns `None` for infinite quotients.
    pub fn rep_tuples(&self) -> Option<Vec<Vec<i64>>> {
        let order = self.order_usize()?;
        let radix: Vec<i64> = self
            .pivots
            .iter()
            .map(|p| i64::try_from(p).expect("pivot fits i64"))
            .collect();
        let mut out = Vec::with_capacity(order);
        let mut cur = vec![0i64; self.rank];
        loop {
            out.push(cur.clone());
            let mut i = self.rank;
            loop {
                if i == 0 {
                    return Some(out);
                }
                i -= 1;
                cur[i] += 1;
                if cur[i] < radix[i] {
                    break;
                }
                cur[i] = 0;
            }
        }
    }

    /// Index of a representative tuple in the [`Self::rep_tuples`] order.
    pub fn linearize(&self, tuple: &[i64]) -> usize {
        let mut idx = 0usize;
        for (i, &e) in tuple.iter().enumerate() {
            let p = i64::try_from(&self.pivots[i]).expect("pivot fits i64");
            idx = idx * (p as usize) + (e as usize);
        }
        idx
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hermite_fixtures() {
        let m = IntMatrix::from_i64(&[&[1, -4], &[-3, 7]]);
        assert_eq!(m.hermite_form(), IntMatrix::from_i64(&[&[1, 1], &[0, 5]]));
        let m = IntMatrix::from_i64(&[&[1, -4], &[-3, 8]]);
        assert_eq!(m.hermite_form(), IntMatrix::from_i64(&[&[1, 0], &[0, 4]]));
        let id = IntMatrix::identity(3);
        assert_eq!(id.hermite_form(), id);
    }

    #[test]
    fn hermite_transform_is_unimodular() {
        let m = IntMatrix::from_i64(&[&[2, -5], &[-4, 13]]);
        let (h, u) = m.hermite_with_transform();
        assert_eq!(u.determinant().unwrap().abs(), bi(1));
        // u * m == h
        let mut prod = IntMatrix::zeros(2, 2);
        for r in 0..2 {
            for c in 0..2 {
                let mut s = BigInt::zero();
                for k in 0..2 {
                    s += u.entry(r, k) * m.entry(k, c);
                }
                *prod.entry_mut(r, c) = s;
            }
        }
        assert_eq!(prod, h);
        assert_eq!(h.hermite_form(), h, "idempotent");
    }

    #[test]
    fn determinant_fixtures() {
        assert_eq!(
            IntMatrix::from_i64(&[&[1, -3], &[-2, 6]]).determinant().unwrap(),
            bi(0)
        );
        assert_eq!(
            IntMatrix::from_i64(&[&[1, -4], &[-3, 7]]).determinant().unwrap(),
            bi(-5)
        );
        assert_eq!(IntMatrix::identity(4).determinant().unwrap(), bi(1));
        assert!(IntMatrix::zeros(2, 3).determinant().is_err());
    }

    #[test]
    fn quotient_examples() {
        let q = IntMatrix::from_i64(&[&[2, 0], &[0, 1]]).quotient();
        assert_eq!(q.order(), Some(&bi(2)));
        assert_eq!(q.rep_tuples().unwrap(), vec![vec![0, 0], vec![1, 0]]);

        let q = IntMatrix::from_i64(&[&[1, 1], &[0, 5]]).quotient();
        assert_eq!(q.order(), Some(&bi(5)));
        assert_eq!(q.rep_tuples().unwrap().len(), 5);

        let q = IntMatrix::zeros(2, 2).quotient();
        assert!(!q.is_finite());
        assert_eq!(q.order(), None);
    }

    #[test]
    fn quotient_reduce_is_canonical() {
        let q = IntMatrix::from_i64(&[&[1, 1], &[0, 5]]).quotient();
        // a == b^-1 == b^4 in the quotient
        assert_eq!(q.reduce(&[1, 0]), vec![0, 4]);
        assert_eq!(q.reduce(&[0, 5]), vec![0, 0]);
        assert!(q.is_kernel(&[1, -4]));
        for (i, t) in q.rep_tuples().unwrap().iter().enumerate() {
            assert_eq!(q.linearize(t), i);
        }
    }

    #[test]
    fn smith_examples() {
        let s_plus = IntMatrix::from_i64(&[&[1, -4], &[-3, 7]]);
        let s_minus = s_plus.transpose();
        assert_eq!(s_plus.smith_invariants(), s_minus.smith_invariants());
        assert_eq!(
            IntMatrix::from_i64(&[&[2, 0], &[0, 2]]).smith_invariants(),
            vec![bi(2), bi(2)]
        );
        assert_eq!(
            IntMatrix::from_i64(&[&[3, 1], &[2, 1]]).smith_invariants(),
            vec![bi(1), bi(1)],
            "determinant ±1 gives trivial invariants"
        );
    }

    #[test]
    fn smith_divisor_chain() {
        let m = IntMatrix::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]);
        let inv = m.smith_invariants();
        for w in inv.windows(2) {
            if !w[1].is_zero() {
                assert!((&w[1] % &w[0]).is_zero(), "chain {inv:?}");
            }
        }
        let det = m.determinant().unwrap().abs();
        let prod: BigInt = inv.iter().product();
        assert_eq!(prod, det);
    }

    #[test]
    fn pivot_product_matches_determinant() {
        let m = IntMatrix::from_i64(&[&[4, -7], &[-6, 13]]);
        let h = m.hermite_form();
        let prod = h.entry(0, 0) * h.entry(1, 1);
        assert_eq!(prod, m.determinant().unwrap().abs());
    }
}
