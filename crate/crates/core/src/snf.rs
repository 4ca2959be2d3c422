//! Exact Smith normal form over the integers.
//!
//! [`smith_normal_form`] is the dense reference reduction with recorded
//! unimodular transforms. [`sparse_invariants`] serves the homology engine:
//! it eliminates on unit pivots in a sparse representation and hands the
//! (usually tiny) remainder to the dense routine.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Dense integer matrix in row-major order with arbitrary-precision entries.
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
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows<T: Into<BigInt> + Copy>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix rows");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().map(|&x| x.into()).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row[dst] += factor * row[src]`
    fn add_row(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let s = self.data[src * self.cols + j].clone();
            if !s.is_zero() {
                self.data[dst * self.cols + j] += factor * s;
            }
        }
    }

    /// `col[dst] += factor * col[src]`
    fn add_col(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let s = self.data[i * self.cols + src].clone();
            if !s.is_zero() {
                self.data[i * self.cols + dst] += factor * s;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = &mut self.data[i * self.cols + j];
            *v = -std::mem::take(v);
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        write!(f, "IntMatrix{rows:?}")
    }
}

/// Result of a dense Smith reduction: `left * input * right = diagonal`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub diagonal: IntMatrix,
    pub left: IntMatrix,
    pub right: IntMatrix,
    /// Nonzero invariant factors `d_1 | d_2 | ... | d_r`, all positive.
    pub divisors: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.divisors.len()
    }
}

/// Dense Smith normal form by row and column reduction, keeping the
/// unimodular transforms.
pub fn smith_normal_form(input: &IntMatrix) -> SmithForm {
    let mut a = input.clone();
    let mut left = IntMatrix::identity(a.rows);
    let mut right = IntMatrix::identity(a.cols);
    let limit = a.rows.min(a.cols);
    let mut t = 0;
    while t < limit {
        let Some((pi, pj)) = min_nonzero(&a, t, |_, _| true) else {
            break;
        };
        a.swap_rows(t, pi);
        left.swap_rows(t, pi);
        a.swap_cols(t, pj);
        right.swap_cols(t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..a.rows {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = -(a.get(i, t) / a.get(t, t));
                a.add_row(i, t, &q);
                left.add_row(i, t, &q);
                clean &= a.get(i, t).is_zero();
            }
            for j in t + 1..a.cols {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = -(a.get(t, j) / a.get(t, t));
                a.add_col(j, t, &q);
                right.add_col(j, t, &q);
                clean &= a.get(t, j).is_zero();
            }
            if !clean {
                // A remainder smaller than the pivot survived; move it in.
                let (pi, pj) = min_nonzero(&a, t, |i, j| i == t || j == t).expect("nonzero remains");
                a.swap_rows(t, pi);
                left.swap_rows(t, pi);
                a.swap_cols(t, pj);
                right.swap_cols(t, pj);
                continue;
            }
            let pivot = a.get(t, t).clone();
            let offender = (t + 1..a.rows).find(|&i| (t + 1..a.cols).any(|j| !a.get(i, j).is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    a.add_row(t, i, &BigInt::one());
                    left.add_row(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            left.negate_row(t);
        }
        t += 1;
    }
    let divisors = (0..limit)
        .map(|i| a.get(i, i).clone())
        .take_while(|d| !d.is_zero())
        .collect();
    SmithForm {
        diagonal: a,
        left,
        right,
        divisors,
    }
}

fn min_nonzero(a: &IntMatrix, t: usize, keep: impl Fn(usize, usize) -> bool) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in t..a.rows {
        for j in t..a.cols {
            let v = a.get(i, j);
            if v.is_zero() || !keep(i, j) {
                continue;
            }
            let mag = v.abs();
            if best.as_ref().is_none_or(|(_, b)| mag < *b) {
                let unit = mag.is_one();
                best = Some(((i, j), mag));
                if unit {
                    return best.map(|(p, _)| p);
                }
            }
        }
    }
    best.map(|(p, _)| p)
}

/// Rank and invariant factors greater than one.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Invariants {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

/// Ring operations the sparse eliminator needs.
trait Coeff: Clone + PartialEq {
    fn from_i64(v: i64) -> Self;
    fn vanishes(&self) -> bool;
    fn is_unit(&self) -> bool;
    /// `self - factor * other`, or `None` on overflow.
    fn sub_mul(&self, factor: &Self, other: &Self) -> Option<Self>;
    fn times(&self, other: &Self) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl Coeff for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn vanishes(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn sub_mul(&self, factor: &Self, other: &Self) -> Option<Self> {
        self.checked_sub(factor.checked_mul(*other)?)
    }
    fn times(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Coeff for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn sub_mul(&self, factor: &Self, other: &Self) -> Option<Self> {
        Some(self - factor * other)
    }
    fn times(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Rank and torsion of a sparse integer matrix given as a list of sparse
/// vectors `(index, value)` sorted by index. Whether the vectors are rows or
/// columns does not matter: both invariants survive transposition.
pub fn sparse_invariants(vectors: &[Vec<(usize, i64)>], width: usize) -> Invariants {
    if let Some(inv) = eliminate::<i64>(vectors, width) {
        return inv;
    }
    eliminate::<BigInt>(vectors, width).expect("bigint arithmetic cannot overflow")
}

fn eliminate<T: Coeff>(input: &[Vec<(usize, i64)>], width: usize) -> Option<Invariants> {
    let mut rows: Vec<Vec<(usize, T)>> = input
        .iter()
        .map(|r| {
            r.iter()
                .filter(|(_, v)| *v != 0)
                .map(|&(c, v)| (c, T::from_i64(v)))
                .collect()
        })
        .collect();
    let mut alive = vec![true; rows.len()];
    let mut by_col: Vec<Vec<usize>> = vec![Vec::new(); width];
    for (r, row) in rows.iter().enumerate() {
        for &(c, _) in row {
            by_col[c].push(r);
        }
    }
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.sort_by_key(|&r| rows[r].len());
    let mut rank = 0;
    loop {
        let mut progressed = false;
        for &r in &order {
            if !alive[r] {
                continue;
            }
            if rows[r].is_empty() {
                alive[r] = false;
                continue;
            }
            let Some((c, unit)) = rows[r]
                .iter()
                .filter(|(_, v)| v.is_unit())
                .min_by_key(|(c, _)| by_col[*c].len())
                .map(|(c, v)| (*c, v.clone()))
            else {
                continue;
            };
            let pivot_row = std::mem::take(&mut rows[r]);
            alive[r] = false;
            let touched = std::mem::take(&mut by_col[c]);
            for i in touched {
                if !alive[i] {
                    continue;
                }
                let Ok(pos) = rows[i].binary_search_by_key(&c, |(col, _)| *col) else {
                    continue;
                };
                // unit^-1 == unit
                let factor = rows[i][pos].1.times(&unit)?;
                let (merged, fresh) = sub_scaled(&rows[i], &factor, &pivot_row)?;
                rows[i] = merged;
                for col in fresh {
                    by_col[col].push(i);
                }
            }
            rank += 1;
            progressed = true;
        }
        if !progressed {
            break;
        }
    }
    // Dense Smith form on what survived.
    let rest: Vec<&Vec<(usize, T)>> = rows
        .iter()
        .zip(&alive)
        .filter(|(row, &a)| a && !row.is_empty())
        .map(|(row, _)| row)
        .collect();
    let mut torsion = Vec::new();
    if !rest.is_empty() {
        let mut cols: Vec<usize> = rest.iter().flat_map(|r| r.iter().map(|(c, _)| *c)).collect();
        cols.sort_unstable();
        cols.dedup();
        let mut dense = IntMatrix::zeros(rest.len(), cols.len());
        for (i, row) in rest.iter().enumerate() {
            for (c, v) in row.iter() {
                let j = cols.binary_search(c).expect("column collected");
                dense.set(i, j, v.to_big());
            }
        }
        let snf = smith_normal_form(&dense);
        rank += snf.rank();
        torsion.extend(snf.divisors.into_iter().filter(|d| !d.is_one()));
    }
    Some(Invariants { rank, torsion })
}

type SparseVec<T> = Vec<(usize, T)>;

/// `a - factor * b` for sorted sparse vectors, plus the columns new to `a`.
fn sub_scaled<T: Coeff>(a: &[(usize, T)], factor: &T, b: &[(usize, T)]) -> Option<(SparseVec<T>, Vec<usize>)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut fresh = Vec::new();
    let (mut i, mut j) = (0, 0);
    let zero = T::from_i64(0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map_or(usize::MAX, |e| e.0);
        let cb = b.get(j).map_or(usize::MAX, |e| e.0);
        if ca < cb {
            out.push(a[i].clone());
            i += 1;
        } else if cb < ca {
            let v = zero.sub_mul(factor, &b[j].1)?;
            if !v.vanishes() {
                out.push((cb, v));
                fresh.push(cb);
            }
            j += 1;
        } else {
            let v = a[i].1.sub_mul(factor, &b[j].1)?;
            if !v.vanishes() {
                out.push((ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    Some((out, fresh))
}

/// Converts an invariant factor to `u64`; homology of desk-scale complexes
/// never produces larger torsion.
pub(crate) fn small(d: &BigInt) -> u64 {
    d.to_u64().expect("torsion coefficient exceeds u64")
}
