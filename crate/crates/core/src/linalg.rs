//! Exact rational scalars and dense matrices.
//!
//! Rank goes through fraction-free (Bareiss) elimination on a
//! denominator-cleared integer copy; kernels and linear solves use rational
//! Gauss-Jordan. Every operation is exact, so repeated runs give identical
//! entries.

use crate::error::Error;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

/// Scalars are arbitrary-precision rationals, always reduced, denominator > 0.
pub type Rat = num_rational::BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Renders `p/q`, or just `p` when the denominator is one.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` with a nonzero `q`.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    match s.split_once('/') {
        None => {
            let n = BigInt::from_str(s).map_err(|_| Error::Parse(format!("bad integer `{s}`")))?;
            Ok(Rat::from_integer(n))
        }
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim())
                .map_err(|_| Error::Parse(format!("bad numerator in `{s}`")))?;
            let q = BigInt::from_str(q.trim())
                .map_err(|_| Error::Parse(format!("bad denominator in `{s}`")))?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(Rat::new(p, q))
        }
    }
}

/// Dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| fmt_rat(self.at(r, c))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, entries: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Mat { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    pub fn from_cols(cols: Vec<Vec<Rat>>) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, |x| x.len());
        assert!(cols.iter().all(|x| x.len() == r), "ragged columns");
        let mut m = Mat::zero(r, c);
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut m = Mat::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn from_i64(rows: Vec<Vec<i64>>) -> Self {
        Mat::from_rows(rows.into_iter().map(|r| r.into_iter().map(rat).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &Rat) {
        let e = &mut self.entries[r * self.cols + c];
        *e = e.clone() + v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn col(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = Mat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        out.add_to(i, j, &(a * b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "vector length differs");
        let mut out = vec![Rat::zero(); self.rows];
        for i in 0..self.rows {
            let mut acc = Rat::zero();
            for k in 0..self.cols {
                let a = self.at(i, k);
                if !a.is_zero() && !v[k].is_zero() {
                    acc += a * &v[k];
                }
            }
            out[i] = acc;
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| self.at(i, j) + other.at(i, j))
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| self.at(i, j) - other.at(i, j))
    }

    pub fn scale(&self, s: &Rat) -> Mat {
        Mat::from_fn(self.rows, self.cols, |i, j| self.at(i, j) * s)
    }

    pub fn neg(&self) -> Mat {
        Mat::from_fn(self.rows, self.cols, |i, j| -self.at(i, j).clone())
    }

    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        Mat::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols { self.at(i, j).clone() } else { other.at(i, j - self.cols).clone() }
        })
    }

    /// Rank over the rationals, by Bareiss fraction-free elimination on a
    /// denominator-cleared integer copy.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        // Clear denominators row by row; this does not change the rank.
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let mut l = BigInt::one();
                for j in 0..self.cols {
                    l = l.lcm(self.at(i, j).denom());
                }
                (0..self.cols)
                    .map(|j| {
                        let e = self.at(i, j);
                        e.numer() * (&l / e.denom())
                    })
                    .collect()
            })
            .collect();
        let mut rank = 0;
        let mut prev = BigInt::one();
        let mut row = 0;
        for col in 0..self.cols {
            // Smallest nonzero pivot keeps the intermediate entries modest.
            let pivot = (row..self.rows)
                .filter(|&i| !m[i][col].is_zero())
                .min_by_key(|&i| m[i][col].abs());
            let Some(p) = pivot else { continue };
            m.swap(row, p);
            for i in row + 1..self.rows {
                for j in col + 1..self.cols {
                    let num = &m[row][col] * &m[i][j] - &m[i][col] * &m[row][j];
                    m[i][j] = num / &prev;
                }
                m[i][col] = BigInt::zero();
            }
            prev = m[row][col].clone();
            row += 1;
            rank += 1;
            if row == self.rows {
                break;
            }
        }
        rank
    }

    /// Reduced row echelon form; returns the reduced matrix and pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            let Some(p) = (row..m.rows).find(|&i| !m.at(i, col).is_zero()) else { continue };
            for j in 0..m.cols {
                let a = m.at(row, j).clone();
                m.set(row, j, m.at(p, j).clone());
                m.set(p, j, a);
            }
            let inv = Rat::one() / m.at(row, col).clone();
            for j in col..m.cols {
                let v = m.at(row, j) * &inv;
                m.set(row, j, v);
            }
            for i in 0..m.rows {
                if i != row && !m.at(i, col).is_zero() {
                    let f = m.at(i, col).clone();
                    for j in col..m.cols {
                        let v = m.at(i, j) - &(&f * m.at(row, j));
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == m.rows {
                break;
            }
        }
        (m, pivots)
    }

    /// Columns form a basis of the kernel; column count = cols - rank.
    pub fn nullspace_basis(&self) -> Mat {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Mat::zero(self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            basis.set(fc, k, Rat::one());
            for (prow, &pc) in pivots.iter().enumerate() {
                basis.set(pc, k, -r.at(prow, fc).clone());
            }
        }
        basis
    }

    /// Solves `self * x = rhs` column by column. `None` if any column is
    /// inconsistent. Free variables are set to zero, so the solution is
    /// deterministic.
    pub fn solve(&self, rhs: &Mat) -> Option<Mat> {
        assert_eq!(self.rows, rhs.rows, "rhs height differs");
        let aug = self.hstack(rhs);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Mat::zero(self.cols, rhs.cols);
        for (prow, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pc, j, r.at(prow, self.cols + j).clone());
            }
        }
        Some(x)
    }

    /// The canonical basis of the column space: nonzero rows of the rref of
    /// the transpose, as columns. Deterministic and reduced.
    pub fn column_space_basis(&self) -> Mat {
        let (r, pivots) = self.transpose().rref();
        if pivots.is_empty() {
            return Mat::zero(self.rows, 0);
        }
        Mat::from_cols((0..pivots.len()).map(|i| (0..self.rows).map(|j| r.at(i, j).clone()).collect()).collect())
    }
}

/// dim ker(d_out) - rank(d_in), after checking d_out . d_in = 0 exactly.
pub fn cohomology_dim(d_in: &Mat, d_out: &Mat) -> Result<usize, Error> {
    if d_in.cols() > 0 && !d_out.mul(d_in).is_zero() {
        return Err(Error::CompositionNonzero);
    }
    let ker = d_out.cols() - d_out.rank();
    let im = d_in.rank();
    Ok(ker - im)
}

/// Cocycle representatives of ker(d_out) modulo im(d_in): a deterministic
/// completion of the image basis to a kernel basis.
pub fn cohomology_representatives(d_in: &Mat, d_out: &Mat) -> Result<Mat, Error> {
    if d_in.cols() > 0 && !d_out.mul(d_in).is_zero() {
        return Err(Error::CompositionNonzero);
    }
    let kernel = d_out.nullspace_basis();
    let image = d_in.column_space_basis();
    // Grow image ∪ {kernel columns} greedily; the added columns represent
    // a basis of the quotient.
    let mut span = image;
    let mut reps: Vec<Vec<Rat>> = Vec::new();
    let mut rank = span.rank();
    for j in 0..kernel.cols() {
        let cand = Mat::from_cols(vec![kernel.col(j)]);
        let grown = span.hstack(&cand);
        let r = grown.rank();
        if r > rank {
            reps.push(kernel.col(j));
            span = grown;
            rank = r;
        }
    }
    Ok(if reps.is_empty() {
        Mat::zero(d_out.cols(), 0)
    } else {
        Mat::from_cols(reps)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rank_basics() {
        assert_eq!(Mat::zero(3, 3).rank(), 0);
        assert_eq!(Mat::identity(3).rank(), 3);
        assert_eq!(Mat::from_i64(vec![vec![1, 2], vec![2, 4]]).rank(), 1);
    }

    #[test]
    fn nullspace_basics() {
        assert_eq!(Mat::identity(2).nullspace_basis().cols(), 0);
        let z = Mat::zero(2, 3);
        let n = z.nullspace_basis();
        assert_eq!(n.cols(), 3);
        assert_eq!(n.rank(), 3);
        let m = Mat::from_i64(vec![vec![1, 1]]);
        let n = m.nullspace_basis();
        assert_eq!(n.cols(), 1);
        assert!(m.mul(&n).is_zero());
        // (1,-1) up to scale
        assert_eq!(n.at(0, 0) + n.at(1, 0), Rat::zero());
    }

    #[test]
    fn cohomology_dim_examples() {
        // d_in : 0 -> Q^2, d_out : Q^2 -> 0
        let d_in = Mat::zero(2, 0);
        let d_out = Mat::zero(0, 2);
        assert_eq!(cohomology_dim(&d_in, &d_out).unwrap(), 2);
        // exact complex
        let d_in = Mat::identity(2);
        let d_out = Mat::zero(0, 2);
        assert_eq!(cohomology_dim(&d_in, &d_out).unwrap(), 0);
        // ker d_out = im d_in = span (1,0)
        let d_in = Mat::from_i64(vec![vec![1], vec![0]]);
        let d_out = Mat::from_i64(vec![vec![0, 1]]);
        assert_eq!(cohomology_dim(&d_in, &d_out).unwrap(), 0);
        // composition check
        let bad_in = Mat::from_i64(vec![vec![0], vec![1]]);
        assert_eq!(cohomology_dim(&bad_in, &d_out), Err(Error::CompositionNonzero));
    }

    #[test]
    fn solve_and_column_space() {
        let a = Mat::from_i64(vec![vec![1, 2], vec![3, 4]]);
        let rhs = Mat::from_i64(vec![vec![5], vec![11]]);
        let x = a.solve(&rhs).unwrap();
        assert_eq!(a.mul(&x), rhs);
        let inconsistent = Mat::from_i64(vec![vec![1, 1], vec![1, 1]]);
        let rhs = Mat::from_i64(vec![vec![0], vec![1]]);
        assert!(inconsistent.solve(&rhs).is_none());
    }

    #[test]
    fn rational_round_trip() {
        for s in ["3", "-7", "2/3", "-10/4"] {
            let r = parse_rat(s).unwrap();
            let t = parse_rat(&fmt_rat(&r)).unwrap();
            assert_eq!(r, t);
        }
        assert_eq!(fmt_rat(&parse_rat("-10/4").unwrap()), "-5/2");
        assert!(parse_rat("1/0").is_err());
    }

    fn small_mat() -> impl Strategy<Value = Mat> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-6i64..6, r * c).prop_map(move |vals| {
                let mut m = Mat::zero(r, c);
                for (k, v) in vals.into_iter().enumerate() {
                    m.set(k / c, k % c, rat(v));
                }
                m
            })
        })
    }

    proptest! {
        #[test]
        fn rank_equals_rank_of_transpose(m in small_mat()) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn rank_nullity(m in small_mat()) {
            let n = m.nullspace_basis();
            prop_assert!(m.mul(&n).is_zero());
            prop_assert_eq!(m.cols(), m.rank() + n.cols());
            // columns independent
            prop_assert_eq!(n.rank(), n.cols());
        }

        #[test]
        fn bareiss_agrees_with_rref(m in small_mat()) {
            let (_, pivots) = m.rref();
            prop_assert_eq!(m.rank(), pivots.len());
        }
    }
}
