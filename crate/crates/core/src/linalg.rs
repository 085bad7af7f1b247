//! Dense exact matrices, fraction-free rank and kernels.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::{format_q, Q};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Matrix {
        Matrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| Q::from_integer(x.into())).collect()).collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Q> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Q) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Columns of `self` followed by columns of `other`.
    pub fn hconcat(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut out = Matrix::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn vconcat(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn rank(&self) -> usize {
        echelon(self).pivots.len()
    }

    /// A basis of the right kernel. Each vector is a primitive integer vector
    /// whose first non-zero entry is positive.
    pub fn kernel(&self) -> Vec<Vec<Q>> {
        let e = echelon(self);
        let free: Vec<usize> = (0..self.cols).filter(|c| !e.pivots.contains(c)).collect();
        let mut out = Vec::with_capacity(free.len());
        for &f in &free {
            let mut x = vec![Q::zero(); self.cols];
            x[f] = Q::one();
            for (r, &pc) in e.pivots.iter().enumerate().rev() {
                let row = &e.rows[r];
                let mut s = Q::zero();
                for j in pc + 1..self.cols {
                    if !row[j].is_zero() && !x[j].is_zero() {
                        s += Q::from_integer(row[j].clone()) * &x[j];
                    }
                }
                x[pc] = -s / Q::from_integer(row[pc].clone());
            }
            out.push(primitive(x));
        }
        out
    }

    /// Rows as canonical rational strings.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| self.row(i).iter().map(format_q).collect()).collect()
    }
}

struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

/// Fraction-free (Bareiss) row echelon form. Rows are first scaled to
/// integers; every division below is exact.
fn echelon(m: &Matrix) -> Echelon {
    let mut a: Vec<Vec<BigInt>> = (0..m.rows)
        .map(|i| {
            let row = m.row(i);
            let l = row.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            row.iter().map(|x| (x * Q::from_integer(l.clone())).to_integer()).collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let piv = pivot_row[c].clone();
        for row in rest.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..m.cols {
                let v = &piv * &row[j] - &lead * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    Echelon { rows: a, pivots }
}

fn primitive(x: Vec<Q>) -> Vec<Q> {
    let l = x.iter().fold(BigInt::one(), |l, v| l.lcm(v.denom()));
    let ints: Vec<BigInt> = x.iter().map(|v| (v * Q::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, v| g.gcd(v));
    let sign = match ints.iter().find(|v| !v.is_zero()) {
        Some(v) if v.is_negative() => -BigInt::one(),
        _ => BigInt::one(),
    };
    if g.is_zero() {
        return x;
    }
    ints.into_iter().map(|v| Q::from_integer(v * &sign / &g)).collect()
}

/// Rank of a family of vectors given as rows.
pub fn rank_of_rows(rows: &[Vec<Q>], cols: usize) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut m = Matrix::zeros(rows.len(), cols);
    for (i, r) in rows.iter().enumerate() {
        for (j, v) in r.iter().enumerate() {
            m.set(i, j, v.clone());
        }
    }
    m.rank()
}

/// Indices of a maximal independent subfamily, chosen greedily in order.
pub fn independent_subset(vectors: &[Vec<Q>], dim: usize) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        rows.push(v.clone());
        if rank_of_rows(&rows, dim) == chosen.len() + 1 {
            chosen.push(i);
        } else {
            rows.pop();
        }
    }
    chosen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn basic_ranks() {
        let id = Matrix::identity(3);
        assert_eq!(id.rank(), 3);
        assert!(id.kernel().is_empty());
        let z = Matrix::zeros(2, 5);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.kernel().len(), 5);
        let m = Matrix::from_i64(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.kernel(), vec![vec![q(2), q(-1)]]);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = Matrix::from_i64(&[vec![1, 2, 3, 4], vec![2, 4, 6, 8], vec![0, 1, -1, 2]]);
        let k = m.kernel();
        assert_eq!(m.rank() + k.len(), 4);
        for v in k {
            let col = Matrix::from_rows(v.into_iter().map(|x| vec![x]).collect());
            assert!(m.mul(&col).is_zero());
        }
    }

    #[test]
    fn rational_entries() {
        let m = Matrix::from_rows(vec![
            vec![crate::rational::frac(1, 2), crate::rational::frac(1, 3)],
            vec![q(3), q(2)],
        ]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn independent_subsets() {
        let v = vec![vec![q(1), q(0)], vec![q(2), q(0)], vec![q(0), q(1)]];
        assert_eq!(independent_subset(&v, 2), vec![0, 2]);
    }
}
