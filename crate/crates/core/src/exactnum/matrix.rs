//! Dense matrices over `ℚ(ξ)` with exact Gaussian elimination.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::{int, CycElem};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycMatrix {
    rows: usize,
    cols: usize,
    order: usize,
    data: Vec<CycElem>,
}

impl CycMatrix {
    pub fn zero(rows: usize, cols: usize, order: usize) -> Self {
        CycMatrix {
            rows,
            cols,
            order,
            data: vec![CycElem::zero(order); rows * cols],
        }
    }

    pub fn identity(n: usize, order: usize) -> Self {
        let mut m = Self::zero(n, n, order);
        for i in 0..n {
            m.set(i, i, CycElem::one(order));
        }
        m
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        order: usize,
        mut f: impl FnMut(usize, usize) -> CycElem,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let e = f(i, j);
                assert_eq!(e.order(), order, "entry order mismatch");
                data.push(e);
            }
        }
        CycMatrix {
            rows,
            cols,
            order,
            data,
        }
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, order: usize, columns: &[Vec<CycElem>]) -> Self {
        Self::from_fn(rows, columns.len(), order, |i, j| columns[j][i].clone())
    }

    pub fn diagonal(entries: &[CycElem], order: usize) -> Self {
        let mut m = Self::zero(entries.len(), entries.len(), order);
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &CycElem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: CycElem) {
        assert_eq!(value.order(), self.order, "entry order mismatch");
        self.data[i * self.cols + j] = value;
    }

    pub fn column(&self, j: usize) -> Vec<CycElem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row(&self, i: usize) -> &[CycElem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycElem::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rows, self.order)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn diagonal_entries(&self) -> Vec<CycElem> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, self.order, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &CycElem) -> Self {
        CycMatrix {
            rows: self.rows,
            cols: self.cols,
            order: self.order,
            data: self.data.iter().map(|e| e * c).collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        assert_eq!(self.rows, self.cols, "power of a non-square matrix");
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows, self.order);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    pub fn mul_vec(&self, v: &[CycElem]) -> Vec<CycElem> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = CycElem::zero(self.order);
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// Block-diagonal sum of `blocks`.
    pub fn direct_sum(blocks: &[CycMatrix], order: usize) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let mut m = Self::zero(n, n, order);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, b.cols, "direct sum of non-square blocks");
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.set(off + i, off + j, b.get(i, j).clone());
                }
            }
            off += b.rows;
        }
        m
    }

    /// Reduced row echelon form; returns the pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&i| !self.get(i, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, row * self.cols + j);
                }
            }
            let inv = self.get(row, col).inv().expect("nonzero pivot");
            for j in col..self.cols {
                let v = self.get(row, j) * &inv;
                self.set(row, j, v);
            }
            for i in 0..self.rows {
                if i == row || self.get(i, col).is_zero() {
                    continue;
                }
                let factor = self.get(i, col).clone();
                for j in col..self.cols {
                    if self.get(row, j).is_zero() {
                        continue;
                    }
                    let v = self.get(i, j) - &(&factor * self.get(row, j));
                    self.set(i, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right null space, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<CycElem>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![CycElem::zero(self.order); self.cols];
                v[f] = CycElem::one(self.order);
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -m.get(r, f);
                }
                v
            })
            .collect()
    }

    /// Coefficients `c_0, ..., c_n` (constant term first, `c_n = 1`) of
    /// `det(t I - A)`, computed by the Faddeev-LeVerrier recursion.
    pub fn charpoly(&self) -> Vec<CycElem> {
        assert_eq!(self.rows, self.cols, "characteristic polynomial of a non-square matrix");
        let n = self.rows;
        let mut coeffs = vec![CycElem::zero(self.order); n + 1];
        coeffs[n] = CycElem::one(self.order);
        let mut m = Self::zero(n, n, self.order);
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k
            let mut next = self * &m;
            for i in 0..n {
                let v = next.get(i, i) + &coeffs[n - k + 1];
                next.set(i, i, v);
            }
            let am = self * &next;
            let mut tr = CycElem::zero(self.order);
            for i in 0..n {
                tr += am.get(i, i);
            }
            coeffs[n - k] = -tr.scale(&int(k as i64).recip());
            m = next;
        }
        coeffs
    }
}

impl<'a> Mul<&'a CycMatrix> for &'a CycMatrix {
    type Output = CycMatrix;
    fn mul(self, rhs: &CycMatrix) -> CycMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix shape mismatch");
        assert_eq!(self.order, rhs.order, "matrix order mismatch");
        let mut out = CycMatrix::zero(self.rows, rhs.cols, self.order);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += &(a * b);
                    }
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a CycMatrix> for &'a CycMatrix {
    type Output = CycMatrix;
    fn add(self, rhs: &CycMatrix) -> CycMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shape mismatch");
        CycMatrix {
            rows: self.rows,
            cols: self.cols,
            order: self.order,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a CycMatrix> for &'a CycMatrix {
    type Output = CycMatrix;
    fn sub(self, rhs: &CycMatrix) -> CycMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shape mismatch");
        CycMatrix {
            rows: self.rows,
            cols: self.cols,
            order: self.order,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Debug for CycMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CycMatrix {}x{} (r={})", self.rows, self.cols, self.order)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Serialized as a list of rows of [`CycElem`] objects.
impl Serialize for CycMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.rows))?;
        for i in 0..self.rows {
            seq.serialize_element(self.row(i))?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational;
    use num_traits::Zero;

    fn eval_int_poly(coeffs: &[CycElem], t: i64) -> CycElem {
        let mut acc = CycElem::zero(coeffs[0].order());
        for c in coeffs.iter().rev() {
            acc = &acc.scale(&int(t)) + c;
        }
        acc
    }

    fn m(rows: &[&[i64]]) -> CycMatrix {
        CycMatrix::from_fn(rows.len(), rows[0].len(), 1, |i, j| {
            CycElem::from_int(1, rows[i][j])
        })
    }

    #[test]
    fn kernel_of_rank_one() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(a.rank(), 1);
        let ker = a.kernel();
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(a.mul_vec(v).iter().all(CycElem::is_zero));
        }
    }

    #[test]
    fn kernel_over_cyclotomic_field() {
        let r = 3;
        let x = CycElem::root_power(r, 1).unwrap();
        let one = CycElem::one(r);
        // [[1, x], [x^2, 1]] has rank 1 since x * x^2 = 1.
        let a = CycMatrix::from_fn(2, 2, r, |i, j| match (i, j) {
            (0, 1) => x.clone(),
            (1, 0) => x.pow(2),
            _ => one.clone(),
        });
        let ker = a.kernel();
        assert_eq!(ker.len(), 1);
        assert!(a.mul_vec(&ker[0]).iter().all(CycElem::is_zero));
    }

    #[test]
    fn charpoly_small() {
        // [[2, 1], [0, 3]] -> t^2 - 5t + 6
        let a = m(&[&[2, 1], &[0, 3]]);
        let cp = a.charpoly();
        let ints: Vec<i64> = cp.iter().map(|c| c.to_i64().unwrap()).collect();
        assert_eq!(ints, vec![6, -5, 1]);
        assert!(eval_int_poly(&cp, 2).is_zero());
        assert!(eval_int_poly(&cp, 3).is_zero());
    }

    #[test]
    fn charpoly_with_fractions() {
        let a = CycMatrix::diagonal(
            &[
                CycElem::from_rational(1, rational(1, 2)),
                CycElem::from_rational(1, rational(-1, 3)),
            ],
            1,
        );
        let cp = a.charpoly();
        assert_eq!(cp[0].to_rational().unwrap(), rational(-1, 6));
        assert_eq!(cp[1].to_rational().unwrap(), rational(-1, 6));
        assert!(cp[2].is_one());
        assert!(!cp[1].coeffs()[0].is_zero());
    }

    #[test]
    fn powers_and_products() {
        let s = m(&[&[0, 1], &[1, 0]]);
        assert!(s.pow(2).is_identity());
        assert_eq!(&s * &CycMatrix::identity(2, 1), s);
        assert!((&s - &s).is_zero());
        assert_eq!(s.transpose(), s);
    }
}
