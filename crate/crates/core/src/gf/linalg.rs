//! Dense matrices over [`FiniteField`] with exact row reduction.

use std::fmt;

use super::{Fe, FiniteField};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FiniteField,
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

impl Matrix {
    pub fn zeros(field: &FiniteField, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![Fe::ZERO; rows * cols],
        }
    }

    pub fn from_rows(field: &FiniteField, cols: usize, rows: Vec<Vec<Fe>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r);
        }
        Matrix {
            field: field.clone(),
            rows: n,
            cols,
            data,
        }
    }

    pub fn identity(field: &FiniteField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Fe::ONE);
        }
        m
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Fe {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Fe) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Fe] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Fe]> {
        self.data.chunks(self.cols.max(1)).take(self.rows)
    }

    pub fn to_rows(&self) -> Vec<Vec<Fe>> {
        self.row_iter().map(<[Fe]>::to_vec).collect()
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    /// Reduced row-echelon form with zero rows dropped, plus the pivot columns.
    /// Pivots are leftmost, scaled to one, and cleared above and below.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = f.inv(m.get(r, c)).expect("nonzero pivot");
            for j in c..m.cols {
                let v = f.mul(m.get(r, j), inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.data.truncate(r * m.cols);
        m.rows = r;
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Basis (as rows, in RREF) of `{ x : self * x^T = 0 }`.
    pub fn nullspace(&self) -> Matrix {
        let f = &self.field;
        let (red, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let rows = free
            .iter()
            .map(|&fc| {
                let mut v = vec![Fe::ZERO; self.cols];
                v[fc] = Fe::ONE;
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(red.get(i, fc));
                }
                v
            })
            .collect();
        Matrix::from_rows(f, self.cols, rows).rref().0
    }

    /// Whether `v` lies in the row space of this matrix, which must already be in RREF.
    pub fn rref_contains(&self, pivots: &[usize], v: &[Fe]) -> bool {
        let f = &self.field;
        let mut w = v.to_vec();
        for (i, &pc) in pivots.iter().enumerate() {
            let c = w[pc];
            if c.is_zero() {
                continue;
            }
            for (j, wj) in w.iter_mut().enumerate() {
                *wj = f.sub(*wj, f.mul(c, self.get(i, j)));
            }
        }
        w.iter().all(|a| a.is_zero())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} over {}", self.rows, self.cols, self.field)?;
        for row in self.row_iter() {
            let cells: Vec<String> = row.iter().map(|&a| self.field.format(a)).collect();
            writeln!(f, "  [{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(f: &FiniteField, rows: &[&[i64]]) -> Matrix {
        let cols = rows[0].len();
        Matrix::from_rows(
            f,
            cols,
            rows.iter().map(|r| r.iter().map(|&v| f.from_int(v)).collect()).collect(),
        )
    }

    #[test]
    fn rref_is_canonical() {
        let f = FiniteField::new(3, 1).unwrap();
        let a = ints(&f, &[&[1, 2, 0, 1], &[2, 1, 1, 0], &[0, 0, 1, 1]]);
        let b = ints(&f, &[&[0, 0, 1, 1], &[1, 2, 1, 2], &[1, 2, 0, 1]]);
        let (ra, pa) = a.rref();
        assert_eq!(ra, b.rref().0);
        assert_eq!(pa, vec![0, 2]);
        assert_eq!(ra, ints(&f, &[&[1, 2, 0, 1], &[0, 0, 1, 1]]));
    }

    #[test]
    fn nullspace_is_orthogonal_and_complementary() {
        let f = FiniteField::new(5, 1).unwrap();
        let a = ints(&f, &[&[1, 2, 3, 4, 0], &[0, 1, 1, 1, 1]]);
        let ns = a.nullspace();
        assert_eq!(ns.rows() + a.rank(), 5);
        assert!(a.mul(&ns.transpose()).is_zero());
    }

    #[test]
    fn membership() {
        let f = FiniteField::new(2, 1).unwrap();
        let (r, p) = ints(&f, &[&[1, 1, 0], &[0, 1, 1]]).rref();
        assert!(r.rref_contains(&p, &[f.from_int(1), Fe::ZERO, f.from_int(1)]));
        assert!(!r.rref_contains(&p, &[f.from_int(1), Fe::ZERO, Fe::ZERO]));
    }

    #[test]
    fn empty_matrix() {
        let f = FiniteField::new(2, 1).unwrap();
        let z = Matrix::zeros(&f, 0, 4);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.nullspace(), Matrix::identity(&f, 4));
    }
}
