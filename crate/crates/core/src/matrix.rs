//! Dense matrices over GF(2^m) with row reduction and kernels.

use crate::gf::{Field, Gf};

/// Row-major matrix of field elements. The field is supplied per operation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Gf>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Gf>) -> Self {
        assert_eq!(rows * cols, data.len(), "matrix data length");
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Gf::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Gf::ONE;
        }
        m
    }

    /// Stacks equal-length rows. An empty slice gives a 0 x `cols` matrix.
    pub fn from_rows<R: AsRef<[Gf]>>(cols: usize, rows: &[R]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "row length");
            data.extend_from_slice(r);
        }
        Matrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[Gf] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Gf] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Gf] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[Gf]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, field: &Field, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self[(i, l)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = field.mul(a, rhs[(l, j)]);
                    out[(i, j)] = field.add(out[(i, j)], prod);
                }
            }
        }
        out
    }

    /// Keeps the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            let row = self.row(i);
            data.extend(cols.iter().map(|&c| row[c]));
        }
        Matrix {
            rows: self.rows,
            cols: cols.len(),
            data,
        }
    }

    /// Vertical concatenation.
    pub fn stack(&self, below: &Matrix) -> Matrix {
        assert_eq!(self.cols, below.cols, "column counts");
        let mut data = self.data.clone();
        data.extend_from_slice(&below.data);
        Matrix {
            rows: self.rows + below.rows,
            cols: self.cols,
            data,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// In-place reduction to reduced row echelon form. Returns the pivot
    /// columns; their count is the rank and the remaining rows are zero.
    pub fn rref(&mut self, field: &Field) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = field.inv(self[(r, c)]).expect("pivot is nonzero");
            for x in self.row_mut(r) {
                *x = field.mul(*x, inv);
            }
            for i in 0..self.rows {
                let f = self[(i, c)];
                if i == r || f.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let sub = field.mul(f, self[(r, j)]);
                    self[(i, j)] = field.add(self[(i, j)], sub);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, field: &Field) -> usize {
        self.clone().rref(field).len()
    }

    /// RREF with zero rows dropped.
    pub fn row_space_basis(&self, field: &Field) -> Matrix {
        let mut m = self.clone();
        let rank = m.rref(field).len();
        m.data.truncate(rank * m.cols);
        m.rows = rank;
        m
    }

    /// Basis of {x : M x = 0}, one basis vector per row; `cols - rank` rows.
    pub fn right_kernel(&self, field: &Field) -> Matrix {
        let mut m = self.clone();
        let pivots = m.rref(field);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut kernel = Matrix::zeros(free.len(), self.cols);
        for (b, &f) in free.iter().enumerate() {
            kernel[(b, f)] = Gf::ONE;
            // x_pivot = -M[i][f], and negation is the identity in characteristic 2
            for (i, &p) in pivots.iter().enumerate() {
                kernel[(b, p)] = m[(i, f)];
            }
        }
        kernel
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Gf;

    fn index(&self, (i, j): (usize, usize)) -> &Gf {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Gf {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf4() -> Field {
        Field::new(2, 0b111).unwrap()
    }

    fn m(rows: usize, cols: usize, v: &[u16]) -> Matrix {
        Matrix::new(rows, cols, v.iter().map(|&x| Gf(x)).collect())
    }

    #[test]
    fn kernel_of_single_row() {
        let f = gf4();
        assert_eq!(m(1, 2, &[1, 1]).right_kernel(&f), m(1, 2, &[1, 1]));
        assert_eq!(Matrix::identity(3).right_kernel(&f).rows(), 0);
        let k = Matrix::zeros(1, 3).right_kernel(&f);
        assert_eq!(k.rows(), 3);
        assert_eq!(k.rank(&f), 3);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let f = gf4();
        let a = m(2, 4, &[1, 2, 3, 0, 2, 2, 1, 1]);
        let k = a.right_kernel(&f);
        assert_eq!(k.rows(), 4 - a.rank(&f));
        let prod = a.mul(&f, &k.transpose());
        assert!(prod.data().iter().all(|x| x.is_zero()));
    }

    #[test]
    fn rref_is_canonical() {
        let f = gf4();
        let a = m(2, 3, &[2, 1, 0, 1, 1, 1]);
        let b = m(2, 3, &[3, 0, 1, 1, 1, 1]); // row0 = a0 + a1
        assert_eq!(a.row_space_basis(&f), b.row_space_basis(&f));
    }
}
