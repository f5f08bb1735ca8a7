//! Dense Gauss-Jordan elimination over exact rationals.

use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// Square matrix of rationals, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalMatrix {
    dim: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(dim: usize) -> Self {
        RationalMatrix {
            dim,
            data: vec![Rational::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.dim {
                self.data.swap(a * self.dim + j, b * self.dim + j);
            }
        }
    }

    /// Exact inverse, or `None` when singular. Partial pivoting picks the
    /// entry of largest absolute value in the current column.
    pub fn inverse(&self) -> Option<RationalMatrix> {
        let n = self.dim;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot_row = (col..n)
                .filter(|&r| !a[(r, col)].is_zero())
                .max_by(|&r, &s| a[(r, col)].abs().cmp(&a[(s, col)].abs()).then(s.cmp(&r)))?;
            a.swap_rows(col, pivot_row);
            inv.swap_rows(col, pivot_row);
            let p = a[(col, col)].clone();
            for j in 0..n {
                a[(col, j)] = &a[(col, j)] / &p;
                inv[(col, j)] = &inv[(col, j)] / &p;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for j in 0..n {
                    if !a[(col, j)].is_zero() {
                        let t = &f * &a[(col, j)];
                        a[(r, j)] -= t;
                    }
                    if !inv[(col, j)].is_zero() {
                        let t = &f * &inv[(col, j)];
                        inv[(r, j)] -= t;
                    }
                }
            }
        }
        Some(inv)
    }

    /// Solves `self * x = b` exactly, or `None` when singular.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        let n = self.dim;
        assert_eq!(b.len(), n, "right-hand side length");
        let mut a = self.clone();
        let mut rhs = b.to_vec();
        for col in 0..n {
            let pivot_row = (col..n)
                .filter(|&r| !a[(r, col)].is_zero())
                .max_by(|&r, &s| a[(r, col)].abs().cmp(&a[(s, col)].abs()).then(s.cmp(&r)))?;
            a.swap_rows(col, pivot_row);
            rhs.swap(col, pivot_row);
            for r in col + 1..n {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let f = &a[(r, col)] / &a[(col, col)];
                for j in col..n {
                    let t = &f * &a[(col, j)];
                    a[(r, j)] -= t;
                }
                let t = &f * &rhs[col];
                rhs[r] -= t;
            }
        }
        let mut x = vec![Rational::zero(); n];
        for i in (0..n).rev() {
            let mut s = rhs[i].clone();
            for j in i + 1..n {
                s -= &a[(i, j)] * &x[j];
            }
            x[i] = s / &a[(i, i)];
        }
        Some(x)
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.dim + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.dim + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn matrix(rows: &[&[i64]]) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(rows.len());
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m[(i, j)] = int(v);
            }
        }
        m
    }

    #[test]
    fn inverse_times_matrix_is_identity() {
        let m = matrix(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        let inv = m.inverse().unwrap();
        assert_eq!(inv[(0, 0)], frac(3, 4));
        assert_eq!(inv[(1, 1)], int(1));
        for i in 0..3 {
            for j in 0..3 {
                let s: Rational = (0..3).map(|k| &m[(i, k)] * &inv[(k, j)]).sum();
                assert_eq!(s, if i == j { int(1) } else { int(0) });
            }
        }
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let m = matrix(&[&[1, 2], &[2, 4]]);
        assert!(m.inverse().is_none());
        assert!(m.solve(&[int(1), int(2)]).is_none());
    }

    #[test]
    fn solve_needs_pivoting() {
        let m = matrix(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.solve(&[int(3), int(5)]).unwrap(), vec![int(5), int(3)]);
    }
}
