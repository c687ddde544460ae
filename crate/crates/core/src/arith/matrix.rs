use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::Rational;

/// Dense matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

/// Reduced row-echelon form together with its pivot columns.
#[derive(Debug, Clone)]
pub struct Rref {
    pub matrix: RationalMatrix,
    pub pivots: Vec<usize>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    /// Builds a matrix from row vectors. Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            entries.extend(r);
        }
        RationalMatrix {
            rows: nrows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Gauss–Jordan elimination. Pivots are chosen as the leftmost column with
    /// a nonzero entry at or below the current row, taking the first such row.
    pub fn rref(&self) -> Rref {
        let mut rows: Vec<Vec<Rational>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..self.cols {
            if next == rows.len() {
                break;
            }
            let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(next, found);
            let inv = rows[next][col].recip();
            if !inv.is_one() {
                for a in rows[next].iter_mut().filter(|a| !a.is_zero()) {
                    *a *= &inv;
                }
            }
            let support: Vec<usize> = (col..self.cols)
                .filter(|&c| !rows[next][c].is_zero())
                .collect();
            let pivot_row = core::mem::take(&mut rows[next]);
            for (r, row) in rows.iter_mut().enumerate() {
                if r == next || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for &c in &support {
                    row[c] -= &factor * &pivot_row[c];
                }
            }
            rows[next] = pivot_row;
            pivots.push(col);
            next += 1;
        }
        Rref {
            matrix: RationalMatrix::from_rows_sized(rows, self.rows, self.cols),
            pivots,
        }
    }

    fn from_rows_sized(rows: Vec<Vec<Rational>>, nrows: usize, cols: usize) -> Self {
        let mut entries = Vec::with_capacity(nrows * cols);
        for r in rows {
            entries.extend(r);
        }
        RationalMatrix {
            rows: nrows,
            cols,
            entries,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the exact kernel in reduced row-echelon convention: one vector
    /// per free column (ascending), with a unit entry in that column and zeros
    /// in every other free column.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let Rref { matrix, pivots } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![Rational::zero(); self.cols];
                v[free] = Rational::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -matrix.get(r, free).clone();
                }
                v
            })
            .collect()
    }
}
