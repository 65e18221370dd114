use num_traits::{One, Zero};

use crate::Rational;

/// Dense matrix over the exact rationals.
///
/// Used for coefficient matrices of graded pieces and for 3×3 coordinate
/// changes.  Row reduction is exact Gauss–Jordan; no pivot growth concerns
/// apply because every entry is a `BigRational`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    /// Zero matrix of the given shape.
    pub fn new(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::new(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let mut m = Self::new(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RationalMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::new(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let mut out = Self::new(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = Rational::zero();
                for k in 0..self.cols {
                    if !self.get(r, k).is_zero() && !other.get(k, c).is_zero() {
                        acc += self.get(r, k).clone() * other.get(k, c).clone();
                    }
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    /// Determinant of a square matrix by exact elimination.
    pub fn determinant(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m.get(r, col).is_zero());
            let Some(p) = pivot else {
                return Rational::zero();
            };
            if p != col {
                for c in 0..n {
                    let a = m.get(p, c).clone();
                    let b = m.get(col, c).clone();
                    m.set(p, c, b);
                    m.set(col, c, a);
                }
                det = -det;
            }
            let pv = m.get(col, col).clone();
            det *= pv.clone();
            for r in col + 1..n {
                let factor = m.get(r, col).clone() / pv.clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    let v = m.get(r, c).clone() - factor.clone() * m.get(col, c).clone();
                    m.set(r, c, v);
                }
            }
        }
        det
    }

    /// Inverse of a square invertible matrix; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Self::new(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, Rational::one());
        }
        let (red, pivots) = aug.reduced_row_echelon();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let mut inv = Self::new(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, red.get(r, n + c).clone());
            }
        }
        Some(inv)
    }

    /// Exact reduced row-echelon form; returns the reduced matrix and the
    /// pivot columns in ascending order (i.e. in the ambient column order).
    ///
    /// Internally the elimination runs over primitive integer rows
    /// (denominators cleared, content divided out after every step), which
    /// avoids the per-operation gcd cost of `BigRational` arithmetic; the
    /// result is normalized back to rational rows with unit pivots.
    pub fn reduced_row_echelon(&self) -> (Self, Vec<usize>) {
        use num_bigint::BigInt;
        use num_integer::Integer;

        let normalize = |row: &mut [BigInt]| {
            let mut content = BigInt::zero();
            for e in row.iter() {
                if !e.is_zero() {
                    content = content.gcd(e);
                    if content.is_one() {
                        return;
                    }
                }
            }
            if content.is_zero() || content.is_one() {
                return;
            }
            for e in row.iter_mut() {
                *e = &*e / &content;
            }
        };

        // clear denominators row by row
        let mut rows: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let mut lcm = BigInt::one();
                for e in row {
                    lcm = lcm.lcm(e.denom());
                }
                let mut int_row: Vec<BigInt> = row
                    .iter()
                    .map(|e| e.numer() * (&lcm / e.denom()))
                    .collect();
                normalize(&mut int_row);
                int_row
            })
            .collect();

        let mut pivots = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..self.cols {
            if pivot_row >= self.rows {
                break;
            }
            let found = (pivot_row..self.rows).find(|&r| !rows[r][col].is_zero());
            let Some(p) = found else { continue };
            rows.swap(p, pivot_row);
            let pivot = std::mem::take(&mut rows[pivot_row]);
            for (r, row) in rows.iter_mut().enumerate() {
                if r == pivot_row || row[col].is_zero() {
                    continue;
                }
                let pv = pivot[col].clone();
                let factor = row[col].clone();
                for (e, pe) in row.iter_mut().zip(pivot.iter()) {
                    *e = &*e * &pv - &factor * pe;
                }
                normalize(row);
            }
            rows[pivot_row] = pivot;
            pivots.push(col);
            pivot_row += 1;
        }

        // unit pivots, rational output
        let mut out = Self::new(self.rows, self.cols);
        for (r, &p) in pivots.iter().enumerate() {
            let pv = rows[r][p].clone();
            for c in 0..self.cols {
                if !rows[r][c].is_zero() {
                    out.set(r, c, Rational::new(rows[r][c].clone(), pv.clone()));
                }
            }
        }
        (out, pivots)
    }

    pub fn rank(&self) -> usize {
        self.reduced_row_echelon().1.len()
    }

    /// Basis of the right null space, returned as rows of length `cols`.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let (red, pivots) = self.reduced_row_echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Rational::zero(); self.cols];
            v[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -red.get(r, f).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Whether the given row lies in the row span of `self`.
    pub fn row_space_contains(&self, row: &[Rational]) -> bool {
        assert_eq!(row.len(), self.cols);
        let mut rows = self.row_vecs();
        let base_rank = Self::from_rows(rows.clone()).rank();
        rows.push(row.to_vec());
        Self::from_rows(rows).rank() == base_rank
    }
}
