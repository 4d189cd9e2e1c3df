use std::fmt;

use crate::algebra::field::Prime;

/// Dense row-major matrix over F_p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMatrix {
    prime: Prime,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Output of Gaussian elimination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub rank: usize,
    /// Basis of the null space, each vector of length `cols`.
    pub kernel: Vec<Vec<u32>>,
    /// Pivot columns of the original matrix, each of length `rows`.
    pub image: Vec<Vec<u32>>,
}

impl FpMatrix {
    pub fn zeros(rows: usize, cols: usize, prime: Prime) -> Self {
        FpMatrix {
            prime,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize, prime: Prime) -> Self {
        let mut m = Self::zeros(n, n, prime);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Entries are reduced mod p on the way in.
    pub fn from_rows(rows: &[Vec<i64>], prime: Prime) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols, prime);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, prime.reduce(x));
            }
        }
        m
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: u32) {
        self.data[i * self.cols + j] = x % self.prime.get();
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let p = self.prime;
        (0..self.rows)
            .map(|i| (0..self.cols).fold(0, |acc, j| p.add(acc, p.mul(self.get(i, j), v[j]))))
            .collect()
    }

    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.rows);
        let p = self.prime;
        let mut out = FpMatrix::zeros(self.rows, other.cols, p);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.get(i, j);
                    out.set(i, j, p.add(cur, p.mul(a, other.get(k, j))));
                }
            }
        }
        out
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (FpMatrix, Vec<usize>) {
        let p = self.prime;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(piv) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            m.swap_rows(row, piv);
            let inv = p.inv(m.get(row, col));
            for j in col..m.cols {
                let x = m.get(row, j);
                m.set(row, j, p.mul(x, inv));
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let f = m.get(r, col);
                if f == 0 {
                    continue;
                }
                for j in col..m.cols {
                    let x = m.get(r, j);
                    let y = m.get(row, j);
                    m.set(r, j, p.sub(x, p.mul(f, y)));
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn rank_kernel_image(&self) -> Reduction {
        let p = self.prime;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let kernel = (0..self.cols)
            .filter(|&free| !is_pivot[free])
            .map(|free| {
                let mut v = vec![0; self.cols];
                v[free] = 1;
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = p.neg(r.get(row, free));
                }
                v
            })
            .collect();
        let image = pivots.iter().map(|&c| self.column(c)).collect();
        Reduction {
            rank: pivots.len(),
            kernel,
            image,
        }
    }
}

impl fmt::Display for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prime(n: u32) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn zero_matrix() {
        let r = FpMatrix::zeros(3, 3, prime(3)).rank_kernel_image();
        assert_eq!(r.rank, 0);
        assert_eq!(r.kernel.len(), 3);
        assert!(r.image.is_empty());
    }

    #[test]
    fn identity_matrix() {
        for n in 1..6 {
            let r = FpMatrix::identity(n, prime(5)).rank_kernel_image();
            assert_eq!(r.rank, n);
            assert!(r.kernel.is_empty());
        }
    }

    #[test]
    fn rank_one_mod_five() {
        let m = FpMatrix::from_rows(&[vec![1, 2], vec![2, 4]], prime(5));
        let r = m.rank_kernel_image();
        assert_eq!(r.rank, 1);
        assert_eq!(r.kernel, vec![vec![3, 1]]);
        assert_eq!(m.mul_vec(&r.kernel[0]), vec![0, 0]);
    }

    #[test]
    fn rank_depends_on_characteristic() {
        // det = 2: singular only mod 2.
        let rows = [vec![1, 1], vec![1, -1]];
        assert_eq!(FpMatrix::from_rows(&rows, prime(2)).rank(), 1);
        assert_eq!(FpMatrix::from_rows(&rows, prime(3)).rank(), 2);
    }

    #[test]
    fn empty_shapes() {
        let m = FpMatrix::zeros(0, 4, prime(2));
        let r = m.rank_kernel_image();
        assert_eq!((r.rank, r.kernel.len()), (0, 4));
        let m = FpMatrix::zeros(4, 0, prime(2));
        assert_eq!(m.rank_kernel_image().rank, 0);
    }
}
