//! Dense linear algebra over the prime field ℤ_p for small p.
//!
//! Only what the annihilator kernels need: row reduction, rank and a
//! nullspace basis. Entries are kept reduced in `0..p`.

/// Multiplicative inverse of `a` modulo the prime `p` (`a` nonzero mod `p`).
pub fn inv_mod(a: u8, p: u8) -> u8 {
    let a = a % p;
    assert!(a != 0, "zero has no inverse mod {p}");
    (1..p).find(|&b| (a as u16 * b as u16) % p as u16 == 1).expect("p must be prime")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModMatrix {
    p: u8,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl ModMatrix {
    pub fn zeros(p: u8, rows: usize, cols: usize) -> Self {
        Self { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        self.data[r * self.cols + c] = v % self.p;
    }

    /// Appends a row; its length must equal the column count.
    pub fn push_row(&mut self, row: &[u8]) {
        assert_eq!(row.len(), self.cols);
        self.data.extend(row.iter().map(|v| v % self.p));
        self.rows += 1;
    }

    /// Row-reduces in place to reduced echelon form and returns the pivot columns.
    /// Zero rows are dropped.
    pub fn rref(&mut self) -> Vec<usize> {
        let p = self.p as u16;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = inv_mod(self.data[r * cols + c], self.p) as u16;
            if inv != 1 {
                for j in c..cols {
                    let v = &mut self.data[r * cols + j];
                    *v = ((*v as u16 * inv) % p) as u8;
                }
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.data[i * cols + c] as u16;
                if factor == 0 {
                    continue;
                }
                for j in c..cols {
                    let sub = (factor * self.data[r * cols + j] as u16) % p;
                    let v = &mut self.data[i * cols + j];
                    *v = ((*v as u16 + p - sub) % p) as u8;
                }
            }
            pivots.push(c);
            r += 1;
        }
        self.rows = r;
        self.data.truncate(r * cols);
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// A basis of `{v : M v = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<u8>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let p = self.p;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u8; self.cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                let coef = m.get(r, free);
                v[pc] = (p - coef) % p;
            }
            basis.push(v);
        }
        basis
    }

    pub fn mul_vec(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(v.len(), self.cols);
        let p = self.p as u32;
        (0..self.rows)
            .map(|r| {
                let s: u32 = (0..self.cols).map(|c| self.get(r, c) as u32 * v[c] as u32).sum();
                (s % p) as u8
            })
            .collect()
    }
}

/// Calls `visit` on every ℤ_p-linear combination of `basis` (including zero).
pub fn for_each_in_span(p: u8, basis: &[Vec<u8>], len: usize, mut visit: impl FnMut(&[u8])) {
    let mut coeffs = vec![0u8; basis.len()];
    let mut v = vec![0u8; len];
    loop {
        v.iter_mut().for_each(|x| *x = 0);
        for (c, b) in coeffs.iter().zip(basis) {
            if *c != 0 {
                for (x, y) in v.iter_mut().zip(b) {
                    *x = ((*x as u16 + *c as u16 * *y as u16) % p as u16) as u8;
                }
            }
        }
        visit(&v);
        let mut i = 0;
        loop {
            if i == coeffs.len() {
                return;
            }
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses() {
        for p in [2u8, 3, 5, 7] {
            for a in 1..p {
                assert_eq!((a as u16 * inv_mod(a, p) as u16) % p as u16, 1);
            }
        }
    }

    #[test]
    fn nullspace_is_annihilated_and_has_right_dimension() {
        let mut m = ModMatrix::zeros(3, 0, 4);
        m.push_row(&[1, 2, 0, 1]);
        m.push_row(&[2, 1, 0, 2]);
        m.push_row(&[0, 0, 1, 1]);
        let basis = m.nullspace();
        assert_eq!(basis.len(), 4 - m.rank());
        for v in &basis {
            assert!(m.mul_vec(v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn span_enumeration_counts() {
        let basis = vec![vec![1, 0, 1], vec![0, 1, 1]];
        let mut seen = std::collections::HashSet::new();
        for_each_in_span(3, &basis, 3, |v| {
            seen.insert(v.to_vec());
        });
        assert_eq!(seen.len(), 9);
    }
}
