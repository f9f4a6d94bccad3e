//! Small dense complex matrices backing representation images.

use crate::Complex;

#[derive(Debug, Clone, PartialEq)]
pub struct CMat {
    n: usize,
    a: Vec<Complex>,
}

impl CMat {
    pub fn zeros(n: usize) -> Self {
        CMat { n, a: vec![Complex::new(0.0, 0.0); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = Complex::new(1.0, 0.0);
        }
        m
    }

    pub fn from_rows(n: usize, rows: Vec<Complex>) -> Self {
        assert_eq!(rows.len(), n * n);
        CMat { n, a: rows }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn mul(&self, other: &CMat) -> CMat {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = CMat::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let x = self[(i, k)];
                if x.re == 0.0 && x.im == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += x * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn scale(&self, z: Complex) -> CMat {
        CMat { n: self.n, a: self.a.iter().map(|x| x * z).collect() }
    }

    pub fn add(&self, other: &CMat) -> CMat {
        assert_eq!(self.n, other.n);
        CMat {
            n: self.n,
            a: self.a.iter().zip(&other.a).map(|(x, y)| x + y).collect(),
        }
    }

    /// Conjugate transpose; the inverse for unitary matrices.
    pub fn adjoint(&self) -> CMat {
        let n = self.n;
        let mut out = CMat::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = self[(j, i)].conj();
            }
        }
        out
    }

    pub fn pow(&self, e: i64) -> CMat {
        if e == 0 {
            return CMat::identity(self.n);
        }
        let (mut base, mut e) = if e < 0 {
            (self.adjoint(), (-e) as u64)
        } else {
            (self.clone(), e as u64)
        };
        let mut acc = CMat::identity(self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn apply(&self, v: &[Complex]) -> Vec<Complex> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    pub fn column(&self, j: usize) -> Vec<Complex> {
        (0..self.n).map(|i| self[(i, j)]).collect()
    }

    pub fn max_entry_diff(&self, other: &CMat) -> f64 {
        self.a
            .iter()
            .zip(&other.a)
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }

    /// sup-norm distance of self * self^H from the identity.
    pub fn unitarity_defect(&self) -> f64 {
        self.mul(&self.adjoint()).max_entry_diff(&CMat::identity(self.n))
    }

    pub fn off_diagonal_max(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    worst = worst.max(self[(i, j)].norm());
                }
            }
        }
        worst
    }

    pub fn diagonal(&self) -> Vec<Complex> {
        (0..self.n).map(|i| self[(i, i)]).collect()
    }
}

impl std::ops::Index<(usize, usize)> for CMat {
    type Output = Complex;
    fn index(&self, (i, j): (usize, usize)) -> &Complex {
        &self.a[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex {
        &mut self.a[i * self.n + j]
    }
}
