//! Arithmetic and linear algebra over a prime field GF(p), sized for the
//! character-table computation: p fits in u32-range so products fit in u64.

use crate::arith::{ceil_sqrt, is_prime};
use crate::error::{Error, Result};

/// Smallest prime p ≡ 1 (mod exponent) with p > 2·ceil(√|G|). Such a prime
/// makes GF(p) contain all needed roots of unity while keeping character
/// degrees recoverable from their squares mod p.
pub fn dixon_prime(group_order: u64, exponent: u64) -> u64 {
    let bound = 2 * ceil_sqrt(group_order);
    let mut p = exponent + 1;
    while p <= bound {
        p += exponent;
    }
    while !is_prime(p) {
        p += exponent;
    }
    p
}

/// The field GF(p) for odd prime p < 2^32.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    pub p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) || p >= (1 << 32) {
            return Err(Error::Parameter(format!("{p} is not a supported prime")));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        if a % self.p == 0 {
            return Err(Error::Domain("inverse of zero".into()));
        }
        Ok(self.pow(a, self.p - 2))
    }

    /// Square root via Tonelli–Shanks; `None` when `a` is a non-residue.
    pub fn sqrt(&self, a: u64) -> Option<u64> {
        let p = self.p;
        let a = a % p;
        if a == 0 {
            return Some(0);
        }
        if p == 2 {
            return Some(a);
        }
        if self.pow(a, (p - 1) / 2) != 1 {
            return None;
        }
        if p % 4 == 3 {
            return Some(self.pow(a, (p + 1) / 4));
        }
        // Write p − 1 = q·2^s with q odd.
        let mut q = p - 1;
        let mut s = 0u32;
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        // Find a quadratic non-residue z.
        let mut z = 2u64;
        while self.pow(z, (p - 1) / 2) != p - 1 {
            z += 1;
        }
        let mut m = s;
        let mut c = self.pow(z, q);
        let mut t = self.pow(a, q);
        let mut r = self.pow(a, (q + 1) / 2);
        while t != 1 {
            let mut i = 0u32;
            let mut t2 = t;
            while t2 != 1 {
                t2 = self.mul(t2, t2);
                i += 1;
            }
            let b = self.pow(c, 1 << (m - i - 1));
            m = i;
            c = self.mul(b, b);
            t = self.mul(t, c);
            r = self.mul(r, b);
        }
        Some(r)
    }
}

/// Dense matrix over GF(p), row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatP {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
    pub f: PrimeField,
}

impl MatP {
    pub fn zero(f: PrimeField, rows: usize, cols: usize) -> Self {
        MatP {
            rows,
            cols,
            data: vec![0; rows * cols],
            f,
        }
    }

    pub fn identity(f: PrimeField, n: usize) -> Self {
        let mut m = Self::zero(f, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v % self.f.p;
    }

    pub fn matmul(&self, other: &MatP) -> MatP {
        assert_eq!(self.cols, other.rows);
        let f = self.f;
        let mut out = MatP::zero(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.at(i, j);
                    out.data[i * other.cols + j] = f.add(cur, f.mul(a, other.at(k, j)));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(self.cols, v.len());
        let f = self.f;
        (0..self.rows)
            .map(|i| {
                let mut acc = 0u64;
                for j in 0..self.cols {
                    acc = f.add(acc, f.mul(self.at(i, j), v[j]));
                }
                acc
            })
            .collect()
    }

    /// In-place reduction to row echelon form; returns pivot columns.
    pub fn row_reduce(&mut self) -> Vec<usize> {
        let f = self.f;
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| self.at(r, col) != 0) else {
                continue;
            };
            if pr != row {
                for c in 0..self.cols {
                    self.data.swap(row * self.cols + c, pr * self.cols + c);
                }
            }
            let inv = f.inv(self.at(row, col)).expect("pivot nonzero");
            for c in col..self.cols {
                let v = f.mul(self.at(row, c), inv);
                self.data[row * self.cols + c] = v;
            }
            for r in 0..self.rows {
                if r != row && self.at(r, col) != 0 {
                    let factor = self.at(r, col);
                    for c in col..self.cols {
                        let v = f.sub(self.at(r, c), f.mul(factor, self.at(row, c)));
                        self.data[r * self.cols + c] = v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut copy = self.clone();
        copy.row_reduce().len()
    }

    /// Basis of the right nullspace, as rows.
    pub fn nullspace(&self) -> Vec<Vec<u64>> {
        let f = self.f;
        let mut red = self.clone();
        let pivots = red.row_reduce();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![0u64; self.cols];
            v[fc] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(red.at(r, fc));
            }
            basis.push(v);
        }
        basis
    }

    /// Characteristic polynomial coefficients, ascending degree, monic
    /// (length n+1), via Hessenberg reduction.
    pub fn charpoly(&self) -> Vec<u64> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let f = self.f;
        let mut h = self.clone();
        // Reduce to upper Hessenberg form with Gaussian similarity
        // transformations.
        for col in 0..n.saturating_sub(2) {
            if let Some(pr) = (col + 1..n).find(|&r| h.at(r, col) != 0) {
                if pr != col + 1 {
                    for c in 0..n {
                        h.data.swap((col + 1) * n + c, pr * n + c);
                    }
                    for r in 0..n {
                        h.data.swap(r * n + col + 1, r * n + pr);
                    }
                }
                let inv = f.inv(h.at(col + 1, col)).expect("nonzero");
                for r in col + 2..n {
                    let factor = f.mul(h.at(r, col), inv);
                    if factor == 0 {
                        continue;
                    }
                    for c in 0..n {
                        let v = f.sub(h.at(r, c), f.mul(factor, h.at(col + 1, c)));
                        h.data[r * n + c] = v;
                    }
                    for rr in 0..n {
                        let v = f.add(h.at(rr, col + 1), f.mul(factor, h.at(rr, r)));
                        h.data[rr * n + col + 1] = v;
                    }
                }
            }
        }
        // charpoly recurrence on Hessenberg matrices: p_0 = 1,
        // p_k(x) = (x − h_{k,k}) p_{k−1}(x) − Σ_{i<k} h_{i,k} (Π_{j=i+1..k} h_{j,j−1}) p_{i−1}(x)
        // using 1-based block indices; store polys ascending.
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for k in 1..=n {
            let mut pk = vec![0u64; k + 1];
            // (x − h_{k−1,k−1}) * p_{k−1}
            let prev = &polys[k - 1];
            for (i, &c) in prev.iter().enumerate() {
                pk[i + 1] = f.add(pk[i + 1], c);
                pk[i] = f.sub(pk[i], f.mul(h.at(k - 1, k - 1), c));
            }
            let mut beta = 1u64;
            for i in (1..k).rev() {
                beta = f.mul(beta, h.at(i, i - 1));
                let coeff = f.mul(h.at(i - 1, k - 1), beta);
                if coeff == 0 {
                    continue;
                }
                for (j, &c) in polys[i - 1].iter().enumerate() {
                    pk[j] = f.sub(pk[j], f.mul(coeff, c));
                }
            }
            polys.push(pk);
        }
        polys.pop().expect("n-th poly")
    }
}

/// Evaluate a polynomial (ascending coefficients) at x.
pub fn poly_eval(f: PrimeField, coeffs: &[u64], x: u64) -> u64 {
    let mut acc = 0u64;
    for &c in coeffs.iter().rev() {
        acc = f.add(f.mul(acc, x), c);
    }
    acc
}

/// All roots in GF(p) of a polynomial, ascending, by direct scan.
pub fn poly_roots(f: PrimeField, coeffs: &[u64]) -> Vec<u64> {
    (0..f.p).filter(|&x| poly_eval(f, coeffs, x) == 0).collect()
}

/// Express each column of `targets` in terms of the column basis `basis`
/// (both r×d resp. r×k with the basis of full column rank): returns the d×k
/// coefficient matrix R with basis · R = targets, or None if inconsistent.
pub fn express_in_basis(basis: &MatP, targets: &MatP) -> Option<MatP> {
    assert_eq!(basis.rows, targets.rows);
    let f = basis.f;
    let (r, d, k) = (basis.rows, basis.cols, targets.cols);
    let mut aug = MatP::zero(f, r, d + k);
    for i in 0..r {
        for j in 0..d {
            aug.data[i * (d + k) + j] = basis.at(i, j);
        }
        for j in 0..k {
            aug.data[i * (d + k) + d + j] = targets.at(i, j);
        }
    }
    let pivots = aug.row_reduce();
    // Consistency: no pivot may fall in the target block, and the basis
    // part must have full rank d.
    if pivots.iter().any(|&c| c >= d) || pivots.len() != d {
        return None;
    }
    let mut out = MatP::zero(f, d, k);
    for (row, &pc) in pivots.iter().enumerate() {
        debug_assert_eq!(pc, row);
        for j in 0..k {
            out.data[row * k + j] = aug.at(row, d + j);
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dixon_prime_frozen_values() {
        // Cyclic C2: exponent 2, order 2 → bound 4 → p = 5.
        assert_eq!(dixon_prime(2, 2), 5);
        // Order-64 pair group: exponent 4, order 64 → bound 16 → p = 17.
        assert_eq!(dixon_prime(64, 4), 17);
        // Order 29120, exponent 1820 → p = 14561.
        assert_eq!(dixon_prime(29120, 1820), 14561);
        // Order 62400, exponent 780 → p = 2341.
        assert_eq!(dixon_prime(62400, 780), 2341);
        for (n, e) in [(29120u64, 1820u64), (62400, 780), (32768, 4)] {
            let p = dixon_prime(n, e);
            assert!(is_prime(p) && p % e == 1 && p > 2 * ceil_sqrt(n));
        }
    }

    #[test]
    fn sqrt_agrees_with_exhaustive_search() {
        for p in [5u64, 13, 17, 97, 14561, 2341] {
            let f = PrimeField::new(p).unwrap();
            let squares: std::collections::HashSet<u64> =
                (0..p.min(3000)).map(|x| f.mul(x, x)).collect();
            for a in 0..p.min(200) {
                match f.sqrt(a) {
                    Some(r) => assert_eq!(f.mul(r, r), a, "sqrt({a}) mod {p}"),
                    None => {
                        if p < 3000 {
                            assert!(!squares.contains(&a), "{a} is a square mod {p}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn row_reduce_and_nullspace() {
        let f = PrimeField::new(17).unwrap();
        let mut m = MatP::zero(f, 3, 4);
        // Rows: r2 = 2*r1, so rank 2 with a 2-dim nullspace.
        let rows = [[1u64, 2, 3, 4], [2, 4, 6, 8], [0, 1, 1, 0]];
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(m.mul_vec(v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn charpoly_matches_direct_expansion() {
        let f = PrimeField::new(97).unwrap();
        // Companion matrix of x^3 + 5x^2 + 7x + 2.
        let mut m = MatP::zero(f, 3, 3);
        m.set(0, 2, f.neg(2));
        m.set(1, 0, 1);
        m.set(1, 2, f.neg(7));
        m.set(2, 1, 1);
        m.set(2, 2, f.neg(5));
        assert_eq!(m.charpoly(), vec![2, 7, 5, 1]);
        // Diagonal matrix: roots are the diagonal entries.
        let mut d = MatP::zero(f, 4, 4);
        for (i, v) in [3u64, 3, 8, 11].into_iter().enumerate() {
            d.set(i, i, v);
        }
        let cp = d.charpoly();
        let mut roots = poly_roots(f, &cp);
        roots.sort_unstable();
        assert_eq!(roots, vec![3, 8, 11]);
        // Multiplicity: evaluate derivative-free check via nullspace dims.
        let mut shifted = d.clone();
        for i in 0..4 {
            shifted.set(i, i, f.sub(d.at(i, i), 3));
        }
        assert_eq!(shifted.nullspace().len(), 2);
    }

    #[test]
    fn charpoly_random_matrices_vanish_on_themselves() {
        // Cayley–Hamilton as an oracle for the Hessenberg recurrence.
        let f = PrimeField::new(101).unwrap();
        let mut state = 12345u64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) % 101
        };
        for n in [1usize, 2, 3, 5, 8] {
            let mut m = MatP::zero(f, n, n);
            for i in 0..n {
                for j in 0..n {
                    m.set(i, j, next());
                }
            }
            let cp = m.charpoly();
            assert_eq!(cp.len(), n + 1);
            assert_eq!(cp[n], 1, "monic");
            // Evaluate p(M) by Horner.
            let mut acc = MatP::zero(f, n, n);
            for &c in cp.iter().rev() {
                acc = acc.matmul(&m);
                for i in 0..n {
                    let v = f.add(acc.at(i, i), c);
                    acc.set(i, i, v);
                }
            }
            assert!(acc.data.iter().all(|&x| x == 0), "p(M) = 0 for n = {n}");
        }
    }

    #[test]
    fn express_in_basis_roundtrip() {
        let f = PrimeField::new(17).unwrap();
        let mut basis = MatP::zero(f, 4, 2);
        for (i, row) in [[1u64, 0], [2, 1], [0, 3], [1, 1]].iter().enumerate() {
            basis.set(i, 0, row[0]);
            basis.set(i, 1, row[1]);
        }
        let mut coeff = MatP::zero(f, 2, 2);
        for (i, row) in [[3u64, 1], [4, 9]].iter().enumerate() {
            coeff.set(i, 0, row[0]);
            coeff.set(i, 1, row[1]);
        }
        let targets = basis.matmul(&coeff);
        let r = express_in_basis(&basis, &targets).unwrap();
        assert_eq!(r, coeff);
        // Inconsistent target: a vector outside the column span.
        let mut bad = MatP::zero(f, 4, 1);
        bad.set(0, 0, 1);
        bad.set(2, 0, 1);
        bad.set(3, 0, 5);
        assert!(express_in_basis(&basis, &bad).is_none());
    }
}
