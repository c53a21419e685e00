//! Truncated formal power series over `F_p`.
//!
//! A [`Series`] is an element of `F_p[t]/(t^(N+1))`. Coefficients above `N` are
//! unknown, not zero, so every operation refuses to mix precisions.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, Prime};
use crate::gf2;

/// An element of `F_p[t]/(t^(N+1))` with dense coefficients `0..=N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Series {
    prime: Prime,
    /// Canonical residues, exactly `N + 1` of them.
    coeffs: Vec<u32>,
}

impl Series {
    pub fn zero(prime: Prime, trunc: usize) -> Self {
        Series {
            prime,
            coeffs: vec![0; trunc + 1],
        }
    }

    pub fn one(prime: Prime, trunc: usize) -> Self {
        Self::monomial(prime, trunc, 0, 1)
    }

    /// The series `t`.
    pub fn variable(prime: Prime, trunc: usize) -> Self {
        Self::monomial(prime, trunc, 1, 1)
    }

    /// `c * t^e`; zero if `e > N`.
    pub fn monomial(prime: Prime, trunc: usize, exponent: usize, coeff: i64) -> Self {
        Self::from_sparse(prime, trunc, &[(exponent, coeff)])
    }

    /// The image of a polynomial, given by its coefficients from degree 0 up.
    /// Terms above `N` are dropped.
    pub fn from_poly(prime: Prime, trunc: usize, coeffs: &[i64]) -> Self {
        let mut s = Self::zero(prime, trunc);
        for (slot, &c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = prime.element(c).value();
        }
        s
    }

    /// Sum of `c * t^e` over the given terms, dropping exponents above `N`.
    /// Repeated exponents accumulate.
    pub fn from_sparse(prime: Prime, trunc: usize, terms: &[(usize, i64)]) -> Self {
        let mut s = Self::zero(prime, trunc);
        for &(e, c) in terms {
            if e <= trunc {
                let sum = prime.element(s.coeffs[e] as i64) + prime.element(c);
                s.coeffs[e] = sum.value();
            }
        }
        s
    }

    pub(crate) fn from_residues(prime: Prime, coeffs: Vec<u32>) -> Self {
        debug_assert!(!coeffs.is_empty());
        debug_assert!(coeffs.iter().all(|&c| c < prime.get()));
        Series { prime, coeffs }
    }

    #[inline]
    pub fn prime(&self) -> Prime {
        self.prime
    }

    /// The truncation order `N`: the largest retained exponent.
    #[inline]
    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^e`. Panics if `e > N`.
    pub fn coeff(&self, e: usize) -> FieldElement {
        self.prime.element(self.coeffs[e] as i64)
    }

    /// Canonical residues of all coefficients, indexed by exponent.
    pub fn residues(&self) -> &[u32] {
        &self.coeffs
    }

    /// Exponents with nonzero coefficient, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.terms().map(|(e, _)| e).collect()
    }

    /// Nonzero terms `(exponent, residue)`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(e, &c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Least exponent with nonzero coefficient, or `N + 1` for the zero series.
    pub fn valuation(&self) -> usize {
        self.coeffs
            .iter()
            .position(|&c| c != 0)
            .unwrap_or(self.coeffs.len())
    }

    /// Least exponent where `self` and `other` differ, if any. Both must share a context.
    pub fn first_difference(&self, other: &Series) -> Result<Option<usize>> {
        self.check_context(other)?;
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b))
    }

    fn check_context(&self, other: &Series) -> Result<()> {
        if self.prime != other.prime || self.trunc() != other.trunc() {
            return Err(Error::MismatchedContext {
                lhs_p: self.prime.get(),
                lhs_n: self.trunc(),
                rhs_p: other.prime.get(),
                rhs_n: other.trunc(),
            });
        }
        Ok(())
    }

    fn zip_with(&self, other: &Series, op: impl Fn(u32, u32) -> u32) -> Result<Series> {
        self.check_context(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| op(a, b))
            .collect();
        Ok(Series::from_residues(self.prime, coeffs))
    }

    pub fn add(&self, other: &Series) -> Result<Series> {
        let p = self.prime.get();
        self.zip_with(other, |a, b| (a + b) % p)
    }

    pub fn sub(&self, other: &Series) -> Result<Series> {
        let p = self.prime.get();
        self.zip_with(other, |a, b| (a + p - b) % p)
    }

    pub fn neg(&self) -> Series {
        let p = self.prime.get();
        let coeffs = self.coeffs.iter().map(|&c| (p - c) % p).collect();
        Series::from_residues(self.prime, coeffs)
    }

    pub fn scale(&self, c: FieldElement) -> Series {
        let p = self.prime.get();
        let c = c.value();
        let coeffs = self.coeffs.iter().map(|&a| a * c % p).collect();
        Series::from_residues(self.prime, coeffs)
    }

    /// `t^k * self`, staying at precision `N`.
    pub fn shift(&self, k: usize) -> Series {
        let n = self.coeffs.len();
        let mut coeffs = vec![0; n];
        if k < n {
            coeffs[k..].copy_from_slice(&self.coeffs[..n - k]);
        }
        Series::from_residues(self.prime, coeffs)
    }

    pub fn mul(&self, other: &Series) -> Result<Series> {
        self.check_context(other)?;
        let n = self.coeffs.len();
        let coeffs = if self.prime == Prime::TWO {
            let prod = gf2::mul(&gf2::pack(&self.coeffs), &gf2::pack(&other.coeffs), n);
            gf2::unpack(&prod, n)
        } else {
            mul_dense(self.prime, &self.coeffs, &other.coeffs, n)
        };
        Ok(Series::from_residues(self.prime, coeffs))
    }

    pub fn square(&self) -> Series {
        if self.prime == Prime::TWO {
            // Frobenius: (sum a_i t^i)^2 = sum a_i t^(2i) over F_2.
            let n = self.coeffs.len();
            let mut coeffs = vec![0; n];
            for (i, &c) in self.coeffs.iter().enumerate().take(n.div_ceil(2)) {
                coeffs[2 * i] = c;
            }
            return Series::from_residues(self.prime, coeffs);
        }
        self.mul(self).expect("same context")
    }

    /// `self^e` under multiplication; `self^0 = 1`.
    pub fn pow(&self, mut e: u64) -> Series {
        let mut acc = Series::one(self.prime, self.trunc());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same context");
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// Multiplicative inverse of a series with nonzero constant term.
    pub fn inv_unit(&self) -> Result<Series> {
        let p = self.prime.get() as u64;
        let f = &self.coeffs;
        if f[0] == 0 {
            return Err(Error::NotAUnit);
        }
        let c0_inv = self.coeff(0).inv()?.value() as u64;
        let n = f.len();
        let mut g = vec![0u32; n];
        g[0] = c0_inv as u32;
        for k in 1..n {
            let mut acc = 0u64;
            for i in 1..=k {
                acc += f[i] as u64 * g[k - i] as u64;
            }
            let acc = acc % p;
            g[k] = ((p - acc) % p * c0_inv % p) as u32;
        }
        Ok(Series::from_residues(self.prime, g))
    }

    /// `self(inner(t))`. The inner series must have zero constant term.
    pub fn compose(&self, inner: &Series) -> Result<Series> {
        self.check_context(inner)?;
        if inner.coeffs[0] != 0 {
            return Err(Error::NonzeroConstant);
        }
        let n = self.coeffs.len();
        let coeffs = if self.prime == Prime::TWO {
            let out = gf2::compose(&gf2::pack(&self.coeffs), &gf2::pack(&inner.coeffs), n);
            gf2::unpack(&out, n)
        } else {
            compose_dense(self.prime, &self.coeffs, &inner.coeffs)
        };
        Ok(Series::from_residues(self.prime, coeffs))
    }

    /// The `g` with `self(g(t)) = g(self(t)) = t`.
    ///
    /// Solved degree by degree: with `R = t - sum_{j<k} g_j f^j`, the coefficient of
    /// `t^k` in `R` can only be cancelled by `g_k f^k`, whose leading term is
    /// `g_k f_1^k t^k`.
    pub fn comp_inverse(&self) -> Result<Series> {
        let n = self.coeffs.len();
        if self.coeffs[0] != 0 || n < 2 || self.coeffs[1] == 0 {
            return Err(Error::NotInvertible);
        }
        let lead_inv = self.coeff(1).inv()?;
        let mut residual = Series::variable(self.prime, self.trunc());
        let mut power = self.clone();
        let mut lead_pow_inv = lead_inv;
        let mut g = vec![0u32; n];
        for (k, slot) in g.iter_mut().enumerate().skip(1) {
            let gk = residual.coeff(k) * lead_pow_inv;
            *slot = gk.value();
            if !gk.is_zero() {
                residual = residual.sub(&power.scale(gk))?;
            }
            if k + 1 < n {
                power = power.mul(self)?;
                lead_pow_inv = lead_pow_inv * lead_inv;
            }
        }
        Ok(Series::from_residues(self.prime, g))
    }

    /// The unique `s` with `s_0 = 0` and `s^2 + s = self`, in characteristic 2.
    ///
    /// `s = sum_i self^(2^i)`; the terms vanish once `2^i * val(self) > N`.
    pub fn artin_schreier_root(&self) -> Result<Series> {
        if self.prime != Prime::TWO {
            return Err(Error::WrongCharacteristic(self.prime.get()));
        }
        if self.coeffs[0] != 0 {
            return Err(Error::NonzeroConstant);
        }
        let mut sum = Series::zero(self.prime, self.trunc());
        let mut term = self.clone();
        while !term.is_zero() {
            sum = sum.add(&term)?;
            term = term.square();
        }
        Ok(sum)
    }

    /// The unique `u` with `u_0 = 1` and `u^m = self`, for `self_0 = 1` and `p` not dividing `m`.
    ///
    /// Keeps the partial powers `u^1, ..., u^m` up to degree `n - 1`. With `u_n` set to
    /// zero, the degree-`n` coefficient `r_j` of `u^j` follows from lower data; the true
    /// coefficient is `r_j + j u_n`, so `u_n = (f_n - r_m) / m`.
    pub fn nth_root_unit(&self, m: u64) -> Result<Series> {
        let p = self.prime.get() as u64;
        if m == 0 || m.is_multiple_of(p) {
            return Err(Error::NotCoprime { m, p: p as u32 });
        }
        if self.coeffs[0] != 1 {
            return Err(Error::BadRoot);
        }
        let len = self.coeffs.len();
        let m_usize = m as usize;
        let m_inv = self.prime.element((m % p) as i64).inv()?.value() as u64;
        // powers[j - 1] holds u^j
        let mut powers = vec![vec![0u32; len]; m_usize];
        for row in powers.iter_mut() {
            row[0] = 1;
        }
        for n in 1..len {
            let mut r_prev = 0u64; // r_1: u^1 with u_n = 0
            let mut rs = Vec::with_capacity(m_usize);
            rs.push(0u64);
            for j in 2..=m_usize {
                let u = &powers[0];
                let prev = &powers[j - 2];
                let mut acc = r_prev;
                for i in 1..n {
                    acc += u[i] as u64 * prev[n - i] as u64;
                }
                r_prev = acc % p;
                rs.push(r_prev);
            }
            let target = self.coeffs[n] as u64;
            let un = (target + p - rs[m_usize - 1]) % p * m_inv % p;
            for (j, row) in powers.iter_mut().enumerate() {
                row[n] = ((rs[j] + (j as u64 + 1) % p * un) % p) as u32;
            }
        }
        Ok(Series::from_residues(self.prime, powers.swap_remove(0)))
    }

    /// The same series known only to precision `m`.
    pub fn truncate(&self, m: usize) -> Result<Series> {
        if m > self.trunc() {
            return Err(Error::BadTruncation {
                requested: m,
                available: self.trunc(),
            });
        }
        Ok(Series::from_residues(self.prime, self.coeffs[..=m].to_vec()))
    }
}

impl fmt::Display for Series {
    /// Human-readable form such as `1 + 2*t + t^3 + O(t^5)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (e, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "t")?,
                (1, c) => write!(f, "{c}*t")?,
                (e, 1) => write!(f, "t^{e}")?,
                (e, c) => write!(f, "{c}*t^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.trunc() + 1)
    }
}

/// Schoolbook product of two coefficient slices, keeping `len` coefficients.
pub(crate) fn mul_dense(prime: Prime, a: &[u32], b: &[u32], len: usize) -> Vec<u32> {
    let p = prime.get() as u64;
    let mut acc = vec![0u64; len];
    for (i, &ai) in a.iter().enumerate().take(len) {
        if ai == 0 {
            continue;
        }
        for (slot, &bj) in acc[i..].iter_mut().zip(b) {
            *slot += ai as u64 * bj as u64;
        }
        // Each product is at most 2^16; periodic reduction keeps the u64 sums exact.
        if i % (1 << 20) == (1 << 20) - 1 {
            acc.iter_mut().for_each(|x| *x %= p);
        }
    }
    acc.into_iter().map(|x| (x % p) as u32).collect()
}

/// Horner composition `f(g)` over any `F_p`; the accumulator after consuming `f_k`
/// needs only `len - k` coefficients.
pub(crate) fn compose_dense(prime: Prime, f: &[u32], g: &[u32]) -> Vec<u32> {
    let len = f.len();
    let top = len - 1;
    let mut acc = vec![f[top]];
    for k in (0..top).rev() {
        let mut next = mul_dense(prime, &acc, g, len - k);
        next[0] = f[k];
        acc = next;
    }
    acc
}
