//! Exact arithmetic in cyclotomic fields.
//!
//! A [`Cyclotomic`] is an element of `Q(zeta_n)` stored as a polynomial in
//! `zeta_n` of degree below `phi(n)`, i.e. in the power basis of
//! `Q[x]/(Phi_n(x))`, always at the *minimal* conductor. Reduction modulo
//! the cyclotomic polynomial plus conductor minimization after every
//! operation makes the representation canonical: two values are equal if
//! and only if their fields are structurally identical, and rationals
//! always sit at conductor 1.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycloError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("value is not rational: {0}")]
    NotRational(String),
    #[error("value is not an integer: {0}")]
    NotIntegral(String),
}

/// Euler totient.
pub fn phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn prime_factors(n: u32) -> Vec<u32> {
    let mut n = n;
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Monic integer coefficients of the n-th cyclotomic polynomial,
/// low degree first, length `phi(n) + 1`.
fn cyclotomic_poly(n: u32) -> Arc<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, by exact polynomial
    // division over the integers.
    let mut num: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let div = cyclotomic_poly(d);
            num = int_poly_divide_exact(&num, &div);
        }
    }
    let result = Arc::new(num);
    cache.lock().unwrap().insert(n, result.clone());
    result
}

/// Exact division of integer polynomials (low degree first); the divisor
/// must be monic and divide evenly.
fn int_poly_divide_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut rem: Vec<BigInt> = num.to_vec();
    let mut quot = vec![BigInt::zero(); dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = rem[k + dd].clone();
        if !c.is_zero() {
            for (j, dj) in den.iter().enumerate() {
                let t = &c * dj;
                rem[k + j] -= t;
            }
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

fn rat_zero() -> BigRational {
    BigRational::zero()
}

/// An exact element of a cyclotomic field in canonical (reduced,
/// minimal-conductor) form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    conductor: u32,
    /// Coefficients over the power basis `1, z, ..., z^{phi(n)-1}`.
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![rat_zero()],
        }
    }

    pub fn one() -> Self {
        Cyclotomic::from_integer(1)
    }

    pub fn from_integer(k: i64) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![BigRational::from_integer(BigInt::from(k))],
        }
    }

    pub fn from_rational(r: BigRational) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    /// `zeta_n^k`, in canonical form.
    pub fn zeta(n: u32, k: i64) -> Self {
        assert!(n >= 1, "conductor must be positive");
        let k = k.rem_euclid(n as i64) as u32;
        let mut raw = vec![rat_zero(); n as usize];
        raw[k as usize] = BigRational::one();
        Cyclotomic::from_raw(n, raw)
    }

    /// Build from an exponent vector of length `n` (coefficients of
    /// `z^0..z^{n-1}`), reducing and minimizing.
    fn from_raw(n: u32, raw: Vec<BigRational>) -> Self {
        let coeffs = reduce_mod_cyclotomic(n, raw);
        let mut v = Cyclotomic {
            conductor: n,
            coeffs,
        };
        v.minimize();
        v
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn is_zero(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn as_rational(&self) -> Result<BigRational, CycloError> {
        if self.conductor == 1 {
            Ok(self.coeffs[0].clone())
        } else {
            Err(CycloError::NotRational(self.to_string()))
        }
    }

    pub fn as_integer(&self) -> Result<BigInt, CycloError> {
        let r = self
            .as_rational()
            .map_err(|_| CycloError::NotIntegral(self.to_string()))?;
        if r.is_integer() {
            Ok(r.to_integer())
        } else {
            Err(CycloError::NotIntegral(self.to_string()))
        }
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        let n = lcm(self.conductor, other.conductor);
        let mut raw = self.lift_raw(n);
        for (i, c) in other.lift_raw(n).into_iter().enumerate() {
            raw[i] += c;
        }
        Cyclotomic::from_raw(n, raw)
    }

    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        if self.is_zero() || other.is_zero() {
            return Cyclotomic::zero();
        }
        let n = lcm(self.conductor, other.conductor);
        let a = self.lift_coeffs(n);
        let b = other.lift_coeffs(n);
        let mut raw = vec![rat_zero(); a.len() + b.len() - 1 + 1];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                raw[i + j] += ai * bj;
            }
        }
        Cyclotomic::from_raw(n, raw)
    }

    pub fn scale(&self, r: &BigRational) -> Cyclotomic {
        if r.is_zero() {
            return Cyclotomic::zero();
        }
        let mut v = Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        };
        v.minimize();
        v
    }

    /// Multiplicative inverse, via the extended Euclidean algorithm in
    /// `Q[x]` modulo the cyclotomic polynomial.
    pub fn inv(&self) -> Result<Cyclotomic, CycloError> {
        if self.is_zero() {
            return Err(CycloError::DivisionByZero);
        }
        if self.conductor == 1 {
            return Ok(Cyclotomic::from_rational(self.coeffs[0].recip()));
        }
        let n = self.conductor;
        let phi_n: Vec<BigRational> = cyclotomic_poly(n)
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let u = poly_modular_inverse(&self.coeffs, &phi_n)
            .expect("nonzero element of a field must be invertible");
        Ok(Cyclotomic::from_raw(n, u))
    }

    /// The Galois map `zeta_n -> zeta_n^k`; requires `gcd(k, n) = 1`.
    pub fn galois(&self, k: u32) -> Cyclotomic {
        let n = self.conductor;
        let k = k % n;
        assert!(gcd(k.max(1), n) == 1, "galois exponent must be a unit");
        if n == 1 {
            return self.clone();
        }
        let mut raw = vec![rat_zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let e = (i as u64 * k as u64 % n as u64) as usize;
                raw[e] += c;
            }
        }
        Cyclotomic::from_raw(n, raw)
    }

    /// Complex conjugation `zeta_n^k -> zeta_n^{n-k}`.
    pub fn conjugate(&self) -> Cyclotomic {
        if self.conductor == 1 {
            return self.clone();
        }
        self.galois(self.conductor - 1)
    }

    /// `(a + conjugate(a)) / 2`.
    pub fn real_part(&self) -> Cyclotomic {
        let two = BigRational::from_integer(BigInt::from(2));
        self.add(&self.conjugate()).scale(&two.recip())
    }

    /// Coefficients lifted to the power basis at conductor `n`
    /// (a multiple of the own conductor), reduced mod `Phi_n`.
    fn lift_coeffs(&self, n: u32) -> Vec<BigRational> {
        if n == self.conductor {
            return self.coeffs.clone();
        }
        reduce_mod_cyclotomic(n, self.lift_raw(n))
    }

    /// Exponent vector of length `n` with entries at `i * (n / conductor)`.
    fn lift_raw(&self, n: u32) -> Vec<BigRational> {
        debug_assert!(n % self.conductor == 0);
        let step = (n / self.conductor) as usize;
        let mut raw = vec![rat_zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                raw[i * step] = c.clone();
            }
        }
        raw
    }

    /// Descend to the minimal conductor.
    fn minimize(&mut self) {
        loop {
            let n = self.conductor;
            if n == 1 {
                return;
            }
            let mut descended = false;
            for p in prime_factors(n) {
                let sub = n / p;
                if self.is_fixed_by_relative_galois(sub) {
                    self.rewrite_at(sub);
                    descended = true;
                    break;
                }
            }
            if !descended {
                return;
            }
        }
    }

    /// Is the value fixed by every `zeta_n -> zeta_n^k` with
    /// `k = 1 mod sub`, `gcd(k, n) = 1`?
    fn is_fixed_by_relative_galois(&self, sub: u32) -> bool {
        let n = self.conductor;
        let mut k = 1 + sub;
        while k < n {
            if gcd(k, n) == 1 {
                // Inline comparison without minimization to avoid recursion.
                let mut raw = vec![rat_zero(); n as usize];
                for (i, c) in self.coeffs.iter().enumerate() {
                    if !c.is_zero() {
                        raw[(i as u64 * k as u64 % n as u64) as usize] += c;
                    }
                }
                if reduce_mod_cyclotomic(n, raw) != self.coeffs {
                    return false;
                }
            }
            k += sub;
        }
        true
    }

    /// Rewrite a value known to lie in `Q(zeta_sub)` over the smaller
    /// power basis by solving the linear change-of-basis system.
    fn rewrite_at(&mut self, sub: u32) {
        let n = self.conductor;
        let dim_big = phi(n) as usize;
        let dim_sub = phi(sub) as usize;
        // Columns: basis vectors of Q(zeta_sub) expressed at conductor n.
        let mut cols: Vec<Vec<BigRational>> = Vec::with_capacity(dim_sub);
        let step = (n / sub) as usize;
        for j in 0..dim_sub {
            let mut raw = vec![rat_zero(); n as usize];
            raw[j * step] = BigRational::one();
            cols.push(reduce_mod_cyclotomic(n, raw));
        }
        let sol = solve_linear(&cols, &self.coeffs, dim_big)
            .expect("Galois-invariant value must lie in the subfield");
        self.conductor = sub;
        self.coeffs = sol;
    }
}

/// Reduce an exponent vector (any length) modulo `Phi_n`, returning
/// exactly `phi(n)` coefficients.
fn reduce_mod_cyclotomic(n: u32, mut raw: Vec<BigRational>) -> Vec<BigRational> {
    let deg = phi(n) as usize;
    let modulus = cyclotomic_poly(n);
    // First fold exponents >= n using z^n = 1, which keeps vectors short.
    if raw.len() > n as usize {
        for i in (n as usize..raw.len()).rev() {
            if !raw[i].is_zero() {
                let c = std::mem::replace(&mut raw[i], rat_zero());
                raw[i - n as usize] += c;
            }
        }
        raw.truncate(n as usize);
    }
    // Then divide by the monic Phi_n.
    for i in (deg..raw.len()).rev() {
        if raw[i].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut raw[i], rat_zero());
        for (j, m) in modulus.iter().enumerate().take(deg) {
            if !m.is_zero() {
                raw[i - deg + j] -= &c * &BigRational::from_integer(m.clone());
            }
        }
    }
    raw.resize(deg, rat_zero());
    raw
}

/// Inverse of `a` modulo the monic polynomial `m` over `Q`, or None if
/// they share a factor.
fn poly_modular_inverse(
    a: &[BigRational],
    m: &[BigRational],
) -> Option<Vec<BigRational>> {
    // Extended Euclid on (m, a): maintain r = s*m + t*a.
    let mut r0: Vec<BigRational> = m.to_vec();
    let mut r1: Vec<BigRational> = a.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    let mut t0: Vec<BigRational> = vec![];
    let mut t1: Vec<BigRational> = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, rem) = poly_divrem(&r0, &r1);
        let t2 = poly_sub(&t0, &poly_mul(&q, &t1));
        r0 = r1;
        r1 = rem;
        t0 = t1;
        t1 = t2;
    }
    if r0.len() != 1 {
        return None;
    }
    let lead = r0[0].clone();
    let mut inv: Vec<BigRational> = t0.iter().map(|c| c / &lead).collect();
    inv.resize(m.len() - 1, rat_zero());
    Some(inv)
}

fn trim(p: &mut Vec<BigRational>) {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let lead = &b[db];
    if rem.len() <= db {
        return (vec![], rem);
    }
    let mut quot = vec![rat_zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] / lead;
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                let t = &c * bj;
                rem[k + j] -= t;
            }
        }
        quot[k] = c;
    }
    trim(&mut rem);
    (quot, rem)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![rat_zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = a.to_vec();
    out.resize(out.len().max(b.len()), rat_zero());
    for (i, bi) in b.iter().enumerate() {
        out[i] -= bi;
    }
    trim(&mut out);
    out
}

/// Solve `sum_j x_j cols[j] = rhs` by Gaussian elimination; `dim` is the
/// length of each column.
fn solve_linear(
    cols: &[Vec<BigRational>],
    rhs: &[BigRational],
    dim: usize,
) -> Option<Vec<BigRational>> {
    let ncols = cols.len();
    // Augmented matrix rows.
    let mut mat: Vec<Vec<BigRational>> = (0..dim)
        .map(|i| {
            let mut row: Vec<BigRational> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    let mut pivot_of_col = vec![usize::MAX; ncols];
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..dim).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(row, p);
        let lead = mat[row][col].clone();
        for c in mat[row].iter_mut() {
            *c /= &lead;
        }
        for r in 0..dim {
            if r != row && !mat[r][col].is_zero() {
                let f = mat[r][col].clone();
                for c in 0..=ncols {
                    let t = &f * &mat[row][c];
                    mat[r][c] -= t;
                }
            }
        }
        pivot_of_col[col] = row;
        row += 1;
    }
    // Consistency: all remaining rows must have zero rhs.
    for r in row..dim {
        if !mat[r][ncols].is_zero() {
            return None;
        }
    }
    let mut sol = vec![rat_zero(); ncols];
    for (col, &pr) in pivot_of_col.iter().enumerate() {
        if pr != usize::MAX {
            sol[col] = mat[pr][ncols].clone();
        }
    }
    Some(sol)
}

fn gcd(a: u32, b: u32) -> u32 {
    a.gcd(&b)
}

fn lcm(a: u32, b: u32) -> u32 {
    a / gcd(a, b) * b
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = c.is_negative();
            if first {
                if sign {
                    write!(f, "-")?;
                }
                first = false;
            } else if sign {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_unit_coeff = mag.is_one();
            if i == 0 {
                write!(f, "{}", mag)?;
            } else {
                if !is_unit_coeff {
                    write!(f, "{}*", mag)?;
                }
                if i == 1 {
                    write!(f, "z({})", self.conductor)?;
                } else {
                    write!(f, "z({})^{}", self.conductor, i)?;
                }
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        Cyclotomic::add(self, rhs)
    }
}

impl std::ops::Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        Cyclotomic::sub(self, rhs)
    }
}

impl std::ops::Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        Cyclotomic::mul(self, rhs)
    }
}

impl std::ops::Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic::neg(self)
    }
}
