//! Arithmetic in F_{p^v} using a polynomial basis over Z_p.
//!
//! The modulus is the first monic irreducible of degree v in counting order
//! (constant coefficient varying fastest), and the distinguished generator is
//! the first element of multiplicative order p^v - 1 in the same order, so
//! every run of the crate picks the same field presentation.

use super::{lcm, modpow, mult_order, Shape};
use crate::{Error, Result};

/// Element of F_{p^v}: coefficient vector of length v, little-endian,
/// entries reduced mod p.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fe(pub(crate) Vec<u64>);

impl Fe {
    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Some(c) when the element lies in the prime field.
    pub fn as_prime_field(&self) -> Option<u64> {
        if self.0[1..].iter().all(|&c| c == 0) {
            Some(self.0[0])
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Field {
    p: u64,
    v: usize,
    /// Monic, dense, little-endian, length v + 1.
    modulus: Vec<u64>,
}

fn is_prime(n: u64) -> bool {
    n >= 2 && super::smallest_prime_factor(n) == n
}

fn trial_factorize(mut n: u64) -> Vec<u64> {
    let mut primes = Vec::new();
    let mut d = 2;
    while d as u128 * d as u128 <= n as u128 {
        if n % d == 0 {
            primes.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        primes.push(n);
    }
    primes
}

// Dense univariate polynomials over Z_p, little-endian, used only to pick the
// field modulus.
fn poly_trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    poly_trim(&mut a);
    let dm = m.len() - 1;
    let inv_lead = modpow(m[dm], p - 2, p);
    while a.len() > dm {
        let da = a.len() - 1;
        let c = a[da] % p * inv_lead % p;
        if c != 0 {
            for j in 0..=dm {
                let idx = da - dm + j;
                a[idx] = (a[idx] + (p - c * m[j] % p)) % p;
            }
        }
        poly_trim(&mut a);
        if a.is_empty() {
            break;
        }
    }
    a
}

fn poly_mul_mod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    poly_rem(&prod, m, p)
}

fn poly_pow_mod(base: &[u64], mut exp: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut base = poly_rem(base, m, p);
    let mut acc = vec![1u64];
    while exp > 0 {
        if exp & 1 == 1 {
            acc = poly_mul_mod(&acc, &base, m, p);
        }
        base = poly_mul_mod(&base, &base, m, p);
        exp >>= 1;
    }
    acc
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// x^{p^k} mod m via k-fold Frobenius.
fn frobenius_power(k: usize, m: &[u64], p: u64) -> Vec<u64> {
    let mut g = poly_rem(&[0, 1], m, p);
    for _ in 0..k {
        g = poly_pow_mod(&g, p, m, p);
    }
    g
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let ai = a.get(i).copied().unwrap_or(0);
        let bi = b.get(i).copied().unwrap_or(0);
        *o = (ai + p - bi) % p;
    }
    poly_trim(&mut out);
    out
}

fn is_irreducible(f: &[u64], p: u64) -> bool {
    let v = f.len() - 1;
    let x = poly_rem(&[0, 1], f, p);
    // x^{p^v} - x must vanish mod f.
    if !poly_sub(&frobenius_power(v, f, p), &x, p).is_empty() {
        return false;
    }
    for l in trial_factorize(v as u64) {
        let g = poly_sub(&frobenius_power(v / l as usize, f, p), &x, p);
        let d = poly_gcd(f, &g, p);
        if d.len() != 1 {
            return false;
        }
    }
    true
}

impl Field {
    /// F_{p^v} with the first irreducible modulus in counting order.
    pub fn new(p: u64, v: usize) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        if v == 0 {
            return Err(Error::InvalidArgument("extension degree must be positive".into()));
        }
        let size = (p as u128).checked_pow(v as u32).ok_or_else(|| {
            Error::InvalidArgument(format!("field size {p}^{v} is out of range"))
        })?;
        if size > u64::MAX as u128 {
            return Err(Error::InvalidArgument(format!(
                "field size {p}^{v} is out of range"
            )));
        }
        // The v coefficients below the leading 1 range over p^v combinations.
        for n in 0..size as u64 {
            let mut f = vec![0u64; v + 1];
            let mut m = n;
            for c in f.iter_mut().take(v) {
                *c = m % p;
                m /= p;
            }
            f[v] = 1;
            if is_irreducible(&f, p) {
                return Ok(Field { p, v, modulus: f });
            }
        }
        Err(Error::Internal(format!(
            "no irreducible of degree {v} over F_{p} found"
        )))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.v
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn size(&self) -> u64 {
        (self.p as u128).pow(self.v as u32) as u64
    }

    pub fn zero(&self) -> Fe {
        Fe(vec![0; self.v])
    }

    pub fn one(&self) -> Fe {
        self.from_u64(1)
    }

    pub fn from_u64(&self, c: u64) -> Fe {
        let mut e = vec![0; self.v];
        e[0] = c % self.p;
        Fe(e)
    }

    /// Element numbered `n` in counting order: base-p digits of n.
    pub fn element(&self, mut n: u64) -> Fe {
        let mut e = vec![0; self.v];
        for c in e.iter_mut() {
            *c = n % self.p;
            n /= self.p;
        }
        assert_eq!(n, 0, "element number out of range");
        Fe(e)
    }

    pub fn add(&self, a: &Fe, b: &Fe) -> Fe {
        Fe(a.0
            .iter()
            .zip(&b.0)
            .map(|(&x, &y)| (x + y) % self.p)
            .collect())
    }

    pub fn sub(&self, a: &Fe, b: &Fe) -> Fe {
        Fe(a.0
            .iter()
            .zip(&b.0)
            .map(|(&x, &y)| (x + self.p - y) % self.p)
            .collect())
    }

    pub fn neg(&self, a: &Fe) -> Fe {
        Fe(a.0.iter().map(|&x| (self.p - x) % self.p).collect())
    }

    pub fn mul(&self, a: &Fe, b: &Fe) -> Fe {
        let v = self.v;
        let mut prod = vec![0u64; 2 * v - 1];
        for (i, &ai) in a.0.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.0.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ai * bj) % self.p;
            }
        }
        // Reduce x^i for i >= v using the monic modulus.
        for i in (v..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..v {
                let sub = c * self.modulus[j] % self.p;
                prod[i - v + j] = (prod[i - v + j] + self.p - sub) % self.p;
            }
        }
        prod.truncate(v);
        Fe(prod)
    }

    pub fn pow(&self, a: &Fe, mut e: u64) -> Fe {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: &Fe) -> Result<Fe> {
        if a.is_zero() {
            return Err(Error::InvalidArgument("zero has no inverse".into()));
        }
        Ok(self.pow(a, self.size() - 2))
    }

    /// First element of multiplicative order p^v - 1 in counting order.
    pub fn smallest_primitive(&self) -> Fe {
        let n = self.size() - 1;
        let primes = trial_factorize(n);
        for i in 1..=n {
            let g = self.element(i);
            if primes
                .iter()
                .all(|&l| self.pow(&g, n / l) != self.one())
            {
                return g;
            }
        }
        unreachable!("the multiplicative group of a finite field is cyclic");
    }
}

/// The splitting field F_{q^v} of x^{r_j} - 1 over F_q together with the
/// distinguished primitive r_j-th roots of unity.
#[derive(Debug, Clone)]
pub struct SplittingField {
    pub field: Field,
    pub v: u64,
    pub generator: Fe,
    /// alphas[j] = g^{(q^v - 1)/r_j} has exact order r_j.
    pub alphas: Vec<Fe>,
}

/// Builds the splitting field for a shape. Requires q prime.
pub fn splitting_field(shape: &Shape) -> Result<SplittingField> {
    let q = shape.q();
    if q != shape.p() {
        return Err(Error::InvalidArgument(format!(
            "q = {q} must be prime to build the splitting field"
        )));
    }
    let l = shape.r().iter().fold(1u64, |acc, &rj| lcm(acc, rj as u64));
    let v = mult_order(q, l)?;
    let field = Field::new(q, v as usize)?;
    let generator = field.smallest_primitive();
    let n = field.size() - 1;
    let alphas = shape
        .r()
        .iter()
        .map(|&rj| field.pow(&generator, n / rj as u64))
        .collect();
    Ok(SplittingField {
        field,
        v,
        generator,
        alphas,
    })
}
