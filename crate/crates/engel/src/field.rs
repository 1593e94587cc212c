//! Arithmetic in GF(p^k) with a polynomial basis.
//!
//! Elements are encoded as `u32` codes in `0..p^k`: the code is
//! `c_0 + c_1*p + ... + c_{k-1}*p^{k-1}` for the residue
//! `c_0 + c_1*X + ...` modulo the reduction polynomial. Multiplication
//! goes through discrete log/exp tables built once per field, so the
//! same `(p, k)` always produces identical tables.

use std::sync::Arc;

use crate::error::{Error, Result};

/// A concrete finite field GF(p^k).
///
/// The reduction polynomial is the first monic irreducible of degree k
/// in code order (coefficient vector read as a base-p integer), so the
/// choice is deterministic.
#[derive(Debug)]
pub struct FieldSpec {
    pub p: u32,
    pub k: u32,
    /// p^k
    pub size: u32,
    /// Non-leading coefficients of the monic degree-k reduction polynomial,
    /// index j holding the coefficient of X^j.
    pub reduction_poly: Vec<u32>,
    /// Code of the chosen multiplicative generator.
    pub primitive: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

pub type Field = Arc<FieldSpec>;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Build GF(p^k). Deterministic: equal `(p, k)` yield equal specs.
pub fn field_make(p: u64, k: u32, cap: u64) -> Result<Field> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if k < 1 {
        return Err(Error::InvalidArgument("extension degree must be >= 1".into()));
    }
    let size = p.checked_pow(k).filter(|&s| s <= cap).ok_or(Error::FieldTooLarge {
        size: p.saturating_pow(k),
        cap,
    })?;
    let p = p as u32;
    let size = size as u32;
    let reduction_poly = smallest_irreducible(p, k);
    let (exp, log, primitive) = build_tables(p, k, size, &reduction_poly);
    Ok(Arc::new(FieldSpec { p, k, size, reduction_poly, primitive, exp, log }))
}

/// Digits of `code` in base p, least significant first, padded to `k`.
fn digits(p: u32, k: u32, code: u32) -> Vec<u32> {
    let mut c = code;
    (0..k)
        .map(|_| {
            let d = c % p;
            c /= p;
            d
        })
        .collect()
}

fn code_of(p: u32, coeffs: &[u32]) -> u32 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Multiply two polynomials over GF(p) and reduce modulo the monic
/// polynomial X^k + red(X). Used only while bootstrapping the tables.
fn poly_mulmod(p: u32, k: u32, red: &[u32], a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut prod = vec![0u64; (2 * k) as usize];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] += ai as u64 * bj as u64;
        }
    }
    for idx in (k as usize..prod.len()).rev() {
        let c = prod[idx] % p as u64;
        if c != 0 {
            // X^idx = X^(idx-k) * (p - red)(X)
            for (j, &rj) in red.iter().enumerate() {
                let sub = c * (p as u64 - rj as u64 % p as u64);
                prod[idx - k as usize + j] += sub;
            }
        }
        prod[idx] = 0;
    }
    prod[..k as usize].iter().map(|&c| (c % p as u64) as u32).collect()
}

fn is_irreducible(p: u32, k: u32, red: &[u32]) -> bool {
    // Trial division by every monic polynomial of degree 1..=k/2,
    // represented by its non-leading coefficients.
    for d in 1..=k / 2 {
        for m in 0..(p as u64).pow(d) {
            let div = digits(p, d, m as u32);
            // Remainder of X^k + red by X^d + div, over GF(p).
            let mut rem: Vec<u32> = red.to_vec();
            rem.push(1); // degree-k coefficient
            for idx in (d as usize..rem.len()).rev() {
                let c = rem[idx];
                if c != 0 {
                    rem[idx] = 0;
                    for (j, &dj) in div.iter().enumerate() {
                        let pos = idx - d as usize + j;
                        rem[pos] = (rem[pos] + c * (p - dj % p)) % p;
                    }
                }
            }
            if rem[..d as usize].iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(p: u32, k: u32) -> Vec<u32> {
    if k == 1 {
        // X itself: no non-leading coefficients beyond the constant 0.
        return vec![0];
    }
    let count = (p as u64).pow(k);
    for m in 0..count {
        let red = digits(p, k, m as u32);
        if is_irreducible(p, k, &red) {
            return red;
        }
    }
    unreachable!("an irreducible polynomial of degree {k} over GF({p}) exists")
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn build_tables(p: u32, k: u32, size: u32, red: &[u32]) -> (Vec<u32>, Vec<u32>, u32) {
    let order = (size - 1) as u64;
    let factors = prime_factors(order);
    let pow = |base: u32, mut e: u64| -> u32 {
        let mut acc = digits(p, k, 1);
        let mut b = digits(p, k, base);
        while e > 0 {
            if e & 1 == 1 {
                acc = poly_mulmod(p, k, red, &acc, &b);
            }
            b = poly_mulmod(p, k, red, &b, &b);
            e >>= 1;
        }
        code_of(p, &acc)
    };
    let mut primitive = 0;
    for cand in 2..size {
        if factors.iter().all(|&q| pow(cand, order / q) != 1) {
            primitive = cand;
            break;
        }
    }
    assert!(primitive != 0, "GF({size}) has a primitive element");
    let mut exp = vec![0u32; 2 * order as usize];
    let mut log = vec![u32::MAX; size as usize];
    let g = digits(p, k, primitive);
    let mut cur = digits(p, k, 1);
    for i in 0..order as usize {
        let c = code_of(p, &cur);
        exp[i] = c;
        exp[i + order as usize] = c;
        log[c as usize] = i as u32;
        cur = poly_mulmod(p, k, red, &cur, &g);
    }
    (exp, log, primitive)
}

impl FieldSpec {
    pub fn zero(&self) -> u32 {
        0
    }

    pub fn one(&self) -> u32 {
        1
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            return (a + b) % self.p;
        }
        let (p, mut a, mut b) = (self.p, a, b);
        let mut out = 0;
        let mut mult = 1;
        for _ in 0..self.k {
            out += (a % p + b % p) % p * mult;
            a /= p;
            b /= p;
            mult *= p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if self.k == 1 {
            return (self.p - a) % self.p;
        }
        let (p, mut a) = (self.p, a);
        let mut out = 0;
        let mut mult = 1;
        for _ in 0..self.k {
            out += (p - a % p) % p * mult;
            a /= p;
            mult *= p;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        debug_assert!(a != 0, "inverse of zero");
        let order = self.size - 1;
        self.exp[(order - self.log[a as usize]) as usize % order as usize]
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        let order = (self.size - 1) as u64;
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let l = self.log[a as usize] as u64;
        self.exp[((l * (e % order)) % order) as usize]
    }

    /// Multiplicative order of a non-zero element.
    pub fn mult_order(&self, a: u32) -> u64 {
        assert!(a != 0);
        let group = (self.size - 1) as u64;
        let mut ord = group;
        for q in prime_factors(group) {
            while ord.is_multiple_of(q) && self.pow(a, ord / q) == 1 {
                ord /= q;
            }
        }
        ord
    }

    /// The Frobenius x -> x^(p^j).
    #[inline]
    pub fn frobenius(&self, a: u32, j: u32) -> u32 {
        self.pow(a, (self.p as u64).pow(j % self.k))
    }

    /// Deterministic element of multiplicative order `d` (a power of the
    /// primitive element); `d` must divide `size - 1`.
    pub fn element_of_order(&self, d: u64) -> Result<u32> {
        let group = (self.size - 1) as u64;
        if d == 0 || !group.is_multiple_of(d) {
            return Err(Error::InvalidArgument(format!(
                "no element of multiplicative order {d} in GF({})",
                self.size
            )));
        }
        Ok(self.pow(self.primitive, group / d))
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k
    }
}
impl Eq for FieldSpec {}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64, k: u32) -> Field {
        field_make(p, k, 65536).unwrap()
    }

    #[test]
    fn prime_field_reduction_is_x() {
        let fp = f(13, 1);
        assert_eq!(fp.reduction_poly, vec![0]);
        assert_eq!(fp.size, 13);
    }

    #[test]
    fn gf8_has_element_of_multiplicative_order_7() {
        // Oracle: exhaustively enumerate powers.
        let f8 = f(2, 3);
        let mut found = false;
        for a in 1..8u32 {
            let mut cur = a;
            let mut n = 1;
            while cur != 1 {
                cur = f8.mul(cur, a);
                n += 1;
            }
            if n == 7 {
                found = true;
            }
            assert!(n == 1 || n == 7); // group of prime order 7
        }
        assert!(found);
        assert_eq!(f8.mult_order(f8.primitive), 7);
    }

    #[test]
    fn gf343_is_the_section_four_field() {
        let fq = f(7, 3);
        assert_eq!(fq.size, 343);
        assert_eq!(fq.mult_order(fq.primitive), 342);
        // 342 = 2 * 9 * 19: orders needed by the Ex4 construction.
        assert_eq!(fq.mult_order(fq.element_of_order(9).unwrap()), 9);
        assert_eq!(fq.mult_order(fq.element_of_order(19).unwrap()), 19);
    }

    #[test]
    fn rejects_non_prime_and_oversized() {
        assert!(matches!(field_make(6, 1, 65536), Err(Error::NotPrime(6))));
        assert!(matches!(field_make(2, 17, 65536), Err(Error::FieldTooLarge { .. })));
    }

    #[test]
    fn field_axioms_hold() {
        for (p, k) in [(2, 3), (3, 2), (7, 3), (5, 1)] {
            let fq = f(p, k as u32);
            for a in 0..fq.size {
                for b in 0..fq.size.min(60) {
                    assert_eq!(fq.add(a, b), fq.add(b, a));
                    assert_eq!(fq.mul(a, b), fq.mul(b, a));
                    assert_eq!(fq.add(a, fq.neg(a)), 0);
                    if a != 0 {
                        assert_eq!(fq.mul(a, fq.inv(a)), 1);
                    }
                    // distributivity against a fixed third element
                    let c = (a + b) % fq.size;
                    assert_eq!(fq.mul(a, fq.add(b, c)), fq.add(fq.mul(a, b), fq.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn deterministic_reconstruction() {
        let a = f(7, 3);
        let b = f(7, 3);
        assert_eq!(a.reduction_poly, b.reduction_poly);
        assert_eq!(a.primitive, b.primitive);
    }

    #[test]
    fn frobenius_is_field_automorphism_of_order_k() {
        let fq = f(7, 3);
        for a in 0..fq.size {
            for b in 0..30 {
                assert_eq!(
                    fq.frobenius(fq.add(a, b), 1),
                    fq.add(fq.frobenius(a, 1), fq.frobenius(b, 1))
                );
                assert_eq!(
                    fq.frobenius(fq.mul(a, b), 1),
                    fq.mul(fq.frobenius(a, 1), fq.frobenius(b, 1))
                );
            }
            assert_eq!(fq.frobenius(fq.frobenius(a, 1), 2), a);
        }
    }
}
