//! Concrete group element backends and their canonical encodings.
//!
//! Every element carries a backend tag; equality, hashing and ordering
//! are structural on the payload, and `encoding()` produces a canonical
//! byte string whose lexicographic order agrees with `Ord`. That order
//! is what makes element-table indexing deterministic.

use std::cmp::Ordering;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};

/// Shared description of a square-matrix backend.
#[derive(Debug)]
pub struct MatrixSpace {
    pub field: Field,
    pub dim: usize,
}

impl MatrixSpace {
    pub fn new(field: Field, dim: usize) -> Arc<MatrixSpace> {
        Arc::new(MatrixSpace { field, dim })
    }
}

/// Context for the affine-semilinear family of section-4 type groups:
/// G = F x| D over GF(q^r), F = GF(q^r)^2, D generated by x = z*beta
/// (scalar of order r^2 composed with the Frobenius of order r) and the
/// diagonal c = diag(1, f) of order t. D-parts are stored factored as
/// (z-power i mod r^2, c-power k mod t); the Frobenius power is i mod r.
#[derive(Debug)]
pub struct AffineCtx {
    pub field: Field, // GF(q^r)
    pub q: u32,
    pub r: u32,
    pub t: u32,
    pub r2: u32,
    /// scalar of multiplicative order r^2
    pub e: u32,
    /// element of multiplicative order t
    pub f: u32,
    /// zd[i] = e^(1 + q + ... + q^(i-1)): the scalar part of x^i
    pub zd: Vec<u32>,
    /// fp[k] = f^k
    pub fp: Vec<u32>,
    /// act1[i*t + k] = zd[i] * fp[k]: second diagonal entry of the x^i c^k action
    pub act1: Vec<u32>,
    /// q^i mod t, i in 0..r^2
    pub qpow_t: Vec<u32>,
    /// frob[j][a] = a^(q^j) for j in 0..r
    pub frob: Vec<Vec<u32>>,
}

impl AffineCtx {
    pub fn new(field: Field, q: u32, r: u32, t: u32, e: u32, f: u32) -> Arc<AffineCtx> {
        let r2 = r * r;
        let mut zd = Vec::with_capacity(r2 as usize);
        let mut sigma: u64 = 0;
        let mut qpow: u64 = 1;
        let modulus = (field.size - 1) as u64;
        for _ in 0..r2 {
            zd.push(field.pow(e, sigma));
            sigma = (sigma + qpow) % modulus;
            qpow = (qpow * q as u64) % modulus;
        }
        let fp: Vec<u32> = (0..t).map(|k| field.pow(f, k as u64)).collect();
        let mut act1 = Vec::with_capacity((r2 * t) as usize);
        for i in 0..r2 {
            for k in 0..t {
                act1.push(field.mul(zd[i as usize], fp[k as usize]));
            }
        }
        let qpow_t: Vec<u32> = {
            let mut v = Vec::with_capacity(r2 as usize);
            let mut cur = 1u64;
            for _ in 0..r2 {
                v.push(cur as u32);
                cur = (cur * q as u64) % t as u64;
            }
            v
        };
        let frob: Vec<Vec<u32>> = (0..r)
            .map(|j| {
                (0..field.size).map(|a| field.pow(a, (q as u64).pow(j))).collect()
            })
            .collect();
        Arc::new(AffineCtx { field, q, r, t, r2, e, f, zd, fp, act1, qpow_t, frob })
    }

    /// Image of the vector (v0, v1) under the action of x^i c^k.
    #[inline]
    pub fn act(&self, v0: u32, v1: u32, i: u16, k: u16) -> (u32, u32) {
        let fr = &self.frob[(i as u32 % self.r) as usize];
        let w0 = self.field.mul(fr[v0 as usize], self.zd[i as usize]);
        let w1 = self.field.mul(fr[v1 as usize], self.act1[i as usize * self.t as usize + k as usize]);
        (w0, w1)
    }

    /// Product in D: (i1,k1)(i2,k2) = (i1+i2, k1*q^i2 + k2).
    #[inline]
    pub fn dmul(&self, i1: u16, k1: u16, i2: u16, k2: u16) -> (u16, u16) {
        let i = (i1 as u32 + i2 as u32) % self.r2;
        let k = (k1 as u64 * self.qpow_t[i2 as usize] as u64 + k2 as u64) % self.t as u64;
        (i as u16, k as u16)
    }

    #[inline]
    pub fn dinv(&self, i: u16, k: u16) -> (u16, u16) {
        let ii = ((self.r2 - i as u32) % self.r2) as u16;
        let kk = (self.t as u64 - (k as u64 * self.qpow_t[ii as usize] as u64) % self.t as u64)
            % self.t as u64;
        (ii, kk as u16)
    }
}

/// Context for the metacyclic family C_p x| C_d: elements are the affine
/// maps u -> m^s * u + t on Z_p, with m the fixed multiplier of order d.
#[derive(Debug)]
pub struct ModPairCtx {
    pub p: u32,
    pub d: u32,
    pub m: u32,
    /// mpow[s] = m^s mod p
    pub mpow: Vec<u32>,
}

impl ModPairCtx {
    pub fn new(p: u32, d: u32, m: u32) -> Arc<ModPairCtx> {
        let mut mpow = Vec::with_capacity(d as usize);
        let mut cur = 1u64;
        for _ in 0..d {
            mpow.push(cur as u32);
            cur = cur * m as u64 % p as u64;
        }
        Arc::new(ModPairCtx { p, d, m, mpow })
    }
}

#[derive(Debug, Clone)]
pub enum GroupElement {
    /// Permutation on 0..n, stored as the image array.
    Perm(Vec<u16>),
    /// Square matrix over a finite field, row-major element codes.
    Matrix { space: Arc<MatrixSpace>, data: Vec<u32> },
    /// Affine-semilinear element (x^i c^k, translation v) of a section-4
    /// family group, meaning the map w -> w^(x^i c^k) + v.
    Affine { ctx: Arc<AffineCtx>, v0: u32, v1: u32, i: u16, k: u16 },
    /// Affine map on Z_p from the metacyclic Frobenius family.
    ModPair { ctx: Arc<ModPairCtx>, t: u32, s: u32 },
}

impl GroupElement {
    pub fn backend_tag(&self) -> u8 {
        match self {
            GroupElement::Perm(_) => 1,
            GroupElement::Matrix { .. } => 2,
            GroupElement::Affine { .. } => 3,
            GroupElement::ModPair { .. } => 4,
        }
    }

    pub fn identity_like(&self) -> GroupElement {
        match self {
            GroupElement::Perm(im) => GroupElement::Perm((0..im.len() as u16).collect()),
            GroupElement::Matrix { space, .. } => {
                let n = space.dim;
                let mut data = vec![0; n * n];
                for i in 0..n {
                    data[i * n + i] = 1;
                }
                GroupElement::Matrix { space: space.clone(), data }
            }
            GroupElement::Affine { ctx, .. } => {
                GroupElement::Affine { ctx: ctx.clone(), v0: 0, v1: 0, i: 0, k: 0 }
            }
            GroupElement::ModPair { ctx, .. } => {
                GroupElement::ModPair { ctx: ctx.clone(), t: 0, s: 0 }
            }
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            GroupElement::Perm(im) => im.iter().enumerate().all(|(i, &x)| i as u16 == x),
            GroupElement::Matrix { space, data } => {
                let n = space.dim;
                data.iter().enumerate().all(|(idx, &v)| {
                    if idx / n == idx % n { v == 1 } else { v == 0 }
                })
            }
            GroupElement::Affine { v0, v1, i, k, .. } => {
                *v0 == 0 && *v1 == 0 && *i == 0 && *k == 0
            }
            GroupElement::ModPair { t, s, .. } => *t == 0 && *s == 0,
        }
    }

    pub fn same_backend(&self, other: &GroupElement) -> bool {
        match (self, other) {
            (GroupElement::Perm(a), GroupElement::Perm(b)) => a.len() == b.len(),
            (GroupElement::Matrix { space: sa, .. }, GroupElement::Matrix { space: sb, .. }) => {
                sa.dim == sb.dim && sa.field == sb.field
            }
            (GroupElement::Affine { ctx: a, .. }, GroupElement::Affine { ctx: b, .. }) => {
                a.q == b.q && a.r == b.r && a.t == b.t
            }
            (GroupElement::ModPair { ctx: a, .. }, GroupElement::ModPair { ctx: b, .. }) => {
                a.p == b.p && a.d == b.d
            }
            _ => false,
        }
    }

    /// Group product; panics on backend mismatch (use [`elem_mul`] for the
    /// checked public entry point).
    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        match (self, other) {
            (GroupElement::Perm(a), GroupElement::Perm(b)) => {
                debug_assert_eq!(a.len(), b.len());
                GroupElement::Perm(a.iter().map(|&x| b[x as usize]).collect())
            }
            (
                GroupElement::Matrix { space, data: a },
                GroupElement::Matrix { data: b, .. },
            ) => {
                let n = space.dim;
                let f = &space.field;
                let mut out = vec![0u32; n * n];
                for i in 0..n {
                    for l in 0..n {
                        let ail = a[i * n + l];
                        if ail == 0 {
                            continue;
                        }
                        for j in 0..n {
                            out[i * n + j] =
                                f.add(out[i * n + j], f.mul(ail, b[l * n + j]));
                        }
                    }
                }
                GroupElement::Matrix { space: space.clone(), data: out }
            }
            (
                GroupElement::Affine { ctx, v0: a0, v1: a1, i: i1, k: k1 },
                GroupElement::Affine { v0: b0, v1: b1, i: i2, k: k2, .. },
            ) => {
                // (d1, v1)(d2, v2) = (d1 d2, v1^{d2} + v2)
                let (i, k) = ctx.dmul(*i1, *k1, *i2, *k2);
                let (w0, w1) = ctx.act(*a0, *a1, *i2, *k2);
                GroupElement::Affine {
                    ctx: ctx.clone(),
                    v0: ctx.field.add(w0, *b0),
                    v1: ctx.field.add(w1, *b1),
                    i,
                    k,
                }
            }
            (
                GroupElement::ModPair { ctx, t: t1, s: s1 },
                GroupElement::ModPair { t: t2, s: s2, .. },
            ) => {
                let t = (ctx.mpow[*s2 as usize] as u64 * *t1 as u64 + *t2 as u64) % ctx.p as u64;
                GroupElement::ModPair {
                    ctx: ctx.clone(),
                    t: t as u32,
                    s: (s1 + s2) % ctx.d,
                }
            }
            _ => panic!("backend mismatch in group multiplication"),
        }
    }

    pub fn inv(&self) -> GroupElement {
        match self {
            GroupElement::Perm(a) => {
                let mut out = vec![0u16; a.len()];
                for (i, &x) in a.iter().enumerate() {
                    out[x as usize] = i as u16;
                }
                GroupElement::Perm(out)
            }
            GroupElement::Matrix { space, data } => GroupElement::Matrix {
                space: space.clone(),
                data: matrix_inverse(&space.field, space.dim, data)
                    .expect("group element matrices are invertible"),
            },
            GroupElement::Affine { ctx, v0, v1, i, k } => {
                let (ii, kk) = ctx.dinv(*i, *k);
                let (w0, w1) = ctx.act(*v0, *v1, ii, kk);
                GroupElement::Affine {
                    ctx: ctx.clone(),
                    v0: ctx.field.neg(w0),
                    v1: ctx.field.neg(w1),
                    i: ii,
                    k: kk,
                }
            }
            GroupElement::ModPair { ctx, t, s } => {
                let ss = (ctx.d - s) % ctx.d;
                let tt = (ctx.p as u64 - ctx.mpow[ss as usize] as u64 * *t as u64 % ctx.p as u64)
                    % ctx.p as u64;
                GroupElement::ModPair { ctx: ctx.clone(), t: tt as u32, s: ss }
            }
        }
    }

    /// self conjugated by h: h^-1 * self * h.
    pub fn conj(&self, h: &GroupElement) -> GroupElement {
        h.inv().mul(self).mul(h)
    }

    /// Commutator [self, other] = self^-1 other^-1 self other.
    pub fn comm(&self, other: &GroupElement) -> GroupElement {
        self.inv().mul(&other.inv()).mul(self).mul(other)
    }

    /// Least m >= 1 with self^m = identity.
    pub fn order(&self) -> u64 {
        let mut cur = self.clone();
        let mut n = 1u64;
        while !cur.is_identity() {
            cur = cur.mul(self);
            n += 1;
        }
        n
    }

    pub fn pow(&self, e: u64) -> GroupElement {
        let mut acc = self.identity_like();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Canonical byte encoding: backend tag, then fixed-width payload.
    /// Lexicographic order on encodings agrees with `Ord`.
    pub fn encoding(&self) -> Vec<u8> {
        let mut out = vec![self.backend_tag()];
        match self {
            GroupElement::Perm(im) => {
                out.extend((im.len() as u16).to_be_bytes());
                for &x in im {
                    out.extend(x.to_be_bytes());
                }
            }
            GroupElement::Matrix { space, data } => {
                out.push(space.dim as u8);
                out.extend(space.field.p.to_be_bytes());
                out.push(space.field.k as u8);
                for &v in data {
                    out.extend(v.to_be_bytes());
                }
            }
            GroupElement::Affine { v0, v1, i, k, .. } => {
                out.extend(i.to_be_bytes());
                out.extend(k.to_be_bytes());
                out.extend(v0.to_be_bytes());
                out.extend(v1.to_be_bytes());
            }
            GroupElement::ModPair { t, s, .. } => {
                out.extend(s.to_be_bytes());
                out.extend(t.to_be_bytes());
            }
        }
        out
    }
}

/// Checked product: errors on backend or dimension mismatch.
pub fn elem_mul(a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
    if !a.same_backend(b) {
        return Err(Error::BackendMismatch);
    }
    Ok(a.mul(b))
}

pub fn elem_inv(a: &GroupElement) -> GroupElement {
    a.inv()
}

pub fn elem_eq(a: &GroupElement, b: &GroupElement) -> bool {
    a == b
}

pub fn elem_order(a: &GroupElement) -> u64 {
    a.order()
}

fn matrix_inverse(f: &FieldSpec, n: usize, data: &[u32]) -> Option<Vec<u32>> {
    // Gauss-Jordan on [A | I].
    let mut a: Vec<u32> = data.to_vec();
    let mut inv = vec![0u32; n * n];
    for i in 0..n {
        inv[i * n + i] = 1;
    }
    for col in 0..n {
        let pivot = (col..n).find(|&r| a[r * n + col] != 0)?;
        if pivot != col {
            for j in 0..n {
                a.swap(col * n + j, pivot * n + j);
                inv.swap(col * n + j, pivot * n + j);
            }
        }
        let pv = f.inv(a[col * n + col]);
        for j in 0..n {
            a[col * n + j] = f.mul(a[col * n + j], pv);
            inv[col * n + j] = f.mul(inv[col * n + j], pv);
        }
        for r in 0..n {
            if r != col && a[r * n + col] != 0 {
                let factor = a[r * n + col];
                for j in 0..n {
                    a[r * n + j] = f.sub(a[r * n + j], f.mul(factor, a[col * n + j]));
                    inv[r * n + j] = f.sub(inv[r * n + j], f.mul(factor, inv[col * n + j]));
                }
            }
        }
    }
    Some(inv)
}

pub fn matrix_determinant(f: &FieldSpec, n: usize, data: &[u32]) -> u32 {
    let mut a: Vec<u32> = data.to_vec();
    let mut det = 1u32;
    for col in 0..n {
        let pivot = match (col..n).find(|&r| a[r * n + col] != 0) {
            Some(p) => p,
            None => return 0,
        };
        if pivot != col {
            for j in 0..n {
                a.swap(col * n + j, pivot * n + j);
            }
            det = f.neg(det);
        }
        det = f.mul(det, a[col * n + col]);
        let pv = f.inv(a[col * n + col]);
        for r in col + 1..n {
            if a[r * n + col] != 0 {
                let factor = f.mul(a[r * n + col], pv);
                for j in col..n {
                    a[r * n + j] = f.sub(a[r * n + j], f.mul(factor, a[col * n + j]));
                }
            }
        }
    }
    det
}

/// Build a permutation of degree `n` from disjoint 1-based cycles.
pub fn perm_from_cycles(n: usize, cycles: &[&[u16]]) -> GroupElement {
    let mut im: Vec<u16> = (0..n as u16).collect();
    for cyc in cycles {
        for w in 0..cyc.len() {
            let from = cyc[w] - 1;
            let to = cyc[(w + 1) % cyc.len()] - 1;
            im[from as usize] = to;
        }
    }
    GroupElement::Perm(im)
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (GroupElement::Perm(a), GroupElement::Perm(b)) => a == b,
            (
                GroupElement::Matrix { space: sa, data: a },
                GroupElement::Matrix { space: sb, data: b },
            ) => sa.dim == sb.dim && sa.field == sb.field && a == b,
            (
                GroupElement::Affine { ctx: ca, v0: a0, v1: a1, i: ia, k: ka },
                GroupElement::Affine { ctx: cb, v0: b0, v1: b1, i: ib, k: kb },
            ) => {
                ca.q == cb.q
                    && ca.r == cb.r
                    && ca.t == cb.t
                    && (a0, a1, ia, ka) == (b0, b1, ib, kb)
            }
            (
                GroupElement::ModPair { ctx: ca, t: ta, s: sa },
                GroupElement::ModPair { ctx: cb, t: tb, s: sb },
            ) => ca.p == cb.p && ca.d == cb.d && (ta, sa) == (tb, sb),
            _ => false,
        }
    }
}
impl Eq for GroupElement {}

impl Hash for GroupElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        state.write_u8(self.backend_tag());
        match self {
            GroupElement::Perm(im) => im.hash(state),
            GroupElement::Matrix { data, .. } => data.hash(state),
            GroupElement::Affine { v0, v1, i, k, .. } => (v0, v1, i, k).hash(state),
            GroupElement::ModPair { t, s, .. } => (t, s).hash(state),
        }
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        // Mirrors the lexicographic order of `encoding()`.
        match (self, other) {
            (GroupElement::Perm(a), GroupElement::Perm(b)) => {
                a.len().cmp(&b.len()).then_with(|| a.cmp(b))
            }
            (
                GroupElement::Matrix { space: sa, data: a },
                GroupElement::Matrix { space: sb, data: b },
            ) => sa
                .dim
                .cmp(&sb.dim)
                .then_with(|| sa.field.p.cmp(&sb.field.p))
                .then_with(|| sa.field.k.cmp(&sb.field.k))
                .then_with(|| a.cmp(b)),
            (
                GroupElement::Affine { v0: a0, v1: a1, i: ia, k: ka, .. },
                GroupElement::Affine { v0: b0, v1: b1, i: ib, k: kb, .. },
            ) => (ia, ka, a0, a1).cmp(&(ib, kb, b0, b1)),
            (
                GroupElement::ModPair { t: ta, s: sa, .. },
                GroupElement::ModPair { t: tb, s: sb, .. },
            ) => (sa, ta).cmp(&(sb, tb)),
            _ => self.backend_tag().cmp(&other.backend_tag()),
        }
    }
}

impl std::fmt::Display for GroupElement {
    fn fmt(&self, fmt: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupElement::Perm(im) => {
                // cycle notation, 1-based
                let n = im.len();
                let mut seen = vec![false; n];
                let mut wrote = false;
                for start in 0..n {
                    if seen[start] || im[start] as usize == start {
                        seen[start] = true;
                        continue;
                    }
                    write!(fmt, "(")?;
                    let mut cur = start;
                    let mut first = true;
                    while !seen[cur] {
                        seen[cur] = true;
                        if !first {
                            write!(fmt, ",")?;
                        }
                        write!(fmt, "{}", cur + 1)?;
                        first = false;
                        cur = im[cur] as usize;
                    }
                    write!(fmt, ")")?;
                    wrote = true;
                }
                if !wrote {
                    write!(fmt, "()")?;
                }
                Ok(())
            }
            GroupElement::Matrix { space, data } => {
                write!(fmt, "mat{}x{}{:?}", space.dim, space.dim, data)
            }
            GroupElement::Affine { v0, v1, i, k, .. } => {
                write!(fmt, "aff(v=({v0},{v1}),x^{i} c^{k})")
            }
            GroupElement::ModPair { t, s, .. } => write!(fmt, "modpair(t={t},s={s})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::field_make;

    #[test]
    fn involution_squares_to_identity() {
        let a = perm_from_cycles(4, &[&[1, 2]]);
        assert!(a.mul(&a).is_identity());
        assert_eq!(a.order(), 2);
    }

    #[test]
    fn five_cycle_has_order_five() {
        let a = perm_from_cycles(5, &[&[1, 2, 3, 4, 5]]);
        assert_eq!(a.order(), 5);
    }

    #[test]
    fn matrix_inverse_round_trip() {
        let f = field_make(3, 1, 65536).unwrap();
        let sp = MatrixSpace::new(f, 2);
        let m = GroupElement::Matrix { space: sp.clone(), data: vec![1, 1, 0, 1] };
        assert!(m.mul(&m.inv()).is_identity());
        let n = GroupElement::Matrix { space: sp, data: vec![0, 1, 2, 0] };
        assert!(n.mul(&n.inv()).is_identity());
    }

    #[test]
    fn backend_mismatch_is_an_error() {
        let a = perm_from_cycles(3, &[&[1, 2]]);
        let b = perm_from_cycles(4, &[&[1, 2]]);
        assert!(matches!(elem_mul(&a, &b), Err(Error::BackendMismatch)));
    }

    #[test]
    fn encoding_order_matches_ord() {
        let mut elems: Vec<GroupElement> = Vec::new();
        for c in [vec![1u16, 2], vec![2, 3], vec![1, 3], vec![1, 2, 3]] {
            elems.push(perm_from_cycles(4, &[&c]));
        }
        let mut by_ord = elems.clone();
        by_ord.sort();
        let mut by_enc = elems;
        by_enc.sort_by_key(|e| e.encoding());
        assert_eq!(by_ord, by_enc);
    }

    #[test]
    fn display_uses_cycle_notation() {
        let a = perm_from_cycles(5, &[&[1, 2, 3]]);
        assert_eq!(a.to_string(), "(1,2,3)");
        assert_eq!(a.identity_like().to_string(), "()");
    }
}
