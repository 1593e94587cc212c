//! Constructors for the group families the toolkit analyzes, each
//! returning a [`Group`] over the cheapest faithful backend: symmetric,
//! alternating, cyclic and dihedral groups as permutations; GL/SL as
//! matrices; PSL(2,q) as the permutation action on the projective line;
//! Sz(8) as 4x4 matrices over GF(8); metacyclic Frobenius groups as
//! affine maps on Z_p; and the large affine-semilinear family with a
//! streaming backend.

use std::sync::Arc;

use crate::config::Config;
use crate::element::{
    matrix_determinant, AffineCtx, GroupElement, MatrixSpace, ModPairCtx,
};
use crate::error::{Error, Result};
use crate::field::{field_make, is_prime, Field};
use crate::group::Group;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    S,
    A,
    C,
    D,
    Gl,
    Sl,
    Psl,
    Sz,
    Frob,
    Ex4,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::S => "S",
            Family::A => "A",
            Family::C => "C",
            Family::D => "D",
            Family::Gl => "GL",
            Family::Sl => "SL",
            Family::Psl => "PSL",
            Family::Sz => "Sz",
            Family::Frob => "Frob",
            Family::Ex4 => "Ex4",
        }
    }

    pub fn from_name(name: &str) -> Option<Family> {
        Some(match name {
            "S" => Family::S,
            "A" => Family::A,
            "C" => Family::C,
            "D" => Family::D,
            "GL" => Family::Gl,
            "SL" => Family::Sl,
            "PSL" => Family::Psl,
            "Sz" => Family::Sz,
            "Frob" => Family::Frob,
            "Ex4" => Family::Ex4,
            _ => return None,
        })
    }

    pub fn arity(&self) -> usize {
        match self {
            Family::S | Family::A | Family::C | Family::D | Family::Sz => 1,
            Family::Gl | Family::Sl | Family::Psl | Family::Frob => 2,
            Family::Ex4 => 3,
        }
    }

    pub const ALL: [Family; 10] = [
        Family::S,
        Family::A,
        Family::C,
        Family::D,
        Family::Gl,
        Family::Sl,
        Family::Psl,
        Family::Sz,
        Family::Frob,
        Family::Ex4,
    ];
}

/// Parsed form of a group expression such as `PSL(2,11)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpecExpr {
    pub family: Family,
    pub args: Vec<u64>,
}

impl std::fmt::Display for GroupSpecExpr {
    fn fmt(&self, fmt: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(fmt, "{}(", self.family.name())?;
        for (i, a) in self.args.iter().enumerate() {
            if i > 0 {
                write!(fmt, ",")?;
            }
            write!(fmt, "{a}")?;
        }
        write!(fmt, ")")
    }
}

/// Build the group named by `expr`. For Ex4 this discards the extra
/// handles; use [`make_ex4`] directly when they are needed.
pub fn build(expr: &GroupSpecExpr, cfg: &Config) -> Result<Group> {
    let need = expr.family.arity();
    if expr.args.len() != need {
        return Err(Error::InvalidArgument(format!(
            "{} expects {} argument(s), got {}",
            expr.family.name(),
            need,
            expr.args.len()
        )));
    }
    let a = &expr.args;
    match expr.family {
        Family::S => make_symmetric(a[0], cfg),
        Family::A => make_alternating(a[0], cfg),
        Family::C => make_cyclic(a[0], cfg),
        Family::D => make_dihedral(a[0], cfg),
        Family::Gl => make_linear(LinearKind::Gl, a[0], a[1], cfg),
        Family::Sl => make_linear(LinearKind::Sl, a[0], a[1], cfg),
        Family::Psl => make_linear(LinearKind::Psl, a[0], a[1], cfg),
        Family::Sz => make_suzuki(a[0], cfg),
        Family::Frob => make_frobenius_metacyclic(a[0], a[1], cfg),
        Family::Ex4 => Ok(make_ex4(a[0], a[1], a[2], cfg)?.group),
    }
}

fn constraint(family: &str, what: impl Into<String>) -> Error {
    Error::ConstraintViolation { family: family.into(), constraint: what.into() }
}

fn cycle(n: u64, lo: u16, hi: u16) -> GroupElement {
    // the cycle (lo, lo+1, ..., hi), 1-based, inside degree n
    let mut im: Vec<u16> = (0..n as u16).collect();
    for v in lo..hi {
        im[(v - 1) as usize] = v;
    }
    im[(hi - 1) as usize] = lo - 1;
    GroupElement::Perm(im)
}

pub fn make_symmetric(n: u64, cfg: &Config) -> Result<Group> {
    if !(2..=9).contains(&n) {
        return Err(constraint("S", "n must be between 2 and 9"));
    }
    let mut gens = vec![crate::element::perm_from_cycles(n as usize, &[&[1, 2]])];
    if n > 2 {
        gens.push(cycle(n, 1, n as u16));
    }
    Ok(Group::from_generators(gens, cfg))
}

pub fn make_alternating(n: u64, cfg: &Config) -> Result<Group> {
    if !(2..=9).contains(&n) {
        return Err(constraint("A", "n must be between 2 and 9"));
    }
    let gens = if n == 2 {
        vec![GroupElement::Perm(vec![0, 1])]
    } else if n == 3 {
        vec![crate::element::perm_from_cycles(3, &[&[1, 2, 3]])]
    } else {
        let long = if n % 2 == 1 { cycle(n, 1, n as u16) } else { cycle(n, 2, n as u16) };
        vec![crate::element::perm_from_cycles(n as usize, &[&[1, 2, 3]]), long]
    };
    Ok(Group::from_generators(gens, cfg))
}

pub fn make_cyclic(n: u64, cfg: &Config) -> Result<Group> {
    if n == 0 || n > cfg.max_order_stored {
        return Err(constraint("C", "n must be between 1 and the stored-table cap"));
    }
    let im: Vec<u16> = (0..n as usize).map(|x| ((x + 1) % n as usize) as u16).collect();
    Ok(Group::from_generators(vec![GroupElement::Perm(im)], cfg))
}

pub fn make_dihedral(n: u64, cfg: &Config) -> Result<Group> {
    if !(3..=50_000).contains(&n) {
        return Err(constraint("D", "n must be between 3 and 50000"));
    }
    let rot: Vec<u16> = (0..n as usize).map(|x| ((x + 1) % n as usize) as u16).collect();
    let refl: Vec<u16> = (0..n as usize).map(|x| ((n as usize - x) % n as usize) as u16).collect();
    Ok(Group::from_generators(
        vec![GroupElement::Perm(rot), GroupElement::Perm(refl)],
        cfg,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinearKind {
    Gl,
    Sl,
    Psl,
}

/// Decompose a prime power as (p, k), or None.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = q;
    for d in 2..=q {
        if d * d > q {
            break;
        }
        if q.is_multiple_of(d) {
            p = d;
            break;
        }
    }
    let mut k = 0;
    let mut rest = q;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

fn elementary(space: &Arc<MatrixSpace>, row: usize, col: usize, v: u32) -> GroupElement {
    let n = space.dim;
    let mut data = vec![0u32; n * n];
    for i in 0..n {
        data[i * n + i] = 1;
    }
    data[row * n + col] = v;
    GroupElement::Matrix { space: space.clone(), data }
}

fn sl2_generators(space: &Arc<MatrixSpace>) -> Vec<GroupElement> {
    // transvections over a spanning set of the field
    let f = &space.field;
    let mut gens = Vec::new();
    let mut v = 1u32;
    for _ in 0..f.k {
        gens.push(elementary(space, 0, 1, v));
        gens.push(elementary(space, 1, 0, v));
        v = f.mul(v, f.primitive);
    }
    gens
}

pub fn make_linear(kind: LinearKind, dim: u64, q: u64, cfg: &Config) -> Result<Group> {
    let fam = match kind {
        LinearKind::Gl => "GL",
        LinearKind::Sl => "SL",
        LinearKind::Psl => "PSL",
    };
    if dim != 2 {
        return Err(constraint(fam, "only dimension 2 is supported"));
    }
    let (p, k) = prime_power(q).ok_or_else(|| constraint(fam, "q must be a prime power"))?;
    if q > 32 {
        return Err(constraint(fam, "q must be at most 32"));
    }
    let field = field_make(p, k, cfg.max_field)?;
    let space = MatrixSpace::new(field.clone(), 2);
    let g = match kind {
        LinearKind::Gl => {
            let mut gens = sl2_generators(&space);
            gens.push(GroupElement::Matrix {
                space: space.clone(),
                data: vec![field.primitive, 0, 0, 1],
            });
            let g = Group::from_generators(gens, cfg);
            let expect = (q * q - 1) * (q * q - q);
            assert_eq!(g.order()?, expect, "GL(2,{q}) order self-check");
            g
        }
        LinearKind::Sl => {
            let g = Group::from_generators(sl2_generators(&space), cfg);
            let expect = q * (q * q - 1);
            assert_eq!(g.order()?, expect, "SL(2,{q}) order self-check");
            g
        }
        LinearKind::Psl => {
            let gens: Vec<GroupElement> = sl2_generators(&space)
                .iter()
                .map(|m| projective_perm(&field, m))
                .collect();
            let g = Group::from_generators(gens, cfg);
            let expect = q * (q * q - 1) / if q.is_multiple_of(2) { 1 } else { 2 };
            assert_eq!(g.order()?, expect, "PSL(2,{q}) order self-check");
            g
        }
    };
    Ok(g)
}

/// Permutation of the q+1 projective points induced by a 2x2 matrix, via
/// the row-vector action [u:v] -> [u,v]M. Point x < q encodes [x:1];
/// point q encodes [1:0].
fn projective_perm(field: &Field, m: &GroupElement) -> GroupElement {
    let data = match m {
        GroupElement::Matrix { data, .. } => data,
        _ => unreachable!(),
    };
    let (a, b, c, d) = (data[0], data[1], data[2], data[3]);
    let q = field.size;
    let image = |u: u32, v: u32| -> u16 {
        let iu = field.add(field.mul(u, a), field.mul(v, c));
        let iv = field.add(field.mul(u, b), field.mul(v, d));
        if iv == 0 {
            q as u16
        } else {
            field.mul(iu, field.inv(iv)) as u16
        }
    };
    let mut im: Vec<u16> = (0..q).map(|x| image(x, 1)).collect();
    im.push(image(1, 0));
    GroupElement::Perm(im)
}

pub fn make_suzuki(q: u64, cfg: &Config) -> Result<Group> {
    if q != 8 {
        return Err(constraint("Sz", "only q = 8 is supported"));
    }
    let field = field_make(2, 3, cfg.max_field)?;
    let space = MatrixSpace::new(field.clone(), 4);
    // q = 2^(2t+1) with t = 1; the twisting endomorphism is x -> x^(2^(t+1))
    let theta = 4u64;
    let s_mat = |a: u32, b: u32| -> GroupElement {
        let f = &field;
        let a_th = f.pow(a, theta);
        let r3c0 = f.add(f.pow(a, 1 + theta), b);
        let r4c0 = f.add(f.add(f.pow(a, 2 + theta), f.mul(a, b)), f.pow(b, theta));
        GroupElement::Matrix {
            space: space.clone(),
            data: vec![
                1, 0, 0, 0, //
                a, 1, 0, 0, //
                r3c0, a_th, 1, 0, //
                r4c0, b, a, 1,
            ],
        }
    };
    let lam = field.primitive;
    // diag(l^3, l^2, l^-2, l^-3) for q = 8
    let torus = GroupElement::Matrix {
        space: space.clone(),
        data: vec![
            field.pow(lam, 3), 0, 0, 0, //
            0, field.pow(lam, 2), 0, 0, //
            0, 0, field.pow(lam, 5), 0, //
            0, 0, 0, field.pow(lam, 4),
        ],
    };
    let tau = GroupElement::Matrix {
        space: space.clone(),
        data: vec![
            0, 0, 0, 1, //
            0, 0, 1, 0, //
            0, 1, 0, 0, //
            1, 0, 0, 0,
        ],
    };
    let mut gens = vec![s_mat(1, 0), s_mat(0, 1), torus, tau];
    let mut v = field.primitive;
    for _ in 1..field.k {
        gens.push(s_mat(v, 0));
        v = field.mul(v, field.primitive);
    }
    // determinant sanity before the expensive enumeration
    for g in &gens {
        if let GroupElement::Matrix { data, .. } = g {
            assert_eq!(matrix_determinant(&field, 4, data), 1);
        }
    }
    let g = Group::from_generators(gens, cfg);
    let expect = q * q * (q * q + 1) * (q - 1);
    assert_eq!(g.order()?, expect, "Sz({q}) order self-check");
    Ok(g)
}

/// Least primitive root modulo the prime p.
fn least_primitive_root(p: u64) -> u64 {
    let order = p - 1;
    let factors = crate::structure::prime_divisors(order);
    let pow_mod = |mut base: u64, mut e: u64| -> u64 {
        let mut acc = 1u64;
        base %= p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    };
    (2..p)
        .find(|&g| factors.iter().all(|&f| pow_mod(g, order / f) != 1))
        .expect("every prime has a primitive root")
}

/// C_p x| C_d acting through the order-d power of the least primitive
/// root mod p.
pub fn make_frobenius_metacyclic(p: u64, d: u64, cfg: &Config) -> Result<Group> {
    if !is_prime(p) {
        return Err(constraint("Frob", "p must be prime"));
    }
    if d == 0 || !(p - 1).is_multiple_of(d) {
        return Err(constraint("Frob", "d must divide p-1"));
    }
    if p > 50_000 {
        return Err(constraint("Frob", "p must be at most 50000"));
    }
    let g = least_primitive_root(p);
    let m = {
        let mut acc = 1u64;
        let mut base = g;
        let mut e = (p - 1) / d;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    };
    let ctx = ModPairCtx::new(p as u32, d as u32, m as u32);
    let mut gens = vec![GroupElement::ModPair { ctx: ctx.clone(), t: 1, s: 0 }];
    if d > 1 {
        gens.push(GroupElement::ModPair { ctx, t: 0, s: 1 });
    }
    let grp = Group::from_generators(gens, cfg);
    assert_eq!(grp.order()?, p * d, "Frob({p},{d}) order self-check");
    Ok(grp)
}

/// The affine-semilinear family member together with the elements and
/// subgroups the analyses refer to by name.
pub struct Ex4Handles {
    pub group: Group,
    pub ctx: Arc<AffineCtx>,
    /// x = z*beta: scalar of order r^2 composed with the Frobenius x -> x^q.
    pub x: GroupElement,
    /// c = diag(1, f) with f of multiplicative order t.
    pub c: GroupElement,
    /// The scalar z itself (a field code, not a group member: only its
    /// r-th powers lie in <x, c>).
    pub z_scalar: u32,
}

impl Ex4Handles {
    /// Membership in the translation subgroup F = GF(q^r)^2.
    pub fn in_f(&self, e: &GroupElement) -> bool {
        matches!(e, GroupElement::Affine { i: 0, k: 0, .. })
    }

    /// Membership in D = <x, c>.
    pub fn in_d(&self, e: &GroupElement) -> bool {
        matches!(e, GroupElement::Affine { v0: 0, v1: 0, .. })
    }

    /// Translation generators of F (one per field basis vector and
    /// coordinate).
    pub fn f_generators(&self) -> Vec<GroupElement> {
        let f = &self.ctx.field;
        let mut gens = Vec::new();
        let mut code = 1u32;
        for _ in 0..f.k {
            gens.push(self.translation(code, 0));
            gens.push(self.translation(0, code));
            code *= f.p;
        }
        gens
    }

    pub fn translation(&self, v0: u32, v1: u32) -> GroupElement {
        GroupElement::Affine { ctx: self.ctx.clone(), v0, v1, i: 0, k: 0 }
    }

    /// All r^2 * t elements of D.
    pub fn d_elements(&self) -> Vec<GroupElement> {
        let mut out = Vec::new();
        for i in 0..self.ctx.r2 as u16 {
            for k in 0..self.ctx.t as u16 {
                out.push(GroupElement::Affine { ctx: self.ctx.clone(), v0: 0, v1: 0, i, k });
            }
        }
        out.sort_unstable();
        out
    }

    /// All t elements of C = <c>.
    pub fn c_elements(&self) -> Vec<GroupElement> {
        (0..self.ctx.t as u16)
            .map(|k| GroupElement::Affine { ctx: self.ctx.clone(), v0: 0, v1: 0, i: 0, k })
            .collect()
    }

    /// [F, C]: c acts as diag(1, f) with f != 1, so the commutators with F
    /// sweep exactly the second-coordinate translations.
    pub fn fc_elements(&self) -> Vec<GroupElement> {
        (0..self.ctx.field.size).map(|w| self.translation(0, w)).collect()
    }

    /// The subgroup [F,C]D as a stored-table group of its own.
    pub fn fc_d_group(&self, cfg: &Config) -> Result<Group> {
        let mut gens = vec![self.x.clone(), self.c.clone()];
        let mut code = 1u32;
        for _ in 0..self.ctx.field.k {
            gens.push(self.translation(0, code));
            code *= self.ctx.field.p;
        }
        let g = Group::from_generators(gens, cfg);
        let expect = self.ctx.field.size as u64 * self.ctx.r2 as u64 * self.ctx.t as u64;
        assert_eq!(g.order()?, expect, "[F,C]D order self-check");
        Ok(g)
    }
}

/// F x| D over GF(q^r): F = GF(q^r)^2, D generated by x (scalar of order
/// r^2 composed with the q-power Frobenius) and c = diag(1, f) of order
/// t. All parameter constraints are validated and named.
pub fn make_ex4(q: u64, r: u64, t: u64, cfg: &Config) -> Result<Ex4Handles> {
    let (p, k) = prime_power(q).ok_or_else(|| constraint("Ex4", "q must be a prime power"))?;
    if p == 2 {
        return Err(constraint("Ex4", "q must be odd"));
    }
    if !is_prime(r) || r < 3 {
        return Err(constraint("Ex4", "r must be a prime >= 3"));
    }
    if !(q - 1).is_multiple_of(r) {
        return Err(constraint("Ex4", "r must divide q-1"));
    }
    if (q - 1).is_multiple_of(r * r) {
        return Err(constraint("Ex4", "r must divide q-1 exactly (r^2 must not divide q-1)"));
    }
    if !is_prime(t) {
        return Err(constraint("Ex4", "t must be prime"));
    }
    let qr = q
        .checked_pow(r as u32)
        .filter(|&s| s <= cfg.max_field)
        .ok_or(Error::FieldTooLarge { size: u64::MAX, cap: cfg.max_field })?;
    let cyclotomic = (qr - 1) / (q - 1);
    if !cyclotomic.is_multiple_of(t) {
        return Err(constraint("Ex4", "t must divide (q^r-1)/(q-1)"));
    }
    if (q - 1).is_multiple_of(t) {
        return Err(constraint("Ex4", "t must not divide q-1"));
    }
    let order = qr * qr * r * r * t;
    if order > cfg.max_order_stream {
        return Err(Error::StreamTooLarge { order, cap: cfg.max_order_stream });
    }
    let field = field_make(p, k * r as u32, cfg.max_field)?;
    debug_assert_eq!(field.size as u64, qr);
    let e = field
        .element_of_order(r * r)
        .map_err(|_| constraint("Ex4", "GF(q^r) must contain an element of order r^2"))?;
    let f = field.element_of_order(t).expect("t divides q^r - 1");
    let ctx = AffineCtx::new(field, q as u32, r as u32, t as u32, e, f);
    let x = GroupElement::Affine { ctx: ctx.clone(), v0: 0, v1: 0, i: 1, k: 0 };
    let c = GroupElement::Affine { ctx: ctx.clone(), v0: 0, v1: 0, i: 0, k: 1 };
    debug_assert_eq!(x.order(), r * r);
    debug_assert_eq!(c.order(), t);
    let mut gens = vec![x.clone(), c.clone()];
    let mut code = 1u32;
    for _ in 0..ctx.field.k {
        gens.push(GroupElement::Affine { ctx: ctx.clone(), v0: code, v1: 0, i: 0, k: 0 });
        gens.push(GroupElement::Affine { ctx: ctx.clone(), v0: 0, v1: code, i: 0, k: 0 });
        code *= ctx.field.p;
    }
    let group = Group::affine_family(ctx.clone(), gens, cfg);
    Ok(Ex4Handles { group, ctx, x, c, z_scalar: e })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn permutation_family_orders() {
        let c = cfg();
        assert_eq!(make_symmetric(4, &c).unwrap().order().unwrap(), 24);
        assert_eq!(make_symmetric(5, &c).unwrap().order().unwrap(), 120);
        assert_eq!(make_alternating(5, &c).unwrap().order().unwrap(), 60);
        assert_eq!(make_alternating(6, &c).unwrap().order().unwrap(), 360);
        assert_eq!(make_alternating(4, &c).unwrap().order().unwrap(), 12);
        assert_eq!(make_cyclic(12, &c).unwrap().order().unwrap(), 12);
        assert_eq!(make_dihedral(7, &c).unwrap().order().unwrap(), 14);
    }

    #[test]
    fn dihedral_reflection_inverts_rotation() {
        let g = make_dihedral(9, &cfg()).unwrap();
        let rot = &g.generators()[0];
        let refl = &g.generators()[1];
        assert_eq!(rot.conj(refl), rot.inv());
        assert_eq!(refl.order(), 2);
    }

    #[test]
    fn linear_family_orders() {
        let c = cfg();
        assert_eq!(make_linear(LinearKind::Gl, 2, 3, &c).unwrap().order().unwrap(), 48);
        assert_eq!(make_linear(LinearKind::Sl, 2, 3, &c).unwrap().order().unwrap(), 24);
        assert_eq!(make_linear(LinearKind::Psl, 2, 4, &c).unwrap().order().unwrap(), 60);
        assert_eq!(make_linear(LinearKind::Psl, 2, 7, &c).unwrap().order().unwrap(), 168);
        assert_eq!(make_linear(LinearKind::Psl, 2, 9, &c).unwrap().order().unwrap(), 360);
    }

    #[test]
    fn linear_rejects_bad_parameters() {
        let c = cfg();
        assert!(make_linear(LinearKind::Psl, 3, 5, &c).is_err());
        assert!(make_linear(LinearKind::Psl, 2, 6, &c).is_err());
        assert!(make_linear(LinearKind::Psl, 2, 64, &c).is_err());
    }

    #[test]
    fn frobenius_metacyclic_orders() {
        let c = cfg();
        assert_eq!(make_frobenius_metacyclic(19, 6, &c).unwrap().order().unwrap(), 114);
        assert_eq!(make_frobenius_metacyclic(5, 4, &c).unwrap().order().unwrap(), 20);
        assert!(make_frobenius_metacyclic(19, 5, &c).is_err());
        assert!(make_frobenius_metacyclic(15, 2, &c).is_err());
    }

    #[test]
    fn suzuki_order_and_element_order_menu() {
        let g = make_suzuki(8, &cfg()).unwrap();
        assert_eq!(g.order().unwrap(), 29_120);
        let mut orders: Vec<u32> = g.element_orders().unwrap().clone();
        orders.sort_unstable();
        orders.dedup();
        assert_eq!(orders, vec![1, 2, 4, 5, 7, 13]);
        assert!(make_suzuki(32, &cfg()).is_err());
    }

    #[test]
    fn ex4_handles_satisfy_their_invariants() {
        let h = make_ex4(7, 3, 19, &cfg()).unwrap();
        assert_eq!(h.group.order().unwrap(), 20_117_979);
        assert_eq!(h.x.order(), 9);
        assert_eq!(h.c.order(), 19);
        assert_eq!(h.d_elements().len(), 9 * 19);
        // conjugating c by x raises it to the q-th power
        assert_eq!(h.c.conj(&h.x), h.c.pow(7));
        assert_ne!(h.c.conj(&h.x), h.c);
    }

    #[test]
    fn ex4_rejects_named_constraint_violations() {
        let c = cfg();
        for (q, r, t) in [(8, 3, 19), (7, 4, 19), (5, 3, 19), (7, 3, 18), (7, 3, 3)] {
            match make_ex4(q, r, t, &c) {
                Err(Error::ConstraintViolation { family, .. }) => assert_eq!(family, "Ex4"),
                other => panic!("expected a constraint violation, got {:?}", other.is_ok()),
            }
        }
    }

    #[test]
    fn expr_round_trips_through_display() {
        let e = GroupSpecExpr { family: Family::Psl, args: vec![2, 11] };
        assert_eq!(e.to_string(), "PSL(2,11)");
    }
}
