//! Structural subgroups and predicates the Engel graph depends on:
//! center, upper central series and hypercenter, Sylow subgroups,
//! p-cores, the Fitting subgroup, nilpotency and solubility, Frobenius
//! detection, Engel element sets and the prime graph.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::element::GroupElement;
use crate::engel::eng;
use crate::error::Result;
use crate::group::{Group, Subgroup};

/// Ascending central series Z_0 = 1 <= Z_1 <= ... up to stabilization;
/// the final term is the hypercenter.
#[derive(Debug)]
pub struct CentralSeries {
    pub terms: Vec<Subgroup>,
}

pub fn center(g: &Group) -> Result<Subgroup> {
    let mut elems = Vec::new();
    for h in g.elements_iter()? {
        if g.generators().iter().all(|s| h.mul(s) == s.mul(&h)) {
            elems.push(h);
        }
    }
    Ok(Subgroup::from_elements(elems))
}

/// Upper central series by iterating Z_{i+1} = {h : [h,s] in Z_i for every
/// generator s}, which is exact because each Z_i is normal.
pub fn upper_central_series(g: &Group) -> Result<CentralSeries> {
    let table = g.table()?;
    let mut terms = vec![Subgroup::from_elements(vec![g.identity().clone()])];
    loop {
        let prev = terms.last().unwrap();
        let mut next = Vec::new();
        for h in &table.elems {
            if g.generators().iter().all(|s| prev.contains(&h.comm(s))) {
                next.push(h.clone());
            }
        }
        let next = Subgroup::from_elements(next);
        if next.order() == prev.order() {
            break;
        }
        terms.push(next);
    }
    Ok(CentralSeries { terms })
}

/// Final term of the upper central series.
pub fn hypercenter(g: &Group) -> Result<Subgroup> {
    let series = upper_central_series(g)?;
    Ok(series.terms.into_iter().last().unwrap())
}

fn p_part(mut order: u64, p: u64) -> u64 {
    let mut pp = 1;
    while order.is_multiple_of(p) {
        pp *= p;
        order /= p;
    }
    pp
}

pub fn prime_divisors(mut n: u64) -> Vec<u64> {
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

/// A Sylow p-subgroup, found by growing a p-subgroup: adjoin a
/// normalizing p-element that enlarges the closure, trying seeded random
/// candidates first and falling back to a deterministic table scan.
pub fn sylow(g: &Group, p: u64, seed: u64) -> Result<Subgroup> {
    let table = g.table()?;
    let order = table.len() as u64;
    assert!(order.is_multiple_of(p), "p must divide the group order");
    let target = p_part(order, p);
    let orders = g.element_orders()?;
    let mut p_elems: Vec<u32> = (0..table.len() as u32)
        .filter(|&v| {
            let o = orders[v as usize] as u64;
            o > 1 && o == p_part(o, p)
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let deterministic = p_elems.clone();
    p_elems.shuffle(&mut rng);

    if target == 1 {
        return Ok(Subgroup::from_elements(vec![g.identity().clone()]));
    }
    let first = p_elems.first().copied().expect("Cauchy: a p-element exists");
    let mut current = g.subgroup_closure(&[table.elems[first as usize].clone()])?;
    let mut gens: Vec<GroupElement> = vec![table.elems[first as usize].clone()];
    while current.order() < target {
        let candidate = p_elems
            .iter()
            .chain(deterministic.iter())
            .find(|&&v| {
                let h = &table.elems[v as usize];
                !current.contains(h) && gens.iter().all(|w| current.contains(&w.conj(h)))
            })
            .copied()
            .expect("a proper p-subgroup has a normalizing p-element outside it");
        gens.push(table.elems[candidate as usize].clone());
        current = g.subgroup_closure(&gens)?;
    }
    Ok(current)
}

/// O_p(G): the intersection of all conjugates of one Sylow p-subgroup,
/// computed by intersecting with generator conjugates until stable.
pub fn p_core(g: &Group, p: u64, seed: u64) -> Result<Subgroup> {
    let syl = sylow(g, p, seed)?;
    let mut elems = syl.elements;
    loop {
        let before = elems.len();
        for gen in g.generators() {
            let mut conjugated: Vec<GroupElement> = elems.iter().map(|e| e.conj(gen)).collect();
            conjugated.sort_unstable();
            elems.retain(|e| conjugated.binary_search(e).is_ok());
        }
        if elems.len() == before {
            break;
        }
    }
    Ok(Subgroup::from_elements(elems))
}

/// F(G): the join of the p-cores over the primes dividing |G|.
pub fn fitting(g: &Group, seed: u64) -> Result<Subgroup> {
    let order = g.table()?.len() as u64;
    let mut seeds = Vec::new();
    for p in prime_divisors(order) {
        let core = p_core(g, p, seed)?;
        seeds.extend(core.generators.iter().cloned());
    }
    seeds.retain(|e| !e.is_identity());
    g.subgroup_closure(&seeds)
}

pub fn is_nilpotent(parent: &Group, sg: &Subgroup) -> Result<bool> {
    let h = parent.subgroup_as_group(sg);
    let z = hypercenter(&h)?;
    Ok(z.order() == sg.order())
}

/// Derived subgroup of the group generated by `gens` inside `g`: the
/// normal closure (within that subgroup) of the generator commutators.
fn derived_subgroup(g: &Group, gens: &[GroupElement]) -> Result<Subgroup> {
    let mut seeds: Vec<GroupElement> = Vec::new();
    for a in gens {
        for b in gens {
            let c = a.comm(b);
            if !c.is_identity() && !seeds.contains(&c) {
                seeds.push(c);
            }
        }
    }
    loop {
        let sg = g.subgroup_closure(&seeds)?;
        let mut grew = false;
        for gen in gens {
            for s in seeds.clone() {
                let c = s.conj(gen);
                if !sg.contains(&c) {
                    seeds.push(c);
                    grew = true;
                }
            }
        }
        if !grew {
            return Ok(sg);
        }
    }
}

pub fn is_soluble(parent: &Group, sg: &Subgroup) -> Result<bool> {
    let mut gens = sg.generators.clone();
    let mut order = sg.order();
    loop {
        let derived = derived_subgroup(parent, &gens)?;
        if derived.is_trivial() {
            return Ok(true);
        }
        if derived.order() == order {
            return Ok(false);
        }
        order = derived.order();
        gens = derived.generators.clone();
    }
}

#[derive(Debug)]
pub enum FrobeniusVerdict {
    NotFrobenius,
    Frobenius { kernel: Subgroup },
}

impl FrobeniusVerdict {
    pub fn is_frobenius(&self) -> bool {
        matches!(self, FrobeniusVerdict::Frobenius { .. })
    }
}

/// Frobenius test with F(G) as the only kernel candidate: G is Frobenius
/// iff 1 < F(G) < G and C_G(k) <= F(G) for every non-identity k in F(G).
/// A Frobenius kernel is nilpotent and normal (hence inside F(G)), and a
/// fixed-point-free complement forces the kernel to be all of F(G).
pub fn is_frobenius(g: &Group, seed: u64) -> Result<FrobeniusVerdict> {
    let table = g.table()?;
    let order = table.len() as u64;
    let kernel = fitting(g, seed)?;
    if kernel.is_trivial() || kernel.order() == order {
        return Ok(FrobeniusVerdict::NotFrobenius);
    }
    // The centralizer condition is conjugation-invariant and the kernel is
    // normal, so class representatives inside the kernel suffice.
    let classes = g.conjugacy_classes()?;
    for &rep in &classes.reps {
        let k = &table.elems[rep as usize];
        if k.is_identity() || !kernel.contains(k) {
            continue;
        }
        for h in &table.elems {
            if h.mul(k) == k.mul(h) && !kernel.contains(h) {
                return Ok(FrobeniusVerdict::NotFrobenius);
            }
        }
    }
    let index = order / kernel.order();
    assert_eq!(
        gcd(kernel.order(), index),
        1,
        "a Frobenius kernel is a normal Hall subgroup"
    );
    Ok(FrobeniusVerdict::Frobenius { kernel })
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

const EXHAUSTIVE_ENGEL_CAP: usize = 2000;

/// Left Engel elements {y : eng(x,y) reaches the identity for all x}.
/// Above the exhaustive cap only class representatives of y are tested
/// (membership is conjugation-invariant).
pub fn left_engel_set(g: &Group) -> Result<Vec<u32>> {
    engel_set(g, true)
}

/// Right Engel elements {x : eng(x,y) reaches the identity for all y}.
pub fn right_engel_set(g: &Group) -> Result<Vec<u32>> {
    engel_set(g, false)
}

fn engel_set(g: &Group, left: bool) -> Result<Vec<u32>> {
    let table = g.table()?;
    let n = table.len();
    let mut member = vec![false; n];
    let test = |e: &GroupElement| {
        table.elems.iter().all(|other| {
            if left { eng(other, e).adjacency } else { eng(e, other).adjacency }
        })
    };
    if n <= EXHAUSTIVE_ENGEL_CAP {
        for (v, e) in table.elems.iter().enumerate() {
            member[v] = test(e);
        }
    } else {
        let classes = g.conjugacy_classes()?;
        for (cid, &rep) in classes.reps.iter().enumerate() {
            if test(&table.elems[rep as usize]) {
                for &m in &classes.members[cid] {
                    member[m as usize] = true;
                }
            }
        }
    }
    Ok((0..n as u32).filter(|&v| member[v as usize]).collect())
}

/// Prime graph: vertices are primes dividing |G|, with an edge {p,q} iff
/// the group has an element of order p*q.
#[derive(Debug)]
pub struct PrimeGraph {
    pub primes: Vec<u64>,
    pub edges: Vec<(u64, u64)>,
    pub components: Vec<Vec<u64>>,
}

#[allow(clippy::needless_range_loop)]
pub fn prime_graph(g: &Group) -> Result<PrimeGraph> {
    let order = g.table()?.len() as u64;
    let primes = prime_divisors(order);
    let orders = g.element_orders()?;
    let mut edges = Vec::new();
    for (a, &p) in primes.iter().enumerate() {
        for &q in &primes[a + 1..] {
            if orders.iter().any(|&o| (o as u64).is_multiple_of(p * q)) {
                edges.push((p, q));
            }
        }
    }
    // connected components by repeated sweep
    let mut comp: Vec<usize> = (0..primes.len()).collect();
    loop {
        let mut changed = false;
        for &(p, q) in &edges {
            let pi = primes.iter().position(|&x| x == p).unwrap();
            let qi = primes.iter().position(|&x| x == q).unwrap();
            let m = comp[pi].min(comp[qi]);
            if comp[pi] != m || comp[qi] != m {
                comp[pi] = m;
                comp[qi] = m;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut components: Vec<Vec<u64>> = Vec::new();
    let mut roots: Vec<usize> = comp.clone();
    roots.sort_unstable();
    roots.dedup();
    for root in roots {
        components.push(
            primes
                .iter()
                .zip(&comp)
                .filter(|(_, &c)| c == root)
                .map(|(&p, _)| p)
                .collect(),
        );
    }
    Ok(PrimeGraph { primes, edges, components })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, LinearKind};
    use crate::config::Config;

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn center_of_s4_is_trivial_and_of_gl23_has_order_two() {
        let c = cfg();
        let s4 = catalog::make_symmetric(4, &c).unwrap();
        assert_eq!(center(&s4).unwrap().order(), 1);
        let gl = catalog::make_linear(LinearKind::Gl, 2, 3, &c).unwrap();
        let z = center(&gl).unwrap();
        assert_eq!(z.order(), 2);
        // and the hypercenter does not grow past it: Z(G/Z) is trivial
        assert_eq!(hypercenter(&gl).unwrap().order(), 2);
    }

    #[test]
    fn hypercenter_of_nilpotent_group_is_everything() {
        let c = cfg();
        let d4 = catalog::make_dihedral(4, &c).unwrap();
        assert_eq!(hypercenter(&d4).unwrap().order(), 8);
        let c12 = catalog::make_cyclic(12, &c).unwrap();
        assert_eq!(hypercenter(&c12).unwrap().order(), 12);
        // non-nilpotent: S3 has trivial hypercenter
        let s3 = catalog::make_symmetric(3, &c).unwrap();
        assert_eq!(hypercenter(&s3).unwrap().order(), 1);
    }

    #[test]
    fn sylow_subgroups_of_s4() {
        let c = cfg();
        let s4 = catalog::make_symmetric(4, &c).unwrap();
        let p2 = sylow(&s4, 2, c.sylow_seed).unwrap();
        assert_eq!(p2.order(), 8);
        assert!(p2.verify_closed());
        let p3 = sylow(&s4, 3, c.sylow_seed).unwrap();
        assert_eq!(p3.order(), 3);
        // different seeds still give a correctly sized subgroup
        for seed in [1, 2, 99] {
            assert_eq!(sylow(&s4, 2, seed).unwrap().order(), 8);
        }
    }

    #[test]
    fn p_cores_and_fitting_of_s4() {
        let c = cfg();
        let s4 = catalog::make_symmetric(4, &c).unwrap();
        let o2 = p_core(&s4, 2, c.sylow_seed).unwrap();
        assert_eq!(o2.order(), 4); // the Klein four-group of double transpositions
        assert_eq!(p_core(&s4, 3, c.sylow_seed).unwrap().order(), 1);
        let f = fitting(&s4, c.sylow_seed).unwrap();
        assert_eq!(f.order(), 4);
        assert_eq!(f.elements, o2.elements);
        assert!(is_nilpotent(&s4, &f).unwrap());
    }

    #[test]
    fn fitting_of_frobenius_group_is_the_kernel() {
        let c = cfg();
        let fr = catalog::make_frobenius_metacyclic(19, 6, &c).unwrap();
        let f = fitting(&fr, c.sylow_seed).unwrap();
        assert_eq!(f.order(), 19);
    }

    #[test]
    fn solubility_verdicts() {
        let c = cfg();
        let s4 = catalog::make_symmetric(4, &c).unwrap();
        let whole = crate::group::Subgroup::from_elements(s4.table().unwrap().elems.clone());
        assert!(is_soluble(&s4, &whole).unwrap());
        let a5 = catalog::make_alternating(5, &c).unwrap();
        let whole = crate::group::Subgroup::from_elements(a5.table().unwrap().elems.clone());
        assert!(!is_soluble(&a5, &whole).unwrap());
    }

    #[test]
    fn frobenius_verdicts_on_small_groups() {
        let c = cfg();
        for (p, d, expect) in [(19, 6, true), (5, 4, true), (7, 1, false)] {
            let g = catalog::make_frobenius_metacyclic(p, d, &c).unwrap();
            assert_eq!(is_frobenius(&g, c.sylow_seed).unwrap().is_frobenius(), expect);
        }
        let s3 = catalog::make_symmetric(3, &c).unwrap();
        match is_frobenius(&s3, c.sylow_seed).unwrap() {
            FrobeniusVerdict::Frobenius { kernel } => assert_eq!(kernel.order(), 3),
            FrobeniusVerdict::NotFrobenius => panic!("S3 is Frobenius"),
        }
        let a4 = catalog::make_alternating(4, &c).unwrap();
        match is_frobenius(&a4, c.sylow_seed).unwrap() {
            FrobeniusVerdict::Frobenius { kernel } => assert_eq!(kernel.order(), 4),
            FrobeniusVerdict::NotFrobenius => panic!("A4 is Frobenius"),
        }
        let s4 = catalog::make_symmetric(4, &c).unwrap();
        assert!(!is_frobenius(&s4, c.sylow_seed).unwrap().is_frobenius());
    }

    #[test]
    fn engel_sets_match_fitting_and_hypercenter() {
        let c = cfg();
        for g in [
            catalog::make_symmetric(4, &c).unwrap(),
            catalog::make_alternating(4, &c).unwrap(),
            catalog::make_dihedral(6, &c).unwrap(),
            catalog::make_frobenius_metacyclic(5, 4, &c).unwrap(),
        ] {
            let left = left_engel_set(&g).unwrap();
            let f = fitting(&g, c.sylow_seed).unwrap();
            assert_eq!(left, f.indices(&g).unwrap());
            let right = right_engel_set(&g).unwrap();
            let z = hypercenter(&g).unwrap();
            assert_eq!(right, z.indices(&g).unwrap());
        }
    }

    #[test]
    fn prime_graph_components() {
        let c = cfg();
        // A5: primes 2, 3, 5 pairwise non-adjacent (orders are 1,2,3,5)
        let a5 = catalog::make_alternating(5, &c).unwrap();
        let pg = prime_graph(&a5).unwrap();
        assert_eq!(pg.primes, vec![2, 3, 5]);
        assert!(pg.edges.is_empty());
        assert_eq!(pg.components.len(), 3);
        // S5 has elements of order 6: {2,3} joined, 5 isolated
        let s5 = catalog::make_symmetric(5, &c).unwrap();
        let pg = prime_graph(&s5).unwrap();
        assert_eq!(pg.edges, vec![(2, 3)]);
        assert_eq!(pg.components.len(), 2);
        // C30 is a single component
        let c30 = catalog::make_cyclic(30, &c).unwrap();
        let pg = prime_graph(&c30).unwrap();
        assert_eq!(pg.components.len(), 1);
    }
}
