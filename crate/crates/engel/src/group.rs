//! Groups as generator lists with a lazily materialized element table,
//! plus the elementary scans everything else is built on: centralizers,
//! normalizers of cyclic subgroups, conjugacy classes and subgroup
//! closure.
//!
//! Groups come in two flavors. Stored-table groups enumerate the closure
//! of their generators (cap `max_order_stored`) and sort it by canonical
//! encoding, which fixes the vertex indexing once and for all. Streaming
//! groups (the affine-semilinear family) know their full element
//! parametrization and support table-free scans up to `max_order_stream`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::config::Config;
use crate::element::{AffineCtx, GroupElement};
use crate::error::{Error, Result};

#[derive(Debug)]
pub struct ElementTable {
    /// All elements, sorted by canonical encoding.
    pub elems: Vec<GroupElement>,
    index: HashMap<GroupElement, u32>,
}

impl ElementTable {
    fn from_elements(mut elems: Vec<GroupElement>) -> ElementTable {
        elems.sort_unstable();
        let index = elems.iter().enumerate().map(|(i, e)| (e.clone(), i as u32)).collect();
        ElementTable { elems, index }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    #[inline]
    pub fn index_of(&self, e: &GroupElement) -> Option<u32> {
        self.index.get(e).copied()
    }
}

/// Conjugacy class data for a stored-table group. Representatives are the
/// least element of each class in table order; `conj[v]` is a witness `c`
/// with `rep^c = v`.
#[derive(Debug)]
pub struct ClassData {
    pub class_of: Vec<u32>,
    pub reps: Vec<u32>,
    pub members: Vec<Vec<u32>>,
    pub conj: Vec<GroupElement>,
}

#[derive(Debug)]
enum GroupKind {
    /// Elements are the closure of the generators.
    Generated,
    /// The whole affine-semilinear family group, iterated by parametrization.
    AffineFamily(Arc<AffineCtx>),
}

#[derive(Debug)]
pub struct Group {
    gens: Vec<GroupElement>,
    identity: GroupElement,
    kind: GroupKind,
    known_order: Option<u64>,
    max_stored: u64,
    max_stream: u64,
    table: OnceLock<std::result::Result<ElementTable, u64>>,
    classes: OnceLock<ClassData>,
    orders: OnceLock<Vec<u32>>,
}

impl Group {
    pub fn from_generators(gens: Vec<GroupElement>, cfg: &Config) -> Group {
        assert!(!gens.is_empty(), "need at least one generator to fix the backend");
        let identity = gens[0].identity_like();
        Group {
            gens,
            identity,
            kind: GroupKind::Generated,
            known_order: None,
            max_stored: cfg.max_order_stored,
            max_stream: cfg.max_order_stream,
            table: OnceLock::new(),
            classes: OnceLock::new(),
            orders: OnceLock::new(),
        }
    }

    /// Streaming group covering the whole affine-semilinear family member.
    pub fn affine_family(ctx: Arc<AffineCtx>, gens: Vec<GroupElement>, cfg: &Config) -> Group {
        let identity = gens[0].identity_like();
        let order = (ctx.field.size as u64)
            * (ctx.field.size as u64)
            * (ctx.r2 as u64)
            * (ctx.t as u64);
        Group {
            gens,
            identity,
            kind: GroupKind::AffineFamily(ctx),
            known_order: Some(order),
            max_stored: cfg.max_order_stored,
            max_stream: cfg.max_order_stream,
            table: OnceLock::new(),
            classes: OnceLock::new(),
            orders: OnceLock::new(),
        }
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.gens
    }

    pub fn identity(&self) -> &GroupElement {
        &self.identity
    }

    pub fn is_streaming(&self) -> bool {
        matches!(self.kind, GroupKind::AffineFamily(_))
    }

    /// Group order; enumerates unless known up front.
    pub fn order(&self) -> Result<u64> {
        if let Some(o) = self.known_order {
            return Ok(o);
        }
        Ok(self.table()?.len() as u64)
    }

    /// The stored element table, sorted by canonical encoding. Enumeration
    /// runs once; concurrent first calls agree on a single table.
    pub fn table(&self) -> Result<&ElementTable> {
        if let Some(order) = self.known_order {
            if order > self.max_stored {
                return Err(Error::TableTooLarge { order, cap: self.max_stored });
            }
        }
        let built = self.table.get_or_init(|| {
            match closure(&self.gens, &self.identity, self.max_stored) {
                Ok(elems) => Ok(ElementTable::from_elements(elems)),
                Err(order) => Err(order),
            }
        });
        match built {
            Ok(t) => Ok(t),
            Err(order) => Err(Error::TableTooLarge { order: *order, cap: self.max_stored }),
        }
    }

    /// Iterate every element. Stored groups iterate the table; streaming
    /// groups iterate the parametrization in encoding order.
    pub fn elements_iter(&self) -> Result<Box<dyn Iterator<Item = GroupElement> + '_>> {
        match &self.kind {
            GroupKind::Generated => {
                let t = self.table()?;
                Ok(Box::new(t.elems.iter().cloned()))
            }
            GroupKind::AffineFamily(ctx) => {
                let order = self.known_order.unwrap();
                if order > self.max_stream {
                    return Err(Error::StreamTooLarge { order, cap: self.max_stream });
                }
                let ctx = ctx.clone();
                let size = ctx.field.size;
                let (r2, t) = (ctx.r2, ctx.t);
                Ok(Box::new((0..r2).flat_map(move |i| {
                    let ctx = ctx.clone();
                    (0..t).flat_map(move |k| {
                        let ctx = ctx.clone();
                        (0..size).flat_map(move |v0| {
                            let ctx = ctx.clone();
                            (0..size).map(move |v1| GroupElement::Affine {
                                ctx: ctx.clone(),
                                v0,
                                v1,
                                i: i as u16,
                                k: k as u16,
                            })
                        })
                    })
                })))
            }
        }
    }

    pub fn contains(&self, e: &GroupElement) -> Result<bool> {
        match &self.kind {
            GroupKind::Generated => Ok(self.table()?.index_of(e).is_some()),
            GroupKind::AffineFamily(_) => Ok(e.same_backend(&self.identity)),
        }
    }

    pub fn index_of(&self, e: &GroupElement) -> Result<Option<u32>> {
        Ok(self.table()?.index_of(e))
    }

    /// Exact centralizer of `a`, by table or streaming scan.
    pub fn centralizer(&self, a: &GroupElement) -> Result<Subgroup> {
        let mut elems = Vec::new();
        for h in self.elements_iter()? {
            if h.mul(a) == a.mul(&h) {
                elems.push(h);
            }
        }
        Ok(Subgroup::from_elements(elems))
    }

    /// Normalizer of the cyclic subgroup generated by `a`.
    pub fn normalizer_of_cyclic(&self, a: &GroupElement) -> Result<Subgroup> {
        let mut powers = Vec::new();
        let mut cur = a.identity_like();
        loop {
            powers.push(cur.clone());
            cur = cur.mul(a);
            if cur.is_identity() {
                break;
            }
        }
        powers.sort_unstable();
        let mut elems = Vec::new();
        for h in self.elements_iter()? {
            if powers.binary_search(&a.conj(&h)).is_ok() {
                elems.push(h);
            }
        }
        Ok(Subgroup::from_elements(elems))
    }

    /// Conjugacy classes of a stored-table group, with representative
    /// witnesses for equivariance shortcuts.
    pub fn conjugacy_classes(&self) -> Result<&ClassData> {
        let table = self.table()?;
        Ok(self.classes.get_or_init(|| {
            let n = table.len();
            let mut class_of = vec![u32::MAX; n];
            let mut conj: Vec<Option<GroupElement>> = vec![None; n];
            let mut reps = Vec::new();
            let mut members = Vec::new();
            for start in 0..n as u32 {
                if class_of[start as usize] != u32::MAX {
                    continue;
                }
                // orbit of `start` under conjugation by generators
                let cid = reps.len() as u32;
                let mut orbit = vec![start];
                let mut words: Vec<GroupElement> = vec![self.identity.clone()];
                class_of[start as usize] = cid;
                let mut head = 0;
                while head < orbit.len() {
                    let v = orbit[head];
                    let w = words[head].clone();
                    head += 1;
                    for g in &self.gens {
                        let img = table.elems[v as usize].conj(g);
                        let idx = table.index_of(&img).expect("closure");
                        if class_of[idx as usize] == u32::MAX {
                            class_of[idx as usize] = cid;
                            orbit.push(idx);
                            words.push(w.mul(g));
                        }
                    }
                }
                // re-root at the least member (table order = encoding order)
                let (pos_min, _) =
                    orbit.iter().enumerate().min_by_key(|(_, &v)| v).expect("nonempty orbit");
                let rep = orbit[pos_min];
                let to_rep_inv = words[pos_min].inv();
                for (pos, &v) in orbit.iter().enumerate() {
                    conj[v as usize] = Some(to_rep_inv.mul(&words[pos]));
                }
                let mut sorted_orbit = orbit.clone();
                sorted_orbit.sort_unstable();
                reps.push(rep);
                members.push(sorted_orbit);
            }
            ClassData {
                class_of,
                reps,
                members,
                conj: conj.into_iter().map(|c| c.unwrap()).collect(),
            }
        }))
    }

    /// Element order per table index.
    pub fn element_orders(&self) -> Result<&Vec<u32>> {
        let table = self.table()?;
        Ok(self
            .orders
            .get_or_init(|| table.elems.iter().map(|e| e.order() as u32).collect()))
    }

    /// Least subgroup containing `seeds`.
    pub fn subgroup_closure(&self, seeds: &[GroupElement]) -> Result<Subgroup> {
        if seeds.is_empty() {
            return Ok(Subgroup::from_elements(vec![self.identity.clone()]));
        }
        let elems = closure(seeds, &self.identity, self.max_stored)
            .map_err(|order| Error::TableTooLarge { order, cap: self.max_stored })?;
        let mut sg = Subgroup::from_elements(elems);
        sg.generators = seeds.to_vec();
        Ok(sg)
    }

    /// Promote a subgroup to a stored-table group of its own.
    pub fn subgroup_as_group(&self, sg: &Subgroup) -> Group {
        let gens = if sg.generators.is_empty() {
            vec![self.identity.clone()]
        } else {
            sg.generators.clone()
        };
        let g = Group {
            gens,
            identity: self.identity.clone(),
            kind: GroupKind::Generated,
            known_order: Some(sg.order()),
            max_stored: self.max_stored.max(sg.order()),
            max_stream: self.max_stream,
            table: OnceLock::new(),
            classes: OnceLock::new(),
            orders: OnceLock::new(),
        };
        let _ = g.table.set(Ok(ElementTable::from_elements(sg.elements.clone())));
        g
    }
}

/// Closure of `seeds` under multiplication. Errors with the running size
/// once it exceeds `cap`.
fn closure(
    seeds: &[GroupElement],
    identity: &GroupElement,
    cap: u64,
) -> std::result::Result<Vec<GroupElement>, u64> {
    let mut seen: std::collections::HashSet<GroupElement> = std::collections::HashSet::new();
    seen.insert(identity.clone());
    let mut frontier = vec![identity.clone()];
    while let Some(cur) = frontier.pop() {
        for g in seeds {
            let next = cur.mul(g);
            if seen.insert(next.clone()) {
                if seen.len() as u64 > cap {
                    return Err(seen.len() as u64);
                }
                frontier.push(next);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// A subgroup as an explicit sorted element set plus a generator witness.
#[derive(Debug, Clone)]
pub struct Subgroup {
    /// Sorted by canonical encoding.
    pub elements: Vec<GroupElement>,
    pub generators: Vec<GroupElement>,
}

impl Subgroup {
    /// Wrap a set of elements that is already closed under the group
    /// operations, computing a small generator witness greedily.
    pub fn from_elements(mut elements: Vec<GroupElement>) -> Subgroup {
        elements.sort_unstable();
        elements.dedup();
        let generators = greedy_generators(&elements);
        Subgroup { elements, generators }
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    #[inline]
    pub fn contains(&self, e: &GroupElement) -> bool {
        self.elements.binary_search(e).is_ok()
    }

    /// Table indices of the members inside the parent group.
    pub fn indices(&self, parent: &Group) -> Result<Vec<u32>> {
        let table = parent.table()?;
        self.elements
            .iter()
            .map(|e| table.index_of(e).ok_or(Error::NotAMember))
            .collect()
    }

    /// Check closure under product and inverse (test support).
    pub fn verify_closed(&self) -> bool {
        if self.elements.is_empty() {
            return false;
        }
        for a in &self.elements {
            if self.elements.binary_search(&a.inv()).is_err() {
                return false;
            }
            for b in &self.elements {
                if self.elements.binary_search(&a.mul(b)).is_err() {
                    return false;
                }
            }
        }
        true
    }
}

fn greedy_generators(sorted_elems: &[GroupElement]) -> Vec<GroupElement> {
    let mut gens: Vec<GroupElement> = Vec::new();
    if sorted_elems.is_empty() {
        return gens;
    }
    let identity = sorted_elems[0].identity_like();
    let mut have: std::collections::HashSet<GroupElement> = std::collections::HashSet::new();
    have.insert(identity.clone());
    for e in sorted_elems {
        if have.contains(e) {
            continue;
        }
        gens.push(e.clone());
        // grow the closure with the new generator
        let mut frontier: Vec<GroupElement> = have.iter().cloned().collect();
        while let Some(cur) = frontier.pop() {
            for g in &gens {
                let next = cur.mul(g);
                if have.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        if have.len() == sorted_elems.len() {
            break;
        }
    }
    if gens.is_empty() {
        gens.push(identity);
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::perm_from_cycles;

    fn s4(cfg: &Config) -> Group {
        Group::from_generators(
            vec![perm_from_cycles(4, &[&[1, 2]]), perm_from_cycles(4, &[&[1, 2, 3, 4]])],
            cfg,
        )
    }

    #[test]
    fn s4_has_24_elements() {
        let cfg = Config::default();
        let g = s4(&cfg);
        assert_eq!(g.order().unwrap(), 24);
    }

    #[test]
    fn enumeration_is_deterministic() {
        let cfg = Config::default();
        let a = s4(&cfg);
        let b = s4(&cfg);
        assert_eq!(a.table().unwrap().elems, b.table().unwrap().elems);
    }

    #[test]
    fn a5_centralizer_of_five_cycle() {
        let cfg = Config::default();
        let g = Group::from_generators(
            vec![perm_from_cycles(5, &[&[1, 2, 3]]), perm_from_cycles(5, &[&[3, 4, 5]])],
            &cfg,
        );
        assert_eq!(g.order().unwrap(), 60);
        let x = perm_from_cycles(5, &[&[1, 2, 3, 4, 5]]);
        let c = g.centralizer(&x).unwrap();
        assert_eq!(c.order(), 5);
        // equals <x>: brute-force oracle
        let powers = g.subgroup_closure(&[x]).unwrap();
        assert_eq!(c.elements, powers.elements);
    }

    #[test]
    fn centralizer_of_identity_is_whole_group() {
        let cfg = Config::default();
        let g = s4(&cfg);
        let c = g.centralizer(g.identity()).unwrap();
        assert_eq!(c.order(), 24);
    }

    #[test]
    fn s3_classes_have_sizes_1_3_2() {
        let cfg = Config::default();
        let g = Group::from_generators(
            vec![perm_from_cycles(3, &[&[1, 2]]), perm_from_cycles(3, &[&[1, 2, 3]])],
            &cfg,
        );
        let classes = g.conjugacy_classes().unwrap();
        let mut sizes: Vec<usize> = classes.members.iter().map(|m| m.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
    }

    #[test]
    fn abelian_classes_are_singletons() {
        let cfg = Config::default();
        let g = Group::from_generators(vec![perm_from_cycles(6, &[&[1, 2, 3, 4, 5, 6]])], &cfg);
        let classes = g.conjugacy_classes().unwrap();
        assert!(classes.members.iter().all(|m| m.len() == 1));
    }

    #[test]
    fn class_witnesses_conjugate_rep_to_member() {
        let cfg = Config::default();
        let g = s4(&cfg);
        let t = g.table().unwrap();
        let classes = g.conjugacy_classes().unwrap();
        for v in 0..t.len() as u32 {
            let rep = classes.reps[classes.class_of[v as usize] as usize];
            let got = t.elems[rep as usize].conj(&classes.conj[v as usize]);
            assert_eq!(got, t.elems[v as usize]);
        }
    }

    #[test]
    fn class_equation_holds() {
        let cfg = Config::default();
        let g = s4(&cfg);
        let classes = g.conjugacy_classes().unwrap();
        let total: usize = classes.members.iter().map(|m| m.len()).sum();
        assert_eq!(total, 24);
        for (cid, members) in classes.members.iter().enumerate() {
            let rep = classes.reps[cid];
            let c = g.centralizer(&g.table().unwrap().elems[rep as usize]).unwrap();
            assert_eq!(members.len() as u64 * c.order(), 24);
        }
    }

    #[test]
    fn closure_of_empty_seed_is_trivial() {
        let cfg = Config::default();
        let g = s4(&cfg);
        let sg = g.subgroup_closure(&[]).unwrap();
        assert!(sg.is_trivial());
    }

    #[test]
    fn closure_of_three_cycle_in_s3() {
        let cfg = Config::default();
        let g = Group::from_generators(
            vec![perm_from_cycles(3, &[&[1, 2]]), perm_from_cycles(3, &[&[1, 2, 3]])],
            &cfg,
        );
        let sg = g.subgroup_closure(&[perm_from_cycles(3, &[&[1, 2, 3]])]).unwrap();
        assert_eq!(sg.order(), 3);
        assert!(sg.verify_closed());
    }

    #[test]
    fn cap_exceeded_is_reported_not_a_crash() {
        let cfg = Config { max_order_stored: 10, ..Config::default() };
        let g = s4(&cfg);
        assert!(matches!(g.table(), Err(Error::TableTooLarge { .. })));
    }
}
