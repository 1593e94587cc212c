//! Directed-graph algorithms on Engel graphs: strong components, weak
//! connectivity, directed and undirected diameters, balls, and the
//! commuting-cluster condensation preprocessing step.
//!
//! Graphs are implicit: vertices are element-table indices and edges are
//! evaluated through the Engel oracle on demand. Neighbor rows are
//! memoized per conjugacy-class representative and transported to the
//! other class members by conjugation, which is what makes the larger
//! corpus groups tractable.

use std::collections::HashMap;
use std::sync::Arc;

use crate::element::GroupElement;
use crate::engel::{edge, eng, GraphMode};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::structure;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DirectedDiameter {
    Value(u32),
    /// Some ordered pair has no directed path.
    Unreachable,
    /// Skipped: vertex count above the exact-computation cap.
    NotComputed,
}

#[derive(Debug)]
pub struct SccResult {
    /// Component id per vertex position; ids are 0..count-1 in reverse
    /// topological order.
    pub comp_of: Vec<u32>,
    pub count: u32,
    /// Edges of the acyclic condensation, sorted and deduplicated.
    pub condensation_edges: Vec<(u32, u32)>,
}

/// Cap for exact diameter computation.
const DIAMETER_CAP: usize = 20_000;

pub struct EngelGraph<'g> {
    group: &'g Group,
    mode: GraphMode,
    /// Table indices of the vertices, ascending.
    verts: Vec<u32>,
    /// table index -> vertex position (u32::MAX if not a vertex)
    pos: Vec<u32>,
    equivariance: bool,
    out_cache: HashMap<u32, Arc<Vec<u32>>>,
    in_cache: HashMap<u32, Arc<Vec<u32>>>,
}

impl<'g> EngelGraph<'g> {
    pub fn new(group: &'g Group, mode: GraphMode, equivariance: bool) -> Result<EngelGraph<'g>> {
        let verts = crate::engel::vertex_set(group, mode)?;
        let table_len = group.table()?.len();
        let mut pos = vec![u32::MAX; table_len];
        for (p, &t) in verts.iter().enumerate() {
            pos[t as usize] = p as u32;
        }
        Ok(EngelGraph { group, mode, verts, pos, equivariance, out_cache: HashMap::new(), in_cache: HashMap::new() })
    }

    pub fn mode(&self) -> GraphMode {
        self.mode
    }

    pub fn vertex_count(&self) -> usize {
        self.verts.len()
    }

    pub fn vertices(&self) -> &[u32] {
        &self.verts
    }

    pub fn position_of(&self, table_idx: u32) -> Option<u32> {
        let p = self.pos[table_idx as usize];
        (p != u32::MAX).then_some(p)
    }

    pub fn position_of_element(&self, e: &GroupElement) -> Result<u32> {
        let idx = self.group.index_of(e)?.ok_or(Error::NotAMember)?;
        self.position_of(idx).ok_or_else(|| Error::NotAVertex {
            element: e.to_string(),
            mode: self.mode.label(),
        })
    }

    pub fn element(&self, vpos: u32) -> &GroupElement {
        &self.group.table().expect("table exists").elems[self.verts[vpos as usize] as usize]
    }

    /// Checked edge query between two elements.
    pub fn edge_elems(&self, x: &GroupElement, y: &GroupElement) -> Result<bool> {
        let _ = self.position_of_element(x)?;
        let _ = self.position_of_element(y)?;
        if x == y {
            return Err(Error::InvalidArgument("loops are excluded".into()));
        }
        Ok(edge(x, y, self.mode))
    }

    fn scan_out(&self, vpos: u32) -> Vec<u32> {
        let x = self.element(vpos);
        let mut out = Vec::new();
        for w in 0..self.verts.len() as u32 {
            if w != vpos && edge(x, self.element(w), self.mode) {
                out.push(w);
            }
        }
        out
    }

    fn scan_in(&self, vpos: u32) -> Vec<u32> {
        let y = self.element(vpos);
        let mut inn = Vec::new();
        for w in 0..self.verts.len() as u32 {
            if w != vpos && edge(self.element(w), y, self.mode) {
                inn.push(w);
            }
        }
        inn
    }

    /// Transport a neighbor row of the class representative to the class
    /// member `vpos` by conjugating with the class witness.
    fn transported(&mut self, vpos: u32, outgoing: bool) -> Result<Arc<Vec<u32>>> {
        let table_idx = self.verts[vpos as usize];
        if !self.equivariance {
            let cache = if outgoing { &self.out_cache } else { &self.in_cache };
            if let Some(row) = cache.get(&table_idx) {
                return Ok(row.clone());
            }
            let row = Arc::new(if outgoing { self.scan_out(vpos) } else { self.scan_in(vpos) });
            let cache = if outgoing { &mut self.out_cache } else { &mut self.in_cache };
            cache.insert(table_idx, row.clone());
            return Ok(row);
        }
        let classes = self.group.conjugacy_classes()?;
        let cid = classes.class_of[table_idx as usize] as usize;
        let rep = classes.reps[cid];
        let rep_pos = self.pos[rep as usize];
        debug_assert!(rep_pos != u32::MAX, "vertex sets are closed under conjugation");
        let rep_row = {
            let cache = if outgoing { &self.out_cache } else { &self.in_cache };
            cache.get(&rep).cloned()
        };
        let rep_row = match rep_row {
            Some(r) => r,
            None => {
                let row =
                    Arc::new(if outgoing { self.scan_out(rep_pos) } else { self.scan_in(rep_pos) });
                let cache = if outgoing { &mut self.out_cache } else { &mut self.in_cache };
                cache.insert(rep, row.clone());
                row
            }
        };
        if table_idx == rep {
            return Ok(rep_row);
        }
        let table = self.group.table()?;
        let c = &classes.conj[table_idx as usize];
        let c_inv = c.inv();
        let mut row: Vec<u32> = rep_row
            .iter()
            .map(|&npos| {
                let n_elem = &table.elems[self.verts[npos as usize] as usize];
                let moved = c_inv.mul(n_elem).mul(c);
                let idx = table.index_of(&moved).expect("conjugation stays in the group");
                let p = self.pos[idx as usize];
                debug_assert!(p != u32::MAX);
                p
            })
            .collect();
        row.sort_unstable();
        Ok(Arc::new(row))
    }

    pub fn out_neighbors(&mut self, vpos: u32) -> Result<Arc<Vec<u32>>> {
        self.transported(vpos, true)
    }

    pub fn in_neighbors(&mut self, vpos: u32) -> Result<Arc<Vec<u32>>> {
        self.transported(vpos, false)
    }

    fn reachable(&mut self, start: u32, forward: bool) -> Result<Vec<bool>> {
        let n = self.verts.len();
        let mut seen = vec![false; n];
        seen[start as usize] = true;
        let mut queue = vec![start];
        while let Some(v) = queue.pop() {
            let row = self.transported(v, forward)?;
            for &w in row.iter() {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    queue.push(w);
                }
            }
        }
        Ok(seen)
    }

    /// One SCC spans all vertices. Uses forward plus backward reachability
    /// from a single vertex; the empty and single-vertex graphs count as
    /// strongly connected.
    pub fn is_strongly_connected(&mut self) -> Result<bool> {
        if self.verts.len() <= 1 {
            return Ok(true);
        }
        let fwd = self.reachable(0, true)?;
        if fwd.iter().any(|&b| !b) {
            return Ok(false);
        }
        let bwd = self.reachable(0, false)?;
        Ok(bwd.iter().all(|&b| b))
    }

    pub fn is_weakly_connected(&mut self) -> Result<bool> {
        let n = self.verts.len();
        if n <= 1 {
            return Ok(true);
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = vec![0u32];
        let mut count = 1usize;
        while let Some(v) = queue.pop() {
            for dir in [true, false] {
                let row = self.transported(v, dir)?;
                for &w in row.iter() {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        count += 1;
                        queue.push(w);
                    }
                }
            }
        }
        Ok(count == n)
    }

    fn bit_rows(&mut self) -> Result<Vec<Vec<u64>>> {
        let n = self.verts.len();
        let words = n.div_ceil(64);
        let mut rows = vec![vec![0u64; words]; n];
        for v in 0..n as u32 {
            let out = self.transported(v, true)?;
            for &w in out.iter() {
                rows[v as usize][w as usize / 64] |= 1 << (w % 64);
            }
        }
        Ok(rows)
    }

    fn ecc_sources(&mut self) -> Result<Vec<u32>> {
        // eccentricity is constant on conjugacy classes
        if self.equivariance {
            let classes = self.group.conjugacy_classes()?;
            Ok(classes
                .reps
                .iter()
                .filter_map(|&rep| {
                    let p = self.pos[rep as usize];
                    (p != u32::MAX).then_some(p)
                })
                .collect())
        } else {
            Ok((0..self.verts.len() as u32).collect())
        }
    }

    /// Exact undirected diameter of the symmetrized graph, or None if the
    /// graph is disconnected or empty.
    pub fn undirected_diameter(&mut self) -> Result<Option<u32>> {
        let n = self.verts.len();
        if n == 0 {
            return Ok(None);
        }
        if n == 1 {
            return Ok(Some(0));
        }
        if n > DIAMETER_CAP {
            return Err(Error::InvalidArgument(format!(
                "exact diameter limited to {DIAMETER_CAP} vertices, graph has {n}"
            )));
        }
        let rows = self.bit_rows()?;
        let words = n.div_ceil(64);
        let mut und = rows;
        // symmetrize: add the transpose
        for v in 0..n {
            for w in 0..n {
                if und[v][w / 64] >> (w % 64) & 1 == 1 {
                    let bit = 1u64 << (v % 64);
                    if und[w][v / 64] & (1 << (v % 64)) == 0 {
                        und[w][v / 64] |= bit;
                    }
                }
            }
        }
        let mut diameter = 0u32;
        for src in self.ecc_sources()? {
            match bitset_bfs_ecc(&und, words, n, src) {
                Some(ecc) => diameter = diameter.max(ecc),
                None => return Ok(None),
            }
        }
        Ok(Some(diameter))
    }

    /// Exact directed diameter; Unreachable if not strongly connected and
    /// NotComputed above the cap.
    pub fn directed_diameter(&mut self) -> Result<DirectedDiameter> {
        let n = self.verts.len();
        if n == 0 {
            return Ok(DirectedDiameter::Value(0));
        }
        if n > DIAMETER_CAP {
            return Ok(DirectedDiameter::NotComputed);
        }
        if !self.is_strongly_connected()? {
            return Ok(DirectedDiameter::Unreachable);
        }
        let rows = self.bit_rows()?;
        let words = n.div_ceil(64);
        let mut diameter = 0u32;
        for src in self.ecc_sources()? {
            match bitset_bfs_ecc(&rows, words, n, src) {
                Some(ecc) => diameter = diameter.max(ecc),
                None => return Ok(DirectedDiameter::Unreachable),
            }
        }
        Ok(DirectedDiameter::Value(diameter))
    }

    /// Exact strongly connected components (iterative lowlink algorithm).
    pub fn scc(&mut self) -> Result<SccResult> {
        let n = self.verts.len();
        let mut adj: Vec<Option<Arc<Vec<u32>>>> = vec![None; n];
        for v in 0..n as u32 {
            adj[v as usize] = Some(self.transported(v, true)?);
        }
        let adj: Vec<Arc<Vec<u32>>> = adj.into_iter().map(|a| a.unwrap()).collect();
        Ok(tarjan(n, |v| adj[v as usize].clone()))
    }

    /// Pre-merge vertices connected in the commuting graph; mutually
    /// commuting vertices are mutually adjacent, so every cluster lies
    /// inside one strong component.
    pub fn seed_condensation(&mut self) -> Result<Vec<u32>> {
        let n = self.verts.len();
        let mut dsu = Dsu::new(n);
        if n == 0 {
            return Ok(Vec::new());
        }
        // commuting adjacency of a class representative, transported to
        // the members by conjugation
        let table = self.group.table()?;
        if self.equivariance {
            let classes = self.group.conjugacy_classes()?;
            for (cid, &rep) in classes.reps.iter().enumerate() {
                let rep_pos = self.pos[rep as usize];
                if rep_pos == u32::MAX {
                    continue;
                }
                let rep_elem = &table.elems[rep as usize];
                let comm_row: Vec<u32> = (0..n as u32)
                    .filter(|&w| {
                        w != rep_pos && {
                            let other = &table.elems[self.verts[w as usize] as usize];
                            rep_elem.mul(other) == other.mul(rep_elem)
                        }
                    })
                    .collect();
                for &member in &classes.members[cid] {
                    let mpos = self.pos[member as usize];
                    if mpos == u32::MAX {
                        continue;
                    }
                    if member == rep {
                        for &w in &comm_row {
                            dsu.union(rep_pos as usize, w as usize);
                        }
                    } else {
                        let c = &classes.conj[member as usize];
                        let c_inv = c.inv();
                        for &w in &comm_row {
                            let moved =
                                c_inv.mul(&table.elems[self.verts[w as usize] as usize]).mul(c);
                            let idx = table.index_of(&moved).expect("closed");
                            let p = self.pos[idx as usize];
                            debug_assert!(p != u32::MAX);
                            dsu.union(mpos as usize, p as usize);
                        }
                    }
                }
            }
        } else {
            for v in 0..n {
                let a = &table.elems[self.verts[v] as usize];
                for w in v + 1..n {
                    let b = &table.elems[self.verts[w] as usize];
                    if a.mul(b) == b.mul(a) {
                        dsu.union(v, w);
                    }
                }
            }
        }
        let mut label = HashMap::new();
        let mut out = Vec::with_capacity(n);
        for v in 0..n {
            let root = dsu.find(v);
            let next = label.len() as u32;
            out.push(*label.entry(root).or_insert(next));
        }
        Ok(out)
    }

    /// SCC computed on the commuting-cluster quotient, mapped back to
    /// vertices. Same partition as `scc` (oracle-checked), fewer Tarjan
    /// nodes.
    pub fn scc_condensed(&mut self) -> Result<SccResult> {
        let clusters = self.seed_condensation()?;
        let n = self.verts.len();
        let k = clusters.iter().copied().max().map_or(0, |m| m as usize + 1);
        let mut members: Vec<Vec<u32>> = vec![Vec::new(); k];
        for (v, &c) in clusters.iter().enumerate() {
            members[c as usize].push(v as u32);
        }
        let mut quot_adj: Vec<Arc<Vec<u32>>> = Vec::with_capacity(k);
        for (c, cluster_members) in members.iter().enumerate() {
            let mut outs: Vec<u32> = Vec::new();
            for &v in cluster_members {
                let row = self.transported(v, true)?;
                outs.extend(row.iter().map(|&w| clusters[w as usize]));
            }
            outs.sort_unstable();
            outs.dedup();
            outs.retain(|&d| d != c as u32);
            quot_adj.push(Arc::new(outs));
        }
        let quotient = tarjan(k, |c| quot_adj[c as usize].clone());
        let comp_of: Vec<u32> =
            (0..n).map(|v| quotient.comp_of[clusters[v] as usize]).collect();
        Ok(SccResult {
            comp_of,
            count: quotient.count,
            condensation_edges: quotient.condensation_edges,
        })
    }
}

fn bitset_bfs_ecc(rows: &[Vec<u64>], words: usize, n: usize, src: u32) -> Option<u32> {
    let mut visited = vec![0u64; words];
    let mut frontier = vec![0u64; words];
    visited[src as usize / 64] |= 1 << (src % 64);
    frontier[src as usize / 64] |= 1 << (src % 64);
    let mut reached = 1usize;
    let mut depth = 0u32;
    while reached < n {
        let mut next = vec![0u64; words];
        for (w, &fword) in frontier.iter().enumerate() {
            let mut bits = fword;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let v = w * 64 + b;
                for (i, &word) in rows[v].iter().enumerate() {
                    next[i] |= word;
                }
            }
        }
        for w in 0..words {
            next[w] &= !visited[w];
            visited[w] |= next[w];
        }
        let new: usize = next.iter().map(|w| w.count_ones() as usize).sum();
        if new == 0 {
            return None; // disconnected
        }
        reached += new;
        depth += 1;
        frontier = next;
    }
    Some(depth)
}

/// Iterative Tarjan; component ids come out in reverse topological order.
fn tarjan(n: usize, neighbors: impl Fn(u32) -> Arc<Vec<u32>>) -> SccResult {
    let mut index = vec![u32::MAX; n];
    let mut low = vec![0u32; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<u32> = Vec::new();
    let mut comp_of = vec![u32::MAX; n];
    let mut next_index = 0u32;
    let mut count = 0u32;
    // frames: (vertex, neighbor row, next position in row)
    let mut frames: Vec<(u32, Arc<Vec<u32>>, usize)> = Vec::new();
    for root in 0..n as u32 {
        if index[root as usize] != u32::MAX {
            continue;
        }
        frames.push((root, neighbors(root), 0));
        index[root as usize] = next_index;
        low[root as usize] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root as usize] = true;
        while let Some(frame) = frames.last_mut() {
            let (v, row) = (frame.0, frame.1.clone());
            if frame.2 < row.len() {
                let w = row[frame.2];
                frame.2 += 1;
                if index[w as usize] == u32::MAX {
                    index[w as usize] = next_index;
                    low[w as usize] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w as usize] = true;
                    frames.push((w, neighbors(w), 0));
                } else if on_stack[w as usize] {
                    low[v as usize] = low[v as usize].min(index[w as usize]);
                }
            } else {
                frames.pop();
                if let Some(parent) = frames.last() {
                    let p = parent.0 as usize;
                    low[p] = low[p].min(low[v as usize]);
                }
                if low[v as usize] == index[v as usize] {
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w as usize] = false;
                        comp_of[w as usize] = count;
                        if w == v {
                            break;
                        }
                    }
                    count += 1;
                }
            }
        }
    }
    let mut condensation_edges = Vec::new();
    for v in 0..n as u32 {
        for &w in neighbors(v).iter() {
            let (a, b) = (comp_of[v as usize], comp_of[w as usize]);
            if a != b {
                condensation_edges.push((a, b));
            }
        }
    }
    condensation_edges.sort_unstable();
    condensation_edges.dedup();
    SccResult { comp_of, count, condensation_edges }
}

/// Reference SCC by pairwise double reachability with no equivariance or
/// caching; the independent oracle for the fast path.
pub fn scc_reference(group: &Group, mode: GraphMode) -> Result<SccResult> {
    let verts = crate::engel::vertex_set(group, mode)?;
    let table = group.table()?;
    let n = verts.len();
    let adj: Vec<Arc<Vec<u32>>> = (0..n as u32)
        .map(|v| {
            let x = &table.elems[verts[v as usize] as usize];
            Arc::new(
                (0..n as u32)
                    .filter(|&w| {
                        w != v && edge(x, &table.elems[verts[w as usize] as usize], mode)
                    })
                    .collect(),
            )
        })
        .collect();
    // plain BFS reachability from every vertex
    let mut reach: Vec<Vec<bool>> = Vec::with_capacity(n);
    for s in 0..n as u32 {
        let mut seen = vec![false; n];
        seen[s as usize] = true;
        let mut queue = vec![s];
        while let Some(v) = queue.pop() {
            for &w in adj[v as usize].iter() {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    queue.push(w);
                }
            }
        }
        reach.push(seen);
    }
    let mut comp_of = vec![u32::MAX; n];
    let mut count = 0u32;
    for v in 0..n {
        if comp_of[v] != u32::MAX {
            continue;
        }
        for w in 0..n {
            if reach[v][w] && reach[w][v] {
                comp_of[w] = count;
            }
        }
        count += 1;
    }
    Ok(SccResult { comp_of, count, condensation_edges: Vec::new() })
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Dsu {
        Dsu { parent: (0..n).collect() }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// A ball computation that never silently truncates.
#[derive(Debug)]
pub struct BallResult {
    /// Members of the ball, x included, sorted by encoding.
    pub elements: Vec<GroupElement>,
    /// False when the scan budget ran out before the radius was reached.
    pub complete: bool,
    /// Element visits consumed.
    pub visits: u64,
}

/// B_i({x}): vertices of the mode graph at directed distance <= radius
/// from x, by layered out-neighbor expansion over a streaming scan.
/// `budget` bounds the number of edge evaluations.
pub fn ball(
    group: &Group,
    mode: GraphMode,
    x: &GroupElement,
    radius: u32,
    budget: u64,
) -> Result<BallResult> {
    // For streaming groups the gamma vertex set is only available when the
    // hypercenter is trivial (then gamma = delta). A trivial center is
    // enough to certify that.
    let exclude_identity = match mode {
        GraphMode::Lambda => false,
        GraphMode::Delta => true,
        GraphMode::Gamma | GraphMode::GammaN(_) => {
            if group.is_streaming() {
                let z = structure::center(group)?;
                if !z.is_trivial() {
                    return Err(Error::InvalidArgument(
                        "gamma ball on a streaming group needs a trivial hypercenter".into(),
                    ));
                }
                true
            } else {
                true // conservative: the identity is always hypercentral
            }
        }
    };
    if exclude_identity && x.is_identity() {
        return Err(Error::NotAVertex { element: x.to_string(), mode: mode.label() });
    }
    let mut members: std::collections::HashSet<GroupElement> = std::collections::HashSet::new();
    members.insert(x.clone());
    let mut frontier = vec![x.clone()];
    let mut visits = 0u64;
    for _ in 0..radius {
        let mut next = Vec::new();
        for f in &frontier {
            for g in group.elements_iter()? {
                if g == *f || (exclude_identity && g.is_identity()) {
                    continue;
                }
                visits += 1;
                if visits > budget {
                    let mut elements: Vec<GroupElement> = members.into_iter().collect();
                    elements.sort_unstable();
                    return Ok(BallResult { elements, complete: false, visits });
                }
                if members.contains(&g) {
                    continue;
                }
                if edge(f, &g, mode) {
                    members.insert(g.clone());
                    next.push(g);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    let mut elements: Vec<GroupElement> = members.into_iter().collect();
    elements.sort_unstable();
    Ok(BallResult { elements, complete: true, visits })
}

/// Termination guard used by the tests: every Engel trace visits at most
/// |G| values.
pub fn trace_within_bound(group: &Group, x: &GroupElement, y: &GroupElement) -> Result<bool> {
    let t = eng(x, y);
    Ok(u64::from(t.trail_length) <= group.order()?)
}
