//! The Engel-word evaluator and edge oracles.
//!
//! `eng` iterates y-commutators from x, stopping at the identity or at
//! the first repeated value. A repeated non-identity value certifies
//! non-adjacency, so the trace is a sound and complete adjacency
//! decision; the identity is seeded into the visited set, which makes
//! `trail_length <= n` equivalent to `[x,_n y] = 1`.

use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::structure;

/// Result of iterating y-commutators from x.
#[derive(Debug, Clone)]
pub struct EngelTrace {
    /// The identity, or the first repeated non-identity value.
    pub terminal: GroupElement,
    /// Number of distinct values visited before stopping (identity seed
    /// included); equals the least n with `[x,_n y] = 1` when adjacent.
    pub trail_length: u32,
    /// terminal = identity
    pub adjacency: bool,
}

/// Which Engel graph is being queried.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphMode {
    /// Vertices: non-hypercentral elements; edge iff [x,_n y]=1 for some n.
    Gamma,
    /// Fixed n >= 1; vertices: complement of I_n(G).
    GammaN(u32),
    /// All elements as vertices.
    Lambda,
    /// Non-identity elements as vertices.
    Delta,
}

impl GraphMode {
    pub fn label(&self) -> String {
        match self {
            GraphMode::Gamma => "gamma".into(),
            GraphMode::GammaN(n) => format!("gamma_{n}"),
            GraphMode::Lambda => "lambda".into(),
            GraphMode::Delta => "delta".into(),
        }
    }
}

/// Evaluate the Engel trace from x to y.
pub fn eng(x: &GroupElement, y: &GroupElement) -> EngelTrace {
    let y_inv = y.inv();
    let mut z = comm_with(x, y, &y_inv);
    // The visited list stays tiny in practice; fall back to a hash set
    // only for pathologically long trails.
    let mut visited: Vec<GroupElement> = Vec::new();
    let mut spill: Option<std::collections::HashSet<GroupElement>> = None;
    loop {
        if z.is_identity() {
            return EngelTrace {
                terminal: z,
                trail_length: visited.len() as u32 + 1,
                adjacency: true,
            };
        }
        let seen = match &spill {
            Some(set) => set.contains(&z),
            None => visited.contains(&z),
        };
        if seen {
            return EngelTrace {
                terminal: z,
                trail_length: visited.len() as u32 + 1,
                adjacency: false,
            };
        }
        visited.push(z.clone());
        if visited.len() == 64 && spill.is_none() {
            spill = Some(visited.iter().cloned().collect());
        }
        if let Some(set) = &mut spill {
            set.insert(z.clone());
        }
        z = comm_with(&z, y, &y_inv);
    }
}

#[inline]
fn comm_with(a: &GroupElement, b: &GroupElement, b_inv: &GroupElement) -> GroupElement {
    // [a,b] = a^-1 * (b^-1 a b)
    a.inv().mul(&b_inv.mul(a).mul(b))
}

/// Direct evaluation of the Engel word [x,_n y] (n >= 0).
pub fn engel_word(x: &GroupElement, y: &GroupElement, n: u32) -> GroupElement {
    let mut cur = x.clone();
    for _ in 0..n {
        cur = cur.comm(y);
    }
    cur
}

/// Edge oracle. Pre: x != y and both are vertices for the mode; loops are
/// excluded at the graph layer.
pub fn edge(x: &GroupElement, y: &GroupElement, mode: GraphMode) -> bool {
    let trace = eng(x, y);
    match mode {
        GraphMode::GammaN(n) => trace.adjacency && trace.trail_length <= n,
        _ => trace.adjacency,
    }
}

/// Vertex set of the given mode, as sorted table indices.
pub fn vertex_set(g: &Group, mode: GraphMode) -> Result<Vec<u32>> {
    let table = g.table()?;
    let n = table.len() as u32;
    match mode {
        GraphMode::Lambda => Ok((0..n).collect()),
        GraphMode::Delta => {
            let id = table.index_of(g.identity()).expect("identity in table");
            Ok((0..n).filter(|&v| v != id).collect())
        }
        GraphMode::Gamma => {
            let z = structure::hypercenter(g)?;
            let excluded = z.indices(g)?;
            Ok((0..n).filter(|v| excluded.binary_search(v).is_err()).collect())
        }
        GraphMode::GammaN(w) => {
            if w < 1 {
                return Err(Error::InvalidArgument("gamma_n requires n >= 1".into()));
            }
            let inner = i_set(g, w)?;
            Ok((0..n).filter(|v| inner.binary_search(v).is_err()).collect())
        }
    }
}

/// I_n(G) = I_{r,n} intersect I_{l,n}, computed by exhaustive
/// quantification over the table. Both sets are closed under conjugation,
/// so only class representatives need testing.
pub fn i_set(g: &Group, n: u32) -> Result<Vec<u32>> {
    let table = g.table()?;
    let classes = g.conjugacy_classes()?;
    let mut member = vec![false; table.len()];
    for (cid, &rep) in classes.reps.iter().enumerate() {
        let e = &table.elems[rep as usize];
        let right = table.elems.iter().all(|x| engel_word(e, x, n).is_identity());
        let both = right && table.elems.iter().all(|x| engel_word(x, e, n).is_identity());
        if both {
            for &m in &classes.members[cid] {
                member[m as usize] = true;
            }
        }
    }
    Ok((0..table.len() as u32).filter(|&v| member[v as usize]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Config;
    use crate::element::perm_from_cycles;

    #[test]
    fn commuting_pair_has_trail_one() {
        let x = perm_from_cycles(5, &[&[1, 2]]);
        let y = perm_from_cycles(5, &[&[3, 4]]);
        let t = eng(&x, &y);
        assert!(t.adjacency);
        assert_eq!(t.trail_length, 1);
    }

    #[test]
    fn a5_five_cycle_not_adjacent_to_three_cycle() {
        let x = perm_from_cycles(5, &[&[1, 2, 3, 4, 5]]);
        let y = perm_from_cycles(5, &[&[1, 2, 3]]);
        let t = eng(&x, &y);
        assert!(!t.adjacency);
        assert!(!t.terminal.is_identity());
    }

    #[test]
    fn trail_agrees_with_direct_word_evaluation() {
        let cfg = Config::default();
        let g = crate::group::Group::from_generators(
            vec![perm_from_cycles(4, &[&[1, 2]]), perm_from_cycles(4, &[&[1, 2, 3, 4]])],
            &cfg,
        );
        let table = g.table().unwrap();
        for x in &table.elems {
            for y in &table.elems {
                let t = eng(x, y);
                for n in 1..=6 {
                    let direct = engel_word(x, y, n).is_identity();
                    let via_trace = t.adjacency && t.trail_length <= n;
                    assert_eq!(direct, via_trace, "x={x} y={y} n={n}");
                }
            }
        }
    }

    #[test]
    fn lambda_one_edges_are_symmetric() {
        let cfg = Config::default();
        let g = crate::group::Group::from_generators(
            vec![perm_from_cycles(4, &[&[1, 2]]), perm_from_cycles(4, &[&[1, 2, 3, 4]])],
            &cfg,
        );
        let table = g.table().unwrap();
        for x in &table.elems {
            for y in &table.elems {
                if x != y {
                    assert_eq!(
                        edge(x, y, GraphMode::GammaN(1)),
                        edge(y, x, GraphMode::GammaN(1))
                    );
                }
            }
        }
    }
}
