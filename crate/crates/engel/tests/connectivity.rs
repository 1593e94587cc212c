//! Graph-algorithm tests against independent oracles: reachability-based
//! SCCs, equivariance on/off agreement, and hand-checked component
//! structure on small groups.

use engel::catalog::{self, LinearKind};
use engel::graph::{scc_reference, DirectedDiameter};
use engel::{Config, EngelGraph, GraphMode};

fn cfg() -> Config {
    Config::default()
}

fn canonical(comp_of: &[u32]) -> Vec<u32> {
    let mut map = std::collections::HashMap::new();
    comp_of
        .iter()
        .map(|&c| {
            let next = map.len() as u32;
            *map.entry(c).or_insert(next)
        })
        .collect()
}

#[test]
fn s4_gamma_is_one_strong_component() {
    let c = cfg();
    let g = catalog::make_symmetric(4, &c).unwrap();
    let mut graph = EngelGraph::new(&g, GraphMode::Gamma, true).unwrap();
    assert_eq!(graph.vertex_count(), 23);
    assert!(graph.is_strongly_connected().unwrap());
    assert!(graph.is_weakly_connected().unwrap());
    let scc = graph.scc().unwrap();
    assert_eq!(scc.count, 1);
    assert!(scc.condensation_edges.is_empty());
    assert_eq!(graph.directed_diameter().unwrap(), DirectedDiameter::Value(3));
    assert_eq!(graph.undirected_diameter().unwrap(), Some(2));
}

#[test]
fn a5_gamma_components_split_by_element_order() {
    let c = cfg();
    let g = catalog::make_alternating(5, &c).unwrap();
    let mut graph = EngelGraph::new(&g, GraphMode::Gamma, true).unwrap();
    assert!(!graph.is_strongly_connected().unwrap());
    assert!(graph.is_weakly_connected().unwrap());
    let scc = graph.scc().unwrap();
    // the involution/3-cycle core plus one singleton per order-5 cyclic
    // subgroup's worth of elements grouped by <x>
    assert!(scc.count > 1);
    assert_eq!(graph.directed_diameter().unwrap(), DirectedDiameter::Unreachable);
    // orders 5 split off: vertices of order 5 never share a component
    // with vertices of order 2
    let orders = g.element_orders().unwrap();
    let mut comp_orders: std::collections::HashMap<u32, std::collections::HashSet<u32>> =
        std::collections::HashMap::new();
    for (vpos, &idx) in graph.vertices().iter().enumerate() {
        comp_orders
            .entry(scc.comp_of[vpos])
            .or_default()
            .insert(orders[idx as usize]);
    }
    for members in comp_orders.values() {
        assert!(!(members.contains(&2) && members.contains(&5)));
    }
}

#[test]
fn scc_matches_reference_oracle_on_small_corpus() {
    let c = cfg();
    let groups = vec![
        catalog::make_symmetric(4, &c).unwrap(),
        catalog::make_alternating(4, &c).unwrap(),
        catalog::make_alternating(5, &c).unwrap(),
        catalog::make_dihedral(6, &c).unwrap(),
        catalog::make_dihedral(7, &c).unwrap(),
        catalog::make_linear(LinearKind::Sl, 2, 3, &c).unwrap(),
        catalog::make_frobenius_metacyclic(5, 4, &c).unwrap(),
        catalog::make_frobenius_metacyclic(7, 3, &c).unwrap(),
    ];
    for g in &groups {
        for mode in [GraphMode::Gamma, GraphMode::Delta, GraphMode::GammaN(2)] {
            let mut graph = EngelGraph::new(g, mode, true).unwrap();
            let fast = graph.scc().unwrap();
            let slow = scc_reference(g, mode).unwrap();
            assert_eq!(fast.count, slow.count);
            assert_eq!(canonical(&fast.comp_of), canonical(&slow.comp_of));
        }
    }
}

#[test]
fn equivariance_on_and_off_agree() {
    let c = cfg();
    let groups = vec![
        catalog::make_symmetric(4, &c).unwrap(),
        catalog::make_alternating(5, &c).unwrap(),
        catalog::make_linear(LinearKind::Gl, 2, 3, &c).unwrap(),
    ];
    for g in &groups {
        for mode in [GraphMode::Gamma, GraphMode::GammaN(2)] {
            let mut with = EngelGraph::new(g, mode, true).unwrap();
            let mut without = EngelGraph::new(g, mode, false).unwrap();
            assert_eq!(with.vertex_count(), without.vertex_count());
            for v in 0..with.vertex_count() as u32 {
                assert_eq!(
                    *with.out_neighbors(v).unwrap(),
                    *without.out_neighbors(v).unwrap(),
                    "out rows differ at vertex {v}"
                );
                assert_eq!(
                    *with.in_neighbors(v).unwrap(),
                    *without.in_neighbors(v).unwrap(),
                    "in rows differ at vertex {v}"
                );
            }
        }
    }
}

#[test]
fn condensed_scc_equals_plain_scc() {
    let c = cfg();
    for g in [
        catalog::make_symmetric(5, &c).unwrap(),
        catalog::make_alternating(5, &c).unwrap(),
        catalog::make_frobenius_metacyclic(19, 6, &c).unwrap(),
    ] {
        let mut graph = EngelGraph::new(&g, GraphMode::Gamma, true).unwrap();
        let plain = graph.scc().unwrap();
        let condensed = graph.scc_condensed().unwrap();
        assert_eq!(plain.count, condensed.count);
        assert_eq!(canonical(&plain.comp_of), canonical(&condensed.comp_of));
    }
}

#[test]
fn lambda_graph_includes_the_identity_as_universal_vertex() {
    let c = cfg();
    let g = catalog::make_symmetric(4, &c).unwrap();
    let mut graph = EngelGraph::new(&g, GraphMode::Lambda, true).unwrap();
    assert_eq!(graph.vertex_count(), 24);
    let id_pos = graph.position_of_element(g.identity()).unwrap();
    // everything commutes with the identity, in both directions
    assert_eq!(graph.out_neighbors(id_pos).unwrap().len(), 23);
    assert_eq!(graph.in_neighbors(id_pos).unwrap().len(), 23);
}

#[test]
fn ball_on_a_stored_group_matches_bfs_layers() {
    let c = cfg();
    let g = catalog::make_alternating(5, &c).unwrap();
    let table = g.table().unwrap();
    let x = table.elems.iter().find(|e| e.order() == 5).unwrap().clone();
    // oracle: layered expansion with the raw edge predicate
    let mut oracle: std::collections::HashSet<engel::GroupElement> =
        std::collections::HashSet::new();
    oracle.insert(x.clone());
    for _ in 0..2 {
        let frontier: Vec<_> = oracle.iter().cloned().collect();
        for f in frontier {
            for y in &table.elems {
                if !y.is_identity()
                    && *y != f
                    && engel::edge(&f, y, GraphMode::Gamma)
                {
                    oracle.insert(y.clone());
                }
            }
        }
    }
    let ball = engel::ball(&g, GraphMode::Gamma, &x, 2, u64::MAX).unwrap();
    assert!(ball.complete);
    let got: std::collections::HashSet<_> = ball.elements.iter().cloned().collect();
    assert_eq!(got, oracle);
}

#[test]
fn ball_budget_exhaustion_is_flagged_not_silent() {
    let c = cfg();
    let g = catalog::make_alternating(5, &c).unwrap();
    let x = g.table().unwrap().elems.iter().find(|e| e.order() == 5).unwrap().clone();
    let ball = engel::ball(&g, GraphMode::Gamma, &x, 2, 10).unwrap();
    assert!(!ball.complete);
    assert!(ball.visits >= 10);
}

#[test]
fn gamma_n_vertex_sets_shrink_as_n_grows() {
    let c = cfg();
    let g = catalog::make_linear(LinearKind::Gl, 2, 3, &c).unwrap();
    let mut previous = usize::MAX;
    for n in 1..=5 {
        let count = EngelGraph::new(&g, GraphMode::GammaN(n), true).unwrap().vertex_count();
        assert!(count <= previous, "vertex set grew from n={} to n={n}", n - 1);
        previous = count;
    }
}
