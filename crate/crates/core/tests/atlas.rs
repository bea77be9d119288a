use std::sync::OnceLock;

use rphp::atlas::{
    atlas_build, atlas_build_cached, emit_dot, emit_jump_levels_dot, emit_json, landmark_nodes,
    jump_level_rows, verify_edge, verify_entry, Atlas, AtlasConfig, DotOptions, EdgeKind, Node,
};
use rphp::php::choose2;
use rphp::search::SearchBudget;

fn default_atlas() -> &'static Atlas {
    static ATLAS: OnceLock<Atlas> = OnceLock::new();
    ATLAS.get_or_init(|| atlas_build(&AtlasConfig::default()).unwrap())
}

fn max_k(a: &Atlas, m: usize, n: usize) -> usize {
    let e = a.entry(m, n).unwrap_or_else(|| panic!("no entry ({m},{n})"));
    assert!(e.is_settled(), "({m},{n}) unsettled");
    e.max_k
}

fn node(m: usize, n: usize) -> Node {
    Node::new(m, n)
}

// from -> to: RPHP(to) reduces to RPHP(from)
const LANDMARK_ARROWS: [((usize, usize), (usize, usize)); 20] = [
    ((3, 2), (4, 2)),
    ((4, 2), (3, 2)),
    ((9, 3), (3, 2)),
    ((4, 3), (9, 3)),
    ((5, 4), (9, 4)),
    ((9, 4), (4, 3)),
    ((9, 4), (10, 4)),
    ((11, 5), (10, 4)),
    ((10, 4), (9, 3)),
    ((10, 4), (16, 4)),
    ((17, 5), (16, 4)),
    ((16, 4), (3, 2)),
    ((6, 5), (7, 5)),
    ((7, 5), (10, 5)),
    ((10, 5), (9, 4)),
    ((10, 5), (11, 5)),
    ((11, 5), (17, 5)),
    ((17, 5), (25, 5)),
    ((25, 5), (4, 3)),
    ((7, 5), (5, 4)),
];

#[test]
fn summary_chain() {
    let a = default_atlas();
    assert_eq!(a.entries.len(), 3 + 7 + 13 + 21);
    for n in 3..=5 {
        let top = choose2(n + 1);
        assert_eq!(max_k(a, n + 1, n), top);
        assert!(max_k(a, n + 2, n) < top);
        assert_eq!(max_k(a, 2 * n, n), 2 * n - 1);
        assert!(max_k(a, 2 * n + 1, n) < 2 * n - 1);
        assert_eq!(max_k(a, n * n, n), n + 1);
        assert_eq!(max_k(a, n * n + 1, n), 1);
    }
    assert_eq!(max_k(a, 9, 3), 4);
    assert_eq!(max_k(a, 25, 5), 6);
    assert_eq!(a.entry(9, 4).unwrap().lower, "builtin:nine-4-6");
}

#[test]
fn landmark_arrows_present() {
    let a = default_atlas();
    for ((a1, b1), (a2, b2)) in LANDMARK_ARROWS {
        assert!(a.edge(node(a1, b1), node(a2, b2)).is_some(), "({a1},{b1}) -> ({a2},{b2})");
    }
    let dot = emit_dot(a, &DotOptions::default());
    for ((a1, b1), (a2, b2)) in LANDMARK_ARROWS {
        let line = format!("\"({a1},{b1})\" -> \"({a2},{b2})\"");
        assert!(dot.contains(&line), "{line}");
    }
    let sub = emit_dot(a, &DotOptions { strict_only: false, nodes: Some(landmark_nodes()) });
    assert!(sub.contains("\"(4,3)\" -> \"(9,3)\""));
    assert!(!sub.contains("\"(5,3)\""));
}

#[test]
fn small_equivalence_and_separations() {
    let a = default_atlas();
    let up = a.edge(node(4, 2), node(3, 2)).unwrap();
    let down = a.edge(node(3, 2), node(4, 2)).unwrap();
    assert_eq!((up.strict, down.strict), (Some(false), Some(false)));
    assert_eq!(down.kind, EdgeKind::Restriction);
    assert_eq!(up.kind, EdgeKind::IdLevelDerived);
    assert_eq!(a.edge(node(4, 2), node(5, 2)).unwrap().strict, Some(true));
    let searched = a.edge(node(5, 3), node(6, 3)).unwrap();
    assert_eq!(searched.strict, Some(true));
    assert!(searched.reason.as_deref().unwrap().starts_with("search: no reduction"));
    assert!(a.edges.iter().all(|e| !e.claimed));
    // n_from > n_to separates by the id threshold
    assert_eq!(a.edge(node(5, 4), node(9, 3)).unwrap().strict, Some(true));
}

#[test]
fn certificates_reverify() {
    let a = default_atlas();
    for e in &a.entries {
        verify_entry(e).unwrap();
    }
    for e in &a.edges {
        verify_edge(a, e, 1 << 12).unwrap_or_else(|err| panic!("{} -> {}: {err}", e.from, e.to));
    }
    let mut bad = a.edges.iter().find(|e| e.kind == EdgeKind::Padding).unwrap().clone();
    bad.certificate = "padding-witness:q=2,r=0".into();
    assert!(verify_edge(a, &bad, 1 << 12).is_err());
}

#[test]
fn warm_cache_is_byte_identical() {
    let a = default_atlas();
    let json = emit_json(a);
    let cache = Atlas::from_json(&json).unwrap();
    let rebuilt = atlas_build_cached(&AtlasConfig::default(), Some(&cache)).unwrap();
    assert_eq!(emit_json(&rebuilt), json);

    // a tampered entry is recomputed rather than trusted
    let mut stale = cache.clone();
    let e = stale.entries.iter_mut().find(|e| e.m == 9 && e.n == 4).unwrap();
    e.witness[1] = e.witness[0].clone();
    let rebuilt = atlas_build_cached(&AtlasConfig::default(), Some(&stale)).unwrap();
    assert_eq!(emit_json(&rebuilt), json);

    let mut other = cache;
    other.version = "0.0.0".into();
    assert_eq!(emit_json(&atlas_build_cached(&AtlasConfig::default(), Some(&other)).unwrap()), json);
}

#[test]
fn empty_atlas() {
    let a = atlas_build(&AtlasConfig::new(1, None, SearchBudget::default())).unwrap();
    assert!(a.entries.is_empty() && a.edges.is_empty());
    assert_eq!(emit_dot(&a, &DotOptions::default()), "digraph atlas {\n}\n");
    assert_eq!(emit_jump_levels_dot(&[]), "digraph jump_levels {\n}\n");
}

#[test]
fn widened_rectangle_decides_n2_chain() {
    let a = atlas_build(&AtlasConfig::new(2, Some(7), SearchBudget::default())).unwrap();
    for (m, k) in [(3, 3), (4, 3), (5, 1), (6, 1), (7, 1)] {
        assert_eq!(max_k(&a, m, 2), k);
    }
    for (x, y) in [(5, 6), (6, 7)] {
        let e = a.edge(node(x, 2), node(y, 2)).unwrap();
        assert_eq!(e.strict, Some(true), "({x},2) -> ({y},2)");
        assert!(e.reason.as_deref().unwrap().starts_with("search"));
    }
}

#[test]
fn unsearched_claims_render_dashed() {
    let mut config = AtlasConfig::new(3, Some(6), SearchBudget::default());
    config.search_table_limit = 0;
    let a = atlas_build(&config).unwrap();
    let e = a.edge(node(5, 3), node(6, 3)).unwrap();
    assert!(e.claimed && e.strict.is_none());
    let dot = emit_dot(&a, &DotOptions { strict_only: true, nodes: None });
    assert!(dot.contains("\"(5,3)\" -> \"(6,3)\" [label=\"restriction\", style=dashed];"));
    assert!(dot.contains("\"(4,3)\" -> \"(5,3)\" [label=\"restriction\", style=bold];"));
    assert!(!dot.contains("\"(3,2)\" -> \"(4,2)\""));
}

#[test]
fn jump_levels_for_n2() {
    let rows = jump_level_rows(2, &[4, 5, 8, 9], 4, &SearchBudget::default()).unwrap();
    let acc2: Vec<_> = rows.iter().map(|r| r.acc2).collect();
    assert_eq!(acc2, vec![Some(true), Some(true), Some(true), Some(false)]);
    let c3: Vec<_> = rows.iter().map(|r| r.c3).collect();
    assert_eq!(c3, vec![true, true, true, false]);
    assert_eq!(rows[1].auc_refuted, Some(4));
    let dot = emit_jump_levels_dot(&rows);
    assert!(dot.contains("no ACC_2"));
    assert!(dot.contains("\"m8\" -> \"m9\";"));
    assert!(dot.contains("AUC_4 (search cap)"));
}
