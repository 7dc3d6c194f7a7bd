use std::collections::{BTreeMap, BTreeSet};

use mbcount::counting::{MemoTable, PartitionTriple};
use mbcount::enumeration::{
    all_digraphs, children_acyclic, count_dags_brute, count_mb_by_extraction, count_mb_naive,
    enumerate_mb, extract_mb, extraction_image, is_canonical_mb, is_dag, Cap, Digraph,
};
use proptest::prelude::*;

/// Acyclic iff some node ordering puts every edge forward; tries them all.
fn has_topological_order(g: &Digraph) -> bool {
    fn permute(order: &mut Vec<usize>, used: &mut [bool], g: &Digraph) -> bool {
        let n = g.node_count();
        if order.len() == n {
            let mut pos = vec![0; n];
            for (i, &v) in order.iter().enumerate() {
                pos[v] = i;
            }
            return g.edges().all(|(s, d)| pos[s] < pos[d]);
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                order.push(v);
                if permute(order, used, g) {
                    return true;
                }
                order.pop();
                used[v] = false;
            }
        }
        false
    }
    permute(&mut Vec::new(), &mut vec![false; g.node_count()], g)
}

#[test]
fn acyclicity_agrees_with_permutation_search() {
    for n in 1..=4 {
        for g in all_digraphs(n, 0, Cap::Default).unwrap() {
            assert_eq!(is_dag(&g), has_topological_order(&g), "{g:?}");
        }
    }
}

#[test]
fn dag_oracle_matches_recurrence() {
    let mut memo = MemoTable::new();
    for n in 1..=5 {
        assert_eq!(
            count_dags_brute(n, Cap::Default).unwrap(),
            memo.bn_count(n),
            "n={n}"
        );
    }
}

#[test]
fn mb_oracles_match_recurrence_for_each_target() {
    let mut memo = MemoTable::new();
    for n in 1..=5 {
        let want = memo.mb_count(n).unwrap();
        for t in 0..n {
            assert_eq!(
                count_mb_naive(n, t, Cap::Default).unwrap(),
                want,
                "naive n={n} t={t}"
            );
            assert_eq!(
                count_mb_by_extraction(n, t, Cap::Default).unwrap(),
                want,
                "extract n={n} t={t}"
            );
        }
    }
}

#[test]
fn extraction_counts_for_three_and_four_nodes() {
    let three = extraction_image(3, 0, Cap::Default).unwrap();
    assert_eq!((three.dags_scanned, three.structures.len()), (25, 15));
    let four = extraction_image(4, 0, Cap::Default).unwrap();
    assert_eq!((four.dags_scanned, four.structures.len()), (543, 153));
}

#[test]
fn extraction_image_is_the_canonical_set() {
    for n in 1..=4 {
        for t in 0..n {
            let image = extraction_image(n, t, Cap::Default).unwrap().structures;
            let canon: BTreeSet<_> = enumerate_mb(n, t, Cap::Default).unwrap().collect();
            assert_eq!(image, canon, "n={n} t={t}");
        }
    }
}

#[test]
fn extraction_is_idempotent() {
    for n in 1..=4 {
        for t in 0..n {
            for g in all_digraphs(n, t, Cap::Default).unwrap().filter(is_dag) {
                let once = extract_mb(&g).unwrap();
                assert_eq!(extract_mb(&once.to_digraph()).unwrap(), once, "{g:?}");
                assert!(is_canonical_mb(&once.to_digraph()));
            }
        }
    }
}

#[test]
fn structure_sets_agree_across_targets() {
    for n in 1..=4 {
        let reference: BTreeSet<_> = enumerate_mb(n, 0, Cap::Default).unwrap().collect();
        for t in 1..n {
            assert_eq!(
                count_mb_naive(n, t, Cap::Default).unwrap(),
                count_mb_naive(n, 0, Cap::Default).unwrap()
            );
            let relabeled: BTreeSet<_> = enumerate_mb(n, t, Cap::Default)
                .unwrap()
                .map(|k| k.relabel_target_to_zero())
                .collect();
            assert_eq!(relabeled, reference, "n={n} t={t}");
        }
    }
}

#[test]
fn enumerated_keys_are_sound_and_sorted() {
    for n in 1..=5 {
        let keys: Vec<_> = enumerate_mb(n, 0, Cap::Default).unwrap().collect();
        assert!(
            keys.windows(2).all(|w| w[0] < w[1]),
            "n={n} not strictly sorted"
        );
        for k in &keys {
            assert!(is_canonical_mb(&k.to_digraph()), "{k:?}");
            assert!(children_acyclic(k), "{k:?}");
        }
    }
}

#[test]
fn partition_groups_match_terms() {
    let mut memo = MemoTable::new();
    for n in 1..=4 {
        let mut groups: BTreeMap<PartitionTriple, u64> = BTreeMap::new();
        for k in enumerate_mb(n, 0, Cap::Default).unwrap() {
            *groups.entry(k.roles().partition()).or_default() += 1;
        }
        for n_p in 0..n {
            for n_so in 0..(n - n_p) {
                let triple = PartitionTriple::for_domain(n, n_p, n_so).unwrap();
                let term = memo.mb_partition_term(n, n_p, n_so).unwrap();
                assert_eq!(
                    term,
                    groups.get(&triple).copied().unwrap_or(0),
                    "{triple:?}"
                );
            }
        }
    }
}

fn arbitrary_digraph() -> impl Strategy<Value = Digraph> {
    (1usize..=6).prop_flat_map(|n| {
        let bits = n * (n - 1);
        let limit = if bits == 0 { 1 } else { 1u64 << bits };
        (Just(n), 0..n, 0..limit).prop_map(|(n, t, mask)| Digraph::from_mask(n, t, mask).unwrap())
    })
}

proptest! {
    #[test]
    fn acyclicity_agrees_on_six_nodes(g in arbitrary_digraph()) {
        prop_assert_eq!(is_dag(&g), has_topological_order(&g));
    }

    #[test]
    fn extraction_properties(g in arbitrary_digraph()) {
        match extract_mb(&g) {
            Err(_) => prop_assert!(!is_dag(&g)),
            Ok(key) => {
                let h = key.to_digraph();
                prop_assert!(is_canonical_mb(&h));
                prop_assert_eq!(h.mask() & !g.mask(), 0, "extraction added edges");
                prop_assert_eq!(extract_mb(&h).unwrap(), key.clone());
                if is_canonical_mb(&g) {
                    prop_assert_eq!(h, g);
                }
            }
        }
    }
}
