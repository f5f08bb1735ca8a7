use std::collections::BTreeSet;

use kflab_core::blocks::cactus_cycle_count;
use kflab_core::canon::canonical_certificate;
use kflab_core::closed_forms::CactusClassSpec;
use kflab_core::enumeration::{enumerate_cacti, extremal_scan};

fn members(n: usize, t: usize) -> Vec<kflab_core::Graph> {
    enumerate_cacti(CactusClassSpec::new(n, t).unwrap())
        .unwrap()
        .into_iter()
        .map(|(_, g)| g)
        .collect()
}

#[test]
fn unlabeled_tree_counts() {
    let want = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
    for (i, &w) in want.iter().enumerate() {
        assert_eq!(members(i + 1, 0).len(), w, "n = {}", i + 1);
    }
}

#[test]
fn unicyclic_counts() {
    // connected unicyclic graphs: 1, 2, 5, 13, 33, 89
    let want = [1, 2, 5, 13, 33, 89];
    for (i, &w) in want.iter().enumerate() {
        assert_eq!(members(i + 3, 1).len(), w, "n = {}", i + 3);
    }
}

#[test]
fn classes_are_distinct_and_valid() {
    for n in 1..=9 {
        for t in 0..=(n - 1) / 2 {
            let list = members(n, t);
            let certs: BTreeSet<_> = list.iter().map(|g| canonical_certificate(g).unwrap()).collect();
            assert_eq!(certs.len(), list.len(), "duplicate class at ({n}, {t})");
            for g in &list {
                assert_eq!(g.order(), n);
                assert_eq!(cactus_cycle_count(g), Some(t));
            }
        }
    }
}

#[test]
fn report_is_worker_independent() {
    let spec = CactusClassSpec::new(9, 3).unwrap();
    let a = serde_json::to_string(&extremal_scan(spec, 1).unwrap()).unwrap();
    let b = serde_json::to_string(&extremal_scan(spec, 4).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn oversize_requests_are_refused() {
    let spec = CactusClassSpec::new(40, 3).unwrap();
    assert!(enumerate_cacti(spec).is_err());
}
