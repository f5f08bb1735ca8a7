use kflab_core::canon::canonical_certificate;
use kflab_core::closed_forms::{kf_extremal_chain, CactusClassSpec};
use kflab_core::constructions::{build_extremal_chain, build_minimal_star, build_named, compose_kf, Anchored};
use kflab_core::enumeration::{random_cactus, random_connected_graph, seeded_rng};
use kflab_core::resistance::kirchhoff_index;
use kflab_core::{coalesce, Graph};
use rand::seq::SliceRandom;
use rand::Rng;

fn random_part<R: Rng>(rng: &mut R) -> Graph {
    let n = rng.gen_range(1..=9);
    if rng.gen_bool(0.5) {
        random_cactus(n, rng.gen_range(0..=(n - 1) / 2), rng).unwrap()
    } else {
        random_connected_graph(n, 0.3, rng).unwrap()
    }
}

#[test]
fn composed_index_matches_direct_computation() {
    let mut rng = seeded_rng(2024);
    for _ in 0..500 {
        let g1 = random_part(&mut rng);
        let g2 = random_part(&mut rng);
        let x1 = rng.gen_range(0..g1.order());
        let x2 = rng.gen_range(0..g2.order());
        let glued = coalesce(&g1, x1, &g2, x2).unwrap();
        assert_eq!(glued.graph.order(), g1.order() + g2.order() - 1);
        let direct = kirchhoff_index(&glued.graph).unwrap();
        let composed = compose_kf(Anchored::new(&g1, x1), Anchored::new(&g2, x2)).unwrap();
        assert_eq!(direct, composed);
    }
}

#[test]
fn certificates_ignore_labels() {
    let mut rng = seeded_rng(5);
    for _ in 0..20 {
        let g = random_part(&mut rng);
        let cert = canonical_certificate(&g).unwrap();
        let mut perm: Vec<usize> = (0..g.order()).collect();
        for _ in 0..100 {
            perm.shuffle(&mut rng);
            assert_eq!(canonical_certificate(&g.relabel(&perm).unwrap()).unwrap(), cert);
        }
    }
}

#[test]
fn certificates_separate_small_non_isomorphic_graphs() {
    // P_4 and the star K_{1,3}; C_4 and the paw
    let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
    let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
    let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    let paw = Graph::from_edges(4, [(0, 1), (1, 2), (2, 0), (0, 3)]).unwrap();
    let certs: Vec<_> = [p4, star, c4, paw].iter().map(|g| canonical_certificate(g).unwrap()).collect();
    for i in 0..certs.len() {
        for j in i + 1..certs.len() {
            assert_ne!(certs[i], certs[j]);
        }
    }
}

#[test]
fn extremal_chain_is_in_class_with_the_closed_form_index() {
    for spec in CactusClassSpec::all_with_order(1..=14) {
        let g = build_extremal_chain(spec).unwrap().graph;
        assert_eq!(g.order(), spec.n());
        assert_eq!(kflab_core::blocks::cactus_cycle_count(&g), Some(spec.t()));
        assert_eq!(kirchhoff_index(&g).unwrap(), kf_extremal_chain(spec), "{spec:?}");
        let star = build_minimal_star(spec).unwrap().graph;
        assert_eq!(kflab_core::blocks::cactus_cycle_count(&star), Some(spec.t()));
    }
}

#[test]
fn named_constructions() {
    let bowtie = build_named("cnt", &[5, 2]).unwrap().graph;
    assert_eq!((bowtie.order(), bowtie.size()), (5, 6));
    assert!((0..5).any(|v| bowtie.degree(v) == 4));
    let p8 = build_named("cnt", &[8, 0]).unwrap().graph;
    assert_eq!(
        canonical_certificate(&p8).unwrap(),
        canonical_certificate(&build_named("path", &[8]).unwrap().graph).unwrap()
    );
    let paw = build_named("g10", &[4]).unwrap().graph;
    let want = Graph::from_edges(4, [(0, 1), (1, 2), (2, 0), (0, 3)]).unwrap();
    assert_eq!(canonical_certificate(&paw).unwrap(), canonical_certificate(&want).unwrap());
    assert!(build_named("cnt", &[4, 2]).is_err());
    assert!(build_named("nosuch", &[3]).is_err());
}
