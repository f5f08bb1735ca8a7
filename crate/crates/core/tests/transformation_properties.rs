use kflab_core::closed_forms::{op3_gain, op4_gain_lower_bound, op5_gain};
use kflab_core::constructions::Anchored;
use kflab_core::enumeration::{random_cactus, seeded_rng};
use kflab_core::rational::int;
use kflab_core::transformations::{canonicalize_to_extremal, operation_iii, operation_iv, operation_v, Claim};
use kflab_core::Graph;
use proptest::prelude::*;
use rand::Rng;

fn part(seed: u64, max_n: usize) -> (Graph, usize) {
    let mut rng = seeded_rng(seed);
    let n = rng.gen_range(1..=max_n);
    let g = random_cactus(n, rng.gen_range(0..=(n - 1) / 2), &mut rng).unwrap();
    let at = rng.gen_range(0..n);
    (g, at)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pendant_cycle_gain_depends_only_on_order(seed in any::<u64>(), k in 4usize..9) {
        let (g1, at) = part(seed, 7);
        let cert = operation_iii(Anchored::new(&g1, at), k).unwrap();
        prop_assert!(cert.consistent());
        prop_assert_eq!(cert.claim, Claim::Increase);
        prop_assert_eq!(cert.delta, op3_gain(k, g1.order()).unwrap());
    }

    #[test]
    fn middle_cycle_gain_is_positive(a in any::<u64>(), b in any::<u64>(), k in 4usize..9) {
        let (g1, x1) = part(a, 6);
        let (g2, x2) = part(b, 6);
        let cert = operation_iv(Anchored::new(&g1, x1), Anchored::new(&g2, x2), k).unwrap();
        prop_assert!(cert.consistent());
        prop_assert!(cert.delta > int(0));
        let gap = cert.quantity("transmission_gap").unwrap();
        prop_assert!(*gap >= op4_gain_lower_bound(k).unwrap());
        prop_assert!(cert.delta > gap * int(g2.order() as i64 - 1));
    }

    #[test]
    fn gadget_swap_gain_depends_only_on_orders(a in any::<u64>(), b in any::<u64>(), k in 4usize..9) {
        let (mut g1, mut x1) = part(a, 6);
        let (mut g2, mut x2) = part(b, 6);
        if g1.order() > g2.order() {
            std::mem::swap(&mut g1, &mut g2);
            std::mem::swap(&mut x1, &mut x2);
        }
        let cert = operation_v(Anchored::new(&g1, x1), Anchored::new(&g2, x2), k).unwrap();
        prop_assert!(cert.consistent());
        prop_assert_eq!(cert.delta, op5_gain(k, g1.order(), g2.order()).unwrap());
    }
}

#[test]
fn driver_trace_is_monotone_on_random_members() {
    let mut rng = seeded_rng(77);
    for _ in 0..15 {
        let n = rng.gen_range(7..=12);
        let t = rng.gen_range(2..=(n - 1) / 2);
        let g = random_cactus(n, t, &mut rng).unwrap();
        let run = canonicalize_to_extremal(&g).unwrap();
        assert!(run.reached_extremal);
        for step in &run.trace {
            assert!(step.claim_verified());
            assert!(step.delta > int(0));
        }
        for w in run.trace.windows(2) {
            assert_eq!(w[0].after, w[1].before);
        }
    }
}
