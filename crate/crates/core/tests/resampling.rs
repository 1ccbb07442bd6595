use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rdyn_core::coloring::{is_r_dynamic, Color, ListAssignment};
use rdyn_core::generate::{generate, GraphKind};
use rdyn_core::graph::Graph;
use rdyn_core::lll::{
    bad_event_holds, event_bounds, resample_until_clear, theorem1_pipeline, ResampleStatus, SublistState,
};

fn random_lists(rng: &mut ChaCha8Rng, n: usize, size: usize, universe: usize) -> ListAssignment {
    let lists = (0..n).map(|_| sample(rng, universe, size).into_iter().map(|c| c as Color + 1).collect()).collect();
    ListAssignment::new(lists).unwrap()
}

/// 8-regular bipartite, n = 32, l = 4, s = 3, r = 2 over 50 seeds.
#[test]
fn bipartite_regular_benchmark() {
    let (l, s, r) = (4, 3, 2);
    let size = l + s + r - 2;
    let mut clear = 0;
    let mut colored = 0;
    for seed in 0..50u64 {
        let g = generate(GraphKind::RandomBipartiteRegular { half: 16, d: 8 }, seed).unwrap();
        assert_eq!((g.n(), g.min_degree(), g.max_degree()), (32, 8, 8));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let lists = random_lists(&mut rng, g.n(), size, 2 * size);
        let state = SublistState::sample(lists.clone(), l, seed).unwrap();
        let (_, log) = resample_until_clear(&g, state, r, 1000).unwrap();
        clear += (log.status == ResampleStatus::Clear) as usize;

        let rep = theorem1_pipeline(&g, &lists, l, r, seed, Some(1000)).unwrap();
        if let Some(c) = rep.coloring() {
            assert!(is_r_dynamic(&g, c, r) && lists.admits(c));
            colored += 1;
        }
    }
    println!("clear within 1000 iterations: {clear}/50, colored: {colored}/50");
    assert!(clear >= 45, "clear on {clear}/50 seeds");
}

/// A fixed color of `L(u)` survives into `L'(u)` with probability `l / |L(u)|`.
#[test]
fn single_list_hit_rate_matches_formula() {
    let (l, s, r) = (3, 2, 2);
    let size = l + s + r - 2;
    let base = ListAssignment::new(vec![(1..=size as Color).collect()]).unwrap();
    let trials = 20_000;
    let hits = (0..trials)
        .filter(|&seed| SublistState::sample(base.clone(), l, seed).unwrap().sublists().contains(0, 1))
        .count();
    let observed = hits as f64 / trials as f64;
    let expected = event_bounds(1, 1, r, s, l).hit_one_list;
    assert!((expected - l as f64 / size as f64).abs() < 1e-12);
    assert!((observed - expected).abs() < 0.015, "observed {observed}, expected {expected}");
}

/// Observed frequency of the bad event at the center of a star stays under
/// the analytic bound.
#[test]
fn bad_event_frequency_below_bound() {
    let (l, s, r, d) = (4, 3, 2, 8);
    let size = l + s + r - 2;
    let g = Graph::new(d + 1, (1..=d).map(|i| (0, i))).unwrap();
    let bound = event_bounds(d, d, r, s, l).pr_a;
    assert!(bound < 1.0);
    for universe in [size, size + 2, 2 * size] {
        let mut rng = ChaCha8Rng::seed_from_u64(universe as u64);
        let lists = random_lists(&mut rng, d + 1, size, universe);
        let trials = 4000;
        let bad = (0..trials)
            .filter(|&seed| {
                let st = SublistState::sample(lists.clone(), l, seed).unwrap();
                bad_event_holds(&g, &st, 0, r).unwrap()
            })
            .count();
        let observed = bad as f64 / trials as f64;
        assert!(observed <= bound + 0.02, "universe {universe}: observed {observed}, bound {bound}");
    }
}
