use proptest::prelude::*;
use unavoid_core::canon::canonical_key;
use unavoid_core::detect::{self, Freeness};
use unavoid_core::extract::{self, matching, Scope};
use unavoid_core::params::{self, PropertyKind};
use unavoid_core::{graph6, Exec, FamilySpec, Graph, TheoremId, VertexSet};

fn graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (1..=max_order).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges: Vec<(usize, usize)> = (1..n)
                .flat_map(|j| (0..j).map(move |i| (i, j)))
                .zip(bits)
                .filter_map(|(e, b)| b.then_some(e))
                .collect();
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

fn graph_and_perm(max_order: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_order).prop_flat_map(|g| {
        let perm = Just((0..g.order()).collect::<Vec<_>>()).prop_shuffle();
        (Just(g), perm)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in graph(40)) {
        let s = graph6::encode(&g).unwrap();
        prop_assert_eq!(graph6::decode(&s).unwrap(), g);
    }

    #[test]
    fn local_chain(g in graph(14)) {
        for p in params::all_profiles(&g) {
            prop_assert!(p.deg >= p.alpha_l && p.alpha_l >= p.c_l && p.c_l >= p.sdeg, "{:?}", p);
        }
    }

    #[test]
    fn p_k_monotone_in_k(g in graph(14)) {
        for prop in PropertyKind::ALL {
            let counts: Vec<usize> = (0..=g.order()).map(|k| params::p_k_count(&g, prop, k)).collect();
            prop_assert!(counts.windows(2).all(|w| w[0] >= w[1]));
            let h = params::h_index(&g, prop);
            prop_assert!(params::p_k_count(&g, prop, h) >= h);
            prop_assert!(params::p_k_count(&g, prop, h + 1) < h + 1);
        }
    }

    #[test]
    fn canonical_key_ignores_labels((g, perm) in graph_and_perm(10)) {
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(canonical_key(&g).unwrap(), canonical_key(&h).unwrap());
    }

    #[test]
    fn parameters_ignore_labels((g, perm) in graph_and_perm(12)) {
        let h = g.relabel(&perm).unwrap();
        let a = params::all_profiles(&g);
        let b = params::all_profiles(&h);
        for v in 0..g.order() {
            prop_assert_eq!(a[v], b[perm[v]]);
        }
    }

    #[test]
    fn greedy_matching_is_induced(g in graph(16), split in 1usize..15) {
        let n = g.order();
        let split = split.min(n);
        let x = VertexSet::from_slice(n, &(0..split).collect::<Vec<_>>());
        let y = VertexSet::from_slice(n, &(split..n).collect::<Vec<_>>());
        let cap = y.iter().map(|v| g.neighbors(v).intersection_len(&x)).max().unwrap_or(0);
        let covered = x.iter().all(|v| g.neighbors(v).intersection_len(&y) > 0);
        if covered && cap > 0 {
            let m = matching::greedy_induced_matching(&g, &x, &y, cap).unwrap();
            prop_assert!(matching::is_induced_matching(&g, &m));
            prop_assert!(m.len() <= matching::max_induced_matching(&g, &x, &y));
            prop_assert!(m.len() >= x.len().div_ceil(cap));
        }
    }

    #[test]
    fn detection_agrees_across_exec(g in graph(12), t in 0usize..12) {
        let theorem = TheoremId::ALL[t];
        let spec = FamilySpec::new(theorem, 3).unwrap();
        let a = detect::is_hfree_with(&g, &spec, Exec::Sequential);
        let b = detect::is_hfree_with(&g, &spec, Exec::Parallel);
        prop_assert_eq!(&a, &b);
        if let Freeness::Witness { member, embedding, .. } = a {
            prop_assert!(detect::verify_embedding(&g, &member.build().unwrap(), &embedding.map));
        }
    }

    #[test]
    fn general_extraction_sound(g in graph(12), p in 0usize..4) {
        let prop = PropertyKind::ALL[p];
        let spec = FamilySpec::new(TheoremId::for_tier(unavoid_core::patterns::Tier::B2, prop), 3).unwrap();
        let free = detect::is_hfree(&g, &spec).is_free();
        match extract::extract_b1_witness(&g, prop, 3, Scope::General).unwrap() {
            Some(r) => {
                prop_assert!(r.verify(&g));
                prop_assert!(!free);
            }
            None => prop_assert!(free),
        }
    }
}
