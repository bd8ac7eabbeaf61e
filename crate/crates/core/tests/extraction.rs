use unavoid_core::extract::{self, cds, Scope};
use unavoid_core::patterns::Pattern;
use unavoid_core::{Exec, Graph, PropertyKind, TheoremId, VertexSet};

fn cycle(n: usize) -> Graph {
    Graph::from_edge_list(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
}

fn biclique(a: usize, b: usize) -> Graph {
    Pattern::CompleteBipartite(a, b).build().unwrap()
}

#[test]
fn connected_ramsey_examples() {
    let r = extract::connected_unavoidable(&cycle(9), 4).unwrap().unwrap();
    assert_eq!(r.member, Pattern::Path(4));
    assert!(r.verify(&cycle(9)));

    let r = extract::connected_unavoidable(&Graph::complete(7), 5).unwrap().unwrap();
    assert_eq!(r.member, Pattern::Complete(5));

    let star = Pattern::Star(9).build().unwrap();
    let r = extract::connected_unavoidable(&star, 4).unwrap().unwrap();
    assert_eq!(r.member, Pattern::Star(4));
    assert!(r.verify(&star));

    let two = Graph::disjoint_union(&[Graph::complete(2), Graph::complete(2)]);
    assert!(extract::connected_unavoidable(&two, 3).is_err());
}

#[test]
fn b1_examples() {
    let g = biclique(2, 6);
    let r = extract::extract_b1_witness(&g, PropertyKind::Deg, 5, Scope::Connected).unwrap().unwrap();
    assert_eq!(r.member, Pattern::CompleteBipartite(2, 5));
    assert!(r.verify(&g));

    let p7 = Pattern::Path(7).build().unwrap();
    let r = extract::extract_b1_witness(&p7, PropertyKind::Sdeg, 3, Scope::Connected).unwrap().unwrap();
    assert_eq!(r.member, Pattern::Path(3));

    let r = extract::extract_b1_witness(&cycle(9), PropertyKind::Deg, 4, Scope::Connected).unwrap().unwrap();
    assert_eq!(r.member, Pattern::Path(4));
    assert!(r.verify(&cycle(9)));
}

#[test]
fn b3_examples() {
    let r = extract::extract_b3_witness(&Graph::complete(7), PropertyKind::Deg, 3).unwrap().unwrap();
    assert_eq!(r.member, Pattern::Complete(3));

    let stars = Graph::disjoint_union(&vec![Pattern::Star(5).build().unwrap(); 5]);
    let r = extract::extract_b3_witness(&stars, PropertyKind::Sdeg, 3).unwrap().unwrap();
    assert_eq!(r.member.to_string(), "3K_{1,3}");
    assert!(r.verify(&stars));

    let g = biclique(4, 4);
    let r = extract::extract_b3_witness(&g, PropertyKind::AlphaL, 3).unwrap().unwrap();
    assert_eq!(r.member, Pattern::CompleteBipartite(3, 3));
    assert!(r.verify(&g));
}

#[test]
fn none_means_free() {
    // Every member at n = 6 has at least 6 vertices.
    let c5 = cycle(5);
    for t in TheoremId::ALL {
        let got = extract::extract_for_theorem(&c5, t, 6, Exec::Sequential).unwrap();
        assert!(got.is_none(), "{t} found {:?} in C_5 at n=6", got.map(|r| r.member));
    }
}

#[test]
fn cds_examples() {
    let star = Pattern::Star(5).build().unwrap();
    let s = cds::min_connected_dominating_set(&star).unwrap();
    assert_eq!(s.to_vec(), vec![0]);

    let c6 = cycle(6);
    let s = cds::min_connected_dominating_set(&c6).unwrap();
    assert_eq!(s.len(), 4);
    // No 3-subset of C_6 is connected and dominating.
    let any3 = (0..6).any(|a| {
        (a + 1..6).any(|b| (b + 1..6).any(|c| cds::is_connected_dominating(&c6, &VertexSet::from_slice(6, &[a, b, c]))))
    });
    assert!(!any3);

    let p5 = Pattern::Path(5).build().unwrap();
    assert_eq!(cds::cut_vertices(&p5).to_vec(), vec![1, 2, 3]);
}
