use std::path::PathBuf;

use itg::formats::{parse_edge_lists, parse_graph6, to_edge_list, to_graph6};
use itg_core::families::{complete, cycle, path};
use itg_core::iso::isomorphic;
use itg_core::named::{petersen, rook, shrikhande};
use itg_core::verify::connected_graphs_up_to;
use itg_core::Graph;
use proptest::prelude::*;

/// Strings written by networkx 3.4 `to_graph6_bytes`.
#[test]
fn reference_encodings() {
    assert_eq!(to_graph6(&petersen()).unwrap(), "IheA@GUAo");
    assert_eq!(to_graph6(&cycle(5).unwrap()).unwrap(), "Dhc");
    assert!(to_graph6(&path(70).unwrap())
        .unwrap()
        .starts_with("~?@EhCGG"));
    assert_eq!(parse_graph6("IheA@GUAo").unwrap(), petersen());
    assert_eq!(to_graph6(&complete(2).unwrap()).unwrap(), "A_");
}

#[test]
fn corpus_round_trip() {
    for g in connected_graphs_up_to(7).unwrap() {
        assert_eq!(parse_graph6(&to_graph6(&g).unwrap()).unwrap(), g);
        assert_eq!(parse_edge_lists(&to_edge_list(&g)).unwrap(), vec![g]);
    }
}

#[test]
fn shipped_seed_pair() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/cospectral");
    let a = itg::formats::read_graphs(&dir.join("shrikhande.g6")).unwrap();
    let b = itg::formats::read_graphs(&dir.join("rook44.g6")).unwrap();
    assert!(isomorphic(&a[0], &shrikhande()));
    assert!(isomorphic(&b[0], &rook(4, 4)));
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(80)) {
        let s = to_graph6(&g).unwrap();
        prop_assert!(s.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph(20)) {
        prop_assert_eq!(parse_edge_lists(&to_edge_list(&g)).unwrap(), vec![g]);
    }

    #[test]
    fn corrupt_bytes_are_rejected(g in arb_graph(12), pos in any::<prop::sample::Index>(), b in 0u8..63) {
        let mut s = to_graph6(&g).unwrap().into_bytes();
        let i = pos.index(s.len());
        s[i] = b;
        let text = String::from_utf8_lossy(&s).into_owned();
        prop_assert!(parse_graph6(&text).is_err());
    }
}
