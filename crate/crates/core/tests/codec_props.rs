use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use hypertree_core::{
    decode, decode_bipartite, encode, encode_bipartite, BipartiteCode, BipartiteTree, Hypertree,
    HypertreeCode,
};

/// An arbitrary code: block labels for 1..=n, and enough letters for any k.
fn any_code(max_n: usize) -> impl Strategy<Value = HypertreeCode> {
    (1..=max_n)
        .prop_flat_map(|n| {
            (
                Just(n),
                prop::collection::vec(0..n, n),
                prop::collection::vec(0..=n, n),
            )
        })
        .prop_map(|(n, labels, letters)| {
            let mut blocks = vec![Vec::new(); n];
            for (x, &l) in (1..=n).zip(&labels) {
                blocks[l].push(x);
            }
            blocks.retain(|b| !b.is_empty());
            let k = blocks.len();
            HypertreeCode::from_parts(n, blocks, letters[..k - 1].to_vec()).unwrap()
        })
}

fn any_bipartite_code(max: usize) -> impl Strategy<Value = BipartiteCode> {
    (0..=max, 0..=max)
        .prop_flat_map(|(a, b)| {
            (
                Just(a),
                Just(b),
                prop::collection::vec(0..=b, a),
                prop::collection::vec(0..=a, b),
            )
        })
        .prop_map(|(a, b, w, wp)| BipartiteCode::new(a, b, w, wp).unwrap())
}

/// Relabels vertices 0..=n by a seeded permutation, so trees reach the
/// encoder in shapes that did not come straight out of the decoder.
fn relabel(t: &Hypertree, seed: u64) -> Hypertree {
    let mut perm: Vec<usize> = (0..=t.n()).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let edges = t
        .graph()
        .edge_lists()
        .into_iter()
        .map(|e| e.into_iter().map(|v| perm[v]).collect())
        .collect();
    Hypertree::new(t.n(), edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn every_code_decodes_to_a_tree_and_back(code in any_code(60)) {
        let t = decode(&code).unwrap();
        // Independent re-validation of the decoder's output.
        let t = Hypertree::new(t.n(), t.graph().edge_lists()).unwrap();
        prop_assert_eq!(t.k(), code.k());
        prop_assert_eq!(encode(&t).unwrap(), code.clone());

        let (lambda, mu) = t.profile();
        prop_assert_eq!(lambda, code.partition().shape());
        prop_assert_eq!(mu.as_slice().to_vec(), code.word().multiplicities(code.n() + 1));
    }

    #[test]
    fn encoding_relabelled_trees_round_trips(code in any_code(40), seed in any::<u64>()) {
        let t = relabel(&decode(&code).unwrap(), seed);
        let c = encode(&t).unwrap();
        prop_assert_eq!(decode(&c).unwrap(), t.clone());
        // The partition is what is left after deleting each edge's mark.
        let marks = t.marks().unwrap();
        let mut rest: Vec<Vec<usize>> = t
            .edges()
            .iter()
            .zip(&marks)
            .map(|(e, &m)| e.vertices().iter().copied().filter(|&v| v != m).collect())
            .collect();
        rest.sort();
        prop_assert_eq!(c.partition().blocks(), rest.as_slice());
    }

    #[test]
    fn bipartite_codes_round_trip(code in any_bipartite_code(25)) {
        let t = decode_bipartite(&code).unwrap();
        let t = BipartiteTree::new(t.a(), t.b(), t.edges().to_vec()).unwrap();
        prop_assert_eq!(encode_bipartite(&t), code.clone());

        let (alpha, beta) = t.degree_profile();
        let count = |w: &[usize], len: usize| {
            let mut m = vec![0; len];
            for &x in w { m[x] += 1; }
            m
        };
        prop_assert_eq!(alpha, count(code.wprime(), code.a() + 1));
        prop_assert_eq!(beta, count(code.w(), code.b() + 1));
    }
}
