// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

use mixcage::constructions::*;
use mixcage::girth::{mixed_girth_oracle, replacement_digraph};
use mixcage::iso::{are_isomorphic, is_isomorphism};
use mixcage::reproduce::random_mixed_graph;
use mixcage::{check_regularity, mixed_girth, MixedGraph};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_graph(max_n: usize) -> impl Strategy<Value = MixedGraph> {
    (1..=max_n, 0..3usize, 0..3usize, any::<u64>()).prop_map(|(n, pa, pe, seed)| {
        let probs = [0.1, 0.3, 0.5];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_mixed_graph(&mut rng, n, probs[pa], probs[pe])
    })
}

fn arb_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn girth(g: &MixedGraph) -> Option<usize> {
    mixed_girth(g).map(|w| w.len())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn engine_matches_oracle(g in arb_graph(10)) {
        let fast = mixed_girth(&g);
        let slow = mixed_girth_oracle(&g, g.order().max(2)).unwrap();
        if let Some(w) = &fast {
            prop_assert!(w.validate(&g).is_ok(), "{:?}", w);
        }
        if let Some(w) = &slow {
            prop_assert!(w.validate(&g).is_ok(), "{:?}", w);
        }
        prop_assert_eq!(fast.map(|w| w.len()), slow.map(|w| w.len()));
    }

    #[test]
    fn girth_is_label_invariant(
        (g, perm) in arb_graph(10).prop_flat_map(|g| {
            let n = g.order();
            (Just(g), arb_perm(n))
        })
    ) {
        let h = g.relabel(&perm);
        prop_assert_eq!(girth(&g), girth(&h));
        let m = are_isomorphic(&g, &h).unwrap();
        prop_assert!(m.is_some());
        prop_assert!(is_isomorphism(&g, &h, m.as_ref().unwrap()));
        let back = are_isomorphic(&h, &g).unwrap();
        prop_assert!(back.is_some());
        prop_assert!(is_isomorphism(&h, &g, back.as_ref().unwrap()));
    }

    #[test]
    fn replacement_arc_count(g in arb_graph(10)) {
        let rd = replacement_digraph(&g);
        prop_assert_eq!(rd.arcs().len(), 2 * g.edges().len() + g.arcs().len());
    }

    #[test]
    fn regularity_implies_counts(g in arb_graph(8), z in 0..3usize, r in 0..3usize) {
        if check_regularity(&g, z, r).is_regular {
            prop_assert_eq!(g.arcs().len(), g.order() * z);
            prop_assert_eq!(2 * g.edges().len(), g.order() * r);
        }
    }

    #[test]
    fn isomorphism_agrees_with_girth_and_counts(a in arb_graph(7), b in arb_graph(7)) {
        let ab = are_isomorphic(&a, &b).unwrap();
        let ba = are_isomorphic(&b, &a).unwrap();
        prop_assert_eq!(ab.is_some(), ba.is_some());
        if let Some(m) = ab {
            prop_assert!(is_isomorphism(&a, &b, &m));
            prop_assert_eq!(girth(&a), girth(&b));
        }
    }
}

#[test]
fn k44_replacement_counts() {
    let g = oriented_kbipartite(2, &[4]).unwrap();
    assert_eq!(replacement_digraph(&g).arcs().len(), 24);
}

#[test]
fn h28_girth_and_regularity() {
    let h = h28_graph();
    assert_eq!(girth(&h), Some(5));
    assert!(check_regularity(&h, 1, 3).is_regular);
    let bad = check_regularity(&h, 2, 3);
    assert!(!bad.is_regular);
    assert_eq!(bad.violations.len(), 28);
}

#[test]
fn named_oracle_examples() {
    let c13 = circulant_12g_odd(5).unwrap();
    assert_eq!(c13.order(), 13);
    assert_eq!(mixed_girth_oracle(&c13, 13).unwrap().unwrap().len(), 5);
    assert_eq!(girth(&c13), Some(5));
    let h6 = h_even(6).unwrap();
    assert_eq!(h6.order(), 18);
    assert_eq!(mixed_girth_oracle(&h6, 8).unwrap().unwrap().len(), 6);
}

#[test]
fn relabelled_witness_still_validates() {
    let g = circulant_z14(3).unwrap();
    let n = g.order();
    let perm: Vec<usize> = (0..n).map(|i| (5 * i + 3) % n).collect();
    let h = g.relabel(&perm);
    let w = mixed_girth(&h).unwrap();
    assert_eq!(w.len(), 4);
    w.validate(&h).unwrap();
}
