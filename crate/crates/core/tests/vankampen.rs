use cycword::identities::ConjugateProduct;
use cycword::vankampen::{
    bouquet, cyc_product, fold_all, shift_base, Diagram, FoldOrder, VkError,
};
use cycword::word_core::{concat_all, inverse, reduce, w, Word};
use proptest::prelude::*;

fn worked_example() -> ConjugateProduct {
    ConjugateProduct::from_pairs(&[
        (&w("x1 x2"), &w("x3")),
        (&w("x1 x4"), &w("x5 x6")),
        (&w("x1 x4"), &w("x6^-1 x7")),
    ])
}

fn two_orders() -> Diagram {
    bouquet(&ConjugateProduct::from_pairs(&[
        (&w("1"), &w("x y")),
        (&w("1"), &w("y^-1 x^-1")),
        (&w("1"), &w("x z")),
    ]))
}

#[test]
fn bouquet_reads_unreduced_concatenation() {
    let p = worked_example();
    let d = bouquet(&p);
    let expected = concat_all(&p.terms.iter().map(|t| t.expand()).collect::<Vec<_>>().iter().collect::<Vec<_>>());
    assert_eq!(d.boundary_label(), expected);
    assert_eq!(d.faces.len(), 3);
    assert_eq!(d.edges.iter().filter(|e| e.spine).count(), 6);
    d.check().unwrap();
}

#[test]
fn bouquet_single_and_empty() {
    let d = bouquet(&ConjugateProduct::from_pairs(&[(&w("1"), &w("x"))]));
    assert_eq!(d.boundary_label(), w("x"));
    assert_eq!(d.faces.len(), 1);
    let e = bouquet(&ConjugateProduct::default());
    assert_eq!(e.vertices.len(), 1);
    assert!(e.boundary_cycle.is_empty());
}

#[test]
fn worked_example_folds_to_three_faces() {
    let (d, steps) = fold_all(&bouquet(&worked_example()), &FoldOrder::Canonical).unwrap();
    assert_eq!(d.boundary_label(), w("x1 x2 x3 x2^-1 x4 x5 x7 x4^-1 x1^-1"));
    assert_eq!(d.faces.len(), 3);
    assert!(steps.iter().all(|s| s.discarded_faces.is_empty()));
    d.check().unwrap();
    let golden = include_str!("golden/worked_example.dot");
    assert_eq!(d.to_dot(), golden);
}

#[test]
fn fold_orders_give_different_face_counts() {
    let b = two_orders();
    assert_eq!(b.boundary_label(), w("x y y^-1 x^-1 x z"));
    let (one, steps) = fold_all(&b, &FoldOrder::Explicit(vec![1, 0])).unwrap();
    assert_eq!(one.faces.len(), 1);
    assert_eq!(steps[1].discarded_faces, vec![0, 1]);
    let (three, _) = fold_all(&b, &FoldOrder::Explicit(vec![1, 1])).unwrap();
    assert_eq!(three.faces.len(), 3);
    assert_eq!(one.boundary_label(), w("x z"));
    assert_eq!(three.boundary_label(), w("x z"));
    one.check().unwrap();
    three.check().unwrap();
}

#[test]
fn invalid_orders_rejected() {
    let b = two_orders();
    assert!(matches!(
        fold_all(&b, &FoldOrder::Explicit(vec![0])),
        Err(VkError::InvalidCancellationSequence { step: 0, .. })
    ));
    assert!(matches!(
        fold_all(&b, &FoldOrder::Explicit(vec![1])),
        Err(VkError::InvalidCancellationSequence { step: 1, .. })
    ));
}

#[test]
fn reduced_boundary_needs_no_steps() {
    let d = Diagram::relator(&w("x y"));
    let (e, steps) = fold_all(&d, &FoldOrder::Canonical).unwrap();
    assert!(steps.is_empty());
    assert_eq!(d, e);
}

#[test]
fn three_face_sphere_is_discarded() {
    let b = bouquet(&ConjugateProduct::from_pairs(&[
        (&w("1"), &w("x y")),
        (&w("1"), &w("y^-1 z")),
        (&w("1"), &w("z^-1 x^-1")),
    ]));
    let (d, steps) = fold_all(&b, &FoldOrder::Canonical).unwrap();
    assert!(d.faces.is_empty());
    assert_eq!(steps.last().unwrap().discarded_faces, vec![0, 1, 2]);
    assert_eq!(d.vertices.len(), 1);
}

#[test]
fn shift_base_rotates_boundary() {
    let sq = Diagram::relator(&w("a b c d"));
    assert_eq!(shift_base(&sq, 1).unwrap().boundary_label(), w("b c d a"));
    assert_eq!(shift_base(&sq, 0).unwrap(), sq);
    assert_eq!(shift_base(&sq, 4).unwrap(), sq);
    shift_base(&sq, 3).unwrap().check().unwrap();
    let spined = bouquet(&ConjugateProduct::from_pairs(&[(&w("t"), &w("a"))]));
    assert_eq!(shift_base(&spined, 1), Err(VkError::HasSpines));
    let uncyc = Diagram::relator(&w("a b a^-1"));
    assert!(matches!(shift_base(&uncyc, 1), Err(VkError::NotCyclicallyReducedBoundary(_))));
}

#[test]
fn dot_listing() {
    let d = Diagram::relator(&w("x"));
    assert_eq!(
        d.to_dot(),
        "digraph vk {\n  v0 [base=\"true\", shape=doublecircle];\n  v0 -> v0 [label=\"x\", face=\"0\", spine=\"false\"];\n}\n"
    );
    assert_eq!(Diagram::empty().to_dot(), "digraph vk {\n  v0 [base=\"true\", shape=doublecircle];\n}\n");
}

#[test]
fn json_round_trip() {
    let (d, _) = fold_all(&bouquet(&worked_example()), &FoldOrder::Canonical).unwrap();
    let text = serde_json::to_string(&d).unwrap();
    let back: Diagram = serde_json::from_str(&text).unwrap();
    assert_eq!(back, d);
}

#[test]
fn associativity_diagrams_share_internal_y_edge() {
    let (u, v, ww) = (Diagram::relator(&w("t x")), Diagram::relator(&w("x^-1 y")), Diagram::relator(&w("y^-1 x z")));
    let left = cyc_product(&cyc_product(&u, &v), &ww);
    let right = cyc_product(&u, &cyc_product(&v, &ww));
    assert_eq!(left.boundary_label(), w("t x z"));
    assert_eq!(right.boundary_label(), w("t x z"));
    let y = w("y").letters()[0];
    assert!(left.internal_edge_labels().contains(&y));
    assert!(right.internal_edge_labels().contains(&y));
    assert_eq!(left.faces.len(), right.faces.len());
    assert!(left.is_disk());
    assert!(!right.is_disk());
    left.check().unwrap();
    right.check().unwrap();
}

fn letter_word(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..3usize, any::<bool>()), 0..=max).prop_map(|ls| {
        let names = ["x", "y", "z"];
        let text: Vec<String> =
            ls.iter().map(|(i, pos)| if *pos { names[*i].to_string() } else { format!("{}^-1", names[*i]) }).collect();
        if text.is_empty() {
            Word::empty()
        } else {
            w(&text.join(" "))
        }
    })
}

fn product() -> impl Strategy<Value = ConjugateProduct> {
    prop::collection::vec((letter_word(3), letter_word(4).prop_map(|r| reduce(&r))), 0..4).prop_map(|ts| {
        ConjugateProduct::from_pairs(&ts.iter().map(|(a, r)| (a, r)).collect::<Vec<_>>())
    })
}

/// Applies a random valid order, returning the positions and the pairs of
/// original letter indices that cancel.
fn random_order(word: &Word, picks: &[usize]) -> (Vec<usize>, Vec<(usize, usize)>) {
    let mut cur: Vec<(usize, cycword::Letter)> = word.letters().iter().copied().enumerate().collect();
    let mut positions = Vec::new();
    let mut pairs = Vec::new();
    let mut i = 0;
    loop {
        let spots: Vec<usize> = (0..cur.len().saturating_sub(1)).filter(|&k| cur[k].1.cancels(cur[k + 1].1)).collect();
        if spots.is_empty() {
            break;
        }
        let k = spots[picks.get(i).copied().unwrap_or(0) % spots.len()];
        i += 1;
        positions.push(k);
        pairs.push((cur[k].0, cur[k + 1].0));
        cur.drain(k..k + 2);
    }
    pairs.sort_unstable();
    (positions, pairs)
}

proptest! {
    #[test]
    fn any_valid_order_reduces_boundary(p in product(), picks in prop::collection::vec(0usize..8, 0..40)) {
        let b = bouquet(&p);
        let label = b.boundary_label();
        let (positions, _) = random_order(&label, &picks);
        let (d, steps) = fold_all(&b, &FoldOrder::Explicit(positions)).unwrap();
        prop_assert_eq!(d.boundary_label(), reduce(&label));
        prop_assert!(d.check().is_ok(), "{:?}", d.check());
        let mut chi = b.euler_characteristic();
        let mut faces = b.faces.len();
        for s in &steps {
            if s.discarded_faces.is_empty() {
                prop_assert_eq!(s.euler, chi);
            }
            faces -= s.discarded_faces.len();
            chi = s.euler;
        }
        prop_assert_eq!(faces, d.faces.len());
    }

    #[test]
    fn same_cancellations_same_identifications(
        p in product(),
        a in prop::collection::vec(0usize..8, 0..40),
        b in prop::collection::vec(0usize..8, 0..40),
    ) {
        let bq = bouquet(&p);
        let label = bq.boundary_label();
        let (pa, ca) = random_order(&label, &a);
        let (pb, cb) = random_order(&label, &b);
        prop_assume!(ca == cb);
        let (da, _) = fold_all(&bq, &FoldOrder::Explicit(pa)).unwrap();
        let (db, _) = fold_all(&bq, &FoldOrder::Explicit(pb)).unwrap();
        prop_assert_eq!(da.edge_classes(), db.edge_classes());
        prop_assert_eq!(da.faces.len(), db.faces.len());
    }

    #[test]
    fn cyclic_product_diagram_reads_cyclic_product(r in letter_word(5), s in letter_word(5)) {
        let (r, s) = (cycword::word_core::cyc_reduced(&r), cycword::word_core::cyc_reduced(&s));
        let d = cyc_product(&Diagram::relator(&r), &Diagram::relator(&s));
        prop_assert_eq!(d.boundary_label(), cycword::word_core::cyc_product(&r, &s));
        prop_assert!(d.check().is_ok());
    }

    #[test]
    fn conjugation_by_inverse_boundary(r in letter_word(5), c in letter_word(4)) {
        let c = reduce(&c);
        let d = cycword::vankampen::conjugate(&Diagram::relator(&r), &c);
        prop_assert_eq!(d.boundary_label(), reduce(&concat_all(&[&c, &r, &inverse(&c)])));
    }
}
