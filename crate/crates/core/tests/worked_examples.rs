mod common;

use common::*;
use tamari_core::catalan::all_trees;
use tamari_core::involution::left_branch_on_interval;
use tamari_core::mtamari::{ballot_bounds, MGraftingTree};
use tamari_core::stats::{contact_vector, rise_vector};
use tamari_core::*;

fn multiset(v: &[usize]) -> ExponentMultiset {
    ExponentMultiset::from_values(v)
}

#[test]
fn five_vertex_example_closes_and_splits() {
    let p = IntervalPoset::from_relations(5, [(2, 1), (1, 3), (4, 3), (5, 3)]).unwrap();
    assert!(p.lt(2, 3));
    assert_eq!(p.relation_count(), 5);
    assert_eq!(inc_edges(&p), vec![(1, 3), (2, 3)]);
    assert_eq!(dec_edges(&p), vec![(2, 1), (4, 3), (5, 3)]);
}

#[test]
fn axiom_violation_is_reported() {
    let err = IntervalPoset::from_relations(3, [(1, 2), (1, 3)]).unwrap_err();
    assert_eq!(err, Error::TamariAxiomViolated(1, 2, 3));
}

#[test]
fn ten_vertex_forest_vectors() {
    let p = ten_vertex();
    assert_eq!(p.dc_vector(), vec![3, 0, 2, 0, 0, 4, 0, 0, 1, 0]);
    assert_eq!(p.ic_vector(), vec![4, 2, 0, 0, 1, 0, 2, 1, 0, 0]);
    assert_eq!(p.decreasing_roots(), vec![1, 2, 5]);
    assert_eq!(p.increasing_roots(), vec![1, 5, 7, 10]);
}

#[test]
fn ten_vertex_inversions() {
    let p = ten_vertex();
    assert_eq!(p.tamari_inversions(), vec![(1, 2), (1, 5), (7, 8), (7, 10)]);
    assert_eq!(p.distance(), 4);
}

#[test]
fn ten_vertex_from_tree_pair() {
    let t1: BinaryTree = "()(()())(()()(())())".parse().unwrap();
    let t2: BinaryTree = "((()())(()((())())))".parse().unwrap();
    assert_eq!(t1.root(), Some(5));
    assert_eq!(t2.root(), Some(1));
    assert_eq!(interval_from_bounds(&t1, &t2).unwrap(), ten_vertex());
    assert_eq!(bounds_from_interval(&ten_vertex()), (t1, t2));
}

#[test]
fn ten_vertex_path_forests_and_tree() {
    let d: DyckPath = "11011000110110110000".parse().unwrap();
    let fin = d.final_forest().edges();
    let want = vec![(2, 1), (3, 1), (4, 3), (6, 5), (7, 5), (8, 7), (9, 7), (10, 9)];
    assert_eq!(fin, want);
    let init = d.initial_forest().edges();
    assert_eq!(init, vec![(1, 5), (2, 3), (3, 5), (4, 5), (6, 7), (8, 9)]);
    let t = d.to_tree();
    assert_eq!(t.final_forest(), d.final_forest());
    assert_eq!(t.initial_forest(), d.initial_forest());
    // 5(1(∅, 3(2, 4)), 7(6, 9(8, 10)))
    assert_eq!(t.root(), Some(5));
    assert_eq!((t.left(5), t.right(5)), (Some(1), Some(7)));
    assert_eq!((t.left(1), t.right(1)), (None, Some(3)));
    assert_eq!((t.left(3), t.right(3)), (Some(2), Some(4)));
    assert_eq!((t.left(7), t.right(7)), (Some(6), Some(9)));
    assert_eq!((t.left(9), t.right(9)), (Some(8), Some(10)));
    assert_eq!(t.to_dyck(), d);
}

#[test]
fn seven_node_tree_from_path() {
    let d: DyckPath = "11001011011000".parse().unwrap();
    let t = d.to_tree();
    // root(N(N(∅, •), ∅), •(•, •)) with in-order labels
    assert_eq!(t.root(), Some(4));
    assert_eq!((t.left(4), t.right(4)), (Some(3), Some(6)));
    assert_eq!((t.left(3), t.right(3)), (Some(1), None));
    assert_eq!((t.left(1), t.right(1)), (None, Some(2)));
    assert_eq!((t.left(6), t.right(6)), (Some(5), Some(7)));
}

#[test]
fn path_contacts_and_rises() {
    let d: DyckPath = "11011000110110110000".parse().unwrap();
    let c = contact_vector(&d);
    let r = rise_vector(&d);
    assert_eq!(c, vec![2, 2, 0, 1, 0, 2, 0, 2, 0, 1]);
    assert_eq!(r, vec![2, 2, 0, 0, 2, 2, 2, 0, 0, 0]);
    assert_eq!(multiset(&c).monomial("x"), "x0^4 x1^2 x2^4");
    assert_eq!(multiset(&r).monomial("y"), "y0^5 y2^5");
}

#[test]
fn left_graft_example() {
    let (a, b) = (small_left(), small_right());
    let g = a.left_graft(&b);
    assert_eq!(inc_edges(&g), vec![(1, 4), (2, 3), (3, 4)]);
    assert_eq!(dec_edges(&g), vec![(2, 1), (6, 5)]);
    let s = interval_stats(&g);
    assert_eq!(s.contacts, vec![4, 1, 0, 0, 0, 1]);
    assert_eq!(g.ic_vector(), vec![3, 0, 0, 2, 1, 0]);
    assert_eq!(s.rises, vec![2, 1, 0, 3, 0, 0]);
    assert_eq!(a.tamari_inversions(), vec![(1, 3)]);
    assert_eq!(b.tamari_inversions(), vec![(1, 2)]);
    assert_eq!(g.distance(), a.distance() + b.distance());
    assert_eq!(interval_stats(&a).contacts, vec![2, 1, 0]);
    assert_eq!(interval_stats(&a).rises, vec![2, 1, 0]);
    assert_eq!(interval_stats(&b).contacts, vec![2, 0, 1]);
    assert_eq!(interval_stats(&b).rises, vec![3, 0, 0]);
    assert_eq!(b.ic_vector(), vec![3, 0, 0]);
}

#[test]
fn right_graft_examples() {
    let (a, b) = (small_left(), small_right());
    let decs = [
        vec![(2, 1), (6, 5)],
        vec![(2, 1), (4, 3), (6, 5)],
        vec![(2, 1), (4, 3), (5, 3), (6, 5)],
    ];
    let contacts = [
        vec![4, 1, 0, 0, 0, 1],
        vec![3, 1, 0, 1, 0, 1],
        vec![2, 1, 0, 2, 0, 1],
    ];
    for r in 0..3 {
        let g = a.right_graft(r, &b).unwrap();
        assert_eq!(inc_edges(&g), vec![(2, 3)]);
        assert_eq!(dec_edges(&g), decs[r]);
        assert_eq!(g.dc_vector(), contacts[r]);
        assert_eq!(interval_stats(&g).contacts, contacts[r]);
        assert_eq!(g.ic_vector(), vec![5, 0, 0, 0, 1, 0]);
    }
    assert_eq!(
        a.right_graft(3, &b).unwrap_err(),
        Error::RParameterOutOfRange { r: 3, roots: 2 }
    );
}

#[test]
fn single_vertex_right_graft() {
    let a = small_left();
    let g = IntervalPoset::antichain(1).right_graft(1, &a).unwrap();
    assert_eq!(inc_edges(&g), vec![(3, 4)]);
    assert_eq!(dec_edges(&g), vec![(2, 1), (3, 2)]);
    assert_eq!(interval_stats(&g).rises, vec![3, 1, 0, 0]);
    assert_eq!(g.tamari_inversions(), vec![(1, 4), (2, 4)]);
    assert_eq!(g.distance(), a.distance() + interval_stats(&a).contact_count() - 1);
}

#[test]
fn eight_vertex_decomposition() {
    let p = eight_vertex();
    let (l, r, rt) = p.grafting_decomposition().unwrap();
    assert_eq!(l, poset(3, &[(1, 2)], &[(3, 2)]));
    assert_eq!(r, 2);
    assert_eq!(rt, poset(4, &[(2, 3)], &[(4, 3)]));
    let u = IntervalPoset::antichain(1).right_graft(r, &rt).unwrap();
    assert_eq!(l.left_graft(&u), p);
}

#[test]
fn eight_vertex_grafting_tree() {
    let p = eight_vertex();
    let g = GraftingTree::from_interval(&p);
    // 4(2(1, 3), 5(∅, 7(6, 8)))
    let t = g.tree();
    assert_eq!(t.root(), Some(4));
    assert_eq!((t.left(4), t.right(4)), (Some(2), Some(5)));
    assert_eq!((t.left(2), t.right(2)), (Some(1), Some(3)));
    assert_eq!((t.left(5), t.right(5)), (None, Some(7)));
    assert_eq!((t.left(7), t.right(7)), (Some(6), Some(8)));
    assert_eq!(g.labels(), &[0, 1, 0, 2, 0, 0, 1, 0]);
    assert_eq!(g.contacts(), 4);
    assert_eq!(g.distance(), 3);
    assert_eq!(g.node_distances(), vec![0, 0, 0, 1, 2, 0, 0, 0]);
    assert_eq!(p.tamari_inversions(), vec![(4, 7), (5, 6), (5, 7)]);
    assert_eq!(GraftingTree::from_interval_recursive(&p), g);
    assert_eq!(g.to_interval(), p);
}

#[test]
fn eight_vertex_stats_and_bounds() {
    let p = eight_vertex();
    let (lo, hi) = dyck_bounds(&p);
    assert_eq!(lo.to_string(), "1011001101001100");
    assert_eq!(hi.to_string(), "1011001110110000");
    let s = interval_stats(&p);
    assert_eq!(s.contacts, vec![4, 0, 1, 0, 2, 0, 0, 1]);
    assert_eq!(s.rises, vec![1, 2, 0, 3, 2, 0, 0, 0]);
    assert_eq!(s.contacts_p.monomial("x"), "x0^4 x1^2 x2 x4");
    assert_eq!(s.rises_p.monomial("y"), "y0^4 y1 y2^2 y3");
    assert_eq!(s.distance, 3);
}

#[test]
fn left_branch_on_eight_vertex() {
    let g = GraftingTree::from_interval(&eight_vertex());
    let h = left_branch_involution(&g);
    assert_eq!(h.labels(), &[2, 0, 1, 0, 0, 1, 0, 0]);
    let t = h.tree();
    assert_eq!(t.root(), Some(8));
    assert_eq!((t.left(8), t.right(8)), (Some(6), None));
    assert_eq!((t.left(6), t.right(6)), (Some(1), Some(7)));
    assert_eq!((t.left(1), t.right(1)), (None, Some(2)));
    assert_eq!((t.left(2), t.right(2)), (None, Some(5)));
    assert_eq!((t.left(5), t.right(5)), (Some(3), None));
    assert_eq!((t.left(3), t.right(3)), (None, Some(4)));
    let q = h.to_interval();
    assert_eq!(q, left_branch_on_interval(&eight_vertex()));
    assert_eq!(inc_edges(&q), vec![(1, 6), (2, 6), (3, 5), (4, 5), (5, 6), (6, 8), (7, 8)]);
    assert_eq!(dec_edges(&q), vec![(2, 1), (3, 1), (4, 3), (7, 6)]);
}

#[test]
fn complement_of_left_branch_image() {
    let q = left_branch_on_interval(&eight_vertex());
    let c = q.complement();
    assert_eq!(inc_edges(&c), vec![(2, 3), (5, 6), (6, 8), (7, 8)]);
    assert_eq!(
        dec_edges(&c),
        vec![(2, 1), (3, 1), (4, 3), (5, 4), (6, 4), (7, 3), (8, 3)]
    );
    assert_eq!(q.tamari_inversions(), vec![(1, 5), (2, 3), (2, 5)]);
    assert_eq!(c.tamari_inversions(), vec![(4, 7), (4, 8), (6, 7)]);
}

#[test]
fn rise_contact_on_eight_vertex() {
    let j = rise_contact(&eight_vertex());
    assert_eq!(j, eight_vertex_image());
    let (lo, hi) = dyck_bounds(&j);
    assert_eq!(lo.to_string(), "1111010010100100");
    assert_eq!(hi.to_string(), "1111011001000100");
    let s = interval_stats(&j);
    assert_eq!(s.contacts, vec![1, 2, 3, 2, 0, 0, 0, 0]);
    assert_eq!(s.rises, vec![4, 2, 0, 1, 0, 0, 1, 0]);
    assert_eq!(s.contacts_p.monomial("x"), "x0^4 x1 x2^2 x3");
    assert_eq!(s.rises_p.monomial("y"), "y0^4 y1^2 y2 y4");
    assert_eq!(s.distance, 3);
    assert_eq!(rise_contact(&j), eight_vertex());
}

#[test]
fn ballot_path_statistics() {
    let b = BallotPath::parse(2, "101011000011001000000100").unwrap();
    assert_eq!(b.area_vector(), vec![0, 1, 2, 4, 2, 4, 4, 0]);
    let mut lambda = b.area_partition();
    lambda.sort_unstable_by(|x, y| y.cmp(x));
    assert_eq!(lambda, vec![2, 2, 2, 1, 1]);
    let d = b.to_mdyck();
    assert_eq!(contact_vector(&d), vec![2, 2, 0, 3, 0, 1, 1, 1, 0, 1, 2, 1, 0, 1, 0, 1]);
    assert_eq!(rise_vector(&d), vec![2, 2, 4, 0, 0, 0, 4, 0, 2, 0, 0, 0, 0, 0, 2, 0]);
    let c = b.contact_vector();
    assert_eq!(c, vec![2, 1, 0, 2, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 0, 0]);
    assert_eq!(multiset(&c).monomial("x"), "x0^11 x1^2 x2^3");
    let r = b.rise_vector();
    assert_eq!(r, vec![1, 1, 2, 0, 0, 0, 2, 0, 1, 0, 0, 0, 0, 0, 1, 0]);
    assert_eq!(multiset(&r).monomial("y"), "y0^10 y1^4 y2^2");
    assert_eq!(b.area_monomial(), multiset(&c).without_zeros());
    assert_eq!(BallotPath::from_mdyck(&d, 2).unwrap(), b);
}

#[test]
fn ballot_rotation_example() {
    let b = BallotPath::parse(2, "101000110100000100").unwrap();
    let c = b.rotate(5).unwrap();
    assert_eq!(c.word(), "101001101000000100");
}

#[test]
fn two_tamari_statistics() {
    let p = two_tamari();
    let (lo, hi) = ballot_bounds(&p, 2).unwrap();
    assert_eq!(lo.word(), "100101000100110001001010000101000");
    assert_eq!(hi.word(), "100110001001100100010100011000000");
    let s = m_interval_stats(&p, 2).unwrap();
    assert_eq!(s.size, 11);
    assert_eq!(
        s.contacts,
        vec![5, 0, 0, 1, 0, 0, 0, 0, 0, 2, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0]
    );
    assert_eq!(s.contacts_p.monomial("x"), "x0^16 x1^4 x2 x5");
    assert_eq!(
        s.rises,
        vec![1, 0, 2, 0, 0, 1, 0, 2, 0, 1, 0, 0, 1, 1, 0, 0, 2, 0, 0, 0, 0, 0]
    );
    assert_eq!(s.rises_p.monomial("y"), "y0^14 y1^5 y2^3");
    assert_eq!(s.distance, 7);
}

#[test]
fn two_tamari_involution() {
    let j = m_rise_contact(&two_tamari(), 2).unwrap();
    assert_eq!(j, two_tamari_image());
    let (lo, hi) = ballot_bounds(&j, 2).unwrap();
    assert_eq!(lo.word(), "110010101010110010001000001000000");
    assert_eq!(hi.word(), "111110101101000010000100000000000");
    let s = m_interval_stats(&j, 2).unwrap();
    assert_eq!(
        s.contacts,
        vec![1, 0, 2, 0, 0, 1, 0, 2, 0, 1, 0, 1, 0, 1, 2, 0, 0, 0, 0, 0, 0, 0]
    );
    assert_eq!(s.contacts_p.monomial("x"), "x0^14 x1^5 x2^3");
    assert_eq!(
        s.rises,
        vec![5, 1, 2, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]
    );
    assert_eq!(s.rises_p.monomial("y"), "y0^16 y1^4 y2 y5");
    assert_eq!(s.distance, 7);
    assert_eq!(m_rise_contact(&j, 2).unwrap(), two_tamari());
}

#[test]
fn expansion_distance_on_two_tamari() {
    let g = MGraftingTree::from_interval(&two_tamari(), 2).unwrap();
    let e = g.expand();
    assert_eq!(e.distance(), 2 * 7 + 11);
    assert_eq!(MGraftingTree::contract(&e, 2).unwrap(), g);
}

#[test]
fn whole_lattice_and_lattice_sizes() {
    assert_eq!(IntervalPoset::antichain(3).distance(), 3);
    assert_eq!(all_trees(4).len(), 14);
    assert_eq!(tamari_core::mtamari::all_ballot_paths(3, 2).len(), 12);
}

#[test]
fn distance_zero_interval_of_path() {
    let t = "11011000110110110000".parse::<DyckPath>().unwrap().to_tree();
    let p = interval_from_bounds(&t, &t).unwrap();
    assert_eq!(p.distance(), 0);
    let s = interval_stats(&rise_contact(&p));
    assert_eq!(s.contacts_p.monomial("x"), "x0^5 x2^5");
    assert_eq!(s.rises_p.monomial("y"), "y0^4 y1^2 y2^4");
    assert_eq!(s.distance, 0);
}
