#![allow(dead_code)]

use tamari_core::IntervalPoset;

pub fn poset(n: usize, inc: &[(usize, usize)], dec: &[(usize, usize)]) -> IntervalPoset {
    IntervalPoset::from_relations(n, inc.iter().chain(dec).copied()).unwrap()
}

pub fn inc_edges(p: &IntervalPoset) -> Vec<(usize, usize)> {
    p.increasing_forest().edges()
}

pub fn dec_edges(p: &IntervalPoset) -> Vec<(usize, usize)> {
    p.decreasing_forest().edges()
}

pub fn ten_vertex() -> IntervalPoset {
    poset(
        10,
        &[(2, 5), (3, 4), (4, 5), (6, 7), (8, 10), (9, 10)],
        &[(3, 2), (4, 2), (6, 5), (7, 5), (8, 5), (9, 8), (10, 5)],
    )
}

pub fn eight_vertex() -> IntervalPoset {
    poset(
        8,
        &[(1, 2), (2, 4), (3, 4), (6, 7)],
        &[(3, 2), (5, 4), (6, 4), (8, 7)],
    )
}

pub fn eight_vertex_image() -> IntervalPoset {
    poset(
        8,
        &[(2, 8), (3, 8), (4, 5), (5, 7), (6, 7), (7, 8)],
        &[(2, 1), (3, 2), (4, 3), (5, 3), (6, 2), (7, 2), (8, 1)],
    )
}

pub fn small_left() -> IntervalPoset {
    poset(3, &[(2, 3)], &[(2, 1)])
}

pub fn small_right() -> IntervalPoset {
    poset(3, &[], &[(3, 2)])
}

pub fn two_tamari() -> IntervalPoset {
    poset(
        22,
        &[
            (1, 3), (2, 3), (4, 7), (5, 7), (6, 7), (7, 9), (8, 9), (10, 15), (11, 13),
            (12, 13), (13, 15), (14, 15), (15, 19), (16, 17), (17, 19), (18, 19),
        ],
        &[
            (2, 1), (4, 3), (5, 3), (6, 5), (8, 7), (10, 9), (11, 10), (12, 11), (13, 9),
            (14, 13), (15, 9), (16, 15), (17, 15), (18, 17), (20, 19), (21, 19), (22, 21),
        ],
    )
}

pub fn two_tamari_image() -> IntervalPoset {
    poset(
        22,
        &[
            (10, 11), (11, 21), (12, 13), (13, 21), (14, 19), (15, 19), (16, 17), (17, 19),
            (18, 19), (19, 21), (20, 21),
        ],
        &[
            (2, 1), (3, 2), (4, 3), (5, 2), (6, 5), (7, 5), (8, 7), (9, 7), (10, 9), (11, 9),
            (12, 11), (13, 11), (14, 13), (15, 14), (16, 15), (17, 14), (18, 17), (19, 13),
            (20, 19), (21, 7), (22, 21),
        ],
    )
}
