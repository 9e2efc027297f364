mod common;

use std::collections::BTreeSet;

use common::{nested, partition, pt, skew};
use proptest::prelude::*;
use steengrass::young::{
    analyze_strip, m_stat, minimal_frame, partitions_in_box, partitions_of, strip_moves, ComponentCount, Direction,
};
use steengrass::{Partition, SkewShape};

#[test]
fn partition_counts() {
    let want = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
    for (n, &w) in want.iter().enumerate() {
        assert_eq!(partitions_of(n).len(), w);
    }
    assert_eq!(partitions_in_box(2, 3).len(), 10);
    assert_eq!(partitions_in_box(0, 4), vec![Partition::empty()]);
}

#[test]
fn hooks_of_a_row() {
    let p = Partition::row(5);
    let hooks: Vec<usize> = (1..=5).map(|c| p.content_hook(1, c).unwrap().1).collect();
    assert_eq!(hooks, vec![5, 4, 3, 2, 1]);
    assert!(p.content_hook(2, 1).is_err());
}

#[test]
fn m_stat_examples() {
    assert_eq!(m_stat(&pt(&[6, 5, 4, 4, 3, 3, 2, 1, 1]), 8), 3);
    assert_eq!(m_stat(&pt(&[6, 5, 4, 4, 4, 4, 2]), 8), 4);
    assert_eq!(m_stat(&pt(&[3, 1]), 0), 3);
    assert_eq!(m_stat(&Partition::empty(), 2), 0);
}

#[test]
fn frame_of_a_worked_shape() {
    let s = SkewShape::new(pt(&[6, 5, 3]), pt(&[6, 3, 2])).unwrap();
    let f = minimal_frame(&s).unwrap();
    assert_eq!((f.pi.clone(), f.rho.clone(), f.c), (pt(&[1]), pt(&[3, 1]), 1));
    let again = minimal_frame(&SkewShape::new(f.rho, f.pi).unwrap()).unwrap();
    assert_eq!((again.pi, again.rho, again.c), (pt(&[1]), pt(&[3, 1]), 0));
}

fn has_block(s: &SkewShape) -> bool {
    let b: BTreeSet<(usize, usize)> = s.boxes().into_iter().collect();
    b.iter().any(|&(r, c)| b.contains(&(r + 1, c)) && b.contains(&(r, c + 1)) && b.contains(&(r + 1, c + 1)))
}

proptest! {
    #[test]
    fn conjugate_is_an_involution(p in partition(12)) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().weight(), p.weight());
    }

    #[test]
    fn dominance_reverses_under_conjugation(a in partition(9), b in partition(9)) {
        if a.weight() == b.weight() {
            prop_assert_eq!(a.dominance_leq(&b).unwrap(), b.conjugate().dominance_leq(&a.conjugate()).unwrap());
        } else {
            prop_assert!(a.dominance_leq(&b).is_err());
        }
    }

    #[test]
    fn infinite_components_iff_block(s in skew(10)) {
        let a = analyze_strip(&s);
        prop_assert_eq!(a.cc == ComponentCount::Infinite, has_block(&s));
    }

    #[test]
    fn corner_identity(s in skew(10)) {
        let a = analyze_strip(&s);
        if !s.is_empty() && a.cc == ComponentCount::Finite(1) {
            let boxes = s.boxes();
            let sharp: Vec<(usize, usize)> = boxes
                .iter()
                .copied()
                .filter(|&(r, c)| !s.contains_box(r - 1, c) && !s.contains_box(r, c - 1))
                .collect();
            let first = sharp.iter().min_by_key(|b| b.0).unwrap();
            let last = sharp.iter().max_by_key(|b| b.0).unwrap();
            let lhs: i64 = a.sharp_corners.iter().sum::<i64>() - a.dull_corners.iter().sum::<i64>();
            prop_assert_eq!(lhs, last.1 as i64 - first.0 as i64);
        }
    }

    #[test]
    fn frame_is_idempotent(s in skew(10)) {
        if !s.is_empty() {
            let f = minimal_frame(&s).unwrap();
            let g = minimal_frame(&SkewShape::new(f.rho.clone(), f.pi.clone()).unwrap()).unwrap();
            prop_assert_eq!((g.pi, g.rho), (f.pi, f.rho));
            prop_assert_eq!(f.components.len(), s.components().len());
        }
    }

    #[test]
    fn strip_moves_are_dual((lam, mu) in nested(9)) {
        let k = mu.weight() - lam.weight();
        if k > 0 {
            let up = strip_moves(&lam, k, Direction::Add, 2).iter().any(|(p, _)| *p == mu);
            let down = strip_moves(&mu, k, Direction::Remove, 2).iter().any(|(p, _)| *p == lam);
            let direct = analyze_strip(&SkewShape::new(mu.clone(), lam.clone()).unwrap()).cc.at_most(2);
            prop_assert_eq!(up, direct);
            prop_assert_eq!(down, direct);
        }
    }

    #[test]
    fn row_and_column_lengths_cover_the_shape(s in skew(10)) {
        prop_assert_eq!(s.row_lengths().weight(), s.size());
        prop_assert_eq!(s.column_lengths().weight(), s.size());
    }
}
