mod common;

use common::{nested, partition, pt};
use num_traits::Zero;
use proptest::prelude::*;
use rayon::prelude::*;
use steengrass::arith::to_integer;
use steengrass::diffop::{apply_perp, apply_sym, d_power, DiffOp};
use steengrass::schubert::{
    a_coeff, a_coeff_k, a_coeff_spec, a_coeff_spec_jt, a_poly, apply_dk_schur, conjecture_check, d_coeff,
    vanishing_window, SchubertError,
};
use steengrass::symfunc::SymElem;
use steengrass::young::{minimal_frame, partitions_of, Direction};
use steengrass::{Partition, SkewShape};

fn all_pairs(max_inner: usize, max_outer: usize) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for d in 0..=max_inner {
        for lam in partitions_of(d) {
            for e in d + 1..=max_outer {
                for mu in partitions_of(e) {
                    if lam.contained_in(&mu) {
                        out.push((lam.clone(), mu));
                    }
                }
            }
        }
    }
    out
}

/// Shifts `μ/λ` by `t` rows down and `t` columns right, keeping every content.
fn slide(lam: &Partition, mu: &Partition, t: usize) -> (Partition, Partition) {
    let top = mu.largest() + t;
    let rows = mu.len();
    let grow = |p: &Partition| {
        let mut parts = vec![top; t];
        parts.extend((0..rows).map(|i| p.get(i) + t));
        Partition::new(parts)
    };
    (grow(lam), grow(mu))
}

#[test]
fn dual_route_agreement() {
    let sources: Vec<Partition> = (0..=5).flat_map(partitions_of).collect();
    sources.par_iter().for_each(|lam| {
        let s = SymElem::s(lam.clone());
        for e in 1..=9 - lam.weight() {
            let img = d_power(1, e).apply(&s).unwrap();
            for mu in partitions_of(lam.weight() + e).into_iter().filter(|m| lam.contained_in(m)) {
                let direct = to_integer(&img.coeff(&mu)).unwrap();
                assert_eq!(a_coeff(lam, &mu).unwrap().value, direct, "{lam} {mu}");
                assert_eq!(a_coeff_spec(lam, &mu).unwrap(), direct, "{lam} {mu}");
            }
        }
    });
}

#[test]
fn general_k_path_sums() {
    for k in 2..=3 {
        for lam in (0..=3).flat_map(partitions_of) {
            let s = SymElem::s(lam.clone());
            for n in 1..=2 {
                let img = apply_sym(&DiffOp::d(Partition::rect(k, n)), &s);
                for mu in partitions_of(lam.weight() + k * n).into_iter().filter(|m| lam.contained_in(m)) {
                    let want = to_integer(&img.coeff(&mu)).unwrap();
                    assert_eq!(a_coeff_k(&lam, &mu, k).unwrap(), want, "k={k} {lam} {mu}");
                }
            }
        }
    }
}

#[test]
fn frame_dependence() {
    for (lam, mu) in all_pairs(4, 6) {
        let a = a_coeff_k(&lam, &mu, 1).unwrap();
        for t in 1..=2 {
            let (l2, m2) = slide(&lam, &mu, t);
            assert_eq!(a_coeff_k(&l2, &m2, 1).unwrap(), a, "{lam} {mu} slid by {t}");
        }
    }
}

#[test]
fn vanishing_sufficiency_and_small_necessity() {
    let pairs: Vec<_> = all_pairs(8, 9).into_iter().filter(|(l, m)| m.weight() - l.weight() <= 5).collect();
    pairs.par_iter().for_each(|(lam, mu)| {
        let skew = SkewShape::new(mu.clone(), lam.clone()).unwrap();
        let c = minimal_frame(&skew).unwrap().c;
        let w = vanishing_window(lam, mu).unwrap();
        let inside = w.is_some_and(|(lo, hi)| lo <= c && c <= hi);
        let a = a_coeff_k(lam, mu, 1).unwrap();
        if inside {
            assert!(a.is_zero(), "{lam} {mu}: window {w:?}, c = {c}, a = {a}");
        }
        if mu.weight() - lam.weight() <= 2 && a.is_zero() {
            assert!(inside, "{lam} {mu}: a = 0 but c = {c} outside {w:?}");
        }
    });
}

#[test]
fn window_examples() {
    assert_eq!(vanishing_window(&pt(&[2]), &pt(&[4])).unwrap(), Some((0, 1)));
    let w = vanishing_window(&Partition::empty(), &pt(&[3, 1])).unwrap();
    assert_eq!(w, Some((-1, 2)));
}

#[test]
fn errors() {
    assert_eq!(d_coeff(&pt(&[3]), &pt(&[2, 2])), Err(SchubertError::NotContained));
    assert_eq!(a_coeff_k(&pt(&[3]), &pt(&[2, 2]), 1), Err(SchubertError::NotContained));
    assert_eq!(conjecture_check(&pt(&[1]), &pt(&[3])), Err(SchubertError::ComponentCount(1)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn strip_formula_matches_operator(lam in partition(6), k in 1usize..=4) {
        let s = SymElem::s(lam);
        prop_assert_eq!(apply_dk_schur(k, &s, Direction::Add), apply_sym(&DiffOp::dk(k), &s));
        prop_assert_eq!(apply_dk_schur(k, &s, Direction::Remove), apply_perp(&DiffOp::dk(k), &s));
    }

    #[test]
    fn polynomial_in_the_content((lam, mu) in nested(9)) {
        prop_assume!(lam != mu);
        let skew = SkewShape::new(mu.clone(), lam.clone()).unwrap();
        let f = minimal_frame(&skew).unwrap();
        let poly = a_poly(&f.pi, &f.rho);
        prop_assert!(poly.degree() <= f.rho.weight() - f.pi.weight());
        prop_assert_eq!(poly.eval(f.c), a_coeff_k(&lam, &mu, 1).unwrap());
        prop_assert_eq!(a_coeff_spec_jt(&lam, &mu).unwrap(), a_coeff_spec(&lam, &mu).unwrap());
    }

    #[test]
    fn two_component_report_is_data((lam, mu) in nested(9)) {
        let skew = SkewShape::new(mu.clone(), lam.clone()).unwrap();
        match conjecture_check(&lam, &mu) {
            Ok(r) => {
                prop_assert_eq!(skew.components().len(), 2);
                prop_assert_eq!(r.lhs, a_coeff_k(&lam, &mu, 1).unwrap());
            }
            Err(e) => prop_assert_eq!(e, SchubertError::ComponentCount(skew.components().len())),
        }
    }
}

#[test]
fn single_box_frame_formula() {
    let img = apply_sym(&DiffOp::sq(2), &SymElem::s([1]));
    for mu in partitions_of(3) {
        assert_eq!(a_coeff_spec(&pt(&[1]), &mu).unwrap(), to_integer(&img.coeff(&mu)).unwrap());
    }
}
