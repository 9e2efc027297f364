use num_traits::Zero;
use steengrass::arith::residue;
use steengrass::wu::{
    alpha_direct, beta_table, beta_two_alphabet, frobenius_check, h_perp_two, two_alphabet_m, BetaTable,
};
use steengrass::Partition;

#[test]
fn beta_reassembles_alpha() {
    for p in [2usize, 3, 5] {
        let mut t = BetaTable::new(p);
        for n in 0..=14 / p {
            for k in 0..=14 - p * n {
                assert_eq!(t.alpha_expansion(n, k), alpha_direct(p, n, k).unwrap(), "p={p} n={n} k={k}");
            }
        }
    }
}

#[test]
fn recurrence_holds_on_the_table() {
    for p in [2usize, 3, 4, 5] {
        let mut t = beta_table(p, 3, 3);
        for ((lam, n, k), v) in t.entries() {
            if n >= 1 && k >= 1 {
                let a = t.beta(&lam, n, k - 1);
                let b = t.beta(&lam, n - 1, k);
                let want = if p % 2 == 0 { a - b } else { a + b };
                assert_eq!(v, want, "p={p} {lam} n={n} k={k}");
            }
        }
    }
}

#[test]
fn vanishing_rules() {
    for p in [2usize, 3, 5] {
        let mut t = beta_table(p, 3, 2);
        for ((lam, n, k), v) in t.entries() {
            assert!(lam.len() < p && lam.weight() <= n * (p - 1), "p={p} {lam} n={n} k={k}");
            if k == 0 && n > lam.largest() {
                assert_eq!(residue(&v, p as u64), 0, "p={p} {lam} n={n}");
            }
        }
        assert!(t.beta(&Partition::column(p), 2, 0).is_zero());
    }
}

#[test]
fn two_alphabet_operators() {
    for p in [3usize, 5] {
        for n in 0..=12 / p {
            for k in 0..=12 - p * n {
                let m = two_alphabet_m(p, n, k).unwrap();
                if k >= 1 {
                    assert_eq!(h_perp_two(1, &m), two_alphabet_m(p, n, k - 1).unwrap(), "H_1 at p={p} n={n} k={k}");
                }
                if n >= 1 {
                    assert_eq!(h_perp_two(p, &m), two_alphabet_m(p, n - 1, k).unwrap(), "H_p at p={p} n={n} k={k}");
                }
                for i in 2..p {
                    assert!(h_perp_two(i, &m).is_empty(), "H_{i} at p={p} n={n} k={k}");
                }
                let mut t = BetaTable::new(p);
                assert_eq!(beta_two_alphabet(p, n, k).unwrap(), t.beta_slice(n, k));
            }
        }
    }
}

#[test]
fn frobenius() {
    for p in [2u64, 3, 5] {
        for n in 0..=3 {
            assert!(frobenius_check(p, n).unwrap(), "p={p} n={n}");
        }
    }
    assert!(frobenius_check(6, 1).is_err());
}
