//! Invariant suites run by `steengrass verify`, bounded by a maximum degree.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;

use steengrass::arith::{q, residue, to_integer};
use steengrass::diffop::{
    antipode_axioms, apply_oracle, apply_sym, apply_tensor, coaction_h, coaction_h_series, coassociative, comult_b,
    comult_b_composition, coproduct, d_power, inverse_composition, lie_bracket, parse_op, steenrod, DiffOp,
};
use steengrass::grass::{steenrod_schubert, BoxedClass};
use steengrass::schubert::{a_coeff_k, a_coeff_spec, inverse_kostka, inverse_kostka_hook_row, kostka_matrix};
use steengrass::symfunc::{multiply, to_oracle, Basis, SymElem};
use steengrass::wu::{alpha_direct, alpha_mod5_closed, borel_serre_check, reduce_table, wu_formula, BetaTable};
use steengrass::young::partitions_of;
use steengrass::{Partition, Z};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Oracle,
    Hopf,
    Paper,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub cases: usize,
    pub failure: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

type Run = Result<usize, String>;

fn check(name: &str, run: Run) -> Check {
    match run {
        Ok(cases) => Check { name: name.to_string(), cases, failure: None },
        Err(e) => Check { name: name.to_string(), cases: 0, failure: Some(e) },
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn upto(d: usize) -> Vec<Partition> {
    (0..=d).flat_map(partitions_of).collect()
}

pub fn run(suite: Suite, max_degree: usize) -> Vec<Check> {
    match suite {
        Suite::Oracle => oracle_suite(max_degree),
        Suite::Hopf => hopf_suite(max_degree),
        Suite::Paper => paper_suite(max_degree),
    }
}

/// One line per check followed by a summary line.
pub fn render(suite: Suite, checks: &[Check]) -> String {
    let mut out = String::new();
    for c in checks {
        match &c.failure {
            None => out.push_str(&format!("PASS {}: {} cases\n", c.name, c.cases)),
            Some(e) => out.push_str(&format!("FAIL {}: {e}\n", c.name)),
        }
    }
    let ok = checks.iter().filter(|c| c.passed()).count();
    out.push_str(&format!("{suite:?} suite: {ok}/{} checks passed\n", checks.len()).to_lowercase());
    out
}

fn oracle_suite(d: usize) -> Vec<Check> {
    let nvars = d.max(1);
    let jobs: Vec<(Partition, Partition)> = (1..=d.min(4))
        .flat_map(partitions_of)
        .flat_map(|op| upto(d - op.weight()).into_iter().map(move |mu| (op.clone(), mu)))
        .collect();
    let run: Run = jobs
        .par_iter()
        .map(|(op, mu)| {
            let d = DiffOp::d(op.clone());
            let f = SymElem::s(mu.clone());
            ensure(to_oracle(&apply_sym(&d, &f), nvars) == apply_oracle(&d, &to_oracle(&f, nvars)), || {
                format!("D{op} on s{mu}")
            })
        })
        .collect::<Result<Vec<()>, String>>()
        .map(|v| v.len());
    let grading: Run = (|| {
        let mut n = 0;
        for op in (1..=d.min(4)).flat_map(partitions_of) {
            for mu in upto(d - op.weight()) {
                let img = apply_sym(&DiffOp::d(op.clone()), &SymElem::s(mu.clone()));
                ensure(img.terms().keys().all(|p| p.weight() == op.weight() + mu.weight()), || {
                    format!("D{op} s{mu} is not homogeneous of the expected degree")
                })?;
                n += 1;
            }
        }
        Ok(n)
    })();
    vec![check("operator action against explicit polynomials", run), check("degree grading", grading)]
}

fn cartan_splits(lam: &Partition) -> Vec<(Partition, Partition)> {
    let mut out = vec![(Partition::empty(), Partition::empty())];
    for (v, m) in lam.multiplicities() {
        let mut next = Vec::new();
        for (a, c) in &out {
            for i in 0..=m {
                let a2 = (0..i).fold(a.clone(), |x, _| x.with_part(v));
                let c2 = (i..m).fold(c.clone(), |x, _| x.with_part(v));
                next.push((a2, c2));
            }
        }
        out = next;
    }
    out
}

fn hopf_suite(d: usize) -> Vec<Check> {
    let cartan: Run = (|| {
        let mut n = 0;
        for lam in (1..=d.min(3)).flat_map(partitions_of) {
            let op = DiffOp::d(lam.clone());
            let rest = d - lam.weight();
            for f in upto(rest) {
                for g in upto(rest - f.weight()) {
                    let (sf, sg) = (SymElem::s(f.clone()), SymElem::s(g.clone()));
                    let lhs = apply_sym(&op, &multiply(&sf, &sg));
                    let mut rhs = SymElem::zero(Basis::Schur);
                    for (a, c) in cartan_splits(&lam) {
                        rhs = rhs + multiply(&apply_sym(&DiffOp::d(a), &sf), &apply_sym(&DiffOp::d(c), &sg));
                    }
                    ensure(lhs == rhs, || format!("D{lam} on s{f}·s{g}"))?;
                    n += 1;
                }
            }
        }
        Ok(n)
    })();
    let co_cartan: Run = (|| {
        let mut n = 0;
        for op in [DiffOp::dk(1), DiffOp::dk(2), DiffOp::d([1, 1])] {
            for m in 0..=d.min(4) {
                for f in [SymElem::h([m]), SymElem::e(Partition::row(m)), SymElem::p([m])] {
                    ensure(coproduct(&apply_sym(&op, &f)) == apply_tensor(&op, &coproduct(&f)), || {
                        format!("{op} on {f}")
                    })?;
                    n += 1;
                }
            }
        }
        Ok(n)
    })();
    let bracket: Run = (|| {
        let mut n = 0;
        for k in 1..=4 {
            for l in 1..=4 {
                if k + l > d {
                    continue;
                }
                for f in upto(d - k - l) {
                    let s = SymElem::s(f.clone());
                    let want = apply_sym(&DiffOp::dk(k + l), &s).scale(&q(l as i64 - k as i64));
                    ensure(lie_bracket(k, l, &s) == want, || format!("[D_{k},D_{l}] on s{f}"))?;
                    n += 1;
                }
            }
        }
        Ok(n)
    })();
    let power: Run = (|| {
        let mut n = 0;
        for k in 1..=3usize {
            for m in 1..=3usize {
                if k * m > d {
                    continue;
                }
                for f in upto(d - k * m) {
                    let s = SymElem::s(f.clone());
                    let lhs = apply_sym(&DiffOp::d(Partition::rect(k, m)), &s).scale(&q(m as i64));
                    let mut rhs = SymElem::zero(Basis::Schur);
                    let mut w = Z::one();
                    for i in 1..=m {
                        let inner = apply_sym(&DiffOp::d(Partition::rect(k, m - i)), &s);
                        rhs.add_assign_scaled(&apply_sym(&DiffOp::dk(i * k), &inner), &w.clone().into());
                        w *= Z::from(-(k as i64) - 1);
                    }
                    ensure(lhs == rhs, || format!("D(k^n) recursion at k={k} n={m} on s{f}"))?;
                    let piped = d_power(k, m).apply(&s).map_err(|e| e.to_string())?;
                    ensure(piped.scale(&q(m as i64)) == lhs, || format!("pipeline at k={k} n={m} on s{f}"))?;
                    n += 1;
                }
            }
        }
        Ok(n)
    })();
    let dual: Run = (|| {
        for k in 0..=d {
            ensure(coassociative(k), || format!("coassociativity at b_{k}"))?;
            ensure(comult_b(k) == comult_b_composition(k), || format!("comultiplication routes at b_{k}"))?;
            let (l, r) = antipode_axioms(k);
            let unit: BTreeMap<Partition, Z> =
                if k == 0 { BTreeMap::from([(Partition::empty(), Z::one())]) } else { BTreeMap::new() };
            ensure(l == unit && r == unit, || format!("antipode axioms at b_{k}"))?;
            ensure(coaction_h(k) == coaction_h_series(k), || format!("coaction on h_{k}"))?;
        }
        for (j, c) in inverse_composition(d).iter().enumerate() {
            let want = if j == 1 { BTreeMap::from([(Partition::empty(), Z::one())]) } else { BTreeMap::new() };
            ensure(*c == want, || format!("b(S(b))(t) at t^{j}"))?;
        }
        Ok(d + 1)
    })();
    let borel: Run = (|| {
        let mut n = 0;
        for p in [2u64, 3, 5] {
            for m in 0..=d / p as usize {
                for k in 0..=d - p as usize * m {
                    ensure(borel_serre_check(p, m, k).map_err(|e| e.to_string())?, || {
                        format!("Borel-Serre at p={p} n={m} k={k}")
                    })?;
                    n += 1;
                }
            }
        }
        Ok(n)
    })();
    vec![
        check("Cartan formula", cartan),
        check("co-Cartan formula", co_cartan),
        check("bracket [D_k,D_l] = (l-k)D_{k+l}", bracket),
        check("recursion for D_(k^n)", power),
        check("dual algebra: coproduct, antipode, coaction", dual),
        check("Borel-Serre identity", borel),
    ]
}

fn class_is(c: &BoxedClass, want: &[(&[usize], i64)]) -> bool {
    let w: BTreeMap<Partition, Z> = want.iter().map(|(p, v)| (Partition::from(*p), Z::from(*v))).collect();
    c.terms == w
}

fn paper_suite(d: usize) -> Vec<Check> {
    type Case<'a> = (&'a str, &'a [usize], u64, usize, usize, Vec<(&'a [usize], i64)>);
    let grass: Run = (|| {
        let cases: Vec<Case> = vec![
            ("Sq^2", &[2, 1], 2, 2, 2, vec![]),
            ("Sq^6", &[1], 2, 2, 2, vec![]),
            ("Sq^2*Sq^4", &[1], 2, 2, 2, vec![]),
            ("(Sq^2)^3", &[1], 2, 2, 2, vec![]),
            ("Sq^4", &[1, 1], 2, 2, 3, vec![(&[2, 2], 1)]),
            ("(Sq^2)^2", &[1, 1], 2, 2, 3, vec![]),
            ("P^1", &[1, 1], 3, 2, 3, vec![(&[3, 1], 1), (&[2, 2], 2)]),
            ("Sq^4", &[3, 1], 2, 2, 3, vec![]),
            ("(Sq^2)^2", &[3, 1], 2, 2, 3, vec![]),
            ("P^1", &[3, 1], 3, 2, 3, vec![]),
            ("SQ^1*SQ^1", &[1, 1], 0, 2, 3, vec![(&[3, 1], 2)]),
        ];
        for (op, lam, p, n, k, want) in &cases {
            let e = parse_op(op).map_err(|e| e.to_string())?;
            let got = steenrod_schubert(&e, &Partition::from(*lam), *p, *n, *k).map_err(|e| e.to_string())?;
            ensure(class_is(&got, want), || format!("{op} on σ{} gave {got}", Partition::from(*lam)))?;
        }
        Ok(cases.len())
    })();
    let operators: Run = (|| {
        let sq1 = steenrod(&parse_op("SQ^1").unwrap(), &SymElem::s([1]), 0).map_err(|e| e.to_string())?;
        ensure(sq1 == SymElem::p([2]).to_basis(Basis::Schur), || format!("SQ^1 s_1 = {sq1}"))?;
        let d11 = apply_sym(&DiffOp::d([1, 1]), &SymElem::s([2]));
        let want = SymElem::from_int_terms(Basis::Schur, [(Partition::from([4]), 1), ([3, 1].into(), -1), ([2, 2].into(), 1)]);
        ensure(d11 == want, || format!("D(1,1) s_2 = {d11}"))?;
        Ok(2)
    })();
    let tables: Run = (|| {
        let mut t = BetaTable::new(5);
        let pt = |v: &[usize]| Partition::from(v);
        let checks = [
            (t.beta(&pt(&[1, 1, 1]), 1, 0), -1),
            (t.beta(&pt(&[2, 1, 1]), 1, 0), -4),
            (t.alpha(&pt(&[2, 1, 1, 1]), 1, 0), -5),
            (t.beta(&pt(&[2, 1, 1]), 2, 0), -19),
            (t.beta(&pt(&[6, 1, 1]), 2, 0), 4),
            (t.alpha(&pt(&[6, 2, 1, 1]), 2, 0), -15),
        ];
        for (i, (got, want)) in checks.iter().enumerate() {
            ensure(*got == Z::from(*want), || format!("table value {i}: {got}, expected {want}"))?;
        }
        for k in 1..=3 {
            let got = t.alpha(&pt(&[k + 6, 2, 1, 1]), 2, k);
            ensure(got == Z::from(-19 - 4 * k as i64), || format!("α(k+6,2,1,1) at k={k}: {got}"))?;
        }
        let mut n_closed = 0;
        for n in 3..=5 {
            for k in 0..=4 {
                let table = residue(&t.alpha(&pt(&[5 * n + k - 4, 2, 1, 1]), n, k), 5);
                let formula = alpha_mod5_closed(n, k).ok_or("mod-5 closed form undefined")?;
                ensure(table == formula, || format!("mod-5 closed form at n={n} k={k}"))?;
                n_closed += 1;
            }
        }
        Ok(checks.len() + 3 + n_closed)
    })();
    let wu: Run = (|| {
        let mut n_cases = 0;
        for n in 0..=d / 2 {
            for k in 0..=d - 2 * n {
                let a = alpha_direct(2, n, k).map_err(|e| e.to_string())?;
                ensure(reduce_table(&a, 2) == wu_formula(n, k), || format!("mod-2 formula at n={n} k={k}"))?;
                n_cases += 1;
            }
        }
        Ok(n_cases)
    })();
    let path: Run = (|| {
        let mut n = 0;
        for lam in upto(d.min(4)) {
            let s = SymElem::s(lam.clone());
            for e in 1..=d.saturating_sub(lam.weight()) {
                let img = d_power(1, e).apply(&s).map_err(|e| e.to_string())?;
                for mu in partitions_of(lam.weight() + e).into_iter().filter(|m| lam.contained_in(m)) {
                    let direct = to_integer(&img.coeff(&mu)).ok_or("non-integral image")?;
                    let a = a_coeff_k(&lam, &mu, 1).map_err(|e| e.to_string())?;
                    let b = a_coeff_spec(&lam, &mu).map_err(|e| e.to_string())?;
                    ensure(a == direct && b == direct, || format!("a({lam},{mu}): {a}, {b}, direct {direct}"))?;
                    n += 1;
                }
            }
        }
        Ok(n)
    })();
    let kostka: Run = (|| {
        let mut n = 0;
        for deg in 1..=d {
            let k = kostka_matrix(deg);
            let parts = partitions_of(deg);
            for lam in &parts {
                let row = inverse_kostka(lam);
                for nu in &parts {
                    let mut acc = Z::zero();
                    for (mu, c) in &row.entries {
                        if let Some(v) = k.get(&(mu.clone(), nu.clone())) {
                            acc += c * v;
                        }
                    }
                    ensure(acc == Z::from((lam == nu) as i64), || format!("row {lam} against column {nu}"))?;
                }
                if lam.parts()[1..].iter().all(|&x| x == 1) && lam.largest() >= 2 {
                    let kk = lam.len() - 1;
                    for mu in &parts {
                        let got = row.entries.get(mu).cloned().unwrap_or_else(Z::zero);
                        ensure(got == inverse_kostka_hook_row(kk, lam.largest(), mu), || {
                            format!("hook row {lam} at {mu}")
                        })?;
                    }
                }
                n += 1;
            }
        }
        Ok(n)
    })();
    vec![
        check("Grassmannian Steenrod computations", grass),
        check("worked operator values", operators),
        check("two-alphabet table values", tables),
        check("mod-2 Wu formula", wu),
        check("path sum, specialization and direct extraction", path),
        check("inverse Kostka rows and hook closed form", kostka),
    ]
}
