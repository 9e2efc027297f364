//! Symmetric functions in the monomial, elementary, complete homogeneous,
//! power-sum and Schur bases, with exact rational coefficients.
//!
//! Arithmetic is carried out in the power-sum basis; Schur expansions go
//! through Murnaghan–Nakayama, and monomial expansions through the
//! multiplication rule for `p_a · m_μ`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};

use num_traits::{One, Signed, Zero};

use crate::arith::{binom, q, qz, to_integer, Q, Z};
use crate::young::{display_order, partitions_of, strip_moves, Direction, Partition, SkewShape};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    Monomial,
    Elementary,
    Homogeneous,
    Power,
    Schur,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::Monomial, Basis::Elementary, Basis::Homogeneous, Basis::Power, Basis::Schur];

    pub fn symbol(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::Elementary => "e",
            Basis::Homogeneous => "h",
            Basis::Power => "p",
            Basis::Schur => "s",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Basis> {
        Basis::ALL.into_iter().find(|b| b.symbol() == s)
    }

    fn multiplicative(self) -> bool {
        matches!(self, Basis::Elementary | Basis::Homogeneous | Basis::Power)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymError {
    DegreeCap { degree: usize, cap: usize },
    NonSymmetric,
    NotIntegral,
    NotPrime(u64),
}

impl fmt::Display for SymError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymError::DegreeCap { degree, cap } => write!(f, "degree {degree} exceeds the degree cap {cap}"),
            SymError::NonSymmetric => write!(f, "polynomial is not symmetric"),
            SymError::NotIntegral => write!(f, "coefficients are not integers"),
            SymError::NotPrime(p) => write!(f, "{p} is not a prime"),
        }
    }
}

pub const DEFAULT_DEGREE_CAP: usize = 40;
pub const DEGREE_CAP_ENV: &str = "STEENGRASS_DEGREE_CAP";

static DEGREE_CAP: AtomicUsize = AtomicUsize::new(0);

/// Largest degree accepted by the checked entry points.
pub fn degree_cap() -> usize {
    let c = DEGREE_CAP.load(AtomicOrdering::Relaxed);
    if c != 0 {
        return c;
    }
    let v = initial_cap();
    DEGREE_CAP.store(v, AtomicOrdering::Relaxed);
    v
}

#[cfg(feature = "std")]
fn initial_cap() -> usize {
    std::env::var(DEGREE_CAP_ENV).ok().and_then(|s| s.trim().parse().ok()).filter(|&v: &usize| v > 0).unwrap_or(DEFAULT_DEGREE_CAP)
}

#[cfg(not(feature = "std"))]
fn initial_cap() -> usize {
    DEFAULT_DEGREE_CAP
}

pub fn set_degree_cap(cap: usize) {
    DEGREE_CAP.store(cap.max(1), AtomicOrdering::Relaxed);
}

pub fn check_degree(degree: usize) -> Result<(), SymError> {
    let cap = degree_cap();
    if degree > cap {
        Err(SymError::DegreeCap { degree, cap })
    } else {
        Ok(())
    }
}

pub type Terms = BTreeMap<Partition, Q>;

fn add_term(t: &mut Terms, k: Partition, c: Q) {
    if c.is_zero() {
        return;
    }
    match t.get_mut(&k) {
        Some(v) => {
            *v += c;
            if v.is_zero() {
                t.remove(&k);
            }
        }
        None => {
            t.insert(k, c);
        }
    }
}

fn add_scaled(t: &mut Terms, other: &Terms, c: &Q) {
    if c.is_zero() {
        return;
    }
    for (k, v) in other {
        add_term(t, k.clone(), v * c);
    }
}

/// Product in a basis where `b_λ b_μ = b_{λ∪μ}`.
fn union_product(x: &Terms, y: &Terms) -> Terms {
    let mut out = Terms::new();
    for (a, ca) in x {
        for (b, cb) in y {
            add_term(&mut out, a.union(b), ca * cb);
        }
    }
    out
}

/// A finite linear combination of basis elements.
#[derive(Clone, PartialEq, Eq)]
pub struct SymElem {
    basis: Basis,
    terms: Terms,
}

impl SymElem {
    pub fn zero(basis: Basis) -> Self {
        SymElem { basis, terms: Terms::new() }
    }

    pub fn one(basis: Basis) -> Self {
        Self::single(basis, Partition::empty())
    }

    pub fn scalar(basis: Basis, c: Q) -> Self {
        Self::from_terms(basis, [(Partition::empty(), c)])
    }

    pub fn single(basis: Basis, p: Partition) -> Self {
        let mut terms = Terms::new();
        terms.insert(p, Q::one());
        SymElem { basis, terms }
    }

    pub fn from_terms(basis: Basis, it: impl IntoIterator<Item = (Partition, Q)>) -> Self {
        let mut terms = Terms::new();
        for (k, c) in it {
            add_term(&mut terms, k, c);
        }
        SymElem { basis, terms }
    }

    pub fn from_int_terms(basis: Basis, it: impl IntoIterator<Item = (Partition, i64)>) -> Self {
        Self::from_terms(basis, it.into_iter().map(|(k, c)| (k, q(c))))
    }

    pub fn m(p: impl Into<Partition>) -> Self {
        Self::single(Basis::Monomial, p.into())
    }
    pub fn e(p: impl Into<Partition>) -> Self {
        Self::single(Basis::Elementary, p.into())
    }
    pub fn h(p: impl Into<Partition>) -> Self {
        Self::single(Basis::Homogeneous, p.into())
    }
    pub fn p(p: impl Into<Partition>) -> Self {
        Self::single(Basis::Power, p.into())
    }
    pub fn s(p: impl Into<Partition>) -> Self {
        Self::single(Basis::Schur, p.into())
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &Terms {
        &self.terms
    }

    pub fn into_terms(self) -> Terms {
        self.terms
    }

    pub fn coeff(&self, p: &Partition) -> Q {
        self.terms.get(p).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest degree of a term, or `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|k| k.weight()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut ds = self.terms.keys().map(|k| k.weight());
        match ds.next() {
            None => true,
            Some(d) => ds.all(|e| e == d),
        }
    }

    /// The homogeneous component of degree `d`.
    pub fn component(&self, d: usize) -> SymElem {
        SymElem {
            basis: self.basis,
            terms: self.terms.iter().filter(|(k, _)| k.weight() == d).map(|(k, v)| (k.clone(), v.clone())).collect(),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|v| v.is_integer())
    }

    /// Integer coefficients, or an error if some coefficient is fractional.
    pub fn integer_terms(&self) -> Result<BTreeMap<Partition, Z>, SymError> {
        self.terms.iter().map(|(k, v)| to_integer(v).map(|z| (k.clone(), z)).ok_or(SymError::NotIntegral)).collect()
    }

    pub fn scale(&self, c: &Q) -> SymElem {
        if c.is_zero() {
            return SymElem::zero(self.basis);
        }
        SymElem { basis: self.basis, terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    pub fn scale_int(&self, c: i64) -> SymElem {
        self.scale(&q(c))
    }

    pub fn add_assign_scaled(&mut self, other: &SymElem, c: &Q) {
        if other.basis == self.basis {
            add_scaled(&mut self.terms, &other.terms, c);
        } else {
            let o = convert(other, self.basis);
            add_scaled(&mut self.terms, &o.terms, c);
        }
    }

    /// Reduces integer coefficients to residues in `[0, p)`, dropping zeros.
    pub fn reduce_mod(&self, p: u64) -> Result<SymElem, SymError> {
        let ints = self.integer_terms()?;
        Ok(SymElem::from_terms(
            self.basis,
            ints.into_iter().map(|(k, v)| (k, qz(Z::from(crate::arith::residue(&v, p))))),
        ))
    }

    pub fn to_basis(&self, b: Basis) -> SymElem {
        convert(self, b)
    }

    /// Terms in display order (descending lexicographic).
    pub fn sorted_terms(&self) -> Vec<(&Partition, &Q)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| display_order(a.0, b.0));
        v
    }
}

impl fmt::Debug for SymElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SymElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, v)) in self.sorted_terms().into_iter().enumerate() {
            let neg = v.is_negative();
            let a = v.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            write!(f, "{}{}", self.basis.symbol(), k)?;
        }
        Ok(())
    }
}

impl Add for &SymElem {
    type Output = SymElem;
    fn add(self, rhs: &SymElem) -> SymElem {
        let mut out = self.clone();
        out.add_assign_scaled(rhs, &Q::one());
        out
    }
}

impl Sub for &SymElem {
    type Output = SymElem;
    fn sub(self, rhs: &SymElem) -> SymElem {
        let mut out = self.clone();
        out.add_assign_scaled(rhs, &-Q::one());
        out
    }
}

impl Neg for &SymElem {
    type Output = SymElem;
    fn neg(self) -> SymElem {
        self.scale(&-Q::one())
    }
}

impl Mul for &SymElem {
    type Output = SymElem;
    fn mul(self, rhs: &SymElem) -> SymElem {
        multiply(self, rhs)
    }
}

impl Add for SymElem {
    type Output = SymElem;
    fn add(self, rhs: SymElem) -> SymElem {
        &self + &rhs
    }
}

impl Sub for SymElem {
    type Output = SymElem;
    fn sub(self, rhs: SymElem) -> SymElem {
        &self - &rhs
    }
}

impl Neg for SymElem {
    type Output = SymElem;
    fn neg(self) -> SymElem {
        -&self
    }
}

impl Mul for SymElem {
    type Output = SymElem;
    fn mul(self, rhs: SymElem) -> SymElem {
        multiply(&self, &rhs)
    }
}

// ---------------------------------------------------------------------------
// memo tables

#[derive(Default)]
struct Tables {
    p_in_s: BTreeMap<Partition, Terms>,
    s_in_p: BTreeMap<Partition, Terms>,
    char_degrees: BTreeSet<usize>,
    m_in: BTreeMap<(Basis, Partition), Terms>,
    p_in: BTreeMap<(Basis, Partition), Terms>,
    pn_in: BTreeMap<(Basis, usize), Terms>,
    gen_in_p: BTreeMap<(Basis, Partition), Terms>,
}

#[cfg(feature = "std")]
std::thread_local! {
    static TABLES: core::cell::RefCell<Tables> = core::cell::RefCell::new(Tables::default());
}

fn with_tables<R>(f: impl FnOnce(&mut Tables) -> R) -> R {
    #[cfg(feature = "std")]
    {
        TABLES.with(|t| f(&mut t.borrow_mut()))
    }
    #[cfg(not(feature = "std"))]
    {
        f(&mut Tables::default())
    }
}

/// Drops the memoized transition data of the current thread.
pub fn clear_memo() {
    with_tables(|t| *t = Tables::default());
}

fn z_q(p: &Partition) -> Q {
    qz(Z::from(p.z()))
}

impl Tables {
    /// `p_μ` expanded in the Schur basis.
    fn p_in_s(&mut self, mu: &Partition) -> Terms {
        if let Some(t) = self.p_in_s.get(mu) {
            return t.clone();
        }
        let out = if mu.is_empty() {
            let mut t = Terms::new();
            t.insert(Partition::empty(), Q::one());
            t
        } else {
            let k = mu.largest();
            let rest = mu.remove_part(k).unwrap();
            let base = self.p_in_s(&rest);
            mn_terms(k, &base)
        };
        self.p_in_s.insert(mu.clone(), out.clone());
        out
    }

    fn ensure_characters(&mut self, n: usize) {
        if self.char_degrees.contains(&n) {
            return;
        }
        let parts = partitions_of(n);
        let mut rows: BTreeMap<Partition, Terms> = parts.iter().map(|l| (l.clone(), Terms::new())).collect();
        for mu in &parts {
            let col = self.p_in_s(mu);
            let zm = z_q(mu);
            for (lam, chi) in col {
                add_term(rows.get_mut(&lam).unwrap(), mu.clone(), chi / &zm);
            }
        }
        self.s_in_p.extend(rows);
        self.char_degrees.insert(n);
    }

    /// `s_λ` expanded in the power-sum basis.
    fn s_in_p(&mut self, lam: &Partition) -> Terms {
        if let Some(t) = self.s_in_p.get(lam) {
            return t.clone();
        }
        self.ensure_characters(lam.weight());
        self.s_in_p.get(lam).cloned().unwrap()
    }

    /// `e_n` or `h_n` in the power-sum basis.
    fn gen_in_p(&mut self, basis: Basis, lam: &Partition) -> Terms {
        if let Some(t) = self.gen_in_p.get(&(basis, lam.clone())) {
            return t.clone();
        }
        let out = if lam.is_empty() {
            let mut t = Terms::new();
            t.insert(Partition::empty(), Q::one());
            t
        } else if lam.len() == 1 {
            let n = lam.largest();
            let mut t = Terms::new();
            for mu in partitions_of(n) {
                let mut c = Q::one() / z_q(&mu);
                if basis == Basis::Elementary && (n - mu.len()) % 2 == 1 {
                    c = -c;
                }
                add_term(&mut t, mu, c);
            }
            t
        } else {
            let first = Partition::row(lam.largest());
            let rest = lam.remove_part(lam.largest()).unwrap();
            let a = self.gen_in_p(basis, &first);
            let b = self.gen_in_p(basis, &rest);
            union_product(&a, &b)
        };
        self.gen_in_p.insert((basis, lam.clone()), out.clone());
        out
    }

    /// `p_n` in the elementary or homogeneous basis, by Newton's identities.
    fn pn_in(&mut self, basis: Basis, n: usize) -> Terms {
        if basis == Basis::Power {
            let mut t = Terms::new();
            t.insert(Partition::row(n), Q::one());
            return t;
        }
        if let Some(t) = self.pn_in.get(&(basis, n)) {
            return t.clone();
        }
        let mut t = Terms::new();
        match basis {
            Basis::Elementary => {
                add_term(&mut t, Partition::row(n), q(crate::arith::sign(n - 1) * n as i64));
                for i in 1..n {
                    let prev = self.pn_in(basis, n - i);
                    let mut ei = Terms::new();
                    ei.insert(Partition::row(i), q(crate::arith::sign(i - 1)));
                    let prod = union_product(&ei, &prev);
                    add_scaled(&mut t, &prod, &Q::one());
                }
            }
            Basis::Homogeneous => {
                add_term(&mut t, Partition::row(n), q(n as i64));
                for i in 1..n {
                    let prev = self.pn_in(basis, i);
                    let mut hi = Terms::new();
                    hi.insert(Partition::row(n - i), Q::one());
                    let prod = union_product(&hi, &prev);
                    add_scaled(&mut t, &prod, &-Q::one());
                }
            }
            _ => unreachable!(),
        }
        self.pn_in.insert((basis, n), t.clone());
        t
    }

    /// `m_λ` in a multiplicative basis, from `p_a m_μ = Σ_v c_v m_{ν_v} + (m_a(μ)+1) m_{μ∪a}`.
    fn m_in(&mut self, basis: Basis, lam: &Partition) -> Terms {
        if let Some(t) = self.m_in.get(&(basis, lam.clone())) {
            return t.clone();
        }
        let out = if lam.is_empty() {
            let mut t = Terms::new();
            t.insert(Partition::empty(), Q::one());
            t
        } else {
            let a = *lam.parts().last().unwrap();
            let mu = lam.remove_part(a).unwrap();
            let pa = self.pn_in(basis, a);
            let mm = self.m_in(basis, &mu);
            let mut t = union_product(&pa, &mm);
            for v in mu.distinct_parts() {
                let nu = mu.remove_part(v).unwrap().with_part(v + a);
                let c = nu.multiplicity(v + a) as i64;
                let mn = self.m_in(basis, &nu);
                add_scaled(&mut t, &mn, &q(-c));
            }
            let d = q(mu.multiplicity(a) as i64 + 1);
            for v in t.values_mut() {
                *v /= &d;
            }
            t
        };
        self.m_in.insert((basis, lam.clone()), out.clone());
        out
    }

    /// `p_μ` in the monomial, elementary or homogeneous basis.
    fn p_in(&mut self, basis: Basis, mu: &Partition) -> Terms {
        if let Some(t) = self.p_in.get(&(basis, mu.clone())) {
            return t.clone();
        }
        let out = if mu.is_empty() {
            let mut t = Terms::new();
            t.insert(Partition::empty(), Q::one());
            t
        } else {
            let a = mu.largest();
            let rest = mu.remove_part(a).unwrap();
            let r = self.p_in(basis, &rest);
            if basis == Basis::Monomial {
                p_times_m(a, &r)
            } else {
                let pa = self.pn_in(basis, a);
                union_product(&pa, &r)
            }
        };
        self.p_in.insert((basis, mu.clone()), out.clone());
        out
    }

    fn power_of(&mut self, f: &SymElem) -> Terms {
        match f.basis {
            Basis::Power => f.terms.clone(),
            _ => {
                let mut out = Terms::new();
                for (k, c) in &f.terms {
                    let t = match f.basis {
                        Basis::Schur => self.s_in_p(k),
                        Basis::Monomial => self.m_in(Basis::Power, k),
                        b => self.gen_in_p(b, k),
                    };
                    add_scaled(&mut out, &t, c);
                }
                out
            }
        }
    }

    fn expand_power(&mut self, t: &Terms, target: Basis) -> Terms {
        if target == Basis::Power {
            return t.clone();
        }
        let mut out = Terms::new();
        for (k, c) in t {
            let e = match target {
                Basis::Schur => self.p_in_s(k),
                b => self.p_in(b, k),
            };
            add_scaled(&mut out, &e, c);
        }
        out
    }

    fn convert(&mut self, f: &SymElem, target: Basis) -> SymElem {
        if f.basis == target {
            return f.clone();
        }
        if f.basis == Basis::Monomial && target.multiplicative() {
            let mut out = Terms::new();
            for (k, c) in &f.terms {
                let t = self.m_in(target, k);
                add_scaled(&mut out, &t, c);
            }
            return SymElem { basis: target, terms: out };
        }
        let p = self.power_of(f);
        SymElem { basis: target, terms: self.expand_power(&p, target) }
    }
}

/// `p_a · m` for `m` in the monomial basis.
fn p_times_m(a: usize, m: &Terms) -> Terms {
    let mut out = Terms::new();
    for (mu, c) in m {
        let grown = mu.with_part(a);
        add_term(&mut out, grown.clone(), c * q(grown.multiplicity(a) as i64));
        for v in mu.distinct_parts() {
            let nu = mu.remove_part(v).unwrap().with_part(v + a);
            let k = nu.multiplicity(v + a) as i64;
            add_term(&mut out, nu, c * q(k));
        }
    }
    out
}

/// `p_k · Σ c_λ s_λ` by adding connected border strips.
fn mn_terms(k: usize, f: &Terms) -> Terms {
    let mut out = Terms::new();
    for (lam, c) in f {
        for (mu, a) in strip_moves(lam, k, Direction::Add, 1) {
            add_term(&mut out, mu, c * q(a.sign()));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// public operations

pub fn convert(f: &SymElem, target: Basis) -> SymElem {
    with_tables(|t| t.convert(f, target))
}

/// `convert` with the degree cap enforced.
pub fn try_convert(f: &SymElem, target: Basis) -> Result<SymElem, SymError> {
    check_degree(f.degree().unwrap_or(0))?;
    Ok(convert(f, target))
}

/// Power-sum coefficients of `f`.
pub fn power_terms(f: &SymElem) -> Terms {
    with_tables(|t| t.power_of(f))
}

/// Builds an element from power-sum coefficients, expressed in `target`.
pub fn from_power_terms(terms: Terms, target: Basis) -> SymElem {
    let p = SymElem { basis: Basis::Power, terms };
    if target == Basis::Power {
        return p;
    }
    with_tables(|t| t.convert(&p, target))
}

/// Product `f·g`, expressed in the basis of `f`.
pub fn multiply(f: &SymElem, g: &SymElem) -> SymElem {
    if f.basis == g.basis && f.basis.multiplicative() {
        return SymElem { basis: f.basis, terms: union_product(&f.terms, &g.terms) };
    }
    with_tables(|t| {
        let a = t.power_of(f);
        let b = t.power_of(g);
        let prod = union_product(&a, &b);
        SymElem { basis: f.basis, terms: t.expand_power(&prod, f.basis) }
    })
}

/// `p_μ^⊥ p_ν` as a scalar times `p_{ν−μ}`, using `p_n^⊥ = n ∂/∂p_n`.
pub fn p_perp_p(mu: &Partition, nu: &Partition) -> Option<(Partition, Q)> {
    let mut rest = nu.clone();
    let mut c = Z::one();
    for (v, m) in mu.multiplicities() {
        let have = nu.multiplicity(v);
        if have < m {
            return None;
        }
        for i in 0..m {
            c *= Z::from(v) * Z::from(have - i);
            rest = rest.remove_part(v).unwrap();
        }
    }
    Some((rest, qz(c)))
}

fn hammond_terms(f: &Terms, g: &Terms) -> Terms {
    let mut out = Terms::new();
    for (mu, a) in f {
        for (nu, b) in g {
            if let Some((rest, c)) = p_perp_p(mu, nu) {
                add_term(&mut out, rest, a * b * c);
            }
        }
    }
    out
}

/// The Hammond operator `f^⊥ g`, expressed in the basis of `g`.
pub fn hammond(f: &SymElem, g: &SymElem) -> SymElem {
    with_tables(|t| {
        let a = t.power_of(f);
        let b = t.power_of(g);
        let r = hammond_terms(&a, &b);
        SymElem { basis: g.basis, terms: t.expand_power(&r, g.basis) }
    })
}

/// The Hall inner product, with `⟨m_λ, h_μ⟩ = δ_{λμ}`.
pub fn pairing(f: &SymElem, g: &SymElem) -> Q {
    let (a, b) = with_tables(|t| (t.power_of(f), t.power_of(g)));
    let mut acc = Q::zero();
    for (k, v) in &a {
        if let Some(w) = b.get(k) {
            acc += v * w * z_q(k);
        }
    }
    acc
}

/// `p_k · f` for `f` in the Schur basis, by adding connected `k`-strips.
pub fn mn_multiply(k: usize, f: &SymElem) -> SymElem {
    let s = if f.basis == Basis::Schur { f.clone() } else { convert(f, Basis::Schur) };
    SymElem { basis: Basis::Schur, terms: mn_terms(k, &s.terms) }
}

/// `p_k^⊥ f` for `f` in the Schur basis, by removing connected `k`-strips.
pub fn mn_perp(k: usize, f: &SymElem) -> SymElem {
    let s = if f.basis == Basis::Schur { f.clone() } else { convert(f, Basis::Schur) };
    let mut out = Terms::new();
    for (lam, c) in &s.terms {
        for (mu, a) in strip_moves(lam, k, Direction::Remove, 1) {
            add_term(&mut out, mu, c * q(a.sign()));
        }
    }
    SymElem { basis: Basis::Schur, terms: out }
}

/// The skew Schur function `s_{μ/λ} = s_λ^⊥ s_μ` in the Schur basis.
pub fn skew_schur(s: &SkewShape) -> SymElem {
    hammond(&SymElem::s(s.inner().clone()), &SymElem::s(s.outer().clone()))
}

/// Principal specialization `ps_n^1`, determined by `p_k ↦ n`.
pub fn principal_spec(f: &SymElem, n: i64) -> Q {
    let t = power_terms(f);
    let mut acc = Q::zero();
    for (k, c) in &t {
        acc += c * qz(num_traits::pow(Z::from(n), k.len()));
    }
    acc
}

/// `∏_{b∈λ} (n − c(b)) / h(b)`, the principal specialization of `s_{λ'}`.
pub fn hook_content_spec(lam: &Partition, n: i64) -> Q {
    let mut acc = Q::one();
    for (r, c) in lam.boxes() {
        let (content, hook) = lam.content_hook(r, c).unwrap();
        acc *= Q::new(Z::from(n - content), Z::from(hook as i64));
    }
    acc
}

/// `ps_n^1(h_m) = binom(n + m − 1, m)`, valid for every integer `n`.
pub fn ps_h(n: i64, m: i64) -> Z {
    if m < 0 {
        return Z::zero();
    }
    binom(n + m - 1, m)
}

/// `ps_n^1(s_{μ/λ})` via the Jacobi–Trudi determinant in the `h_k`.
pub fn principal_spec_skew(s: &SkewShape, n: i64) -> Z {
    let (outer, inner) = (s.outer(), s.inner());
    let l = outer.len();
    let mut m: Vec<Vec<Z>> = (0..l)
        .map(|i| (0..l).map(|j| ps_h(n, outer.get(i) as i64 - inner.get(j) as i64 - i as i64 + j as i64)).collect())
        .collect();
    bareiss_det(&mut m)
}

/// Determinant of a square integer matrix by fraction-free elimination.
pub fn bareiss_det(m: &mut [Vec<Z>]) -> Z {
    let n = m.len();
    if n == 0 {
        return Z::one();
    }
    let mut sign = Z::one();
    let mut prev = Z::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return Z::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// The antipode `p_k ↦ −p_k`, so that `S(h_n) = (−1)^n e_n`.
pub fn antipode(f: &SymElem) -> SymElem {
    let t = power_terms(f);
    let out: Terms = t.into_iter().map(|(k, v)| if k.len() % 2 == 1 { (k, -v) } else { (k, v) }).collect();
    from_power_terms(out, f.basis)
}

/// The standard involution ω with `ω(h_n) = e_n`.
pub fn omega(f: &SymElem) -> SymElem {
    let t = power_terms(f);
    let out: Terms = t.into_iter().map(|(k, v)| if (k.weight() - k.len()) % 2 == 1 { (k, -v) } else { (k, v) }).collect();
    from_power_terms(out, f.basis)
}

// ---------------------------------------------------------------------------
// polynomial oracle

/// A polynomial in finitely many variables with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyOracle {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Q>,
}

impl PolyOracle {
    pub fn zero(nvars: usize) -> Self {
        PolyOracle { nvars, terms: BTreeMap::new() }
    }

    pub fn from_terms(nvars: usize, it: impl IntoIterator<Item = (Vec<u32>, Q)>) -> Self {
        let mut p = PolyOracle::zero(nvars);
        for (e, c) in it {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    /// The variable `x_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        PolyOracle::from_terms(nvars, [(e, Q::one())])
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn add(&self, other: &PolyOracle) -> PolyOracle {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Q) -> PolyOracle {
        let mut out = PolyOracle::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &PolyOracle) -> PolyOracle {
        let mut out = PolyOracle::zero(self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let e: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Renames variable `i` to `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> PolyOracle {
        let mut out = PolyOracle::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut f = vec![0; self.nvars];
            for (i, &x) in e.iter().enumerate() {
                f[perm[i]] = x;
            }
            out.add_term(f, c.clone());
        }
        out
    }

    /// Evaluates at an integer point.
    pub fn eval(&self, point: &[i64]) -> Q {
        let mut acc = Q::zero();
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for (x, &k) in point.iter().zip(e) {
                v *= qz(num_traits::pow(Z::from(*x), k as usize));
            }
            acc += v;
        }
        acc
    }
}

fn multiset_permutations(vals: &[u32]) -> Vec<Vec<u32>> {
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for &v in vals {
        *counts.entry(v).or_insert(0) += 1;
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(vals.len());
    let mut cv: Vec<(u32, usize)> = counts.into_iter().collect();
    fn rec(cv: &mut Vec<(u32, usize)>, n: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in 0..cv.len() {
            if cv[i].1 > 0 {
                cv[i].1 -= 1;
                cur.push(cv[i].0);
                rec(cv, n, cur, out);
                cur.pop();
                cv[i].1 += 1;
            }
        }
    }
    rec(&mut cv, vals.len(), &mut cur, &mut out);
    out
}

/// Restricts `f` to `nvars` variables.
pub fn to_oracle(f: &SymElem, nvars: usize) -> PolyOracle {
    let m = convert(f, Basis::Monomial);
    let mut out = PolyOracle::zero(nvars);
    for (lam, c) in &m.terms {
        if lam.len() > nvars {
            continue;
        }
        let mut v: Vec<u32> = lam.parts().iter().map(|&x| x as u32).collect();
        v.resize(nvars, 0);
        for e in multiset_permutations(&v) {
            out.terms.insert(e, c.clone());
        }
    }
    out
}

/// Reads a symmetric polynomial back as a monomial-basis element.
pub fn from_oracle(p: &PolyOracle) -> Result<SymElem, SymError> {
    let mut out = Terms::new();
    let mut expected = 0usize;
    for (e, c) in &p.terms {
        let mut sorted = e.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        match p.terms.get(&sorted) {
            Some(d) if d == c => {}
            _ => return Err(SymError::NonSymmetric),
        }
        if &sorted == e {
            let lam = Partition::new(e.iter().map(|&x| x as usize).collect());
            expected += multiset_count(&sorted);
            out.insert(lam, c.clone());
        }
    }
    if expected != p.terms.len() {
        return Err(SymError::NonSymmetric);
    }
    Ok(SymElem { basis: Basis::Monomial, terms: out })
}

fn multiset_count(v: &[u32]) -> usize {
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for &x in v {
        *counts.entry(x).or_insert(0) += 1;
    }
    let mut acc: u128 = 1;
    let mut seen = 0u128;
    for m in counts.values() {
        for i in 1..=*m as u128 {
            seen += 1;
            acc = acc * seen / i;
        }
    }
    acc as usize
}

/// Renders an element as `basis: [(partition, coefficient)]` text, for diagnostics.
pub fn describe(f: &SymElem) -> String {
    alloc::format!("{f}")
}
