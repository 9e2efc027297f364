//! The Landweber–Novikov operators `D_λ` acting on symmetric functions and
//! on explicit polynomials, integral Steenrod operations built from them,
//! and the dual Hopf algebra `Z[b_1, b_2, …]`.
//!
//! `D_λ f` is the coefficient of `b_λ = b_{λ_1} b_{λ_2} ⋯` in the substitution
//! `x_i ↦ x_i + b_1 x_i² + b_2 x_i³ + ⋯`, so
//! `D_λ p_n = n! / ((n − l(λ))! ‖λ‖) · p_{n+|λ|}` and the Cartan formula holds.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::arith::{is_prime, q, qz, Q, Z};
use crate::symfunc::{from_power_terms, power_terms, Basis, PolyOracle, SymElem, Terms};
use crate::young::{display_order, partitions_of, Partition};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiffOpError {
    InexactDivision,
    NonIntegral,
    Parse(String),
    MissingPrime,
    PrimeMismatch(u64, u64),
    NotPrime(u64),
}

impl fmt::Display for DiffOpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiffOpError::InexactDivision => write!(f, "inexact division in the D_(k^n) recursion"),
            DiffOpError::NonIntegral => write!(f, "result has non-integral coefficients"),
            DiffOpError::Parse(s) => write!(f, "cannot parse operation: {s}"),
            DiffOpError::MissingPrime => write!(f, "P^n needs a prime (P^n@p or a modulus)"),
            DiffOpError::PrimeMismatch(a, b) => write!(f, "operations use different primes {a} and {b}"),
            DiffOpError::NotPrime(p) => write!(f, "{p} is not a prime"),
        }
    }
}

fn add_term(t: &mut Terms, k: Partition, c: Q) {
    if c.is_zero() {
        return;
    }
    let e = t.entry(k.clone()).or_insert_with(Q::zero);
    *e += c;
    if e.is_zero() {
        t.remove(&k);
    }
}

/// A finite sum `Σ c_λ D_λ` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct DiffOp {
    terms: BTreeMap<Partition, Z>,
}

impl DiffOp {
    pub fn zero() -> Self {
        DiffOp { terms: BTreeMap::new() }
    }

    pub fn identity() -> Self {
        Self::d(Partition::empty())
    }

    pub fn d(lam: impl Into<Partition>) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lam.into(), Z::one());
        DiffOp { terms }
    }

    /// `D_k = Σ x_i^{k+1} ∂_i`.
    pub fn dk(k: usize) -> Self {
        Self::d(Partition::row(k))
    }

    /// `SQ^n = D_{(1^n)}`.
    pub fn sq(n: usize) -> Self {
        Self::d(Partition::rect(1, n))
    }

    /// `D_{((p−1)^n)}`, the integral lift of `P^n` at the prime `p`.
    pub fn reduced_power(p: u64, n: usize) -> Self {
        Self::d(Partition::rect(p as usize - 1, n))
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Partition, Z)>) -> Self {
        let mut op = DiffOp::zero();
        for (k, c) in it {
            op.add_term(k, c);
        }
        op
    }

    fn add_term(&mut self, k: Partition, c: Z) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(k.clone()).or_insert_with(Z::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Z> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest degree `|λ|` of a term.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|k| k.weight()).max()
    }

    pub fn add(&self, other: &DiffOp) -> DiffOp {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Z) -> DiffOp {
        DiffOp::from_terms(self.terms.iter().map(|(k, v)| (k.clone(), v * c)))
    }
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| display_order(a.0, b.0));
        for (i, (k, c)) in v.into_iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            f.write_str("D[")?;
            for (j, x) in k.parts().iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// ---------------------------------------------------------------------------
// sub-multiset enumeration

fn mults_of(lam: &Partition) -> (Vec<usize>, Vec<usize>) {
    let m = lam.multiplicities();
    (m.iter().map(|x| x.0).collect(), m.iter().map(|x| x.1).collect())
}

/// Calls `f` with every count vector `c ≤ rem` with `Σ c ≤ max_len`.
fn for_each_sub(rem: &[usize], max_len: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(rem: &[usize], i: usize, left: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if i == rem.len() {
            f(cur);
            return;
        }
        for c in 0..=rem[i].min(left) {
            cur[i] = c;
            rec(rem, i + 1, left - c, cur, f);
        }
        cur[i] = 0;
    }
    let mut cur = vec![0; rem.len()];
    rec(rem, 0, max_len, &mut cur, f);
}

fn factorial_u(n: usize) -> Z {
    (1..=n).fold(Z::one(), |a, i| a * Z::from(i))
}

/// `a! / ((a − l)! ∏ c_v!)` with `l = Σ c_v`, the number of arrangements of
/// the chosen parts and `a − l` zeros.
fn arrangement_weight(a: usize, counts: &[usize]) -> Z {
    let l: usize = counts.iter().sum();
    let mut num = Z::one();
    for i in 0..l {
        num *= Z::from(a - i);
    }
    let den = counts.iter().fold(Z::one(), |acc, &c| acc * factorial_u(c));
    num / den
}

/// `D_λ p_ν` in the power-sum basis.
pub fn d_on_power(lam: &Partition, nu: &Partition) -> Terms {
    let (vals, mults) = mults_of(lam);
    let mut out = Terms::new();
    let parts = nu.parts();
    let mut suffix = vec![0usize; parts.len() + 1];
    for j in (0..parts.len()).rev() {
        suffix[j] = suffix[j + 1] + parts[j];
    }
    let mut acc = Vec::with_capacity(parts.len());
    let mut rem = mults.clone();
    d_rec(&vals, parts, &suffix, 0, &mut rem, &mut acc, Z::one(), &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn d_rec(
    vals: &[usize],
    parts: &[usize],
    suffix: &[usize],
    j: usize,
    rem: &mut Vec<usize>,
    acc: &mut Vec<usize>,
    coef: Z,
    out: &mut Terms,
) {
    let left: usize = rem.iter().sum();
    if left > suffix[j] {
        return;
    }
    if j == parts.len() {
        if left == 0 {
            add_term(out, Partition::new(acc.clone()), qz(coef));
        }
        return;
    }
    let n = parts[j];
    let snapshot = rem.clone();
    let mut choices: Vec<Vec<usize>> = Vec::new();
    for_each_sub(&snapshot, n, &mut |c| choices.push(c.to_vec()));
    for c in choices {
        let w = arrangement_weight(n, &c);
        let grow: usize = c.iter().zip(vals).map(|(a, v)| a * v).sum();
        for (r, x) in rem.iter_mut().zip(&c) {
            *r -= x;
        }
        acc.push(n + grow);
        d_rec(vals, parts, suffix, j + 1, rem, acc, &coef * w, out);
        acc.pop();
        for (r, x) in rem.iter_mut().zip(&c) {
            *r += x;
        }
    }
}

fn apply_power_terms(op: &DiffOp, t: &Terms) -> Terms {
    let mut out = Terms::new();
    for (lam, c) in &op.terms {
        let cq = qz(c.clone());
        for (nu, a) in t {
            for (rho, b) in d_on_power(lam, nu) {
                add_term(&mut out, rho, &cq * a * b);
            }
        }
    }
    out
}

/// The left action `D f`, expressed in the basis of `f`.
pub fn apply_sym(op: &DiffOp, f: &SymElem) -> SymElem {
    let t = power_terms(f);
    from_power_terms(apply_power_terms(op, &t), f.basis())
}

/// The adjoint action `D^⊥ f` under the Hall inner product.
pub fn apply_perp(op: &DiffOp, f: &SymElem) -> SymElem {
    let t = power_terms(f);
    let mut cache: BTreeMap<(Partition, Partition), Terms> = BTreeMap::new();
    let mut out = Terms::new();
    for (lam, c) in &op.terms {
        let cq = qz(c.clone());
        for (rho, a) in &t {
            let Some(d) = rho.weight().checked_sub(lam.weight()) else { continue };
            let zr = qz(Z::from(rho.z()));
            for nu in partitions_of(d) {
                let img = cache.entry((lam.clone(), nu.clone())).or_insert_with(|| d_on_power(lam, &nu));
                if let Some(v) = img.get(rho) {
                    let zn = qz(Z::from(nu.z()));
                    add_term(&mut out, nu, &cq * a * v * &zr / zn);
                }
            }
        }
    }
    from_power_terms(out, f.basis())
}

/// The literal differential-operator action on an explicit polynomial.
pub fn apply_oracle(op: &DiffOp, p: &PolyOracle) -> PolyOracle {
    let mut out = PolyOracle::zero(p.nvars());
    for (lam, c) in &op.terms {
        let (vals, mults) = mults_of(lam);
        let cq = qz(c.clone());
        for (e, a) in p.terms() {
            let mut suffix = vec![0usize; e.len() + 1];
            for i in (0..e.len()).rev() {
                suffix[i] = suffix[i + 1] + e[i] as usize;
            }
            let mut rem = mults.clone();
            let mut cur = e.clone();
            let base = &cq * a;
            oracle_rec(&vals, e, &suffix, 0, &mut rem, &mut cur, Z::one(), &base, &mut out);
        }
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn oracle_rec(
    vals: &[usize],
    e: &[u32],
    suffix: &[usize],
    i: usize,
    rem: &mut Vec<usize>,
    cur: &mut Vec<u32>,
    coef: Z,
    base: &Q,
    out: &mut PolyOracle,
) {
    let left: usize = rem.iter().sum();
    if left == 0 {
        out.add_term(cur.clone(), base * qz(coef));
        return;
    }
    if i == e.len() || left > suffix[i] {
        return;
    }
    let a = e[i] as usize;
    if a == 0 {
        oracle_rec(vals, e, suffix, i + 1, rem, cur, coef, base, out);
        return;
    }
    let snapshot = rem.clone();
    let mut choices: Vec<Vec<usize>> = Vec::new();
    for_each_sub(&snapshot, a, &mut |c| choices.push(c.to_vec()));
    for c in choices {
        let w = arrangement_weight(a, &c);
        let grow: usize = c.iter().zip(vals).map(|(x, v)| x * v).sum();
        for (r, x) in rem.iter_mut().zip(&c) {
            *r -= x;
        }
        cur[i] = (a + grow) as u32;
        oracle_rec(vals, e, suffix, i + 1, rem, cur, &coef * w, base, out);
        cur[i] = a as u32;
        for (r, x) in rem.iter_mut().zip(&c) {
            *r += x;
        }
    }
}

/// `(D_k ∘ D_l − D_l ∘ D_k)(probe)`.
pub fn lie_bracket(k: usize, l: usize, probe: &SymElem) -> SymElem {
    let a = apply_sym(&DiffOp::dk(k), &apply_sym(&DiffOp::dk(l), probe));
    let b = apply_sym(&DiffOp::dk(l), &apply_sym(&DiffOp::dk(k), probe));
    &a - &b
}

// ---------------------------------------------------------------------------
// coproducts on Sym

/// Elements of `Sym ⊗ Sym`, in the basis `p_μ ⊗ p_ν`.
pub type SymTensor = BTreeMap<(Partition, Partition), Q>;

fn add_tensor(t: &mut SymTensor, k: (Partition, Partition), c: Q) {
    if c.is_zero() {
        return;
    }
    let e = t.entry(k.clone()).or_insert_with(Q::zero);
    *e += c;
    if e.is_zero() {
        t.remove(&k);
    }
}

fn from_counts(vals: &[usize], counts: &[usize]) -> Partition {
    let mut parts = Vec::new();
    for (v, &c) in vals.iter().zip(counts) {
        parts.extend(std::iter::repeat_n(*v, c));
    }
    Partition::new(parts)
}

fn splits(lam: &Partition) -> Vec<(Partition, Partition, Z)> {
    let (vals, mults) = mults_of(lam);
    let mut out = Vec::new();
    for_each_sub(&mults, usize::MAX, &mut |c| {
        let rest: Vec<usize> = mults.iter().zip(c).map(|(m, x)| m - x).collect();
        let w = mults.iter().zip(c).fold(Z::one(), |a, (&m, &x)| a * crate::arith::binom(m as i64, x as i64));
        out.push((from_counts(&vals, c), from_counts(&vals, &rest), w));
    });
    out
}

/// The coproduct with every `p_n` primitive.
pub fn coproduct(f: &SymElem) -> SymTensor {
    let mut out = SymTensor::new();
    for (rho, c) in power_terms(f) {
        for (a, b, w) in splits(&rho) {
            add_tensor(&mut out, (a, b), &c * qz(w));
        }
    }
    out
}

/// `Δ(D)` applied to a tensor, with `Δ(D_λ) = Σ_{μ∪ν=λ} D_μ ⊗ D_ν`.
pub fn apply_tensor(op: &DiffOp, t: &SymTensor) -> SymTensor {
    let mut out = SymTensor::new();
    for (lam, c) in &op.terms {
        let (vals, mults) = mults_of(lam);
        let mut pairs = Vec::new();
        for_each_sub(&mults, usize::MAX, &mut |x| {
            let rest: Vec<usize> = mults.iter().zip(x).map(|(m, y)| m - y).collect();
            pairs.push((from_counts(&vals, x), from_counts(&vals, &rest)));
        });
        let cq = qz(c.clone());
        for ((l, r), a) in t {
            for (mu, nu) in &pairs {
                let left = d_on_power(mu, l);
                let right = d_on_power(nu, r);
                for (x, u) in &left {
                    for (y, v) in &right {
                        add_tensor(&mut out, (x.clone(), y.clone()), &cq * a * u * v);
                    }
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// pipelines

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stage {
    Op(DiffOp),
    /// `D_{(k^n)}` through `n D_{(k^n)} = Σ_i (−k−1)^{i−1} D_{ik} ∘ D_{(k^{n−i})}`.
    KPower { k: usize, n: usize },
}

/// A composition of operators, applied right to left.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct OpPipeline {
    stages: Vec<Stage>,
}

fn integral_basis(b: Basis) -> bool {
    b != Basis::Power
}

impl OpPipeline {
    pub fn identity() -> Self {
        OpPipeline { stages: Vec::new() }
    }

    pub fn from_stages(stages: Vec<Stage>) -> Self {
        OpPipeline { stages }
    }

    pub fn op(op: DiffOp) -> Self {
        OpPipeline { stages: vec![Stage::Op(op)] }
    }

    pub fn stages(&self) -> &[Stage] {
        &self.stages
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &OpPipeline) -> OpPipeline {
        let mut stages = self.stages.clone();
        stages.extend(inner.stages.iter().cloned());
        OpPipeline { stages }
    }

    pub fn apply(&self, f: &SymElem) -> Result<SymElem, DiffOpError> {
        let mut cur = f.clone();
        for st in self.stages.iter().rev() {
            cur = match st {
                Stage::Op(op) => apply_sym(op, &cur),
                Stage::KPower { k, n } => kpower_sym(*k, *n, &cur)?,
            };
        }
        Ok(cur)
    }

    pub fn apply_oracle(&self, p: &PolyOracle) -> Result<PolyOracle, DiffOpError> {
        let mut cur = p.clone();
        for st in self.stages.iter().rev() {
            cur = match st {
                Stage::Op(op) => apply_oracle(op, &cur),
                Stage::KPower { k, n } => kpower_oracle(*k, *n, &cur)?,
            };
        }
        Ok(cur)
    }
}

/// The pipeline computing `D_{(k^n)}` by the exact-division recursion.
pub fn d_power(k: usize, n: usize) -> OpPipeline {
    if n == 0 {
        return OpPipeline::identity();
    }
    OpPipeline { stages: vec![Stage::KPower { k, n }] }
}

fn kpower_sym(k: usize, n: usize, f: &SymElem) -> Result<SymElem, DiffOpError> {
    let check = integral_basis(f.basis()) && f.is_integral();
    let mut levels = vec![f.clone()];
    for m in 1..=n {
        let mut acc = SymElem::zero(f.basis());
        let mut sgn = Q::one();
        let step = q(-(k as i64) - 1);
        for i in 1..=m {
            let img = apply_sym(&DiffOp::dk(i * k), &levels[m - i]);
            acc.add_assign_scaled(&img, &sgn);
            sgn *= &step;
        }
        let r = acc.scale(&(Q::one() / q(m as i64)));
        if check && !r.is_integral() {
            return Err(DiffOpError::InexactDivision);
        }
        levels.push(r);
    }
    Ok(levels.pop().unwrap())
}

fn kpower_oracle(k: usize, n: usize, p: &PolyOracle) -> Result<PolyOracle, DiffOpError> {
    let check = p.terms().values().all(|c| c.is_integer());
    let mut levels = vec![p.clone()];
    for m in 1..=n {
        let mut acc = PolyOracle::zero(p.nvars());
        let mut sgn = Q::one();
        let step = q(-(k as i64) - 1);
        for i in 1..=m {
            let img = apply_oracle(&DiffOp::dk(i * k), &levels[m - i]);
            acc = acc.add(&img.scale(&sgn));
            sgn *= &step;
        }
        let r = acc.scale(&(Q::one() / q(m as i64)));
        if check && !r.terms().values().all(|c| c.is_integer()) {
            return Err(DiffOpError::InexactDivision);
        }
        levels.push(r);
    }
    Ok(levels.pop().unwrap())
}

// ---------------------------------------------------------------------------
// Steenrod operations

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OpFactor {
    D(Partition),
    /// `SQ^n = D_{(1^n)}`.
    SQ(usize),
    /// `P^n`, with an optional explicit prime.
    P { n: usize, prime: Option<u64> },
    /// The classical square `Sq^m`.
    Sq(usize),
}

/// A composition of named operations in written order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpExpr {
    factors: Vec<OpFactor>,
}

impl OpExpr {
    pub fn new(factors: Vec<OpFactor>) -> Self {
        OpExpr { factors }
    }

    pub fn factors(&self) -> &[OpFactor] {
        &self.factors
    }

    /// The prime forced by the factors, checked against `modulus` (0 for none).
    pub fn resolve_prime(&self, modulus: u64) -> Result<Option<u64>, DiffOpError> {
        let mut prime = if modulus == 0 { None } else { Some(modulus) };
        if let Some(p) = prime {
            if !is_prime(p) {
                return Err(DiffOpError::NotPrime(p));
            }
        }
        let mut needs = false;
        for f in &self.factors {
            let implied = match f {
                OpFactor::Sq(_) => Some(2),
                OpFactor::P { prime: Some(p), .. } => Some(*p),
                OpFactor::P { prime: None, .. } => {
                    needs = true;
                    None
                }
                _ => None,
            };
            if let Some(p) = implied {
                if !is_prime(p) {
                    return Err(DiffOpError::NotPrime(p));
                }
                match prime {
                    None => prime = Some(p),
                    Some(q) if q != p => return Err(DiffOpError::PrimeMismatch(q, p)),
                    _ => {}
                }
            }
        }
        if needs && prime.is_none() {
            return Err(DiffOpError::MissingPrime);
        }
        Ok(prime)
    }

    /// The integral lift as a pipeline, or `None` when some factor acts as zero.
    pub fn lift(&self, prime: Option<u64>) -> Result<Option<OpPipeline>, DiffOpError> {
        let mut stages = Vec::new();
        for f in &self.factors {
            let op = match f {
                OpFactor::D(l) => DiffOp::d(l.clone()),
                OpFactor::SQ(n) => DiffOp::sq(*n),
                OpFactor::P { n, prime: p } => {
                    let p = p.or(prime).ok_or(DiffOpError::MissingPrime)?;
                    DiffOp::reduced_power(p, *n)
                }
                OpFactor::Sq(m) => {
                    if m % 2 == 1 {
                        return Ok(None);
                    }
                    DiffOp::sq(m / 2)
                }
            };
            stages.push(Stage::Op(op));
        }
        Ok(Some(OpPipeline::from_stages(stages)))
    }
}

impl fmt::Display for OpFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpFactor::D(l) => {
                f.write_str("D[")?;
                for (j, x) in l.parts().iter().enumerate() {
                    if j > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str("]")
            }
            OpFactor::SQ(n) => write!(f, "SQ^{n}"),
            OpFactor::P { n, prime: Some(p) } => write!(f, "P^{n}@{p}"),
            OpFactor::P { n, prime: None } => write!(f, "P^{n}"),
            OpFactor::Sq(m) => write!(f, "Sq^{m}"),
        }
    }
}

impl fmt::Display for OpExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

fn perr(s: &str) -> DiffOpError {
    DiffOpError::Parse(s.to_string())
}

fn split_top(s: &str) -> Result<Vec<&str>, DiffOpError> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => {
                depth -= 1;
                if depth < 0 {
                    return Err(perr(s));
                }
            }
            '*' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(perr(s));
    }
    out.push(&s[start..]);
    Ok(out)
}

fn parse_usize(s: &str, whole: &str) -> Result<usize, DiffOpError> {
    s.trim().parse().map_err(|_| perr(whole))
}

fn parse_factor(s: &str, out: &mut Vec<OpFactor>) -> Result<(), DiffOpError> {
    let t = s.trim();
    if t.is_empty() {
        return Err(perr(s));
    }
    if let Some(body) = t.strip_prefix('(') {
        let close = body.rfind(')').ok_or_else(|| perr(s))?;
        let inner = &body[..close];
        let tail = body[close + 1..].trim();
        let reps = if tail.is_empty() {
            1
        } else {
            parse_usize(tail.strip_prefix('^').ok_or_else(|| perr(s))?, s)?
        };
        let sub = parse_op(inner)?;
        for _ in 0..reps {
            out.extend(sub.factors.iter().cloned());
        }
        return Ok(());
    }
    if let Some(body) = t.strip_prefix("D[") {
        let inner = body.strip_suffix(']').ok_or_else(|| perr(s))?;
        let parts: Result<Vec<usize>, _> =
            inner.split(',').map(str::trim).filter(|x| !x.is_empty()).map(|x| parse_usize(x, s)).collect();
        let parts = parts?;
        if parts.contains(&0) {
            return Err(perr(s));
        }
        out.push(OpFactor::D(Partition::new(parts)));
        return Ok(());
    }
    if let Some(body) = t.strip_prefix("D_") {
        out.push(OpFactor::D(Partition::row(parse_usize(body, s)?)));
        return Ok(());
    }
    if let Some(body) = t.strip_prefix("SQ^") {
        out.push(OpFactor::SQ(parse_usize(body, s)?));
        return Ok(());
    }
    if let Some(body) = t.strip_prefix("Sq^") {
        out.push(OpFactor::Sq(parse_usize(body, s)?));
        return Ok(());
    }
    if let Some(body) = t.strip_prefix("P^") {
        let (n, prime) = match body.split_once('@') {
            Some((a, b)) => (parse_usize(a, s)?, Some(b.trim().parse::<u64>().map_err(|_| perr(s))?)),
            None => (parse_usize(body, s)?, None),
        };
        out.push(OpFactor::P { n, prime });
        return Ok(());
    }
    Err(perr(s))
}

/// Parses `D[2,1]`, `D_k`, `SQ^n`, `P^n@p`, `P^n`, `Sq^m`, joined by `*`, with
/// `(…)^k` for repetition.
pub fn parse_op(s: &str) -> Result<OpExpr, DiffOpError> {
    let mut factors = Vec::new();
    for piece in split_top(s)? {
        parse_factor(piece, &mut factors)?;
    }
    Ok(OpExpr { factors })
}

/// Applies a named operation, reducing mod the resolved prime at the end.
pub fn steenrod(expr: &OpExpr, f: &SymElem, modulus: u64) -> Result<SymElem, DiffOpError> {
    let prime = expr.resolve_prime(modulus)?;
    let Some(pipe) = expr.lift(prime)? else {
        return Ok(SymElem::zero(f.basis()));
    };
    let r = pipe.apply(f)?;
    match prime {
        None => Ok(r),
        Some(p) => r.reduce_mod(p).map_err(|_| DiffOpError::NonIntegral),
    }
}

// ---------------------------------------------------------------------------
// the dual algebra Z[b_1, b_2, …]

/// Polynomials in the `b_k`, keyed by the partition of the monomial `b_λ`.
pub type BPoly = BTreeMap<Partition, Z>;
/// Elements of the tensor square, keyed by `(b_λ, b_μ)`.
pub type BTensor = BTreeMap<(Partition, Partition), Z>;

fn addz<K: Ord + Clone>(t: &mut BTreeMap<K, Z>, k: K, c: Z) {
    if c.is_zero() {
        return;
    }
    let e = t.entry(k.clone()).or_insert_with(Z::zero);
    *e += c;
    if e.is_zero() {
        t.remove(&k);
    }
}

/// `b_k`, with `b_0 = 1`.
pub fn b(k: usize) -> BPoly {
    let mut t = BPoly::new();
    t.insert(Partition::row(k), Z::one());
    t
}

pub fn bpoly_one() -> BPoly {
    b(0)
}

pub fn bpoly_mul(x: &BPoly, y: &BPoly) -> BPoly {
    let mut out = BPoly::new();
    for (a, u) in x {
        for (c, v) in y {
            addz(&mut out, a.union(c), u * v);
        }
    }
    out
}

pub fn bpoly_add(x: &BPoly, y: &BPoly) -> BPoly {
    let mut out = x.clone();
    for (k, v) in y {
        addz(&mut out, k.clone(), v.clone());
    }
    out
}

pub fn bpoly_scale(x: &BPoly, c: &Z) -> BPoly {
    let mut out = BPoly::new();
    for (k, v) in x {
        addz(&mut out, k.clone(), v * c);
    }
    out
}

pub fn tensor_mul(x: &BTensor, y: &BTensor) -> BTensor {
    let mut out = BTensor::new();
    for ((a, b1), u) in x {
        for ((c, d), v) in y {
            addz(&mut out, (a.union(c), b1.union(d)), u * v);
        }
    }
    out
}

fn tensor_add(x: &mut BTensor, y: &BTensor) {
    for (k, v) in y {
        addz(x, k.clone(), v.clone());
    }
}

/// Truncated power-series product over a coefficient ring.
fn series_mul<T: Clone>(a: &[T], b: &[T], deg: usize, mul: &dyn Fn(&T, &T) -> T, add: &dyn Fn(&T, &T) -> T, zero: &T) -> Vec<T> {
    let mut out = vec![zero.clone(); deg + 1];
    for (i, x) in a.iter().enumerate().take(deg + 1) {
        for (j, y) in b.iter().enumerate().take(deg + 1 - i) {
            out[i + j] = add(&out[i + j], &mul(x, y));
        }
    }
    out
}

fn bseries(deg: usize) -> Vec<BPoly> {
    (0..=deg).map(b).collect()
}

fn bseries_pow(s: &[BPoly], e: usize, deg: usize) -> Vec<BPoly> {
    let mut acc = vec![BPoly::new(); deg + 1];
    acc[0] = bpoly_one();
    for _ in 0..e {
        acc = series_mul(&acc, s, deg, &bpoly_mul, &bpoly_add, &BPoly::new());
    }
    acc
}

/// `(b)^j_m`, the coefficient of `t^m` in `(Σ_{i≥0} b_i t^i)^j`.
pub fn bracket_power(j: usize, m: usize) -> BPoly {
    bseries_pow(&bseries(m), j, m).swap_remove(m)
}

/// `Δ(b_k) = Σ_{i=0}^k (b)^{i+1}_{k−i} ⊗ b_i`.
pub fn comult_b(k: usize) -> BTensor {
    let mut out = BTensor::new();
    for i in 0..=k {
        for (lam, c) in bracket_power(i + 1, k - i) {
            addz(&mut out, (lam, Partition::row(i)), c);
        }
    }
    out
}

/// `Δ(b_k)` as the coefficient of `t^{k+1}` in `b^{(2)}(b^{(1)}(t))`.
pub fn comult_b_composition(k: usize) -> BTensor {
    let deg = k + 1;
    let inner: Vec<BTensor> = (0..=deg)
        .map(|j| {
            let mut t = BTensor::new();
            if j >= 1 {
                t.insert((Partition::row(j - 1), Partition::empty()), Z::one());
            }
            t
        })
        .collect();
    let mut one = vec![BTensor::new(); deg + 1];
    one[0].insert((Partition::empty(), Partition::empty()), Z::one());
    let add = |a: &BTensor, b: &BTensor| {
        let mut o = a.clone();
        tensor_add(&mut o, b);
        o
    };
    let mut power = one;
    let mut total = BTensor::new();
    for i in 0..=k {
        power = series_mul(&power, &inner, deg, &tensor_mul, &add, &BTensor::new());
        let mut outer = BTensor::new();
        outer.insert((Partition::empty(), Partition::row(i)), Z::one());
        tensor_add(&mut total, &tensor_mul(&outer, &power[deg]));
    }
    total
}

/// `Δ` extended multiplicatively.
pub fn comult_poly(p: &BPoly) -> BTensor {
    let mut out = BTensor::new();
    for (lam, c) in p {
        let mut acc = BTensor::new();
        acc.insert((Partition::empty(), Partition::empty()), Z::one());
        for &part in lam.parts() {
            acc = tensor_mul(&acc, &comult_b(part));
        }
        for (k, v) in acc {
            addz(&mut out, k, v * c);
        }
    }
    out
}

/// The counit: the constant term.
pub fn counit(p: &BPoly) -> Z {
    p.get(&Partition::empty()).cloned().unwrap_or_else(Z::zero)
}

/// `S(b_k)`, the coefficient of `t^k` in `(1/(k+1)) (t/b(t))^{k+1}`.
pub fn antipode_b(k: usize) -> BPoly {
    let s = bseries(k);
    let mut inv = vec![BPoly::new(); k + 1];
    inv[0] = bpoly_one();
    for m in 1..=k {
        let mut acc = BPoly::new();
        for j in 1..=m {
            acc = bpoly_add(&acc, &bpoly_mul(&s[j], &inv[m - j]));
        }
        inv[m] = bpoly_scale(&acc, &-Z::one());
    }
    let pw = bseries_pow(&inv, k + 1, k);
    let d = Z::from(k + 1);
    pw[k]
        .iter()
        .map(|(lam, c)| {
            assert!((c % &d).is_zero(), "Lagrange inversion coefficient not divisible");
            (lam.clone(), c / &d)
        })
        .collect()
}

/// The antipode extended multiplicatively.
pub fn antipode_poly(p: &BPoly) -> BPoly {
    let mut out = BPoly::new();
    for (lam, c) in p {
        let mut acc = bpoly_one();
        for &part in lam.parts() {
            acc = bpoly_mul(&acc, &antipode_b(part));
        }
        out = bpoly_add(&out, &bpoly_scale(&acc, c));
    }
    out
}

/// `m(S ⊗ 1)Δ(b_k)` and `m(1 ⊗ S)Δ(b_k)`.
pub fn antipode_axioms(k: usize) -> (BPoly, BPoly) {
    let d = comult_b(k);
    let mut left = BPoly::new();
    let mut right = BPoly::new();
    for ((a, c), v) in &d {
        let one_a = BPoly::from([(a.clone(), Z::one())]);
        let one_c = BPoly::from([(c.clone(), Z::one())]);
        left = bpoly_add(&left, &bpoly_scale(&bpoly_mul(&antipode_poly(&one_a), &one_c), v));
        right = bpoly_add(&right, &bpoly_scale(&bpoly_mul(&one_a, &antipode_poly(&one_c)), v));
    }
    (left, right)
}

/// `b(S(b)(t))` truncated at `t^{deg+1}`, where `S(b)(t) = Σ S(b_k) t^{k+1}`.
pub fn inverse_composition(deg: usize) -> Vec<BPoly> {
    let n = deg + 1;
    let sb: Vec<BPoly> = (0..=n).map(|j| if j == 0 { BPoly::new() } else { antipode_b(j - 1) }).collect();
    let mut out = vec![BPoly::new(); n + 1];
    let mut power = vec![BPoly::new(); n + 1];
    power[0] = bpoly_one();
    for k in 0..n {
        power = series_mul(&power, &sb, n, &bpoly_mul, &bpoly_add, &BPoly::new());
        for (j, c) in power.iter().enumerate() {
            out[j] = bpoly_add(&out[j], &bpoly_mul(&b(k), c));
        }
    }
    out
}

/// Iterated coproduct checks: `(Δ ⊗ 1)Δ(b_k) = (1 ⊗ Δ)Δ(b_k)`.
pub fn coassociative(k: usize) -> bool {
    type T3 = BTreeMap<(Partition, Partition, Partition), Z>;
    let d = comult_b(k);
    let mut left = T3::new();
    let mut right = T3::new();
    for ((a, c), v) in &d {
        let one_a = BPoly::from([(a.clone(), Z::one())]);
        let one_c = BPoly::from([(c.clone(), Z::one())]);
        for ((x, y), w) in comult_poly(&one_a) {
            addz(&mut left, (x, y, c.clone()), &w * v);
        }
        for ((x, y), w) in comult_poly(&one_c) {
            addz(&mut right, (a.clone(), x, y), &w * v);
        }
    }
    left == right
}

/// Coefficients of `b_λ ⊗ h_k` in the coaction on `h_n`, from the closed formula.
pub fn coaction_h(n: usize) -> BTreeMap<(Partition, usize), Z> {
    let mut out = BTreeMap::new();
    for k in 0..=n {
        for lam in partitions_of(n - k) {
            let l = lam.len();
            if l > k {
                continue;
            }
            let num = factorial_u(k);
            let den = Z::from(lam.norm_factorial()) * factorial_u(k - l);
            addz(&mut out, (lam, k), num / den);
        }
    }
    out
}

/// The same coefficients from `h(t) ↦ h^{(2)}(b^{(1)}(t)) = Σ_k h_k b(t)^k`.
pub fn coaction_h_series(n: usize) -> BTreeMap<(Partition, usize), Z> {
    let mut out = BTreeMap::new();
    for k in 0..=n {
        for (lam, c) in bracket_power(k, n - k) {
            addz(&mut out, (lam, k), c);
        }
    }
    out
}

/// Text form of a `b`-polynomial, e.g. `2*b1^2 - b2`.
pub fn format_bpoly(p: &BPoly) -> String {
    use core::fmt::Write;
    if p.is_empty() {
        return "0".to_string();
    }
    let mut s = String::new();
    let mut v: Vec<_> = p.iter().collect();
    v.sort_by(|a, b| display_order(a.0, b.0));
    for (i, (lam, c)) in v.into_iter().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        if lam.is_empty() {
            let _ = write!(s, "{a}");
            continue;
        }
        if !a.is_one() {
            let _ = write!(s, "{a}*");
        }
        for (j, (val, m)) in lam.multiplicities().into_iter().enumerate() {
            if j > 0 {
                s.push('*');
            }
            let _ = write!(s, "b{val}");
            if m > 1 {
                let _ = write!(s, "^{m}");
            }
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::{pairing, to_oracle};

    fn s_int(v: &[(&[usize], i64)]) -> SymElem {
        SymElem::from_int_terms(Basis::Schur, v.iter().map(|(p, c)| (Partition::from(*p), *c)))
    }

    #[test]
    fn apply_sym_examples() {
        assert_eq!(apply_sym(&DiffOp::dk(1), &SymElem::s([1, 1])), s_int(&[(&[2, 1], 1), (&[1, 1, 1], -2)]));
        assert_eq!(
            apply_sym(&DiffOp::dk(2), &SymElem::s([1, 1])),
            s_int(&[(&[3, 1], 1), (&[2, 2], -1), (&[2, 1, 1], -1), (&[1, 1, 1, 1], 2)])
        );
        assert!(apply_sym(&DiffOp::d([1, 1]), &SymElem::p([1])).is_zero());
        assert!(apply_sym(&DiffOp::d([2, 1]), &SymElem::p([1])).is_zero());
        assert_eq!(apply_sym(&DiffOp::d([1, 1]), &SymElem::p([2])), SymElem::p([4]));
        assert_eq!(apply_sym(&DiffOp::d([1, 1]), &SymElem::s([2])), s_int(&[(&[4], 1), (&[3, 1], -1), (&[2, 2], 1)]));
        assert_eq!(apply_sym(&DiffOp::identity(), &SymElem::s([2, 1])), SymElem::s([2, 1]));
    }

    #[test]
    fn apply_perp_examples() {
        let lhs = pairing(&apply_sym(&DiffOp::dk(1), &SymElem::s([1])), &SymElem::s([2]));
        let rhs = pairing(&SymElem::s([1]), &apply_perp(&DiffOp::dk(1), &SymElem::s([2])));
        assert_eq!(lhs, rhs);
        assert!(apply_perp(&DiffOp::dk(3), &SymElem::s([2])).is_zero());
        let img = apply_perp(&DiffOp::dk(2), &SymElem::s([3, 1]));
        for mu in partitions_of(2) {
            let a = pairing(&apply_sym(&DiffOp::dk(2), &SymElem::s(mu.clone())), &SymElem::s([3, 1]));
            assert_eq!(img.coeff(&mu), a);
        }
    }

    #[test]
    fn apply_oracle_examples() {
        let x = |i| PolyOracle::var(2, i);
        let f = x(0).add(&x(1));
        let want = x(0).mul(&x(0)).add(&x(1).mul(&x(1)));
        assert_eq!(apply_oracle(&DiffOp::dk(1), &f), want);
        assert!(apply_oracle(&DiffOp::d([1, 1]), &x(0)).is_zero());
        let g = x(0).mul(&x(1));
        assert_eq!(apply_oracle(&DiffOp::d([1, 1]), &g), g.mul(&g));
    }

    #[test]
    fn oracle_matches_sym() {
        let f = SymElem::s([2, 1]);
        for lam in [vec![1], vec![1, 1], vec![2, 1], vec![3]] {
            let op = DiffOp::d(lam.clone());
            assert_eq!(to_oracle(&apply_sym(&op, &f), 4), apply_oracle(&op, &to_oracle(&f, 4)), "{lam:?}");
        }
    }

    #[test]
    fn d_power_examples() {
        let r = d_power(1, 2).apply(&SymElem::s([2])).unwrap();
        assert_eq!(r, s_int(&[(&[4], 1), (&[3, 1], -1), (&[2, 2], 1)]));
        assert_eq!(d_power(1, 0).apply(&SymElem::s([2, 1])).unwrap(), SymElem::s([2, 1]));
        let f = SymElem::s([2, 1]);
        assert_eq!(d_power(2, 1).apply(&f).unwrap(), apply_sym(&DiffOp::dk(2), &f));
    }

    #[test]
    fn steenrod_examples() {
        let sq1 = parse_op("SQ^1").unwrap();
        assert_eq!(steenrod(&sq1, &SymElem::s([1]), 0).unwrap(), s_int(&[(&[2], 1), (&[1, 1], -1)]));
        let sq2 = parse_op("Sq^2").unwrap();
        assert!(steenrod(&sq2, &SymElem::s([2, 1]), 2).unwrap().is_zero());
        assert_eq!(
            apply_sym(&DiffOp::sq(1), &SymElem::s([2, 1])),
            s_int(&[(&[3, 1], 2), (&[2, 1, 1], -2)])
        );
        let p1 = parse_op("P^1@3").unwrap();
        assert_eq!(
            steenrod(&p1, &SymElem::s([1, 1]), 0).unwrap(),
            s_int(&[(&[3, 1], 1), (&[2, 2], 2), (&[2, 1, 1], 2), (&[1, 1, 1, 1], 2)])
        );
    }

    #[test]
    fn parse_forms() {
        let e = parse_op("SQ^2*SQ^1").unwrap();
        assert_eq!(e.factors(), &[OpFactor::SQ(2), OpFactor::SQ(1)]);
        let e = parse_op("(Sq^2)^3").unwrap();
        assert_eq!(e.factors().len(), 3);
        assert_eq!(parse_op("D[2,1]").unwrap().factors(), &[OpFactor::D(Partition::from([2, 1]))]);
        assert_eq!(parse_op("P^2@5").unwrap().factors(), &[OpFactor::P { n: 2, prime: Some(5) }]);
        assert!(parse_op("Q^2").is_err());
        assert!(parse_op("D[2,0]").is_err());
        assert_eq!(parse_op("P^1").unwrap().resolve_prime(0), Err(DiffOpError::MissingPrime));
        assert_eq!(parse_op("P^1@3*Sq^2").unwrap().resolve_prime(0), Err(DiffOpError::PrimeMismatch(3, 2)));
        assert_eq!(parse_op("P^1@4").unwrap().resolve_prime(0), Err(DiffOpError::NotPrime(4)));
    }

    #[test]
    fn dual_examples() {
        let one = Partition::empty;
        assert_eq!(comult_b(1), BTensor::from([((Partition::row(1), one()), Z::one()), ((one(), Partition::row(1)), Z::one())]));
        assert_eq!(
            comult_b(2),
            BTensor::from([
                ((Partition::row(2), one()), Z::one()),
                ((Partition::row(1), Partition::row(1)), Z::from(2)),
                ((one(), Partition::row(2)), Z::one()),
            ])
        );
        assert_eq!(antipode_b(2), BPoly::from([(Partition::from([1, 1]), Z::from(2)), (Partition::row(2), Z::from(-1))]));
        assert_eq!(format_bpoly(&antipode_b(2)), "-b2 + 2*b1^2");
        for k in 0..5 {
            assert_eq!(comult_b(k), comult_b_composition(k));
        }
    }

    #[test]
    fn coaction_examples() {
        let c1 = coaction_h(1);
        assert_eq!(c1, BTreeMap::from([((Partition::empty(), 1), Z::one())]));
        assert_eq!(coaction_h(3)[&(Partition::row(1), 2)], Z::from(2));
        assert!(!coaction_h(4).contains_key(&(Partition::from([1, 1]), 1)));
        for n in 0..6 {
            assert_eq!(coaction_h(n), coaction_h_series(n));
        }
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(lie_bracket(1, 2, &SymElem::p([1])), SymElem::p([4]));
        assert!(lie_bracket(2, 2, &SymElem::s([2, 1])).is_zero());
        assert_eq!(lie_bracket(2, 1, &SymElem::p([1])), -SymElem::p([4]));
    }
}
