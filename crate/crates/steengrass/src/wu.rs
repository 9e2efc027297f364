//! Expansion of `m_{(1^k p^n)}` in the elementary basis: the direct route,
//! the two-alphabet coefficients `β_λ^{n,k}` with their recurrences, and the
//! mod-p closed forms.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::{binom, is_prime, qz, residue, residue_q, to_integer, Q, Z};
use crate::diffop::{apply_sym, DiffOp};
use crate::symfunc::{check_degree, convert, multiply, Basis, SymElem, SymError};
use crate::young::{partitions_of, Partition};

/// The partition `(1^k p^n)`.
pub fn wu_shape(p: usize, n: usize, k: usize) -> Partition {
    let mut parts = vec![p; n];
    parts.extend(std::iter::repeat_n(1, k));
    Partition::new(parts)
}

/// `α_λ^{n,k}`: the elementary expansion of `m_{(1^k p^n)}`, by basis conversion.
pub fn alpha_direct(p: usize, n: usize, k: usize) -> Result<BTreeMap<Partition, Z>, SymError> {
    check_degree(p * n + k)?;
    let e = convert(&SymElem::m(wu_shape(p, n, k)), Basis::Elementary);
    e.integer_terms()
}

/// `(pn+k)/(n+k) · binom(n+k, n)`, the magnitude of the coefficient of `e_{pn+k}`.
pub fn e_top_magnitude(p: usize, n: usize, k: usize) -> Z {
    if n + k == 0 {
        return Z::one();
    }
    let v = qz(binom((n + k) as i64, n as i64)) * Q::new(Z::from(p * n + k), Z::from(n + k));
    to_integer(&v).expect("integral top coefficient")
}

/// The coefficient of `e_{pn+k}` in `m_{(1^k p^n)}`, with sign `(−1)^{(p−1)n}`.
pub fn e_top_coefficient(p: usize, n: usize, k: usize) -> Z {
    let m = e_top_magnitude(p, n, k);
    if (p - 1) * n % 2 == 1 {
        -m
    } else {
        m
    }
}

/// The mod-2 expansion `Σ_{i=0}^n binom(n+k−i−1, n−i) e_i e_{2n+k−i}`.
pub fn wu_formula(n: usize, k: usize) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    for i in 0..=n {
        let c = residue(&binom((n + k) as i64 - i as i64 - 1, (n - i) as i64), 2);
        if c != 0 {
            out.insert(Partition::new(vec![2 * n + k - i, i]), c);
        }
    }
    out
}

/// Partitions of `s` with at most `len` parts.
pub fn partitions_with_len(s: usize, len: usize) -> Vec<Partition> {
    partitions_of(s).into_iter().filter(|p| p.len() <= len).collect()
}

/// Count vectors `d ≤ m` with `Σ d = s`, each with weight `∏ binom(m_v, d_v)`.
fn decrement_choices(mu: &Partition, s: usize) -> Vec<(Partition, Z)> {
    let mults = mu.multiplicities();
    let mut out = Vec::new();
    let mut d = vec![0usize; mults.len()];
    fn rec(mults: &[(usize, usize)], i: usize, left: usize, d: &mut Vec<usize>, out: &mut Vec<(Partition, Z)>) {
        if i == mults.len() {
            if left == 0 {
                let mut parts = Vec::new();
                let mut w = Z::one();
                for (j, &(v, m)) in mults.iter().enumerate() {
                    parts.extend(std::iter::repeat_n(v, m - d[j]));
                    parts.extend(std::iter::repeat_n(v - 1, d[j]));
                    w *= binom(m as i64, d[j] as i64);
                }
                out.push((Partition::new(parts), w));
            }
            return;
        }
        for c in 0..=mults[i].1.min(left) {
            d[i] = c;
            rec(mults, i + 1, left - c, d, out);
        }
        d[i] = 0;
    }
    rec(&mults, 0, s, &mut d, &mut out);
    out
}

/// Number of ways to reach `rho` by subtracting 1 from `s` parts of `mu`.
pub fn decrement_count(mu: &Partition, s: usize, rho: &Partition) -> Z {
    decrement_choices(mu, s).into_iter().filter(|(r, _)| r == rho).map(|(_, w)| w).sum()
}

/// The relation obtained from `H_{l+1}^⊥`: pairs `(μ, c_{λμ})` with `Σ c β_μ = 0`,
/// restricted to partitions with at most `p − 1` parts.
pub fn relation_terms(p: usize, lam: &Partition) -> Vec<(Partition, Z)> {
    let l = lam.len();
    let rho = lam.subtract_one();
    let r = rho.len();
    let mut out: BTreeMap<Partition, Z> = BTreeMap::new();
    for extra in [l, l + 1] {
        for mask in 0u32..(1u32 << r) {
            let t = mask.count_ones() as usize;
            if t > extra {
                continue;
            }
            let mut parts: Vec<usize> = rho.parts().iter().enumerate().map(|(i, &x)| x + ((mask >> i) & 1) as usize).collect();
            parts.extend(std::iter::repeat_n(1, extra - t));
            let mu = Partition::new(parts);
            if mu.len() > p - 1 || out.contains_key(&mu) {
                continue;
            }
            let c = decrement_count(&mu, extra, &rho);
            if !c.is_zero() {
                out.insert(mu, c);
            }
        }
    }
    out.into_iter().collect()
}

/// The displayed product `∏_{j=2}^{k} binom(m_{j−1}, Σ_{t≥j} l_t − Σ_{t≥j} m_t)`, with `k = λ_1`.
pub fn c_closed(lam: &Partition, mu: &Partition) -> Z {
    let k = lam.largest();
    let mut acc = Z::one();
    for j in 2..=k {
        let ls: usize = (j..=k).map(|t| lam.multiplicity(t)).sum();
        let ms: usize = (j..=k).map(|t| mu.multiplicity(t)).sum();
        acc *= binom(mu.multiplicity(j - 1) as i64, ls as i64 - ms as i64);
    }
    acc
}

/// Memoized `β_λ^{n,k}` for a fixed integer `p ≥ 2`.
#[derive(Clone, Debug)]
pub struct BetaTable {
    p: usize,
    base: BTreeMap<(Partition, usize), Z>,
    memo: BTreeMap<(Partition, usize, usize), Z>,
}

impl BetaTable {
    pub fn new(p: usize) -> Self {
        assert!(p >= 2, "p must be at least 2");
        BetaTable { p, base: BTreeMap::new(), memo: BTreeMap::new() }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    fn vanishes(&self, lam: &Partition, n: usize) -> bool {
        lam.len() > self.p - 1 || lam.weight() > n * (self.p - 1)
    }

    /// `β_λ^{n,0}`, from the length-increasing relations and the shift rule at length `p − 1`.
    pub fn beta_base(&mut self, lam: &Partition, n: usize) -> Z {
        if self.vanishes(lam, n) {
            return Z::zero();
        }
        if n == 0 {
            return Z::one();
        }
        if lam.is_empty() {
            return e_top_coefficient(self.p, n, 0);
        }
        if let Some(v) = self.base.get(&(lam.clone(), n)) {
            return v.clone();
        }
        let v = if lam.len() == self.p - 1 {
            self.beta_base(&lam.subtract_one(), n - 1)
        } else {
            let mut acc = Z::zero();
            let mut diag = Z::zero();
            for (mu, c) in relation_terms(self.p, lam) {
                if &mu == lam {
                    diag = c;
                } else {
                    acc += c * self.beta_base(&mu, n);
                }
            }
            assert!(diag.is_one(), "diagonal relation coefficient must be 1");
            -acc
        };
        self.base.insert((lam.clone(), n), v.clone());
        v
    }

    /// `β_λ^{n,k}` via `β^{n,k} = β^{n,k−1} + (−1)^{p−1} β^{n−1,k}`.
    pub fn beta(&mut self, lam: &Partition, n: usize, k: usize) -> Z {
        if self.vanishes(lam, n) {
            return Z::zero();
        }
        if k == 0 {
            return self.beta_base(lam, n);
        }
        if n == 0 {
            return if lam.is_empty() { Z::one() } else { Z::zero() };
        }
        if let Some(v) = self.memo.get(&(lam.clone(), n, k)) {
            return v.clone();
        }
        let a = self.beta(lam, n, k - 1);
        let b = self.beta(lam, n - 1, k);
        let v = if self.p.is_multiple_of(2) { a - b } else { a + b };
        self.memo.insert((lam.clone(), n, k), v.clone());
        v
    }

    /// `α_λ^{n,k} = Σ_i β_{λ∖i}^{n,k}` over the distinct parts `i` of `λ`.
    pub fn alpha(&mut self, lam: &Partition, n: usize, k: usize) -> Z {
        if lam.weight() != self.p * n + k {
            return Z::zero();
        }
        if lam.is_empty() {
            return Z::one();
        }
        let mut acc = Z::zero();
        for i in lam.distinct_parts() {
            acc += self.beta(&lam.remove_part(i).unwrap(), n, k);
        }
        acc
    }

    /// Nonzero `β_ν^{n,k}`, keyed by `ν`.
    pub fn beta_slice(&mut self, n: usize, k: usize) -> BTreeMap<Partition, Z> {
        let mut out = BTreeMap::new();
        let top = (n * (self.p - 1)).min(self.p * n + k);
        for s in 0..=top {
            for nu in partitions_with_len(s, self.p - 1) {
                let v = self.beta(&nu, n, k);
                if !v.is_zero() {
                    out.insert(nu, v);
                }
            }
        }
        out
    }

    /// All nonzero `α_λ^{n,k}`, assembled from the `β` slice.
    pub fn alpha_expansion(&mut self, n: usize, k: usize) -> BTreeMap<Partition, Z> {
        let total = self.p * n + k;
        let slice = self.beta_slice(n, k);
        let mut out = BTreeMap::new();
        if total == 0 {
            out.insert(Partition::empty(), Z::one());
            return out;
        }
        for nu in slice.keys() {
            if nu.weight() >= total {
                continue;
            }
            let lam = nu.with_part(total - nu.weight());
            if out.contains_key(&lam) {
                continue;
            }
            let v = self.alpha(&lam, n, k);
            if !v.is_zero() {
                out.insert(lam, v);
            }
        }
        out
    }

    /// Fills the memo for `n ≤ n_max`, `k ≤ k_max`.
    pub fn populate(&mut self, n_max: usize, k_max: usize) {
        for n in 0..=n_max {
            for k in 0..=k_max {
                self.beta_slice(n, k);
            }
        }
    }

    /// Nonzero stored entries `(λ, n, k) → β`, including the `k = 0` base values.
    pub fn entries(&self) -> BTreeMap<(Partition, usize, usize), Z> {
        let mut out: BTreeMap<_, _> = self.memo.iter().filter(|(_, v)| !v.is_zero()).map(|(k, v)| (k.clone(), v.clone())).collect();
        for ((lam, n), v) in &self.base {
            if !v.is_zero() {
                out.insert((lam.clone(), *n, 0), v.clone());
            }
        }
        out
    }
}

/// A table populated for all `n ≤ n_max`, `k ≤ k_max`.
pub fn beta_table(p: usize, n_max: usize, k_max: usize) -> BetaTable {
    let mut t = BetaTable::new(p);
    t.populate(n_max, k_max);
    t
}

/// `β_λ^{n,0}` from a fresh table.
pub fn beta_base(p: usize, lam: &Partition, n: usize) -> Z {
    BetaTable::new(p).beta_base(lam, n)
}

/// `β_λ^{n,k}` mod `p` from `Σ_{i=n_0}^{n_1} β_λ^{i,0} binom(n+k−i−1, n−i)`.
pub fn beta_mod_p(table: &mut BetaTable, lam: &Partition, n: usize, k: usize) -> Result<u64, SymError> {
    let p = table.p();
    if !is_prime(p as u64) {
        return Err(SymError::NotPrime(p as u64));
    }
    let n0 = lam.weight().div_ceil(p - 1);
    let n1 = lam.largest();
    let mut acc = Z::zero();
    for i in n0..=n1 {
        let b = table.beta_base(lam, i);
        acc += b * binom((n + k) as i64 - i as i64 - 1, n as i64 - i as i64);
    }
    Ok(residue(&acc, p as u64))
}

/// The mod-3 closed form `Σ_{j=⌈i/2⌉}^{i} (−1)^{j−1} (2i/j) binom(j, i−j) binom(n+k−j−1, n−j)`.
pub fn beta_mod3_closed(i: usize, n: usize, k: usize) -> u64 {
    let mut acc = Q::zero();
    for j in i.div_ceil(2).max(1)..=i {
        let s = if j % 2 == 1 { 1 } else { -1 };
        let t = Q::new(Z::from(2 * i as i64 * s), Z::from(j as i64))
            * qz(binom(j as i64, (i - j) as i64))
            * qz(binom((n + k) as i64 - j as i64 - 1, n as i64 - j as i64));
        acc += t;
    }
    residue_q(&acc, 3).expect("denominator prime to 3")
}

/// The mod-5 closed form `((2n+k−3)/(n−1)) binom(n+k−3, n−2)` for `α_{(1^2 2 (5n+k−4))}^{n,k}`, `n ≥ 3`.
pub fn alpha_mod5_closed(n: usize, k: usize) -> Option<u64> {
    let v = Q::new(Z::from(2 * n + k - 3), Z::from(n - 1)) * qz(binom((n + k) as i64 - 3, n as i64 - 2));
    residue_q(&v, 5)
}

/// Two-alphabet elements `Σ c e_λ ē_j`, keyed by `(λ, j)`.
pub type TwoAlphabet = BTreeMap<(Partition, usize), Z>;

fn add_two(t: &mut TwoAlphabet, key: (Partition, usize), c: Z) {
    if c.is_zero() {
        return;
    }
    let e = t.entry(key.clone()).or_insert_with(Z::zero);
    *e += c;
    if e.is_zero() {
        t.remove(&key);
    }
}

/// `H_i^⊥ (e_λ ē_j) = Σ_{|S|=i} e_{λ−S} ē_j + Σ_{|S|=i−1} e_{λ−S} ē_{j−1}`.
pub fn h_perp_two(i: usize, f: &TwoAlphabet) -> TwoAlphabet {
    let mut out = TwoAlphabet::new();
    for ((lam, j), c) in f {
        for (r, w) in decrement_choices(lam, i) {
            add_two(&mut out, (r, *j), c * w);
        }
        if i >= 1 && *j >= 1 {
            for (r, w) in decrement_choices(lam, i - 1) {
                add_two(&mut out, (r, j - 1), c * w);
            }
        }
    }
    out
}

/// `m̄_{(1^k p^n)}`: split off the largest part for `k ≥ n(p−2)`, then lower `k` by `H_1^⊥`.
pub fn two_alphabet_m(p: usize, n: usize, k: usize) -> Result<TwoAlphabet, SymError> {
    let k0 = k.max(n * (p - 2));
    let alpha = alpha_direct(p, n, k0)?;
    let mut cur = TwoAlphabet::new();
    for (lam, c) in alpha {
        let top = lam.largest();
        let rest = lam.remove_part(top).unwrap_or_else(Partition::empty);
        add_two(&mut cur, (rest, top), c);
    }
    for _ in k..k0 {
        cur = h_perp_two(1, &cur);
    }
    Ok(cur)
}

/// `β_ν^{n,k}` read off the two-alphabet element.
pub fn beta_two_alphabet(p: usize, n: usize, k: usize) -> Result<BTreeMap<Partition, Z>, SymError> {
    let total = p * n + k;
    let m = two_alphabet_m(p, n, k)?;
    let mut out = BTreeMap::new();
    for ((nu, j), c) in m {
        assert_eq!(nu.weight() + j, total, "two-alphabet grading");
        out.insert(nu, c);
    }
    Ok(out)
}

/// Borel–Serre: `D_{((p−1)^n)} e_{k+n} ≡ m_{(1^k p^n)}` mod `p`.
pub fn borel_serre_check(p: u64, n: usize, k: usize) -> Result<bool, SymError> {
    if !is_prime(p) {
        return Err(SymError::NotPrime(p));
    }
    check_degree(p as usize * n + k)?;
    let lhs = apply_sym(&DiffOp::reduced_power(p, n), &SymElem::e(Partition::row(k + n)));
    let lhs = convert(&lhs, Basis::Monomial).reduce_mod(p)?;
    let rhs = SymElem::m(wu_shape(p as usize, n, k));
    Ok(lhs == rhs)
}

/// `e_n^p ≡ m_{(p^n)}` mod `p`.
pub fn frobenius_check(p: u64, n: usize) -> Result<bool, SymError> {
    if !is_prime(p) {
        return Err(SymError::NotPrime(p));
    }
    check_degree(p as usize * n)?;
    let mut acc = SymElem::one(Basis::Elementary);
    for _ in 0..p {
        acc = multiply(&acc, &SymElem::e(Partition::row(n)));
    }
    let lhs = convert(&acc, Basis::Monomial).reduce_mod(p)?;
    Ok(lhs == SymElem::m(Partition::rect(p as usize, n)))
}

/// `α` reduced mod `p`, dropping zeros.
pub fn reduce_table(t: &BTreeMap<Partition, Z>, p: u64) -> BTreeMap<Partition, u64> {
    t.iter().map(|(k, v)| (k.clone(), residue(v, p))).filter(|(_, r)| *r != 0).collect()
}
