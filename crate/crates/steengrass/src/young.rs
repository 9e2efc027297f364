//! Partitions, skew shapes and border-strip geometry.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// A weakly decreasing sequence of positive integers.
///
/// Maps keyed by partitions are ordered by length first and then
/// lexicographically, so iteration order is deterministic.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum YoungError {
    UnequalWeights(usize, usize),
    BoxOutside(usize, usize),
    NotContained,
    EmptySkew,
}

impl fmt::Display for YoungError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            YoungError::UnequalWeights(a, b) => write!(f, "partitions have different weights {a} and {b}"),
            YoungError::BoxOutside(r, c) => write!(f, "box ({r},{c}) is not in the diagram"),
            YoungError::NotContained => write!(f, "inner partition is not contained in outer partition"),
            YoungError::EmptySkew => write!(f, "skew shape has no boxes"),
        }
    }
}

impl Partition {
    /// Builds a partition from arbitrary nonnegative parts, sorting and dropping zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The partition `(k)`, or the empty partition when `k = 0`.
    pub fn row(k: usize) -> Self {
        Partition::new(vec![k])
    }

    /// The partition `(1^k)`.
    pub fn column(k: usize) -> Self {
        Partition { parts: vec![1; k] }
    }

    /// The partition `(v^m)`.
    pub fn rect(v: usize, m: usize) -> Self {
        if v == 0 {
            return Partition::empty();
        }
        Partition { parts: vec![v; m] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), or 0 past the end.
    pub fn get(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn largest(&self) -> usize {
        self.get(0)
    }

    pub fn conjugate(&self) -> Partition {
        let mut out = Vec::with_capacity(self.largest());
        for j in 1..=self.largest() {
            out.push(self.parts.iter().take_while(|&&p| p >= j).count());
        }
        Partition { parts: out }
    }

    /// Multiplicity of the part `v`.
    pub fn multiplicity(&self, v: usize) -> usize {
        self.parts.iter().filter(|&&p| p == v).count()
    }

    /// Distinct part values with their multiplicities, largest value first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Distinct part values, largest first.
    pub fn distinct_parts(&self) -> Vec<usize> {
        self.multiplicities().into_iter().map(|(v, _)| v).collect()
    }

    /// Product of the factorials of the multiplicities, written ‖λ‖.
    pub fn norm_factorial(&self) -> num_bigint::BigUint {
        let mut acc = num_bigint::BigUint::from(1u32);
        for (_, m) in self.multiplicities() {
            for i in 2..=m {
                acc *= i as u32;
            }
        }
        acc
    }

    /// The order of the centralizer of a permutation of cycle type λ.
    pub fn z(&self) -> num_bigint::BigUint {
        let mut acc = num_bigint::BigUint::from(1u32);
        for (v, m) in self.multiplicities() {
            for i in 1..=m {
                acc *= (i * v) as u64;
            }
        }
        acc
    }

    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::new(parts)
    }

    /// Adds one part equal to `v`.
    pub fn with_part(&self, v: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts.push(v);
        Partition::new(parts)
    }

    /// λ \ i: removes one part equal to `i`, if present.
    pub fn remove_part(&self, i: usize) -> Option<Partition> {
        let pos = self.parts.iter().position(|&p| p == i)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(Partition { parts })
    }

    /// λ − 1: subtracts one from every part.
    pub fn subtract_one(&self) -> Partition {
        Partition::new(self.parts.iter().map(|&p| p - 1).collect())
    }

    /// Componentwise containment `self ⊆ other`.
    pub fn contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    pub fn fits_box(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.largest() <= cols
    }

    /// `dominance_leq(a, b)`: partial sums of a never exceed those of b.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool, YoungError> {
        let (wa, wb) = (self.weight(), other.weight());
        if wa != wb {
            return Err(YoungError::UnequalWeights(wa, wb));
        }
        let (mut sa, mut sb) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            sa += self.get(i);
            sb += other.get(i);
            if sa > sb {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Content and hook length of the box in row `row`, column `col` (1-based).
    pub fn content_hook(&self, row: usize, col: usize) -> Result<(i64, usize), YoungError> {
        if row == 0 || col == 0 || self.get(row - 1) < col {
            return Err(YoungError::BoxOutside(row, col));
        }
        let leg = self.parts.iter().take_while(|&&p| p >= col).count();
        let hook = self.get(row - 1) + leg + 1 - row - col;
        Ok((col as i64 - row as i64, hook))
    }

    /// All boxes `(row, col)`, 1-based, row by row.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.weight());
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 1..=p {
                out.push((i + 1, j));
            }
        }
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts.len().cmp(&other.parts.len()).then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl From<Vec<usize>> for Partition {
    fn from(v: Vec<usize>) -> Self {
        Partition::new(v)
    }
}

impl From<&[usize]> for Partition {
    fn from(v: &[usize]) -> Self {
        Partition::new(v.to_vec())
    }
}

impl<const N: usize> From<[usize; N]> for Partition {
    fn from(v: [usize; N]) -> Self {
        Partition::new(v.to_vec())
    }
}

/// Orders partitions by descending lexicographic order of their parts,
/// the conventional display order for symmetric function expansions.
pub fn display_order(a: &Partition, b: &Partition) -> Ordering {
    b.parts().cmp(a.parts())
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    out
}

/// All partitions with at most `rows` parts, each at most `cols`.
pub fn partitions_in_box(rows: usize, cols: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(row: usize, rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition { parts: cur.clone() });
        if row == rows {
            return;
        }
        for p in 1..=max {
            cur.push(p);
            rec(row + 1, rows, p, cur, out);
            cur.pop();
        }
    }
    rec(0, rows, cols, &mut cur, &mut out);
    out.sort();
    out
}

/// The diagram `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, YoungError> {
        if !inner.contained_in(&outer) {
            return Err(YoungError::NotContained);
        }
        Ok(SkewShape { outer, inner })
    }

    /// A straight shape λ/∅.
    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn contains_box(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && col <= self.outer.get(row - 1) && col > self.inner.get(row - 1)
    }

    /// Boxes `(row, col)` row by row, 1-based.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for i in 0..self.outer.len() {
            for j in self.inner.get(i) + 1..=self.outer.get(i) {
                out.push((i + 1, j));
            }
        }
        out
    }

    /// Row lengths `outer_i − inner_i` of the nonempty rows, as a partition.
    pub fn row_lengths(&self) -> Partition {
        Partition::new((0..self.outer.len()).map(|i| self.outer.get(i) - self.inner.get(i)).collect())
    }

    /// Column lengths of the shape, as a partition.
    pub fn column_lengths(&self) -> Partition {
        let (oc, ic) = (self.outer.conjugate(), self.inner.conjugate());
        Partition::new((0..oc.len()).map(|j| oc.get(j) - ic.get(j)).collect())
    }

    pub fn has_two_by_two(&self) -> bool {
        (1..self.outer.len()).any(|i| self.outer.get(i) >= self.inner.get(i - 1) + 2)
    }

    /// Connected components, each as a list of boxes, ordered northeast to southwest.
    pub fn components(&self) -> Vec<Vec<(usize, usize)>> {
        let boxes = self.boxes();
        let set: BTreeSet<(usize, usize)> = boxes.iter().copied().collect();
        let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
        let mut comps = Vec::new();
        for &b in &boxes {
            if seen.contains(&b) {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![b];
            seen.insert(b);
            while let Some((r, c)) = stack.pop() {
                comp.push((r, c));
                let nbrs = [(r.wrapping_sub(1), c), (r + 1, c), (r, c.wrapping_sub(1)), (r, c + 1)];
                for nb in nbrs {
                    if set.contains(&nb) && seen.insert(nb) {
                        stack.push(nb);
                    }
                }
            }
            comp.sort();
            comps.push(comp);
        }
        comps.sort_by_key(|comp| {
            let (r, c) = comp[0];
            core::cmp::Reverse(c as i64 - r as i64)
        });
        comps
    }
}

/// Number of connected components, or infinity when the shape is not a broken border strip.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ComponentCount {
    Finite(usize),
    Infinite,
}

impl ComponentCount {
    pub fn at_most(self, k: usize) -> bool {
        matches!(self, ComponentCount::Finite(c) if c <= k)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StripAnalysis {
    pub cc: ComponentCount,
    pub ht: usize,
    pub sharp_corners: Vec<i64>,
    pub dull_corners: Vec<i64>,
}

impl StripAnalysis {
    /// `(−1)^ht`.
    pub fn sign(&self) -> i64 {
        if self.ht.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

pub fn analyze_strip(s: &SkewShape) -> StripAnalysis {
    let boxes = s.boxes();
    let rows: BTreeSet<usize> = boxes.iter().map(|b| b.0).collect();
    let ht = rows.len().saturating_sub(1);
    let cc = if s.has_two_by_two() {
        ComponentCount::Infinite
    } else {
        ComponentCount::Finite(s.components().len())
    };
    let mut sharp = Vec::new();
    let mut dull = Vec::new();
    for &(r, c) in &boxes {
        let above = s.contains_box(r - 1, c);
        let left = s.contains_box(r, c - 1);
        let content = c as i64 - r as i64;
        if !above && !left {
            sharp.push(content);
        } else if above && left && !s.contains_box(r - 1, c - 1) {
            dull.push(content);
        }
    }
    StripAnalysis { cc, ht, sharp_corners: sharp, dull_corners: dull }
}

/// One connected piece `rho/pi` of a frame, with the content of `rho`'s corner box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FramePiece {
    pub pi: Partition,
    pub rho: Partition,
    pub c: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalFrame {
    pub pi: Partition,
    pub rho: Partition,
    pub c: i64,
    pub components: Vec<FramePiece>,
}

fn frame_of_rows(first: usize, rows: &[(usize, usize)]) -> FramePiece {
    // rows[i] = (inner, outer) for original row first + i
    let shift = rows.iter().filter(|(a, b)| b > a).map(|(a, _)| *a).min().unwrap_or(0);
    let pi = Partition::new(rows.iter().map(|(a, _)| a - shift).collect());
    let rho = Partition::new(rows.iter().map(|(_, b)| b - shift).collect());
    FramePiece { pi, rho, c: shift as i64 + 1 - first as i64 }
}

pub fn minimal_frame(s: &SkewShape) -> Result<MinimalFrame, YoungError> {
    if s.is_empty() {
        return Err(YoungError::EmptySkew);
    }
    let n = s.outer.len();
    let box_rows: Vec<usize> = (0..n).filter(|&i| s.outer.get(i) > s.inner.get(i)).collect();
    let (r0, r1) = (box_rows[0], *box_rows.last().unwrap());
    let rows: Vec<(usize, usize)> = (r0..=r1).map(|i| (s.inner.get(i), s.outer.get(i))).collect();
    let whole = frame_of_rows(r0 + 1, &rows);
    let mut components = Vec::new();
    for comp in s.components() {
        let first = comp[0].0;
        let last = comp.last().unwrap().0;
        let rows: Vec<(usize, usize)> = (first..=last)
            .map(|r| {
                let cols = comp.iter().filter(|b| b.0 == r).map(|b| b.1);
                let lo = cols.clone().min().unwrap();
                let hi = cols.max().unwrap();
                (lo - 1, hi)
            })
            .collect();
        components.push(frame_of_rows(first, &rows));
    }
    Ok(MinimalFrame { pi: whole.pi, rho: whole.rho, c: whole.c, components })
}

/// The statistic m(λ, n): the largest k with λ'_k + … + λ'_l > n or λ'_{k+1} + … + λ'_l = n.
pub fn m_stat(p: &Partition, n: usize) -> usize {
    let conj = p.conjugate();
    let l = conj.len();
    let mut suffix = vec![0usize; l + 2];
    for k in (1..=l).rev() {
        suffix[k] = suffix[k + 1] + conj.get(k - 1);
    }
    (1..=l).rev().find(|&k| suffix[k] > n || suffix[k + 1] == n).unwrap_or(0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Add,
    Remove,
}

/// Broken border strips of the given size added to or removed from `p`,
/// with at most `max_components` components.
pub fn strip_moves(p: &Partition, size: usize, direction: Direction, max_components: usize) -> Vec<(Partition, StripAnalysis)> {
    let mut shapes = Vec::new();
    match direction {
        Direction::Add => {
            let rows = p.len() + size;
            let mut cur = Vec::with_capacity(rows);
            add_rec(p, 0, rows, size, &mut cur, &mut shapes);
        }
        Direction::Remove => {
            let mut cur = Vec::with_capacity(p.len());
            remove_rec(p, 0, size, &mut cur, &mut shapes);
        }
    }
    let mut out = Vec::new();
    for q in shapes {
        let skew = match direction {
            Direction::Add => SkewShape { outer: q.clone(), inner: p.clone() },
            Direction::Remove => SkewShape { outer: p.clone(), inner: q.clone() },
        };
        let a = analyze_strip(&skew);
        if a.cc.at_most(max_components) {
            out.push((q, a));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

fn add_rec(p: &Partition, i: usize, rows: usize, rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rem == 0 {
        let mut parts = cur.clone();
        parts.extend((i..p.len()).map(|j| p.get(j)));
        out.push(Partition::new(parts));
        return;
    }
    if i == rows {
        return;
    }
    let lo = p.get(i);
    let mut hi = if i == 0 { lo + rem } else { cur[i - 1].min(p.get(i - 1) + 1) };
    hi = hi.min(lo + rem);
    for v in lo..=hi {
        cur.push(v);
        add_rec(p, i + 1, rows, rem - (v - lo), cur, out);
        cur.pop();
    }
}

fn remove_rec(p: &Partition, i: usize, rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if i == p.len() {
        if rem == 0 {
            out.push(Partition::new(cur.clone()));
        }
        return;
    }
    let hi = if i == 0 { p.get(0) } else { p.get(i).min(cur[i - 1]) };
    let lo = p.get(i + 1).saturating_sub(1);
    if rem > (i..p.len()).map(|j| p.get(j)).sum::<usize>() {
        return;
    }
    for v in lo..=hi {
        let taken = p.get(i) - v;
        if taken > rem {
            continue;
        }
        cur.push(v);
        remove_rec(p, i + 1, rem - taken, cur, out);
        cur.pop();
    }
}
