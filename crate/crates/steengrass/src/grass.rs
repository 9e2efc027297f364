//! Schubert classes in the cohomology of `Gr_n(C^{n+k})`, Steenrod operations
//! on them, and the poset generated by nonzero operations.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::arith::{is_prime, residue_q, to_integer, Z};
use crate::diffop::{steenrod, DiffOpError, OpExpr, OpFactor};
use crate::symfunc::{convert, Basis, SymElem};
use crate::young::{display_order, partitions_in_box, Partition};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GrassError {
    OutsideBox { lambda: Partition, rows: usize, cols: usize },
    NotPrime(u64),
    NonIntegral,
    Op(DiffOpError),
}

impl fmt::Display for GrassError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrassError::OutsideBox { lambda, rows, cols } => write!(f, "{lambda} does not fit in a {rows}x{cols} box"),
            GrassError::NotPrime(p) => write!(f, "{p} is not prime"),
            GrassError::NonIntegral => write!(f, "coefficients are not integral at the prime"),
            GrassError::Op(e) => write!(f, "{e}"),
        }
    }
}

impl From<DiffOpError> for GrassError {
    fn from(e: DiffOpError) -> Self {
        GrassError::Op(e)
    }
}

/// `Σ c_λ σ_λ` over partitions in an `n_rows × k_cols` box, with coefficients
/// integers (`p = 0`) or residues in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxedClass {
    pub n_rows: usize,
    pub k_cols: usize,
    pub p: u64,
    pub terms: BTreeMap<Partition, Z>,
}

impl BoxedClass {
    pub fn schubert(lambda: &Partition, n_rows: usize, k_cols: usize, p: u64) -> Result<Self, GrassError> {
        project(&SymElem::s(check_box(lambda, n_rows, k_cols)?.clone()), n_rows, k_cols, p)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> Z {
        self.terms.get(lambda).cloned().unwrap_or_else(Z::zero)
    }

    /// Terms in display order (descending lexicographic).
    pub fn sorted_terms(&self) -> Vec<(&Partition, &Z)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| display_order(a.0, b.0));
        v
    }
}

impl fmt::Display for BoxedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.sorted_terms().into_iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "σ{k}")?;
            } else {
                write!(f, "{c}*σ{k}")?;
            }
        }
        Ok(())
    }
}

fn check_box(lambda: &Partition, rows: usize, cols: usize) -> Result<&Partition, GrassError> {
    if lambda.fits_box(rows, cols) {
        Ok(lambda)
    } else {
        Err(GrassError::OutsideBox { lambda: lambda.clone(), rows, cols })
    }
}

/// The image of `f` in the cohomology ring: Schur terms outside the box are
/// dropped and coefficients are reduced mod `p` when `p > 0`.
pub fn project(f: &SymElem, n_rows: usize, k_cols: usize, p: u64) -> Result<BoxedClass, GrassError> {
    if p > 0 && !is_prime(p) {
        return Err(GrassError::NotPrime(p));
    }
    let s = if f.basis() == Basis::Schur { f.clone() } else { convert(f, Basis::Schur) };
    let mut terms = BTreeMap::new();
    for (lam, c) in s.terms() {
        if !lam.fits_box(n_rows, k_cols) {
            continue;
        }
        let v = if p == 0 {
            to_integer(c).ok_or(GrassError::NonIntegral)?
        } else {
            Z::from(residue_q(c, p).ok_or(GrassError::NonIntegral)?)
        };
        if !v.is_zero() {
            terms.insert(lam.clone(), v);
        }
    }
    Ok(BoxedClass { n_rows, k_cols, p, terms })
}

/// Applies a named operation to `σ_λ`: the integral lift on `s_λ`, then projection.
pub fn steenrod_schubert(
    op: &OpExpr,
    lambda: &Partition,
    p: u64,
    n_rows: usize,
    k_cols: usize,
) -> Result<BoxedClass, GrassError> {
    check_box(lambda, n_rows, k_cols)?;
    if p > 0 && !is_prime(p) {
        return Err(GrassError::NotPrime(p));
    }
    let prime = op.resolve_prime(p)?;
    let img = steenrod(op, &SymElem::s(lambda.clone()), p)?;
    project(&img, n_rows, k_cols, prime.unwrap_or(0))
}

/// The single operations generating the poset at `p`, of positive degree at most `max_boxes`.
pub fn generators(p: u64, max_boxes: usize) -> Vec<OpExpr> {
    let step = p as usize - 1;
    (1..=max_boxes / step)
        .map(|n| {
            let f = if p == 2 { OpFactor::Sq(2 * n) } else { OpFactor::P { n, prime: Some(p) } };
            OpExpr::new(alloc::vec![f])
        })
        .collect()
}

/// Targets `μ` with `σ_μ` appearing in some generator applied to `σ_λ`, with a witness.
pub fn edges_from(lambda: &Partition, n_rows: usize, k_cols: usize, p: u64) -> Result<Vec<(Partition, String)>, GrassError> {
    if !is_prime(p) {
        return Err(GrassError::NotPrime(p));
    }
    let room = n_rows * k_cols - check_box(lambda, n_rows, k_cols)?.weight();
    let mut out = Vec::new();
    for op in generators(p, room) {
        let img = steenrod_schubert(&op, lambda, p, n_rows, k_cols)?;
        for mu in img.terms.keys() {
            out.push((mu.clone(), format!("{op}")));
        }
    }
    Ok(out)
}

/// The transitive closure of single-operation reachability on the cells of a box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AttachPoset {
    pub n_rows: usize,
    pub k_cols: usize,
    pub p: u64,
    pub elements: Vec<Partition>,
    pub relation: BTreeSet<(usize, usize)>,
    pub covers: Vec<(usize, usize, String)>,
}

impl AttachPoset {
    /// Builds the poset from generated edges; the element order is by size, then display order.
    pub fn from_edges(
        n_rows: usize,
        k_cols: usize,
        p: u64,
        mut elements: Vec<Partition>,
        edges: &[(Partition, Partition, String)],
    ) -> Self {
        elements.sort_by(|a, b| a.weight().cmp(&b.weight()).then_with(|| display_order(a, b).reverse()));
        elements.dedup();
        let index: BTreeMap<&Partition, usize> = elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let n = elements.len();
        let mut witness: BTreeMap<(usize, usize), String> = BTreeMap::new();
        let mut reach = alloc::vec![alloc::vec![false; n]; n];
        for (a, b, w) in edges {
            let (Some(&i), Some(&j)) = (index.get(a), index.get(b)) else { continue };
            reach[i][j] = true;
            let e = witness.entry((i, j)).or_insert_with(|| w.clone());
            if w < e {
                *e = w.clone();
            }
        }
        for k in 0..n {
            let via = reach[k].clone();
            for row in reach.iter_mut() {
                if row[k] {
                    for (x, &y) in row.iter_mut().zip(&via) {
                        *x |= y;
                    }
                }
            }
        }
        let mut relation = BTreeSet::new();
        for (i, row) in reach.iter().enumerate() {
            for (j, &r) in row.iter().enumerate() {
                if r {
                    relation.insert((i, j));
                }
            }
        }
        let mut covers = Vec::new();
        for &(i, j) in &relation {
            if !(0..n).any(|k| reach[i][k] && reach[k][j]) {
                let w = witness.get(&(i, j)).cloned().unwrap_or_default();
                covers.push((i, j, w));
            }
        }
        AttachPoset { n_rows, k_cols, p, elements, relation, covers }
    }

    pub fn index_of(&self, lambda: &Partition) -> Option<usize> {
        self.elements.iter().position(|x| x == lambda)
    }

    /// Whether `σ_μ` is reachable from `σ_λ`.
    pub fn relates(&self, lambda: &Partition, mu: &Partition) -> bool {
        match (self.index_of(lambda), self.index_of(mu)) {
            (Some(i), Some(j)) => self.relation.contains(&(i, j)),
            _ => false,
        }
    }

    pub fn is_cover(&self, lambda: &Partition, mu: &Partition) -> bool {
        match (self.index_of(lambda), self.index_of(mu)) {
            (Some(i), Some(j)) => self.covers.iter().any(|c| c.0 == i && c.1 == j),
            _ => false,
        }
    }
}

pub fn build_poset(n_rows: usize, k_cols: usize, p: u64) -> Result<AttachPoset, GrassError> {
    let elements = partitions_in_box(n_rows, k_cols);
    let mut edges = Vec::new();
    for lam in &elements {
        for (mu, w) in edges_from(lam, n_rows, k_cols, p)? {
            edges.push((lam.clone(), mu, w));
        }
    }
    Ok(AttachPoset::from_edges(n_rows, k_cols, p, elements, &edges))
}

fn node_id(p: &Partition) -> String {
    let parts: Vec<String> = p.parts().iter().map(|x| format!("{x}")).collect();
    format!("\"[{}]\"", parts.join(","))
}

/// Graphviz DOT of the cover edges, ranked by `|λ|`.
pub fn emit_dot(poset: &AttachPoset) -> String {
    let mut out = String::from("digraph attach {\n  rankdir=BT;\n");
    let mut ranks: BTreeMap<usize, Vec<&Partition>> = BTreeMap::new();
    for e in &poset.elements {
        ranks.entry(e.weight()).or_default().push(e);
    }
    for nodes in ranks.values() {
        let ids: Vec<String> = nodes.iter().map(|p| node_id(p)).collect();
        out.push_str(&format!("  {{ rank=same; {}; }}\n", ids.join("; ")));
    }
    for (i, j, w) in &poset.covers {
        out.push_str(&format!(
            "  {} -> {} [label=\"{}\"];\n",
            node_id(&poset.elements[*i]),
            node_id(&poset.elements[*j]),
            w
        ));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffop::parse_op;

    fn pt(v: &[usize]) -> Partition {
        Partition::from(v)
    }

    fn act(op: &str, lam: &[usize], p: u64, n: usize, k: usize) -> BoxedClass {
        steenrod_schubert(&parse_op(op).unwrap(), &pt(lam), p, n, k).unwrap()
    }

    #[test]
    fn projection_examples() {
        assert!(project(&SymElem::p([4]), 2, 2, 0).unwrap().is_zero());
        assert_eq!(project(&SymElem::s([2, 2]), 2, 2, 0).unwrap().coeff(&pt(&[2, 2])), Z::from(1));
    }

    #[test]
    fn section_six_values() {
        assert!(act("Sq^2", &[2, 1], 2, 2, 2).is_zero());
        assert!(act("Sq^6", &[1], 2, 2, 2).is_zero());
        assert!(act("Sq^2*Sq^4", &[1], 2, 2, 2).is_zero());
        assert!(act("(Sq^2)^3", &[1], 2, 2, 2).is_zero());
        let sq4 = act("Sq^4", &[1, 1], 2, 2, 3);
        assert_eq!(sq4.terms.len(), 1);
        assert_eq!(sq4.coeff(&pt(&[2, 2])), Z::from(1));
        let p1 = act("P^1", &[1, 1], 3, 2, 3);
        assert_eq!(p1.coeff(&pt(&[3, 1])), Z::from(1));
        assert_eq!(p1.coeff(&pt(&[2, 2])), Z::from(2));
        assert_eq!(p1.terms.len(), 2);
        assert!(act("Sq^4", &[3, 1], 2, 2, 3).is_zero());
        assert!(act("(Sq^2)^2", &[3, 1], 2, 2, 3).is_zero());
        assert!(act("P^1", &[3, 1], 3, 2, 3).is_zero());
        let lift = act("SQ^1*SQ^1", &[1, 1], 0, 2, 3);
        assert_eq!(lift.terms.len(), 1);
        assert_eq!(lift.coeff(&pt(&[3, 1])), Z::from(2));
    }

    #[test]
    fn box_violation() {
        assert!(steenrod_schubert(&parse_op("Sq^2").unwrap(), &pt(&[3]), 2, 2, 2).is_err());
    }

    #[test]
    fn poset_examples() {
        let p = build_poset(2, 3, 2).unwrap();
        assert!(p.relates(&pt(&[1, 1]), &pt(&[2, 2])));
        assert!(!p.relates(&pt(&[3, 1]), &pt(&[3, 3])));
        let q = build_poset(2, 2, 2).unwrap();
        assert_eq!(q.elements.len(), 6);
        assert!(!q.relates(&pt(&[2, 1]), &pt(&[2, 2])));
        assert!(!q.relation.iter().any(|&(i, _)| q.elements[i].is_empty()));
        let dot = emit_dot(&q);
        assert_eq!(dot.matches("rank=same").count(), 5);
        assert_eq!(dot, emit_dot(&build_poset(2, 2, 2).unwrap()));
    }

    #[test]
    fn chain_dot() {
        let e = alloc::vec![Partition::empty(), pt(&[1])];
        let p = AttachPoset::from_edges(1, 1, 2, e, &[(Partition::empty(), pt(&[1]), String::from("D_1"))]);
        assert!(emit_dot(&p).contains("\"[]\" -> \"[1]\""));
        let empty = AttachPoset::from_edges(0, 0, 2, Vec::new(), &[]);
        assert_eq!(emit_dot(&empty), "digraph attach {\n  rankdir=BT;\n}\n");
    }
}
