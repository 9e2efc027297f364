//! Command implementations behind the `steengrass` binary. Each command
//! returns its stdout text; `main` only parses flags and maps errors to exit codes.

pub mod verify;

use std::fmt;

use num_traits::One;
use rayon::prelude::*;
use serde_json::{json, Value};

use steengrass::arith::{is_prime, residue};
use steengrass::diffop::{parse_op, steenrod};
use steengrass::grass::{edges_from, emit_dot, steenrod_schubert, AttachPoset, BoxedClass};
use steengrass::schubert::{a_poly, conjecture_check, frame_window, inverse_kostka, ConjectureReport};
use steengrass::symfunc::SymElem;
use steengrass::wu::BetaTable;
use steengrass::young::{display_order, minimal_frame, partitions_in_box, partitions_of};
use steengrass::{Partition, SkewShape, Q, Z};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("malformed partition {0:?}")]
    Partition(String),
    #[error("malformed Grassmannian {0:?}: expected n,N with n <= N")]
    Grass(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Engine(String),
}

macro_rules! engine_error {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Engine(e.to_string())
            }
        }
    )*};
}

engine_error!(
    steengrass::diffop::DiffOpError,
    steengrass::grass::GrassError,
    steengrass::schubert::SchubertError,
    steengrass::symfunc::SymError,
    steengrass::young::YoungError
);

pub type Result<T> = std::result::Result<T, CliError>;

/// `Gr_n(C^N)`, whose Schubert classes are indexed by partitions in an `n × (N − n)` box.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Grass {
    pub n: usize,
    pub ambient: usize,
}

impl Grass {
    pub fn rows(&self) -> usize {
        self.n
    }

    pub fn cols(&self) -> usize {
        self.ambient - self.n
    }
}

impl fmt::Display for Grass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.n, self.ambient)
    }
}

/// Accepts `3,1`, `(3,1)`, `[3,1]`, and `` / `()` / `[]` for the empty partition.
/// Parts may be listed in either order.
pub fn parse_partition(s: &str) -> Result<Partition> {
    let bad = || CliError::Partition(s.to_string());
    let t = s.trim();
    let t = match (t.chars().next(), t.chars().last()) {
        (Some('('), Some(')')) | (Some('['), Some(']')) => &t[1..t.len() - 1],
        _ => t,
    };
    if t.trim().is_empty() {
        return Ok(Partition::empty());
    }
    let parts: Vec<usize> = t
        .split(',')
        .map(|x| x.trim().parse::<usize>().ok().filter(|&v| v > 0))
        .collect::<Option<_>>()
        .ok_or_else(bad)?;
    Ok(Partition::new(parts))
}

pub fn parse_grass(s: &str) -> Result<Grass> {
    let bad = || CliError::Grass(s.to_string());
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    let n = a.trim().parse().map_err(|_| bad())?;
    let ambient = b.trim().parse().map_err(|_| bad())?;
    if n > ambient {
        return Err(bad());
    }
    Ok(Grass { n, ambient })
}

pub fn check_prime(p: u64) -> Result<u64> {
    if is_prime(p) {
        Ok(p)
    } else {
        Err(CliError::NotPrime(p))
    }
}

pub fn int(z: &Z) -> Value {
    Value::Number(z.to_string().parse().expect("integer literal"))
}

pub fn rational(c: &Q) -> Value {
    json!({ "num": int(c.numer()), "den": int(c.denom()) })
}

pub fn partition_json(p: &Partition) -> Value {
    json!(p.parts())
}

/// Parts in increasing order, as in `(1,1,2,6)`.
pub fn partition_ascending(p: &Partition) -> String {
    let parts: Vec<String> = p.parts().iter().rev().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

pub fn sym_json(f: &SymElem) -> Value {
    let terms: Vec<Value> = f
        .sorted_terms()
        .into_iter()
        .map(|(p, c)| json!({ "partition": partition_json(p), "num": int(c.numer()), "den": int(c.denom()) }))
        .collect();
    json!({ "basis": f.basis().symbol(), "terms": terms })
}

pub fn class_json(c: &BoxedClass) -> Value {
    let terms: Vec<Value> =
        c.sorted_terms().into_iter().map(|(p, v)| json!({ "partition": partition_json(p), "coeff": int(v) })).collect();
    json!({ "terms": terms })
}

fn envelope(mut body: Value, g: Grass, prime: u64) -> Value {
    if let Value::Object(m) = &mut body {
        m.insert("grass".into(), json!([g.n, g.ambient]));
        m.insert("prime".into(), json!(prime));
    }
    body
}

/// Applies a named operation to `s_λ`, or to `σ_λ` in `Gr_n(C^N)` when `grass` is given.
pub fn act(op: &str, class: &str, prime: Option<u64>, grass: Option<Grass>, with_envelope: bool) -> Result<String> {
    let expr = parse_op(op)?;
    let lam = parse_partition(class)?;
    let modulus = match prime {
        Some(p) => check_prime(p)?,
        None => 0,
    };
    let out = match grass {
        Some(g) => {
            let c = steenrod_schubert(&expr, &lam, modulus, g.rows(), g.cols())?;
            let body = class_json(&c);
            if with_envelope {
                envelope(body, g, c.p)
            } else {
                body
            }
        }
        None => sym_json(&steenrod(&expr, &SymElem::s(lam), modulus)?),
    };
    Ok(out.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WuRow {
    pub lambda: Partition,
    pub n: usize,
    pub k: usize,
    pub alpha: Z,
    pub beta: Z,
    pub alpha_mod_p: u64,
}

/// The nonzero `α_λ^{n,k}` of `m_{(1^k p^n)}`, each with `β` at `λ` minus its largest part.
pub fn wu_rows(p: usize, n: usize, k: usize, nonzero_mod_p: bool) -> Result<Vec<WuRow>> {
    if p < 2 {
        return Err(CliError::Invalid(format!("p must be at least 2, got {p}")));
    }
    steengrass::symfunc::check_degree(p * n + k)?;
    let mut t = BetaTable::new(p);
    let mut rows: Vec<WuRow> = t
        .alpha_expansion(n, k)
        .into_iter()
        .map(|(lambda, alpha)| {
            let rest = lambda.remove_part(lambda.largest()).unwrap_or_else(Partition::empty);
            let beta = if lambda.is_empty() { Z::one() } else { t.beta(&rest, n, k) };
            let alpha_mod_p = residue(&alpha, p as u64);
            WuRow { lambda, n, k, alpha, beta, alpha_mod_p }
        })
        .filter(|r| !nonzero_mod_p || r.alpha_mod_p != 0)
        .collect();
    rows.sort_by(|a, b| display_order(&a.lambda, &b.lambda));
    Ok(rows)
}

pub fn wu(p: usize, n: usize, k: usize, nonzero_mod_p: bool, format: TableFormat) -> Result<String> {
    let rows = wu_rows(p, n, k, nonzero_mod_p)?;
    match format {
        TableFormat::Csv => {
            let mut w = csv::WriterBuilder::new().quote_style(csv::QuoteStyle::Never).from_writer(Vec::new());
            let io = |e: csv::Error| CliError::Invalid(e.to_string());
            w.write_record(["lambda", "n", "k", "alpha", "beta", "alpha_mod_p"]).map_err(io)?;
            for r in &rows {
                w.write_record([
                    partition_ascending(&r.lambda),
                    r.n.to_string(),
                    r.k.to_string(),
                    r.alpha.to_string(),
                    r.beta.to_string(),
                    r.alpha_mod_p.to_string(),
                ])
                .map_err(io)?;
            }
            let bytes = w.into_inner().map_err(|e| CliError::Invalid(e.to_string()))?;
            Ok(String::from_utf8(bytes).expect("ascii table"))
        }
        TableFormat::Json => {
            let v: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "lambda": partition_json(&r.lambda),
                        "n": r.n,
                        "k": r.k,
                        "alpha": int(&r.alpha),
                        "beta": int(&r.beta),
                        "alpha_mod_p": r.alpha_mod_p,
                    })
                })
                .collect();
            Ok(json!({ "p": p, "rows": v }).to_string())
        }
    }
}

/// Rows `m_λ = Σ_μ K^{-1}_{λμ} s_μ` for all `λ ⊢ d`.
pub fn kostka_inv(degree: usize) -> Result<String> {
    steengrass::symfunc::check_degree(degree)?;
    let rows: Vec<Value> = partitions_of(degree)
        .par_iter()
        .map(|lam| {
            let row = inverse_kostka(lam);
            let mut entries: Vec<(&Partition, &Z)> = row.entries.iter().collect();
            entries.sort_by(|a, b| display_order(a.0, b.0));
            let entries: Vec<Value> =
                entries.into_iter().map(|(mu, c)| json!({ "partition": partition_json(mu), "coeff": int(c) })).collect();
            json!({ "lambda": partition_json(lam), "entries": entries })
        })
        .collect();
    Ok(json!({ "degree": degree, "rows": rows }).to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum PosetFormat {
    Dot,
    Json,
}

/// The attaching poset, with edge generation spread over source classes.
pub fn poset_parallel(g: Grass, p: u64) -> Result<AttachPoset> {
    check_prime(p)?;
    let (rows, cols) = (g.rows(), g.cols());
    let elements = partitions_in_box(rows, cols);
    let edges: Vec<Vec<(Partition, Partition, String)>> = elements
        .par_iter()
        .map(|lam| {
            edges_from(lam, rows, cols, p).map(|v| v.into_iter().map(|(mu, w)| (lam.clone(), mu, w)).collect())
        })
        .collect::<std::result::Result<_, _>>()?;
    let edges: Vec<_> = edges.into_iter().flatten().collect();
    Ok(AttachPoset::from_edges(rows, cols, p, elements, &edges))
}

pub fn poset_json(g: Grass, poset: &AttachPoset) -> Value {
    let el = &poset.elements;
    let elements: Vec<Value> = el.iter().map(partition_json).collect();
    let covers: Vec<Value> = poset
        .covers
        .iter()
        .map(|(i, j, w)| json!({ "from": partition_json(&el[*i]), "to": partition_json(&el[*j]), "witness": w }))
        .collect();
    let relation: Vec<Value> =
        poset.relation.iter().map(|(i, j)| json!({ "from": partition_json(&el[*i]), "to": partition_json(&el[*j]) })).collect();
    json!({
        "grass": [g.n, g.ambient],
        "prime": poset.p,
        "elements": elements,
        "covers": covers,
        "relation": relation,
    })
}

pub fn poset(g: Grass, p: u64, format: PosetFormat) -> Result<String> {
    let poset = poset_parallel(g, p)?;
    Ok(match format {
        PosetFormat::Dot => emit_dot(&poset),
        PosetFormat::Json => format!("{}\n", poset_json(g, &poset)),
    })
}

/// Pairs `λ ⊂ μ` inside a `side × side` box whose skew shape has two
/// components, each of at most `max_boxes` boxes.
pub fn two_component_shapes(max_boxes: usize, side: usize) -> Vec<(Partition, Partition)> {
    let cells = partitions_in_box(side, side);
    let mut out = Vec::new();
    for lam in &cells {
        for mu in &cells {
            let gap = mu.weight() as isize - lam.weight() as isize;
            if gap < 2 || gap > 2 * max_boxes as isize || !lam.contained_in(mu) {
                continue;
            }
            let skew = SkewShape::new(mu.clone(), lam.clone()).expect("contained");
            let comps = skew.components();
            if comps.len() == 2 && comps.iter().all(|c| c.len() <= max_boxes) {
                out.push((lam.clone(), mu.clone()));
            }
        }
    }
    out
}

fn report_json(r: &ConjectureReport) -> Value {
    json!({
        "lambda": partition_json(&r.lambda),
        "mu": partition_json(&r.mu),
        "lhs": int(&r.lhs),
        "rhs": rational(&r.rhs),
        "agree": r.agree,
    })
}

/// Agreement of the two-component product formula with the computed coefficients.
pub fn conjecture(max_boxes: usize, side: usize, all: bool) -> Result<String> {
    let pairs = two_component_shapes(max_boxes, side);
    let reports: Vec<ConjectureReport> =
        pairs.par_iter().map(|(l, m)| conjecture_check(l, m)).collect::<std::result::Result<_, _>>()?;
    let agree = reports.iter().filter(|r| r.agree).count();
    let listed: Vec<Value> = reports.iter().filter(|r| all || !r.agree).map(report_json).collect();
    let rate = if reports.is_empty() { 1.0 } else { agree as f64 / reports.len() as f64 };
    Ok(json!({
        "max_boxes": max_boxes,
        "box": side,
        "shapes": reports.len(),
        "agree": agree,
        "rate": rate,
        (if all { "reports" } else { "disagreements" }): listed,
    })
    .to_string())
}

/// `a_{λμ}` as a polynomial in the content of the minimal frame of `μ/λ`.
pub fn a_poly_cmd(inner: &str, outer: &str) -> Result<String> {
    let lam = parse_partition(inner)?;
    let mu = parse_partition(outer)?;
    let skew = SkewShape::new(mu, lam)?;
    let fr = minimal_frame(&skew)?;
    let poly = a_poly(&fr.pi, &fr.rho);
    let window = frame_window(&fr.pi, &fr.rho)?.map(|(lo, hi)| json!([lo, hi]));
    Ok(json!({
        "pi": partition_json(&fr.pi),
        "rho": partition_json(&fr.rho),
        "c": fr.c,
        "value": int(&poly.eval(fr.c)),
        "binomial": poly.binomial.iter().map(int).collect::<Vec<_>>(),
        "monomial": poly.monomial.iter().map(rational).collect::<Vec<_>>(),
        "window": window,
    })
    .to_string())
}
