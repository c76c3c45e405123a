//! Human-readable rendering.

use std::fmt::Write;

use graph_hypergroup::hypergroup::{Analysis, FailureWitness, StructureConstants};
use graph_hypergroup::{Matrix, Rational, Scalar};

/// Integers print without a denominator.
pub fn show<T: Scalar>(x: &T) -> String {
    let t = x.to_text();
    t.strip_suffix("/1").map(str::to_owned).unwrap_or(t)
}

/// `x_i ∘ x_j = c_0 x_0 + ...`, omitting zero terms and unit coefficients.
pub fn expansion(sc: &StructureConstants<Rational>, i: usize, j: usize) -> String {
    let terms: Vec<String> = sc
        .product(i, j)
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.vanishes())
        .map(|(k, c)| if c.same(&Rational::from_count(1)) { format!("x{k}") } else { format!("{} x{k}", show(c)) })
        .collect();
    let rhs = if terms.is_empty() { "0".to_owned() } else { terms.join(" + ") };
    format!("x{i}∘x{j} = {rhs}")
}

pub fn expansions(sc: &StructureConstants<Rational>, commutative: bool) -> Vec<String> {
    let n = sc.order();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if !commutative || i <= j {
                out.push(expansion(sc, i, j));
            }
        }
    }
    out
}

pub fn matrix<T: Scalar>(name: &str, m: &Matrix<T>) -> String {
    let cells: Vec<Vec<String>> = (0..m.rows()).map(|r| m.row(r).iter().map(show).collect()).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut out = format!("{name}:\n");
    for row in cells {
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        let _ = writeln!(out, "  [ {} ]", line.join(" "));
    }
    out
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn optional(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "n/a (needs S1+S2)",
    }
}

pub fn check(source: &str, a: &Analysis<Rational>, edges: usize, dump: bool) -> String {
    let v = &a.verdict;
    let m = &v.method_results;
    let mut out = String::new();
    let _ = writeln!(out, "graph: {source} ({} vertices, {edges} edges), base point {}", a.profile.vertex_count(), v.base_point);
    let sizes: Vec<String> = v.sphere_sizes.iter().map(usize::to_string).collect();
    let _ = writeln!(out, "sphere sizes: {} (diameter {})", sizes.join(" "), v.diameter);
    let _ = writeln!(out, "classification: {}", v.classification);
    let _ = writeln!(out, "S1: {}  S2: {}  distance-regular: {}", yes(v.s1), yes(v.s2), yes(v.distance_regular));
    let _ = writeln!(out, "methods:");
    let rows = [
        ("hypergroup axioms", yes(m.axioms)),
        ("commutative", yes(m.commutative)),
        ("associative", yes(m.associative)),
        ("D A_k A_l = D A_l A_k", optional(m.daa_criterion)),
        ("P_h D = D A_h", optional(m.pd_equals_da)),
        ("shortcut constants match", optional(m.shortcut_matches)),
        ("A^(k) commute", yes(m.adjacency_commutation)),
    ];
    for (name, value) in rows {
        let _ = writeln!(out, "  {name:<26}{value}");
    }
    if let Some(w) = &v.failure_witness {
        let _ = writeln!(out, "witness: {}", witness(w));
    }
    if dump {
        for (k, adj) in a.adjacency.adjacency.iter().enumerate() {
            out.push_str(&matrix(&format!("A^({k})"), adj));
        }
        for (k, p) in a.transitions.matrices.iter().enumerate() {
            out.push_str(&matrix(&format!("P_{k}"), p));
        }
        out.push_str(&matrix("D", &a.aggregation.matrix));
    }
    let _ = writeln!(out, "verdict: {}", if v.productive { "productive" } else { "not productive" });
    out
}

pub fn witness(w: &FailureWitness<Rational>) -> String {
    match w {
        FailureWitness::Axiom { witness } => format!("axiom violation {witness:?}"),
        FailureWitness::Commutativity { witness } => format!(
            "x{}∘x{} differs from x{}∘x{} at x{}: {} vs {}",
            witness.i,
            witness.j,
            witness.j,
            witness.i,
            witness.k,
            show(&witness.ij),
            show(&witness.ji)
        ),
        FailureWitness::Associativity { witness } => format!(
            "x{i}∘(x{l}∘x{j}) has {} at x{m}, (x{i}∘x{l})∘x{j} has {}",
            show(&witness.lhs),
            show(&witness.rhs),
            i = witness.i,
            l = witness.l,
            j = witness.j,
            m = witness.m
        ),
    }
}
