//! Standard graph families and the worked examples used by the test corpus.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{validate_graph, Graph, PointedGraph};

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Generator(format!("cycle needs n >= 3, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::Generator("path needs n >= 1".into()));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::Generator("complete graph needs n >= 1".into()));
    }
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::from_edges(n, &edges)
}

/// `Q_d` on bit strings of length `d`; vertices adjacent iff they differ in one bit.
pub fn hypercube(d: usize) -> Result<Graph> {
    if !(1..=20).contains(&d) {
        return Err(Error::Generator(format!("hypercube dimension must be in 1..=20, got {d}")));
    }
    let n = 1usize << d;
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (0..d).map(move |b| (u, u ^ (1 << b))).filter(|&(u, v)| u < v))
        .collect();
    Graph::from_edges(n, &edges)
}

/// Generalized Petersen graph `GP(n, k)`: outer cycle, spokes, inner star polygon.
fn generalized_petersen(n: usize, k: usize) -> Result<Graph> {
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((i, n + i));
        let j = n + (i + k) % n;
        if n + i < j {
            edges.push((n + i, j));
        } else if !edges.contains(&(j, n + i)) {
            edges.push((j, n + i));
        }
    }
    Graph::from_edges(2 * n, &edges)
}

pub fn petersen() -> Graph {
    generalized_petersen(5, 2).expect("static construction")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Platonic {
    Tetrahedron,
    Cube,
    Octahedron,
    Dodecahedron,
    Icosahedron,
}

impl Platonic {
    pub const ALL: [Platonic; 5] = [
        Platonic::Tetrahedron,
        Platonic::Cube,
        Platonic::Octahedron,
        Platonic::Dodecahedron,
        Platonic::Icosahedron,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Platonic::Tetrahedron => "tetrahedron",
            Platonic::Cube => "cube",
            Platonic::Octahedron => "octahedron",
            Platonic::Dodecahedron => "dodecahedron",
            Platonic::Icosahedron => "icosahedron",
        }
    }
}

impl std::str::FromStr for Platonic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Platonic::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Generator(format!("unknown platonic solid `{s}`")))
    }
}

pub fn platonic(solid: Platonic) -> Graph {
    match solid {
        Platonic::Tetrahedron => complete(4).expect("static"),
        Platonic::Cube => hypercube(3).expect("static"),
        Platonic::Octahedron => {
            // K_6 minus the perfect matching {i, i+3}
            let edges: Vec<_> = (0..6)
                .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
                .filter(|&(u, v)| v != u + 3)
                .collect();
            Graph::from_edges(6, &edges).expect("static")
        }
        Platonic::Dodecahedron => generalized_petersen(10, 2).expect("static"),
        Platonic::Icosahedron => {
            // 0 = top, 1..=5 upper ring, 6..=10 lower ring, 11 = bottom
            let mut edges = Vec::with_capacity(30);
            for i in 0..5 {
                let up = 1 + i;
                let up_next = 1 + (i + 1) % 5;
                let low = 6 + i;
                let low_next = 6 + (i + 1) % 5;
                edges.extend([(0, up), (up, up_next), (low, low_next), (low, 11), (up, low), (up_next, low)]);
            }
            Graph::from_edges(12, &edges).expect("static")
        }
    }
}

pub fn platonic_by_name(name: &str) -> Result<Graph> {
    Ok(platonic(name.parse()?))
}

/// A finite group with a symmetric generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CayleySpec {
    /// `Z/nZ` under addition.
    Cyclic { order: usize, generators: Vec<usize> },
    /// Arbitrary group given by `table[a][b] = a * b`.
    Table { table: Vec<Vec<usize>>, generators: Vec<usize> },
}

impl CayleySpec {
    pub fn cyclic(order: usize, generators: &[usize]) -> Self {
        CayleySpec::Cyclic { order, generators: generators.to_vec() }
    }

    fn multiplication_table(&self) -> Result<(Vec<Vec<usize>>, &[usize])> {
        match self {
            CayleySpec::Cyclic { order, generators } => {
                if *order == 0 {
                    return Err(Error::Cayley("group order must be positive".into()));
                }
                let n = *order;
                let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
                Ok((table, generators))
            }
            CayleySpec::Table { table, generators } => {
                let n = table.len();
                if n == 0 || table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
                    return Err(Error::Cayley("multiplication table must be square over 0..n".into()));
                }
                Ok((table.clone(), generators))
            }
        }
    }
}

/// Cayley graph with edges `{g, g*s}`; vertex `i` is the group element `i`.
pub fn cayley(spec: &CayleySpec) -> Result<Graph> {
    let (table, generators) = spec.multiplication_table()?;
    let n = table.len();
    let identity = (0..n)
        .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
        .ok_or_else(|| Error::Cayley("table has no identity element".into()))?;
    let gens: BTreeSet<usize> = generators.iter().copied().collect();
    if gens.len() != generators.len() {
        return Err(Error::Cayley("duplicate generator".into()));
    }
    for &s in &gens {
        if s >= n {
            return Err(Error::Cayley(format!("generator {s} is not a group element")));
        }
        if s == identity {
            return Err(Error::Cayley("generating set contains the identity".into()));
        }
        let inverse = (0..n).find(|&t| table[s][t] == identity);
        match inverse {
            Some(t) if gens.contains(&t) => {}
            _ => return Err(Error::Cayley(format!("generating set is not closed under inverses at {s}"))),
        }
    }
    let mut edges = BTreeSet::new();
    for g in 0..n {
        for &s in &gens {
            let h = table[g][s];
            edges.insert((g.min(h), g.max(h)));
        }
    }
    let edges: Vec<_> = edges.into_iter().collect();
    let graph = Graph::from_edges(n, &edges)?;
    validate_graph(&graph).map_err(|_| Error::Cayley("generating set does not generate the group".into()))?;
    Ok(graph)
}

/// The 14-vertex pointed graph with index set `{0, 1, 2, 3}` that is
/// (S1)+(S2), hypergroup productive and not distance-regular.
///
/// Labels: 0 is the apex (base point), 1..=6 are B..G, 7 is the antipode
/// A', and 8..=13 are B'..G'.
pub fn figure2_graph() -> PointedGraph {
    const A: usize = 0;
    const B: usize = 1;
    const C: usize = 2;
    const D: usize = 3;
    const E: usize = 4;
    const F: usize = 5;
    const G: usize = 6;
    const A2: usize = 7;
    const B2: usize = 8;
    const C2: usize = 9;
    const D2: usize = 10;
    const E2: usize = 11;
    const F2: usize = 12;
    const G2: usize = 13;
    const EDGES: [(usize, usize); 42] = [
        // vertical
        (B, B2), (C, C2), (D, D2), (E, E2), (F, F2), (G, G2),
        // crossing (first family)
        (B, C2), (C, B2), (D, B2), (B, D2), (C, E2), (E, C2),
        // crossing (second family)
        (D, F2), (F, D2), (F, G2), (G, F2), (G, E2), (E, G2),
        // upper apex star and hexagon
        (A, B), (A, C), (A, D), (A, E), (A, F), (A, G),
        (B, C), (B, D), (C, E), (E, G), (D, F), (F, G),
        // lower apex star and hexagon
        (A2, B2), (A2, C2), (A2, D2), (A2, E2), (A2, F2), (A2, G2),
        (B2, C2), (B2, D2), (C2, E2), (E2, G2), (D2, F2), (F2, G2),
    ];
    let graph = Graph::from_edges(14, &EDGES).expect("static construction");
    PointedGraph::new(graph, A).expect("apex in range")
}
