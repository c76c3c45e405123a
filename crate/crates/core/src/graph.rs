//! Finite simple graphs, BFS distances and sphere bookkeeping.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::outcome::Outcome;

/// Finite simple undirected graph on vertices `0..n`.
///
/// Construction rejects self-loops, duplicate edges and out-of-range
/// endpoints, so every `Graph` value is simple. Connectivity is checked
/// separately by [`validate_graph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::NotSimple(format!(
                    "edge ({u}, {v}) out of range for {vertex_count} vertices"
                )));
            }
            if u == v {
                return Err(Error::NotSimple(format!("self-loop at {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (v, nbrs) in adjacency.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if let Some(w) = nbrs.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::NotSimple(format!("duplicate edge ({v}, {})", w[0])));
            }
        }
        Ok(Graph { adjacency })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or_default();
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// All-pairs distances by one BFS per vertex. Requires a connected graph.
    pub fn all_pairs_distances(&self) -> Result<DistanceMatrix> {
        validate_graph(self)?;
        let n = self.vertex_count();
        let mut data = Vec::with_capacity(n * n);
        for s in 0..n {
            data.extend(self.bfs(s).into_iter().map(|d| d.expect("connected graph")));
        }
        Ok(DistanceMatrix { n, data })
    }

    /// Writes the canonical edge-list text: `n m`, then one `u v` per line
    /// with `u < v` in sorted order.
    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.vertex_count(), edges.len());
        for (u, v) in edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Parses the edge-list format. Blank lines and `#` comments are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let parse_pair = |line: usize, l: &str| -> Result<(usize, usize)> {
            let mut it = l.split_whitespace();
            let mut next = || -> Result<usize> {
                let tok = it.next().ok_or_else(|| Error::Parse {
                    line,
                    message: "expected two integers".into(),
                })?;
                tok.parse().map_err(|_| Error::Parse {
                    line,
                    message: format!("not a non-negative integer: `{tok}`"),
                })
            };
            let a = next()?;
            let b = next()?;
            if it.next().is_some() {
                return Err(Error::Parse { line, message: "trailing tokens".into() });
            }
            Ok((a, b))
        };

        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            message: "missing `n m` header".into(),
        })?;
        let (n, m) = parse_pair(hline, header)?;
        let mut edges = Vec::with_capacity(m);
        for (line, l) in lines {
            let (u, v) = parse_pair(line, l)?;
            if u >= n || v >= n {
                return Err(Error::Parse {
                    line,
                    message: format!("vertex out of range 0..{n}"),
                });
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: 0,
                message: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
        Graph::from_edges(n, &edges)
    }

    /// Induced relabeling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::Precondition("relabeling is not a permutation".into()));
        }
        let edges: Vec<_> = self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(n, &edges)
    }
}

/// Succeeds iff `g` is non-empty and connected (BFS from vertex 0).
pub fn validate_graph(g: &Graph) -> Result<()> {
    if g.vertex_count() == 0 {
        return Err(Error::Empty);
    }
    let unreached: Vec<usize> = g
        .bfs(0)
        .iter()
        .enumerate()
        .filter(|(_, d)| d.is_none())
        .map(|(v, _)| v)
        .collect();
    if unreached.is_empty() {
        Ok(())
    } else {
        Err(Error::Disconnected { unreached })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointedGraph {
    graph: Graph,
    base_point: usize,
}

impl PointedGraph {
    pub fn new(graph: Graph, base_point: usize) -> Result<Self> {
        if base_point >= graph.vertex_count() {
            return Err(Error::BasePoint { base: base_point, vertex_count: graph.vertex_count() });
        }
        Ok(PointedGraph { graph, base_point })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn base_point(&self) -> usize {
        self.base_point
    }

    pub fn with_base(&self, base_point: usize) -> Result<Self> {
        PointedGraph::new(self.graph.clone(), base_point)
    }
}

/// Dense `n x n` matrix of graph distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<usize>,
}

impl DistanceMatrix {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.data[x * self.n + y]
    }

    pub fn row(&self, x: usize) -> &[usize] {
        &self.data[x * self.n..(x + 1) * self.n]
    }

    pub fn eccentricity(&self, v: usize) -> usize {
        self.row(v).iter().copied().max().unwrap_or(0)
    }

    pub fn diameter(&self) -> usize {
        self.data.iter().copied().max().unwrap_or(0)
    }

    /// `|S_k(v)|`.
    pub fn sphere_size(&self, v: usize, k: usize) -> usize {
        self.row(v).iter().filter(|&&d| d == k).count()
    }

    /// `S_k(v)` in increasing vertex order.
    pub fn sphere(&self, v: usize, k: usize) -> Vec<usize> {
        self.row(v).iter().enumerate().filter(|(_, &d)| d == k).map(|(w, _)| w).collect()
    }

    /// `|S_i(v) ∩ S_j(u)|`.
    pub fn intersection(&self, v: usize, i: usize, u: usize, j: usize) -> usize {
        self.row(v).iter().zip(self.row(u)).filter(|(&a, &b)| a == i && b == j).count()
    }

    /// `spheres[v][k] = S_k(v)` for `k = 0..=diameter`.
    pub fn sphere_index(&self) -> SphereIndex {
        let diam = self.diameter();
        let spheres = (0..self.n)
            .map(|v| {
                let mut by_k = vec![Vec::new(); diam + 1];
                for (w, &d) in self.row(v).iter().enumerate() {
                    by_k[d].push(w);
                }
                by_k
            })
            .collect();
        SphereIndex { spheres }
    }
}

/// Precomputed `S_k(v)` for every vertex and radius.
#[derive(Debug, Clone)]
pub struct SphereIndex {
    spheres: Vec<Vec<Vec<usize>>>,
}

impl SphereIndex {
    pub fn sphere(&self, v: usize, k: usize) -> &[usize] {
        self.spheres[v].get(k).map(Vec::as_slice).unwrap_or(&[])
    }
}

/// Distances and spheres relative to the base point of a pointed graph.
#[derive(Debug, Clone)]
pub struct DistanceProfile {
    pub base_point: usize,
    pub distances_from_base: Vec<usize>,
    /// `S_k(v0)` for `k = 0..=diameter`.
    pub spheres: Vec<Vec<usize>>,
    /// `mu_k = |S_k(v0)|`.
    pub sphere_sizes: Vec<usize>,
    pub diameter: usize,
    pub all_pairs: DistanceMatrix,
}

impl DistanceProfile {
    /// `|I(Γ, v0)| = diam + 1`.
    pub fn index_set_size(&self) -> usize {
        self.diameter + 1
    }

    pub fn vertex_count(&self) -> usize {
        self.all_pairs.vertex_count()
    }

    /// Smallest-index vertex of `S_k(v0)`, used wherever a sphere
    /// representative is needed.
    pub fn representative(&self, k: usize) -> Option<usize> {
        self.spheres.get(k).and_then(|s| s.first().copied())
    }
}

pub fn compute_distance_profile(pg: &PointedGraph) -> Result<DistanceProfile> {
    let all_pairs = pg.graph().all_pairs_distances()?;
    let base = pg.base_point();
    let diameter = all_pairs.diameter();
    let distances_from_base = all_pairs.row(base).to_vec();
    let mut spheres = vec![Vec::new(); diameter + 1];
    for (v, &d) in distances_from_base.iter().enumerate() {
        spheres[d].push(v);
    }
    let sphere_sizes = spheres.iter().map(Vec::len).collect();
    Ok(DistanceProfile { base_point: base, distances_from_base, spheres, sphere_sizes, diameter, all_pairs })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EccentricityWitness {
    pub v: usize,
    pub ecc_v: usize,
    pub w: usize,
    pub ecc_w: usize,
}

pub type SelfCentered = Outcome<EccentricityWitness>;

/// All eccentricities equal? The witness pairs vertex 0 with the first
/// vertex whose eccentricity differs.
pub fn check_self_centered(distances: &DistanceMatrix) -> SelfCentered {
    let ecc0 = distances.eccentricity(0);
    let witness = (1..distances.vertex_count()).find_map(|w| {
        let ecc_w = distances.eccentricity(w);
        (ecc_w != ecc0).then_some(EccentricityWitness { v: 0, ecc_v: ecc0, w, ecc_w })
    });
    Outcome::from_witness(witness)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn c4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn rejects_non_simple_input() {
        assert!(matches!(Graph::from_edges(2, &[(0, 0)]), Err(Error::NotSimple(_))));
        assert!(matches!(Graph::from_edges(2, &[(0, 1), (1, 0)]), Err(Error::NotSimple(_))));
        assert!(matches!(Graph::from_edges(2, &[(0, 2)]), Err(Error::NotSimple(_))));
    }

    #[test]
    fn validate_examples() {
        assert!(validate_graph(&path3()).is_ok());
        assert!(validate_graph(&c4()).is_ok());
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(validate_graph(&two), Err(Error::Disconnected { unreached: vec![2, 3] }));
        assert_eq!(validate_graph(&Graph::from_edges(0, &[]).unwrap()), Err(Error::Empty));
    }

    #[test]
    fn profile_of_four_cycle() {
        let p = compute_distance_profile(&PointedGraph::new(c4(), 0).unwrap()).unwrap();
        assert_eq!(p.sphere_sizes, vec![1, 2, 1]);
        assert_eq!(p.diameter, 2);
        assert_eq!(p.spheres[1], vec![1, 3]);
        assert_eq!(p.representative(2), Some(2));
    }

    #[test]
    fn profile_of_single_vertex() {
        let g = Graph::from_edges(1, &[]).unwrap();
        let p = compute_distance_profile(&PointedGraph::new(g, 0).unwrap()).unwrap();
        assert_eq!(p.sphere_sizes, vec![1]);
        assert_eq!(p.diameter, 0);
        assert_eq!(p.index_set_size(), 1);
    }

    #[test]
    fn base_point_out_of_range() {
        assert!(matches!(PointedGraph::new(c4(), 4), Err(Error::BasePoint { .. })));
    }

    #[test]
    fn path_is_not_self_centered() {
        let d = path3().all_pairs_distances().unwrap();
        let sc = check_self_centered(&d);
        assert!(!sc.holds);
        assert_eq!(sc.witness, Some(EccentricityWitness { v: 0, ecc_v: 2, w: 1, ecc_w: 1 }));
    }

    #[test]
    fn edge_list_parse_and_write() {
        let text = "# a square\n4 4\n\n0 1\n1 2\n# comment\n2 3\n3 0\n";
        let g = Graph::parse_edge_list(text).unwrap();
        assert_eq!(g, c4());
        assert_eq!(g.to_edge_list(), "4 4\n0 1\n0 3\n1 2\n2 3\n");
        assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(Graph::parse_edge_list(""), Err(Error::Parse { .. })));
        assert!(matches!(Graph::parse_edge_list("3 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(Graph::parse_edge_list("3 1\n0 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Graph::parse_edge_list("3 1\n0 3\n"), Err(Error::Parse { .. })));
        assert!(matches!(Graph::parse_edge_list("3 1\n1 1\n"), Err(Error::NotSimple(_))));
    }

    #[test]
    fn intersections_and_spheres() {
        let d = c4().all_pairs_distances().unwrap();
        assert_eq!(d.sphere(0, 1), vec![1, 3]);
        assert_eq!(d.intersection(2, 1, 0, 1), 2);
        let idx = d.sphere_index();
        assert_eq!(idx.sphere(2, 2), &[0]);
        assert_eq!(idx.sphere(2, 7), &[] as &[usize]);
    }
}
