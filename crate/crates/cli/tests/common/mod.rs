#![allow(dead_code)]

use graph_hypergroup::generators::{cayley, complete, cycle, figure2_graph, hypercube, petersen, platonic, CayleySpec, Platonic};
use graph_hypergroup::PointedGraph;

/// The (S1)+(S2) corpus, every member pointed at vertex 0.
pub fn corpus() -> Vec<(String, PointedGraph)> {
    let mut out = Vec::new();
    let mut push = |name: String, g| out.push((name, PointedGraph::new(g, 0).unwrap()));
    for n in 3..=12 {
        push(format!("cycle {n}"), cycle(n).unwrap());
    }
    for n in 2..=8 {
        push(format!("complete {n}"), complete(n).unwrap());
    }
    push("petersen".into(), petersen());
    for d in 2..=4 {
        push(format!("hypercube {d}"), hypercube(d).unwrap());
    }
    for solid in Platonic::ALL {
        push(format!("platonic {}", solid.name()), platonic(solid));
    }
    out.push(("fig2".into(), figure2_graph()));
    out
}

/// Triangular prism: (S1) without (S2), still productive.
pub fn prism() -> PointedGraph {
    PointedGraph::new(cayley(&CayleySpec::cyclic(6, &[2, 3, 4])).unwrap(), 0).unwrap()
}

/// Circulant on Z/12 with connection set {±1, ±4}: (S1) without (S2), not associative.
pub fn circulant_12_1_4() -> PointedGraph {
    PointedGraph::new(cayley(&CayleySpec::cyclic(12, &[1, 4, 8, 11])).unwrap(), 0).unwrap()
}

/// All sequences over `0..size` with lengths `1..=max_len`.
pub fn sequences(size: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|s| (0..size).map(move |i| s.iter().copied().chain([i]).collect::<Vec<_>>()))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}
