//! The sphere-symmetry conditions (S1), (S2) and distance-regularity.

use serde::{Deserialize, Serialize};

use crate::graph::{DistanceMatrix, DistanceProfile};
use crate::outcome::Outcome;

/// `|S_index(v)| != |S_index(w)|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct S1Witness {
    pub index: usize,
    pub v: usize,
    pub size_v: usize,
    pub w: usize,
    pub size_w: usize,
}

/// `v, w ∈ S_k(v0)` but `|S_i(v) ∩ S_j(v0)| != |S_i(w) ∩ S_j(v0)|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct S2Witness {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub v: usize,
    pub count_v: usize,
    pub w: usize,
    pub count_w: usize,
}

/// Two vertex pairs at the same distance `k` whose intersection numbers
/// `|S_i(·) ∩ S_j(·)|` differ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceRegularWitness {
    pub k: usize,
    pub i: usize,
    pub j: usize,
    pub reference: (usize, usize),
    pub reference_count: usize,
    pub pair: (usize, usize),
    pub pair_count: usize,
}

/// `counts[a][b][c] = |S_b(z_a) ∩ S_c(v0)|` where `z_a` is the smallest
/// vertex of `S_a(v0)`. Under (S2) the choice of `z_a` is immaterial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionTables {
    pub representatives: Vec<usize>,
    pub counts: Vec<Vec<Vec<usize>>>,
}

impl IntersectionTables {
    pub fn get(&self, sphere: usize, radius: usize, base_sphere: usize) -> usize {
        self.counts[sphere][radius][base_sphere]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct S2Outcome {
    pub holds: bool,
    pub witness: Option<S2Witness>,
    /// Present only when (S2) holds.
    pub tables: Option<IntersectionTables>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryReport {
    pub s1: Outcome<S1Witness>,
    pub s2: S2Outcome,
    pub distance_regular: Outcome<DistanceRegularWitness>,
}

impl SymmetryReport {
    pub fn s1s2(&self) -> bool {
        self.s1.holds && self.s2.holds
    }
}

pub fn symmetry_report(profile: &DistanceProfile) -> SymmetryReport {
    SymmetryReport {
        s1: check_s1(profile),
        s2: check_s2(profile),
        distance_regular: check_distance_regular(&profile.all_pairs),
    }
}

/// (S1): `|S_i(·)|` is constant on `V` for every `i ∈ I(Γ, v0)`.
pub fn check_s1(profile: &DistanceProfile) -> Outcome<S1Witness> {
    let d = &profile.all_pairs;
    let n = d.vertex_count();
    // sizes[v][i] = |S_i(v)|
    let sizes: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut s = vec![0; profile.index_set_size()];
            for &x in d.row(v) {
                s[x] += 1;
            }
            s
        })
        .collect();
    let witness = (0..profile.index_set_size()).find_map(|index| {
        (1..n).find(|&w| sizes[w][index] != sizes[0][index]).map(|w| S1Witness {
            index,
            v: 0,
            size_v: sizes[0][index],
            w,
            size_w: sizes[w][index],
        })
    });
    Outcome::from_witness(witness)
}

/// `hist[i][j] = |S_i(v) ∩ S_j(v0)|` for one vertex `v`.
fn base_histogram(profile: &DistanceProfile, v: usize) -> Vec<Vec<usize>> {
    let size = profile.index_set_size();
    let mut hist = vec![vec![0; size]; size];
    for (&dv, &d0) in profile.all_pairs.row(v).iter().zip(&profile.distances_from_base) {
        hist[dv][d0] += 1;
    }
    hist
}

/// (S2): `|S_i(·) ∩ S_j(v0)|` is constant on each `S_k(v0)`.
pub fn check_s2(profile: &DistanceProfile) -> S2Outcome {
    let size = profile.index_set_size();
    let hists: Vec<Vec<Vec<usize>>> = (0..profile.vertex_count()).map(|v| base_histogram(profile, v)).collect();
    let mut witness = None;
    'scan: for i in 0..size {
        for j in 0..size {
            for (k, sphere) in profile.spheres.iter().enumerate() {
                let Some((&rep, rest)) = sphere.split_first() else { continue };
                if let Some(&w) = rest.iter().find(|&&w| hists[w][i][j] != hists[rep][i][j]) {
                    witness = Some(S2Witness {
                        i,
                        j,
                        k,
                        v: rep,
                        count_v: hists[rep][i][j],
                        w,
                        count_w: hists[w][i][j],
                    });
                    break 'scan;
                }
            }
        }
    }
    let tables = witness.is_none().then(|| {
        let representatives: Vec<usize> = profile.spheres.iter().map(|s| s.first().copied().unwrap_or(usize::MAX)).collect();
        let counts = representatives
            .iter()
            .map(|&z| if z == usize::MAX { vec![vec![0; size]; size] } else { hists[z].clone() })
            .collect();
        IntersectionTables { representatives, counts }
    });
    S2Outcome { holds: witness.is_none(), witness, tables }
}

/// Intersection numbers `|S_i(v) ∩ S_j(w)|` depend only on `(i, j, d(v, w))`.
///
/// Literal O(n^3) scan over all ordered pairs; the reference pair for each
/// distance is the lexicographically first pair at that distance.
pub fn check_distance_regular(d: &DistanceMatrix) -> Outcome<DistanceRegularWitness> {
    let n = d.vertex_count();
    let size = d.diameter() + 1;
    let mut references: Vec<Option<((usize, usize), Vec<usize>)>> = vec![None; size];
    let mut table = vec![0usize; size * size];
    for v in 0..n {
        for w in 0..n {
            table.iter_mut().for_each(|c| *c = 0);
            for (&a, &b) in d.row(v).iter().zip(d.row(w)) {
                table[a * size + b] += 1;
            }
            let k = d.get(v, w);
            match &references[k] {
                None => references[k] = Some(((v, w), table.clone())),
                Some((reference, ref_table)) => {
                    if let Some(idx) = (0..size * size).find(|&idx| ref_table[idx] != table[idx]) {
                        return Outcome::from_witness(Some(DistanceRegularWitness {
                            k,
                            i: idx / size,
                            j: idx % size,
                            reference: *reference,
                            reference_count: ref_table[idx],
                            pair: (v, w),
                            pair_count: table[idx],
                        }));
                    }
                }
            }
        }
    }
    Outcome::from_witness(None)
}
