//! Multigraphs, their cycle matroids, cactus recognition and the bundled
//! outerplanar fixtures.

use serde::{Deserialize, Serialize};

use crate::betti::CycleProfile;
use crate::error::{Error, Result};
use crate::matroid::{Dsu, Matroid};
use crate::subset::Subset;

/// A finite multigraph. Loops and parallel edges are allowed; the position of an edge
/// in [`Graph::edges`] is its label in the cycle matroid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

/// External form: 1-indexed vertices.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

impl Graph {
    /// Builds a graph on vertices `0..vertex_count` (0-indexed).
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Graph> {
        if vertex_count == 0 {
            return Err(Error::invalid("a graph needs at least one vertex"));
        }
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= vertex_count || v >= vertex_count) {
            return Err(Error::invalid(format!(
                "edge ({u}, {v}) has an endpoint outside 0..{vertex_count}"
            )));
        }
        Ok(Graph { vertex_count, edges })
    }

    /// Builds a graph from 1-indexed edge endpoints.
    pub fn from_one_indexed(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut out = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u == 0 || v == 0 {
                return Err(Error::invalid(format!("edge ({u}, {v}): vertices are 1-indexed")));
            }
            out.push((u - 1, v - 1));
        }
        Graph::new(vertex_count, out)
    }

    /// The cycle `C_n` on vertices `0..n`, edges `(i, i+1 mod n)`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 1);
        Graph { vertex_count: n, edges: (0..n).map(|i| (i, (i + 1) % n)).collect() }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_connected(&self) -> bool {
        let mut dsu = Dsu::new(self.vertex_count);
        let mut parts = self.vertex_count;
        for &(u, v) in &self.edges {
            if dsu.union(u, v) {
                parts -= 1;
            }
        }
        parts == 1
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            vertices: self.vertex_count,
            edges: self.edges.iter().map(|&(u, v)| [u + 1, v + 1]).collect(),
        }
    }

    pub fn from_json(j: &GraphJson) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = j.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_one_indexed(j.vertices, &edges)
    }

    /// Parses a plain edge list: one `u v` pair per line (1-indexed), `#` starts a comment.
    /// The vertex count is the largest label seen.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let nums: Vec<&str> = line.split_whitespace().collect();
            let parse = |t: &str| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("line {}: bad vertex {t:?}", lineno + 1)))
            };
            match nums.as_slice() {
                [u, v] => edges.push((parse(u)?, parse(v)?)),
                _ => {
                    return Err(Error::Parse(format!(
                        "line {}: expected two vertices, got {line:?}",
                        lineno + 1
                    )))
                }
            }
        }
        let vertices = edges.iter().map(|&(u, v)| u.max(v)).max().unwrap_or(1);
        Graph::from_one_indexed(vertices, &edges)
    }
}

/// The cycle matroid `M(G)`: a set of edges is independent iff it is a forest.
pub fn cycle_matroid(g: &Graph) -> Result<Matroid> {
    Matroid::graphic(g)
}

/// Result of cactus recognition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CactusCertificate {
    pub is_cactus: bool,
    /// Edge sets of the cycle blocks (length >= 2), ordered by smallest edge.
    pub cycles: Vec<Subset>,
    /// Single-edge blocks that are not loops.
    pub bridges: Vec<usize>,
    pub loops: usize,
    /// Blocks that are neither a cycle nor a single edge.
    pub offending: Vec<Subset>,
}

impl CactusCertificate {
    /// Cycle lengths with loops encoded as length 1, sorted ascending.
    pub fn profile(&self) -> Result<CycleProfile> {
        if !self.is_cactus {
            return Err(Error::NotACactus(format!(
                "{} block(s) are neither cycles nor single edges",
                self.offending.len()
            )));
        }
        let mut lengths: Vec<u64> = self.cycles.iter().map(|c| c.len() as u64).collect();
        lengths.extend(std::iter::repeat_n(1, self.loops));
        CycleProfile::new(lengths)
    }
}

/// Checks whether every block of a connected graph is a cycle or a single edge.
pub fn is_cactus(g: &Graph) -> Result<CactusCertificate> {
    if !g.is_connected() {
        return Err(Error::invalid("cactus recognition needs a connected graph"));
    }
    let m = cycle_matroid(g)?;
    let mut cert = CactusCertificate {
        is_cactus: true,
        cycles: Vec::new(),
        bridges: Vec::new(),
        loops: 0,
        offending: Vec::new(),
    };
    for block in m.blocks().iter() {
        let k = block.elements.len();
        let rank = block.matroid.full_rank();
        if k == 1 {
            if rank == 0 {
                cert.loops += 1;
            } else {
                cert.bridges.push(block.elements.iter().next().unwrap());
            }
        } else if rank + 1 == k {
            // a connected block of nullity one is a single circuit
            cert.cycles.push(block.elements);
        } else {
            cert.is_cactus = false;
            cert.offending.push(block.elements);
        }
    }
    Ok(cert)
}

/// Bundled fixture graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fixture {
    G1,
    G2,
    G3,
    G4,
}

impl Fixture {
    pub const ALL: [Fixture; 4] = [Fixture::G1, Fixture::G2, Fixture::G3, Fixture::G4];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::G1 => "g1",
            Fixture::G2 => "g2",
            Fixture::G3 => "g3",
            Fixture::G4 => "g4",
        }
    }

    pub fn parse(name: &str) -> Result<Fixture> {
        match name.to_ascii_lowercase().as_str() {
            "g1" => Ok(Fixture::G1),
            "g2" => Ok(Fixture::G2),
            "g3" => Ok(Fixture::G3),
            "g4" => Ok(Fixture::G4),
            other => Err(Error::invalid(format!("unknown fixture {other:?}; expected g1..g4"))),
        }
    }

    pub fn graph(self) -> Graph {
        fixture(self)
    }
}

/// Outer cycle `1..n` followed by the chords, all 1-indexed.
fn cycle_with_chords(n: usize, chords: &[(usize, usize)]) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..=n).map(|i| (i, i % n + 1)).collect();
    edges.extend_from_slice(chords);
    Graph::from_one_indexed(n, &edges).expect("fixture edges are in range")
}

/// The outerplanar graphs G1..G4: G1/G2 share Betti numbers but not weights,
/// G3/G4 share weights but not Betti numbers.
pub fn fixture(which: Fixture) -> Graph {
    match which {
        Fixture::G1 => cycle_with_chords(10, &[(1, 3), (1, 6), (1, 9), (9, 7)]),
        Fixture::G2 => cycle_with_chords(10, &[(1, 4), (1, 5), (1, 9), (9, 7)]),
        Fixture::G3 => cycle_with_chords(7, &[(1, 4), (1, 6)]),
        Fixture::G4 => cycle_with_chords(7, &[(1, 3), (1, 6)]),
    }
}
