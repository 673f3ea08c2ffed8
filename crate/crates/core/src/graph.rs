//! Finite simple connected graphs, the built-in families, and the
//! rooted ball/sphere structure the construction walks outward along.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error(
        "graph is disconnected ({reached} of {vertex_count} vertices reachable from vertex 0)"
    )]
    Disconnected { reached: usize, vertex_count: usize },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
}

/// A generating family, used both to build test graphs and to tag the
/// resulting [`Graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// The `degree`-regular tree truncated at distance `radius` from the root.
    Tree {
        degree: usize,
        radius: usize,
    },
    Cycle {
        n: usize,
    },
    Path {
        n: usize,
    },
    Complete {
        n: usize,
    },
    CompleteBipartite {
        m: usize,
        n: usize,
    },
    Grid {
        w: usize,
        h: usize,
    },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<(), GraphError> {
        let bad = |msg: &str| Err(GraphError::InvalidFamily(msg.to_string()));
        match *self {
            FamilySpec::Tree { degree, radius } => {
                if degree < 2 {
                    return bad("tree requires degree >= 2");
                }
                if radius < 1 {
                    return bad("tree requires radius >= 1");
                }
            }
            FamilySpec::Cycle { n } if n < 3 => return bad("cycle requires n >= 3"),
            FamilySpec::Path { n } | FamilySpec::Complete { n } if n < 1 => {
                return bad("n must be positive")
            }
            FamilySpec::CompleteBipartite { m, n } if m < 1 || n < 1 => {
                return bad("complete_bipartite requires m, n >= 1")
            }
            FamilySpec::Grid { w, h } if w < 1 || h < 1 => return bad("grid requires w, h >= 1"),
            _ => {}
        }
        Ok(())
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Tree { degree, radius } => write!(f, "tree(d={degree},K={radius})"),
            FamilySpec::Cycle { n } => write!(f, "cycle(n={n})"),
            FamilySpec::Path { n } => write!(f, "path(n={n})"),
            FamilySpec::Complete { n } => write!(f, "complete(n={n})"),
            FamilySpec::CompleteBipartite { m, n } => write!(f, "complete_bipartite(m={m},n={n})"),
            FamilySpec::Grid { w, h } => write!(f, "grid(w={w},h={h})"),
        }
    }
}

/// Immutable, validated graph on the vertices `0..vertex_count`.
///
/// Equality compares structure only; the family tag is informational.
#[derive(Debug, Clone)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    family: Option<FamilySpec>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adjacency == other.adjacency
    }
}

impl Eq for Graph {}

impl Graph {
    /// Validates and builds a graph from an edge list.
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: x,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u.min(w[0]), u.max(w[0]));
                return Err(GraphError::DuplicateEdge { u: a, v: b });
            }
        }
        let graph = Graph {
            adjacency,
            family: None,
        };
        if vertex_count > 0 {
            let reached = graph.distances(0).iter().filter(|d| d.is_some()).count();
            if reached != vertex_count {
                return Err(GraphError::Disconnected {
                    reached,
                    vertex_count,
                });
            }
        }
        Ok(graph)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn family(&self) -> Option<FamilySpec> {
        self.family
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.vertex_count()
    }

    /// Breadth-first distances from `root`; `None` for unreachable vertices
    /// (only possible while validating connectivity).
    pub fn distances(&self, root: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[root] = Some(0);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Distances from `root` in a connected graph.
    pub fn distances_from(&self, root: usize) -> Vec<usize> {
        self.distances(root)
            .into_iter()
            .map(|d| d.expect("validated graphs are connected"))
            .collect()
    }

    /// `S(root, k)`: vertices at distance exactly `k`, ascending.
    pub fn sphere(&self, root: usize, k: usize) -> Vec<usize> {
        let dist = self.distances_from(root);
        (0..self.vertex_count()).filter(|&v| dist[v] == k).collect()
    }

    /// `B(root, k)`: vertices at distance at most `k`, ascending.
    pub fn ball(&self, root: usize, k: usize) -> Vec<usize> {
        let dist = self.distances_from(root);
        (0..self.vertex_count()).filter(|&v| dist[v] <= k).collect()
    }

    pub fn eccentricity(&self, root: usize) -> usize {
        self.distances_from(root).into_iter().max().unwrap_or(0)
    }

    /// Builds a member of a built-in family with deterministic numbering.
    pub fn family_graph(spec: FamilySpec) -> Result<Graph, GraphError> {
        spec.validate()?;
        let mut edges = Vec::new();
        let n = match spec {
            FamilySpec::Tree { degree, radius } => {
                // Breadth-first numbering: children of vertex u are appended
                // when u is dequeued.
                let mut depth = vec![0usize];
                let mut next = 1;
                let mut u = 0;
                while u < depth.len() {
                    if depth[u] < radius {
                        let children = if u == 0 { degree } else { degree - 1 };
                        for _ in 0..children {
                            edges.push((u, next));
                            depth.push(depth[u] + 1);
                            next += 1;
                        }
                    }
                    u += 1;
                }
                depth.len()
            }
            FamilySpec::Cycle { n } => {
                edges.extend((0..n).map(|i| (i, (i + 1) % n)));
                n
            }
            FamilySpec::Path { n } => {
                edges.extend((1..n).map(|i| (i - 1, i)));
                n
            }
            FamilySpec::Complete { n } => {
                for u in 0..n {
                    edges.extend((u + 1..n).map(|v| (u, v)));
                }
                n
            }
            FamilySpec::CompleteBipartite { m, n } => {
                for u in 0..m {
                    edges.extend((m..m + n).map(|v| (u, v)));
                }
                m + n
            }
            FamilySpec::Grid { w, h } => {
                for y in 0..h {
                    for x in 0..w {
                        let v = y * w + x;
                        if x + 1 < w {
                            edges.push((v, v + 1));
                        }
                        if y + 1 < h {
                            edges.push((v, v + w));
                        }
                    }
                }
                w * h
            }
        };
        let mut graph = Graph::new(n, &edges)?;
        graph.family = Some(spec);
        Ok(graph)
    }

    /// Adjacency-list text: the vertex count, then one `u v` line per edge.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.vertex_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl FromStr for Graph {
    type Err = GraphError;

    fn from_str(text: &str) -> Result<Graph, GraphError> {
        let mut vertex_count = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let syntax = |message: String| GraphError::Syntax {
                line: line_no,
                message,
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parse = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| syntax(format!("expected a non-negative integer, found {s:?}")))
            };
            match vertex_count {
                None => {
                    if fields.len() != 1 {
                        return Err(syntax("expected the vertex count on its own line".into()));
                    }
                    vertex_count = Some(parse(fields[0])?);
                }
                Some(_) => {
                    if fields.len() != 2 {
                        return Err(syntax(format!(
                            "expected an edge \"u v\", found {} fields",
                            fields.len()
                        )));
                    }
                    edges.push((parse(fields[0])?, parse(fields[1])?));
                }
            }
        }
        let vertex_count = vertex_count.ok_or(GraphError::Syntax {
            line: text.lines().count().max(1),
            message: "missing vertex count".into(),
        })?;
        Graph::new(vertex_count, &edges)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn family(spec: FamilySpec) -> Graph {
        Graph::family_graph(spec).unwrap()
    }

    #[test]
    fn builds_k2_and_c5() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.neighbours(0), &[1]);
        assert_eq!(k2.neighbours(1), &[0]);
        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5.max_degree(), 2);
        assert_eq!(c5.neighbours(0), &[1, 4]);
    }

    #[test]
    fn rejects_malformed_input_with_distinct_errors() {
        assert_eq!(
            Graph::new(3, &[(0, 1)]),
            Err(GraphError::Disconnected {
                reached: 2,
                vertex_count: 3
            })
        );
        assert_eq!(
            Graph::new(2, &[(1, 1)]),
            Err(GraphError::SelfLoop { vertex: 1 })
        );
        assert_eq!(
            Graph::new(2, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge { u: 0, v: 1 })
        );
        assert_eq!(
            Graph::new(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange {
                vertex: 2,
                vertex_count: 2
            })
        );
    }

    #[test]
    fn family_sizes() {
        assert_eq!(
            family(FamilySpec::Tree {
                degree: 3,
                radius: 2
            })
            .vertex_count(),
            10
        );
        let k4 = family(FamilySpec::Complete { n: 4 });
        assert_eq!(k4.max_degree(), 3);
        let c5 = family(FamilySpec::Cycle { n: 5 });
        assert_eq!(
            c5,
            Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
        );
        assert_eq!(
            family(FamilySpec::CompleteBipartite { m: 3, n: 3 }).edge_count(),
            9
        );
        assert_eq!(family(FamilySpec::Grid { w: 3, h: 2 }).edge_count(), 7);
    }

    #[test]
    fn tree_numbering_is_breadth_first() {
        let t = family(FamilySpec::Tree {
            degree: 3,
            radius: 2,
        });
        assert_eq!(t.neighbours(0), &[1, 2, 3]);
        assert_eq!(t.neighbours(1), &[0, 4, 5]);
        assert_eq!(t.neighbours(3), &[0, 8, 9]);
        assert_eq!(t.sphere(0, 1), vec![1, 2, 3]);
        assert_eq!(t.sphere(0, 2), (4..10).collect::<Vec<_>>());
    }

    #[test]
    fn invalid_family_parameters() {
        for spec in [
            FamilySpec::Tree {
                degree: 1,
                radius: 2,
            },
            FamilySpec::Tree {
                degree: 3,
                radius: 0,
            },
            FamilySpec::Cycle { n: 2 },
            FamilySpec::Path { n: 0 },
            FamilySpec::CompleteBipartite { m: 0, n: 2 },
            FamilySpec::Grid { w: 0, h: 1 },
        ] {
            assert!(matches!(
                Graph::family_graph(spec),
                Err(GraphError::InvalidFamily(_))
            ));
        }
    }

    #[test]
    fn spheres_and_eccentricity() {
        let t = family(FamilySpec::Tree {
            degree: 3,
            radius: 3,
        });
        assert_eq!(t.sphere(0, 2).len(), 6);
        let c6 = family(FamilySpec::Cycle { n: 6 });
        assert_eq!(c6.sphere(0, 3), vec![3]);
        assert_eq!(c6.sphere(0, 0), vec![0]);
        assert!(c6.sphere(0, 4).is_empty());
        for root in 0..6 {
            assert_eq!(c6.eccentricity(root), 3);
        }
        assert_eq!(family(FamilySpec::Path { n: 5 }).eccentricity(0), 4);
        assert_eq!(family(FamilySpec::Complete { n: 4 }).eccentricity(2), 1);
        assert_eq!(c6.ball(0, 1), vec![0, 1, 5]);
    }

    #[test]
    fn text_format() {
        let k2: Graph = "2\n0 1\n".parse().unwrap();
        assert_eq!(k2, Graph::new(2, &[(0, 1)]).unwrap());
        let c5 = family(FamilySpec::Cycle { n: 5 });
        assert_eq!(c5.to_text(), "5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
        assert_eq!(
            "2\n0 2\n".parse::<Graph>(),
            Err(GraphError::VertexOutOfRange {
                vertex: 2,
                vertex_count: 2
            })
        );
        let commented: Graph = "# a path\n3\n\n0 1\n# middle\n1 2\n".parse().unwrap();
        assert_eq!(commented, family(FamilySpec::Path { n: 3 }));
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        match "3\n0 1\n1 x\n".parse::<Graph>() {
            Err(GraphError::Syntax { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        match "3\n0 1 2\n".parse::<Graph>() {
            Err(GraphError::Syntax { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            "".parse::<Graph>(),
            Err(GraphError::Syntax { .. })
        ));
    }
}
