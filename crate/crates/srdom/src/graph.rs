//! Simple undirected graphs, the join operator, and the standard families
//! (paths, cycles, completes, wheels, fans, friendship graphs, matchings).

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge endpoint {vertex} out of range for order {order}")]
    EndpointOutOfRange { vertex: usize, order: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{family} requires {param} >= {min}, got {got}")]
    ParamOutOfRange {
        family: &'static str,
        param: &'static str,
        min: usize,
        got: usize,
    },
}

/// An immutable simple undirected graph stored as sorted adjacency lists.
///
/// Invariants: no self-loops, symmetric adjacency, all indices in
/// `[0, order)`. Every constructor upholds them, so shared references can be
/// used freely across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    neighbors: Vec<Vec<usize>>,
}

impl Graph {
    /// The edgeless graph on `order` vertices.
    pub fn edgeless(order: usize) -> Self {
        Graph {
            neighbors: vec![Vec::new(); order],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged; a
    /// self-loop or an out-of-range endpoint is an error.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut neighbors = vec![Vec::new(); order];
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= order {
                    return Err(GraphError::EndpointOutOfRange { vertex: w, order });
                }
            }
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        for list in &mut neighbors {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { neighbors })
    }

    pub fn order(&self) -> usize {
        self.neighbors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Open neighborhood N(v), sorted.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors[u].binary_search(&v).is_ok()
    }

    /// Closed neighborhood N[v] = N(v) ∪ {v}, sorted.
    ///
    /// Panics if `v` is out of range.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        assert!(v < self.order(), "vertex index {v} out of range");
        let mut out = Vec::with_capacity(self.degree(v) + 1);
        let mut inserted = false;
        for &u in &self.neighbors[v] {
            if !inserted && u > v {
                out.push(v);
                inserted = true;
            }
            out.push(u);
        }
        if !inserted {
            out.push(v);
        }
        out
    }

    /// Maximum degree, or `None` for the order-0 graph.
    pub fn max_degree(&self) -> Option<usize> {
        self.neighbors.iter().map(Vec::len).max()
    }

    /// Whether some vertex is adjacent to all others, i.e. the maximum
    /// degree equals order − 1. `None` for the order-0 graph.
    pub fn has_universal_vertex(&self) -> Option<bool> {
        self.max_degree().map(|d| d == self.order() - 1)
    }

    pub fn is_edgeless(&self) -> bool {
        self.neighbors.iter().all(Vec::is_empty)
    }

    /// Join of `self` and `other`: disjoint union (self's vertices first,
    /// then other's shifted by `self.order()`) plus every cross edge.
    pub fn join(&self, other: &Graph) -> Graph {
        let a = self.order();
        let b = other.order();
        let mut neighbors = Vec::with_capacity(a + b);
        for v in 0..a {
            let mut list = Vec::with_capacity(self.degree(v) + b);
            list.extend_from_slice(&self.neighbors[v]);
            list.extend(a..a + b);
            neighbors.push(list);
        }
        for v in 0..b {
            let mut list = Vec::with_capacity(a + other.degree(v));
            list.extend(0..a);
            list.extend(other.neighbors[v].iter().map(|&u| u + a));
            neighbors.push(list);
        }
        Graph { neighbors }
    }

    /// Checks the structural invariants. Test support; constructors already
    /// guarantee them.
    pub fn check_invariants(&self) -> Result<(), GraphError> {
        let order = self.order();
        for (v, list) in self.neighbors.iter().enumerate() {
            for &u in list {
                if u == v {
                    return Err(GraphError::SelfLoop(v));
                }
                if u >= order {
                    return Err(GraphError::EndpointOutOfRange { vertex: u, order });
                }
                if !self.has_edge(u, v) {
                    return Err(GraphError::EndpointOutOfRange { vertex: v, order });
                }
            }
        }
        Ok(())
    }
}

/// A named graph family with its integer parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// P_n, n ≥ 1.
    Path { n: usize },
    /// C_n, n ≥ 3.
    Cycle { n: usize },
    /// K_n.
    Complete { n: usize },
    /// Edgeless graph on n vertices.
    Empty { n: usize },
    /// m disjoint copies of K_2 (order 2m).
    MatchingCopies { m: usize },
    /// W_n = K_1 ∨ C_n, hub at index 0, n ≥ 3.
    Wheel { n: usize },
    /// F_n = K_1 ∨ P_n, hub at index 0, n ≥ 1.
    Fan { n: usize },
    /// Fr_{2m+1} = K_1 ∨ (m K_2), hub at index 0, m ≥ 1.
    Friendship { m: usize },
    /// C_m ∨ C_n, m, n ≥ 3; C_m occupies indices [0, m).
    JoinOfCycles { m: usize, n: usize },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<(), FamilyError> {
        let check = |family, param, min, got| {
            if got < min {
                Err(FamilyError::ParamOutOfRange {
                    family,
                    param,
                    min,
                    got,
                })
            } else {
                Ok(())
            }
        };
        match *self {
            FamilySpec::Path { n } => check("path", "n", 1, n),
            FamilySpec::Cycle { n } => check("cycle", "n", 3, n),
            FamilySpec::Complete { .. } | FamilySpec::Empty { .. } => Ok(()),
            FamilySpec::MatchingCopies { .. } => Ok(()),
            FamilySpec::Wheel { n } => check("wheel", "n", 3, n),
            FamilySpec::Fan { n } => check("fan", "n", 1, n),
            FamilySpec::Friendship { m } => check("friendship", "m", 1, m),
            FamilySpec::JoinOfCycles { m, n } => {
                check("join-cycles", "m", 3, m)?;
                check("join-cycles", "n", 3, n)
            }
        }
    }

    /// Number of vertices of the generated graph.
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Path { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Complete { n }
            | FamilySpec::Empty { n } => n,
            FamilySpec::MatchingCopies { m } => 2 * m,
            FamilySpec::Wheel { n } | FamilySpec::Fan { n } => n + 1,
            FamilySpec::Friendship { m } => 2 * m + 1,
            FamilySpec::JoinOfCycles { m, n } => m + n,
        }
    }

    /// Builds the graph. Vertices are indexed consecutively; hubs of
    /// wheels, fans, and friendship graphs sit at index 0, and joins place
    /// the first operand's vertices first.
    pub fn generate(&self) -> Result<Graph, FamilyError> {
        self.validate()?;
        let g = match *self {
            FamilySpec::Path { n } => path(n),
            FamilySpec::Cycle { n } => cycle(n),
            FamilySpec::Complete { n } => complete(n),
            FamilySpec::Empty { n } => Graph::edgeless(n),
            FamilySpec::MatchingCopies { m } => matching(m),
            FamilySpec::Wheel { n } => complete(1).join(&cycle(n)),
            FamilySpec::Fan { n } => complete(1).join(&path(n)),
            FamilySpec::Friendship { m } => complete(1).join(&matching(m)),
            FamilySpec::JoinOfCycles { m, n } => cycle(m).join(&cycle(n)),
        };
        Ok(g)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path { n } => write!(f, "path(n={n})"),
            FamilySpec::Cycle { n } => write!(f, "cycle(n={n})"),
            FamilySpec::Complete { n } => write!(f, "complete(n={n})"),
            FamilySpec::Empty { n } => write!(f, "empty(n={n})"),
            FamilySpec::MatchingCopies { m } => write!(f, "matching(m={m})"),
            FamilySpec::Wheel { n } => write!(f, "wheel(n={n})"),
            FamilySpec::Fan { n } => write!(f, "fan(n={n})"),
            FamilySpec::Friendship { m } => write!(f, "friendship(m={m})"),
            FamilySpec::JoinOfCycles { m, n } => write!(f, "join-cycles(m={m},n={n})"),
        }
    }
}

fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path edges are valid")
}

fn cycle(n: usize) -> Graph {
    debug_assert!(n >= 3);
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are valid")
}

fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges).expect("complete edges are valid")
}

fn matching(m: usize) -> Graph {
    Graph::from_edges(2 * m, (0..m).map(|i| (2 * i, 2 * i + 1))).expect("matching edges are valid")
}
