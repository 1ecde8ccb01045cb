//! Immutable simple undirected graphs on dense vertex indices `0..n`.
//!
//! Adjacency is stored as one [`VertexSet`] per vertex, so neighborhood and
//! closed-neighborhood queries are word operations. Graphs never change after
//! construction and are safe to share across threads.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Largest graph the direct constructors accept. Lexicographic products are
/// exempt: they may exceed this, and the exact solvers apply their own cap.
pub const MAX_VERTICES: usize = 64;

#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    balls: Vec<VertexSet>,
    name: Option<String>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        Self::build(n, edges, true)
    }

    fn build(n: usize, edges: &[(usize, usize)], capped: bool) -> Result<Graph> {
        if n < 2 {
            return Err(Error::TooFewVertices(n));
        }
        if capped && n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n, MAX_VERTICES));
        }
        let mut adj = vec![VertexSet::empty(n); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, order: n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, order: n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        let balls = adj
            .iter()
            .enumerate()
            .map(|(v, nbrs)| {
                let mut b = nbrs.clone();
                b.insert(v);
                b
            })
            .collect();
        Ok(Graph {
            n,
            adj,
            balls,
            name: None,
        })
    }

    /// Path `0 - 1 - .. - (n-1)`.
    pub fn path(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Ok(Self::build(n, &edges, true)?.named(format!("P{n}")))
    }

    /// Cycle `0 - 1 - .. - (n-1) - 0`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::TooFewVertices(n));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Ok(Self::build(n, &edges, true)?.named(format!("C{n}")))
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Graph> {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Ok(Self::build(n, &edges, true)?.named(format!("K{n}")))
    }

    /// Star with center `0` and the given number of leaves.
    pub fn star(leaves: usize) -> Result<Graph> {
        if leaves < 1 {
            return Err(Error::TooFewVertices(leaves + 1));
        }
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Ok(Self::build(leaves + 1, &edges, true)?.named(format!("S{leaves}")))
    }

    pub fn named(mut self, name: impl Into<String>) -> Graph {
        self.name = Some(name.into());
        self
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Open neighborhood of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Closed neighborhood `{v} ∪ N(v)`, precomputed at construction.
    #[inline]
    pub fn ball_ref(&self, v: usize) -> &VertexSet {
        &self.balls[v]
    }

    /// Closed neighborhood of `v`, with range checking.
    pub fn ball(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.balls[v].clone())
    }

    /// All vertices at distance at most `r` from `v` (BFS).
    pub fn r_ball(&self, v: usize, r: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        let mut reached = VertexSet::empty(self.n);
        reached.insert(v);
        let mut frontier = vec![v];
        for _ in 0..r {
            let mut next = Vec::new();
            for u in frontier {
                for w in self.adj[u].iter() {
                    if !reached.contains(w) {
                        reached.insert(w);
                        next.push(w);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        Ok(reached)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, order: self.n })
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// BFS reachability from vertex 0 covers all vertices.
    pub fn is_connected(&self) -> bool {
        self.r_ball(0, self.n).map(|r| r.len() == self.n).unwrap_or(false)
    }

    /// Edges as `(u, v)` pairs with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// True when this graph is exactly the canonically labeled path
    /// `0 - 1 - .. - (n-1)`.
    pub fn is_canonical_path(&self) -> bool {
        Graph::path(self.n).map(|p| p.same_edges(self)).unwrap_or(false)
    }

    /// True when this graph is exactly the canonically labeled cycle.
    pub fn is_canonical_cycle(&self) -> bool {
        Graph::cycle(self.n).map(|c| c.same_edges(self)).unwrap_or(false)
    }

    fn same_edges(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

/// Structural equality: same order and same edges. Names are metadata.
impl PartialEq for Graph {
    fn eq(&self, other: &Graph) -> bool {
        self.same_edges(other)
    }
}
impl Eq for Graph {}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph({}, n={}, m={})",
            self.name.as_deref().unwrap_or("?"),
            self.n,
            self.size()
        )
    }
}

/// A vertex of a product graph, as a (first factor, second factor) pair.
///
/// Flattened index `g * h_order + h` is a bijection onto the product's
/// vertex range.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ProductVertex {
    pub g: usize,
    pub h: usize,
}

impl ProductVertex {
    #[inline]
    pub fn index(&self, h_order: usize) -> usize {
        self.g * h_order + self.h
    }

    #[inline]
    pub fn from_index(idx: usize, h_order: usize) -> ProductVertex {
        ProductVertex {
            g: idx / h_order,
            h: idx % h_order,
        }
    }
}

/// Lexicographic product: vertex set `V(G) × V(H)`, with `(u1,v1) ~ (u2,v2)`
/// iff `u1 ~ u2` in `G`, or `u1 = u2` and `v1 ~ v2` in `H`.
///
/// The first factor must be connected. The product may exceed
/// [`MAX_VERTICES`]; only the exact solvers are size-capped.
pub fn lex_product(g: &Graph, h: &Graph) -> Result<Graph> {
    if !g.is_connected() {
        return Err(Error::GNotConnected);
    }
    let (gn, hn) = (g.order(), h.order());
    let n = gn * hn;
    let mut edges = Vec::new();
    for u in 0..gn {
        for x in g.neighbors(u).iter() {
            if x > u {
                for v in 0..hn {
                    for w in 0..hn {
                        edges.push((u * hn + v, x * hn + w));
                    }
                }
            }
        }
        for v in 0..hn {
            for w in h.neighbors(v).iter() {
                if w > v {
                    edges.push((u * hn + v, u * hn + w));
                }
            }
        }
    }
    let product = Graph::build(n, &edges, false)?;
    Ok(match (g.name(), h.name()) {
        (Some(a), Some(b)) => product.named(format!("LEX({a},{b})")),
        _ => product,
    })
}
