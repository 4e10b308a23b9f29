//! Forest representations.
//!
//! Two concrete kinds are supported, both over dense 0-indexed vertex ids:
//!
//! * [`UndirectedForest`]: an acyclic undirected graph, possibly
//!   disconnected. A *leaf* is a vertex of degree at most 1 (isolated
//!   vertices count as leaves), a *branching vertex* has degree at least 3.
//! * [`RootedDirectedForest`]: every vertex has at most one parent and arcs
//!   are oriented parent → child. A *leaf* is a vertex of out-degree 0, a
//!   *branching vertex* has out-degree at least 2.
//!
//! Both are immutable after construction and validate their invariants in
//! the constructor, so every value of these types is a genuine forest.

use crate::error::{Error, Result};

/// Which of the two forest kinds an operation applies to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ForestKind {
    Undirected,
    Directed,
}

/// Per-vertex classification by degree (undirected) or out-degree (directed).
///
/// The three classes partition the vertex set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexClass {
    /// Degree ≤ 1, or out-degree 0 in the directed case.
    Leaf,
    /// Degree exactly 2, or out-degree exactly 1 in the directed case.
    Internal,
    /// Degree ≥ 3, or out-degree ≥ 2 in the directed case.
    Branching,
}

/// A validated undirected forest on `n` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedForest {
    n: usize,
    /// Normalized `(u, v)` with `u < v`, sorted lexicographically.
    edges: Vec<(usize, usize)>,
    /// Per-vertex sorted neighbor lists.
    adj: Vec<Vec<usize>>,
}

impl UndirectedForest {
    /// Builds a forest from a vertex count and an edge list.
    ///
    /// Rejects out-of-range endpoints, self-loops, duplicate edges and
    /// cycles. The empty forest (`n = 0`) is a valid value.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut normalized: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::InvalidVertex { vertex: u, n });
            }
            if v >= n {
                return Err(Error::InvalidVertex { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge {
                u: w[0].0,
                v: w[0].1,
            });
        }

        // Union-find acyclicity check: an edge inside one component closes a cycle.
        let mut dsu = Dsu::new(n);
        for &(u, v) in &normalized {
            if !dsu.union(u, v) {
                return Err(Error::CycleDetected);
            }
        }

        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &normalized {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Self {
            n,
            edges: normalized,
            adj,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Normalized edges, `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.degree(v) <= 1
    }

    pub fn is_branching(&self, v: usize) -> bool {
        self.degree(v) >= 3
    }

    pub fn classify(&self) -> Vec<VertexClass> {
        (0..self.n)
            .map(|v| match self.degree(v) {
                0 | 1 => VertexClass::Leaf,
                2 => VertexClass::Internal,
                _ => VertexClass::Branching,
            })
            .collect()
    }

    /// All leaves (including isolated vertices), ascending.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.is_leaf(v)).collect()
    }

    /// Component id per vertex. Components are numbered by discovery order
    /// from vertex 0 upward, so component ids increase with the smallest
    /// vertex id they contain.
    pub fn component_ids(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &w in self.neighbors(v) {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn component_count(&self) -> usize {
        // |edges| = n - p in any forest.
        self.n - self.edges.len()
    }
}

/// A validated rooted directed forest; arcs run parent → child.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedDirectedForest {
    parent: Vec<Option<usize>>,
    /// Per-vertex sorted child lists, the inverse of `parent`.
    children: Vec<Vec<usize>>,
}

impl RootedDirectedForest {
    /// Builds a forest from a parent map (`None` marks a root).
    ///
    /// Rejects out-of-range parents and parent chains that loop.
    pub fn build(parent: &[Option<usize>]) -> Result<Self> {
        let n = parent.len();
        for &p in parent {
            if let Some(p) = p {
                if p >= n {
                    return Err(Error::InvalidVertex { vertex: p, n });
                }
            }
        }
        // Color-based walk: following parents from any vertex must reach a
        // root without revisiting an in-progress vertex.
        const WHITE: u8 = 0;
        const GRAY: u8 = 1;
        const BLACK: u8 = 2;
        let mut color = vec![WHITE; n];
        for start in 0..n {
            if color[start] != WHITE {
                continue;
            }
            let mut path = Vec::new();
            let mut v = start;
            loop {
                if color[v] == GRAY {
                    return Err(Error::CycleDetected);
                }
                if color[v] == BLACK {
                    break;
                }
                color[v] = GRAY;
                path.push(v);
                match parent[v] {
                    Some(p) => v = p,
                    None => break,
                }
            }
            for w in path {
                color[w] = BLACK;
            }
        }

        let mut children = vec![Vec::new(); n];
        for (v, &p) in parent.iter().enumerate() {
            if let Some(p) = p {
                // Pushing in vertex order keeps each list sorted.
                children[p].push(v);
            }
        }
        Ok(Self {
            parent: parent.to_vec(),
            children,
        })
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    /// Sorted child list of `v`.
    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.children[v].len()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.out_degree(v) == 0
    }

    pub fn is_branching(&self, v: usize) -> bool {
        self.out_degree(v) >= 2
    }

    pub fn classify(&self) -> Vec<VertexClass> {
        (0..self.n())
            .map(|v| match self.out_degree(v) {
                0 => VertexClass::Leaf,
                1 => VertexClass::Internal,
                _ => VertexClass::Branching,
            })
            .collect()
    }

    /// All leaves (out-degree 0), ascending.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.is_leaf(v)).collect()
    }

    /// All roots, ascending.
    pub fn roots(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&v| self.parent[v].is_none())
            .collect()
    }

    /// Arc-distance of every vertex from the root of its component.
    pub fn depths(&self) -> Vec<usize> {
        let n = self.n();
        let mut depth = vec![usize::MAX; n];
        let mut stack: Vec<usize> = self.roots();
        for &r in &stack {
            depth[r] = 0;
        }
        while let Some(v) = stack.pop() {
            for &c in self.children(v) {
                depth[c] = depth[v] + 1;
                stack.push(c);
            }
        }
        debug_assert!(depth.iter().all(|&d| d != usize::MAX));
        depth
    }
}

/// Either forest kind, for operations defined on both.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Forest {
    Undirected(UndirectedForest),
    Directed(RootedDirectedForest),
}

impl Forest {
    pub fn kind(&self) -> ForestKind {
        match self {
            Forest::Undirected(_) => ForestKind::Undirected,
            Forest::Directed(_) => ForestKind::Directed,
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Forest::Undirected(f) => f.n(),
            Forest::Directed(f) => f.n(),
        }
    }

    pub fn classify(&self) -> Vec<VertexClass> {
        match self {
            Forest::Undirected(f) => f.classify(),
            Forest::Directed(f) => f.classify(),
        }
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        match self {
            Forest::Undirected(f) => f.is_leaf(v),
            Forest::Directed(f) => f.is_leaf(v),
        }
    }

    pub fn is_branching(&self, v: usize) -> bool {
        match self {
            Forest::Undirected(f) => f.is_branching(v),
            Forest::Directed(f) => f.is_branching(v),
        }
    }

    /// All leaves, ascending. These are exactly the forced vertices: every
    /// cover must contain them.
    pub fn leaves(&self) -> Vec<usize> {
        match self {
            Forest::Undirected(f) => f.leaves(),
            Forest::Directed(f) => f.leaves(),
        }
    }
}

impl From<UndirectedForest> for Forest {
    fn from(f: UndirectedForest) -> Self {
        Forest::Undirected(f)
    }
}

impl From<RootedDirectedForest> for Forest {
    fn from(f: RootedDirectedForest) -> Self {
        Forest::Directed(f)
    }
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    /// Returns false if `u` and `v` were already connected.
    fn union(&mut self, u: usize, v: usize) -> bool {
        let (ru, rv) = (self.find(u), self.find(v));
        if ru == rv {
            return false;
        }
        self.parent[ru] = rv;
        true
    }
}
