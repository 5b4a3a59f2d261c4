//! Undirected simple graph with dense node ids.
//!
//! Node ids are assigned in creation order, so an id doubles as the node's
//! age. Neighbor lists are kept sorted, which gives logarithmic edge lookup,
//! linear-time neighbor intersection and a deterministic iteration order.

use std::collections::VecDeque;

use thiserror::Error;

pub type NodeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop on node {0}")]
    SelfLoop(NodeId),
    #[error("edge {0}-{1} already present")]
    DuplicateEdge(NodeId, NodeId),
    #[error("unknown node {0}")]
    UnknownNode(NodeId),
}

/// Provenance of a link, tracked only through aggregate counters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LinkKind {
    /// Part of the initial random graph (or an ingested edge list).
    Seed,
    /// Between two nodes that were both already present.
    Internal,
    /// Between a newly added node and an old node.
    External,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<NodeId>>,
    link_count: usize,
    seed_links: usize,
    internal_links: usize,
    external_links: usize,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph with `n` isolated nodes `0..n`.
    pub fn with_nodes(n: usize) -> Self {
        Self {
            adjacency: vec![Vec::new(); n],
            ..Self::default()
        }
    }

    pub fn add_node(&mut self) -> NodeId {
        self.adjacency.push(Vec::new());
        self.adjacency.len() - 1
    }

    pub fn add_edge(&mut self, u: NodeId, v: NodeId, kind: LinkKind) -> Result<(), GraphError> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let pos_u = match self.adjacency[u].binary_search(&v) {
            Ok(_) => return Err(GraphError::DuplicateEdge(u.min(v), u.max(v))),
            Err(pos) => pos,
        };
        self.adjacency[u].insert(pos_u, v);
        // symmetric, so the reverse lookup cannot hit
        let pos_v = self.adjacency[v].binary_search(&u).unwrap_err();
        self.adjacency[v].insert(pos_v, u);

        self.link_count += 1;
        match kind {
            LinkKind::Seed => self.seed_links += 1,
            LinkKind::Internal => self.internal_links += 1,
            LinkKind::External => self.external_links += 1,
        }
        Ok(())
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> Result<bool, GraphError> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.adjacent(u, v))
    }

    pub fn degree(&self, v: NodeId) -> Result<usize, GraphError> {
        self.check(v)?;
        Ok(self.adjacency[v].len())
    }

    /// Sorted neighbor ids of `v`.
    pub fn neighbors(&self, v: NodeId) -> Result<&[NodeId], GraphError> {
        self.check(v)?;
        Ok(&self.adjacency[v])
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn link_count(&self) -> usize {
        self.link_count
    }

    pub fn seed_links(&self) -> usize {
        self.seed_links
    }

    pub fn internal_links(&self) -> usize {
        self.internal_links
    }

    pub fn external_links(&self) -> usize {
        self.external_links
    }

    /// Degree of every node, indexed by id.
    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// Every edge once, as `(smaller, larger)`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, nbrs)| {
            let start = nbrs.partition_point(|&v| v < u);
            nbrs[start..].iter().map(move |&v| (u, v))
        })
    }

    /// True iff a traversal from node 0 reaches every node. An empty graph
    /// counts as connected.
    pub fn is_connected(&self) -> bool {
        self.unreachable_from(0).is_none()
    }

    /// Some node not reachable from `source`, or `None` when the graph is
    /// connected.
    pub(crate) fn unreachable_from(&self, source: NodeId) -> Option<NodeId> {
        let n = self.node_count();
        if n == 0 {
            return None;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([source]);
        seen[source] = true;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen.iter().position(|&s| !s)
    }

    // Unchecked helpers for hot loops; callers guarantee ids are in range.

    #[inline]
    pub(crate) fn adjacent(&self, u: NodeId, v: NodeId) -> bool {
        let (a, b) = if self.adjacency[u].len() <= self.adjacency[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adjacency[a].binary_search(&b).is_ok()
    }

    #[inline]
    pub(crate) fn deg(&self, v: NodeId) -> usize {
        self.adjacency[v].len()
    }

    #[inline]
    pub(crate) fn nbrs(&self, v: NodeId) -> &[NodeId] {
        &self.adjacency[v]
    }

    fn check(&self, v: NodeId) -> Result<(), GraphError> {
        if v < self.adjacency.len() {
            Ok(())
        } else {
            Err(GraphError::UnknownNode(v))
        }
    }
}
