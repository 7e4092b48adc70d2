//! Labeled finite simple graphs and the graph predicates used by the
//! ideal-theoretic characterizations.
//!
//! Vertices are labeled `1..=n` everywhere in the public API. Internally each
//! vertex `v` owns bit `v - 1` of a `u32` adjacency mask, so `n` is capped at
//! [`MAX_VERTICES`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 32;

/// Largest `n` accepted by [`enumerate_graphs`].
pub const MAX_SWEEP_VERTICES: usize = 8;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u32>,
}

/// A permutation of `1..=n`, listed first to last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrder(Vec<usize>);

impl VertexOrder {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut seen = vec![false; n + 1];
        for &v in &order {
            if v == 0 || v > n || seen[v] {
                return Err(Error::invalid(format!("{order:?} is not a permutation of 1..={n}")));
            }
            seen[v] = true;
        }
        Ok(VertexOrder(order))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// `position[v]` is the index of `v` in the order (`position[0]` unused).
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len() + 1];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

#[inline]
fn bit(v: usize) -> u32 {
    1u32 << (v - 1)
}

/// Iterates the 1-based vertices of a mask in increasing order.
pub(crate) fn mask_vertices(mut mask: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v + 1)
        }
    })
}

/// Position of pair `{i, j}` (1-based, `i < j`) in the edge bitmask used by
/// [`Graph::from_bitmask`]: pairs are ordered `(1,2), (1,3), …, (1,n), (2,3), …`.
fn pair_index(n: usize, i: usize, j: usize) -> usize {
    let i0 = i - 1;
    let j0 = j - 1;
    i0 * (2 * n - i0 - 1) / 2 + (j0 - i0 - 1)
}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::invalid(format!("vertex count {n} outside 1..={MAX_VERTICES}")));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from 1-based edge pairs. Loops, out-of-range endpoints and
    /// repeated edges are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(a, b) in edges {
            if a == b {
                return Err(Error::invalid(format!("loop at vertex {a}")));
            }
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Error::invalid(format!("edge {{{a},{b}}} outside 1..={n}")));
            }
            if g.has_edge(a, b) {
                return Err(Error::invalid(format!("duplicate edge {{{a},{b}}}")));
            }
            g.adj[a - 1] |= bit(b);
            g.adj[b - 1] |= bit(a);
        }
        Ok(g)
    }

    /// Decodes the edge-set bitmask of [`Graph::to_bitmask`].
    pub fn from_bitmask(n: usize, mask: u64) -> Result<Self> {
        if n > MAX_SWEEP_VERTICES {
            return Err(Error::invalid(format!("bitmask graphs need n <= {MAX_SWEEP_VERTICES}")));
        }
        let mut g = Graph::empty(n)?;
        if pair_count(n) < 64 && mask >> pair_count(n) != 0 {
            return Err(Error::invalid(format!("bitmask {mask:#x} too wide for n={n}")));
        }
        for i in 1..=n {
            for j in i + 1..=n {
                if mask >> pair_index(n, i, j) & 1 == 1 {
                    g.adj[i - 1] |= bit(j);
                    g.adj[j - 1] |= bit(i);
                }
            }
        }
        Ok(g)
    }

    pub fn to_bitmask(&self) -> u64 {
        assert!(self.n <= MAX_SWEEP_VERTICES, "bitmask encoding needs n <= {MAX_SWEEP_VERTICES}");
        self.edges().iter().fold(0u64, |m, &(i, j)| m | 1 << pair_index(self.n, i, j))
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::invalid("a cycle needs at least 3 vertices"));
        }
        let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        edges.push((1, n));
        Graph::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                edges.push((i, j));
            }
        }
        Graph::from_edges(n, &edges)
    }

    /// Complete multipartite graph with consecutive parts of the given sizes.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::invalid("part sizes must be positive"));
        }
        let n: usize = parts.iter().sum();
        let mut part_of = Vec::with_capacity(n);
        for (p, &size) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat(p).take(size));
        }
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if part_of[i - 1] != part_of[j - 1] {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(n, &edges)
    }

    /// Disjoint union; the vertices of `graphs[k]` follow those of `graphs[k-1]`.
    pub fn disjoint_union(graphs: &[Graph]) -> Result<Self> {
        if graphs.is_empty() {
            return Err(Error::invalid("empty union"));
        }
        let n: usize = graphs.iter().map(|g| g.n).sum();
        let mut edges = Vec::new();
        let mut offset = 0;
        for g in graphs {
            edges.extend(g.edges().into_iter().map(|(i, j)| (i + offset, j + offset)));
            offset += g.n;
        }
        Graph::from_edges(n, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && self.adj[i - 1] & bit(j) != 0
    }

    /// Neighbourhood of `v` as a vertex bitmask (bit `u - 1` for neighbour `u`).
    pub fn neighbor_mask(&self, v: usize) -> u32 {
        self.adj[v - 1]
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        mask_vertices(self.adj[v - 1]).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    fn full_mask(&self) -> u32 {
        if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        }
    }

    /// Edges `(i, j)` with `i < j`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 1..=self.n {
            for j in mask_vertices(self.adj[i - 1] >> i << i) {
                out.push((i, j));
            }
        }
        out
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (1..=self.n).filter(|&v| self.adj[v - 1] == 0).collect()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.contains(&0)
    }

    pub fn complement(&self) -> Graph {
        let full = self.full_mask();
        let adj = (1..=self.n).map(|v| full & !self.adj[v - 1] & !bit(v)).collect();
        Graph { n: self.n, adj }
    }

    /// Connected components as vertex masks, ordered by smallest vertex.
    pub fn component_masks(&self) -> Vec<u32> {
        let mut seen = 0u32;
        let mut out = Vec::new();
        for v in 1..=self.n {
            if seen & bit(v) != 0 {
                continue;
            }
            let mut comp = bit(v);
            let mut frontier = bit(v);
            while frontier != 0 {
                let mut next = 0;
                for u in mask_vertices(frontier) {
                    next |= self.adj[u - 1];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.component_masks().into_iter().map(|m| mask_vertices(m).collect()).collect()
    }

    /// `c(G)`: the number of connected components with at least two vertices.
    pub fn non_isolated_component_count(&self) -> usize {
        self.component_masks().iter().filter(|m| m.count_ones() >= 2).count()
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == pair_count(self.n)
    }

    pub fn is_forest(&self) -> bool {
        self.component_masks()
            .iter()
            .all(|&c| self.edges_within(c) + 1 == c.count_ones() as usize)
    }

    fn edges_within(&self, mask: u32) -> usize {
        mask_vertices(mask).map(|v| (self.adj[v - 1] & mask).count_ones() as usize).sum::<usize>() / 2
    }

    pub(crate) fn is_clique_mask(&self, mask: u32) -> bool {
        mask_vertices(mask).all(|v| (self.adj[v - 1] | bit(v)) & mask == mask)
    }

    /// Induced subgraph on `vertices`, relabeled `1..=|A|` in increasing order
    /// of the original labels. The second component maps new labels to old
    /// ones: `map[new - 1] = old`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
        if vertices.is_empty() {
            return Err(Error::invalid("induced subgraph on an empty vertex set"));
        }
        let mut map: Vec<usize> = vertices.to_vec();
        map.sort_unstable();
        map.dedup();
        if map[0] == 0 || *map.last().unwrap() > self.n {
            return Err(Error::invalid(format!("vertex set {vertices:?} outside 1..={}", self.n)));
        }
        let mut edges = Vec::new();
        for (a, &u) in map.iter().enumerate() {
            for (b, &v) in map.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    edges.push((a + 1, b + 1));
                }
            }
        }
        Ok((Graph::from_edges(map.len(), &edges)?, map))
    }

    /// All `t`-cliques, each sorted, listed in lexicographic order.
    pub fn cliques(&self, t: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        if t == 0 || t > self.n {
            return out;
        }
        let mut stack = Vec::with_capacity(t);
        self.extend_cliques(1, self.full_mask(), t, &mut stack, &mut out);
        out
    }

    fn extend_cliques(&self, from: usize, candidates: u32, t: usize, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if stack.len() == t {
            out.push(stack.clone());
            return;
        }
        for v in from..=self.n {
            if candidates & bit(v) == 0 {
                continue;
            }
            stack.push(v);
            self.extend_cliques(v + 1, candidates & self.adj[v - 1], t, stack, out);
            stack.pop();
        }
    }

    pub fn triangles(&self) -> Vec<Vec<usize>> {
        self.cliques(3)
    }

    /// Lexicographic breadth-first search. Ties go to the largest label, so on
    /// a complete graph the reversed visit order is the identity.
    pub fn lex_bfs(&self) -> Vec<usize> {
        let mut labels: Vec<Vec<usize>> = vec![Vec::new(); self.n + 1];
        let mut visited = vec![false; self.n + 1];
        let mut order = Vec::with_capacity(self.n);
        for step in 0..self.n {
            let mut best: Option<usize> = None;
            for v in (1..=self.n).rev() {
                if visited[v] {
                    continue;
                }
                if best.map_or(true, |b| labels[v] > labels[b]) {
                    best = Some(v);
                }
            }
            let v = best.expect("an unvisited vertex remains");
            visited[v] = true;
            order.push(v);
            for u in mask_vertices(self.adj[v - 1]) {
                if !visited[u] {
                    labels[u].push(self.n - step);
                }
            }
        }
        order
    }

    /// Checks that every vertex's later neighbours form a clique.
    pub fn is_perfect_elimination_order(&self, order: &VertexOrder) -> bool {
        if order.as_slice().len() != self.n {
            return false;
        }
        let mut later = self.full_mask();
        for &v in order.as_slice() {
            later &= !bit(v);
            if !self.is_clique_mask(self.adj[v - 1] & later) {
                return false;
            }
        }
        true
    }

    /// A perfect elimination order, or `None` when the graph is not chordal.
    /// The candidate is the reversed Lex-BFS order; it is only returned after
    /// passing [`Graph::is_perfect_elimination_order`].
    pub fn perfect_elimination_order(&self) -> Option<VertexOrder> {
        let mut order = self.lex_bfs();
        order.reverse();
        let order = VertexOrder(order);
        self.is_perfect_elimination_order(&order).then_some(order)
    }

    pub fn is_chordal(&self) -> bool {
        self.perfect_elimination_order().is_some()
    }

    /// Length of a shortest cycle (which is necessarily induced), or `None`
    /// for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n + 1];
        let mut parent = vec![0usize; self.n + 1];
        let mut queue = std::collections::VecDeque::new();
        for root in 1..=self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = 0;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for w in mask_vertices(self.adj[u - 1]) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Parts of a complete multipartite structure: the connected components
    /// of the complement, provided each is a clique there (equivalently the
    /// complement has no induced `P_3`). An edgeless graph comes back as one part.
    pub fn complete_multipartite_parts(&self) -> Option<Vec<Vec<usize>>> {
        let comp = self.complement();
        let parts = comp.component_masks();
        if parts.iter().all(|&p| comp.is_clique_mask(p)) {
            Some(parts.into_iter().map(|m| mask_vertices(m).collect()).collect())
        } else {
            None
        }
    }

    pub fn is_complete_multipartite(&self) -> bool {
        self.complete_multipartite_parts().is_some()
    }

    /// Brute-force isomorphism test over all vertex permutations.
    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        if self.n != other.n || self.edge_count() != other.edge_count() {
            return false;
        }
        let mut da: Vec<_> = (1..=self.n).map(|v| self.degree(v)).collect();
        let mut db: Vec<_> = (1..=other.n).map(|v| other.degree(v)).collect();
        da.sort_unstable();
        db.sort_unstable();
        if da != db {
            return false;
        }
        let mut perm: Vec<usize> = (1..=self.n).collect();
        let edges = self.edges();
        loop {
            if edges.iter().all(|&(i, j)| other.has_edge(perm[i - 1], perm[j - 1])) {
                return true;
            }
            if !next_permutation(&mut perm) {
                return false;
            }
        }
    }

    /// Parses the text format: first significant line `n`, then one `i j`
    /// pair per line; `#` starts a comment line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: &str| Error::Parse { line: lineno + 1, msg: msg.to_string() };
            let fields: Vec<&str> = line.split_whitespace().collect();
            match n {
                None => {
                    if fields.len() != 1 {
                        return Err(err("expected the vertex count"));
                    }
                    n = Some(fields[0].parse().map_err(|_| err("bad vertex count"))?);
                }
                Some(_) => {
                    if fields.len() != 2 {
                        return Err(err("expected an edge `i j`"));
                    }
                    let i: usize = fields[0].parse().map_err(|_| err("bad vertex"))?;
                    let j: usize = fields[1].parse().map_err(|_| err("bad vertex"))?;
                    edges.push((i, j));
                }
            }
        }
        let n = n.ok_or(Error::Parse { line: 0, msg: "missing vertex count".into() })?;
        Graph::from_edges(n, &edges)
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Graph::parse(s)
    }
}

/// Writes the text format with edges sorted lexicographically.
impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for (i, j) in self.edges() {
            writeln!(f, "{i} {j}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// All `2^(n choose 2)` labeled graphs on `1..=n`, in increasing edge-bitmask
/// order, optionally skipping graphs with an isolated vertex.
pub fn enumerate_graphs(n: usize, require_no_isolated: bool) -> Result<impl Iterator<Item = Graph>> {
    if n == 0 || n > MAX_SWEEP_VERTICES {
        return Err(Error::invalid(format!("sweep size n={n} outside 1..={MAX_SWEEP_VERTICES}")));
    }
    let total = 1u64 << pair_count(n);
    Ok((0..total)
        .map(move |mask| Graph::from_bitmask(n, mask).expect("mask in range"))
        .filter(move |g| !require_no_isolated || !g.has_isolated_vertex()))
}
