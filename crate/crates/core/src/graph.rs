//! Simple undirected graphs, the grid families used throughout the crate,
//! and the vertex boundary operator.
//!
//! Vertices are dense indices `0..vertex_count`. Grid families carry a
//! `(row, col)` coordinate per vertex as metadata:
//!
//! * square grid `S_n` and triangular lattice `R_{n,l}`: row 1 is the bottom
//!   row, vertex index is `(row - 1) * width + (col - 1)`. The lattice adds the
//!   diagonal `(r, c) - (r - 1, c + 1)` to every unit square of the grid, so
//!   `R_{n,n}` and `S_n` share a vertex set and `S_n` is a spanning subgraph.
//! * triangle `P_n`: row 1 is the apex, row `n` the base, row `r` holds
//!   `(r, 1) ..= (r, r)`.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GridCoord {
    pub row: usize,
    pub col: usize,
}

impl GridCoord {
    pub fn new(row: usize, col: usize) -> Self {
        GridCoord { row, col }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    Square { n: usize },
    TriLattice { n: usize, l: usize },
    Triangle { n: usize },
    Circulant { n: usize, k: usize },
    Custom,
}

#[derive(Clone, Debug)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    coords: Option<Vec<GridCoord>>,
    coord_index: HashMap<GridCoord, usize>,
    family: Family,
}

impl PartialEq for Graph {
    /// Graphs compare by vertex count and edge set; coordinates and family
    /// tags are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.adjacency == other.adjacency
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a simple graph. Self-loops, out-of-range endpoints and repeated
    /// edges are rejected.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if vertex_count == 0 {
            return Err(Error::InvalidParameter(
                "a graph needs at least one vertex".into(),
            ));
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidParameter(format!(
                    "edge {u}-{v} has an endpoint outside 0..{vertex_count}"
                )));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
            }
            if adjacency[u].contains(&v) {
                return Err(Error::InvalidParameter(format!("duplicate edge {u}-{v}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in adjacency.iter_mut() {
            list.sort_unstable();
        }
        Ok(Graph {
            adjacency,
            coords: None,
            coord_index: HashMap::new(),
            family: Family::Custom,
        })
    }

    fn with_coords(mut self, coords: Vec<GridCoord>, family: Family) -> Graph {
        self.coord_index = coords.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        self.coords = Some(coords);
        self.family = family;
        self
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

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn coord(&self, v: usize) -> Option<GridCoord> {
        self.coords.as_ref().and_then(|c| c.get(v).copied())
    }

    pub fn vertex_at(&self, row: usize, col: usize) -> Option<usize> {
        self.coord_index.get(&GridCoord::new(row, col)).copied()
    }

    /// One bitmask of neighbours per vertex, available for graphs with at most
    /// 64 vertices.
    pub fn neighbor_masks(&self) -> Option<Vec<u64>> {
        if self.vertex_count() > 64 {
            return None;
        }
        Some(
            self.adjacency
                .iter()
                .map(|list| list.iter().fold(0u64, |m, &v| m | 1 << v))
                .collect(),
        )
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    pub fn vertex_set<I: IntoIterator<Item = usize>>(&self, it: I) -> Result<VertexSet> {
        VertexSet::from_vertices(self.vertex_count(), it)
    }

    /// Vertices of `s` with at least one neighbour outside `s`.
    pub fn boundary(&self, s: &VertexSet) -> Result<VertexSet> {
        if s.universe() != self.vertex_count() {
            return Err(Error::InvalidParameter(format!(
                "vertex set over {} vertices used with a graph of {}",
                s.universe(),
                self.vertex_count()
            )));
        }
        let mut out = VertexSet::empty(self.vertex_count());
        for v in s.iter() {
            if self.adjacency[v].iter().any(|&u| !s.contains(u)) {
                out.insert(v);
            }
        }
        Ok(out)
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &u in &self.adjacency[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// A proper 2-colouring, or `None` when the graph has an odd cycle.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let n = self.vertex_count();
        let mut color = vec![u8::MAX; n];
        for root in 0..n {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &u in &self.adjacency[v] {
                    if color[u] == u8::MAX {
                        color[u] = 1 - color[v];
                        queue.push_back(u);
                    } else if color[u] == color[v] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn has_odd_cycle(&self) -> bool {
        self.two_coloring().is_none()
    }

    /// Breadth-first distances from `src`; unreachable vertices get `None`.
    pub fn distances_from(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &u in &self.adjacency[v] {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// Shortest path from `u` to `v` (inclusive), smallest-index tie-break.
    pub fn shortest_path(&self, u: usize, v: usize) -> Option<Vec<usize>> {
        let dist = self.distances_from(v);
        dist[u]?;
        let mut path = vec![u];
        let mut cur = u;
        while cur != v {
            let d = dist[cur].unwrap();
            cur = *self.adjacency[cur]
                .iter()
                .find(|&&w| dist[w] == Some(d - 1))
                .expect("bfs layers are consistent");
            path.push(cur);
        }
        Some(path)
    }

    /// The spanning subgraph keeping only edges accepted by `keep`.
    pub fn filter_edges(&self, keep: impl Fn(usize, usize) -> bool) -> Graph {
        let edges: Vec<_> = self.edges().filter(|&(u, v)| keep(u, v)).collect();
        let mut g =
            Graph::from_edges(self.vertex_count(), &edges).expect("subgraph of a simple graph");
        g.coords = self.coords.clone();
        g.coord_index = self.coord_index.clone();
        g
    }

    /// Disjoint union; vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count();
        let edges: Vec<_> = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)))
            .collect();
        Graph::from_edges(shift + other.vertex_count(), &edges).expect("union of simple graphs")
    }
}

fn check_positive(name: &str, value: usize) -> Result<()> {
    if value < 1 {
        return Err(Error::InvalidParameter(format!(
            "{name} must be at least 1, got {value}"
        )));
    }
    Ok(())
}

/// `rows x cols` rectangle of coordinates with `row` 1 at the bottom, plus
/// axis-parallel edges and optionally the `(r, c) - (r - 1, c + 1)` diagonals.
fn rect_grid(rows: usize, cols: usize, diagonals: bool) -> (Vec<GridCoord>, Vec<(usize, usize)>) {
    let idx = |r: usize, c: usize| (r - 1) * cols + (c - 1);
    let mut coords = Vec::with_capacity(rows * cols);
    let mut edges = Vec::new();
    for r in 1..=rows {
        for c in 1..=cols {
            coords.push(GridCoord::new(r, c));
            if c < cols {
                edges.push((idx(r, c), idx(r, c + 1)));
            }
            if r < rows {
                edges.push((idx(r, c), idx(r + 1, c)));
            }
            if diagonals && r > 1 && c < cols {
                edges.push((idx(r, c), idx(r - 1, c + 1)));
            }
        }
    }
    (coords, edges)
}

/// The `n x n` square grid `S_n`.
pub fn build_square_grid(n: usize) -> Result<Graph> {
    check_positive("n", n)?;
    let (coords, edges) = rect_grid(n, n, false);
    Ok(Graph::from_edges(n * n, &edges)?.with_coords(coords, Family::Square { n }))
}

/// The triangular lattice `R_{n,l}`: `n` rows of `l` vertices.
pub fn build_tri_lattice(n: usize, l: usize) -> Result<Graph> {
    check_positive("n", n)?;
    check_positive("l", l)?;
    let (coords, edges) = rect_grid(n, l, true);
    Ok(Graph::from_edges(n * l, &edges)?.with_coords(coords, Family::TriLattice { n, l }))
}

/// The triangular grid `P_n` with `n` vertices per side.
pub fn build_triangle(n: usize) -> Result<Graph> {
    check_positive("n", n)?;
    let idx = |r: usize, i: usize| r * (r - 1) / 2 + (i - 1);
    let mut coords = Vec::new();
    let mut edges = Vec::new();
    for r in 1..=n {
        for i in 1..=r {
            coords.push(GridCoord::new(r, i));
            if i < r {
                edges.push((idx(r, i), idx(r, i + 1)));
            }
            if r < n {
                edges.push((idx(r, i), idx(r + 1, i)));
                edges.push((idx(r, i), idx(r + 1, i + 1)));
            }
        }
    }
    Ok(Graph::from_edges(coords.len(), &edges)?.with_coords(coords, Family::Triangle { n }))
}

/// The circulant graph `C(n, k)`: `n` points on a circle joined when their
/// circular distance is between 1 and `k`.
pub fn build_circulant(n: usize, k: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "circulant needs n >= 3, got {n}"
        )));
    }
    if k > n / 2 {
        return Err(Error::InvalidParameter(format!(
            "circulant needs k <= n/2 = {}, got {k}",
            n / 2
        )));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let d = (j - i).min(n - (j - i));
            if d <= k {
                edges.push((i, j));
            }
        }
    }
    let mut g = Graph::from_edges(n, &edges)?;
    g.family = Family::Circulant { n, k };
    Ok(g)
}

/// The complete graph `K_n`.
pub fn build_complete(n: usize) -> Result<Graph> {
    check_positive("n", n)?;
    let edges: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    Graph::from_edges(n, &edges)
}

pub fn build_path(n: usize) -> Result<Graph> {
    check_positive("n", n)?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_edge_count(g: &Graph) -> usize {
        let n = g.vertex_count();
        let mut count = 0;
        for u in 0..n {
            for v in u + 1..n {
                if g.is_adjacent(u, v) {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn square_grid_counts() {
        let g1 = build_square_grid(1).unwrap();
        assert_eq!((g1.vertex_count(), g1.edge_count()), (1, 0));
        let g2 = build_square_grid(2).unwrap();
        assert_eq!((g2.vertex_count(), g2.edge_count()), (4, 4));
        assert!(g2.neighbors(0).len() == 2 && g2.edges().count() == 4);
        let g6 = build_square_grid(6).unwrap();
        // 2 n (n - 1) axis edges
        assert_eq!(g6.vertex_count(), 36);
        assert_eq!(2 * 6 * 5, 60);
        assert_eq!(brute_edge_count(&g6), 60);
        assert_eq!(g6.edge_count(), 60);
        assert!(build_square_grid(0).is_err());
    }

    #[test]
    fn tri_lattice_counts() {
        let p = build_tri_lattice(1, 3).unwrap();
        assert_eq!((p.vertex_count(), p.edge_count()), (3, 2));
        let r2 = build_tri_lattice(2, 2).unwrap();
        assert_eq!((r2.vertex_count(), r2.edge_count()), (4, 5));
        let r3 = build_tri_lattice(3, 3).unwrap();
        assert_eq!(r3.vertex_count(), 9);
        assert_eq!(brute_edge_count(&r3), 12 + 4);
        assert_eq!(r3.edge_count(), 16);
        assert!(build_tri_lattice(0, 3).is_err());
        assert!(build_tri_lattice(3, 0).is_err());
    }

    #[test]
    fn tri_lattice_diagonal_direction() {
        let r = build_tri_lattice(3, 3).unwrap();
        let at = |row, col| r.vertex_at(row, col).unwrap();
        // the diagonal of the cell (r,c),(r,c+1),(r+1,c),(r+1,c+1) joins (r+1,c) to (r,c+1)
        assert!(r.is_adjacent(at(2, 1), at(1, 2)));
        assert!(!r.is_adjacent(at(1, 1), at(2, 2)));
        assert_eq!(r.coord(at(3, 2)), Some(GridCoord::new(3, 2)));
    }

    #[test]
    fn triangle_counts_match_formula() {
        for n in 1..=12 {
            let g = build_triangle(n).unwrap();
            assert_eq!(g.vertex_count(), n * (n + 1) / 2, "vertices of P_{n}");
            assert_eq!(g.edge_count(), 3 * n * (n - 1) / 2, "edges of P_{n}");
            assert!(g.is_connected());
        }
        let p5 = build_triangle(5).unwrap();
        assert_eq!((p5.vertex_count(), p5.edge_count()), (15, 30));
        let p6 = build_triangle(6).unwrap();
        assert_eq!((p6.vertex_count(), p6.edge_count()), (21, 45));
    }

    #[test]
    fn circulant_cases() {
        let c0 = build_circulant(6, 0).unwrap();
        assert_eq!(c0.edge_count(), 0);
        let c1 = build_circulant(6, 1).unwrap();
        assert_eq!(c1.edge_count(), 6);
        assert!((0..6).all(|v| c1.degree(v) == 2));
        assert!(c1.is_connected());
        let k5 = build_circulant(5, 2).unwrap();
        assert_eq!(k5, build_complete(5).unwrap());
        assert!(build_circulant(6, 4).is_err());
        // n even, k = n/2: the antipodal edge appears once
        assert_eq!(build_circulant(6, 3).unwrap().edge_count(), 15);
    }

    #[test]
    fn degree_bounds() {
        for n in 1..=6 {
            for l in 1..=6 {
                let g = build_tri_lattice(n, l).unwrap();
                assert!((0..g.vertex_count()).all(|v| g.degree(v) <= 6));
            }
            let t = build_triangle(n).unwrap();
            assert!((0..t.vertex_count()).all(|v| t.degree(v) <= 6));
            let s = build_square_grid(n).unwrap();
            assert!((0..s.vertex_count()).all(|v| s.degree(v) <= 4));
        }
    }

    #[test]
    fn boundary_basics() {
        let r3 = build_tri_lattice(3, 3).unwrap();
        let empty = VertexSet::empty(9);
        assert!(r3.boundary(&empty).unwrap().is_empty());
        assert!(r3.boundary(&r3.all_vertices()).unwrap().is_empty());
        let corner = r3.vertex_set([r3.vertex_at(1, 1).unwrap()]).unwrap();
        assert_eq!(r3.boundary(&corner).unwrap(), corner);
        assert!(r3.boundary(&VertexSet::empty(4)).is_err());
    }

    #[test]
    fn boundary_of_component_is_empty() {
        let tri = build_complete(3).unwrap();
        let g = tri.disjoint_union(&tri);
        let comp = g.vertex_set([0, 1, 2]).unwrap();
        assert!(g.boundary(&comp).unwrap().is_empty());
        let part = g.vertex_set([0, 1]).unwrap();
        assert_eq!(g.boundary(&part).unwrap().len(), 2);
    }

    #[test]
    fn predicates() {
        let s3 = build_square_grid(3).unwrap();
        assert!(s3.is_connected());
        assert!(!s3.has_odd_cycle());
        let r2 = build_tri_lattice(2, 2).unwrap();
        assert!(r2.is_connected());
        assert!(r2.has_odd_cycle());
        let two = Graph::from_edges(2, &[]).unwrap();
        assert!(!two.is_connected());
        assert_eq!(two.components(), vec![vec![0], vec![1]]);
    }

    #[test]
    fn square_grid_is_axis_subgraph_of_lattice() {
        for n in 1..=7 {
            let r = build_tri_lattice(n, n).unwrap();
            let s = build_square_grid(n).unwrap();
            let axis = r.filter_edges(|u, v| {
                let (a, b) = (r.coord(u).unwrap(), r.coord(v).unwrap());
                a.row == b.row || a.col == b.col
            });
            assert_eq!(axis, s);
            for v in 0..s.vertex_count() {
                assert_eq!(r.coord(v), s.coord(v));
            }
        }
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(Graph::from_edges(2, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(0, &[]).is_err());
    }

    #[test]
    fn shortest_paths() {
        let r = build_tri_lattice(3, 3).unwrap();
        let a = r.vertex_at(3, 1).unwrap();
        let b = r.vertex_at(1, 3).unwrap();
        // two diagonal hops
        assert_eq!(r.distances_from(a)[b], Some(2));
        let p = r.shortest_path(a, b).unwrap();
        assert_eq!(p.len(), 3);
        assert!(p.windows(2).all(|w| r.is_adjacent(w[0], w[1])));
    }
}
