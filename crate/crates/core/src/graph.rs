//! Directed multigraphs, named builders, and edge-list text I/O.

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use num::BigInt;

/// Hard upper bound on the node count accepted from edge-list text; the
/// counting algorithms are exponential long before this matters.
const MAX_PARSED_NODES: usize = 1024;

// Gaze digraph: the 8 ways two facing partners can avoid eye contact, with
// an edge when one gaze may sit clockwise-next to another in a silent
// configuration. Rows/columns in the fixed node order
// 0:(r/r) 1:(l/l) 2:(l/u) 3:(d/r) 4:(l/r) 5:(r/l) 6:(r/u) 7:(d/l).
const GAZE_ROWS: [[i64; 8]; 8] = [
    [1, 0, 0, 1, 0, 0, 1, 0],
    [1, 1, 1, 1, 1, 1, 1, 1],
    [1, 1, 1, 1, 1, 1, 1, 1],
    [1, 0, 1, 1, 1, 0, 1, 0],
    [1, 0, 1, 1, 1, 0, 1, 0],
    [1, 0, 0, 1, 0, 1, 1, 1],
    [1, 0, 0, 1, 0, 1, 1, 1],
    [1, 1, 1, 1, 1, 1, 1, 1],
];

// Signature digraph on the visitation signatures 0:111 1:010 2:001 3:100,
// with an edge when two signatures can occur at consecutive nodes.
const SIGNATURE_ROWS: [[i64; 4]; 4] = [[0, 0, 0, 1], [0, 1, 1, 0], [1, 0, 0, 0], [0, 1, 1, 0]];

/// Directed multigraph on nodes `0..n`, represented by an edge multiplicity
/// per ordered node pair. Undirected graphs are stored as symmetric
/// multiplicity functions (each undirected edge is a back-and-forth pair of
/// directed edges). Immutable once built.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Digraph {
    n: usize,
    mult: Vec<u64>,
    directed: bool,
}

impl Digraph {
    pub fn new_directed(n: usize) -> Self {
        Digraph {
            n,
            mult: vec![0; n * n],
            directed: true,
        }
    }

    pub fn new_undirected(n: usize) -> Self {
        Digraph {
            n,
            mult: vec![0; n * n],
            directed: false,
        }
    }

    /// Adds an edge. On undirected graphs both directions are bumped
    /// (a self-loop bumps its diagonal entry once).
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "node out of range");
        self.mult[u * self.n + v] += 1;
        if !self.directed && u != v {
            self.mult[v * self.n + u] += 1;
        }
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Number of parallel edges from `u` to `v`.
    pub fn multiplicity(&self, u: usize, v: usize) -> u64 {
        assert!(u < self.n && v < self.n, "node out of range");
        self.mult[u * self.n + v]
    }

    /// Total multiplicity of edges leaving `u`.
    pub fn out_degree(&self, u: usize) -> u64 {
        (0..self.n).map(|v| self.multiplicity(u, v)).sum()
    }

    pub fn adjacency_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, |i, j| BigInt::from(self.mult[i * self.n + j]))
    }

    /// Subgraph induced by the nodes whose bit is set in `keep`, relabelled
    /// densely in increasing order of original label.
    pub fn induced_subgraph(&self, keep: u64) -> Digraph {
        assert!(self.n <= 64, "bitmask subgraph limited to 64 nodes");
        if self.n < 64 {
            assert!(keep >> self.n == 0, "keep mask wider than graph");
        }
        let idx: Vec<usize> = (0..self.n).filter(|i| keep >> i & 1 == 1).collect();
        let mut g = Digraph {
            n: idx.len(),
            mult: vec![0; idx.len() * idx.len()],
            directed: self.directed,
        };
        for (a, &u) in idx.iter().enumerate() {
            for (b, &v) in idx.iter().enumerate() {
                g.mult[a * g.n + b] = self.multiplicity(u, v);
            }
        }
        g
    }

    /// Parses the edge-list text format: a `directed <n>` or
    /// `undirected <n>` header, then one `u v` pair per line. Repeated
    /// lines accumulate multiplicity, `#` starts a comment line, blank
    /// lines and CRLF endings are accepted.
    pub fn from_edge_list(text: &str) -> Result<Digraph> {
        let mut g: Option<Digraph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let Some(gr) = g.as_mut() else {
                if fields.len() != 2 {
                    return Err(Error::parse(
                        lineno,
                        "expected header `directed <n>` or `undirected <n>`",
                    ));
                }
                let directed = match fields[0] {
                    "directed" => true,
                    "undirected" => false,
                    other => {
                        return Err(Error::parse(
                            lineno,
                            format!("unknown graph kind `{other}`"),
                        ))
                    }
                };
                let n: usize = fields[1].parse().map_err(|_| {
                    Error::parse(lineno, format!("invalid node count `{}`", fields[1]))
                })?;
                if n > MAX_PARSED_NODES {
                    return Err(Error::parse(
                        lineno,
                        format!("node count {n} exceeds limit {MAX_PARSED_NODES}"),
                    ));
                }
                g = Some(if directed {
                    Digraph::new_directed(n)
                } else {
                    Digraph::new_undirected(n)
                });
                continue;
            };
            if fields.len() != 2 {
                return Err(Error::parse(lineno, "expected `u v`"));
            }
            let parse_node = |s: &str| -> Result<usize> {
                let v: usize = s
                    .parse()
                    .map_err(|_| Error::parse(lineno, format!("invalid node `{s}`")))?;
                if v >= gr.n {
                    return Err(Error::parse(
                        lineno,
                        format!("node {v} out of range (n = {})", gr.n),
                    ));
                }
                Ok(v)
            };
            let u = parse_node(fields[0])?;
            let v = parse_node(fields[1])?;
            gr.add_edge(u, v);
        }
        g.ok_or_else(|| Error::parse(1, "empty edge list (missing header)"))
    }

    /// Renders the graph in the edge-list text format; parsing the result
    /// reproduces the identical multiplicity function.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let kind = if self.directed {
            "directed"
        } else {
            "undirected"
        };
        out.push_str(&format!("{kind} {}\n", self.n));
        for u in 0..self.n {
            for v in 0..self.n {
                if !self.directed && v < u {
                    continue;
                }
                for _ in 0..self.multiplicity(u, v) {
                    out.push_str(&format!("{u} {v}\n"));
                }
            }
        }
        out
    }

    /// Builds a named graph. Specs: `circulant:m:s1,s2,...`, `complete:n`,
    /// `cycle:n`, `path:n`, `antiprism:n`, `gaze`, `signature`, `cell24`.
    pub fn build(spec: &str) -> Result<Digraph> {
        let parts: Vec<&str> = spec.split(':').collect();
        let arg = |i: usize| -> Result<usize> {
            parts
                .get(i)
                .ok_or_else(|| Error::domain(format!("builder `{spec}`: missing parameter")))?
                .parse()
                .map_err(|_| Error::domain(format!("builder `{spec}`: invalid parameter")))
        };
        match parts[0] {
            "circulant" => {
                if parts.len() != 3 {
                    return Err(Error::domain(format!(
                        "builder `{spec}`: expected circulant:m:s1,s2,..."
                    )));
                }
                let m = arg(1)?;
                let steps: Vec<usize> = parts[2]
                    .split(',')
                    .map(|s| {
                        s.parse::<usize>().map_err(|_| {
                            Error::domain(format!("builder `{spec}`: invalid step `{s}`"))
                        })
                    })
                    .collect::<Result<_>>()?;
                circulant(m, &steps)
            }
            "complete" => {
                let n = arg(1)?;
                if n < 1 {
                    return Err(Error::domain("complete graph needs n >= 1"));
                }
                let mut g = Digraph::new_undirected(n);
                for u in 0..n {
                    for v in u + 1..n {
                        g.add_edge(u, v);
                    }
                }
                Ok(g)
            }
            "cycle" => {
                let n = arg(1)?;
                if n < 3 {
                    return Err(Error::domain("cycle graph needs n >= 3"));
                }
                circulant(n, &[1])
            }
            "path" => {
                let n = arg(1)?;
                if n < 1 {
                    return Err(Error::domain("path graph needs n >= 1"));
                }
                let mut g = Digraph::new_undirected(n);
                for u in 1..n {
                    g.add_edge(u - 1, u);
                }
                Ok(g)
            }
            "antiprism" => {
                let n = arg(1)?;
                if n < 3 {
                    return Err(Error::domain("antiprism graph is defined for n >= 3"));
                }
                circulant(2 * n, &[1, 2])
            }
            "gaze" => {
                let mut g = Digraph::new_directed(8);
                for (u, row) in GAZE_ROWS.iter().enumerate() {
                    for (v, &m) in row.iter().enumerate() {
                        for _ in 0..m {
                            g.add_edge(u, v);
                        }
                    }
                }
                Ok(g)
            }
            "signature" => {
                let mut g = Digraph::new_directed(4);
                for (u, row) in SIGNATURE_ROWS.iter().enumerate() {
                    for (v, &m) in row.iter().enumerate() {
                        for _ in 0..m {
                            g.add_edge(u, v);
                        }
                    }
                }
                Ok(g)
            }
            "cell24" => Ok(cell24()),
            other => Err(Error::domain(format!("unknown builder `{other}`"))),
        }
    }
}

/// Circulant graph on `m` nodes: node `i` adjacent to `i +- s (mod m)` for
/// each step `s`. Simple graph semantics: coinciding steps do not stack.
fn circulant(m: usize, steps: &[usize]) -> Result<Digraph> {
    if m < 1 {
        return Err(Error::domain("circulant graph needs m >= 1"));
    }
    let mut adj = vec![false; m * m];
    for &s in steps {
        if s % m == 0 {
            return Err(Error::domain(format!(
                "circulant step {s} is 0 mod {m} (self-loop)"
            )));
        }
        for i in 0..m {
            adj[i * m + (i + s) % m] = true;
            adj[i * m + (i + m - s % m) % m] = true;
        }
    }
    let mut g = Digraph::new_undirected(m);
    for u in 0..m {
        for v in u + 1..m {
            if adj[u * m + v] {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Skeleton of the regular 24-cell: the 24 four-dimensional vectors with
/// exactly two nonzero coordinates equal to +-1, adjacent when their dot
/// product is 1. Every node has degree 8.
fn cell24() -> Digraph {
    let mut verts: Vec<[i32; 4]> = Vec::with_capacity(24);
    for p in 0..4 {
        for q in p + 1..4 {
            for &sp in &[1, -1] {
                for &sq in &[1, -1] {
                    let mut v = [0; 4];
                    v[p] = sp;
                    v[q] = sq;
                    verts.push(v);
                }
            }
        }
    }
    let mut g = Digraph::new_undirected(24);
    for i in 0..24 {
        for j in i + 1..24 {
            let dot: i32 = (0..4).map(|k| verts[i][k] * verts[j][k]).sum();
            if dot == 1 {
                g.add_edge(i, j);
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn single_node_adjacency() {
        let g = Digraph::new_undirected(1);
        let a = g.adjacency_matrix();
        assert_eq!(a.dim(), 1);
        assert_eq!(a.get(0, 0), &BigInt::from(0));
    }

    #[test]
    fn gaze_matrix_matches_constant() {
        let a = Digraph::build("gaze").unwrap().adjacency_matrix();
        assert_eq!(a.dim(), 8);
        for (i, row) in GAZE_ROWS.iter().enumerate() {
            for (j, &m) in row.iter().enumerate() {
                assert_eq!(a.get(i, j), &BigInt::from(m));
            }
        }
    }

    #[test]
    fn signature_matrix_matches_constant() {
        let a = Digraph::build("signature").unwrap().adjacency_matrix();
        assert_eq!(a.dim(), 4);
        for (i, row) in SIGNATURE_ROWS.iter().enumerate() {
            for (j, &m) in row.iter().enumerate() {
                assert_eq!(a.get(i, j), &BigInt::from(m));
            }
        }
    }

    #[test]
    fn parse_directed_pair() {
        let g = Digraph::from_edge_list("directed 2\n0 1\n").unwrap();
        assert!(g.is_directed());
        assert_eq!(g.multiplicity(0, 1), 1);
        assert_eq!(g.multiplicity(1, 0), 0);
    }

    #[test]
    fn parse_undirected_triangle() {
        let g = Digraph::from_edge_list("undirected 3\n0 1\n1 2\n2 0\n").unwrap();
        let a = g.adjacency_matrix();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(a.get(i, j), &BigInt::from(u64::from(i != j)));
            }
        }
    }

    #[test]
    fn parse_accumulates_multiplicity() {
        let g = Digraph::from_edge_list("undirected 2\n0 1\n0 1\n").unwrap();
        assert_eq!(g.multiplicity(0, 1), 2);
        assert_eq!(g.multiplicity(1, 0), 2);
    }

    #[test]
    fn parse_handles_comments_and_crlf() {
        let g = Digraph::from_edge_list("# a triangle\r\nundirected 3\r\n\r\n0 1\r\n1 2\n2 0\n")
            .unwrap();
        assert_eq!(g.multiplicity(2, 0), 1);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        match Digraph::from_edge_list("undirectedd 3\n0 1\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
        match Digraph::from_edge_list("directed 2\n0 5\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        match Digraph::from_edge_list("directed 2\n0 -1\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(Digraph::from_edge_list("# nothing\n").is_err());
    }

    #[test]
    fn antiprism_five() {
        let g = Digraph::build("antiprism:5").unwrap();
        assert_eq!(g.node_count(), 10);
        let edges: u64 = (0..10).map(|u| g.out_degree(u)).sum();
        assert_eq!(edges, 40); // 20 undirected edges
        for v in [1, 2, 8, 9] {
            assert_eq!(g.multiplicity(0, v), 1);
        }
        assert_eq!(g.multiplicity(0, 5), 0);
        for u in 0..10 {
            assert_eq!(g.out_degree(u), 4);
        }
    }

    #[test]
    fn antiprism_needs_three() {
        assert!(Digraph::build("antiprism:2").is_err());
        assert!(Digraph::build("antiprism:3").is_ok());
    }

    #[test]
    fn cell24_is_eight_regular() {
        let g = Digraph::build("cell24").unwrap();
        assert_eq!(g.node_count(), 24);
        for u in 0..24 {
            assert_eq!(g.out_degree(u), 8);
        }
        assert!(g.adjacency_matrix().is_symmetric());
    }

    #[test]
    fn complete_one_has_no_edges() {
        let g = Digraph::build("complete:1").unwrap();
        assert_eq!(g.node_count(), 1);
        assert_eq!(g.out_degree(0), 0);
    }

    #[test]
    fn unknown_builder_is_rejected() {
        assert!(Digraph::build("moebius:4").is_err());
        assert!(Digraph::build("circulant:6").is_err());
        assert!(Digraph::build("circulant:6:0").is_err());
    }

    #[test]
    fn induced_subgraph_matches_matrix_deletion() {
        for spec in ["antiprism:4", "complete:5", "gaze"] {
            let g = Digraph::build(spec).unwrap();
            for keep in [0u64, 0b101, 0b1110, (1 << g.node_count()) - 1] {
                let sub = g.induced_subgraph(keep);
                assert_eq!(
                    sub.adjacency_matrix(),
                    g.adjacency_matrix().principal_submatrix(keep)
                );
            }
        }
    }

    #[test]
    fn induced_k4_to_k3() {
        let k4 = Digraph::build("complete:4").unwrap();
        let k3 = Digraph::build("complete:3").unwrap();
        assert_eq!(k4.induced_subgraph(0b0111), k3);
    }

    #[test]
    fn antiprism3_front_triangle_is_k3() {
        let g = Digraph::build("antiprism:3").unwrap();
        let k3 = Digraph::build("complete:3").unwrap();
        assert_eq!(g.induced_subgraph(0b000111), k3);
    }

    #[test]
    fn undirected_builders_are_symmetric() {
        for spec in [
            "cycle:7",
            "path:4",
            "antiprism:3",
            "cell24",
            "circulant:9:2,3",
        ] {
            assert!(Digraph::build(spec)
                .unwrap()
                .adjacency_matrix()
                .is_symmetric());
        }
    }

    #[test]
    fn builders_round_trip_through_edge_list_text() {
        for spec in ["gaze", "signature", "antiprism:4", "cell24", "path:1"] {
            let g = Digraph::build(spec).unwrap();
            assert_eq!(Digraph::from_edge_list(&g.to_edge_list()).unwrap(), g);
        }
    }

    proptest! {
        // Serialize/parse round trip preserves the multiplicity function.
        #[test]
        fn edge_list_round_trip(n in 1usize..6, edges in proptest::collection::vec((0usize..6, 0usize..6), 0..12), directed in proptest::bool::ANY) {
            let mut g = if directed { Digraph::new_directed(n) } else { Digraph::new_undirected(n) };
            for (u, v) in edges {
                if u < n && v < n {
                    g.add_edge(u, v);
                }
            }
            let back = Digraph::from_edge_list(&g.to_edge_list()).unwrap();
            prop_assert_eq!(back, g);
        }
    }
}
