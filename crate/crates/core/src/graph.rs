//! Finite graphs, edge paths and graph self-maps.
//!
//! Vertices and edges are addressed by index; names are kept for I/O and for
//! the canonical (name-ordered) choices made elsewhere in the crate.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Direction in which an edge is crossed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub name: String,
    pub tail: usize,
    pub head: usize,
}

/// A finite connected graph with named vertices and named oriented edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    vertex_index: HashMap<String, usize>,
    edge_index: HashMap<String, usize>,
}

impl Graph {
    /// Builds a graph from vertex names and `(name, tail, head)` triples.
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = (String, String, String)>,
    {
        let mut graph = Graph {
            vertices: Vec::new(),
            edges: Vec::new(),
            vertex_index: HashMap::new(),
            edge_index: HashMap::new(),
        };
        for v in vertices {
            let v = v.into();
            if graph.vertex_index.contains_key(&v) {
                return Err(Error::DuplicateVertex(v));
            }
            graph.vertex_index.insert(v.clone(), graph.vertices.len());
            graph.vertices.push(v);
        }
        for (name, tail, head) in edges {
            if graph.edge_index.contains_key(&name) {
                return Err(Error::DuplicateEdge(name));
            }
            let tail = graph.vertex(&tail)?;
            let head = graph.vertex(&head)?;
            graph.edge_index.insert(name.clone(), graph.edges.len());
            graph.edges.push(Edge { name, tail, head });
        }
        if graph.edges.is_empty() {
            return Err(Error::EmptyGraph);
        }
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(graph)
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn edge_name(&self, e: usize) -> &str {
        &self.edges[e].name
    }

    pub fn edge_names(&self) -> Vec<String> {
        self.edges.iter().map(|e| e.name.clone()).collect()
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.vertex_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn edge_by_name(&self, name: &str) -> Result<usize> {
        self.edge_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownEdge(name.to_string()))
    }

    pub fn has_edge(&self, name: &str) -> bool {
        self.edge_index.contains_key(name)
    }

    /// Vertex indices sorted by name.
    pub fn vertices_by_name(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.vertices.len()).collect();
        idx.sort_by(|&a, &b| self.vertices[a].cmp(&self.vertices[b]));
        idx
    }

    /// Edge indices sorted by name.
    pub fn edges_by_name(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.edges.len()).collect();
        idx.sort_by(|&a, &b| self.edges[a].name.cmp(&self.edges[b].name));
        idx
    }

    /// Start vertex of a step.
    pub fn step_start(&self, step: Step) -> usize {
        let e = &self.edges[step.edge];
        match step.sign {
            Sign::Pos => e.tail,
            Sign::Neg => e.head,
        }
    }

    /// End vertex of a step.
    pub fn step_end(&self, step: Step) -> usize {
        let e = &self.edges[step.edge];
        match step.sign {
            Sign::Pos => e.head,
            Sign::Neg => e.tail,
        }
    }

    /// First Betti number `|E| - |V| + 1`.
    pub fn betti(&self) -> usize {
        self.edges.len() + 1 - self.vertices.len()
    }

    fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return false;
        }
        let mut adj = vec![Vec::new(); n];
        for e in &self.edges {
            adj[e.tail].push(e.head);
            adj[e.head].push(e.tail);
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// One crossing of an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Step {
    pub edge: usize,
    pub sign: Sign,
}

impl Step {
    pub fn new(edge: usize, sign: Sign) -> Self {
        Step { edge, sign }
    }

    pub fn reversed(self) -> Step {
        Step {
            edge: self.edge,
            sign: self.sign.flip(),
        }
    }
}

/// A nonempty composable sequence of steps.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgePath {
    steps: Vec<Step>,
}

impl EdgePath {
    pub fn new(graph: &Graph, steps: Vec<Step>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::DegenerateImage(String::from("<path>")));
        }
        for w in steps.windows(2) {
            if graph.step_end(w[0]) != graph.step_start(w[1]) {
                return Err(Error::InconsistentEndpoints {
                    edge: graph.edge_name(w[1].edge).to_string(),
                    detail: format!(
                        "step `{}` ends at `{}` but `{}` starts at `{}`",
                        graph.edge_name(w[0].edge),
                        graph.vertex_name(graph.step_end(w[0])),
                        graph.edge_name(w[1].edge),
                        graph.vertex_name(graph.step_start(w[1]))
                    ),
                });
            }
        }
        Ok(EdgePath { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn start(&self, graph: &Graph) -> usize {
        graph.step_start(self.steps[0])
    }

    pub fn end(&self, graph: &Graph) -> usize {
        graph.step_end(*self.steps.last().expect("nonempty path"))
    }

    pub fn reversed(&self) -> EdgePath {
        EdgePath {
            steps: self.steps.iter().rev().map(|s| s.reversed()).collect(),
        }
    }

    /// Index of the first backtrack `x x̄`, if any.
    pub fn first_backtrack(&self) -> Option<usize> {
        self.steps
            .windows(2)
            .position(|w| w[0].edge == w[1].edge && w[0].sign != w[1].sign)
    }

    pub fn is_reduced(&self) -> bool {
        self.first_backtrack().is_none()
    }

    pub fn render(&self, graph: &Graph) -> String {
        self.steps
            .iter()
            .map(|s| match s.sign {
                Sign::Pos => graph.edge_name(s.edge).to_string(),
                Sign::Neg => format!("~{}", graph.edge_name(s.edge)),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// A self-map of a finite graph sending edges to nondegenerate edge paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphMap {
    graph: Graph,
    vertex_image: Vec<usize>,
    edge_image: Vec<EdgePath>,
}

impl GraphMap {
    /// Builds a map from edge images, inferring the vertex action from the
    /// endpoints of the images.
    pub fn new(graph: Graph, edge_image: Vec<EdgePath>) -> Result<Self> {
        if edge_image.len() != graph.num_edges() {
            let missing = graph.edge_name(edge_image.len().min(graph.num_edges() - 1));
            return Err(Error::MissingImage(missing.to_string()));
        }
        let mut vertex_image: Vec<Option<usize>> = vec![None; graph.num_vertices()];
        for (e, path) in edge_image.iter().enumerate() {
            if path.is_empty() {
                return Err(Error::DegenerateImage(graph.edge_name(e).to_string()));
            }
            let edge = graph.edge(e);
            for (v, w, end) in [
                (edge.tail, path.start(&graph), "start"),
                (edge.head, path.end(&graph), "end"),
            ] {
                match vertex_image[v] {
                    None => vertex_image[v] = Some(w),
                    Some(prev) if prev != w => {
                        return Err(Error::InconsistentEndpoints {
                            edge: graph.edge_name(e).to_string(),
                            detail: format!(
                                "image {end}s at `{}` but vertex `{}` is already sent to `{}`",
                                graph.vertex_name(w),
                                graph.vertex_name(v),
                                graph.vertex_name(prev)
                            ),
                        });
                    }
                    Some(_) => {}
                }
            }
        }
        // Connected with at least one edge, so every vertex is an endpoint.
        let vertex_image = vertex_image
            .into_iter()
            .map(|v| v.expect("every vertex meets an edge"))
            .collect();
        Ok(GraphMap {
            graph,
            vertex_image,
            edge_image,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_image(&self, v: usize) -> usize {
        self.vertex_image[v]
    }

    pub fn vertex_images(&self) -> &[usize] {
        &self.vertex_image
    }

    pub fn edge_image(&self, e: usize) -> &EdgePath {
        &self.edge_image[e]
    }

    pub fn edge_images(&self) -> &[EdgePath] {
        &self.edge_image
    }

    /// Image of a single step (reversed image for a negative crossing).
    pub fn step_image(&self, step: Step) -> Vec<Step> {
        let img = self.edge_image[step.edge].steps();
        match step.sign {
            Sign::Pos => img.to_vec(),
            Sign::Neg => img.iter().rev().map(|s| s.reversed()).collect(),
        }
    }

    /// Unreduced image of a step sequence.
    pub fn apply(&self, steps: &[Step]) -> Vec<Step> {
        steps.iter().flat_map(|&s| self.step_image(s)).collect()
    }

    /// The composite `self ∘ self` (images are not reduced).
    pub fn square(&self) -> GraphMap {
        let edge_image = (0..self.graph.num_edges())
            .map(|e| EdgePath {
                steps: self.apply(self.edge_image[e].steps()),
            })
            .collect();
        GraphMap {
            graph: self.graph.clone(),
            vertex_image: self
                .vertex_image
                .iter()
                .map(|&v| self.vertex_image[v])
                .collect(),
            edge_image,
        }
    }

    /// The same map after reversing the stored orientation of every edge with
    /// `flip[e] == Sign::Neg`.
    pub fn reoriented(&self, flip: &[Sign]) -> GraphMap {
        let edges = self
            .graph
            .edges
            .iter()
            .zip(flip)
            .map(|(e, &s)| match s {
                Sign::Pos => e.clone(),
                Sign::Neg => Edge {
                    name: e.name.clone(),
                    tail: e.head,
                    head: e.tail,
                },
            })
            .collect();
        let graph = Graph {
            edges,
            ..self.graph.clone()
        };
        let edge_image = (0..self.graph.num_edges())
            .map(|e| {
                let img = self.step_image(Step::new(e, flip[e]));
                EdgePath {
                    steps: img
                        .into_iter()
                        .map(|s| Step::new(s.edge, s.sign.times(flip[s.edge])))
                        .collect(),
                }
            })
            .collect();
        GraphMap {
            graph,
            vertex_image: self.vertex_image.clone(),
            edge_image,
        }
    }
}

/// Dense integer matrix with named rows and columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    data: Vec<Vec<i64>>,
}

impl IntMatrix {
    pub fn zeros(row_labels: Vec<String>, col_labels: Vec<String>) -> Self {
        let data = vec![vec![0; col_labels.len()]; row_labels.len()];
        IntMatrix {
            row_labels,
            col_labels,
            data,
        }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let row_labels = (0..rows.len()).map(|i| i.to_string()).collect();
        let col_labels = (0..ncols).map(|i| i.to_string()).collect();
        Ok(IntMatrix {
            row_labels,
            col_labels,
            data: rows,
        })
    }

    pub fn nrows(&self) -> usize {
        self.data.len()
    }

    pub fn ncols(&self) -> usize {
        self.col_labels.len()
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i][j] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: i64) {
        self.data[i][j] += v;
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.data
    }

    pub fn col_sum(&self, j: usize) -> i64 {
        self.data.iter().map(|r| r[j]).sum()
    }

    pub fn map(&self, f: impl Fn(i64) -> i64) -> IntMatrix {
        IntMatrix {
            row_labels: self.row_labels.clone(),
            col_labels: self.col_labels.clone(),
            data: self
                .data
                .iter()
                .map(|r| r.iter().map(|&x| f(x)).collect())
                .collect(),
        }
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.ncols() != other.nrows() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.nrows(),
                self.ncols(),
                other.nrows(),
                other.ncols()
            )));
        }
        let mut out = IntMatrix::zeros(self.row_labels.clone(), other.col_labels.clone());
        for i in 0..self.nrows() {
            for k in 0..self.ncols() {
                let a = self.data[i][k];
                if a == 0 {
                    continue;
                }
                for j in 0..other.ncols() {
                    out.data[i][j] += a * other.data[k][j];
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.data {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}
