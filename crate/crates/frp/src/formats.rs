//! JSON renderings of the core tables and the undirected input format.

use frp_core::backwards_f::FTable;
use frp_core::frp_weighted::{CaseTag, FaultTree, TwoFaultTable};
use frp_core::graph_core::{Dist, EdgeId, Graph, PathSeq, VertexId};
use frp_core::lowerbound_gadget::{GadgetLayout, UndirectedGraph};
use serde::{Deserialize, Serialize};

/// An edge as `[tail, head, weight, id]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson(pub VertexId, pub VertexId, pub i64, pub EdgeId);

impl EdgeJson {
    /// The edge `id` of `g`.
    pub fn of(g: &Graph, id: EdgeId) -> EdgeJson {
        let e = g.edge(id);
        EdgeJson(e.tail, e.head, e.weight, e.id)
    }
}

/// `Some(d)` for finite distances, `None` (JSON `null`) for `INF`.
pub fn dist_json(d: Dist) -> Option<i64> {
    d.value()
}

/// Inverse of [`dist_json`].
pub fn dist_from_json(d: Option<i64>) -> Dist {
    d.map_or(Dist::INF, Dist::finite)
}

/// A path as its vertex sequence and total length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathJson {
    pub vertices: Vec<VertexId>,
    pub length: i64,
}

impl From<&PathSeq> for PathJson {
    fn from(p: &PathSeq) -> PathJson {
        PathJson { vertices: p.vertices().to_vec(), length: p.length() }
    }
}

/// One two-fault entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub e1: EdgeJson,
    pub e2: EdgeJson,
    pub d: Option<i64>,
    pub case: String,
}

/// A two-fault table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub s: VertexId,
    pub t: VertexId,
    pub path: PathJson,
    pub entries: Vec<EntryJson>,
}

impl TableJson {
    /// Renders `table`, whose edge ids refer to `g`.
    pub fn new(g: &Graph, table: &TwoFaultTable) -> TableJson {
        let entries = table
            .entries()
            .map(|((e1, e2), entry)| EntryJson {
                e1: EdgeJson::of(g, e1),
                e2: EdgeJson::of(g, e2),
                d: dist_json(entry.d),
                case: entry.case.name().to_string(),
            })
            .collect();
        TableJson { s: table.s, t: table.t, path: (&table.path).into(), entries }
    }

    /// The stored distance of `(e1, e2)`, if present.
    pub fn get(&self, e1: EdgeId, e2: EdgeId) -> Option<(Dist, Option<CaseTag>)> {
        self.entries
            .iter()
            .find(|x| x.e1.3 == e1 && x.e2.3 == e2)
            .map(|x| (dist_from_json(x.d), CaseTag::from_name(&x.case)))
    }
}

/// One backwards distance `f(p_j, p_i)`, `j > i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FEntryJson {
    pub j: usize,
    pub i: usize,
    pub d: Option<i64>,
}

/// The table of backwards distances, lower triangle only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FTableJson {
    pub h: usize,
    pub entries: Vec<FEntryJson>,
}

impl From<&FTable> for FTableJson {
    fn from(f: &FTable) -> FTableJson {
        let h = f.h();
        let entries = (0..h)
            .flat_map(|j| (0..j).map(move |i| (j, i)))
            .map(|(j, i)| FEntryJson { j, i, d: dist_json(f.get(j, i)) })
            .collect();
        FTableJson { h, entries }
    }
}

/// One `k`-fault tuple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaultEntryJson {
    pub faults: Vec<EdgeJson>,
    pub d: Option<i64>,
}

/// The computed tuples of a fault tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaultTableJson {
    pub s: VertexId,
    pub t: VertexId,
    pub k: usize,
    pub entries: Vec<FaultEntryJson>,
}

impl FaultTableJson {
    /// Renders the tuples of `tree`.
    pub fn new(g: &Graph, s: VertexId, t: VertexId, k: usize, tree: &FaultTree) -> FaultTableJson {
        let entries = tree
            .entries()
            .into_iter()
            .map(|(faults, d)| FaultEntryJson {
                faults: faults.iter().map(|&e| EdgeJson::of(g, e)).collect(),
                d: dist_json(d),
            })
            .collect();
        FaultTableJson { s, t, k, entries }
    }
}

/// A chunk edge of the gadget backbone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChunkEdgeJson {
    pub layer: usize,
    pub chunk: usize,
    pub slot: usize,
    pub edge: EdgeId,
}

/// The layout sidecar written next to an exported gadget.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayoutJson {
    pub k: usize,
    pub l: usize,
    pub base: usize,
    pub bucket: usize,
    pub n: usize,
    pub source: VertexId,
    pub target: VertexId,
    /// `layers[i][j][s]` is the vertex in slot `s` of chunk `j` of layer `i`.
    pub layers: Vec<Vec<Vec<VertexId>>>,
    pub q: Vec<VertexId>,
    pub a: Vec<VertexId>,
    pub b: Vec<VertexId>,
    pub c: Vec<VertexId>,
    pub chunk_edges: Vec<ChunkEdgeJson>,
    pub block_edges: Vec<EdgeId>,
    pub internal_vertices: usize,
    pub vertex_count: usize,
    pub edge_count: usize,
}

impl From<&GadgetLayout> for LayoutJson {
    fn from(l: &GadgetLayout) -> LayoutJson {
        LayoutJson {
            k: l.params.k,
            l: l.params.l,
            base: l.params.base,
            bucket: l.params.b,
            n: l.params.n,
            source: l.source,
            target: l.target,
            layers: l.layers.clone(),
            q: l.q.clone(),
            a: l.a.clone(),
            b: l.b.clone(),
            c: l.c.clone(),
            chunk_edges: l
                .chunk_edges
                .iter()
                .map(|(&(layer, chunk, slot), &edge)| ChunkEdgeJson { layer, chunk, slot, edge })
                .collect(),
            block_edges: l.block_edges.clone(),
            internal_vertices: l.internal.len(),
            vertex_count: l.vertex_count,
            edge_count: l.edge_count,
        }
    }
}

/// Parses an undirected graph: a header `n m`, then `m` lines `u v`.
/// Blank lines and `#` comments are ignored.
pub fn load_undirected(text: &str) -> frp_core::Result<UndirectedGraph> {
    use frp_core::Error;
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let parse = |line: usize, body: &str, count: usize| -> frp_core::Result<Vec<usize>> {
        let fields: Vec<&str> = body.split_whitespace().collect();
        if fields.len() != count {
            return Err(Error::Parse { line, msg: format!("expected {count} fields, found {}", fields.len()) });
        }
        fields
            .iter()
            .map(|f| f.parse().map_err(|_| Error::Parse { line, msg: format!("not a vertex index: {f:?}") }))
            .collect()
    };
    let (line, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing header `n m`".into() })?;
    let nm = parse(line, header, 2)?;
    let (n, m) = (nm[0], nm[1]);
    let mut g = UndirectedGraph::new(n);
    for _ in 0..m {
        let (line, body) =
            lines.next().ok_or(Error::Parse { line: text.lines().count() + 1, msg: format!("expected {m} edges") })?;
        let uv = parse(line, body, 2)?;
        if uv[0] >= n || uv[1] >= n {
            return Err(Error::Parse { line, msg: format!("vertex out of range 0..{n}") });
        }
        if uv[0] == uv[1] {
            return Err(Error::Parse { line, msg: "self-loops are not allowed".into() });
        }
        g.add_edge(uv[0], uv[1]);
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::Parse { line, msg: format!("trailing content after {m} edges") });
    }
    Ok(g)
}

/// Serializes an undirected graph in the format read by [`load_undirected`].
pub fn write_undirected(g: &UndirectedGraph) -> String {
    let edges: Vec<_> = g.edges().collect();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
