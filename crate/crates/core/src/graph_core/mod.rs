//! Directed integer-weighted graphs, masked views, single-source shortest
//! paths and the designated path `π(s, t)`.

mod dist;
mod graph;
mod path;
mod sssp;
mod transform;
mod view;

pub use dist::Dist;
pub use graph::{johnson_potentials, load_edge_list, write_edge_list, Edge, Graph, MAX_ABS_WEIGHT};
pub use path::{shortest_path, shortest_path_preferring, PathSeq};
pub use sssp::{sssp, sssp_with, SsspOptions, SsspResult};
pub use transform::{reverse, split_vertices, SplitMapping};
pub use view::{mask_edges, GraphView};

/// Vertex identifier, dense in `0..n`.
pub type VertexId = usize;
/// Edge identifier, dense in `0..m` (file order for loaded graphs).
pub type EdgeId = usize;
