//! Small built-in instances.

use crate::graph_core::{load_edge_list, Graph};

/// Edge list of the six-vertex counterexample graph: the path
/// `0→1→2→3→4→5` of zero-weight edges plus four detour edges. Failing
/// `(0,1)` and `(4,5)` forces the replacement path `0,3,4,1,2,5` of length 6,
/// which visits path vertices out of order.
pub const CEX_TEXT: &str = "6 9
0 1 0
1 2 0
2 3 0
3 4 0
4 5 0
0 3 2
2 5 2
5 1 1
4 1 2
";

/// The counterexample graph (`s = 0`, `t = 5`).
pub fn cex() -> Graph {
    load_edge_list(CEX_TEXT).expect("fixture is well-formed")
}
