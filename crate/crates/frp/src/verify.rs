//! Cross-checks of computed tables against the brute-force references.

use std::fmt;

use frp_core::backwards_f::FTable;
use frp_core::frp_weighted::{FaultTree, TwoFaultTable};
use frp_core::graph_core::{Dist, EdgeId, Graph, GraphView, PathSeq, VertexId};
use frp_core::oracle::{brute_dist, brute_f_table, brute_two_fault_table};

/// The first disagreement found by a check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mismatch {
    /// A two-fault entry (or a key present on one side only).
    Pair { e1: EdgeId, e2: EdgeId, got: Option<Dist>, want: Option<Dist> },
    /// A single-fault distance.
    Single { e: EdgeId, got: Dist, want: Dist },
    /// A backwards distance `f(p_j, p_i)`.
    F { j: usize, i: usize, got: Dist, want: Dist },
    /// A `k`-fault tuple.
    Faults { faults: Vec<EdgeId>, got: Dist, want: Dist },
    /// The designated path or `d(s, t)`.
    Base { got: Dist, want: Dist },
}

fn show(d: Option<Dist>) -> String {
    d.map_or_else(|| "missing".to_string(), |d| d.to_string())
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mismatch::Pair { e1, e2, got, want } => {
                write!(f, "(e1, e2) = ({e1}, {e2}): got {}, expected {}", show(*got), show(*want))
            }
            Mismatch::Single { e, got, want } => write!(f, "single fault {e}: got {got}, expected {want}"),
            Mismatch::F { j, i, got, want } => write!(f, "f(p_{j}, p_{i}): got {got}, expected {want}"),
            Mismatch::Faults { faults, got, want } => write!(f, "faults {faults:?}: got {got}, expected {want}"),
            Mismatch::Base { got, want } => write!(f, "d(s, t): got {got}, expected {want}"),
        }
    }
}

/// Describes a mismatch with the endpoints of the edges it names.
pub fn describe(g: &Graph, m: &Mismatch) -> String {
    let edge = |e: EdgeId| {
        let x = g.edge(e);
        format!("{}->{}", x.tail, x.head)
    };
    match m {
        Mismatch::Pair { e1, e2, .. } => format!("{m} [edges {} and {}]", edge(*e1), edge(*e2)),
        Mismatch::Single { e, .. } => format!("{m} [edge {}]", edge(*e)),
        Mismatch::Faults { faults, .. } => {
            format!("{m} [edges {}]", faults.iter().map(|&e| edge(e)).collect::<Vec<_>>().join(", "))
        }
        _ => m.to_string(),
    }
}

/// Compares a two-fault table with the brute-force table: same base, same
/// single-fault distances, same key set and equal distances.
pub fn check_two_fault(view: &GraphView<'_>, s: VertexId, t: VertexId, table: &TwoFaultTable) -> Option<Mismatch> {
    let want = match brute_two_fault_table(view, s, t) {
        Ok(w) => w,
        Err(_) => return Some(Mismatch::Base { got: table.base, want: Dist::INF }),
    };
    if table.base != want.base {
        return Some(Mismatch::Base { got: table.base, want: want.base });
    }
    for (&e, &d) in &want.single {
        let got = table.lookup_single(e);
        if got != d {
            return Some(Mismatch::Single { e, got, want: d });
        }
    }
    for ((e1, e2), entry) in want.entries() {
        let got = table.get(e1, e2).map(|x| x.d);
        if got != Some(entry.d) {
            return Some(Mismatch::Pair { e1, e2, got, want: Some(entry.d) });
        }
    }
    table.entries().find(|&((e1, e2), _)| !want.contains(e1, e2)).map(|((e1, e2), entry)| Mismatch::Pair {
        e1,
        e2,
        got: Some(entry.d),
        want: None,
    })
}

/// Compares `f` with the brute-force table over every `j > i`.
pub fn check_f(view: &GraphView<'_>, path: &PathSeq, f: &FTable) -> Option<Mismatch> {
    let want = brute_f_table(view, path);
    let found = want.entries().find_map(|(j, i, d)| {
        let got = f.get(j, i);
        (got != d).then_some(Mismatch::F { j, i, got, want: d })
    });
    found
}

/// Compares every tuple stored in a fault tree with triple (or general)
/// removal by Bellman–Ford.
pub fn check_fault_tree(view: &GraphView<'_>, s: VertexId, t: VertexId, tree: &FaultTree) -> Option<Mismatch> {
    tree.entries().into_iter().find_map(|(faults, got)| {
        let want = brute_dist(view, s, t, &faults);
        (got != want).then_some(Mismatch::Faults { faults, got, want })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use frp_core::fixtures::cex;
    use frp_core::frp_weighted::{two_frp, CaseTag};

    #[test]
    fn tampered_tables_are_caught() {
        let g = cex();
        let view = g.view();
        let mut table = two_frp(&view, 0, 5).unwrap();
        assert_eq!(check_two_fault(&view, 0, 5, &table), None);
        let ((e1, e2), entry) = table.entries().find(|(_, x)| x.d.is_finite()).unwrap();
        table.insert(e1, e2, entry.d + 1, CaseTag::Oracle);
        match check_two_fault(&view, 0, 5, &table) {
            Some(Mismatch::Pair { e1: a, e2: b, .. }) => assert_eq!((a, b), (e1, e2)),
            other => panic!("unexpected {other:?}"),
        }
    }
}
