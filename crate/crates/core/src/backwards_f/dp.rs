use alloc::vec;

use super::{FChoice, FTable, OffPathApsp};
use crate::graph_core::{Dist, PathSeq};

/// `f` for every pair by dynamic programming in `O(h³)` after the off-path
/// distances are known.
///
/// A shortest backwards path either stays off `π` entirely, or ends with a
/// run `p_a → p_b` along `π` followed by an off-path hop to `p_i`, where the
/// part before `p_a` is itself a backwards path for `(j, a)`. For fixed `j`
/// the entries are filled for decreasing `i`, so `f(p_j, p_a)` is final
/// whenever it is needed.
pub fn compute_f_dp(path: &PathSeq, apsp: &OffPathApsp) -> FTable {
    let h = path.h();
    let pre = path.prefix_dist();
    let mut values = vec![Dist::INF; h * h];
    let mut witness = vec![FChoice::Direct; h * h];
    for j in 0..h {
        for i in (0..j).rev() {
            let mut best = apsp.between(j, i);
            let mut choice = FChoice::Direct;
            // min over b in (a, j) of d(s, p_b) + d_{G∖π}(p_b, p_i), grown
            // by one candidate each time a moves left.
            let mut tail = Dist::INF;
            let mut tail_b = 0;
            for a in (i + 1..j).rev() {
                if a + 1 < j {
                    let b = a + 1;
                    let cand = apsp.between(b, i).offset(pre[b]);
                    if cand <= tail {
                        tail = cand;
                        tail_b = b;
                    }
                }
                let cand = values[j * h + a].offset(-pre[a]) + tail;
                if cand < best {
                    best = cand;
                    choice = FChoice::Via { a, b: tail_b };
                }
            }
            values[j * h + i] = best;
            witness[j * h + i] = choice;
        }
    }
    FTable::with_witness(h, values, witness)
}
