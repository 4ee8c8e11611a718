//! Generic bidirectional breadth-first search.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::rewrite::Exhausted;

struct Node<S, M> {
    state: S,
    parent: Option<(usize, M)>,
    depth: usize,
}

struct Side<S, M> {
    nodes: Vec<Node<S, M>>,
    seen: BTreeMap<S, usize>,
    frontier: Vec<usize>,
    depth: usize,
}

impl<S: Ord + Clone, M: Clone> Side<S, M> {
    fn new(root: S) -> Self {
        let mut seen = BTreeMap::new();
        seen.insert(root.clone(), 0);
        Side { nodes: alloc::vec![Node { state: root, parent: None, depth: 0 }], seen, frontier: alloc::vec![0], depth: 0 }
    }

    /// Moves from the root to node `id`, with the state reached by each.
    fn path(&self, mut id: usize) -> Vec<(M, S)> {
        let mut out = Vec::new();
        while let Some((p, m)) = &self.nodes[id].parent {
            out.push((m.clone(), self.nodes[id].state.clone()));
            id = *p;
        }
        out.reverse();
        out
    }
}

/// A meeting point: moves from the first root and moves from the second
/// root, each listed root-first, both ending at the same state.
pub(crate) struct Meeting<S, M> {
    pub from_a: Vec<(M, S)>,
    pub from_b: Vec<(M, S)>,
}

/// Searches from `a` and `b` simultaneously, always growing the side with
/// the smaller frontier by one full layer. `expand` pushes `(move, next)`
/// pairs for a state; the move must be replayable from that state.
pub(crate) fn bidirectional<S, M>(
    a: S,
    b: S,
    max_depth: usize,
    max_states: usize,
    mut expand: impl FnMut(&S, &mut Vec<(M, S)>),
) -> Result<Meeting<S, M>, Exhausted>
where
    S: Ord + Clone,
    M: Clone,
{
    let mut sides = [Side::new(a), Side::new(b)];
    if let Some(&j) = sides[1].seen.get(&sides[0].nodes[0].state) {
        return Ok(Meeting { from_a: Vec::new(), from_b: sides[1].path(j) });
    }
    let mut buf = Vec::new();
    loop {
        let total = sides[0].nodes.len() + sides[1].nodes.len();
        let (d0, d1) = (sides[0].depth, sides[1].depth);
        if d0 + d1 >= max_depth {
            return Err(exhausted(total, d0 + d1, "depth limit reached"));
        }
        let k = match (sides[0].frontier.is_empty(), sides[1].frontier.is_empty()) {
            (true, true) => return Err(exhausted(total, d0 + d1, "search space exhausted")),
            // moves need not be reversible, so a closed side can still be reached
            (true, false) => 1,
            (false, true) => 0,
            _ if sides[0].frontier.len() <= sides[1].frontier.len() => 0,
            _ => 1,
        };
        let (lo, hi) = sides.split_at_mut(1);
        let (me, other) = if k == 0 { (&mut lo[0], &hi[0]) } else { (&mut hi[0], &lo[0]) };
        let frontier = core::mem::take(&mut me.frontier);
        me.depth += 1;
        for id in frontier {
            buf.clear();
            expand(&me.nodes[id].state, &mut buf);
            for (m, next) in buf.drain(..) {
                if me.seen.contains_key(&next) {
                    continue;
                }
                let nid = me.nodes.len();
                me.seen.insert(next.clone(), nid);
                let depth = me.nodes[id].depth + 1;
                me.nodes.push(Node { state: next.clone(), parent: Some((id, m)), depth });
                if let Some(&j) = other.seen.get(&next) {
                    let (pa, pb) = (me.path(nid), other.path(j));
                    return Ok(if k == 0 { Meeting { from_a: pa, from_b: pb } } else { Meeting { from_a: pb, from_b: pa } });
                }
                me.frontier.push(nid);
                if me.nodes.len() + other.nodes.len() >= max_states {
                    return Err(exhausted(me.nodes.len() + other.nodes.len(), me.depth + other.depth, "state limit reached"));
                }
            }
        }
    }
}

fn exhausted(states: usize, depth: usize, reason: &str) -> Exhausted {
    Exhausted { states, depth, reason: String::from(reason) }
}
