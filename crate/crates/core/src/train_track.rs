//! Train-track test and Whitehead graphs via the direction map.
//!
//! A direction is the germ of a step at its start vertex, so it is stored as
//! the step itself: `(e, +)` lives at the tail of `e` and `(e, -)` at its head.
//! A turn is an unordered pair of directions at one vertex.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::graph::{GraphMap, Step};

pub type Direction = Step;
pub type Turn = (Direction, Direction);

fn turn(a: Direction, b: Direction) -> Turn {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// `Df(d)`: first step of the image of `d`.
pub fn direction_map(f: &GraphMap, d: Direction) -> Direction {
    f.step_image(d)[0]
}

/// Turns crossed by a step sequence, in order.
pub fn turns_of(steps: &[Step]) -> Vec<Turn> {
    steps
        .windows(2)
        .map(|w| turn(w[0].reversed(), w[1]))
        .collect()
}

/// Where the train-track property first fails: `f^(iterate+1)(edge)`
/// backtracks, so `iterate = 0` means the image of `edge` itself is unreduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrainTrackWitness {
    pub edge: usize,
    pub iterate: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrainTrackReport {
    pub is_train_track: bool,
    pub witness: Option<TrainTrackWitness>,
}

/// Checks that every edge image is reduced and that no turn in any edge image
/// is ever collapsed by iterating `Df`.
pub fn is_train_track(f: &GraphMap) -> TrainTrackReport {
    for (e, img) in f.edge_images().iter().enumerate() {
        if !img.is_reduced() {
            return TrainTrackReport {
                is_train_track: false,
                witness: Some(TrainTrackWitness {
                    edge: e,
                    iterate: 0,
                }),
            };
        }
    }
    // BFS over turns records the first edge and depth at which a turn is
    // reached, which gives the smallest failing iterate.
    let mut seen: BTreeMap<Turn, (usize, usize)> = BTreeMap::new();
    let mut queue = VecDeque::new();
    for (e, img) in f.edge_images().iter().enumerate() {
        for t in turns_of(img.steps()) {
            if let std::collections::btree_map::Entry::Vacant(slot) = seen.entry(t) {
                slot.insert((e, 0));
                queue.push_back(t);
            }
        }
    }
    while let Some(t) = queue.pop_front() {
        let (e, k) = seen[&t];
        let (a, b) = (direction_map(f, t.0), direction_map(f, t.1));
        if a == b {
            return TrainTrackReport {
                is_train_track: false,
                witness: Some(TrainTrackWitness {
                    edge: e,
                    iterate: k + 1,
                }),
            };
        }
        let next = turn(a, b);
        if let Entry::Vacant(slot) = seen.entry(next) {
            slot.insert((e, k + 1));
            queue.push_back(next);
        }
    }
    TrainTrackReport {
        is_train_track: true,
        witness: None,
    }
}

/// Turns taken by some iterated edge image: the closure of the turns in the
/// edge images under `Df`. Degenerate images are skipped.
pub fn taken_turns(f: &GraphMap) -> BTreeSet<Turn> {
    let mut seen = BTreeSet::new();
    let mut queue: VecDeque<Turn> = f
        .edge_images()
        .iter()
        .flat_map(|img| turns_of(img.steps()))
        .filter(|t| t.0 != t.1)
        .collect();
    while let Some(t) = queue.pop_front() {
        if !seen.insert(t) {
            continue;
        }
        let (a, b) = (direction_map(f, t.0), direction_map(f, t.1));
        if a != b {
            queue.push_back(turn(a, b));
        }
    }
    seen
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhiteheadGraph {
    pub vertex: usize,
    pub directions: Vec<Direction>,
    pub turns: Vec<Turn>,
    pub connected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhiteheadReport {
    pub all_connected: bool,
    pub graphs: Vec<WhiteheadGraph>,
}

/// Per-vertex graphs on directions whose edges are the taken turns.
pub fn whitehead_graphs_connected(f: &GraphMap) -> WhiteheadReport {
    let g = f.graph();
    let turns = taken_turns(f);
    let mut graphs = Vec::with_capacity(g.num_vertices());
    for v in 0..g.num_vertices() {
        let mut directions = Vec::new();
        for e in 0..g.num_edges() {
            for d in [
                Step::new(e, crate::graph::Sign::Pos),
                Step::new(e, crate::graph::Sign::Neg),
            ] {
                if g.step_start(d) == v {
                    directions.push(d);
                }
            }
        }
        let local: Vec<Turn> = turns
            .iter()
            .copied()
            .filter(|t| g.step_start(t.0) == v)
            .collect();
        let connected = is_connected(&directions, &local);
        graphs.push(WhiteheadGraph {
            vertex: v,
            directions,
            turns: local,
            connected,
        });
    }
    WhiteheadReport {
        all_connected: graphs.iter().all(|w| w.connected),
        graphs,
    }
}

fn is_connected(nodes: &[Direction], edges: &[Turn]) -> bool {
    if nodes.len() <= 1 {
        return true;
    }
    let index: BTreeMap<Direction, usize> =
        nodes.iter().enumerate().map(|(i, &d)| (d, i)).collect();
    let mut adj = vec![Vec::new(); nodes.len()];
    for &(a, b) in edges {
        adj[index[&a]].push(index[&b]);
        adj[index[&b]].push(index[&a]);
    }
    let mut seen = vec![false; nodes.len()];
    seen[0] = true;
    let mut stack = vec![0];
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse;

    #[test]
    fn doubling_is_train_track_with_connected_whitehead_graph() {
        let f = parse("vertex v\nedge a v v\nimage a a a\n").unwrap().map;
        assert!(is_train_track(&f).is_train_track);
        let w = whitehead_graphs_connected(&f);
        assert!(w.all_connected);
        assert_eq!(w.graphs[0].turns.len(), 1);
    }

    #[test]
    fn unreduced_image_fails_at_iterate_zero() {
        let f = parse(
            "vertex v\nedge a v v\nedge b v v\nedge c v v\nimage a a b ~b c\nimage b b\nimage c c\n",
        )
        .unwrap()
        .map;
        let r = is_train_track(&f);
        assert!(!r.is_train_track);
        assert_eq!(
            r.witness,
            Some(TrainTrackWitness {
                edge: 0,
                iterate: 0
            })
        );
    }

    #[test]
    fn collapsed_turn_is_detected_later() {
        // f(a) = a~b has the turn {~a, ~b}, which maps to {b, ~a}, then to
        // {a, b}, then collapses to {a, a}.
        let f = parse("vertex v\nedge a v v\nedge b v v\nimage a a ~b\nimage b a\n")
            .unwrap()
            .map;
        let r = is_train_track(&f);
        assert!(!r.is_train_track);
        assert_eq!(
            r.witness,
            Some(TrainTrackWitness {
                edge: 0,
                iterate: 3
            })
        );
    }

    #[test]
    fn disjoint_rotation_has_disconnected_whitehead_graph() {
        let f = parse("vertex v\nedge a v v\nedge b v v\nimage a a\nimage b b\n")
            .unwrap()
            .map;
        assert!(!whitehead_graphs_connected(&f).all_connected);
    }
}
