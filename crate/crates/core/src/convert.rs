//! Conversions between loopstrings and loop graphs.
//!
//! Letters map to glue directions through the tile parity rule, loop letters
//! map to hook identifications, and vertex labels become face labels. The
//! quiver of the graph recovers the word.

use crate::graphs::{
    make_loop_graph, Glue, GraphError, Label, LoopGraph, LoopSpec, SnakeGraph, Tile,
};
use crate::loopstrings::{Direction, HookEnd, Letter, Loopstring};
#[cfg(test)]
use std::collections::BTreeSet;
use crate::quivers::quiver_of_loop_graph;

/// Glue direction of the step carrying `letter` at 1-based position `j`.
pub fn glue_of_letter(letter: Letter, j: usize) -> Glue {
    match (letter.direction(), j % 2 == 1) {
        (Direction::Direct, true) | (Direction::Inverse, false) => Glue::Right,
        (Direction::Direct, false) | (Direction::Inverse, true) => Glue::Up,
    }
}

/// Build the loop graph of a word under an explicit hook assignment.
/// Edge labels are synthesized (abstract graphs carry no weights).
pub fn to_loop_graph_with(
    w: &Loopstring,
    hooks: &[(usize, HookEnd)],
) -> Result<LoopGraph, GraphError> {
    let tiles: Vec<Tile> = w
        .vertices
        .iter()
        .map(|&v| Tile { labels: [Label::Boundary(0); 4], face: v })
        .collect();
    let glue: Vec<Glue> = w
        .letters
        .iter()
        .enumerate()
        .map(|(i, l)| glue_of_letter(*l, i + 1))
        .collect();
    let snake = SnakeGraph::build(tiles, glue)?;
    let specs: Vec<LoopSpec> = hooks
        .iter()
        .map(|&(p, end)| LoopSpec {
            end,
            inner: match end {
                HookEnd::Start => p + 1,
                HookEnd::End => p,
            },
        })
        .collect();
    make_loop_graph(snake, specs)
}

/// Build the loop graph under the default hook assignment.
pub fn to_loop_graph(w: &Loopstring) -> Result<LoopGraph, GraphError> {
    let hooks = w
        .default_hooks()
        .map_err(|d| GraphError::NotAHook { inner: 0, detail: d })?;
    to_loop_graph_with(w, &hooks)
}

/// Both loop-graph images of a word with an ambiguous single loop; one image
/// otherwise.
pub fn loop_graph_images(w: &Loopstring) -> Vec<LoopGraph> {
    w.all_hook_assignments()
        .iter()
        .filter_map(|h| to_loop_graph_with(w, h).ok())
        .collect()
}

/// Read the loopstring of a loop graph off its quiver: consecutive arrows
/// give plain letters, loop arrows give the loop letters.
pub fn from_loop_graph(g: &LoopGraph) -> (Loopstring, Vec<(usize, HookEnd)>) {
    let q = quiver_of_loop_graph(g);
    let n = g.len();
    let mut letters: Vec<Letter> = (1..n)
        .map(|j| {
            if q.arrows.contains(&(j, j + 1)) {
                Letter::Direct
            } else {
                Letter::Inverse
            }
        })
        .collect();
    let mut hooks = Vec::new();
    for spec in &g.loops {
        let (_, (k, _)) = g.identified_edges(*spec);
        let (position, letter) = match spec.end {
            HookEnd::Start => {
                let l = if q.arrows.contains(&(1, k)) {
                    Letter::InverseLoop
                } else {
                    Letter::DirectLoop
                };
                (k - 1, l)
            }
            HookEnd::End => {
                let l = if q.arrows.contains(&(k, n)) {
                    Letter::InverseLoop
                } else {
                    Letter::DirectLoop
                };
                (k, l)
            }
        };
        letters[position - 1] = letter;
        hooks.push((position, spec.end));
    }
    let vertices: Vec<u32> = g.snake.tiles.iter().map(|t| t.face).collect();
    (Loopstring::new(vertices, letters), hooks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{loop_graphs_isomorphic, representations};
    use crate::loopstrings::parse_abstract;

    #[test]
    fn ten_tile_word_to_graph() {
        // w = →→↩→→↩→→→: the 10-tile double-loop graph
        let w = parse_abstract(">>)<>>)<>>>").unwrap();
        let g = to_loop_graph(&w).unwrap();
        use Glue::*;
        assert_eq!(
            g.snake.glue,
            vec![Right, Up, Up, Up, Right, Right, Right, Up, Right]
        );
        assert_eq!(g.loops.len(), 2);
        assert_eq!(
            (g.loops[0].end, g.loops[0].inner),
            (HookEnd::Start, 4)
        );
        assert_eq!((g.loops[1].end, g.loops[1].inner), (HookEnd::End, 6));

        // the letters-equivalent word, with labels propagated through the
        // moves, maps to the other planar representation
        let target = parse_abstract("<<)>>>)><<<").unwrap();
        let member = w
            .equivalence_class()
            .into_iter()
            .find(|m| m.letters == target.letters)
            .unwrap();
        assert_eq!(member.vertices, vec![3, 2, 1, 4, 5, 6, 10, 9, 8, 7]);
        let g2 = to_loop_graph(&member).unwrap();
        assert!(loop_graphs_isomorphic(&g, &g2));
        assert_ne!(g, g2);
    }

    #[test]
    fn one_letter_word_is_two_tile_snake() {
        let w = parse_abstract(">").unwrap();
        let g = to_loop_graph(&w).unwrap();
        assert_eq!(g.len(), 2);
        assert!(g.loops.is_empty());
    }

    #[test]
    fn round_trip_words_up_to_six_letters() {
        for len in 1..=6usize {
            for code in 0..(4u32.pow(len as u32)) {
                let letters: Vec<Letter> = (0..len)
                    .map(|i| match (code >> (2 * i)) & 3 {
                        0 => Letter::Direct,
                        1 => Letter::Inverse,
                        2 => Letter::DirectLoop,
                        _ => Letter::InverseLoop,
                    })
                    .collect();
                let w = Loopstring::abstract_word(letters);
                if !w.hooks_readable() {
                    continue;
                }
                for hooks in w.all_hook_assignments() {
                    let g = match to_loop_graph_with(&w, &hooks) {
                        Ok(g) => g,
                        Err(e) => panic!("graph build failed for {w}: {e}"),
                    };
                    let (back, back_hooks) = from_loop_graph(&g);
                    assert_eq!(back, w, "round trip failed");
                    assert_eq!(back_hooks, hooks);
                    // zig-zag/straight correspondence: consecutive letters of
                    // equal direction give a zig-zag triple, alternating
                    // directions give a straight triple
                    for t in 1..w.len() {
                        let same = w.letters[t - 1].direction() == w.letters[t].direction();
                        assert_eq!(g.snake.is_zigzag(t, t + 2), same, "w={w} t={t}");
                    }
                }
            }
        }
    }

    #[test]
    fn equivalence_matches_graph_isomorphism_small() {
        // all hook-readable words of length <= 5, paired with each of their
        // hook assignments: graphs are isomorphic exactly when the letter
        // patterns are move-equivalent and the assignments coincide
        let mut entries: Vec<(Loopstring, Vec<(usize, HookEnd)>)> = Vec::new();
        for len in 1..=5usize {
            for code in 0..(4u32.pow(len as u32)) {
                let letters: Vec<Letter> = (0..len)
                    .map(|i| match (code >> (2 * i)) & 3 {
                        0 => Letter::Direct,
                        1 => Letter::Inverse,
                        2 => Letter::DirectLoop,
                        _ => Letter::InverseLoop,
                    })
                    .collect();
                let w = Loopstring::abstract_word(letters);
                if w.hooks_readable() {
                    for h in w.all_hook_assignments() {
                        entries.push((w.clone(), h));
                    }
                }
            }
        }
        for (w1, h1) in &entries {
            let g1 = to_loop_graph_with(w1, h1).unwrap();
            // labeled words reachable by moves at the assigned hook ends
            let mut members = BTreeSet::new();
            let mut stack = vec![w1.clone()];
            while let Some(v) = stack.pop() {
                if !members.insert(v.clone()) {
                    continue;
                }
                if h1.iter().any(|(_, e)| *e == HookEnd::Start) {
                    if let Some(m) = v.left_move() {
                        stack.push(m);
                    }
                }
                if h1.iter().any(|(_, e)| *e == HookEnd::End) {
                    if let Some(m) = v.right_move() {
                        stack.push(m);
                    }
                }
            }
            for (w2, h2) in &entries {
                if w1.len() != w2.len() {
                    continue;
                }
                let g2 = to_loop_graph_with(w2, h2).unwrap();
                let expect = h1 == h2 && members.contains(w2);
                let iso = loop_graphs_isomorphic(&g1, &g2);
                assert_eq!(
                    iso, expect,
                    "{w1} (hooks {h1:?}) vs {w2} (hooks {h2:?}): iso={iso}"
                );
            }
        }
    }

    #[test]
    fn representations_round_trip_words() {
        // graph-side re-representation matches the word-side moves
        let w = parse_abstract("1<2)>3<4<5".replace(|c: char| c.is_ascii_digit(), "").as_str());
        let w = w.unwrap();
        let g = to_loop_graph(&w).unwrap();
        for r in representations(&g) {
            let (word, _) = from_loop_graph(&r);
            assert!(w.equivalent(&word), "{w} vs {word}");
        }
    }
}
