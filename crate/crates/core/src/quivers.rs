//! Quivers of snake graphs, loop graphs and triangulations, plus the
//! extended quiver with boundary vertices used by loopstring monomials.

use crate::graphs::{Glue, Label, LoopGraph, Side, SnakeGraph};
use crate::loopstrings::HookEnd;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Quiver on 1-based tile indices of a snake or loop graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TileQuiver {
    pub n: usize,
    pub arrows: BTreeSet<(usize, usize)>,
}

impl fmt::Display for TileQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.arrows.len())?;
        for (a, b) in &self.arrows {
            writeln!(f, "{a} {b}")?;
        }
        Ok(())
    }
}

/// Arrows between consecutive tiles by the parity rule: an odd tile points
/// at a right neighbor and at the tile below it; an even tile points at an
/// upper neighbor and at the tile to its left.
pub fn quiver_of_snake_graph(g: &SnakeGraph) -> TileQuiver {
    let mut arrows = BTreeSet::new();
    for (i, gl) in g.glue.iter().enumerate() {
        let j = i + 1; // 1-based step between tiles j, j+1
        let forward = match gl {
            Glue::Right => j % 2 == 1,
            Glue::Up => j % 2 == 0,
        };
        if forward {
            arrows.insert((j, j + 1));
        } else {
            arrows.insert((j + 1, j));
        }
    }
    TileQuiver { n: g.len(), arrows }
}

/// Snake quiver plus one arrow per loop, determined by the parity of the
/// inner tile and which of its edges is the cut edge.
pub fn quiver_of_loop_graph(g: &LoopGraph) -> TileQuiver {
    let mut q = quiver_of_snake_graph(&g.snake);
    let n = g.len();
    for spec in &g.loops {
        let (_, (k, cut)) = g.identified_edges(*spec);
        let odd = k % 2 == 1;
        let arrow = match spec.end {
            HookEnd::Start => match (cut, odd) {
                (Side::S, true) | (Side::W, false) => (1, k),
                (Side::S, false) | (Side::W, true) => (k, 1),
                _ => unreachable!("start cut edge is S or W"),
            },
            HookEnd::End => match (cut, odd) {
                (Side::N, true) | (Side::E, false) => (n, k),
                (Side::N, false) | (Side::E, true) => (k, n),
                _ => unreachable!("end cut edge is N or E"),
            },
        };
        q.arrows.insert(arrow);
    }
    q
}

/// Quiver on triangulation labels; arrows may repeat (double arrows occur on
/// surfaces), so they are kept as a list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelQuiver {
    pub vertices: BTreeSet<Label>,
    pub arrows: Vec<(Label, Label)>,
}

impl LabelQuiver {
    pub fn arrows_from(&self, v: Label) -> Vec<Label> {
        self.arrows.iter().filter(|(a, _)| *a == v).map(|(_, b)| *b).collect()
    }

    pub fn arrows_into(&self, v: Label) -> Vec<Label> {
        self.arrows.iter().filter(|(_, b)| *b == v).map(|(a, _)| *a).collect()
    }

    pub fn has_arrow(&self, a: Label, b: Label) -> bool {
        self.arrows.contains(&(a, b))
    }

    /// Net signed arrow counts between arc vertices with 2-cycles cancelled:
    /// the seed data for mutation.
    pub fn b_matrix(&self, order: &[u32]) -> Vec<Vec<i64>> {
        let pos: BTreeMap<u32, usize> =
            order.iter().enumerate().map(|(i, a)| (*a, i)).collect();
        let n = order.len();
        let mut b = vec![vec![0i64; n]; n];
        for (s, t) in &self.arrows {
            if let (Label::Arc(s), Label::Arc(t)) = (s, t) {
                if let (Some(&i), Some(&j)) = (pos.get(s), pos.get(t)) {
                    b[i][j] += 1;
                    b[j][i] -= 1;
                }
            }
        }
        b
    }

    pub fn render(&self) -> String {
        let mut out = format!("{} {}\n", self.vertices.len(), self.arrows.len());
        let mut sorted = self.arrows.clone();
        sorted.sort();
        for (a, b) in sorted {
            out.push_str(&format!("{a} {b}\n"));
        }
        out
    }
}

/// One triangle of a triangulation: sides in clockwise order, or a
/// self-folded triangle given by its radius and enclosing loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Triangle {
    Plain([Label; 3]),
    SelfFolded { radius: u32, loop_arc: u32 },
}

/// Arrows of one plain triangle: side `i` following side `j` in clockwise
/// order contributes `i -> j`.
fn triangle_arrows(sides: &[Label; 3]) -> [(Label, Label); 3] {
    [
        (sides[1], sides[0]),
        (sides[2], sides[1]),
        (sides[0], sides[2]),
    ]
}

/// The quiver of a triangulation restricted to arc vertices. Self-folded
/// radii copy the arrows of their enclosing loops.
pub fn quiver_of_triangulation(triangles: &[Triangle]) -> LabelQuiver {
    let full = extended_quiver_of(triangles, false);
    let arrows: Vec<(Label, Label)> = full
        .arrows
        .into_iter()
        .filter(|(a, b)| matches!(a, Label::Arc(_)) && matches!(b, Label::Arc(_)))
        .collect();
    let mut vertices = BTreeSet::new();
    for t in triangles {
        match t {
            Triangle::Plain(sides) => {
                for s in sides {
                    if matches!(s, Label::Arc(_)) {
                        vertices.insert(*s);
                    }
                }
            }
            Triangle::SelfFolded { radius, loop_arc } => {
                vertices.insert(Label::Arc(*radius));
                vertices.insert(Label::Arc(*loop_arc));
            }
        }
    }
    LabelQuiver { vertices, arrows }
}

/// The extended quiver: every triangle contributes its full 3-cycle, with
/// boundary segments as vertices, so every interior arc (away from
/// self-folded pieces) has two incoming and two outgoing arrows.
pub fn extended_quiver(triangles: &[Triangle]) -> LabelQuiver {
    extended_quiver_of(triangles, true)
}

fn extended_quiver_of(triangles: &[Triangle], keep_boundary: bool) -> LabelQuiver {
    let mut arrows: Vec<(Label, Label)> = Vec::new();
    let mut vertices = BTreeSet::new();
    for t in triangles {
        if let Triangle::Plain(sides) = t {
            for (a, b) in triangle_arrows(sides) {
                arrows.push((a, b));
            }
            for s in sides {
                vertices.insert(*s);
            }
        }
    }
    // Self-folded triangles: the radius copies every arrow of its loop, and
    // the degenerate triangle itself closes both vertices to degree (2,2).
    for t in triangles {
        if let Triangle::SelfFolded { radius, loop_arc } = t {
            let r = Label::Arc(*radius);
            let l = Label::Arc(*loop_arc);
            vertices.insert(r);
            vertices.insert(l);
            let copies: Vec<(Label, Label)> = arrows
                .iter()
                .filter_map(|(a, b)| {
                    if *a == l {
                        Some((r, *b))
                    } else if *b == l {
                        Some((*a, r))
                    } else {
                        None
                    }
                })
                .collect();
            arrows.extend(copies);
            arrows.push((r, l));
            arrows.push((l, r));
        }
    }
    if !keep_boundary {
        arrows.retain(|(a, b)| matches!(a, Label::Arc(_)) && matches!(b, Label::Arc(_)));
        vertices.retain(|v| matches!(v, Label::Arc(_)));
    }
    LabelQuiver { vertices, arrows }
}
