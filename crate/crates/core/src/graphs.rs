//! Abstract snake, band and loop graphs.
//!
//! A snake graph is a chain of square tiles glued right or up along shared
//! edges. A band graph closes the chain by identifying a first-tile edge with
//! a last-tile edge of equal sign. A loop graph identifies the far edge of an
//! end tile with a boundary edge of an interior tile across a maximal
//! zig-zag (the hook).

use crate::loopstrings::HookEnd;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    S,
    W,
    N,
    E,
}

pub const SIDES: [Side; 4] = [Side::S, Side::W, Side::N, Side::E];

impl Side {
    pub fn index(self) -> usize {
        match self {
            Side::S => 0,
            Side::W => 1,
            Side::N => 2,
            Side::E => 3,
        }
    }

    /// 180-degree rotation of the tile: S<->N, W<->E.
    pub fn rotate180(self) -> Side {
        match self {
            Side::S => Side::N,
            Side::N => Side::S,
            Side::W => Side::E,
            Side::E => Side::W,
        }
    }

    /// Reflection along the NW-SE diagonal: S<->E, W<->N.
    pub fn antitranspose(self) -> Side {
        match self {
            Side::S => Side::E,
            Side::E => Side::S,
            Side::W => Side::N,
            Side::N => Side::W,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Side::S => 'S',
            Side::W => 'W',
            Side::N => 'N',
            Side::E => 'E',
        };
        write!(f, "{}", c)
    }
}

/// Tile corners, used to assemble the vertex set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Corner {
    SW,
    SE,
    NW,
    NE,
}

impl Corner {
    fn index(self) -> usize {
        match self {
            Corner::SW => 0,
            Corner::SE => 1,
            Corner::NW => 2,
            Corner::NE => 3,
        }
    }
}

fn side_corners(s: Side) -> (Corner, Corner) {
    match s {
        Side::S => (Corner::SW, Corner::SE),
        Side::W => (Corner::SW, Corner::NW),
        Side::N => (Corner::NW, Corner::NE),
        Side::E => (Corner::SE, Corner::NE),
    }
}

/// Edge weight label: a triangulation arc (weight `x_i`) or a boundary
/// segment (weight 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Arc(u32),
    Boundary(u32),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Arc(i) => write!(f, "{}", i),
            Label::Boundary(i) => write!(f, "b{}", i),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tile {
    /// Labels indexed by `Side::index()`.
    pub labels: [Label; 4],
    /// The y-variable index attached to the tile (the crossed arc).
    pub face: u32,
}

impl Tile {
    pub fn label(&self, s: Side) -> Label {
        self.labels[s.index()]
    }

    pub fn rotate180(&self) -> Tile {
        let mut labels = self.labels;
        for s in SIDES {
            labels[s.rotate180().index()] = self.labels[s.index()];
        }
        Tile { labels, face: self.face }
    }

    pub fn antitranspose(&self) -> Tile {
        let mut labels = self.labels;
        for s in SIDES {
            labels[s.antitranspose().index()] = self.labels[s.index()];
        }
        Tile { labels, face: self.face }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Glue {
    Right,
    Up,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnakeGraph {
    pub tiles: Vec<Tile>,
    /// glue[i] relates tiles i+1 and i+2 (1-based).
    pub glue: Vec<Glue>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    BadGlue { step: usize, detail: String },
    NotAHook { inner: usize, detail: String },
    TooFewTiles { have: usize },
    BadBand { detail: String },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::BadGlue { step, detail } => write!(f, "bad glue at step {step}: {detail}"),
            GraphError::NotAHook { inner, detail } => {
                write!(f, "no hook at inner tile {inner}: {detail}")
            }
            GraphError::TooFewTiles { have } => {
                write!(f, "loop graphs need at least 3 tiles, have {have}")
            }
            GraphError::BadBand { detail } => write!(f, "bad band identification: {detail}"),
        }
    }
}

impl std::error::Error for GraphError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl SnakeGraph {
    /// Validate the shared-edge labels against the glue directions.
    pub fn build(tiles: Vec<Tile>, glue: Vec<Glue>) -> Result<SnakeGraph, GraphError> {
        assert!(!tiles.is_empty());
        assert_eq!(glue.len() + 1, tiles.len());
        for (i, g) in glue.iter().enumerate() {
            let (a, b) = match g {
                Glue::Right => (tiles[i].label(Side::E), tiles[i + 1].label(Side::W)),
                Glue::Up => (tiles[i].label(Side::N), tiles[i + 1].label(Side::S)),
            };
            if a != b {
                return Err(GraphError::BadGlue {
                    step: i + 1,
                    detail: format!("shared edge labels disagree: {a} vs {b}"),
                });
            }
        }
        Ok(SnakeGraph { tiles, glue })
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    /// Sign function with `f(S(G1)) = Minus`; unique once that choice is
    /// fixed. Returns a map (1-based tile, side) -> sign covering every slot.
    pub fn sign_function(&self) -> BTreeMap<(usize, Side), Sign> {
        let mut signs = BTreeMap::new();
        let mut south = Sign::Minus;
        for i in 0..self.tiles.len() {
            let t = i + 1;
            signs.insert((t, Side::S), south);
            signs.insert((t, Side::E), south);
            signs.insert((t, Side::N), south.flip());
            signs.insert((t, Side::W), south.flip());
            if i < self.glue.len() {
                // Shared edge: Right glues E(G_t) [sign south] onto the next
                // W [N/W group], Up glues N(G_t) [flip south] onto the next
                // S [S/E group]; both force the next south to flip.
                south = south.flip();
            }
        }
        signs
    }

    /// Do tiles i..=j (1-based) form a zig-zag? Every interior tile of the
    /// range must not have both its S/N or both its W/E edges glued inside
    /// the graph's chain.
    pub fn is_zigzag(&self, i: usize, j: usize) -> bool {
        debug_assert!(1 <= i && i <= j && j <= self.len());
        for t in i.max(2)..=j.min(self.len() - 1) {
            // tile t has neighbors t-1 and t+1 via glue steps t-1 and t
            if t > i && t < j && self.glue[t - 2] == self.glue[t - 1] {
                return false;
            }
        }
        true
    }

    /// The maximal zig-zag run containing `tile` on the given side:
    /// `Following` extends to higher indices, `Preceding` to lower.
    /// Returns the inclusive 1-based range.
    pub fn maximal_zigzag(&self, tile: usize, side: ZigzagSide) -> (usize, usize) {
        assert!(1 <= tile && tile <= self.len());
        match side {
            ZigzagSide::Following => {
                let mut j = tile;
                while j < self.len() && self.is_zigzag(tile, j + 1) {
                    j += 1;
                }
                (tile, j)
            }
            ZigzagSide::Preceding => {
                let mut i = tile;
                while i > 1 && self.is_zigzag(i - 1, tile) {
                    i -= 1;
                }
                (i, tile)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZigzagSide {
    Following,
    Preceding,
}

/// One vertex/edge identification closing a hook.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LoopSpec {
    pub end: HookEnd,
    /// 1-based interior tile carrying the cut edge.
    pub inner: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopGraph {
    pub snake: SnakeGraph,
    /// At most two, sorted Start before End.
    pub loops: Vec<LoopSpec>,
}

impl LoopGraph {
    /// A loop graph with no identifications; any snake graph qualifies.
    pub fn plain(snake: SnakeGraph) -> LoopGraph {
        LoopGraph { snake, loops: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.snake.len()
    }

    /// The pair of identified edges for a loop spec: (far edge of the end
    /// tile, cut edge of the inner tile), both as (1-based tile, side).
    pub fn identified_edges(&self, spec: LoopSpec) -> ((usize, Side), (usize, Side)) {
        let d = self.snake.len();
        match spec.end {
            HookEnd::Start => {
                let far = match self.snake.glue[0] {
                    Glue::Right => (1, Side::W),
                    Glue::Up => (1, Side::S),
                };
                // cut edge: the S/W boundary edge of the inner tile
                let cut = match self.snake.glue[spec.inner - 2] {
                    Glue::Right => (spec.inner, Side::S),
                    Glue::Up => (spec.inner, Side::W),
                };
                (far, cut)
            }
            HookEnd::End => {
                let far = match self.snake.glue[d - 2] {
                    Glue::Right => (d, Side::E),
                    Glue::Up => (d, Side::N),
                };
                // cut edge: the N/E boundary edge of the inner tile
                let cut = match self.snake.glue[spec.inner - 1] {
                    Glue::Right => (spec.inner, Side::N),
                    Glue::Up => (spec.inner, Side::E),
                };
                (far, cut)
            }
        }
    }
}

/// Build a loop graph, checking the hook geometry: the block between the
/// identified tiles must be the maximal zig-zag reaching the end of the
/// graph.
pub fn make_loop_graph(snake: SnakeGraph, specs: Vec<LoopSpec>) -> Result<LoopGraph, GraphError> {
    let d = snake.len();
    if !specs.is_empty() && d < 3 {
        return Err(GraphError::TooFewTiles { have: d });
    }
    let mut specs = specs;
    specs.sort();
    if specs.len() > 2 {
        return Err(GraphError::NotAHook {
            inner: specs[2].inner,
            detail: "more than two loops".into(),
        });
    }
    if specs.len() == 2 && specs[0].end == specs[1].end {
        return Err(GraphError::NotAHook {
            inner: specs[1].inner,
            detail: "two loops at the same end".into(),
        });
    }
    for spec in &specs {
        match spec.end {
            HookEnd::Start => {
                let (_, j) = snake.maximal_zigzag(1, ZigzagSide::Following);
                if j + 1 != spec.inner {
                    return Err(GraphError::NotAHook {
                        inner: spec.inner,
                        detail: format!(
                            "maximal zig-zag following the first tile ends at {j}, \
                             so the cut tile must be {}",
                            j + 1
                        ),
                    });
                }
            }
            HookEnd::End => {
                let (i, _) = snake.maximal_zigzag(d, ZigzagSide::Preceding);
                if i != spec.inner + 1 {
                    return Err(GraphError::NotAHook {
                        inner: spec.inner,
                        detail: format!(
                            "maximal zig-zag preceding the last tile starts at {i}, \
                             so the cut tile must be {}",
                            i.saturating_sub(1)
                        ),
                    });
                }
            }
        }
        // A start loop can tie as far as the last tile and an end loop as
        // near as the first; the zig-zag maximality above is the real gate.
        let ok = match spec.end {
            HookEnd::Start => 2 <= spec.inner && spec.inner <= d,
            HookEnd::End => 1 <= spec.inner && spec.inner <= d - 1,
        };
        if !ok {
            return Err(GraphError::NotAHook {
                inner: spec.inner,
                detail: "inner tile out of range".into(),
            });
        }
    }
    Ok(LoopGraph { snake, loops: specs })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BandGraph {
    pub snake: SnakeGraph,
    /// Entry side of the first tile, S or W.
    pub first_side: Side,
    /// Exit side of the last tile, N or E.
    pub last_side: Side,
}

/// Close a snake graph into a band: the curve exits the last tile through
/// its N or E edge and re-enters the first tile through its S or W edge.
/// The identified edges must carry equal sign and equal label.
pub fn make_band_graph(
    snake: SnakeGraph,
    first_side: Side,
    last_side: Side,
) -> Result<BandGraph, GraphError> {
    if !matches!(first_side, Side::S | Side::W) || !matches!(last_side, Side::N | Side::E) {
        return Err(GraphError::BadBand {
            detail: "identification must use S/W of the first tile and N/E of the last".into(),
        });
    }
    // Tile 1's S/W and tile d's N/E are never glued inside the chain, so the
    // chosen sides are automatically free.
    let d = snake.len();
    if snake.tiles[0].label(first_side) != snake.tiles[d - 1].label(last_side) {
        return Err(GraphError::BadBand {
            detail: format!(
                "identified edge labels disagree: {} vs {}",
                snake.tiles[0].label(first_side),
                snake.tiles[d - 1].label(last_side)
            ),
        });
    }
    let signs = snake.sign_function();
    let s1 = signs[&(1, first_side)];
    let s2 = signs[&(d, last_side)];
    if s1 != s2 {
        return Err(GraphError::BadBand {
            detail: format!("identified edges have opposite signs ({s1:?} vs {s2:?})"),
        });
    }
    Ok(BandGraph { snake, first_side, last_side })
}

/// A snake/band/loop graph assembled into explicit vertices and edges,
/// ready for matching enumeration. Identified slots collapse to one edge.
#[derive(Clone, Debug)]
pub struct Assembled {
    pub n_vertices: usize,
    /// Canonical edges; `slots` lists every (1-based tile, side) aliasing it.
    pub edges: Vec<EdgeInfo>,
    slot_edge: BTreeMap<(usize, Side), usize>,
    pub n_tiles: usize,
    pub faces: Vec<u32>,
}

#[derive(Clone, Debug)]
pub struct EdgeInfo {
    pub ends: (usize, usize),
    pub label: Label,
    pub boundary: bool,
    pub slots: Vec<(usize, Side)>,
}

impl Assembled {
    pub fn edge_at(&self, tile: usize, side: Side) -> usize {
        self.slot_edge[&(tile, side)]
    }

    /// The four edge ids around a tile, in S,W,N,E order.
    pub fn tile_edges(&self, tile: usize) -> [usize; 4] {
        [
            self.edge_at(tile, Side::S),
            self.edge_at(tile, Side::W),
            self.edge_at(tile, Side::N),
            self.edge_at(tile, Side::E),
        ]
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let r = self.find(self.0[x]);
            self.0[x] = r;
        }
        self.0[x]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra] = rb;
        }
    }
}

/// Vertex identifications for one loop: the far-corner of the end tile pairs
/// with the non-extremal endpoint of the cut edge, and the other far-edge
/// endpoint pairs with the extremal one (NE for end hooks, SW for start
/// hooks).
fn loop_corner_pairs(
    g: &LoopGraph,
    spec: LoopSpec,
) -> [((usize, Corner), (usize, Corner)); 2] {
    let ((ft, fs), (ct, cs)) = g.identified_edges(spec);
    match spec.end {
        HookEnd::End => {
            let x = (ft, Corner::NE);
            let y = match fs {
                Side::E => (ft, Corner::SE),
                Side::N => (ft, Corner::NW),
                _ => unreachable!(),
            };
            let (cut_other, cut_extreme) = match cs {
                Side::N => ((ct, Corner::NW), (ct, Corner::NE)),
                Side::E => ((ct, Corner::SE), (ct, Corner::NE)),
                _ => unreachable!(),
            };
            [(x, cut_other), (y, cut_extreme)]
        }
        HookEnd::Start => {
            let x = (ft, Corner::SW);
            let y = match fs {
                Side::W => (ft, Corner::NW),
                Side::S => (ft, Corner::SE),
                _ => unreachable!(),
            };
            let (cut_other, cut_extreme) = match cs {
                Side::S => ((ct, Corner::SE), (ct, Corner::SW)),
                Side::W => ((ct, Corner::NW), (ct, Corner::SW)),
                _ => unreachable!(),
            };
            [(x, cut_other), (y, cut_extreme)]
        }
    }
}

fn assemble(
    snake: &SnakeGraph,
    extra_edge_pairs: &[((usize, Side), (usize, Side))],
    extra_corner_pairs: &[((usize, Corner), (usize, Corner))],
) -> Assembled {
    let n = snake.len();
    let corner_id = |tile: usize, c: Corner| (tile - 1) * 4 + c.index();
    let slot_id = |tile: usize, s: Side| (tile - 1) * 4 + s.index();
    let mut corners = UnionFind::new(4 * n);
    let mut slots = UnionFind::new(4 * n);
    for (i, g) in snake.glue.iter().enumerate() {
        let t = i + 1;
        match g {
            Glue::Right => {
                corners.union(corner_id(t, Corner::SE), corner_id(t + 1, Corner::SW));
                corners.union(corner_id(t, Corner::NE), corner_id(t + 1, Corner::NW));
                slots.union(slot_id(t, Side::E), slot_id(t + 1, Side::W));
            }
            Glue::Up => {
                corners.union(corner_id(t, Corner::NW), corner_id(t + 1, Corner::SW));
                corners.union(corner_id(t, Corner::NE), corner_id(t + 1, Corner::SE));
                slots.union(slot_id(t, Side::N), slot_id(t + 1, Side::S));
            }
        }
    }
    for ((t1, s1), (t2, s2)) in extra_edge_pairs {
        slots.union(slot_id(*t1, *s1), slot_id(*t2, *s2));
    }
    for ((t1, c1), (t2, c2)) in extra_corner_pairs {
        corners.union(corner_id(*t1, *c1), corner_id(*t2, *c2));
    }

    // Renumber vertices
    let mut vertex_of_root: BTreeMap<usize, usize> = BTreeMap::new();
    let mut vertex_of = vec![0usize; 4 * n];
    for t in 1..=n {
        for c in [Corner::SW, Corner::SE, Corner::NW, Corner::NE] {
            let root = corners.find(corner_id(t, c));
            let next = vertex_of_root.len();
            let v = *vertex_of_root.entry(root).or_insert(next);
            vertex_of[corner_id(t, c)] = v;
        }
    }

    // Group slots into canonical edges
    let mut edge_of_root: BTreeMap<usize, usize> = BTreeMap::new();
    let mut edges: Vec<EdgeInfo> = Vec::new();
    let mut slot_edge = BTreeMap::new();
    for t in 1..=n {
        for s in SIDES {
            let root = slots.find(slot_id(t, s));
            let idx = *edge_of_root.entry(root).or_insert_with(|| {
                let (c1, c2) = side_corners(s);
                let ends = (
                    vertex_of[corner_id(t, c1)],
                    vertex_of[corner_id(t, c2)],
                );
                edges.push(EdgeInfo {
                    ends: (ends.0.min(ends.1), ends.0.max(ends.1)),
                    label: snake.tiles[t - 1].label(s),
                    boundary: false,
                    slots: Vec::new(),
                });
                edges.len() - 1
            });
            edges[idx].slots.push((t, s));
            slot_edge.insert((t, s), idx);
        }
    }
    // A boundary edge is carried by exactly one tile slot.
    for e in edges.iter_mut() {
        e.boundary = e.slots.len() == 1;
    }
    Assembled {
        n_vertices: vertex_of_root.len(),
        edges,
        slot_edge,
        n_tiles: n,
        faces: snake.tiles.iter().map(|t| t.face).collect(),
    }
}

pub fn assemble_snake(g: &SnakeGraph) -> Assembled {
    assemble(g, &[], &[])
}

pub fn assemble_loop(g: &LoopGraph) -> Assembled {
    let mut edge_pairs = Vec::new();
    let mut corner_pairs = Vec::new();
    for spec in &g.loops {
        edge_pairs.push(g.identified_edges(*spec));
        corner_pairs.extend(loop_corner_pairs(g, *spec));
    }
    assemble(&g.snake, &edge_pairs, &corner_pairs)
}

pub fn assemble_band(g: &BandGraph) -> Assembled {
    let d = g.snake.len();
    // The wrap continues the curve's motion: pair the left-of-motion corner
    // of the exit edge with the left-of-motion corner of the entry edge.
    let exit_lr = match g.last_side {
        Side::E => (Corner::NE, Corner::SE),
        Side::N => (Corner::NW, Corner::NE),
        _ => unreachable!(),
    };
    let entry_lr = match g.first_side {
        Side::W => (Corner::NW, Corner::SW),
        Side::S => (Corner::SW, Corner::SE),
        _ => unreachable!(),
    };
    let corner_pairs = [
        ((d, exit_lr.0), (1, entry_lr.0)),
        ((d, exit_lr.1), (1, entry_lr.1)),
    ];
    assemble(&g.snake, &[((d, g.last_side), (1, g.first_side))], &corner_pairs)
}

fn transpose_glue(g: Glue) -> Glue {
    match g {
        Glue::Right => Glue::Up,
        Glue::Up => Glue::Right,
    }
}

/// The other planar representation of a loop graph with respect to one of
/// its loops: the hook block is read from the other end.
///
/// The block's tile order reverses; whether each tile rotates by 180 degrees
/// or reflects along the NW-SE diagonal (and whether the reversed glue steps
/// transpose) depends on the parity of the hook-letter position, matching
/// the left/right moves on loopstrings. The step at the hook letter always
/// transposes, turning the identified edge pair into the new glued pair and
/// vice versa.
pub fn re_represent(g: &LoopGraph, which: usize) -> LoopGraph {
    let spec = g.loops[which];
    let n_letters = g.snake.len() - 1;
    let mut tiles = g.snake.tiles.clone();
    let mut glue = g.snake.glue.clone();
    match spec.end {
        HookEnd::Start => {
            let k = spec.inner;
            let d = k - 1; // hook letter position
            let transposed = d % 2 == 0;
            let block: Vec<Tile> = tiles[..d]
                .iter()
                .rev()
                .map(|t| if transposed { t.antitranspose() } else { t.rotate180() })
                .collect();
            tiles[..d].clone_from_slice(&block);
            let old = glue.clone();
            for j in 1..d {
                let s = old[d - j - 1];
                glue[j - 1] = if transposed { transpose_glue(s) } else { s };
            }
            glue[d - 1] = transpose_glue(old[d - 1]);
        }
        HookEnd::End => {
            let l = spec.inner; // hook letter position
            let transposed = (n_letters + l) % 2 == 1;
            let block: Vec<Tile> = tiles[l..]
                .iter()
                .rev()
                .map(|t| if transposed { t.antitranspose() } else { t.rotate180() })
                .collect();
            tiles[l..].clone_from_slice(&block);
            let old = glue.clone();
            glue[l - 1] = transpose_glue(old[l - 1]);
            for j in l + 1..=n_letters {
                let s = old[n_letters + l - j];
                glue[j - 1] = if transposed { transpose_glue(s) } else { s };
            }
        }
    }
    LoopGraph { snake: SnakeGraph { tiles, glue }, loops: g.loops.clone() }
}

/// All planar representations of a loop graph (up to 4 for two loops).
pub fn representations(g: &LoopGraph) -> Vec<LoopGraph> {
    let mut out = vec![g.clone()];
    for which in 0..g.loops.len() {
        let mut more = Vec::new();
        for r in &out {
            more.push(re_represent(r, which));
        }
        out.extend(more);
    }
    out
}

/// True iff `a` and `b` are planar representations of the same loop graph
/// (equal tiles, glue and loop data after flipping hooks), labels included.
pub fn loop_graphs_isomorphic(a: &LoopGraph, b: &LoopGraph) -> bool {
    representations(a).iter().any(|r| r == b)
}

/// Text serialization: one line per tile, a glue line, loop lines.
pub fn render_loop_graph(g: &LoopGraph) -> String {
    let mut out = String::new();
    for (i, t) in g.snake.tiles.iter().enumerate() {
        out.push_str(&format!(
            "{}: S={} W={} N={} E={} y={}\n",
            i + 1,
            t.label(Side::S),
            t.label(Side::W),
            t.label(Side::N),
            t.label(Side::E),
            t.face
        ));
    }
    if !g.snake.glue.is_empty() {
        out.push_str("glue:");
        for gl in &g.snake.glue {
            out.push_str(match gl {
                Glue::Right => " R",
                Glue::Up => " U",
            });
        }
        out.push('\n');
    }
    for spec in &g.loops {
        let (_, (ct, cs)) = g.identified_edges(*spec);
        out.push_str(&format!(
            "loop: end={} inner={} cut={}\n",
            match spec.end {
                HookEnd::Start => "START",
                HookEnd::End => "END",
            },
            ct,
            cs
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn plain_tiles(n: usize) -> Vec<Tile> {
        (1..=n)
            .map(|i| Tile {
                labels: [Label::Boundary(0); 4],
                face: i as u32,
            })
            .collect()
    }

    pub(crate) fn snake(glue: &[Glue]) -> SnakeGraph {
        SnakeGraph { tiles: plain_tiles(glue.len() + 1), glue: glue.to_vec() }
    }

    #[test]
    fn build_single_tile() {
        let g = SnakeGraph::build(plain_tiles(1), vec![]).unwrap();
        let a = assemble_snake(&g);
        assert_eq!(a.n_vertices, 4);
        assert_eq!(a.edges.len(), 4);
        assert!(a.edges.iter().all(|e| e.boundary));
    }

    #[test]
    fn build_rejects_label_mismatch() {
        let mut tiles = plain_tiles(2);
        tiles[0].labels[Side::E.index()] = Label::Arc(7);
        tiles[1].labels[Side::W.index()] = Label::Arc(8);
        let err = SnakeGraph::build(tiles, vec![Glue::Right]).unwrap_err();
        assert!(matches!(err, GraphError::BadGlue { step: 1, .. }));
    }

    #[test]
    fn sign_function_constraints() {
        for glue in [vec![Glue::Right, Glue::Up], vec![Glue::Up, Glue::Up, Glue::Right]] {
            let g = snake(&glue);
            let f = g.sign_function();
            for t in 1..=g.len() {
                assert_eq!(f[&(t, Side::N)], f[&(t, Side::W)]);
                assert_eq!(f[&(t, Side::S)], f[&(t, Side::E)]);
                assert_ne!(f[&(t, Side::N)], f[&(t, Side::S)]);
            }
            // shared edges carry one consistent sign
            for (i, gl) in g.glue.iter().enumerate() {
                let (s1, s2) = match gl {
                    Glue::Right => ((i + 1, Side::E), (i + 2, Side::W)),
                    Glue::Up => ((i + 1, Side::N), (i + 2, Side::S)),
                };
                assert_eq!(f[&s1], f[&s2]);
            }
        }
    }

    #[test]
    fn zigzag_analysis() {
        // straight 4-tile snake: any two consecutive tiles are vacuously
        // zig-zag, a third forces a straight triple
        let g = snake(&[Glue::Right, Glue::Right, Glue::Right]);
        assert_eq!(g.maximal_zigzag(1, ZigzagSide::Following), (1, 2));
        // zig-zag snake: the whole graph
        let z = snake(&[Glue::Right, Glue::Up, Glue::Right, Glue::Up]);
        assert_eq!(z.maximal_zigzag(1, ZigzagSide::Following), (1, 5));
        assert_eq!(z.maximal_zigzag(5, ZigzagSide::Preceding), (1, 5));
        // 1-tile graph
        let one = snake(&[]);
        assert_eq!(one.maximal_zigzag(1, ZigzagSide::Following), (1, 1));
    }

    #[test]
    fn loop_graph_hook_validation() {
        // straight 5-tile snake: no end hook anywhere
        let g = snake(&[Glue::Right; 4]);
        let err = make_loop_graph(g, vec![LoopSpec { end: HookEnd::End, inner: 2 }]).unwrap_err();
        assert!(matches!(err, GraphError::NotAHook { .. }));
        // 2-tile snake: too few tiles
        let g = snake(&[Glue::Right]);
        let err = make_loop_graph(g, vec![LoopSpec { end: HookEnd::End, inner: 1 }]).unwrap_err();
        assert!(matches!(err, GraphError::TooFewTiles { have: 2 }));
        // 5-tile graph with glue U,U,U,R has maximal zig-zag {3,4,5}
        // preceding tile 5, so an end loop at inner tile 2 is legal
        let g = snake(&[Glue::Up, Glue::Up, Glue::Up, Glue::Right]);
        let lg = make_loop_graph(g, vec![LoopSpec { end: HookEnd::End, inner: 2 }]).unwrap();
        assert_eq!(
            lg.identified_edges(lg.loops[0]),
            ((5, Side::E), (2, Side::E))
        );
    }

    #[test]
    fn band_requires_equal_sign() {
        // 2-tile right snake: south flips per step, so W(G1) [+] matches
        // E(G2) [+] and S(G1) [-] matches N(G2) [-].
        let g = snake(&[Glue::Right]);
        assert!(make_band_graph(g.clone(), Side::W, Side::E).is_ok());
        assert!(make_band_graph(g, Side::S, Side::N).is_ok());
        for n in 2..=8 {
            for bits in 0..(1u32 << (n - 1)) {
                let glue: Vec<Glue> = (0..n - 1)
                    .map(|i| if bits >> i & 1 == 1 { Glue::Up } else { Glue::Right })
                    .collect();
                let g = snake(&glue);
                let signs = g.sign_function();
                for first in [Side::S, Side::W] {
                    for last in [Side::N, Side::E] {
                        let legal = make_band_graph(g.clone(), first, last).is_ok();
                        let expect = signs[&(1, first)] == signs[&(n, last)];
                        assert_eq!(legal, expect, "n={n} bits={bits} {first:?} {last:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn re_represent_is_involutive() {
        let g = snake(&[Glue::Up, Glue::Up, Glue::Up, Glue::Right]);
        let lg = make_loop_graph(g, vec![LoopSpec { end: HookEnd::End, inner: 2 }]).unwrap();
        let r = re_represent(&lg, 0);
        assert_ne!(r, lg);
        assert_eq!(r.snake.glue, vec![Glue::Up, Glue::Right, Glue::Right, Glue::Up]);
        assert_eq!(re_represent(&r, 0), lg);
        assert!(loop_graphs_isomorphic(&lg, &r));
        assert!(loop_graphs_isomorphic(&lg, &lg));
    }
}
