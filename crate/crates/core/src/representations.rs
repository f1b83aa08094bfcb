//! String and loop modules built combinatorially from loopstrings: positions
//! with arrows, tops and socles, top removal, canonical submodule lattices,
//! and the matching/submodule correspondence.
//!
//! A canonical submodule is an arrow-closed position set together with its
//! identity embedding, so submodule equality is position-set equality.

use crate::graphs::Assembled;
use crate::loopstrings::{Direction, HookEnd, Loopstring};
use crate::matchings::{
    self, edge_components, enclosed_tiles, symmetric_difference, Matching,
};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// A loop module in position/arrow form: positions 0..=n mirror the word's
/// vertices; arrows are the consecutive-letter arrows plus one arrow per
/// hook.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopModule {
    pub word: Loopstring,
    /// arrows (p, q) meaning p -> q.
    pub arrows: BTreeSet<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleError {
    BadWord(String),
    NotATop { position: usize },
}

impl std::fmt::Display for ModuleError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ModuleError::BadWord(d) => write!(f, "not a usable loopstring: {d}"),
            ModuleError::NotATop { position } => {
                write!(f, "position {position} is not a top of the submodule")
            }
        }
    }
}

impl std::error::Error for ModuleError {}

impl LoopModule {
    /// Construct the module with the default hook assignment.
    pub fn of_loopstring(w: &Loopstring) -> Result<LoopModule, ModuleError> {
        let hooks = w.default_hooks().map_err(ModuleError::BadWord)?;
        Ok(Self::with_hooks(w, &hooks))
    }

    /// Construct the module with an explicit hook reading per loop letter.
    ///
    /// Arrow rules: each letter contributes its plain-direction arrow between
    /// consecutive positions; a start-read loop at letter position `k` adds
    /// `0 -> k` (inverse loop) or `k -> 0` (direct loop); an end-read loop at
    /// `l` adds `l-1 -> n` (inverse) or `n -> l-1` (direct).
    pub fn with_hooks(w: &Loopstring, hooks: &[(usize, HookEnd)]) -> LoopModule {
        let n = w.len();
        let mut arrows = BTreeSet::new();
        for (i, l) in w.letters.iter().enumerate() {
            match l.direction() {
                Direction::Direct => arrows.insert((i, i + 1)),
                Direction::Inverse => arrows.insert((i + 1, i)),
            };
        }
        for &(p, end) in hooks {
            let letter = w.letters[p - 1];
            debug_assert!(letter.is_loop());
            let arrow = match (end, letter.direction()) {
                (HookEnd::Start, Direction::Inverse) => (0, p),
                (HookEnd::Start, Direction::Direct) => (p, 0),
                (HookEnd::End, Direction::Inverse) => (p - 1, n),
                (HookEnd::End, Direction::Direct) => (n, p - 1),
            };
            arrows.insert(arrow);
        }
        LoopModule { word: w.clone(), arrows }
    }

    pub fn n_positions(&self) -> usize {
        self.word.vertices.len()
    }

    pub fn full(&self) -> BTreeSet<usize> {
        (0..self.n_positions()).collect()
    }

    /// Positions with no incoming arrow within the subset.
    pub fn tops_of(&self, sub: &BTreeSet<usize>) -> BTreeSet<usize> {
        sub.iter()
            .copied()
            .filter(|p| !self.arrows.iter().any(|(a, b)| b == p && sub.contains(a)))
            .collect()
    }

    /// Positions with no outgoing arrow within the subset.
    pub fn socles_of(&self, sub: &BTreeSet<usize>) -> BTreeSet<usize> {
        sub.iter()
            .copied()
            .filter(|p| !self.arrows.iter().any(|(a, b)| a == p && sub.contains(b)))
            .collect()
    }

    pub fn tops(&self) -> BTreeSet<usize> {
        self.tops_of(&self.full())
    }

    pub fn socles(&self) -> BTreeSet<usize> {
        self.socles_of(&self.full())
    }

    /// Is the position set closed under arrow targets?
    pub fn is_submodule(&self, sub: &BTreeSet<usize>) -> bool {
        self.arrows
            .iter()
            .all(|(a, b)| !sub.contains(a) || sub.contains(b))
    }

    /// Remove one simple from the top of a submodule.
    pub fn remove_top(
        &self,
        sub: &BTreeSet<usize>,
        p: usize,
    ) -> Result<BTreeSet<usize>, ModuleError> {
        if !sub.contains(&p) || !self.tops_of(sub).contains(&p) {
            return Err(ModuleError::NotATop { position: p });
        }
        let mut out = sub.clone();
        out.remove(&p);
        debug_assert!(self.is_submodule(&out));
        Ok(out)
    }

    /// All canonical submodules (arrow-closed subsets), smallest first.
    pub fn submodules(&self) -> Vec<BTreeSet<usize>> {
        let n = self.n_positions();
        let mut out = Vec::new();
        // Grow downward from the full module by repeated top removal is
        // equivalent to enumerating closed subsets; enumerate directly for
        // the oracle role.
        let positions: Vec<usize> = (0..n).collect();
        let mut subset = BTreeSet::new();
        fn recurse(
            m: &LoopModule,
            positions: &[usize],
            idx: usize,
            subset: &mut BTreeSet<usize>,
            out: &mut Vec<BTreeSet<usize>>,
        ) {
            if idx == positions.len() {
                if m.is_submodule(subset) {
                    out.push(subset.clone());
                }
                return;
            }
            recurse(m, positions, idx + 1, subset, out);
            subset.insert(positions[idx]);
            recurse(m, positions, idx + 1, subset, out);
            subset.remove(&positions[idx]);
        }
        recurse(self, &positions, 0, &mut subset, &mut out);
        out.sort_by_key(|s| (s.len(), s.iter().copied().collect::<Vec<_>>()));
        out
    }

    /// The canonical submodule lattice with Hasse edges between submodules
    /// differing by one position.
    pub fn submodule_lattice(&self) -> SubmoduleLattice {
        let elements = self.submodules();
        let index: BTreeMap<&BTreeSet<usize>, usize> =
            elements.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut hasse = Vec::new();
        for (i, s) in elements.iter().enumerate() {
            for p in self.tops_of(s) {
                let mut smaller = s.clone();
                smaller.remove(&p);
                if let Some(&j) = index.get(&smaller) {
                    hasse.push((j, i, p));
                }
            }
        }
        let bottom = index[&BTreeSet::new()];
        let top = index[&self.full()];
        SubmoduleLattice { elements, hasse, bottom, top }
    }
}

#[derive(Clone, Debug)]
pub struct SubmoduleLattice {
    pub elements: Vec<BTreeSet<usize>>,
    /// (smaller, larger, removed position): larger covers smaller.
    pub hasse: Vec<(usize, usize, usize)>,
    pub bottom: usize,
    pub top: usize,
}

impl SubmoduleLattice {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, s) in self.elements.iter().enumerate() {
            let body: Vec<String> = s.iter().map(|p| p.to_string()).collect();
            out.push_str(&format!("{}: {{{}}}\n", i, body.join(",")));
        }
        for (a, b, p) in &self.hasse {
            out.push_str(&format!("{} < {} (removing {})\n", a, b, p));
        }
        out
    }
}

/// Map a perfect matching of the assembled graph to the canonical submodule
/// spanned by the tiles enclosed in `P ⊖ P_min`.
pub fn matching_to_submodule(
    a: &Assembled,
    lattice_min: &Matching,
    p: &Matching,
) -> BTreeSet<usize> {
    let delta = symmetric_difference(p, lattice_min);
    enclosed_tiles(a, &delta).into_iter().map(|t| t - 1).collect()
}

/// Map a canonical submodule back to a perfect matching: flip the boundary
/// of each connected component of its tiles against `P_min`.
pub fn submodule_to_matching(
    a: &Assembled,
    lattice_min: &Matching,
    sub: &BTreeSet<usize>,
) -> Result<Matching, matchings::MatchError> {
    let tiles: BTreeSet<usize> = sub.iter().map(|p| p + 1).collect();
    // Connected components of the tile set, adjacency through shared edges
    // (consecutive tiles and identified hook edges alike).
    let tile_list: Vec<usize> = tiles.iter().copied().collect();
    let mut seen: BTreeSet<usize> = BTreeSet::new();
    let mut boundary: BTreeSet<usize> = BTreeSet::new();
    for &start in &tile_list {
        if seen.contains(&start) {
            continue;
        }
        let mut comp = BTreeSet::new();
        let mut queue = VecDeque::from([start]);
        seen.insert(start);
        while let Some(t) = queue.pop_front() {
            comp.insert(t);
            for e in a.tile_edges(t) {
                for &(t2, _) in &a.edges[e].slots {
                    if tiles.contains(&t2) && !seen.contains(&t2) {
                        seen.insert(t2);
                        queue.push_back(t2);
                    }
                }
            }
        }
        // Boundary of the component: edges with a slot on a component tile
        // but fewer than two slots inside it.
        let mut edge_slot_count: BTreeMap<usize, usize> = BTreeMap::new();
        for &t in &comp {
            for e in a.tile_edges(t) {
                *edge_slot_count.entry(e).or_insert(0) += 1;
            }
        }
        for (e, c) in edge_slot_count {
            if c == 1 {
                boundary.insert(e);
            }
        }
    }
    let mut out: Matching = lattice_min.clone();
    for e in boundary {
        if out.contains(&e) {
            out.remove(&e);
        } else {
            out.insert(e);
        }
    }
    if !matchings::is_perfect_matching(a, &out) {
        return Err(matchings::MatchError::NotAMatching(format!(
            "component boundary flip of {sub:?} is not a matching"
        )));
    }
    Ok(out)
}

/// Verify that matching_to_submodule is a bijection between the matching
/// lattice and the submodule lattice carrying Hasse edges both ways.
pub fn check_lattice_isomorphism(
    a: &Assembled,
    module: &LoopModule,
    snake_reference: Option<&Assembled>,
) -> Result<(), String> {
    let lat = matchings::enumerate_matchings(a, snake_reference).map_err(|e| e.to_string())?;
    let (pmin, _) = matchings::extremal_matchings(a, snake_reference).map_err(|e| e.to_string())?;
    let sublat = module.submodule_lattice();
    if lat.elements.len() != sublat.elements.len() {
        return Err(format!(
            "matching count {} != submodule count {}",
            lat.elements.len(),
            sublat.elements.len()
        ));
    }
    let mut image: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    for (i, p) in lat.elements.iter().enumerate() {
        let sub = matching_to_submodule(a, &pmin, p);
        if !module.is_submodule(&sub) {
            return Err(format!("image of matching {i} is not arrow-closed: {sub:?}"));
        }
        if !seen.insert(sub.clone()) {
            return Err(format!("matching_to_submodule is not injective at {i}"));
        }
        let back = submodule_to_matching(a, &pmin, &sub).map_err(|e| e.to_string())?;
        if back != *p {
            return Err(format!("round trip failed for matching {i}"));
        }
        image.insert(i, sub);
    }
    // Hasse edges map to Hasse edges both ways: matchings joined by a flip
    // must have submodules differing by exactly one position, and vice versa.
    let sub_pairs: BTreeSet<(BTreeSet<usize>, BTreeSet<usize>)> = sublat
        .hasse
        .iter()
        .map(|(i, j, _)| (sublat.elements[*i].clone(), sublat.elements[*j].clone()))
        .collect();
    let mut mapped_pairs = BTreeSet::new();
    for (i, j, _) in &lat.hasse {
        let (a_, b_) = (&image[i], &image[j]);
        let (small, large) = if a_.len() < b_.len() { (a_, b_) } else { (b_, a_) };
        if large.len() != small.len() + 1 || !small.is_subset(large) {
            return Err(format!("flip edge {i}-{j} does not map to a covering pair"));
        }
        mapped_pairs.insert((small.clone(), large.clone()));
    }
    if mapped_pairs != sub_pairs {
        return Err(format!(
            "Hasse edge sets differ: {} mapped vs {} in the submodule lattice",
            mapped_pairs.len(),
            sub_pairs.len()
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loopstrings::parse_loopstring;

    fn module(s: &str) -> LoopModule {
        LoopModule::of_loopstring(&parse_loopstring(s).unwrap()).unwrap()
    }

    #[test]
    fn module_of_single_loop_word() {
        // w = 1←2↪3←4←5: arrows 2→1, 2→3, 4→3, 5→4, 5→2 in vertex terms;
        // the hook arrow is 5→2, i.e. position 4 → position 1.
        let m = module("1<2)>3<4<5");
        let expected: BTreeSet<(usize, usize)> =
            [(1, 0), (1, 2), (3, 2), (4, 3), (4, 1)].into_iter().collect();
        assert_eq!(m.arrows, expected);
        assert_eq!(m.tops(), BTreeSet::from([4]));
        assert_eq!(m.socles(), BTreeSet::from([0, 2]));
    }

    #[test]
    fn equivalent_words_same_module_arrows() {
        // the other representation 1←2↩5→4→3 carries the same arrows
        // after translating positions through its vertex labels
        let m1 = module("1<2)>3<4<5");
        let m2 = module("1<2)<5>4>3");
        let as_vertex_pairs = |m: &LoopModule| -> BTreeSet<(u32, u32)> {
            m.arrows
                .iter()
                .map(|(a, b)| (m.word.vertices[*a], m.word.vertices[*b]))
                .collect()
        };
        assert_eq!(as_vertex_pairs(&m1), as_vertex_pairs(&m2));
    }

    #[test]
    fn plain_string_module() {
        let m = module("1<2>3");
        assert_eq!(m.tops(), BTreeSet::from([1]));
        assert_eq!(m.socles(), BTreeSet::from([0, 2]));
        let subs = m.submodules();
        assert_eq!(subs.len(), 5);
        let expected: Vec<BTreeSet<usize>> = vec![
            BTreeSet::new(),
            BTreeSet::from([0]),
            BTreeSet::from([2]),
            BTreeSet::from([0, 2]),
            BTreeSet::from([0, 1, 2]),
        ];
        assert_eq!(subs, expected);
    }

    #[test]
    fn remove_top_paths_reach_same_submodule() {
        // 1→2←3←4: removal sequences (1,4,3), (4,1,3), (4,3,1) coincide.
        // Positions: 0→1, 2→1, 3→2. Removing positions 0, 3, 2 in any of
        // those orders leaves {1}.
        let m = module("1>2<3<4");
        let full = m.full();
        for order in [[0usize, 3, 2], [3, 0, 2], [3, 2, 0]] {
            let mut s = full.clone();
            for p in order {
                s = m.remove_top(&s, p).unwrap();
            }
            assert_eq!(s, BTreeSet::from([1]));
        }
        // removing a socle fails
        assert!(matches!(
            m.remove_top(&full, 1),
            Err(ModuleError::NotATop { position: 1 })
        ));
    }

    #[test]
    fn single_vertex_module() {
        let m = module("7");
        assert_eq!(m.submodules().len(), 2);
    }

    #[test]
    fn loop_module_submodule_count() {
        // |SM| of w = 1←2↪3←4←5 computed by closed-subset enumeration.
        let m = module("1<2)>3<4<5");
        assert_eq!(m.submodules().len(), 9);
    }
}
