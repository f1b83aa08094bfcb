//! The word calculus for strings with hooks.
//!
//! A loopstring is a word `a_0 u_1 a_1 ... u_n a_n` over the alphabet
//! {direct, inverse, direct loop, inverse loop} with quiver-vertex labels on
//! the `a_i`. At most two letters are loops, and each loop must sit next to a
//! run of plain arrows of the opposite direction reaching one end of the word
//! (its hook). Text form uses `>` `<` `)>` `)<` for the four letters.

use std::collections::BTreeSet;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    Direct,
    Inverse,
}

impl Direction {
    pub fn flip(self) -> Direction {
        match self {
            Direction::Direct => Direction::Inverse,
            Direction::Inverse => Direction::Direct,
        }
    }
}

/// Ordering is the canonical-representative order: direct < inverse <
/// direct loop < inverse loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Direct,
    Inverse,
    DirectLoop,
    InverseLoop,
}

impl Letter {
    pub fn is_loop(self) -> bool {
        matches!(self, Letter::DirectLoop | Letter::InverseLoop)
    }

    /// The arrow direction of the letter, forgetting the loop decoration.
    pub fn direction(self) -> Direction {
        match self {
            Letter::Direct | Letter::DirectLoop => Direction::Direct,
            Letter::Inverse | Letter::InverseLoop => Direction::Inverse,
        }
    }

    pub fn plain(self) -> Letter {
        match self.direction() {
            Direction::Direct => Letter::Direct,
            Direction::Inverse => Letter::Inverse,
        }
    }

    /// Reverse the arrow direction, keeping the loop decoration.
    pub fn flip(self) -> Letter {
        match self {
            Letter::Direct => Letter::Inverse,
            Letter::Inverse => Letter::Direct,
            Letter::DirectLoop => Letter::InverseLoop,
            Letter::InverseLoop => Letter::DirectLoop,
        }
    }

    pub fn from_direction(d: Direction) -> Letter {
        match d {
            Direction::Direct => Letter::Direct,
            Direction::Inverse => Letter::Inverse,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Letter::Direct => ">",
            Letter::Inverse => "<",
            Letter::DirectLoop => ")>",
            Letter::InverseLoop => ")<",
        };
        write!(f, "{}", s)
    }
}

/// Which end of the word a loop letter hooks to.
///
/// A `Start` hook ties the first tile to an interior one; reading-wise the
/// letters before the loop form the opposite-direction run. An `End` hook is
/// the mirror case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HookEnd {
    Start,
    End,
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Loopstring {
    /// Vertex labels a_0..a_n.
    pub vertices: Vec<u32>,
    /// Letters u_1..u_n, so `letters.len() + 1 == vertices.len()`.
    pub letters: Vec<Letter>,
}

impl fmt::Debug for Loopstring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Loopstring({})", self)
    }
}

impl fmt::Display for Loopstring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.vertices[0])?;
        for (i, l) in self.letters.iter().enumerate() {
            write!(f, "{}{}", l, self.vertices[i + 1])?;
        }
        Ok(())
    }
}

/// Rule of Def. "loopstring" that a word breaks, with the paper's phrasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    TooManyLoops { count: usize },
    LoopIsFirstLetter,
    LoopIsLastLetter,
    /// Neither the preceding nor the following arrows form the required
    /// run of opposite-direction plain arrows.
    BadHookRun { position: usize, detail: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TooManyLoops { count } => {
                write!(f, "word has {count} loops; a loopstring allows at most two")
            }
            Violation::LoopIsFirstLetter => write!(f, "a loop cannot be the first letter"),
            Violation::LoopIsLastLetter => write!(f, "a loop cannot be the last letter"),
            Violation::BadHookRun { position, detail } => {
                write!(f, "loop at letter {position}: {detail}")
            }
        }
    }
}

impl Loopstring {
    pub fn new(vertices: Vec<u32>, letters: Vec<Letter>) -> Self {
        assert_eq!(
            vertices.len(),
            letters.len() + 1,
            "a word with n letters has n+1 vertices"
        );
        Loopstring { vertices, letters }
    }

    /// Abstract word: vertices auto-labeled 1..n+1.
    pub fn abstract_word(letters: Vec<Letter>) -> Self {
        let vertices = (1..=letters.len() as u32 + 1).collect();
        Loopstring { vertices, letters }
    }

    /// A single vertex, no letters.
    pub fn single(vertex: u32) -> Self {
        Loopstring { vertices: vec![vertex], letters: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// 1-based letter positions of the loop letters.
    pub fn loop_positions(&self) -> Vec<usize> {
        self.letters
            .iter()
            .enumerate()
            .filter(|(_, l)| l.is_loop())
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Can the loop at 1-based letter position `p` be read with the given
    /// hook end? `Start` requires a nonempty run of plain opposite-direction
    /// arrows before it; `End` after it.
    pub fn reading_valid(&self, p: usize, end: HookEnd) -> bool {
        let lp = self.letters[p - 1];
        debug_assert!(lp.is_loop());
        let want = lp.direction().flip();
        let run: &[Letter] = match end {
            HookEnd::Start => &self.letters[..p - 1],
            HookEnd::End => &self.letters[p..],
        };
        !run.is_empty() && run.iter().all(|l| !l.is_loop() && l.direction() == want)
    }

    /// The hook readings admitted by each loop letter, in word order.
    /// Words with two loops force (Start, End).
    pub fn hook_readings(&self) -> Vec<(usize, Vec<HookEnd>)> {
        self.loop_positions()
            .into_iter()
            .map(|p| {
                let mut ends = Vec::new();
                if self.reading_valid(p, HookEnd::Start) {
                    ends.push(HookEnd::Start);
                }
                if self.reading_valid(p, HookEnd::End) {
                    ends.push(HookEnd::End);
                }
                (p, ends)
            })
            .collect()
    }

    /// A concrete assignment of one reading per loop. Two-loop words are
    /// forced to (Start, End); ambiguous single loops default to `End`
    /// (the paper's primary worked example uses that reading).
    pub fn default_hooks(&self) -> Result<Vec<(usize, HookEnd)>, String> {
        let readings = self.hook_readings();
        match readings.len() {
            0 => Ok(Vec::new()),
            1 => {
                let (p, ends) = &readings[0];
                if ends.is_empty() {
                    Err(format!("loop at letter {p} admits no hook reading"))
                } else if ends.contains(&HookEnd::End) {
                    Ok(vec![(*p, HookEnd::End)])
                } else {
                    Ok(vec![(*p, HookEnd::Start)])
                }
            }
            2 => {
                let (p1, e1) = &readings[0];
                let (p2, e2) = &readings[1];
                if !e1.contains(&HookEnd::Start) {
                    return Err(format!("first loop at letter {p1} admits no start reading"));
                }
                if !e2.contains(&HookEnd::End) {
                    return Err(format!("second loop at letter {p2} admits no end reading"));
                }
                Ok(vec![(*p1, HookEnd::Start), (*p2, HookEnd::End)])
            }
            n => Err(format!("word has {n} loops")),
        }
    }

    /// All admissible hook assignments (two for an ambiguous single loop).
    pub fn all_hook_assignments(&self) -> Vec<Vec<(usize, HookEnd)>> {
        let readings = self.hook_readings();
        match readings.len() {
            0 => vec![Vec::new()],
            1 => {
                let (p, ends) = &readings[0];
                ends.iter().map(|e| vec![(*p, *e)]).collect()
            }
            2 => {
                let (p1, e1) = &readings[0];
                let (p2, e2) = &readings[1];
                if e1.contains(&HookEnd::Start) && e2.contains(&HookEnd::End) {
                    vec![vec![(*p1, HookEnd::Start), (*p2, HookEnd::End)]]
                } else {
                    Vec::new()
                }
            }
            _ => Vec::new(),
        }
    }

    /// Check the rules of Def. "loopstring" and report every violation.
    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        let mut violations = Vec::new();
        let loops = self.loop_positions();
        if loops.len() > 2 {
            violations.push(Violation::TooManyLoops { count: loops.len() });
        }
        for &p in &loops {
            if p == 1 {
                violations.push(Violation::LoopIsFirstLetter);
                continue;
            }
            if p == self.letters.len() {
                violations.push(Violation::LoopIsLastLetter);
                continue;
            }
            if !self.reading_valid(p, HookEnd::Start) && !self.reading_valid(p, HookEnd::End) {
                let lp = self.letters[p - 1];
                let want = lp.direction().flip();
                let name = |d: Direction| match d {
                    Direction::Direct => "direct",
                    Direction::Inverse => "inverse",
                };
                violations.push(Violation::BadHookRun {
                    position: p,
                    detail: format!(
                        "neither the preceding nor the following arrows are all {} arrows",
                        name(want)
                    ),
                });
            }
        }
        if violations.is_empty() {
            Ok(())
        } else {
            Err(violations)
        }
    }

    /// True when every loop has at least one admissible reading and there are
    /// at most two loops (boundary loop letters allowed). Resolution outputs
    /// occasionally place a loop first, e.g. a notched arc with a single
    /// plain crossing, so constructions accept this weaker condition.
    pub fn hooks_readable(&self) -> bool {
        let readings = self.hook_readings();
        if readings.len() > 2 {
            return false;
        }
        match readings.len() {
            0 => true,
            1 => !readings[0].1.is_empty(),
            _ => {
                readings[0].1.contains(&HookEnd::Start) && readings[1].1.contains(&HookEnd::End)
            }
        }
    }

    /// Replace each loop letter by its plain arrow.
    pub fn plain_string(&self) -> Loopstring {
        Loopstring {
            vertices: self.vertices.clone(),
            letters: self.letters.iter().map(|l| l.plain()).collect(),
        }
    }

    /// Reverse reading direction: vertices reversed, letters reversed and
    /// direction-flipped.
    pub fn inverse(&self) -> Loopstring {
        Loopstring {
            vertices: self.vertices.iter().rev().copied().collect(),
            letters: self.letters.iter().rev().map(|l| l.flip()).collect(),
        }
    }

    /// The left equivalence move at a start-read loop: the vertex block
    /// before the loop is reversed, its letters reversed and flipped, and the
    /// loop letter flipped. Everything after the loop is unchanged.
    pub fn left_move(&self) -> Option<Loopstring> {
        let loops = self.loop_positions();
        let &p = loops.first()?;
        if !self.reading_valid(p, HookEnd::Start) {
            return None;
        }
        let mut vertices = self.vertices.clone();
        vertices[..p].reverse();
        let mut letters = self.letters.clone();
        letters[..p - 1].reverse();
        for l in letters[..p - 1].iter_mut() {
            *l = l.flip();
        }
        letters[p - 1] = letters[p - 1].flip();
        Some(Loopstring { vertices, letters })
    }

    /// The right equivalence move at an end-read loop; mirror of `left_move`.
    pub fn right_move(&self) -> Option<Loopstring> {
        let loops = self.loop_positions();
        let &p = loops.last()?;
        if !self.reading_valid(p, HookEnd::End) {
            return None;
        }
        let mut vertices = self.vertices.clone();
        vertices[p..].reverse();
        let mut letters = self.letters.clone();
        letters[p..].reverse();
        for l in letters[p..].iter_mut() {
            *l = l.flip();
        }
        letters[p - 1] = letters[p - 1].flip();
        Some(Loopstring { vertices, letters })
    }

    /// Closure under the applicable left/right moves; at most four words.
    pub fn equivalence_class(&self) -> BTreeSet<Loopstring> {
        let mut seen = BTreeSet::new();
        let mut stack = vec![self.clone()];
        while let Some(w) = stack.pop() {
            if !seen.insert(w.clone()) {
                continue;
            }
            if let Some(l) = w.left_move() {
                stack.push(l);
            }
            if let Some(r) = w.right_move() {
                stack.push(r);
            }
        }
        seen
    }

    /// Abstract equivalence: do the letter patterns agree up to left/right
    /// moves? Vertex labels are ignored here; class members returned by
    /// `equivalence_class` carry the propagated labels for module work.
    pub fn equivalent(&self, other: &Loopstring) -> bool {
        self.letters == other.letters
            || self
                .equivalence_class()
                .iter()
                .any(|m| m.letters == other.letters)
    }

    /// Lexicographically smallest member of the equivalence class under
    /// (letters, vertices) with direct < inverse < direct loop < inverse loop.
    pub fn canonical(&self) -> Loopstring {
        self.equivalence_class()
            .into_iter()
            .min_by(|a, b| (&a.letters, &a.vertices).cmp(&(&b.letters, &b.vertices)))
            .unwrap()
    }
}

/// Parse the text grammar, e.g. `1<2)>3<4<5`.
pub fn parse_loopstring(s: &str) -> Result<Loopstring, String> {
    let mut vertices = Vec::new();
    let mut letters = Vec::new();
    let mut rest = s.trim();
    loop {
        let digits: String = rest.chars().take_while(|c| c.is_ascii_digit()).collect();
        if digits.is_empty() {
            return Err(format!("expected a vertex label at {rest:?}"));
        }
        vertices.push(digits.parse::<u32>().map_err(|e| e.to_string())?);
        rest = &rest[digits.len()..];
        if rest.is_empty() {
            break;
        }
        let letter = if let Some(r) = rest.strip_prefix(")>") {
            rest = r;
            Letter::DirectLoop
        } else if let Some(r) = rest.strip_prefix(")<") {
            rest = r;
            Letter::InverseLoop
        } else if let Some(r) = rest.strip_prefix('>') {
            rest = r;
            Letter::Direct
        } else if let Some(r) = rest.strip_prefix('<') {
            rest = r;
            Letter::Inverse
        } else {
            return Err(format!("expected a letter at {rest:?}"));
        };
        letters.push(letter);
    }
    Ok(Loopstring::new(vertices, letters))
}

/// Parse a plain arrow pattern like `>><)<>` into an abstract word.
pub fn parse_abstract(s: &str) -> Result<Loopstring, String> {
    let mut letters = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        if let Some(r) = rest.strip_prefix(")>") {
            letters.push(Letter::DirectLoop);
            rest = r;
        } else if let Some(r) = rest.strip_prefix(")<") {
            letters.push(Letter::InverseLoop);
            rest = r;
        } else if let Some(r) = rest.strip_prefix('>') {
            letters.push(Letter::Direct);
            rest = r;
        } else if let Some(r) = rest.strip_prefix('<') {
            letters.push(Letter::Inverse);
            rest = r;
        } else {
            return Err(format!("unexpected character at {rest:?}"));
        }
    }
    Ok(Loopstring::abstract_word(letters))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Loopstring {
        parse_abstract(s).unwrap()
    }

    // The paper's nine classified sequences.
    #[test]
    fn classifier_examples() {
        // (i)..(v) are loopstrings
        assert!(w("<<)>>><)><<<").validate().is_ok());
        assert!(w(">>>)<<>").validate().is_ok());
        assert!(w("<>)<>").validate().is_ok());
        assert!(w(">>>)<>>").validate().is_ok());
        assert!(w("<)>)><<").validate().is_ok());
        // (vi) loop is the first letter
        assert_eq!(
            w(")<<>").validate().unwrap_err(),
            vec![Violation::LoopIsFirstLetter]
        );
        // (vii) the direct loop has a direct arrow on its left and the
        // inverse-arrow option on the right does not run to the end
        assert!(matches!
            (w("<<>)><>").validate().unwrap_err()[0], Violation::BadHookRun { position: 4, .. }));
        // (viii) the loop follows inverse arrows but is not a direct loop
        assert!(matches!(
            w("<)<><").validate().unwrap_err()[0],
            Violation::BadHookRun { position: 2, .. }
        ));
        // (ix) three loops
        assert!(w(">)<)<)><<")
            .validate()
            .unwrap_err()
            .contains(&Violation::TooManyLoops { count: 3 }));
    }

    #[test]
    fn plain_string_examples() {
        let a = parse_loopstring("1<2)>3<4<5").unwrap();
        assert_eq!(a.plain_string(), parse_loopstring("1<2>3<4<5").unwrap());
        let b = parse_loopstring("1<2)<3>4>5").unwrap();
        assert_eq!(b.plain_string(), parse_loopstring("1<2<3>4>5").unwrap());
        let c = parse_loopstring("1>2>3").unwrap();
        assert_eq!(c.plain_string(), c);
    }

    #[test]
    fn equivalence_of_double_loop_words() {
        // w = →→↩→→↩→→→ and w' = ←←↪→→↪←←← are equivalent.
        let a = w(">>)<>>)<>>>");
        let b = w("<<)>>>)><<<");
        assert!(a.equivalent(&b));
        assert!(a.equivalent(&a));
        // tail mismatch
        let c = w(">>)<>>)<>><");
        assert!(!a.equivalent(&c));
    }

    #[test]
    fn right_move_reverses_suffix_block() {
        // 1←2↪3←4←5  ~  1←2↩5→4→3 (vertex block after the loop reversed)
        let a = parse_loopstring("1<2)>3<4<5").unwrap();
        let m = a.right_move().unwrap();
        assert_eq!(m, parse_loopstring("1<2)<5>4>3").unwrap());
        // the move is an involution
        assert_eq!(m.right_move().unwrap(), a);
    }

    #[test]
    fn ambiguous_word_has_two_readings() {
        // (iv): →→→↩→→ reads as a start hook or an end hook
        let v = w(">>>)<>>");
        let readings = v.hook_readings();
        assert_eq!(readings.len(), 1);
        assert_eq!(readings[0].1, vec![HookEnd::Start, HookEnd::End]);
        assert_eq!(v.all_hook_assignments().len(), 2);
    }

    #[test]
    fn equivalence_class_size() {
        // double-loop word: both moves apply independently: 4 words
        assert_eq!(w(">>)<>>)<>>>").equivalence_class().len(), 4);
        // loop-free word: only itself
        assert_eq!(w("><>").equivalence_class().len(), 1);
    }

    #[test]
    fn parse_display_round_trip() {
        for s in ["1<2)>3<4<5", "7<3)<1>8>5>2", "42"] {
            let p = parse_loopstring(s).unwrap();
            assert_eq!(p.to_string(), s);
        }
    }
}
