//! Colored triangulations of the labeled hexagon.
//!
//! Hexagon vertices are 1..6 in counterclockwise order. Sides (1,2) and
//! (2,3), (3,4) and (4,5), (5,6) and (6,1) are glued, so the hexagon closes
//! up into a sphere with four punctures: the even corners 2, 4, 6 and the
//! odd corners 1 = 3 = 5 together.

use std::fmt;

use okamoto_cluster::reference::VERTICES;
use okamoto_cluster::Quiver;
use serde::{Deserialize, Serialize};

use crate::AssocError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Color {
    O,
    B,
    G,
}

pub const COLORS: [Color; 3] = [Color::O, Color::B, Color::G];

impl Color {
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        ["O", "B", "G"][self.index()]
    }

    /// Chord vertex of the seed quiver.
    pub fn chord_vertex(self) -> &'static str {
        ["O2", "B2", "G2"][self.index()]
    }

    /// Loop vertex of the seed quiver.
    pub fn loop_vertex(self) -> &'static str {
        ["O1", "B1", "G1"][self.index()]
    }

    /// Even hexagon corner whose puncture the loop of this color encircles.
    pub fn puncture(self) -> u8 {
        [2, 4, 6][self.index()]
    }

    pub fn parse(s: &str) -> Result<Color, AssocError> {
        match s {
            "O" => Ok(Color::O),
            "B" => Ok(Color::B),
            "G" => Ok(Color::G),
            _ => Err(AssocError::Color(s.to_string())),
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Unordered pair of hexagon vertices, stored with `0 < lo < hi <= 6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Chord(pub u8, pub u8);

impl Chord {
    pub fn new(a: u8, b: u8) -> Chord {
        if a < b {
            Chord(a, b)
        } else {
            Chord(b, a)
        }
    }

    pub fn has(self, v: u8) -> bool {
        self.0 == v || self.1 == v
    }

    /// Cyclic distance between the endpoints.
    pub fn span(self) -> u8 {
        let d = self.1 - self.0;
        d.min(6 - d)
    }

    /// Interior diagonal (not a hexagon side).
    pub fn is_diagonal(self) -> bool {
        self.span() >= 2
    }

    pub fn crosses(self, other: Chord) -> bool {
        let (p, q) = (self.0, self.1);
        let (r, s) = (other.0, other.1);
        if p == r || p == s || q == r || q == s {
            return false;
        }
        let inside = |x: u8| p < x && x < q;
        inside(r) != inside(s)
    }

    pub fn rotate(self, k: u8) -> Chord {
        let r = |v: u8| (v - 1 + k) % 6 + 1;
        Chord::new(r(self.0), r(self.1))
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.0, self.1)
    }
}

/// Loop color of a glued hexagon side, `None` for diagonals.
pub fn side_loop(e: Chord) -> Option<Color> {
    match (e.0, e.1) {
        (1, 2) | (2, 3) => Some(Color::O),
        (3, 4) | (4, 5) => Some(Color::B),
        (5, 6) | (1, 6) => Some(Color::G),
        _ => None,
    }
}

/// All nine diagonals in lexicographic order.
pub fn diagonals() -> Vec<Chord> {
    let mut out = Vec::new();
    for a in 1..=6u8 {
        for b in a + 1..=6 {
            let c = Chord(a, b);
            if c.is_diagonal() {
                out.push(c);
            }
        }
    }
    out
}

/// Uncolored triangulations: pairwise noncrossing diagonal triples.
pub fn triangulations() -> Vec<[Chord; 3]> {
    let d = diagonals();
    let mut out = Vec::new();
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            for k in j + 1..d.len() {
                let t = [d[i], d[j], d[k]];
                if !t[0].crosses(t[1]) && !t[0].crosses(t[2]) && !t[1].crosses(t[2]) {
                    out.push(t);
                }
            }
        }
    }
    out
}

/// Triangulation with its chords indexed by color.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ColoredTriangulation {
    pub chords: [Chord; 3],
}

/// Side of a triangle: a colored chord or a glued hexagon side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeLabel {
    Loop(Color),
    Chord(Color),
}

impl EdgeLabel {
    /// Index in the seed vertex order O1, B1, G1, O2, B2, G2.
    pub fn vertex(self) -> usize {
        match self {
            EdgeLabel::Loop(c) => c.index(),
            EdgeLabel::Chord(c) => 3 + c.index(),
        }
    }

    pub fn name(self) -> &'static str {
        VERTICES[self.vertex()]
    }

    pub fn is_loop(self) -> bool {
        matches!(self, EdgeLabel::Loop(_))
    }
}

impl ColoredTriangulation {
    pub fn new(chords: [Chord; 3]) -> Result<ColoredTriangulation, AssocError> {
        for (i, c) in chords.iter().enumerate() {
            if !c.is_diagonal() {
                return Err(AssocError::Triangulation(format!("{c} is not a diagonal")));
            }
            for d in &chords[i + 1..] {
                if c == d || c.crosses(*d) {
                    return Err(AssocError::Triangulation(format!("{c} and {d} clash")));
                }
            }
        }
        Ok(ColoredTriangulation { chords })
    }

    /// Chords 13, 35, 51 colored O, B, G.
    pub fn reference() -> ColoredTriangulation {
        ColoredTriangulation { chords: [Chord(1, 3), Chord(3, 5), Chord(1, 5)] }
    }

    pub fn chord(&self, c: Color) -> Chord {
        self.chords[c.index()]
    }

    pub fn color_of(&self, e: Chord) -> Option<Color> {
        COLORS.into_iter().find(|c| self.chord(*c) == e)
    }

    pub fn label(&self, e: Chord) -> Option<EdgeLabel> {
        side_loop(e).map(EdgeLabel::Loop).or_else(|| self.color_of(e).map(EdgeLabel::Chord))
    }

    /// Chord set sorted, forgetting colors.
    pub fn uncolored(&self) -> [Chord; 3] {
        let mut c = self.chords;
        c.sort();
        c
    }

    /// The four triangles, each as increasing (hence counterclockwise)
    /// vertex triples.
    pub fn triangles(&self) -> Vec<[u8; 3]> {
        let edge = |a: u8, b: u8| {
            let e = Chord::new(a, b);
            !e.is_diagonal() || self.chords.contains(&e)
        };
        let mut out = Vec::new();
        for a in 1..=6u8 {
            for b in a + 1..=6 {
                for c in b + 1..=6 {
                    if edge(a, b) && edge(b, c) && edge(a, c) {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }

    /// Replace the chord of color `c` by the other diagonal of its
    /// quadrilateral; the color moves to the new chord.
    pub fn flip(&self, c: Color) -> ColoredTriangulation {
        let e = self.chord(c);
        let apexes: Vec<u8> = self
            .triangles()
            .into_iter()
            .filter(|t| t.contains(&e.0) && t.contains(&e.1))
            .map(|t| *t.iter().find(|v| !e.has(**v)).expect("triangle apex"))
            .collect();
        debug_assert_eq!(apexes.len(), 2);
        let mut chords = self.chords;
        chords[c.index()] = Chord::new(apexes[0], apexes[1]);
        ColoredTriangulation { chords }
    }

    pub fn rotate(&self, k: u8) -> ColoredTriangulation {
        ColoredTriangulation { chords: self.chords.map(|c| c.rotate(k)) }
    }

    /// Apply a color permutation: the chord of color c gets color `perm[c]`.
    pub fn recolor(&self, perm: [Color; 3]) -> ColoredTriangulation {
        let mut chords = self.chords;
        for c in COLORS {
            chords[perm[c.index()].index()] = self.chord(c);
        }
        ColoredTriangulation { chords }
    }

    /// All three chords have span two and bound a central triangle.
    pub fn is_equilateral(&self) -> bool {
        let u = self.uncolored();
        u == [Chord(1, 3), Chord(1, 5), Chord(3, 5)] || u == [Chord(2, 4), Chord(2, 6), Chord(4, 6)]
    }

    /// Central triangle has its corners at the odd vertices.
    pub fn is_upward(&self) -> bool {
        self.uncolored() == [Chord(1, 3), Chord(1, 5), Chord(3, 5)]
    }

    /// Chord-only quiver: every triangle contributes arrows from each chord
    /// side to the chord side preceding it counterclockwise. Loop vertices
    /// stay isolated.
    pub fn quiver(&self) -> Quiver {
        self.quiver_with(false)
    }

    /// Quiver with the glued sides as loop vertices.
    pub fn extended_quiver(&self) -> Quiver {
        self.quiver_with(true)
    }

    fn quiver_with(&self, loops: bool) -> Quiver {
        let mut eps = vec![vec![0i32; 6]; 6];
        for [a, b, c] in self.triangles() {
            let sides = [Chord::new(a, b), Chord::new(b, c), Chord::new(c, a)];
            for i in 0..3 {
                let s = self.label(sides[i]).expect("triangle side");
                let p = self.label(sides[(i + 2) % 3]).expect("triangle side");
                if s == p || (!loops && (s.is_loop() || p.is_loop())) {
                    continue;
                }
                eps[s.vertex()][p.vertex()] += 1;
                eps[p.vertex()][s.vertex()] -= 1;
            }
        }
        Quiver::new(VERTICES.iter().map(|s| s.to_string()).collect(), eps).expect("skew quiver")
    }
}

impl fmt::Display for ColoredTriangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O{} B{} G{}", self.chords[0], self.chords[1], self.chords[2])
    }
}

/// All six color permutations.
pub fn color_permutations() -> Vec<[Color; 3]> {
    let mut out = Vec::new();
    for a in COLORS {
        for b in COLORS {
            for c in COLORS {
                if a != b && b != c && a != c {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// 84 colored triangulations in sorted order.
pub fn colored_triangulations() -> Vec<ColoredTriangulation> {
    let mut out: Vec<ColoredTriangulation> = triangulations()
        .into_iter()
        .flat_map(|t| {
            color_permutations()
                .into_iter()
                .map(move |p| ColoredTriangulation { chords: [t[p[0].index()], t[p[1].index()], t[p[2].index()]] })
        })
        .collect();
    out.sort();
    out
}
