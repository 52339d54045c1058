//! Fat graphs dual to colored triangulations, their flips and the loop
//! Casimirs.
//!
//! Edges are labeled by the seed vertices O1, B1, G1 (loops, dual to the
//! glued sides) and O2, B2, G2 (dual to the chords); edge `e` owns the
//! half-edges `2e` and `2e + 1`. Each trivalent vertex is a cyclic triple of
//! half-edges in counterclockwise order.

use std::collections::BTreeSet;

use okamoto_algebra::{print, Check, Ring, RF};
use okamoto_cluster::reference::{seed_ring, VERTICES};
use okamoto_cluster::suite::{chart_mismatch, exprs, ZCHANGE};
use okamoto_cluster::{Quiver, Seed};

use crate::triangulation::{Chord, Color, ColoredTriangulation, EdgeLabel, COLORS};
use crate::AssocError;

fn label_of(e: usize) -> EdgeLabel {
    if e < 3 {
        EdgeLabel::Loop(COLORS[e])
    } else {
        EdgeLabel::Chord(COLORS[e - 3])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RibbonGraph {
    /// Counterclockwise successor of each half-edge at its vertex.
    pub rot: [usize; 12],
}

impl RibbonGraph {
    /// Dual of a triangulation: one vertex per triangle, one edge per side
    /// class.
    pub fn dual(t: &ColoredTriangulation) -> RibbonGraph {
        let mut next_half = [0usize; 6];
        let mut rot = [usize::MAX; 12];
        for [a, b, c] in t.triangles() {
            let sides = [Chord::new(a, b), Chord::new(b, c), Chord::new(c, a)];
            let halves = sides.map(|s| {
                let e = t.label(s).expect("triangle side").vertex();
                let h = 2 * e + next_half[e];
                next_half[e] += 1;
                h
            });
            for i in 0..3 {
                rot[halves[i]] = halves[(i + 1) % 3];
            }
        }
        debug_assert!(next_half.iter().all(|&n| n == 2));
        RibbonGraph { rot }
    }

    pub fn label(h: usize) -> EdgeLabel {
        label_of(h / 2)
    }

    /// Vertex cycles, each starting at its smallest half-edge.
    pub fn vertices(&self) -> Vec<[usize; 3]> {
        let mut seen = [false; 12];
        let mut out = Vec::new();
        for h in 0..12 {
            if !seen[h] {
                let c = [h, self.rot[h], self.rot[self.rot[h]]];
                c.iter().for_each(|x| seen[*x] = true);
                out.push(c);
            }
        }
        out
    }

    /// Faces as orbits of `h -> rot(h ^ 1)`.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut seen = [false; 12];
        let mut out = Vec::new();
        for h in 0..12 {
            if seen[h] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut x = h;
            while !seen[x] {
                seen[x] = true;
                orbit.push(x);
                x = self.rot[x ^ 1];
            }
            out.push(orbit);
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        let img: BTreeSet<usize> = self.rot.iter().copied().collect();
        img.len() == 12 && self.rot.iter().all(|&h| h < 12) && (0..12).all(|h| {
            let r = self.rot[h];
            r != h && self.rot[self.rot[r]] == h
        })
    }

    /// Whitehead move on the edge dual to chord `c`: the vertices (h a b)
    /// and (h' c d) become (h b c) and (h' d a).
    pub fn whitehead(&self, c: Color) -> RibbonGraph {
        let h = 2 * EdgeLabel::Chord(c).vertex();
        let hp = h + 1;
        let a = self.rot[h];
        let b = self.rot[a];
        let cc = self.rot[hp];
        let d = self.rot[cc];
        let mut rot = self.rot;
        rot[h] = b;
        rot[b] = cc;
        rot[cc] = h;
        rot[hp] = d;
        rot[d] = a;
        rot[a] = hp;
        RibbonGraph { rot }
    }

    /// Label-level normal form: vertex label cycles up to rotation plus face
    /// label cycles up to rotation, both sorted.
    pub fn shape(&self) -> (Vec<Vec<EdgeLabel>>, Vec<Vec<EdgeLabel>>) {
        let norm = |cyc: Vec<EdgeLabel>| {
            (0..cyc.len())
                .map(|k| cyc[k..].iter().chain(&cyc[..k]).copied().collect::<Vec<_>>())
                .min()
                .unwrap_or_default()
        };
        let mut vs: Vec<Vec<EdgeLabel>> =
            self.vertices().into_iter().map(|v| norm(v.iter().map(|h| Self::label(*h)).collect())).collect();
        let mut fs: Vec<Vec<EdgeLabel>> =
            self.faces().into_iter().map(|f| norm(f.iter().map(|h| Self::label(*h)).collect())).collect();
        vs.sort();
        fs.sort();
        (vs, fs)
    }

    /// Sorted face degrees.
    pub fn face_degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.faces().iter().map(Vec::len).collect();
        d.sort();
        d
    }

    /// Face around the puncture of loop `l`: the one whose only loop edge
    /// is `l`.
    pub fn loop_face(&self, l: Color) -> Option<Vec<usize>> {
        let mut hits = self.faces().into_iter().filter(|f| {
            let loops: BTreeSet<EdgeLabel> =
                f.iter().map(|h| Self::label(*h)).filter(|e| e.is_loop()).collect();
            loops.len() == 1 && loops.contains(&EdgeLabel::Loop(l))
        });
        let f = hits.next()?;
        hits.next().is_none().then_some(f)
    }

    /// Chords crossed by the loop of color `l`, with multiplicity.
    pub fn crossings(&self, l: Color) -> Vec<Color> {
        let mut out: Vec<Color> = self
            .loop_face(l)
            .unwrap_or_default()
            .iter()
            .filter_map(|h| match Self::label(*h) {
                EdgeLabel::Chord(c) => Some(c),
                EdgeLabel::Loop(_) => None,
            })
            .collect();
        out.sort();
        out
    }

    /// Quiver with loop vertices: at every vertex, an arrow from each edge to
    /// the edge preceding it counterclockwise.
    pub fn quiver(&self) -> Quiver {
        let mut eps = vec![vec![0i32; 6]; 6];
        for h in 0..12 {
            let s = Self::label(self.rot[h]).vertex();
            let p = Self::label(h).vertex();
            if s != p {
                eps[s][p] += 1;
                eps[p][s] -= 1;
            }
        }
        Quiver::new(VERTICES.iter().map(|s| s.to_string()).collect(), eps).expect("skew quiver")
    }

    /// Loops glued to themselves at a vertex containing half-edge `h`.
    fn self_glued_at(&self, h: usize) -> Vec<Color> {
        let v = [h, self.rot[h], self.rot[self.rot[h]]];
        COLORS
            .into_iter()
            .filter(|l| {
                let e = EdgeLabel::Loop(*l).vertex();
                v.contains(&(2 * e)) && v.contains(&(2 * e + 1))
            })
            .collect()
    }

    /// Self-glued loops at either end of the edge dual to chord `c`.
    pub fn self_glued_ends(&self, c: Color) -> Vec<Color> {
        let h = 2 * EdgeLabel::Chord(c).vertex();
        let mut out = self.self_glued_at(h);
        out.extend(self.self_glued_at(h + 1));
        out
    }
}

/// Fat graph with its triangulation and the six edge coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonState {
    pub graph: RibbonGraph,
    pub tri: ColoredTriangulation,
    /// Coordinates in the order O1, B1, G1, O2, B2, G2.
    pub coords: Vec<RF>,
}

impl RibbonState {
    pub fn reference(ring: &Ring) -> RibbonState {
        let tri = ColoredTriangulation::reference();
        let coords = VERTICES
            .iter()
            .map(|v| RF::var(ring.require(&format!("Z_{v}")).expect("seed ring")))
            .collect();
        RibbonState { graph: RibbonGraph::dual(&tri), tri, coords }
    }

    pub fn coord(&self, e: EdgeLabel) -> &RF {
        &self.coords[e.vertex()]
    }

    /// Loop variable times the chords its loop crosses.
    pub fn casimir(&self, l: Color) -> RF {
        self.graph
            .crossings(l)
            .into_iter()
            .fold(self.coord(EdgeLabel::Loop(l)).clone(), |acc, c| &acc * self.coord(EdgeLabel::Chord(c)))
    }

    /// Flip the chord-dual edge of color c. Coordinates follow the
    /// X-mutation of the fat-graph quiver; a loop glued to itself at either
    /// end of the dog bone, before or after the move, also picks up the
    /// pre-flip chord coordinate.
    pub fn flip(&self, c: Color) -> RibbonState {
        let k = EdgeLabel::Chord(c).vertex();
        let seed = Seed::x(self.graph.quiver(), self.coords.clone()).expect("six coordinates");
        let mut coords = seed.mutate(k).coords;
        let graph = self.graph.whitehead(c);
        let old = &self.coords[k];
        for l in self.graph.self_glued_ends(c).into_iter().chain(graph.self_glued_ends(c)) {
            let i = EdgeLabel::Loop(l).vertex();
            coords[i] = &coords[i] * old;
        }
        RibbonState { graph, tri: self.tri.flip(c), coords }
    }

    /// Reject loop labels; the only flips are on chord-dual edges.
    pub fn flip_label(&self, label: &str) -> Result<RibbonState, AssocError> {
        match label {
            "O" | "O2" => Ok(self.flip(Color::O)),
            "B" | "B2" => Ok(self.flip(Color::B)),
            "G" | "G2" => Ok(self.flip(Color::G)),
            "O1" | "B1" | "G1" => Err(AssocError::LoopFlip(label.to_string())),
            _ => Err(AssocError::Color(label.to_string())),
        }
    }
}

/// Loop variable of the ochre loop and its crossings after each of the
/// first four steps mu_O, mu_B, mu_G, mu_O.
pub const OCHRE_STEPS: [(&str, &[Color]); 4] = [
    ("Z_O1*Z_O2", &[Color::O]),
    ("Z_O1*Z_O2*(1+Z_O2+Z_O2*Z_B2)/(1+Z_O2)", &[Color::O, Color::B]),
    ("Z_O1*Z_O2*Z_G2*(1+Z_O2+Z_O2*Z_B2)/(1+Z_G2+Z_O2*Z_G2)", &[Color::O, Color::B, Color::G]),
    ("Z_O1*Z_O2*Z_G2*(1+Z_O2+Z_O2*Z_B2)/(1+Z_G2+Z_O2*Z_G2)", &[Color::B, Color::G]),
];

/// Application order of the nine-step word.
pub const W2_COLORS: [Color; 9] =
    [Color::O, Color::B, Color::G, Color::O, Color::B, Color::G, Color::B, Color::G, Color::B];

#[derive(Clone, Debug)]
pub struct InsideOutReport {
    pub trajectory: Vec<RibbonState>,
    pub checks: Vec<Check>,
}

fn casimirs_drift(ring: &Ring, s: &RibbonState, init: &RibbonState) -> Option<String> {
    COLORS.into_iter().find_map(|l| {
        let (now, then) = (s.casimir(l), init.casimir(l));
        (now != then).then(|| {
            format!("{l} loop: {} instead of {}", print(&now, ring), print(&then, ring))
        })
    })
}

/// Run the nine-step word on the reference fat graph.
pub fn inside_out() -> InsideOutReport {
    let ring = seed_ring("Z");
    let init = RibbonState::reference(&ring);
    let mut trajectory = vec![init.clone()];
    for c in W2_COLORS {
        let next = trajectory.last().expect("nonempty").flip(c);
        trajectory.push(next);
    }
    let mut checks = Vec::new();

    let initial: Vec<RF> = COLORS.iter().map(|l| init.casimir(*l)).collect();
    let loops: Vec<RF> = COLORS.iter().map(|l| init.coord(EdgeLabel::Loop(*l)).clone()).collect();
    checks.push(Check::new(
        "ribbon-initial-casimirs",
        "on the reference graph each loop crosses no chord",
        initial == loops,
    ));
    checks.push(Check::new(
        "ribbon-valid",
        "every graph along the word is a trivalent ribbon graph with four faces",
        trajectory.iter().all(|s| s.graph.is_valid() && s.graph.faces().len() == 4),
    ));
    checks.push(Check::new(
        "ribbon-dual",
        "the Whitehead move agrees with the dual of the flipped triangulation",
        trajectory.iter().all(|s| s.graph.shape() == RibbonGraph::dual(&s.tri).shape()),
    ));
    checks.push(Check::new(
        "ribbon-chord-quiver",
        "the chord part of the fat-graph quiver is the triangle quiver",
        trajectory.iter().all(|s| {
            let q = s.graph.quiver();
            let t = s.tri.quiver();
            (3..6).all(|i| (3..6).all(|j| q.eps(i, j) == t.eps(i, j)))
        }),
    ));

    let table = OCHRE_STEPS.iter().enumerate().find_map(|(k, (loop_var, crossed))| {
        let s = &trajectory[k + 1];
        let want = exprs(&ring, &[loop_var])[0].clone();
        let got = s.coord(EdgeLabel::Loop(Color::O));
        if *got != want {
            return Some(format!("step {}: loop variable {}", k + 1, print(got, &ring)));
        }
        if s.graph.crossings(Color::O) != *crossed {
            return Some(format!("step {}: crossings {:?}", k + 1, s.graph.crossings(Color::O)));
        }
        None
    });
    checks.push(Check::from_witness(
        "ochre-table",
        "ochre loop variable and crossed chords over the first four steps",
        table,
    ));

    let drift = trajectory.iter().enumerate().find_map(|(k, s)| {
        casimirs_drift(&ring, s, &init).map(|w| format!("step {k}: {w}"))
    });
    checks.push(Check::from_witness("casimir-invariance", "all three loop Casimirs at every step", drift));

    let last = trajectory.last().expect("nonempty");
    let chart: Vec<RF> = (3..6).map(|i| last.coords[i].clone()).collect();
    checks.push(Check::from_witness(
        "ribbon-zchange",
        "chord coordinates after the word are the changed chart",
        chart_mismatch(&ring, &chart, &exprs(&ring, &ZCHANGE)),
    ));

    let first = &trajectory[0];
    let reversed = last.tri == first.tri.rotate(3) && first.tri.is_upward() && !last.tri.is_upward();
    checks.push(Check::new(
        "inside-out-rotation",
        "the final triangulation is the half-turn of the reference with colors kept",
        reversed,
    ));
    // corners of the central triangle: the odd puncture before, the three
    // even punctures after
    checks.push(Check::new(
        "inside-out-faces",
        "the three loop faces grow from monogons to triangles and the odd puncture shrinks from nine sides to three",
        first.graph.face_degrees() == vec![1, 1, 1, 9]
            && last.graph.face_degrees() == vec![3, 3, 3, 3]
            && COLORS.iter().all(|l| {
                first.graph.loop_face(*l).map(|f| f.len()) == Some(1)
                    && last.graph.loop_face(*l).map(|f| f.len()) == Some(3)
            }),
    ));
    checks.push(Check::new(
        "inside-out-shape",
        "the reference star has a self-glued loop at each tip; at the end the loops join the tips in a cycle around the center",
        is_star(&first.graph) && is_reversed_star(&last.graph),
    ));
    InsideOutReport { trajectory, checks }
}

/// Vertices made only of chord-dual half-edges.
fn centers(g: &RibbonGraph) -> Vec<[usize; 3]> {
    g.vertices().into_iter().filter(|v| v.iter().all(|h| !RibbonGraph::label(*h).is_loop())).collect()
}

/// One all-chord center; every other vertex holds one chord and a loop
/// glued to itself.
pub fn is_star(g: &RibbonGraph) -> bool {
    let tips = g.vertices().into_iter().filter(|v| v.iter().any(|h| RibbonGraph::label(*h).is_loop()));
    centers(g).len() == 1
        && tips.into_iter().all(|v| {
            let loops: Vec<EdgeLabel> =
                v.iter().map(|h| RibbonGraph::label(*h)).filter(|e| e.is_loop()).collect();
            loops.len() == 2 && loops[0] == loops[1]
        })
}

/// One all-chord center; every other vertex holds one chord and two
/// distinct loops, so the loops close a cycle through the tips.
pub fn is_reversed_star(g: &RibbonGraph) -> bool {
    let tips: Vec<[usize; 3]> =
        g.vertices().into_iter().filter(|v| v.iter().any(|h| RibbonGraph::label(*h).is_loop())).collect();
    centers(g).len() == 1
        && tips.len() == 3
        && tips.iter().all(|v| {
            let loops: BTreeSet<EdgeLabel> =
                v.iter().map(|h| RibbonGraph::label(*h)).filter(|e| e.is_loop()).collect();
            loops.len() == 2
        })
}

/// Flip sequences of bounded length from the reference; every Casimir is
/// compared to its initial value after each step.
pub fn casimir_drift_along(colors: &[Color]) -> Option<String> {
    let ring = seed_ring("Z");
    let init = RibbonState::reference(&ring);
    let mut s = init.clone();
    for (k, c) in colors.iter().enumerate() {
        s = s.flip(*c);
        if let Some(w) = casimirs_drift(&ring, &s, &init) {
            return Some(format!("step {}: {w}", k + 1));
        }
    }
    None
}
