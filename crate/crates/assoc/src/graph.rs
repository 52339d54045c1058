//! The flip graph of colored triangulations and its face structure.
//!
//! Faces come from a rotation system: the colors are ordered O, B, G around
//! vertices of one bipartition class and reversed around the other, so every
//! face alternates between two colors.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use crate::triangulation::{color_permutations, colored_triangulations, triangulations, Chord, Color, ColoredTriangulation, COLORS};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Face {
    /// The two colors it alternates between.
    pub colors: [Color; 2],
    /// Vertex indices in walk order.
    pub cycle: Vec<usize>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct FlipGraph {
    pub vertices: Vec<ColoredTriangulation>,
    index: HashMap<ColoredTriangulation, usize>,
    /// `adj[v][c]` is the neighbor across the flip of color c.
    pub adj: Vec<[usize; 3]>,
    /// Bipartition class, `None` if the graph is not bipartite.
    pub side: Option<Vec<bool>>,
    pub faces: Vec<Face>,
    pub reference: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    pub uncolored: usize,
    pub vertices: usize,
    pub edges: usize,
    pub regular: bool,
    pub connected: bool,
    pub bipartite: bool,
    pub decagons: usize,
    pub tetragons: usize,
    pub other_faces: usize,
    pub euler: i64,
    pub genus: i64,
    pub equilateral: usize,
    /// Vertices all of whose faces are decagons.
    pub all_decagon_vertices: usize,
    pub all_decagon_are_equilateral: bool,
    /// Vertices on two decagons and one tetragon.
    pub mixed_vertices: usize,
    pub quotient_vertices: usize,
    pub free_action: bool,
    pub color_blind_vertices: usize,
    pub color_blind_edges: usize,
    pub color_blind_degrees: Vec<usize>,
}

impl FlipGraph {
    pub fn enumerate() -> FlipGraph {
        let vertices = colored_triangulations();
        let index: HashMap<ColoredTriangulation, usize> =
            vertices.iter().enumerate().map(|(i, t)| (*t, i)).collect();
        let adj = vertices.iter().map(|t| COLORS.map(|c| index[&t.flip(c)])).collect();
        let reference = index[&ColoredTriangulation::reference()];
        let mut g = FlipGraph { vertices, index, adj, side: None, faces: Vec::new(), reference };
        g.side = g.bipartition();
        if g.side.is_some() {
            g.faces = g.trace_faces();
        }
        g
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, t: &ColoredTriangulation) -> Option<usize> {
        self.index.get(t).copied()
    }

    /// Undirected edges `(u, w, color)` with `u < w`.
    pub fn edges(&self) -> Vec<(usize, usize, Color)> {
        let mut out = Vec::new();
        for (u, nb) in self.adj.iter().enumerate() {
            for c in COLORS {
                let w = nb[c.index()];
                if u < w {
                    out.push((u, w, c));
                }
            }
        }
        out
    }

    fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side = vec![None; self.len()];
        side[self.reference] = Some(false);
        let mut queue = VecDeque::from([self.reference]);
        while let Some(v) = queue.pop_front() {
            let s = side[v].expect("visited");
            for &w in &self.adj[v] {
                match side[w] {
                    None => {
                        side[w] = Some(!s);
                        queue.push_back(w);
                    }
                    Some(t) if t == s => return None,
                    Some(_) => {}
                }
            }
        }
        side.into_iter().collect()
    }

    /// Color following `c` in the rotation at `v`.
    fn next_color(&self, v: usize, c: Color) -> Color {
        let side = self.side.as_ref().expect("bipartite");
        let step = if side[v] { 2 } else { 1 };
        COLORS[(c.index() + step) % 3]
    }

    /// Closed walks: leave `v` by color c, arrive at w, leave w by the color
    /// following c in w's rotation.
    fn trace_faces(&self) -> Vec<Face> {
        let mut seen = BTreeSet::new();
        let mut faces = Vec::new();
        for v in 0..self.len() {
            for c in COLORS {
                if seen.contains(&(v, c)) {
                    continue;
                }
                let mut cycle = Vec::new();
                let mut used = BTreeSet::new();
                let (mut x, mut d) = (v, c);
                while seen.insert((x, d)) {
                    cycle.push(x);
                    used.insert(d);
                    let y = self.adj[x][d.index()];
                    d = self.next_color(y, d);
                    x = y;
                }
                let colors: Vec<Color> = used.into_iter().collect();
                let colors = if colors.len() == 2 { [colors[0], colors[1]] } else { [colors[0], colors[0]] };
                faces.push(Face { colors, cycle });
            }
        }
        faces
    }

    /// Face lengths around each vertex.
    pub fn vertex_face_lengths(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.len()];
        for f in &self.faces {
            for &v in &f.cycle {
                out[v].push(f.len());
            }
        }
        out
    }

    fn connected(&self) -> bool {
        let mut seen = vec![false; self.len()];
        let mut stack = vec![self.reference];
        seen[self.reference] = true;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Number of orbits of the recoloring action.
    fn recolor_orbits(&self) -> usize {
        let perms = color_permutations();
        let reps: BTreeSet<ColoredTriangulation> = self
            .vertices
            .iter()
            .map(|t| perms.iter().map(|p| t.recolor(*p)).min().expect("six permutations"))
            .collect();
        reps.len()
    }

    pub fn census(&self) -> Census {
        let edges = self.edges().len();
        let regular = self.adj.iter().enumerate().all(|(v, nb)| {
            let distinct: BTreeSet<usize> = nb.iter().copied().collect();
            distinct.len() == 3 && !distinct.contains(&v)
        });
        let count = |n: usize| self.faces.iter().filter(|f| f.len() == n).count();
        let (decagons, tetragons) = (count(10), count(4));
        let other_faces = self.faces.len() - decagons - tetragons;
        let euler = self.len() as i64 - edges as i64 + self.faces.len() as i64;
        let lengths = self.vertex_face_lengths();
        let all_dec: Vec<usize> = (0..self.len())
            .filter(|&v| lengths[v].len() == 3 && lengths[v].iter().all(|&l| l == 10))
            .collect();
        let mixed = lengths
            .iter()
            .filter(|ls| {
                let mut s = (*ls).clone();
                s.sort();
                s == vec![4, 10, 10]
            })
            .count();
        let equilateral = self.vertices.iter().filter(|t| t.is_equilateral()).count();
        // S3 acts by recoloring
        let mut orbits: BTreeMap<[Chord; 3], usize> = BTreeMap::new();
        for t in &self.vertices {
            *orbits.entry(t.uncolored()).or_default() += 1;
        }
        let free_action = orbits.values().all(|&n| n == 6);
        let blind_edges: BTreeSet<([Chord; 3], [Chord; 3])> = self
            .edges()
            .into_iter()
            .map(|(u, w, _)| {
                let (a, b) = (self.vertices[u].uncolored(), self.vertices[w].uncolored());
                if a < b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        let mut degree: BTreeMap<[Chord; 3], usize> = orbits.keys().map(|k| (*k, 0)).collect();
        for (a, b) in &blind_edges {
            *degree.get_mut(a).expect("vertex") += 1;
            *degree.get_mut(b).expect("vertex") += 1;
        }
        let mut color_blind_degrees: Vec<usize> = degree.into_values().collect();
        color_blind_degrees.sort();
        Census {
            uncolored: triangulations().len(),
            vertices: self.len(),
            edges,
            regular,
            connected: self.connected(),
            bipartite: self.side.is_some(),
            decagons,
            tetragons,
            other_faces,
            euler,
            genus: (2 - euler) / 2,
            equilateral,
            all_decagon_vertices: all_dec.len(),
            all_decagon_are_equilateral: all_dec.iter().all(|&v| self.vertices[v].is_equilateral()),
            mixed_vertices: mixed,
            quotient_vertices: self.recolor_orbits(),
            free_action,
            color_blind_vertices: orbits.len(),
            color_blind_edges: blind_edges.len(),
            color_blind_degrees,
        }
    }
}
