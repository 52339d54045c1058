//! Graphviz and JSON views of the flip graph.

use std::fmt::Write;

use serde::Serialize;

use crate::graph::{Census, FlipGraph};
use crate::triangulation::Color;

#[derive(Serialize)]
struct VertexJson {
    id: usize,
    chords: [String; 3],
    equilateral: bool,
}

#[derive(Serialize)]
struct EdgeJson {
    source: usize,
    target: usize,
    color: Color,
}

#[derive(Serialize)]
struct FaceJson {
    colors: [Color; 2],
    length: usize,
    cycle: Vec<usize>,
}

#[derive(Serialize)]
struct GraphJson<'a> {
    census: &'a Census,
    reference: usize,
    vertices: Vec<VertexJson>,
    edges: Vec<EdgeJson>,
    faces: Vec<FaceJson>,
}

pub fn to_json(g: &FlipGraph) -> String {
    let census = g.census();
    let doc = GraphJson {
        census: &census,
        reference: g.reference,
        vertices: g
            .vertices
            .iter()
            .enumerate()
            .map(|(id, t)| VertexJson {
                id,
                chords: t.chords.map(|c| c.to_string()),
                equilateral: t.is_equilateral(),
            })
            .collect(),
        edges: g.edges().into_iter().map(|(source, target, color)| EdgeJson { source, target, color }).collect(),
        faces: g
            .faces
            .iter()
            .map(|f| FaceJson { colors: f.colors, length: f.len(), cycle: f.cycle.clone() })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

pub fn census_json(g: &FlipGraph) -> String {
    serde_json::to_string_pretty(&g.census()).expect("serializable")
}

fn dot_color(c: Color) -> &'static str {
    match c {
        Color::O => "orange",
        Color::B => "blue",
        Color::G => "green",
    }
}

/// Undirected graph with colored edges; faces are listed as comments.
pub fn to_dot(g: &FlipGraph) -> String {
    let mut s = String::from("graph colored_associahedron {\n");
    for (i, t) in g.vertices.iter().enumerate() {
        let shape = if t.is_equilateral() { "doublecircle" } else { "circle" };
        writeln!(s, "  v{i} [label=\"{t}\", shape={shape}];").expect("write");
    }
    for (u, w, c) in g.edges() {
        writeln!(s, "  v{u} -- v{w} [color={}];", dot_color(c)).expect("write");
    }
    for (k, f) in g.faces.iter().enumerate() {
        let cyc: Vec<String> = f.cycle.iter().map(|v| format!("v{v}")).collect();
        writeln!(s, "  // face {k} ({}{}, {}): {}", f.colors[0], f.colors[1], f.len(), cyc.join(" ")).expect("write");
    }
    s.push_str("}\n");
    s
}
