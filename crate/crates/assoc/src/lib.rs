//! Colored triangulations of the hexagon, their flip graph, seeds carried
//! along flips and the dual fat graphs with loop Casimirs.

pub mod export;
pub mod graph;
pub mod relations;
pub mod ribbon;
pub mod seed;
pub mod triangulation;

use okamoto_algebra::{Check, Exec};
use thiserror::Error;

pub use graph::{Census, Face, FlipGraph};
pub use ribbon::{inside_out, RibbonGraph, RibbonState};
pub use seed::{path_independence, DecoratedSeed, PathReport};
pub use triangulation::{Chord, Color, ColoredTriangulation, EdgeLabel, COLORS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AssocError {
    #[error("unknown color `{0}`")]
    Color(String),
    #[error("invalid triangulation: {0}")]
    Triangulation(String),
    #[error("`{0}` is a loop edge; only chord-dual edges flip")]
    LoopFlip(String),
}

/// Census figures as checks.
pub fn census_checks(c: &Census) -> Vec<Check> {
    let eq = |id: &str, topic: &str, got: usize, want: usize| {
        Check::new(id, topic, got == want).with_witness(format!("{got}, expected {want}"))
    };
    vec![
        eq("uncolored", "triangulations of the hexagon", c.uncolored, 14),
        eq("vertices", "colored triangulations", c.vertices, 84),
        eq("edges", "flips", c.edges, 126),
        Check::new("regular", "every vertex has three distinct neighbors", c.regular),
        Check::new("connected", "the flip graph is connected", c.connected),
        Check::new("bipartite", "the flip graph is bipartite, so the alternating rotation exists", c.bipartite),
        eq("decagons", "faces of length ten", c.decagons, 18),
        eq("tetragons", "faces of length four", c.tetragons, 18),
        eq("other-faces", "faces of any other length", c.other_faces, 0),
        Check::new("euler", "Euler characteristic -6, genus 4", c.euler == -6 && c.genus == 4)
            .with_witness(format!("chi {}", c.euler)),
        eq("equilateral", "equilateral colored triangulations", c.equilateral, 12),
        eq("all-decagon", "vertices surrounded by three decagons", c.all_decagon_vertices, 12),
        Check::new(
            "all-decagon-equilateral",
            "the vertices on three decagons are the equilateral ones",
            c.all_decagon_are_equilateral,
        ),
        eq("mixed", "vertices on two decagons and one tetragon", c.mixed_vertices, 72),
        eq("quotient", "orbits of the recoloring action", c.quotient_vertices, 14),
        Check::new("free-action", "recoloring acts freely", c.free_action),
        eq("color-blind-edges", "edges after forgetting colors", c.color_blind_edges, 21),
        Check::new(
            "color-blind-degrees",
            "forgetting colors leaves a 3-regular graph on 14 vertices",
            c.color_blind_vertices == 14 && c.color_blind_degrees.iter().all(|&d| d == 3),
        ),
    ]
}

/// Flip involution and three flips per vertex over every colored
/// triangulation.
pub fn flip_checks(g: &FlipGraph) -> Vec<Check> {
    let involutive = g.vertices.iter().all(|t| COLORS.iter().all(|c| t.flip(*c).flip(*c) == *t));
    let one_chord = g.vertices.iter().all(|t| {
        COLORS.iter().all(|c| {
            let f = t.flip(*c);
            COLORS.iter().filter(|d| f.chord(**d) != t.chord(**d)).count() == 1
        })
    });
    vec![
        Check::new("flip-involution", "flipping the same color twice is the identity", involutive),
        Check::new("flip-one-chord", "a flip changes exactly the chord of its color", one_chord),
    ]
}

#[derive(Clone, Debug)]
pub struct AssocChecks {
    pub census: Vec<Check>,
    pub flips: Vec<Check>,
    pub paths: Vec<Check>,
    pub relations: Vec<Check>,
    pub ribbon: Vec<Check>,
}

impl AssocChecks {
    pub fn all(&self) -> Vec<Check> {
        [&self.census, &self.flips, &self.paths, &self.relations, &self.ribbon]
            .into_iter()
            .flatten()
            .cloned()
            .collect()
    }
}

pub fn run_checks(exec: Exec) -> AssocChecks {
    let g = FlipGraph::enumerate();
    AssocChecks {
        census: census_checks(&g.census()),
        flips: flip_checks(&g),
        paths: path_independence(&g, exec).checks(),
        relations: relations::run_checks(),
        ribbon: inside_out().checks,
    }
}
