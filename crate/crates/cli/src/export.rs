//! Byte-deterministic text artifacts and their golden copies.

use std::path::PathBuf;

use okamoto_algebra::{print, Check, Matrix, Ring};
use okamoto_assoc::{export, FlipGraph};
use okamoto_cluster::reference::{reference_x_seed, seed_ring};
use okamoto_cluster::{Seed, Word};
use okamoto_painleve::{stokes, ChartRing, MonodromyChart, PainleveError};

use crate::CliError;

/// Exported artifacts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Kind {
    FlipGraphDot,
    FlipGraphJson,
    Census,
    Stokes,
    Chart,
}

impl Kind {
    pub fn golden_name(self) -> &'static str {
        match self {
            Kind::FlipGraphDot => "flip_graph.dot",
            Kind::FlipGraphJson => "flip_graph.json",
            Kind::Census => "census.json",
            Kind::Stokes => "stokes.txt",
            Kind::Chart => "chart_zchange.txt",
        }
    }
}

pub const GOLDEN: [Kind; 5] = [Kind::FlipGraphDot, Kind::FlipGraphJson, Kind::Census, Kind::Stokes, Kind::Chart];

/// Word whose chart is the golden `chart` artifact, in application order.
pub const GOLDEN_WORD: &str = "O,B,G,O,sigma_O";

/// `OKAMOTO_SEED_DIR`, or the `golden` directory shipped with this crate.
pub fn golden_dir() -> PathBuf {
    std::env::var_os("OKAMOTO_SEED_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/golden")))
}

/// One matrix per line block: a header, then one bracketed row per line.
pub fn matrix_text(name: &str, m: &Matrix, ring: &Ring) -> String {
    let mut s = format!("{name}\n");
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| print(&m[(i, j)], ring)).collect();
        s.push_str(&format!("  [{}]\n", row.join(", ")));
    }
    s
}

/// Stokes matrices and the formal monodromy.
pub fn stokes_text() -> Result<String, PainleveError> {
    let cr = ChartRing::new();
    let chart = MonodromyChart::build(&cr);
    let rep = stokes::from_monodromy(&cr, &chart)?;
    let rules = cr.casimir();
    let d = &rep.data;
    Ok([("S1", &d.s1), ("S2", &d.s2), ("M0", &d.m0)]
        .iter()
        .map(|(n, m)| matrix_text(n, &m.reduce(&rules), &cr.ring))
        .collect())
}

/// `label = coordinate` per vertex, then the arrows with multiplicity.
pub fn chart_text(seed: &Seed, ring: &Ring) -> String {
    let labels = seed.quiver.labels();
    let mut s = String::new();
    for (l, c) in labels.iter().zip(&seed.coords) {
        s.push_str(&format!("{l} = {}\n", print(c, ring)));
    }
    for (i, j, m) in seed.quiver.arrows() {
        s.push_str(&format!("{} -> {} x{m}\n", labels[i], labels[j]));
    }
    s
}

/// The reference X-seed after a word given in application order.
pub fn mutated_reference(word: &str) -> Result<(Seed, Ring), CliError> {
    let ring = seed_ring("Z");
    let s0 = reference_x_seed(&ring);
    let w = Word::parse_list(word, &s0.quiver)?;
    Ok((w.apply(&s0), ring))
}

pub fn render(kind: Kind) -> Result<String, CliError> {
    Ok(match kind {
        Kind::FlipGraphDot => export::to_dot(&FlipGraph::enumerate()),
        Kind::FlipGraphJson => export::to_json(&FlipGraph::enumerate()),
        Kind::Census => export::census_json(&FlipGraph::enumerate()),
        Kind::Stokes => stokes_text()?,
        Kind::Chart => {
            let (s, ring) = mutated_reference(GOLDEN_WORD)?;
            chart_text(&s, &ring)
        }
    })
}

/// Compare a rendered artifact with its golden copy.
pub fn golden_check(kind: Kind) -> Check {
    let name = kind.golden_name();
    let id = format!("golden-{}", name.split('.').next().unwrap_or(name).replace('_', "-"));
    let topic = format!("output matches the golden {name}");
    let path = golden_dir().join(name);
    let witness = match (render(kind), std::fs::read_to_string(&path)) {
        (Err(e), _) => Some(e.to_string()),
        (_, Err(e)) => Some(format!("{}: {e}", path.display())),
        (Ok(got), Ok(want)) => first_line_diff(&got, &want),
    };
    Check::from_witness(id, topic, witness)
}

fn first_line_diff(got: &str, want: &str) -> Option<String> {
    if got == want {
        return None;
    }
    let (g, w): (Vec<&str>, Vec<&str>) = (got.lines().collect(), want.lines().collect());
    let k = g.iter().zip(&w).position(|(a, b)| a != b).unwrap_or(g.len().min(w.len()));
    Some(format!(
        "line {}: got `{}`, expected `{}`",
        k + 1,
        g.get(k).copied().unwrap_or("<end>"),
        w.get(k).copied().unwrap_or("<end>")
    ))
}
