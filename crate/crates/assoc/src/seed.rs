//! Seeds carried along flips, and path independence of the flip dynamics.

use okamoto_algebra::{par, Check, Exec, Ring};
use okamoto_cluster::reference::{reference_x_seed, seed_ring};
use okamoto_cluster::Seed;

use crate::graph::FlipGraph;
use crate::triangulation::{Color, ColoredTriangulation};

/// A colored triangulation together with the X-seed attached to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecoratedSeed {
    pub tri: ColoredTriangulation,
    pub seed: Seed,
}

impl DecoratedSeed {
    /// Reference triangulation with the generic chart over `Z_*`.
    pub fn reference(ring: &Ring) -> DecoratedSeed {
        DecoratedSeed { tri: ColoredTriangulation::reference(), seed: reference_x_seed(ring) }
    }

    /// Flip the chord of color c and mutate at its vertex.
    pub fn flip(&self, c: Color) -> DecoratedSeed {
        let seed = self.seed.mutate_at(c.chord_vertex()).expect("chord vertex");
        DecoratedSeed { tri: self.tri.flip(c), seed }
    }

    /// The carried quiver equals the one read off the triangles.
    pub fn quiver_is_geometric(&self) -> bool {
        self.seed.quiver == self.tri.quiver()
    }
}

#[derive(Clone, Debug)]
pub struct PathReport {
    pub tree_edges: usize,
    /// Edges outside the BFS tree, each closing one independent cycle.
    pub cycle_checks: usize,
    pub failures: Vec<String>,
    /// Vertices whose carried quiver differs from the geometric one.
    pub quiver_mismatches: Vec<usize>,
    pub seeds: Vec<DecoratedSeed>,
}

impl PathReport {
    pub fn checks(&self) -> Vec<Check> {
        vec![
            Check::new("bfs-tree", "spanning tree has one edge fewer than the vertex count", self.tree_edges + 1 == self.seeds.len()),
            Check::new("cycle-count", "independent cycles closed by non-tree edges", self.cycle_checks == 43)
                .with_witness(self.cycle_checks.to_string()),
            Check::from_witness(
                "cycle-agreement",
                "both routes around every independent cycle give the same chart and quiver",
                self.failures.first().cloned(),
            ),
            Check::from_witness(
                "geometric-quiver",
                "carried quiver equals the triangle quiver at every vertex",
                self.quiver_mismatches.first().map(|v| v.to_string()),
            ),
        ]
    }
}

/// BFS from the reference carrying seeds, then compare every non-tree edge.
pub fn path_independence(g: &FlipGraph, exec: Exec) -> PathReport {
    let ring = seed_ring("Z");
    let mut seeds: Vec<Option<DecoratedSeed>> = vec![None; g.len()];
    let mut parent: Vec<Option<(usize, Color)>> = vec![None; g.len()];
    seeds[g.reference] = Some(DecoratedSeed::reference(&ring));
    let mut frontier = vec![g.reference];
    let mut tree_edges = 0;
    while !frontier.is_empty() {
        // first discovery wins, in frontier and color order
        let mut next: Vec<(usize, usize, Color)> = Vec::new();
        for &v in &frontier {
            for c in crate::triangulation::COLORS {
                let w = g.adj[v][c.index()];
                if seeds[w].is_none() && parent[w].is_none() && w != g.reference {
                    parent[w] = Some((v, c));
                    next.push((v, w, c));
                }
            }
        }
        let grown = par::map(exec, &next, |(v, _, c)| seeds[*v].as_ref().expect("seeded").flip(*c));
        for ((_, w, _), s) in next.iter().zip(grown) {
            seeds[*w] = Some(s);
            tree_edges += 1;
        }
        frontier = next.into_iter().map(|(_, w, _)| w).collect();
    }
    let seeds: Vec<DecoratedSeed> = seeds.into_iter().map(|s| s.expect("graph is connected")).collect();
    let non_tree: Vec<(usize, usize, Color)> = g
        .edges()
        .into_iter()
        .filter(|&(u, w, c)| parent[w] != Some((u, c)) && parent[u] != Some((w, c)))
        .collect();
    let verdicts = par::map(exec, &non_tree, |&(u, w, c)| {
        let there = seeds[u].flip(c);
        if there == seeds[w] {
            None
        } else {
            Some(format!("{} -{}-> {} disagrees with the tree route", g.vertices[u], c, g.vertices[w]))
        }
    });
    let quiver_mismatches =
        (0..g.len()).filter(|&v| !seeds[v].quiver_is_geometric()).collect();
    PathReport {
        tree_edges,
        cycle_checks: non_tree.len(),
        failures: verdicts.into_iter().flatten().collect(),
        quiver_mismatches,
        seeds,
    }
}
