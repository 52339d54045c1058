//! The reference quiver of the four-punctured sphere and its seeds.

use okamoto_algebra::{Ring, RF};

use crate::quiver::Quiver;
use crate::seed::Seed;

/// Vertex order used throughout: three loops, then three chords.
pub const VERTICES: [&str; 6] = ["O1", "B1", "G1", "O2", "B2", "G2"];

/// Counterclockwise 3-cycle O2 -> G2 -> B2 -> O2 plus three isolated loops.
pub fn triangle_quiver() -> Quiver {
    Quiver::from_arrows(&VERTICES, &[("O2", "G2"), ("G2", "B2"), ("B2", "O2")])
        .expect("valid quiver")
}

/// The same 3-cycle traversed clockwise.
pub fn clockwise_quiver() -> Quiver {
    triangle_quiver().opposite()
}

/// Ring with variables `<prefix>_<vertex>` for every vertex.
pub fn seed_ring(prefix: &str) -> Ring {
    Ring::new(VERTICES.iter().map(|v| format!("{prefix}_{v}"))).expect("valid names")
}

/// Seed whose coordinate at each vertex is the variable `<prefix>_<vertex>`.
pub fn generic_seed(quiver: Quiver, ring: &Ring, prefix: &str, x: bool) -> Seed {
    let coords = quiver
        .labels()
        .iter()
        .map(|l| RF::var(ring.require(&format!("{prefix}_{l}")).expect("variable in ring")))
        .collect();
    if x {
        Seed::x(quiver, coords).expect("sizes match")
    } else {
        Seed::a(quiver, coords).expect("sizes match")
    }
}

/// Reference X-seed over Z_O1, ..., Z_G2.
pub fn reference_x_seed(ring: &Ring) -> Seed {
    generic_seed(triangle_quiver(), ring, "Z", true)
}

/// Reference A-seed over C_O1, ..., C_G2.
pub fn reference_a_seed(ring: &Ring) -> Seed {
    generic_seed(triangle_quiver(), ring, "C", false)
}
