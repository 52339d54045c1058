//! Seeded random checks of mutation on generic seeds.

use okamoto_algebra::{Check, RF};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::quiver::Quiver;
use crate::seed::{ensemble_map, Seed};

/// Skew-symmetric quiver on `n` vertices with multiplicities up to 2.
pub fn random_quiver<R: Rng>(rng: &mut R, n: usize) -> Quiver {
    let mut eps = vec![vec![0; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let e = rng.gen_range(-2..=2);
            eps[i][j] = e;
            eps[j][i] = -e;
        }
    }
    Quiver::new((0..n).map(|i| format!("v{i}")).collect(), eps).expect("skew by construction")
}

fn generic(q: Quiver, x: bool) -> Seed {
    let coords = (0..q.len()).map(RF::var).collect();
    if x {
        Seed::x(q, coords).expect("shape")
    } else {
        Seed::a(q, coords).expect("shape")
    }
}

/// Involutivity of mutation and compatibility with the ensemble map, on
/// `cases` random quivers of three to five vertices each.
pub fn run_checks(seed: u64, cases: usize) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut inst: Vec<(Quiver, usize)> = Vec::new();
    for _ in 0..cases {
        let n = rng.gen_range(3..=5);
        inst.push((random_quiver(&mut rng, n), rng.gen_range(0..n)));
    }
    let quiver = inst.iter().position(|(q, k)| q.mutate(*k).mutate(*k) != *q || !q.mutate(*k).is_skew_symmetric());
    let x = inst.iter().position(|(q, k)| {
        let s = generic(q.clone(), true);
        s.mutate(*k).mutate(*k) != s
    });
    let a = inst.iter().position(|(q, k)| {
        let s = generic(q.clone(), false);
        s.mutate(*k).mutate(*k) != s
    });
    let ens = inst.iter().position(|(q, k)| {
        let s = generic(q.clone(), false);
        ensemble_map(&s.mutate(*k)) != ensemble_map(&s).mutate(*k)
    });
    let wit = |p: Option<usize>| p.map(|i| format!("case {i}: mutation at {}", inst[i].1));
    vec![
        Check::from_witness("quiver-involution", "quiver mutation is an involution and stays skew-symmetric", wit(quiver)),
        Check::from_witness("x-involution", "X-seed mutation is an involution", wit(x)),
        Check::from_witness("a-involution", "A-seed mutation is an involution", wit(a)),
        Check::from_witness("ensemble-mutation", "the ensemble map commutes with mutation", wit(ens)),
    ]
}
