use okamoto_algebra::RF;

use crate::quiver::Quiver;
use crate::ClusterError;

/// Which torus the coordinates of a seed live on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    X,
    A,
}

/// Quiver plus one rational function per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Seed {
    pub flavor: Flavor,
    pub quiver: Quiver,
    pub coords: Vec<RF>,
}

pub type XSeed = Seed;
pub type ASeed = Seed;

impl Seed {
    pub fn new(flavor: Flavor, quiver: Quiver, coords: Vec<RF>) -> Result<Seed, ClusterError> {
        if coords.len() != quiver.len() {
            return Err(ClusterError::Shape(format!(
                "{} coordinates for {} vertices",
                coords.len(),
                quiver.len()
            )));
        }
        Ok(Seed { flavor, quiver, coords })
    }

    pub fn x(quiver: Quiver, coords: Vec<RF>) -> Result<Seed, ClusterError> {
        Seed::new(Flavor::X, quiver, coords)
    }

    pub fn a(quiver: Quiver, coords: Vec<RF>) -> Result<Seed, ClusterError> {
        Seed::new(Flavor::A, quiver, coords)
    }

    pub fn coord(&self, label: &str) -> Result<&RF, ClusterError> {
        Ok(&self.coords[self.quiver.vertex(label)?])
    }

    pub fn mutate(&self, k: usize) -> Seed {
        let coords = match self.flavor {
            Flavor::X => mutate_x_coords(&self.quiver, &self.coords, k),
            Flavor::A => mutate_a_coords(&self.quiver, &self.coords, k),
        };
        Seed { flavor: self.flavor, quiver: self.quiver.mutate(k), coords }
    }

    pub fn mutate_at(&self, label: &str) -> Result<Seed, ClusterError> {
        Ok(self.mutate(self.quiver.vertex(label)?))
    }

    /// Relabel: the coordinate at vertex i moves to vertex `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Seed {
        let mut coords = vec![RF::zero(); self.coords.len()];
        for (i, c) in self.coords.iter().enumerate() {
            coords[perm[i]] = c.clone();
        }
        Seed { flavor: self.flavor, quiver: self.quiver.permute(perm), coords }
    }
}

/// X'_k = 1/X_k, X'_i = X_i (1 + X_k^{-sgn eps_ik})^{-eps_ik}.
fn mutate_x_coords(q: &Quiver, x: &[RF], k: usize) -> Vec<RF> {
    let xk = &x[k];
    let xk_inv = xk.recip().expect("cluster coordinate vanished");
    let one = RF::one();
    let plus = &one + xk;
    let plus_inv = &one + &xk_inv;
    x.iter()
        .enumerate()
        .map(|(i, xi)| {
            if i == k {
                return xk_inv.clone();
            }
            let e = q.eps(i, k);
            match e.signum() {
                0 => xi.clone(),
                // sgn > 0: factor (1 + X_k^{-1})^{-e}
                1 => xi * &plus_inv.pow(-e),
                _ => xi * &plus.pow(-e),
            }
        })
        .collect()
}

/// A'_k = (prod_{eps_kj>0} A_j^eps_kj + prod_{eps_kj<0} A_j^-eps_kj) / A_k.
fn mutate_a_coords(q: &Quiver, a: &[RF], k: usize) -> Vec<RF> {
    let mut pos = RF::one();
    let mut neg = RF::one();
    for (j, aj) in a.iter().enumerate() {
        let e = q.eps(k, j);
        if e > 0 {
            pos = &pos * &aj.pow(e);
        } else if e < 0 {
            neg = &neg * &aj.pow(-e);
        }
    }
    let new = &(&pos + &neg) / &a[k];
    let mut out = a.to_vec();
    out[k] = new;
    out
}

/// Ensemble map p: X_i = prod_j A_j^{eps_ij}.
pub fn ensemble_map(a: &Seed) -> Seed {
    let q = &a.quiver;
    let coords = (0..q.len())
        .map(|i| {
            let mut x = RF::one();
            for (j, aj) in a.coords.iter().enumerate() {
                let e = q.eps(i, j);
                if e != 0 {
                    x = &x * &aj.pow(e);
                }
            }
            x
        })
        .collect();
    Seed { flavor: Flavor::X, quiver: q.clone(), coords }
}

/// Laurent polynomial with positive coefficients: monomial denominator and
/// a numerator whose coefficients are all positive.
pub fn is_positive_laurent(r: &RF) -> bool {
    use num_traits::Signed;
    r.denom().is_monomial() && r.numer().terms().iter().all(|(_, c)| c.is_positive())
}
