//! Chart states: values of the chord coordinates and local eigenvalues,
//! transformed by the `w2` chart map.

use okamoto_algebra::RF;

use crate::chart::ChartRing;

/// Values of `Z_O2, Z_B2, Z_G2`, the squares `i_k^2` and the cubic
/// Casimir `Z_O2 Z_B2 Z_G2 = i1 i2 i3 iinf`.
///
/// Squares are stored instead of the `i_k` themselves because the map
/// scales `i_k^2` by a factor with no rational square root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartState {
    pub z: [RF; 3],
    pub q: [RF; 3],
    pub cycle: RF,
}

impl ChartState {
    /// The identity state over the chart ring.
    pub fn reference(cr: &ChartRing) -> ChartState {
        ChartState { z: cr.z(), q: cr.q(), cycle: cr.cycle() }
    }

    /// `Z_O2 Z_B2 Z_G2` equals the stored cycle value.
    pub fn casimir_holds(&self) -> bool {
        &(&self.z[0] * &self.z[1]) * &self.z[2] == self.cycle
    }

    /// Convolution parameter `nu = 1/(Z_O2 Z_B2 Z_G2)`.
    pub fn nu(&self) -> RF {
        self.cycle.recip().expect("nonzero cycle")
    }

    /// `iinf^2 = cycle^2 / (i1^2 i2^2 i3^2)`.
    pub fn iinf_sq(&self) -> RF {
        &self.cycle.pow(2) / &(&(&self.q[0] * &self.q[1]) * &self.q[2])
    }

    /// Apply the `w2` map: cyclic change of `Z`, `i_k^2 -> nu i_k^2` and
    /// inversion of the cycle.
    pub fn w2(&self) -> ChartState {
        let [zo, zb, zg] = &self.z;
        let one = RF::one();
        let s1 = &(&one + zo) + &(zo * zb);
        let s2 = &(&one + zg) + &(zo * zg);
        let s3 = &(&one + zb) + &(zb * zg);
        let z = [&s1 / &(zb * &s2), &s3 / &(zg * &s1), &s2 / &(zo * &s3)];
        let nu = self.nu();
        ChartState { z, q: self.q.clone().map(|x| &x * &nu), cycle: nu }
    }
}
