use std::fmt;

use crate::ClusterError;

/// Quiver stored as its skew-symmetric exchange matrix.
///
/// `eps[i][j]` is the net number of arrows `i -> j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    labels: Vec<String>,
    eps: Vec<Vec<i32>>,
}

impl fmt::Debug for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arrows: Vec<String> = self
            .arrows()
            .into_iter()
            .map(|(i, j, m)| {
                if m == 1 {
                    format!("{}->{}", self.labels[i], self.labels[j])
                } else {
                    format!("{}-{m}->{}", self.labels[i], self.labels[j])
                }
            })
            .collect();
        write!(f, "Quiver{:?}[{}]", self.labels, arrows.join(", "))
    }
}

impl Quiver {
    pub fn new(labels: Vec<String>, eps: Vec<Vec<i32>>) -> Result<Quiver, ClusterError> {
        let n = labels.len();
        if eps.len() != n || eps.iter().any(|r| r.len() != n) {
            return Err(ClusterError::Shape(format!("exchange matrix must be {n}x{n}")));
        }
        for i in 0..n {
            for j in 0..n {
                if eps[i][j] != -eps[j][i] {
                    return Err(ClusterError::NotSkew(i, j));
                }
            }
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(ClusterError::DuplicateVertex(l.clone()));
            }
        }
        Ok(Quiver { labels, eps })
    }

    /// Quiver with no arrows.
    pub fn empty(labels: &[&str]) -> Quiver {
        let n = labels.len();
        Quiver { labels: labels.iter().map(|s| s.to_string()).collect(), eps: vec![vec![0; n]; n] }
    }

    /// Builds from a list of arrows (parallel arrows add up, opposite ones cancel).
    pub fn from_arrows(labels: &[&str], arrows: &[(&str, &str)]) -> Result<Quiver, ClusterError> {
        let mut q = Quiver::empty(labels);
        for (a, b) in arrows {
            let i = q.vertex(a)?;
            let j = q.vertex(b)?;
            q.eps[i][j] += 1;
            q.eps[j][i] -= 1;
        }
        Ok(q)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn eps(&self, i: usize, j: usize) -> i32 {
        self.eps[i][j]
    }

    pub fn matrix(&self) -> &[Vec<i32>] {
        &self.eps
    }

    /// Index of a vertex; a bare color letter `O` also matches `O2`.
    pub fn vertex(&self, label: &str) -> Result<usize, ClusterError> {
        if let Some(i) = self.labels.iter().position(|l| l == label) {
            return Ok(i);
        }
        let alias = format!("{label}2");
        self.labels
            .iter()
            .position(|l| *l == alias)
            .ok_or_else(|| ClusterError::UnknownVertex(label.to_string()))
    }

    /// All arrows `(from, to, multiplicity)`.
    pub fn arrows(&self) -> Vec<(usize, usize, i32)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in 0..self.len() {
                if self.eps[i][j] > 0 {
                    out.push((i, j, self.eps[i][j]));
                }
            }
        }
        out
    }

    /// Mutation at `k`: compose paths through k, reverse arrows at k,
    /// cancel 2-cycles (the last step is implicit in net counts).
    pub fn mutate(&self, k: usize) -> Quiver {
        let n = self.len();
        let mut e = self.eps.clone();
        for i in 0..n {
            for j in 0..n {
                if i == k || j == k {
                    e[i][j] = -self.eps[i][j];
                } else {
                    let a = self.eps[i][k];
                    let b = self.eps[k][j];
                    // |a| b + a |b| over 2 counts composed paths i->k->j
                    e[i][j] = self.eps[i][j] + (a.abs() * b + a * b.abs()) / 2;
                }
            }
        }
        Quiver { labels: self.labels.clone(), eps: e }
    }

    /// Relabel by `perm`: vertex i moves to slot `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Quiver {
        let n = self.len();
        let mut e = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                e[perm[i]][perm[j]] = self.eps[i][j];
            }
        }
        Quiver { labels: self.labels.clone(), eps: e }
    }

    /// Same exchange matrix with every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        let eps = self.eps.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
        Quiver { labels: self.labels.clone(), eps }
    }

    pub fn is_skew_symmetric(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (0..n).all(|j| self.eps[i][j] == -self.eps[j][i]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_cycle_at_one_vertex() {
        // O->G->B->O mutated at O: arrows at O flip; the composed path
        // B->O->G cancels G->B
        let q = Quiver::from_arrows(&["O", "B", "G"], &[("O", "G"), ("G", "B"), ("B", "O")]).unwrap();
        let m = q.mutate(0);
        let expect = Quiver::from_arrows(&["O", "B", "G"], &[("G", "O"), ("O", "B")]).unwrap();
        assert_eq!(m, expect);
        assert_eq!(m.mutate(0), q);
    }
}
