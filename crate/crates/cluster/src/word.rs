use std::fmt;

use crate::quiver::Quiver;
use crate::seed::Seed;
use crate::ClusterError;

/// One step of a cluster transformation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Mu(usize),
    /// Vertex i is sent to `perm[i]`.
    Sigma(Vec<usize>),
}

impl Step {
    pub fn apply(&self, seed: &Seed) -> Seed {
        match self {
            Step::Mu(k) => seed.mutate(*k),
            Step::Sigma(p) => seed.permute(p),
        }
    }

    pub fn apply_quiver(&self, q: &Quiver) -> Quiver {
        match self {
            Step::Mu(k) => q.mutate(*k),
            Step::Sigma(p) => q.permute(p),
        }
    }

    pub fn inverse(&self) -> Step {
        match self {
            Step::Mu(k) => Step::Mu(*k),
            Step::Sigma(p) => {
                let mut inv = vec![0; p.len()];
                for (i, &j) in p.iter().enumerate() {
                    inv[j] = i;
                }
                Step::Sigma(inv)
            }
        }
    }
}

/// Composition of steps written as functions: the last entry acts first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    steps: Vec<Step>,
}

impl Word {
    pub fn identity() -> Word {
        Word::default()
    }

    /// From composition order (`w = s_0 o s_1 o ... `, so `s_last` acts first).
    pub fn compose(steps: Vec<Step>) -> Word {
        Word { steps }
    }

    /// From application order (first entry acts first), the order used by
    /// files and the command line.
    pub fn from_application_order(mut steps: Vec<Step>) -> Word {
        steps.reverse();
        Word { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Steps in the order they act.
    pub fn application_order(&self) -> impl Iterator<Item = &Step> {
        self.steps.iter().rev()
    }

    /// `self o other`: `other` acts first.
    pub fn then_after(&self, other: &Word) -> Word {
        let mut steps = self.steps.clone();
        steps.extend(other.steps.iter().cloned());
        Word { steps }
    }

    pub fn pow(&self, k: usize) -> Word {
        let mut w = Word::identity();
        for _ in 0..k {
            w = w.then_after(self);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word { steps: self.steps.iter().rev().map(Step::inverse).collect() }
    }

    pub fn apply(&self, seed: &Seed) -> Seed {
        self.application_order().fold(seed.clone(), |s, st| st.apply(&s))
    }

    /// Every intermediate seed, starting with the input.
    pub fn trajectory(&self, seed: &Seed) -> Vec<Seed> {
        let mut out = vec![seed.clone()];
        for st in self.application_order() {
            let next = st.apply(out.last().unwrap());
            out.push(next);
        }
        out
    }

    pub fn apply_quiver(&self, q: &Quiver) -> Quiver {
        self.application_order().fold(q.clone(), |q, st| st.apply_quiver(&q))
    }

    /// Mutations by label, given in composition order.
    pub fn mus(q: &Quiver, labels: &[&str]) -> Result<Word, ClusterError> {
        let steps = labels.iter().map(|l| q.vertex(l).map(Step::Mu)).collect::<Result<_, _>>()?;
        Ok(Word { steps })
    }

    /// Parse a comma separated list in application order. Items are vertex
    /// labels (a bare color means its chord vertex) or `sigma_<color>`.
    pub fn parse_list(text: &str, q: &Quiver) -> Result<Word, ClusterError> {
        let mut steps = Vec::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if let Some(c) = item.strip_prefix("sigma_") {
                steps.push(Step::Sigma(color_swap(q, c)?));
            } else {
                steps.push(Step::Mu(q.vertex(item)?));
            }
        }
        Ok(Word::from_application_order(steps))
    }

    pub fn display(&self, q: &Quiver) -> String {
        let parts: Vec<String> = self
            .steps
            .iter()
            .map(|s| match s {
                Step::Mu(k) => format!("mu_{}", q.labels()[*k]),
                Step::Sigma(p) => {
                    let moved: Vec<String> = p
                        .iter()
                        .enumerate()
                        .filter(|(i, j)| i != *j)
                        .map(|(i, &j)| format!("{}->{}", q.labels()[i], q.labels()[j]))
                        .collect();
                    format!("sigma({})", moved.join(" "))
                }
            })
            .collect();
        parts.join(" o ")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .steps
            .iter()
            .map(|s| match s {
                Step::Mu(k) => format!("mu{k}"),
                Step::Sigma(p) => format!("sigma{p:?}"),
            })
            .collect();
        write!(f, "{}", parts.join(" o "))
    }
}

/// The three colors of the chords, in cyclic order.
pub const COLORS: [&str; 3] = ["O", "B", "G"];

/// The two colors other than `alpha`, in cyclic order after it.
pub fn others(alpha: &str) -> Result<(&'static str, &'static str), ClusterError> {
    let i = COLORS
        .iter()
        .position(|c| *c == alpha)
        .ok_or_else(|| ClusterError::UnknownVertex(alpha.to_string()))?;
    Ok((COLORS[(i + 1) % 3], COLORS[(i + 2) % 3]))
}

/// Permutation swapping the chord vertices of the two colors other than `alpha`.
pub fn color_swap(q: &Quiver, alpha: &str) -> Result<Vec<usize>, ClusterError> {
    let (b, g) = others(alpha)?;
    let i = q.vertex(b)?;
    let j = q.vertex(g)?;
    let mut p: Vec<usize> = (0..q.len()).collect();
    p.swap(i, j);
    Ok(p)
}

/// sigma_alpha as a single permutation step.
pub fn sigma(q: &Quiver, alpha: &str) -> Result<Word, ClusterError> {
    Ok(Word::compose(vec![Step::Sigma(color_swap(q, alpha)?)]))
}

/// sigma_alpha realized by mutations, `(mu_b mu_g)^2 mu_b`; `flipped`
/// selects the other form `(mu_g mu_b)^2 mu_g`.
pub fn sigma_by_mutations(q: &Quiver, alpha: &str, flipped: bool) -> Result<Word, ClusterError> {
    let (b, g) = others(alpha)?;
    let (x, y) = if flipped { (g, b) } else { (b, g) };
    Word::mus(q, &[x, y, x, y, x])
}

/// Four-step tetragon part `mu_a mu_g mu_b mu_a`, or `mu_a mu_b mu_g mu_a`
/// when `flipped`.
pub fn tetragon_word(q: &Quiver, alpha: &str, flipped: bool) -> Result<Word, ClusterError> {
    let (b, g) = others(alpha)?;
    if flipped {
        Word::mus(q, &[alpha, b, g, alpha])
    } else {
        Word::mus(q, &[alpha, g, b, alpha])
    }
}

/// The nine-step word for w2, in either of its two forms.
pub fn w2_word(q: &Quiver, alpha: &str, second_form: bool) -> Result<Word, ClusterError> {
    let head = sigma_by_mutations(q, alpha, second_form)?;
    Ok(head.then_after(&tetragon_word(q, alpha, false)?))
}

/// `sigma_O o (mu_O mu_G mu_B mu_O)`.
pub fn clustrans_word(q: &Quiver) -> Result<Word, ClusterError> {
    Ok(sigma(q, "O")?.then_after(&tetragon_word(q, "O", false)?))
}

/// Coxeter word `(mu_g mu_b)^5` on the pair other than `alpha`.
pub fn coxeter_word(q: &Quiver, alpha: &str) -> Result<Word, ClusterError> {
    let (b, g) = others(alpha)?;
    Ok(Word::mus(q, &[g, b])?.pow(5))
}
