//! Seeded random products of generators, for round-trip suites.

use std::fmt;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cohomology::{all_generators, iota, make_x, Cochain, GeneratorId};
use crate::graph::QuadricGraph;
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Factor {
    Gen(GeneratorId),
    X,
    /// `iota(x_i)`
    Var(usize),
}

impl Factor {
    /// Cohomological degree.
    pub fn degree(&self, g: &QuadricGraph) -> usize {
        match self {
            Factor::Gen(id) => id.degree(g),
            Factor::X | Factor::Var(_) => 2,
        }
    }

    pub fn cochain(&self, g: &QuadricGraph) -> Cochain {
        match self {
            Factor::Gen(id) => id.cochain(g).expect("generated ids are valid"),
            Factor::X => make_x(g),
            Factor::Var(i) => iota(g, &Polynomial::var(g.nvars(), *i)),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Gen(id) => write!(f, "{}", id),
            Factor::X => f.write_str("X"),
            Factor::Var(i) => write!(f, "x{}", i),
        }
    }
}

/// `coeff * f_1 * ... * f_k`; the empty product is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    pub coeff: i64,
    pub factors: Vec<Factor>,
}

impl Word {
    pub fn degree(&self, g: &QuadricGraph) -> usize {
        self.factors.iter().map(|f| f.degree(g)).sum()
    }

    pub fn cochain(&self, g: &QuadricGraph) -> Cochain {
        let start = Cochain::constant(g, &Polynomial::constant(g.nvars(), self.coeff));
        self.factors
            .iter()
            .fold(start, |acc, f| &acc * &f.cochain(g))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coeff)?;
        for x in &self.factors {
            write!(f, "*{}", x)?;
        }
        Ok(())
    }
}

/// Sum of words, possibly of different degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordSum(pub Vec<Word>);

impl WordSum {
    pub fn cochain(&self, g: &QuadricGraph) -> Cochain {
        self.0
            .iter()
            .fold(Cochain::zero(g), |acc, w| acc + w.cochain(g))
    }

    pub fn max_degree(&self, g: &QuadricGraph) -> usize {
        self.0.iter().map(|w| w.degree(g)).max().unwrap_or(0)
    }
}

impl fmt::Display for WordSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.0.iter().map(|w| w.to_string()).collect();
        f.write_str(&parts.join(" + "))
    }
}

pub struct WordSampler<'g> {
    g: &'g QuadricGraph,
    factors: Vec<Factor>,
    rng: ChaCha8Rng,
}

impl<'g> WordSampler<'g> {
    pub fn new(g: &'g QuadricGraph, seed: u64) -> Self {
        let mut factors: Vec<Factor> = all_generators(g).into_iter().map(Factor::Gen).collect();
        factors.push(Factor::X);
        factors.extend((1..=g.nvars()).map(Factor::Var));
        WordSampler {
            g,
            factors,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// A random word of cohomological degree at most `max_degree`.
    pub fn word(&mut self, max_degree: usize) -> Word {
        let target = self.rng.gen_range(0..=max_degree / 2) * 2;
        let mut factors = Vec::new();
        let mut deg = 0;
        for _ in 0..8 {
            let fits: Vec<&Factor> = self
                .factors
                .iter()
                .filter(|f| deg + f.degree(self.g) <= target)
                .collect();
            let Some(f) = fits.choose(&mut self.rng) else {
                break;
            };
            deg += f.degree(self.g);
            factors.push((*f).clone());
            if deg == target {
                break;
            }
        }
        let mut coeff = 0;
        while coeff == 0 {
            coeff = self.rng.gen_range(-3..=3);
        }
        Word { coeff, factors }
    }

    /// One to three words, so sums are usually inhomogeneous.
    pub fn sum(&mut self, max_degree: usize) -> WordSum {
        let k = self.rng.gen_range(1..=3);
        WordSum((0..k).map(|_| self.word(max_degree)).collect())
    }

    /// Random integer in `[-bound, bound]`.
    pub fn int(&mut self, bound: i64) -> BigInt {
        BigInt::from(self.rng.gen_range(-bound..=bound))
    }
}
