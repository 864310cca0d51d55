//! Seeded instance generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::vector::{Family, Vector};

/// Parameters of a random family.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RandomFamily {
    pub len: usize,
    /// Number of draws; duplicates are dropped, so the family may be smaller.
    pub size: usize,
    /// Probability that a coordinate is nonzero.
    pub density: f64,
    pub domain: u8,
    pub seed: u64,
}

impl RandomFamily {
    pub fn boolean(len: usize, size: usize, seed: u64) -> Self {
        RandomFamily {
            len,
            size,
            density: 0.5,
            domain: 2,
            seed,
        }
    }

    /// Nonzero coordinates take a uniform value in `1..d`.
    pub fn generate(&self) -> Result<Family> {
        if self.len == 0 {
            return Err(Error::InvalidSpec("vectors must have length at least 1".into()));
        }
        if !(0.0..=1.0).contains(&self.density) {
            return Err(Error::InvalidSpec(format!("density {} is outside [0, 1]", self.density)));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let mut members = Vec::with_capacity(self.size);
        for _ in 0..self.size {
            let digits = (0..self.len)
                .map(|_| {
                    if rng.gen_bool(self.density) {
                        rng.gen_range(1..self.domain.max(2))
                    } else {
                        0
                    }
                })
                .collect();
            members.push(Vector::new(digits, self.domain)?);
        }
        Family::new(self.len, self.domain, members)
    }
}

/// A hypergraph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    vertices: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(vertices: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        if vertices == 0 {
            return Err(Error::InvalidSpec("a hypergraph needs at least one vertex".into()));
        }
        let mut normal = Vec::with_capacity(edges.len());
        for mut e in edges {
            e.sort_unstable();
            e.dedup();
            if let Some(&x) = e.iter().find(|&&x| x >= vertices) {
                return Err(Error::IndexOutOfRange { index: x, len: vertices });
            }
            normal.push(e);
        }
        Ok(Hypergraph { vertices, edges: normal })
    }

    /// Each vertex lies in each edge independently with probability `density`.
    pub fn random(vertices: usize, edges: usize, density: f64, seed: u64) -> Result<Self> {
        if !(0.0..=1.0).contains(&density) {
            return Err(Error::InvalidSpec(format!("density {density} is outside [0, 1]")));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let edges = (0..edges)
            .map(|_| (0..vertices).filter(|_| rng.gen_bool(density)).collect())
            .collect();
        Hypergraph::new(vertices, edges)
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Characteristic vectors of the complemented edges. `𝟏` lies in the
    /// closure under `S10^k` iff no `k` vertices hit every edge.
    pub fn complemented_family(&self) -> Family {
        let members = self.edges.iter().map(|e| {
            let mut digits = vec![1u8; self.vertices];
            for &x in e {
                digits[x] = 0;
            }
            Vector::from_digits_unchecked(digits, 2)
        });
        Family::new(self.vertices, 2, members).expect("vectors are well formed")
    }

    /// Whether some set of at most `k` vertices meets every edge, by
    /// exhaustive search.
    pub fn has_hitting_set(&self, k: usize) -> bool {
        assert!(self.vertices < 32, "exhaustive search is limited to 31 vertices");
        let masks: Vec<u32> = self.edges.iter().map(|e| e.iter().map(|&x| 1u32 << x).sum()).collect();
        (0..1u32 << self.vertices)
            .filter(|x| x.count_ones() as usize <= k)
            .any(|x| masks.iter().all(|&e| e & x != 0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_under_seed() {
        let p = RandomFamily::boolean(5, 3, 7);
        assert_eq!(p.generate().unwrap(), p.generate().unwrap());
        let q = RandomFamily {
            density: 1.0,
            ..RandomFamily::boolean(6, 4, 1)
        };
        let s = q.generate().unwrap();
        assert_eq!(s.size(), 1);
        assert!(s.iter().all(|v| v.digits().iter().all(|&x| x == 1)));
        let r = RandomFamily {
            domain: 4,
            ..RandomFamily::boolean(8, 10, 3)
        };
        assert!(r.generate().unwrap().iter().all(|v| v.domain() == 4));
        assert!(RandomFamily::boolean(0, 1, 0).generate().is_err());
    }

    #[test]
    fn hitting_sets() {
        let h = Hypergraph::new(3, vec![vec![0, 1], vec![1, 2]]).unwrap();
        assert!(h.has_hitting_set(1));
        assert_eq!(h.complemented_family(), Family::parse_members(2, &["001", "100"]).unwrap());
        let h = Hypergraph::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert!(!h.has_hitting_set(1));
        assert!(h.has_hitting_set(2));
        let h = Hypergraph::new(2, vec![vec![]]).unwrap();
        assert!(!h.has_hitting_set(2));
        assert_eq!(Hypergraph::random(6, 4, 0.5, 9).unwrap(), Hypergraph::random(6, 4, 0.5, 9).unwrap());
    }
}
