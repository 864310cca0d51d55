//! Closure under a commutative group operation.
//!
//! The closure of a nonempty family under a finite group operation is the
//! subgroup of `D^n` it generates. Writing `D` as a direct sum of cyclic
//! groups of prime-power order turns membership into linear systems: one
//! system over `Z / p^E` per prime `p`, where `E` is the largest exponent of
//! `p` among the factors. Factors of the same prime share their unknowns,
//! so they are solved together, each equation over `Z / p^e` scaled by
//! `p^(E-e)`.

use std::collections::HashMap;

use crate::error::{Error, GroupAxiom, Result};
use crate::op::Operation;
use crate::vector::{Family, Vector};

use super::zmod;

/// A cyclic factor `Z / p^e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Factor {
    pub prime: u64,
    pub exponent: u32,
}

impl Factor {
    pub fn order(&self) -> u64 {
        self.prime.pow(self.exponent)
    }
}

#[derive(Clone, Debug)]
pub struct GroupStructure {
    op: Operation,
    identity: u8,
    inverse: Vec<u8>,
    factors: Vec<Factor>,
    /// Element to coordinates in the factors.
    coords: Vec<Vec<u64>>,
    element_of: HashMap<Vec<u64>, u8>,
}

fn prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

impl GroupStructure {
    /// Checks the axioms in order (binary, associative, commutative,
    /// identity, inverses) and computes a cyclic decomposition.
    pub fn new(op: &Operation) -> Result<Self> {
        if op.arity() != 2 {
            return Err(Error::NotAGroup(GroupAxiom::Binary));
        }
        if !op.is_associative() {
            return Err(Error::NotAGroup(GroupAxiom::Associativity));
        }
        if !op.is_commutative() {
            return Err(Error::NotAGroup(GroupAxiom::Commutativity));
        }
        let d = op.domain();
        let f = |a: u8, b: u8| op.eval(&[a, b]);
        let identity = (0..d)
            .find(|&e| (0..d).all(|x| f(e, x) == x))
            .ok_or(Error::NotAGroup(GroupAxiom::Identity))?;
        let inverse = (0..d)
            .map(|x| (0..d).find(|&y| f(x, y) == identity))
            .collect::<Option<Vec<u8>>>()
            .ok_or(Error::NotAGroup(GroupAxiom::Inverses))?;

        let multiple = |g: u8, k: u64| (0..k).fold(identity, |acc, _| f(acc, g));
        let order = |g: u8| {
            let mut x = g;
            let mut k = 1u64;
            while x != identity {
                x = f(x, g);
                k += 1;
            }
            k
        };

        let mut factors = Vec::new();
        let mut generators = Vec::new();
        for (p, e) in prime_factors(d as u64) {
            // the p-part: elements whose order is a power of p
            let part: Vec<u8> = (0..d)
                .filter(|&x| {
                    let mut o = order(x);
                    while o % p == 0 {
                        o /= p;
                    }
                    o == 1
                })
                .collect();
            let size = p.pow(e);
            debug_assert_eq!(part.len() as u64, size);
            let gens = decompose(&part, size, identity, &f, &order)
                .expect("every finite abelian p-group is a sum of cyclic groups");
            for g in gens {
                let o = order(g);
                factors.push(Factor {
                    prime: p,
                    exponent: o.trailing_zeros_base(p),
                });
                generators.push(g);
            }
        }

        // element ↦ coordinates, by enumerating every combination
        let mut coords = vec![Vec::new(); d as usize];
        let mut element_of = HashMap::new();
        let total: u64 = factors.iter().map(Factor::order).product();
        debug_assert_eq!(total, d as u64);
        for code in 0..total {
            let mut rest = code;
            let mut c = Vec::with_capacity(factors.len());
            let mut x = identity;
            for (fac, &g) in factors.iter().zip(&generators) {
                let a = rest % fac.order();
                rest /= fac.order();
                c.push(a);
                x = f(x, multiple(g, a));
            }
            coords[x as usize] = c.clone();
            element_of.insert(c, x);
        }
        debug_assert_eq!(element_of.len(), d as usize);

        Ok(GroupStructure {
            op: op.clone(),
            identity,
            inverse,
            factors,
            coords,
            element_of,
        })
    }

    pub fn operation(&self) -> &Operation {
        &self.op
    }

    pub fn identity(&self) -> u8 {
        self.identity
    }

    pub fn inverse(&self, x: u8) -> u8 {
        self.inverse[x as usize]
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    /// Coordinates of `x` in the cyclic factors.
    pub fn coordinates(&self, x: u8) -> &[u64] {
        &self.coords[x as usize]
    }

    pub fn element(&self, coords: &[u64]) -> Option<u8> {
        self.element_of.get(coords).copied()
    }

    /// `v ∈ Cl_{<f>}(S)`.
    pub fn contains(&self, s: &Family, v: &Vector) -> Result<bool> {
        s.check(v)?;
        if s.domain() != self.op.domain() {
            return Err(Error::DomainMismatch {
                expected: self.op.domain(),
                got: s.domain(),
            });
        }
        if s.is_empty() {
            return Ok(false);
        }
        Ok(self.solvable(s.members(), v.digits()))
    }

    /// Membership for the first `v.len()` coordinates only.
    pub fn contains_prefix(&self, members: &[Vector], v: &[u8]) -> bool {
        !members.is_empty() && self.solvable(members, v)
    }

    fn solvable(&self, members: &[Vector], v: &[u8]) -> bool {
        let mut primes: Vec<u64> = self.factors.iter().map(|f| f.prime).collect();
        primes.dedup();
        primes.into_iter().all(|p| {
            let top = self
                .factors
                .iter()
                .filter(|f| f.prime == p)
                .map(|f| f.exponent)
                .max()
                .unwrap();
            let mut rows = Vec::new();
            let mut rhs = Vec::new();
            for i in 0..v.len() {
                for (j, fac) in self.factors.iter().enumerate() {
                    if fac.prime != p {
                        continue;
                    }
                    let scale = p.pow(top - fac.exponent);
                    rows.push(members.iter().map(|w| self.coords[w.get(i) as usize][j] * scale).collect());
                    rhs.push(self.coords[v[i] as usize][j] * scale);
                }
            }
            zmod::solvable(p, top, rows, rhs)
        })
    }
}

trait Log {
    fn trailing_zeros_base(self, p: u64) -> u32;
}

impl Log for u64 {
    /// Exponent of `p` in `self`, for `self` a power of `p`.
    fn trailing_zeros_base(mut self, p: u64) -> u32 {
        let mut e = 0;
        while self > 1 {
            self /= p;
            e += 1;
        }
        e
    }
}

/// Generators `g_1, …, g_t` of a `p`-group with `Σ a_i g_i` a bijection from
/// `Π Z / ord(g_i)`, found by backtracking over elements of decreasing order.
fn decompose(
    part: &[u8],
    size: u64,
    identity: u8,
    f: &impl Fn(u8, u8) -> u8,
    order: &impl Fn(u8) -> u64,
) -> Option<Vec<u8>> {
    let mut candidates: Vec<u8> = part.iter().copied().filter(|&x| x != identity).collect();
    candidates.sort_by_key(|&x| std::cmp::Reverse(order(x)));
    let mut span = vec![identity];
    let mut chosen = Vec::new();
    search(&candidates, size, f, order, &mut span, &mut chosen).then_some(chosen)
}

fn search(
    candidates: &[u8],
    size: u64,
    f: &impl Fn(u8, u8) -> u8,
    order: &impl Fn(u8) -> u64,
    span: &mut Vec<u8>,
    chosen: &mut Vec<u8>,
) -> bool {
    if span.len() as u64 == size {
        return true;
    }
    for (k, &g) in candidates.iter().enumerate() {
        if span.contains(&g) {
            continue;
        }
        // <g> must meet the current span only in the identity
        let o = order(g);
        let mut x = g;
        let mut disjoint = true;
        for _ in 1..o {
            if span.contains(&x) {
                disjoint = false;
                break;
            }
            x = f(x, g);
        }
        if !disjoint {
            continue;
        }
        let saved = span.len();
        let mut next = Vec::with_capacity(saved * o as usize);
        let mut m = span[0];
        for step in 0..o {
            let shift = if step == 0 { None } else { Some(m) };
            for &y in &span[..saved] {
                next.push(shift.map_or(y, |s| f(y, s)));
            }
            m = if step == 0 { g } else { f(m, g) };
        }
        let old = std::mem::replace(span, next);
        chosen.push(g);
        if search(&candidates[k + 1..], size, f, order, span, chosen) {
            return true;
        }
        chosen.pop();
        *span = old;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::op::builtin;

    fn klein() -> Operation {
        Operation::from_fn("xor4", 4, 2, |a| a[0] ^ a[1])
    }

    #[test]
    fn decompositions() {
        let g = GroupStructure::new(&builtin::add_mod(4)).unwrap();
        assert_eq!(g.factors(), &[Factor { prime: 2, exponent: 2 }]);
        let g = GroupStructure::new(&builtin::add_mod(6)).unwrap();
        assert_eq!(
            g.factors(),
            &[Factor { prime: 2, exponent: 1 }, Factor { prime: 3, exponent: 1 }]
        );
        for x in 0..6u8 {
            let c = g.coordinates(x);
            assert_eq!(g.element(c), Some(x));
            // transports addition
            for y in 0..6u8 {
                let s = (x + y) % 6;
                let cs = g.coordinates(s);
                let cx = g.coordinates(y);
                assert_eq!(cs[0], (c[0] + cx[0]) % 2);
                assert_eq!(cs[1], (c[1] + cx[1]) % 3);
            }
        }
        let g = GroupStructure::new(&klein()).unwrap();
        assert_eq!(g.factors().len(), 2);
    }

    #[test]
    fn axiom_errors() {
        assert_eq!(
            GroupStructure::new(&builtin::capped_sum()).unwrap_err(),
            Error::NotAGroup(GroupAxiom::Inverses)
        );
        assert_eq!(
            GroupStructure::new(&builtin::maj()).unwrap_err(),
            Error::NotAGroup(GroupAxiom::Binary)
        );
        let sub = Operation::from_fn("sub", 3, 2, |a| (a[0] + 3 - a[1]) % 3);
        assert_eq!(
            GroupStructure::new(&sub).unwrap_err(),
            Error::NotAGroup(GroupAxiom::Associativity)
        );
    }

    #[test]
    fn membership() {
        let g = GroupStructure::new(&builtin::add_mod(3)).unwrap();
        let s = Family::parse_members(3, &["12", "21"]).unwrap();
        assert!(g.contains(&s, &Vector::parse("12", 3).unwrap()).unwrap());
        assert!(!g.contains(&s, &Vector::parse("11", 3).unwrap()).unwrap());
        assert!(g.contains(&s, &Vector::parse("00", 3).unwrap()).unwrap());

        let g = GroupStructure::new(&klein()).unwrap();
        let s = Family::parse_members(4, &["3"]).unwrap();
        assert!(!g.contains(&s, &Vector::parse("1", 4).unwrap()).unwrap());
        assert!(g.contains(&s, &Vector::parse("0", 4).unwrap()).unwrap());
    }
}
