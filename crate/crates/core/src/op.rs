//! Finite operations given by truth tables, applied coefficient-wise.

use std::fmt;

use crate::error::{Error, Result};
use crate::vector::{Vector, MAX_DOMAIN};

/// A total operation `f: D^t → D` stored as a truth table.
///
/// The table is indexed by the argument tuple read as a base-`d` number with
/// the first argument most significant.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Operation {
    name: String,
    arity: usize,
    domain: u8,
    table: Vec<u8>,
}

impl Operation {
    pub fn from_table(name: impl Into<String>, domain: u8, arity: usize, table: Vec<u8>) -> Result<Self> {
        let name = name.into();
        if !(2..=MAX_DOMAIN).contains(&domain) {
            return Err(Error::BadDomain(domain));
        }
        if arity == 0 {
            return Err(Error::BadOperation {
                name,
                msg: "arity must be at least 1".into(),
            });
        }
        let expected = (domain as usize).checked_pow(arity as u32);
        if expected != Some(table.len()) {
            return Err(Error::BadOperation {
                name,
                msg: format!("table has {} entries, expected {domain}^{arity}", table.len()),
            });
        }
        if let Some(&value) = table.iter().find(|&&x| x >= domain) {
            return Err(Error::ValueOutOfDomain { value, domain });
        }
        Ok(Operation {
            name,
            arity,
            domain,
            table,
        })
    }

    /// Tabulates `f` over every argument tuple.
    pub fn from_fn(name: impl Into<String>, domain: u8, arity: usize, f: impl Fn(&[u8]) -> u8) -> Self {
        let size = (domain as usize).pow(arity as u32);
        let mut args = vec![0u8; arity];
        let table = (0..size)
            .map(|code| {
                decode_tuple(code, domain, &mut args);
                f(&args)
            })
            .collect();
        Operation::from_table(name, domain, arity, table).expect("tabulated operation is well formed")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn domain(&self) -> u8 {
        self.domain
    }

    pub fn table(&self) -> &[u8] {
        &self.table
    }

    #[inline]
    pub fn eval(&self, args: &[u8]) -> u8 {
        debug_assert_eq!(args.len(), self.arity);
        let d = self.domain as usize;
        let code = args.iter().fold(0usize, |acc, &x| acc * d + x as usize);
        self.table[code]
    }

    /// Applies the operation coordinate by coordinate.
    pub fn apply(&self, args: &[&Vector]) -> Result<Vector> {
        if args.len() != self.arity {
            return Err(Error::ArityMismatch {
                name: self.name.clone(),
                expected: self.arity,
                got: args.len(),
            });
        }
        let len = args[0].len();
        for a in args {
            if a.domain() != self.domain {
                return Err(Error::DomainMismatch {
                    expected: self.domain,
                    got: a.domain(),
                });
            }
            if a.len() != len {
                return Err(Error::LengthMismatch {
                    expected: len,
                    got: a.len(),
                });
            }
        }
        Ok(self.apply_unchecked(args))
    }

    pub(crate) fn apply_unchecked(&self, args: &[&Vector]) -> Vector {
        let d = self.domain as usize;
        let len = args[0].len();
        let digits = (0..len)
            .map(|i| {
                let code = args.iter().fold(0usize, |acc, a| acc * d + a.get(i) as usize);
                self.table[code]
            })
            .collect();
        Vector::from_digits_unchecked(digits, self.domain)
    }

    /// `f̄(x…) = ¬f(¬x…)`; boolean only.
    pub fn dual(&self) -> Result<Operation> {
        if self.domain != 2 {
            return Err(Error::NotBoolean(self.domain));
        }
        let f = self.clone();
        Ok(Operation::from_fn(format!("dual({})", self.name), 2, self.arity, move |a| {
            let neg: Vec<u8> = a.iter().map(|&x| 1 - x).collect();
            1 - f.eval(&neg)
        }))
    }

    /// Iterates over every argument tuple together with its value.
    pub fn entries(&self) -> impl Iterator<Item = (Vec<u8>, u8)> + '_ {
        let mut args = vec![0u8; self.arity];
        self.table.iter().enumerate().map(move |(code, &out)| {
            decode_tuple(code, self.domain, &mut args);
            (args.clone(), out)
        })
    }

    pub fn is_idempotent(&self) -> bool {
        (0..self.domain).all(|x| self.eval(&vec![x; self.arity]) == x)
    }

    pub fn is_associative(&self) -> bool {
        if self.arity != 2 {
            return false;
        }
        let d = self.domain;
        (0..d).all(|x| {
            (0..d).all(|y| {
                (0..d).all(|z| {
                    self.eval(&[self.eval(&[x, y]), z]) == self.eval(&[x, self.eval(&[y, z])])
                })
            })
        })
    }

    pub fn is_commutative(&self) -> bool {
        self.arity == 2
            && (0..self.domain).all(|x| (0..self.domain).all(|y| self.eval(&[x, y]) == self.eval(&[y, x])))
    }
}

fn decode_tuple(mut code: usize, domain: u8, out: &mut [u8]) {
    let d = domain as usize;
    for slot in out.iter_mut().rev() {
        *slot = (code % d) as u8;
        code /= d;
    }
}

impl fmt::Debug for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Operation({}, d={}, arity={})", self.name, self.domain, self.arity)
    }
}

/// Operations used as clone generators and in tests.
pub mod builtin {
    use super::Operation;

    pub fn and() -> Operation {
        Operation::from_fn("and", 2, 2, |a| a[0] & a[1])
    }

    pub fn or() -> Operation {
        Operation::from_fn("or", 2, 2, |a| a[0] | a[1])
    }

    /// `x + y` over GF(2).
    pub fn xor() -> Operation {
        Operation::from_fn("xor", 2, 2, |a| a[0] ^ a[1])
    }

    /// `x + y + z` over GF(2).
    pub fn xor3() -> Operation {
        Operation::from_fn("xor3", 2, 3, |a| a[0] ^ a[1] ^ a[2])
    }

    pub fn not() -> Operation {
        Operation::from_fn("not", 2, 1, |a| 1 - a[0])
    }

    pub fn maj() -> Operation {
        Operation::from_fn("maj", 2, 3, |a| ((a[0] + a[1] + a[2]) >= 2) as u8)
    }

    /// The unary constant map `x ↦ c`.
    pub fn constant(c: u8) -> Operation {
        Operation::from_fn(format!("const{c}"), 2, 1, move |_| c)
    }

    /// `Th_k^{k+1}`: arity `k+1`, true iff at least `k` arguments are 1.
    pub fn threshold(k: usize) -> Operation {
        Operation::from_fn(format!("th{k}"), 2, k + 1, move |a| {
            (a.iter().filter(|&&x| x == 1).count() >= k) as u8
        })
    }

    /// `x ∧ (y ∨ z)`.
    pub fn and_or() -> Operation {
        Operation::from_fn("and_or", 2, 3, |a| a[0] & (a[1] | a[2]))
    }

    /// `x ∧ (y → z)`.
    pub fn and_implies() -> Operation {
        Operation::from_fn("and_implies", 2, 3, |a| a[0] & ((1 - a[1]) | a[2]))
    }

    /// `x ? y : z`.
    pub fn ite() -> Operation {
        Operation::from_fn("ite", 2, 3, |a| if a[0] == 1 { a[1] } else { a[2] })
    }

    /// `min(x + y, 2)` over `{0, 1, 2}`.
    pub fn capped_sum() -> Operation {
        Operation::from_fn("capped_sum", 3, 2, |a| (a[0] + a[1]).min(2))
    }

    /// Returns `y` if `y = z`, else `x`.
    pub fn dual_discriminator(d: u8) -> Operation {
        Operation::from_fn("dual_discriminator", d, 3, |a| if a[1] == a[2] { a[1] } else { a[0] })
    }

    pub fn add_mod(d: u8) -> Operation {
        Operation::from_fn(format!("add_mod{d}"), d, 2, move |a| (a[0] + a[1]) % d)
    }
}

#[cfg(test)]
mod tests {
    use super::builtin::*;
    use super::*;

    fn v(s: &str, d: u8) -> Vector {
        Vector::parse(s, d).unwrap()
    }

    #[test]
    fn applies_coefficient_wise() {
        assert_eq!(and().apply(&[&v("1101", 2), &v("1010", 2)]).unwrap(), v("1000", 2));
        assert_eq!(
            maj().apply(&[&v("110", 2), &v("011", 2), &v("101", 2)]).unwrap(),
            v("111", 2)
        );
        assert_eq!(capped_sum().apply(&[&v("12", 3), &v("21", 3)]).unwrap(), v("22", 3));
    }

    #[test]
    fn apply_rejects_mismatches() {
        assert!(matches!(
            and().apply(&[&v("11", 2), &v("1", 2)]),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(
            and().apply(&[&v("11", 3), &v("11", 3)]),
            Err(Error::DomainMismatch { .. })
        ));
        assert!(matches!(and().apply(&[&v("11", 2)]), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn table_validation() {
        assert!(Operation::from_table("f", 2, 2, vec![0, 1, 1]).is_err());
        assert!(Operation::from_table("f", 2, 1, vec![0, 2]).is_err());
        assert!(Operation::from_table("f", 2, 0, vec![0]).is_err());
    }

    #[test]
    fn duals() {
        assert_eq!(and().dual().unwrap().table(), or().table());
        assert_eq!(maj().dual().unwrap().table(), maj().table());
        assert_eq!(xor3().dual().unwrap().table(), xor3().table());
        assert_ne!(xor().dual().unwrap().table(), xor().table());
        assert!(capped_sum().dual().is_err());
    }

    #[test]
    fn threshold_two_is_majority() {
        assert_eq!(threshold(2).table(), maj().table());
        assert_eq!(threshold(3).arity(), 4);
    }

    #[test]
    fn algebraic_properties() {
        assert!(capped_sum().is_associative());
        assert!(capped_sum().is_commutative());
        assert!(add_mod(6).is_associative());
        assert!(!ite().is_associative());
        assert!(maj().is_idempotent());
        assert!(!xor().is_idempotent());
    }
}
