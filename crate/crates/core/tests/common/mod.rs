//! Naive closure computed from plain closures over digit strings, kept
//! separate from the library so that it can check it.

#![allow(dead_code)]

use std::collections::BTreeSet;

pub struct NaiveOp {
    pub arity: usize,
    pub f: Box<dyn Fn(&[u8]) -> u8>,
}

pub fn op(arity: usize, f: impl Fn(&[u8]) -> u8 + 'static) -> NaiveOp {
    NaiveOp { arity, f: Box::new(f) }
}

pub fn and() -> NaiveOp {
    op(2, |a| a[0] & a[1])
}
pub fn or() -> NaiveOp {
    op(2, |a| a[0] | a[1])
}
pub fn xor() -> NaiveOp {
    op(2, |a| a[0] ^ a[1])
}
pub fn xor3() -> NaiveOp {
    op(3, |a| a[0] ^ a[1] ^ a[2])
}
pub fn not() -> NaiveOp {
    op(1, |a| 1 - a[0])
}
pub fn maj() -> NaiveOp {
    op(3, |a| u8::from(a[0] + a[1] + a[2] >= 2))
}
pub fn th(k: usize) -> NaiveOp {
    op(k + 1, move |a| u8::from(a.iter().filter(|&&x| x == 1).count() >= k))
}
pub fn and_or() -> NaiveOp {
    op(3, |a| a[0] & (a[1] | a[2]))
}
pub fn and_implies() -> NaiveOp {
    op(3, |a| a[0] & ((1 - a[1]) | a[2]))
}
pub fn ite() -> NaiveOp {
    op(3, |a| if a[0] == 1 { a[1] } else { a[2] })
}

/// Applies every operation to every tuple of known vectors until nothing
/// new appears.
pub fn closure(ops: &[NaiveOp], s: &[&str]) -> BTreeSet<String> {
    let mut known: BTreeSet<Vec<u8>> = s.iter().map(|v| v.bytes().map(|b| b - b'0').collect()).collect();
    loop {
        let list: Vec<Vec<u8>> = known.iter().cloned().collect();
        let before = known.len();
        if list.is_empty() {
            return BTreeSet::new();
        }
        for o in ops {
            let tuples = list.len().pow(o.arity as u32);
            for code in 0..tuples {
                let mut c = code;
                let args: Vec<&Vec<u8>> = (0..o.arity)
                    .map(|_| {
                        let a = &list[c % list.len()];
                        c /= list.len();
                        a
                    })
                    .collect();
                let n = args[0].len();
                let out: Vec<u8> = (0..n)
                    .map(|i| (o.f)(&args.iter().map(|a| a[i]).collect::<Vec<_>>()))
                    .collect();
                known.insert(out);
            }
        }
        if known.len() == before {
            return known
                .into_iter()
                .map(|v| v.iter().map(|&x| char::from(b'0' + x)).collect())
                .collect();
        }
    }
}

pub fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}
