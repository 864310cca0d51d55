//! Every resolved decider and enumerator agrees with plain saturation.

use polyclose::generate::RandomFamily;
use polyclose::oracle::{all_vectors, equivalence_harness, DEFAULT_BUDGET};
use polyclose::{Base, CloneSpec, Error, Family, Modifiers};

fn specs() -> Vec<CloneSpec> {
    let mut out = Vec::new();
    for base in Base::all(&[2, 3]) {
        for m in Modifiers::legal_for(base) {
            out.push(CloneSpec::named(base, m).unwrap());
        }
    }
    out
}

fn check(spec: &CloneSpec, s: &Family) {
    match equivalence_harness(spec, s, DEFAULT_BUDGET) {
        Ok(report) => assert!(report.is_clean(), "{spec} on {:?}: {report:?}", s.members()),
        Err(Error::EmptyFamily) => assert!(s.is_empty()),
        Err(e) => panic!("{spec} on {:?}: {e}", s.members()),
    }
}

/// All families of up to `max_size` vectors of length `len`, empty included.
fn families(len: usize, max_size: usize) -> Vec<Family> {
    let all: Vec<_> = all_vectors(len, 2).collect();
    let mut out = vec![Family::empty(len, 2)];
    let mut frontier: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..max_size {
        let mut next = Vec::new();
        for set in &frontier {
            let start = set.last().map_or(0, |&x| x + 1);
            for k in start..all.len() {
                let mut grown = set.clone();
                grown.push(k);
                out.push(Family::new(len, 2, grown.iter().map(|&i| all[i].clone())).unwrap());
                next.push(grown);
            }
        }
        frontier = next;
    }
    out
}

#[test]
fn exhaustive_up_to_three_coordinates() {
    let specs = specs();
    for len in 1..=3 {
        for s in families(len, 3) {
            for spec in &specs {
                check(spec, &s);
            }
        }
    }
}

#[test]
fn random_families() {
    let specs = specs();
    for seed in 0..40u64 {
        let len = 4 + (seed % 2) as usize;
        let size = 1 + (seed % 4) as usize;
        let s = RandomFamily::boolean(len, size, seed).generate().unwrap();
        for spec in &specs {
            check(spec, &s);
        }
    }
}

fn random_family(len: usize, size: usize, domain: u8, seed: u64) -> Family {
    RandomFamily {
        density: 0.7,
        domain,
        ..RandomFamily::boolean(len, size, seed)
    }
    .generate()
    .unwrap()
}

#[test]
fn explicit_operation_sets() {
    use polyclose::builtin;
    let cases = [
        (vec![builtin::dual_discriminator(3)], 3, 5),
        (vec![builtin::add_mod(4)], 4, 4),
        (vec![builtin::add_mod(6)], 6, 3),
        (vec![builtin::capped_sum()], 3, 5),
        (vec![builtin::maj(), builtin::xor()], 2, 5),
    ];
    for (ops, domain, max_len) in cases {
        let spec = CloneSpec::explicit(ops).unwrap();
        for seed in 0..30u64 {
            let len = 1 + (seed as usize % max_len);
            let s = random_family(len, 1 + (seed % 3) as usize, domain, seed);
            check(&spec, &s);
        }
    }
}

#[test]
fn harness_notices_a_wrong_decider() {
    use polyclose::oracle::compare_decider;
    let s = Family::parse_members(2, &["110", "011"]).unwrap();
    let closure = polyclose::oracle::saturate(&[polyclose::builtin::and()], &s, DEFAULT_BUDGET)
        .unwrap()
        .to_set();
    let problem = polyclose::resolve(&"E2".parse().unwrap(), &s).unwrap();
    let faulty = |v: &polyclose::Vector| {
        if v.digits().iter().all(|&x| x == 1) {
            Ok(true)
        } else {
            problem.decide(v)
        }
    };
    let mismatches = compare_decider(3, 2, &closure, faulty).unwrap();
    assert_eq!(mismatches.len(), 1);
    assert_eq!(mismatches[0].vector.to_string(), "111");
}
