use std::collections::HashSet;

use polyclose::format::{parse_instance, render_instance};
use polyclose::oracle::{saturate, DEFAULT_BUDGET};
use polyclose::vector::project;
use polyclose::{builtin, resolve, Base, CloneSpec, Family, IndexSet, Modifiers, Vector};
use polyclose::Strategy as Search;
use proptest::prelude::*;

fn family(max_len: usize, max_size: usize, domain: u8) -> impl Strategy<Value = Family> {
    (1..=max_len).prop_flat_map(move |len| {
        prop::collection::vec(prop::collection::vec(0..domain, len), 1..=max_size)
            .prop_map(move |rows| Family::new(len, domain, rows.into_iter().map(|r| Vector::new(r, domain).unwrap())).unwrap())
    })
}

fn subset(len: usize) -> impl Strategy<Value = IndexSet> {
    prop::collection::vec(any::<bool>(), len)
        .prop_map(move |mask| IndexSet::new((0..mask.len()).filter(|&i| mask[i]).collect(), mask.len()).unwrap())
}

fn clone_spec() -> impl Strategy<Value = CloneSpec> {
    let specs: Vec<CloneSpec> = Base::all(&[2, 3])
        .into_iter()
        .flat_map(|b| Modifiers::legal_for(b).into_iter().map(move |m| CloneSpec::named(b, m).unwrap()))
        .collect();
    prop::sample::select(specs)
}

proptest! {
    #[test]
    fn projections_compose(
        (s, outer, inner) in family(7, 5, 3)
            .prop_flat_map(|s| {
                let len = s.len();
                (Just(s), subset(len))
            })
            .prop_flat_map(|(s, outer)| {
                let len = outer.len();
                (Just(s), Just(outer), subset(len))
            })
    ) {
        let twice = project(&project(&s, &outer).unwrap(), &inner).unwrap();
        let once = project(&s, &outer.compose(&inner).unwrap()).unwrap();
        prop_assert_eq!(twice, once);
    }

    #[test]
    fn render_then_parse_is_identity(s in family(8, 6, 5)) {
        prop_assert_eq!(parse_instance(&render_instance(&s)).unwrap(), s);
    }

    #[test]
    fn operations_stay_in_the_domain(s in family(6, 4, 6)) {
        let ops = [builtin::add_mod(6), builtin::dual_discriminator(6)];
        let members = s.members();
        for op in &ops {
            let args: Vec<&Vector> = (0..op.arity()).map(|i| &members[i % members.len()]).collect();
            let out = op.apply(&args).unwrap();
            prop_assert!(out.digits().iter().all(|&x| x < 6));
        }
    }

    #[test]
    fn closures_are_closed_and_idempotent(spec in clone_spec(), s in family(5, 4, 2)) {
        let p = resolve(&spec, &s).unwrap();
        let fast: HashSet<Vector> = p.enumerate(Search::Fast).unwrap().map(|v| v.unwrap()).collect();
        let generic: HashSet<Vector> = p.enumerate(Search::Generic).unwrap().map(|v| v.unwrap()).collect();
        prop_assert_eq!(&fast, &generic);
        for v in s.iter() {
            prop_assert!(fast.contains(v));
        }
        let closure = Family::new(s.len(), 2, fast.iter().cloned()).unwrap();
        let again = saturate(&spec.generators().unwrap(), &closure, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(again.to_set(), fast);
    }
}
