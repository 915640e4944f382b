use std::sync::OnceLock;

use proptest::prelude::*;

use revlib::gate::r_roles;
use revlib::perm::{decode, encode, StateIndex};
use revlib::qopt::{decompose_to_elementary, optimize, Unitary};
use revlib::rank::RankSpace;
use revlib::synth::{min_length_table, SearchTable};
use revlib::{Circuit, Library, Permutation};

fn perm3() -> impl Strategy<Value = Permutation> {
    Just((1..=8u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(3, &v).unwrap())
}

fn nct() -> &'static (Library, SearchTable) {
    static CELL: OnceLock<(Library, SearchTable)> = OnceLock::new();
    CELL.get_or_init(|| {
        let lib = Library::named("NCT").unwrap();
        let table = min_length_table(&lib).unwrap();
        (lib, table)
    })
}

fn nct_circuit() -> impl Strategy<Value = Circuit> {
    let n = nct().0.len();
    prop::collection::vec(0..n, 0..=6).prop_map(|idx| {
        let gates = idx.into_iter().map(|i| nct().0.gates()[i].clone()).collect();
        Circuit::new(3, gates).unwrap()
    })
}

proptest! {
    #[test]
    fn inverse_cancels(p in perm3()) {
        prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
        prop_assert!(p.inverse().compose(&p).unwrap().is_identity());
    }

    #[test]
    fn compose_is_associative(p in perm3(), q in perm3(), r in perm3()) {
        let left = p.compose(&q).unwrap().compose(&r).unwrap();
        let right = p.compose(&q.compose(&r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn compose_applies_left_first(p in perm3(), q in perm3(), s in 1u32..=8) {
        let s = StateIndex::new(s, 3).unwrap();
        let pq = p.compose(&q).unwrap();
        prop_assert_eq!(pq.apply(s).unwrap(), q.apply(p.apply(s).unwrap()).unwrap());
    }

    #[test]
    fn cycle_text_round_trip(p in perm3()) {
        prop_assert_eq!(Permutation::from_cycles(&p.to_cycles(), 3).unwrap(), p);
    }

    #[test]
    fn rank_round_trip(p in perm3(), r in 0u32..40320) {
        let space = RankSpace::new(3).unwrap();
        prop_assert_eq!(space.perm_of(space.rank_of(&p)), p);
        prop_assert_eq!(space.rank_of(&space.perm_of(r)), r);
    }

    #[test]
    fn bits_round_trip(s in 1u32..=8) {
        let s = StateIndex::new(s, 3).unwrap();
        prop_assert_eq!(encode(&decode(s, 3).unwrap()).unwrap(), s);
    }

    #[test]
    fn reconstruct_is_minimal_and_correct(p in perm3()) {
        let (_, table) = nct();
        let c = table.reconstruct(&p).unwrap();
        prop_assert_eq!(c.permutation().unwrap(), p.clone());
        prop_assert_eq!(Some(c.len() as u32), table.value(&p));
    }

    #[test]
    fn roles_are_an_involution(label in Just(vec![1u8, 2, 3, 4, 5]).prop_shuffle(), k in 3usize..=5) {
        let label: Vec<u8> = label.into_iter().take(k).collect();
        let roles = r_roles(&label);
        let mut a = label.clone();
        let mut b = roles.clone();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
        prop_assert_eq!(r_roles(&roles), label);
    }

    #[test]
    fn optimized_circuits_realize_their_function(c in nct_circuit()) {
        let opt = optimize(&c).unwrap();
        let plain = decompose_to_elementary(&c).unwrap();
        prop_assert!(opt.circuit.cost() <= plain.cost());
        prop_assert_eq!(opt.circuit.unitary(), Unitary::from_permutation(&c.permutation().unwrap()));
    }
}
