use nqf_core::braided::{NcWord, Pairing};
use nqf_core::{CartanType, RootSystem};
use proptest::prelude::*;

fn word(m: usize, len: usize) -> impl Strategy<Value = NcWord> {
    prop::collection::vec(0..m as u16, len).prop_map(NcWord)
}

fn pairs(m: usize) -> impl Strategy<Value = (NcWord, NcWord)> {
    (1usize..=5).prop_flat_map(move |k| (word(m, k), word(m, k)))
}

proptest! {
    #[test]
    fn both_recursions_agree_in_b2((xi, x) in pairs(4)) {
        let rs = RootSystem::new(CartanType::B, 2).unwrap();
        let p = Pairing::new(&rs);
        prop_assert_eq!(p.pair_words(&xi, &x), p.pair_by_x(&xi, &x));
    }

    #[test]
    fn both_recursions_agree_in_a3((xi, x) in pairs(6)) {
        let rs = RootSystem::new(CartanType::A, 3).unwrap();
        let p = Pairing::new(&rs);
        prop_assert_eq!(p.pair_words(&xi, &x), p.pair_by_x(&xi, &x));
    }

    #[test]
    fn weyl_invariance_in_b2((xi, x) in pairs(4), i in 0usize..2) {
        let rs = RootSystem::new(CartanType::B, 2).unwrap();
        let p = Pairing::new(&rs);
        let s = rs.simple_reflection(i);
        let (a, wxi) = xi.act(s);
        let (b, wx) = x.act(s);
        let lhs = p.pair_words(&wxi, &wx);
        let lhs = if a * b < 0 { -lhs } else { lhs };
        prop_assert_eq!(lhs, p.pair_words(&xi, &x));
    }
}

#[test]
fn pairing_is_graded() {
    let rs = RootSystem::new(CartanType::A, 2).unwrap();
    let p = Pairing::new(&rs);
    assert!(p.pair_words(&NcWord(vec![0, 1]), &NcWord(vec![0])).is_zero());
    assert!(p.pair_words(&NcWord(vec![]), &NcWord(vec![])).is_one());
}
