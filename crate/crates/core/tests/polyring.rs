use nqf_core::polyring::{self, Basis, Constants};
use nqf_core::quantum;
use nqf_core::{CartanType, CPoly, NicholsBasis, Rational, RingElem, RootSystem};

fn omega_monomials(n: usize, max: usize) -> Vec<CPoly> {
    (0..=max)
        .flat_map(|d| quantum::monomials(n, d))
        .map(|e| CPoly::monomial(Basis::Omega, e, RingElem::one()))
        .collect()
}

/// `D̄_{α_i} μ(f) = c_{α_i} μ(∂_i f)`, and the same with the right derivation.
fn derivations_intertwine(rs: &RootSystem, c: &Constants, max: usize) {
    let nb = NicholsBasis::build(rs, None);
    for f in omega_monomials(rs.rank, max) {
        let mf = polyring::mu(&nb, c, &f).unwrap();
        for i in 0..rs.rank {
            let a = rs.simple_index(i);
            let rhs = polyring::mu(&nb, c, &polyring::demazure(rs, i, &f).unwrap())
                .unwrap()
                .scale(&RingElem::constant(c.get(a).clone()));
            assert_eq!(nb.dbar(a, &mf).unwrap(), rhs, "left, {f}, i={i}");
            assert_eq!(nb.dbar_right(a, &mf).unwrap(), rhs, "right, {f}, i={i}");
        }
    }
}

#[test]
fn derivations_intertwine_in_a2() {
    let rs = RootSystem::new(CartanType::A, 2).unwrap();
    derivations_intertwine(&rs, &Constants::uniform(&rs), 4);
}

#[test]
fn derivations_intertwine_in_b2_with_unequal_constants() {
    let rs = RootSystem::new(CartanType::B, 2).unwrap();
    let c = Constants::by_length(&rs, Rational::from_int(3), Rational::new(1, 2)).unwrap();
    derivations_intertwine(&rs, &c, 4);
}

#[test]
fn invariants_map_to_zero() {
    for (kind, rank) in [(CartanType::A, 2), (CartanType::B, 2), (CartanType::A, 3)] {
        let rs = RootSystem::new(kind, rank).unwrap();
        let nb = NicholsBasis::build(&rs, None);
        let c = Constants::uniform(&rs);
        for inv in polyring::classical_invariants(&rs) {
            assert!(polyring::mu(&nb, &c, &inv).unwrap().is_zero(), "{kind}{rank}: {inv}");
        }
    }
}

#[test]
fn demazure_of_bgg_top_walks_to_one() {
    let rs = RootSystem::new(CartanType::B, 2).unwrap();
    let weyl = rs.enumerate_weyl(nqf_core::roots::DEFAULT_WEYL_BOUND).unwrap();
    let top = polyring::bgg_top(&rs, Basis::Omega, weyl.len());
    let unit = polyring::demazure_w(&rs, &rs.longest_element(), &top).unwrap();
    assert_eq!(unit, CPoly::one(Basis::Omega, 2));
}

#[test]
fn schubert_polynomials_of_s3() {
    let rs = RootSystem::new(CartanType::A, 2).unwrap();
    let s1 = polyring::schubert_poly_a(&rs, &rs.from_word(&[0])).unwrap();
    assert_eq!(s1.to_string(), "x1");
    // s2·s1 is the permutation 312, s1·s2 is 231.
    let s312 = polyring::schubert_poly_a(&rs, &rs.from_word(&[1, 0])).unwrap();
    assert_eq!(s312.to_string(), "x1^2");
    let s231 = polyring::schubert_poly_a(&rs, &rs.from_word(&[0, 1])).unwrap();
    assert_eq!(s231.to_string(), "x1*x2");
}
