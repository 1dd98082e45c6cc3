use nqf_core::braided::Pairing;
use nqf_core::{BElem, CartanType, NicholsBasis, RingElem, RootSystem};

fn full(kind: CartanType, rank: usize) -> (RootSystem, NicholsBasis) {
    let rs = RootSystem::new(kind, rank).unwrap();
    let nb = NicholsBasis::build(&rs, None);
    (rs, nb)
}

fn basis_elems(nb: &NicholsBasis) -> impl Iterator<Item = BElem> + '_ {
    (0..=nb.top_degree()).flat_map(move |k| (0..nb.dim(k)).map(move |i| BElem::basis(k, i)))
}

fn pair(p: &Pairing<'_>, nb: &NicholsBasis, a: &BElem, b: &BElem) -> RingElem {
    p.pair(&nb.to_ncpoly(a), &nb.to_ncpoly(b))
}

#[test]
fn hilbert_series_of_small_instances() {
    let cases: [(CartanType, usize, &[usize]); 4] = [
        (CartanType::A, 1, &[1, 1]),
        (CartanType::A, 2, &[1, 3, 4, 3, 1]),
        (CartanType::B, 2, &[1, 4, 8, 12, 14, 12, 8, 4, 1]),
        (CartanType::A, 3, &[1, 6, 19, 42, 71, 96, 106, 96, 71, 42, 19, 6, 1]),
    ];
    for (kind, rank, dims) in cases {
        let (_, nb) = full(kind, rank);
        assert!(nb.is_complete());
        assert_eq!(nb.hilbert_series(), dims, "{kind}{rank}");
    }
}

#[test]
fn total_dimension_of_a3() {
    let (_, nb) = full(CartanType::A, 3);
    assert_eq!(nb.total_dim(), 576);
    assert_eq!(nb.top_degree(), 12);
}

#[test]
fn derivations_square_to_zero() {
    for (kind, rank) in [(CartanType::A, 2), (CartanType::B, 2), (CartanType::A, 3)] {
        let (rs, nb) = full(kind, rank);
        for a in 0..rs.num_positive() {
            for x in basis_elems(&nb) {
                let once = nb.dbar(a, &x).unwrap();
                assert!(nb.dbar(a, &once).unwrap().is_zero(), "{kind}{rank} root {a}");
            }
        }
    }
}

#[test]
fn generators_square_to_zero() {
    let (rs, nb) = full(CartanType::B, 2);
    for a in 0..rs.num_positive() {
        let g = BElem::basis(1, nb.word_index(&nqf_core::braided::NcWord(vec![a as u16])).unwrap().1);
        assert!(nb.multiply(&g, &g).unwrap().is_zero());
    }
}

#[test]
fn right_derivation_is_adjoint_to_right_multiplication() {
    let (rs, nb) = full(CartanType::B, 2);
    let p = Pairing::new(&rs);
    for k in 1..=nb.top_degree() {
        for i in 0..nb.dim(k) {
            let x = BElem::basis(k, i);
            for b in 0..rs.num_positive() {
                let dx = nb.pairing_derivation(b, &x);
                for j in 0..nb.dim(k - 1) {
                    let xi = BElem::basis(k - 1, j);
                    let xib = nb.right_mul_generator(&xi, b).unwrap();
                    assert_eq!(pair(&p, &nb, &xib, &x), pair(&p, &nb, &xi, &dx));
                }
            }
        }
    }
}

#[test]
fn top_degree_pairs_perfectly() {
    for (kind, rank) in [(CartanType::A, 2), (CartanType::B, 2), (CartanType::A, 3)] {
        let (_, nb) = full(kind, rank);
        let top = nb.top_degree();
        for k in 0..=top {
            assert_eq!(nb.dim(k), nb.dim(top - k));
        }
        let g = nb.basis_gram(top);
        assert_eq!(g.len(), 1);
        assert!(!g[0].is_zero());
    }
}

#[test]
fn normal_form_is_multiplicative() {
    let (_, nb) = full(CartanType::A, 3);
    let words: Vec<BElem> = (0..nb.dim(2)).step_by(3).map(|i| BElem::basis(2, i)).collect();
    for a in &words {
        for b in &words {
            let ab = nb.multiply(a, b).unwrap();
            let direct = nb.normal_form(&nb.to_ncpoly(a).mul(&nb.to_ncpoly(b))).unwrap();
            assert_eq!(ab, direct);
        }
    }
}

#[test]
fn truncated_build_reports_overflow() {
    let rs = RootSystem::new(CartanType::B, 3).unwrap();
    let nb = NicholsBasis::build(&rs, Some(3));
    assert!(!nb.is_complete());
    let top = BElem::basis(3, 0);
    assert!(nb.left_mul_generator(0, &top).is_err());
}
