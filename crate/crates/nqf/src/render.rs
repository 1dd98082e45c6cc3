//! Human-readable forms of engine values.

use nqf_core::braided::NcWord;
use nqf_core::polyring::{self, Basis, CPoly};
use nqf_core::quantum;
use nqf_core::{BElem, CartanType, NicholsBasis, RingElem, RootSystem};

/// `[a1][a1+a2]`; the empty word prints as `1`.
pub fn word(rs: &RootSystem, w: &NcWord) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.letters().map(|a| format!("[{}]", rs.root_label(a))).collect()
}

/// Coefficient renderer; type B uses the ambient display map for q.
pub fn ring(rs: &RootSystem, c: &RingElem) -> String {
    if rs.kind == CartanType::B {
        quantum::display_ring(rs, c)
    } else {
        c.to_string()
    }
}

/// Element of `B(V)` as a sum of basis words.
pub fn belem(nb: &NicholsBasis, x: &BElem) -> String {
    let rs = nb.root_system();
    if x.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = x
        .terms()
        .map(|(d, i, c)| {
            let w = word(rs, &nb.basis_words(d)[i]);
            let cs = ring(rs, c);
            if c.is_one() {
                w
            } else if c.terms().len() == 1 {
                format!("{cs}*{w}")
            } else {
                format!("({cs})*{w}")
            }
        })
        .collect();
    parts.join(" + ")
}

/// Polynomial in ω-coordinates.
pub fn omega(rs: &RootSystem, f: &CPoly) -> String {
    polyring::to_basis(rs, f, Basis::Omega).display_full("w", &|c| ring(rs, c))
}

/// Polynomial in ambient coordinates (`x` in type A, `e` otherwise).
pub fn ambient(rs: &RootSystem, f: &CPoly) -> String {
    polyring::to_basis(rs, f, Basis::Ambient).display_full(polyring::ambient_var(rs), &|c| ring(rs, c))
}
