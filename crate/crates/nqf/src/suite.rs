//! The identity checks behind `nqf verify`.

use std::time::Instant;

use nqf_core::braided::{all_words, Pairing};
use nqf_core::linalg::{self, SparseVec};
use nqf_core::polyring::{self, Basis, CPoly, Constants};
use nqf_core::quantum::{self, BnGen, GradedOperator, QuantumEngine, YOperators};
use nqf_core::{BElem, CartanType, MonomialImages, NicholsBasis, Rational, RingElem, RootSystem};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::cache::{self, CacheOutcome};
use crate::config::EngineConfig;
use crate::render;
use crate::report::{CheckReport, Status};
use crate::NqfError;

/// Names accepted by `verify`, in report order.
pub const CHECKS: &[&str] = &[
    "bn-relations",
    "corollary",
    "coxeter",
    "graded-ranks",
    "hilbert",
    "lemma2",
    "prop1",
    "prop1-sets",
    "prop2",
    "prop3",
];

/// Random samples per randomized identity.
pub const SAMPLES: usize = 100;

/// Largest word count for which the all-words Gram oracle is evaluated.
const ORACLE_WORDS: usize = 729;

/// A configured root system with its Nichols basis.
pub struct Engine {
    pub cfg: EngineConfig,
    pub rs: RootSystem,
    pub nb: NicholsBasis,
    pub constants: Constants,
    pub cache: CacheOutcome,
}

impl Engine {
    pub fn new(cfg: EngineConfig) -> Result<Self, NqfError> {
        let rs = cfg.root_system()?;
        let constants = cfg.constants(&rs)?;
        let (nb, cache) = cache::load_or_build(&cfg, &rs)?;
        Ok(Engine { cfg, rs, nb, constants, cache })
    }

    /// Highest Nichols degree whose elements are fully known.
    pub fn degree_limit(&self) -> usize {
        if self.nb.is_complete() {
            self.nb.top_degree()
        } else {
            self.nb.built_degree()
        }
    }

    pub fn quantum(&self) -> QuantumEngine<'_> {
        QuantumEngine::new(&self.nb, self.constants.clone())
    }
}

type CheckFn = fn(&Engine, &mut CheckReport, &mut ChaCha8Rng) -> Result<(), NqfError>;

fn check_fn(name: &str) -> Option<CheckFn> {
    Some(match name {
        "hilbert" => check_hilbert,
        "coxeter" => check_coxeter,
        "lemma2" => check_lemma2,
        "prop1" => check_prop1,
        "prop1-sets" => check_prop1_sets,
        "prop2" => check_prop2,
        "prop3" => check_prop3,
        "corollary" => check_corollary,
        "graded-ranks" => check_graded_ranks,
        "bn-relations" => check_bn_relations,
        _ => return None,
    })
}

/// Expands `all`, rejects unknown names, and orders by check name.
pub fn resolve_checks(names: &[String]) -> Result<Vec<&'static str>, NqfError> {
    let mut out: Vec<&'static str> = Vec::new();
    for n in names {
        if n == "all" {
            out.extend_from_slice(CHECKS);
            continue;
        }
        let known = CHECKS.iter().find(|c| **c == n.as_str()).ok_or_else(|| NqfError::UnknownCheck(n.clone()))?;
        out.push(known);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Per-check generator, so a check's samples do not depend on which other checks run.
fn rng_for(seed: u64, check: &str) -> ChaCha8Rng {
    let h = check.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x1000_0000_01b3));
    ChaCha8Rng::seed_from_u64(seed ^ h)
}

/// Runs the named checks in order.
pub fn run_suite(engine: &Engine, checks: &[&str], timings: bool) -> Vec<CheckReport> {
    let mut reports = Vec::with_capacity(checks.len());
    for &name in checks {
        let mut rep = CheckReport::new(name, engine.cfg.instance(), engine.cfg.max_degree, engine.cfg.seed);
        let mut rng = rng_for(engine.cfg.seed, name);
        let start = Instant::now();
        let f = check_fn(name).expect("resolved check");
        if let Err(e) = f(engine, &mut rep, &mut rng) {
            rep.status = Status::Fail;
            rep.counterexample = Some(json!({ "error": e.to_string() }));
        }
        if timings {
            rep.wall_ms = Some(start.elapsed().as_millis() as u64);
        }
        reports.push(rep);
    }
    reports
}

fn fail(rep: &mut CheckReport, detail: impl Into<String>, cx: Value) {
    rep.status = Status::Fail;
    rep.detail = detail.into();
    rep.counterexample = Some(cx);
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn exact_note(op: &GradedOperator, nb: &NicholsBasis) -> String {
    if nb.is_complete() {
        "full algebra".into()
    } else {
        match op.exact_degree() {
            Some(e) => format!("source degrees <= {e}"),
            None => "no exact source degree".into(),
        }
    }
}

/// Random polynomial in ω-coordinates with small integer coefficients.
pub fn random_poly(rng: &mut ChaCha8Rng, n: usize, max_degree: usize) -> CPoly {
    let mut f = CPoly::zero(Basis::Omega, n);
    let terms = rng.random_range(1..=4);
    for _ in 0..terms {
        let d = rng.random_range(0..=max_degree);
        let mut e = vec![0u16; n];
        for _ in 0..d {
            e[rng.random_range(0..n)] += 1;
        }
        let mut c = rng.random_range(-3i64..=2);
        if c >= 0 {
            c += 1;
        }
        f.add_term(e, RingElem::from(c));
    }
    f
}

fn check_hilbert(eng: &Engine, rep: &mut CheckReport, _: &mut ChaCha8Rng) -> Result<(), NqfError> {
    let (rs, nb) = (&eng.rs, &eng.nb);
    let dims = nb.hilbert_series();
    if dims[0] != 1 || nb.dim(1) != rs.num_positive() {
        fail(rep, "low-degree dimensions", json!({ "dims": dims }));
        return Ok(());
    }
    let pairing = Pairing::new(rs);
    let mut oracle_to = 0;
    for k in 0..=nb.built_degree() {
        let count = rs.num_positive().checked_pow(k as u32).unwrap_or(usize::MAX);
        if count > ORACLE_WORDS {
            break;
        }
        let words = all_words(rs.num_positive(), k);
        let r = linalg::rank(&pairing.gram_matrix(&words, &words));
        if r != nb.dim(k) {
            fail(rep, format!("Gram-rank oracle disagrees in degree {k}"), json!({ "degree": k, "oracle": r, "built": nb.dim(k) }));
            return Ok(());
        }
        oracle_to = k;
    }
    for k in 0..=nb.top_degree() {
        if nb.dim(k) > 200 {
            continue;
        }
        let rows: Vec<Vec<Rational>> = nb.basis_gram(k).iter().map(|r| r.to_dense(nb.dim(k))).collect();
        if linalg::rank(&rows) != nb.dim(k) {
            fail(rep, format!("basis Gram matrix singular in degree {k}"), json!({ "degree": k }));
            return Ok(());
        }
    }
    let mut detail = format!("dims {} total {}; oracle agrees on degrees 0..={oracle_to}", join(&dims), nb.total_dim());
    if nb.is_complete() {
        let rev: Vec<usize> = dims.iter().rev().copied().collect();
        if rev != dims {
            fail(rep, "Hilbert series is not palindromic", json!({ "dims": dims }));
            return Ok(());
        }
        detail.push_str(&format!("; top degree {}, palindromic", nb.top_degree()));
    } else {
        detail.push_str("; truncated");
    }
    rep.detail = detail;
    Ok(())
}

fn coxeter_m(a: i64) -> usize {
    match a {
        0 => 2,
        1 => 3,
        2 => 4,
        _ => 6,
    }
}

fn check_coxeter(eng: &Engine, rep: &mut CheckReport, _: &mut ChaCha8Rng) -> Result<(), NqfError> {
    let (rs, nb) = (&eng.rs, &eng.nb);
    let n = rs.rank;
    let mut tested = 0usize;
    for k in 0..=nb.top_degree() {
        for i in 0..nb.dim(k) {
            let x = BElem::basis(k, i);
            for a in 0..rs.num_positive() {
                let y = nb.dbar(a, &nb.dbar(a, &x)?)?;
                if !y.is_zero() {
                    let cx = json!({ "alpha": rs.root_label(a), "element": render::belem(nb, &x), "value": render::belem(nb, &y) });
                    fail(rep, "D_a^2 != 0", cx);
                    return Ok(());
                }
            }
            for s in 0..n {
                for t in s + 1..n {
                    let m = coxeter_m(rs.cartan[s][t] * rs.cartan[t][s]);
                    let left: Vec<usize> = (0..m).map(|j| if j % 2 == 0 { s } else { t }).collect();
                    let right: Vec<usize> = (0..m).map(|j| if j % 2 == 0 { t } else { s }).collect();
                    let l = nb.dbar_word(&left, &x)?;
                    let r = nb.dbar_word(&right, &x)?;
                    if l != r {
                        let cx = json!({
                            "words": [polylabel(&left), polylabel(&right)],
                            "element": render::belem(nb, &x),
                            "left": render::belem(nb, &l),
                            "right": render::belem(nb, &r),
                        });
                        fail(rep, "braid relation fails for twisted derivations", cx);
                        return Ok(());
                    }
                }
            }
            tested += 1;
        }
    }
    rep.detail = format!("D_a^2 = 0 for all {} roots and braid relations on {tested} basis elements", rs.num_positive());
    Ok(())
}

fn polylabel(word: &[usize]) -> String {
    RootSystem::word_label(word)
}

fn check_lemma2(eng: &Engine, rep: &mut CheckReport, rng: &mut ChaCha8Rng) -> Result<(), NqfError> {
    let (rs, nb, c) = (&eng.rs, &eng.nb, &eng.constants);
    let max_deg = eng.degree_limit().min(4);
    for sample in 0..SAMPLES {
        let f = random_poly(rng, rs.rank, max_deg);
        let mf = polyring::mu(nb, c, &f)?;
        for i in 0..rs.rank {
            let a = rs.simple_index(i);
            let rhs = polyring::mu(nb, c, &polyring::demazure(rs, i, &f)?)?.scale(&RingElem::constant(c.get(a).clone()));
            let left = nb.dbar(a, &mf)?;
            let right = nb.dbar_right(a, &mf)?;
            for (side, lhs) in [("left", &left), ("right", &right)] {
                if *lhs != rhs {
                    let cx = json!({
                        "sample": sample,
                        "f": render::omega(rs, &f),
                        "alpha": rs.root_label(a),
                        "side": side,
                        "lhs": render::belem(nb, lhs),
                        "rhs": render::belem(nb, &rhs),
                    });
                    fail(rep, "twisted derivation does not intertwine with the Demazure operator", cx);
                    return Ok(());
                }
            }
        }
    }
    rep.detail = format!("{SAMPLES} random f of degree <= {max_deg}, all simple roots, left and right derivations");
    Ok(())
}

fn check_prop1(eng: &Engine, rep: &mut CheckReport, _: &mut ChaCha8Rng) -> Result<(), NqfError> {
    let qe = eng.quantum();
    let etas = qe.etas();
    let n = eng.rs.rank;
    let mut note = String::new();
    for i in 0..n {
        for j in i + 1..n {
            let comm = etas[i].compose(&etas[j]).sub(&etas[j].compose(&etas[i]));
            note = exact_note(&comm, &eng.nb);
            if let Some((k, b)) = comm.first_nonzero() {
                let cx = json!({
                    "i": i + 1,
                    "j": j + 1,
                    "element": render::word(&eng.rs, &eng.nb.basis_words(k)[b]),
                    "commutator": render::belem(&eng.nb, comm.column(k, b)),
                });
                fail(rep, "mu~(w_i) and mu~(w_j) do not commute", cx);
                return Ok(());
            }
        }
    }
    rep.detail = format!("all {} pairs of fundamental weights commute ({note})", n * n.saturating_sub(1) / 2);
    Ok(())
}

fn check_prop1_sets(eng: &Engine, rep: &mut CheckReport, _: &mut ChaCha8Rng) -> Result<(), NqfError> {
    match quantum::prop1_sets(&eng.rs) {
        Ok(s) => {
            rep.detail = format!(
                "|A|={} |B|={} |A'|=|B'|={}, bijection with matching coroots and products",
                s.a.len(),
                s.b.len(),
                s.matching.len()
            );
        }
        Err(e) => fail(rep, "no bijection", json!({ "error": e.to_string() })),
    }
    Ok(())
}

/// Above this many source columns, checks on operators sample columns per degree.
const EXHAUSTIVE_COLUMNS: usize = 3000;

/// Source degrees on which an operator raising degree by `raise` is exact.
fn exact_sources(eng: &Engine, raise: usize) -> Option<usize> {
    if eng.nb.is_complete() {
        Some(eng.nb.top_degree())
    } else {
        eng.nb.built_degree().checked_sub(raise)
    }
}

/// Basis elements `(k, i)` with `k <= top`; all of them, or `SAMPLES` per degree when there are too many.
fn source_columns(eng: &Engine, top: usize, rng: &mut ChaCha8Rng) -> (Vec<(usize, usize)>, bool) {
    let total: usize = (0..=top).map(|k| eng.nb.dim(k)).sum();
    let sampled = total > EXHAUSTIVE_COLUMNS;
    let mut cols = Vec::new();
    for k in 0..=top {
        let dim = eng.nb.dim(k);
        if sampled && dim > SAMPLES {
            let mut idx = rand::seq::index::sample(rng, dim, SAMPLES).into_vec();
            idx.sort_unstable();
            cols.extend(idx.into_iter().map(|i| (k, i)));
        } else {
            cols.extend((0..dim).map(|i| (k, i)));
        }
    }
    (cols, sampled)
}

fn check_prop2(eng: &Engine, rep: &mut CheckReport, rng: &mut ChaCha8Rng) -> Result<(), NqfError> {
    let rs = &eng.rs;
    let qe = eng.quantum();
    let ys = YOperators::new(rs);
    let by_len = quantum::elements_by_length(rs)?;
    let invs = quantum::quantum_invariants(rs)?;
    for inv in &invs {
        for i in 0..rs.rank {
            let s = rs.simple_reflection(i);
            if polyring::w_act_poly(rs, s, &inv.classical) != inv.classical {
                fail(rep, "classical limit is not W-invariant", json!({ "degree": inv.degree }));
                return Ok(());
            }
        }
        if rs.kind == CartanType::A {
            let gk = polyring::to_basis(rs, &quantum::givental_kim(rs, inv.degree)?, Basis::Omega);
            let diff = gk.sub(&inv.poly);
            let gk_ok = quantum::in_invariant_ideal(rs, &by_len, &ys.eval_at_one(&gk)?)?;
            let diff_ok = diff.at_q_zero().is_zero() && quantum::in_invariant_ideal(rs, &by_len, &ys.eval_at_one(&diff)?)?;
            if !gk_ok || !diff_ok {
                let cx = json!({
                    "degree": inv.degree,
                    "search": render::omega(rs, &inv.poly),
                    "determinant": render::omega(rs, &gk),
                });
                fail(rep, "kernel search disagrees with the tridiagonal determinant", cx);
                return Ok(());
            }
        }
    }
    let tops: Vec<Option<usize>> = invs.iter().map(|inv| exact_sources(eng, inv.degree)).collect();
    let widest = tops.iter().flatten().copied().max();
    let (cols, sampled) = match widest {
        Some(top) => source_columns(eng, top, rng),
        None => (Vec::new(), false),
    };
    let mut counts = vec![0usize; invs.len()];
    for &(k, i) in &cols {
        let mut images = MonomialImages::new(&qe, BElem::basis(k, i));
        for (n, inv) in invs.iter().enumerate() {
            if !tops[n].is_some_and(|t| k <= t) {
                continue;
            }
            let v = images.apply(&inv.poly)?;
            if !v.is_zero() {
                let cx = json!({
                    "degree": inv.degree,
                    "invariant": render::omega(rs, &inv.poly),
                    "element": render::word(rs, &eng.nb.basis_words(k)[i]),
                    "image": render::belem(&eng.nb, &v),
                });
                fail(rep, "mu~ of a quantum invariant is nonzero", cx);
                return Ok(());
            }
            counts[n] += 1;
        }
    }
    let notes: Vec<String> = invs
        .iter()
        .zip(&tops)
        .zip(&counts)
        .map(|((inv, top), n)| match top {
            _ if eng.nb.is_complete() => format!("d={} (full algebra)", inv.degree),
            Some(t) => format!("d={} ({n} element{} of degree <= {t})", inv.degree, if *n == 1 { "" } else { "s" }),
            None => format!("d={} (beyond the truncation)", inv.degree),
        })
        .collect();
    let gk = if rs.kind == CartanType::A { "; agrees with the tridiagonal determinant" } else { "" };
    let how = if sampled { format!("; sampled {SAMPLES} basis elements per degree") } else { String::new() };
    rep.detail = format!("mu~(I_q) = 0 for {}{how}{gk}", notes.join(", "));
    Ok(())
}

fn check_prop3(eng: &Engine, rep: &mut CheckReport, _: &mut ChaCha8Rng) -> Result<(), NqfError> {
    let rs = &eng.rs;
    let qe = eng.quantum();
    let mut note = String::new();
    for a in 0..rs.num_positive() {
        let op = qe.quantize_root(a);
        let sq = op.compose(op);
        note = exact_note(&sq, &eng.nb);
        let expected = if rs.is_simple(a) {
            RingElem::term(rs.q_of_root(a), eng.constants.get(a) * qe.d(a))
        } else {
            RingElem::zero()
        };
        if !sq.is_scalar(&expected) {
            let cx = json!({ "alpha": rs.root_label(a), "expected": render::ring(rs, &expected) });
            fail(rep, "square of a quantized generator", cx);
            return Ok(());
        }
    }
    rep.detail = format!("all {} quantized generators ({note})", rs.num_positive());
    Ok(())
}

fn check_corollary(eng: &Engine, rep: &mut CheckReport, _: &mut ChaCha8Rng) -> Result<(), NqfError> {
    let (rs, nb, c) = (&eng.rs, &eng.nb, &eng.constants);
    let qe = eng.quantum();
    let ys = YOperators::new(rs);
    let weyl = rs.enumerate_weyl(nqf_core::roots::DEFAULT_WEYL_BOUND)?;
    let order = weyl.len();
    let limit = eng.degree_limit();
    let mut images = MonomialImages::new(&qe, BElem::one());
    let mut classical = polyring::MuImages::new(nb, c);
    let bgg = if rs.kind == CartanType::A { None } else { Some(polyring::bgg_classes(rs, &weyl, Basis::Omega)?) };
    let (mut checked, mut skipped) = (0, 0);
    for w in &weyl {
        if w.length() > limit {
            skipped += 1;
            continue;
        }
        let f = match &bgg {
            None => polyring::schubert_poly_a(rs, w)?,
            Some(classes) => classes[w].clone(),
        };
        let fq = ys.quantize(&f)?;
        let lhs = images.apply(&fq)?;
        let rhs = classical.apply(&f)?;
        if lhs != rhs {
            let cx = json!({
                "w": RootSystem::word_label(&w.reduced_word(rs)),
                "quantized": render::omega(rs, &fq),
                "lhs": render::belem(nb, &lhs),
                "rhs": render::belem(nb, &rhs),
            });
            fail(rep, "mu~(quantized class)(1) != mu(class)", cx);
            return Ok(());
        }
        checked += 1;
    }
    let what = if rs.kind == CartanType::A { "Schubert" } else { "BGG" };
    rep.detail = format!("{checked} of {order} {what} classes");
    if skipped > 0 {
        rep.detail.push_str(&format!(" ({skipped} above the truncation)"));
    }
    Ok(())
}

fn check_graded_ranks(eng: &Engine, rep: &mut CheckReport, _: &mut ChaCha8Rng) -> Result<(), NqfError> {
    let (rs, nb) = (&eng.rs, &eng.nb);
    let qe = eng.quantum();
    let hist = rs.length_histogram(nqf_core::roots::DEFAULT_WEYL_BOUND)?;
    let top = (hist.len() - 1).min(eng.degree_limit());
    let mut images = MonomialImages::new(&qe, BElem::one());
    let mut ranks = Vec::new();
    for i in 0..=top {
        let mut rows = Vec::new();
        for e in quantum::monomials(rs.rank, i) {
            let m = CPoly::monomial(Basis::Omega, e, RingElem::one());
            let v = images.apply(&m)?;
            if v.top_degree().is_some_and(|d| d > i) {
                fail(rep, "filtration degree exceeded", json!({ "monomial": render::omega(rs, &m) }));
                return Ok(());
            }
            let lead = v.component(i);
            if lead != lead.at_q_zero() {
                fail(rep, "leading component is not q-free", json!({ "monomial": render::omega(rs, &m) }));
                return Ok(());
            }
            let coords = SparseVec::from_entries(
                lead.terms().map(|(_, j, c)| (j, c.as_constant().expect("q-free"))),
            );
            rows.push(coords.to_dense(nb.dim(i)));
        }
        ranks.push(linalg::rank(&rows));
    }
    if ranks[..] != hist[..=top] {
        fail(rep, "graded ranks differ from the length histogram", json!({ "ranks": ranks, "lengths": hist }));
        return Ok(());
    }
    rep.detail = format!("graded ranks {} match the length histogram", join(&ranks));
    if top + 1 < hist.len() {
        rep.detail.push_str(&format!(" up to degree {top}"));
    }
    Ok(())
}

fn bn_operator(qe: &QuantumEngine<'_>, g: BnGen) -> GradedOperator {
    let (idx, sign) = g.root(qe.root_system());
    qe.quantize_root(idx).scale(&RingElem::from(sign))
}

fn check_bn_relations(eng: &Engine, rep: &mut CheckReport, _: &mut ChaCha8Rng) -> Result<(), NqfError> {
    let rs = &eng.rs;
    if rs.kind != CartanType::B {
        rep.status = Status::Skipped;
        rep.detail = "type B only".into();
        return Ok(());
    }
    let n = rs.rank;
    // Display map: Q_ij = q_i/q_j, Q_(i bar j) = q_i q_j, Q_n = q_n^2.
    for a in 0..rs.num_positive() {
        let amb = &rs.root(a).ambient;
        let idx: Vec<usize> = (0..n).filter(|&i| amb[i] != 0).map(|i| i + 1).collect();
        let expected = match (idx.as_slice(), amb.iter().filter(|&&x| x < 0).count()) {
            ([i], _) => format!("q{i}^2"),
            ([i, j], 1) => format!("q{i}*q{j}^-1"),
            ([i, j], _) => format!("q{i}*q{j}"),
            _ => unreachable!("type-B roots have one or two nonzero coordinates"),
        };
        let got = quantum::display_qmonomial(rs, &rs.q_of_root(a));
        if got != expected {
            fail(rep, "display map", json!({ "root": rs.root_label_ambient(a), "got": got, "expected": expected }));
            return Ok(());
        }
    }
    let qe = eng.quantum();
    let nb = &eng.nb;
    let mut families = std::collections::BTreeSet::new();
    let mut count = 0;
    let mut exact = None;
    for rel in quantum::bn_relations(n) {
        let mut total = GradedOperator::zero(nb);
        for (s, word) in &rel.terms {
            let mut op = GradedOperator::identity(nb);
            for g in word.iter().rev() {
                op = bn_operator(&qe, *g).compose(&op);
            }
            total = total.add(&op.scale(&RingElem::from(*s)));
        }
        let ok = match &rel.rhs {
            None => total.is_zero(),
            Some(e) => total.is_scalar(&RingElem::monomial(quantum::qmonomial_from_display(rs, e)?)),
        };
        if !ok {
            let cx = json!({ "family": rel.family.name(), "relation": rel.label });
            fail(rep, format!("{} relation fails", rel.family.name()), cx);
            return Ok(());
        }
        families.insert(rel.family);
        count += 1;
        exact = exact.min(total.exact_degree()).or(total.exact_degree());
    }
    let fams: Vec<&str> = families.into_iter().map(|f| f.name()).collect();
    rep.detail = format!("{count} relation instances hold ({})", fams.join(", "));
    if !nb.is_complete() {
        rep.detail.push_str(&format!(", exact on source degrees <= {}", exact.unwrap_or(0)));
    }
    if n < 4 {
        rep.detail.push_str("; disjoint-pair relations need rank >= 4");
    }
    Ok(())
}
