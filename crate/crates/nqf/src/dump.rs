//! Tables printed by `basis`, `hilbert`, `schubert`, `invariants` and `dump`.

use nqf_core::polyring::{self, Basis, CPoly};
use nqf_core::quantum::{self, YOperators};
use nqf_core::{CartanType, RootSystem, WeylElem};
use serde_json::{json, Value};

use crate::render;
use crate::suite::Engine;
use crate::NqfError;

pub const TABLES: &[&str] = &["basis", "hilbert", "schubert", "invariants"];

pub fn table(eng: &Engine, what: &str, w: Option<&WeylElem>) -> Result<Value, NqfError> {
    match what {
        "basis" => Ok(basis(eng)),
        "hilbert" => Ok(hilbert(eng)),
        "schubert" => schubert(eng, w),
        "invariants" => invariants(eng),
        other => Err(NqfError::Usage(format!("unknown table `{other}` (expected one of {})", TABLES.join(", ")))),
    }
}

fn header(eng: &Engine) -> Value {
    json!({ "instance": eng.cfg.instance().to_string(), "max_degree": eng.cfg.max_degree })
}

fn with_header(eng: &Engine, body: Value) -> Value {
    let mut v = header(eng);
    if let (Value::Object(h), Value::Object(b)) = (&mut v, body) {
        h.extend(b);
    }
    v
}

pub fn hilbert(eng: &Engine) -> Value {
    let nb = &eng.nb;
    with_header(
        eng,
        json!({
            "dims": nb.hilbert_series(),
            "total": nb.total_dim(),
            "top_degree": nb.top_degree(),
            "complete": nb.is_complete(),
        }),
    )
}

pub fn basis(eng: &Engine) -> Value {
    let nb = &eng.nb;
    let degrees: Vec<Value> = (0..=nb.top_degree())
        .map(|k| {
            let words: Vec<String> = nb.basis_words(k).iter().map(|w| render::word(&eng.rs, w)).collect();
            json!({ "degree": k, "dim": nb.dim(k), "words": words })
        })
        .collect();
    with_header(eng, json!({ "complete": nb.is_complete(), "degrees": degrees }))
}

fn schubert_row(eng: &Engine, ys: &YOperators<'_>, w: &WeylElem, x: &CPoly) -> Result<Value, NqfError> {
    let rs = &eng.rs;
    let word = RootSystem::word_label(&w.reduced_word(rs));
    let mut row = json!({
        "w": word,
        "length": w.length(),
        "bgg_omega": render::omega(rs, x),
        "bgg_ambient": render::ambient(rs, x),
        "bgg_quantum": render::omega(rs, &ys.quantize(x)?),
    });
    if rs.kind == CartanType::A {
        let s = polyring::schubert_poly_a(rs, w)?;
        let obj = row.as_object_mut().expect("object");
        obj.insert("schubert_ambient".into(), render::ambient(rs, &s).into());
        obj.insert("schubert_omega".into(), render::omega(rs, &s).into());
        obj.insert("schubert_quantum".into(), render::omega(rs, &ys.quantize(&s)?).into());
    }
    Ok(row)
}

pub fn schubert(eng: &Engine, only: Option<&WeylElem>) -> Result<Value, NqfError> {
    let rs = &eng.rs;
    let ys = YOperators::new(rs);
    let weyl = rs.enumerate_weyl(nqf_core::roots::DEFAULT_WEYL_BOUND)?;
    let classes = polyring::bgg_classes(rs, &weyl, Basis::Omega)?;
    let rows: Result<Vec<Value>, NqfError> = weyl
        .iter()
        .filter(|w| only.is_none_or(|o| o == *w))
        .map(|w| schubert_row(eng, &ys, w, &classes[w]))
        .collect();
    Ok(with_header(eng, json!({ "rows": rows? })))
}

pub fn invariants(eng: &Engine) -> Result<Value, NqfError> {
    let rs = &eng.rs;
    let rows: Vec<Value> = quantum::quantum_invariants(rs)?
        .iter()
        .map(|inv| {
            json!({
                "degree": inv.degree,
                "classical": render::ambient(rs, &inv.classical),
                "quantum_omega": render::omega(rs, &inv.poly),
                "quantum_ambient": render::ambient(rs, &inv.ambient(rs)),
            })
        })
        .collect();
    Ok(with_header(eng, json!({ "invariants": rows })))
}

/// Plain-text rendering of a table.
pub fn to_text(what: &str, v: &Value) -> String {
    let mut out = format!("{} {}\n", what, v["instance"].as_str().unwrap_or(""));
    let s = |x: &Value| x.as_str().map(String::from).unwrap_or_else(|| x.to_string());
    match what {
        "hilbert" => {
            out.push_str(&format!("dims: {}\ntotal: {}\ntop degree: {}\ncomplete: {}\n", v["dims"], v["total"], v["top_degree"], v["complete"]));
        }
        "basis" => {
            for d in v["degrees"].as_array().into_iter().flatten() {
                let words: Vec<String> = d["words"].as_array().into_iter().flatten().map(s).collect();
                out.push_str(&format!("degree {} (dim {}): {}\n", d["degree"], d["dim"], words.join(" ")));
            }
        }
        "schubert" => {
            for r in v["rows"].as_array().into_iter().flatten() {
                out.push_str(&format!("w = {} (length {})\n", s(&r["w"]), r["length"]));
                for key in ["schubert_ambient", "schubert_omega", "schubert_quantum", "bgg_omega", "bgg_ambient", "bgg_quantum"] {
                    if !r[key].is_null() {
                        out.push_str(&format!("  {key:<17} {}\n", s(&r[key])));
                    }
                }
            }
        }
        "invariants" => {
            for r in v["invariants"].as_array().into_iter().flatten() {
                out.push_str(&format!("degree {}\n", r["degree"]));
                for key in ["classical", "quantum_omega", "quantum_ambient"] {
                    out.push_str(&format!("  {key:<16} {}\n", s(&r[key])));
                }
            }
        }
        _ => out.push_str(&format!("{v}\n")),
    }
    out
}
