//! End-to-end acceptance criteria. Prints one PASS/FAIL line per criterion
//! and exits nonzero if any fails.

use std::fs;
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use nqf::config::EngineConfig;
use nqf::report::Status;
use nqf::suite::{run_suite, Engine};
use nqf_core::{CartanType, Rational};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

fn engine(kind: CartanType, rank: usize, max_degree: Option<usize>) -> Result<Engine, String> {
    Engine::new(EngineConfig::new(kind, rank).with_max_degree(max_degree)).map_err(|e| e.to_string())
}

/// Runs `check` on each instance and requires a pass everywhere.
fn all_pass(check: &str, instances: &[(CartanType, usize, Option<usize>)]) -> Outcome {
    let mut seen = Vec::new();
    for &(kind, rank, d) in instances {
        let eng = engine(kind, rank, d)?;
        let rep = run_suite(&eng, &[check], false).remove(0);
        if rep.status != Status::Pass {
            return Err(format!("{}: {}", rep.instance, rep.to_text()));
        }
        seen.push(rep.instance);
    }
    Ok(seen.join(", "))
}

fn hilbert_a2() -> Outcome {
    let start = Instant::now();
    let eng = engine(CartanType::A, 2, None)?;
    let dims = eng.nb.hilbert_series();
    let elapsed = start.elapsed();
    if dims != [1, 3, 4, 3, 1] || eng.nb.total_dim() != 12 || !eng.nb.is_complete() {
        return Err(format!("dims {dims:?}"));
    }
    if elapsed > Duration::from_secs(5) {
        return Err(format!("took {elapsed:?}"));
    }
    all_pass("hilbert", &[(CartanType::A, 2, None)])?;
    Ok(format!("A2 dims {dims:?}, total 12, palindromic, {} ms", elapsed.as_millis()))
}

fn hilbert_a3() -> Outcome {
    let eng = engine(CartanType::A, 3, None)?;
    let dims = eng.nb.hilbert_series();
    let rev: Vec<usize> = dims.iter().rev().copied().collect();
    if eng.nb.total_dim() != 576 || eng.nb.top_degree() != 12 || rev != dims {
        return Err(format!("dims {dims:?}"));
    }
    Ok(format!("A3 total 576, top degree 12, dims {dims:?}"))
}

fn constants_b2() -> Outcome {
    let cfg = EngineConfig::new(CartanType::B, 2).with_constants(Rational::ONE, Rational::from_int(2));
    let eng = Engine::new(cfg).map_err(|e| e.to_string())?;
    let rep = run_suite(&eng, &["prop3"], false).remove(0);
    if rep.status != Status::Pass {
        return Err(rep.to_text());
    }
    Ok("B2 with c_short = 2".into())
}

fn run_cli(cache: &Path) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_nqf"))
        .args(["verify", "all", "--type", "B", "--rank", "2", "--seed", "7"])
        .arg("--cache")
        .arg(cache)
        .env_remove("NQF_CACHE")
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)));
    }
    Ok(out.stdout)
}

fn cache_files(dir: &Path) -> Result<Vec<(String, Vec<u8>)>, String> {
    let sub = dir.join("B2");
    let mut files: Vec<(String, Vec<u8>)> = fs::read_dir(&sub)
        .map_err(|e| e.to_string())?
        .map(|e| {
            let e = e.map_err(|e| e.to_string())?;
            let bytes = fs::read(e.path()).map_err(|e| e.to_string())?;
            Ok((e.file_name().to_string_lossy().into_owned(), bytes))
        })
        .collect::<Result<_, String>>()?;
    files.sort();
    Ok(files)
}

fn determinism() -> Outcome {
    let a = tempfile::tempdir().map_err(|e| e.to_string())?;
    let b = tempfile::tempdir().map_err(|e| e.to_string())?;
    let (ra, rb) = (run_cli(a.path())?, run_cli(b.path())?);
    if ra != rb {
        return Err("reports differ between cold runs".into());
    }
    let (fa, fb) = (cache_files(a.path())?, cache_files(b.path())?);
    if fa != fb || fa.is_empty() {
        return Err("cache files differ between cold runs".into());
    }
    Ok(format!("B2 reports and {} cache files byte-identical", fa.len()))
}

fn main() -> ExitCode {
    use CartanType::{A, B};
    let criteria: Vec<Criterion> = vec![
        ("hilbert series of A2", Box::new(hilbert_a2)),
        ("hilbert series of A3", Box::new(hilbert_a3)),
        ("derivation identities", Box::new(|| all_pass("lemma2", &[(A, 2, None), (A, 3, None), (B, 2, None)]))),
        (
            "commuting fundamental operators",
            Box::new(|| all_pass("prop1", &[(A, 2, None), (B, 2, None), (A, 3, Some(6)), (B, 3, Some(6))])),
        ),
        ("length-additive pair bijection", Box::new(|| all_pass("prop1-sets", &[(A, 2, None), (A, 3, None), (B, 2, None)]))),
        (
            "squares of quantized generators",
            Box::new(|| {
                let base = all_pass("prop3", &[(A, 2, None), (A, 3, None), (B, 2, None)])?;
                Ok(format!("{base}; {}", constants_b2()?))
            }),
        ),
        ("quantum invariants act by zero", Box::new(|| all_pass("prop2", &[(A, 2, None), (B, 2, None), (A, 3, None)]))),
        ("quantized classes on the unit", Box::new(|| all_pass("corollary", &[(A, 2, None), (A, 3, None), (B, 2, None)]))),
        ("type B relations", Box::new(|| all_pass("bn-relations", &[(B, 2, None), (B, 3, Some(6))]))),
        ("graded ranks", Box::new(|| all_pass("graded-ranks", &[(A, 2, None), (B, 2, None)]))),
        ("determinism", Box::new(determinism)),
    ];
    let mut failed = 0;
    for (n, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", n + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", n + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
