//! Browser bindings: decide, enumerate and measure delays from a web page.
//!
//! The plain functions return `Result<_, String>` so they can be tested
//! natively; the `#[wasm_bindgen]` wrappers turn errors into JS exceptions.

use std::time::Duration;

use polyclose::delay::{claimed_bound, DelayReport};
use polyclose::format::parse_instance;
use polyclose::generate::RandomFamily;
use polyclose::{resolve, CloneSpec, Strategy, Vector};
use wasm_bindgen::prelude::*;

fn problem(clone: &str, instance: &str) -> Result<polyclose::ResolvedProblem, String> {
    let spec: CloneSpec = clone.parse().map_err(|e: polyclose::Error| e.to_string())?;
    let s = parse_instance(instance).map_err(|e| e.to_string())?;
    resolve(&spec, &s).map_err(|e| e.to_string())
}

/// `yes` or `no`.
pub fn decide_text(clone: &str, instance: &str, vector: &str) -> Result<String, String> {
    let p = problem(clone, instance)?;
    let v = Vector::parse(vector.trim(), p.domain()).map_err(|e| e.to_string())?;
    let yes = p.decide(&v).map_err(|e| e.to_string())?;
    Ok(if yes { "yes" } else { "no" }.to_string())
}

/// The first `limit` closure vectors, one per line, followed by a summary
/// line.
pub fn enumerate_text(clone: &str, instance: &str, generic: bool, limit: usize) -> Result<String, String> {
    let p = problem(clone, instance)?;
    let strategy = if generic { Strategy::Generic } else { Strategy::Fast };
    let mut stream = p.enumerate(strategy).map_err(|e| e.to_string())?;
    let mut out = String::new();
    let mut count = 0;
    for v in stream.by_ref().take(limit) {
        out.push_str(&v.map_err(|e| e.to_string())?.to_string());
        out.push('\n');
        count += 1;
    }
    let more = stream.next().is_some();
    out.push_str(&format!(
        "# {count} vectors{} via {:?} ({strategy:?}), work {}\n",
        if more { " shown, more remain" } else { "" },
        p.algorithm(),
        stream.work()
    ));
    Ok(out)
}

/// Delay statistics, in work units, on a seeded random instance with `n` coordinates and
/// `n/2` vectors.
pub fn bench_text(clone: &str, n: usize, seed: u64, limit: usize) -> Result<String, String> {
    let spec: CloneSpec = clone.parse().map_err(|e: polyclose::Error| e.to_string())?;
    if !(1..=512).contains(&n) {
        return Err("n must be between 1 and 512".into());
    }
    let s = RandomFamily::boolean(n, (n / 2).max(1), seed)
        .generate()
        .map_err(|e| e.to_string())?;
    let p = resolve(&spec, &s).map_err(|e| e.to_string())?;
    let mut stream = p.enumerate(Strategy::Fast).map_err(|e| e.to_string())?;
    let report = DelayReport::measure_with_clock(stream.as_mut(), Some(limit), || Duration::ZERO, |_| {}).map_err(|e| e.to_string())?;
    let mut out = format!(
        "algorithm {:?}\nemissions {}{}\nmax work per emission {}\nmean work per emission {:.2}\n",
        p.algorithm(),
        report.emissions(),
        if report.truncated { " (limit reached)" } else { "" },
        report.max_work(),
        report.mean_work()
    );
    if let Some((shape, value)) = claimed_bound(p.algorithm(), n, s.size()) {
        out.push_str(&format!(
            "bound {shape} = {value}, ratio {:.3}\n",
            report.max_work() as f64 / value as f64
        ));
    }
    out.push_str("histogram (work bucket: emissions)\n");
    for (bucket, count) in report.histogram() {
        out.push_str(&format!("  {bucket:>6}: {count}\n"));
    }
    Ok(out)
}

#[wasm_bindgen]
pub fn decide(clone: &str, instance: &str, vector: &str) -> Result<String, JsError> {
    decide_text(clone, instance, vector).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn enumerate(clone: &str, instance: &str, generic: bool, limit: usize) -> Result<String, JsError> {
    enumerate_text(clone, instance, generic, limit).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn bench(clone: &str, n: usize, seed: u32, limit: usize) -> Result<String, JsError> {
    bench_text(clone, n, seed as u64, limit).map_err(|e| JsError::new(&e))
}
