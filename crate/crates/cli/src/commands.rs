//! One function per subcommand. Each returns the text to print on stdout.

use std::fs;
use std::path::Path;

use serde_json::{json, Value as Json};

use ofn_core::{classify as classify_ofn, correct as correct_ofn, rank, shortest_paths, Bases, Ofn};

use crate::document::{GraphDocument, OfnDocument};
use crate::error::{CliError, CliResult};
use crate::{demo as demo_rows, expr, plot, render};

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

fn write(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| CliError::io(path, e))
}

fn load(path: &Path, bases: &Bases) -> CliResult<Ofn> {
    OfnDocument::parse(&read(path)?)?.to_ofn(bases)
}

fn doc_json(x: &Ofn) -> Json {
    serde_json::to_value(OfnDocument::from_ofn(x)).expect("document serialises")
}

/// The result document on one line, then its side functions.
pub fn eval(src: &str, bases: &Bases) -> CliResult<String> {
    let x = expr::evaluate(src, bases)?;
    Ok(format!("{}\n{}\n", doc_json(&x), render::sides(&x)))
}

pub fn classify(path: &Path, bases: &Bases) -> CliResult<String> {
    let x = load(path, bases)?;
    let r = classify_ofn(&x);
    let out = json!({
        "pathology": r.pathology.as_str(),
        "proper": r.proper,
        "orientation": r.orientation.as_str(),
        "same_sign": r.same_sign,
        "crossing": r.crossing,
        "sides": render::sides(&x),
    });
    Ok(format!("{out}\n"))
}

pub fn correct(path: &Path, bases: &Bases) -> CliResult<String> {
    let x = load(path, bases)?;
    let (fixed, applied) = correct_ofn(&x);
    let out = json!({
        "result": doc_json(&fixed),
        "applied": applied.as_str(),
        "sides": render::sides(&fixed),
    });
    Ok(format!("{out}\n"))
}

pub fn sample(path: &Path, points: usize, out: &Path, bases: &Bases) -> CliResult<String> {
    let x = load(path, bases)?;
    write(out, &plot::to_csv(&plot::sample(&x, points)))?;
    Ok(String::new())
}

pub fn plot(path: &Path, out: &Path, bases: &Bases) -> CliResult<String> {
    let x = load(path, bases)?;
    write(out, &plot::to_svg(&x))?;
    Ok(String::new())
}

/// Shortest distances from `source` as a JSON array, one entry per node;
/// unreachable nodes get `null` distance and path.
pub fn graph(path: &Path, source: usize, bases: &Bases) -> CliResult<String> {
    let g = GraphDocument::parse(&read(path)?)?.to_graph(bases)?;
    let sp = shortest_paths(&g, source)?;
    let rows: Vec<Json> = sp
        .dist
        .iter()
        .enumerate()
        .map(|(node, d)| match d {
            Some(d) => json!({
                "node": node,
                "distance": doc_json(d),
                "rank": rank(d),
                "path": sp.path_to(node),
                "sides": render::sides(d),
            }),
            None => json!({ "node": node, "distance": null, "rank": null, "path": null, "sides": null }),
        })
        .collect();
    let lines: Vec<String> = rows.iter().map(|r| format!("  {r}")).collect();
    Ok(format!("[\n{}\n]\n", lines.join(",\n")))
}

/// The self-check table and the number of failing rows.
pub fn demo() -> (String, usize) {
    let rows = demo_rows::run();
    let mut out = String::new();
    for r in &rows {
        out.push_str(&format!(
            "{:>2}  {}  {}\n",
            r.item,
            if r.pass { "PASS" } else { "FAIL" },
            r.label
        ));
    }
    (out, rows.iter().filter(|r| !r.pass).count())
}
