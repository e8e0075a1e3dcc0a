//! Sampled side curves as CSV and as a small standalone SVG figure.

use std::fmt::Write as _;

use ofn_core::{Ofn, SidePair, Value, Which};

use crate::render;

/// `(α, μ↑(α), μ↓(α))` at `points` uniform levels.
pub fn sample(x: &Ofn, points: usize) -> Vec<(f64, Value, Value)> {
    let n = points.max(2) - 1;
    (0..=n)
        .map(|i| {
            let a = i as f64 / n as f64;
            let up = x.side_eval(Which::Up, a).expect("alpha in range");
            let down = x.side_eval(Which::Down, a).expect("alpha in range");
            (a, up, down)
        })
        .collect()
}

/// CSV with header `alpha,up,down`; infinite values print as `inf`/`-inf`.
pub fn to_csv(rows: &[(f64, Value, Value)]) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(["alpha", "up", "down"]).expect("in-memory write");
    for (a, u, d) in rows {
        w.write_record([a.to_string(), u.to_string(), d.to_string()])
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii output")
}

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 610.0;
const TOP: f64 = 50.0;
const BOTTOM: f64 = 420.0;

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Figure in the usual OFN style: `α` across, side values up, the up side
/// drawn from `α = 0` to `1` and the down side back, arrowheads marking
/// the direction of travel.
pub fn to_svg(x: &Ofn) -> String {
    let rows = sample(x, 201);
    let finite: Vec<(f64, f64, f64)> = rows
        .iter()
        .filter_map(|(a, u, d)| Some((*a, u.finite()?, d.finite()?)))
        .collect();
    let (mut lo, mut hi) = finite
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &(_, u, d)| {
            (lo.min(u).min(d), hi.max(u).max(d))
        });
    if hi - lo < 1e-12 {
        lo -= 1.0;
        hi += 1.0;
    }
    let pad = 0.05 * (hi - lo);
    let (lo, hi) = (lo - pad, hi + pad);
    let px = |a: f64| LEFT + a * (RIGHT - LEFT);
    let py = |v: f64| BOTTOM - (v - lo) / (hi - lo) * (BOTTOM - TOP);
    let line = |pts: &mut dyn Iterator<Item = (f64, f64)>| {
        pts.map(|(a, v)| format!("{:.2},{:.2}", px(a), py(v)))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let up = line(&mut finite.iter().map(|&(a, u, _)| (a, u)));
    let down = line(&mut finite.iter().rev().map(|&(a, _, d)| (a, d)));

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    s.push_str(concat!(
        "<defs>\n",
        r#"<marker id="arrow-up" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="8" markerHeight="8" orient="auto"><path d="M0,0 L10,5 L0,10 z" style="fill:#1f5fbf"/></marker>"#,
        "\n",
        r#"<marker id="arrow-down" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="8" markerHeight="8" orient="auto"><path d="M0,0 L10,5 L0,10 z" style="fill:#c0392b"/></marker>"#,
        "\n</defs>\n",
    ));
    let _ = writeln!(
        s,
        r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" style="fill:#ffffff"/>"#
    );
    let _ = writeln!(
        s,
        r#"<path d="M{LEFT},{TOP} L{LEFT},{BOTTOM} L{RIGHT},{BOTTOM}" style="fill:none;stroke:#333333;stroke-width:1"/>"#
    );
    for (v, y) in [(lo, BOTTOM), (hi, TOP)] {
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" style="font:12px sans-serif;text-anchor:end">{v:.3}</text>"#,
            LEFT - 6.0,
            y + 4.0
        );
    }
    for a in [0.0, 0.5, 1.0] {
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{}" style="font:12px sans-serif;text-anchor:middle">{a}</text>"#,
            px(a),
            BOTTOM + 18.0
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" style="font:14px sans-serif;text-anchor:middle">α</text>"#,
        (LEFT + RIGHT) / 2.0,
        BOTTOM + 40.0
    );
    let _ = writeln!(
        s,
        r#"<text x="{}" y="30" style="font:14px sans-serif;text-anchor:middle">{} {}</text>"#,
        WIDTH / 2.0,
        escape(x.base().tag()),
        escape(&render::sides(x))
    );
    let _ = writeln!(
        s,
        r#"<polyline class="up" points="{up}" style="fill:none;stroke:#1f5fbf;stroke-width:2" marker-end="url(#arrow-up)"/>"#
    );
    let _ = writeln!(
        s,
        r#"<polyline class="down" points="{down}" style="fill:none;stroke:#c0392b;stroke-width:2" marker-end="url(#arrow-down)"/>"#
    );
    s.push_str("</svg>\n");
    s
}
