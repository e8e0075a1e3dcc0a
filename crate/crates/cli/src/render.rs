//! Human-readable side functions, e.g. `(2x, -2x)`.

use ofn_core::base::{EXPONENTIAL, GAUSSIAN, IDENTITY, SQRT};
use ofn_core::Ofn;

fn symbol(tag: &str) -> String {
    match tag {
        IDENTITY => "x".into(),
        SQRT => "√x".into(),
        GAUSSIAN => "√(-2 ln x)".into(),
        EXPONENTIAL => "ln x".into(),
        other => format!("{other}(x)"),
    }
}

fn num(v: f64) -> String {
    format!("{}", v + 0.0)
}

/// `a·h + b` with unit coefficients and zero terms dropped.
pub fn side(a: f64, b: f64, h: &str) -> String {
    let lead = match a {
        0.0 => return num(b),
        1.0 => h.to_string(),
        -1.0 => format!("-{h}"),
        a => format!("{}{h}", num(a)),
    };
    match b {
        0.0 => lead,
        b if b < 0.0 => format!("{lead} - {}", num(-b)),
        b => format!("{lead} + {}", num(b)),
    }
}

pub fn sides(x: &Ofn) -> String {
    let h = symbol(x.base().tag());
    let t = x.tuple();
    format!("({}, {})", side(t.a_up, t.b_up, &h), side(t.a_dn, t.b_dn, &h))
}
