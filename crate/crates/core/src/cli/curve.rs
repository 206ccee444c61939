//! CSV export of closed curves `S¹ → S³`.

use std::f64::consts::TAU;
use std::fmt::Write as _;

use super::source::BuiltMap;
use crate::error::{Error, Result};

/// Rows `t, Φ(cos t, sin t)` at `t = 2πj/samples`, `j = 0..samples`, with
/// every float printed to 17 significant digits.
pub fn emit_curve(built: &BuiltMap, samples: usize) -> Result<String> {
    if samples == 0 {
        return Err(Error::WrongDimensions("need at least one sample".into()));
    }
    if built.meta.dim() != 1 || built.map.nvars() != 2 {
        return Err(Error::WrongDimensions(format!(
            "emit-curve needs a map on S^1, got a domain of dimension {}",
            built.meta.dim()
        )));
    }
    if built.map.len() != 4 {
        return Err(Error::WrongDimensions(format!(
            "emit-curve needs 4 components, got {}",
            built.map.len()
        )));
    }
    let mut out = String::from("t,u1,u2,u3,u4\n");
    for j in 0..samples {
        let t = TAU * j as f64 / samples as f64;
        let u = built.map.evaluate_f64(&[t.cos(), t.sin()]);
        write!(out, "{}", sig17(t)).expect("string write");
        for v in u {
            write!(out, ",{}", sig17(v)).expect("string write");
        }
        out.push('\n');
    }
    Ok(out)
}

/// Scientific notation with 17 significant digits, which round-trips f64.
fn sig17(v: f64) -> String {
    format!("{v:.16e}")
}
