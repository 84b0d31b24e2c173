//! Algebras available by name: `R`, `C`, `H` and `E(a,b)`.

use dring_core::quaternion::{e_algebra, hamilton};
use dring_core::{Algebra, QuaternionParams, Scalar};

use crate::formats::FormatError;

pub fn is_builtin(name: &str) -> bool {
    let name = name.trim();
    matches!(name, "R" | "C" | "H") || e_params(name).is_some()
}

fn e_params(name: &str) -> Option<(&str, &str)> {
    let inner = name.strip_prefix("E(")?.strip_suffix(')')?;
    let (a, b) = inner.split_once(',')?;
    Some((a.trim(), b.trim()))
}

pub fn named<S: Scalar>(name: &str) -> Result<Algebra<S>, FormatError> {
    match name.trim() {
        "R" => Ok(Algebra::base_field()),
        "C" => Ok(Algebra::complex()),
        "H" => Ok(hamilton()),
        other => {
            let (a, b) = e_params(other).ok_or_else(|| FormatError::Shape(format!("unknown algebra `{other}`")))?;
            let parse = |t: &str| S::parse(t).ok_or_else(|| FormatError::Scalar(t.to_string()));
            e_algebra(&QuaternionParams::new(parse(a)?, parse(b)?)).map_err(FormatError::Algebra)
        }
    }
}
