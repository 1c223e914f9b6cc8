//! Conversion into the natural system c = ħ = 1, where every cgs quantity
//! collapses to a power of the second.
//!
//! From c = 1, 1 cm = (1/c) s. From ħ = 1, 1 g = (c²/ħ) s⁻¹.

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};

use super::constants::{ConstantSet, Provenance};
use super::prec::PrecReal;
use super::quantity::Quantity;
use crate::error::{FtrError, Result};

/// Value of `q` in powers of the second, with c and ħ taken from `basis`.
/// Returns the magnitude and the integer power `i` of `s^i`.
pub fn natural_value(q: &Quantity, basis: &ConstantSet) -> Result<(PrecReal, i64)> {
    let c = basis.get("c")?;
    let hbar = basis.get("hbar")?;
    let dims = q.dims.reduce_charge();
    if dims.temperature != Rational64::from_integer(0) {
        return Err(FtrError::Domain(
            "temperature has no natural-unit reduction without k_B".into(),
        ));
    }
    let digits = q.digits().max(basis.digits());
    let one = PrecReal::one(digits);
    let per_cm = &one / &c.mag;
    let per_g = (&c.mag * &c.mag) / &hbar.mag;
    let big = |r: Rational64| BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()));
    let mag = &q.mag * per_cm.pow_ratio(&big(dims.length))? * per_g.pow_ratio(&big(dims.mass))?;
    let power = dims.length - dims.mass + dims.time;
    if !power.is_integer() {
        return Err(FtrError::Domain(format!(
            "{} reduces to a fractional power of the second",
            q.dims
        )));
    }
    Ok((mag, *power.numer()))
}

/// c = 3×10¹⁰ cm/s and ħ = 1.054×10⁻²⁷ erg·s: the rounded values of the
/// classic hand conversion (1 s = 3×10⁸ m, 1 s = 1.054×10⁻³⁴ kg·m²).
pub fn rounded_basis(digits: u32) -> ConstantSet {
    let mut set = ConstantSet::empty(Provenance::User, digits);
    set.insert("c", "3e10", "cm.s-1").expect("literal");
    set.insert("hbar", "1.054e-27", "erg.s").expect("literal");
    set
}
