//! Exact and arbitrary-precision arithmetic with dimension tracking.

mod constants;
mod dims;
mod exact;
mod natural;
mod prec;
mod quantity;

pub use constants::{
    load_constants, registry_dims, ConstantEntry, ConstantSet, Provenance, MODERN_DATASET,
    PAPER_ERA_DATASET,
};
pub use dims::DimSig;
pub use exact::{beta, BigCount, ExactRational};
pub use natural::{natural_value, rounded_basis};
pub use prec::{format_sig, round_sig, PrecReal, DEFAULT_DIGITS, MIN_DIGITS};
pub use quantity::{parse_unit, qadd, qmul, qpow, Quantity, EV_IN_ERG, MPC_IN_CM};
