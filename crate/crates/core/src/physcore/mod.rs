//! Constants, dimension-tagged quantities and unit conversion.

pub mod constants;
mod quantity;
mod units;

pub use quantity::{Dimension, Quantity};
pub use units::{convert, thermal_energy, Unit};
