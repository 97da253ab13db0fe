//! Exact scalars: rationals, dense polynomials and canonical rational functions in one variable `u`.

mod poly;
mod rational;
mod rf;

pub use poly::Poly;
pub use rational::{q, qi, Rational};
pub use rf::{rf_arith, RationalFunction, RfOp, ValueAtInfinity};
pub(crate) use rf::series_of;
