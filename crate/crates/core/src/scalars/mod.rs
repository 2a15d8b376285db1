//! Exact scalars: Laurent polynomials and rational functions in `q`.

mod laurent;
mod qnum;
mod ratfunc;
mod text;

pub use laurent::LaurentPoly;
pub use qnum::{q_binomial, q_factorial, q_factorial_sym, q_int, q_int_sym};
pub use ratfunc::{arith, ArithOp, RatFunc};
pub use text::parse_scalar;
