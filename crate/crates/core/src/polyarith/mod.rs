//! Exact polynomial arithmetic over the rationals with weighted gradings.

mod monomial;
mod ops;
mod parse;
mod poly;
mod ring;

pub use monomial::{monomials_of_degree, Monomial};
pub use ops::{
    det_poly, direct_sum, extend_ring, gradient, hessian, homogenize, homogenize_new, jacobian_det,
    permutation_matrix, specialize, substitute, substitute_linear,
};
pub use parse::{parse, parse_list, MAX_EXPONENT};
pub use poly::{rat, ratio, Polynomial, Rational};
pub use ring::{Ring, VarSet};
