//! Exact f-polynomial calculus for ladder complexes: `F_n`, `P_n`, the
//! map `A_d`, Catalan closed forms and affine rank.

mod amap;
mod ladder;
mod poly;
mod rank;

pub use amap::{
    a_basis_image, a_of_one, a_unit_closed_form, apply_a, catalan, catalan_identity_check,
    CatalanIdentity,
};
pub use ladder::{
    binomial, f_polynomial, f_polynomial_by_enumeration, multiset_no_consecutive_count, p_closed_form,
    p_polynomial,
};
pub use poly::IntPolynomial;
pub use rank::{affine_rank, affine_rank_of_points, bareiss_rank};

#[cfg(test)]
mod tests;
