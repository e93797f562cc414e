//! Exact Grassmann algebra and Berezin integration: Pfaffians by two routes,
//! the normalized zero-mode measure, and the finite-dimensional vertex
//! integrals for `b1 = 3` and `b1 = 2`.

mod grassmann;
mod matrix;
mod vertex;

pub use grassmann::{GrassmannElement, MAX_GENERATORS};
pub use matrix::{
    change_of_variables_sides, determinant, gaussian_norm_check, inverse, normalized_integral, pfaffian,
    AntisymMatrix, PfaffianMethod,
};
pub use vertex::{
    tadpole_contract, vertex_integral_b2, vertex_integral_b2_auxiliary, vertex_integral_b3, SyntheticCurvature,
};
