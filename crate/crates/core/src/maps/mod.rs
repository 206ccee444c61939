//! Vector-valued polynomial maps, the Euclidean operators acting on them, and
//! sphere-restriction verification.

mod domain;
mod meta;
mod operators;
mod polymap;

pub use domain::Domain;
pub use meta::{energy_density, sphere_restriction_check, KindHint, MapKind, SphereMapMeta};
pub use operators::{
    apply_linear_map, differential_inner, euclidean_laplacian, grad_norm_squared, gradient,
    hessian_norm_squared, laplacian_poly, push_gradient, radial_derivative, radial_poly,
    radial_poly_on, radius_power, sphere_laplacian, LAPLACIAN_CONVENTION,
};
pub use polymap::PolyMap;
