//! Exact rational cones: double description, Rees and Simis cones, and the
//! irreducible representation of a Rees cone.

mod dd;
mod rees;

pub use dd::{dd_facets, dd_rays, is_pointed, HalfspaceSystem, RayList};
pub use rees::{cover_cone, irreducible_representation, psi_image, rees_cone, simis_cone, ReesRepresentation};
