//! The bosonic Fock space of an even lattice with exact operator actions:
//! mode operators, vertex-operator coefficients, Virasoro operators, the
//! bilinear form, physical-state spaces, the weight-one Lie bracket, DDF
//! transverse operators and longitudinal operators.

pub mod state;

mod modes;
mod vertex;

pub use modes::{virasoro_bosonic, virasoro_fermionic, virasoro_ns, super_g, super_g_pm, super_j, IsotropicFrame};
pub use state::{apply_bmode, apply_fmode, translate, weight, Frame, Monomial, State};
pub use vertex::{apply_field_product, monomial_factors, residue, vertex_mode, Factor, VertexError};
