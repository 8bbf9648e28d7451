//! The Temperley–Lieb diagram calculus.

mod diagram;
mod jones_wenzl;
mod morphism;
pub mod network;
mod symbolic;

pub use diagram::PlanarDiagram;
pub use jones_wenzl::{jones_wenzl, jones_wenzl_at_level, level_delta, Projectors};
pub use morphism::TLMorphism;
pub use symbolic::{psi, RationalFunction};
