//! Exact certification of the algebra and geometry of quantum P³s that
//! degenerate from Sklyanin algebras and localize to U_q(sl₂).

pub mod exactfield;
pub mod ncalg;
pub mod catalog;
pub mod cpoly;
pub mod certificate;
pub mod ptscheme;
pub mod projgeom;
pub mod gmod;
pub mod uq;
pub mod degeneration;
pub mod registry;
