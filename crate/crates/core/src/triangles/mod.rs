//! Stirling, Lah and generalized Comtet triangles.

mod comtet;
pub mod persist;
mod table;

pub use comtet::{comtet_first, comtet_second_composite, comtet_second_composite_row, ParameterSpec};
pub use table::{
    lah, lah_row, stirling_first, stirling_first_row, stirling_first_unsigned, stirling_second,
    stirling_second_row, TriangleCache, TriangleKind, TriangleTable,
};
