//! Index-level prime graphs of classical groups and their largest cocliques.

mod adjacency;
mod bits;
mod clique;
mod coclique;
mod error;
mod export;
mod formulas;
mod graph;
mod large;
mod zeta;

pub use adjacency::{char_nonadjacent, is_vertex_index, nonadjacent};
pub use bits::Bits;
pub use clique::CliqueSearch;
pub use coclique::{max_coclique_exact, CocliqueReport, CocliqueSource};
pub use error::{GraphError, Result};
pub use export::{to_dot, to_json};
pub use formulas::{
    anchored_lookup, anchored_rows, char_coclique_formulas, coclique_formulas, AnchoredCondition,
    AnchoredRow, CharCocliqueRow, CocliqueRow, RPartRelation, TABLE_FLOOR,
};
pub use graph::{Analysis, GraphShape, IndexGraph, Vertex};
pub use large::{classify_large, Largeness};
pub use zeta::{
    closed_form_discrepancies, exceptional_offset, expected_m_minus_n, expected_n_minus_m,
    statement_discrepancies, zeta_as_stated_minus, zeta_closed_form, zeta_floor, zeta_table,
    ZetaDiscrepancy, ZetaTable,
};
