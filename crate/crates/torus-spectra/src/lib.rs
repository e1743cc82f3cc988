//! Torus covers of index sets, cyclic Hall subgroups and spectral bounds.

mod bounds;
mod cover;
mod error;
mod hall;

pub use bounds::{big_spectral_element, max_spectral_bound, BigSpectralElement, WitnessKind};
pub use cover::{
    find_cover, mixed_member, part_covers, semisimple_member, CoverGrade, CoverMode, CoverPart,
    IndexCover, PartKind,
};
pub use error::{Result, SpectraError};
pub use hall::has_cyclic_hall;
