//! Exact-arithmetic toolkit for the Jeandel-Rao Wang shift: golden-field
//! numbers, the torus R^2/Gamma_0 and its Markov partition, symbolic coding
//! into the 11-tile set, nonexpansive-direction certification, and the
//! Sturmian structure of Conway worms.

pub mod coding;
pub mod exactnum;
pub mod nonexpansive;
pub mod partition;
pub mod render;
pub mod tileset;
pub mod torus;
pub mod worms;

use std::sync::OnceLock;

/// The built-in partition, loaded and validated once.
pub fn default_partition() -> &'static partition::Partition {
    static PARTITION: OnceLock<partition::Partition> = OnceLock::new();
    PARTITION.get_or_init(|| {
        partition::Partition::load_default().expect("built-in partition data is valid")
    })
}

/// The built-in tile set, loaded and validated once.
pub fn default_tileset() -> &'static tileset::TileSet {
    static TILESET: OnceLock<tileset::TileSet> = OnceLock::new();
    TILESET
        .get_or_init(|| tileset::TileSet::load_default().expect("built-in tile data is valid"))
}
