//! Symbolic representation of torus points: coding a point into a Wang
//! configuration over a window, the x+/x- pair at boundary points, and
//! difference sets.

use crate::exactnum::Vec2;
use crate::partition::{Partition, PartitionError};
use crate::tileset::Configuration;
use crate::torus::TorusPoint;
use rayon::prelude::*;

/// The default coding direction of the figures.
pub fn default_direction() -> Vec2 {
    Vec2::of(1, -1)
}

/// Codes `p` over the closed window: the cell at n is the label of the atom
/// containing act(n, p), disambiguated toward `v` on the boundary.
pub fn configuration(
    p: &TorusPoint,
    v: &Vec2,
    window: (i64, i64, i64, i64),
) -> Result<Configuration, PartitionError> {
    let partition = crate::default_partition();
    configuration_with(partition, p, v, window)
}

pub fn configuration_with(
    partition: &Partition,
    p: &TorusPoint,
    v: &Vec2,
    window: (i64, i64, i64, i64),
) -> Result<Configuration, PartitionError> {
    if !Partition::direction_admissible(v) {
        return Err(PartitionError::BadDirection(v.to_string()));
    }
    let (x0, y0, x1, y1) = window;
    let rows: Vec<Vec<u8>> = (y0..=y1)
        .into_par_iter()
        .map(|y| {
            (x0..=x1)
                .map(|x| {
                    let q = p.act(x, y);
                    // Interior cells are direction-independent; the costly
                    // ray cast is only needed on the boundary.
                    match partition.locate(&q) {
                        crate::partition::Location::Interior(a) => a,
                        crate::partition::Location::Boundary(_) => partition
                            .code_with_direction(&q, v)
                            .expect("direction already validated"),
                    }
                })
                .collect()
        })
        .collect();
    let mut c = Configuration::new(window);
    for (iy, row) in rows.into_iter().enumerate() {
        for (ix, t) in row.into_iter().enumerate() {
            c.cells.insert((x0 + ix as i64, y0 + iy as i64), t);
        }
    }
    Ok(c)
}

/// The pair (x+, x-) coded with directions v and -v.
pub fn symbolic_pair(
    p: &TorusPoint,
    v: &Vec2,
    window: (i64, i64, i64, i64),
) -> Result<(Configuration, Configuration), PartitionError> {
    let partition = crate::default_partition();
    symbolic_pair_with(partition, p, v, window)
}

pub fn symbolic_pair_with(
    partition: &Partition,
    p: &TorusPoint,
    v: &Vec2,
    window: (i64, i64, i64, i64),
) -> Result<(Configuration, Configuration), PartitionError> {
    let plus = configuration_with(partition, p, v, window)?;
    let neg = v.scale(&crate::exactnum::GoldenNum::from_int(-1));
    let minus = configuration_with(partition, p, &neg, window)?;
    Ok((plus, minus))
}
