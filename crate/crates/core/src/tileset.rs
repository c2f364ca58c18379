//! The Jeandel-Rao set of 11 Wang tiles, edge-matching validity of finite
//! configurations, and the slope-0 worm relabeling (0 <-> 6, 9 <-> 1).

use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::fmt;

/// Built-in tile data (edge colors, checksummed).
pub const DEFAULT_TILE_DATA: &str = include_str!("../data/tiles.txt");

/// One Wang tile: four edge colors in the order east, north, west, south.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct WangTile {
    pub index: u8,
    pub east: u8,
    pub north: u8,
    pub west: u8,
    pub south: u8,
}

#[derive(Debug, thiserror::Error)]
pub enum TileError {
    #[error("tile data parse error: {0}")]
    Parse(String),
    #[error("tile data checksum mismatch (stored {stored}, computed {computed})")]
    Checksum { stored: String, computed: String },
    #[error("tile set invariant violated: {0}")]
    Invariant(String),
    #[error("window mismatch between configurations")]
    WindowMismatch,
    #[error("worm flip precondition violated: tile {tile} at ({x}, {y}) is not a slope-0 worm label")]
    FlipPrecondition { tile: u8, x: i64, y: i64 },
}

/// The 11-tile set, immutable after load.
pub struct TileSet {
    pub tiles: Vec<WangTile>,
    pub checksum: String,
}

impl TileSet {
    pub fn load_default() -> Result<TileSet, TileError> {
        TileSet::load(DEFAULT_TILE_DATA)
    }

    /// Parses "index: E N W S" records and checks the structural facts:
    /// 11 distinct tiles, a horizontal row of tile 0 is legal, and the only
    /// tile that may sit on top of tile 1 is tile 9.
    pub fn load(data: &str) -> Result<TileSet, TileError> {
        let pos = data
            .rfind("checksum ")
            .ok_or_else(|| TileError::Parse("missing checksum line".into()))?;
        let body = &data[..pos];
        let stored = data[pos + "checksum ".len()..].trim().to_string();
        let computed = format!("{:x}", Sha256::digest(body.as_bytes()));
        if stored != computed {
            return Err(TileError::Checksum { stored, computed });
        }

        let mut tiles = Vec::new();
        for (ln, raw) in body.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mk_err = |m: String| TileError::Parse(format!("line {}: {m}", ln + 1));
            let (idx, colors) = line
                .split_once(':')
                .ok_or_else(|| mk_err("missing ':'".into()))?;
            let index: u8 = idx
                .trim()
                .parse()
                .map_err(|_| mk_err(format!("bad index {idx:?}")))?;
            let c: Vec<u8> = colors
                .split_whitespace()
                .map(|t| t.parse::<u8>().map_err(|_| mk_err(format!("bad color {t:?}"))))
                .collect::<Result<_, _>>()?;
            if c.len() != 4 {
                return Err(mk_err("expected 4 edge colors".into()));
            }
            tiles.push(WangTile {
                index,
                east: c[0],
                north: c[1],
                west: c[2],
                south: c[3],
            });
        }
        tiles.sort_by_key(|t| t.index);
        let set = TileSet {
            tiles,
            checksum: stored,
        };
        set.validate()?;
        Ok(set)
    }

    fn validate(&self) -> Result<(), TileError> {
        if self.tiles.len() != 11 {
            return Err(TileError::Invariant(format!(
                "expected 11 tiles, found {}",
                self.tiles.len()
            )));
        }
        for (i, t) in self.tiles.iter().enumerate() {
            if t.index as usize != i {
                return Err(TileError::Invariant(format!(
                    "tile indices must be 0..10, found {}",
                    t.index
                )));
            }
        }
        for i in 0..11 {
            for j in (i + 1)..11 {
                let (a, b) = (&self.tiles[i], &self.tiles[j]);
                if (a.east, a.north, a.west, a.south) == (b.east, b.north, b.west, b.south) {
                    return Err(TileError::Invariant(format!(
                        "tiles {i} and {j} have identical edge colors"
                    )));
                }
            }
        }
        // A bi-infinite horizontal row of tile 0 is legal.
        if self.tiles[0].east != self.tiles[0].west {
            return Err(TileError::Invariant(
                "a horizontal row of tile 0 must be legal (east = west)".into(),
            ));
        }
        // The only tile that may sit on top of tile 1 is tile 9.
        for t in &self.tiles {
            let fits = t.south == self.tiles[1].north;
            if fits != (t.index == 9) {
                return Err(TileError::Invariant(format!(
                    "tile {} on top of tile 1: expected {}, data says {}",
                    t.index,
                    t.index == 9,
                    fits
                )));
            }
        }
        Ok(())
    }

    pub fn tile(&self, index: u8) -> &WangTile {
        &self.tiles[index as usize]
    }

    /// Checks edge matching of every adjacent pair inside the window.
    pub fn is_valid(&self, c: &Configuration) -> Validity {
        let mut violations = Vec::new();
        for ((x, y), &t) in &c.cells {
            let t = self.tile(t);
            if let Some(&r) = c.cells.get(&(x + 1, *y)) {
                if t.east != self.tile(r).west {
                    violations.push(Violation {
                        position: (*x, *y),
                        side: Side::East,
                    });
                }
            }
            if let Some(&u) = c.cells.get(&(*x, y + 1)) {
                if t.north != self.tile(u).south {
                    violations.push(Violation {
                        position: (*x, *y),
                        side: Side::North,
                    });
                }
            }
        }
        if violations.is_empty() {
            Validity::Ok
        } else {
            Validity::Violations(violations)
        }
    }

    /// The slope-0 worm relabeling on two rows: 9 -> 1, 1 -> 9, 0 -> 6,
    /// 6 -> 0 (an involution). Every cell on the two rows must carry one of
    /// the labels that occur in an unresolved slope-0 worm.
    pub fn flip_slope0_worm(
        &self,
        c: &Configuration,
        rows: (i64, i64),
    ) -> Result<Configuration, TileError> {
        const WORM_LABELS: [u8; 6] = [0, 1, 3, 6, 8, 9];
        let mut out = c.clone();
        for ((x, y), t) in out.cells.iter_mut() {
            if *y != rows.0 && *y != rows.1 {
                continue;
            }
            if !WORM_LABELS.contains(t) {
                return Err(TileError::FlipPrecondition {
                    tile: *t,
                    x: *x,
                    y: *y,
                });
            }
            *t = match *t {
                0 => 6,
                6 => 0,
                9 => 1,
                1 => 9,
                other => other,
            };
        }
        Ok(out)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    East,
    North,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Violation {
    pub position: (i64, i64),
    pub side: Side,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Validity {
    Ok,
    Violations(Vec<Violation>),
}

impl Validity {
    pub fn is_ok(&self) -> bool {
        matches!(self, Validity::Ok)
    }
}

/// A finite coded window: a map from integer points to tile indices over a
/// closed rectangle.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Configuration {
    /// Inclusive window corners (x0, y0, x1, y1).
    pub window: (i64, i64, i64, i64),
    pub cells: BTreeMap<(i64, i64), u8>,
}

impl Configuration {
    pub fn new(window: (i64, i64, i64, i64)) -> Configuration {
        Configuration {
            window,
            cells: BTreeMap::new(),
        }
    }

    pub fn from_fn(
        window: (i64, i64, i64, i64),
        mut f: impl FnMut(i64, i64) -> u8,
    ) -> Configuration {
        let mut c = Configuration::new(window);
        for y in window.1..=window.3 {
            for x in window.0..=window.2 {
                c.cells.insert((x, y), f(x, y));
            }
        }
        c
    }

    pub fn get(&self, x: i64, y: i64) -> Option<u8> {
        self.cells.get(&(x, y)).copied()
    }

    /// Exact disagreement set of two configurations over the same window.
    pub fn difference_set(&self, other: &Configuration) -> Result<Vec<(i64, i64)>, TileError> {
        if self.window != other.window {
            return Err(TileError::WindowMismatch);
        }
        Ok(self
            .cells
            .iter()
            .filter(|(k, v)| other.cells.get(k) != Some(v))
            .map(|(k, _)| *k)
            .collect())
    }

    /// Text serialization: window line then row-major label grid, top row
    /// first (north up).
    pub fn to_text(&self) -> String {
        let (x0, y0, x1, y1) = self.window;
        let mut s = format!("window {x0} {y0} {x1} {y1}\n");
        for y in (y0..=y1).rev() {
            let row: Vec<String> = (x0..=x1)
                .map(|x| {
                    self.get(x, y)
                        .map(|t| t.to_string())
                        .unwrap_or_else(|| ".".into())
                })
                .collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Configuration, TileError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| TileError::Parse("empty configuration text".into()))?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        if parts.len() != 5 || parts[0] != "window" {
            return Err(TileError::Parse(format!("bad window header {header:?}")));
        }
        let nums: Vec<i64> = parts[1..]
            .iter()
            .map(|t| t.parse().map_err(|_| TileError::Parse(format!("bad bound {t:?}"))))
            .collect::<Result<_, _>>()?;
        let window = (nums[0], nums[1], nums[2], nums[3]);
        let mut c = Configuration::new(window);
        for (i, row) in lines.enumerate() {
            let y = window.3 - i as i64;
            for (j, tok) in row.split_whitespace().enumerate() {
                let x = window.0 + j as i64;
                if tok == "." {
                    continue;
                }
                let t: u8 = tok
                    .parse()
                    .map_err(|_| TileError::Parse(format!("bad tile {tok:?}")))?;
                c.cells.insert((x, y), t);
            }
        }
        Ok(c)
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
