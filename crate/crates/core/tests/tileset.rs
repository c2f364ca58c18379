use jr::tileset::{Configuration, Side, TileError, TileSet, Validity};
use sha2::{Digest, Sha256};

const FROZEN_TILES: [(u8, u8, u8, u8); 11] = [
    (0, 1, 0, 2),
    (3, 4, 3, 2),
    (3, 2, 5, 1),
    (3, 2, 3, 2),
    (3, 2, 3, 1),
    (0, 2, 3, 2),
    (3, 1, 3, 1),
    (5, 1, 3, 1),
    (3, 1, 3, 2),
    (3, 1, 3, 4),
    (3, 2, 0, 1),
];

#[test]
fn default_tiles_match_frozen_edges() {
    let ts = TileSet::load_default().unwrap();
    for (i, &(e, n, w, s)) in FROZEN_TILES.iter().enumerate() {
        let t = ts.tile(i as u8);
        assert_eq!((t.east, t.north, t.west, t.south), (e, n, w, s), "tile {i}");
    }
}

#[test]
fn structural_facts_hold_exhaustively() {
    let ts = TileSet::load_default().unwrap();
    // Tile 0 tiles a horizontal row on its own.
    let row = Configuration::from_fn((-10, 0, 9, 0), |_, _| 0);
    assert!(ts.is_valid(&row).is_ok());
    // A single tile tiles a horizontal row exactly when east = west.
    for i in 0..11u8 {
        let row = Configuration::from_fn((0, 0, 1, 0), |_, _| i);
        let t = ts.tile(i);
        assert_eq!(ts.is_valid(&row).is_ok(), t.east == t.west, "tile {i}");
    }
    // Exactly tile 9 fits on top of tile 1.
    for i in 0..11u8 {
        let stack = Configuration::from_fn((0, 0, 0, 1), |_, y| if y == 0 { 1 } else { i });
        assert_eq!(ts.is_valid(&stack).is_ok(), i == 9, "tile {i} atop tile 1");
    }
}

#[test]
fn violations_are_reported_with_position_and_side() {
    let ts = TileSet::load_default().unwrap();
    // 0 east-of 0 is fine; 0 above 0 is not (north 1 vs south 2).
    let stack = Configuration::from_fn((4, -2, 4, -1), |_, _| 0);
    match ts.is_valid(&stack) {
        Validity::Violations(v) => {
            assert_eq!(v.len(), 1);
            assert_eq!(v[0].position, (4, -2));
            assert_eq!(v[0].side, Side::North);
        }
        Validity::Ok => panic!("expected a violation"),
    }
}

#[test]
fn tampered_tile_data_is_rejected() {
    let data = jr::tileset::DEFAULT_TILE_DATA;
    let bad = data.replace("checksum 3", "checksum 4");
    assert!(matches!(
        TileSet::load(&bad),
        Err(TileError::Checksum { .. })
    ));
    // Duplicate edge colors (resealed) must be rejected.
    let body = &data[..data.rfind("checksum ").unwrap()];
    let body = body.replacen("6: 3 1 3 1", "6: 3 2 3 2", 1);
    let resealed = format!("{body}checksum {:x}\n", Sha256::digest(body.as_bytes()));
    assert!(matches!(
        TileSet::load(&resealed),
        Err(TileError::Invariant(_))
    ));
}

#[test]
fn worm_flip_is_an_involution_on_worm_rows() {
    let ts = TileSet::load_default().unwrap();
    // Two rows drawn from the labels that occur in an unresolved slope-0 worm.
    let labels = [0u8, 1, 3, 6, 8, 9];
    let c = Configuration::from_fn((0, 0, 5, 1), |x, y| labels[(x as usize + y as usize) % 6]);
    let flipped = ts.flip_slope0_worm(&c, (0, 1)).unwrap();
    for ((x, y), &t) in &c.cells {
        let f = flipped.get(*x, *y).unwrap();
        let want = match t {
            0 => 6,
            6 => 0,
            1 => 9,
            9 => 1,
            other => other,
        };
        assert_eq!(f, want);
    }
    let back = ts.flip_slope0_worm(&flipped, (0, 1)).unwrap();
    assert_eq!(back, c);
    // Rows outside the pair are untouched.
    let mut three = Configuration::from_fn((0, 0, 2, 2), |_, _| 3);
    three.cells.insert((1, 2), 10);
    let out = ts.flip_slope0_worm(&three, (0, 1)).unwrap();
    assert_eq!(out.get(1, 2), Some(10));
}

#[test]
fn worm_flip_rejects_non_worm_labels() {
    let ts = TileSet::load_default().unwrap();
    let c = Configuration::from_fn((0, 0, 1, 1), |x, y| if (x, y) == (1, 1) { 5 } else { 0 });
    match ts.flip_slope0_worm(&c, (0, 1)) {
        Err(TileError::FlipPrecondition { tile: 5, x: 1, y: 1 }) => {}
        other => panic!("expected flip precondition error, got {other:?}"),
    }
}

#[test]
fn configuration_text_round_trip() {
    let c = Configuration::from_fn((-2, -1, 3, 2), |x, y| ((x + 7 * y).rem_euclid(11)) as u8);
    let text = c.to_text();
    assert!(text.starts_with("window -2 -1 3 2\n"));
    let back = Configuration::from_text(&text).unwrap();
    assert_eq!(back, c);
    // Holes serialize as "." and survive the round trip.
    let mut sparse = Configuration::new((0, 0, 2, 0));
    sparse.cells.insert((1, 0), 4);
    let back = Configuration::from_text(&sparse.to_text()).unwrap();
    assert_eq!(back, sparse);
    assert!(Configuration::from_text("nonsense").is_err());
}

#[test]
fn difference_set_requires_matching_windows() {
    let a = Configuration::from_fn((0, 0, 1, 1), |_, _| 0);
    let b = Configuration::from_fn((0, 0, 2, 1), |_, _| 0);
    assert!(matches!(
        a.difference_set(&b),
        Err(TileError::WindowMismatch)
    ));
    let mut c = a.clone();
    c.cells.insert((1, 0), 6);
    assert_eq!(a.difference_set(&c).unwrap(), vec![(1, 0)]);
    assert!(a.difference_set(&a).unwrap().is_empty());
}
