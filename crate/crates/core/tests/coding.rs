use jr::coding::{configuration_with, default_direction, symbolic_pair_with};
use jr::exactnum::{GoldenNum, Vec2};
use jr::nonexpansive::{orbit_delta, predicted_strip, square_window};
use jr::partition::SlopeClass;
use jr::torus::TorusPoint;

fn point(x: GoldenNum, y: GoldenNum) -> TorusPoint {
    TorusPoint::reduce(&Vec2::new(x, y))
}

fn phi_boundary_point() -> TorusPoint {
    let q = GoldenNum::from_int(4);
    point(
        GoldenNum::of(-1, 1) / q.clone(),
        GoldenNum::one() / q,
    )
}

#[test]
fn coding_fixture_at_the_center_cell() {
    let p = jr::default_partition();
    let c = configuration_with(
        p,
        &point(GoldenNum::rational(1, 2), GoldenNum::rational(1, 2)),
        &default_direction(),
        (0, 0, 0, 0),
    )
    .unwrap();
    assert_eq!(c.get(0, 0), Some(1));
}

#[test]
fn coded_windows_are_valid_tilings() {
    let partition = jr::default_partition();
    let tiles = jr::default_tileset();
    let window = square_window(4);
    for p in [
        point(GoldenNum::rational(1, 2), GoldenNum::rational(1, 2)),
        phi_boundary_point(),
        point(GoldenNum::of(-1, 1), GoldenNum::rational(1, 5)),
    ] {
        let c = configuration_with(partition, &p, &default_direction(), window).unwrap();
        assert!(tiles.is_valid(&c).is_ok());
    }
}

#[test]
fn coding_is_direction_independent_off_the_boundary() {
    let partition = jr::default_partition();
    let p = point(GoldenNum::rational(1, 7), GoldenNum::rational(1, 13));
    let window = square_window(4);
    // Certify the point is generic on this window first.
    assert!(orbit_delta(partition, &p, window).is_empty());
    let base = configuration_with(partition, &p, &Vec2::of(1, -1), window).unwrap();
    for v in [Vec2::of(-1, 1), Vec2::of(2, -1), Vec2::of(-3, 1)] {
        let c = configuration_with(partition, &p, &v, window).unwrap();
        assert_eq!(c, base, "direction {v}");
    }
}

#[test]
fn coding_is_shift_equivariant() {
    let partition = jr::default_partition();
    let p = phi_boundary_point();
    let v = default_direction();
    let c = configuration_with(partition, &p, &v, (-3, -3, 3, 3)).unwrap();
    let q = p.act(1, -2);
    let d = configuration_with(partition, &q, &v, (-4, -1, 2, 5)).unwrap();
    for ((x, y), &t) in &c.cells {
        assert_eq!(d.get(x - 1, y + 2), Some(t), "cell ({x}, {y})");
    }
}

#[test]
fn symbolic_pair_coincides_at_generic_points() {
    let partition = jr::default_partition();
    let p = point(GoldenNum::rational(1, 7), GoldenNum::rational(1, 13));
    let window = square_window(4);
    let (plus, minus) = symbolic_pair_with(partition, &p, &default_direction(), window).unwrap();
    assert!(plus.difference_set(&minus).unwrap().is_empty());
}

#[test]
fn symbolic_pair_differs_exactly_on_orbit_boundary_cells() {
    let partition = jr::default_partition();
    let p = phi_boundary_point();
    let window = square_window(6);
    let hits = orbit_delta(partition, &p, window);
    assert!(!hits.is_empty());
    let (plus, minus) = symbolic_pair_with(partition, &p, &default_direction(), window).unwrap();
    let diff = plus.difference_set(&minus).unwrap();
    assert!(!diff.is_empty());
    for cell in &diff {
        assert!(hits.contains(cell), "diff cell {cell:?} off the boundary orbit");
    }
    // The disagreement set stays inside the predicted slope-phi strip widened
    // by the finite translate margin; 69*phi - 102 is the exact empirical
    // supremum of the bound excess for this point (stable for windows of
    // radius 30 through 60).
    let strip = predicted_strip(SlopeClass::Phi, &GoldenNum::of(-102, 69));
    for cell in &diff {
        assert_eq!(strip.excess(*cell), GoldenNum::zero(), "cell {cell:?}");
    }
    // Both members of the pair are valid tilings.
    let tiles = jr::default_tileset();
    assert!(tiles.is_valid(&plus).is_ok());
    assert!(tiles.is_valid(&minus).is_ok());
}

#[test]
fn inadmissible_directions_are_rejected() {
    let partition = jr::default_partition();
    let p = point(GoldenNum::rational(1, 2), GoldenNum::rational(1, 2));
    for v in [
        Vec2::of(1, 0),
        Vec2::of(0, 1),
        Vec2::new(GoldenNum::one(), GoldenNum::phi()),
    ] {
        assert!(configuration_with(partition, &p, &v, (0, 0, 0, 0)).is_err());
    }
}
