use jr::exactnum::{GoldenNum, Vec2};
use jr::partition::{
    self, normalize_delta_line, Location, Partition, PartitionError, SlopeClass,
};
use jr::torus::TorusPoint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

fn g(a: i64, b: i64) -> GoldenNum {
    GoldenNum::of(a, b)
}

fn tp(x: GoldenNum, y: GoldenNum) -> TorusPoint {
    TorusPoint::reduce(&Vec2::new(x, y))
}

fn reseal(body: &str) -> String {
    format!("{body}checksum {:x}\n", Sha256::digest(body.as_bytes()))
}

#[test]
fn default_data_loads_with_all_invariants() {
    let p = Partition::load_default().unwrap();
    assert_eq!(p.atoms.len(), 11);
    assert_eq!(p.lines.len(), 18);
    let total: GoldenNum = p
        .atoms
        .iter()
        .flat_map(|a| a.pieces.iter())
        .map(|poly| poly.signed_area())
        .fold(GoldenNum::zero(), |acc, a| acc + a);
    assert_eq!(total, g(1, 4), "total area must be 4*phi + 1");
}

#[test]
fn tampered_data_is_rejected() {
    let data = partition::DEFAULT_PARTITION_DATA;
    // Wrong checksum.
    let bad = data.replace("checksum a", "checksum b");
    assert!(matches!(
        Partition::load(&bad),
        Err(PartitionError::Checksum { .. })
    ));
    // An atom removed entirely (resealed so the checksum passes).
    let body: String = data[..data.rfind("checksum ").unwrap()]
        .lines()
        .filter(|l| !l.starts_with("atom 10"))
        .map(|l| format!("{l}\n"))
        .collect();
    match Partition::load(&reseal(&body)) {
        Err(PartitionError::Invariant(m)) => assert!(m.contains("atom 10"), "{m}"),
        Err(other) => panic!("expected invariant violation, got {other:?}"),
        Ok(_) => panic!("expected invariant violation, got a partition"),
    }
    // A perturbed vertex breaks area or disjointness.
    let body = data[..data.rfind("checksum ").unwrap()]
        .replacen("(1/1, 1/1)", "(9/10, 1/1)", 1);
    assert!(matches!(
        Partition::load(&reseal(&body)),
        Err(PartitionError::Invariant(_))
    ));
}

#[test]
fn locate_interior_fixture() {
    let p = Partition::load_default().unwrap();
    let loc = p.locate(&tp(GoldenNum::rational(1, 2), GoldenNum::rational(1, 2)));
    assert_eq!(loc, Location::Interior(1));
}

#[test]
fn locate_boundary_fixtures() {
    let p = Partition::load_default().unwrap();
    // (1/4)(phi-1, 1) lies on the slope-phi line through (0,0)-(phi-1,1).
    let q = tp(
        g(-1, 1) / GoldenNum::from_int(4),
        GoldenNum::rational(1, 4),
    );
    match p.locate(&q) {
        Location::Boundary(ids) => assert!(ids.contains(&3), "ids: {ids:?}"),
        other => panic!("expected boundary, got {other:?}"),
    }
    // The origin meets Delta-lines of all four slope classes.
    match p.locate(&tp(g(0, 0), g(0, 0))) {
        Location::Boundary(ids) => {
            let classes: std::collections::BTreeSet<SlopeClass> = ids
                .iter()
                .map(|&id| p.line(id).unwrap().slope)
                .collect();
            assert_eq!(classes.len(), 4, "ids: {ids:?}");
        }
        other => panic!("expected boundary, got {other:?}"),
    }
}

#[test]
fn code_with_direction_fixtures() {
    let p = Partition::load_default().unwrap();
    // Interior point: any admissible direction gives the locate label.
    let q = tp(GoldenNum::rational(1, 2), GoldenNum::rational(1, 2));
    for v in [Vec2::of(1, -1), Vec2::of(-1, 1), Vec2::of(2, -1)] {
        assert_eq!(p.code_with_direction(&q, &v).unwrap(), 1);
    }
    // Boundary point: opposite directions resolve to distinct labels.
    let q = tp(
        g(-1, 1) / GoldenNum::from_int(4),
        GoldenNum::rational(1, 4),
    );
    let plus = p.code_with_direction(&q, &Vec2::of(1, -1)).unwrap();
    let minus = p.code_with_direction(&q, &Vec2::of(-1, 1)).unwrap();
    assert_eq!(plus, 1);
    assert_eq!(minus, 6);
    // Origin, direction (1,-1): the atom south-east of the junction.
    let origin = tp(g(0, 0), g(0, 0));
    assert_eq!(p.code_with_direction(&origin, &Vec2::of(1, -1)).unwrap(), 0);
    // A direction parallel to a slope class is rejected.
    assert!(matches!(
        p.code_with_direction(&origin, &Vec2::of(1, 0)),
        Err(PartitionError::BadDirection(_))
    ));
    assert!(!Partition::direction_admissible(&Vec2::new(
        GoldenNum::one(),
        GoldenNum::phi()
    )));
}

#[test]
fn normalization_lookup_examples() {
    assert_eq!(normalize_delta_line(1, &g(0, 0), &g(0, 1)).unwrap(), (0, 1));
    assert_eq!(
        normalize_delta_line(16, &g(2, 1), &g(4, 0)).unwrap(),
        (-2, -2)
    );
    assert_eq!(
        normalize_delta_line(14, &g(0, 0), &g(5, -3)).unwrap(),
        (-3, -2)
    );
    assert!(normalize_delta_line(1, &g(0, 0), &g(1, 0)).is_err());
}

#[test]
fn every_normalization_row_is_sound() {
    let p = Partition::load_default().unwrap();
    for row in partition::normalization_table() {
        assert!(
            partition::verify_table_row(&p, &row),
            "row failed: line {} over [{}, {}] shift {:?}",
            row.line,
            row.lo,
            row.hi,
            row.shift
        );
    }
}

#[test]
fn eq_slope_coincidences_small_bound() {
    let p = Partition::load_default().unwrap();
    for point in partition::delta_coincidences(&p, 2) {
        assert!(
            jr::torus::in_lattice_plus_z2(&point),
            "coincidence {point} outside the origin orbit"
        );
    }
}

#[test]
fn horizontal_rigidity_sets() {
    let p = Partition::load_default().unwrap();
    // Frozen from an independent exact oracle over the arrangement.
    let expected: &[(u8, &[i64])] = &[
        (3, &[0, 1]),
        (4, &[-1, 0]),
        (5, &[0, 1]),
        (6, &[-1, 0]),
        (7, &[0]),
        (8, &[0, 1, 2]),
        (9, &[-1, 0]),
        (10, &[0]),
        (11, &[-1, 0]),
        (12, &[0, 1]),
        (13, &[0, 1]),
        (14, &[-1, 0]),
        (15, &[0]),
        (16, &[-2, -1, 0]),
        (17, &[0, 1, 2]),
        (18, &[-1, 0]),
    ];
    for (id, want) in expected {
        let got = partition::horizontal_translates(&p, *id, 10);
        assert_eq!(&got, want, "line {id}");
        assert!(got.len() <= 3, "rigidity: at most 3 translates per line");
    }
}

#[test]
fn locate_agrees_with_coding_on_random_points() {
    let p = Partition::load_default().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let v = Vec2::of(1, -1);
    for _ in 0..200 {
        let q = tp(
            GoldenNum::rational(rng.gen_range(-999i64..=999), rng.gen_range(1i64..=97)),
            GoldenNum::rational(rng.gen_range(-999i64..=999), rng.gen_range(1i64..=97)),
        );
        match p.locate(&q) {
            Location::Interior(a) => {
                assert_eq!(p.code_with_direction(&q, &v).unwrap(), a);
            }
            Location::Boundary(ids) => assert!(!ids.is_empty()),
        }
    }
}
