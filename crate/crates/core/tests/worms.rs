use jr::exactnum::GoldenNum;
use jr::nonexpansive::{orbit_delta, square_window};
use jr::partition::SlopeClass;
use jr::worms::{
    extract_patterns, factor_complexity, fibonacci_factor_check, fibonacci_word,
    height_sequence, heights_to_binary, mechanical_word, rotation_word, worm_anchors,
    worm_delta_set, RotationParams, WordKind, WormCase,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn g(a: i64, b: i64) -> GoldenNum {
    GoldenNum::of(a, b)
}

fn word_str(w: &[u8]) -> String {
    w.iter().map(|&c| char::from(b'0' + c)).collect()
}

#[test]
fn rotation_word_fixtures() {
    let params = RotationParams::worm(GoldenNum::rational(9, 10));
    assert_eq!(word_str(&rotation_word(&params, (0, 5))), "101001");
    assert_eq!(
        word_str(&rotation_word(&params, (-7, 6))),
        "00101001010010"
    );
    let params = RotationParams::worm(GoldenNum::rational(3, 10));
    assert_eq!(
        word_str(&mechanical_word(&params, (0, 10), WordKind::Lower)),
        "01001001010"
    );
}

#[test]
fn rotation_and_lower_mechanical_words_coincide() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..50 {
        let rho = GoldenNum::rational(rng.gen_range(0i64..997), 997);
        let params = RotationParams::worm(rho);
        assert_eq!(
            rotation_word(&params, (-60, 60)),
            mechanical_word(&params, (-60, 60), WordKind::Lower)
        );
    }
}

#[test]
fn upper_word_differs_only_at_singular_parameters() {
    // Non-singular rho: alpha*n + rho is never an integer, so floors and
    // ceilings tell the same story.
    let params = RotationParams::worm(GoldenNum::rational(9, 10));
    assert_eq!(
        mechanical_word(&params, (-100, 100), WordKind::Lower),
        mechanical_word(&params, (-100, 100), WordKind::Upper)
    );
    // Singular rho = fract(-3 * alpha) = 3*phi - 4 makes alpha*3 + rho an
    // integer; the lower and upper words then swap one adjacent "10" <-> "01".
    let params = RotationParams::worm(g(-4, 3));
    let lower = mechanical_word(&params, (0, 6), WordKind::Lower);
    let upper = mechanical_word(&params, (0, 6), WordKind::Upper);
    let diff: Vec<usize> = (0..lower.len()).filter(|&i| lower[i] != upper[i]).collect();
    assert_eq!(diff, vec![2, 3]);
    assert_eq!((lower[2], lower[3]), (1, 0));
    assert_eq!((upper[2], upper[3]), (0, 1));
}

#[test]
fn placement_matrix_encodes_the_b_and_g_vectors() {
    for slope in SlopeClass::ALL {
        let case = WormCase::for_slope(slope);
        let b = case.b_vec();
        let gv = case.g_vec();
        assert_eq!(case.matrix[0][0], b.0);
        assert_eq!(case.matrix[1][0], b.1);
        assert_eq!(case.matrix[0][1], gv.0 - b.0);
        assert_eq!(case.matrix[1][1], gv.1 - b.1);
        assert_eq!(case.apply((1, 0)), b);
        assert_eq!(case.apply((1, 1)), gv);
    }
}

#[test]
fn interval_lengths_satisfy_the_golden_identities() {
    // b^2 = (2-phi) |PQ|^2 and g^2 = (5-3phi) |PQ|^2, so b^2 = phi^2 g^2.
    assert_eq!(g(2, -1), GoldenNum::phi() * GoldenNum::phi() * g(5, -3));
    let expected: &[(SlopeClass, GoldenNum, GoldenNum)] = &[
        (SlopeClass::PhiSq, g(15, -9), g(39, -24)),
        (SlopeClass::Phi, g(7, -4), g(18, -11)),
        (SlopeClass::Inf, g(2, -1), g(5, -3)),
        (SlopeClass::Zero, g(1, 0), g(2, -1)),
    ];
    for (slope, b_sq, g_sq) in expected {
        let case = WormCase::for_slope(*slope);
        let d = case.seg_q.sub(&case.seg_p);
        let pq_sq = d.dot(&d);
        assert_eq!(&(&g(2, -1) * &pq_sq), b_sq, "{slope:?} b^2");
        assert_eq!(&(&g(5, -3) * &pq_sq), g_sq, "{slope:?} g^2");
    }
}

#[test]
fn rho_parametrization_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for slope in SlopeClass::ALL {
        let case = WormCase::for_slope(slope);
        for _ in 0..20 {
            let rho = GoldenNum::rational(rng.gen_range(0i64..89), 89);
            let p = case.point_of_rho(&rho);
            assert_eq!(case.rho_of_point(&p).unwrap(), rho, "{slope:?}");
        }
        // A point off the canonical segment is rejected.
        let off = jr::torus::TorusPoint::reduce(&jr::exactnum::Vec2::new(
            GoldenNum::rational(1, 2),
            GoldenNum::rational(3, 2),
        ));
        assert!(case.rho_of_point(&off).is_err());
    }
}

#[test]
fn anchor_fixtures_for_the_phi_and_vertical_cases() {
    let case = WormCase::for_slope(SlopeClass::Phi);
    let (mh, mv) = worm_anchors(&case, &GoldenNum::rational(1, 4), (-10, 10));
    for want in [(8, -23), (5, -14), (3, -9), (0, 0), (-3, 9), (-5, 14), (-8, 23)] {
        assert!(mh.contains(&want), "MH missing {want:?}");
    }
    for want in [(9, -27), (6, -18), (1, -4), (-2, 5), (-7, 19)] {
        assert!(mv.contains(&want), "MV missing {want:?}");
    }

    let case = WormCase::for_slope(SlopeClass::Inf);
    let (mh, mv) = worm_anchors(&case, &GoldenNum::rational(1, 5), (-4, 3));
    assert_eq!(mh, vec![(-3, -14), (-2, -9), (0, 0), (1, 5), (3, 14)]);
    assert_eq!(mv, vec![(-4, -18), (-1, -4), (2, 10)]);
}

#[test]
fn worm_prediction_matches_the_brute_force_orbit() {
    let partition = jr::default_partition();
    let window = square_window(8);
    for (slope, rho) in [
        (SlopeClass::PhiSq, GoldenNum::rational(9, 10)),
        (SlopeClass::Zero, GoldenNum::rational(3, 10)),
        (SlopeClass::Inf, GoldenNum::rational(1, 5)),
        (SlopeClass::Phi, GoldenNum::rational(1, 4)),
    ] {
        let case = WormCase::for_slope(slope);
        let predicted = worm_delta_set(&case, &rho, window);
        let brute = orbit_delta(partition, &case.point_of_rho(&rho), window);
        assert_eq!(predicted.delta_set, brute, "{slope:?} rho {rho}");
    }
}

#[test]
fn patterns_are_constant_across_anchors() {
    let partition = jr::default_partition();
    let case = WormCase::for_slope(SlopeClass::PhiSq);
    let rho = GoldenNum::rational(9, 10);
    let window = square_window(15);
    let deco = worm_delta_set(&case, &rho, window);
    let config = jr::coding::configuration_with(
        partition,
        &case.point_of_rho(&rho),
        &jr::coding::default_direction(),
        window,
    )
    .unwrap();
    let (b_pat, g_pat) = extract_patterns(&case, &config, &deco).unwrap();
    assert_eq!(b_pat.len(), case.supp_b.len());
    assert_eq!(g_pat.len(), case.supp_g.len());
}

#[test]
fn vertical_worm_heights_follow_the_fibonacci_word() {
    let case = WormCase::for_slope(SlopeClass::Inf);
    let deco = worm_delta_set(&case, &GoldenNum::rational(1, 5), square_window(40));
    let heights = height_sequence(&deco);
    assert!(heights.len() > 10);
    assert!(heights.iter().all(|&h| h == 4 || h == 5));
    let binary = heights_to_binary(&heights);
    assert!(fibonacci_factor_check(&binary, 8));
}

#[test]
fn fibonacci_helpers() {
    assert!(fibonacci_factor_check(&[0, 1, 0, 0, 1], 5));
    assert!(!fibonacci_factor_check(&[1, 1], 2));
    let fib = fibonacci_word(64);
    assert_eq!(&fib[..8], &[0, 1, 0, 0, 1, 0, 1, 0]);
    // Sturmian complexity: exactly n + 1 factors of each length n.
    assert_eq!(
        factor_complexity(&fib, 8),
        (1..=8).map(|n| n + 1).collect::<Vec<_>>()
    );
}

#[test]
fn mechanical_words_have_sturmian_complexity() {
    let params = RotationParams::worm(GoldenNum::rational(1, 7));
    let word = mechanical_word(&params, (-500, 500), WordKind::Lower);
    assert_eq!(
        factor_complexity(&word, 10),
        (1..=10).map(|n| n + 1).collect::<Vec<_>>()
    );
    assert!(fibonacci_factor_check(&word, 10));
}
