//! Sturmian worm machinery: rotation and mechanical words for the rotation
//! by 2 - phi, H/V anchor point sets, placement matrices, the four worm
//! decompositions, block-height sequences, and Fibonacci factor checks.

use crate::exactnum::{GoldenNum, Vec2};
use crate::partition::{PartitionError, SlopeClass};
use crate::tileset::Configuration;
use crate::torus::TorusPoint;
use num_traits::ToPrimitive;
use std::collections::{BTreeMap, BTreeSet, HashSet};

/// Parameters of the circle rotation T_alpha(rho) = rho + alpha (mod 1).
#[derive(Clone, Debug)]
pub struct RotationParams {
    pub alpha: GoldenNum,
    pub rho: GoldenNum,
}

impl RotationParams {
    pub fn new(alpha: GoldenNum, rho: GoldenNum) -> RotationParams {
        assert!(alpha.sign() > 0 && (&alpha - &GoldenNum::one()).sign() < 0);
        assert!(rho.sign() >= 0 && (&rho - &GoldenNum::one()).sign() < 0);
        RotationParams { alpha, rho }
    }

    /// The worm rotation angle 2 - phi.
    pub fn worm(rho: GoldenNum) -> RotationParams {
        RotationParams::new(GoldenNum::of(2, -1), rho)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WordKind {
    Lower,
    Upper,
}

/// u_n = 0 if T_alpha^n(rho) in [0, 1-alpha), 1 if in [1-alpha, 1).
pub fn rotation_word(params: &RotationParams, range: (i64, i64)) -> Vec<u8> {
    let split = GoldenNum::one() - &params.alpha;
    (range.0..=range.1)
        .map(|n| {
            let t = (&params.alpha * GoldenNum::from_int(n) + &params.rho).fract();
            u8::from((&t - &split).sign() >= 0)
        })
        .collect()
}

/// s_{alpha,rho}(n) = floor(alpha(n+1)+rho) - floor(alpha n + rho) (lower),
/// or the same with ceilings (upper).
pub fn mechanical_word(params: &RotationParams, range: (i64, i64), kind: WordKind) -> Vec<u8> {
    (range.0..=range.1).map(|n| mechanical_letter(params, n, kind)).collect()
}

pub fn mechanical_letter(params: &RotationParams, n: i64, kind: WordKind) -> u8 {
    let at = |m: i64| &params.alpha * GoldenNum::from_int(m) + &params.rho;
    let d = match kind {
        WordKind::Lower => at(n + 1).floor() - at(n).floor(),
        WordKind::Upper => at(n + 1).ceil() - at(n).ceil(),
    };
    d.to_u8().expect("mechanical letter is 0 or 1")
}

/// The mechanical-line point P(n) = (n, floor(alpha n + rho)).
pub fn mechanical_point(params: &RotationParams, n: i64) -> (i64, i64) {
    let y = (&params.alpha * GoldenNum::from_int(n) + &params.rho).floor_i64();
    (n, y)
}

/// Splits the mechanical-line points by the letter: H where s(n) = 0 (the
/// step from P(n) is horizontal), V where s(n) = 1 (diagonal).
pub fn hv_points(
    params: &RotationParams,
    range: (i64, i64),
) -> (Vec<(i64, i64)>, Vec<(i64, i64)>) {
    let mut h = Vec::new();
    let mut v = Vec::new();
    for n in range.0..=range.1 {
        let p = mechanical_point(params, n);
        if mechanical_letter(params, n, WordKind::Lower) == 0 {
            h.push(p);
        } else {
            v.push(p);
        }
    }
    (h, v)
}

/// Static data of one worm case: placement matrix, pattern supports,
/// placement vectors, and the canonical Delta-segment the case lives on.
#[derive(Clone, Debug)]
pub struct WormCase {
    pub slope: SlopeClass,
    /// Row-major placement matrix M.
    pub matrix: [[i64; 2]; 2],
    pub supp_b: Vec<(i64, i64)>,
    pub supp_g: Vec<(i64, i64)>,
    /// Endpoints of the canonical segment; rho parametrizes P -> Q.
    pub seg_p: Vec2,
    pub seg_q: Vec2,
}

impl WormCase {
    pub fn for_slope(slope: SlopeClass) -> WormCase {
        let g = GoldenNum::of;
        match slope {
            SlopeClass::PhiSq => WormCase {
                slope,
                matrix: [[6, -2], [5, -1]],
                supp_b: vec![
                    (0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (3, 2),
                    (3, 3), (4, 3), (5, 3), (5, 4), (6, 4),
                ],
                supp_g: vec![
                    (0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (3, 2), (3, 3), (4, 3),
                ],
                seg_p: Vec2::new(g(-1, 1), g(0, 0)),
                seg_q: Vec2::new(g(1, 0), g(1, 0)),
            },
            SlopeClass::Phi => WormCase {
                slope,
                matrix: [[-2, 1], [5, -1]],
                supp_b: vec![
                    (0, 0), (1, 0), (0, 1), (1, 1), (-1, 2), (0, 2),
                    (-3, 3), (-2, 3), (-1, 3), (-2, 4), (-1, 4),
                ],
                supp_g: vec![
                    (0, 0), (1, 0), (0, 1), (1, 1), (-2, 2), (-1, 2),
                    (0, 2), (-1, 3), (0, 3),
                ],
                seg_p: Vec2::new(g(0, 0), g(0, 0)),
                seg_q: Vec2::new(g(-1, 1), g(1, 0)),
            },
            SlopeClass::Inf => WormCase {
                slope,
                matrix: [[1, 0], [5, -1]],
                supp_b: vec![
                    (0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1),
                    (1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4),
                ],
                // The pattern content observed at the anchors; differs from
                // the first printed listing, which the brute-force orbit
                // oracle contradicts (see README).
                supp_g: vec![
                    (0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1),
                    (1, 2), (2, 2), (1, 3), (2, 3), (3, 3), (1, 4), (2, 4), (3, 4),
                ],
                seg_p: Vec2::new(g(-1, 1), g(0, 0)),
                seg_q: Vec2::new(g(-1, 1), g(1, 0)),
            },
            SlopeClass::Zero => WormCase {
                slope,
                matrix: [[1, 0], [0, 0]],
                supp_b: vec![(0, 0), (0, 1)],
                supp_g: vec![(0, 0), (0, 1)],
                seg_p: Vec2::new(g(0, 0), g(0, 0)),
                seg_q: Vec2::new(g(0, 1), g(0, 0)),
            },
        }
    }

    /// Placement vectors b = M (1,0)^T and g = M (1,1)^T; the matrix is
    /// ((b1, g1-b1), (b2, g2-b2)).
    pub fn b_vec(&self) -> (i64, i64) {
        (self.matrix[0][0], self.matrix[1][0])
    }

    pub fn g_vec(&self) -> (i64, i64) {
        (
            self.matrix[0][0] + self.matrix[0][1],
            self.matrix[1][0] + self.matrix[1][1],
        )
    }

    pub fn apply(&self, p: (i64, i64)) -> (i64, i64) {
        (
            self.matrix[0][0] * p.0 + self.matrix[0][1] * p.1,
            self.matrix[1][0] * p.0 + self.matrix[1][1] * p.1,
        )
    }

    /// The point of the canonical segment at parameter rho in [0, 1).
    pub fn point_of_rho(&self, rho: &GoldenNum) -> TorusPoint {
        let d = self.seg_q.sub(&self.seg_p);
        TorusPoint::reduce(&self.seg_p.add(&d.scale(rho)))
    }

    /// The parameter rho = d(p, P)/|PQ| of a point on the canonical segment.
    pub fn rho_of_point(&self, p: &TorusPoint) -> Result<GoldenNum, PartitionError> {
        let d = self.seg_q.sub(&self.seg_p);
        let w = p.rep().sub(&self.seg_p);
        if w.cross(&d).sign() != 0 {
            return Err(PartitionError::Invariant(format!(
                "point {} is not on the canonical {} segment",
                p.rep(),
                self.slope
            )));
        }
        let t = w.dot(&d) / d.dot(&d);
        if t.sign() < 0 || (&t - &GoldenNum::one()).sign() >= 0 {
            return Err(PartitionError::Invariant(format!(
                "point {} is outside the canonical {} segment",
                p.rep(),
                self.slope
            )));
        }
        Ok(t)
    }
}

/// Pattern anchor sets: (M.H, M.V) for the worm rotation with the given rho,
/// over mechanical indices n in `n_range`.
pub fn worm_anchors(
    case: &WormCase,
    rho: &GoldenNum,
    n_range: (i64, i64),
) -> (Vec<(i64, i64)>, Vec<(i64, i64)>) {
    let params = RotationParams::worm(rho.clone());
    let (h, v) = hv_points(&params, n_range);
    (
        h.into_iter().map(|p| case.apply(p)).collect(),
        v.into_iter().map(|p| case.apply(p)).collect(),
    )
}

/// The full worm decomposition of one case at one parameter.
#[derive(Clone, Debug)]
pub struct WormDecomposition {
    pub slope: SlopeClass,
    pub rho: GoldenNum,
    pub b_anchors: Vec<(i64, i64)>,
    pub g_anchors: Vec<(i64, i64)>,
    pub delta_set: BTreeSet<(i64, i64)>,
}

/// Predicts the orbit-boundary set on the window from the case's lemma:
/// the union of supp(B) translated to every B anchor and supp(G) translated
/// to every G anchor, clipped to the window.
pub fn worm_delta_set(
    case: &WormCase,
    rho: &GoldenNum,
    window: (i64, i64, i64, i64),
) -> WormDecomposition {
    let (x0, y0, x1, y1) = window;
    let radius = x0.abs().max(x1.abs()).max(y0.abs()).max(y1.abs());
    // Anchor coordinates grow linearly in |n| (slope at least 1/13 for the
    // phi^2 matrix), so this range safely covers the window.
    let lim = 30 * radius + 30;
    let (b_anchors, g_anchors) = worm_anchors(case, rho, (-lim, lim));
    let mut delta_set = BTreeSet::new();
    let mut add = |anchors: &[(i64, i64)], supp: &[(i64, i64)]| {
        for &(ax, ay) in anchors {
            for &(sx, sy) in supp {
                let c = (ax + sx, ay + sy);
                if c.0 >= x0 && c.0 <= x1 && c.1 >= y0 && c.1 <= y1 {
                    delta_set.insert(c);
                }
            }
        }
    };
    add(&b_anchors, &case.supp_b);
    add(&g_anchors, &case.supp_g);
    WormDecomposition {
        slope: case.slope,
        rho: rho.clone(),
        b_anchors,
        g_anchors,
        delta_set,
    }
}

/// The B and G pattern contents: the restriction of the coded configuration
/// to anchor + support, which the worm lemmas assert is the same at every
/// anchor. Returns the common patterns (maps on support cells).
pub fn extract_patterns(
    case: &WormCase,
    config: &Configuration,
    decomposition: &WormDecomposition,
) -> Result<(BTreeMap<(i64, i64), u8>, BTreeMap<(i64, i64), u8>), PartitionError> {
    let read = |anchors: &[(i64, i64)],
                supp: &[(i64, i64)]|
     -> Result<BTreeMap<(i64, i64), u8>, PartitionError> {
        let mut common: Option<BTreeMap<(i64, i64), u8>> = None;
        let mut seen = 0;
        for &(ax, ay) in anchors {
            let mut pat = BTreeMap::new();
            let mut complete = true;
            for &(sx, sy) in supp {
                match config.get(ax + sx, ay + sy) {
                    Some(t) => {
                        pat.insert((sx, sy), t);
                    }
                    None => {
                        complete = false;
                        break;
                    }
                }
            }
            if !complete {
                continue;
            }
            seen += 1;
            match &common {
                None => common = Some(pat),
                Some(c) if *c == pat => {}
                Some(c) => {
                    return Err(PartitionError::Invariant(format!(
                        "pattern at anchor ({ax}, {ay}) differs from the common one: {pat:?} vs {c:?}"
                    )))
                }
            }
        }
        if seen == 0 {
            return Err(PartitionError::Invariant(
                "no anchor with full support inside the window".into(),
            ));
        }
        Ok(common.unwrap())
    };
    Ok((
        read(&decomposition.b_anchors, &case.supp_b)?,
        read(&decomposition.g_anchors, &case.supp_g)?,
    ))
}

/// Block heights of a vertical-progression worm: merge the anchors, order by
/// the first coordinate, and read consecutive second-coordinate differences
/// (the B step contributes 5, the G step 4 in the vertical case).
pub fn height_sequence(decomposition: &WormDecomposition) -> Vec<i64> {
    let mut anchors: Vec<(i64, i64)> = decomposition
        .b_anchors
        .iter()
        .chain(&decomposition.g_anchors)
        .copied()
        .collect();
    anchors.sort_unstable();
    anchors.windows(2).map(|w| w[1].1 - w[0].1).collect()
}

/// True iff every factor of `word` of length <= max_len occurs in the
/// Fibonacci word (the fixed point of 0 -> 01, 1 -> 0).
pub fn fibonacci_factor_check(word: &[u8], max_len: usize) -> bool {
    let fib = fibonacci_word(4 * max_len.max(8) + 64);
    let mut factors: HashSet<&[u8]> = HashSet::new();
    for len in 1..=max_len {
        for w in fib.windows(len) {
            factors.insert(w);
        }
    }
    for len in 1..=max_len.min(word.len()) {
        for w in word.windows(len) {
            if !factors.contains(w) {
                return false;
            }
        }
    }
    true
}

/// Prefix of the Fibonacci word over {0, 1} of at least `min_len` letters.
pub fn fibonacci_word(min_len: usize) -> Vec<u8> {
    let mut w = vec![0u8];
    while w.len() < min_len {
        let next: Vec<u8> = w
            .iter()
            .flat_map(|&c| if c == 0 { vec![0, 1] } else { vec![0] })
            .collect();
        w = next;
    }
    w
}

/// Maps a {4,5} height word to {0,1} with 5 -> 0 (the frequent letter) and
/// 4 -> 1, the convention under which it embeds in the Fibonacci word.
pub fn heights_to_binary(heights: &[i64]) -> Vec<u8> {
    heights
        .iter()
        .map(|&h| match h {
            5 => 0,
            4 => 1,
            other => panic!("unexpected block height {other}"),
        })
        .collect()
}

/// Number of distinct factors of each length 1..=max_len.
pub fn factor_complexity(word: &[u8], max_len: usize) -> Vec<usize> {
    (1..=max_len)
        .map(|len| {
            let mut set: HashSet<&[u8]> = HashSet::new();
            for w in word.windows(len) {
                set.insert(w);
            }
            set.len()
        })
        .collect()
}
