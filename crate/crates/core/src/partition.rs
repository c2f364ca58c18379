//! The Markov partition of the torus: 11 labeled polygonal atoms, the 18
//! boundary lines ("Delta-lines"), exact point location, directional coding,
//! and the normalization table that moves every Delta-line piece to a line
//! with initial point (0,1).

use crate::exactnum::{GoldenNum, Vec2};
use crate::torus::{self, TorusPoint};
use sha2::{Digest, Sha256};
use std::fmt;
use std::str::FromStr;

pub const NUM_LABELS: usize = 11;
pub const NUM_DELTA_LINES: usize = 18;

/// Built-in partition data (exact coordinates, checksummed).
pub const DEFAULT_PARTITION_DATA: &str = include_str!("../data/partition.txt");

/// Slope class of a Delta-line: 0, phi, phi^2 = phi+1, or vertical.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum SlopeClass {
    Zero,
    Phi,
    PhiSq,
    Inf,
}

impl SlopeClass {
    pub const ALL: [SlopeClass; 4] = [
        SlopeClass::Zero,
        SlopeClass::Phi,
        SlopeClass::PhiSq,
        SlopeClass::Inf,
    ];

    /// A direction vector of the slope class.
    pub fn direction(self) -> Vec2 {
        match self {
            SlopeClass::Zero => Vec2::of(1, 0),
            SlopeClass::Phi => Vec2::new(GoldenNum::one(), GoldenNum::phi()),
            SlopeClass::PhiSq => Vec2::new(GoldenNum::one(), GoldenNum::of(1, 1)),
            SlopeClass::Inf => Vec2::of(0, 1),
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            SlopeClass::Zero => "0",
            SlopeClass::Phi => "phi",
            SlopeClass::PhiSq => "phi2",
            SlopeClass::Inf => "inf",
        }
    }
}

impl fmt::Display for SlopeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for SlopeClass {
    type Err = PartitionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "0" => Ok(SlopeClass::Zero),
            "phi" => Ok(SlopeClass::Phi),
            "phi2" => Ok(SlopeClass::PhiSq),
            "inf" => Ok(SlopeClass::Inf),
            _ => Err(PartitionError::Parse(format!("unknown slope class {s:?}"))),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum PartitionError {
    #[error("partition data parse error: {0}")]
    Parse(String),
    #[error("partition data checksum mismatch (stored {stored}, computed {computed})")]
    Checksum { stored: String, computed: String },
    #[error("partition invariant violated: {0}")]
    Invariant(String),
    #[error("direction {0} is parallel to a Delta slope class")]
    BadDirection(String),
    #[error("not a normalization-table row: line {line} over [{lo}, {hi}]")]
    NotATableRow { line: u8, lo: String, hi: String },
}

/// One simple polygon piece of an atom (counter-clockwise vertices).
#[derive(Clone, Debug)]
pub struct Polygon {
    pub vertices: Vec<Vec2>,
    /// Cached ear-clipping triangulation (vertex index triples).
    triangles: Vec<[usize; 3]>,
    /// Cached f64 vertex coordinates for the fast location path.
    approx: Vec<(f64, f64)>,
}

/// A labeled atom: one or more polygon pieces (an atom of the partition may
/// be disconnected on the torus).
#[derive(Clone, Debug)]
pub struct Atom {
    pub label: u8,
    pub pieces: Vec<Polygon>,
}

/// One Delta-line: all canonical segments realizing it inside the
/// fundamental domain (a line wrapping around the torus has two segments).
#[derive(Clone, Debug)]
pub struct DeltaLine {
    pub id: u8,
    pub slope: SlopeClass,
    pub segments: Vec<(Vec2, Vec2)>,
}

/// Result of exact point location on the torus.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Location {
    Interior(u8),
    /// Sorted ids of every Delta-line through the point.
    Boundary(Vec<u8>),
}

impl Location {
    pub fn is_boundary(&self) -> bool {
        matches!(self, Location::Boundary(_))
    }
}

/// The full partition, immutable after load.
pub struct Partition {
    pub atoms: Vec<Atom>,
    pub lines: Vec<DeltaLine>,
    pub checksum: String,
    /// All canonical segments flattened as (line id, slope, A, B).
    segments: Vec<(u8, SlopeClass, Vec2, Vec2)>,
    /// f64 shadows of `segments` for quick rejection.
    segments_approx: Vec<((f64, f64), (f64, f64))>,
}

impl Partition {
    /// Loads and fully validates the built-in partition data.
    pub fn load_default() -> Result<Partition, PartitionError> {
        Partition::load(DEFAULT_PARTITION_DATA)
    }

    /// Parses a partition file and checks every structural invariant:
    /// checksum, label/line completeness, polygon orientation, slope
    /// consistency, exact total area, pairwise interior disjointness, and
    /// that every polygon edge lies on a Delta-line (modulo the torus wrap).
    pub fn load(data: &str) -> Result<Partition, PartitionError> {
        let (body, checksum) = verify_checksum(data)?;

        let mut atom_pieces: Vec<Vec<Polygon>> = vec![Vec::new(); NUM_LABELS];
        let mut lines: Vec<DeltaLine> = Vec::new();
        for (ln, raw) in body.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mk_err = |m: String| PartitionError::Parse(format!("line {}: {m}", ln + 1));
            let (head, payload) = line
                .split_once('|')
                .ok_or_else(|| mk_err("missing '|'".into()))?;
            let fields: Vec<&str> = head.split_whitespace().collect();
            let points = parse_points(payload).map_err(|e| mk_err(e))?;
            match fields.as_slice() {
                ["atom", lbl] => {
                    let label: usize = lbl
                        .parse()
                        .map_err(|_| mk_err(format!("bad label {lbl:?}")))?;
                    if label >= NUM_LABELS {
                        return Err(mk_err(format!("label {label} out of range")));
                    }
                    if points.len() < 3 {
                        return Err(mk_err("polygon needs >= 3 vertices".into()));
                    }
                    atom_pieces[label].push(Polygon::new(points).map_err(|e| mk_err(e))?);
                }
                ["delta", id, slope] => {
                    let id: u8 = id.parse().map_err(|_| mk_err(format!("bad id {id:?}")))?;
                    if !(1..=NUM_DELTA_LINES as u8).contains(&id) {
                        return Err(mk_err(format!("delta id {id} out of range")));
                    }
                    let slope: SlopeClass = slope.parse()?;
                    if points.len() != 2 {
                        return Err(mk_err("delta record needs exactly 2 points".into()));
                    }
                    let seg = (points[0].clone(), points[1].clone());
                    match lines.iter_mut().find(|l| l.id == id) {
                        Some(l) => {
                            if l.slope != slope {
                                return Err(mk_err(format!("line {id} slope conflict")));
                            }
                            l.segments.push(seg);
                        }
                        None => lines.push(DeltaLine {
                            id,
                            slope,
                            segments: vec![seg],
                        }),
                    }
                }
                _ => return Err(mk_err(format!("unrecognized record {head:?}"))),
            }
        }

        for (label, pieces) in atom_pieces.iter().enumerate() {
            if pieces.is_empty() {
                return Err(PartitionError::Invariant(format!(
                    "atom {label} missing from data"
                )));
            }
        }
        for id in 1..=NUM_DELTA_LINES as u8 {
            if !lines.iter().any(|l| l.id == id) {
                return Err(PartitionError::Invariant(format!(
                    "Delta-line {id} missing from data"
                )));
            }
        }
        lines.sort_by_key(|l| l.id);

        let atoms: Vec<Atom> = atom_pieces
            .into_iter()
            .enumerate()
            .map(|(label, pieces)| Atom {
                label: label as u8,
                pieces,
            })
            .collect();

        let mut segments = Vec::new();
        for l in &lines {
            for (a, b) in &l.segments {
                segments.push((l.id, l.slope, a.clone(), b.clone()));
            }
        }
        let segments_approx = segments
            .iter()
            .map(|(_, _, a, b)| (a.to_f64(), b.to_f64()))
            .collect();

        let p = Partition {
            atoms,
            lines,
            checksum,
            segments,
            segments_approx,
        };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<(), PartitionError> {
        let rect_w = torus::domain_width();
        let rect_h = torus::domain_height();

        // Segments have the slope of their class and stay inside the rectangle.
        for (id, slope, a, b) in &self.segments {
            let d = b.sub(a);
            if d.cross(&slope.direction()).sign() != 0 {
                return Err(PartitionError::Invariant(format!(
                    "Delta-line {id} segment is not of slope class {slope}"
                )));
            }
            for p in [a, b] {
                if p.x.sign() < 0
                    || (&p.x - &rect_w).sign() > 0
                    || p.y.sign() < 0
                    || (&p.y - &rect_h).sign() > 0
                {
                    return Err(PartitionError::Invariant(format!(
                        "Delta-line {id} leaves the fundamental domain"
                    )));
                }
            }
        }

        // Polygons: positively oriented, inside the rectangle, edges on Delta.
        let mut total = GoldenNum::zero();
        for atom in &self.atoms {
            for poly in &atom.pieces {
                let area = poly.signed_area();
                if area.sign() <= 0 {
                    return Err(PartitionError::Invariant(format!(
                        "atom {}: polygon not counter-clockwise",
                        atom.label
                    )));
                }
                total = total + area;
                let n = poly.vertices.len();
                for i in 0..n {
                    let u = &poly.vertices[i];
                    let v = &poly.vertices[(i + 1) % n];
                    for p in [u] {
                        if p.x.sign() < 0
                            || (&p.x - &rect_w).sign() > 0
                            || p.y.sign() < 0
                            || (&p.y - &rect_h).sign() > 0
                        {
                            return Err(PartitionError::Invariant(format!(
                                "atom {} leaves the fundamental domain",
                                atom.label
                            )));
                        }
                    }
                    if !self.edge_on_delta(u, v) {
                        return Err(PartitionError::Invariant(format!(
                            "atom {}: edge {u} -- {v} not on any Delta-line",
                            atom.label
                        )));
                    }
                }
            }
        }

        // Exact total area = area of the fundamental domain = 4*phi + 1.
        let expect = &rect_w * &rect_h;
        if total != expect {
            return Err(PartitionError::Invariant(format!(
            "total atom area {total} differs from fundamental-domain area {expect}"
        )));
        }

        // Pairwise interior disjointness via exact separating-axis tests on
        // the triangulations. Together with the area identity this gives
        // coverage of the whole rectangle.
        let tris: Vec<(u8, [Vec2; 3])> = self
            .atoms
            .iter()
            .flat_map(|a| {
                a.pieces.iter().flat_map(move |p| {
                    p.triangles.iter().map(move |t| {
                        (
                            a.label,
                            [
                                p.vertices[t[0]].clone(),
                                p.vertices[t[1]].clone(),
                                p.vertices[t[2]].clone(),
                            ],
                        )
                    })
                })
            })
            .collect();
        for i in 0..tris.len() {
            for j in (i + 1)..tris.len() {
                if !triangles_interior_disjoint(&tris[i].1, &tris[j].1) {
                    return Err(PartitionError::Invariant(format!(
                        "atoms {} and {} have overlapping interiors",
                        tris[i].0, tris[j].0
                    )));
                }
            }
        }
        Ok(())
    }

    /// True when the closed edge u--v lies inside some Delta-line segment or
    /// on the top/right rectangle border (which is a lattice translate of a
    /// Delta-line: x = phi wraps to line 15, y = phi+3 wraps to line 1).
    fn edge_on_delta(&self, u: &Vec2, v: &Vec2) -> bool {
        let on_border = |c: &GoldenNum, target: &GoldenNum| c == target;
        let w = torus::domain_width();
        let h = torus::domain_height();
        if on_border(&u.x, &w) && on_border(&v.x, &w) {
            return true;
        }
        if on_border(&u.y, &h) && on_border(&v.y, &h) {
            return true;
        }
        self.segments
            .iter()
            .any(|(_, _, a, b)| point_on_segment(u, a, b) && point_on_segment(v, a, b))
    }

    /// All canonical segments (line id, slope, endpoints).
    pub fn segments(&self) -> &[(u8, SlopeClass, Vec2, Vec2)] {
        &self.segments
    }

    pub fn line(&self, id: u8) -> Option<&DeltaLine> {
        self.lines.iter().find(|l| l.id == id)
    }

    /// Exact point location. The point may sit on several Delta-lines, in
    /// which case all their ids are reported (sorted). Points on the torus
    /// seam are matched against the wrapped copies of the segments.
    pub fn locate(&self, p: &TorusPoint) -> Location {
        let rep = p.rep();
        let mut ids: Vec<u8> = Vec::new();
        // A reduced point can coincide with segment points on the closed
        // right/top borders only through these representatives.
        let g0 = torus::gamma0();
        let g1 = torus::gamma1();
        let reps = [
            rep.clone(),
            rep.add(&g0),
            rep.add(&g1),
            rep.add(&g0).add(&g1),
        ];
        let reps_f: Vec<(f64, f64)> = reps.iter().map(|r| r.to_f64()).collect();
        for (k, (_, _, a, b)) in self.segments.iter().enumerate() {
            let (fa, fb) = self.segments_approx[k];
            for (r, rf) in reps.iter().zip(&reps_f) {
                if !near_segment_f64(*rf, fa, fb, 1e-7) {
                    continue;
                }
                if point_on_segment(r, a, b) {
                    ids.push(self.segments[k].0);
                    break;
                }
            }
        }
        if !ids.is_empty() {
            ids.sort_unstable();
            ids.dedup();
            return Location::Boundary(ids);
        }
        // Not on any boundary line: the point is strictly inside exactly one
        // polygon. Try the f64 crossing test first, confirm exactly on doubt.
        let pf = rep.to_f64();
        for atom in &self.atoms {
            for poly in &atom.pieces {
                match poly.contains_f64(pf) {
                    Some(true) => return Location::Interior(atom.label),
                    Some(false) => {}
                    None => {
                        if poly.contains_exact(rep) {
                            return Location::Interior(atom.label);
                        }
                    }
                }
            }
        }
        // The fast path can misjudge a razor-thin case; redo exactly.
        for atom in &self.atoms {
            for poly in &atom.pieces {
                if poly.contains_exact(rep) {
                    return Location::Interior(atom.label);
                }
            }
        }
        unreachable!("partition coverage invariant violated at {rep}");
    }

    /// True when the direction avoids all four Delta slope classes.
    pub fn direction_admissible(v: &Vec2) -> bool {
        !(v.x.is_zero() && v.y.is_zero())
            && SlopeClass::ALL
                .iter()
                .all(|s| v.cross(&s.direction()).sign() != 0)
    }

    /// The label of the atom containing p + eps*v for all small eps > 0,
    /// computed exactly: shoot the ray p + t v against every Delta segment
    /// (canonical plus the eight neighboring lattice translates), take the
    /// first hit t*, and locate the midpoint p + (t*/2) v, which is interior.
    pub fn code_with_direction(
        &self,
        p: &TorusPoint,
        v: &Vec2,
    ) -> Result<u8, PartitionError> {
        if !Self::direction_admissible(v) {
            return Err(PartitionError::BadDirection(v.to_string()));
        }
        if let Location::Interior(a) = self.locate(p) {
            return Ok(a);
        }
        let rep = p.rep();
        let g0 = torus::gamma0();
        let g1 = torus::gamma1();
        let mut t_min: Option<GoldenNum> = None;
        for m in -1i64..=1 {
            for k in -1i64..=1 {
                let shift = g0.scale(&GoldenNum::from_int(m)).add(&g1.scale(&GoldenNum::from_int(k)));
                for (_, _, a, b) in &self.segments {
                    let a = a.add(&shift);
                    let b = b.add(&shift);
                    let d = b.sub(&a);
                    let den = v.cross(&d);
                    if den.sign() == 0 {
                        // v is not parallel to any slope class, so this
                        // cannot happen for a Delta segment.
                        continue;
                    }
                    let ap = a.sub(rep);
                    let t = ap.cross(&d).checked_div(&den).unwrap();
                    if t.sign() <= 0 {
                        continue;
                    }
                    let s = ap.cross(v).checked_div(&den).unwrap();
                    if s.sign() < 0 || (&s - &GoldenNum::one()).sign() > 0 {
                        continue;
                    }
                    if t_min.as_ref().map_or(true, |m| &t < m) {
                        t_min = Some(t);
                    }
                }
            }
        }
        let t = t_min.expect("ray from fundamental domain must hit a Delta line");
        let half = t / GoldenNum::from_int(2);
        let mid = TorusPoint::reduce(&rep.add(&v.scale(&half)));
        match self.locate(&mid) {
            Location::Interior(a) => Ok(a),
            Location::Boundary(_) => unreachable!(
                "ray midpoint before the first Delta crossing must be interior"
            ),
        }
    }
}

impl Polygon {
    fn new(vertices: Vec<Vec2>) -> Result<Polygon, String> {
        let approx = vertices.iter().map(|v| v.to_f64()).collect();
        let triangles = triangulate(&vertices)?;
        Ok(Polygon {
            vertices,
            triangles,
            approx,
        })
    }

    pub fn signed_area(&self) -> GoldenNum {
        let mut twice = GoldenNum::zero();
        let n = self.vertices.len();
        for i in 0..n {
            twice = twice + self.vertices[i].cross(&self.vertices[(i + 1) % n]);
        }
        twice / GoldenNum::from_int(2)
    }

    /// Exact strict-interior test by ray crossing parity. The caller must
    /// already know the point is not on the polygon boundary.
    fn contains_exact(&self, p: &Vec2) -> bool {
        let n = self.vertices.len();
        let mut inside = false;
        for i in 0..n {
            let a = &self.vertices[i];
            let b = &self.vertices[(i + 1) % n];
            let ay = (&a.y - &p.y).sign();
            let by = (&b.y - &p.y).sign();
            // Half-open rule: the edge crosses the horizontal through p iff
            // its endpoints straddle it with the "y > p.y" predicate.
            if (ay > 0) != (by > 0) {
                // x-coordinate of the crossing relative to p.x:
                // a.x + (p.y - a.y) * (b.x - a.x)/(b.y - a.y) > p.x
                let dy = &b.y - &a.y;
                let lhs = (&a.x - &p.x) * &dy + (&p.y - &a.y) * (&b.x - &a.x);
                if (lhs * dy).sign() > 0 {
                    inside = !inside;
                }
            }
        }
        inside
    }

    /// f64 crossing test; `None` when any comparison is within the margin
    /// and the exact test must be consulted.
    fn contains_f64(&self, p: (f64, f64)) -> Option<bool> {
        const EPS: f64 = 1e-9;
        let n = self.approx.len();
        let mut inside = false;
        for i in 0..n {
            let a = self.approx[i];
            let b = self.approx[(i + 1) % n];
            if (a.1 - p.1).abs() < EPS || (b.1 - p.1).abs() < EPS {
                return None;
            }
            if (a.1 > p.1) != (b.1 > p.1) {
                let x = a.0 + (p.1 - a.1) * (b.0 - a.0) / (b.1 - a.1);
                if (x - p.0).abs() < EPS {
                    return None;
                }
                if x > p.0 {
                    inside = !inside;
                }
            }
        }
        Some(inside)
    }
}

/// Exact "p lies on the closed segment a--b" test.
pub fn point_on_segment(p: &Vec2, a: &Vec2, b: &Vec2) -> bool {
    let d = b.sub(a);
    let ap = p.sub(a);
    if ap.cross(&d).sign() != 0 {
        return false;
    }
    let t = ap.dot(&d);
    t.sign() >= 0 && (&t - &d.dot(&d)).sign() <= 0
}

fn near_segment_f64(p: (f64, f64), a: (f64, f64), b: (f64, f64), eps: f64) -> bool {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let (px, py) = (p.0 - a.0, p.1 - a.1);
    let len2 = dx * dx + dy * dy;
    let cross = px * dy - py * dx;
    if cross * cross > eps * len2.max(1.0) {
        return false;
    }
    let t = px * dx + py * dy;
    t >= -eps && t <= len2 + eps
}

/// Ear-clipping triangulation of a simple CCW polygon (exact predicates;
/// tolerates collinear vertices by clipping them as degenerate ears).
fn triangulate(vertices: &[Vec2]) -> Result<Vec<[usize; 3]>, String> {
    use crate::exactnum::orient;
    let n = vertices.len();
    let mut idx: Vec<usize> = (0..n).collect();
    let mut tris = Vec::new();
    let mut guard = 0usize;
    while idx.len() > 3 {
        guard += 1;
        if guard > n * n + 16 {
            return Err("polygon is not simple (ear clipping failed)".into());
        }
        let m = idx.len();
        let mut clipped = false;
        for i in 0..m {
            let (ia, ib, ic) = (idx[(i + m - 1) % m], idx[i], idx[(i + 1) % m]);
            let (a, b, c) = (&vertices[ia], &vertices[ib], &vertices[ic]);
            let o = orient(a, b, c);
            if o < 0 {
                continue; // reflex vertex
            }
            if o == 0 {
                // Collinear: drop the middle vertex, no triangle emitted.
                idx.remove(i);
                clipped = true;
                break;
            }
            // No remaining vertex may lie inside the closed candidate ear.
            let blocked = idx.iter().any(|&j| {
                j != ia
                    && j != ib
                    && j != ic
                    && orient(a, b, &vertices[j]) >= 0
                    && orient(b, c, &vertices[j]) >= 0
                    && orient(c, a, &vertices[j]) >= 0
            });
            if blocked {
                continue;
            }
            tris.push([ia, ib, ic]);
            idx.remove(i);
            clipped = true;
            break;
        }
        if !clipped {
            return Err("polygon is not simple (no ear found)".into());
        }
    }
    if idx.len() == 3 {
        let (a, b, c) = (&vertices[idx[0]], &vertices[idx[1]], &vertices[idx[2]]);
        if orient(a, b, c) > 0 {
            tris.push([idx[0], idx[1], idx[2]]);
        }
    }
    Ok(tris)
}

/// Exact separating-axis test: true iff the closed triangles have disjoint
/// interiors (they may share boundary).
fn triangles_interior_disjoint(t1: &[Vec2; 3], t2: &[Vec2; 3]) -> bool {
    use crate::exactnum::orient;
    let separated = |a: &[Vec2; 3], b: &[Vec2; 3]| {
        (0..3).any(|i| {
            let u = &a[i];
            let v = &a[(i + 1) % 3];
            // CCW triangle: interior is on the left of u->v; b must be
            // entirely on the right (or touching).
            b.iter().all(|p| orient(u, v, p) <= 0)
        })
    };
    separated(t1, t2) || separated(t2, t1)
}

fn parse_points(s: &str) -> Result<Vec<Vec2>, String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => {
                if depth == 0 {
                    start = i;
                }
                depth += 1;
            }
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| "unbalanced parentheses".to_string())?;
                if depth == 0 {
                    let tok = &s[start..=i];
                    out.push(tok.parse::<Vec2>().map_err(|e| e.to_string())?);
                }
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err("unbalanced parentheses".into());
    }
    Ok(out)
}

fn verify_checksum(data: &str) -> Result<(String, String), PartitionError> {
    let pos = data
        .rfind("checksum ")
        .ok_or_else(|| PartitionError::Parse("missing checksum line".into()))?;
    let body = &data[..pos];
    let stored = data[pos + "checksum ".len()..].trim().to_string();
    let computed = format!("{:x}", Sha256::digest(body.as_bytes()));
    if stored != computed {
        return Err(PartitionError::Checksum { stored, computed });
    }
    Ok((body.to_string(), stored))
}

// ---------------------------------------------------------------------------
// Normalization table: integer translations moving every Delta-line piece to
// a line with initial point (0,1).
// ---------------------------------------------------------------------------

/// One row of the normalization table: translating the piece of `line` over
/// the given domain (x-interval, or y-interval for vertical lines) by
/// `shift` lands it on the canonical line of its slope class through (0,1).
#[derive(Clone, Debug)]
pub struct TableRow {
    pub line: u8,
    pub slope: SlopeClass,
    pub lo: GoldenNum,
    pub hi: GoldenNum,
    pub shift: (i64, i64),
}

/// The full normalization table (37 rows).
pub fn normalization_table() -> Vec<TableRow> {
    let g = |a: i64, b: i64| GoldenNum::of(a, b);
    let rows: Vec<(u8, SlopeClass, GoldenNum, GoldenNum, (i64, i64))> = vec![
        // slope 0
        (1, SlopeClass::Zero, g(0, 0), g(0, 1), (0, 1)),
        (2, SlopeClass::Zero, g(0, 0), g(0, 1), (0, 0)),
        // slope phi
        (3, SlopeClass::Phi, g(0, 0), g(-1, 1), (0, 1)),
        (4, SlopeClass::Phi, g(1, 0), g(0, 1), (-1, 1)),
        (5, SlopeClass::Phi, g(0, 0), g(-1, 1), (0, 0)),
        (5, SlopeClass::Phi, g(-1, 1), g(-2, 2), (1, -1)),
        (5, SlopeClass::Phi, g(-2, 2), g(0, 1), (2, -2)),
        (6, SlopeClass::Phi, g(1, 0), g(0, 1), (-1, 0)),
        (7, SlopeClass::Phi, g(0, 0), g(-1, 1), (0, -1)),
        (7, SlopeClass::Phi, g(-1, 1), g(1, 0), (1, -2)),
        (7, SlopeClass::Phi, g(1, 0), g(-2, 2), (1, -2)),
        (7, SlopeClass::Phi, g(-2, 2), g(0, 1), (2, -3)),
        (8, SlopeClass::Phi, g(0, 0), g(-3, 2), (2, -1)),
        (8, SlopeClass::Phi, g(-3, 2), g(-1, 1), (3, -2)),
        (9, SlopeClass::Phi, g(2, -1), g(-1, 1), (0, -2)),
        (9, SlopeClass::Phi, g(-1, 1), g(1, 0), (1, -3)),
        // slope phi^2
        (10, SlopeClass::PhiSq, g(-1, 1), g(1, 0), (1, 1)),
        (11, SlopeClass::PhiSq, g(0, 0), g(2, -1), (0, 0)),
        (11, SlopeClass::PhiSq, g(2, -1), g(4, -2), (-2, -1)),
        (11, SlopeClass::PhiSq, g(4, -2), g(1, 0), (-4, -2)),
        (12, SlopeClass::PhiSq, g(-1, 1), g(1, 0), (1, 0)),
        (12, SlopeClass::PhiSq, g(1, 0), g(3, -1), (-1, -1)),
        (12, SlopeClass::PhiSq, g(3, -1), g(0, 1), (-3, -2)),
        (13, SlopeClass::PhiSq, g(0, 0), g(2, -1), (0, -1)),
        (13, SlopeClass::PhiSq, g(2, -1), g(4, -2), (-2, -2)),
        (13, SlopeClass::PhiSq, g(4, -2), g(1, 0), (-4, -3)),
        (14, SlopeClass::PhiSq, g(0, 0), g(5, -3), (-3, -2)),
        (14, SlopeClass::PhiSq, g(5, -3), g(2, -1), (-5, -3)),
        // vertical (domains are y-intervals)
        (15, SlopeClass::Inf, g(0, 0), g(1, 0), (0, 1)),
        (15, SlopeClass::Inf, g(1, 0), g(2, 0), (0, 0)),
        (15, SlopeClass::Inf, g(2, 0), g(3, 0), (0, -1)),
        (15, SlopeClass::Inf, g(3, 0), g(4, 0), (0, -2)),
        (15, SlopeClass::Inf, g(4, 0), g(3, 1), (0, -3)),
        (16, SlopeClass::Inf, g(2, 1), g(4, 0), (-2, -2)),
        (16, SlopeClass::Inf, g(4, 0), g(3, 1), (-2, -3)),
        (17, SlopeClass::Inf, g(0, 0), g(1, 0), (1, 1)),
        (17, SlopeClass::Inf, g(1, 0), g(2, 0), (1, 0)),
        (18, SlopeClass::Inf, g(0, 0), g(1, 0), (-1, 1)),
        (18, SlopeClass::Inf, g(1, 0), g(2, 0), (-1, 0)),
        (18, SlopeClass::Inf, g(1, 1), g(3, 0), (-1, -1)),
        (18, SlopeClass::Inf, g(3, 0), g(4, 0), (-1, -2)),
        (18, SlopeClass::Inf, g(4, 0), g(3, 1), (-1, -3)),
    ];
    rows.into_iter()
        .map(|(line, slope, lo, hi, shift)| TableRow {
            line,
            slope,
            lo,
            hi,
            shift,
        })
        .collect()
}

/// Looks up the translation for a table row identified by its Delta-line id
/// and exact domain interval.
pub fn normalize_delta_line(
    line: u8,
    lo: &GoldenNum,
    hi: &GoldenNum,
) -> Result<(i64, i64), PartitionError> {
    normalization_table()
        .into_iter()
        .find(|r| r.line == line && &r.lo == lo && &r.hi == hi)
        .map(|r| r.shift)
        .ok_or_else(|| PartitionError::NotATableRow {
            line,
            lo: lo.to_string(),
            hi: hi.to_string(),
        })
}

/// The canonical Delta-line of a slope class with initial point (0,1):
/// returns its two endpoints.
pub fn canonical_line(slope: SlopeClass) -> (Vec2, Vec2) {
    let start = Vec2::new(GoldenNum::zero(), GoldenNum::one());
    let end = match slope {
        SlopeClass::Zero => Vec2::new(GoldenNum::phi(), GoldenNum::one()),
        SlopeClass::Phi => Vec2::new(GoldenNum::phi(), GoldenNum::of(2, 1)),
        SlopeClass::PhiSq => Vec2::new(GoldenNum::one(), GoldenNum::of(2, 1)),
        SlopeClass::Inf => Vec2::new(GoldenNum::zero(), GoldenNum::of(3, 1)),
    };
    (start, end)
}

/// Verifies one table row against the partition geometry: the sub-segment of
/// the row's Delta-line over its domain, translated by the row's shift, must
/// coincide (modulo the lattice) with a piece of the canonical line of its
/// slope class.
pub fn verify_table_row(partition: &Partition, row: &TableRow) -> bool {
    let line = match partition.line(row.line) {
        Some(l) => l,
        None => return false,
    };
    // Supporting line from the first canonical segment.
    let (a0, b0) = &line.segments[0];
    let endpoint = |t: &GoldenNum| -> Vec2 {
        match row.slope {
            SlopeClass::Inf => Vec2::new(a0.x.clone(), t.clone()),
            _ => {
                let slope_v = row.slope.direction();
                // y = a0.y + slope * (t - a0.x), slope = dy/dx of the class
                let dy = (t - &a0.x) * &slope_v.y / &slope_v.x;
                Vec2::new(t.clone(), &a0.y + &dy)
            }
        }
    };
    let _ = b0;
    let shift = Vec2::of(row.shift.0, row.shift.1);
    let p1 = endpoint(&row.lo).add(&shift);
    let p2 = endpoint(&row.hi).add(&shift);
    let (c_start, c_end) = canonical_line(row.slope);
    // Some common lattice vector must bring both endpoints onto the
    // canonical segment.
    let g0 = torus::gamma0();
    let g1 = torus::gamma1();
    for m in -4i64..=4 {
        for k in -4i64..=4 {
            let g = g0
                .scale(&GoldenNum::from_int(m))
                .add(&g1.scale(&GoldenNum::from_int(k)));
            let q1 = p1.add(&g);
            let q2 = p2.add(&g);
            if point_on_segment(&q1, &c_start, &c_end)
                && point_on_segment(&q2, &c_start, &c_end)
            {
                return true;
            }
        }
    }
    false
}

/// The set of integer horizontal translates `a` with |a| <= `amax` such that
/// the whole Delta-line (all its canonical segments) translated by (a, 0)
/// stays inside Delta modulo the lattice.
pub fn horizontal_translates(partition: &Partition, line_id: u8, amax: i64) -> Vec<i64> {
    let line = match partition.line(line_id) {
        Some(l) => l,
        None => return Vec::new(),
    };
    (-amax..=amax)
        .filter(|&a| {
            let shift = Vec2::of(a, 0);
            line.segments
                .iter()
                .all(|(p, q)| segment_covered_by_delta(partition, &p.add(&shift), &q.add(&shift)))
        })
        .collect()
}

/// All coincidence points of nonparallel Delta-lines under integer
/// translates with |n1|, |n2| <= `bound`: for every pair of segments of
/// different slope classes and every translate of the second, the
/// intersection point of their supporting lines when it lies on both closed
/// segments.
pub fn delta_coincidences(partition: &Partition, bound: i64) -> Vec<Vec2> {
    let segs = partition.segments();
    let mut out = Vec::new();
    for i in 0..segs.len() {
        for j in 0..segs.len() {
            let (_, si, a1, b1) = &segs[i];
            let (_, sj, a2, b2) = &segs[j];
            if si == sj {
                continue;
            }
            let d1 = b1.sub(a1);
            let d2 = b2.sub(a2);
            let den = d1.cross(&d2);
            debug_assert!(den.sign() != 0);
            for n1 in -bound..=bound {
                for n2 in -bound..=bound {
                    let a2t = a2.add(&Vec2::of(n1, n2));
                    // a1 + t d1 = a2t + s d2
                    let w = a2t.sub(a1);
                    let t = w.cross(&d2).checked_div(&den).unwrap();
                    let s = w.cross(&d1).checked_div(&den).unwrap();
                    let unit = GoldenNum::one();
                    if t.sign() < 0
                        || (&t - &unit).sign() > 0
                        || s.sign() < 0
                        || (&s - &unit).sign() > 0
                    {
                        continue;
                    }
                    out.push(a1.add(&d1.scale(&t)));
                }
            }
        }
    }
    out
}

/// True when the closed segment A--B is covered by the union of the
/// Delta-line segments and their lattice translates.
pub fn segment_covered_by_delta(partition: &Partition, a: &Vec2, b: &Vec2) -> bool {
    let d = b.sub(a);
    let dd = d.dot(&d);
    let g0 = torus::gamma0();
    let g1 = torus::gamma1();
    // Lattice range wide enough for |horizontal shift| <= 10.
    let mut intervals: Vec<(GoldenNum, GoldenNum)> = Vec::new();
    for (_, _, s1, s2) in partition.segments() {
        for m in -10i64..=10 {
            for k in -4i64..=4 {
                let g = g0
                    .scale(&GoldenNum::from_int(m))
                    .add(&g1.scale(&GoldenNum::from_int(k)));
                let q1 = s1.add(&g);
                let q2 = s2.add(&g);
                if q1.sub(a).cross(&d).sign() != 0 || q2.sub(a).cross(&d).sign() != 0 {
                    continue;
                }
                let t1 = q1.sub(a).dot(&d) / dd.clone();
                let t2 = q2.sub(a).dot(&d) / dd.clone();
                let (lo, hi) = if t1 <= t2 { (t1, t2) } else { (t2, t1) };
                let lo = lo.max(GoldenNum::zero());
                let hi = hi.min(GoldenNum::one());
                if lo < hi {
                    intervals.push((lo, hi));
                }
            }
        }
    }
    intervals.sort_by(|x, y| x.0.cmp(&y.0));
    let mut cur = GoldenNum::zero();
    for (lo, hi) in intervals {
        if lo > cur {
            return false;
        }
        if hi > cur {
            cur = hi;
        }
    }
    cur >= GoldenNum::one()
}
