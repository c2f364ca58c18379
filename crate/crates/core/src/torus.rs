//! The torus T = R^2 / Gamma0 for the lattice Gamma0 = <(phi,0), (1, phi+3)>,
//! with fundamental domain [0,phi) x [0,phi+3), and the Z^2 action by
//! translation that drives all codings in this crate.

use crate::exactnum::{GoldenNum, Vec2};
use num_bigint::BigInt;
use num_traits::ToPrimitive;

/// First lattice generator (phi, 0).
pub fn gamma0() -> Vec2 {
    Vec2::new(GoldenNum::phi(), GoldenNum::zero())
}

/// Second lattice generator (1, phi+3).
pub fn gamma1() -> Vec2 {
    Vec2::new(GoldenNum::one(), GoldenNum::of(3, 1))
}

/// Width of the fundamental domain: phi.
pub fn domain_width() -> GoldenNum {
    GoldenNum::phi()
}

/// Height of the fundamental domain: phi + 3.
pub fn domain_height() -> GoldenNum {
    GoldenNum::of(3, 1)
}

/// A point of the torus, stored as its canonical representative in
/// [0,phi) x [0,phi+3).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TorusPoint {
    p: Vec2,
}

impl TorusPoint {
    /// Reduces an arbitrary plane point modulo Gamma0.
    ///
    /// First subtract k*(1, phi+3) to bring y into [0, phi+3), then subtract
    /// m*(phi, 0) to bring x into [0, phi).
    pub fn reduce(p: &Vec2) -> TorusPoint {
        let h = domain_height();
        let k = (&p.y / &h).floor();
        let kg = GoldenNum::from_bigint(k.clone());
        let x1 = &p.x - &kg; // minus k * 1
        let y1 = &p.y - &(&kg * &h);
        let w = domain_width();
        let m = (&x1 / &w).floor();
        let x2 = &x1 - &(GoldenNum::from_bigint(m) * &w);
        TorusPoint {
            p: Vec2::new(x2, y1),
        }
    }

    pub fn from_coords(x: GoldenNum, y: GoldenNum) -> TorusPoint {
        TorusPoint::reduce(&Vec2::new(x, y))
    }

    /// The canonical representative in the fundamental domain.
    pub fn rep(&self) -> &Vec2 {
        &self.p
    }

    pub fn into_rep(self) -> Vec2 {
        self.p
    }

    /// The Z^2 action: translate by (n1, n2) and reduce.
    pub fn act(&self, n1: i64, n2: i64) -> TorusPoint {
        TorusPoint::reduce(&self.p.add(&Vec2::of(n1, n2)))
    }

    /// Translate by an arbitrary exact vector and reduce.
    pub fn translate(&self, v: &Vec2) -> TorusPoint {
        TorusPoint::reduce(&self.p.add(v))
    }
}

/// Decomposes `v` as m*gamma0 + k*gamma1 + (integer vector) if possible,
/// i.e. tests membership of v in Gamma0 + Z^2 and returns (m, k, n1, n2)
/// with v = m*(phi,0) + k*(1,phi+3) + (n1,n2).
pub fn decompose_lattice_plus_z2(v: &Vec2) -> Option<(i64, i64, i64, i64)> {
    // v = (m*phi + k + n1, k*(phi+3) + n2):
    //   x.b = m, y.b = k must be integers;
    //   y.a - 3k = n2 and x.a - k = n1 must be integers.
    let m = big_to_int(v.x.phi_part())?;
    let k = big_to_int(v.y.phi_part())?;
    let n2 = big_to_int(&(v.y.rational_part() - num_rational::BigRational::from_integer(BigInt::from(3 * k))))?;
    let n1 = big_to_int(&(v.x.rational_part() - num_rational::BigRational::from_integer(BigInt::from(k))))?;
    Some((m, k, n1, n2))
}

/// True when v lies in Gamma0 + Z^2 (the stabiliser of the origin orbit
/// structure under combined lattice and integer translations).
pub fn in_lattice_plus_z2(v: &Vec2) -> bool {
    decompose_lattice_plus_z2(v).is_some()
}

fn big_to_int(r: &num_rational::BigRational) -> Option<i64> {
    if r.is_integer() {
        r.numer().to_i64()
    } else {
        None
    }
}
