//! Curve construction, quasi-minimality, and torsion classification.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::CurveError;
use crate::factor::factor_u64;
use crate::numeric::{perfect_cube, perfect_square};
use crate::point::CurvePoint;
use crate::Result;

/// The torsion subgroup of `y^2 = x^3 + B`, together with its nontrivial
/// points. For Mordell curves the subgroup is read off the shape of `B`:
/// `Z/6` iff `B = 1`, `Z/3` iff `B = -432` or `B` a square `≠ 1`, `Z/2` iff
/// `B` a cube `≠ 1`, trivial otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TorsionKind {
    Z6 { points: Vec<CurvePoint> },
    Z3 { points: [CurvePoint; 2] },
    Z2 { point: CurvePoint },
    Trivial,
}

impl TorsionKind {
    /// Group order (1, 2, 3 or 6).
    pub fn order(&self) -> u32 {
        match self {
            TorsionKind::Z6 { .. } => 6,
            TorsionKind::Z3 { .. } => 3,
            TorsionKind::Z2 { .. } => 2,
            TorsionKind::Trivial => 1,
        }
    }

    /// The nontrivial torsion points (empty for the trivial group).
    pub fn points(&self) -> Vec<CurvePoint> {
        match self {
            TorsionKind::Z6 { points } => points.clone(),
            TorsionKind::Z3 { points } => points.to_vec(),
            TorsionKind::Z2 { point } => vec![point.clone()],
            TorsionKind::Trivial => Vec::new(),
        }
    }
}

/// A Mordell curve `y^2 = x^3 + B` with its coefficient factored and its
/// torsion classified at construction time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MordellCurve {
    b: i64,
    factorization: BTreeMap<u64, u32>,
    quasi_minimal: bool,
    torsion: TorsionKind,
}

impl MordellCurve {
    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn b_big(&self) -> BigInt {
        BigInt::from(self.b)
    }

    /// Prime factorization of `|B|`.
    pub fn factorization(&self) -> &BTreeMap<u64, u32> {
        &self.factorization
    }

    /// `B` is sixth-power-free.
    pub fn quasi_minimal(&self) -> bool {
        self.quasi_minimal
    }

    /// The model is globally minimal iff `B` is sixth-power-free and
    /// `B ≢ 16 (mod 64)`.
    pub fn globally_minimal(&self) -> bool {
        self.quasi_minimal && self.b.rem_euclid(64) != 16
    }

    pub fn torsion(&self) -> &TorsionKind {
        &self.torsion
    }

    /// Exact membership test `y^2 = x^3 + B`.
    pub fn contains(&self, p: &CurvePoint) -> bool {
        match p {
            CurvePoint::Identity => true,
            CurvePoint::Affine { x, y } => {
                y * y == x * x * x + BigRational::from_integer(self.b_big())
            }
        }
    }

    /// `p` is the identity or one of the (finitely many, explicitly listed)
    /// torsion points. Exact: no height computation involved.
    pub fn is_torsion_point(&self, p: &CurvePoint) -> bool {
        p.is_identity() || self.torsion.points().contains(p)
    }
}

fn classify_torsion(b: i64) -> TorsionKind {
    let big = BigInt::from(b);
    if b == 1 {
        return TorsionKind::Z6 {
            points: vec![
                CurvePoint::affine_int(2, 3),
                CurvePoint::affine_int(2, -3),
                CurvePoint::affine_int(0, 1),
                CurvePoint::affine_int(0, -1),
                CurvePoint::affine_int(-1, 0),
            ],
        };
    }
    if b == -432 {
        return TorsionKind::Z3 {
            points: [
                CurvePoint::affine_int(12, 36),
                CurvePoint::affine_int(12, -36),
            ],
        };
    }
    if let Some(b0) = perfect_square(&big) {
        return TorsionKind::Z3 {
            points: [
                CurvePoint::affine_big(BigInt::from(0), b0.clone()),
                CurvePoint::affine_big(BigInt::from(0), -b0),
            ],
        };
    }
    if let Some(b0) = perfect_cube(&big) {
        return TorsionKind::Z2 {
            point: CurvePoint::affine_big(-b0, BigInt::from(0)),
        };
    }
    TorsionKind::Trivial
}

/// Builds the curve `y^2 = x^3 + B`.
///
/// Any nonzero `B` is accepted; a coefficient that is not sixth-power-free is
/// flagged via [`MordellCurve::quasi_minimal`] rather than rejected, since the
/// family generators deliberately emit a few such curves. The torsion
/// classification is the quasi-minimal one applied literally to `B`.
pub fn make_curve(b: i64) -> Result<MordellCurve> {
    if b == 0 {
        return Err(CurveError::ZeroB);
    }
    let factorization = factor_u64(b.unsigned_abs());
    let quasi_minimal = factorization.values().all(|&e| e < 6);
    Ok(MordellCurve {
        b,
        factorization,
        quasi_minimal,
        torsion: classify_torsion(b),
    })
}

/// Strips the largest sixth power: returns `(B', u)` with `B = B' * u^6` and
/// `B'` sixth-power-free. The curves `E_B` and `E_{B'}` are isomorphic over
/// the rationals via `(x, y) -> (x/u^2, y/u^3)`.
pub fn sixth_power_free_reduce(b: i64) -> Result<(i64, u64)> {
    if b == 0 {
        return Err(CurveError::ZeroB);
    }
    let mut u = 1u64;
    for (p, e) in factor_u64(b.unsigned_abs()) {
        u *= p.pow(e / 6);
    }
    let b_reduced = b / (u as i64).pow(6);
    Ok((b_reduced, u))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_zero() {
        assert_eq!(make_curve(0).unwrap_err(), CurveError::ZeroB);
        assert_eq!(sixth_power_free_reduce(0).unwrap_err(), CurveError::ZeroB);
    }

    #[test]
    fn torsion_shapes_match_the_coefficient() {
        assert_eq!(make_curve(1).unwrap().torsion().order(), 6);
        assert_eq!(make_curve(-432).unwrap().torsion().order(), 3);
        // Squares pick up the (0, ±sqrt(B)) three-torsion.
        let c16 = make_curve(16).unwrap();
        assert_eq!(
            c16.torsion().points(),
            vec![
                CurvePoint::affine_int(0, 4),
                CurvePoint::affine_int(0, -4)
            ]
        );
        // Cubes pick up the (-cbrt(B), 0) two-torsion.
        let c8 = make_curve(8).unwrap();
        assert_eq!(c8.torsion().points(), vec![CurvePoint::affine_int(-2, 0)]);
        let cm1 = make_curve(-1).unwrap();
        assert_eq!(cm1.torsion().points(), vec![CurvePoint::affine_int(1, 0)]);
        assert_eq!(make_curve(108).unwrap().torsion(), &TorsionKind::Trivial);
        assert_eq!(make_curve(-13500).unwrap().torsion(), &TorsionKind::Trivial);
    }

    #[test]
    fn torsion_points_lie_on_their_curves() {
        for b in [1i64, -432, 16, 9, 8, -1, 64, 125, -27] {
            let c = make_curve(b).unwrap();
            for t in c.torsion().points() {
                assert!(c.contains(&t), "torsion point {t} off E_{b}");
            }
        }
    }

    #[test]
    fn quasi_minimality_flags() {
        assert!(make_curve(108).unwrap().quasi_minimal());
        assert!(!make_curve(64).unwrap().quasi_minimal()); // 2^6
        assert!(!make_curve(-2 * 729 * 64).unwrap().quasi_minimal());
        assert!(make_curve(-21168).unwrap().quasi_minimal());
    }

    #[test]
    fn global_minimality_excludes_16_mod_64() {
        assert!(make_curve(108).unwrap().globally_minimal());
        assert!(!make_curve(80).unwrap().globally_minimal()); // 80 ≡ 16 (64)
        assert!(!make_curve(-2160).unwrap().globally_minimal());
        assert!(!make_curve(-21168).unwrap().globally_minimal());
        assert!(make_curve(1188).unwrap().globally_minimal());
    }

    #[test]
    fn sixth_power_reduction() {
        assert_eq!(sixth_power_free_reduce(-2 * 46656).unwrap(), (-2, 6));
        assert_eq!(sixth_power_free_reduce(64).unwrap(), (1, 2));
        assert_eq!(sixth_power_free_reduce(108).unwrap(), (108, 1));
        assert_eq!(sixth_power_free_reduce(i64::MIN + 1).unwrap().0 % 2, -1);
    }
}
