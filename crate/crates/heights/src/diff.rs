//! The explicit window between naive and canonical height.

use curve_core::MordellCurve;

/// Lower bound on `½h(P) − ĥ(P)` over all rational points of the curve:
/// `−0.28` when `B < 0`, and `−(1/6)log|B| − 0.299` when `B > 0`.
pub fn height_difference_interval(curve: &MordellCurve) -> f64 {
    let b = curve.b();
    if b < 0 {
        -0.28
    } else {
        -(b as f64).ln() / 6.0 - 0.299
    }
}
