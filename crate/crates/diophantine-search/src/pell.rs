//! Pell-type sweep: every quasi-minimal curve of bounded `|B|` carrying an
//! integral point whose fourth multiple is integral.
//!
//! Points with integral `[2]P` have the shape `P = (MNt, 3^α M²N)` with
//! `3^{2α} M = Nt³ + K` and `B = M³N²K`; integrality of `[4]P` further pins
//! the primitive value of `𝒜² + 20𝒜ℬ − 8ℬ²` at `(𝒜, ℬ) = (Nt³, K)` to
//! `±8·3^γ`.  Completing the square with `u = Nt³/2 + 5K` (recall `Nt` is
//! even) turns that into the Pell-type condition
//!
//! ```text
//!     u² = 27K² + r,      r ∈ {−2, +18, −18, +54, −54}
//! ```
//!
//! (`r = +2` dies mod 3: squares are never ≡ 2).  The sweep enumerates `K`
//! up to a cap implied by `|B| ≤ B_max`, solves each Pell residue exactly,
//! unwinds `u` back to `(M, N, t, K, α)` candidates over the cube-part
//! splits of `Nt³`, and keeps a row only after the group law confirms
//! `[4]P` integral on the reconstructed curve.  Branch-level side conditions
//! are deliberately generous — the final multiplication is the filter, so a
//! too-wide branch can only cost time.

use std::collections::BTreeSet;

use curve_core::arith::multiply;
use curve_core::{make_curve, CurvePoint, MordellCurve};
use num_integer::Integer;

use crate::error::SearchError;
use crate::Result;

/// Hard ceiling on `B_max` (resource guard).
pub const B_MAX_LIMIT: i64 = 10_000_000_000;

/// Admissible residues `r = F/4` in `u² = 27K² + r`.
const RESIDUES: [i128; 5] = [-2, 18, -18, 54, -54];

fn isqrt_i128(v: i128) -> i128 {
    debug_assert!(v >= 0);
    let mut r = (v as f64).sqrt() as i128;
    while r > 0 && r * r > v {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= v {
        r += 1;
    }
    r
}

/// All `(curve, point)` rows with `|B| ≤ b_max`, point `(x, |y|)` canonical,
/// ordered by `|B|`, then `B`, then `x`.
///
/// Every emitted row satisfies: the curve is quasi-minimal, the point is an
/// infinite-order integral point, and `[4]P` is integral (verified by exact
/// multiplication, independently of the Pell bookkeeping that proposed it).
pub fn pell_sweep_four_div(b_max: i64) -> Result<Vec<(MordellCurve, CurvePoint)>> {
    if b_max > B_MAX_LIMIT {
        return Err(SearchError::BoundTooLarge {
            bound: b_max,
            limit: B_MAX_LIMIT,
        });
    }

    // The smallest |B| admitting a given K grows like (7/45)³ K⁴ ≈ 0.0038 K⁴
    // (α = 1 branch); sweeping K against 0.0036 K⁴ with slack keeps every
    // admissible K inside the cap.
    let cap = ((b_max.max(1) as f64 / 0.0036).powf(0.25)).ceil() as i128 + 8;

    let mut seen: BTreeSet<(i64, i64, i64)> = BTreeSet::new();
    for k in -cap..=cap {
        if k == 0 {
            continue;
        }
        for r in RESIDUES {
            let s = 27 * k * k + r;
            if s < 0 {
                continue;
            }
            let u = isqrt_i128(s);
            if u * u != s {
                continue;
            }
            let u_signs = if u == 0 { vec![0] } else { vec![u, -u] };
            for us in u_signs {
                let v = us - 5 * k;
                if v == 0 {
                    continue;
                }
                let nt3 = 2 * v;
                for alpha in [0u32, 1] {
                    let m_num = nt3 + k;
                    let m = if alpha == 1 {
                        if m_num % 9 != 0 {
                            continue;
                        }
                        m_num / 9
                    } else {
                        m_num
                    };
                    if m <= 0 {
                        continue;
                    }
                    // Split Nt³ = t³ · N over the signed cube divisors.
                    let mut t_mag = 1i128;
                    while t_mag * t_mag * t_mag <= nt3.abs() {
                        let t3 = t_mag.pow(3);
                        if nt3 % t3 == 0 {
                            for t in [t_mag, -t_mag] {
                                let n = nt3 / (t * t * t);
                                let nt = n * t;
                                if m.gcd(&nt) != 1 || k.gcd(&(m * nt)) != 1 || nt % 2 != 0 {
                                    continue;
                                }
                                let b = m * m * m * n * n * k;
                                if b.abs() > b_max as i128 {
                                    continue;
                                }
                                let Ok(curve) = make_curve(b as i64) else {
                                    continue;
                                };
                                if !curve.quasi_minimal() {
                                    continue;
                                }
                                // |x|³ ≤ |B·Nt³/K| keeps coordinates in i64
                                // once |B| is filtered.
                                let px = m * nt;
                                let py = 3i128.pow(alpha) * m * m * n;
                                let p = CurvePoint::affine_int(px as i64, py as i64);
                                if !curve.contains(&p) || curve.is_torsion_point(&p) {
                                    continue;
                                }
                                let Ok(q) = multiply(&curve, &p, 4) else {
                                    continue;
                                };
                                if !q.is_integral() {
                                    continue;
                                }
                                seen.insert((b as i64, px as i64, (py as i64).abs()));
                            }
                        }
                        t_mag += 1;
                    }
                }
            }
        }
    }

    let mut rows: Vec<(i64, i64, i64)> = seen.into_iter().collect();
    rows.sort_by_key(|&(b, x, _)| (b.abs(), b, x));
    let mut out = Vec::with_capacity(rows.len());
    for (b, x, y) in rows {
        out.push((make_curve(b)?, CurvePoint::affine_int(x, y)));
    }
    Ok(out)
}
