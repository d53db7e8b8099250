//! Quantized real comparison.
//!
//! All set equality, membership and class equality in this crate run through
//! the single comparator defined here: two coordinates are equal iff they
//! differ by at most `EPS_QUANT`. Geometric dedup uses the same default.

/// Default quantization tolerance for coordinate comparisons.
pub const EPS_QUANT: f64 = 1e-9;

/// Geometric tolerance for vertex dedup and halfplane incidence.
pub const EPS_GEO: f64 = 1e-9;

/// Coordinate equality under the quantization tolerance.
#[inline]
pub fn approx_eq(a: f64, b: f64, eps: f64) -> bool {
    (a - b).abs() <= eps
}

/// `a <= b` up to the quantization tolerance.
#[inline]
pub fn approx_le(a: f64, b: f64, eps: f64) -> bool {
    a <= b + eps
}

/// Format a float with 17 significant digits, enough to round-trip f64.
pub fn fmt_f64_full(x: f64) -> String {
    format!("{x:.16e}")
}

/// Format a float with 12 significant digits, the table/report precision.
pub fn fmt_f64_table(x: f64) -> String {
    format!("{x:.11e}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_format_round_trips() {
        for &x in &[0.0, 1.0, -1.5, std::f64::consts::PI, 1e-300, 2.3e17, 0.1 + 0.2] {
            let s = fmt_f64_full(x);
            let back: f64 = s.parse().unwrap();
            assert_eq!(back.to_bits(), x.to_bits(), "{s}");
        }
    }

    #[test]
    fn comparator_band() {
        assert!(approx_eq(1.0, 1.0 + 0.9e-9, EPS_QUANT));
        assert!(!approx_eq(1.0, 1.0 + 2e-9, EPS_QUANT));
        assert!(approx_le(1.0 + 0.5e-9, 1.0, EPS_QUANT));
    }
}
