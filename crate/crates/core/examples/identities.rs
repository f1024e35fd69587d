//! Runs the 6j-symbol identity suites for doubled colors up to the given
//! bound (default 3).

use qspin::verify;

fn main() {
    let max: i64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let mut reports = vec![
        verify::verify_orthogonality(max),
        verify::verify_racah(max),
        verify::verify_biedenharn_elliot(max),
        verify::verify_fusion(max),
        verify::verify_whitehead(max),
        verify::verify_r_vs_6j(max.min(3)),
    ];
    reports.extend(verify::verify_normalizations(max));
    for r in &reports {
        print!("{r}");
    }
}
