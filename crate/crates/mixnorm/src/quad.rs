//! Scalar quadrature and 1-d search helpers: adaptive Simpson, golden-section
//! maximization, fixed Gauss-Legendre panels, and a log-log slope fit.

use crate::{Error, Result};

/// Adaptive Simpson on [a, b] to relative tolerance `rel_tol`.
///
/// The error estimate is the classical |S2 - S1|/15 with bisection; intervals
/// stop refining once their estimate is below their share of the budget.
/// Depth is capped at 48; exceeding the cap on a non-negligible interval is a
/// non-convergence error.
pub fn adaptive_simpson(f: &mut impl FnMut(f64) -> f64, a: f64, b: f64, rel_tol: f64) -> Result<f64> {
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = simpson(a, b, fa, fm, fb);
    let scale = whole.abs().max(1e-300);
    let mut out = 0.0;
    recurse(f, a, b, fa, fm, fb, whole, rel_tol * scale, 0, &mut out, scale)?;
    Ok(out)
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn recurse(
    f: &mut impl FnMut(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
    acc: &mut f64,
    scale: f64,
) -> Result<()> {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * tol || (b - a) < 1e-15 {
        *acc += left + right + delta / 15.0;
        return Ok(());
    }
    if depth >= 48 {
        if delta.abs() / 15.0 > 1e-7 * scale {
            return Err(Error::NonConvergence { context: "adaptive Simpson depth cap" });
        }
        *acc += left + right + delta / 15.0;
        return Ok(());
    }
    recurse(f, a, m, fa, flm, fm, left, tol / 2.0, depth + 1, acc, scale)?;
    recurse(f, m, b, fm, frm, fb, right, tol / 2.0, depth + 1, acc, scale)
}

/// Golden-section maximization of `f` on [a, b]; returns (argmax, max).
/// Runs until the bracket is below `x_tol` (absolute) or 120 iterations.
pub fn golden_max(f: &mut impl FnMut(f64) -> f64, a: f64, b: f64, x_tol: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let (mut a, mut b) = (a, b);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    let mut best = if fc > fd { (c, fc) } else { (d, fd) };
    for _ in 0..120 {
        if (b - a).abs() < x_tol {
            break;
        }
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
        let (x, v) = if fc > fd { (c, fc) } else { (d, fd) };
        if v > best.1 {
            best = (x, v);
        }
    }
    best
}

/// 12-point Gauss-Legendre nodes/weights on [-1, 1] (positive half; mirror for the rest).
const GL12_X: [f64; 6] = [
    0.125_233_408_511_468_9,
    0.367_831_498_998_180_2,
    0.587_317_954_286_617_4,
    0.769_902_674_194_304_9,
    0.904_117_256_370_474_9,
    0.981_560_634_246_719_3,
];
const GL12_W: [f64; 6] = [
    0.249_147_045_813_402_8,
    0.233_492_536_538_354_8,
    0.203_167_426_723_065_9,
    0.160_078_328_543_346_2,
    0.106_939_325_995_318_4,
    0.047_175_336_386_511_83,
];

/// 12-point Gauss-Legendre panel of a complex-valued integrand on [a, b].
pub fn gl12<Fv>(f: &mut Fv, a: f64, b: f64) -> crate::C64
where
    Fv: FnMut(f64) -> crate::C64,
{
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut acc = crate::C64::new(0.0, 0.0);
    for i in 0..6 {
        acc += GL12_W[i] * (f(mid + half * GL12_X[i]) + f(mid - half * GL12_X[i]));
    }
    acc * half
}

/// Least-squares slope of y against x.
pub fn ls_slope(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let mut num = 0.0;
    let mut den = 0.0;
    for (xi, yi) in x.iter().zip(y) {
        num += (xi - mx) * (yi - my);
        den += (xi - mx) * (xi - mx);
    }
    num / den
}
