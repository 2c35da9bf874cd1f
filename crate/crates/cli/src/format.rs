//! Number formatting and `--p` grid parsing shared by every subcommand.

use circnorm::{Error, Exponent};

/// Shortest representation that parses back to the same `f64`; `inf` for
/// infinity. Very large or very small magnitudes switch to exponent form.
pub fn fmt_float(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let mag = x.abs();
    if mag != 0.0 && !(1e-5..1e16).contains(&mag) {
        format!("{x:e}")
    } else {
        format!("{x}")
    }
}

pub fn fmt_exponent(e: Exponent<f64>) -> String {
    fmt_float(e.value())
}

/// Parses a comma-separated list of numbers or `inf`, or
/// `log:lo:hi:count` for `count` log-spaced points from `lo` to `hi`.
/// `1`, `2` and `inf` are always included; the result is sorted ascending
/// with exact duplicates removed.
pub fn parse_p_grid(spec: &str) -> Result<Vec<Exponent<f64>>, Error> {
    let spec = spec.trim();
    let mut grid = match spec.strip_prefix("log:") {
        Some(rest) => parse_log_grid(rest)?,
        None => spec
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(str::parse::<Exponent<f64>>)
            .collect::<Result<Vec<_>, _>>()?,
    };
    grid.extend([Exponent::one(), Exponent::two(), Exponent::infinity()]);
    grid.sort_by(|a, b| a.partial_cmp(b).expect("exponents are never NaN"));
    grid.dedup();
    Ok(grid)
}

fn parse_log_grid(rest: &str) -> Result<Vec<Exponent<f64>>, Error> {
    let bad = || Error::InvalidExponent(format!("log:{rest} (expected log:lo:hi:count)"));
    let parts: Vec<&str> = rest.split(':').collect();
    let [lo, hi, count] = parts.as_slice() else {
        return Err(bad());
    };
    let lo: f64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: f64 = hi.trim().parse().map_err(|_| bad())?;
    let count: usize = count.trim().parse().map_err(|_| bad())?;
    if count == 0 || !(lo.is_finite() && hi.is_finite()) || lo > hi {
        return Err(bad());
    }
    if count == 1 {
        return Ok(vec![Exponent::finite(lo)?]);
    }
    let (llo, lhi) = (lo.ln(), hi.ln());
    (0..count)
        .map(|i| {
            let t = if i + 1 == count {
                hi
            } else if i == 0 {
                lo
            } else {
                (llo + (lhi - llo) * i as f64 / (count - 1) as f64).exp()
            };
            Exponent::finite(t)
        })
        .collect()
}

/// Comma-separated floats.
pub fn parse_row(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| format!("malformed number {t:?} in --row"))
        })
        .collect()
}
