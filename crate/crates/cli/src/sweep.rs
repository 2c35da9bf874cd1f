//! One row of bounds, oracle estimate and (when known) exact norm per `p`.

use std::io::Write;

use circnorm::oracle::power_estimate;
use circnorm::{best_bounds, exact_two_param, Exponent, OracleConfig, TwoParamSpec};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::format::fmt_float;

pub const CSV_HEADER: [&str; 8] = [
    "p",
    "lower",
    "upper_holder",
    "upper_rt",
    "upper_harmonic",
    "oracle",
    "exact",
    "regime",
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    #[serde(with = "p_field")]
    pub p: f64,
    pub lower: f64,
    pub upper_holder: f64,
    pub upper_rt: f64,
    pub upper_harmonic: f64,
    pub oracle: f64,
    pub exact: Option<f64>,
    pub regime: String,
}

/// `p` is a JSON number, or the string `"inf"`.
mod p_field {
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(p: &f64, s: S) -> Result<S::Ok, S::Error> {
        if p.is_infinite() {
            s.serialize_str("inf")
        } else {
            s.serialize_f64(*p)
        }
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Raw {
        Num(f64),
        Str(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        match Raw::deserialize(d)? {
            Raw::Num(p) => Ok(p),
            Raw::Str(s) if s == "inf" => Ok(f64::INFINITY),
            Raw::Str(s) => Err(de::Error::custom(format!("bad p value {s:?}"))),
        }
    }
}

impl SweepRow {
    fn csv_fields(&self) -> [String; 8] {
        [
            fmt_float(self.p),
            fmt_float(self.lower),
            fmt_float(self.upper_holder),
            fmt_float(self.upper_rt),
            fmt_float(self.upper_harmonic),
            fmt_float(self.oracle),
            self.exact.map(fmt_float).unwrap_or_default(),
            self.regime.clone(),
        ]
    }
}

pub fn sweep_row(spec: &TwoParamSpec<f64>, e: Exponent<f64>, cfg: &OracleConfig) -> SweepRow {
    let bounds = best_bounds(spec, e);
    let oracle = power_estimate(spec, e, cfg);
    let exact = exact_two_param(spec, e).ok().and_then(|r| r.exact_value());
    SweepRow {
        p: e.value(),
        lower: bounds.lower,
        upper_holder: bounds.upper_holder,
        upper_rt: bounds.upper_rt,
        upper_harmonic: bounds.upper_harmonic,
        oracle: oracle.estimate,
        exact,
        regime: bounds.regime.label().to_string(),
    }
}

/// Rows are computed in parallel and returned in grid order.
pub fn sweep(
    spec: &TwoParamSpec<f64>,
    grid: &[Exponent<f64>],
    cfg: &OracleConfig,
) -> Vec<SweepRow> {
    grid.par_iter().map(|&e| sweep_row(spec, e, cfg)).collect()
}

pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> csv::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(CSV_HEADER)?;
    for row in rows {
        w.write_record(row.csv_fields())?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_json<W: Write>(rows: &[SweepRow], mut out: W) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut out, rows)?;
    out.write_all(b"\n")
}

/// Reads back what [`write_csv`] produced.
pub fn read_csv(text: &str) -> Result<Vec<SweepRow>, String> {
    let mut r = csv::ReaderBuilder::new().from_reader(text.as_bytes());
    let header: Vec<String> = r
        .headers()
        .map_err(|e| e.to_string())?
        .iter()
        .map(str::to_string)
        .collect();
    if header != CSV_HEADER {
        return Err(format!("unexpected header {header:?}"));
    }
    let num =
        |s: &str| -> Result<f64, String> { s.parse().map_err(|_| format!("bad number {s:?}")) };
    r.records()
        .map(|rec| {
            let rec = rec.map_err(|e| e.to_string())?;
            Ok(SweepRow {
                p: num(&rec[0])?,
                lower: num(&rec[1])?,
                upper_holder: num(&rec[2])?,
                upper_rt: num(&rec[3])?,
                upper_harmonic: num(&rec[4])?,
                oracle: num(&rec[5])?,
                exact: if rec[6].is_empty() {
                    None
                } else {
                    Some(num(&rec[6])?)
                },
                regime: rec[7].to_string(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_p_grid;

    fn rows(n: usize, a: f64, b: f64, grid: &str) -> Vec<SweepRow> {
        let spec = circnorm::canonicalize(n, a, b).unwrap();
        sweep(
            &spec,
            &parse_p_grid(grid).unwrap(),
            &OracleConfig::default(),
        )
    }

    #[test]
    fn exact_rows_for_all_ones_off_diagonal() {
        let r = rows(4, 0.0, 1.0, "2,4,inf");
        // A(4, 0, 1) has a nonnegative diagonal: exact 3 everywhere
        assert!(r.iter().all(|row| row.exact == Some(3.0)));
        let r = rows(4, -0.0, 1.0, "2");
        assert_eq!(r.len(), 3);
    }

    #[test]
    fn one_by_one_matrix_is_constant() {
        for row in rows(1, 5.0, 0.0, "1,2") {
            assert_eq!(
                [
                    row.lower,
                    row.upper_holder,
                    row.upper_rt,
                    row.upper_harmonic,
                    row.oracle
                ],
                [5.0; 5]
            );
            assert_eq!(row.exact, Some(5.0));
        }
    }

    #[test]
    fn negative_diagonal_rows() {
        let r = rows(5, -1.0, 1.0, "3");
        let at3 = r.iter().find(|row| row.p == 3.0).unwrap();
        assert_eq!(at3.exact, None);
        assert_eq!(at3.regime, "case_II");
        assert_eq!(at3.lower, 3.0);
        assert!((at3.upper_rt - 3f64.powf(2.0 / 3.0) * 5f64.powf(1.0 / 3.0)).abs() < 1e-13);
        assert!(at3.lower <= at3.oracle * (1.0 + 1e-12) && at3.oracle <= at3.upper_rt + 1e-9);
        for row in r.iter().filter(|row| row.exact.is_some()) {
            let ex = row.exact.unwrap();
            let min_upper = row.upper_holder.min(row.upper_rt).min(row.upper_harmonic);
            assert!((row.lower - ex).abs() <= 1e-9 && (min_upper - ex).abs() <= 1e-9);
        }
    }

    #[test]
    fn csv_and_json_agree() {
        let r = rows(6, -1.3, 0.7, "log:1.2:9:4");
        let mut csv_buf = Vec::new();
        write_csv(&r, &mut csv_buf).unwrap();
        let text = String::from_utf8(csv_buf).unwrap();
        assert!(
            text.starts_with("p,lower,upper_holder,upper_rt,upper_harmonic,oracle,exact,regime\n")
        );
        assert!(!text.contains('\r'));
        assert!(text.contains("\ninf,"));
        let mut json_buf = Vec::new();
        write_json(&r, &mut json_buf).unwrap();
        let from_json: Vec<SweepRow> = serde_json::from_slice(&json_buf).unwrap();
        assert_eq!(read_csv(&text).unwrap(), from_json);
        assert_eq!(from_json, r);
        let v: serde_json::Value = serde_json::from_slice(&json_buf).unwrap();
        assert_eq!(v[v.as_array().unwrap().len() - 1]["p"], "inf");
        assert!(v[3]["exact"].is_null());
    }
}
