//! Report rows and serialization. Rationals are rendered as "p/q" strings,
//! integers as JSON numbers below 2^53 and as strings above; CSV and JSON
//! rows carry identical numeric content.

use crate::fail::Failure;
use lech_core::bounds::RatioReport;
use num_rational::BigRational;
use serde_json::{json, Value};

pub const CSV_HEADER: [&str; 11] = [
    "ideal",
    "colength",
    "mu",
    "e",
    "ratio_num",
    "ratio_den",
    "bound_name",
    "bound_num",
    "bound_den",
    "hypothesis_met",
    "satisfied",
];

#[derive(Clone, Debug)]
pub struct Row {
    pub ideal: String,
    pub colength: u64,
    pub mu: u64,
    pub e: u64,
    pub ratio_num: String,
    pub ratio_den: String,
    pub bound_name: String,
    pub bound_num: String,
    pub bound_den: String,
    pub hypothesis_met: bool,
    pub satisfied: bool,
}

impl Row {
    pub fn from_report(report: &RatioReport) -> Vec<Row> {
        report
            .checks
            .iter()
            .map(|c| Row {
                ideal: report.ideal.clone(),
                colength: report.colength,
                mu: report.mu,
                e: report.e,
                ratio_num: report.ratio.numer().to_string(),
                ratio_den: report.ratio.denom().to_string(),
                bound_name: c.name.as_str().into(),
                bound_num: c.bound.numer().to_string(),
                bound_den: c.bound.denom().to_string(),
                hypothesis_met: c.hypothesis_met,
                satisfied: c.satisfied,
            })
            .collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "ideal": self.ideal,
            "colength": json_u64(self.colength),
            "mu": json_u64(self.mu),
            "e": json_u64(self.e),
            "ratio_num": json_int_str(&self.ratio_num),
            "ratio_den": json_int_str(&self.ratio_den),
            "bound_name": self.bound_name,
            "bound_num": json_int_str(&self.bound_num),
            "bound_den": json_int_str(&self.bound_den),
            "hypothesis_met": self.hypothesis_met,
            "satisfied": self.satisfied,
        })
    }

    pub fn csv_record(&self) -> Vec<String> {
        vec![
            self.ideal.clone(),
            self.colength.to_string(),
            self.mu.to_string(),
            self.e.to_string(),
            self.ratio_num.clone(),
            self.ratio_den.clone(),
            self.bound_name.clone(),
            self.bound_num.clone(),
            self.bound_den.clone(),
            self.hypothesis_met.to_string(),
            self.satisfied.to_string(),
        ]
    }

    pub fn is_violation(&self) -> bool {
        self.hypothesis_met && !self.satisfied
    }
}

/// "p/q" with the reduced denominator always spelled out.
pub fn rational_str(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Integers stay JSON numbers while they are exactly representable in a
/// double (below 2^53); larger values become strings.
pub fn json_u64(x: u64) -> Value {
    if x < (1u64 << 53) {
        json!(x)
    } else {
        json!(x.to_string())
    }
}

fn json_int_str(s: &str) -> Value {
    let in_range = s
        .parse::<i64>()
        .map(|v| v.unsigned_abs() < (1u64 << 53))
        .unwrap_or(false);
    if in_range {
        json!(s.parse::<i64>().unwrap())
    } else {
        json!(s)
    }
}

pub fn ratio_report_json(ring: &str, report: &RatioReport) -> Value {
    json!({
        "ring": ring,
        "ideal": report.ideal,
        "dim": report.dim,
        "e": json_u64(report.e),
        "colength": json_u64(report.colength),
        "mu": json_u64(report.mu),
        "ratio": rational_str(&report.ratio),
        "checks": report.checks.iter().map(|c| json!({
            "name": c.name.as_str(),
            "bound": rational_str(&c.bound),
            "hypothesis_met": c.hypothesis_met,
            "satisfied": c.satisfied,
            "tight": c.tight,
            "note": c.note,
        })).collect::<Vec<_>>(),
    })
}

pub fn render_rows_json(config: &Value, rows: &[Row]) -> String {
    let doc = json!({
        "config": config,
        "rows": rows.iter().map(Row::to_json).collect::<Vec<_>>(),
    });
    let mut out = serde_json::to_string_pretty(&doc).expect("serializable");
    out.push('\n');
    out
}

pub fn render_rows_csv(rows: &[Row]) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER)
        .map_err(|e| Failure::input("io", e.to_string()))?;
    for row in rows {
        w.write_record(row.csv_record())
            .map_err(|e| Failure::input("io", e.to_string()))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Failure::input("io", e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Failure::input("io", e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn rationals_render_with_explicit_denominator() {
        let r = BigRational::new(BigInt::from(6), BigInt::from(10));
        assert_eq!(rational_str(&r), "3/5");
        let one = BigRational::new(BigInt::from(3), BigInt::from(3));
        assert_eq!(rational_str(&one), "1/1");
    }

    #[test]
    fn large_integers_become_strings() {
        assert_eq!(json_u64(7), json!(7));
        assert_eq!(json_u64(1u64 << 53), json!("9007199254740992"));
    }

    #[test]
    fn csv_and_json_rows_carry_the_same_content() {
        let row = Row {
            ideal: "x^2, x*y, y^2".into(),
            colength: 3,
            mu: 3,
            e: 4,
            ratio_num: "2".into(),
            ratio_den: "3".into(),
            bound_name: "lech".into(),
            bound_num: "1".into(),
            bound_den: "1".into(),
            hypothesis_met: true,
            satisfied: true,
        };
        let j = row.to_json();
        let record = row.csv_record();
        for (i, col) in CSV_HEADER.iter().enumerate() {
            let jv = &j[col];
            let sv = &record[i];
            let matches = match jv {
                Value::String(s) => s == sv,
                other => other.to_string() == *sv,
            };
            assert!(matches, "column {col}: {jv} vs {sv}");
        }
    }
}
