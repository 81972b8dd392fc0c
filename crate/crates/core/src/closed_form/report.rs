//! Per-instance index reports and the Gutman / degree-Kirchhoff table.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graphs::{build_chain, ChainFamily};
use crate::numerics::{rational_to_f64, render_fixed, render_table_value};
use crate::oracles;

use super::indices::{gutman, kemeny, kf_star, ratio, schultz, spanning_trees};

/// Decimal places used when serializing exact values.
pub const REPORT_PLACES: u32 = 10;

/// Decimal places printed in the table for `Kf*` and the ratio columns.
pub const TABLE_PLACES: u32 = 4;

/// Default row set of the table.
pub const DEFAULT_TABLE_NS: [usize; 12] = [2, 3, 4, 5, 6, 7, 8, 9, 10, 20, 50, 99];

/// An exact rational serialized as numerator, denominator and decimal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactValue {
    pub num: String,
    pub den: String,
    pub decimal: String,
}

impl ExactValue {
    pub fn new(value: &BigRational, places: u32) -> Self {
        ExactValue {
            num: value.numer().to_string(),
            den: value.denom().to_string(),
            decimal: render_table_value(value, places),
        }
    }

    /// Rebuild the exact value; `None` if the strings are malformed.
    pub fn to_rational(&self) -> Option<BigRational> {
        let num: BigInt = self.num.parse().ok()?;
        let den: BigInt = self.den.parse().ok()?;
        (den != BigInt::from(0)).then(|| BigRational::new(num, den))
    }
}

/// Oracle values computed from the graph itself.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleColumns {
    pub kf_star: ExactValue,
    pub kirchhoff: ExactValue,
    pub tau: String,
    pub gutman: String,
    pub schultz: String,
    pub wiener: String,
    pub matches: bool,
}

/// Every closed-form invariant of one chain.
#[derive(Debug, Clone, PartialEq)]
pub struct IndexReport {
    pub n: usize,
    pub family: ChainFamily,
    pub kf_star: BigRational,
    pub kemeny: BigRational,
    pub tau: BigInt,
    pub gutman: BigInt,
    pub schultz: BigInt,
    pub ratio: BigRational,
    pub oracle: Option<OracleColumns>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IndexReportJson {
    pub n: usize,
    pub family: ChainFamily,
    pub kf_star: ExactValue,
    pub kemeny: ExactValue,
    pub tau: String,
    pub gutman: String,
    pub schultz: String,
    pub ratio: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub oracle: Option<OracleColumns>,
}

impl IndexReport {
    pub fn closed_form(n: usize, family: ChainFamily) -> Result<Self> {
        Ok(IndexReport {
            n,
            family,
            kf_star: kf_star(n, family)?,
            kemeny: kemeny(n, family)?,
            tau: spanning_trees(n, family)?,
            gutman: gutman(n, family)?,
            schultz: schultz(n, family)?,
            ratio: ratio(n, family)?,
            oracle: None,
        })
    }

    /// Closed forms plus brute-force values from the constructed graph.
    pub fn with_oracles(n: usize, family: ChainFamily) -> Result<Self> {
        let mut report = Self::closed_form(n, family)?;
        let g = build_chain(n, family)?;
        let dist = oracles::all_pairs_distances(&g)?;
        let res = oracles::exact_resistances(&g)?;
        let kf_star = oracles::degree_kirchhoff_from(&g, &res);
        let kirchhoff = oracles::kirchhoff_from(&res);
        let tau = oracles::spanning_trees_oracle(&g)?;
        let gutman = oracles::gutman_from(&g, &dist);
        let schultz = oracles::schultz_from(&g, &dist);
        let matches = kf_star == report.kf_star
            && tau == report.tau
            && gutman == report.gutman
            && schultz == report.schultz;
        report.oracle = Some(OracleColumns {
            kf_star: ExactValue::new(&kf_star, REPORT_PLACES),
            kirchhoff: ExactValue::new(&kirchhoff, REPORT_PLACES),
            tau: tau.to_string(),
            gutman: gutman.to_string(),
            schultz: schultz.to_string(),
            wiener: oracles::wiener_from(&dist).to_string(),
            matches,
        });
        Ok(report)
    }

    pub fn to_json(&self) -> IndexReportJson {
        IndexReportJson {
            n: self.n,
            family: self.family,
            kf_star: ExactValue::new(&self.kf_star, REPORT_PLACES),
            kemeny: ExactValue::new(&self.kemeny, REPORT_PLACES),
            tau: self.tau.to_string(),
            gutman: self.gutman.to_string(),
            schultz: self.schultz.to_string(),
            ratio: render_fixed(&self.ratio, REPORT_PLACES),
            oracle: self.oracle.clone(),
        }
    }
}

/// One row of `Gut / Kf*` diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct RatioRow {
    pub n: usize,
    pub ratio: BigRational,
    pub value: f64,
    pub rendered: String,
}

pub fn ratio_diagnostics(ns: &[usize], family: ChainFamily) -> Result<Vec<RatioRow>> {
    ns.iter()
        .map(|&n| {
            let r = ratio(n, family)?;
            Ok(RatioRow {
                n,
                value: rational_to_f64(&r),
                rendered: render_fixed(&r, TABLE_PLACES),
                ratio: r,
            })
        })
        .collect()
}

/// Exact check that the ratios increase strictly and stay below 3.
pub fn ratios_increase_below_three(rows: &[RatioRow]) -> bool {
    let three = BigRational::from_integer(BigInt::from(3));
    rows.windows(2).all(|w| w[0].ratio < w[1].ratio) && rows.iter().all(|r| r.ratio < three)
}

/// One rendered table row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub n: usize,
    pub gut_cylinder: String,
    pub kf_star_cylinder: String,
    pub ratio_cylinder: String,
    pub gut_mobius: String,
    pub kf_star_mobius: String,
    pub ratio_mobius: String,
}

impl TableRow {
    pub fn new(n: usize) -> Result<Self> {
        let kf = |f| kf_star(n, f).map(|v| render_table_value(&v, TABLE_PLACES));
        let rt = |f| ratio(n, f).map(|v| render_fixed(&v, TABLE_PLACES));
        Ok(TableRow {
            n,
            gut_cylinder: gutman(n, ChainFamily::Cylinder)?.to_string(),
            kf_star_cylinder: kf(ChainFamily::Cylinder)?,
            ratio_cylinder: rt(ChainFamily::Cylinder)?,
            gut_mobius: gutman(n, ChainFamily::Mobius)?.to_string(),
            kf_star_mobius: kf(ChainFamily::Mobius)?,
            ratio_mobius: rt(ChainFamily::Mobius)?,
        })
    }

    fn fields(&self) -> [String; 7] {
        [
            self.n.to_string(),
            self.gut_cylinder.clone(),
            self.kf_star_cylinder.clone(),
            self.ratio_cylinder.clone(),
            self.gut_mobius.clone(),
            self.kf_star_mobius.clone(),
            self.ratio_mobius.clone(),
        ]
    }
}

pub const TABLE_HEADER: [&str; 7] = [
    "n",
    "gut_cylinder",
    "kf_star_cylinder",
    "ratio_cylinder",
    "gut_mobius",
    "kf_star_mobius",
    "ratio_mobius",
];

pub fn table_rows(ns: &[usize]) -> Result<Vec<TableRow>> {
    ns.iter().map(|&n| TableRow::new(n)).collect()
}

/// Comma-separated, header row, LF line endings.
pub fn table_csv(rows: &[TableRow]) -> String {
    let mut out = TABLE_HEADER.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.fields().join(","));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::frac;

    #[test]
    fn exact_value_round_trip() {
        let v = frac(593, 56);
        let e = ExactValue::new(&v, 4);
        assert_eq!(e.decimal, "10.5893");
        assert_eq!(e.to_rational(), Some(v));
    }

    #[test]
    fn report_for_p5() {
        let r = IndexReport::closed_form(5, ChainFamily::Cylinder).unwrap();
        assert_eq!(r.gutman, BigInt::from(7745));
        assert!(r.to_json().kf_star.decimal.starts_with("3110.1720"));
    }

    #[test]
    fn inline_oracles_agree() {
        let r = IndexReport::with_oracles(3, ChainFamily::Mobius).unwrap();
        assert!(r.oracle.unwrap().matches);
    }

    #[test]
    fn small_rows() {
        let row = TableRow::new(2).unwrap();
        assert_eq!(row.gut_cylinder, "658");
        assert_eq!(row.kf_star_cylinder, "296.5");
        assert_eq!(row.ratio_cylinder, "2.2192");
        assert_eq!(row.kf_star_mobius, "291.6");
        let row = TableRow::new(4).unwrap();
        assert_eq!(row.kf_star_mobius, "1724");
    }

    #[test]
    fn csv_shape() {
        let csv = table_csv(&table_rows(&[2, 3]).unwrap());
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines.iter().all(|l| l.split(',').count() == 7));
        assert!(!csv.contains('\r'));
    }

    #[test]
    fn ratios_monotone() {
        let rows = ratio_diagnostics(&DEFAULT_TABLE_NS, ChainFamily::Cylinder).unwrap();
        assert!(ratios_increase_below_three(&rows));
    }
}
