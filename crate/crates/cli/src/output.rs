//! Serializable views of results. Fractions are always strings, `num/den`,
//! with integers written without a denominator.

use serde::Serialize;

use hurwitz::hodge::PolynomialityReport;
use hurwitz::verify::{Outcome, VerificationReport};
use hurwitz::{CountReport, ExactRational, HodgeIntegralTable};

pub fn fraction(q: &ExactRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[derive(Serialize)]
pub struct HurwitzDoc {
    pub genus: u32,
    pub partition: Vec<usize>,
    pub d: usize,
    pub m: usize,
    pub b: usize,
    pub r: usize,
    pub k: usize,
    pub method: String,
    pub tuple_count: String,
    pub hurwitz_number: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_form_printed_exponent: Option<String>,
    pub engine_version: &'static str,
}

impl HurwitzDoc {
    pub fn new(report: &CountReport, closed: Option<&ExactRational>, printed: Option<&ExactRational>) -> Self {
        let i = &report.instance;
        Self {
            genus: i.genus(),
            partition: i.alpha().parts().to_vec(),
            d: i.d(),
            m: i.m(),
            b: i.b(),
            r: i.r(),
            k: i.k(),
            method: report.method.to_string(),
            tuple_count: report.tuple_count.to_string(),
            hurwitz_number: fraction(&report.hurwitz_number),
            closed_form: closed.map(fraction),
            closed_form_printed_exponent: printed.map(fraction),
            engine_version: hurwitz::ENGINE_VERSION,
        }
    }
}

#[derive(Serialize)]
pub struct EntryDoc {
    pub psi: Vec<usize>,
    pub lambda: u32,
    pub value: String,
}

#[derive(Serialize)]
pub struct HoldoutDoc {
    pub point: Vec<usize>,
    pub hurwitz: Option<String>,
    pub elsv: Option<String>,
    pub method: Option<String>,
    pub passed: bool,
    pub error: Option<String>,
}

#[derive(Serialize)]
pub struct HodgeDoc {
    pub genus: u32,
    pub marks: usize,
    pub fit_points: Vec<Vec<usize>>,
    pub entries: Vec<EntryDoc>,
    pub holdouts: Vec<HoldoutDoc>,
    pub all_holdouts_pass: bool,
    pub table_file: String,
}

impl HodgeDoc {
    pub fn new(fit_points: &[Vec<usize>], table: &HodgeIntegralTable, report: &PolynomialityReport, table_file: String) -> Self {
        Self {
            genus: table.genus(),
            marks: table.marks(),
            fit_points: fit_points.to_vec(),
            entries: table
                .iter()
                .map(|(m, v)| EntryDoc { psi: m.psi().to_vec(), lambda: m.lambda(), value: fraction(v) })
                .collect(),
            holdouts: report
                .checks
                .iter()
                .map(|c| HoldoutDoc {
                    point: c.point.clone(),
                    hurwitz: c.hurwitz.as_ref().map(fraction),
                    elsv: c.elsv.as_ref().map(fraction),
                    method: c.method.map(|m| m.to_string()),
                    passed: c.passed(),
                    error: c.error.clone(),
                })
                .collect(),
            all_holdouts_pass: report.checks.iter().all(|c| c.passed()),
            table_file,
        }
    }
}

#[derive(Serialize)]
pub struct CheckDoc<'a> {
    pub suite: &'a str,
    pub label: &'a str,
    pub expected: &'a str,
    pub actual: &'a str,
    pub outcome: &'static str,
}

pub fn outcome_str(o: Outcome) -> &'static str {
    match o {
        Outcome::Pass => "pass",
        Outcome::Fail => "fail",
        Outcome::Note => "note",
    }
}

#[derive(Serialize)]
pub struct VerifyDoc<'a> {
    pub checks: Vec<CheckDoc<'a>>,
    pub passed: usize,
    pub failed: usize,
    pub all_passed: bool,
}

impl<'a> VerifyDoc<'a> {
    pub fn new(report: &'a VerificationReport) -> Self {
        Self {
            checks: report
                .rows
                .iter()
                .map(|r| CheckDoc {
                    suite: r.suite,
                    label: &r.label,
                    expected: &r.expected,
                    actual: &r.actual,
                    outcome: outcome_str(r.outcome),
                })
                .collect(),
            passed: report.count(Outcome::Pass),
            failed: report.count(Outcome::Fail),
            all_passed: report.all_passed(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hurwitz::elsv::parse_rational;

    #[test]
    fn fractions_render_exactly() {
        let q = |n: i64, d: i64| parse_rational(&format!("{n}/{d}")).unwrap();
        assert_eq!(fraction(&q(1, 2)), "1/2");
        assert_eq!(fraction(&q(4, 1)), "4");
        assert_eq!(fraction(&q(-6, 4)), "-3/2");
        assert_eq!(fraction(&q(0, 5)), "0");
    }
}
