use serde::Serialize;

use fermion_density::selftest::CheckOutcome;

use crate::config::Format;

pub const CSV_HEADER: &str = "route,beta,omega,n_steps,bc,z_value,reference_z,abs_error";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResultRow {
    pub route: &'static str,
    pub beta: f64,
    pub omega: f64,
    pub n_steps: Option<usize>,
    pub bc: &'static str,
    pub z_value: f64,
    pub reference_z: f64,
    pub abs_error: f64,
}

impl ResultRow {
    pub fn new(
        route: &'static str,
        beta: f64,
        omega: f64,
        n_steps: Option<usize>,
        bc: &'static str,
        z_value: f64,
        reference_z: f64,
    ) -> Self {
        Self {
            route,
            beta,
            omega,
            n_steps,
            bc,
            z_value,
            reference_z,
            abs_error: (z_value - reference_z).abs(),
        }
    }
}

/// 17 significant digits, enough to round-trip any `f64`.
fn num(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn emit(rows: &[ResultRow], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Json => {
            for row in rows {
                out.push_str(&serde_json::to_string(row).expect("rows serialize"));
                out.push('\n');
            }
        }
        Format::Csv => {
            out.push_str(CSV_HEADER);
            out.push('\n');
            for r in rows {
                let n_steps = r.n_steps.map(|n| n.to_string()).unwrap_or_default();
                let fields = [
                    r.route.to_string(),
                    num(r.beta),
                    num(r.omega),
                    n_steps,
                    r.bc.to_string(),
                    num(r.z_value),
                    num(r.reference_z),
                    num(r.abs_error),
                ];
                out.push_str(&fields.join(","));
                out.push('\n');
            }
        }
    }
    out
}

#[derive(Serialize)]
struct CheckRow<'a> {
    check: &'a str,
    passed: bool,
    worst: f64,
    threshold: f64,
}

pub fn emit_checks(outcomes: &[CheckOutcome], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Json => {
            for o in outcomes {
                let row = CheckRow {
                    check: o.name,
                    passed: o.passed,
                    worst: o.worst,
                    threshold: o.threshold,
                };
                out.push_str(&serde_json::to_string(&row).expect("rows serialize"));
                out.push('\n');
            }
        }
        Format::Csv => {
            out.push_str("check,passed,worst,threshold\n");
            for o in outcomes {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    o.name,
                    o.passed,
                    num(o.worst),
                    num(o.threshold)
                ));
            }
        }
    }
    out
}
