//! Renderers for the three output formats.

use std::fmt::Write;

use serde::Serialize;
use springer_core::exactalg::Rational;
use springer_core::springer::{format_q_polynomial, KostkaFoulkesTable, SpringerReport};

use crate::suite::{Summary, CHECKS};
use crate::Failure;

pub fn to_json<T: Serialize>(value: &T) -> Result<String, Failure> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Failure::Other(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn csv_string(rows: Vec<Vec<String>>) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.write_record(&row).map_err(|e| Failure::Other(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Other(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Failure::Other(e.to_string()))
}

fn rational(x: &Rational) -> String {
    springer_core::serial::rational_to_string(x)
}

/// Long format: one `section,degree,key,value` row per datum.
pub fn report_csv(r: &SpringerReport) -> Result<String, Failure> {
    let mut rows = vec![vec!["section".into(), "degree".into(), "key".into(), "value".into()]];
    let mut push = |section: &str, degree: String, key: String, value: String| {
        rows.push(vec![section.into(), degree, key, value]);
    };
    push("summary", String::new(), "lambda".into(), r.lambda.to_string());
    push("summary", String::new(), "fixed_point_count".into(), r.fixed_point_count.to_string());
    push("summary", String::new(), "degree_bound".into(), r.degree_bound.to_string());
    for (d, dim) in r.poincare.iter().enumerate() {
        push("poincare", d.to_string(), String::new(), dim.to_string());
    }
    for (d, m) in r.multiplicities.iter().enumerate() {
        for (mu, x) in m {
            push("multiplicity", d.to_string(), mu.to_string(), x.to_string());
        }
    }
    for (d, m) in r.graded_character.degrees.iter().enumerate() {
        for (ct, x) in m {
            push("character", d.to_string(), ct.to_string(), rational(x));
        }
    }
    let c = &r.certificates;
    for (name, ok) in [
        ("stability", c.stability),
        ("freeness", c.freeness),
        ("completeness", c.completeness),
        ("equivariance", c.equivariance),
    ] {
        push("certificate", String::new(), name.into(), ok.to_string());
    }
    csv_string(rows)
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn pad_table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|j| rows.iter().filter_map(|r| r.get(j)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(j, s)| format!("{s:>w$}", w = widths[j]))
            .collect();
        let _ = writeln!(out, "  {}", cells.join("  ").trim_end());
    }
    out
}

pub fn report_text(r: &SpringerReport) -> String {
    let mut out = String::new();
    let poincare: Vec<u64> = r.poincare.iter().map(|&d| d as u64).collect();
    let _ = writeln!(out, "Springer representation for lambda = ({})", r.lambda);
    let _ = writeln!(
        out,
        "n = {}, fixed points = {}, degree bound = {}",
        r.lambda.n(),
        r.fixed_point_count,
        r.degree_bound
    );
    let _ = writeln!(out, "Poincare polynomial: {}", format_q_polynomial(&poincare));
    let c = &r.certificates;
    let _ = writeln!(
        out,
        "certificates: stability {}, freeness {}, completeness {}, equivariance {}",
        pass(c.stability),
        pass(c.freeness),
        pass(c.completeness),
        pass(c.equivariance)
    );
    let _ = writeln!(out, "\nmultiplicities by degree:");
    for (d, m) in r.multiplicities.iter().enumerate() {
        let terms: Vec<String> = m
            .iter()
            .map(|(mu, &x)| if x == 1 { format!("chi^({mu})") } else { format!("{x} chi^({mu})") })
            .collect();
        let body = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
        let _ = writeln!(out, "  degree {d}: {body}");
    }
    let _ = writeln!(out, "\ngraded character (rows: degree, columns: cycle type):");
    let classes: Vec<_> = r
        .graded_character
        .degrees
        .first()
        .map(|m| m.keys().cloned().collect())
        .unwrap_or_default();
    let mut rows = vec![std::iter::once("deg".to_string())
        .chain(classes.iter().map(|c| format!("({c})")))
        .collect::<Vec<_>>()];
    for (d, m) in r.graded_character.degrees.iter().enumerate() {
        rows.push(
            std::iter::once(d.to_string())
                .chain(classes.iter().map(|c| m.get(c).map(rational).unwrap_or_default()))
                .collect(),
        );
    }
    out.push_str(&pad_table(&rows));
    out
}

pub fn summary_csv(s: &Summary) -> Result<String, Failure> {
    let mut rows = vec![std::iter::once("lambda".to_string())
        .chain(CHECKS.iter().map(|c| c.to_string()))
        .collect::<Vec<_>>()];
    for row in &s.rows {
        rows.push(
            std::iter::once(row.lambda.to_string())
                .chain(row.checks.iter().map(|c| pass(c.passed).to_lowercase()))
                .collect(),
        );
    }
    csv_string(rows)
}

pub fn summary_text(s: &Summary) -> String {
    let mut rows = vec![std::iter::once("lambda".to_string())
        .chain(CHECKS.iter().map(|c| c.to_string()))
        .collect::<Vec<_>>()];
    for row in &s.rows {
        rows.push(
            std::iter::once(format!("({})", row.lambda))
                .chain(row.checks.iter().map(|c| pass(c.passed).to_string()))
                .collect(),
        );
    }
    let mut out = pad_table(&rows);
    for row in &s.rows {
        for c in row.checks.iter().filter(|c| !c.passed) {
            let _ = writeln!(
                out,
                "({}) {}: {}",
                row.lambda,
                c.name,
                c.detail.as_deref().unwrap_or("failed")
            );
        }
    }
    let cells: usize = s.rows.iter().map(|r| r.checks.len()).sum();
    let passed: usize = s.rows.iter().flat_map(|r| &r.checks).filter(|c| c.passed).count();
    let _ = writeln!(
        out,
        "{passed} of {cells} checks passed over {} partitions with n <= {}",
        s.rows.len(),
        s.n_max
    );
    out
}

fn coefficient_list(c: &[u64]) -> String {
    if c.is_empty() {
        return "[0]".into();
    }
    let items: Vec<String> = c.iter().map(u64::to_string).collect();
    format!("[{}]", items.join(","))
}

pub fn table_csv(t: &KostkaFoulkesTable) -> Result<String, Failure> {
    let mut rows = vec![vec!["mu".to_string(), "lambda".into(), "coefficients".into()]];
    for e in &t.by_mu_lambda {
        rows.push(vec![e.mu.to_string(), e.lambda.to_string(), coefficient_list(&e.coefficients)]);
    }
    csv_string(rows)
}

pub fn table_text(t: &KostkaFoulkesTable) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "Kostka-Foulkes table for n = {} (rows: mu, columns: lambda, coefficients of q^0, q^1, ...)",
        t.n
    );
    let mut rows = vec![std::iter::once("mu \\ lambda".to_string())
        .chain(t.shapes.iter().map(|l| format!("({l})")))
        .collect::<Vec<_>>()];
    for mu in &t.shapes {
        rows.push(
            std::iter::once(format!("({mu})"))
                .chain(t.shapes.iter().map(|l| coefficient_list(t.get(mu, l).unwrap_or(&[]))))
                .collect(),
        );
    }
    out.push_str(&pad_table(&rows));
    let _ = writeln!(out, "convention: {}", t.convention);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficient_lists() {
        assert_eq!(coefficient_list(&[]), "[0]");
        assert_eq!(coefficient_list(&[0, 1, 1]), "[0,1,1]");
    }

    #[test]
    fn padded_columns_align() {
        let rows = vec![
            vec!["a".to_string(), "bb".into()],
            vec!["ccc".to_string(), "d".into()],
        ];
        assert_eq!(pad_table(&rows), "    a  bb\n  ccc   d\n");
    }
}
