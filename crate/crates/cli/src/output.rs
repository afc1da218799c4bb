use std::fs;

use clap::ValueEnum;
use serde_json::{json, Value};

use brunnian_core::generators::{listing, listing_json};
use brunnian_core::verify::CheckReport;
use brunnian_core::{Alphabet, LieMonomial};

use crate::Failure;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
    Latex,
}

/// Write to the given path, or to stdout.
pub fn emit(text: &str, path: Option<&str>) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("cannot write {p}: {e}"))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

pub fn json_line(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn csv_table(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::CRLF)
        .from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("UTF-8 fields")
}

/// `[A[1,3],A[2,3]]` as `[A_{1,3},A_{2,3}]`.
fn latex_monomial(text: &str) -> String {
    let mut out = String::with_capacity(text.len() + 8);
    let mut in_index = false;
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            'A' if chars.peek() == Some(&'[') => {
                chars.next();
                out.push_str("A_{");
                in_index = true;
            }
            ']' if in_index => {
                out.push('}');
                in_index = false;
            }
            _ => out.push(c),
        }
    }
    out
}

fn latex_escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '_' | '{' | '}' | '#' | '%' | '&' => {
                out.push('\\');
                out.push(c);
            }
            '^' => out.push_str("\\^{}"),
            _ => out.push(c),
        }
    }
    out
}

pub fn generators(monomials: &[LieMonomial], alphabet: &Alphabet, format: Format) -> String {
    match format {
        Format::Text => listing(monomials, alphabet),
        Format::Json => json_line(&listing_json(monomials, alphabet)),
        Format::Csv => csv_table(
            &["degree", "monomial"],
            monomials
                .iter()
                .map(|m| vec![m.degree().to_string(), m.to_text(alphabet)])
                .collect(),
        ),
        Format::Latex => {
            let mut s = String::from("\\begin{tabular}{r|l}\ndegree & monomial \\\\\n\\hline\n");
            for m in monomials {
                s.push_str(&format!(
                    "{} & ${}$ \\\\\n",
                    m.degree(),
                    latex_monomial(&m.to_text(alphabet))
                ));
            }
            s.push_str("\\end{tabular}\n");
            s
        }
    }
}

pub fn reports(reports: &[CheckReport], format: Format) -> String {
    let passed = reports.iter().filter(|r| r.passed()).count();
    let status = if passed == reports.len() { "pass" } else { "fail" };
    match format {
        Format::Text => {
            let mut s: String = reports.iter().map(CheckReport::to_text).collect();
            s.push_str(&format!("{passed}/{} checks passed\n", reports.len()));
            s
        }
        Format::Json => json_line(&json!({
            "status": status,
            "reports": reports.iter().map(CheckReport::to_json).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut rows = Vec::new();
            for r in reports {
                let k = r.k.map(|k| k.to_string()).unwrap_or_default();
                for d in &r.details {
                    rows.push(vec![
                        r.check.clone(),
                        r.n.to_string(),
                        r.q_max.to_string(),
                        k.clone(),
                        d.degree.to_string(),
                        d.item.clone(),
                        d.observed.to_string(),
                        d.expected.to_string(),
                        d.ok.to_string(),
                    ]);
                }
            }
            csv_table(
                &[
                    "check", "n", "q_max", "k", "degree", "item", "observed", "expected", "ok",
                ],
                rows,
            )
        }
        Format::Latex => {
            let mut s =
                String::from("\\begin{tabular}{l|r|l|r|r}\ncheck & $q$ & item & observed & expected \\\\\n\\hline\n");
            for r in reports {
                for d in &r.details {
                    s.push_str(&format!(
                        "{} & {} & {} & {} & {} \\\\\n",
                        r.check,
                        d.degree,
                        latex_escape(&d.item),
                        d.observed,
                        d.expected
                    ));
                }
            }
            s.push_str("\\end{tabular}\n");
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn latex_subscripts() {
        assert_eq!(
            latex_monomial("[[A[3,4],A[1,4]],A[2,4]]"),
            "[[A_{3,4},A_{1,4}],A_{2,4}]"
        );
        assert_eq!(latex_monomial("A[1,2]"), "A_{1,2}");
    }

    #[test]
    fn latex_escapes_items() {
        assert_eq!(latex_escape("d^j d_{i+1}"), "d\\^{}j d\\_\\{i+1\\}");
    }

    #[test]
    fn csv_quotes_commas() {
        let s = csv_table(
            &["degree", "monomial"],
            vec![vec!["2".into(), "[A[1,3],A[2,3]]".into()]],
        );
        assert_eq!(s, "degree,monomial\r\n2,\"[A[1,3],A[2,3]]\"\r\n");
    }
}
