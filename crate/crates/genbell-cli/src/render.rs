//! Output formatting: tables and sequences in the supported formats.
//! Every renderer is deterministic byte-for-byte.

use clap::ValueEnum;
use genbell::{Colouring, Family, LabelledEulerianDigraph, Natural, Triangle};
use serde_json::json;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
    Markdown,
    Text,
    Dot,
}

fn corner_label(family: &Family) -> String {
    match family {
        Family::GenStirling { r, s } => format!("S_{{{r},{s}}}(n,k)"),
        Family::CliqueCounts { .. } => "C(n,k)".to_string(),
        Family::Lah => "L(n,k)".to_string(),
    }
}

fn family_json(family: &Family) -> serde_json::Value {
    match family {
        Family::GenStirling { r, s } => json!({"r": r, "s": s}),
        Family::CliqueCounts { sizes } => json!({"sizes": sizes}),
        Family::Lah => json!("lah"),
    }
}

/// Renders a triangle as a grid with empty out-of-range cells, or as JSON
/// rows that omit absent keys. Dot is not a table format.
pub fn render_table(t: &Triangle, format: OutputFormat) -> Result<String, String> {
    let (k_lo, k_hi) = t.k_span().expect("triangle rows are non-empty");
    let cell = |n: u32, k: u32| t.value(n, k).map(Natural::to_string).unwrap_or_default();
    match format {
        OutputFormat::Csv => {
            let mut out = String::from("n");
            for k in k_lo..=k_hi {
                out.push_str(&format!(",{k}"));
            }
            out.push('\n');
            for n in 1..=t.n_max() {
                out.push_str(&n.to_string());
                for k in k_lo..=k_hi {
                    out.push(',');
                    out.push_str(&cell(n, k));
                }
                out.push('\n');
            }
            Ok(out)
        }
        OutputFormat::Markdown => {
            let mut out = format!("| {} |", corner_label(t.family()));
            for k in k_lo..=k_hi {
                out.push_str(&format!(" {k} |"));
            }
            out.push('\n');
            out.push_str("| ---:");
            for _ in k_lo..=k_hi {
                out.push_str(" | ---:");
            }
            out.push_str(" |\n");
            for n in 1..=t.n_max() {
                out.push_str(&format!("| {n} |"));
                for k in k_lo..=k_hi {
                    out.push_str(&format!(" {} |", cell(n, k)));
                }
                out.push('\n');
            }
            Ok(out)
        }
        OutputFormat::Text => {
            let mut out = String::from("n\\k");
            for k in k_lo..=k_hi {
                out.push_str(&format!("\t{k}"));
            }
            out.push('\n');
            for n in 1..=t.n_max() {
                let mut line = n.to_string();
                for k in k_lo..=k_hi {
                    line.push('\t');
                    line.push_str(&cell(n, k));
                }
                out.push_str(line.trim_end_matches('\t'));
                out.push('\n');
            }
            Ok(out)
        }
        OutputFormat::Json => {
            let rows: Vec<serde_json::Value> = (1..=t.n_max())
                .map(|n| {
                    let cells: serde_json::Map<String, serde_json::Value> = t
                        .row(n)
                        .map(|(k, v)| (k.to_string(), json!(v.to_string())))
                        .collect();
                    json!({"n": n, "cells": cells})
                })
                .collect();
            let doc = json!({
                "family": family_json(t.family()),
                "n_max": t.n_max(),
                "rows": rows,
            });
            Ok(format!("{doc}\n"))
        }
        OutputFormat::Dot => Err("dot output applies only to digraph enumeration".into()),
    }
}

/// Renders the Bell sequence B(1..=n_max) for the uniform family m.
pub fn render_bell(m: u32, values: &[Natural], format: OutputFormat) -> Result<String, String> {
    match format {
        OutputFormat::Text => {
            let joined: Vec<String> = values.iter().map(Natural::to_string).collect();
            Ok(format!("{}\n", joined.join(", ")))
        }
        OutputFormat::Csv => {
            let mut out = String::from("n,value\n");
            for (i, v) in values.iter().enumerate() {
                out.push_str(&format!("{},{v}\n", i + 1));
            }
            Ok(out)
        }
        OutputFormat::Markdown => {
            let mut out = format!("| n | B_{{{m},{m}}}(n) |\n| ---: | ---: |\n");
            for (i, v) in values.iter().enumerate() {
                out.push_str(&format!("| {} | {v} |\n", i + 1));
            }
            Ok(out)
        }
        OutputFormat::Json => {
            let vals: Vec<String> = values.iter().map(Natural::to_string).collect();
            let doc = json!({"m": m, "n_max": values.len(), "values": vals});
            Ok(format!("{doc}\n"))
        }
        OutputFormat::Dot => Err("dot output applies only to digraph enumeration".into()),
    }
}

/// One streamed line for a colouring.
pub fn colouring_line(c: &Colouring, format: OutputFormat) -> Result<String, String> {
    match format {
        OutputFormat::Text => Ok(format!("{c}\n")),
        OutputFormat::Json => {
            Ok(format!("{}\n", serde_json::to_string(c).expect("serializable")))
        }
        _ => Err("colourings stream as text or json".into()),
    }
}

/// One streamed line for a digraph (text/json); dot bodies are produced
/// separately, one block per digraph.
pub fn digraph_line(d: &LabelledEulerianDigraph, format: OutputFormat) -> Result<String, String> {
    match format {
        OutputFormat::Text => {
            let cycles: Vec<String> = d
                .cycles
                .iter()
                .map(|c| {
                    c.iter()
                        .map(|e| e.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect();
            Ok(format!("k={}: {}\n", d.vertex_count, cycles.join(" | ")))
        }
        OutputFormat::Json => {
            Ok(format!("{}\n", serde_json::to_string(d).expect("serializable")))
        }
        OutputFormat::Dot => Ok(d.to_dot()),
        _ => Err("digraphs stream as text, json, or dot".into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_table_has_empty_out_of_range_cells() {
        let t = Triangle::gen_stirling(3, 3, 2).unwrap();
        let csv = render_table(&t, OutputFormat::Csv).unwrap();
        assert_eq!(csv, "n,3,4,5,6\n1,1,,,\n2,6,18,9,1\n");
    }

    #[test]
    fn markdown_table_matches_published_layout() {
        let t = Triangle::gen_stirling(2, 1, 3).unwrap();
        let md = render_table(&t, OutputFormat::Markdown).unwrap();
        assert_eq!(
            md,
            "| S_{2,1}(n,k) | 1 | 2 | 3 |\n\
             | ---: | ---: | ---: | ---: |\n\
             | 1 | 1 |  |  |\n\
             | 2 | 2 | 1 |  |\n\
             | 3 | 6 | 6 | 1 |\n"
        );
    }

    #[test]
    fn json_table_omits_absent_cells() {
        let t = Triangle::gen_stirling(1, 1, 2).unwrap();
        let doc: serde_json::Value =
            serde_json::from_str(&render_table(&t, OutputFormat::Json).unwrap()).unwrap();
        assert_eq!(doc["rows"][0]["cells"], json!({"1": "1"}));
        assert_eq!(doc["rows"][1]["cells"], json!({"1": "1", "2": "1"}));
    }

    #[test]
    fn dot_rejected_for_tables() {
        let t = Triangle::lah_rows(2);
        assert!(render_table(&t, OutputFormat::Dot).is_err());
    }

    #[test]
    fn bell_text_line() {
        let values: Vec<Natural> = [1u32, 34, 2971, 513559]
            .iter()
            .map(|&v| Natural::from(v))
            .collect();
        assert_eq!(
            render_bell(3, &values, OutputFormat::Text).unwrap(),
            "1, 34, 2971, 513559\n"
        );
    }
}
