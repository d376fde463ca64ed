//! Text renderings of triangles and sequences, and the triangle JSON document.
//!
//! Triangle JSON is compact and canonical:
//!
//! ```text
//! {"name":"thm-1-1","ring":"rational","rows":[["1"],["2","6"]]}
//! ```
//!
//! Rational entries are strings in lowest terms. Polynomial entries are arrays
//! of coefficient strings, constant term first (`[]` is zero). An entry with
//! negative powers of `x` is `{"min_degree":-1,"coeffs":["1","0","1"]}`,
//! meaning `x^-1 + x`.

use serde::{Deserialize, Serialize};
use triangle_forge_core::constructions::NamedTriangle;
use triangle_forge_core::numerics::{format_rational, parse_rational};
use triangle_forge_core::{Laurent, Rational, Triangle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Plain,
    Csv,
    Json,
}

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed triangle document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad entry: {0}")]
    Entry(#[from] triangle_forge_core::Error),
    #[error("unknown ring {0:?}")]
    Ring(String),
    #[error("entry does not belong to ring {0:?}")]
    WrongEntry(&'static str),
}

#[derive(Debug, Serialize, Deserialize)]
struct TriangleDoc {
    name: String,
    ring: String,
    rows: Vec<Vec<EntryDoc>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum EntryDoc {
    Rational(String),
    Polynomial(Vec<String>),
    Laurent { min_degree: i64, coeffs: Vec<String> },
}

fn laurent_doc(e: &Laurent) -> EntryDoc {
    let coeffs = e.coeffs().iter().map(format_rational).collect();
    if e.min_degree() >= 0 {
        let mut padded = vec!["0".to_string(); e.min_degree() as usize];
        padded.extend::<Vec<String>>(coeffs);
        EntryDoc::Polynomial(if e.is_zero() { Vec::new() } else { padded })
    } else {
        EntryDoc::Laurent {
            min_degree: e.min_degree(),
            coeffs,
        }
    }
}

fn parse_all(v: &[String]) -> Result<Vec<Rational>, FormatError> {
    Ok(v.iter().map(|s| parse_rational(s)).collect::<Result<_, _>>()?)
}

fn laurent_from_doc(e: &EntryDoc) -> Result<Laurent, FormatError> {
    match e {
        EntryDoc::Polynomial(c) => Ok(Laurent::from_parts(0, parse_all(c)?)),
        EntryDoc::Laurent { min_degree, coeffs } => Ok(Laurent::from_parts(*min_degree, parse_all(coeffs)?)),
        EntryDoc::Rational(_) => Err(FormatError::WrongEntry("polynomial")),
    }
}

pub fn ring_name(t: &NamedTriangle) -> &'static str {
    match t {
        NamedTriangle::Polynomial(_) => "polynomial",
        _ => "rational",
    }
}

pub fn triangle_to_json(name: &str, t: &NamedTriangle) -> String {
    let rat = |rows: &[Vec<Rational>]| -> Vec<Vec<EntryDoc>> {
        rows.iter()
            .map(|r| r.iter().map(|q| EntryDoc::Rational(format_rational(q))).collect())
            .collect()
    };
    let rows = match t {
        NamedTriangle::Rational(t) => rat(t.rows()),
        NamedTriangle::Stretched(rows) => rat(rows),
        NamedTriangle::Polynomial(t) => t.rows().iter().map(|r| r.iter().map(laurent_doc).collect()).collect(),
    };
    let doc = TriangleDoc {
        name: name.to_string(),
        ring: ring_name(t).to_string(),
        rows,
    };
    serde_json::to_string(&doc).expect("string-keyed document serializes")
}

/// Parses a triangle document; rows that do not have the triangle shape come
/// back as [`NamedTriangle::Stretched`].
pub fn triangle_from_json(s: &str) -> Result<(String, NamedTriangle), FormatError> {
    let doc: TriangleDoc = serde_json::from_str(s)?;
    let t = match doc.ring.as_str() {
        "rational" => {
            let rows = doc
                .rows
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|e| match e {
                            EntryDoc::Rational(s) => Ok(parse_rational(s)?),
                            _ => Err(FormatError::WrongEntry("rational")),
                        })
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            match Triangle::from_rows(rows.clone()) {
                Ok(t) => NamedTriangle::Rational(t),
                Err(_) => NamedTriangle::Stretched(rows),
            }
        }
        "polynomial" => {
            let rows = doc
                .rows
                .iter()
                .map(|r| r.iter().map(laurent_from_doc).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()?;
            NamedTriangle::Polynomial(Triangle::from_rows(rows)?)
        }
        other => return Err(FormatError::Ring(other.to_string())),
    };
    Ok((doc.name, t))
}

/// Entry text without spaces, e.g. `4x^2+2`, `x+x^-1`, `3/2`.
pub fn compact_laurent(e: &Laurent) -> String {
    e.to_string().replace(' ', "")
}

fn text_rows(t: &NamedTriangle) -> Vec<Vec<String>> {
    let rat = |rows: &[Vec<Rational>]| -> Vec<Vec<String>> {
        rows.iter().map(|r| r.iter().map(format_rational).collect()).collect()
    };
    match t {
        NamedTriangle::Rational(t) => rat(t.rows()),
        NamedTriangle::Stretched(rows) => rat(rows),
        NamedTriangle::Polynomial(t) => t
            .rows()
            .iter()
            .map(|r| r.iter().map(compact_laurent).collect())
            .collect(),
    }
}

/// Columns right-justified to their widest entry, single-space separated.
pub fn triangle_plain(t: &NamedTriangle) -> String {
    let rows = text_rows(t);
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|j| rows.iter().filter_map(|r| r.get(j)).map(String::len).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for r in &rows {
        let cells: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(j, s)| format!("{s:>w$}", w = widths[j]))
            .collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

pub fn triangle_csv(t: &NamedTriangle) -> String {
    text_rows(t).iter().map(|r| r.join(",") + "\n").collect()
}

pub fn render_triangle(name: &str, t: &NamedTriangle, format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain => triangle_plain(t),
        OutputFormat::Csv => triangle_csv(t),
        OutputFormat::Json => triangle_to_json(name, t) + "\n",
    }
}

#[derive(Serialize)]
struct Term {
    n: usize,
    value: String,
}

pub fn render_sequence(terms: &[(usize, Rational)], format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain => {
            let v: Vec<String> = terms.iter().map(|(_, q)| format_rational(q)).collect();
            v.join(" ") + "\n"
        }
        OutputFormat::Csv => {
            let mut out = String::from("n,value\n");
            for (n, q) in terms {
                out.push_str(&format!("{n},{}\n", format_rational(q)));
            }
            out
        }
        OutputFormat::Json => {
            let v: Vec<Term> = terms
                .iter()
                .map(|(n, q)| Term {
                    n: *n,
                    value: format_rational(q),
                })
                .collect();
            serde_json::to_string(&v).expect("plain records serialize") + "\n"
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use triangle_forge_core::constructions::{named_triangle, TriangleId};

    #[test]
    fn plain_is_right_justified() {
        let t = named_triangle(TriangleId::Thm11, 3).unwrap();
        assert_eq!(triangle_plain(&t), " 1\n 2  6\n16 48 72\n");
    }

    #[test]
    fn seed_row_json() {
        let t = named_triangle(TriangleId::CatalanTri, 1).unwrap();
        assert_eq!(
            triangle_to_json("catalan-ex5", &t),
            r#"{"name":"catalan-ex5","ring":"rational","rows":[["1"]]}"#
        );
    }

    #[test]
    fn polynomial_entries() {
        let t = named_triangle(TriangleId::Thm32Poly, 2).unwrap();
        assert_eq!(
            triangle_to_json("thm-3-2", &t),
            r#"{"name":"thm-3-2","ring":"polynomial","rows":[[["1"]],[["0","1"],{"min_degree":-1,"coeffs":["1"]}]]}"#
        );
        assert_eq!(triangle_plain(&t), "1\nx x^-1\n");
    }

    #[test]
    fn json_round_trips() {
        for id in TriangleId::ALL {
            let t = named_triangle(*id, 7).unwrap();
            let s = triangle_to_json(id.name(), &t);
            let (name, back) = triangle_from_json(&s).unwrap();
            assert_eq!(name, id.name());
            assert_eq!(triangle_to_json(&name, &back), s);
        }
    }

    #[test]
    fn bad_documents() {
        assert!(triangle_from_json("{").is_err());
        assert!(triangle_from_json(r#"{"name":"a","ring":"complex","rows":[]}"#).is_err());
        assert!(triangle_from_json(r#"{"name":"a","ring":"rational","rows":[[["1"]]]}"#).is_err());
        assert!(triangle_from_json(r#"{"name":"a","ring":"rational","rows":[["1/0"]]}"#).is_err());
    }

    #[test]
    fn sequences() {
        let terms: Vec<(usize, Rational)> = (0..3).map(|n| (n, Rational::from_integer((n as i64).into()))).collect();
        assert_eq!(render_sequence(&terms, OutputFormat::Plain), "0 1 2\n");
        assert_eq!(render_sequence(&terms, OutputFormat::Csv), "n,value\n0,0\n1,1\n2,2\n");
        assert_eq!(
            render_sequence(&terms, OutputFormat::Json),
            "[{\"n\":0,\"value\":\"0\"},{\"n\":1,\"value\":\"1\"},{\"n\":2,\"value\":\"2\"}]\n"
        );
    }
}
