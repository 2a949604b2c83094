//! Reports: a human-readable rendering and a JSON machine block built from the
//! same cells, so the two never disagree.

use serde_json::{json, Map, Value};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Block {
    Table {
        columns: Vec<String>,
        rows: Vec<Vec<String>>,
    },
    /// Square integer matrix; `legend[i]` labels row `i` and column `i`.
    Matrix {
        legend: Vec<String>,
        rows: Vec<Vec<i64>>,
    },
    Fields(Vec<(String, String)>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    pub heading: String,
    pub block: Block,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub sections: Vec<Section>,
}

fn width(s: &str) -> usize {
    s.chars().count()
}

fn pad(s: &str, w: usize) -> String {
    format!("{s}{}", " ".repeat(w.saturating_sub(width(s))))
}

fn pad_left(s: &str, w: usize) -> String {
    format!("{}{s}", " ".repeat(w.saturating_sub(width(s))))
}

impl Block {
    pub fn table<S: ToString>(columns: &[S], rows: Vec<Vec<String>>) -> Self {
        Block::Table {
            columns: columns.iter().map(ToString::to_string).collect(),
            rows,
        }
    }

    pub fn fields<K: ToString, V: ToString>(pairs: impl IntoIterator<Item = (K, V)>) -> Self {
        Block::Fields(
            pairs
                .into_iter()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect(),
        )
    }

    fn render(&self) -> Vec<String> {
        match self {
            Block::Table { columns, rows } => {
                let mut w: Vec<usize> = columns.iter().map(|c| width(c)).collect();
                for r in rows {
                    for (k, c) in r.iter().enumerate() {
                        w[k] = w[k].max(width(c));
                    }
                }
                let line = |cells: &[String]| {
                    let padded: Vec<String> =
                        cells.iter().zip(&w).map(|(c, &n)| pad(c, n)).collect();
                    padded.join(" | ").trim_end().to_string()
                };
                let rule: Vec<String> = w.iter().map(|&n| "-".repeat(n)).collect();
                let mut out = vec![line(columns), rule.join("-+-")];
                out.extend(rows.iter().map(|r| line(r)));
                out
            }
            Block::Matrix { legend, rows } => {
                let lw = legend.iter().map(|l| width(l)).max().unwrap_or(0);
                let cw = lw.max(
                    rows.iter()
                        .flatten()
                        .map(|x| x.to_string().len())
                        .max()
                        .unwrap_or(1),
                );
                let mut head = pad("", lw);
                for l in legend {
                    head.push_str("  ");
                    head.push_str(&pad_left(l, cw));
                }
                let mut out = vec![head];
                for (l, r) in legend.iter().zip(rows) {
                    let mut s = pad(l, lw);
                    for x in r {
                        s.push_str("  ");
                        s.push_str(&pad_left(&x.to_string(), cw));
                    }
                    out.push(s);
                }
                out
            }
            Block::Fields(pairs) => {
                let kw = pairs.iter().map(|(k, _)| width(k)).max().unwrap_or(0);
                pairs
                    .iter()
                    .map(|(k, v)| format!("{}  {v}", pad(&format!("{k}:"), kw + 1)))
                    .collect()
            }
        }
    }

    fn machine(&self) -> Value {
        match self {
            Block::Table { columns, rows } => Value::Array(
                rows.iter()
                    .map(|r| {
                        let obj: Map<String, Value> = columns
                            .iter()
                            .zip(r)
                            .map(|(c, v)| (c.clone(), Value::String(v.clone())))
                            .collect();
                        Value::Object(obj)
                    })
                    .collect(),
            ),
            Block::Matrix { legend, rows } => json!({ "basis": legend, "rows": rows }),
            Block::Fields(pairs) => Value::Object(
                pairs
                    .iter()
                    .map(|(k, v)| (k.clone(), Value::String(v.clone())))
                    .collect(),
            ),
        }
    }
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Self {
            title: title.into(),
            sections: Vec::new(),
        }
    }

    pub fn section(mut self, heading: impl Into<String>, block: Block) -> Self {
        self.sections.push(Section {
            heading: heading.into(),
            block,
        });
        self
    }

    pub fn machine(&self) -> Value {
        let sections: Map<String, Value> = self
            .sections
            .iter()
            .map(|s| (s.heading.clone(), s.block.machine()))
            .collect();
        json!({ "title": self.title, "sections": sections })
    }

    pub fn human(&self) -> String {
        let mut out = format!("# {}\n", self.title);
        for s in &self.sections {
            out.push_str(&format!("\n## {}\n", s.heading));
            for line in s.block.render() {
                out.push_str(&line);
                out.push('\n');
            }
        }
        out
    }

    fn machine_text(&self) -> String {
        serde_json::to_string_pretty(&self.machine()).expect("string keys") + "\n"
    }

    /// Human text followed by the machine block, or the machine block alone.
    pub fn render(&self, json_only: bool) -> String {
        if json_only {
            self.machine_text()
        } else {
            format!("{}\n--- machine ---\n{}", self.human(), self.machine_text())
        }
    }
}
