//! The ten reference tables, regenerated from the engine, and the printed
//! values they are compared against.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Deserialize;
use serde_json::{json, Value};

use crate::combinatorics::Count;
use crate::enumeration::{a_nr, b_nr, c_values, e_rank, e_total, exi_rank, exi_total, Method};
use crate::error::{Error, Result};
use crate::family::MonoidFamily;
use crate::idempotent::TwistOrder;

const PUBLISHED: &str = include_str!("../data/published_tables.json");
const KNOWN_DISCREPANCIES: &str = include_str!("../data/known_discrepancies.json");

/// Largest `n` the table command accepts.
pub const MAX_N_LIMIT: usize = 12;

/// One cell of a printed table. `col` is `c0`, `c1`, `c`, `e` or `exi` for
/// the first three tables and the rank `r` elsewhere.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct PublishedCell {
    pub n: usize,
    pub col: String,
    pub value: String,
}

/// A printed cell known to disagree with the recomputed value.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct Discrepancy {
    pub table: u8,
    pub n: usize,
    pub col: String,
    pub printed: String,
    pub computed: String,
}

#[derive(Deserialize)]
struct PublishedFile {
    tables: BTreeMap<String, Vec<PublishedCell>>,
}

/// Printed cells of table `id`.
pub fn published(id: u8) -> Vec<PublishedCell> {
    let file: PublishedFile = serde_json::from_str(PUBLISHED).expect("bundled table data");
    file.tables
        .get(&id.to_string())
        .cloned()
        .unwrap_or_default()
}

/// The bundled discrepancy list.
pub fn known_discrepancies() -> Vec<Discrepancy> {
    parse_discrepancies(KNOWN_DISCREPANCIES).expect("bundled discrepancy data")
}

pub fn parse_discrepancies(json: &str) -> Result<Vec<Discrepancy>> {
    serde_json::from_str(json).map_err(|e| Error::Parse(format!("discrepancy list: {e}")))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub n: usize,
    /// `None` for cells left blank (rank above `n`, or wrong parity).
    pub cells: Vec<Option<Count>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub id: u8,
    pub title: String,
    /// Display headers, one per cell column.
    pub headers: Vec<String>,
    /// Keys matching [`PublishedCell::col`], one per cell column.
    pub keys: Vec<String>,
    pub rows: Vec<TableRow>,
    pub footnotes: Vec<String>,
}

fn family_of(id: u8) -> MonoidFamily {
    match id {
        1 | 4 | 5 | 6 | 9 => MonoidFamily::B,
        2 | 7 => MonoidFamily::PB,
        _ => MonoidFamily::P,
    }
}

fn title_of(id: u8) -> &'static str {
    match id {
        1 => "c-values, e and e^xi (M = 0) for B_n",
        2 => "c-values, e and e^xi (M = 0) for PB_n",
        3 => "c-values, e and e^xi (M = 0) for P_n",
        4 => "e(D_r(B_n))",
        5 => "idempotents per R-class of D_r(B_n)",
        6 => "twisted (M = 0) idempotents per R-class of D_r(B_n)",
        7 => "e(D_r(PB_n))",
        8 => "e(D_r(P_n))",
        9 => "e^xi(D_r(B_n)) with M = 0",
        _ => "e^xi(D_r(P_n)) with M = 0",
    }
}

/// Regenerates table `id` (1 to 10) for `0 <= n <= max_n`.
pub fn build_table(id: u8, max_n: usize) -> Result<Table> {
    if !(1..=10).contains(&id) {
        return Err(Error::Domain(format!(
            "unknown table {id}; expected 1 to 10"
        )));
    }
    if max_n > MAX_N_LIMIT {
        return Err(Error::Domain(format!(
            "max n {max_n} exceeds the limit {MAX_N_LIMIT}"
        )));
    }
    let f = family_of(id);
    let m0 = TwistOrder::new(0);
    let (headers, keys, rows) = if id <= 3 {
        let name = f.name();
        let headers = vec![
            format!("c_0({name}_n)"),
            format!("c_1({name}_n)"),
            format!("c({name}_n)"),
            format!("e({name}_n)"),
            format!("e^xi({name}_n)"),
        ];
        let keys = ["c0", "c1", "c", "e", "exi"].map(String::from).to_vec();
        let mut rows = Vec::new();
        for n in 0..=max_n {
            let mut cells = if n == 0 {
                vec![None, None, None]
            } else {
                let c = c_values(f, n)?;
                vec![Some(c.c0), Some(c.c1), Some(c.c)]
            };
            cells.push(Some(e_total(f, n, Method::Recurrence)?));
            cells.push(Some(exi_total(f, n, m0)?));
            rows.push(TableRow { n, cells });
        }
        (headers, keys, rows)
    } else {
        let headers: Vec<String> = (0..=max_n).map(|r| r.to_string()).collect();
        let parity_blank = matches!(id, 4 | 5 | 6 | 9);
        let mut rows = Vec::new();
        for n in 0..=max_n {
            let mut cells = Vec::with_capacity(max_n + 1);
            for r in 0..=max_n {
                if r > n || (parity_blank && (n - r) % 2 == 1) {
                    cells.push(None);
                    continue;
                }
                let v = match id {
                    4 | 7 | 8 => e_rank(f, n, r, Method::Recurrence)?,
                    5 => a_nr(n, r)?,
                    6 => b_nr(n, r)?,
                    _ => exi_rank(f, n, r, m0, Method::Recurrence)?,
                };
                cells.push(Some(v));
            }
            rows.push(TableRow { n, cells });
        }
        (headers.clone(), headers, rows)
    };
    Ok(Table {
        id,
        title: title_of(id).to_string(),
        headers,
        keys,
        rows,
        footnotes: Vec::new(),
    })
}

/// Result of comparing one computed cell with its printed counterpart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CellStatus {
    Match,
    /// Listed as a known misprint; the recomputed value is the listed one.
    KnownDiscrepancy {
        printed: String,
    },
    Mismatch {
        printed: String,
        computed: String,
    },
    /// Printed but blank here, or vice versa.
    Missing,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellCheck {
    pub table: u8,
    pub n: usize,
    pub col: String,
    pub status: CellStatus,
}

impl Table {
    fn cell(&self, n: usize, col: &str) -> Option<&Count> {
        let row = self.rows.iter().find(|r| r.n == n)?;
        let j = self.keys.iter().position(|k| k == col)?;
        row.cells[j].as_ref()
    }

    /// Compares every printed cell within range with the regenerated one.
    /// Computed cells with no printed value (beyond the printed range) are
    /// not reported; blank/non-blank mismatches within it are.
    pub fn compare(&self, discrepancies: &[Discrepancy]) -> Vec<CellCheck> {
        let max_n = self.rows.last().map(|r| r.n).unwrap_or(0);
        let printed = published(self.id);
        let mut out = Vec::new();
        for p in printed.iter().filter(|p| p.n <= max_n) {
            let status = match self.cell(p.n, &p.col) {
                None => CellStatus::Missing,
                Some(v) => {
                    let computed = v.to_string();
                    let known = discrepancies.iter().find(|d| {
                        d.table == self.id && d.n == p.n && d.col == p.col && d.printed == p.value
                    });
                    if computed == p.value {
                        CellStatus::Match
                    } else if known.is_some_and(|d| d.computed == computed) {
                        CellStatus::KnownDiscrepancy {
                            printed: p.value.clone(),
                        }
                    } else {
                        CellStatus::Mismatch {
                            printed: p.value.clone(),
                            computed,
                        }
                    }
                }
            };
            out.push(CellCheck {
                table: self.id,
                n: p.n,
                col: p.col.clone(),
                status,
            });
        }
        for row in self.rows.iter().filter(|r| r.n <= 10) {
            for (j, cell) in row.cells.iter().enumerate() {
                let key = &self.keys[j];
                if cell.is_some() && !printed.iter().any(|p| p.n == row.n && &p.col == key) {
                    out.push(CellCheck {
                        table: self.id,
                        n: row.n,
                        col: key.clone(),
                        status: CellStatus::Missing,
                    });
                }
            }
        }
        out
    }

    /// Adds a footnote for every known discrepancy found by [`Table::compare`].
    pub fn annotate(&mut self, discrepancies: &[Discrepancy]) {
        let notes: Vec<String> = self
            .compare(discrepancies)
            .into_iter()
            .filter_map(|c| match c.status {
                CellStatus::KnownDiscrepancy { printed } => Some(format!(
                    "known discrepancy at n={}, {}: printed {}, recomputed {}",
                    c.n,
                    self.column_label(&c.col),
                    printed,
                    self.cell(c.n, &c.col)
                        .map(|v| v.to_string())
                        .unwrap_or_default()
                )),
                _ => None,
            })
            .collect();
        self.footnotes = notes;
    }

    fn column_label(&self, col: &str) -> String {
        match self.keys.iter().position(|k| k == col) {
            Some(j) if self.id <= 3 => self.headers[j].clone(),
            _ => format!("r={col}"),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("n");
        for h in &self.headers {
            s.push(',');
            s.push_str(h);
        }
        s.push('\n');
        for row in &self.rows {
            s.push_str(&row.n.to_string());
            for c in &row.cells {
                s.push(',');
                if let Some(v) = c {
                    s.push_str(&v.to_string());
                }
            }
            s.push('\n');
        }
        s
    }

    pub fn to_markdown(&self) -> String {
        let mut s = format!("Table {}: {}\n\n| n |", self.id, self.title);
        for h in &self.headers {
            let _ = write!(s, " {h} |");
        }
        s.push_str("\n|---|");
        s.push_str(&"---:|".repeat(self.headers.len()));
        s.push('\n');
        for row in &self.rows {
            let _ = write!(s, "| {} |", row.n);
            for c in &row.cells {
                match c {
                    Some(v) => {
                        let _ = write!(s, " {v} |");
                    }
                    None => s.push_str("  |"),
                }
            }
            s.push('\n');
        }
        for note in &self.footnotes {
            let _ = write!(s, "\n* {note}\n");
        }
        s
    }

    /// JSON with every count as a decimal string and blanks as `null`.
    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                let cells: Vec<Value> = r
                    .cells
                    .iter()
                    .map(|c| {
                        c.as_ref()
                            .map_or(Value::Null, |v| Value::String(v.to_string()))
                    })
                    .collect();
                json!({ "n": r.n, "cells": cells })
            })
            .collect();
        json!({
            "table": self.id,
            "title": self.title,
            "columns": self.headers,
            "rows": rows,
            "footnotes": self.footnotes,
        })
    }
}
