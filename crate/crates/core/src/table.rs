//! Census tables with byte-stable CSV and JSON export.
//!
//! Two layouts cover every table the library emits: a 2-D grid indexed by
//! a pair of composition parts (the `xi`, `alpha`, and forest
//! distributions), and a keyed list indexed by partitions (the
//! triangulation type census). Grid tables store every in-range cell
//! explicitly, zeros included; the keyed census lists exactly the types
//! that occur. Every table carries the Fuss-Catalan number that its cells
//! must sum to as a checksum total.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::combinatorics::{fuss_catalan, Composition, Count, Partition};
use crate::counting::{alpha, count_forests, count_forests_total, xi, ColorSeq};
use crate::error::Error;

/// Cell storage for a census table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableLayout {
    /// Dense 2-D grid: every `(row, col)` in range is present.
    Grid {
        row_name: String,
        col_name: String,
        rows: Vec<u64>,
        cols: Vec<u64>,
        cells: BTreeMap<(u64, u64), Count>,
    },
    /// Partition-keyed rows, in descending lexicographic key order.
    Keyed {
        key_name: String,
        entries: Vec<(Vec<u64>, Count)>,
    },
}

/// A fully populated census table plus its checksum total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub formula: String,
    pub params: BTreeMap<String, String>,
    pub layout: TableLayout,
    pub total: Count,
}

impl CountTable {
    /// Sum of all stored cells; equal to `total` whenever the generating
    /// formula is transcribed correctly.
    pub fn cells_sum(&self) -> Count {
        match &self.layout {
            TableLayout::Grid { cells, .. } => cells.values().sum(),
            TableLayout::Keyed { entries, .. } => entries.iter().map(|(_, c)| c).sum(),
        }
    }

    /// Grid cell accessor (zero-default would mask shape bugs, so absent
    /// cells are an error for callers).
    pub fn cell(&self, row: u64, col: u64) -> Option<&Count> {
        match &self.layout {
            TableLayout::Grid { cells, .. } => cells.get(&(row, col)),
            TableLayout::Keyed { .. } => None,
        }
    }

    /// CSV rendering: for grids, a header row of column indices, one line
    /// per row, then a trailing `total` line. For keyed tables, a
    /// `key,count` header and one line per key.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        match &self.layout {
            TableLayout::Grid {
                row_name,
                col_name,
                rows,
                cols,
                cells,
            } => {
                out.push_str(&format!("{row_name}\\{col_name}"));
                for c in cols {
                    out.push_str(&format!(",{c}"));
                }
                out.push('\n');
                for r in rows {
                    out.push_str(&r.to_string());
                    for c in cols {
                        out.push_str(&format!(",{}", cells[&(*r, *c)]));
                    }
                    out.push('\n');
                }
            }
            TableLayout::Keyed { key_name, entries } => {
                out.push_str(&format!("{key_name},count\n"));
                for (key, count) in entries {
                    let key_text = key
                        .iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(",");
                    out.push_str(&format!("\"({key_text})\",{count}\n"));
                }
            }
        }
        out.push_str(&format!("total,{}\n", self.total));
        out
    }

    /// JSON rendering: axes plus the explicit cell map, counts as decimal
    /// strings (they exceed 64 bits early).
    pub fn to_json(&self) -> serde_json::Value {
        let cells: Vec<serde_json::Value> = match &self.layout {
            TableLayout::Grid { cells, .. } => cells
                .iter()
                .map(|(&(r, c), v)| serde_json::json!({"index": [r, c], "count": v.to_string()}))
                .collect(),
            TableLayout::Keyed { entries, .. } => entries
                .iter()
                .map(|(k, v)| serde_json::json!({"index": k, "count": v.to_string()}))
                .collect(),
        };
        let axes = match &self.layout {
            TableLayout::Grid {
                row_name,
                col_name,
                rows,
                cols,
                ..
            } => serde_json::json!([
                {"name": row_name, "indices": rows},
                {"name": col_name, "indices": cols},
            ]),
            TableLayout::Keyed { key_name, .. } => serde_json::json!([{"name": key_name}]),
        };
        serde_json::json!({
            "formula": self.formula,
            "params": self.params,
            "axes": axes,
            "cells": cells,
            "total": self.total.to_string(),
        })
    }
}

/// The `xi_n` distribution table for `p = 2`: rows and columns
/// `0..floor(n/2)` (the support range), explicit zeros elsewhere, total
/// `A_n(2,1)`.
pub fn table_xi(n: u64) -> Result<CountTable, Error> {
    if n == 0 {
        return Err(Error::invalid("xi tables need n >= 1"));
    }
    let hi = n / 2;
    let indices: Vec<u64> = (0..=hi).collect();
    let mut cells = BTreeMap::new();
    for &r in &indices {
        for &c in &indices {
            let value = if r + c < n {
                xi(n, &Composition::new(vec![r, c]).unwrap())?
            } else {
                Count::zero()
            };
            cells.insert((r, c), value);
        }
    }
    let mut params = BTreeMap::new();
    params.insert("n".to_string(), n.to_string());
    params.insert("p".to_string(), "2".to_string());
    Ok(CountTable {
        formula: "xi".to_string(),
        params,
        layout: TableLayout::Grid {
            row_name: "nu1".to_string(),
            col_name: "nu2".to_string(),
            rows: indices.clone(),
            cols: indices,
            cells,
        },
        total: fuss_catalan(n, 2, 1).unwrap(),
    })
}

/// The `alpha_n(rho, .)` distribution table for `p = 2`: rows and columns
/// `0..floor((|rho| + n - rho_2) / 2)`, explicit zeros outside the domain,
/// total `A_n(2, 2|rho|)`.
pub fn table_alpha(n: u64, rho: &Partition) -> Result<CountTable, Error> {
    if rho.k() != 3 {
        return Err(Error::ColorCountMismatch {
            expected: 3,
            got: rho.k(),
        });
    }
    let ell = rho.total();
    if ell == 0 {
        return Err(Error::invalid("alpha tables need |rho| >= 1"));
    }
    let hi = (ell + n - rho.part(2)) / 2;
    let indices: Vec<u64> = (0..=hi).collect();
    let mut cells = BTreeMap::new();
    for &r in &indices {
        for &c in &indices {
            let value = if r + c <= n {
                alpha(n, rho, &Composition::new(vec![r, c]).unwrap())?
            } else {
                Count::zero()
            };
            cells.insert((r, c), value);
        }
    }
    let mut params = BTreeMap::new();
    params.insert("n".to_string(), n.to_string());
    params.insert("rho".to_string(), rho.to_string());
    Ok(CountTable {
        formula: "alpha".to_string(),
        params,
        layout: TableLayout::Grid {
            row_name: "mu1".to_string(),
            col_name: "mu2".to_string(),
            rows: indices.clone(),
            cols: indices,
            cells,
        },
        total: fuss_catalan(n, 2, 2 * ell).unwrap(),
    })
}

/// Distribution of 3-colored forest counts over characters of weight `n`,
/// for a fixed root color sequence: cell `(l1, l2)` counts forests of
/// character `(l1, l2, n - l1 - l2)`. Total is the closed-form count of
/// all such forests.
pub fn table_forest(n: u64, roots: &ColorSeq) -> Result<CountTable, Error> {
    if roots.k() != 3 {
        return Err(Error::ColorCountMismatch {
            expected: 3,
            got: roots.k(),
        });
    }
    if n == 0 || roots.is_empty() {
        return Err(Error::invalid("forest tables need n >= 1 and m >= 1"));
    }
    let indices: Vec<u64> = (0..=n).collect();
    let mut cells = BTreeMap::new();
    for &r in &indices {
        for &c in &indices {
            let value = if r + c <= n {
                let lambda = Composition::new(vec![r, c, n - r - c]).unwrap();
                count_forests(&lambda, roots)?
            } else {
                Count::zero()
            };
            cells.insert((r, c), value);
        }
    }
    let mut params = BTreeMap::new();
    params.insert("n".to_string(), n.to_string());
    params.insert("roots".to_string(), roots.to_string());
    Ok(CountTable {
        formula: "forest".to_string(),
        params,
        layout: TableLayout::Grid {
            row_name: "lambda1".to_string(),
            col_name: "lambda2".to_string(),
            rows: indices.clone(),
            cols: indices,
            cells,
        },
        total: count_forests_total(n, 3, roots.len() as u64)?,
    })
}
