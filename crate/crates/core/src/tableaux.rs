//! Partitions and standard Young tableaux in the French convention: rows are
//! numbered from the bottom, row lengths weakly decrease bottom to top, and
//! columns increase bottom to top.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

pub const MAX_PARTITION_N: usize = 30;
pub const MAX_SYT_N: usize = 10;

/// Weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Partition> {
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        if !decreasing || parts.contains(&0) {
            return Err(Error::InvalidPartition);
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Partition {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The partitioned integer.
    pub fn sum(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0) as usize;
        let parts = (0..cols)
            .map(|c| self.parts.iter().filter(|&&p| p as usize > c).count() as u32)
            .collect();
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of `n`, largest part first: `(3), (2,1), (1,1,1)`.
pub fn partitions(n: usize) -> Result<Vec<Partition>> {
    if n > MAX_PARTITION_N {
        return Err(Error::BoundExceeded {
            what: "partition size",
            got: n,
            max: MAX_PARTITION_N,
        });
    }
    fn rec(remaining: u32, cap: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: stack.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(cap)).rev() {
            stack.push(part);
            rec(remaining - part, part, stack, out);
            stack.pop();
        }
    }
    let mut out = Vec::new();
    rec(n as u32, n as u32, &mut Vec::new(), &mut out);
    Ok(out)
}

/// A standard Young tableau. `rows[0]` is the bottom row; entries `1..=n`
/// increase along rows and up columns.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Syt {
    rows: Vec<Vec<u32>>,
}

impl Syt {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Syt> {
        let n: usize = rows.iter().map(|r| r.len()).sum();
        let shape_ok =
            rows.windows(2).all(|w| w[0].len() >= w[1].len()) && rows.iter().all(|r| !r.is_empty());
        if !shape_ok {
            return Err(Error::InvalidTableau(
                "row lengths must weakly decrease upward".into(),
            ));
        }
        let mut seen = vec![false; n + 1];
        for row in &rows {
            for &e in row {
                if e == 0 || e as usize > n || seen[e as usize] {
                    return Err(Error::InvalidTableau(format!("bad entry {e}")));
                }
                seen[e as usize] = true;
            }
        }
        for row in &rows {
            if !row.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::InvalidTableau(
                    "rows must increase left to right".into(),
                ));
            }
        }
        for r in 1..rows.len() {
            for (upper, lower) in rows[r].iter().zip(rows[r - 1].iter()) {
                if lower >= upper {
                    return Err(Error::InvalidTableau(
                        "columns must increase bottom to top".into(),
                    ));
                }
            }
        }
        Ok(Syt { rows })
    }

    pub fn n(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// Rows bottom-up.
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition {
            parts: self.rows.iter().map(|r| r.len() as u32).collect(),
        }
    }

    /// 0-based (row, column) of each entry, indexed by entry value.
    fn positions(&self) -> Vec<(usize, usize)> {
        let mut pos = vec![(0, 0); self.n() + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                pos[e as usize] = (r, c);
            }
        }
        pos
    }

    /// `{i : i+1 sits in a higher row than i}`, rows numbered bottom-up.
    pub fn descent_set(&self) -> BTreeSet<u32> {
        let pos = self.positions();
        (1..self.n() as u32)
            .filter(|&i| pos[i as usize + 1].0 > pos[i as usize].0)
            .collect()
    }

    /// `profile[i]` = number of rows with exactly `i` cells, for `i = 0..=n`
    /// (`profile[0]` is always zero).
    pub fn row_profile(&self) -> Vec<usize> {
        let mut profile = vec![0; self.n() + 1];
        for row in &self.rows {
            profile[row.len()] += 1;
        }
        profile
    }

    /// Per-entry indices `(sigma_1..sigma_n)` and their product.
    ///
    /// With `T_i` the restriction to entries `<= i`: an entry in the first
    /// column gets `i - col_1(T_i) + 1`; an entry in column `k+1` gets
    /// `col_k(T_i) - col_{k+1}(T_i) + 1`.
    pub fn g_index(&self) -> (Vec<u64>, u64) {
        let pos = self.positions();
        let cols = self.rows.first().map_or(0, |r| r.len());
        let mut colsize = vec![0u64; cols];
        let mut sigmas = Vec::with_capacity(self.n());
        let mut product = 1u64;
        for (i, &(_, c)) in pos.iter().enumerate().skip(1) {
            colsize[c] += 1;
            let sigma = if c == 0 {
                i as u64 - colsize[0] + 1
            } else {
                colsize[c - 1] - colsize[c] + 1
            };
            sigmas.push(sigma);
            product *= sigma;
        }
        (sigmas, product)
    }

    /// JSON form: list of rows, bottom row first.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::from(self.rows.clone())
    }
}

impl fmt::Display for Syt {
    /// One row per line, bottom row last.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate().rev() {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            f.write_str(&cells.join(" "))?;
            if i > 0 {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

/// All standard Young tableaux of one shape, by depth-first growth.
pub fn syt_of_shape(shape: &Partition) -> Vec<Syt> {
    let parts = shape.parts();
    let n = shape.sum();
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); parts.len()];
    let mut out = Vec::new();
    fn rec(entry: u32, n: u32, parts: &[u32], rows: &mut Vec<Vec<u32>>, out: &mut Vec<Syt>) {
        if entry > n {
            out.push(Syt { rows: rows.clone() });
            return;
        }
        for r in 0..parts.len() {
            let len = rows[r].len();
            let fits = len < parts[r] as usize && (r == 0 || len < rows[r - 1].len());
            if fits {
                rows[r].push(entry);
                rec(entry + 1, n, parts, rows, out);
                rows[r].pop();
            }
        }
    }
    rec(1, n, parts, &mut rows, &mut out);
    out
}

/// All tableaux with `n` cells, grouped by shape in partition order,
/// optionally restricted to shapes with at most `max_columns` columns.
pub fn enumerate_syt(n: usize, max_columns: Option<usize>) -> Result<Vec<Syt>> {
    if n > MAX_SYT_N {
        return Err(Error::BoundExceeded {
            what: "tableau size",
            got: n,
            max: MAX_SYT_N,
        });
    }
    let mut out = Vec::new();
    for shape in partitions(n)? {
        if let Some(k) = max_columns {
            if shape.parts().first().copied().unwrap_or(0) as usize > k {
                continue;
            }
        }
        out.extend(syt_of_shape(&shape));
    }
    Ok(out)
}
