//! Edge-colorings of complete graphs and their balance accounting.
//!
//! An [`EdgeColoring`] assigns one of `ell` colors (numbered `1..=ell`) to
//! every unordered pair of distinct vertices of `K_n`. Vertices are 1-based
//! in the public API, matching the usual labelling of such colorings; the
//! dense square table kept internally uses 0 as the diagonal sentinel.
//! Values are immutable after construction, so colorings can be shared
//! freely across worker threads.

use crate::error::{Error, Result};

/// A total, symmetric edge-coloring of the complete graph on `n` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    n: usize,
    ell: u32,
    /// Row-major `n * n` table; entry `(i, j)` is the color of `{i+1, j+1}`,
    /// diagonal entries are 0.
    colors: Vec<u32>,
}

impl EdgeColoring {
    /// Validates and stores an `n x n` color matrix.
    ///
    /// The matrix must be symmetric with a zero diagonal and off-diagonal
    /// entries in `1..=ell`. Invalid input is rejected, never repaired.
    pub fn new(n: usize, ell: u32, entries: &[Vec<u32>]) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        if ell == 0 {
            return Err(Error::NoColors);
        }
        if entries.len() != n {
            return Err(Error::ShapeMismatch {
                n,
                rows: entries.len(),
                cols: entries.first().map_or(0, Vec::len),
                bad_row: 0,
            });
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::ShapeMismatch {
                    n,
                    rows: entries.len(),
                    cols: row.len(),
                    bad_row: i + 1,
                });
            }
        }
        let mut colors = vec![0u32; n * n];
        for i in 0..n {
            let diag = entries[i][i];
            if diag != 0 {
                return Err(Error::BadDiagonal {
                    i: i + 1,
                    value: diag,
                });
            }
            for j in (i + 1)..n {
                let a = entries[i][j];
                let b = entries[j][i];
                if a != b {
                    return Err(Error::AsymmetricMatrix {
                        i: i + 1,
                        j: j + 1,
                        a,
                        b,
                    });
                }
                if a == 0 || a > ell {
                    return Err(Error::ColorOutOfRange {
                        i: i + 1,
                        j: j + 1,
                        color: a,
                        ell,
                    });
                }
                colors[i * n + j] = a;
                colors[j * n + i] = a;
            }
        }
        Ok(EdgeColoring { n, ell, colors })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    /// Number of edges of the host `K_n`.
    pub fn edge_count(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    /// Color of the edge `{u, v}` with 1-based vertices. Symmetric in `u, v`.
    pub fn color_of(&self, u: usize, v: usize) -> Result<u32> {
        if u == 0 || u > self.n {
            return Err(Error::VertexOutOfRange { v: u, n: self.n });
        }
        if v == 0 || v > self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        if u == v {
            return Err(Error::SelfLoop { v: u });
        }
        Ok(self.colors[(u - 1) * self.n + (v - 1)])
    }

    /// Unchecked 0-based lookup for scan loops.
    #[inline(always)]
    pub(crate) fn color_at(&self, i: usize, j: usize) -> u32 {
        debug_assert!(i < self.n && j < self.n && i != j);
        self.colors[i * self.n + j]
    }

    pub(crate) fn raw(&self) -> &[u32] {
        &self.colors
    }

    pub(crate) fn from_raw(n: usize, ell: u32, colors: Vec<u32>) -> Self {
        debug_assert_eq!(colors.len(), n * n);
        EdgeColoring { n, ell, colors }
    }

    /// The full color matrix, diagonal zeros included (the inverse of
    /// [`EdgeColoring::new`]).
    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.n)
            .map(|i| self.colors[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    /// Per-vertex, per-color incidence counts.
    pub fn balance_profile(&self) -> BalanceProfile {
        let n = self.n;
        let ell = self.ell as usize;
        let mut counts = vec![0u32; n * ell];
        for i in 0..n {
            for j in (i + 1)..n {
                let c = (self.colors[i * n + j] - 1) as usize;
                counts[i * ell + c] += 1;
                counts[j * ell + c] += 1;
            }
        }
        let uniform_t = if n >= 1 && (n - 1) % ell == 0 {
            let t = ((n - 1) / ell) as u32;
            if counts.iter().all(|&c| c == t) {
                Some(t)
            } else {
                None
            }
        } else {
            None
        };
        BalanceProfile {
            n,
            ell: self.ell,
            counts,
            uniform_t,
        }
    }

    /// True iff every vertex is incident to each color exactly `(n-1)/ell`
    /// times.
    pub fn is_balanced(&self) -> bool {
        self.balance_profile().uniform_t().is_some()
    }

    /// Parses the whitespace matrix format: line 1 is `<n> <ell>`, lines
    /// `2..=n+1` hold the `n x n` color matrix with zero diagonal.
    pub fn parse_matrix_text(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty input".into()))?;
        let mut head = header.split_whitespace();
        let n: usize = head
            .next()
            .ok_or_else(|| Error::Parse("missing vertex count in header".into()))?
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex count in header {header:?}")))?;
        let ell: u32 = head
            .next()
            .ok_or_else(|| Error::Parse("missing color count in header".into()))?
            .parse()
            .map_err(|_| Error::Parse(format!("bad color count in header {header:?}")))?;
        if head.next().is_some() {
            return Err(Error::Parse(format!("trailing tokens in header {header:?}")));
        }
        let mut rows = Vec::with_capacity(n);
        for (idx, line) in lines.by_ref().take(n).enumerate() {
            let row: Vec<u32> = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad entry {tok:?} in row {}", idx + 2)))
                })
                .collect::<Result<_>>()?;
            rows.push(row);
        }
        if rows.len() != n {
            return Err(Error::Parse(format!(
                "expected {n} matrix rows, found {}",
                rows.len()
            )));
        }
        if lines.any(|l| !l.trim().is_empty()) {
            return Err(Error::Parse("trailing content after matrix".into()));
        }
        EdgeColoring::new(n, ell, &rows)
    }

    /// Writes the whitespace matrix format (LF line endings, single spaces).
    pub fn to_matrix_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{} {}\n", self.n, self.ell));
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n)
                .map(|j| self.colors[i * self.n + j].to_string())
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Incidence counts of an [`EdgeColoring`]: `count(v, c)` is the number of
/// edges at vertex `v` carrying color `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalanceProfile {
    n: usize,
    ell: u32,
    counts: Vec<u32>,
    uniform_t: Option<u32>,
}

impl BalanceProfile {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    /// 1-based vertex and color.
    pub fn count(&self, v: usize, c: u32) -> u32 {
        assert!(v >= 1 && v <= self.n, "vertex {v} out of range");
        assert!(c >= 1 && c <= self.ell, "color {c} out of range");
        self.counts[(v - 1) * self.ell as usize + (c - 1) as usize]
    }

    /// Counts for one vertex, indexed by color - 1.
    pub fn row(&self, v: usize) -> &[u32] {
        assert!(v >= 1 && v <= self.n, "vertex {v} out of range");
        let ell = self.ell as usize;
        &self.counts[(v - 1) * ell..v * ell]
    }

    /// `Some((n-1)/ell)` iff every entry equals that value.
    pub fn uniform_t(&self) -> Option<u32> {
        self.uniform_t
    }

    /// Vertices (1-based) whose counts deviate from `(n-1)/ell` somewhere;
    /// empty when the divisibility `ell | n-1` fails to even define a target.
    pub fn unbalanced_vertices(&self) -> Vec<usize> {
        if (self.n - 1) % self.ell as usize != 0 {
            return (1..=self.n).collect();
        }
        let t = ((self.n - 1) / self.ell as usize) as u32;
        (1..=self.n)
            .filter(|&v| self.row(v).iter().any(|&c| c != t))
            .collect()
    }
}
