//! Standard ribbon tableaux and the projective modules `P_𝛂`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::combinatorics::{Cell, GeneralizedComposition};
use crate::error::{Error, Result};
use crate::hecke::HeckeModule;
use crate::perm::Permutation;

/// A bijective filling of `trd(𝛂)` by `1..=n`, increasing along rows and
/// down columns. Entries are stored against the row-major cell list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Srt {
    shape: GeneralizedComposition,
    cells: Vec<Cell>,
    values: Vec<usize>,
}

impl Srt {
    /// Checks a filling given as `cell → value` pairs.
    pub fn new(shape: &GeneralizedComposition, filling: &HashMap<Cell, usize>) -> Result<Self> {
        let cells = shape.ribbon_cells();
        if filling.len() != cells.len() {
            return Err(Error::InvalidSrt(
                "filling does not cover the diagram".into(),
            ));
        }
        let mut values = Vec::with_capacity(cells.len());
        for c in &cells {
            match filling.get(c) {
                Some(&v) => values.push(v),
                None => return Err(Error::InvalidSrt(format!("cell {c} is unfilled"))),
            }
        }
        let srt = Srt {
            shape: shape.clone(),
            cells,
            values,
        };
        srt.check()?;
        Ok(srt)
    }

    fn check(&self) -> Result<()> {
        let n = self.values.len();
        let mut seen = vec![false; n + 1];
        for &v in &self.values {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidSrt(format!(
                    "value {v} is repeated or out of range"
                )));
            }
            seen[v] = true;
        }
        for (k, c) in self.cells.iter().enumerate() {
            let v = self.values[k];
            let left = self.get(Cell::new(c.row, c.col.wrapping_sub(1)));
            let up = self.get(Cell::new(c.row.wrapping_sub(1), c.col));
            if left.is_some_and(|l| l > v) || up.is_some_and(|u| u > v) {
                return Err(Error::InvalidSrt(format!("not increasing at {c}")));
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &GeneralizedComposition {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.values.len()
    }

    pub fn get(&self, cell: Cell) -> Option<usize> {
        self.cells.binary_search(&cell).ok().map(|k| self.values[k])
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// Values in row-major cell order.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn cell_of(&self, v: usize) -> Cell {
        self.cells[self
            .values
            .iter()
            .position(|&x| x == v)
            .expect("value present")]
    }

    /// Entries of each column, left to right, each read top to bottom.
    pub fn columns(&self) -> Vec<Vec<usize>> {
        self.shape
            .ribbon_columns()
            .iter()
            .map(|col| col.iter().map(|&c| self.get(c).unwrap()).collect())
            .collect()
    }

    /// Reads rows left to right, starting with the bottom row.
    pub fn lread(&self) -> Permutation {
        let mut order: Vec<usize> = (0..self.cells.len()).collect();
        order.sort_by(|&a, &b| reading_cmp(self.cells[a], self.cells[b]));
        Permutation::new(order.iter().map(|&k| self.values[k]).collect())
            .expect("an SRT reads as a permutation")
    }

    /// The filling whose `lread` is `w`, if it is standard.
    pub fn from_reading(shape: &GeneralizedComposition, w: &Permutation) -> Result<Self> {
        let mut cells = shape.ribbon_cells();
        if w.rank() != cells.len() {
            return Err(Error::InvalidSrt(
                "reading word has the wrong length".into(),
            ));
        }
        cells.sort_by(|&a, &b| reading_cmp(a, b));
        let filling: HashMap<Cell, usize> =
            cells.into_iter().zip(w.word().iter().copied()).collect();
        Srt::new(shape, &filling)
    }

    /// The action of `π_i`: fix if `i` is strictly above `i+1`, zero if they
    /// share a row, swap otherwise.
    pub fn pi(&self, i: usize) -> Option<Srt> {
        let a = self.cell_of(i);
        let b = self.cell_of(i + 1);
        match a.row.cmp(&b.row) {
            Ordering::Less => Some(self.clone()),
            Ordering::Equal => None,
            Ordering::Greater => {
                let mut next = self.clone();
                for v in next.values.iter_mut() {
                    if *v == i {
                        *v = i + 1;
                    } else if *v == i + 1 {
                        *v = i;
                    }
                }
                Some(next)
            }
        }
    }
}

fn reading_cmp(a: Cell, b: Cell) -> Ordering {
    b.row.cmp(&a.row).then(a.col.cmp(&b.col))
}

impl Ord for Srt {
    fn cmp(&self, other: &Self) -> Ordering {
        self.shape
            .cmp(&other.shape)
            .then_with(|| self.values.cmp(&other.values))
    }
}

impl PartialOrd for Srt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Srt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.size().to_string().len();
        let rows = self.cells.last().map_or(0, |c| c.row);
        for r in 1..=rows {
            if r > 1 {
                writeln!(f)?;
            }
            let cols = self
                .cells
                .iter()
                .filter(|c| c.row == r)
                .map(|c| c.col)
                .max()
                .unwrap_or(0);
            let line: Vec<String> = (1..=cols)
                .map(|c| match self.get(Cell::new(r, c)) {
                    Some(v) => format!("{v:>width$}"),
                    None => format!("{:>width$}", "."),
                })
                .collect();
            write!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// `SRT(𝛂)`, sorted by row-major word.
pub fn enumerate_srt(shape: &GeneralizedComposition) -> Vec<Srt> {
    let cells = shape.ribbon_cells();
    let n = cells.len();
    // Predecessors of each cell: its left and upper neighbours inside the diagram.
    let preds: Vec<Vec<usize>> = cells
        .iter()
        .map(|c| {
            [
                Cell::new(c.row, c.col.wrapping_sub(1)),
                Cell::new(c.row.wrapping_sub(1), c.col),
            ]
            .iter()
            .filter_map(|p| cells.binary_search(p).ok())
            .collect()
        })
        .collect();
    let mut values = vec![0usize; n];
    let mut out = Vec::new();

    fn rec(
        v: usize,
        n: usize,
        preds: &[Vec<usize>],
        values: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if v > n {
            out.push(values.clone());
            return;
        }
        for k in 0..n {
            if values[k] == 0 && preds[k].iter().all(|&p| values[p] != 0) {
                values[k] = v;
                rec(v + 1, n, preds, values, out);
                values[k] = 0;
            }
        }
    }

    rec(1, n, &preds, &mut values, &mut out);
    let mut srts: Vec<Srt> = out
        .into_iter()
        .map(|values| Srt {
            shape: shape.clone(),
            cells: cells.clone(),
            values,
        })
        .collect();
    srts.sort();
    srts
}

/// `𝒯_𝛂`: `1..=n` placed column by column, each column top to bottom.
pub fn canonical_srt(shape: &GeneralizedComposition) -> Srt {
    let mut filling = HashMap::new();
    let mut v = 0;
    for col in shape.ribbon_columns() {
        for c in col {
            v += 1;
            filling.insert(c, v);
        }
    }
    Srt::new(shape, &filling).expect("column-major filling is standard")
}

/// `P_𝛂` on `SRT(𝛂)`.
pub fn p_module(shape: &GeneralizedComposition) -> Result<HeckeModule<Srt>> {
    HeckeModule::from_rule(shape.size(), enumerate_srt(shape), |i, s| s.pi(i))
}
