//! Partitions, compositions, generalized compositions and diagram coordinates.
//!
//! Cells are `(row, col)` with both indices starting at 1, rows counted
//! downward. Lattice points `⟨i, j⟩` sit on the `i`-th horizontal line
//! (0 = top edge) and the `j`-th vertical line (0 = left edge), so the cell
//! `(r, c)` has corners `⟨r-1, c-1⟩` and `⟨r, c⟩`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LatticePoint {
    pub row: usize,
    pub col: usize,
}

impl LatticePoint {
    pub const fn new(row: usize, col: usize) -> Self {
        LatticePoint { row, col }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{},{}>", self.row, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `r` (1-based); zero past the last row.
    pub fn row_len(&self, r: usize) -> usize {
        if r == 0 {
            return 0;
        }
        self.parts.get(r - 1).copied().unwrap_or(0)
    }

    /// Length of column `c` (1-based); zero past the last column.
    pub fn col_len(&self, c: usize) -> usize {
        if c == 0 {
            return 0;
        }
        self.parts.iter().take_while(|&&p| p >= c).count()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    /// Cells of the Young diagram in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 1..=len {
                out.push(Cell::new(r + 1, c));
            }
        }
        out
    }

    /// Cells in column-major order (columns left to right, each top to bottom).
    pub fn cells_column_major(&self) -> Vec<Cell> {
        let width = self.row_len(1);
        let mut out = Vec::with_capacity(self.size());
        for c in 1..=width {
            for r in 1..=self.col_len(c) {
                out.push(Cell::new(r, c));
            }
        }
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.parts)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    write!(f, "(")?;
    for (k, p) in parts.iter().enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, ")")
}

/// All partitions of `n`, in reverse lexicographic order (`(n)` first).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(parts));
        }
        Ok(Composition { parts })
    }

    pub fn empty() -> Self {
        Composition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `set(α)`: the partial sums, excluding the total.
    pub fn set(&self) -> BTreeSet<usize> {
        let mut acc = 0;
        let mut out = BTreeSet::new();
        for &p in self.parts.iter().take(self.parts.len().saturating_sub(1)) {
            acc += p;
            out.insert(acc);
        }
        out
    }

    /// `comp(I)` for `I ⊆ [1, n-1]`.
    pub fn from_set(set: &BTreeSet<usize>, n: usize) -> Result<Self> {
        if n == 0 {
            return match set.iter().next() {
                Some(&v) => Err(Error::OutOfRange { value: v, bound: 0 }),
                None => Ok(Composition::empty()),
            };
        }
        let mut parts = Vec::with_capacity(set.len() + 1);
        let mut prev = 0;
        for &i in set {
            if i == 0 || i >= n {
                return Err(Error::OutOfRange {
                    value: i,
                    bound: n - 1,
                });
            }
            parts.push(i - prev);
            prev = i;
        }
        parts.push(n - prev);
        Ok(Composition { parts })
    }

    /// `α^c`, whose set is `[1, n-1] \ set(α)`.
    pub fn complement(&self) -> Self {
        let n = self.size();
        if n == 0 {
            return Composition::empty();
        }
        let set = self.set();
        let comp: BTreeSet<usize> = (1..n).filter(|i| !set.contains(i)).collect();
        Composition::from_set(&comp, n).expect("complement stays in range")
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Composition { parts }
    }

    /// Near-concatenation: the last part of `self` merges with the first of `other`.
    pub fn near_concat(&self, other: &Composition) -> Composition {
        if self.is_empty() || other.is_empty() {
            return self.concat(other);
        }
        let mut parts = self.parts.clone();
        *parts.last_mut().unwrap() += other.parts[0];
        parts.extend_from_slice(&other.parts[1..]);
        Composition { parts }
    }
}

/// Canonical order: by size, then length, then lexicographically.
impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then(self.len().cmp(&other.len()))
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.parts
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.parts)
    }
}

/// All `2^{n-1}` compositions of `n` in canonical order.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::empty()];
    }
    let mut out: Vec<Composition> = (0u64..1 << (n - 1))
        .map(|mask| {
            let set: BTreeSet<usize> = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            Composition::from_set(&set, n).unwrap()
        })
        .collect();
    out.sort();
    out
}

/// A formal sum `α^{(1)} ⊕ … ⊕ α^{(k)}` of nonempty compositions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Composition>", into = "Vec<Composition>")]
pub struct GeneralizedComposition {
    blocks: Vec<Composition>,
}

impl GeneralizedComposition {
    pub fn new(blocks: Vec<Composition>) -> Result<Self> {
        if blocks.is_empty() || blocks.iter().any(Composition::is_empty) {
            return Err(Error::InvalidGeneralizedComposition);
        }
        Ok(GeneralizedComposition { blocks })
    }

    pub fn single(block: Composition) -> Result<Self> {
        Self::new(vec![block])
    }

    pub fn blocks(&self) -> &[Composition] {
        &self.blocks
    }

    pub fn size(&self) -> usize {
        self.blocks.iter().map(Composition::size).sum()
    }

    /// Column heights of the ribbon diagram, left to right.
    pub fn columns(&self) -> Vec<usize> {
        self.blocks
            .iter()
            .flat_map(|b| b.parts().iter().copied())
            .collect()
    }

    /// `𝛂_•`
    pub fn bullet(&self) -> Composition {
        self.blocks
            .iter()
            .fold(Composition::empty(), |acc, b| acc.concat(b))
    }

    /// `𝛂_⊙`
    pub fn odot(&self) -> Composition {
        let mut it = self.blocks.iter();
        let first = it.next().unwrap().clone();
        it.fold(first, |acc, b| acc.near_concat(b))
    }

    /// `[𝛂]`: every way of joining consecutive blocks by `·` or `⊙`, sorted.
    pub fn bracket(&self) -> Vec<Composition> {
        let k = self.blocks.len();
        let mut out: Vec<Composition> = (0u64..1 << (k - 1))
            .map(|mask| {
                let mut acc = self.blocks[0].clone();
                for (b, block) in self.blocks.iter().enumerate().skip(1) {
                    acc = if mask >> (b - 1) & 1 == 1 {
                        acc.near_concat(block)
                    } else {
                        acc.concat(block)
                    };
                }
                acc
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// `𝛂 · β`: concatenate `β` onto the last block.
    pub fn append(&self, beta: &Composition) -> GeneralizedComposition {
        let mut blocks = self.blocks.clone();
        let last = blocks.pop().unwrap();
        blocks.push(last.concat(beta));
        GeneralizedComposition { blocks }
    }

    /// `𝛂 ⊕ β`
    pub fn push_block(&self, beta: Composition) -> Result<GeneralizedComposition> {
        let mut blocks = self.blocks.clone();
        blocks.push(beta);
        GeneralizedComposition::new(blocks)
    }

    /// `𝛂^c`: blockwise complement.
    pub fn complement(&self) -> GeneralizedComposition {
        GeneralizedComposition {
            blocks: self.blocks.iter().map(Composition::complement).collect(),
        }
    }

    /// Cells of the ribbon diagram `trd(𝛂)`, grouped by column (left to
    /// right), each column listed top to bottom.
    pub fn ribbon_columns(&self) -> Vec<Vec<Cell>> {
        // Heights measured upward from the bottom row of the first block.
        let mut spans = Vec::new();
        let mut next_bottom = 0usize;
        for block in &self.blocks {
            let mut bottom = next_bottom;
            for (k, &h) in block.parts().iter().enumerate() {
                if k > 0 {
                    let (_, prev_top) = *spans.last().unwrap();
                    bottom = prev_top;
                }
                spans.push((bottom, bottom + h - 1));
            }
            next_bottom = spans.last().unwrap().1 + 1;
        }
        let top = spans.iter().map(|&(_, t)| t).max().unwrap_or(0);
        spans
            .iter()
            .enumerate()
            .map(|(c, &(lo, hi))| {
                (lo..=hi)
                    .rev()
                    .map(|y| Cell::new(top - y + 1, c + 1))
                    .collect()
            })
            .collect()
    }

    /// Cells of `trd(𝛂)` in row-major order.
    pub fn ribbon_cells(&self) -> Vec<Cell> {
        let mut cells: Vec<Cell> = self.ribbon_columns().into_iter().flatten().collect();
        cells.sort();
        cells
    }
}

impl TryFrom<Vec<Composition>> for GeneralizedComposition {
    type Error = Error;
    fn try_from(blocks: Vec<Composition>) -> Result<Self> {
        GeneralizedComposition::new(blocks)
    }
}

impl From<GeneralizedComposition> for Vec<Composition> {
    fn from(g: GeneralizedComposition) -> Self {
        g.blocks
    }
}

impl fmt::Display for GeneralizedComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, b) in self.blocks.iter().enumerate() {
            if k > 0 {
                write!(f, "⊕")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn compositions_small() {
        assert_eq!(compositions_of(0), vec![Composition::empty()]);
        assert_eq!(compositions_of(2), vec![comp(&[2]), comp(&[1, 1])]);
        assert_eq!(compositions_of(4).len(), 8);
    }

    #[test]
    fn set_and_comp() {
        assert_eq!(comp(&[1, 2, 1]).set(), set(&[1, 3]));
        assert!(comp(&[5]).set().is_empty());
        assert_eq!(comp(&[1, 1, 1, 1]).set(), set(&[1, 2, 3]));
        assert_eq!(
            Composition::from_set(&set(&[1, 3]), 4).unwrap(),
            comp(&[1, 2, 1])
        );
        assert_eq!(Composition::from_set(&set(&[]), 5).unwrap(), comp(&[5]));
        assert_eq!(Composition::from_set(&set(&[2]), 4).unwrap(), comp(&[2, 2]));
        assert!(Composition::from_set(&set(&[4]), 4).is_err());
    }

    #[test]
    fn complements() {
        assert_eq!(comp(&[2, 2]).complement(), comp(&[1, 2, 1]));
        assert_eq!(comp(&[3]).complement(), comp(&[1, 1, 1]));
        assert_eq!(comp(&[1, 1, 1]).complement(), comp(&[3]));
    }

    #[test]
    fn generalized_operations() {
        let g = GeneralizedComposition::new(vec![comp(&[2, 1]), comp(&[1, 1])]).unwrap();
        assert_eq!(g.bullet(), comp(&[2, 1, 1, 1]));
        assert_eq!(g.odot(), comp(&[2, 2, 1]));
        assert_eq!(g.bracket(), vec![comp(&[2, 2, 1]), comp(&[2, 1, 1, 1])]);
        let single = GeneralizedComposition::single(comp(&[3])).unwrap();
        assert_eq!(single.bracket(), vec![comp(&[3])]);
        let h = GeneralizedComposition::new(vec![comp(&[1, 1, 2]), comp(&[1])]).unwrap();
        assert_eq!(
            h.append(&comp(&[1])),
            GeneralizedComposition::new(vec![comp(&[1, 1, 2]), comp(&[1, 1])]).unwrap()
        );
    }

    #[test]
    fn ribbon_of_two_blocks() {
        let g = GeneralizedComposition::new(vec![comp(&[2, 1]), comp(&[1, 1])]).unwrap();
        let cells = g.ribbon_cells();
        let expected = vec![
            Cell::new(1, 3),
            Cell::new(1, 4),
            Cell::new(2, 1),
            Cell::new(2, 2),
            Cell::new(3, 1),
        ];
        assert_eq!(cells, expected);
    }

    #[test]
    fn ribbon_shapes() {
        let one = GeneralizedComposition::single(comp(&[1])).unwrap();
        assert_eq!(one.ribbon_cells(), vec![Cell::new(1, 1)]);
        let g = GeneralizedComposition::single(comp(&[2, 2])).unwrap();
        assert_eq!(
            g.ribbon_cells(),
            vec![
                Cell::new(1, 2),
                Cell::new(2, 1),
                Cell::new(2, 2),
                Cell::new(3, 1)
            ]
        );
        let h = GeneralizedComposition::new(vec![comp(&[1, 1, 2]), comp(&[1, 1])]).unwrap();
        assert_eq!(
            h.ribbon_columns(),
            vec![
                vec![Cell::new(3, 1)],
                vec![Cell::new(3, 2)],
                vec![Cell::new(2, 3), Cell::new(3, 3)],
                vec![Cell::new(1, 4)],
                vec![Cell::new(1, 5)],
            ]
        );
    }

    #[test]
    fn partitions_count() {
        let counts: Vec<usize> = (0..=8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        let p = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(p.col_len(1), 2);
        assert_eq!(p.col_len(3), 1);
        assert!(Partition::new(vec![1, 2]).is_err());
    }
}
