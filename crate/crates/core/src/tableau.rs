//! Increasing gapless tableaux (IGLT).

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{Cell, Composition, Partition};
use crate::error::{Error, Result};

/// An entry lookup extended past the diagram: `+∞` to the right of or below
/// the diagram inside the positive quadrant, `−∞` on row 0 / column 0 and beyond.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Entry {
    NegInf,
    Val(usize),
    PosInf,
}

impl Entry {
    pub fn lt(self, i: usize) -> bool {
        self < Entry::Val(i)
    }

    pub fn ge(self, i: usize) -> bool {
        self >= Entry::Val(i)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTableau", into = "RawTableau")]
pub struct Iglt {
    shape: Partition,
    rows: Vec<Vec<usize>>,
    max: usize,
}

/// The JSON form `{"shape": [...], "rows": [[...], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RawTableau {
    pub shape: Vec<usize>,
    pub rows: Vec<Vec<usize>>,
}

impl TryFrom<RawTableau> for Iglt {
    type Error = Error;
    fn try_from(raw: RawTableau) -> Result<Self> {
        Iglt::validate(&Partition::new(raw.shape)?, raw.rows)
    }
}

impl From<Iglt> for RawTableau {
    fn from(t: Iglt) -> Self {
        RawTableau {
            shape: t.shape.parts().to_vec(),
            rows: t.rows,
        }
    }
}

impl Iglt {
    pub fn validate(shape: &Partition, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() != shape.len() || rows.iter().zip(shape.parts()).any(|(r, &l)| r.len() != l) {
            return Err(Error::ShapeMismatch(shape.parts().to_vec()));
        }
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                let bad_left = c > 0 && row[c - 1] >= v;
                let bad_up = r > 0 && rows[r - 1][c] >= v;
                if v == 0 || bad_left || bad_up {
                    return Err(Error::NotIncreasing(Cell::new(r + 1, c + 1)));
                }
            }
        }
        let max = rows.iter().flatten().copied().max().unwrap_or(0);
        let present: BTreeSet<usize> = rows.iter().flatten().copied().collect();
        if let Some(gap) = (1..=max).find(|v| !present.contains(v)) {
            return Err(Error::GapAt(gap));
        }
        Ok(Iglt {
            shape: shape.clone(),
            rows,
            max,
        })
    }

    /// Parses `rows` and infers the shape from the row lengths.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        Iglt::validate(&shape, rows)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn max_entry(&self) -> usize {
        self.max
    }

    /// Row-major reading word.
    pub fn word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn get(&self, cell: Cell) -> Option<usize> {
        if cell.row == 0 || cell.col == 0 {
            return None;
        }
        self.rows.get(cell.row - 1)?.get(cell.col - 1).copied()
    }

    pub fn at(&self, cell: Cell) -> usize {
        self.rows[cell.row - 1][cell.col - 1]
    }

    /// The three-valued lookup used by lattice-path conditions.
    pub fn entry(&self, row: isize, col: isize) -> Entry {
        if row <= 0 || col <= 0 {
            return Entry::NegInf;
        }
        match self.get(Cell::new(row as usize, col as usize)) {
            Some(v) => Entry::Val(v),
            None => Entry::PosInf,
        }
    }

    /// `T⁻¹(i)`, in row-major order.
    pub fn cells_of(&self, i: usize) -> Vec<Cell> {
        self.shape
            .cells()
            .into_iter()
            .filter(|&c| self.at(c) == i)
            .collect()
    }

    /// `Top_i(T)`: the box holding `i` in the highest row.
    pub fn top_box(&self, i: usize) -> Result<Cell> {
        self.cells_of(i)
            .first()
            .copied()
            .ok_or(Error::ValueAbsent(i))
    }

    /// `Bot_i(T)`: the box holding `i` in the lowest row.
    pub fn bot_box(&self, i: usize) -> Result<Cell> {
        self.cells_of(i)
            .last()
            .copied()
            .ok_or(Error::ValueAbsent(i))
    }

    /// `i ∈ Des(T)` iff `r_t^{(i)} < r_b^{(i+1)}`.
    pub fn is_descent(&self, i: usize) -> bool {
        match (self.top_box(i), self.bot_box(i + 1)) {
            (Ok(t), Ok(b)) => t.row < b.row,
            _ => false,
        }
    }

    pub fn descents(&self) -> BTreeSet<usize> {
        (1..self.max).filter(|&i| self.is_descent(i)).collect()
    }

    pub fn descent_composition(&self) -> Composition {
        Composition::from_set(&self.descents(), self.max).expect("descents lie in [1, m-1]")
    }

    /// A descent `i` is attacking when some `i` sits directly above an `i+1`,
    /// or some `i+1` lies weakly above `Bot_i(T)`.
    pub fn is_attacking_descent(&self, i: usize) -> bool {
        if !self.is_descent(i) {
            return false;
        }
        let cells_i = self.cells_of(i);
        let cells_next = self.cells_of(i + 1);
        let vertical = cells_i
            .iter()
            .any(|c| self.get(Cell::new(c.row + 1, c.col)) == Some(i + 1));
        let bot_row = cells_i.last().unwrap().row;
        vertical || cells_next.iter().any(|c| c.row <= bot_row)
    }

    /// `𝓘(T)`: the values occurring more than once.
    pub fn multi_support(&self) -> BTreeSet<usize> {
        let mut counts = vec![0usize; self.max + 1];
        for &v in self.rows.iter().flatten() {
            counts[v] += 1;
        }
        (1..=self.max).filter(|&v| counts[v] > 1).collect()
    }

    /// `s_i · T`: every `i` becomes `i+1` and vice versa.
    pub fn swap_values(&self, i: usize) -> Vec<Vec<usize>> {
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&v| match v {
                        v if v == i => i + 1,
                        v if v == i + 1 => i,
                        v => v,
                    })
                    .collect()
            })
            .collect()
    }

    /// The result of `π_i`: `None` for zero, otherwise the image.
    pub fn pi(&self, i: usize) -> Option<Iglt> {
        if !self.is_descent(i) {
            Some(self.clone())
        } else if self.is_attacking_descent(i) {
            None
        } else {
            let rows = self.swap_values(i);
            Some(Iglt {
                shape: self.shape.clone(),
                rows,
                max: self.max,
            })
        }
    }
}

/// Tableaux of one shape compare by their row-major words.
impl Ord for Iglt {
    fn cmp(&self, other: &Self) -> Ordering {
        self.shape
            .cmp(&other.shape)
            .then_with(|| self.word().cmp(&other.word()))
    }
}

impl PartialOrd for Iglt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Iglt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.max.to_string().len();
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// `IGLT(λ; m)` in canonical (row-major word) order.
pub fn enumerate_iglt(shape: &Partition, m: usize) -> Vec<Iglt> {
    let cells = shape.cells();
    let n = cells.len();
    let rows: Vec<Vec<usize>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
    let counts = vec![0usize; m + 1];
    let out = Vec::new();
    if m == 0 || m > n {
        return out;
    }

    struct Search<'a> {
        cells: &'a [Cell],
        m: usize,
        shape: &'a Partition,
        rows: Vec<Vec<usize>>,
        counts: Vec<usize>,
        out: Vec<Iglt>,
    }

    impl Search<'_> {
        /// Fills cells from `k` on; `missing` values have not been used yet.
        fn rec(&mut self, k: usize, missing: usize) {
            if missing > self.cells.len() - k {
                return;
            }
            if k == self.cells.len() {
                self.out.push(Iglt {
                    shape: self.shape.clone(),
                    rows: self.rows.clone(),
                    max: self.m,
                });
                return;
            }
            let Cell { row, col } = self.cells[k];
            let left = if col > 1 {
                self.rows[row - 1][col - 2]
            } else {
                0
            };
            let up = if row > 1 {
                self.rows[row - 2][col - 1]
            } else {
                0
            };
            for v in left.max(up) + 1..=self.m {
                self.rows[row - 1][col - 1] = v;
                self.counts[v] += 1;
                let missing_now = if self.counts[v] == 1 {
                    missing - 1
                } else {
                    missing
                };
                self.rec(k + 1, missing_now);
                self.counts[v] -= 1;
            }
            self.rows[row - 1][col - 1] = 0;
        }
    }

    let mut search = Search {
        cells: &cells,
        m,
        shape,
        rows,
        counts,
        out,
    };
    search.rec(0, m);
    search.out
}

/// `IGLT(λ)` across every `m`, ordered by `m` then canonically.
pub fn enumerate_all_iglt(shape: &Partition) -> Vec<Iglt> {
    (1..=shape.size())
        .flat_map(|m| enumerate_iglt(shape, m))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn t(rows: &[&[usize]]) -> Iglt {
        Iglt::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        let a = t(&[&[1, 2], &[2, 3]]);
        assert_eq!(a.max_entry(), 3);
        assert_eq!(t(&[&[1]]).max_entry(), 1);
        let bad = Iglt::validate(&part(&[2, 2]), vec![vec![1, 3], vec![2, 2]]);
        assert!(matches!(bad, Err(Error::NotIncreasing(c)) if c.row == 2));
        assert_eq!(Iglt::from_rows(vec![vec![1, 3]]), Err(Error::GapAt(2)));
        assert!(matches!(
            Iglt::validate(&part(&[2, 1]), vec![vec![1, 2]]),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn enumeration_22() {
        let s = part(&[2, 2]);
        assert_eq!(enumerate_iglt(&s, 3), vec![t(&[&[1, 2], &[2, 3]])]);
        assert_eq!(
            enumerate_iglt(&s, 4),
            vec![t(&[&[1, 2], &[3, 4]]), t(&[&[1, 3], &[2, 4]])]
        );
        assert!(enumerate_iglt(&s, 2).is_empty());
    }

    #[test]
    fn enumeration_211() {
        let s = part(&[2, 1, 1]);
        assert_eq!(enumerate_iglt(&s, 3).len(), 2);
        assert_eq!(enumerate_iglt(&s, 4).len(), 3);
        assert_eq!(enumerate_all_iglt(&s).len(), 5);
        assert!(enumerate_iglt(&part(&[2]), 1).is_empty());
    }

    #[test]
    fn boxes_and_descents() {
        let a = t(&[&[1, 2], &[2, 3]]);
        assert_eq!(a.top_box(2).unwrap(), Cell::new(1, 2));
        assert_eq!(a.bot_box(2).unwrap(), Cell::new(2, 1));
        assert_eq!(a.multi_support(), BTreeSet::from([2]));

        let b = t(&[&[1, 2], &[3], &[4]]);
        assert_eq!(b.descents(), BTreeSet::from([2, 3]));
        assert_eq!(b.descent_composition().parts(), &[2, 1, 1]);
        assert!(b.is_attacking_descent(3));
        assert!(!b.is_attacking_descent(2));
        assert!(!b.is_attacking_descent(1));

        let c = t(&[&[1, 2], &[2], &[3]]);
        assert_eq!(c.descents(), BTreeSet::from([1, 2]));
        assert_eq!(c.descent_composition().parts(), &[1, 1, 1]);

        let row = t(&[&[1, 2, 3, 4]]);
        assert!(row.descents().is_empty());
        assert_eq!(row.descent_composition().parts(), &[4]);
    }

    #[test]
    fn des_table_211() {
        let cases: [(&[&[usize]], &[usize]); 5] = [
            (&[&[1, 2], &[3], &[4]], &[2, 3]),
            (&[&[1, 3], &[2], &[4]], &[1, 3]),
            (&[&[1, 4], &[2], &[3]], &[1, 2]),
            (&[&[1, 2], &[2], &[3]], &[1, 2]),
            (&[&[1, 3], &[2], &[3]], &[1, 2]),
        ];
        for (rows, des) in cases {
            let d: Vec<usize> = t(rows).descents().into_iter().collect();
            assert_eq!(d, des.to_vec());
        }
    }

    #[test]
    fn entry_lookup() {
        let a = t(&[&[1, 2], &[2]]);
        assert_eq!(a.entry(0, 1), Entry::NegInf);
        assert_eq!(a.entry(1, 0), Entry::NegInf);
        assert_eq!(a.entry(2, 1), Entry::Val(2));
        assert_eq!(a.entry(2, 2), Entry::PosInf);
        assert_eq!(a.entry(5, 5), Entry::PosInf);
    }

    #[test]
    fn json_round_trip() {
        let a = t(&[&[1, 2], &[2, 3]]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"shape":[2,2],"rows":[[1,2],[2,3]]}"#);
        let back: Iglt = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<Iglt>(r#"{"shape":[2],"rows":[[2,1]]}"#).is_err());
    }
}
