//! Lattice paths attached to repeated values of a tableau.
//!
//! For `i ∈ 𝓘(T)`, `Γ_i(T)` runs from the bottom-left corner of `Bot_i(T)`
//! to the top-right corner of `Top_i(T)` by unit steps up or right. A
//! horizontal step must have an entry `< i` above it and `≥ i` below it; a
//! vertical step must have `< i` on its left and `≥ i` on its right. The
//! extended paths `Γ̃_i` and `Γ̂_i` splice in pieces of other paths.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::combinatorics::{Cell, LatticePoint};
use crate::error::{Error, Result};
use crate::tableau::Iglt;

/// A monotone lattice path, stored bottom-left to top-right. Two paths are
/// equal when their vertex sets are.
#[derive(Debug, Clone, Eq)]
pub struct LatticePath {
    vertices: Vec<LatticePoint>,
}

impl PartialEq for LatticePath {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_set() == other.vertex_set()
    }
}

impl LatticePath {
    /// Orders a vertex set along the path (rows descending, columns ascending).
    pub fn from_set(set: BTreeSet<LatticePoint>) -> Self {
        let mut vertices: Vec<LatticePoint> = set.into_iter().collect();
        vertices.sort_by(|a, b| b.row.cmp(&a.row).then(a.col.cmp(&b.col)));
        LatticePath { vertices }
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn vertex_set(&self) -> BTreeSet<LatticePoint> {
        self.vertices.iter().copied().collect()
    }

    pub fn start(&self) -> LatticePoint {
        self.vertices[0]
    }

    pub fn end(&self) -> LatticePoint {
        *self.vertices.last().unwrap()
    }

    /// Every consecutive pair differs by one step up or one step right.
    pub fn is_staircase(&self) -> bool {
        self.vertices.windows(2).all(|w| {
            let (a, b) = (w[0], w[1]);
            (b.row + 1 == a.row && b.col == a.col) || (b.row == a.row && b.col == a.col + 1)
        })
    }

    fn has_horizontal_edge(set: &BTreeSet<LatticePoint>, row: usize, right_col: usize) -> bool {
        right_col >= 1
            && set.contains(&LatticePoint::new(row, right_col - 1))
            && set.contains(&LatticePoint::new(row, right_col))
    }

    fn has_vertical_edge(set: &BTreeSet<LatticePoint>, lower_row: usize, col: usize) -> bool {
        lower_row >= 1
            && set.contains(&LatticePoint::new(lower_row - 1, col))
            && set.contains(&LatticePoint::new(lower_row, col))
    }

    /// A cell lies below the path when the path has a horizontal edge
    /// somewhere above it in the same column.
    pub fn is_below(&self, cell: Cell) -> bool {
        let set = self.vertex_set();
        (0..cell.row).any(|r| Self::has_horizontal_edge(&set, r, cell.col))
    }

    /// A cell lies right of the path when the path has a vertical edge
    /// somewhere left of it in the same row.
    pub fn is_right_of(&self, cell: Cell) -> bool {
        let set = self.vertex_set();
        (0..cell.col).any(|c| Self::has_vertical_edge(&set, cell.row, c))
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

fn vertical_ok(t: &Iglt, p: LatticePoint, i: usize) -> bool {
    let (r, c) = (p.row as isize, p.col as isize);
    p.row >= 1 && t.entry(r, c).lt(i) && t.entry(r, c + 1).ge(i)
}

fn horizontal_ok(t: &Iglt, p: LatticePoint, i: usize) -> bool {
    let (r, c) = (p.row as isize, p.col as isize);
    t.entry(r, c + 1).lt(i) && t.entry(r + 1, c + 1).ge(i)
}

/// `Γ_i(T)` for `i ∈ 𝓘(T)`.
pub fn gamma(t: &Iglt, i: usize) -> Result<LatticePath> {
    let cells = t.cells_of(i);
    if cells.is_empty() {
        return Err(Error::ValueAbsent(i));
    }
    if cells.len() < 2 {
        return Err(Error::NotMultiValued(i));
    }
    let top = cells[0];
    let bot = *cells.last().unwrap();
    let start = LatticePoint::new(bot.row, bot.col - 1);
    let end = LatticePoint::new(top.row - 1, top.col);
    let mut cur = start;
    let mut vertices = vec![cur];
    while cur != end {
        cur = if cur.row > end.row && vertical_ok(t, cur, i) {
            LatticePoint::new(cur.row - 1, cur.col)
        } else if cur.col < end.col && horizontal_ok(t, cur, i) {
            LatticePoint::new(cur.row, cur.col + 1)
        } else {
            return Err(Error::NoPath(i));
        };
        vertices.push(cur);
    }
    Ok(LatticePath { vertices })
}

/// Row lengths with `λ₀ := λ₁`.
fn row_len_ext(t: &Iglt, r: usize) -> usize {
    t.shape().row_len(r.max(1))
}

/// Column lengths with column 0 as long as column 1.
fn col_len_ext(t: &Iglt, c: usize) -> usize {
    t.shape().col_len(c.max(1))
}

/// `Γ'_j` for the `Γ̃` construction: `Γ_j` with a horizontal run from the
/// left edge into its start and a horizontal run from its end to the end
/// of the row above `Top_j`.
pub fn tilde_prime(t: &Iglt, j: usize) -> Result<BTreeSet<LatticePoint>> {
    let g = gamma(t, j)?;
    let (s, e) = (g.start(), g.end());
    let mut set = g.vertex_set();
    set.extend((0..s.col).map(|c| LatticePoint::new(s.row, c)));
    set.extend((e.col..=row_len_ext(t, e.row)).map(|c| LatticePoint::new(e.row, c)));
    Ok(set)
}

/// `Γ'_j` for the `Γ̂` construction: `Γ_j` with a vertical run from the end
/// of the column left of `Bot_j` up to its start, and a vertical run from
/// its end to the top edge.
pub fn hat_prime(t: &Iglt, j: usize) -> Result<BTreeSet<LatticePoint>> {
    let g = gamma(t, j)?;
    let (s, e) = (g.start(), g.end());
    let mut set = g.vertex_set();
    set.extend((s.row..=col_len_ext(t, s.col)).map(|r| LatticePoint::new(r, s.col)));
    set.extend((0..e.row).map(|r| LatticePoint::new(r, e.col)));
    Ok(set)
}

fn primes<F>(t: &Iglt, f: F) -> Result<BTreeMap<usize, BTreeSet<LatticePoint>>>
where
    F: Fn(&Iglt, usize) -> Result<BTreeSet<LatticePoint>>,
{
    t.multi_support()
        .into_iter()
        .map(|j| Ok((j, f(t, j)?)))
        .collect()
}

fn splice_limit(t: &Iglt) -> usize {
    t.shape().len() + t.shape().row_len(1) + 2
}

fn tilde_from(
    i: usize,
    primes: &BTreeMap<usize, BTreeSet<LatticePoint>>,
    limit: usize,
) -> Result<LatticePath> {
    let mut v = primes.get(&i).cloned().ok_or(Error::NotMultiValued(i))?;
    for _ in 0..limit {
        let r_t = v.iter().map(|p| p.row).min().unwrap();
        let c_t = v
            .iter()
            .filter(|p| p.row == r_t)
            .map(|p| p.col)
            .min()
            .unwrap();
        let crossing = primes.iter().find(|(_, path)| {
            let right: Vec<&LatticePoint> = path.iter().filter(|p| p.col > c_t).collect();
            right.iter().any(|p| p.row < r_t) && right.iter().any(|p| p.row > r_t)
        });
        let Some((_, other)) = crossing else {
            return Ok(LatticePath::from_set(v));
        };
        let c0 = other
            .iter()
            .filter(|p| p.row == r_t)
            .map(|p| p.col)
            .min()
            .unwrap();
        v.retain(|p| !(p.row == r_t && p.col >= c0));
        v.extend(other.iter().filter(|p| p.row <= r_t && p.col >= c0));
    }
    Err(Error::NonTermination("extending a lattice path upward"))
}

fn hat_from(
    i: usize,
    primes: &BTreeMap<usize, BTreeSet<LatticePoint>>,
    limit: usize,
) -> Result<LatticePath> {
    let mut v = primes.get(&i).cloned().ok_or(Error::NotMultiValued(i))?;
    for _ in 0..limit {
        let c_b = v.iter().map(|p| p.col).min().unwrap();
        let r_b = v
            .iter()
            .filter(|p| p.col == c_b)
            .map(|p| p.row)
            .min()
            .unwrap();
        let crossing = primes.iter().find(|(_, path)| {
            let lower: Vec<&LatticePoint> = path.iter().filter(|p| p.row > r_b).collect();
            lower.iter().any(|p| p.col < c_b) && lower.iter().any(|p| p.col > c_b)
        });
        let Some((_, other)) = crossing else {
            return Ok(LatticePath::from_set(v));
        };
        let r0 = other
            .iter()
            .filter(|p| p.col == c_b)
            .map(|p| p.row)
            .min()
            .unwrap();
        v.retain(|p| !(p.col == c_b && p.row >= r0));
        v.extend(other.iter().filter(|p| p.row >= r0 && p.col <= c_b));
    }
    Err(Error::NonTermination("extending a lattice path leftward"))
}

/// `Γ̃_i(T)`.
pub fn tilde_gamma(t: &Iglt, i: usize) -> Result<LatticePath> {
    tilde_from(i, &primes(t, tilde_prime)?, splice_limit(t))
}

/// `Γ̂_i(T)`.
pub fn hat_gamma(t: &Iglt, i: usize) -> Result<LatticePath> {
    hat_from(i, &primes(t, hat_prime)?, splice_limit(t))
}

/// `Γ̃_i(T)` for every `i ∈ 𝓘(T)`.
pub fn all_tilde_gammas(t: &Iglt) -> Result<BTreeMap<usize, LatticePath>> {
    let p = primes(t, tilde_prime)?;
    let limit = splice_limit(t);
    p.keys()
        .map(|&i| Ok((i, tilde_from(i, &p, limit)?)))
        .collect()
}

/// `Γ̂_i(T)` for every `i ∈ 𝓘(T)`.
pub fn all_hat_gammas(t: &Iglt) -> Result<BTreeMap<usize, LatticePath>> {
    let p = primes(t, hat_prime)?;
    let limit = splice_limit(t);
    p.keys()
        .map(|&i| Ok((i, hat_from(i, &p, limit)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(rows: &[&[usize]]) -> Iglt {
        Iglt::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn pts(v: &[(usize, usize)]) -> Vec<LatticePoint> {
        v.iter().map(|&(r, c)| LatticePoint::new(r, c)).collect()
    }

    #[test]
    fn small_gamma() {
        let a = t(&[&[1, 2], &[2, 3]]);
        let g = gamma(&a, 2).unwrap();
        assert_eq!(
            g.vertices(),
            pts(&[(2, 0), (1, 0), (1, 1), (0, 1), (0, 2)]).as_slice()
        );
        assert!(g.is_staircase());
        assert_eq!(gamma(&a, 1), Err(Error::NotMultiValued(1)));
        let tg = tilde_gamma(&a, 2).unwrap();
        assert_eq!(tg, g);
        let hg = hat_gamma(&a, 2).unwrap();
        assert_eq!(hg, g);
    }

    #[test]
    fn below_and_right() {
        let a = t(&[&[1, 2], &[2, 3]]);
        let g = tilde_gamma(&a, 2).unwrap();
        assert!(!g.is_below(Cell::new(1, 1)));
        assert!(g.is_below(Cell::new(1, 2)));
        assert!(g.is_below(Cell::new(2, 1)));
        assert!(g.is_right_of(Cell::new(1, 2)));
        assert!(!g.is_right_of(Cell::new(1, 1)));
        assert!(g.is_right_of(Cell::new(2, 1)));
    }
}
