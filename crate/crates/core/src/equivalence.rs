//! Lattice-path equivalence classes, and the source and sink of each class.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use crate::combinatorics::{Cell, LatticePoint, Partition};
use crate::error::{Error, Result};
use crate::hecke::{g_module, Action, HeckeModule};
use crate::paths::{all_hat_gammas, all_tilde_gammas, gamma, LatticePath};
use crate::tableau::{enumerate_iglt, Iglt};

/// The pairs `(V(Γ_i(T)), T⁻¹(i))` over `i ∈ 𝓘(T)`, sorted.
pub type Signature = Vec<(Vec<LatticePoint>, Vec<Cell>)>;

pub fn signature(t: &Iglt) -> Result<Signature> {
    let mut sig = t
        .multi_support()
        .into_iter()
        .map(|i| {
            Ok((
                gamma(t, i)?.vertex_set().into_iter().collect(),
                t.cells_of(i),
            ))
        })
        .collect::<Result<Signature>>()?;
    sig.sort();
    Ok(sig)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivClass {
    pub shape: Partition,
    pub m: usize,
    pub members: Vec<Iglt>,
    pub signature: Signature,
    pub source: Iglt,
    pub sink: Iglt,
}

impl EquivClass {
    pub fn contains(&self, t: &Iglt) -> bool {
        self.members.binary_search(t).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// The classes of `IGLT(λ; m)`, ordered by their source tableaux.
pub fn classes(shape: &Partition, m: usize) -> Result<Vec<EquivClass>> {
    let mut groups: BTreeMap<Signature, Vec<Iglt>> = BTreeMap::new();
    for t in enumerate_iglt(shape, m) {
        groups.entry(signature(&t)?).or_default().push(t);
    }
    let mut out = groups
        .into_iter()
        .map(|(signature, members)| {
            let source = source_of(&members[0])?;
            let sink = sink_of(&members[0])?;
            Ok(EquivClass {
                shape: shape.clone(),
                m,
                members,
                signature,
                source,
                sink,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort_by(|a, b| a.source.cmp(&b.source));
    Ok(out)
}

/// The class of `T`, generated from its source by the `π_i`. Avoids
/// enumerating all of `IGLT(λ; m)`.
pub fn class_containing(t: &Iglt) -> Result<EquivClass> {
    let sig = signature(t)?;
    let source = source_of(t)?;
    let sink = sink_of(t)?;
    let mut seen: BTreeSet<Iglt> = BTreeSet::from([source.clone()]);
    let mut stack = vec![source.clone()];
    while let Some(u) = stack.pop() {
        for i in 1..u.max_entry() {
            if let Some(v) = u.pi(i) {
                if !seen.contains(&v) {
                    if signature(&v)? != sig {
                        return Err(Error::NotInClass);
                    }
                    seen.insert(v.clone());
                    stack.push(v);
                }
            }
        }
    }
    if !seen.contains(t) || !seen.contains(&sink) {
        return Err(Error::NotInClass);
    }
    Ok(EquivClass {
        shape: t.shape().clone(),
        m: t.max_entry(),
        members: seen.into_iter().collect(),
        signature: sig,
        source,
        sink,
    })
}

/// Where two paths sharing a start part ways: the lowest common vertex
/// whose upward and rightward neighbours are not both common. `Less` means
/// `a` turns upward there.
fn split_upward(a: &LatticePath, b: &LatticePath) -> Result<Ordering> {
    let (va, vb) = (a.vertex_set(), b.vertex_set());
    let common: BTreeSet<LatticePoint> = va.intersection(&vb).copied().collect();
    let up = |p: &LatticePoint| (p.row > 0).then(|| LatticePoint::new(p.row - 1, p.col));
    let right = |p: &LatticePoint| LatticePoint::new(p.row, p.col + 1);
    let split = common
        .iter()
        .filter(|p| !up(p).is_some_and(|u| common.contains(&u)) && !common.contains(&right(p)))
        .min_by(|x, y| y.row.cmp(&x.row).then(x.col.cmp(&y.col)))
        .ok_or_else(|| Error::Ordering("paths share no vertex".into()))?;
    let a_up = up(split).is_some_and(|u| va.contains(&u));
    let b_up = up(split).is_some_and(|u| vb.contains(&u));
    match (a_up, b_up) {
        (true, false) => Ok(Ordering::Less),
        (false, true) => Ok(Ordering::Greater),
        _ => Err(Error::Ordering(format!("paths do not split at {split}"))),
    }
}

/// Where two paths sharing an end part ways, read backward: the highest
/// common vertex whose leftward and downward neighbours are not both common.
/// `Less` means `a` turns left there.
fn split_leftward(a: &LatticePath, b: &LatticePath) -> Result<Ordering> {
    let (va, vb) = (a.vertex_set(), b.vertex_set());
    let common: BTreeSet<LatticePoint> = va.intersection(&vb).copied().collect();
    let left = |p: &LatticePoint| (p.col > 0).then(|| LatticePoint::new(p.row, p.col - 1));
    let down = |p: &LatticePoint| LatticePoint::new(p.row + 1, p.col);
    let split = common
        .iter()
        .filter(|p| !left(p).is_some_and(|l| common.contains(&l)) && !common.contains(&down(p)))
        .min_by(|x, y| x.row.cmp(&y.row).then(y.col.cmp(&x.col)))
        .ok_or_else(|| Error::Ordering("paths share no vertex".into()))?;
    let a_left = left(split).is_some_and(|l| va.contains(&l));
    let b_left = left(split).is_some_and(|l| vb.contains(&l));
    match (a_left, b_left) {
        (true, false) => Ok(Ordering::Less),
        (false, true) => Ok(Ordering::Greater),
        _ => Err(Error::Ordering(format!("paths do not split at {split}"))),
    }
}

/// Ranks the keys by a comparator, failing unless the ranks form a bijection.
fn rank_by<F>(keys: &[usize], cmp: F) -> Result<Vec<usize>>
where
    F: Fn(usize, usize) -> Result<Ordering>,
{
    let mut ranked: Vec<(usize, usize)> = Vec::with_capacity(keys.len());
    for &i in keys {
        let mut before = 0;
        for &j in keys {
            if j != i && cmp(j, i)? == Ordering::Less {
                before += 1;
            }
        }
        ranked.push((before, i));
    }
    ranked.sort();
    if ranked.iter().enumerate().any(|(k, &(r, _))| r != k) {
        return Err(Error::Ordering("initial labels are not a bijection".into()));
    }
    Ok(ranked.into_iter().map(|(_, i)| i).collect())
}

/// Bubble-style relabeling: swap neighbours whenever `swap(order[k],
/// order[k+1])` holds, restarting from the front after every swap.
fn relabel<F>(mut order: Vec<usize>, swap: F) -> Result<Vec<usize>>
where
    F: Fn(usize, usize) -> bool,
{
    let n = order.len();
    let limit = 1 + n * n * n * n;
    let mut k = 0;
    let mut steps = 0;
    while k + 1 < n {
        steps += 1;
        if steps > limit {
            return Err(Error::NonTermination("relabeling"));
        }
        if swap(order[k], order[k + 1]) {
            order.swap(k, k + 1);
            k = 0;
        } else {
            k += 1;
        }
    }
    Ok(order)
}

fn as_labels(order: &[usize]) -> BTreeMap<usize, usize> {
    order.iter().enumerate().map(|(k, &i)| (i, k + 1)).collect()
}

/// Initial labels `p'`: by the row of `Bot_i`, ties split by the `Γ̃` paths.
pub fn sfp_initial(t: &Iglt) -> Result<BTreeMap<usize, usize>> {
    let paths = all_tilde_gammas(t)?;
    let order = initial_p_order(t, &paths)?;
    Ok(as_labels(&order))
}

fn initial_p_order(t: &Iglt, paths: &BTreeMap<usize, LatticePath>) -> Result<Vec<usize>> {
    let keys: Vec<usize> = paths.keys().copied().collect();
    let bot: BTreeMap<usize, Cell> = keys
        .iter()
        .map(|&i| Ok((i, t.bot_box(i)?)))
        .collect::<Result<_>>()?;
    rank_by(&keys, |i, j| match bot[&i].row.cmp(&bot[&j].row) {
        Ordering::Equal => split_upward(&paths[&i], &paths[&j]),
        o => Ok(o),
    })
}

/// `sf p_T`: labels of `𝓘(T)` after the relabeling pass.
pub fn sfp_labels(t: &Iglt) -> Result<BTreeMap<usize, usize>> {
    let paths = all_tilde_gammas(t)?;
    Ok(as_labels(&sfp_order(t, &paths)?))
}

fn sfp_order(t: &Iglt, paths: &BTreeMap<usize, LatticePath>) -> Result<Vec<usize>> {
    let order = initial_p_order(t, paths)?;
    let bot: BTreeMap<usize, Cell> = order
        .iter()
        .map(|&i| Ok((i, t.bot_box(i)?)))
        .collect::<Result<_>>()?;
    relabel(order, |a, b| {
        let Cell { row, col } = bot[&a];
        let pts = paths[&b].vertices();
        pts.iter().any(|p| p.row < row && p.col < col)
            && pts.iter().any(|p| p.row > row && p.col < col)
    })
}

/// Initial labels `q'`: by the column of `Top_i`, ties split by the `Γ̂` paths.
pub fn sfq_initial(t: &Iglt) -> Result<BTreeMap<usize, usize>> {
    let paths = all_hat_gammas(t)?;
    Ok(as_labels(&initial_q_order(t, &paths)?))
}

fn initial_q_order(t: &Iglt, paths: &BTreeMap<usize, LatticePath>) -> Result<Vec<usize>> {
    let keys: Vec<usize> = paths.keys().copied().collect();
    let top: BTreeMap<usize, Cell> = keys
        .iter()
        .map(|&i| Ok((i, t.top_box(i)?)))
        .collect::<Result<_>>()?;
    rank_by(&keys, |i, j| match top[&i].col.cmp(&top[&j].col) {
        Ordering::Equal => split_leftward(&paths[&i], &paths[&j]),
        o => Ok(o),
    })
}

/// `sf q_T`: labels of `𝓘(T)` after the relabeling pass.
pub fn sfq_labels(t: &Iglt) -> Result<BTreeMap<usize, usize>> {
    let paths = all_hat_gammas(t)?;
    Ok(as_labels(&sfq_order(t, &paths)?))
}

fn sfq_order(t: &Iglt, paths: &BTreeMap<usize, LatticePath>) -> Result<Vec<usize>> {
    let order = initial_q_order(t, paths)?;
    let top: BTreeMap<usize, Cell> = order
        .iter()
        .map(|&i| Ok((i, t.top_box(i)?)))
        .collect::<Result<_>>()?;
    relabel(order, |a, b| {
        let Cell { row, col } = top[&a];
        let pts = paths[&b].vertices();
        pts.iter().any(|p| p.row < row && p.col < col)
            && pts.iter().any(|p| p.row < row && p.col > col)
    })
}

/// One pair `(D¹_u, D²_u)` per label `u`, cells in row-major order.
pub type Regions = Vec<(Vec<Cell>, Vec<Cell>)>;

fn regions<F>(t: &Iglt, order: &[usize], paths: &BTreeMap<usize, LatticePath>, inside: F) -> Regions
where
    F: Fn(&LatticePath, Cell) -> bool,
{
    let cells = t.shape().cells();
    let mut taken: BTreeSet<Cell> = BTreeSet::new();
    let mut out = Vec::with_capacity(order.len());
    for &i in order {
        let area: Vec<Cell> = cells
            .iter()
            .copied()
            .filter(|&c| inside(&paths[&i], c))
            .collect();
        let d1: Vec<Cell> = area
            .iter()
            .copied()
            .filter(|c| !taken.contains(c))
            .collect();
        let d2 = t.cells_of(i);
        taken.extend(area);
        taken.extend(d2.iter().copied());
        out.push((d1, d2));
    }
    out
}

/// `(D¹_u, D²_u)` for the source construction.
pub fn source_regions(t: &Iglt) -> Result<Regions> {
    let paths = all_tilde_gammas(t)?;
    let order = sfp_order(t, &paths)?;
    Ok(regions(t, &order, &paths, |p, c| !p.is_below(c)))
}

/// `(D̂¹_u, D̂²_u)` for the sink construction.
pub fn sink_regions(t: &Iglt) -> Result<Regions> {
    let paths = all_hat_gammas(t)?;
    let order = sfq_order(t, &paths)?;
    Ok(regions(t, &order, &paths, |p, c| !p.is_right_of(c)))
}

/// Fills `D¹_1, D²_1, D¹_2, …` in turn, then every other cell, visiting
/// cells in `order`.
fn fill(t: &Iglt, regions: &Regions, order: &[Cell]) -> Result<Iglt> {
    let mut grid: BTreeMap<Cell, usize> = BTreeMap::new();
    let put = |c: Cell, v: usize, grid: &mut BTreeMap<Cell, usize>| match grid.insert(c, v) {
        None => Ok(()),
        Some(_) => Err(Error::Ordering(format!("regions overlap at {c}"))),
    };
    let rank = |c: &Cell| order.iter().position(|x| x == c).unwrap();
    let mut next = 0;
    for (d1, d2) in regions {
        let mut d1 = d1.clone();
        d1.sort_by_key(rank);
        for c in d1 {
            next += 1;
            put(c, next, &mut grid)?;
        }
        next += 1;
        for &c in d2 {
            put(c, next, &mut grid)?;
        }
    }
    for &c in order {
        grid.entry(c).or_insert_with(|| {
            next += 1;
            next
        });
    }
    let rows = t
        .shape()
        .parts()
        .iter()
        .enumerate()
        .map(|(r, &len)| (1..=len).map(|c| grid[&Cell::new(r + 1, c)]).collect())
        .collect();
    Iglt::validate(t.shape(), rows)
}

/// The source tableau of the class of `T`.
pub fn source_of(t: &Iglt) -> Result<Iglt> {
    fill(t, &source_regions(t)?, &t.shape().cells())
}

/// The sink tableau of the class of `T`.
pub fn sink_of(t: &Iglt) -> Result<Iglt> {
    fill(t, &sink_regions(t)?, &t.shape().cells_column_major())
}

/// Source test by local shape: for every `i ∉ Des(T)` the box right of
/// `Top_i` holds `i+1`.
pub fn is_source_local(t: &Iglt) -> bool {
    (1..t.max_entry()).filter(|&i| !t.is_descent(i)).all(|i| {
        let top = t.top_box(i).unwrap();
        t.get(Cell::new(top.row, top.col + 1)) == Some(i + 1)
    })
}

/// Sink test by local shape: every descent is attacking.
pub fn is_sink_local(t: &Iglt) -> bool {
    t.descents().into_iter().all(|i| t.is_attacking_descent(i))
}

/// Source and sink flags read off the action graph of `G_{λ;m}`: a source
/// has no other tableau mapped onto it, a sink moves nowhere.
pub fn extremal_flags(module: &HeckeModule<Iglt>) -> Vec<(bool, bool)> {
    let mut hit = vec![false; module.dim()];
    let mut moves = vec![false; module.dim()];
    for (b, mv) in moves.iter_mut().enumerate() {
        for i in 1..module.rank() {
            if let Action::SendTo(x) = module.action(i, b) {
                hit[x] = true;
                *mv = true;
            }
        }
    }
    hit.into_iter()
        .zip(moves)
        .map(|(h, mv)| (!h, !mv))
        .collect()
}

/// Source test from the definition, scanning all of `IGLT(λ; m)`.
pub fn is_source_by_definition(t: &Iglt) -> Result<bool> {
    let module = g_module(t.shape(), t.max_entry())?;
    let b = module.index_of(t).ok_or(Error::NotInClass)?;
    Ok(extremal_flags(&module)[b].0)
}

/// Sink test from the definition.
pub fn is_sink_by_definition(t: &Iglt) -> bool {
    (1..t.max_entry()).all(|i| match t.pi(i) {
        None => true,
        Some(img) => &img == t,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(rows: &[&[usize]]) -> Iglt {
        Iglt::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn classes_211() {
        let c4 = classes(&part(&[2, 1, 1]), 4).unwrap();
        assert_eq!(c4.len(), 1);
        assert_eq!(c4[0].len(), 3);
        assert!(c4[0].signature.is_empty());
        assert_eq!(c4[0].source, t(&[&[1, 2], &[3], &[4]]));
        assert_eq!(c4[0].sink, t(&[&[1, 4], &[2], &[3]]));
        let c3 = classes(&part(&[2, 1, 1]), 3).unwrap();
        assert_eq!(c3.len(), 2);
        assert!(c3
            .iter()
            .all(|c| c.len() == 1 && c.source == c.members[0] && c.sink == c.members[0]));
        assert_eq!(classes(&part(&[1]), 1).unwrap().len(), 1);
        let mid = t(&[&[1, 3], &[2], &[4]]);
        assert_eq!(class_containing(&mid).unwrap(), c4[0]);
    }

    #[test]
    fn small_regions() {
        let a = t(&[&[1, 2], &[2, 3]]);
        let r = source_regions(&a).unwrap();
        assert_eq!(
            r,
            vec![(
                vec![Cell::new(1, 1)],
                vec![Cell::new(1, 2), Cell::new(2, 1)]
            )]
        );
        assert_eq!(source_of(&a).unwrap(), a);
        assert_eq!(sink_of(&a).unwrap(), a);
        assert!(source_regions(&t(&[&[1, 2], &[3]])).unwrap().is_empty());
    }

    #[test]
    fn predicates() {
        let src = t(&[&[1, 2], &[3], &[4]]);
        let mid = t(&[&[1, 3], &[2], &[4]]);
        let snk = t(&[&[1, 4], &[2], &[3]]);
        assert!(is_source_local(&src) && !is_sink_local(&src));
        assert!(!is_source_local(&mid) && !is_sink_local(&mid));
        assert!(!is_source_local(&snk) && is_sink_local(&snk));
        assert!(is_source_by_definition(&src).unwrap());
        assert!(!is_source_by_definition(&mid).unwrap());
        assert!(is_sink_by_definition(&snk));
        assert!(!is_sink_by_definition(&mid));
    }
}
