//! The generalized composition `bal_E`, the map `η: P_{bal_E} → G_E`, and the
//! checks that `η` is a projective cover with `G_E` a weak Bruhat interval
//! module.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use crate::combinatorics::{Cell, Composition, GeneralizedComposition};
use crate::equivalence::{signature, EquivClass};
use crate::error::{Error, Result};
use crate::hecke::{b_module, iglt_submodule, verify_module_map, HeckeModule};
use crate::perm::Permutation;
use crate::reading::{sfread_with, strips};
use crate::ribbon::{enumerate_srt, p_module, Srt};
use crate::tableau::Iglt;

/// `bal_E` read off the source tableau: one column of height `d_j − d_{j−1}`
/// per strip, with a new block whenever `Bot_{d_{j−2}+1}` lies strictly right
/// of `Top_{d_j}`.
pub fn bal_e(source: &Iglt) -> Result<GeneralizedComposition> {
    let mut d: Vec<usize> = vec![0];
    d.extend(source.descents());
    d.push(source.max_entry());
    let mut bal = GeneralizedComposition::single(Composition::new(vec![d[1]])?)?;
    for j in 2..d.len() {
        let part = Composition::new(vec![d[j] - d[j - 1]])?;
        let bot = source.bot_box(d[j - 2] + 1)?;
        let top = source.top_box(d[j])?;
        bal = if bot.col > top.col {
            bal.push_block(part)?
        } else {
            bal.append(&part)
        };
    }
    Ok(bal)
}

/// Edge-connected components of a set of cells, ordered by leftmost column.
fn components(cells: &[Cell]) -> Vec<Vec<Cell>> {
    let set: BTreeSet<Cell> = cells.iter().copied().collect();
    let mut seen: BTreeSet<Cell> = BTreeSet::new();
    let mut out = Vec::new();
    for &c in &set {
        if !seen.insert(c) {
            continue;
        }
        let mut comp = vec![c];
        let mut queue = VecDeque::from([c]);
        while let Some(x) = queue.pop_front() {
            let near = [
                Cell::new(x.row, x.col + 1),
                Cell::new(x.row + 1, x.col),
                Cell::new(x.row, x.col.wrapping_sub(1)),
                Cell::new(x.row.wrapping_sub(1), x.col),
            ];
            for y in near {
                if set.contains(&y) && seen.insert(y) {
                    comp.push(y);
                    queue.push_back(y);
                }
            }
        }
        comp.sort_by_key(|c| (c.col, c.row));
        out.push(comp);
    }
    out.sort_by_key(|comp| (comp[0].col, comp[0].row));
    out
}

/// The data needed to pass between `SRT(bal_E)` and fillings of `λ`.
#[derive(Debug, Clone)]
pub struct EtaContext {
    pub class: EquivClass,
    pub bal: GeneralizedComposition,
    /// `H̃_j`, each left to right.
    pub strips: Vec<Vec<Cell>>,
    /// Connected components of each strip, left to right.
    pub components: Vec<Vec<Vec<Cell>>>,
    /// `C̃_j`: the cells of column `j` of `trd(bal_E)`, top to bottom.
    pub columns: Vec<Vec<Cell>>,
}

impl EtaContext {
    pub fn new(class: &EquivClass) -> Result<Self> {
        let bal = bal_e(&class.source)?;
        let strips = strips(&class.source);
        let columns = bal.ribbon_columns();
        let components: Vec<Vec<Vec<Cell>>> = strips.iter().map(|s| components(s)).collect();
        for (j, comps) in components.iter().enumerate() {
            let distinct = comps.iter().map(Vec::len).sum::<usize>() + 1 - comps.len();
            if columns.get(j).map(Vec::len) != Some(distinct) {
                return Err(Error::InvalidSrt(format!(
                    "column {} of bal_E does not match strip {}",
                    j + 1,
                    j + 1
                )));
            }
        }
        Ok(EtaContext {
            class: class.clone(),
            bal,
            strips,
            components,
            columns,
        })
    }

    /// `T_𝒯` as raw rows; it need not be increasing.
    pub fn t_of_srt(&self, srt: &Srt) -> Vec<Vec<usize>> {
        let mut grid: HashMap<Cell, usize> = HashMap::new();
        for (comps, column) in self.components.iter().zip(&self.columns) {
            let mut eps: Vec<usize> = column.iter().map(|&c| srt.get(c).unwrap()).collect();
            eps.sort_unstable();
            // Neighbouring components share their boundary entry.
            let mut start = 0;
            for comp in comps {
                for (k, &c) in comp.iter().enumerate() {
                    grid.insert(c, eps[start + k]);
                }
                start += comp.len() - 1;
            }
        }
        self.class
            .shape
            .parts()
            .iter()
            .enumerate()
            .map(|(r, &len)| (1..=len).map(|c| grid[&Cell::new(r + 1, c)]).collect())
            .collect()
    }

    /// `η(𝒯)`: `T_𝒯` when it lies in `E`, otherwise zero.
    pub fn eta(&self, srt: &Srt) -> Option<Iglt> {
        let t = Iglt::validate(&self.class.shape, self.t_of_srt(srt)).ok()?;
        if t.max_entry() != self.class.m {
            return None;
        }
        match signature(&t) {
            Ok(sig) if sig == self.class.signature => Some(t),
            _ => None,
        }
    }

    /// `𝒯_T`: column `j` carries `T(H̃_j)` increasing downward.
    pub fn srt_of_t(&self, t: &Iglt) -> Result<Srt> {
        if !self.class.contains(t) {
            return Err(Error::NotInClass);
        }
        let mut filling = HashMap::new();
        for (strip, column) in self.strips.iter().zip(&self.columns) {
            let vals: BTreeSet<usize> = strip.iter().map(|&c| t.at(c)).collect();
            for (&c, v) in column.iter().zip(vals) {
                filling.insert(c, v);
            }
        }
        Srt::new(&self.bal, &filling)
    }
}

/// `𝒯•_𝛂`, the SRT reading as `w₀(𝛂_•^c)`.
pub fn bullet_srt(shape: &GeneralizedComposition) -> Result<Srt> {
    Srt::from_reading(
        shape,
        &Permutation::parabolic_longest(&shape.bullet().complement()),
    )
}

/// `𝒯⊙_𝛂`, the SRT reading as `w₀(𝛂_⊙^c)`.
pub fn odot_srt(shape: &GeneralizedComposition) -> Result<Srt> {
    Srt::from_reading(
        shape,
        &Permutation::parabolic_longest(&shape.odot().complement()),
    )
}

/// Indices of `[𝒯•, 𝒯⊙]` in the basis of `P_𝛂`: reachable from `𝒯•` and
/// reaching `𝒯⊙`.
fn interval_indices(module: &HeckeModule<Srt>, lo: usize, hi: usize) -> BTreeSet<usize> {
    let mut back: Vec<Vec<usize>> = vec![Vec::new(); module.dim()];
    for b in 0..module.dim() {
        for i in 1..module.rank() {
            if let Some(x) = module.pi(i, b) {
                back[x].push(b);
            }
        }
    }
    let mut below: BTreeSet<usize> = BTreeSet::from([hi]);
    let mut queue = VecDeque::from([hi]);
    while let Some(x) = queue.pop_front() {
        for &y in &back[x] {
            if below.insert(y) {
                queue.push_back(y);
            }
        }
    }
    module.reachable(lo).intersection(&below).copied().collect()
}

/// `[𝒯•_𝛂, 𝒯⊙_𝛂]` under `⪯_{SRT(𝛂)}`, sorted.
pub fn srt_interval(shape: &GeneralizedComposition) -> Result<Vec<Srt>> {
    let module = p_module(shape)?;
    let lo = module
        .index_of(&bullet_srt(shape)?)
        .ok_or(Error::EmptyBasis)?;
    let hi = module
        .index_of(&odot_srt(shape)?)
        .ok_or(Error::EmptyBasis)?;
    Ok(interval_indices(&module, lo, hi)
        .into_iter()
        .map(|b| module.label(b).clone())
        .collect())
}

/// Checks that `T ↦ sfread(T)` is an isomorphism `G_E → B(sfread(T_E), sfread(T'_E))`.
pub fn verify_wbim_iso(class: &EquivClass) -> Result<bool> {
    let strips = strips(&class.source);
    let g = iglt_submodule(class.m, class.members.clone())?;
    let lo = sfread_with(&strips, &class.source)?;
    let hi = sfread_with(&strips, &class.sink)?;
    let Ok(b) = b_module(&lo, &hi) else {
        return Ok(false);
    };
    if b.dim() != g.dim() {
        return Ok(false);
    }
    let image = (0..g.dim())
        .map(|k| Ok(b.index_of(&sfread_with(&strips, g.label(k))?)))
        .collect::<Result<Vec<Option<usize>>>>()?;
    let hit: BTreeSet<Option<usize>> = image.iter().copied().collect();
    if hit.len() != g.dim() || hit.contains(&None) {
        return Ok(false);
    }
    Ok(verify_module_map(&g, &b, |k| image[k]))
}

/// Outcome of checking that `η: P_{bal_E} → G_E` is a projective cover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    pub bal: String,
    pub srt_count: usize,
    pub class_size: usize,
    pub kernel_size: usize,
    /// Every member of `E` is some `η(𝒯)`.
    pub surjective: bool,
    /// `η(𝒯_T) = T` for every `T ∈ E`.
    pub section: bool,
    /// No kernel element lies in `[𝒯•, 𝒯⊙]`.
    pub kernel_outside_interval: bool,
    /// `|SRT(bal_E)| = |E| + |ker|`.
    pub dims_ok: bool,
    /// `η` commutes with every `π_i`.
    pub equivariant: bool,
    /// `lread(𝒯) = sfread(η(𝒯))` off the kernel, and `lread(𝒯)` leaves the
    /// interval on it.
    pub readings: bool,
}

impl CoverReport {
    pub fn cover_ok(&self) -> bool {
        self.surjective
            && self.section
            && self.kernel_outside_interval
            && self.dims_ok
            && self.equivariant
            && self.readings
    }
}

pub fn verify_projective_cover(class: &EquivClass) -> Result<CoverReport> {
    let ctx = EtaContext::new(class)?;
    let p = p_module(&ctx.bal)?;
    let g = iglt_submodule(class.m, class.members.clone())?;
    let images: Vec<Option<usize>> = p
        .basis()
        .iter()
        .map(|s| ctx.eta(s).and_then(|t| g.index_of(&t)))
        .collect();
    let kernel: Vec<usize> = (0..p.dim()).filter(|&b| images[b].is_none()).collect();
    let hit: BTreeSet<usize> = images.iter().flatten().copied().collect();

    let section = class
        .members
        .iter()
        .all(|t| ctx.srt_of_t(t).ok().and_then(|s| ctx.eta(&s)).as_ref() == Some(t));

    let lo = p
        .index_of(&bullet_srt(&ctx.bal)?)
        .ok_or(Error::EmptyBasis)?;
    let hi = p.index_of(&odot_srt(&ctx.bal)?).ok_or(Error::EmptyBasis)?;
    let interval = interval_indices(&p, lo, hi);

    let lo_read = sfread_with(&ctx.strips, &class.source)?;
    let hi_read = sfread_with(&ctx.strips, &class.sink)?;
    let mut readings = true;
    for (b, image) in images.iter().enumerate() {
        let w = p.label(b).lread();
        readings &= match image {
            Some(x) => sfread_with(&ctx.strips, g.label(*x))? == w,
            None => !(lo_read.weak_leq(&w) && w.weak_leq(&hi_read)),
        };
    }

    Ok(CoverReport {
        bal: ctx.bal.to_string(),
        srt_count: p.dim(),
        class_size: class.len(),
        kernel_size: kernel.len(),
        surjective: hit.len() == g.dim(),
        section,
        kernel_outside_interval: kernel.iter().all(|b| !interval.contains(b)),
        dims_ok: p.dim() == class.len() + kernel.len(),
        equivariant: verify_module_map(&p, &g, |b| images[b]),
        readings,
    })
}

/// All of `SRT(bal_E)` with their `η` images.
pub fn eta_table(ctx: &EtaContext) -> Vec<(Srt, Option<Iglt>)> {
    enumerate_srt(&ctx.bal)
        .into_iter()
        .map(|s| {
            let t = ctx.eta(&s);
            (s, t)
        })
        .collect()
}
