//! Horizontal strips of a source tableau and standardized reading words.

use std::collections::{BTreeSet, HashMap};

use crate::combinatorics::Cell;
use crate::equivalence::EquivClass;
use crate::error::{Error, Result};
use crate::hecke::iglt_submodule;
use crate::perm::{weak_interval, Permutation};
use crate::tableau::Iglt;

/// `H̃_1, …, H̃_{k+1}`: the cells of the source holding values between
/// consecutive descents. Each strip is listed left to right.
pub fn strips(source: &Iglt) -> Vec<Vec<Cell>> {
    let m = source.max_entry();
    let mut bounds: Vec<usize> = vec![0];
    bounds.extend(source.descents());
    bounds.push(m);
    let cells = source.shape().cells();
    bounds
        .windows(2)
        .map(|w| {
            let mut strip: Vec<Cell> = cells
                .iter()
                .copied()
                .filter(|&c| (w[0] + 1..=w[1]).contains(&source.at(c)))
                .collect();
            strip.sort_by_key(|c| (c.col, c.row));
            strip
        })
        .collect()
}

/// Reads `T` strip by strip, right to left within a strip, keeping one copy
/// of each run of equal entries.
pub fn sfread_with(strips: &[Vec<Cell>], t: &Iglt) -> Result<Permutation> {
    let mut word = Vec::with_capacity(t.max_entry());
    for strip in strips {
        let mut prev = None;
        for &c in strip.iter().rev() {
            let v = t.at(c);
            if prev != Some(v) {
                word.push(v);
            }
            prev = Some(v);
        }
    }
    Permutation::new(word)
}

/// `sfread(T)` for a member of `E`.
pub fn sfread(class: &EquivClass, t: &Iglt) -> Result<Permutation> {
    if !class.contains(t) {
        return Err(Error::NotInClass);
    }
    sfread_with(&strips(&class.source), t)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetIso {
    /// `sfread` of each member, in member order.
    pub reads: Vec<Permutation>,
    pub failure: Option<String>,
}

impl PosetIso {
    pub fn ok(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks that `sfread` is an order isomorphism from `(E, ⪯_E)` onto
/// `[sfread(T_E), sfread(T'_E)]_L`.
pub fn class_poset_iso(class: &EquivClass) -> Result<PosetIso> {
    let strips = strips(&class.source);
    let reads = class
        .members
        .iter()
        .map(|t| sfread_with(&strips, t))
        .collect::<Result<Vec<_>>>()?;
    let fail = |msg: String| {
        Ok(PosetIso {
            reads: reads.clone(),
            failure: Some(msg),
        })
    };

    let distinct: BTreeSet<&Permutation> = reads.iter().collect();
    if distinct.len() != reads.len() {
        return fail("sfread is not injective on the class".into());
    }
    let lo = sfread_with(&strips, &class.source)?;
    let hi = sfread_with(&strips, &class.sink)?;
    let interval: BTreeSet<Permutation> = weak_interval(&lo, &hi).into_iter().collect();
    if distinct.into_iter().cloned().collect::<BTreeSet<_>>() != interval {
        return fail(format!("image of sfread is not [{lo}, {hi}]_L"));
    }

    let module = iglt_submodule(class.m, class.members.clone())?;
    let pos: HashMap<&Iglt, usize> = class
        .members
        .iter()
        .enumerate()
        .map(|(k, t)| (t, k))
        .collect();
    for a in 0..module.dim() {
        let up = module.reachable(a);
        for b in 0..module.dim() {
            let by_action = up.contains(&b);
            let by_word = reads[a].weak_leq(&reads[b]);
            if by_action != by_word {
                let (ta, tb) = (module.label(a), module.label(b));
                return fail(format!(
                    "order mismatch between members {} and {}",
                    pos[ta], pos[tb]
                ));
            }
        }
    }
    Ok(PosetIso {
        reads,
        failure: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Partition;
    use crate::equivalence::classes;

    fn t(rows: &[&[usize]]) -> Iglt {
        Iglt::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn p(w: &[usize]) -> Permutation {
        Permutation::new(w.to_vec()).unwrap()
    }

    #[test]
    fn example_reading() {
        let te = t(&[
            &[1, 2, 3, 4, 5, 11, 12, 14, 15],
            &[6, 7, 8, 10, 11, 14],
            &[9, 10],
            &[13, 14],
        ]);
        let s = strips(&te);
        assert_eq!(s.len(), 4);
        assert_eq!(
            sfread_with(&s, &te).unwrap(),
            p(&[5, 4, 3, 2, 1, 8, 7, 6, 12, 11, 10, 9, 15, 14, 13])
        );
    }

    #[test]
    fn class_211() {
        let c = &classes(&Partition::new(vec![2, 1, 1]).unwrap(), 4).unwrap()[0];
        assert_eq!(
            strips(&c.source),
            vec![
                vec![Cell::new(1, 1), Cell::new(1, 2)],
                vec![Cell::new(2, 1)],
                vec![Cell::new(3, 1)]
            ]
        );
        assert_eq!(
            sfread(c, &t(&[&[1, 2], &[3], &[4]])).unwrap(),
            p(&[2, 1, 3, 4])
        );
        assert_eq!(
            sfread(c, &t(&[&[1, 3], &[2], &[4]])).unwrap(),
            p(&[3, 1, 2, 4])
        );
        assert_eq!(
            sfread(c, &t(&[&[1, 4], &[2], &[3]])).unwrap(),
            p(&[4, 1, 2, 3])
        );
        assert!(class_poset_iso(c).unwrap().ok());
        let single = &classes(&Partition::new(vec![1]).unwrap(), 1).unwrap()[0];
        assert_eq!(
            sfread(single, &t(&[&[1]])).unwrap(),
            Permutation::identity(1)
        );
    }
}
