//! Integer combinations of fundamental quasisymmetric functions `F_α`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg};

use serde::{Deserialize, Serialize};

use crate::combinatorics::{Composition, Partition};
use crate::error::{Error, Result};
use crate::tableau::{enumerate_all_iglt, enumerate_iglt, Iglt};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct QSymExpr {
    terms: BTreeMap<Composition, i64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct Term {
    composition: Composition,
    coeff: i64,
}

impl QSymExpr {
    pub fn zero() -> Self {
        QSymExpr::default()
    }

    pub fn fundamental(alpha: Composition) -> Self {
        QSymExpr {
            terms: BTreeMap::from([(alpha, 1)]),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, alpha: &Composition) -> i64 {
        self.terms.get(alpha).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Composition, i64)> {
        self.terms.iter().map(|(a, &c)| (a, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, alpha: Composition, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(alpha.clone()).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&alpha);
        }
    }

    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return QSymExpr::zero();
        }
        QSymExpr {
            terms: self
                .terms
                .iter()
                .map(|(a, &v)| (a.clone(), v * c))
                .collect(),
        }
    }

    /// The degree-`m` part.
    pub fn component(&self, m: usize) -> Self {
        QSymExpr {
            terms: self
                .terms
                .iter()
                .filter(|(a, _)| a.size() == m)
                .map(|(a, &v)| (a.clone(), v))
                .collect(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|(a, &c)| Term {
                composition: a.clone(),
                coeff: c,
            })
            .collect();
        serde_json::to_value(terms).expect("terms serialize")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let terms: Vec<Term> =
            serde_json::from_value(v.clone()).map_err(|_| Error::InvalidComposition(Vec::new()))?;
        let mut out = QSymExpr::zero();
        for t in terms {
            out.add_term(t.composition, t.coeff);
        }
        Ok(out)
    }
}

impl Add for QSymExpr {
    type Output = QSymExpr;
    fn add(mut self, rhs: QSymExpr) -> QSymExpr {
        for (a, c) in rhs.terms {
            self.add_term(a, c);
        }
        self
    }
}

impl<'a> Add<&'a QSymExpr> for &'a QSymExpr {
    type Output = QSymExpr;
    fn add(self, rhs: &QSymExpr) -> QSymExpr {
        self.clone() + rhs.clone()
    }
}

impl Neg for QSymExpr {
    type Output = QSymExpr;
    fn neg(self) -> QSymExpr {
        self.scale(-1)
    }
}

impl std::iter::Sum for QSymExpr {
    fn sum<I: Iterator<Item = QSymExpr>>(iter: I) -> QSymExpr {
        iter.fold(QSymExpr::zero(), Add::add)
    }
}

impl fmt::Display for QSymExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (a, &c)) in self.terms.iter().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            match (k, c < 0) {
                (0, false) => {}
                (0, true) => write!(f, "-")?,
                _ => write!(f, " {sign} ")?,
            }
            if c.abs() != 1 {
                write!(f, "{}·", c.abs())?;
            }
            write!(f, "F{a}")?;
        }
        Ok(())
    }
}

fn sum_descent_compositions(tableaux: &[Iglt]) -> QSymExpr {
    let mut out = QSymExpr::zero();
    for t in tableaux {
        out.add_term(t.descent_composition(), 1);
    }
    out
}

/// `U_{λ;m} = Σ_{T ∈ IGLT(λ;m)} F_{comp(T)}`.
pub fn genomic_schur_component(shape: &Partition, m: usize) -> QSymExpr {
    sum_descent_compositions(&enumerate_iglt(shape, m))
}

/// `U_λ = Σ_{T ∈ IGLT(λ)} F_{comp(T)}`.
pub fn genomic_schur(shape: &Partition) -> QSymExpr {
    sum_descent_compositions(&enumerate_all_iglt(shape))
}

/// Gessel's expansion of the Schur function `s_μ` over standard Young tableaux.
pub fn schur_to_fundamental(shape: &Partition) -> QSymExpr {
    genomic_schur_component(shape, shape.size())
}

/// The shapes `Par(λ; m)` contributing to the two-row expansion, each given
/// as a raw sequence that may fail to be a partition.
pub fn two_row_shapes(shape: &Partition, m: usize) -> Result<Vec<Vec<usize>>> {
    if shape.len() > 2 {
        return Err(Error::TooManyRows(shape.parts().to_vec()));
    }
    let n = shape.size();
    let l1 = shape.row_len(1) as i64;
    let l2 = shape.row_len(2) as i64;
    let lower = l1.max(l2 + 1);
    let mi = m as i64;
    if mi < lower || m > n {
        return Ok(Vec::new());
    }
    if m == n {
        return Ok(vec![shape.parts().to_vec()]);
    }
    let k = (n - m) as i64;
    let build = |a: i64, b: i64, ones: i64| -> Option<Vec<usize>> {
        if a < 0 || b < 0 || ones < 0 {
            return None;
        }
        let mut v = vec![a as usize, b as usize];
        v.extend(std::iter::repeat_n(1, ones as usize));
        Some(v)
    };
    let mut out = Vec::new();
    if l1 == l2 {
        out.extend(build(l1 - k, l1 - k, k));
    } else {
        out.extend(build(l1 - k, l2 - k, k));
        out.extend(build(l1 - k, l2 - k + 1, k - 1));
    }
    Ok(out)
}

/// Reads a raw sequence as a partition after dropping trailing zeros;
/// `None` if it is not one.
fn as_partition(seq: &[usize]) -> Option<Partition> {
    let mut v = seq.to_vec();
    while v.last() == Some(&0) {
        v.pop();
    }
    Partition::new(v).ok()
}

/// `Σ_{l_λ ≤ m ≤ n} Σ_{μ ∈ Par(λ;m)} s_μ` for a partition with at most two
/// rows. A one-row `λ` is read with `λ₂ = 0`.
pub fn two_row_expansion(shape: &Partition) -> Result<QSymExpr> {
    let mut out = QSymExpr::zero();
    for m in 1..=shape.size() {
        for mu in two_row_shapes(shape, m)? {
            if let Some(p) = as_partition(&mu) {
                out = out + schur_to_fundamental(&p);
            }
        }
    }
    Ok(out)
}
