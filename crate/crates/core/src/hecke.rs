//! Finite 0-Hecke modules with a combinatorial basis.
//!
//! A module stores, for each generator `π_i` (`1 ≤ i < m`) and each basis
//! index, whether `π_i` fixes the element, kills it, or sends it to another
//! basis element. Labels are carried only for lookup and display.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;
use std::hash::Hash;

use crate::combinatorics::{Composition, Partition};
use crate::error::{Error, Result};
use crate::perm::{weak_interval, Permutation};
use crate::qsym::QSymExpr;
use crate::tableau::{enumerate_iglt, Iglt};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Action {
    Fix,
    Zero,
    SendTo(usize),
}

#[derive(Debug, Clone)]
pub struct HeckeModule<L> {
    rank: usize,
    basis: Vec<L>,
    index: HashMap<L, usize>,
    // table[i - 1][b]
    table: Vec<Vec<Action>>,
}

/// A relation that failed on some basis vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationWitness {
    pub relation: String,
    pub basis: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationReport {
    pub checked: usize,
    pub witness: Option<RelationWitness>,
}

impl RelationReport {
    pub fn ok(&self) -> bool {
        self.witness.is_none()
    }
}

type Vector = BTreeMap<usize, i64>;

impl<L: Clone + Eq + Hash> HeckeModule<L> {
    /// Builds a module from its action table, `table[i - 1][b]`.
    pub fn from_table(rank: usize, basis: Vec<L>, table: Vec<Vec<Action>>) -> Result<Self> {
        if basis.is_empty() {
            return Err(Error::EmptyBasis);
        }
        let index: HashMap<L, usize> = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(k, l)| (l, k))
            .collect();
        assert_eq!(table.len(), rank.saturating_sub(1), "one row per generator");
        for row in &table {
            assert_eq!(row.len(), basis.len(), "action must be total");
            for (b, a) in row.iter().enumerate() {
                if let Action::SendTo(t) = *a {
                    assert!(
                        t < basis.len() && t != b,
                        "SendTo must name another basis element"
                    );
                }
            }
        }
        Ok(HeckeModule {
            rank,
            basis,
            index,
            table,
        })
    }

    /// Builds a module from a rule on labels: `Some(None)` is zero,
    /// `Some(Some(l))` is the image. A label equal to the input means fix.
    pub fn from_rule<F>(rank: usize, basis: Vec<L>, rule: F) -> Result<Self>
    where
        F: Fn(usize, &L) -> Option<L>,
    {
        if basis.is_empty() {
            return Err(Error::EmptyBasis);
        }
        let index: HashMap<L, usize> = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(k, l)| (l, k))
            .collect();
        let mut table = Vec::with_capacity(rank.saturating_sub(1));
        for i in 1..rank {
            let row = basis
                .iter()
                .enumerate()
                .map(|(b, l)| match rule(i, l) {
                    None => Action::Zero,
                    Some(img) => match index.get(&img) {
                        Some(&t) if t == b => Action::Fix,
                        Some(&t) => Action::SendTo(t),
                        None => Action::Zero,
                    },
                })
                .collect();
            table.push(row);
        }
        Ok(HeckeModule {
            rank,
            basis,
            index,
            table,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[L] {
        &self.basis
    }

    pub fn label(&self, b: usize) -> &L {
        &self.basis[b]
    }

    pub fn index_of(&self, label: &L) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn action(&self, i: usize, b: usize) -> Action {
        self.table[i - 1][b]
    }

    /// Replaces one entry; meant for building negative controls.
    pub fn set_action(&mut self, i: usize, b: usize, a: Action) {
        self.table[i - 1][b] = a;
    }

    /// `π_i · b`, or `None` for zero.
    pub fn pi(&self, i: usize, b: usize) -> Option<usize> {
        match self.action(i, b) {
            Action::Fix => Some(b),
            Action::Zero => None,
            Action::SendTo(t) => Some(t),
        }
    }

    /// Applies the letters of `word` in order, first letter first.
    pub fn pi_word_apply(&self, word: &[usize], b: usize) -> Option<usize> {
        word.iter().try_fold(b, |cur, &i| self.pi(i, cur))
    }

    /// `π_σ · b` with `π_σ = π_{i_1} ⋯ π_{i_p}` for a reduced word of `σ`.
    pub fn pi_perm_apply(&self, sigma: &Permutation, b: usize) -> Option<usize> {
        let mut word = sigma.reduced_word();
        word.reverse();
        self.pi_word_apply(&word, b)
    }

    fn apply_vec(&self, i: usize, v: &Vector) -> Vector {
        let mut out = Vector::new();
        for (&b, &c) in v {
            if let Some(t) = self.pi(i, b) {
                *out.entry(t).or_insert(0) += c;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    fn apply_word_vec(&self, word: &[usize], b: usize) -> Vector {
        // The rightmost generator acts first.
        word.iter()
            .rev()
            .fold(Vector::from([(b, 1)]), |v, &i| self.apply_vec(i, &v))
    }

    /// Checks `π_i² = π_i`, the braid relation and far commutation on every
    /// basis vector.
    pub fn verify_relations(&self) -> RelationReport {
        let m = self.rank;
        let mut checked = 0;
        for b in 0..self.dim() {
            for i in 1..m {
                checked += 1;
                if self.apply_word_vec(&[i, i], b) != self.apply_word_vec(&[i], b) {
                    return self.fail(format!("π{i}π{i} = π{i}"), b, checked);
                }
                if i + 1 < m
                    && self.apply_word_vec(&[i, i + 1, i], b)
                        != self.apply_word_vec(&[i + 1, i, i + 1], b)
                {
                    return self.fail(
                        format!("π{i}π{}π{i} = π{}π{i}π{}", i + 1, i + 1, i + 1),
                        b,
                        checked,
                    );
                }
                for j in i + 2..m {
                    if self.apply_word_vec(&[i, j], b) != self.apply_word_vec(&[j, i], b) {
                        return self.fail(format!("π{i}π{j} = π{j}π{i}"), b, checked);
                    }
                }
            }
        }
        RelationReport {
            checked,
            witness: None,
        }
    }

    fn fail(&self, relation: String, basis: usize, checked: usize) -> RelationReport {
        RelationReport {
            checked,
            witness: Some(RelationWitness { relation, basis }),
        }
    }

    /// A linear order on the basis along which every `SendTo` increases, or
    /// the index of an element on a cycle.
    pub fn triangular_order(&self) -> Result<Vec<usize>> {
        let n = self.dim();
        let mut indeg = vec![0usize; n];
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
        for row in &self.table {
            for (b, a) in row.iter().enumerate() {
                if let Action::SendTo(t) = *a {
                    succ[b].push(t);
                    indeg[t] += 1;
                }
            }
        }
        let mut queue: VecDeque<usize> = (0..n).filter(|&b| indeg[b] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(b) = queue.pop_front() {
            order.push(b);
            for &t in &succ[b] {
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    queue.push_back(t);
                }
            }
        }
        if order.len() < n {
            let stuck = (0..n).find(|&b| indeg[b] > 0).unwrap();
            return Err(Error::NotTriangular(stuck));
        }
        Ok(order)
    }

    /// The set of non-fixing generators of basis element `b`.
    pub fn non_fix_set(&self, b: usize) -> BTreeSet<usize> {
        (1..self.rank)
            .filter(|&i| self.action(i, b) != Action::Fix)
            .collect()
    }

    /// Quasisymmetric characteristic, read off a composition series that
    /// exists once the `SendTo` graph is acyclic.
    pub fn characteristic(&self) -> Result<QSymExpr> {
        self.triangular_order()?;
        let mut out = QSymExpr::zero();
        for b in 0..self.dim() {
            let alpha = Composition::from_set(&self.non_fix_set(b), self.rank)?;
            out.add_term(alpha, 1);
        }
        Ok(out)
    }

    /// Basis elements reachable from `b` by nonzero `π` words, including `b`.
    pub fn reachable(&self, b: usize) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([b]);
        let mut queue = VecDeque::from([b]);
        while let Some(x) = queue.pop_front() {
            for i in 1..self.rank {
                if let Action::SendTo(t) = self.action(i, x) {
                    if seen.insert(t) {
                        queue.push_back(t);
                    }
                }
            }
        }
        seen
    }

    /// Elements with no `SendTo` arriving.
    pub fn sources(&self) -> Vec<usize> {
        let mut hit = vec![false; self.dim()];
        for row in &self.table {
            for a in row {
                if let Action::SendTo(t) = *a {
                    hit[t] = true;
                }
            }
        }
        (0..self.dim()).filter(|&b| !hit[b]).collect()
    }

    /// Elements with no `SendTo` leaving.
    pub fn sinks(&self) -> Vec<usize> {
        (0..self.dim())
            .filter(|&b| (1..self.rank).all(|i| !matches!(self.action(i, b), Action::SendTo(_))))
            .collect()
    }

    /// Graphviz rendering of the action graph.
    pub fn to_dot<F: Fn(&L) -> String>(&self, name: &str, label: F) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph \"{}\" {{", name.replace('"', "'"));
        for (b, l) in self.basis.iter().enumerate() {
            let _ = writeln!(
                s,
                "  n{b} [label=\"{}\"];",
                label(l).replace('"', "'").replace('\n', "\\n")
            );
        }
        let mut zero_used = false;
        for b in 0..self.dim() {
            for i in 1..self.rank {
                match self.action(i, b) {
                    Action::Fix => {
                        let _ = writeln!(s, "  n{b} -> n{b} [label=\"{i}\"];");
                    }
                    Action::SendTo(t) => {
                        let _ = writeln!(s, "  n{b} -> n{t} [label=\"{i}\"];");
                    }
                    Action::Zero => {
                        zero_used = true;
                        let _ = writeln!(s, "  n{b} -> zero [label=\"{i}\", style=dashed];");
                    }
                }
            }
        }
        if zero_used {
            let _ = writeln!(s, "  zero [label=\"0\", shape=point];");
        }
        s.push_str("}\n");
        s
    }
}

/// Checks that `f` intertwines the two actions. `f` may send a basis element
/// to zero (`None`).
pub fn verify_module_map<A, B, F>(m1: &HeckeModule<A>, m2: &HeckeModule<B>, f: F) -> bool
where
    A: Clone + Eq + Hash,
    B: Clone + Eq + Hash,
    F: Fn(usize) -> Option<usize>,
{
    if m1.rank() != m2.rank() {
        return false;
    }
    (0..m1.dim()).all(|b| {
        (1..m1.rank()).all(|i| {
            let lhs = m1.pi(i, b).and_then(&f);
            let rhs = f(b).and_then(|x| m2.pi(i, x));
            lhs == rhs
        })
    })
}

/// `G_{λ;m}`: the action of `H_m(0)` on `IGLT(λ; m)`.
pub fn g_module(shape: &Partition, m: usize) -> Result<HeckeModule<Iglt>> {
    HeckeModule::from_rule(m, enumerate_iglt(shape, m), |i, t| t.pi(i))
}

/// The module on a set of tableaux closed under the action; any image
/// outside the set is an error reported as `NotInClass`.
pub fn iglt_submodule(m: usize, members: Vec<Iglt>) -> Result<HeckeModule<Iglt>> {
    let set: std::collections::HashSet<&Iglt> = members.iter().collect();
    for t in &members {
        for i in 1..m {
            if let Some(img) = t.pi(i) {
                if !set.contains(&img) {
                    return Err(Error::NotInClass);
                }
            }
        }
    }
    HeckeModule::from_rule(m, members.clone(), |i, t| t.pi(i))
}

/// `B(σ, ρ)` on the left weak interval `[σ, ρ]_L`.
pub fn b_module(sigma: &Permutation, rho: &Permutation) -> Result<HeckeModule<Permutation>> {
    if !sigma.weak_leq(rho) {
        return Err(Error::NotWeakLeq(sigma.to_string(), rho.to_string()));
    }
    let basis = weak_interval(sigma, rho);
    HeckeModule::from_rule(sigma.rank(), basis, |i, g| {
        if g.is_left_descent(i) {
            Some(g.clone())
        } else {
            Some(g.left_mul_s(i))
        }
    })
}
