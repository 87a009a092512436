//! Permutations in one-line notation and the left weak Bruhat order.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::Composition;
use crate::error::{Error, Result};

/// A permutation of `1..=m`, stored as its one-line word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let m = word.len();
        let mut seen = vec![false; m + 1];
        for &v in &word {
            if v == 0 || v > m || seen[v] {
                return Err(Error::InvalidPermutation(word));
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(m: usize) -> Self {
        Permutation {
            word: (1..=m).collect(),
        }
    }

    /// The longest element `w₀` of `S_m`.
    pub fn longest(m: usize) -> Self {
        Permutation {
            word: (1..=m).rev().collect(),
        }
    }

    /// `w₀(α)`: the longest element of the parabolic subgroup generated by
    /// `{s_i : i ∈ set(α)}`, which reverses each block of `α^c`.
    pub fn parabolic_longest(alpha: &Composition) -> Self {
        Permutation::block_reversal(&alpha.complement())
    }

    /// Reverses each block of consecutive values cut out by `α`, so that
    /// `block_reversal(α) = w₀(α^c)`.
    pub fn block_reversal(alpha: &Composition) -> Self {
        let mut word = Vec::with_capacity(alpha.size());
        let mut start = 0;
        for &p in alpha.parts() {
            word.extend((start + 1..=start + p).rev());
            start += p;
        }
        Permutation { word }
    }

    /// Rebuilds `s_{i_1} ⋯ s_{i_p}` from a word of generator indices.
    pub fn from_word(m: usize, word: &[usize]) -> Result<Self> {
        let mut perm = Permutation::identity(m);
        for &i in word {
            if i == 0 || i >= m {
                return Err(Error::OutOfRange {
                    value: i,
                    bound: m.saturating_sub(1),
                });
            }
            perm.word.swap(i - 1, i);
        }
        Ok(perm)
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn rank(&self) -> usize {
        self.word.len()
    }

    /// `σ(k)` for `1 ≤ k ≤ m`.
    pub fn apply(&self, k: usize) -> usize {
        self.word[k - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut word = vec![0; self.word.len()];
        for (pos, &v) in self.word.iter().enumerate() {
            word[v - 1] = pos + 1;
        }
        Permutation { word }
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Self {
        Permutation {
            word: other.word.iter().map(|&k| self.apply(k)).collect(),
        }
    }

    /// Coxeter length, the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.word;
        (0..w.len())
            .map(|a| (a + 1..w.len()).filter(|&b| w[a] > w[b]).count())
            .sum()
    }

    /// `s_i σ`: swaps the values `i` and `i+1`.
    pub fn left_mul_s(&self, i: usize) -> Self {
        let mut word = self.word.clone();
        for v in word.iter_mut() {
            if *v == i {
                *v = i + 1;
            } else if *v == i + 1 {
                *v = i;
            }
        }
        Permutation { word }
    }

    /// `Des_L(σ)`: the `i` whose value `i+1` appears to the left of `i`.
    pub fn left_descents(&self) -> BTreeSet<usize> {
        let pos = self.inverse();
        (1..self.rank())
            .filter(|&i| pos.apply(i + 1) < pos.apply(i))
            .collect()
    }

    pub fn is_left_descent(&self, i: usize) -> bool {
        let p = |v: usize| self.word.iter().position(|&x| x == v).unwrap();
        p(i + 1) < p(i)
    }

    /// A reduced word `[i_1, …, i_p]` with `σ = s_{i_1} ⋯ s_{i_p}`, found by
    /// repeatedly straightening the leftmost adjacent inversion.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.word.clone();
        let mut rev = Vec::new();
        while let Some(j) = (0..w.len().saturating_sub(1)).find(|&j| w[j] > w[j + 1]) {
            w.swap(j, j + 1);
            rev.push(j + 1);
        }
        rev.reverse();
        rev
    }

    /// `σ ⪯_L ρ` iff `ℓ(ρ) = ℓ(σ) + ℓ(ρσ⁻¹)`.
    pub fn weak_leq(&self, rho: &Permutation) -> bool {
        self.rank() == rho.rank()
            && rho.length() == self.length() + rho.compose(&self.inverse()).length()
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(word: Vec<usize>) -> Result<Self> {
        Permutation::new(word)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.word
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.word.iter().any(|&v| v > 9) {
            " "
        } else {
            ""
        };
        let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(sep))
    }
}

/// `[σ, ρ]_L`, sorted. Empty when `σ ⋠_L ρ`.
pub fn weak_interval(sigma: &Permutation, rho: &Permutation) -> Vec<Permutation> {
    if !sigma.weak_leq(rho) {
        return Vec::new();
    }
    let mut seen = BTreeSet::from([sigma.clone()]);
    let mut queue = VecDeque::from([sigma.clone()]);
    while let Some(g) = queue.pop_front() {
        for i in 1..g.rank() {
            if g.is_left_descent(i) {
                continue;
            }
            let up = g.left_mul_s(i);
            if !seen.contains(&up) && up.weak_leq(rho) {
                seen.insert(up.clone());
                queue.push_back(up);
            }
        }
    }
    seen.into_iter().collect()
}

/// All permutations of `1..=m` in lexicographic order.
pub fn permutations_of(m: usize) -> Vec<Permutation> {
    fn rec(m: usize, used: &mut Vec<bool>, cur: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        if cur.len() == m {
            out.push(Permutation { word: cur.clone() });
            return;
        }
        for v in 1..=m {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(m, used, cur, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(m, &mut vec![false; m + 1], &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(w: &[usize]) -> Permutation {
        Permutation::new(w.to_vec()).unwrap()
    }

    #[test]
    fn descents() {
        assert_eq!(p(&[2, 1, 3, 4]).left_descents(), BTreeSet::from([1]));
        assert!(Permutation::identity(4).left_descents().is_empty());
        assert_eq!(p(&[4, 3, 2, 1]).left_descents(), BTreeSet::from([1, 2, 3]));
    }

    #[test]
    fn intervals() {
        let iv = weak_interval(&p(&[2, 1, 3, 4]), &p(&[4, 1, 2, 3]));
        assert_eq!(
            iv,
            vec![p(&[2, 1, 3, 4]), p(&[3, 1, 2, 4]), p(&[4, 1, 2, 3])]
        );
        let s = p(&[3, 1, 2]);
        assert_eq!(weak_interval(&s, &s), vec![s.clone()]);
        assert_eq!(
            weak_interval(&Permutation::identity(3), &Permutation::longest(3)).len(),
            6
        );
    }

    #[test]
    fn parabolic() {
        let c = |v: &[usize]| Composition::new(v.to_vec()).unwrap();
        assert_eq!(Permutation::block_reversal(&c(&[2, 2])), p(&[2, 1, 4, 3]));
        assert_eq!(
            Permutation::parabolic_longest(&c(&[2, 2])),
            p(&[1, 3, 2, 4])
        );
        assert_eq!(
            Permutation::parabolic_longest(&c(&[1, 1, 1, 1])),
            Permutation::longest(4)
        );
        assert_eq!(
            Permutation::parabolic_longest(&c(&[3])),
            Permutation::identity(3)
        );
        assert_eq!(
            Permutation::block_reversal(&c(&[4])),
            Permutation::longest(4)
        );
        // w₀((1,4)) = s₁
        assert_eq!(
            Permutation::parabolic_longest(&c(&[1, 4])),
            p(&[2, 1, 3, 4, 5])
        );
    }

    #[test]
    fn reduced_words() {
        assert!(Permutation::identity(3).reduced_word().is_empty());
        assert_eq!(p(&[2, 1, 3, 4]).reduced_word(), vec![1]);
        assert_eq!(p(&[4, 1, 2, 3]).reduced_word().len(), 3);
        for s in permutations_of(5) {
            let w = s.reduced_word();
            assert_eq!(w.len(), s.length());
            assert_eq!(Permutation::from_word(5, &w).unwrap(), s);
        }
    }

    #[test]
    fn left_multiplication_matches_word() {
        let s = p(&[3, 1, 2, 4]);
        let s2 = Permutation::from_word(4, &[2]).unwrap();
        assert_eq!(s.left_mul_s(2), s2.compose(&s));
    }
}
