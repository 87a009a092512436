use std::collections::BTreeSet;

use proptest::prelude::*;

use gapless_hecke::combinatorics::{compositions_of, partitions_of};
use gapless_hecke::hecke::{b_module, g_module, verify_module_map};
use gapless_hecke::projective::{bullet_srt, odot_srt};
use gapless_hecke::ribbon::{canonical_srt, enumerate_srt, p_module};
use gapless_hecke::tableau::enumerate_iglt;
use gapless_hecke::{Composition, GeneralizedComposition, Iglt, Partition, Permutation, QSymExpr};

fn composition() -> impl Strategy<Value = Composition> {
    prop::collection::vec(1usize..4, 1..4).prop_map(|v| Composition::new(v).unwrap())
}

fn gen_composition() -> impl Strategy<Value = GeneralizedComposition> {
    prop::collection::vec(composition(), 1..5).prop_map(|b| GeneralizedComposition::new(b).unwrap())
}

fn qsym() -> impl Strategy<Value = QSymExpr> {
    prop::collection::vec((composition(), -3i64..4), 0..5).prop_map(|terms| {
        let mut e = QSymExpr::zero();
        for (a, c) in terms {
            e.add_term(a, c);
        }
        e
    })
}

fn permutation(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max)
        .prop_flat_map(|m| Just((1..=m).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|w| Permutation::new(w).unwrap())
}

/// Every generalized composition of `n`: a composition cut into blocks.
fn all_gen_compositions(n: usize) -> Vec<GeneralizedComposition> {
    let mut out = Vec::new();
    for alpha in compositions_of(n) {
        let parts = alpha.parts().to_vec();
        let cuts = parts.len() - 1;
        for mask in 0u32..(1 << cuts) {
            let mut blocks = vec![vec![parts[0]]];
            for (k, &p) in parts.iter().enumerate().skip(1) {
                if mask & (1 << (k - 1)) != 0 {
                    blocks.push(vec![p]);
                } else {
                    blocks.last_mut().unwrap().push(p);
                }
            }
            let blocks = blocks
                .into_iter()
                .map(|b| Composition::new(b).unwrap())
                .collect();
            out.push(GeneralizedComposition::new(blocks).unwrap());
        }
    }
    out
}

/// `n! / Π hooks`.
fn hook_count(shape: &Partition) -> usize {
    let n = shape.size();
    let num: u128 = (1..=n as u128).product();
    let hooks: u128 = (1..=shape.len())
        .flat_map(|r| (1..=shape.row_len(r)).map(move |c| (r, c)))
        .map(|(r, c)| (shape.row_len(r) - c + shape.col_len(c) - r + 1) as u128)
        .product();
    (num / hooks) as usize
}

proptest! {
    #[test]
    fn set_round_trip(n in 1usize..=10, bits in any::<u16>()) {
        let set: BTreeSet<usize> = (1..n).filter(|i| bits & (1 << i) != 0).collect();
        let alpha = Composition::from_set(&set, n).unwrap();
        prop_assert_eq!(alpha.size(), n);
        prop_assert_eq!(alpha.set(), set.clone());
        prop_assert_eq!(alpha.complement().complement(), alpha.clone());
        let comp_set: BTreeSet<usize> = (1..n).filter(|i| !set.contains(i)).collect();
        prop_assert_eq!(alpha.complement().set(), comp_set);
    }

    #[test]
    fn bracket_size(g in gen_composition()) {
        let bracket = g.bracket();
        prop_assert_eq!(bracket.len(), 1 << (g.blocks().len() - 1));
        prop_assert!(bracket.contains(&g.bullet()));
        prop_assert!(bracket.contains(&g.odot()));
        prop_assert!(bracket.iter().all(|a| a.size() == g.size()));
    }

    #[test]
    fn qsym_laws(a in qsym(), b in qsym(), c in qsym(), k in -3i64..4) {
        prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
        prop_assert!((a.clone() + -a.clone()).is_zero());
        prop_assert_eq!((a.clone() + b.clone()).scale(k), a.scale(k) + b.scale(k));
        prop_assert_eq!(QSymExpr::from_json(&a.to_json()).unwrap(), a.clone());
        prop_assert!(a.terms().all(|(_, c)| c != 0));
    }

    #[test]
    fn pi_sigma_independent_of_reduced_word(
        shape_pick in 0usize..100,
        sigma in permutation(6),
        seed in prop::collection::vec(0usize..8, 0..40),
    ) {
        let m = sigma.rank();
        let shapes: Vec<(Partition, usize)> = (m..=m + 2)
            .flat_map(|n| partitions_of(n).into_iter().map(move |p| (p, n)))
            .filter(|(p, _)| !enumerate_iglt(p, m).is_empty())
            .collect();
        prop_assume!(!shapes.is_empty());
        let (shape, _) = &shapes[shape_pick % shapes.len()];
        let module = g_module(shape, m).unwrap();
        // A second reduced word, peeling left descents chosen by `seed`.
        let mut word = Vec::new();
        let mut rest = sigma.clone();
        let mut k = 0;
        while rest.length() > 0 {
            let des: Vec<usize> = rest.left_descents().into_iter().collect();
            let i = des[seed.get(k).copied().unwrap_or(0) % des.len()];
            word.push(i);
            rest = rest.left_mul_s(i);
            k += 1;
        }
        prop_assert_eq!(Permutation::from_word(m, &word).unwrap(), sigma.clone());
        let reversed: Vec<usize> = word.iter().rev().copied().collect();
        for b in 0..module.dim() {
            prop_assert_eq!(module.pi_perm_apply(&sigma, b), module.pi_word_apply(&reversed, b));
        }
    }
}

#[test]
fn iglt_round_trip_and_hook_lengths() {
    for n in 1..=7 {
        for shape in partitions_of(n) {
            let standard = enumerate_iglt(&shape, n);
            assert_eq!(standard.len(), hook_count(&shape), "f^{shape}");
            for m in 1..=n {
                for t in enumerate_iglt(&shape, m) {
                    assert_eq!(Iglt::validate(&shape, t.rows().to_vec()).unwrap(), t);
                    let json = serde_json::to_string(&t).unwrap();
                    assert_eq!(serde_json::from_str::<Iglt>(&json).unwrap(), t);
                }
            }
        }
    }
}

#[test]
fn lread_is_an_interval_isomorphism() {
    for n in 1..=6 {
        for g in all_gen_compositions(n) {
            let lo = Permutation::parabolic_longest(&g.bullet().complement());
            let hi = Permutation::longest(n).compose(&Permutation::parabolic_longest(&g.odot()));
            let p = p_module(&g).unwrap();
            let b = b_module(&lo, &hi).unwrap();
            let reads: BTreeSet<Permutation> =
                enumerate_srt(&g).iter().map(|s| s.lread()).collect();
            assert_eq!(reads.len(), p.dim(), "lread injective on SRT({g})");
            assert_eq!(
                reads.into_iter().collect::<Vec<_>>(),
                b.basis().to_vec(),
                "image of SRT({g})"
            );
            assert!(
                verify_module_map(&p, &b, |k| b.index_of(&p.label(k).lread())),
                "{g}"
            );

            let bullet = bullet_srt(&g).unwrap();
            assert_eq!(bullet.lread(), lo);
            assert_eq!(bullet, canonical_srt(&g));
            let odot = odot_srt(&g).unwrap();
            assert_eq!(
                odot.lread(),
                Permutation::parabolic_longest(&g.odot().complement())
            );
            let top = p.index_of(&bullet).unwrap();
            assert_eq!(
                p.reachable(top).len(),
                p.dim(),
                "P_{g} is generated by its canonical SRT"
            );
        }
    }
}
