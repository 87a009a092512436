use gapless_hecke::combinatorics::partitions_of;
use gapless_hecke::equivalence::{class_containing, classes};
use gapless_hecke::projective::{bal_e, EtaContext};
use gapless_hecke::reading::{sfread_with, strips};
use gapless_hecke::ribbon::enumerate_srt;
use gapless_hecke::suite::shape_jobs;

#[test]
fn nonattacking_step_multiplies_reading_word() {
    for n in 1..=6 {
        for (shape, m) in shape_jobs(n) {
            for class in classes(&shape, m).unwrap() {
                let s = strips(&class.source);
                for t in &class.members {
                    let w = sfread_with(&s, t).unwrap();
                    for i in 1..m {
                        match t.pi(i) {
                            Some(u) if &u != t => {
                                let v = sfread_with(&s, &u).unwrap();
                                assert_eq!(v, w.left_mul_s(i), "{t:?} π{i}");
                                assert_eq!(v.length(), w.length() + 1);
                            }
                            _ => {}
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn generated_class_matches_enumerated_class() {
    for n in 1..=6 {
        for (shape, m) in shape_jobs(n) {
            for class in classes(&shape, m).unwrap() {
                let last = class.members.last().unwrap();
                assert_eq!(class_containing(last).unwrap(), class);
            }
        }
    }
}

#[test]
fn eta_dictionary() {
    for n in 1..=6 {
        for (shape, m) in shape_jobs(n) {
            for class in classes(&shape, m).unwrap() {
                let ctx = EtaContext::new(&class).unwrap();
                assert_eq!(ctx.bal, bal_e(&class.source).unwrap());
                assert_eq!(ctx.bal.size(), m);
                let heights: Vec<usize> = ctx.columns.iter().map(Vec::len).collect();
                let mut d = vec![0];
                d.extend(class.source.descents());
                d.push(m);
                let expected: Vec<usize> = d.windows(2).map(|w| w[1] - w[0]).collect();
                assert_eq!(heights, expected);
                for t in &class.members {
                    let s = ctx.srt_of_t(t).unwrap();
                    assert_eq!(ctx.eta(&s).as_ref(), Some(t));
                }
                let hits = enumerate_srt(&ctx.bal)
                    .iter()
                    .filter(|s| ctx.eta(s).is_some())
                    .count();
                assert!(hits >= class.len());
            }
        }
    }
}

#[test]
fn classes_partition_each_shape() {
    for n in 1..=6 {
        for shape in partitions_of(n) {
            for m in 1..=n {
                let total: usize = classes(&shape, m).unwrap().iter().map(|c| c.len()).sum();
                assert_eq!(
                    total,
                    gapless_hecke::tableau::enumerate_iglt(&shape, m).len()
                );
            }
        }
    }
}
