mod common;

use wallforge::partition::{
    self, enumerate_class, Color, ColoredPartition, FrobeniusForm, Partition, PartitionClass, QTriple,
};

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn cp(v: &[(u32, char)]) -> ColoredPartition {
    ColoredPartition::new(v.iter().map(|&(x, c)| (x, if c == 'g' { Color::Gray } else { Color::White })).collect()).unwrap()
}

#[test]
fn rejects_increasing_or_zero_parts() {
    assert!(Partition::new(vec![1, 2]).is_err());
    assert!(Partition::new(vec![2, 0, 1]).is_err());
    assert_eq!(Partition::new(vec![2, 0]).unwrap(), p(&[2]));
    assert_eq!(Partition::from_unsorted(vec![1, 3, 0, 2]).parts(), &[3, 2, 1]);
}

#[test]
fn frobenius_of_known_partition() {
    let f = p(&[4, 4, 3, 1, 1, 1]).to_frobenius();
    assert_eq!((f.arms.clone(), f.legs.clone()), (vec![5, 1, 0], vec![3, 2, 0]));
    // exponent notation (1^3,3,4^2) is (4,4,3,1,1,1)
    assert_eq!(Partition::parse("1^3,3,4^2").unwrap(), p(&[4, 4, 3, 1, 1, 1]));
    let f = FrobeniusForm::new(vec![5, 1], vec![3, 2]).unwrap();
    assert_eq!(Partition::from_frobenius(&f).unwrap(), p(&[4, 4, 2, 1, 1, 1]));
    let f = FrobeniusForm::new(vec![3, 1], vec![3, 0]).unwrap();
    assert_eq!(Partition::from_frobenius(&f).unwrap(), Partition::parse("(1,2^2,4)").unwrap());
}

#[test]
fn frobenius_empty_and_malformed() {
    let f = Partition::empty().to_frobenius();
    assert!(f.arms.is_empty() && f.legs.is_empty());
    assert!(FrobeniusForm::new(vec![1, 1], vec![2, 0]).is_err());
    assert!(FrobeniusForm::new(vec![1], vec![2, 0]).is_err());
}

#[test]
fn frobenius_round_trip() {
    for m in 0..=12 {
        for lam in partition::partitions(m) {
            let f = lam.to_frobenius();
            assert_eq!(Partition::from_frobenius(&f).unwrap(), lam);
            // the diagonal hook lengths add up to the size
            let hooks: u32 = f.arms.iter().zip(&f.legs).map(|(a, b)| a + b + 1).sum();
            assert_eq!(hooks, m);
        }
    }
}

#[test]
fn core_of_known_partition() {
    let (core, quot) = p(&[6, 5, 3, 1]).core_quotient(4).unwrap();
    assert_eq!(core, p(&[2, 1]));
    assert_eq!(quot.iter().map(|q| q.size()).sum::<u32>(), 3);
    assert_eq!(Partition::from_core_quotient(&core, &quot, 4).unwrap(), p(&[6, 5, 3, 1]));
    assert_eq!(common::core_by_stripping(&[6, 5, 3, 1], 4), (vec![2, 1], 3));
    let (core, quot) = Partition::empty().core_quotient(3).unwrap();
    assert!(core.is_empty() && quot.iter().all(|q| q.is_empty()) && quot.len() == 3);
    assert!(p(&[1]).core_quotient(1).is_err());
}

#[test]
fn core_quotient_against_stripping() {
    for n in 2..=5u32 {
        for m in 0..=12 {
            for lam in partition::partitions(m) {
                let (core, quot) = lam.core_quotient(n).unwrap();
                let (want, w) = common::core_by_stripping(lam.parts(), n);
                assert_eq!(core.parts(), &want[..], "{lam} n={n}");
                let qs: u32 = quot.iter().map(|q| q.size()).sum();
                assert_eq!(qs, w);
                assert_eq!(m, core.size() + n * qs);
                assert_eq!(Partition::from_core_quotient(&core, &quot, n).unwrap(), lam);
            }
        }
    }
}

#[test]
fn quotient_is_independent_of_bead_count() {
    for n in 2..=4u32 {
        for m in 0..=10 {
            for lam in partition::partitions(m) {
                let r = lam.len().div_ceil(n as usize) * n as usize;
                let a = lam.core_quotient_with_beads(n, r).unwrap();
                let b = lam.core_quotient_with_beads(n, r + n as usize).unwrap();
                assert_eq!(a, b, "{lam} n={n}");
            }
        }
    }
}

#[test]
fn classify() {
    let c = p(&[3, 2, 1]).classify();
    assert!(c.is_strict && c.is_2_reduced);
    // (3,2,1) is itself a 2-core
    assert!(!c.in_dp0 && !c.in_p0);
    let c = Partition::empty().classify();
    assert!(c.is_strict && c.is_2_reduced && c.in_dp0 && c.in_p0);
    let c = p(&[2, 2]).classify();
    assert!(!c.is_strict && c.in_p0);
    let c = p(&[2, 1, 1]).classify();
    assert!(c.is_2_reduced && c.in_dp0);
    assert!(!p(&[4, 2]).is_2_reduced());
}

#[test]
fn dp0_has_partition_count() {
    let pt = common::p_table(20);
    for m in 0..=20u32 {
        assert_eq!(partition::dp0(m).len() as i64, pt[m as usize], "m={m}");
    }
    let three: Vec<Partition> = partition::dp0(3);
    assert_eq!(three.len(), 3);
    assert!(three.iter().all(|x| x.size() == 6 && x.classify().in_dp0));
}

#[test]
fn p0_counts_pairs_of_partitions() {
    let want = common::pow(&common::inv_euler(1, 21), 2);
    for m in 0..=20u32 {
        assert_eq!(partition::p0(m).len() as i64, want[m as usize], "m={m}");
    }
}

#[test]
fn tuple_counts() {
    for k in 1..=4usize {
        let want = common::pow(&common::inv_euler(1, 13), k);
        for m in 0..=12u32 {
            assert_eq!(partition::partition_tuples(k, m).len() as i64, want[m as usize], "k={k} m={m}");
        }
    }
}

#[test]
fn odd_parts() {
    assert_eq!(partition::odd_partitions(0), vec![Partition::empty()]);
    // Euler: odd parts equinumerous with distinct parts
    for m in 0..=20 {
        let strict = enumerate_class(PartitionClass::Strict, m).len();
        assert_eq!(partition::odd_partitions(m).len(), strict);
    }
}

#[test]
fn q_triples_match_product() {
    let want = common::mul(&common::euler(2, 31), &common::pow(&common::inv_euler(1, 31), 2));
    for m in 0..=30u32 {
        assert_eq!(partition::count_q_triples(m) as i64, want[m as usize], "m={m}");
    }
    for m in 0..=8 {
        let ts = partition::q_triples(m);
        let mut sorted = ts.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), ts.len());
        for t in ts {
            t.validate().unwrap();
            assert_eq!(t.weight(), m);
        }
    }
}

#[test]
fn q_triple_validation() {
    let ok = QTriple { mu: p(&[1, 1]), nu: p(&[1]), c: 1 };
    ok.validate().unwrap();
    assert_eq!(ok.weight(), 2);
    // (2,1) is a 2-core
    assert!(QTriple { mu: p(&[2, 1]), nu: p(&[1]), c: 1 }.validate().is_err());
    assert!(QTriple { mu: p(&[2, 1]), nu: p(&[1, 1, 1]), c: 0 }.validate().is_err());
    assert!(QTriple { mu: Partition::empty(), nu: Partition::empty(), c: 1 }.validate().is_err());
    assert!(QTriple { mu: p(&[3, 2, 1]), nu: Partition::empty(), c: 0 }.validate().is_err());
}

#[test]
fn color_split_known() {
    let lam = cp(&[(5, 'g'), (4, 'w'), (3, 'g'), (3, 'g'), (2, 'g'), (1, 'w')]);
    let s = lam.color_split().unwrap();
    assert_eq!(s.white_part, p(&[2, 2, 2, 2, 1, 1]));
    assert_eq!(s.reduced_part, cp(&[(3, 'g'), (2, 'w'), (1, 'g'), (1, 'g'), (1, 'g')]));
    let s = cp(&[(4, 'w')]).color_split().unwrap();
    assert_eq!(s.white_part, p(&[4]));
    assert!(s.reduced_part.is_empty());
}

#[test]
fn colored_addition() {
    let a = cp(&[(1, 'g')]).add(&cp(&[(2, 'g')]));
    assert_eq!(a, cp(&[(3, 'w')]));
    let a = cp(&[(2, 'w')]).add(&cp(&[(3, 'g')]));
    assert_eq!(a, cp(&[(5, 'g')]));
    let x = cp(&[(4, 'g'), (2, 'w')]);
    assert_eq!(x.add(&ColoredPartition::new(vec![]).unwrap()), x);
    // equal values sort gray first, so the rows pair up as 2+1̲ and 1̲+1
    assert_eq!(cp(&[(2, 'w'), (1, 'g')]).add(&cp(&[(1, 'w'), (1, 'g')])), cp(&[(3, 'g'), (2, 'g')]));
}

#[test]
fn p_prime_membership() {
    assert!(cp(&[(2, 'g'), (2, 'g'), (1, 'w')]).in_p_prime());
    assert!(!cp(&[(2, 'g'), (2, 'w')]).in_p_prime());
}

/// Every 2-reduced colored candidate λ¹ ≤ λ that recombines to λ.
fn brute_splits(lam: &ColoredPartition) -> Vec<(Partition, ColoredPartition)> {
    let len = lam.len();
    let mut out = Vec::new();
    let mut cur = vec![0u32; len];
    fn rec(i: usize, lam: &ColoredPartition, cur: &mut Vec<u32>, out: &mut Vec<(Partition, ColoredPartition)>) {
        if i == cur.len() {
            let l1: Vec<u32> = cur.iter().copied().filter(|&v| v > 0).collect();
            let Ok(l1p) = Partition::new(l1.clone()) else { return };
            if !l1p.is_2_reduced() || (!l1p.is_empty() && *l1p.parts().last().unwrap() != 1) {
                return;
            }
            let mut l0 = Vec::new();
            for (j, &(v, _)) in lam.parts().iter().enumerate() {
                if cur[j] > v {
                    return;
                }
                l0.push(v - cur[j]);
            }
            let Ok(l0p) = Partition::new(l0.into_iter().filter(|&v| v > 0).collect()) else { return };
            let l1c = ColoredPartition::new(l1.iter().map(|&v| (v, partition::parity_color(v))).collect()).unwrap();
            if l0p.white().add(&l1c) == *lam {
                out.push((l0p, l1c));
            }
            return;
        }
        for v in 0..=lam.parts()[i].0 {
            cur[i] = v;
            rec(i + 1, lam, cur, out);
        }
    }
    rec(0, lam, &mut cur, &mut out);
    out
}

#[test]
fn color_split_is_the_unique_split() {
    for m in 1..=8u32 {
        for shape in partition::partitions(m) {
            // all colorings that keep one color per value
            let values: Vec<u32> = {
                let mut v = shape.parts().to_vec();
                v.dedup();
                v
            };
            for mask in 0..(1u32 << values.len()) {
                let parts: Vec<(u32, Color)> = shape
                    .parts()
                    .iter()
                    .map(|&x| {
                        let idx = values.iter().position(|&y| y == x).unwrap();
                        (x, if mask >> idx & 1 == 1 { Color::Gray } else { Color::White })
                    })
                    .collect();
                let lam = ColoredPartition::new(parts).unwrap();
                let brute = brute_splits(&lam);
                match lam.color_split() {
                    Ok(s) => {
                        assert_eq!(brute.len(), 1, "{lam}");
                        assert_eq!((s.white_part.clone(), s.reduced_part.clone()), brute[0]);
                    }
                    Err(_) => assert!(brute.is_empty(), "{lam} has split {:?}", brute),
                }
            }
        }
    }
}

#[test]
fn residues() {
    let rc = cp(&[(2, 'w')]).residue_counts();
    assert_eq!((rc.r0, rc.r1, rc.rg0, rc.rg1), (1, 1, 0, 0));
    assert_eq!(ColoredPartition::new(vec![]).unwrap().residue_counts(), Default::default());
    let rc = cp(&[(2, 'g'), (2, 'g'), (2, 'g'), (1, 'w'), (1, 'w')]).residue_counts();
    assert_eq!(rc.rg0, rc.rg1 + 1 - 1 + (rc.rg0 - rc.rg1));
    assert_eq!(rc.r0 + rc.r1 + rc.rg0 + rc.rg1, 8);
}

#[test]
fn class_parsing_and_enumeration() {
    assert_eq!(PartitionClass::parse("dp0").unwrap(), PartitionClass::Dp0);
    assert_eq!(PartitionClass::parse("P3").unwrap(), PartitionClass::Tuples(3));
    assert!(PartitionClass::parse("X").is_err());
    assert_eq!(enumerate_class(PartitionClass::Op, 0).len(), 1);
    assert_eq!(enumerate_class(PartitionClass::Q, 3).len(), 8);
}

#[test]
fn serialization() {
    let x = p(&[3, 1]);
    assert_eq!(serde_json::to_string(&x).unwrap(), "[3,1]");
    assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    let c = cp(&[(2, 'g'), (1, 'w')]);
    assert_eq!(serde_json::to_string(&c).unwrap(), r#"[[2,"g"],[1,"w"]]"#);
    let t = QTriple { mu: p(&[2, 1]), nu: p(&[1]), c: 1 };
    assert_eq!(serde_json::to_value(&t).unwrap(), serde_json::json!({"mu": [2, 1], "nu": [1], "c": 1}));
}

#[test]
fn exponent_notation() {
    let x = Partition::parse("(1^2,5^3,7)").unwrap();
    assert_eq!(x.parts(), &[7, 5, 5, 5, 1, 1]);
    assert_eq!(x.exponent_notation(), "(1^2,5^3,7)");
    assert_eq!(Partition::parse("()").unwrap(), Partition::empty());
    assert!(Partition::parse("(a)").is_err());
}
