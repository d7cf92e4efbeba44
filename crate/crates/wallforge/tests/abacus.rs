use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use wallforge::abacus::{
    self, apply_move, applicable_moves, from_beads, move_label, parse_move, pi_forward, pi_inverse, reduce, reduce_with,
    runner_kind, to_beads, weight_condition, Move, MoveKind, RunnerKind, Sector, TupleImage,
};
use wallforge::examples::{beads, run_all};
use wallforge::partition::{Color, ColoredPartition};
use wallforge::{AffineData, Content, Family, Model, Partition, Wall};

fn models() -> Vec<Model> {
    let mut out = Vec::new();
    for f in Family::ALL {
        let n = f.min_rank();
        for &l in &AffineData::new(f, n).unwrap().level1_weights {
            out.push(Model::new(f, n, l).unwrap());
        }
    }
    out.push(Model::new(Family::A2even, 2, 0).unwrap());
    out
}

fn name(m: &Model) -> String {
    format!("{} n={} Λ{}", m.family(), m.n(), m.lambda())
}

fn sectors(m: &Model) -> Vec<Sector> {
    if m.family() == Family::B1 && m.lambda() == 0 {
        vec![Sector::Diagonal, Sector::Cross]
    } else {
        vec![Sector::Diagonal]
    }
}

fn sector_content(m: &Model, sector: Sector, k: u64) -> Content {
    let d = m.data().delta_content(k);
    match sector {
        Sector::Diagonal => d,
        Sector::Cross => Content(m.data().gamma.clone().unwrap()).add(&d),
    }
}

#[test]
fn worked_examples() {
    for c in run_all().unwrap() {
        assert!(c.ok(), "{}: expected {}, got {}", c.name, c.expected, c.actual);
    }
}

#[test]
fn beads_round_trip() {
    for model in models() {
        for w in model.enumerate_blocks(12) {
            let cfg = to_beads(&model, &w).unwrap();
            assert_eq!(from_beads(&model, &cfg).unwrap(), w, "{}", name(&model));
            assert_eq!(abacus::BeadConfig::from_json(&cfg.to_json(&model)).unwrap(), cfg);
        }
    }
    // rank 3 in the families whose minimal rank is smaller
    for (f, l) in [(Family::A2even, 0), (Family::D2, 3)] {
        let model = Model::new(f, 3, l).unwrap();
        for w in model.enumerate_blocks(14) {
            assert_eq!(from_beads(&model, &to_beads(&model, &w).unwrap()).unwrap(), w);
        }
    }
}

#[test]
fn runner_layout() {
    let a4 = Model::new(Family::A2even, 2, 0).unwrap();
    assert_eq!(runner_kind(&a4, 5), RunnerKind::II);
    assert_eq!(runner_kind(&a4, 4), RunnerKind::I);
    let a5 = Model::new(Family::A2odd, 3, 0).unwrap();
    assert_eq!(runner_kind(&a5, 10), RunnerKind::III);
    let b0 = Model::new(Family::B1, 3, 0).unwrap();
    assert_eq!(runner_kind(&b0, 12), RunnerKind::III);
    assert_eq!(runner_kind(&b0, 9), RunnerKind::II);
    let b3 = Model::new(Family::B1, 3, 3).unwrap();
    assert_eq!(runner_kind(&b3, 12), RunnerKind::II);
    assert_eq!(runner_kind(&b3, 9), RunnerKind::III);
}

#[test]
fn every_move_removes_multiples_of_delta() {
    for model in models() {
        if model.family() == Family::A1 {
            continue;
        }
        for w in model.enumerate_blocks(14) {
            let cfg = to_beads(&model, &w).unwrap();
            let before = model.content(&w);
            for mv in applicable_moves(&model, &cfg) {
                let (next, d) = apply_move(&model, &cfg, mv).unwrap();
                let nw = from_beads(&model, &next).unwrap_or_else(|e| panic!("{} {w} {mv:?}: {e}", name(&model)));
                let after = model.content(&nw);
                assert_eq!(after.add(&model.data().delta_content(d as u64)), before, "{} {w} {mv:?}", name(&model));
            }
        }
    }
}

#[test]
fn move_labels() {
    assert_eq!(move_label(Family::A2even, MoveKind::PairRemove), "B3");
    assert_eq!(move_label(Family::D1, MoveKind::PairRemove), "B2");
    assert_eq!(parse_move(Family::B1, "b5").unwrap(), MoveKind::RemoveTwoAtN);
    assert!(parse_move(Family::A2odd, "B4").is_err());
    assert!(parse_move(Family::A1, "B1").is_err());
}

#[test]
fn guards() {
    let a4 = Model::new(Family::A2even, 2, 0).unwrap();
    let cfg = beads(&[(1, 1, ' '), (4, 1, ' '), (5, 3, ' '), (7, 1, ' '), (10, 1, ' ')]);
    // 2 is already taken by nothing, but 4 - 5 is below the first row
    assert!(apply_move(&a4, &cfg, Move { kind: MoveKind::SlideI, pos: 4 }).is_err());
    assert!(apply_move(&a4, &cfg, Move { kind: MoveKind::PairRemove, pos: 2 }).is_err());
    assert!(apply_move(&a4, &cfg, Move { kind: MoveKind::RemoveTwoAtN, pos: 2 }).is_err());
    assert!(apply_move(&a4, &cfg, Move { kind: MoveKind::RemoveAtEll, pos: 5 }).is_ok());
    let a1 = Model::new(Family::A1, 2, 0).unwrap();
    let w = Wall::from_heights(&[2, 1]);
    assert!(applicable_moves(&a1, &to_beads(&a1, &w).unwrap()).is_empty());
}

#[test]
fn reduction_leaves_nothing_to_do() {
    for model in models() {
        for w in model.enumerate_blocks(12) {
            let (rw, red) = abacus::reduce_wall(&model, &w).unwrap();
            assert!(applicable_moves(&model, &red.reduced).is_empty());
            let total: u32 = red.moves.values().sum();
            assert_eq!(total == 0, rw == w);
            assert_eq!(model.content(&rw).add(&model.data().delta_content(red.delta_removed)), model.content(&w));
        }
    }
}

fn random_wall(rng: &mut StdRng, pool: &[Wall]) -> Wall {
    pool[rng.gen_range(0..pool.len())].clone()
}

#[test]
fn reduction_is_confluent() {
    let mut rng = StdRng::seed_from_u64(7);
    for model in models() {
        if model.family() == Family::A1 {
            continue;
        }
        let pool = model.enumerate_blocks(16);
        for _ in 0..50 {
            let w = random_wall(&mut rng, &pool);
            let cfg = to_beads(&model, &w).unwrap();
            let canon = reduce(&model, &cfg);
            for _ in 0..2 {
                let mut r = StdRng::seed_from_u64(rng.gen());
                let other = reduce_with(&model, &cfg, |m| r.gen_range(0..m.len()));
                assert_eq!(other.reduced, canon.reduced, "{} {w}", name(&model));
                assert_eq!(other.delta_removed, canon.delta_removed);
            }
        }
    }
}

#[test]
fn weight_condition_agrees_with_content() {
    for model in models() {
        for w in model.enumerate_blocks(12) {
            let cfg = to_beads(&model, &w).unwrap();
            let c = model.content(&w);
            for sector in sectors(&model) {
                let want = match sector {
                    Sector::Diagonal => model.data().is_delta_multiple(&c).is_some(),
                    Sector::Cross => model.data().is_gamma_plus_delta_multiple(&c).is_some(),
                };
                assert_eq!(weight_condition(&model, &cfg, sector), want, "{} {w} {sector:?}", name(&model));
            }
        }
    }
}

/// Walls whose beads all sit on the colored runner, built from two-colored
/// partitions with one color per part value.
fn colored_walls(model: &Model, max_size: u32) -> Vec<(Wall, ColoredPartition)> {
    let ell = model.data().ell;
    let mut out = Vec::new();
    for size in 0..=max_size {
        for shape in wallforge::partition::partitions(size) {
            let mut values = shape.parts().to_vec();
            values.dedup();
            for mask in 0..(1u32 << values.len()) {
                let color = |i: usize| if mask >> i & 1 == 1 { Color::Gray } else { Color::White };
                let mut cfg = abacus::BeadConfig::new(None);
                for (i, &v) in values.iter().enumerate() {
                    let count = shape.parts().iter().filter(|&&p| p == v).count() as u32;
                    cfg.add(v * ell, count, Some(color(i))).unwrap();
                }
                let Ok(w) = from_beads(model, &cfg) else { continue };
                let lam = ColoredPartition::new(
                    shape.parts().iter().map(|&p| (p, color(values.iter().position(|&v| v == p).unwrap()))).collect(),
                )
                .unwrap();
                out.push((w, lam));
            }
        }
    }
    out
}

#[test]
fn residues_detect_delta_multiples() {
    for (f, n, l) in [(Family::A2odd, 3, 0), (Family::A2odd, 3, 1), (Family::D1, 3, 0), (Family::D1, 3, 1)] {
        let model = Model::new(f, n, l).unwrap();
        let walls = colored_walls(&model, 8);
        let mut hits = 0;
        for (w, lam) in &walls {
            let rc = lam.residue_counts();
            let mut want = rc.rg0 == rc.rg1;
            if f == Family::D1 {
                want &= rc.r0 == rc.r1;
            }
            let got = model.data().is_delta_multiple(&model.content(w)).is_some();
            assert_eq!(got, want, "{f} Λ{l} {w} {lam}");
            hits += usize::from(got);
        }
        assert!(walls.len() > 50 && hits > 5, "{f} Λ{l}: {} walls, {hits} in δ-strings", walls.len());
    }
}

#[test]
fn bijection_round_trips_and_counts() {
    for model in models() {
        for sector in sectors(&model) {
            for m in 0..=4u64 {
                let walls = model.enumerate_content(&sector_content(&model, sector, m)).unwrap();
                let targets = abacus::enumerate_targets(&model, sector, m).unwrap();
                let mut images = BTreeSet::new();
                for w in &walls {
                    let (mm, t) = pi_forward(&model, w).unwrap();
                    assert_eq!(mm, m, "{} {w}", name(&model));
                    assert_eq!(t.weight(model.family()), m);
                    assert_eq!(&pi_inverse(&model, &t).unwrap(), w);
                    images.insert(serde_json::to_string(&t).unwrap());
                }
                let target_set: BTreeSet<String> = targets.iter().map(|t| serde_json::to_string(t).unwrap()).collect();
                assert_eq!(target_set.len(), targets.len());
                assert_eq!(images, target_set, "{} {sector:?} m={m}", name(&model));
                for t in &targets {
                    let w = pi_inverse(&model, t).unwrap();
                    assert_eq!(&pi_forward(&model, &w).unwrap().1, t);
                }
            }
        }
    }
}

#[test]
fn cross_case_mu1_has_empty_two_core() {
    let model = Model::new(Family::B1, 3, 0).unwrap();
    for m in 0..=4 {
        for w in model.enumerate_content(&sector_content(&model, Sector::Cross, m)).unwrap() {
            let TupleImage::BCross { odd, lambdas, mu0, mu1 } = pi_forward(&model, &w).unwrap().1 else {
                panic!("cross walls map to cross tuples")
            };
            assert!(mu1.classify().in_dp0, "{w}");
            assert!(odd.size() % 2 == 1 && odd.parts().iter().all(|p| p % 2 == 1));
            let rest = m - lambdas.iter().map(|p| p.size() as u64).sum::<u64>() - (odd.size() as u64 - 1) / 2;
            assert_eq!(mu0.size() as u64 + mu1.size() as u64, rest);
        }
    }
}

#[test]
fn bad_tuples_are_rejected() {
    let model = Model::new(Family::B1, 3, 3).unwrap();
    let p = |v: &[u32]| Partition::new(v.to_vec()).unwrap();
    let bad = TupleImage::BSpin {
        lambda0: Partition::empty(),
        lambdas: vec![Partition::empty(), Partition::empty()],
        triple: wallforge::partition::QTriple { mu: p(&[2, 1]), nu: Partition::empty(), c: 0 },
    };
    assert!(pi_inverse(&model, &bad).is_err());
    let wrong_shape = TupleImage::A1 { quotient: vec![] };
    assert!(pi_inverse(&model, &wrong_shape).is_err());
}

#[test]
fn qtriple_extraction_inverts_coloring() {
    for m in 0..=8 {
        for t in wallforge::partition::q_triples(m) {
            let lam = abacus::qtriple_colored(&t);
            assert_eq!(abacus::extract_qtriple(&lam).unwrap(), t);
        }
    }
    let lam = ColoredPartition::new(vec![(1, Color::Gray), (1, Color::White)]).unwrap();
    assert!(abacus::extract_qtriple(&lam).is_err());
}

#[test]
fn tuple_json_shape() {
    let t = TupleImage::Twisted { lambda0: Partition::new(vec![1]).unwrap(), lambdas: vec![Partition::empty()] };
    let v = serde_json::to_value(&t).unwrap();
    assert_eq!(v, serde_json::json!({"kind": "twisted", "lambda0": [1], "lambdas": [[]]}));
    assert_eq!(serde_json::from_value::<TupleImage>(v).unwrap(), t);
    assert_eq!(t.exponent_notation(), "((1),())");
}
