//! Bead configurations of walls with their reduction moves. The bijections
//! between weight spaces and tuples of partitions are built on top.
//!
//! Colors on type III runners obey one invariant under every move: a bead's
//! color XOR the parity of the number of beads at larger positions is
//! unchanged. The inverse maps use that to recolor after placing beads.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::affine::Family;
use crate::error::{invalid, Error, Result};
use crate::partition::{self, parity_color, Color, ColoredPartition, FrobeniusForm, Partition, QTriple};
use crate::wall::{Column, Model, Orient, Wall};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RunnerKind {
    /// At most one bead per position; beads slide by `L`.
    I,
    /// Several colorless beads per position.
    II,
    /// Several beads of one color per position; never moved.
    III,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bead {
    pub pos: u32,
    pub count: u32,
    pub color: Option<Color>,
}

/// Beads by position. For type A walls `r` is the bead count and positions
/// are the shifted parts `b_k + r - k + 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BeadConfig {
    pub r: Option<u32>,
    beads: BTreeMap<u32, (u32, Option<Color>)>,
}

impl BeadConfig {
    pub fn new(r: Option<u32>) -> BeadConfig {
        BeadConfig { r, beads: BTreeMap::new() }
    }

    pub fn from_beads(r: Option<u32>, beads: &[Bead]) -> Result<BeadConfig> {
        let mut cfg = BeadConfig::new(r);
        for b in beads {
            cfg.add(b.pos, b.count, b.color)?;
        }
        Ok(cfg)
    }

    pub fn add(&mut self, pos: u32, count: u32, color: Option<Color>) -> Result<()> {
        if pos == 0 {
            return invalid("bead positions start at 1");
        }
        if count == 0 {
            return Ok(());
        }
        let e = self.beads.entry(pos).or_insert((0, color));
        if e.1 != color {
            return invalid(format!("beads at {pos} would mix colors"));
        }
        e.0 += count;
        Ok(())
    }

    fn remove(&mut self, pos: u32, count: u32) {
        let e = self.beads.get_mut(&pos).expect("bead present");
        e.0 -= count;
        if e.0 == 0 {
            self.beads.remove(&pos);
        }
    }

    pub fn count(&self, pos: u32) -> u32 {
        self.beads.get(&pos).map_or(0, |e| e.0)
    }

    pub fn color(&self, pos: u32) -> Option<Color> {
        self.beads.get(&pos).and_then(|e| e.1)
    }

    pub fn beads(&self) -> Vec<Bead> {
        self.beads.iter().map(|(&pos, &(count, color))| Bead { pos, count, color }).collect()
    }

    pub fn total(&self) -> u32 {
        self.beads.values().map(|e| e.0).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.beads.is_empty()
    }

    fn beads_above(&self, pos: u32) -> u32 {
        self.beads.range(pos + 1..).map(|(_, e)| e.0).sum()
    }

    /// Color XOR parity of the beads at larger positions.
    fn normalized(&self, pos: u32) -> Option<Color> {
        self.color(pos).map(|c| c.flip_if(self.beads_above(pos) % 2 == 1))
    }

    fn flip_between(&mut self, lo: u32, hi: u32) {
        for (_, e) in self.beads.range_mut(lo + 1..hi) {
            if let Some(c) = e.1.as_mut() {
                *c = c.flip();
            }
        }
    }

    pub fn to_json(&self, model: &Model) -> Value {
        let beads: Vec<Value> = self
            .beads()
            .iter()
            .map(|b| json!({ "pos": b.pos, "count": b.count, "color": b.color }))
            .collect();
        let mut layout = json!({
            "family": model.family().name(),
            "n": model.n(),
            "lambda": model.lambda(),
        });
        if let Some(r) = self.r {
            layout["r"] = json!(r);
        }
        json!({ "runner_layout": layout, "beads": beads })
    }

    pub fn from_json(v: &Value) -> Result<BeadConfig> {
        let r = v["runner_layout"]["r"].as_u64().map(|r| r as u32);
        let beads: Vec<Bead> = serde_json::from_value(v["beads"].clone())
            .map_err(|e| Error::Invalid(format!("bad bead list: {e}")))?;
        BeadConfig::from_beads(r, &beads)
    }
}

impl std::fmt::Display for BeadConfig {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: Vec<String> = self
            .beads()
            .iter()
            .map(|b| {
                let c = match b.color {
                    Some(Color::White) => "w",
                    Some(Color::Gray) => "g",
                    None => "",
                };
                if b.count == 1 { format!("{}{c}", b.pos) } else { format!("{}{c}x{}", b.pos, b.count) }
            })
            .collect();
        write!(f, "{{{}}}", s.join(", "))
    }
}

/// Which part of the abacus theory a family belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Section {
    TypeA,
    /// A2even and D2: one colorless special runner.
    Twisted,
    /// A2odd and D1: one colored special runner.
    Colored,
    /// B1 with Λ_0 or Λ_1.
    BSplit,
    /// B1 with Λ_n.
    BSpin,
}

fn section(model: &Model) -> Section {
    match model.family() {
        Family::A1 => Section::TypeA,
        Family::A2even | Family::D2 => Section::Twisted,
        Family::A2odd | Family::D1 => Section::Colored,
        Family::B1 if model.lambda() == model.n() => Section::BSpin,
        Family::B1 => Section::BSplit,
    }
}

pub fn runner_kind(model: &Model, pos: u32) -> RunnerKind {
    let d = model.data();
    let n = model.n();
    match section(model) {
        Section::TypeA => RunnerKind::I,
        Section::Twisted if pos.is_multiple_of(d.ell) => RunnerKind::II,
        Section::Colored if pos.is_multiple_of(d.ell) => RunnerKind::III,
        Section::BSplit if pos.is_multiple_of(2 * n) => RunnerKind::III,
        Section::BSplit if pos.is_multiple_of(n) => RunnerKind::II,
        Section::BSpin if pos.is_multiple_of(2 * n) => RunnerKind::II,
        Section::BSpin if pos.is_multiple_of(n) => RunnerKind::III,
        _ => RunnerKind::I,
    }
}

/// Residues `k` whose runners pair with `L - k` in the first map.
fn type_one_pairs(model: &Model) -> Vec<u32> {
    let n = model.n();
    match model.family() {
        Family::A1 => Vec::new(),
        Family::A2even | Family::D2 => (1..=n).collect(),
        _ => (1..n).collect(),
    }
}

/// Step of the colorless runner and its lowest position.
fn type_two_runner(model: &Model) -> Option<(u32, u32)> {
    let d = model.data();
    match section(model) {
        Section::Twisted => Some((d.ell, d.ell)),
        Section::BSplit => Some((2 * model.n(), model.n())),
        Section::BSpin => Some((2 * model.n(), 2 * model.n())),
        _ => None,
    }
}

/// Position of the colored runner's beads as a function of the part they encode.
fn colored_position(model: &Model, part: u32) -> u32 {
    let n = model.n();
    match section(model) {
        Section::BSpin => (2 * part - 1) * n,
        Section::BSplit => 2 * n * part,
        _ => model.data().ell * part,
    }
}

fn colored_part(model: &Model, pos: u32) -> u32 {
    let n = model.n();
    match section(model) {
        Section::BSpin => (pos / n).div_ceil(2),
        Section::BSplit => pos / (2 * n),
        _ => pos / model.data().ell,
    }
}

pub fn to_beads(model: &Model, w: &Wall) -> Result<BeadConfig> {
    model.check_valid(w)?;
    if model.family() == Family::A1 {
        let n = model.n() as usize;
        let r = w.columns.len().div_ceil(n) * n;
        return to_beads_a1(w, r as u32);
    }
    let mut cfg = BeadConfig::new(None);
    for col in &w.columns {
        let color = match runner_kind(model, col.b) {
            RunnerKind::III => Some(match col.orient {
                Some(Orient::UL) => Color::Gray,
                _ => Color::White,
            }),
            _ => None,
        };
        cfg.add(col.b, 1, color)?;
    }
    Ok(cfg)
}

/// Type A beads `b_k + r - k + 1` for a chosen `r ≥ ℓ(Y)`.
pub fn to_beads_a1(w: &Wall, r: u32) -> Result<BeadConfig> {
    if (r as usize) < w.columns.len() {
        return invalid(format!("bead count {r} is below the number of columns {}", w.columns.len()));
    }
    let mut cfg = BeadConfig::new(Some(r));
    for k in 1..=r {
        cfg.add(w.column(k as usize).b + r - k + 1, 1, None)?;
    }
    Ok(cfg)
}

pub fn from_beads(model: &Model, cfg: &BeadConfig) -> Result<Wall> {
    let mut positions: Vec<(u32, Option<Color>)> = Vec::new();
    for b in cfg.beads() {
        let kind = runner_kind(model, b.pos);
        if kind == RunnerKind::I && b.count > 1 && model.family() != Family::A1 {
            return invalid(format!("type I position {} holds {} beads", b.pos, b.count));
        }
        if (kind == RunnerKind::III) != b.color.is_some() {
            return invalid(format!("bead at {} has the wrong color data for its runner", b.pos));
        }
        for _ in 0..b.count {
            positions.push((b.pos, b.color));
        }
    }
    positions.sort_by(|a, b| b.0.cmp(&a.0));
    let w = if model.family() == Family::A1 {
        let r = cfg.r.ok_or_else(|| Error::Invalid("type A bead configurations need r".into()))?;
        if positions.len() != r as usize || positions.windows(2).any(|p| p[0].0 == p[1].0) {
            return invalid("type A configurations need r distinct beads");
        }
        let mut bs = Vec::new();
        for (idx, &(z, _)) in positions.iter().enumerate() {
            let floor = r - idx as u32;
            if z < floor {
                return invalid("bead below the staircase");
            }
            bs.push(z - floor);
        }
        Wall::from_heights(&bs)
    } else {
        Wall::new(
            positions
                .iter()
                .map(|&(b, c)| Column::new(b, c.map(|c| if c == Color::Gray { Orient::UL } else { Orient::LR })))
                .collect(),
        )
    };
    model.check_valid(&w)?;
    Ok(w)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum MoveKind {
    /// Move a type I bead up by `L`.
    SlideI,
    /// Move a colorless bead up one step on its runner.
    SlideII,
    /// Remove a mirror pair `s`, `L - s` from the first row.
    PairRemove,
    /// Remove one bead at the first position of the colorless runner.
    RemoveAtEll,
    /// Remove two beads at `n` (B_n^(1) with Λ_0, Λ_1).
    RemoveTwoAtN,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Move {
    pub kind: MoveKind,
    pub pos: u32,
}

/// Labels `B1`, `B2`, … used for the moves of each family.
pub fn move_label(family: Family, kind: MoveKind) -> &'static str {
    match (family, kind) {
        (_, MoveKind::SlideI) => "B1",
        (Family::A2odd | Family::D1, MoveKind::PairRemove) => "B2",
        (_, MoveKind::SlideII) => "B2",
        (_, MoveKind::PairRemove) => "B3",
        (_, MoveKind::RemoveAtEll) => "B4",
        (_, MoveKind::RemoveTwoAtN) => "B5",
    }
}

pub fn parse_move(family: Family, label: &str) -> Result<MoveKind> {
    [MoveKind::SlideI, MoveKind::SlideII, MoveKind::PairRemove, MoveKind::RemoveAtEll, MoveKind::RemoveTwoAtN]
        .into_iter()
        .find(|&k| move_label(family, k).eq_ignore_ascii_case(label) && kind_allowed(family, k))
        .ok_or_else(|| Error::Unsupported(format!("no move {label} for {family}")))
}

fn kind_allowed(family: Family, kind: MoveKind) -> bool {
    match family {
        Family::A1 => false,
        Family::A2even | Family::D2 => kind != MoveKind::RemoveTwoAtN,
        Family::A2odd | Family::D1 => matches!(kind, MoveKind::SlideI | MoveKind::PairRemove),
        Family::B1 => true,
    }
}

fn check_move(model: &Model, cfg: &BeadConfig, mv: Move) -> std::result::Result<(), String> {
    let l = model.period();
    let n = model.n();
    let s = mv.pos;
    let sec = section(model);
    if sec == Section::TypeA {
        return Err("type A walls have no reduction moves".into());
    }
    match mv.kind {
        MoveKind::SlideI => {
            if cfg.count(s) == 0 || runner_kind(model, s) != RunnerKind::I {
                return Err(format!("no type I bead at {s}"));
            }
            if s <= l || cfg.count(s - l) > 0 {
                return Err(format!("position {} is unavailable", s.saturating_sub(l)));
            }
        }
        MoveKind::SlideII => {
            let (step, first) = type_two_runner(model).ok_or("this family has no colorless runner")?;
            if cfg.count(s) == 0 || runner_kind(model, s) != RunnerKind::II {
                return Err(format!("no colorless bead at {s}"));
            }
            if s < first + step {
                return Err(format!("bead at {s} is already at the top of its runner"));
            }
        }
        MoveKind::PairRemove => {
            let max = if sec == Section::Twisted { n } else { n - 1 };
            if s == 0 || s > max {
                return Err(format!("pair start {s} must lie in 1..={max}"));
            }
            if cfg.count(s) == 0 || cfg.count(l - s) == 0 {
                return Err(format!("pair ({s}, {}) is incomplete", l - s));
            }
        }
        MoveKind::RemoveAtEll => {
            let first = match sec {
                Section::Twisted => model.data().ell,
                Section::BSpin => 2 * n,
                _ => return Err("this family has no single removal".into()),
            };
            if s != first || cfg.count(s) == 0 {
                return Err(format!("no bead at {first}"));
            }
        }
        MoveKind::RemoveTwoAtN => {
            if sec != Section::BSplit {
                return Err("double removal only exists for B_n^(1) with Λ_0 or Λ_1".into());
            }
            if s != n || cfg.count(n) < 2 {
                return Err(format!("fewer than two beads at {n}"));
            }
        }
    }
    Ok(())
}

/// Apply a move and report the content it removes, in multiples of `δ`.
pub fn apply_move(model: &Model, cfg: &BeadConfig, mv: Move) -> Result<(BeadConfig, u32)> {
    check_move(model, cfg, mv).map_err(Error::Guard)?;
    let l = model.period();
    let n = model.n();
    let s = mv.pos;
    let eps = model.data().epsilon;
    let mut out = cfg.clone();
    let delta = match mv.kind {
        MoveKind::SlideI => {
            out.remove(s, 1);
            out.add(s - l, 1, None)?;
            out.flip_between(s - l, s);
            eps
        }
        MoveKind::SlideII => {
            let (step, _) = type_two_runner(model).expect("checked");
            out.remove(s, 1);
            out.add(s - step, 1, None)?;
            out.flip_between(s - step, s);
            1
        }
        MoveKind::PairRemove => {
            out.remove(s, 1);
            out.remove(l - s, 1);
            out.flip_between(s, l - s);
            eps
        }
        MoveKind::RemoveAtEll => {
            out.remove(s, 1);
            out.flip_between(0, s);
            1
        }
        MoveKind::RemoveTwoAtN => {
            out.remove(n, 2);
            1
        }
    };
    Ok((out, delta))
}

/// Every move whose guard holds, lowest position first.
pub fn applicable_moves(model: &Model, cfg: &BeadConfig) -> Vec<Move> {
    if section(model) == Section::TypeA {
        return Vec::new();
    }
    let mut moves = Vec::new();
    let kinds = [MoveKind::SlideI, MoveKind::SlideII, MoveKind::PairRemove, MoveKind::RemoveAtEll, MoveKind::RemoveTwoAtN];
    for b in cfg.beads() {
        for kind in kinds {
            let mv = Move { kind, pos: b.pos };
            if kind_allowed(model.family(), kind) && check_move(model, cfg, mv).is_ok() {
                moves.push(mv);
            }
        }
    }
    moves.sort();
    moves.sort_by_key(|m| m.pos);
    moves
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub reduced: BeadConfig,
    pub moves: BTreeMap<String, u32>,
    /// Total content removed, in multiples of `δ`.
    pub delta_removed: u64,
}

/// Apply moves until none is left, letting `choose` pick among the
/// applicable ones.
pub fn reduce_with(model: &Model, cfg: &BeadConfig, mut choose: impl FnMut(&[Move]) -> usize) -> Reduction {
    let mut cur = cfg.clone();
    let mut moves = BTreeMap::new();
    let mut delta_removed = 0u64;
    loop {
        let avail = applicable_moves(model, &cur);
        if avail.is_empty() {
            break;
        }
        let mv = avail[choose(&avail).min(avail.len() - 1)];
        let (next, d) = apply_move(model, &cur, mv).expect("applicable move");
        *moves.entry(move_label(model.family(), mv.kind).to_string()).or_insert(0) += 1;
        delta_removed += d as u64;
        cur = next;
    }
    Reduction { reduced: cur, moves, delta_removed }
}

/// Canonical reduction: always the lowest position first.
pub fn reduce(model: &Model, cfg: &BeadConfig) -> Reduction {
    reduce_with(model, cfg, |_| 0)
}

pub fn reduce_wall(model: &Model, w: &Wall) -> Result<(Wall, Reduction)> {
    let cfg = to_beads(model, w)?;
    let red = reduce(model, &cfg);
    let wall = from_beads(model, &red.reduced)?;
    Ok((wall, red))
}

/// Which weight string a wall is read against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sector {
    /// Content `m·δ`.
    Diagonal,
    /// Content `γ + m·δ` (B_n^(1) with Λ_0 only).
    Cross,
}

fn runner_counts(model: &Model, cfg: &BeadConfig) -> BTreeMap<u32, u32> {
    let mut counts = BTreeMap::new();
    for b in cfg.beads() {
        *counts.entry(b.pos % model.period()).or_insert(0) += b.count;
    }
    counts
}

/// Does the configuration come from a wall of the requested sector? Checks
/// mirror symmetry of type I runners, the parity of the colorless runner for
/// B_n^(1), and that the reduced wall lands on a multiple of `δ`.
pub fn weight_condition(model: &Model, cfg: &BeadConfig, sector: Sector) -> bool {
    if section(model) == Section::TypeA {
        if sector == Sector::Cross {
            return false;
        }
        return from_beads(model, cfg)
            .ok()
            .and_then(|w| Partition::new(w.heights()).ok())
            .and_then(|p| p.core_quotient(model.n()).ok())
            .is_some_and(|(core, _)| core.is_empty());
    }
    if sector == Sector::Cross && !(section(model) == Section::BSplit && model.lambda() == 0) {
        return false;
    }
    let l = model.period();
    let counts = runner_counts(model, cfg);
    let get = |k: u32| counts.get(&k).copied().unwrap_or(0);
    if type_one_pairs(model).iter().any(|&k| get(k) != get(l - k)) {
        return false;
    }
    if section(model) == Section::BSplit {
        let odd = get(model.n()) % 2 == 1;
        if odd != (sector == Sector::Cross) {
            return false;
        }
    }
    let red = reduce(model, cfg);
    if red.reduced.beads().iter().any(|b| runner_kind(model, b.pos) == RunnerKind::I) {
        return false;
    }
    let Ok(w) = from_beads(model, &red.reduced) else { return false };
    let c = model.content(&w);
    match sector {
        Sector::Diagonal => model.data().is_delta_multiple(&c).is_some(),
        Sector::Cross => model.data().is_gamma_plus_delta_multiple(&c).is_some(),
    }
}

/// Image of a wall under the bijection, one variant per family shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TupleImage {
    /// The n-quotient.
    A1 { quotient: Vec<Partition> },
    /// A2even and D2.
    Twisted { lambda0: Partition, lambdas: Vec<Partition> },
    /// A2odd (`lambda0` any partition) and D1 (`lambda0` with empty 2-core).
    Colored { lambdas: Vec<Partition>, lambda0: Partition, lambda1: Partition },
    /// B_n^(1), Λ_0 or Λ_1, diagonal string.
    BSplit { odd: Partition, lambdas: Vec<Partition>, lambda0: Partition, lambda1: Partition },
    /// B_n^(1), Λ_n.
    BSpin { lambda0: Partition, lambdas: Vec<Partition>, triple: QTriple },
    /// B_n^(1), Λ_0 against Λ_1.
    BCross { odd: Partition, lambdas: Vec<Partition>, mu0: Partition, mu1: Partition },
}

impl TupleImage {
    /// Components in their conventional order, plus `c` when present.
    pub fn components(&self) -> (Vec<Partition>, Option<u8>) {
        let cat = |a: Vec<Partition>, b: &[Partition], c: Vec<Partition>| {
            let mut v = a;
            v.extend(b.iter().cloned());
            v.extend(c);
            v
        };
        match self {
            TupleImage::A1 { quotient } => (quotient.clone(), None),
            TupleImage::Twisted { lambda0, lambdas } => (cat(vec![lambda0.clone()], lambdas, vec![]), None),
            TupleImage::Colored { lambdas, lambda0, lambda1 } => {
                (cat(vec![], lambdas, vec![lambda0.clone(), lambda1.clone()]), None)
            }
            TupleImage::BSplit { odd, lambdas, lambda0, lambda1 } => {
                (cat(vec![odd.clone()], lambdas, vec![lambda0.clone(), lambda1.clone()]), None)
            }
            TupleImage::BSpin { lambda0, lambdas, triple } => {
                (cat(vec![lambda0.clone()], lambdas, vec![triple.mu.clone(), triple.nu.clone()]), Some(triple.c))
            }
            TupleImage::BCross { odd, lambdas, mu0, mu1 } => {
                (cat(vec![odd.clone()], lambdas, vec![mu0.clone(), mu1.clone()]), None)
            }
        }
    }

    /// Components in exponent notation, e.g. `((2^4,3^2),(1,2^2,4),(1,4^2))`.
    pub fn exponent_notation(&self) -> String {
        let (parts, c) = self.components();
        let mut s: Vec<String> = parts.iter().map(|p| p.exponent_notation()).collect();
        if let Some(c) = c {
            s.push(c.to_string());
        }
        format!("({})", s.join(","))
    }

    /// The `m` in `Λ - mδ` recovered from sizes.
    pub fn weight(&self, family: Family) -> u64 {
        let sum = |v: &[Partition]| v.iter().map(|p| p.size() as u64).sum::<u64>();
        match self {
            TupleImage::A1 { quotient } => sum(quotient),
            TupleImage::Twisted { lambda0, lambdas } => {
                let eps = if family == Family::D2 { 2 } else { 1 };
                lambda0.size() as u64 + eps * sum(lambdas)
            }
            TupleImage::Colored { lambdas, lambda0, lambda1 } => {
                let extra = lambda0.size() as u64 + lambda1.size() as u64;
                sum(lambdas) + if family == Family::D1 { extra / 2 } else { extra }
            }
            TupleImage::BSplit { odd, lambdas, lambda0, lambda1 } => {
                odd.size() as u64 / 2 + sum(lambdas) + lambda0.size() as u64 + lambda1.size() as u64
            }
            TupleImage::BSpin { lambda0, lambdas, triple } => {
                lambda0.size() as u64 + sum(lambdas) + triple.weight() as u64
            }
            TupleImage::BCross { odd, lambdas, mu0, mu1 } => {
                (odd.size() as u64).saturating_sub(1) / 2 + sum(lambdas) + mu0.size() as u64 + mu1.size() as u64
            }
        }
    }
}

impl std::fmt::Display for TupleImage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let (parts, c) = self.components();
        let mut s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
        if let Some(c) = c {
            s.push(c.to_string());
        }
        write!(f, "({})", s.join(","))
    }
}

/// Mirror-runner pairs read as Frobenius arms and legs.
pub fn pi0(model: &Model, cfg: &BeadConfig) -> Result<Vec<Partition>> {
    let l = model.period();
    let runner = |k: u32| -> Vec<u32> {
        let mut v: Vec<u32> = cfg.beads().iter().filter(|b| b.pos % l == k % l).map(|b| (b.pos - k) / l).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    };
    type_one_pairs(model)
        .into_iter()
        .map(|k| {
            let f = FrobeniusForm::new(runner(k), runner(l - k))
                .map_err(|_| Error::Invalid(format!("runners {k} and {} hold different bead counts", l - k)))?;
            Partition::from_frobenius(&f)
        })
        .collect()
}

/// Parts recorded by the colorless runner: a bead at the `j`-th position of
/// the runner gives a part `j` (or `2j - 1` for the odd multiples of `n`).
fn colorless_partition(model: &Model, cfg: &BeadConfig) -> Partition {
    let n = model.n();
    let mut parts = Vec::new();
    for b in cfg.beads() {
        if runner_kind(model, b.pos) != RunnerKind::II {
            continue;
        }
        let part = match section(model) {
            Section::BSplit => b.pos / n,
            Section::BSpin => b.pos / (2 * n),
            _ => b.pos / model.data().ell,
        };
        parts.extend(std::iter::repeat_n(part, b.count as usize));
    }
    Partition::from_unsorted(parts)
}

/// `λ_Y`: the colored beads as a two-colored partition.
fn colored_partition(model: &Model, cfg: &BeadConfig) -> ColoredPartition {
    let parts = cfg
        .beads()
        .iter()
        .filter(|b| runner_kind(model, b.pos) == RunnerKind::III)
        .flat_map(|b| std::iter::repeat_n((colored_part(model, b.pos), b.color.expect("colored")), b.count as usize))
        .collect();
    ColoredPartition::new(parts).expect("positive parts")
}

/// Split a colored partition into `(μ, ν, c)` with `μ` 2-reduced and
/// alternating in color from its last part, `ν` white.
pub fn extract_qtriple(lambda: &ColoredPartition) -> Result<QTriple> {
    let parts = lambda.parts();
    let Some(&(_, last)) = parts.last() else {
        return Ok(QTriple { mu: Partition::empty(), nu: Partition::empty(), c: 0 });
    };
    let c = u8::from(last == Color::White);
    // with c = 1 odd parts are white, with c = 0 they are gray
    let odd_color = if c == 1 { Color::White } else { Color::Gray };
    let len = parts.len();
    let mut mu = vec![0u32; len];
    mu[len - 1] = 1;
    for i in (0..len - 1).rev() {
        let a = mu[i + 1];
        let want_odd = parts[i].1 == odd_color;
        mu[i] = if (a % 2 == 1) == want_odd { a } else { a + 1 };
    }
    let mut nu = Vec::with_capacity(len);
    for (i, &(v, _)) in parts.iter().enumerate() {
        if mu[i] > v {
            return invalid(format!("{lambda} has no Q-triple decomposition"));
        }
        nu.push(v - mu[i]);
    }
    let triple = QTriple {
        mu: Partition::new(mu)?,
        nu: Partition::new(nu).map_err(|_| Error::Invalid(format!("{lambda} has no Q-triple decomposition")))?,
        c,
    };
    triple.validate()?;
    Ok(triple)
}

/// Colors `μ` from a Q-triple: alternating, anchored by `c`.
pub fn qtriple_colored(t: &QTriple) -> ColoredPartition {
    let odd_color = if t.c == 1 { Color::White } else { Color::Gray };
    let mu = ColoredPartition::new(
        t.mu.parts().iter().map(|&v| (v, if v % 2 == 1 { odd_color } else { odd_color.flip() })).collect(),
    )
    .expect("positive");
    mu.add(&t.nu.white())
}

/// `λ¹` with odd parts gray, as a colored partition.
fn parity_colored(p: &Partition) -> ColoredPartition {
    ColoredPartition::new(p.parts().iter().map(|&v| (v, parity_color(v))).collect()).expect("positive")
}

fn split_parts(lambda: &ColoredPartition) -> Result<(Partition, Partition)> {
    let s = lambda.color_split()?;
    Ok((s.white_part, s.reduced_part.shape()))
}

/// The bijection: `m` and the image tuple of a wall in `Λ - mδ` (or `Λ_1 - mδ`
/// for B_n^(1) walls on `Λ_0` with content `γ + mδ`).
pub fn pi_forward(model: &Model, w: &Wall) -> Result<(u64, TupleImage)> {
    model.check_valid(w)?;
    let content = model.content(w);
    let (m, sector) = match model.data().is_delta_multiple(&content) {
        Some(m) => (m, Sector::Diagonal),
        None => match model.data().is_gamma_plus_delta_multiple(&content) {
            Some(m) if model.family() == Family::B1 && model.lambda() == 0 => (m, Sector::Cross),
            _ => return invalid(format!("{w} does not lie in a weight space Λ - mδ")),
        },
    };
    let image = match section(model) {
        Section::TypeA => {
            let p = Partition::new(w.heights())?;
            let (core, quotient) = p.core_quotient(model.n())?;
            if !core.is_empty() {
                return invalid("type A wall with nonempty core");
            }
            TupleImage::A1 { quotient }
        }
        sec => {
            let cfg = to_beads(model, w)?;
            let lambdas = pi0(model, &cfg)?;
            match sec {
                Section::Twisted => TupleImage::Twisted { lambda0: colorless_partition(model, &cfg), lambdas },
                Section::Colored => {
                    let red = reduce(model, &cfg).reduced;
                    let (lambda0, lambda1) = split_parts(&colored_partition(model, &red))?;
                    TupleImage::Colored { lambdas, lambda0, lambda1 }
                }
                Section::BSplit => {
                    let odd = colorless_partition(model, &cfg);
                    let red = reduce(model, &cfg).reduced;
                    let mut mu = colored_partition(model, &red);
                    if sector == Sector::Cross {
                        if (mu.len() + 1).is_multiple_of(2) {
                            mu = mu.recolor(|_, c| c.flip());
                        }
                        let (mu0, mu1) = split_parts(&mu)?;
                        TupleImage::BCross { odd, lambdas, mu0, mu1 }
                    } else {
                        let (lambda0, lambda1) = split_parts(&mu)?;
                        TupleImage::BSplit { odd, lambdas, lambda0, lambda1 }
                    }
                }
                Section::BSpin => {
                    let lambda0 = colorless_partition(model, &cfg);
                    let red = reduce(model, &cfg).reduced;
                    let triple = extract_qtriple(&colored_partition(model, &red))?;
                    TupleImage::BSpin { lambda0, lambdas, triple }
                }
                Section::TypeA => unreachable!(),
            }
        }
    };
    Ok((m, image))
}

fn expect_len(v: &[Partition], len: usize, what: &str) -> Result<()> {
    if v.len() != len {
        return invalid(format!("{what}: expected {len} partitions, got {}", v.len()));
    }
    Ok(())
}

fn check_dp0(p: &Partition, what: &str) -> Result<()> {
    if !p.classify().in_dp0 {
        return invalid(format!("{what} = {p} must be 2-reduced with empty 2-core"));
    }
    Ok(())
}

/// Place beads for the type I pairs.
fn place_pi0(model: &Model, cfg: &mut BeadConfig, lambdas: &[Partition]) -> Result<()> {
    let l = model.period();
    for (&k, lam) in type_one_pairs(model).iter().zip(lambdas) {
        let f = lam.to_frobenius();
        for &a in &f.arms {
            cfg.add(k + l * a, 1, None)?;
        }
        for &g in &f.legs {
            cfg.add(l - k + l * g, 1, None)?;
        }
    }
    Ok(())
}

/// Place the colored beads of `Ỹ`, add the remaining beads, then fix colors
/// so the normalized color of every colored bead matches `Ỹ`.
fn assemble(model: &Model, reduced: &BeadConfig, mut rest: BeadConfig) -> Result<Wall> {
    let mut normalized = BTreeMap::new();
    for b in reduced.beads() {
        if let Some(c) = reduced.normalized(b.pos) {
            normalized.insert(b.pos, c);
        }
    }
    for b in reduced.beads() {
        if runner_kind(model, b.pos) == RunnerKind::III {
            rest.add(b.pos, b.count, Some(Color::White))?;
        }
    }
    let fixed: Vec<(u32, Color)> =
        normalized.iter().map(|(&pos, &c)| (pos, c.flip_if(rest.beads_above(pos) % 2 == 1))).collect();
    for (pos, c) in fixed {
        rest.beads.get_mut(&pos).expect("placed").1 = Some(c);
    }
    from_beads(model, &rest)
}

fn colored_config(model: &Model, lambda: &ColoredPartition) -> Result<BeadConfig> {
    if !lambda.in_p_prime() {
        return invalid(format!("{lambda} repeats a value in both colors"));
    }
    let mut cfg = BeadConfig::new(None);
    for &(v, c) in lambda.parts() {
        cfg.add(colored_position(model, v), 1, Some(c))?;
    }
    Ok(cfg)
}

/// Inverse of [`pi_forward`].
pub fn pi_inverse(model: &Model, image: &TupleImage) -> Result<Wall> {
    let n = model.n() as usize;
    let sec = section(model);
    let mismatch = || Error::Invalid(format!("tuple shape does not match {} with Λ_{}", model.family(), model.lambda()));
    match (sec, image) {
        (Section::TypeA, TupleImage::A1 { quotient }) => {
            expect_len(quotient, n, "n-quotient")?;
            let p = Partition::from_core_quotient(&Partition::empty(), quotient, model.n())?;
            Ok(Wall::from_heights(p.parts()))
        }
        (Section::Twisted, TupleImage::Twisted { lambda0, lambdas }) => {
            expect_len(lambdas, n, "type I pairs")?;
            let mut cfg = BeadConfig::new(None);
            place_pi0(model, &mut cfg, lambdas)?;
            for &p in lambda0.parts() {
                cfg.add(p * model.data().ell, 1, None)?;
            }
            from_beads(model, &cfg)
        }
        (Section::Colored, TupleImage::Colored { lambdas, lambda0, lambda1 }) => {
            expect_len(lambdas, n - 1, "type I pairs")?;
            check_dp0(lambda1, "λ¹")?;
            if model.family() == Family::D1 && !lambda0.has_empty_2core() {
                return invalid(format!("λ⁰ = {lambda0} must have empty 2-core"));
            }
            let reduced = colored_config(model, &lambda0.white().add(&parity_colored(lambda1)))?;
            let mut rest = BeadConfig::new(None);
            place_pi0(model, &mut rest, lambdas)?;
            assemble(model, &reduced, rest)
        }
        (Section::BSplit, TupleImage::BSplit { odd, lambdas, lambda0, lambda1 }) => {
            expect_len(lambdas, n - 1, "type I pairs")?;
            check_dp0(lambda1, "λ¹")?;
            if !odd.all_odd() || odd.size() % 2 != 0 {
                return invalid(format!("{odd} must have odd parts and even size"));
            }
            let reduced = colored_config(model, &lambda0.white().add(&parity_colored(lambda1)))?;
            let mut rest = BeadConfig::new(None);
            place_pi0(model, &mut rest, lambdas)?;
            for &p in odd.parts() {
                rest.add(p * model.n(), 1, None)?;
            }
            assemble(model, &reduced, rest)
        }
        (Section::BSplit, TupleImage::BCross { odd, lambdas, mu0, mu1 }) if model.lambda() == 0 => {
            expect_len(lambdas, n - 1, "type I pairs")?;
            check_dp0(mu1, "μ¹")?;
            if !odd.all_odd() || odd.size() % 2 != 1 {
                return invalid(format!("{odd} must have odd parts and odd size"));
            }
            let mut mu = mu0.white().add(&parity_colored(mu1));
            if (mu.len() + 1) % 2 == 0 {
                mu = mu.recolor(|_, c| c.flip());
            }
            let mut reduced = colored_config(model, &mu)?;
            reduced.add(model.n(), 1, None)?;
            let mut rest = BeadConfig::new(None);
            place_pi0(model, &mut rest, lambdas)?;
            for &p in odd.parts() {
                rest.add(p * model.n(), 1, None)?;
            }
            assemble(model, &reduced, rest)
        }
        (Section::BSpin, TupleImage::BSpin { lambda0, lambdas, triple }) => {
            expect_len(lambdas, n - 1, "type I pairs")?;
            triple.validate()?;
            let reduced = colored_config(model, &qtriple_colored(triple))?;
            let mut rest = BeadConfig::new(None);
            place_pi0(model, &mut rest, lambdas)?;
            for &p in lambda0.parts() {
                rest.add(2 * model.n() * p, 1, None)?;
            }
            assemble(model, &reduced, rest)
        }
        _ => Err(mismatch()),
    }
}

/// All tuples of the target set for `m`, enumerated from the partition classes.
pub fn enumerate_targets(model: &Model, sector: Sector, m: u64) -> Result<Vec<TupleImage>> {
    let n = model.n() as usize;
    let fam = model.family();
    let m = m as u32;
    let plain = |w: u32| partition::partitions(w);
    let sec = section(model);
    if sector == Sector::Cross && !(sec == Section::BSplit && model.lambda() == 0) {
        return invalid("the cross string exists only for B_n^(1) walls on Λ_0");
    }
    // weight of each component, as a function producing its members
    type Gen<'a> = Box<dyn Fn(u32) -> Vec<Partition> + 'a>;
    let mut gens: Vec<Gen> = Vec::new();
    let mut triple_slot = false;
    match (sec, sector) {
        (Section::TypeA, _) => gens.extend((0..n).map(|_| Box::new(plain) as Gen)),
        (Section::Twisted, _) => {
            gens.push(Box::new(plain));
            let eps = model.data().epsilon;
            for _ in 0..n {
                gens.push(Box::new(move |w: u32| if w.is_multiple_of(eps) { partition::partitions(w / eps) } else { Vec::new() }));
            }
        }
        (Section::Colored, _) => {
            gens.extend((0..n - 1).map(|_| Box::new(plain) as Gen));
            if fam == Family::D1 {
                gens.push(Box::new(partition::p0));
                gens.push(Box::new(partition::dp0));
            } else {
                gens.push(Box::new(plain));
                gens.push(Box::new(|w: u32| if w.is_multiple_of(2) { partition::dp0(w / 2) } else { Vec::new() }));
            }
        }
        (Section::BSplit, Sector::Diagonal) => {
            gens.push(Box::new(|w: u32| partition::odd_partitions(2 * w)));
            gens.extend((0..n - 1).map(|_| Box::new(plain) as Gen));
            gens.push(Box::new(plain));
            gens.push(Box::new(|w: u32| if w.is_multiple_of(2) { partition::dp0(w / 2) } else { Vec::new() }));
        }
        (Section::BSplit, Sector::Cross) => {
            gens.push(Box::new(|w: u32| partition::odd_partitions(2 * w + 1)));
            gens.extend((0..n - 1).map(|_| Box::new(plain) as Gen));
            gens.push(Box::new(plain));
            gens.push(Box::new(|w: u32| if w.is_multiple_of(2) { partition::dp0(w / 2) } else { Vec::new() }));
        }
        (Section::BSpin, _) => {
            gens.push(Box::new(plain));
            gens.extend((0..n - 1).map(|_| Box::new(plain) as Gen));
            triple_slot = true;
        }
    }
    let mut out = Vec::new();
    let slots = gens.len() + usize::from(triple_slot);
    let mut choice: Vec<u32> = vec![0; slots];
    distribute(m, 0, &mut choice, &mut |ws: &[u32]| {
        let lists: Vec<Vec<Partition>> = gens.iter().zip(ws).map(|(g, &w)| g(w)).collect();
        let triples = if triple_slot { partition::q_triples(ws[slots - 1]) } else { vec![] };
        product(&lists, &mut Vec::new(), &mut |parts: &[Partition]| {
            let v = parts.to_vec();
            let build = |t: Option<QTriple>| match (sec, sector) {
                (Section::TypeA, _) => TupleImage::A1 { quotient: v.clone() },
                (Section::Twisted, _) => TupleImage::Twisted { lambda0: v[0].clone(), lambdas: v[1..].to_vec() },
                (Section::Colored, _) => TupleImage::Colored {
                    lambdas: v[..n - 1].to_vec(),
                    lambda0: v[n - 1].clone(),
                    lambda1: v[n].clone(),
                },
                (Section::BSplit, Sector::Diagonal) => TupleImage::BSplit {
                    odd: v[0].clone(),
                    lambdas: v[1..n].to_vec(),
                    lambda0: v[n].clone(),
                    lambda1: v[n + 1].clone(),
                },
                (Section::BSplit, Sector::Cross) => TupleImage::BCross {
                    odd: v[0].clone(),
                    lambdas: v[1..n].to_vec(),
                    mu0: v[n].clone(),
                    mu1: v[n + 1].clone(),
                },
                (Section::BSpin, _) => TupleImage::BSpin {
                    lambda0: v[0].clone(),
                    lambdas: v[1..n].to_vec(),
                    triple: t.expect("triple"),
                },
            };
            if triple_slot {
                for t in &triples {
                    out.push(build(Some(t.clone())));
                }
            } else {
                out.push(build(None));
            }
        });
    });
    Ok(out)
}

fn distribute(rem: u32, idx: usize, choice: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
    if idx + 1 == choice.len() {
        choice[idx] = rem;
        f(choice);
        return;
    }
    for w in 0..=rem {
        choice[idx] = w;
        distribute(rem - w, idx + 1, choice, f);
    }
}

fn product(lists: &[Vec<Partition>], cur: &mut Vec<Partition>, f: &mut dyn FnMut(&[Partition])) {
    if cur.len() == lists.len() {
        f(cur);
        return;
    }
    for p in &lists[cur.len()] {
        cur.push(p.clone());
        product(lists, cur, f);
        cur.pop();
    }
}

/// `(|oracle|, |targets|)` for one weight space, as used by the verifier.
pub fn count_both(model: &Model, sector: Sector, m: u64) -> Result<(usize, usize)> {
    let content = match sector {
        Sector::Diagonal => model.data().delta_content(m),
        Sector::Cross => {
            let g = model.data().gamma.clone().ok_or_else(|| Error::Unsupported("no γ for this family".into()))?;
            crate::affine::Content(g).add(&model.data().delta_content(m))
        }
    };
    let walls = model.enumerate_content(&content)?;
    let targets = enumerate_targets(model, sector, m)?;
    Ok((walls.len(), targets.len()))
}
