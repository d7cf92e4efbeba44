//! Young walls as columns of slots stacked on a ground state.
//!
//! A column is described by the number `b` of filled slots above the ground
//! and, when the top slot is the first half of a split cell, which half was
//! placed. Slot colors follow a periodic pattern per family and highest
//! weight; split cells swap their two colors between odd and even columns.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::affine::{AffineData, Content, Family, Weight};
use crate::error::{invalid, Error, Result};
use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Orient {
    /// Lower-right triangle (drawn white on the abacus).
    LR,
    /// Upper-left triangle (drawn gray on the abacus).
    UL,
}

impl Orient {
    pub fn other(self) -> Orient {
        match self {
            Orient::LR => Orient::UL,
            Orient::UL => Orient::LR,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Column {
    pub b: u32,
    pub orient: Option<Orient>,
}

impl Column {
    pub fn new(b: u32, orient: Option<Orient>) -> Column {
        Column { b, orient }
    }

    pub fn plain(b: u32) -> Column {
        Column { b, orient: None }
    }
}

/// Columns listed from column 1 (rightmost) leftwards; empty columns omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Wall {
    pub columns: Vec<Column>,
}

impl Wall {
    pub fn empty() -> Wall {
        Wall::default()
    }

    /// Drops trailing empty columns.
    pub fn new(mut columns: Vec<Column>) -> Wall {
        while columns.last().is_some_and(|c| c.b == 0 && c.orient.is_none()) {
            columns.pop();
        }
        Wall { columns }
    }

    pub fn from_heights(bs: &[u32]) -> Wall {
        Wall::new(bs.iter().map(|&b| Column::plain(b)).collect())
    }

    /// Column `k ≥ 1`; empty past the end.
    pub fn column(&self, k: usize) -> Column {
        self.columns.get(k - 1).copied().unwrap_or_default()
    }

    pub fn blocks(&self) -> u32 {
        self.columns.iter().map(|c| c.b).sum()
    }

    pub fn heights(&self) -> Vec<u32> {
        self.columns.iter().map(|c| c.b).collect()
    }

    pub fn with_column(&self, k: usize, col: Column) -> Wall {
        let mut cols = self.columns.clone();
        if cols.len() < k {
            cols.resize(k, Column::default());
        }
        cols[k - 1] = col;
        Wall::new(cols)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(&self.columns).expect("columns serialize")
    }

    /// Accepts the column list written by [`Wall::to_json`], or a compact list
    /// mixing plain heights with strings such as `"5ul"`.
    pub fn from_json(v: &serde_json::Value) -> Result<Wall> {
        let items = v.as_array().ok_or_else(|| Error::Invalid("a wall is a JSON array of columns".into()))?;
        let mut cols = Vec::with_capacity(items.len());
        for item in items {
            let col = match item {
                serde_json::Value::Number(_) => item
                    .as_u64()
                    .and_then(|b| u32::try_from(b).ok())
                    .map(Column::plain)
                    .ok_or_else(|| Error::Invalid(format!("bad column height {item}")))?,
                serde_json::Value::String(s) => s.parse()?,
                _ => serde_json::from_value(item.clone())
                    .map_err(|e| Error::Invalid(format!("bad column {item}: {e}")))?,
            };
            cols.push(col);
        }
        Ok(Wall::new(cols))
    }
}

impl std::str::FromStr for Column {
    type Err = Error;
    fn from_str(s: &str) -> Result<Column> {
        let s = s.trim();
        let (num, orient) = if let Some(x) = s.strip_suffix("ul") {
            (x, Some(Orient::UL))
        } else if let Some(x) = s.strip_suffix("lr") {
            (x, Some(Orient::LR))
        } else {
            (s, None)
        };
        let b = num.parse().map_err(|_| Error::Invalid(format!("bad column {s:?}")))?;
        Ok(Column::new(b, orient))
    }
}

impl fmt::Display for Wall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self
            .columns
            .iter()
            .map(|c| match c.orient {
                None => c.b.to_string(),
                Some(Orient::LR) => format!("{}lr", c.b),
                Some(Orient::UL) => format!("{}ul", c.b),
            })
            .collect();
        write!(f, "[{}]", s.join(","))
    }
}

/// Template slot, colors as seen in odd columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum TSlot {
    Unit(u32),
    HalfLower(u32),
    HalfUpper(u32),
    SplitFirst(u32, u32),
    SplitSecond(u32, u32),
}

/// A slot in a concrete column.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    Unit(u32),
    /// Lower half of a half-height pair.
    HalfLower(u32),
    /// Upper half of a half-height pair; completes the cell.
    HalfUpper(u32),
    /// First placed half of a split cell with the given colors.
    SplitFirst { lr: u32, ul: u32 },
    /// Second half of a split cell.
    SplitSecond { lr: u32, ul: u32 },
}

impl Slot {
    /// Does filling this slot leave the top cell complete?
    pub fn completes_cell(self) -> bool {
        matches!(self, Slot::Unit(_) | Slot::HalfUpper(_) | Slot::SplitSecond { .. })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ground {
    Bare,
    HalfLower,
    SplitLowerRight,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Validity {
    pub young: bool,
    pub proper: bool,
    pub reduced: bool,
}

/// The wall model for one family and rank over the level-one weight `Λ_lambda`.
#[derive(Clone, Debug)]
pub struct Model {
    data: AffineData,
    lambda: u32,
    template: Vec<TSlot>,
    ground: Ground,
}

impl Model {
    pub fn new(family: Family, n: u32, lambda: u32) -> Result<Model> {
        let data = AffineData::new(family, n)?;
        data.check_lambda(lambda)?;
        let (template, ground) = template(family, n, lambda);
        debug_assert_eq!(template.len(), data.big_l as usize);
        Ok(Model { data, lambda, template, ground })
    }

    pub fn data(&self) -> &AffineData {
        &self.data
    }

    pub fn family(&self) -> Family {
        self.data.family
    }

    pub fn n(&self) -> u32 {
        self.data.n
    }

    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    pub fn ground(&self) -> Ground {
        self.ground
    }

    /// Slots in one period of a column.
    pub fn period(&self) -> u32 {
        self.data.big_l
    }

    pub fn rank(&self) -> usize {
        self.data.rank()
    }

    /// Slot at level `j ≥ 1` of column `k ≥ 1`.
    pub fn slot(&self, k: usize, j: u32) -> Slot {
        assert!(k >= 1 && j >= 1);
        let t = self.template[((j - 1) % self.period()) as usize];
        if self.family() == Family::A1 {
            let n = self.n() as i64;
            let c = (self.lambda as i64 + j as i64 - k as i64).rem_euclid(n) as u32;
            return Slot::Unit(c);
        }
        let swap = k.is_multiple_of(2);
        let pick = |lr: u32, ul: u32| if swap { (ul, lr) } else { (lr, ul) };
        match t {
            TSlot::Unit(c) => Slot::Unit(c),
            TSlot::HalfLower(c) => Slot::HalfLower(c),
            TSlot::HalfUpper(c) => Slot::HalfUpper(c),
            TSlot::SplitFirst(lr, ul) => {
                let (lr, ul) = pick(lr, ul);
                Slot::SplitFirst { lr, ul }
            }
            TSlot::SplitSecond(lr, ul) => {
                let (lr, ul) = pick(lr, ul);
                Slot::SplitSecond { lr, ul }
            }
        }
    }

    /// Orientation bookkeeping is consistent with the slot kinds.
    pub fn check_column(&self, k: usize, col: Column) -> Result<()> {
        let lone = col.b >= 1 && matches!(self.slot(k, col.b), Slot::SplitFirst { .. });
        match (lone, col.orient) {
            (true, None) => invalid(format!("column {k}: top slot {} is a lone split half and needs an orientation", col.b)),
            (false, Some(_)) => invalid(format!("column {k}: orientation given but slot {} is not a lone split half", col.b)),
            _ => Ok(()),
        }
    }

    pub fn column_content(&self, k: usize, col: Column) -> Content {
        let mut c = Content::zero(self.rank());
        for j in 1..=col.b {
            match self.slot(k, j) {
                Slot::Unit(x) | Slot::HalfLower(x) | Slot::HalfUpper(x) => c.add_color(x),
                Slot::SplitFirst { lr, ul } => {
                    if j == col.b {
                        c.add_color(if col.orient == Some(Orient::UL) { ul } else { lr });
                    } else {
                        c.add_color(lr);
                        c.add_color(ul);
                    }
                }
                Slot::SplitSecond { ul, .. } => {
                    if j == 1 {
                        c.add_color(ul);
                    }
                }
            }
        }
        c
    }

    pub fn content(&self, w: &Wall) -> Content {
        let mut c = Content::zero(self.rank());
        for (idx, &col) in w.columns.iter().enumerate() {
            c = c.add(&self.column_content(idx + 1, col));
        }
        c
    }

    pub fn weight(&self, w: &Wall) -> Weight {
        Weight { base: self.lambda, drop: self.content(w) }
    }

    /// Is the top cell of the column complete? The ground counts as complete
    /// only when it is bare.
    pub fn is_full(&self, k: usize, col: Column) -> bool {
        if col.b == 0 {
            return self.ground == Ground::Bare;
        }
        self.slot(k, col.b).completes_cell()
    }

    fn young_pair(upper: Column, lower: Column) -> bool {
        lower.b < upper.b || (lower.b == upper.b && lower.orient == upper.orient)
    }

    fn proper_pair(&self, k: usize, left: Column, right: Column) -> bool {
        self.family() == Family::A1
            || left.b == 0
            || left.b != right.b
            || !(self.is_full(k, right) && self.is_full(k + 1, left))
    }

    /// Young and proper checks for columns `k` and `k + 1`.
    fn pair_ok(&self, w: &Wall, k: usize) -> bool {
        let right = w.column(k);
        let left = w.column(k + 1);
        Self::young_pair(right, left) && self.proper_pair(k, left, right)
    }

    pub fn is_young(&self, w: &Wall) -> bool {
        (1..=w.columns.len()).all(|k| Self::young_pair(w.column(k), w.column(k + 1)))
    }

    pub fn is_proper(&self, w: &Wall) -> bool {
        (1..=w.columns.len()).all(|k| self.proper_pair(k, w.column(k + 1), w.column(k)))
    }

    /// Young and proper, with well-formed columns.
    pub fn is_valid(&self, w: &Wall) -> bool {
        w.columns.iter().enumerate().all(|(i, &c)| self.check_column(i + 1, c).is_ok())
            && (1..=w.columns.len()).all(|k| self.pair_ok(w, k))
    }

    /// Is the change at column `k` still a valid wall? Only the neighbours
    /// of `k` need checking when the rest was valid.
    pub fn is_valid_near(&self, w: &Wall, k: usize) -> bool {
        self.check_column(k, w.column(k)).is_ok() && (k < 2 || self.pair_ok(w, k - 1)) && self.pair_ok(w, k)
    }

    /// The column with one period removed from its top, if that leaves a
    /// column of the same shape.
    pub fn drop_period(&self, col: Column) -> Option<Column> {
        let l = self.period();
        if col.b < l {
            return None;
        }
        if col.b == l && col.orient == Some(Orient::UL) {
            // the ground half is lower-right; an upper-left top does not sit on a period
            return None;
        }
        let b = col.b - l;
        let orient = if b == 0 { None } else { col.orient };
        Some(Column { b, orient })
    }

    pub fn is_reduced(&self, w: &Wall) -> bool {
        (1..=w.columns.len()).all(|k| match self.drop_period(w.column(k)) {
            Some(c) => !self.is_valid_near(&w.with_column(k, c), k),
            None => true,
        })
    }

    pub fn validate(&self, w: &Wall) -> Result<Validity> {
        for (i, &c) in w.columns.iter().enumerate() {
            self.check_column(i + 1, c)?;
        }
        let young = self.is_young(w);
        let proper = self.is_proper(w);
        let reduced = young && proper && self.is_reduced(w);
        Ok(Validity { young, proper, reduced })
    }

    pub fn check_valid(&self, w: &Wall) -> Result<()> {
        let v = self.validate(w)?;
        if !(v.young && v.proper) {
            return invalid(format!("{w} is not a proper Young wall (young={}, proper={})", v.young, v.proper));
        }
        Ok(())
    }

    /// Ways to take one block off the top of column `k`: (color, new column).
    pub fn removals(&self, k: usize, col: Column) -> Vec<(u32, Column)> {
        if col.b == 0 {
            return Vec::new();
        }
        let below = Column::plain(col.b - 1);
        match self.slot(k, col.b) {
            Slot::Unit(c) | Slot::HalfLower(c) | Slot::HalfUpper(c) => vec![(c, below)],
            Slot::SplitFirst { lr, ul } => {
                let c = if col.orient == Some(Orient::UL) { ul } else { lr };
                vec![(c, below)]
            }
            Slot::SplitSecond { lr, ul } => {
                if col.b == 1 {
                    vec![(ul, below)]
                } else {
                    let b = col.b - 1;
                    vec![(lr, Column::new(b, Some(Orient::UL))), (ul, Column::new(b, Some(Orient::LR)))]
                }
            }
        }
    }

    /// Ways to put one block on top of column `k`: (color, new column).
    pub fn additions(&self, k: usize, col: Column) -> Vec<(u32, Column)> {
        if col.b >= 1 {
            if let Slot::SplitFirst { lr, ul } = self.slot(k, col.b) {
                let c = if col.orient == Some(Orient::UL) { lr } else { ul };
                return vec![(c, Column::plain(col.b + 1))];
            }
        }
        let b = col.b + 1;
        match self.slot(k, b) {
            Slot::Unit(c) | Slot::HalfLower(c) | Slot::HalfUpper(c) => vec![(c, Column::plain(b))],
            Slot::SplitFirst { lr, ul } => {
                vec![(lr, Column::new(b, Some(Orient::LR))), (ul, Column::new(b, Some(Orient::UL)))]
            }
            Slot::SplitSecond { ul, .. } => vec![(ul, Column::plain(b))],
        }
    }

    /// `Y_{Λ,λ}`: `λ_k` periods stacked on column `k`.
    pub fn ground_plus_partition(&self, lambda: &Partition) -> Wall {
        let l = self.period();
        Wall::new(lambda.parts().iter().map(|&p| self.period_column(p * l)).collect())
    }

    fn period_column(&self, b: u32) -> Column {
        let orient = (b > 0 && matches!(self.slot(1, b), Slot::SplitFirst { .. })).then_some(Orient::LR);
        Column { b, orient }
    }

    /// `S_λ(Y)` for a reduced wall `Y`.
    pub fn s_lambda(&self, w: &Wall, lambda: &Partition) -> Result<Wall> {
        let v = self.validate(w)?;
        if !v.reduced {
            return invalid(format!("S_λ needs a reduced wall, {w} is not"));
        }
        let l = self.period();
        let len = w.columns.len().max(lambda.len());
        let cols = (1..=len)
            .map(|k| {
                let c = w.column(k);
                let add = lambda.part(k - 1) * l;
                if c.b == 0 {
                    self.period_column(add)
                } else {
                    Column { b: c.b + add, orient: c.orient }
                }
            })
            .collect();
        Ok(Wall::new(cols))
    }

    /// Column states for column `k` in order of increasing `b`, with their
    /// contents, while `keep(content of the completed part)` holds.
    fn column_options(&self, k: usize, keep: &dyn Fn(&Content) -> bool, max_b: u32) -> Vec<(Column, Content)> {
        let mut out = Vec::new();
        let mut base = Content::zero(self.rank());
        let mut b = 0;
        while b < max_b {
            b += 1;
            match self.slot(k, b) {
                Slot::SplitFirst { lr, ul } => {
                    for (orient, c) in [(Orient::LR, lr), (Orient::UL, ul)] {
                        let mut cc = base.clone();
                        cc.add_color(c);
                        if keep(&cc) {
                            out.push((Column::new(b, Some(orient)), cc));
                        }
                    }
                    base.add_color(lr);
                    base.add_color(ul);
                    if b < max_b {
                        b += 1;
                        if !keep(&base) {
                            break;
                        }
                        out.push((Column::plain(b), base.clone()));
                    }
                }
                slot => {
                    let c = match slot {
                        Slot::Unit(c) | Slot::HalfLower(c) | Slot::HalfUpper(c) => c,
                        Slot::SplitSecond { ul, .. } => ul,
                        Slot::SplitFirst { .. } => unreachable!(),
                    };
                    base.add_color(c);
                    if !keep(&base) {
                        break;
                    }
                    out.push((Column::plain(b), base.clone()));
                }
            }
        }
        out
    }

    /// Depth-first search over walls. `fits` must be monotone (if a content
    /// fits, every smaller one does); `accept` selects the walls reported.
    pub fn search(
        &self,
        fits: &dyn Fn(&Content) -> bool,
        accept: &dyn Fn(&Content) -> bool,
        max_blocks: u32,
    ) -> Vec<Wall> {
        // column colorings repeat with this period in k
        let classes = if self.family() == Family::A1 { self.n() as usize } else { 2 };
        let opts: Vec<Vec<(Column, Content)>> = (1..=classes)
            .map(|k| self.column_options(k, &|c: &Content| fits(c) && c.total() <= max_blocks as u64, max_blocks))
            .collect();
        let mut out = Vec::new();
        let mut cols = Vec::new();
        let zero = Content::zero(self.rank());
        if accept(&zero) {
            out.push(Wall::empty());
        }
        self.search_rec(&opts, fits, accept, &zero, &mut cols, &mut out, max_blocks);
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn search_rec(
        &self,
        opts: &[Vec<(Column, Content)>],
        fits: &dyn Fn(&Content) -> bool,
        accept: &dyn Fn(&Content) -> bool,
        acc: &Content,
        cols: &mut Vec<Column>,
        out: &mut Vec<Wall>,
        max_blocks: u32,
    ) {
        let k = cols.len() + 1;
        let prev = cols.last().copied();
        for (col, cc) in &opts[(k - 1) % opts.len()] {
            if let Some(p) = prev {
                if col.b > p.b {
                    break;
                }
                if !Self::young_pair(p, *col) || !self.proper_pair(k - 1, *col, p) {
                    continue;
                }
            }
            let total = acc.add(cc);
            if total.total() > max_blocks as u64 || !fits(&total) {
                continue;
            }
            cols.push(*col);
            if accept(&total) {
                out.push(Wall { columns: cols.clone() });
            }
            self.search_rec(opts, fits, accept, &total, cols, out, max_blocks);
            cols.pop();
        }
    }

    /// Every proper wall with exactly the given content.
    pub fn enumerate_content(&self, target: &Content) -> Result<Vec<Wall>> {
        let cap = max_blocks_from_env()?;
        if target.total() > cap as u64 {
            return Err(Error::Limit(format!(
                "content has {} blocks, above WALLFORGE_MAX_BLOCKS={cap}",
                target.total()
            )));
        }
        Ok(self.search(&|c| c.le(target), &|c| c == target, target.total() as u32))
    }

    /// The oracle for a weight space `Λ - drop`.
    pub fn enumerate_weight_space(&self, target: &Weight) -> Result<Vec<Wall>> {
        if target.base != self.lambda {
            return invalid(format!("weight based at Λ_{} but model is Λ_{}", target.base, self.lambda));
        }
        self.enumerate_content(&target.drop)
    }

    /// All walls with content `m·δ`.
    pub fn enumerate_delta(&self, m: u64) -> Result<Vec<Wall>> {
        self.enumerate_content(&self.data.delta_content(m))
    }

    /// All walls whose content is componentwise at most `bound`.
    pub fn enumerate_below(&self, bound: &Content) -> Vec<Wall> {
        self.search(&|c| c.le(bound), &|_| true, bound.total() as u32)
    }

    /// All walls with at most `max_blocks` blocks.
    pub fn enumerate_blocks(&self, max_blocks: u32) -> Vec<Wall> {
        self.search(&|_| true, &|_| true, max_blocks)
    }

    pub fn reduced_walls(&self, walls: &[Wall]) -> Vec<Wall> {
        walls.iter().filter(|w| self.is_reduced(w)).cloned().collect()
    }

    /// Distinct contents reachable, useful in tests.
    pub fn contents_of(&self, walls: &[Wall]) -> BTreeSet<Content> {
        walls.iter().map(|w| self.content(w)).collect()
    }
}

pub const DEFAULT_MAX_BLOCKS: u32 = 64;

/// Reads `WALLFORGE_MAX_BLOCKS`, defaulting to 64.
pub fn max_blocks_from_env() -> Result<u32> {
    match std::env::var("WALLFORGE_MAX_BLOCKS") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Invalid(format!("WALLFORGE_MAX_BLOCKS={v:?} is not a nonnegative integer"))),
        Err(_) => Ok(DEFAULT_MAX_BLOCKS),
    }
}

fn template(family: Family, n: u32, lambda: u32) -> (Vec<TSlot>, Ground) {
    use TSlot::*;
    let swap01 = |t: Vec<TSlot>| relabel(t, |c| if c <= 1 { 1 - c } else { c });
    match family {
        Family::A1 => (vec![Unit(0); n as usize], Ground::Bare),
        Family::A2even => {
            let l = 2 * n + 1;
            let mut t = vec![HalfUpper(0)];
            t.extend((2..l).map(|j| Unit((j - 1).min(l - j))));
            t.push(HalfLower(0));
            (t, Ground::HalfLower)
        }
        Family::D2 => {
            let mut t = vec![HalfUpper(0)];
            t.extend((1..n).map(Unit));
            t.push(HalfLower(n));
            t.push(HalfUpper(n));
            t.extend((1..n).rev().map(Unit));
            t.push(HalfLower(0));
            let t = if lambda == n { relabel(t, |c| n - c) } else { t };
            (t, Ground::HalfLower)
        }
        Family::A2odd => {
            let mut t = vec![SplitSecond(1, 0)];
            t.extend((2..=2 * n - 2).map(|j| Unit(j.min(2 * n - j))));
            t.push(SplitFirst(1, 0));
            let t = if lambda == 1 { swap01(t) } else { t };
            (t, Ground::SplitLowerRight)
        }
        Family::D1 => {
            let mut t = vec![SplitSecond(1, 0)];
            t.extend((2..n).map(Unit));
            t.push(SplitFirst(n + 1, n));
            t.push(SplitSecond(n + 1, n));
            t.extend((2..n).rev().map(Unit));
            t.push(SplitFirst(1, 0));
            let t = if lambda == 1 || lambda == n + 1 { swap01(t) } else { t };
            let rho = |c: u32| match c {
                0 => n,
                1 => n + 1,
                c if c == n => 0,
                c if c == n + 1 => 1,
                c => n + 1 - c,
            };
            let t = if lambda >= n { relabel(t, rho) } else { t };
            (t, Ground::SplitLowerRight)
        }
        Family::B1 => {
            if lambda == n {
                let mut t = vec![HalfUpper(n)];
                t.extend((2..n).rev().map(Unit));
                t.push(SplitFirst(1, 0));
                t.push(SplitSecond(1, 0));
                t.extend((2..n).map(Unit));
                t.push(HalfLower(n));
                (t, Ground::HalfLower)
            } else {
                let mut t = vec![SplitSecond(1, 0)];
                t.extend((2..n).map(Unit));
                t.push(HalfLower(n));
                t.push(HalfUpper(n));
                t.extend((2..n).rev().map(Unit));
                t.push(SplitFirst(1, 0));
                let t = if lambda == 1 { swap01(t) } else { t };
                (t, Ground::SplitLowerRight)
            }
        }
    }
}

fn relabel(t: Vec<TSlot>, f: impl Fn(u32) -> u32) -> Vec<TSlot> {
    use TSlot::*;
    t.into_iter()
        .map(|s| match s {
            Unit(c) => Unit(f(c)),
            HalfLower(c) => HalfLower(f(c)),
            HalfUpper(c) => HalfUpper(f(c)),
            SplitFirst(a, b) => SplitFirst(f(a), f(b)),
            SplitSecond(a, b) => SplitSecond(f(a), f(b)),
        })
        .collect()
}
