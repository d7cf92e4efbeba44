//! Ordinary and two-colored partitions, Frobenius notation, n-cores and
//! n-quotients, and enumerators for the partition classes the bijections
//! land in.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Partition> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

impl Partition {
    /// Trailing zeros are dropped; any other disorder is an error.
    pub fn new(mut parts: Vec<u32>) -> Result<Partition> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return invalid(format!("parts {parts:?} are not weakly decreasing and positive"));
        }
        Ok(Partition { parts })
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// `mult[k]` copies of `k`, for each `k ≥ 1`.
    pub fn from_multiplicities(mult: &[usize]) -> Partition {
        let mut parts = Vec::new();
        for k in (1..mult.len()).rev() {
            parts.extend(std::iter::repeat_n(k as u32, mult[k]));
        }
        Partition { parts }
    }

    pub fn empty() -> Partition {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.part(0) as usize;
        let parts = (1..=w).map(|j| self.parts.iter().filter(|&&p| p as usize >= j).count() as u32).collect();
        Partition { parts }
    }

    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Successive parts differ by at most one and the last part is at most one.
    pub fn is_2_reduced(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] - w[1] <= 1) && self.parts.last().is_none_or(|&p| p <= 1)
    }

    pub fn all_odd(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1)
    }

    pub fn multiplicity(&self, k: u32) -> usize {
        self.parts.iter().filter(|&&p| p == k).count()
    }

    pub fn to_frobenius(&self) -> FrobeniusForm {
        let conj = self.conjugate();
        let d = (0..self.len()).take_while(|&i| self.parts[i] as usize > i).count();
        FrobeniusForm {
            arms: (0..d).map(|i| conj.parts[i] - i as u32 - 1).collect(),
            legs: (0..d).map(|i| self.parts[i] - i as u32 - 1).collect(),
        }
    }

    pub fn from_frobenius(f: &FrobeniusForm) -> Result<Partition> {
        f.validate()?;
        let d = f.arms.len();
        let mut parts: Vec<u32> = (0..d).map(|i| f.legs[i] + i as u32 + 1).collect();
        let mut row = d as u32 + 1;
        loop {
            let c = (0..d).filter(|&j| f.arms[j] + j as u32 + 1 >= row).count() as u32;
            if c == 0 {
                break;
            }
            parts.push(c);
            row += 1;
        }
        Partition::new(parts)
    }

    /// n-core and n-quotient with the default bead count.
    pub fn core_quotient(&self, n: u32) -> Result<(Partition, Vec<Partition>)> {
        let n_us = n.max(1) as usize;
        let r = self.len().div_ceil(n_us) * n_us;
        self.core_quotient_with_beads(n, r)
    }

    /// n-core and n-quotient read off an abacus with `r` beads, where `r` is a
    /// multiple of `n` with `r ≥ ℓ(λ)`. Runners are listed for residues
    /// `1, …, n` (the last one being `0 mod n`).
    pub fn core_quotient_with_beads(&self, n: u32, r: usize) -> Result<(Partition, Vec<Partition>)> {
        if n < 2 {
            return invalid("n-cores need n ≥ 2");
        }
        let nn = n as usize;
        if r < self.len() || !r.is_multiple_of(nn) {
            return invalid(format!("bead count {r} must be a multiple of {n} and at least {}", self.len()));
        }
        let beads: Vec<usize> = (1..=r).map(|k| self.part(k - 1) as usize + r - k + 1).collect();
        let mut runners: Vec<Vec<usize>> = vec![Vec::new(); nn];
        for &z in &beads {
            runners[(z - 1) % nn].push(z);
        }
        let mut quotient = Vec::with_capacity(nn);
        let mut slid = Vec::with_capacity(r);
        for (idx, run) in runners.iter().enumerate() {
            let k = idx + 1;
            let rk = run.len();
            // beads arrive in decreasing order since z_k decreases with k
            let parts: Vec<u32> = run.iter().enumerate().map(|(i, &nb)| ((nb - k) / nn + i + 1 - rk) as u32).collect();
            quotient.push(Partition::new(parts)?);
            slid.extend((0..rk).map(|t| k + t * nn));
        }
        Ok((beads_to_partition(slid, r), quotient))
    }

    pub fn from_core_quotient(core: &Partition, quotient: &[Partition], n: u32) -> Result<Partition> {
        if n < 2 || quotient.len() != n as usize {
            return invalid(format!("need n ≥ 2 and exactly n quotient components, got {}", quotient.len()));
        }
        let (c2, _) = core.core_quotient(n)?;
        if &c2 != core {
            return invalid(format!("{core} is not an {n}-core"));
        }
        let nn = n as usize;
        let mut r = core.len().div_ceil(nn) * nn;
        loop {
            let mut counts = vec![0usize; nn];
            for k in 1..=r {
                let z = core.part(k - 1) as usize + r - k + 1;
                counts[(z - 1) % nn] += 1;
            }
            if counts.iter().zip(quotient).all(|(&c, q)| c >= q.len()) {
                let mut beads = Vec::with_capacity(r);
                for (idx, q) in quotient.iter().enumerate() {
                    let rk = counts[idx];
                    beads.extend((0..rk).map(|i| idx + 1 + nn * (q.part(i) as usize + rk - i - 1)));
                }
                return Ok(beads_to_partition(beads, r));
            }
            r += nn;
        }
    }

    pub fn classify(&self) -> Classification {
        let empty_2core = self.core_quotient(2).map(|(c, _)| c.is_empty()).unwrap_or(false);
        let two_reduced = self.is_2_reduced();
        Classification {
            is_strict: self.is_strict(),
            is_2_reduced: two_reduced,
            in_dp0: two_reduced && empty_2core,
            in_p0: empty_2core,
        }
    }

    pub fn has_empty_2core(&self) -> bool {
        self.classify().in_p0
    }

    /// Part-wise sum after zero padding.
    pub fn add(&self, other: &Partition) -> Partition {
        let l = self.len().max(other.len());
        Partition { parts: (0..l).map(|i| self.part(i) + other.part(i)).collect() }
    }

    pub fn white(&self) -> ColoredPartition {
        ColoredPartition { parts: self.parts.iter().map(|&v| (v, Color::White)).collect() }
    }
}

fn beads_to_partition(mut beads: Vec<usize>, r: usize) -> Partition {
    beads.sort_unstable_by(|a, b| b.cmp(a));
    let parts = beads.iter().enumerate().map(|(j, &z)| (z - (r - j)) as u32).collect();
    Partition::new(parts).expect("bead positions are distinct")
}

impl Partition {
    /// Exponent notation with parts ascending, e.g. `(1^2,5^3,7)`.
    pub fn exponent_notation(&self) -> String {
        let mut items = Vec::new();
        let mut parts = self.parts.clone();
        parts.reverse();
        for chunk in parts.chunk_by(|a, b| a == b) {
            if chunk.len() == 1 {
                items.push(chunk[0].to_string());
            } else {
                items.push(format!("{}^{}", chunk[0], chunk.len()));
            }
        }
        format!("({})", items.join(","))
    }

    /// Reads `(4,2,2,1)`, `1^2,5^3,7` or `()`; parts may come in any order.
    pub fn parse(s: &str) -> Result<Partition> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        let mut parts = Vec::new();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        for item in body.split(',') {
            let item = item.trim();
            let (v, e) = match item.split_once('^') {
                Some((v, e)) => (v, e),
                None => (item, "1"),
            };
            let v: u32 = v.trim().parse().map_err(|_| Error::Invalid(format!("bad part {item:?}")))?;
            let e: usize = e.trim().parse().map_err(|_| Error::Invalid(format!("bad exponent {item:?}")))?;
            if v == 0 {
                continue;
            }
            parts.extend(std::iter::repeat_n(v, e));
        }
        Ok(Partition::from_unsorted(parts))
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Partition> {
        Partition::parse(s)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub is_strict: bool,
    pub is_2_reduced: bool,
    pub in_dp0: bool,
    pub in_p0: bool,
}

/// Arms and legs along the main diagonal, both strictly decreasing.
/// Arms are `λ'_i - i`, legs are `λ_i - i` (1-based `i`).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusForm {
    pub arms: Vec<u32>,
    pub legs: Vec<u32>,
}

impl FrobeniusForm {
    pub fn new(arms: Vec<u32>, legs: Vec<u32>) -> Result<FrobeniusForm> {
        let f = FrobeniusForm { arms, legs };
        f.validate()?;
        Ok(f)
    }

    pub fn validate(&self) -> Result<()> {
        let strict = |v: &[u32]| v.windows(2).all(|w| w[0] > w[1]);
        if self.arms.len() != self.legs.len() {
            return invalid("arms and legs differ in length");
        }
        if !strict(&self.arms) || !strict(&self.legs) {
            return invalid("arms and legs must be strictly decreasing");
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Color {
    #[serde(rename = "w")]
    White,
    #[serde(rename = "g")]
    Gray,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::White => Color::Gray,
            Color::Gray => Color::White,
        }
    }

    /// Same colors give white, mixed colors give gray.
    pub fn combine(self, other: Color) -> Color {
        if self == other { Color::White } else { Color::Gray }
    }

    pub fn flip_if(self, cond: bool) -> Color {
        if cond { self.flip() } else { self }
    }
}

/// Parts with a white or gray color, sorted by value (gray first on ties).
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<(u32, Color)>", into = "Vec<(u32, Color)>")]
pub struct ColoredPartition {
    parts: Vec<(u32, Color)>,
}

impl TryFrom<Vec<(u32, Color)>> for ColoredPartition {
    type Error = Error;
    fn try_from(parts: Vec<(u32, Color)>) -> Result<ColoredPartition> {
        ColoredPartition::new(parts)
    }
}

impl From<ColoredPartition> for Vec<(u32, Color)> {
    fn from(p: ColoredPartition) -> Vec<(u32, Color)> {
        p.parts
    }
}

impl ColoredPartition {
    /// Zero parts are dropped, the rest sorted into canonical order.
    pub fn new(mut parts: Vec<(u32, Color)>) -> Result<ColoredPartition> {
        parts.retain(|&(v, _)| v > 0);
        parts.sort_by(|a, b| b.0.cmp(&a.0).then(b.1.cmp(&a.1)));
        Ok(ColoredPartition { parts })
    }

    pub fn parts(&self) -> &[(u32, Color)] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().map(|p| p.0).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition { parts: self.parts.iter().map(|p| p.0).collect() }
    }

    /// No value occurs in both colors.
    pub fn in_p_prime(&self) -> bool {
        self.parts.windows(2).all(|w| w[0].0 != w[1].0 || w[0].1 == w[1].1)
    }

    pub fn recolor(&self, f: impl Fn(u32, Color) -> Color) -> ColoredPartition {
        ColoredPartition { parts: self.parts.iter().map(|&(v, c)| (v, f(v, c))).collect() }
    }

    /// Part-wise sum with the color rule; a zero summand keeps the other color.
    pub fn add(&self, other: &ColoredPartition) -> ColoredPartition {
        let l = self.len().max(other.len());
        let parts = (0..l)
            .map(|i| match (self.parts.get(i), other.parts.get(i)) {
                (Some(&(a, ca)), Some(&(b, cb))) => (a + b, ca.combine(cb)),
                (Some(&p), None) | (None, Some(&p)) => p,
                (None, None) => unreachable!(),
            })
            .collect();
        ColoredPartition::new(parts).expect("sums stay positive")
    }

    /// Split `λ = λ⁰ + λ¹` with `λ⁰` white and `λ¹` 2-reduced, colored gray
    /// exactly on odd parts, ending in a gray 1 when nonempty.
    pub fn color_split(&self) -> Result<ColorSplit> {
        let Some(t) = self.parts.iter().rposition(|p| p.1 == Color::Gray) else {
            return Ok(ColorSplit { white_part: self.shape(), reduced_part: ColoredPartition::default() });
        };
        let mut l1 = vec![0u32; t + 1];
        l1[t] = 1;
        for i in (0..t).rev() {
            let a = l1[i + 1];
            let want_odd = self.parts[i].1 == Color::Gray;
            l1[i] = if (a % 2 == 1) == want_odd { a } else { a + 1 };
        }
        let mut l0 = Vec::with_capacity(self.len());
        for (i, &(v, _)) in self.parts.iter().enumerate() {
            let d = l1.get(i).copied().unwrap_or(0);
            if d > v {
                return invalid(format!("{self} admits no white plus 2-reduced split"));
            }
            l0.push(v - d);
        }
        let white_part = Partition::new(l0).map_err(|_| Error::Invalid(format!("{self} admits no white plus 2-reduced split")))?;
        let reduced_part = ColoredPartition::new(l1.into_iter().map(|v| (v, parity_color(v))).collect())?;
        Ok(ColorSplit { white_part, reduced_part })
    }

    /// Residues of boxes: white box at column `p`, row `q` has `p + q mod 2`,
    /// the gray top box of column `p` has `p + 1 mod 2`.
    pub fn residue_counts(&self) -> ResidueCounts {
        let mut rc = ResidueCounts::default();
        for (idx, &(v, c)) in self.parts.iter().enumerate() {
            let p = idx as u32 + 1;
            let whites = if c == Color::Gray { v - 1 } else { v };
            for q in 1..=whites {
                if (p + q).is_multiple_of(2) { rc.r0 += 1 } else { rc.r1 += 1 }
            }
            if c == Color::Gray {
                if (p + 1).is_multiple_of(2) { rc.rg0 += 1 } else { rc.rg1 += 1 }
            }
        }
        rc
    }
}

/// Gray for odd values, white for even ones.
pub fn parity_color(v: u32) -> Color {
    if v % 2 == 1 { Color::Gray } else { Color::White }
}

impl fmt::Display for ColoredPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self
            .parts
            .iter()
            .map(|&(v, c)| if c == Color::Gray { format!("{v}g") } else { v.to_string() })
            .collect();
        write!(f, "({})", s.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorSplit {
    pub white_part: Partition,
    pub reduced_part: ColoredPartition,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueCounts {
    pub r0: u32,
    pub r1: u32,
    pub rg0: u32,
    pub rg1: u32,
}

/// `(μ, ν, c)` with `μ ∈ DP₀` of even length, `ℓ(ν) ≤ ℓ(μ)`, `c = 0` when `μ` is empty.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct QTriple {
    pub mu: Partition,
    pub nu: Partition,
    pub c: u8,
}

impl QTriple {
    pub fn validate(&self) -> Result<()> {
        if !self.mu.classify().in_dp0 || !self.mu.len().is_multiple_of(2) {
            return invalid(format!("μ = {} must be 2-reduced with empty 2-core and even length", self.mu));
        }
        if self.nu.len() > self.mu.len() {
            return invalid("ℓ(ν) exceeds ℓ(μ)");
        }
        if self.c > 1 || (self.mu.is_empty() && self.c != 0) {
            return invalid("c must be 0 or 1, and 0 when μ is empty");
        }
        Ok(())
    }

    pub fn weight(&self) -> u32 {
        self.mu.size() + self.nu.size() - self.mu.len() as u32 / 2
    }
}

/// Partitions of `m` with parts at most `max_part` and at most `max_len` parts,
/// in reverse lexicographic order.
pub fn partitions_bounded(m: u32, max_part: u32, max_len: usize) -> Vec<Partition> {
    fn rec(rem: u32, max_part: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if cur.len() == max_len {
            return;
        }
        for p in (1..=max_part.min(rem)).rev() {
            cur.push(p);
            rec(rem - p, p, max_len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, max_part, max_len, &mut Vec::new(), &mut out);
    out
}

pub fn partitions(m: u32) -> Vec<Partition> {
    partitions_bounded(m, m, usize::MAX)
}

/// 2-reduced partitions of `s`, generated bottom-up.
pub fn two_reduced(s: u32) -> Vec<Partition> {
    fn rec(rem: u32, last: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            let mut parts = cur.clone();
            parts.reverse();
            out.push(Partition { parts });
            return;
        }
        for v in [last, last + 1] {
            if v >= 1 && v <= rem {
                cur.push(v);
                rec(rem - v, v, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if s == 0 {
        out.push(Partition::empty());
    } else {
        rec(s, 0, &mut Vec::new(), &mut out);
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PartitionClass {
    /// All partitions of `m`.
    P,
    /// Partitions of `m` into distinct parts.
    Strict,
    /// Partitions of `m` into odd parts.
    Op,
    /// 2-reduced partitions with empty 2-core and 2-weight `m` (size `2m`).
    Dp0,
    /// Partitions with empty 2-core and 2-weight `m` (size `2m`).
    P0,
    /// `k`-tuples of partitions of total size `m`.
    Tuples(usize),
    /// Q-triples of weight `m`.
    Q,
}

impl PartitionClass {
    pub fn parse(s: &str) -> Result<PartitionClass> {
        let up = s.to_ascii_uppercase();
        Ok(match up.as_str() {
            "P" => PartitionClass::P,
            "STRICT" => PartitionClass::Strict,
            "OP" => PartitionClass::Op,
            "DP0" => PartitionClass::Dp0,
            "P0" => PartitionClass::P0,
            "Q" => PartitionClass::Q,
            _ => match up.strip_prefix('P').and_then(|k| k.parse::<usize>().ok()) {
                Some(k) if k >= 1 => PartitionClass::Tuples(k),
                _ => return Err(Error::Unsupported(format!("unknown partition class {s:?}"))),
            },
        })
    }
}

/// Members of one partition class, as produced by [`enumerate_class`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassMembers {
    Partitions(Vec<Partition>),
    Tuples(Vec<Vec<Partition>>),
    Triples(Vec<QTriple>),
}

impl ClassMembers {
    pub fn len(&self) -> usize {
        match self {
            ClassMembers::Partitions(v) => v.len(),
            ClassMembers::Tuples(v) => v.len(),
            ClassMembers::Triples(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub fn enumerate_class(class: PartitionClass, m: u32) -> ClassMembers {
    match class {
        PartitionClass::P => ClassMembers::Partitions(partitions(m)),
        PartitionClass::Strict => ClassMembers::Partitions(partitions(m).into_iter().filter(|p| p.is_strict()).collect()),
        PartitionClass::Op => ClassMembers::Partitions(odd_partitions(m)),
        PartitionClass::Dp0 => ClassMembers::Partitions(dp0(m)),
        PartitionClass::P0 => ClassMembers::Partitions(p0(m)),
        PartitionClass::Tuples(k) => ClassMembers::Tuples(partition_tuples(k, m)),
        PartitionClass::Q => ClassMembers::Triples(q_triples(m)),
    }
}

pub fn odd_partitions(m: u32) -> Vec<Partition> {
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        let mut p = max.min(rem);
        if p.is_multiple_of(2) {
            p = p.saturating_sub(1);
        }
        while p >= 1 {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
            p = p.saturating_sub(2);
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), &mut out);
    out
}

pub fn dp0(k: u32) -> Vec<Partition> {
    two_reduced(2 * k).into_iter().filter(|p| p.has_empty_2core()).collect()
}

pub fn p0(k: u32) -> Vec<Partition> {
    partitions(2 * k).into_iter().filter(|p| p.has_empty_2core()).collect()
}

pub fn partition_tuples(k: usize, m: u32) -> Vec<Vec<Partition>> {
    if k == 0 {
        return if m == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=m {
        let heads = partitions(first);
        let tails = partition_tuples(k - 1, m - first);
        for h in &heads {
            for t in &tails {
                let mut v = Vec::with_capacity(k);
                v.push(h.clone());
                v.extend(t.iter().cloned());
                out.push(v);
            }
        }
    }
    out
}

/// Candidate `μ` for Q-triples of weight at most `m`: 2-reduced, empty 2-core,
/// even length, with `|μ| - ℓ(μ)/2 ≤ m`.
fn q_mus(m: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    for s in 0..=2 * m {
        for mu in two_reduced(s) {
            if mu.len() % 2 == 0 && s - mu.len() as u32 / 2 <= m && mu.has_empty_2core() {
                out.push(mu);
            }
        }
    }
    out
}

pub fn q_triples(m: u32) -> Vec<QTriple> {
    let mut out = Vec::new();
    for mu in q_mus(m) {
        let w = mu.size() - mu.len() as u32 / 2;
        let rem = m - w;
        let cs: &[u8] = if mu.is_empty() { &[0] } else { &[0, 1] };
        for nu in partitions_bounded(rem, rem, mu.len()) {
            for &c in cs {
                out.push(QTriple { mu: mu.clone(), nu: nu.clone(), c });
            }
        }
    }
    out
}

/// `|Q(m)|` without materializing the `ν` lists.
pub fn count_q_triples(m: u32) -> u64 {
    // bounded[l][r] = partitions of r into at most l parts
    let max_len = 2 * m as usize + 2;
    let mut bounded = vec![vec![0u64; m as usize + 1]; max_len + 1];
    bounded[0][0] = 1;
    for l in 1..=max_len {
        for r in 0..=m as usize {
            bounded[l][r] = bounded[l - 1][r] + if r >= l { bounded[l][r - l] } else { 0 };
        }
    }
    q_mus(m)
        .iter()
        .map(|mu| {
            let rem = (m - (mu.size() - mu.len() as u32 / 2)) as usize;
            let c = if mu.is_empty() { 1 } else { 2 };
            c * bounded[mu.len().min(max_len)][rem]
        })
        .sum()
}
