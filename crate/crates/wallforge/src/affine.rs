//! Per-family constants such as the Cartan matrix and null root, along with
//! the abacus periods and admissible level-one weights.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    /// `A_{n-1}^(1)`, `n ≥ 2`.
    A1,
    /// `A_{2n}^(2)`, `n ≥ 1`.
    A2even,
    /// `A_{2n-1}^(2)`, `n ≥ 3`.
    A2odd,
    /// `B_n^(1)`, `n ≥ 3`.
    B1,
    /// `D_{n+1}^(1)`, `n ≥ 3`.
    D1,
    /// `D_{n+1}^(2)`, `n ≥ 2`.
    D2,
}

impl Family {
    pub const ALL: [Family; 6] = [Family::A1, Family::A2even, Family::A2odd, Family::B1, Family::D1, Family::D2];

    pub fn name(self) -> &'static str {
        match self {
            Family::A1 => "A1",
            Family::A2even => "A2even",
            Family::A2odd => "A2odd",
            Family::B1 => "B1",
            Family::D1 => "D1",
            Family::D2 => "D2",
        }
    }

    pub fn min_rank(self) -> u32 {
        match self {
            Family::A1 => 2,
            Family::A2even => 1,
            Family::D2 => 2,
            Family::A2odd | Family::B1 | Family::D1 => 3,
        }
    }

    pub fn check_rank(self, n: u32) -> Result<()> {
        if n < self.min_rank() {
            return Err(Error::OutOfRange(format!("{self} needs n ≥ {}, got {n}", self.min_rank())));
        }
        Ok(())
    }

    /// Largest index in `I = {0, …, top}`.
    pub fn top(self, n: u32) -> u32 {
        match self {
            Family::A1 => n - 1,
            Family::D1 => n + 1,
            _ => n,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .iter()
            .copied()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Unsupported(format!("unknown family {s:?}; expected one of A1, A2even, A2odd, B1, D1, D2")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AffineData {
    pub family: Family,
    pub n: u32,
    pub top: u32,
    /// `cartan[i][j] = ⟨h_i, α_j⟩`.
    pub cartan: Vec<Vec<i64>>,
    /// `δ = Σ d_i α_i`.
    pub delta: Vec<u64>,
    /// Blocks of color `i` in one period of a column.
    pub block_counts: Vec<u64>,
    pub ell: u32,
    pub big_l: u32,
    pub layout_ratio: u32,
    /// One period of a column carries `epsilon·δ`.
    pub epsilon: u32,
    pub level1_weights: Vec<u32>,
    pub gamma: Option<Vec<u64>>,
}

impl AffineData {
    pub fn new(family: Family, n: u32) -> Result<AffineData> {
        family.check_rank(n)?;
        let top = family.top(n);
        let size = top as usize + 1;
        let mut a = vec![vec![0i64; size]; size];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: u32, j: u32, aij: i64, aji: i64| {
            a[i as usize][j as usize] = aij;
            a[j as usize][i as usize] = aji;
        };
        let nn = n as usize;
        let (delta, ell, big_l, weights): (Vec<u64>, u32, u32, Vec<u32>) = match family {
            Family::A1 => {
                if n == 2 {
                    link(0, 1, -2, -2);
                } else {
                    for i in 0..n {
                        link(i, (i + 1) % n, -1, -1);
                    }
                }
                (vec![1; nn], n, n, (0..n).collect())
            }
            Family::A2even => {
                if n == 1 {
                    link(0, 1, -4, -1);
                } else {
                    link(0, 1, -2, -1);
                    for i in 1..n - 1 {
                        link(i, i + 1, -1, -1);
                    }
                    link(n - 1, n, -2, -1);
                }
                let mut d = vec![2; nn + 1];
                d[nn] = 1;
                (d, 2 * n + 1, 2 * n + 1, vec![0])
            }
            Family::D2 => {
                link(0, 1, -2, -1);
                for i in 1..n - 1 {
                    link(i, i + 1, -1, -1);
                }
                link(n - 1, n, -1, -2);
                (vec![1; nn + 1], n + 1, 2 * n + 2, vec![0, n])
            }
            Family::A2odd => {
                link(0, 2, -1, -1);
                link(1, 2, -1, -1);
                for i in 2..n - 1 {
                    link(i, i + 1, -1, -1);
                }
                link(n - 1, n, -2, -1);
                let mut d = vec![2; nn + 1];
                d[0] = 1;
                d[1] = 1;
                d[nn] = 1;
                (d, 2 * n - 1, 2 * n - 1, vec![0, 1])
            }
            Family::D1 => {
                link(0, 2, -1, -1);
                link(1, 2, -1, -1);
                for i in 2..n - 1 {
                    link(i, i + 1, -1, -1);
                }
                link(n - 1, n, -1, -1);
                link(n - 1, n + 1, -1, -1);
                let mut d = vec![2; nn + 2];
                for i in [0, 1, nn, nn + 1] {
                    d[i] = 1;
                }
                (d, n, 2 * n, vec![0, 1, n, n + 1])
            }
            Family::B1 => {
                link(0, 2, -1, -1);
                link(1, 2, -1, -1);
                for i in 2..n - 1 {
                    link(i, i + 1, -1, -1);
                }
                link(n - 1, n, -1, -2);
                let mut d = vec![2; nn + 1];
                d[0] = 1;
                d[1] = 1;
                (d, 2 * n, 2 * n, vec![0, 1, n])
            }
        };
        let epsilon = if family == Family::D2 { 2 } else { 1 };
        let block_counts = delta.iter().map(|&d| d * epsilon as u64).collect();
        let gamma = (family == Family::B1).then(|| {
            let mut g = vec![1; nn + 1];
            g[1] = 0;
            g
        });
        Ok(AffineData {
            family,
            n,
            top,
            cartan: a,
            delta,
            block_counts,
            ell,
            big_l,
            layout_ratio: big_l / ell,
            epsilon,
            level1_weights: weights,
            gamma,
        })
    }

    pub fn rank(&self) -> usize {
        self.top as usize + 1
    }

    pub fn check_lambda(&self, lambda: u32) -> Result<()> {
        if !self.level1_weights.contains(&lambda) {
            return Err(Error::OutOfRange(format!(
                "Λ_{lambda} is not an admissible level-one weight for {}; expected one of {:?}",
                self.family, self.level1_weights
            )));
        }
        Ok(())
    }

    /// `m` with `c = m·δ`, if any.
    pub fn is_delta_multiple(&self, c: &Content) -> Option<u64> {
        if c.0.len() != self.delta.len() {
            return None;
        }
        let m = c.0[0] / self.delta[0];
        (c.0.iter().zip(&self.delta).all(|(&k, &d)| k == m * d)).then_some(m)
    }

    /// `m` with `c = γ + m·δ` (B_n^(1) only).
    pub fn is_gamma_plus_delta_multiple(&self, c: &Content) -> Option<u64> {
        let g = self.gamma.as_ref()?;
        let rest: Option<Vec<u64>> = c.0.iter().zip(g).map(|(&k, &gi)| k.checked_sub(gi)).collect();
        self.is_delta_multiple(&Content(rest?))
    }

    pub fn delta_content(&self, m: u64) -> Content {
        Content(self.delta.iter().map(|d| d * m).collect())
    }

    /// `⟨w, h_i⟩`.
    pub fn pairing(&self, w: &Weight, i: usize) -> i64 {
        let base = i64::from(w.base as usize == i);
        base - w.drop.0.iter().enumerate().map(|(k, &c)| c as i64 * self.cartan[i][k]).sum::<i64>()
    }

    /// Checks `A·d = 0`.
    pub fn delta_is_null(&self) -> bool {
        self.cartan.iter().all(|row| row.iter().zip(&self.delta).map(|(&a, &d)| a * d as i64).sum::<i64>() == 0)
    }
}

/// `Σ k_i α_i` with `k_i ≥ 0`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Content(pub Vec<u64>);

impl Content {
    pub fn zero(rank: usize) -> Content {
        Content(vec![0; rank])
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn add_color(&mut self, i: u32) {
        self.0[i as usize] += 1;
    }

    pub fn add(&self, other: &Content) -> Content {
        Content(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn checked_sub(&self, other: &Content) -> Option<Content> {
        self.0.iter().zip(&other.0).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>().map(Content)
    }

    /// Componentwise `≤`.
    pub fn le(&self, other: &Content) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

/// `Λ_base - drop`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weight {
    pub base: u32,
    pub drop: Content,
}

impl Weight {
    pub fn minus_alpha(&self, i: u32) -> Weight {
        let mut w = self.clone();
        w.drop.add_color(i);
        w
    }
}
