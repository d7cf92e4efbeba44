//! Truncated power series with exact coefficients and the Euler-type
//! products that appear in the string function formulas.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::affine::Family;
use crate::error::{invalid, Error, Result};

pub const DEFAULT_ORDER: usize = 64;

/// Coefficients `c[0..=T]`. With `half_powers` set, index `m` stands for
/// `q^{m/2}` (equivalently the variable is `t` with `t^2 = q`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<BigInt>,
    half_powers: bool,
}

impl Series {
    pub fn zero(order: usize, half_powers: bool) -> Series {
        Series { coeffs: vec![BigInt::zero(); order + 1], half_powers }
    }

    pub fn one(order: usize, half_powers: bool) -> Series {
        let mut s = Series::zero(order, half_powers);
        s.coeffs[0] = BigInt::one();
        s
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>, half_powers: bool) -> Result<Series> {
        if coeffs.is_empty() {
            return invalid("a series needs at least one coefficient");
        }
        Ok(Series { coeffs, half_powers })
    }

    pub fn from_i64(coeffs: &[i64], half_powers: bool) -> Result<Series> {
        Series::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect(), half_powers)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn half_powers(&self) -> bool {
        self.half_powers
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, m: usize) -> Result<&BigInt> {
        self.coeffs
            .get(m)
            .ok_or_else(|| Error::OutOfRange(format!("index {m} beyond truncation order {}", self.order())))
    }

    /// Coefficients as `i64`, failing if any does not fit.
    pub fn to_i64_vec(&self) -> Result<Vec<i64>> {
        self.coeffs
            .iter()
            .map(|c| c.to_i64().ok_or_else(|| Error::OutOfRange(format!("coefficient {c} exceeds i64"))))
            .collect()
    }

    pub fn truncate(&self, order: usize) -> Series {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, BigInt::zero());
        Series { coeffs, half_powers: self.half_powers }
    }

    fn check_compatible(&self, other: &Series) {
        assert_eq!(self.half_powers, other.half_powers, "mixing q and q^(1/2) series");
        assert_eq!(self.order(), other.order(), "mixing truncation orders");
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn inverse(&self) -> Result<Series> {
        let c0 = &self.coeffs[0];
        if !(c0.is_one() || (-c0).is_one()) {
            return invalid("constant term must be 1 or -1 to invert over the integers");
        }
        let t = self.order();
        let mut inv = vec![BigInt::zero(); t + 1];
        inv[0] = c0.clone();
        for m in 1..=t {
            let mut acc = BigInt::zero();
            for j in 1..=m {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &inv[m - j];
                }
            }
            inv[m] = -(acc * c0);
        }
        Ok(Series { coeffs: inv, half_powers: self.half_powers })
    }

    pub fn scale(&self, k: &BigInt) -> Series {
        Series { coeffs: self.coeffs.iter().map(|c| c * k).collect(), half_powers: self.half_powers }
    }

    /// Divide every coefficient by two, refusing if any is odd.
    pub fn halve_exact(&self) -> Result<Series> {
        let two = BigInt::from(2);
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (m, c) in self.coeffs.iter().enumerate() {
            if !(c % &two).is_zero() {
                return invalid(format!("coefficient {c} at index {m} is odd, cannot halve"));
            }
            out.push(c / &two);
        }
        Ok(Series { coeffs: out, half_powers: self.half_powers })
    }

    /// Divide by the variable `k` times. The dropped low coefficients must vanish.
    /// The truncation order shrinks by `k`.
    pub fn shift_down(&self, k: usize) -> Result<Series> {
        if k > self.order() {
            return invalid("shift exceeds truncation order");
        }
        if let Some(m) = (0..k).find(|&m| !self.coeffs[m].is_zero()) {
            return invalid(format!("nonzero coefficient at index {m} blocks the shift"));
        }
        Ok(Series { coeffs: self.coeffs[k..].to_vec(), half_powers: self.half_powers })
    }

    /// Reinterpret a series in `t = q^{1/2}` as a series in `q`. Odd
    /// coefficients must vanish.
    pub fn to_integer_powers(&self) -> Result<Series> {
        if !self.half_powers {
            return Ok(self.clone());
        }
        if let Some(m) = (1..self.coeffs.len()).step_by(2).find(|&m| !self.coeffs[m].is_zero()) {
            return invalid(format!("series has a nonzero half-integer power at t^{m}"));
        }
        let coeffs = self.coeffs.iter().step_by(2).cloned().collect();
        Ok(Series { coeffs, half_powers: false })
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn to_json(&self) -> Value {
        let coeffs: Vec<Value> = self.coeffs.iter().map(bigint_json).collect();
        json!({ "t_is_sqrt_q": self.half_powers, "coeffs": coeffs })
    }
}

/// Integers that fit in i64 become JSON numbers; larger ones become strings.
pub fn bigint_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => json!(v),
        None => json!(c.to_string()),
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        self.check_compatible(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        Series { coeffs, half_powers: self.half_powers }
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        self.check_compatible(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect();
        Series { coeffs, half_powers: self.half_powers }
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series { coeffs: self.coeffs.iter().map(|c| -c).collect(), half_powers: self.half_powers }
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        self.check_compatible(rhs);
        let t = self.order();
        let mut out = vec![BigInt::zero(); t + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=t - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Series { coeffs: out, half_powers: self.half_powers }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// `∏ ((q^a)_∞)^e` where `(x)_∞ = ∏_{k≥1} (1 - x^k)`. Offsets are stored in
/// half units, so `a2 = 1` means `q^{1/2}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProductExpr {
    factors: Vec<(u32, i32)>,
}

impl ProductExpr {
    pub fn one() -> ProductExpr {
        ProductExpr::default()
    }

    /// Multiply by `((q^{a2/2})_∞)^e`.
    pub fn with(mut self, a2: u32, e: i32) -> ProductExpr {
        assert!(a2 > 0, "product offsets must be positive");
        if e != 0 {
            self.factors.push((a2, e));
        }
        self
    }

    /// Multiply by `((q^a)_∞)^e` for an integer offset `a`.
    pub fn q(self, a: u32, e: i32) -> ProductExpr {
        self.with(2 * a, e)
    }

    pub fn factors(&self) -> &[(u32, i32)] {
        &self.factors
    }

    pub fn needs_half_powers(&self) -> bool {
        self.factors.iter().any(|&(a2, _)| a2 % 2 == 1)
    }

    /// Expand up to index `order` (in q units, or in t units if `half_powers`).
    pub fn expand(&self, order: usize, half_powers: bool) -> Result<Series> {
        let mut s = Series::one(order, half_powers);
        for &(a2, e) in &self.factors {
            let step = if half_powers {
                a2 as usize
            } else if a2 % 2 == 0 {
                (a2 / 2) as usize
            } else {
                return invalid(format!(
                    "factor (q^{a2}/2) has a half-integer offset; expand with half powers enabled"
                ));
            };
            for _ in 0..e.unsigned_abs() {
                if e > 0 {
                    euler_factor(&mut s.coeffs, step);
                } else {
                    euler_factor_inverse(&mut s.coeffs, step);
                }
            }
        }
        Ok(s)
    }
}

fn euler_factor(c: &mut [BigInt], step: usize) {
    let t = c.len() - 1;
    let mut k = step;
    while k <= t {
        for j in (k..=t).rev() {
            if !c[j - k].is_zero() {
                let v = c[j - k].clone();
                c[j] -= v;
            }
        }
        k += step;
    }
}

fn euler_factor_inverse(c: &mut [BigInt], step: usize) {
    let t = c.len() - 1;
    let mut k = step;
    while k <= t {
        for j in k..=t {
            if !c[j - k].is_zero() {
                let v = c[j - k].clone();
                c[j] += v;
            }
        }
        k += step;
    }
}

impl fmt::Display for ProductExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|&(a2, e)| {
                let base = match (a2 % 2, a2 / 2) {
                    (0, 1) => "(q)".to_string(),
                    (0, a) => format!("(q^{a})"),
                    _ => format!("(q^{a2}/2)"),
                };
                if e == 1 { base } else { format!("{base}^{e}") }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// The string functions with closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StringCase {
    A1Diag,
    A2evenDiag,
    D2Diag,
    A2oddDiag,
    D1Diag,
    /// `Σ^{Λ_0}_{Λ_0}` (equally `Λ_1`) for B_n^(1).
    BDiag01,
    /// `Σ^{Λ_n}_{Λ_n}` for B_n^(1).
    BDiagN,
    /// `Σ^{Λ_0}_{Λ_1}` for B_n^(1).
    BCross,
}

impl StringCase {
    pub const ALL: [StringCase; 8] = [
        StringCase::A1Diag,
        StringCase::A2evenDiag,
        StringCase::D2Diag,
        StringCase::A2oddDiag,
        StringCase::D1Diag,
        StringCase::BDiag01,
        StringCase::BDiagN,
        StringCase::BCross,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StringCase::A1Diag => "A1-diag",
            StringCase::A2evenDiag => "A2even-diag",
            StringCase::D2Diag => "D2-diag",
            StringCase::A2oddDiag => "A2odd-diag",
            StringCase::D1Diag => "D1-diag",
            StringCase::BDiag01 => "B-diag-L0",
            StringCase::BDiagN => "B-diag-Ln",
            StringCase::BCross => "B-cross",
        }
    }

    pub fn parse(s: &str) -> Result<StringCase> {
        let norm = s.replace('Λ', "L").replace("L0/L1", "L0").replace("L1", "L0");
        StringCase::ALL
            .iter()
            .copied()
            .find(|c| c.name().eq_ignore_ascii_case(&norm))
            .ok_or_else(|| {
                let names: Vec<&str> = StringCase::ALL.iter().map(|c| c.name()).collect();
                Error::Unsupported(format!("unknown case {s:?}; valid cases: {}", names.join(", ")))
            })
    }

    /// The string `Σ^Λ_μ` for `Λ = Λ_lambda`, with `μ = Λ` or, when `cross`
    /// is set, `μ = Λ_1` for B_n^(1) walls on `Λ_0`.
    pub fn for_weight(family: Family, n: u32, lambda: u32, cross: bool) -> Result<StringCase> {
        if cross && !(family == Family::B1 && lambda == 0) {
            return Err(Error::Unsupported("the cross string exists only for B_n^(1) with Λ_0".into()));
        }
        Ok(match family {
            Family::A1 => StringCase::A1Diag,
            Family::A2even => StringCase::A2evenDiag,
            Family::D2 => StringCase::D2Diag,
            Family::A2odd => StringCase::A2oddDiag,
            Family::D1 => StringCase::D1Diag,
            Family::B1 if cross => StringCase::BCross,
            Family::B1 if lambda == n => StringCase::BDiagN,
            Family::B1 => StringCase::BDiag01,
        })
    }

    pub fn family(self) -> Family {
        match self {
            StringCase::A1Diag => Family::A1,
            StringCase::A2evenDiag => Family::A2even,
            StringCase::D2Diag => Family::D2,
            StringCase::A2oddDiag => Family::A2odd,
            StringCase::D1Diag => Family::D1,
            StringCase::BDiag01 | StringCase::BDiagN | StringCase::BCross => Family::B1,
        }
    }
}

/// Either a single product or `(X ± Y)/2`, optionally divided by `q^{1/2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StringFormula {
    Product(ProductExpr),
    HalfSum { x: ProductExpr, y: ProductExpr, minus: bool, over_sqrt_q: bool },
}

pub fn string_function(family: Family, n: u32, case: StringCase) -> Result<StringFormula> {
    if case.family() != family {
        let valid: Vec<&str> = StringCase::ALL.iter().filter(|c| c.family() == family).map(|c| c.name()).collect();
        return Err(Error::Unsupported(format!(
            "case {} does not apply to {family}; valid cases: {}",
            case.name(),
            valid.join(", ")
        )));
    }
    family.check_rank(n)?;
    let n = n as i32;
    let p = ProductExpr::one();
    Ok(match case {
        StringCase::A1Diag => StringFormula::Product(p.q(1, -n)),
        StringCase::A2evenDiag => StringFormula::Product(p.q(1, -1).q(1, -n)),
        StringCase::D2Diag => StringFormula::Product(p.q(1, -1).q(2, -n)),
        StringCase::A2oddDiag => StringFormula::Product(p.q(1, -n).q(2, -1)),
        StringCase::D1Diag => StringFormula::Product(p.q(1, -(n + 2))),
        StringCase::BDiagN => StringFormula::Product(p.q(2, 1).q(1, -(n + 2))),
        StringCase::BDiag01 | StringCase::BCross => StringFormula::HalfSum {
            x: ProductExpr::one().with(1, -1).q(1, -(n - 1)).q(2, -1),
            y: ProductExpr::one().with(1, 1).q(1, -(n + 2)),
            minus: case == StringCase::BCross,
            over_sqrt_q: case == StringCase::BCross,
        },
    })
}

impl StringFormula {
    /// Expand in `t = q^{1/2}` up to `t^{2·order}`.
    pub fn expand_t(&self, order: usize) -> Result<Series> {
        let t_order = 2 * order;
        match self {
            StringFormula::Product(p) => p.expand(t_order, true),
            StringFormula::HalfSum { x, y, minus, over_sqrt_q } => {
                let extra = usize::from(*over_sqrt_q);
                let xs = x.expand(t_order + extra, true)?;
                let ys = y.expand(t_order + extra, true)?;
                let sum = if *minus { &xs - &ys } else { &xs + &ys };
                let half = sum.halve_exact()?;
                if *over_sqrt_q { half.shift_down(1) } else { Ok(half) }
            }
        }
    }

    /// Expand as an ordinary series in `q` up to `q^order`. Fails if a
    /// half-integer power survives.
    pub fn expand_q(&self, order: usize) -> Result<Series> {
        match self {
            StringFormula::Product(p) if !p.needs_half_powers() => p.expand(order, false),
            _ => self.expand_t(order)?.to_integer_powers(),
        }
    }
}

impl fmt::Display for StringFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StringFormula::Product(p) => write!(f, "{p}"),
            StringFormula::HalfSum { x, y, minus, over_sqrt_q } => {
                let pre = if *over_sqrt_q { "q^(-1/2) " } else { "" };
                write!(f, "{pre}([{x}] {} [{y}])/2", if *minus { "-" } else { "+" })
            }
        }
    }
}

/// `σ = (q^ε)_∞ · Σ`, the string function of the basic representation.
pub fn sigma_from_sigma_fock(big_sigma: &Series, epsilon: u32) -> Result<Series> {
    if !big_sigma.coeffs[0].is_one() {
        return invalid("Σ must have constant term 1");
    }
    let factor = ProductExpr::one().q(epsilon, 1).expand_any(big_sigma)?;
    Ok(&factor * big_sigma)
}

impl ProductExpr {
    fn expand_any(&self, like: &Series) -> Result<Series> {
        self.expand(like.order(), like.half_powers())
    }
}

/// Partition numbers `p(0..=order)` by the standard recurrence-free product.
pub fn partition_numbers(order: usize) -> Vec<BigInt> {
    ProductExpr::one().q(1, -1).expand(order, false).expect("integer offsets").coeffs
}
