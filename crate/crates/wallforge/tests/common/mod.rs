//! Small oracles shared by the test files. Deliberately naive and
//! independent of the library code they check.
#![allow(dead_code)]

/// p(0..=n) by counting partitions with parts ≤ k (plain DP).
pub fn p_table(n: usize) -> Vec<i64> {
    let mut dp = vec![0i64; n + 1];
    dp[0] = 1;
    for part in 1..=n {
        for s in part..=n {
            dp[s] += dp[s - part];
        }
    }
    dp
}

/// Multiply truncated integer series.
pub fn mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let n = a.len().min(b.len());
    let mut out = vec![0i64; n];
    for i in 0..n {
        for j in 0..n - i {
            out[i + j] += a[i] * b[j];
        }
    }
    out
}

/// Series of 1/(q^step)_∞ by counting partitions into multiples of `step`.
pub fn inv_euler(step: usize, len: usize) -> Vec<i64> {
    let p = p_table(len);
    (0..len).map(|m| if m % step == 0 { p[m / step] } else { 0 }).collect()
}

/// (q^step)_∞ by multiplying out the finitely many relevant binomials.
pub fn euler(step: usize, len: usize) -> Vec<i64> {
    let mut out = vec![0i64; len];
    out[0] = 1;
    let mut k = step;
    while k < len {
        let mut next = out.clone();
        for i in k..len {
            next[i] -= out[i - k];
        }
        out = next;
        k += step;
    }
    out
}

pub fn pow(a: &[i64], e: usize) -> Vec<i64> {
    let mut out = vec![0i64; a.len()];
    out[0] = 1;
    for _ in 0..e {
        out = mul(&out, a);
    }
    out
}

/// Brute-force n-core: remove rim hooks of length n while any exists.
/// Works on beta-numbers: a hook of length n is a bead at x with x - n free.
pub fn core_by_stripping(parts: &[u32], n: u32) -> (Vec<u32>, u32) {
    let len = parts.len();
    let mut beta: Vec<i64> = parts.iter().enumerate().map(|(i, &p)| p as i64 + (len - i) as i64 - 1).collect();
    let mut removed = 0;
    loop {
        let mut moved = false;
        for i in 0..beta.len() {
            let x = beta[i];
            if x >= n as i64 && !beta.contains(&(x - n as i64)) {
                beta[i] = x - n as i64;
                removed += 1;
                moved = true;
                break;
            }
        }
        if !moved {
            break;
        }
    }
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let l = beta.len();
    let mut core: Vec<u32> = beta.iter().enumerate().map(|(i, &b)| (b - (l - i - 1) as i64) as u32).collect();
    core.retain(|&p| p > 0);
    (core, removed)
}

/// All partitions of m as plain vectors.
pub fn parts_of(m: u32) -> Vec<Vec<u32>> {
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for v in (1..=rem.min(max)).rev() {
            cur.push(v);
            rec(rem - v, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), &mut out);
    out
}
