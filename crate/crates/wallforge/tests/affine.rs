use wallforge::{AffineData, Content, Family, Weight};

fn ranks(f: Family) -> Vec<u32> {
    (f.min_rank()..f.min_rank() + 4).collect()
}

/// Determinant by fraction-free elimination (Bareiss).
fn det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| a[i][k] != 0) else { return 0 };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}

fn minor(m: &[Vec<i64>], skip: usize) -> Vec<Vec<i64>> {
    m.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, r)| r.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &x)| x).collect()).collect()
}

#[test]
fn delta_is_in_the_kernel() {
    for f in Family::ALL {
        for n in ranks(f) {
            let d = AffineData::new(f, n).unwrap();
            assert!(d.delta_is_null(), "{f} n={n}");
            let a = &d.cartan;
            for row in a {
                let s: i64 = row.iter().zip(&d.delta).map(|(&x, &y)| x * y as i64).sum();
                assert_eq!(s, 0);
            }
            assert_eq!(det(a), 0);
        }
    }
}

#[test]
fn cartan_is_affine() {
    for f in Family::ALL {
        for n in ranks(f) {
            let d = AffineData::new(f, n).unwrap();
            let a = &d.cartan;
            assert_eq!(a.len(), d.rank());
            for i in 0..a.len() {
                assert_eq!(a[i][i], 2);
                for j in 0..a.len() {
                    if i != j {
                        assert!(a[i][j] <= 0);
                        assert_eq!(a[i][j] == 0, a[j][i] == 0);
                    }
                }
            }
            // deleting node 0 leaves a finite type: all leading minors positive
            let fin = minor(a, 0);
            for k in 1..=fin.len() {
                let lead: Vec<Vec<i64>> = fin[..k].iter().map(|r| r[..k].to_vec()).collect();
                assert!(det(&lead) > 0, "{f} n={n} k={k}");
            }
        }
    }
}

#[test]
fn null_root_labels() {
    let d = |f, n| AffineData::new(f, n).unwrap().delta;
    assert_eq!(d(Family::A1, 4), vec![1, 1, 1, 1]);
    assert_eq!(d(Family::A2even, 3), vec![2, 2, 2, 1]);
    assert_eq!(d(Family::A2odd, 4), vec![1, 1, 2, 2, 1]);
    assert_eq!(d(Family::B1, 4), vec![1, 1, 2, 2, 2]);
    assert_eq!(d(Family::D1, 4), vec![1, 1, 2, 2, 1, 1]);
    assert_eq!(d(Family::D2, 3), vec![1, 1, 1, 1]);
}

#[test]
fn one_period_has_the_right_size() {
    for f in Family::ALL {
        for n in ranks(f) {
            let d = AffineData::new(f, n).unwrap();
            let total: u64 = d.block_counts.iter().sum();
            assert_eq!(total, d.big_l as u64, "{f} n={n}");
            assert_eq!(d.big_l, d.ell * d.layout_ratio);
            let eps = if f == Family::D2 { 2 } else { 1 };
            assert_eq!(d.epsilon, eps);
        }
    }
}

#[test]
fn rank_and_weight_checks() {
    assert!(AffineData::new(Family::A1, 1).is_err());
    assert!(AffineData::new(Family::A2odd, 2).is_err());
    assert!(AffineData::new(Family::D1, 2).is_err());
    let d = AffineData::new(Family::B1, 3).unwrap();
    assert_eq!(d.level1_weights, vec![0, 1, 3]);
    assert!(d.check_lambda(2).is_err());
    assert_eq!(AffineData::new(Family::D1, 3).unwrap().level1_weights, vec![0, 1, 3, 4]);
    assert_eq!(AffineData::new(Family::D2, 2).unwrap().level1_weights, vec![0, 2]);
    assert_eq!("A2odd".parse::<Family>().unwrap(), Family::A2odd);
    assert!("E8".parse::<Family>().is_err());
}

#[test]
fn delta_multiples() {
    let d = AffineData::new(Family::B1, 3).unwrap();
    assert_eq!(d.is_delta_multiple(&d.delta_content(3)), Some(3));
    assert_eq!(d.is_delta_multiple(&Content(vec![1, 1, 2, 1])), None);
    let g = Content(d.gamma.clone().unwrap()).add(&d.delta_content(2));
    assert_eq!(d.is_gamma_plus_delta_multiple(&g), Some(2));
    assert_eq!(d.is_delta_multiple(&g), None);
    assert_eq!(AffineData::new(Family::A1, 2).unwrap().is_gamma_plus_delta_multiple(&Content(vec![0, 0])), None);
}

#[test]
fn delta_pairs_to_zero() {
    for f in Family::ALL {
        let d = AffineData::new(f, f.min_rank() + 1).unwrap();
        for &lam in &d.level1_weights {
            let w = Weight { base: lam, drop: d.delta_content(2) };
            for i in 0..d.rank() {
                assert_eq!(d.pairing(&w, i), i64::from(i as u32 == lam));
            }
            let w1 = w.minus_alpha(0);
            assert_eq!(d.pairing(&w1, 0), i64::from(lam == 0) - 2);
        }
    }
}
