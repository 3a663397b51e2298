//! Small dense determinant kernels: LU with partial pivoting over f64 and
//! complex f64, and fraction-free Bareiss elimination over big integers
//! for exact counts.

use num::bigint::BigInt;
use num::complex::Complex64;
use num::{One, Signed, Zero};

/// Determinant by LU with partial pivoting. `mat` is row-major square.
pub fn det_f64(mat: &[Vec<f64>]) -> f64 {
    let n = mat.len();
    let mut a: Vec<Vec<f64>> = mat.to_vec();
    let mut det = 1.0f64;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .unwrap();
        if a[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        det *= a[col][col];
        for row in col + 1..n {
            let factor = a[row][col] / a[col][col];
            if factor == 0.0 {
                continue;
            }
            for k in col..n {
                a[row][k] -= factor * a[col][k];
            }
        }
    }
    det
}

/// Complex determinant, same scheme.
pub fn det_complex(mat: &[Vec<Complex64>]) -> Complex64 {
    let n = mat.len();
    let mut a: Vec<Vec<Complex64>> = mat.to_vec();
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i][col].norm_sqr().total_cmp(&a[j][col].norm_sqr()))
            .unwrap();
        if a[pivot][col].norm_sqr() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        det *= a[col][col];
        for row in col + 1..n {
            let factor = a[row][col] / a[col][col];
            for k in col..n {
                let delta = factor * a[col][k];
                a[row][k] -= delta;
            }
        }
    }
    det
}

/// Exact integer determinant by Bareiss fraction-free elimination.
pub fn det_bigint(mat: &[Vec<BigInt>]) -> BigInt {
    let n = mat.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = mat.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for col in 0..n - 1 {
        if a[col][col].is_zero() {
            let Some(pivot) = (col + 1..n).find(|&r| !a[r][col].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(col, pivot);
            sign = -sign;
        }
        for row in col + 1..n {
            for k in col + 1..n {
                let num = &a[row][k] * &a[col][col] - &a[row][col] * &a[col][k];
                a[row][k] = num / &prev;
            }
            a[row][col] = BigInt::zero();
        }
        prev = a[col][col].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f64_determinants() {
        assert_eq!(det_f64(&[vec![3.0]]), 3.0);
        let m = vec![vec![1.0, 2.0], vec![3.0, 4.0]];
        assert!((det_f64(&m) + 2.0).abs() < 1e-12);
        let singular = vec![vec![1.0, 2.0], vec![2.0, 4.0]];
        assert_eq!(det_f64(&singular), 0.0);
    }

    #[test]
    fn complex_determinant_matches_expansion() {
        let i = Complex64::new(0.0, 1.0);
        let one = Complex64::new(1.0, 0.0);
        let m = vec![vec![one, i], vec![i, one]];
        // 1*1 - i*i = 2
        assert!((det_complex(&m) - Complex64::new(2.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn bigint_determinant() {
        let m: Vec<Vec<BigInt>> = vec![
            vec![2.into(), 0.into(), 1.into()],
            vec![1.into(), 3.into(), (-1).into()],
            vec![0.into(), 5.into(), 4.into()],
        ];
        // Laplace expansion by hand: 2*(12+5) - 0 + 1*(5-0) = 39
        assert_eq!(det_bigint(&m), 39.into());
        let empty: Vec<Vec<BigInt>> = vec![];
        assert_eq!(det_bigint(&empty), BigInt::one());
    }

    #[test]
    fn bigint_determinant_needs_pivoting() {
        let m: Vec<Vec<BigInt>> = vec![
            vec![0.into(), 1.into()],
            vec![1.into(), 0.into()],
        ];
        assert_eq!(det_bigint(&m), BigInt::from(-1));
    }

    #[test]
    fn determinants_agree_across_kernels() {
        let ints: Vec<Vec<i64>> = vec![
            vec![3, 1, 0, 2],
            vec![-1, 4, 2, 1],
            vec![0, 2, -3, 1],
            vec![2, 0, 1, -2],
        ];
        let as_f64: Vec<Vec<f64>> = ints
            .iter()
            .map(|r| r.iter().map(|&x| x as f64).collect())
            .collect();
        let as_big: Vec<Vec<BigInt>> = ints
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let exact = det_bigint(&as_big);
        let approx = det_f64(&as_f64);
        assert!((approx - exact.to_string().parse::<f64>().unwrap()).abs() < 1e-9);
    }
}
