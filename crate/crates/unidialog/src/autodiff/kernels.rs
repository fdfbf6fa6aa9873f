//! Pure numeric kernels shared by the tape's forward and backward rules.

use crate::autodiff::scalar::Scalar;

/// c[m,n] += a[m,k] * b[k,n]
pub fn matmul_acc<S: Scalar>(a: &[S], b: &[S], c: &mut [S], m: usize, k: usize, n: usize) {
    debug_assert_eq!(a.len(), m * k);
    debug_assert_eq!(b.len(), k * n);
    debug_assert_eq!(c.len(), m * n);
    for i in 0..m {
        for p in 0..k {
            let aip = a[i * k + p];
            if aip == S::zero() {
                continue;
            }
            let brow = &b[p * n..(p + 1) * n];
            let crow = &mut c[i * n..(i + 1) * n];
            for j in 0..n {
                crow[j] += aip * brow[j];
            }
        }
    }
}

pub fn matmul<S: Scalar>(a: &[S], b: &[S], m: usize, k: usize, n: usize) -> Vec<S> {
    let mut c = vec![S::zero(); m * n];
    matmul_acc(a, b, &mut c, m, k, n);
    c
}

/// c[m,n] = a[m,k] * b[n,k]^T
pub fn matmul_nt<S: Scalar>(a: &[S], b: &[S], m: usize, k: usize, n: usize) -> Vec<S> {
    let mut c = vec![S::zero(); m * n];
    matmul_nt_acc(a, b, &mut c, m, k, n);
    c
}

pub fn matmul_nt_acc<S: Scalar>(a: &[S], b: &[S], c: &mut [S], m: usize, k: usize, n: usize) {
    debug_assert_eq!(a.len(), m * k);
    debug_assert_eq!(b.len(), n * k);
    for i in 0..m {
        let arow = &a[i * k..(i + 1) * k];
        for j in 0..n {
            let brow = &b[j * k..(j + 1) * k];
            let mut acc = S::zero();
            for p in 0..k {
                acc += arow[p] * brow[p];
            }
            c[i * n + j] += acc;
        }
    }
}

/// c[k,n] += a[m,k]^T * b[m,n]
pub fn matmul_tn_acc<S: Scalar>(a: &[S], b: &[S], c: &mut [S], m: usize, k: usize, n: usize) {
    debug_assert_eq!(a.len(), m * k);
    debug_assert_eq!(b.len(), m * n);
    for i in 0..m {
        let arow = &a[i * k..(i + 1) * k];
        let brow = &b[i * n..(i + 1) * n];
        for p in 0..k {
            let aip = arow[p];
            if aip == S::zero() {
                continue;
            }
            let crow = &mut c[p * n..(p + 1) * n];
            for j in 0..n {
                crow[j] += aip * brow[j];
            }
        }
    }
}

/// Softmax over the allowed entries of each row; blocked entries come out
/// exactly zero. Returns None for a row with no allowed entry.
pub fn masked_softmax_rows<S: Scalar>(
    logits: &[S],
    allowed: &[bool],
    rows: usize,
    cols: usize,
) -> Option<Vec<S>> {
    let mut out = vec![S::zero(); rows * cols];
    for r in 0..rows {
        let row = &logits[r * cols..(r + 1) * cols];
        let mask = &allowed[r * cols..(r + 1) * cols];
        let mut max = S::neg_infinity();
        for j in 0..cols {
            if mask[j] && row[j] > max {
                max = row[j];
            }
        }
        if max == S::neg_infinity() {
            return None;
        }
        let mut denom = S::zero();
        let orow = &mut out[r * cols..(r + 1) * cols];
        for j in 0..cols {
            if mask[j] {
                let e = (row[j] - max).exp();
                orow[j] = e;
                denom += e;
            }
        }
        for j in 0..cols {
            if mask[j] {
                orow[j] = orow[j] / denom;
            }
        }
    }
    Some(out)
}

/// tanh-approximation gelu: 0.5 x (1 + tanh(sqrt(2/pi) (x + 0.044715 x^3)))
pub fn gelu<S: Scalar>(x: S) -> S {
    let c = S::from_f64(SQRT_2_OVER_PI);
    let k = S::from_f64(GELU_CUBIC);
    let half = S::from_f64(0.5);
    half * x * (S::one() + (c * (x + k * x * x * x)).tanh())
}

pub fn gelu_grad<S: Scalar>(x: S) -> S {
    let c = S::from_f64(SQRT_2_OVER_PI);
    let k = S::from_f64(GELU_CUBIC);
    let half = S::from_f64(0.5);
    let three = S::from_f64(3.0);
    let inner = c * (x + k * x * x * x);
    let t = inner.tanh();
    let sech2 = S::one() - t * t;
    half * (S::one() + t) + half * x * sech2 * c * (S::one() + three * k * x * x)
}

/// Constants of the documented gelu formula.
pub const SQRT_2_OVER_PI: f64 = 0.7978845608028654;
pub const GELU_CUBIC: f64 = 0.044715;

pub fn logistic<S: Scalar>(x: S) -> S {
    if x >= S::zero() {
        S::one() / (S::one() + (-x).exp())
    } else {
        let e = x.exp();
        e / (S::one() + e)
    }
}

/// Per-row layer norm statistics: (normalized, inv_std per row).
pub fn layer_norm_rows<S: Scalar>(x: &[S], rows: usize, d: usize, eps: S) -> (Vec<S>, Vec<S>) {
    let mut normed = vec![S::zero(); rows * d];
    let mut inv_std = vec![S::zero(); rows];
    let dn = S::from_f64(d as f64);
    for r in 0..rows {
        let row = &x[r * d..(r + 1) * d];
        let mut mean = S::zero();
        for &v in row {
            mean += v;
        }
        mean = mean / dn;
        let mut var = S::zero();
        for &v in row {
            let c = v - mean;
            var += c * c;
        }
        var = var / dn;
        let istd = S::one() / (var + eps).sqrt();
        inv_std[r] = istd;
        let orow = &mut normed[r * d..(r + 1) * d];
        for j in 0..d {
            orow[j] = (row[j] - mean) * istd;
        }
    }
    (normed, inv_std)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matmul_matches_hand_product() {
        // [[1,2]] * [[3],[4]] = [[11]]
        let c = matmul(&[1.0, 2.0], &[3.0, 4.0], 1, 2, 1);
        assert_eq!(c, vec![11.0]);
    }

    #[test]
    fn gelu_is_odd_ish_and_bounded_below() {
        assert!((gelu(0.0f64)).abs() < 1e-15);
        assert!(gelu(3.0f64) > 2.9);
        assert!(gelu(-3.0f64).abs() < 0.01);
    }

    #[test]
    fn logistic_symmetry() {
        let p = logistic(1.3f64);
        let q = logistic(-1.3f64);
        assert!((p + q - 1.0).abs() < 1e-15);
    }
}
