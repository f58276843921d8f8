use crate::error::{Error, Result};
use crate::tensor::Tensor;

/// Orthonormal type-II DCT coefficient matrix for size `d`:
/// `C[m][i] = alpha_m * cos(pi * (2i + 1) * m / (2d))` with
/// `alpha_0 = sqrt(1/d)` and `alpha_m = sqrt(2/d)` otherwise.
fn cos_matrix(d: usize) -> Vec<f64> {
    let mut c = vec![0.0; d * d];
    let dd = d as f64;
    for m in 0..d {
        let alpha = if m == 0 { (1.0 / dd).sqrt() } else { (2.0 / dd).sqrt() };
        for i in 0..d {
            let angle = std::f64::consts::PI * (2 * i + 1) as f64 * m as f64 / (2.0 * dd);
            c[m * d + i] = alpha * angle.cos();
        }
    }
    c
}

fn require_square(t: &Tensor) -> Result<usize> {
    match t.shape() {
        [a, b] if a == b => Ok(*a),
        s => Err(Error::Shape(format!("expected square d x d matrix, got {s:?}"))),
    }
}

// out = A * B where A is picked row-major or transposed via `ta`.
fn mul(a: &[f64], ta: bool, b: &[f64], tb: bool, d: usize) -> Vec<f64> {
    let mut out = vec![0.0; d * d];
    for r in 0..d {
        for col in 0..d {
            let mut acc = 0.0;
            for k in 0..d {
                let av = if ta { a[k * d + r] } else { a[r * d + k] };
                let bv = if tb { b[col * d + k] } else { b[k * d + col] };
                acc += av * bv;
            }
            out[r * d + col] = acc;
        }
    }
    out
}

/// 2-D orthonormal DCT of a square matrix: `V = C * X * C^T`.
pub fn dct2(x: &Tensor) -> Result<Tensor> {
    let d = require_square(x)?;
    let c = cos_matrix(d);
    let cx = mul(&c, false, x.data(), false, d);
    Tensor::new(vec![d, d], mul(&cx, false, &c, true, d))
}

/// Inverse of [`dct2`]: `X = C^T * V * C`.
pub fn idct2(v: &Tensor) -> Result<Tensor> {
    let d = require_square(v)?;
    let c = cos_matrix(d);
    let cv = mul(&c, true, v.data(), false, d);
    Tensor::new(vec![d, d], mul(&cv, false, &c, false, d))
}

/// The `(m, n)` DCT basis image of size `d x d`, i.e. `idct2` of a unit
/// coefficient at `(m, n)`. Attacks use this directly so a single-coefficient
/// probe costs O(d^2) instead of a full transform.
pub fn basis_image(d: usize, m: usize, n: usize) -> Tensor {
    assert!(m < d && n < d, "basis index out of range");
    let dd = d as f64;
    let am = if m == 0 { (1.0 / dd).sqrt() } else { (2.0 / dd).sqrt() };
    let an = if n == 0 { (1.0 / dd).sqrt() } else { (2.0 / dd).sqrt() };
    Tensor::from_fn(vec![d, d], |idx| {
        let (i, j) = (idx / d, idx % d);
        let ci = (std::f64::consts::PI * (2 * i + 1) as f64 * m as f64 / (2.0 * dd)).cos();
        let cj = (std::f64::consts::PI * (2 * j + 1) as f64 * n as f64 / (2.0 * dd)).cos();
        am * an * ci * cj
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SeedRng;
    use crate::tensor::l2_norm;

    /// Brute-force oracle: evaluates the defining double sum verbatim,
    /// independent of the matrix-product implementation path.
    fn dct2_oracle(x: &[f64], d: usize) -> Vec<f64> {
        let dd = d as f64;
        let alpha = |k: usize| if k == 0 { (1.0 / dd).sqrt() } else { (2.0 / dd).sqrt() };
        let mut v = vec![0.0; d * d];
        for m in 0..d {
            for n in 0..d {
                let mut acc = 0.0;
                for i in 0..d {
                    for j in 0..d {
                        acc += x[i * d + j]
                            * (std::f64::consts::PI * (2 * i + 1) as f64 * m as f64 / (2.0 * dd))
                                .cos()
                            * (std::f64::consts::PI * (2 * j + 1) as f64 * n as f64 / (2.0 * dd))
                                .cos();
                    }
                }
                v[m * d + n] = alpha(m) * alpha(n) * acc;
            }
        }
        v
    }

    #[test]
    fn constant_image_has_only_dc() {
        let x = Tensor::new(vec![2, 2], vec![1.0; 4]).unwrap();
        let v = dct2(&x).unwrap();
        assert!((v.data()[0] - 2.0).abs() < 1e-12);
        assert!(v.data()[1..].iter().all(|c| c.abs() < 1e-12));
    }

    #[test]
    fn single_corner_pixel_d2() {
        // derived by direct evaluation of the defining formula
        let x = Tensor::new(vec![2, 2], vec![1.0, 0.0, 0.0, 0.0]).unwrap();
        let v = dct2(&x).unwrap();
        for &c in v.data() {
            assert!((c - 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn d1_is_identity() {
        let x = Tensor::new(vec![1, 1], vec![0.73]).unwrap();
        assert!((dct2(&x).unwrap().data()[0] - 0.73).abs() < 1e-15);
        assert!((idct2(&x).unwrap().data()[0] - 0.73).abs() < 1e-15);
    }

    #[test]
    fn idct_of_dc_is_constant() {
        let v = Tensor::new(vec![2, 2], vec![2.0, 0.0, 0.0, 0.0]).unwrap();
        let x = idct2(&v).unwrap();
        for &p in x.data() {
            assert!((p - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn non_square_rejected() {
        let x = Tensor::new(vec![2, 3], vec![0.0; 6]).unwrap();
        assert!(dct2(&x).is_err());
        assert!(idct2(&x).is_err());
        let x3 = Tensor::zeros(vec![2, 2, 1]);
        assert!(dct2(&x3).is_err());
    }

    #[test]
    fn matches_brute_force_oracle() {
        let mut rng = SeedRng::new(11);
        for &d in &[2usize, 3, 5, 8] {
            let x = Tensor::from_fn(vec![d, d], |_| rng.uniform() * 2.0 - 1.0);
            let v = dct2(&x).unwrap();
            let oracle = dct2_oracle(x.data(), d);
            for (a, b) in v.data().iter().zip(&oracle) {
                assert!((a - b).abs() < 1e-10, "d={d}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn roundtrip_and_parseval() {
        let mut rng = SeedRng::new(5);
        for &d in &[2usize, 4, 8, 16, 32] {
            for _ in 0..20 {
                let x = Tensor::from_fn(vec![d, d], |_| rng.uniform() * 2.0 - 1.0);
                let v = dct2(&x).unwrap();
                let back = idct2(&v).unwrap();
                for (a, b) in back.data().iter().zip(x.data()) {
                    assert!((a - b).abs() < 1e-9);
                }
                assert!((l2_norm(&v) - l2_norm(&x)).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn basis_image_matches_idct_of_unit_coefficient() {
        for &d in &[2usize, 3, 8] {
            for m in 0..d {
                for n in 0..d {
                    let mut e = Tensor::zeros(vec![d, d]);
                    e.data_mut()[m * d + n] = 1.0;
                    let via_idct = idct2(&e).unwrap();
                    let b = basis_image(d, m, n);
                    for (a, c) in b.data().iter().zip(via_idct.data()) {
                        assert!((a - c).abs() < 1e-12);
                    }
                    // orthonormal basis images have unit l2 norm
                    assert!((l2_norm(&b) - 1.0).abs() < 1e-12);
                }
            }
        }
    }
}
