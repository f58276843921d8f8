use crate::error::{Error, Result};
use crate::tensor::Tensor;

/// Signed fixed-point tensor: integer payloads with `frac_bits` fractional
/// bits (scale `2^frac_bits`) stored in `bit_width` signed bits.
///
/// Every integer lies in `[-2^(b-1), 2^(b-1) - 1]`; the represented value is
/// `int / 2^frac_bits`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointTensor {
    pub shape: Vec<usize>,
    pub ints: Vec<i64>,
    pub bit_width: u8,
    pub frac_bits: u8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Encoding {
    pub bit_width: u8,
    pub frac_bits: u8,
}

impl Encoding {
    pub fn new(bit_width: u8, frac_bits: u8) -> Result<Self> {
        if bit_width == 0 || bit_width > 32 {
            return Err(Error::Param(format!("bit_width must be in 1..=32, got {bit_width}")));
        }
        if frac_bits >= bit_width {
            return Err(Error::Param(format!(
                "frac_bits ({frac_bits}) must be < bit_width ({bit_width})"
            )));
        }
        Ok(Encoding { bit_width, frac_bits })
    }

    pub fn scale(&self) -> f64 {
        (1i64 << self.frac_bits) as f64
    }

    pub fn max_int(&self) -> i64 {
        (1i64 << (self.bit_width - 1)) - 1
    }

    pub fn min_int(&self) -> i64 {
        -(1i64 << (self.bit_width - 1))
    }
}

/// Clamps `v` into the signed range of `enc`; returns the value and whether
/// saturation occurred.
pub fn saturate(v: i64, enc: Encoding) -> (i64, bool) {
    if v > enc.max_int() {
        (enc.max_int(), true)
    } else if v < enc.min_int() {
        (enc.min_int(), true)
    } else {
        (v, false)
    }
}

/// Divides `acc` by `2^shift` rounding ties to even (shift >= 0); a negative
/// shift multiplies exactly. This is the single rescaling primitive used
/// after every fixed-point product.
pub fn rescale_round_half_even(acc: i64, shift: i32) -> i64 {
    if shift <= 0 {
        return acc << (-shift) as u32;
    }
    let s = shift as u32;
    let floor = acc >> s;
    let rem = acc - (floor << s);
    let half = 1i64 << (s - 1);
    if rem > half || (rem == half && floor & 1 == 1) {
        floor + 1
    } else {
        floor
    }
}

/// Round-to-nearest-even quantization of `t` at the given encoding, with
/// saturating clamp into the signed range. Returns the tensor and the
/// number of saturated elements.
pub fn quantize_counting(t: &Tensor, enc: Encoding) -> (FixedPointTensor, u64) {
    let scale = enc.scale();
    let mut saturated = 0u64;
    let ints = t
        .data()
        .iter()
        .map(|&v| {
            let q = (v * scale).round_ties_even() as i64;
            let (q, sat) = saturate(q, enc);
            if sat {
                saturated += 1;
            }
            q
        })
        .collect();
    (
        FixedPointTensor {
            shape: t.shape().to_vec(),
            ints,
            bit_width: enc.bit_width,
            frac_bits: enc.frac_bits,
        },
        saturated,
    )
}

/// See [`quantize_counting`]; validates the encoding parameters.
pub fn quantize(t: &Tensor, bit_width: u8, frac_bits: u8) -> Result<FixedPointTensor> {
    let enc = Encoding::new(bit_width, frac_bits)?;
    Ok(quantize_counting(t, enc).0)
}

pub fn dequantize(t: &FixedPointTensor) -> Tensor {
    let scale = (1i64 << t.frac_bits) as f64;
    Tensor::from_fn(t.shape.clone(), |i| t.ints[i] as f64 / scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SeedRng;

    #[test]
    fn half_at_b8_f6_is_32() {
        let t = Tensor::new(vec![1], vec![0.5]).unwrap();
        assert_eq!(quantize(&t, 8, 6).unwrap().ints, vec![32]);
    }

    #[test]
    fn saturates_at_signed_range() {
        let t = Tensor::new(vec![2], vec![3.0, -3.0]).unwrap();
        let q = quantize(&t, 8, 6).unwrap();
        assert_eq!(q.ints, vec![127, -128]);
    }

    #[test]
    fn frac_bits_must_be_below_bit_width() {
        let t = Tensor::zeros(vec![1]);
        assert!(quantize(&t, 8, 8).is_err());
        assert!(quantize(&t, 8, 9).is_err());
    }

    #[test]
    fn roundtrip_error_bounded_by_half_step() {
        // elementwise oracle: non-saturating values reconstruct within 2^(-f-1)
        let mut rng = SeedRng::new(3);
        let enc = Encoding::new(10, 7).unwrap();
        let lim = (enc.max_int() as f64) / enc.scale();
        let t = Tensor::from_fn(vec![512], |_| (rng.uniform() * 2.0 - 1.0) * lim);
        let q = quantize_counting(&t, enc).0;
        let back = dequantize(&q);
        let half_step = 0.5 / enc.scale();
        for (a, b) in back.data().iter().zip(t.data()) {
            assert!((a - b).abs() <= half_step + 1e-15, "{a} vs {b}");
        }
    }

    #[test]
    fn ties_round_to_even() {
        // 0.5 ulp cases at f=1: 0.25 -> 0.5 int = 0.5 -> even 0; 0.75 -> 1.5 -> 2
        let t = Tensor::new(vec![4], vec![0.25, 0.75, -0.25, -0.75]).unwrap();
        let q = quantize(&t, 8, 1).unwrap();
        assert_eq!(q.ints, vec![0, 2, 0, -2]);
    }

    #[test]
    fn rescale_matches_float_oracle() {
        let mut rng = SeedRng::new(17);
        for _ in 0..20_000 {
            let acc = (rng.uniform() * 2.0 - 1.0) * 1e12;
            let acc = acc as i64;
            for shift in 1..=16 {
                let got = rescale_round_half_even(acc, shift);
                let want = (acc as f64 / (1i64 << shift) as f64).round_ties_even() as i64;
                assert_eq!(got, want, "acc={acc} shift={shift}");
            }
        }
    }

    #[test]
    fn rescale_negative_shift_multiplies() {
        assert_eq!(rescale_round_half_even(3, -2), 12);
        assert_eq!(rescale_round_half_even(-3, -1), -6);
        assert_eq!(rescale_round_half_even(7, 0), 7);
    }
}
