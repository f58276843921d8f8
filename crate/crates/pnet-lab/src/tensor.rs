use crate::error::{Error, Result};

/// Dense real-valued tensor, row-major, channels-last for images.
///
/// A `d x d x c` image stores element `(row i, col j, channel ch)` at
/// `(i * d + j) * c + ch`. All exported operations keep every element finite.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor {
    shape: Vec<usize>,
    data: Vec<f64>,
}

impl Tensor {
    pub fn new(shape: Vec<usize>, data: Vec<f64>) -> Result<Self> {
        let n: usize = shape.iter().product();
        if n != data.len() {
            return Err(Error::Shape(format!(
                "shape {:?} implies {} elements, got {}",
                shape,
                n,
                data.len()
            )));
        }
        if !data.iter().all(|v| v.is_finite()) {
            return Err(Error::Param("tensor contains non-finite values".into()));
        }
        Ok(Tensor { shape, data })
    }

    pub fn zeros(shape: Vec<usize>) -> Self {
        let n = shape.iter().product();
        Tensor {
            shape,
            data: vec![0.0; n],
        }
    }

    pub fn from_fn(shape: Vec<usize>, f: impl FnMut(usize) -> f64) -> Self {
        let n: usize = shape.iter().product();
        Tensor {
            shape,
            data: (0..n).map(f).collect(),
        }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<f64> {
        self.data
    }

    /// Image accessor for `[d, d, c]` tensors.
    pub fn at(&self, i: usize, j: usize, ch: usize) -> f64 {
        debug_assert_eq!(self.shape.len(), 3);
        let (d, c) = (self.shape[1], self.shape[2]);
        self.data[(i * d + j) * c + ch]
    }

    pub fn set(&mut self, i: usize, j: usize, ch: usize, v: f64) {
        debug_assert_eq!(self.shape.len(), 3);
        let (d, c) = (self.shape[1], self.shape[2]);
        self.data[(i * d + j) * c + ch] = v;
    }

    /// Extracts one channel of a `[d, d, c]` image as a row-major `d*d` matrix.
    pub fn channel(&self, ch: usize) -> Vec<f64> {
        let (d, c) = (self.shape[1], self.shape[2]);
        let mut out = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                out.push(self.data[(i * d + j) * c + ch]);
            }
        }
        out
    }

    pub fn add_assign(&mut self, other: &Tensor) {
        assert_eq!(self.shape, other.shape, "tensor shape mismatch in add");
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += b;
        }
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.shape, other.shape, "tensor shape mismatch in sub");
        Tensor {
            shape: self.shape.clone(),
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, s: f64) -> Tensor {
        Tensor {
            shape: self.shape.clone(),
            data: self.data.iter().map(|v| v * s).collect(),
        }
    }

    /// Elementwise clamp into `[lo, hi]`.
    pub fn clamped(&self, lo: f64, hi: f64) -> Tensor {
        Tensor {
            shape: self.shape.clone(),
            data: self.data.iter().map(|v| v.clamp(lo, hi)).collect(),
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}

/// Euclidean norm of the flattened tensor.
pub fn l2_norm(t: &Tensor) -> f64 {
    t.data.iter().map(|v| v * v).sum::<f64>().sqrt()
}
