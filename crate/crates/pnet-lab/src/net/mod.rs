//! The PNet oracle: a layered network restricted to FHE-legal operations
//! (integer add/mul only), i.e. convolutions, square activations, average
//! pooling and linear layers, evaluated either in plain f64 or in saturating
//! fixed-point arithmetic with identical structure.

mod io;

pub use io::{load_model, save_model, FORMAT_VERSION};

use crate::error::{Error, Result};
use crate::fixed::{
    dequantize, quantize_counting, rescale_round_half_even, saturate, Encoding, FixedPointTensor,
};
use crate::rng::SeedRng;
use crate::tensor::Tensor;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConvSpec {
    pub in_c: usize,
    pub out_c: usize,
    pub kh: usize,
    pub kw: usize,
    pub stride: usize,
    pub pad: usize,
}

impl ConvSpec {
    pub fn out_hw(&self, h: usize, w: usize) -> Result<(usize, usize)> {
        if h + 2 * self.pad < self.kh || w + 2 * self.pad < self.kw {
            return Err(Error::Shape(format!(
                "kernel {}x{} larger than padded input {}x{}",
                self.kh,
                self.kw,
                h + 2 * self.pad,
                w + 2 * self.pad
            )));
        }
        Ok((
            (h + 2 * self.pad - self.kh) / self.stride + 1,
            (w + 2 * self.pad - self.kw) / self.stride + 1,
        ))
    }

    pub fn weight_len(&self) -> usize {
        self.out_c * self.in_c * self.kh * self.kw
    }
}

/// A layer of the unquantized model. Weight layouts:
/// conv `[out_c][in_c][kh][kw]`, linear `[out][in]`, both row-major.
#[derive(Debug, Clone, PartialEq)]
pub enum FloatLayer {
    Conv {
        spec: ConvSpec,
        weights: Vec<f64>,
        bias: Vec<f64>,
    },
    Square,
    AvgPool {
        k: usize,
    },
    Linear {
        out: usize,
        inp: usize,
        weights: Vec<f64>,
        bias: Vec<f64>,
    },
}

/// Trained real-valued model; the source that [`encode_model`] quantizes.
#[derive(Debug, Clone, PartialEq)]
pub struct FloatModel {
    /// Input image shape `[d, d, c]`, channels-last.
    pub input_shape: [usize; 3],
    pub layers: Vec<FloatLayer>,
    pub n_classes: usize,
}

/// Feature-map shapes `(c, h, w)` at each layer boundary; index 0 is the
/// input, index `i + 1` the output of layer `i`.
fn shape_chain(input_shape: [usize; 3], layers: &[FloatLayer]) -> Result<Vec<(usize, usize, usize)>> {
    let [d0, d1, c0] = input_shape;
    let mut dims = vec![(c0, d0, d1)];
    let (mut c, mut h, mut w) = (c0, d0, d1);
    for (idx, layer) in layers.iter().enumerate() {
        match layer {
            FloatLayer::Conv { spec, weights, bias } => {
                if spec.in_c != c {
                    return Err(Error::Shape(format!(
                        "layer {idx}: conv expects {} input channels, got {c}",
                        spec.in_c
                    )));
                }
                if weights.len() != spec.weight_len() || bias.len() != spec.out_c {
                    return Err(Error::Shape(format!("layer {idx}: conv weight/bias size mismatch")));
                }
                let (oh, ow) = spec.out_hw(h, w)?;
                c = spec.out_c;
                h = oh;
                w = ow;
            }
            FloatLayer::Square => {}
            FloatLayer::AvgPool { k } => {
                if *k == 0 || h % k != 0 || w % k != 0 {
                    return Err(Error::Shape(format!(
                        "layer {idx}: avg-pool {k} does not divide {h}x{w}"
                    )));
                }
                h /= k;
                w /= k;
            }
            FloatLayer::Linear { out, inp, weights, bias } => {
                if *inp != c * h * w {
                    return Err(Error::Shape(format!(
                        "layer {idx}: linear expects {} inputs, feature map has {}",
                        inp,
                        c * h * w
                    )));
                }
                if weights.len() != out * inp || bias.len() != *out {
                    return Err(Error::Shape(format!("layer {idx}: linear weight/bias size mismatch")));
                }
                c = *out;
                h = 1;
                w = 1;
            }
        }
        dims.push((c, h, w));
    }
    Ok(dims)
}

impl FloatModel {
    pub fn new(input_shape: [usize; 3], layers: Vec<FloatLayer>) -> Result<Self> {
        let dims = shape_chain(input_shape, &layers)?;
        let last = dims.last().copied().unwrap_or((0, 0, 0));
        match layers.last() {
            Some(FloatLayer::Linear { .. }) => {}
            _ => return Err(Error::Shape("model must end with a linear layer".into())),
        }
        Ok(FloatModel {
            input_shape,
            layers,
            n_classes: last.0,
        })
    }

    /// Per-layer activations in channel-major order; `acts[0]` is the input,
    /// `acts[i + 1]` the output of layer `i`. Used by forward inference,
    /// range calibration, and the trainer's backward pass.
    pub fn forward_trace(&self, x: &Tensor) -> Result<Vec<Vec<f64>>> {
        if x.shape() != self.input_shape {
            return Err(Error::Shape(format!(
                "input shape {:?} does not match model input {:?}",
                x.shape(),
                self.input_shape
            )));
        }
        let [d, _, c] = self.input_shape;
        let mut cur: Vec<f64> = Vec::with_capacity(d * d * c);
        for ch in 0..c {
            cur.extend(x.channel(ch));
        }
        let dims = shape_chain(self.input_shape, &self.layers)?;
        let mut acts = vec![cur];
        for (idx, layer) in self.layers.iter().enumerate() {
            let (ci, hi, wi) = dims[idx];
            let prev = acts.last().unwrap();
            let next = match layer {
                FloatLayer::Conv { spec, weights, bias } => {
                    conv_forward_f64(prev, ci, hi, wi, spec, weights, bias)
                }
                FloatLayer::Square => prev.iter().map(|v| v * v).collect(),
                FloatLayer::AvgPool { k } => avgpool_forward_f64(prev, ci, hi, wi, *k),
                FloatLayer::Linear { out, inp, weights, bias } => {
                    let mut o = bias.clone();
                    for (r, ov) in o.iter_mut().enumerate().take(*out) {
                        let row = &weights[r * inp..(r + 1) * inp];
                        *ov += row.iter().zip(prev.iter()).map(|(a, b)| a * b).sum::<f64>();
                    }
                    o
                }
            };
            acts.push(next);
        }
        Ok(acts)
    }

    /// Plain float inference (the unencrypted-network comparison mode).
    pub fn forward(&self, x: &Tensor) -> Result<ScoreVector> {
        let acts = self.forward_trace(x)?;
        let logits = acts.last().unwrap().clone();
        Ok(ScoreVector::from_logits(logits, 0))
    }
}

fn conv_forward_f64(
    input: &[f64],
    c: usize,
    h: usize,
    w: usize,
    spec: &ConvSpec,
    weights: &[f64],
    bias: &[f64],
) -> Vec<f64> {
    let (oh, ow) = spec.out_hw(h, w).expect("validated at construction");
    let mut out = vec![0.0; spec.out_c * oh * ow];
    for o in 0..spec.out_c {
        for oy in 0..oh {
            for ox in 0..ow {
                let mut acc = bias[o];
                for ic in 0..c {
                    for u in 0..spec.kh {
                        let y = (oy * spec.stride + u) as isize - spec.pad as isize;
                        if y < 0 || y >= h as isize {
                            continue;
                        }
                        for v in 0..spec.kw {
                            let xx = (ox * spec.stride + v) as isize - spec.pad as isize;
                            if xx < 0 || xx >= w as isize {
                                continue;
                            }
                            let wv = weights[((o * c + ic) * spec.kh + u) * spec.kw + v];
                            acc += wv * input[(ic * h + y as usize) * w + xx as usize];
                        }
                    }
                }
                out[(o * oh + oy) * ow + ox] = acc;
            }
        }
    }
    out
}

fn avgpool_forward_f64(input: &[f64], c: usize, h: usize, w: usize, k: usize) -> Vec<f64> {
    let (oh, ow) = (h / k, w / k);
    let inv = 1.0 / (k * k) as f64;
    let mut out = vec![0.0; c * oh * ow];
    for ch in 0..c {
        for oy in 0..oh {
            for ox in 0..ow {
                let mut s = 0.0;
                for u in 0..k {
                    for v in 0..k {
                        s += input[(ch * h + oy * k + u) * w + ox * k + v];
                    }
                }
                out[(ch * oh + oy) * ow + ox] = s * inv;
            }
        }
    }
    out
}

/// Classifier output. Scores are softmax probabilities over the dequantized
/// logits. For defended oracles the normalization invariant is waived: noisy
/// scores are returned unclamped and `defended` is set.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreVector {
    pub scores: Vec<f64>,
    pub logits: Vec<f64>,
    /// Saturating clamps observed during fixed-point evaluation.
    pub saturations: u64,
    pub defended: bool,
}

impl ScoreVector {
    pub fn from_logits(logits: Vec<f64>, saturations: u64) -> Self {
        let m = logits.iter().fold(f64::NEG_INFINITY, |a, &b| a.max(b));
        let exps: Vec<f64> = logits.iter().map(|&v| (v - m).exp()).collect();
        let z: f64 = exps.iter().sum();
        ScoreVector {
            scores: exps.iter().map(|e| e / z).collect(),
            logits,
            saturations,
            defended: false,
        }
    }

    /// Argmax with ties broken toward the lowest class index, so success
    /// flags are deterministic.
    pub fn argmax(&self) -> usize {
        let mut best = 0;
        for (i, &s) in self.scores.iter().enumerate() {
            if s > self.scores[best] {
                best = i;
            }
        }
        best
    }

    /// Top-1 minus runner-up score.
    pub fn margin(&self) -> f64 {
        debug_assert!(self.scores.len() >= 2);
        let top = self.argmax();
        let mut second = f64::NEG_INFINITY;
        for (i, &s) in self.scores.iter().enumerate() {
            if i != top {
                second = second.max(s);
            }
        }
        self.scores[top] - second
    }
}

/// A quantized layer; `enc` is both the weight encoding and the output
/// encoding of the layer.
#[derive(Debug, Clone, PartialEq)]
pub enum QuantLayer {
    Conv {
        spec: ConvSpec,
        weights: FixedPointTensor,
        bias: FixedPointTensor,
        enc: Encoding,
    },
    Square {
        enc: Encoding,
    },
    AvgPool {
        k: usize,
        /// reciprocal of the pool area, quantized at `enc`
        inv_int: i64,
        enc: Encoding,
    },
    Linear {
        out: usize,
        inp: usize,
        weights: FixedPointTensor,
        bias: FixedPointTensor,
        enc: Encoding,
    },
}

impl QuantLayer {
    pub fn enc(&self) -> Encoding {
        match self {
            QuantLayer::Conv { enc, .. }
            | QuantLayer::Square { enc }
            | QuantLayer::AvgPool { enc, .. }
            | QuantLayer::Linear { enc, .. } => *enc,
        }
    }
}

/// Per-layer encodings for [`encode_model`]: one for the input image and one
/// per layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelEncoding {
    pub input: Encoding,
    pub layers: Vec<Encoding>,
}

impl ModelEncoding {
    pub fn uniform(bit_width: u8, frac_bits: u8, n_layers: usize) -> Result<Self> {
        let e = Encoding::new(bit_width, frac_bits)?;
        Ok(ModelEncoding {
            input: e,
            layers: vec![e; n_layers],
        })
    }

    /// The spec default for a bit width: `frac_bits = b - 2`.
    pub fn default_for_bits(bit_width: u8, n_layers: usize) -> Result<Self> {
        Self::uniform(bit_width, bit_width - 2, n_layers)
    }
}

/// The PNet oracle: quantized weights plus the encodings needed to run
/// integer-only inference. Immutable after construction.
#[derive(Debug, Clone, PartialEq)]
pub struct PNetModel {
    pub input_shape: [usize; 3],
    pub input_enc: Encoding,
    pub layers: Vec<QuantLayer>,
    pub n_classes: usize,
    /// Unquantized copy kept for training and float-mode comparisons; not
    /// persisted by [`save_model`].
    pub float_shadow: Option<FloatModel>,
}

impl PNetModel {
    pub fn without_shadow(mut self) -> PNetModel {
        self.float_shadow = None;
        self
    }

    /// Output encoding of the final layer (the encoding RPNet noise shares).
    pub fn output_enc(&self) -> Encoding {
        self.layers.last().map(|l| l.enc()).unwrap_or(self.input_enc)
    }

    /// Fixed-point inference. The input is quantized with the model's input
    /// encoding (saturating, so out-of-range values clamp rather than fail),
    /// every product is rescaled back to the layer's fractional precision
    /// with round-to-nearest-even, and the dequantized logits go through a
    /// float softmax.
    pub fn forward(&self, x: &Tensor) -> Result<ScoreVector> {
        if x.shape() != self.input_shape {
            return Err(Error::Shape(format!(
                "input shape {:?} does not match model input {:?}",
                x.shape(),
                self.input_shape
            )));
        }
        let [d, _, c0] = self.input_shape;
        let mut chan_major = Vec::with_capacity(d * d * c0);
        for ch in 0..c0 {
            chan_major.extend(x.channel(ch));
        }
        let x_cm = Tensor::new(vec![c0, d, d], chan_major)?;
        let (q, mut saturations) = quantize_counting(&x_cm, self.input_enc);

        let mut ints = q.ints;
        let mut frac = self.input_enc.frac_bits as i32;
        let (mut c, mut h, mut w) = (c0, d, d);

        for layer in &self.layers {
            let enc = layer.enc();
            let out_frac = enc.frac_bits as i32;
            let next = match layer {
                QuantLayer::Conv { spec, weights, bias, enc } => {
                    let wf = weights.frac_bits as i32;
                    let bf = bias.frac_bits as i32;
                    let (oh, ow) = spec.out_hw(h, w)?;
                    let bias_shift = frac + wf - bf;
                    let mut out = vec![0i64; spec.out_c * oh * ow];
                    for o in 0..spec.out_c {
                        let b_acc = rescale_round_half_even(bias.ints[o], -bias_shift);
                        for oy in 0..oh {
                            for ox in 0..ow {
                                let mut acc = b_acc;
                                for ic in 0..c {
                                    for u in 0..spec.kh {
                                        let y = (oy * spec.stride + u) as isize - spec.pad as isize;
                                        if y < 0 || y >= h as isize {
                                            continue;
                                        }
                                        for v in 0..spec.kw {
                                            let xx =
                                                (ox * spec.stride + v) as isize - spec.pad as isize;
                                            if xx < 0 || xx >= w as isize {
                                                continue;
                                            }
                                            let wv = weights.ints
                                                [((o * c + ic) * spec.kh + u) * spec.kw + v];
                                            acc += wv
                                                * ints[(ic * h + y as usize) * w + xx as usize];
                                        }
                                    }
                                }
                                let r = rescale_round_half_even(acc, frac + wf - out_frac);
                                let (r, sat) = saturate(r, *enc);
                                saturations += sat as u64;
                                out[(o * oh + oy) * ow + ox] = r;
                            }
                        }
                    }
                    c = spec.out_c;
                    h = oh;
                    w = ow;
                    out
                }
                QuantLayer::Square { enc } => ints
                    .iter()
                    .map(|&v| {
                        let r = rescale_round_half_even(v * v, 2 * frac - out_frac);
                        let (r, sat) = saturate(r, *enc);
                        saturations += sat as u64;
                        r
                    })
                    .collect(),
                QuantLayer::AvgPool { k, inv_int, enc } => {
                    let (oh, ow) = (h / k, w / k);
                    let mut out = vec![0i64; c * oh * ow];
                    for ch in 0..c {
                        for oy in 0..oh {
                            for ox in 0..ow {
                                let mut s = 0i64;
                                for u in 0..*k {
                                    for v in 0..*k {
                                        s += ints[(ch * h + oy * k + u) * w + ox * k + v];
                                    }
                                }
                                let r = rescale_round_half_even(
                                    s * inv_int,
                                    frac + enc.frac_bits as i32 - out_frac,
                                );
                                let (r, sat) = saturate(r, *enc);
                                saturations += sat as u64;
                                out[(ch * oh + oy) * ow + ox] = r;
                            }
                        }
                    }
                    h = oh;
                    w = ow;
                    out
                }
                QuantLayer::Linear { out, inp, weights, bias, enc } => {
                    let wf = weights.frac_bits as i32;
                    let bf = bias.frac_bits as i32;
                    let bias_shift = frac + wf - bf;
                    let mut o = vec![0i64; *out];
                    for (r, ov) in o.iter_mut().enumerate() {
                        let mut acc = rescale_round_half_even(bias.ints[r], -bias_shift);
                        let row = &weights.ints[r * inp..(r + 1) * inp];
                        for (wv, xv) in row.iter().zip(ints.iter()) {
                            acc += wv * xv;
                        }
                        let v = rescale_round_half_even(acc, frac + wf - out_frac);
                        let (v, sat) = saturate(v, *enc);
                        saturations += sat as u64;
                        *ov = v;
                    }
                    c = *out;
                    h = 1;
                    w = 1;
                    o
                }
            };
            ints = next;
            frac = out_frac;
        }

        let scale = (1i64 << frac) as f64;
        let logits: Vec<f64> = ints.iter().map(|&v| v as f64 / scale).collect();
        Ok(ScoreVector::from_logits(logits, saturations))
    }

    /// Float-mode inference through the retained shadow model.
    pub fn forward_float(&self, x: &Tensor) -> Result<ScoreVector> {
        match &self.float_shadow {
            Some(m) => m.forward(x),
            None => Err(Error::Param("model has no float shadow (loaded from file?)".into())),
        }
    }
}

/// Quantizes a trained float model into a PNet, retaining the float copy as
/// `float_shadow`.
pub fn encode_model(model: &FloatModel, encoding: &ModelEncoding) -> Result<PNetModel> {
    if encoding.layers.len() != model.layers.len() {
        return Err(Error::Param(format!(
            "encoding has {} layer entries, model has {}",
            encoding.layers.len(),
            model.layers.len()
        )));
    }
    let mut layers = Vec::with_capacity(model.layers.len());
    for (layer, &enc) in model.layers.iter().zip(&encoding.layers) {
        layers.push(match layer {
            FloatLayer::Conv { spec, weights, bias } => {
                let wt = Tensor::new(vec![weights.len()], weights.clone())?;
                let bt = Tensor::new(vec![bias.len()], bias.clone())?;
                QuantLayer::Conv {
                    spec: *spec,
                    weights: quantize_counting(&wt, enc).0,
                    bias: quantize_counting(&bt, enc).0,
                    enc,
                }
            }
            FloatLayer::Square => QuantLayer::Square { enc },
            FloatLayer::AvgPool { k } => {
                let inv = 1.0 / ((k * k) as f64);
                QuantLayer::AvgPool {
                    k: *k,
                    inv_int: (inv * enc.scale()).round_ties_even() as i64,
                    enc,
                }
            }
            FloatLayer::Linear { out, inp, weights, bias } => {
                let wt = Tensor::new(vec![weights.len()], weights.clone())?;
                let bt = Tensor::new(vec![bias.len()], bias.clone())?;
                QuantLayer::Linear {
                    out: *out,
                    inp: *inp,
                    weights: quantize_counting(&wt, enc).0,
                    bias: quantize_counting(&bt, enc).0,
                    enc,
                }
            }
        });
    }
    Ok(PNetModel {
        input_shape: model.input_shape,
        input_enc: encoding.input,
        layers,
        n_classes: model.n_classes,
        float_shadow: Some(model.clone()),
    })
}

/// Rescales a float model, layer by layer, so that on the calibration batch
/// every activation, weight and bias fits within `target_max`. Scaling a
/// conv/linear layer's weights and bias by a common positive factor scales
/// its output by the same factor, square activations square the factor, and
/// pooling passes it through; the final logits end up multiplied by one
/// positive constant, so the argmax on every input is unchanged.
pub fn calibrate_for_range(
    model: &FloatModel,
    batch: &[Tensor],
    target_max: f64,
) -> Result<FloatModel> {
    if batch.is_empty() {
        return Err(Error::Param("calibration batch is empty".into()));
    }
    let n_layers = model.layers.len();
    // observed max |activation| per layer output on the original model
    let mut max_out = vec![0.0f64; n_layers];
    for x in batch {
        let acts = model.forward_trace(x)?;
        for (m, a) in max_out.iter_mut().zip(acts.iter().skip(1)) {
            for v in a {
                *m = m.max(v.abs());
            }
        }
    }

    let mut out = model.clone();
    // g = scale of the current layer's input relative to the original model
    let mut g = 1.0f64;
    for i in 0..n_layers {
        match &mut out.layers[i] {
            FloatLayer::Square => {
                g = g * g;
                continue;
            }
            FloatLayer::AvgPool { .. } => continue,
            FloatLayer::Conv { weights, bias, .. } | FloatLayer::Linear { weights, bias, .. } => {
                let w_max = weights.iter().fold(0.0f64, |m, v| m.max(v.abs()));
                let b_max = bias.iter().fold(0.0f64, |m, v| m.max(v.abs()));
                // direct output constraint
                let mut g_out = safe_cap(target_max, max_out[i]);
                // look ahead: squares before the next parametric layer square
                // the output scale, so constrain through them too
                let mut exponent = 1u32;
                for j in (i + 1)..n_layers {
                    match &model.layers[j] {
                        FloatLayer::Square => {
                            exponent *= 2;
                            let cap = safe_cap(target_max, max_out[j]);
                            g_out = g_out.min(cap.powf(1.0 / exponent as f64));
                        }
                        FloatLayer::AvgPool { .. } => {}
                        _ => break,
                    }
                }
                // weight and bias range constraints
                g_out = g_out.min(g * safe_cap(target_max, w_max));
                g_out = g_out.min(safe_cap(target_max, b_max));
                let s = g_out / g;
                for v in weights.iter_mut() {
                    *v *= s;
                }
                for v in bias.iter_mut() {
                    *v *= g_out;
                }
                g = g_out;
            }
        }
    }
    Ok(out)
}

fn safe_cap(target: f64, observed: f64) -> f64 {
    if observed <= 0.0 {
        1.0
    } else {
        target / observed
    }
}

/// CryptoNets-style digit net: one strided conv block, one square
/// activation, two FC layers.
pub fn mnist_cryptonets(filters: usize, hidden: usize, rng: &mut SeedRng) -> Result<FloatModel> {
    let spec = ConvSpec { in_c: 1, out_c: filters, kh: 5, kw: 5, stride: 2, pad: 1 };
    let conv = random_conv(spec, rng);
    let feat = filters * 13 * 13;
    let layers = vec![
        conv,
        FloatLayer::Square,
        random_linear(feat, hidden, rng),
        random_linear(hidden, 10, rng),
    ];
    FloatModel::new([28, 28, 1], layers)
}

/// Three conv blocks (conv, square, 2x2 avg-pool) with 32/64/128 filters
/// plus two FC layers, for 32x32x3 inputs.
pub fn cifar_net(rng: &mut SeedRng) -> Result<FloatModel> {
    let mut layers = Vec::new();
    let mut in_c = 3;
    for &out_c in &[32usize, 64, 128] {
        let spec = ConvSpec { in_c, out_c, kh: 3, kw: 3, stride: 1, pad: 1 };
        layers.push(random_conv(spec, rng));
        layers.push(FloatLayer::Square);
        layers.push(FloatLayer::AvgPool { k: 2 });
        in_c = out_c;
    }
    layers.push(random_linear(128 * 4 * 4, 128, rng));
    layers.push(random_linear(128, 10, rng));
    FloatModel::new([32, 32, 3], layers)
}

fn random_conv(spec: ConvSpec, rng: &mut SeedRng) -> FloatLayer {
    let fan_in = (spec.in_c * spec.kh * spec.kw) as f64;
    let lim = (1.0 / fan_in).sqrt();
    FloatLayer::Conv {
        spec,
        weights: (0..spec.weight_len())
            .map(|_| (2.0 * rng.uniform() - 1.0) * lim)
            .collect(),
        bias: vec![0.0; spec.out_c],
    }
}

fn random_linear(inp: usize, out: usize, rng: &mut SeedRng) -> FloatLayer {
    let lim = (1.0 / inp as f64).sqrt();
    FloatLayer::Linear {
        out,
        inp,
        weights: (0..out * inp).map(|_| (2.0 * rng.uniform() - 1.0) * lim).collect(),
        bias: vec![0.0; out],
    }
}

/// The 1x1 toy model used throughout the tests: conv weight 2, bias 0,
/// square activation, identity FC.
pub fn toy_model() -> FloatModel {
    FloatModel::new(
        [1, 1, 1],
        vec![
            FloatLayer::Conv {
                spec: ConvSpec { in_c: 1, out_c: 1, kh: 1, kw: 1, stride: 1, pad: 0 },
                weights: vec![2.0],
                bias: vec![0.0],
            },
            FloatLayer::Square,
            FloatLayer::Linear { out: 1, inp: 1, weights: vec![1.0], bias: vec![0.0] },
        ],
    )
    .unwrap()
}
