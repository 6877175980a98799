use rand::Rng;
use rand_distr::{Distribution, Normal};

use super::NeuralError;
use crate::scalar::{dot, Scalar};

/// Parameters of the attention layer
/// `t = sum_i alpha_i h_i`, `alpha = softmax(hhat_i . context)`,
/// `hhat_i = tanh(W h_i + b)`.
#[derive(Debug, Clone)]
pub struct AttentionParams<S> {
    /// Square projection, `dim x dim`, row-major.
    pub w: Vec<S>,
    pub b: Vec<S>,
    pub context: Vec<S>,
    pub dim: usize,
}

#[derive(Debug, Clone)]
pub struct AttentionTrace<S> {
    pub inputs: Vec<Vec<S>>,
    pub hhat: Vec<Vec<S>>,
    pub weights: Vec<S>,
    pub output: Vec<S>,
}

#[derive(Debug, Clone)]
pub struct AttentionGrads<S> {
    pub w: Vec<S>,
    pub b: Vec<S>,
    pub context: Vec<S>,
    pub inputs: Vec<Vec<S>>,
}

impl<S: Scalar> AttentionParams<S> {
    pub fn zeros(dim: usize) -> Self {
        Self {
            w: vec![S::zero(); dim * dim],
            b: vec![S::zero(); dim],
            context: vec![S::zero(); dim],
            dim,
        }
    }

    /// Xavier projection; context vector from N(0, 0.01^2).
    pub fn random<R: Rng>(dim: usize, rng: &mut R) -> Self {
        let bound = (6.0 / (2 * dim) as f64).sqrt();
        let w = (0..dim * dim)
            .map(|_| S::from_f64(rng.gen_range(-bound..bound)))
            .collect();
        let normal = Normal::new(0.0, 0.01).unwrap();
        let context = (0..dim)
            .map(|_| S::from_f64(normal.sample(rng)))
            .collect();
        Self {
            w,
            b: vec![S::zero(); dim],
            context,
            dim,
        }
    }

    pub fn param_count(&self) -> usize {
        self.w.len() + self.b.len() + self.context.len()
    }

    pub fn zero_grads(&self, m: usize) -> AttentionGrads<S> {
        AttentionGrads {
            w: vec![S::zero(); self.w.len()],
            b: vec![S::zero(); self.b.len()],
            context: vec![S::zero(); self.dim],
            inputs: vec![vec![S::zero(); self.dim]; m],
        }
    }
}

pub fn attention_forward<S: Scalar>(
    rows: &[Vec<S>],
    params: &AttentionParams<S>,
) -> Result<AttentionTrace<S>, NeuralError> {
    if rows.is_empty() {
        return Err(NeuralError::ShapeMismatch {
            expected: 1,
            got: 0,
            context: "attention_forward rows",
        });
    }
    let d = params.dim;
    for r in rows {
        if r.len() != d {
            return Err(NeuralError::ShapeMismatch {
                expected: d,
                got: r.len(),
                context: "attention_forward row width",
            });
        }
    }
    let mut hhat = Vec::with_capacity(rows.len());
    let mut logits = Vec::with_capacity(rows.len());
    for h in rows {
        let mut a = Vec::with_capacity(d);
        for r in 0..d {
            let wrow = &params.w[r * d..(r + 1) * d];
            a.push((dot(wrow, h) + params.b[r]).tanh());
        }
        logits.push(dot(&a, &params.context));
        hhat.push(a);
    }
    // softmax with max-shift
    let max = logits
        .iter()
        .cloned()
        .fold(S::neg_infinity(), |m, x| if x > m { x } else { m });
    let mut weights: Vec<S> = logits.iter().map(|&l| (l - max).exp()).collect();
    let z: S = weights.iter().cloned().sum();
    for w in &mut weights {
        *w = *w / z;
    }
    let mut output = vec![S::zero(); d];
    for (a, h) in weights.iter().zip(rows) {
        crate::scalar::axpy(*a, h, &mut output);
    }
    Ok(AttentionTrace {
        inputs: rows.to_vec(),
        hhat,
        weights,
        output,
    })
}

pub fn attention_backward<S: Scalar>(
    params: &AttentionParams<S>,
    trace: &AttentionTrace<S>,
    upstream: &[S],
) -> Result<AttentionGrads<S>, NeuralError> {
    let d = params.dim;
    if upstream.len() != d {
        return Err(NeuralError::ShapeMismatch {
            expected: d,
            got: upstream.len(),
            context: "attention_backward upstream",
        });
    }
    let m = trace.inputs.len();
    let mut grads = params.zero_grads(m);

    // d_alpha_i = g . h_i
    let d_alpha: Vec<S> = trace.inputs.iter().map(|h| dot(upstream, h)).collect();
    // softmax backward: d_logit_i = alpha_i (d_alpha_i - sum_j alpha_j d_alpha_j)
    let mix: S = trace
        .weights
        .iter()
        .zip(&d_alpha)
        .map(|(&a, &g)| a * g)
        .sum();
    for i in 0..m {
        let d_logit = trace.weights[i] * (d_alpha[i] - mix);
        let hhat = &trace.hhat[i];
        // logit_i = hhat_i . context
        crate::scalar::axpy(d_logit, hhat, &mut grads.context);
        // d_hhat = d_logit * context, through tanh
        for r in 0..d {
            let d_pre = d_logit * params.context[r] * (S::one() - hhat[r] * hhat[r]);
            grads.b[r] += d_pre;
            let wrow = &params.w[r * d..(r + 1) * d];
            let grow = &mut grads.w[r * d..(r + 1) * d];
            for c in 0..d {
                grow[c] += d_pre * trace.inputs[i][c];
                grads.inputs[i][c] += d_pre * wrow[c];
            }
        }
        // direct path t = sum alpha_i h_i
        crate::scalar::axpy(trace.weights[i], upstream, &mut grads.inputs[i]);
    }
    Ok(grads)
}
