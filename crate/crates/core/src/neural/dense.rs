use rand::Rng;
use serde::{Deserialize, Serialize};

use super::NeuralError;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Activation {
    Tanh,
    Identity,
    Sigmoid,
}

impl Activation {
    fn apply<S: Scalar>(self, x: S) -> S {
        match self {
            Activation::Tanh => x.tanh(),
            Activation::Identity => x,
            Activation::Sigmoid => crate::scalar::sigmoid(x),
        }
    }

    /// Derivative expressed through the activation output `y`.
    fn derivative_from_output<S: Scalar>(self, y: S) -> S {
        match self {
            Activation::Tanh => S::one() - y * y,
            Activation::Identity => S::one(),
            Activation::Sigmoid => y * (S::one() - y),
        }
    }
}

/// Densely connected layer `y = act(W x + b)` with `W` stored row-major
/// as `out_dim` rows of `in_dim`.
#[derive(Debug, Clone)]
pub struct DenseLayer<S> {
    pub w: Vec<S>,
    pub b: Vec<S>,
    pub in_dim: usize,
    pub out_dim: usize,
    pub activation: Activation,
}

#[derive(Debug, Clone)]
pub struct DenseTrace<S> {
    pub input: Vec<S>,
    pub output: Vec<S>,
}

#[derive(Debug, Clone)]
pub struct DenseGrads<S> {
    pub w: Vec<S>,
    pub b: Vec<S>,
    /// Gradient with respect to the layer input.
    pub input: Vec<S>,
}

impl<S: Scalar> DenseLayer<S> {
    pub fn zeros(in_dim: usize, out_dim: usize, activation: Activation) -> Self {
        Self {
            w: vec![S::zero(); in_dim * out_dim],
            b: vec![S::zero(); out_dim],
            in_dim,
            out_dim,
            activation,
        }
    }

    /// Xavier-uniform initialization scaled by fan-in/fan-out.
    pub fn xavier<R: Rng>(in_dim: usize, out_dim: usize, activation: Activation, rng: &mut R) -> Self {
        let bound = (6.0 / (in_dim + out_dim) as f64).sqrt();
        let w = (0..in_dim * out_dim)
            .map(|_| S::from_f64(rng.gen_range(-bound..bound)))
            .collect();
        Self {
            w,
            b: vec![S::zero(); out_dim],
            in_dim,
            out_dim,
            activation,
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut l = Self::zeros(dim, dim, Activation::Identity);
        for i in 0..dim {
            l.w[i * dim + i] = S::one();
        }
        l
    }

    pub fn zero_grads(&self) -> DenseGrads<S> {
        DenseGrads {
            w: vec![S::zero(); self.w.len()],
            b: vec![S::zero(); self.b.len()],
            input: vec![S::zero(); self.in_dim],
        }
    }

    pub fn param_count(&self) -> usize {
        self.w.len() + self.b.len()
    }
}

pub fn dense_forward<S: Scalar>(
    layer: &DenseLayer<S>,
    x: &[S],
) -> Result<DenseTrace<S>, NeuralError> {
    if x.len() != layer.in_dim {
        return Err(NeuralError::ShapeMismatch {
            expected: layer.in_dim,
            got: x.len(),
            context: "dense_forward input",
        });
    }
    let mut out = Vec::with_capacity(layer.out_dim);
    for r in 0..layer.out_dim {
        let row = &layer.w[r * layer.in_dim..(r + 1) * layer.in_dim];
        let pre = crate::scalar::dot(row, x) + layer.b[r];
        let y = layer.activation.apply(pre);
        if !y.is_finite() {
            return Err(NeuralError::NonFiniteActivation("dense layer"));
        }
        out.push(y);
    }
    Ok(DenseTrace {
        input: x.to_vec(),
        output: out,
    })
}

pub fn dense_backward<S: Scalar>(
    layer: &DenseLayer<S>,
    trace: &DenseTrace<S>,
    upstream: &[S],
) -> Result<DenseGrads<S>, NeuralError> {
    if upstream.len() != layer.out_dim {
        return Err(NeuralError::ShapeMismatch {
            expected: layer.out_dim,
            got: upstream.len(),
            context: "dense_backward upstream",
        });
    }
    let mut grads = layer.zero_grads();
    for r in 0..layer.out_dim {
        let d_pre = upstream[r] * layer.activation.derivative_from_output(trace.output[r]);
        grads.b[r] = d_pre;
        let wrow = &layer.w[r * layer.in_dim..(r + 1) * layer.in_dim];
        let grow = &mut grads.w[r * layer.in_dim..(r + 1) * layer.in_dim];
        for c in 0..layer.in_dim {
            grow[c] = d_pre * trace.input[c];
            grads.input[c] += d_pre * wrow[c];
        }
    }
    Ok(grads)
}
