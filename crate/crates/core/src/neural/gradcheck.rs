use crate::scalar::Scalar;

/// Result of comparing an analytic gradient against central differences.
#[derive(Debug, Clone)]
pub struct GradReport {
    pub max_rel_error: f64,
    pub worst_coordinate: usize,
    pub checked: usize,
}

impl GradReport {
    pub fn passes(&self, tol: f64) -> bool {
        self.max_rel_error < tol
    }
}

/// Compare `analytic` against `(f(theta+eps) - f(theta-eps)) / 2eps`
/// coordinate-wise. `f` is evaluated on a scratch copy of `params`.
pub fn grad_check<S, F>(mut f: F, params: &[S], analytic: &[S], epsilon: f64) -> GradReport
where
    S: Scalar,
    F: FnMut(&[S]) -> S,
{
    assert_eq!(params.len(), analytic.len());
    assert!((1e-6..=1e-3).contains(&epsilon), "epsilon out of range");
    let eps = S::from_f64(epsilon);
    let mut scratch = params.to_vec();
    let mut max_rel = 0.0f64;
    let mut worst = 0;
    for i in 0..params.len() {
        let orig = scratch[i];
        scratch[i] = orig + eps;
        let fp = f(&scratch).to_f64_lossy();
        scratch[i] = orig - eps;
        let fm = f(&scratch).to_f64_lossy();
        scratch[i] = orig;
        let numeric = (fp - fm) / (2.0 * epsilon);
        let a = analytic[i].to_f64_lossy();
        let rel = (a - numeric).abs() / (a.abs() + numeric.abs()).max(1e-8);
        if rel > max_rel {
            max_rel = rel;
            worst = i;
        }
    }
    GradReport {
        max_rel_error: max_rel,
        worst_coordinate: worst,
        checked: params.len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_function_checks_at_rounding_level() {
        let coeff = [1.5f64, -2.0, 0.25];
        let params = [0.1f64, 0.2, -0.3];
        let f = |p: &[f64]| p.iter().zip(&coeff).map(|(x, c)| x * c).sum::<f64>();
        let report = grad_check(f, &params, &coeff, 1e-4);
        assert!(report.max_rel_error < 1e-9, "{report:?}");
    }

    #[test]
    fn corrupted_gradient_is_detected() {
        let coeff = [1.5f64, -2.0, 0.25];
        let params = [0.1f64, 0.2, -0.3];
        let mut bad = coeff;
        bad[1] *= 1.5;
        let f = |p: &[f64]| p.iter().zip(&coeff).map(|(x, c)| x * c).sum::<f64>();
        let report = grad_check(f, &params, &bad, 1e-4);
        assert!(report.max_rel_error > 1e-2);
        assert_eq!(report.worst_coordinate, 1);
    }

    #[test]
    fn nonlinear_function_within_tolerance() {
        let params = [0.4f64, -0.7];
        let f = |p: &[f64]| (p[0] * p[1]).tanh() + p[0].powi(2);
        let analytic = {
            let s = 1.0 - (params[0] * params[1]).tanh().powi(2);
            [s * params[1] + 2.0 * params[0], s * params[0]]
        };
        let report = grad_check(f, &params, &analytic, 1e-5);
        assert!(report.max_rel_error < 1e-6);
    }
}
