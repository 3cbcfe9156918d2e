//! Fixed-order Gauss-Legendre rules and sequence extrapolation.

use std::f64::consts::PI;

use num_complex::Complex64;

/// Gauss-Legendre nodes and weights on `[-1, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Builds the `n`-point rule by Newton iteration on `P_n`.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "Gauss-Legendre rule needs at least one node");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(n, x);
            dp = if d != 0.0 { d } else { dp };
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        GaussLegendre { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Iterates `(node, weight)` pairs mapped onto `[a, b]`.
    pub fn mapped(&self, a: f64, b: f64) -> impl Iterator<Item = (f64, f64)> + '_ {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(move |(&t, &w)| (mid + half * t, half * w))
    }

    /// Integrates a real function over `[a, b]`.
    pub fn integrate<F: Fn(f64) -> f64>(&self, a: f64, b: f64, f: F) -> f64 {
        self.mapped(a, b).map(|(x, w)| w * f(x)).sum()
    }

    /// Integrates a complex function over `[a, b]`.
    pub fn integrate_complex<F: Fn(f64) -> Complex64>(&self, a: f64, b: f64, f: F) -> Complex64 {
        self.mapped(a, b).map(|(x, w)| f(x) * w).sum()
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Wynn's epsilon algorithm applied to the tail of a sequence of partial sums.
///
/// Returns the highest even-column entry reachable from `sums`. For
/// alternating series with smoothly varying terms this is far closer to the
/// limit than the last partial sum; for a geometric series it is exact once
/// three partial sums are available.
pub fn wynn_epsilon(sums: &[Complex64]) -> Option<Complex64> {
    let n = sums.len();
    if n == 0 {
        return None;
    }
    // Use an odd number of entries so the final column is an even one.
    let sums = if n.is_multiple_of(2) {
        &sums[1..]
    } else {
        sums
    };
    let n = sums.len();
    let mut prev = vec![Complex64::new(0.0, 0.0); n + 1]; // eps_{-1}
    let mut cur: Vec<Complex64> = sums.to_vec(); // eps_0
    let mut best = *sums.last()?;
    for col in 1..n {
        let mut next = Vec::with_capacity(n - col);
        for i in 0..n - col {
            let diff = cur[i + 1] - cur[i];
            if diff.norm() <= f64::MIN_POSITIVE * 1e10 || !diff.re.is_finite() {
                // Converged (or degenerate) column: keep the best even entry so far.
                return Some(best);
            }
            next.push(prev[i + 1] + diff.inv());
        }
        prev = cur;
        cur = next;
        if col % 2 == 0 {
            match cur.last() {
                Some(v) if v.re.is_finite() && v.im.is_finite() => best = *v,
                _ => return Some(best),
            }
        }
    }
    Some(best)
}
