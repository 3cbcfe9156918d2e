//! Independent reference computations shared by the integration tests.
#![allow(dead_code)]

use arago::fresnel::DiffractionScenario;

/// Unevaluated sum `hi + lo` with about 32 significant digits.
#[derive(Debug, Clone, Copy)]
pub struct DoubleDouble {
    pub hi: f64,
    pub lo: f64,
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl DoubleDouble {
    pub fn from_f64(x: f64) -> Self {
        DoubleDouble { hi: x, lo: 0.0 }
    }

    pub fn add(self, o: DoubleDouble) -> DoubleDouble {
        let (s, e) = two_sum(self.hi, o.hi);
        let (hi, lo) = quick_two_sum(s, e + self.lo + o.lo);
        DoubleDouble { hi, lo }
    }

    pub fn mul(self, o: DoubleDouble) -> DoubleDouble {
        let (p, e) = two_prod(self.hi, o.hi);
        let (hi, lo) = quick_two_sum(p, e + self.hi * o.lo + self.lo * o.hi);
        DoubleDouble { hi, lo }
    }

    pub fn div_f64(self, b: f64) -> DoubleDouble {
        let q1 = self.hi / b;
        let (p, e) = two_prod(q1, b);
        let r = (self.hi - p - e + self.lo) / b;
        let (hi, lo) = quick_two_sum(q1, r);
        DoubleDouble { hi, lo }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
}

/// J0 from its Maclaurin series, 60 terms, in double-double arithmetic.
/// Adequate for |x| <= 20, where the largest term is below 1e7.
pub fn j0_series_oracle(x: f64) -> f64 {
    let (sq_hi, sq_lo) = two_prod(x, x);
    let q = DoubleDouble {
        hi: -0.25 * sq_hi,
        lo: -0.25 * sq_lo,
    };
    let mut term = DoubleDouble::from_f64(1.0);
    let mut sum = term;
    for k in 1..60 {
        let kf = k as f64;
        term = term.mul(q).div_f64(kf * kf);
        sum = sum.add(term);
    }
    sum.to_f64()
}

/// J0 at large arguments from mpmath at 50 digits, rounded to 17.
pub const J0_REFERENCE: [(f64, f64); 10] = [
    (25.0, 9.626_678_327_595_811e-2),
    (31.25, 8.239_920_414_269_862e-2),
    (100.0, 1.9985850304223122e-2),
    (1234.5, -1.3550379618035722e-2),
    (10000.3, -7.857_103_315_784_76e-3),
    (54321.0, -1.6617188038973244e-3),
    (100000.0, -1.7192011162359722e-3),
    (314159.25, 9.910_056_375_742_823e-4),
    (999999.5, -5.753028811911596e-5),
    (1000000.0, 3.3104301373987374e-4),
];

/// Bisection for a sign change of `f` on `[lo, hi]`, down to adjacent floats.
pub fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let flo = f(lo);
    assert!(flo * f(hi) < 0.0, "no sign change on [{lo}, {hi}]");
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if (f(mid) < 0.0) == (flo < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Small problems the (ρ, θ) oracle can afford: visible-light wavelengths,
/// centimetre-to-metre distances, strong damping.
pub fn desk_scenarios() -> Vec<DiffractionScenario> {
    [
        (5e-7, 1.0, 1e-3, 2e4),
        (5e-7, 1.0, 1e-3, 5e3),
        (6.33e-7, 2.0, 1.5e-3, 5e3),
        (1e-6, 0.5, 5e-4, 1e4),
        (4e-7, 3.0, 2e-3, 4e3),
        (5e-7, 1.0, 3e-4, 2e4),
    ]
    .into_iter()
    .map(|(l, r1, radius, eta)| DiffractionScenario::new(l, 1.0, r1, radius, eta).unwrap())
    .collect()
}

/// Radii as fractions of the spot width λ r1 / R, chosen away from the
/// dark rings so relative errors stay meaningful.
pub const DESK_RADIUS_FRACTIONS: [f64; 5] = [0.0, 0.1, 0.2, 0.55, 0.7];

pub fn rel_err(a: num_complex::Complex64, b: num_complex::Complex64) -> f64 {
    (a - b).norm() / b.norm()
}
