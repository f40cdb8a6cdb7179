//! Deformation parameters, reduced pair geometry and kernel values.

use crate::error::{Error, Result};
use num_complex::Complex64;

/// Deformation data for the closed-form family 1 + c = 1/n with n odd.
///
/// n = 1 is the classical flag (c = 0); all derived quantities are exposed
/// as methods so they cannot drift out of sync.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeformParams {
    m: u32,
    n: u32,
}

impl DeformParams {
    pub fn new(m: u32, n: u32) -> Result<Self> {
        if m < 2 {
            return Err(Error::Domain(format!("dimension m must be >= 2, got {m}")));
        }
        if n % 2 == 0 || n == 0 {
            return Err(Error::Domain(format!("n must be odd and positive, got {n}")));
        }
        Ok(DeformParams { m, n })
    }

    /// Classical Fourier case (n = 1, c = 0) in dimension m.
    pub fn classical(m: u32) -> Result<Self> {
        DeformParams::new(m, 1)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Deformation strength c = 1/n - 1.
    pub fn c(&self) -> f64 {
        1.0 / self.n as f64 - 1.0
    }

    /// lambda = (m - 2)/2; zero exactly when m = 2.
    pub fn lambda(&self) -> f64 {
        (self.m as f64 - 2.0) / 2.0
    }

    /// mu = 1 + (m - 1)/(1 + c) = 1 + (m - 1) n.
    pub fn mu(&self) -> f64 {
        1.0 + (self.m as f64 - 1.0) * self.n as f64
    }

    /// n~ = (n - 1)/2.
    pub fn n_tilde(&self) -> u32 {
        (self.n - 1) / 2
    }

    pub fn is_classical(&self) -> bool {
        self.n == 1
    }

    /// Scalar-part power: z^-(mu-2)/2 with (mu-2)/2 = n lambda + n~.
    pub fn scalar_power(&self) -> f64 {
        self.n as f64 * self.lambda() + self.n_tilde() as f64
    }

    /// Bivector-part power: z^-(mu/2) with mu/2 = n lambda + n~ + 1.
    pub fn bivector_power(&self) -> f64 {
        self.scalar_power() + 1.0
    }
}

/// Deformation data for arbitrary c > -1 (series route only).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralDeformParams {
    m: u32,
    c: f64,
}

impl GeneralDeformParams {
    pub fn new(m: u32, c: f64) -> Result<Self> {
        if m < 2 {
            return Err(Error::Domain(format!("dimension m must be >= 2, got {m}")));
        }
        if !(c > -1.0) || !c.is_finite() {
            return Err(Error::Domain(format!("c must satisfy c > -1, got {c}")));
        }
        Ok(GeneralDeformParams { m, c })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn lambda(&self) -> f64 {
        (self.m as f64 - 2.0) / 2.0
    }

    pub fn mu(&self) -> f64 {
        1.0 + (self.m as f64 - 1.0) / (1.0 + self.c)
    }

    /// Exponent sequence gamma_k = 2 (k + lambda)/(1 + c) + (c + 2)/(1 + c);
    /// strictly increasing in k.
    pub fn gamma_k(&self, k: i64) -> f64 {
        (2.0 * (k as f64 + self.lambda()) + self.c + 2.0) / (1.0 + self.c)
    }

    /// Phase increment of alpha_k = exp(-i pi k / (2(1+c))) per unit k.
    /// Kept as an angle so long sums accumulate the phase, not powers.
    pub fn alpha_angle_step(&self) -> f64 {
        -std::f64::consts::PI / (2.0 * (1.0 + self.c))
    }
}

/// Reduced kernel arguments z = |x||y|, w = <x,y>/z and theta = arccos w.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairGeometry {
    z: f64,
    w: f64,
    theta: f64,
}

impl PairGeometry {
    pub fn new(z: f64, w: f64) -> Result<Self> {
        if !z.is_finite() || z < 0.0 {
            return Err(Error::Domain(format!("z must be finite and >= 0, got {z}")));
        }
        if !(-1.0..=1.0).contains(&w) {
            return Err(Error::Domain(format!("w must lie in [-1, 1], got {w}")));
        }
        Ok(PairGeometry {
            z,
            w,
            theta: w.acos(),
        })
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn w(&self) -> f64 {
        self.w
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }
}

/// A geometry together with the auxiliary scaling variable t; t = 1
/// recovers the kernel itself.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelEvalPoint {
    pub geometry: PairGeometry,
    pub t: f64,
}

impl KernelEvalPoint {
    pub fn new(geometry: PairGeometry, t: f64) -> Result<Self> {
        if !t.is_finite() || t < 0.0 {
            return Err(Error::Domain(format!("t must be finite and >= 0, got {t}")));
        }
        Ok(KernelEvalPoint { geometry, t })
    }

    pub fn at_unit_time(geometry: PairGeometry) -> Self {
        KernelEvalPoint { geometry, t: 1.0 }
    }
}

/// Clifford-valued kernel split as scalar part plus the coefficient
/// multiplying the caller's wedge bivector x ^ y.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct KernelValue {
    pub scalar: Complex64,
    pub bivector: Complex64,
}

impl KernelValue {
    pub fn new(scalar: Complex64, bivector: Complex64) -> Self {
        KernelValue { scalar, bivector }
    }

    pub fn is_finite(&self) -> bool {
        self.scalar.re.is_finite()
            && self.scalar.im.is_finite()
            && self.bivector.re.is_finite()
            && self.bivector.im.is_finite()
    }

    /// Largest componentwise absolute deviation from `other`.
    pub fn max_abs_diff(&self, other: &KernelValue) -> f64 {
        let ds = self.scalar - other.scalar;
        let db = self.bivector - other.bivector;
        ds.re
            .abs()
            .max(ds.im.abs())
            .max(db.re.abs())
            .max(db.im.abs())
    }

    pub fn max_abs(&self) -> f64 {
        self.scalar
            .re
            .abs()
            .max(self.scalar.im.abs())
            .max(self.bivector.re.abs())
            .max(self.bivector.im.abs())
    }
}

/// A kernel value together with the route's certified error estimate.
#[derive(Debug, Clone, Copy)]
pub struct CertifiedKernelValue {
    pub value: KernelValue,
    pub err_bound: f64,
}
