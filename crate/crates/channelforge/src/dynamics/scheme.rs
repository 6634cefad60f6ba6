//! Fixed-step integration schemes for master-equation dynamics.
//!
//! Each scheme turns a generator and a step size into a [`Stepper`] that
//! advances an n×n matrix by one time step. Euler and the classic
//! fourth-order Runge–Kutta integrate dρ/dt = G(ρ) directly (first and
//! fourth order in dt); the Kraus-step scheme instead applies the
//! first-order operator-sum approximant {1 + (-iH - ½ΣL†L)dt, √dt·L_α},
//! which is CP by construction at every step.

use crate::dynamics::LindbladGenerator;
use crate::error::{Error, Result};
use crate::mat::{mat_op, vec_op, ComplexMatrix};

/// Selector for the fixed-step schemes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchemeKind {
    Euler,
    Rk4,
    KrausStep,
}

impl SchemeKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            SchemeKind::Euler => "euler",
            SchemeKind::Rk4 => "rk4",
            SchemeKind::KrausStep => "kraus-step",
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "euler" => Ok(SchemeKind::Euler),
            "rk4" => Ok(SchemeKind::Rk4),
            "kraus-step" => Ok(SchemeKind::KrausStep),
            other => Err(Error::Invalid(format!(
                "unknown scheme '{other}'; valid schemes are euler, rk4, kraus-step"
            ))),
        }
    }
}

/// Advances a matrix by one prepared time step.
pub trait Stepper {
    fn step(&self, m: &ComplexMatrix) -> Result<ComplexMatrix>;
}

/// A named integration scheme; `prepare` does whatever per-run setup the
/// scheme needs (building the superoperator, the step operators, …).
pub trait IntegrationScheme: Sync {
    fn name(&self) -> &'static str;

    fn prepare(&self, gen: &LindbladGenerator, dt: f64) -> Result<Box<dyn Stepper>>;
}

fn check_dt(dt: f64) -> Result<()> {
    if !dt.is_finite() || dt < 0.0 {
        return Err(Error::Invalid(format!(
            "step size must be finite and non-negative, got {dt}"
        )));
    }
    Ok(())
}

struct EulerScheme;

struct EulerStepper {
    gen: LindbladGenerator,
    dt: f64,
}

impl Stepper for EulerStepper {
    /// ρ ← ρ + Δt·G(ρ).
    fn step(&self, m: &ComplexMatrix) -> Result<ComplexMatrix> {
        m.add(&self.gen.generator_apply(m)?.scale_re(self.dt))
    }
}

impl IntegrationScheme for EulerScheme {
    fn name(&self) -> &'static str {
        "euler"
    }

    fn prepare(&self, gen: &LindbladGenerator, dt: f64) -> Result<Box<dyn Stepper>> {
        check_dt(dt)?;
        Ok(Box::new(EulerStepper {
            gen: gen.clone(),
            dt,
        }))
    }
}

struct Rk4Scheme;

struct Rk4Stepper {
    /// Vectorized generator S with G(ρ) = mat(S·|ρ⟩⟩), built once.
    superop: ComplexMatrix,
    n: usize,
    dt: f64,
}

impl Stepper for Rk4Stepper {
    /// Classic RK4 on the vectorized equation d|ρ⟩⟩/dt = S|ρ⟩⟩.
    fn step(&self, m: &ComplexMatrix) -> Result<ComplexMatrix> {
        let v = vec_op(m);
        let k1 = self.superop.matmul(&v)?;
        let k2 = self.superop.matmul(&v.add(&k1.scale_re(self.dt / 2.0))?)?;
        let k3 = self.superop.matmul(&v.add(&k2.scale_re(self.dt / 2.0))?)?;
        let k4 = self.superop.matmul(&v.add(&k3.scale_re(self.dt))?)?;
        let increment = k1
            .add(&k2.scale_re(2.0))?
            .add(&k3.scale_re(2.0))?
            .add(&k4)?
            .scale_re(self.dt / 6.0);
        mat_op(&v.add(&increment)?, self.n)
    }
}

impl IntegrationScheme for Rk4Scheme {
    fn name(&self) -> &'static str {
        "rk4"
    }

    fn prepare(&self, gen: &LindbladGenerator, dt: f64) -> Result<Box<dyn Stepper>> {
        check_dt(dt)?;
        Ok(Box::new(Rk4Stepper {
            superop: gen.superoperator(),
            n: gen.n(),
            dt,
        }))
    }
}

struct KrausStepScheme;

struct KrausStepStepper {
    operators: Vec<ComplexMatrix>,
}

impl Stepper for KrausStepStepper {
    /// ρ ← Σ_α D_α ρ D_α†.
    fn step(&self, m: &ComplexMatrix) -> Result<ComplexMatrix> {
        let n = m.rows();
        let mut out = ComplexMatrix::zeros(n, m.cols());
        for d in &self.operators {
            out = out.add(&d.matmul(m)?.matmul(&d.adjoint())?)?;
        }
        Ok(out)
    }
}

impl IntegrationScheme for KrausStepScheme {
    fn name(&self) -> &'static str {
        "kraus-step"
    }

    fn prepare(&self, gen: &LindbladGenerator, dt: f64) -> Result<Box<dyn Stepper>> {
        check_dt(dt)?;
        Ok(Box::new(KrausStepStepper {
            operators: gen.small_step_kraus(dt),
        }))
    }
}

static SCHEMES: [&dyn IntegrationScheme; 3] = [&EulerScheme, &Rk4Scheme, &KrausStepScheme];

/// All schemes, in listing order.
pub fn schemes() -> &'static [&'static dyn IntegrationScheme] {
    &SCHEMES
}

/// The scheme behind a selector.
pub fn scheme_for(kind: SchemeKind) -> &'static dyn IntegrationScheme {
    match kind {
        SchemeKind::Euler => SCHEMES[0],
        SchemeKind::Rk4 => SCHEMES[1],
        SchemeKind::KrausStep => SCHEMES[2],
    }
}
