//! Markovian dynamics: GKSL generators, integration, channel extraction.
//!
//! The generator of a quantum dynamical semigroup in diagonal form is
//!
//! ```text
//! dρ/dt = G(ρ) = -i[H, ρ] + Σ_α (L_α ρ L_α† - ½{L_α†L_α, ρ})
//! ```
//!
//! with H Hermitian and arbitrary jump operators L_α (rates absorbed into
//! the L's). Integrating G over t with any scheme in [`scheme`] produces a
//! state trajectory; integrating the n² matrix units instead reconstructs
//! the finite-time channel E_t = e^{tG} column by column.

pub mod scheme;

use crate::error::{Error, Result};
use crate::mat::{kron, vec_op, ComplexMatrix};
use crate::rep::chi::standard_basis;
use crate::rep::superop::SuperopA;
use crate::rep::Channel;
use crate::tol;

pub use scheme::{scheme_for, schemes, IntegrationScheme, SchemeKind, Stepper};

/// Diagonal-form GKSL generator (H, {L_α}).
#[derive(Debug, Clone)]
pub struct LindbladGenerator {
    n: usize,
    hamiltonian: ComplexMatrix,
    lindblads: Vec<ComplexMatrix>,
}

impl LindbladGenerator {
    /// Validates that H is square Hermitian and every L matches its shape.
    /// An empty Lindblad list is fine (closed-system dynamics).
    pub fn new(hamiltonian: ComplexMatrix, lindblads: Vec<ComplexMatrix>) -> Result<Self> {
        let n = hamiltonian.rows();
        if n == 0 || hamiltonian.cols() != n {
            return Err(Error::Dimension(format!(
                "Hamiltonian must be square and non-empty, got {}x{}",
                hamiltonian.rows(),
                hamiltonian.cols()
            )));
        }
        let herm = hamiltonian.hermiticity_deviation();
        if herm > tol::HERMITICITY {
            return Err(Error::NotHermitian {
                deviation: herm,
                tolerance: tol::HERMITICITY,
            });
        }
        for (idx, l) in lindblads.iter().enumerate() {
            if l.rows() != n || l.cols() != n {
                return Err(Error::Dimension(format!(
                    "Lindblad operator {idx} is {}x{}, expected {n}x{n}",
                    l.rows(),
                    l.cols()
                )));
            }
        }
        Ok(Self {
            n,
            hamiltonian,
            lindblads,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn hamiltonian(&self) -> &ComplexMatrix {
        &self.hamiltonian
    }

    pub fn lindblads(&self) -> &[ComplexMatrix] {
        &self.lindblads
    }

    /// G(ρ) = -i[H, ρ] + Σ (LρL† - ½{L†L, ρ}).
    pub fn generator_apply(&self, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
        if rho.rows() != self.n || rho.cols() != self.n {
            return Err(Error::Dimension(format!(
                "state is {}x{}, generator acts on {}x{}",
                rho.rows(),
                rho.cols(),
                self.n,
                self.n
            )));
        }
        let h = &self.hamiltonian;
        let commutator = h.matmul(rho)?.sub(&rho.matmul(h)?)?;
        let mut out = commutator.scale(crate::mat::c64(0.0, -1.0));
        for l in &self.lindblads {
            let ldag = l.adjoint();
            let ldagl = ldag.matmul(l)?;
            out = out.add(&l.matmul(rho)?.matmul(&ldag)?)?;
            let anti = ldagl.matmul(rho)?.add(&rho.matmul(&ldagl)?)?;
            out = out.sub(&anti.scale_re(0.5))?;
        }
        Ok(out)
    }

    /// L0 = -½ Σ L†L — the non-Hamiltonian part of the no-jump drift.
    pub fn l0_from_lindblads(&self) -> ComplexMatrix {
        let mut sum = ComplexMatrix::zeros(self.n, self.n);
        for l in &self.lindblads {
            sum = sum
                .add(&l.adjoint().matmul(l).expect("square"))
                .expect("shapes agree");
        }
        sum.scale_re(-0.5)
    }

    /// First-order operator-sum step over Δt:
    /// D_0 = 1 + (-iH - ½ΣL†L)Δt, D_α = √Δt·L_α. The set is TP up to
    /// O(Δt²) and CP exactly.
    pub fn small_step_kraus(&self, dt: f64) -> Vec<ComplexMatrix> {
        let drift = self
            .l0_from_lindblads()
            .add(&self.hamiltonian.scale(crate::mat::c64(0.0, -1.0)))
            .expect("shapes agree");
        let d0 = ComplexMatrix::identity(self.n)
            .add(&drift.scale_re(dt))
            .expect("shapes agree");
        let mut ops = vec![d0];
        for l in &self.lindblads {
            ops.push(l.scale_re(dt.sqrt()));
        }
        ops
    }

    /// Vectorized generator S with G(ρ) = mat(S·|ρ⟩⟩):
    /// S = -i(H⊗1 - 1⊗Hᵀ) + Σ [L⊗L* - ½(L†L⊗1 + 1⊗(L†L)ᵀ)].
    pub fn superoperator(&self) -> ComplexMatrix {
        let id = ComplexMatrix::identity(self.n);
        let h = &self.hamiltonian;
        let mut s = kron(h, &id)
            .sub(&kron(&id, &h.transpose()))
            .expect("shapes agree")
            .scale(crate::mat::c64(0.0, -1.0));
        for l in &self.lindblads {
            let ldagl = l.adjoint().matmul(l).expect("square");
            s = s.add(&kron(l, &l.conj())).expect("shapes agree");
            let damp = kron(&ldagl, &id)
                .add(&kron(&id, &ldagl.transpose()))
                .expect("shapes agree");
            s = s.sub(&damp.scale_re(0.5)).expect("shapes agree");
        }
        s
    }
}

/// Run parameters for a fixed-step integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvolutionConfig {
    pub total_time: f64,
    pub steps: usize,
    pub scheme: SchemeKind,
}

impl EvolutionConfig {
    /// Validate and hand back the step size.
    fn dt(&self) -> Result<f64> {
        if self.steps == 0 {
            return Err(Error::Invalid("step count must be positive".into()));
        }
        if !self.total_time.is_finite() || self.total_time < 0.0 {
            return Err(Error::Invalid(format!(
                "total time must be finite and non-negative, got {}",
                self.total_time
            )));
        }
        Ok(self.total_time / self.steps as f64)
    }
}

/// Time-stamped states ρ(t_k), k = 0..=steps.
#[derive(Debug, Clone)]
pub struct Trajectory {
    times: Vec<f64>,
    states: Vec<ComplexMatrix>,
}

impl Trajectory {
    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn states(&self) -> &[ComplexMatrix] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// Largest |tr ρ(t_k) - tr ρ(0)| along the run. NaN anywhere in the
    /// traces is reported as NaN rather than silently dropped.
    pub fn max_trace_drift(&self) -> f64 {
        let t0 = self.states[0].trace();
        let mut worst = 0.0f64;
        for s in &self.states {
            let drift = (s.trace() - t0).norm();
            if drift.is_nan() {
                return f64::NAN;
            }
            worst = worst.max(drift);
        }
        worst
    }
}

/// Integrate ρ(0) = `rho0` over the configured grid, recording all
/// steps + 1 grid points. States are re-symmetrized after every step so
/// float-level Hermiticity drift cannot accumulate.
pub fn evolve(
    gen: &LindbladGenerator,
    rho0: &ComplexMatrix,
    config: &EvolutionConfig,
) -> Result<Trajectory> {
    if rho0.rows() != gen.n() || rho0.cols() != gen.n() {
        return Err(Error::Dimension(format!(
            "initial state is {}x{}, generator acts on {n}x{n}",
            rho0.rows(),
            rho0.cols(),
            n = gen.n()
        )));
    }
    let dt = config.dt()?;
    let stepper = scheme_for(config.scheme).prepare(gen, dt)?;
    let mut times = Vec::with_capacity(config.steps + 1);
    let mut states = Vec::with_capacity(config.steps + 1);
    times.push(0.0);
    states.push(rho0.clone());
    let mut current = rho0.clone();
    for k in 1..=config.steps {
        current = stepper.step(&current)?.symmetrize();
        times.push(dt * k as f64);
        states.push(current.clone());
    }
    Ok(Trajectory { times, states })
}

/// E_t as a channel, built by composing the first-order operator-sum step
/// `steps` times: A = (A_step)^steps. CP by construction; TP only up to
/// O(Δt) overall, which is exactly what the step operators promise.
pub fn channel_from_generator(
    gen: &LindbladGenerator,
    total_time: f64,
    steps: usize,
) -> Result<Channel> {
    let config = EvolutionConfig {
        total_time,
        steps,
        scheme: SchemeKind::KrausStep,
    };
    let dt = config.dt()?;
    let step_ops = gen.small_step_kraus(dt);
    let step_kraus = crate::rep::kraus::KrausSet::new(gen.n(), step_ops)?;
    let a_step = SuperopA::from_kraus(&step_kraus);
    let mut a = ComplexMatrix::identity(gen.n() * gen.n());
    for _ in 0..steps {
        a = a_step.matrix().matmul(&a)?;
    }
    Ok(Channel::Superop(SuperopA::new(gen.n(), a)?))
}

/// E_t reconstructed column by column with an arbitrary scheme: each matrix
/// unit E_ij is integrated as an initial condition (no symmetrization — the
/// units are not Hermitian) and its final state becomes column i·n+j of the
/// A-form.
pub fn channel_via_scheme(gen: &LindbladGenerator, config: &EvolutionConfig) -> Result<Channel> {
    let dt = config.dt()?;
    let stepper = scheme_for(config.scheme).prepare(gen, dt)?;
    let n = gen.n();
    let mut columns = Vec::with_capacity(n * n);
    for unit in standard_basis(n) {
        let mut m = unit;
        for _ in 0..config.steps {
            m = stepper.step(&m)?;
        }
        columns.push(vec_op(&m));
    }
    let a = ComplexMatrix::from_fn(n * n, n * n, |r, c| columns[c][(r, 0)]);
    Ok(Channel::Superop(SuperopA::new(n, a)?))
}
