//! JSON and CSV wire formats.
//!
//! Complex matrices travel as row-major `re`/`im` arrays; a channel is a
//! `kind`-tagged object holding whatever its representation needs; a
//! generator is `{"H": …, "L": […]}`. Numbers are emitted in shortest
//! round-trip form, so a serialize → parse cycle reproduces every f64 bit
//! for bit.

use serde::{Deserialize, Serialize};

use crate::dynamics::{LindbladGenerator, Trajectory};
use crate::error::{Error, Result};
use crate::mat::{c64, ComplexMatrix};
use crate::props::ValidationReport;
use crate::qubit::image::BlochImage;
use crate::qubit::AffineQubit;
use crate::rep::chi::ChiMatrix;
use crate::rep::choi::ChoiB;
use crate::rep::kraus::KrausSet;
use crate::rep::osd::Osd;
use crate::rep::stinespring::StinespringModel;
use crate::rep::superop::SuperopA;
use crate::rep::Channel;
use crate::tol;

/// Row-major complex matrix: `re[k]` and `im[k]` hold entry (k / cols,
/// k % cols).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub re: Vec<f64>,
    pub im: Vec<f64>,
}

pub fn matrix_to_json(m: &ComplexMatrix) -> MatrixJson {
    let mut re = Vec::with_capacity(m.rows() * m.cols());
    let mut im = Vec::with_capacity(m.rows() * m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            re.push(m[(i, j)].re);
            im.push(m[(i, j)].im);
        }
    }
    MatrixJson {
        rows: m.rows(),
        cols: m.cols(),
        re,
        im,
    }
}

pub fn matrix_from_json(j: &MatrixJson) -> Result<ComplexMatrix> {
    let len = j.rows.checked_mul(j.cols).ok_or_else(|| {
        Error::Dimension(format!("matrix dimensions {}x{} overflow", j.rows, j.cols))
    })?;
    if j.re.len() != len || j.im.len() != len {
        return Err(Error::Dimension(format!(
            "matrix data length mismatch: {}x{} needs {len} entries, got re: {}, im: {}",
            j.rows,
            j.cols,
            j.re.len(),
            j.im.len()
        )));
    }
    let data: Vec<_> = j.re.iter().zip(&j.im).map(|(&r, &i)| c64(r, i)).collect();
    ComplexMatrix::new(j.rows, j.cols, data)
}

/// Wire form of a channel, tagged by representation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
pub enum ChannelJson {
    #[serde(rename = "superop")]
    Superop { n: usize, matrix: MatrixJson },
    #[serde(rename = "choi")]
    Choi { n: usize, matrix: MatrixJson },
    #[serde(rename = "kraus")]
    Kraus {
        n: usize,
        operators: Vec<MatrixJson>,
    },
    #[serde(rename = "chi")]
    Chi {
        n: usize,
        matrix: MatrixJson,
        basis: Vec<MatrixJson>,
    },
    #[serde(rename = "stinespring")]
    Stinespring {
        n: usize,
        env_dim: usize,
        unitary: MatrixJson,
        env_state_index: usize,
    },
    #[serde(rename = "osd")]
    Osd {
        n: usize,
        positive_part: Vec<MatrixJson>,
        negative_part: Vec<MatrixJson>,
    },
    #[serde(rename = "affine-qubit")]
    AffineQubit {
        /// Always 2: the affine form only exists for qubits.
        n: usize,
        /// Real 3×3 (im must be all zero).
        linear: MatrixJson,
        /// Real 3×1 column (im must be all zero).
        shift: MatrixJson,
    },
}

pub fn channel_to_json(ch: &Channel) -> ChannelJson {
    match ch {
        Channel::Superop(a) => ChannelJson::Superop {
            n: a.n(),
            matrix: matrix_to_json(a.matrix()),
        },
        Channel::Choi(b) => ChannelJson::Choi {
            n: b.n(),
            matrix: matrix_to_json(b.matrix()),
        },
        Channel::Kraus(k) => ChannelJson::Kraus {
            n: k.n(),
            operators: k.operators().iter().map(matrix_to_json).collect(),
        },
        Channel::Chi(chi) => ChannelJson::Chi {
            n: chi.n(),
            matrix: matrix_to_json(chi.matrix()),
            basis: chi.basis().iter().map(matrix_to_json).collect(),
        },
        Channel::Stinespring(st) => ChannelJson::Stinespring {
            n: st.n(),
            env_dim: st.env_dim(),
            unitary: matrix_to_json(st.unitary()),
            env_state_index: st.env_state_index(),
        },
        Channel::Osd(osd) => ChannelJson::Osd {
            n: osd.n(),
            positive_part: osd.positive_part().iter().map(matrix_to_json).collect(),
            negative_part: osd.negative_part().iter().map(matrix_to_json).collect(),
        },
        Channel::AffineQubit(aff) => {
            let linear = ComplexMatrix::from_fn(3, 3, |i, j| c64(aff.linear()[i][j], 0.0));
            let shift = ComplexMatrix::from_fn(3, 1, |i, _| c64(aff.shift()[i], 0.0));
            ChannelJson::AffineQubit {
                n: 2,
                linear: matrix_to_json(&linear),
                shift: matrix_to_json(&shift),
            }
        }
    }
}

fn real_matrix_from_json(j: &MatrixJson, what: &str) -> Result<ComplexMatrix> {
    let m = matrix_from_json(j)?;
    if !j.im.iter().all(|v| *v == 0.0) {
        return Err(Error::Invalid(format!("{what} must be real (im = 0)")));
    }
    Ok(m)
}

pub fn channel_from_json(j: &ChannelJson) -> Result<Channel> {
    match j {
        ChannelJson::Superop { n, matrix } => Ok(Channel::Superop(SuperopA::new(
            *n,
            matrix_from_json(matrix)?,
        )?)),
        ChannelJson::Choi { n, matrix } => {
            Ok(Channel::Choi(ChoiB::new(*n, matrix_from_json(matrix)?)?))
        }
        ChannelJson::Kraus { n, operators } => {
            let ops = operators
                .iter()
                .map(matrix_from_json)
                .collect::<Result<Vec<_>>>()?;
            Ok(Channel::Kraus(KrausSet::new(*n, ops)?))
        }
        ChannelJson::Chi { n, matrix, basis } => {
            let basis = basis
                .iter()
                .map(matrix_from_json)
                .collect::<Result<Vec<_>>>()?;
            Ok(Channel::Chi(ChiMatrix::new(
                *n,
                basis,
                matrix_from_json(matrix)?,
                tol::BASIS_ORTHONORMALITY,
            )?))
        }
        ChannelJson::Stinespring {
            n,
            env_dim,
            unitary,
            env_state_index,
        } => Ok(Channel::Stinespring(StinespringModel::new(
            *n,
            *env_dim,
            matrix_from_json(unitary)?,
            *env_state_index,
        )?)),
        ChannelJson::Osd {
            n,
            positive_part,
            negative_part,
        } => {
            let pos = positive_part
                .iter()
                .map(matrix_from_json)
                .collect::<Result<Vec<_>>>()?;
            let neg = negative_part
                .iter()
                .map(matrix_from_json)
                .collect::<Result<Vec<_>>>()?;
            Ok(Channel::Osd(Osd::new(*n, pos, neg)?))
        }
        ChannelJson::AffineQubit { n, linear, shift } => {
            if *n != 2 {
                return Err(Error::Dimension(format!(
                    "affine-qubit channels require n = 2, got {n}"
                )));
            }
            let lin = real_matrix_from_json(linear, "affine linear part")?;
            let sh = real_matrix_from_json(shift, "affine shift")?;
            if lin.rows() != 3 || lin.cols() != 3 {
                return Err(Error::Dimension(format!(
                    "affine linear part must be 3x3, got {}x{}",
                    lin.rows(),
                    lin.cols()
                )));
            }
            if sh.rows() != 3 || sh.cols() != 1 {
                return Err(Error::Dimension(format!(
                    "affine shift must be 3x1, got {}x{}",
                    sh.rows(),
                    sh.cols()
                )));
            }
            let mut linear_arr = [[0.0f64; 3]; 3];
            let mut shift_arr = [0.0f64; 3];
            for i in 0..3 {
                shift_arr[i] = sh[(i, 0)].re;
                for j in 0..3 {
                    linear_arr[i][j] = lin[(i, j)].re;
                }
            }
            Ok(Channel::AffineQubit(AffineQubit::new(
                linear_arr, shift_arr,
            )?))
        }
    }
}

fn to_pretty_string<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialization cannot fail");
    s.push('\n');
    s
}

fn from_json_str<'a, T: Deserialize<'a>>(s: &'a str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))
}

pub fn channel_to_json_string(ch: &Channel) -> String {
    to_pretty_string(&channel_to_json(ch))
}

pub fn channel_from_json_str(s: &str) -> Result<Channel> {
    channel_from_json(&from_json_str::<ChannelJson>(s)?)
}

/// Wire form of a GKSL generator. `gamma-absorbed` documents that all decay
/// rates are already folded into the L operators; leaving it out means
/// exactly that, and `false` is refused because the format has nowhere to
/// carry separate rates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorJson {
    pub n: usize,
    #[serde(rename = "H")]
    pub hamiltonian: MatrixJson,
    #[serde(rename = "L", default)]
    pub lindblads: Vec<MatrixJson>,
    #[serde(
        rename = "gamma-absorbed",
        default,
        skip_serializing_if = "Option::is_none"
    )]
    pub gamma_absorbed: Option<bool>,
}

pub fn generator_to_json(gen: &LindbladGenerator) -> GeneratorJson {
    GeneratorJson {
        n: gen.n(),
        hamiltonian: matrix_to_json(gen.hamiltonian()),
        lindblads: gen.lindblads().iter().map(matrix_to_json).collect(),
        gamma_absorbed: None,
    }
}

pub fn generator_from_json(j: &GeneratorJson) -> Result<LindbladGenerator> {
    if j.gamma_absorbed == Some(false) {
        return Err(Error::Invalid(
            "gamma-absorbed = false is unsupported: fold the rates into the L operators \
             (L ← √γ·L) and drop the flag"
                .into(),
        ));
    }
    let h = matrix_from_json(&j.hamiltonian)?;
    if h.rows() != j.n || h.cols() != j.n {
        return Err(Error::Dimension(format!(
            "generator declares n = {} but H is {}x{}",
            j.n,
            h.rows(),
            h.cols()
        )));
    }
    let ls = j
        .lindblads
        .iter()
        .map(matrix_from_json)
        .collect::<Result<Vec<_>>>()?;
    LindbladGenerator::new(h, ls)
}

pub fn generator_to_json_string(gen: &LindbladGenerator) -> String {
    to_pretty_string(&generator_to_json(gen))
}

pub fn generator_from_json_str(s: &str) -> Result<LindbladGenerator> {
    generator_from_json(&from_json_str::<GeneratorJson>(s)?)
}

/// Densities (and any bare matrix) travel as a plain [`MatrixJson`].
pub fn density_to_json_string(rho: &ComplexMatrix) -> String {
    to_pretty_string(&matrix_to_json(rho))
}

pub fn density_from_json_str(s: &str) -> Result<ComplexMatrix> {
    matrix_from_json(&from_json_str::<MatrixJson>(s)?)
}

pub fn report_to_json_string(report: &ValidationReport) -> String {
    to_pretty_string(report)
}

/// CSV of sampled Bloch pairs: `ax,ay,az,bx,by,bz`, one input/output pair
/// per row.
pub fn bloch_pairs_csv(image: &BlochImage) -> String {
    let mut out = String::from("ax,ay,az,bx,by,bz\n");
    for (a, b) in image.pairs() {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            a.x, a.y, a.z, b.x, b.y, b.z
        ));
    }
    out
}

/// CSV of a state trajectory: `t` then re/im of every density-matrix entry
/// in row-major order (`re(rho00),im(rho00),re(rho01),…`).
pub fn trajectory_csv(traj: &Trajectory) -> String {
    let n = traj.states()[0].rows();
    let mut out = String::from("t");
    for i in 0..n {
        for j in 0..n {
            out.push_str(&format!(",re(rho{i}{j}),im(rho{i}{j})"));
        }
    }
    out.push('\n');
    for (t, rho) in traj.times().iter().zip(traj.states()) {
        out.push_str(&format!("{t}"));
        for i in 0..n {
            for j in 0..n {
                out.push_str(&format!(",{},{}", rho[(i, j)].re, rho[(i, j)].im));
            }
        }
        out.push('\n');
    }
    out
}
