//! Jacobian modules of one-dimensional almost complete intersections, their
//! duality pairing and its signature.

mod conjecture;
mod levine;
mod module;
mod pairing;
mod pencil;
mod primitive;

pub use conjecture::{conjecture_check, socle_piece, ConjectureReport};
pub use levine::{ev_levine, real_branches, ELForm, ELSummary};
pub use module::{
    coordinates_in, h0m_general, jacobian_module, jacobian_module_of, subquotient_basis,
    BasisElement, H0mReport, JacobianModule, ModuleOptions, ModuleSummary,
};
pub use pairing::{
    pairing_hessian, pairing_homological, regular_sequence, GramMatrix, HomologicalPairing,
    PairingMode, Residue,
};
pub use pencil::{constant_signature, pencil_signature, PencilSample};
pub use primitive::{c_e, primitive_ideal_truncated, CeReport, PrimitivePieces};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyarith::{gradient, Polynomial, Ring};
use crate::quadform::{signature_charpoly_check, signature_exact, Inertia};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Hessian mode, falling back to the homological one when the socle
    /// check fails.
    #[default]
    Auto,
    Hessian,
    Homological,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Mode::Auto),
            "hessian" => Ok(Mode::Hessian),
            "homological" => Ok(Mode::Homological),
            _ => Err(Error::InvalidArgument(format!("unknown mode `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SignatureOptions {
    pub mode: Mode,
    pub seed: u64,
    /// Also compute the other mode when possible and compare inertia.
    pub cross_check: bool,
    pub module: ModuleOptions,
}

impl Default for SignatureOptions {
    fn default() -> Self {
        SignatureOptions {
            mode: Mode::Auto,
            seed: 1,
            cross_check: false,
            module: ModuleOptions::default(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct PairingReport {
    pub module: JacobianModule,
    pub gram: GramMatrix,
    pub inertia: Inertia,
    /// Why auto mode left the hessian mode.
    pub fallback: Option<String>,
    /// Descartes count of the characteristic polynomial agrees.
    pub charpoly_agrees: bool,
    /// Inertia of the other mode, when cross-checked.
    pub other_mode: Option<(PairingMode, Result<Inertia>)>,
}

impl PairingReport {
    pub fn signature(&self) -> i64 {
        self.inertia.signature()
    }

    pub fn rank(&self) -> usize {
        self.inertia.rank()
    }

    pub fn mode(&self) -> PairingMode {
        self.gram.mode
    }

    /// `None` when no cross-check ran or the other mode was unavailable.
    pub fn modes_agree(&self) -> Option<bool> {
        match &self.other_mode {
            Some((_, Ok(i))) => Some(*i == self.inertia),
            _ => None,
        }
    }
}

fn inertia_of(g: &GramMatrix) -> Result<Inertia> {
    signature_exact(&g.entries)
}

/// `σ` of the pairing on `M` for the sequence `fs`.
pub fn signature(ring: &Ring, fs: &[Polynomial], opts: SignatureOptions) -> Result<PairingReport> {
    let m = jacobian_module(ring, fs, opts.module)?;
    let mut fallback = None;
    let gram = match opts.mode {
        Mode::Hessian => pairing_hessian(&m)?,
        Mode::Homological => pairing_homological(&m, opts.seed)?,
        Mode::Auto => match pairing_hessian(&m) {
            Ok(g) => g,
            Err(Error::SocleCheckFailed(why)) => {
                fallback = Some(why);
                pairing_homological(&m, opts.seed)?
            }
            Err(e) => return Err(e),
        },
    };
    let inertia = inertia_of(&gram)?;
    let charpoly_agrees = signature_charpoly_check(&gram.entries)? == inertia;
    let other_mode = if opts.cross_check {
        match gram.mode {
            PairingMode::Hessian => Some((
                PairingMode::Homological,
                pairing_homological(&m, opts.seed).and_then(|g| inertia_of(&g)),
            )),
            PairingMode::Homological if fallback.is_none() => Some((
                PairingMode::Hessian,
                pairing_hessian(&m).and_then(|g| inertia_of(&g)),
            )),
            PairingMode::Homological => None,
        }
    } else {
        None
    };
    Ok(PairingReport {
        module: m,
        gram,
        inertia,
        fallback,
        charpoly_agrees,
        other_mode,
    })
}

/// `σ(f)`: the signature for the partial derivatives of `f`.
pub fn signature_of(f: &Polynomial, opts: SignatureOptions) -> Result<PairingReport> {
    signature(f.ring(), &gradient(f), opts)
}
