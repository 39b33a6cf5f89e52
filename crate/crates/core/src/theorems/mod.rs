//! End-to-end verifiers. Each builds its figure from the lower layers and
//! returns a [`TheoremReport`](crate::report::TheoremReport) of exact claims.

mod beaugrand;
mod pascal;
mod quadrangle;
mod ramee;
mod retablissement;
mod special;

pub use beaugrand::{beaugrand_figure, beaugrand_replay, BeaugrandInput};
pub use pascal::{pascal_collinear, PascalOutcome, HEXAGON};
pub use quadrangle::{
    desargues_involution_by_perspectives, parallel_bornales_identities, pencil_involution_check,
    quadrangle_involution, sigma_map, tangent_members, QuadrangleConfig, TangentMembers,
};
pub use ramee::{verify_menelaus, verify_ramee};
pub use retablissement::{retablissement_demo, ConeSetup};
pub use special::{
    construct_involution_p13, construct_involution_p13_with, harmonic_conjugate,
    harmonic_conjugate_constructed, verify_bisector_case, verify_bisector_converse,
    verify_harmonic, verify_midpoint_case,
};

use crate::error::{Error, Result};
use crate::projective::{join, meet, PLine, PPoint};

/// `meet` that names the missing point when the lines coincide.
pub(crate) fn cut(l: &PLine, m: &PLine, what: &str) -> Result<PPoint> {
    meet(l, m).map_err(|_| Error::NonGeneric(format!("{what} is undefined (coincident lines)")))
}

pub(crate) fn line(p: &PPoint, q: &PPoint, what: &str) -> Result<PLine> {
    join(p, q).map_err(|_| Error::NonGeneric(format!("{what} is undefined (coincident points)")))
}

pub(crate) fn finite(p: &PPoint, what: &str) -> Result<()> {
    p.affine_or_err(what).map(|_| ())
}
