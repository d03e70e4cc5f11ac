//! Exact real topology of plane curves: Sturm sequences, root isolation,
//! a cylindrical decomposition of the plane and Euler characteristics of
//! the sign regions `V_± = {±F > 0}` in `RP^2`.

mod alg;
mod cad;
mod euler;
mod families;
mod plot;
mod upoly;

pub use alg::{isolate_roots_k, KPoly, KRing, KRoot, RealAlg};
pub use cad::{
    cad_bipoly, cad_plane, det_bareiss, projection, psc, to_bipoly, BiPoly, CADCell, CADComplex,
    Coord,
};
pub use euler::{
    curve_type, dehomogenize, euler_rp2, verify_signature_theorem, CurveType, EulerReport,
    VerifyReport,
};
pub use families::{line_cubic, two_circles, two_conics, FamilyMember};
pub use plot::{curve_picture, CurvePicture, Window};
pub use upoly::{
    isolate_roots, primitive_part, simplest_between, sturm_count, Bound, RootInterval, UPoly,
};
