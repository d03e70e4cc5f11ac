//! Gröbner bases for ideals and submodules of free modules over `Q[x]`,
//! with an independent degree-by-degree linear algebra oracle.

mod buchberger;
mod hilbert;
mod ideal;
mod module;
mod modvec;
mod oracle;
mod order;

pub use buchberger::{divide, groebner_basis, normal_form_vec, reduce, GbOptions, GbResult};
pub use hilbert::HilbertData;
pub use ideal::{GroebnerBasis, Ideal};
pub use module::{
    column_degree, column_is_homogeneous, graded_space, minimal_generators, syzygies, Column,
    ModuleGb, SyzygyModule,
};
pub use modvec::{ModVec, Space, Term};
pub use oracle::{default_bound, degreewise_oracle, OracleOptions, OracleReport};
pub use order::{ModuleOrder, MonoOrder};
