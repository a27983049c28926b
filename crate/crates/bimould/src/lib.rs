//! Translation of the triangle structures to sequences of multivariate
//! polynomials. The composite alphabet `C_{k,m} = ad(v0)^m(v_k)` spans a
//! free subalgebra of the base algebra; words over it map monomially to
//! polynomial components indexed by depth, where concatenation becomes a
//! variable-splitting convolution and the triangle actions become
//! substitution derivations.

mod arit;
mod bimu;
mod cword;
mod lazard;
mod mpoly;

pub use arit::{arit, urit};
pub use bimu::{bracket_mu, mu, Bimould};
pub use cword::{
    expand_c, is_alternal, log_star, p_gen, rho_cbi, rho_cbi_inverse, rho_dbi, v_to_c, BiLetter,
    BiPoly, BiWord,
};
pub use lazard::{chain, lazard_tr, CTree, LazardStructure};
pub use mpoly::{Exp, MPoly};
