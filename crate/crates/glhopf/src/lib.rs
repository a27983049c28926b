//! The product induced on the free algebra by a triangle action, written
//! `A * B = A_(1) (A_(2) <| B)`, together with the coproduct dual to it.
//!
//! Every product and coproduct has two independent routes: a generic one
//! built from the extension engine or from dualization against the basis,
//! and a closed combinatorial formula. The verification crates compare
//! them; nothing here trusts a closed form without its oracle.

mod coprod;
mod cotr;
mod filtration;
mod glp;

pub use coprod::{
    coprod_ari, coprod_dual, coprod_dual_weight, coprod_ihara, coprod_ihara_gon, drop_boundary,
    free_coprod2,
};
pub use cotr::{cotr_irr_ari, cotr_irr_dual, cotr_irr_ihara};
pub use filtration::{filtration_check, FiltrationMode};
pub use glp::{glp, glp_ari_fast, glp_ihara_fast, glp_word};
