mod mollifier;
mod params;
mod reaction;
mod state;

pub use mollifier::{bump_constant, Mollifier};
pub use params::{Nondimensional, Params, PhysicalParams};
pub use reaction::{apply_m, apply_m_inverse, reaction_f, reaction_g};
pub use state::{UState, ZState};
