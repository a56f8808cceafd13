//! Generators and relations for the braid monoid of `Z^n`.

pub mod shape;
pub mod sword;

pub use shape::{decompose, factor_step, in_g_i, in_ga, in_h_i, shape_of, Shape};
pub use sword::{SLetter, SWord};
pub mod tword;

pub use tword::{apply_t_step, d_word, lemma_derivation, replay_t, t_rewrite_to_d1, TRule, TStep};
pub mod smove;

pub use smove::{check_relation, replay_s, s_move, SDeriv, SRule, SStep};
pub mod transport;

pub use transport::{has_type, transport, transport_along, Transported, DEFAULT_DEPTH};
pub mod connect;

pub use connect::{canonical_word, connect, normalize};
