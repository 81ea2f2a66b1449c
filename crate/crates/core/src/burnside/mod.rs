//! The Burnside ring `B(G)` inside its rationalization: transitive basis,
//! marks, primitive idempotents and the elementary biset operations.

mod biset;
mod json;
pub(crate) mod rational;
mod ring;

pub use biset::{deflate, deflate_by, induce, induce_from, inflate, inflate_from, restrict, restrict_to, transport};
pub use json::ElementJson;
pub use rational::{format_rational, parse_rational, Rational};
pub use ring::{m_coefficient, marks_table, BurnsideElement, MarksTable};
