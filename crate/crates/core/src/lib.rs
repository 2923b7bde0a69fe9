//! Decision procedures, normal forms and semantics for the reflection
//! calculus with conservativity modalities: strictly positive formulas built
//! from `⊤`, variables, `∧`, `◇ₙ` and `∇ₙ`.

mod cursor;
pub mod enumerate;

pub mod error;
pub mod ignatiev;
pub mod kripke;
pub mod normal_form;
pub mod ordinal;
pub mod selftest;

pub mod spectrum;
pub mod syntax;
pub mod word;

pub use error::{Error, Result};
pub use ignatiev::Point;
pub use normal_form::{FatNf, NabForm, ThinNf};
pub use ordinal::Ordinal;
pub use spectrum::{ExtOrdinal, Spectrum};
pub use syntax::{Formula, Sequent};
pub use word::Word;
