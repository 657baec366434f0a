//! Finite codes for the irreducible closed subsets of Noetherian spaces.
//!
//! Spaces are assembled from finite posets with products, sums, finite
//! words ([`Space::words`]), powersets ([`Space::pow`]) and
//! finite-or-infinite or infinite words ([`Space::fin_inf_words`],
//! [`Space::inf_words`]). For every such space, codes can be compared for
//! inclusion and intersected, closed sets are finite antichains of codes,
//! and concrete points can be tested for membership.
//!
//! ```
//! use srep::{FinitePoset, Space, Code, Atom, WordProduct, ClosedSet};
//!
//! let alphabet = Space::base(FinitePoset::chain(&["a", "b"]));
//! let words = Space::words(alphabet.clone());
//! let a = WordProduct::new(vec![Atom::Single(Code::Elem(0))]);
//! let b = WordProduct::new(vec![Atom::Single(Code::Elem(1))]);
//! let met = words.meet(&Code::Word(a.clone()), &Code::Word(b)).unwrap();
//! assert_eq!(met, ClosedSet::singleton(Code::Word(a)));
//! ```

pub mod closed;
pub mod error;
pub mod omega;
pub mod oracle;
pub mod point;
pub mod poset;
pub mod powerset;
pub mod sample;
pub mod space;
pub mod words;

pub use closed::{cs_inter, cs_leq, cs_reduce, ClosedSet};
pub use error::{Result, SrepError};
pub use omega::{
    inf_leq, inf_meet, inf_member, inf_top, up_closure, up_pref, up_subword_leq, up_suf,
    OmegaCode, UpWord, Variant,
};
pub use point::Point;
pub use poset::FinitePoset;
pub use powerset::{pow_leq, pow_meet, pow_top};
pub use space::{code_leq, code_meet, space_top, Code, Space, SpaceKind};
pub use words::{closure_fin_word, wp_canon, wp_leq, wp_meet, wp_member, wp_top, Atom, WordProduct};
