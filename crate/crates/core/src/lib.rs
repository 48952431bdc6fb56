//! Alexander duals of finite meet-semilattices.
//!
//! Given a finite meet-semilattice `L` with join-irreducible poset `P`, this
//! crate computes the minimal generators of the Stanley–Reisner ideal of the
//! Alexander dual, its h-vector, the complex of sets `S(a)` and whether the
//! dual is level. Every closed-form path has a brute-force counterpart in
//! [`oracle`].
//!
//! ```
//! use latlevel::{corpus, level};
//!
//! let l = corpus::l1();
//! let report = level::level_report(&l).unwrap();
//! assert_eq!(report.h.trimmed(), &[1, 5, 4]);
//! assert!(report.is_level);
//! ```

pub mod cli;
pub mod corpus;
pub mod dual_ideal;
pub mod error;
pub mod gen;
pub mod io;
pub mod level;
pub mod oracle;
pub mod par;
pub mod poset;
pub mod semilattice;
pub mod subset;

pub use error::{Error, Result};
pub use poset::Poset;
pub use semilattice::{MeetSemilattice, SetFamily};
pub use subset::Subset;
