pub mod hvt;
pub mod mixed;
pub mod poly;
pub mod shape;
pub mod text;
pub mod uncrowding;
pub mod switching;
pub mod enumeration;
pub mod genfun;
pub mod cli;

pub use enumeration::{verify, CheckId, EnumBounds, VerificationReport};
pub use hvt::{HookCell, HookValuedTableau};
pub use mixed::{MixedEntry, MixedTableau};
pub use poly::{Monomial, TruncatedPolynomial};
pub use shape::{Cell, Partition, SkewShape};
pub use switching::{fully_switch, gg_jdt, shuffle, Strategy};
pub use uncrowding::{uncrowd, UncrowdWord};
