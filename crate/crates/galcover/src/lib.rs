pub mod cyclo;
pub mod autos;
pub mod catalog;
pub mod group;
pub mod perm;
pub mod subgroups;

pub use cyclo::Cyclotomic;
pub use group::{ConjugacyData, Elem, FiniteGroup, GroupMap, Subgroup};
