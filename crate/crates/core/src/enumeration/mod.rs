//! Coset enumeration, subgroup presentations and their simplification.

mod schreier;
mod tietze;
mod todd_coxeter;

pub use schreier::{reidemeister_schreier, rewrite_subgroup_word, SchreierGenerators};
pub use tietze::tietze_simplify;
pub use todd_coxeter::{
    default_max_cosets, todd_coxeter, CosetTable, TableHeader, DEFAULT_MAX_COSETS, MAX_COSETS_ENV,
};
