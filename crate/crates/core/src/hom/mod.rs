//! Homomorphisms between standard modules: existence rules, explicit maps,
//! a brute-force oracle and the morphism diagram.

pub mod brute;
pub mod conditions;
pub mod diagram;
pub mod dimension;
pub mod maps;
pub mod sweep;

pub use brute::{hom_dim_bruteforce, isotypic_multiplicity, singular_space};
pub use conditions::{hom_conditions, necessary_condition, AtomicCondition, ConditionReport, RuleFiring};
pub use diagram::{morphism_diagram, Diagram};
pub use dimension::dimension_two_criterion;
pub use maps::{apply_hom, build_hom, compose, HomMap};
