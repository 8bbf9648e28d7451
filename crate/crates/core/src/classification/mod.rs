//! Enumeration of the categories and the classification tables.

mod enumerate;
mod tables;

pub use enumerate::{
    a2_categories, braided_classes, enumerate_braided, enumerate_monoidal, monoidal_equiv, BraidedEntry,
    MonoidalEntry,
};
pub use tables::{
    algebra_objects, autoequivalence_groups, descriptors, drinfeld_centre, invertible_subcategory,
    invertible_subcategory_by_table, invertible_subcategory_by_twist, A2Name, AlgebraObject, CentreAtom,
    CentreExpr, Commutativity, DaggerDescriptor, Descriptors, Group,
};
