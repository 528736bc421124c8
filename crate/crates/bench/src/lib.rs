//! Shared inputs for the benchmarks.

use iwahori_core::{BasisFunction, CharacterCase, LatticeVec, ModuleVector, PrimeField, WeightConfig, WindowSpec};

pub fn config(case: CharacterCase, p: u32) -> WeightConfig {
    WeightConfig::new(case, PrimeField::new(p).unwrap(), 0).unwrap()
}

/// Sum of every basis vector of the window for `case`, all coefficients 1.
pub fn window_sum(case: CharacterCase, bound: i64, field: PrimeField) -> ModuleVector {
    let w = WindowSpec::new(bound).unwrap();
    ModuleVector::from_terms(
        field,
        iwahori_core::action::window_basis(case, &w).into_iter().map(|f| (f, 1)),
    )
}

pub fn generator(a1: i64, a2: i64) -> BasisFunction {
    BasisFunction::at(LatticeVec(vec![a1, a2]))
}
