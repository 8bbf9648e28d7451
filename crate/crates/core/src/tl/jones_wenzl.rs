//! Jones–Wenzl projectors via the two-sided recursion
//!
//! ```text
//! f(n+1) = f(n)⊗1 - ([n]/[n+1]) · (f(n)⊗1) e_n (f(n)⊗1)
//! ```
//!
//! with `[n]` the Chebyshev values of the loop value.

use std::sync::Arc;

use super::morphism::TLMorphism;
use crate::cyclotomic::CyclotomicNumber;
use crate::error::{Error, Result};
use crate::scalar::{chebyshev, Scalar};

/// A growing cache of projectors for one loop value.
#[derive(Debug, Clone)]
pub struct Projectors<S: Scalar> {
    delta: S,
    cache: Vec<Arc<TLMorphism<S>>>,
}

impl<S: Scalar> Projectors<S> {
    pub fn new(delta: &S) -> Self {
        let cache = vec![
            Arc::new(TLMorphism::identity(0, delta)),
            Arc::new(TLMorphism::identity(1, delta)),
        ];
        Projectors { delta: delta.clone(), cache }
    }

    pub fn delta(&self) -> &S {
        &self.delta
    }

    /// `f(n)`; fails with `DivisionByZero` once some `[j]` with `j ≤ n` vanishes.
    pub fn get(&mut self, n: usize) -> Result<Arc<TLMorphism<S>>> {
        while self.cache.len() <= n {
            let j = self.cache.len() - 1;
            let f = &self.cache[j];
            let ratio = chebyshev(j, &self.delta)
                .try_div_ref(&chebyshev(j + 1, &self.delta))
                .map_err(|_| Error::DivisionByZero)?;
            let f1 = f.tensor(&TLMorphism::identity(1, &self.delta));
            let e = TLMorphism::e(j + 1, j, &self.delta)?;
            let sandwich = f1.compose(&e.compose(&f1)?)?;
            let next = f1.sub(&sandwich.scale(&ratio))?;
            self.cache.push(Arc::new(next));
        }
        Ok(self.cache[n].clone())
    }
}

pub fn jones_wenzl<S: Scalar>(n: usize, delta: &S) -> Result<TLMorphism<S>> {
    Ok(Projectors::new(delta).get(n)?.as_ref().clone())
}

/// Loop value `q + q^{-1}` with `q = ζ_{2(k+2)}^m`, in `Q(ζ_{2(k+2)})`.
pub fn level_delta(k: u32, m: i64) -> CyclotomicNumber {
    let n = 2 * (k + 2);
    CyclotomicNumber::root_of_unity(n, m) + CyclotomicNumber::root_of_unity(n, -m)
}

/// `f(n)` at level `k`, where `[k+2] = 0` limits `n ≤ k+1`.
pub fn jones_wenzl_at_level(n: usize, k: u32, m: i64) -> Result<TLMorphism<CyclotomicNumber>> {
    if n > k as usize + 1 {
        return Err(Error::DivisionByZero);
    }
    jones_wenzl(n, &level_delta(k, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tl::{PlanarDiagram, RationalFunction};

    #[test]
    fn second_projector() {
        let d = RationalFunction::delta();
        let f2 = jones_wenzl(2, &d).unwrap();
        let e = TLMorphism::e(2, 1, &d).unwrap();
        let ratio = RationalFunction::one().try_div_ref(&d).unwrap();
        let expected = TLMorphism::identity(2, &d).sub(&e.scale(&ratio)).unwrap();
        assert_eq!(f2, expected);
    }

    #[test]
    fn trace_of_third_projector_is_fourth_chebyshev() {
        let d = RationalFunction::delta();
        let f3 = jones_wenzl(3, &d).unwrap();
        assert_eq!(f3.markov_trace().unwrap(), RationalFunction::chebyshev(4));
        assert_eq!(f3.coefficient(&PlanarDiagram::identity(3)), RationalFunction::one());
    }

    #[test]
    fn level_cutoff() {
        assert!(jones_wenzl_at_level(4, 3, 1).is_ok());
        assert_eq!(jones_wenzl_at_level(5, 3, 1), Err(Error::DivisionByZero));
        let mut p = Projectors::new(&level_delta(2, 1));
        assert!(p.get(3).is_ok());
        assert_eq!(p.get(4).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn traces_are_chebyshev() {
        let d = RationalFunction::delta();
        let mut p = Projectors::new(&d);
        for n in 0..=6 {
            assert_eq!(p.get(n).unwrap().markov_trace().unwrap(), RationalFunction::chebyshev(n as u32 + 1), "n={n}");
        }
    }

    #[test]
    fn partial_traces_are_spherical_multiples() {
        let d = RationalFunction::delta();
        let mut p = Projectors::new(&d);
        for n in 1..=5usize {
            let ratio = RationalFunction::chebyshev(n as u32 + 1).try_div_ref(&RationalFunction::chebyshev(n as u32)).unwrap();
            let want = p.get(n - 1).unwrap().scale(&ratio);
            let f = p.get(n).unwrap();
            assert_eq!(f.partial_trace_right().unwrap(), want, "n={n}");
            assert_eq!(f.partial_trace_left().unwrap(), want, "n={n}");
        }
    }
}
