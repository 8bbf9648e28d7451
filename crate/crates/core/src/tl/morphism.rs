//! Formal linear combinations of planar diagrams.

use std::collections::BTreeMap;

use super::diagram::PlanarDiagram;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct TLMorphism<S: Scalar> {
    bottom: usize,
    top: usize,
    terms: BTreeMap<PlanarDiagram, S>,
    delta: S,
}

impl<S: Scalar> TLMorphism<S> {
    pub fn zero(bottom: usize, top: usize, delta: &S) -> Self {
        TLMorphism { bottom, top, terms: BTreeMap::new(), delta: delta.clone() }
    }

    pub fn from_diagram(d: PlanarDiagram, delta: &S) -> Self {
        let mut m = Self::zero(d.bottom(), d.top(), delta);
        m.terms.insert(d, delta.one_like());
        m
    }

    pub fn identity(n: usize, delta: &S) -> Self {
        Self::from_diagram(PlanarDiagram::identity(n), delta)
    }

    pub fn cup(delta: &S) -> Self {
        Self::from_diagram(PlanarDiagram::cup(), delta)
    }

    pub fn cap(delta: &S) -> Self {
        Self::from_diagram(PlanarDiagram::cap(), delta)
    }

    pub fn e(n: usize, i: usize, delta: &S) -> Result<Self> {
        Ok(Self::from_diagram(PlanarDiagram::e(n, i)?, delta))
    }

    /// Builds a morphism from diagram/coefficient pairs; zero coefficients are dropped.
    pub fn from_terms(
        bottom: usize,
        top: usize,
        terms: impl IntoIterator<Item = (PlanarDiagram, S)>,
        delta: &S,
    ) -> Result<Self> {
        let mut m = Self::zero(bottom, top, delta);
        for (d, c) in terms {
            if d.bottom() != bottom || d.top() != top {
                return Err(Error::ArityMismatch(format!("{d:?} in a {bottom}→{top} morphism")));
            }
            m.add_term(d, &c);
        }
        m.clean();
        Ok(m)
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn delta(&self) -> &S {
        &self.delta
    }

    pub fn terms(&self) -> &BTreeMap<PlanarDiagram, S> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, d: &PlanarDiagram) -> S {
        self.terms.get(d).cloned().unwrap_or_else(|| self.delta.zero_like())
    }

    fn add_term(&mut self, d: PlanarDiagram, c: &S) {
        match self.terms.get_mut(&d) {
            Some(x) => x.add_assign_ref(c),
            None => {
                self.terms.insert(d, c.clone());
            }
        }
    }

    fn clean(&mut self) {
        for c in self.terms.values_mut() {
            c.normalize();
        }
        self.terms.retain(|_, c| !c.is_zero());
    }

    fn check_same_arity(&self, other: &Self) -> Result<()> {
        if (self.bottom, self.top) != (other.bottom, other.top) {
            return Err(Error::ArityMismatch(format!(
                "{}→{} versus {}→{}",
                self.bottom, self.top, other.bottom, other.top
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_arity(other)?;
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c);
        }
        out.clean();
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&self.delta.from_i64_like(-1)))
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero(self.bottom, self.top, &self.delta);
        if c.is_zero() {
            return out;
        }
        for (d, x) in &self.terms {
            let mut y = x.mul_ref(c);
            y.normalize();
            if !y.is_zero() {
                out.terms.insert(d.clone(), y);
            }
        }
        out
    }

    /// `self ∘ other`: `other` is placed below `self`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if other.top != self.bottom {
            return Err(Error::ArityMismatch(format!(
                "cannot compose {}→{} after {}→{}",
                self.bottom, self.top, other.bottom, other.top
            )));
        }
        let mut out = Self::zero(other.bottom, self.top, &self.delta);
        // group by the upper diagram so each upper coefficient is multiplied
        // once per distinct result rather than once per pair
        for (du, cu) in &self.terms {
            let mut partial: BTreeMap<PlanarDiagram, S> = BTreeMap::new();
            for (dl, cl) in &other.terms {
                let (d, loops) = du.compose_unchecked(dl);
                let c = if loops == 0 { cl.clone() } else { cl.mul_loop_power(&self.delta, loops) };
                match partial.get_mut(&d) {
                    Some(x) => x.add_assign_ref(&c),
                    None => {
                        partial.insert(d, c);
                    }
                }
            }
            for (d, c) in partial {
                if !c.is_zero() {
                    out.add_term(d, &c.mul_ref(cu));
                }
            }
        }
        out.clean();
        Ok(out)
    }

    /// Side-by-side placement, `self` on the left.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.bottom + other.bottom, self.top + other.top, &self.delta);
        for (d1, c1) in &self.terms {
            for (d2, c2) in &other.terms {
                out.add_term(d1.tensor(d2), &c1.mul_ref(c2));
            }
        }
        out.clean();
        out
    }

    /// Reflection in a horizontal line (coefficients untouched).
    pub fn flip(&self) -> Self {
        TLMorphism {
            bottom: self.top,
            top: self.bottom,
            terms: self.terms.iter().map(|(d, c)| (d.flip(), c.clone())).collect(),
            delta: self.delta.clone(),
        }
    }

    /// Applies a ring map to every coefficient; the new loop value is `delta`.
    pub fn map_scalars<T: Scalar>(&self, delta: &T, f: impl Fn(&S) -> Result<T>) -> Result<TLMorphism<T>> {
        let terms = self.terms.iter().map(|(d, c)| Ok((d.clone(), f(c)?))).collect::<Result<Vec<_>>>()?;
        TLMorphism::from_terms(self.bottom, self.top, terms, delta)
    }

    /// Closure joining bottom point `i` to top point `i` around the right.
    pub fn markov_trace(&self) -> Result<S> {
        if self.bottom != self.top {
            return Err(Error::ArityMismatch(format!("trace of a {}→{} morphism", self.bottom, self.top)));
        }
        let mut acc = self.delta.zero_like();
        for (d, c) in &self.terms {
            acc.add_assign_ref(&c.mul_loop_power(&self.delta, d.trace_loops()?));
        }
        acc.normalize();
        Ok(acc)
    }

    /// Closes the rightmost strand.
    pub fn partial_trace_right(&self) -> Result<Self> {
        self.partial_trace(false)
    }

    /// Closes the leftmost strand.
    pub fn partial_trace_left(&self) -> Result<Self> {
        self.partial_trace(true)
    }

    fn partial_trace(&self, left: bool) -> Result<Self> {
        if self.bottom != self.top || self.bottom == 0 {
            return Err(Error::ArityMismatch(format!(
                "partial trace of a {}→{} morphism",
                self.bottom, self.top
            )));
        }
        let n = self.bottom;
        let id_rest = Self::identity(n - 1, &self.delta);
        let id1 = Self::identity(1, &self.delta);
        let (caps, body, cups) = if left {
            (
                Self::cap(&self.delta).tensor(&id_rest),
                id1.tensor(self),
                Self::cup(&self.delta).tensor(&id_rest),
            )
        } else {
            (
                id_rest.tensor(&Self::cap(&self.delta)),
                self.tensor(&id1),
                id_rest.tensor(&Self::cup(&self.delta)),
            )
        };
        caps.compose(&body)?.compose(&cups)
    }

    /// The scalar of a `0 → 0` morphism.
    pub fn scalar_value(&self) -> Result<S> {
        if self.bottom != 0 || self.top != 0 {
            return Err(Error::ArityMismatch(format!("{}→{} is not closed", self.bottom, self.top)));
        }
        Ok(self.coefficient(&PlanarDiagram::empty()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tl::RationalFunction;

    fn d() -> RationalFunction {
        RationalFunction::delta()
    }

    #[test]
    fn circle_relation() {
        let circle = TLMorphism::cap(&d()).compose(&TLMorphism::cup(&d())).unwrap();
        assert_eq!(circle.scalar_value().unwrap(), d());
        assert_eq!(TLMorphism::identity(1, &d()).markov_trace().unwrap(), d());
    }

    #[test]
    fn e_relations() {
        let e = TLMorphism::e(2, 1, &d()).unwrap();
        assert_eq!(e.compose(&e).unwrap(), e.scale(&d()));
        assert_eq!(e.markov_trace().unwrap(), d());
        let e1 = TLMorphism::e(3, 1, &d()).unwrap();
        let e2 = TLMorphism::e(3, 2, &d()).unwrap();
        assert_eq!(e1.compose(&e2).unwrap().compose(&e1).unwrap(), e1);
    }

    #[test]
    fn partial_trace_of_identity() {
        let id2 = TLMorphism::identity(2, &d());
        let expected = TLMorphism::identity(1, &d()).scale(&d());
        assert_eq!(id2.partial_trace_right().unwrap(), expected);
        assert_eq!(id2.partial_trace_left().unwrap(), expected);
    }

    #[test]
    fn arity_mismatch() {
        let cup = TLMorphism::cup(&d());
        assert!(matches!(cup.compose(&cup), Err(Error::ArityMismatch(_))));
        assert!(cup.add(&TLMorphism::identity(2, &d())).is_err());
    }
}
