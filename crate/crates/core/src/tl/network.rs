//! Evaluation of closed networks of Temperley–Lieb boxes.
//!
//! A network is flattened into boxes with numbered ports joined by wires.
//! Boxes are then expanded one at a time: the state is a perfect matching on
//! the ports of the boxes not yet expanded, and states with equal matchings
//! are merged. A box marked as a clasp is a Jones–Wenzl projector, so any
//! state joining two neighbouring ports on one side of an unexpanded clasp
//! contributes nothing and is dropped immediately.

use std::collections::HashMap;
use std::sync::Arc;

use super::diagram::PlanarDiagram;
use super::jones_wenzl::Projectors;
use super::morphism::TLMorphism;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub enum Network<S: Scalar> {
    Morphism(Arc<TLMorphism<S>>),
    /// A Jones–Wenzl projector; enables turnback pruning.
    Clasp(Arc<TLMorphism<S>>),
    /// `Compose(upper, lower)`.
    Compose(Box<Network<S>>, Box<Network<S>>),
    Tensor(Box<Network<S>>, Box<Network<S>>),
}

impl<S: Scalar> Network<S> {
    pub fn morphism(m: TLMorphism<S>) -> Self {
        Network::Morphism(Arc::new(m))
    }

    pub fn diagram(d: PlanarDiagram, delta: &S) -> Self {
        Self::morphism(TLMorphism::from_diagram(d, delta))
    }

    pub fn bottom(&self) -> usize {
        match self {
            Network::Morphism(m) | Network::Clasp(m) => m.bottom(),
            Network::Compose(_, lower) => lower.bottom(),
            Network::Tensor(l, r) => l.bottom() + r.bottom(),
        }
    }

    pub fn top(&self) -> usize {
        match self {
            Network::Morphism(m) | Network::Clasp(m) => m.top(),
            Network::Compose(upper, _) => upper.top(),
            Network::Tensor(l, r) => l.top() + r.top(),
        }
    }

    /// `upper ∘ lower`, checking arities.
    pub fn compose(upper: Self, lower: Self) -> Result<Self> {
        if upper.bottom() != lower.top() {
            return Err(Error::ArityMismatch(format!(
                "network {}→{} after {}→{}",
                upper.bottom(),
                upper.top(),
                lower.bottom(),
                lower.top()
            )));
        }
        Ok(Network::Compose(Box::new(upper), Box::new(lower)))
    }

    /// Composes a stack listed from bottom to top.
    pub fn stack(layers: Vec<Self>) -> Result<Self> {
        let mut it = layers.into_iter();
        let mut acc = it.next().ok_or_else(|| Error::ArityMismatch("empty stack".into()))?;
        for layer in it {
            acc = Self::compose(layer, acc)?;
        }
        Ok(acc)
    }

    pub fn tensor(self, other: Self) -> Self {
        Network::Tensor(Box::new(self), Box::new(other))
    }

    pub fn tensor_all(parts: Vec<Self>) -> Self {
        parts.into_iter().reduce(Self::tensor).expect("at least one factor")
    }

    /// Reflection in a horizontal line.
    pub fn flip(&self) -> Self {
        match self {
            Network::Morphism(m) => Network::Morphism(Arc::new(m.flip())),
            Network::Clasp(m) => Network::Clasp(Arc::new(m.flip())),
            Network::Compose(u, l) => Network::Compose(Box::new(l.flip()), Box::new(u.flip())),
            Network::Tensor(a, b) => Network::Tensor(Box::new(a.flip()), Box::new(b.flip())),
        }
    }

    /// Right closure `caps ∘ (self ⊗ id) ∘ cups` of an endomorphism.
    pub fn trace_closure(self, delta: &S) -> Result<Self> {
        let n = self.bottom();
        if self.top() != n {
            return Err(Error::ArityMismatch(format!("trace of a {}→{} network", n, self.top())));
        }
        let cups = Self::diagram(PlanarDiagram::nested_cups(n), delta);
        let caps = Self::diagram(PlanarDiagram::nested_caps(n), delta);
        let body = self.tensor(Self::diagram(PlanarDiagram::identity(n), delta));
        Self::stack(vec![cups, body, caps])
    }
}

struct Leaf<S: Scalar> {
    morphism: Arc<TLMorphism<S>>,
    clasp: bool,
    first_port: usize,
}

struct Flat<S: Scalar> {
    leaves: Vec<Leaf<S>>,
    wire: Vec<u32>,
}

fn flatten<S: Scalar>(net: &Network<S>, flat: &mut Flat<S>) -> (Vec<u32>, Vec<u32>) {
    match net {
        Network::Morphism(m) | Network::Clasp(m) => {
            let base = flat.wire.len();
            let (nb, nt) = (m.bottom(), m.top());
            flat.wire.extend(std::iter::repeat(u32::MAX).take(nb + nt));
            flat.leaves.push(Leaf {
                morphism: m.clone(),
                clasp: matches!(net, Network::Clasp(_)),
                first_port: base,
            });
            let bottom = (0..nb).map(|i| (base + i) as u32).collect();
            let top = (0..nt).map(|j| (base + nb + nt - 1 - j) as u32).collect();
            (bottom, top)
        }
        Network::Compose(upper, lower) => {
            let (lb, lt) = flatten(lower, flat);
            let (ub, ut) = flatten(upper, flat);
            for (a, b) in lt.into_iter().zip(ub) {
                flat.wire[a as usize] = b;
                flat.wire[b as usize] = a;
            }
            (lb, ut)
        }
        Network::Tensor(l, r) => {
            let (mut lb, mut lt) = flatten(l, flat);
            let (rb, rt) = flatten(r, flat);
            lb.extend(rb);
            lt.extend(rt);
            (lb, lt)
        }
    }
}

const DEAD: u32 = u32::MAX;

/// Evaluates a network with no free boundary to a scalar.
pub fn evaluate_closed_network<S: Scalar>(net: &Network<S>, delta: &S) -> Result<S> {
    if net.bottom() != 0 || net.top() != 0 {
        return Err(Error::ArityMismatch(format!(
            "network {}→{} is not closed",
            net.bottom(),
            net.top()
        )));
    }
    let mut flat = Flat { leaves: Vec::new(), wire: Vec::new() };
    flatten(net, &mut flat);
    let Flat { leaves, wire } = flat;

    // expansion order: single-term boxes first, then by number of terms
    let mut order: Vec<usize> = (0..leaves.len()).collect();
    order.sort_by_key(|&i| (leaves[i].morphism.len() > 1, leaves[i].morphism.len(), i));

    let mut states: HashMap<Vec<u32>, S> = HashMap::new();
    states.insert(wire, delta.one_like());
    let mut expanded = vec![false; leaves.len()];

    for &li in &order {
        let leaf = &leaves[li];
        let m = &leaf.morphism;
        let base = leaf.first_port;
        let nports = m.bottom() + m.top();
        expanded[li] = true;
        let pending_clasps: Vec<&Leaf<S>> =
            leaves.iter().enumerate().filter(|(i, l)| l.clasp && !expanded[*i]).map(|(_, l)| l).collect();
        let mut next: HashMap<Vec<u32>, S> = HashMap::new();
        let mut visited = vec![false; nports];
        for (state, coeff) in &states {
            for (d, c) in m.terms() {
                let mut s = state.clone();
                visited.iter_mut().for_each(|v| *v = false);
                let local = |p: u32| -> Option<usize> {
                    let p = p as usize;
                    (p >= base && p < base + nports).then(|| p - base)
                };
                // open paths: start at a port whose wire leaves the box
                for i in 0..nports {
                    if visited[i] {
                        continue;
                    }
                    let x = state[base + i];
                    if local(x).is_some() {
                        continue;
                    }
                    visited[i] = true;
                    let mut j = d.partner(i);
                    let y = loop {
                        visited[j] = true;
                        let y = state[base + j];
                        match local(y) {
                            Some(l) => {
                                visited[l] = true;
                                j = d.partner(l);
                            }
                            None => break y,
                        }
                    };
                    s[x as usize] = y;
                    s[y as usize] = x;
                }
                // what remains are closed loops through this box only
                let mut loops = 0u32;
                for i in 0..nports {
                    if visited[i] {
                        continue;
                    }
                    loops += 1;
                    let mut k = i;
                    loop {
                        visited[k] = true;
                        let j = d.partner(k);
                        visited[j] = true;
                        let l = local(state[base + j]).expect("closed loop stays in the box");
                        if l == i {
                            break;
                        }
                        k = l;
                    }
                }
                for p in base..base + nports {
                    s[p] = DEAD;
                }
                if pending_clasps.iter().any(|cl| has_turnback(cl, &s)) {
                    continue;
                }
                let mut term = coeff.mul_ref(c);
                if loops > 0 {
                    term = term.mul_loop_power(delta, loops);
                }
                match next.get_mut(&s) {
                    Some(acc) => acc.add_assign_ref(&term),
                    None => {
                        next.insert(s, term);
                    }
                }
            }
        }
        next.retain(|_, c| {
            c.normalize();
            !c.is_zero()
        });
        states = next;
        if states.is_empty() {
            return Ok(delta.zero_like());
        }
    }
    let mut total = delta.zero_like();
    for c in states.values() {
        total.add_assign_ref(c);
    }
    total.normalize();
    Ok(total)
}

fn has_turnback<S: Scalar>(clasp: &Leaf<S>, s: &[u32]) -> bool {
    let (nb, nt) = (clasp.morphism.bottom(), clasp.morphism.top());
    let base = clasp.first_port;
    // bottom ports base..base+nb are consecutive, as are the top ports
    (0..nb.saturating_sub(1)).any(|i| s[base + i] == (base + i + 1) as u32)
        || (nb..(nb + nt).saturating_sub(1)).any(|i| s[base + i] == (base + i + 1) as u32)
}

/// Builders for the trivalent networks used by the θ and 6j oracles.
///
/// Every network built here contains each Jones–Wenzl clasp once: adjacent
/// copies are merged using `f ∘ f = f` and the cyclicity of the trace.
pub struct TrivalentBuilder<S: Scalar> {
    jw: Projectors<S>,
}

impl<S: Scalar> TrivalentBuilder<S> {
    pub fn new(delta: &S) -> Self {
        TrivalentBuilder { jw: Projectors::new(delta) }
    }

    pub fn delta(&self) -> &S {
        self.jw.delta()
    }

    pub fn clasp(&mut self, n: usize) -> Result<Network<S>> {
        Ok(Network::Clasp(self.jw.get(n)?))
    }

    pub fn id(&self, n: usize) -> Network<S> {
        Network::diagram(PlanarDiagram::identity(n), self.delta())
    }

    /// The bare strands of a vertex `c → a ⊗ b`: `id_v ⊗ cups_w ⊗ id_u`.
    pub fn bare_vertex_down(&self, a: usize, b: usize, c: usize) -> Result<Network<S>> {
        let (v, u, w) = legs(a, b, c)?;
        let d = PlanarDiagram::identity(v)
            .tensor(&PlanarDiagram::nested_cups(w))
            .tensor(&PlanarDiagram::identity(u));
        Ok(Network::diagram(d, self.delta()))
    }

    /// The bare strands of a vertex `a ⊗ b → c`.
    pub fn bare_vertex_up(&self, a: usize, b: usize, c: usize) -> Result<Network<S>> {
        Ok(self.bare_vertex_down(a, b, c)?.flip())
    }

    /// The full vertex `c → a ⊗ b` with its three clasps.
    pub fn vertex_down(&mut self, a: usize, b: usize, c: usize) -> Result<Network<S>> {
        let top = self.clasp(a)?.tensor(self.clasp(b)?);
        Network::stack(vec![self.clasp(c)?, self.bare_vertex_down(a, b, c)?, top])
    }

    /// The full vertex `a ⊗ b → c`.
    pub fn vertex_up(&mut self, a: usize, b: usize, c: usize) -> Result<Network<S>> {
        Ok(self.vertex_down(a, b, c)?.flip())
    }

    /// The θ graph on an admissible triple.
    pub fn theta(&mut self, a: usize, b: usize, c: usize) -> Result<Network<S>> {
        let body = Network::stack(vec![
            self.clasp(c)?,
            self.bare_vertex_down(a, b, c)?,
            self.clasp(a)?.tensor(self.clasp(b)?),
            self.bare_vertex_up(a, b, c)?,
        ])?;
        body.trace_closure(&self.delta().clone())
    }

    /// `I_e : a ⊗ d → b ⊗ c`, without the outer clasps on `a, d` and `b, c`.
    fn bare_i(&mut self, a: usize, b: usize, c: usize, d: usize, e: usize) -> Result<Network<S>> {
        Network::stack(vec![self.bare_vertex_up(a, d, e)?, self.clasp(e)?, self.bare_vertex_down(b, c, e)?])
    }

    /// The full `I_e` basis element `a ⊗ d → b ⊗ c`.
    pub fn i_diagram(&mut self, a: usize, b: usize, c: usize, d: usize, e: usize) -> Result<Network<S>> {
        let bottom = self.clasp(a)?.tensor(self.clasp(d)?);
        let top = self.clasp(b)?.tensor(self.clasp(c)?);
        Network::stack(vec![bottom, self.bare_i(a, b, c, d, e)?, top])
    }

    /// `H_f : a ⊗ d → b ⊗ c`, without the outer clasps on `b, c`.
    fn bare_h(&mut self, a: usize, b: usize, c: usize, d: usize, f: usize) -> Result<Network<S>> {
        let bottom = self.clasp(a)?.tensor(self.clasp(d)?);
        let split = self.bare_vertex_down(b, f, a)?.tensor(self.id(d));
        let mid = Network::tensor_all(vec![self.id(b), self.clasp(f)?, self.id(d)]);
        let join = self.id(b).tensor(self.bare_vertex_up(f, d, c)?);
        Network::stack(vec![bottom, split, mid, join])
    }

    /// The full `H_f` diagram `a ⊗ d → b ⊗ c`.
    pub fn h_diagram(&mut self, a: usize, b: usize, c: usize, d: usize, f: usize) -> Result<Network<S>> {
        let top = self.clasp(b)?.tensor(self.clasp(c)?);
        Network::stack(vec![self.bare_h(a, b, c, d, f)?, top])
    }

    /// `tr(I_{e1}^† I_{e2})`.
    pub fn gram_network(&mut self, a: usize, b: usize, c: usize, d: usize, e1: usize, e2: usize) -> Result<Network<S>> {
        let body = Network::stack(vec![
            self.clasp(a)?.tensor(self.clasp(d)?),
            self.bare_i(a, b, c, d, e2)?,
            self.clasp(b)?.tensor(self.clasp(c)?),
            self.bare_i(a, b, c, d, e1)?.flip(),
        ])?;
        body.trace_closure(&self.delta().clone())
    }

    /// `tr(I_e^† H_f)`.
    pub fn tetrahedral_network(
        &mut self,
        a: usize,
        b: usize,
        c: usize,
        d: usize,
        e: usize,
        f: usize,
    ) -> Result<Network<S>> {
        let body = Network::stack(vec![
            self.bare_h(a, b, c, d, f)?,
            self.clasp(b)?.tensor(self.clasp(c)?),
            self.bare_i(a, b, c, d, e)?.flip(),
        ])?;
        body.trace_closure(&self.delta().clone())
    }
}

/// `(v, u, w)` strand counts of a vertex `c → a ⊗ b`.
fn legs(a: usize, b: usize, c: usize) -> Result<(usize, usize, usize)> {
    let (a, b, c) = (a as i64, b as i64, c as i64);
    let twice = [a + c - b, b + c - a, a + b - c];
    if (a + b + c) % 2 != 0 || twice.iter().any(|&x| x < 0) {
        return Err(Error::NotAdmissible(format!("{a}, {b}, {c}")));
    }
    Ok(((twice[0] / 2) as usize, (twice[1] / 2) as usize, (twice[2] / 2) as usize))
}

/// `tr(X^† Y)` for networks with equal arities.
pub fn pairing<S: Scalar>(x: &Network<S>, y: &Network<S>, delta: &S) -> Result<S> {
    let closed = Network::compose(x.flip(), y.clone())?.trace_closure(delta)?;
    evaluate_closed_network(&closed, delta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tl::RationalFunction;

    fn d() -> RationalFunction {
        RationalFunction::delta()
    }

    #[test]
    fn circle() {
        let net = Network::compose(
            Network::diagram(PlanarDiagram::cap(), &d()),
            Network::diagram(PlanarDiagram::cup(), &d()),
        )
        .unwrap();
        assert_eq!(evaluate_closed_network(&net, &d()).unwrap(), d());
    }

    #[test]
    fn open_network_rejected() {
        let net = Network::diagram(PlanarDiagram::cup(), &d());
        assert!(matches!(evaluate_closed_network(&net, &d()), Err(Error::ArityMismatch(_))));
        let bad = Network::compose(net.clone(), net);
        assert!(bad.is_err());
    }

    #[test]
    fn closures_match_markov_trace() {
        let mut jw = Projectors::new(&d());
        for n in 0..=5 {
            let f = jw.get(n).unwrap();
            let net = Network::Clasp(f.clone()).trace_closure(&d()).unwrap();
            assert_eq!(evaluate_closed_network(&net, &d()).unwrap(), f.markov_trace().unwrap());
        }
    }

    #[test]
    fn theta_112_is_chebyshev_3() {
        let mut b = TrivalentBuilder::new(&d());
        let net = b.theta(1, 1, 2).unwrap();
        assert_eq!(evaluate_closed_network(&net, &d()).unwrap(), RationalFunction::chebyshev(3));
    }

    #[test]
    fn pruned_and_unpruned_agree() {
        // the same network with clasps demoted to plain boxes
        fn demote<S: Scalar>(n: &Network<S>) -> Network<S> {
            match n {
                Network::Clasp(m) => Network::Morphism(m.clone()),
                Network::Morphism(m) => Network::Morphism(m.clone()),
                Network::Compose(u, l) => Network::Compose(Box::new(demote(u)), Box::new(demote(l))),
                Network::Tensor(a, b) => Network::Tensor(Box::new(demote(a)), Box::new(demote(b))),
            }
        }
        let mut b = TrivalentBuilder::new(&d());
        for (a, bb, c) in [(2, 2, 2), (3, 2, 1), (2, 3, 3)] {
            let net = b.theta(a, bb, c).unwrap();
            assert_eq!(
                evaluate_closed_network(&net, &d()).unwrap(),
                evaluate_closed_network(&demote(&net), &d()).unwrap()
            );
        }
        let net = b.tetrahedral_network(1, 1, 1, 1, 2, 2).unwrap();
        assert_eq!(
            evaluate_closed_network(&net, &d()).unwrap(),
            evaluate_closed_network(&demote(&net), &d()).unwrap()
        );
    }

    #[test]
    fn pairing_of_vertices_matches_theta() {
        let mut b = TrivalentBuilder::new(&d());
        let v = b.vertex_down(1, 1, 2).unwrap();
        let by_pairing = pairing(&v, &v, &d()).unwrap();
        let theta = evaluate_closed_network(&b.theta(1, 1, 2).unwrap(), &d()).unwrap();
        assert_eq!(by_pairing, theta);
    }
}
