//! Non-crossing pairings of boundary points on a rectangle.
//!
//! Boundary points are numbered counterclockwise from the bottom-left corner:
//! the `n` bottom points are `0..n` from left to right, then the `m` top points
//! are `n..n+m` from right to left.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlanarDiagram {
    bottom: usize,
    top: usize,
    partner: Vec<u16>,
}

/// A boundary point by side and left-to-right position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    Bottom(usize),
    Top(usize),
}

impl PlanarDiagram {
    /// Builds a diagram from a partner array, checking it is a non-crossing
    /// perfect matching.
    pub fn from_partners(bottom: usize, top: usize, partner: Vec<usize>) -> Result<Self> {
        let n = bottom + top;
        if partner.len() != n {
            return Err(Error::InvalidDiagram(format!("expected {n} partners, got {}", partner.len())));
        }
        for (i, &p) in partner.iter().enumerate() {
            if p >= n || p == i || partner[p] != i {
                return Err(Error::InvalidDiagram(format!("point {i} is not matched consistently")));
            }
        }
        // non-crossing: chords (i, p) and (j, q) with i < j < p < q cross
        let mut stack = Vec::new();
        for (i, &p) in partner.iter().enumerate() {
            if p > i {
                stack.push(p);
            } else if stack.pop() != Some(i) {
                return Err(Error::InvalidDiagram("pairing is crossing".into()));
            }
        }
        Ok(PlanarDiagram { bottom, top, partner: partner.into_iter().map(|p| p as u16).collect() })
    }

    /// Builds a diagram from a list of pairs.
    pub fn from_pairs(bottom: usize, top: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = bottom + top;
        let mut partner = vec![usize::MAX; n];
        for &(a, b) in pairs {
            if a >= n || b >= n || partner[a] != usize::MAX || partner[b] != usize::MAX || a == b {
                return Err(Error::InvalidDiagram(format!("bad pair ({a}, {b})")));
            }
            partner[a] = b;
            partner[b] = a;
        }
        Self::from_partners(bottom, top, partner)
    }

    fn from_sides(bottom: usize, top: usize, pairs: impl IntoIterator<Item = (Side, Side)>) -> Self {
        let mut partner = vec![0u16; bottom + top];
        let idx = |s: Side| match s {
            Side::Bottom(i) => i,
            Side::Top(j) => bottom + top - 1 - j,
        };
        for (a, b) in pairs {
            let (a, b) = (idx(a), idx(b));
            partner[a] = b as u16;
            partner[b] = a as u16;
        }
        PlanarDiagram { bottom, top, partner }
    }

    fn side(&self, i: usize) -> Side {
        if i < self.bottom {
            Side::Bottom(i)
        } else {
            Side::Top(self.bottom + self.top - 1 - i)
        }
    }

    fn index(&self, s: Side) -> usize {
        match s {
            Side::Bottom(i) => i,
            Side::Top(j) => self.bottom + self.top - 1 - j,
        }
    }

    fn partner_side(&self, s: Side) -> Side {
        self.side(self.partner[self.index(s)] as usize)
    }

    pub fn identity(n: usize) -> Self {
        Self::from_sides(n, n, (0..n).map(|i| (Side::Bottom(i), Side::Top(i))))
    }

    /// The empty diagram `0 → 0`.
    pub fn empty() -> Self {
        Self::identity(0)
    }

    pub fn cup() -> Self {
        Self::from_sides(0, 2, [(Side::Top(0), Side::Top(1))])
    }

    pub fn cap() -> Self {
        Self::from_sides(2, 0, [(Side::Bottom(0), Side::Bottom(1))])
    }

    /// The generator `e_i` of `TL_n` (`1 ≤ i < n`), a cap on strands `i-1, i`
    /// followed by a cup.
    pub fn e(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::InvalidDiagram(format!("e_{i} does not exist in TL_{n}")));
        }
        let mut pairs = vec![(Side::Bottom(i - 1), Side::Bottom(i)), (Side::Top(i - 1), Side::Top(i))];
        pairs.extend((0..n).filter(|&j| j != i - 1 && j != i).map(|j| (Side::Bottom(j), Side::Top(j))));
        Ok(Self::from_sides(n, n, pairs))
    }

    /// `n` nested cups, `0 → 2n`, pairing top point `j` with `2n-1-j`.
    pub fn nested_cups(n: usize) -> Self {
        Self::from_sides(0, 2 * n, (0..n).map(|j| (Side::Top(j), Side::Top(2 * n - 1 - j))))
    }

    /// `n` nested caps, `2n → 0`.
    pub fn nested_caps(n: usize) -> Self {
        Self::nested_cups(n).flip()
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn partner(&self, i: usize) -> usize {
        self.partner[i] as usize
    }

    /// The pairing as `(p, q)` with `p < q`, in the boundary numbering.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.partner
            .iter()
            .enumerate()
            .filter(|&(i, &p)| i < p as usize)
            .map(|(i, &p)| (i, p as usize))
            .collect()
    }

    /// Number of through-strands.
    pub fn through_strands(&self) -> usize {
        (0..self.bottom).filter(|&i| self.partner[i] as usize >= self.bottom).count()
    }

    /// Reflection in a horizontal line.
    pub fn flip(&self) -> Self {
        let sw = |s: Side| match s {
            Side::Bottom(i) => Side::Top(i),
            Side::Top(j) => Side::Bottom(j),
        };
        let pairs = (0..self.partner.len())
            .filter(|&i| i < self.partner[i] as usize)
            .map(|i| (sw(self.side(i)), sw(self.side(self.partner[i] as usize))));
        Self::from_sides(self.top, self.bottom, pairs)
    }

    /// Side-by-side placement, `self` on the left.
    pub fn tensor(&self, other: &Self) -> Self {
        let shift = |s: Side, db: usize, dt: usize| match s {
            Side::Bottom(i) => Side::Bottom(i + db),
            Side::Top(j) => Side::Top(j + dt),
        };
        let mut pairs = Vec::with_capacity((self.partner.len() + other.partner.len()) / 2);
        for (d, db, dt) in [(self, 0, 0), (other, self.bottom, self.top)] {
            for i in 0..d.partner.len() {
                let p = d.partner[i] as usize;
                if i < p {
                    pairs.push((shift(d.side(i), db, dt), shift(d.side(p), db, dt)));
                }
            }
        }
        Self::from_sides(self.bottom + other.bottom, self.top + other.top, pairs)
    }

    /// `self ∘ other` (other below), returning the diagram and the number of
    /// closed loops removed.
    pub fn compose(&self, other: &Self) -> Result<(Self, u32)> {
        if other.top != self.bottom {
            return Err(Error::ArityMismatch(format!(
                "cannot compose {}→{} after {}→{}",
                self.bottom, self.top, other.bottom, other.top
            )));
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, lower: &Self) -> (Self, u32) {
        let mid = self.bottom;
        let mut seen = vec![false; mid];
        let (nb, nt) = (lower.bottom, self.top);
        let mut partner = vec![0u16; nb + nt];
        let out_index = |s: Side| match s {
            Side::Bottom(i) => i,
            Side::Top(j) => nb + nt - 1 - j,
        };
        // Follow a strand that enters the middle row at position `j` coming
        // from `upper` (true) or `lower` (false) until it exits.
        let follow = |mut j: usize, mut from_upper: bool, seen: &mut Vec<bool>| -> Side {
            loop {
                seen[j] = true;
                let next = if from_upper {
                    lower.partner_side(Side::Top(j))
                } else {
                    self.partner_side(Side::Bottom(j))
                };
                match (from_upper, next) {
                    (true, Side::Bottom(i)) => return Side::Bottom(i),
                    (true, Side::Top(k)) => {
                        j = k;
                        from_upper = false;
                    }
                    (false, Side::Top(k)) => return Side::Top(k),
                    (false, Side::Bottom(k)) => {
                        j = k;
                        from_upper = true;
                    }
                }
            }
        };
        for i in 0..nb {
            let end = match lower.partner_side(Side::Bottom(i)) {
                Side::Bottom(k) => Side::Bottom(k),
                Side::Top(j) => follow(j, false, &mut seen),
            };
            let (a, b) = (out_index(Side::Bottom(i)), out_index(end));
            partner[a] = b as u16;
            partner[b] = a as u16;
        }
        for j in 0..nt {
            let end = match self.partner_side(Side::Top(j)) {
                Side::Top(k) => Side::Top(k),
                Side::Bottom(m) => follow(m, true, &mut seen),
            };
            let (a, b) = (out_index(Side::Top(j)), out_index(end));
            partner[a] = b as u16;
            partner[b] = a as u16;
        }
        let mut loops = 0;
        for j in 0..mid {
            if !seen[j] {
                loops += 1;
                // walk the closed loop: up through `self`, down through `lower`
                let mut k = j;
                loop {
                    seen[k] = true;
                    let Side::Bottom(a) = self.partner_side(Side::Bottom(k)) else { unreachable!() };
                    seen[a] = true;
                    let Side::Top(b) = lower.partner_side(Side::Top(a)) else { unreachable!() };
                    if b == j {
                        break;
                    }
                    k = b;
                }
            }
        }
        (PlanarDiagram { bottom: nb, top: nt, partner }, loops)
    }

    /// Loops formed when bottom point `i` is joined to top point `i` around
    /// the right side.
    pub fn trace_loops(&self) -> Result<u32> {
        if self.bottom != self.top {
            return Err(Error::ArityMismatch(format!("trace of a {}→{} diagram", self.bottom, self.top)));
        }
        let n = self.bottom;
        let mut seen = vec![false; n];
        let mut loops = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            loops += 1;
            // traverse from bottom point `start`, upward along the closure arc
            // means we arrive at top `start`; walk the diagram from there.
            let mut cur = Side::Top(start);
            loop {
                let next = self.partner_side(cur);
                let j = match next {
                    Side::Bottom(i) => i,
                    Side::Top(j) => j,
                };
                seen[j] = true;
                // the closure connects bottom j with top j
                cur = match next {
                    Side::Bottom(i) => Side::Top(i),
                    Side::Top(j) => Side::Bottom(j),
                };
                if cur == Side::Top(start) {
                    break;
                }
            }
        }
        Ok(loops)
    }

    /// All non-crossing diagrams `bottom → top`, in sorted order.
    pub fn enumerate(bottom: usize, top: usize) -> Vec<Self> {
        let n = bottom + top;
        if n % 2 == 1 {
            return Vec::new();
        }
        // matchings of the interval lo..hi: lo pairs with some j, leaving the
        // inside and the outside to be matched independently
        fn rec(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
            if lo >= hi {
                return vec![Vec::new()];
            }
            let mut out = Vec::new();
            for j in (lo + 1..hi).step_by(2) {
                for inner in rec(lo + 1, j) {
                    for outer in rec(j + 1, hi) {
                        let mut m = vec![(lo, j)];
                        m.extend_from_slice(&inner);
                        m.extend_from_slice(&outer);
                        out.push(m);
                    }
                }
            }
            out
        }
        let mut out: Vec<Self> = rec(0, n)
            .into_iter()
            .map(|pairs| {
                let mut partner = vec![0u16; n];
                for (a, b) in pairs {
                    partner[a] = b as u16;
                    partner[b] = a as u16;
                }
                PlanarDiagram { bottom, top, partner }
            })
            .collect();
        out.sort();
        out
    }
}

impl fmt::Debug for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}→{}{:?}", self.bottom, self.top, self.pairs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn catalan(n: usize) -> usize {
        (0..n).fold(1usize, |c, i| c * 2 * (2 * i + 1) / (i + 2))
    }

    #[test]
    fn catalan_counts() {
        for n in 0..=7 {
            assert_eq!(PlanarDiagram::enumerate(n, n).len(), catalan(n), "n = {n}");
        }
        assert_eq!(PlanarDiagram::enumerate(1, 3).len(), catalan(2));
    }

    #[test]
    fn circle_and_zigzag() {
        let (d, loops) = PlanarDiagram::cap().compose(&PlanarDiagram::cup()).unwrap();
        assert_eq!((d, loops), (PlanarDiagram::empty(), 1));
        let id = PlanarDiagram::identity(1);
        let upper = PlanarDiagram::cap().tensor(&id);
        let lower = id.tensor(&PlanarDiagram::cup());
        assert_eq!(upper.compose(&lower).unwrap(), (id.clone(), 0));
        let upper = id.tensor(&PlanarDiagram::cap());
        let lower = PlanarDiagram::cup().tensor(&id);
        assert_eq!(upper.compose(&lower).unwrap(), (id, 0));
    }

    #[test]
    fn e_squared() {
        let e = PlanarDiagram::e(2, 1).unwrap();
        assert_eq!(e.compose(&e).unwrap(), (e.clone(), 1));
        assert_eq!(e, PlanarDiagram::cup().compose(&PlanarDiagram::cap()).unwrap().0);
    }

    #[test]
    fn tensor_of_cup_and_cap() {
        let d = PlanarDiagram::cup().tensor(&PlanarDiagram::cap());
        assert_eq!((d.bottom(), d.top()), (2, 2));
        assert_eq!(d.pairs(), vec![(0, 1), (2, 3)]);
        assert_eq!(d, PlanarDiagram::e(2, 1).unwrap());
    }

    #[test]
    fn rejects_crossings() {
        assert!(PlanarDiagram::from_pairs(2, 2, &[(0, 2), (1, 3)]).is_err());
        assert!(PlanarDiagram::from_pairs(2, 2, &[(0, 3), (1, 2)]).is_ok());
        assert!(PlanarDiagram::cup().compose(&PlanarDiagram::cup()).is_err());
    }

    #[test]
    fn traces() {
        assert_eq!(PlanarDiagram::identity(3).trace_loops().unwrap(), 3);
        assert_eq!(PlanarDiagram::e(2, 1).unwrap().trace_loops().unwrap(), 1);
        assert_eq!(PlanarDiagram::e(3, 1).unwrap().trace_loops().unwrap(), 2);
    }

    #[test]
    fn flips_are_involutions() {
        for d in PlanarDiagram::enumerate(2, 4) {
            assert_eq!(d.flip().flip(), d);
        }
        assert_eq!(PlanarDiagram::cup().flip(), PlanarDiagram::cap());
    }
}
