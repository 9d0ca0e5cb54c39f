use super::Poly;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// `lead * prod (z - root)^mult`, roots pairwise distinct (by equality) and
/// sorted by their canonical text.
#[derive(Clone, Debug, PartialEq)]
pub struct FactoredPoly<S> {
    lead: S,
    roots: Vec<(S, usize)>,
}

impl<S: Scalar> FactoredPoly<S> {
    /// Merges equal roots and drops zero multiplicities.
    pub fn new(lead: S, roots: impl IntoIterator<Item = (S, usize)>) -> Result<Self> {
        if lead.is_zero() {
            return Err(Error::InvalidArgument(
                "factored polynomial with zero leading coefficient".into(),
            ));
        }
        let mut merged: Vec<(S, usize)> = Vec::new();
        for (r, m) in roots {
            if m == 0 {
                continue;
            }
            match merged.iter_mut().find(|(s, _)| *s == r) {
                Some(entry) => entry.1 += m,
                None => merged.push((r, m)),
            }
        }
        merged.sort_by_cached_key(|(r, _)| r.sort_key());
        Ok(Self { lead, roots: merged })
    }

    pub fn constant(c: S) -> Result<Self> {
        Self::new(c, [])
    }

    /// Monic polynomial with simple roots at the listed points.
    pub fn from_roots(roots: impl IntoIterator<Item = S>) -> Self {
        Self::new(S::one(), roots.into_iter().map(|r| (r, 1))).expect("unit lead")
    }

    pub fn lead(&self) -> &S {
        &self.lead
    }

    pub fn roots(&self) -> &[(S, usize)] {
        &self.roots
    }

    pub fn degree(&self) -> usize {
        self.roots.iter().map(|(_, m)| m).sum()
    }

    pub fn is_constant(&self) -> bool {
        self.roots.is_empty()
    }

    /// Multiplicity of `w` as a root (exact equality).
    pub fn order_at(&self, w: &S) -> usize {
        self.roots.iter().find(|(r, _)| r == w).map_or(0, |(_, m)| *m)
    }

    pub fn expand(&self) -> Poly<S> {
        let monic = self
            .roots
            .iter()
            .fold(Poly::one(), |acc, (r, m)| &acc * &Poly::linear(r).pow(*m));
        monic.scale(&self.lead)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(
            self.lead.times(&other.lead),
            self.roots.iter().chain(&other.roots).cloned(),
        )
        .expect("product of nonzero leads")
    }

    pub fn product<'a>(fs: impl IntoIterator<Item = &'a Self>) -> Self {
        fs.into_iter()
            .fold(Self::constant(S::one()).expect("unit"), |acc, f| acc.mul(f))
    }

    pub fn scale(&self, c: &S) -> Result<Self> {
        Self::new(self.lead.times(c), self.roots.iter().cloned())
    }

    /// `f(z + k)`: every root moves to `root - k`.
    pub fn shift(&self, k: i64) -> Self {
        let k = S::from_i64(k);
        Self::new(self.lead.clone(), self.roots.iter().map(|(r, m)| (r.minus(&k), *m))).expect("same lead")
    }

    /// `f(z) f(z-1) ... f(z-n+1)`: each root `r` spawns `r, r+1, ..., r+n-1`.
    pub fn falling_power(&self, n: usize) -> Self {
        let lead = (0..n).fold(S::one(), |acc, _| acc.times(&self.lead));
        let roots = self
            .roots
            .iter()
            .flat_map(|(r, m)| (0..n).map(move |j| (r.plus(&S::from_i64(j as i64)), *m)));
        Self::new(lead, roots).expect("nonzero lead")
    }

    /// `f(z) f(z+1) ... f(z+n-1)`.
    pub fn raising_power(&self, n: usize) -> Self {
        let lead = (0..n).fold(S::one(), |acc, _| acc.times(&self.lead));
        let roots = self
            .roots
            .iter()
            .flat_map(|(r, m)| (0..n).map(move |j| (r.minus(&S::from_i64(j as i64)), *m)));
        Self::new(lead, roots).expect("nonzero lead")
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> FactoredPoly<T> {
        FactoredPoly::new(f(&self.lead), self.roots.iter().map(|(r, m)| (f(r), *m)))
            .expect("embedding keeps the lead nonzero")
    }
}

/// Monic product of `z - w` over the distinct roots.
pub fn classical_rad<S: Scalar>(f: &FactoredPoly<S>) -> Poly<S> {
    Poly::from_roots(f.roots().iter().map(|(r, _)| r))
}
