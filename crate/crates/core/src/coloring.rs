//! First-fit colorings, vertex orderings and the witness validator.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Colors are 1-based; [`UNCOLORED`] marks a vertex outside the colored set.
pub type Color = u32;

pub const UNCOLORED: Color = 0;

/// Which flavour of greedy coloring is being asked about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// First-fit colorings that are proper.
    Proper,
    /// First-fit colorings without the properness requirement.
    Weak,
    /// Proper first-fit along orderings whose every prefix is connected.
    Connected,
}

/// A sequence of distinct vertices.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexOrdering(pub Vec<usize>);

impl VertexOrdering {
    pub fn new(seq: Vec<usize>) -> Self {
        VertexOrdering(seq)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Checks that every vertex is in range and appears at most once.
    pub fn check(&self, n: usize) -> Result<()> {
        let mut seen = vec![false; n];
        for &v in &self.0 {
            if v >= n {
                return Err(Error::VertexOutOfRange(v));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::DuplicateVertex(v));
            }
        }
        Ok(())
    }
}

impl From<Vec<usize>> for VertexOrdering {
    fn from(v: Vec<usize>) -> Self {
        VertexOrdering(v)
    }
}

/// Per-vertex colors; `0` means uncolored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColorAssignment(pub Vec<Color>);

impl ColorAssignment {
    pub fn uncolored(n: usize) -> Self {
        ColorAssignment(vec![UNCOLORED; n])
    }

    #[inline]
    pub fn get(&self, v: usize) -> Color {
        self.0[v]
    }

    #[inline]
    pub fn set(&mut self, v: usize, c: Color) {
        self.0[v] = c;
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.0
    }

    pub fn max_color(&self) -> Color {
        self.0.iter().copied().max().unwrap_or(UNCOLORED)
    }

    pub fn colored(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &c)| c != UNCOLORED).map(|(v, _)| v)
    }

    pub fn colored_count(&self) -> usize {
        self.colored().count()
    }

    /// Vertices of each color class `W_1, .., W_k` (index 0 holds `W_1`).
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let k = self.max_color() as usize;
        let mut classes = vec![Vec::new(); k];
        for (v, &c) in self.0.iter().enumerate() {
            if c != UNCOLORED {
                classes[c as usize - 1].push(v);
            }
        }
        classes
    }

    /// An ordering that lists colored vertices class by class.
    pub fn class_ordering(&self) -> VertexOrdering {
        VertexOrdering(self.classes().into_iter().flatten().collect())
    }
}

/// Greedy coloring along `sigma`: each vertex takes the smallest color absent
/// from its already-colored neighbors. Vertices not in `sigma` stay uncolored.
pub fn first_fit(g: &Graph, sigma: &VertexOrdering) -> Result<ColorAssignment> {
    sigma.check(g.n())?;
    Ok(first_fit_unchecked(g, sigma.as_slice()))
}

pub(crate) fn first_fit_unchecked(g: &Graph, sigma: &[usize]) -> ColorAssignment {
    let mut colors = ColorAssignment::uncolored(g.n());
    let mut seen: Vec<bool> = Vec::new();
    for &v in sigma {
        let d = g.degree(v);
        seen.clear();
        seen.resize(d + 2, false);
        for &u in g.neighbors(v) {
            let c = colors.get(u) as usize;
            if c != 0 && c <= d + 1 {
                seen[c] = true;
            }
        }
        let c = (1..).find(|&c| !seen[c]).expect("a free color exists");
        colors.set(v, c as Color);
    }
    colors
}

/// Checks the witness characterization: every colored vertex of color `c`
/// has, for each `c' < c`, a colored neighbor of color `c'`; under
/// [`Variant::Proper`] no two adjacent colored vertices share a color.
/// Uncolored vertices are ignored entirely.
pub fn validate_partition(g: &Graph, phi: &ColorAssignment, variant: Variant) -> Result<bool> {
    if variant == Variant::Connected {
        return Err(Error::ConnectedVariantUnsupported);
    }
    if phi.len() != g.n() {
        return Err(Error::InvalidParameter(format!(
            "assignment has {} entries for {} vertices",
            phi.len(),
            g.n()
        )));
    }
    let mut seen: Vec<bool> = Vec::new();
    for v in 0..g.n() {
        let c = phi.get(v) as usize;
        if c == 0 {
            continue;
        }
        seen.clear();
        seen.resize(c, false);
        let mut found = 0;
        for &u in g.neighbors(v) {
            let cu = phi.get(u) as usize;
            if cu == 0 {
                continue;
            }
            if cu == c && variant == Variant::Proper {
                return Ok(false);
            }
            if cu < c && !seen[cu] {
                seen[cu] = true;
                found += 1;
            }
        }
        if found != c - 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff every prefix of `sigma` induces a connected subgraph, which holds
/// exactly when each vertex after the first has an earlier neighbor.
pub fn is_connected_ordering(g: &Graph, sigma: &VertexOrdering) -> bool {
    if sigma.check(g.n()).is_err() {
        return false;
    }
    let mut placed = vec![false; g.n()];
    for (i, &v) in sigma.as_slice().iter().enumerate() {
        if i > 0 && !g.neighbors(v).iter().any(|&u| placed[u]) {
            return false;
        }
        placed[v] = true;
    }
    true
}
