//! Emulator and cover projections.
//!
//! A projection maps every host vertex to a target vertex. It is an
//! emulator when each host neighbourhood maps onto the neighbourhood of the
//! image, and a cover when it does so bijectively.

mod double;
mod lift;
mod normalize;

use std::collections::BTreeMap;
use std::fmt;

pub use double::{double_cover, search_planar_double_cover, DoubleCover, SignedEmbedding};
pub use lift::{lift_contract_edge, lift_delete_edge, lift_delete_vertex, lift_yd};
pub use normalize::{normalize_fiber_degrees, Normalization};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Projection {
    host: Graph,
    target: Graph,
    map: Vec<Vertex>,
}

impl Projection {
    /// `map[h]` is the target vertex of host vertex `h`. Disconnected
    /// targets are rejected.
    pub fn new(host: Graph, target: Graph, map: Vec<Vertex>) -> Result<Self> {
        if !target.is_connected() {
            return Err(Error::DisconnectedTarget);
        }
        Self::unchecked_target(host, target, map)
    }

    /// Like [`Projection::new`] without the connectivity requirement; lifts
    /// may legitimately disconnect a target.
    pub(crate) fn unchecked_target(host: Graph, target: Graph, map: Vec<Vertex>) -> Result<Self> {
        if map.len() != host.order() {
            return Err(Error::InvalidInput(format!(
                "map covers {} of {} host vertices",
                map.len(),
                host.order()
            )));
        }
        if let Some(&t) = map.iter().find(|&&t| t >= target.order()) {
            return Err(Error::InvalidInput(format!("map image {t} is not a target vertex")));
        }
        Ok(Projection { host, target, map })
    }

    /// Builds the map from `(host label, target label)` pairs.
    pub fn from_labels<S: AsRef<str>>(host: Graph, target: Graph, pairs: &[(S, S)]) -> Result<Self> {
        let mut map = vec![usize::MAX; host.order()];
        for (h, t) in pairs {
            let hv = host.vertex(h.as_ref())?;
            let tv = target.vertex(t.as_ref())?;
            if map[hv] != usize::MAX {
                return Err(Error::InvalidInput(format!("host vertex {} mapped twice", h.as_ref())));
            }
            map[hv] = tv;
        }
        if let Some(v) = map.iter().position(|&t| t == usize::MAX) {
            return Err(Error::InvalidInput(format!(
                "host vertex {} is unmapped",
                host.label(v)
            )));
        }
        Self::new(host, target, map)
    }

    pub fn identity(g: &Graph) -> Result<Self> {
        Self::new(g.clone(), g.clone(), g.vertices().collect())
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn target(&self) -> &Graph {
        &self.target
    }

    pub fn map(&self) -> &[Vertex] {
        &self.map
    }

    pub fn image(&self, h: Vertex) -> Vertex {
        self.map[h]
    }

    pub fn into_parts(self) -> (Graph, Graph, Vec<Vertex>) {
        (self.host, self.target, self.map)
    }

    pub fn fiber(&self, t: Vertex) -> Vec<Vertex> {
        self.host.vertices().filter(|&h| self.map[h] == t).collect()
    }

    /// Fiber cardinality per target label.
    pub fn fiber_sizes(&self) -> BTreeMap<String, usize> {
        let mut out: BTreeMap<String, usize> = self.target.labels().iter().map(|l| (l.clone(), 0)).collect();
        for &t in &self.map {
            *out.get_mut(self.target.label(t)).expect("target label") += 1;
        }
        out
    }

    pub fn min_fiber(&self) -> usize {
        self.fiber_sizes().values().copied().min().unwrap_or(0)
    }

    /// Mapping file: one `host target` pair per line.
    pub fn map_text(&self) -> String {
        let mut s = String::new();
        for h in self.host.vertices() {
            s.push_str(self.host.label(h));
            s.push(' ');
            s.push_str(self.target.label(self.map[h]));
            s.push('\n');
        }
        s
    }

    /// Reads host, target and mapping files.
    pub fn parse(host: &str, target: &str, map: &str) -> Result<Self> {
        let host = Graph::parse(host)?;
        let target = Graph::parse(target)?;
        let mut pairs = Vec::new();
        for (i, raw) in map.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            let [h, t] = parts[..] else {
                return Err(Error::Parse {
                    line: i + 1,
                    message: "expected `hostVertex targetVertex`".into(),
                });
            };
            if host.index_of(h).is_none() || target.index_of(t).is_none() {
                return Err(Error::Parse {
                    line: i + 1,
                    message: format!("unknown vertex in `{line}`"),
                });
            }
            pairs.push((h.to_string(), t.to_string()));
        }
        Self::from_labels(host, target, &pairs)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Emulator,
    Cover,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Emulator => "emulator",
            Kind::Cover => "cover",
        })
    }
}

/// A failed local condition, named by host and target labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// A host edge whose image is not a target edge (a loop included).
    NonEdgeImage {
        host: String,
        neighbor: String,
    },
    /// A target neighbour of the image not represented around `host`.
    Missing {
        host: String,
        target: String,
    },
    /// A target neighbour represented more than once around `host`.
    Duplicated {
        host: String,
        target: String,
    },
    EmptyFiber {
        target: String,
    },
}

impl Violation {
    pub fn name(&self) -> &'static str {
        match self {
            Violation::NonEdgeImage { .. } => "non-edge-image",
            Violation::Missing { .. } => "missing",
            Violation::Duplicated { .. } => "duplicated",
            Violation::EmptyFiber { .. } => "empty-fiber",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NonEdgeImage { host, neighbor } => {
                write!(
                    f,
                    "non-edge-image: edge {host}-{neighbor} does not map to a target edge"
                )
            }
            Violation::Missing { host, target } => {
                write!(f, "missing: {host} has no neighbour over {target}")
            }
            Violation::Duplicated { host, target } => {
                write!(f, "duplicated: {host} has several neighbours over {target}")
            }
            Violation::EmptyFiber { target } => write!(f, "empty-fiber: nothing maps to {target}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub kind: Kind,
    pub valid: bool,
    pub violations: Vec<Violation>,
    pub fiber_sizes: BTreeMap<String, usize>,
}

pub fn verify_emulator(p: &Projection) -> VerificationReport {
    verify(p, Kind::Emulator)
}

pub fn verify_cover(p: &Projection) -> VerificationReport {
    verify(p, Kind::Cover)
}

pub fn verify(p: &Projection, kind: Kind) -> VerificationReport {
    let (h, g) = (&p.host, &p.target);
    let mut violations = Vec::new();
    for v in h.vertices() {
        let t = p.map[v];
        let mut count = vec![0usize; g.order()];
        for w in h.neighbors(v) {
            let img = p.map[w];
            if img == t || !g.has_edge(t, img) {
                // Each offending edge is reported once.
                if v < w {
                    violations.push(Violation::NonEdgeImage {
                        host: h.label(v).to_string(),
                        neighbor: h.label(w).to_string(),
                    });
                }
            } else {
                count[img] += 1;
            }
        }
        for a in g.neighbors(t) {
            if count[a] == 0 {
                violations.push(Violation::Missing {
                    host: h.label(v).to_string(),
                    target: g.label(a).to_string(),
                });
            } else if count[a] > 1 && kind == Kind::Cover {
                violations.push(Violation::Duplicated {
                    host: h.label(v).to_string(),
                    target: g.label(a).to_string(),
                });
            }
        }
    }
    let fiber_sizes = p.fiber_sizes();
    if h.order() > 0 {
        for (t, &n) in &fiber_sizes {
            if n == 0 {
                violations.push(Violation::EmptyFiber { target: t.clone() });
            }
        }
    }
    VerificationReport {
        kind,
        valid: violations.is_empty(),
        violations,
        fiber_sizes,
    }
}

/// Verifies as an emulator, turning failure into [`Error::InvariantBroken`].
pub(crate) fn ensure_emulator(p: Projection, what: &str) -> Result<Projection> {
    let r = verify_emulator(&p);
    if r.valid {
        Ok(p)
    } else {
        Err(Error::InvariantBroken(format!(
            "{what} produced an invalid emulator: {}",
            r.violations[0]
        )))
    }
}
