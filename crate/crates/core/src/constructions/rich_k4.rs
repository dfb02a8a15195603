//! A planar cover of `K4` in which every edge borders a rich face.
//!
//! The host is the truncated cube. Each corner triangle `c.0 c.1 c.2` takes
//! three distinct labels, leaving one label `m_c` unused; the cover condition
//! then forces the ridge partner `(c ^ 2^d).d` of `c.d` to carry `m_c`. The
//! search walks corners in order and keeps the first labeling whose six
//! octagons are all rich.

use std::collections::BTreeSet;

use super::polyhedra::truncated_cube;
use super::{certify, Construction};
use crate::catalog::graphs;
use crate::emulator::{verify_cover, Projection};
use crate::error::{Error, Result};
use crate::planarity::{Embedding, Face};

/// Faces whose boundary edges represent every edge of the target.
pub fn rich_faces(p: &Projection, emb: &Embedding) -> Result<Vec<Face>> {
    let need = p.target().size();
    Ok(emb
        .faces()?
        .into_iter()
        .filter(|f| {
            let images: BTreeSet<(usize, usize)> = f
                .darts
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (p.image(u), p.image(v));
                    (a.min(b), a.max(b))
                })
                .collect();
            images.len() == need
        })
        .collect())
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                if a != b && b != c && a != c {
                    out.push([a, b, c, 6 - a - b - c]);
                }
            }
        }
    }
    out
}

/// Corner permutation; the last entry is the missing label.
type Labeling = Option<[usize; 4]>;

/// Labels indexed by template corner; template vertex `3c + d` gets label
/// `chosen[c][d]`.
struct Search {
    perms: Vec<[usize; 4]>,
    chosen: Vec<Labeling>,
}

impl Search {
    fn consistent(&self, c: usize, p: &[usize; 4]) -> bool {
        (0..3).all(|d| match self.chosen[c ^ (1 << d)] {
            None => true,
            Some(q) => q[d] == p[3] && p[d] == q[3],
        })
    }

    fn run(&mut self, c: usize, accept: &mut dyn FnMut(&[Labeling]) -> bool) -> bool {
        if c == 8 {
            return accept(&self.chosen);
        }
        for i in 0..self.perms.len() {
            let p = self.perms[i];
            if self.consistent(c, &p) {
                self.chosen[c] = Some(p);
                if self.run(c + 1, accept) {
                    return true;
                }
            }
        }
        self.chosen[c] = None;
        false
    }
}

pub fn search_rich_k4_emulator() -> Result<Construction> {
    let template = truncated_cube()?;
    let target = graphs::k4();
    let mut found = None;
    let mut search = Search {
        perms: permutations4(),
        chosen: vec![None; 8],
    };
    search.run(0, &mut |chosen| {
        let map: Vec<usize> = (0..24).map(|v| chosen[v / 3].expect("complete")[v % 3]).collect();
        let Ok(p) = Projection::new(template.graph.clone(), target.clone(), map) else {
            return false;
        };
        let rich = rich_faces(&p, &template.embedding).map_or(0, |f| f.len());
        if rich == 6 && verify_cover(&p).valid {
            found = Some(p);
            true
        } else {
            false
        }
    });
    let p = found.ok_or_else(|| Error::SearchFailed("no rich labeling of the truncated cube".into()))?;
    certify(p, "rich K4 cover")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_edge_borders_a_rich_face() {
        let c = search_rich_k4_emulator().unwrap();
        let p = &c.projection;
        assert!(verify_cover(p).valid);
        assert_eq!(p.host().order(), 24);
        let rich = rich_faces(p, &c.embedding).unwrap();
        assert_eq!(rich.len(), 6);
        assert!(rich.iter().all(|f| f.len() == 8));
        let mut covered = BTreeSet::new();
        for f in &rich {
            for &(u, v) in &f.darts {
                covered.insert((u.min(v), u.max(v)));
            }
        }
        assert_eq!(covered.len(), p.host().size());
    }
}
