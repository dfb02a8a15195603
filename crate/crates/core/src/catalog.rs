//! Named graphs with the properties known about them.
//!
//! Built-in entries are constructed from their definitions. Graphs that are
//! only known from drawings enter through a reference list in the record
//! format read by [`Catalog::load_reference_list`]:
//!
//! ```text
//! ---
//! name: K5
//! flags: projective=yes emulable=yes coverable=yes i4c=open
//! vertices: 0 1 2 3 4
//! 0 1
//! ...
//! ```

use std::fmt;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{is_isomorphic, named, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Yes,
    No,
    Open,
}

impl Verdict {
    fn parse(s: &str) -> Option<Self> {
        match s {
            "yes" => Some(Verdict::Yes),
            "no" => Some(Verdict::No),
            "open" => Some(Verdict::Open),
            _ => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Open => "open",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Flags {
    pub projective: Verdict,
    pub emulable: Verdict,
    pub coverable: Verdict,
    pub i4c: Verdict,
}

impl Flags {
    pub const UNKNOWN: Flags = Flags {
        projective: Verdict::Open,
        emulable: Verdict::Open,
        coverable: Verdict::Open,
        i4c: Verdict::Open,
    };

    const fn new(projective: Verdict, emulable: Verdict, coverable: Verdict, i4c: Verdict) -> Self {
        Flags {
            projective,
            emulable,
            coverable,
            i4c,
        }
    }

    fn parse(text: &str) -> std::result::Result<Self, String> {
        let mut f = Flags::UNKNOWN;
        for tok in text.split_whitespace() {
            let (key, value) = tok
                .split_once('=')
                .ok_or(format!("expected key=value, found `{tok}`"))?;
            let v = Verdict::parse(value).ok_or(format!("bad verdict `{value}`"))?;
            match key {
                "projective" => f.projective = v,
                "emulable" => f.emulable = v,
                "coverable" => f.coverable = v,
                "i4c" => f.i4c = v,
                _ => return Err(format!("unknown flag `{key}`")),
            }
        }
        Ok(f)
    }
}

impl fmt::Display for Flags {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "projective={} emulable={} coverable={} i4c={}",
            self.projective, self.emulable, self.coverable, self.i4c
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub graph: Graph,
    pub flags: Flags,
}

impl CatalogEntry {
    pub fn to_text(&self) -> String {
        format!(
            "---\nname: {}\nflags: {}\n{}",
            self.name,
            self.flags,
            self.graph.to_text()
        )
    }
}

/// Graph definitions for the built-in entries.
pub mod graphs {
    use crate::graph::{named, Graph};

    fn build(labels: &[&str], edges: impl IntoIterator<Item = (String, String)>) -> Graph {
        let mut g = Graph::with_vertices(labels).expect("distinct labels");
        for (a, b) in edges {
            g.add_edge_by_label(&a, &b).expect("edge between known vertices");
        }
        g
    }

    /// `K4` on `1 2 3 4`.
    pub fn k4() -> Graph {
        let l = ["1", "2", "3", "4"];
        build(&l, pairs(&l))
    }

    fn pairs(l: &[&str]) -> Vec<(String, String)> {
        let mut out = Vec::new();
        for i in 0..l.len() {
            for j in i + 1..l.len() {
                out.push((l[i].to_string(), l[j].to_string()));
            }
        }
        out
    }

    /// `K4` on the core `1 2 3 4` with every edge `ij` subdivided by the
    /// bi-vertex `ij`, plus a vertex `0` adjacent to all bi-vertices.
    pub fn e2() -> Graph {
        let core = ["1", "2", "3", "4"];
        let mut labels: Vec<String> = core.iter().map(|s| s.to_string()).collect();
        let mut edges = Vec::new();
        for (a, b) in pairs(&core) {
            let bi = format!("{a}{b}");
            edges.push((a, bi.clone()));
            edges.push((b, bi.clone()));
            edges.push(("0".to_string(), bi.clone()));
            labels.push(bi);
        }
        labels.push("0".into());
        let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
        build(&refs, edges)
    }

    /// The cube on `0..8` plus `x` adjacent to every cube vertex except the
    /// antipodal pair `0` and `7`.
    pub fn c4() -> Graph {
        let mut g = named::cube();
        let x = g.add_vertex("x").expect("fresh label");
        for v in 1..7 {
            g.add_edge(x, v).expect("distinct vertices");
        }
        g
    }

    /// `K7` minus the 4-cycle `A C B D`: the triple `1 2 3` is complete to
    /// everything, `A B` and `C D` are edges, and no edge joins the pairs.
    pub fn k7_minus_c4() -> Graph {
        let l = ["1", "2", "3", "A", "B", "C", "D"];
        let mut edges = pairs(&l);
        edges.retain(|(a, b)| {
            let pair = |s: &str| match s {
                "A" | "B" => Some(0),
                "C" | "D" => Some(1),
                _ => None,
            };
            !matches!((pair(a), pair(b)), (Some(x), Some(y)) if x != y)
        });
        build(&l, edges)
    }

    pub fn k1222() -> Graph {
        named::complete_multipartite(&[1, 2, 2, 2])
    }

    /// `K4,5` minus a matching of size 4: `a_i b_i` removed for `i < 4`.
    pub fn k45_minus_4k2() -> Graph {
        let mut g = named::complete_bipartite(4, 5);
        for i in 0..4 {
            g.remove_edge(i, 4 + i);
        }
        g
    }

    pub fn k44_minus_e() -> Graph {
        let mut g = named::complete_bipartite(4, 4);
        g.remove_edge(0, 4);
        g
    }
}

use Verdict::{No, Open, Yes};

/// Name, graph and flags of every built-in entry. Flags record what is
/// stated in the literature the toolkit follows; anything else is `open`.
fn builtins() -> Vec<CatalogEntry> {
    let planar = Flags::new(Yes, Yes, Yes, Open);
    let table: Vec<(&str, Graph, Flags)> = vec![
        ("K4", graphs::k4(), planar),
        ("K2,3", named::complete_bipartite(2, 3), planar),
        ("K5", named::complete(5), Flags::new(Yes, Yes, Yes, Open)),
        ("K3,3", named::complete_bipartite(3, 3), Flags::new(Yes, Yes, Yes, Open)),
        ("K3,5", named::complete_bipartite(3, 5), Flags::new(No, No, No, Open)),
        ("K4,4", named::complete_bipartite(4, 4), Flags::new(No, No, No, Open)),
        ("K7", named::complete(7), Flags::new(No, No, No, Open)),
        ("K4,4-e", graphs::k44_minus_e(), Flags::new(No, Open, Open, Open)),
        ("K1222", graphs::k1222(), Flags::new(No, Yes, Open, Yes)),
        ("K4,5-4K2", graphs::k45_minus_4k2(), Flags::new(No, Yes, No, Yes)),
        ("E2", graphs::e2(), Flags::new(No, Yes, Open, Yes)),
        ("C4", graphs::c4(), Flags::new(No, Yes, Open, Yes)),
        ("K7-C4", graphs::k7_minus_c4(), Flags::new(No, Yes, Open, No)),
    ];
    table
        .into_iter()
        .map(|(name, graph, flags)| CatalogEntry {
            name: name.to_string(),
            graph,
            flags,
        })
        .collect()
}

/// Built-in entry by name.
pub fn get(name: &str) -> Result<CatalogEntry> {
    builtins()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

#[derive(Debug, Clone, Default)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn empty() -> Self {
        Catalog::default()
    }

    pub fn builtin() -> Self {
        Catalog { entries: builtins() }
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Result<&CatalogEntry> {
        self.entries
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    /// First entry isomorphic to `g`.
    pub fn identify(&self, g: &Graph) -> Option<&str> {
        self.entries
            .iter()
            .find(|e| is_isomorphic(&e.graph, g))
            .map(|e| e.name.as_str())
    }

    pub fn insert(&mut self, entry: CatalogEntry) -> Result<()> {
        if self.entries.iter().any(|e| e.name == entry.name) {
            return Err(Error::DuplicateName(entry.name));
        }
        self.entries.push(entry);
        Ok(())
    }

    /// Adds every record of `text`; returns how many were added. Nothing is
    /// added when any record fails.
    pub fn load_reference_list(&mut self, text: &str) -> Result<usize> {
        let records = parse_records(text)?;
        let mut next = self.clone();
        for e in &records {
            next.insert(e.clone())?;
        }
        *self = next;
        Ok(records.len())
    }

    pub fn load_reference_file(&mut self, path: &Path) -> Result<usize> {
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
        self.load_reference_list(&text)
    }

    pub fn to_text(&self) -> String {
        self.entries.iter().map(CatalogEntry::to_text).collect()
    }
}

fn parse_records(text: &str) -> Result<Vec<CatalogEntry>> {
    let mut chunks: Vec<Vec<(usize, &str)>> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim() == "---" {
            chunks.push(Vec::new());
        } else if let Some(chunk) = chunks.last_mut() {
            chunk.push((i + 1, line));
        } else if !line.split('#').next().unwrap_or("").trim().is_empty() {
            return Err(Error::Parse {
                line: i + 1,
                message: "content before the first `---`".into(),
            });
        }
    }
    chunks.into_iter().map(parse_record).collect()
}

fn parse_record(lines: Vec<(usize, &str)>) -> Result<CatalogEntry> {
    let mut name = None;
    let mut flags = Flags::UNKNOWN;
    let mut rest = Vec::new();
    let header_line = lines.first().map_or(0, |l| l.0.saturating_sub(1));
    for (n, line) in lines {
        let t = line.trim();
        if let Some(v) = t.strip_prefix("name:") {
            name = Some(v.trim().to_string());
        } else if let Some(v) = t.strip_prefix("flags:") {
            flags = Flags::parse(v).map_err(|message| Error::Parse { line: n, message })?;
        } else {
            rest.push((n, line));
        }
    }
    let name = name.filter(|s| !s.is_empty()).ok_or(Error::Parse {
        line: header_line,
        message: "record without `name:`".into(),
    })?;
    let graph = Graph::parse_lines(rest)?;
    Ok(CatalogEntry { name, graph, flags })
}
