//! Finite acyclic quivers, their text/JSON formats and path combinatorics.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite, connected, acyclic quiver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

#[derive(Serialize, Deserialize)]
struct QuiverJson {
    vertices: Vec<String>,
    arrows: Vec<ArrowJson>,
}

#[derive(Serialize, Deserialize)]
struct ArrowJson {
    name: String,
    source: String,
    target: String,
}

impl Quiver {
    /// Build from vertex names and `(name, source, target)` triples.
    pub fn new(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Quiver> {
        let vs: Vec<String> = vertices.iter().map(|s| s.to_string()).collect();
        let mut out = Vec::new();
        for (name, s, t) in arrows {
            let find = |v: &str| {
                vs.iter()
                    .position(|x| x == v)
                    .ok_or_else(|| Error::input(format!("arrow {name}: unknown vertex {v}")))
            };
            out.push(Arrow {
                name: name.to_string(),
                source: find(s)?,
                target: find(t)?,
            });
        }
        let q = Quiver {
            vertices: vs,
            arrows: out,
        };
        q.validate()?;
        Ok(q)
    }

    /// Parse the text format, or JSON when the input starts with `{`.
    ///
    /// ```text
    /// # A_2 with a single arrow 2 -> 1
    /// vertex 1
    /// vertex 2
    /// arrow a: 2 -> 1
    /// ```
    pub fn parse(text: &str) -> Result<Quiver> {
        if text.trim_start().starts_with('{') {
            return Quiver::from_json(text);
        }
        let mut vertices: Vec<String> = Vec::new();
        let mut raw_arrows: Vec<(usize, String, (String, usize), (String, usize))> = Vec::new();
        for (ln, line) in text.lines().enumerate() {
            let line_no = ln + 1;
            let body = line.split('#').next().unwrap_or("");
            if body.trim().is_empty() {
                continue;
            }
            let indent = body.len() - body.trim_start().len();
            let trimmed = body.trim();
            let err = |col: usize, msg: String| Error::Parse {
                line: line_no,
                column: col,
                message: msg,
            };
            if let Some(rest) = trimmed.strip_prefix("vertex") {
                if !rest.starts_with(char::is_whitespace) {
                    return Err(err(indent + 1, format!("unknown directive `{trimmed}`")));
                }
                let name = rest.trim();
                let col = indent + 1 + trimmed.find(name).unwrap_or(0);
                if !valid_name(name) {
                    return Err(err(col, format!("invalid vertex name `{name}`")));
                }
                if vertices.iter().any(|v| v == name) {
                    return Err(err(col, format!("duplicate vertex `{name}`")));
                }
                vertices.push(name.to_string());
            } else if let Some(rest) = trimmed.strip_prefix("arrow") {
                if !rest.starts_with(char::is_whitespace) {
                    return Err(err(indent + 1, format!("unknown directive `{trimmed}`")));
                }
                let base = indent + 1 + "arrow".len();
                let Some(colon) = rest.find(':') else {
                    return Err(err(base + rest.len(), "expected `:` after arrow name".into()));
                };
                let name = rest[..colon].trim();
                if !valid_name(name) {
                    return Err(err(base + 1, format!("invalid arrow name `{name}`")));
                }
                let ends = &rest[colon + 1..];
                let Some(arrow_pos) = ends.find("->") else {
                    return Err(err(base + colon + 1, "expected `<source> -> <target>`".into()));
                };
                let src = ends[..arrow_pos].trim();
                let tgt = ends[arrow_pos + 2..].trim();
                let src_col = base + colon + 1 + ends.find(src).unwrap_or(0);
                let tgt_col = base + colon + 1 + arrow_pos + 2 + ends[arrow_pos + 2..].find(tgt).unwrap_or(0);
                if src.is_empty() || tgt.is_empty() {
                    return Err(err(base + colon + 1, "expected `<source> -> <target>`".into()));
                }
                raw_arrows.push((line_no, name.to_string(), (src.to_string(), src_col), (tgt.to_string(), tgt_col)));
            } else {
                let word = trimmed.split_whitespace().next().unwrap_or("");
                return Err(err(indent + 1, format!("unknown directive `{word}`")));
            }
        }
        let mut arrows = Vec::new();
        for (line, name, (s, sc), (t, tc)) in raw_arrows {
            let find = |v: &str, col: usize| {
                vertices.iter().position(|x| x == v).ok_or_else(|| Error::Parse {
                    line,
                    column: col,
                    message: format!("unknown vertex `{v}`"),
                })
            };
            if arrows.iter().any(|a: &Arrow| a.name == name) {
                return Err(Error::Parse {
                    line,
                    column: 7,
                    message: format!("duplicate arrow `{name}`"),
                });
            }
            let source = find(&s, sc)?;
            let target = find(&t, tc)?;
            arrows.push(Arrow { name, source, target });
        }
        let q = Quiver { vertices, arrows };
        q.validate()?;
        Ok(q)
    }

    pub fn from_json(text: &str) -> Result<Quiver> {
        let j: QuiverJson = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        let vs: Vec<&str> = j.vertices.iter().map(|s| s.as_str()).collect();
        let arrows: Vec<(&str, &str, &str)> = j
            .arrows
            .iter()
            .map(|a| (a.name.as_str(), a.source.as_str(), a.target.as_str()))
            .collect();
        Quiver::new(&vs, &arrows)
    }

    pub fn to_json(&self) -> String {
        let j = QuiverJson {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| ArrowJson {
                    name: a.name.clone(),
                    source: self.vertices[a.source].clone(),
                    target: self.vertices[a.target].clone(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&j).expect("serializable")
    }

    /// Canonical text rendering; used for fingerprints.
    pub fn canonical_text(&self) -> String {
        let mut s = String::new();
        for v in &self.vertices {
            s.push_str(&format!("vertex {v}\n"));
        }
        for a in &self.arrows {
            s.push_str(&format!(
                "arrow {}: {} -> {}\n",
                a.name, self.vertices[a.source], self.vertices[a.target]
            ));
        }
        s
    }

    fn validate(&self) -> Result<()> {
        let n = self.vertices.len();
        if n == 0 {
            return Err(Error::input("quiver has no vertices"));
        }
        for (i, v) in self.vertices.iter().enumerate() {
            if self.vertices[..i].contains(v) {
                return Err(Error::input(format!("duplicate vertex `{v}`")));
            }
        }
        for (i, a) in self.arrows.iter().enumerate() {
            if self.arrows[..i].iter().any(|b| b.name == a.name) {
                return Err(Error::input(format!("duplicate arrow `{}`", a.name)));
            }
            if a.source >= n || a.target >= n {
                return Err(Error::input(format!("arrow `{}` has an unknown endpoint", a.name)));
            }
        }
        // connectivity
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for a in &self.arrows {
                for (x, y) in [(a.source, a.target), (a.target, a.source)] {
                    if x == v && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::input(format!(
                "quiver is not connected (vertex `{}` is unreachable)",
                self.vertices[v]
            )));
        }
        if self.topological_order().is_none() {
            return Err(Error::input("quiver has an oriented cycle"));
        }
        Ok(())
    }

    /// Vertices ordered so that every arrow goes forward; `None` for cyclic quivers.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::new();
        while let Some(v) = ready.pop() {
            order.push(v);
            for a in self.arrows.iter().filter(|a| a.source == v) {
                indeg[a.target] -= 1;
                if indeg[a.target] == 0 {
                    ready.push(a.target);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::input(format!("unknown vertex `{name}`")))
    }

    pub fn arrow_index(&self, name: &str) -> Result<usize> {
        self.arrows
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| Error::input(format!("unknown arrow `{name}`")))
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    /// The opposite quiver (all arrows reversed).
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }

    /// Euler form `<x, y> = sum x_i y_i - sum_{a: i -> j} x_i y_j`.
    pub fn euler_form(&self, x: &[usize], y: &[usize]) -> i64 {
        let diag: i64 = x.iter().zip(y).map(|(&a, &b)| (a * b) as i64).sum();
        let off: i64 = self
            .arrows
            .iter()
            .map(|a| (x[a.source] * y[a.target]) as i64)
            .sum();
        diag - off
    }

    /// Whether the symmetrized Euler form is positive definite, i.e. the
    /// underlying graph is a disjoint union of simply laced Dynkin diagrams
    /// and the path algebra is representation-finite.
    pub fn is_dynkin(&self) -> bool {
        let n = self.num_vertices();
        let mut c = vec![vec![0i128; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        for a in &self.arrows {
            c[a.source][a.target] -= 1;
            c[a.target][a.source] -= 1;
        }
        // Sylvester's criterion with fraction-free elimination: the k-th
        // pivot equals the k-th leading principal minor.
        let mut prev = 1i128;
        for k in 0..n {
            if c[k][k] <= 0 {
                return false;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    c[i][j] = (c[i][j] * c[k][k] - c[i][k] * c[k][j]) / prev;
                }
            }
            prev = c[k][k];
        }
        true
    }

    /// A few standard quivers, addressable by name from the CLI and tests.
    pub fn named(name: &str) -> Result<Quiver> {
        match name {
            "a1" => Quiver::new(&["1"], &[]),
            "a2" => Quiver::new(&["1", "2"], &[("a", "2", "1")]),
            "a2op" => Quiver::new(&["1", "2"], &[("a", "1", "2")]),
            "a3" => Quiver::new(&["1", "2", "3"], &[("a", "2", "1"), ("b", "3", "2")]),
            "a3mid" => Quiver::new(&["1", "2", "3"], &[("a", "1", "2"), ("b", "3", "2")]),
            "a3src" => Quiver::new(&["1", "2", "3"], &[("a", "2", "1"), ("b", "2", "3")]),
            "d4" => Quiver::new(
                &["0", "1", "2", "3"],
                &[("a", "1", "0"), ("b", "2", "0"), ("c", "3", "0")],
            ),
            "kronecker" | "kron" => Quiver::new(&["1", "2"], &[("a", "2", "1"), ("b", "2", "1")]),
            _ => Err(Error::input(format!("unknown built-in quiver `{name}`"))),
        }
    }
}

fn valid_name(s: &str) -> bool {
    !s.is_empty()
        && s.chars()
            .all(|c| c.is_alphanumeric() || c == '_' || c == '\'' || c == '-')
        && !s.contains("->")
}

/// A directed path; the trivial path at `v` has no arrows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }
}

/// All paths of an acyclic quiver with their composition table.
///
/// Paths are indexed with the trivial paths first (in vertex order), then by
/// length, then lexicographically in arrow indices.
#[derive(Clone, Debug)]
pub struct PathBasis {
    paths: Vec<Path>,
    index: HashMap<(usize, Vec<usize>), usize>,
    names: Vec<String>,
}

impl PathBasis {
    pub fn new(q: &Quiver) -> PathBasis {
        let n = q.num_vertices();
        let mut paths: Vec<Path> = (0..n)
            .map(|v| Path {
                source: v,
                target: v,
                arrows: vec![],
            })
            .collect();
        let mut frontier: Vec<Path> = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(i, a)| Path {
                source: a.source,
                target: a.target,
                arrows: vec![i],
            })
            .collect();
        while !frontier.is_empty() {
            frontier.sort_by(|a, b| a.arrows.cmp(&b.arrows));
            let mut next = Vec::new();
            for p in &frontier {
                for (i, a) in q.arrows().iter().enumerate() {
                    if a.source == p.target {
                        let mut arrows = p.arrows.clone();
                        arrows.push(i);
                        next.push(Path {
                            source: p.source,
                            target: a.target,
                            arrows,
                        });
                    }
                }
            }
            paths.append(&mut frontier);
            frontier = next;
        }
        let index = paths
            .iter()
            .enumerate()
            .map(|(i, p)| (key(p), i))
            .collect();
        let names = paths
            .iter()
            .map(|p| {
                if p.is_trivial() {
                    format!("e_{}", q.vertex_name(p.source))
                } else {
                    p.arrows
                        .iter()
                        .map(|&a| q.arrows()[a].name.as_str())
                        .collect::<Vec<_>>()
                        .join(".")
                }
            })
            .collect();
        PathBasis { paths, index, names }
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn path(&self, i: usize) -> &Path {
        &self.paths[i]
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    /// Name used in files: `e_<vertex>` for trivial paths, arrow names joined by `.` otherwise.
    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn by_name(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::input(format!("unknown path `{name}`")))
    }

    pub fn trivial(&self, v: usize) -> usize {
        v
    }

    fn lookup(&self, source: usize, arrows: &[usize]) -> usize {
        let k = if arrows.is_empty() {
            (source, vec![])
        } else {
            (usize::MAX, arrows.to_vec())
        };
        self.index[&k]
    }

    /// `p` followed by `q`, if composable.
    pub fn compose(&self, p: usize, q: usize) -> Option<usize> {
        let (a, b) = (&self.paths[p], &self.paths[q]);
        if a.target != b.source {
            return None;
        }
        let mut arrows = a.arrows.clone();
        arrows.extend_from_slice(&b.arrows);
        Some(self.lookup(a.source, &arrows))
    }

    /// The `r` with `q = r p` (`p` a terminal segment of `q`).
    pub fn strip_suffix(&self, q: usize, p: usize) -> Option<usize> {
        let (qq, pp) = (&self.paths[q], &self.paths[p]);
        if qq.target != pp.target || !qq.arrows.ends_with(&pp.arrows) {
            return None;
        }
        let r = &qq.arrows[..qq.len() - pp.len()];
        Some(self.lookup(qq.source, r))
    }

    /// The `r` with `q = p r` (`p` an initial segment of `q`).
    pub fn strip_prefix(&self, q: usize, p: usize) -> Option<usize> {
        let (qq, pp) = (&self.paths[q], &self.paths[p]);
        if qq.source != pp.source || !qq.arrows.starts_with(&pp.arrows) {
            return None;
        }
        let r = &qq.arrows[pp.len()..];
        Some(self.lookup(pp.target, r))
    }

    /// Paths admitting no extension on either side.
    pub fn maximal(&self, q: &Quiver) -> Vec<usize> {
        (0..self.paths.len())
            .filter(|&i| {
                let p = &self.paths[i];
                !q.arrows()
                    .iter()
                    .any(|a| a.target == p.source || a.source == p.target)
            })
            .collect()
    }

    pub fn from_vertex(&self, v: usize) -> Vec<usize> {
        (0..self.paths.len())
            .filter(|&i| self.paths[i].source == v)
            .collect()
    }

    pub fn into_vertex(&self, v: usize) -> Vec<usize> {
        (0..self.paths.len())
            .filter(|&i| self.paths[i].target == v)
            .collect()
    }
}

fn key(p: &Path) -> (usize, Vec<usize>) {
    if p.is_trivial() {
        (p.source, vec![])
    } else {
        (usize::MAX, p.arrows.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dynkin_detection() {
        for name in ["a1", "a2", "a3mid", "d4"] {
            assert!(Quiver::named(name).unwrap().is_dynkin(), "{name}");
        }
        assert!(!Quiver::named("kronecker").unwrap().is_dynkin());
        let d4_tilde = Quiver::new(
            &["0", "1", "2", "3", "4"],
            &[("a", "1", "0"), ("b", "2", "0"), ("c", "3", "0"), ("d", "4", "0")],
        )
        .unwrap();
        assert!(!d4_tilde.is_dynkin());
    }

    #[test]
    fn parse_text_and_json_agree() {
        let q = Quiver::parse("vertex 1\nvertex 2\n# comment\narrow a: 2 -> 1\n").unwrap();
        assert_eq!(q, Quiver::named("a2").unwrap());
        assert_eq!(Quiver::parse(&q.to_json()).unwrap(), q);
        assert_eq!(Quiver::parse(&q.canonical_text()).unwrap(), q);
    }

    #[test]
    fn parse_errors_carry_positions() {
        match Quiver::parse("vertex 1\narrow a: 1 -> 7\n") {
            Err(Error::Parse { line, column, .. }) => {
                assert_eq!(line, 2);
                assert_eq!(column, 15);
            }
            other => panic!("{other:?}"),
        }
        match Quiver::parse("vertex 1\n  vortex 2\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("{other:?}"),
        }
        assert!(Quiver::parse("vertex 1\nvertex 2\n").is_err());
        assert!(Quiver::parse("vertex 1\nvertex 2\narrow a: 1 -> 2\narrow b: 2 -> 1\n").is_err());
    }

    #[test]
    fn a3_paths() {
        let q = Quiver::named("a3").unwrap();
        let pb = PathBasis::new(&q);
        assert_eq!(pb.len(), 6);
        let ba = pb.by_name("b.a").unwrap();
        let a = pb.by_name("a").unwrap();
        let b = pb.by_name("b").unwrap();
        assert_eq!(pb.compose(b, a), Some(ba));
        assert_eq!(pb.compose(a, b), None);
        assert_eq!(pb.strip_suffix(ba, a), Some(b));
        assert_eq!(pb.strip_prefix(ba, b), Some(a));
        assert_eq!(pb.strip_suffix(ba, ba), Some(pb.trivial(2)));
        assert_eq!(pb.maximal(&q), vec![ba]);
    }

    #[test]
    fn kronecker_maximal_paths() {
        let q = Quiver::named("kronecker").unwrap();
        let pb = PathBasis::new(&q);
        assert_eq!(pb.len(), 4);
        assert_eq!(pb.maximal(&q).len(), 2);
    }
}
