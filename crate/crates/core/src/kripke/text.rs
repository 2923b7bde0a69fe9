//! Line-oriented frame format:
//!
//! ```text
//! # comment
//! node a
//! node b
//! R 0 a b
//! S 0 a a
//! root a
//! ```

use std::fmt;
use std::str::FromStr;

use super::Frame;
use crate::error::{Error, Result};
use crate::syntax::MAX_INDEX;

impl FromStr for Frame {
    type Err = Error;

    fn from_str(text: &str) -> Result<Frame> {
        let lines: Vec<(usize, Vec<&str>)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").split_whitespace().collect()))
            .filter(|(_, toks): &(usize, Vec<&str>)| !toks.is_empty())
            .collect();
        let bad = |line: usize, msg: String| Error::Frame(format!("line {line}: {msg}"));

        let mut names: Vec<&str> = Vec::new();
        for (line, toks) in &lines {
            if toks[0] == "node" {
                let [_, name] = toks[..] else {
                    return Err(bad(*line, "expected `node <id>`".into()));
                };
                if names.contains(&name) {
                    return Err(bad(*line, format!("duplicate node `{name}`")));
                }
                names.push(name);
            }
        }
        if names.is_empty() {
            return Err(Error::Frame("a frame needs at least one node".into()));
        }
        let mut frame = Frame::with_nodes(names.iter().copied());
        let lookup = |line: usize, name: &str| {
            frame_node(&names, name).ok_or_else(|| bad(line, format!("unknown node `{name}`")))
        };
        let mut root = None;
        let mut edges = Vec::new();
        for (line, toks) in &lines {
            match toks[0] {
                "node" => {}
                "root" => {
                    let [_, name] = toks[..] else {
                        return Err(bad(*line, "expected `root <id>`".into()));
                    };
                    root = Some(lookup(*line, name)?);
                }
                kind @ ("R" | "S") => {
                    let [_, n, src, dst] = toks[..] else {
                        return Err(bad(*line, format!("expected `{kind} <n> <src> <dst>`")));
                    };
                    let n: usize = n
                        .parse()
                        .map_err(|_| bad(*line, format!("bad index `{n}`")))?;
                    if n > MAX_INDEX {
                        return Err(bad(*line, format!("index {n} exceeds {MAX_INDEX}")));
                    }
                    edges.push((kind == "R", n, lookup(*line, src)?, lookup(*line, dst)?));
                }
                other => return Err(bad(*line, format!("unknown directive `{other}`"))),
            }
        }
        for (is_dia, n, x, y) in edges {
            if is_dia {
                frame.add_dia(n, x, y);
            } else {
                frame.add_nab(n, x, y);
            }
        }
        if let Some(r) = root {
            frame.set_root(r);
        }
        Ok(frame)
    }
}

fn frame_node(names: &[&str], name: &str) -> Option<usize> {
    names.iter().position(|n| *n == name)
}

impl fmt::Display for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for name in self.names() {
            writeln!(f, "node {name}")?;
        }
        for (kind, rels) in [("R", self.dia_relations()), ("S", self.nab_relations())] {
            for (n, rel) in rels {
                for (x, y) in rel.pairs() {
                    writeln!(f, "{kind} {n} {} {}", self.name(x), self.name(y))?;
                }
            }
        }
        if let Some(r) = self.root() {
            writeln!(f, "root {}", self.name(r))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "# two points\nnode a\nnode b\nR 0 a b\nS 0 a a\nS 0 b b # loop\nroot a\n";
        let fr: Frame = text.parse().unwrap();
        assert_eq!(fr.len(), 2);
        assert!(fr.dia(0).unwrap().contains(0, 1));
        assert!(fr.nab(0).unwrap().contains(1, 1));
        assert_eq!(fr.root(), Some(0));
        let again: Frame = fr.to_string().parse().unwrap();
        assert_eq!(again, fr);
    }

    #[test]
    fn errors() {
        assert!(matches!("node a\nR 0 a b".parse::<Frame>(), Err(Error::Frame(m)) if m.contains("unknown node `b`")));
        assert!("node a\nnode a".parse::<Frame>().is_err());
        assert!("node a\nR x a a".parse::<Frame>().is_err());
        assert!("node a\nT 0 a a".parse::<Frame>().is_err());
        assert!("".parse::<Frame>().is_err());
        assert!("node a b".parse::<Frame>().is_err());
    }

    #[test]
    fn nodes_may_be_declared_after_use() {
        let fr: Frame = "R 0 a b\nnode a\nnode b".parse().unwrap();
        assert!(fr.dia(0).unwrap().contains(0, 1));
    }
}
