//! Newick reader and writer.
//!
//! Grammar (whitespace allowed between tokens):
//!
//! ```text
//! tree    = subtree [":" weight] ";"
//! subtree = "(" subtree { "," subtree } ")" [label] [":" weight]
//!         | [label] [":" weight]
//! label   = unquoted | "'" { char | "''" } "'"
//! ```
//!
//! Vertices are numbered in preorder with the outermost node as vertex 0
//! and designated root. Each vertex lists its parent first, then its
//! children in textual order, so the text order is the rotation system.
//! A weight on the outermost node has no edge to attach to and is ignored.

use crate::error::ParseError;
use crate::tree::{Tree, VertexId};

const SPECIAL: &[u8] = b"()[]':;,";

struct Node {
    parent: Option<VertexId>,
    children: Vec<VertexId>,
    label: String,
    weight: Option<f64>,
}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<u8> {
        self.text.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn error(&self, msg: impl Into<String>) -> ParseError {
        ParseError::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn label(&mut self) -> Result<String, ParseError> {
        self.skip_ws();
        if self.peek() == Some(b'\'') {
            let mut out = Vec::new();
            self.pos += 1;
            loop {
                match self.peek() {
                    None => return Err(self.error("unterminated quoted label")),
                    Some(b'\'') if self.text.get(self.pos + 1) == Some(&b'\'') => {
                        out.push(b'\'');
                        self.pos += 2;
                    }
                    Some(b'\'') => {
                        self.pos += 1;
                        break;
                    }
                    Some(c) => {
                        out.push(c);
                        self.pos += 1;
                    }
                }
            }
            return String::from_utf8(out).map_err(|_| self.error("label is not valid UTF-8"));
        }
        let start = self.pos;
        while self.peek().is_some_and(|c| !c.is_ascii_whitespace() && !SPECIAL.contains(&c)) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.text[start..self.pos])
            .map(str::to_owned)
            .map_err(|_| self.error("label is not valid UTF-8"))
    }

    fn weight(&mut self) -> Result<Option<f64>, ParseError> {
        self.skip_ws();
        if self.peek() != Some(b':') {
            return Ok(None);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit() || b".eE+-".contains(&c)) {
            self.pos += 1;
        }
        let token = std::str::from_utf8(&self.text[start..self.pos]).unwrap_or("");
        let weight: f64 = token.parse().map_err(|_| ParseError::Syntax {
            pos: start,
            msg: format!("expected a number after ':', found {token:?}"),
        })?;
        if !weight.is_finite() || weight <= 0.0 {
            return Err(ParseError::NonPositiveWeight { pos: start, weight });
        }
        Ok(Some(weight))
    }
}

/// Reads a Newick tree. The outermost node becomes vertex 0 and the root.
pub fn parse_newick(text: &str) -> Result<Tree, ParseError> {
    let mut p = Parser { text: text.as_bytes(), pos: 0 };
    p.skip_ws();
    if p.peek().is_none() {
        return Err(ParseError::Empty);
    }
    let mut nodes: Vec<Node> = Vec::new();
    let mut open: Vec<VertexId> = Vec::new();
    let new_node = |nodes: &mut Vec<Node>, parent: Option<VertexId>| {
        let id = nodes.len();
        nodes.push(Node { parent, children: Vec::new(), label: String::new(), weight: None });
        if let Some(q) = parent {
            nodes[q].children.push(id);
        }
        id
    };
    'subtree: loop {
        p.skip_ws();
        if p.peek() == Some(b'(') {
            p.pos += 1;
            let id = new_node(&mut nodes, open.last().copied());
            open.push(id);
            continue 'subtree;
        }
        let id = new_node(&mut nodes, open.last().copied());
        nodes[id].label = p.label()?;
        nodes[id].weight = p.weight()?;
        loop {
            p.skip_ws();
            match p.peek() {
                Some(b',') if !open.is_empty() => {
                    p.pos += 1;
                    continue 'subtree;
                }
                Some(b')') if !open.is_empty() => {
                    p.pos += 1;
                    let id = open.pop().unwrap();
                    nodes[id].label = p.label()?;
                    nodes[id].weight = p.weight()?;
                }
                None if !open.is_empty() => return Err(p.error("unexpected end of input")),
                _ if !open.is_empty() => return Err(p.error("expected ',' or ')'")),
                _ => break 'subtree,
            }
        }
    }
    p.skip_ws();
    if p.peek() != Some(b';') {
        return Err(p.error("expected ';'"));
    }
    p.pos += 1;
    p.skip_ws();
    if p.peek().is_some() {
        return Err(p.error("unexpected text after ';'"));
    }

    let neighbors: Vec<Vec<VertexId>> =
        nodes.iter().map(|n| n.parent.into_iter().chain(n.children.iter().copied()).collect()).collect();
    let mut tree = Tree::new(neighbors)?.with_root(0)?;
    if nodes.iter().any(|n| !n.label.is_empty()) {
        tree = tree.with_labels(nodes.iter().map(|n| n.label.clone()).collect())?;
    }
    let weights: Vec<_> = nodes.iter().enumerate().filter_map(|(v, n)| Some(((n.parent?, v), n.weight?))).collect();
    if !weights.is_empty() {
        tree = tree.with_weights(weights)?;
    }
    Ok(tree)
}

fn write_label(out: &mut String, label: &str) {
    let plain = !label.is_empty() && label.bytes().all(|c| !c.is_ascii_whitespace() && !SPECIAL.contains(&c));
    if plain {
        out.push_str(label);
    } else if !label.is_empty() {
        out.push('\'');
        out.push_str(&label.replace('\'', "''"));
        out.push('\'');
    }
}

/// Writes `tree` as Newick, starting from its designated root (vertex 0
/// when none is set) and following its rotation system.
pub fn emit_newick(tree: &Tree) -> String {
    let root = tree.root().unwrap_or(0);
    let rooted = tree.rooted(root);
    let mut out = String::new();
    let tail = |out: &mut String, v: VertexId| {
        if let Some(label) = tree.label(v) {
            write_label(out, label);
        }
        if let Some(w) = rooted.parent(v).and_then(|p| tree.weight(p, v)) {
            out.push(':');
            out.push_str(&w.to_string());
        }
    };
    // Each entry: vertex, its children, and how many have been written.
    let mut stack: Vec<(VertexId, Vec<VertexId>, usize)> = vec![(root, rooted.children(root).collect(), 0)];
    if stack[0].1.is_empty() {
        tail(&mut out, root);
        out.push(';');
        return out;
    }
    out.push('(');
    while let Some((v, kids, done)) = stack.last_mut() {
        if *done == kids.len() {
            let v = *v;
            stack.pop();
            out.push(')');
            tail(&mut out, v);
            continue;
        }
        if *done > 0 {
            out.push(',');
        }
        let w = kids[*done];
        *done += 1;
        let grandkids: Vec<VertexId> = rooted.children(w).collect();
        if grandkids.is_empty() {
            tail(&mut out, w);
        } else {
            out.push('(');
            stack.push((w, grandkids, 0));
        }
    }
    out.push(';');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_in_text_order() {
        let t = parse_newick("(A,B,C)R;").unwrap();
        assert_eq!(t.len(), 4);
        assert_eq!(t.root(), Some(0));
        assert_eq!(t.label(0), Some("R"));
        let kids: Vec<_> = t.neighbors(0).iter().map(|&v| t.label(v).unwrap()).collect();
        assert_eq!(kids, ["A", "B", "C"]);
    }

    #[test]
    fn weights_and_nesting() {
        let t = parse_newick("(A:2.5,(B,C))R;").unwrap();
        assert_eq!(t.len(), 5);
        assert_eq!(t.weight(0, 1), Some(2.5));
        assert_eq!(t.weight(0, 2), None);
    }

    #[test]
    fn errors() {
        assert_eq!(parse_newick("(A,B"), Err(ParseError::Syntax { pos: 4, msg: "unexpected end of input".into() }));
        assert_eq!(parse_newick("   "), Err(ParseError::Empty));
        assert!(matches!(parse_newick("(A,B);x"), Err(ParseError::Syntax { pos: 6, .. })));
        assert!(matches!(parse_newick("(A,B)"), Err(ParseError::Syntax { pos: 5, .. })));
        assert!(matches!(parse_newick("(A:0,B);"), Err(ParseError::NonPositiveWeight { pos: 3, .. })));
        assert!(matches!(parse_newick("(A:-1,B);"), Err(ParseError::NonPositiveWeight { .. })));
        assert!(matches!(parse_newick("(A:x,B);"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_newick("A,B;"), Err(ParseError::Syntax { pos: 1, .. })));
    }

    #[test]
    fn single_vertex_and_unlabeled() {
        let t = parse_newick("A;").unwrap();
        assert_eq!(t.len(), 1);
        let t = parse_newick("((,),);").unwrap();
        assert_eq!(t.len(), 5);
        assert!(t.labels().is_none());
    }

    #[test]
    fn quoted_labels_round_trip() {
        let text = "('it''s',(B,C:1.5,'x;y')'in ner':0.25)R;";
        let t = parse_newick(text).unwrap();
        assert_eq!(t.label(1), Some("it's"));
        assert_eq!(t.label(3), Some("B"));
        let again = parse_newick(&emit_newick(&t)).unwrap();
        assert_eq!(again, t);
    }

    #[test]
    fn deep_nesting_does_not_recurse() {
        let depth = 100_000;
        let text = format!("{}A{};", "(".repeat(depth), ")".repeat(depth));
        let t = parse_newick(&text).unwrap();
        assert_eq!(t.len(), depth + 1);
        assert_eq!(emit_newick(&t), text);
    }
}
