//! Ordered labeled trees and their text encodings.
//!
//! The bracket encoding writes a node as `{label child*}`, so `{a{b}{c}}` is a
//! root `a` with children `b` and `c` in that order. Inside labels the
//! characters `{`, `}` and `\` are escaped with a backslash.

use std::fmt;

use crate::error::{Error, Result};

/// Node label. Labels compare by exact string equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label(String);

impl Label {
    pub fn new(text: impl Into<String>) -> Self {
        Label(text.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl From<&str> for Label {
    fn from(s: &str) -> Self {
        Label(s.to_owned())
    }
}

impl From<String> for Label {
    fn from(s: String) -> Self {
        Label(s)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A rooted, ordered, labeled tree. Sibling order is significant.
#[derive(Debug)]
pub struct Tree {
    pub label: Label,
    pub children: Vec<Tree>,
}

impl Tree {
    pub fn leaf(label: impl Into<Label>) -> Self {
        Tree {
            label: label.into(),
            children: Vec::new(),
        }
    }

    pub fn node(label: impl Into<Label>, children: Vec<Tree>) -> Self {
        Tree {
            label: label.into(),
            children,
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        let mut count = 0;
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            count += 1;
            stack.extend(t.children.iter());
        }
        count
    }

    /// Length of the longest root-to-leaf path, counted in edges.
    pub fn depth(&self) -> usize {
        let mut deepest = 0;
        let mut stack = vec![(self, 0usize)];
        while let Some((t, d)) = stack.pop() {
            deepest = deepest.max(d);
            stack.extend(t.children.iter().map(|c| (c, d + 1)));
        }
        deepest
    }

    /// Left-right mirror image.
    pub fn mirrored(&self) -> Tree {
        let mut out = self.clone();
        let mut stack = vec![&mut out];
        while let Some(t) = stack.pop() {
            t.children.reverse();
            stack.extend(t.children.iter_mut());
        }
        out
    }
}

// Iterative so that very deep trees (long chains) cannot overflow the stack.
impl Drop for Tree {
    fn drop(&mut self) {
        let mut stack = std::mem::take(&mut self.children);
        while let Some(mut t) = stack.pop() {
            stack.append(&mut t.children);
        }
    }
}

impl Clone for Tree {
    fn clone(&self) -> Self {
        // Postorder rebuild: each node pops its children's copies.
        let mut done: Vec<Tree> = Vec::new();
        let mut stack = vec![(self, false)];
        while let Some((t, expanded)) = stack.pop() {
            if expanded {
                let children = done.split_off(done.len() - t.children.len());
                done.push(Tree::node(t.label.clone(), children));
            } else {
                stack.push((t, true));
                stack.extend(t.children.iter().rev().map(|c| (c, false)));
            }
        }
        done.pop().expect("one root")
    }
}

impl PartialEq for Tree {
    fn eq(&self, other: &Self) -> bool {
        let mut stack = vec![(self, other)];
        while let Some((a, b)) = stack.pop() {
            if a.label != b.label || a.children.len() != b.children.len() {
                return false;
            }
            stack.extend(a.children.iter().zip(b.children.iter()));
        }
        true
    }
}

impl Eq for Tree {}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_bracket(self))
    }
}

impl std::str::FromStr for Tree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_bracket(s)
    }
}

/// Parses a single bracket-encoded tree.
///
/// Whitespace is allowed before the root, after it, and between sibling
/// terms; inside a label it is kept verbatim.
pub fn parse_bracket(text: &str) -> Result<Tree> {
    let bytes = text.as_bytes();
    let mut pos = skip_ws(bytes, 0);
    if pos >= bytes.len() {
        return Err(Error::parse(pos, "empty input"));
    }
    if bytes[pos] != b'{' {
        return Err(Error::parse(pos, "expected '{'"));
    }

    // Open nodes, innermost last.
    let mut open: Vec<Tree> = Vec::new();
    let mut root = None;
    while root.is_none() {
        match bytes.get(pos) {
            None => return Err(Error::parse(pos, "unbalanced braces: missing '}'")),
            Some(b'{') => {
                let (label, next) = read_label(text, pos + 1)?;
                open.push(Tree::leaf(label));
                pos = next;
            }
            Some(b'}') => {
                let done = open
                    .pop()
                    .ok_or_else(|| Error::parse(pos, "unbalanced braces: unexpected '}'"))?;
                match open.last_mut() {
                    Some(parent) => parent.children.push(done),
                    None => root = Some(done),
                }
                pos += 1;
                if root.is_none() {
                    pos = skip_ws(bytes, pos);
                }
            }
            Some(_) => return Err(Error::parse(pos, "expected '{' or '}'")),
        }
    }

    let end = skip_ws(bytes, pos);
    if end != bytes.len() {
        return Err(Error::parse(end, "trailing characters after tree"));
    }
    Ok(root.expect("loop exits with a root"))
}

fn skip_ws(bytes: &[u8], mut pos: usize) -> usize {
    while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
        pos += 1;
    }
    pos
}

/// Reads an escaped label starting at `start`; returns it with the offset of
/// the first unescaped brace that follows.
fn read_label(text: &str, start: usize) -> Result<(String, usize)> {
    let mut label = String::new();
    let mut chars = text[start..].char_indices();
    while let Some((i, c)) = chars.next() {
        match c {
            '{' | '}' => {
                if label.is_empty() {
                    return Err(Error::parse(start + i, "empty label"));
                }
                return Ok((label, start + i));
            }
            '\\' => match chars.next() {
                Some((_, e @ ('{' | '}' | '\\'))) => label.push(e),
                Some((j, _)) => return Err(Error::parse(start + j, "invalid escape sequence")),
                None => break,
            },
            _ => label.push(c),
        }
    }
    Err(Error::parse(
        text.len(),
        "unbalanced braces: input ends inside a label",
    ))
}

/// Canonical bracket text for `t`.
pub fn serialize_bracket(t: &Tree) -> String {
    enum Step<'a> {
        Open(&'a Tree),
        Close,
    }
    let mut out = String::new();
    let mut stack = vec![Step::Open(t)];
    while let Some(step) = stack.pop() {
        match step {
            Step::Open(node) => {
                out.push('{');
                for c in node.label.as_str().chars() {
                    if matches!(c, '{' | '}' | '\\') {
                        out.push('\\');
                    }
                    out.push(c);
                }
                stack.push(Step::Close);
                stack.extend(node.children.iter().rev().map(Step::Open));
            }
            Step::Close => out.push('}'),
        }
    }
    out
}

/// Builds the element tree of an XML document. Labels are element names
/// (including any namespace prefix); attributes, text, comments and
/// processing instructions are dropped.
pub fn ingest_xml(text: &str) -> Result<Tree> {
    let doc = roxmltree::Document::parse(text).map_err(|e| Error::Xml(e.to_string()))?;

    fn tag(node: roxmltree::Node<'_, '_>) -> String {
        let name = node.tag_name().name();
        match node.lookup_prefix(node.tag_name().namespace().unwrap_or_default()) {
            Some(prefix) if !prefix.is_empty() => format!("{prefix}:{name}"),
            _ => name.to_owned(),
        }
    }

    let root = doc.root_element();
    let mut out = Tree::leaf(tag(root));
    // (xml node, path of child indices from the output root)
    let mut stack = vec![(root, Vec::<usize>::new())];
    while let Some((node, path)) = stack.pop() {
        let target = path.iter().fold(&mut out, |t, &i| &mut t.children[i]);
        let base = target.children.len();
        let elements: Vec<_> = node.children().filter(|c| c.is_element()).collect();
        target
            .children
            .extend(elements.iter().map(|&c| Tree::leaf(tag(c))));
        for (i, &child) in elements.iter().enumerate() {
            let mut child_path = path.clone();
            child_path.push(base + i);
            stack.push((child, child_path));
        }
    }
    Ok(out)
}
