use std::fmt::Write;

use crate::algebra::ElementaryFamily;
use crate::category::{connected_groupoid, FinitePrecategory};
use crate::magma::{FiniteMagma, PairRelation};
use crate::{Budget, ElementSet, Error, Result};

struct Token<'a> {
    column: usize,
    text: &'a str,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

impl<'a> Line<'a> {
    fn keyword(&self) -> &'a str {
        self.tokens[0].text
    }

    fn error(&self, index: usize, message: impl Into<String>) -> Error {
        let column = self.tokens.get(index).map_or_else(
            || self.tokens.last().map_or(1, |t| t.column + t.text.len()),
            |t| t.column,
        );
        Error::parse(self.number, column, message)
    }

    fn expect_len(&self, len: usize, what: &str) -> Result<()> {
        if self.tokens.len() != len {
            let index = self.tokens.len().min(len);
            return Err(self.error(index, format!("expected {what}")));
        }
        Ok(())
    }

    fn number(&self, index: usize) -> Result<usize> {
        let token = self
            .tokens
            .get(index)
            .ok_or_else(|| self.error(index, "missing number"))?;
        token.text.parse().map_err(|_| {
            self.error(
                index,
                format!("expected a non-negative integer, found `{}`", token.text),
            )
        })
    }

    fn numbers(&self, from: usize) -> Result<Vec<usize>> {
        (from..self.tokens.len()).map(|i| self.number(i)).collect()
    }
}

fn lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("");
            let mut tokens = Vec::new();
            let mut start = None;
            for (col, ch) in content.char_indices().chain([(content.len(), ' ')]) {
                match (ch.is_whitespace(), start) {
                    (false, None) => start = Some(col),
                    (true, Some(s)) => {
                        tokens.push(Token {
                            column: s + 1,
                            text: &content[s..col],
                        });
                        start = None;
                    }
                    _ => {}
                }
            }
            (!tokens.is_empty()).then_some(Line { number: i + 1, tokens })
        })
        .collect()
}

fn end_of_input(text: &str) -> Error {
    Error::parse(text.lines().count().max(1), 1, "unexpected end of input")
}

fn header<'a>(ls: &'a [Line<'a>], text: &str, keywords: &[&str]) -> Result<&'a Line<'a>> {
    let first = ls.first().ok_or_else(|| end_of_input(text))?;
    if !keywords.contains(&first.keyword()) {
        return Err(first.error(0, format!("expected `{}`", keywords.join("` or `"))));
    }
    Ok(first)
}

fn magma_rows<'a>(ls: &'a [Line<'a>], order: usize, text: &str) -> Result<(Vec<Vec<usize>>, &'a [Line<'a>])> {
    if ls.len() < order {
        return Err(end_of_input(text));
    }
    let rows = ls[..order].iter().map(|l| l.numbers(0)).collect::<Result<_>>()?;
    Ok((rows, &ls[order..]))
}

/// Parses `magma <n>`, an optional `zero <i>`, then `n` rows.
pub fn parse_magma(text: &str) -> Result<FiniteMagma> {
    let ls = lines(text);
    let first = header(&ls, text, &["magma"])?;
    first.expect_len(2, "`magma <order>`")?;
    let order = first.number(1)?;
    let mut rest = &ls[1..];
    let mut zero = None;
    if let Some(l) = rest.first().filter(|l| l.keyword() == "zero") {
        l.expect_len(2, "`zero <index>`")?;
        zero = Some(l.number(1)?);
        rest = &rest[1..];
    }
    let (rows, rest) = magma_rows(rest, order, text)?;
    if let Some(extra) = rest.first() {
        return Err(extra.error(0, "unexpected line after the table"));
    }
    FiniteMagma::validate(order, rows, zero)
}

pub fn print_magma(m: &FiniteMagma) -> String {
    let mut out = format!("magma {}\n", m.order());
    if let Some(z) = m.zero() {
        let _ = writeln!(out, "zero {z}");
    }
    for a in 0..m.order() {
        let row: Vec<String> = m.row(a).iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

/// Parses either `category <objects> <morphisms>` with `m` and `c` lines,
/// or `groupoid <objects> <group order>` followed by a group table, which
/// denotes the connected groupoid with that vertex group.
pub fn parse_category(text: &str) -> Result<FinitePrecategory> {
    let ls = lines(text);
    let first = header(&ls, text, &["category", "groupoid"])?;
    first.expect_len(3, "two counts")?;
    let (a, b) = (first.number(1)?, first.number(2)?);
    if first.keyword() == "groupoid" {
        let (rows, rest) = magma_rows(&ls[1..], b, text)?;
        if let Some(extra) = rest.first() {
            return Err(extra.error(0, "unexpected line after the group table"));
        }
        let group = FiniteMagma::validate(b, rows, None)?;
        return connected_groupoid(&group, a, &Budget::default());
    }
    let (objects, count) = (a, b);
    let mut morphisms = Vec::new();
    let mut identities = Vec::new();
    let mut triples = Vec::new();
    let mut seen = vec![false; count * count];
    for l in &ls[1..] {
        match l.keyword() {
            "m" => {
                let is_id = l.tokens.len() == 4 && l.tokens[3].text == "id";
                if l.tokens.len() != 3 && !is_id {
                    return Err(l.error(3.min(l.tokens.len()), "expected `m <dom> <cod> [id]`"));
                }
                let (d, c) = (l.number(1)?, l.number(2)?);
                if d >= objects || c >= objects {
                    return Err(l.error(1, format!("object out of range 0..{objects}")));
                }
                if morphisms.len() == count {
                    return Err(l.error(0, format!("more than {count} morphisms")));
                }
                if is_id {
                    identities.push((d, morphisms.len()));
                }
                morphisms.push((d, c));
            }
            "c" => {
                l.expect_len(4, "`c <s> <t> <s∘t>`")?;
                let (s, t, st) = (l.number(1)?, l.number(2)?, l.number(3)?);
                if s >= count || t >= count {
                    return Err(l.error(1, format!("morphism out of range 0..{count}")));
                }
                if std::mem::replace(&mut seen[s * count + t], true) {
                    return Err(l.error(0, format!("composite of ({s}, {t}) given twice")));
                }
                triples.push((s, t, st));
            }
            _ => return Err(l.error(0, "expected `m` or `c`")),
        }
    }
    if morphisms.len() != count {
        return Err(end_of_input(text));
    }
    for s in 0..count {
        for t in 0..count {
            if morphisms[s].0 == morphisms[t].1 && !seen[s * count + t] {
                return Err(Error::parse(
                    text.lines().count().max(1),
                    1,
                    format!("missing composite for composable pair ({s}, {t})"),
                ));
            }
        }
    }
    FinitePrecategory::validate(objects, morphisms, &triples, &identities)
}

pub fn print_category(c: &FinitePrecategory) -> String {
    let mut out = format!("category {} {}\n", c.object_count(), c.morphism_count());
    for s in 0..c.morphism_count() {
        let id = if c.is_identity(s) { " id" } else { "" };
        let _ = writeln!(out, "m {} {}{id}", c.dom(s), c.cod(s));
    }
    for (s, t, st) in c.composable_pairs() {
        let _ = writeln!(out, "c {s} {t} {st}");
    }
    out
}

/// `relation <left> <right>` followed by `p <g> <h>` lines.
pub fn parse_relation(text: &str) -> Result<PairRelation> {
    let ls = lines(text);
    let first = header(&ls, text, &["relation"])?;
    first.expect_len(3, "`relation <left> <right>`")?;
    let (left, right) = (first.number(1)?, first.number(2)?);
    let mut rel = PairRelation::empty(left, right);
    for l in &ls[1..] {
        if l.keyword() != "p" {
            return Err(l.error(0, "expected `p`"));
        }
        l.expect_len(3, "`p <g> <h>`")?;
        let (g, h) = (l.number(1)?, l.number(2)?);
        if g >= left || h >= right {
            return Err(l.error(1, "pair out of range"));
        }
        rel.insert(g, h);
    }
    Ok(rel)
}

pub fn print_relation(r: &PairRelation) -> String {
    let mut out = format!("relation {} {}\n", r.left_size(), r.right_size());
    for (g, h) in r.pairs() {
        let _ = writeln!(out, "p {g} {h}");
    }
    out
}

/// `family <basis> <targets>` followed by `w <h> <g>…` lines; target
/// elements without a line have an empty part.
pub fn parse_family(text: &str) -> Result<ElementaryFamily> {
    let ls = lines(text);
    let first = header(&ls, text, &["family"])?;
    first.expect_len(3, "`family <basis> <targets>`")?;
    let (basis, targets) = (first.number(1)?, first.number(2)?);
    let mut parts = vec![ElementSet::empty(basis); targets];
    let mut seen = vec![false; targets];
    for l in &ls[1..] {
        if l.keyword() != "w" {
            return Err(l.error(0, "expected `w`"));
        }
        let h = l.number(1)?;
        if h >= targets {
            return Err(l.error(1, format!("target element out of range 0..{targets}")));
        }
        if std::mem::replace(&mut seen[h], true) {
            return Err(l.error(1, format!("part {h} given twice")));
        }
        for (i, g) in l.numbers(2)?.into_iter().enumerate() {
            if g >= basis {
                return Err(l.error(i + 2, format!("basis index out of range 0..{basis}")));
            }
            parts[h].insert(g);
        }
    }
    ElementaryFamily::new(basis, parts)
}

pub fn print_family(w: &ElementaryFamily) -> String {
    let mut out = format!("family {} {}\n", w.basis_size(), w.target_size());
    for (h, part) in w.parts().iter().enumerate() {
        let _ = write!(out, "w {h}");
        for g in part.iter() {
            let _ = write!(out, " {g}");
        }
        out.push('\n');
    }
    out
}

/// Any of the text formats, recognised by its first keyword.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Magma(FiniteMagma),
    Category(FinitePrecategory),
    Relation(PairRelation),
    Family(ElementaryFamily),
}

impl Document {
    pub fn parse(text: &str) -> Result<Self> {
        let ls = lines(text);
        let first = ls.first().ok_or_else(|| end_of_input(text))?;
        match first.keyword() {
            "magma" => parse_magma(text).map(Document::Magma),
            "category" | "groupoid" => parse_category(text).map(Document::Category),
            "relation" => parse_relation(text).map(Document::Relation),
            "family" => parse_family(text).map(Document::Family),
            _ => Err(first.error(0, "unknown document kind")),
        }
    }

    pub fn print(&self) -> String {
        match self {
            Document::Magma(m) => print_magma(m),
            Document::Category(c) => print_category(c),
            Document::Relation(r) => print_relation(r),
            Document::Family(w) => print_family(w),
        }
    }
}
