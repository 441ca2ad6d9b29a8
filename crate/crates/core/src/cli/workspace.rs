//! The `.lef` workspace format.
//!
//! ```text
//! # comments run to the end of the line
//! complex C3
//!   vertices 0 1 2
//!   facet 0 1
//!   facet 1 2
//!   facet 0 2
//! end
//!
//! complex T
//!   product C3 C3          # staircase product, labels "a:b"
//! end
//!
//! pair cyl
//!   total T                # or: product P Q
//!   sub boundary           # or: sub empty | sub complex NAME | sub facet a b ...
//!   seed 0:0 0:1 1:1       # optional orientation seed
//! end
//!
//! map f : C3 -> C3         # source and target name pairs or complexes
//!   0 -> 1
//!   1 -> 2
//!   2 -> 0
//! end
//!
//! system sys
//!   state cyl              # oriented manifold pair (or complex)
//!   input C3
//!   map g                  # map on the product of state and input
//!   refine fine via s      # optional: g lives on a subdivision
//! end
//! ```
//!
//! Declarations must precede their uses. Complexes named in `sub complex`,
//! in `--from` flags and the like are matched into the host by vertex label.

use std::fmt::{self, Write as _};

use indexmap::IndexMap;
use thiserror::Error;

use crate::control::{ControlError, DiscreteSystem};
use crate::products::{OrientationError, OrientedManifold};
use crate::simplicial::{ProductPair, Simplex, SimplicialComplex, SimplicialMap, SimplicialPair};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WorkspaceDocument {
    pub declarations: Vec<Declaration>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Declaration {
    Complex(ComplexDecl),
    Pair(PairDecl),
    Map(MapDecl),
    System(SystemDecl),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexDecl {
    pub name: String,
    pub body: ComplexBody,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComplexBody {
    Explicit {
        vertices: Vec<String>,
        facets: Vec<Vec<String>>,
    },
    Product(String, String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairDecl {
    pub name: String,
    pub body: PairBody,
    pub seed: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairBody {
    Of { total: String, sub: SubSpec },
    Product(String, String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubSpec {
    Empty,
    Boundary,
    Complex(String),
    Facets(Vec<Vec<String>>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapDecl {
    pub name: String,
    pub source: String,
    pub target: String,
    pub images: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemDecl {
    pub name: String,
    pub state: String,
    pub input: String,
    pub map: String,
    pub refine: Option<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("undeclared {kind} `{name}`")]
    Dangling { kind: &'static str, name: String },
    #[error("duplicate {kind} name `{name}`")]
    Duplicate { kind: &'static str, name: String },
    #[error("invalid {kind} `{name}`: {reason}")]
    Invalid {
        kind: &'static str,
        name: String,
        reason: String,
    },
}

#[derive(Debug, Clone)]
pub struct PairEntry {
    pub pair: SimplicialPair,
    pub seed: Option<Simplex>,
}

#[derive(Debug, Clone)]
pub struct MapEntry {
    pub map: SimplicialMap,
    pub source: String,
    pub target: String,
}

/// A parsed document with every declaration resolved to library objects.
#[derive(Debug, Clone)]
pub struct Workspace {
    document: WorkspaceDocument,
    complexes: IndexMap<String, SimplicialComplex>,
    pairs: IndexMap<String, PairEntry>,
    maps: IndexMap<String, MapEntry>,
    systems: IndexMap<String, DiscreteSystem>,
}

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    column: usize,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

impl Line<'_> {
    fn error(&self, token: usize, kind: ParseErrorKind) -> ParseError {
        let column = self.tokens.get(token).map_or_else(
            || self.tokens.last().map_or(1, |t| t.column + t.text.chars().count()),
            |t| t.column,
        );
        ParseError {
            line: self.number,
            column,
            kind,
        }
    }

    fn syntax(&self, token: usize, message: impl Into<String>) -> ParseError {
        self.error(token, ParseErrorKind::Syntax(message.into()))
    }

    fn keyword(&self) -> &str {
        self.tokens[0].text
    }

    fn words(&self, from: usize) -> Vec<String> {
        self.tokens[from..].iter().map(|t| t.text.to_string()).collect()
    }

    fn expect_len(&self, n: usize, usage: &str) -> Result<(), ParseError> {
        if self.tokens.len() != n {
            return Err(self.syntax(n.min(self.tokens.len()), format!("expected `{usage}`")));
        }
        Ok(())
    }
}

fn tokenize(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("");
            let mut tokens = Vec::new();
            let mut start: Option<usize> = None;
            let mut byte_start = 0;
            for (col, (byte, ch)) in content.char_indices().enumerate() {
                if ch.is_whitespace() {
                    if let Some(c) = start.take() {
                        tokens.push(Token {
                            text: &content[byte_start..byte],
                            column: c + 1,
                        });
                    }
                } else if start.is_none() {
                    start = Some(col);
                    byte_start = byte;
                }
            }
            if let Some(c) = start {
                tokens.push(Token {
                    text: &content[byte_start..],
                    column: c + 1,
                });
            }
            (!tokens.is_empty()).then_some(Line { number: i + 1, tokens })
        })
        .collect()
}

fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.'))
}

fn is_label(s: &str) -> bool {
    s != "->" && !s.is_empty()
}

struct Parser<'a> {
    lines: Vec<Line<'a>>,
    at: usize,
    ws: Workspace,
}

/// Parses and resolves a workspace; no partial result on failure.
pub fn parse_workspace(text: &str) -> Result<Workspace, ParseError> {
    let mut parser = Parser {
        lines: tokenize(text),
        at: 0,
        ws: Workspace {
            document: WorkspaceDocument {
                declarations: Vec::new(),
            },
            complexes: IndexMap::new(),
            pairs: IndexMap::new(),
            maps: IndexMap::new(),
            systems: IndexMap::new(),
        },
    };
    while parser.at < parser.lines.len() {
        parser.declaration()?;
    }
    Ok(parser.ws)
}

impl<'a> Parser<'a> {
    fn declaration(&mut self) -> Result<(), ParseError> {
        let header = &self.lines[self.at];
        let kind = header.keyword().to_string();
        let name = match header.tokens.get(1) {
            Some(t) if is_name(t.text) => t.text.to_string(),
            Some(_) => return Err(header.syntax(1, "expected a name (letters, digits, `_`, `-`, `.`)")),
            None => return Err(header.syntax(1, format!("expected a name after `{kind}`"))),
        };
        let header_index = self.at;
        self.at += 1;
        let body = self.block(header_index)?;
        match kind.as_str() {
            "complex" => self.complex(header_index, name, &body),
            "pair" => self.pair(header_index, name, &body),
            "map" => self.map(header_index, name, &body),
            "system" => self.system(header_index, name, &body),
            other => Err(self.lines[header_index].syntax(
                0,
                format!("unknown declaration `{other}` (expected complex, pair, map or system)"),
            )),
        }
    }

    /// Indices of the body lines up to the matching `end`.
    fn block(&mut self, header: usize) -> Result<Vec<usize>, ParseError> {
        let mut body = Vec::new();
        while self.at < self.lines.len() {
            let line = &self.lines[self.at];
            self.at += 1;
            if line.keyword() == "end" {
                line.expect_len(1, "end")?;
                return Ok(body);
            }
            let nested = match line.keyword() {
                "complex" | "pair" | "system" => true,
                // `map NAME` is a system field; a map declaration has a signature.
                "map" => line.tokens.len() > 2,
                _ => false,
            };
            if nested {
                return Err(line.syntax(0, "declaration inside a block; missing `end`?"));
            }
            body.push(self.at - 1);
        }
        Err(self.lines[header].syntax(0, "block is not closed by `end`"))
    }

    fn check_unique(&self, header: usize, kind: &'static str, name: &str, exists: bool) -> Result<(), ParseError> {
        if exists {
            return Err(self.lines[header].error(
                1,
                ParseErrorKind::Duplicate {
                    kind,
                    name: name.to_string(),
                },
            ));
        }
        Ok(())
    }

    fn invalid(
        &self,
        line: usize,
        token: usize,
        kind: &'static str,
        name: &str,
        reason: impl fmt::Display,
    ) -> ParseError {
        self.lines[line].error(
            token,
            ParseErrorKind::Invalid {
                kind,
                name: name.to_string(),
                reason: reason.to_string(),
            },
        )
    }

    fn dangling(&self, line: usize, token: usize, kind: &'static str) -> ParseError {
        self.lines[line].error(
            token,
            ParseErrorKind::Dangling {
                kind,
                name: self.lines[line].tokens[token].text.to_string(),
            },
        )
    }

    fn complex_ref(&self, line: usize, token: usize) -> Result<SimplicialComplex, ParseError> {
        let name = self.lines[line].tokens[token].text;
        self.ws
            .complexes
            .get(name)
            .cloned()
            .ok_or_else(|| self.dangling(line, token, "complex"))
    }

    /// A pair, or a complex read as an absolute pair.
    fn pair_ref(&self, line: usize, token: usize) -> Result<SimplicialPair, ParseError> {
        let name = self.lines[line].tokens[token].text;
        if let Some(p) = self.ws.pairs.get(name) {
            return Ok(p.pair.clone());
        }
        self.ws
            .complexes
            .get(name)
            .map(|c| SimplicialPair::absolute(c.clone()))
            .ok_or_else(|| self.dangling(line, token, "pair or complex"))
    }

    fn complex(&mut self, header: usize, name: String, body: &[usize]) -> Result<(), ParseError> {
        self.lines[header].expect_len(2, "complex NAME")?;
        self.check_unique(header, "complex", &name, self.ws.complexes.contains_key(&name))?;
        let mut vertices: Option<Vec<String>> = None;
        let mut facets: Vec<(usize, Vec<String>)> = Vec::new();
        let mut product: Option<usize> = None;
        for &i in body {
            let line = &self.lines[i];
            match line.keyword() {
                "vertices" => {
                    if vertices.is_some() {
                        return Err(line.syntax(0, "`vertices` given twice"));
                    }
                    if let Some(bad) = line.tokens.iter().skip(1).position(|t| !is_label(t.text)) {
                        return Err(line.syntax(bad + 1, "invalid vertex label"));
                    }
                    vertices = Some(line.words(1));
                }
                "facet" => {
                    if line.tokens.len() < 2 {
                        return Err(line.syntax(1, "a facet needs at least one vertex"));
                    }
                    facets.push((i, line.words(1)));
                }
                "product" => {
                    line.expect_len(3, "product A B")?;
                    if product.is_some() {
                        return Err(line.syntax(0, "`product` given twice"));
                    }
                    product = Some(i);
                }
                other => {
                    return Err(line.syntax(
                        0,
                        format!("unknown complex field `{other}` (expected vertices, facet or product)"),
                    ))
                }
            }
        }
        let (decl_body, complex) = if let Some(i) = product {
            if vertices.is_some() || !facets.is_empty() {
                return Err(self.lines[i].syntax(0, "`product` cannot be combined with vertices or facets"));
            }
            let a = self.complex_ref(i, 1)?;
            let b = self.complex_ref(i, 2)?;
            let p = ProductPair::new(SimplicialPair::absolute(a), SimplicialPair::absolute(b));
            let words = self.lines[i].words(1);
            (
                ComplexBody::Product(words[0].clone(), words[1].clone()),
                p.total().clone(),
            )
        } else {
            let mut labels = vertices.clone().unwrap_or_default();
            if vertices.is_none() {
                for (_, f) in &facets {
                    for v in f {
                        if !labels.contains(v) {
                            labels.push(v.clone());
                        }
                    }
                }
            }
            let mut index_facets: Vec<Vec<usize>> = (0..labels.len()).map(|v| vec![v]).collect();
            for (i, f) in &facets {
                let mut idx = Vec::with_capacity(f.len());
                for (t, v) in f.iter().enumerate() {
                    match labels.iter().position(|l| l == v) {
                        Some(p) => idx.push(p),
                        None => return Err(self.lines[*i].syntax(t + 1, format!("vertex `{v}` is not declared"))),
                    }
                }
                index_facets.push(idx);
            }
            let complex = SimplicialComplex::from_facets(labels.clone(), index_facets)
                .map_err(|e| self.invalid(header, 1, "complex", &name, e))?;
            (
                ComplexBody::Explicit {
                    vertices: labels,
                    facets: facets.into_iter().map(|(_, f)| f).collect(),
                },
                complex,
            )
        };
        self.ws.complexes.insert(name.clone(), complex);
        self.ws
            .document
            .declarations
            .push(Declaration::Complex(ComplexDecl { name, body: decl_body }));
        Ok(())
    }

    fn pair(&mut self, header: usize, name: String, body: &[usize]) -> Result<(), ParseError> {
        self.lines[header].expect_len(2, "pair NAME")?;
        self.check_unique(header, "pair", &name, self.ws.pairs.contains_key(&name))?;
        let mut total: Option<usize> = None;
        let mut product: Option<usize> = None;
        let mut sub: Option<(usize, SubSpec)> = None;
        let mut sub_facets: Vec<(usize, Vec<String>)> = Vec::new();
        let mut seed: Option<(usize, Vec<String>)> = None;
        for &i in body {
            let line = &self.lines[i];
            match line.keyword() {
                "total" => {
                    line.expect_len(2, "total COMPLEX")?;
                    if total.replace(i).is_some() {
                        return Err(line.syntax(0, "`total` given twice"));
                    }
                }
                "product" => {
                    line.expect_len(3, "product P Q")?;
                    if product.replace(i).is_some() {
                        return Err(line.syntax(0, "`product` given twice"));
                    }
                }
                "sub" => {
                    let spec = match line.tokens.get(1).map(|t| t.text) {
                        Some("empty") => {
                            line.expect_len(2, "sub empty")?;
                            SubSpec::Empty
                        }
                        Some("boundary") => {
                            line.expect_len(2, "sub boundary")?;
                            SubSpec::Boundary
                        }
                        Some("complex") => {
                            line.expect_len(3, "sub complex NAME")?;
                            SubSpec::Complex(line.tokens[2].text.to_string())
                        }
                        Some("facet") => {
                            if line.tokens.len() < 3 {
                                return Err(line.syntax(2, "a facet needs at least one vertex"));
                            }
                            sub_facets.push((i, line.words(2)));
                            continue;
                        }
                        _ => {
                            return Err(line.syntax(
                                1,
                                "expected `sub empty`, `sub boundary`, `sub complex NAME` or `sub facet ...`",
                            ))
                        }
                    };
                    if sub.replace((i, spec)).is_some() {
                        return Err(line.syntax(0, "subcomplex given twice"));
                    }
                }
                "seed" => {
                    if line.tokens.len() < 2 {
                        return Err(line.syntax(1, "a seed needs at least one vertex"));
                    }
                    if seed.replace((i, line.words(1))).is_some() {
                        return Err(line.syntax(0, "`seed` given twice"));
                    }
                }
                other => {
                    return Err(line.syntax(
                        0,
                        format!("unknown pair field `{other}` (expected total, product, sub or seed)"),
                    ))
                }
            }
        }
        if let (Some((i, _)), false) = (&sub, sub_facets.is_empty()) {
            return Err(self.lines[*i].syntax(0, "`sub facet` lines cannot be combined with another `sub`"));
        }
        let (decl_body, pair) = match (total, product) {
            (Some(_), Some(i)) => return Err(self.lines[i].syntax(0, "`product` cannot be combined with `total`")),
            (None, None) => return Err(self.lines[header].syntax(0, "pair needs `total` or `product`")),
            (None, Some(i)) => {
                if let Some((j, _)) = sub
                    .as_ref()
                    .map(|(j, s)| (*j, s))
                    .or(sub_facets.first().map(|(j, _)| (*j, &SubSpec::Empty)))
                {
                    return Err(self.lines[j].syntax(0, "a product pair takes its subcomplex from the factors"));
                }
                let p = ProductPair::new(self.pair_ref(i, 1)?, self.pair_ref(i, 2)?);
                let words = self.lines[i].words(1);
                (PairBody::Product(words[0].clone(), words[1].clone()), p.pair().clone())
            }
            (Some(i), None) => {
                let total = self.complex_ref(i, 1)?;
                let spec = if !sub_facets.is_empty() {
                    SubSpec::Facets(sub_facets.iter().map(|(_, f)| f.clone()).collect())
                } else {
                    sub.as_ref().map_or(SubSpec::Empty, |(_, s)| s.clone())
                };
                let sub_complex = match &spec {
                    SubSpec::Empty => SimplicialComplex::empty(total.labels().to_vec()),
                    SubSpec::Boundary => total.boundary_complex(),
                    SubSpec::Complex(_) => {
                        let j = sub.as_ref().expect("sub line").0;
                        let c = self.complex_ref(j, 2)?;
                        embed(&c, &total).map_err(|e| self.invalid(j, 2, "pair", &name, e))?
                    }
                    SubSpec::Facets(_) => {
                        let mut facets = Vec::new();
                        for (j, f) in &sub_facets {
                            let mut idx = Vec::new();
                            for (t, v) in f.iter().enumerate() {
                                match total.label_index(v) {
                                    Some(p) => idx.push(p),
                                    None => {
                                        return Err(self.lines[*j]
                                            .syntax(t + 2, format!("vertex `{v}` is not in the total complex")))
                                    }
                                }
                            }
                            facets.push(idx);
                        }
                        SimplicialComplex::from_facets(total.labels().to_vec(), facets)
                            .map_err(|e| self.invalid(header, 1, "pair", &name, e))?
                    }
                };
                let pair =
                    SimplicialPair::new(total, sub_complex).map_err(|e| self.invalid(header, 1, "pair", &name, e))?;
                let total_name = self.lines[i].tokens[1].text.to_string();
                (
                    PairBody::Of {
                        total: total_name,
                        sub: spec,
                    },
                    pair,
                )
            }
        };
        let seed_simplex = match &seed {
            None => None,
            Some((j, words)) => {
                let mut idx = Vec::new();
                for (t, v) in words.iter().enumerate() {
                    match pair.total().label_index(v) {
                        Some(p) => idx.push(p),
                        None => return Err(self.lines[*j].syntax(t + 1, format!("vertex `{v}` is not in the pair"))),
                    }
                }
                let s = Simplex::from_unsorted(idx);
                if s.vertices().len() != words.len() || !pair.total().contains(&s) {
                    return Err(self.invalid(*j, 0, "pair", &name, "seed is not a simplex of the total complex"));
                }
                Some(s)
            }
        };
        self.ws.pairs.insert(
            name.clone(),
            PairEntry {
                pair,
                seed: seed_simplex,
            },
        );
        self.ws.document.declarations.push(Declaration::Pair(PairDecl {
            name,
            body: decl_body,
            seed: seed.map(|(_, w)| w),
        }));
        Ok(())
    }

    fn map(&mut self, header: usize, name: String, body: &[usize]) -> Result<(), ParseError> {
        let h = &self.lines[header];
        if h.tokens.len() != 6 || h.tokens[2].text != ":" || h.tokens[4].text != "->" {
            return Err(h.syntax(h.tokens.len().min(2), "expected `map NAME : SOURCE -> TARGET`"));
        }
        self.check_unique(header, "map", &name, self.ws.maps.contains_key(&name))?;
        let source = self.pair_ref(header, 3)?;
        let target = self.pair_ref(header, 5)?;
        let mut assignment: Vec<Option<usize>> = vec![None; source.total().labels().len()];
        let mut images = Vec::new();
        for &i in body {
            let line = &self.lines[i];
            if line.tokens.len() != 3 || line.tokens[1].text != "->" {
                return Err(line.syntax(line.tokens.len().min(1), "expected `VERTEX -> VERTEX`"));
            }
            let (a, b) = (line.tokens[0].text, line.tokens[2].text);
            let Some(ia) = source.total().label_index(a) else {
                return Err(line.syntax(0, format!("vertex `{a}` is not in the source")));
            };
            let Some(ib) = target.total().label_index(b) else {
                return Err(line.syntax(2, format!("vertex `{b}` is not in the target")));
            };
            if assignment[ia].replace(ib).is_some() {
                return Err(line.syntax(0, format!("vertex `{a}` is assigned twice")));
            }
            images.push((a.to_string(), b.to_string()));
        }
        if let Some(v) = source.total().vertices().into_iter().find(|&v| assignment[v].is_none()) {
            return Err(self.invalid(
                header,
                1,
                "map",
                &name,
                format!("source vertex `{}` has no image", source.total().label(v)),
            ));
        }
        let map = SimplicialMap::unchecked_pairs(source, target, assignment)
            .map_err(|e| self.invalid(header, 1, "map", &name, e))?;
        let words = h.words(0);
        self.ws.maps.insert(
            name.clone(),
            MapEntry {
                map,
                source: words[3].clone(),
                target: words[5].clone(),
            },
        );
        self.ws.document.declarations.push(Declaration::Map(MapDecl {
            name,
            source: words[3].clone(),
            target: words[5].clone(),
            images,
        }));
        Ok(())
    }

    fn manifold_ref(&self, line: usize, token: usize) -> Result<OrientedManifold, ParseError> {
        let name = self.lines[line].tokens[token].text;
        let (pair, seed) = match self.ws.pairs.get(name) {
            Some(p) => (p.pair.clone(), p.seed.clone()),
            None => (self.pair_ref(line, token)?, None),
        };
        OrientedManifold::orient(&pair, seed.as_ref()).map_err(|e| self.invalid(line, token, "manifold", name, e))
    }

    fn system(&mut self, header: usize, name: String, body: &[usize]) -> Result<(), ParseError> {
        self.lines[header].expect_len(2, "system NAME")?;
        self.check_unique(header, "system", &name, self.ws.systems.contains_key(&name))?;
        let mut fields: [Option<usize>; 4] = [None; 4];
        for &i in body {
            let line = &self.lines[i];
            let (slot, usage) = match line.keyword() {
                "state" => (0, "state PAIR"),
                "input" => (1, "input COMPLEX"),
                "map" => (2, "map MAP"),
                "refine" => (3, "refine PAIR via MAP"),
                other => {
                    return Err(line.syntax(
                        0,
                        format!("unknown system field `{other}` (expected state, input, map or refine)"),
                    ))
                }
            };
            if slot == 3 {
                if line.tokens.len() != 4 || line.tokens[2].text != "via" {
                    return Err(line.syntax(line.tokens.len().min(2), "expected `refine PAIR via MAP`"));
                }
            } else {
                line.expect_len(2, usage)?;
            }
            if fields[slot].replace(i).is_some() {
                return Err(line.syntax(0, format!("`{}` given twice", line.keyword())));
            }
        }
        let require = |slot: usize, field: &str| {
            fields[slot].ok_or_else(|| self.lines[header].syntax(0, format!("system needs `{field}`")))
        };
        let (si, ii, mi) = (require(0, "state")?, require(1, "input")?, require(2, "map")?);
        let state = self.manifold_ref(si, 1)?;
        let input = self.pair_ref(ii, 1)?.total().clone();
        let map_name = self.lines[mi].tokens[1].text;
        let map = self
            .ws
            .maps
            .get(map_name)
            .ok_or_else(|| self.dangling(mi, 1, "map"))?
            .map
            .clone();
        let system_error = |e: ControlError| self.invalid(header, 1, "system", &name, e);
        let (system, refine) = match fields[3] {
            None => (DiscreteSystem::new(state, input, map).map_err(system_error)?, None),
            Some(ri) => {
                let fine = self.manifold_ref(ri, 1)?;
                let s_name = self.lines[ri].tokens[3].text;
                let s = self
                    .ws
                    .maps
                    .get(s_name)
                    .ok_or_else(|| self.dangling(ri, 3, "map"))?
                    .map
                    .clone();
                (
                    DiscreteSystem::refined(state, fine, s, input, map).map_err(system_error)?,
                    Some((self.lines[ri].tokens[1].text.to_string(), s_name.to_string())),
                )
            }
        };
        let word = |i: usize| self.lines[i].tokens[1].text.to_string();
        let decl = SystemDecl {
            name: name.clone(),
            state: word(si),
            input: word(ii),
            map: word(mi),
            refine,
        };
        self.ws.systems.insert(name, system);
        self.ws.document.declarations.push(Declaration::System(decl));
        Ok(())
    }
}

/// Re-expresses a complex over the label table of `host`, matching labels.
pub fn embed(c: &SimplicialComplex, host: &SimplicialComplex) -> Result<SimplicialComplex, String> {
    let mut simplices = Vec::new();
    for s in c.all_simplices() {
        let mut idx = Vec::with_capacity(s.vertices().len());
        for &v in s.vertices() {
            let label = c.label(v);
            idx.push(
                host.label_index(label)
                    .ok_or_else(|| format!("vertex `{label}` does not occur in the host complex"))?,
            );
        }
        idx.sort_unstable();
        simplices.push(idx);
    }
    SimplicialComplex::new(host.labels().to_vec(), simplices).map_err(|e| e.to_string())
}

impl Workspace {
    pub fn document(&self) -> &WorkspaceDocument {
        &self.document
    }

    pub fn complex(&self, name: &str) -> Option<&SimplicialComplex> {
        self.complexes.get(name)
    }

    /// A declared pair, or a declared complex read as an absolute pair.
    pub fn pair(&self, name: &str) -> Option<PairEntry> {
        self.pairs.get(name).cloned().or_else(|| {
            self.complexes.get(name).map(|c| PairEntry {
                pair: SimplicialPair::absolute(c.clone()),
                seed: None,
            })
        })
    }

    pub fn map(&self, name: &str) -> Option<&MapEntry> {
        self.maps.get(name)
    }

    pub fn system(&self, name: &str) -> Option<&DiscreteSystem> {
        self.systems.get(name)
    }

    /// Orients the named pair, using its declared seed.
    pub fn manifold(&self, name: &str) -> Option<Result<OrientedManifold, OrientationError>> {
        self.pair(name)
            .map(|p| OrientedManifold::orient(&p.pair, p.seed.as_ref()))
    }

    pub fn names(&self) -> impl Iterator<Item = (&'static str, &str)> {
        self.complexes
            .keys()
            .map(|k| ("complex", k.as_str()))
            .chain(self.pairs.keys().map(|k| ("pair", k.as_str())))
            .chain(self.maps.keys().map(|k| ("map", k.as_str())))
            .chain(self.systems.keys().map(|k| ("system", k.as_str())))
    }
}

impl ComplexDecl {
    /// Explicit declaration listing every vertex and every maximal simplex.
    pub fn explicit(name: &str, c: &SimplicialComplex) -> Self {
        let labels = |s: &Simplex| s.vertices().iter().map(|&v| c.label(v).to_string()).collect::<Vec<_>>();
        let facets = crate::control::maximal_simplices(c)
            .iter()
            .filter(|s| s.dim() > 0)
            .map(labels)
            .collect();
        ComplexDecl {
            name: name.to_string(),
            body: ComplexBody::Explicit {
                vertices: c.vertices().into_iter().map(|v| c.label(v).to_string()).collect(),
                facets,
            },
        }
    }
}

impl MapDecl {
    /// Declaration of a vertex map between two named pairs or complexes.
    pub fn from_map(name: &str, source: &str, target: &str, map: &SimplicialMap) -> Self {
        let (src, tgt) = (map.source().total(), map.target().total());
        MapDecl {
            name: name.to_string(),
            source: source.to_string(),
            target: target.to_string(),
            images: src
                .vertices()
                .into_iter()
                .map(|v| (src.label(v).to_string(), tgt.label(map.image_vertex(v)).to_string()))
                .collect(),
        }
    }
}

impl WorkspaceDocument {
    /// Canonical text; parsing it yields an identical document.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, d) in self.declarations.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            match d {
                Declaration::Complex(c) => {
                    let _ = writeln!(out, "complex {}", c.name);
                    match &c.body {
                        ComplexBody::Product(a, b) => {
                            let _ = writeln!(out, "  product {a} {b}");
                        }
                        ComplexBody::Explicit { vertices, facets } => {
                            if !vertices.is_empty() {
                                let _ = writeln!(out, "  vertices {}", vertices.join(" "));
                            }
                            for f in facets {
                                let _ = writeln!(out, "  facet {}", f.join(" "));
                            }
                        }
                    }
                }
                Declaration::Pair(p) => {
                    let _ = writeln!(out, "pair {}", p.name);
                    match &p.body {
                        PairBody::Product(a, b) => {
                            let _ = writeln!(out, "  product {a} {b}");
                        }
                        PairBody::Of { total, sub } => {
                            let _ = writeln!(out, "  total {total}");
                            match sub {
                                SubSpec::Empty => {}
                                SubSpec::Boundary => out.push_str("  sub boundary\n"),
                                SubSpec::Complex(c) => {
                                    let _ = writeln!(out, "  sub complex {c}");
                                }
                                SubSpec::Facets(fs) => {
                                    for f in fs {
                                        let _ = writeln!(out, "  sub facet {}", f.join(" "));
                                    }
                                }
                            }
                        }
                    }
                    if let Some(seed) = &p.seed {
                        let _ = writeln!(out, "  seed {}", seed.join(" "));
                    }
                }
                Declaration::Map(m) => {
                    let _ = writeln!(out, "map {} : {} -> {}", m.name, m.source, m.target);
                    for (a, b) in &m.images {
                        let _ = writeln!(out, "  {a} -> {b}");
                    }
                }
                Declaration::System(s) => {
                    let _ = writeln!(out, "system {}", s.name);
                    let _ = writeln!(out, "  state {}", s.state);
                    let _ = writeln!(out, "  input {}", s.input);
                    let _ = writeln!(out, "  map {}", s.map);
                    if let Some((fine, via)) = &s.refine {
                        let _ = writeln!(out, "  refine {fine} via {via}");
                    }
                }
            }
            out.push_str("end\n");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TRIANGLE: &str = "complex tri\n  vertices a b c\n  facet a b\n  facet b c\n  facet a c\nend\n";

    #[test]
    fn hollow_triangle() {
        let ws = parse_workspace(TRIANGLE).unwrap();
        let c = ws.complex("tri").unwrap();
        assert_eq!(c.f_vector(), vec![3, 3]);
        assert_eq!(ws.document().to_text(), TRIANGLE);
    }

    #[test]
    fn dangling_reference() {
        let text = format!("{TRIANGLE}pair p\n  total nothing\nend\n");
        let err = parse_workspace(&text).unwrap_err();
        assert_eq!((err.line, err.column), (8, 9));
        assert!(matches!(err.kind, ParseErrorKind::Dangling { ref name, .. } if name == "nothing"));
    }

    #[test]
    fn duplicate_map() {
        let map = "map f : tri -> tri\n  a -> a\n  b -> b\n  c -> c\nend\n";
        let text = format!("{TRIANGLE}{map}{map}");
        let err = parse_workspace(&text).unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::Duplicate { kind: "map", .. }));
        assert_eq!(err.line, 12);
    }

    #[test]
    fn syntax_errors_have_positions() {
        let err = parse_workspace("complex x\n  facet a b\n").unwrap_err();
        assert_eq!(err.line, 1);
        let err = parse_workspace("complex x\n  vertices a\n  facet a z\nend\n").unwrap_err();
        assert_eq!((err.line, err.column), (3, 11));
        let err = parse_workspace("widget w\nend\n").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::Syntax(_)));
    }

    #[test]
    fn invariant_violations_are_reported() {
        let text = format!("{TRIANGLE}map f : tri -> tri\n  a -> a\n  b -> b\nend\n");
        assert!(matches!(
            parse_workspace(&text).unwrap_err().kind,
            ParseErrorKind::Invalid { kind: "map", .. }
        ));
        let text = format!("{TRIANGLE}pair p\n  total tri\n  sub facet a b\n  seed a c b\nend\n");
        assert!(matches!(
            parse_workspace(&text).unwrap_err().kind,
            ParseErrorKind::Invalid { kind: "pair", .. }
        ));
    }

    #[test]
    fn products_and_embedding() {
        let text = format!(
            "{TRIANGLE}complex t\n  product tri tri\nend\ncomplex pt\n  vertices a:b\nend\npair q\n  total t\n  sub complex pt\nend\n"
        );
        let ws = parse_workspace(&text).unwrap();
        assert_eq!(ws.complex("t").unwrap().euler_characteristic(), 0);
        let q = ws.pair("q").unwrap();
        assert_eq!(
            q.pair.sub().vertices(),
            vec![q.pair.total().label_index("a:b").unwrap()]
        );
        let again = parse_workspace(&ws.document().to_text()).unwrap();
        assert_eq!(again.document(), ws.document());
    }
}
