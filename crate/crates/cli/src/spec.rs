//! Ideal specifications such as `T(3)+U(5)` or `GT1(4; V[1^4]+V[3,1])`.
//!
//! ```text
//! spec   := term ("+" term)*
//! term   := "U(" int ")" | "T(" int ")"
//!         | "GT1(" int ";" module ")" | "GT2(" int ";" path ")"
//!         | "elem:{" element "}" | "elem:" element      (last term only)
//! module := item ("+" item)* | "0"
//! item   := "V[" partition "]" | "fam(" partition "):vec=(" q ("," q)* ")"
//! ```

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use uas_core::ideal::{gt_general, gt_type1, AdmissibleSequence, IdealPresentation, IdealWindow};
use uas_core::rep::{isotypic_component, multiplicity_space, submodule_from_multiplicity};
use uas_core::symmetric::Partition;
use uas_core::truncation::truncation_kernel;
use uas_core::{Element, Error, QSubspace, Rational, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum ModuleItem {
    /// The whole λ-isotypic component.
    Component(Partition),
    /// One copy of `S^λ` with the given multiplicity coordinates.
    Family {
        lambda: Partition,
        vector: Vec<Rational>,
    },
}

/// A submodule of a truncation component named by irreducible labels.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ModuleSpec {
    pub items: Vec<ModuleItem>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Term {
    /// `ᵏ𝔘`
    Truncation(usize),
    /// The ideal generated by `ᵏ𝔘(k)`.
    TopModule(usize),
    TypeOne {
        m: usize,
        module: ModuleSpec,
    },
    TypeTwo {
        m: usize,
        path: PathBuf,
    },
    Element(Element),
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdealSpec {
    pub terms: Vec<Term>,
}

impl fmt::Display for ModuleItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleItem::Component(l) => write!(f, "V[{}]", l.label()),
            ModuleItem::Family { lambda, vector } => {
                let v: Vec<String> = vector.iter().map(|q| q.to_string()).collect();
                write!(f, "fam({}):vec=({})", lambda.label(), v.join(","))
            }
        }
    }
}

impl fmt::Display for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.items.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.items.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", parts.join("+"))
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Truncation(k) => write!(f, "U({k})"),
            Term::TopModule(k) => write!(f, "T({k})"),
            Term::TypeOne { m, module } => write!(f, "GT1({m}; {module})"),
            Term::TypeTwo { m, path } => write!(f, "GT2({m}; {})", path.display()),
            Term::Element(e) => write!(f, "elem:{{{e}}}"),
        }
    }
}

impl fmt::Display for IdealSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", parts.join("+"))
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn error_at(&self, pos: usize, msg: impl Into<String>) -> Error {
        let before = &self.src[..pos];
        let line = before.matches('\n').count() + 1;
        let col = before.rsplit('\n').next().unwrap_or("").chars().count() + 1;
        Error::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        self.error_at(self.pos, msg)
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.src.len()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{token}`")))
        }
    }

    fn int(&mut self) -> Result<usize> {
        self.skip_ws();
        let digits = self
            .rest()
            .chars()
            .take_while(|c| c.is_ascii_digit())
            .count();
        if digits == 0 {
            return Err(self.error("expected an integer"));
        }
        let v = self.rest()[..digits]
            .parse()
            .map_err(|_| self.error("integer out of range"))?;
        self.pos += digits;
        Ok(v)
    }

    /// Text up to the first `stop` character at bracket depth zero.
    fn until(&mut self, stop: char) -> Result<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        let mut depth = 0i32;
        for (i, c) in self.rest().char_indices() {
            match c {
                '(' | '[' | '{' => depth += 1,
                ')' | ']' | '}' if depth > 0 => depth -= 1,
                _ if c == stop && depth == 0 => {
                    self.pos = start + i;
                    return Ok((start, &self.src[start..start + i]));
                }
                _ => {}
            }
        }
        Err(self.error_at(self.src.len(), format!("expected `{stop}`")))
    }

    fn partition(&self, at: usize, text: &str) -> Result<Partition> {
        text.parse()
            .map_err(|_| self.error_at(at, format!("unknown label `{}`", text.trim())))
    }

    fn module(&mut self, m: usize) -> Result<ModuleSpec> {
        if self.eat("0") {
            return Ok(ModuleSpec::default());
        }
        let mut items = Vec::new();
        loop {
            self.skip_ws();
            let at = self.pos;
            if self.eat("V[") {
                let (p, text) = self.until(']')?;
                self.expect("]")?;
                items.push(ModuleItem::Component(self.partition(p, text)?));
            } else if self.eat("fam(") {
                let (p, text) = self.until(')')?;
                let lambda = self.partition(p, text)?;
                self.expect(")")?;
                self.expect(":vec=(")?;
                let (v, text) = self.until(')')?;
                let vector = text
                    .split(',')
                    .map(|x| parse_rational(x.trim()))
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| self.error_at(v, "expected rational coordinates"))?;
                self.expect(")")?;
                items.push(ModuleItem::Family { lambda, vector });
            } else {
                return Err(self.error("expected `V[` or `fam(`"));
            }
            let lambda = match items.last() {
                Some(ModuleItem::Component(l)) | Some(ModuleItem::Family { lambda: l, .. }) => l,
                None => unreachable!(),
            };
            if lambda.weight() != m {
                return Err(
                    self.error_at(at, format!("{} is not a partition of {m}", lambda.label()))
                );
            }
            if !self.eat("+") {
                return Ok(ModuleSpec { items });
            }
        }
    }

    fn term(&mut self) -> Result<Term> {
        self.skip_ws();
        if self.eat("elem:") {
            if self.eat("{") {
                let (at, text) = self.until('}')?;
                let e = self.element(at, text)?;
                self.expect("}")?;
                return Ok(Term::Element(e));
            }
            self.skip_ws();
            let at = self.pos;
            let text = self.rest();
            self.pos = self.src.len();
            return Ok(Term::Element(self.element(at, text)?));
        }
        for (name, kind) in [("GT1(", 1), ("GT2(", 2), ("U(", 3), ("T(", 4)] {
            if !self.eat(name) {
                continue;
            }
            let k = self.int()?;
            let term = match kind {
                1 => {
                    self.expect(";")?;
                    Term::TypeOne {
                        m: k,
                        module: self.module(k)?,
                    }
                }
                2 => {
                    self.expect(";")?;
                    let (at, text) = self.until(')')?;
                    if text.trim().is_empty() {
                        return Err(self.error_at(at, "expected a path"));
                    }
                    Term::TypeTwo {
                        m: k,
                        path: PathBuf::from(text.trim()),
                    }
                }
                3 => Term::Truncation(k),
                _ => Term::TopModule(k),
            };
            self.expect(")")?;
            return Ok(term);
        }
        Err(self.error("expected `U(`, `T(`, `GT1(`, `GT2(` or `elem:`"))
    }

    fn element(&self, at: usize, text: &str) -> Result<Element> {
        text.parse::<Element>().map_err(|e| match e {
            Error::Parse { line, col, msg } => {
                let base = self.error_at(at, "");
                match base {
                    Error::Parse {
                        line: l0, col: c0, ..
                    } => Error::Parse {
                        line: l0 + line - 1,
                        col: if line == 1 { c0 + col - 1 } else { col },
                        msg,
                    },
                    other => other,
                }
            }
            other => self.error_at(at, other.to_string()),
        })
    }
}

fn parse_rational(s: &str) -> Option<Rational> {
    s.parse().ok()
}

impl FromStr for IdealSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser::new(s);
        let mut terms = vec![p.term()?];
        while !p.at_end() {
            p.expect("+")?;
            terms.push(p.term()?);
        }
        Ok(IdealSpec { terms })
    }
}

impl ModuleSpec {
    /// The submodule of `ᵐ𝔘(m)`.
    pub fn realize(&self, m: usize) -> Result<QSubspace> {
        let whole = truncation_kernel(m, m)?;
        let mut out = QSubspace::zero(whole.ambient());
        for item in &self.items {
            let part = match item {
                ModuleItem::Component(lambda) => {
                    let c = isotypic_component(&whole, lambda)?;
                    if c.is_zero() {
                        return Err(Error::Invalid(format!(
                            "unknown label {} in arity {m}",
                            lambda.label()
                        )));
                    }
                    c
                }
                ModuleItem::Family { lambda, vector } => {
                    let space = multiplicity_space(&whole, lambda)?;
                    if vector.len() != space.dim() {
                        return Err(Error::LengthMismatch {
                            expected: space.dim(),
                            got: vector.len(),
                        });
                    }
                    let mut v = vec![Rational::from_integer(0.into()); space.ambient()];
                    for (c, row) in vector.iter().zip(space.rows()) {
                        for (x, r) in v.iter_mut().zip(row) {
                            *x += c * r;
                        }
                    }
                    submodule_from_multiplicity(m, &[v])?
                }
            };
            out = out.sum(&part)?;
        }
        Ok(out)
    }
}

/// Reads a sequence file: one `arity: module` line per arity, ascending and
/// consecutive, `#` starting a comment.
pub fn read_sequence(m: usize, path: &Path) -> Result<AdmissibleSequence> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
    parse_sequence(m, &text)
}

pub fn parse_sequence(m: usize, text: &str) -> Result<AdmissibleSequence> {
    let mut modules = Vec::new();
    let mut expected: Option<usize> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |col: usize, msg: String| Error::Parse {
            line: i + 1,
            col,
            msg,
        };
        let (arity, body) = line
            .split_once(':')
            .ok_or_else(|| bad(1, "expected `arity: module`".into()))?;
        let j: usize = arity
            .trim()
            .parse()
            .map_err(|_| bad(1, "expected an arity".into()))?;
        if expected.is_some_and(|e| e != j) {
            return Err(bad(1, format!("arity {j} out of sequence")));
        }
        expected = Some(j + 1);
        let mut p = Parser::new(body);
        let module = p.module(j).map_err(|e| match e {
            Error::Parse { col, msg, .. } => bad(col + arity.len() + 1, msg),
            other => other,
        })?;
        if !p.at_end() {
            return Err(bad(arity.len() + 1 + p.pos + 1, "trailing input".into()));
        }
        modules.push(module.realize(j)?);
    }
    if expected != Some(m + 1) {
        return Err(Error::Invalid(format!(
            "sequence does not end in arity {m}"
        )));
    }
    AdmissibleSequence::new(m, modules)
}

impl IdealSpec {
    /// Components up to arity `w`.
    pub fn window(&self, w: usize) -> Result<IdealWindow> {
        let mut pres: Option<IdealPresentation> = None;
        let mut windows = Vec::new();
        let mut add = |p: IdealPresentation| {
            pres = Some(match pres.take() {
                Some(q) => q.plus(&p),
                None => p,
            });
        };
        for term in &self.terms {
            match term {
                Term::Truncation(k) => add(IdealPresentation::truncation(*k)),
                Term::TopModule(k) => add(IdealPresentation::truncation_module(*k)?),
                Term::Element(e) => add(IdealPresentation::element(e.clone())),
                Term::TypeOne { m, module } => windows.push(gt_type1(*m, &module.realize(*m)?, w)?),
                Term::TypeTwo { m, path } => {
                    windows.push(gt_general(&read_sequence(*m, path)?, w)?)
                }
            }
        }
        let mut acc = match pres {
            Some(p) => Some(IdealWindow::generate(&p, w)?),
            None => None,
        };
        for win in windows {
            acc = Some(match acc {
                Some(a) => a.sum(&win)?,
                None => win,
            });
        }
        Ok(acc.expect("at least one term").with_label(self.to_string()))
    }
}
