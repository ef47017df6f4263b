use std::fmt;

use crate::poly::Var;
use crate::superfield::MacFarlaneW;
use crate::SuperMatrix;

use super::{ParseError, Parser, Pos};

/// A solution file: `M`, `N`, the lower block `K` of `Z = (I_M; K)`, an
/// optional `A` (zero if absent), and any other keys kept as metadata.
///
/// ```text
/// # G(2,4)
/// M = 2
/// N = 4
/// K = [[x+, 0],
///      [0, 0]]
/// A = [[1, 1], [0, 2], [x+^2, 3 + 5*x+], [1 + 2*x+, 5]]
/// ```
#[derive(Clone, Debug, PartialEq)]
pub struct SolutionDoc {
    pub m: usize,
    pub n: usize,
    pub k: SuperMatrix,
    pub a: Option<SuperMatrix>,
    pub metadata: Vec<(String, String)>,
}

struct Entry {
    key: String,
    value: String,
    at: Pos,
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

fn bracket_depth(s: &str) -> i64 {
    s.chars()
        .map(|c| match c {
            '[' | '(' => 1,
            ']' | ')' => -1,
            _ => 0,
        })
        .sum()
}

fn entries(text: &str) -> Result<Vec<Entry>, ParseError> {
    let lines: Vec<&str> = text.lines().collect();
    let mut out: Vec<Entry> = Vec::new();
    let mut i = 0;
    while i < lines.len() {
        let line = strip_comment(lines[i]);
        let line_no = i + 1;
        i += 1;
        if line.trim().is_empty() {
            continue;
        }
        let Some(eq) = line.find('=') else {
            let col = line.len() - line.trim_start().len() + 1;
            return Err(Pos { line: line_no, col }.error("expected 'key = value'"));
        };
        let key = line[..eq].trim().to_string();
        if key.is_empty() || key.contains(char::is_whitespace) {
            return Err(Pos { line: line_no, col: 1 }.error(format!("bad key '{key}'")));
        }
        if out.iter().any(|e| e.key == key) {
            return Err(Pos { line: line_no, col: 1 }.error(format!("duplicate key '{key}'")));
        }
        let raw = &line[eq + 1..];
        let lead = raw.len() - raw.trim_start().len();
        let at = Pos { line: line_no, col: line[..eq + 1 + lead].chars().count() + 1 };
        let mut value = raw.trim_start().to_string();
        let mut depth = bracket_depth(&value);
        while depth > 0 {
            let Some(next) = lines.get(i) else {
                return Err(at.error("unclosed bracket"));
            };
            let next = strip_comment(next);
            i += 1;
            value.push('\n');
            value.push_str(next);
            depth += bracket_depth(next);
        }
        out.push(Entry { key, value: value.trim_end().to_string(), at });
    }
    Ok(out)
}

fn matrix(e: &Entry) -> Result<SuperMatrix, ParseError> {
    let mut p = Parser::new(&e.value, e.at)?;
    let m = p.matrix()?;
    p.finish()?;
    Ok(m)
}

fn size(e: &Entry) -> Result<usize, ParseError> {
    e.value
        .trim()
        .parse()
        .map_err(|_| e.at.error(format!("{} must be a non-negative integer", e.key)))
}

fn check_shape(name: &str, m: &SuperMatrix, rows: usize, cols: usize) -> Result<(), ParseError> {
    if m.shape() != (rows, cols) {
        return Err(ParseError::Dimension(format!(
            "{name} is {}x{}, expected {rows}x{cols}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

fn check_holomorphic(name: &str, m: &SuperMatrix) -> Result<(), ParseError> {
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let v = m.get(i, j).body();
            if !v.is_free_of(Var::Minus) {
                return Err(ParseError::NonHolomorphic(format!("{name}[{}][{}] = {v}", i + 1, j + 1)));
            }
        }
    }
    Ok(())
}

impl SolutionDoc {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut m = None;
        let mut n = None;
        let mut k = None;
        let mut a = None;
        let mut metadata = Vec::new();
        for e in entries(text)? {
            match e.key.as_str() {
                "M" => m = Some(size(&e)?),
                "N" => n = Some(size(&e)?),
                "K" => k = Some(matrix(&e)?),
                "A" => a = Some(matrix(&e)?),
                _ => metadata.push((e.key, e.value)),
            }
        }
        let m = m.ok_or_else(|| ParseError::MissingKey("M".into()))?;
        let n = n.ok_or_else(|| ParseError::MissingKey("N".into()))?;
        let k = k.ok_or_else(|| ParseError::MissingKey("K".into()))?;
        if m == 0 || n <= m {
            return Err(ParseError::Dimension(format!("need N > M >= 1, got M = {m}, N = {n}")));
        }
        check_shape("K", &k, n - m, m)?;
        check_holomorphic("K", &k)?;
        if let Some(a) = &a {
            check_shape("A", a, n, m)?;
            check_holomorphic("A", a)?;
        }
        Ok(Self { m, n, k, a, metadata })
    }

    pub fn to_macfarlane(&self) -> Result<MacFarlaneW, ParseError> {
        let a = self.a.clone().unwrap_or_else(|| SuperMatrix::zeros(self.n, self.m));
        Ok(MacFarlaneW::from_k(self.k.clone(), a)?)
    }

    pub fn from_macfarlane(w: &MacFarlaneW) -> Self {
        Self { m: w.m(), n: w.n(), k: w.k(), a: Some(w.a().clone()), metadata: Vec::new() }
    }
}

/// Canonical document text; parses back to an equal document.
impl fmt::Display for SolutionDoc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (key, value) in &self.metadata {
            writeln!(f, "{key} = {value}")?;
        }
        writeln!(f, "M = {}", self.m)?;
        writeln!(f, "N = {}", self.n)?;
        writeln!(f, "K = {}", self.k.to_string().replace("\n ", "\n     "))?;
        if let Some(a) = &self.a {
            writeln!(f, "A = {}", a.to_string().replace("\n ", "\n     "))?;
        }
        Ok(())
    }
}

pub fn parse_solution(text: &str) -> Result<MacFarlaneW, ParseError> {
    SolutionDoc::parse(text)?.to_macfarlane()
}
