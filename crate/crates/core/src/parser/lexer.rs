use num_bigint::BigInt;

use super::ParseError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Num(BigInt),
    I,
    Sqrt,
    XPlus,
    XMinus,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Eof,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Num(n) => format!("number {n}"),
            Tok::I => "'i'".into(),
            Tok::Sqrt => "'sqrt'".into(),
            Tok::XPlus => "'x+'".into(),
            Tok::XMinus => "'x-'".into(),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::LBracket => "'['".into(),
            Tok::RBracket => "']'".into(),
            Tok::Comma => "','".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

/// 1-based line and column.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl Pos {
    pub const START: Pos = Pos { line: 1, col: 1 };

    pub(crate) fn error(self, msg: impl Into<String>) -> ParseError {
        ParseError::Syntax { line: self.line, col: self.col, msg: msg.into() }
    }
}

/// Splits `src` into tokens; `start` is the position of its first character.
pub(crate) fn tokenize(src: &str, start: Pos) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut pos = start;
    let mut i = 0;
    let advance = |pos: &mut Pos, c: char| {
        if c == '\n' {
            pos.line += 1;
            pos.col = 1;
        } else {
            pos.col += 1;
        }
    };
    while i < chars.len() {
        let c = chars[i];
        let here = pos;
        if c.is_whitespace() {
            advance(&mut pos, c);
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let begin = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
                pos.col += 1;
            }
            let digits: String = chars[begin..i].iter().collect();
            out.push((Tok::Num(digits.parse().expect("ascii digits")), here));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let begin = i;
            while i < chars.len() && chars[i].is_ascii_alphabetic() {
                i += 1;
                pos.col += 1;
            }
            let word: String = chars[begin..i].iter().collect();
            let tok = match word.as_str() {
                "i" => Tok::I,
                "sqrt" => Tok::Sqrt,
                "x" => match chars.get(i) {
                    Some('+') => Tok::XPlus,
                    Some('-') => Tok::XMinus,
                    _ => return Err(here.error("expected 'x+' or 'x-'")),
                },
                _ => return Err(here.error(format!("unknown identifier '{word}'"))),
            };
            if matches!(tok, Tok::XPlus | Tok::XMinus) {
                i += 1;
                pos.col += 1;
            }
            out.push((tok, here));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ',' => Tok::Comma,
            _ => return Err(here.error(format!("unexpected character '{c}'"))),
        };
        out.push((tok, here));
        advance(&mut pos, c);
        i += 1;
    }
    out.push((Tok::Eof, pos));
    Ok(out)
}
