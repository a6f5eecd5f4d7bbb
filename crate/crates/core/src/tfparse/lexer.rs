use crate::error::{Error, Position, Result};
use crate::rational::{parse_decimal, Rational};

#[derive(Clone, Debug, PartialEq)]
pub(crate) enum Tok {
    Number(Rational),
    Var,
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
    Semicolon,
    Eof,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Number(q) => format!("number {q}"),
            Tok::Var => "'s'".into(),
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
            Tok::Semicolon => "';'".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    pub tok: Tok,
    pub pos: Position,
    /// Source text of a number literal; empty otherwise.
    pub text: String,
}

pub(crate) fn tokenize(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut line = 1;
    let mut column = 1;
    let mut chars = src.char_indices().peekable();
    while let Some(&(start, ch)) = chars.peek() {
        let pos = Position { line, column };
        if ch == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if ch.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        if ch.is_ascii_digit() || ch == '.' {
            let mut end = start;
            while let Some(&(i, c)) = chars.peek() {
                if c.is_ascii_digit() || c == '.' {
                    end = i + c.len_utf8();
                    chars.next();
                    column += 1;
                } else {
                    break;
                }
            }
            let text = &src[start..end];
            let value = parse_decimal(text).ok_or_else(|| Error::Syntax {
                position: pos,
                message: format!("malformed number literal {text:?}"),
            })?;
            out.push(Token { tok: Tok::Number(value), pos, text: text.to_string() });
            continue;
        }
        let tok = match ch {
            's' | 'S' => Tok::Var,
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
            ';' => Tok::Semicolon,
            other => {
                return Err(Error::Syntax { position: pos, message: format!("unexpected character {other:?}") });
            }
        };
        chars.next();
        column += 1;
        out.push(Token { tok, pos, text: String::new() });
    }
    out.push(Token { tok: Tok::Eof, pos: Position { line, column }, text: String::new() });
    Ok(out)
}
