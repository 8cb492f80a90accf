//! Maximal-munch tokenizer for the Java subset handled by the toolkit.
//!
//! Comments are expected to be stripped before lexing (see [`crate::sampler`]).
//! Unsuffixed decimal literals lex as [`TokenKind::FloatLit`]; the `f/F`,
//! `d/D` and `l/L` suffixes select float, double and long literals.

use crate::error::{Error, Result};

/// Reserved-word list bundled with the repo (JLS keywords; `true`, `false`
/// and `null` are literals, not keywords).
const KEYWORD_LIST: &str = include_str!("../data/java_keywords.txt");

/// Multi-character operators, longest first so maximal munch works by
/// taking the first match.
const MULTI_OPERATORS: &[&str] = &[
    ">>>=", ">>>", "<<=", ">>=", "...", "==", "!=", "<=", ">=", "&&", "||", "++", "--", "+=",
    "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<", ">>", "->", "::",
];

const SINGLE_OPERATORS: &str = "=+-*/%<>!&|^~?:";
const SEPARATORS: &str = "(){}[];,.@";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TokenKind {
    Keyword,
    Identifier,
    IntLit,
    LongLit,
    FloatLit,
    DoubleLit,
    CharLit,
    StringLit,
    BoolLit,
    NullLit,
    Operator,
    Separator,
}

impl TokenKind {
    pub fn is_literal(self) -> bool {
        matches!(
            self,
            TokenKind::IntLit
                | TokenKind::LongLit
                | TokenKind::FloatLit
                | TokenKind::DoubleLit
                | TokenKind::CharLit
                | TokenKind::StringLit
                | TokenKind::BoolLit
                | TokenKind::NullLit
        )
    }
}

/// One lexical unit with its source position (1-based line and column).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub text: String,
    pub kind: TokenKind,
    pub line: usize,
    pub col: usize,
}

impl Token {
    pub fn new(text: impl Into<String>, kind: TokenKind, line: usize, col: usize) -> Self {
        Token {
            text: text.into(),
            kind,
            line,
            col,
        }
    }
}

pub fn is_keyword(word: &str) -> bool {
    KEYWORD_LIST.lines().any(|k| k == word)
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_' || c == '$'
}

fn is_ident_continue(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '$'
}

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col: usize,
    text: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            chars: text.chars().collect(),
            pos: 0,
            line: 1,
            col: 1,
            text,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn peek_at(&self, offset: usize) -> Option<char> {
        self.chars.get(self.pos + offset).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn starts_with(&self, s: &str) -> bool {
        s.chars()
            .enumerate()
            .all(|(i, c)| self.peek_at(i) == Some(c))
    }

    fn take(&mut self, count: usize) -> String {
        let mut out = String::new();
        for _ in 0..count {
            if let Some(c) = self.bump() {
                out.push(c);
            }
        }
        out
    }

    fn is_eof(&self) -> bool {
        self.pos >= self.chars.len()
    }
}

/// Tokenize comment-free source text. Whitespace is discarded; positions
/// are recorded. Unknown characters and unterminated literals are lex
/// errors carrying line/col.
pub fn lex(text: &str) -> Result<Vec<Token>> {
    let mut cur = Cursor::new(text);
    let mut tokens = Vec::new();

    while !cur.is_eof() {
        let c = cur.peek().unwrap();
        if c.is_whitespace() {
            cur.bump();
            continue;
        }

        let line = cur.line;
        let col = cur.col;

        if is_ident_start(c) {
            let mut word = String::new();
            while let Some(ch) = cur.peek() {
                if is_ident_continue(ch) {
                    word.push(ch);
                    cur.bump();
                } else {
                    break;
                }
            }
            let kind = match word.as_str() {
                "true" | "false" => TokenKind::BoolLit,
                "null" => TokenKind::NullLit,
                w if is_keyword(w) => TokenKind::Keyword,
                _ => TokenKind::Identifier,
            };
            tokens.push(Token::new(word, kind, line, col));
            continue;
        }

        if c.is_ascii_digit() {
            tokens.push(lex_number(&mut cur, line, col));
            continue;
        }

        if c == '"' {
            tokens.push(lex_quoted(&mut cur, '"', TokenKind::StringLit, line, col)?);
            continue;
        }
        if c == '\'' {
            tokens.push(lex_quoted(&mut cur, '\'', TokenKind::CharLit, line, col)?);
            continue;
        }

        if let Some(op) = MULTI_OPERATORS.iter().find(|op| cur.starts_with(op)) {
            let text = cur.take(op.chars().count());
            tokens.push(Token::new(text, TokenKind::Operator, line, col));
            continue;
        }

        if SINGLE_OPERATORS.contains(c) {
            cur.bump();
            tokens.push(Token::new(c.to_string(), TokenKind::Operator, line, col));
            continue;
        }
        if SEPARATORS.contains(c) {
            cur.bump();
            tokens.push(Token::new(c.to_string(), TokenKind::Separator, line, col));
            continue;
        }

        return Err(Error::Lex {
            line,
            col,
            message: format!("unknown character {c:?}"),
        });
    }

    Ok(tokens)
}

fn lex_number(cur: &mut Cursor, line: usize, col: usize) -> Token {
    let mut text = String::new();
    while let Some(c) = cur.peek() {
        if c.is_ascii_digit() {
            text.push(c);
            cur.bump();
        } else {
            break;
        }
    }

    let mut has_dot = false;
    if cur.peek() == Some('.') && cur.peek_at(1).is_some_and(|c| c.is_ascii_digit()) {
        has_dot = true;
        text.push('.');
        cur.bump();
        while let Some(c) = cur.peek() {
            if c.is_ascii_digit() {
                text.push(c);
                cur.bump();
            } else {
                break;
            }
        }
    }

    // Suffix decides the literal class; a suffix glued to an identifier
    // character is left for the identifier lexer to reject downstream.
    let kind = match cur.peek() {
        Some(s @ ('l' | 'L')) if !has_dot && !next_is_ident(cur) => {
            text.push(s);
            cur.bump();
            TokenKind::LongLit
        }
        Some(s @ ('f' | 'F')) if !next_is_ident(cur) => {
            text.push(s);
            cur.bump();
            TokenKind::FloatLit
        }
        Some(s @ ('d' | 'D')) if !next_is_ident(cur) => {
            text.push(s);
            cur.bump();
            TokenKind::DoubleLit
        }
        _ if has_dot => TokenKind::FloatLit,
        _ => TokenKind::IntLit,
    };
    Token::new(text, kind, line, col)
}

fn next_is_ident(cur: &Cursor) -> bool {
    cur.peek_at(1).is_some_and(is_ident_continue)
}

fn lex_quoted(
    cur: &mut Cursor,
    quote: char,
    kind: TokenKind,
    line: usize,
    col: usize,
) -> Result<Token> {
    let mut text = String::new();
    text.push(cur.bump().unwrap());
    loop {
        match cur.peek() {
            None | Some('\n') => {
                return Err(Error::Lex {
                    line,
                    col,
                    message: format!(
                        "unterminated {} literal",
                        if quote == '"' { "string" } else { "char" }
                    ),
                });
            }
            Some('\\') => {
                text.push(cur.bump().unwrap());
                if let Some(esc) = cur.bump() {
                    text.push(esc);
                }
            }
            Some(c) if c == quote => {
                text.push(cur.bump().unwrap());
                return Ok(Token::new(text, kind, line, col));
            }
            Some(c) => {
                text.push(c);
                cur.bump();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(text: &str) -> Vec<(String, TokenKind)> {
        lex(text)
            .unwrap()
            .into_iter()
            .map(|t| (t.text, t.kind))
            .collect()
    }

    #[test]
    fn canonical_statement() {
        assert_eq!(
            kinds("int i = 1;"),
            vec![
                ("int".into(), TokenKind::Keyword),
                ("i".into(), TokenKind::Identifier),
                ("=".into(), TokenKind::Operator),
                ("1".into(), TokenKind::IntLit),
                (";".into(), TokenKind::Separator),
            ]
        );
    }

    #[test]
    fn unsuffixed_decimal_lexes_as_float() {
        assert_eq!(
            kinds("a=1.1;"),
            vec![
                ("a".into(), TokenKind::Identifier),
                ("=".into(), TokenKind::Operator),
                ("1.1".into(), TokenKind::FloatLit),
                (";".into(), TokenKind::Separator),
            ]
        );
    }

    #[test]
    fn maximal_munch_relational() {
        assert_eq!(
            kinds("x<=y"),
            vec![
                ("x".into(), TokenKind::Identifier),
                ("<=".into(), TokenKind::Operator),
                ("y".into(), TokenKind::Identifier),
            ]
        );
    }

    #[test]
    fn literal_suffixes() {
        assert_eq!(kinds("10l")[0].1, TokenKind::LongLit);
        assert_eq!(kinds("10f")[0].1, TokenKind::FloatLit);
        assert_eq!(kinds("1.5d")[0].1, TokenKind::DoubleLit);
        assert_eq!(kinds("10")[0].1, TokenKind::IntLit);
    }

    #[test]
    fn bool_and_null_literals() {
        assert_eq!(kinds("true")[0].1, TokenKind::BoolLit);
        assert_eq!(kinds("false")[0].1, TokenKind::BoolLit);
        assert_eq!(kinds("null")[0].1, TokenKind::NullLit);
    }

    #[test]
    fn string_protects_comment_markers() {
        let toks = kinds("String s = \"a//b\";");
        assert_eq!(toks[3], ("\"a//b\"".into(), TokenKind::StringLit));
    }

    #[test]
    fn char_literal_with_escape() {
        assert_eq!(kinds("'\\n'")[0], ("'\\n'".into(), TokenKind::CharLit));
        assert_eq!(kinds("'c'")[0], ("'c'".into(), TokenKind::CharLit));
    }

    #[test]
    fn positions_recorded() {
        let toks = lex("int i;\n  i = 1;").unwrap();
        assert_eq!((toks[0].line, toks[0].col), (1, 1));
        assert_eq!((toks[3].line, toks[3].col), (2, 3));
    }

    #[test]
    fn unknown_character_errors() {
        let err = lex("int a = #;").unwrap_err();
        match err {
            Error::Lex { line, col, .. } => {
                assert_eq!(line, 1);
                assert_eq!(col, 9);
            }
            other => panic!("unexpected error: {other}"),
        }
    }

    #[test]
    fn unterminated_string_errors() {
        assert!(lex("String s = \"abc").is_err());
    }

    #[test]
    fn arrow_and_shift_operators() {
        assert_eq!(kinds("a->b")[1].0, "->");
        assert_eq!(kinds("a>>>=b")[1].0, ">>>=");
        assert_eq!(kinds("a>>b")[1].0, ">>");
    }
}
