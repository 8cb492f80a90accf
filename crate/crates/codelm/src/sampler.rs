//! Noise removal and structure normalization for raw source text.
//!
//! The sampler strips comments and blank lines, checks lexical/structural
//! validity (bracket balance stands in for compilation as the training-set
//! noise filter; hook an external compiler in via the pipeline if needed),
//! and re-indents obfuscated code one statement per line.

use std::path::PathBuf;

use crate::error::{Error, Result};
use crate::lexer;

pub const INDENT_WIDTH: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} at line {}", self.message, self.line)
    }
}

/// Comment-free text plus any diagnostics raised while stripping.
#[derive(Debug, Clone)]
pub struct Stripped {
    pub text: String,
    pub diagnostics: Vec<Diagnostic>,
}

/// Validity report: `ok` is true iff the text lexes cleanly and all
/// brackets are balanced and properly nested.
#[derive(Debug, Clone)]
pub struct ValidityReport {
    pub ok: bool,
    pub diagnostics: Vec<Diagnostic>,
}

/// A normalized file: no blank lines, no comments, indentation recomputed
/// from brace depth.
#[derive(Debug, Clone)]
pub struct CleanFile {
    pub origin_path: Option<PathBuf>,
    pub lines: Vec<String>,
    pub diagnostics: Vec<Diagnostic>,
}

impl CleanFile {
    pub fn text(&self) -> String {
        let mut out = self.lines.join("\n");
        if !out.is_empty() {
            out.push('\n');
        }
        out
    }
}

#[derive(Clone, Copy, PartialEq)]
enum StripState {
    Code,
    Str,
    Chr,
    LineComment,
    BlockComment,
}

/// Remove `//` and `/* ... */` comments. Literal contents are preserved
/// verbatim; newlines inside block comments are kept so the line structure
/// of the remaining code does not shift. An unterminated block comment
/// truncates the output at the comment start and is flagged.
pub fn strip_comments(text: &str) -> Stripped {
    let mut out = String::with_capacity(text.len());
    let mut diagnostics = Vec::new();
    let mut state = StripState::Code;
    let mut chars = text.chars().peekable();
    let mut line = 1usize;
    let mut block_start_line = 0usize;
    let mut truncate_at = 0usize;

    while let Some(c) = chars.next() {
        if c == '\n' {
            line += 1;
        }
        match state {
            StripState::Code => match c {
                '/' if chars.peek() == Some(&'/') => {
                    chars.next();
                    state = StripState::LineComment;
                }
                '/' if chars.peek() == Some(&'*') => {
                    chars.next();
                    state = StripState::BlockComment;
                    block_start_line = line;
                    truncate_at = out.len();
                }
                '"' => {
                    out.push(c);
                    state = StripState::Str;
                }
                '\'' => {
                    out.push(c);
                    state = StripState::Chr;
                }
                _ => out.push(c),
            },
            StripState::Str | StripState::Chr => {
                out.push(c);
                let quote = if state == StripState::Str { '"' } else { '\'' };
                if c == '\\' {
                    if let Some(esc) = chars.next() {
                        if esc == '\n' {
                            line += 1;
                        }
                        out.push(esc);
                    }
                } else if c == quote || c == '\n' {
                    state = StripState::Code;
                }
            }
            StripState::LineComment => {
                if c == '\n' {
                    out.push(c);
                    state = StripState::Code;
                }
            }
            StripState::BlockComment => {
                if c == '*' && chars.peek() == Some(&'/') {
                    chars.next();
                    state = StripState::Code;
                } else if c == '\n' {
                    out.push(c);
                }
            }
        }
    }

    if state == StripState::BlockComment {
        out.truncate(truncate_at);
        diagnostics.push(Diagnostic {
            line: block_start_line,
            message: "unterminated block comment".into(),
        });
    }

    Stripped {
        text: out,
        diagnostics,
    }
}

/// Check that comment-free text lexes with no unknown characters and that
/// all `()`, `{}`, `[]` pairs are balanced and properly nested. Used to
/// filter noisy files out of the training set only; test data is never
/// filtered.
pub fn validate(text: &str) -> ValidityReport {
    let tokens = match lexer::lex(text) {
        Ok(tokens) => tokens,
        Err(Error::Lex { line, message, .. }) => {
            return ValidityReport {
                ok: false,
                diagnostics: vec![Diagnostic { line, message }],
            };
        }
        Err(other) => {
            return ValidityReport {
                ok: false,
                diagnostics: vec![Diagnostic {
                    line: 0,
                    message: other.to_string(),
                }],
            };
        }
    };

    let mut diagnostics = Vec::new();
    let mut stack: Vec<(&str, usize)> = Vec::new();
    for token in &tokens {
        match token.text.as_str() {
            "(" | "{" | "[" => stack.push((match_close(&token.text), token.line)),
            close @ (")" | "}" | "]") => match stack.pop() {
                Some((expected, _)) if expected == close => {}
                Some((_, _)) | None => {
                    diagnostics.push(Diagnostic {
                        line: token.line,
                        message: format!("unbalanced {close}"),
                    });
                }
            },
            _ => {}
        }
    }
    for (close, line) in stack {
        diagnostics.push(Diagnostic {
            line,
            message: format!("unbalanced {}", match_open(close)),
        });
    }

    ValidityReport {
        ok: diagnostics.is_empty(),
        diagnostics,
    }
}

fn match_close(open: &str) -> &'static str {
    match open {
        "(" => ")",
        "{" => "}",
        _ => "]",
    }
}

fn match_open(close: &str) -> &'static str {
    match close {
        ")" => "(",
        "}" => "{",
        _ => "[",
    }
}

/// Re-layout validated text one statement per line: break after each `;`,
/// `{` and `}` outside parentheses, drop blank lines, and recompute leading
/// indentation as four spaces per brace depth (a line starting with `}`
/// indents at the depth after the decrement). The token stream is unchanged.
pub fn normalize_structure(text: &str) -> Result<CleanFile> {
    let report = validate(text);
    if !report.ok {
        let first = &report.diagnostics[0];
        return Err(Error::Validity(first.to_string()));
    }

    let raw_lines = split_statements(text);
    let mut lines = Vec::with_capacity(raw_lines.len());
    let mut depth = 0usize;
    for raw in raw_lines {
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        let indent_depth = if trimmed.starts_with('}') {
            depth.saturating_sub(1)
        } else {
            depth
        };
        let mut line = " ".repeat(INDENT_WIDTH * indent_depth);
        line.push_str(trimmed);
        lines.push(line);

        let (opens, closes) = brace_delta(trimmed);
        depth = (depth + opens).saturating_sub(closes);
    }

    Ok(CleanFile {
        origin_path: None,
        lines,
        diagnostics: Vec::new(),
    })
}

/// Break text after `;`, `{`, `}` at paren depth zero, preserving existing
/// newlines. Literal contents never trigger breaks.
fn split_statements(text: &str) -> Vec<String> {
    let mut lines = Vec::new();
    let mut current = String::new();
    let mut paren_depth = 0usize;
    let mut state = StripState::Code;

    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        if c == '\r' {
            continue;
        }
        match state {
            StripState::Code => match c {
                '"' => {
                    current.push(c);
                    state = StripState::Str;
                }
                '\'' => {
                    current.push(c);
                    state = StripState::Chr;
                }
                '(' => {
                    paren_depth += 1;
                    current.push(c);
                }
                ')' => {
                    paren_depth = paren_depth.saturating_sub(1);
                    current.push(c);
                }
                ';' | '{' | '}' if paren_depth == 0 => {
                    current.push(c);
                    lines.push(std::mem::take(&mut current));
                }
                '\n' => lines.push(std::mem::take(&mut current)),
                _ => current.push(c),
            },
            StripState::Str | StripState::Chr => {
                current.push(c);
                let quote = if state == StripState::Str { '"' } else { '\'' };
                if c == '\\' {
                    if let Some(esc) = chars.next() {
                        current.push(esc);
                    }
                } else if c == quote || c == '\n' {
                    state = StripState::Code;
                }
            }
            _ => unreachable!("comments removed before normalization"),
        }
    }
    if !current.is_empty() {
        lines.push(current);
    }
    lines
}

fn brace_delta(line: &str) -> (usize, usize) {
    let mut opens = 0;
    let mut closes = 0;
    let mut state = StripState::Code;
    let mut chars = line.chars();
    while let Some(c) = chars.next() {
        match state {
            StripState::Code => match c {
                '{' => opens += 1,
                '}' => closes += 1,
                '"' => state = StripState::Str,
                '\'' => state = StripState::Chr,
                _ => {}
            },
            StripState::Str | StripState::Chr => {
                let quote = if state == StripState::Str { '"' } else { '\'' };
                if c == '\\' {
                    chars.next();
                } else if c == quote {
                    state = StripState::Code;
                }
            }
            _ => {}
        }
    }
    (opens, closes)
}

/// Full sampling pass for one file: strip comments, then normalize.
/// Validity failures (including an unterminated block comment) surface as
/// errors so callers can drop the file from training sets.
pub fn preprocess_text(text: &str) -> Result<CleanFile> {
    let stripped = strip_comments(text);
    if let Some(first) = stripped.diagnostics.first() {
        return Err(Error::Validity(first.to_string()));
    }
    let mut clean = normalize_structure(&stripped.text)?;
    clean.diagnostics = stripped.diagnostics;
    Ok(clean)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_comment_removed() {
        assert_eq!(strip_comments("int i = 0; // counter").text, "int i = 0; ");
    }

    #[test]
    fn string_literal_protected() {
        let src = "String s = \"a//b\";";
        assert_eq!(strip_comments(src).text, src);
    }

    #[test]
    fn two_block_spans() {
        assert_eq!(strip_comments("/* a */ x /* b */ y").text, " x  y");
    }

    #[test]
    fn doc_comment_removed() {
        assert_eq!(strip_comments("/** doc */int x;").text, "int x;");
    }

    #[test]
    fn block_comment_keeps_line_structure() {
        let out = strip_comments("a;\n/* one\ntwo */\nb;");
        assert_eq!(out.text, "a;\n\n\nb;");
    }

    #[test]
    fn unterminated_block_truncates_and_flags() {
        let out = strip_comments("int i; /* oops\nmore");
        assert_eq!(out.text, "int i; ");
        assert_eq!(out.diagnostics.len(), 1);
        assert_eq!(out.diagnostics[0].line, 1);
    }

    #[test]
    fn balanced_text_is_ok() {
        assert!(validate("class A { }").ok);
    }

    #[test]
    fn unbalanced_paren_reported() {
        let report = validate("if (x { }");
        assert!(!report.ok);
        assert_eq!(report.diagnostics[0].to_string(), "unbalanced ( at line 1");
    }

    #[test]
    fn obfuscated_loop_is_valid() {
        assert!(validate("int i = 0; while(i<10){ i++; }").ok);
    }

    #[test]
    fn normalize_obfuscated_loop() {
        let clean = normalize_structure("int i=0;while(i<10){i++;}").unwrap();
        assert_eq!(
            clean.lines,
            vec!["int i=0;", "while(i<10){", "    i++;", "}"]
        );
    }

    #[test]
    fn normalize_is_idempotent() {
        let once = normalize_structure("int i=0;while(i<10){i++;}").unwrap();
        let twice = normalize_structure(&once.text()).unwrap();
        assert_eq!(once.lines, twice.lines);
    }

    #[test]
    fn for_header_semicolons_do_not_split() {
        let clean = normalize_structure("for(int i=0;i<n;i++){x();}").unwrap();
        assert_eq!(
            clean.lines,
            vec!["for(int i=0;i<n;i++){", "    x();", "}"]
        );
    }

    #[test]
    fn normalize_rejects_invalid_text() {
        assert!(normalize_structure("if (x { }").is_err());
    }

    #[test]
    fn token_stream_preserved() {
        let src = "int i=0;while(i<10){i++;}";
        let clean = normalize_structure(src).unwrap();
        let before: Vec<_> = lexer::lex(src).unwrap().into_iter().map(|t| t.text).collect();
        let after: Vec<_> = lexer::lex(&clean.text())
            .unwrap()
            .into_iter()
            .map(|t| t.text)
            .collect();
        assert_eq!(before, after);
    }

    #[test]
    fn blank_lines_removed() {
        let clean = normalize_structure("int a;\n\n\nint b;").unwrap();
        assert_eq!(clean.lines, vec!["int a;", "int b;"]);
    }

    #[test]
    fn semicolon_inside_string_does_not_split() {
        let clean = normalize_structure("String s = \"a;b\";").unwrap();
        assert_eq!(clean.lines, vec!["String s = \"a;b\";"]);
    }
}
