//! Type-based token regularization.
//!
//! Literals rewrite to `<type>val` tokens and declared variables/objects to
//! `<type>var` tokens; keywords, method names, `true`, `false` and `null`
//! stay verbatim. Declarations are tracked per scope within a file, so a
//! locally declared `File inputfile` makes every later `inputfile` emit
//! `filevar` while `inputfile.open()` keeps `open` intact. Everything
//! emitted is lowercased.

use std::collections::HashMap;

use crate::lexer::{Token, TokenKind};

const PRIMITIVE_TYPES: &[&str] = &[
    "boolean", "byte", "char", "double", "float", "int", "long", "short",
];

const MODIFIERS: &[&str] = &[
    "abstract",
    "default",
    "final",
    "native",
    "private",
    "protected",
    "public",
    "static",
    "strictfp",
    "synchronized",
];

/// Stack of lexical scopes mapping identifiers to normalized type names.
/// Scopes push on `{` and pop on `}`; lookups search innermost-outward.
#[derive(Debug, Clone)]
pub struct ScopeTable {
    scopes: Vec<HashMap<String, String>>,
}

impl ScopeTable {
    pub fn new() -> Self {
        ScopeTable {
            scopes: vec![HashMap::new()],
        }
    }

    pub fn push(&mut self) {
        self.scopes.push(HashMap::new());
    }

    /// Pops the innermost scope; the file-level scope is never removed.
    pub fn pop(&mut self) {
        if self.scopes.len() > 1 {
            self.scopes.pop();
        }
    }

    pub fn declare(&mut self, name: impl Into<String>, ty: impl Into<String>) {
        self.scopes
            .last_mut()
            .expect("scope stack never empty")
            .insert(name.into(), ty.into());
    }

    pub fn lookup(&self, name: &str) -> Option<&str> {
        self.scopes
            .iter()
            .rev()
            .find_map(|scope| scope.get(name).map(String::as_str))
    }

    pub fn depth(&self) -> usize {
        self.scopes.len()
    }
}

impl Default for ScopeTable {
    fn default() -> Self {
        Self::new()
    }
}

/// A token plus the normalized type name its identifier resolved to, if any.
#[derive(Debug, Clone)]
pub struct AnnotatedToken {
    pub token: Token,
    pub resolved_type: Option<String>,
}

/// A token after type-based encoding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularizedToken {
    pub text: String,
    pub source_kind: TokenKind,
    pub encoded: bool,
}

fn is_primitive_type(token: &Token) -> bool {
    token.kind == TokenKind::Keyword && PRIMITIVE_TYPES.contains(&token.text.as_str())
}

fn is_modifier(token: &Token) -> bool {
    token.kind == TokenKind::Keyword && MODIFIERS.contains(&token.text.as_str())
}

/// Parse a type starting at `i`: primitive or class name, optional one-level
/// generic arguments (`ArrayList<String>` normalizes to `stringarraylist`:
/// subtypes first, then the base), optional `[]` suffixes appending `array`.
/// Returns the normalized lowercase name and the index just past the type.
fn parse_type(tokens: &[Token], i: usize) -> Option<(String, usize)> {
    let head = tokens.get(i)?;
    let mut j = i + 1;
    let mut name = if is_primitive_type(head) {
        head.text.clone()
    } else if head.kind == TokenKind::Identifier {
        let base = head.text.to_lowercase();
        if tokens.get(j).is_some_and(|t| t.text == "<") {
            let mut subtypes = String::new();
            j += 1;
            loop {
                let arg = tokens.get(j)?;
                if arg.kind == TokenKind::Identifier || is_primitive_type(arg) {
                    subtypes.push_str(&arg.text.to_lowercase());
                    j += 1;
                } else {
                    return None;
                }
                match tokens.get(j)?.text.as_str() {
                    "," => j += 1,
                    ">" => {
                        j += 1;
                        break;
                    }
                    _ => return None,
                }
            }
            format!("{subtypes}{base}")
        } else {
            base
        }
    } else {
        return None;
    };

    while tokens.get(j).is_some_and(|t| t.text == "[")
        && tokens.get(j + 1).is_some_and(|t| t.text == "]")
    {
        name.push_str("array");
        j += 2;
    }
    Some((name, j))
}

fn token_text<'a>(tokens: &'a [Token], i: usize) -> Option<&'a str> {
    tokens.get(i).map(|t| t.text.as_str())
}

/// Resolve declared identifiers to their types via scope tracking.
///
/// Recognized declaration shapes: `Type id`, `Type id = ...`, chained
/// declarators `Type a, b = 1, c`, method parameter lists, catch clauses and
/// enhanced-for headers. Method parameters become visible in the body scope
/// opened by the following `{`; `for`/`catch` header declarations land in
/// the enclosing scope. Unresolvable identifiers stay unannotated.
pub fn resolve_types(tokens: &[Token]) -> Vec<AnnotatedToken> {
    let n = tokens.len();
    let mut annotations: Vec<Option<String>> = vec![None; n];
    let mut claimed = vec![false; n];
    let mut scopes = ScopeTable::new();
    let mut pending: Vec<(String, String)> = Vec::new();
    let mut paren_depth = 0usize;

    for i in 0..n {
        match tokens[i].text.as_str() {
            "(" => {
                paren_depth += 1;
                if !claimed[i] {
                    try_parameter_list(tokens, i, &mut annotations, &mut claimed, &mut pending);
                }
            }
            ")" => paren_depth = paren_depth.saturating_sub(1),
            "{" => {
                scopes.push();
                for (name, ty) in pending.drain(..) {
                    scopes.declare(name, ty);
                }
            }
            "}" => scopes.pop(),
            // An abstract/interface signature ends without a body; its
            // parameters never enter any scope.
            ";" if paren_depth == 0 => pending.clear(),
            _ => {}
        }

        if !claimed[i] {
            try_declaration(tokens, i, &mut annotations, &mut scopes);
        }

        if tokens[i].kind == TokenKind::Identifier && annotations[i].is_none() {
            if let Some(ty) = scopes.lookup(&tokens[i].text) {
                annotations[i] = Some(ty.to_string());
            }
        }
    }

    tokens
        .iter()
        .cloned()
        .zip(annotations)
        .map(|(token, resolved_type)| AnnotatedToken {
            token,
            resolved_type,
        })
        .collect()
}

/// Declaration detection starting at a type position. The follower set
/// after `Type id` distinguishes declarations (`=`, `;`, `,`, `)`, `:`)
/// from method declarations (`(`), which the parameter scan handles.
fn try_declaration(
    tokens: &[Token],
    i: usize,
    annotations: &mut [Option<String>],
    scopes: &mut ScopeTable,
) {
    let Some((ty, j)) = parse_type(tokens, i) else {
        return;
    };
    if !tokens.get(j).is_some_and(|t| t.kind == TokenKind::Identifier) {
        return;
    }
    match token_text(tokens, j + 1) {
        Some("=" | ";" | "," | ")" | ":") => {}
        _ => return,
    }

    // Walk the declarator chain: id [= init] (, id [= init])* terminated
    // by `;`, `)` or `:`.
    let mut k = j;
    loop {
        annotations[k] = Some(ty.clone());
        scopes.declare(tokens[k].text.clone(), ty.clone());

        let mut at = k + 1;
        if token_text(tokens, at) == Some("=") {
            at = skip_initializer(tokens, at + 1);
        }
        if token_text(tokens, at) != Some(",") {
            return;
        }
        let next_id = at + 1;
        let follower_ok = matches!(token_text(tokens, next_id + 1), Some("=" | "," | ";"));
        if tokens
            .get(next_id)
            .is_some_and(|t| t.kind == TokenKind::Identifier)
            && follower_ok
        {
            k = next_id;
        } else {
            return;
        }
    }
}

/// Skip an initializer expression: advance until `,` or `;` at the nesting
/// depth where the initializer began.
fn skip_initializer(tokens: &[Token], start: usize) -> usize {
    let mut depth = 0i32;
    let mut at = start;
    while let Some(text) = token_text(tokens, at) {
        match text {
            "(" | "[" | "{" => depth += 1,
            ")" | "]" | "}" => {
                if depth == 0 {
                    return at;
                }
                depth -= 1;
            }
            "," | ";" if depth == 0 => return at,
            _ => {}
        }
        at += 1;
    }
    at
}

/// Detect a method/constructor parameter list at an opening paren and stage
/// its declarations for the body scope. The whole list must parse as
/// `(Type id, ...)`; call argument lists never do.
fn try_parameter_list(
    tokens: &[Token],
    open: usize,
    annotations: &mut [Option<String>],
    claimed: &mut [bool],
    pending: &mut Vec<(String, String)>,
) {
    if open == 0 || tokens[open - 1].kind != TokenKind::Identifier {
        return;
    }
    if open >= 2 {
        let prev2 = &tokens[open - 2];
        let method_head = prev2.kind == TokenKind::Identifier
            || is_primitive_type(prev2)
            || is_modifier(prev2)
            || prev2.text == "void"
            || prev2.text == ">"
            || prev2.text == "]";
        if !method_head {
            return;
        }
    }

    let mut decls: Vec<(usize, String, String)> = Vec::new();
    let mut k = open + 1;
    let close = loop {
        if token_text(tokens, k) == Some(")") && decls.is_empty() {
            break k;
        }
        while token_text(tokens, k) == Some("final") {
            k += 1;
        }
        let Some((ty, mut after_ty)) = parse_type(tokens, k) else {
            return;
        };
        if token_text(tokens, after_ty) == Some("...") {
            after_ty += 1;
        }
        if !tokens
            .get(after_ty)
            .is_some_and(|t| t.kind == TokenKind::Identifier)
        {
            return;
        }
        decls.push((after_ty, tokens[after_ty].text.clone(), ty));
        match token_text(tokens, after_ty + 1) {
            Some(",") => k = after_ty + 2,
            Some(")") => break after_ty + 1,
            _ => return,
        }
    };

    for (idx, name, ty) in decls {
        annotations[idx] = Some(ty.clone());
        pending.push((name, ty));
    }
    for flag in claimed.iter_mut().take(close + 1).skip(open) {
        *flag = true;
    }
}

/// Rewrite annotated tokens: literals to `<type>val`, resolved identifiers
/// to `<type>var`, method names (identifier followed by `(`) and everything
/// else verbatim; every emitted text is lowercased.
pub fn regularize(tokens: &[AnnotatedToken]) -> Vec<RegularizedToken> {
    tokens
        .iter()
        .enumerate()
        .map(|(i, at)| {
            let token = &at.token;
            let (text, encoded) = match token.kind {
                TokenKind::IntLit => ("intval".to_string(), true),
                TokenKind::LongLit => ("longval".to_string(), true),
                TokenKind::FloatLit => ("floatval".to_string(), true),
                TokenKind::DoubleLit => ("doubleval".to_string(), true),
                TokenKind::CharLit => ("charval".to_string(), true),
                TokenKind::StringLit => ("stringval".to_string(), true),
                TokenKind::BoolLit | TokenKind::NullLit => (token.text.to_lowercase(), false),
                TokenKind::Identifier => {
                    let called = tokens.get(i + 1).is_some_and(|n| n.token.text == "(");
                    if called {
                        (token.text.to_lowercase(), false)
                    } else if let Some(ty) = &at.resolved_type {
                        (format!("{ty}var"), true)
                    } else {
                        (token.text.to_lowercase(), false)
                    }
                }
                _ => (token.text.to_lowercase(), false),
            };
            RegularizedToken {
                text,
                source_kind: token.kind,
                encoded,
            }
        })
        .collect()
}

/// Lex, resolve and regularize comment-free source text in one call.
pub fn regularize_source(text: &str) -> crate::Result<Vec<RegularizedToken>> {
    let tokens = crate::lexer::lex(text)?;
    let annotated = resolve_types(&tokens);
    Ok(regularize(&annotated))
}
