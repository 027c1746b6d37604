//! Reading and writing JSON documents as RFC 8259 text whose root must be an
//! object.
//!
//! The parser is strict: no comments, no trailing commas, no `NaN` or
//! `Infinity`, and numbers that overflow a double are rejected. Nesting is
//! limited to [`MAX_DEPTH`] containers.

use std::fmt::{self, Write as _};

use thiserror::Error;

use crate::json::{jarray, jdoc, jmap, JTy, JsonDoc, JsonError};

/// Deepest container nesting the parser accepts.
pub const MAX_DEPTH: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParseErrorKind {
    Syntax,
    RootNotObject,
    NumberOverflow,
    BadEscape,
    Trailing,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParseErrorKind::Syntax => "Syntax",
            ParseErrorKind::RootNotObject => "RootNotObject",
            ParseErrorKind::NumberOverflow => "NumberOverflow",
            ParseErrorKind::BadEscape => "BadEscape",
            ParseErrorKind::Trailing => "Trailing",
        })
    }
}

/// A rejected input. `offset` is a byte offset; `line` and `column` are
/// 1-based, with the column counted in characters.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at {line}:{column}: {message}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub offset: usize,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn at(input: &[u8], offset: usize, kind: ParseErrorKind, message: impl Into<String>) -> Self {
        let offset = offset.min(input.len());
        let prefix = &input[..offset];
        let line_start = prefix
            .iter()
            .rposition(|&b| b == b'\n')
            .map_or(0, |p| p + 1);
        let line = 1 + prefix.iter().filter(|&&b| b == b'\n').count();
        // UTF-8 continuation bytes do not start a character.
        let column = 1 + prefix[line_start..]
            .iter()
            .filter(|&&b| b & 0xC0 != 0x80)
            .count();
        ParseError {
            kind,
            offset,
            line,
            column,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SerializeError {
    #[error("only DOC nodes can be written, found {0}")]
    NotADocument(JTy),
    #[error("number is not finite")]
    NonFiniteNumber,
}

/// Parses a document. The top-level value must be an object.
pub fn parse(input: &str) -> Result<JsonDoc, ParseError> {
    Parser::new(input.as_bytes()).document()
}

/// Like [`parse`], but first checks that `input` is UTF-8.
pub fn parse_bytes(input: &[u8]) -> Result<JsonDoc, ParseError> {
    match std::str::from_utf8(input) {
        Ok(text) => parse(text),
        Err(e) => Err(ParseError::at(
            input,
            e.valid_up_to(),
            ParseErrorKind::Syntax,
            "invalid UTF-8",
        )),
    }
}

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
    depth: usize,
}

type PResult<T> = Result<T, ParseError>;

impl<'a> Parser<'a> {
    fn new(input: &'a [u8]) -> Self {
        Parser {
            input,
            pos: 0,
            depth: 0,
        }
    }

    fn error(&self, offset: usize, kind: ParseErrorKind, message: impl Into<String>) -> ParseError {
        ParseError::at(self.input, offset, kind, message)
    }

    fn unexpected(&self) -> ParseError {
        match self.peek() {
            None => self.error(self.pos, ParseErrorKind::Syntax, "unexpected end of input"),
            Some(_) => {
                let ch = std::str::from_utf8(&self.input[self.pos..])
                    .ok()
                    .and_then(|s| s.chars().next())
                    .unwrap_or('\u{FFFD}');
                self.error(
                    self.pos,
                    ParseErrorKind::Syntax,
                    format!("unexpected character {ch:?}"),
                )
            }
        }
    }

    fn peek(&self) -> Option<u8> {
        self.input.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while let Some(b' ' | b'\t' | b'\n' | b'\r') = self.peek() {
            self.pos += 1;
        }
    }

    fn expect(&mut self, byte: u8) -> PResult<()> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.unexpected())
        }
    }

    fn document(mut self) -> PResult<JsonDoc> {
        self.skip_ws();
        let root_start = self.pos;
        let root = self.value()?;
        self.skip_ws();
        if self.pos < self.input.len() {
            return Err(self.error(
                self.pos,
                ParseErrorKind::Trailing,
                "unexpected content after the root value",
            ));
        }
        jdoc(root).map_err(|e| match e {
            JsonError::RootNotMap(found) => self.error(
                root_start,
                ParseErrorKind::RootNotObject,
                format!("root value must be an object, found {found}"),
            ),
            other => unreachable!("jdoc only rejects non-map roots: {other}"),
        })
    }

    fn value(&mut self) -> PResult<JsonDoc> {
        match self.peek() {
            Some(b'{') => self.object(),
            Some(b'[') => self.array(),
            Some(b'"') => Ok(JsonDoc::Str(self.string()?)),
            Some(b'-' | b'0'..=b'9') => self.number(),
            Some(b't') => self.literal("true", JsonDoc::Bool(true)),
            Some(b'f') => self.literal("false", JsonDoc::Bool(false)),
            Some(b'n') => self.literal("null", JsonDoc::Null),
            _ => Err(self.unexpected()),
        }
    }

    fn literal(&mut self, word: &str, value: JsonDoc) -> PResult<JsonDoc> {
        if self.input[self.pos..].starts_with(word.as_bytes()) {
            self.pos += word.len();
            Ok(value)
        } else {
            Err(self.error(
                self.pos,
                ParseErrorKind::Syntax,
                format!("expected `{word}`"),
            ))
        }
    }

    fn enter(&mut self) -> PResult<()> {
        if self.depth == MAX_DEPTH {
            return Err(self.error(
                self.pos,
                ParseErrorKind::Syntax,
                format!("nesting deeper than {MAX_DEPTH} containers"),
            ));
        }
        self.depth += 1;
        self.pos += 1;
        Ok(())
    }

    fn array(&mut self) -> PResult<JsonDoc> {
        self.enter()?;
        let mut items = Vec::new();
        self.skip_ws();
        if self.peek() == Some(b']') {
            self.pos += 1;
        } else {
            loop {
                self.skip_ws();
                items.push(self.value()?);
                self.skip_ws();
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b']') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(self.unexpected()),
                }
            }
        }
        self.depth -= 1;
        Ok(jarray(items).expect("parsed values are never documents"))
    }

    fn object(&mut self) -> PResult<JsonDoc> {
        self.enter()?;
        let mut entries = Vec::new();
        self.skip_ws();
        if self.peek() == Some(b'}') {
            self.pos += 1;
        } else {
            loop {
                self.skip_ws();
                if self.peek() != Some(b'"') {
                    return Err(self.unexpected());
                }
                let key = self.string()?;
                self.skip_ws();
                self.expect(b':')?;
                self.skip_ws();
                let value = self.value()?;
                entries.push((key, value));
                self.skip_ws();
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b'}') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(self.unexpected()),
                }
            }
        }
        self.depth -= 1;
        Ok(jmap(entries).expect("parsed values are never documents"))
    }

    fn string(&mut self) -> PResult<String> {
        let open = self.pos;
        self.pos += 1;
        let mut out = String::new();
        let mut run_start = self.pos;
        loop {
            match self.peek() {
                None => {
                    return Err(self.error(open, ParseErrorKind::Syntax, "unterminated string"));
                }
                Some(b'"') => {
                    out.push_str(self.run(run_start));
                    self.pos += 1;
                    return Ok(out);
                }
                Some(b'\\') => {
                    out.push_str(self.run(run_start));
                    out.push(self.escape()?);
                    run_start = self.pos;
                }
                Some(b) if b < 0x20 => {
                    return Err(self.error(
                        self.pos,
                        ParseErrorKind::Syntax,
                        "unescaped control character in string",
                    ));
                }
                Some(_) => self.pos += 1,
            }
        }
    }

    fn run(&self, start: usize) -> &'a str {
        // Runs start and end at ASCII delimiters of valid UTF-8 input.
        std::str::from_utf8(&self.input[start..self.pos]).expect("input is UTF-8")
    }

    fn escape(&mut self) -> PResult<char> {
        let start = self.pos;
        self.pos += 1;
        let c = match self.peek() {
            Some(b'"') => '"',
            Some(b'\\') => '\\',
            Some(b'/') => '/',
            Some(b'b') => '\u{8}',
            Some(b'f') => '\u{c}',
            Some(b'n') => '\n',
            Some(b'r') => '\r',
            Some(b't') => '\t',
            Some(b'u') => {
                self.pos += 1;
                return self.unicode_escape(start);
            }
            None => return Err(self.error(start, ParseErrorKind::Syntax, "unterminated string")),
            Some(_) => return Err(self.error(start, ParseErrorKind::BadEscape, "invalid escape")),
        };
        self.pos += 1;
        Ok(c)
    }

    fn hex4(&mut self, start: usize) -> PResult<u32> {
        let digits = self
            .input
            .get(self.pos..self.pos + 4)
            .and_then(|d| std::str::from_utf8(d).ok())
            .filter(|d| d.bytes().all(|b| b.is_ascii_hexdigit()))
            .ok_or_else(|| {
                self.error(start, ParseErrorKind::BadEscape, "expected four hex digits")
            })?;
        let code = u32::from_str_radix(digits, 16).expect("validated hex digits");
        self.pos += 4;
        Ok(code)
    }

    fn unicode_escape(&mut self, start: usize) -> PResult<char> {
        let high = self.hex4(start)?;
        let code = match high {
            0xD800..=0xDBFF => {
                if !self.input[self.pos..].starts_with(b"\\u") {
                    return Err(self.error(start, ParseErrorKind::BadEscape, "unpaired surrogate"));
                }
                let low_start = self.pos;
                self.pos += 2;
                let low = self.hex4(low_start)?;
                if !(0xDC00..=0xDFFF).contains(&low) {
                    return Err(self.error(start, ParseErrorKind::BadEscape, "unpaired surrogate"));
                }
                0x10000 + ((high - 0xD800) << 10) + (low - 0xDC00)
            }
            0xDC00..=0xDFFF => {
                return Err(self.error(start, ParseErrorKind::BadEscape, "unpaired surrogate"));
            }
            other => other,
        };
        Ok(char::from_u32(code).expect("surrogates handled above"))
    }

    fn digits(&mut self) -> usize {
        let start = self.pos;
        while let Some(b'0'..=b'9') = self.peek() {
            self.pos += 1;
        }
        self.pos - start
    }

    fn number(&mut self) -> PResult<JsonDoc> {
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        match self.peek() {
            Some(b'0') => self.pos += 1,
            Some(b'1'..=b'9') => {
                self.digits();
            }
            _ => return Err(self.unexpected()),
        }
        if self.peek() == Some(b'.') {
            self.pos += 1;
            if self.digits() == 0 {
                return Err(self.unexpected());
            }
        }
        if let Some(b'e' | b'E') = self.peek() {
            self.pos += 1;
            if let Some(b'+' | b'-') = self.peek() {
                self.pos += 1;
            }
            if self.digits() == 0 {
                return Err(self.unexpected());
            }
        }
        let text = self.run(start);
        let value: f64 = text.parse().expect("grammar-checked number");
        if !value.is_finite() {
            return Err(self.error(
                start,
                ParseErrorKind::NumberOverflow,
                format!("number {text} is out of range"),
            ));
        }
        Ok(JsonDoc::Num(value))
    }
}

/// Writes a document as JSON text.
///
/// Compact output has no whitespace between tokens. Pretty output puts each
/// member on its own line, indented by two spaces per level.
pub fn serialize(doc: &JsonDoc, pretty: bool) -> Result<String, SerializeError> {
    let JsonDoc::Doc(document) = doc else {
        return Err(SerializeError::NotADocument(doc.jty()));
    };
    let mut out = String::new();
    Writer {
        out: &mut out,
        pretty,
    }
    .node(document.body(), 0)?;
    Ok(out)
}

struct Writer<'o> {
    out: &'o mut String,
    pretty: bool,
}

impl Writer<'_> {
    fn newline(&mut self, level: usize) {
        if self.pretty {
            self.out.push('\n');
            for _ in 0..level {
                self.out.push_str("  ");
            }
        }
    }

    fn node(&mut self, node: &JsonDoc, level: usize) -> Result<(), SerializeError> {
        match node {
            JsonDoc::Null => self.out.push_str("null"),
            JsonDoc::Bool(b) => self.out.push_str(if *b { "true" } else { "false" }),
            JsonDoc::Num(n) => self.out.push_str(&format_number(*n)?),
            JsonDoc::Str(s) => write_string(self.out, s),
            JsonDoc::Array(items) => {
                self.out.push('[');
                for (k, item) in items.iter().enumerate() {
                    if k > 0 {
                        self.out.push(',');
                    }
                    self.newline(level + 1);
                    self.node(item, level + 1)?;
                }
                if !items.is_empty() {
                    self.newline(level);
                }
                self.out.push(']');
            }
            JsonDoc::Map(entries) => {
                self.out.push('{');
                for (k, entry) in entries.iter().enumerate() {
                    if k > 0 {
                        self.out.push(',');
                    }
                    self.newline(level + 1);
                    write_string(self.out, &entry.key);
                    self.out.push_str(if self.pretty { ": " } else { ":" });
                    self.node(&entry.value, level + 1)?;
                }
                if !entries.is_empty() {
                    self.newline(level);
                }
                self.out.push('}');
            }
            JsonDoc::Doc(_) => unreachable!("documents never nest"),
        }
        Ok(())
    }
}

/// Shortest text that parses back to the same double. Plain decimal
/// notation for magnitudes in `[1e-6, 1e21)`, exponent notation otherwise.
pub fn format_number(n: f64) -> Result<String, SerializeError> {
    if !n.is_finite() {
        return Err(SerializeError::NonFiniteNumber);
    }
    let magnitude = n.abs();
    if magnitude == 0.0 || (1e-6..1e21).contains(&magnitude) {
        Ok(format!("{n}"))
    } else {
        Ok(format!("{n:e}"))
    }
}

fn write_string(out: &mut String, s: &str) {
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            '\u{8}' => out.push_str("\\b"),
            '\u{c}' => out.push_str("\\f"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
}
