use super::{Crossing, LinkDiagram, PdCode};
use crate::error::{Error, Result};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn expect(&mut self, byte: u8) -> Result<()> {
        match self.peek() {
            Some(b) if b == byte => {
                self.pos += 1;
                Ok(())
            }
            Some(b) => Err(self.err(format!("expected '{}', found '{}'", byte as char, b as char))),
            None => Err(self.err(format!("expected '{}', found end of input", byte as char))),
        }
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn label(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a positive integer label"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        match text.parse::<u32>() {
            Ok(0) => Err(Error::Syntax { pos: start, msg: "arc label 0 is not positive".into() }),
            Ok(v) => Ok(v),
            Err(_) => Err(Error::Syntax { pos: start, msg: format!("label {text} out of range") }),
        }
    }

    fn crossing(&mut self) -> Result<Crossing> {
        self.expect(b'X')?;
        self.expect(b'[')?;
        let mut x = [0; 4];
        for (i, slot) in x.iter_mut().enumerate() {
            if i > 0 {
                self.expect(b',')?;
            }
            *slot = self.label()?;
        }
        self.expect(b']')?;
        Ok(x)
    }
}

/// Parses `X[a,b,c,d] X[..] ...` or the census form `PD[X[..],X[..]]`.
pub fn parse_pd(text: &str) -> Result<LinkDiagram> {
    let mut cur = Cursor { src: text.as_bytes(), pos: 0 };
    let mut crossings = Vec::new();
    let wrapped = if cur.peek() == Some(b'P') {
        cur.pos += 1;
        cur.expect(b'D')?;
        cur.expect(b'[')?;
        true
    } else {
        false
    };
    loop {
        match cur.peek() {
            Some(b'X') => crossings.push(cur.crossing()?),
            Some(b']') if wrapped => {
                cur.pos += 1;
                break;
            }
            None if !wrapped => break,
            None => return Err(cur.err("unterminated PD[")),
            Some(b) => return Err(cur.err(format!("unexpected '{}'", b as char))),
        }
        cur.eat(b',');
    }
    if cur.peek().is_some() {
        return Err(cur.err("trailing input"));
    }
    Ok(LinkDiagram::new(PdCode::new(crossings)?, 0))
}
