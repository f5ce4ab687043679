//! Text form of divisor classes: `3l-2e1-e2`, `h+3m`, `2C0+3f`, `0`.
//!
//! Whitespace is ignored, terms may come in any order and repeated basis
//! symbols are summed. Symbols must belong to the surface: `h`/`m` on the
//! quadric, `l`/`e1..er` on blow-ups, and additionally `C0`/`f` on `X^1`.

use crate::error::{Error, Result};
use crate::picard::{DivisorClass, SurfaceModel};

#[derive(Debug, Clone, Copy)]
enum Symbol {
    L,
    E(usize),
    H,
    M,
    Section,
    Fiber,
}

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        let chars = src
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        Cursor { chars, pos: 0, src }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    /// Byte offset of the current character in the original input.
    fn offset(&self) -> usize {
        self.chars
            .get(self.pos)
            .map(|&(i, _)| i)
            .unwrap_or(self.src.len())
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn number(&mut self) -> Option<std::result::Result<i64, usize>> {
        let start = self.offset();
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.pos += 1;
        }
        if digits.is_empty() {
            None
        } else {
            Some(digits.parse().map_err(|_| start))
        }
    }

    fn error<T>(&self, at: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: at,
            message: message.into(),
        })
    }
}

pub fn parse_divisor(surface: SurfaceModel, src: &str) -> Result<DivisorClass> {
    let mut cur = Cursor::new(src);
    if cur.peek().is_none() {
        return cur.error(0, "empty divisor");
    }
    let mut coeffs = vec![0i64; surface.rank()];
    let mut first = true;
    while cur.peek().is_some() {
        let term_start = cur.offset();
        let sign = match cur.peek() {
            Some('+') => {
                cur.bump();
                1
            }
            Some('-') => {
                cur.bump();
                -1
            }
            _ if first => 1,
            Some(c) => return cur.error(term_start, format!("expected `+` or `-`, found `{c}`")),
            None => unreachable!(),
        };
        first = false;
        let num_at = cur.offset();
        let coeff = match cur.number() {
            Some(Ok(n)) => Some(n),
            Some(Err(at)) => return cur.error(at, "coefficient out of range"),
            None => None,
        };
        let sym_at = cur.offset();
        let symbol = match cur.peek() {
            Some('l') => {
                cur.bump();
                Some(Symbol::L)
            }
            Some('h') => {
                cur.bump();
                Some(Symbol::H)
            }
            Some('m') => {
                cur.bump();
                Some(Symbol::M)
            }
            Some('f') => {
                cur.bump();
                Some(Symbol::Fiber)
            }
            Some('C') => {
                cur.bump();
                if cur.peek() != Some('0') {
                    return cur.error(cur.offset(), "expected `0` after `C`");
                }
                cur.bump();
                Some(Symbol::Section)
            }
            Some('e') => {
                cur.bump();
                let idx_at = cur.offset();
                match cur.number() {
                    Some(Ok(i)) => Some(Symbol::E(i as usize)),
                    Some(Err(at)) => return cur.error(at, "index out of range"),
                    None => return cur.error(idx_at, "expected an index after `e`"),
                }
            }
            Some(c) if !matches!(c, '+' | '-') => {
                return cur.error(sym_at, format!("unknown symbol `{c}`"));
            }
            _ => None,
        };
        match (coeff, symbol) {
            (Some(0), None) => {}
            (Some(_), None) => {
                return cur.error(num_at, "bare integers other than 0 are not divisor classes")
            }
            (None, None) => return cur.error(sym_at, "expected a term"),
            (c, Some(sym)) => {
                let k = sign * c.unwrap_or(1);
                apply(surface, &mut coeffs, sym, k).or_else(|msg| cur.error(sym_at, msg))?;
            }
        }
    }
    DivisorClass::new(surface, &coeffs)
}

fn apply(
    surface: SurfaceModel,
    coeffs: &mut [i64],
    sym: Symbol,
    k: i64,
) -> std::result::Result<(), String> {
    match (surface, sym) {
        (SurfaceModel::BlowUp(_), Symbol::L) => coeffs[0] += k,
        (SurfaceModel::BlowUp(r), Symbol::E(i)) if i >= 1 && i <= r as usize => coeffs[i] += k,
        (SurfaceModel::BlowUp(_), Symbol::E(i)) => {
            return Err(format!("e{i} does not exist on {surface}"))
        }
        (SurfaceModel::BlowUp(1), Symbol::Section) => coeffs[1] += k,
        (SurfaceModel::BlowUp(1), Symbol::Fiber) => {
            coeffs[0] += k;
            coeffs[1] -= k;
        }
        (SurfaceModel::Quadric, Symbol::H) => coeffs[0] += k,
        (SurfaceModel::Quadric, Symbol::M) => coeffs[1] += k,
        (_, sym) => {
            let name = match sym {
                Symbol::L => "l",
                Symbol::E(_) => "e",
                Symbol::H => "h",
                Symbol::M => "m",
                Symbol::Section => "C0",
                Symbol::Fiber => "f",
            };
            return Err(format!(
                "symbol `{name}` is not part of the basis of {surface}"
            ));
        }
    }
    Ok(())
}

/// Canonical text: basis order, unit coefficients elided, `0` for zero.
pub fn format_divisor(d: &DivisorClass) -> String {
    let names: Vec<String> = match d.surface() {
        SurfaceModel::BlowUp(r) => std::iter::once("l".to_string())
            .chain((1..=r).map(|i| format!("e{i}")))
            .collect(),
        SurfaceModel::Quadric => vec!["h".into(), "m".into()],
    };
    let mut out = String::new();
    for (&c, name) in d.coeffs().iter().zip(&names) {
        if c == 0 {
            continue;
        }
        if c < 0 {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if c.abs() != 1 {
            out.push_str(&c.abs().to_string());
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
