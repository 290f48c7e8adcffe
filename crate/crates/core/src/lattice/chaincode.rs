//! Plain-text chain codes:
//!
//! ```text
//! start <x> <y> closed <0|1>
//! <moves over 0123>
//! ```
//!
//! Both lines end with a single LF. The reader only accepts the canonical
//! layout, so `write(read(text)) == text` byte for byte.

use super::{Contour, LatticeError, LatticePoint, Move};

pub fn write_chain_code(contour: &Contour) -> String {
    let p = contour.start();
    let mut out = format!("start {} {} closed {}\n", p.x, p.y, u8::from(contour.is_closed()));
    out.extend(contour.moves().iter().map(|m| char::from(b'0' + m.code())));
    out.push('\n');
    out
}

pub fn read_chain_code(text: &str) -> Result<Contour, LatticeError> {
    let parse_err = |msg: &str| LatticeError::Parse(msg.to_string());
    let body = text.strip_suffix('\n').ok_or_else(|| parse_err("missing final newline"))?;
    let (header, moves) = body.split_once('\n').ok_or_else(|| parse_err("expected two lines"))?;
    if moves.contains('\n') {
        return Err(parse_err("expected exactly two lines"));
    }
    let fields: Vec<&str> = header.split(' ').collect();
    let [kw_start, x, y, kw_closed, closed] = fields[..] else {
        return Err(parse_err("header must be `start <x> <y> closed <0|1>`"));
    };
    if kw_start != "start" || kw_closed != "closed" {
        return Err(parse_err("header must be `start <x> <y> closed <0|1>`"));
    }
    let coord = |s: &str| -> Result<i64, LatticeError> {
        let v: i64 = s.parse().map_err(|_| parse_err("bad coordinate"))?;
        // Reject "+1", "-0", "007" and friends so that the layout is canonical.
        if v.to_string() != s {
            return Err(parse_err("non-canonical coordinate"));
        }
        Ok(v)
    };
    let start = LatticePoint::new(coord(x)?, coord(y)?);
    let closed = match closed {
        "0" => false,
        "1" => true,
        _ => return Err(parse_err("closed flag must be 0 or 1")),
    };
    let moves = moves
        .bytes()
        .map(|b| {
            b.checked_sub(b'0').and_then(Move::from_code).ok_or_else(|| parse_err("moves must be digits 0-3"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Contour::new(start, moves, closed)
}
