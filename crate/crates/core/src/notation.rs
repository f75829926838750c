//! Text grammars shared by the CLI and the JSON output.
//!
//! ```text
//! weight   := "[" coord ("," coord)* "]" | "(" coord ("," coord)* ")"
//! coord    := integer | odd "/2"
//! weights  := "[" weight ("," weight)* "]"          repeated entries add up
//! caseB    := "(" integer "," weight ")"            S¹ character, sp(n) weight
//! centerA  := "(" matrix | "0" "," rational ")"      complex entries, e.g. 1-2i
//! centerB  := "(" matrix | "0" "," quaternion ")"    e.g. (0, i+j)
//! centerC  := combination of e1..e7                  e.g. e1-3/2e4
//! ```

use num_complex::Complex;
use num_traits::One;

use crate::error::{Error, Result};
use crate::nilpotent::{CaseAlgebra, CenterElement, Octonion, Quaternion};
use crate::rational::{self, Rational};
use crate::weights::{AlgebraType, Decomposition, HighestWeight};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Splits on `sep` outside any brackets or parentheses.
pub fn split_top(text: &str, sep: char) -> Result<Vec<&str>> {
    let mut depth = 0i32;
    let mut start = 0;
    let mut parts = Vec::new();
    for (i, c) in text.char_indices() {
        match c {
            '[' | '(' => depth += 1,
            ']' | ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(parse_err(format!("unbalanced brackets in {text:?}")));
                }
            }
            c if c == sep && depth == 0 => {
                parts.push(&text[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(parse_err(format!("unbalanced brackets in {text:?}")));
    }
    parts.push(&text[start..]);
    Ok(parts)
}

/// Strips one pair of enclosing `[..]` or `(..)`.
fn unwrap_group(text: &str) -> Option<(char, &str)> {
    let t = text.trim();
    let open = t.chars().next()?;
    let close = match open {
        '[' => ']',
        '(' => ')',
        _ => return None,
    };
    let inner = t.strip_prefix(open)?.strip_suffix(close)?;
    // reject "(1)+(2)" style inputs whose first group closes early
    split_top(inner, ',').ok()?;
    Some((open, inner))
}

fn parse_coord2(text: &str) -> Result<i64> {
    let t = text.trim();
    let bad = || parse_err(format!("bad weight coordinate {t:?}"));
    match t.split_once('/') {
        Some((num, "2")) => {
            let n: i64 = num.trim().parse().map_err(|_| bad())?;
            if n.rem_euclid(2) != 1 {
                return Err(parse_err(format!("{t:?} is not in lowest terms")));
            }
            Ok(n)
        }
        Some(_) => Err(bad()),
        None => t.parse::<i64>().map(|n| 2 * n).map_err(|_| bad()),
    }
}

/// Parses a weight literal and checks dominance.
pub fn parse_weight(algebra: AlgebraType, text: &str) -> Result<HighestWeight> {
    let (_, inner) = unwrap_group(text)
        .ok_or_else(|| parse_err(format!("expected [..] weight, got {text:?}")))?;
    let coords: Vec<i64> = if inner.trim().is_empty() {
        Vec::new()
    } else {
        split_top(inner, ',')?
            .into_iter()
            .map(parse_coord2)
            .collect::<Result<_>>()?
    };
    if coords.len() != algebra.rank() {
        return Err(parse_err(format!(
            "{algebra} weights have {} coordinates, got {}",
            algebra.rank(),
            coords.len()
        )));
    }
    let w = HighestWeight::new(algebra, coords)?;
    w.ensure_dominant()?;
    Ok(w)
}

/// Parses `[(1,1,1),(2,1,0)]` as a decomposition with unit multiplicities.
pub fn parse_weight_list(algebra: AlgebraType, text: &str) -> Result<Decomposition> {
    let (_, inner) = unwrap_group(text)
        .ok_or_else(|| parse_err(format!("expected a weight list, got {text:?}")))?;
    let mut out = Decomposition::new(algebra);
    for item in split_top(inner, ',')? {
        if item.trim().is_empty() {
            return Err(parse_err(format!("empty entry in {text:?}")));
        }
        out.add(parse_weight(algebra, item)?, 1)?;
    }
    Ok(out)
}

/// Parses the case B label `(r, [η])`.
pub fn parse_case_b_tau(n: usize, text: &str) -> Result<(i64, HighestWeight)> {
    let (_, inner) =
        unwrap_group(text).ok_or_else(|| parse_err(format!("expected (r, [..]), got {text:?}")))?;
    let parts = split_top(inner, ',')?;
    let [r, eta] = parts.as_slice() else {
        return Err(parse_err(format!("expected (r, [..]), got {text:?}")));
    };
    let r: i64 = r
        .trim()
        .parse()
        .map_err(|_| parse_err(format!("bad character index {r:?}")))?;
    let algebra = AlgebraType::new(crate::weights::Family::C, n)?;
    Ok((r, parse_weight(algebra, eta)?))
}

/// Parses a real linear combination of named units, e.g. `2i-3/2k` or
/// `e1+e4`. The empty unit name stands for a bare scalar.
pub fn parse_combination(text: &str, units: &[&str]) -> Result<Vec<Rational>> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(parse_err("empty expression"));
    }
    let mut out = vec![rational::zero(); units.len()];
    let mut terms = Vec::new();
    let mut start = 0;
    for (i, c) in t.char_indices() {
        if (c == '+' || c == '-') && i > start {
            terms.push(&t[start..i]);
            start = i;
        }
    }
    terms.push(&t[start..]);

    // longest unit names first so that e.g. "e1" is not read as "1"
    let mut by_len: Vec<(usize, &str)> = units
        .iter()
        .copied()
        .enumerate()
        .filter(|(_, u)| !u.is_empty())
        .collect();
    by_len.sort_by_key(|(_, u)| std::cmp::Reverse(u.len()));
    let scalar = units.iter().position(|u| u.is_empty());

    for term in terms {
        let (neg, body) = match term.as_bytes()[0] {
            b'-' => (true, &term[1..]),
            b'+' => (false, &term[1..]),
            _ => (false, term),
        };
        if body.is_empty() {
            return Err(parse_err(format!("dangling sign in {text:?}")));
        }
        let hit = by_len.iter().find(|(_, u)| {
            body.strip_suffix(u).is_some_and(|c| {
                c.is_empty() || c.ends_with('*') || c.ends_with(|ch: char| ch.is_ascii_digit())
            })
        });
        let (slot, coeff) = match hit {
            Some(&(slot, u)) => (slot, body[..body.len() - u.len()].trim_end_matches('*')),
            None => (
                scalar.ok_or_else(|| parse_err(format!("unknown term {term:?} in {text:?}")))?,
                body,
            ),
        };
        let mut value = if coeff.is_empty() {
            Rational::one()
        } else {
            rational::parse(coeff)?
        };
        if neg {
            value = -value;
        }
        out[slot] += value;
    }
    Ok(out)
}

pub fn parse_quaternion(text: &str) -> Result<Quaternion> {
    let c = parse_combination(text, &["", "i", "j", "k"])?;
    Ok(Quaternion(std::array::from_fn(|t| c[t].clone())))
}

pub fn parse_octonion(text: &str) -> Result<Octonion> {
    let c = parse_combination(text, &["", "e1", "e2", "e3", "e4", "e5", "e6", "e7"])?;
    Ok(Octonion(std::array::from_fn(|t| c[t].clone())))
}

fn parse_gaussian(text: &str) -> Result<Complex<Rational>> {
    let c = parse_combination(text, &["", "i"])?;
    Ok(Complex::new(c[0].clone(), c[1].clone()))
}

fn parse_matrix<T>(
    text: &str,
    size: usize,
    entry: impl Fn(&str) -> Result<T>,
    zero: impl Fn() -> T,
) -> Result<Vec<Vec<T>>>
where
    T: Clone,
{
    if text.trim() == "0" {
        return Ok(vec![vec![zero(); size]; size]);
    }
    let (_, inner) =
        unwrap_group(text).ok_or_else(|| parse_err(format!("expected a matrix, got {text:?}")))?;
    let rows = split_top(inner, ',')?;
    if rows.len() != size {
        return Err(parse_err(format!(
            "expected {size} rows, got {}",
            rows.len()
        )));
    }
    rows.into_iter()
        .map(|row| {
            let (_, cells) =
                unwrap_group(row).ok_or_else(|| parse_err(format!("bad matrix row {row:?}")))?;
            let cells = split_top(cells, ',')?;
            if cells.len() != size {
                return Err(parse_err(format!(
                    "expected {size} entries per row, got {}",
                    cells.len()
                )));
            }
            cells.into_iter().map(&entry).collect()
        })
        .collect()
}

/// Parses a center element in the grammar of its case and validates it.
pub fn parse_center(case: &CaseAlgebra, text: &str) -> Result<CenterElement> {
    let x = match *case {
        CaseAlgebra::A { n } => {
            let (m, s) = pair(text)?;
            CenterElement::A {
                wedge: parse_matrix(m, 2 * n, parse_gaussian, || {
                    Complex::new(rational::zero(), rational::zero())
                })?,
                s: rational::parse(s)?,
            }
        }
        CaseAlgebra::B { n } => {
            let (m, q) = pair(text)?;
            CenterElement::B {
                herm: parse_matrix(m, n, parse_quaternion, Quaternion::zero)?,
                q: parse_quaternion(q)?,
            }
        }
        CaseAlgebra::C => CenterElement::C {
            z: parse_octonion(text)?,
        },
    };
    case.validate_center(&x)?;
    Ok(x)
}

fn pair(text: &str) -> Result<(&str, &str)> {
    let (open, inner) = unwrap_group(text)
        .ok_or_else(|| parse_err(format!("expected (matrix, value), got {text:?}")))?;
    if open != '(' {
        return Err(parse_err(format!("expected (matrix, value), got {text:?}")));
    }
    match split_top(inner, ',')?.as_slice() {
        [a, b] => Ok((a.trim(), b.trim())),
        _ => Err(parse_err(format!("expected two components in {text:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn alg(s: &str) -> AlgebraType {
        s.parse().unwrap()
    }

    #[test]
    fn weights() {
        let w = parse_weight(alg("D3"), "[2,1,0]").unwrap();
        assert_eq!(w.coords2(), &[4, 2, 0]);
        let s = parse_weight(alg("B3"), "[3/2, 1/2, 1/2]").unwrap();
        assert_eq!(s.coords2(), &[3, 1, 1]);
        assert_eq!(
            parse_weight(alg("D3"), "(1,1,-1)").unwrap().coords2(),
            &[2, 2, -2]
        );
        assert_eq!(
            parse_weight(alg("C2"), "[1,2]").unwrap_err().code(),
            "E_NOT_DOMINANT"
        );
        assert_eq!(
            parse_weight(alg("C2"), "[1]").unwrap_err().code(),
            "E_PARSE"
        );
        assert_eq!(
            parse_weight(alg("C2"), "[1,x]").unwrap_err().code(),
            "E_PARSE"
        );
        assert_eq!(
            parse_weight(alg("B3"), "[2/4,0,0]").unwrap_err().code(),
            "E_PARSE"
        );
        assert_eq!(
            parse_weight(alg("C1"), "[1/2]").unwrap_err().code(),
            "E_NOT_DOMINANT"
        );
    }

    #[test]
    fn weight_lists() {
        let d = parse_weight_list(alg("D3"), "[(1,1,1),(2,1,0),(1,1,1)]").unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(
            d.multiplicity(&parse_weight(alg("D3"), "[1,1,1]").unwrap()),
            2
        );
        assert!(parse_weight_list(alg("D3"), "[(1,1,1),]").is_err());
    }

    #[test]
    fn case_b_labels() {
        let (r, eta) = parse_case_b_tau(2, "(3, [0,0])").unwrap();
        assert_eq!(r, 3);
        assert!(eta.is_trivial());
        assert_eq!(parse_case_b_tau(1, "(-2, [2])").unwrap().0, -2);
    }

    #[test]
    fn combinations() {
        assert_eq!(
            parse_quaternion("i+j").unwrap(),
            Quaternion::from_ints(0, 1, 1, 0)
        );
        assert_eq!(
            parse_quaternion("-3/2k + 2").unwrap(),
            Quaternion::new(int(2), int(0), int(0), ratio(-3, 2))
        );
        let o = parse_octonion("e1-2*e7").unwrap();
        assert_eq!(o.0[1], int(1));
        assert_eq!(o.0[7], int(-2));
        assert!(parse_quaternion("2x").is_err());
        assert!(parse_quaternion("i+").is_err());
    }

    #[test]
    fn centers() {
        let b = CaseAlgebra::B { n: 1 };
        assert_eq!(
            parse_center(&b, "(0, j)").unwrap(),
            CenterElement::case_b_imaginary(1, Quaternion::j())
        );
        assert_eq!(
            parse_center(&b, "(0, 1+j)").unwrap_err().code(),
            "E_INVALID_ELEMENT"
        );
        let a = CaseAlgebra::A { n: 1 };
        let x = parse_center(&a, "([[0,1+i],[-1-i,0]], 1/2)").unwrap();
        assert_eq!(
            x,
            CenterElement::case_a_from_upper(1, &[(0, 1, 1, 1)], ratio(1, 2))
        );
        assert_eq!(
            parse_center(&a, "([[0,1],[1,0]], 0)").unwrap_err().code(),
            "E_INVALID_ELEMENT"
        );
        let c = parse_center(&CaseAlgebra::C, "e1").unwrap();
        assert_eq!(c, CenterElement::case_c(Octonion::unit(1)));
        assert_eq!(
            parse_center(&CaseAlgebra::C, "1+e1").unwrap_err().code(),
            "E_INVALID_ELEMENT"
        );
    }
}
