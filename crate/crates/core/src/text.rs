//! Text formats for braids and elements.
//!
//! Element files have three lines:
//!
//! ```text
//! T: (()(()()))
//! B: s1 S2
//! Tb: ((()())())
//! ```
//!
//! The `B:` line holds `id`, an Artin word (`sK` is `s_K`, `SK` its inverse),
//! or a normal form as printed by the library, `D^p | 2 3 1 ; 2 1 3`. The
//! strand count is the leaf count of the top tree. Blank lines and lines
//! starting with `#` are skipped.

use crate::braids::{BraidWord, Letter, Permutation, SimpleBraid};
use crate::bv::BVElement;
use crate::error::{Error, Result};
use crate::trees::BinaryTree;

/// Parses an Artin word such as `s1 S2 s1`, or `id`.
pub fn parse_artin(n: usize, text: &str) -> Result<BraidWord> {
    let mut word = Vec::new();
    let mut column = 1;
    for raw in text.split(' ') {
        let start = column;
        column += raw.chars().count() + 1;
        let token = raw.trim();
        if token.is_empty() || token == "id" {
            continue;
        }
        let (sign, digits) = if let Some(d) = token.strip_prefix('s') {
            (1i64, d)
        } else if let Some(d) = token.strip_prefix('S') {
            (-1, d)
        } else {
            return Err(Error::parse(
                start,
                format!("expected sK or SK, found '{token}'"),
            ));
        };
        let k: usize = digits
            .parse()
            .map_err(|_| Error::parse(start + 1, format!("bad generator index '{digits}'")))?;
        if k == 0 || k >= n {
            return Err(Error::parse(
                start + 1,
                format!("generator s{k} does not exist on {n} strands"),
            ));
        }
        word.push(sign * k as i64);
    }
    BraidWord::from_artin(n, &word)
}

/// Parses the normal-form notation `D^p | perm ; perm ; ...` into the word it
/// spells. The factors need not be right-weighted.
pub fn parse_normal_form(n: usize, text: &str) -> Result<BraidWord> {
    let Some(rest) = text.trim_start().strip_prefix("D^") else {
        return Err(Error::parse(1, "normal form must start with D^"));
    };
    let offset = text.len() - rest.len();
    let Some(bar) = rest.find('|') else {
        return Err(Error::parse(
            offset + 1,
            "missing '|' after the half-twist power",
        ));
    };
    let power: i64 = rest[..bar]
        .trim()
        .parse()
        .map_err(|_| Error::parse(offset + 1, "bad half-twist power"))?;
    let mut letters = Vec::new();
    let delta = SimpleBraid::delta(n);
    for _ in 0..power.unsigned_abs() {
        letters.push(if power > 0 {
            Letter::pos(delta.clone())
        } else {
            Letter::neg(delta.clone())
        });
    }
    let mut column = offset + bar + 2;
    for chunk in rest[bar + 1..].split(';') {
        let start = column;
        column += chunk.len() + 1;
        if chunk.trim().is_empty() {
            continue;
        }
        let images = chunk
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::parse(start, "factor must be a list of integers"))?;
        if images.len() != n {
            return Err(Error::parse(
                start,
                format!(
                    "factor has {} entries but the braid has {n} strands",
                    images.len()
                ),
            ));
        }
        let perm = Permutation::from_one_line(&images)
            .map_err(|_| Error::parse(start, "factor is not a permutation"))?;
        letters.push(Letter::pos(SimpleBraid::from_permutation(perm)));
    }
    BraidWord::new(n, letters)
}

/// Parses any braid notation accepted on a `B:` line.
pub fn parse_braid(n: usize, text: &str) -> Result<BraidWord> {
    if text.trim_start().starts_with("D^") {
        parse_normal_form(n, text)
    } else {
        parse_artin(n, text)
    }
}

/// Parses the three-line element format and reduces the triple.
pub fn parse_element(text: &str) -> Result<BVElement> {
    let mut fields: [Option<(usize, usize, &str)>; 3] = [None, None, None];
    for (lineno, line) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let trimmed = line.trim_start();
        let indent = line.len() - trimmed.len();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (slot, key) = if trimmed.starts_with("Tb:") {
            (2, "Tb:")
        } else if trimmed.starts_with("T:") {
            (0, "T:")
        } else if trimmed.starts_with("B:") {
            (1, "B:")
        } else {
            return Err(Error::Parse {
                line: lineno,
                column: indent + 1,
                message: "expected a line starting with T:, B: or Tb:".into(),
            });
        };
        if fields[slot].is_some() {
            return Err(Error::Parse {
                line: lineno,
                column: indent + 1,
                message: format!("duplicate {key} line"),
            });
        }
        fields[slot] = Some((lineno, indent + key.len(), &trimmed[key.len()..]));
    }
    let names = ["T:", "B:", "Tb:"];
    let last_line = text.lines().count().max(1);
    let mut get = |k: usize| {
        fields[k].take().ok_or_else(|| Error::Parse {
            line: last_line,
            column: 1,
            message: format!("missing {} line", names[k]),
        })
    };
    let (tl, tc, ttext) = get(0)?;
    let (bl, bc, btext) = get(1)?;
    let (ul, uc, utext) = get(2)?;
    let top = BinaryTree::from_parens(ttext).map_err(|e| e.at_line(tl, tc))?;
    let bot = BinaryTree::from_parens(utext).map_err(|e| e.at_line(ul, uc))?;
    let n = top.leaf_count();
    if bot.leaf_count() != n {
        return Err(Error::Parse {
            line: ul,
            column: uc + 1,
            message: format!(
                "bottom tree has {} leaves, top tree has {n}",
                bot.leaf_count()
            ),
        });
    }
    let braid = parse_braid(n, btext).map_err(|e| e.at_line(bl, bc))?;
    BVElement::from_parts(top, braid, bot)
}

/// Element format with the braid spelled as an Artin word.
pub fn format_element_artin(e: &BVElement) -> String {
    format!(
        "T: {}\nB: {}\nTb: {}",
        e.top(),
        e.braid().to_word(),
        e.bot()
    )
}
