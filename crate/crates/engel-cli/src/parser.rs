//! Recursive-descent parser for group expressions.
//!
//! Grammar: `expr := NAME "(" INT { "," INT } ")"` with NAME one of
//! S, A, C, D, GL, SL, PSL, Sz, Frob, Ex4. Whitespace is insignificant.
//! Errors carry the byte offset of the failure and the set of tokens
//! that would have been accepted there.

use engel::catalog::Family;
use engel::GroupSpecExpr;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, fmt: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            fmt,
            "parse error at byte {}: expected {}, found {}",
            self.offset,
            self.expected.join(" or "),
            self.found
        )
    }
}

impl std::error::Error for ParseError {}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text.as_bytes()[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.text.as_bytes().get(self.pos).copied()
    }

    fn found_desc(&self) -> String {
        match self.peek() {
            Some(b) => format!("{:?}", b as char),
            None => "end of input".into(),
        }
    }

    fn err(&self, expected: &[&str]) -> ParseError {
        ParseError {
            offset: self.pos,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.found_desc(),
        }
    }

    fn expect_byte(&mut self, b: u8, desc: &str) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&[desc]))
        }
    }

    fn name(&mut self) -> Result<Family, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self
            .peek()
            .is_some_and(|b| b.is_ascii_alphanumeric() && !b.is_ascii_digit() || b == b'x')
        {
            self.pos += 1;
        }
        // family names mix letters and digits (Ex4): extend over trailing digits
        while self.peek().is_some_and(|b| b.is_ascii_digit())
            && Family::from_name(&self.text[start..self.pos]).is_none()
        {
            self.pos += 1;
        }
        let word = &self.text[start..self.pos];
        if word.is_empty() {
            return Err(self.err(&["family name"]));
        }
        Family::from_name(word).ok_or(ParseError {
            offset: start,
            expected: Family::ALL.iter().map(|f| f.name().to_string()).collect(),
            found: format!("{word:?}"),
        })
    }

    fn integer(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err(&["integer"]));
        }
        self.text[start..self.pos].parse().map_err(|_| ParseError {
            offset: start,
            expected: vec!["integer within u64 range".into()],
            found: format!("{:?}", &self.text[start..self.pos]),
        })
    }
}

pub fn parse_group_expr(text: &str) -> Result<GroupSpecExpr, ParseError> {
    let mut cur = Cursor { text, pos: 0 };
    let family = cur.name()?;
    cur.expect_byte(b'(', "\"(\"")?;
    let mut args = vec![cur.integer()?];
    loop {
        cur.skip_ws();
        match cur.peek() {
            Some(b',') => {
                cur.pos += 1;
                args.push(cur.integer()?);
            }
            Some(b')') => {
                cur.pos += 1;
                break;
            }
            _ => return Err(cur.err(&["\",\"", "\")\""])),
        }
    }
    cur.skip_ws();
    if cur.peek().is_some() {
        return Err(cur.err(&["end of input"]));
    }
    Ok(GroupSpecExpr { family, args })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_simple_expressions() {
        let e = parse_group_expr("PSL(2,11)").unwrap();
        assert_eq!(e.family, Family::Psl);
        assert_eq!(e.args, vec![2, 11]);
        let e = parse_group_expr("Ex4(7,3,19)").unwrap();
        assert_eq!(e.family, Family::Ex4);
        assert_eq!(e.args, vec![7, 3, 19]);
    }

    #[test]
    fn whitespace_is_insignificant() {
        let a = parse_group_expr("  Frob ( 19 , 6 )  ").unwrap();
        let b = parse_group_expr("Frob(19,6)").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn truncated_input_reports_offset_and_expected_set() {
        let err = parse_group_expr("A(6").unwrap_err();
        assert_eq!(err.offset, 3);
        assert!(err.expected.contains(&"\")\"".to_string()));
        assert!(err.expected.contains(&"\",\"".to_string()));
    }

    #[test]
    fn unknown_family_lists_the_known_ones() {
        let err = parse_group_expr("Q(8)").unwrap_err();
        assert_eq!(err.offset, 0);
        assert!(err.expected.contains(&"PSL".to_string()));
    }

    #[test]
    fn round_trip_print_then_parse() {
        for text in ["S(7)", "GL(2,3)", "Sz(8)", "Ex4(7,3,19)", "D(12)"] {
            let e = parse_group_expr(text).unwrap();
            assert_eq!(parse_group_expr(&e.to_string()).unwrap(), e);
            assert_eq!(e.to_string(), text);
        }
    }
}
