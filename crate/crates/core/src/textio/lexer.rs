use crate::error::{Error, Result, SourceSpan};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    /// Decimal digits, kept as text so coefficients can be reduced without overflow.
    Int(String),
    Sym(&'static str),
}

#[derive(Debug, Clone)]
pub(crate) struct Token {
    pub tok: Tok,
    pub span: SourceSpan,
}

const SYMBOLS: [&str; 13] = ["=>", "*", "^", "+", "-", "(", ")", "=", "&", ",", "[", "]", "."];

/// Splits `text` into tokens. `line` and `column` locate its first character.
pub(crate) fn tokenize(text: &str, line: usize, column: usize) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut col) = (line, column);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            i += 1;
            continue;
        }
        let start = i;
        let tok = if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            Tok::Ident(chars[start..i].iter().collect())
        } else if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            Tok::Int(chars[start..i].iter().collect())
        } else if let Some(sym) =
            SYMBOLS.iter().find(|s| s.chars().zip(&chars[i..]).filter(|(a, b)| a == *b).count() == s.len())
        {
            i += sym.len();
            Tok::Sym(sym)
        } else {
            return Err(Error::Parse {
                span: SourceSpan::new(line, col, 1),
                expected: "a variable, an integer or one of * ^ + - ( ) = & =>".into(),
            });
        };
        let len = i - start;
        out.push(Token { tok, span: SourceSpan::new(line, col, len) });
        col += len;
    }
    Ok(out)
}

/// Residue of a decimal literal mod `p`, digit by digit.
pub(crate) fn reduce_decimal(digits: &str, p: u32) -> u32 {
    digits.bytes().fold(0u64, |acc, d| (acc * 10 + u64::from(d - b'0')) % u64::from(p)) as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spans_track_lines_and_columns() {
        let toks = tokenize("x*y^-1\n => y", 1, 1).unwrap();
        let kinds: Vec<Tok> = toks.iter().map(|t| t.tok.clone()).collect();
        assert_eq!(
            kinds,
            vec![
                Tok::Ident("x".into()),
                Tok::Sym("*"),
                Tok::Ident("y".into()),
                Tok::Sym("^"),
                Tok::Sym("-"),
                Tok::Int("1".into()),
                Tok::Sym("=>"),
                Tok::Ident("y".into()),
            ]
        );
        assert_eq!(toks[6].span, SourceSpan::new(2, 2, 2));
    }

    #[test]
    fn stray_characters_are_reported() {
        let err = tokenize("x ∘ y", 3, 1).unwrap_err();
        assert_eq!(err.span(), Some(SourceSpan::new(3, 3, 1)));
    }

    #[test]
    fn huge_literals_reduce() {
        assert_eq!(reduce_decimal("100000000000000000000000000001", 7), ((10u128.pow(29) + 1) % 7) as u32);
    }
}
