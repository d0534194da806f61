//! Session files: `key=value;` statements with `#` line comments.
//!
//! Required keys are `p`, `vars` and `f`. Optional keys are `command`,
//! `seed`, `probes`, `max_deg`, `count` and `budget`. Printing a parsed spec
//! yields text that parses back to an equal spec.

use std::fmt;
use std::str::FromStr;

use frobsplit_core::field::is_prime;
use frobsplit_core::{Limits, PolyRing, Polynomial, Ring};

use crate::parse::{parse_polynomial_in, ParseError, ParseErrorKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Enumerate,
    Probe,
}

impl Command {
    fn as_str(self) -> &'static str {
        match self {
            Command::Enumerate => "enumerate",
            Command::Probe => "probe",
        }
    }
}

impl FromStr for Command {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "enumerate" => Ok(Command::Enumerate),
            "probe" => Ok(Command::Probe),
            _ => Err("expected `enumerate` or `probe`".into()),
        }
    }
}

/// Which members a reported count covers. Member lists always hold every
/// member with its flags.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum CountConvention {
    #[default]
    All,
    ProperNonzero,
}

impl CountConvention {
    pub fn as_str(self) -> &'static str {
        match self {
            CountConvention::All => "all",
            CountConvention::ProperNonzero => "proper-nonzero",
        }
    }
}

impl FromStr for CountConvention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "all" => Ok(CountConvention::All),
            "proper-nonzero" => Ok(CountConvention::ProperNonzero),
            _ => Err("expected `all` or `proper-nonzero`".into()),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SessionOptions {
    pub command: Option<Command>,
    pub seed: Option<u64>,
    pub probes: Option<usize>,
    pub max_deg: Option<u32>,
    pub count: Option<CountConvention>,
    /// Pair-reduction limit for Gröbner computations.
    pub budget: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SessionSpec {
    pub p: u64,
    pub vars: Vec<String>,
    /// Source text of `f`, trimmed.
    pub f: String,
    pub options: SessionOptions,
}

impl SessionSpec {
    /// Default limits with the session's `budget` applied.
    pub fn limits(&self) -> Limits {
        let mut limits = Limits::default();
        if let Some(b) = self.options.budget {
            limits.max_pair_reductions = b;
        }
        limits
    }

    pub fn ring(&self) -> Ring {
        self.ring_with(self.limits())
    }

    pub fn ring_with(&self, limits: Limits) -> Ring {
        let names: Vec<&str> = self.vars.iter().map(String::as_str).collect();
        PolyRing::grevlex(self.p, &names).expect("validated at parse time").with_limits(limits)
    }

    pub fn polynomial(&self, ring: &Ring) -> Polynomial {
        parse_polynomial_in(ring, &self.f, 0, &self.f).expect("validated at parse time")
    }
}

impl fmt::Display for SessionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={}; vars={}; f={};", self.p, self.vars.join(","), self.f)?;
        let o = &self.options;
        if let Some(c) = o.command {
            write!(f, " command={};", c.as_str())?;
        }
        if let Some(s) = o.seed {
            write!(f, " seed={s};")?;
        }
        if let Some(n) = o.probes {
            write!(f, " probes={n};")?;
        }
        if let Some(d) = o.max_deg {
            write!(f, " max_deg={d};")?;
        }
        if let Some(c) = o.count {
            write!(f, " count={};", c.as_str())?;
        }
        if let Some(b) = o.budget {
            write!(f, " budget={b};")?;
        }
        Ok(())
    }
}

impl FromStr for SessionSpec {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_session(s)
    }
}

struct Statement<'a> {
    key: &'a str,
    key_at: usize,
    value: &'a str,
    value_at: usize,
}

fn statements(source: &str) -> Result<Vec<Statement<'_>>, ParseError> {
    let mut masked = String::with_capacity(source.len());
    let mut in_comment = false;
    for c in source.chars() {
        match c {
            '#' => in_comment = true,
            '\n' => in_comment = false,
            _ => {}
        }
        if in_comment {
            masked.extend(std::iter::repeat_n(' ', c.len_utf8()));
        } else {
            masked.push(c);
        }
    }
    let mut out = Vec::new();
    let mut start = 0;
    for chunk in masked.split(';') {
        let chunk_at = start;
        start += chunk.len() + 1;
        if chunk.trim().is_empty() {
            continue;
        }
        let Some(eq) = chunk.find('=') else {
            let lead = chunk.len() - chunk.trim_start().len();
            return Err(ParseError::at(source, chunk_at + lead, ParseErrorKind::Syntax("expected `key=value`".into())));
        };
        let raw_key = &chunk[..eq];
        let raw_value = &chunk[eq + 1..];
        let key_lead = raw_key.len() - raw_key.trim_start().len();
        let value_lead = raw_value.len() - raw_value.trim_start().len();
        out.push(Statement {
            key: &source[chunk_at + key_lead..chunk_at + key_lead + raw_key.trim().len()],
            key_at: chunk_at + key_lead,
            value: &source[chunk_at + eq + 1 + value_lead..chunk_at + eq + 1 + value_lead + raw_value.trim().len()],
            value_at: chunk_at + eq + 1 + value_lead,
        });
    }
    if masked.trim_end().ends_with(|c| c != ';') {
        let end = masked.trim_end().len();
        return Err(ParseError::at(source, end, ParseErrorKind::Syntax("expected `;`".into())));
    }
    Ok(out)
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parses and validates a session. `f` is parsed in the declared ring, so
/// unknown variables are reported here.
pub fn parse_session(source: &str) -> Result<SessionSpec, ParseError> {
    let stmts = statements(source)?;
    let mut p = None;
    let mut vars: Option<(Vec<String>, usize)> = None;
    let mut f: Option<&Statement> = None;
    let mut options = SessionOptions::default();
    let mut seen: Vec<&str> = Vec::new();

    for st in &stmts {
        if seen.contains(&st.key) {
            return Err(ParseError::at(
                source,
                st.key_at,
                ParseErrorKind::Syntax(format!("duplicate key `{}`", st.key)),
            ));
        }
        seen.push(st.key);
        let invalid = |reason: String| {
            ParseError::at(source, st.value_at, ParseErrorKind::InvalidValue { key: st.key.to_string(), reason })
        };
        fn number<T: FromStr>(st: &Statement, invalid: impl Fn(String) -> ParseError) -> Result<T, ParseError> {
            st.value.parse().map_err(|_| invalid(format!("`{}` is not a valid number", st.value)))
        }
        match st.key {
            "p" => {
                let value: u64 = number(st, invalid)?;
                if !is_prime(value) {
                    return Err(ParseError::at(source, st.value_at, ParseErrorKind::NotPrime(value)));
                }
                p = Some(value);
            }
            "vars" => {
                let mut names: Vec<String> = Vec::new();
                for name in st.value.split(',').map(str::trim) {
                    if !is_identifier(name) {
                        return Err(invalid(format!("`{name}` is not an identifier")));
                    }
                    if names.iter().any(|n| n == name) {
                        return Err(invalid(format!("`{name}` is repeated")));
                    }
                    names.push(name.to_string());
                }
                vars = Some((names, st.value_at));
            }
            "f" => f = Some(st),
            "command" => options.command = Some(st.value.parse().map_err(invalid)?),
            "seed" => options.seed = Some(number(st, invalid)?),
            "probes" => options.probes = Some(number(st, invalid)?),
            "max_deg" => options.max_deg = Some(number(st, invalid)?),
            "count" => options.count = Some(st.value.parse().map_err(invalid)?),
            "budget" => options.budget = Some(number(st, invalid)?),
            other => {
                return Err(ParseError::at(source, st.key_at, ParseErrorKind::Syntax(format!("unknown key `{other}`"))))
            }
        }
    }

    let missing = |key: &str| ParseError::at(source, source.len(), ParseErrorKind::Syntax(format!("missing `{key}=`")));
    let p = p.ok_or_else(|| missing("p"))?;
    let (vars, vars_at) = vars.ok_or_else(|| missing("vars"))?;
    let f = f.ok_or_else(|| missing("f"))?;
    let names: Vec<&str> = vars.iter().map(String::as_str).collect();
    let ring = PolyRing::grevlex(p, &names).map_err(|e| {
        ParseError::at(source, vars_at, ParseErrorKind::InvalidValue { key: "vars".into(), reason: e.to_string() })
    })?;
    parse_polynomial_in(&ring, source, f.value_at, f.value)?;
    Ok(SessionSpec { p, vars, f: f.value.to_string(), options })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_sessions() {
        let s = parse_session("p=2; vars=x,y; f=x*y;").unwrap();
        assert_eq!((s.p, s.vars.len(), s.f.as_str()), (2, 2, "x*y"));
        let s = parse_session("p=7; vars=x,y,z; f=6*(x^3+y^3+z^3)^6;").unwrap();
        assert_eq!(s.polynomial(&s.ring()).total_degree(), Some(18));
    }

    #[test]
    fn not_prime() {
        let e = parse_session("p=4; vars=x; f=x;").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::NotPrime(4));
        assert!(e.to_string().contains("NOT_PRIME"));
        assert_eq!(e.column, 3);
    }

    #[test]
    fn errors_point_into_the_source() {
        let e = parse_session("p=3;\nvars=x,y;\nf=x*w;").unwrap_err();
        assert_eq!((e.line, e.column), (3, 5));
        assert_eq!(e.kind, ParseErrorKind::UnknownVariable("w".into()));
        let e = parse_session("p=3; vars=x; f=x; colour=red;").unwrap_err();
        assert!(e.to_string().contains("unknown key"));
        assert!(parse_session("p=3; vars=x; f=x").is_err());
        assert!(parse_session("p=3; vars=x,x; f=x;").is_err());
        assert!(parse_session("p=3; f=x;").is_err());
    }

    #[test]
    fn comments_and_options() {
        let text =
            "# coordinate plane\np = 5;  # char\nvars = x, y;\nf = (x*y)^4;\nseed=9; probes=3; count=proper-nonzero;";
        let s = parse_session(text).unwrap();
        assert_eq!(s.options.seed, Some(9));
        assert_eq!(s.options.count, Some(CountConvention::ProperNonzero));
        assert_eq!(parse_session(&s.to_string()).unwrap(), s);
    }
}
