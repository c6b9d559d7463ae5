//! The test-algebra mini-grammar used to pick finite coefficient rings.

use thiserror::Error;

use super::{Generator, MonomialAlgebra};
use crate::base_ring::FpElement;
use crate::scalar::Prime;

pub const TEST_ALGEBRA_GRAMMAR: &str = "\
algebra   := field [ '[' names ']' '/' '(' relations ')' ]
field     := 'Fp' | 'F' <prime>        (an explicit prime must match --p)
names     := name { ',' name }
relations := name '^' <k> { ',' name '^' <k> }   (one per generator, meaning name^k = 0)
examples: Fp   Fp[e]/(e^2)   F3[e,d]/(e^3,d^2)";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse test algebra '{input}': {reason}\n{TEST_ALGEBRA_GRAMMAR}")]
pub struct ParseError {
    pub input: String,
    pub reason: String,
}

/// Parses e.g. `Fp[e,d]/(e^2,d^3)` into `F_p[e,d]/(e^2, d^3)`.
pub fn parse_test_algebra(input: &str, p: Prime) -> Result<MonomialAlgebra<FpElement>, ParseError> {
    let fail = |reason: String| ParseError {
        input: input.to_string(),
        reason,
    };
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    let rest = s
        .strip_prefix('F')
        .ok_or_else(|| fail("expected the field 'Fp' or 'F<prime>'".into()))?;
    let field_end = rest.find('[').unwrap_or(rest.len());
    match &rest[..field_end] {
        "p" => {}
        digits => {
            let q: u32 = digits
                .parse()
                .map_err(|_| fail(format!("bad field 'F{digits}'")))?;
            if q != p.get() {
                return Err(fail(format!("field F{q} does not match p = {p}")));
            }
        }
    }
    let rest = &rest[field_end..];
    if rest.is_empty() {
        return MonomialAlgebra::new(p, Vec::new()).map_err(|e| fail(e.to_string()));
    }
    let close = rest
        .find(']')
        .ok_or_else(|| fail("missing ']' after generator names".into()))?;
    let names: Vec<&str> = rest[1..close].split(',').collect();
    if names.iter().any(|n| n.is_empty() || !n.chars().all(|c| c.is_alphanumeric() || c == '_')) {
        return Err(fail("generator names must be nonempty identifiers".into()));
    }
    for (i, n) in names.iter().enumerate() {
        if names[..i].contains(n) {
            return Err(fail(format!("generator '{n}' listed twice")));
        }
    }
    let rels = rest[close + 1..]
        .strip_prefix("/(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| fail("expected '/(' relations ')' after the generators".into()))?;
    let mut bounds: Vec<Option<u32>> = vec![None; names.len()];
    for rel in rels.split(',') {
        let (name, k) = match rel.split_once('^') {
            Some((n, k)) => (
                n,
                k.parse::<u32>()
                    .map_err(|_| fail(format!("bad exponent in '{rel}'")))?,
            ),
            None => (rel, 1),
        };
        if k == 0 {
            return Err(fail(format!("exponent in '{rel}' must be at least 1")));
        }
        let i = names
            .iter()
            .position(|n| *n == name)
            .ok_or_else(|| fail(format!("relation '{rel}' names an unknown generator")))?;
        if bounds[i].replace(k).is_some() {
            return Err(fail(format!("generator '{name}' has two relations")));
        }
    }
    let gens = names
        .iter()
        .zip(&bounds)
        .map(|(n, b)| {
            b.map(|b| Generator::nilpotent(*n, b))
                .ok_or_else(|| fail(format!("generator '{n}' has no relation")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    MonomialAlgebra::new(p, gens).map_err(|e| fail(e.to_string()))
}
