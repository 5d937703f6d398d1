//! JSON form of an [`APoly`]: a list of
//! `{"exponents": [a, b, c], "coeff": ["n/d", "n/d", "n/d", "n/d"]}`
//! in graded-lexicographic monomial order.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{apoly::support, APoly, Monomial, Poly};
use crate::scalar::{format_rational, parse_rational, Rational};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub exponents: [u32; 3],
    pub coeff: [String; 4],
}

pub fn to_terms(f: &APoly) -> Vec<TermJson> {
    support(f)
        .into_iter()
        .map(|m| TermJson {
            exponents: m.exps,
            coeff: [0, 1, 2, 3].map(|i| format_rational(&f.component(i).coeff(&m))),
        })
        .collect()
}

pub fn from_terms(terms: &[TermJson]) -> Result<APoly> {
    let mut comps: [Poly<Rational>; 4] = Default::default();
    for term in terms {
        let m = Monomial { exps: term.exponents };
        for (comp, text) in comps.iter_mut().zip(&term.coeff) {
            let c = parse_rational(text)
                .ok_or_else(|| Error::Parse(format!("bad rational coefficient {text:?}")))?;
            comp.add_term(m, c);
        }
    }
    Ok(APoly::from_components(comps))
}

pub fn to_json(f: &APoly) -> serde_json::Value {
    serde_json::to_value(to_terms(f)).expect("terms serialize")
}

pub fn from_json(value: &serde_json::Value) -> Result<APoly> {
    let terms: Vec<TermJson> = serde_json::from_value(value.clone())?;
    from_terms(&terms)
}
