//! Versioned JSON dump of the basis table.

use serde::Serialize;

use crate::basis::{indices_up_to, normalize, BasisIndex};
use crate::error::Result;
use crate::poly::json::{to_terms, TermJson};
use crate::scalar::{format_rational, Rational};

pub const TABLE_SCHEMA: &str = "riesz.basis-table/1";

#[derive(Clone, Debug, Serialize)]
pub struct TableEntry {
    #[serde(flatten)]
    pub index: BasisIndex,
    /// `‖X‖² / π` on `B_R`, exact.
    pub norm_sq_over_pi: String,
    pub norm: f64,
    pub poly: Vec<TermJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BasisTable {
    pub schema: &'static str,
    pub radius: String,
    pub max_degree: u32,
    pub count: usize,
    pub elements: Vec<TableEntry>,
}

pub fn basis_table(max_degree: u32, radius: &Rational) -> Result<BasisTable> {
    let elements = indices_up_to(max_degree)
        .into_iter()
        .map(|idx| {
            let e = normalize(idx, radius)?;
            Ok(TableEntry {
                index: idx,
                norm_sq_over_pi: format_rational(&e.norm_sq.0),
                norm: e.norm(),
                poly: to_terms(&e.poly),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BasisTable {
        schema: TABLE_SCHEMA,
        radius: format_rational(radius),
        max_degree,
        count: elements.len(),
        elements,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_int;

    #[test]
    fn degree_zero_table() {
        let t = basis_table(0, &rat_int(1)).unwrap();
        assert_eq!(t.count, 3);
        let json = serde_json::to_value(&t).unwrap();
        assert_eq!(json["elements"][0]["family"], "X");
        assert_eq!(json["elements"][0]["poly"][0]["coeff"][0], "1/2");
        assert_eq!(json["elements"][1]["poly"][0]["coeff"][1], "-1/2");
        assert_eq!(json["elements"][2]["poly"][0]["coeff"][2], "-1/2");
        assert_eq!(basis_table(2, &rat_int(1)).unwrap().count, 15);
    }
}
