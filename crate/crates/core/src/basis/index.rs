use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    X,
    Y,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::X => "X",
            Family::Y => "Y",
        })
    }
}

/// Address of one basis polynomial: degree `n`, family, order `m`
/// (`0..=n+1` for X, `1..=n+1` for Y).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BasisIndex {
    pub n: u32,
    pub family: Family,
    pub m: u32,
}

impl BasisIndex {
    pub fn new(n: u32, family: Family, m: u32) -> Result<Self> {
        let ok = match family {
            Family::X => m <= n + 1,
            Family::Y => (1..=n + 1).contains(&m),
        };
        if ok {
            Ok(BasisIndex { n, family, m })
        } else {
            Err(Error::Range(format!("no basis element {family}_{n}^{m}")))
        }
    }

    pub fn x(n: u32, m: u32) -> Self {
        Self::new(n, Family::X, m).expect("valid X index")
    }

    pub fn y(n: u32, m: u32) -> Self {
        Self::new(n, Family::Y, m).expect("valid Y index")
    }

    /// `m = n + 1`: the hyperholomorphic constants.
    pub fn is_hyperholomorphic_constant(&self) -> bool {
        self.m == self.n + 1
    }

    /// Position inside the degree block: X^0..X^{n+1}, then Y^1..Y^{n+1}.
    pub fn position(&self) -> usize {
        match self.family {
            Family::X => self.m as usize,
            Family::Y => (self.n + 1 + self.m) as usize,
        }
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}^{}", self.family, self.n, self.m)
    }
}

/// The `2n + 3` indices of degree `n`, in block order.
pub fn degree_indices(n: u32) -> Vec<BasisIndex> {
    let xs = (0..=n + 1).map(|m| BasisIndex::x(n, m));
    let ys = (1..=n + 1).map(|m| BasisIndex::y(n, m));
    xs.chain(ys).collect()
}

/// All indices with degree `≤ max_degree`.
pub fn indices_up_to(max_degree: u32) -> Vec<BasisIndex> {
    (0..=max_degree).flat_map(degree_indices).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        for n in 0..12 {
            let idx = degree_indices(n);
            assert_eq!(idx.len(), (2 * n + 3) as usize);
            for (k, i) in idx.iter().enumerate() {
                assert_eq!(i.position(), k);
            }
        }
        assert_eq!(indices_up_to(2).len(), 15);
        assert_eq!(indices_up_to(10).len(), 143);
    }

    #[test]
    fn ranges() {
        assert!(BasisIndex::new(1, Family::X, 2).is_ok());
        assert!(BasisIndex::new(1, Family::X, 3).is_err());
        assert!(BasisIndex::new(1, Family::Y, 0).is_err());
        assert_eq!(BasisIndex::x(2, 1).to_string(), "X_2^1");
    }
}
