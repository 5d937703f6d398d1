use std::cmp::Ordering;
use std::fmt;

/// `x0^a x1^b x2^c`, ordered graded-lexicographically by `(degree, a, b, c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub exps: [u32; 3],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0, 0, 0] };

    pub fn new(a: u32, b: u32, c: u32) -> Self {
        Monomial { exps: [a, b, c] }
    }

    pub fn var(i: usize) -> Self {
        let mut exps = [0; 3];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: [
                self.exps[0] + other.exps[0],
                self.exps[1] + other.exps[1],
                self.exps[2] + other.exps[2],
            ],
        }
    }

    /// Parity class of the exponents; two monomials integrate to a nonzero
    /// ball moment only when their product has all-even exponents.
    pub fn parity(&self) -> [u32; 3] {
        self.exps.map(|e| e % 2)
    }

    /// `∂/∂x_i`: returns the multiplier and the lowered monomial, or `None`
    /// when the derivative vanishes.
    pub fn derivative(&self, i: usize) -> Option<(u32, Monomial)> {
        let e = self.exps[i];
        if e == 0 {
            return None;
        }
        let mut exps = self.exps;
        exps[i] -= 1;
        Some((e, Monomial { exps }))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("·")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}
