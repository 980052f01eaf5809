//! Monomial orders. Variables are ranked by declaration order, first is largest.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// Strictly positive integer weights, one per variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector(Vec<u64>);

impl WeightVector {
    pub fn new(weights: Vec<u64>) -> Result<Self> {
        if weights.contains(&0) {
            return Err(Error::InvalidRing(format!(
                "weights must be positive, got {weights:?}"
            )));
        }
        Ok(WeightVector(weights))
    }

    pub fn ones(n: usize) -> Self {
        WeightVector(vec![1; n])
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|w| w.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Order used to break ties of a weight order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TieBreak {
    Lex,
    GrLex,
    GrevLex,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    GrLex,
    GrevLex,
    Weight {
        weights: WeightVector,
        tiebreak: TieBreak,
    },
}

fn lex(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.exponents().iter().zip(b.exponents()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

fn revlex_tail(a: &Monomial, b: &Monomial) -> Ordering {
    // last nonzero entry of a - b negative => a is greater
    for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

fn tie(tb: TieBreak, a: &Monomial, b: &Monomial) -> Ordering {
    match tb {
        TieBreak::Lex => lex(a, b),
        TieBreak::GrLex => a.degree().cmp(&b.degree()).then_with(|| lex(a, b)),
        TieBreak::GrevLex => a.degree().cmp(&b.degree()).then_with(|| revlex_tail(a, b)),
    }
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => lex(a, b),
            MonomialOrder::GrLex => tie(TieBreak::GrLex, a, b),
            MonomialOrder::GrevLex => tie(TieBreak::GrevLex, a, b),
            MonomialOrder::Weight { weights, tiebreak } => {
                let w = weights.as_slice();
                a.weighted_degree(w)
                    .cmp(&b.weighted_degree(w))
                    .then_with(|| tie(*tiebreak, a, b))
            }
        }
    }

    /// Whether the order compares total degree first.
    pub fn is_graded(&self) -> bool {
        match self {
            MonomialOrder::Lex => false,
            MonomialOrder::GrLex | MonomialOrder::GrevLex => true,
            MonomialOrder::Weight { weights, .. } => {
                let w = weights.as_slice();
                w.windows(2).all(|p| p[0] == p[1])
            }
        }
    }

    pub fn require_graded(&self) -> Result<()> {
        if self.is_graded() {
            Ok(())
        } else {
            Err(Error::NonGradedOrder(self.to_string()))
        }
    }
}

impl fmt::Display for TieBreak {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TieBreak::Lex => "lex",
            TieBreak::GrLex => "grlex",
            TieBreak::GrevLex => "grevlex",
        })
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => f.write_str("lex"),
            MonomialOrder::GrLex => f.write_str("grlex"),
            MonomialOrder::GrevLex => f.write_str("grevlex"),
            MonomialOrder::Weight { weights, tiebreak } => {
                write!(f, "weight {weights} {tiebreak}")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn grevlex_examples() {
        let o = MonomialOrder::GrevLex;
        assert_eq!(o.compare(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        // y^3 > xyz: last nonzero of (0,3,0)-(1,1,1) = (-1,2,-1) is negative
        assert_eq!(o.compare(&m(&[0, 3, 0]), &m(&[1, 1, 1])), Ordering::Greater);
    }

    #[test]
    fn lex_example() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.compare(&m(&[1, 1, 1]), &m(&[0, 3, 0])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[0, 0, 5]), &m(&[0, 1, 0])), Ordering::Less);
    }

    #[test]
    fn grlex_differs_from_grevlex() {
        // x*z^2 vs y^3 in degree 3: grlex picks x*z^2, grevlex picks y^3
        let a = m(&[1, 0, 2]);
        let b = m(&[0, 3, 0]);
        assert_eq!(MonomialOrder::GrLex.compare(&a, &b), Ordering::Greater);
        assert_eq!(MonomialOrder::GrevLex.compare(&a, &b), Ordering::Less);
    }

    #[test]
    fn weight_order_then_tiebreak() {
        let o = MonomialOrder::Weight {
            weights: WeightVector::new(vec![1, 3]).unwrap(),
            tiebreak: TieBreak::Lex,
        };
        assert_eq!(o.compare(&m(&[2, 0]), &m(&[0, 1])), Ordering::Less);
        assert_eq!(o.compare(&m(&[3, 0]), &m(&[0, 1])), Ordering::Greater);
        assert!(!o.is_graded());
        let eq = MonomialOrder::Weight {
            weights: WeightVector::ones(2),
            tiebreak: TieBreak::GrevLex,
        };
        assert!(eq.is_graded());
    }

    #[test]
    fn graded_flags() {
        assert!(!MonomialOrder::Lex.is_graded());
        assert!(MonomialOrder::GrevLex.require_graded().is_ok());
        assert!(matches!(
            MonomialOrder::Lex.require_graded(),
            Err(Error::NonGradedOrder(_))
        ));
    }

    #[test]
    fn zero_weight_rejected() {
        assert!(WeightVector::new(vec![1, 0]).is_err());
    }
}
