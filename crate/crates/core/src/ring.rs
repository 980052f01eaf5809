use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::{monomials_of_degree, Monomial, MAX_VARS};
use crate::order::MonomialOrder;

/// `K[x_1..x_n]` with `K = GF(p)` and a fixed monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingContext {
    field: PrimeField,
    names: Vec<String>,
    order: MonomialOrder,
}

pub type Ring = Arc<RingContext>;

impl RingContext {
    pub fn new(p: u64, names: Vec<String>, order: MonomialOrder) -> Result<Ring> {
        let field = PrimeField::new(p)?;
        if names.is_empty() {
            return Err(Error::InvalidRing("at least one variable is required".into()));
        }
        if names.len() > MAX_VARS {
            return Err(Error::InvalidRing(format!(
                "{} variables exceed the limit of {MAX_VARS}",
                names.len()
            )));
        }
        let mut seen = HashSet::new();
        for n in &names {
            if !seen.insert(n.as_str()) {
                return Err(Error::InvalidRing(format!("variable `{n}` declared twice")));
            }
        }
        if let MonomialOrder::Weight { weights, .. } = &order {
            if weights.len() != names.len() {
                return Err(Error::InvalidRing(format!(
                    "{} weights given for {} variables",
                    weights.len(),
                    names.len()
                )));
            }
        }
        Ok(Arc::new(RingContext { field, names, order }))
    }

    /// Convenience constructor for tests and examples.
    pub fn with_vars(p: u64, names: &[&str], order: MonomialOrder) -> Result<Ring> {
        Self::new(p, names.iter().map(|s| s.to_string()).collect(), order)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn characteristic(&self) -> u32 {
        self.field.characteristic()
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    #[inline]
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.compare(a, b)
    }

    /// Same ring with a different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Ring> {
        Self::new(self.field.characteristic() as u64, self.names.clone(), order)
    }

    pub fn one(&self) -> Monomial {
        Monomial::one(self.nvars())
    }

    pub fn var(&self, index: usize) -> Monomial {
        Monomial::variable(self.nvars(), index)
    }

    /// Degree-`d` monomials sorted decreasing in the ring order.
    pub fn monomials_of_degree(&self, d: u32) -> Vec<Monomial> {
        let mut v = monomials_of_degree(self.nvars(), d);
        v.sort_by(|a, b| self.compare(b, a));
        v
    }

    pub fn fmt_monomial(&self, m: &Monomial) -> String {
        m.fmt_with(&self.names)
    }

    /// Header line in the input grammar, e.g. `ring 101 [x,y] grevlex`.
    pub fn header(&self) -> String {
        format!(
            "ring {} [{}] {}",
            self.characteristic(),
            self.names.join(","),
            self.order
        )
    }
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.header())
    }
}

pub fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub fn check_same_ring(a: &Ring, b: &Ring) -> Result<()> {
    if same_ring(a, b) {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}
