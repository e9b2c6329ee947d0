use std::sync::Arc;

use crate::error::{Error, Result};

use super::Monomial;

/// An ordered list of named variables together with their (positive, even)
/// cohomological degrees. Polynomials refer to their context by `Arc`, and two
/// contexts are interchangeable when they compare equal by value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableContext {
    names: Vec<String>,
    degrees: Vec<u32>,
}

impl VariableContext {
    pub fn new(names: Vec<String>, degrees: Vec<u32>) -> Result<Arc<Self>> {
        if names.is_empty() {
            return Err(Error::InvalidInput("a context needs at least one variable".into()));
        }
        if names.len() != degrees.len() {
            return Err(Error::InvalidInput("names and degrees must have equal length".into()));
        }
        for d in &degrees {
            if *d < 2 || *d % 2 != 0 || *d > 1 << 16 {
                return Err(Error::InvalidInput(format!(
                    "variable degrees must be even, at least 2 and small; got {d}"
                )));
            }
        }
        let mut seen = names.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != names.len() {
            return Err(Error::InvalidInput("variable names must be unique".into()));
        }
        Ok(Arc::new(VariableContext { names, degrees }))
    }

    /// All variables in cohomological degree 2, the common case.
    pub fn with_degree2(names: Vec<String>) -> Result<Arc<Self>> {
        let n = names.len();
        VariableContext::new(names, vec![2; n])
    }

    /// Context `x1..xn`, all of degree 2.
    pub fn standard(prefix: &str, n: usize) -> Result<Arc<Self>> {
        VariableContext::with_degree2((1..=n).map(|i| format!("{prefix}{i}")).collect())
    }

    pub fn num_vars(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.degrees[i]
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Weighted degree of a monomial in this context.
    pub fn monomial_degree(&self, m: &Monomial) -> u32 {
        m.weighted_degree(&self.degrees)
    }

    /// Canonical text of a monomial, e.g. `x1^2*x2`; `1` for the constant.
    pub fn monomial_string(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.names[i].clone()),
                _ => parts.push(format!("{}^{}", self.names[i], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Value equality of contexts behind `Arc`s, with a pointer fast path.
pub(crate) fn same_context(a: &Arc<VariableContext>, b: &Arc<VariableContext>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}
