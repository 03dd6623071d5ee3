//! The ambient polynomial ring context.
//!
//! All computations live over a standard-graded polynomial ring
//! `k[x_1..x_n]` with `m = (x_1..x_n)`; quotients, modules and parameter
//! elements carry a shared handle to this context.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::monomial::{ModuleOrder, Monomial, MonomialOrder};

/// Caps on basis computations; exceeding them is an explicit error with
/// partial statistics, never a silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_basis: usize,
    pub max_degree: i64,
    pub saturation_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_basis: 50_000,
            max_degree: 400,
            saturation_cap: 50,
        }
    }
}

#[derive(Debug)]
pub struct RingCtx {
    vars: Vec<String>,
    field: FieldCtx,
    order: MonomialOrder,
    limits: Limits,
}

/// Shared, immutable ring handle. Two handles denote the same ring when
/// their variable lists, fields and orders agree.
#[derive(Debug, Clone)]
pub struct Ring(Arc<RingCtx>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.vars == other.0.vars
                && self.0.field == other.0.field
                && self.0.order == other.0.order)
    }
}
impl Eq for Ring {}

impl Ring {
    pub fn new(vars: &[&str], field: FieldCtx, order: MonomialOrder) -> Result<Self> {
        Self::with_limits(vars, field, order, Limits::default())
    }

    pub fn with_limits(
        vars: &[&str],
        field: FieldCtx,
        order: MonomialOrder,
        limits: Limits,
    ) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::Invalid("a ring needs at least one variable".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for v in vars {
            if !seen.insert(*v) {
                return Err(Error::Invalid(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Ring(Arc::new(RingCtx {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            field,
            order,
            limits,
        })))
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.0.vars[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    pub fn field(&self) -> &FieldCtx {
        &self.0.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.0.order
    }

    pub fn top_order(&self) -> ModuleOrder {
        ModuleOrder::Top(self.0.order)
    }

    pub fn limits(&self) -> Limits {
        self.0.limits
    }

    pub fn one_monomial(&self) -> Monomial {
        Monomial::one(self.nvars())
    }

    pub fn var_monomial(&self, i: usize) -> Monomial {
        Monomial::var(self.nvars(), i)
    }

    pub fn same_ring(&self, other: &Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in m.exps().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.var_name(i).to_string()),
                _ => parts.push(format!("{}^{}", self.var_name(i), e)),
            }
        }
        parts.join("*")
    }
}
