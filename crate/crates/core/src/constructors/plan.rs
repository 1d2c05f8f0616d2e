use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::ex22::make_ex22_capped;
use super::{make_matrix_family_capped, make_product_capped, make_zn_capped};
use crate::error::Result;
use crate::kernel::{Elem, FiniteRing};

/// A tree of constructor applications, as produced by the ring-expression parser.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingExprPlan {
    Zn(usize),
    Matrix(usize, Box<RingExprPlan>),
    UpperTriangular(usize, Box<RingExprPlan>),
    SkewTriangular(usize, Box<RingExprPlan>),
    Ex22(u64),
    Product(Box<RingExprPlan>, Box<RingExprPlan>),
    Corner(Box<RingExprPlan>, Elem),
    Quotient(Box<RingExprPlan>, Vec<Elem>),
}

impl RingExprPlan {
    /// Evaluates the plan; sub-expressions are cached by their canonical text.
    pub fn build(&self, cap: usize) -> Result<Arc<FiniteRing>> {
        self.build_cached(cap, &mut HashMap::new())
    }

    pub fn build_cached(&self, cap: usize, cache: &mut HashMap<String, Arc<FiniteRing>>) -> Result<Arc<FiniteRing>> {
        let key = self.to_string();
        if let Some(r) = cache.get(&key) {
            return Ok(Arc::clone(r));
        }
        let ring = match self {
            RingExprPlan::Zn(n) => make_zn_capped(*n, cap)?,
            RingExprPlan::Matrix(k, b) => make_matrix_family_capped('M', &b.build_cached(cap, cache)?, *k, cap)?,
            RingExprPlan::UpperTriangular(k, b) => {
                make_matrix_family_capped('T', &b.build_cached(cap, cache)?, *k, cap)?
            }
            RingExprPlan::SkewTriangular(k, b) => {
                make_matrix_family_capped('S', &b.build_cached(cap, cache)?, *k, cap)?
            }
            RingExprPlan::Ex22(p) => make_ex22_capped(*p, cap)?,
            RingExprPlan::Product(a, b) => {
                make_product_capped(&a.build_cached(cap, cache)?, &b.build_cached(cap, cache)?, cap)?
            }
            RingExprPlan::Corner(b, e) => super::make_corner(&b.build_cached(cap, cache)?, *e)?,
            RingExprPlan::Quotient(b, gens) => {
                let base = b.build_cached(cap, cache)?;
                if let Some(&bad) = gens.iter().find(|&&g| g >= base.size()) {
                    return Err(crate::RingError::Contract(format!(
                        "generator {bad} is not an element of `{}`",
                        base.name()
                    )));
                }
                super::make_quotient(&base, &base.set_of(gens.iter().copied()))?
            }
        };
        cache.insert(key, Arc::clone(&ring));
        Ok(ring)
    }
}

impl fmt::Display for RingExprPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExprPlan::Zn(n) => write!(f, "Z{n}"),
            RingExprPlan::Matrix(k, b) => write!(f, "M{k}({b})"),
            RingExprPlan::UpperTriangular(k, b) => write!(f, "T{k}({b})"),
            RingExprPlan::SkewTriangular(k, b) => write!(f, "S{k}({b})"),
            RingExprPlan::Ex22(p) => write!(f, "ex22({p})"),
            RingExprPlan::Product(a, b) => match **b {
                RingExprPlan::Product(..) => write!(f, "{a} x ({b})"),
                _ => write!(f, "{a} x {b}"),
            },
            RingExprPlan::Corner(b, e) => write!(f, "corner({b}, {e})"),
            RingExprPlan::Quotient(b, gens) => {
                write!(f, "quotient({b}")?;
                for g in gens {
                    write!(f, ", {g}")?;
                }
                write!(f, ")")
            }
        }
    }
}
