//! Brute-force Tarskian evaluation over finite permutation-group models.

use std::collections::HashMap;

use super::{Formula, Lit, LogicError, Node, Term};
use crate::permgrp::{Perm, PermGroup};

/// Default budget: quantifier-node visits before giving up.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// A finite group with named constants.
pub struct FiniteGroupModel {
    pub group: PermGroup,
    pub constants: HashMap<String, Perm>,
}

impl FiniteGroupModel {
    pub fn new(group: PermGroup) -> FiniteGroupModel {
        FiniteGroupModel {
            group,
            constants: HashMap::new(),
        }
    }

    pub fn with_constant(mut self, name: &str, value: Perm) -> FiniteGroupModel {
        self.constants.insert(name.to_string(), value);
        self
    }
}

/// Evaluate with quantifiers ranging over the model's elements; `assignment`
/// must cover the free variables. Each element visited under a quantifier
/// costs one unit of budget.
pub fn evaluate(
    f: &Formula,
    model: &FiniteGroupModel,
    assignment: &HashMap<String, Perm>,
    budget: u64,
) -> Result<bool, LogicError> {
    let mut env = assignment.clone();
    let mut remaining = budget;
    eval_node(&f.node, model, &mut env, &mut remaining)
}

fn eval_term(
    t: &Term,
    model: &FiniteGroupModel,
    env: &HashMap<String, Perm>,
) -> Result<Perm, LogicError> {
    let degree = model.group.degree();
    let mut acc = Perm::identity(degree);
    for lit in &t.0 {
        let (value, inv) = match lit {
            Lit::Var(v, inv) => (
                env.get(v)
                    .ok_or_else(|| LogicError::UnboundVariable(v.clone()))?,
                *inv,
            ),
            Lit::Const(c, inv) => (
                model
                    .constants
                    .get(c)
                    .ok_or_else(|| LogicError::UnknownConstant(c.clone()))?,
                *inv,
            ),
        };
        acc = if inv {
            acc.mul(&value.inv())
        } else {
            acc.mul(value)
        };
    }
    Ok(acc)
}

fn eval_node(
    node: &Node,
    model: &FiniteGroupModel,
    env: &mut HashMap<String, Perm>,
    budget: &mut u64,
) -> Result<bool, LogicError> {
    match node {
        Node::Eq(a, b) => Ok(eval_term(a, model, env)? == eval_term(b, model, env)?),
        Node::Ne(a, b) => Ok(eval_term(a, model, env)? != eval_term(b, model, env)?),
        Node::Not(f) => Ok(!eval_node(f, model, env, budget)?),
        Node::And(fs) => {
            for f in fs {
                if !eval_node(f, model, env, budget)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        Node::Or(fs) => {
            for f in fs {
                if eval_node(f, model, env, budget)? {
                    return Ok(true);
                }
            }
            Ok(false)
        }
        Node::Forall(v, f) | Node::Exists(v, f) => {
            let forall = matches!(node, Node::Forall(..));
            let elems = model.group.elements()?.list.clone();
            let saved = env.get(v).cloned();
            let mut result = forall;
            for e in elems {
                if *budget == 0 {
                    return Err(LogicError::BudgetExceeded);
                }
                *budget -= 1;
                env.insert(v.clone(), e);
                let holds = eval_node(f, model, env, budget)?;
                if forall && !holds {
                    result = false;
                    break;
                }
                if !forall && holds {
                    result = true;
                    break;
                }
            }
            match saved {
                Some(old) => {
                    env.insert(v.clone(), old);
                }
                None => {
                    env.remove(v);
                }
            }
            Ok(result)
        }
    }
}

impl From<crate::permgrp::PermError> for LogicError {
    fn from(e: crate::permgrp::PermError) -> LogicError {
        LogicError::Parse(format!("model error: {e}"))
    }
}
