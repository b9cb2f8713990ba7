use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Ordered variables (`x ≻ y ≻ z` under lex) plus the ordered list of symbolic
/// parameters that live in the coefficient field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarContext {
    variables: Vec<String>,
    parameters: Vec<String>,
}

impl VarContext {
    /// Validates names: at least one variable, no duplicates, and variables
    /// disjoint from parameters.
    pub fn new<S: AsRef<str>>(variables: &[S], parameters: &[S]) -> Result<Arc<Self>> {
        let variables: Vec<String> = variables.iter().map(|s| s.as_ref().to_string()).collect();
        let parameters: Vec<String> = parameters.iter().map(|s| s.as_ref().to_string()).collect();
        if variables.is_empty() {
            return Err(Error::usage("at least one variable is required"));
        }
        let mut seen = HashSet::new();
        for name in variables.iter().chain(&parameters) {
            if !is_identifier(name) {
                return Err(Error::usage(format!("invalid name `{name}`")));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::usage(format!(
                    "name `{name}` declared twice (variables and parameters must be disjoint)"
                )));
            }
        }
        Ok(Arc::new(VarContext { variables, parameters }))
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn parameters(&self) -> &[String] {
        &self.parameters
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn nparams(&self) -> usize {
        self.parameters.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    pub fn param_index(&self, name: &str) -> Option<usize> {
        self.parameters.iter().position(|v| v == name)
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
