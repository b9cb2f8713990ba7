//! Line-oriented polynomial system files.
//!
//! ```text
//! # paraboloid cut by a quadric cylinder
//! vars: x, y, z
//! params: a, b
//! order: lex
//! poly: z - x^2/a^2 - y^2/b^2
//! poly: x^2/a^2 + y^2/b^2 - x/a - y/b
//! ```

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::IdealSpec;
use crate::poly::{MonomialOrder, Polynomial, VarContext};

use super::parse_expression;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SystemFile {
    pub vars: Vec<String>,
    pub params: Vec<String>,
    pub order: MonomialOrder,
    pub polynomials: Vec<String>,
}

fn names(value: &str) -> Vec<String> {
    value
        .split([',', ' ', '\t'])
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect()
}

impl SystemFile {
    /// Parses the text form. Errors report the 1-based line number.
    pub fn parse(text: &str) -> Result<Self> {
        let mut sys = SystemFile::default();
        let mut seen_order = false;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let lineno = lineno + 1;
            let Some((key, value)) = line.split_once(':') else {
                return Err(Error::usage(format!("line {lineno}: expected `key: value`")));
            };
            let value = value.trim();
            match key.trim() {
                "vars" => sys.vars.extend(names(value)),
                "params" => sys.params.extend(names(value)),
                "order" => {
                    if seen_order {
                        return Err(Error::usage(format!("line {lineno}: duplicate `order`")));
                    }
                    seen_order = true;
                    sys.order = MonomialOrder::from_name(value)
                        .map_err(|_| Error::usage(format!("line {lineno}: unknown order `{value}`")))?;
                }
                "poly" => {
                    if value.is_empty() {
                        return Err(Error::usage(format!("line {lineno}: empty polynomial")));
                    }
                    sys.polynomials.push(value.to_string());
                }
                other => return Err(Error::usage(format!("line {lineno}: unknown key `{other}`"))),
            }
        }
        sys.validate()?;
        Ok(sys)
    }

    /// Checks the declarations without parsing the polynomials.
    pub fn validate(&self) -> Result<()> {
        if self.vars.is_empty() {
            return Err(Error::usage("no variables declared"));
        }
        VarContext::new(&self.vars, &self.params).map(|_| ())
    }

    pub fn context(&self) -> Result<Arc<VarContext>> {
        VarContext::new(&self.vars, &self.params)
    }

    /// Parses every `poly:` entry. Parse errors are wrapped with the entry index.
    pub fn polynomials(&self, ctx: &Arc<VarContext>) -> Result<Vec<Polynomial>> {
        self.polynomials
            .iter()
            .enumerate()
            .map(|(i, s)| {
                parse_expression(s, ctx, self.order).map_err(|e| match e {
                    Error::Parse { pos, message } => Error::Parse {
                        pos,
                        message: format!("{message} (in polynomial {})", i + 1),
                    },
                    other => other,
                })
            })
            .collect()
    }

    pub fn ideal(&self) -> Result<IdealSpec> {
        let ctx = self.context()?;
        let gens = self.polynomials(&ctx)?;
        IdealSpec::new(&ctx, self.order, gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_declarations_and_comments() {
        let s = SystemFile::parse(
            "# comment\nvars: x, y, z\nparams: a b\norder: lex\npoly: z - x^2/a^2 # trailing\npoly: x - a\n",
        )
        .unwrap();
        assert_eq!(s.vars, ["x", "y", "z"]);
        assert_eq!(s.params, ["a", "b"]);
        assert_eq!(s.polynomials, ["z - x^2/a^2", "x - a"]);
        assert_eq!(s.ideal().unwrap().generators().len(), 2);
    }

    #[test]
    fn rejects_bad_files() {
        assert!(SystemFile::parse("params: a\npoly: a").is_err());
        assert!(SystemFile::parse("vars: x\nparams: x").is_err());
        assert!(SystemFile::parse("vars: x\norder: weird").is_err());
        assert!(SystemFile::parse("vars: x\nfoo: 1").is_err());
        assert!(SystemFile::parse("vars: x\nnonsense").is_err());
        let s = SystemFile::parse("vars: x\npoly: x + q").unwrap();
        assert!(matches!(s.ideal(), Err(Error::Parse { pos: 4, .. })));
    }
}
