use std::fmt;

use super::DoubleElement;
use crate::error::Result;

/// A named generator such as `x`, `d`, `p[2,1]` or `h'[3,2]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub primed: bool,
    pub indices: Vec<i64>,
}

impl Generator {
    pub fn new(name: impl Into<String>, primed: bool, indices: Vec<i64>) -> Self {
        Generator {
            name: name.into(),
            primed,
            indices,
        }
    }

    pub fn plain(name: impl Into<String>) -> Self {
        Self::new(name, false, Vec::new())
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)?;
        if self.primed {
            write!(f, "'")?;
        }
        if !self.indices.is_empty() {
            let parts: Vec<String> = self.indices.iter().map(i64::to_string).collect();
            write!(f, "[{}]", parts.join(","))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordToken {
    pub generator: Generator,
    pub exponent: u32,
}

/// An ordered product of generator powers.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GeneratorWord {
    pub tokens: Vec<WordToken>,
}

impl GeneratorWord {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(mut self, generator: Generator, exponent: u32) -> Self {
        self.tokens.push(WordToken { generator, exponent });
        self
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tokens.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .tokens
            .iter()
            .map(|t| match t.exponent {
                1 => t.generator.to_string(),
                e => format!("{}^{e}", t.generator),
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Resolves generator names to elements of a smash product.
pub trait GeneratorSet {
    fn resolve(&self, generator: &Generator) -> Result<DoubleElement>;
}
