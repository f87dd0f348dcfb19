//! JSON group specifications.
//!
//! ```json
//! {"type": "perm", "degree": 3, "generators": [[2, 1, 3], [2, 3, 1]]}
//! {"type": "matrix", "q": 7, "n": 2, "generators": [[3, 0, 0, 1], [1, 1, 0, 1]]}
//! {"type": "classical", "family": "GL", "n": 2, "q": 7}
//! {"type": "wreath", "base": "Cp", "p": 2, "inner": {"type": "perm", "degree": 2, "generators": [[2, 1]]}}
//! ```
//!
//! Permutations list 1-based images. Matrix entries are field elements of
//! `F_q` in the encoding of [`ExtField`], rows first.

use std::sync::Arc;

use chowlim_core::fp::ExtField;
use chowlim_core::groups::{classical_group, wreath_product, ClassicalFamily, ClassicalGroupData, FiniteGroup, WreathBase};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "GL")]
    Gl,
    #[serde(rename = "SL")]
    Sl,
    #[serde(rename = "Sp")]
    Sp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Base {
    Cp,
    Sp,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum GroupSpec {
    Perm { degree: usize, generators: Vec<Vec<u32>> },
    Matrix { q: u64, n: usize, generators: Vec<Vec<u32>> },
    Classical { family: Family, n: usize, q: u64 },
    Wreath { base: Base, p: usize, inner: Box<GroupSpec> },
}

/// An enumerated group, keeping the torus data of classical groups.
pub enum BuiltGroup {
    Plain(FiniteGroup),
    Classical(Box<ClassicalGroupData>),
}

impl BuiltGroup {
    pub fn group(&self) -> &FiniteGroup {
        match self {
            BuiltGroup::Plain(g) => g,
            BuiltGroup::Classical(c) => &c.group,
        }
    }
}

/// Converts 1-based images to 0-based ones.
pub fn zero_based(degree: usize, perms: &[Vec<u32>]) -> CliResult<Vec<Vec<u32>>> {
    perms
        .iter()
        .map(|img| {
            if img.len() != degree || img.iter().any(|&x| x == 0 || x as usize > degree) {
                return Err(CliError::Spec(format!("{img:?} is not a list of {degree} images in 1..={degree}")));
            }
            Ok(img.iter().map(|x| x - 1).collect())
        })
        .collect()
}

impl GroupSpec {
    pub fn parse(text: &str) -> CliResult<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Enumerates the group; `prime` is the prime under study, needed for
    /// the torus data of classical groups.
    pub fn build(&self, prime: Option<usize>, cap: usize) -> CliResult<BuiltGroup> {
        match self {
            GroupSpec::Perm { degree, generators } => {
                Ok(BuiltGroup::Plain(FiniteGroup::permutation(*degree, &zero_based(*degree, generators)?, cap)?))
            }
            GroupSpec::Matrix { q, n, generators } => {
                let field = Arc::new(ExtField::with_size(*q)?);
                Ok(BuiltGroup::Plain(FiniteGroup::matrix(field, *n, generators, cap)?))
            }
            GroupSpec::Classical { family, n, q } => {
                let p = prime.ok_or_else(|| CliError::Spec("classical groups need --prime".into()))?;
                let family = match family {
                    Family::Gl => ClassicalFamily::Gl,
                    Family::Sl => ClassicalFamily::Sl,
                    Family::Sp => ClassicalFamily::Sp,
                };
                Ok(BuiltGroup::Classical(Box::new(classical_group(family, *n, *q, p, cap)?)))
            }
            GroupSpec::Wreath { base, p, inner } => {
                let inner = inner.build(prime, cap)?;
                let base = match base {
                    Base::Cp => WreathBase::Cyclic,
                    Base::Sp => WreathBase::Symmetric,
                };
                Ok(BuiltGroup::Plain(wreath_product(base, inner.group(), *p, cap)?))
            }
        }
    }
}
