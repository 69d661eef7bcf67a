//! Group expressions (`Z6`, `D4`, `Dic3`, `Z2xZ2`, `file:path`) and the
//! built-in catalog of small groups.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use thiserror::Error;

use crate::arith::OrderClass;
use crate::group::{
    direct_product, from_cayley_table, is_isomorphic_small_group, make_alternating, make_cyclic,
    make_dicyclic, make_dihedral, make_symmetric, FiniteGroup, GroupError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("cannot parse group `{input}` at offset {offset}: {message}")]
    Syntax {
        input: String,
        offset: usize,
        message: String,
    },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Parsed group expression.
///
/// Grammar: `Z<n>` | `D<n>` | `Dic<n>` | `S<n>` | `A<n>` | `file:<path>`,
/// joined by `x` into left-associative direct products. A `file:` atom runs
/// to the end of the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Dicyclic(usize),
    Symmetric(usize),
    Alternating(usize),
    File(PathBuf),
    Product(Box<GroupSpec>, Box<GroupSpec>),
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup, SpecError> {
        Ok(match self {
            GroupSpec::Cyclic(n) => make_cyclic(*n)?,
            GroupSpec::Dihedral(n) => make_dihedral(*n)?,
            GroupSpec::Dicyclic(n) => make_dicyclic(*n)?,
            GroupSpec::Symmetric(n) => make_symmetric(*n)?,
            GroupSpec::Alternating(n) => make_alternating(*n)?,
            GroupSpec::File(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| GroupError::Io {
                    path: path.display().to_string(),
                    message: e.to_string(),
                })?;
                from_cayley_table(&format!("file:{}", path.display()), &text)?
            }
            GroupSpec::Product(a, b) => {
                let (a, b) = (a.build()?, b.build()?);
                let order = a.order() * b.order();
                if order > crate::group::MAX_CONSTRUCTED_ORDER {
                    return Err(GroupError::TooLarge {
                        order,
                        limit: crate::group::MAX_CONSTRUCTED_ORDER,
                    }
                    .into());
                }
                direct_product(&a, &b)
            }
        }
        .with_name(self.to_string()))
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "Z{n}"),
            GroupSpec::Dihedral(n) => write!(f, "D{n}"),
            GroupSpec::Dicyclic(n) => write!(f, "Dic{n}"),
            GroupSpec::Symmetric(n) => write!(f, "S{n}"),
            GroupSpec::Alternating(n) => write!(f, "A{n}"),
            GroupSpec::File(p) => write!(f, "file:{}", p.display()),
            GroupSpec::Product(a, b) => write!(f, "{a}x{b}"),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = SpecError;

    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let syntax = |offset: usize, message: &str| SpecError::Syntax {
            input: input.to_string(),
            offset,
            message: message.to_string(),
        };
        let mut pos = 0;
        let mut acc: Option<GroupSpec> = None;
        loop {
            let rest = &input[pos..];
            let atom = if let Some(path) = rest.strip_prefix("file:") {
                if path.is_empty() {
                    return Err(syntax(pos, "empty file path"));
                }
                pos = input.len();
                GroupSpec::File(PathBuf::from(path))
            } else {
                let (ctor, prefix): (fn(usize) -> GroupSpec, &str) = if rest.starts_with("Dic") {
                    (GroupSpec::Dicyclic, "Dic")
                } else if rest.starts_with('Z') {
                    (GroupSpec::Cyclic, "Z")
                } else if rest.starts_with('D') {
                    (GroupSpec::Dihedral, "D")
                } else if rest.starts_with('S') {
                    (GroupSpec::Symmetric, "S")
                } else if rest.starts_with('A') {
                    (GroupSpec::Alternating, "A")
                } else {
                    return Err(syntax(pos, "expected Z, D, Dic, S, A or file:"));
                };
                pos += prefix.len();
                let digits = input[pos..]
                    .chars()
                    .take_while(char::is_ascii_digit)
                    .count();
                if digits == 0 {
                    return Err(syntax(pos, "expected a number"));
                }
                let n = input[pos..pos + digits]
                    .parse()
                    .map_err(|_| syntax(pos, "number too large"))?;
                pos += digits;
                ctor(n)
            };
            acc = Some(match acc {
                None => atom,
                Some(left) => GroupSpec::Product(Box::new(left), Box::new(atom)),
            });
            if pos == input.len() {
                break;
            }
            if input[pos..].starts_with('x') {
                pos += 1;
            } else {
                return Err(syntax(pos, "expected `x` or end of input"));
            }
        }
        acc.ok_or_else(|| syntax(0, "empty group expression"))
    }
}

/// A catalog entry: the group plus the expression it was built from.
#[derive(Debug, Clone)]
pub struct GroupRecord {
    pub group: FiniteGroup,
    pub source: String,
    pub order_class: OrderClass,
}

impl GroupRecord {
    pub fn from_group(group: FiniteGroup, source: impl Into<String>) -> Self {
        let order_class = group.order_class();
        GroupRecord {
            group,
            source: source.into(),
            order_class,
        }
    }

    pub fn from_spec(spec: &str) -> Result<Self, SpecError> {
        let group = spec.parse::<GroupSpec>()?.build()?;
        Ok(Self::from_group(group, spec))
    }

    pub fn name(&self) -> &str {
        self.group.name()
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }
}

/// One group per isomorphism class of every order up to 15 (28 groups).
pub const SMALL_GROUPS: [&str; 28] = [
    "Z1", "Z2", "Z3", "Z4", "Z2xZ2", "Z5", "Z6", "D3", "Z7", "Z8", "Z4xZ2", "Z2xZ2xZ2", "D4",
    "Dic2", "Z9", "Z3xZ3", "Z10", "D5", "Z11", "Z12", "Z6xZ2", "D6", "A4", "Dic3", "Z13", "Z14",
    "D7", "Z15",
];

pub fn small_order_catalog() -> Vec<GroupRecord> {
    SMALL_GROUPS
        .iter()
        .map(|s| GroupRecord::from_spec(s).expect("built-in expression"))
        .collect()
}

/// Expressions for the parametric families: `Z_n` (n ≤ 60), `Z_m x Z_k`
/// (2 ≤ m ≤ k, mk ≤ 48), `D_n` (n ≤ 24), `Dic_n` (n ≤ 12), and `S3`, `S4`,
/// `A4`, `A5`.
pub fn family_specs() -> Vec<String> {
    let mut specs: Vec<String> = (1..=60).map(|n| format!("Z{n}")).collect();
    for m in 2..=24 {
        for k in m..=48 / m {
            specs.push(format!("Z{m}xZ{k}"));
        }
    }
    specs.extend((1..=24).map(|n| format!("D{n}")));
    specs.extend((2..=12).map(|n| format!("Dic{n}")));
    specs.extend(["S3", "S4", "A4", "A5"].map(String::from));
    specs
}

/// The complete list up to order 15 followed by family members of larger
/// order, skipping isomorphic repeats; sorted by order with ties kept in
/// insertion order. Only groups of order at most `max_order` are included.
pub fn builtin_catalog(max_order: usize) -> Vec<GroupRecord> {
    let mut records: Vec<GroupRecord> = small_order_catalog()
        .into_iter()
        .filter(|r| r.order() <= max_order)
        .collect();
    for spec in family_specs() {
        let parsed: GroupSpec = spec.parse().expect("built-in expression");
        let Ok(group) = parsed.build() else { continue };
        if group.order() <= 15 || group.order() > max_order {
            continue;
        }
        let hist = group.order_histogram();
        let duplicate = records.iter().any(|r| {
            r.order() == group.order()
                && r.group.order_histogram() == hist
                && is_isomorphic_small_group(&r.group, &group)
        });
        if !duplicate {
            records.push(GroupRecord::from_group(group, spec));
        }
    }
    records.sort_by_key(GroupRecord::order);
    records
}
