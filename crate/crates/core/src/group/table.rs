//! Plain-text Cayley tables.
//!
//! ```text
//! # optional comments
//! order 3
//! 0 1 2
//! 1 2 0
//! 2 0 1
//! ```

use super::{FiniteGroup, GroupError};

/// Parses a Cayley-table file. Element labels are the element indices.
pub fn from_cayley_table(name: &str, text: &str) -> Result<FiniteGroup, GroupError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(GroupError::Parse {
        line: 1,
        message: "missing `order <n>` header".into(),
    })?;
    let order = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["order", n] => n.parse::<usize>().map_err(|e| GroupError::Parse {
            line: header_line,
            message: format!("bad order `{n}`: {e}"),
        })?,
        _ => {
            return Err(GroupError::Parse {
                line: header_line,
                message: format!("expected `order <n>`, found `{header}`"),
            })
        }
    };
    if order == 0 {
        return Err(GroupError::EmptyGroup);
    }

    let mut rows = Vec::with_capacity(order);
    for (line, text) in lines {
        let row = text
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|e| GroupError::Parse {
                    line,
                    message: format!("bad entry `{tok}`: {e}"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    if rows.len() != order {
        return Err(GroupError::RowCount {
            order,
            rows: rows.len(),
        });
    }
    let labels = (0..order).map(|i| i.to_string()).collect();
    FiniteGroup::new(name, labels, rows)
}

/// Serializes the table in the format read by [`from_cayley_table`].
pub fn to_cayley_table(group: &FiniteGroup) -> String {
    let mut out = format!("order {}\n", group.order());
    for a in group.elements() {
        let row: Vec<String> = group.row(a).iter().map(usize::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_cyclic, make_dihedral};

    #[test]
    fn parses_z2() {
        let g = from_cayley_table("z2", "order 2\n0 1\n1 0\n").unwrap();
        assert_eq!(g.order(), 2);
        assert!(g.is_cyclic());
    }

    #[test]
    fn comments_are_skipped() {
        let g = from_cayley_table("z2", "# Z_2\norder 2\n# row 0\n0 1\n1 0\n").unwrap();
        assert_eq!(g.order(), 2);
    }

    #[test]
    fn repeated_row_entry_is_latin_violation() {
        let err = from_cayley_table("bad", "order 2\n0 1\n0 0\n").unwrap_err();
        assert!(
            matches!(
                err,
                GroupError::RowRepeat {
                    row: 1,
                    value: 0,
                    first: 0,
                    second: 1
                }
            ),
            "{err}"
        );
        let err = from_cayley_table("bad", "order 2\n0 0\n1 0\n").unwrap_err();
        assert!(matches!(err, GroupError::RowRepeat { row: 0, .. }), "{err}");
    }

    #[test]
    fn header_and_shape_errors() {
        assert!(matches!(
            from_cayley_table("x", "").unwrap_err(),
            GroupError::Parse { line: 1, .. }
        ));
        assert!(matches!(
            from_cayley_table("x", "size 2\n0 1\n1 0\n").unwrap_err(),
            GroupError::Parse { line: 1, .. }
        ));
        assert!(matches!(
            from_cayley_table("x", "order 2\n0 1\n").unwrap_err(),
            GroupError::RowCount { order: 2, rows: 1 }
        ));
        assert!(matches!(
            from_cayley_table("x", "order 2\n0 1\n1 0 1\n").unwrap_err(),
            GroupError::RowLength {
                row: 1,
                len: 3,
                order: 2
            }
        ));
        assert!(matches!(
            from_cayley_table("x", "order 2\n0 1\n1 q\n").unwrap_err(),
            GroupError::Parse { line: 3, .. }
        ));
    }

    #[test]
    fn round_trip_is_bit_exact() {
        for g in [make_dihedral(3).unwrap(), make_cyclic(7).unwrap()] {
            let text = to_cayley_table(&g);
            let back = from_cayley_table(g.name(), &text).unwrap();
            assert_eq!(to_cayley_table(&back), text);
            for a in g.elements() {
                assert_eq!(back.row(a), g.row(a));
            }
        }
    }
}
