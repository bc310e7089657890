//! Standard graph families with canonical vertex numbering.

use alloc::format;
use alloc::string::ToString;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `path n`: `P_n`, vertices `0..n` in order.
    Path,
    /// `cycle n`: `C_n` (n ≥ 3).
    Cycle,
    /// `complete n`: `K_n`.
    Complete,
    /// `complete_bipartite r s`: part A = `0..r`, part B = `r..r+s`.
    CompleteBipartite,
    /// `star k`: `K_{1,k}` with hub 0.
    Star,
    /// `friendship k`: `F_k = K_1 + kK_2`, hub 0, triangles `{0, 2i+1, 2i+2}`.
    Friendship,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::CompleteBipartite,
        Family::Star,
        Family::Friendship,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Star => "star",
            Family::Friendship => "friendship",
        }
    }

    fn arity(self) -> usize {
        match self {
            Family::CompleteBipartite => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidParams {
                family: "generate",
                constraint: format!(
                    "unknown family {s:?}; expected one of path, cycle, complete, complete_bipartite, star, friendship"
                ),
            })
    }
}

fn invalid(family: Family, constraint: &str) -> Error {
    Error::InvalidParams {
        family: family.name(),
        constraint: constraint.to_string(),
    }
}

/// Builds the named family member.
pub fn generate(family: Family, params: &[usize]) -> Result<Graph> {
    if params.len() != family.arity() {
        return Err(Error::InvalidParams {
            family: family.name(),
            constraint: format!("expects {} parameter(s), got {}", family.arity(), params.len()),
        });
    }
    match family {
        Family::Path => {
            let n = params[0];
            if n < 1 {
                return Err(invalid(family, "n must be at least 1"));
            }
            Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
        }
        Family::Cycle => {
            let n = params[0];
            if n < 3 {
                return Err(invalid(family, "n must be at least 3"));
            }
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Family::Complete => {
            let n = params[0];
            if n < 1 {
                return Err(invalid(family, "n must be at least 1"));
            }
            Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        Family::CompleteBipartite => {
            let (r, s) = (params[0], params[1]);
            if r < 1 || s < 1 {
                return Err(invalid(family, "r and s must both be at least 1"));
            }
            Graph::from_edges(r + s, (0..r).flat_map(|a| (r..r + s).map(move |b| (a, b))))
        }
        Family::Star => {
            let k = params[0];
            Graph::from_edges(k + 1, (1..=k).map(|leaf| (0, leaf)))
        }
        Family::Friendship => {
            let k = params[0];
            if k < 1 {
                return Err(invalid(family, "k must be at least 1"));
            }
            let edges = (0..k).flat_map(|i| {
                let (a, b) = (2 * i + 1, 2 * i + 2);
                [(0, a), (0, b), (a, b)]
            });
            Graph::from_edges(2 * k + 1, edges)
        }
    }
}

pub fn path(n: usize) -> Graph {
    generate(Family::Path, &[n]).expect("n >= 1")
}

pub fn cycle(n: usize) -> Graph {
    generate(Family::Cycle, &[n]).expect("n >= 3")
}

pub fn complete(n: usize) -> Graph {
    generate(Family::Complete, &[n]).expect("n >= 1")
}

pub fn complete_bipartite(r: usize, s: usize) -> Graph {
    generate(Family::CompleteBipartite, &[r, s]).expect("r, s >= 1")
}

pub fn star(k: usize) -> Graph {
    generate(Family::Star, &[k]).expect("any k")
}

pub fn friendship(k: usize) -> Graph {
    generate(Family::Friendship, &[k]).expect("k >= 1")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_shapes() {
        let c6 = generate(Family::Cycle, &[6]).unwrap();
        assert_eq!((c6.n(), c6.edge_count()), (6, 6));
        assert!(c6.has_edge(5, 0));

        let k23 = generate(Family::CompleteBipartite, &[2, 3]).unwrap();
        assert_eq!((k23.n(), k23.edge_count()), (5, 6));
        assert!(!k23.has_edge(0, 1));
        assert!(!k23.has_edge(2, 4));

        let f2 = generate(Family::Friendship, &[2]).unwrap();
        assert_eq!((f2.n(), f2.edge_count()), (5, 6));
        assert_eq!(f2.degree(0), 4);

        assert_eq!(star(3).degrees(), [3, 1, 1, 1]);
        assert_eq!(complete(4).edge_count(), 6);
        assert_eq!(path(1).n(), 1);
    }

    #[test]
    fn friendship_is_hub_joined_to_matching() {
        let matching = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(Graph::empty(1).join(&matching), friendship(2));
    }

    #[test]
    fn invalid_params_name_the_constraint() {
        let err = generate(Family::Cycle, &[2]).unwrap_err();
        assert!(err.to_string().contains("at least 3"), "{err}");
        assert!(generate(Family::CompleteBipartite, &[0, 3]).is_err());
        assert!(generate(Family::CompleteBipartite, &[3]).is_err());
        assert!(generate(Family::Path, &[0]).is_err());
        assert!("wheel".parse::<Family>().is_err());
        assert_eq!("complete_bipartite".parse::<Family>(), Ok(Family::CompleteBipartite));
    }
}
