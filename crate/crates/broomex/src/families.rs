//! The forbidden broom and the candidate extremal families, together with
//! closed-form objective values and the prediction map.
//!
//! Families, on n vertices throughout:
//! * `H(k, n)`: k vertices adjacent to everything (a clique among themselves),
//!   the other n-k vertices independent. `H(1, n)` is the star.
//! * `H*(k, n)`: `H(k, n)` plus one edge inside the independent part.
//! * `F(n)`: the star plus a maximum matching on its leaves.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{binomial, checked_pow, Graph, Objective, MAX_VERTICES};

/// The pair `(ell, s)` identifying the forbidden broom `B(ell, s)`: a path on
/// `ell` vertices with `s` extra leaves attached to a penultimate vertex.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct BroomSpec {
    ell: u32,
    s: u32,
}

impl BroomSpec {
    /// `ell >= 4`; shorter brooms degenerate to stars and fall outside the
    /// regime this crate targets.
    pub fn new(ell: u32, s: u32) -> Result<Self> {
        if ell < 4 {
            return Err(Error::InvalidParameter(format!(
                "broom path length must be at least 4 vertices, got {ell}"
            )));
        }
        Ok(BroomSpec { ell, s })
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// Clique size of the predicted extremal family: floor((ell - 2) / 2).
    pub fn k(&self) -> u32 {
        (self.ell - 2) / 2
    }

    /// Vertices of the broom itself.
    pub fn broom_order(&self) -> u32 {
        self.ell + self.s
    }
}

impl std::fmt::Display for BroomSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "B({},{})", self.ell, self.s)
    }
}

/// Identifier for a named graph family, with the parameters that pin down one
/// member.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(tag = "tag")]
pub enum FamilyId {
    H {
        k: u32,
        n: u32,
    },
    Hstar {
        k: u32,
        n: u32,
    },
    F {
        n: u32,
    },
    Star {
        n: u32,
    },
    Path {
        n: u32,
    },
    /// Alias spelling for `H(k, n)`, the complete split graph.
    CompleteSplit {
        k: u32,
        n: u32,
    },
    Broom {
        ell: u32,
        s: u32,
    },
}

impl FamilyId {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            FamilyId::H { k, n } => make_h(k, n),
            FamilyId::Hstar { k, n } => make_hstar(k, n),
            FamilyId::F { n } => make_f(n),
            FamilyId::Star { n } => Graph::star(checked_order(n)?),
            FamilyId::Path { n } => Graph::path(checked_order(n)?),
            FamilyId::CompleteSplit { k, n } => make_h(k, n),
            FamilyId::Broom { ell, s } => make_broom(&BroomSpec::new(ell, s)?),
        }
    }
}

impl std::fmt::Display for FamilyId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            FamilyId::H { k, n } => write!(f, "H({k},{n})"),
            FamilyId::Hstar { k, n } => write!(f, "H*({k},{n})"),
            FamilyId::F { n } => write!(f, "F({n})"),
            FamilyId::Star { n } => write!(f, "S({n})"),
            FamilyId::Path { n } => write!(f, "P({n})"),
            FamilyId::CompleteSplit { k, n } => write!(f, "CS({k},{n})"),
            FamilyId::Broom { ell, s } => write!(f, "B({ell},{s})"),
        }
    }
}

fn checked_order(n: u32) -> Result<usize> {
    if n == 0 || n as usize > MAX_VERTICES {
        return Err(Error::InvalidParameter(format!(
            "order must be in 1..={MAX_VERTICES}, got {n}"
        )));
    }
    Ok(n as usize)
}

/// The broom `B(ell, s)`: vertices `0..ell-1` form the path in order, and the
/// penultimate vertex `ell-2` carries the extra leaves `ell..ell+s-1`.
pub fn make_broom(spec: &BroomSpec) -> Result<Graph> {
    let total = spec.broom_order() as usize;
    if total > MAX_VERTICES {
        return Err(Error::InvalidParameter(format!(
            "broom on {total} vertices exceeds the {MAX_VERTICES}-vertex cap"
        )));
    }
    let ell = spec.ell() as usize;
    let center = ell - 2;
    let mut edges: Vec<(usize, usize)> = (1..ell).map(|v| (v - 1, v)).collect();
    for leaf in ell..total {
        edges.push((center, leaf));
    }
    Graph::from_edges(total, &edges)
}

/// `H(k, n)` for `1 <= k <= n-1`: vertices `0..k` adjacent to everything,
/// vertices `k..n` independent.
pub fn make_h(k: u32, n: u32) -> Result<Graph> {
    let n_us = checked_order(n)?;
    if k == 0 || k >= n {
        return Err(Error::InvalidParameter(format!(
            "H(k,n) needs 1 <= k <= n-1, got k={k}, n={n}"
        )));
    }
    let k_us = k as usize;
    let mut g = Graph::empty(n_us)?;
    for u in 0..k_us {
        for v in (u + 1)..n_us {
            g = g.with_edge_added(u, v)?;
        }
    }
    Ok(g)
}

/// `H*(k, n)`: `H(k, n)` plus the edge `{k, k+1}` inside the independent
/// part. All placements of that edge are isomorphic; fixing one keeps output
/// deterministic. Requires `1 <= k <= n-3` so two independent vertices exist.
pub fn make_hstar(k: u32, n: u32) -> Result<Graph> {
    if k == 0 || k + 3 > n {
        return Err(Error::InvalidParameter(format!(
            "H*(k,n) needs 1 <= k <= n-3, got k={k}, n={n}"
        )));
    }
    make_h(k, n)?.with_edge_added(k as usize, k as usize + 1)
}

/// `F(n)` for `n >= 2`: the star on `n` vertices (center 0) plus the matching
/// `{1,2}, {3,4}, ...` of floor((n-1)/2) edges; when `n-1` is odd the last
/// leaf stays unmatched.
pub fn make_f(n: u32) -> Result<Graph> {
    let n_us = checked_order(n)?;
    if n_us < 2 {
        return Err(Error::InvalidParameter(format!(
            "F(n) needs n >= 2, got {n}"
        )));
    }
    let mut g = Graph::star(n_us)?;
    let mut v = 1;
    while v + 1 < n_us {
        g = g.with_edge_added(v, v + 1)?;
        v += 2;
    }
    Ok(g)
}

/// Which family the closed form predicts as extremal for `B(ell, s)`-free
/// graphs on `n` vertices, by parity of `ell`:
/// even `ell` gives `H(k, n)`; odd `ell >= 7`, or `ell = 5` with `s = 0`,
/// gives `H*(k, n)`; `ell = 5` with `s > 0` gives `F(n)`.
pub fn predicted_family_id(spec: &BroomSpec, n: u32) -> Result<FamilyId> {
    let k = spec.k();
    let id = if spec.ell().is_multiple_of(2) {
        FamilyId::H { k, n }
    } else if spec.ell() >= 7 || spec.s() == 0 {
        FamilyId::Hstar { k, n }
    } else {
        FamilyId::F { n }
    };
    // Validate the parameters now so callers get the range error immediately.
    validate_family(&id)?;
    Ok(id)
}

fn validate_family(id: &FamilyId) -> Result<()> {
    match *id {
        FamilyId::H { k, n } => {
            checked_order(n)?;
            if k == 0 || k >= n {
                return Err(Error::InvalidParameter(format!(
                    "H(k,n) needs 1 <= k <= n-1, got k={k}, n={n}"
                )));
            }
        }
        FamilyId::Hstar { k, n } => {
            checked_order(n)?;
            if k == 0 || k + 3 > n {
                return Err(Error::InvalidParameter(format!(
                    "H*(k,n) needs 1 <= k <= n-3, got k={k}, n={n}"
                )));
            }
        }
        FamilyId::F { n } => {
            checked_order(n)?;
            if n < 2 {
                return Err(Error::InvalidParameter(format!(
                    "F(n) needs n >= 2, got {n}"
                )));
            }
        }
        _ => {}
    }
    Ok(())
}

/// Smallest `n` at which the predicted family exists.
pub fn family_min_n(spec: &BroomSpec) -> u32 {
    let k = spec.k();
    if spec.ell().is_multiple_of(2) {
        k + 1
    } else if spec.ell() >= 7 || spec.s() == 0 {
        k + 3
    } else {
        2
    }
}

/// The predicted extremal family and its constructed member.
pub fn predicted_extremal(spec: &BroomSpec, n: u32) -> Result<(FamilyId, Graph)> {
    let id = predicted_family_id(spec, n)?;
    let g = id.build()?;
    Ok((id, g))
}

/// Closed-form objective value of the predicted family, computed from the
/// degree counts alone. Must always equal the objective evaluated on the
/// constructed graph; the test suites enforce that agreement.
pub fn closed_form_value(spec: &BroomSpec, n: u32, r: u32, objective: Objective) -> Result<u64> {
    if r < objective.min_r() {
        return Err(Error::InvalidParameter(format!(
            "objective {objective} requires r >= {}, got {r}",
            objective.min_r()
        )));
    }
    let id = predicted_family_id(spec, n)?;
    let nn = n as u64;
    // Per-degree contribution under the chosen objective.
    let f = |d: u64| -> Result<u64> {
        match objective {
            Objective::Er => checked_pow(d, r, "closed_form_value"),
            Objective::Stars => u64::try_from(binomial(d, r as u64))
                .map_err(|_| Error::Overflow("closed_form_value")),
        }
    };
    let add = |a: u64, b: u64| a.checked_add(b).ok_or(Error::Overflow("closed_form_value"));
    let mul = |a: u64, b: u64| a.checked_mul(b).ok_or(Error::Overflow("closed_form_value"));

    match id {
        FamilyId::H { k, .. } => {
            let k = k as u64;
            add(mul(k, f(nn - 1)?)?, mul(nn - k, f(k)?)?)
        }
        FamilyId::Hstar { k, .. } => {
            let k = k as u64;
            let high = mul(k, f(nn - 1)?)?;
            let low = mul(nn - k - 2, f(k)?)?;
            let bumped = mul(2, f(k + 1)?)?;
            add(add(high, low)?, bumped)
        }
        FamilyId::F { .. } => {
            let matched = 2 * ((nn - 1) / 2);
            let leftover = (nn - 1) % 2;
            let center = f(nn - 1)?;
            let pairs = mul(matched, f(2)?)?;
            let lone = mul(leftover, f(1)?)?;
            add(add(center, pairs)?, lone)
        }
        _ => unreachable!("prediction only emits H, H* or F"),
    }
}
