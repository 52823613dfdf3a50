// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Closed-form bounds on the order of mixed cages.
//!
//! All arithmetic is exact `u64` with overflow reported as an error.

use std::fmt;

use crate::error::BoundsError;

/// The query triple `[z, r; g]`: directed degree, undirected degree, girth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CageParams {
    pub z: usize,
    pub r: usize,
    pub g: usize,
}

impl CageParams {
    pub fn new(z: usize, r: usize, g: usize) -> Result<Self, BoundsError> {
        if z + r < 1 {
            return Err(BoundsError::NoDegree);
        }
        if g < 3 {
            return Err(BoundsError::GirthTooSmall(g as u64, 3));
        }
        Ok(CageParams { z, r, g })
    }
}

impl fmt::Display for CageParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{};{}]", self.z, self.r, self.g)
    }
}

/// One bound together with the construction or argument it comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bound {
    pub value: u64,
    pub provenance: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub params: CageParams,
    pub lower: Option<Bound>,
    pub upper: Option<Bound>,
}

impl BoundReport {
    /// True when the lower and upper bounds meet.
    pub fn is_exact(&self) -> bool {
        matches!((self.lower, self.upper), (Some(l), Some(u)) if l.value == u.value)
    }
}

fn checked_sum<I: IntoIterator<Item = Result<u64, BoundsError>>>(
    it: I,
) -> Result<u64, BoundsError> {
    it.into_iter().try_fold(0u64, |acc, x| {
        acc.checked_add(x?).ok_or(BoundsError::Overflow)
    })
}

fn pow(base: u64, exp: u64) -> Result<u64, BoundsError> {
    let exp = u32::try_from(exp).map_err(|_| BoundsError::Overflow)?;
    base.checked_pow(exp).ok_or(BoundsError::Overflow)
}

fn check_rg(r: usize, g: usize) -> Result<(u64, u64), BoundsError> {
    if r < 2 {
        return Err(BoundsError::DegreeTooSmall(r as u64));
    }
    if g < 3 {
        return Err(BoundsError::GirthTooSmall(g as u64, 3));
    }
    Ok((r as u64, g as u64))
}

/// Moore's lower bound `n0(r, g)` for undirected `(r, g)`-cages.
///
/// Odd `g`: `1 + r + r(r-1) + ... + r(r-1)^((g-3)/2)`.
/// Even `g`: `2(1 + (r-1) + ... + (r-1)^(g/2-1))`.
pub fn moore_bound(r: usize, g: usize) -> Result<u64, BoundsError> {
    let (r, g) = check_rg(r, g)?;
    if g % 2 == 1 {
        let tail = checked_sum(
            (0..=(g - 3) / 2).map(|i| pow(r - 1, i)?.checked_mul(r).ok_or(BoundsError::Overflow)),
        )?;
        tail.checked_add(1).ok_or(BoundsError::Overflow)
    } else {
        checked_sum((0..g / 2).map(|i| pow(r - 1, i)))?
            .checked_mul(2)
            .ok_or(BoundsError::Overflow)
    }
}

/// Lower bound on the order of a `[1, r; g]`-mixed cage, from counting the
/// mixed tree built on a directed path of `g` vertices.
pub fn mixed_lower_bound_1rg(r: usize, g: usize) -> Result<u64, BoundsError> {
    check_rg(r, g)?;
    let top = if g % 2 == 1 { (g - 3) / 2 } else { (g - 2) / 2 };
    let inner = checked_sum((1..=top).map(|i| moore_bound(r, 2 * i + 1)))?
        .checked_add(1)
        .and_then(|x| x.checked_mul(2))
        .ok_or(BoundsError::Overflow)?;
    if g % 2 == 1 {
        inner
            .checked_add(moore_bound(r, g)?)
            .ok_or(BoundsError::Overflow)
    } else {
        Ok(inner)
    }
}

/// Order of the circulant `[z, 1; 4]`-mixed graph: `3(z+1)` for odd `z`,
/// `3z+2` for even `z`.
pub fn upper_bound_z14(z: usize) -> Result<u64, BoundsError> {
    if z < 1 {
        return Err(BoundsError::ZeroDirectedDegree);
    }
    let z = z as u64;
    let v = if z % 2 == 1 {
        z.checked_add(1).and_then(|x| x.checked_mul(3))
    } else {
        z.checked_mul(3).and_then(|x| x.checked_add(2))
    };
    v.ok_or(BoundsError::Overflow)
}

/// `z(g-1)+1`, the order of the circulant `z`-regular digraph of girth `g`.
/// Conjectured to be the exact directed cage order; always an upper bound.
pub fn directed_cage_order_conjectured(z: usize, g: usize) -> Result<u64, BoundsError> {
    if z < 1 {
        return Err(BoundsError::ZeroDirectedDegree);
    }
    if g < 2 {
        return Err(BoundsError::GirthTooSmall(g as u64, 2));
    }
    (z as u64)
        .checked_mul(g as u64 - 1)
        .and_then(|x| x.checked_add(1))
        .ok_or(BoundsError::Overflow)
}

/// Every vertex of a simple mixed graph with girth at least 3 has `2z + r`
/// distinct neighbours, and some cycle has `g` distinct vertices.
pub fn trivial_lower_bound(p: CageParams) -> u64 {
    (p.g as u64).max(2 * p.z as u64 + p.r as u64 + 1)
}

/// Collects every bound this crate knows for `params`.
pub fn bound_report(params: CageParams) -> Result<BoundReport, BoundsError> {
    let CageParams { z, r, g } = params;
    let trivial = Bound {
        value: trivial_lower_bound(params),
        provenance: "trivial",
    };
    let mut lower = Some(trivial);
    let mut upper = None;
    let raise = |lower: &mut Option<Bound>, b: Bound| {
        if lower.is_none_or(|l| b.value >= l.value) {
            *lower = Some(b);
        }
    };

    if z == 0 && r >= 2 {
        raise(
            &mut lower,
            Bound {
                value: moore_bound(r, g)?,
                provenance: "moore",
            },
        );
    }
    if z == 0 && r == 1 {
        // a perfect matching has no cycle at all
        lower = None;
    }
    if r == 0 {
        upper = Some(Bound {
            value: directed_cage_order_conjectured(z, g)?,
            provenance: "circulant-digraph",
        });
    }
    if z == 1 && r >= 2 {
        raise(
            &mut lower,
            Bound {
                value: mixed_lower_bound_1rg(r, g)?,
                provenance: "mixed-tree",
            },
        );
        if r == 2 {
            upper = Some(Bound {
                value: mixed_lower_bound_1rg(2, g)?,
                provenance: if g % 2 == 1 {
                    "circulant-12g"
                } else {
                    "h-even"
                },
            });
        } else if g == 4 {
            upper = Some(Bound {
                value: 2 * (r as u64 + 2),
                provenance: "k-bipartite",
            });
        } else if r == 3 && g == 5 {
            upper = Some(Bound {
                value: 28,
                provenance: "h28",
            });
        }
    }
    if r == 1 && g == 4 && z >= 1 {
        let u = upper_bound_z14(z)?;
        upper = Some(Bound {
            value: u,
            provenance: "circulant-z14",
        });
        if z <= 2 {
            raise(
                &mut lower,
                Bound {
                    value: u,
                    provenance: "z14-exact",
                },
            );
        }
    }
    Ok(BoundReport {
        params,
        lower,
        upper,
    })
}
