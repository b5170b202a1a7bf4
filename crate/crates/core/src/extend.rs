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

//! Coloring one more edge: fans, rotations and alternating trails.
//!
//! A color `c` is *spare* at `x` when it appears fewer than `f(x)` times
//! there. To color `e = vy₀` with `k` colors, where `v` and each of its
//! neighbors have a spare color:
//!
//! 1. Use a color spare at both ends if there is one.
//! 2. Grow a fan `y₀, y₁, …, y_p` of distinct neighbors of `v`, where edge
//!    `vyᵢ` has a color spare at `yᵢ₋₁`. If some `yᵢ` shares a spare color
//!    with `v`, rotate: `vyⱼ` takes the color of `vyⱼ₊₁` for `j < i` and
//!    `vyᵢ` takes the shared color.
//! 3. Otherwise the fan is maximal: with `α` spare at `y_p` and `β` spare at
//!    `v`, every `α`-edge at `v` lies in the fan and no fan vertex has `β`
//!    spare. Swap `α`/`β` along an alternating trail that starts at `v` on the
//!    first fan edge colored `α`; afterwards `α` is spare at `v`, and either
//!    the fan prefix ending just before that edge or a longer prefix (cut at
//!    the next fan edge the trail touched) can be rotated with `α`.
//!
//! An alternating trail generalizes a Kempe chain to f-colorings. It leaves
//! the counts of every vertex except its two ends unchanged, and it can
//! always be continued until it reaches a vertex that absorbs the change.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::coloring::{verify_partial, ColorState, FColoring, UNCOLORED};
use crate::graph::{FInstance, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtendError {
    EdgeOutOfRange { edge: usize },
    /// The edge to extend over already has a color.
    EdgeAlreadyColored { edge: usize },
    /// The partial coloring is not a valid f-coloring with the given palette.
    InvalidPartial,
    /// Neither endpoint of `edge` has a spare color at itself and at all of
    /// its neighbors.
    PreconditionFailed { edge: usize },
    /// The recoloring broke an invariant. Never expected.
    InternalExtensionFailure { edge: usize },
}

impl fmt::Display for ExtendError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendError::EdgeOutOfRange { edge } => write!(f, "edge {edge} does not exist"),
            ExtendError::EdgeAlreadyColored { edge } => write!(f, "edge {edge} is already colored"),
            ExtendError::InvalidPartial => write!(f, "partial coloring is not a valid f-coloring"),
            ExtendError::PreconditionFailed { edge } => write!(
                f,
                "no endpoint of edge {edge} has a spare color at itself and all of its neighbors"
            ),
            ExtendError::InternalExtensionFailure { edge } => {
                write!(f, "internal error while extending the coloring over edge {edge}")
            }
        }
    }
}

impl core::error::Error for ExtendError {}

/// Colors the single uncolored edge `e` of `partial` with the palette
/// `1..=k`, recoloring other edges as needed.
pub fn extend_one_edge(
    inst: &FInstance,
    partial: &FColoring,
    e: usize,
    k: usize,
) -> Result<FColoring, ExtendError> {
    if e >= inst.m() {
        return Err(ExtendError::EdgeOutOfRange { edge: e });
    }
    if partial.colors().len() != inst.m() || partial.colors().iter().any(|&c| c > k) {
        return Err(ExtendError::InvalidPartial);
    }
    if partial.color(e) != UNCOLORED {
        return Err(ExtendError::EdgeAlreadyColored { edge: e });
    }
    let with_k = FColoring::new(k, partial.colors().to_vec());
    match verify_partial(inst, &with_k) {
        Ok(report) if report.is_valid() => {}
        _ => return Err(ExtendError::InvalidPartial),
    }
    let mut st = ColorState::from_coloring(inst, &with_k, k);
    extend_in_place(&mut st, e)?;
    Ok(st.to_coloring())
}

/// Proper edge coloring with at most `Δ + 1` colors, built edge by edge in
/// index order.
pub fn vizing_color(g: &Graph) -> FColoring {
    let inst = FInstance::uniform(g.clone(), 1).expect("f = 1 is positive");
    let k = g.max_degree() + 1;
    let mut st = ColorState::new(&inst, k);
    for e in 0..g.m() {
        // `k > Δ` leaves a spare color at every vertex at every step.
        extend_in_place(&mut st, e).expect("Vizing extension succeeds with Δ + 1 colors");
    }
    st.to_coloring().compacted()
}

/// Colors every uncolored edge of `st` in index order. Fails if some step
/// lacks the spare colors it needs.
pub(crate) fn color_remaining(st: &mut ColorState<'_>) -> Result<(), ExtendError> {
    for e in 0..st.inst.m() {
        if st.color(e) == UNCOLORED {
            extend_in_place(st, e)?;
        }
    }
    Ok(())
}

fn center_qualifies(st: &ColorState<'_>, center: usize, e: usize) -> bool {
    let g = st.inst.graph();
    st.first_spare(center).is_some()
        && g
            .incident(center)
            .iter()
            .filter(|&&(_, ed)| ed == e || st.color(ed) != UNCOLORED)
            .all(|&(y, _)| st.first_spare(y).is_some())
}

pub(crate) fn extend_in_place(st: &mut ColorState<'_>, e: usize) -> Result<(), ExtendError> {
    let (a, b) = st.inst.graph().edge(e);
    if let Some(c) = (1..=st.k).find(|&c| st.spare(a, c) && st.spare(b, c)) {
        st.set(e, c);
        return Ok(());
    }
    let center = [a, b]
        .into_iter()
        .find(|&x| center_qualifies(st, x, e))
        .ok_or(ExtendError::PreconditionFailed { edge: e })?;
    let y0 = if center == a { b } else { a };
    let touched = fan_recolor(st, center, y0, e)?;
    if st.color(e) == UNCOLORED || !touched.iter().all(|&x| st.vertex_ok(x)) {
        return Err(ExtendError::InternalExtensionFailure { edge: e });
    }
    Ok(())
}

/// Fan entries are `(neighbor of v, edge to it)`; entry 0 is the uncolored
/// edge.
fn rotate(st: &mut ColorState<'_>, fan: &[(usize, usize)], last: usize, color: usize) {
    let shifted: Vec<usize> = fan[1..=last].iter().map(|&(_, ed)| st.color(ed)).collect();
    for (t, &c) in shifted.iter().enumerate() {
        st.set(fan[t].1, c);
    }
    st.set(fan[last].1, color);
}

/// Returns every vertex whose counts may have changed.
fn fan_recolor(
    st: &mut ColorState<'_>,
    v: usize,
    y0: usize,
    e0: usize,
) -> Result<Vec<usize>, ExtendError> {
    let fail = ExtendError::InternalExtensionFailure { edge: e0 };
    let g = st.inst.graph();
    let mut fan: Vec<(usize, usize)> = vec![(y0, e0)];
    let mut in_fan = vec![false; g.n()];
    in_fan[y0] = true;

    let alpha = loop {
        let y = fan[fan.len() - 1].0;
        if let Some(c) = (1..=st.k).find(|&c| st.spare(y, c) && st.spare(v, c)) {
            rotate(st, &fan, fan.len() - 1, c);
            return Ok(touched(v, &fan, None));
        }
        let mut next = None;
        'colors: for c in (1..=st.k).filter(|&c| st.spare(y, c)) {
            for &(z, ed) in g.incident(v) {
                if !in_fan[z] && st.color(ed) == c {
                    next = Some((z, ed));
                    break 'colors;
                }
            }
        }
        match next {
            Some((z, ed)) => {
                in_fan[z] = true;
                fan.push((z, ed));
            }
            None => break st.first_spare(y).ok_or(fail.clone())?,
        }
    };

    let beta = st.first_spare(v).ok_or(fail.clone())?;
    let j = fan
        .iter()
        .position(|&(_, ed)| st.color(ed) == alpha)
        .ok_or(fail.clone())?;
    let (swapped, end) = trail_swap(st, v, fan[j].1, alpha, beta).ok_or(fail)?;
    let prev = fan[j - 1].0;
    let last = if end != prev || st.spare(prev, alpha) {
        j - 1
    } else {
        fan.iter()
            .enumerate()
            .skip(j + 1)
            .find(|(_, (_, ed))| swapped.contains(ed))
            .map_or(fan.len() - 1, |(i, _)| i - 1)
    };
    rotate(st, &fan, last, alpha);
    Ok(touched(v, &fan, Some(end)))
}

fn touched(v: usize, fan: &[(usize, usize)], end: Option<usize>) -> Vec<usize> {
    let mut out: Vec<usize> = fan.iter().map(|&(y, _)| y).collect();
    out.push(v);
    out.extend(end);
    out
}

/// Swaps `alpha` and `beta` along an alternating trail that leaves `start`
/// on `first` (colored `alpha`), where `beta` is spare at `start`.
///
/// On return `alpha` is spare at `start`, the counts of every vertex other
/// than `start` and the trail's end are unchanged, and the coloring is valid.
/// Returns the swapped edges in trail order and the end vertex.
pub(crate) fn trail_swap(
    st: &mut ColorState<'_>,
    start: usize,
    first: usize,
    alpha: usize,
    beta: usize,
) -> Option<(Vec<usize>, usize)> {
    let g = st.inst.graph();
    let initial_alpha = st.count(start, alpha);
    let mut used = vec![false; g.m()];
    let mut swapped = Vec::new();
    let mut edge = first;
    let mut at = start;
    loop {
        let from = st.color(edge);
        let to = if from == alpha { beta } else { alpha };
        st.set(edge, to);
        used[edge] = true;
        swapped.push(edge);
        at = g.other_end(edge, at);
        let settled = if at == start {
            st.count(start, alpha) < initial_alpha && st.count(start, beta) <= st.inst.f(start)
        } else {
            st.count(at, to) <= st.inst.f(at)
        };
        if settled {
            return Some((swapped, at));
        }
        // `at` now has one `to` too many (or, at the start, has not yet
        // gained a spare `alpha`): leave on an untouched `to`-edge.
        edge = g
            .incident(at)
            .iter()
            .map(|&(_, ed)| ed)
            .find(|&ed| !used[ed] && st.color(ed) == to)?;
    }
}
