//! Up and down interval decompositions of subsets of `[n]`, the diagonals they
//! induce in the labelled polygon, and the four-diagonal frame of a nested set.

use std::fmt;

use crate::error::{Error, Result};
use crate::polygon::{Diagonal, LabeledPolygon};
use crate::subset::Subset;

/// An open down interval `(lower, upper)_Do`.
///
/// Empty down intervals `(d_r, d_{r+1})` keep their index `r` so that two empty
/// intervals at different places stay distinct.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DownInterval {
    pub lower: usize,
    pub upper: usize,
    pub elements: Subset,
    pub empty_index: Option<usize>,
}

impl DownInterval {
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

impl fmt::Display for DownInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})_Do", self.lower, self.upper)
    }
}

/// A closed up interval `[first, last]_Up`; never empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct UpInterval {
    pub first: usize,
    pub last: usize,
    pub elements: Subset,
}

impl fmt::Display for UpInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]_Up", self.first, self.last)
    }
}

/// One down interval with the up intervals nested inside it and the
/// diagonals `δ_{i,1}, ..., δ_{i,w_i+1}` associated to them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NestedComponent {
    pub down: DownInterval,
    pub ups: Vec<UpInterval>,
    pub diagonals: Vec<Diagonal>,
    /// 1-based positions in `diagonals` of the proper ones (the set `W_i`).
    pub proper_indices: Vec<usize>,
}

impl NestedComponent {
    pub fn elements(&self) -> Subset {
        self.ups
            .iter()
            .fold(self.down.elements, |acc, u| acc.union(u.elements))
    }

    /// `m_i = max W_i`
    pub fn rightmost(&self) -> Option<usize> {
        self.proper_indices.last().copied()
    }

    pub fn proper_diagonals(&self) -> impl Iterator<Item = &Diagonal> + '_ {
        self.proper_indices.iter().map(|&j| &self.diagonals[j - 1])
    }
}

impl fmt::Display for NestedComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.down)?;
        for u in &self.ups {
            write!(f, " ⊔ {u}")?;
        }
        Ok(())
    }
}

/// The decomposition of a non-empty subset, components ordered left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpDownDecomposition {
    pub subject: Subset,
    pub components: Vec<NestedComponent>,
}

impl UpDownDecomposition {
    /// Number of down intervals `v`.
    pub fn type_v(&self) -> usize {
        self.components.len()
    }

    /// Number of up intervals `w`.
    pub fn type_w(&self) -> usize {
        self.components.iter().map(|c| c.ups.len()).sum()
    }

    pub fn is_nested(&self) -> bool {
        self.type_v() == 1
    }
}

struct Region {
    down: DownInterval,
    up_members: Vec<usize>,
}

/// Splits `subset` into maximal down intervals, the empty down intervals
/// hosting up elements, and maximal up intervals inside each of them.
pub fn decompose(polygon: &LabeledPolygon, subset: Subset) -> Result<UpDownDecomposition> {
    let partition = polygon.partition();
    let n = partition.n();
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    if !subset.is_subset_of(Subset::full(n)) {
        return Err(Error::SubsetOutOfRange(subset));
    }
    let downs = partition.down_labels();
    let ups = partition.up_labels();
    let ell = downs.len();
    let extended = |k: isize| -> usize {
        if k < 0 {
            0
        } else if k as usize >= ell {
            n + 1
        } else {
            downs[k as usize]
        }
    };

    let mut regions: Vec<Region> = Vec::new();
    let mut k = 0;
    while k < ell {
        if subset.contains(downs[k]) {
            let start = k;
            while k < ell && subset.contains(downs[k]) {
                k += 1;
            }
            regions.push(Region {
                down: DownInterval {
                    lower: extended(start as isize - 1),
                    upper: extended(k as isize),
                    elements: Subset::from_elements(downs[start..k].iter().copied()),
                    empty_index: None,
                },
                up_members: Vec::new(),
            });
        } else {
            k += 1;
        }
    }
    for r in 0..ell.saturating_sub(1) {
        if !subset.contains(downs[r]) && !subset.contains(downs[r + 1]) {
            regions.push(Region {
                down: DownInterval {
                    lower: downs[r],
                    upper: downs[r + 1],
                    elements: Subset::EMPTY,
                    empty_index: Some(r + 1),
                },
                up_members: Vec::new(),
            });
        }
    }
    regions.sort_by_key(|r| (r.down.lower, r.down.upper));

    for (idx, &u) in ups.iter().enumerate() {
        if !subset.contains(u) {
            continue;
        }
        let region = regions
            .iter_mut()
            .find(|r| r.down.lower < u && u < r.down.upper)
            .ok_or_else(|| Error::Internal(format!("up label {u} lies in no down region")))?;
        region.up_members.push(idx);
    }

    let mut components = Vec::new();
    for region in regions {
        let mut intervals: Vec<UpInterval> = Vec::new();
        let mut run: Vec<usize> = Vec::new();
        let flush = |run: &mut Vec<usize>, intervals: &mut Vec<UpInterval>| {
            if let (Some(&first), Some(&last)) = (run.first(), run.last()) {
                intervals.push(UpInterval {
                    first: ups[first],
                    last: ups[last],
                    elements: Subset::from_elements(run.iter().map(|&i| ups[i])),
                });
            }
            run.clear();
        };
        for &idx in &region.up_members {
            if run.last().is_some_and(|&prev| prev + 1 != idx) {
                flush(&mut run, &mut intervals);
            }
            run.push(idx);
        }
        flush(&mut run, &mut intervals);
        if region.down.is_empty() && intervals.is_empty() {
            continue;
        }
        components.push(nested_component(polygon, region.down, intervals)?);
    }
    Ok(UpDownDecomposition {
        subject: subset,
        components,
    })
}

fn nested_component(
    polygon: &LabeledPolygon,
    down: DownInterval,
    ups: Vec<UpInterval>,
) -> Result<NestedComponent> {
    let mut diagonals = Vec::with_capacity(ups.len() + 1);
    if ups.is_empty() {
        diagonals.push(polygon.diagonal(down.lower, down.upper)?);
    } else {
        let mut left = down.lower;
        for u in &ups {
            diagonals.push(polygon.diagonal(left, u.first)?);
            left = u.last;
        }
        diagonals.push(polygon.diagonal(left, down.upper)?);
    }
    let proper_indices = diagonals
        .iter()
        .enumerate()
        .filter(|(_, d)| d.is_proper())
        .map(|(j, _)| j + 1)
        .collect();
    Ok(NestedComponent {
        down,
        ups,
        diagonals,
        proper_indices,
    })
}

/// The decomposition together with a check that every component is recovered
/// from the right sets of its proper diagonals:
/// `I = ⋃_i ( R_{δ_{i,m_i}} \ ⋃_{j ∈ W_i \ {m_i}} ([n] \ R_{δ_{i,j}}) )`.
///
/// `[n]` itself is returned without the check; its diagonals are all boundary
/// edges when the up set is non-empty.
pub fn associated_diagonals(
    polygon: &LabeledPolygon,
    subset: Subset,
) -> Result<Vec<NestedComponent>> {
    let decomposition = decompose(polygon, subset)?;
    let n = polygon.n();
    if subset == Subset::full(n) {
        return Ok(decomposition.components);
    }
    let mut rebuilt = Subset::EMPTY;
    for component in &decomposition.components {
        rebuilt = rebuilt.union(reconstruct_component(polygon, component)?);
    }
    if rebuilt != subset {
        return Err(Error::Internal(format!(
            "diagonals of {subset} rebuild {rebuilt}"
        )));
    }
    Ok(decomposition.components)
}

/// `R_{δ_m} \ ⋃_{j ≠ m} ([n] \ R_{δ_j})` over the proper diagonals of one component.
pub fn reconstruct_component(
    polygon: &LabeledPolygon,
    component: &NestedComponent,
) -> Result<Subset> {
    let n = polygon.n();
    let m = component
        .rightmost()
        .ok_or_else(|| Error::Internal(format!("component {component} has no proper diagonal")))?;
    let mut set = polygon.right_set(&component.diagonals[m - 1])?;
    for &j in &component.proper_indices {
        if j != m {
            set = set.difference(polygon.right_set(&component.diagonals[j - 1])?.complement(n));
        }
    }
    Ok(set)
}

/// Which of `δ_1, ..., δ_4` are proper, as a 4-bit mask (bit `i-1` for `δ_i`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FrameShape(u8);

impl FrameShape {
    pub const fn from_mask(mask: u8) -> Self {
        FrameShape(mask & 0b1111)
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        FrameShape(indices.iter().fold(0, |m, &i| m | 1 << (i - 1)))
    }

    pub fn mask(self) -> u8 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << (i - 1)) != 0
    }

    pub fn indices(self) -> Vec<usize> {
        (1..=4).filter(|&i| self.contains(i)).collect()
    }

    /// The eight shapes that never occur for a nested proper subset.
    pub fn impossible() -> [FrameShape; 8] {
        [
            FrameShape::from_indices(&[]),
            FrameShape::from_indices(&[2]),
            FrameShape::from_indices(&[3]),
            FrameShape::from_indices(&[4]),
            FrameShape::from_indices(&[1, 2]),
            FrameShape::from_indices(&[1, 3]),
            FrameShape::from_indices(&[2, 4]),
            FrameShape::from_indices(&[3, 4]),
        ]
    }
}

impl fmt::Display for FrameShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices().iter().map(|i| format!("δ{i}")).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// `γ = min I`, `Γ = max I`, the bounds `a, b` of the down interval, and the
/// diagonals `{a,b}`, `{a,Γ}`, `{γ,b}`, `{γ,Γ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourDiagonalFrame {
    pub subject: Subset,
    pub gamma_min: usize,
    pub gamma_max: usize,
    pub lower: usize,
    pub upper: usize,
    pub down_elements: Subset,
    pub diagonals: [Diagonal; 4],
}

impl FourDiagonalFrame {
    /// `δ_i` for `i ∈ 1..=4`.
    pub fn delta(&self, i: usize) -> &Diagonal {
        &self.diagonals[i - 1]
    }

    /// The set `𝒟_I` of proper frame diagonals.
    pub fn shape(&self) -> FrameShape {
        FrameShape(
            self.diagonals
                .iter()
                .enumerate()
                .filter(|(_, d)| d.is_proper())
                .fold(0, |m, (i, _)| m | 1 << i),
        )
    }
}

pub fn four_diagonal_frame(polygon: &LabeledPolygon, subset: Subset) -> Result<FourDiagonalFrame> {
    let decomposition = decompose(polygon, subset)?;
    frame_from_decomposition(polygon, &decomposition)
}

pub fn frame_from_decomposition(
    polygon: &LabeledPolygon,
    decomposition: &UpDownDecomposition,
) -> Result<FourDiagonalFrame> {
    let subset = decomposition.subject;
    if !decomposition.is_nested() {
        return Err(Error::FrameUndefined {
            subset,
            components: decomposition.type_v(),
        });
    }
    let down = decomposition.components[0].down;
    let (a, b) = (down.lower, down.upper);
    let gamma_min = subset.min().ok_or(Error::EmptySubset)?;
    let gamma_max = subset.max().ok_or(Error::EmptySubset)?;
    Ok(FourDiagonalFrame {
        subject: subset,
        gamma_min,
        gamma_max,
        lower: a,
        upper: b,
        down_elements: down.elements,
        diagonals: [
            polygon.diagonal(a, b)?,
            polygon.diagonal(a, gamma_max)?,
            polygon.diagonal(gamma_min, b)?,
            polygon.diagonal(gamma_min, gamma_max)?,
        ],
    })
}

/// Sub-case letter of a frame shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SubCase {
    A,
    B,
    C,
}

impl fmt::Display for SubCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SubCase::A => "a",
            SubCase::B => "b",
            SubCase::C => "c",
        })
    }
}

/// The admissible shapes of `𝒟_I` for a nested proper subset, with the
/// sub-case that describes `I` explicitly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseLabel {
    /// `𝒟_I = {δ1}`: `I` is a single down label.
    First,
    /// `{δ1,δ4}`: (a) `I = {1, u_1}` with `u_1 < d_2`; (b) `I = {u_m, n}` with `d_{ℓ-1} < u_m`.
    FirstFourth(SubCase),
    /// `{δ2,δ3}`: (a) `I = {u_s}`; (b) `I = {u_s, u_{s+1}}`.
    SecondThird(SubCase),
    /// `{δ1,δ2,δ3}`: (a) `γ, Γ` consecutive down labels; (b) `γ, Γ` consecutive up labels.
    FirstSecondThird(SubCase),
    /// `{δ1,δ2,δ4}`: (a) `γ = u_m`, `Γ = n`; (b) `γ = d_r` with `1 < r < ℓ`; (c) `γ = 1`.
    FirstSecondFourth(SubCase),
    /// `{δ1,δ3,δ4}`: (a) `γ = 1`, `Γ = u_1`; (b) `Γ = d_r` with `1 < r < ℓ`; (c) `Γ = n`.
    FirstThirdFourth(SubCase),
    /// `{δ2,δ3,δ4}`: `I` consists of up labels only.
    SecondThirdFourth,
    /// All four diagonals are proper.
    All,
    /// `I = [n]`, reported with its raw shape.
    GroundSet(FrameShape),
}

impl CaseLabel {
    pub fn shape(&self) -> FrameShape {
        let idx: &[usize] = match self {
            CaseLabel::First => &[1],
            CaseLabel::FirstFourth(_) => &[1, 4],
            CaseLabel::SecondThird(_) => &[2, 3],
            CaseLabel::FirstSecondThird(_) => &[1, 2, 3],
            CaseLabel::FirstSecondFourth(_) => &[1, 2, 4],
            CaseLabel::FirstThirdFourth(_) => &[1, 3, 4],
            CaseLabel::SecondThirdFourth => &[2, 3, 4],
            CaseLabel::All => &[1, 2, 3, 4],
            CaseLabel::GroundSet(shape) => return *shape,
        };
        FrameShape::from_indices(idx)
    }

    pub fn sub_case(&self) -> Option<SubCase> {
        match self {
            CaseLabel::FirstFourth(s)
            | CaseLabel::SecondThird(s)
            | CaseLabel::FirstSecondThird(s)
            | CaseLabel::FirstSecondFourth(s)
            | CaseLabel::FirstThirdFourth(s) => Some(*s),
            _ => None,
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseLabel::GroundSet(shape) => write!(f, "ground set {shape}"),
            other => {
                write!(f, "{}", other.shape())?;
                if let Some(s) = other.sub_case() {
                    write!(f, "({s})")?;
                }
                Ok(())
            }
        }
    }
}

/// Determines the shape of `𝒟_I` and checks that `I` has exactly the form the
/// shape predicts. Any mismatch is reported as an internal error.
pub fn classify_frame(polygon: &LabeledPolygon, subset: Subset) -> Result<CaseLabel> {
    let frame = four_diagonal_frame(polygon, subset)?;
    classify(polygon, &frame)
}

pub fn classify(polygon: &LabeledPolygon, frame: &FourDiagonalFrame) -> Result<CaseLabel> {
    let partition = polygon.partition();
    let n = partition.n();
    let shape = frame.shape();
    if frame.subject == Subset::full(n) {
        return Ok(CaseLabel::GroundSet(shape));
    }
    let ctx = CaseContext::new(polygon, frame);
    let candidates: Vec<CaseLabel> = match shape.indices().as_slice() {
        [1] => vec![CaseLabel::First],
        [1, 4] => vec![
            CaseLabel::FirstFourth(SubCase::A),
            CaseLabel::FirstFourth(SubCase::B),
        ],
        [2, 3] => vec![
            CaseLabel::SecondThird(SubCase::A),
            CaseLabel::SecondThird(SubCase::B),
        ],
        [1, 2, 3] => vec![
            CaseLabel::FirstSecondThird(SubCase::A),
            CaseLabel::FirstSecondThird(SubCase::B),
        ],
        [1, 2, 4] => [SubCase::A, SubCase::B, SubCase::C]
            .map(CaseLabel::FirstSecondFourth)
            .to_vec(),
        [1, 3, 4] => [SubCase::A, SubCase::B, SubCase::C]
            .map(CaseLabel::FirstThirdFourth)
            .to_vec(),
        [2, 3, 4] => vec![CaseLabel::SecondThirdFourth],
        [1, 2, 3, 4] => vec![CaseLabel::All],
        _ => {
            return Err(Error::Internal(format!(
                "{} has impossible frame shape {shape} ({})",
                frame.subject, partition
            )))
        }
    };
    let matching: Vec<CaseLabel> = candidates
        .into_iter()
        .filter(|label| ctx.holds(*label))
        .collect();
    match matching.as_slice() {
        [one] => Ok(*one),
        [] => Err(Error::Internal(format!(
            "{} with shape {shape} fits none of its sub-cases ({})",
            frame.subject, partition
        ))),
        _ => Err(Error::Internal(format!(
            "{} with shape {shape} fits several sub-cases {matching:?} ({})",
            frame.subject, partition
        ))),
    }
}

struct CaseContext {
    subject: Subset,
    gamma_min: usize,
    gamma_max: usize,
    lower: usize,
    upper: usize,
    n: usize,
    up: Subset,
    downs: Vec<usize>,
    ups: Vec<usize>,
}

impl CaseContext {
    fn new(polygon: &LabeledPolygon, frame: &FourDiagonalFrame) -> Self {
        let p = polygon.partition();
        CaseContext {
            subject: frame.subject,
            gamma_min: frame.gamma_min,
            gamma_max: frame.gamma_max,
            lower: frame.lower,
            upper: frame.upper,
            n: p.n(),
            up: p.up_set(),
            downs: p.down_labels(),
            ups: p.up_labels(),
        }
    }

    fn is_up(&self, x: usize) -> bool {
        self.up.contains(x)
    }

    fn is_down(&self, x: usize) -> bool {
        (1..=self.n).contains(&x) && !self.up.contains(x)
    }

    /// 1-based index of a down label.
    fn down_rank(&self, x: usize) -> Option<usize> {
        self.downs.iter().position(|&d| d == x).map(|i| i + 1)
    }

    fn up_rank(&self, x: usize) -> Option<usize> {
        self.ups.iter().position(|&u| u == x).map(|i| i + 1)
    }

    fn d(&self, r: usize) -> usize {
        self.downs[r - 1]
    }

    fn u(&self, s: usize) -> usize {
        self.ups[s - 1]
    }

    fn ell(&self) -> usize {
        self.downs.len()
    }

    fn m(&self) -> usize {
        self.ups.len()
    }

    /// Up labels of `I`, all within the closed range `[lo, hi]`.
    fn ups_within(&self, lo: usize, hi: usize) -> bool {
        self.subject
            .intersection(self.up)
            .iter()
            .all(|u| lo <= u && u <= hi)
    }

    fn down_part(&self) -> Subset {
        self.subject.difference(self.up)
    }

    fn holds(&self, label: CaseLabel) -> bool {
        let (g, big_g, a, b) = (self.gamma_min, self.gamma_max, self.lower, self.upper);
        let i = self.subject;
        let ell = self.ell();
        let m = self.m();
        match label {
            CaseLabel::First => i.len() == 1 && self.is_down(g),
            CaseLabel::FirstFourth(SubCase::A) => {
                m >= 1 && ell >= 2 && self.u(1) < self.d(2) && i == Subset::from_elements([1, self.u(1)])
            }
            CaseLabel::FirstFourth(_) => {
                m >= 1
                    && ell >= 2
                    && self.d(ell - 1) < self.u(m)
                    && i == Subset::from_elements([self.u(m), self.n])
            }
            CaseLabel::SecondThird(SubCase::A) => i.len() == 1 && self.is_up(g),
            CaseLabel::SecondThird(_) => {
                matches!((self.up_rank(g), self.up_rank(big_g)), (Some(s), Some(t)) if t == s + 1)
                    && i == Subset::from_elements([g, big_g])
            }
            CaseLabel::FirstSecondThird(SubCase::A) => {
                matches!((self.down_rank(g), self.down_rank(big_g)), (Some(r), Some(t)) if t == r + 1)
                    && self.down_part() == Subset::from_elements([g, big_g])
                    && self.ups_within(g, big_g)
            }
            CaseLabel::FirstSecondThird(_) => {
                let (Some(s), Some(t)) = (self.up_rank(g), self.up_rank(big_g)) else {
                    return false;
                };
                let between = Subset::from_elements(
                    self.downs.iter().copied().filter(|&d| g < d && d < big_g),
                );
                t == s + 1 && !between.is_empty() && i == between.with(g).with(big_g)
            }
            CaseLabel::FirstSecondFourth(SubCase::A) => {
                let Some(r) = self.down_rank(a) else {
                    return false;
                };
                m >= 1
                    && g == self.u(m)
                    && big_g == self.n
                    && r + 1 < ell
                    && self.u(m) < self.d(r + 1)
                    && i == Subset::from_elements(self.downs[r..].iter().copied()).with(g)
            }
            CaseLabel::FirstSecondFourth(SubCase::B) => {
                let Some(r) = self.down_rank(g) else {
                    return false;
                };
                1 < r
                    && r < ell
                    && b == self.d(r + 1)
                    && self.is_up(big_g)
                    && self.down_part() == Subset::singleton(g)
                    && self.ups_within(g, self.d(r + 1))
            }
            CaseLabel::FirstSecondFourth(_) => {
                ell >= 2
                    && g == 1
                    && b == self.d(2)
                    && self.is_up(big_g)
                    && m >= 1
                    && self.u(1) < big_g
                    && self.down_part() == Subset::singleton(1)
                    && self.ups_within(1, self.d(2))
            }
            CaseLabel::FirstThirdFourth(SubCase::A) => {
                let Some(r) = self.down_rank(b) else {
                    return false;
                };
                m >= 1
                    && g == 1
                    && big_g == self.u(1)
                    && r > 2
                    && self.d(r - 1) < self.u(1)
                    && i == Subset::from_elements(self.downs[..r - 1].iter().copied()).with(big_g)
            }
            CaseLabel::FirstThirdFourth(SubCase::B) => {
                let Some(r) = self.down_rank(big_g) else {
                    return false;
                };
                2 <= r
                    && r < ell
                    && self.is_up(g)
                    && self.down_part() == Subset::singleton(big_g)
                    && self.ups_within(self.d(r - 1), big_g)
            }
            CaseLabel::FirstThirdFourth(_) => {
                ell >= 2
                    && big_g == self.n
                    && a == self.d(ell - 1)
                    && self.is_up(g)
                    && m >= 1
                    && self.d(ell - 1) < g
                    && g < self.u(m)
                    && self.down_part() == Subset::singleton(self.n)
                    && self.ups_within(g, self.u(m))
            }
            CaseLabel::SecondThirdFourth => {
                matches!((self.up_rank(g), self.up_rank(big_g)), (Some(s), Some(t)) if s + 1 < t)
                    && self.down_part().is_empty()
            }
            CaseLabel::All | CaseLabel::GroundSet(_) => true,
        }
    }
}
