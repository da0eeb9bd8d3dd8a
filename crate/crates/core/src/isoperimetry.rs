//! Fall-down transformation on the square vertex grid, exhaustive vertex
//! isoperimetry, and packings of the triangle graph.
//!
//! The n×n grid shared by the square grid and the triangulated lattice uses
//! `(row, col)` with row 1 at the bottom and vertex index
//! `(row-1)*n + (col-1)`. The triangle graph uses its own layout (apex in row
//! 1, see [`crate::graph::build_triangle`]).

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{build_square_grid, build_tri_lattice, build_triangle, Graph};
use crate::subsets::{
    boundary_mask, boundary_size, check_limit, fold_masks, masks, DEFAULT_SUBSET_LIMIT,
};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FallDirection {
    /// Down each column, then left along each row.
    DownLeft,
    /// Down each column, then right along each row.
    DownRight,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PackingKind {
    Row,
    IceCream,
}

impl std::str::FromStr for PackingKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "row" => Ok(PackingKind::Row),
            "ice_cream" | "ice-cream" | "icecream" => Ok(PackingKind::IceCream),
            _ => Err(Error::InvalidParameter(format!("unknown packing `{s}`"))),
        }
    }
}

pub fn triangular(n: usize) -> usize {
    n * (n + 1) / 2
}

fn grid_universe(n: usize, s: &VertexSet) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("grid side must be positive".into()));
    }
    if s.universe() != n * n {
        return Err(Error::InvalidParameter(format!(
            "vertex set over {} vertices is not a {n}x{n} grid set",
            s.universe()
        )));
    }
    Ok(())
}

/// Mask form of [`fall_down_in`] for grids with at most 64 cells.
pub fn fall_down_mask(n: usize, s: u64, direction: FallDirection) -> u64 {
    let col_counts: Vec<usize> = (0..n)
        .map(|c| (0..n).filter(|r| s >> (r * n + c) & 1 == 1).count())
        .collect();
    // after the column phase, row r holds every column with more than r cells
    let mut out = 0u64;
    for r in 0..n {
        let k = col_counts.iter().filter(|&&h| h > r).count();
        for j in 0..k {
            let c = match direction {
                FallDirection::DownLeft => j,
                FallDirection::DownRight => n - 1 - j,
            };
            out |= 1 << (r * n + c);
        }
    }
    out
}

/// Pushes every column of `s` down as far as possible, then every row left.
pub fn fall_down(n: usize, s: &VertexSet) -> Result<VertexSet> {
    fall_down_in(n, s, FallDirection::DownLeft)
}

pub fn fall_down_in(n: usize, s: &VertexSet, direction: FallDirection) -> Result<VertexSet> {
    grid_universe(n, s)?;
    let mut col_counts = vec![0usize; n];
    for v in s.iter() {
        col_counts[v % n] += 1;
    }
    let mut out = VertexSet::empty(n * n);
    for r in 0..n {
        let k = col_counts.iter().filter(|&&h| h > r).count();
        for j in 0..k {
            let c = match direction {
                FallDirection::DownLeft => j,
                FallDirection::DownRight => n - 1 - j,
            };
            out.insert(r * n + c);
        }
    }
    Ok(out)
}

/// Boundary of `s` in the square grid and in the triangulated lattice.
pub fn boundary_in_both(n: usize, s: &VertexSet) -> Result<(VertexSet, VertexSet)> {
    grid_universe(n, s)?;
    Ok((
        build_square_grid(n)?.boundary(s)?,
        build_tri_lattice(n, n)?.boundary(s)?,
    ))
}

fn grid_masks(n: usize, limit: usize) -> Result<(Vec<u64>, Vec<u64>)> {
    if n == 0 {
        return Err(Error::InvalidParameter("grid side must be positive".into()));
    }
    check_limit(n * n, limit)?;
    Ok((
        masks(&build_square_grid(n)?)?,
        masks(&build_tri_lattice(n, n)?)?,
    ))
}

/// Result of checking the fall-down lemmas over every subset of the grid.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FallDownReport {
    pub n: usize,
    pub subsets: u64,
    /// Subsets whose image changed size.
    pub size_violations: u64,
    /// Subsets whose square-grid boundary grew under the transformation.
    pub square_increase: u64,
    /// Subsets whose lattice boundary grew under the transformation.
    pub lattice_increase: u64,
    /// Subsets whose image has different boundaries in the two graphs.
    pub boundary_mismatch: u64,
    /// Smallest subset (as a mask) with any violation.
    pub first_violation: Option<u64>,
}

impl FallDownReport {
    pub fn violations(&self) -> u64 {
        self.size_violations + self.square_increase + self.lattice_increase + self.boundary_mismatch
    }

    fn merge(mut self, other: FallDownReport) -> FallDownReport {
        self.subsets += other.subsets;
        self.size_violations += other.size_violations;
        self.square_increase += other.square_increase;
        self.lattice_increase += other.lattice_increase;
        self.boundary_mismatch += other.boundary_mismatch;
        self.first_violation = self.first_violation.or(other.first_violation);
        self
    }
}

/// Checks size preservation, boundary monotonicity in both graphs and
/// equality of the image's two boundaries, over all `2^(n²)` subsets.
pub fn falldown_check(
    n: usize,
    direction: FallDirection,
    limit: usize,
    parallel: bool,
) -> Result<FallDownReport> {
    let (sq, tri) = grid_masks(n, limit)?;
    let mut report = fold_masks(
        1u64 << (n * n),
        parallel,
        FallDownReport::default,
        |mut acc, s| {
            let t = fall_down_mask(n, s, direction);
            let bad_size = t.count_ones() != s.count_ones();
            let sq_up = boundary_size(&sq, t) > boundary_size(&sq, s);
            let tri_up = boundary_size(&tri, t) > boundary_size(&tri, s);
            let mismatch = boundary_mask(&sq, t) != boundary_mask(&tri, t);
            acc.subsets += 1;
            acc.size_violations += bad_size as u64;
            acc.square_increase += sq_up as u64;
            acc.lattice_increase += tri_up as u64;
            acc.boundary_mismatch += mismatch as u64;
            if (bad_size || sq_up || tri_up || mismatch) && acc.first_violation.is_none() {
                acc.first_violation = Some(s);
            }
            acc
        },
        FallDownReport::merge,
    );
    report.n = n;
    Ok(report)
}

/// A subset whose fall-down image has different boundaries in the two graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FallDownWitness {
    pub set: VertexSet,
    pub image: VertexSet,
    pub square_boundary: VertexSet,
    pub lattice_boundary: VertexSet,
}

fn witness_from(
    n: usize,
    s: u64,
    direction: FallDirection,
    sq: &[u64],
    tri: &[u64],
) -> FallDownWitness {
    let t = fall_down_mask(n, s, direction);
    FallDownWitness {
        set: VertexSet::from_mask(n * n, s),
        image: VertexSet::from_mask(n * n, t),
        square_boundary: VertexSet::from_mask(n * n, boundary_mask(sq, t)),
        lattice_boundary: VertexSet::from_mask(n * n, boundary_mask(tri, t)),
    }
}

/// Every subset (in mask order) whose image has mismatched boundaries.
pub fn falldown_counterexamples(
    n: usize,
    direction: FallDirection,
    limit: usize,
) -> Result<Vec<FallDownWitness>> {
    let (sq, tri) = grid_masks(n, limit)?;
    let hits = fold_masks(
        1u64 << (n * n),
        true,
        Vec::new,
        |mut acc, s| {
            let t = fall_down_mask(n, s, direction);
            if boundary_mask(&sq, t) != boundary_mask(&tri, t) {
                acc.push(s);
            }
            acc
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    );
    Ok(hits
        .into_iter()
        .map(|s| witness_from(n, s, direction, &sq, &tri))
        .collect())
}

/// First subset in mask order whose image has mismatched boundaries.
pub fn falldown_counterexample_search(
    n: usize,
    direction: FallDirection,
) -> Result<Option<FallDownWitness>> {
    let (sq, tri) = grid_masks(n, DEFAULT_SUBSET_LIMIT)?;
    let first = fold_masks(
        1u64 << (n * n),
        true,
        || None,
        |acc: Option<u64>, s| {
            if acc.is_some() {
                return acc;
            }
            let t = fall_down_mask(n, s, direction);
            (boundary_mask(&sq, t) != boundary_mask(&tri, t)).then_some(s)
        },
        |a, b| a.or(b),
    );
    Ok(first.map(|s| witness_from(n, s, direction, &sq, &tri)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoEntry {
    pub size: usize,
    pub min_boundary: usize,
    pub witness: VertexSet,
}

/// Minimum boundary size for each cardinality in a range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoProfile {
    pub entries: Vec<IsoEntry>,
}

impl IsoProfile {
    pub fn get(&self, size: usize) -> Option<&IsoEntry> {
        self.entries.iter().find(|e| e.size == size)
    }
}

pub fn iso_profile(g: &Graph, size_lo: usize, size_hi: usize) -> Result<IsoProfile> {
    iso_profile_with(g, size_lo, size_hi, DEFAULT_SUBSET_LIMIT, true)
}

/// Exhaustive profile; ties on the boundary size go to the smallest mask.
pub fn iso_profile_with(
    g: &Graph,
    size_lo: usize,
    size_hi: usize,
    limit: usize,
    parallel: bool,
) -> Result<IsoProfile> {
    let nv = g.vertex_count();
    if size_lo > size_hi || size_hi > nv {
        return Err(Error::InvalidParameter(format!(
            "size range {size_lo}..={size_hi} outside 0..={nv}"
        )));
    }
    check_limit(nv, limit)?;
    let nb = masks(g)?;
    let best = fold_masks(
        1u64 << nv,
        parallel,
        || vec![None::<(u32, u64)>; nv + 1],
        |mut acc, s| {
            let size = s.count_ones() as usize;
            if size < size_lo || size > size_hi {
                return acc;
            }
            let key = (boundary_size(&nb, s), s);
            if acc[size].is_none_or(|b| key < b) {
                acc[size] = Some(key);
            }
            acc
        },
        |a, b| {
            a.into_iter()
                .zip(b)
                .map(|(x, y)| match (x, y) {
                    (Some(x), Some(y)) => Some(x.min(y)),
                    (x, y) => x.or(y),
                })
                .collect()
        },
    );
    let entries = (size_lo..=size_hi)
        .map(|size| {
            let (b, s) = best[size].expect("every cardinality in range has a subset");
            IsoEntry {
                size,
                min_boundary: b as usize,
                witness: VertexSet::from_mask(nv, s),
            }
        })
        .collect();
    Ok(IsoProfile { entries })
}

/// Exhaustive check that large balanced sets of the lattice have at least
/// `n` boundary vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BalancedBoundaryReport {
    pub n: usize,
    /// Smallest and largest cardinality inside the window.
    pub size_lo: usize,
    pub size_hi: usize,
    pub sets_checked: u64,
    pub min_boundary: Option<usize>,
    pub violations: u64,
}

pub fn balanced_boundary_check(n: usize, limit: usize) -> Result<BalancedBoundaryReport> {
    if n == 0 {
        return Err(Error::InvalidParameter("grid side must be positive".into()));
    }
    check_limit(n * n, limit)?;
    let nb = masks(&build_tri_lattice(n, n)?)?;
    let n2 = n * n;
    // n²/2 - n/2 < s < n²/2 + n/2, in integers
    let inside = |s: usize| 2 * s + n > n2 && 2 * s < n2 + n;
    let (size_lo, size_hi) = {
        let sizes: Vec<usize> = (0..=n2).filter(|&s| inside(s)).collect();
        (*sizes.first().unwrap_or(&0), *sizes.last().unwrap_or(&0))
    };
    let (checked, min_b, bad) = fold_masks(
        1u64 << n2,
        true,
        || (0u64, None::<usize>, 0u64),
        |(c, m, v), s| {
            if !inside(s.count_ones() as usize) {
                return (c, m, v);
            }
            let b = boundary_size(&nb, s) as usize;
            (
                c + 1,
                Some(m.map_or(b, |m: usize| m.min(b))),
                v + (b < n) as u64,
            )
        },
        |a, b| {
            let m = match (a.1, b.1) {
                (Some(x), Some(y)) => Some(x.min(y)),
                (x, y) => x.or(y),
            };
            (a.0 + b.0, m, a.2 + b.2)
        },
    );
    Ok(BalancedBoundaryReport {
        n,
        size_lo,
        size_hi,
        sets_checked: checked,
        min_boundary: min_b,
        violations: bad,
    })
}

/// Vertex index of `(row, i)` in the triangle graph (apex at row 1).
fn triangle_index(row: usize, i: usize) -> usize {
    row * (row - 1) / 2 + (i - 1)
}

/// The order in which a packing fills the triangle graph.
pub fn packing_order(n: usize, kind: PackingKind) -> Vec<usize> {
    let mut out = Vec::with_capacity(triangular(n));
    match kind {
        PackingKind::Row => {
            for r in (1..=n).rev() {
                for i in 1..=r {
                    out.push(triangle_index(r, i));
                }
            }
        }
        PackingKind::IceCream => {
            // diagonal t holds (r, i) with r - i = n - t, lowest vertex first
            for t in 1..=n {
                for r in (n - t + 1..=n).rev() {
                    out.push(triangle_index(r, r - (n - t)));
                }
            }
        }
    }
    out
}

/// The first `count` vertices of a packing of the triangle graph with side `n`.
pub fn packing(n: usize, kind: PackingKind, count: usize) -> Result<VertexSet> {
    if count > triangular(n) {
        return Err(Error::InvalidParameter(format!(
            "packing of {count} vertices exceeds the {} vertices of side {n}",
            triangular(n)
        )));
    }
    VertexSet::from_vertices(
        triangular(n),
        packing_order(n, kind).into_iter().take(count),
    )
}

/// Boundary sizes of the packings for every count `0..=T_n`.
pub fn packing_boundaries(n: usize, kind: PackingKind) -> Result<Vec<usize>> {
    let g = build_triangle(n)?;
    let order = packing_order(n, kind);
    let mut set = VertexSet::empty(g.vertex_count());
    let mut out = vec![0];
    for v in order {
        set.insert(v);
        out.push(g.boundary(&set)?.len());
    }
    Ok(out)
}

/// Where the boundary of a packing fails to move in the expected direction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PackingTrend {
    pub n: usize,
    /// Counts `s` (with `s+1 ≤ T_{n-1}`) where the ice cream boundary drops from `s` to `s+1`.
    pub icecream_drops: Vec<usize>,
    /// Counts `s ≥ n` where the row boundary rises from `s` to `s+1`.
    pub row_rises: Vec<usize>,
}

pub fn packing_trend(n: usize) -> Result<PackingTrend> {
    let ice = packing_boundaries(n, PackingKind::IceCream)?;
    let row = packing_boundaries(n, PackingKind::Row)?;
    let last_empty = triangular(n.saturating_sub(1));
    Ok(PackingTrend {
        n,
        icecream_drops: (0..last_empty).filter(|&s| ice[s + 1] < ice[s]).collect(),
        row_rises: (n..triangular(n))
            .filter(|&s| row[s + 1] > row[s])
            .collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureRow {
    pub size: usize,
    pub min_boundary: usize,
    pub row_packing_boundary: usize,
    pub icecream_boundary: usize,
    pub conjecture_holds: bool,
}

/// Comparison of exhaustive minimum boundaries on the triangle graph with
/// the two packings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub n: usize,
    pub rows: Vec<ConjectureRow>,
    /// `T_⌊√T_n⌋`, the cardinality probed by the boundary window.
    pub window_size: usize,
    pub window_min_boundary: usize,
    /// `⌊n/√2⌋`.
    pub boundary_threshold: usize,
    /// `⌊n/(2√2)⌋`.
    pub lion_threshold: usize,
    pub window_holds: bool,
}

impl ConjectureReport {
    /// Cardinalities where some set beats both packings.
    pub fn violations(&self) -> Vec<usize> {
        self.rows
            .iter()
            .filter(|r| !r.conjecture_holds)
            .map(|r| r.size)
            .collect()
    }

    pub fn all_hold(&self) -> bool {
        self.window_holds && self.rows.iter().all(|r| r.conjecture_holds)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "size,min_boundary,row_packing_boundary,icecream_boundary,conjecture_holds\n",
        );
        for r in &self.rows {
            writeln!(
                out,
                "{},{},{},{},{}",
                r.size,
                r.min_boundary,
                r.row_packing_boundary,
                r.icecream_boundary,
                r.conjecture_holds
            )
            .unwrap();
        }
        out
    }
}

fn isqrt(x: usize) -> usize {
    let mut r = (x as f64).sqrt() as usize;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

/// Largest `m` with `c·m² ≤ n²`, i.e. `⌊n/√c⌋`.
fn floor_div_sqrt(n: usize, c: usize) -> usize {
    isqrt(n * n / c)
}

pub fn conjecture_report(n: usize) -> Result<ConjectureReport> {
    conjecture_report_with(n, DEFAULT_SUBSET_LIMIT)
}

pub fn conjecture_report_with(n: usize, limit: usize) -> Result<ConjectureReport> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "triangle side must be positive".into(),
        ));
    }
    let tn = triangular(n);
    check_limit(tn, limit)?;
    let g = build_triangle(n)?;
    let profile = iso_profile_with(&g, 0, tn, limit, true)?;
    let row = packing_boundaries(n, PackingKind::Row)?;
    let ice = packing_boundaries(n, PackingKind::IceCream)?;
    let rows = profile
        .entries
        .iter()
        .map(|e| ConjectureRow {
            size: e.size,
            min_boundary: e.min_boundary,
            row_packing_boundary: row[e.size],
            icecream_boundary: ice[e.size],
            conjecture_holds: e.min_boundary >= row[e.size].min(ice[e.size]),
        })
        .collect();
    let window_size = triangular(isqrt(tn));
    let window_min_boundary = profile.entries[window_size].min_boundary;
    let boundary_threshold = floor_div_sqrt(n, 2);
    Ok(ConjectureReport {
        n,
        rows,
        window_size,
        window_min_boundary,
        boundary_threshold,
        lion_threshold: floor_div_sqrt(n, 8),
        window_holds: window_min_boundary >= boundary_threshold,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid_set(n: usize, cells: &[(usize, usize)]) -> VertexSet {
        VertexSet::from_vertices(n * n, cells.iter().map(|&(r, c)| (r - 1) * n + (c - 1))).unwrap()
    }

    #[test]
    fn fall_down_examples() {
        let full = VertexSet::full(9);
        assert_eq!(fall_down(3, &full).unwrap(), full);
        assert_eq!(
            fall_down(3, &grid_set(3, &[(2, 2)])).unwrap(),
            grid_set(3, &[(1, 1)])
        );
        let col3 = grid_set(3, &[(1, 3), (2, 3), (3, 3)]);
        assert_eq!(
            fall_down(3, &col3).unwrap(),
            grid_set(3, &[(1, 1), (2, 1), (3, 1)])
        );
        assert_eq!(
            fall_down_in(3, &grid_set(3, &[(3, 1)]), FallDirection::DownRight).unwrap(),
            grid_set(3, &[(1, 3)])
        );
        assert!(fall_down(3, &VertexSet::empty(8)).is_err());
    }

    #[test]
    fn mask_and_set_forms_agree() {
        for s in 0..512u64 {
            for dir in [FallDirection::DownLeft, FallDirection::DownRight] {
                let set = fall_down_in(3, &VertexSet::from_mask(9, s), dir).unwrap();
                assert_eq!(set.to_mask(), Some(fall_down_mask(3, s, dir)));
            }
        }
    }

    #[test]
    fn boundary_in_both_examples() {
        let (a, b) = boundary_in_both(3, &VertexSet::empty(9)).unwrap();
        assert!(a.is_empty() && b.is_empty());
        let (a, b) = boundary_in_both(3, &VertexSet::full(9)).unwrap();
        assert!(a.is_empty() && b.is_empty());
        for s in 0..512u64 {
            let (a, b) = boundary_in_both(3, &VertexSet::from_mask(9, s)).unwrap();
            assert!(a.is_subset(&b));
        }
    }

    #[test]
    fn falldown_lemmas_on_three_by_three() {
        let r = falldown_check(3, FallDirection::DownLeft, DEFAULT_SUBSET_LIMIT, false).unwrap();
        assert_eq!((r.subsets, r.violations()), (512, 0));
        assert!(falldown_counterexample_search(3, FallDirection::DownLeft)
            .unwrap()
            .is_none());
        assert!(falldown_counterexample_search(1, FallDirection::DownRight)
            .unwrap()
            .is_none());
        assert!(matches!(
            falldown_check(5, FallDirection::DownLeft, DEFAULT_SUBSET_LIMIT, false),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn triangular_numbers() {
        assert_eq!([triangular(0), triangular(5), triangular(6)], [0, 15, 21]);
    }

    #[test]
    fn packings_on_side_six() {
        let tri = |r: usize, i: usize| triangle_index(r, i);
        let row = packing(6, PackingKind::Row, 13).unwrap();
        let mut want: Vec<usize> = (1..=6)
            .map(|i| tri(6, i))
            .chain((1..=5).map(|i| tri(5, i)))
            .collect();
        want.extend([tri(4, 1), tri(4, 2)]);
        want.sort();
        assert_eq!(row.to_vec(), want);

        let ice = packing(6, PackingKind::IceCream, 13).unwrap();
        let mut want: Vec<usize> = Vec::new();
        for r in 1..=6 {
            for i in 1..=r {
                if 6 - (r - i) <= 4 {
                    want.push(tri(r, i));
                }
            }
        }
        // diagonal 5: r - i = 1, lowest three are rows 6, 5, 4
        want.extend([tri(6, 5), tri(5, 4), tri(4, 3)]);
        want.sort();
        assert_eq!(ice.to_vec(), want);

        assert!(packing(6, PackingKind::Row, 0).unwrap().is_empty());
        assert!(packing(6, PackingKind::Row, 22).is_err());
        assert_eq!(packing(4, PackingKind::IceCream, 10).unwrap().len(), 10);
    }

    #[test]
    fn thresholds() {
        assert_eq!(floor_div_sqrt(4, 8), 1);
        assert_eq!(floor_div_sqrt(5, 2), 3);
        assert_eq!(floor_div_sqrt(10, 2), 7);
        assert_eq!(floor_div_sqrt(3, 8), 1);
        assert_eq!(floor_div_sqrt(2, 8), 0);
    }

    #[test]
    fn small_conjecture_reports() {
        let r = conjecture_report(2).unwrap();
        assert_eq!(r.rows.len(), 4);
        let r5 = conjecture_report(5).unwrap();
        assert_eq!(r5.window_size, 6);
        assert_eq!(conjecture_report(4).unwrap().lion_threshold, 1);
        assert!(matches!(conjecture_report(6), Err(Error::ResourceLimit(_))));
        assert!(r5.to_csv().starts_with("size,min_boundary,row_packing_boundary,icecream_boundary,conjecture_holds\n0,0,0,0,true\n"));
    }

    #[test]
    fn profile_examples() {
        let g = build_tri_lattice(3, 3).unwrap();
        let p = iso_profile(&g, 1, 5).unwrap();
        assert_eq!(p.get(1).unwrap().min_boundary, 1);
        assert!(p.get(4).unwrap().min_boundary >= 3 && p.get(5).unwrap().min_boundary >= 3);
        let seq = iso_profile_with(&g, 0, 9, DEFAULT_SUBSET_LIMIT, false).unwrap();
        let par = iso_profile_with(&g, 0, 9, DEFAULT_SUBSET_LIMIT, true).unwrap();
        assert_eq!(seq, par);
        for e in &seq.entries {
            assert_eq!(e.witness.len(), e.size);
            assert_eq!(g.boundary(&e.witness).unwrap().len(), e.min_boundary);
        }
        assert!(iso_profile(&g, 3, 10).is_err());
    }
}
