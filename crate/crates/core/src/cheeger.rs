//! Vertex-isoperimetric Cheeger constant and the lion lower bounds it yields.

use std::cmp::Ordering;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::subsets::{
    boundary_size, check_limit, fold_masks, lex_cmp, masks, DEFAULT_SUBSET_LIMIT,
};
use crate::vertex_set::VertexSet;

/// Exact rational in lowest terms with a positive denominator.
pub type Rational = Ratio<i64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheegerResult {
    pub g: Rational,
    /// Lexicographically smallest (as a sorted vertex list) set attaining `g`.
    pub witness: VertexSet,
}

/// `|∂S| / min(|S|, |V∖S|)` kept as an unreduced pair plus the set.
#[derive(Clone, Copy)]
struct Candidate {
    num: i64,
    den: i64,
    set: u64,
}

impl Candidate {
    fn cmp(&self, other: &Candidate) -> Ordering {
        (self.num * other.den)
            .cmp(&(other.num * self.den))
            .then_with(|| lex_cmp(self.set, other.set))
    }

    fn better(a: Option<Candidate>, b: Option<Candidate>) -> Option<Candidate> {
        match (a, b) {
            (Some(x), Some(y)) => Some(if y.cmp(&x) == Ordering::Less { y } else { x }),
            (x, y) => x.or(y),
        }
    }
}

pub fn cheeger_constant(g: &Graph) -> Result<CheegerResult> {
    cheeger_constant_with(g, DEFAULT_SUBSET_LIMIT, true)
}

/// Exhaustive minimum over proper nonempty subsets. Each pair `{S, V∖S}` is
/// visited once, as the member that omits the highest vertex.
pub fn cheeger_constant_with(g: &Graph, limit: usize, parallel: bool) -> Result<CheegerResult> {
    let nv = g.vertex_count();
    if nv < 2 {
        return Err(Error::InvalidParameter(format!(
            "the Cheeger constant needs at least 2 vertices, got {nv}"
        )));
    }
    check_limit(nv, limit)?;
    let nb = masks(g)?;
    let full = (1u64 << nv) - 1;
    let best = fold_masks(
        1u64 << (nv - 1),
        parallel,
        || None,
        |acc, s| {
            if s == 0 {
                return acc;
            }
            let c = full & !s;
            let den = (s.count_ones().min(c.count_ones())) as i64;
            let a = Candidate {
                num: boundary_size(&nb, s) as i64,
                den,
                set: s,
            };
            let b = Candidate {
                num: boundary_size(&nb, c) as i64,
                den,
                set: c,
            };
            Candidate::better(Candidate::better(acc, Some(a)), Some(b))
        },
        Candidate::better,
    )
    .expect("at least one proper subset");
    Ok(CheegerResult {
        g: Rational::new(best.num, best.den),
        witness: VertexSet::from_mask(nv, best.set),
    })
}

/// Largest `k` ruled out for polite lions: `⌊½·⌊|V|/2⌋·g⌋`.
pub fn polite_lion_bound(g: Rational, vertex_count: usize) -> usize {
    let bound = Rational::from_integer((vertex_count / 2) as i64) * g / 2;
    bound.floor().to_integer().max(0) as usize
}

/// Largest `k` ruled out for lions under free motion: `⌊g·|V|/(4+g)⌋`.
pub fn lion_bound(g: Rational, vertex_count: usize) -> usize {
    let bound = g * vertex_count as i64 / (g + 4);
    bound.floor().to_integer().max(0) as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_circulant, build_complete, build_path};

    fn r(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn known_constants() {
        assert_eq!(
            cheeger_constant(&build_complete(5).unwrap()).unwrap().g,
            r(1, 1)
        );
        let tri = build_complete(3).unwrap();
        let two = tri.disjoint_union(&tri);
        let res = cheeger_constant(&two).unwrap();
        assert_eq!(res.g, r(0, 1));
        assert_eq!(res.witness.to_vec(), vec![0, 1, 2]);
        let c6 = cheeger_constant(&build_circulant(6, 1).unwrap()).unwrap();
        assert_eq!(c6.g, r(2, 3));
        assert_eq!(c6.witness.to_vec(), vec![0, 1, 2]);
        assert!(cheeger_constant(&build_path(1).unwrap()).is_err());
        assert_eq!(
            cheeger_constant(&build_path(2).unwrap()).unwrap().g,
            r(1, 1)
        );
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let g = build_circulant(14, 2).unwrap();
        assert_eq!(
            cheeger_constant_with(&g, 20, false).unwrap(),
            cheeger_constant_with(&g, 20, true).unwrap()
        );
    }

    #[test]
    fn bounds() {
        assert_eq!(polite_lion_bound(r(1, 1), 10), 2);
        assert_eq!(polite_lion_bound(r(1, 2), 16), 2);
        assert_eq!(polite_lion_bound(r(1, 1), 2), 0);
        assert_eq!(lion_bound(r(1, 1), 10), 2);
        assert_eq!(lion_bound(r(1, 2), 18), 2);
        assert_eq!(lion_bound(r(0, 1), 18), 0);
    }
}
