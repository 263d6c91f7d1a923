//! Partitions, abacus combinatorics, cores and weights, and the block
//! classification of Hecke algebras of type A with representation dimension
//! bounds.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Partition {
    /// Trailing zeros are dropped; anything else must already be decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidInput(format!("{parts:?} is not a partition")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }
    pub fn len(&self) -> usize {
        self.parts.len()
    }
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `lambda_i`, zero past the end (0-based).
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// `beta_i = lambda_i + b - i` for `i = 1..=b`, decreasing.
    pub fn beta_numbers(&self, beads: usize) -> Result<Vec<usize>> {
        if beads < self.len() {
            return Err(Error::InvalidInput(format!("{beads} beads cannot encode a partition with {} parts", self.len())));
        }
        Ok((0..beads).map(|i| self.part(i) + beads - 1 - i).collect())
    }

    /// Inverse of [`Partition::beta_numbers`] for any set of distinct positions.
    pub fn from_beta_numbers(beta: &[usize]) -> Result<Self> {
        let mut b = beta.to_vec();
        b.sort_unstable_by(|x, y| y.cmp(x));
        if b.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput("beta numbers must be distinct".into()));
        }
        let n = b.len();
        Partition::new(b.iter().enumerate().map(|(i, &x)| x - (n - 1 - i)).collect())
    }

    /// All partitions of `n` in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut cur, &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let s: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Bead positions distributed over `ell` runners.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbacusView {
    pub beta: Vec<usize>,
    pub ell: usize,
    /// Levels of the beads on each runner, increasing.
    pub runners: Vec<Vec<usize>>,
}

impl AbacusView {
    pub fn new(lambda: &Partition, ell: usize, beads: usize) -> Result<Self> {
        check_ell(ell)?;
        let beta = lambda.beta_numbers(beads)?;
        let mut runners = vec![Vec::new(); ell];
        for &b in beta.iter().rev() {
            runners[b % ell].push(b / ell);
        }
        Ok(AbacusView { beta, ell, runners })
    }

    pub fn beads(&self) -> usize {
        self.beta.len()
    }

    pub fn occupancy(&self) -> Vec<usize> {
        self.runners.iter().map(Vec::len).collect()
    }

    /// Beads pushed to the top of their runners.
    pub fn pushed_up(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.beads());
        for (r, beads) in self.runners.iter().enumerate() {
            out.extend((0..beads.len()).map(|j| r + j * self.ell));
        }
        out
    }

    /// Number of upward single-level bead moves available, which is the weight.
    pub fn weight(&self) -> usize {
        self.runners
            .iter()
            .map(|levels| levels.iter().enumerate().map(|(j, &l)| l - j).sum::<usize>())
            .sum()
    }
}

fn check_ell(ell: usize) -> Result<()> {
    if ell < 2 {
        return Err(Error::InvalidInput(format!("ell must be at least 2, got {ell}")));
    }
    Ok(())
}

pub fn ell_core(lambda: &Partition, ell: usize) -> Result<Partition> {
    let ab = AbacusView::new(lambda, ell, lambda.len())?;
    Partition::from_beta_numbers(&ab.pushed_up())
}

pub fn ell_weight(lambda: &Partition, ell: usize) -> Result<usize> {
    let core = ell_core(lambda, ell)?;
    Ok((lambda.size() - core.size()) / ell)
}

pub fn is_core(lambda: &Partition, ell: usize) -> Result<bool> {
    Ok(ell_weight(lambda, ell)? == 0)
}

/// Parameters of `H_q(A_{n-1})`: `ell` is the multiplicative order of `q`
/// (or the characteristic when `q = 1`); `None` means infinite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeckeParams {
    pub n: usize,
    pub ell: Option<usize>,
    pub charp: u64,
    pub q_is_one: bool,
    /// Whether `q` lies in the prime field (relevant in positive characteristic).
    pub q_in_prime_field: bool,
}

impl HeckeParams {
    /// `q` a primitive `ell`-th root of unity in characteristic 0.
    pub fn root_of_unity(n: usize, ell: usize) -> Self {
        HeckeParams { n, ell: Some(ell), charp: 0, q_is_one: false, q_in_prime_field: ell <= 2 }
    }

    /// `q = 1` over a field of characteristic `p` (the group algebra `k S_n`).
    pub fn group_algebra(n: usize, p: u64) -> Self {
        HeckeParams { n, ell: if p == 0 { None } else { Some(p as usize) }, charp: p, q_is_one: true, q_in_prime_field: true }
    }

    /// `q` of order `ell` in `F_p^x`.
    pub fn prime_field(n: usize, p: u64, ell: usize) -> Self {
        HeckeParams { n, ell: Some(ell), charp: p, q_is_one: ell == 1, q_in_prime_field: true }
    }

    /// `floor(n / ell)`, zero for infinite `ell`.
    pub fn max_weight(&self) -> usize {
        self.ell.map_or(0, |l| self.n / l)
    }
}

/// Which hypotheses of the repdim bounds hold for a block of weight `w`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisFlags {
    /// Characteristic 0, `q != 1` of order `ell`.
    pub char_zero: bool,
    /// Characteristic `p > w`, `q` in `F_p \ {0, 1}`.
    pub char_p_above_weight: bool,
    /// `q = 1`, `p = ell > w`.
    pub group_algebra_p_above_weight: bool,
    /// For `q = 1` in characteristic `p`: whether `n < p^2` (then every block qualifies).
    pub n_below_p_squared: Option<bool>,
}

impl HypothesisFlags {
    pub fn any(&self) -> bool {
        self.char_zero || self.char_p_above_weight || self.group_algebra_p_above_weight
    }
}

pub fn hypothesis_flags(params: &HeckeParams, weight: usize) -> HypothesisFlags {
    let p = params.charp;
    let finite = params.ell.is_some();
    HypothesisFlags {
        char_zero: p == 0 && finite && !params.q_is_one,
        char_p_above_weight: p > 0 && p > weight as u64 && !params.q_is_one && params.q_in_prime_field && finite,
        group_algebra_p_above_weight: p > 0 && params.q_is_one && params.ell == Some(p as usize) && p > weight as u64,
        n_below_p_squared: (params.q_is_one && p > 0).then(|| (params.n as u64) < p * p),
    }
}

/// Representation dimension information for a block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum RepdimBounds {
    Exact { value: usize },
    Range { lower: usize, upper: usize },
}

impl fmt::Display for RepdimBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepdimBounds::Exact { value } => write!(f, "{value}"),
            RepdimBounds::Range { lower, upper } => write!(f, "[{lower}, {upper}]"),
        }
    }
}

/// `w = 0`: 0 (semisimple); `w = 1`: exactly 2; otherwise `[w + 1, 2w]`.
pub fn repdim_bounds(weight: usize) -> RepdimBounds {
    match weight {
        0 => RepdimBounds::Exact { value: 0 },
        1 => RepdimBounds::Exact { value: 2 },
        w => RepdimBounds::Range { lower: w + 1, upper: 2 * w },
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDescriptor {
    pub n: usize,
    pub ell: usize,
    pub core: Partition,
    pub weight: usize,
    pub members: Vec<Partition>,
    pub rouquier: bool,
}

impl BlockDescriptor {
    pub fn bounds(&self) -> RepdimBounds {
        repdim_bounds(self.weight)
    }

    pub fn contains(&self, lambda: &Partition) -> bool {
        self.members.contains(lambda)
    }
}

/// Partitions of `n` grouped by `ell`-core; sorted by decreasing weight,
/// then by core.
pub fn blocks_of(n: usize, ell: usize) -> Result<Vec<BlockDescriptor>> {
    check_ell(ell)?;
    let mut groups: BTreeMap<Partition, Vec<Partition>> = BTreeMap::new();
    for lambda in Partition::all(n) {
        groups.entry(ell_core(&lambda, ell)?).or_default().push(lambda);
    }
    let mut blocks = groups
        .into_iter()
        .map(|(core, members)| {
            let weight = (n - core.size()) / ell;
            let rouquier = is_rouquier_core(&core, weight, ell)?;
            Ok(BlockDescriptor { n, ell, core, weight, members, rouquier })
        })
        .collect::<Result<Vec<_>>>()?;
    blocks.sort_by(|a, b| b.weight.cmp(&a.weight).then_with(|| a.core.cmp(&b.core)));
    Ok(blocks)
}

/// The block of the partition `(n)`, i.e. of the trivial module.
pub fn principal_block(n: usize, ell: usize) -> Result<BlockDescriptor> {
    let trivial = Partition::new(vec![n])?;
    blocks_of(n, ell)?
        .into_iter()
        .find(|b| b.contains(&trivial))
        .ok_or_else(|| Error::InvalidInput("no principal block".into()))
}

/// Some abacus presentation of `gamma` with between `len` and
/// `len + ell - 1` beads has at least `w - 1` more beads on each runner than
/// on the runner to its left.
pub fn is_rouquier_core(gamma: &Partition, w: usize, ell: usize) -> Result<bool> {
    check_ell(ell)?;
    if !is_core(gamma, ell)? {
        return Err(Error::NotACore(gamma.to_string()));
    }
    let gap = w as i64 - 1;
    for beads in gamma.len()..gamma.len() + ell {
        let occ = AbacusView::new(gamma, ell, beads)?.occupancy();
        if occ.windows(2).all(|p| p[1] as i64 >= p[0] as i64 + gap) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The core whose abacus has `r (w - 1)` beads on runner `r`, all pushed up.
pub fn rouquier_core(ell: usize, w: usize) -> Result<Partition> {
    check_ell(ell)?;
    if w == 0 {
        return Err(Error::InvalidInput("Rouquier cores need weight at least 1".into()));
    }
    let beta: Vec<usize> = (0..ell).flat_map(|r| (0..r * (w - 1)).map(move |j| r + j * ell)).collect();
    Partition::from_beta_numbers(&beta)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RepType {
    Semisimple,
    Finite,
    Tame,
    Wild,
}

impl fmt::Display for RepType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RepType::Semisimple => "semisimple",
            RepType::Finite => "finite",
            RepType::Tame => "tame",
            RepType::Wild => "wild",
        };
        f.write_str(s)
    }
}

/// Representation type of `H_q(A_{n-1})`; `ell = None` means infinite.
pub fn rep_type(n: usize, ell: Option<usize>) -> RepType {
    let m = ell.map_or(0, |l| n / l);
    match m {
        0 => RepType::Semisimple,
        1 => RepType::Finite,
        _ if ell == Some(2) && (n == 4 || n == 5) => RepType::Tame,
        _ => RepType::Wild,
    }
}

/// JSON block report.
pub fn blocks_report(params: &HeckeParams) -> Result<Value> {
    let ell = params.ell.ok_or_else(|| Error::InvalidInput("blocks need a finite ell".into()))?;
    let blocks = blocks_of(params.n, ell)?;
    let rows: Vec<Value> = blocks
        .iter()
        .map(|b| {
            json!({
                "core": b.core,
                "weight": b.weight,
                "members": b.members,
                "rouquier": b.rouquier,
                "bounds": b.bounds(),
                "hypotheses": hypothesis_flags(params, b.weight),
            })
        })
        .collect();
    Ok(json!({"n": params.n, "ell": ell, "rep_type": rep_type(params.n, Some(ell)), "blocks": rows}))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn partitions_and_beta_numbers() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(p(&[3, 1, 0]).parts(), &[3, 1]);
        assert_eq!(Partition::all(4).len(), 5);
        assert_eq!(Partition::all(10).len(), 42);
        let l = p(&[4, 2, 2, 1]);
        for b in 4..9 {
            let beta = l.beta_numbers(b).unwrap();
            assert_eq!(Partition::from_beta_numbers(&beta).unwrap(), l);
        }
        assert!(l.beta_numbers(3).is_err());
    }

    #[test]
    fn cores_and_weights() {
        assert_eq!(ell_core(&p(&[1]), 2).unwrap(), p(&[1]));
        assert_eq!(ell_core(&p(&[2]), 2).unwrap(), Partition::empty());
        assert_eq!(ell_core(&p(&[7]), 3).unwrap(), p(&[1]));
        assert_eq!(ell_weight(&p(&[7]), 3).unwrap(), 2);
        assert_eq!(ell_weight(&p(&[2]), 2).unwrap(), 1);
        assert_eq!(ell_weight(&p(&[2, 1]), 2).unwrap(), 0);
        assert!(ell_core(&p(&[2]), 1).is_err());
        let l = p(&[5, 3, 3, 1]);
        let ab = AbacusView::new(&l, 3, 6).unwrap();
        assert_eq!(ab.weight(), ell_weight(&l, 3).unwrap());
    }

    #[test]
    fn core_is_independent_of_bead_count() {
        for lambda in Partition::all(8) {
            for ell in 2..=4 {
                let c = ell_core(&lambda, ell).unwrap();
                for beads in lambda.len()..lambda.len() + 2 * ell {
                    let ab = AbacusView::new(&lambda, ell, beads).unwrap();
                    assert_eq!(Partition::from_beta_numbers(&ab.pushed_up()).unwrap(), c);
                }
            }
        }
    }

    #[test]
    fn small_blocks() {
        let b = blocks_of(2, 2).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].weight, 1);
        let b = blocks_of(2, 3).unwrap();
        assert_eq!(b.len(), 2);
        assert!(b.iter().all(|x| x.weight == 0));
        assert!(blocks_of(4, 2).unwrap().iter().any(|x| x.weight == 2));
        let pb = principal_block(7, 3).unwrap();
        assert_eq!((pb.core.clone(), pb.weight), (p(&[1]), 2));
        let pb = principal_block(4, 2).unwrap();
        assert_eq!((pb.core.clone(), pb.weight), (Partition::empty(), 2));
        assert_eq!(principal_block(2, 3).unwrap().weight, 0);
    }

    #[test]
    fn rouquier() {
        assert!(is_rouquier_core(&p(&[1]), 1, 2).unwrap());
        assert!(!is_rouquier_core(&Partition::empty(), 2, 2).unwrap());
        assert!(is_rouquier_core(&p(&[2]), 1, 2).is_err());
        assert_eq!(rouquier_core(3, 1).unwrap(), Partition::empty());
        assert_eq!(rouquier_core(2, 2).unwrap(), p(&[1]));
        for ell in 2..=4 {
            for w in 1..=4 {
                let c = rouquier_core(ell, w).unwrap();
                assert!(is_core(&c, ell).unwrap());
                assert!(is_rouquier_core(&c, w, ell).unwrap(), "ell {ell} w {w}");
            }
        }
    }

    #[test]
    fn bounds_and_types() {
        assert_eq!(repdim_bounds(2), RepdimBounds::Range { lower: 3, upper: 4 });
        assert_eq!(repdim_bounds(1), RepdimBounds::Exact { value: 2 });
        assert_eq!(repdim_bounds(0), RepdimBounds::Exact { value: 0 });
        assert_eq!(rep_type(4, Some(2)), RepType::Tame);
        assert_eq!(rep_type(5, Some(3)), RepType::Finite);
        assert_eq!(rep_type(2, Some(3)), RepType::Semisimple);
        assert_eq!(rep_type(9, None), RepType::Semisimple);
        assert_eq!(rep_type(6, Some(2)), RepType::Wild);
        let f = hypothesis_flags(&HeckeParams::group_algebra(10, 5), 2);
        assert!(f.group_algebra_p_above_weight && f.n_below_p_squared == Some(true));
        assert!(!hypothesis_flags(&HeckeParams::group_algebra(10, 3), 3).any());
        assert!(hypothesis_flags(&HeckeParams::root_of_unity(7, 3), 2).char_zero);
    }

    #[test]
    fn partition_json() {
        let l = p(&[3, 1]);
        let s = serde_json::to_string(&l).unwrap();
        assert_eq!(s, "[3,1]");
        let back: Partition = serde_json::from_str(&s).unwrap();
        assert_eq!(back, l);
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }
}
