//! Builders for `M(F_q)` and `MSuz(q)`, the Suzuki norms, and the partition
//! of A(n,θ) into center, `∼Z^#`, `-∼Z^#` and the mixed sums `-∼a+∼b`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{FieldElement, FieldError, FieldSpec};
use crate::moufang_set::{MoufangError, MoufangSet, Point, SetKind};
use crate::perm::Permutation;
use crate::root_group::{RootGroup, RootGroupElement, RootGroupError, RootGroupKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("q = {0} is not a power of 2")]
    NotPowerOfTwo(u64),
    #[error("the projective line needs q >= 4, got q = {0}")]
    ProjectiveLineTooSmall(u64),
    #[error("MSuz(q) needs q = 2^n with n odd and n >= 3, got q = {0}")]
    NotSuzukiOrder(u64),
    #[error("Suzuki normalization failed: {0}")]
    Normalization(&'static str),
    #[error("operation needs a Suzuki Moufang set")]
    NotSuzuki,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    RootGroup(#[from] RootGroupError),
    #[error(transparent)]
    Moufang(#[from] MoufangError),
}

/// `n` with `q = 2^n`.
pub fn degree_of(q: u64) -> Result<u32, ConstructionError> {
    if q < 2 || !q.is_power_of_two() {
        return Err(ConstructionError::NotPowerOfTwo(q));
    }
    Ok(q.trailing_zeros())
}

/// Build `M(F_q)` for `q = 2^n`, `n ≥ 2`, with `τ: x ↦ x⁻¹` on `U^#`.
pub fn build_projective_line(q: u64) -> Result<MoufangSet, ConstructionError> {
    let n = degree_of(q)?;
    if n < 2 {
        return Err(ConstructionError::ProjectiveLineTooSmall(q));
    }
    let spec = FieldSpec::new(n)?;
    let group = RootGroup::abelian(spec);
    let size = group.size();
    let tau = Permutation::from_fn(size + 1, |p| match p {
        0 => size,
        p if p == size => 0,
        p => {
            let x = spec.element(p as u32).expect("index below q");
            spec.inv(x).expect("nonzero").bits() as usize
        }
    });
    Ok(MoufangSet::new(group, tau)?)
}

/// Build `MSuz(q)` for `q = 2^n`, `n` odd `≥ 3`, with the Tits automorphism.
///
/// Asserts `τ² = 1`, `μ_{(0,1)} = τ` and `-∼(0,1) = (1,0)`.
pub fn build_suzuki(q: u64) -> Result<MoufangSet, ConstructionError> {
    let n = degree_of(q)?;
    if n < 3 || n % 2 == 0 {
        return Err(ConstructionError::NotSuzukiOrder(q));
    }
    let group = RootGroup::suzuki(FieldSpec::tits(n)?)?;
    let tau = suzuki_tau_permutation(&group);
    if !tau.then(&tau).is_identity() {
        return Err(ConstructionError::Normalization("tau is not an involution"));
    }
    let m = MoufangSet::new(group, tau)?;
    let e = group.pair(0, 1)?;
    if m.mu(&e)? != m.tau() {
        return Err(ConstructionError::Normalization("mu_e differs from tau"));
    }
    if group.neg(&m.sim(&e)?)? != group.pair(1, 0)? {
        return Err(ConstructionError::Normalization("-~e differs from (1,0)"));
    }
    Ok(m)
}

/// Build by kind; `q` is the field size.
pub fn build(kind: SetKind, q: u64) -> Result<MoufangSet, ConstructionError> {
    match kind {
        SetKind::ProjectiveLine => build_projective_line(q),
        SetKind::Suzuki => build_suzuki(q),
    }
}

/// `N(a,b) = a^(2+θ) + ab + b^θ`.
pub fn norm(spec: &FieldSpec, a: FieldElement, b: FieldElement) -> FieldElement {
    let a2t = spec.mul(spec.square(a), spec.theta(a));
    spec.add(spec.add(a2t, spec.mul(a, b)), spec.theta(b))
}

/// `N₀(a,b) = a^(1+θ) + θ(a)/θ⁻¹(a)·θ⁻¹(b) + b`, middle term 0 at `a = 0`.
pub fn norm0(spec: &FieldSpec, a: FieldElement, b: FieldElement) -> FieldElement {
    let middle = if a.is_zero() {
        FieldElement::ZERO
    } else {
        let ratio = spec.div(spec.theta(a), spec.theta_inv(a)).expect("a is nonzero");
        spec.mul(ratio, spec.theta_inv(b))
    };
    spec.add(spec.add(spec.one_plus_theta(a), middle), b)
}

/// The Suzuki `τ`: `0 ↔ ∞`, `(a,b) ↦ (b/N, a/N)` with `N = N(a,b)`.
pub fn suzuki_tau(group: &RootGroup, p: &Point) -> Result<Point, ConstructionError> {
    if group.kind() != RootGroupKind::SuzukiTwoGroup {
        return Err(ConstructionError::NotSuzuki);
    }
    let x = match p {
        Point::Infinity => return Ok(Point::Elem(group.zero())),
        Point::Elem(x) => {
            group.index_of(x)?;
            *x
        }
    };
    if x == group.zero() {
        return Ok(Point::Infinity);
    }
    let RootGroupElement::Pair(a, b) = x else { unreachable!("checked kind") };
    let spec = group.spec();
    let n_inv = spec.inv(norm(spec, a, b)).expect("the norm is anisotropic");
    Ok(Point::Elem(RootGroupElement::Pair(spec.mul(b, n_inv), spec.mul(a, n_inv))))
}

/// [`suzuki_tau`] as a permutation of point indices.
pub fn suzuki_tau_permutation(group: &RootGroup) -> Permutation {
    let size = group.size();
    Permutation::from_fn(size + 1, |p| {
        let point = if p == size { Point::Infinity } else { Point::Elem(group.element(p)) };
        match suzuki_tau(group, &point).expect("Suzuki group") {
            Point::Infinity => size,
            Point::Elem(y) => group.index_of(&y).expect("closed"),
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PartitionTag {
    Zero,
    Center,
    SimZ,
    NegSimZ,
    Mixed,
}

/// Class of an element of A(n,θ); `decomposition = (s, t)` for mixed elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuzukiPartitionClass {
    pub tag: PartitionTag,
    pub decomposition: Option<(FieldElement, FieldElement)>,
}

/// Classify `(a,b)`: mixed elements get `t = (b/a)^(θ⁻¹)` and `s = a + t`.
pub fn partition_classify(m: &MoufangSet, x: &RootGroupElement) -> Result<SuzukiPartitionClass, ConstructionError> {
    if m.kind() != SetKind::Suzuki {
        return Err(ConstructionError::NotSuzuki);
    }
    m.index_of(x)?;
    let RootGroupElement::Pair(a, b) = *x else { unreachable!("checked kind") };
    let spec = m.group().spec();
    let plain = |tag| Ok(SuzukiPartitionClass { tag, decomposition: None });
    if a.is_zero() {
        return plain(if b.is_zero() { PartitionTag::Zero } else { PartitionTag::Center });
    }
    if b.is_zero() {
        return plain(PartitionTag::NegSimZ);
    }
    if b == spec.one_plus_theta(a) {
        return plain(PartitionTag::SimZ);
    }
    let t = spec.theta_inv(spec.div(b, a).expect("a is nonzero"));
    let s = spec.add(a, t);
    Ok(SuzukiPartitionClass { tag: PartitionTag::Mixed, decomposition: Some((s, t)) })
}

/// `-∼(0, s^(1+θ)) + ∼(0, t^(1+θ))`, evaluated with the generic `∼`.
pub fn recompose(m: &MoufangSet, s: FieldElement, t: FieldElement) -> Result<RootGroupElement, ConstructionError> {
    if m.kind() != SetKind::Suzuki {
        return Err(ConstructionError::NotSuzuki);
    }
    let spec = m.group().spec();
    let g = m.group();
    let left = g.pair(0, spec.one_plus_theta(s).bits())?;
    let right = g.pair(0, spec.one_plus_theta(t).bits())?;
    let left = m.index_of(&left)?;
    let right = m.index_of(&right)?;
    if left == 0 || right == 0 {
        return Err(MoufangError::ZeroElement("recompose").into());
    }
    Ok(m.elem(m.add(m.neg(m.sim_at(left)), m.sim_at(right))))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct PartitionSizes {
    pub zero: usize,
    pub center: usize,
    pub sim_z: usize,
    pub neg_sim_z: usize,
    pub mixed: usize,
}

impl PartitionSizes {
    pub fn total(&self) -> usize {
        self.zero + self.center + self.sim_z + self.neg_sim_z + self.mixed
    }
}

pub fn partition_sizes(m: &MoufangSet) -> Result<PartitionSizes, ConstructionError> {
    let mut sizes = PartitionSizes::default();
    for i in 0..m.size() {
        match partition_classify(m, &m.elem(i))?.tag {
            PartitionTag::Zero => sizes.zero += 1,
            PartitionTag::Center => sizes.center += 1,
            PartitionTag::SimZ => sizes.sim_z += 1,
            PartitionTag::NegSimZ => sizes.neg_sim_z += 1,
            PartitionTag::Mixed => sizes.mixed += 1,
        }
    }
    Ok(sizes)
}

/// Summary emitted by `build`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildReport {
    pub kind: SetKind,
    pub q: u64,
    pub field: FieldSpec,
    pub theta_exponent: u32,
    pub points: usize,
    pub root_group_order: usize,
    pub center_order: usize,
    pub involutions: usize,
    pub hua_order: usize,
    pub partition: Option<PartitionSizes>,
}

pub fn build_report(m: &MoufangSet) -> Result<BuildReport, ConstructionError> {
    let spec = *m.group().spec();
    Ok(BuildReport {
        kind: m.kind(),
        q: spec.order() as u64,
        field: spec,
        theta_exponent: spec.theta_exponent(),
        points: m.points(),
        root_group_order: m.size(),
        center_order: m.group().center().len(),
        involutions: (1..m.size()).filter(|&x| m.is_involution(x)).count(),
        hua_order: m.hua_subgroup()?.order(),
        partition: match m.kind() {
            SetKind::Suzuki => Some(partition_sizes(m)?),
            SetKind::ProjectiveLine => None,
        },
    })
}
