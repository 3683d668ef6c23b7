//! A registry of machine-checkable claims about Moufang sets.
//!
//! Every check quantifies exhaustively over its domain in a given set and
//! reports `Pass`, `Fail` (with a witness), `Vacuous` (empty domain) or
//! `Inapplicable` (wrong family, or a precondition that cannot be evaluated).
//! Generic checks only use the engine in [`crate::moufang_set`]; checks whose
//! id starts with `SUZ` or `T6.1` use Suzuki coordinates.

mod context;
mod generic;
mod report;
mod suzuki;

use std::cmp::Ordering;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::moufang_set::{MoufangSet, SetKind};
use crate::perm::Permutation;

pub use context::SuiteContext;
pub use report::{render_json, render_text, CheckRecord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuiteError {
    #[error("unknown check id {0:?}")]
    UnknownCheck(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    Pass,
    Fail,
    Vacuous,
    Inapplicable,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Vacuous => "vacuous",
            Status::Inapplicable => "n/a",
        })
    }
}

/// Which sets a check is meaningful for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Applicability {
    Any,
    ProjectiveLine,
    Suzuki,
}

impl Applicability {
    pub fn admits(self, kind: SetKind) -> bool {
        match self {
            Applicability::Any => true,
            Applicability::ProjectiveLine => kind == SetKind::ProjectiveLine,
            Applicability::Suzuki => kind == SetKind::Suzuki,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedPoint {
    pub name: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedPermutation {
    pub name: String,
    pub images: Vec<u32>,
}

/// The first failing instance of a check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub description: String,
    pub elements: Vec<NamedPoint>,
    pub permutations: Vec<NamedPermutation>,
}

impl Witness {
    pub fn new(description: impl Into<String>) -> Self {
        Witness { description: description.into(), elements: Vec::new(), permutations: Vec::new() }
    }

    /// Record a point of X by index.
    pub fn point(mut self, m: &MoufangSet, name: &str, p: usize) -> Self {
        self.elements.push(NamedPoint { name: name.to_string(), value: m.describe(p) });
        self
    }

    pub fn value(mut self, name: &str, value: impl std::fmt::Display) -> Self {
        self.elements.push(NamedPoint { name: name.to_string(), value: value.to_string() });
        self
    }

    pub fn perm(mut self, name: &str, p: &Permutation) -> Self {
        self.permutations.push(NamedPermutation { name: name.to_string(), images: p.images().to_vec() });
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub check_id: String,
    pub anchor: String,
    pub status: Status,
    pub cases_checked: u64,
    pub counterexample: Option<Witness>,
    pub elapsed: Duration,
    pub note: Option<String>,
}

/// Registry entry.
#[derive(Debug, Clone, Copy)]
pub struct CheckInfo {
    pub id: &'static str,
    /// The claim being checked, stated in words.
    pub anchor: &'static str,
    pub applicability: Applicability,
    /// Set kinds on which an empty domain is expected.
    pub expected_vacuous: &'static [SetKind],
}

impl CheckInfo {
    pub fn vacuity_expected(&self, kind: SetKind) -> bool {
        self.expected_vacuous.contains(&kind)
    }
}

/// Raw result of a check body before status assignment.
#[derive(Debug, Clone, Default)]
pub(crate) struct Outcome {
    cases: u64,
    failure: Option<Witness>,
    note: Option<String>,
    inapplicable: bool,
}

impl Outcome {
    pub(crate) fn pass(cases: u64) -> Self {
        Outcome { cases, ..Default::default() }
    }

    pub(crate) fn fail(cases: u64, w: Witness) -> Self {
        Outcome { cases, failure: Some(w), ..Default::default() }
    }

    pub(crate) fn inapplicable(note: impl Into<String>) -> Self {
        Outcome { inapplicable: true, note: Some(note.into()), ..Default::default() }
    }

    pub(crate) fn vacuous(note: impl Into<String>) -> Self {
        Outcome { note: Some(note.into()), ..Default::default() }
    }

    pub(crate) fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Sequential conjunction: stops at the first failing part.
    pub(crate) fn and(self, next: impl FnOnce() -> Outcome) -> Outcome {
        if self.failure.is_some() || self.inapplicable {
            return self;
        }
        let o = next();
        Outcome {
            cases: self.cases + o.cases,
            failure: o.failure,
            note: o.note.or(self.note),
            inapplicable: o.inapplicable,
        }
    }
}

type CheckFn = fn(&SuiteContext) -> Outcome;

struct Check {
    info: CheckInfo,
    run: CheckFn,
}

const PL: &[SetKind] = &[SetKind::ProjectiveLine];
const SZ: &[SetKind] = &[SetKind::Suzuki];
const BOTH: &[SetKind] = &[SetKind::ProjectiveLine, SetKind::Suzuki];
const NONE: &[SetKind] = &[];

macro_rules! check {
    ($id:expr, $app:ident, $vac:expr, $anchor:expr, $f:path) => {
        Check {
            info: CheckInfo { id: $id, anchor: $anchor, applicability: Applicability::$app, expected_vacuous: $vac },
            run: $f,
        }
    };
}

use generic as g;
use suzuki as s;

static REGISTRY: &[Check] = &[
    check!("L3.1a", Any, NONE, "mu_a^-1 = mu_{-a}", g::l31a),
    check!("L3.1b", Any, NONE, "if M(U,tau) = M(U,tau^-1) then mu_{a tau} = (mu_{-a})^tau", g::l31b),
    check!("L3.1c", Any, NONE, "mu_{a mu_b} = (mu_{-a})^{mu_b}", g::l31c),
    check!("L3.1d", Any, NONE, "H is the two-point stabilizer of 0 and inf in the little projective group", g::l31d),
    check!("L3.1e", Any, NONE, "~a = -((-a) mu_a), so ~ does not depend on tau", g::l31e),
    check!("L3.1f", Any, NONE, "mu_{-a} = alpha_{-~a} mu_{-a} alpha_a mu_{-a} alpha_{~-a}", g::l31f),
    check!("L3.1g", Any, NONE, "mu_{ah} = (mu_a)^h for h in H", g::l31g),
    check!("L3.1h", Any, NONE, "~(ah) = (~a)h for h in H", g::l31h),
    check!("L3.1i", Any, NONE, "mu_{~a} = mu_{-a} and mu_a = mu_{-~a} = mu_{~-a}", g::l31i),
    check!("L3.1j", Any, NONE, "~(a tau) = (-a) tau and -(a tau^-1) = (~a) tau^-1", g::l31j),
    check!("L3.1k", Any, NONE, "a mu_a = ~-~a and a mu_{-a} = -~-a", g::l31k),
    check!("L3.1l", Any, PL, "mu_a = mu_b with a != b implies mu_{a mu_a^-1 - b mu_a^-1} = mu_{a-b} and mu_{-a+b} = mu_{-~a+~b}", g::l31l),
    check!("E3A", Any, NONE, "(a tau^-1 - b tau^-1) tau = (a-b) mu_b + ~b for a != b", g::e3a),
    check!("E3B", Any, NONE, "mu_c = mu_{-b} mu_{b-a} mu_a for c = (a-b) mu_b + ~b", g::e3b),
    check!("HUA-MU", Any, NONE, "the Hua map h_a equals tau mu_a", g::hua_mu),
    check!("VA", Any, NONE, "-V_a = V_{-a} and -~a, ~-a lie in V_a", g::va),
    check!("L3.2a", Any, NONE, "for an involution a, (mu_a)^{alpha_{-~a}} = (alpha_a)^{mu_a} and mu_a is an involution", g::l32a),
    check!("L3.2b", Any, NONE, "for an involution a, ~a is the unique fixed point of mu_a", g::l32b),
    check!("L3.2c", Any, NONE, "for an involution a, ~-~a = a mu_a = -~a", g::l32c),
    check!("L3.3", Any, NONE, "distinct involutions have distinct mu-maps", g::l33),
    check!("L3.4", Any, NONE, "mu_a mu_b has odd order for all involutions a, b", g::l34),
    check!("L3.7", Any, NONE, "the seven characterizations of a special element agree", g::l37),
    check!("L3.9a", Any, NONE, "a is special iff -a is special", g::l39a),
    check!("L3.9b", Any, NONE, "an involution a is special iff a tau^-1 is an involution", g::l39b),
    check!("L3.9c", Any, SZ, "a special central a has a rho^-1 central for every rho with M(U,rho) = M(U,tau)", g::l39c),
    check!("L3.10a", Any, SZ, "a special implies a mu_a = -a = a mu_{-a}", g::l310a),
    check!("L3.10b", Any, PL, "an element of order 4 is not special", g::l310b),
    check!("L3.11", Any, SZ, "a special and h in H imply ah special", g::l311),
    check!("L3.12", Any, NONE, "a is special iff mu_a = b alpha_a b for some b in U_0, and then b = (alpha_a)^{mu_a}", g::l312),
    check!("L3.13a", ProjectiveLine, PL, "-(b-a) mu_a + (a-b) mu_a = ~-b + a - ~b", g::l313a),
    check!("L3.13b", ProjectiveLine, PL, "-(a-b) mu_a + (b-a) mu_a = b + a*2", g::l313b),
    check!("L3.13c", ProjectiveLine, PL, "-a*3 = ~-b - ~b + b = -~b + b + ~-b = b + ~-b - ~b", g::l313c),
    check!("L3.13d", ProjectiveLine, PL, "-((-a) tau^-1 - (-b) tau^-1) tau + (a tau^-1 - b tau^-1) tau = a, and in the other order", g::l313d),
    check!("L3.13e", ProjectiveLine, PL, "(a-b) tau - (-a-~b) tau = a tau", g::l313e),
    check!("L3.13f", ProjectiveLine, PL, "-(-(b tau^-1) - a tau^-1) tau + ((-b) tau^-1 - a tau^-1) tau = -~b - a", g::l313f),
    check!("L3.13g", ProjectiveLine, PL, "-(-a-b) tau + (~b-a) tau = -~(b tau) - a tau", g::l313g),
    check!("L3.13h", ProjectiveLine, PL, "-(-a-b) mu_a + (~b-a) mu_a = ~b + a", g::l313h),
    check!("L3.13i", ProjectiveLine, NONE, "a and -a are the only special elements of V_a for special central a", g::l313i),
    check!("P3.14", Any, BOTH, "mu_a = mu_{a-b} mu_{a*5+b} mu_{a-b}, and mu_a = mu_{a+b} for an involution a", g::p314),
    check!("L3.15", Any, BOTH, "a special central involution and mu_{x+a} = mu_x = mu_{-x} imply mu_x = mu_a", g::l315),
    check!("P3.17-CONCL", Any, SZ, "a special central involution in every V_b forces U elementary abelian and every element special", g::p317),
    check!("Z4", Any, NONE, "no nontrivial element of H fixes a nonzero element of U", g::z4),
    check!("L4.4", Any, NONE, "with |H| odd the little projective group has one conjugacy class of involutions", g::l44),
    check!("L4.5a", Any, NONE, "the involutions of U form one H-orbit inside Z(U)", g::l45a),
    check!("L4.5b", Any, NONE, "each V_a contains exactly one involution and mu_a is an involution", g::l45b),
    check!("L4.5c", Any, NONE, "H is cyclic and every element of N \\ H inverts H", g::l45c),
    check!("SUZ5.2a", Suzuki, NONE, "the center of A(n,theta) is the set of pairs with first coordinate 0", s::center),
    check!("SUZ5.2b", Suzuki, NONE, "the involutions of A(n,theta) are exactly the nonzero central elements", s::involutions),
    check!("SUZ5.2c", Suzuki, NONE, "A(n,theta) has exponent 4", s::exponent),
    check!("SUZ5.2d", Suzuki, NONE, "x -> x*2 induces a bijection U/Z(U) -> Z(U)", s::doubling),
    check!("SUZ5.2e", Suzuki, NONE, "lambda -> h_lambda is an injective homomorphism into Aut(U) acting regularly on involutions", s::lambda_regular),
    check!("SUZ5.2f", Suzuki, NONE, "[(a^-1,0),(a^theta,0)] = (0,a+1)", s::commutator),
    check!("SUZ5.5-TAU2", Suzuki, NONE, "tau^2 = 1", s::tau_squared),
    check!("SUZ5.5-NORM", Suzuki, NONE, "N is anisotropic, factors as (b/a)^(1+theta) + (a^theta + b/a)^(1+theta), and equals N_0^theta", s::norm_identities),
    check!("SUZ5.5-MUFIBER", Suzuki, NONE, "mu_(a,b) = mu_(c,d) iff N(a,b) = N(c,d)", s::mu_fiber),
    check!("SUZ5.5-HUA", Suzuki, NONE, "tau mu_(a,b) induces h_{N^(2-theta)} on U and maps (0,x) to (0,N^theta x)", s::hua),
    check!("SUZ5.8", Suzuki, NONE, "(~a)*2 = a for every involution a", s::sim_double),
    check!("SUZ5.9", Suzuki, NONE, "H has no element of order 3", s::no_order_three),
    check!("SUZ5.10a", Suzuki, NONE, "|Z(U)| = 2^n with n odd and |U| = |Z(U)|^2", s::odd_degree),
    check!("SUZ5.10b", Suzuki, NONE, "mu_a alpha_a has order 5 for every involution a", s::order_five),
    check!("SUZ5.11", Suzuki, NONE, "{0} together with ~Z(U)^# is a transversal of U/Z(U)", s::transversal),
    check!("SUZ5.12", Suzuki, NONE, "mu_{a+b} = mu_{-~a+~b} for distinct central involutions a, b", s::orbits2),
    check!("SUZ5.13a", Suzuki, NONE, "~(-~a+~b) = -~(a mu_b mu_{k+b}) + ~(k+b) = -~(a+k) + ~(b+k) with k = a mu_a mu_b", s::sim_a),
    check!("SUZ5.13b", Suzuki, NONE, "~(-~eg+~eh) = -~(eh^2g^-1 + eg) + ~(eh^2g^-1 + eh) for g != h in H", s::sim_b),
    check!("SUZ5.13", Suzuki, NONE, "both expansions of ~(-~a+~b) hold", s::sim_ab),
    check!("SUZ5.14", Suzuki, NONE, "theta fixes only 0 and 1, and ~e and ~eh never commute for h != 1", s::fixed_field),
    check!("SUZ5.15", Suzuki, NONE, "-~a+~b is never c, -~c or ~c for central involutions a != b and c", s::not_in_orbits),
    check!("SUZ5.16", Suzuki, NONE, "-~(0,1) = (1,0), -~(0,a^(1+theta)) = (a,0) and ~(0,a^(1+theta)) = (a,a^(1+theta))", s::sim_formula),
    check!("SUZ5.17", Suzuki, NONE, "(a,b) = -~(0,s^(1+theta)) + ~(0,t^(1+theta)) with t = (b/a)^(theta^-1), s = a+t, uniquely", s::decomposition),
    check!("SUZ5.17-PART", Suzuki, NONE, "U is partitioned into Z(U), ~Z(U)^#, -~Z(U)^# and the sums -~a+~b", s::partition),
    check!("SUZ5.18", Suzuki, NONE, "mu_(0,N_0(a,b)) = mu_(a,b)", s::norm0_mu),
    check!("SUZ5.19-F2", Suzuki, NONE, "(-~eg+~eh) tau = -~(ej^-1h^-2) + ~(eh^-1) where ej = eg^-1 + eh^-1", s::formula2),
    check!("SUZ5.19a", Suzuki, NONE, "(0,a^(1+theta)) tau = (a^-1,0)", s::tau_a),
    check!("SUZ5.19b", Suzuki, NONE, "(a,0) tau = (0,a^(-1-theta))", s::tau_b),
    check!("SUZ5.19c", Suzuki, NONE, "(a,a^(1+theta)) tau = (a^-1,a^(-1-theta))", s::tau_c),
    check!("SUZ5.19d", Suzuki, NONE, "(a,b) tau = (s/(Nt) + 1/t, (s/(Nt) + 1/t)/t^theta) with N^(1+theta) = N_0(a,b)", s::tau_d),
    check!("SUZ5.20-TITS", Suzuki, NONE, "theta^2 is the Frobenius map and the tau relation determining theta holds", s::tits),
    check!("T6.1c", Suzuki, NONE, "U has a Suzuki partition", s::t61c),
    check!("T6.1d", Suzuki, NONE, "H is transitive on Z(U)^#", s::t61d),
    check!("T6.1e", Suzuki, NONE, "every a in U^# has a central b with mu_a = mu_b", s::t61e),
    check!("T6.1cde", Suzuki, NONE, "conditions c, d and e hold together", s::t61cde),
];

/// The registry in natural id order.
pub fn list_checks() -> Vec<CheckInfo> {
    let mut v: Vec<CheckInfo> = REGISTRY.iter().map(|c| c.info).collect();
    v.sort_by(|a, b| natural_cmp(a.id, b.id));
    v
}

pub fn check_info(id: &str) -> Option<CheckInfo> {
    REGISTRY.iter().find(|c| c.info.id == id).map(|c| c.info)
}

/// Compare ids with embedded numbers numerically, so `L3.2a < L3.10a`.
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    fn chunks(s: &str) -> Vec<(bool, &str)> {
        let mut out = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for i in 1..=bytes.len() {
            if i == bytes.len() || bytes[i].is_ascii_digit() != bytes[start].is_ascii_digit() {
                out.push((bytes[start].is_ascii_digit(), &s[start..i]));
                start = i;
            }
        }
        out
    }
    let (ca, cb) = (chunks(a), chunks(b));
    for (x, y) in ca.iter().zip(cb.iter()) {
        let ord = match (x, y) {
            ((true, p), (true, q)) => p.parse::<u64>().unwrap_or(0).cmp(&q.parse::<u64>().unwrap_or(0)),
            ((_, p), (_, q)) => p.cmp(q),
        };
        if ord != Ordering::Equal {
            return ord;
        }
    }
    ca.len().cmp(&cb.len())
}

fn finish(info: CheckInfo, kind: SetKind, outcome: Outcome, elapsed: Duration) -> CheckResult {
    let status = if !info.applicability.admits(kind) || outcome.inapplicable {
        Status::Inapplicable
    } else if outcome.failure.is_some() {
        Status::Fail
    } else if outcome.cases == 0 {
        Status::Vacuous
    } else {
        Status::Pass
    };
    CheckResult {
        check_id: info.id.to_string(),
        anchor: info.anchor.to_string(),
        status,
        cases_checked: outcome.cases,
        counterexample: outcome.failure,
        elapsed,
        note: outcome.note,
    }
}

/// Run one check against a prepared context.
pub fn run_check_in(ctx: &SuiteContext, id: &str) -> Result<CheckResult, SuiteError> {
    let check = REGISTRY.iter().find(|c| c.info.id == id).ok_or_else(|| SuiteError::UnknownCheck(id.to_string()))?;
    let kind = ctx.m.kind();
    let start = Instant::now();
    let outcome = if check.info.applicability.admits(kind) {
        (check.run)(ctx)
    } else {
        Outcome::inapplicable(format!("only meaningful for {:?}", check.info.applicability))
    };
    Ok(finish(check.info, kind, outcome, start.elapsed()))
}

pub fn run_check(id: &str, m: &MoufangSet) -> Result<CheckResult, SuiteError> {
    run_check_in(&SuiteContext::new(m), id)
}

/// Resolve selectors to ids: exact ids, or a prefix ending in `*`.
pub fn select(selectors: &[String]) -> Result<Vec<&'static str>, SuiteError> {
    let all = list_checks();
    let mut out: Vec<&'static str> = Vec::new();
    for sel in selectors {
        let hits: Vec<&'static str> = match sel.strip_suffix('*') {
            Some(prefix) => all.iter().filter(|c| c.id.starts_with(prefix)).map(|c| c.id).collect(),
            None => all.iter().filter(|c| c.id == sel).map(|c| c.id).collect(),
        };
        if hits.is_empty() {
            return Err(SuiteError::UnknownCheck(sel.clone()));
        }
        for h in hits {
            if !out.contains(&h) {
                out.push(h);
            }
        }
    }
    out.sort_by(|a, b| natural_cmp(a, b));
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub kind: SetKind,
    pub q: u64,
    pub results: Vec<CheckResult>,
}

impl SuiteReport {
    /// No failures and no vacuous result outside the per-kind whitelist.
    pub fn passed(&self) -> bool {
        self.problems().is_empty()
    }

    /// Results that make the run fail.
    pub fn problems(&self) -> Vec<&CheckResult> {
        self.results
            .iter()
            .filter(|r| match r.status {
                Status::Fail => true,
                Status::Vacuous => !check_info(&r.check_id).is_some_and(|i| i.vacuity_expected(self.kind)),
                _ => false,
            })
            .collect()
    }

    pub fn get(&self, id: &str) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.check_id == id)
    }

    pub fn total_elapsed(&self) -> Duration {
        self.results.iter().map(|r| r.elapsed).sum()
    }
}

/// Run the selected checks (all when `selectors` is `None`) in id order.
pub fn run_suite(m: &MoufangSet, selectors: Option<&[String]>) -> Result<SuiteReport, SuiteError> {
    let ids: Vec<&'static str> = match selectors {
        Some(sel) => select(sel)?,
        None => list_checks().into_iter().map(|c| c.id).collect(),
    };
    let ctx = SuiteContext::new(m);
    let results = ids.iter().map(|id| run_check_in(&ctx, id)).collect::<Result<Vec<_>, _>>()?;
    Ok(SuiteReport { kind: m.kind(), q: m.group().spec().order() as u64, results })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn natural_order() {
        assert_eq!(natural_cmp("L3.2a", "L3.10a"), Ordering::Less);
        assert_eq!(natural_cmp("L3.1l", "L3.1a"), Ordering::Greater);
        assert_eq!(natural_cmp("T6.1c", "T6.1cde"), Ordering::Less);
        assert_eq!(natural_cmp("E3A", "E3A"), Ordering::Equal);
    }

    #[test]
    fn registry_ids_unique() {
        let ids: Vec<_> = list_checks().into_iter().map(|c| c.id).collect();
        let mut dedup = ids.clone();
        dedup.dedup();
        assert_eq!(ids, dedup);
        assert!(ids.len() >= 45);
    }

    #[test]
    fn selectors() {
        let l31 = select(&["L3.1*".to_string()]).unwrap();
        assert!(l31.contains(&"L3.1a") && l31.contains(&"L3.10a"));
        assert!(select(&["nope".to_string()]).is_err());
    }
}
