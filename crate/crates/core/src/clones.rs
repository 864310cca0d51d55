//! Clone names, the lattice reductions and dispatch to algorithms.
//!
//! A named clone is a base of the reduced Post lattice with optional
//! modifiers. `+0` and `+1` adjoin constant operations, `dual` replaces the
//! base by its dual and `+neg` adjoins negation (self-dual bases only). The
//! problem is rewritten so that only the base remains:
//!
//! - constants: `Cl_{F ∪ {c}}(S) = Cl_F(S ∪ {c})` for nonempty `S`;
//! - negation: `Cl_{F ∪ {¬}}(S) = Cl_F(S ∪ ¬S)` when `F` is self-dual;
//! - dual: `Cl_{F̄}(S) = ¬Cl_F(¬S)`, so outputs are complemented.
//!
//! The reductions are applied in that order.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::bits::BitVector;
use crate::decide::near_unanimity::ProjectionCache;
use crate::decide::{BooleanDecider, BooleanKind};
use crate::enumerate::{
    AtomsGray, Backtrack, D2Incremental, E2Fast, Enumeration, HillClimb, L0Gray, NuIncremental, PrefixTest,
    Uncounted, Unpack,
};
use crate::error::{Error, Result};
use crate::multidomain::{decide_associative_small, detect_near_unanimity, AssociativeDfs, GroupStructure};
use crate::op::{builtin, Operation};
use crate::oracle::{saturate, SaturationStream, DEFAULT_BUDGET};
use crate::vector::{Family, Vector};

/// Largest threshold parameter accepted for `S10^k` and `S12^k`.
pub const MAX_THRESHOLD: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Base {
    I2,
    L2,
    L0,
    E2,
    S10,
    S10k(usize),
    S12,
    S12k(usize),
    D2,
    D1,
    M2,
    R2,
    R0,
}

impl Base {
    /// Every base with the threshold families at the given parameters.
    pub fn all(thresholds: &[usize]) -> Vec<Base> {
        let mut out = vec![Base::I2, Base::L2, Base::L0, Base::E2, Base::S10];
        out.extend(thresholds.iter().map(|&k| Base::S10k(k)));
        out.push(Base::S12);
        out.extend(thresholds.iter().map(|&k| Base::S12k(k)));
        out.extend([Base::D2, Base::D1, Base::M2, Base::R2, Base::R0]);
        out
    }

    pub fn generators(&self) -> Vec<Operation> {
        match *self {
            Base::I2 => vec![],
            Base::L2 => vec![builtin::xor3()],
            Base::L0 => vec![builtin::xor()],
            Base::E2 => vec![builtin::and()],
            Base::S10 => vec![builtin::and_or()],
            Base::S10k(k) => vec![builtin::threshold(k), builtin::and_or()],
            Base::S12 => vec![builtin::and_implies()],
            Base::S12k(k) => vec![builtin::threshold(k), builtin::and_implies()],
            Base::D2 => vec![builtin::maj()],
            Base::D1 => vec![builtin::maj(), builtin::xor3()],
            Base::M2 => vec![builtin::or(), builtin::and()],
            Base::R2 => vec![builtin::ite()],
            Base::R0 => vec![builtin::or(), builtin::xor()],
        }
    }

    /// Whether the clone equals its dual, which is what `+neg` requires.
    pub fn is_self_dual(&self) -> bool {
        matches!(self, Base::I2 | Base::L2 | Base::D2 | Base::D1 | Base::M2 | Base::R2)
    }

    /// Arity of the near-unanimity generator, if the algorithm uses one.
    pub fn near_unanimity_arity(&self) -> Option<usize> {
        match *self {
            Base::D1 => Some(3),
            Base::S10k(k) | Base::S12k(k) => Some(k + 1),
            _ => None,
        }
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Base::I2 => f.write_str("I2"),
            Base::L2 => f.write_str("L2"),
            Base::L0 => f.write_str("L0"),
            Base::E2 => f.write_str("E2"),
            Base::S10 => f.write_str("S10"),
            Base::S10k(k) => write!(f, "S10^{k}"),
            Base::S12 => f.write_str("S12"),
            Base::S12k(k) => write!(f, "S12^{k}"),
            Base::D2 => f.write_str("D2"),
            Base::D1 => f.write_str("D1"),
            Base::M2 => f.write_str("M2"),
            Base::R2 => f.write_str("R2"),
            Base::R0 => f.write_str("R0"),
        }
    }
}

impl FromStr for Base {
    type Err = Error;

    fn from_str(s: &str) -> Result<Base> {
        let upper = s.to_ascii_uppercase();
        if let Some((name, k)) = upper.split_once('^') {
            let k: usize = k
                .parse()
                .map_err(|_| Error::InvalidSpec(format!("bad threshold parameter in `{s}`")))?;
            if k < 2 {
                return Err(Error::InvalidSpec(format!("threshold parameter must be at least 2, got {k}")));
            }
            if k > MAX_THRESHOLD {
                return Err(Error::InvalidSpec(format!(
                    "threshold parameter {k} exceeds the limit of {MAX_THRESHOLD}"
                )));
            }
            return match name {
                "S10" => Ok(Base::S10k(k)),
                "S12" => Ok(Base::S12k(k)),
                _ => Err(Error::InvalidSpec(format!("`{name}` takes no threshold parameter"))),
            };
        }
        Ok(match upper.as_str() {
            "I2" => Base::I2,
            "L2" => Base::L2,
            "L0" => Base::L0,
            "E2" => Base::E2,
            "S10" => Base::S10,
            "S12" => Base::S12,
            "D2" => Base::D2,
            "D1" => Base::D1,
            "M2" => Base::M2,
            "R2" => Base::R2,
            "R0" => Base::R0,
            _ => return Err(Error::InvalidSpec(format!("unknown clone `{s}`"))),
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Modifiers {
    pub zero: bool,
    pub one: bool,
    pub dual: bool,
    pub negation: bool,
}

impl Modifiers {
    /// Every modifier combination legal for `base`.
    pub fn legal_for(base: Base) -> Vec<Modifiers> {
        let neg: &[bool] = if base.is_self_dual() { &[false, true] } else { &[false] };
        let mut out = Vec::new();
        for &negation in neg {
            for dual in [false, true] {
                for one in [false, true] {
                    for zero in [false, true] {
                        out.push(Modifiers {
                            zero,
                            one,
                            dual,
                            negation,
                        });
                    }
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug)]
pub enum CloneSpec {
    Named { base: Base, modifiers: Modifiers },
    Explicit(Vec<Operation>),
}

impl CloneSpec {
    pub fn named(base: Base, modifiers: Modifiers) -> Result<Self> {
        if modifiers.negation && !base.is_self_dual() {
            return Err(Error::InvalidSpec(format!("+neg requires a self-dual base, `{base}` is not")));
        }
        Ok(CloneSpec::Named { base, modifiers })
    }

    pub fn base(base: Base) -> Self {
        CloneSpec::Named {
            base,
            modifiers: Modifiers::default(),
        }
    }

    pub fn explicit(ops: Vec<Operation>) -> Result<Self> {
        let Some(first) = ops.first() else {
            return Err(Error::InvalidSpec("an explicit clone needs at least one operation".into()));
        };
        if let Some(op) = ops.iter().find(|o| o.domain() != first.domain()) {
            return Err(Error::DomainMismatch {
                expected: first.domain(),
                got: op.domain(),
            });
        }
        Ok(CloneSpec::Explicit(ops))
    }

    /// Generator tables of the whole clone, modifiers included.
    pub fn generators(&self) -> Result<Vec<Operation>> {
        match self {
            CloneSpec::Explicit(ops) => Ok(ops.clone()),
            CloneSpec::Named { base, modifiers } => {
                let mut ops = base.generators();
                if modifiers.dual {
                    ops = ops.iter().map(Operation::dual).collect::<Result<_>>()?;
                }
                if modifiers.zero {
                    ops.push(builtin::constant(0));
                }
                if modifiers.one {
                    ops.push(builtin::constant(1));
                }
                if modifiers.negation {
                    ops.push(builtin::not());
                }
                Ok(ops)
            }
        }
    }
}

impl fmt::Display for CloneSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CloneSpec::Named { base, modifiers } => {
                write!(f, "{base}")?;
                if modifiers.zero {
                    f.write_str(" +0")?;
                }
                if modifiers.one {
                    f.write_str(" +1")?;
                }
                if modifiers.dual {
                    f.write_str(" dual")?;
                }
                if modifiers.negation {
                    f.write_str(" +neg")?;
                }
                Ok(())
            }
            CloneSpec::Explicit(ops) => {
                let names: Vec<&str> = ops.iter().map(|o| o.name()).collect();
                write!(f, "<{}>", names.join(", "))
            }
        }
    }
}

impl FromStr for CloneSpec {
    type Err = Error;

    /// Parses `BASE[^k] [+0] [+1] [dual] [+neg]`, e.g. `E2 dual` or `S10^4`.
    fn from_str(s: &str) -> Result<CloneSpec> {
        let mut tokens = s.split_whitespace();
        let base: Base = tokens
            .next()
            .ok_or_else(|| Error::InvalidSpec("empty clone name".into()))?
            .parse()?;
        let mut modifiers = Modifiers::default();
        for t in tokens {
            let flag = match t.to_ascii_lowercase().as_str() {
                "+0" => &mut modifiers.zero,
                "+1" => &mut modifiers.one,
                "dual" => &mut modifiers.dual,
                "+neg" => &mut modifiers.negation,
                _ => return Err(Error::InvalidSpec(format!("unknown modifier `{t}`"))),
            };
            if *flag {
                return Err(Error::InvalidSpec(format!("modifier `{t}` given twice")));
            }
            *flag = true;
        }
        CloneSpec::named(base, modifiers)
    }
}

/// `S` with the all-zero and/or all-one vector added.
pub fn adjoin_constants(s: &Family, zero: bool, one: bool) -> Result<Family> {
    if !zero && !one {
        return Ok(s.clone());
    }
    if s.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let mut out = s.clone();
    if zero {
        out.insert(Vector::constant(s.len(), 0, s.domain())?)?;
    }
    if one {
        out.insert(Vector::constant(s.len(), s.domain() - 1, s.domain())?)?;
    }
    Ok(out)
}

/// Complements every member.
pub fn dualize_family(s: &Family) -> Result<Family> {
    if s.domain() != 2 {
        return Err(Error::NotBoolean(s.domain()));
    }
    Family::new(s.len(), 2, s.iter().map(|v| v.complement()).collect::<Result<Vec<_>>>()?)
}

/// `S ∪ ¬S`.
pub fn close_under_negation(s: &Family) -> Result<Family> {
    if s.domain() != 2 {
        return Err(Error::NotBoolean(s.domain()));
    }
    let mut out = s.clone();
    for v in s.iter() {
        out.insert(v.complement()?)?;
    }
    Ok(out)
}

/// Which decision/enumeration pair a resolved problem runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    I2,
    E2,
    L0,
    L2,
    M2,
    /// `M2 ∪ {¬}`: a boolean algebra whose atoms are the column classes.
    M2Negation,
    D2,
    NearUnanimity { width: usize },
    S10,
    S12,
    R2,
    R0,
    Group,
    Associative,
    Saturation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// The specialised enumerator of the algorithm.
    Fast,
    /// Backtrack search driven by the decider.
    Generic,
}

#[derive(Clone, Copy, Debug)]
pub struct ResolveOptions {
    /// Bound on saturation sizes and on the number of cached projections.
    pub budget: usize,
}

impl Default for ResolveOptions {
    fn default() -> Self {
        ResolveOptions { budget: DEFAULT_BUDGET }
    }
}

#[derive(Clone, Debug)]
enum Engine {
    Boolean { kind: BooleanKind, decider: BooleanDecider },
    Projections(Arc<ProjectionCache>),
    Group(Arc<GroupStructure>),
    Associative(Operation),
    Saturation(Vec<Operation>),
}

/// A clone problem after the reductions, ready to decide and enumerate.
#[derive(Clone, Debug)]
pub struct ResolvedProblem {
    algorithm: Algorithm,
    original: Family,
    family: Family,
    bits: Vec<BitVector>,
    complement: bool,
    engine: Engine,
    budget: usize,
}

pub fn resolve(spec: &CloneSpec, s: &Family) -> Result<ResolvedProblem> {
    resolve_with(spec, s, ResolveOptions::default())
}

pub fn resolve_with(spec: &CloneSpec, s: &Family, options: ResolveOptions) -> Result<ResolvedProblem> {
    match spec {
        CloneSpec::Named { base, modifiers } => resolve_named(*base, *modifiers, s, options),
        CloneSpec::Explicit(ops) => resolve_explicit(ops, s, options),
    }
}

fn resolve_named(base: Base, modifiers: Modifiers, s: &Family, options: ResolveOptions) -> Result<ResolvedProblem> {
    if s.domain() != 2 {
        return Err(Error::NotBoolean(s.domain()));
    }
    if modifiers.negation && !base.is_self_dual() {
        return Err(Error::InvalidSpec(format!("+neg requires a self-dual base, `{base}` is not")));
    }
    let mut family = adjoin_constants(s, modifiers.zero, modifiers.one)?;
    if modifiers.negation {
        family = close_under_negation(&family)?;
    }
    if modifiers.dual {
        family = dualize_family(&family)?;
    }
    let bits = family.to_bits()?;
    let len = family.len();
    let (algorithm, engine) = match base.near_unanimity_arity() {
        Some(arity) => {
            let cache = ProjectionCache::new(&base.generators(), &family, arity - 1, options.budget)?;
            (
                Algorithm::NearUnanimity { width: cache.width() },
                Engine::Projections(Arc::new(cache)),
            )
        }
        None => {
            let (algorithm, kind) = match base {
                Base::I2 => (Algorithm::I2, BooleanKind::I2),
                Base::L2 => (Algorithm::L2, BooleanKind::L2),
                Base::L0 => (Algorithm::L0, BooleanKind::L0),
                Base::E2 => (Algorithm::E2, BooleanKind::E2),
                Base::S10 => (Algorithm::S10, BooleanKind::S10),
                Base::S12 => (Algorithm::S12, BooleanKind::S12),
                Base::D2 => (Algorithm::D2, BooleanKind::D2),
                Base::M2 if modifiers.negation => (Algorithm::M2Negation, BooleanKind::M2),
                Base::M2 => (Algorithm::M2, BooleanKind::M2),
                Base::R2 => (Algorithm::R2, BooleanKind::R2),
                Base::R0 => (Algorithm::R0, BooleanKind::R0),
                Base::S10k(_) | Base::S12k(_) | Base::D1 => unreachable!("near-unanimity bases handled above"),
            };
            let decider = BooleanDecider::new(kind, len, &bits);
            (algorithm, Engine::Boolean { kind, decider })
        }
    };
    Ok(ResolvedProblem {
        algorithm,
        original: s.clone(),
        family,
        bits,
        complement: modifiers.dual,
        engine,
        budget: options.budget,
    })
}

/// Tries, in order: a near-unanimity operation, a single commutative group
/// operation, a single associative operation; otherwise plain saturation.
fn resolve_explicit(ops: &[Operation], s: &Family, options: ResolveOptions) -> Result<ResolvedProblem> {
    if ops.is_empty() {
        return Err(Error::InvalidSpec("an explicit clone needs at least one operation".into()));
    }
    for op in ops {
        if op.domain() != s.domain() {
            return Err(Error::DomainMismatch {
                expected: s.domain(),
                got: op.domain(),
            });
        }
    }
    let nu_arity = ops.iter().filter_map(detect_near_unanimity).min();
    let (algorithm, engine) = if let Some(arity) = nu_arity {
        let cache = ProjectionCache::new(ops, s, arity - 1, options.budget)?;
        (
            Algorithm::NearUnanimity { width: cache.width() },
            Engine::Projections(Arc::new(cache)),
        )
    } else if let [op] = ops {
        if let Ok(g) = GroupStructure::new(op) {
            (Algorithm::Group, Engine::Group(Arc::new(g)))
        } else if op.arity() == 2 && op.is_associative() {
            (Algorithm::Associative, Engine::Associative(op.clone()))
        } else {
            (Algorithm::Saturation, Engine::Saturation(ops.to_vec()))
        }
    } else {
        (Algorithm::Saturation, Engine::Saturation(ops.to_vec()))
    };
    let bits = if s.domain() == 2 { s.to_bits()? } else { Vec::new() };
    Ok(ResolvedProblem {
        algorithm,
        original: s.clone(),
        family: s.clone(),
        bits,
        complement: false,
        engine,
        budget: options.budget,
    })
}

impl ResolvedProblem {
    pub fn algorithm(&self) -> Algorithm {
        self.algorithm
    }

    /// The input family, before the reductions.
    pub fn input(&self) -> &Family {
        &self.original
    }

    /// The family the base algorithm runs on.
    pub fn family(&self) -> &Family {
        &self.family
    }

    /// Whether outputs are complemented (dual clones).
    pub fn complements_output(&self) -> bool {
        self.complement
    }

    pub fn len(&self) -> usize {
        self.family.len()
    }

    pub fn domain(&self) -> u8 {
        self.family.domain()
    }

    /// Whether membership is decided in polynomial time, so that backtrack
    /// search is available.
    pub fn has_decider(&self) -> bool {
        !matches!(self.engine, Engine::Associative(_) | Engine::Saturation(_))
    }

    fn transform(&self, v: &Vector) -> Result<Vector> {
        if self.complement {
            v.complement()
        } else {
            Ok(v.clone())
        }
    }

    /// `v ∈ Cl_F(S)`.
    pub fn decide(&self, v: &Vector) -> Result<bool> {
        self.original.check(v)?;
        let v = self.transform(v)?;
        match &self.engine {
            Engine::Boolean { decider, .. } => decider.contains(&v.to_bits()?),
            Engine::Projections(cache) => Ok(cache.contains(v.digits())),
            Engine::Group(g) => g.contains(&self.family, &v),
            Engine::Associative(op) => decide_associative_small(op, &self.family, &v, self.budget),
            Engine::Saturation(ops) => {
                if self.family.contains(&v) {
                    return Ok(true);
                }
                Ok(saturate(ops, &self.family, self.budget)?.contains(&v))
            }
        }
    }

    /// Extension test for backtrack search: whether some closure element
    /// starts with `prefix`.
    pub fn prefix_test(&self) -> Result<PrefixOracle> {
        let inner = match &self.engine {
            Engine::Boolean { kind, .. } => PrefixInner::Boolean {
                kind: *kind,
                bits: self.bits.clone(),
                deciders: vec![None; self.len() + 1],
            },
            Engine::Projections(cache) => PrefixInner::Projections(cache.clone()),
            Engine::Group(g) => PrefixInner::Group {
                group: g.clone(),
                members: self.family.members().to_vec(),
            },
            Engine::Associative(_) | Engine::Saturation(_) => {
                return Err(Error::Unsupported(format!(
                    "no polynomial extension test for {:?}; use the fast enumerator",
                    self.algorithm
                )))
            }
        };
        Ok(PrefixOracle {
            complement: self.complement,
            inner,
        })
    }

    /// Backtrack search over the prefix tree, with node counters.
    pub fn backtrack(&self) -> Result<Backtrack<PrefixOracle>> {
        Ok(Backtrack::new(self.len(), self.domain(), self.prefix_test()?))
    }

    pub fn enumerate(&self, strategy: Strategy) -> Result<Box<dyn Enumeration>> {
        if strategy == Strategy::Generic {
            return Ok(Box::new(self.backtrack()?));
        }
        let len = self.len();
        let c = self.complement;
        let bits = &self.bits;
        Ok(match (&self.engine, self.algorithm) {
            (Engine::Boolean { .. }, Algorithm::I2) => {
                let out: Vec<Result<Vector>> = bits.iter().map(|b| Ok(if c { b.not() } else { b.clone() }.to_vector())).collect();
                Box::new(Uncounted::new(out.into_iter()))
            }
            (Engine::Boolean { .. }, Algorithm::E2) => Box::new(Unpack::new(E2Fast::new(len, bits), c)),
            (Engine::Boolean { .. }, Algorithm::L0) => Box::new(Unpack::new(L0Gray::new(len, bits), c)),
            (Engine::Boolean { .. }, Algorithm::L2) => Box::new(Unpack::new(L0Gray::odd_sums(len, bits), c)),
            (Engine::Boolean { .. }, Algorithm::M2) => Box::new(Unpack::new(HillClimb::new(len, bits), c)),
            (Engine::Boolean { decider, .. }, Algorithm::M2Negation | Algorithm::R2 | Algorithm::R0) => {
                let classes = match decider.test() {
                    crate::decide::BooleanTest::Classes(classes) => classes.clone(),
                    _ => crate::decide::classes::ColumnClasses::new(len, bits, crate::decide::classes::Fixed::None),
                };
                Box::new(Unpack::new(AtomsGray::new(&classes, bits.is_empty()), c))
            }
            (Engine::Boolean { .. }, Algorithm::D2) => Box::new(Unpack::new(D2Incremental::new(len, bits), c)),
            (Engine::Boolean { .. }, _) => Box::new(self.backtrack()?),
            (Engine::Projections(cache), _) => Box::new(NuIncremental::new(cache.clone(), self.domain(), c)),
            (Engine::Group(_), _) => Box::new(self.backtrack()?),
            (Engine::Associative(op), _) => {
                let dfs = AssociativeDfs::new(op, &self.family)?;
                Box::new(Uncounted::new(dfs.map(Ok)))
            }
            (Engine::Saturation(ops), _) => Box::new(Uncounted::new(SaturationStream::new(ops, &self.family, self.budget)?)),
        })
    }
}

#[derive(Clone, Debug)]
enum PrefixInner {
    Boolean {
        kind: BooleanKind,
        bits: Vec<BitVector>,
        /// Deciders for `S_{[l]}`, built on first use.
        deciders: Vec<Option<BooleanDecider>>,
    },
    Projections(Arc<ProjectionCache>),
    Group {
        group: Arc<GroupStructure>,
        members: Vec<Vector>,
    },
}

/// Owned extension test `p ∈ Cl_F(S_{[l]})`.
#[derive(Clone, Debug)]
pub struct PrefixOracle {
    complement: bool,
    inner: PrefixInner,
}

impl PrefixTest for PrefixOracle {
    fn extends(&mut self, prefix: &[u8]) -> Result<bool> {
        let owned: Vec<u8>;
        let p: &[u8] = if self.complement {
            owned = prefix.iter().map(|&x| 1 - x).collect();
            &owned
        } else {
            prefix
        };
        let l = p.len();
        match &mut self.inner {
            PrefixInner::Boolean { kind, bits, deciders } => {
                let decider = deciders[l].get_or_insert_with(|| {
                    let projected: Vec<BitVector> = bits.iter().map(|b| b.prefix(l)).collect();
                    BooleanDecider::new(*kind, l, &projected)
                });
                decider.contains(&BitVector::from_bits(p.iter().map(|&x| x == 1)))
            }
            PrefixInner::Projections(cache) => Ok(cache.contains_prefix(p)),
            PrefixInner::Group { group, members } => Ok(group.contains_prefix(members, p)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(rows: &[&str]) -> Family {
        Family::parse_members(2, rows).unwrap()
    }

    fn sorted(stream: Box<dyn Enumeration>) -> Vec<String> {
        let mut out: Vec<String> = stream.map(|v| v.unwrap().to_string()).collect();
        out.sort();
        out
    }

    #[test]
    fn parses_clone_names() {
        let spec: CloneSpec = "E2 dual".parse().unwrap();
        assert_eq!(spec.to_string(), "E2 dual");
        let spec: CloneSpec = "s10^4 +0 +1".parse().unwrap();
        assert_eq!(spec.to_string(), "S10^4 +0 +1");
        assert!("S10^1".parse::<CloneSpec>().is_err());
        assert!("S10^13".parse::<CloneSpec>().is_err());
        assert!("E2 +neg".parse::<CloneSpec>().is_err());
        assert!("M2 +neg".parse::<CloneSpec>().is_ok());
        assert!("E2^3".parse::<CloneSpec>().is_err());
        assert!("E2 dual dual".parse::<CloneSpec>().is_err());
        assert!("X7".parse::<CloneSpec>().is_err());
    }

    #[test]
    fn reductions() {
        let s = fam(&["10"]);
        assert_eq!(adjoin_constants(&s, true, false).unwrap(), fam(&["10", "00"]));
        assert_eq!(adjoin_constants(&s, true, true).unwrap(), fam(&["10", "00", "11"]));
        assert_eq!(adjoin_constants(&Family::empty(2, 2), true, false), Err(Error::EmptyFamily));
        assert_eq!(dualize_family(&fam(&["1101", "0110"])).unwrap(), fam(&["0010", "1001"]));
        assert_eq!(close_under_negation(&s).unwrap(), fam(&["10", "01"]));
        assert_eq!(close_under_negation(&fam(&["10", "01"])).unwrap(), fam(&["10", "01"]));
    }

    #[test]
    fn union_clone_is_dual_intersection() {
        let s = fam(&["1101", "0110", "1010"]);
        let p = resolve(&"E2 dual".parse().unwrap(), &s).unwrap();
        assert_eq!(p.algorithm(), Algorithm::E2);
        assert!(p.complements_output());
        assert_eq!(sorted(p.enumerate(Strategy::Fast).unwrap()), ["0110", "1010", "1101", "1110", "1111"]);
        assert_eq!(sorted(p.enumerate(Strategy::Generic).unwrap()), ["0110", "1010", "1101", "1110", "1111"]);
        assert!(p.decide(&Vector::parse("1110", 2).unwrap()).unwrap());
        assert!(!p.decide(&Vector::parse("0010", 2).unwrap()).unwrap());
    }

    #[test]
    fn dispatch() {
        let s = fam(&["110", "011", "101"]);
        let p = resolve(&CloneSpec::base(Base::D1), &s).unwrap();
        assert_eq!(p.algorithm(), Algorithm::NearUnanimity { width: 2 });
        let d3 = Family::parse_members(3, &["01", "10"]).unwrap();
        let p = resolve(&CloneSpec::explicit(vec![builtin::capped_sum()]).unwrap(), &d3).unwrap();
        assert_eq!(p.algorithm(), Algorithm::Associative);
        assert_eq!(p.enumerate(Strategy::Fast).unwrap().count(), 8);
        assert!(p.enumerate(Strategy::Generic).is_err());
        let p = resolve(&CloneSpec::explicit(vec![builtin::add_mod(3)]).unwrap(), &d3).unwrap();
        assert_eq!(p.algorithm(), Algorithm::Group);
        let p = resolve(&CloneSpec::explicit(vec![builtin::dual_discriminator(3)]).unwrap(), &d3).unwrap();
        assert_eq!(p.algorithm(), Algorithm::NearUnanimity { width: 2 });
        let nand = Operation::from_fn("nand", 2, 2, |a| 1 - (a[0] & a[1]));
        let p = resolve(&CloneSpec::explicit(vec![nand]).unwrap(), &s).unwrap();
        assert_eq!(p.algorithm(), Algorithm::Saturation);
        assert!(resolve(&CloneSpec::base(Base::E2), &d3).is_err());
    }

    #[test]
    fn empty_family() {
        let e = Family::empty(3, 2);
        for base in Base::all(&[2]) {
            let p = resolve(&CloneSpec::base(base), &e).unwrap();
            assert!(!p.decide(&Vector::parse("000", 2).unwrap()).unwrap(), "{base}");
            assert_eq!(p.enumerate(Strategy::Fast).unwrap().count(), 0, "{base}");
            assert_eq!(p.enumerate(Strategy::Generic).unwrap().count(), 0, "{base}");
        }
        assert!(resolve(&"E2 +0".parse().unwrap(), &e).is_err());
    }
}
