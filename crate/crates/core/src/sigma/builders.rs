//! Ready-made σ-specifications.

use std::collections::{BTreeMap, BTreeSet};

use super::constants::{b_term, BTerm};
use super::{PrimeFamily, RegistryEntry, SigmaError, SigmaSpec, SupportFormula, Tail};
use crate::homology::is_prime;

/// `σ(n) = L_n` for primes `n > 2`, `otherwise_id` at every other height.
/// `members` maps each prime to its entry; heights at unlisted primes make
/// [`SigmaSpec::sigma_value`] fail.
pub fn sigma_field_example(
    registry: Vec<RegistryEntry>,
    base_id: &str,
    members: &BTreeMap<u64, String>,
    otherwise_id: &str,
) -> Result<SigmaSpec, SigmaError> {
    if let Some(&p) = members.keys().find(|&&p| p < 3 || !is_prime(p)) {
        return Err(SigmaError::Invalid(format!("{p} is not an odd prime")));
    }
    let family = PrimeFamily {
        members: members.iter().map(|(&p, id)| (p, id.clone())).collect(),
        otherwise: otherwise_id.to_string(),
        min_prime: 3,
    };
    SigmaSpec::new(
        registry,
        base_id,
        BTreeMap::new(),
        Tail::PrimeFamily(family),
        Tail::Constant(otherwise_id.to_string()),
    )
}

/// `σ(n) = L̄` for `n < 0`; for `n ≥ 0` the entries `L_p`, `p ∈ S`, in
/// increasing round-robin order. `members` must map every `p ∈ S` to an
/// entry (conventionally 2 to the base). An empty `S` gives `L̄` everywhere.
pub fn sigma_prime_set(
    primes: &BTreeSet<u64>,
    registry: Vec<RegistryEntry>,
    base_id: &str,
    lbar_id: &str,
    members: &BTreeMap<u64, String>,
) -> Result<SigmaSpec, SigmaError> {
    let mut ids = Vec::with_capacity(primes.len());
    for &p in primes {
        if !is_prime(p) {
            return Err(SigmaError::Invalid(format!("{p} is not prime")));
        }
        let id = members.get(&p).ok_or_else(|| SigmaError::Invalid(format!("no entry for p = {p}")))?;
        ids.push(id.clone());
    }
    let positive = if ids.is_empty() { Tail::Constant(lbar_id.to_string()) } else { Tail::Recurrent(ids) };
    SigmaSpec::new(registry, base_id, BTreeMap::new(), positive, Tail::Constant(lbar_id.to_string()))
}

/// Inputs to [`sigma_f`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaFInput {
    /// The subset `F ⊂ ℕ`.
    pub f: BTreeSet<usize>,
    /// `C_1, …, C_m`; only support indices up to `m` are placed.
    pub constants: Vec<u64>,
    /// Entry `L_{a_m}` for `m = 0, 1, …`.
    pub a_ids: Vec<String>,
    /// Entry `L_1`.
    pub one_id: String,
    /// Entry `L_0`, the universal cover.
    pub universal_id: String,
}

/// `σ_F(n) = L_{b_i}` at `n = C_i^(2^i)` for `i ∈ F̄ = 2F ∪ (2ℕ + 1)`,
/// `σ_F(0) = L`, and `L_0` elsewhere.
pub fn sigma_f(registry: Vec<RegistryEntry>, base_id: &str, input: &SigmaFInput) -> Result<SigmaSpec, SigmaError> {
    let mut assignments = Vec::new();
    for i in 1..=input.constants.len() {
        let in_fbar = i % 2 == 1 || input.f.contains(&(i / 2));
        if !in_fbar {
            continue;
        }
        let id = match b_term(i) {
            BTerm::A(m) => input
                .a_ids
                .get(m)
                .ok_or_else(|| SigmaError::Invalid(format!("no entry for a_{m}")))?
                .clone(),
            BTerm::One => input.one_id.clone(),
        };
        assignments.push((i, id));
    }
    let formula = SupportFormula {
        constants: input.constants.clone(),
        assignments,
        default: input.universal_id.clone(),
    };
    let heights: Vec<i64> = (1..=input.constants.len()).map(|i| formula.height(i)).collect::<Result<_, _>>()?;
    if let Some(i) = heights.windows(2).position(|w| w[0] >= w[1]) {
        return Err(SigmaError::HeightCollision(i + 2));
    }
    SigmaSpec::new(
        registry,
        base_id,
        BTreeMap::from([(0, base_id.to_string())]),
        Tail::SupportFormula(formula),
        Tail::Constant(input.universal_id.clone()),
    )
}

/// `σ(n) = L` on `heights` and at 0, `K` elsewhere.
pub fn induced_sigma(
    registry: Vec<RegistryEntry>,
    heights: &BTreeSet<i64>,
    k_id: &str,
    base_id: &str,
) -> Result<SigmaSpec, SigmaError> {
    let exceptions = heights.iter().chain([&0]).map(|&h| (h, base_id.to_string())).collect();
    SigmaSpec::new(
        registry,
        base_id,
        exceptions,
        Tail::Constant(k_id.to_string()),
        Tail::Constant(k_id.to_string()),
    )
}
