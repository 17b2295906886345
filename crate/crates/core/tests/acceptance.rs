//! Acceptance suite: one line per criterion, nonzero exit on any failure.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fpforge_core::complex::{flagify_presentation_complex, standard, GroupPresentationInput, SimplicialComplex, Vertex};
use fpforge_core::covers::{
    build_cover, cyclic_cover, double_of_cover, first_cohomology_mod_p, presentation_cover, CoverComplex,
    Permutation, VoltageAssignment,
};
use fpforge_core::double::spherical_double;
use fpforge_core::groups::{abelianization, glsigma_presentation, power_spread, Letter, Word};
use fpforge_core::homology::{reduced_homology, smith_normal_form, DegreeHomology, HomologySummary, IntMatrix, RingSpec};
use fpforge_core::sigma::{
    alpha_times_exceeds, choose_constants, min_kernel_length_bound, r_upper_bound, separation_ratio_check,
    sigma_field_example, sigma_prime_set, CoverDegree, FpTarget, RegistryEntry, SigmaSpec, Tail,
};
use fpforge_core::spectrum::{k_related, taut_spectrum, Graph, LengthStatus, ScannedSpectrum};

type Check = fn() -> Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(elapsed: Duration, limit_secs: u64) -> Result<(), String> {
    ensure(elapsed <= Duration::from_secs(limit_secs), format!("took {elapsed:?}, limit {limit_secs} s"))
}

/// Every simplicial complex whose vertices lie in `{0, …, n-1}`, as the
/// down-closed families of nonempty subsets.
fn all_complexes(n: usize) -> Vec<SimplicialComplex> {
    let mut subsets: Vec<u32> = (1u32..1 << n).collect();
    subsets.sort_by_key(|s| (s.count_ones(), *s));
    let mut out = Vec::new();
    let mut chosen = BTreeSet::new();
    fn rec(i: usize, subsets: &[u32], chosen: &mut BTreeSet<u32>, out: &mut Vec<SimplicialComplex>) {
        if i == subsets.len() {
            if !chosen.is_empty() {
                let faces = chosen.iter().map(|&s| (0..32).filter(|b| s >> b & 1 == 1).map(|b| b as Vertex).collect::<Vec<_>>());
                out.push(SimplicialComplex::from_facets(faces).expect("down-closed"));
            }
            return;
        }
        let s = subsets[i];
        let allowed = s.count_ones() == 1 || (0..32).filter(|b| s >> b & 1 == 1).all(|b| chosen.contains(&(s & !(1 << b))));
        rec(i + 1, subsets, chosen, out);
        if allowed {
            chosen.insert(s);
            rec(i + 1, subsets, chosen, out);
            chosen.remove(&s);
        }
    }
    rec(0, &subsets, &mut chosen, &mut out);
    out
}

fn criterion_1() -> Result<String, String> {
    let start = Instant::now();
    let complexes = all_complexes(5);
    let mut flag = 0;
    for l in &complexes {
        let s = spherical_double(l).map_err(|e| e.to_string())?;
        let (lf, sf) = (common::flag_by_cliques(l), common::flag_by_cliques(s.complex()));
        ensure(l.is_flag() == Ok(lf) && s.complex().is_flag() == Ok(sf), format!("flag test disagrees on {:?}", l.facets()))?;
        ensure(lf == sf, format!("law fails on {:?}", l.facets()))?;
        flag += usize::from(lf);
    }
    within(start.elapsed(), 30)?;
    Ok(format!("{} complexes, {flag} flag, {:.1?}", complexes.len(), start.elapsed()))
}

fn criterion_2() -> Result<String, String> {
    let s = spherical_double(&standard::simplex(2)).map_err(|e| e.to_string())?;
    ensure(s.complex().f_vector() == vec![6, 12, 8], format!("f-vector {:?}", s.complex().f_vector()))?;
    let e = spherical_double(&standard::simplex(1)).map_err(|e| e.to_string())?;
    let k = e.complex();
    let degrees: Vec<usize> = k.adjacency().values().map(BTreeSet::len).collect();
    ensure(k.f_vector() == vec![4, 4] && degrees == vec![2; 4] && k.is_connected(), "S(edge) is not a 4-cycle")?;
    Ok("S(Δ²) = (6, 12, 8); S(edge) = C₄".into())
}

fn eight_over_four() -> CoverComplex {
    let swap = Permutation::transposition(2, 0, 1);
    build_cover(&VoltageAssignment::new(standard::cycle(4), 2, [((3, 0), swap)]).unwrap()).unwrap()
}

fn orientation_cover() -> CoverComplex {
    let rp2 = standard::rp2_subdivided();
    let classes = first_cohomology_mod_p(&rp2, 2).unwrap();
    cyclic_cover(&rp2, 2, &classes[0]).unwrap()
}

fn criterion_3() -> Result<String, String> {
    let mut notes = Vec::new();
    for (name, cover) in [("C₈→C₄", eight_over_four()), ("S²→RP²", orientation_cover())] {
        ensure(cover.degree() == 2 && common::covering_by_definition(&cover), format!("{name} is not a double cover"))?;
        let (doubled, dcover) = double_of_cover(cover.base(), &cover).map_err(|e| e.to_string())?;
        ensure(dcover.verify_covering(), format!("S of {name} fails verify_covering"))?;
        ensure(common::covering_by_definition(&dcover), format!("S of {name} is not a covering"))?;
        ensure(dcover.degree() == 2, format!("S of {name} has degree {}", dcover.degree()))?;
        ensure(dcover.base() == doubled.complex(), "doubled cover sits over another base")?;
        notes.push(format!("{name}: {:?}", dcover.total().f_vector()));
    }
    Ok(notes.join("; "))
}

fn criterion_4() -> Result<String, String> {
    let start = Instant::now();
    let rp2 = standard::rp2_subdivided();
    let z = reduced_homology(&rp2, RingSpec::Integers);
    let q = reduced_homology(&rp2, RingSpec::Rationals);
    let f2 = reduced_homology(&rp2, RingSpec::PrimeField(2));
    let h1z = z.degree(1).unwrap_or_default();
    ensure(h1z.rank == 0 && h1z.torsion == vec![BigUint::from(2u32)], format!("H̃₁(ℤ) = {h1z:?}"))?;
    ensure(z.degree(2).unwrap_or_default().is_zero(), "H̃₂(ℤ) ≠ 0")?;
    ensure(q.is_acyclic(), "H̃(ℚ) ≠ 0")?;
    let f2_ranks: Vec<usize> = (0..3).map(|i| f2.degree(i).unwrap_or_default().rank).collect();
    ensure(f2_ranks == vec![0, 1, 1], format!("F₂ ranks {f2_ranks:?}"))?;
    ensure(common::reduced_betti_mod_p(&rp2, 2) == f2_ranks, "F₂ oracle disagrees")?;
    ensure(common::reduced_betti_rational(&rp2) == vec![0, 0, 0], "ℚ oracle disagrees")?;
    within(start.elapsed(), 5)?;
    Ok(format!("H̃₁ = ℤ/2, ℚ-acyclic, F₂ ranks (0, 1, 1), {:.1?}", start.elapsed()))
}

fn criterion_5() -> Result<String, String> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..100 {
        let (r, c) = (rng.gen_range(1..=30), rng.gen_range(1..=30));
        let density = rng.gen_range(0.1..1.0);
        let mut rows: Vec<Vec<i64>> =
            (0..r).map(|_| (0..c).map(|_| if rng.gen_bool(density) { rng.gen_range(-9..=9) } else { 0 }).collect()).collect();
        // Some matrices get a dependent row to force rank deficiency.
        if r > 2 && trial % 3 == 0 {
            rows[r - 1] = rows[0].iter().zip(&rows[1]).map(|(a, b)| 2 * a - 3 * b).collect();
        }
        let a = IntMatrix::from_rows(&rows);
        let snf = smith_normal_form(&a);
        ensure(snf.u.mul(&a).mul(&snf.v) == snf.d, format!("trial {trial}: U·A·V ≠ D"))?;
        ensure(snf.d.is_diagonal(), format!("trial {trial}: D not diagonal"))?;
        let diag = snf.diagonal();
        ensure(diag.iter().all(|x| !x.is_negative()), format!("trial {trial}: negative diagonal"))?;
        for w in diag.windows(2) {
            ensure(w[1].is_zero() || (!w[0].is_zero() && w[1].is_multiple_of(&w[0])), format!("trial {trial}: chain broken"))?;
        }
        for (name, m) in [("U", &snf.u), ("V", &snf.v)] {
            let rows: Vec<Vec<BigInt>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
            let det = common::bareiss(&rows).0;
            ensure(det.abs().is_one(), format!("trial {trial}: det {name} = {det}"))?;
        }
        let big: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let rank = common::bareiss(&big).1;
        ensure(rank == snf.invariant_factors().len(), format!("trial {trial}: rank mismatch"))?;
    }
    within(start.elapsed(), 10)?;
    Ok(format!("100 matrices, {:.1?}", start.elapsed()))
}

fn z_summary(torsion: &[u32]) -> HomologySummary {
    HomologySummary {
        ring: RingSpec::Integers,
        degrees: vec![
            DegreeHomology::default(),
            DegreeHomology { rank: 0, torsion: torsion.iter().map(|&t| BigUint::from(t)).collect() },
        ],
        complete: false,
    }
}

fn declared(id: &str, torsion: &[u32]) -> RegistryEntry {
    RegistryEntry::declared(id, "desk-scale stand-in", vec![z_summary(torsion)], Some(torsion.is_empty()), CoverDegree::Finite(1))
}

fn verdict(spec: &SigmaSpec, ring: RingSpec) -> Result<bool, String> {
    spec.fp_decide(ring, FpTarget::Degree(2)).map(|v| v.holds).map_err(|e| e.to_string())
}

fn criterion_6() -> Result<String, String> {
    let input = GroupPresentationInput::new(1, vec![vec![1; 5]]);
    let base = flagify_presentation_complex(&input).map_err(|e| e.to_string())?;
    let trivial = build_cover(&VoltageAssignment::identity(base, 1).unwrap()).map_err(|e| e.to_string())?;
    let universal = presentation_cover(&input, &[Permutation::rotation(5, 1)]).map_err(|e| e.to_string())?;
    let l = RegistryEntry::constructed("L", &trivial, &[5, 7], 100_000).map_err(|e| e.to_string())?;
    let u = RegistryEntry::constructed("U", &universal, &[5, 7], 100_000).map_err(|e| e.to_string())?;
    // Independent check of the stored certificates.
    let h1 = l.homology_over(RingSpec::Integers).and_then(|h| h.degree(1)).unwrap_or_default();
    ensure(h1.torsion == vec![BigUint::from(5u32)] && h1.rank == 0, format!("H̃₁(L) = {h1:?}"))?;
    ensure(common::reduced_betti_mod_p(trivial.total(), 5)[1] == 1, "F₅ oracle: H̃₁(L; F₅) should be 1-dimensional")?;
    ensure(common::reduced_betti_mod_p(trivial.total(), 7)[1] == 0, "F₇ oracle: H̃₁(L; F₇) should vanish")?;
    let ub = common::reduced_betti_mod_p(universal.total(), 5);
    ensure(ub[0] == 0 && ub[1] == 0, format!("universal cover F₅ Betti {ub:?}"))?;
    let registry = vec![l, u];
    let rings = [RingSpec::Rationals, RingSpec::PrimeField(5), RingSpec::PrimeField(7), RingSpec::Integers];
    let recurrent = SigmaSpec::new(registry.clone(), "L", BTreeMap::new(), Tail::Recurrent(vec!["L".into()]), Tail::Constant("U".into()))
        .map_err(|e| e.to_string())?;
    let got: Vec<bool> = rings.iter().map(|&r| verdict(&recurrent, r)).collect::<Result<_, _>>()?;
    ensure(got == vec![true, false, true, false], format!("recurrent verdicts {got:?}"))?;
    let exceptions = BTreeMap::from([(0, "L".to_string()), (3, "L".to_string()), (-4, "L".to_string())]);
    let finite = SigmaSpec::new(registry, "L", exceptions, Tail::Constant("U".into()), Tail::Constant("U".into()))
        .map_err(|e| e.to_string())?;
    let got: Vec<bool> = rings.iter().map(|&r| verdict(&finite, r)).collect::<Result<_, _>>()?;
    ensure(got == vec![true; 4], format!("finite-exception verdicts {got:?}"))?;
    Ok("recurrent ℤ/5: Q YES, F5 NO, F7 YES, Z NO; finite exceptions: YES ×4".into())
}

fn criterion_7() -> Result<String, String> {
    let odd = [3u32, 5, 7, 11, 13];
    let mut registry = vec![declared("L", &[2]), declared("Lbar", &[]), declared("U", &[])];
    registry.extend(odd.iter().map(|&p| declared(&format!("L{p}"), &[p])));
    let mut members: BTreeMap<u64, String> = odd.iter().map(|&p| (u64::from(p), format!("L{p}"))).collect();
    let field = sigma_field_example(registry.clone(), "L", &members, "U").map_err(|e| e.to_string())?;
    members.insert(2, "L".into());
    let prime_set = sigma_prime_set(&BTreeSet::from([2, 3]), registry, "L", "Lbar", &members).map_err(|e| e.to_string())?;
    for (p, expected) in [(2, false), (3, false), (5, true), (7, true), (11, true)] {
        ensure(verdict(&prime_set, RingSpec::PrimeField(p))? == expected, format!("prime set S = {{2, 3}} at p = {p}"))?;
    }
    ensure(verdict(&field, RingSpec::Rationals)?, "field example over ℚ")?;
    ensure(!verdict(&field, RingSpec::Integers)?, "field example over ℤ")?;
    for p in [2, 3, 5, 7, 11, 13] {
        ensure(verdict(&field, RingSpec::PrimeField(p))?, format!("field example over F{p}"))?;
    }
    Ok("S = {2,3}: NO at 2, 3; YES at 5, 7, 11; field example: Q YES, Fp YES, Z NO".into())
}

fn criterion_8() -> Result<String, String> {
    let p = glsigma_presentation(&standard::simplex(2), &BTreeMap::new()).map_err(|e| e.to_string())?;
    let rels: Vec<String> = p.relators().iter().map(|r| p.format_word(r)).collect();
    // e = 0→1, f = 1→2, g = 2→0 = (0→2)⁻¹.
    ensure(rels == vec!["e0_1 e1_2 e0_2'", "e0_2' e1_2 e0_1"], format!("relators {rels:?}"))?;
    let ab = abelianization(&p);
    // Exponent matrix has rank 1 with unit content: ℤ³/ℤ = ℤ².
    let m = p.exponent_matrix();
    let rows: Vec<Vec<BigInt>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    ensure(common::bareiss(&rows).1 == 1, "exponent matrix rank")?;
    ensure(ab.free_rank == 2 && ab.torsion.is_empty(), format!("abelianization {ab:?}"))?;
    let (e1, e2) = (Letter::gen(0), Letter::gen(1));
    let spread = power_spread(&[e1, e2], 3).map_err(|e| e.to_string())?;
    ensure(spread == Word::new([e1, e1, e1, e2, e2, e2]) && spread.len() == 6, format!("spread {spread}"))?;
    Ok("⟨e,f,g | efg, gfe⟩, ℤ², e₁³e₂³".into())
}

/// Calls `f` on every closed edge walk of length `1..=max_len` from every
/// vertex.
fn closed_walks(k: &SimplicialComplex, max_len: usize, f: &mut dyn FnMut(&[Vertex])) {
    let adj = k.adjacency();
    fn rec(adj: &BTreeMap<Vertex, BTreeSet<Vertex>>, path: &mut Vec<Vertex>, left: usize, f: &mut dyn FnMut(&[Vertex])) {
        let x = *path.last().unwrap();
        if path.len() > 1 && x == path[0] {
            f(path);
        }
        if left == 0 {
            return;
        }
        for &y in &adj[&x] {
            path.push(y);
            rec(adj, path, left - 1, f);
            path.pop();
        }
    }
    for &v in k.vertices() {
        rec(&adj, &mut vec![v], max_len, f);
    }
}

fn criterion_9() -> Result<String, String> {
    let mut checked = 0usize;
    for cover in [eight_over_four(), orientation_cover()] {
        let adjacency = cover.total().adjacency();
        let assignment = cover.assignment();
        let mut failure = None;
        closed_walks(cover.base(), 8, &mut |walk| {
            if failure.is_some() {
                return;
            }
            let product = assignment.path_voltage(walk).expect("walk uses edges");
            for sheet in 0..cover.degree() {
                let lifted = cover.lift_loop(walk, sheet).expect("valid loop").closed;
                let walked = common::lift_closes_by_walking(&cover, walk, sheet, &adjacency);
                if lifted != product.is_identity() || lifted != walked {
                    failure = Some(format!("loop {walk:?} sheet {sheet}"));
                }
            }
            checked += 1;
        });
        if let Some(f) = failure {
            return Err(f);
        }
        for l in cover.normal_generators().map_err(|e| e.to_string())? {
            for sheet in 0..cover.degree() {
                ensure(cover.lift_loop(&l, sheet).map_err(|e| e.to_string())?.closed, format!("generator {l:?} does not close"))?;
            }
        }
    }
    Ok(format!("{checked} closed walks of length ≤ 8"))
}

fn criterion_10() -> Result<String, String> {
    let start = Instant::now();
    let c5 = taut_spectrum(&Graph::cycle(5), 10, 100_000).map_err(|e| e.to_string())?;
    ensure(c5.spectrum() == BTreeSet::from([5]), format!("C₅ spectrum {:?}", c5.spectrum()))?;
    for l in (1..=10).filter(|&l| l != 5) {
        ensure(c5.status(l) == Some(LengthStatus::Filled), format!("C₅ length {l}: {:?}", c5.status(l)))?;
    }
    let wedge = taut_spectrum(&Graph::wedge_of_cycles(&[3, 4]), 10, 100_000).map_err(|e| e.to_string())?;
    ensure(wedge.spectrum() == BTreeSet::from([3, 4]) && wedge.is_certified(), format!("wedge spectrum {:?}", wedge.spectrum()))?;
    within(start.elapsed(), 10)?;
    Ok(format!("C₅ → {{5}}, C₃∨C₄ → {{3, 4}}, {:.1?}", start.elapsed()))
}

/// Direct transcription of the definition with rational bounds.
fn k_related_oracle(h: &BTreeSet<u64>, h2: &BTreeSet<u64>, k: u64, ceiling: u64) -> bool {
    let one_way = |a: &BTreeSet<u64>, b: &BTreeSet<u64>| {
        a.iter().filter(|&&l| l >= k * k + 2 * k + 2 && l <= ceiling).all(|&l| b.iter().any(|&m| l <= m * k && m <= l * k))
    };
    one_way(h, h2) && one_way(h2, h)
}

fn criterion_11() -> Result<String, String> {
    let s = |v: &[u64], c| ScannedSpectrum::new(v.iter().copied(), c).unwrap();
    let rel = |a: &ScannedSpectrum, b: &ScannedSpectrum, k| k_related(a, b, k).map_err(|e| e.to_string());
    let h = s(&[4, 12, 30, 31, 77], 200);
    for k in 1..=9 {
        ensure(rel(&h, &h, k)?, format!("H not {k}-related to itself"))?;
    }
    ensure(rel(&s(&[10], 30), &s(&[15], 30), 2)?, "({10}, {15}, 2)")?;
    ensure(!rel(&s(&[100], 200), &s(&[], 200), 2)?, "({100}, ∅, 2)")?;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for trial in 0..50 {
        let ceiling = rng.gen_range(20..=120);
        let mut pick = || -> Vec<u64> { (0..rng.gen_range(0..6)).map(|_| rng.gen_range(1..=ceiling)).collect() };
        let (a, b) = (pick(), pick());
        let k = rng.gen_range(1..=3);
        let (sa, sb) = (s(&a, ceiling), s(&b, ceiling));
        let forward = rel(&sa, &sb, k)?;
        ensure(forward == rel(&sb, &sa, k)?, format!("trial {trial}: asymmetric"))?;
        ensure(forward == k_related_oracle(&sa.lengths, &sb.lengths, k, ceiling), format!("trial {trial}: oracle disagrees"))?;
    }
    Ok("unit cases and 50 random symmetric pairs".into())
}

/// `C·α > r` with `α² = 2/(d+1)`, using exact rationals.
fn exceeds_oracle(c: u64, r: u64, d: u64) -> bool {
    let lhs = num_rational::BigRational::new(BigInt::from(2 * c * c), BigInt::from(d + 1));
    lhs > num_rational::BigRational::from_integer(BigInt::from(r * r))
}

fn criterion_12() -> Result<String, String> {
    let bare = choose_constants(2, &[], 1);
    ensure(bare == vec![4], format!("C₁ = {bare:?}"))?;
    ensure(exceeds_oracle(4, 3, 2) && !exceeds_oracle(3, 3, 2), "oracle disagrees on C₁")?;
    // r values from real covers: the 8-cycle cover and a sphere.
    let r8 = r_upper_bound(&eight_over_four(), 1000).map_err(|e| e.to_string())? as u64;
    let r0 = r_upper_bound(&orientation_cover(), 100_000).map_err(|e| e.to_string())? as u64;
    ensure(r8 == 8 && r0 == 0, format!("r values {r8}, {r0}"))?;
    let r = vec![Some(r8), Some(r0), Some(r8), Some(5), Some(r8)];
    let cs = choose_constants(2, &r, 4);
    let rv = |n: usize| r[n].unwrap();
    for (i, &c) in cs.iter().enumerate() {
        let n = i + 1;
        ensure(n > 1 || exceeds_oracle(c, 3, 2), "C₁α > 3")?;
        ensure(exceeds_oracle(c, rv(n - 1), 2), format!("C_{n}α > r_b(n-1)"))?;
        ensure(exceeds_oracle(c, rv(n), 2), format!("C_{n}α > r_b(n)"))?;
        ensure(n == 1 || c > cs[i - 1], format!("C_{n} > C_{}", n - 1))?;
        ensure(alpha_times_exceeds(c, rv(n), 2) == exceeds_oracle(c, rv(n), 2), "square comparison disagrees")?;
        // Minimality: one less violates something.
        let lower = c - 1;
        let ok = |x: u64| (n > 1 || exceeds_oracle(x, 3, 2)) && exceeds_oracle(x, rv(n - 1), 2) && exceeds_oracle(x, rv(n), 2) && (n == 1 || x > cs[i - 1]);
        ensure(lower == 0 || !ok(lower), format!("C_{n} not minimal"))?;
    }
    separation_ratio_check(&bare, &[], 2).map_err(|e| e.to_string())?;
    let bound = separation_ratio_check(&cs, &r, 2).map_err(|e| e.to_string())?;
    ensure(bound.minimum.is_one(), "bound for m = 1 should be 1")?;
    ensure(separation_ratio_check(&[2, 2], &[], 2).is_err(), "C = (2, 2) should fail")?;
    Ok(format!("C₁ = 4; with r = (8, 0, 8, 5, 8): C = {cs:?}"))
}

fn criterion_13() -> Result<String, String> {
    let b = min_kernel_length_bound(7, 2);
    // 7·√(2/3) = √(98/3); digits from an integer square root at 10⁻³⁰.
    let scaled = (BigUint::from(98u32) * BigUint::from(10u32).pow(60u32) / BigUint::from(3u32)).sqrt();
    let exact: f64 = scaled.to_string().parse::<f64>().unwrap() / 1e30;
    ensure((b - exact).abs() < 1e-12, format!("bound {b:.15} vs {exact:.15}"))?;
    ensure(format!("{b:.10}").starts_with("5.715476066"), format!("bound {b:.12}"))?;
    for m in [0u64, 1, 2, 7, 1000, 123_456_789] {
        ensure(min_kernel_length_bound(m, 1) == m as f64, format!("bound({m}, 1)"))?;
    }
    Ok(format!("bound(7, 2) = {b:.12}; bound(M, 1) = M"))
}

fn main() {
    let criteria: [(&str, Check); 13] = [
        ("spherical-double flag law, all complexes on ≤ 5 vertices", criterion_1),
        ("join combinatorics of S(Δ²) and S(edge)", criterion_2),
        ("doubles of degree-2 covers are degree-2 covers", criterion_3),
        ("homology certificates of subdivided RP²", criterion_4),
        ("Smith normal form soundness on 100 fuzzed matrices", criterion_5),
        ("FP₂ truth table for a ℤ/5 recurrent entry", criterion_6),
        ("prime-set and field-example patterns", criterion_7),
        ("presentation of the 2-simplex and spread powers", criterion_8),
        ("lifting consistency over closed walks of length ≤ 8", criterion_9),
        ("taut spectra of C₅ and C₃∨C₄", criterion_10),
        ("k-related unit cases and symmetry", criterion_11),
        ("growth constants and separation check", criterion_12),
        ("kernel-length bound", criterion_13),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match outcome {
            Ok(detail) => println!("criterion {:>2}: PASS  {name} [{detail}] ({:.2?})", i + 1, start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {why} ({:.2?})", i + 1, start.elapsed());
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
