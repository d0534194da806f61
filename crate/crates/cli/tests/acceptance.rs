//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::io::Write;
use std::process::{Command, Stdio};
use std::time::Instant;

use frobsplit::oracle::{coordinate_splitting, monomial_oracle};
use frobsplit::probe::{probe, random_ideal, ProbeConfig};
use frobsplit_core::frobenius::{is_compatible_by_colon, is_compatible_by_root};
use frobsplit_core::{
    compatible_closure, enumerate_all, fedder_is_fpure, frob_decompose, frob_root, splitting_from_hypersurface, trace,
    validate_splitting, verify_lattice, CompatibleLattice, Ideal, Monomial, PolyRing, Polynomial, Ring, Splitting,
};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

/// Probe ideals per suite input.
const PROBES_PER_INPUT: usize = 100;
/// Probe ideals whose closure may fall outside the lattice.
const MAX_PROBE_MISSES: usize = 0;
const PROBE_SEED: u64 = 42;
const PROBE_MAX_DEG: u32 = 3;
/// Random instances per kernel equivalence.
const KERNEL_INSTANCES: usize = 200;
const KERNEL_SEED: u64 = 0x6b65_726e;
const KERNEL_MAX_DEG: u32 = 3;

const FERMAT: &str = "p=7; vars=x,y,z; f=6*(x^3+y^3+z^3)^6;";
const XY: &str = "p=2; vars=x,y; f=x*y;";

struct Gate {
    failures: usize,
}

impl Gate {
    fn record(&mut self, n: u32, name: &str, started: Instant, result: Result<String, String>) {
        let secs = started.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {n} [{name}]: PASS ({detail}; {secs:.1}s)"),
            Err(detail) => {
                self.failures += 1;
                println!("criterion {n} [{name}]: FAIL ({detail}; {secs:.1}s)");
            }
        }
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn keys(lattice: &CompatibleLattice) -> BTreeSet<String> {
    lattice.members().iter().map(|m| m.key()).collect()
}

fn key_set(ideals: &[Ideal]) -> BTreeSet<String> {
    ideals.iter().map(Ideal::key).collect()
}

fn strings(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

fn fermat(ring: &Ring) -> Polynomial {
    (0..3).fold(Polynomial::zero(ring), |a, i| &a + &Polynomial::var(ring, i).pow(3))
}

fn coordinate_lattice(n: usize, p: u64) -> Result<(CompatibleLattice, BTreeSet<String>), String> {
    let s = coordinate_splitting(n, p).map_err(|e| e.to_string())?;
    let lattice = enumerate_all(&s).map_err(|e| format!("p={p}: {e}"))?;
    let oracle = key_set(&monomial_oracle(n, p).map_err(|e| e.to_string())?);
    Ok((lattice, oracle))
}

fn criterion_1() -> Result<String, String> {
    let expected = strings(&["(0)", "(x)", "(y)", "(x*y)", "(x, y)", "(1)"]);
    for p in [2, 3, 5, 7] {
        let (lattice, oracle) = coordinate_lattice(2, p)?;
        ensure(keys(&lattice) == expected, || format!("p={p}: lattice {:?}", keys(&lattice)))?;
        ensure(oracle == expected, || format!("p={p}: oracle {oracle:?}"))?;
        ensure(lattice.proper_nonzero_count() == 4, || format!("p={p}: proper count"))?;
        ensure(lattice.primes().count() == 3, || format!("p={p}: prime count"))?;
    }
    Ok("p in {2,3,5,7}: 6 members, 4 proper nonzero, 3 primes, oracle equal".into())
}

fn criterion_2() -> Result<String, String> {
    let coordinate_primes = strings(&["(x)", "(y)", "(z)", "(x, y)", "(x, z)", "(y, z)", "(x, y, z)"]);
    let mut sizes = Vec::new();
    for p in [2, 3, 5] {
        let (lattice, oracle) = coordinate_lattice(3, p)?;
        ensure(keys(&lattice) == oracle, || format!("p={p}: lattice and oracle differ"))?;
        let primes: BTreeSet<String> = lattice.primes().map(Ideal::key).collect();
        ensure(primes == coordinate_primes, || format!("p={p}: primes {primes:?}"))?;
        sizes.push(oracle.len());
    }
    Ok(format!("p in {{2,3,5}}: oracle sizes {sizes:?} equal, 7 coordinate primes"))
}

/// `(x^3+y^3+z^3)^{p-1}` has a term inside the box `[0, p-1]^3` iff some
/// multinomial coefficient `(p-1)! / (a! b! c!)` with `3a, 3b, 3c <= p-1`
/// is nonzero mod `p`.
fn fedder_by_multinomials(p: u64) -> bool {
    let fact = |k: u64| (1..=k).map(u128::from).product::<u128>();
    let d = p - 1;
    (0..=d).any(|a| {
        (0..=d - a).any(|b| {
            let c = d - a - b;
            let inside = 3 * a <= d && 3 * b <= d && 3 * c <= d;
            inside && (fact(d) / (fact(a) * fact(b) * fact(c))) % p as u128 != 0
        })
    })
}

fn criterion_3() -> Result<String, String> {
    for p in [2, 3, 5, 7, 11, 13] {
        let r = PolyRing::grevlex(p, &["x", "y", "z"]).unwrap();
        ensure(fedder_is_fpure(&fermat(&r)) == fedder_by_multinomials(p), || format!("Fedder disagrees at p={p}"))?;
    }
    let r7 = PolyRing::grevlex(7, &["x", "y", "z"]).unwrap();
    let g = fermat(&r7);
    ensure(fedder_is_fpure(&g), || "p=7 not F-pure".into())?;
    let s = splitting_from_hypersurface(&g).map_err(|e| e.to_string())?;
    ensure(s.polynomial() == &g.pow(6).scale(6), || format!("f = {}", s.polynomial()))?;
    ensure(trace(s.polynomial()).is_one(), || "u(f) != 1".into())?;
    let lattice = enumerate_all(&s).map_err(|e| e.to_string())?;
    let chain: Vec<String> = lattice.members().iter().map(|m| m.key()).collect();
    let expected = ["(0)".to_string(), format!("({g})"), "(x, y, z)".into(), "(1)".into()];
    ensure(chain == expected, || format!("members {chain:?}"))?;
    ensure(lattice.hasse_edges() == [(0, 1), (1, 2), (2, 3)], || "not a chain".into())?;
    ensure(verify_lattice(&s, &lattice).passed(), || "verification failed".into())?;
    for m in lattice.members() {
        let a = is_compatible_by_root(&s, &m.ideal).map_err(|e| e.to_string())?;
        let b = is_compatible_by_colon(&s, &m.ideal).map_err(|e| e.to_string())?;
        ensure(a && b, || format!("{} fails a compatibility test", m.ideal))?;
    }
    let r5 = PolyRing::grevlex(5, &["x", "y", "z"]).unwrap();
    ensure(!fedder_is_fpure(&fermat(&r5)), || "p=5 reported F-pure".into())?;
    ensure(splitting_from_hypersurface(&fermat(&r5)).is_err(), || "p=5 splitting constructed".into())?;
    Ok("Fedder matches multinomials for p<=13; p=7 chain of 4 verified; p=5 rejected".into())
}

/// Every enumeration input of the gate, as session text.
fn suite() -> Vec<String> {
    let mut inputs = Vec::new();
    for p in [2u64, 3, 5, 7] {
        inputs.push(format!("p={p}; vars=x,y; f=(x*y)^{};", p - 1));
    }
    for p in [2u64, 3, 5] {
        inputs.push(format!("p={p}; vars=x,y,z; f=(x*y*z)^{};", p - 1));
    }
    inputs.push(FERMAT.into());
    inputs.push("p=3; vars=x,y,z; f=x*y*(x*y+2*z^2)^2;".into());
    inputs.push("p=5; vars=x,y; f=(y^2-x^3-x^2)^4;".into());
    inputs
}

fn suite_lattices() -> Result<Vec<(String, Splitting, CompatibleLattice)>, String> {
    suite()
        .into_iter()
        .map(|text| {
            let spec = frobsplit::parse_session(&text).map_err(|e| format!("{text}: {e}"))?;
            let ring = spec.ring();
            let s = validate_splitting(&spec.polynomial(&ring)).map_err(|e| format!("{text}: {e}"))?;
            let lattice = enumerate_all(&s).map_err(|e| format!("{text}: {e}"))?;
            Ok((text, s, lattice))
        })
        .collect()
}

fn criterion_4(lattices: &[(String, Splitting, CompatibleLattice)]) -> Result<String, String> {
    let mut checked = 0;
    for (text, s, lattice) in lattices {
        let f = s.polynomial();
        for m in lattice.members().iter().filter(|m| !m.is_trivial) {
            ensure(m.ideal.contains(f).unwrap_or(false), || format!("{text}: f not in {}", m.ideal))?;
            checked += 1;
        }
        let closure = compatible_closure(s, &Ideal::principal(f.clone()).unwrap()).map_err(|e| e.to_string())?;
        let proper: Vec<&Ideal> = lattice.members().iter().filter(|m| !m.is_trivial).map(|m| &m.ideal).collect();
        let minimal: Vec<&Ideal> =
            proper.iter().copied().filter(|i| !proper.iter().any(|k| k != i && k.is_subset_of(i).unwrap())).collect();
        ensure(minimal == [&closure], || format!("{text}: minimal members {minimal:?}, closure {closure}"))?;
    }
    Ok(format!("{} inputs, f in all {checked} proper members, minimum = A((f))", lattices.len()))
}

#[allow(clippy::absurd_extreme_comparisons)]
fn criterion_5(lattices: &[(String, Splitting, CompatibleLattice)]) -> Result<String, String> {
    let config = ProbeConfig { seed: PROBE_SEED, probes: PROBES_PER_INPUT, max_deg: PROBE_MAX_DEG };
    let mut total = 0;
    for (text, _, lattice) in lattices {
        let n = lattice.ring().nvars();
        ensure(lattice.nodes().iter().all(|node| node.depth <= n), || format!("{text}: depth exceeds {n}"))?;
        let report = probe(lattice, config).map_err(|e| format!("{text}: {e}"))?;
        ensure(report.misses.len() <= MAX_PROBE_MISSES, || format!("{text}: misses {:?}", report.misses))?;
        total += report.probes;
    }
    Ok(format!("{} inputs terminated, depth <= n, {total} probes, 0 misses", lattices.len()))
}

fn random_poly(ring: &Ring, rng: &mut ChaCha8Rng, terms: usize, max_exp: u32) -> Polynomial {
    let p = ring.characteristic();
    let n = ring.nvars();
    Polynomial::from_terms(
        ring,
        (0..terms).map(|_| {
            let e = (0..n).map(|_| rng.random_range(0..=max_exp)).collect();
            (Monomial::new(e), rng.random_range(1..p))
        }),
    )
}

fn random_splitting(ring: &Ring, rng: &mut ChaCha8Rng) -> Splitting {
    let p = ring.characteristic();
    let top = (0..ring.nvars()).fold(Polynomial::one(ring), |a, i| &a * &Polynomial::var(ring, i)).pow(p - 1);
    let noise = random_poly(ring, rng, 3, 2 * p - 1);
    let noise = Polynomial::from_terms(
        ring,
        noise.terms().iter().filter(|(m, _)| !m.exponents().iter().all(|e| e % p == p - 1)).cloned(),
    );
    validate_splitting(&(&top + &noise)).expect("noise avoids the top class")
}

fn random_ring(rng: &mut ChaCha8Rng) -> Ring {
    let p = [2u64, 3, 5][rng.random_range(0..3)];
    let n = rng.random_range(1..=3);
    PolyRing::grevlex(p, &["x", "y", "z"][..n]).unwrap()
}

fn criterion_6() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(KERNEL_SEED);
    let err = |e: frobsplit_core::Error| e.to_string();
    for i in 0..KERNEL_INSTANCES {
        let r = random_ring(&mut rng);
        let p = r.characteristic() as u64;

        let k = random_ideal(&r, &mut rng, KERNEL_MAX_DEG).map_err(|e| e.to_string())?;
        let back = frob_root(&k.bracket_power(p).map_err(err)?).map_err(err)?;
        ensure(back == k, || format!("instance {i}: root of {k}^[p] is {back}"))?;

        let s = random_splitting(&r, &mut rng);
        let ideal = random_ideal(&r, &mut rng, KERNEL_MAX_DEG).map_err(|e| e.to_string())?;
        let a = is_compatible_by_root(&s, &ideal).map_err(err)?;
        let b = is_compatible_by_colon(&s, &ideal).map_err(err)?;
        ensure(a == b, || format!("instance {i}: tests disagree on {ideal}"))?;

        let (g1, g2, h) =
            (random_poly(&r, &mut rng, 3, 2), random_poly(&r, &mut rng, 3, 2), random_poly(&r, &mut rng, 2, 1));
        let one = Ideal::new(&r, [g1.clone(), g2.clone()]).map_err(err)?;
        let other = Ideal::new(&r, [&g1 + &(&h * &g2), g2.clone(), &h * &g1]).map_err(err)?;
        ensure(one.bracket_power(p).map_err(err)? == other.bracket_power(p).map_err(err)?, || {
            format!("instance {i}: bracket power depends on generators of {one}")
        })?;

        let j = random_ideal(&r, &mut rng, 2).map_err(|e| e.to_string())?;
        let colon = one.colon(&j).map_err(err)?;
        ensure(colon.product(&j).map_err(err)?.is_subset_of(&one).map_err(err)?, || {
            format!("instance {i}: ({one} : {j})·{j} not inside {one}")
        })?;

        let g = random_poly(&r, &mut rng, 5, 3 * r.characteristic());
        ensure(frob_decompose(&g).recompose() == g, || format!("instance {i}: recomposition of {g}"))?;
    }
    Ok(format!("{KERNEL_INSTANCES} instances x 5 identities, seed {KERNEL_SEED:#x}, 0 violations"))
}

fn run_cli(args: &[&str], stdin: &str) -> (Option<i32>, Vec<u8>) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_frobsplit"))
        .args(args)
        .env_remove("FROBSPLIT_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code(), out.stdout)
}

fn criterion_7() -> Result<String, String> {
    let (code, clean) = run_cli(&["enumerate"], XY);
    ensure(code == Some(0), || format!("clean run exited {code:?}"))?;
    let clean: Value = serde_json::from_slice(&clean).map_err(|e| e.to_string())?;

    let mut injected = clean.clone();
    injected["members"].as_array_mut().unwrap().push(serde_json::json!({
        "gens": ["x + y"], "dim": 1, "is_prime": false, "is_trivial": false, "verified": true
    }));
    let (code, _) = run_cli(&["verify"], &injected.to_string());
    ensure(code == Some(5), || format!("injected (x + y): exit {code:?}"))?;

    let mut deleted = clean.clone();
    let index = deleted["members"].as_array().unwrap().iter().position(|m| m["gens"] == serde_json::json!(["x", "y"]));
    let index = index.ok_or("no (x, y) member")? as u64;
    deleted["members"].as_array_mut().unwrap().remove(index as usize);
    deleted["nodes"].as_array_mut().unwrap().retain(|n| n["member"] != index);
    for node in deleted["nodes"].as_array_mut().unwrap() {
        let m = node["member"].as_u64().unwrap();
        if m > index {
            node["member"] = (m - 1).into();
        }
    }
    let (code, _) = run_cli(&["verify"], &deleted.to_string());
    ensure(code == Some(5), || format!("deleted (x, y): exit {code:?}"))?;

    let (code, _) = run_cli(&["enumerate"], "p=2; vars=x,y; f=1;");
    ensure(code == Some(3), || format!("f = 1: exit {code:?}"))?;

    let s = coordinate_splitting(2, 2).map_err(|e| e.to_string())?;
    let lattice = enumerate_all(&s).map_err(|e| e.to_string())?;
    let r = lattice.ring().clone();
    let (x, y) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
    let mutated = lattice.with_member(Ideal::new(&r, [&x + &y]).unwrap()).unwrap();
    ensure(!verify_lattice(&s, &mutated).check("a_compatible").unwrap().passed, || "library missed injection".into())?;
    let mutated = lattice.without_member(&Ideal::new(&r, [x, y]).unwrap()).unwrap();
    ensure(!verify_lattice(&s, &mutated).check("e_sum_intersection").unwrap().passed, || {
        "library missed deletion".into()
    })?;
    Ok("injection -> exit 5, deletion -> exit 5, u(f) != 1 -> exit 3".into())
}

fn criterion_8() -> Result<String, String> {
    for input in [XY, FERMAT, "p=5; vars=x,y,z; f=(x*y*z)^4;"] {
        let (c1, a) = run_cli(&["enumerate"], input);
        let (c2, b) = run_cli(&["enumerate"], input);
        let (c3, c) = run_cli(&["enumerate", "--parallel"], input);
        ensure([c1, c2, c3] == [Some(0); 3], || format!("{input}: exit codes {c1:?} {c2:?} {c3:?}"))?;
        ensure(a == b, || format!("{input}: sequential runs differ"))?;
        ensure(a == c, || format!("{input}: parallel run differs"))?;
    }
    Ok("3 inputs: repeated and parallel JSON byte-identical".into())
}

fn main() {
    let mut gate = Gate { failures: 0 };
    let t = Instant::now();
    gate.record(1, "coordinate plane", t, criterion_1());
    let t = Instant::now();
    gate.record(2, "coordinate space", t, criterion_2());
    let t = Instant::now();
    gate.record(3, "Fermat cone", t, criterion_3());
    let t = Instant::now();
    match suite_lattices() {
        Ok(lattices) => {
            gate.record(4, "f lies in every proper member", t, criterion_4(&lattices));
            let t = Instant::now();
            gate.record(5, "finiteness and completeness", t, criterion_5(&lattices));
        }
        Err(e) => {
            gate.record(4, "f lies in every proper member", t, Err(e.clone()));
            gate.record(5, "finiteness and completeness", t, Err(e));
        }
    }
    let t = Instant::now();
    gate.record(6, "kernel equivalences", t, criterion_6());
    let t = Instant::now();
    gate.record(7, "negative controls", t, criterion_7());
    let t = Instant::now();
    gate.record(8, "determinism", t, criterion_8());
    println!("acceptance: {} of 8 criteria passed", 8 - gate.failures);
    if gate.failures > 0 {
        std::process::exit(1);
    }
}
