use frobsplit::{
    cmd_enumerate, parse_polynomial, parse_session, to_dot, CountConvention, LatticeDocument, RunOptions, SessionSpec,
};
use frobsplit_core::{Ideal, Monomial, PolyRing, Polynomial};
use proptest::prelude::*;

fn document(text: &str) -> LatticeDocument {
    let spec = parse_session(text).unwrap();
    cmd_enumerate(&spec, RunOptions::default(), CountConvention::All).unwrap()
}

#[test]
fn round_trip_through_json() {
    for text in
        ["p=2; vars=x,y; f=x*y;", "p=7; vars=x,y,z; f=6*(x^3+y^3+z^3)^6;", "p=3; vars=x,y,z; f=x*y*(x*y+2*z^2)^2;"]
    {
        let doc = document(text);
        let spec = parse_session(text).unwrap();
        let lattice = frobsplit::commands::enumerate_lattice(&spec, RunOptions::default()).unwrap();
        let reread = LatticeDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(reread, doc);
        let rebuilt = reread.to_lattice().unwrap();
        let mut expected = lattice.clone();
        expected.mark_verified(&frobsplit_core::verify_lattice(lattice.splitting(), &lattice));
        assert_eq!(rebuilt, expected);
    }
}

#[test]
fn lattice_without_proper_members() {
    let doc = document("p=3; vars=x; f=x^2+1;");
    let gens: Vec<&Vec<String>> = doc.members.iter().map(|m| &m.gens).collect();
    assert_eq!(gens, [&Vec::<String>::new(), &vec!["1".to_string()]]);
    assert!(doc.verification.passed);
    assert_eq!(doc.hasse, [[0, 1]]);
}

/// The transitive closure of the DOT edges is exactly strict containment.
#[test]
fn dot_edges_generate_containment() {
    let doc = document("p=3; vars=x,y,z; f=(x*y*z)^2;");
    let dot = to_dot(&doc);
    let n = doc.members.len();
    let mut reach = vec![vec![false; n]; n];
    for line in dot.lines().filter(|l| l.contains("->")) {
        let ids: Vec<usize> =
            line.split("->").map(|s| s.trim().trim_start_matches('n').trim_end_matches(';').parse().unwrap()).collect();
        reach[ids[0]][ids[1]] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if reach[i][k] && reach[k][j] {
                    reach[i][j] = true;
                }
            }
        }
    }
    let lattice = doc.to_lattice().unwrap();
    let ms = lattice.members();
    for i in 0..n {
        assert!(!reach[i][i], "cycle through {i}");
        for j in 0..n {
            if i != j {
                assert_eq!(reach[i][j], ms[i].ideal.is_subset_of(&ms[j].ideal).unwrap(), "{i} {j}");
            }
        }
    }
}

#[test]
fn json_is_stable() {
    let a = document("p=5; vars=x,y; f=(x*y)^4;").to_json();
    let b = document("p=5; vars=x,y; f=(x*y)^4;").to_json();
    assert_eq!(a, b);
    assert!(a.starts_with("{\n  \"tool\": \"frobsplit\",\n  \"version\""));
}

const PRIMES: [u64; 4] = [2, 3, 5, 7];

fn polynomial_text() -> impl Strategy<Value = (usize, Vec<(Vec<u32>, u32)>)> {
    (0..4usize, prop::collection::vec((prop::collection::vec(0u32..5, 3), 0u32..50), 0..5))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn printed_polynomials_reparse((pi, terms) in polynomial_text()) {
        let r = PolyRing::grevlex(PRIMES[pi], &["x", "y", "z"]).unwrap();
        let f = Polynomial::from_terms(&r, terms.into_iter().map(|(e, c)| (Monomial::new(e), c)));
        prop_assert_eq!(parse_polynomial(&r, &f.to_string()).unwrap(), f);
    }

    #[test]
    fn printed_sessions_reparse(
        (pi, terms) in polynomial_text(),
        seed in proptest::option::of(any::<u64>()),
        probes in proptest::option::of(0usize..1000),
        max_deg in proptest::option::of(0u32..6),
        proper in proptest::option::of(any::<bool>()),
        budget in proptest::option::of(1usize..100_000),
    ) {
        let r = PolyRing::grevlex(PRIMES[pi], &["x", "y", "z"]).unwrap();
        let f = Polynomial::from_terms(&r, terms.into_iter().map(|(e, c)| (Monomial::new(e), c)));
        let mut text = format!("p={}; vars=x,y,z; f={f};", PRIMES[pi]);
        if let Some(s) = seed { text.push_str(&format!(" seed={s};")); }
        if let Some(n) = probes { text.push_str(&format!(" probes={n};")); }
        if let Some(d) = max_deg { text.push_str(&format!(" max_deg={d};")); }
        if let Some(p) = proper { text.push_str(if p { " count=proper-nonzero;" } else { " count=all;" }); }
        if let Some(b) = budget { text.push_str(&format!(" budget={b};")); }
        let spec: SessionSpec = text.parse().unwrap();
        prop_assert_eq!(spec.to_string(), text);
        prop_assert_eq!(spec.to_string().parse::<SessionSpec>().unwrap(), spec.clone());
        prop_assert_eq!(Ideal::principal(spec.polynomial(&spec.ring())).unwrap(), Ideal::principal(f).unwrap());
    }
}
