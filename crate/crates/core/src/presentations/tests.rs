use super::*;

fn rel(p: &Presentation, label: &str) -> Vec<String> {
    p.relators.iter().filter(|r| r.label == label).map(|r| r.word.to_string()).collect()
}

#[test]
fn family_names_round_trip() {
    for f in Family::ALL {
        assert_eq!(f.name().parse::<Family>().unwrap(), f);
    }
    assert!("braid-torus".parse::<Family>().is_err());
}

#[test]
fn parameter_constraints() {
    assert!(build(Family::BraidPuncturedOrientable, 2, 0, 1).is_err());
    assert!(build(Family::BraidPuncturedOrientable, 0, 1, 1).is_err());
    assert!(build(Family::BraidClosedOrientableAB, 2, 1, 1).is_err());
    assert!(build(Family::BraidPuncturedSphere, 2, 1, 1).is_err());
    assert!(build(Family::BraidClosedNonorientable, 2, 1, 0).is_err());
    assert!(build(Family::BraidClosedNonorientable, 2, 2, 0).is_ok());
    assert!(build(Family::PurePunctured, 2, 1, 0).is_err());
}

#[test]
fn generator_counts() {
    let p = build(Family::BraidPuncturedOrientable, 3, 2, 2).unwrap();
    // s1 s2, a1 a2, b1 b2, z1
    assert_eq!(p.generator_count(), 7);
    let p = build(Family::PurePunctured, 2, 1, 1).unwrap();
    assert_eq!(
        p.alphabet.symbols(),
        &[
            GenSym::PureA(1, 3),
            GenSym::PureA(2, 3),
            GenSym::PureA(1, 4),
            GenSym::PureA(2, 4),
            GenSym::PureA(3, 4)
        ]
    );
    let p = build(Family::PureClosed, 3, 1, 0).unwrap();
    // walls 1..2, strands 3..5: 2 + 3 + 4 pairs
    assert_eq!(p.generator_count(), 9);
}

#[test]
fn single_strand_is_the_surface_group() {
    let p = build(Family::BraidPuncturedOrientable, 1, 2, 3).unwrap();
    assert!(p.relators.is_empty());
    assert_eq!(p.generator_count(), 2 * 2 + 3 - 1);
    let p = build(Family::BraidClosedOrientableAB, 1, 2, 0).unwrap();
    assert_eq!(p.relators.len(), 1);
    assert_eq!(p.relators[0].word.len(), 8);
}

#[test]
fn braid_relations_present() {
    let p = build(Family::BraidPuncturedOrientable, 4, 1, 1).unwrap();
    assert!(p.relators.iter().any(|r| r.word.to_string() == "s1 s2 s1 s2^-1 s1^-1 s2^-1"));
    assert!(p.relators.iter().any(|r| r.word.to_string() == "s1 s3 s1^-1 s3^-1"));
    p.check().unwrap();
}

#[test]
fn closed_tr_relator() {
    let p = build(Family::BraidClosedOrientableAB, 2, 1, 0).unwrap();
    assert_eq!(rel(&p, "(TR)").len(), 1);
}

#[test]
fn pure_tr_relator_at_n1() {
    let p = build(Family::PureClosed, 1, 1, 0).unwrap();
    assert_eq!(p.relators.len(), 1);
    assert_eq!(p.relators[0].word.len(), 4);
}

#[test]
fn expansion_of_strand_pairs() {
    let idx = PureIndexing::new(3, 1, 1);
    assert_eq!(idx.walls(), 2);
    assert_eq!(expand_pure_generator(3, 4, &idx).unwrap().to_string(), "s1^2");
    assert_eq!(expand_pure_generator(3, 5, &idx).unwrap().to_string(), "s2 s1^2 s2^-1");
    assert_eq!(expand_pure_generator(1, 3, &idx).unwrap().to_string(), "b1^-1");
    assert_eq!(expand_pure_generator(2, 4, &idx).unwrap().to_string(), "s1 a1^-1 s1^-1");
    assert!(expand_pure_generator(4, 3, &idx).is_err());
}

#[test]
fn derived_elements() {
    let params = Family::BraidPuncturedOrientable.params(3, 1, 2);
    let w = |d| derived_element(d, &params).unwrap().to_string();
    assert_eq!(w(Derived::Tau(1)), "s2 s1^2 s2^-1");
    assert_eq!(w(Derived::Tau(2)), "s2^2");
    assert_eq!(w(Derived::Beta), "s2 s1^2 s2");
    assert_eq!(w(Derived::Omega(1)), "s2^-1 s1^-1 a1 s1 s2");
    assert_eq!(w(Derived::Omega(2)), "s2^-1 s1^-1 b1 s1 s2");
    assert_eq!(w(Derived::Zeta(1)), "s2^-1 s1^-1 z1 s1 s2");
    assert_eq!(w(Derived::Rho(3)), "");
    assert_eq!(w(Derived::Tre), "s1 s2^2 s1");
    assert_eq!(w(Derived::Gamma), "s2^-1 s1^2 s2");
    assert!(derived_element(Derived::Tau(3), &params).is_err());
    assert!(derived_element(Derived::Zeta(2), &params).is_err());
}

#[test]
fn theta_tilde_kills_tau() {
    let params = Family::BraidPuncturedOrientable.params(3, 1, 1);
    assert!(theta_tilde(B0Gen::Tau(1), &params).unwrap().is_empty());
    assert_eq!(theta_tilde(B0Gen::Sigma(1), &params).unwrap().to_string(), "s1");
    assert!(theta_tilde(B0Gen::Sigma(2), &params).is_err());
}

#[test]
fn document_round_trip() {
    let p = build(Family::BraidPuncturedOrientable, 3, 1, 2).unwrap();
    let q = Presentation::from_json(&p.to_json()).unwrap();
    assert_eq!(q.alphabet, p.alphabet);
    assert_eq!(q.relators, p.relators);
}
