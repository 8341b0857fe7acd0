use super::*;
use crate::presentations::{build, derived_element, Derived};
use crate::solvers::abelian_invariants_from_relators;
use crate::words::parse_word;

#[test]
fn sigma_goes_to_adjacent_transposition() {
    let p = build(Family::BraidPuncturedOrientable, 3, 1, 1).unwrap();
    let h = canonical_permutation_hom(&p).unwrap();
    assert_eq!(h.image(GenSym::Sigma(1)).unwrap().to_string(), "(1 2)");
    assert_eq!(h.image(GenSym::A(1)).unwrap().to_string(), "()");
    let pure = build(Family::PurePunctured, 2, 1, 1).unwrap();
    assert!(canonical_permutation_hom(&pure).is_err());
}

#[test]
fn permutation_check_passes_and_detects_corruption() {
    let p = build(Family::BraidPuncturedOrientable, 3, 1, 1).unwrap();
    let mut h = canonical_permutation_hom(&p).unwrap();
    let report = h.verify();
    assert!(report.overall && report.exact && h.is_verified());

    let bad: Vec<(GenSym, Image)> = p
        .alphabet
        .symbols()
        .iter()
        .map(|&g| {
            let e = match g {
                GenSym::A(1) => Element::Perm(Perm::transposition(3, 0, 2)),
                _ => match h.image(g).unwrap() {
                    Image::Element(e) => e.clone(),
                    Image::Word(_) => unreachable!(),
                },
            };
            (g, Image::Element(e))
        })
        .collect();
    let mut corrupt =
        Homomorphism::new("bad", p.clone(), Codomain::Group(TargetGroup::Symmetric(3)), bad).unwrap();
    let report = corrupt.verify();
    assert!(!report.overall && !corrupt.is_verified());
    assert_eq!(report.failures().next().unwrap().label, "(R1)");
}

#[test]
fn missing_image_is_rejected() {
    let p = build(Family::BraidPuncturedOrientable, 2, 1, 1).unwrap();
    let images = vec![(GenSym::Sigma(1), Image::Element(Element::Perm(Perm::identity(2))))];
    assert!(Homomorphism::new("h", p, Codomain::Group(TargetGroup::Symmetric(2)), images).is_err());
}

#[test]
fn chi_images() {
    let p = build(Family::PurePunctured, 2, 1, 1).unwrap();
    let h = chi_hom(&p).unwrap();
    assert_eq!(h.image(GenSym::PureA(3, 4)).unwrap().to_string(), "(1, 1)");
    assert_eq!(h.image(GenSym::PureA(1, 4)).unwrap().to_string(), "(1, x1)");
    assert_eq!(h.image(GenSym::PureA(2, 3)).unwrap().to_string(), "(x2, 1)");
    assert!(verify_hom(&h).overall);
}

#[test]
fn chi_on_closed_tr_gives_the_surface_relator() {
    let p = build(Family::PureClosed, 2, 2, 0).unwrap();
    let h = chi_hom(&p).unwrap();
    let tr = p.relators.iter().find(|r| r.label == "(TR)").unwrap();
    let Image::Element(Element::Tuple(coords)) = h.apply(&tr.word).unwrap() else { panic!() };
    assert_eq!(coords[0], Element::Word(crate::solvers::surface_relator(2)));
    assert!(verify_hom(&h).overall);
}

#[test]
fn expansions_are_pure() {
    for (g, p) in [(1, 1), (2, 2), (1, 0)] {
        let fam = if p == 0 { Family::PureClosed } else { Family::PurePunctured };
        let pres = build(fam, 3, g, p).unwrap();
        let h = expansion_permutation_hom(&pres).unwrap();
        for &s in pres.alphabet.symbols() {
            assert_eq!(h.image(s).unwrap().to_string(), "()");
        }
    }
}

#[test]
fn forget_strand() {
    let p = build(Family::PurePunctured, 2, 1, 1).unwrap();
    let h = forget_strand_hom(&p).unwrap();
    assert_eq!(h.image(GenSym::PureA(1, 3)), Some(&Image::Word(Word::gen(GenSym::PureA(1, 3)))));
    assert_eq!(h.image(GenSym::PureA(1, 4)), Some(&Image::Word(Word::identity())));
    let report = verify_hom(&h);
    assert!(report.overall && !report.exact);
    let one = build(Family::PurePunctured, 1, 1, 1).unwrap();
    assert!(forget_strand_hom(&one).is_err());
}

#[test]
fn forget_strand_across_small_grid() {
    for (n, g, p) in [(3, 1, 1), (3, 1, 2), (3, 2, 1), (2, 1, 0), (3, 1, 0)] {
        let fam = if p == 0 { Family::PureClosed } else { Family::PurePunctured };
        let h = forget_strand_hom(&build(fam, n, g, p).unwrap()).unwrap();
        let report = verify_hom(&h);
        assert!(report.overall, "{fam} {n} {g} {p}: {:?}", report.failures().next());
    }
}

#[test]
fn section_maps_relators_to_relators() {
    let p = build(Family::BraidPuncturedOrientable, 2, 1, 1).unwrap();
    let h = section_hom(&p).unwrap();
    assert_eq!(h.image(GenSym::Sigma(1)), Some(&Image::Word(Word::gen(GenSym::Sigma(1)))));
    let Codomain::Presentation(q) = &h.codomain else { panic!() };
    let r4 = p.relator("(R4)").unwrap();
    assert!(q.relators.iter().any(|r| r.label == "(R4)" && r.word == r4.word));
    assert!(verify_hom(&h).overall);
    let closed = build(Family::BraidClosedOrientableAB, 2, 1, 0).unwrap();
    assert!(section_hom(&closed).is_err());
}

#[test]
fn mu_images() {
    let h = mu_hom(2, 2, 1).unwrap();
    assert_eq!(h.image(GenSym::PureA(1, 5)).unwrap().to_string(), "(x1, 1)");
    assert_eq!(h.image(GenSym::PureA(3, 6)).unwrap().to_string(), "(1, x2)");
    assert_eq!(h.image(GenSym::PureA(2, 5)).unwrap().to_string(), "(1, 1)");
    assert!(verify_hom(&h).overall);
    assert!(verify_hom(&mu_hom(2, 2, 0).unwrap()).overall);
    assert!(mu_hom(2, 1, 2).is_err());
}

#[test]
fn strand_generators_die_in_homology() {
    for (n, g, p) in [(3, 1, 1), (3, 2, 1), (2, 1, 2), (3, 1, 0)] {
        let fam = if p == 0 { Family::PureClosed } else { Family::PurePunctured };
        let pres = build(fam, n, g, p).unwrap();
        let check = QuotientCheck::new(&pres);
        let idx = PureIndexing::new(n, g, p);
        for &s in pres.alphabet.symbols() {
            let GenSym::PureA(i, _) = s else { unreachable!() };
            if !idx.is_wall(i) {
                assert!(check.in_abelian_kernel(&Word::gen(s)), "{s} at {fam} {n} {g} {p}");
            } else {
                assert!(!check.in_abelian_kernel(&Word::gen(s)));
            }
        }
    }
}

#[test]
fn quotient_check_rejects_nontrivial_words() {
    let p = build(Family::BraidPuncturedOrientable, 3, 1, 1).unwrap();
    let check = QuotientCheck::new(&p);
    assert!(!check.passes(&parse_word("s1").unwrap()));
    // σ₁σ₂⁻¹ dies in homology but not in Σ₃.
    assert!(check.in_abelian_kernel(&parse_word("s1 s2^-1").unwrap()));
    assert!(!check.passes(&parse_word("s1 s2^-1").unwrap()));
    let r = &p.relators[0].word;
    let rot = Word::from_letters(r.letters()[1..].iter().chain(&r.letters()[..1]).copied());
    assert!(check.is_relator_rotation(&rot));
}

#[test]
fn expected_abelianization_matches_snf() {
    for fam in [
        Family::BraidClosedOrientableAB,
        Family::BraidClosedOrientableB,
        Family::BraidClosedGM,
        Family::BraidPuncturedOrientable,
        Family::BraidPuncturedSphere,
    ] {
        for n in 1..=3 {
            for g in 0..=2 {
                for p in 0..=2 {
                    let params = fam.params(n, g, p);
                    if fam.validate(&params).is_err() {
                        continue;
                    }
                    let pres = build(fam, n, g, p).unwrap();
                    let inv = abelian_invariants_from_relators(pres.generator_count(), &pres.relation_matrix());
                    assert_eq!(Some(inv), expected_abelianization(fam, &params), "{fam} {n} {g} {p}");
                }
            }
        }
    }
}

#[test]
fn puncture_loop_example() {
    let params = Family::BraidPuncturedOrientable.params(1, 1, 2);
    let w = derived_element(Derived::PunctureLoop, &params).unwrap();
    assert_eq!(w, parse_word("[a1,b1^-1] z1").unwrap());
}
