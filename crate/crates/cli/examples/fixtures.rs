//! Regenerates the document corpus under `tests/fixtures`.
//!
//!     cargo run -p gl2-cli --example fixtures
//!
//! Files in `valid/` must verify; each file in `invalid/` breaks exactly one
//! law, listed in `invalid/EXPECTED`; files in `malformed/` must not parse.

use std::fs;
use std::path::Path;

use gl2_cli::commands::{generate, parse_lines, Example, Params};
use gl2_cli::format::{
    render, BundleDoc, FunctorDoc, Kind, LabelDoc, MorphismDoc, RuthDoc, Transformation, TransformationDoc,
    TwoCategoryDoc,
};
use gl2_core::gen;
use gl2_core::group::FiniteGroup;
use gl2_core::groupoid::{cyclic_translation_groupoid, pair_groupoid_n};
use gl2_core::lax::nerve_image;
use gl2_core::nerve::{enumerate_brute_force, Horn, SimplexLabel};
use gl2_core::ruth::{
    double_pseudo_rep, lines_projection_pseudo_rep, morphism_to_lax_equivalence, ruth_to_pseudofunctor,
    ruth_to_pseudofunctor_unchecked, RuthMorphism,
};
use gl2_core::twocat::{delooping, delooping_unchecked};
use gl2_core::{Fin2Cat, GLArrow, GLObject, GeneralLinear, GradedBundle, RatMatrix};

fn write(dir: &Path, name: &str, text: &str) {
    fs::write(dir.join(name), text).unwrap();
}

fn main() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let (valid, invalid, malformed) = (root.join("valid"), root.join("invalid"), root.join("malformed"));
    for d in [&valid, &invalid, &malformed] {
        fs::create_dir_all(d).unwrap();
    }
    let p = |n: usize, group: &str| Params { n, group: group.into(), ..Params::default() };

    write(&valid, "pair4.json", &generate(Example::Pair, &p(4, "cyclic")).unwrap());
    write(&valid, "action_dihedral3.json", &generate(Example::Action, &p(3, "dihedral")).unwrap());
    write(&valid, "delooping_z2.json", &generate(Example::Delooping, &p(2, "cyclic")).unwrap());
    write(&valid, "delooping_z3.json", &generate(Example::Delooping, &p(3, "cyclic")).unwrap());
    write(&valid, "lines.json", &generate(Example::LinesProjection, &Params::default()).unwrap());
    write(&valid, "doubling.json", &generate(Example::Doubling, &Params::default()).unwrap());
    write(
        &valid,
        "random_ruth.json",
        &generate(Example::RandomRuth, &Params { n: 3, seed: 11, ..Params::default() }).unwrap(),
    );

    let mut rng = gen::rng(2024);
    let bundle = GradedBundle::uniform(vec!["a".into(), "b".into()], 2, 2);
    write(&valid, "bundle.json", &render(Kind::Bundle, &BundleDoc::of(&bundle)));

    // A representation over the translation groupoid, its functor, and a
    // quasi-isomorphism out of it.
    let r = gen::ruth(&mut rng, &cyclic_translation_groupoid(3), 2, 2);
    write(&valid, "translation_ruth.json", &render(Kind::Ruth, &RuthDoc::of(&r)));
    let f = ruth_to_pseudofunctor(&r).unwrap();
    write(&valid, "translation_functor.json", &render(Kind::Functor, &FunctorDoc::of(&f)));
    let m = gen::quasi_iso_morphism(&mut rng, &r);
    write(&valid, "gauge_morphism.json", &render(Kind::Morphism, &MorphismDoc::of(&m)));
    let h = morphism_to_lax_equivalence(&m).unwrap();
    let t = Transformation { src: f.clone(), dst: ruth_to_pseudofunctor(&m.dst).unwrap(), h };
    write(&valid, "gauge_transformation.json", &render(Kind::Transformation, &TransformationDoc::of(&t)));

    // Horns in a delooping.
    let z3 = delooping(&FiniteGroup::cyclic(3)).unwrap();
    let c: &Fin2Cat = z3.cat();
    let s2 = enumerate_brute_force(c, 2).into_iter().nth(1).unwrap();
    let horn21 = Horn::restrict(&s2, 1);
    write(&valid, "horn_table_2_1.json", &render(Kind::Horn, &LabelDoc::of_table(c, horn21.label(), Some(1))));
    let s4 = enumerate_brute_force(c, 4).into_iter().nth(17).unwrap();
    write(&valid, "simplex_table_4.json", &render(Kind::Simplex, &LabelDoc::of_table(c, &s4, None)));
    for k in [0, 2, 4] {
        let h = Horn::restrict(&s4, k);
        write(
            &valid,
            &format!("horn_table_4_{k}.json"),
            &render(Kind::Horn, &LabelDoc::of_table(c, h.label(), Some(k))),
        );
    }

    // A (2,0)-horn in GL(V) and the 3-simplex a pseudo-functor assigns to a
    // chain of three arrows.
    let pts: Vec<String> = (0..3).map(|i| format!("p{i}")).collect();
    let x = gen::fiber(&mut rng, 2, 1);
    let f01 = gen::quasi_iso_at(&mut rng, &x, 3, false);
    let f02 = gen::quasi_iso_at(&mut rng, &x, 3, false);
    let dims = vec![(x.dim1(), x.dim0()), (f01.dst().dim1(), f01.dst().dim0()), (f02.dst().dim1(), f02.dst().dim0())];
    let gl = GeneralLinear::new(GradedBundle::new(pts, dims).unwrap());
    let mut h20 = SimplexLabel::empty(2);
    h20.set_vertex(0, Some(GLObject::new(0, x.clone())));
    h20.set_vertex(1, Some(GLObject::new(1, f01.dst().clone())));
    h20.set_vertex(2, Some(GLObject::new(2, f02.dst().clone())));
    h20.set_edge(1, 0, Some(GLArrow::from_map(0, 1, f01).unwrap()));
    h20.set_edge(2, 0, Some(GLArrow::from_map(0, 2, f02).unwrap()));
    write(&valid, "horn_gl_2_0.json", &render(Kind::Horn, &LabelDoc::of_gl(&gl, &h20, Some(0))));

    let rp = gen::ruth(&mut rng, &pair_groupoid_n(4), 2, 2);
    let pf = ruth_to_pseudofunctor(&rp).unwrap();
    let (src, phi) = pf.to_lax();
    let s3 = enumerate_brute_force(&src, 3).into_iter().find(|s| (0..4).all(|i| s.vertex(i) == Some(&i))).unwrap();
    let img = nerve_image(&pf.general_linear(), &phi, &s3).unwrap();
    write(&valid, "simplex_gl_3.json", &render(Kind::Simplex, &LabelDoc::of_gl(&pf.general_linear(), &img, None)));
    let h31 = Horn::restrict(&img, 1);
    write(
        &valid,
        "horn_gl_3_1.json",
        &render(Kind::Horn, &LabelDoc::of_gl(&pf.general_linear(), h31.label(), Some(1))),
    );

    // Documented perturbations.
    let mut expected = String::new();
    let mut note = |file: &str, law: &str| expected.push_str(&format!("{file}\t{law}\n"));

    let (bad, _) = std::iter::repeat_with(|| {
        let r = gen::ruth(&mut rng, &cyclic_translation_groupoid(3), 2, 2);
        gen::perturb_gamma(&mut rng, &r)
    })
    .flatten()
    .next()
    .unwrap();
    write(&invalid, "ruth_perturbed_gamma.json", &render(Kind::Ruth, &RuthDoc::of(&bad)));
    note("ruth_perturbed_gamma.json", "cocycle equation");
    let bad_f = ruth_to_pseudofunctor_unchecked(&bad).unwrap();
    write(&invalid, "functor_perturbed_cell.json", &render(Kind::Functor, &FunctorDoc::of(&bad_f)));
    note("functor_perturbed_cell.json", "coherence axiom");

    // The doubling has ∂ = id, so a unit bump in ρ₁ or μ cannot be absorbed.
    let lines = lines_projection_pseudo_rep(&parse_lines(&Params::default().lines).unwrap()).unwrap();
    let dbl = double_pseudo_rep(&lines).unwrap();
    let a = (0..dbl.g.arrow_count()).find(|&a| !dbl.g.is_unit(a)).unwrap();
    let bump = RatMatrix::identity(1);

    let mut bad_m = RuthMorphism::identity(&dbl);
    bad_m.mu[a] = &bad_m.mu[a] + &bump;
    write(&invalid, "morphism_perturbed_mu.json", &render(Kind::Morphism, &MorphismDoc::of(&bad_m)));
    note("morphism_perturbed_mu.json", "morphism equation (degree 1)");

    let mut bad_r = dbl.clone();
    bad_r.rho1[a] = &bad_r.rho1[a] + &bump;
    write(&invalid, "ruth_perturbed_rho.json", &render(Kind::Ruth, &RuthDoc::of(&bad_r)));
    note("ruth_perturbed_rho.json", "chain condition");

    let mut bad_s = s4.clone();
    let t = *bad_s.triangle(3, 1, 0).unwrap();
    let u = (0..c.cell_count()).find(|&u| u != t && c.cell_ends(u) == c.cell_ends(t)).unwrap();
    bad_s.set_triangle(3, 1, 0, Some(u));
    write(&invalid, "simplex_table_bad_triangle.json", &render(Kind::Simplex, &LabelDoc::of_table(c, &bad_s, None)));
    note("simplex_table_bad_triangle.json", "tetrahedron equation");

    let bad_c = delooping_unchecked(&FiniteGroup::symmetric(3));
    write(&invalid, "delooping_s3.json", &render(Kind::TwoCategory, &TwoCategoryDoc::of(bad_c.cat())));
    note("delooping_s3.json", "interchange law");

    write(&invalid, "EXPECTED", &expected);

    let doubling = generate(Example::Doubling, &Params::default()).unwrap();
    write(&malformed, "unknown_field.json", &doubling.replacen("\"payload\"", "\"extra\": 1,\n  \"payload\"", 1));
    write(&malformed, "wrong_version.json", &doubling.replacen("\"version\": \"1\"", "\"version\": \"9\"", 1));
    write(&malformed, "truncated.json", &doubling[..doubling.len() / 2]);
    let at = doubling.find("\"entries\"").unwrap();
    let bad = format!("{}{}", &doubling[..at], doubling[at..].replacen("\"1\"", "\"1/0\"", 1));
    write(&malformed, "bad_rational.json", &bad);
    write(&malformed, "wrong_shape.json", &doubling.replacen("\"rows\": 1", "\"rows\": 2", 1));
}
