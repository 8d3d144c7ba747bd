//! The acceptance suite: nine end-to-end criteria, each printed as one
//! PASS/FAIL line. Runs without the libtest harness so the lines always show.

use std::collections::BTreeMap;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::Rng;

use gl2_core::chain::{cone, induced_homology_maps, is_quasi_iso};
use gl2_core::gen::{self, Rng8};
use gl2_core::gl::{compose_arrows, fill_horn20, fill_horn22, hcompose, quasi_inverse, vcompose};
use gl2_core::group::FiniteGroup;
use gl2_core::groupoid::{cyclic_translation_groupoid, pair_groupoid_n};
use gl2_core::lax::{
    homotopy_to_lax_transformation, identity_functor, identity_transformation, lax_to_simplicial,
    lax_transformation_to_homotopy, simplicial_to_lax, verify_homotopy, verify_lax_functor, verify_lax_transformation,
    verify_simplicial_map, Lax,
};
use gl2_core::linalg::{rat, ratio};
use gl2_core::nerve::{
    cube_faces, enumerate_brute_force, fill_horn, rebuild_through_filtration, reconstruct_filtration,
    strip_to_filtration, validate_simplex, Horn, Label,
};
use gl2_core::ruth::{
    double_pseudo_rep, is_acyclic, lax_equivalence_to_morphism, lines_projection_pseudo_rep,
    morphism_to_lax_equivalence, pseudofunctor_to_ruth, ruth_to_pseudofunctor, ruth_to_pseudofunctor_unchecked,
    verify_morphism, verify_pseudofunctor, verify_ruth, PseudoRep, Ruth2,
};
use gl2_core::twocat::{delooping, Fin2Groupoid};
use gl2_core::{ChainMap2, Fin2Cat, GL2Cell, GLArrow, GeneralLinear, RatMatrix, TwoCategory};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `R ∂ˣ = α₁ − α′₁` and `∂ʸ R = α₀ − α′₀`, recomputed from the matrices.
fn homotopy_holds(from: &GLArrow, to: &GLArrow, r: &RatMatrix) -> bool {
    let (dx, dy) = (from.src().fiber.d().clone(), from.dst().fiber.d().clone());
    from.src() == to.src()
        && from.dst() == to.dst()
        && r * &dx == from.a1() - to.a1()
        && &dy * r == from.a0() - to.a0()
}

fn cell_holds(c: &GL2Cell) -> bool {
    homotopy_holds(c.from(), c.to(), c.r())
}

/// An invertible square matrix: full rank, computed by elimination.
fn invertible(m: &RatMatrix) -> bool {
    m.rows() == m.cols() && m.rank() == m.rows()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut rng = gen::rng(101);
    let (mut total, mut positives) = (0, 0);
    for i in 0..1200 {
        let m: ChainMap2 = if i % 2 == 0 { gen::any_chain_map(&mut rng, 4) } else { gen::quasi_iso(&mut rng, 4) };
        let dims = [m.src().dim1(), m.src().dim0(), m.dst().dim1(), m.dst().dim0()];
        check(dims.iter().all(|&d| d <= 4), || format!("dims {dims:?} exceed 4"))?;
        let criterion = is_quasi_iso(&m);
        let (h1, h0) = induced_homology_maps(&m);
        let homology = invertible(&h1) && invertible(&h0);
        let exact = cone(&m).is_exact();
        check(criterion == homology && criterion == exact, || {
            format!("disagreement on map {i}: criterion {criterion}, homology {homology}, cone {exact}")
        })?;
        total += 1;
        positives += usize::from(criterion);
    }
    let t = start.elapsed();
    check(t < Duration::from_secs(30), || format!("took {t:?}"))?;
    check(positives > 100 && total - positives > 100, || format!("unbalanced sample: {positives}/{total}"))?;
    Ok(format!("{total} chain maps ({positives} quasi-isomorphisms), 0 disagreements, {:.1}s", t.as_secs_f64()))
}

/// A random arrow out of `f`'s target, at point `p`.
fn arrow_after(rng: &mut Rng8, f: &GLArrow, p: usize) -> GLArrow {
    GLArrow::from_map(f.dst_point(), p, gen::quasi_iso_at(rng, &f.dst().fiber, 3, false)).unwrap()
}

fn criterion_2() -> Outcome {
    let mut rng = gen::rng(202);
    let n = 1000;
    for i in 0..n {
        let f = gen::gl_arrow(&mut rng, 0, 1, 3);
        let r = gen::gl_cell_from(&mut rng, &f);
        let r2 = gen::gl_cell_from(&mut rng, r.to());
        let g = arrow_after(&mut rng, &f, 2);
        let s = gen::gl_cell_from(&mut rng, &g);
        let s2 = gen::gl_cell_from(&mut rng, s.to());
        let lhs = hcompose(&vcompose(&s2, &s).unwrap(), &vcompose(&r2, &r).unwrap()).unwrap();
        let rhs = vcompose(&hcompose(&s2, &r2).unwrap(), &hcompose(&s, &r).unwrap()).unwrap();
        check(lhs == rhs, || format!("interchange fails on square {i}"))?;
        check(cell_holds(&lhs), || format!("composite on square {i} is not a homotopy"))?;
    }
    Ok(format!("{n} squares, 0 failures"))
}

fn criterion_3() -> Outcome {
    let mut rng = gen::rng(303);
    let n = 500;
    for i in 0..n {
        let f = gen::gl_arrow(&mut rng, 0, 1, 3);
        let q = quasi_inverse(&f).map_err(|e| format!("arrow {i}: {e}"))?;
        let g = &q.inverse;
        check(g.src() == f.dst() && g.dst() == f.src() && is_quasi_iso(g.map()), || format!("arrow {i}: inverse"))?;
        check(*q.unit.from() == GLArrow::identity(&f.src()) && *q.unit.to() == compose_arrows(g, &f).unwrap(), || {
            format!("arrow {i}: unit endpoints")
        })?;
        check(
            *q.counit.from() == GLArrow::identity(&f.dst()) && *q.counit.to() == compose_arrows(&f, g).unwrap(),
            || format!("arrow {i}: counit endpoints"),
        )?;
        check(cell_holds(&q.unit) && cell_holds(&q.counit), || format!("arrow {i}: homotopy equations"))?;
    }
    for i in 0..n {
        // (2,0): alpha: x -> y and gamma: x -> z.
        let x = gen::any_fiber(&mut rng, 3);
        let alpha = GLArrow::from_map(0, 1, gen::quasi_iso_at(&mut rng, &x, 3, false)).unwrap();
        let gamma = GLArrow::from_map(0, 2, gen::quasi_iso_at(&mut rng, &x, 3, false)).unwrap();
        let (beta, cell) = fill_horn20(&alpha, &gamma).map_err(|e| format!("horn (2,0) {i}: {e}"))?;
        check(beta.src() == alpha.dst() && beta.dst() == gamma.dst() && is_quasi_iso(beta.map()), || {
            format!("horn (2,0) {i}: beta")
        })?;
        check(
            *cell.from() == gamma && *cell.to() == compose_arrows(&beta, &alpha).unwrap() && cell_holds(&cell),
            || format!("horn (2,0) {i}: cell"),
        )?;
        // (2,2): beta: y -> z and gamma: x -> z.
        let z = gen::any_fiber(&mut rng, 3);
        let beta = GLArrow::from_map(1, 2, gen::quasi_iso_at(&mut rng, &z, 3, true)).unwrap();
        let gamma = GLArrow::from_map(0, 2, gen::quasi_iso_at(&mut rng, &z, 3, true)).unwrap();
        let (alpha, cell) = fill_horn22(&gamma, &beta).map_err(|e| format!("horn (2,2) {i}: {e}"))?;
        check(alpha.src() == gamma.src() && alpha.dst() == beta.src() && is_quasi_iso(alpha.map()), || {
            format!("horn (2,2) {i}: alpha")
        })?;
        check(
            *cell.from() == gamma && *cell.to() == compose_arrows(&beta, &alpha).unwrap() && cell_holds(&cell),
            || format!("horn (2,2) {i}: cell"),
        )?;
    }
    Ok(format!("{n} quasi-inverses, {n} (2,0)-horns, {n} (2,2)-horns, 0 failures"))
}

/// Labels that agree with `s` except at one triangle, which is replaced by
/// another cell with the same endpoints.
fn triangle_variants(c: &Fin2Cat, s: &Label<Fin2Cat>, only: Option<(usize, usize, usize)>) -> Vec<Label<Fin2Cat>> {
    let mut out = Vec::new();
    for (k, j, i) in s.triangle_indices() {
        if only.is_some_and(|t| t != (k, j, i)) {
            continue;
        }
        let t = *s.triangle(k, j, i).unwrap();
        for u in 0..c.cell_count() {
            if u != t && c.cell_ends(u) == c.cell_ends(t) {
                let mut v = s.clone();
                v.set_triangle(k, j, i, Some(u));
                out.push(v);
            }
        }
    }
    out
}

/// The triangle of `Δ³` missing from `Λ³ₖ`.
fn missing_face(k: usize) -> (usize, usize, usize) {
    [(3, 2, 1), (3, 2, 0), (3, 1, 0), (2, 1, 0)][k]
}

fn fills_back<T: TwoCategory>(c: &T, s: &Label<T>, k: usize) -> Result<Label<T>, String> {
    let f = fill_horn(c, &Horn::restrict(s, k)).map_err(|e| format!("Λ^{}_{k}: {e}", s.dim()))?;
    check(validate_simplex(c, &f).is_empty(), || format!("Λ^{}_{k}: filler invalid", s.dim()))?;
    Ok(f)
}

fn criterion_4() -> Outcome {
    let mut rng = gen::rng(404);
    let (mut horns, mut cubes, mut alternatives) = (0, 0, 0);
    let mut cube_check = |faces: gl2_core::nerve::CubeFaces, what: &str| -> Result<(), String> {
        cubes += 1;
        check(faces.failing() != 1, || format!("{what}: exactly one cube face fails"))
    };
    for n in 1..=6 {
        let z = delooping(&FiniteGroup::cyclic(n)).unwrap();
        let c = z.cat();
        for s in enumerate_brute_force(c, 3) {
            for k in 0..=3 {
                let f = fills_back(&z, &s, k)?;
                check(f == s, || format!("ℤ/{n}: Λ³_{k} filler differs from the simplex"))?;
                for v in triangle_variants(c, &s, Some(missing_face(k))) {
                    alternatives += 1;
                    check(!validate_simplex(c, &v).is_empty(), || format!("ℤ/{n}: second filler for Λ³_{k}"))?;
                }
                horns += 1;
            }
        }
        for _ in 0..12 {
            let s = gen::table_simplex(&mut rng, &z, 4);
            for k in 0..=4 {
                let f = fills_back(&z, &s, k)?;
                check(f == s, || format!("ℤ/{n}: Λ⁴_{k} filler differs from the simplex"))?;
                // Every triangle of Δ⁴ lies in Λ⁴ₖ, so changing any of them
                // changes the horn; no other label extends it.
                let horn = Horn::restrict(&s, k);
                for v in triangle_variants(c, &s, None) {
                    alternatives += 1;
                    let same_horn = Horn::restrict(&v, k) == horn;
                    check(!(same_horn && validate_simplex(c, &v).is_empty()), || {
                        format!("ℤ/{n}: second filler for Λ⁴_{k}")
                    })?;
                }
                horns += 1;
            }
            cube_check(cube_faces(&z, &s).map_err(|e| e.to_string())?, "valid table cube")?;
            for v in triangle_variants(c, &s, None).into_iter().take(8) {
                cube_check(cube_faces(c, &v).map_err(|e| e.to_string())?, "perturbed table cube")?;
            }
        }
    }
    for _ in 0..40 {
        let (gl, s3) = gen::gl_simplex(&mut rng, 3, 3);
        for k in 0..=3 {
            let f = fills_back(&gl, &s3, k)?;
            if k == 1 || k == 2 {
                check(f == s3, || format!("GL: inner Λ³_{k} filler differs from the simplex"))?;
            }
            horns += 1;
        }
        let (gl, s4) = gen::gl_simplex(&mut rng, 4, 3);
        for k in 0..=4 {
            let f = fills_back(&gl, &s4, k)?;
            check(f == s4, || format!("GL: Λ⁴_{k} filler differs from the simplex"))?;
            horns += 1;
        }
        cube_check(cube_faces(&gl, &s4).map_err(|e| e.to_string())?, "valid GL cube")?;
        if let Some(v) = perturb_gl_triangle(&mut rng, &s4) {
            cube_check(cube_faces(&gl, &v).map_err(|e| e.to_string())?, "perturbed GL cube")?;
        }
    }
    check(cubes >= 200, || format!("only {cubes} cubes"))?;
    Ok(format!("{horns} horns filled and validated, {alternatives} alternative fillers rejected, {cubes} cubes"))
}

/// Moves one triangle by `K c Lᵀ` with `K` spanning `ker ∂` of its target
/// and `L` spanning `(im ∂)^⊥` of its source, keeping both endpoints.
fn perturb_gl_triangle(rng: &mut Rng8, s: &Label<GeneralLinear>) -> Option<Label<GeneralLinear>> {
    let mut idx = s.triangle_indices();
    while !idx.is_empty() {
        let (k, j, i) = idx.swap_remove(rng.gen_range(0..idx.len()));
        let t = s.triangle(k, j, i).unwrap();
        let kz = t.from().dst().fiber.d().kernel_basis();
        let lx = t.from().src().fiber.d().transpose().kernel_basis();
        if kz.cols() == 0 || lx.cols() == 0 {
            continue;
        }
        let mut c = RatMatrix::zeros(kz.cols(), lx.cols());
        c.set(0, 0, rat(1));
        let r = t.r() + &(&(&kz * &c) * &lx.transpose());
        let moved = GL2Cell::new(t.from().clone(), t.to().clone(), r).ok()?;
        let mut v = s.clone();
        v.set_triangle(k, j, i, Some(moved));
        return Some(v);
    }
    None
}

fn filtration_round_trips<T: TwoCategory>(c: &T, s: &Label<T>) -> Result<usize, String> {
    let n = s.dim();
    let mut stages = 0;
    for k in 0..n {
        let from = strip_to_filtration(s, k + 1);
        let alpha =
            if k + 1 == n { c.id_cell(s.edge(n, k).unwrap()) } else { s.triangle(n, k + 1, k).unwrap().clone() };
        let got = reconstruct_filtration(c, &from, &alpha).map_err(|e| format!("stage {k} of [{n}]: {e}"))?;
        check(got == strip_to_filtration(s, k), || format!("stage {k} of [{n}] differs"))?;
        stages += 1;
    }
    let whole = rebuild_through_filtration(c, s).map_err(|e| e.to_string())?;
    check(whole == *s, || format!("rebuilding [{n}] differs"))?;
    Ok(stages)
}

fn criterion_5() -> Outcome {
    let mut rng = gen::rng(505);
    let (mut simplices, mut stages) = (0, 0);
    let targets: Vec<Fin2Groupoid> = (2..=5)
        .map(|n| delooping(&FiniteGroup::cyclic(n)).unwrap())
        .chain([
            Fin2Groupoid::from_groupoid(&pair_groupoid_n(3)),
            Fin2Groupoid::from_groupoid(&cyclic_translation_groupoid(3)),
        ])
        .collect();
    for n in 1..=4 {
        for t in &targets {
            for _ in 0..6 {
                stages += filtration_round_trips(t, &gen::table_simplex(&mut rng, t, n))?;
                simplices += 1;
            }
        }
        for _ in 0..20 {
            let (gl, s) = gen::gl_simplex(&mut rng, n, 3);
            stages += filtration_round_trips(&gl, &s)?;
            simplices += 1;
        }
    }
    check(simplices >= 200, || format!("only {simplices} simplices"))?;
    Ok(format!("{simplices} simplices, {stages} stages, all bit-exact"))
}

fn criterion_6() -> Outcome {
    let mut rng = gen::rng(606);
    let groupoids = [pair_groupoid_n(3), cyclic_translation_groupoid(3)];
    let mut valid = 0;
    for round in 0..110 {
        for g in &groupoids {
            let r: Ruth2 = gen::ruth(&mut rng, g, 2, 2);
            check(verify_ruth(&r).is_empty(), || format!("instance {round}: generator produced an invalid RUTH"))?;
            let p = ruth_to_pseudofunctor(&r).map_err(|e| e.to_string())?;
            check(verify_pseudofunctor(&p).is_empty(), || format!("instance {round}: functor fails"))?;
            check(pseudofunctor_to_ruth(&p).unwrap() == r, || format!("instance {round}: ruth round trip"))?;
            check(ruth_to_pseudofunctor(&pseudofunctor_to_ruth(&p).unwrap()).unwrap() == p, || {
                format!("instance {round}: functor round trip")
            })?;
            let m = gen::quasi_iso_morphism(&mut rng, &r);
            check(verify_morphism(&m).is_empty(), || format!("instance {round}: morphism fails"))?;
            let h = morphism_to_lax_equivalence(&m).map_err(|e| e.to_string())?;
            let (src, phi) = p.to_lax();
            let (_, psi) = ruth_to_pseudofunctor(&m.dst).unwrap().to_lax();
            check(verify_lax_transformation(&src, &p.general_linear(), &phi, &psi, &h).is_empty(), || {
                format!("instance {round}: lax equivalence fails")
            })?;
            let back = lax_equivalence_to_morphism(&m.src, &m.dst, &h).map_err(|e| e.to_string())?;
            check(back == m, || format!("instance {round}: morphism round trip"))?;
            check(morphism_to_lax_equivalence(&back).unwrap() == h, || format!("instance {round}: lax round trip"))?;
            valid += 1;
        }
    }
    let mut perturbed = 0;
    let mut entries = 0;
    while perturbed < 200 {
        let g = &groupoids[perturbed % 2];
        let r = gen::ruth(&mut rng, g, 2, 2);
        let Some((bad, _)) = gen::perturb_gamma(&mut rng, &r) else { continue };
        let cocycle = verify_ruth(&bad);
        let coherence = verify_pseudofunctor(&ruth_to_pseudofunctor_unchecked(&bad).map_err(|e| e.to_string())?);
        check(!cocycle.is_empty(), || format!("perturbation {perturbed} went unnoticed"))?;
        check(cocycle.iter().all(|v| v.law == "cocycle equation"), || {
            format!("perturbation {perturbed}: {cocycle:?}")
        })?;
        check(coherence.iter().all(|v| v.law == "coherence axiom"), || {
            format!("perturbation {perturbed}: {coherence:?}")
        })?;
        let at = |rep: &[gl2_core::report::Violation]| rep.iter().map(|v| v.at.clone()).collect::<Vec<_>>();
        check(at(&cocycle) == at(&coherence), || format!("perturbation {perturbed}: reports differ"))?;
        entries += cocycle.len();
        perturbed += 1;
    }
    Ok(format!("{valid} valid instances round-trip, {perturbed} perturbed instances agree on {entries} entries"))
}

fn criterion_7() -> Outcome {
    let line_sets: [&[&[i64]]; 3] = [
        &[&[1, 0], &[1, 1], &[2, 1]],
        &[&[1, 0, 0], &[1, 1, 0], &[1, 1, 1], &[2, 1, 3]],
        &[&[3, 1], &[1, 2], &[1, 0], &[5, -1], &[2, 7]],
    ];
    let doubled_ok = |p: &PseudoRep, what: &str| -> Result<(), String> {
        let d = double_pseudo_rep(p).map_err(|e| format!("{what}: {e}"))?;
        check(verify_ruth(&d).is_empty(), || format!("{what}: {:?}", verify_ruth(&d)))?;
        check(is_acyclic(&d), || format!("{what}: not acyclic"))?;
        // γ^{h,g} = ρ^{hg} − ρʰρᵍ recomputed from the pseudo-representation.
        for (&(h, g), gamma) in &d.gamma {
            let expect = &p.rho[p.g.compose(h, g)] - &(&p.rho[h] * &p.rho[g]);
            check(*gamma == expect, || format!("{what}: γ at ({h},{g})"))?;
        }
        Ok(())
    };
    for lines in line_sets {
        let v: Vec<Vec<_>> = lines.iter().map(|l| l.iter().map(|&x| rat(x)).collect()).collect();
        let p = lines_projection_pseudo_rep(&v).map_err(|e| e.to_string())?;
        check(!p.is_functorial(), || "projection between lines should not be strictly functorial".into())?;
        // Independent value: l0 = span(1,0) onto l1 = span(1,1) is 1/2.
        if lines.len() == 3 && lines[1] == [1, 1] {
            let a = (0..p.g.arrow_count()).find(|&a| p.g.src(a) == 0 && p.g.tgt(a) == 1).unwrap();
            check(p.rho[a] == RatMatrix::scalar(ratio(1, 2)), || format!("projection scalar {:?}", p.rho[a]))?;
        }
        doubled_ok(&p, &format!("lines {lines:?}"))?;
    }
    let mut rng = gen::rng(707);
    let groupoids = [pair_groupoid_n(3), cyclic_translation_groupoid(3), pair_groupoid_n(4)];
    let n = 120;
    for i in 0..n {
        let dim = rng.gen_range(1..=3);
        let p = gen::pseudo_rep(&mut rng, &groupoids[i % 3], dim);
        doubled_ok(&p, &format!("random pseudo-representation {i}"))?;
    }
    Ok(format!(
        "{} line configurations and {n} random pseudo-representations double to valid acyclic RUTHs",
        line_sets.len()
    ))
}

fn lax_round_trip<T: TwoCategory>(src: &Fin2Cat, c: &T, phi: &Lax<T>, what: &str) -> Result<(), String> {
    check(verify_lax_functor(src, c, phi).is_empty(), || format!("{what}: not a lax functor"))?;
    let m = lax_to_simplicial(src, c, phi).map_err(|e| format!("{what}: {e}"))?;
    check(verify_simplicial_map(src, c, &m).is_empty(), || format!("{what}: not simplicial"))?;
    let back = simplicial_to_lax(src, c, &m).map_err(|e| format!("{what}: {e}"))?;
    check(back == *phi, || format!("{what}: lax round trip differs"))?;
    check(lax_to_simplicial(src, c, &back).unwrap() == m, || format!("{what}: simplicial round trip differs"))
}

fn homotopy_round_trip<T: TwoCategory>(
    src: &Fin2Cat,
    c: &T,
    phi: &Lax<T>,
    psi: &Lax<T>,
    h: &gl2_core::lax::LaxTrans<T>,
    what: &str,
) -> Result<(), String> {
    check(verify_lax_transformation(src, c, phi, psi, h).is_empty(), || format!("{what}: not a transformation"))?;
    let hd = lax_transformation_to_homotopy(src, c, phi, h).map_err(|e| format!("{what}: {e}"))?;
    check(verify_homotopy(src, c, phi, psi, &hd).is_empty(), || {
        format!("{what}: {:?}", verify_homotopy(src, c, phi, psi, &hd))
    })?;
    let back = homotopy_to_lax_transformation(src, c, phi, psi, &hd).map_err(|e| format!("{what}: {e}"))?;
    check(back == *h, || format!("{what}: H_f formula does not invert"))?;
    check(lax_transformation_to_homotopy(src, c, phi, &back).unwrap() == hd, || format!("{what}: homotopy round trip"))
}

fn criterion_8() -> Outcome {
    let mut rng = gen::rng(808);
    let mut functors = 0;
    // Table fixtures: identities of small 2-categories, and normal lax
    // functors into deloopings classified by a random coboundary.
    let z2 = delooping(&FiniteGroup::cyclic(2)).unwrap();
    let v4 = delooping(&FiniteGroup::product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2))).unwrap();
    let sources: Vec<Fin2Cat> = vec![
        Fin2Cat::from_groupoid(&pair_groupoid_n(2)),
        Fin2Cat::from_groupoid(&pair_groupoid_n(3)),
        Fin2Cat::from_groupoid(&cyclic_translation_groupoid(3)),
        z2.cat().clone(),
        v4.cat().clone(),
    ];
    for (i, src) in sources.iter().enumerate() {
        lax_round_trip(src, src, &identity_functor(src), &format!("identity of source {i}"))?;
        functors += 1;
        for n in 2..=4 {
            let target = delooping(&FiniteGroup::cyclic(n)).unwrap();
            for _ in 0..3 {
                let phi = gen::lax_into_cyclic(&mut rng, src, &target, n);
                lax_round_trip(src, &target, &phi, &format!("source {i} into ℤ/{n}"))?;
                functors += 1;
                if src.cell_count() == src.arrow_count() {
                    let id = identity_transformation(src, &target, &phi);
                    homotopy_round_trip(src, &target, &phi, &phi, &id, &format!("identity on source {i} into ℤ/{n}"))?;
                }
            }
        }
    }
    // Pseudo-functors into GL(V) and random lax equivalences between them.
    let groupoids = [pair_groupoid_n(3), cyclic_translation_groupoid(3)];
    let n = 110;
    for i in 0..n {
        let r = gen::ruth(&mut rng, &groupoids[i % 2], 2, 2);
        let p = ruth_to_pseudofunctor(&r).unwrap();
        let (src, phi) = p.to_lax();
        let gl = p.general_linear();
        if i % 10 == 0 {
            lax_round_trip(&src, &gl, &phi, &format!("GL functor {i}"))?;
            functors += 1;
        }
        let m = gen::quasi_iso_morphism(&mut rng, &r);
        let (_, psi) = ruth_to_pseudofunctor(&m.dst).unwrap().to_lax();
        let h = morphism_to_lax_equivalence(&m).map_err(|e| e.to_string())?;
        // The target may live over a different bundle; the handle's laws do
        // not look at it.
        homotopy_round_trip(&src, &gl, &phi, &psi, &h, &format!("GL equivalence {i}"))?;
    }
    Ok(format!("{functors} lax functors and {n} lax equivalences round-trip exactly"))
}

fn criterion_9(started: Instant) -> Outcome {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let bin = env!("CARGO_BIN_EXE_gl2");
    let run = |p: &Path| Command::new(bin).arg("verify").arg(p).output().map_err(|e| e.to_string());
    let mut valid = 0;
    let mut files: Vec<_> = std::fs::read_dir(root.join("valid")).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    for f in files {
        let out = run(&f)?;
        check(out.status.code() == Some(0), || format!("{} exits {:?}", f.display(), out.status.code()))?;
        valid += 1;
    }
    let expected = std::fs::read_to_string(root.join("invalid/EXPECTED")).unwrap();
    let mut laws = BTreeMap::new();
    for line in expected.lines() {
        let (file, law) = line.split_once('\t').unwrap();
        let out = run(&root.join("invalid").join(file))?;
        let text = String::from_utf8_lossy(&out.stdout);
        check(out.status.code() == Some(1), || format!("{file} exits {:?}", out.status.code()))?;
        check(text.lines().any(|l| l.starts_with(&format!("{law} fails at "))), || format!("{file}: {text}"))?;
        laws.insert(file.to_string(), law.to_string());
    }
    let t = started.elapsed();
    check(t < Duration::from_secs(120), || format!("suite took {t:?}"))?;
    Ok(format!(
        "{valid} fixtures exit 0, {} perturbations exit 1 naming their law, suite {:.1}s",
        laws.len(),
        t.as_secs_f64()
    ))
}

fn main() -> ExitCode {
    let started = Instant::now();
    let criteria: [Criterion; 9] = [
        ("quasi-isomorphism criterion agrees with homology and cone", Box::new(criterion_1)),
        ("interchange law in GL(V)", Box::new(criterion_2)),
        ("quasi-inverses and outer 2-horn fillers", Box::new(criterion_3)),
        ("nerve horn fillers, uniqueness and cubes", Box::new(criterion_4)),
        ("filtration reconstruction", Box::new(criterion_5)),
        ("representations and pseudo-functors round-trip", Box::new(criterion_6)),
        ("doubling construction", Box::new(criterion_7)),
        ("lax/simplicial and homotopy/transformation dictionary", Box::new(criterion_8)),
        ("command-line contract", Box::new(move || criterion_9(started))),
    ];
    let mut failed = 0;
    let mut out = std::io::stdout().lock();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = t.elapsed().as_secs_f64();
        match result {
            Ok(detail) => writeln!(out, "PASS criterion {}: {name} ({detail}) [{secs:.1}s]", i + 1).unwrap(),
            Err(why) => {
                failed += 1;
                writeln!(out, "FAIL criterion {}: {name}: {why} [{secs:.1}s]", i + 1).unwrap();
            }
        }
        out.flush().unwrap();
    }
    writeln!(out, "acceptance: {} passed, {failed} failed", criteria.len() - failed).unwrap();
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
