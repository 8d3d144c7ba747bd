//! The verbs of the `gl2` tool. Each one reads documents, calls into
//! `gl2-core` and either returns the text to print or an error whose type
//! decides the exit status.

use std::path::Path;

use anyhow::{bail, ensure, Context, Result};

use gl2_core::gen;
use gl2_core::group::FiniteGroup;
use gl2_core::groupoid::{action_groupoid, pair_groupoid_n, verify_groupoid};
use gl2_core::lax::verify_lax_transformation;
use gl2_core::linalg::parse_rat;
use gl2_core::nerve::{
    enumerate_brute_force, enumerate_by_filtration, enumerate_coskeletal, fill_horn, validate_horn, validate_simplex,
    Horn,
};
use gl2_core::report::Report;
use gl2_core::ruth::{
    double_pseudo_rep, lax_equivalence_to_morphism, lines_projection_pseudo_rep, morphism_to_lax_equivalence,
    pseudofunctor_to_ruth, ruth_to_pseudofunctor, verify_morphism, verify_pseudofunctor, verify_ruth,
};
use gl2_core::twocat::{delooping, verify_2category};
use gl2_core::{Fin2Cat, Rat};

use crate::format::{
    lift, parse_document, payload, render, AnyLabel, BundleDoc, Document, FunctorDoc, GroupoidDoc, Kind, LabelDoc,
    MorphismDoc, PseudoRepDoc, RuthDoc, Semantic, Transformation, TransformationDoc, TwoCategoryDoc,
};

pub fn read(path: &Path) -> Result<Document> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_document(&text)
}

fn report_lines(report: &Report) -> Vec<String> {
    report.iter().map(|v| v.to_string()).collect()
}

/// Turns a non-empty report into a semantic error listing every violation.
fn settle(report: Report) -> Result<()> {
    if report.is_empty() {
        Ok(())
    } else {
        Err(Semantic(report_lines(&report).join("\n")).into())
    }
}

fn with_prefix(prefix: &str, report: Report) -> Report {
    report
        .into_iter()
        .map(|mut v| {
            v.at = format!("{prefix} {}", v.at);
            v
        })
        .collect()
}

/// Checks a document against the laws of its kind. `expect` pins the kind
/// when given.
pub fn verify(doc: &Document, expect: Option<Kind>) -> Result<()> {
    if let Some(k) = expect {
        ensure!(doc.kind == k, "expected a {k:?} document, found {:?}", doc.kind);
    }
    let report = match doc.kind {
        Kind::Groupoid => verify_groupoid(&payload::<GroupoidDoc>(doc, Kind::Groupoid)?.groupoid()?),
        Kind::Bundle => {
            payload::<BundleDoc>(doc, Kind::Bundle)?.bundle()?;
            Report::new()
        }
        Kind::TwoCategory => verify_2category(&payload::<TwoCategoryDoc>(doc, Kind::TwoCategory)?.category()?),
        Kind::Ruth => verify_ruth(&payload::<RuthDoc>(doc, Kind::Ruth)?.ruth()?),
        Kind::Functor => verify_pseudofunctor(&payload::<FunctorDoc>(doc, Kind::Functor)?.functor()?),
        Kind::PseudoRep => payload::<PseudoRepDoc>(doc, Kind::PseudoRep)?.pseudo_rep()?.verify(),
        Kind::Morphism => {
            let m = payload::<MorphismDoc>(doc, Kind::Morphism)?.morphism()?;
            let mut r = with_prefix("source", verify_ruth(&m.src));
            r.extend(with_prefix("target", verify_ruth(&m.dst)));
            r.extend(verify_morphism(&m));
            r
        }
        Kind::Transformation => {
            let t = payload::<TransformationDoc>(doc, Kind::Transformation)?.transformation()?;
            let mut r = with_prefix("source", verify_pseudofunctor(&t.src));
            r.extend(with_prefix("target", verify_pseudofunctor(&t.dst)));
            if r.is_empty() {
                let (src, phi) = t.src.to_lax();
                let (_, psi) = t.dst.to_lax();
                r = verify_lax_transformation(&src, &t.src.general_linear(), &phi, &psi, &t.h);
            }
            r
        }
        Kind::Simplex => {
            let l = payload::<LabelDoc>(doc, Kind::Simplex)?;
            ensure!(l.k.is_none(), "a simplex has no missing face; use kind horn");
            match l.label()? {
                AnyLabel::Table(c, s) => validate_simplex(&c, &s),
                AnyLabel::Gl(gl, s) => validate_simplex(&gl, &s),
            }
        }
        Kind::Horn => {
            let l = payload::<LabelDoc>(doc, Kind::Horn)?;
            let Some(k) = l.k else { bail!("a horn needs k") };
            match l.label()? {
                AnyLabel::Table(c, s) => validate_horn(&c, &Horn::new(k, s)?),
                AnyLabel::Gl(gl, s) => validate_horn(&gl, &Horn::new(k, s)?),
            }
        }
    };
    settle(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Direction {
    RuthToFunctor,
    FunctorToRuth,
    MorphismToLax,
    LaxToMorphism,
}

/// Converts along the correspondence between representations up to
/// homotopy and pseudo-functors into `GL(V)`. The input is verified first.
pub fn convert(doc: &Document, dir: Direction) -> Result<String> {
    match dir {
        Direction::RuthToFunctor => {
            verify(doc, Some(Kind::Ruth))?;
            let r = payload::<RuthDoc>(doc, Kind::Ruth)?.ruth()?;
            let p = ruth_to_pseudofunctor(&r).map_err(lift)?;
            Ok(render(Kind::Functor, &FunctorDoc::of(&p)))
        }
        Direction::FunctorToRuth => {
            verify(doc, Some(Kind::Functor))?;
            let p = payload::<FunctorDoc>(doc, Kind::Functor)?.functor()?;
            let r = pseudofunctor_to_ruth(&p).map_err(lift)?;
            Ok(render(Kind::Ruth, &RuthDoc::of(&r)))
        }
        Direction::MorphismToLax => {
            verify(doc, Some(Kind::Morphism))?;
            let m = payload::<MorphismDoc>(doc, Kind::Morphism)?.morphism()?;
            let h = morphism_to_lax_equivalence(&m).map_err(lift)?;
            let src = ruth_to_pseudofunctor(&m.src).map_err(lift)?;
            let dst = ruth_to_pseudofunctor(&m.dst).map_err(lift)?;
            Ok(render(Kind::Transformation, &TransformationDoc::of(&Transformation { src, dst, h })))
        }
        Direction::LaxToMorphism => {
            verify(doc, Some(Kind::Transformation))?;
            let t = payload::<TransformationDoc>(doc, Kind::Transformation)?.transformation()?;
            let src = pseudofunctor_to_ruth(&t.src).map_err(lift)?;
            let dst = pseudofunctor_to_ruth(&t.dst).map_err(lift)?;
            let m = lax_equivalence_to_morphism(&src, &dst, &t.h).map_err(lift)?;
            Ok(render(Kind::Morphism, &MorphismDoc::of(&m)))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum HandleKind {
    Gl,
    Table,
}

/// Fills a horn document, returning the simplex document.
pub fn fill(doc: &Document, handle: HandleKind) -> Result<String> {
    verify(doc, Some(Kind::Horn))?;
    let l = payload::<LabelDoc>(doc, Kind::Horn)?;
    let k = l.k.expect("checked by verify");
    let out = match (l.label()?, handle) {
        (AnyLabel::Table(c, s), HandleKind::Table) => {
            let f = fill_horn(&c, &Horn::new(k, s)?).map_err(lift)?;
            LabelDoc::of_table(&c, &f, None)
        }
        (AnyLabel::Gl(gl, s), HandleKind::Gl) => {
            let f = fill_horn(&gl, &Horn::new(k, s)?).map_err(lift)?;
            LabelDoc::of_gl(&gl, &f, None)
        }
        _ => bail!("the horn does not live in the requested handle"),
    };
    Ok(render(Kind::Simplex, &out))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Example {
    /// The pair groupoid on `n` points.
    Pair,
    /// A finite group acting on itself by left multiplication.
    Action,
    /// The delooping 2-groupoid of an abelian group.
    Delooping,
    /// Orthogonal projection between rational lines.
    LinesProjection,
    /// The acyclic representation obtained by doubling the lines example.
    Doubling,
    /// A seeded random representation up to homotopy over the pair groupoid.
    RandomRuth,
}

#[derive(Clone, Debug)]
pub struct Params {
    pub n: usize,
    pub group: String,
    pub lines: String,
    pub seed: u64,
}

impl Default for Params {
    fn default() -> Self {
        Params { n: 2, group: "cyclic".into(), lines: "1,0;1,1;2,1".into(), seed: 0 }
    }
}

/// `cyclic`, `symmetric`, `dihedral` (all of parameter `n`) or `quaternion`.
pub fn parse_group(name: &str, n: usize) -> Result<FiniteGroup> {
    Ok(match name {
        "cyclic" => FiniteGroup::cyclic(n.max(1)),
        "symmetric" => FiniteGroup::symmetric(n.max(1)),
        "dihedral" => {
            ensure!(n >= 1, "the dihedral group needs n >= 1");
            FiniteGroup::dihedral(n)
        }
        "quaternion" => FiniteGroup::quaternion(),
        _ => bail!("unknown group {name:?}; expected cyclic, symmetric, dihedral or quaternion"),
    })
}

/// Parses `"1,0;1,1;2,1"` into one rational vector per line.
pub fn parse_lines(s: &str) -> Result<Vec<Vec<Rat>>> {
    s.split(';')
        .map(|line| {
            line.split(',').map(|x| parse_rat(x.trim()).with_context(|| format!("bad coordinate {x:?}"))).collect()
        })
        .collect()
}

pub fn generate(example: Example, p: &Params) -> Result<String> {
    Ok(match example {
        Example::Pair => render(Kind::Groupoid, &GroupoidDoc::of(&pair_groupoid_n(p.n))),
        Example::Action => {
            let g = parse_group(&p.group, p.n)?;
            let set: Vec<String> = (0..g.order()).map(|x| format!("e{x}")).collect();
            let act: Vec<Vec<usize>> = (0..g.order()).map(|a| (0..g.order()).map(|x| g.mul(a, x)).collect()).collect();
            render(Kind::Groupoid, &GroupoidDoc::of(&action_groupoid(&g, &set, &act).map_err(lift)?))
        }
        Example::Delooping => {
            let g = parse_group(&p.group, p.n)?;
            let d = delooping(&g).map_err(lift)?;
            render(Kind::TwoCategory, &TwoCategoryDoc::of(d.cat()))
        }
        Example::LinesProjection => {
            let rep = lines_projection_pseudo_rep(&parse_lines(&p.lines)?).map_err(lift)?;
            render(Kind::PseudoRep, &PseudoRepDoc::of(&rep))
        }
        Example::Doubling => {
            let rep = lines_projection_pseudo_rep(&parse_lines(&p.lines)?).map_err(lift)?;
            render(Kind::Ruth, &RuthDoc::of(&double_pseudo_rep(&rep).map_err(lift)?))
        }
        Example::RandomRuth => {
            let mut rng = gen::rng(p.seed);
            let r = gen::ruth(&mut rng, &pair_groupoid_n(p.n), 2, 2);
            render(Kind::Ruth, &RuthDoc::of(&r))
        }
    })
}

/// Counts `N_mC` for `m ≤ level` three ways: by brute force, from `N_3C`
/// alone, and through the filtration. A disagreement is a semantic failure.
pub fn nerve(doc: &Document, level: usize) -> Result<String> {
    let c: Fin2Cat = payload::<TwoCategoryDoc>(doc, Kind::TwoCategory)?.category()?;
    settle(verify_2category(&c))?;
    let mut out = String::new();
    let mut bad = Vec::new();
    for m in 0..=level {
        let brute = enumerate_brute_force(&c, m).len();
        let cosk = enumerate_coskeletal(&c, m).len();
        let filt = enumerate_by_filtration(&c, m).map_err(lift)?.len();
        out.push_str(&format!("level {m}: brute {brute}, coskeletal {cosk}, filtration {filt}\n"));
        if brute != cosk || brute != filt {
            bad.push(format!("nerve counts disagree fails at level {m}"));
        }
    }
    if !bad.is_empty() {
        out.push_str(&bad.join("\n"));
        return Err(Semantic(out).into());
    }
    Ok(out)
}
