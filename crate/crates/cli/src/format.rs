//! The JSON document format. Every file is one `{kind, version, payload}`
//! document; rationals are `"p/q"` strings and everything is keyed by name.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, ensure, Context, Result};
use serde::{de::DeserializeOwned, Deserialize, Serialize};
use serde_json::Value;

use gl2_core::groupoid::GroupoidData;
use gl2_core::lax::LaxTransformation;
use gl2_core::nerve::{Label, SimplexLabel};
use gl2_core::ruth::{PseudoFunctorGL, PseudoRep, Ruth2, RuthMorphism};
use gl2_core::twocat::Fin2CatData;
use gl2_core::{
    Error as CoreError, Fiber2, Fin2Cat, FinGroupoid, GL2Cell, GLArrow, GLObject, GeneralLinear, GradedBundle,
    RatMatrix, TwoCategory,
};

pub const VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Groupoid,
    Bundle,
    Ruth,
    Functor,
    TwoCategory,
    Simplex,
    Horn,
    Morphism,
    Transformation,
    PseudoRep,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub kind: Kind,
    pub version: String,
    pub payload: Value,
}

/// A failure of the mathematics rather than of the file: exit status 1.
#[derive(Debug)]
pub struct Semantic(pub String);

impl std::fmt::Display for Semantic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Semantic {}

/// Core errors about chain conditions, homotopies and quasi-isomorphisms are
/// semantic; the rest (shapes, tables, parsing) are not.
pub fn lift(e: CoreError) -> anyhow::Error {
    match e {
        CoreError::NotChainMap(_)
        | CoreError::NotQuasiIso(_)
        | CoreError::InvalidHomotopy(_)
        | CoreError::EndpointMismatch(_)
        | CoreError::NotAbelian(_)
        | CoreError::ActionLaw(_)
        | CoreError::OrthogonalPair(..)
        | CoreError::NoFiller(_)
        | CoreError::Incompatible(_)
        | CoreError::NotSimplicial(_)
        | CoreError::WitnessFailed(_) => Semantic(e.to_string()).into(),
        _ => anyhow!(e),
    }
}

trait Lift<T> {
    fn lifted(self) -> Result<T>;
}

impl<T> Lift<T> for Result<T, CoreError> {
    fn lifted(self) -> Result<T> {
        self.map_err(lift)
    }
}

pub fn parse_document(text: &str) -> Result<Document> {
    let doc: Document = serde_json::from_str(text).context("malformed document")?;
    ensure!(doc.version == VERSION, "unsupported format version {:?}", doc.version);
    Ok(doc)
}

pub fn payload<T: DeserializeOwned>(doc: &Document, kind: Kind) -> Result<T> {
    ensure!(doc.kind == kind, "expected a {kind:?} document, found {:?}", doc.kind);
    serde_json::from_value(doc.payload.clone()).with_context(|| format!("malformed {kind:?} payload"))
}

pub fn render<T: Serialize>(kind: Kind, payload: &T) -> String {
    let doc = Document { kind, version: VERSION.into(), payload: serde_json::to_value(payload).expect("serializable") };
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDoc {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

impl MatrixDoc {
    pub fn of(m: &RatMatrix) -> Self {
        MatrixDoc { rows: m.rows(), cols: m.cols(), entries: m.to_strings() }
    }

    pub fn matrix(&self) -> Result<RatMatrix> {
        Ok(RatMatrix::from_strings(self.rows, self.cols, &self.entries)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NamedArrow {
    pub name: String,
    pub src: String,
    pub tgt: String,
}

fn index(names: &[String], name: &str, what: &str) -> Result<usize> {
    names.iter().position(|n| n == name).ok_or_else(|| anyhow!("unknown {what} {name:?}"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupoidDoc {
    pub objects: Vec<String>,
    pub arrows: Vec<NamedArrow>,
    /// The identity arrow of each object, in object order.
    pub units: Vec<String>,
    /// `[arrow, inverse]`
    pub inverses: Vec<[String; 2]>,
    /// `[h, g, h∘g]`
    pub composition: Vec<[String; 3]>,
}

impl GroupoidDoc {
    pub fn of(g: &FinGroupoid) -> Self {
        let d = g.to_data();
        let an = |a: usize| d.arrows[a].0.clone();
        GroupoidDoc {
            objects: d.objects.clone(),
            arrows: d
                .arrows
                .iter()
                .map(|(n, s, t)| NamedArrow { name: n.clone(), src: d.objects[*s].clone(), tgt: d.objects[*t].clone() })
                .collect(),
            units: d.unit.iter().map(|&a| an(a)).collect(),
            inverses: d.inv.iter().enumerate().map(|(a, &i)| [an(a), an(i)]).collect(),
            composition: d.comp.iter().map(|&(h, g, hg)| [an(h), an(g), an(hg)]).collect(),
        }
    }

    pub fn groupoid(&self) -> Result<FinGroupoid> {
        let names: Vec<String> = self.arrows.iter().map(|a| a.name.clone()).collect();
        let arr = |n: &str| index(&names, n, "arrow");
        let mut data = GroupoidData { objects: self.objects.clone(), ..Default::default() };
        for a in &self.arrows {
            data.arrows.push((
                a.name.clone(),
                index(&self.objects, &a.src, "object")?,
                index(&self.objects, &a.tgt, "object")?,
            ));
        }
        data.unit = self.units.iter().map(|u| arr(u)).collect::<Result<_>>()?;
        data.inv = vec![usize::MAX; names.len()];
        for [a, i] in &self.inverses {
            data.inv[arr(a)?] = arr(i)?;
        }
        for [h, g, hg] in &self.composition {
            data.comp.push((arr(h)?, arr(g)?, arr(hg)?));
        }
        Ok(FinGroupoid::from_data(data)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiberDims {
    pub point: String,
    pub dim1: usize,
    pub dim0: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundleDoc {
    pub fibers: Vec<FiberDims>,
}

impl BundleDoc {
    pub fn of(v: &GradedBundle) -> Self {
        let fibers = (0..v.len())
            .map(|p| {
                let (dim1, dim0) = v.dims(p);
                FiberDims { point: v.point_name(p).into(), dim1, dim0 }
            })
            .collect();
        BundleDoc { fibers }
    }

    pub fn bundle(&self) -> Result<GradedBundle> {
        Ok(GradedBundle::new(
            self.fibers.iter().map(|f| f.point.clone()).collect(),
            self.fibers.iter().map(|f| (f.dim1, f.dim0)).collect(),
        )?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiberDoc {
    pub point: String,
    pub dim1: usize,
    pub dim0: usize,
    pub d: MatrixDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RhoDoc {
    pub arrow: String,
    pub rho1: MatrixDoc,
    pub rho0: MatrixDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairDoc {
    pub left: String,
    pub right: String,
    pub value: MatrixDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RuthDoc {
    pub groupoid: GroupoidDoc,
    pub fibers: Vec<FiberDoc>,
    pub rho: Vec<RhoDoc>,
    pub gamma: Vec<PairDoc>,
}

fn pairs_of(g: &FinGroupoid, m: &BTreeMap<(usize, usize), RatMatrix>) -> Vec<PairDoc> {
    m.iter()
        .map(|(&(h, k), v)| PairDoc {
            left: g.arrow_name(h).into(),
            right: g.arrow_name(k).into(),
            value: MatrixDoc::of(v),
        })
        .collect()
}

fn fibers_of(g: &FinGroupoid, d: &[RatMatrix]) -> Vec<FiberDoc> {
    d.iter()
        .enumerate()
        .map(|(x, d)| FiberDoc { point: g.object_name(x).into(), dim1: d.cols(), dim0: d.rows(), d: MatrixDoc::of(d) })
        .collect()
}

/// Reads per-point and per-arrow tables given in any order, insisting that
/// each entry appears exactly once.
fn by_index<T: Clone>(n: usize, what: &str, entries: impl IntoIterator<Item = Result<(usize, T)>>) -> Result<Vec<T>> {
    let mut out: Vec<Option<T>> = vec![None; n];
    for e in entries {
        let (i, v) = e?;
        ensure!(out[i].replace(v).is_none(), "{what} given twice");
    }
    out.into_iter().map(|v| v.ok_or_else(|| anyhow!("{what} missing"))).collect()
}

fn read_fibers(g: &FinGroupoid, fibers: &[FiberDoc]) -> Result<(GradedBundle, Vec<RatMatrix>)> {
    let rows = by_index(
        g.object_count(),
        "fiber",
        fibers.iter().map(|f| {
            let x = index(g.objects(), &f.point, "point")?;
            let d = f.d.matrix()?;
            ensure!(d.shape() == (f.dim0, f.dim1), "differential at {} is not {}x{}", f.point, f.dim0, f.dim1);
            Ok((x, (f.dim1, f.dim0, d)))
        }),
    )?;
    let bundle = GradedBundle::new(g.objects().to_vec(), rows.iter().map(|r| (r.0, r.1)).collect())?;
    Ok((bundle, rows.into_iter().map(|r| r.2).collect()))
}

fn arrow_index(g: &FinGroupoid, name: &str) -> Result<usize> {
    g.arrow_index(name).ok_or_else(|| anyhow!("unknown arrow {name:?}"))
}

fn read_pairs(g: &FinGroupoid, pairs: &[PairDoc]) -> Result<BTreeMap<(usize, usize), RatMatrix>> {
    let mut out = BTreeMap::new();
    for p in pairs {
        let key = (arrow_index(g, &p.left)?, arrow_index(g, &p.right)?);
        ensure!(g.comp(key.0, key.1).is_some(), "({}, {}) is not a composable pair", p.left, p.right);
        ensure!(out.insert(key, p.value.matrix()?).is_none(), "pair ({}, {}) given twice", p.left, p.right);
    }
    ensure!(out.len() == g.composable_pairs().len(), "an entry is missing for some composable pair");
    Ok(out)
}

impl RuthDoc {
    pub fn of(r: &Ruth2) -> Self {
        let g = &r.g;
        RuthDoc {
            groupoid: GroupoidDoc::of(g),
            fibers: fibers_of(g, &r.d),
            rho: (0..g.arrow_count())
                .map(|a| RhoDoc {
                    arrow: g.arrow_name(a).into(),
                    rho1: MatrixDoc::of(&r.rho1[a]),
                    rho0: MatrixDoc::of(&r.rho0[a]),
                })
                .collect(),
            gamma: pairs_of(g, &r.gamma),
        }
    }

    pub fn ruth(&self) -> Result<Ruth2> {
        let g = self.groupoid.groupoid()?;
        let (v, d) = read_fibers(&g, &self.fibers)?;
        let rho = by_index(
            g.arrow_count(),
            "rho",
            self.rho.iter().map(|r| Ok((arrow_index(&g, &r.arrow)?, (r.rho1.matrix()?, r.rho0.matrix()?)))),
        )?;
        let gamma = read_pairs(&g, &self.gamma)?;
        let (rho1, rho0) = rho.into_iter().unzip();
        Ok(Ruth2 { g, v, d, rho1, rho0, gamma })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowMapDoc {
    pub arrow: String,
    pub a1: MatrixDoc,
    pub a0: MatrixDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorDoc {
    pub groupoid: GroupoidDoc,
    pub objects: Vec<FiberDoc>,
    pub arrows: Vec<ArrowMapDoc>,
    /// The homotopies `φ₁,₁(h, g)`.
    pub cells: Vec<PairDoc>,
}

impl FunctorDoc {
    pub fn of(p: &PseudoFunctorGL) -> Self {
        let g = &p.g;
        let d: Vec<RatMatrix> = p.phi0.iter().map(|o| o.fiber.d().clone()).collect();
        FunctorDoc {
            groupoid: GroupoidDoc::of(g),
            objects: fibers_of(g, &d),
            arrows: p
                .phi1
                .iter()
                .enumerate()
                .map(|(a, f)| ArrowMapDoc {
                    arrow: g.arrow_name(a).into(),
                    a1: MatrixDoc::of(f.a1()),
                    a0: MatrixDoc::of(f.a0()),
                })
                .collect(),
            cells: pairs_of(g, &p.phi11.iter().map(|(k, c)| (*k, c.r().clone())).collect()),
        }
    }

    pub fn functor(&self) -> Result<PseudoFunctorGL> {
        let g = self.groupoid.groupoid()?;
        let (bundle, d) = read_fibers(&g, &self.objects)?;
        let phi0: Vec<GLObject> =
            d.into_iter().enumerate().map(|(x, d)| GLObject::new(x, Fiber2::from_differential(d))).collect();
        let maps = by_index(
            g.arrow_count(),
            "arrow image",
            self.arrows.iter().map(|a| Ok((arrow_index(&g, &a.arrow)?, (a.a1.matrix()?, a.a0.matrix()?)))),
        )?;
        let mut phi1 = Vec::new();
        for (a, (a1, a0)) in maps.into_iter().enumerate() {
            let f = GLArrow::new(&phi0[g.src(a)], &phi0[g.tgt(a)], a1, a0).lifted();
            phi1.push(f.with_context(|| format!("image of arrow {}", g.arrow_name(a)))?);
        }
        let mut phi11 = BTreeMap::new();
        for ((h, k), r) in read_pairs(&g, &self.cells)? {
            let to = gl2_core::gl::compose_arrows(&phi1[h], &phi1[k]).lifted()?;
            let cell = GL2Cell::new(phi1[g.compose(h, k)].clone(), to, r).lifted();
            phi11.insert(
                (h, k),
                cell.with_context(|| format!("composition cell at ({},{})", g.arrow_name(h), g.arrow_name(k)))?,
            );
        }
        Ok(PseudoFunctorGL { g, bundle, phi0, phi1, phi11 })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThetaDoc {
    pub point: String,
    pub theta1: MatrixDoc,
    pub theta0: MatrixDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowMatrixDoc {
    pub arrow: String,
    pub value: MatrixDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub src: RuthDoc,
    pub dst: RuthDoc,
    pub theta: Vec<ThetaDoc>,
    pub mu: Vec<ArrowMatrixDoc>,
}

fn thetas_of(g: &FinGroupoid, t1: &[RatMatrix], t0: &[RatMatrix]) -> Vec<ThetaDoc> {
    (0..g.object_count())
        .map(|x| ThetaDoc {
            point: g.object_name(x).into(),
            theta1: MatrixDoc::of(&t1[x]),
            theta0: MatrixDoc::of(&t0[x]),
        })
        .collect()
}

fn arrow_matrices_of(g: &FinGroupoid, m: &[RatMatrix]) -> Vec<ArrowMatrixDoc> {
    m.iter()
        .enumerate()
        .map(|(a, v)| ArrowMatrixDoc { arrow: g.arrow_name(a).into(), value: MatrixDoc::of(v) })
        .collect()
}

fn read_thetas(g: &FinGroupoid, t: &[ThetaDoc]) -> Result<(Vec<RatMatrix>, Vec<RatMatrix>)> {
    let v = by_index(
        g.object_count(),
        "theta",
        t.iter().map(|t| Ok((index(g.objects(), &t.point, "point")?, (t.theta1.matrix()?, t.theta0.matrix()?)))),
    )?;
    Ok(v.into_iter().unzip())
}

fn read_arrow_matrices(g: &FinGroupoid, m: &[ArrowMatrixDoc], what: &str) -> Result<Vec<RatMatrix>> {
    by_index(g.arrow_count(), what, m.iter().map(|e| Ok((arrow_index(g, &e.arrow)?, e.value.matrix()?))))
}

impl MorphismDoc {
    pub fn of(m: &RuthMorphism) -> Self {
        let g = &m.src.g;
        MorphismDoc {
            src: RuthDoc::of(&m.src),
            dst: RuthDoc::of(&m.dst),
            theta: thetas_of(g, &m.theta1, &m.theta0),
            mu: arrow_matrices_of(g, &m.mu),
        }
    }

    pub fn morphism(&self) -> Result<RuthMorphism> {
        let (src, dst) = (self.src.ruth()?, self.dst.ruth()?);
        ensure!(src.g == dst.g, "source and target live over different groupoids");
        let (theta1, theta0) = read_thetas(&src.g, &self.theta)?;
        let mu = read_arrow_matrices(&src.g, &self.mu, "mu")?;
        Ok(RuthMorphism { src, dst, theta1, theta0, mu })
    }
}

/// A lax transformation between two pseudo-functors into `GL(V)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransformationDoc {
    pub src: FunctorDoc,
    pub dst: FunctorDoc,
    /// `H_x`
    pub components: Vec<ThetaDoc>,
    /// The homotopies `H_f`.
    pub cells: Vec<ArrowMatrixDoc>,
}

pub struct Transformation {
    pub src: PseudoFunctorGL,
    pub dst: PseudoFunctorGL,
    pub h: LaxTransformation<GLArrow, GL2Cell>,
}

impl TransformationDoc {
    pub fn of(t: &Transformation) -> Self {
        let g = &t.src.g;
        let a1: Vec<RatMatrix> = t.h.components.iter().map(|f| f.a1().clone()).collect();
        let a0: Vec<RatMatrix> = t.h.components.iter().map(|f| f.a0().clone()).collect();
        let r: Vec<RatMatrix> = t.h.cells.iter().map(|c| c.r().clone()).collect();
        TransformationDoc {
            src: FunctorDoc::of(&t.src),
            dst: FunctorDoc::of(&t.dst),
            components: thetas_of(g, &a1, &a0),
            cells: arrow_matrices_of(g, &r),
        }
    }

    pub fn transformation(&self) -> Result<Transformation> {
        let (src, dst) = (self.src.functor()?, self.dst.functor()?);
        ensure!(src.g == dst.g, "source and target live over different groupoids");
        let g = &src.g;
        let (a1, a0) = read_thetas(g, &self.components)?;
        let mut components = Vec::new();
        for (x, (a1, a0)) in a1.into_iter().zip(a0).enumerate() {
            let f = GLArrow::new(&src.phi0[x], &dst.phi0[x], a1, a0).lifted();
            components.push(f.with_context(|| format!("component at {}", g.object_name(x)))?);
        }
        let mut cells = Vec::new();
        for (a, r) in read_arrow_matrices(g, &self.cells, "transformation cell")?.into_iter().enumerate() {
            let (x, y) = (g.src(a), g.tgt(a));
            let gl = gl2_core::gl::compose_arrows;
            let from = gl(&components[y], &src.phi1[a]).lifted()?;
            let to = gl(&dst.phi1[a], &components[x]).lifted()?;
            let c = GL2Cell::new(from, to, r).lifted();
            cells.push(c.with_context(|| format!("transformation cell at {}", g.arrow_name(a)))?);
        }
        Ok(Transformation { src, dst, h: LaxTransformation { components, cells } })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointDim {
    pub point: String,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PseudoRepDoc {
    pub groupoid: GroupoidDoc,
    pub dims: Vec<PointDim>,
    pub rho: Vec<ArrowMatrixDoc>,
}

impl PseudoRepDoc {
    pub fn of(p: &PseudoRep) -> Self {
        let g = &p.g;
        PseudoRepDoc {
            groupoid: GroupoidDoc::of(g),
            dims: p.dims.iter().enumerate().map(|(x, &dim)| PointDim { point: g.object_name(x).into(), dim }).collect(),
            rho: arrow_matrices_of(g, &p.rho),
        }
    }

    pub fn pseudo_rep(&self) -> Result<PseudoRep> {
        let g = self.groupoid.groupoid()?;
        let dims = by_index(
            g.object_count(),
            "dimension",
            self.dims.iter().map(|d| Ok((index(g.objects(), &d.point, "point")?, d.dim))),
        )?;
        let rho = read_arrow_matrices(&g, &self.rho, "rho")?;
        Ok(PseudoRep { g, dims, rho })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoCategoryDoc {
    pub objects: Vec<String>,
    pub arrows: Vec<NamedArrow>,
    /// 2-cells, with `src` and `tgt` naming arrows.
    pub cells: Vec<NamedArrow>,
    /// The identity arrow of each object, in object order.
    pub arrow_units: Vec<String>,
    /// The identity 2-cell of each arrow, in arrow order.
    pub cell_units: Vec<String>,
    /// `[g, f, g∘f]`
    pub composition: Vec<[String; 3]>,
    /// `[s, r, s∘r]`
    pub horizontal: Vec<[String; 3]>,
    /// `[s, r, s•r]`
    pub vertical: Vec<[String; 3]>,
}

impl TwoCategoryDoc {
    pub fn of(c: &Fin2Cat) -> Self {
        let d = c.to_data();
        let an = |a: usize| d.arrows[a].0.clone();
        let cn = |x: usize| d.cells[x].0.clone();
        TwoCategoryDoc {
            objects: d.objects.clone(),
            arrows: d
                .arrows
                .iter()
                .map(|(n, s, t)| NamedArrow { name: n.clone(), src: d.objects[*s].clone(), tgt: d.objects[*t].clone() })
                .collect(),
            cells: d.cells.iter().map(|(n, s, t)| NamedArrow { name: n.clone(), src: an(*s), tgt: an(*t) }).collect(),
            arrow_units: d.id_arrow.iter().map(|&a| an(a)).collect(),
            cell_units: d.id_cell.iter().map(|&x| cn(x)).collect(),
            composition: d.arrow_comp.iter().map(|&(g, f, gf)| [an(g), an(f), an(gf)]).collect(),
            horizontal: d.cell_hcomp.iter().map(|&(s, r, sr)| [cn(s), cn(r), cn(sr)]).collect(),
            vertical: d.cell_vcomp.iter().map(|&(s, r, sr)| [cn(s), cn(r), cn(sr)]).collect(),
        }
    }

    pub fn category(&self) -> Result<Fin2Cat> {
        let an: Vec<String> = self.arrows.iter().map(|a| a.name.clone()).collect();
        let cn: Vec<String> = self.cells.iter().map(|a| a.name.clone()).collect();
        let arr = |n: &str| index(&an, n, "arrow");
        let cel = |n: &str| index(&cn, n, "2-cell");
        let triples = |t: &[[String; 3]], f: &dyn Fn(&str) -> Result<usize>| -> Result<Vec<(usize, usize, usize)>> {
            t.iter().map(|[a, b, c]| Ok((f(a)?, f(b)?, f(c)?))).collect()
        };
        let d = Fin2CatData {
            objects: self.objects.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| {
                    Ok((
                        a.name.clone(),
                        index(&self.objects, &a.src, "object")?,
                        index(&self.objects, &a.tgt, "object")?,
                    ))
                })
                .collect::<Result<_>>()?,
            cells: self
                .cells
                .iter()
                .map(|c| Ok((c.name.clone(), arr(&c.src)?, arr(&c.tgt)?)))
                .collect::<Result<_>>()?,
            id_arrow: self.arrow_units.iter().map(|u| arr(u)).collect::<Result<_>>()?,
            id_cell: self.cell_units.iter().map(|u| cel(u)).collect::<Result<_>>()?,
            arrow_comp: triples(&self.composition, &arr)?,
            cell_hcomp: triples(&self.horizontal, &cel)?,
            cell_vcomp: triples(&self.vertical, &cel)?,
        };
        Ok(Fin2Cat::from_data(d)?)
    }
}

/// Where the entries of a simplex live.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case", deny_unknown_fields)]
pub enum HandleDoc {
    Table { two_category: TwoCategoryDoc },
    Gl { bundle: BundleDoc },
}

/// Vertices are objects, edges `u_{j,i}` are arrows `u_i -> u_j` and
/// triangles `u_{k,j,i}` are 2-cells `u_{k,i} => u_{k,j} ∘ u_{j,i}`. In a
/// table the entries are names; in `GL(V)` an object is a point with a
/// differential, an arrow is `(a1, a0)` and a 2-cell is its homotopy `r`
/// (the endpoints are read off the edges).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EntryDoc {
    Name(String),
    Object(GlObjectDoc),
    Arrow(GlArrowDoc),
    Cell(GlCellDoc),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GlObjectDoc {
    pub point: String,
    pub d: MatrixDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GlArrowDoc {
    pub a1: MatrixDoc,
    pub a0: MatrixDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GlCellDoc {
    pub r: MatrixDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    /// The vertices spanning the face, in decreasing order.
    pub at: Vec<usize>,
    pub value: EntryDoc,
}

/// A simplex, or with `k` set a horn `Λⁿₖ`; absent entries are omitted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabelDoc {
    pub handle: HandleDoc,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub entries: Vec<Entry>,
}

pub enum AnyLabel {
    Table(Fin2Cat, Label<Fin2Cat>),
    Gl(GeneralLinear, Label<GeneralLinear>),
}

fn check_at(at: &[usize], n: usize) -> Result<()> {
    ensure!(!at.is_empty() && at.len() <= 3, "entries are vertices, edges or triangles, not {at:?}");
    ensure!(at.windows(2).all(|w| w[0] > w[1]) && at[0] <= n, "face {at:?} is not strictly decreasing inside [{n}]");
    Ok(())
}

fn fill_label<O: Clone, A: Clone, C: Clone>(
    n: usize,
    entries: &[Entry],
    mut obj: impl FnMut(&EntryDoc) -> Result<O>,
    mut arr: impl FnMut(&SimplexLabel<O, A, C>, usize, usize, &EntryDoc) -> Result<A>,
    mut cell: impl FnMut(&SimplexLabel<O, A, C>, usize, usize, usize, &EntryDoc) -> Result<C>,
) -> Result<SimplexLabel<O, A, C>> {
    let mut s = SimplexLabel::empty(n);
    // Vertices first, then edges, then triangles, so later entries can see
    // their boundary.
    for len in 1..=3 {
        for e in entries.iter().filter(|e| e.at.len() == len) {
            check_at(&e.at, n)?;
            match e.at[..] {
                [i] => {
                    ensure!(s.vertex(i).is_none(), "vertex {i} given twice");
                    s.set_vertex(i, Some(obj(&e.value)?));
                }
                [j, i] => {
                    ensure!(s.edge(j, i).is_none(), "edge ({j},{i}) given twice");
                    let a = arr(&s, j, i, &e.value)?;
                    s.set_edge(j, i, Some(a));
                }
                [k, j, i] => {
                    ensure!(s.triangle(k, j, i).is_none(), "triangle ({k},{j},{i}) given twice");
                    let c = cell(&s, k, j, i, &e.value)?;
                    s.set_triangle(k, j, i, Some(c));
                }
                _ => unreachable!(),
            }
        }
    }
    Ok(s)
}

fn name_of(e: &EntryDoc) -> Result<&str> {
    match e {
        EntryDoc::Name(n) => Ok(n),
        _ => bail!("table entries are names"),
    }
}

impl LabelDoc {
    pub fn label(&self) -> Result<AnyLabel> {
        let n = self.dim;
        match &self.handle {
            HandleDoc::Table { two_category } => {
                let c = two_category.category()?;
                let s = fill_label(
                    n,
                    &self.entries,
                    |e| c.object_index(name_of(e)?).ok_or_else(|| anyhow!("unknown object")),
                    |_, _, _, e| c.arrow_index(name_of(e)?).ok_or_else(|| anyhow!("unknown arrow")),
                    |_, _, _, _, e| c.cell_index(name_of(e)?).ok_or_else(|| anyhow!("unknown 2-cell")),
                )?;
                Ok(AnyLabel::Table(c, s))
            }
            HandleDoc::Gl { bundle } => {
                let gl = GeneralLinear::new(bundle.bundle()?);
                let s = fill_label(
                    n,
                    &self.entries,
                    |e| match e {
                        EntryDoc::Object(o) => {
                            let p = gl
                                .bundle()
                                .point_index(&o.point)
                                .ok_or_else(|| anyhow!("unknown point {:?}", o.point))?;
                            Ok(gl.object(p, o.d.matrix()?)?)
                        }
                        _ => bail!("a GL vertex is a point with a differential"),
                    },
                    |s, j, i, e| match e {
                        EntryDoc::Arrow(a) => {
                            let (x, y) = (s.vertex(i), s.vertex(j));
                            let (Some(x), Some(y)) = (x, y) else { bail!("edge ({j},{i}) without its vertices") };
                            GLArrow::new(x, y, a.a1.matrix()?, a.a0.matrix()?).lifted()
                        }
                        _ => bail!("a GL edge is a pair (a1, a0)"),
                    },
                    |s, k, j, i, e| match e {
                        EntryDoc::Cell(c) => {
                            let from =
                                s.edge(k, i).ok_or_else(|| anyhow!("triangle ({k},{j},{i}) without its edges"))?;
                            GL2Cell::starting_at(from.clone(), c.r.matrix()?).lifted()
                        }
                        _ => bail!("a GL triangle is a homotopy r"),
                    },
                )?;
                Ok(AnyLabel::Gl(gl, s))
            }
        }
    }

    pub fn of_table(c: &Fin2Cat, s: &Label<Fin2Cat>, k: Option<usize>) -> Self {
        Self::of_with::<Fin2Cat>(
            s,
            k,
            HandleDoc::Table { two_category: TwoCategoryDoc::of(c) },
            |x| EntryDoc::Name(c.object_name(*x).into()),
            |a| EntryDoc::Name(c.arrow_name(*a).into()),
            |t| EntryDoc::Name(c.cell_name(*t).into()),
        )
    }

    pub fn of_gl(gl: &GeneralLinear, s: &Label<GeneralLinear>, k: Option<usize>) -> Self {
        let b = gl.bundle();
        Self::of_with::<GeneralLinear>(
            s,
            k,
            HandleDoc::Gl { bundle: BundleDoc::of(b) },
            |o| EntryDoc::Object(GlObjectDoc { point: b.point_name(o.point).into(), d: MatrixDoc::of(o.fiber.d()) }),
            |f| EntryDoc::Arrow(GlArrowDoc { a1: MatrixDoc::of(f.a1()), a0: MatrixDoc::of(f.a0()) }),
            |c| EntryDoc::Cell(GlCellDoc { r: MatrixDoc::of(c.r()) }),
        )
    }

    fn of_with<T: TwoCategory>(
        s: &Label<T>,
        k: Option<usize>,
        handle: HandleDoc,
        obj: impl Fn(&T::Obj) -> EntryDoc,
        arr: impl Fn(&T::Arrow) -> EntryDoc,
        cell: impl Fn(&T::Cell) -> EntryDoc,
    ) -> Self {
        let n = s.dim();
        let mut entries = Vec::new();
        for i in 0..=n {
            if let Some(x) = s.vertex(i) {
                entries.push(Entry { at: vec![i], value: obj(x) });
            }
        }
        for (j, i) in s.edge_indices() {
            if let Some(a) = s.edge(j, i) {
                entries.push(Entry { at: vec![j, i], value: arr(a) });
            }
        }
        for (l, j, i) in s.triangle_indices() {
            if let Some(c) = s.triangle(l, j, i) {
                entries.push(Entry { at: vec![l, j, i], value: cell(c) });
            }
        }
        LabelDoc { handle, dim: n, k, entries }
    }
}
