//! End-to-end report for one group: classification, coset poset sizes, the
//! labeling pipeline, homology and the agreement checks between them.

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::expr::GroupExpr;
use crate::group::{Builtin, Group, DEFAULT_ORDER_CAP};
use crate::homology::{betti, euler_consistent, is_seq_cm_with, predicted_spheres_in, BettiVector, Field, SeqCmVerdict, SphereCount, CM_FACE_CAP};
use crate::labeling::{build_context, LabeledHasse, LevelConvention};
use crate::lattice::{ClassificationReport, SubgroupLattice};
use crate::par::Exec;
use crate::poset::{coset_lattice_in, Poset};
use crate::shelling::{facet_order_unverified, falling_chains, verify_coel_with, verify_shelling, ELReport, ShellingVerdict};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug)]
pub struct ReportOptions {
    pub field: Field,
    pub levels: LevelConvention,
    pub max_order: usize,
    /// Run the sequential Cohen-Macaulay check only up to this many faces.
    pub cm_face_cap: usize,
    /// Skip homology of complexes with more faces than this.
    pub homology_face_cap: u128,
    pub exec: Exec,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            field: Field::Rational,
            levels: LevelConvention::Lex,
            max_order: DEFAULT_ORDER_CAP,
            cm_face_cap: CM_FACE_CAP,
            homology_face_cap: 200_000,
            exec: Exec::default(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PosetSizes {
    pub subgroups: usize,
    pub cosets: usize,
    pub covers: usize,
    pub lattice_elements: usize,
    pub maximal_chains: u128,
    /// Nonempty faces of the order complex.
    pub faces: u128,
    pub dimension: isize,
}

/// Outcome of a step that can be refused on preconditions.
#[derive(Clone, Debug, Serialize)]
pub struct Refusal {
    pub code: &'static str,
    pub message: String,
}

impl From<&Error> for Refusal {
    fn from(e: &Error) -> Self {
        Refusal {
            code: e.code(),
            message: e.to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ShellingSummary {
    /// The definition as written: fails for two or more isolated points.
    pub literal: bool,
    /// Counting a 0-dimensional complex as a shellable bouquet of 0-spheres.
    pub convention: bool,
    pub verdict: ShellingVerdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct LabelingSummary {
    pub built: bool,
    pub refused: Option<Refusal>,
    pub coel: Option<ELReport>,
    pub shelling: Option<ShellingSummary>,
    pub falling_chains: Option<usize>,
}

impl LabelingSummary {
    /// Labeling built, coEL verified and the label order is a shelling
    /// under the 0-dimensional convention.
    pub fn certified(&self) -> bool {
        self.built
            && self.coel.as_ref().is_some_and(|r| r.ok)
            && self.shelling.as_ref().is_some_and(|s| s.convention)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Agreement {
    /// complemented <=> supersolvable with elementary abelian Sylows
    pub hall: bool,
    /// certified shelling <=> complemented; null when the group is
    /// complemented but not given as a product of square-free groups
    pub shelling: Option<bool>,
    /// sequentially Cohen-Macaulay <=> complemented; null when skipped
    pub seq_cm: Option<bool>,
    /// homology is concentrated in the predicted dimension with the
    /// predicted rank; null when either side is unavailable
    pub spheres: Option<bool>,
    /// the complex is 0-dimensional, so the shelling verdict relies on
    /// the bouquet-of-points convention
    pub zero_dimensional_convention: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub group: String,
    pub order: usize,
    pub factor_orders: Vec<usize>,
    pub classification: ClassificationReport,
    pub poset: PosetSizes,
    pub labeling: LabelingSummary,
    pub betti: Option<BettiVector>,
    pub euler_consistent: Option<bool>,
    pub homology_refused: Option<Refusal>,
    pub predicted_spheres: Option<SphereCount>,
    pub predicted_refused: Option<Refusal>,
    pub seq_cm: Option<SeqCmVerdict>,
    pub seq_cm_refused: Option<Refusal>,
    pub agreement: Agreement,
}

pub fn run_report(expr: &str, options: &ReportOptions) -> Result<Report> {
    let parsed = GroupExpr::parse(expr)?;
    let g = parsed.build(options.max_order)?;
    report_for_group(&parsed.to_string(), &g, options)
}

/// Labeling pipeline on an already-built lattice.
pub fn labeling_pipeline(g: &Group, options: &ReportOptions) -> LabelingSummary {
    match build_context(g, options.levels).and_then(|ctx| ctx.labeled_hasse()) {
        Err(e) => LabelingSummary {
            built: false,
            refused: Some(Refusal::from(&e)),
            coel: None,
            shelling: None,
            falling_chains: None,
        },
        Ok(lh) => summarize_labeling(&lh, options.exec),
    }
}

fn summarize_labeling(lh: &LabeledHasse, exec: Exec) -> LabelingSummary {
    let check = || -> Result<(ELReport, Option<ShellingSummary>, usize)> {
        let coel = verify_coel_with(lh, exec)?;
        let shelling = if coel.ok {
            let k = lh.lattice().proper_part().order_complex()?;
            let verdict = verify_shelling(&k, &facet_order_unverified(lh)?)?;
            Some(ShellingSummary {
                literal: verdict.holds,
                convention: verdict.holds || k.dim() == 0,
                verdict,
            })
        } else {
            None
        };
        Ok((coel, shelling, falling_chains(lh)?.len()))
    };
    match check() {
        Ok((coel, shelling, falling)) => LabelingSummary {
            built: true,
            refused: None,
            coel: Some(coel),
            shelling,
            falling_chains: Some(falling),
        },
        Err(e) => LabelingSummary {
            built: true,
            refused: Some(Refusal::from(&e)),
            coel: None,
            shelling: None,
            falling_chains: None,
        },
    }
}

pub fn report_for_group(name: &str, g: &Group, options: &ReportOptions) -> Result<Report> {
    let lat = SubgroupLattice::with_exec(g, options.exec);
    let classification = lat.classify();
    let lattice: Poset = coset_lattice_in(&lat)?;
    let proper = lattice.proper_part();
    let faces = proper.count_chains();
    let k: SimplicialComplex = proper.order_complex()?;
    let poset = PosetSizes {
        subgroups: lat.len(),
        cosets: proper.len(),
        covers: proper.covers().len(),
        lattice_elements: lattice.len(),
        maximal_chains: proper.count_maximal_chains(),
        faces,
        dimension: k.dim(),
    };
    let labeling = labeling_pipeline(g, options);

    let (betti_vector, euler, homology_refused) = if faces > options.homology_face_cap {
        let e = Error::ComplexTooLarge {
            faces: faces as usize,
            cap: options.homology_face_cap as usize,
        };
        (None, None, Some(Refusal::from(&e)))
    } else {
        let b = betti(&k, options.field)?;
        let euler = euler_consistent(&k, &b);
        (Some(b), Some(euler), None)
    };
    let (predicted, predicted_refused) = match predicted_spheres_in(&lat) {
        Ok(s) => (Some(s), None),
        Err(e) => (None, Some(Refusal::from(&e))),
    };
    let (seq_cm, seq_cm_refused) = if faces > options.cm_face_cap as u128 {
        let e = Error::ComplexTooLarge {
            faces: faces as usize,
            cap: options.cm_face_cap,
        };
        (None, Some(Refusal::from(&e)))
    } else {
        match is_seq_cm_with(&k, options.field, options.exec) {
            Ok(v) => (Some(v), None),
            Err(e) => (None, Some(Refusal::from(&e))),
        }
    };

    let complemented = classification.complemented;
    let shelling_agreement = if labeling.built || !complemented {
        Some(labeling.certified() == complemented)
    } else {
        None
    };
    let spheres = match (&betti_vector, &predicted) {
        (Some(b), Some(s)) if s.dimension >= 0 => {
            let d = s.dimension as usize;
            Some(b.concentrated_in(d) && b.ranks.get(d).map_or(s.count == 0, |&r| r as u128 == s.count))
        }
        _ => None,
    };
    let agreement = Agreement {
        hall: classification.hall_equivalence_holds(),
        shelling: shelling_agreement,
        seq_cm: seq_cm.as_ref().map(|v| v.holds == complemented),
        spheres,
        zero_dimensional_convention: k.dim() == 0,
    };
    Ok(Report {
        schema: SCHEMA_VERSION,
        group: name.to_string(),
        order: g.order(),
        factor_orders: g.factors().iter().map(|f| f.order()).collect(),
        classification,
        poset,
        labeling,
        betti: betti_vector,
        euler_consistent: euler,
        homology_refused,
        predicted_spheres: predicted,
        predicted_refused,
        seq_cm,
        seq_cm_refused,
        agreement,
    })
}

/// Nontrivial built-in groups of order at most `max_order`, as expressions.
pub fn builtin_catalog(max_order: usize) -> Vec<GroupExpr> {
    let mut out = Vec::new();
    let mut push = |b: Builtin| {
        if b.order() >= 2 && b.order() <= max_order as u128 {
            out.push(GroupExpr::Atom(b));
        }
    };
    for n in 1..=max_order {
        push(Builtin::Cyclic(n));
        push(Builtin::Dihedral(n));
    }
    for n in 1..=8 {
        push(Builtin::Symmetric(n));
        push(Builtin::Alternating(n));
    }
    for p in (2..=max_order).filter(|&p| crate::arith::is_prime(p as u64)) {
        let mut k = 1;
        while (p as u128).pow(k) <= max_order as u128 {
            push(Builtin::Elementary { p, k: k as usize });
            k += 1;
        }
    }
    out
}

/// Built-ins and products of two built-ins (unordered, squares included)
/// with order at most `max_order`.
pub fn sweep_catalog(max_order: usize) -> Vec<GroupExpr> {
    let atoms = builtin_catalog(max_order);
    let mut out = atoms.clone();
    for (i, a) in atoms.iter().enumerate() {
        for b in &atoms[i..] {
            if a.order() * b.order() <= max_order as u128 {
                out.push(GroupExpr::Product(Box::new(a.clone()), Box::new(b.clone())));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z6_report() {
        let r = run_report("Z6", &ReportOptions::default()).unwrap();
        assert!(r.classification.complemented);
        assert!(r.labeling.certified());
        assert_eq!(r.labeling.falling_chains, Some(2));
        assert_eq!(r.betti.unwrap().ranks, vec![0, 2]);
        assert_eq!(r.predicted_spheres.unwrap(), SphereCount { dimension: 1, count: 2 });
        assert!(r.seq_cm.unwrap().holds);
        assert_eq!(r.agreement.shelling, Some(true));
        assert_eq!(r.agreement.seq_cm, Some(true));
        assert_eq!(r.agreement.spheres, Some(true));
    }

    #[test]
    fn z4_report() {
        let r = run_report("Z4", &ReportOptions::default()).unwrap();
        assert_eq!(r.labeling.refused.as_ref().unwrap().code, "non_square_free_factor");
        assert_eq!(r.betti.unwrap().ranks, vec![1, 0]);
        assert!(!r.seq_cm.unwrap().holds);
        assert_eq!(r.agreement.shelling, Some(true));
    }

    #[test]
    fn a4_report() {
        let r = run_report("A4", &ReportOptions::default()).unwrap();
        assert!(!r.classification.supersolvable);
        assert!(!r.labeling.built);
        let cm = r.seq_cm.unwrap();
        assert!(!cm.holds);
        assert_eq!(cm.skeleton, Some(2));
    }

    #[test]
    fn prime_cyclic_relies_on_convention() {
        let r = run_report("Z3", &ReportOptions::default()).unwrap();
        let s = r.labeling.shelling.as_ref().unwrap();
        assert!(!s.literal && s.convention);
        assert!(r.agreement.zero_dimensional_convention);
        assert_eq!(r.agreement.shelling, Some(true));
    }

    #[test]
    fn complemented_without_presentation_is_unjudged() {
        let r = run_report("D6", &ReportOptions::default()).unwrap();
        assert!(r.classification.complemented);
        assert!(!r.labeling.built);
        assert_eq!(r.agreement.shelling, None);
    }

    #[test]
    fn catalogs() {
        let atoms = builtin_catalog(16);
        assert!(atoms.iter().all(|e| (2..=16).contains(&e.order())));
        let names: Vec<String> = atoms.iter().map(|e| e.to_string()).collect();
        for expected in ["Z16", "D8", "S3", "A4", "E2^4", "E3^2", "E13^1"] {
            assert!(names.contains(&expected.to_string()), "{expected}");
        }
        assert!(!names.contains(&"S4".to_string()));
        let sweep = sweep_catalog(16);
        assert!(sweep.iter().any(|e| e.to_string() == "Z2 x S3"));
        assert!(sweep.iter().all(|e| e.order() <= 16));
    }
}
