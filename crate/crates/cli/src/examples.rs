//! `hopfgal example NAME`: named constructions as JSON.

use std::sync::Arc;

use anyhow::{anyhow, Context};
use hopfgal::comodule::{is_galois, ComoduleAlgebra};
use hopfgal::constructions::{
    borel_halves, classify_kcn_galois, cyclic_group_algebra, group_algebra, h2_classes, h2_group_cohomology,
    kg_galois_object, phi_lambda_pairing, schanuel_matrix, schanuel_suite, taft_galois_object, taft_hopf,
    twisted_group_algebra, uq_sl2_small, FiniteAbelianGroup, TaftParams,
};
use hopfgal::homotopy::{taft_homotopy_witness, verify_poly_galois};
use hopfgal::hopf::HopfAlgebra;
use hopfgal::json::{cocycle_to_json, comodule_to_json, hopf_to_json, pairing_to_json};
use hopfgal::report::Report;
use hopfgal::scalars::{Field, FieldSpec, Scalar};
use hopfgal::twisting::{verify_cocycle, verify_skew_pairing};
use hopfgal::Error;
use serde_json::{json, Map, Value};

use crate::{document, print_json, Outcome};

pub const NAMES: &[&str] = &[
    "group-algebra",
    "twisted-group-algebra",
    "h2",
    "taft",
    "taft-galois",
    "taft-witness",
    "kgn-galois",
    "classify-kgn",
    "borel",
    "uq-sl2",
    "schanuel",
];

#[derive(clap::Args, Debug)]
pub struct ExampleArgs {
    /// One of the names printed by `hopfgal example list`.
    pub name: String,
    /// Order of the root of unity, or of the cyclic group.
    #[arg(long = "N")]
    pub n: Option<usize>,
    /// Primitive N-th root of unity; defaults to the first one found.
    #[arg(long)]
    pub q: Option<String>,
    /// `p7`, `q` or `cyc4`.
    #[arg(long)]
    pub field: Option<String>,
    #[arg(long)]
    pub lambda: Option<String>,
    #[arg(long)]
    pub r: Option<String>,
    #[arg(long)]
    pub s: Option<String>,
    /// Invariant factors, e.g. `2x2`.
    #[arg(long)]
    pub group: Option<String>,
    /// Index of the cohomology class, in enumeration order.
    #[arg(long)]
    pub class: Option<usize>,
}

struct Built {
    mode: Option<&'static str>,
    object: Option<Value>,
    report: Report,
    extra: Map<String, Value>,
}

impl Built {
    fn new(mode: &'static str, object: Value, report: Report) -> Self {
        Built { mode: Some(mode), object: Some(object), report, extra: Map::new() }
    }
}

struct Params<'a> {
    args: &'a ExampleArgs,
    field: Field,
}

impl Params<'_> {
    fn scalar(&self, v: &Option<String>, default: i64) -> Result<Scalar, Error> {
        v.as_deref().map_or_else(|| Ok(self.field.from_i64(default)), |s| self.field.parse(s))
    }
    fn n(&self) -> usize {
        self.args.n.unwrap_or(3)
    }
    fn q(&self) -> Result<Scalar, Error> {
        match &self.args.q {
            Some(s) => self.field.parse(s),
            None => self.field.primitive_root_of_unity(self.n() as u64),
        }
    }
    /// `λ`, by default `q⁻¹ − q`.
    fn lambda(&self, q: &Scalar) -> Result<Scalar, Error> {
        match &self.args.lambda {
            Some(s) => self.field.parse(s),
            None => Ok(q.inv()?.sub(q)),
        }
    }
    fn group(&self) -> Result<FiniteAbelianGroup, Error> {
        FiniteAbelianGroup::parse(self.args.group.as_deref().unwrap_or("3"))
    }
}

fn hopf_example(h: &HopfAlgebra) -> Built {
    Built::new("hopf", hopf_to_json(h), h.verify())
}

fn comodule_example(ca: &ComoduleAlgebra) -> Result<Built, Error> {
    let mut rep = ca.verify();
    if rep.passed() {
        let v = is_galois(ca)?;
        rep.pass(
            "Galois",
            Some(format!(
                "{} (coinvariants {}, canonical rank {} of {})",
                if v.is_galois() { "yes" } else { "no" },
                v.coinvariants_dim,
                v.canonical_rank,
                v.target_dim
            )),
        );
    }
    Ok(Built::new("comodule", comodule_to_json(ca), rep))
}

fn build(p: &Params) -> Result<Built, Error> {
    let f = &p.field;
    match p.args.name.as_str() {
        "group-algebra" => Ok(hopf_example(&group_algebra(&p.group()?, f))),
        "twisted-group-algebra" => {
            let classes = h2_classes(&p.group()?, f)?;
            let k = p.args.class.unwrap_or(1.min(classes.len() - 1));
            let sigma = classes
                .get(k)
                .ok_or_else(|| Error::BadParams(format!("class {k} of {}", classes.len())))?;
            comodule_example(&twisted_group_algebra(sigma, f)?)
        }
        "h2" => {
            let g = p.group()?;
            let h2 = h2_group_cohomology(&g, f)?;
            let h = Arc::new(group_algebra(&g, f));
            let classes = h2_classes(&g, f)?;
            let sigma = classes[1.min(classes.len() - 1)].to_hopf_cocycle(&h)?;
            let mut b = Built::new("cocycle", cocycle_to_json(sigma.values(), &h), verify_cocycle(sigma.values(), &h));
            b.extra.insert("invariants".into(), json!(h2.invariants));
            b.extra.insert("order".into(), json!(h2.order()));
            Ok(b)
        }
        "taft" => Ok(hopf_example(&taft_hopf(p.n(), &p.q()?, f)?)),
        "taft-galois" => {
            let h = Arc::new(taft_hopf(p.n(), &p.q()?, f)?);
            let params = TaftParams::new(p.n(), p.q()?, p.scalar(&p.args.r, 1)?, p.scalar(&p.args.s, 0)?)?;
            comodule_example(&taft_galois_object(&params, &h)?)
        }
        "taft-witness" => {
            let w = taft_homotopy_witness(p.n(), &p.q()?, f, &p.scalar(&p.args.r, 1)?, &p.scalar(&p.args.s, 1)?)?;
            let v = verify_poly_galois(&w)?;
            let mut rep = v.axioms.clone();
            rep.record("Galois over k[t]", (!v.is_galois()).then(|| "canonical map not invertible".into()));
            let mut b = Built::new("witness", comodule_to_json(&w), rep);
            b.extra.insert("determinant".into(), json!(v.determinant));
            Ok(b)
        }
        "kgn-galois" => {
            let h = Arc::new(cyclic_group_algebra(p.n(), f));
            comodule_example(&kg_galois_object(p.n(), &p.scalar(&p.args.r, 1)?, &h)?)
        }
        "classify-kgn" => {
            let c = classify_kcn_galois(f, p.n())?;
            let mut rep = Report::new();
            rep.record(
                "classes = |U(k)/U(k)^N|",
                (!c.matches_formula()).then(|| format!("{} classes, expected {}", c.classes.len(), c.expected)),
            );
            let classes: Vec<Vec<String>> = c.classes.iter().map(|cl| cl.iter().map(|s| s.to_string()).collect()).collect();
            let mut extra = Map::new();
            extra.insert("classes".into(), json!(classes));
            extra.insert("expected".into(), json!(c.expected));
            Ok(Built { mode: None, object: None, report: rep, extra })
        }
        "borel" => {
            let q = p.q()?;
            let (u, a, datum) = borel_halves(p.n(), &q, f)?;
            let (u, a) = (Arc::new(u), Arc::new(a));
            let tau = phi_lambda_pairing(&u, &a, &datum, &p.lambda(&q)?)?;
            let mut rep = Report::new();
            rep.extend("U", u.verify());
            rep.extend("A", a.verify());
            rep.extend("datum", datum.verify(&u, &a));
            rep.extend("pairing", verify_skew_pairing(tau.values(), &u, &a));
            Ok(Built::new("pairing", pairing_to_json(tau.values(), &u, &a), rep))
        }
        "uq-sl2" => {
            let q = p.q()?;
            Ok(hopf_example(&uq_sl2_small(p.n(), &q, f, &p.lambda(&q)?)?))
        }
        "schanuel" => {
            let m = schanuel_matrix(f);
            let rows: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect();
            let mut extra = Map::new();
            extra.insert("matrix".into(), json!(rows));
            Ok(Built { mode: None, object: None, report: schanuel_suite(f)?, extra })
        }
        other => Err(Error::UnknownExample(format!("{other}; known: {}", NAMES.join(", ")))),
    }
}

pub fn run(args: &ExampleArgs) -> Result<(), Outcome> {
    if args.name == "list" {
        use std::io::Write;
        // a closed pipe is not an error here
        let _ = writeln!(std::io::stdout().lock(), "{}", NAMES.join("\n"));
        return Ok(());
    }
    let default_field = if args.name == "schanuel" { "p2" } else { "p7" };
    let spec = FieldSpec::parse_short(args.field.as_deref().unwrap_or(default_field)).context("--field")?;
    let field = Field::new(&spec).context("--field")?;
    let p = Params { args, field };
    let built = build(&p).map_err(|e| anyhow!(e).context(format!("example {}", args.name)))?;
    let status = built.report.status();
    let mut body = Map::new();
    body.insert("example".into(), json!(args.name));
    if let Some(m) = built.mode {
        body.insert("mode".into(), json!(m));
    }
    if let Some(o) = built.object {
        body.insert("object".into(), o);
    }
    body.extend(built.extra);
    body.insert("report".into(), serde_json::to_value(&built.report).map_err(anyhow::Error::from)?);
    print_json(&document("example", status, Value::Object(body)))?;
    if built.report.passed() {
        Ok(())
    } else {
        Err(Outcome::Failed)
    }
}
