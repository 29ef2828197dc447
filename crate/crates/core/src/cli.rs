//! Command-line front end. Every subcommand reads JSON (from `--input` or
//! `--json`) or flags and writes one JSON document to standard output:
//! `{"result": ..., "reference": ...}` on success, `{"error": {"code",
//! "message"}}` on failure. Exit status is 0 on success, 1 for unreadable
//! input, 2 for failed computations and 3 for exhausted search budgets.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::extension::{
    h1, is_almost_complete, is_complete, split_with_complete_kernel,
};
use crate::group::{catalog, subgroup_core, AutomorphismGroup, FiniteGroup, Subgroup};
use crate::json::{
    parse_action, parse_extension, parse_group, parse_module, parse_poly_str, parse_rational_str, parse_subgroup,
};
use crate::lattice::{dualize, kummer_compare, torus_resolution, GaloisLattice};
use crate::numfield::{
    cubic_trace_square, faithfulness_check, find_quadratic_norm_field, hilbert_symbol, n_theta_eval,
    product_formula_check, NumberField, Place, Theta, DEFAULT_D_BOUND, DEFAULT_LADDER, DEFAULT_WITNESS_BOUND,
};
use crate::outer::{
    check_descent_hypotheses, classify_kernel, induced_quotient_action, is_stable, lift_outer_action,
    supersolvable_filtration, LiftedAction, OuterAction,
};
use crate::{Limits, numfield};

#[derive(Parser, Debug)]
#[command(name = "descent-forge", version, about = "Exact computations for supersolvable descent")]
pub struct Cli {
    #[command(flatten)]
    pub opts: Options,
    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Args, Debug, Clone)]
pub struct Options {
    /// Read the input document from a file.
    #[arg(long, global = true, value_name = "FILE", conflicts_with = "json")]
    pub input: Option<PathBuf>,
    /// Inline input document.
    #[arg(long, global = true, value_name = "INLINE")]
    pub json: Option<String>,
    /// Indent the output document.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Re-check the result independently and report `"verified"`.
    #[arg(long, global = true)]
    pub verify: bool,
    /// Node limit for backtracking searches.
    #[arg(long, global = true, env = "DESCENT_FORGE_BUDGET", default_value_t = crate::group::AUT_NODE_LIMIT)]
    pub budget: u64,
    /// Largest group order accepted.
    #[arg(long, global = true, env = "DESCENT_FORGE_CAP", default_value_t = crate::group::DEFAULT_CAP)]
    pub cap: usize,
    /// Largest `|d|` tried by the quadratic field search.
    #[arg(long, global = true, env = "DESCENT_FORGE_D_BOUND", default_value_t = DEFAULT_D_BOUND)]
    pub d_bound: u64,
    /// Steps allowed for explicit norm witnesses.
    #[arg(long, global = true, env = "DESCENT_FORGE_WITNESS_BOUND", default_value_t = DEFAULT_WITNESS_BOUND)]
    pub witness_bound: u64,
}

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// Finite groups: input is a group document.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Outer actions: input is an action document, plus `"subgroup"` where needed.
    #[command(subcommand)]
    Action(ActionCmd),
    /// Group extensions and 1-cocycles.
    #[command(subcommand)]
    Ext(ExtCmd),
    /// Galois lattices: input is a module document.
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// Number fields over ℚ.
    #[command(subcommand)]
    Nf(NfCmd),
    /// Supersolvability and descent hypotheses.
    #[command(subcommand)]
    Descent(DescentCmd),
}

#[derive(Subcommand, Debug)]
pub enum GroupCmd {
    /// Order, class sizes, centre, composition factors.
    Info,
    NormalSubgroups,
    /// Automorphism and outer automorphism group orders.
    Automorphisms,
    /// Largest normal subgroup inside `"subgroup"`.
    Core,
}

#[derive(Subcommand, Debug)]
pub enum ActionCmd {
    /// Whether `"subgroup"` is normal and stable.
    Stable,
    /// The action induced on the quotient by `"subgroup"`.
    Quotient,
    /// A genuine action with the same outer class.
    Lift,
}

#[derive(Subcommand, Debug)]
pub enum ExtCmd {
    /// All splittings, grouped into kernel-conjugacy classes.
    Splittings,
    /// The outer action on the kernel.
    Outer,
    /// Nonabelian H¹ of a genuine action document.
    H1,
    /// Trivial centre and only inner automorphisms.
    Complete,
    /// Trivial centre and a homomorphic section of Aut → Out.
    AlmostComplete,
    /// Splitting built from a section for an almost complete kernel.
    Split,
}

#[derive(Subcommand, Debug)]
pub enum LatticeCmd {
    /// Rank, torsion, action.
    Info,
    /// The dual module, with torsion removed first.
    Dual,
    /// The two-step permutation resolution and its pushout.
    Resolution,
    /// Compares the resolution of ℤ/n with the Kummer sequence.
    Kummer {
        #[arg(long)]
        n: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum NfCmd {
    /// Characteristic polynomial of an element.
    CharPoly {
        /// Defining polynomial, coefficients constant first.
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// Element, coefficients constant first.
        #[arg(long, allow_hyphen_values = true)]
        element: String,
    },
    /// A symmetric function of the conjugates: product, sum, e<k>, p<k>.
    Theta {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        element: String,
        #[arg(long)]
        theta: String,
    },
    /// Hilbert symbol (a, b)_v.
    Hilbert {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// `inf` or a prime.
        #[arg(long)]
        place: String,
    },
    /// Whether the symbols (a, b)_v multiply to 1 over all places
    ProductFormula {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// A quadratic field in which every α is a norm and every split place splits.
    NormField {
        /// Comma-separated rationals.
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        /// Comma-separated places.
        #[arg(long, default_value = "")]
        split: String,
    },
    /// A cubic field with Tr(β²) = α.
    TraceSquare {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long)]
        cyclic: bool,
        #[arg(long, default_value_t = DEFAULT_LADDER)]
        ladder: usize,
    },
    /// Whether the coset action of the group on `"subgroup"` is faithful.
    Faithful,
}

#[derive(Subcommand, Debug)]
pub enum DescentCmd {
    /// Shortest stable filtration with cyclic steps; accepts a group or an action.
    Supersolvable,
    /// Stability of `"subgroup"` and supersolvability of the quotient.
    Hypotheses,
    /// Which splitting criteria apply to `"subgroup"`.
    Classify,
}

/// Exit status and the document to print.
pub struct Outcome {
    pub status: i32,
    pub output: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome { status: 0, output: e.to_string() };
            }
            return error_outcome(&Error::Parse(e.to_string()), false);
        }
    };
    let pretty = cli.opts.pretty;
    match execute(&cli) {
        Ok(doc) => Outcome { status: 0, output: render(&doc, pretty) },
        Err(e) => error_outcome(&e, pretty),
    }
}

fn render(v: &Value, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(v).expect("json")
    } else {
        serde_json::to_string(v).expect("json")
    }
}

fn error_outcome(e: &Error, pretty: bool) -> Outcome {
    let status = match e {
        Error::Parse(_) => 1,
        _ if e.is_budget() => 3,
        _ => 2,
    };
    let doc = json!({"error": {"code": e.code(), "message": e.to_string()}});
    Outcome { status, output: render(&doc, pretty) }
}

fn input(opts: &Options) -> Result<Value> {
    let text = match (&opts.input, &opts.json) {
        (Some(p), _) => std::fs::read_to_string(p).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?,
        (None, Some(s)) => s.clone(),
        (None, None) => return Err(Error::Parse("no input: pass --input FILE or --json INLINE".into())),
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn sub(v: &Value, key: &str) -> Result<Value> {
    v.get(key).cloned().ok_or_else(|| Error::Parse(format!("missing field {key:?}")))
}

/// A group document, or one nested under `"group"`.
fn group_doc(v: &Value, cap: usize) -> Result<FiniteGroup> {
    parse_group(v.get("group").unwrap_or(v), cap)
}

/// An action document, or one nested under `"action"`.
fn action_doc(v: &Value, cap: usize) -> Result<OuterAction> {
    parse_action(v.get("action").unwrap_or(v), cap)
}

fn subgroup_json(h: &Subgroup) -> Value {
    json!({"elements": h.elements(), "order": h.order()})
}

fn done(result: Value, reference: &str, verified: Option<bool>) -> Result<Value> {
    let mut doc = json!({"result": result, "reference": reference});
    if let Some(v) = verified {
        doc["verified"] = json!(v);
    }
    Ok(doc)
}

fn execute(cli: &Cli) -> Result<Value> {
    let o = &cli.opts;
    let limits = Limits { group_cap: o.cap, node_limit: o.budget };
    let verify = o.verify;
    match &cli.verb {
        Verb::Group(c) => {
            let v = input(o)?;
            let g = group_doc(&v, o.cap)?;
            match c {
                GroupCmd::Info => {
                    let mut sizes = g.class_sizes();
                    sizes.sort_unstable();
                    let factors: Vec<String> = g.composition_factors().iter().map(catalog::describe).collect();
                    done(
                        json!({
                            "order": g.order(),
                            "description": catalog::describe(&g),
                            "abelian": g.is_abelian(),
                            "simple": g.is_simple(),
                            "class_sizes": sizes,
                            "center": subgroup_json(&g.center()),
                            "center_trivial": g.center().is_trivial(),
                            "composition_factors": factors,
                        }),
                        "finite group invariants",
                        None,
                    )
                }
                GroupCmd::NormalSubgroups => {
                    let ns: Vec<Value> = g.normal_subgroups().iter().map(subgroup_json).collect();
                    done(json!({"count": ns.len(), "normal_subgroups": ns}), "normal subgroup lattice", None)
                }
                GroupCmd::Automorphisms => {
                    let aut = AutomorphismGroup::compute(&g, &limits)?;
                    done(
                        json!({
                            "aut_order": aut.order(),
                            "out_order": aut.out_order(),
                            "inner_order": aut.order() / aut.out_order(),
                        }),
                        "automorphism group and outer automorphisms",
                        None,
                    )
                }
                GroupCmd::Core => {
                    let h = parse_subgroup(&sub(&v, "subgroup")?, &g)?;
                    let core = subgroup_core(&h);
                    done(json!({"core": subgroup_json(&core)}), "normal core of a subgroup", None)
                }
            }
        }
        Verb::Action(c) => {
            let v = input(o)?;
            let a = action_doc(&v, o.cap)?;
            match c {
                ActionCmd::Stable => {
                    let n = parse_subgroup(&sub(&v, "subgroup")?, a.target())?;
                    done(json!({"stable": is_stable(&n, &a)?}), "stable normal subgroup under an outer action", None)
                }
                ActionCmd::Quotient => {
                    let n = parse_subgroup(&sub(&v, "subgroup")?, a.target())?;
                    let q = induced_quotient_action(&a, &n)?;
                    done(outer_json(&q), "outer action induced on a quotient", None)
                }
                ActionCmd::Lift => {
                    let l = lift_outer_action(&a, limits.node_limit)?;
                    let verified = verify.then(|| l.as_ref().is_none_or(|l| l.to_outer().same_outer_class(&a)));
                    done(
                        json!({"liftable": l.is_some(), "automorphisms": l.as_ref().map(lifted_json)}),
                        "lifting an outer action to a genuine action",
                        verified,
                    )
                }
            }
        }
        Verb::Ext(c) => {
            let v = input(o)?;
            match c {
                ExtCmd::Splittings => {
                    let e = parse_extension(&v, o.cap)?;
                    let classes = e.splitting_classes(limits.node_limit)?;
                    let total: usize = classes.iter().map(Vec::len).sum();
                    done(
                        json!({"splittings": total, "class_count": classes.len(), "classes": to_value(&classes)}),
                        "splittings up to conjugation by the kernel",
                        None,
                    )
                }
                ExtCmd::Outer => {
                    let e = parse_extension(&v, o.cap)?;
                    done(outer_json(&e.outer_action()?), "outer action of an extension on its kernel", None)
                }
                ExtCmd::H1 => {
                    let a = action_doc(&v, o.cap)?;
                    let l = LiftedAction::new(a.gamma(), a.target(), a.reps().to_vec())?;
                    let h = h1(&l, limits.node_limit)?;
                    done(json!({"class_count": h.len(), "h1": to_value(&h)}), "nonabelian first cohomology", None)
                }
                ExtCmd::Complete => {
                    let g = group_doc(&v, o.cap)?;
                    done(json!({"complete": is_complete(&g, &limits)?}), "complete groups", None)
                }
                ExtCmd::AlmostComplete => {
                    let g = group_doc(&v, o.cap)?;
                    let s = is_almost_complete(&g, &limits)?;
                    let verified = verify.then(|| s.as_ref().is_none_or(|s| s.verify().is_ok()));
                    done(
                        json!({"almost_complete": s.is_some(), "section": s.as_ref().map(to_value)}),
                        "almost complete groups",
                        verified,
                    )
                }
                ExtCmd::Split => {
                    let e = parse_extension(&v, o.cap)?;
                    let s = is_almost_complete(e.kernel(), &limits)?
                        .ok_or_else(|| Error::Unsupported("kernel is not almost complete".into()))?;
                    let (sp, centralizing) = split_with_complete_kernel(&e, &s)?;
                    let verified = verify.then(|| sp.section().is_hom() && sp.complement().order() == e.gamma().order());
                    done(
                        json!({"splitting": to_value(&sp), "complement": subgroup_json(&sp.complement()), "centralizing": centralizing}),
                        "splitting over an almost complete kernel",
                        verified,
                    )
                }
            }
        }
        Verb::Lattice(c) => match c {
            LatticeCmd::Kummer { n } => {
                let r = kummer_compare(*n)?;
                done(to_value(&r), "comparison with the Kummer sequence", None)
            }
            _ => {
                let v = input(o)?;
                let m = parse_module(v.get("module").unwrap_or(&v), o.cap)?;
                match c {
                    LatticeCmd::Info => done(to_value(&m), "Galois lattice presentation", None),
                    LatticeCmd::Dual => {
                        let d = dualize(&m)?;
                        let verified = verify.then(|| d.dual().map(|dd| dd.free_rank() == m.free_rank()).unwrap_or(false));
                        done(to_value(&d), "dual lattice", verified)
                    }
                    LatticeCmd::Resolution => {
                        let r = torus_resolution(&m)?;
                        let verified = verify.then(|| r.verify().is_ok());
                        let module = |x: &GaloisLattice| to_value(x);
                        done(
                            json!({
                                "ranks": to_value(&r.ranks()),
                                "l": module(&r.l),
                                "k": module(&r.k),
                                "p": module(&r.p),
                                "c": module(&r.c),
                                "s": module(&r.s),
                                "sequences": {
                                    "l_s_c": r.seq1.maps.iter().map(to_value).collect::<Vec<_>>(),
                                    "p_s_m": r.seq2.maps.iter().map(to_value).collect::<Vec<_>>(),
                                },
                            }),
                            "permutation resolution of a Galois lattice",
                            verified,
                        )
                    }
                    LatticeCmd::Kummer { .. } => unreachable!(),
                }
            }
        },
        Verb::Nf(c) => nf(c, o),
        Verb::Descent(c) => {
            let v = input(o)?;
            let a = if v.get("gamma").is_some() || v.get("action").is_some() {
                action_doc(&v, o.cap)?
            } else {
                let g = group_doc(&v, o.cap)?;
                OuterAction::trivial(&FiniteGroup::cyclic(1), &g)
            };
            match c {
                DescentCmd::Supersolvable => {
                    let s = supersolvable_filtration(&a);
                    let verified = verify.then(|| s.filtration.as_ref().is_none_or(|f| f.verify(&a).is_ok()));
                    done(
                        json!({
                            "supersolvable": s.is_supersolvable(),
                            "class": s.class(),
                            "filtration": s.filtration.as_ref().map(to_value),
                            "frontier": to_value(&s)["frontier"],
                        }),
                        "supersolvable filtration stable under an outer action",
                        verified,
                    )
                }
                DescentCmd::Hypotheses => {
                    let n = parse_subgroup(&sub(&v, "subgroup")?, a.target())?;
                    let h = check_descent_hypotheses(&a, &n)?;
                    done(json!({"hold": h.hold(), "details": to_value(&h)}), "hypotheses for descent along a normal subgroup", None)
                }
                DescentCmd::Classify => {
                    let n = parse_subgroup(&sub(&v, "subgroup")?, a.target())?;
                    let k = classify_kernel(&a, &n, &limits)?;
                    done(to_value(&k), "splitting criteria for the kernel", None)
                }
            }
        }
    }
}

fn outer_json(a: &OuterAction) -> Value {
    let reps: serde_json::Map<String, Value> =
        a.gamma().elements().map(|g| (g.to_string(), json!(a.rep(g).images()))).collect();
    json!({"gamma_order": a.gamma().order(), "target_order": a.target().order(), "genuine": a.is_genuine(), "reps": reps})
}

fn lifted_json(l: &LiftedAction) -> Value {
    let m: serde_json::Map<String, Value> =
        l.gamma().elements().map(|g| (g.to_string(), json!(l.auto(g).images()))).collect();
    Value::Object(m)
}

fn list<T>(s: &str, f: impl Fn(&str) -> Result<T>) -> Result<Vec<T>> {
    s.split(',').map(str::trim).filter(|x| !x.is_empty()).map(f).collect()
}

fn nf(c: &NfCmd, o: &Options) -> Result<Value> {
    let element = |poly: &str, element: &str| -> Result<numfield::NfElement> {
        let field = NumberField::new(&parse_poly_str(poly)?)?;
        Ok(field.element(&parse_poly_str(element)?))
    };
    let qs = |x: &numfield::Q| numfield::fmt_q(x);
    match c {
        NfCmd::CharPoly { poly, element: e } => {
            let z = element(poly, e)?;
            let cp = z.char_poly();
            let verified = o.verify.then(|| crate::oracle::char_poly_faddeev(&z) == cp);
            done(
                json!({"char_poly": cp.coeffs().iter().map(qs).collect::<Vec<_>>(), "display": cp.to_string()}),
                "characteristic polynomial as a resultant",
                verified,
            )
        }
        NfCmd::Theta { poly, element: e, theta } => {
            let z = element(poly, e)?;
            let t: Theta = theta.parse()?;
            done(json!({"value": qs(&n_theta_eval(&z, &t)?)}), "symmetric functions of conjugates", None)
        }
        NfCmd::Hilbert { a, b, place } => {
            let (a, b) = (parse_rational_str(a)?, parse_rational_str(b)?);
            let v: Place = place.parse()?;
            done(json!({"symbol": hilbert_symbol(&a, &b, v)?}), "Hilbert symbol", None)
        }
        NfCmd::ProductFormula { a, b } => {
            let (a, b) = (parse_rational_str(a)?, parse_rational_str(b)?);
            done(json!({"holds": product_formula_check(&a, &b)?}), "Hilbert reciprocity", None)
        }
        NfCmd::NormField { alpha, split } => {
            let alphas = list(alpha, parse_rational_str)?;
            let places = list(split, |s| s.parse::<Place>())?;
            let r = find_quadratic_norm_field(&alphas, &places, o.d_bound, o.witness_bound)?;
            let verified = o.verify.then(|| r.verify());
            done(to_value(&r), "quadratic fields with prescribed norms and split places", verified)
        }
        NfCmd::TraceSquare { alpha, cyclic, ladder } => {
            let a = parse_rational_str(alpha)?;
            let t = cubic_trace_square(&a, *cyclic, *ladder)?;
            let verified = o.verify.then(|| t.verify(&a));
            done(to_value(&t), "cubic fields with a prescribed trace of a square", verified)
        }
        NfCmd::Faithful => {
            let v = input(o)?;
            let g = group_doc(&v, o.cap)?;
            let h = parse_subgroup(&sub(&v, "subgroup")?, &g)?;
            done(json!({"faithful": faithfulness_check(&h)}), "faithful coset actions", None)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, Value) {
        let mut full = vec!["descent-forge"];
        full.extend_from_slice(args);
        let out = run(full);
        (out.status, serde_json::from_str(&out.output).unwrap())
    }

    #[test]
    fn group_info_s3() {
        let (s, v) = call(&["group", "info", "--json", r#"{"points": 3, "generators": [[1,0,2],[1,2,0]]}"#]);
        assert_eq!(s, 0);
        assert_eq!(v["result"]["order"], 6);
        assert_eq!(v["result"]["class_sizes"], json!([1, 2, 3]));
        assert_eq!(v["result"]["center_trivial"], true);
    }

    #[test]
    fn descent_a5() {
        let (s, v) = call(&["descent", "supersolvable", "--json", r#"{"name": "A5"}"#]);
        assert_eq!(s, 0);
        assert_eq!(v["result"]["supersolvable"], false);
    }

    #[test]
    fn trace_square_and_errors() {
        let (s, v) = call(&["nf", "trace-square", "--alpha", "5", "--verify"]);
        assert_eq!(s, 0);
        assert_eq!(v["result"]["f"], json!(["-1", "-2", "-1", "1"]));
        assert_eq!(v["result"]["p2_check"], "5");
        assert_eq!(v["verified"], true);
        let (s, v) = call(&["nf", "trace-square", "--alpha", "-1", "--cyclic"]);
        assert_eq!(s, 2);
        assert_eq!(v["error"]["code"], "not_totally_positive");
        let (s, _) = call(&["nf", "frobnicate"]);
        assert_eq!(s, 1);
        let (s, v) = call(&["group", "info", "--json", "{"]);
        assert_eq!((s, v["error"]["code"].as_str()), (1, Some("parse")));
        let (s, _) = call(&["nf", "norm-field", "--alpha", "-1", "--split", "inf", "--d-bound", "1"]);
        assert_eq!(s, 3);
    }
}
