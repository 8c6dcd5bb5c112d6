use std::fmt::Write;
use std::path::Path;

use gradeforge_core::algebra::{
    enumerate_elementary_filters, enumerate_elementary_gradings, grading_from_relation, is_nonzero,
    relation_from_filter, span, AlgebraPresentation, ElementaryFamily, Target, Verdict, Witness,
};
use gradeforge_core::category::{enumerate_functors, enumerate_prefunctors, FinitePrecategory, MorphismMap};
use gradeforge_core::counting::{self, CountReport};
use gradeforge_core::io::{self, Document};
use gradeforge_core::magma::{
    census, enumerate_homs, enumerate_product_submagmas, enumerate_submagmas, enumerate_zero_homs,
    enumerate_zero_submagmas, FiniteMagma, PairRelation,
};
use gradeforge_core::{Budget, ElementSet};
use serde_json::{json, Value};

use crate::{Cli, Command, Failure, Formula};

pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

type Run = Result<Outcome, Failure>;

fn load(path: &Path) -> Result<Document, Failure> {
    match std::fs::read_to_string(path) {
        Ok(text) => Ok(Document::parse(&text)?),
        Err(e) => {
            // a bare table word such as `abba` stands for that magma
            let name = path.to_string_lossy();
            if !path.exists() && !name.is_empty() && name.chars().all(|c| c.is_ascii_lowercase()) {
                return Ok(Document::Magma(FiniteMagma::from_word(&name)?));
            }
            Err(Failure::Io(path.to_path_buf(), e))
        }
    }
}

fn load_magma(path: &Path) -> Result<FiniteMagma, Failure> {
    match load(path)? {
        Document::Magma(m) => Ok(m),
        _ => Err(Failure::Invalid(format!("{}: expected a magma", path.display()))),
    }
}

fn load_category(path: &Path) -> Result<FinitePrecategory, Failure> {
    match load(path)? {
        Document::Category(c) => Ok(c),
        _ => Err(Failure::Invalid(format!("{}: expected a category", path.display()))),
    }
}

fn load_family(path: &Path) -> Result<ElementaryFamily, Failure> {
    match load(path)? {
        Document::Family(w) => Ok(w),
        _ => Err(Failure::Invalid(format!("{}: expected a family", path.display()))),
    }
}

fn setup(source: &Path, target: &Path, zero: bool, field: u32) -> Result<(AlgebraPresentation, Target), Failure> {
    let (a, t) = match (load(source)?, load(target)?) {
        (Document::Magma(g), Document::Magma(h)) if zero => {
            (AlgebraPresentation::contracted(g)?, Target::zero_magma(h)?)
        }
        (Document::Magma(g), Document::Magma(h)) => (AlgebraPresentation::magma(g), Target::Magma(h)),
        (Document::Category(g), Document::Category(l)) => (AlgebraPresentation::category(g), Target::Category(l)),
        _ => {
            return Err(Failure::Invalid(
                "source and target must both be magmas or both be categories".into(),
            ))
        }
    };
    Ok((a.with_modulus(field)?, t))
}

struct Emitter {
    json: bool,
}

impl Emitter {
    fn list<T>(
        &self,
        noun: &str,
        items: &[T],
        to_json: impl Fn(&T) -> Value,
        to_text: impl Fn(&T) -> String,
    ) -> Outcome {
        let text = if self.json {
            io::render(&io::list_report(items.iter().map(to_json).collect()))
        } else {
            let mut out = format!("{} {noun}\n", items.len());
            for item in items {
                let _ = writeln!(out, "{}", to_text(item));
            }
            out
        };
        Outcome { text, ok: true }
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn magma_text(m: &FiniteMagma) -> String {
    if m.order() <= 3 {
        m.word().expect("small order")
    } else {
        (0..m.order()).map(|a| join(m.row(a))).collect::<Vec<_>>().join(" / ")
    }
}

fn relation_text(r: &PairRelation) -> String {
    let pairs: Vec<String> = r.pairs().map(|(g, h)| format!("({g},{h})")).collect();
    format!("{{{}}}", pairs.join(" "))
}

fn set_text(s: &ElementSet) -> String {
    format!("{{{}}}", join(&s.to_vec()))
}

fn family_text(w: &ElementaryFamily) -> String {
    w.parts()
        .iter()
        .enumerate()
        .map(|(h, p)| format!("{h}: {}", join(&p.to_vec())).trim_end().to_string())
        .collect::<Vec<_>>()
        .join(" | ")
}

fn functor_text(f: &MorphismMap) -> String {
    format!("objects {} | morphisms {}", join(&f.object_map), join(&f.morphism_map))
}

fn witness_text(w: Option<Witness>) -> String {
    match w {
        None => String::new(),
        Some(Witness::Pair(h, k)) => format!(" pair {h} {k}"),
        Some(Witness::Element(h)) => format!(" element {h}"),
        Some(Witness::Basis(g)) => format!(" basis {g}"),
    }
}

fn verdict_text(v: &Verdict) -> String {
    format!(
        "{} {}{}",
        v.property,
        if v.holds { "yes" } else { "no" },
        witness_text(v.witness)
    )
}

fn count_outcome(r: &CountReport, json: bool) -> Outcome {
    let text = if json {
        io::render(&io::count_report_json(r))
    } else {
        let mut out = format!("formula {}\n", r.formula_name);
        for (k, v) in &r.parameters {
            let _ = writeln!(out, "{k} {v}");
        }
        let _ = writeln!(out, "closed_form {}", counting::to_decimal(&r.closed_form_value));
        let brute = r
            .brute_force_value
            .as_ref()
            .map_or("unknown".into(), counting::to_decimal);
        let _ = writeln!(out, "brute_force {brute}");
        let agrees = r.agrees.map_or("unknown".into(), |a| a.to_string());
        let _ = writeln!(out, "agrees {agrees}");
        for (k, v) in &r.alternatives {
            let _ = writeln!(out, "{k} {}", counting::to_decimal(v));
        }
        out
    };
    Outcome { text, ok: true }
}

fn abelian_spec(s: &str) -> Result<Vec<u64>, Failure> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty() && *t != "1")
        .map(|t| {
            t.parse()
                .map_err(|_| Failure::Usage(format!("bad cyclic factor `{t}`")))
        })
        .collect()
}

fn roundtrip(g: &FiniteMagma, h: &FiniteMagma, budget: &Budget, json: bool) -> Run {
    let a = AlgebraPresentation::magma(g.clone());
    let t = Target::Magma(h.clone());
    let relations = enumerate_product_submagmas(g, h, budget)?;
    let mut families = Vec::with_capacity(relations.len());
    let (mut mf, mut fm) = (0usize, 0usize);
    for f in &relations {
        let w = grading_from_relation(&a, &t, f)?;
        let back = relation_from_filter(&a, &t, &w)?;
        mf += usize::from(&back == f);
        fm += usize::from(grading_from_relation(&a, &t, &back)? == w);
        families.push(w);
    }
    let mut monotone = true;
    for (i, f) in relations.iter().enumerate() {
        for (j, f2) in relations.iter().enumerate() {
            if f.is_subset(f2) && !families[i].is_below(&families[j]) {
                monotone = false;
            }
            if families[i].is_below(&families[j])
                && !relation_from_filter(&a, &t, &families[i])?.is_subset(&relation_from_filter(&a, &t, &families[j])?)
            {
                monotone = false;
            }
        }
    }
    let n = relations.len();
    let ok = mf == n && fm == n && monotone;
    let text = if json {
        io::render(&json!({
            "relations": n.to_string(),
            "m_of_f_identity": mf.to_string(),
            "f_of_m_identity": fm.to_string(),
            "monotone": monotone,
            "holds": ok,
        }))
    } else {
        format!("relations {n}\nm_of_f_identity {mf}\nf_of_m_identity {fm}\nmonotone {monotone}\nholds {ok}\n")
    };
    Ok(Outcome { text, ok })
}

pub fn run(cli: &Cli) -> Run {
    let g = &cli.global;
    let mut budget = Budget::default();
    if let Some(n) = g.budget {
        budget.max_nodes = n;
    }
    let out = Emitter { json: g.json };
    match &cli.command {
        Command::Census { order } => {
            let classes = census(*order, &budget)?;
            Ok(out.list("magmas", &classes, io::magma_json, magma_text))
        }
        Command::Hom { g, h, zero } => {
            let (g, h) = (load_magma(g)?, load_magma(h)?);
            let maps = if *zero {
                enumerate_zero_homs(&g, &h, &budget)?
            } else {
                enumerate_homs(&g, &h, &budget)?
            };
            Ok(out.list("maps", &maps, |f| json!(f), |f| join(f)))
        }
        Command::Submagmas { g, h, zero } => {
            let g = load_magma(g)?;
            match h {
                None => {
                    let subs = enumerate_submagmas(&g, &budget)?;
                    Ok(out.list("submagmas", &subs, |s| json!(s.to_vec()), set_text))
                }
                Some(h) => {
                    let h = load_magma(h)?;
                    let rels = if *zero {
                        enumerate_zero_submagmas(&g, &h, &budget)?
                    } else {
                        enumerate_product_submagmas(&g, &h, &budget)?
                    };
                    Ok(out.list("submagmas", &rels, io::relation_json, relation_text))
                }
            }
        }
        Command::Functors {
            source,
            target,
            prefunctors,
        } => {
            let (s, t) = (load_category(source)?, load_category(target)?);
            let maps = if *prefunctors {
                enumerate_prefunctors(&s, &t, &budget)?
            } else {
                enumerate_functors(&s, &t, &budget)?
            };
            let noun = if *prefunctors { "prefunctors" } else { "functors" };
            Ok(out.list(noun, &maps, io::morphism_map_json, functor_text))
        }
        Command::Gradings {
            source,
            target,
            zero,
            functors,
            nonzero_only,
        } => {
            let (a, t) = setup(source, target, *zero, g.field)?;
            let mut fams = enumerate_elementary_gradings(&a, &t, *functors, &budget)?;
            if *nonzero_only {
                fams.retain(|w| is_nonzero(&a, &t, w).holds);
            }
            Ok(out.list("gradings", &fams, io::family_json, family_text))
        }
        Command::Filters {
            source,
            target,
            zero,
            nonzero_only,
        } => {
            let (a, t) = setup(source, target, *zero, g.field)?;
            let mut fams = enumerate_elementary_filters(&a, &t, &budget)?;
            if *nonzero_only {
                fams.retain(|w| is_nonzero(&a, &t, w).holds);
            }
            Ok(out.list("filters", &fams, io::family_json, family_text))
        }
        Command::Verify {
            algebra,
            target,
            family,
            zero,
        } => {
            let (a, t) = setup(algebra, target, *zero, g.field)?;
            let w = load_family(family)?;
            let verdicts = span::verify(&a, &t, &w, 0)?;
            let ok = verdicts[0].holds;
            let text = if g.json {
                io::render(&json!({
                    "field": g.field.to_string(),
                    "verdicts": verdicts.iter().map(io::verdict_json).collect::<Vec<_>>(),
                }))
            } else {
                verdicts.iter().map(|v| verdict_text(v) + "\n").collect()
            };
            Ok(Outcome { text, ok })
        }
        Command::Roundtrip { g: gp, h } => roundtrip(&load_magma(gp)?, &load_magma(h)?, &budget, g.json),
        Command::Count { formula } => {
            let report = match formula {
                Formula::Matrix { n, q } => {
                    if *n == 0 || *q == 0 {
                        return Err(Failure::Usage("n and q must be positive".into()));
                    }
                    counting::matrix_group_gradings_report(*n, *q, &budget)?
                }
                Formula::GroupoidPrinted { m, n, p, q } => {
                    let value = counting::count_groupoid_gradings_as_printed(*m, *n, *p, *q)?;
                    let text = if g.json {
                        io::render(&json!({ "formula": "groupoid_printed", "value": counting::to_decimal(&value) }))
                    } else {
                        format!("formula groupoid_printed\nvalue {}\n", counting::to_decimal(&value))
                    };
                    return Ok(Outcome { text, ok: true });
                }
                Formula::Groupoid { source, target } => counting::count_functors_connected_groupoids(
                    &load_category(source)?,
                    &load_category(target)?,
                    &budget,
                )?,
                Formula::Surjections { m, n } => counting::surjective_functions_report(*m, *n, &budget)?,
                Formula::Abelian { g: gs, h } => {
                    counting::abelian_homs_report(&abelian_spec(gs)?, &abelian_spec(h)?, &budget)?
                }
                Formula::Subspaces { p, n } => counting::subspaces_report(*p, *n, &budget)?,
                Formula::Disconnected { source, target } => {
                    counting::count_disconnected(&load_category(source)?, &load_category(target)?, &budget)?
                }
            };
            Ok(count_outcome(&report, g.json))
        }
    }
}
