//! One PASS/FAIL line per acceptance criterion; exits non-zero on any FAIL.

mod common;

use std::collections::BTreeSet;
use std::fs;

use aqm::{export_matrix, parse_model, serialize_model};
use aqm_core::assurance::{evaluate, generate_checklist, generate_guidelines, GuidelineKind, Verdict};
use aqm_core::requirements::{derive_activities, validate_requirements};
use aqm_core::testkit::{random_model, Limits, ARTIFACT_TYPES};
use aqm_core::{
    rank_activities, refine, validate_model, ActivityNode, Assessability, Code, Comparator, Direction, EntityNode,
    FactRef, Measure, NodeId, QualityModel, Ratings, RequirementsDocument, Scope,
};
use common::id;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Injection = (Code, String, Box<dyn Fn(&mut QualityModel)>);
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn shipped(name: &str) -> String {
    fs::read_to_string(common::fixtures_dir().join(name)).unwrap()
}

fn random(seed: u64) -> QualityModel {
    random_model(&mut ChaCha8Rng::seed_from_u64(seed), Limits::default())
}

// Case-study ratings transcribed by hand, independent of the fixtures module.
const TABLE_1: [(&str, &[&str]); 4] = [
    ("driving", &["comfortable", "safe", "not distracted"]),
    (
        "tics_dialog",
        &[
            "informative", "attractive", "correct", "current", "agile", "dynamic", "safe", "reliable",
            "traditional", "accurate", "authentic", "intuitive", "improved",
        ],
    ),
    ("defect_correction", &["minimal"]),
    (
        "system_integration",
        &[
            "minimal hardware requirements",
            "using existing hardware components",
            "interoperable with different hardware",
        ],
    ),
];

fn case_study_reproduction() -> Outcome {
    let model = parse_model(&shipped("instrument_cluster.model.json")).map_err(|e| e.to_string())?;
    let roots: Vec<&str> = model.activities.iter().map(|a| a.id.as_str()).collect();
    ensure!(roots.len() == 4, "expected 4 top-level activities, got {roots:?}");

    let skeleton = aqm::load_requirements(&model, &shipped("instrument_cluster.req.json")).map_err(|e| e.to_string())?;
    let order: Vec<NodeId> = TABLE_1.iter().map(|(a, _)| id(a)).collect();
    let derived = derive_activities(&model, &skeleton.stakeholders).map_err(|e| e.to_string())?;
    let ranking = rank_activities(&derived, &order, 4).map_err(|e| e.to_string())?;
    let mut doc = skeleton.with_ranking(ranking);
    for (a, ratings) in TABLE_1 {
        doc = doc
            .set_qualitative(&id(a), Ratings::listed(ratings.iter().copied()))
            .map_err(|e| e.to_string())?;
    }
    for (q, (a, ratings)) in doc.qualitative.iter().zip(TABLE_1) {
        ensure!(q.activity.as_str() == a, "qualitative order: {} vs {a}", q.activity);
        let listed: Vec<String> = ratings.iter().map(|s| s.to_string()).collect();
        ensure!(q.ratings == Ratings::Listed(listed), "ratings of {a}: {}", q.ratings);
    }
    ensure!(doc.qualitative.len() == 4, "{} qualitative entries", doc.qualitative.len());
    ensure!(doc.qualitative[0].ratings.to_string() == "comfortable, safe, not distracted", "driving text");

    let mut refined = Vec::new();
    for a in ["driving", "tics_dialog"] {
        refined.extend(refine(&model, &id(a)).map_err(|e| e.to_string())?);
    }
    let got: BTreeSet<(String, String, &str, String)> = refined
        .iter()
        .map(|r| (r.fact.entity.to_string(), r.fact.attribute.clone(), r.direction.symbol(), r.via.to_string()))
        .collect();
    let want: BTreeSet<(String, String, &str, String)> = [
        ("vehicle.tics.hardware.display.position", "appropriateness", "+", "driving"),
        ("vehicle.tics.software.output_data.representation", "unambiguousness", "+", "tics_dialog.processing"),
        ("vehicle.tics.software.output_data.representation", "adaptability", "+", "tics_dialog.perception"),
    ]
    .into_iter()
    .map(|(e, a, d, v)| (e.to_string(), a.to_string(), d, v.to_string()))
    .collect();
    ensure!(refined.len() == 3 && got == want, "refined {got:?}");
    doc = doc.add_refined(refined);

    doc = doc.quantify(&model, common::position_tolerance()).map_err(|e| e.to_string())?;
    let q = doc.quantified.last().unwrap();
    let fact = FactRef::new(id("vehicle.tics.hardware.display.position"), "appropriateness");
    let expected = Measure::Threshold {
        metric: "display_tolerance_deg".into(),
        comparator: Comparator::WithinAbs,
        threshold: 1.5,
        nominal: None,
        unit: "degree".into(),
    };
    ensure!(q.scope == Scope::Fact(fact) && q.measure == expected, "quantified {q}");
    ensure!(validate_requirements(&model, &doc).is_empty(), "document does not validate");

    // The shipped case-study document extends this with the prose constraint.
    let shipped_doc = aqm::load_requirements(&model, &shipped("instrument_cluster.case_study.req.json"))
        .map_err(|e| e.to_string())?;
    let mut prefix = shipped_doc.clone();
    prefix.quantified.truncate(1);
    ensure!(prefix == doc, "shipped case-study document differs from the pipeline output");
    Ok("4 activities, 3 refined requirements, within_abs 1.5 degree".into())
}

fn maintainability_guidelines() -> Outcome {
    let model = parse_model(&shipped("maintainability.model.json")).map_err(|e| e.to_string())?;
    let set = generate_guidelines(&model);
    let has = |kind: GuidelineKind, entity: &str, attribute: &str, activity: &str| {
        set.items.iter().any(|g| {
            g.kind == kind
                && g.fact.entity.as_str() == entity
                && g.fact.attribute == attribute
                && g.activity.as_str() == activity
        })
    };
    ensure!(
        has(GuidelineKind::Do, "situation.code.identifiers", "conciseness", "maintenance.concept_location"),
        "no do-item for identifier conciseness"
    );
    ensure!(
        has(GuidelineKind::Dont, "situation.code.variables", "superfluousness", "maintenance.modification"),
        "no dont-item for superfluous variables"
    );
    Ok(format!("{} guidelines", set.items.len()))
}

fn descendants_by_walk(node: &ActivityNode, out: &mut BTreeSet<NodeId>) {
    out.insert(node.id.clone());
    for c in &node.children {
        descendants_by_walk(c, out);
    }
}

fn find_activity<'a>(forest: &'a [ActivityNode], id: &NodeId) -> Option<&'a ActivityNode> {
    forest
        .iter()
        .find_map(|n| if n.id == *id { Some(n) } else { find_activity(&n.children, id) })
}

/// Entity path → tags on the node and all its ancestors, by explicit walk.
fn inherited_tags(forest: &[EntityNode], above: &BTreeSet<String>, out: &mut Vec<(NodeId, BTreeSet<String>)>) {
    for n in forest {
        let mut tags = above.clone();
        tags.extend(n.artifact_types.iter().cloned());
        out.push((n.id.clone(), tags.clone()));
        inherited_tags(&n.children, &tags, out);
    }
}

fn oracle_equivalence() -> Outcome {
    const MODELS: u64 = 500;
    let mut checks = 0usize;
    for seed in 0..MODELS {
        let m = random(seed);
        let mut all = Vec::new();
        fn collect(f: &[ActivityNode], out: &mut Vec<NodeId>) {
            for n in f {
                out.push(n.id.clone());
                collect(&n.children, out);
            }
        }
        collect(&m.activities, &mut all);
        for a in &all {
            let mut desc = BTreeSet::new();
            descendants_by_walk(find_activity(&m.activities, a).unwrap(), &mut desc);
            let want: Vec<(FactRef, NodeId, Direction)> = m
                .impacts
                .iter()
                .filter(|i| desc.contains(&i.activity))
                .map(|i| (i.fact.clone(), i.activity.clone(), i.direction))
                .collect();
            let got: Vec<(FactRef, NodeId, Direction)> = refine(&m, a)
                .map_err(|e| e.to_string())?
                .into_iter()
                .map(|r| (r.fact, r.via, r.direction))
                .collect();
            ensure!(got == want, "seed {seed}: refine({a}) disagrees");
            checks += 1;
        }
        let mut tags = Vec::new();
        inherited_tags(&m.entities, &BTreeSet::new(), &mut tags);
        for tag in ARTIFACT_TYPES {
            let want: BTreeSet<FactRef> = m
                .facts
                .iter()
                .filter(|f| {
                    f.assessability == Assessability::Manual
                        && tags.iter().any(|(e, t)| *e == f.entity && t.contains(tag))
                })
                .map(|f| f.key())
                .collect();
            let list = generate_checklist(&m, tag);
            let got: Vec<FactRef> = list.items.iter().map(|i| i.fact.clone()).collect();
            ensure!(got.len() == want.len() && got.iter().cloned().collect::<BTreeSet<_>>() == want, "seed {seed}: checklist({tag}) disagrees");
            checks += 1;
        }
    }
    Ok(format!("{MODELS} models, {checks} comparisons, 100% agreement"))
}

fn round_trip() -> Outcome {
    const MODELS: u64 = 1000;
    for seed in 0..MODELS {
        let m = random(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let first = serialize_model(&m);
        let second = serialize_model(&m);
        ensure!(first == second, "seed {seed}: serialization not deterministic");
        let back = parse_model(&first).map_err(|e| format!("seed {seed}: {e}"))?;
        ensure!(back == m, "seed {seed}: parse(serialize(m)) != m");
    }
    Ok(format!("{MODELS} models"))
}

fn single_defect_detection() -> Outcome {
    let base = parse_model(&shipped("instrument_cluster.model.json")).map_err(|e| e.to_string())?;
    let mut injections = 0usize;
    let mut model_defect = |name: &str, code: Code, inject: &dyn Fn(&mut QualityModel)| -> Result<(), String> {
        let mut m = base.clone();
        inject(&mut m);
        ensure!(validate_model(&m).iter().any(|d| d.code == code), "{name}: validate_model missed {code}");
        let err = parse_model(&serialize_model(&m)).err().ok_or(format!("{name}: parse accepted the defect"))?;
        ensure!(err.diagnostics().iter().any(|d| d.code == code), "{name}: parse_model missed {code}");
        injections += 2;
        Ok(())
    };
    model_defect("dangling impact entity", Code::DanglingImpactEntity, &|m| {
        m.impacts[0].fact.entity = NodeId::from_raw("vehicle.tics.hardware.speaker")
    })?;
    model_defect("dangling impact activity", Code::DanglingImpactActivity, &|m| {
        m.impacts[1].activity = NodeId::from_raw("parking")
    })?;
    model_defect("duplicate fact", Code::DuplicateFact, &|m| {
        let f = m.facts[1].clone();
        m.facts.push(f)
    })?;
    model_defect("duplicate impact", Code::DuplicateImpact, &|m| {
        let i = m.impacts[2].clone();
        m.impacts.push(i)
    })?;
    model_defect("unknown attribute", Code::UnknownAttribute, &|m| m.facts[0].attribute = "beauty".into())?;
    model_defect("bad segment", Code::BadSegment, &|m| {
        m.entities[0].children[0].id = NodeId::from_raw("vehicle.Driver")
    })?;

    let doc = aqm::load_requirements(&base, &shipped("instrument_cluster.case_study.req.json")).map_err(|e| e.to_string())?;
    let mut doc_defect = |name: &str, code: Code, inject: &dyn Fn(&mut RequirementsDocument)| -> Result<(), String> {
        let mut d = doc.clone();
        inject(&mut d);
        ensure!(validate_requirements(&base, &d).iter().any(|x| x.code == code), "{name}: missed {code}");
        let text = aqm::serialize_requirements(&d);
        let err = aqm::load_requirements(&base, &text).err().ok_or(format!("{name}: load accepted the defect"))?;
        ensure!(err.diagnostics().iter().any(|x| x.code == code), "{name}: load missed {code}");
        injections += 2;
        Ok(())
    };
    doc_defect("cutoff out of range", Code::CutoffOutOfRange, &|d| d.ranking.cutoff = 5)?;
    doc_defect("non-permutation ranking", Code::NonPermutationRanking, &|d| {
        d.ranking.ordered[3] = NodeId::from_raw("driving")
    })?;

    // The same model defects on random models, located by index.
    let mut random_hits = 0usize;
    for seed in 0..200u64 {
        let m = random(seed);
        if m.impacts.is_empty() || m.facts.is_empty() {
            continue;
        }
        let k = seed as usize % m.impacts.len();
        let cases: [Injection; 5] = [
            (Code::DanglingImpactEntity, format!("impacts[{k}].entity"), Box::new(move |m| m.impacts[k].fact.entity = NodeId::from_raw("zz"))),
            (Code::DanglingImpactActivity, format!("impacts[{k}].activity"), Box::new(move |m| m.impacts[k].activity = NodeId::from_raw("zz"))),
            (Code::DuplicateFact, format!("facts[{}]", m.facts.len()), Box::new(|m| { let f = m.facts[0].clone(); m.facts.push(f) })),
            (Code::DuplicateImpact, format!("impacts[{}]", m.impacts.len()), Box::new(move |m| { let i = m.impacts[k].clone(); m.impacts.push(i) })),
            (Code::UnknownAttribute, "facts[0].attribute".into(), Box::new(|m| m.facts[0].attribute = "zz".into())),
        ];
        for (code, path, inject) in cases {
            let mut bad = m.clone();
            inject(&mut bad);
            ensure!(
                validate_model(&bad).iter().any(|d| d.code == code && d.path == path),
                "seed {seed}: {code} not reported at {path}"
            );
            random_hits += 1;
        }
    }
    Ok(format!("8 classes, {injections} fixture injections and {random_hits} random injections detected"))
}

fn within(v: f64) -> bool {
    (-1.5..=1.5).contains(&v)
}

fn conformance_arithmetic() -> Outcome {
    let model = parse_model(&shipped("instrument_cluster.model.json")).map_err(|e| e.to_string())?;
    let doc = aqm::load_requirements(&model, &shipped("instrument_cluster.case_study.req.json")).map_err(|e| e.to_string())?;
    let verdict = |values: &[f64]| evaluate(&model, &doc, &common::position_report(values)).evaluations[0].verdict;
    for v in [0.0, 1.5, -1.5, 1.5000001, -2.0] {
        let want = if within(v) { Verdict::Pass } else { Verdict::Fail };
        ensure!(verdict(&[v]) == want, "{v}: got {:?}", verdict(&[v]));
    }
    ensure!(verdict(&[0.0]) == Verdict::Pass && verdict(&[1.5000001]) == Verdict::Fail, "expectation table");
    ensure!(verdict(&[]) == Verdict::NoData, "absent value is not no_data");

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let d = dir.path();
    for name in ["instrument_cluster.model.json", "instrument_cluster.case_study.req.json", "instrument_cluster.metrics.json"] {
        fs::write(d.join(name), shipped(name)).map_err(|e| e.to_string())?;
    }
    let run = |report: &str| {
        common::code(&common::aqm(
            &["evaluate", "instrument_cluster.model.json", "--req", "instrument_cluster.case_study.req.json", "--report", report],
            d,
        ))
    };
    ensure!(run("instrument_cluster.metrics.json") == 0, "CLI exit for 1.2 is not 0");
    for (i, v) in [1.6, 1.5000001, -2.0].into_iter().enumerate() {
        let name = format!("fail{i}.metrics.json");
        fs::write(d.join(&name), aqm::serialize_metrics(&common::position_report(&[v]))).map_err(|e| e.to_string())?;
        ensure!(run(&name) == 1, "CLI exit for {v} is not 1");
    }
    Ok("pass {0, ±1.5}, fail {1.5000001, -2}, no_data when absent; CLI 0/1".into())
}

fn matrix_export() -> Outcome {
    let model = parse_model(&shipped("instrument_cluster.model.json")).map_err(|e| e.to_string())?;
    let csv_text = export_matrix(&model);
    let mut reader = csv::Reader::from_reader(csv_text.as_bytes());
    let header: Vec<String> = reader.headers().map_err(|e| e.to_string())?.iter().map(str::to_owned).collect();
    let rows: Vec<csv::StringRecord> = reader.records().collect::<Result<_, _>>().map_err(|e| e.to_string())?;

    fn leaves(f: &[ActivityNode], out: &mut Vec<NodeId>) {
        for n in f {
            if n.children.is_empty() {
                out.push(n.id.clone());
            }
            leaves(&n.children, out);
        }
    }
    let mut leaf_ids = Vec::new();
    leaves(&model.activities, &mut leaf_ids);
    let want_cells = model.impacts.iter().filter(|i| leaf_ids.contains(&i.activity)).count();
    let got_cells = rows.iter().flat_map(|r| r.iter().skip(1)).filter(|c| !c.is_empty()).count();
    ensure!(header.len() == leaf_ids.len() + 1 && rows.len() == model.facts.len(), "matrix shape");
    ensure!(got_cells == want_cells, "{got_cells} non-empty cells, {want_cells} leaf impacts");
    let col = header.iter().position(|h| h == "driving").ok_or("no driving column")?;
    let row = rows
        .iter()
        .find(|r| &r[0] == "vehicle.tics.hardware.display.position | appropriateness")
        .ok_or("no display.position row")?;
    ensure!(&row[col] == "+", "driving cell is `{}`", &row[col]);

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    fs::write(dir.path().join("m.model.json"), shipped("instrument_cluster.model.json")).map_err(|e| e.to_string())?;
    let out = common::aqm(&["matrix", "m.model.json"], dir.path());
    ensure!(common::stdout(&out) == csv_text, "CLI matrix differs from export_matrix");
    Ok(format!("{got_cells} non-empty cells == {want_cells} leaf impacts; driving cell `+`"))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("case-study reproduction", case_study_reproduction),
        ("maintainability guidelines", maintainability_guidelines),
        ("oracle equivalence", oracle_equivalence),
        ("round-trip", round_trip),
        ("single-defect detection", single_defect_detection),
        ("conformance arithmetic", conformance_arithmetic),
        ("matrix export", matrix_export),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
