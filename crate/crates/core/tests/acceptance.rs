//! One PASS/FAIL line per acceptance criterion. Runs without the libtest
//! harness so the lines are always printed:
//! `cargo test -p relindex-core --test acceptance`.

use std::collections::BTreeSet;
use std::path::Path;
use std::time::Instant;

use relindex::absmodel::{
    bundled_models, check_axioms, load_model, product_model, reevaluate, Axiom, ModelError, StructuralLaw,
};
use relindex::domains::{is_bijection, is_difunctional, is_per, ldom};
use relindex::indexcore::{relation_index, splitting, verify_index, verify_per_index, Policy};
use relindex::isomorph::{find_isomorphism, is_isomorphic, verify_witness};
use relindex::laws::{
    manifest, registry, run_laws, run_suite, shrink, Counterexample, Kind, Law, LawReport, Mode, SuiteConfig, Var,
};
use relindex::pointlattice::{all_or_nothing, decompose_to_pairs, Outcome};
use relindex::relcore::{enumerate_relations_bounded, Carrier, Relation};

const POLICIES: [Policy; 3] = [Policy::Smallest, Policy::Largest, Policy::Seeded(11)];

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_relations(n: usize, m: usize) -> Vec<Relation> {
    let (a, b) = (Carrier::indexed("A", n), Carrier::indexed("B", m));
    enumerate_relations_bounded(&a, &b, 16).expect("small").collect()
}

fn sizes(max: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=max).flat_map(move |n| (1..=max).map(move |m| (n, m)))
}

fn fixture(name: &str) -> String {
    let p = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name);
    std::fs::read_to_string(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()))
}

fn failing(reports: &[LawReport]) -> Vec<&str> {
    reports.iter().filter(|r| !r.passed()).map(|r| r.id).collect()
}

/// Indexes by definition, computed elementwise from rows and columns.
mod oracle {
    use relindex::Relation;

    fn rows(r: &Relation) -> Vec<Vec<bool>> {
        let (n, m) = (r.src().size(), r.dst().size());
        (0..n).map(|a| (0..m).map(|b| r.contains(a, b)).collect()).collect()
    }

    fn cols(r: &Relation) -> Vec<Vec<bool>> {
        let (n, m) = (r.src().size(), r.dst().size());
        (0..m).map(|b| (0..n).map(|a| r.contains(a, b)).collect()).collect()
    }

    /// `x ≈ y` in a per domain: same nonempty row.
    fn related(v: &[Vec<bool>], x: usize, y: usize) -> bool {
        v[x] == v[y] && v[x].iter().any(|&t| t)
    }

    pub fn is_index(r: &Relation, j: &Relation) -> bool {
        let (rr, rc) = (rows(r), cols(r));
        let (n, m) = (r.src().size(), r.dst().size());
        let jp: Vec<(usize, usize)> = j.pairs().collect();
        if jp.iter().any(|&(a, b)| !r.contains(a, b)) {
            return false;
        }
        for a in 0..n {
            for b in 0..m {
                let via = jp.iter().any(|&(a2, b2)| related(&rr, a, a2) && related(&rc, b2, b));
                if via != r.contains(a, b) {
                    return false;
                }
            }
        }
        let jl: Vec<usize> = (0..n).filter(|&a| jp.iter().any(|p| p.0 == a)).collect();
        let jr: Vec<usize> = (0..m).filter(|&b| jp.iter().any(|p| p.1 == b)).collect();
        let separated = |d: &[usize], v: &[Vec<bool>]| {
            d.iter().all(|&x| d.iter().all(|&y| x == y || !related(v, x, y)))
        };
        separated(&jl, &rr) && separated(&jr, &rc)
    }

    pub fn indexes(r: &Relation) -> Vec<Relation> {
        let pairs: Vec<(usize, usize)> = r.pairs().collect();
        (0u32..1 << pairs.len())
            .map(|mask| {
                let sel = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, p)| *p);
                Relation::from_pairs(r.src(), r.dst(), sel).expect("in range")
            })
            .filter(|j| is_index(r, j))
            .collect()
    }

    /// Number of classes of a per.
    pub fn classes(p: &Relation) -> usize {
        let rr = rows(p);
        let mut seen: Vec<&Vec<bool>> = Vec::new();
        for row in rr.iter().filter(|row| row.iter().any(|&t| t)) {
            if !seen.contains(&row) {
                seen.push(row);
            }
        }
        seen.len()
    }
}

fn c1_exhaustive_size2() -> Verdict {
    let cfg = SuiteConfig {
        max_size: 2,
        ..SuiteConfig::default()
    };
    let reports = run_suite(&cfg).map_err(|e| e.to_string())?;
    check(reports.len() >= 60, || format!("only {} laws", reports.len()))?;
    check(failing(&reports).is_empty(), || format!("failing: {:?}", failing(&reports)))?;
    check(reports.iter().all(|r| r.mode == Mode::Exhaustive), || "not all exhaustive".into())?;
    // sizes (1,1) (1,2) (2,1) (2,2): 2 + 4 + 4 + 16 relations
    let bounds = reports.iter().find(|r| r.id == "lattice.bounds").ok_or("lattice.bounds missing")?;
    check(bounds.instances == 26, || format!("lattice.bounds saw {} instances", bounds.instances))?;
    let ids: Vec<&str> = registry().iter().map(|l| l.id).collect();
    check(manifest::dangling(&ids).is_empty() && manifest::unmapped(&ids).is_empty(), || {
        "manifest gaps".into()
    })?;
    let instances: u64 = reports.iter().map(|r| r.instances).sum();
    Ok(format!("{} laws, {instances} instances, 0 failures", reports.len()))
}

fn c2_sampled_size3() -> Verdict {
    let cfg = SuiteConfig {
        max_size: 3,
        samples: 2000,
        seed: 42,
        ..SuiteConfig::default()
    };
    let reports = run_suite(&cfg).map_err(|e| e.to_string())?;
    check(failing(&reports).is_empty(), || format!("failing: {:?}", failing(&reports)))?;
    let sampled = reports.iter().filter(|r| r.mode == Mode::Sampled).count();
    let instances: u64 = reports.iter().map(|r| r.instances).sum();
    Ok(format!("{} laws ({sampled} sampled), {instances} instances, 0 failures", reports.len()))
}

fn c3_index_soundness() -> Verdict {
    let rels = all_relations(3, 3);
    check(rels.len() == 512, || format!("{} relations", rels.len()))?;
    let mut oracle_total = 0;
    for r in &rels {
        let all = oracle::indexes(r);
        check(!all.is_empty(), || format!("oracle finds no index of\n{r}"))?;
        oracle_total += all.len();
        for p in POLICIES {
            let cert = relation_index(r, p).map_err(|e| e.to_string())?;
            let again = verify_index(r, &cert.index).map_err(|e| e.to_string())?;
            check(cert.is_index() && again.is_index(), || format!("{p:?} failed verification on\n{r}"))?;
            check(all.contains(&cert.index), || format!("{p:?} index not among the oracle's for\n{r}"))?;
        }
    }
    Ok(format!("512 relations, 3 policies, {oracle_total} oracle indexes"))
}

fn c4_index_isomorphy() -> Verdict {
    let mut pairs_checked = 0;
    for r in all_relations(2, 3) {
        let all = oracle::indexes(&r);
        for (i, j) in all.iter().enumerate() {
            for k in &all[i + 1..] {
                let w = find_isomorphism(j, k)
                    .map_err(|e| e.to_string())?
                    .ok_or_else(|| format!("indexes of\n{r}are not isomorphic:\n{j}\n{k}"))?;
                let wc = verify_witness(j, k, &w.phi, &w.psi).map_err(|e| e.to_string())?;
                check(wc.all(), || format!("bad witness for\n{j}\n{k}"))?;
                pairs_checked += 1;
            }
        }
    }
    Ok(format!("64 relations, {pairs_checked} index pairs isomorphic"))
}

fn c5_difunction_bijection() -> Verdict {
    let (mut total, mut difun) = (0, 0);
    for (n, m) in sizes(3) {
        for r in all_relations(n, m) {
            let d = is_difunctional(&r);
            for p in POLICIES {
                let j = relation_index(&r, p).map_err(|e| e.to_string())?.index;
                if d {
                    check(is_bijection(&j), || format!("index of difunctional\n{r}is not a bijection"))?;
                }
                check(is_difunctional(&j) == d, || format!("difunctionality differs for\n{r}"))?;
            }
            total += 1;
            difun += d as usize;
        }
    }
    Ok(format!("{total} relations, {difun} difunctional"))
}

fn c6_splittings() -> Verdict {
    let mut count = 0;
    for n in 1..=4 {
        let c = Carrier::indexed("A", n);
        let pers = enumerate_relations_bounded(&c, &c, 16)
            .expect("small")
            .filter(|r| is_per(r).unwrap_or(false));
        for p in pers {
            let mut cores = Vec::new();
            for pol in POLICIES {
                let f = splitting(&p, pol).map_err(|e| e.to_string())?;
                let fl = ldom(&f).as_relation().clone();
                let ok = f.compose(&f.converse()).map_err(|e| e.to_string())? == fl
                    && f.converse().compose(&f).map_err(|e| e.to_string())? == p;
                check(ok, || format!("{pol:?} splitting equations fail for\n{p}"))?;
                let pc = verify_per_index(&p, &fl).map_err(|e| e.to_string())?;
                check(pc.all(), || format!("f< is not an index of\n{p}"))?;
                check(fl.count() == oracle::classes(&p), || format!("f< misses classes of\n{p}"))?;
                cores.push(fl);
            }
            for (i, a) in cores.iter().enumerate() {
                for b in &cores[i + 1..] {
                    check(is_isomorphic(a, b).map_err(|e| e.to_string())?, || {
                        format!("index coreflexives of\n{p}are not isomorphic")
                    })?;
                }
            }
            count += 1;
        }
    }
    // pers on n elements are counted by the Bell number B(n+1)
    check(count == 2 + 5 + 15 + 52, || format!("{count} pers"))?;
    Ok(format!("{count} pers up to size 4"))
}

fn c7_pair_correspondence() -> Verdict {
    let mut compositions = 0;
    for (n, m) in sizes(2) {
        for k in 1..=2 {
            let rs = all_relations(n, m);
            let ss: Vec<Relation> = {
                let (b, c) = (Carrier::indexed("B", m), Carrier::indexed("C", k));
                enumerate_relations_bounded(&b, &c, 16).expect("small").collect()
            };
            for r in &rs {
                let rp: BTreeSet<(usize, usize)> = decompose_to_pairs(r).into_iter().collect();
                let conv: BTreeSet<(usize, usize)> = decompose_to_pairs(&r.converse()).into_iter().collect();
                check(conv == rp.iter().map(|&(a, b)| (b, a)).collect(), || format!("converse mismatch\n{r}"))?;
                for s in &ss {
                    let sp: BTreeSet<(usize, usize)> = decompose_to_pairs(s).into_iter().collect();
                    let joined: BTreeSet<(usize, usize)> = rp
                        .iter()
                        .flat_map(|&(a, b)| sp.iter().filter(move |p| p.0 == b).map(move |&(_, c)| (a, c)))
                        .collect();
                    let rs_pairs: BTreeSet<(usize, usize)> =
                        decompose_to_pairs(&r.compose(s).map_err(|e| e.to_string())?).into_iter().collect();
                    check(joined == rs_pairs, || format!("composition mismatch\n{r}{s}"))?;
                    compositions += 1;
                }
            }
        }
    }
    for (n, m) in sizes(3) {
        let rels = all_relations(n, m);
        let top_pairs = decompose_to_pairs(&Relation::top(rels[0].src(), rels[0].dst())).len();
        let distinct: BTreeSet<Vec<(usize, usize)>> = rels.iter().map(decompose_to_pairs).collect();
        check(rels.len() == 1 << (n * m) && rels.len() == 1 << top_pairs && distinct.len() == rels.len(), || {
            format!("count identity fails at {n}x{m}")
        })?;
    }
    Ok(format!("{compositions} compositions; counts match up to 3x3"))
}

fn c8_all_or_nothing() -> Verdict {
    let mut cases = 0;
    for (n, m) in sizes(3) {
        for r in all_relations(n, m) {
            for a in 0..n {
                for b in 0..m {
                    let (pa, pb) = (Relation::point(r.src(), a), Relation::point(r.dst(), b));
                    let got = all_or_nothing(&r, &pa, &pb).map_err(|e| e.to_string())?;
                    let want = if r.contains(a, b) { Outcome::Full } else { Outcome::Bottom };
                    check(got == want, || format!("points {a},{b} on\n{r}"))?;
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("{cases} (R, a, b) triples"))
}

fn c9_axiom_matrix() -> Verdict {
    use Axiom::*;
    let t = |a| (a, true);
    let f = |a| (a, false);
    type Row = (&'static str, Vec<(Axiom, bool)>);
    let matrix: [Row; 6] = [
        ("one_element", vec![t(Cone), t(Choice), t(AllOrNothing), t(Extensional)]),
        ("two_element", vec![t(Cone), t(Choice), t(AllOrNothing), t(Extensional)]),
        ("three_element", vec![t(Cone), t(Extensional), f(Choice), f(AllOrNothing), t(UniversalChoice)]),
        ("three_element_id_top", vec![f(Cone)]),
        ("four_element_point", vec![t(AllOrNothing), f(Cone), f(Choice), f(Extensional)]),
        ("desharnais13", vec![t(Cone), t(AllOrNothing), f(Choice)]),
    ];
    let models = bundled_models();
    for (name, flags) in &matrix {
        let b = models.iter().find(|b| b.name == *name).ok_or_else(|| format!("{name} not bundled"))?;
        let rep = check_axioms(&b.model);
        check(b.expected.mismatches(&rep).is_empty(), || format!("{name}: {:?}", b.expected.mismatches(&rep)))?;
        for &(ax, want) in flags {
            check(rep.get(ax).holds == want, || format!("{name}: {ax:?} should be {want}"))?;
        }
        for ax in Axiom::ALL {
            let o = rep.get(ax);
            check(o.holds == o.counterexample.is_none(), || format!("{name}: {ax:?} evidence"))?;
            if let Some(cx) = &o.counterexample {
                check(reevaluate(&b.model, ax, cx), || format!("{name}: {ax:?} counterexample {cx:?} does not replay"))?;
            }
        }
        for ax in [Lattice, Monoid, Converse] {
            check(rep.get(ax).holds, || format!("{name}: {ax:?} fails"))?;
        }
    }
    let d13 = models.iter().find(|b| b.name == "desharnais13").expect("bundled");
    check(d13.model.size() == 13, || format!("desharnais13 has {} elements", d13.model.size()))?;

    let two = &models.iter().find(|b| b.name == "two_element").expect("bundled").model;
    let prod = product_model(two, two);
    let from_file = load_model(&fixture("product_two_two.json")).map_err(|e| e.to_string())?;
    check(prod == from_file, || "product fixture differs from the construction".into())?;
    let rep = check_axioms(&prod);
    let failed: Vec<Axiom> = Axiom::ALL.into_iter().filter(|&a| !rep.get(a).holds).collect();
    check(failed == [Cone], || format!("product fails {failed:?}"))?;
    Ok(format!("{} models match, product fails only the cone rule", matrix.len()))
}

fn falsified_law() -> Law {
    fn every_relation_is_difunctional(x: &relindex::laws::Ctx) -> Result<bool, relindex::laws::LawError> {
        Ok(is_difunctional(&x.vars[0]))
    }
    Law {
        id: "falsified.difunctional",
        statement: "every relation is difunctional",
        slots: vec!["A", "B"],
        vars: vec![Var {
            name: "R",
            kind: Kind::Any,
            src: 0,
            dst: 1,
        }],
        check: every_relation_is_difunctional,
    }
}

fn c10_harness_self_test() -> Verdict {
    let mut laws: Vec<Law> = registry().into_iter().filter(|l| l.id.starts_with("lattice.")).collect();
    laws.push(falsified_law());
    let cfg = SuiteConfig {
        max_size: 3,
        ..SuiteConfig::default()
    };
    let reports = run_laws(&laws, &cfg).map_err(|e| e.to_string())?;
    check(failing(&reports) == ["falsified.difunctional"], || format!("failing: {:?}", failing(&reports)))?;
    let law = falsified_law();
    let cx = reports
        .iter()
        .find(|r| !r.passed())
        .and_then(|r| r.counterexample.clone())
        .ok_or("no counterexample")?;
    // smallest non-difunctional relation: two sources, two targets, three pairs
    check(cx.weight() == 7, || format!("counterexample not minimal: {cx:?}"))?;
    let ctx = cx.to_ctx(&law).map_err(|e| e.to_string())?;
    check(law.fails(&ctx), || "counterexample does not replay".into())?;

    let padded: Counterexample = serde_json::from_str(&fixture("padded_counterexample.json")).map_err(|e| e.to_string())?;
    let pctx = padded.to_ctx(&law).map_err(|e| e.to_string())?;
    check(law.fails(&pctx), || "padded fixture does not fail".into())?;
    let shrunk = Counterexample::from_ctx(&law, &shrink(&law, pctx));
    check(shrunk.weight() < padded.weight() && shrunk.weight() == 7, || format!("shrunk to {shrunk:?}"))?;
    let reshrunk = Counterexample::from_ctx(&law, &shrink(&law, shrunk.to_ctx(&law).map_err(|e| e.to_string())?));
    check(reshrunk == shrunk, || "shrinking a minimal instance changed it".into())?;

    match load_model(&fixture("corrupted_three_element.json")) {
        Err(ModelError::Structural(fs)) => {
            check(fs.len() == 1 && fs[0].law == StructuralLaw::Distributivity, || format!("{fs:?}"))?;
            check(fs[0].witness.len() == 3, || format!("{:?}", fs[0].witness))?;
            Ok(format!(
                "falsified law shrunk to weight {} (from {}); corrupted model: {}",
                shrunk.weight(),
                padded.weight(),
                fs[0]
            ))
        }
        other => Err(format!("corrupted model gave {other:?}")),
    }
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("exhaustive law suite at size 2", c1_exhaustive_size2),
        ("sampled law suite at size 3, seed 42", c2_sampled_size3),
        ("index soundness over all 3x3 relations", c3_index_soundness),
        ("indexes of 2x3 relations are isomorphic", c4_index_isomorphy),
        ("difunctions have bijective indexes", c5_difunction_bijection),
        ("per splittings up to size 4", c6_splittings),
        ("pairs respect composition, converse and counting", c7_pair_correspondence),
        ("all-or-nothing agrees with membership", c8_all_or_nothing),
        ("axiom matrix of the bundled models", c9_axiom_matrix),
        ("harness self-test", c10_harness_self_test),
    ];
    let mut failures = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = run();
        let secs = start.elapsed().as_secs_f64();
        match &verdict {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                println!("FAIL {:>2} {name}: {why} ({secs:.1}s)", i + 1);
                failures.push(i + 1);
            }
        }
    }
    if !failures.is_empty() {
        eprintln!("failed criteria: {failures:?}");
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
