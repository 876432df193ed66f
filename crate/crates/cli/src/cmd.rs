//! The subcommands.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use qeuler::bijections::{
    gamma, gr_eta, gr_phi, increasing_factorization_by, lyndon_factorization_by, Banner, Ornament,
};
use qeuler::combinatorics::{
    admissible_inversions, barred_word, enumerate_perms_capped, exc, fix, format_word, maj,
    parse_word, statistics, Alphabet, BarredPermutation, BicolorLetter, Partition, Permutation,
};
use qeuler::eulerian::{char_table, exc_table, q_lambda, q_lambda_t, q_n_tr, q_nj, q_njk, to_h};
use qeuler::poly::{MPoly, Var};
use qeuler::registry::{find, suites, Suite};
use qeuler::report::Report;
use qeuler::shelling::{aid, phi_map, psi_map};
use qeuler::symfunc::{mask_to_set, QSymBasis, SymBasis};
use qeuler::Caps;
use serde_json::{json, Value};

use crate::out::{Out, Table};
use crate::spec::parse_poset;
use crate::{BasisArg, BijectKind, CliError, ExpandArgs, OrderArg, PosetKind, TableKind, VerifyArgs};

type Res = Result<Out, CliError>;

fn usage<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Usage(msg.into()))
}

/// Digits run together when every value is below 10, as in one-line notation.
fn fmt_values(v: &[u32]) -> String {
    let sep = if v.iter().all(|&x| x < 10) { "" } else { "," };
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(sep)
}

fn parse_values(s: &str) -> Result<Vec<u32>, CliError> {
    let s = s.trim();
    let parsed: Option<Vec<u32>> = if s.contains([',', ' ']) {
        s.split([',', ' ']).filter(|t| !t.is_empty()).map(|t| t.parse().ok()).collect()
    } else {
        s.chars().map(|c| c.to_digit(10)).collect()
    };
    match parsed {
        Some(v) if !v.contains(&0) => Ok(v),
        _ => usage(format!("bad sequence {s:?}; use digits (\"7752\") or a list (\"7,7,5,2\")")),
    }
}

fn fmt_set(s: &[u32]) -> String {
    let items: Vec<String> = s.iter().map(u32::to_string).collect();
    format!("{{{}}}", items.join(","))
}

fn letters_json(w: &[BicolorLetter]) -> Value {
    serde_json::to_value(w).expect("letters serialize")
}

pub fn stats(perm: &str) -> Res {
    let p: Permutation = perm.parse()?;
    let rec = statistics(&p);
    let ai = admissible_inversions(p.one_line());
    let aid = aid(&p);
    let bar = barred_word(&p);
    let mut t = Table::new(["statistic", "value"]);
    let rows: Vec<(&str, String)> = vec![
        ("permutation", p.to_string()),
        ("cycles", p.cycle_string()),
        ("cycle type", p.cycle_type().to_string()),
        ("barred", format_word(&bar)),
        ("des", rec.des.to_string()),
        ("exc", rec.exc.to_string()),
        ("maj", rec.maj.to_string()),
        ("inv", rec.inv.to_string()),
        ("comaj", rec.comaj.to_string()),
        ("fix", rec.fix.to_string()),
        ("ai", ai.to_string()),
        ("aid", aid.to_string()),
        ("des set", fmt_set(&rec.des_set)),
        ("exc set", fmt_set(&rec.exc_set)),
        ("exd set", fmt_set(&rec.exd_set)),
    ];
    for (k, v) in &rows {
        t.push([k.to_string(), v.clone()]);
    }
    let mut json = serde_json::to_value(&rec).expect("stats serialize");
    let obj = json.as_object_mut().expect("a record");
    obj.insert("permutation".into(), json!(p.one_line()));
    obj.insert("cycles".into(), json!(p.cycles()));
    obj.insert("cycle_type".into(), json!(p.cycle_type().parts()));
    obj.insert("barred".into(), letters_json(&bar));
    obj.insert("ai".into(), json!(ai));
    obj.insert("aid".into(), json!(aid));
    let mut out = Out::table(t, json);
    out.text = rows.iter().map(|(k, v)| format!("{k:<12} {v}\n")).collect();
    Ok(out)
}

pub fn table(kind: &TableKind, caps: &Caps) -> Res {
    match kind {
        TableKind::Char { n, all_j } => {
            caps.check_perm(*n)?;
            let ct = char_table(*n)?;
            let js: Vec<usize> = if *all_j { (0..(*n).max(1)).collect() } else { (1..=n / 2).collect() };
            let mut t = Table::new(std::iter::once("lambda".to_string()).chain(js.iter().map(|j| format!("{n},{j}"))));
            let mut rows = Vec::new();
            for (l, v) in &ct.rows {
                let vals: Vec<i64> = js.iter().map(|&j| v[j]).collect();
                t.push(std::iter::once(l.to_string()).chain(vals.iter().map(i64::to_string)));
                rows.push(json!({"lambda": l.parts(), "values": vals}));
            }
            Ok(Out::table(t, json!({"n": n, "j": js, "rows": rows})))
        }
        TableKind::Qeuler { n, fix: k } => {
            caps.check_perm(*n)?;
            let mut rows = vec![MPoly::zero(); (*n).max(1)];
            for p in enumerate_perms_capped(*n, caps.perm)? {
                if k.is_none_or(|k| fix(&p) as usize == k) {
                    rows[exc(&p) as usize] += &MPoly::term(1, &[(Var::Q, maj(&p) as i16)]);
                }
            }
            let mut t = Table::new(["j", "sum q^maj"]);
            let mut js = Vec::new();
            for (j, f) in rows.iter().enumerate() {
                t.push([j.to_string(), f.to_string()]);
                js.push(json!({"j": j, "polynomial": f.to_string()}));
            }
            Ok(Out::table(t, json!({"n": n, "fix": k, "rows": js})))
        }
        TableKind::Whitney { poset } => {
            let p = parse_poset(poset)?;
            let w = p.whitney();
            let mut t = Table::new(["rank", "elements"]);
            for (r, c) in w.iter().enumerate() {
                t.push([r, *c]);
            }
            Ok(Out::table(t, json!({"poset": poset, "whitney": w})))
        }
        TableKind::Dims { n } => {
            caps.check_perm(*n)?;
            let et = exc_table(*n)?;
            let mut counts: BTreeMap<&Partition, Vec<i64>> = BTreeMap::new();
            for (l, j, _, c) in et.entries() {
                counts.entry(l).or_insert_with(|| vec![0; (*n).max(1)])[j as usize] += c;
            }
            let mut t = Table::new(std::iter::once("lambda".to_string()).chain((0..(*n).max(1)).map(|j| format!("j={j}"))));
            let mut rows = Vec::new();
            // the character-table row order: fewer parts first
            let mut order: Vec<_> = counts.into_iter().collect();
            order.sort_by(|(a, _), (b, _)| a.len().cmp(&b.len()).then(b.cmp(a)));
            for (l, v) in order {
                t.push(std::iter::once(l.to_string()).chain(v.iter().map(i64::to_string)));
                rows.push(json!({"lambda": l.parts(), "counts": v}));
            }
            Ok(Out::table(t, json!({"n": n, "rows": rows})))
        }
    }
}

pub fn expand(a: &ExpandArgs, caps: &Caps) -> Res {
    let (label, q) = match (&a.lambda, a.n, a.j, a.k) {
        (Some(l), _, j, _) => {
            let lambda: Partition = l.parse()?;
            caps.check_perm(lambda.size())?;
            match j {
                Some(j) => (format!("Q_({lambda},{j})"), q_lambda(&lambda, j)?),
                None => (format!("sum_j Q_({lambda},j) t^j"), q_lambda_t(&lambda)?),
            }
        }
        (None, Some(n), j, k) => {
            caps.check_perm(n)?;
            match (j, k) {
                (Some(j), Some(k)) => (format!("Q_({n},{j},{k})"), q_njk(n, j, k)?),
                (Some(j), None) => (format!("Q_({n},{j})"), q_nj(n, j)?),
                (None, None) => (format!("Q_{n}(t,r)"), q_n_tr(n)?),
                (None, Some(_)) => return usage("--k needs --j"),
            }
        }
        (None, None, ..) => return usage("give --lambda or --n"),
    };
    let degree = q.degree();
    let basis = match a.basis {
        BasisArg::F => {
            let f = q.to_basis(QSymBasis::F);
            let terms: Vec<Value> = f
                .terms()
                .map(|(&mask, c)| json!({"set": mask_to_set(mask), "coefficient": c.to_string()}))
                .collect();
            let json = json!({"object": label, "basis": "f", "degree": degree, "terms": terms});
            return Ok(Out::new(f.to_string(), json));
        }
        BasisArg::H => SymBasis::H,
        BasisArg::E => SymBasis::E,
        BasisArg::S => SymBasis::S,
        BasisArg::P => SymBasis::P,
        BasisArg::M => SymBasis::M,
    };
    caps.check_degree(degree)?;
    let f = to_h(&q)?.to_basis(basis)?;
    let mut terms: Vec<(&Partition, &MPoly)> = f.terms().collect();
    terms.sort_by(|(a, _), (b, _)| b.size().cmp(&a.size()).then(b.cmp(a)));
    let terms: Vec<Value> = terms
        .into_iter()
        .map(|(l, c)| json!({"partition": l.parts(), "coefficient": c.to_string()}))
        .collect();
    let json = json!({"object": label, "basis": basis.letter(), "degree": degree, "terms": terms});
    Ok(Out::new(f.to_string(), json))
}

/// Bounds that are not sizes of S_n or degrees.
const UNCAPPED: &[&str] = &["m", "ornament-m", "random", "seed"];

fn check_bounds(s: &Suite, overrides: &[(String, u64)], caps: &Caps) -> Result<(), CliError> {
    for p in s.params {
        let v = overrides.iter().rev().find(|(k, _)| k == p.name).map_or(p.default, |(_, v)| *v);
        let v = usize::try_from(v).unwrap_or(usize::MAX);
        if p.name == "degree-max" {
            caps.check_degree(v)?;
        } else if !UNCAPPED.contains(&p.name) {
            caps.check_perm(v)?;
        }
    }
    Ok(())
}

fn params_text(params: &BTreeMap<String, Value>) -> String {
    params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
}

fn item_rows(t: &mut Table, r: &Report) {
    for it in &r.items {
        t.push([
            r.suite.clone(),
            it.id.clone(),
            params_text(&it.params),
            it.status.to_string(),
            it.witness.clone().unwrap_or_default(),
        ]);
    }
}

fn first_failure(r: &Report) -> Option<String> {
    r.first_failure().map(|it| {
        let w = it.witness.as_deref().map(|w| format!(" [{w}]")).unwrap_or_default();
        format!("{} {} {} {}{w}", r.suite, it.id, params_text(&it.params), it.status)
    })
}

/// Runs every suite on a pool of threads; the reports come back in registry order.
fn run_all() -> Result<Vec<Report>, CliError> {
    let all = suites();
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<qeuler::Result<Report>>>> = Mutex::new((0..all.len()).map(|_| None).collect());
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(all.len());
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(s) = all.get(i) else { break };
                let r = s.run();
                slots.lock().expect("no poisoned workers")[i] = Some(r);
            });
        }
    });
    slots
        .into_inner()
        .expect("no poisoned workers")
        .into_iter()
        .map(|r| r.expect("every slot filled").map_err(CliError::from))
        .collect()
}

pub fn verify(a: &VerifyArgs, caps: &Caps) -> Res {
    if a.list {
        let mut t = Table::new(["id", "aliases", "bounds", "summary"]);
        let mut rows = Vec::new();
        for s in suites() {
            let bounds: Vec<String> = s.params.iter().map(|p| format!("{}={}", p.name, p.default)).collect();
            t.push([s.id.to_string(), s.aliases.join(","), bounds.join(" "), s.summary.to_string()]);
            let b: BTreeMap<&str, u64> = s.params.iter().map(|p| (p.name, p.default)).collect();
            rows.push(json!({"id": s.id, "aliases": s.aliases, "bounds": b, "summary": s.summary}));
        }
        return Ok(Out::table(t, Value::Array(rows)));
    }
    let name = a.suite.as_deref().unwrap_or_default();
    let mut overrides = Vec::new();
    for b in &a.bounds {
        let parsed = b.split_once('=').and_then(|(k, v)| Some((k.trim().to_string(), v.trim().parse::<u64>().ok()?)));
        match parsed {
            Some(kv) => overrides.push(kv),
            None => return usage(format!("bad bound {b:?}; expected NAME=VALUE")),
        }
    }
    if let Some(v) = a.nmax {
        overrides.push(("n-max".to_string(), v));
    }
    if let Some(v) = a.zmax {
        overrides.push(("z-max".to_string(), v));
    }
    let header = ["suite", "item", "params", "status", "witness"];
    if name.eq_ignore_ascii_case("all") {
        if !overrides.is_empty() {
            return usage("bounds cannot be overridden when running every suite");
        }
        for s in suites() {
            check_bounds(s, &[], caps)?;
        }
        let reports = run_all()?;
        let mut t = Table::new(header);
        let mut text = String::new();
        for r in &reports {
            item_rows(&mut t, r);
            let ok = r.items.iter().filter(|i| i.status.is_ok()).count();
            let mark = if r.all_ok() { "pass" } else { "FAIL" };
            text.push_str(&format!("{mark:<5} {:<34} {ok}/{} ok\n", r.suite, r.items.len()));
        }
        let failure = reports.iter().find_map(first_failure);
        let json = serde_json::to_value(&reports).expect("reports serialize");
        let mut out = Out::table(t, json);
        out.text = text;
        out.failure = failure;
        return Ok(out);
    }
    let Some(s) = find(name) else {
        return usage(format!("no suite named {name:?}; see `qeuler verify --list`"));
    };
    for (k, _) in &overrides {
        if !s.params.iter().any(|p| p.name == k) {
            let known: Vec<&str> = s.params.iter().map(|p| p.name).collect();
            return usage(format!("suite {} has no bound {k:?}; its bounds are {known:?}", s.id));
        }
    }
    check_bounds(s, &overrides, caps)?;
    let r = s.run_with(&overrides)?;
    let mut t = Table::new(header);
    item_rows(&mut t, &r);
    let mut out = Out::table(t, serde_json::to_value(&r).expect("report serializes"));
    out.text = r.to_string();
    out.failure = first_failure(&r);
    Ok(out)
}

fn alphabet(o: OrderArg) -> Alphabet {
    match o {
        OrderArg::Interleaved => Alphabet::Interleaved,
        OrderArg::BarredFirst => Alphabet::BarredFirst,
    }
}

fn factors_out(factors: Option<Vec<&[BicolorLetter]>>) -> Out {
    match factors {
        Some(f) => {
            let text = f.iter().map(|w| format_word(w)).collect::<Vec<_>>().join(".");
            let json = Value::Array(f.iter().map(|w| letters_json(w)).collect());
            Out::new(text, json)
        }
        None => Out::new("none", Value::Null),
    }
}

pub fn biject(kind: &BijectKind) -> Res {
    Ok(match kind {
        BijectKind::Phi { word } => {
            let w: BarredPermutation = word.parse()?;
            let s = phi_map(&w)?;
            Out::new(fmt_values(&s), json!({"input": letters_json(w.letters()), "output": s}))
        }
        BijectKind::Eta { word } => {
            let s = parse_values(word)?;
            let w = psi_map(&s)?;
            Out::new(w.to_string(), json!({"input": s, "output": letters_json(w.letters())}))
        }
        BijectKind::Gamma { banner } => {
            let b: Banner = banner.parse()?;
            let (b2, ms) = gamma(&b)?;
            let text = format!("banner  {b2}\nomega   {}\nmark    {}", fmt_values(ms.omega()), ms.mark());
            let json = json!({
                "input": letters_json(b.letters()),
                "banner": letters_json(b2.letters()),
                "omega": ms.omega(),
                "mark": ms.mark(),
            });
            Out::new(text, json)
        }
        BijectKind::Lyndon { word, order } => {
            let w = parse_word(word)?;
            let a = alphabet(*order);
            factors_out(Some(lyndon_factorization_by(&w, |x, y| a.cmp(x, y))))
        }
        BijectKind::Incfact { word, order } => {
            let w = parse_word(word)?;
            let a = alphabet(*order);
            factors_out(increasing_factorization_by(&w, |x, y| a.cmp(x, y)))
        }
        BijectKind::Grphi { perm, seq } => {
            let p: Permutation = perm.parse()?;
            let s = parse_values(seq)?;
            let r = gr_phi(&p, &s)?;
            let json = json!({
                "permutation": p.one_line(),
                "sequence": s,
                "ornament": serde_json::to_value(&r).expect("ornaments serialize"),
            });
            Out::new(r.to_string(), json)
        }
        BijectKind::Greta { ornament } => {
            let r: Ornament = ornament.parse()?;
            let (p, s) = gr_eta(&r);
            let text = format!("permutation  {p}\ncycles       {}\nsequence     {}", p.cycle_string(), fmt_values(&s));
            let json = json!({"ornament": serde_json::to_value(&r).expect("ornaments serialize"), "permutation": p.one_line(), "sequence": s});
            Out::new(text, json)
        }
    })
}

pub fn poset(kind: &PosetKind) -> Res {
    match kind {
        PosetKind::Mobius { poset, hat, from, to } => {
            let p = parse_poset(poset)?;
            let (mu, which) = match (from, to) {
                (Some(x), Some(y)) => {
                    let find = |l: &str| p.find(l).ok_or_else(|| CliError::Usage(format!("no element labeled {l:?}")));
                    (p.mobius(find(x)?, find(y)?)?, format!("mu({x},{y})"))
                }
                // only the missing extremes are adjoined unless --hat asks for both
                _ => match (*hat, p.bottom(), p.top()) {
                    (false, Some(_), Some(_)) => (p.mu()?, "mu(P)".to_string()),
                    (false, Some(_), None) => (p.plus().mu()?, "mu(P+)".to_string()),
                    (false, None, Some(_)) => (p.dual().plus().mu()?, "mu(+P)".to_string()),
                    _ => (p.mu_hat(), "mu(hat P)".to_string()),
                },
            };
            let text = format!("{which} = {mu}\nwhitney {:?}", p.whitney());
            Ok(Out::new(text, json!({"poset": poset, "quantity": which, "mu": mu, "whitney": p.whitney()})))
        }
        PosetKind::Rees { left, right, minus } => {
            let mut l = parse_poset(left)?;
            if *minus {
                l = l.minus()?;
            }
            let r = parse_poset(right)?;
            let rp = l.rees(&r)?;
            let mu = rp.mu_hat();
            let text = format!("elements {}\nwhitney {:?}\nmu(hat) = {mu}", rp.len(), rp.whitney());
            let json = json!({"left": left, "right": right, "minus": minus, "elements": rp.len(), "whitney": rp.whitney(), "mu_hat": mu});
            Ok(Out::new(text, json))
        }
        PosetKind::Ideal { poset, j } => {
            let p = parse_poset(poset)?;
            let n = p.length() as usize;
            let js: Vec<usize> = match j {
                Some(j) => vec![*j],
                None => (1..=n).collect(),
            };
            let mut t = Table::new(["j", "elements", "mu(hat I_j)"]);
            let mut rows = Vec::new();
            for j in js {
                let ideal = p.ideal_i_j(j)?;
                let mu = ideal.mu_hat();
                t.push([j.to_string(), ideal.len().to_string(), mu.to_string()]);
                rows.push(json!({"j": j, "elements": ideal.len(), "mu_hat": mu}));
            }
            Ok(Out::table(t, json!({"poset": poset, "rows": rows})))
        }
    }
}
