//! One PASS/FAIL line per acceptance criterion, with its runtime.
//!
//! Runs without the libtest harness so the lines always reach the terminal. The process
//! fails only on unexpected failures. Criteria 1 and 6 cannot hold as literally stated
//! (a mislabeled display and two flipped signs); they print FAIL, and each is checked to
//! fail exactly in the documented way.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use qeuler::bijections::{verify_banner_ornament, verify_gamma, verify_gr_round_trip, verify_involutions};
use qeuler::combinatorics::{enumerate_perms, fix, Partition, Stat};
use qeuler::eulerian::{
    char_table, q_lambda, to_h, verify_character_conjecture, verify_ornament_banner_agreement,
    verify_schur_positivity_conjecture, verify_stable_specialization, verify_symmetric_generating_function,
};
use qeuler::poly::identities::{verify_foata_han, verify_maj_exc_egf, verify_maj_exc_fix_egf};
use qeuler::poly::{joint_enumerator, MPoly, Var};
use qeuler::poset::{verify_rees_boolean, verify_rees_subspaces, verify_rees_trees, verify_tree_lemma_suite, verify_type_bc};
use qeuler::report::{Report, Status};
use qeuler::shelling::{verify_aid_mahonian, verify_ascent_free_chains, verify_equidist, verify_phi_bijection};
use qeuler::symfunc::{verify_basis_round_trips, SymBasis, SymElem};
use qeuler::Result;

struct Outcome {
    ok: bool,
    /// The failure is the documented deviation and nothing else.
    known_deviation: bool,
    note: String,
}

impl Outcome {
    fn pass_if(ok: bool, note: impl Into<String>) -> Self {
        Outcome { ok, known_deviation: false, note: note.into() }
    }
}

fn all_ok(reports: &[Report]) -> Outcome {
    let items: usize = reports.iter().map(|r| r.items.len()).sum();
    match reports.iter().find_map(|r| r.first_failure().map(|f| (r, f))) {
        None => Outcome::pass_if(true, format!("{items} items")),
        Some((r, f)) => Outcome::pass_if(false, format!("{} {} {:?} {:?}", r.suite, f.id, f.params, f.witness)),
    }
}

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn q_p_t(c: i64, q: i16, pp: i16, t: i16) -> MPoly {
    MPoly::term(c, &[(Var::Q, q), (Var::P, pp), (Var::T, t)])
}

/// The expected S_4 polynomial is A_4(q, p, q^{-1}t), the example showing that
/// A_n(q, p, q^{-1}t) is not t-symmetric; every t^j coefficient of the direct sum carries an
/// extra q^j. The literal reading fails and the twisted one must hold exactly.
fn joint_maj_des_exc_n4() -> Result<Outcome> {
    let got = joint_enumerator(4, &[(Stat::Maj, Var::Q), (Stat::Des, Var::P), (Stat::Exc, Var::T)])?;
    // (coefficient, q, p, t)
    let terms = [
        (1, 0, 0, 0),
        (3, 0, 1, 1), (2, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1), (2, 3, 2, 1), (1, 4, 2, 1),
        (3, 0, 1, 2), (1, 1, 1, 2), (1, 1, 2, 2), (3, 2, 2, 2), (2, 3, 2, 2), (1, 4, 3, 2),
        (1, 0, 1, 3),
    ];
    let mut literal = MPoly::zero();
    let mut twisted = MPoly::zero();
    for (c, q, pp, t) in terms {
        literal += &q_p_t(c, q, pp, t);
        twisted += &q_p_t(c, q + t, pp, t);
    }
    let ok = got == literal;
    Ok(Outcome {
        ok,
        known_deviation: !ok && got == twisted,
        note: if got == twisted {
            "the expected polynomial equals A_4(q,p,q^-1 t) exactly; A_4(q,p,t) has an extra q^j on each t^j".into()
        } else {
            format!("{got}")
        },
    })
}

fn cycle_six_three() -> Result<Outcome> {
    let q = to_h(&q_lambda(&p("6"), 3)?)?;
    let mut h = SymElem::zero(SymBasis::H);
    for (l, c) in [("4,2", 2), ("4,1,1", -1), ("3,2,1", 1), ("5,1", 1)] {
        h.add_term(p(l), &MPoly::from_int(c));
    }
    let mut s = SymElem::zero(SymBasis::S);
    for (l, c) in [("6", 3), ("5,1", 3), ("4,2", 3), ("3,3", 1), ("3,2,1", 1)] {
        s.add_term(p(l), &MPoly::from_int(c));
    }
    let schur = q.to_basis(SymBasis::S)?;
    Ok(Outcome::pass_if(q == h && schur == s, format!("h: {q}; s: {schur}")))
}

/// (partition, values for j = 1..n/2)
type Row = (&'static str, &'static [i64]);

/// Character values of V_((n),j) for j = 1..n/2, rows in printed order.
const TABLES: &[(usize, &[Row])] = &[
    (4, &[("4", &[1, 0]), ("3,1", &[1, 1]), ("2^2", &[1, 0]), ("2,1^2", &[1, 2]), ("1^4", &[1, 4])]),
    (5, &[
        ("5", &[1, 1]), ("4,1", &[1, 1]), ("3,2", &[1, 2]), ("3,1^2", &[1, 2]), ("2^2,1", &[1, 3]),
        ("2,1^3", &[1, 5]), ("1^5", &[1, 11]),
    ]),
    (6, &[
        ("6", &[1, 0, 0]), ("5,1", &[1, 1, 1]), ("4,2", &[1, 0, 2]), ("3^2", &[1, 2, 0]),
        ("4,1^2", &[1, 2, 2]), ("3,2,1", &[1, 3, 4]), ("2^3", &[1, 0, 6]), ("3,1^3", &[1, 5, 6]),
        ("2^2,1^2", &[1, 6, 10]), ("2,1^4", &[1, 12, 22]), ("1^6", &[1, 26, 66]),
    ]),
    (7, &[
        ("7", &[1, 1, 1]), ("6,1", &[1, 1, 1]), ("5,2", &[1, 2, 2]), ("4,3", &[1, 2, 3]),
        ("5,1^2", &[1, 2, 2]), ("4,2,1", &[1, 3, 4]), ("3^2,1", &[1, 3, 5]), ("3,2^2", &[1, 4, 7]),
        ("4,1^3", &[1, 5, 6]), ("3,2,1^2", &[1, 6, 11]), ("2^3,1", &[1, 7, 16]), ("3,1^4", &[1, 12, 23]),
        ("2^2,1^3", &[1, 13, 34]), ("2,1^5", &[1, 27, 92]), ("1^7", &[1, 57, 302]),
    ]),
    (8, &[
        ("8", &[1, 0, 1, 0]), ("7,1", &[1, 1, 1, 1]), ("6,2", &[1, 0, 2, 0]), ("5,3", &[1, 2, 3, 3]),
        ("4^2", &[1, 0, 3, 0]), ("6,1^2", &[1, 2, 2, 2]), ("5,2,1", &[1, 3, 4, 4]), ("4,3,1", &[1, 3, 5, 6]),
        ("4,2^2", &[1, 0, 7, 0]), ("3^2,2", &[1, 4, 8, 10]), ("5,1^3", &[1, 5, 6, 6]),
        ("4,2,1^2", &[1, 6, 11, 12]), ("3^2,1^2", &[1, 6, 12, 16]), ("3,2^2,1", &[1, 7, 17, 22]),
        ("2^4", &[1, 0, 23, 0]), ("4,1^4", &[1, 12, 23, 24]), ("3,2,1^3", &[1, 13, 35, 46]),
        ("2^3,1^2", &[1, 14, 47, 68]), ("3,1^5", &[1, 27, 93, 118]), ("2^2,1^4", &[1, 28, 119, 184]),
        ("2,1^6", &[1, 58, 359, 604]), ("1^8", &[1, 120, 1191, 2416]),
    ]),
];

fn character_tables() -> Result<Outcome> {
    let mut entries = 0;
    for &(n, rows) in TABLES {
        let ct = char_table(n)?;
        let order: Vec<Partition> = rows.iter().map(|(l, _)| p(l)).collect();
        let computed: Vec<Partition> = ct.rows.iter().map(|(l, _)| l.clone()).collect();
        if order != computed {
            return Ok(Outcome::pass_if(false, format!("n = {n}: row order {computed:?}")));
        }
        for (l, vals) in rows {
            for (i, &want) in vals.iter().enumerate() {
                entries += 1;
                let got = ct.value(&p(l), i + 1);
                if got != Some(want) {
                    return Ok(Outcome::pass_if(false, format!("n = {n}, lambda = {l}, j = {}: {got:?} vs {want}", i + 1)));
                }
            }
        }
    }
    Ok(Outcome::pass_if(true, format!("{entries} entries, n = 4..8")))
}

fn three_way_equality() -> Result<Outcome> {
    Ok(all_ok(&[verify_ornament_banner_agreement(6)?]))
}

fn generating_functions() -> Result<Outcome> {
    Ok(all_ok(&[
        verify_symmetric_generating_function(7)?,
        verify_maj_exc_egf(7)?,
        verify_maj_exc_fix_egf(7)?,
        verify_stable_specialization(7)?,
        verify_foata_han(5, 5)?,
    ]))
}

/// Direct Möbius values carry the opposite sign to the published (−1)^{n+1} a_{n,j−1} and
/// (−1)^n d_n. Everything else must pass, and the literal-sign items must fail at exactly
/// every (n, j) and at every n ≥ 2 (d_1 = 0 hides the sign).
fn rees_boolean() -> Result<Outcome> {
    let r = verify_rees_boolean(5)?;
    let failing: BTreeSet<(String, String)> = r
        .items
        .iter()
        .filter(|i| !i.status.is_ok())
        .map(|i| (i.id.clone(), format!("{:?}", i.params)))
        .collect();
    let expected: BTreeSet<(String, String)> = r
        .items
        .iter()
        .filter(|i| {
            i.id == "ideal-literal-sign"
                || (i.id == "derangement-literal-sign" && i.params["n"].as_u64().unwrap() >= 2)
        })
        .map(|i| (i.id.clone(), format!("{:?}", i.params)))
        .collect();
    let d5 = enumerate_perms(5)?.filter(|s| fix(s) == 0).count();
    let n5 = r
        .items
        .iter()
        .find(|i| i.id == "derangement-abs" && i.params["n"] == 5)
        .map(|i| i.status == Status::Pass);
    let deviation_only = failing == expected && d5 == 44 && n5 == Some(true);
    Ok(Outcome {
        ok: failing.is_empty(),
        known_deviation: deviation_only,
        note: format!(
            "|mu| and the signs (-1)^n a_(n,j-1), (-1)^(n-1) d_n pass (d_5 = {d5}); \
             the literal signs fail at {} items",
            failing.len()
        ),
    })
}

fn subspaces_q2() -> Result<Outcome> {
    Ok(all_ok(&[verify_rees_subspaces(4, 6)?]))
}

fn trees() -> Result<Outcome> {
    Ok(all_ok(&[verify_rees_trees(4, 3, 3, 6)?, verify_tree_lemma_suite(4, 3, 20, 2024)?]))
}

fn shelling() -> Result<Outcome> {
    Ok(all_ok(&[
        verify_ascent_free_chains(7, 6)?,
        verify_phi_bijection(7, 30, 2024)?,
        verify_equidist(8, 4)?,
        verify_aid_mahonian(8)?,
    ]))
}

fn type_bc() -> Result<Outcome> {
    Ok(all_ok(&[verify_type_bc(5, 3, 6, 4)?]))
}

fn conjectures() -> Result<Outcome> {
    let reports = [verify_character_conjecture(8)?, verify_schur_positivity_conjecture(7, 9)?];
    let mut out = all_ok(&reports);
    let statuses: BTreeSet<String> = reports
        .iter()
        .flat_map(|r| r.items.iter())
        .filter(|i| matches!(i.status, Status::VerifiedToBound | Status::Counterexample))
        .map(|i| i.status.to_string())
        .collect();
    let text: String = reports.iter().map(|r| r.to_string()).collect();
    let wording = statuses.iter().all(|s| s == "verified to bound") && !statuses.is_empty() && !text.contains("proved");
    out.ok &= wording;
    out.note = format!("{}; statuses {statuses:?}", out.note);
    Ok(out)
}

fn property_suites() -> Result<Outcome> {
    Ok(all_ok(&[
        verify_gr_round_trip(6, 6, 6, 4)?,
        verify_banner_ornament(6, 4)?,
        verify_gamma(6, 4)?,
        verify_involutions(6, 5)?,
        verify_phi_bijection(7, 0, 0)?,
        verify_basis_round_trips(9)?,
    ]))
}

type Criterion = (u32, &'static str, u64, fn() -> Result<Outcome>);

const CRITERIA: &[Criterion] = &[
    (1, "joint (maj, des, exc) enumerator of S_4 equals the expected polynomial", 1, joint_maj_des_exc_n4),
    (2, "Q_((6),3) in the h and Schur bases", 5, cycle_six_three),
    (3, "character tables of V_((n),j), n = 4..8", 120, character_tables),
    (4, "Q by definition, ornaments and banners agree, n <= 6", 300, three_way_equality),
    (5, "generating functions through z^7 and Foata-Han through z^5, p^5", 300, generating_functions),
    (6, "Moebius values of I_j(B_n) and B_n^- * C_n with the published signs, n <= 5", 60, rees_boolean),
    (7, "q = 2 Moebius values of I_j(B_n(2)) and the derangement analog, n <= 4", 120, subspaces_q2),
    (8, "Rees products with trees and the tree lemma", 300, trees),
    (9, "ascent-free chains, phi/psi, (aid, des) ~ (maj, exc), aid Mahonian", 180, shelling),
    (10, "type BC: signed derangements, crosspolytopes, isotropic subspaces", 300, type_bc),
    (11, "character and Schur-positivity conjectures verified to bound", 600, conjectures),
    (12, "bijection round trips, involutions, basis changes to degree 9", 600, property_suites),
];

fn main() {
    let mut unexpected = Vec::new();
    let mut passed = 0;
    for &(num, title, limit, f) in CRITERIA {
        let start = Instant::now();
        let outcome = f().unwrap_or_else(|e| Outcome::pass_if(false, format!("error: {e}")));
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(limit);
        let ok = outcome.ok && in_time;
        let mut note = outcome.note;
        if !in_time {
            note = format!("over the {limit} s budget; {note}");
        }
        if ok {
            passed += 1;
        } else if !(outcome.known_deviation && in_time) {
            unexpected.push(num);
        } else {
            note = format!("known deviation; {note}");
        }
        let mark = if ok { "PASS" } else { "FAIL" };
        println!("{mark} {num:>2} {title} [{:.2} s] {note}", elapsed.as_secs_f64());
    }
    println!("{passed}/{} criteria pass", CRITERIA.len());
    if !unexpected.is_empty() {
        println!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
