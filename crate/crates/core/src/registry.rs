//! Every verification suite under one id, with aliases and default bounds.

use crate::error::{invalid, Result};
use crate::report::Report;
use crate::{bijections, eulerian, poly, poset, shelling, symfunc};

/// A named numeric bound of a suite.
#[derive(Clone, Copy, Debug)]
pub struct Param {
    pub name: &'static str,
    pub default: u64,
}

const fn p(name: &'static str, default: u64) -> Param {
    Param { name, default }
}

pub struct Suite {
    pub id: &'static str,
    pub aliases: &'static [&'static str],
    pub summary: &'static str,
    pub params: &'static [Param],
    run: fn(&[u64]) -> Result<Report>,
}

impl Suite {
    /// Runs with the defaults, replacing the named bounds in `overrides`.
    pub fn run_with(&self, overrides: &[(String, u64)]) -> Result<Report> {
        let mut values: Vec<u64> = self.params.iter().map(|p| p.default).collect();
        for (name, v) in overrides {
            match self.params.iter().position(|p| p.name == name) {
                Some(i) => values[i] = *v,
                None => return invalid(format!("suite {} has no bound named {name}", self.id)),
            }
        }
        (self.run)(&values)
    }

    pub fn run(&self) -> Result<Report> {
        self.run_with(&[])
    }
}

fn u(x: u64) -> usize {
    x as usize
}

fn w(x: u64) -> u32 {
    x.min(u32::MAX as u64) as u32
}

macro_rules! suite {
    ($id:literal, [$($alias:literal),*], $summary:literal, [$($name:literal = $def:literal),*], $f:expr) => {
        Suite {
            id: $id,
            aliases: &[$($alias),*],
            summary: $summary,
            params: &[$(p($name, $def)),*],
            run: $f,
        }
    };
}

static SUITES: &[Suite] = &[
    // q-polynomial identities
    suite!("maj-exc-egf", ["thm1.1"], "(maj, exc) exponential generating function", ["n-max" = 7],
        |v| poly::identities::verify_maj_exc_egf(u(v[0]))),
    suite!("maj-exc-fix-egf", ["cor1.3"], "(maj, exc, fix) generating function and its comaj form", ["n-max" = 7],
        |v| poly::identities::verify_maj_exc_fix_egf(u(v[0]))),
    suite!("foata-han", ["cor1.4"], "Foata-Han identity for (maj, des, exc, fix)", ["z-max" = 5, "p-max" = 5],
        |v| poly::identities::verify_foata_han(u(v[0]), u(v[1]))),
    suite!("fix-recurrence", [], "Gaussian-binomial recurrence and q-multinomial form in fix", ["n-max" = 7],
        |v| poly::identities::verify_fix_recurrence(u(v[0]))),
    suite!("derangement-formulas", [], "fixed-point and derangement formulas for (maj, exc), (comaj, exc)", ["n-max" = 7],
        |v| poly::identities::verify_derangement_formulas(u(v[0]))),
    suite!("cycle-type-reversal", [], "cycle-type reversal symmetry of a_(lambda,j)(q,p)", ["n-max" = 7],
        |v| poly::identities::verify_cycle_type_reversal(u(v[0]))),
    suite!("qp-eulerian-symmetry", [], "t-symmetry and unimodality of (q,p)-Eulerian polynomials", ["n-max" = 7],
        |v| poly::identities::verify_qp_eulerian_symmetry(u(v[0]))),
    // Eulerian quasisymmetric functions
    suite!("stable-specialization", [], "generating functions recovered by stable principal specialization", ["n-max" = 7],
        |v| eulerian::verify_stable_specialization(u(v[0]))),
    suite!("nonstable-specialization", ["lemma2.3"], "nonstable principal specialization", ["n-max" = 6],
        |v| eulerian::verify_nonstable_specialization(u(v[0]))),
    suite!("symmetric-generating-function", ["thm1.2"], "symmetric generating function, both closed forms", ["z-max" = 7],
        |v| eulerian::verify_symmetric_generating_function(u(v[0]))),
    suite!("closed-form", ["formq"], "composition formula and recurrences for Q_n(t,r)", ["n-max" = 8],
        |v| eulerian::verify_closed_form(u(v[0]))),
    suite!("ornament-banner-agreement", ["cor3.3"], "Q_def = ornament sum = banner sum", ["n-max" = 6],
        |v| eulerian::verify_ornament_banner_agreement(u(v[0]))),
    suite!("dimensions", [], "multilinear coefficients count permutations", ["n-max" = 7],
        |v| eulerian::verify_dimensions(u(v[0]))),
    suite!("power-sum-expansion", ["prop6.8"], "power-sum expansion of sum_j Q_(n,j) t^j", ["n-max" = 8],
        |v| eulerian::verify_power_sum_expansion(u(v[0]))),
    suite!("character-conjecture", ["conj6.6"], "character values of V_((n),j) against G_lambda(t)", ["n-max" = 8],
        |v| eulerian::verify_character_conjecture(u(v[0]))),
    suite!("schur-positivity-conjecture", ["conj5.3"], "Schur positivity and Schur unimodality", ["all-max" = 7, "cycle-max" = 9],
        |v| eulerian::verify_schur_positivity_conjecture(u(v[0]), u(v[1]))),
    suite!("plethysm-formula", ["cor6.1"], "plethystic product formula over cycle types", ["n-max" = 6],
        |v| eulerian::verify_plethysm_formula(u(v[0]))),
    suite!("product-formula", ["cor6.2"], "product formula for disjoint cycle types", ["n-max" = 6],
        |v| eulerian::verify_product_formula(u(v[0]))),
    suite!("involution-types", ["cor6.3"], "Q_(2^a,1^b),a = h_a[h_2] h_b", ["n-max" = 8],
        |v| eulerian::verify_involution_types(u(v[0]))),
    suite!("multiset-derangements", [], "multiset derangements and their specializations", ["enum-max" = 5, "n-max" = 6],
        |v| eulerian::verify_multiset_derangements(u(v[0]), u(v[1]))),
    suite!("no-adjacent-repeats", [], "words with no equal adjacent letters", ["n-max" = 6],
        |v| eulerian::verify_no_adjacent_repeats(u(v[0]))),
    suite!("gessel-words", [], "words with no double descents, weighted", ["n-max" = 5],
        |v| eulerian::verify_gessel_words(u(v[0]))),
    suite!("h-positivity-unimodality", ["thm5.1"], "h-positivity, symmetry and h-unimodality", ["n-max" = 7],
        |v| eulerian::verify_h_positivity_unimodality(u(v[0]))),
    suite!("cycle-type-symmetry", ["thm5.5"], "symmetry Q_(lambda,j) = Q_(lambda,n-k-j)", ["n-max" = 7],
        |v| eulerian::verify_cycle_type_symmetry(u(v[0]))),
    suite!("restriction", ["thm6.9"], "restriction of V_((n),j) to S_(n-1)", ["n-max" = 7],
        |v| eulerian::verify_restriction(u(v[0]))),
    suite!("rees-derangement-characteristic", ["thm7.5"], "Frobenius characteristic of the top homology of B_n^- * C_n", ["n-max" = 6],
        |v| eulerian::verify_rees_derangement_characteristic(u(v[0]))),
    // bijections and symmetric functions
    suite!("gr-round-trip", ["thm3.2"], "bicolored Gessel-Reutenauer bijection round trips", ["n-max" = 6, "m" = 6, "ornament-max" = 6, "ornament-m" = 4],
        |v| bijections::verify_gr_round_trip(u(v[0]), w(v[1]), u(v[2]), w(v[3]))),
    suite!("banner-ornament", ["thm3.6"], "banner and ornament round trips", ["n-max" = 6, "m" = 4],
        |v| bijections::verify_banner_ornament(u(v[0]), w(v[1]))),
    suite!("gamma-recurrence", ["thm3.8"], "the recurrence bijection gamma", ["n-max" = 6, "m" = 4],
        |v| bijections::verify_gamma(u(v[0]), w(v[1]))),
    suite!("involutions", ["thm5.2"], "value-swap and complement involutions", ["n-max" = 6, "m" = 5],
        |v| bijections::verify_involutions(u(v[0]), w(v[1]))),
    suite!("periodic-comparison", [], "truncated comparison of periodic necklace readings", ["n-max" = 6, "m" = 2],
        |v| bijections::verify_periodic_comparison(u(v[0]), w(v[1]))),
    suite!("basis-round-trip", [], "Sym and QSym basis changes", ["degree-max" = 9],
        |v| symfunc::verify_basis_round_trips(u(v[0]))),
    // posets
    suite!("rees-boolean", ["thm7.3"], "Moebius values of I_j(B_n) and B_n^- * C_n", ["n-max" = 5],
        |v| poset::verify_rees_boolean(u(v[0]))),
    suite!("rees-subspaces", ["thm7.7"], "q-analogs over F_2", ["n-direct" = 4, "n-symbolic" = 6],
        |v| poset::verify_rees_subspaces(u(v[0]), u(v[1]))),
    suite!("rees-trees", ["thm8.1"], "Rees products with trees", ["n-max" = 4, "t-max" = 3, "q-n-max" = 3, "n-symbolic" = 6],
        |v| poset::verify_rees_trees(u(v[0]), u(v[1]), u(v[2]), u(v[3]))),
    suite!("tree-lemma", ["thm8.7"], "the tree lemma and ideal duality", ["n-max" = 4, "q-n-max" = 3, "random" = 20, "seed" = 2024],
        |v| poset::verify_tree_lemma_suite(u(v[0]), u(v[1]), u(v[2]), v[3])),
    suite!("type-bc", ["thm10.2"], "signed derangements, crosspolytopes, isotropic subspaces", ["n-count" = 5, "n-direct" = 3, "n-symbolic" = 6, "n-bnd" = 4],
        |v| poset::verify_type_bc(u(v[0]), u(v[1]), u(v[2]), u(v[3]))),
    suite!("poset-constructions", [], "Whitney numbers, Moebius recursions, Rees order", [],
        |_| poset::verify_poset_constructions()),
    // shelling
    suite!("ascent-free-chains", ["thm9.4"], "ascent-free chains, barred sets, Eulerian numbers, Moebius", ["n-max" = 7, "mu-max" = 6],
        |v| shelling::verify_ascent_free_chains(u(v[0]), u(v[1]))),
    suite!("phi-bijection", ["lemma9.7"], "phi/psi bijection and the inversion lemma", ["n-max" = 7, "random" = 30, "seed" = 2024],
        |v| shelling::verify_phi_bijection(u(v[0]), u(v[1]), v[2])),
    suite!("equidistribution", ["thm9.10"], "(aid, des) against (maj, exc)", ["n-max" = 8, "q2-max" = 4],
        |v| shelling::verify_equidist(u(v[0]), u(v[1]))),
    suite!("aid-mahonian", ["prop9.11"], "aid is Mahonian, with the position-of-1 recurrence", ["n-max" = 8],
        |v| shelling::verify_aid_mahonian(u(v[0]))),
];

pub fn suites() -> &'static [Suite] {
    SUITES
}

/// Looks up a suite by id or alias, ignoring ASCII case.
pub fn find(name: &str) -> Option<&'static Suite> {
    let name = name.to_ascii_lowercase();
    SUITES
        .iter()
        .find(|s| s.id == name || s.aliases.iter().any(|a| *a == name))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn names_are_unique() {
        let mut seen = HashSet::new();
        for s in suites() {
            assert!(seen.insert(s.id), "{}", s.id);
            for a in s.aliases {
                assert!(seen.insert(a), "{a}");
            }
        }
    }

    #[test]
    fn lookup_and_overrides() {
        assert_eq!(find("THM1.2").unwrap().id, "symmetric-generating-function");
        let s = find("aid-mahonian").unwrap();
        assert!(s.run_with(&[("n-max".into(), 4)]).unwrap().all_ok());
        assert!(s.run_with(&[("bogus".into(), 4)]).is_err());
    }
}
