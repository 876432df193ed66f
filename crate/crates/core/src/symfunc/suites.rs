//! Round trips between bases of Sym and QSym.

use super::{QSymBasis, QSymElem, SymBasis, SymElem};
use crate::combinatorics::partitions;
use crate::error::{check_cap, Result, DEFAULT_DEGREE_CAP};
use crate::report::{Item, Report};

const BASES: [SymBasis; 5] = [SymBasis::M, SymBasis::H, SymBasis::E, SymBasis::P, SymBasis::S];

/// Every basis element of degree ≤ d_max survives A → B → A for all pairs of the five Sym
/// bases; ω is an involution commuting with basis change; F ↔ M and Sym → QSym → Sym are
/// identities on QSym.
pub fn verify_basis_round_trips(d_max: usize) -> Result<Report> {
    check_cap("degree", d_max, DEFAULT_DEGREE_CAP)?;
    let mut report = Report::new("basis-round-trip");
    for d in 0..=d_max {
        let parts = partitions(d);
        for a in BASES {
            let elems: Vec<SymElem> = parts.iter().map(|l| SymElem::basis_elem(a, l.clone())).collect();
            for b in BASES.into_iter().filter(|&b| b != a) {
                let mut bad = None;
                for f in &elems {
                    let g = f.to_basis(b)?;
                    if g.to_basis(a)? != *f || g.omega()?.to_basis(a)? != f.omega()?.to_basis(a)? {
                        bad = Some(format!("{f}"));
                        break;
                    }
                }
                report.push(
                    Item::check("sym-round-trip", bad.is_none(), || bad.clone().unwrap_or_default())
                        .param("degree", d)
                        .param("from", a.letter())
                        .param("to", b.letter()),
                );
            }
            let mut bad = None;
            for f in &elems {
                if f.omega()?.omega()? != *f {
                    bad = Some(format!("{f}"));
                    break;
                }
            }
            report.push(
                Item::check("omega-involution", bad.is_none(), || bad.clone().unwrap_or_default())
                    .param("degree", d)
                    .param("basis", a.letter()),
            );
        }
        let mut qsym_ok = true;
        let mut witness = String::new();
        let universe = if d == 0 { 1 } else { 1u32 << (d - 1) };
        for mask in 0..universe {
            let set: Vec<u32> = (0..d.saturating_sub(1) as u32).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
            let f = QSymElem::fundamental(d, &set)?;
            let m = f.to_basis(QSymBasis::M);
            if m.to_basis(QSymBasis::F) != f || f.omega().omega() != f {
                qsym_ok = false;
                witness = format!("F_{set:?}");
            }
        }
        for l in &parts {
            let s = SymElem::s(l.clone());
            let back = QSymElem::from_sym(&s)?.to_sym()?;
            if !back.equals(&s)? {
                qsym_ok = false;
                witness = format!("s_{l}");
            }
        }
        report.push(Item::check("qsym-round-trip", qsym_ok, || witness.clone()).param("degree", d));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_degree_round_trips() {
        let r = verify_basis_round_trips(5).unwrap();
        assert!(r.all_ok(), "{:?}", r.first_failure());
    }
}
