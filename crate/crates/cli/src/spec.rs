//! Poset specifications such as `boolean:3` or `subspace:2,3`.

use qeuler::poset::{boolean, chain, crosspolytope, isotropic_lattice, subspace_lattice, tree, FqVectorConfig, Poset};

use crate::CliError;

pub const FAMILIES: &str =
    "boolean:N, chain:N, tree:T,N, subspace:Q,N, cross:N, isotropic:Q,N";

fn usage(spec: &str) -> CliError {
    CliError::Usage(format!("bad poset {spec:?}; expected one of {FAMILIES}"))
}

pub fn parse_poset(spec: &str) -> Result<Poset, CliError> {
    let (family, args) = spec.split_once(':').ok_or_else(|| usage(spec))?;
    let nums: Vec<usize> = args
        .split(',')
        .map(|a| a.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| usage(spec))?;
    let field = |q: usize| u8::try_from(q).map_err(|_| usage(spec));
    let p = match (family.trim().to_ascii_lowercase().as_str(), nums.as_slice()) {
        ("boolean", &[n]) => boolean(n)?,
        ("chain", &[n]) => chain(n),
        ("tree", &[t, n]) => tree(t, n)?,
        ("subspace", &[q, n]) => subspace_lattice(&FqVectorConfig::new(field(q)?, n))?,
        ("cross" | "crosspolytope", &[n]) => crosspolytope(n)?,
        ("isotropic", &[q, n]) => isotropic_lattice(&FqVectorConfig::symplectic(field(q)?, n))?,
        _ => return Err(usage(spec)),
    };
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_parse() {
        assert_eq!(parse_poset("boolean:3").unwrap().len(), 8);
        assert_eq!(parse_poset("chain:4").unwrap().whitney(), vec![1, 1, 1, 1]);
        assert_eq!(parse_poset("tree:2,2").unwrap().len(), 7);
        assert_eq!(parse_poset("subspace:2,3").unwrap().whitney(), vec![1, 7, 7, 1]);
        assert!(matches!(parse_poset("boolean"), Err(CliError::Usage(_))));
        assert!(matches!(parse_poset("tree:2"), Err(CliError::Usage(_))));
        assert!(matches!(parse_poset("boolean:40"), Err(CliError::Core(_))));
    }
}
