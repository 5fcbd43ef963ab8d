//! `crossnum witness`: builds a named construction from `key=value` parameters.

use std::collections::BTreeMap;

use crossnum_core::constructions::{basis_witness, c22_witnesses, gap_witness, power_witness, w2pk_witnesses};
use crossnum_core::{C22Variant, FiniteAbelianGroup, GapShape, Witness};

use crate::CliError;

pub const NAMES: &str = "basis, power, w2pk, c22, gap";

/// Parameters: at most one bare group spec, the rest `key=value`.
struct Params {
    group: Option<String>,
    values: BTreeMap<String, String>,
}

impl Params {
    fn parse(args: &[String]) -> Result<Self, CliError> {
        let mut group = None;
        let mut values = BTreeMap::new();
        for arg in args {
            match arg.split_once('=') {
                Some((k, v)) => {
                    if values.insert(k.to_string(), v.to_string()).is_some() {
                        return Err(CliError::Parse(format!("parameter {k} given twice")));
                    }
                }
                None if group.is_none() => group = Some(arg.clone()),
                None => return Err(CliError::Parse(format!("unexpected argument {arg:?}"))),
            }
        }
        Ok(Params { group, values })
    }

    fn group(&mut self) -> Result<FiniteAbelianGroup, CliError> {
        let spec = self.group.take().ok_or_else(|| CliError::Parse("missing group spec".into()))?;
        crate::parse_group(&spec)
    }

    fn take<T: std::str::FromStr>(&mut self, key: &str, default: Option<T>) -> Result<T, CliError> {
        match self.values.remove(key) {
            Some(v) => v.parse().map_err(|_| CliError::Parse(format!("bad value for {key}: {v:?}"))),
            None => default.ok_or_else(|| CliError::Parse(format!("missing parameter {key}="))),
        }
    }

    fn finish(self) -> Result<(), CliError> {
        match (self.group, self.values.keys().next()) {
            (Some(g), _) => Err(CliError::Parse(format!("unexpected argument {g:?}"))),
            (_, Some(k)) => Err(CliError::Parse(format!("unknown parameter {k}"))),
            _ => Ok(()),
        }
    }
}

fn variant(name: &str) -> Result<C22Variant, CliError> {
    Ok(match name {
        "aj" => C22Variant::Aj,
        "aj-prime" => C22Variant::AjPrime,
        "special1" => C22Variant::Special1,
        "special2" => C22Variant::Special2,
        _ => return Err(CliError::Parse(format!("unknown variant {name:?}; expected aj, aj-prime, special1, special2"))),
    })
}

/// Labeled witnesses for `name`.
pub fn build(name: &str, args: &[String]) -> Result<Vec<(&'static str, Witness)>, CliError> {
    let mut p = Params::parse(args)?;
    let out = match name {
        "basis" => {
            let (t, s) = basis_witness(&p.group()?)?;
            vec![("T", t), ("S", s)]
        }
        "power" => {
            let g = p.group()?;
            let coords: String = p.take("g", None)?;
            let coords: Vec<i64> = coords
                .split(',')
                .map(|c| c.trim().parse().map_err(|_| CliError::Parse(format!("bad coordinate {c:?}"))))
                .collect::<Result<_, _>>()?;
            let x = g.element(&coords)?;
            let j = p.take("j", None)?;
            vec![("g^j", power_witness(&g, &x, j)?)]
        }
        "w2pk" => {
            let (b_l, b) = w2pk_witnesses(p.take("p", None)?, p.take("k", Some(1))?, p.take("l", Some(0))?)?;
            vec![("B_l", b_l), ("B", b)]
        }
        "c22" => {
            let v = variant(&p.take::<String>("variant", Some("aj".into()))?)?;
            vec![("A", c22_witnesses(p.take("p", None)?, p.take("k", Some(1))?, p.take("j", Some(1))?, v)?)]
        }
        "gap" => {
            let (gp, r, q, s) = (p.take("p", None)?, p.take("r", Some(1))?, p.take("q", None)?, p.take("s", Some(1))?);
            let shape = GapShape {
                closed: p.take("closed", Some(false))?,
                deficit: p.take("deficit", Some(0))?,
                swaps: p.take("swaps", Some(0))?,
            };
            vec![("S", gap_witness(gp, r, q, s, shape)?)]
        }
        _ => return Err(CliError::Parse(format!("unknown construction {name:?}; expected one of {NAMES}"))),
    };
    p.finish()?;
    Ok(out)
}
