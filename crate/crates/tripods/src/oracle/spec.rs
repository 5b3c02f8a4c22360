use std::fmt;
use std::str::FromStr;

use super::{gen, OracleError};
use crate::graph::MigrationDigraph;

/// A parsed generator invocation. Same spec and seed always produce the
/// identical instance.
///
/// Textual form: `family(key=value,...)`, e.g.
/// `erdos-renyi(n=10,p=0.3,sources=2,sinks=2,seed=1)` or
/// `comb(teeth=3,seed=7)`.
#[derive(Clone, Debug, PartialEq)]
pub enum InstanceSpec {
    LayeredDag {
        layers: usize,
        width: usize,
        p: f64,
        seed: u64,
    },
    Comb {
        teeth: usize,
        seed: u64,
    },
    CrossingGrid {
        m: usize,
    },
    ErdosRenyi {
        n: usize,
        p: f64,
        sources: usize,
        sinks: usize,
        seed: u64,
    },
    DoubledGadget {
        blocks: usize,
    },
}

/// Builds the instance described by `spec`.
pub fn generate(spec: &InstanceSpec) -> Result<MigrationDigraph, OracleError> {
    match *spec {
        InstanceSpec::LayeredDag {
            layers,
            width,
            p,
            seed,
        } => gen::layered_dag(layers, width, p, seed),
        InstanceSpec::Comb { teeth, seed } => Ok(gen::comb(teeth, Some(seed))?.migration),
        InstanceSpec::CrossingGrid { m } => Ok(gen::crossing_grid(m)?.migration),
        InstanceSpec::ErdosRenyi {
            n,
            p,
            sources,
            sinks,
            seed,
        } => gen::erdos_renyi(n, p, sources, sinks, seed),
        InstanceSpec::DoubledGadget { blocks } => Ok(gen::doubled_gadget(blocks)?.migration),
    }
}

impl fmt::Display for InstanceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InstanceSpec::LayeredDag {
                layers,
                width,
                p,
                seed,
            } => write!(f, "layered-dag(layers={layers},width={width},p={p},seed={seed})"),
            InstanceSpec::Comb { teeth, seed } => write!(f, "comb(teeth={teeth},seed={seed})"),
            InstanceSpec::CrossingGrid { m } => write!(f, "crossing-grid(m={m})"),
            InstanceSpec::ErdosRenyi {
                n,
                p,
                sources,
                sinks,
                seed,
            } => write!(
                f,
                "erdos-renyi(n={n},p={p},sources={sources},sinks={sinks},seed={seed})"
            ),
            InstanceSpec::DoubledGadget { blocks } => {
                write!(f, "doubled-gadget(blocks={blocks})")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid instance spec: {0}")]
pub struct SpecParseError(pub String);

struct Params<'a> {
    family: &'a str,
    pairs: Vec<(&'a str, &'a str)>,
}

impl<'a> Params<'a> {
    fn get<T: FromStr>(&self, key: &str) -> Result<T, SpecParseError> {
        let (_, raw) = self
            .pairs
            .iter()
            .find(|(k, _)| *k == key)
            .ok_or_else(|| SpecParseError(format!("{}: missing parameter `{key}`", self.family)))?;
        raw.parse().map_err(|_| {
            SpecParseError(format!(
                "{}: parameter `{key}` has invalid value `{raw}`",
                self.family
            ))
        })
    }

    fn get_or<T: FromStr>(&self, key: &str, default: T) -> Result<T, SpecParseError> {
        if self.pairs.iter().any(|(k, _)| *k == key) {
            self.get(key)
        } else {
            Ok(default)
        }
    }

    fn check_known(&self, known: &[&str]) -> Result<(), SpecParseError> {
        for (k, _) in &self.pairs {
            if !known.contains(k) {
                return Err(SpecParseError(format!(
                    "{}: unknown parameter `{k}`",
                    self.family
                )));
            }
        }
        Ok(())
    }
}

impl FromStr for InstanceSpec {
    type Err = SpecParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (family, rest) = match s.find('(') {
            Some(open) => {
                let close = s
                    .rfind(')')
                    .ok_or_else(|| SpecParseError("missing closing parenthesis".into()))?;
                if close != s.len() - 1 {
                    return Err(SpecParseError("trailing characters after `)`".into()));
                }
                (&s[..open], &s[open + 1..close])
            }
            None => (s, ""),
        };
        let mut pairs = Vec::new();
        for item in rest.split(',').filter(|p| !p.trim().is_empty()) {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| SpecParseError(format!("expected key=value, got `{item}`")))?;
            pairs.push((k.trim(), v.trim()));
        }
        let p = Params { family, pairs };
        match family {
            "layered-dag" => {
                p.check_known(&["layers", "width", "p", "seed"])?;
                Ok(InstanceSpec::LayeredDag {
                    layers: p.get("layers")?,
                    width: p.get("width")?,
                    p: p.get("p")?,
                    seed: p.get_or("seed", 0)?,
                })
            }
            "comb" => {
                p.check_known(&["teeth", "seed"])?;
                Ok(InstanceSpec::Comb {
                    teeth: p.get("teeth")?,
                    seed: p.get_or("seed", 0)?,
                })
            }
            "crossing-grid" => {
                p.check_known(&["m"])?;
                Ok(InstanceSpec::CrossingGrid { m: p.get("m")? })
            }
            "erdos-renyi" => {
                p.check_known(&["n", "p", "sources", "sinks", "seed"])?;
                Ok(InstanceSpec::ErdosRenyi {
                    n: p.get("n")?,
                    p: p.get("p")?,
                    sources: p.get("sources")?,
                    sinks: p.get("sinks")?,
                    seed: p.get_or("seed", 0)?,
                })
            }
            "doubled-gadget" => {
                p.check_known(&["blocks"])?;
                Ok(InstanceSpec::DoubledGadget {
                    blocks: p.get("blocks")?,
                })
            }
            other => Err(SpecParseError(format!("unknown generator `{other}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_round_trip() {
        let specs = [
            InstanceSpec::LayeredDag {
                layers: 3,
                width: 4,
                p: 0.25,
                seed: 9,
            },
            InstanceSpec::Comb { teeth: 3, seed: 7 },
            InstanceSpec::CrossingGrid { m: 2 },
            InstanceSpec::ErdosRenyi {
                n: 10,
                p: 0.3,
                sources: 2,
                sinks: 2,
                seed: 1,
            },
            InstanceSpec::DoubledGadget { blocks: 2 },
        ];
        for spec in specs {
            let text = spec.to_string();
            assert_eq!(text.parse::<InstanceSpec>().unwrap(), spec, "{text}");
        }
    }

    #[test]
    fn generation_is_deterministic() {
        let spec: InstanceSpec = "comb(teeth=3,seed=7)".parse().unwrap();
        assert_eq!(generate(&spec).unwrap(), generate(&spec).unwrap());
    }

    #[test]
    fn bad_specs_are_rejected() {
        assert!("unknown-gen(x=1)".parse::<InstanceSpec>().is_err());
        assert!("comb(teeth=zero)".parse::<InstanceSpec>().is_err());
        assert!("comb(weird=1)".parse::<InstanceSpec>().is_err());
        assert!(generate(&"erdos-renyi(n=4,p=7.5,sources=1,sinks=1)".parse().unwrap()).is_err());
    }
}
