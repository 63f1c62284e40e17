//! Run configuration assembled from command-line flags and an optional
//! `key=value` file, with flags taking precedence.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use gradhecke::scalars::FieldKind;
use serde_json::{json, Value};

use crate::error::CliError;

/// Output formats carrying the same tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
}

impl Format {
    fn parse(s: &str) -> Result<Self, CliError> {
        Format::from_str(s, true).map_err(|_| CliError::Config(format!("unknown format {:?}", s)))
    }
}

/// The flags shared by every subcommand. Every value is optional here so
/// that a config file can supply it.
#[derive(Debug, Clone, Default, Args)]
pub struct Flags {
    /// Number of nodes.
    #[arg(long)]
    pub n: Option<usize>,
    /// Quantum characteristic of q.
    #[arg(long)]
    pub e: Option<u64>,
    /// Multicharge as a comma separated list, for example `0` or `3,0`.
    #[arg(long, allow_hyphen_values = true)]
    pub multicharge: Option<String>,
    /// Work over the prime field GF(p).
    #[arg(long, conflicts_with = "rational")]
    pub p: Option<u32>,
    /// Work over the rationals.
    #[arg(long)]
    pub rational: bool,
    /// The Hecke parameter q, an integer or a fraction over the rationals.
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<String>,
    /// The degenerate algebra: q = 1 over GF(e).
    #[arg(long)]
    pub degenerate: bool,
    /// Output format.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write the output to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Refuse algebras whose dimension exceeds this cap.
    #[arg(long)]
    pub max_dim: Option<usize>,
    /// A file of `key=value` lines supplying defaults for the flags above.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

/// A fully resolved configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub n: usize,
    pub e: u64,
    pub multicharge: Vec<i64>,
    pub field: FieldKind,
    pub q: String,
    pub degenerate: bool,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub max_dim: usize,
}

impl RunConfig {
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "e": self.e,
            "multicharge": self.multicharge,
            "field": match self.field {
                FieldKind::Prime(p) => Value::from(format!("GF({})", p)),
                FieldKind::Rationals => Value::from("Q"),
            },
            "q": self.q,
            "degenerate": self.degenerate,
            "max_dim": self.max_dim,
        })
    }
}

fn read_file(path: &Path) -> Result<BTreeMap<String, String>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|err| CliError::Config(format!("cannot read {}: {}", path.display(), err)))?;
    let mut out = BTreeMap::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| CliError::Config(format!("{}:{}: expected key=value", path.display(), no + 1)))?;
        out.insert(k.trim().replace('_', "-"), v.trim().to_string());
    }
    Ok(out)
}

fn parse_num<T: std::str::FromStr>(key: &str, v: &str) -> Result<T, CliError> {
    v.parse()
        .map_err(|_| CliError::Config(format!("invalid value {:?} for {}", v, key)))
}

fn parse_bool(key: &str, v: &str) -> Result<bool, CliError> {
    match v {
        "true" | "1" | "yes" => Ok(true),
        "false" | "0" | "no" => Ok(false),
        _ => Err(CliError::Config(format!("invalid value {:?} for {}", v, key))),
    }
}

fn parse_multicharge(v: &str) -> Result<Vec<i64>, CliError> {
    let kappa: Vec<i64> = v
        .split(',')
        .map(|x| parse_num("multicharge", x.trim()))
        .collect::<Result<_, _>>()?;
    if kappa.is_empty() {
        return Err(CliError::Config("empty multicharge".into()));
    }
    Ok(kappa)
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// The default field for a quantum characteristic: GF(5) for `e = 2`,
/// GF(7) for `e = 3`, GF(5) for `e = 4`, the rationals for `e = 0`, and
/// otherwise the smallest prime `p` with `e | p - 1`.
fn default_field(e: u64) -> FieldKind {
    match e {
        0 => FieldKind::Rationals,
        2 | 4 => FieldKind::Prime(5),
        3 => FieldKind::Prime(7),
        _ => {
            let p = (2u32..)
                .find(|&p| is_prime(p) && (u64::from(p) - 1) % e == 0)
                .expect("a prime exists");
            FieldKind::Prime(p)
        }
    }
}

/// The smallest `q` of quantum characteristic `e` in the field: `q = 4`
/// in GF(5) for `e = 2`, `q = 2` in GF(7) for `e = 3`, `q = 2` in GF(5)
/// for `e = 4`, and `q = 2` (or `-1` for `e = 2`) over the rationals.
fn default_q(field: FieldKind, e: u64) -> Result<String, CliError> {
    match field {
        FieldKind::Rationals => match e {
            0 => Ok("2".into()),
            2 => Ok("-1".into()),
            _ => Err(CliError::Config(format!("no rational q has quantum characteristic {}", e))),
        },
        FieldKind::Prime(p) => (2..p)
            .find(|&q| quantum_characteristic_mod(u64::from(q), u64::from(p)) == e)
            .map(|q| q.to_string())
            .ok_or_else(|| CliError::Config(format!("no q in GF({}) has quantum characteristic {}", p, e))),
    }
}

fn quantum_characteristic_mod(q: u64, p: u64) -> u64 {
    let (mut sum, mut power) = (1, 1);
    for e in 2..=p {
        power = power * q % p;
        sum = (sum + power) % p;
        if sum == 0 {
            return e;
        }
    }
    0
}

impl Flags {
    /// Merge with the config file (if any) and fill defaults.
    pub fn resolve(&self) -> Result<RunConfig, CliError> {
        let file = match &self.config {
            Some(path) => read_file(path)?,
            None => BTreeMap::new(),
        };
        let known = [
            "n",
            "e",
            "multicharge",
            "p",
            "rational",
            "q",
            "degenerate",
            "format",
            "out",
            "max-dim",
        ];
        if let Some(k) = file.keys().find(|k| !known.contains(&k.as_str())) {
            return Err(CliError::Config(format!("unknown config key {:?}", k)));
        }
        let get = |k: &str| file.get(k).map(String::as_str);

        let n = match self.n {
            Some(n) => n,
            None => parse_num("n", get("n").ok_or_else(|| CliError::Config("missing --n".into()))?)?,
        };
        if n == 0 {
            return Err(CliError::Config("n must be positive".into()));
        }
        let e = match self.e {
            Some(e) => e,
            None => parse_num("e", get("e").ok_or_else(|| CliError::Config("missing --e".into()))?)?,
        };
        if e == 1 {
            return Err(CliError::Config("e must be 0 or at least 2".into()));
        }
        let multicharge = match (self.multicharge.as_deref(), get("multicharge")) {
            (Some(v), _) | (None, Some(v)) => parse_multicharge(v)?,
            (None, None) => vec![0],
        };
        let degenerate = self.degenerate || get("degenerate").map(|v| parse_bool("degenerate", v)).transpose()?.unwrap_or(false);
        let rational_flag = self.rational
            || (self.p.is_none() && get("rational").map(|v| parse_bool("rational", v)).transpose()?.unwrap_or(false));
        let p = match self.p {
            Some(p) => Some(p),
            None if self.rational => None,
            None => get("p").map(|v| parse_num("p", v)).transpose()?,
        };
        let field = if degenerate {
            let want = u32::try_from(e).ok().filter(|&e| is_prime(e));
            match (want, p, rational_flag) {
                (None, _, _) => return Err(CliError::Config("the degenerate algebra needs a prime e".into())),
                (_, _, true) => return Err(CliError::Config("the degenerate algebra lives over GF(e)".into())),
                (Some(e), Some(p), _) if p != e => {
                    return Err(CliError::Config(format!("the degenerate algebra needs p = e, got p = {}", p)))
                }
                (Some(e), _, _) => FieldKind::Prime(e),
            }
        } else {
            match (p, rational_flag) {
                (Some(_), true) => return Err(CliError::Config("--p and --rational are exclusive".into())),
                (Some(p), false) if !is_prime(p) => {
                    return Err(CliError::Config(format!("p = {} is not prime", p)))
                }
                (Some(p), false) => FieldKind::Prime(p),
                (None, true) => FieldKind::Rationals,
                (None, false) => default_field(e),
            }
        };
        let q = match (self.q.as_deref(), get("q")) {
            (Some(v), _) | (None, Some(v)) => v.trim().to_string(),
            (None, None) if degenerate => "1".into(),
            (None, None) => default_q(field, e)?,
        };
        if degenerate && q != "1" {
            return Err(CliError::Config("the degenerate algebra has q = 1".into()));
        }
        let format = match (self.format, get("format")) {
            (Some(f), _) => f,
            (None, Some(v)) => Format::parse(v)?,
            (None, None) => Format::Json,
        };
        let out = self.out.clone().or_else(|| get("out").map(PathBuf::from));
        let max_dim = match (self.max_dim, get("max-dim")) {
            (Some(m), _) => m,
            (None, Some(v)) => parse_num("max-dim", v)?,
            (None, None) => gradhecke::graded::DEFAULT_MAX_DIM,
        };
        Ok(RunConfig {
            n,
            e,
            multicharge,
            field,
            q,
            degenerate,
            format,
            out,
            max_dim,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flags(n: usize, e: u64) -> Flags {
        Flags {
            n: Some(n),
            e: Some(e),
            ..Flags::default()
        }
    }

    #[test]
    fn defaults_follow_the_quantum_characteristic() {
        let cases = [
            (2, FieldKind::Prime(5), "4"),
            (3, FieldKind::Prime(7), "2"),
            (4, FieldKind::Prime(5), "2"),
            (0, FieldKind::Rationals, "2"),
            (5, FieldKind::Prime(11), "3"),
        ];
        for (e, field, q) in cases {
            let c = flags(2, e).resolve().unwrap();
            assert_eq!((c.field, c.q.as_str()), (field, q), "e = {}", e);
            assert_eq!(c.multicharge, vec![0]);
        }
    }

    #[test]
    fn degenerate_uses_gf_e() {
        let mut f = flags(3, 3);
        f.degenerate = true;
        let c = f.resolve().unwrap();
        assert_eq!((c.field, c.q.as_str()), (FieldKind::Prime(3), "1"));
        f.e = Some(4);
        assert!(f.resolve().is_err());
    }

    #[test]
    fn invalid_configs_are_rejected() {
        assert!(Flags::default().resolve().is_err());
        assert!(flags(2, 1).resolve().is_err());
        let mut f = flags(2, 2);
        f.p = Some(6);
        assert!(f.resolve().is_err());
        let mut f = flags(2, 3);
        f.rational = true;
        assert!(f.resolve().is_err());
    }
}
