//! Where a command's presentation comes from: builder flags, or a JSON
//! document on disk or stdin.

use std::io::Read;
use std::path::PathBuf;

use clap::Args;
use sbk_core::presentations::{build_presentation_with, BuildOptions, ZConvention};
use sbk_core::{Family, Presentation};

use crate::{usage, CliError};

#[derive(Args, Clone, Debug, Default)]
pub struct PresentationArgs {
    /// Presentation family, e.g. braid-punctured, pure-closed.
    #[arg(long)]
    pub family: Option<Family>,
    /// Number of strands.
    #[arg(long)]
    pub n: Option<u32>,
    /// Genus; defaults to 0.
    #[arg(long)]
    pub g: Option<u32>,
    /// Punctures; defaults to 0 on closed families, 1 otherwise.
    #[arg(long)]
    pub p: Option<u32>,
    /// Which σ's the boundary generators commute with.
    #[arg(long, default_value = "first-strand")]
    pub z_convention: ZConvention,
    /// Presentation JSON document, used when no family is given; stdin when absent.
    #[arg(long, conflicts_with = "family")]
    pub input: Option<PathBuf>,
}

impl PresentationArgs {
    pub fn given(&self) -> bool {
        self.family.is_some() || self.input.is_some()
    }

    pub fn load(&self) -> Result<Presentation, CliError> {
        match self.family {
            Some(family) => {
                let n = self.n.ok_or_else(|| usage("--n is required with --family"))?;
                let g = self.g.unwrap_or(0);
                let p = self.p.unwrap_or(if family.is_closed() { 0 } else { 1 });
                let opts = BuildOptions { z_convention: self.z_convention };
                Ok(build_presentation_with(family, family.params(n, g, p), opts)?)
            }
            None => Ok(Presentation::from_json(&read_input(self.input.as_ref())?)?),
        }
    }
}

pub fn read_input(path: Option<&PathBuf>) -> Result<String, CliError> {
    let mut text = String::new();
    match path {
        Some(p) => {
            text = std::fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display())))?;
        }
        None => {
            std::io::stdin().read_to_string(&mut text).map_err(|e| usage(format!("stdin: {e}")))?;
        }
    }
    Ok(text)
}

/// Rebuild a presentation from its id, `family(n=…,g=…,p=…)`.
pub fn from_id(id: &str) -> Result<Presentation, CliError> {
    let bad = || usage(format!("cannot rebuild presentation {id:?}; pass --family or --input"));
    let (family, rest) = id.split_once('(').ok_or_else(bad)?;
    let family: Family = family.parse().map_err(|_| bad())?;
    let inner = rest.strip_suffix(')').ok_or_else(bad)?;
    let mut vals = [None; 3];
    for part in inner.split(',') {
        let (k, v) = part.split_once('=').ok_or_else(bad)?;
        let v: u32 = v.parse().map_err(|_| bad())?;
        let slot = ["n", "g", "p"].iter().position(|&x| x == k).ok_or_else(bad)?;
        vals[slot] = Some(v);
    }
    let [Some(n), Some(g), Some(p)] = vals else { return Err(bad()) };
    if family == Family::Custom {
        return Err(bad());
    }
    Ok(sbk_core::build(family, n, g, p)?)
}
