//! Run configuration: matrix and basis specs, search limits, output sink.

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::Args;
use serde::Serialize;

use rgdlin::basis::sample_bases;
use rgdlin::{Bounds, CoxeterMatrix, Error, Order, RootBasis};

#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    /// Coxeter matrix: universal3 | type444 | dihedral:M | affineA1, or a matrix file.
    #[arg(long, global = true, env = "RGDLIN_MATRIX", default_value = "universal3")]
    pub matrix: String,

    /// Root bases separated by ';': canonical | gcm:PATH | sample:SEED,COUNT | sample:COUNT.
    #[arg(long, global = true, env = "RGDLIN_BASIS", default_value = "canonical")]
    pub basis: String,

    /// Counterexample search radius for geometric intervals.
    #[arg(long, global = true, env = "RGDLIN_RADIUS", default_value_t = rgdlin::interval::DEFAULT_RADIUS,
          value_parser = positive)]
    pub radius: usize,

    /// Depth window for scans and (nc) checks.
    #[arg(long, global = true, env = "RGDLIN_LENGTH", default_value_t = 4,
          value_parser = positive)]
    pub length: usize,

    /// Length cap when locating chambers.
    #[arg(long, global = true, env = "RGDLIN_DEPTH", default_value_t = rgdlin::interval::DEFAULT_DEPTH,
          value_parser = positive)]
    pub depth: usize,

    /// Seed for `sample:COUNT` basis specs.
    #[arg(long, global = true, env = "RGDLIN_SEED", default_value_t = 0)]
    pub seed: u64,

    /// Output file (default: stdout).
    #[arg(long, global = true, env = "RGDLIN_OUT")]
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn bounds(&self) -> Bounds {
        Bounds {
            radius: self.radius,
            depth: self.depth,
        }
    }

    pub fn load_matrix(&self) -> Result<CoxeterMatrix, Error> {
        let spec = self.matrix.trim();
        match spec {
            "universal3" => Ok(CoxeterMatrix::universal3()),
            "type444" => Ok(CoxeterMatrix::type444()),
            "affineA1" => Ok(CoxeterMatrix::affine_a1()),
            _ => {
                if let Some(m) = spec.strip_prefix("dihedral:") {
                    let order = match m {
                        "inf" | "∞" => Order::Infinite,
                        k => Order::Finite(k.parse().map_err(|_| Error::Parse(format!("bad dihedral label {k:?}")))?),
                    };
                    CoxeterMatrix::dihedral(order)
                } else {
                    read(spec, "matrix")?.parse()
                }
            }
        }
    }

    pub fn load_bases(&self, matrix: &CoxeterMatrix) -> Result<Vec<RootBasis>, Error> {
        let mut out = Vec::new();
        for part in self.basis.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "canonical" {
                out.push(RootBasis::canonical(matrix));
            } else if let Some(path) = part.strip_prefix("gcm:") {
                let file: RootBasis = read(path, "basis")?.parse()?;
                let a = file
                    .as_gcm()
                    .ok_or_else(|| Error::NotGcm(format!("{path:?} has non-integer entries")))?;
                out.push(RootBasis::gcm(file.labels().to_vec(), &a)?);
            } else if let Some(args) = part.strip_prefix("sample:") {
                let nums: Vec<u64> = args
                    .split(',')
                    .map(|x| x.trim().parse().map_err(|_| Error::Parse(format!("bad sample spec {part:?}"))))
                    .collect::<Result<_, _>>()?;
                let (seed, count) = match nums[..] {
                    [count] => (self.seed, count),
                    [seed, count] => (seed, count),
                    _ => return Err(Error::Parse(format!("bad sample spec {part:?}"))),
                };
                out.extend(sample_bases(matrix, seed, count as usize)?);
            } else {
                return Err(Error::Parse(format!("unknown basis spec {part:?}")));
            }
        }
        if out.is_empty() {
            return Err(Error::Parse("no basis given".into()));
        }
        Ok(out)
    }

    pub fn sink(&self) -> io::Result<Box<dyn Write>> {
        Ok(match &self.out {
            Some(path) => Box::new(BufWriter::new(fs::File::create(path)?)),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        })
    }
}

fn read(path: &str, what: &str) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {what} file {path:?}: {e}")))
}

/// Line-delimited JSON writer. The header is held back until the first
/// record, so a run that fails validation writes nothing.
pub struct Records {
    out: Box<dyn Write>,
    header: Option<String>,
}

impl Records {
    pub fn new<H: Serialize>(out: Box<dyn Write>, header: &H) -> io::Result<Self> {
        Ok(Records {
            out,
            header: Some(serde_json::to_string(header)?),
        })
    }

    fn flush_header(&mut self) -> io::Result<()> {
        if let Some(h) = self.header.take() {
            self.out.write_all(h.as_bytes())?;
            self.out.write_all(b"\n")?;
        }
        Ok(())
    }

    pub fn emit<T: Serialize>(&mut self, record: &T) -> io::Result<()> {
        self.flush_header()?;
        serde_json::to_writer(&mut self.out, record)?;
        self.out.write_all(b"\n")
    }

    pub fn finish(mut self) -> io::Result<()> {
        self.flush_header()?;
        self.out.flush()
    }
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}
