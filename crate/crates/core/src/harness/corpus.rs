//! Seeded graph6 corpora with hash manifests.
//!
//! `build` writes `<out>/<entry>/<index>.g6`, one graph per file, and
//! `<out>/manifest.json` recording every file's SHA-256. `check` re-derives
//! each graph from its generator and seed and compares both the recorded
//! hash and the file on disk.

use std::fs;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::codec::encode_graph6;
use crate::constructions::families::{claw_pm_free_instance, k3_s122_free_instance, Shape};
use crate::constructions::random::{gnp, random_cograph, random_dh, rng};
use crate::constructions::trees::random_tree;
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::{InputDescriptor, Suite, VerificationCase, VerificationReport};

pub const MANIFEST_SCHEMA: &str = "pivotwidth.corpus/1";
pub const MANIFEST_FILE: &str = "manifest.json";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Generator {
    /// Connected distance-hereditary graphs on exactly `n` vertices.
    RandomDh,
    /// Uniform labelled trees on `n` vertices.
    RandomTree,
    /// `G(n, p)`.
    Gnp { p: f64 },
    /// Connected cographs on `n` vertices.
    Cograph,
    /// `(K3, S_{1,2,2})`-free graphs on at most `n` vertices.
    K3S122Free { shape: Shape },
    /// Claw-pivot-minor-free graphs on at most `n` vertices.
    ClawPmFree,
}

impl FromStr for Generator {
    type Err = Error;

    /// `random-dh`, `random-tree`, `gnp:<p>`, `cograph`,
    /// `k3-s122-free:<shape>` (shape as in [`Shape`], kebab-case) or
    /// `claw-pm-free`.
    fn from_str(s: &str) -> Result<Generator> {
        let unknown = || Error::UnknownFamily(s.to_string());
        let (head, arg) = match s.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (s, None),
        };
        match (head, arg) {
            ("random-dh", None) => Ok(Generator::RandomDh),
            ("random-tree", None) => Ok(Generator::RandomTree),
            ("cograph", None) => Ok(Generator::Cograph),
            ("claw-pm-free", None) => Ok(Generator::ClawPmFree),
            ("gnp", Some(p)) => match p.parse::<f64>() {
                Ok(p) if (0.0..=1.0).contains(&p) => Ok(Generator::Gnp { p }),
                _ => Err(unknown()),
            },
            ("k3-s122-free", Some(shape)) => {
                serde_json::from_value(Value::String(shape.to_string()))
                    .map(|shape| Generator::K3S122Free { shape })
                    .map_err(|_| unknown())
            }
            _ => Err(unknown()),
        }
    }
}

impl Generator {
    /// Graph number `seed` of the family.
    pub fn generate(&self, seed: u64, n: usize) -> Graph {
        match self {
            Generator::RandomDh => random_dh(seed, n),
            Generator::RandomTree => random_tree(seed, n),
            Generator::Gnp { p } => gnp(&mut rng(seed), n, *p),
            Generator::Cograph => {
                let c = random_cograph(&mut rng(seed), n);
                if c.is_connected() {
                    c
                } else {
                    c.complement()
                }
            }
            Generator::K3S122Free { shape } => k3_s122_free_instance(seed, *shape, n),
            Generator::ClawPmFree => claw_pm_free_instance(seed, n),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub name: String,
    pub generator: Generator,
    /// Graph `i` uses seed `seed + i`.
    pub seed: u64,
    pub count: usize,
    pub n: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub entries: Vec<CorpusEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FileRecord {
    /// Relative to the corpus directory.
    pub path: String,
    pub sha256: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BuiltEntry {
    #[serde(flatten)]
    pub entry: CorpusEntry,
    pub files: Vec<FileRecord>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BuiltManifest {
    pub schema: String,
    pub entries: Vec<BuiltEntry>,
}

fn sha256(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn check_name(name: &str) -> Result<()> {
    let ok = !name.is_empty()
        && name
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '-' || c == '_');
    if ok {
        Ok(())
    } else {
        Err(Error::precondition(format!(
            "entry name `{name}` must be alphanumeric, '-' or '_'"
        )))
    }
}

/// File contents of graph `i` of an entry.
fn render(entry: &CorpusEntry, i: usize) -> (String, String) {
    let g = entry
        .generator
        .generate(entry.seed.wrapping_add(i as u64), entry.n);
    (
        format!("{}/{i:04}.g6", entry.name),
        encode_graph6(&g) + "\n",
    )
}

pub fn build(manifest: &Manifest, out: &Path) -> Result<BuiltManifest> {
    let mut built = Vec::with_capacity(manifest.entries.len());
    for entry in &manifest.entries {
        check_name(&entry.name)?;
        fs::create_dir_all(out.join(&entry.name))?;
        let mut files = Vec::with_capacity(entry.count);
        for i in 0..entry.count {
            let (path, text) = render(entry, i);
            fs::write(out.join(&path), &text)?;
            files.push(FileRecord {
                path,
                sha256: sha256(text.as_bytes()),
            });
        }
        built.push(BuiltEntry {
            entry: entry.clone(),
            files,
        });
    }
    let built = BuiltManifest {
        schema: MANIFEST_SCHEMA.to_string(),
        entries: built,
    };
    let text = serde_json::to_string_pretty(&built).map_err(|e| Error::Io(e.to_string()))?;
    fs::create_dir_all(out)?;
    fs::write(out.join(MANIFEST_FILE), text + "\n")?;
    Ok(built)
}

pub fn read_manifest(dir: &Path) -> Result<BuiltManifest> {
    let text = fs::read_to_string(dir.join(MANIFEST_FILE))?;
    let m: BuiltManifest = serde_json::from_str(&text)
        .map_err(|e| Error::parse(e.line(), e.column(), e.to_string()))?;
    if m.schema != MANIFEST_SCHEMA {
        return Err(Error::precondition(format!(
            "unknown manifest schema `{}`",
            m.schema
        )));
    }
    Ok(m)
}

/// One case per entry: every file regenerates to the recorded hash and the
/// file on disk matches it.
pub fn check(dir: &Path) -> Result<VerificationReport> {
    let start = Instant::now();
    let manifest = read_manifest(dir)?;
    let cases = manifest
        .entries
        .iter()
        .map(|b| {
            let mut bad = None;
            for (i, rec) in b.files.iter().enumerate() {
                let (path, text) = render(&b.entry, i);
                let on_disk = fs::read(dir.join(&rec.path)).ok();
                let fresh = sha256(text.as_bytes());
                let ok = path == rec.path
                    && fresh == rec.sha256
                    && on_disk.as_deref().map(sha256) == Some(fresh);
                if !ok && bad.is_none() {
                    bad = Some((rec.path.clone(), text));
                }
            }
            let mut input = InputDescriptor::batch(format!("corpus/{}", b.entry.name));
            input.seed = Some(b.entry.seed);
            let detail = bad.as_ref().map(|(p, _)| format!("{p} does not match"));
            input.graph6 = bad.map(|(_, t)| t.trim_end().to_string());
            let ok = b.files.len() == b.entry.count;
            VerificationCase::new(
                format!("corpus/{}", b.entry.name),
                "corpus-determinism",
                input,
                json!({ "files": b.files.len(), "count": b.entry.count }),
            )
            .expect(ok, || "file count differs from the entry count".into())
            .expect(detail.is_none(), || detail.unwrap())
        })
        .collect();
    let suite = Suite {
        campaign: "corpus-check".into(),
        config: json!({ "dir": dir.display().to_string() }),
        version: env!("CARGO_PKG_VERSION").to_string(),
    };
    Ok(VerificationReport::from_cases(
        suite,
        cases,
        start.elapsed().as_millis() as u64,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn temp(name: &str) -> std::path::PathBuf {
        let dir =
            std::env::temp_dir().join(format!("pivotwidth-corpus-{name}-{}", std::process::id()));
        let _ = fs::remove_dir_all(&dir);
        dir
    }

    #[test]
    fn build_then_check() {
        let dir = temp("roundtrip");
        let manifest = Manifest {
            entries: vec![
                CorpusEntry {
                    name: "dh14".into(),
                    generator: Generator::RandomDh,
                    seed: 1,
                    count: 100,
                    n: 14,
                },
                CorpusEntry {
                    name: "c5".into(),
                    generator: Generator::K3S122Free {
                        shape: Shape::C5Growth,
                    },
                    seed: 0,
                    count: 3,
                    n: 12,
                },
            ],
        };
        let built = build(&manifest, &dir).unwrap();
        assert_eq!(built.entries[0].files.len(), 100);
        assert_eq!(fs::read_dir(dir.join("dh14")).unwrap().count(), 100);
        let report = check(&dir).unwrap();
        assert!(report.ok && report.cases.len() == 2);

        fs::write(dir.join("dh14/0007.g6"), "A_\n").unwrap();
        let report = check(&dir).unwrap();
        assert!(!report.ok);
        assert_eq!(report.failed, 1);
        fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn generator_names() {
        assert_eq!(
            "gnp:0.5".parse::<Generator>().unwrap(),
            Generator::Gnp { p: 0.5 }
        );
        assert_eq!(
            "k3-s122-free:odd-cycle".parse::<Generator>().unwrap(),
            Generator::K3S122Free {
                shape: Shape::OddCycle
            }
        );
        for bad in ["gnp", "gnp:2", "k3-s122-free:square", "random-dh:3", "nope"] {
            assert!(bad.parse::<Generator>().is_err(), "{bad}");
        }
    }

    #[test]
    fn empty_manifest() {
        let dir = temp("empty");
        build(&Manifest::default(), &dir).unwrap();
        let report = check(&dir).unwrap();
        assert!(report.ok && report.cases.is_empty());
        fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn bad_names_are_rejected() {
        let dir = temp("names");
        let m = Manifest {
            entries: vec![CorpusEntry {
                name: "../up".into(),
                generator: Generator::RandomTree,
                seed: 0,
                count: 1,
                n: 4,
            }],
        };
        assert!(build(&m, &dir).is_err());
    }
}
