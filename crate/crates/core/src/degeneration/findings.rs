use std::fs::OpenOptions;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use crate::groebner::IdealHandle;

/// One record of the findings file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    /// e.g. `VIOLATION_FOUND`, `OPEN_QUESTION_COUNTEREXAMPLE`
    pub kind: String,
    pub ring: String,
    pub generators: String,
    pub order: String,
    /// offending cell `(i,j)` or degree `d=...`
    pub location: String,
}

impl Finding {
    pub fn new(kind: &str, ideal: &IdealHandle, location: impl Into<String>) -> Self {
        let ring = ideal.ring();
        Finding {
            kind: kind.to_string(),
            ring: ring.header(),
            generators: ideal
                .generators()
                .iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>()
                .join(", "),
            order: ring.order().to_string(),
            location: location.into(),
        }
    }

    /// Tab-separated line without the trailing newline.
    pub fn to_line(&self) -> String {
        [&self.kind, &self.ring, &self.generators, &self.order, &self.location]
            .map(|s| s.replace(['\t', '\n'], " "))
            .join("\t")
    }
}

static WRITER: Mutex<()> = Mutex::new(());

/// Append-only findings file; appends from all threads are serialized.
#[derive(Debug, Clone)]
pub struct FindingsLog {
    path: PathBuf,
}

impl FindingsLog {
    pub fn new(path: impl AsRef<Path>) -> Self {
        FindingsLog {
            path: path.as_ref().to_path_buf(),
        }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn append(&self, finding: &Finding) -> std::io::Result<()> {
        let _guard = WRITER.lock().unwrap_or_else(|e| e.into_inner());
        let mut f = OpenOptions::new().create(true).append(true).open(&self.path)?;
        writeln!(f, "{}", finding.to_line())?;
        f.sync_data()
    }
}
