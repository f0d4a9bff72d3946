use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::grassmann::monomial::MAX_GENERATORS;

/// Ordered set of generator labels. Registration order is the canonical
/// monomial order; an optional partner table marks conjugate pairs `(g, g*)`.
#[derive(Debug)]
pub struct GeneratorRegistry {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    partner: Vec<Option<usize>>,
}

impl PartialEq for GeneratorRegistry {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.partner == other.partner
    }
}

impl Eq for GeneratorRegistry {}

impl GeneratorRegistry {
    pub fn new<S: AsRef<str>>(labels: &[S], pairs: &[(S, S)]) -> Result<Arc<Self>> {
        if labels.is_empty() {
            return Err(Error::EmptyRegistry);
        }
        if labels.len() > MAX_GENERATORS {
            return Err(Error::TooManyGenerators {
                count: labels.len(),
                max: MAX_GENERATORS,
            });
        }
        let mut index = HashMap::with_capacity(labels.len());
        let mut owned = Vec::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            let label = label.as_ref().to_string();
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label));
            }
            owned.push(label);
        }
        let mut partner = vec![None; owned.len()];
        for (a, b) in pairs {
            let (a, b) = (a.as_ref(), b.as_ref());
            let ia = *index
                .get(a)
                .ok_or_else(|| Error::UnknownLabel(a.to_string()))?;
            let ib = *index
                .get(b)
                .ok_or_else(|| Error::UnknownLabel(b.to_string()))?;
            if ia == ib {
                return Err(Error::SelfPairing(a.to_string()));
            }
            for (i, j, label) in [(ia, ib, a), (ib, ia, b)] {
                match partner[i] {
                    Some(p) if p != j => return Err(Error::ConflictingPairing(label.to_string())),
                    _ => partner[i] = Some(j),
                }
            }
        }
        Ok(Arc::new(Self {
            labels: owned,
            index,
            partner,
        }))
    }

    /// Registry of `labels` with no pair structure.
    pub fn unpaired<S: AsRef<str>>(labels: &[S]) -> Result<Arc<Self>> {
        Self::new::<S>(labels, &[])
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> Option<&str> {
        self.labels.get(index).map(String::as_str)
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn partner(&self, index: usize) -> Option<usize> {
        self.partner.get(index).copied().flatten()
    }

    pub fn is_pair(&self, a: usize, b: usize) -> bool {
        self.partner(a) == Some(b)
    }

    pub(crate) fn check_index(&self, index: usize) -> Result<()> {
        if index < self.labels.len() {
            Ok(())
        } else {
            Err(Error::GeneratorOutOfRange {
                index,
                len: self.labels.len(),
            })
        }
    }
}
