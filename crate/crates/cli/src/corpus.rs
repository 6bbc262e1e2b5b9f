//! Process-wide cache of enumerated corpora; several suites revisit the
//! same (n, t) cells and generation is the expensive part.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use drd_core::{enumerate_cacti, CactusCorpus, EnumerationError};
use once_cell::sync::Lazy;

type CorpusCache = HashMap<(usize, usize), Arc<CactusCorpus>>;

static CACHE: Lazy<Mutex<CorpusCache>> = Lazy::new(|| Mutex::new(HashMap::new()));

pub fn corpus(n: usize, t: usize) -> Result<Arc<CactusCorpus>, EnumerationError> {
    if let Some(hit) = CACHE.lock().unwrap().get(&(n, t)) {
        return Ok(Arc::clone(hit));
    }
    // Enumerate outside the lock: a racing duplicate wastes work but stays
    // correct, and long generations never block unrelated lookups.
    let fresh = Arc::new(enumerate_cacti(n, t)?);
    Ok(Arc::clone(
        CACHE.lock().unwrap().entry((n, t)).or_insert(fresh),
    ))
}
