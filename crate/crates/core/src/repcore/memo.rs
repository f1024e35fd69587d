//! Idempotent memo tables shared across threads.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{OnceLock, RwLock};

/// Upper bound on entries per table, from `QSPIN_CACHE_SIZE` (0 disables caching).
pub fn cache_capacity() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("QSPIN_CACHE_SIZE").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(1 << 20)
    })
}

/// A memo table; inserts of an already present key are no-ops, so racing
/// writers can only store the same value twice.
pub struct Memo<K, V> {
    map: RwLock<HashMap<K, V>>,
}

impl<K: Eq + Hash + Clone, V: Clone> Memo<K, V> {
    pub fn new() -> Self {
        Memo { map: RwLock::new(HashMap::new()) }
    }

    pub fn get_or_compute(&self, key: K, f: impl FnOnce() -> V) -> V {
        let cap = cache_capacity();
        if cap == 0 {
            return f();
        }
        if let Some(v) = self.map.read().unwrap().get(&key) {
            return v.clone();
        }
        let v = f();
        let mut w = self.map.write().unwrap();
        if w.len() < cap {
            w.entry(key).or_insert_with(|| v.clone());
        }
        v
    }
}

impl<K: Eq + Hash + Clone, V: Clone> Default for Memo<K, V> {
    fn default() -> Self {
        Memo::new()
    }
}
