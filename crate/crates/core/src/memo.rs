use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, RwLock};

/// Process-wide memo table safe for concurrent readers and writers.
///
/// Values are computed outside the lock; two racing threads may both compute
/// an entry, and the first insert wins.
pub(crate) struct Memo<K, V> {
    map: RwLock<HashMap<K, Arc<V>>>,
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    pub(crate) fn new() -> Self {
        Memo {
            map: RwLock::new(HashMap::new()),
        }
    }

    pub(crate) fn get_or_insert_with(&self, key: &K, compute: impl FnOnce() -> V) -> Arc<V> {
        if let Some(v) = self.map.read().unwrap().get(key) {
            return Arc::clone(v);
        }
        let value = Arc::new(compute());
        let mut map = self.map.write().unwrap();
        Arc::clone(map.entry(key.clone()).or_insert(value))
    }
}
