//! Bounded memo tables keyed by canonical forms, shared across threads.
//!
//! Inserts are idempotent: two workers racing on the same key compute the
//! same value, so a lost race only costs time.

use std::hash::{BuildHasher, Hash};
use std::num::NonZeroUsize;
use std::sync::Mutex;

use lru::LruCache;

const SHARDS: usize = 32;

pub struct Memo<K, V> {
    shards: Vec<Mutex<LruCache<K, V>>>,
    hasher: std::collections::hash_map::RandomState,
}

impl<K: Hash + Eq, V: Clone> Memo<K, V> {
    /// A table holding at most `capacity` entries in total.
    pub fn new(capacity: usize) -> Self {
        let per = NonZeroUsize::new(capacity.div_ceil(SHARDS).max(1)).expect("positive");
        Memo {
            shards: (0..SHARDS).map(|_| Mutex::new(LruCache::new(per))).collect(),
            hasher: Default::default(),
        }
    }

    fn shard(&self, k: &K) -> &Mutex<LruCache<K, V>> {
        &self.shards[self.hasher.hash_one(k) as usize % SHARDS]
    }

    pub fn get(&self, k: &K) -> Option<V> {
        self.shard(k).lock().expect("memo poisoned").get(k).cloned()
    }

    pub fn insert(&self, k: K, v: V) {
        self.shard(&k).lock().expect("memo poisoned").put(k, v);
    }

    pub fn len(&self) -> usize {
        self.shards.iter().map(|s| s.lock().expect("memo poisoned").len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
