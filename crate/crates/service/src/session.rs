use std::collections::HashMap;
use std::sync::{Arc, RwLock};
use std::time::{Duration, Instant};

use warping_core::puzzle::PuzzleGrid;
use warping_core::RuleSet;

pub const DEFAULT_TTL: Duration = Duration::from_secs(24 * 60 * 60);

#[derive(Debug, Clone)]
pub struct Session {
    pub id: String,
    pub rules: RuleSet,
    pub clues: PuzzleGrid,
    pub solution: PuzzleGrid,
    pub created: Instant,
}

impl Session {
    pub fn c(&self) -> u32 {
        self.clues.c()
    }
}

/// Sessions by id; expired entries are dropped on every insert.
#[derive(Clone)]
pub struct SessionStore {
    inner: Arc<RwLock<HashMap<String, Arc<Session>>>>,
    ttl: Duration,
}

impl SessionStore {
    pub fn new(ttl: Duration) -> Self {
        SessionStore {
            inner: Arc::default(),
            ttl,
        }
    }

    pub fn insert(&self, rules: RuleSet, clues: PuzzleGrid, solution: PuzzleGrid) -> Arc<Session> {
        let session = Arc::new(Session {
            id: uuid::Uuid::new_v4().to_string(),
            rules,
            clues,
            solution,
            created: Instant::now(),
        });
        let mut map = self.inner.write().expect("session store poisoned");
        map.retain(|_, s| s.created.elapsed() < self.ttl);
        map.insert(session.id.clone(), Arc::clone(&session));
        session
    }

    pub fn get(&self, id: &str) -> Option<Arc<Session>> {
        let map = self.inner.read().expect("session store poisoned");
        map.get(id)
            .filter(|s| s.created.elapsed() < self.ttl)
            .cloned()
    }

    pub fn len(&self) -> usize {
        self.inner.read().expect("session store poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl Default for SessionStore {
    fn default() -> Self {
        SessionStore::new(DEFAULT_TTL)
    }
}
