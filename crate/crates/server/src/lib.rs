//! JSON-over-HTTP frontend for correction sessions.

mod api;

use std::collections::HashMap;
use std::io;
use std::path::PathBuf;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex, RwLock};

use axum::Router;
use glspell_core::correct::CheckerOptions;
use glspell_core::dict::{Dictionary, UserDictionary};
use glspell_core::session::CorrectionSession;
use tokio::net::TcpListener;

pub use api::{ApiError, FlagDto, SuggestionDto};

#[derive(Clone, Debug, Default)]
pub struct ServerConfig {
    /// Where stored words are saved; in memory only when unset.
    pub user_path: Option<PathBuf>,
    pub options: CheckerOptions,
}

/// Shared by every request: one immutable dictionary, one user dictionary
/// (writes serialize on its lock), and the open sessions.
pub struct AppState {
    dict: Arc<Dictionary>,
    user: RwLock<UserDictionary>,
    config: ServerConfig,
    sessions: Mutex<HashMap<String, Arc<Mutex<CorrectionSession>>>>,
    next_id: AtomicU64,
}

impl AppState {
    pub fn new(dict: Arc<Dictionary>, user: UserDictionary, config: ServerConfig) -> Arc<AppState> {
        Arc::new(AppState {
            dict,
            user: RwLock::new(user),
            config,
            sessions: Mutex::new(HashMap::new()),
            next_id: AtomicU64::new(1),
        })
    }

    fn new_id(&self) -> String {
        format!("s{:06}", self.next_id.fetch_add(1, Ordering::Relaxed))
    }

    fn save_user(&self, user: &UserDictionary) -> io::Result<()> {
        match &self.config.user_path {
            Some(path) => user.save(path),
            None => Ok(()),
        }
    }
}

pub fn router(state: Arc<AppState>) -> Router {
    api::routes().with_state(state)
}

pub async fn serve(listener: TcpListener, state: Arc<AppState>) -> io::Result<()> {
    axum::serve(listener, router(state)).await
}
