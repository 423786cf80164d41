use std::sync::{Arc, Mutex, MutexGuard, PoisonError};

use axum::extract::rejection::JsonRejection;
use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use glspell_core::correct::{Checker, Suggestion};
use glspell_core::error::{SessionError, TextError};
use glspell_core::session::{check_document, line_col, Action, CorrectionSession, Flag, Next};

use crate::AppState;

type Shared = State<Arc<AppState>>;

#[derive(Debug, Error)]
pub enum ApiError {
    #[error("no session {0}")]
    UnknownSession(String),
    #[error("no route {0}")]
    UnknownRoute(String),
    #[error("{0}")]
    Json(#[from] JsonRejection),
    #[error("{0}")]
    BadAction(String),
    #[error(transparent)]
    Session(#[from] SessionError),
    #[error(transparent)]
    Text(#[from] TextError),
    #[error("saving the user dictionary: {0}")]
    Io(#[from] std::io::Error),
}

impl ApiError {
    fn status_and_code(&self) -> (StatusCode, &'static str) {
        match self {
            ApiError::UnknownSession(_) => (StatusCode::NOT_FOUND, "unknown_session"),
            ApiError::UnknownRoute(_) => (StatusCode::NOT_FOUND, "not_found"),
            ApiError::Json(r) => (r.status(), "bad_request"),
            ApiError::BadAction(_) => (StatusCode::UNPROCESSABLE_ENTITY, "bad_action"),
            ApiError::Session(e) => match e {
                SessionError::SessionClosed => (StatusCode::CONFLICT, "session_closed"),
                SessionError::SessionActive => (StatusCode::CONFLICT, "session_active"),
                SessionError::NoCurrentFlag => (StatusCode::CONFLICT, "no_current_flag"),
                SessionError::BadSuggestionIndex { .. } => {
                    (StatusCode::UNPROCESSABLE_ENTITY, "bad_suggestion_index")
                }
                SessionError::EmptyReplacement => (StatusCode::UNPROCESSABLE_ENTITY, "empty_replacement"),
                SessionError::CannotStore(_) => (StatusCode::UNPROCESSABLE_ENTITY, "not_greek"),
            },
            ApiError::Text(_) => (StatusCode::UNPROCESSABLE_ENTITY, "not_greek"),
            ApiError::Io(_) => (StatusCode::INTERNAL_SERVER_ERROR, "io"),
        }
    }
}

#[derive(Serialize)]
struct ErrorBody {
    error: &'static str,
    detail: String,
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let (status, error) = self.status_and_code();
        let body = ErrorBody {
            error,
            detail: self.to_string(),
        };
        (status, Json(body)).into_response()
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SuggestionDto {
    pub display: String,
    /// "stress", "orthographic" or "typographic".
    pub class: String,
    /// For typographic suggestions, the error the user made.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    pub rank: usize,
}

impl From<&Suggestion> for SuggestionDto {
    fn from(s: &Suggestion) -> Self {
        SuggestionDto {
            display: s.display.clone(),
            class: s.class.name().to_string(),
            kind: s.class.kind().map(|k| k.name().to_string()),
            rank: s.rank,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SpanDto {
    pub start: usize,
    pub end: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FlagDto {
    /// Byte span in the submitted text.
    pub span: SpanDto,
    pub line: usize,
    pub column: usize,
    pub word: String,
    pub suggestions: Vec<SuggestionDto>,
}

impl FlagDto {
    fn new(text: &str, flag: &Flag) -> FlagDto {
        let (line, column) = line_col(text, flag.span.start);
        FlagDto {
            span: SpanDto {
                start: flag.span.start,
                end: flag.span.end,
            },
            line,
            column,
            word: flag.word.clone(),
            suggestions: flag.suggestions.iter().map(SuggestionDto::from).collect(),
        }
    }
}

#[derive(Deserialize)]
struct TextBody {
    text: String,
}

#[derive(Deserialize)]
struct WordBody {
    word: String,
}

#[derive(Deserialize)]
struct ActionBody {
    action: String,
    replacement: Option<String>,
    index: Option<usize>,
}

impl ActionBody {
    fn parse(self) -> Result<Action, ApiError> {
        Ok(match self.action.as_str() {
            "skip" => Action::Skip,
            "store" => Action::Store,
            "exit" => Action::Exit,
            "edit" => Action::Edit(
                self.replacement
                    .ok_or_else(|| ApiError::BadAction("edit needs a replacement".into()))?,
            ),
            "correct" => Action::Correct(
                self.index
                    .ok_or_else(|| ApiError::BadAction("correct needs an index".into()))?,
            ),
            other => return Err(ApiError::BadAction(format!("unknown action {other:?}"))),
        })
    }
}

#[derive(Serialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum NextBody {
    Flag(FlagDto),
    Done,
}

#[derive(Serialize)]
struct SessionBody {
    id: String,
    status: String,
    decisions: usize,
}

impl SessionBody {
    fn new(s: &CorrectionSession) -> SessionBody {
        SessionBody {
            id: s.id().to_string(),
            status: s.status().to_string(),
            decisions: s.decisions().len(),
        }
    }
}

pub(crate) fn routes() -> Router<Arc<AppState>> {
    Router::new()
        .route("/v1/health", get(health))
        .route("/v1/check", post(check))
        .route("/v1/sessions", post(create_session))
        .route("/v1/sessions/{id}", get(session_state).delete(close_session))
        .route("/v1/sessions/{id}/next", get(next))
        .route("/v1/sessions/{id}/action", post(action))
        .route("/v1/sessions/{id}/export", get(export))
        .route("/v1/userdict", post(add_word))
        .fallback(|uri: axum::http::Uri| async move { ApiError::UnknownRoute(uri.path().to_string()) })
}

// a panic in another request must not take the service down with it
fn lock<T>(m: &Mutex<T>) -> MutexGuard<'_, T> {
    m.lock().unwrap_or_else(PoisonError::into_inner)
}

fn session(state: &AppState, id: &str) -> Result<Arc<Mutex<CorrectionSession>>, ApiError> {
    lock(&state.sessions)
        .get(id)
        .cloned()
        .ok_or_else(|| ApiError::UnknownSession(id.to_string()))
}

async fn health(State(state): Shared) -> Json<serde_json::Value> {
    let stats = state.dict.stats();
    let user_words = state.user.read().unwrap_or_else(PoisonError::into_inner).len();
    Json(serde_json::json!({
        "status": "ok",
        "stems": stats.stems,
        "memory_words": stats.memory_words,
        "user_words": user_words,
    }))
}

async fn check(State(state): Shared, body: Result<Json<TextBody>, JsonRejection>) -> Result<Json<serde_json::Value>, ApiError> {
    let Json(body) = body?;
    let user = state.user.read().unwrap_or_else(PoisonError::into_inner);
    let checker = Checker::new(&state.dict, &user).with_options(state.config.options);
    let flags: Vec<FlagDto> = check_document(&body.text, &checker)
        .iter()
        .map(|f| FlagDto::new(&body.text, f))
        .collect();
    Ok(Json(serde_json::json!({ "flags": flags })))
}

async fn create_session(
    State(state): Shared,
    body: Result<Json<TextBody>, JsonRejection>,
) -> Result<(StatusCode, Json<SessionBody>), ApiError> {
    let Json(body) = body?;
    let id = state.new_id();
    let s = CorrectionSession::new(id.clone(), body.text).with_options(state.config.options);
    let out = SessionBody::new(&s);
    lock(&state.sessions).insert(id, Arc::new(Mutex::new(s)));
    Ok((StatusCode::CREATED, Json(out)))
}

async fn session_state(State(state): Shared, Path(id): Path<String>) -> Result<Json<SessionBody>, ApiError> {
    let s = session(&state, &id)?;
    let s = lock(&s);
    Ok(Json(SessionBody::new(&s)))
}

async fn close_session(State(state): Shared, Path(id): Path<String>) -> Result<StatusCode, ApiError> {
    lock(&state.sessions)
        .remove(&id)
        .map(|_| StatusCode::NO_CONTENT)
        .ok_or(ApiError::UnknownSession(id))
}

async fn next(State(state): Shared, Path(id): Path<String>) -> Result<Json<NextBody>, ApiError> {
    let s = session(&state, &id)?;
    let mut s = lock(&s);
    let user = state.user.read().unwrap_or_else(PoisonError::into_inner);
    Ok(Json(match s.next_flag(&state.dict, &user)? {
        Next::Flag(flag) => NextBody::Flag(FlagDto::new(s.text(), &flag)),
        Next::Done => NextBody::Done,
    }))
}

async fn action(
    State(state): Shared,
    Path(id): Path<String>,
    body: Result<Json<ActionBody>, JsonRejection>,
) -> Result<Json<SessionBody>, ApiError> {
    let Json(body) = body?;
    let action = body.parse()?;
    let s = session(&state, &id)?;
    let mut s = lock(&s);
    let mut user = state.user.write().unwrap_or_else(PoisonError::into_inner);
    let stores = action == Action::Store;
    s.apply_action(action, &state.dict, &mut user)?;
    if stores {
        state.save_user(&user)?;
    }
    Ok(Json(SessionBody::new(&s)))
}

async fn export(State(state): Shared, Path(id): Path<String>) -> Result<Json<serde_json::Value>, ApiError> {
    let s = session(&state, &id)?;
    let text = lock(&s).export()?;
    Ok(Json(serde_json::json!({ "text": text })))
}

async fn add_word(State(state): Shared, body: Result<Json<WordBody>, JsonRejection>) -> Result<Json<serde_json::Value>, ApiError> {
    let Json(body) = body?;
    let mut user = state.user.write().unwrap_or_else(PoisonError::into_inner);
    let added = user.add(&body.word)?;
    if added {
        state.save_user(&user)?;
    }
    Ok(Json(serde_json::json!({ "word": body.word, "added": added, "size": user.len() })))
}
