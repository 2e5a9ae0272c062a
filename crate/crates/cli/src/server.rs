//! HTTP endpoint for the bisimulation game. Sessions live in memory; moves
//! within one session are serialized by its lock.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};

use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use hda_core::game::{HistoryEntry, DEFAULT_ROUND_LIMIT};
use hda_core::{Error, Game, GamePosition, HdaDocument, Move, Role, Status};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Default)]
pub struct Sessions {
    next: AtomicU64,
    games: Mutex<HashMap<String, Arc<Mutex<Game>>>>,
}

impl Sessions {
    fn get(&self, id: &str) -> Result<Arc<Mutex<Game>>, ApiError> {
        self.games
            .lock()
            .expect("session table lock")
            .get(id)
            .cloned()
            .ok_or_else(|| ApiError::new(StatusCode::NOT_FOUND, format!("no game `{id}`")))
    }
}

pub type AppState = Arc<Sessions>;

#[derive(Debug, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct NewGame {
    pub hda_a: HdaDocument,
    pub hda_b: HdaDocument,
    pub role: Role,
    #[serde(default)]
    pub labeled: bool,
    pub round_limit: Option<usize>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Created {
    pub game_id: String,
    pub position: GamePosition,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct Snapshot {
    pub position: GamePosition,
    pub status: Status,
    pub history: Vec<HistoryEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct Moves {
    pub moves: Vec<Move>,
}

#[derive(Debug, Deserialize)]
pub struct MoveRequest {
    #[serde(rename = "move")]
    pub mv: Move,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MoveResponse {
    pub engine_reply: Option<Move>,
    pub position: GamePosition,
    pub status: Status,
}

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    body: Value,
}

impl ApiError {
    fn new(status: StatusCode, message: String) -> Self {
        ApiError { status, body: json!({ "error": message }) }
    }
}

impl From<Error> for ApiError {
    fn from(e: Error) -> Self {
        match e {
            Error::IllegalMove { reason, legal } => {
                let legal: Vec<Value> = legal.iter().filter_map(|m| serde_json::from_str(m).ok()).collect();
                ApiError { status: StatusCode::CONFLICT, body: json!({ "error": reason, "legal": legal }) }
            }
            Error::GameOver(_) => ApiError::new(StatusCode::CONFLICT, e.to_string()),
            e if e.is_resource() => ApiError::new(StatusCode::UNPROCESSABLE_ENTITY, e.to_string()),
            e => ApiError::new(StatusCode::BAD_REQUEST, e.to_string()),
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(self.body)).into_response()
    }
}

pub fn router() -> Router {
    router_with(AppState::default())
}

pub fn router_with(state: AppState) -> Router {
    Router::new()
        .route("/game/new", post(new_game))
        .route("/game/{id}", get(show).delete(remove))
        .route("/game/{id}/moves", get(moves))
        .route("/game/{id}/move", post(play))
        .with_state(state)
}

async fn new_game(State(state): State<AppState>, Json(req): Json<NewGame>) -> Result<Json<Created>, ApiError> {
    let parse = |d: &HdaDocument| d.to_hda().map_err(|e| ApiError::new(StatusCode::BAD_REQUEST, e.to_string()));
    let (a, b) = (parse(&req.hda_a)?, parse(&req.hda_b)?);
    let game = Game::new(a, b, req.role, req.labeled, req.round_limit.unwrap_or(DEFAULT_ROUND_LIMIT))?;
    let position = game.position();
    let id = format!("g{}", state.next.fetch_add(1, Ordering::Relaxed) + 1);
    state.games.lock().expect("session table lock").insert(id.clone(), Arc::new(Mutex::new(game)));
    Ok(Json(Created { game_id: id, position }))
}

async fn show(State(state): State<AppState>, Path(id): Path<String>) -> Result<Json<Snapshot>, ApiError> {
    let game = state.get(&id)?;
    let position = game.lock().expect("game lock").position();
    Ok(Json(Snapshot { status: position.status, history: position.history.clone(), position }))
}

async fn moves(State(state): State<AppState>, Path(id): Path<String>) -> Result<Json<Moves>, ApiError> {
    let game = state.get(&id)?;
    let moves = game.lock().expect("game lock").legal_moves()?;
    Ok(Json(Moves { moves }))
}

async fn play(
    State(state): State<AppState>,
    Path(id): Path<String>,
    Json(req): Json<MoveRequest>,
) -> Result<Json<MoveResponse>, ApiError> {
    let game = state.get(&id)?;
    let mut game = game.lock().expect("game lock");
    let engine_reply = game.play(req.mv)?;
    let position = game.position();
    Ok(Json(MoveResponse { engine_reply, status: position.status, position }))
}

async fn remove(State(state): State<AppState>, Path(id): Path<String>) -> Result<StatusCode, ApiError> {
    match state.games.lock().expect("session table lock").remove(&id) {
        Some(_) => Ok(StatusCode::NO_CONTENT),
        None => Err(ApiError::new(StatusCode::NOT_FOUND, format!("no game `{id}`"))),
    }
}

pub async fn serve(port: u16) -> anyhow::Result<()> {
    let listener = tokio::net::TcpListener::bind(("0.0.0.0", port)).await?;
    eprintln!("listening on {}", listener.local_addr()?);
    axum::serve(listener, router()).await?;
    Ok(())
}
