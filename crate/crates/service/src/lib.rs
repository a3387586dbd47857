//! HTTP facade over the puzzle engine.
//!
//! * `POST /puzzle/new` creates a session and returns its clue grid.
//! * `POST /puzzle/{id}/validate` checks a working grid.
//! * `POST /puzzle/{id}/hint` reveals one cell of the stored solution.
//!
//! Sessions are immutable and kept in memory; the client owns the working
//! grid and posts it with every request.

mod api;
mod error;
mod session;

use std::net::SocketAddr;
use std::time::Duration;

use axum::routing::post;
use axum::Router;
use tower_http::cors::CorsLayer;

pub use api::{HintResponse, NewPuzzleRequest, NewPuzzleResponse, ValidateResponse};
pub use error::ApiError;
pub use session::{Session, SessionStore, DEFAULT_TTL};

pub fn app(store: SessionStore) -> Router {
    Router::new()
        .route("/puzzle/new", post(api::new_puzzle))
        .route("/puzzle/{id}/validate", post(api::validate))
        .route("/puzzle/{id}/hint", post(api::hint))
        .layer(CorsLayer::permissive())
        .with_state(store)
}

/// Serves on `0.0.0.0:port` until the process ends.
pub async fn serve(port: u16, ttl: Duration) -> std::io::Result<()> {
    let store = SessionStore::new(ttl);
    let addr = SocketAddr::from(([0, 0, 0, 0], port));
    let listener = tokio::net::TcpListener::bind(addr).await?;
    tracing::info!("listening on {}", listener.local_addr()?);
    axum::serve(listener, app(store)).await
}
