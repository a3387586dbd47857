use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::Json;
use serde_json::json;

use warping_core::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ApiError {
    /// 400: unreadable body, bad knot, bad rules, grid of the wrong shape.
    BadRequest(String),
    /// 404
    UnknownSession(String),
    /// 409: nothing left to hint.
    Complete,
    /// 422: well-formed request the generator cannot satisfy.
    Unprocessable(String),
    /// 500
    Internal(String),
}

impl ApiError {
    pub fn status(&self) -> StatusCode {
        match self {
            ApiError::BadRequest(_) => StatusCode::BAD_REQUEST,
            ApiError::UnknownSession(_) => StatusCode::NOT_FOUND,
            ApiError::Complete => StatusCode::CONFLICT,
            ApiError::Unprocessable(_) => StatusCode::UNPROCESSABLE_ENTITY,
            ApiError::Internal(_) => StatusCode::INTERNAL_SERVER_ERROR,
        }
    }

    fn message(&self) -> String {
        match self {
            ApiError::BadRequest(m) | ApiError::Unprocessable(m) | ApiError::Internal(m) => {
                m.clone()
            }
            ApiError::UnknownSession(id) => format!("no session {id:?}"),
            ApiError::Complete => "the grid is already complete".into(),
        }
    }

    /// Generation errors: input problems are 400, impossible requests 422.
    pub(crate) fn from_generation(e: Error) -> ApiError {
        match e {
            Error::NoCrossings | Error::TooManyCrossings(_) | Error::RuleBroken(_) => {
                ApiError::Unprocessable(e.to_string())
            }
            Error::Internal(m) => ApiError::Internal(m),
            other => ApiError::BadRequest(other.to_string()),
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status(), Json(json!({ "error": self.message() }))).into_response()
    }
}
