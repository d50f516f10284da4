//! HTTP API. Query parameters mirror the command line flags; responses are
//! the same documents the CLI prints (JSON unless `format` says otherwise).

use std::sync::Arc;

use axum::extract::{Query, State};
use axum::http::{header, StatusCode, Uri};
use axum::response::{Html, IntoResponse, Response};
use axum::routing::get;
use axum::Router;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use qx_core::service::{
    self, AnalyzeRequest, CatalogRequest, Format, GridRequest, PlotKind, RoadmapRequest,
    ThresholdRequest,
};
use qx_core::{DataStore, Error};

const INDEX: &str = include_str!("index.html");

#[derive(Debug, Serialize)]
pub struct ErrorBody {
    pub error: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub offset: Option<usize>,
}

fn error_response(e: &Error) -> Response {
    let status = if e.is_not_found() {
        StatusCode::NOT_FOUND
    } else {
        StatusCode::BAD_REQUEST
    };
    let body = ErrorBody {
        error: e.to_string(),
        offset: e.offset(),
    };
    (status, [(header::CONTENT_TYPE, "application/json")], service::to_json(&body)).into_response()
}

#[derive(Debug, Default, Deserialize)]
struct FormatParam {
    format: Option<String>,
}

#[derive(Debug, Deserialize)]
struct KindParam {
    kind: Option<String>,
}

fn query<T: DeserializeOwned>(uri: &Uri) -> Result<T, Error> {
    Query::<T>::try_from_uri(uri)
        .map(|Query(t)| t)
        .map_err(|e| Error::InvalidParameter {
            name: "query",
            message: e.body_text(),
        })
}

/// Parses the request, runs it and renders it in the requested format.
fn respond<R, V>(
    uri: &Uri,
    run: impl FnOnce(&R) -> Result<V, Error>,
    render: fn(&V, Format) -> Result<String, Error>,
) -> Response
where
    R: DeserializeOwned,
{
    let result = (|| {
        let format = match query::<FormatParam>(uri)?.format {
            Some(f) => f.parse()?,
            None => Format::Json,
        };
        let req: R = query(uri)?;
        let body = render(&run(&req)?, format)?;
        Ok::<_, Error>((format, body))
    })();
    match result {
        Ok((format, body)) => ([(header::CONTENT_TYPE, format.content_type())], body).into_response(),
        Err(e) => error_response(&e),
    }
}

type Shared = State<Arc<DataStore>>;

async fn threshold(State(store): Shared, uri: Uri) -> Response {
    respond(&uri, |r: &ThresholdRequest| service::threshold(&store, r), service::render_threshold)
}

async fn grid(State(store): Shared, uri: Uri) -> Response {
    respond(&uri, |r: &GridRequest| service::grid(&store, r), service::render_grid)
}

async fn analyze(State(store): Shared, uri: Uri) -> Response {
    respond(&uri, |r: &AnalyzeRequest| service::analyze_pair(&store, r), service::render_analyze)
}

async fn qaps(State(store): Shared, uri: Uri) -> Response {
    respond(&uri, |r: &AnalyzeRequest| service::qaps_query(&store, r), service::render_qaps)
}

async fn roadmap(State(store): Shared, uri: Uri) -> Response {
    respond(&uri, |r: &RoadmapRequest| service::roadmap(&store, r), service::render_roadmap)
}

async fn catalog(State(store): Shared, uri: Uri) -> Response {
    respond(&uri, |r: &CatalogRequest| service::catalog(&store, r), service::render_catalog_view)
}

async fn plot(State(store): Shared, uri: Uri) -> Response {
    let kind = query::<KindParam>(&uri).and_then(|k| match k.kind {
        Some(k) => k.parse::<PlotKind>(),
        None => Err(Error::InvalidParameter {
            name: "kind",
            message: "missing".into(),
        }),
    });
    match kind {
        Ok(kind) => respond(&uri, |r: &AnalyzeRequest| service::plot(&store, kind, r), service::render_plot),
        Err(e) => error_response(&e),
    }
}

async fn index() -> Html<&'static str> {
    Html(INDEX)
}

async fn not_found(uri: Uri) -> Response {
    let body = ErrorBody {
        error: format!("no route for {}", uri.path()),
        offset: None,
    };
    (StatusCode::NOT_FOUND, [(header::CONTENT_TYPE, "application/json")], service::to_json(&body)).into_response()
}

pub fn router(store: Arc<DataStore>) -> Router {
    Router::new()
        .route("/", get(index))
        .route("/api/threshold", get(threshold))
        .route("/api/grid", get(grid))
        .route("/api/analyze", get(analyze))
        .route("/api/qaps", get(qaps))
        .route("/api/roadmap", get(roadmap))
        .route("/api/catalog", get(catalog))
        .route("/api/plot", get(plot))
        .fallback(not_found)
        .with_state(store)
}

pub async fn serve(store: DataStore, host: &str, port: u16) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind((host, port)).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router(Arc::new(store)))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}
