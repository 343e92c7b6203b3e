use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] csjack_core::Error),
    #[error("{0}")]
    Input(String),
    #[error("lambda={lambda} with N={nvars}: requires l(lambda) <= N-1 (or Galilei reduction); pass --allow-shift")]
    RequiresShift { lambda: String, nvars: usize },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("thread pool: {0}")]
    ThreadPool(#[from] rayon::ThreadPoolBuildError),
}
