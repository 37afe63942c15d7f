use std::fmt;

use qeuler::Error;

pub const EXIT_FAILED_CHECK: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_DIVERGENCE: u8 = 3;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    /// A parse or validation problem attributed to one flag.
    pub fn usage(flag: &str, msg: impl fmt::Display) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: format!("{flag}: {msg}"),
        }
    }

    pub fn at(flag: &str) -> impl Fn(Error) -> CliError + '_ {
        move |e| CliError::usage(flag, e)
    }

    /// Divergence, tail-bound and term-cap failures exit with 3; anything else
    /// raised during evaluation is a validation error.
    pub fn evaluation(e: Error) -> Self {
        let code = match e {
            Error::Divergence(_) | Error::TailBound { .. } | Error::TermCap { .. } => {
                EXIT_DIVERGENCE
            }
            _ => EXIT_USAGE,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }

    pub fn config(e: Error) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }

    pub fn io(e: std::io::Error) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: format!("--output: {e}"),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}
