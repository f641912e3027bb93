//! Built-in arrangements, addressable by name from the CLI and tests.
//!
//! | name            | arrangement                                      |
//! |-----------------|--------------------------------------------------|
//! | `example-a`     | `xy(x+y)` in `C^2`                               |
//! | `example-b1`    | `(x^2-y^2)(x+z)(x+2z)` in `C^3`                  |
//! | `example-b2`    | `(x^2-y^2)(x^2-z^2)` in `C^3`                    |
//! | `lines:<d>`     | `d` distinct reduced lines through 0 in `C^2`    |
//! | `generic3d:<m>` | `m` planes in general position in `C^3`          |
//! | `braid4`        | `xyz(x-y)(x-z)(y-z)`, the essential braid arrangement of rank 3 |

use crate::{Arrangement, Error, Hyperplane, Result};

pub const NAMES: &[&str] =
    &["example-a", "example-b1", "example-b2", "lines:<d>", "generic3d:<m>", "braid4"];

pub fn by_name(name: &str) -> Result<Arrangement> {
    let planes = |rows: &[[i64; 3]]| rows.iter().map(|r| Hyperplane::reduced(r)).collect();
    match name {
        "example-a" => Arrangement::new(
            2,
            vec![Hyperplane::reduced(&[1, 0]), Hyperplane::reduced(&[0, 1]), Hyperplane::reduced(&[1, 1])],
        ),
        "example-b1" => Arrangement::new(3, planes(&[[1, -1, 0], [1, 1, 0], [1, 0, 1], [1, 0, 2]])),
        "example-b2" => Arrangement::new(3, planes(&[[1, -1, 0], [1, 1, 0], [1, 0, -1], [1, 0, 1]])),
        "braid4" => Arrangement::new(
            3,
            planes(&[[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, -1, 0], [1, 0, -1], [0, 1, -1]]),
        ),
        _ => {
            if let Some(d) = name.strip_prefix("lines:") {
                lines(parse_count(name, d)?)
            } else if let Some(m) = name.strip_prefix("generic3d:") {
                generic3d(parse_count(name, m)?)
            } else {
                Err(Error::Validation(format!(
                    "unknown fixture `{name}` (known: {})",
                    NAMES.join(", ")
                )))
            }
        }
    }
}

fn parse_count(name: &str, s: &str) -> Result<usize> {
    s.parse::<usize>()
        .ok()
        .filter(|&k| k >= 1)
        .ok_or_else(|| Error::Validation(format!("fixture `{name}`: expected a positive count")))
}

/// `d` distinct reduced lines through the origin of `C^2`.
pub fn lines(d: usize) -> Result<Arrangement> {
    let hs = (0..d as i64).map(|t| Hyperplane::reduced(&[1, t])).collect();
    Arrangement::new(2, hs)
}

/// `m` planes in `C^3` with normals on the moment curve `(1, t, t^2)`, so
/// any three are independent.
pub fn generic3d(m: usize) -> Result<Arrangement> {
    let hs = (0..m as i64).map(|t| Hyperplane::reduced(&[1, t, t * t])).collect();
    Arrangement::new(3, hs)
}
