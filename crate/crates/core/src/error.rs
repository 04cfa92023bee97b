use thiserror::Error;

/// Returned by operations whose exact-arithmetic cost is exponential in the
/// ground-set size when the input exceeds the documented cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("{operation}: ground set of {size} elements exceeds the supported cap of {cap}")]
pub struct CapExceeded {
    pub operation: &'static str,
    pub size: usize,
    pub cap: usize,
}

impl CapExceeded {
    pub(crate) fn check(operation: &'static str, size: usize, cap: usize) -> Result<(), Self> {
        if size > cap {
            Err(CapExceeded {
                operation,
                size,
                cap,
            })
        } else {
            Ok(())
        }
    }
}
