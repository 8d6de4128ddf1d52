use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::MAX_ORDER;

/// Hard ceiling for anything that scans all `2^n` vertex subsets.
pub const HARD_ENUMERATION_CAP: usize = 24;

/// Above this order full scans still run but are slow enough to warn about.
pub const WARN_ENUMERATION_ORDER: usize = 20;

/// Hard ceiling for exhaustive sweeps over labeled graphs.
pub const HARD_SWEEP_ORDER: usize = 7;

/// Runtime size limits. Every field is clamped to its hard ceiling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub order_cap: usize,
    pub enumeration_cap: usize,
    pub sweep_max_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            order_cap: MAX_ORDER,
            enumeration_cap: HARD_ENUMERATION_CAP,
            sweep_max_order: 6,
        }
    }
}

impl Limits {
    pub fn new(order_cap: usize, enumeration_cap: usize, sweep_max_order: usize) -> Result<Self> {
        if order_cap == 0 || order_cap > MAX_ORDER {
            return Err(Error::InvalidParameter(format!(
                "order cap must be in 1..={MAX_ORDER}"
            )));
        }
        if enumeration_cap == 0 || enumeration_cap > HARD_ENUMERATION_CAP {
            return Err(Error::InvalidParameter(format!(
                "enumeration cap must be in 1..={HARD_ENUMERATION_CAP}"
            )));
        }
        if sweep_max_order == 0 || sweep_max_order > HARD_SWEEP_ORDER {
            return Err(Error::InvalidParameter(format!(
                "sweep order must be in 1..={HARD_SWEEP_ORDER}"
            )));
        }
        Ok(Limits {
            order_cap,
            enumeration_cap,
            sweep_max_order,
        })
    }

    pub fn check_order(&self, g: &Graph) -> Result<()> {
        let cap = self.order_cap.min(MAX_ORDER);
        if g.order() > cap {
            Err(Error::OrderOutOfRange { n: g.order(), cap })
        } else {
            Ok(())
        }
    }

    pub fn check_enumeration(&self, g: &Graph) -> Result<()> {
        let cap = self.enumeration_cap.min(HARD_ENUMERATION_CAP);
        if g.order() > cap {
            Err(Error::EnumerationCap { n: g.order(), cap })
        } else {
            Ok(())
        }
    }
}
