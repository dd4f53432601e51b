//! Size guards for the exponential-time routines.
//!
//! Every exhaustive search in this crate is bounded by one of these caps. The
//! process-wide values start at [`Caps::DEFAULT`] and can be replaced with
//! [`Caps::install`]; the command-line front end does this from its
//! environment.

use core::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest graph accepted by canonical labelling.
    pub canonical: usize,
    /// Largest vertex count for loop-free enumeration.
    pub enumerate_loop_free: usize,
    /// Largest vertex count for enumeration with loops.
    pub enumerate_loops: usize,
    /// Largest graph accepted by automorphism search.
    pub automorphisms: usize,
    /// Largest instance for the sum over set partitions.
    pub partitions: usize,
}

impl Caps {
    pub const DEFAULT: Caps = Caps {
        canonical: 10,
        enumerate_loop_free: 6,
        enumerate_loops: 5,
        automorphisms: 10,
        partitions: 6,
    };

    pub fn current() -> Caps {
        Caps {
            canonical: CANONICAL.load(Ordering::Relaxed),
            enumerate_loop_free: ENUM_LOOP_FREE.load(Ordering::Relaxed),
            enumerate_loops: ENUM_LOOPS.load(Ordering::Relaxed),
            automorphisms: AUTOMORPHISMS.load(Ordering::Relaxed),
            partitions: PARTITIONS.load(Ordering::Relaxed),
        }
    }

    pub fn install(self) {
        CANONICAL.store(self.canonical, Ordering::Relaxed);
        ENUM_LOOP_FREE.store(self.enumerate_loop_free, Ordering::Relaxed);
        ENUM_LOOPS.store(self.enumerate_loops, Ordering::Relaxed);
        AUTOMORPHISMS.store(self.automorphisms, Ordering::Relaxed);
        PARTITIONS.store(self.partitions, Ordering::Relaxed);
    }

    pub fn enumeration_cap(&self, allow_loops: bool) -> usize {
        if allow_loops {
            self.enumerate_loops
        } else {
            self.enumerate_loop_free
        }
    }
}

impl Default for Caps {
    fn default() -> Self {
        Caps::DEFAULT
    }
}

static CANONICAL: AtomicUsize = AtomicUsize::new(Caps::DEFAULT.canonical);
static ENUM_LOOP_FREE: AtomicUsize = AtomicUsize::new(Caps::DEFAULT.enumerate_loop_free);
static ENUM_LOOPS: AtomicUsize = AtomicUsize::new(Caps::DEFAULT.enumerate_loops);
static AUTOMORPHISMS: AtomicUsize = AtomicUsize::new(Caps::DEFAULT.automorphisms);
static PARTITIONS: AtomicUsize = AtomicUsize::new(Caps::DEFAULT.partitions);

pub(crate) fn check(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::CapExceeded { what, size, cap })
    } else {
        Ok(())
    }
}
