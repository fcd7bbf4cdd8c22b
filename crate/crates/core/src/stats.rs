//! Phase tracking: wall time, memory offset/peak and custom statistics per
//! named code section, collected into a JSON-serializable tree.
//!
//! Memory figures come from [`TrackingAllocator`]; they read as zero unless a
//! binary installs it as its `#[global_allocator]`.

use serde::{Deserialize, Serialize};
use std::alloc::{GlobalAlloc, Layout, System};
use std::cell::RefCell;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::time::Instant;

static CURRENT: AtomicUsize = AtomicUsize::new(0);
static PEAK: AtomicUsize = AtomicUsize::new(0);
static INSTALLED: AtomicBool = AtomicBool::new(false);

/// Global allocator wrapper that keeps current and peak heap usage.
///
/// ```ignore
/// #[global_allocator]
/// static ALLOC: tdc_core::stats::TrackingAllocator = tdc_core::stats::TrackingAllocator;
/// ```
pub struct TrackingAllocator;

unsafe impl GlobalAlloc for TrackingAllocator {
    unsafe fn alloc(&self, layout: Layout) -> *mut u8 {
        let p = System.alloc(layout);
        if !p.is_null() {
            on_alloc(layout.size());
        }
        p
    }

    unsafe fn dealloc(&self, ptr: *mut u8, layout: Layout) {
        System.dealloc(ptr, layout);
        CURRENT.fetch_sub(layout.size(), Ordering::Relaxed);
    }

    unsafe fn alloc_zeroed(&self, layout: Layout) -> *mut u8 {
        let p = System.alloc_zeroed(layout);
        if !p.is_null() {
            on_alloc(layout.size());
        }
        p
    }

    unsafe fn realloc(&self, ptr: *mut u8, layout: Layout, new_size: usize) -> *mut u8 {
        let p = System.realloc(ptr, layout, new_size);
        if !p.is_null() {
            CURRENT.fetch_sub(layout.size(), Ordering::Relaxed);
            on_alloc(new_size);
        }
        p
    }
}

#[inline]
fn on_alloc(size: usize) {
    INSTALLED.store(true, Ordering::Relaxed);
    let now = CURRENT.fetch_add(size, Ordering::Relaxed) + size;
    PEAK.fetch_max(now, Ordering::Relaxed);
}

/// Whether the tracking allocator is active in this process.
pub fn memory_tracking_enabled() -> bool {
    INSTALLED.load(Ordering::Relaxed)
}

/// Bytes currently allocated through the tracking allocator.
pub fn current_memory() -> usize {
    CURRENT.load(Ordering::Relaxed)
}

/// Statistics of one phase.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct PhaseStats {
    pub name: String,
    #[serde(rename = "timeMs")]
    pub time_ms: f64,
    /// Heap bytes in use when the phase started.
    #[serde(rename = "memOff")]
    pub mem_off: usize,
    /// Peak heap bytes above `mem_off` during the phase.
    #[serde(rename = "memPeak")]
    pub mem_peak: usize,
    pub stats: serde_json::Map<String, serde_json::Value>,
    pub sub: Vec<PhaseStats>,
}

/// The top-level stats document.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct StatsReport {
    pub title: String,
    pub phases: Vec<PhaseStats>,
}

impl StatsReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("stats serialize")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

struct Open {
    stats: PhaseStats,
    start: Instant,
    // peak of the enclosing phase before this one started
    outer_peak: usize,
}

thread_local! {
    static STACK: RefCell<Option<Vec<Open>>> = const { RefCell::new(None) };
}

/// A stats collection on the current thread. Phases opened by [`phase`] while
/// the session is alive are recorded; without a session they only run.
pub struct Session {
    title: String,
}

impl Session {
    pub fn begin(title: impl Into<String>) -> Self {
        STACK.with(|s| {
            let mut s = s.borrow_mut();
            assert!(s.is_none(), "a stats session is already active on this thread");
            *s = Some(Vec::new());
        });
        let title = title.into();
        open(title.clone());
        Session { title }
    }

    pub fn finish(mut self) -> StatsReport {
        let root = close();
        StatsReport { title: std::mem::take(&mut self.title), phases: root.sub }
    }
}

impl Drop for Session {
    fn drop(&mut self) {
        STACK.with(|s| *s.borrow_mut() = None);
    }
}

fn active() -> bool {
    STACK.with(|s| s.borrow().is_some())
}

fn open(name: String) {
    let current = current_memory();
    let outer_peak = PEAK.swap(current, Ordering::Relaxed);
    STACK.with(|s| {
        if let Some(stack) = s.borrow_mut().as_mut() {
            stack.push(Open {
                stats: PhaseStats { name, mem_off: current, ..Default::default() },
                start: Instant::now(),
                outer_peak,
            });
        }
    });
}

fn close() -> PhaseStats {
    STACK.with(|s| {
        let mut s = s.borrow_mut();
        let stack = s.as_mut().expect("no active stats session");
        let mut open = stack.pop().expect("unbalanced phase");
        let peak = PEAK.load(Ordering::Relaxed);
        open.stats.time_ms = open.start.elapsed().as_secs_f64() * 1000.0;
        open.stats.mem_peak = peak.saturating_sub(open.stats.mem_off);
        PEAK.fetch_max(open.outer_peak, Ordering::Relaxed);
        if let Some(parent) = stack.last_mut() {
            parent.stats.sub.push(open.stats.clone());
        }
        open.stats
    })
}

/// Runs `body` as a named phase nested under the currently open one.
pub fn phase<R>(name: &str, body: impl FnOnce() -> R) -> R {
    if !active() {
        return body();
    }
    open(name.to_string());
    let guard = CloseOnDrop;
    let r = body();
    drop(guard);
    r
}

struct CloseOnDrop;

impl Drop for CloseOnDrop {
    fn drop(&mut self) {
        if active() {
            close();
        }
    }
}

/// Attaches a custom statistic to the innermost open phase.
pub fn log(key: &str, value: impl Into<serde_json::Value>) {
    STACK.with(|s| {
        if let Some(top) = s.borrow_mut().as_mut().and_then(|st| st.last_mut()) {
            top.stats.stats.insert(key.to_string(), value.into());
        }
    });
}
