#[global_allocator]
static ALLOC: tdc_core::stats::TrackingAllocator = tdc_core::stats::TrackingAllocator;

fn main() {
    let code = tdc_cli::run(std::env::args_os(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::exit(code as i32);
}
