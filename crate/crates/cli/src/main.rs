use clap::Parser;

fn main() {
    // die quietly when a pipe closes mid-output
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = qspace_cli::Cli::parse();
    std::process::exit(qspace_cli::run(cli));
}
