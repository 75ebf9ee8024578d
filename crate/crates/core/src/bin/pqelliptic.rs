fn main() -> std::process::ExitCode {
    pqelliptic::cli::main()
}
