//! Driving the command line from code (the `anfield` binary is a thin wrapper).
//!
//! ```bash
//! cargo run -p anfield --example cli
//! cargo run -p anfield --bin anfield -- data --k 2 --ell 1 --format text
//! ```

fn main() {
    let mut out = Vec::new();
    let code = anfield::cli::run(["anfield", "classify", "--k", "2", "--format", "text"], &mut out);
    print!("{}", String::from_utf8_lossy(&out));
    println!("exit code {code}");
}
