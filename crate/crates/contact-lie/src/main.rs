use std::io::Write;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let mut out = String::new();
    let mut err = String::new();
    let code = contact_lie::cli::run(&args, &mut out, &mut err);
    print!("{out}");
    let _ = write!(std::io::stderr(), "{err}");
    std::process::exit(code);
}
