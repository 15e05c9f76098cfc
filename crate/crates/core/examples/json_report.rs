use hankel_spectra::cli::{execute, Command, Format, Options};

fn main() {
    let doc = r#"{"poly": ["-12", "16", "-7", "1"]}"#;
    let out = execute(Command::Analyze, doc, Options::default());
    print!("{}", out.stdout);

    let text = execute(Command::Gap, doc, Options { format: Format::Text, ..Options::default() });
    print!("{}", text.stdout);

    let bad = execute(Command::Gap, r#"{"poly": ["5", "-2", "1"]}"#, Options::default());
    eprint!("exit {}: {}", bad.code, bad.stderr);
}
