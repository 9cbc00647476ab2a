// Drive the JSON job runner in-process, as the `pstrata` binary does.

use std::error::Error;

use parabolic_strata::cli::run_command;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let jobs = [
        ("dim", r#"{"g": 3, "r": 2, "points": []}"#),
        (
            "codim",
            r#"{"g": 2, "r": 2, "d": 2, "points": [{"weights": ["1/4", "1/2"], "mults": [1, 1]}]}"#,
        ),
        (
            "generic",
            r#"{"rank": 2, "degree": 0, "points": [{"weights": ["1/4"], "mults": [2]}]}"#,
        ),
        ("flagcoh", r#"{"type": "A2", "parabolics": [[1], [2]]}"#),
    ];
    for (cmd, input) in jobs {
        let out = run_command(&["pstrata", cmd], input.as_bytes());
        if out.code != 0 {
            return Err(String::from_utf8_lossy(&out.stderr).into_owned().into());
        }
        print!("{}", String::from_utf8(out.stdout)?);
    }
    let bad = run_command(&["pstrata", "codim"], br#"{"g": 2}"#);
    println!(
        "invalid input -> exit {}: {}",
        bad.code,
        String::from_utf8_lossy(&bad.stderr).trim()
    );
    assert_eq!(bad.code, 2);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("cli example failed");
}
