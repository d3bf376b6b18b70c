// Copyright 2026 the Gion Sangaku Authors
// SPDX-License-Identifier: Apache-2.0

use std::io::Write;

fn main() {
    let outcome = gion::cli::run(std::env::args_os());
    // Ignore broken pipes; the status still reflects the command.
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    std::process::exit(outcome.status);
}
