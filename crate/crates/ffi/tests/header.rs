//! Compiles the generated header, and a small C program linked against the
//! static library, with the system C compiler. Skipped when `cc` is absent.

use std::path::{Path, PathBuf};
use std::process::Command;

fn manifest() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn have_cc() -> bool {
    Command::new("cc").arg("--version").output().is_ok_and(|o| o.status.success())
}

#[test]
fn header_is_valid_c_and_cpp() {
    if !have_cc() {
        eprintln!("cc not found; skipping");
        return;
    }
    let header = manifest().join("include/idemsplit.h");
    assert!(header.exists(), "header was not generated");
    for lang in ["c", "c++"] {
        let status = Command::new("cc")
            .args(["-fsyntax-only", "-Wall", "-Werror", "-x", lang])
            .arg(&header)
            .status()
            .expect("cc runs");
        assert!(status.success(), "header does not compile as {lang}");
    }
}

/// `target/<profile>`, from the test binary in `target/<profile>/deps`.
fn artifact_dir() -> PathBuf {
    let exe = std::env::current_exe().expect("test executable path");
    exe.parent().and_then(Path::parent).expect("deps dir").to_path_buf()
}

#[test]
fn c_program_links_and_runs() {
    let lib = artifact_dir().join("libidemsplit_ffi.a");
    if !have_cc() || !lib.exists() {
        eprintln!("cc or {} missing; skipping", lib.display());
        return;
    }
    let out_dir = std::env::temp_dir().join(format!("idemsplit-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&out_dir).unwrap();
    let exe = out_dir.join("smoke");
    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-I")
        .arg(manifest().join("include"))
        .arg(manifest().join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("cc runs");
    assert!(status.success(), "smoke program failed to build");
    let run = Command::new(&exe).output().expect("smoke program runs");
    let _ = std::fs::remove_dir_all(&out_dir);
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert_eq!(String::from_utf8_lossy(&run.stdout), "ok\n");
}
