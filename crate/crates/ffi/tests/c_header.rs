use std::path::{Path, PathBuf};
use std::process::Command;

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn compiler(var: &str, default: &str) -> String {
    std::env::var(var).unwrap_or_else(|_| default.to_string())
}

/// `cargo test` does not emit the staticlib, so build it into a private
/// target directory.
fn static_library(target: &Path) -> PathBuf {
    let cargo = std::env::var("CARGO").unwrap_or_else(|_| "cargo".to_string());
    let status = Command::new(cargo)
        .args(["build", "--quiet", "-p", "dunkl-ffi", "--lib"])
        .arg("--manifest-path")
        .arg(crate_dir().join("Cargo.toml"))
        .env("CARGO_TARGET_DIR", target)
        .status()
        .expect("cargo runs");
    assert!(status.success());
    target.join("debug").join("libdunkl_ffi.a")
}

#[test]
fn header_compiles_as_c_and_cpp() {
    let include = crate_dir().join("include");
    for (cc, std) in [
        (compiler("CC", "cc"), "-std=c99"),
        (compiler("CXX", "c++"), "-std=c++17"),
    ] {
        let status = Command::new(&cc)
            .args(["-fsyntax-only", "-Wall", "-Werror", std, "-x"])
            .arg(if std.contains("++") { "c++" } else { "c" })
            .arg("-I")
            .arg(&include)
            .arg(include.join("dunkl.h"))
            .status()
            .expect("compiler runs");
        assert!(status.success(), "{cc} rejected the header");
    }
}

#[test]
fn c_program_links_against_the_static_library() {
    let target = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("ffi-static");
    let lib = static_library(&target);
    let exe = target.join("smoke");
    let status = Command::new(compiler("CC", "cc"))
        .args(["-std=c99", "-Wall", "-Werror", "-I"])
        .arg(crate_dir().join("include"))
        .arg(crate_dir().join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("C compiler runs");
    assert!(status.success());
    let output = Command::new(&exe).output().unwrap();
    assert!(
        output.status.success(),
        "{}",
        String::from_utf8_lossy(&output.stderr)
    );
    assert_eq!(String::from_utf8(output.stdout).unwrap(), "2 4*z1^2\n");
}
