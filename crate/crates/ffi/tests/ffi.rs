use std::ffi::{c_char, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use lefcon_ffi::*;

fn fixture(name: &str) -> CString {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(name);
    CString::new(path.display().to_string()).unwrap()
}

fn load(name: &str) -> *mut LefconWorkspace {
    let mut ws = ptr::null_mut();
    let status = unsafe { lefcon_workspace_load(fixture(name).as_ptr(), &mut ws) };
    assert_eq!(status, LefconStatus::Ok, "{}", last_error());
    assert!(!ws.is_null());
    ws
}

fn last_error() -> String {
    let p = lefcon_last_error();
    if p.is_null() {
        String::new()
    } else {
        unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
    }
}

fn run(ws: *const LefconWorkspace, args: &[&str]) -> (LefconStatus, Option<serde_json::Value>) {
    let owned: Vec<CString> = args.iter().map(|a| CString::new(*a).unwrap()).collect();
    let argv: Vec<*const c_char> = owned.iter().map(|a| a.as_ptr()).collect();
    let mut out = ptr::null_mut();
    let status = unsafe { lefcon_run(ws, argv.as_ptr(), argv.len(), &mut out) };
    if out.is_null() {
        return (status, None);
    }
    let text = unsafe { CStr::from_ptr(out) }.to_str().unwrap().to_string();
    unsafe { lefcon_string_free(out) };
    (status, Some(serde_json::from_str(&text).unwrap()))
}

#[test]
fn betti_and_euler_through_handles() {
    let ws = load("torus.lef");
    let name = CString::new("torus7").unwrap();
    let mut len = 0usize;
    let status = unsafe { lefcon_betti(ws, name.as_ptr(), ptr::null_mut(), 0, &mut len) };
    assert_eq!(status, LefconStatus::BufferTooSmall);
    assert_eq!(len, 3);
    let mut betti = [0usize; 3];
    let status = unsafe { lefcon_betti(ws, name.as_ptr(), betti.as_mut_ptr(), betti.len(), &mut len) };
    assert_eq!(status, LefconStatus::Ok);
    assert_eq!(betti, [1, 2, 1]);
    let mut chi = 99i64;
    assert_eq!(unsafe { lefcon_euler(ws, name.as_ptr(), &mut chi) }, LefconStatus::Ok);
    assert_eq!(chi, 0);
    unsafe { lefcon_workspace_free(ws) };
}

#[test]
fn run_reports_follow_outcomes() {
    let ws = load("circles.lef");
    let (status, report) = run(ws, &["equilibrium", "doubling", "--oracle"]);
    assert_eq!(status, LefconStatus::Ok);
    let report = report.unwrap();
    assert_eq!(report["outcome"], "certified");
    assert_eq!(report["exit_code"], 0);
    let (status, report) = run(ws, &["lefschetz-number", "tri_rot", "--oracle"]);
    assert_eq!(status, LefconStatus::NotCertified);
    assert_eq!(report.unwrap()["result"]["value"], "0/1");
    unsafe { lefcon_workspace_free(ws) };
}

#[test]
fn input_errors_set_the_message() {
    let ws = load("circles.lef");
    let (status, report) = run(ws, &["betti", "nowhere"]);
    assert_eq!(status, LefconStatus::InputError);
    assert!(report.is_none());
    assert!(last_error().contains("nowhere"), "{}", last_error());
    let (status, _) = run(ws, &["no-such-command"]);
    assert_eq!(status, LefconStatus::InputError);
    let (status, _) = run(ws, &["betti", "tri", "--workspace", "x.lef"]);
    assert_eq!(status, LefconStatus::InputError);
    let (status, _) = run(ws, &["betti", "tri"]);
    assert_eq!(status, LefconStatus::Ok);
    assert!(lefcon_last_error().is_null());
    unsafe { lefcon_workspace_free(ws) };
}

#[test]
fn parse_errors_and_null_arguments() {
    let mut ws = ptr::null_mut();
    let bad = CString::new("complex a\n  vertices 0 1\n  facet 0 2\nend\n").unwrap();
    assert_eq!(
        unsafe { lefcon_workspace_parse(bad.as_ptr(), &mut ws) },
        LefconStatus::InputError
    );
    assert!(ws.is_null());
    assert!(last_error().contains("line 3"), "{}", last_error());
    assert_eq!(
        unsafe { lefcon_workspace_parse(ptr::null(), &mut ws) },
        LefconStatus::NullArgument
    );
    let good = CString::new("complex a\n  vertices 0 1\n  facet 0 1\nend\n").unwrap();
    assert_eq!(
        unsafe { lefcon_workspace_parse(good.as_ptr(), ptr::null_mut()) },
        LefconStatus::NullArgument
    );
    let mut chi = 0;
    let name = CString::new("a").unwrap();
    assert_eq!(
        unsafe { lefcon_euler(ptr::null(), name.as_ptr(), &mut chi) },
        LefconStatus::NullArgument
    );
    let invalid = [0xffu8, 0];
    assert_eq!(
        unsafe { lefcon_workspace_parse(invalid.as_ptr().cast(), &mut ws) },
        LefconStatus::InvalidUtf8
    );
    let missing = CString::new("/nonexistent/file.lef").unwrap();
    assert_eq!(
        unsafe { lefcon_workspace_load(missing.as_ptr(), &mut ws) },
        LefconStatus::InputError
    );
    unsafe {
        lefcon_workspace_free(ptr::null_mut());
        lefcon_string_free(ptr::null_mut());
    }
}

#[test]
fn version_matches_the_package() {
    let v = unsafe { CStr::from_ptr(lefcon_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("include/lefcon.h")).unwrap();
    for name in [
        "lefcon_workspace_parse",
        "lefcon_workspace_load",
        "lefcon_workspace_free",
        "lefcon_run",
        "lefcon_betti",
        "lefcon_euler",
        "lefcon_last_error",
        "lefcon_string_free",
        "lefcon_version",
        "typedef struct LefconWorkspace LefconWorkspace",
        "LEFCON_STATUS_SOUNDNESS_VIOLATION = 3",
    ] {
        assert!(header.contains(name), "missing {name}");
    }
}

/// Compiles the C smoke program against the header and the static library.
#[test]
fn c_program_links_and_runs() {
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(Path::parent).unwrap();
    let archive = profile_dir.join("liblefcon_ffi.a");
    assert!(archive.exists(), "static library not found at {}", archive.display());
    let out_dir = profile_dir.join("ffi-smoke");
    std::fs::create_dir_all(&out_dir).unwrap();
    let binary = out_dir.join("smoke");
    let status = Command::new("cc")
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&archive)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&binary)
        .status()
        .expect("a C compiler is available");
    assert!(status.success());
    let output = Command::new(&binary).output().unwrap();
    assert!(output.status.success(), "{}", String::from_utf8_lossy(&output.stderr));
    assert!(String::from_utf8_lossy(&output.stdout).starts_with("ok "));
}
