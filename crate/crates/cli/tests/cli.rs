use std::fs;
use std::process::{Command, Output};

fn proxheat(args: &[&str], materials: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_proxheat"));
    cmd.args(args).env_remove("PROXHEAT_MATERIALS");
    if let Some(path) = materials {
        cmd.env("PROXHEAT_MATERIALS", path);
    }
    cmd.output().expect("binary runs")
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

const SCENARIO: &str = r#"
materials = ["Cu"]
channels = ["ion_surface"]

[[material]]
name = "Cu"
resistivity_ohm_cm = 1.7e-6

[trap]
omega_t_hz = 1.0e6
temperature_k = 300.0

[particle]
mass_amu = 9.0
charge_e = 1.0

[sweep]
variable = "distance_um"
min = 10.0
max = 100.0
points = 2
spacing = "linear"
"#;

#[test]
fn out_and_svg_plot_files() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("fig3.csv");
    let svg = dir.path().join("fig3.svg");
    let o = proxheat(
        &["--preset", "fig3-spin-phonon", "--out", csv.to_str().unwrap(), "--plot", svg.to_str().unwrap()],
        None,
    );
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(o.stdout.is_empty());
    let text = fs::read_to_string(&csv).unwrap();
    assert!(text.contains("z_m,spin_surface:Ag,spin_surface:glass,phonon_vdw:Ag,warnings"));
    let plot = fs::read_to_string(&svg).unwrap();
    assert!(plot.starts_with("<svg") && plot.contains(">phonon_vdw:Ag</text>"));
}

#[test]
fn ascii_plot_goes_to_stderr_when_csv_is_on_stdout() {
    let o = proxheat(&["--preset", "fig2-ion-ag", "--plot", "ascii", "--quiet"], None);
    assert!(o.status.success());
    let out = String::from_utf8_lossy(&o.stdout);
    assert!(out.starts_with('#') && !out.contains("log-log"));
    assert!(stderr(&o).contains("* ion_surface"));
}

#[test]
fn user_config_with_inline_material() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cu.toml");
    fs::write(&path, SCENARIO).unwrap();
    let o = proxheat(&["--config", path.to_str().unwrap()], None);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = String::from_utf8(o.stdout).unwrap();
    let rows: Vec<&str> = out.lines().skip(2).collect();
    assert_eq!(rows.len(), 2);
    assert!(rows[0].starts_with("1.00000000e-5,"));
    assert!(rows[1].starts_with("1.00000000e-4,"));
}

#[test]
fn materials_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let db = dir.path().join("materials.toml");
    fs::write(&db, "[[material]]\nname = \"Au\"\nresistivity_ohm_cm = 2.2e-6\n").unwrap();
    let scenario = dir.path().join("au.toml");
    fs::write(&scenario, SCENARIO.replace("[\"Cu\"]", "[\"Au\"]")).unwrap();
    let without = proxheat(&["--config", scenario.to_str().unwrap()], None);
    assert_eq!(without.status.code(), Some(1));
    assert!(stderr(&without).contains("error[config]: unknown material `Au`"));
    let with = proxheat(&["--config", scenario.to_str().unwrap()], db.to_str());
    assert!(with.status.success(), "{}", stderr(&with));
}

#[test]
fn config_errors_name_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.toml");
    fs::write(&path, SCENARIO.replace("max = 100.0", "max = 1.0")).unwrap();
    let o = proxheat(&["--config", path.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("min < max"), "{}", stderr(&o));

    fs::write(&path, SCENARIO.replace("mass_amu", "mass")).unwrap();
    let o = proxheat(&["--config", path.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line"), "{}", stderr(&o));
}

#[test]
fn argument_errors_and_help() {
    assert_eq!(proxheat(&[], None).status.code(), Some(1));
    assert_eq!(proxheat(&["--preset", "a", "--config", "b"], None).status.code(), Some(1));
    assert_eq!(proxheat(&["--preset", "fig2-ion-ag", "--format", "json"], None).status.code(), Some(1));
    let help = proxheat(&["--help"], None);
    assert!(help.status.success());
    assert!(String::from_utf8_lossy(&help.stdout).contains("--preset"));
}

#[test]
fn unwritable_output_is_io_error() {
    let o = proxheat(&["--preset", "fig2-ion-ag", "--out", "/nonexistent-dir/x.csv"], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error[io]: /nonexistent-dir/x.csv"));
}
