use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use dcpo_core::canon::enumerate_posets;
use dcpo_core::domain::{
    birkhoff_round_trip, dl_sup_condition, dl_sup_condition_scoped, domain_class,
    mub_properties, qc_generation_condition, scott_lattice, special_elements, DlSupScope,
    ScanReport, ScanUniverse,
};
use dcpo_core::lattice::{c_compact_elements, is_distributive, is_vee_irreducible, join_irreducibles};
use dcpo_core::topology::{
    classify_space, directed_point_sup_check, scott_closed_family, IrrPoset,
};
use dcpo_core::witness::{verify_witness_claims, Kou, KouElement, Rational, WitnessName};
use dcpo_core::{Caps, CheckReport, ElementSet, Error as CoreError, SpaceClassification, Status};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cli::{Command, ExportFormat, ExportWhat, ReportFormat, RunConfig, Which};
use crate::dot::{closed_family_dot, irr_dot, poset_dot};
use crate::error::{exit, ToolError};
use crate::format::{parse_poset, write_poset, PosetFile};

pub fn load_poset(path: &Path) -> Result<PosetFile, ToolError> {
    let text = fs::read_to_string(path).map_err(|e| ToolError::io(path, e))?;
    parse_poset(&text).map_err(|source| ToolError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

fn write_file(path: &Path, contents: &str) -> Result<(), ToolError> {
    fs::write(path, contents).map_err(|e| ToolError::io(path, e))
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), ToolError> {
    out.write_all(text.as_bytes())
        .map_err(|e| ToolError::io("<stdout>", e))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn reports_exit(reports: &[CheckReport]) -> u8 {
    if reports.iter().any(|r| r.status == Status::Fail) {
        exit::VIOLATION
    } else {
        exit::PASS
    }
}

fn status_word(status: Status) -> &'static str {
    match status {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::Evidence => "evidence",
    }
}

fn reports_text(reports: &[CheckReport]) -> String {
    let mut s = String::new();
    for r in reports {
        let _ = writeln!(
            s,
            "{:<8} {} (bound {}, {} cases)",
            status_word(r.status),
            r.claim_id,
            r.bound,
            r.cases
        );
        for v in &r.violations {
            let _ = writeln!(s, "         - {v}");
        }
    }
    s
}

/// Runs one command, writing its report to `out`. Returns the exit code.
pub fn run(config: &RunConfig, out: &mut dyn Write) -> Result<u8, ToolError> {
    let caps = &config.caps;
    match &config.command {
        Command::Check { file, which, report } => cmd_check(file, *which, *report, caps, out),
        Command::Enumerate { size, out: dir, report } => cmd_enumerate(*size, dir, *report, caps, out),
        Command::Scan {
            max_size,
            jobs,
            out: path,
            timing,
        } => cmd_scan(*max_size, *jobs as usize, path.as_deref(), *timing, caps, out),
        Command::Witness {
            name,
            bound,
            seed,
            extra_samples,
            report,
        } => cmd_witness(*name, *bound, *seed, *extra_samples, *report, caps, out),
        Command::Export {
            file,
            what,
            format,
            out: path,
        } => cmd_export(file, *what, *format, path.as_deref(), caps, out),
    }
}

#[derive(Debug, Serialize)]
pub struct SpaceSection {
    #[serde(flatten)]
    pub classification: SpaceClassification,
    pub closed_sets: usize,
    pub irreducible: Vec<ElementSet>,
}

#[derive(Debug, Serialize)]
pub struct DomainSection {
    pub continuous: bool,
    pub quasicontinuous: bool,
    pub property_m: bool,
    pub property_big_m: bool,
    pub down_linear: ElementSet,
    pub quasicontinuous_elements: ElementSet,
    pub dl_sup: bool,
    /// DL-sup restricted to irreducible closed sets other than `P` itself.
    pub dl_sup_proper: bool,
    pub bounded_sober: bool,
    pub qc_generated: bool,
}

#[derive(Debug, Serialize)]
pub struct KappaSection {
    pub lattice_size: usize,
    pub distributive: bool,
    /// Every C-compact element of `C_σ(P)`, the empty set included.
    pub c_compact: Vec<ElementSet>,
    pub join_irreducibles: Vec<ElementSet>,
}

#[derive(Debug, Serialize)]
pub struct CheckOutput {
    pub file: String,
    pub size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub space: Option<SpaceSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub domain: Option<DomainSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa: Option<KappaSection>,
    pub reports: Vec<CheckReport>,
}

fn principal_down_sets(file: &PosetFile) -> Vec<ElementSet> {
    let mut sets: Vec<ElementSet> = (0..file.poset.size())
        .map(|x| file.poset.down_of(x).clone())
        .collect();
    sets.sort();
    sets
}

fn check_space(file: &PosetFile, caps: &Caps, reports: &mut Vec<CheckReport>) -> Result<SpaceSection, CoreError> {
    let p = &file.poset;
    let family = scott_closed_family(p, caps)?;
    let irr = IrrPoset::from_family(&family);
    let classification = classify_space(p, caps)?;

    let mut r = CheckReport::new(
        "SP-classification",
        "the Scott space of a finite poset is sober, bounded sober, T_D, a d-space and Scott-sobrificable",
        p.size(),
    );
    for (flag, name) in [
        (classification.sober, "sober"),
        (classification.bounded_sober, "bounded_sober"),
        (classification.t_d, "t_d"),
        (classification.d_space, "d_space"),
        (classification.scott_sobrificable, "scott_sobrificable"),
    ] {
        r.expect(flag, || format!("{name} is false"));
    }
    reports.push(r);

    let mut r = CheckReport::new(
        "SP-irr-principal",
        "the irreducible closed sets of a finite poset are exactly the principal down-sets",
        p.size(),
    );
    r.expect(irr.elements == principal_down_sets(file), || {
        "Irr differs from the principal down-sets".into()
    });
    reports.push(r);

    reports.push(directed_point_sup_check(p, caps)?);

    Ok(SpaceSection {
        classification,
        closed_sets: family.len(),
        irreducible: irr.elements,
    })
}

fn check_domain(file: &PosetFile, caps: &Caps, reports: &mut Vec<CheckReport>) -> Result<DomainSection, CoreError> {
    let p = &file.poset;
    let class = domain_class(p, caps)?;
    let mub = mub_properties(p, caps)?;
    let special = special_elements(p, caps)?;
    let qc = qc_generation_condition(p, caps)?;

    let mut r = CheckReport::new(
        "DC-continuous-implies-quasicontinuous",
        "every continuous dcpo is quasicontinuous",
        p.size(),
    );
    r.expect(!class.continuous || class.quasicontinuous, || {
        "continuous but not quasicontinuous".into()
    });
    reports.push(r);

    let mut r = CheckReport::new(
        "DC-finite-property-m",
        "a finite poset has property m and property M",
        p.size(),
    );
    r.expect(mub.property_m, || "property m fails".into());
    r.expect(mub.property_big_m, || "property M fails".into());
    reports.push(r);

    let mut r = CheckReport::new(
        "DC-qc-generation",
        "the Scott space is bounded sober iff every element is a directed supremum of quasicontinuous elements",
        p.size(),
    );
    r.expect(qc.bounded_sober == qc.qc_generated, || {
        format!(
            "bounded_sober = {} but qc_generated = {}",
            qc.bounded_sober, qc.qc_generated
        )
    });
    reports.push(r);

    Ok(DomainSection {
        continuous: class.continuous,
        quasicontinuous: class.quasicontinuous,
        property_m: mub.property_m,
        property_big_m: mub.property_big_m,
        down_linear: special.down_linear,
        quasicontinuous_elements: special.quasicontinuous,
        dl_sup: dl_sup_condition(p, caps)?,
        dl_sup_proper: dl_sup_condition_scoped(p, DlSupScope::Proper, caps)?,
        bounded_sober: qc.bounded_sober,
        qc_generated: qc.qc_generated,
    })
}

fn check_kappa(file: &PosetFile, caps: &Caps, reports: &mut Vec<CheckReport>) -> Result<KappaSection, CoreError> {
    let p = &file.poset;
    let family = scott_closed_family(p, caps)?;
    let lattice = scott_lattice(p, caps)?;
    let kappa = c_compact_elements(&lattice, caps)?;
    let members = family.members();
    let c_compact: Vec<ElementSet> = kappa.iter().map(|i| members[i].clone()).collect();
    let nonempty: Vec<ElementSet> = c_compact.iter().filter(|s| !s.is_empty()).cloned().collect();

    let mut r = CheckReport::new(
        "KP-kappa-principal",
        "a nonempty Scott closed set is C-compact in C_σ(P) iff it is a principal down-set",
        p.size(),
    );
    r.expect(nonempty == principal_down_sets(file), || {
        "nonempty C-compact sets differ from the principal down-sets".into()
    });
    reports.push(r);

    let mut r = CheckReport::new(
        "KP-kappa-irreducible",
        "nonempty C-compact closed sets are irreducible",
        p.size(),
    );
    for s in &nonempty {
        r.expect(family.is_irreducible(s), || format!("{s} is not irreducible"));
    }
    reports.push(r);

    let mut r = CheckReport::new(
        "KP-kappa-vee-irreducible",
        "C-compact elements are join-irreducible in the sense a <= x v y implies a <= x or a <= y",
        p.size(),
    );
    for i in &kappa {
        r.expect(is_vee_irreducible(&lattice, i), || {
            format!("{} is not vee-irreducible", members[i])
        });
    }
    reports.push(r);

    let distributive = is_distributive(&lattice);
    let mut r = CheckReport::new(
        "KP-birkhoff",
        "C_σ(P) is distributive and its join-irreducibles recover P",
        p.size(),
    );
    r.expect(distributive, || "C_σ(P) is not distributive".into());
    r.expect(birkhoff_round_trip(p, &lattice), || {
        "join-irreducibles are not isomorphic to P".into()
    });
    reports.push(r);

    Ok(KappaSection {
        lattice_size: lattice.size(),
        distributive,
        c_compact,
        join_irreducibles: join_irreducibles(&lattice)
            .elements
            .iter()
            .map(|&i| members[i].clone())
            .collect(),
    })
}

fn flag_lines(s: &mut String, flags: &[(&str, bool)]) {
    for (name, value) in flags {
        let _ = writeln!(s, "{name}={value}");
    }
}

fn sets_line(sets: &[ElementSet]) -> String {
    sets.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ")
}

fn check_text(o: &CheckOutput) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "file: {}", o.file);
    let _ = writeln!(s, "size: {}", o.size);
    if let Some(sp) = &o.space {
        let c = &sp.classification;
        s.push_str("[space]\n");
        flag_lines(
            &mut s,
            &[
                ("sober", c.sober),
                ("bounded_sober", c.bounded_sober),
                ("t_d", c.t_d),
                ("d_space", c.d_space),
                ("scott_sobrificable", c.scott_sobrificable),
            ],
        );
        let _ = writeln!(s, "closed_sets={}", sp.closed_sets);
        let _ = writeln!(s, "irreducible={}", sets_line(&sp.irreducible));
    }
    if let Some(d) = &o.domain {
        s.push_str("[domain]\n");
        flag_lines(
            &mut s,
            &[
                ("continuous", d.continuous),
                ("quasicontinuous", d.quasicontinuous),
                ("property_m", d.property_m),
                ("property_big_m", d.property_big_m),
                ("dl_sup", d.dl_sup),
                ("dl_sup_proper", d.dl_sup_proper),
                ("bounded_sober", d.bounded_sober),
                ("qc_generated", d.qc_generated),
            ],
        );
        let _ = writeln!(s, "down_linear={}", d.down_linear);
        let _ = writeln!(s, "quasicontinuous_elements={}", d.quasicontinuous_elements);
    }
    if let Some(k) = &o.kappa {
        s.push_str("[kappa]\n");
        let _ = writeln!(s, "lattice_size={}", k.lattice_size);
        let _ = writeln!(s, "distributive={}", k.distributive);
        let _ = writeln!(s, "c_compact={}", sets_line(&k.c_compact));
        let _ = writeln!(s, "join_irreducibles={}", sets_line(&k.join_irreducibles));
    }
    s.push_str("[claims]\n");
    s.push_str(&reports_text(&o.reports));
    s
}

pub fn check_poset(file: &PosetFile, path: &str, which: Which, caps: &Caps) -> Result<CheckOutput, CoreError> {
    let mut reports = Vec::new();
    let wants = |w: Which| which == Which::All || which == w;
    let space = wants(Which::Space)
        .then(|| check_space(file, caps, &mut reports))
        .transpose()?;
    let domain = wants(Which::Domain)
        .then(|| check_domain(file, caps, &mut reports))
        .transpose()?;
    let kappa = wants(Which::Kappa)
        .then(|| check_kappa(file, caps, &mut reports))
        .transpose()?;
    Ok(CheckOutput {
        file: path.into(),
        size: file.poset.size(),
        space,
        domain,
        kappa,
        reports,
    })
}

fn cmd_check(path: &Path, which: Which, format: ReportFormat, caps: &Caps, out: &mut dyn Write) -> Result<u8, ToolError> {
    let file = load_poset(path)?;
    let output = check_poset(&file, &path.display().to_string(), which, caps)?;
    let text = match format {
        ReportFormat::Text => check_text(&output),
        ReportFormat::Json => to_json(&output),
    };
    emit(out, &text)?;
    Ok(reports_exit(&output.reports))
}

#[derive(Debug, Serialize)]
struct EnumerateOutput {
    size: usize,
    classes: usize,
    files: Vec<String>,
}

fn cmd_enumerate(size: usize, dir: &Path, format: ReportFormat, caps: &Caps, out: &mut dyn Write) -> Result<u8, ToolError> {
    let classes = enumerate_posets(size, caps)?;
    fs::create_dir_all(dir).map_err(|e| ToolError::io(dir, e))?;
    let mut files = Vec::with_capacity(classes.len());
    for (i, p) in classes.iter().enumerate() {
        let name = format!("n{size}_{i:04}.poset");
        write_file(&dir.join(&name), &write_poset(&PosetFile::new(p.clone())))?;
        files.push(name);
    }
    let summary = EnumerateOutput {
        size,
        classes: classes.len(),
        files,
    };
    let text = match format {
        ReportFormat::Text => format!(
            "{} classes of size {} written to {}\n",
            summary.classes,
            size,
            dir.display()
        ),
        ReportFormat::Json => to_json(&summary),
    };
    emit(out, &text)?;
    Ok(exit::PASS)
}

/// The faithfulness scan on a pool of `jobs` workers. The report does not
/// depend on `jobs`.
pub fn parallel_scan(max_size: usize, jobs: usize, caps: &Caps) -> Result<ScanReport, ToolError> {
    if jobs == 0 {
        return Err(ToolError::Usage("--jobs must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| ToolError::Usage(format!("cannot start {jobs} workers: {e}")))?;
    pool.install(|| {
        let universe = ScanUniverse::build(max_size, caps)?;
        let pairs: Vec<(usize, usize)> = universe.pairs().collect();
        let outcomes = pairs
            .par_iter()
            .map(|&(i, j)| universe.check_pair(i, j, caps))
            .collect::<Result<Vec<_>, _>>()?;
        let failures: Vec<usize> = (0..universe.len())
            .into_par_iter()
            .filter(|&i| !universe.birkhoff_holds(i))
            .collect();
        Ok(ScanReport::aggregate(&universe, outcomes, failures))
    })
}

fn cmd_scan(
    max_size: usize,
    jobs: usize,
    path: Option<&Path>,
    timing: bool,
    caps: &Caps,
    out: &mut dyn Write,
) -> Result<u8, ToolError> {
    let start = Instant::now();
    let mut report = parallel_scan(max_size, jobs, caps)?;
    let elapsed = start.elapsed().as_millis() as u64;
    if timing {
        report.elapsed_ms = Some(elapsed);
        eprintln!("scan: {elapsed} ms");
    }
    let json = to_json(&report);
    match path {
        Some(path) => {
            write_file(path, &json)?;
            emit(
                out,
                &format!(
                    "{} classes, {} pairs, {} lattice-isomorphic, {} violations, {} Birkhoff failures\n",
                    report.classes,
                    report.pairs_checked,
                    report.iso_pairs,
                    report.violations.len(),
                    report.birkhoff_failures.len()
                ),
            )?;
        }
        None => emit(out, &json)?,
    }
    Ok(if report.clean() { exit::PASS } else { exit::VIOLATION })
}

/// `count` seeded random Kou elements with denominators up to 64.
pub fn kou_samples(seed: u64, count: usize) -> Vec<KouElement> {
    fn unit(rng: &mut ChaCha8Rng, open: bool) -> Rational {
        let q: i64 = rng.random_range(2..=64);
        let p: i64 = if open {
            rng.random_range(1..q)
        } else {
            rng.random_range(1..=q)
        };
        Rational::new(p, q)
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            if rng.random_bool(0.25) {
                KouElement::Point(unit(&mut rng, false))
            } else {
                let k = unit(&mut rng, true);
                let (x, y) = (unit(&mut rng, false), unit(&mut rng, false));
                KouElement::Triple {
                    k,
                    a: x.max(y),
                    b: x.min(y),
                }
            }
        })
        .collect()
}

#[derive(Debug, Serialize)]
struct WitnessOutput<'a> {
    witness: &'a str,
    bound: usize,
    seed: u64,
    extra_samples: usize,
    reports: &'a [CheckReport],
}

#[allow(clippy::too_many_arguments)]
fn cmd_witness(
    name: WitnessName,
    bound: usize,
    seed: u64,
    extra_samples: usize,
    format: ReportFormat,
    caps: &Caps,
    out: &mut dyn Write,
) -> Result<u8, ToolError> {
    let kou = Kou {
        extra: kou_samples(seed, extra_samples),
    };
    let reports = verify_witness_claims(name, bound, &kou, caps)?;
    let text = match format {
        ReportFormat::Text => format!(
            "witness {name}, bound {bound}\n{}",
            reports_text(&reports)
        ),
        ReportFormat::Json => to_json(&WitnessOutput {
            witness: name.as_str(),
            bound,
            seed,
            extra_samples,
            reports: &reports,
        }),
    };
    emit(out, &text)?;
    Ok(reports_exit(&reports))
}

fn cmd_export(
    path: &Path,
    what: ExportWhat,
    format: ExportFormat,
    target: Option<&Path>,
    caps: &Caps,
    out: &mut dyn Write,
) -> Result<u8, ToolError> {
    let file = load_poset(path)?;
    let ExportFormat::Dot = format;
    let dot = match what {
        ExportWhat::Poset => poset_dot(&file),
        ExportWhat::Csigma => closed_family_dot(&file, &scott_closed_family(&file.poset, caps)?),
        ExportWhat::Irr => {
            let family = scott_closed_family(&file.poset, caps)?;
            irr_dot(&file, &IrrPoset::from_family(&family))
        }
    };
    match target {
        Some(target) => write_file(target, &dot)?,
        None => emit(out, &dot)?,
    }
    Ok(exit::PASS)
}

/// Reads `dir/*.poset` in name order.
pub fn read_poset_dir(dir: &Path) -> Result<Vec<(PathBuf, PosetFile)>, ToolError> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| ToolError::io(dir, e))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "poset"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| load_poset(&p).map(|f| (p, f)))
        .collect()
}
