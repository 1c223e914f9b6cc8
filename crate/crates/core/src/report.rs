//! Report assembly and emission for the `ftr` command line.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::Serialize;

use crate::chain::{run_chain, ChainOptions, DerivationResult, ToleranceClass, Verdict};
use crate::error::{FtrError, Result};
use crate::geometry::{einstein_ratio, solve_cosmic_pair, CosmicFrame};
use crate::montecarlo::{mc_centroid, McReport};
use crate::numeric::{format_sig, load_constants, ConstantSet, Quantity, MIN_DIGITS};
use crate::zoo::{max_family, named_witness, Gender, ZooSolution};

pub const DEFAULT_SIG: usize = 6;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = FtrError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(Format::Table),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(FtrError::Config(format!("unknown format `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Command {
    Derive,
    SolveCosmic { ratio: Option<String>, k: String },
    McVerify { n: u64, trials: u64, r0: f64 },
    Zoo,
    Compare,
    ReportAll,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Derive => "derive",
            Command::SolveCosmic { .. } => "solve-cosmic",
            Command::McVerify { .. } => "mc-verify",
            Command::Zoo => "zoo",
            Command::Compare => "compare",
            Command::ReportAll => "report-all",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub constants: Option<PathBuf>,
    pub precision: u32,
    pub tolerances: BTreeMap<String, f64>,
    pub format: Format,
    pub seed: u64,
    pub sig: usize,
    pub command: Command,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            constants: None,
            precision: crate::numeric::DEFAULT_DIGITS,
            tolerances: BTreeMap::new(),
            format: Format::Table,
            seed: 7,
            sig: DEFAULT_SIG,
            command,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.precision < MIN_DIGITS {
            return Err(FtrError::Config(format!(
                "precision must be at least {MIN_DIGITS}, got {}",
                self.precision
            )));
        }
        if self.sig == 0 {
            return Err(FtrError::Config(
                "significant digits must be positive".into(),
            ));
        }
        if let Some((k, v)) = self
            .tolerances
            .iter()
            .find(|(_, v)| !(v.is_finite() && **v > 0.0))
        {
            return Err(FtrError::Config(format!(
                "tolerance `{k}` must be positive, got {v}"
            )));
        }
        Ok(())
    }

    pub fn load_constants(&self) -> Result<ConstantSet> {
        match &self.constants {
            None => Ok(ConstantSet::modern(self.precision)),
            Some(path) => {
                let file = std::fs::File::open(path)
                    .map_err(|e| FtrError::Config(format!("{}: {e}", path.display())))?;
                load_constants(file, self.precision)
                    .map_err(|e| FtrError::Config(format!("{}: {e}", path.display())))
            }
        }
    }
}

/// Parses `name=value`.
pub fn parse_tolerance(s: &str) -> Result<(String, f64)> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| FtrError::Config(format!("expected name=value, got `{s}`")))?;
    let v: f64 = v
        .trim()
        .parse()
        .map_err(|_| FtrError::Config(format!("bad tolerance value in `{s}`")))?;
    Ok((k.trim().to_string(), v))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportMeta {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub dataset: String,
    pub precision: u32,
    pub seed: u64,
    pub summary: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportRow {
    pub section: String,
    pub name: String,
    pub value: String,
    pub unit: String,
    pub paper: String,
    pub modern: String,
    pub rel_err_paper: String,
    pub rel_err_modern: String,
    pub tolerance: String,
    pub verdict: Verdict,
    pub formula: String,
    pub note: String,
}

pub const COLUMNS: [&str; 12] = [
    "section",
    "name",
    "value",
    "unit",
    "paper",
    "modern",
    "rel_err_paper",
    "rel_err_modern",
    "tolerance",
    "verdict",
    "formula",
    "note",
];

impl ReportRow {
    fn info(section: &str, name: &str, value: String) -> Self {
        ReportRow {
            section: section.into(),
            name: name.into(),
            value,
            unit: String::new(),
            paper: String::new(),
            modern: String::new(),
            rel_err_paper: String::new(),
            rel_err_modern: String::new(),
            tolerance: String::new(),
            verdict: Verdict::Info,
            formula: String::new(),
            note: String::new(),
        }
    }

    fn fields(&self) -> [String; 12] {
        [
            self.section.clone(),
            self.name.clone(),
            self.value.clone(),
            self.unit.clone(),
            self.paper.clone(),
            self.modern.clone(),
            self.rel_err_paper.clone(),
            self.rel_err_modern.clone(),
            self.tolerance.clone(),
            self.verdict.to_string(),
            self.formula.clone(),
            self.note.clone(),
        ]
    }

    pub fn from_derivation(section: &str, r: &DerivationResult, sig: usize) -> Result<Self> {
        let show = |q: &Quantity| -> Result<String> { Ok(r.display(q)?.to_sci(sig)) };
        let opt = |q: &Option<Quantity>| -> Result<String> {
            q.as_ref()
                .map(show)
                .transpose()
                .map(Option::unwrap_or_default)
        };
        let err = |e: Option<f64>| e.map(|e| format_sig(e, 3)).unwrap_or_default();
        Ok(ReportRow {
            section: section.into(),
            name: r.name.clone(),
            value: show(&r.computed)?,
            unit: r.unit.clone(),
            paper: opt(&r.paper_value)?,
            modern: opt(&r.modern_value)?,
            rel_err_paper: err(r.rel_err_paper),
            rel_err_modern: err(r.rel_err_modern),
            tolerance: format_sig(r.tolerance, 2),
            verdict: r.verdict,
            formula: r.formula.clone(),
            note: r.note.clone(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub meta: ReportMeta,
    pub rows: Vec<ReportRow>,
    pub passed: bool,
}

impl Report {
    fn new(meta: ReportMeta, rows: Vec<ReportRow>) -> Self {
        let passed = rows.iter().all(|r| r.verdict != Verdict::Fail);
        Report { meta, rows, passed }
    }

    /// Report over precomputed rows with no seed or summary.
    pub fn from_rows(command: &str, constants: &ConstantSet, rows: Vec<ReportRow>) -> Self {
        let meta = ReportMeta {
            tool: "ftr".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            dataset: constants.provenance().to_string(),
            precision: constants.digits(),
            seed: 0,
            summary: Vec::new(),
        };
        Report::new(meta, rows)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }
}

pub fn derive_rows(
    constants: &ConstantSet,
    options: &ChainOptions,
    sig: usize,
) -> Result<Vec<ReportRow>> {
    run_chain(constants, options)?
        .iter()
        .map(|r| ReportRow::from_derivation("derive", r, sig))
        .collect()
}

pub fn cosmic_rows(
    constants: &ConstantSet,
    ratio: Option<&str>,
    k: &str,
    options: &ChainOptions,
    sig: usize,
) -> Result<Vec<ReportRow>> {
    let d = constants.digits();
    let ratio = match ratio {
        Some(s) => Quantity::parse(s, d)?,
        None => einstein_ratio(constants)?,
    };
    let k = Quantity::parse(k, d)?;
    let frame: CosmicFrame = solve_cosmic_pair(&ratio, &k)?;
    let rows = [
        DerivationResult::new(
            "cosmic_N",
            "N = (k / (R0/N))^2",
            Quantity::dimensionless(frame.n().clone()),
            "1",
            ToleranceClass::Vintage,
        )
        .paper("2.31e79")?,
        DerivationResult::new(
            "cosmic_R0",
            "R0 = k sqrt(N)",
            frame.r0().clone(),
            "cm",
            ToleranceClass::Vintage,
        )
        .paper("9.14e26")?,
        DerivationResult::new(
            "cosmic_sigma",
            "sigma = R0 / (2 sqrt(N))",
            frame.sigma(),
            "cm",
            ToleranceClass::Vintage,
        )
        .paper("9.53657e-14")?,
    ];
    rows.into_iter()
        .map(|r| {
            let t = options
                .tolerances
                .get(&r.name)
                .or_else(|| options.tolerances.get(r.class.name()))
                .copied();
            let r = match t {
                Some(t) => r.with_tolerance(t),
                None => r,
            };
            ReportRow::from_derivation("solve-cosmic", &r, sig)
        })
        .collect()
}

pub fn mc_rows(mc: &McReport, sig: usize) -> Vec<ReportRow> {
    let f = |x: f64| format_sig(x, sig);
    let mut rows = vec![
        ReportRow::info("mc-verify", "n_particles", mc.n_particles.to_string()),
        ReportRow::info("mc-verify", "trials", mc.trials.to_string()),
        ReportRow::info("mc-verify", "seed", mc.seed.to_string()),
        ReportRow::info("mc-verify", "empirical_std", f(mc.empirical_std)),
        ReportRow::info("mc-verify", "predicted_std", f(mc.predicted_std)),
    ];
    let mut z = ReportRow::info("mc-verify", "z_score", f(mc.z_score));
    z.formula = "z = (s - R0/(2 sqrt(n))) / (R0/(2 sqrt(n)) / sqrt(2T))".into();
    z.tolerance = "3".into();
    z.note = format!("standard error {}", f(mc.standard_error));
    z.verdict = if mc.passed {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    rows.push(z);
    rows
}

/// `max family 5 (3 boys, 2 girls); winner: boy, 4 correct`
pub fn zoo_summary(sol: &ZooSolution) -> String {
    let Some(f) = sol.families.first() else {
        return "no mixed family".into();
    };
    let (w, g) = f.winners()[0];
    format!(
        "max family {} ({} boys, {} girls); winner: {}, {} correct",
        sol.size,
        f.boys(),
        f.girls(),
        g,
        w.score()
    )
}

pub fn zoo_rows(sol: &ZooSolution) -> Vec<ReportRow> {
    let check = |name: &str, value: String, expected: &str| {
        let mut r = ReportRow::info("zoo", name, value);
        r.paper = expected.into();
        r.verdict = if r.value == expected {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        r
    };
    let all_same = |pick: &dyn Fn(&crate::zoo::Family) -> String| {
        let vals: Vec<String> = sol.families.iter().map(pick).collect();
        if vals.windows(2).all(|w| w[0] == w[1]) {
            vals.first().cloned().unwrap_or_default()
        } else {
            "mixed".into()
        }
    };
    let winner_gender = all_same(&|f| {
        let genders: Vec<Gender> = f.winners().iter().map(|w| w.1).collect();
        if genders.iter().all(|g| *g == genders[0]) {
            genders[0].to_string()
        } else {
            "tie".into()
        }
    });
    let mut rows = vec![
        check("max_family", sol.size.to_string(), "5"),
        check("boys", all_same(&|f| f.boys().to_string()), "3"),
        check("girls", all_same(&|f| f.girls().to_string()), "2"),
        check("winner", winner_gender, "boy"),
        check(
            "winner_score",
            all_same(&|f| f.best_score().to_string()),
            "4",
        ),
        ReportRow::info("zoo", "families", sol.families.len().to_string()),
    ];
    for (name, p) in named_witness() {
        let mut r = ReportRow::info(
            "zoo",
            &format!("witness_{}", name.to_lowercase()),
            p.to_string(),
        );
        r.note = format!(
            "{}, {} right",
            p.classify().map(|g| g.to_string()).unwrap_or_default(),
            p.score()
        );
        rows.push(r);
    }
    rows
}

/// The chain under the paper-era set beside the same chain under `constants`.
pub fn compare_rows(
    constants: &ConstantSet,
    options: &ChainOptions,
    sig: usize,
) -> Result<Vec<ReportRow>> {
    let old = run_chain(&ConstantSet::paper_era(constants.digits()), options)?;
    let new = run_chain(constants, options)?;
    let mut rows = Vec::new();
    for n in &new {
        let Some(o) = old.iter().find(|o| o.name == n.name) else {
            continue;
        };
        let mut r = ReportRow::from_derivation("compare", n, sig)?;
        r.paper = n.display(&o.computed)?.to_sci(sig);
        r.rel_err_paper = if o.computed.mag.is_zero() {
            String::new()
        } else {
            format_sig(n.computed.mag.rel_diff(&o.computed.mag).to_f64(), 3)
        };
        r.note = "paper column: same formula under the paper-era constants".into();
        r.verdict = Verdict::Info;
        rows.push(r);
    }
    Ok(rows)
}

pub fn run(config: &RunConfig) -> Result<Report> {
    config.validate()?;
    let constants = config.load_constants()?;
    let options = ChainOptions {
        tolerances: config.tolerances.clone(),
    };
    let sig = config.sig;
    let mut summary = Vec::new();
    let zoo = |summary: &mut Vec<String>| {
        let sol = max_family(true);
        summary.push(zoo_summary(&sol));
        zoo_rows(&sol)
    };
    let mc = |n: u64, trials: u64, r0: f64| -> Result<Vec<ReportRow>> {
        Ok(mc_rows(&mc_centroid(n, trials, config.seed, r0)?, sig))
    };
    let rows = match &config.command {
        Command::Derive => derive_rows(&constants, &options, sig)?,
        Command::SolveCosmic { ratio, k } => {
            cosmic_rows(&constants, ratio.as_deref(), k, &options, sig)?
        }
        Command::McVerify { n, trials, r0 } => mc(*n, *trials, *r0)?,
        Command::Zoo => zoo(&mut summary),
        Command::Compare => compare_rows(&constants, &options, sig)?,
        Command::ReportAll => {
            let mut rows = derive_rows(&constants, &options, sig)?;
            rows.extend(cosmic_rows(&constants, None, "1.9e-13 cm", &options, sig)?);
            rows.extend(mc(1000, 2000, 1.0)?);
            rows.extend(zoo(&mut summary));
            rows
        }
    };
    let meta = ReportMeta {
        tool: "ftr".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        command: config.command.name().into(),
        dataset: constants.provenance().to_string(),
        precision: config.precision,
        seed: config.seed,
        summary,
    };
    Ok(Report::new(meta, rows))
}

pub fn emit(report: &Report, format: Format) -> Result<String> {
    match format {
        Format::Json => {
            let mut s =
                serde_json::to_string_pretty(report).map_err(|e| FtrError::Io(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| FtrError::Io(e.to_string());
            w.write_record(COLUMNS).map_err(io)?;
            for r in &report.rows {
                w.write_record(r.fields()).map_err(io)?;
            }
            let bytes = w.into_inner().map_err(|e| FtrError::Io(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| FtrError::Io(e.to_string()))
        }
        Format::Table => Ok(Table(report).to_string()),
    }
}

struct Table<'a>(&'a Report);

impl fmt::Display for Table<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const SHOWN: [usize; 9] = [0, 1, 2, 3, 4, 5, 6, 8, 9];
        let rows: Vec<[String; 12]> = self.0.rows.iter().map(ReportRow::fields).collect();
        let width = |c: usize| {
            rows.iter()
                .map(|r| r[c].chars().count())
                .chain([COLUMNS[c].len()])
                .max()
                .unwrap_or(0)
        };
        let widths: Vec<usize> = SHOWN.iter().map(|&c| width(c)).collect();
        for line in &self.0.meta.summary {
            writeln!(f, "{line}")?;
        }
        let write_line = |f: &mut fmt::Formatter<'_>, cells: Vec<&str>| -> fmt::Result {
            let parts: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            writeln!(f, "{}", parts.join("  ").trim_end())
        };
        write_line(f, SHOWN.iter().map(|&c| COLUMNS[c]).collect())?;
        for r in &rows {
            write_line(f, SHOWN.iter().map(|&c| r[c].as_str()).collect())?;
        }
        writeln!(
            f,
            "{} rows, {}",
            rows.len(),
            if self.0.passed {
                "all checks passed"
            } else {
                "some checks FAILED"
            }
        )
    }
}
