//! Command execution shared by the `luroth` binary and its integration tests:
//! parse the input expression, run the requested computation, and assemble a
//! report whose bytes are identical across runs — the only "timing" recorded is
//! the exact count of reduction steps charged to the budget.

use crate::detector::{
    bitangent_ideal, classify, classify_verified, conic_space_ctx, Classification,
    DetectorOptions, Diagnostics, Tag,
};
use crate::fixtures::form_ctx;
use crate::groebner::{Budget, GroebnerError};
use crate::invariants::{build_l, catalecticant, cubic_invariant, wm_quartic, ConicForm};
use crate::parse::{parse_quartic, print_quartic, ParseError};
use crate::plot::{chart_evaluator, clip_line, implicit_segments, svg_document, Layer, Window};
use crate::ring::field::{Field, Fp, Rat};
use crate::ring::monomial::Order;
use crate::ring::ternary::TernaryForm;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

/// Version of the JSON report layout, mirrored by `schema/report.schema.json`.
pub const SCHEMA_VERSION: u64 = 1;

/// Headline consequence of a positive detection with a single pentalateral theta.
pub const DEGREE_RELATION: &str = "54 = δ·L ⇒ L = 54";

/// Primes available to `--verify-primes`, in the order they are consumed.
pub const PRIME_POOL: [u64; 4] = [65521, 65537, 65539, 32749];

/// Coefficient field the computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldChoice {
    Rational,
    Prime(u64),
}

impl FieldChoice {
    /// Accepts `q` (rationals) or `p:<prime>`.
    pub fn parse(s: &str) -> Result<FieldChoice, String> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(FieldChoice::Rational);
        }
        if let Some(rest) = t.strip_prefix("p:") {
            let p: u64 = rest
                .parse()
                .map_err(|e| format!("bad prime in field spec `{s}`: {e}"))?;
            // Fp::new enforces the full contract (odd prime > 3).
            Fp::new(p).map_err(|e| e.to_string())?;
            return Ok(FieldChoice::Prime(p));
        }
        Err(format!("unknown field `{s}`; expected `q` or `p:<prime>`"))
    }

    pub fn label(&self) -> String {
        match self {
            FieldChoice::Rational => "Q".to_string(),
            FieldChoice::Prime(p) => format!("GF({p})"),
        }
    }
}

/// Options common to every subcommand.
#[derive(Clone, Debug)]
pub struct CliOptions {
    pub field: FieldChoice,
    /// How many primes from [`PRIME_POOL`] the verified detector uses (1..=4).
    pub verify_primes: usize,
    /// Monomial order for the reported bitangent Gröbner basis.
    pub order: Order,
    /// Reduction-step allowance per Gröbner computation.
    pub budget: u64,
    /// Viewport for `plot`.
    pub window: Window,
    /// Affine chart for `plot`: the coordinate set to 1 (0 = x, 1 = y, 2 = z).
    pub chart: usize,
    /// Search radius for pentalateral companion lines.
    pub height_bound: i64,
    /// Whether `bitangents` should also compute a univariate eliminant.
    pub want_eliminant: bool,
}

impl Default for CliOptions {
    fn default() -> Self {
        let d = DetectorOptions::default();
        CliOptions {
            field: FieldChoice::Rational,
            verify_primes: 2,
            order: Order::Grevlex,
            budget: d.budget_limit,
            window: Window::default(),
            chart: 2,
            height_bound: d.height_bound,
            want_eliminant: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Invariants,
    Wm,
    Bitangents,
    Detect,
    Pentalateral,
    Plot,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Invariants => "invariants",
            Command::Wm => "wm",
            Command::Bitangents => "bitangents",
            Command::Detect => "detect",
            Command::Pentalateral => "pentalateral",
            Command::Plot => "plot",
        }
    }
}

/// Failure category, mapped to the process exit code by the binary.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    /// Bad input or a request the mathematics cannot satisfy (exit 1).
    Domain,
    /// A configured resource limit was hit (exit 2).
    Resource,
}

#[derive(Clone, Debug)]
pub struct CliError {
    pub kind: ErrorKind,
    pub message: String,
}

impl CliError {
    fn domain(message: impl Into<String>) -> Self {
        CliError { kind: ErrorKind::Domain, message: message.into() }
    }

    fn resource(message: impl Into<String>) -> Self {
        CliError { kind: ErrorKind::Resource, message: message.into() }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.message)
    }
}

impl From<GroebnerError> for CliError {
    fn from(e: GroebnerError) -> Self {
        match e {
            GroebnerError::BudgetExceeded { steps } => {
                CliError::resource(format!("budget of {steps} reduction steps exceeded"))
            }
            other => CliError::domain(other.to_string()),
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::domain(format!("cannot parse the quartic: {e}"))
    }
}

/// Everything a single invocation produces.
#[derive(Debug)]
pub struct RunOutput {
    /// Structured report; serialize with `serde_json` for `--json`.
    pub report: Value,
    /// Human-readable rendering of the same content.
    pub text: String,
    /// SVG document, present only for `plot`.
    pub svg: Option<String>,
}

/// Parse the expression, dispatch the command, and assemble the report.
pub fn run(command: Command, expression: &str, opts: &CliOptions) -> Result<RunOutput, CliError> {
    if !(1..=PRIME_POOL.len()).contains(&opts.verify_primes) {
        return Err(CliError::domain(format!(
            "--verify-primes must be between 1 and {}",
            PRIME_POOL.len()
        )));
    }
    if opts.chart > 2 {
        return Err(CliError::domain("the chart index must be 0, 1, or 2"));
    }
    let f_rat = parse_quartic(expression)?;
    let canonical = print_quartic(&f_rat);
    let (body, text_body, svg, work_units) = match opts.field {
        FieldChoice::Rational => dispatch(command, &Rat, &f_rat, expression, opts)?,
        FieldChoice::Prime(p) => {
            let field = Fp::new(p).map_err(|e| CliError::domain(e.to_string()))?;
            let f_p: TernaryForm<Fp> = f_rat
                .map_field(|c| field.from_rational(c))
                .map_err(|_| {
                    CliError::domain(format!(
                        "the quartic does not reduce modulo {p}: a coefficient denominator \
                         vanishes"
                    ))
                })?;
            let ctx = form_ctx(field.clone());
            if f_p.is_zero(&ctx) {
                return Err(CliError::domain(format!(
                    "the quartic reduces to zero modulo {p}"
                )));
            }
            dispatch(command, &field, &f_p, expression, opts)?
        }
    };
    let report = json!({
        "schema_version": SCHEMA_VERSION,
        "tool": "luroth",
        "tool_version": env!("CARGO_PKG_VERSION"),
        "command": command.name(),
        "input": {
            "expression": expression,
            "canonical": canonical,
            "field": opts.field.label(),
        },
        "result": body,
        "timings": { "work_units": work_units },
    });
    let mut text = String::new();
    text.push_str(&format!("luroth {} over {}\n", command.name(), opts.field.label()));
    text.push_str(&format!("input: {canonical}\n"));
    text.push_str(&text_body);
    text.push_str(&format!("work units: {work_units}\n"));
    Ok(RunOutput { report, text, svg })
}

/// Field-generic command dispatch. Returns (JSON body, text body, SVG, work units).
fn dispatch<F: Field>(
    command: Command,
    field: &F,
    f: &TernaryForm<F>,
    expression: &str,
    opts: &CliOptions,
) -> Result<(Value, String, Option<String>, u64), CliError> {
    match command {
        Command::Invariants => {
            let (v, t) = invariants_body(field, f);
            Ok((v, t, None, 0))
        }
        Command::Wm => {
            let (v, t) = wm_body(field, f);
            Ok((v, t, None, 0))
        }
        Command::Bitangents => bitangents_body(field, f, opts).map(|(v, t, w)| (v, t, None, w)),
        Command::Detect => {
            let cls = classify_any(field, f, opts)?;
            let (v, t) = classification_report(field, &cls);
            Ok((v, t, None, cls.diagnostics.work_units))
        }
        Command::Pentalateral => {
            let cls = classify_any(field, f, opts)?;
            let w = cls.diagnostics.work_units;
            let (v, t) = pentalateral_report(field, cls)?;
            Ok((v, t, None, w))
        }
        Command::Plot => plot_body(field, f, expression, opts),
    }
}

fn detector_options(opts: &CliOptions) -> DetectorOptions {
    DetectorOptions {
        budget_limit: opts.budget,
        height_bound: opts.height_bound,
        counting_primes: PRIME_POOL[..opts.verify_primes].to_vec(),
    }
}

/// Run the detector appropriate to the field: multi-prime verification plus
/// exact lift over the rationals, a single-field pass otherwise.
fn classify_any<F: Field>(
    field: &F,
    f: &TernaryForm<F>,
    opts: &CliOptions,
) -> Result<Classification<F>, CliError> {
    let dopts = detector_options(opts);
    if field.characteristic().is_none() {
        let f_rat = f
            .map_field(|c| {
                field
                    .to_rational(c)
                    .ok_or(crate::ring::field::FieldError::DivisionByZero)
            })
            .expect("characteristic-zero elements are rational");
        let cls = classify_verified(&f_rat, &dopts)?;
        // Map the payload back into F (the identity map for the rational field).
        let payload = cls
            .payload
            .map(|p| {
                Ok::<_, crate::ring::field::FieldError>(crate::detector::LurothPayload {
                    conic: ConicForm::from_slice(
                        &p.conic
                            .coeffs
                            .iter()
                            .map(|c| field.from_rational(c))
                            .collect::<Result<Vec<_>, _>>()?,
                    ),
                    clebsch: p.clebsch.map_field(|c| field.from_rational(c))?,
                    pentalateral: match p.pentalateral {
                        None => None,
                        Some(pent) => Some(crate::detector::Pentalateral {
                            lines: pent
                                .lines
                                .iter()
                                .map(|l| {
                                    Ok([
                                        field.from_rational(&l[0])?,
                                        field.from_rational(&l[1])?,
                                        field.from_rational(&l[2])?,
                                    ])
                                })
                                .collect::<Result<Vec<_>, _>>()?,
                            weights: pent
                                .weights
                                .iter()
                                .map(|w| field.from_rational(w))
                                .collect::<Result<Vec<_>, _>>()?,
                        }),
                    },
                })
            })
            .transpose()
            .expect("rational payloads convert to characteristic zero");
        Ok(Classification { tag: cls.tag, payload, diagnostics: cls.diagnostics })
    } else {
        Ok(classify(field, f, &dopts)?)
    }
}

fn invariants_body<F: Field>(field: &F, f: &TernaryForm<F>) -> (Value, String) {
    let ctx = form_ctx(field.clone());
    let s = cubic_invariant(&ctx, f);
    let cat = catalecticant(&ctx, f);
    let det_c = cat.det(field);
    let rank_c = cat.rank(field);
    let l = build_l(&ctx, f);
    let det_l = l.det(field);
    let rank_l = l.rank(field);
    let clebsch = field.is_zero(&det_c);
    let v = json!({
        "cubic_invariant": field.fmt_elem(&s),
        "det_catalecticant": field.fmt_elem(&det_c),
        "rank_catalecticant": rank_c,
        "clebsch": clebsch,
        "det_l": field.fmt_elem(&det_l),
        "rank_l": rank_l,
    });
    let t = format!(
        "cubic invariant: {}\ncatalecticant: det {}, rank {}{}\npairing matrix L: det {}, \
         rank {}\n",
        field.fmt_elem(&s),
        field.fmt_elem(&det_c),
        rank_c,
        if clebsch { " (Clebsch: the quartic admits a pentagonal power sum)" } else { "" },
        field.fmt_elem(&det_l),
        rank_l,
    );
    (v, t)
}

fn wm_body<F: Field>(field: &F, f: &TernaryForm<F>) -> (Value, String) {
    let ctx_q = conic_space_ctx(field.clone());
    let wm = wm_quartic(&ctx_q, f);
    let names = ["q0", "q1", "q2", "q3", "q4", "q5"];
    let poly = wm.poly.display(&ctx_q, &names);
    let v = json!({
        "polynomial": poly,
        "rank_l": wm.rank_l,
        "det_l": field.fmt_elem(&wm.det_l),
        "terms": wm.poly.terms.len(),
    });
    let t = format!(
        "covariant quartic on the space of dual conics (variables q0..q5):\n{}\nrank L: {}, \
         det L: {}\n",
        poly,
        wm.rank_l,
        field.fmt_elem(&wm.det_l),
    );
    (v, t)
}

fn order_label(order: Order) -> &'static str {
    match order {
        Order::Grevlex => "grevlex",
        Order::Lex => "lex",
        Order::Elim(_) => "elimination",
    }
}

fn bitangents_body<F: Field>(
    field: &F,
    f: &TernaryForm<F>,
    opts: &CliOptions,
) -> Result<(Value, String, u64), CliError> {
    let ctx_q = conic_space_ctx(field.clone()).with_order(opts.order);
    let mut budget = Budget::new(opts.budget);
    let ideal = bitangent_ideal(&ctx_q, f, opts.want_eliminant, &mut budget)?;
    let names = ["q0", "q1", "q2", "q3", "q4", "q5"];
    let generators: Vec<String> =
        ideal.generators.iter().map(|g| g.display(&ctx_q, &names)).collect();
    let eliminant_json = match &ideal.eliminant {
        Some((chart, coord, coeffs)) => json!({
            "chart": chart,
            "coordinate": coord,
            "degree": coeffs.len() as i64 - 1,
            "coefficients_ascending": coeffs.iter().map(|c| field.fmt_elem(c)).collect::<Vec<_>>(),
        }),
        None => Value::Null,
    };
    let v = json!({
        "order": order_label(opts.order),
        "generators": &generators,
        "groebner_basis_size": ideal.basis.polys.len(),
        "hilbert": {
            "proj_dim": ideal.hilbert.proj_dim,
            "degree": ideal.hilbert.degree,
            "numerator": &ideal.hilbert.numerator,
        },
        "eliminant": eliminant_json,
        "notes": &ideal.notes,
    });
    let mut t = String::new();
    t.push_str(&format!(
        "bitangent ideal in the dual-conic coordinates q0..q5 ({} order)\n",
        order_label(opts.order)
    ));
    t.push_str(&format!("generators ({}):\n", generators.len()));
    for g in &generators {
        t.push_str(&format!("  {g}\n"));
    }
    t.push_str(&format!(
        "Gröbner basis: {} polynomials; scheme dimension {}, degree {}\n",
        ideal.basis.polys.len(),
        ideal.hilbert.proj_dim,
        ideal.hilbert.degree
    ));
    match &ideal.eliminant {
        Some((chart, coord, coeffs)) => {
            t.push_str(&format!(
                "eliminant: chart q{chart} = 1, coordinate q{coord}, degree {}\n  coefficients \
                 (ascending): {}\n",
                coeffs.len() as i64 - 1,
                coeffs.iter().map(|c| field.fmt_elem(c)).collect::<Vec<_>>().join(", ")
            ));
        }
        None if opts.want_eliminant => t.push_str("eliminant: none found\n"),
        None => {}
    }
    for n in &ideal.notes {
        t.push_str(&format!("note: {n}\n"));
    }
    Ok((v, t, budget.used()))
}

fn tag_label(tag: Tag) -> &'static str {
    match tag {
        Tag::Luroth => "Luroth",
        Tag::NotLuroth => "NotLuroth",
        Tag::Indeterminate => "Indeterminate",
    }
}

fn hilbert_pair_json(p: Option<(i64, i64)>) -> Value {
    match p {
        Some((d, g)) => json!({ "proj_dim": d, "degree": g }),
        None => Value::Null,
    }
}

fn diagnostics_json(d: &Diagnostics) -> Value {
    json!({
        "det_l_nonzero": d.det_l_nonzero,
        "rank_l": d.rank_l,
        "wm_double_quadric": d.wm_double_quadric,
        "singular_locus": hilbert_pair_json(d.singular_locus),
        "quotient": hilbert_pair_json(d.quotient),
        "saturation": hilbert_pair_json(d.saturation),
        "delta": d.delta,
        "rank_c_g": d.rank_c_g,
        "fields_used": &d.fields_used,
        "notes": &d.notes,
    })
}

fn diagnostics_text(d: &Diagnostics) -> String {
    let pair = |p: Option<(i64, i64)>| match p {
        Some((dim, deg)) => format!("proj_dim {dim}, degree {deg}"),
        None => "not computed".to_string(),
    };
    let mut t = String::new();
    t.push_str("diagnostics:\n");
    t.push_str(&format!(
        "  pairing matrix L: rank {}, det {}\n",
        d.rank_l,
        if d.det_l_nonzero { "nonzero" } else { "zero" }
    ));
    if let Some(sq) = d.wm_double_quadric {
        t.push_str(&format!(
            "  covariant quartic is a double hyperquadric: {}\n",
            if sq { "yes" } else { "no" }
        ));
    }
    t.push_str(&format!("  singular locus: {}\n", pair(d.singular_locus)));
    if d.quotient.is_some() {
        t.push_str(&format!("  quotient by the rank-2 locus: {}\n", pair(d.quotient)));
    }
    if d.saturation.is_some() {
        t.push_str(&format!("  saturation off the rank-2 locus: {}\n", pair(d.saturation)));
    }
    if let Some(delta) = d.delta {
        t.push_str(&format!("  pentalateral thetas δ = {delta}\n"));
    }
    if let Some(r) = d.rank_c_g {
        t.push_str(&format!("  catalecticant rank of the Clebsch preimage: {r}\n"));
    }
    if !d.fields_used.is_empty() {
        t.push_str(&format!("  fields used: {}\n", d.fields_used.join(", ")));
    }
    for n in &d.notes {
        t.push_str(&format!("  note: {n}\n"));
    }
    t
}

fn conic_json<F: Field>(field: &F, ctx: &crate::ring::poly::Ctx<F>, q: &ConicForm<F>) -> Value {
    json!({
        "coefficients": q.coeffs.iter().map(|c| field.fmt_elem(c)).collect::<Vec<_>>(),
        "display": q.display(ctx, &["y0", "y1", "y2"]),
    })
}

fn pentalateral_json<F: Field>(field: &F, p: &crate::detector::Pentalateral<F>) -> Value {
    json!({
        "lines": p
            .lines
            .iter()
            .map(|l| l.iter().map(|c| field.fmt_elem(c)).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "weights": p.weights.iter().map(|w| field.fmt_elem(w)).collect::<Vec<_>>(),
    })
}

fn pentalateral_text<F: Field>(field: &F, p: &crate::detector::Pentalateral<F>) -> String {
    let mut t = String::new();
    t.push_str("pentalateral lines and fourth-power weights (f = Σ wᵢ·ℓᵢ⁴):\n");
    for (l, w) in p.lines.iter().zip(&p.weights) {
        t.push_str(&format!(
            "  [{}, {}, {}]  weight {}\n",
            field.fmt_elem(&l[0]),
            field.fmt_elem(&l[1]),
            field.fmt_elem(&l[2]),
            field.fmt_elem(w)
        ));
    }
    t
}

fn classification_report<F: Field>(field: &F, cls: &Classification<F>) -> (Value, String) {
    let ctx = form_ctx(field.clone());
    let degree_relation = (cls.tag == Tag::Luroth && cls.diagnostics.delta == Some(1))
        .then_some(DEGREE_RELATION);
    let payload_json = cls.payload.as_ref().map(|p| {
        json!({
            "conic": conic_json(field, &ctx, &p.conic),
            "clebsch": p.clebsch.display(&ctx, &["x", "y", "z"]),
            "pentalateral": p.pentalateral.as_ref().map(|pent| pentalateral_json(field, pent)),
        })
    });
    let v = json!({
        "tag": tag_label(cls.tag),
        "degree_relation": degree_relation,
        "luroth": payload_json,
        "diagnostics": diagnostics_json(&cls.diagnostics),
    });
    let mut t = String::new();
    t.push_str(&format!("classification: {}\n", tag_label(cls.tag)));
    if let Some(rel) = degree_relation {
        t.push_str(&format!("{rel}\n"));
    }
    if let Some(p) = &cls.payload {
        t.push_str(&format!(
            "pentalateral theta conic (dual coordinates): {}\n",
            p.conic.display(&ctx, &["y0", "y1", "y2"])
        ));
        t.push_str(&format!(
            "Clebsch preimage: {}\n",
            p.clebsch.display(&ctx, &["x", "y", "z"])
        ));
        if let Some(pent) = &p.pentalateral {
            t.push_str(&pentalateral_text(field, pent));
        }
    }
    t.push_str(&diagnostics_text(&cls.diagnostics));
    (v, t)
}

fn pentalateral_report<F: Field>(
    field: &F,
    cls: Classification<F>,
) -> Result<(Value, String), CliError> {
    if cls.tag != Tag::Luroth {
        let mut msg = format!(
            "no pentalateral: the curve classifies as {}",
            tag_label(cls.tag)
        );
        if !cls.diagnostics.notes.is_empty() {
            msg.push_str(&format!(" ({})", cls.diagnostics.notes.join("; ")));
        }
        return Err(CliError::domain(msg));
    }
    let payload = cls
        .payload
        .as_ref()
        .expect("a positive classification carries its certificate");
    let Some(pent) = &payload.pentalateral else {
        return Err(CliError::domain(format!(
            "the curve is Lüroth but no rational pentalateral was found within the height \
             bound ({})",
            cls.diagnostics.notes.join("; ")
        )));
    };
    let ctx = form_ctx(field.clone());
    let v = json!({
        "conic": conic_json(field, &ctx, &payload.conic),
        "pentalateral": pentalateral_json(field, pent),
        "diagnostics": diagnostics_json(&cls.diagnostics),
    });
    let mut t = String::new();
    t.push_str(&format!(
        "pentalateral theta conic (dual coordinates): {}\n",
        payload.conic.display(&ctx, &["y0", "y1", "y2"])
    ));
    t.push_str(&pentalateral_text(field, pent));
    t.push_str(&diagnostics_text(&cls.diagnostics));
    Ok((v, t))
}

fn rat_to_f64(c: &num_rational::BigRational) -> f64 {
    let num = c.numer().to_f64().unwrap_or(0.0);
    let den = c.denom().to_f64().unwrap_or(1.0);
    num / den
}

/// Dual-chart line clipping: the line a·x + b·y + c·z = 0 restricted to the
/// affine chart where coordinate `chart` is 1.
fn line_in_chart(l: [f64; 3], chart: usize, window: &Window) -> Option<[f64; 4]> {
    let [a, b, c] = l;
    match chart {
        0 => clip_line(b, c, a, window),
        1 => clip_line(a, c, b, window),
        _ => clip_line(a, b, c, window),
    }
}

fn plot_body<F: Field>(
    field: &F,
    f: &TernaryForm<F>,
    expression: &str,
    opts: &CliOptions,
) -> Result<(Value, String, Option<String>, u64), CliError> {
    if field.characteristic().is_some() {
        return Err(CliError::domain(
            "plotting needs the real points of the curve: use the rational field (--field q)",
        ));
    }
    let f_rat: TernaryForm<Rat> = f
        .map_field(|c| {
            field
                .to_rational(c)
                .ok_or(crate::ring::field::FieldError::DivisionByZero)
        })
        .expect("characteristic-zero elements are rational");
    let ctx = form_ctx(Rat);
    let cls = classify_verified(&f_rat, &detector_options(opts))?;
    let grid = 400;
    let mut layers = Vec::new();
    let curve_eval = chart_evaluator(&f_rat, opts.chart);
    let curve_segments = implicit_segments(&curve_eval, &opts.window, grid);
    let curve_segment_count = curve_segments.len();
    layers.push(Layer {
        label: "curve".into(),
        stroke: "#1a1a1a".into(),
        stroke_width: 1.6,
        dash: None,
        segments: curve_segments,
    });
    let mut line_count = 0usize;
    let mut conic_drawn = false;
    if let Some(payload) = &cls.payload {
        if let Some(pent) = &payload.pentalateral {
            let mut segs = Vec::new();
            for l in &pent.lines {
                let lf = [rat_to_f64(&l[0]), rat_to_f64(&l[1]), rat_to_f64(&l[2])];
                if let Some(seg) = line_in_chart(lf, opts.chart, &opts.window) {
                    segs.push(seg);
                }
            }
            line_count = segs.len();
            layers.push(Layer {
                label: "pentalateral".into(),
                stroke: "#4682b4".into(),
                stroke_width: 1.2,
                dash: None,
                segments: segs,
            });
        }
        // The theta conic lives in the dual plane; its adjugate is the conic in the
        // curve's plane inscribed in (tangent to every line of) the pentalateral.
        let m = payload.conic.matrix(&ctx);
        let adj = m.adjugate(&Rat);
        let two = Rat::int(2);
        let inscribed = ConicForm::from_slice(&[
            adj.at(0, 0).clone(),
            &two * adj.at(0, 1),
            &two * adj.at(0, 2),
            adj.at(1, 1).clone(),
            &two * adj.at(1, 2),
            adj.at(2, 2).clone(),
        ]);
        if !inscribed.is_zero(&ctx) {
            let conic_eval = chart_evaluator(&inscribed.to_ternary(), opts.chart);
            let segs = implicit_segments(&conic_eval, &opts.window, grid);
            conic_drawn = !segs.is_empty();
            layers.push(Layer {
                label: "inscribed conic".into(),
                stroke: "#dc143c".into(),
                stroke_width: 1.4,
                dash: Some("6,4".into()),
                segments: segs,
            });
        }
    }
    let chart_name = ["x = 1", "y = 1", "z = 1"][opts.chart];
    let svg = svg_document(&opts.window, &layers, &format!("quartic in the chart {chart_name}"));
    let v = json!({
        "tag": tag_label(cls.tag),
        "chart": opts.chart,
        "window": [opts.window.xmin, opts.window.xmax, opts.window.ymin, opts.window.ymax],
        "curve_segments": curve_segment_count,
        "pentalateral_lines_drawn": line_count,
        "inscribed_conic_drawn": conic_drawn,
        "svg_bytes": svg.len(),
        "diagnostics": diagnostics_json(&cls.diagnostics),
    });
    let mut t = String::new();
    t.push_str(&format!(
        "plot of {} in the chart {} ({} curve segments)\n",
        expression, chart_name, curve_segment_count
    ));
    t.push_str(&format!("classification: {}\n", tag_label(cls.tag)));
    if line_count > 0 {
        t.push_str(&format!(
            "overlay: {line_count} pentalateral lines{}\n",
            if conic_drawn { " and the inscribed conic" } else { "" }
        ));
    }
    Ok((v, t, Some(svg), cls.diagnostics.work_units))
}
