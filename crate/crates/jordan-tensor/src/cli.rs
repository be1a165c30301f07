//! Record building and serialization for the command-line binary: method
//! dispatch, the JSON/CSV output schema, and the grid drivers behind
//! `compare` and `table`.

use crate::arith::{BlockSpec, Characteristic, Decomposition, EigenvalueClass};
use crate::{closed_form, delta, minors, oracle};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Which pipeline computes the answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    /// Flag scan, silently cross-checked against the minor sweep.
    Auto,
    /// Graded-determinant flag scan.
    Delta,
    /// Minor-gcd dimension sweep.
    Minors,
    /// Brute-force Kronecker matrix over the exact field.
    Oracle,
    /// Characteristic-zero closed form (regardless of `p`).
    #[value(name = "char0")]
    Char0,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Method::Auto => "auto",
            Method::Delta => "delta",
            Method::Minors => "minors",
            Method::Oracle => "oracle",
            Method::Char0 => "char0",
        };
        write!(f, "{name}")
    }
}

/// Output format of the binary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Errors the binary maps to exit codes: invalid input exits 2, an internal
/// cross-method disagreement (a bug trap, not a user error) exits 3.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Invalid(#[from] crate::arith::Error),
    #[error(
        "internal disagreement for s={s} t={t} p={p}: {left_name} gives {left} \
         but {right_name} gives {right}"
    )]
    Disagreement {
        s: usize,
        t: usize,
        p: u64,
        left_name: &'static str,
        left: String,
        right_name: &'static str,
        right: String,
    },
}

fn disagreement(
    spec: &BlockSpec,
    left_name: &'static str,
    left: &Decomposition,
    right_name: &'static str,
    right: &Decomposition,
) -> CliError {
    CliError::Disagreement {
        s: spec.s(),
        t: spec.t(),
        p: spec.characteristic().value(),
        left_name,
        left: blocks_compact(left),
        right_name,
        right: blocks_compact(right),
    }
}

/// Runs the selected pipeline. Returns the decomposition together with the
/// name of the pipeline that actually produced it (`auto` resolves to the
/// flag scan; a zero eigenvalue product resolves to the closed form).
///
/// In `auto` mode the two algorithmic pipelines are both evaluated and must
/// agree; an explicit `oracle` request on a zero-eigenvalue spec is likewise
/// checked against the closed form.
pub fn decompose(
    spec: &BlockSpec,
    method: Method,
) -> Result<(Decomposition, &'static str), CliError> {
    let spec = spec.normalized();
    if spec.eigenvalue_class() == EigenvalueClass::Zero {
        return match method {
            Method::Oracle => {
                let d = oracle::decompose_via_oracle(&spec);
                let closed = closed_form::decompose_zero_eigenvalue(&spec);
                if d != closed {
                    return Err(disagreement(&spec, "oracle", &d, "closed-form", &closed));
                }
                Ok((d, "oracle"))
            }
            Method::Char0 => Ok((closed_form::decompose_char0(&spec), "char0")),
            _ => Ok((closed_form::decompose_zero_eigenvalue(&spec), "closed-form")),
        };
    }
    match method {
        Method::Auto => {
            let d = delta::decompose_via_delta(&spec);
            let m = minors::decompose_via_minors(&spec);
            if d != m {
                return Err(disagreement(&spec, "delta", &d, "minors", &m));
            }
            Ok((d, "delta"))
        }
        Method::Delta => Ok((delta::decompose_via_delta(&spec), "delta")),
        Method::Minors => Ok((minors::decompose_via_minors(&spec), "minors")),
        Method::Oracle => Ok((oracle::decompose_via_oracle(&spec), "oracle")),
        Method::Char0 => Ok((closed_form::decompose_char0(&spec), "char0")),
    }
}

/// One Jordan block size with its multiplicity, as serialized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockEntry {
    pub size: usize,
    pub multiplicity: usize,
}

/// Optional diagnostic payload (`--extras`).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extras {
    /// Vanishing flags of the graded determinants, as 0/1.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta_flags: Option<Vec<u8>>,
    /// The graded determinants themselves, decimal strings (they outgrow
    /// u64 quickly).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub roberts_determinants: Option<Vec<String>>,
    /// Nilpotency exponent of `x + y` on the monomial box.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nilpotency: Option<usize>,
    /// Cumulative dimension profile behind the block partition.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dims: Option<Vec<usize>>,
}

/// One fully-described problem instance and its answer — the JSON schema of
/// the binary.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub s: usize,
    pub t: usize,
    pub p: u64,
    pub alpha_zero: bool,
    pub beta_zero: bool,
    pub method: String,
    pub eigenvalue_class: EigenvalueClass,
    pub blocks: Vec<BlockEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extras: Option<Extras>,
}

/// Compact block notation: sizes with multiplicities, e.g. `8^1+4^3`.
pub fn blocks_compact(d: &Decomposition) -> String {
    d.blocks
        .grouped()
        .iter()
        .map(|(size, mult)| format!("{size}^{mult}"))
        .collect::<Vec<_>>()
        .join("+")
}

/// The fixed CSV header.
pub fn csv_header() -> &'static str {
    "s,t,p,alpha_zero,beta_zero,blocks"
}

impl OutputRecord {
    /// The CSV row matching [`csv_header`].
    pub fn to_csv_line(&self) -> String {
        let blocks = self
            .blocks
            .iter()
            .map(|b| format!("{}^{}", b.size, b.multiplicity))
            .collect::<Vec<_>>()
            .join("+");
        format!(
            "{},{},{},{},{},{}",
            self.s, self.t, self.p, self.alpha_zero, self.beta_zero, blocks
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }
}

/// Validates raw user input into a [`BlockSpec`].
pub fn validated_spec(
    s: usize,
    t: usize,
    alpha_zero: bool,
    beta_zero: bool,
    p: u64,
) -> Result<BlockSpec, CliError> {
    let characteristic = Characteristic::new(p)?;
    Ok(BlockSpec::new(s, t, alpha_zero, beta_zero, characteristic)?)
}

/// Decomposes and packages one record; `with_extras` adds the diagnostic
/// payload.
pub fn build_record(
    spec: &BlockSpec,
    method: Method,
    with_extras: bool,
) -> Result<OutputRecord, CliError> {
    let (decomposition, method_used) = decompose(spec, method)?;
    let norm = spec.normalized();
    let extras = with_extras.then(|| record_extras(&norm));
    Ok(OutputRecord {
        s: spec.s(),
        t: spec.t(),
        p: spec.characteristic().value(),
        alpha_zero: spec.alpha_zero(),
        beta_zero: spec.beta_zero(),
        method: method_used.to_string(),
        eigenvalue_class: decomposition.eigenvalue_class,
        blocks: decomposition
            .blocks
            .grouped()
            .into_iter()
            .map(|(size, multiplicity)| BlockEntry { size, multiplicity })
            .collect(),
        extras,
    })
}

fn record_extras(spec: &BlockSpec) -> Extras {
    let (s, t) = (spec.s(), spec.t());
    let ch = spec.characteristic();
    if spec.eigenvalue_class() == EigenvalueClass::Zero {
        // the scan-side diagnostics model the invertible case only
        let blocks = closed_form::decompose_zero_eigenvalue(spec).blocks;
        let dims = prefix_dims(&blocks);
        return Extras {
            dims: Some(dims),
            ..Extras::default()
        };
    }
    let flags = delta::delta_sequence(s, t, ch);
    let roberts: Vec<String> = (0..s)
        .map(|i| delta::roberts_determinant(s, t, i).to_string())
        .collect();
    let blocks = delta::decompose_via_delta(spec).blocks;
    Extras {
        delta_flags: Some(flags.as_bits()),
        roberts_determinants: Some(roberts),
        nilpotency: Some(delta::nilpotency(s, t, ch)),
        dims: Some(prefix_dims(&blocks)),
    }
}

fn prefix_dims(blocks: &crate::arith::Partition) -> Vec<usize> {
    let mut acc = 0;
    blocks
        .conjugate()
        .parts()
        .iter()
        .map(|&b| {
            acc += b;
            acc
        })
        .collect()
}

/// A grid cell where the selected methods disagreed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub s: usize,
    pub t: usize,
    pub p: u64,
    /// `(method name, compact blocks)` for each method, in request order.
    pub results: Vec<(String, String)>,
}

/// Outcome of a `compare` run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompareOutcome {
    pub cases: usize,
    pub mismatches: Vec<Mismatch>,
}

/// Runs the selected methods over the grid `1 <= s <= smax`,
/// `s <= t <= tmax`, nonzero eigenvalues, for each characteristic, and
/// collects any disagreement.
pub fn compare_grid(
    smax: usize,
    tmax: usize,
    characteristics: &[u64],
    methods: &[Method],
) -> Result<CompareOutcome, CliError> {
    assert!(!methods.is_empty(), "compare needs at least one method");
    let mut cases = 0;
    let mut mismatches = Vec::new();
    for p in characteristics {
        Characteristic::new(*p)?;
    }
    for s in 1..=smax {
        for t in s..=tmax {
            for &p in characteristics {
                let spec = validated_spec(s, t, false, false, p)?;
                cases += 1;
                let results: Vec<(String, Decomposition)> = methods
                    .iter()
                    .map(|&m| Ok((m.to_string(), decompose(&spec, m)?.0)))
                    .collect::<Result<_, CliError>>()?;
                let all_equal = results.windows(2).all(|w| w[0].1 == w[1].1);
                if !all_equal {
                    mismatches.push(Mismatch {
                        s,
                        t,
                        p,
                        results: results
                            .into_iter()
                            .map(|(name, d)| (name, blocks_compact(&d)))
                            .collect(),
                    });
                }
            }
        }
    }
    Ok(CompareOutcome { cases, mismatches })
}

/// Builds the `table` records: one per `(s, t, p)` in lexicographic order
/// (characteristics sorted ascending, duplicates dropped), nonzero
/// eigenvalues, computed by the flag scan.
pub fn table_records(
    smax: usize,
    tmax: usize,
    characteristics: &[u64],
    with_extras: bool,
) -> Result<Vec<OutputRecord>, CliError> {
    let mut ps: Vec<u64> = characteristics.to_vec();
    ps.sort_unstable();
    ps.dedup();
    for &p in &ps {
        Characteristic::new(p)?;
    }
    let mut out = Vec::new();
    for s in 1..=smax {
        for t in s..=tmax {
            for &p in &ps {
                let spec = validated_spec(s, t, false, false, p)?;
                out.push(build_record(&spec, Method::Delta, with_extras)?);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: usize, t: usize, az: bool, bz: bool, p: u64) -> BlockSpec {
        validated_spec(s, t, az, bz, p).unwrap()
    }

    #[test]
    fn dispatch_reports_the_producing_method() {
        let (d, name) = decompose(&spec(4, 5, false, false, 2), Method::Auto).unwrap();
        assert_eq!(name, "delta");
        assert_eq!(d.blocks.parts(), &[8, 4, 4, 4]);

        let (_, name) = decompose(&spec(4, 5, false, false, 2), Method::Oracle).unwrap();
        assert_eq!(name, "oracle");

        let (d, name) = decompose(&spec(2, 3, true, false, 7), Method::Auto).unwrap();
        assert_eq!(name, "closed-form");
        assert_eq!(d.blocks.parts(), &[2, 2, 2]);

        let (d, name) = decompose(&spec(2, 3, true, false, 7), Method::Oracle).unwrap();
        assert_eq!(name, "oracle");
        assert_eq!(d.blocks.parts(), &[2, 2, 2]);
    }

    #[test]
    fn char0_method_ignores_the_characteristic() {
        let (d, name) = decompose(&spec(4, 5, false, false, 2), Method::Char0).unwrap();
        assert_eq!(name, "char0");
        assert_eq!(d.blocks.parts(), &[8, 6, 4, 2]);
    }

    #[test]
    fn record_round_trips_through_json() {
        let rec = build_record(&spec(4, 5, false, false, 2), Method::Auto, true).unwrap();
        let json = rec.to_json();
        let back: OutputRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(rec, back);
        assert!(json.contains("\"eigenvalue_class\":\"nonzero-product\""));
        assert!(json.contains("\"blocks\":[{\"size\":8,\"multiplicity\":1}"));

        let plain = build_record(&spec(2, 3, true, true, 0), Method::Auto, false).unwrap();
        let back: OutputRecord = serde_json::from_str(&plain.to_json()).unwrap();
        assert_eq!(plain, back);
        assert_eq!(back.eigenvalue_class, EigenvalueClass::Zero);
    }

    #[test]
    fn csv_layout_is_fixed() {
        assert_eq!(csv_header(), "s,t,p,alpha_zero,beta_zero,blocks");
        let rec = build_record(&spec(4, 5, false, false, 2), Method::Auto, false).unwrap();
        assert_eq!(rec.to_csv_line(), "4,5,2,false,false,8^1+4^3");
        let rec = build_record(&spec(1, 6, false, false, 7), Method::Auto, false).unwrap();
        assert_eq!(rec.to_csv_line(), "1,6,7,false,false,6^1");
        let rec = build_record(&spec(4, 5, false, false, 5), Method::Auto, false).unwrap();
        assert_eq!(rec.to_csv_line(), "4,5,5,false,false,5^4");
    }

    #[test]
    fn extras_payload_for_the_running_example() {
        let rec = build_record(&spec(4, 5, false, false, 2), Method::Auto, true).unwrap();
        let extras = rec.extras.unwrap();
        assert_eq!(extras.delta_flags.unwrap(), vec![0, 1, 1, 0]);
        assert_eq!(
            extras.roberts_determinants.unwrap(),
            vec!["35", "50", "10", "1"]
        );
        assert_eq!(extras.nilpotency.unwrap(), 7);
        assert_eq!(extras.dims.unwrap(), vec![4, 8, 12, 16, 17, 18, 19, 20]);
    }

    #[test]
    fn invalid_characteristic_is_reported() {
        let err = validated_spec(2, 2, false, false, 6).unwrap_err();
        assert!(matches!(err, CliError::Invalid(_)));
    }

    #[test]
    fn compare_grid_agrees_on_a_small_grid() {
        let out = compare_grid(
            4,
            4,
            &[0, 2, 3, 5],
            &[Method::Delta, Method::Minors, Method::Oracle],
        )
        .unwrap();
        assert_eq!(out.cases, 10 * 4);
        assert!(out.mismatches.is_empty());
    }

    #[test]
    fn compare_grid_detects_engineered_disagreement() {
        // char0 genuinely disagrees with the scan at non-generic primes,
        // which doubles as a mismatch-path test
        let out = compare_grid(4, 5, &[2], &[Method::Delta, Method::Char0]).unwrap();
        assert!(!out.mismatches.is_empty());
        let m = &out.mismatches[0];
        assert_eq!(m.results.len(), 2);
    }

    #[test]
    fn table_records_are_sorted_and_deduped() {
        let recs = table_records(2, 3, &[5, 2, 5], false).unwrap();
        // (s,t) pairs: (1,1),(1,2),(1,3),(2,2),(2,3) with p in {2,5}
        assert_eq!(recs.len(), 5 * 2);
        assert_eq!(recs[0].p, 2);
        assert_eq!(recs[1].p, 5);
        assert_eq!((recs[0].s, recs[0].t), (1, 1));
        let row = recs.iter().find(|r| (r.s, r.t, r.p) == (2, 3, 2)).unwrap();
        assert_eq!(row.to_csv_line(), "2,3,2,false,false,4^1+2^1");
    }
}
