#pragma once

// Single checks, deterministic resumable sweeps and named reproductions.

#include "qquot/analysis.hpp"
#include "qquot/criteria.hpp"
#include "qquot/qexpr.hpp"
#include "qquot/qpoly.hpp"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qquot {

enum class Verdict { NotPolynomial, PolynomialNonnegative, Violation };

std::string_view to_string(Verdict v);
std::optional<Verdict> parse_verdict(std::string_view s);

/// Anything that is neither a quotient nor a fake Gaussian spec, e.g.
/// {"corollary10", {n}}.
struct LabeledSpec {
    std::string name;
    std::vector<std::int64_t> params;

    friend bool operator==(const LabeledSpec&, const LabeledSpec&) = default;
};

using AnySpec = std::variant<QuotientSpec, FakeGaussianSpec, LabeledSpec>;

struct CheckResult {
    AnySpec spec;
    AnySpec normalized;
    std::string expression;  // factored form
    bool is_polynomial = false;
    bool nonnegative = false;
    std::optional<CoefficientLocus> first_negative;
    std::optional<std::int64_t> degree;
    bool structure_ok = true;  // reciprocal with constant term 1
    std::optional<IntPolynomial> expansion;
    std::optional<PropertyRecord> properties;
    Verdict verdict = Verdict::NotPolynomial;
    std::string note;
    std::chrono::nanoseconds elapsed{0};
};

struct CheckOptions {
    bool keep_expansion = false;
    bool properties = false;
};

/// Cyclotomic test first; expansion and coefficient checks only when it passes.
CheckResult verify_expression(const FactoredQExpression& expr, AnySpec spec, AnySpec normalized,
                              const CheckOptions& options = {});

/// Requires k, l <= n. Works on the symmetry-normalized triple.
CheckResult verify_quotient(const QuotientSpec& spec, const CheckOptions& options = {});

/// Requires m >= 1.
CheckResult verify_fake_gaussian(const FakeGaussianSpec& spec, const CheckOptions& options = {});

struct SweepCounts {
    std::uint64_t examined = 0;
    std::uint64_t polynomial = 0;
    std::uint64_t violations = 0;
    std::uint64_t structure_failures = 0;

    friend bool operator==(const SweepCounts&, const SweepCounts&) = default;
};

struct SweepReport {
    std::string sweep_id;
    std::map<std::string, std::string> parameters;
    std::optional<std::uint64_t> seed;
    SweepCounts counts;
    std::vector<CheckResult> violations;
    std::uint64_t total_units = 0;
    std::uint64_t cursor = 0;  // units completed, in lexicographic order
    bool complete = false;
    std::chrono::nanoseconds wall_time{0};
};

struct SweepOptions {
    unsigned workers = 0;  // 0: hardware concurrency
    std::optional<std::filesystem::path> checkpoint{};
    bool resume = false;
    std::uint64_t chunk_size = 1024;
    /// Stop after this many units in the current run, leaving a resumable
    /// checkpoint behind.
    std::optional<std::uint64_t> stop_after{};
};

class CheckpointError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// conjecture1: every 1 <= l < k <= n/2, 2 <= n <= n_max.
SweepReport sweep_conjecture1(std::int64_t n_max, const SweepOptions& options = {});
std::uint64_t conjecture1_unit_count(std::int64_t n_max);

enum class FakeGaussianTemplate { A, AA, ABA, ABCBA };

std::string_view to_string(FakeGaussianTemplate t);
std::optional<FakeGaussianTemplate> parse_template(std::string_view s);

struct FakeGaussianSweepConfig {
    FakeGaussianTemplate shape = FakeGaussianTemplate::ABA;
    std::uint64_t seed = 0;
    std::uint64_t samples = 10000;
    std::int64_t value_max = 10;  // a, b, c, s drawn from [0, value_max]
    std::int64_t m_span = 200;    // m drawn from [max(1, s), s + m_span]
};

/// The i-th sample; a pure function of (config, i).
FakeGaussianSpec fake_gaussian_sample(const FakeGaussianSweepConfig& config, std::uint64_t index);
SweepReport sweep_fake_gaussian(const FakeGaussianSweepConfig& config, const SweepOptions& options = {});

/// Closed-form l = 1 and l = 2 criteria against the cyclotomic test for every
/// 2 <= n <= n_max; disagreements and negative coefficients are violations.
SweepReport crosscheck_theorems(std::int64_t n_max, const SweepOptions& options = {});

/// corollary10_expression(n) for 1 <= n <= n_max, checked for positivity and
/// against the factored route.
SweepReport reproduce_corollary10(std::int64_t n_max, const SweepOptions& options = {});

struct Remark25Row {
    std::string label;
    FactoredQExpression expression;
    std::optional<IntPolynomial> expansion;
    IntPolynomial printed;
    bool matches = false;
};

/// The four factorial quotients with negative coefficients and their printed
/// expansions.
std::vector<Remark25Row> reproduce_remark25();

/// The 17-term sequence with the given m.
FakeGaussianSpec stanton_spec(std::int64_t m);

struct StantonReport {
    CheckResult base;                  // m = 1
    std::vector<CheckResult> shifted;  // m = 2..m_max
    bool matches = false;
};

StantonReport reproduce_stanton(std::int64_t m_max = 50);

struct Lemma6Row {
    Lemma6Variant variant = Lemma6Variant::A;
    std::int64_t K = 0;
    std::int64_t M = 0;
    QuotientSpec spec;
    bool polynomial = false;
    bool nonnegative = false;
    bool reciprocal = false;
    std::int64_t degree = 0;
    std::optional<std::int64_t> closed_form_degree;  // variant A only
    std::optional<std::int64_t> order_bound;         // variant A only
    std::optional<Case4Label> classified;
    bool ok = false;
};

std::vector<Lemma6Row> reproduce_lemma6(std::int64_t K_max = 12, std::int64_t M_max = 6);

}  // namespace qquot
