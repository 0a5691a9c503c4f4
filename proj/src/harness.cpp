#include "qquot/harness.hpp"

#include "qquot/report.hpp"
#include "qquot/rng.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <tuple>

namespace qquot {

using Clock = std::chrono::steady_clock;

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::NotPolynomial: return "not-polynomial";
    case Verdict::PolynomialNonnegative: return "polynomial-nonnegative";
    case Verdict::Violation: return "VIOLATION";
    }
    return "?";
}

std::optional<Verdict> parse_verdict(std::string_view s)
{
    for (auto v : {Verdict::NotPolynomial, Verdict::PolynomialNonnegative, Verdict::Violation}) {
        if (to_string(v) == s) return v;
    }
    return std::nullopt;
}

CheckResult verify_expression(const FactoredQExpression& expr, AnySpec spec, AnySpec normalized,
                              const CheckOptions& options)
{
    const auto start = Clock::now();
    CheckResult r;
    r.spec = std::move(spec);
    r.normalized = std::move(normalized);
    r.expression = expr.to_string();
    r.is_polynomial = is_polynomial(expr);
    if (r.is_polynomial) {
        auto p = expand(expr);
        if (!p) {
            throw std::logic_error("cyclotomic test and exact expansion disagree on " + spec_to_string(r.spec));
        }
        auto nn = nonnegativity(*p);
        r.nonnegative = nn.nonnegative;
        r.first_negative = std::move(nn.first_negative);
        r.degree = p->degree();
        r.structure_ok = is_reciprocal(*p) && (*p)[0] == 1;
        if (options.properties) r.properties = properties_of(*p);
        if (options.keep_expansion) r.expansion = std::move(*p);
        r.verdict = r.nonnegative ? Verdict::PolynomialNonnegative : Verdict::Violation;
    }
    r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
    return r;
}

CheckResult verify_quotient(const QuotientSpec& spec, const CheckOptions& options)
{
    const QuotientSpec norm = normalize(spec);
    return verify_expression(from_quotient_spec(norm), spec, norm, options);
}

CheckResult verify_fake_gaussian(const FakeGaussianSpec& spec, const CheckOptions& options)
{
    return verify_expression(from_fake_gaussian(spec), spec, spec, options);
}

namespace {

struct UnitOutcome {
    CheckResult result;
    bool violation = false;
};

using UnitFn = std::function<UnitOutcome(std::uint64_t)>;

// Runs units [cursor, total) in fixed-size chunks. Inside a chunk the units
// are claimed dynamically by the workers; results are merged in index order,
// so the report does not depend on the worker count.
SweepReport run_sweep(SweepReport report, const UnitFn& unit, const SweepOptions& options)
{
    const auto start = Clock::now();
    std::chrono::nanoseconds prior{0};

    if (options.resume) {
        if (!options.checkpoint) throw CheckpointError("resume requested without a checkpoint path");
        if (std::filesystem::exists(*options.checkpoint)) {
            SweepReport saved = read_checkpoint(*options.checkpoint);
            if (saved.sweep_id != report.sweep_id || saved.parameters != report.parameters ||
                saved.seed != report.seed || saved.total_units != report.total_units) {
                throw CheckpointError("checkpoint " + options.checkpoint->string() +
                                      " was written for different sweep parameters; refusing to resume");
            }
            report.counts = saved.counts;
            report.violations = std::move(saved.violations);
            report.cursor = saved.cursor;
            prior = saved.wall_time;
        }
    }

    unsigned workers = options.workers != 0 ? options.workers : std::thread::hardware_concurrency();
    workers = std::max(1u, workers);
    const std::uint64_t chunk = std::max<std::uint64_t>(1, options.chunk_size);
    std::uint64_t budget = options.stop_after.value_or(report.total_units);

    while (report.cursor < report.total_units && budget > 0) {
        const std::uint64_t begin = report.cursor;
        const std::uint64_t end = std::min({report.total_units, begin + chunk, begin + budget});
        const std::uint64_t count = end - begin;
        std::vector<std::optional<UnitOutcome>> slots(count);

        std::atomic<std::uint64_t> next{0};
        std::atomic<bool> failed{false};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto work = [&] {
            for (;;) {
                const std::uint64_t i = next.fetch_add(1);
                if (i >= count || failed.load()) return;
                try {
                    slots[i] = unit(begin + i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                    failed = true;
                    return;
                }
            }
        };
        const unsigned n_threads = static_cast<unsigned>(std::min<std::uint64_t>(workers, count));
        if (n_threads <= 1) {
            work();
        } else {
            std::vector<std::jthread> pool;
            pool.reserve(n_threads);
            for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(work);
        }
        if (error) std::rethrow_exception(error);

        for (auto& slot : slots) {
            auto& out = *slot;
            ++report.counts.examined;
            if (out.result.is_polynomial) {
                ++report.counts.polynomial;
                if (!out.result.structure_ok) ++report.counts.structure_failures;
            }
            if (out.violation) {
                ++report.counts.violations;
                report.violations.push_back(std::move(out.result));
            }
        }
        report.cursor = end;
        budget -= count;
        report.complete = report.cursor == report.total_units;
        report.wall_time = prior + std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
        if (options.checkpoint) write_checkpoint(*options.checkpoint, report);
    }
    report.complete = report.cursor == report.total_units;
    report.wall_time = prior + std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
    return report;
}

// Offsets of the first (n, k, l) unit for each n in lexicographic order.
class Conjecture1Index {
public:
    explicit Conjecture1Index(std::int64_t n_max)
    {
        offsets_.assign(static_cast<std::size_t>(std::max<std::int64_t>(n_max, 1)) + 2, 0);
        for (std::int64_t n = 2; n <= n_max; ++n) {
            const auto half = static_cast<std::uint64_t>(n / 2);
            const std::uint64_t units = half >= 2 ? half * (half - 1) / 2 : 0;
            offsets_[static_cast<std::size_t>(n) + 1] = offsets_[static_cast<std::size_t>(n)] + units;
        }
    }

    std::uint64_t total() const { return offsets_.back(); }

    QuotientSpec at(std::uint64_t index) const
    {
        auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
        const auto n = static_cast<std::int64_t>(std::distance(offsets_.begin(), it)) - 1;
        std::uint64_t o = index - offsets_[static_cast<std::size_t>(n)];
        std::int64_t k = 2;
        while (o >= static_cast<std::uint64_t>(k - 1)) {
            o -= static_cast<std::uint64_t>(k - 1);
            ++k;
        }
        return {n, k, static_cast<std::int64_t>(o) + 1};
    }

private:
    std::vector<std::uint64_t> offsets_;  // offsets_[n] = units with smaller n
};

}  // namespace

std::uint64_t conjecture1_unit_count(std::int64_t n_max)
{
    return Conjecture1Index(n_max).total();
}

SweepReport sweep_conjecture1(std::int64_t n_max, const SweepOptions& options)
{
    if (n_max < 2) throw std::domain_error("sweep_conjecture1 requires n_max >= 2");
    const Conjecture1Index index(n_max);
    SweepReport report;
    report.sweep_id = "conjecture1";
    report.parameters = {{"n_max", std::to_string(n_max)}};
    report.total_units = index.total();
    return run_sweep(std::move(report),
                     [&](std::uint64_t i) {
                         CheckResult r = verify_quotient(index.at(i), {.keep_expansion = false});
                         const bool bad = r.verdict == Verdict::Violation || (r.is_polynomial && !r.structure_ok);
                         if (bad) r = verify_quotient(index.at(i), {.keep_expansion = true, .properties = true});
                         return UnitOutcome{std::move(r), bad};
                     },
                     options);
}

std::string_view to_string(FakeGaussianTemplate t)
{
    switch (t) {
    case FakeGaussianTemplate::A: return "a";
    case FakeGaussianTemplate::AA: return "aa";
    case FakeGaussianTemplate::ABA: return "aba";
    case FakeGaussianTemplate::ABCBA: return "abcba";
    }
    return "?";
}

std::optional<FakeGaussianTemplate> parse_template(std::string_view s)
{
    for (auto t : {FakeGaussianTemplate::A, FakeGaussianTemplate::AA, FakeGaussianTemplate::ABA,
                   FakeGaussianTemplate::ABCBA}) {
        if (to_string(t) == s) return t;
    }
    return std::nullopt;
}

FakeGaussianSpec fake_gaussian_sample(const FakeGaussianSweepConfig& config, std::uint64_t index)
{
    CounterRng rng(config.seed, index);
    const std::int64_t s = rng.uniform(0, config.value_max);
    const std::int64_t a = rng.uniform(0, config.value_max);
    const std::int64_t b = rng.uniform(0, config.value_max);
    const std::int64_t c = rng.uniform(0, config.value_max);
    const std::int64_t m = rng.uniform(std::max<std::int64_t>(1, s), s + config.m_span);

    std::vector<std::int64_t> core;
    switch (config.shape) {
    case FakeGaussianTemplate::A: core = {a}; break;
    case FakeGaussianTemplate::AA: core = {a, a}; break;
    case FakeGaussianTemplate::ABA: core = {a, b, a}; break;
    case FakeGaussianTemplate::ABCBA: core = {a, b, c, b, a}; break;
    }
    FakeGaussianSpec spec{m, std::vector<std::int64_t>(static_cast<std::size_t>(s), 0)};
    spec.a.insert(spec.a.end(), core.begin(), core.end());
    spec.a.insert(spec.a.end(), static_cast<std::size_t>(s), 0);
    return spec;
}

SweepReport sweep_fake_gaussian(const FakeGaussianSweepConfig& config, const SweepOptions& options)
{
    if (config.samples == 0 || config.value_max < 0 || config.m_span < 0) {
        throw std::domain_error("sweep_fake_gaussian: empty parameter ranges");
    }
    SweepReport report;
    report.sweep_id = "fake-gaussian";
    report.parameters = {{"template", std::string(to_string(config.shape))},
                         {"samples", std::to_string(config.samples)},
                         {"value_max", std::to_string(config.value_max)},
                         {"m_span", std::to_string(config.m_span)}};
    report.seed = config.seed;
    report.total_units = config.samples;
    return run_sweep(std::move(report),
                     [&](std::uint64_t i) {
                         const auto spec = fake_gaussian_sample(config, i);
                         CheckResult r = verify_fake_gaussian(spec);
                         const bool bad = r.verdict == Verdict::Violation || (r.is_polynomial && !r.structure_ok);
                         if (bad) r = verify_fake_gaussian(spec, {.keep_expansion = true, .properties = true});
                         return UnitOutcome{std::move(r), bad};
                     },
                     options);
}

SweepReport crosscheck_theorems(std::int64_t n_max, const SweepOptions& options)
{
    if (n_max < 4) throw std::domain_error("crosscheck_theorems requires n_max >= 4");
    std::vector<QuotientSpec> units;  // ordered by (n, l, k)
    for (std::int64_t n = 2; n <= n_max; ++n) {
        for (std::int64_t k = 1; k <= n - 1; ++k) units.push_back({n, k, 1});
        for (std::int64_t k = 2; k <= n - 2; ++k) units.push_back({n, k, 2});
    }
    SweepReport report;
    report.sweep_id = "crosscheck";
    report.parameters = {{"n_max", std::to_string(n_max)}};
    report.total_units = units.size();
    return run_sweep(std::move(report),
                     [&](std::uint64_t i) {
                         const QuotientSpec s = units[i];
                         CheckResult r = verify_quotient(s);
                         const bool criterion = s.l == 1 ? thm8_is_polynomial(s.n, s.k) : thm9_is_polynomial(s.n, s.k);
                         bool bad = false;
                         if (criterion != r.is_polynomial) {
                             r.note = std::string(s.l == 1 ? "l=1" : "l=2") + " closed form says " +
                                      (criterion ? "polynomial" : "not polynomial") + ", cyclotomic test disagrees";
                             bad = true;
                         }
                         if (r.verdict == Verdict::Violation || (r.is_polynomial && !r.structure_ok)) bad = true;
                         return UnitOutcome{std::move(r), bad};
                     },
                     options);
}

SweepReport reproduce_corollary10(std::int64_t n_max, const SweepOptions& options)
{
    if (n_max < 1) throw std::domain_error("reproduce_corollary10 requires n_max >= 1");
    SweepReport report;
    report.sweep_id = "corollary10";
    report.parameters = {{"n_max", std::to_string(n_max)}};
    report.total_units = static_cast<std::uint64_t>(n_max);
    return run_sweep(std::move(report),
                     [](std::uint64_t i) {
                         const auto n = static_cast<std::int64_t>(i) + 1;
                         const LabeledSpec label{"corollary10", {n}};
                         CheckResult r = verify_expression(corollary10_expression(n), label, label,
                                                           {.keep_expansion = true});
                         bool bad = r.verdict != Verdict::PolynomialNonnegative || !r.structure_ok;
                         if (r.expansion) {
                             const auto route = corollary10_factored_route(n);
                             if (!route || *route != *r.expansion) {
                                 r.note = "direct expansion differs from the factored route";
                                 bad = true;
                             }
                             if (n == 1 && *r.expansion != IntPolynomial{1, 0, 0, 1}) {
                                 r.note = "n=1 is not 1 + q^3";
                                 bad = true;
                             }
                         }
                         if (!bad) r.expansion.reset();
                         return UnitOutcome{std::move(r), bad};
                     },
                     options);
}

std::vector<Remark25Row> reproduce_remark25()
{
    struct Golden {
        const char* label;
        std::vector<FactorialPower> num;
        std::vector<FactorialPower> den;
        IntPolynomial printed;
    };
    const std::vector<Golden> table = {
        {"[12]! ([2]!)^2 / ([11]! [4]! [1]!)",
         {{12, 1}, {2, 2}},
         {{11, 1}, {4, 1}, {1, 1}},
         {1, 0, -1, 1, 1, -1, 0, 1}},
        {"[10]! [4]! [3]! [1]! / ([9]! [5]! ([2]!)^2)",
         {{10, 1}, {4, 1}, {3, 1}, {1, 1}},
         {{9, 1}, {5, 1}, {2, 2}},
         {1, 0, 1, -1, 1, 0, 1}},
        {"[12]! ([2]!)^3 / ([11]! [4]! ([1]!)^3)",
         {{12, 1}, {2, 3}},
         {{11, 1}, {4, 1}, {1, 3}},
         {1, 1, -1, 0, 2, 0, -1, 1, 1}},
        {"[12]! ([2]!)^5 / ([11]! [4]! ([1]!)^7)",
         {{12, 1}, {2, 5}},
         {{11, 1}, {4, 1}, {1, 7}},
         {1, 3, 2, -1, 1, 4, 1, -1, 2, 3, 1}},
    };
    std::vector<Remark25Row> rows;
    for (const auto& g : table) {
        Remark25Row row;
        row.label = g.label;
        row.expression = factorial_quotient(g.num, g.den);
        row.expansion = expand(row.expression);
        row.printed = g.printed;
        row.matches = row.expansion && *row.expansion == row.printed;
        rows.push_back(std::move(row));
    }
    return rows;
}

FakeGaussianSpec stanton_spec(std::int64_t m)
{
    return {m, {1, 3, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 1, 1, 1}};
}

StantonReport reproduce_stanton(std::int64_t m_max)
{
    StantonReport rep;
    rep.base = verify_fake_gaussian(stanton_spec(1), {.keep_expansion = true, .properties = true});
    for (std::int64_t m = 2; m <= m_max; ++m) rep.shifted.push_back(verify_fake_gaussian(stanton_spec(m)));
    const bool base_ok = rep.base.expansion && (*rep.base.expansion)[7] == -1 && rep.base.first_negative &&
                         rep.base.first_negative->exponent == 7;
    rep.matches = base_ok && std::all_of(rep.shifted.begin(), rep.shifted.end(), [](const CheckResult& r) {
                      return r.verdict == Verdict::PolynomialNonnegative;
                  });
    return rep;
}

std::vector<Lemma6Row> reproduce_lemma6(std::int64_t K_max, std::int64_t M_max)
{
    std::vector<Lemma6Row> rows;
    for (auto v : {Lemma6Variant::A, Lemma6Variant::B}) {
        for (std::int64_t K = v == Lemma6Variant::A ? 2 : 3; K <= K_max; ++K) {
            for (std::int64_t M = 0; M <= M_max; ++M) {
                Lemma6Row row;
                row.variant = v;
                row.K = K;
                row.M = M;
                row.spec = lemma6_quotient_spec(K, M, v);
                const auto p = expand(lemma6_expression(K, M, v));
                row.polynomial = p.has_value();
                if (p) {
                    row.nonnegative = nonnegativity(*p).nonnegative;
                    row.reciprocal = is_reciprocal(*p);
                    row.degree = p->degree();
                }
                const auto pattern = case_classify(row.spec.n, row.spec.k, row.spec.l);
                bool label_ok = false;
                if (pattern) {
                    row.classified = pattern->label;
                    const auto want = v == Lemma6Variant::A ? Case4Label::Lemma6A : Case4Label::Lemma6B;
                    label_ok = pattern->label == want && pattern->lemma6 == Lemma6Params{K, M};
                }
                row.ok = row.polynomial && row.nonnegative && row.reciprocal && label_ok;
                if (v == Lemma6Variant::A) {
                    row.closed_form_degree = lemma6_degree(K, M);
                    row.order_bound = lemma6_order_bound(K, M);
                    row.ok = row.ok && row.degree == *row.closed_form_degree && 2 * *row.order_bound > row.degree;
                }
                rows.push_back(row);
            }
        }
    }
    return rows;
}

}  // namespace qquot
