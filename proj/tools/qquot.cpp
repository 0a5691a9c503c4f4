// qquot: command-line front end for checks, sweeps and reproductions.
//
// Exit status:
//   0  success (no violations, every reproduction matched)
//   1  a VIOLATION, a structure failure or a reproduction mismatch
//   2  usage error
//   3  checkpoint or other I/O failure
//   4  sweep stopped early by --stop-after (resumable)

#include "qquot/harness.hpp"
#include "qquot/report.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace qquot;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitIncomplete = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::int64_t parse_int(std::string_view s, std::string_view what)
{
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw UsageError("invalid " + std::string(what) + ": '" + std::string(s) + "'");
    }
    return v;
}

std::vector<std::int64_t> parse_sequence(std::string_view s)
{
    std::vector<std::int64_t> out;
    while (true) {
        const auto comma = s.find(',');
        out.push_back(parse_int(s.substr(0, comma), "sequence entry"));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

std::string coefficient_list(const IntPolynomial& p)
{
    std::string out = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ',';
        out += p[i].get_str();
    }
    return out + "]";
}

std::string seconds(std::chrono::nanoseconds ns)
{
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << std::chrono::duration<double>(ns).count() << " s";
    return os.str();
}

std::string yes_no(bool b)
{
    return b ? "yes" : "no";
}

std::filesystem::path resolve_checkpoint(const std::string& given)
{
    std::filesystem::path p(given);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("QQUOT_CHECKPOINT_DIR"); dir != nullptr && *dir != '\0') {
            p = std::filesystem::path(dir) / p;
        }
    }
    return p;
}

// Smallest d whose cyclotomic exponent is negative, with the exponent.
std::optional<std::pair<std::int64_t, std::int64_t>> first_negative_cyclotomic(const FactoredQExpression& e)
{
    const auto ex = cyclotomic_exponents(e);
    for (std::size_t d = 2; d < ex.size(); ++d) {
        if (ex[d] < 0) return std::pair{static_cast<std::int64_t>(d), ex[d]};
    }
    return std::nullopt;
}

struct Output {
    std::string format = "text";
    bool timing = true;
    std::vector<std::string> command;
};

// --- check ------------------------------------------------------------------

struct CheckArgs {
    std::vector<std::string> triple;
    std::vector<std::string> fake_gaussian;
    std::string batch;
    bool expand = false;
    bool properties = false;
};

AnySpec parse_spec_line(const std::string& line, std::size_t lineno)
{
    std::istringstream in(line);
    std::vector<std::string> words;
    for (std::string w; in >> w;) words.push_back(w);
    const std::string where = "line " + std::to_string(lineno) + ": ";
    try {
        if (!words.empty() && (words[0] == "fake-gaussian" || words[0] == "fg")) {
            if (words.size() != 3) throw UsageError("expected 'fake-gaussian M SEQ'");
            return FakeGaussianSpec{parse_int(words[1], "m"), parse_sequence(words[2])};
        }
        if (words.size() != 3) throw UsageError("expected 'N K L' or 'fake-gaussian M SEQ'");
        return QuotientSpec{parse_int(words[0], "n"), parse_int(words[1], "k"), parse_int(words[2], "l")};
    } catch (const UsageError& e) {
        throw UsageError(where + e.what());
    }
}

CheckResult run_check(const AnySpec& spec, const CheckOptions& opts)
{
    if (const auto* q = std::get_if<QuotientSpec>(&spec)) {
        if (q->n < 0 || q->k < 0 || q->l < 0 || q->k > q->n || q->l > q->n) {
            throw UsageError("quotient needs 0 <= k, l <= n; got " + spec_to_string(spec));
        }
        return verify_quotient(*q, opts);
    }
    const auto& f = std::get<FakeGaussianSpec>(spec);
    if (f.m < 1) throw UsageError("fake Gaussian needs m >= 1");
    for (auto a : f.a) {
        if (a < 0) throw UsageError("fake Gaussian exponents must be nonnegative");
    }
    return verify_fake_gaussian(f, opts);
}

FactoredQExpression expression_of(const AnySpec& spec)
{
    if (const auto* q = std::get_if<QuotientSpec>(&spec)) return from_quotient_spec(normalize(*q));
    return from_fake_gaussian(std::get<FakeGaussianSpec>(spec));
}

void print_check_text(const CheckResult& r, const CheckArgs& args, const Output& out)
{
    std::string head;
    switch (r.verdict) {
    case Verdict::NotPolynomial: {
        head = "not a polynomial";
        if (auto neg = first_negative_cyclotomic(expression_of(r.spec))) {
            head += "; C_" + std::to_string(neg->first) + " has exponent " + std::to_string(neg->second);
        }
        break;
    }
    case Verdict::PolynomialNonnegative:
        if (r.expansion) {
            head = "polynomial; coefficients " + coefficient_list(*r.expansion);
        } else if (r.degree == 0) {
            head = "polynomial; 1";
        } else {
            head = "polynomial; degree " + std::to_string(*r.degree) + ", coefficients nonnegative";
        }
        break;
    case Verdict::Violation:
        head = "VIOLATION; coefficient " + r.first_negative->coefficient.get_str() + " at q^" +
               std::to_string(r.first_negative->exponent);
        if (r.expansion) head += "; coefficients " + coefficient_list(*r.expansion);
        break;
    }
    std::cout << head << '\n';
    std::cout << "  spec: " << spec_to_string(r.spec);
    if (r.normalized != r.spec) std::cout << "  normalized: " << spec_to_string(r.normalized);
    std::cout << '\n' << "  expression: " << r.expression << '\n';
    if (r.degree) std::cout << "  degree: " << *r.degree << '\n';
    if (r.is_polynomial && !r.structure_ok) std::cout << "  structure: not reciprocal or constant term != 1\n";
    if (args.properties && r.properties) {
        const auto& p = *r.properties;
        std::cout << "  reciprocal: " << yes_no(p.reciprocal) << ", unimodal: " << yes_no(p.unimodal)
                  << ", parity-unimodal: " << yes_no(p.parity_unimodal) << ", order: " << p.order << '\n';
    }
    if (out.timing) std::cout << "  elapsed: " << seconds(r.elapsed) << '\n';
}

int cmd_check(const CheckArgs& args, const Output& out)
{
    const int sources = !args.triple.empty() + !args.fake_gaussian.empty() + !args.batch.empty();
    if (sources != 1) throw UsageError("check needs exactly one of: N K L, --fake-gaussian M SEQ, --batch FILE");

    std::vector<AnySpec> specs;
    if (!args.triple.empty()) {
        if (args.triple.size() != 3) throw UsageError("check expects three integers N K L");
        specs.push_back(QuotientSpec{parse_int(args.triple[0], "n"), parse_int(args.triple[1], "k"),
                                     parse_int(args.triple[2], "l")});
    } else if (!args.fake_gaussian.empty()) {
        specs.push_back(FakeGaussianSpec{parse_int(args.fake_gaussian[0], "m"), parse_sequence(args.fake_gaussian[1])});
    } else {
        std::ifstream in(args.batch);
        if (!in) throw std::ios_base::failure("cannot open batch file " + args.batch);
        std::size_t lineno = 0;
        for (std::string line; std::getline(in, line);) {
            ++lineno;
            if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            specs.push_back(parse_spec_line(line, lineno));
        }
    }

    const CheckOptions opts{.keep_expansion = args.expand, .properties = args.properties};
    std::vector<CheckResult> results;
    for (const auto& s : specs) results.push_back(run_check(s, opts));

    if (out.format == "text") {
        for (const auto& r : results) print_check_text(r, args, out);
    } else if (out.format == "json") {
        json body;
        if (args.batch.empty()) {
            body = to_json(results.front(), out.timing);
        } else {
            body = json::array();
            for (const auto& r : results) body.push_back(to_json(r, out.timing));
        }
        std::cout << make_document(args.batch.empty() ? "check" : "check-batch", out.command, body).dump(2) << '\n';
    } else {
        for (const auto& r : results) std::cout << make_document("check", out.command, to_json(r, out.timing)).dump() << '\n';
    }
    const bool bad = std::any_of(results.begin(), results.end(),
                                 [](const CheckResult& r) { return r.verdict == Verdict::Violation || !r.structure_ok; });
    return bad ? kExitViolation : kExitOk;
}

// --- sweep ------------------------------------------------------------------

struct SweepArgs {
    std::int64_t n_max = 150;
    std::string shape = "aba";
    std::uint64_t seed = 0;
    std::uint64_t samples = 10000;
    std::int64_t value_max = 10;
    std::int64_t m_span = 200;
    bool paper_scale = false;
    unsigned jobs = 0;
    std::string checkpoint;
    bool resume = false;
    std::uint64_t chunk = 1024;
    std::optional<std::uint64_t> stop_after;
};

SweepOptions sweep_options(const SweepArgs& a)
{
    SweepOptions o;
    o.workers = a.jobs;
    if (!a.checkpoint.empty()) o.checkpoint = resolve_checkpoint(a.checkpoint);
    o.resume = a.resume;
    o.chunk_size = a.chunk;
    o.stop_after = a.stop_after;
    if (a.resume && !o.checkpoint) throw UsageError("--resume needs --checkpoint");
    return o;
}

void print_sweep_text(const SweepReport& r, const Output& out, const SweepOptions& opts)
{
    std::cout << "sweep " << r.sweep_id;
    for (const auto& [k, v] : r.parameters) std::cout << ' ' << k << '=' << v;
    if (r.seed) std::cout << " seed=" << *r.seed;
    std::cout << '\n';
    std::cout << "  examined " << r.counts.examined << " of " << r.total_units << ", polynomial " << r.counts.polynomial
              << ", violations " << r.counts.violations << ", structure failures " << r.counts.structure_failures << '\n';
    for (const auto& v : r.violations) {
        std::cout << "  " << to_string(v.verdict) << ' ' << spec_to_string(v.spec) << ' ' << v.expression;
        if (v.first_negative) {
            std::cout << "; coefficient " << v.first_negative->coefficient.get_str() << " at q^"
                      << v.first_negative->exponent;
        }
        if (!v.note.empty()) std::cout << "; " << v.note;
        std::cout << '\n';
    }
    if (r.complete) {
        std::cout << "  complete\n";
    } else {
        std::cout << "  stopped at unit " << r.cursor << " of " << r.total_units;
        if (opts.checkpoint) std::cout << "; resume with --resume --checkpoint " << opts.checkpoint->string();
        std::cout << '\n';
    }
    if (out.timing) std::cout << "  wall time " << seconds(r.wall_time) << '\n';
}

void emit_sweep(const SweepReport& r, const Output& out, const SweepOptions& opts)
{
    if (out.format == "text") {
        print_sweep_text(r, out, opts);
    } else if (out.format == "json") {
        std::cout << make_document("sweep", out.command, to_json(r, out.timing)).dump(2) << '\n';
    } else {
        // one record per violation, then the summary without the list
        for (const auto& v : r.violations) {
            std::cout << make_document("violation", out.command, to_json(v, out.timing)).dump() << '\n';
        }
        json summary = to_json(r, out.timing);
        summary.erase("violations");
        std::cout << make_document("sweep", out.command, summary).dump() << '\n';
    }
}

int sweep_status(const SweepReport& r)
{
    if (r.counts.violations > 0 || r.counts.structure_failures > 0) return kExitViolation;
    return r.complete ? kExitOk : kExitIncomplete;
}

int cmd_sweep_conjecture1(SweepArgs a, const Output& out)
{
    if (a.paper_scale) a.n_max = 400;
    if (a.n_max < 2) throw UsageError("--n-max must be at least 2");
    const auto opts = sweep_options(a);
    const auto r = sweep_conjecture1(a.n_max, opts);
    emit_sweep(r, out, opts);
    return sweep_status(r);
}

int cmd_sweep_fake_gaussian(SweepArgs a, const Output& out)
{
    const auto shape = parse_template(a.shape);
    if (!shape) throw UsageError("unknown template '" + a.shape + "' (a, aa, aba, abcba)");
    if (a.paper_scale) a.m_span = 1000;
    if (a.samples == 0 || a.value_max < 0 || a.m_span < 0) throw UsageError("sweep ranges must be nonempty");
    const FakeGaussianSweepConfig cfg{.shape = *shape, .seed = a.seed, .samples = a.samples, .value_max = a.value_max,
                                      .m_span = a.m_span};
    const auto opts = sweep_options(a);
    const auto r = sweep_fake_gaussian(cfg, opts);
    emit_sweep(r, out, opts);
    return sweep_status(r);
}

// --- reproduce --------------------------------------------------------------

struct ReproduceArgs {
    std::string name;
    std::int64_t n_max = 0;  // 0: the reproduction's default
    std::int64_t m_max = 50;
    std::int64_t k_max = 12;
    std::int64_t lemma6_m_max = 6;
    unsigned jobs = 0;
};

void emit_document(const Output& out, std::string_view kind, const json& body)
{
    std::cout << make_document(kind, out.command, body).dump(out.format == "json" ? 2 : -1) << '\n';
}

int reproduce_remark25_cmd(const Output& out)
{
    const auto rows = reproduce_remark25();
    bool all = true;
    json body = json::array();
    for (const auto& row : rows) {
        all = all && row.matches;
        if (out.format == "text") {
            std::cout << row.label << "  =  " << row.expression.to_string() << '\n';
            std::cout << "  printed:  " << row.printed.to_string() << '\n';
            std::cout << "  computed: " << (row.expansion ? row.expansion->to_string() : "not a polynomial") << '\n';
            std::cout << "  " << (row.matches ? "match" : "MISMATCH") << '\n';
        } else {
            body.push_back({{"label", row.label},
                            {"expression", row.expression.to_string()},
                            {"printed", to_json(row.printed)},
                            {"computed", row.expansion ? to_json(*row.expansion) : json(nullptr)},
                            {"matches", row.matches}});
        }
    }
    if (out.format != "text") emit_document(out, "reproduce-remark25", body);
    return all ? kExitOk : kExitViolation;
}

int reproduce_stanton_cmd(const ReproduceArgs& a, const Output& out)
{
    if (a.m_max < 1) throw UsageError("--m-max must be at least 1");
    const auto rep = reproduce_stanton(a.m_max);
    if (out.format == "text") {
        const auto& b = rep.base;
        std::cout << "m=1: " << b.expression << '\n';
        std::cout << "  " << to_string(b.verdict);
        if (b.first_negative) {
            std::cout << "; first negative coefficient " << b.first_negative->coefficient.get_str() << " at q^"
                      << b.first_negative->exponent;
        }
        std::cout << '\n';
        if (b.expansion) std::cout << "  coefficients " << coefficient_list(*b.expansion) << '\n';
        std::cout << "     m  polynomial  nonnegative  degree\n";
        for (const auto& r : rep.shifted) {
            std::cout << std::setw(6) << std::get<FakeGaussianSpec>(r.spec).m << "  " << std::setw(10)
                      << yes_no(r.is_polynomial) << "  " << std::setw(11) << yes_no(r.nonnegative) << "  "
                      << std::setw(6) << r.degree.value_or(-1) << '\n';
        }
        std::cout << (rep.matches ? "match" : "MISMATCH") << '\n';
    } else {
        json shifted = json::array();
        for (const auto& r : rep.shifted) shifted.push_back(to_json(r, out.timing));
        emit_document(out, "reproduce-stanton",
                      {{"base", to_json(rep.base, out.timing)}, {"shifted", shifted}, {"matches", rep.matches}});
    }
    return rep.matches ? kExitOk : kExitViolation;
}

int reproduce_lemma6_cmd(const ReproduceArgs& a, const Output& out)
{
    if (a.k_max < 2 || a.lemma6_m_max < 0) throw UsageError("--k-max must be >= 2 and --m-max >= 0");
    const auto rows = reproduce_lemma6(a.k_max, a.lemma6_m_max);
    const bool all = std::all_of(rows.begin(), rows.end(), [](const Lemma6Row& r) { return r.ok; });
    if (out.format == "text") {
        std::cout << "var   K   M        n    k    l   degree  closed-form  order-bound  label       ok\n";
        for (const auto& r : rows) {
            auto opt = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
            std::cout << std::left << std::setw(4) << to_string(r.variant) << std::right << std::setw(3) << r.K
                      << std::setw(4) << r.M << std::setw(9) << r.spec.n << std::setw(5) << r.spec.k << std::setw(5)
                      << r.spec.l << std::setw(9) << r.degree << std::setw(13) << opt(r.closed_form_degree)
                      << std::setw(13) << opt(r.order_bound) << "  " << std::left << std::setw(10)
                      << (r.classified ? std::string(to_string(*r.classified)) : std::string("-")) << "  "
                      << (r.ok ? "yes" : "NO") << std::right << '\n';
        }
        std::cout << (all ? "match" : "MISMATCH") << '\n';
    } else {
        json body = json::array();
        for (const auto& r : rows) {
            body.push_back({{"variant", std::string(to_string(r.variant))},
                            {"K", r.K},
                            {"M", r.M},
                            {"spec", to_json(AnySpec{r.spec})},
                            {"polynomial", r.polynomial},
                            {"nonnegative", r.nonnegative},
                            {"reciprocal", r.reciprocal},
                            {"degree", r.degree},
                            {"closed_form_degree", r.closed_form_degree ? json(*r.closed_form_degree) : json(nullptr)},
                            {"order_bound", r.order_bound ? json(*r.order_bound) : json(nullptr)},
                            {"label", r.classified ? json(std::string(to_string(*r.classified))) : json(nullptr)},
                            {"ok", r.ok}});
        }
        emit_document(out, "reproduce-lemma6", body);
    }
    return all ? kExitOk : kExitViolation;
}

int cmd_reproduce(const ReproduceArgs& a, const Output& out)
{
    if (a.name == "remark25") return reproduce_remark25_cmd(out);
    if (a.name == "stanton") return reproduce_stanton_cmd(a, out);
    if (a.name == "lemma6") return reproduce_lemma6_cmd(a, out);

    SweepOptions opts;
    opts.workers = a.jobs;
    SweepReport r;
    if (a.name == "corollary10") {
        const auto n = a.n_max ? a.n_max : 30;
        if (n < 1) throw UsageError("--n-max must be at least 1");
        r = reproduce_corollary10(n, opts);
    } else {
        const auto n = a.n_max ? a.n_max : 100;
        if (n < 4) throw UsageError("--n-max must be at least 4");
        r = crosscheck_theorems(n, opts);
    }
    emit_sweep(r, out, opts);
    return sweep_status(r);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact checks of q-integer quotients for polynomiality and nonnegative coefficients.", "qquot"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    Output out;
    for (int i = 1; i < argc; ++i) out.command.emplace_back(argv[i]);
    bool no_timing = false;
    auto add_common = [&](CLI::App* sub, std::vector<std::string> formats) {
        sub->add_option("--format", out.format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
        sub->add_flag("--no-timing", no_timing, "Leave out timings so output is byte-reproducible");
    };

    CheckArgs check;
    auto* c = app.add_subcommand("check", "Check one quotient (N K L), a fake Gaussian product, or a batch file");
    c->add_option("nkl", check.triple, "N K L for [l]![n-l]! / ([k]![n-k]!)");
    c->add_option("--fake-gaussian", check.fake_gaussian, "M SEQ, e.g. 1 1,3,1")->expected(2);
    c->add_option("--batch", check.batch, "File with one spec per line: 'N K L' or 'fake-gaussian M SEQ'");
    c->add_flag("--expand", check.expand, "Print all coefficients");
    c->add_flag("--properties", check.properties, "Report reciprocity, unimodality, parity-unimodality, order");
    add_common(c, {"text", "json", "jsonl"});

    SweepArgs sweep;
    auto* s = app.add_subcommand("sweep", "Run a resumable parameter sweep");
    s->require_subcommand(1);
    auto sweep_common = [&](CLI::App* sub) {
        sub->add_option("--jobs,-j", sweep.jobs, "Worker threads (0: all cores)")->capture_default_str();
        sub->add_option("--checkpoint", sweep.checkpoint,
                        "Checkpoint file; relative paths resolve against $QQUOT_CHECKPOINT_DIR when set");
        sub->add_flag("--resume", sweep.resume, "Continue from the checkpoint");
        sub->add_option("--chunk-size", sweep.chunk, "Units per checkpointed chunk")->capture_default_str();
        sub->add_option("--stop-after", sweep.stop_after, "Stop after this many units (leaves a checkpoint)");
        sub->add_flag("--paper-scale", sweep.paper_scale, "Use the full reference ranges (long run)");
        add_common(sub, {"text", "json", "jsonl"});
    };
    auto* s1 = s->add_subcommand("conjecture1", "All 1 <= l < k <= n/2 for n <= N");
    s1->add_option("--n-max", sweep.n_max, "Largest n (--paper-scale: 400)")->capture_default_str();
    sweep_common(s1);
    auto* s2 = s->add_subcommand("fake-gaussian", "Random (0^s, template, 0^s) sequences");
    s2->add_option("--template", sweep.shape, "a, aa, aba or abcba")->capture_default_str();
    s2->add_option("--seed", sweep.seed, "RNG seed")->capture_default_str();
    s2->add_option("--samples", sweep.samples, "Number of samples")->capture_default_str();
    s2->add_option("--value-max", sweep.value_max, "a, b, c, s drawn from [0, value-max]")->capture_default_str();
    s2->add_option("--m-span", sweep.m_span, "m drawn from [max(1,s), s + m-span] (--paper-scale: 1000)")
        ->capture_default_str();
    sweep_common(s2);

    ReproduceArgs repro;
    auto* r = app.add_subcommand("reproduce", "Recompute a reference example or family");
    r->add_option("name", repro.name, "remark25, stanton, corollary10, lemma6 or crosscheck")
        ->required()
        ->check(CLI::IsMember({"remark25", "stanton", "corollary10", "lemma6", "crosscheck"}));
    r->add_option("--n-max", repro.n_max, "corollary10 (default 30) and crosscheck (default 100)");
    r->add_option("--m-max", repro.m_max, "stanton: largest shift m (default 50); lemma6: largest M (default 6)");
    r->add_option("--k-max", repro.k_max, "lemma6: largest K")->capture_default_str();
    r->add_option("--jobs,-j", repro.jobs, "Worker threads (0: all cores)");
    add_common(r, {"text", "json"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    out.timing = !no_timing;

    try {
        if (c->parsed()) return cmd_check(check, out);
        if (s1->parsed()) return cmd_sweep_conjecture1(sweep, out);
        if (s2->parsed()) return cmd_sweep_fake_gaussian(sweep, out);
        if (r->parsed()) {
            if (r->count("--m-max") && repro.name == "lemma6") {
                repro.lemma6_m_max = repro.m_max;
            }
            return cmd_reproduce(repro, out);
        }
    } catch (const UsageError& e) {
        std::cerr << "qquot: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "qquot: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CheckpointError& e) {
        std::cerr << "qquot: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "qquot: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitUsage;
}
