#include "qquot/report.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

namespace qquot {

using nlohmann::json;

json to_json(const IntPolynomial& p)
{
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
    return arr;
}

IntPolynomial polynomial_from_json(const json& j)
{
    std::vector<Integer> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j) coeffs.emplace_back(c.get<std::string>(), 10);
    return IntPolynomial(std::move(coeffs));
}

json to_json(const AnySpec& spec)
{
    struct Visitor {
        json operator()(const QuotientSpec& s) const
        {
            return {{"kind", "quotient"}, {"n", s.n}, {"k", s.k}, {"l", s.l}};
        }
        json operator()(const FakeGaussianSpec& s) const
        {
            return {{"kind", "fake-gaussian"}, {"m", s.m}, {"a", s.a}, {"symmetric", s.symmetric()}};
        }
        json operator()(const LabeledSpec& s) const
        {
            return {{"kind", "labeled"}, {"name", s.name}, {"params", s.params}};
        }
    };
    return std::visit(Visitor{}, spec);
}

AnySpec spec_from_json(const json& j)
{
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "quotient") {
        return QuotientSpec{j.at("n").get<std::int64_t>(), j.at("k").get<std::int64_t>(), j.at("l").get<std::int64_t>()};
    }
    if (kind == "fake-gaussian") {
        return FakeGaussianSpec{j.at("m").get<std::int64_t>(), j.at("a").get<std::vector<std::int64_t>>()};
    }
    if (kind == "labeled") {
        return LabeledSpec{j.at("name").get<std::string>(), j.at("params").get<std::vector<std::int64_t>>()};
    }
    throw std::invalid_argument("unknown spec kind: " + kind);
}

namespace {

json locus_to_json(const CoefficientLocus& l)
{
    return {{"exponent", l.exponent}, {"coefficient", l.coefficient.get_str()}};
}

CoefficientLocus locus_from_json(const json& j)
{
    return {j.at("exponent").get<std::int64_t>(), Integer(j.at("coefficient").get<std::string>(), 10)};
}

}  // namespace

json to_json(const PropertyRecord& rec)
{
    json j = {{"nonnegative", rec.nonnegative},         {"reciprocal", rec.reciprocal},
              {"unimodal", rec.unimodal},               {"parity_unimodal", rec.parity_unimodal},
              {"order", rec.order},                     {"degree", rec.degree}};
    j["first_negative"] = rec.first_negative ? locus_to_json(*rec.first_negative) : json(nullptr);
    return j;
}

PropertyRecord properties_from_json(const json& j)
{
    PropertyRecord rec;
    rec.nonnegative = j.at("nonnegative").get<bool>();
    rec.reciprocal = j.at("reciprocal").get<bool>();
    rec.unimodal = j.at("unimodal").get<bool>();
    rec.parity_unimodal = j.at("parity_unimodal").get<bool>();
    rec.order = j.at("order").get<std::int64_t>();
    rec.degree = j.at("degree").get<std::int64_t>();
    if (!j.at("first_negative").is_null()) rec.first_negative = locus_from_json(j.at("first_negative"));
    return rec;
}

json to_json(const CheckResult& r, bool include_timing)
{
    json j;
    j["spec"] = to_json(r.spec);
    j["normalized"] = to_json(r.normalized);
    j["expression"] = r.expression;
    j["polynomial"] = r.is_polynomial;
    j["verdict"] = std::string(to_string(r.verdict));
    j["nonnegative"] = r.nonnegative;
    j["first_negative"] = r.first_negative ? locus_to_json(*r.first_negative) : json(nullptr);
    j["degree"] = r.degree ? json(*r.degree) : json(nullptr);
    j["structure_ok"] = r.structure_ok;
    if (r.expansion) j["coefficients"] = to_json(*r.expansion);
    if (r.properties) j["properties"] = to_json(*r.properties);
    if (!r.note.empty()) j["note"] = r.note;
    if (include_timing) j["elapsed_ns"] = r.elapsed.count();
    return j;
}

CheckResult check_result_from_json(const json& j)
{
    CheckResult r;
    r.spec = spec_from_json(j.at("spec"));
    r.normalized = spec_from_json(j.at("normalized"));
    r.expression = j.at("expression").get<std::string>();
    r.is_polynomial = j.at("polynomial").get<bool>();
    auto verdict = parse_verdict(j.at("verdict").get<std::string>());
    if (!verdict) throw std::invalid_argument("unknown verdict");
    r.verdict = *verdict;
    r.nonnegative = j.at("nonnegative").get<bool>();
    if (!j.at("first_negative").is_null()) r.first_negative = locus_from_json(j.at("first_negative"));
    if (!j.at("degree").is_null()) r.degree = j.at("degree").get<std::int64_t>();
    r.structure_ok = j.at("structure_ok").get<bool>();
    if (j.contains("coefficients")) r.expansion = polynomial_from_json(j.at("coefficients"));
    if (j.contains("properties")) r.properties = properties_from_json(j.at("properties"));
    if (j.contains("note")) r.note = j.at("note").get<std::string>();
    if (j.contains("elapsed_ns")) r.elapsed = std::chrono::nanoseconds(j.at("elapsed_ns").get<std::int64_t>());
    return r;
}

json to_json(const SweepReport& r, bool include_timing)
{
    json j;
    j["sweep_id"] = r.sweep_id;
    j["parameters"] = r.parameters;
    j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
    j["counts"] = {{"examined", r.counts.examined},
                   {"polynomial", r.counts.polynomial},
                   {"violations", r.counts.violations},
                   {"structure_failures", r.counts.structure_failures}};
    json v = json::array();
    for (const auto& c : r.violations) v.push_back(to_json(c, include_timing));
    j["violations"] = std::move(v);
    j["total_units"] = r.total_units;
    j["cursor"] = r.cursor;
    j["complete"] = r.complete;
    if (include_timing) j["wall_time_ns"] = r.wall_time.count();
    return j;
}

SweepReport sweep_report_from_json(const json& j)
{
    SweepReport r;
    r.sweep_id = j.at("sweep_id").get<std::string>();
    r.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
    if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
    const auto& c = j.at("counts");
    r.counts.examined = c.at("examined").get<std::uint64_t>();
    r.counts.polynomial = c.at("polynomial").get<std::uint64_t>();
    r.counts.violations = c.at("violations").get<std::uint64_t>();
    r.counts.structure_failures = c.at("structure_failures").get<std::uint64_t>();
    for (const auto& v : j.at("violations")) r.violations.push_back(check_result_from_json(v));
    r.total_units = j.at("total_units").get<std::uint64_t>();
    r.cursor = j.at("cursor").get<std::uint64_t>();
    r.complete = j.at("complete").get<bool>();
    if (j.contains("wall_time_ns")) r.wall_time = std::chrono::nanoseconds(j.at("wall_time_ns").get<std::int64_t>());
    return r;
}

std::string spec_to_string(const AnySpec& spec)
{
    std::ostringstream os;
    if (const auto* q = std::get_if<QuotientSpec>(&spec)) {
        os << "(n,k,l)=(" << q->n << ',' << q->k << ',' << q->l << ')';
    } else if (const auto* f = std::get_if<FakeGaussianSpec>(&spec)) {
        os << "m=" << f->m << " a=(";
        for (std::size_t i = 0; i < f->a.size(); ++i) os << (i ? "," : "") << f->a[i];
        os << ')';
    } else {
        const auto& l = std::get<LabeledSpec>(spec);
        os << l.name << '(';
        for (std::size_t i = 0; i < l.params.size(); ++i) os << (i ? "," : "") << l.params[i];
        os << ')';
    }
    return os.str();
}

json make_document(std::string_view kind, const std::vector<std::string>& command, json body)
{
    return {{"schema", "qquot.report"},
            {"schema_version", kReportSchemaVersion},
            {"tool_version", std::string(kToolVersion)},
            {"command", command},
            {"kind", std::string(kind)},
            {"body", std::move(body)}};
}

void write_checkpoint(const std::filesystem::path& path, const SweepReport& report)
{
    json j = {{"format", "qquot.checkpoint"}, {"version", kCheckpointVersion}, {"report", to_json(report, true)}};
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw CheckpointError("cannot open checkpoint for writing: " + tmp.string());
        out << j.dump(1) << '\n';
        out.flush();
        if (!out) throw CheckpointError("failed writing checkpoint: " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw CheckpointError("cannot move checkpoint into place: " + path.string() + ": " + ec.message());
}

SweepReport read_checkpoint(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw CheckpointError("cannot open checkpoint: " + path.string());
    try {
        json j = json::parse(in);
        if (j.at("format").get<std::string>() != "qquot.checkpoint") {
            throw CheckpointError("not a checkpoint file: " + path.string());
        }
        if (j.at("version").get<int>() != kCheckpointVersion) {
            throw CheckpointError("unsupported checkpoint version in " + path.string());
        }
        return sweep_report_from_json(j.at("report"));
    } catch (const json::exception& e) {
        throw CheckpointError("malformed checkpoint " + path.string() + ": " + e.what());
    }
}

}  // namespace qquot
