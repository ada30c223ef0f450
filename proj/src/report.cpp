#include "taut/report.hpp"

#include <sstream>

#include <json.hpp>

namespace taut {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json to_object(const VerificationReport& report, bool with_timing) {
    ordered_json params = ordered_json::object();
    for (const auto& [name, value] : report.params) {
        std::visit([&](const auto& v) { params[name] = v; }, value);
    }
    ordered_json tests = ordered_json::array();
    for (const auto& t : report.tests) tests.push_back({{"monomial", t.monomial}, {"value", t.value.str()}});

    ordered_json obj;
    obj["relation"] = report.relation;
    obj["params"] = std::move(params);
    obj["tests"] = std::move(tests);
    obj["pass"] = report.pass;
    obj["trivial"] = report.trivial;
    obj["millis"] = with_timing ? report.millis : 0L;
    obj["evidence"] = kEvidenceLevel;
    if (report.expected) obj["expected"] = report.expected->str();
    if (!report.notes.empty()) obj["notes"] = report.notes;
    return obj;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string render_params(const VerificationReport& report) {
    std::string out;
    for (const auto& [name, value] : report.params) {
        if (!out.empty()) out += ' ';
        out += name + '=';
        std::visit(
            [&](const auto& v) {
                if constexpr (std::is_same_v<std::decay_t<decltype(v)>, long>) {
                    out += std::to_string(v);
                } else {
                    out += v;
                }
            },
            value);
    }
    return out;
}

std::string to_json(const VerificationReport& report, bool with_timing) {
    return to_object(report, with_timing).dump();
}

std::string to_json(const std::vector<VerificationReport>& reports, bool with_timing) {
    if (reports.empty()) return "[]\n";
    std::string out = "[\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        out += to_json(reports[i], with_timing);
        out += (i + 1 < reports.size()) ? ",\n" : "\n";
    }
    return out + "]\n";
}

std::string to_csv(const std::vector<VerificationReport>& reports, bool with_timing) {
    std::ostringstream out;
    out << "relation,params,monomial,value,pass,trivial,millis\n";
    for (const auto& r : reports) {
        const std::string tail = std::string(r.pass ? "true" : "false") + ',' + (r.trivial ? "true" : "false") + ',' +
                                 std::to_string(with_timing ? r.millis : 0L);
        const std::string head = csv_field(r.relation) + ',' + csv_field(render_params(r)) + ',';
        if (r.tests.empty()) {
            out << head << ",," << tail << '\n';
        }
        for (const auto& t : r.tests) out << head << csv_field(t.monomial) << ',' << t.value.str() << ',' << tail << '\n';
    }
    return out.str();
}

std::string to_text(const VerificationReport& report) {
    std::string out = report.pass ? "PASS " : "FAIL ";
    out += report.relation;
    const auto params = render_params(report);
    if (!params.empty()) out += ' ' + params;
    out += " tests=" + std::to_string(report.tests.size());
    if (report.trivial) out += " (trivial: degree exceeds dimension)";
    if (report.expected && !report.tests.empty()) {
        out += " value=" + report.tests.front().value.str() + " expected=" + report.expected->str();
    }
    return out;
}

}  // namespace taut
