#include <sstream>

#include <json.hpp>

#include "invconn/error.hpp"
#include "invconn/siiclass.hpp"

namespace invconn::siiclass {

using nlohmann::json;

Format parse_format(const std::string& s) {
    if (s == "md" || s == "markdown") return Format::Markdown;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    throw ConfigError("unknown format '" + s + "' (json, md, csv)");
}

namespace {

struct Tally {
    int matched = 0, skipped = 0, mismatched = 0, computed = 0;
};

Tally tally(const std::vector<SIIReport>& reports) {
    Tally t;
    for (auto& r : reports) {
        switch (r.status) {
            case Status::Match: ++t.matched; break;
            case Status::Skipped: ++t.skipped; break;
            case Status::Mismatch: ++t.mismatched; break;
            case Status::Computed: ++t.computed; break;
        }
    }
    return t;
}

std::string row_id(const SIIReport& r) {
    return r.candidate ? r.id + " [candidate " + std::to_string(r.candidate + 1) + "]" : r.id;
}

std::string expected_cell(const std::optional<Expected>& e) {
    if (!e) return "-";
    std::ostringstream os;
    os << "(" << e->a << "," << e->s << "," << e->N << "," << e->l << ") " << (e->type == RepType::Real ? "r" : "c");
    return os.str();
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string markdown(const std::vector<SIIReport>& reports, bool timing) {
    std::ostringstream os;
    os << "| space | m^C | dim m | a | s | N | l | eps | type | expected | status |";
    if (timing) os << " ms |";
    os << "\n|---|---|---|---|---|---|---|---|---|---|---|";
    if (timing) os << "---|";
    os << "\n";
    for (auto& r : reports) {
        os << "| " << row_id(r) << " | " << r.m_description << " | " << r.dim_m << " | ";
        if (r.status == Status::Skipped)
            os << "- | - | - | - | - | - | ";
        else
            os << r.a << " | " << r.s << " | " << r.N << " | " << r.l << " | " << r.epsilon << " | "
               << (r.rep_type == RepType::Real ? "r" : "c") << " | ";
        os << expected_cell(r.expected) << " | " << status_name(r.status);
        if (!r.notes.empty()) {
            os << " (";
            for (size_t i = 0; i < r.notes.size(); ++i) os << (i ? "; " : "") << r.notes[i];
            os << ")";
        }
        os << " |";
        if (timing) os << " " << static_cast<int64_t>(r.elapsed_ms + 0.5) << " |";
        os << "\n";
    }
    os << "\n" << summary_line(reports) << "\n";
    return os.str();
}

std::string csv(const std::vector<SIIReport>& reports, bool timing) {
    std::ostringstream os;
    os << "id,candidate,m,dim_m,a,s,N,l,epsilon,type,exp_a,exp_s,exp_N,exp_l,exp_type,status";
    if (timing) os << ",elapsed_ms";
    os << "\n";
    for (auto& r : reports) {
        os << csv_quote(r.id) << "," << r.candidate << "," << csv_quote(r.m_description) << "," << r.dim_m << ",";
        if (r.status == Status::Skipped)
            os << ",,,,,,";
        else
            os << r.a << "," << r.s << "," << r.N << "," << r.l << "," << r.epsilon << "," << rep_type_name(r.rep_type)
               << ",";
        if (r.expected)
            os << r.expected->a << "," << r.expected->s << "," << r.expected->N << "," << r.expected->l << ","
               << rep_type_name(r.expected->type) << ",";
        else
            os << ",,,,,";
        os << csv_quote(status_name(r.status));
        if (timing) os << "," << r.elapsed_ms;
        os << "\n";
    }
    return os.str();
}

json report_json(const SIIReport& r, bool timing) {
    json j;
    j["id"] = r.id;
    j["candidate"] = r.candidate;
    j["m"] = r.m_description;
    j["dims"] = {{"m", r.dim_m}};
    if (r.status == Status::Skipped)
        j["computed"] = nullptr;
    else
        j["computed"] = {{"a", r.a},          {"s", r.s}, {"N", r.N}, {"l", r.l}, {"epsilon", r.epsilon},
                         {"type", rep_type_name(r.rep_type)}};
    if (r.expected)
        j["expected"] = {{"a", r.expected->a},
                         {"s", r.expected->s},
                         {"N", r.expected->N},
                         {"l", r.expected->l},
                         {"type", rep_type_name(r.expected->type)}};
    else
        j["expected"] = nullptr;
    j["status"] = status_name(r.status);
    j["notes"] = r.notes;
    j["feasibility"] = {{"weyl_order", r.feasibility.weyl_order},
                        {"support", r.feasibility.support},
                        {"cost_estimate", r.feasibility.cost_estimate}};
    j["elapsed_ms"] = (timing && r.status != Status::Skipped) ? json(r.elapsed_ms) : json(nullptr);
    return j;
}

}  // namespace

std::string summary_line(const std::vector<SIIReport>& reports) {
    Tally t = tally(reports);
    std::string s = "matched " + std::to_string(t.matched) + " / skipped " + std::to_string(t.skipped) +
                    " / mismatched " + std::to_string(t.mismatched);
    if (t.computed) s += " / computed without expectation " + std::to_string(t.computed);
    return s;
}

std::string emit_tables(const std::vector<SIIReport>& reports, Format format, bool timing) {
    switch (format) {
        case Format::Markdown: return markdown(reports, timing);
        case Format::Csv: return csv(reports, timing);
        case Format::Json: {
            Tally t = tally(reports);
            json arr = json::array();
            for (auto& r : reports) arr.push_back(report_json(r, timing));
            json out = {{"reports", arr},
                        {"summary",
                         {{"matched", t.matched},
                          {"skipped", t.skipped},
                          {"mismatched", t.mismatched},
                          {"computed", t.computed},
                          {"line", summary_line(reports)}}}};
            return out.dump(2) + "\n";
        }
    }
    return {};
}

}  // namespace invconn::siiclass
