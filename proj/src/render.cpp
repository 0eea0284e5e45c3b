#include "landaukit/render.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace landaukit {

namespace {

std::string point_to_text(const VerificationReport& rep, const CheckResult& r) {
    std::ostringstream os;
    for (size_t i = 0; i < r.point.size(); ++i) {
        if (i > 0) {
            os << ' ';
        }
        const std::string label =
            i < rep.point_labels.size() ? rep.point_labels[i] : "p" + std::to_string(i);
        os << label << '=' << r.point[i];
    }
    return os.str();
}

bool uses_only_exact_arithmetic(const VerificationReport& rep) {
    return !rep.results.empty() &&
           std::all_of(rep.results.begin(), rep.results.end(),
                       [](const CheckResult& r) { return r.precision_used == 0; });
}

std::string sanitize_csv_cell(std::string s) {
    for (char& c : s) {
        if (c == ',' || c == '\n' || c == '\r') {
            c = ';';
        }
    }
    return s;
}

}  // namespace

std::string render_text(const VerificationReport& rep) {
    std::ostringstream os;
    os << "check: " << rep.check_name << '\n';
    for (const auto& [name, value] : rep.ranges) {
        os << "range: " << name << " = " << value << '\n';
    }
    if (uses_only_exact_arithmetic(rep)) {
        os << "precision: exact rational arithmetic\n";
    } else {
        os << "precision: start " << rep.policy.start_bits << " bits / cap " << rep.policy.max_bits
           << " bits / growth x" << rep.policy.growth << '\n';
    }
    const unsigned long pass = rep.count(Status::Pass);
    const unsigned long fail = rep.count(Status::Fail);
    const unsigned long unknown = rep.count(Status::Unknown);
    os << "points: " << rep.results.size() << " (pass " << pass << " / fail " << fail
       << " / unknown " << unknown << ")\n";
    for (const std::string& note : rep.notes) {
        os << "note: " << note << '\n';
    }

    constexpr size_t kMaxDetailLines = 200;
    size_t shown = 0;
    for (const CheckResult& r : rep.results) {
        if (r.status == Status::Pass) {
            continue;
        }
        if (shown == kMaxDetailLines) {
            os << "  ... further non-passing points omitted\n";
            break;
        }
        os << "  " << point_to_text(rep, r) << ": " << status_name(r.status);
        if (r.precision_used > 0) {
            os << " at " << r.precision_used << " bits";
        }
        if (!r.witness.empty()) {
            os << "; " << r.witness;
        }
        os << '\n';
        ++shown;
    }

    os << "verdict: " << (rep.clean() ? "PASS" : "FAIL");
    if (rep.conjecture) {
        os << " (conjecture; informational only)";
    }
    os << '\n';
    return os.str();
}

std::string render_csv(const VerificationReport& rep) {
    std::ostringstream os;
    for (const std::string& label : rep.point_labels) {
        os << label << ',';
    }
    os << "status,precision_bits,witness\n";
    for (const CheckResult& r : rep.results) {
        for (const long v : r.point) {
            os << v << ',';
        }
        os << status_name(r.status) << ',' << r.precision_used << ','
           << sanitize_csv_cell(r.witness) << '\n';
    }
    return os.str();
}

std::string render_json(const VerificationReport& rep) {
    nlohmann::ordered_json doc;
    doc["check"] = rep.check_name;
    doc["conjecture"] = rep.conjecture;
    nlohmann::ordered_json ranges;
    for (const auto& [name, value] : rep.ranges) {
        ranges[name] = value;
    }
    doc["ranges"] = std::move(ranges);
    if (uses_only_exact_arithmetic(rep)) {
        doc["precision"] = nullptr;
    } else {
        doc["precision"] = {{"start_bits", rep.policy.start_bits},
                            {"max_bits", rep.policy.max_bits},
                            {"growth", rep.policy.growth}};
    }
    doc["counts"] = {{"pass", rep.count(Status::Pass)},
                     {"fail", rep.count(Status::Fail)},
                     {"unknown", rep.count(Status::Unknown)},
                     {"total", rep.results.size()}};
    doc["clean"] = rep.clean();
    doc["notes"] = rep.notes;
    nlohmann::ordered_json results = nlohmann::ordered_json::array();
    for (const CheckResult& r : rep.results) {
        nlohmann::ordered_json point;
        for (size_t i = 0; i < r.point.size(); ++i) {
            const std::string label =
                i < rep.point_labels.size() ? rep.point_labels[i] : "p" + std::to_string(i);
            point[label] = r.point[i];
        }
        results.push_back({{"point", std::move(point)},
                           {"status", status_name(r.status)},
                           {"precision_bits", r.precision_used},
                           {"witness", r.witness}});
    }
    doc["results"] = std::move(results);
    return doc.dump(2) + "\n";
}

}  // namespace landaukit
