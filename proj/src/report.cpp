#include "rlab/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "rlab/errors.hpp"

namespace rlab {

using json = nlohmann::json;

namespace {

void dump_rec(const json& j, std::string& out) {
    switch (j.type()) {
        case json::value_t::object: {
            out += '{';
            bool first = true;
            for (auto it = j.cbegin(); it != j.cend(); ++it) { // std::map order: sorted keys
                if (!first) out += ',';
                first = false;
                out += json(it.key()).dump();
                out += ':';
                dump_rec(it.value(), out);
            }
            out += '}';
            break;
        }
        case json::value_t::array: {
            out += '[';
            for (size_t i = 0; i < j.size(); ++i) {
                if (i) out += ',';
                dump_rec(j[i], out);
            }
            out += ']';
            break;
        }
        case json::value_t::number_float: {
            double v = j.get<double>();
            if (!std::isfinite(v)) {
                out += v > 0 ? "\"inf\"" : (v < 0 ? "\"-inf\"" : "\"nan\"");
                break;
            }
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            out += buf;
            break;
        }
        default:
            out += j.dump();
    }
}

} // namespace

std::string canonical_dump(const json& j) {
    std::string out;
    dump_rec(j, out);
    return out;
}

json json_number(double v) {
    if (std::isfinite(v)) return json(v);
    if (std::isnan(v)) return json("nan");
    return json(v > 0 ? "inf" : "-inf");
}

double number_from_json(const json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const std::string& s = j.get_ref<const std::string&>();
        if (s == "inf") return std::numeric_limits<double>::infinity();
        if (s == "-inf") return -std::numeric_limits<double>::infinity();
        if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    }
    fail("SchemaViolation", "expected a number");
}

void stamp_report(json& j, const std::string& experiment_id, uint64_t master_seed) {
    j["schema"] = kReportSchema;
    j["schema_version"] = kReportVersion;
    j["artifact_version"] = kArtifactVersion;
    j["experiment"] = experiment_id;
    j["master_seed"] = master_seed;
}

json load_report(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        fail("SchemaViolation", std::string("invalid JSON: ") + e.what());
    }
    require(j.is_object(), "SchemaViolation", "report must be an object");
    require(j.value("schema", "") == kReportSchema, "SchemaViolation",
            "unknown report schema");
    require(j.value("schema_version", -1) == kReportVersion, "SchemaViolation",
            "unsupported schema version");
    return j;
}

std::string content_hash(const json& report) {
    json stripped = report;
    if (stripped.contains("wall_ms")) stripped["wall_ms"] = 0.0;
    std::string text = canonical_dump(stripped);
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace rlab
