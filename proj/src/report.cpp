#include "lpsign/report.hpp"

#include <sstream>

#include "lpsign/errors.hpp"

namespace lpsign {

namespace {

using nlohmann::ordered_json;

std::string emit_json(const Report& r) {
    ordered_json doc;
    doc["command"] = r.command;
    doc["input_digest"] = r.input_digest;
    doc["version"] = r.version;
    doc["backend"] = r.backend;
    doc["precision_bits"] = r.precision_bits;
    doc["sections"] = r.sections;
    if (!r.table.empty()) {
        auto rows = ordered_json::array();
        for (const auto& row : r.table) {
            ordered_json o;
            o["n"] = row.n;
            o["value"] = row.value;
            o["error"] = row.error;
            o["sign"] = std::string(1, row.sign);
            rows.push_back(o);
        }
        doc["table"] = rows;
    }
    return doc.dump(2) + "\n";
}

void flatten(const ordered_json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else if (j.is_array()) {
        std::size_t i = 0;
        for (const auto& v : j) flatten(v, prefix + "[" + std::to_string(i++) + "]", out);
    } else {
        out.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
    }
}

std::string emit_csv(const Report& r) {
    std::ostringstream os;
    if (!r.table.empty()) {
        os << "n,value,error,sign\n";
        for (const auto& row : r.table)
            os << row.n << "," << row.value << "," << row.error << "," << row.sign << "\n";
        return os.str();
    }
    os << "key,value\n";
    std::vector<std::pair<std::string, std::string>> kv;
    flatten(r.sections, "", kv);
    for (const auto& [k, v] : kv) os << k << "," << v << "\n";
    return os.str();
}

std::string emit_text(const Report& r) {
    std::ostringstream os;
    os << "command: " << r.command << "\n";
    os << "input_digest: " << r.input_digest << "\n";
    os << "version: " << r.version << "\n";
    os << "backend: " << r.backend << " (precision " << r.precision_bits << " bits)\n";
    std::vector<std::pair<std::string, std::string>> kv;
    flatten(r.sections, "", kv);
    for (const auto& [k, v] : kv) os << k << ": " << v << "\n";
    if (!r.table.empty()) {
        os << "n,value,error,sign\n";
        for (const auto& row : r.table)
            os << row.n << "," << row.value << "," << row.error << "," << row.sign << "\n";
    }
    return os.str();
}

}  // namespace

std::string emit_report(const Report& r, const std::string& format) {
    if (format == "json") return emit_json(r);
    if (format == "csv") return emit_csv(r);
    if (format == "text") return emit_text(r);
    throw ParseError("unknown report format: '" + format + "' (expected json|csv|text)");
}

}  // namespace lpsign
