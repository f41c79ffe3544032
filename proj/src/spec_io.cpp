#include "lpsign/spec_io.hpp"

#include <json.hpp>

#include "lpsign/errors.hpp"

namespace lpsign {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ParseError("spec document: " + path + ": " + what);
}

Rational get_rational(const ordered_json& j, const std::string& path) {
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const ParseError& e) {
            fail(path, e.what());
        }
    }
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_number_float()) fail(path, "floats are lossy; pass a decimal string");
    fail(path, "expected a rational literal");
}

void reject_unknown(const ordered_json& j, std::initializer_list<const char*> known,
                    const std::string& path) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : known)
            if (it.key() == k) ok = true;
        if (!ok) fail(path + "." + it.key(), "unknown key");
    }
}

ZeroSequence parse_product_factor(const ordered_json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    reject_unknown(j, {"kind", "params", "count", "lambda"}, path);
    if (!j.contains("kind") || !j.at("kind").is_string()) fail(path + ".kind", "required string");
    ZeroKind kind;
    try {
        kind = zero_kind_from_string(j.at("kind").get<std::string>());
    } catch (const ParseError& e) {
        fail(path + ".kind", e.what());
    }
    ordered_json params = j.value("params", ordered_json::object());
    int lambda = 0;
    if (j.contains("lambda")) {
        if (!j.at("lambda").is_number_integer()) fail(path + ".lambda", "expected 0 or 1");
        lambda = j.at("lambda").get<int>();
    }
    std::size_t count = 0;
    if (j.contains("count")) {
        if (!j.at("count").is_number_unsigned() && !j.at("count").is_number_integer())
            fail(path + ".count", "expected a nonnegative integer");
        long c = j.at("count").get<long>();
        if (c < 0) fail(path + ".count", "expected a nonnegative integer");
        count = static_cast<std::size_t>(c);
    }

    ZeroSequence seq;
    seq.kind = kind;
    seq.genus_param = lambda;
    try {
        switch (kind) {
            case ZeroKind::explicit_list: {
                reject_unknown(params, {"zeros"}, path + ".params");
                if (!params.contains("zeros") || !params.at("zeros").is_array())
                    fail(path + ".params.zeros", "required array of rationals");
                std::vector<Rational> zs;
                std::size_t i = 0;
                for (const auto& z : params.at("zeros"))
                    zs.push_back(get_rational(z, path + ".params.zeros[" + std::to_string(i++) + "]"));
                if (j.contains("count") && count != zs.size())
                    fail(path + ".count", "count must match the zeros list length");
                seq = ZeroSequence::explicit_zeros(std::move(zs), lambda);
                break;
            }
            case ZeroKind::exp_growth: {
                reject_unknown(params, {"c", "base"}, path + ".params");
                Rational c(1);
                if (params.contains("c")) c = get_rational(params.at("c"), path + ".params.c");
                std::optional<Rational> base;
                if (params.contains("base")) {
                    const auto& b = params.at("base");
                    if (b.is_string() && b.get<std::string>() == "e")
                        base = std::nullopt;
                    else
                        base = get_rational(b, path + ".params.base");
                } else {
                    fail(path + ".params.base", "required (rational > 1, or \"e\")");
                }
                seq = ZeroSequence::exponential(std::move(c), std::move(base), count, lambda);
                break;
            }
            case ZeroKind::power_log: {
                reject_unknown(params, {"rho"}, path + ".params");
                if (!params.contains("rho")) fail(path + ".params.rho", "required rational in (0, 2]");
                Rational rho = get_rational(params.at("rho"), path + ".params.rho");
                if (count % 2 != 0) fail(path + ".count", "power_log count must be even (symmetric pairs)");
                seq = ZeroSequence::power_log(std::move(rho), count / 2, lambda);
                break;
            }
            case ZeroKind::arithmetic: {
                reject_unknown(params, {"c"}, path + ".params");
                Rational c(1);
                if (params.contains("c")) c = get_rational(params.at("c"), path + ".params.c");
                seq = ZeroSequence::arithmetic(std::move(c), count);
                break;
            }
        }
    } catch (const PreconditionError& e) {
        fail(path, e.what());
    }
    return seq;
}

ClassicalFactor parse_classical_factor(const ordered_json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    reject_unknown(j, {"name", "params"}, path);
    if (!j.contains("name") || !j.at("name").is_string()) fail(path + ".name", "required string");
    ClassicalFactor f;
    try {
        f = ClassicalFactor::named(j.at("name").get<std::string>());
    } catch (const ParseError& e) {
        fail(path + ".name", e.what());
    }
    ordered_json params = j.value("params", ordered_json::object());
    reject_unknown(params, {"vartheta", "theta"}, path + ".params");
    bool parametric = f.kind == ClassicalFactor::Kind::cos_affine ||
                      f.kind == ClassicalFactor::Kind::laguerre_family;
    if (!parametric && !params.empty()) fail(path + ".params", "factor takes no parameters");
    if (parametric) {
        if (!params.contains("vartheta") || !params.contains("theta"))
            fail(path + ".params", "cos_affine/laguerre_family need vartheta and theta");
        f.vartheta = get_rational(params.at("vartheta"), path + ".params.vartheta");
        f.theta = get_rational(params.at("theta"), path + ".params.theta");
    }
    return f;
}

}  // namespace

FunctionSpec parse_spec_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("spec document: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("spec document: top level must be an object");
    reject_unknown(doc,
                   {"scale", "monomial_power", "gauss_a", "lin_b", "product_factors", "classical_factors"},
                   "$");

    FunctionSpec spec;
    if (doc.contains("scale")) spec.scale = get_rational(doc.at("scale"), "$.scale");
    if (doc.contains("monomial_power")) {
        const auto& mp = doc.at("monomial_power");
        if (!mp.is_number_integer() || mp.get<long>() < 0)
            fail("$.monomial_power", "expected a nonnegative integer");
        spec.monomial_power = static_cast<unsigned>(mp.get<long>());
    }
    if (doc.contains("gauss_a")) spec.gauss_a = get_rational(doc.at("gauss_a"), "$.gauss_a");
    if (doc.contains("lin_b")) spec.lin_b = get_rational(doc.at("lin_b"), "$.lin_b");
    if (doc.contains("product_factors")) {
        if (!doc.at("product_factors").is_array()) fail("$.product_factors", "expected an array");
        std::size_t i = 0;
        for (const auto& pf : doc.at("product_factors"))
            spec.product_factors.push_back(
                parse_product_factor(pf, "$.product_factors[" + std::to_string(i++) + "]"));
    }
    if (doc.contains("classical_factors")) {
        if (!doc.at("classical_factors").is_array()) fail("$.classical_factors", "expected an array");
        std::size_t i = 0;
        for (const auto& cf : doc.at("classical_factors"))
            spec.classical_factors.push_back(
                parse_classical_factor(cf, "$.classical_factors[" + std::to_string(i++) + "]"));
    }
    spec.validate();
    return spec;
}

std::string emit_spec_json(const FunctionSpec& spec) {
    ordered_json doc;
    doc["scale"] = to_string(spec.scale);
    doc["monomial_power"] = spec.monomial_power;
    doc["gauss_a"] = to_string(spec.gauss_a);
    doc["lin_b"] = to_string(spec.lin_b);
    doc["product_factors"] = ordered_json::array();
    for (const auto& pf : spec.product_factors) {
        ordered_json f;
        f["kind"] = to_string(pf.kind);
        ordered_json params = ordered_json::object();
        switch (pf.kind) {
            case ZeroKind::explicit_list: {
                auto zs = ordered_json::array();
                for (const auto& z : pf.zeros) zs.push_back(to_string(z));
                params["zeros"] = zs;
                break;
            }
            case ZeroKind::exp_growth:
                params["c"] = to_string(pf.scale);
                if (pf.base)
                    params["base"] = to_string(*pf.base);
                else
                    params["base"] = "e";
                break;
            case ZeroKind::power_log:
                params["rho"] = to_string(pf.power_log_rho);
                break;
            case ZeroKind::arithmetic:
                params["c"] = to_string(pf.scale);
                break;
        }
        f["params"] = params;
        f["count"] = pf.materialized_count();
        f["lambda"] = pf.genus_param;
        doc["product_factors"].push_back(f);
    }
    doc["classical_factors"] = ordered_json::array();
    for (const auto& cf : spec.classical_factors) {
        ordered_json f;
        f["name"] = cf.name();
        if (cf.kind == ClassicalFactor::Kind::cos_affine ||
            cf.kind == ClassicalFactor::Kind::laguerre_family) {
            f["params"] = {{"vartheta", to_string(cf.vartheta)}, {"theta", to_string(cf.theta)}};
        }
        doc["classical_factors"].push_back(f);
    }
    return doc.dump(2) + "\n";
}

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace lpsign
