#include "lpsign/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "lpsign/report.hpp"
#include "lpsign/spec_io.hpp"
#include "lpsign/theorems.hpp"

namespace lpsign {

namespace {

using nlohmann::ordered_json;

struct CommonOptions {
    std::string spec_path;
    std::size_t order = 32;
    std::size_t horizon = 0;
    std::string window;  // "LO..HI"
    unsigned precision = 256;
    std::string format = "text";
    std::string out_path;
    std::uint64_t seed = 12345;
};

std::pair<std::size_t, std::size_t> parse_window(const std::string& w, std::size_t def_lo,
                                                 std::size_t def_hi) {
    if (w.empty()) return {def_lo, def_hi};
    auto dots = w.find("..");
    if (dots == std::string::npos) throw ParseError("window must look like LO..HI");
    std::size_t lo = std::stoull(w.substr(0, dots));
    std::size_t hi = std::stoull(w.substr(dots + 2));
    if (lo < 1 || hi < lo) throw ParseError("window must satisfy 1 <= LO <= HI");
    return {lo, hi};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

FunctionSpec load_spec(const CommonOptions& opt, Report& rep) {
    if (opt.spec_path.empty()) throw ParseError("--spec is required for this subcommand");
    std::string bytes = read_file(opt.spec_path);
    rep.input_digest = fnv1a64_hex(bytes);
    return parse_spec_json(bytes);
}

std::vector<Rational> parse_rational_list(const std::string& csv) {
    std::vector<Rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) throw ParseError("expected a comma-separated list of rationals");
    return out;
}

template <typename T>
void fill_table(Report& rep, const TruncatedSeries<T>& s) {
    for (std::size_t n = 0; n <= s.order(); ++n) {
        IndexRow row;
        row.n = n;
        if constexpr (std::is_same_v<T, Rational>) {
            row.value = to_string(s[n]);
            row.error = "0";
        } else {
            row.value = s[n].value().to_string();
            row.error = s[n].error().to_string(3);
        }
        row.sign = sign_char(certified_sign(s[n]));
        rep.table.push_back(row);
    }
}

/// Builds the series on the exact backend when the spec allows it, else on
/// the error-tracked backend, and hands it to `f`.
template <typename F>
auto with_series(const FunctionSpec& spec, std::size_t order, Report& rep, F&& f) {
    if (spec.is_exact()) {
        rep.backend = "exact";
        return f(build_function<Rational>(spec, order));
    }
    rep.backend = "ball";
    return f(build_function<Ball>(spec, order));
}

ordered_json tail_json(const TailReport& t) {
    ordered_json j;
    j["horizon"] = t.horizon;
    j["n0_empirical"] = t.n0_empirical;
    j["violations"] = t.violations;
    j["unresolved"] = t.indeterminate_indices;
    j["clean_tail_observed"] = t.clean_tail_observed;
    return j;
}

ordered_json growth_json(const GrowthEstimate& g, bool include_samples = true) {
    ordered_json j;
    j["window"] = std::to_string(g.window_lo) + ".." + std::to_string(g.window_hi);
    if (!g.order_samples.empty()) {
        j["rho_hat"] = g.rho_hat;
        j["rho_hat_fit"] = g.rho_hat_fit;
    }
    if (!g.type_samples.empty()) {
        j["rho_used"] = g.rho_used;
        j["sigma_hat"] = g.sigma_hat;
    }
    if (include_samples) {
        auto dump = [](const std::vector<std::pair<std::size_t, double>>& v) {
            auto arr = ordered_json::array();
            for (const auto& [n, x] : v) arr.push_back({{"n", n}, {"value", x}});
            return arr;
        };
        if (!g.order_samples.empty()) j["order_samples"] = dump(g.order_samples);
        if (!g.type_samples.empty()) j["type_samples"] = dump(g.type_samples);
        if (!g.raw_q2_samples.empty()) j["q2_samples"] = dump(g.raw_q2_samples);
    }
    return j;
}

int finish(const Report& rep, const CommonOptions& opt, std::ostream& out, int code) {
    std::string bytes = emit_report(rep, opt.format);
    if (!opt.out_path.empty()) {
        std::ofstream f(opt.out_path, std::ios::binary);
        if (!f) throw ParseError("cannot write file: " + opt.out_path);
        f << bytes;
    } else {
        out << bytes;
    }
    return code;
}

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_spec = true) {
    if (with_spec) cmd->add_option("--spec", opt.spec_path, "path to a JSON function spec");
    cmd->add_option("--order", opt.order, "truncation order N");
    cmd->add_option("--horizon", opt.horizon, "analysis horizon");
    cmd->add_option("--window", opt.window, "sample window LO..HI");
    cmd->add_option("--precision", opt.precision, "ball backend precision in bits (default 256)");
    cmd->add_option("--format", opt.format, "report format: json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", opt.out_path, "write the report to this path");
    cmd->add_option("--seed", opt.seed, "seed for randomized batteries");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"rigorous sign/growth analysis of Laguerre-Polya truncations"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string poly_csv, poly_u_csv, poly_v_csv, gamma_name = "ones", gamma_list_csv;
    std::string a_text = "-1", rho_text = "0", base_text = "e";
    std::size_t count1 = 12, count2 = 8;
    unsigned samples = 100, max_deg = 6;

    auto* c_coeffs = app.add_subcommand("coeffs", "emit certified coefficients");
    add_common(c_coeffs, opt);
    auto* c_signs = app.add_subcommand("signs", "emit the certified sign sequence");
    add_common(c_signs, opt);
    auto* c_tail = app.add_subcommand("tail", "alternating-pair tail analysis");
    add_common(c_tail, opt);
    auto* c_growth = app.add_subcommand("growth", "order/type estimates from coefficients");
    add_common(c_growth, opt);
    c_growth->add_option("--rho", rho_text, "type statistic exponent (default 2)");
    auto* c_classify = app.add_subcommand("classify", "LPa / LPI / LP0 subclass of the declared spec");
    add_common(c_classify, opt);

    auto* c_thm1 = app.add_subcommand("verify-thm1", "sign-tail + growth hypothesis check");
    add_common(c_thm1, opt);
    auto* c_thm2 = app.add_subcommand("verify-thm2", "certified n0 bound for exp(a z^2) P(z)");
    add_common(c_thm2, opt);
    c_thm2->add_option("--poly", poly_csv, "P coefficients c0,c1,... (single mode)");
    c_thm2->add_option("--a", a_text, "negative rational a (default -1)");
    c_thm2->add_option("--samples", samples, "battery mode: number of random P");
    c_thm2->add_option("--max-deg", max_deg, "battery mode: max degree");
    auto* c_thm3 = app.add_subcommand("verify-thm3", "counterexample construction violations");
    add_common(c_thm3, opt);
    c_thm3->add_option("--rho", rho_text, "target order in [0,2] (default 0)");
    c_thm3->add_option("--count1", count1, "zeros of the order-0 factor");
    c_thm3->add_option("--count2", count2, "symmetric pairs of the power-log factor");
    c_thm3->add_option("--base", base_text, "zero base: e (enclosures) or 3 (exact surrogate)")
        ->check(CLI::IsMember({"e", "3"}));
    c_thm3->add_option("--a", a_text, "negative rational a (default -1)");
    auto* c_cor1 = app.add_subcommand("verify-cor1", "strict alternating-pair check for even/odd specs");
    add_common(c_cor1, opt);

    auto* c_lemma2 = app.add_subcommand("lemma2", "parity parts have purely imaginary zeros");
    add_common(c_lemma2, opt);
    c_lemma2->add_option("--poly", poly_csv, "polynomial coefficients (single mode)");
    c_lemma2->add_option("--samples", samples, "battery mode: number of random polynomials");
    c_lemma2->add_option("--max-deg", max_deg, "battery mode: max degree");

    auto* c_mult = app.add_subcommand("multiplier-test", "multiplier-sequence refutation search");
    add_common(c_mult, opt);
    c_mult->add_option("--gamma", gamma_name, "rule: ones|n_plus_1|alt_factorial");
    c_mult->add_option("--gamma-list", gamma_list_csv, "explicit gamma_0,gamma_1,...");
    c_mult->add_option("--samples", samples, "number of random hyperbolic polynomials");
    c_mult->add_option("--max-deg", max_deg, "max degree of sampled polynomials");

    auto* c_hb = app.add_subcommand("hb-check", "Hermite-Biehler interlacing check");
    add_common(c_hb, opt);
    c_hb->add_option("--poly-u", poly_u_csv, "real part coefficients (single mode)");
    c_hb->add_option("--poly-v", poly_v_csv, "imaginary part coefficients (single mode)");
    c_hb->add_option("--samples", samples, "battery mode: planted half-plane polynomials");
    c_hb->add_option("--max-deg", max_deg, "battery mode: max degree");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    Report rep;
    {
        std::string cmd;
        for (const auto& a : args) cmd += (cmd.empty() ? "" : " ") + a;
        rep.command = cmd;
    }

    try {
        set_working_precision_bits(opt.precision);
        rep.precision_bits = opt.precision;

        if (c_coeffs->parsed() || c_signs->parsed()) {
            FunctionSpec spec = load_spec(opt, rep);
            return with_series(spec, opt.order, rep, [&](const auto& s) {
                fill_table(rep, s);
                rep.sections["order"] = s.order();
                auto sg = sign_sequence(s);
                rep.sections["signs"] = render(sg);
                rep.sections["policy"] = sg.policy;
                return finish(rep, opt, out, 0);
            });
        }
        if (c_tail->parsed()) {
            FunctionSpec spec = load_spec(opt, rep);
            std::size_t n = opt.horizon ? opt.horizon : opt.order;
            return with_series(spec, n, rep, [&](const auto& s) {
                auto sg = sign_sequence(s);
                rep.sections["signs"] = render(sg);
                rep.sections["tail"] = tail_json(tail_check(sg));
                fill_table(rep, s);
                return finish(rep, opt, out, 0);
            });
        }
        if (c_growth->parsed()) {
            FunctionSpec spec = load_spec(opt, rep);
            double rho = parse_rational(rho_text).get_d();
            if (rho == 0) rho = 2.0;
            auto [wlo, whi] = parse_window(opt.window, std::max<std::size_t>(1, opt.order / 2), opt.order);
            return with_series(spec, opt.order, rep, [&](const auto& s) {
                auto oe = order_estimate(s, wlo, whi);
                auto ts = type_statistic(s, rho, wlo, whi);
                rep.sections["order_estimate"] = growth_json(oe);
                rep.sections["type_statistic"] = growth_json(ts);
                return finish(rep, opt, out, 0);
            });
        }
        if (c_classify->parsed()) {
            FunctionSpec spec = load_spec(opt, rep);
            rep.sections["classification"] = to_string(classify_subclass(spec));
            return finish(rep, opt, out, 0);
        }
        if (c_thm1->parsed()) {
            FunctionSpec spec = load_spec(opt, rep);
            std::size_t horizon = opt.horizon ? opt.horizon : 200;
            auto [wlo, whi] = parse_window(opt.window, std::max<std::size_t>(1, horizon / 2), horizon);
            std::size_t order = std::max(horizon, whi);
            return with_series(spec, order, rep, [&](const auto& s) {
                auto r = thm1_hypothesis_check(s, horizon, wlo, whi);
                rep.sections["tail"] = tail_json(r.tail);
                if (r.growth) rep.sections["growth"] = growth_json(*r.growth, false);
                rep.sections["verdict"] = r.message;
                return finish(rep, opt, out, r.verdict == Thm1Report::Verdict::satisfied ? 0 : 1);
            });
        }
        if (c_thm2->parsed()) {
            rep.backend = "exact";
            Rational a = parse_rational(a_text);
            std::size_t horizon = opt.horizon ? opt.horizon : 400;
            auto run_one = [&](const ExactPolynomial& P, ordered_json& j) {
                Thm2Report r = thm2_n0_bound(P, a, horizon);
                j["P"] = P.to_string();
                j["P1"] = r.p1.to_string();
                j["P2"] = r.p2.to_string();
                j["k0"] = r.k0;
                j["n0_bound"] = r.n0_bound;
                j["empirical_first_clean"] = r.empirical_first_clean;
                j["violations"] = r.violations;
                j["identity_holds"] = r.identity_holds;
                j["bound_valid"] = r.bound_valid;
                return r.bound_valid && r.identity_holds;
            };
            bool ok = true;
            if (!poly_csv.empty()) {
                ordered_json j;
                ok = run_one(ExactPolynomial::from_coefficients(parse_rational_list(poly_csv)), j);
                rep.sections = j;
            } else {
                std::uint64_t state = opt.seed;
                auto arr = ordered_json::array();
                for (unsigned i = 0; i < samples; ++i) {
                    ordered_json j;
                    ok = run_one(random_hyperbolic(state, max_deg, false), j) && ok;
                    arr.push_back(j);
                }
                rep.sections["samples"] = arr;
                rep.sections["all_pass"] = ok;
            }
            return finish(rep, opt, out, ok ? 0 : 1);
        }
        if (c_thm3->parsed()) {
            Rational a = parse_rational(a_text);
            Rational rho = parse_rational(rho_text);
            std::size_t horizon = opt.horizon ? opt.horizon : 300;
            Thm3Base base = base_text == "3" ? Thm3Base::exact3 : Thm3Base::e;
            auto c = thm3_construct(rho, count1, count2, base);
            rep.backend = c.spec.is_exact() ? "exact" : "ball";
            TailReport t = thm3_violations(c, a, horizon);
            rep.sections["construction"] = ordered_json{{"rho", to_string(rho)},
                                                        {"count1", c.count1},
                                                        {"count2", c.count2},
                                                        {"base", base_text},
                                                        {"zero_count", c.count1 + c.count2 * 2}};
            rep.sections["note"] = "conclusions are about the truncated product (polynomial psi)";
            rep.sections["tail"] = tail_json(t);
            bool found = !t.violations.empty();
            rep.sections["violations_found"] = found;
            return finish(rep, opt, out, found ? 0 : 1);
        }
        if (c_cor1->parsed()) {
            FunctionSpec spec = load_spec(opt, rep);
            rep.backend = spec.is_exact() ? "exact" : "ball";
            std::size_t horizon = opt.horizon ? opt.horizon : 500;
            auto r = corollary1_verify(spec, horizon);
            rep.sections["parity"] = r.parity;
            rep.sections["tail"] = tail_json(r.tail);
            rep.sections["growth"] = growth_json(r.growth, false);
            rep.sections["zero_violations"] = r.zero_violations;
            rep.sections["statistic_in_window"] = r.statistic_in_window;
            return finish(rep, opt, out, r.zero_violations && r.statistic_in_window ? 0 : 1);
        }
        if (c_lemma2->parsed()) {
            rep.backend = "exact";
            if (!poly_csv.empty()) {
                auto r = even_odd_imaginary_check(
                    ExactPolynomial::from_coefficients(parse_rational_list(poly_csv)));
                rep.sections["pass"] = r.pass;
                rep.sections["detail"] = r.detail;
                return finish(rep, opt, out, r.pass ? 0 : 1);
            }
            std::uint64_t state = opt.seed;
            unsigned pass = 0;
            auto failures = ordered_json::array();
            for (unsigned i = 0; i < samples; ++i) {
                ExactPolynomial p = random_hyperbolic(state, max_deg, true);
                auto r = even_odd_imaginary_check(p);
                if (r.pass)
                    ++pass;
                else
                    failures.push_back(p.to_string());
            }
            rep.sections["samples"] = samples;
            rep.sections["pass"] = pass;
            rep.sections["failures"] = failures;
            return finish(rep, opt, out, pass == samples ? 0 : 1);
        }
        if (c_mult->parsed()) {
            rep.backend = "exact";
            MultiplierSequence seq;
            if (!gamma_list_csv.empty()) {
                seq.rule = MultiplierSequence::Rule::explicit_list;
                seq.list = parse_rational_list(gamma_list_csv);
                seq.provenance = "explicit list";
            } else {
                seq = MultiplierSequence::from_name(gamma_name);
            }
            auto r = multiplier_sequence_test(seq, samples, max_deg, opt.order, opt.seed);
            rep.sections["gamma"] = seq.name();
            rep.sections["verdict"] = r.verdict;
            rep.sections["samples_tested"] = r.samples_tested;
            if (r.refuting_instance) {
                rep.sections["refuting_instance"] = r.refuting_instance->to_string();
                rep.sections["refuting_image"] = r.refuting_image->to_string();
            }
            auto sg = ordered_json::array();
            for (const auto& c : r.test_series_coefficients) sg.push_back(to_string(c));
            rep.sections["test_series"] = sg;
            return finish(rep, opt, out, r.refuted ? 1 : 0);
        }
        if (c_hb->parsed()) {
            rep.backend = "exact";
            if (!poly_u_csv.empty() || !poly_v_csv.empty()) {
                auto u = ExactPolynomial::from_coefficients(parse_rational_list(poly_u_csv));
                auto v = ExactPolynomial::from_coefficients(parse_rational_list(poly_v_csv));
                bool ok = hermite_biehler_check(u, v);
                rep.sections["interlacing_half_plane"] = ok;
                return finish(rep, opt, out, 0);
            }
            auto r = hermite_biehler_battery(samples, max_deg, opt.seed);
            rep.sections["planted_pass"] = r.planted_pass;
            rep.sections["planted_total"] = r.planted_total;
            rep.sections["reflections_fail"] = r.reflections_fail;
            rep.sections["reflections_total"] = r.reflections_total;
            rep.sections["clean"] = r.clean();
            return finish(rep, opt, out, r.clean() ? 0 : 1);
        }
        err << "usage error: no subcommand\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace lpsign
