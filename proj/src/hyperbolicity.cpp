#include "lpsign/hyperbolicity.hpp"

#include <algorithm>
#include <cassert>

#include "lpsign/errors.hpp"

namespace lpsign {

namespace {

std::vector<ExactPolynomial> sturm_chain(const ExactPolynomial& p) {
    std::vector<ExactPolynomial> chain{p};
    ExactPolynomial d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d);
    for (;;) {
        const ExactPolynomial& a = chain[chain.size() - 2];
        const ExactPolynomial& b = chain.back();
        ExactPolynomial r = Rational(-1) * divmod(a, b).second;
        if (r.is_zero()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

int sign_at(const ExactPolynomial& p, const Rational& x) { return sgn(p.eval(x)); }

int sign_at_inf(const ExactPolynomial& p, bool positive) {
    int s = sgn(p.leading());
    if (!positive && p.degree() % 2 != 0) s = -s;
    return s;
}

long variations(const std::vector<int>& signs) {
    long v = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

long variations_at(const std::vector<ExactPolynomial>& chain, const std::optional<Rational>& x,
                   bool positive_inf) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& q : chain)
        signs.push_back(x ? sign_at(q, *x) : sign_at_inf(q, positive_inf));
    return variations(signs);
}

}  // namespace

long sturm_count(const ExactPolynomial& p, const std::optional<Rational>& lo,
                 const std::optional<Rational>& hi) {
    if (p.is_zero()) throw PreconditionError("sturm_count: zero polynomial");
    if (lo && hi && !(*lo < *hi)) throw PreconditionError("sturm_count: need lo < hi");
    if (lo && sgn(p.eval(*lo)) == 0) throw PreconditionError("sturm_count: lo is a root");
    if (hi && sgn(p.eval(*hi)) == 0) throw PreconditionError("sturm_count: hi is a root");
    if (p.degree() <= 0) return 0;
    auto chain = sturm_chain(p);
    return variations_at(chain, lo, false) - variations_at(chain, hi, true);
}

namespace {

/// Count of distinct roots in the open interval, chain precomputed.
long count_open(const std::vector<ExactPolynomial>& chain, const Rational& lo, const Rational& hi) {
    return variations_at(chain, lo, false) - variations_at(chain, hi, true);
}

struct Isolator {
    const ExactPolynomial& q;  // squarefree
    std::vector<ExactPolynomial> chain;
    std::vector<RootInterval> found;

    explicit Isolator(const ExactPolynomial& poly) : q(poly), chain(sturm_chain(poly)) {}

    void split(const Rational& lo, const Rational& hi, long count) {
        if (count == 0) return;
        if (count == 1) {
            found.push_back({lo, hi});
            return;
        }
        Rational m = (lo + hi) / 2;
        if (sgn(q.eval(m)) == 0) {
            found.push_back({m, m});
            // Shrink a symmetric gap around m that contains no other root.
            Rational d = (hi - lo) / 4;
            while (sgn(q.eval(m - d)) == 0 || sgn(q.eval(m + d)) == 0 ||
                   count_open(chain, m - d, m + d) != 1)
                d /= 2;
            split(lo, m - d, count_open(chain, lo, m - d));
            split(m + d, hi, count_open(chain, m + d, hi));
            return;
        }
        long left = count_open(chain, lo, m);
        split(lo, m, left);
        split(m, hi, count - left);
    }
};

/// One bisection step on a non-point isolating interval (q squarefree, the
/// interval holds exactly one root, endpoints are not roots).
void refine_step(const ExactPolynomial& q, RootInterval& iv) {
    if (iv.is_point()) return;
    Rational m = (iv.lo + iv.hi) / 2;
    int sm = sgn(q.eval(m));
    if (sm == 0) {
        iv.lo = iv.hi = m;
        return;
    }
    if (sgn(q.eval(iv.lo)) * sm < 0)
        iv.hi = m;
    else
        iv.lo = m;
}

/// Refine until the root's sign is determined: returns -1, 0, +1.
int root_sign(const ExactPolynomial& q, RootInterval& iv) {
    for (;;) {
        if (iv.is_point()) return sgn(iv.lo);
        if (sgn(iv.lo) >= 0) return 1;   // 0 <= lo < root
        if (sgn(iv.hi) <= 0) return -1;  // root < hi <= 0
        if (sgn(q.eval(Rational(0))) == 0) {
            // 0 is a root of q and lies inside this isolating interval, so it
            // is this interval's root.
            iv.lo = iv.hi = Rational(0);
            return 0;
        }
        refine_step(q, iv);
    }
}

bool disjoint(const RootInterval& a, const RootInterval& b) {
    if (a.is_point() && b.is_point()) return a.lo != b.lo;
    // Shared endpoints are fine: endpoints of non-point intervals are not roots.
    if (a.is_point()) return a.lo <= b.lo || a.lo >= b.hi;
    if (b.is_point()) return b.lo <= a.lo || b.lo >= a.hi;
    return a.hi <= b.lo || b.hi <= a.lo;
}

Rational width(const RootInterval& iv) { return iv.hi - iv.lo; }

}  // namespace

std::vector<RootInterval> isolate_real_roots(const ExactPolynomial& p) {
    if (p.is_zero()) throw PreconditionError("isolate_real_roots: zero polynomial");
    if (p.degree() <= 0) return {};
    Rational bound = cauchy_root_bound(p);
    Isolator iso(p);
    iso.split(-bound, bound, count_open(iso.chain, -bound, bound));
    std::sort(iso.found.begin(), iso.found.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return iso.found;
}

HyperbolicityCertificate is_hyperbolic(const ExactPolynomial& p) {
    if (p.is_zero()) throw PreconditionError("is_hyperbolic: zero polynomial");
    HyperbolicityCertificate cert;
    cert.degree = p.degree();
    if (p.degree() == 0) {
        cert.hyperbolic = true;  // nonzero constant: no zeros to place
        cert.same_sign = 0;
        return cert;
    }
    // Isolate distinct roots on the squarefree part, then read each root's
    // multiplicity off the Yun factor that contains it. Intervals stay valid
    // for the squarefree part, which later refinement relies on.
    ExactPolynomial sf = squarefree_part(p);
    auto roots_sf = isolate_real_roots(sf);
    auto factors = squarefree_decomposition(p);
    long total = 0;
    for (const auto& iv : roots_sf) {
        unsigned mult = 0;
        for (const auto& [f, m] : factors) {
            bool contains = iv.is_point() ? sgn(f.eval(iv.lo)) == 0
                                          : sturm_count(f, iv.lo, iv.hi) == 1;
            if (contains) {
                mult = m;
                break;
            }
        }
        assert(mult > 0);
        total += mult;
        cert.roots.push_back({iv, mult});
    }
    cert.real_count_with_multiplicity = total;
    cert.hyperbolic = total == cert.degree;
    std::sort(cert.roots.begin(), cert.roots.end(),
              [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.where.lo < b.where.lo; });
    if (cert.hyperbolic) {
        bool pos = false, neg = false;
        for (auto& r : cert.roots) {
            int s = root_sign(sf, r.where);
            if (s > 0) pos = true;
            if (s < 0) neg = true;
        }
        if (pos && neg)
            cert.same_sign = std::nullopt;
        else
            cert.same_sign = pos ? 1 : (neg ? -1 : 0);
    }
    return cert;
}

bool hermite_biehler_check(const ExactPolynomial& u, const ExactPolynomial& v) {
    if (u.is_zero() && v.is_zero())
        throw PreconditionError("hermite_biehler_check: both parts zero");
    long du = u.degree(), dv = v.degree();
    if (du <= 0 && dv <= 0) return true;  // nonzero constant, no zeros
    if (u.is_zero() || v.is_zero()) return false;  // real zeros on the axis

    // Common real or complex factor: shared zeros sit on the boundary case.
    if (gcd(u, v).degree() > 0) return false;

    auto cu = is_hyperbolic(u);
    auto cv = is_hyperbolic(v);
    if (!cu.hyperbolic || !cv.hyperbolic) return false;
    for (const auto& r : cu.roots)
        if (r.multiplicity > 1) return false;  // strict interlacing needs simple zeros
    for (const auto& r : cv.roots)
        if (r.multiplicity > 1) return false;
    if (std::abs(du - dv) > 1) return false;

    ExactPolynomial su = squarefree_part(u), sv = squarefree_part(v);
    std::vector<RootInterval> ru, rv;
    for (const auto& r : cu.roots) ru.push_back(r.where);
    for (const auto& r : cv.roots) rv.push_back(r.where);

    // Separate every cross pair; terminates because u, v share no roots.
    for (auto& a : ru)
        for (auto& b : rv)
            while (!disjoint(a, b)) {
                if (!a.is_point() && (b.is_point() || width(a) >= width(b)))
                    refine_step(su, a);
                else
                    refine_step(sv, b);
            }

    struct Tagged {
        const RootInterval* iv;
        int tag;
    };
    std::vector<Tagged> merged;
    for (const auto& a : ru) merged.push_back({&a, 0});
    for (const auto& b : rv) merged.push_back({&b, 1});
    std::sort(merged.begin(), merged.end(), [](const Tagged& a, const Tagged& b) {
        if (a.iv->lo != b.iv->lo) return a.iv->lo < b.iv->lo;
        return a.iv->hi < b.iv->hi;
    });
    for (std::size_t i = 1; i < merged.size(); ++i)
        if (merged[i].tag == merged[i - 1].tag) return false;
    return true;
}

ParityZeroReport even_odd_imaginary_check(const ExactPolynomial& p) {
    if (p.is_zero()) throw PreconditionError("even_odd_imaginary_check: zero polynomial");
    auto cert = is_hyperbolic(p);
    if (!cert.hyperbolic)
        throw PreconditionError("even_odd_imaginary_check: polynomial is not hyperbolic");
    if (!cert.same_sign.has_value())
        throw PreconditionError("even_odd_imaginary_check: zeros are of mixed signs");

    ParityZeroReport rep;
    std::vector<Rational> ec, oc;
    for (long j = 0; j <= p.degree(); ++j) {
        Rational c = p.coeff(static_cast<std::size_t>(j));
        if ((j / 2) % 2 == 1) c = -c;
        if (j % 2 == 0)
            ec.push_back(std::move(c));
        else
            oc.push_back(std::move(c));
    }
    rep.even_u = ExactPolynomial::from_coefficients(std::move(ec));
    rep.odd_u = ExactPolynomial::from_coefficients(std::move(oc));

    auto nonneg_real_roots = [](const ExactPolynomial& q, long& count) {
        if (q.is_zero() || q.degree() == 0) {
            count = 0;
            return true;  // no zeros at all
        }
        // Strip u^s: roots at the origin are allowed (zeros of the part at 0).
        std::size_t s = 0;
        while (s < q.coefficients().size() && sgn(q.coefficients()[s]) == 0) ++s;
        std::vector<Rational> rest(q.coefficients().begin() + static_cast<long>(s),
                                   q.coefficients().end());
        ExactPolynomial core = ExactPolynomial::from_coefficients(std::move(rest));
        count = static_cast<long>(s);
        if (core.degree() == 0) return true;
        auto c = is_hyperbolic(core);
        if (!c.hyperbolic) return false;
        ExactPolynomial sf = squarefree_part(core);
        for (auto r : c.roots) {
            if (root_sign(sf, r.where) < 0) return false;
            count += r.multiplicity;
        }
        return true;
    };

    bool even_ok = nonneg_real_roots(rep.even_u, rep.even_nonneg_roots);
    bool odd_ok = nonneg_real_roots(rep.odd_u, rep.odd_nonneg_roots);
    rep.pass = even_ok && odd_ok;
    rep.detail = even_ok ? (odd_ok ? "both parity parts have purely imaginary zeros"
                                   : "odd part has a zero off the imaginary axis")
                         : "even part has a zero off the imaginary axis";
    return rep;
}

Rational MultiplierSequence::at(std::size_t n) const {
    switch (rule) {
        case Rule::ones:
            return Rational(1);
        case Rule::n_plus_one:
            return Rational(static_cast<unsigned long>(n + 1));
        case Rule::alternating_factorial: {
            Rational f(factorial(static_cast<unsigned long>(n)));
            if (n % 2 == 1) f = -f;
            return f;
        }
        case Rule::explicit_list:
            if (n >= list.size())
                throw PreconditionError("multiplier sequence shorter than required index");
            return list[n];
    }
    throw Error("unreachable");
}

MultiplierSequence MultiplierSequence::from_name(const std::string& name) {
    MultiplierSequence s;
    if (name == "ones")
        s.rule = Rule::ones;
    else if (name == "n_plus_1")
        s.rule = Rule::n_plus_one;
    else if (name == "alt_factorial")
        s.rule = Rule::alternating_factorial;
    else
        throw ParseError("unknown multiplier rule: '" + name + "' (expected ones|n_plus_1|alt_factorial)");
    s.provenance = "builtin rule " + name;
    return s;
}

std::string MultiplierSequence::name() const {
    switch (rule) {
        case Rule::ones: return "ones";
        case Rule::n_plus_one: return "n_plus_1";
        case Rule::alternating_factorial: return "alt_factorial";
        case Rule::explicit_list: return "explicit";
    }
    return "?";
}

ExactPolynomial apply_multiplier(const MultiplierSequence& seq, const ExactPolynomial& p) {
    std::vector<Rational> out(p.coefficients().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = seq.at(i) * p.coeff(i);
    return ExactPolynomial::from_coefficients(std::move(out));
}

std::uint64_t rng_next(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t rng_below(std::uint64_t& state, std::uint64_t n) { return rng_next(state) % n; }

ExactPolynomial random_hyperbolic(std::uint64_t& state, unsigned max_deg, bool same_sign) {
    unsigned deg = 1 + static_cast<unsigned>(rng_below(state, max_deg));
    int common = rng_below(state, 2) == 0 ? 1 : -1;
    ExactPolynomial p = ExactPolynomial::constant(Rational(1));
    for (unsigned i = 0; i < deg; ++i) {
        long mag = 1 + static_cast<long>(rng_below(state, 5));
        int s = same_sign ? common : (rng_below(state, 2) == 0 ? 1 : -1);
        Rational root(s * mag);
        p = p * ExactPolynomial::from_coefficients({-root, Rational(1)});
    }
    return p;
}

MultiplierTestReport multiplier_sequence_test(const MultiplierSequence& seq, unsigned sample_count,
                                              unsigned max_deg, std::size_t series_order,
                                              std::uint64_t seed) {
    MultiplierTestReport rep;
    std::uint64_t state = seed ^ 0xA02BDBF7BB3C0A7ull;
    for (unsigned i = 0; i < sample_count; ++i) {
        ExactPolynomial p = random_hyperbolic(state, max_deg, /*same_sign=*/true);
        ExactPolynomial q = apply_multiplier(seq, p);
        ++rep.samples_tested;
        if (q.degree() <= 0) continue;  // constants and zero have no zeros to misplace
        auto cert = is_hyperbolic(q);
        if (!cert.hyperbolic) {
            rep.refuted = true;
            rep.refuting_instance = p;
            rep.refuting_image = q;
            break;
        }
    }
    for (std::size_t n = 0; n <= series_order; ++n)
        rep.test_series_coefficients.push_back(seq.at(n) / Rational(factorial(static_cast<unsigned long>(n))));
    rep.verdict = rep.refuted ? "refuted" : "consistent up to tested scale";
    return rep;
}

HermiteBiehlerBatteryReport hermite_biehler_battery(unsigned count, unsigned max_deg, std::uint64_t seed) {
    HermiteBiehlerBatteryReport rep;
    std::uint64_t state = seed ^ 0x9D38BF3BBB1A943ull;
    unsigned deg_span = max_deg >= 3 ? max_deg - 1 : 2;
    for (unsigned i = 0; i < count; ++i) {
        unsigned deg = 2 + static_cast<unsigned>(rng_below(state, deg_span));
        std::vector<std::pair<Rational, Rational>> zeros;  // (x, y), y > 0, distinct
        while (zeros.size() < deg) {
            Rational x(static_cast<long>(rng_below(state, 11)) - 5);
            Rational y(1 + static_cast<long>(rng_below(state, 5)));
            bool dup = false;
            for (auto& [px, py] : zeros)
                if (px == x && py == y) dup = true;
            if (!dup) zeros.emplace_back(x, y);
        }
        auto build = [&](long flip_index) {
            // prod (z - (x_j + i y_j)) expanded as u + iv
            ExactPolynomial u = ExactPolynomial::constant(Rational(1));
            ExactPolynomial v;
            for (std::size_t j = 0; j < zeros.size(); ++j) {
                Rational x = zeros[j].first;
                Rational y = static_cast<long>(j) == flip_index ? -zeros[j].second : zeros[j].second;
                ExactPolynomial lin = ExactPolynomial::from_coefficients({-x, Rational(1)});
                ExactPolynomial nu = u * lin + y * v;
                ExactPolynomial nv = v * lin - y * u;
                u = std::move(nu);
                v = std::move(nv);
            }
            return std::make_pair(u, v);
        };
        auto [u, v] = build(-1);
        ++rep.planted_total;
        if (hermite_biehler_check(u, v)) ++rep.planted_pass;
        for (std::size_t j = 0; j < zeros.size(); ++j) {
            auto [fu, fv] = build(static_cast<long>(j));
            ++rep.reflections_total;
            if (!hermite_biehler_check(fu, fv)) ++rep.reflections_fail;
        }
    }
    return rep;
}

}  // namespace lpsign
