#include "lpsign/polynomial.hpp"

#include <algorithm>

#include "lpsign/errors.hpp"

namespace lpsign {

namespace {

void strip(std::vector<Rational>& c) {
    while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

}  // namespace

ExactPolynomial ExactPolynomial::from_coefficients(std::vector<Rational> coeffs) {
    strip(coeffs);
    ExactPolynomial p;
    p.c_ = std::move(coeffs);
    return p;
}

ExactPolynomial ExactPolynomial::constant(const Rational& c) {
    return from_coefficients({c});
}

ExactPolynomial ExactPolynomial::monomial(const Rational& c, std::size_t k) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return from_coefficients(std::move(v));
}

Rational ExactPolynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

ExactPolynomial ExactPolynomial::derivative() const {
    if (c_.size() <= 1) return ExactPolynomial();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(static_cast<unsigned long>(i)) * c_[i];
    return from_coefficients(std::move(d));
}

ExactPolynomial operator+(const ExactPolynomial& a, const ExactPolynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return ExactPolynomial::from_coefficients(std::move(c));
}

ExactPolynomial operator-(const ExactPolynomial& a, const ExactPolynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return ExactPolynomial::from_coefficients(std::move(c));
}

ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return ExactPolynomial();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return ExactPolynomial::from_coefficients(std::move(c));
}

ExactPolynomial operator*(const Rational& c, const ExactPolynomial& a) {
    std::vector<Rational> out(a.c_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = c * a.c_[i];
    return ExactPolynomial::from_coefficients(std::move(out));
}

std::string ExactPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        if (!out.empty()) out += sgn(c_[i]) > 0 ? " + " : " - ";
        else if (sgn(c_[i]) < 0) out += "-";
        Rational a = abs(c_[i]);
        if (i == 0 || a != 1) out += lpsign::to_string(a);
        if (i >= 1) {
            if (a != 1) out += "*";
            out += "x";
            if (i >= 2) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::pair<ExactPolynomial, ExactPolynomial> divmod(const ExactPolynomial& a, const ExactPolynomial& b) {
    if (b.is_zero()) throw PreconditionError("polynomial division by zero");
    std::vector<Rational> rem(a.coefficients());
    long db = b.degree();
    long dq = a.degree() - db;
    if (dq < 0) return {ExactPolynomial(), a};
    std::vector<Rational> quot(static_cast<std::size_t>(dq) + 1);
    const Rational lead = b.leading();
    for (long i = dq; i >= 0; --i) {
        Rational f = rem[static_cast<std::size_t>(i + db)] / lead;
        quot[static_cast<std::size_t>(i)] = f;
        if (sgn(f) == 0) continue;
        for (long j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i + j)] -= f * b.coeff(static_cast<std::size_t>(j));
    }
    rem.resize(static_cast<std::size_t>(db) > rem.size() ? rem.size() : static_cast<std::size_t>(db));
    return {ExactPolynomial::from_coefficients(std::move(quot)),
            ExactPolynomial::from_coefficients(std::move(rem))};
}

ExactPolynomial gcd(const ExactPolynomial& a, const ExactPolynomial& b) {
    ExactPolynomial x = a, y = b;
    while (!y.is_zero()) {
        ExactPolynomial r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return (Rational(1) / x.leading()) * x;  // monic
}

ExactPolynomial squarefree_part(const ExactPolynomial& p) {
    if (p.degree() <= 0) return p;
    ExactPolynomial g = gcd(p, p.derivative());
    return divmod(p, g).first;
}

std::vector<std::pair<ExactPolynomial, unsigned>> squarefree_decomposition(const ExactPolynomial& p) {
    std::vector<std::pair<ExactPolynomial, unsigned>> out;
    if (p.degree() <= 0) return out;
    // Yun's algorithm
    ExactPolynomial d = p.derivative();
    ExactPolynomial a = gcd(p, d);
    ExactPolynomial b = divmod(p, a).first;
    ExactPolynomial c = divmod(d, a).first;
    ExactPolynomial z = c - b.derivative();
    unsigned i = 1;
    while (b.degree() > 0) {
        ExactPolynomial g = gcd(b, z);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = divmod(b, g).first;
        z = divmod(z, g).first - b.derivative();
        ++i;
    }
    return out;
}

Rational cauchy_root_bound(const ExactPolynomial& p) {
    if (p.degree() < 0) throw PreconditionError("root bound of the zero polynomial");
    Rational lead = abs(p.leading());
    Rational mx(0);
    for (long i = 0; i < p.degree(); ++i) {
        Rational a = abs(p.coeff(static_cast<std::size_t>(i)));
        if (a > mx) mx = a;
    }
    return Rational(1) + mx / lead;
}

}  // namespace lpsign
