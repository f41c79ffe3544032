#include "lpsign/signs.hpp"

#include "lpsign/errors.hpp"

namespace lpsign {

TailReport tail_check(const SignSequence& signs) {
    if (signs.size() < 3) throw PreconditionError("tail_check: need at least indices 0..2");
    TailReport rep;
    rep.horizon = signs.size() - 1;
    for (std::size_t n = 1; n + 1 <= rep.horizon; ++n) {
        Sign a = signs.at(n - 1), b = signs.at(n + 1);
        if (!is_certain(a) || !is_certain(b)) {
            rep.indeterminate_indices.push_back(n);
            continue;
        }
        if (is_nonzero(a) && is_nonzero(b) && a == b) rep.violations.push_back(n);
    }
    if (!rep.violations.empty()) {
        rep.n0_empirical = rep.violations.back();
        rep.clean_tail_observed = rep.n0_empirical < rep.horizon - 1;
    }
    return rep;
}

std::vector<std::size_t> pattern_scan(const SignSequence& signs, const std::vector<int>& pattern) {
    if (pattern.empty()) throw PreconditionError("pattern_scan: empty pattern");
    for (int v : pattern)
        if (v != 1 && v != -1) throw PreconditionError("pattern_scan: pattern entries must be +/-1");
    std::vector<std::size_t> out;
    if (pattern.size() > signs.size()) return out;
    for (std::size_t start = 0; start + pattern.size() <= signs.size(); ++start) {
        bool ok = true;
        for (std::size_t j = 0; j < pattern.size() && ok; ++j) {
            Sign s = signs.at(start + j);
            ok = is_nonzero(s) && sign_value(s) == pattern[j];
        }
        if (ok) out.push_back(start);
    }
    return out;
}

std::string render(const SignSequence& signs) {
    std::string out;
    out.reserve(signs.size());
    for (Sign s : signs.entries) out.push_back(sign_char(s));
    return out;
}

}  // namespace lpsign
