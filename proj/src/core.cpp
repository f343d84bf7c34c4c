#include "nsg/core.hpp"

#include <algorithm>
#include <numeric>

namespace nsg {

GeneratorSet normalize(std::span<const Int> raw, std::size_t param_index) {
    if (raw.empty()) throw EmptyInputError("generator list is empty");
    GeneratorSet g;
    g.raw.assign(raw.begin(), raw.end());
    for (Int a : g.raw)
        if (a <= 0)
            throw NonPositiveGeneratorError("generator " + std::to_string(a) +
                                            " is not positive");
    g.sorted = g.raw;
    std::sort(g.sorted.begin(), g.sorted.end());
    g.sorted.erase(std::unique(g.sorted.begin(), g.sorted.end()),
                   g.sorted.end());
    g.lambda = 0;
    for (Int a : g.sorted) g.lambda = std::gcd(g.lambda, a);
    g.reduced.reserve(g.sorted.size());
    for (Int a : g.sorted) g.reduced.push_back(a / g.lambda);
    if (param_index >= g.sorted.size())
        throw Error("parameter index " + std::to_string(param_index) +
                    " out of range for " + std::to_string(g.sorted.size()) +
                    " generators");
    g.param_index = param_index;
    return g;
}

Int weighted_degree(const ExponentVector& k, const GeneratorSet& g) {
    if (k.size() != g.var_count() - 1)
        throw Error("exponent vector length does not match generator count");
    return MonomialOrder(g).qsum(k.exps);
}

Cmp compare(const GeneratorSet& g, Int e1, const ExponentVector& m1, Int e2,
            const ExponentVector& m2) {
    return MonomialOrder(g).compare(e1, m1.exps, e2, m2.exps);
}

}  // namespace nsg
