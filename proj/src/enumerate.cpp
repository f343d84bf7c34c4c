#include "nsg/enumerate.hpp"

namespace nsg {

std::vector<ExponentVector> level_vectors(const GeneratorSet& g, Int s,
                                          Int cap) {
    std::vector<ExponentVector> out;
    visit_level(g.var_count() - 1, s, cap, [&](std::span<const Int> k) {
        out.emplace_back(std::vector<Int>(k.begin(), k.end()));
    });
    return out;
}

Int count_level(const GeneratorSet& g, Int s, Int cap) {
    Int n = 0;
    visit_level(g.var_count() - 1, s, cap, [&](std::span<const Int>) { ++n; });
    return n;
}

LevelStream::LevelStream(const GeneratorSet& g, Int level, Int cap)
    : level_(level), cap_(cap), buffer_(level_vectors(g, level, cap)) {}

std::optional<ExponentVector> LevelStream::next() {
    if (pos_ >= buffer_.size()) return std::nullopt;
    return buffer_[pos_++];
}

}  // namespace nsg
