#include "birat/corpus.hpp"

#include "birat/error.hpp"

namespace birat {

const std::vector<CorpusEntry>& reference_corpus() {
    static const std::vector<CorpusEntry> corpus = [] {
        const GaussianRational I = GaussianRational::i();
        auto e = [](const char* name, Subcase s, Triple a, Triple b, Triple g, std::size_t n) {
            return CorpusEntry{name, s, ParameterTuple(a, b, g), n};
        };
        return std::vector<CorpusEntry>{
            e("cd2-i", Subcase::CD2_i, {0, 1, 1}, {0, 1, 0}, {0, 1, 1}, 8),
            e("cd2-ii", Subcase::CD2_ii, {0, 0, 1}, {0, 1, 0}, {0, 0, 1}, 10),
            e("cd2-iii", Subcase::CD2_iii, {0, 1, 0}, {0, 0, 1}, {0, 1, 0}, 12),
            e("cd3-i", Subcase::CD3_i, {0, 1, 2}, {1, 1, 1}, {0, 1, 1}, 8),
            e("cd3-ii", Subcase::CD3_ii, {0, 0, 1}, {1, 1, 1}, {0, 1, 1}, 10),
            e("cd3-iii", Subcase::CD3_iii, {0, 1, 0}, {1, 1, 1}, {0, 1, 1}, 12),
            e("g1-i-a", Subcase::G1_i_a, {0, 1, 1}, {1, 0, 0}, {1, 0, 1}, 12),
            e("g1-i-b", Subcase::G1_i_b, {0, 1, 1}, {-1, 0, 0}, {1, 0, 1}, 12),
            e("g1-i-c", Subcase::G1_i_c, {0, I, 1}, {1, 0, 0}, {0, 0, 1}, 12),
            e("g1-ii-a", Subcase::G1_ii_a, {0, 2, 0}, {1, 0, 0}, {1, 0, 1}, 12),
            e("g1-ii-b", Subcase::G1_ii_b, {0, 2, 0}, {-1, 0, 0}, {1, 0, 1}, 12),
            e("g2-a", Subcase::G2_a, {0, 1, 1}, {1, 0, 0}, {0, 1, 0}, 10),
            e("g2-b1", Subcase::G2_b1, {0, 0, 1}, {1, 0, 0}, {1, 1, 0}, 12),
            e("g2-b2", Subcase::G2_b2, {0, 0, 1}, {-1, 0, 0}, {1, 1, 0}, 12),
        };
    }();
    return corpus;
}

const CorpusEntry& corpus_entry(Subcase s) {
    for (const auto& e : reference_corpus())
        if (e.subcase == s) return e;
    throw InvariantViolation("no corpus entry for " + to_string(s));
}

} // namespace birat
