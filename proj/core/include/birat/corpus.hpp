#pragma once

#include "birat/case_classifier.hpp"

#include <string>
#include <vector>

namespace birat {

struct CorpusEntry {
    std::string name;
    Subcase subcase;
    ParameterTuple params;
    std::size_t iterations; // enough terms for the cross-check
};

// One tuple per subcase tag, in subcase order.
const std::vector<CorpusEntry>& reference_corpus();

const CorpusEntry& corpus_entry(Subcase s);

} // namespace birat
