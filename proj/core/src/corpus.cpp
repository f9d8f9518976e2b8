#include "sfx/io/corpus.hpp"

#include <algorithm>

namespace sfx {

namespace detail {
extern const std::vector<CorpusEntry> kCorpus;
}

const std::vector<CorpusEntry>& corpus() { return detail::kCorpus; }

const CorpusEntry* find_corpus(std::string_view name) {
    const auto& c = corpus();
    auto it = std::find_if(c.begin(), c.end(), [&](const CorpusEntry& e) { return e.name == name; });
    return it == c.end() ? nullptr : &*it;
}

}  // namespace sfx
