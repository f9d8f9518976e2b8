#ifndef SFX_IO_CORPUS_HPP
#define SFX_IO_CORPUS_HPP

#include <string>
#include <string_view>
#include <vector>

namespace sfx {

struct CorpusEntry {
    std::string_view name;
    std::string_view text;
};

// Documents bundled at build time, sorted by name.
const std::vector<CorpusEntry>& corpus();
const CorpusEntry* find_corpus(std::string_view name);

}  // namespace sfx

#endif
