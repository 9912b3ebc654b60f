#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace alphc {

/// TeX-style hyphenation patterns: one pattern per line, lowercase letters
/// interleaved with digit scores, optional '.' anchors at either end,
/// '%' starts a comment line. Applied by max-scoring every match and
/// breaking where the accumulated score is odd.
class HyphenationPatterns {
public:
    /// Load from disk. Throws IoError with the offending line number on
    /// malformed input (e.g. a digit-free pattern).
    static HyphenationPatterns load(const std::filesystem::path& path);
    static HyphenationPatterns parse(std::istream& in, const std::string& source_name);

    /// Split a lowercase word at odd-scored interior positions. With no
    /// patterns (or no match) the word comes back whole.
    std::vector<std::string> syllabify(std::string_view word) const;

    size_t pattern_count() const { return patterns_.size(); }

private:
    struct Pattern {
        std::string letters;
        std::vector<uint8_t> scores; // letters.size() + 1 entries
        bool anchor_front = false;
        bool anchor_back = false;
    };
    std::vector<Pattern> patterns_;
};

} // namespace alphc
