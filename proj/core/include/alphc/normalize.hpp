#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace alphc {

/// Half-open [begin, end) index range into NormalizedText::letters.
struct WordSpan {
    size_t begin = 0;
    size_t end = 0;
    size_t length() const { return end - begin; }
    friend bool operator==(const WordSpan&, const WordSpan&) = default;
};

/// Canonical input to every tokenizer: lowercase a-z letters with word
/// boundaries. Spans tile the letter sequence completely and in order.
struct NormalizedText {
    std::string letters;
    std::vector<WordSpan> word_spans;

    size_t word_count() const { return word_spans.size(); }
    std::string_view word(size_t i) const {
        const WordSpan& s = word_spans[i];
        return std::string_view(letters).substr(s.begin, s.length());
    }
};

/// Lowercase and strip raw text down to a-z letters.
///
/// Words are the maximal ASCII-whitespace-delimited chunks of the input;
/// within a chunk every non-letter byte is dropped and the surviving
/// letters merge into one word ("Don't" -> "dont"). Chunks with no letters
/// vanish. Throws Error("empty text") when nothing survives.
NormalizedText normalize(std::string_view raw);

} // namespace alphc
