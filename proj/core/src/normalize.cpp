#include "alphc/normalize.hpp"

#include "alphc/error.hpp"

namespace alphc {

namespace {

bool is_ascii_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

} // namespace

NormalizedText normalize(std::string_view raw) {
    NormalizedText out;
    out.letters.reserve(raw.size());
    size_t word_start = 0;
    bool in_word = false;

    auto close_word = [&] {
        if (in_word && out.letters.size() > word_start)
            out.word_spans.push_back({word_start, out.letters.size()});
        in_word = false;
    };

    for (char c : raw) {
        if (is_ascii_space(c)) {
            close_word();
            continue;
        }
        if (!in_word) {
            in_word = true;
            word_start = out.letters.size();
        }
        if (c >= 'a' && c <= 'z') {
            out.letters.push_back(c);
        } else if (c >= 'A' && c <= 'Z') {
            out.letters.push_back(char(c - 'A' + 'a'));
        }
        // anything else (digits, punctuation, non-ASCII bytes) is dropped
        // without splitting the word
    }
    close_word();

    if (out.letters.empty()) throw Error("empty text");
    return out;
}

} // namespace alphc
