#include "alphc/hyphen.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "alphc/error.hpp"

namespace alphc {

HyphenationPatterns HyphenationPatterns::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open pattern file: " + path.string());
    return parse(in, path.string());
}

HyphenationPatterns HyphenationPatterns::parse(std::istream& in, const std::string& source_name) {
    HyphenationPatterns out;
    std::string line;
    size_t line_no = 0;
    auto fail = [&](const std::string& what) {
        throw IoError(source_name + ":" + std::to_string(line_no) + ": " + what);
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string_view s(line);
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        if (s.empty() || s.front() == '%') continue;

        Pattern p;
        if (s.front() == '.') {
            p.anchor_front = true;
            s.remove_prefix(1);
        }
        if (!s.empty() && s.back() == '.') {
            p.anchor_back = true;
            s.remove_suffix(1);
        }

        p.scores.push_back(0);
        bool saw_digit = false;
        for (char c : s) {
            if (c >= 'a' && c <= 'z') {
                p.letters.push_back(c);
                p.scores.push_back(0);
            } else if (c >= '0' && c <= '9') {
                if (p.scores.back() != 0) fail("two scores in a row");
                p.scores.back() = uint8_t(c - '0');
                saw_digit = true;
            } else {
                fail(std::string("unexpected character '") + c + "' in pattern");
            }
        }
        if (!saw_digit) fail("pattern has no digit");
        if (p.letters.empty()) fail("pattern has no letters");
        out.patterns_.push_back(std::move(p));
    }
    return out;
}

std::vector<std::string> HyphenationPatterns::syllabify(std::string_view word) const {
    if (word.empty()) throw Error("syllabify: empty word");

    std::vector<uint8_t> points(word.size() + 1, 0);
    for (const Pattern& p : patterns_) {
        if (p.letters.size() > word.size()) continue;
        size_t first = 0;
        size_t last = word.size() - p.letters.size();
        if (p.anchor_front) last = 0;
        if (p.anchor_back) first = last = word.size() - p.letters.size();
        if (p.anchor_front && p.anchor_back && p.letters.size() != word.size()) continue;
        for (size_t pos = first; pos <= last; ++pos) {
            if (word.compare(pos, p.letters.size(), p.letters) != 0) continue;
            for (size_t k = 0; k < p.scores.size(); ++k)
                points[pos + k] = std::max(points[pos + k], p.scores[k]);
        }
    }

    std::vector<std::string> parts;
    size_t start = 0;
    for (size_t i = 1; i < word.size(); ++i) {
        if (points[i] % 2 == 1) {
            parts.emplace_back(word.substr(start, i - start));
            start = i;
        }
    }
    parts.emplace_back(word.substr(start));
    return parts;
}

} // namespace alphc
