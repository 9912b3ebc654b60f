#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alphc/normalize.hpp"

namespace alphc {

enum class AlphabetKind : uint8_t {
    Letters = 0,
    LetterNgram = 1,
    Syllables = 2,
    Words = 3,
    WordPairs = 4,
};

std::string_view to_string(AlphabetKind kind);
std::optional<AlphabetKind> alphabet_kind_from_string(std::string_view name);

/// Which alphabet a text is segmented into. `n` is set only for letter
/// n-grams (n >= 2); `syllabifier` names the syllabifier only for the
/// syllable alphabet.
struct AlphabetSpec {
    AlphabetKind kind = AlphabetKind::Letters;
    int n = 0;
    std::string syllabifier;

    static AlphabetSpec letters() { return {AlphabetKind::Letters, 0, {}}; }
    static AlphabetSpec ngram(int n);
    static AlphabetSpec syllables(std::string syllabifier_id = "ssp") {
        return {AlphabetKind::Syllables, 0, std::move(syllabifier_id)};
    }
    static AlphabetSpec words() { return {AlphabetKind::Words, 0, {}}; }
    static AlphabetSpec word_pairs() { return {AlphabetKind::WordPairs, 0, {}}; }

    /// Short stable name: "letters", "ngram3", "syllables", "words",
    /// "wordpairs".
    std::string label() const;

    void validate() const; // throws ConfigError

    friend bool operator==(const AlphabetSpec&, const AlphabetSpec&) = default;
};

/// Ordered symbol sequence produced by one tokenizer. Joining the tokens
/// reproduces the normalized letter sequence exactly.
struct TokenStream {
    std::vector<std::string> tokens;
    AlphabetSpec alphabet;

    size_t size() const { return tokens.size(); }
};

/// Named word -> syllables function.
class Syllabifier {
public:
    using Fn = std::function<std::vector<std::string>(std::string_view)>;

    Syllabifier(std::string id, Fn fn) : id_(std::move(id)), fn_(std::move(fn)) {}

    const std::string& id() const { return id_; }
    std::vector<std::string> operator()(std::string_view word) const { return fn_(word); }

private:
    std::string id_;
    Fn fn_;
};

/// Registry resolving AlphabetSpec::syllabifier ids. Always contains the
/// built-in "ssp"; pattern-file syllabifiers are added by the caller.
class SyllabifierSet {
public:
    SyllabifierSet();

    void add(Syllabifier s);
    const Syllabifier& get(const std::string& id) const; // ConfigError on unknown id

    static const SyllabifierSet& builtin();

private:
    std::map<std::string, Syllabifier> by_id_;
};

/// Segment the text per `spec`. Letter n-grams partition the letter
/// sequence (last block may be short), word pairs join consecutive words
/// (odd trailing word stays alone), syllables are produced per word in
/// reading order.
TokenStream tokenize(const NormalizedText& text, const AlphabetSpec& spec,
                     const SyllabifierSet& syllabifiers = SyllabifierSet::builtin());

} // namespace alphc
