#include "alphc/tokenize.hpp"

#include <unordered_map>

#include "alphc/error.hpp"
#include "alphc/syllable.hpp"

namespace alphc {

std::string_view to_string(AlphabetKind kind) {
    switch (kind) {
        case AlphabetKind::Letters: return "letters";
        case AlphabetKind::LetterNgram: return "ngram";
        case AlphabetKind::Syllables: return "syllables";
        case AlphabetKind::Words: return "words";
        case AlphabetKind::WordPairs: return "wordpairs";
    }
    return "?";
}

std::optional<AlphabetKind> alphabet_kind_from_string(std::string_view name) {
    if (name == "letters") return AlphabetKind::Letters;
    if (name == "ngram") return AlphabetKind::LetterNgram;
    if (name == "syllables") return AlphabetKind::Syllables;
    if (name == "words") return AlphabetKind::Words;
    if (name == "wordpairs") return AlphabetKind::WordPairs;
    return std::nullopt;
}

AlphabetSpec AlphabetSpec::ngram(int n) {
    AlphabetSpec spec{AlphabetKind::LetterNgram, n, {}};
    spec.validate();
    return spec;
}

std::string AlphabetSpec::label() const {
    if (kind == AlphabetKind::LetterNgram) return "ngram" + std::to_string(n);
    return std::string(to_string(kind));
}

void AlphabetSpec::validate() const {
    if (kind == AlphabetKind::LetterNgram) {
        if (n < 2) throw ConfigError("letter n-gram alphabet requires n >= 2");
    } else if (n != 0) {
        throw ConfigError("n is only meaningful for the letter n-gram alphabet");
    }
    if (kind != AlphabetKind::Syllables && !syllabifier.empty())
        throw ConfigError("syllabifier is only meaningful for the syllable alphabet");
}

SyllabifierSet::SyllabifierSet() {
    add(Syllabifier("ssp", [](std::string_view word) { return syllabify_ssp(word); }));
}

void SyllabifierSet::add(Syllabifier s) {
    std::string id = s.id();
    by_id_.insert_or_assign(std::move(id), std::move(s));
}

const Syllabifier& SyllabifierSet::get(const std::string& id) const {
    auto it = by_id_.find(id.empty() ? std::string("ssp") : id);
    if (it == by_id_.end()) throw ConfigError("unknown syllabifier id: " + id);
    return it->second;
}

const SyllabifierSet& SyllabifierSet::builtin() {
    static const SyllabifierSet set;
    return set;
}

TokenStream tokenize(const NormalizedText& text, const AlphabetSpec& spec,
                     const SyllabifierSet& syllabifiers) {
    spec.validate();
    if (text.letters.empty()) throw Error("tokenize: empty text");

    TokenStream out;
    out.alphabet = spec;

    switch (spec.kind) {
        case AlphabetKind::Letters: {
            out.tokens.reserve(text.letters.size());
            for (char c : text.letters) out.tokens.emplace_back(1, c);
            break;
        }
        case AlphabetKind::LetterNgram: {
            size_t n = size_t(spec.n);
            out.tokens.reserve((text.letters.size() + n - 1) / n);
            for (size_t i = 0; i < text.letters.size(); i += n)
                out.tokens.emplace_back(text.letters.substr(i, n));
            break;
        }
        case AlphabetKind::Words: {
            out.tokens.reserve(text.word_count());
            for (size_t i = 0; i < text.word_count(); ++i)
                out.tokens.emplace_back(text.word(i));
            break;
        }
        case AlphabetKind::WordPairs: {
            out.tokens.reserve((text.word_count() + 1) / 2);
            for (size_t i = 0; i < text.word_count(); i += 2) {
                std::string pair(text.word(i));
                if (i + 1 < text.word_count()) pair += text.word(i + 1);
                out.tokens.push_back(std::move(pair));
            }
            break;
        }
        case AlphabetKind::Syllables: {
            const Syllabifier& syl = syllabifiers.get(spec.syllabifier);
            std::unordered_map<std::string, std::vector<std::string>> cache;
            for (size_t i = 0; i < text.word_count(); ++i) {
                std::string word(text.word(i));
                auto it = cache.find(word);
                if (it == cache.end()) it = cache.emplace(word, syl(word)).first;
                for (const std::string& part : it->second) out.tokens.push_back(part);
            }
            break;
        }
    }
    return out;
}

} // namespace alphc
