#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace alphc {

/// Letter-level sonority classes. Vowels occupy the top classes, glides
/// below them, then liquids, nasals, voiced fricatives, voiceless
/// fricatives, voiced stops, voiceless stops.
struct SonorityScale {
    enum class YPolicy {
        PromoteWhenNoVowel, // y acts as a nucleus only in words with no a/e/i/o/u
        Never,
        Always,
    };

    std::array<int, 26> rank{};
    YPolicy y_policy = YPolicy::PromoteWhenNoVowel;

    int letter_rank(char c) const { return rank[size_t(c - 'a')]; }
    static bool is_vowel(char c) {
        return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
    }

    /// The shipped English scale.
    static const SonorityScale& english();
};

/// Split a lowercase a-z word into syllables by sonority sequencing:
/// boundaries fall at sonority minima between nuclei, consonant digraphs
/// (th sh ph ch wh) and protected doubles (ss ll) are never divided, and
/// onsets that cannot begin an English word push the boundary right
/// (ad-mit rather than a-dmit).
///
/// Total on valid input: the syllables concatenate back to the word, and
/// every syllable carries a nucleus whenever the word has an a/e/i/o/u
/// vowel at all. Words with no nucleus come back whole.
std::vector<std::string> syllabify_ssp(std::string_view word,
                                       const SonorityScale& scale = SonorityScale::english());

} // namespace alphc
