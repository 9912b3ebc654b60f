#include "alphc/syllable.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_set>

#include "alphc/error.hpp"

namespace alphc {

const SonorityScale& SonorityScale::english() {
    static const SonorityScale scale = [] {
        SonorityScale s;
        auto set = [&s](std::string_view letters, int r) {
            for (char c : letters) s.rank[size_t(c - 'a')] = r;
        };
        set("a", 11);
        set("eo", 10);
        set("iu", 9);
        set("jwy", 7); // glides
        set("lr", 6);  // liquids
        set("mn", 5);  // nasals
        set("zv", 4);  // voiced fricatives
        set("fsh", 3); // voiceless fricatives
        set("bdg", 2); // voiced stops
        set("ptkcqx", 1);
        return s;
    }();
    return scale;
}

namespace {

// Units the walk never divides: consonant digraphs plus the doubled
// ss/ll, which always close the syllable on their left.
bool is_protected_pair(char a, char b) {
    if (a == 's' && (b == 'h' || b == 's')) return true;
    if (a == 'l' && b == 'l') return true;
    if (b == 'h' && (a == 't' || a == 'p' || a == 'c' || a == 'w')) return true;
    return false;
}

bool is_coda_double(std::string_view unit) {
    return unit == "ss" || unit == "ll";
}

// Written-English word-initial consonant clusters, for the onset
// legality check at sonority minima.
const std::unordered_set<std::string_view>& legal_onsets() {
    static const std::unordered_set<std::string_view> set = {
        "bl", "br", "cl", "cr", "dr", "dw", "fl", "fr", "gl", "gr",
        "gn", "kn", "mn", "pl", "pn", "pr", "ps", "pt", "sc", "scl",
        "scr", "sk", "sl", "sm", "sn", "sp", "sph", "spl", "spr", "sq",
        "st", "str", "sw", "tr", "ts", "tw", "wr", "rh",
        "thr", "thw", "shr", "chr", "chl", "phl", "phr", "sch",
    };
    return set;
}

struct Unit {
    std::string_view text;
    int value = 0;
    bool nucleus = false;
};

} // namespace

std::vector<std::string> syllabify_ssp(std::string_view word, const SonorityScale& scale) {
    if (word.empty()) throw Error("syllabify: empty word");
    bool has_true_vowel = false;
    for (char c : word) {
        if (c < 'a' || c > 'z') throw Error("syllabify: word must be lowercase a-z");
        has_true_vowel = has_true_vowel || SonorityScale::is_vowel(c);
    }

    bool y_is_nucleus = scale.y_policy == SonorityScale::YPolicy::Always ||
                        (scale.y_policy == SonorityScale::YPolicy::PromoteWhenNoVowel &&
                         !has_true_vowel);
    auto is_nucleus_letter = [&](char c) {
        return SonorityScale::is_vowel(c) || (c == 'y' && y_is_nucleus);
    };

    // Greedy left-to-right scan into indivisible units.
    std::vector<Unit> units;
    for (size_t i = 0; i < word.size();) {
        size_t len = 1;
        if (i + 1 < word.size() && is_protected_pair(word[i], word[i + 1]) &&
            !is_nucleus_letter(word[i]) && !is_nucleus_letter(word[i + 1]))
            len = 2;
        Unit u;
        u.text = word.substr(i, len);
        u.value = std::max(scale.letter_rank(word[i]),
                           len == 2 ? scale.letter_rank(word[i + 1]) : 0);
        u.nucleus = len == 1 && is_nucleus_letter(word[i]);
        // a promoted y counts as a high vowel
        if (u.nucleus && word[i] == 'y') u.value = std::max(u.value, 9);
        units.push_back(u);
        i += len;
    }

    bool any_nucleus = std::any_of(units.begin(), units.end(),
                                   [](const Unit& u) { return u.nucleus; });
    if (!any_nucleus || units.size() < 3) return {std::string(word)};

    // For a sonority minimum before units[i]: is the consonant run from i
    // up to the next nucleus a legal onset? Runs that hit the end of the
    // word are codas, not onsets, and stay out of this check.
    auto break_before_is_legal = [&](size_t i) {
        std::string cluster;
        size_t n_units = 0;
        for (size_t j = i; j < units.size(); ++j) {
            if (units[j].nucleus)
                return n_units == 1 || legal_onsets().count(cluster) > 0;
            cluster += units[j].text;
            ++n_units;
        }
        return true; // word-final cluster: plain minimum break
    };

    std::vector<std::string> raw;
    std::string current(units[0].text);
    auto emit = [&] {
        if (!current.empty()) raw.push_back(std::move(current));
        current.clear();
    };

    for (size_t i = 1; i + 1 < units.size(); ++i) {
        const Unit& u = units[i];
        int prev = units[i - 1].value;
        int next = units[i + 1].value;
        if (u.nucleus) {
            current += u.text;
        } else if (prev >= u.value && u.value == next) {
            current += u.text; // plateau: close the syllable after it
            emit();
        } else if (prev > u.value && u.value < next) {
            if (is_coda_double(u.text) || !break_before_is_legal(i)) {
                current += u.text;
                emit();
            } else {
                emit();
                current += u.text;
            }
        } else {
            current += u.text;
        }
    }
    current += units.back().text;
    emit();

    // Merge nucleus-less fragments forward; a trailing fragment joins the
    // last syllable only in words with a real vowel, so promoted-y words
    // keep their sonority tail (rhy-thm).
    auto has_nucleus = [&](const std::string& s) {
        return std::any_of(s.begin(), s.end(), is_nucleus_letter);
    };
    std::vector<std::string> out;
    std::string carry;
    for (std::string& syl : raw) {
        if (has_nucleus(syl)) {
            out.push_back(carry + syl);
            carry.clear();
        } else {
            carry += syl;
        }
    }
    if (!carry.empty()) {
        if (out.empty())
            out.push_back(carry);
        else if (has_true_vowel)
            out.back() += carry;
        else
            out.push_back(carry);
    }

    assert(!out.empty());
    return out;
}

} // namespace alphc
