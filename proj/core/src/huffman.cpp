#include "alphc/huffman.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

#include "alphc/error.hpp"

namespace alphc {

namespace {

constexpr uint32_t kMaxCodeLength = 63;

// Exact Kraft check: sum of 2^(max-l) must equal 2^max.
bool kraft_equality(std::span<const CodeEntry> entries) {
    uint32_t max_len = 0;
    for (const CodeEntry& e : entries) max_len = std::max(max_len, e.length);
    unsigned __int128 sum = 0;
    for (const CodeEntry& e : entries) sum += (unsigned __int128)(1) << (max_len - e.length);
    return sum == (unsigned __int128)(1) << max_len;
}

} // namespace

CanonicalCode CanonicalCode::from_frequencies(const FrequencyTable& freqs) {
    size_t m = freqs.distinct();
    if (m == 0) throw Error("cannot build a code for an empty frequency table");

    CanonicalCode out;
    out.entries_.resize(m);
    for (size_t i = 0; i < m; ++i) out.entries_[i].symbol = freqs.entries[i].first;

    if (m == 1) {
        // Degenerate tree: a 0-bit codeword would make the stream
        // undecodable by count, so the lone symbol costs one bit.
        out.entries_[0].length = 1;
    } else {
        // Huffman over (weight, min symbol index); freqs.entries are
        // sorted, so the index order is the lexicographic order.
        struct Node {
            uint64_t weight;
            uint32_t min_sym;
            int32_t left, right; // -1/-1 for leaves
            int32_t leaf;
        };
        std::vector<Node> nodes;
        nodes.reserve(2 * m);
        auto cmp = [&nodes](int32_t a, int32_t b) {
            if (nodes[a].weight != nodes[b].weight) return nodes[a].weight > nodes[b].weight;
            return nodes[a].min_sym > nodes[b].min_sym;
        };
        std::priority_queue<int32_t, std::vector<int32_t>, decltype(cmp)> heap(cmp);
        for (size_t i = 0; i < m; ++i) {
            nodes.push_back({freqs.entries[i].second, uint32_t(i), -1, -1, int32_t(i)});
            heap.push(int32_t(i));
        }
        while (heap.size() > 1) {
            int32_t a = heap.top();
            heap.pop();
            int32_t b = heap.top();
            heap.pop();
            nodes.push_back({nodes[a].weight + nodes[b].weight,
                             std::min(nodes[a].min_sym, nodes[b].min_sym), a, b, -1});
            heap.push(int32_t(nodes.size() - 1));
        }
        // Depth-first depth assignment.
        std::vector<std::pair<int32_t, uint32_t>> stack{{heap.top(), 0}};
        while (!stack.empty()) {
            auto [idx, depth] = stack.back();
            stack.pop_back();
            const Node& n = nodes[idx];
            if (n.leaf >= 0) {
                if (depth > kMaxCodeLength) throw Error("codeword length exceeds 63 bits");
                out.entries_[size_t(n.leaf)].length = depth;
            } else {
                stack.push_back({n.left, depth + 1});
                stack.push_back({n.right, depth + 1});
            }
        }
    }

    std::stable_sort(out.entries_.begin(), out.entries_.end(),
                     [](const CodeEntry& a, const CodeEntry& b) { return a.length < b.length; });
    out.assign_codewords();
    out.build_index();
    assert(m == 1 || kraft_equality(out.entries_));
    return out;
}

CanonicalCode CanonicalCode::from_lengths(
    std::span<const std::pair<std::string, uint32_t>> lengths) {
    if (lengths.empty()) throw Error("cannot build a code from zero lengths");

    CanonicalCode out;
    out.entries_.reserve(lengths.size());
    for (const auto& [symbol, length] : lengths) {
        if (length == 0 || length > kMaxCodeLength)
            throw CorruptionError("codeword length out of range");
        out.entries_.push_back({symbol, length, 0});
    }
    std::sort(out.entries_.begin(), out.entries_.end(), [](const CodeEntry& a, const CodeEntry& b) {
        return a.length != b.length ? a.length < b.length : a.symbol < b.symbol;
    });
    for (size_t i = 1; i < out.entries_.size(); ++i)
        if (out.entries_[i].symbol == out.entries_[i - 1].symbol)
            throw CorruptionError("duplicate symbol in codebook: " + out.entries_[i].symbol);

    if (out.entries_.size() == 1) {
        if (out.entries_[0].length != 1)
            throw CorruptionError("single-symbol code must use one bit");
    } else if (!kraft_equality(out.entries_)) {
        throw CorruptionError("code lengths violate Kraft equality");
    }
    out.assign_codewords();
    out.build_index();
    return out;
}

void CanonicalCode::assign_codewords() {
    uint64_t code = 0;
    uint32_t prev_len = entries_.empty() ? 0 : entries_.front().length;
    for (CodeEntry& e : entries_) {
        code <<= (e.length - prev_len);
        e.code = code;
        ++code;
        prev_len = e.length;
    }
}

void CanonicalCode::build_index() {
    index_.clear();
    index_.reserve(entries_.size());
    for (size_t i = 0; i < entries_.size(); ++i) index_.emplace(entries_[i].symbol, uint32_t(i));
}

const CodeEntry* CanonicalCode::find(std::string_view symbol) const {
    auto it = index_.find(symbol);
    return it == index_.end() ? nullptr : &entries_[it->second];
}

BitString CanonicalCode::codeword_bits(const CodeEntry& e) const {
    BitString b;
    b.append_bits(e.code, e.length);
    return b;
}

BitString encode_stream(const TokenStream& tokens, const CanonicalCode& code) {
    BitString out;
    for (const std::string& t : tokens.tokens) {
        const CodeEntry* e = code.find(t);
        if (!e) throw ConfigError("token not present in code: \"" + t + "\"");
        out.append_bits(e->code, e->length);
    }
    return out;
}

uint64_t encoded_length_bits(const FrequencyTable& freqs, const CanonicalCode& code) {
    uint64_t bits = 0;
    for (const auto& [symbol, count] : freqs.entries) {
        const CodeEntry* e = code.find(symbol);
        if (!e) throw ConfigError("token not present in code: \"" + symbol + "\"");
        bits += count * e->length;
    }
    return bits;
}

TokenStream decode_stream(BitReader& bits, const CanonicalCode& code, uint64_t count,
                          AlphabetSpec alphabet) {
    PrefixDecoder decoder(code);
    TokenStream out;
    out.alphabet = std::move(alphabet);
    out.tokens.reserve(count);
    for (uint64_t i = 0; i < count; ++i) out.tokens.push_back(decoder.decode_one(bits));
    return out;
}

PrefixDecoder::PrefixDecoder(const CanonicalCode& code) {
    nodes_.emplace_back();
    for (const CodeEntry& e : code.entries()) insert(e.symbol, e.code, e.length);
}

PrefixDecoder::PrefixDecoder(std::span<const std::pair<std::string, BitString>> codebook) {
    nodes_.emplace_back();
    for (const auto& [symbol, bits] : codebook) insert(symbol, bits);
}

void PrefixDecoder::insert(const std::string& symbol, uint64_t code, uint32_t length) {
    if (length == 0) throw Error("empty codeword for symbol: " + symbol);
    int32_t node = 0;
    for (uint32_t i = length; i-- > 0;) {
        if (nodes_[size_t(node)].leaf >= 0)
            throw CorruptionError("codebook is not prefix-free at symbol: " + symbol);
        unsigned b = (code >> i) & 1u;
        int32_t next = nodes_[size_t(node)].child[b];
        if (next < 0) {
            next = int32_t(nodes_.size());
            nodes_[size_t(node)].child[b] = next;
            nodes_.emplace_back();
        }
        node = next;
    }
    Node& n = nodes_[size_t(node)];
    if (n.leaf >= 0 || n.child[0] >= 0 || n.child[1] >= 0)
        throw CorruptionError("codebook is not prefix-free at symbol: " + symbol);
    n.leaf = int32_t(symbols_.size());
    symbols_.push_back(symbol);
}

void PrefixDecoder::insert(const std::string& symbol, const BitString& bits) {
    if (bits.size() > 63) throw Error("codeword longer than 63 bits");
    uint64_t code = 0;
    for (size_t i = 0; i < bits.size(); ++i) code = (code << 1) | uint64_t(bits.bit(i));
    insert(symbol, code, uint32_t(bits.size()));
}

const std::string& PrefixDecoder::decode_one(BitReader& r) const {
    int32_t node = 0;
    while (nodes_[size_t(node)].leaf < 0) {
        unsigned b = r.read_bit() ? 1u : 0u;
        node = nodes_[size_t(node)].child[b];
        if (node < 0) throw CorruptionError("bit pattern does not match any codeword");
    }
    return symbols_[size_t(nodes_[size_t(node)].leaf)];
}

} // namespace alphc
