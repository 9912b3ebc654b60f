#include "alphc/container.hpp"

#include <bit>
#include <cstring>

#include "alphc/error.hpp"
#include "alphc/gamma.hpp"
#include "alphc/normalize.hpp"

namespace alphc {

void ContainerConfig::validate() const {
    alphabet.validate();
    if (format == CodebookFormat::Flat && repr == LetterRepr::LVariable)
        throw ConfigError(
            "flat codebook format requires a fixed-width letter representation (l8 or l5)");
}

CompressedContainer compress(std::string_view raw, const ContainerConfig& config,
                             const SyllabifierSet& syllabifiers) {
    config.validate();

    NormalizedText text = normalize(raw);
    TokenStream tokens = tokenize(text, config.alphabet, syllabifiers);
    FrequencyTable freqs = count_frequencies(tokens);
    CanonicalCode code = CanonicalCode::from_frequencies(freqs);
    BitString payload = encode_stream(tokens, code);
    BitString codebook = config.format == CodebookFormat::Blocks
                             ? serialize_blocks(code, config.repr)
                             : serialize_flat(code, config.repr);

    BitString stream;
    for (char c : kContainerMagic) stream.append_bits(uint64_t(uint8_t(c)), 8);
    stream.append_bits(kContainerVersion, 8);
    stream.append_bits(uint64_t(config.alphabet.kind), 8);
    stream.append_bits(uint64_t(uint8_t(config.alphabet.n)), 8);
    stream.append_bits(uint64_t(config.repr), 8);
    stream.append_bits(uint64_t(config.format), 8);

    gamma_append_int(stream, tokens.size());
    stream.append(codebook);
    gamma_append(stream, payload);

    CompressedContainer out;
    out.config = config;
    out.info.token_count = tokens.size();
    out.info.letters_count = text.letters.size();
    out.info.header_bits = 80;
    out.info.token_field_bits = gamma_int_length(tokens.size());
    out.info.codebook_bits = codebook.size();
    out.info.payload_bits = payload.size();
    out.info.payload_field_bits = gamma_length(payload.size());
    out.bytes = stream.bytes();
    out.info.total_bits = out.bytes.size() * 8;
    return out;
}

DecompressResult decompress(std::span<const uint8_t> bytes) {
    if (bytes.size() < 10) throw CorruptionError("container too short for its header");
    if (std::memcmp(bytes.data(), kContainerMagic, 5) != 0)
        throw CorruptionError("bad container magic");
    if (bytes[5] != kContainerVersion)
        throw CorruptionError("unsupported container version " + std::to_string(bytes[5]));

    DecompressResult out;
    if (bytes[6] > uint8_t(AlphabetKind::WordPairs))
        throw CorruptionError("unknown alphabet kind in container");
    out.config.alphabet.kind = AlphabetKind(bytes[6]);
    out.config.alphabet.n = bytes[7];
    if (out.config.alphabet.kind == AlphabetKind::LetterNgram) {
        if (out.config.alphabet.n < 2) throw CorruptionError("container declares n-grams with n < 2");
    } else if (out.config.alphabet.n != 0) {
        throw CorruptionError("container declares n for a non-n-gram alphabet");
    }
    if (bytes[8] > uint8_t(LetterRepr::LVariable))
        throw CorruptionError("unknown letter representation in container");
    out.config.repr = LetterRepr(bytes[8]);
    if (bytes[9] > uint8_t(CodebookFormat::Flat))
        throw CorruptionError("unknown codebook format in container");
    out.config.format = CodebookFormat(bytes[9]);
    if (out.config.format == CodebookFormat::Flat && out.config.repr == LetterRepr::LVariable)
        throw CorruptionError("container declares an impossible flat+lvar codebook");

    BitReader r(bytes.subspan(10), (bytes.size() - 10) * 8);
    uint64_t n = gamma_decode_int(r);
    out.info.token_count = n;
    out.info.header_bits = 80;
    out.info.token_field_bits = r.position();

    size_t codebook_start = r.position();
    std::vector<std::pair<std::string, BitString>> flat_pairs;
    CanonicalCode code;
    if (out.config.format == CodebookFormat::Blocks) {
        code = deserialize_blocks(r, out.config.repr);
    } else {
        for (CodebookEntry& e : deserialize_flat_until_payload(r, out.config.repr))
            flat_pairs.emplace_back(std::move(e.symbol), std::move(e.codeword));
        if (flat_pairs.empty()) throw CorruptionError("container has an empty codebook");
    }
    out.info.codebook_bits = r.position() - codebook_start;

    size_t payload_field_start = r.position();
    BitString payload = gamma_decode(r);
    out.info.payload_field_bits = r.position() - payload_field_start;
    out.info.payload_bits = payload.size();
    out.info.total_bits = bytes.size() * 8;

    if (r.remaining() >= 8) throw CorruptionError("trailing bytes after container payload");
    while (r.remaining() > 0)
        if (r.read_bit()) throw CorruptionError("nonzero padding bits after container payload");

    PrefixDecoder decoder = out.config.format == CodebookFormat::Blocks
                                ? PrefixDecoder(code)
                                : PrefixDecoder(flat_pairs);
    BitReader payload_reader(payload);
    out.tokens.reserve(n);
    for (uint64_t i = 0; i < n; ++i) {
        try {
            out.tokens.push_back(decoder.decode_one(payload_reader));
        } catch (const TruncationError&) {
            throw CorruptionError("payload ends before the declared token count");
        }
    }
    if (payload_reader.remaining() != 0)
        throw CorruptionError("payload has leftover bits after the declared token count");

    size_t letters = 0;
    for (const std::string& t : out.tokens) letters += t.size();
    out.letters.reserve(letters);
    for (const std::string& t : out.tokens) out.letters += t;
    out.info.letters_count = out.letters.size();
    return out;
}

uint64_t kolmogorov_bound(uint64_t codebook_bits, uint64_t payload_bits) {
    if (payload_bits == 0) throw Error("kolmogorov bound needs a non-empty payload");
    // ceil(log2(x)) = bit_width(x - 1)
    uint64_t ceil_log2 = payload_bits == 1 ? 0 : std::bit_width(payload_bits - 1);
    return codebook_bits + payload_bits + 2 * ceil_log2;
}

} // namespace alphc
