// alphc -- single-text compression over interchangeable alphabets.
//
// Subcommands:
//   compress    text -> container file
//   decompress  container file -> recovered letter sequence
//   analyze     per-text CSV across alphabets/representations/formats
//   corpus      directory-level study: per-book dump, win fractions,
//               rank-prefix curves

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "alphc/container.hpp"
#include "alphc/corpus.hpp"
#include "alphc/csv.hpp"
#include "alphc/error.hpp"
#include "alphc/hyphen.hpp"
#include "alphc/metrics.hpp"

namespace fs = std::filesystem;

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return std::move(buf).str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw alphc::IoError("cannot open: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw alphc::IoError("read failed: " + path);
    return std::move(buf).str();
}

void write_output(const std::string& path, const char* data, size_t size) {
    if (path == "-") {
        std::cout.write(data, std::streamsize(size));
        std::cout.flush();
        if (!std::cout) throw alphc::IoError("write to stdout failed");
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw alphc::IoError("cannot create: " + path);
    out.write(data, std::streamsize(size));
    out.flush();
    if (!out) throw alphc::IoError("write failed: " + path);
}

struct AlphabetFlags {
    std::string alphabet = "letters";
    int n = 2;
    std::string repr = "l8";
    std::string codebook = "blocks";
    std::string syllabifier = "ssp";
};

void add_alphabet_flags(CLI::App* cmd, AlphabetFlags& f) {
    cmd->add_option("--alphabet", f.alphabet, "Alphabet kind")
        ->check(CLI::IsMember({"letters", "ngram", "syllables", "words", "wordpairs"}));
    cmd->add_option("--n", f.n, "Gram size for --alphabet ngram")->check(CLI::Range(2, 255));
    cmd->add_option("--repr", f.repr, "Letter representation inside the codebook")
        ->check(CLI::IsMember({"l8", "l5", "lvar"}));
    cmd->add_option("--codebook", f.codebook, "Codebook wire format")
        ->check(CLI::IsMember({"blocks", "flat"}));
    cmd->add_option("--syllabifier", f.syllabifier,
                    "Syllabifier: 'ssp' or 'patterns:<file>' (TeX-style hyphenation patterns)");
}

alphc::SyllabifierSet make_syllabifiers(const std::string& id) {
    alphc::SyllabifierSet set;
    constexpr std::string_view prefix = "patterns:";
    if (id.rfind(prefix, 0) == 0) {
        auto patterns =
            std::make_shared<alphc::HyphenationPatterns>(alphc::HyphenationPatterns::load(
                fs::path(id.substr(prefix.size()))));
        set.add(alphc::Syllabifier(
            id, [patterns](std::string_view word) { return patterns->syllabify(word); }));
    }
    return set;
}

alphc::AlphabetSpec make_alphabet(const AlphabetFlags& f) {
    auto kind = alphc::alphabet_kind_from_string(f.alphabet);
    if (!kind) throw alphc::ConfigError("unknown alphabet: " + f.alphabet);
    alphc::AlphabetSpec spec;
    spec.kind = *kind;
    if (*kind == alphc::AlphabetKind::LetterNgram) spec.n = f.n;
    if (*kind == alphc::AlphabetKind::Syllables) spec.syllabifier = f.syllabifier;
    spec.validate();
    return spec;
}

alphc::ContainerConfig make_config(const AlphabetFlags& f) {
    alphc::ContainerConfig cfg;
    cfg.alphabet = make_alphabet(f);
    cfg.repr = *alphc::letter_repr_from_string(f.repr);
    cfg.format = *alphc::codebook_format_from_string(f.codebook);
    cfg.validate();
    return cfg;
}

int cmd_compress(const std::string& input, const std::string& output, const AlphabetFlags& f) {
    alphc::ContainerConfig cfg = make_config(f);
    alphc::SyllabifierSet syllabifiers = make_syllabifiers(f.syllabifier);
    alphc::CompressedContainer c = alphc::compress(read_input(input), cfg, syllabifiers);
    write_output(output, reinterpret_cast<const char*>(c.bytes.data()), c.bytes.size());

    uint64_t total = c.info.codebook_bits + c.info.payload_bits;
    double eta = alphc::compressibility(c.info.payload_bits, c.info.codebook_bits,
                                        c.info.letters_count,
                                        alphc::default_eta_denominator(cfg.repr));
    std::cerr << input << ": alphabet=" << cfg.alphabet.label() << " repr=" << to_string(cfg.repr)
              << " codebook=" << to_string(cfg.format) << " total_bits=" << total
              << " eta=" << alphc::csv_ratio(eta) << " container_bytes=" << c.bytes.size()
              << "\n";
    return 0;
}

int cmd_decompress(const std::string& input, const std::string& output, bool tokens) {
    std::string bytes = read_input(input);
    alphc::DecompressResult r = alphc::decompress(
        {reinterpret_cast<const uint8_t*>(bytes.data()), bytes.size()});
    if (tokens) {
        std::string joined;
        for (const std::string& t : r.tokens) {
            joined += t;
            joined += '\n';
        }
        write_output(output, joined.data(), joined.size());
    } else {
        write_output(output, r.letters.data(), r.letters.size());
    }
    std::cerr << input << ": " << r.info.token_count << " tokens, " << r.letters.size()
              << " letters\n";
    return 0;
}

int cmd_analyze(const std::string& input, const AlphabetFlags& f, bool alphabet_given,
                bool repr_given, bool codebook_given, unsigned denominator_l) {
    alphc::SyllabifierSet syllabifiers = make_syllabifiers(f.syllabifier);

    std::vector<alphc::ContainerConfig> configs;
    if (alphabet_given || repr_given || codebook_given) {
        std::vector<alphc::ContainerConfig> all = alphc::default_analysis_configs(f.syllabifier);
        alphc::AlphabetSpec wanted = make_alphabet(f);
        for (const alphc::ContainerConfig& cfg : all) {
            if (alphabet_given && !(cfg.alphabet == wanted)) continue;
            if (repr_given && cfg.repr != *alphc::letter_repr_from_string(f.repr)) continue;
            if (codebook_given && cfg.format != *alphc::codebook_format_from_string(f.codebook))
                continue;
            configs.push_back(cfg);
        }
        if (configs.empty()) throw alphc::ConfigError("flag combination selects no analysis rows");
    } else {
        configs = alphc::default_analysis_configs(f.syllabifier);
    }

    std::optional<unsigned> denom;
    if (denominator_l != 0) denom = denominator_l;
    std::vector<alphc::AnalysisRow> rows =
        alphc::analyze_text(read_input(input), input, configs, syllabifiers, denom);
    alphc::write_analyze_csv(std::cout, rows);
    return 0;
}

int cmd_corpus(const std::string& directory, const std::string& out_dir,
               const alphc::CorpusOptions& options, const std::string& syllabifier) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(directory))
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw alphc::ConfigError("no files in corpus directory: " + directory);

    alphc::SyllabifierSet syllabifiers = make_syllabifiers(syllabifier);
    alphc::CorpusResult result = alphc::run_corpus(files, options, syllabifiers);

    fs::create_directories(out_dir);
    auto write_csv = [&](const char* name, auto writer) {
        fs::path path = fs::path(out_dir) / name;
        std::ofstream out(path);
        if (!out) throw alphc::IoError("cannot create: " + path.string());
        writer(out);
        if (!out.flush()) throw alphc::IoError("write failed: " + path.string());
    };
    write_csv("books.csv", [&](std::ostream& o) { alphc::write_books_csv(o, result); });
    write_csv("win_fractions.csv",
              [&](std::ostream& o) { alphc::write_win_fractions_csv(o, result); });
    write_csv("rank_curves.csv",
              [&](std::ostream& o) { alphc::write_rank_curves_csv(o, result); });

    uint64_t failed = 0;
    for (const auto& b : result.books) failed += !b.ok();
    std::cerr << "corpus: " << result.indexed_books << " books indexed, "
              << result.skipped_files << " files skipped, " << result.books.size()
              << " analyzed (" << failed << " failed); output in " << out_dir << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Huffman text compression over interchangeable alphabets"};
    app.require_subcommand(1);

    // compress
    auto* compress = app.add_subcommand("compress", "Compress a text file into a container");
    std::string c_input, c_output;
    AlphabetFlags c_flags;
    compress->add_option("input", c_input, "Input text file ('-' for stdin)")->required();
    compress->add_option("output", c_output, "Output container file ('-' for stdout)")->required();
    add_alphabet_flags(compress, c_flags);

    // decompress
    auto* decompress = app.add_subcommand("decompress", "Recover the letter sequence");
    std::string d_input, d_output;
    bool d_tokens = false;
    decompress->add_option("input", d_input, "Container file ('-' for stdin)")->required();
    decompress->add_option("output", d_output, "Output file ('-' for stdout)")->required();
    decompress->add_flag("--tokens", d_tokens, "Emit one token per line instead of raw letters");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Per-text compression report as CSV on stdout");
    std::string a_input;
    AlphabetFlags a_flags;
    unsigned a_denominator = 0;
    analyze->add_option("input", a_input, "Input text file ('-' for stdin)")->required();
    add_alphabet_flags(analyze, a_flags);
    analyze->add_option("--denominator-l", a_denominator,
                        "Override the L used in the compressibility denominator");

    // corpus
    auto* corpus = app.add_subcommand("corpus", "Analyze a directory of texts");
    std::string k_directory, k_out = ".";
    std::string k_syllabifier = "ssp";
    alphc::CorpusOptions k_options;
    double k_sample = 1.0;
    uint64_t k_seed = 0;
    uint32_t k_drop = 0;
    unsigned k_jobs = 0;
    corpus->add_option("directory", k_directory, "Directory of plain-text files")->required();
    corpus->add_option("--sample", k_sample, "Analyze a random fraction of the books")
        ->check(CLI::Range(0.0, 1.0));
    corpus->add_option("--seed", k_seed, "Sampling seed");
    corpus->add_option("--drop-extremes", k_drop, "Drop this many shortest and longest books");
    corpus->add_option("--jobs", k_jobs, "Worker threads (0 = hardware concurrency)");
    corpus->add_option("--out", k_out, "Output directory for the CSV files");
    corpus->add_option("--syllabifier", k_syllabifier,
                       "Syllabifier: 'ssp' or 'patterns:<file>'");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compress->parsed()) return cmd_compress(c_input, c_output, c_flags);
        if (decompress->parsed()) return cmd_decompress(d_input, d_output, d_tokens);
        if (analyze->parsed())
            return cmd_analyze(a_input, a_flags, analyze->count("--alphabet") > 0,
                               analyze->count("--repr") > 0, analyze->count("--codebook") > 0,
                               a_denominator);
        if (corpus->parsed()) {
            k_options.sample_fraction = k_sample;
            k_options.seed = k_seed;
            k_options.drop_extremes = k_drop;
            k_options.jobs = k_jobs;
            k_options.syllabifier = k_syllabifier;
            return cmd_corpus(k_directory, k_out, k_options, k_syllabifier);
        }
    } catch (const std::exception& e) {
        std::cerr << "alphc: error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
