#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "querysum/textproc.hpp"

namespace querysum {

// One <query, document, gold summary> tuple. The document is an ordered
// list of text pieces; gold_labels are 0-based piece indices defining
// the reference summary.
struct Sample {
    std::string id;
    std::string query;
    std::vector<TextPiece> pieces;
    std::vector<int> gold_labels;

    std::string document_text() const;      // concatenation of all pieces
    std::string gold_summary_text() const;  // concatenation of gold pieces
};

// JSON Lines corpus: one object per line with keys `id`, `query`,
// `pieces` (array of strings) or `document` (string, auto-segmented),
// and optional `labels` (array of ints). Malformed lines and duplicate
// ids are hard errors carrying line numbers.
std::vector<Sample> load_corpus(const std::string& path);
void save_corpus(const std::vector<Sample>& corpus, const std::string& path);

// Builds a single in-memory sample from raw parts (document segmented).
Sample make_sample(const std::string& id, const std::string& query,
                   const std::string& document_text);

// ----------------------------------------------------------- validation

struct ValidationPolicy {
    int max_gold_pieces = 10;      // annotation guideline cap k
    int summary_limit = 70;        // gold summary length guideline
    bool limit_in_words = false;   // count limit in words instead of characters
    int min_pieces = 15;           // short-document threshold
    TokenizerMode tokenizer;       // used when limit_in_words
};

struct ValidationReport {
    std::string sample_id;
    std::vector<std::string> errors;    // structural violations
    std::vector<std::string> warnings;  // annotation guideline violations

    bool ok() const { return errors.empty(); }
};

ValidationReport validate_sample(const Sample& sample, const ValidationPolicy& policy);

// ---------------------------------------------------------------- stats

struct CorpusStats {
    std::size_t samples = 0;
    std::size_t unique_queries = 0;
    std::size_t unique_documents = 0;
    std::size_t source_sentences = 0;   // total text pieces
    std::size_t summary_sentences = 0;  // total gold pieces
    double avg_chars_query = 0;
    double avg_chars_summary = 0;
    double avg_words_query = 0;
    double avg_words_summary = 0;
    double avg_words_document = 0;
    std::size_t vocabulary = 0;
};

CorpusStats corpus_stats(const std::vector<Sample>& corpus, const TokenizerMode& tokenizer);

// ---------------------------------------------------------------- split

struct SplitResult {
    std::vector<Sample> train, eval, test;
    std::array<std::size_t, 3> sizes() const { return {train.size(), eval.size(), test.size()}; }
};

// Deterministic shuffle under `seed`, then largest-remainder
// apportionment of sizes: each partition gets floor(N*r), leftover
// slots go to the largest fractional remainders (ties favor the
// earlier partition: train, eval, test). Original corpus order is
// preserved inside each partition.
SplitResult split_corpus(const std::vector<Sample>& corpus,
                         double train_ratio, double eval_ratio, double test_ratio,
                         uint64_t seed);

// Exposed for tests: partition sizes for N samples under the rule above.
std::array<std::size_t, 3> split_sizes(std::size_t n, double train_ratio,
                                       double eval_ratio, double test_ratio);

}  // namespace querysum
