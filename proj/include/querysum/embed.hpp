#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace querysum {

using Vector = std::vector<double>;

// Word embedding table loaded from word2vec text format. Vectors are
// stored contiguously; lookups return views into that storage. The
// table is immutable after load and safe to share across threads.
class EmbeddingTable {
public:
    struct LoadReport {
        std::size_t declared_count = 0;
        std::size_t parsed_count = 0;
        std::size_t duplicate_count = 0;
    };

    EmbeddingTable() = default;
    EmbeddingTable(int dimension, std::string source);

    int dimension() const { return dim_; }
    std::size_t size() const { return offsets_.size(); }
    const std::string& source() const { return source_; }
    const LoadReport& load_report() const { return report_; }

    // nullopt for out-of-vocabulary tokens; never a default vector
    std::optional<std::span<const double>> lookup(std::string_view token) const;

    // tokens in insertion (file) order
    const std::vector<std::string>& tokens() const { return tokens_; }

    void add(std::string_view token, const Vector& components);

private:
    friend EmbeddingTable load_embeddings(const std::string&);
    friend EmbeddingTable load_embedding_cache(const std::string&);

    int dim_ = 0;
    std::string source_;
    std::unordered_map<std::string, std::size_t> offsets_;
    std::vector<std::string> tokens_;  // insertion order, for cache writes
    std::vector<double> storage_;
    LoadReport report_;
};

// word2vec text format: header "vocab_count dimension", then one line
// per token: token followed by `dimension` reals, space-separated.
// Duplicate tokens keep the first occurrence; a row-count mismatch
// against the header is tolerated (both reported in the LoadReport).
EmbeddingTable load_embeddings(const std::string& path);

// Binary cache with a little-endian layout: magic "QSEM", format
// version u32, dimension u32, entry count u64, then one record per
// token (u32 token byte length, token bytes, dimension float64
// components). A cache load is bit-identical to the text parse it was
// saved from.
void save_embedding_cache(const EmbeddingTable& table, const std::string& path);
EmbeddingTable load_embedding_cache(const std::string& path);

// Mean of the vectors of in-vocabulary tokens. With no in-vocabulary
// token the result is the zero vector, flagged via all_oov.
struct TextVector {
    Vector vec;
    std::size_t in_vocab = 0;
    std::size_t oov = 0;
    bool all_oov() const { return in_vocab == 0; }
};

TextVector text_vector(const std::vector<std::string>& tokens, const EmbeddingTable& table);

// a.b / (|a||b|); zero-norm inputs yield 0 so rankers never see NaN.
double cosine(std::span<const double> a, std::span<const double> b);

}  // namespace querysum
