#include "querysum/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>

#include <json.hpp>

#include "querysum/error.hpp"
#include "querysum/utf8.hpp"

namespace querysum {

using json = nlohmann::ordered_json;

std::string Sample::document_text() const {
    std::string out;
    for (const auto& p : pieces) out += p.text;
    return out;
}

std::string Sample::gold_summary_text() const {
    std::string out;
    for (int idx : gold_labels)
        if (idx >= 0 && idx < static_cast<int>(pieces.size())) out += pieces[idx].text;
    return out;
}

Sample make_sample(const std::string& id, const std::string& query,
                   const std::string& document_text) {
    Sample s;
    s.id = id;
    s.query = query;
    s.pieces = segment(document_text);
    return s;
}

// ----------------------------------------------------------------- load

static std::vector<TextPiece> pieces_from_strings(const std::vector<std::string>& texts,
                                                  std::size_t line_no) {
    std::vector<TextPiece> pieces;
    pieces.reserve(texts.size());
    for (const auto& t : texts) {
        if (t.empty())
            fail_data("line " + std::to_string(line_no) + ": empty text piece");
        pieces.push_back({static_cast<int>(pieces.size()), t});
    }
    return pieces;
}

static Sample parse_sample_line(const std::string& line, std::size_t line_no) {
    json obj;
    try {
        obj = json::parse(line);
    } catch (const json::exception& e) {
        fail_data("line " + std::to_string(line_no) + ": invalid JSON: " + e.what());
    }
    if (!obj.is_object())
        fail_data("line " + std::to_string(line_no) + ": expected a JSON object");

    static const std::set<std::string> known = {"id", "query", "pieces", "document", "labels"};
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!known.count(it.key()))
            fail_data("line " + std::to_string(line_no) + ": unknown key '" + it.key() + "'");
    }

    Sample s;
    if (!obj.contains("id") || !obj["id"].is_string())
        fail_data("line " + std::to_string(line_no) + ": missing string key 'id'");
    s.id = obj["id"].get<std::string>();

    if (!obj.contains("query") || !obj["query"].is_string())
        fail_data("line " + std::to_string(line_no) + ": missing string key 'query'");
    s.query = obj["query"].get<std::string>();

    const bool has_pieces = obj.contains("pieces");
    const bool has_document = obj.contains("document");
    if (has_pieces == has_document)
        fail_data("line " + std::to_string(line_no) +
                  ": exactly one of 'pieces' or 'document' is required");
    if (has_pieces) {
        if (!obj["pieces"].is_array())
            fail_data("line " + std::to_string(line_no) + ": 'pieces' must be an array of strings");
        std::vector<std::string> texts;
        for (const auto& v : obj["pieces"]) {
            if (!v.is_string())
                fail_data("line " + std::to_string(line_no) + ": 'pieces' must be an array of strings");
            texts.push_back(v.get<std::string>());
        }
        s.pieces = pieces_from_strings(texts, line_no);
    } else {
        if (!obj["document"].is_string())
            fail_data("line " + std::to_string(line_no) + ": 'document' must be a string");
        s.pieces = segment(obj["document"].get<std::string>());
    }
    if (s.pieces.empty())
        fail_data("line " + std::to_string(line_no) + ": document has no text pieces");

    if (obj.contains("labels")) {
        if (!obj["labels"].is_array())
            fail_data("line " + std::to_string(line_no) + ": 'labels' must be an array of integers");
        for (const auto& v : obj["labels"]) {
            if (!v.is_number_integer())
                fail_data("line " + std::to_string(line_no) + ": 'labels' must be an array of integers");
            int idx = v.get<int>();
            if (idx < 0 || idx >= static_cast<int>(s.pieces.size()))
                fail_data("line " + std::to_string(line_no) + ": label out of range: " +
                          std::to_string(idx) + " (document has " +
                          std::to_string(s.pieces.size()) + " pieces)");
            s.gold_labels.push_back(idx);
        }
    }
    return s;
}

std::vector<Sample> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail_data("cannot open corpus file: " + path);

    std::vector<Sample> corpus;
    std::unordered_set<std::string> seen_ids;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        Sample s = parse_sample_line(line, line_no);
        if (!seen_ids.insert(s.id).second)
            fail_data("line " + std::to_string(line_no) + ": duplicate sample id '" + s.id + "'");
        corpus.push_back(std::move(s));
    }
    return corpus;
}

void save_corpus(const std::vector<Sample>& corpus, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail_runtime("cannot write corpus file: " + path);
    for (const auto& s : corpus) {
        json obj;
        obj["id"] = s.id;
        obj["query"] = s.query;
        json pieces = json::array();
        for (const auto& p : s.pieces) pieces.push_back(p.text);
        obj["pieces"] = std::move(pieces);
        obj["labels"] = s.gold_labels;
        out << obj.dump() << '\n';
    }
    if (!out) fail_runtime("failed writing corpus file: " + path);
}

// ----------------------------------------------------------- validation

ValidationReport validate_sample(const Sample& sample, const ValidationPolicy& policy) {
    ValidationReport report;
    report.sample_id = sample.id;
    const int m = static_cast<int>(sample.pieces.size());

    for (int idx : sample.gold_labels) {
        if (idx < 0 || idx >= m) {
            report.errors.push_back("label_out_of_range");
            break;
        }
    }
    for (std::size_t i = 1; i < sample.gold_labels.size(); ++i) {
        if (sample.gold_labels[i] <= sample.gold_labels[i - 1]) {
            report.errors.push_back("labels_not_ascending");
            break;
        }
    }
    if (utf8::char_length(sample.query) == 0)
        report.errors.push_back("empty_query");

    if (static_cast<int>(sample.gold_labels.size()) > policy.max_gold_pieces)
        report.warnings.push_back("gold_pieces_exceed_k" +
                                  std::to_string(policy.max_gold_pieces));

    if (report.errors.empty()) {
        std::string gold = sample.gold_summary_text();
        std::size_t len = policy.limit_in_words
                              ? tokenize(gold, policy.tokenizer).size()
                              : utf8::char_length(gold);
        if (len > static_cast<std::size_t>(policy.summary_limit))
            report.warnings.push_back("summary_exceeds_length_limit");
    }

    if (m < policy.min_pieces)
        report.warnings.push_back("short_document");

    // query/document character overlap
    std::set<char32_t> doc_chars;
    for (const auto& p : sample.pieces)
        for (char32_t c : utf8::chars_no_space(p.text)) doc_chars.insert(c);
    bool overlap = false;
    for (char32_t c : utf8::chars_no_space(sample.query)) {
        if (doc_chars.count(c)) { overlap = true; break; }
    }
    if (!overlap)
        report.warnings.push_back("no_query_overlap");

    return report;
}

// ---------------------------------------------------------------- stats

CorpusStats corpus_stats(const std::vector<Sample>& corpus, const TokenizerMode& tokenizer) {
    if (corpus.empty()) fail_data("cannot compute statistics of an empty corpus");

    CorpusStats st;
    st.samples = corpus.size();

    std::set<std::string> queries, documents, vocab;
    double chars_query = 0, chars_summary = 0;
    double words_query = 0, words_summary = 0, words_document = 0;

    for (const auto& s : corpus) {
        queries.insert(s.query);
        std::string doc = s.document_text();
        documents.insert(doc);
        st.source_sentences += s.pieces.size();
        st.summary_sentences += s.gold_labels.size();

        std::string gold = s.gold_summary_text();
        chars_query += static_cast<double>(utf8::char_length(s.query));
        chars_summary += static_cast<double>(utf8::char_length(gold));

        auto qtok = tokenize(s.query, tokenizer);
        auto stok = tokenize(gold, tokenizer);
        auto dtok = tokenize(doc, tokenizer);
        words_query += static_cast<double>(qtok.size());
        words_summary += static_cast<double>(stok.size());
        words_document += static_cast<double>(dtok.size());
        for (auto& t : qtok) vocab.insert(std::move(t));
        for (auto& t : dtok) vocab.insert(std::move(t));
    }

    const double n = static_cast<double>(corpus.size());
    st.unique_queries = queries.size();
    st.unique_documents = documents.size();
    st.avg_chars_query = chars_query / n;
    st.avg_chars_summary = chars_summary / n;
    st.avg_words_query = words_query / n;
    st.avg_words_summary = words_summary / n;
    st.avg_words_document = words_document / n;
    st.vocabulary = vocab.size();
    return st;
}

// ---------------------------------------------------------------- split

std::array<std::size_t, 3> split_sizes(std::size_t n, double train_ratio,
                                       double eval_ratio, double test_ratio) {
    const double ratios[3] = {train_ratio, eval_ratio, test_ratio};
    for (double r : ratios)
        if (!(r > 0)) fail_usage("split ratios must be positive");
    if (std::fabs(ratios[0] + ratios[1] + ratios[2] - 1.0) > 1e-9)
        fail_usage("split ratios must sum to 1");

    std::array<std::size_t, 3> sizes{};
    double remainders[3];
    std::size_t assigned = 0;
    for (int i = 0; i < 3; ++i) {
        double exact = static_cast<double>(n) * ratios[i];
        sizes[i] = static_cast<std::size_t>(std::floor(exact));
        remainders[i] = exact - std::floor(exact);
        assigned += sizes[i];
    }
    // hand out leftover slots to the largest remainders, earlier
    // partition wins ties
    while (assigned < n) {
        int best = 0;
        for (int i = 1; i < 3; ++i)
            if (remainders[i] > remainders[best]) best = i;
        sizes[best]++;
        remainders[best] = -1.0;
        ++assigned;
    }
    return sizes;
}

SplitResult split_corpus(const std::vector<Sample>& corpus,
                         double train_ratio, double eval_ratio, double test_ratio,
                         uint64_t seed) {
    const std::size_t n = corpus.size();
    if (n < 3) fail_data("corpus too small to split (need at least 3 samples)");
    auto sizes = split_sizes(n, train_ratio, eval_ratio, test_ratio);

    // Fisher-Yates with an explicit generator so the shuffle is
    // reproducible across platforms.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed);
    for (std::size_t i = n - 1; i > 0; --i) {
        std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
        std::swap(order[i], order[j]);
    }

    // partition membership by shuffled position, original order kept
    std::vector<int> part(n);
    for (std::size_t k = 0; k < n; ++k) {
        int p = k < sizes[0] ? 0 : (k < sizes[0] + sizes[1] ? 1 : 2);
        part[order[k]] = p;
    }

    SplitResult result;
    for (std::size_t i = 0; i < n; ++i) {
        switch (part[i]) {
            case 0: result.train.push_back(corpus[i]); break;
            case 1: result.eval.push_back(corpus[i]); break;
            default: result.test.push_back(corpus[i]); break;
        }
    }
    return result;
}

}  // namespace querysum
