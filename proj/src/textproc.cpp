#include "querysum/textproc.hpp"

#include <algorithm>
#include <fstream>

#include "querysum/error.hpp"
#include "querysum/utf8.hpp"

namespace querysum {

bool is_piece_delimiter(char32_t cp) {
    return cp == U'，' ||  // ，
           cp == U'？' ||  // ？
           cp == U'！' ||  // ！
           cp == U'。';    // 。
}

bool TextPiece::delimiter_only() const {
    for (char32_t cp : utf8::decode(text)) {
        if (!utf8::is_space(cp) && !is_piece_delimiter(cp)) return false;
    }
    return true;
}

std::vector<TextPiece> segment(std::string_view document_text) {
    std::vector<TextPiece> pieces;
    std::string current;
    for (char32_t cp : utf8::decode(document_text)) {
        current += utf8::encode(cp);
        if (is_piece_delimiter(cp)) {
            pieces.push_back({static_cast<int>(pieces.size()), current});
            current.clear();
        }
    }
    if (!current.empty())
        pieces.push_back({static_cast<int>(pieces.size()), current});
    return pieces;
}

// ------------------------------------------------------------- tokenize

void Lexicon::insert(std::string_view word) {
    std::vector<char32_t> cps = utf8::decode(word);
    if (cps.empty()) return;
    words.insert(std::u32string(cps.begin(), cps.end()));
    max_word_len = std::max(max_word_len, cps.size());
}

std::shared_ptr<Lexicon> load_lexicon(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail_data("cannot open lexicon file: " + path);
    auto lex = std::make_shared<Lexicon>();
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        // trim surrounding ASCII whitespace
        std::size_t b = line.find_first_not_of(" \t");
        std::size_t e = line.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        lex->insert(std::string_view(line).substr(b, e - b + 1));
    }
    return lex;
}

TokenizerMode TokenizerMode::from_name(const std::string& name,
                                       std::shared_ptr<Lexicon> lex) {
    TokenizerMode m;
    if (name == "character") m.kind = character;
    else if (name == "whitespace") m.kind = whitespace;
    else if (name == "lexicon") m.kind = lexicon_greedy;
    else fail_usage("unknown tokenizer mode '" + name +
                    "' (valid: character, whitespace, lexicon)");
    m.lexicon = std::move(lex);
    return m;
}

const char* TokenizerMode::name() const {
    switch (kind) {
        case character: return "character";
        case whitespace: return "whitespace";
        case lexicon_greedy: return "lexicon";
    }
    return "character";
}

std::vector<std::string> tokenize(std::string_view text, const TokenizerMode& mode) {
    std::vector<std::string> tokens;
    std::vector<char32_t> cps = utf8::decode(text);

    switch (mode.kind) {
        case TokenizerMode::character:
            for (char32_t c : cps)
                if (!utf8::is_space(c)) tokens.push_back(utf8::encode(c));
            break;

        case TokenizerMode::whitespace: {
            std::string cur;
            for (char32_t c : cps) {
                if (utf8::is_space(c)) {
                    if (!cur.empty()) { tokens.push_back(cur); cur.clear(); }
                } else {
                    cur += utf8::encode(c);
                }
            }
            if (!cur.empty()) tokens.push_back(cur);
            break;
        }

        case TokenizerMode::lexicon_greedy: {
            if (!mode.lexicon)
                fail_usage("lexicon tokenizer selected but no lexicon loaded");
            const Lexicon& lex = *mode.lexicon;
            std::size_t i = 0;
            while (i < cps.size()) {
                if (utf8::is_space(cps[i])) { ++i; continue; }
                std::size_t best = 0;
                std::size_t cap = std::min(lex.max_word_len, cps.size() - i);
                for (std::size_t len = cap; len >= 1; --len) {
                    std::u32string cand(cps.begin() + i, cps.begin() + i + len);
                    if (lex.words.count(cand)) { best = len; break; }
                }
                if (best == 0) best = 1;  // single-character fallback
                tokens.push_back(utf8::encode(cps.data() + i, best));
                i += best;
            }
            break;
        }
    }
    return tokens;
}

// -------------------------------------------------------------- n-grams

std::unordered_map<std::string, int> char_ngram_counts(std::string_view text, int n) {
    if (n < 1) fail_usage("n-gram order must be >= 1");
    std::vector<char32_t> cps = utf8::chars_no_space(text);
    std::unordered_map<std::string, int> counts;
    if (cps.size() < static_cast<std::size_t>(n)) return counts;
    for (std::size_t i = 0; i + n <= cps.size(); ++i)
        counts[utf8::encode(cps.data() + i, n)]++;
    return counts;
}

std::unordered_set<std::string> char_ngrams(std::string_view text, int n) {
    std::unordered_set<std::string> grams;
    for (auto& [g, c] : char_ngram_counts(text, n)) grams.insert(g);
    return grams;
}

double ngram_jaccard(std::string_view a, std::string_view b, int n, bool multiset) {
    auto ca = char_ngram_counts(a, n);
    auto cb = char_ngram_counts(b, n);
    long long inter = 0, uni = 0;
    for (auto& [g, cnt] : ca) {
        auto it = cb.find(g);
        int other = it == cb.end() ? 0 : it->second;
        if (multiset) {
            inter += std::min(cnt, other);
            uni += std::max(cnt, other);
        } else {
            inter += other > 0 ? 1 : 0;
            uni += 1;
        }
    }
    for (auto& [g, cnt] : cb) {
        if (ca.count(g)) continue;
        uni += multiset ? cnt : 1;
    }
    if (uni == 0) return 0.0;  // both texts have no n-grams
    return static_cast<double>(inter) / static_cast<double>(uni);
}

// -------------------------------------------------- char distributions

double CharDistribution::prob(char32_t cp) const {
    auto it = std::lower_bound(alphabet.begin(), alphabet.end(), cp);
    if (it == alphabet.end() || *it != cp) return 0.0;
    return probs[it - alphabet.begin()];
}

CharDistribution char_distribution(std::string_view text,
                                   const std::set<char32_t>& alphabet,
                                   double epsilon) {
    if (epsilon < 0) fail_usage("smoothing epsilon must be >= 0");
    std::vector<char32_t> cps = utf8::chars_no_space(text);
    std::map<char32_t, std::size_t> counts;
    for (char32_t c : cps) {
        if (!alphabet.count(c))
            fail_usage("distribution alphabet does not cover text character U+" +
                       std::to_string(static_cast<uint32_t>(c)));
        counts[c]++;
    }
    double denom = static_cast<double>(cps.size()) +
                   epsilon * static_cast<double>(alphabet.size());
    if (denom <= 0.0)
        fail_usage("character distribution undefined for empty text with epsilon = 0");

    CharDistribution dist;
    dist.epsilon = epsilon;
    dist.alphabet.assign(alphabet.begin(), alphabet.end());
    dist.probs.reserve(dist.alphabet.size());
    for (char32_t c : dist.alphabet) {
        auto it = counts.find(c);
        double cnt = it == counts.end() ? 0.0 : static_cast<double>(it->second);
        dist.probs.push_back((cnt + epsilon) / denom);
    }
    return dist;
}

}  // namespace querysum
