#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace querysum {

// A punctuation-delimited segment of a document, the atomic unit of
// extraction. The trailing delimiter stays attached so concatenating
// pieces in order reproduces the document verbatim.
struct TextPiece {
    int index = 0;
    std::string text;

    // True when the piece carries no selectable payload (only delimiters
    // and/or whitespace). Such pieces are never used as seeds by any
    // summarizer but may be absorbed when a neighbor gets expanded.
    bool delimiter_only() const;
};

// Splits on ，？！。 keeping each delimiter at the end of its piece.
// Trailing undelimited text becomes a final piece. Empty input -> {}.
std::vector<TextPiece> segment(std::string_view document_text);

bool is_piece_delimiter(char32_t cp);

// ------------------------------------------------------------- tokenize

struct Lexicon {
    std::set<std::u32string> words;
    std::size_t max_word_len = 0;

    void insert(std::string_view word);
};

// Loads a lexicon file: one word per line, UTF-8.
std::shared_ptr<Lexicon> load_lexicon(const std::string& path);

struct TokenizerMode {
    enum Kind { character, whitespace, lexicon_greedy };
    Kind kind = character;
    std::shared_ptr<Lexicon> lexicon;  // required for lexicon_greedy

    static TokenizerMode from_name(const std::string& name,
                                   std::shared_ptr<Lexicon> lex = nullptr);
    const char* name() const;
};

// character: one token per non-whitespace code point.
// whitespace: split on whitespace runs.
// lexicon_greedy: longest match left-to-right, single-char fallback.
std::vector<std::string> tokenize(std::string_view text, const TokenizerMode& mode);

// -------------------------------------------------------------- n-grams

// Set of contiguous character n-grams, whitespace removed first.
// |text| < n yields the empty set. n < 1 is an error.
std::unordered_set<std::string> char_ngrams(std::string_view text, int n);

// Multiset variant: n-gram -> occurrence count.
std::unordered_map<std::string, int> char_ngram_counts(std::string_view text, int n);

// Jaccard ratio between the bigram (or n-gram) sets of two texts.
// With multiset=true, intersection/union use min/max counts instead.
double ngram_jaccard(std::string_view a, std::string_view b, int n, bool multiset);

// -------------------------------------------------- char distributions

struct CharDistribution {
    // alphabet in code-point order, probabilities aligned with it
    std::vector<char32_t> alphabet;
    std::vector<double> probs;
    double epsilon = 0.0;

    double prob(char32_t cp) const;
};

// P(c) = (count(c) + eps) / (len + eps * |alphabet|), counts over
// non-whitespace characters. Requires alphabet to cover the text.
CharDistribution char_distribution(std::string_view text,
                                   const std::set<char32_t>& alphabet,
                                   double epsilon);

}  // namespace querysum
