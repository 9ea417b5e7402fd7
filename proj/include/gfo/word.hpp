#ifndef GFO_WORD_HPP
#define GFO_WORD_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gfo {

/// A finite word over the positive integers. Letters are column heights;
/// the empty word is allowed as an enumeration subject but is rejected by
/// every operation that needs a pattern.
struct Word {
    std::vector<int> letters;

    Word() = default;
    explicit Word(std::vector<int> ls);
    Word(std::initializer_list<int> ls);

    int length() const { return static_cast<int>(letters.size()); }
    bool empty() const { return letters.empty(); }
    long long letter_sum() const;
    int max_letter() const;  // 0 for the empty word

    auto operator<=>(const Word&) const = default;
};

/// Parses the word grammar: either a bare digit string (every character a
/// letter in 1..9) or delimited decimal integers ("2,5,10" or "2 5 10").
/// Throws std::invalid_argument naming the offending token.
Word parse_word(const std::string& text);

/// Canonical text form: comma-separated decimal. With compact=true and all
/// letters <= 9, the bare digit form is used instead.
std::string to_text(const Word& w, bool compact = false);

Word reversed(const Word& w);

/// True iff u and v have the same multiset of letters.
bool is_rearrangement(const Word& u, const Word& v);

/// Number of start positions i (1-based) with u_t <= w_{i+t-1} for all t.
long long embedding_count(const Word& u, const Word& w);

struct EmbeddingSet {
    Word pattern;
    Word host;
    std::vector<int> positions;  // 1-based start indices, ascending
};

EmbeddingSet embeddings(const Word& u, const Word& w);

/// All n! words using each of 1..n exactly once, lexicographic order.
/// Requires 1 <= n <= 9.
std::vector<Word> generate_permutations(int n);

/// Streams the 2^(s-1) compositions of s in lexicographic order
/// (1,1,...,1 first, then (1,..,2), ..., ending at (s)). The visitor
/// returns false to stop early. Requires s >= 1.
void for_each_composition(int s, const std::function<bool(const Word&)>& visit);

/// Materialized convenience wrapper around for_each_composition.
std::vector<Word> generate_by_sum(int s);

}  // namespace gfo

#endif
