#include "gfo/word.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace gfo {

namespace {

[[noreturn]] void parse_fail(const std::string& what, const std::string& token) {
    throw std::invalid_argument("cannot parse word: " + what + " '" + token + "'");
}

void check_letters(const std::vector<int>& ls) {
    for (int x : ls) {
        if (x < 1) {
            throw std::invalid_argument("word letters must be >= 1, got " + std::to_string(x));
        }
    }
}

}  // namespace

Word::Word(std::vector<int> ls) : letters(std::move(ls)) { check_letters(letters); }

Word::Word(std::initializer_list<int> ls) : letters(ls) { check_letters(letters); }

long long Word::letter_sum() const {
    return std::accumulate(letters.begin(), letters.end(), 0LL);
}

int Word::max_letter() const {
    return letters.empty() ? 0 : *std::max_element(letters.begin(), letters.end());
}

Word parse_word(const std::string& text) {
    if (text.empty()) parse_fail("empty input", text);

    const bool all_digits = std::all_of(text.begin(), text.end(),
                                        [](unsigned char c) { return std::isdigit(c); });
    if (all_digits && text.size() > 1) {
        // Digit-string form, valid only when every character is in 1..9.
        // "10" falls through to the single-integer form below.
        if (std::all_of(text.begin(), text.end(), [](char c) { return c >= '1' && c <= '9'; })) {
            std::vector<int> ls;
            ls.reserve(text.size());
            for (char c : text) ls.push_back(c - '0');
            return Word(std::move(ls));
        }
    }

    std::vector<int> ls;
    std::string token;
    auto flush = [&]() {
        if (token.empty()) parse_fail("empty token in", text);
        if (token[0] == '0') parse_fail("leading zero or zero letter in token", token);
        errno = 0;
        char* end = nullptr;
        long v = std::strtol(token.c_str(), &end, 10);
        if (*end != '\0' || errno != 0) parse_fail("non-numeric token", token);
        if (v < 1) parse_fail("letter must be >= 1, got token", token);
        ls.push_back(static_cast<int>(v));
        token.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ' ') {
            flush();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            token.push_back(c);
        } else {
            parse_fail("non-numeric character", std::string(1, c));
        }
    }
    flush();
    return Word(std::move(ls));
}

std::string to_text(const Word& w, bool compact) {
    if (compact && w.max_letter() <= 9 && !w.empty()) {
        std::string s;
        for (int x : w.letters) s.push_back(static_cast<char>('0' + x));
        return s;
    }
    std::string s;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i) s.push_back(',');
        s += std::to_string(w.letters[i]);
    }
    return s;
}

Word reversed(const Word& w) {
    Word r = w;
    std::reverse(r.letters.begin(), r.letters.end());
    return r;
}

bool is_rearrangement(const Word& u, const Word& v) {
    if (u.length() != v.length()) return false;
    auto a = u.letters, b = v.letters;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

long long embedding_count(const Word& u, const Word& w) {
    if (u.empty()) throw std::invalid_argument("embedding pattern must be nonempty");
    const int k = u.length(), n = w.length();
    long long count = 0;
    for (int i = 0; i + k <= n; ++i) {
        bool ok = true;
        for (int t = 0; t < k; ++t) {
            if (u.letters[t] > w.letters[i + t]) { ok = false; break; }
        }
        count += ok;
    }
    return count;
}

EmbeddingSet embeddings(const Word& u, const Word& w) {
    if (u.empty()) throw std::invalid_argument("embedding pattern must be nonempty");
    EmbeddingSet es{u, w, {}};
    const int k = u.length(), n = w.length();
    for (int i = 0; i + k <= n; ++i) {
        bool ok = true;
        for (int t = 0; t < k; ++t) {
            if (u.letters[t] > w.letters[i + t]) { ok = false; break; }
        }
        if (ok) es.positions.push_back(i + 1);
    }
    return es;
}

std::vector<Word> generate_permutations(int n) {
    if (n < 1 || n > 9) {
        throw std::invalid_argument("permutation size out of range 1..9: " + std::to_string(n));
    }
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    std::vector<Word> out;
    do {
        out.push_back(Word(p));
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

void for_each_composition(int s, const std::function<bool(const Word&)>& visit) {
    if (s < 1) throw std::invalid_argument("composition sum must be >= 1, got " + std::to_string(s));
    // Lexicographic successor: fold the last part into its neighbour as
    // (..., a+1) followed by the leftover spread as trailing 1s.
    Word w(std::vector<int>(s, 1));
    for (;;) {
        if (!visit(w)) return;
        if (w.length() == 1) return;  // (s) is lexicographically last
        int last = w.letters.back();
        w.letters.pop_back();
        w.letters.back() += 1;
        w.letters.insert(w.letters.end(), last - 1, 1);
    }
}

std::vector<Word> generate_by_sum(int s) {
    std::vector<Word> out;
    for_each_composition(s, [&](const Word& w) {
        out.push_back(w);
        return true;
    });
    return out;
}

}  // namespace gfo
