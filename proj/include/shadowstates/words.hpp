#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "shadowstates/knot_families.hpp"

namespace shadowstates {

// Binary words over {'0','1'}; the empty word is the concatenation identity.
using Word = std::string;

// Lexicographically sorted, duplicate-free.
using WordSet = std::vector<Word>;

inline Word word_pow(const Word& w, int k) {
    Word out;
    out.reserve(w.size() * static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) out += w;
    return out;
}

inline Word zeros(int k) { return Word(static_cast<std::size_t>(k), '0'); }
inline Word ones(int k) { return Word(static_cast<std::size_t>(k), '1'); }

inline int transition_count(const Word& w) {
    int t = 0;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] != w[i - 1]) ++t;
    return t;
}

// Bitonic in the 0-1-sequence sense: at most two changes between 0 and 1.
inline bool is_bitonic(const Word& w) { return transition_count(w) <= 2; }

namespace detail {

inline WordSet sorted_set(std::vector<Word> words) {
    std::sort(words.begin(), words.end());
    auto dup = std::adjacent_find(words.begin(), words.end());
    if (dup != words.end())
        throw std::logic_error("word set construction produced duplicate '" + *dup + "'");
    return words;
}

}  // namespace detail

enum class PBlock { B00, B01, B10, B11 };

/**
 * The four block families partitioning the region codes apart from 0^n, 1^n:
 *   B00: 0^k 1^{n-k}            B11: 1^k 0^{n-k}        (1 <= k <= n-1)
 *   B01: 0^k 1^{n-p-k} 0^p      B10: 1^k 0^{n-p-k} 1^p  (1 <= p <= n-2, 1 <= k <= n-p-1)
 */
inline WordSet gen_P_block(int n, PBlock which) {
    std::vector<Word> out;
    const bool flip = which == PBlock::B11 || which == PBlock::B10;
    auto lo = [&](int k) { return flip ? ones(k) : zeros(k); };
    auto hi = [&](int k) { return flip ? zeros(k) : ones(k); };
    if (which == PBlock::B00 || which == PBlock::B11) {
        for (int k = 1; k <= n - 1; ++k) out.push_back(lo(k) + hi(n - k));
    } else {
        for (int p = 1; p <= n - 2; ++p)
            for (int k = 1; k <= n - p - 1; ++k)
                out.push_back(lo(k) + hi(n - p - k) + lo(p));
    }
    return detail::sorted_set(std::move(out));
}

enum class PMethod { Closed, Recursive, Filter };

namespace detail {

// Sort key matching lexicographic order on same-length bitonic words.
// 0-words 0^a 1^b 0^c order by (a desc, b asc); 1-words 1^a 0^b 1^c by
// (a asc, b desc) and after every 0-word.
inline std::uint64_t bitonic_lex_key(const Word& w) {
    const std::uint64_t n = w.size();
    std::size_t i = 0;
    while (i < w.size() && w[i] == w[0]) ++i;
    const std::uint64_t a = i;
    while (i < w.size() && w[i] != w[0]) ++i;
    const std::uint64_t b = i - a;
    if (w[0] == '0') return ((n - a) << 21) | b;
    return (std::uint64_t(1) << 42) | (a << 21) | (n - b);
}

}  // namespace detail

/**
 * Region codes of the n-circle rosette = bitonic binary words of length n;
 * |P_n| = n^2 - n + 2. Three independent routes.
 */
inline WordSet gen_P(int n, PMethod method = PMethod::Closed) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    if (n == 0) return {Word()};  // the bare plane, encoded by the empty word
    switch (method) {
        case PMethod::Closed: {
            // {0^n, 1^n} and the four block families, emitted in lex order
            std::vector<Word> out;
            out.reserve(std::size_t(n) * unsigned(n) - unsigned(n) + 2);
            out.push_back(zeros(n));
            for (int a = n - 1; a >= 1; --a)
                for (int b = 1; b <= n - a; ++b) {
                    Word w(std::size_t(n), '0');
                    std::fill(w.begin() + a, w.begin() + a + b, '1');
                    out.push_back(std::move(w));
                }
            for (int a = 1; a <= n - 1; ++a)
                for (int b = n - a; b >= 1; --b) {
                    Word w(std::size_t(n), '1');
                    std::fill(w.begin() + a, w.begin() + a + b, '0');
                    out.push_back(std::move(w));
                }
            out.push_back(ones(n));
            return out;
        }
        case PMethod::Recursive: {
            if (n == 1) return {Word("0"), Word("1")};
            const int m = n - 1;
            std::vector<std::pair<std::uint64_t, Word>> keyed;
            keyed.reserve(std::size_t(n) * unsigned(n) - unsigned(n) + 2);
            auto push = [&keyed](Word w) {
                std::uint64_t key = detail::bitonic_lex_key(w);
                keyed.emplace_back(key, std::move(w));
            };
            push(zeros(n));
            push(ones(n));
            for (int p = 0; p <= m - 1; ++p) {
                const int len = m - p + 1;  // block length before the appended tail
                for (int k = 1; k <= len - 1; ++k) {
                    Word w00(std::size_t(n), '0');  // 0^k 1^{len-k} 0^p
                    std::fill(w00.begin() + k, w00.begin() + len, '1');
                    push(std::move(w00));
                    Word w11(std::size_t(n), '1');  // 1^k 0^{len-k} 1^p
                    std::fill(w11.begin() + k, w11.begin() + len, '0');
                    push(std::move(w11));
                }
            }
            std::sort(keyed.begin(), keyed.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            std::vector<Word> out;
            out.reserve(keyed.size());
            for (auto& [key, w] : keyed) out.push_back(std::move(w));
            return out;
        }
        case PMethod::Filter: {
            if (n > 25)
                throw std::invalid_argument("filter method enumerates 2^n words; n too large");
            std::vector<Word> out;
            Word w(static_cast<std::size_t>(n), '0');
            for (std::uint64_t v = 0; v < (std::uint64_t(1) << n); ++v) {
                for (int i = 0; i < n; ++i)
                    w[static_cast<std::size_t>(i)] = (v >> (n - 1 - i)) & 1 ? '1' : '0';
                if (is_bitonic(w)) out.push_back(w);
            }
            return out;  // enumeration order is already lexicographic
        }
    }
    throw std::invalid_argument("unknown method");
}

// 2-state encodings of the n-twist loop: the n words with exactly one 0.
inline WordSet gen_T2(int n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    std::vector<Word> out;
    for (int k = 0; k <= n - 1; ++k) out.push_back(ones(k) + "0" + ones(n - k - 1));
    return detail::sorted_set(std::move(out));
}

enum class F2Method { Closed, Recursive };

/**
 * 2-state encodings of the n-foil. F_0 = {eps} (the 0-foil is already two
 * components); closed form: words with exactly two 0s, plus 1^n.
 */
inline WordSet gen_F2(int n, F2Method method = F2Method::Closed) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    if (n == 0) return {Word()};
    if (n == 1) return {Word("1")};
    switch (method) {
        case F2Method::Closed: {
            std::vector<Word> out{ones(n)};
            for (int p = 0; p <= n - 2; ++p)
                for (int k = 0; k <= n - p - 2; ++k)
                    out.push_back(ones(p) + "0" + ones(k) + "0" + ones(n - p - k - 2));
            return detail::sorted_set(std::move(out));
        }
        case F2Method::Recursive: {
            std::vector<Word> out;
            for (const Word& w : gen_T2(n - 1)) out.push_back("0" + w);
            for (const Word& w : gen_F2(n - 1, F2Method::Recursive)) out.push_back("1" + w);
            return detail::sorted_set(std::move(out));
        }
    }
    throw std::invalid_argument("unknown method");
}

/**
 * The prefix transform: the first two bits map by 01->011, 10->101, 00->010,
 * 11->100; the rest of the word is kept. Lengthens the word by one.
 */
inline Word psi(const Word& w) {
    if (w.size() < 2) throw std::invalid_argument("psi needs a word of length >= 2");
    const Word head = w.substr(0, 2);
    Word image;
    if (head == "01") image = "011";
    else if (head == "10") image = "101";
    else if (head == "00") image = "010";
    else image = "100";
    return image + w.substr(2);
}

inline Word psi_pow(Word w, int p) {
    for (int i = 0; i < p; ++i) w = psi(w);
    return w;
}

enum class Tau2Method { Definition, PsiRecursion };

/**
 * 2-state encodings of the n-twist knot (words of length n+2):
 *   definition route: 01 F_n  ∪  10 F_n  ∪  00 T_n  ∪  11 T_n
 *   psi route:        psi^n({01,10}) ∪ ⋃_p psi^p(00) T_{n-p} ∪ ⋃_p psi^p(11) T_{n-p}
 * |Tau_n| = n^2 + n + 2.
 */
inline WordSet gen_Tau2(int n, Tau2Method method = Tau2Method::Definition) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    if (n == 0) return {Word("01"), Word("10")};
    switch (method) {
        case Tau2Method::Definition: {
            std::vector<Word> out;
            for (const Word& w : gen_F2(n)) {
                out.push_back("01" + w);
                out.push_back("10" + w);
            }
            for (const Word& w : gen_T2(n)) {
                out.push_back("00" + w);
                out.push_back("11" + w);
            }
            return detail::sorted_set(std::move(out));
        }
        case Tau2Method::PsiRecursion: {
            std::vector<Word> out{psi_pow("01", n), psi_pow("10", n)};
            for (int p = 0; p <= n - 1; ++p) {
                const Word head00 = psi_pow("00", p);
                const Word head11 = psi_pow("11", p);
                for (const Word& w : gen_T2(n - p)) {
                    out.push_back(head00 + w);
                    out.push_back(head11 + w);
                }
            }
            return detail::sorted_set(std::move(out));
        }
    }
    throw std::invalid_argument("unknown method");
}

// F_{n,1} = T_{n,2}: the 1-state words of the n-foil coincide with the
// 2-state words of the n-twist loop. Checked against the brute-force censuses.
inline bool lemma_F1_equals_T2_check(int n, int cap = kDefaultCensusCap) {
    if (n < 1) throw std::invalid_argument("lemma check needs n >= 1");
    auto foil_census = build({Family::Foil, n}).state_census(cap);
    auto loop_census = build({Family::TwistLoop, n}).state_census(cap);
    const std::vector<Word> empty;
    const auto& f1 = foil_census.count(1) ? foil_census[1] : empty;
    const auto& t2 = loop_census.count(2) ? loop_census[2] : empty;
    return f1 == t2;
}

}  // namespace shadowstates
