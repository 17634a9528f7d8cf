#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "shadowstates/words.hpp"

namespace shadowstates {

// A word handed to one of the bijection maps is outside the map's domain.
struct WordDomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class BlockKind { Pi, PiBar, Omega };

/**
 * The parametrized block words of the bijection:
 *   Pi:    0^r 1^{len-r}        (1 <= r <= len-1)
 *   PiBar: 1^r 0^{len-r}        (1 <= r <= len-1)
 *   Omega: 1^r 0 1^{len-r-1}    (0 <= r <= len-1)
 */
struct BlockWord {
    int len;
    int r;
    BlockKind kind;

    Word expand() const {
        switch (kind) {
            case BlockKind::Pi:
                if (r < 1 || r > len - 1) throw WordDomainError("pi block parameter out of range");
                return zeros(r) + ones(len - r);
            case BlockKind::PiBar:
                if (r < 1 || r > len - 1) throw WordDomainError("pi-bar block parameter out of range");
                return ones(r) + zeros(len - r);
            case BlockKind::Omega:
                if (r < 0 || r > len - 1) throw WordDomainError("omega block parameter out of range");
                return ones(r) + "0" + ones(len - r - 1);
        }
        throw WordDomainError("unknown block kind");
    }
};

namespace detail {

inline int leading_run(const Word& w, std::size_t from, char c) {
    std::size_t i = from;
    while (i < w.size() && w[i] == c) ++i;
    return static_cast<int>(i - from);
}

inline bool has_exactly_one(const Word& w, char c) {
    return std::count(w.begin(), w.end(), c) == 1;
}

}  // namespace detail

/**
 * phi: 0^r 1^s |-> 1^{r-1} 0 1^{s-1}. Maps the 00-block words of length l+1
 * bijectively onto the one-zero words of length l.
 */
inline Word phi(const Word& w) {
    const int r = detail::leading_run(w, 0, '0');
    const int s = static_cast<int>(w.size()) - r;
    if (r < 1 || s < 1 || detail::leading_run(w, static_cast<std::size_t>(r), '1') != s)
        throw WordDomainError("phi expects a word of shape 0^r 1^s");
    return ones(r - 1) + "0" + ones(s - 1);
}

// phi-bar: 1^r 0^s |-> 1^{r-1} 0 1^{s-1}, the mirrored block map.
inline Word phi_bar(const Word& w) {
    const int r = detail::leading_run(w, 0, '1');
    const int s = static_cast<int>(w.size()) - r;
    if (r < 1 || s < 1 || detail::leading_run(w, static_cast<std::size_t>(r), '0') != s)
        throw WordDomainError("phi-bar expects a word of shape 1^r 0^s");
    return ones(r - 1) + "0" + ones(s - 1);
}

// Inverse of phi: turn the leading 1-block into 0s, append a trailing 1.
inline Word phi_inv(const Word& w) {
    if (!detail::has_exactly_one(w, '0'))
        throw WordDomainError("phi inverse expects a word with exactly one 0");
    const int a = detail::leading_run(w, 0, '1');
    const int b = static_cast<int>(w.size()) - a - 1;
    return zeros(a + 1) + ones(b + 1);
}

// Inverse of phi-bar: turn the trailing 1-block into 0s, prepend a 1.
inline Word phi_bar_inv(const Word& w) {
    if (!detail::has_exactly_one(w, '0'))
        throw WordDomainError("phi-bar inverse expects a word with exactly one 0");
    const int a = detail::leading_run(w, 0, '1');
    const int b = static_cast<int>(w.size()) - a - 1;
    return ones(a + 1) + zeros(b + 1);
}

/**
 * The bijection from region codes of length n+1 onto the twist-knot 2-state
 * words of length n+2. Dispatch is on the block signature of the input; the
 * n = 0 and n = 1 cases are the hand-defined maps, the general machinery
 * starts at n = 2.
 */
inline Word varphi(const Word& w) {
    const int n = static_cast<int>(w.size()) - 1;
    if (n < 0) throw WordDomainError("varphi expects a nonempty word");
    if (!is_bitonic(w)) throw WordDomainError("varphi expects a bitonic word");
    if (n == 0) return w == "0" ? Word("01") : Word("10");
    if (n == 1) {
        if (w == "00") return "000";
        if (w == "01") return "011";
        if (w == "10") return "101";
        return "110";
    }
    const int a = detail::leading_run(w, 0, w[0]);
    if (a == n + 1)  // constant word
        return (w[0] == '0' ? Word("01") : Word("10")) + ones(n);
    const int b = detail::leading_run(w, static_cast<std::size_t>(a), w[a]);
    if (a + b == n + 1) {  // two blocks
        return w[0] == '0' ? "00" + phi(w) : "11" + phi_bar(w);
    }
    // three blocks: strip the trailing run of length p, map the remainder
    const int p = n + 1 - a - b;
    const Word head = w.substr(0, static_cast<std::size_t>(a + b));
    if (w[0] == '0') return "01" + ones(p - 1) + "0" + phi(head);
    return "10" + ones(p - 1) + "0" + phi_bar(head);
}

/**
 * Inverse bijection: twist-knot 2-state word of length n+2 back to the region
 * code of length n+1. The leading two bits select the part; the suffix run of
 * the output is recovered from the prefix of the input.
 */
inline Word varphi_inv(const Word& w) {
    const int n = static_cast<int>(w.size()) - 2;
    if (n < 0) throw WordDomainError("varphi inverse expects a word of length >= 2");
    if (n == 0) {
        if (w == "01") return "0";
        if (w == "10") return "1";
        throw WordDomainError("not a 2-state word: expected 01 or 10");
    }
    if (n == 1) {
        if (w == "000") return "00";
        if (w == "011") return "01";
        if (w == "101") return "10";
        if (w == "110") return "11";
        throw WordDomainError("not a 2-state word of the 1-twist knot");
    }
    const Word head = w.substr(0, 2);
    const Word rest = w.substr(2);
    if (head == "00") {
        if (!detail::has_exactly_one(rest, '0'))
            throw WordDomainError("after 00, expected a one-zero word (00-block shape)");
        return phi_inv(rest);
    }
    if (head == "11") {
        if (!detail::has_exactly_one(rest, '0'))
            throw WordDomainError("after 11, expected a one-zero word (11-block shape)");
        return phi_bar_inv(rest);
    }
    if (head == "01") {
        if (rest == ones(n)) return zeros(n + 1);
        const int p = detail::leading_run(w, 1, '1');
        if (p < 1 || 1 + p >= static_cast<int>(w.size()) || w[static_cast<std::size_t>(1 + p)] != '0')
            throw WordDomainError("not of shape 0 1^p 0 ... (01-block shape)");
        const Word tail = w.substr(static_cast<std::size_t>(2 + p));
        if (tail.empty() || !detail::has_exactly_one(tail, '0'))
            throw WordDomainError("suffix after 0 1^p 0 must be a one-zero word (01-block shape)");
        return phi_inv(tail) + zeros(p);
    }
    if (head == "10") {
        if (rest == ones(n)) return ones(n + 1);
        const int q = detail::leading_run(w, 2, '1');
        if (2 + q >= static_cast<int>(w.size()) || w[static_cast<std::size_t>(2 + q)] != '0')
            throw WordDomainError("not of shape 10 1^{p-1} 0 ... (10-block shape)");
        const int p = q + 1;
        const Word tail = w.substr(static_cast<std::size_t>(3 + q));
        if (tail.empty() || !detail::has_exactly_one(tail, '0'))
            throw WordDomainError("suffix after 10 1^{p-1} 0 must be a one-zero word (10-block shape)");
        return phi_bar_inv(tail) + ones(p);
    }
    throw WordDomainError("first two bits must be one of 00, 01, 10, 11");
}

/**
 * The pairing table: eight columns per block n, in the recursive construction
 * order. Columns 0..3 are the 01-side (region codes with appended 0s and
 * their images), columns 4..7 the mirrored 1-side:
 *   0: P-hat^{01}_{n+1}   1: P^{00}_{n+1}   2: 01 F_n    3: 00 T_n
 *   4: P-hat^{10}_{n+1}   5: P^{11}_{n+1}   6: 10 F_n    7: 11 T_n
 */
struct BijectionTable {
    std::array<std::vector<Word>, 8> cols;

    std::size_t rows() const {
        std::size_t r = 0;
        for (const auto& c : cols) r = std::max(r, c.size());
        return r;
    }
};

inline BijectionTable bijection_table(int n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    BijectionTable t;
    t.cols[0] = {"0"};
    t.cols[2] = {"01"};
    t.cols[4] = {"1"};
    t.cols[6] = {"10"};
    for (int k = 1; k <= n; ++k) {
        BijectionTable next;
        auto appended = [](const std::vector<Word>& base, const std::vector<Word>& blocks, char c) {
            std::vector<Word> out;
            out.reserve(base.size() + blocks.size());
            for (const Word& w : base) out.push_back(w + c);
            for (const Word& w : blocks) out.push_back(w + c);
            return out;
        };
        auto psi_all = [](const std::vector<Word>& base, const std::vector<Word>& blocks) {
            std::vector<Word> out;
            out.reserve(base.size() + blocks.size());
            for (const Word& w : base) out.push_back(psi(w));
            for (const Word& w : blocks) out.push_back(psi(w));
            return out;
        };
        next.cols[0] = appended(t.cols[0], t.cols[1], '0');
        next.cols[2] = psi_all(t.cols[2], t.cols[3]);
        next.cols[4] = appended(t.cols[4], t.cols[5], '1');
        next.cols[6] = psi_all(t.cols[6], t.cols[7]);
        // the freshly created regions and their images, in increasing-run order
        next.cols[1].clear();
        next.cols[3].clear();
        next.cols[5].clear();
        next.cols[7].clear();
        for (int r = 1; r <= k; ++r) {
            next.cols[1].push_back(BlockWord{k + 1, r, BlockKind::Pi}.expand());
            next.cols[3].push_back("00" + BlockWord{k, r - 1, BlockKind::Omega}.expand());
            next.cols[5].push_back(BlockWord{k + 1, r, BlockKind::PiBar}.expand());
            next.cols[7].push_back("11" + BlockWord{k, r - 1, BlockKind::Omega}.expand());
        }
        t = std::move(next);
    }
    return t;
}

struct BijectionReport {
    bool is_bijection = false;
    std::size_t domain_size = 0;
    std::vector<std::string> counterexamples;
};

/**
 * Exhaustive verification over P_{n+1}: injectivity, image = Tau_n, both
 * round trips, the column pairing of the table (n >= 2), and for n <= 12 the
 * brute-force census of the built twist knot.
 */
inline BijectionReport verify_bijection(int n, int cap = kDefaultCensusCap) {
    if (n < 0 || n > 2000) throw std::invalid_argument("verify_bijection: n out of range");
    BijectionReport rep;
    WordSet domain = gen_P(n + 1);
    rep.domain_size = domain.size();
    auto complain = [&rep](std::string msg) {
        if (rep.counterexamples.size() < 16) rep.counterexamples.push_back(std::move(msg));
    };

    std::vector<Word> image;
    image.reserve(domain.size());
    for (const Word& w : domain) {
        try {
            Word t = varphi(w);
            if (t.size() != w.size() + 1) complain("length contract violated at " + w);
            if (varphi_inv(t) != w) complain("round trip failed at " + w);
            image.push_back(std::move(t));
        } catch (const WordDomainError& e) {
            complain("varphi refused domain word " + w + ": " + e.what());
        }
    }
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end())
        complain("varphi is not injective");
    WordSet expected = gen_Tau2(n);
    if (image != expected) complain("image differs from Tau_" + std::to_string(n));
    for (const Word& t : expected) {
        try {
            if (varphi(varphi_inv(t)) != t) complain("inverse round trip failed at " + t);
        } catch (const WordDomainError& e) {
            complain("varphi_inv refused 2-state word " + t + ": " + e.what());
        }
    }
    // Column pairing against the recursively built table. The table costs
    // O(n^4) to rebuild, so large-n verification relies on the set checks.
    if (n >= 2 && n <= 32) {
        BijectionTable table = bijection_table(n);
        auto check_pair = [&](int from, int to, const char* what) {
            const auto& src = table.cols[from];
            const auto& dst = table.cols[to];
            if (src.size() != dst.size()) {
                complain(std::string("table columns mismatched for ") + what);
                return;
            }
            for (std::size_t i = 0; i < src.size(); ++i)
                if (varphi(src[i]) != dst[i])
                    complain("table pairing broken: " + src[i] + " -> " + dst[i]);
        };
        check_pair(0, 2, "01 side");
        check_pair(1, 3, "00 side");
        check_pair(4, 6, "10 side");
        check_pair(5, 7, "11 side");
    }
    if (n <= 12) {
        auto census = build({Family::TwistKnot, n}).state_census(cap);
        const auto& two_states = census[2];
        if (two_states != expected) complain("census 2-states differ from Tau_" + std::to_string(n));
    }
    rep.is_bijection = rep.counterexamples.empty();
    return rep;
}

}  // namespace shadowstates
