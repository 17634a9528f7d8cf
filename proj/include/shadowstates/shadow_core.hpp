#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace shadowstates {

using DartId = std::int32_t;

// Raised when a state census would enumerate more words than the configured cap allows.
struct CensusCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultCensusCap = 22;

// The two perfect matchings on the rotation slots {0,1,2,3} of a crossing.
// m01_23 joins slot 0 with 1 and slot 2 with 3; m12_30 joins 1-2 and 3-0.
enum class Matching : std::uint8_t { m01_23, m12_30 };

inline Matching other(Matching m) {
    return m == Matching::m01_23 ? Matching::m12_30 : Matching::m01_23;
}

enum class RegionColor : std::uint8_t { A, B };

struct Crossing {
    std::array<DartId, 4> darts;  // counterclockwise rotation order
    Matching a_split = Matching::m01_23;  // derived from the checkerboard coloring
};

namespace detail {

class DisjointSet {
public:
    explicit DisjointSet(std::size_t n) : parent_(n) { reset(); }

    void reset() { std::iota(parent_.begin(), parent_.end(), DartId(0)); }

    DartId find(DartId x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(DartId a, DartId b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[b] = a;
    }

    int count_roots() {
        int c = 0;
        for (DartId i = 0; i < DartId(parent_.size()); ++i) {
            if (find(i) == i) ++c;
        }
        return c;
    }

private:
    std::vector<DartId> parent_;
};

}  // namespace detail

/**
 * A knot shadow as a combinatorial map: 4-valent crossings with a
 * counterclockwise rotation system, an arc involution alpha on darts, and an
 * explicitly designated unbounded face. Faces, the checkerboard coloring and
 * the per-crossing A-smoothing are derived at construction; the object is
 * immutable afterwards.
 *
 * Crossing-free loop components (the 0-crossing families) are carried as
 * base_loops with an empty crossing list.
 */
class ShadowDiagram {
public:
    ShadowDiagram(std::vector<std::array<DartId, 4>> rotations,
                  std::vector<DartId> alpha,
                  DartId outer_dart,
                  int base_loops = 0)
        : alpha_(std::move(alpha)), outer_dart_(outer_dart), base_loops_(base_loops) {
        crossings_.reserve(rotations.size());
        for (const auto& rot : rotations) crossings_.push_back(Crossing{rot, Matching::m01_23});
        validate_structure();
        if (!crossings_.empty()) {
            trace_faces();
            color_faces();
            derive_a_splits();
        }
    }

    static ShadowDiagram crossingless(int loops) {
        return ShadowDiagram({}, {}, 0, loops);
    }

    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    std::size_t dart_count() const { return alpha_.size(); }
    int base_loops() const { return base_loops_; }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    DartId alpha(DartId d) const { return alpha_[d]; }
    DartId outer_dart() const { return outer_dart_; }

    // Rotation successor: next dart counterclockwise at the same crossing.
    DartId sigma(DartId d) const {
        auto [c, slot] = slot_of_[d];
        return crossings_[c].darts[(slot + 1) % 4];
    }

    // Faces as dart-cycles, orbits of sigma∘alpha. Each dart stands for the
    // corner between its clockwise-previous slot and its own slot.
    const std::vector<std::vector<DartId>>& faces() const { return faces_; }

    int face_of(DartId d) const { return face_of_[d]; }
    RegionColor face_color(int face) const { return face_color_[face]; }
    int outer_face() const { return face_of_[outer_dart_]; }

    // Color of the corner between slots j and j+1 (mod 4) of a crossing.
    RegionColor corner_color(int crossing, int corner) const {
        DartId rep = crossings_[crossing].darts[(corner + 1) % 4];
        return face_color_[face_of_[rep]];
    }

    struct Checkerboard {
        std::vector<RegionColor> face_colors;  // indexed like faces()
        std::vector<Matching> a_splits;        // indexed like crossings()
    };

    // The derived coloring: the outer face is A, adjacent faces alternate,
    // and each crossing's A-split joins its two A-corners.
    Checkerboard checkerboard() const {
        Checkerboard cb;
        cb.face_colors = face_color_;
        cb.a_splits.reserve(crossings_.size());
        for (const auto& c : crossings_) cb.a_splits.push_back(c.a_split);
        return cb;
    }

    /**
     * Smooth every crossing according to the word (bit i: '0' = A-split,
     * '1' = B-split at crossing i) and count the resulting loops.
     */
    int resolve(std::string_view word) const {
        if (static_cast<int>(word.size()) != crossing_count())
            throw std::invalid_argument("state word length " + std::to_string(word.size()) +
                                        " does not match crossing count " +
                                        std::to_string(crossing_count()));
        if (crossings_.empty()) return base_loops_;
        detail::DisjointSet dsu(dart_count());
        resolve_into(word, dsu);
        return dsu.count_roots() + base_loops_;
    }

    /**
     * Full 2^n state enumeration: component count -> lexicographically sorted
     * state words. Refuses when n exceeds the cap.
     */
    std::map<int, std::vector<std::string>> state_census(int cap = kDefaultCensusCap) const {
        const int n = crossing_count();
        if (n > cap)
            throw CensusCapExceeded("state census over 2^" + std::to_string(n) +
                                    " words refused: crossing count " + std::to_string(n) +
                                    " exceeds cap " + std::to_string(cap));
        std::map<int, std::vector<std::string>> census;
        if (n == 0) {
            census[base_loops_].push_back("");
            return census;
        }
        detail::DisjointSet dsu(dart_count());
        std::string word(static_cast<std::size_t>(n), '0');
        const std::uint64_t total = std::uint64_t(1) << n;
        for (std::uint64_t w = 0; w < total; ++w) {
            for (int i = 0; i < n; ++i)
                word[static_cast<std::size_t>(i)] = (w >> (n - 1 - i)) & 1 ? '1' : '0';
            dsu.reset();
            resolve_into(word, dsu);
            census[dsu.count_roots() + base_loops_].push_back(word);
        }
        return census;
    }

private:
    void resolve_into(std::string_view word, detail::DisjointSet& dsu) const {
        for (DartId d = 0; d < DartId(dart_count()); ++d) dsu.unite(d, alpha_[d]);
        for (std::size_t c = 0; c < crossings_.size(); ++c) {
            char bit = word[c];
            if (bit != '0' && bit != '1')
                throw std::invalid_argument("state word must be binary, got '" +
                                            std::string(1, bit) + "'");
            Matching m = bit == '0' ? crossings_[c].a_split : other(crossings_[c].a_split);
            const auto& ds = crossings_[c].darts;
            if (m == Matching::m01_23) {
                dsu.unite(ds[0], ds[1]);
                dsu.unite(ds[2], ds[3]);
            } else {
                dsu.unite(ds[1], ds[2]);
                dsu.unite(ds[3], ds[0]);
            }
        }
    }

    void validate_structure() {
        const std::size_t nd = crossings_.size() * 4;
        if (alpha_.size() != nd)
            throw std::invalid_argument("alpha must cover exactly 4 darts per crossing");
        if (crossings_.empty()) {
            if (base_loops_ < 1)
                throw std::invalid_argument("crossingless diagram needs at least one loop");
            return;
        }
        std::vector<int> seen(nd, 0);
        slot_of_.assign(nd, {});
        for (std::size_t c = 0; c < crossings_.size(); ++c) {
            for (int s = 0; s < 4; ++s) {
                DartId d = crossings_[c].darts[s];
                if (d < 0 || d >= DartId(nd) || seen[d]++)
                    throw std::invalid_argument("rotation system must list every dart exactly once");
                slot_of_[d] = {static_cast<int>(c), s};
            }
        }
        for (DartId d = 0; d < DartId(nd); ++d) {
            DartId a = alpha_[d];
            if (a < 0 || a >= DartId(nd) || a == d || alpha_[a] != d)
                throw std::invalid_argument("alpha is not a fixed-point-free involution");
        }
        if (outer_dart_ < 0 || outer_dart_ >= DartId(nd))
            throw std::invalid_argument("outer dart out of range");
    }

    void trace_faces() {
        const std::size_t nd = dart_count();
        face_of_.assign(nd, -1);
        for (DartId start = 0; start < DartId(nd); ++start) {
            if (face_of_[start] != -1) continue;
            int face = static_cast<int>(faces_.size());
            std::vector<DartId> cycle;
            DartId d = start;
            do {
                face_of_[d] = face;
                cycle.push_back(d);
                d = sigma(alpha_[d]);
            } while (d != start);
            faces_.push_back(std::move(cycle));
        }
        const int expected = crossing_count() + 2;
        if (static_cast<int>(faces_.size()) != expected)
            throw std::invalid_argument("face count " + std::to_string(faces_.size()) +
                                        " does not match crossings + 2 = " +
                                        std::to_string(expected) +
                                        "; not a planar shadow");
    }

    void color_faces() {
        face_color_.assign(faces_.size(), RegionColor::A);
        std::vector<int> state(faces_.size(), -1);  // -1 unvisited, 0 = A, 1 = B
        std::vector<int> queue{outer_face()};
        state[static_cast<std::size_t>(outer_face())] = 0;
        while (!queue.empty()) {
            int f = queue.back();
            queue.pop_back();
            for (DartId d : faces_[static_cast<std::size_t>(f)]) {
                int g = face_of_[alpha_[d]];
                if (state[static_cast<std::size_t>(g)] == -1) {
                    state[static_cast<std::size_t>(g)] = 1 - state[static_cast<std::size_t>(f)];
                    queue.push_back(g);
                } else if (state[static_cast<std::size_t>(g)] == state[static_cast<std::size_t>(f)]) {
                    throw std::invalid_argument("face adjacency graph is not bipartite; "
                                                "diagram is not a valid shadow");
                }
            }
        }
        for (std::size_t f = 0; f < faces_.size(); ++f) {
            if (state[f] == -1)
                throw std::invalid_argument("diagram is not connected");
            face_color_[f] = state[f] == 0 ? RegionColor::A : RegionColor::B;
        }
    }

    // The A-split joins the two A-corners. Corner (0,1) is represented by the
    // dart in slot 1; if it is A-colored, the A-corners are (0,1) and (2,3)
    // and the matching joining them is m12_30.
    void derive_a_splits() {
        for (auto& c : crossings_) {
            RegionColor col01 = face_color_[face_of_[c.darts[1]]];
            c.a_split = col01 == RegionColor::A ? Matching::m12_30 : Matching::m01_23;
        }
    }

    std::vector<Crossing> crossings_;
    std::vector<DartId> alpha_;
    DartId outer_dart_ = 0;
    int base_loops_ = 0;
    std::vector<std::pair<int, int>> slot_of_;  // dart -> (crossing, slot)
    std::vector<std::vector<DartId>> faces_;
    std::vector<int> face_of_;
    std::vector<RegionColor> face_color_;
};

}  // namespace shadowstates
