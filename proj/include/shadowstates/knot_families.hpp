#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "shadowstates/shadow_core.hpp"

namespace shadowstates {

enum class Family { TwistLoop, Foil, TwistKnot, FigureEight };

struct FamilySpec {
    Family family;
    int half_twists = 0;
};

inline int crossing_count(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::TwistLoop:
        case Family::Foil: return spec.half_twists;
        case Family::TwistKnot: return spec.half_twists + 2;
        case Family::FigureEight: return 4;
    }
    return 0;
}

namespace detail {

// Slot layout of a twist-region crossing: 0=NE, 1=NW, 2=SW, 3=SE (counterclockwise).
// Consecutive crossings share an upper arc NE_i -- NW_{i+1} and a lower arc
// SE_i -- SW_{i+1}.

inline void link_involution(std::vector<DartId>& alpha, DartId a, DartId b) {
    alpha[a] = b;
    alpha[b] = a;
}

inline ShadowDiagram build_twist_loop(int n) {
    if (n == 0) return ShadowDiagram::crossingless(1);
    std::vector<std::array<DartId, 4>> rot(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        rot[i] = {4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3};
    std::vector<DartId> alpha(static_cast<std::size_t>(4 * n), -1);
    for (int i = 0; i + 1 < n; ++i) {
        link_involution(alpha, 4 * i, 4 * (i + 1) + 1);      // upper arc
        link_involution(alpha, 4 * i + 3, 4 * (i + 1) + 2);  // lower arc
    }
    link_involution(alpha, 1, 2);                        // left cap
    link_involution(alpha, 4 * (n - 1), 4 * (n - 1) + 3);  // right cap
    // The region above the chain is unbounded; dart 1 marks its corner at the
    // first crossing.
    return ShadowDiagram(std::move(rot), std::move(alpha), 1);
}

// The foil is a closed ring of crossings. Slots: 0 = outer strand toward the
// next crossing, 1 = inner toward next, 2 = inner toward previous,
// 3 = outer toward previous (counterclockwise at the vertex).
inline ShadowDiagram build_foil(int n) {
    if (n == 0) return ShadowDiagram::crossingless(2);
    std::vector<std::array<DartId, 4>> rot(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        rot[i] = {4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3};
    std::vector<DartId> alpha(static_cast<std::size_t>(4 * n), -1);
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        link_involution(alpha, 4 * i, 4 * j + 3);      // outer arc
        link_involution(alpha, 4 * i + 1, 4 * j + 2);  // inner arc
    }
    // Radially outward corner of the first crossing lies in the unbounded face.
    return ShadowDiagram(std::move(rot), std::move(alpha), 0);
}

// Twist knot: a twist chain of n crossings whose two end caps hook through
// each other, forming the 2-crossing link part. Crossing order: the two link
// crossings first, then the twist crossings left to right.
//
// Link crossing slots; L1 is crossed by the cap running to the top of the
// hook, L2 by its return:
//   L1: 0 = tongue toward the outer turn, 1 = cap toward the hook top,
//       2 = tongue toward its tip, 3 = cap toward the hook back
//   L2: 0 = tongue exit, 1 = cap from the hook back, 2 = tongue tip,
//       3 = cap toward the hook bottom
inline ShadowDiagram build_twist_knot(int n) {
    const int crossings = n + 2;
    std::vector<std::array<DartId, 4>> rot(static_cast<std::size_t>(crossings));
    for (int i = 0; i < crossings; ++i)
        rot[i] = {4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3};
    std::vector<DartId> alpha(static_cast<std::size_t>(4 * crossings), -1);
    link_involution(alpha, 3, 5);  // hook back between the two link crossings
    link_involution(alpha, 2, 6);  // tongue tip inside the hook
    if (n == 0) {
        link_involution(alpha, 0, 1);  // upper strand fused with both caps
        link_involution(alpha, 4, 7);  // lower strand
    } else {
        auto twist = [](int i, int slot) { return 8 + 4 * i + slot; };
        link_involution(alpha, twist(0, 1), 0);          // left cap upper
        link_involution(alpha, twist(n - 1, 0), 1);      // right cap upper
        link_involution(alpha, 7, twist(n - 1, 3));      // right cap lower
        link_involution(alpha, 4, twist(0, 2));          // left cap lower
        for (int i = 0; i + 1 < n; ++i) {
            link_involution(alpha, twist(i, 0), twist(i + 1, 1));
            link_involution(alpha, twist(i, 3), twist(i + 1, 2));
        }
    }
    return ShadowDiagram(std::move(rot), std::move(alpha), 1);
}

}  // namespace detail

inline ShadowDiagram build(const FamilySpec& spec) {
    if (spec.half_twists < 0)
        throw std::invalid_argument("half-twist count must be nonnegative");
    switch (spec.family) {
        case Family::TwistLoop: return detail::build_twist_loop(spec.half_twists);
        case Family::Foil: return detail::build_foil(spec.half_twists);
        case Family::TwistKnot: return detail::build_twist_knot(spec.half_twists);
        case Family::FigureEight: return detail::build_twist_knot(2);
    }
    throw std::invalid_argument("unknown family");
}

inline ShadowDiagram figure_eight() { return build({Family::FigureEight, 0}); }

inline Family family_from_name(const std::string& name) {
    if (name == "twist-loop") return Family::TwistLoop;
    if (name == "foil") return Family::Foil;
    if (name == "twist-knot") return Family::TwistKnot;
    if (name == "figure-eight") return Family::FigureEight;
    throw std::invalid_argument("unknown family '" + name +
                                "' (expected twist-loop, foil, twist-knot or figure-eight)");
}

inline std::string family_name(Family f) {
    switch (f) {
        case Family::TwistLoop: return "twist-loop";
        case Family::Foil: return "foil";
        case Family::TwistKnot: return "twist-knot";
        case Family::FigureEight: return "figure-eight";
    }
    return "?";
}

}  // namespace shadowstates
