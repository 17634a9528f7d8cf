#pragma once

#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "shadowstates/words.hpp"

namespace shadowstates {

// Probe placement could not certify a region; retry with a smaller delta.
struct ProbeToleranceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Vec2 {
    double x = 0;
    double y = 0;
};

inline double dist(Vec2 a, Vec2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

/**
 * n congruent circles of radius r > 1 centered on the unit circle. With
 * distinct centers the arrangement is automatically general: every pair of
 * centers is at distance <= 2 < 2r, and a triple point would force r = 1.
 */
class Rosette {
public:
    static Rosette regular(int n, double r) {
        std::vector<double> angles(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            angles[static_cast<std::size_t>(i)] = 2.0 * M_PI * i / n;
        return Rosette(std::move(angles), r);
    }

    // Centers at explicit angles, counterclockwise ascending. Ascending order
    // is exactly the no-center-on-the-arc condition the lune structure needs.
    static Rosette from_angles(std::vector<double> angles, double r) {
        return Rosette(std::move(angles), r);
    }

    int size() const { return static_cast<int>(centers_.size()); }
    double radius() const { return r_; }
    const std::vector<Vec2>& centers() const { return centers_; }

    struct Vertex {
        int i, j;  // owning circle pair, 0-based, i < j
        Vec2 p;
    };

    // The n(n-1) intersection points, two per circle pair, in (i, j, +/-) order.
    std::vector<Vertex> intersections() const {
        std::vector<Vertex> out;
        const int n = size();
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const Vec2 a = centers_[static_cast<std::size_t>(i)];
                const Vec2 b = centers_[static_cast<std::size_t>(j)];
                const double d = dist(a, b);
                const double h = std::sqrt(r_ * r_ - d * d / 4.0);
                const Vec2 mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
                const Vec2 dir{(b.x - a.x) / d, (b.y - a.y) / d};
                const Vec2 normal{-dir.y, dir.x};
                out.push_back({i, j, {mid.x + h * normal.x, mid.y + h * normal.y}});
                out.push_back({i, j, {mid.x - h * normal.x, mid.y - h * normal.y}});
            }
        }
        return out;
    }

    bool inside(int circle, Vec2 p) const {
        return dist(p, centers_[static_cast<std::size_t>(circle)]) < r_;
    }

    // Signed clearance of p from the nearest circle boundary.
    double boundary_clearance(Vec2 p) const {
        double best = 1e300;
        for (const Vec2& c : centers_)
            best = std::min(best, std::abs(dist(p, c) - r_));
        return best;
    }

    std::string code_of(Vec2 p) const {
        std::string code(static_cast<std::size_t>(size()), '0');
        for (int i = 0; i < size(); ++i)
            if (inside(i, p)) code[static_cast<std::size_t>(i)] = '1';
        return code;
    }

    // V - E + F: n(n-1) vertices, each circle cut into 2(n-1) arcs.
    long long euler_region_count() const {
        const long long n = size();
        return n * (n - 1) + 2;
    }

    /**
     * Region codes by probing: the rosette center, a far exterior point, and
     * 16 compass probes at distance delta around every intersection vertex.
     * A probe counts only when it clears every circle boundary by delta/4.
     * Returns code -> first accepted probe point.
     */
    std::map<std::string, Vec2> region_probe_map(double delta = 1e-6) const {
        std::map<std::string, Vec2> out;
        auto offer = [&](Vec2 p) {
            if (boundary_clearance(p) <= delta / 4) return false;
            out.emplace(code_of(p), p);
            return true;
        };
        offer({0.0, 0.0});
        offer({10.0 * (1.0 + r_), 0.0});
        for (const Vertex& v : intersections()) {
            int accepted = 0;
            for (int k = 0; k < 16; ++k) {
                const double a = 2.0 * M_PI * k / 16;
                if (offer({v.p.x + delta * std::cos(a), v.p.y + delta * std::sin(a)}))
                    ++accepted;
            }
            if (accepted == 0)
                throw ProbeToleranceError("all 16 probes rejected near a vertex; retry with smaller delta");
        }
        return out;
    }

    std::vector<std::string> region_codes(double delta = 1e-6) const {
        std::vector<std::string> codes;
        for (const auto& [code, p] : region_probe_map(delta)) codes.push_back(code);
        return codes;
    }

    /**
     * Codes of the lune D_i \ D_{i-1} (circles 1-based, i-1 wrapping to n):
     * inside circle i, outside circle i-1. Exactly n-1 codes for n >= 2.
     */
    std::vector<std::string> lune_codes(int i, double delta = 1e-6) const {
        const int n = size();
        if (i < 1 || i > n) throw std::invalid_argument("lune index out of range");
        const int prev = i == 1 ? n : i - 1;
        std::vector<std::string> out;
        for (const auto& code : region_codes(delta))
            if (code[static_cast<std::size_t>(i - 1)] == '1' &&
                code[static_cast<std::size_t>(prev - 1)] == '0')
                out.push_back(code);
        return out;
    }

    // No intersection point of two circles may lie within tol of a third.
    bool vertices_clear_of_third_circles(double tol = 1e-9) const {
        for (const Vertex& v : intersections()) {
            for (int k = 0; k < size(); ++k) {
                if (k == v.i || k == v.j) continue;
                if (std::abs(dist(v.p, centers_[static_cast<std::size_t>(k)]) - r_) <= tol)
                    return false;
            }
        }
        return true;
    }

    /**
     * For each circle pair and each third circle: exactly one of the two
     * intersection points lies inside the third, and it is the one on the
     * same side of the center chord as the third center.
     */
    bool intersection_inside_rule_holds() const {
        const int n = size();
        auto verts = intersections();
        for (std::size_t vi = 0; vi < verts.size(); vi += 2) {
            const Vertex& p = verts[vi];
            const Vertex& q = verts[vi + 1];
            const Vec2 a = centers_[static_cast<std::size_t>(p.i)];
            const Vec2 b = centers_[static_cast<std::size_t>(p.j)];
            for (int k = 0; k < n; ++k) {
                if (k == p.i || k == p.j) continue;
                const bool p_in = inside(k, p.p);
                const bool q_in = inside(k, q.p);
                if (p_in == q_in) return false;
                const Vec2 c = centers_[static_cast<std::size_t>(k)];
                auto side = [&](Vec2 t) {
                    return (b.x - a.x) * (t.y - a.y) - (b.y - a.y) * (t.x - a.x);
                };
                const double sc = side(c);
                const double sp = side(p_in ? p.p : q.p);
                if (sc * sp <= 0) return false;
            }
        }
        return true;
    }

    // Deterministic SVG 1.1 rendering; optional region labels at probe points.
    std::string render_svg(const std::map<std::string, Vec2>* labels = nullptr) const {
        const double extent = 1.0 + r_ + 0.5;
        std::string svg;
        svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" +
               fmt(-extent) + " " + fmt(-extent) + " " + fmt(2 * extent) + " " + fmt(2 * extent) +
               "\">\n";
        svg += "  <g fill=\"none\" stroke=\"black\" stroke-width=\"0.01\">\n";
        for (const Vec2& c : centers_)
            svg += "    <circle cx=\"" + fmt(c.x) + "\" cy=\"" + fmt(c.y) + "\" r=\"" + fmt(r_) +
                   "\"/>\n";
        svg += "  </g>\n";
        svg += "  <g fill=\"black\">\n";
        for (const Vertex& v : intersections())
            svg += "    <circle cx=\"" + fmt(v.p.x) + "\" cy=\"" + fmt(v.p.y) +
                   "\" r=\"0.03\"/>\n";
        svg += "  </g>\n";
        if (labels) {
            svg += "  <g font-size=\"0.1\" text-anchor=\"middle\">\n";
            for (const auto& [code, p] : *labels)
                svg += "    <text x=\"" + fmt(p.x) + "\" y=\"" + fmt(p.y) + "\">" + code +
                       "</text>\n";
            svg += "  </g>\n";
        }
        svg += "</svg>\n";
        return svg;
    }

private:
    Rosette(std::vector<double> angles, double r) : r_(r) {
        if (angles.empty()) throw std::invalid_argument("rosette needs at least one circle");
        if (!(r > 1.0)) throw std::invalid_argument("rosette radius must exceed 1");
        for (std::size_t i = 0; i < angles.size(); ++i) {
            if (angles[i] < 0 || angles[i] >= 2.0 * M_PI)
                throw std::invalid_argument("center angles must lie in [0, 2pi)");
            if (i > 0 && !(angles[i] > angles[i - 1]))
                throw std::invalid_argument("center angles must be strictly ascending");
            centers_.push_back({std::cos(angles[i]), std::sin(angles[i])});
        }
    }

    static std::string fmt(double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", v);
        // avoid the negative-zero artifact so output is stable across libms
        if (std::string(buf) == "-0.000000") return "0.000000";
        return buf;
    }

    double r_;
    std::vector<Vec2> centers_;
};

}  // namespace shadowstates
