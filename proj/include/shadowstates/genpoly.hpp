#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "shadowstates/bigint.hpp"
#include "shadowstates/knot_families.hpp"
#include "shadowstates/shadow_core.hpp"

namespace shadowstates {

/**
 * Dense polynomial in x with exact nonnegative integer coefficients;
 * coefficient k counts the k-component states. The constant term of any
 * knot polynomial is zero, since a state has at least one component.
 */
class GenPolynomial {
public:
    GenPolynomial() = default;

    explicit GenPolynomial(std::vector<BigUint> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static GenPolynomial from_u64(std::vector<std::uint64_t> cs) {
        std::vector<BigUint> v(cs.begin(), cs.end());
        return GenPolynomial(std::move(v));
    }

    static GenPolynomial monomial(int k, BigUint c = BigUint(1)) {
        std::vector<BigUint> v(static_cast<std::size_t>(k) + 1);
        v.back() = std::move(c);
        return GenPolynomial(std::move(v));
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const BigUint& coeff(int k) const {
        static const BigUint zero;
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
        return coeffs_[static_cast<std::size_t>(k)];
    }

    const std::vector<BigUint>& coeffs() const { return coeffs_; }

    friend bool operator==(const GenPolynomial& a, const GenPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const GenPolynomial& a, const GenPolynomial& b) { return !(a == b); }

    friend GenPolynomial operator+(const GenPolynomial& a, const GenPolynomial& b) {
        std::vector<BigUint> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(int(i)) + b.coeff(int(i));
        return GenPolynomial(std::move(r));
    }

    // Throws if any coefficient would go negative.
    friend GenPolynomial operator-(const GenPolynomial& a, const GenPolynomial& b) {
        std::vector<BigUint> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(int(i)) - b.coeff(int(i));
        return GenPolynomial(std::move(r));
    }

    friend GenPolynomial operator*(const GenPolynomial& a, const GenPolynomial& b) {
        if (a.coeffs_.empty() || b.coeffs_.empty()) return GenPolynomial();
        std::vector<BigUint> r(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return GenPolynomial(std::move(r));
    }

    // Multiply by x^k.
    GenPolynomial shifted(int k) const {
        if (coeffs_.empty()) return {};
        std::vector<BigUint> r(coeffs_.size() + static_cast<std::size_t>(k));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i + static_cast<std::size_t>(k)] = coeffs_[i];
        return GenPolynomial(std::move(r));
    }

    BigUint eval_one() const {
        BigUint s;
        for (const auto& c : coeffs_) s += c;
        return s;
    }

    // Low-to-high coefficient list, e.g. "0,5,8,3".
    std::string to_csv() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) out += ',';
            out += coeffs_[i].to_string();
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<BigUint> coeffs_;
};

inline GenPolynomial xplus1_pow(int n) {
    GenPolynomial p = GenPolynomial::from_u64({1});
    const GenPolynomial xp1 = GenPolynomial::from_u64({1, 1});
    for (int i = 0; i < n; ++i) p = p * xp1;
    return p;
}

enum class PolyMethod { Closed, Recurrence, ViaParts, BruteForce };

inline PolyMethod poly_method_from_name(const std::string& s) {
    if (s == "closed") return PolyMethod::Closed;
    if (s == "recurrence") return PolyMethod::Recurrence;
    if (s == "via-parts") return PolyMethod::ViaParts;
    if (s == "bruteforce") return PolyMethod::BruteForce;
    throw std::invalid_argument("unknown method '" + s +
                                "' (expected closed, recurrence, via-parts or bruteforce)");
}

// Census polynomial of an arbitrary diagram: coefficient k = number of k-states.
inline GenPolynomial poly_bruteforce(const ShadowDiagram& diagram, int cap = kDefaultCensusCap) {
    auto census = diagram.state_census(cap);
    int deg = census.rbegin()->first;
    std::vector<BigUint> coeffs(static_cast<std::size_t>(deg) + 1);
    for (const auto& [k, words] : census) coeffs[static_cast<std::size_t>(k)] = BigUint(words.size());
    return GenPolynomial(std::move(coeffs));
}

// T_n(x) = x(x+1)^n; the recurrence route iterates T_n = (x+1)T_{n-1} from T_0 = x.
inline GenPolynomial twist_loop_poly(int n, PolyMethod method = PolyMethod::Closed) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    switch (method) {
        case PolyMethod::Closed:
            return xplus1_pow(n).shifted(1);
        case PolyMethod::Recurrence: {
            GenPolynomial t = GenPolynomial::from_u64({0, 1});
            const GenPolynomial xp1 = GenPolynomial::from_u64({1, 1});
            for (int i = 1; i <= n; ++i) t = t * xp1;
            return t;
        }
        case PolyMethod::BruteForce:
            return poly_bruteforce(build({Family::TwistLoop, n}));
        default:
            throw std::invalid_argument("twist-loop methods: closed, recurrence, bruteforce");
    }
}

// F_n(x) = (x+1)^n + x^2 - 1; the recurrence route unrolls F_n = T_{n-1} + F_{n-1}.
inline GenPolynomial foil_poly(int n, PolyMethod method = PolyMethod::Closed) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    switch (method) {
        case PolyMethod::Closed:
            return xplus1_pow(n) + GenPolynomial::from_u64({0, 0, 1}) - GenPolynomial::from_u64({1});
        case PolyMethod::Recurrence: {
            GenPolynomial f = GenPolynomial::from_u64({0, 0, 1});
            for (int i = 1; i <= n; ++i) f = f + twist_loop_poly(i - 1, PolyMethod::Recurrence);
            return f;
        }
        case PolyMethod::BruteForce:
            return poly_bruteforce(build({Family::Foil, n}));
        default:
            throw std::invalid_argument("foil methods: closed, recurrence, bruteforce");
    }
}

// tau_n(x) = 2(1+x)^{n+1} + x^3 + 2x^2 - x - 2; the two-route alternative
// assembles it from the parts, tau_n = T_n + (x+2)F_n.
inline GenPolynomial twist_knot_poly(int n, PolyMethod method = PolyMethod::Closed) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    switch (method) {
        case PolyMethod::Closed: {
            GenPolynomial p = GenPolynomial::from_u64({2}) * xplus1_pow(n + 1) +
                              GenPolynomial::from_u64({0, 0, 2, 1});
            return p - GenPolynomial::from_u64({2, 1});
        }
        case PolyMethod::ViaParts:
            return twist_loop_poly(n) + GenPolynomial::from_u64({2, 1}) * foil_poly(n);
        case PolyMethod::BruteForce:
            return poly_bruteforce(build({Family::TwistKnot, n}));
        default:
            throw std::invalid_argument("twist-knot methods: closed, via-parts, bruteforce");
    }
}

inline GenPolynomial family_poly(Family family, int n, PolyMethod method) {
    switch (family) {
        case Family::TwistLoop: return twist_loop_poly(n, method);
        case Family::Foil: return foil_poly(n, method);
        case Family::TwistKnot: return twist_knot_poly(n, method);
        case Family::FigureEight:
            if (method == PolyMethod::BruteForce) return poly_bruteforce(figure_eight());
            return twist_knot_poly(2, method == PolyMethod::Recurrence ? PolyMethod::ViaParts : method);
    }
    throw std::invalid_argument("unknown family");
}

/**
 * Coefficient rows n = 0..n_max, zero-padded to a fixed width (the degree of
 * the last row plus one).
 */
inline std::vector<std::vector<BigUint>> coefficient_table(Family family, int n_max) {
    if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
    int width = 0;
    std::vector<std::vector<BigUint>> rows;
    rows.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        GenPolynomial p = family_poly(family, n, PolyMethod::Closed);
        std::vector<BigUint> row = p.coeffs();
        rows.push_back(std::move(row));
        width = std::max(width, static_cast<int>(rows.back().size()));
    }
    for (auto& row : rows) row.resize(static_cast<std::size_t>(width));
    return rows;
}

}  // namespace shadowstates
