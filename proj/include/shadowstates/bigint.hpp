#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace shadowstates {

/**
 * Unsigned arbitrary-precision integer, little-endian base-2^32 limbs.
 * Only the operations the polynomial layer needs: add, subtract (must not
 * underflow), multiply, compare, decimal rendering.
 */
class BigUint {
public:
    BigUint() = default;

    BigUint(std::uint64_t v) {
        if (v != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
            if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
        }
    }

    bool is_zero() const { return limbs_.empty(); }

    static BigUint two_pow(unsigned k) {
        BigUint r;
        r.limbs_.assign(k / 32 + 1, 0);
        r.limbs_.back() = std::uint32_t(1) << (k % 32);
        return r;
    }

    friend bool operator==(const BigUint& a, const BigUint& b) { return a.limbs_ == b.limbs_; }
    friend bool operator!=(const BigUint& a, const BigUint& b) { return !(a == b); }

    friend bool operator<(const BigUint& a, const BigUint& b) {
        if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size();
        for (std::size_t i = a.limbs_.size(); i-- > 0;) {
            if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i];
        }
        return false;
    }
    friend bool operator<=(const BigUint& a, const BigUint& b) { return !(b < a); }
    friend bool operator>(const BigUint& a, const BigUint& b) { return b < a; }
    friend bool operator>=(const BigUint& a, const BigUint& b) { return !(a < b); }

    BigUint& operator+=(const BigUint& o) {
        if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::uint64_t s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
            limbs_[i] = static_cast<std::uint32_t>(s);
            carry = s >> 32;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
        return *this;
    }

    friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }

    BigUint& operator-=(const BigUint& o) {
        if (*this < o) throw std::underflow_error("BigUint subtraction would be negative");
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::int64_t d = std::int64_t(limbs_[i]) - borrow - (i < o.limbs_.size() ? o.limbs_[i] : 0);
            borrow = d < 0 ? 1 : 0;
            limbs_[i] = static_cast<std::uint32_t>(d + (borrow << 32));
        }
        trim();
        return *this;
    }

    friend BigUint operator-(BigUint a, const BigUint& b) { return a -= b; }

    friend BigUint operator*(const BigUint& a, const BigUint& b) {
        if (a.is_zero() || b.is_zero()) return BigUint();
        BigUint r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = r.limbs_[i + j] +
                                    std::uint64_t(a.limbs_[i]) * b.limbs_[j] + carry;
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            std::size_t k = i + b.limbs_.size();
            while (carry) {
                std::uint64_t cur = r.limbs_[k] + carry;
                r.limbs_[k] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        return r;
    }

    BigUint& operator*=(const BigUint& o) { return *this = *this * o; }

    // Fits in uint64? Used where callers know values are small.
    bool fits_u64() const { return limbs_.size() <= 2; }

    std::uint64_t to_u64() const {
        if (!fits_u64()) throw std::overflow_error("BigUint does not fit in 64 bits");
        std::uint64_t v = 0;
        if (limbs_.size() > 1) v = std::uint64_t(limbs_[1]) << 32;
        if (!limbs_.empty()) v |= limbs_[0];
        return v;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::vector<std::uint32_t> work = limbs_;
        std::string out;
        while (!work.empty()) {
            // divide by 1e9, collecting the remainder
            std::uint64_t rem = 0;
            for (std::size_t i = work.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | work[i];
                work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!work.empty() && work.back() == 0) work.pop_back();
            std::string chunk = std::to_string(rem);
            if (work.empty()) {
                out.insert(0, chunk);
            } else {
                out.insert(0, std::string(9 - chunk.size(), '0') + chunk);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }

    std::vector<std::uint32_t> limbs_;
};

// C(n, k) as an exact integer, Pascal-row iteration.
inline BigUint binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return BigUint();
    std::vector<BigUint> row{BigUint(1)};
    for (int i = 1; i <= n; ++i) {
        std::vector<BigUint> next(i + 1);
        next[0] = BigUint(1);
        next[i] = BigUint(1);
        for (int j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

}  // namespace shadowstates
