#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qredux {

/// Arbitrary-precision nonnegative integer.
///
/// Exact combinatorial counts (binomials, Catalan numbers, eigenvalue
/// multiplicities) overflow 64-bit integers well below the sizes exercised
/// here, so counts are kept exact in a little-endian base-2^32 limb vector.
/// Only the operations the counting layer needs are provided.
class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t v);

    static BigUint pow2(unsigned n);

    BigUint& operator+=(const BigUint& rhs);
    friend BigUint operator+(BigUint lhs, const BigUint& rhs) { return lhs += rhs; }

    /// Multiply in place by a small factor.
    BigUint& mul(std::uint32_t factor);
    /// Divide in place by a small divisor; returns the remainder.
    std::uint32_t div(std::uint32_t divisor);
    /// Divide in place by a divisor known to divide exactly (throws otherwise).
    BigUint& div_exact(std::uint32_t divisor);

    bool operator==(const BigUint& rhs) const { return limbs_ == rhs.limbs_; }
    bool operator!=(const BigUint& rhs) const { return !(*this == rhs); }
    bool operator<(const BigUint& rhs) const;

    bool is_zero() const { return limbs_.empty(); }

    /// Nearest double (may overflow to +inf for huge values).
    double to_double() const;
    std::string to_string() const;

private:
    void trim();
    std::vector<std::uint32_t> limbs_; // little-endian; empty means zero
};

} // namespace qredux
