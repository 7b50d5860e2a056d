#include "qredux/bignum.hpp"

#include <algorithm>
#include <cmath>

#include "qredux/errors.hpp"

namespace qredux {

BigUint::BigUint(std::uint64_t v) {
    while (v != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
        v >>= 32;
    }
}

BigUint BigUint::pow2(unsigned n) {
    BigUint r;
    r.limbs_.assign(n / 32 + 1, 0);
    r.limbs_.back() = 1u << (n % 32);
    return r;
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
    if (rhs.limbs_.size() > limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t s = carry + limbs_[i] + (i < rhs.limbs_.size() ? rhs.limbs_[i] : 0);
        limbs_[i] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigUint& BigUint::mul(std::uint32_t factor) {
    if (factor == 0) {
        limbs_.clear();
        return *this;
    }
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
        std::uint64_t p = static_cast<std::uint64_t>(limb) * factor + carry;
        limb = static_cast<std::uint32_t>(p);
        carry = p >> 32;
    }
    while (carry) {
        limbs_.push_back(static_cast<std::uint32_t>(carry));
        carry >>= 32;
    }
    return *this;
}

std::uint32_t BigUint::div(std::uint32_t divisor) {
    if (divisor == 0) throw domain_error("BigUint: division by zero");
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
        rem = cur % divisor;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
}

BigUint& BigUint::div_exact(std::uint32_t divisor) {
    if (div(divisor) != 0)
        throw domain_error("BigUint: division expected to be exact");
    return *this;
}

bool BigUint::operator<(const BigUint& rhs) const {
    if (limbs_.size() != rhs.limbs_.size()) return limbs_.size() < rhs.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;)
        if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] < rhs.limbs_[i];
    return false;
}

double BigUint::to_double() const {
    double r = 0.0;
    for (std::size_t i = limbs_.size(); i-- > 0;)
        r = r * 4294967296.0 + static_cast<double>(limbs_[i]);
    return r;
}

std::string BigUint::to_string() const {
    if (limbs_.empty()) return "0";
    BigUint tmp = *this;
    std::string out;
    while (!tmp.is_zero()) {
        std::uint32_t chunk = tmp.div(1000000000u);
        std::string part = std::to_string(chunk);
        if (!tmp.is_zero()) part.insert(0, 9 - part.size(), '0');
        out.insert(0, part);
    }
    return out;
}

} // namespace qredux
