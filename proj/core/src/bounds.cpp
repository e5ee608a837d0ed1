#include "dhero/bounds.hpp"

#include <string>

#include "dhero/errors.hpp"
#include "dhero/limits.hpp"

namespace dhero {

namespace {

void require_positive(int v, const char* name) {
    if (v < 1) throw RangeError(std::string(name) + " must be positive, got " + std::to_string(v));
}

std::uint64_t bit_length(const BigInt& x) { return x == 0 ? 0 : boost::multiprecision::msb(x) + 1; }

void check_bits(double bits, const char* what) {
    if (bits > static_cast<double>(limits().bound_bits))
        throw ResourceError(std::string(what) + " needs about " + std::to_string(bits) + " bits, ceiling is " +
                            std::to_string(limits().bound_bits));
}

void check_value(const BigInt& x, const char* what) { check_bits(static_cast<double>(bit_length(x)), what); }

BigInt power(const BigInt& base, std::uint64_t exp, const char* what) {
    check_bits(static_cast<double>(bit_length(base)) * static_cast<double>(exp), what);
    BigInt result = 1, b = base;
    while (exp) {
        if (exp & 1U) result *= b;
        exp >>= 1;
        if (exp) b *= b;
    }
    return result;
}

std::uint64_t pow3(int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > (std::uint64_t{1} << 61)) throw ResourceError("exponent 3^" + std::to_string(e) + " overflows");
        r *= 3;
    }
    return r;
}

BigInt base_of(int h) { return BigInt(2) * h * (h + 1); }

}  // namespace

BigInt bound_f(int t) {
    require_positive(t, "t");
    BigInt f = 1;
    for (int i = 2; i <= t; ++i) {
        check_bits(2.0 * static_cast<double>(bit_length(f)), "f(t)");
        f = 1 + f * (1 + f);
    }
    return f;
}

BigInt bound_phi(int c, int h, int t) {
    require_positive(c, "c");
    require_positive(h, "h");
    require_positive(t, "t");
    BigInt phi = power(base_of(h), static_cast<std::uint64_t>(2 * c + 1), "phi(c,h,1)");
    for (int i = 2; i <= t; ++i) {
        phi = h + BigInt(h) * (h + 1) * (c + phi) + BigInt(c) * h + c;
        check_value(phi, "phi(c,h,t)");
    }
    return phi;
}

BigInt f_envelope(int t) {
    require_positive(t, "t");
    const std::uint64_t e = 2 * pow3(t);
    check_bits(static_cast<double>(e) + 1, "2^(2*3^t)");
    return BigInt(1) << e;
}

BigInt phi_envelope(int c, int h, int t) {
    require_positive(c, "c");
    require_positive(h, "h");
    require_positive(t, "t");
    return power(base_of(h), static_cast<std::uint64_t>(2 * c + t), "phi envelope");
}

BigInt bound_K(int c, int h) {
    require_positive(c, "c");
    require_positive(h, "h");
    const BigInt first = power(base_of(h), static_cast<std::uint64_t>(5 * c + 1), "K(c,h)");
    const std::uint64_t e = 2 * pow3(3 * c + 1) + 1;
    check_bits(static_cast<double>(e) + 32, "K(c,h)");
    const BigInt second = (BigInt(1) << e) * c;
    return first > second ? first : second;
}

}  // namespace dhero
