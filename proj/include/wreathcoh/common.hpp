#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wreathcoh {

using Int = boost::multiprecision::cpp_int;
using Vec = std::vector<Int>;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require(bool ok, const std::string& msg) {
    if (!ok)
        throw Error(msg);
}

inline Int gcd(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Int lcm(const Int& a, const Int& b) {
    return boost::multiprecision::lcm(a, b);
}

inline Int abs(const Int& a) {
    return a < 0 ? Int(-a) : a;
}

/* binom(n, k) as an exact integer; zero outside 0 <= k <= n */
inline Int binom(long n, long k) {
    if (k < 0 || k > n)
        return 0;
    Int r = 1;
    for (long t = 0; t < k; ++t) {
        r *= n - t;
        r /= t + 1;
    }
    return r;
}

inline bool all_zero(const std::vector<Int>& v) {
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r = 1;
    for (unsigned long t = 0; t < e; ++t)
        r *= base;
    return r;
}

}  // namespace wreathcoh
