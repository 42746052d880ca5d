#pragma once

#include "inducibility/errors.hpp"
#include "inducibility/profile.hpp"
#include "inducibility/rational.hpp"

namespace ind {

inline BigInt factorial(int n) {
    if (n < 0) throw domain_error("factorial: negative argument");
    BigInt acc(1);
    for (int i = 2; i <= n; ++i) acc *= i;
    return acc;
}

// C(n, k); zero when k > n or k < 0.
inline BigInt binomial(int n, int k) {
    if (n < 0) throw domain_error("binomial: negative n");
    if (k < 0 || k > n) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt acc(1);
    for (int i = 1; i <= k; ++i) {
        acc *= (n - k + i);
        acc /= i;  // exact: acc is C(n-k+i, i) * i! / i! at each step
    }
    return acc;
}

// Falling factorial n (n-1) ... (n-k+1); the number of injections [k] -> [n].
inline BigInt falling_factorial(long long n, int k) {
    if (k < 0) throw domain_error("falling_factorial: negative k");
    BigInt acc(1);
    for (int i = 0; i < k; ++i) acc *= BigInt(n - i);
    return acc;
}

// s! / (a_1! ... a_r!) for the profile's part sizes.
inline BigInt multinomial(const PartiteProfile& profile) {
    BigInt acc = factorial(profile.s());
    for (int a : profile.sizes()) acc /= factorial(a);
    return acc;
}

// Product of c(n)! over the multiplicities c(n) of distinct part sizes;
// the number of part relabelings fixing the profile.
inline BigInt pi_factor(const PartiteProfile& profile) {
    BigInt acc(1);
    for (const auto& [size, count] : profile.multiplicities()) {
        (void)size;
        acc *= factorial(count);
    }
    return acc;
}

// r! / (r^r - r): the floor every r-vertex graph's inducibility exceeds,
// realized asymptotically by nested balanced blowups.
inline BigRational generic_lower_bound(int r) {
    if (r < 2) throw domain_error("generic_lower_bound: requires r >= 2");
    return BigRational(factorial(r), int_pow(BigInt(r), r) - r);
}

}  // namespace ind
