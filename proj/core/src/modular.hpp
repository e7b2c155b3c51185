#pragma once

// Word-size modular arithmetic used by the modular gcd. Internal header.

#include <cstdint>
#include <vector>

namespace dpg::detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
inline u64 addmod(u64 a, u64 b, u64 p) {
    u64 s = a + b;
    return (s >= p || s < a) ? s - p : s;
}
inline u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

u64 powmod(u64 a, u64 e, u64 p);
inline u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool is_prime_u64(u64 n);

/// A prime p = 1 (mod 4) together with a square root of -1 modulo p.
struct GaussPrime {
    u64 p;
    u64 sqrt_minus_one;
};

/// k-th prime of a fixed descending sequence of 62-bit primes p = 1 (mod 4).
const GaussPrime& gauss_prime(std::size_t k);

using PolyMod = std::vector<u64>;  // ascending coefficients, trimmed

void trim(PolyMod& a);
/// Monic gcd in F_p[v].
PolyMod gcd_mod(PolyMod a, PolyMod b, u64 p);

}  // namespace dpg::detail
