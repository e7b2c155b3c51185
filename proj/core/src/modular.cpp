#include "modular.hpp"

#include <mutex>
#include <utility>

namespace dpg::detail {

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % sp == 0) return n == sp;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic witness set for all 64-bit integers.
    for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
        u64 x = powmod(a % n, d, n);
        if (a % n == 0 || x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

GaussPrime make_gauss_prime(u64 p) {
    // For a non-residue c, c^((p-1)/4) squares to -1.
    for (u64 c = 2;; ++c) {
        if (powmod(c, (p - 1) / 2, p) == p - 1) return {p, powmod(c, (p - 1) / 4, p)};
    }
}

}  // namespace

const GaussPrime& gauss_prime(std::size_t k) {
    static std::mutex mu;
    static std::vector<GaussPrime> primes;
    std::lock_guard<std::mutex> lock(mu);
    u64 next = primes.empty() ? (u64{1} << 62) + 1 : primes.back().p;
    while (primes.size() <= k) {
        next -= 4;
        if (is_prime_u64(next)) primes.push_back(make_gauss_prime(next));
    }
    return primes[k];
}

void trim(PolyMod& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyMod gcd_mod(PolyMod a, PolyMod b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a <- a mod b
        u64 inv_lead = invmod(b.back(), p);
        while (a.size() >= b.size()) {
            u64 factor = mulmod(a.back(), inv_lead, p);
            std::size_t shift = a.size() - b.size();
            for (std::size_t k = 0; k < b.size(); ++k) {
                a[shift + k] = submod(a[shift + k], mulmod(factor, b[k], p), p);
            }
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        u64 inv_lead = invmod(a.back(), p);
        for (auto& c : a) c = mulmod(c, inv_lead, p);
    }
    return a;
}

}  // namespace dpg::detail
