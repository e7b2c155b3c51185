#include "dpg/family.hpp"

#include <stdexcept>

namespace dpg {

const std::vector<Family>& all_families() {
    static const std::vector<Family> fams{Family::C,        Family::B,       Family::D,
                                          Family::TwoD,     Family::TwoAEven, Family::TwoAOdd};
    return fams;
}

std::string family_tag(Family f) {
    switch (f) {
        case Family::C: return "C";
        case Family::B: return "B";
        case Family::D: return "D";
        case Family::TwoD: return "2D";
        case Family::TwoAEven: return "2A-even";
        case Family::TwoAOdd: return "2A-odd";
    }
    return "?";
}

Family parse_family(const std::string& tag) {
    for (Family f : all_families()) {
        if (family_tag(f) == tag) return f;
    }
    throw std::invalid_argument("unsupported family tag: " + tag);
}

Rational family_e(Family f) {
    switch (f) {
        case Family::C:
        case Family::B: return 1;
        case Family::D: return 0;
        case Family::TwoD: return 2;
        case Family::TwoAEven: return Rational(3, 2);
        case Family::TwoAOdd: return Rational(1, 2);
    }
    return 0;
}

bool is_hermitian(Family f) { return f == Family::TwoAEven || f == Family::TwoAOdd; }

int FamilyParams::ambient_dimension() const {
    switch (family) {
        case Family::C:
        case Family::D:
        case Family::TwoAOdd: return 2 * D;
        case Family::B:
        case Family::TwoAEven: return 2 * D + 1;
        case Family::TwoD: return 2 * D + 2;
    }
    return 0;
}

std::string Instance::label() const {
    std::string s = family_tag(params.family) + "(";
    s += formal() ? std::string("q") : std::to_string(q0);
    return s + "," + std::to_string(params.D) + ")";
}

std::pair<long, int> prime_power(long q) {
    if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
    long p = 0;
    for (long d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return {q, 1};
    int k = 0;
    long r = q;
    while (r % p == 0) {
        r /= p;
        ++k;
    }
    if (r != 1) throw std::invalid_argument("q must be a prime power, got " + std::to_string(q));
    return {p, k};
}

Integer predicted_vertex_count(const FamilyParams& fp, long q0) {
    // q^{i+e} with e in (1/2)Z; for Hermitian families q0 = r^2.
    Rational e = fp.e();
    Integer r;
    long base = q0;
    long exp_num_scale = 1;
    if (e.get_den() == 2) {
        if (mpz_root(r.get_mpz_t(), Integer(q0).get_mpz_t(), 2) == 0) {
            throw std::invalid_argument("Hermitian family requires square q");
        }
        base = r.get_si();
        exp_num_scale = 2;
    }
    Integer total = 1;
    for (int i = 0; i < fp.D; ++i) {
        Rational ex = (Rational(i) + e) * exp_num_scale;
        Integer pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(base), ex.get_num().get_ui());
        total *= pw + 1;
    }
    return total;
}

}  // namespace dpg
