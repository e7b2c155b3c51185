#include "dpg/backend.hpp"

#include <stdexcept>

namespace dpg {

Rational eval_rational(const Scalar& s, long q0) {
    AlgNum a = eval_at(s, q0);
    if (!a.is_rational()) throw std::domain_error("value is not rational at q0 = " + std::to_string(q0));
    return a.to_rational();
}

}  // namespace dpg
