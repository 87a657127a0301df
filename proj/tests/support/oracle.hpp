#pragma once

// Reference arithmetic that does not go through the library's scalars.
#include <boost/multiprecision/cpp_int.hpp>

#include <utility>
#include <vector>

namespace alc::oracle {

using Q = boost::multiprecision::cpp_rational;

// sum_i beta_i * alpha^{n_i}
inline Q poly_eval(const std::vector<std::pair<Q, unsigned>>& poly, const Q& alpha) {
    Q total = 0;
    for (const auto& [beta, n] : poly) {
        Q p = 1;
        for (unsigned k = 0; k < n; ++k) p *= alpha;
        total += beta * p;
    }
    return total;
}

}  // namespace alc::oracle
