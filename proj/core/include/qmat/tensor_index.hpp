#pragma once

#include <cstddef>
#include <vector>

#include <qmat/error.hpp>
#include <qmat/matrix.hpp>

namespace qmat {

inline std::size_t ipow(std::size_t base, int exp) {
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// Big-endian mixed-radix coding: the first leg varies slowest.
inline std::size_t mixed_index(const std::vector<std::size_t>& digits,
                               const std::vector<std::size_t>& dims) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) idx = idx * dims[i] + digits[i];
    return idx;
}

inline std::vector<std::size_t> mixed_digits(std::size_t idx,
                                             const std::vector<std::size_t>& dims) {
    std::vector<std::size_t> digits(dims.size(), 0);
    for (std::size_t i = dims.size(); i-- > 0;) {
        digits[i] = idx % dims[i];
        idx /= dims[i];
    }
    return digits;
}

// Reorder tensor legs: leg j of the result is leg src[j] of the input.
template <ScalarField K>
Vec<K> permute_legs(const Vec<K>& v, const std::vector<std::size_t>& dims,
                    const std::vector<std::size_t>& src) {
    require(dims.size() == src.size(), "DimensionMismatch",
            "leg permutation does not match leg count");
    std::vector<std::size_t> out_dims(src.size());
    std::size_t total = 1;
    for (std::size_t j = 0; j < src.size(); ++j) {
        out_dims[j] = dims[src[j]];
        total *= dims[j];
    }
    require(v.size() == total, "DimensionMismatch",
            "vector length does not match leg dimensions");
    Vec<K> out(total, K::zero());
    std::vector<std::size_t> in_digits(dims.size(), 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::vector<std::size_t> od = mixed_digits(idx, out_dims);
        for (std::size_t j = 0; j < src.size(); ++j) in_digits[src[j]] = od[j];
        out[idx] = v[mixed_index(in_digits, dims)];
    }
    return out;
}

}  // namespace qmat
