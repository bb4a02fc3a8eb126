#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include <qmat/hecke_operator.hpp>

namespace qmat {

// Operator files are JSON objects
//   {"dim": d, "q": "<scalar>", "entries": [[i, j, k, l, "<scalar>"], ...]}
// listing the nonzero coefficients R^{kl}_{ij} of R(x_i (x) x_j) in
// x_k (x) x_l, all indices 0-based.  Scalars use the backend's string
// syntax: "a/b" for rationals, "(num)/(den)" polynomials in the symbolic
// backend.  Loading validates the Yang-Baxter and Hecke identities unless
// asked not to; structural problems raise IOError, a well-formed file
// whose operator fails validation raises InvalidOperator.

namespace detail {

inline std::string path_stem(const std::string& path) {
    std::size_t slash = path.find_last_of("/\\");
    std::string base = (slash == std::string::npos) ? path : path.substr(slash + 1);
    std::size_t dot = base.find_last_of('.');
    return (dot == std::string::npos) ? base : base.substr(0, dot);
}

}  // namespace detail

template <ScalarField K>
HeckeOp<K> load_operator(const std::string& path, bool validate = true) {
    std::ifstream in(path);
    if (!in) fail("IOError", "cannot open " + path);

    int d = 0;
    K q = K::zero();
    Matrix<K> m;
    try {
        nlohmann::ordered_json j;
        in >> j;
        d = j.at("dim").get<int>();
        require(d >= 1, "IOError", "dim must be positive in " + path);
        q = K::from_string(j.at("q").get<std::string>());
        const std::size_t dd = static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
        m = Matrix<K>(dd, dd);
        for (const auto& e : j.at("entries")) {
            if (!e.is_array() || e.size() != 5)
                fail("IOError", "entry is not a 5-element array in " + path);
            const int i = e[0].get<int>();
            const int jj = e[1].get<int>();
            const int k = e[2].get<int>();
            const int l = e[3].get<int>();
            if (i < 0 || i >= d || jj < 0 || jj >= d || k < 0 || k >= d || l < 0 || l >= d)
                fail("IOError", "entry index out of range in " + path);
            m.at(static_cast<std::size_t>(k * d + l), static_cast<std::size_t>(i * d + jj)) =
                K::from_string(e[4].get<std::string>());
        }
    } catch (const Error& e) {
        if (e.code() == "IOError") throw;
        // scalar syntax errors and similar are defects of the file, not
        // of the mathematics
        fail("IOError", "cannot parse " + path + ": " + e.what());
    } catch (const std::exception& e) {
        fail("IOError", "cannot parse " + path + ": " + e.what());
    }

    HeckeOp<K> op = operator_from_matrix(d, q, std::move(m), detail::path_stem(path));
    if (validate) {
        CheckResult c = validate_operator(op);
        require(c.ok, "InvalidOperator", path + ": " + c.detail);
    }
    return op;
}

template <ScalarField K>
void save_operator(const HeckeOp<K>& op, const std::string& path) {
    nlohmann::ordered_json j;
    j["dim"] = op.d;
    j["q"] = op.q.to_string();
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    const int d = op.d;
    for (int i = 0; i < d; ++i)
        for (int jj = 0; jj < d; ++jj)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    const K& v = op.R.at(static_cast<std::size_t>(k * d + l),
                                         static_cast<std::size_t>(i * d + jj));
                    if (v.is_zero()) continue;
                    entries.push_back({i, jj, k, l, v.to_string()});
                }
    j["entries"] = std::move(entries);
    std::ofstream out(path);
    if (!out) fail("IOError", "cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace qmat
