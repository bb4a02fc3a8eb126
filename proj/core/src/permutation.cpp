#include "qmat/permutation.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>

#include "qmat/error.hpp"

namespace qmat {

namespace {

int factorial(int n) {
    int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace

PermIndex PermTable::index_of(const std::vector<std::uint8_t>& ol) const {
    // Lehmer code to lexicographic rank
    int idx = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (ol[j] < ol[i]) ++smaller;
        idx += smaller * factorial(n - 1 - i);
    }
    return idx;
}

PermIndex PermTable::compose(PermIndex a, PermIndex b) const {
    const auto& wa = one_line[a];
    const auto& wb = one_line[b];
    std::vector<std::uint8_t> c(n);
    for (int i = 0; i < n; ++i) c[i] = wb[wa[i]];
    return index_of(c);
}

PermIndex PermTable::transposition(int a, int b) const {
    require(a != b && 0 <= a && a < n && 0 <= b && b < n, "BadIndexLists",
            "transposition indices out of range");
    std::vector<std::uint8_t> ol(n);
    std::iota(ol.begin(), ol.end(), 0);
    std::swap(ol[a], ol[b]);
    return index_of(ol);
}

std::string PermTable::one_line_string(PermIndex w) const {
    std::string s;
    for (int i = 0; i < n; ++i) {
        if (i) s += ",";
        s += std::to_string(one_line[w][i] + 1);
    }
    return s;
}

const PermTable& PermTable::get(int n) {
    require(1 <= n && n <= 8, "BadIndexLists", "PermTable supports 1 <= n <= 8");
    static std::map<int, std::unique_ptr<PermTable>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;

    auto t = std::make_unique<PermTable>();
    t->n = n;
    t->size = factorial(n);

    std::vector<std::uint8_t> ol(n);
    std::iota(ol.begin(), ol.end(), 0);
    do {
        t->one_line.push_back(ol);
    } while (std::next_permutation(ol.begin(), ol.end()));

    t->length.resize(t->size);
    t->inverse.resize(t->size);
    for (int w = 0; w < t->size; ++w) {
        const auto& p = t->one_line[w];
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (p[i] > p[j]) ++inv;
        t->length[w] = inv;
        std::vector<std::uint8_t> q(n);
        for (int i = 0; i < n; ++i) q[p[i]] = static_cast<std::uint8_t>(i);
        t->inverse[w] = t->index_of(q);
    }

    t->gen_left.assign(n - 1, std::vector<PermIndex>(t->size));
    for (int g = 0; g + 1 < n; ++g)
        for (int w = 0; w < t->size; ++w) {
            auto p = t->one_line[w];
            std::swap(p[g], p[g + 1]);
            t->gen_left[g][w] = t->index_of(p);
        }

    t->word.resize(t->size);
    for (int w = 0; w < t->size; ++w) {
        std::vector<int> wd;
        auto p = t->one_line[w];
        for (;;) {
            int g = -1;
            for (int i = 0; i + 1 < n; ++i)
                if (p[i] > p[i + 1]) {
                    g = i;
                    break;
                }
            if (g < 0) break;
            wd.push_back(g);
            std::swap(p[g], p[g + 1]);
        }
        require(static_cast<int>(wd.size()) == t->length[w], "IdentityViolation",
                "reduced word length mismatch");
        t->word[w] = std::move(wd);
    }

    auto& ref = *t;
    cache[n] = std::move(t);
    return ref;
}

} // namespace qmat
