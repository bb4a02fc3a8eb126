#include "qmat/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "qmat/error.hpp"

namespace qmat {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        require(parts_[i] > 0, "BadIndexLists", "partition parts must be positive");
        require(i == 0 || parts_[i - 1] >= parts_[i], "BadIndexLists",
                "partition parts must be weakly decreasing");
    }
}

Partition Partition::from_string(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty() || t == "-") return Partition();
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= t.size()) {
        std::size_t comma = t.find(',', pos);
        std::string piece = t.substr(pos, comma == std::string::npos ? comma : comma - pos);
        require(!piece.empty() && piece.find_first_not_of("0123456789") == std::string::npos,
                "BadIndexLists", "malformed partition literal: " + s);
        parts.push_back(std::stoi(piece));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out;
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> conj(static_cast<std::size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
    return Partition(std::move(conj));
}

bool Partition::contains(const Partition& other) const {
    for (int i = 0; i < other.length(); ++i)
        if (part(i) < other.part(i)) return false;
    return true;
}

bool operator<(const Partition& a, const Partition& b) {
    int wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    return a.parts() > b.parts(); // larger first part sorts earlier
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxp) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> partitions_up_to(int max_weight) {
    std::vector<Partition> out;
    for (int w = 0; w <= max_weight; ++w) {
        auto pw = partitions_of(w);
        out.insert(out.end(), pw.begin(), pw.end());
    }
    return out;
}

Partition rectangle_partition(int rows, int c) {
    require(rows >= 0 && c >= 0, "BadIndexLists", "rectangle dimensions");
    if (rows == 0 || c == 0) return Partition();
    return Partition(std::vector<int>(static_cast<std::size_t>(rows), c));
}

std::uint64_t count_standard_tableaux(const Partition& shape) {
    int n = shape.weight();
    if (n == 0) return 1;
    Partition conj = shape.conjugate();
    std::uint64_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= static_cast<std::uint64_t>(i);
    std::uint64_t denom = 1;
    for (int i = 0; i < shape.length(); ++i)
        for (int j = 0; j < shape.part(i); ++j) {
            int hook = (shape.part(i) - j) + (conj.part(j) - i) - 1;
            denom *= static_cast<std::uint64_t>(hook);
        }
    require(fact % denom == 0, "IdentityViolation", "hook length formula must divide n!");
    return fact / denom;
}

std::vector<int> StandardTableau::contents() const {
    std::vector<int> c;
    c.reserve(box.size());
    for (const auto& [r, col] : box) c.push_back(col - r);
    return c;
}

std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
    std::vector<StandardTableau> out;
    int n = shape.weight();
    std::vector<int> filled(static_cast<std::size_t>(shape.length()), 0);
    std::vector<std::pair<int, int>> box;
    std::function<void(int)> rec = [&](int k) {
        if (k == n) {
            out.push_back({shape, box});
            return;
        }
        for (int r = 0; r < shape.length(); ++r) {
            if (filled[static_cast<std::size_t>(r)] >= shape.part(r)) continue;
            if (r > 0 && filled[static_cast<std::size_t>(r - 1)] <=
                             filled[static_cast<std::size_t>(r)])
                continue;
            box.emplace_back(r, filled[static_cast<std::size_t>(r)]);
            ++filled[static_cast<std::size_t>(r)];
            rec(k + 1);
            --filled[static_cast<std::size_t>(r)];
            box.pop_back();
        }
    };
    rec(0);
    return out;
}

std::uint64_t lr_coefficient(const Partition& lambda, const Partition& mu,
                             const Partition& gamma) {
    if (!gamma.contains(lambda)) return 0;
    if (gamma.weight() != lambda.weight() + mu.weight()) return 0;
    if (mu.empty()) return 1;
    int rows = gamma.length();
    // fill the skew shape gamma/lambda in reverse reading order (top to
    // bottom, right to left within a row); track letter counts for the
    // lattice condition and the grid for row/column monotonicity
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r)
        grid[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(gamma.part(r)), 0);
    std::vector<int> counts(static_cast<std::size_t>(mu.length()) + 1, 0);
    std::uint64_t total = 0;

    std::function<void(int, int)> rec = [&](int r, int c) {
        if (r == rows) {
            ++total;
            return;
        }
        if (c < lambda.part(r)) {
            rec(r + 1, gamma.part(r + 1) - 1);
            return;
        }
        for (int v = 1; v <= mu.length(); ++v) {
            if (counts[static_cast<std::size_t>(v)] >= mu.part(v - 1)) continue;
            // lattice: prefix counts of v stay <= counts of v-1
            if (v > 1 && counts[static_cast<std::size_t>(v)] >=
                             counts[static_cast<std::size_t>(v - 1)])
                continue;
            // row weakly increasing toward the right neighbor
            if (c + 1 < gamma.part(r) && grid[static_cast<std::size_t>(r)]
                                                 [static_cast<std::size_t>(c + 1)] != 0 &&
                v > grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c + 1)])
                continue;
            // column strictly increasing below the upper neighbor
            if (r > 0 && c < gamma.part(r - 1)) {
                int above = (c < lambda.part(r - 1))
                                ? 0
                                : grid[static_cast<std::size_t>(r - 1)]
                                      [static_cast<std::size_t>(c)];
                if (above != 0 && v <= above) continue;
                if (c >= lambda.part(r - 1) && above == 0) continue; // unreachable guard
            }
            grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            ++counts[static_cast<std::size_t>(v)];
            if (c > lambda.part(r))
                rec(r, c - 1);
            else
                rec(r + 1, gamma.part(r + 1) - 1);
            --counts[static_cast<std::size_t>(v)];
            grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
        }
    };

    rec(0, gamma.part(0) - 1);
    return total;
}

std::uint64_t ssyt_count(const Partition& shape, int d) {
    if (shape.empty()) return 1;
    if (d < shape.length()) return 0;
    Partition conj = shape.conjugate();
    std::uint64_t num = 1;
    std::uint64_t den = 1;
    for (int i = 0; i < shape.length(); ++i) {
        for (int j = 0; j < shape.part(i); ++j) {
            num *= static_cast<std::uint64_t>(d + j - i);
            den *= static_cast<std::uint64_t>((shape.part(i) - j) +
                                              (conj.part(j) - i) - 1);
        }
    }
    return num / den;
}

std::uint64_t hook_ssyt_count(const Partition& shape, int r, int s) {
    int n = shape.weight();
    std::uint64_t total = 0;
    for (int m = 0; m <= n; ++m) {
        for (const Partition& mu : partitions_of(m)) {
            if (!shape.contains(mu)) continue;
            std::uint64_t a = ssyt_count(mu, r);
            if (a == 0) continue;
            for (const Partition& nu : partitions_of(n - m)) {
                std::uint64_t b = ssyt_count(nu.conjugate(), s);
                if (b == 0) continue;
                total += lr_coefficient(mu, nu, shape) * a * b;
            }
        }
    }
    return total;
}

std::vector<Partition> pieri_column_set(const Partition& lambda, int k) {
    require(k >= 0, "BadIndexLists", "pieri column count");
    std::vector<Partition> out;
    int rows = lambda.length() + k; // at most k new unit rows
    std::vector<int> cur;
    std::function<void(int, int)> rec2 = [&](int r, int left) {
        if (r >= rows) {
            if (left == 0) out.emplace_back(cur);
            return;
        }
        int base = lambda.part(r);
        for (int add = 0; add <= 1; ++add) {
            if (add > left) continue;
            int val = base + add;
            if (val == 0) {
                if (left - add == 0) {
                    out.emplace_back(cur);
                    return;
                }
                continue;
            }
            if (r > 0 && cur[static_cast<std::size_t>(r - 1)] < val) continue;
            cur.push_back(val);
            rec2(r + 1, left - add);
            cur.pop_back();
        }
    };
    rec2(0, k);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int beta(const Partition& sigma, int k) {
    int total = 0;
    for (int p : sigma.parts()) total += std::min(p, k);
    return total;
}

bool beta_geq(const Partition& tau, const Partition& sigma) {
    int kmax = std::max(tau.part(0), sigma.part(0));
    for (int k = 1; k <= kmax; ++k)
        if (beta(tau, k) < beta(sigma, k)) return false;
    return true;
}

PartitionSet dideal_closure(const PartitionSet& gens, int weight_bound) {
    PartitionSet out;
    for (const Partition& tau : partitions_up_to(weight_bound))
        for (const Partition& sigma : gens)
            if (tau.contains(sigma)) {
                out.insert(tau);
                break;
            }
    return out;
}

bool gamma_rs_contains(int r, int s, const Partition& lambda) {
    return lambda.part(r) <= s;
}

} // namespace qmat
