#include "branchloci/oracle.hpp"

#include <functional>
#include <numeric>

namespace branchloci::oracle {

namespace {

std::int64_t lcm_list(const std::vector<std::int64_t>& v) {
    std::int64_t l = 1;
    for (auto x : v) l = l / std::gcd(l, x) * x;
    return l;
}

std::vector<ConePair> admissible_pairs(std::int64_t n) {
    std::vector<ConePair> out;
    for (std::int64_t m = 2; m <= n; ++m) {
        if (n % m) continue;
        for (std::int64_t c = 1; c < m; ++c)
            if (std::gcd(c, m) == 1) out.push_back({c, m});
    }
    return out;
}

template <class Visit>
void for_each_candidate(int max_n, int max_genus, int max_g0, int max_pairs, Visit visit) {
    for (std::int64_t n = 2; n <= max_n; ++n) {
        const auto pool = admissible_pairs(n);
        for (std::int64_t g0 = 0; g0 <= max_g0; ++g0) {
            for (std::int64_t r = 1; r < n; ++r) visit(DataSet{n, g0, r, {}});
            std::vector<ConePair> chosen;
            // non-decreasing index sequences into pool = multisets
            std::function<void(std::size_t)> grow = [&](std::size_t from) {
                if (!chosen.empty()) {
                    DataSet d{n, g0, 0, chosen};
                    // 2 - 2g only decreases as pairs are added, so prune on a genus bound
                    std::int64_t two_minus_2g = n * (2 - 2 * g0);
                    for (const auto& p : chosen) two_minus_2g -= n - n / p.n_i;
                    if (2 - two_minus_2g > 2 * max_genus) return;
                    visit(d);
                }
                if (static_cast<int>(chosen.size()) == max_pairs) return;
                for (std::size_t i = from; i < pool.size(); ++i) {
                    chosen.push_back(pool[i]);
                    grow(i);
                    chosen.pop_back();
                }
            };
            grow(0);
        }
    }
}

}  // namespace

std::optional<std::int64_t> genus_of(const DataSet& d) {
    if (d.n < 1) return std::nullopt;
    std::int64_t chi = d.n * (2 - 2 * d.g0);
    for (const auto& p : d.pairs) {
        if (p.n_i < 1 || d.n % p.n_i) return std::nullopt;
        chi -= d.n - d.n / p.n_i;
    }
    if ((2 - chi) % 2 != 0 || 2 - chi < 0) return std::nullopt;
    return (2 - chi) / 2;
}

bool is_valid(const DataSet& d) {
    if (d.n < 2 || d.g0 < 0 || d.r < 0 || d.r >= d.n) return false;
    if ((d.r > 0) == !d.pairs.empty()) return false;
    if (d.r > 0 && std::gcd(d.r, d.n) != 1) return false;
    std::vector<std::int64_t> orders;
    std::int64_t weighted = 0;
    for (const auto& p : d.pairs) {
        if (p.n_i < 2 || d.n % p.n_i != 0) return false;
        if (p.c < 1 || p.c >= p.n_i || std::gcd(p.c, p.n_i) != 1) return false;
        orders.push_back(p.n_i);
        weighted += (d.n / p.n_i) * p.c;
    }
    const auto full = lcm_list(orders);
    if (orders.size() >= 2) {
        for (std::size_t i = 0; i < orders.size(); ++i) {
            auto rest = orders;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
            if (lcm_list(rest) != full) return false;
        }
    }
    if (d.g0 == 0 && full != d.n) return false;
    if (weighted % d.n != 0) return false;
    return genus_of(d).has_value();
}

std::vector<DataSet> enumerate_candidates(int max_n, int max_genus, int max_g0, int max_pairs) {
    std::vector<DataSet> out;
    for_each_candidate(max_n, max_genus, max_g0, max_pairs, [&](const DataSet& d) { out.push_back(d); });
    return out;
}

std::vector<DataSet> enumerate(int max_n, int max_genus, int max_g0, int max_pairs) {
    std::vector<DataSet> out;
    for_each_candidate(max_n, max_genus, max_g0, max_pairs, [&](const DataSet& d) {
        auto g = genus_of(d);
        if (is_valid(d) && g && *g <= max_genus) out.push_back(d);
    });
    return out;
}

CompositionCheck check_compositions(const std::vector<DataSet>& sets) {
    CompositionCheck result;
    for (const auto& d1 : sets) {
        for (const auto& d2 : sets) {
            if (d1.n != d2.n) continue;
            for (std::size_t i = 0; i < d1.pairs.size(); ++i) {
                for (std::size_t j = 0; j < d2.pairs.size(); ++j) {
                    const auto& a = d1.pairs[i];
                    const auto& b = d2.pairs[j];
                    if (a.n_i != b.n_i || (a.c + b.c) % a.n_i != 0) continue;
                    ++result.compatible_pairs;
                    auto composed = compose_compatible(d1, i + 1, d2, j + 1);
                    auto g = genus_of(composed);
                    if (!is_valid(composed) || !g || *g != *genus_of(d1) + *genus_of(d2) + d1.n / a.n_i - 1)
                        ++result.failures;
                }
            }
        }
    }
    return result;
}

}  // namespace branchloci::oracle
