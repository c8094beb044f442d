#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_set>

#include "invconn/chars.hpp"
#include "invconn/error.hpp"

namespace invconn::chars {

using rootsys::to_dominant;

namespace {

std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& lambda) {
    // Every dominant weight below lambda is reached from lambda by subtracting
    // positive roots without leaving the dominant chamber.
    std::vector<Weight> out{lambda};
    std::unordered_set<Weight, rootsys::WeightHash> seen{lambda};
    for (size_t k = 0; k < out.size(); ++k) {
        const Weight mu = out[k];
        for (auto& a : rs.positive_roots()) {
            Weight nu = mu - a;
            if (!rs.is_dominant(nu)) continue;
            if (seen.insert(nu).second) out.push_back(nu);
        }
    }
    std::sort(out.begin(), out.end(), [&](const Weight& x, const Weight& y) {
        int64_t hx = rs.height(x), hy = rs.height(y);
        return hx != hy ? hx > hy : x < y;
    });
    return out;
}

}  // namespace

double support_estimate(const RootSystemPtr& rs, const Weight& lambda) {
    if (!rs->is_dominant(lambda)) throw PreconditionError("highest weight " + rs->format(lambda) + " is not dominant");
    double s = 0;
    for (auto& w : dominant_weights_below(*rs, lambda)) s += rs->orbit_size(w);
    return s;
}

std::vector<std::pair<Weight, Mult>> dominant_multiplicities(const RootSystemPtr& rsp, const Weight& lambda) {
    const RootSystem& rs = *rsp;
    if (!rs.is_dominant(lambda)) throw PreconditionError("highest weight " + rs.format(lambda) + " is not dominant");
    auto dom = dominant_weights_below(rs, lambda);
    WeightMap m;
    m.reserve(dom.size() * 2);
    const Weight rho = rs.rho();
    const Weight lr = lambda + rho;
    const int64_t top = rs.pairing_scaled(lr, lr);
    const auto& roots = rs.positive_roots();
    std::vector<int64_t> root_norm(roots.size());
    for (size_t k = 0; k < roots.size(); ++k) root_norm[k] = rs.pairing_scaled(roots[k], roots[k]);

    std::vector<std::pair<Weight, Mult>> out;
    out.reserve(dom.size());
    m[lambda] = 1;
    out.emplace_back(lambda, 1);
    for (size_t idx = 1; idx < dom.size(); ++idx) {
        const Weight& mu = dom[idx];
        __int128 num = 0;
        for (size_t k = 0; k < roots.size(); ++k) {
            const Weight& a = roots[k];
            // (mu + j a, a) = (mu, a) + j (a, a)
            const int64_t base = rs.pairing_scaled(mu, a);
            Weight nu = mu;
            for (int j = 1;; ++j) {
                nu = nu + a;
                auto it = m.find(to_dominant(rs, nu).weight);
                if (it == m.end()) break;
                num += static_cast<__int128>(it->second) * (base + j * root_norm[k]);
            }
        }
        const Weight mr = mu + rho;
        const int64_t den = top - rs.pairing_scaled(mr, mr);
        num *= 2;
        if (den <= 0 || num % den != 0) throw ConsistencyError("Freudenthal recursion is not integral at " + rs.format(mu));
        __int128 q = num / den;
        if (q <= 0 || q > INT64_MAX) throw ConsistencyError("Freudenthal multiplicity out of range at " + rs.format(mu));
        m[mu] = static_cast<Mult>(q);
        out.emplace_back(mu, static_cast<Mult>(q));
    }
    return out;
}

namespace {

struct IrrepCache {
    std::mutex mu;
    std::map<std::pair<std::string, Weight>, std::unique_ptr<Character>> entries;
};

IrrepCache& irrep_cache() {
    static IrrepCache c;
    return c;
}

}  // namespace

const Character& irrep_character(const RootSystemPtr& rs, const Weight& lambda) {
    auto key = std::make_pair(rs->name(), lambda);
    auto& cache = irrep_cache();
    {
        std::lock_guard<std::mutex> lk(cache.mu);
        auto it = cache.entries.find(key);
        if (it != cache.entries.end()) return *it->second;
    }
    auto dom = dominant_multiplicities(rs, lambda);
    auto chi = std::make_unique<Character>(rs);
    size_t total = 0;
    for (auto& [w, c] : dom) total += static_cast<size_t>(rs->orbit_size(w));
    chi->reserve(total);
    for (auto& [w, c] : dom)
        for (auto& x : rootsys::orbit(*rs, w)) chi->add(x, c);
    std::lock_guard<std::mutex> lk(cache.mu);
    auto [it, inserted] = cache.entries.emplace(key, std::move(chi));
    return *it->second;
}

RepSum decompose(const Character& chi, size_t max_support) {
    if (chi.support() > max_support)
        throw BudgetError("decompose: support " + std::to_string(chi.support()) + " exceeds limit " +
                          std::to_string(max_support));
    const RootSystem& rs = chi.rs();
    WeightMap dom;
    for (auto& [w, c] : chi.terms())
        if (rs.is_dominant(w)) dom.emplace(w, c);
    RepSum out{chi.rs_ptr(), {}};
    while (!dom.empty()) {
        // A weight of maximal height is maximal in the dominance order.
        auto top = std::max_element(dom.begin(), dom.end(), [&](auto& x, auto& y) {
            int64_t hx = rs.height(x.first), hy = rs.height(y.first);
            return hx != hy ? hx < hy : y.first < x.first;
        });
        const Weight lambda = top->first;
        const Mult c = top->second;
        if (c < 0)
            throw DataError("decompose: negative multiplicity " + std::to_string(c) + " at " + rs.format(lambda) +
                            " (virtual character)");
        out.terms.emplace_back(lambda, c);
        for (auto& [w, m] : dominant_multiplicities(chi.rs_ptr(), lambda)) {
            auto it = dom.find(w);
            Mult v = checked_add(it == dom.end() ? 0 : it->second, -checked_mul(c, m));
            if (it == dom.end()) {
                dom.emplace(w, v);
            } else if (v == 0) {
                dom.erase(it);
            } else {
                it->second = v;
            }
        }
    }
    std::sort(out.terms.begin(), out.terms.end(), [&](auto& x, auto& y) {
        int64_t hx = rs.height(x.first), hy = rs.height(y.first);
        return hx != hy ? hx > hy : x.first < y.first;
    });
    return out;
}

}  // namespace invconn::chars
