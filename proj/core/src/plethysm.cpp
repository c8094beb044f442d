#include <algorithm>
#include <map>
#include <mutex>

#include "invconn/chars.hpp"
#include "invconn/error.hpp"

namespace invconn::chars {

PointEvaluator::PointEvaluator(Character base) : base_(std::move(base)), square_(base_.rs_ptr()) {
    flat_.assign(base_.terms().begin(), base_.terms().end());
    std::sort(flat_.begin(), flat_.end());
    base_max_height_ = base_.max_height();
}

const Character& PointEvaluator::square() {
    if (!have_square_) {
        square_ = tensor(base_, base_);
        have_square_ = true;
    }
    return square_;
}

Mult PointEvaluator::psi(int k, const Weight& nu) const {
    Weight w;
    return rootsys::divide(nu, k, w) ? base_(w) : 0;
}

const PointEvaluator::Cubic& PointEvaluator::cubic(const Weight& nu) {
    auto it = cubic_memo_.find(nu);
    if (it != cubic_memo_.end()) return it->second;
    const Character& sq = square();
    Mult c3 = 0, c21 = 0;
    for (auto& [a, c] : flat_) {
        const Weight rest = nu - a;
        if (Mult v = sq(rest)) c3 = checked_add(c3, checked_mul(c, v));
        if (Mult v = psi(2, rest)) c21 = checked_add(c21, checked_mul(c, v));
    }
    return cubic_memo_.emplace(nu, Cubic{c3, c21}).first->second;
}

static Mult exact_div(Mult a, Mult d) {
    if (a % d) throw ConsistencyError("plethysm point value not divisible by " + std::to_string(d));
    return a / d;
}

Mult PointEvaluator::eval(Plethysm p, const Weight& nu) {
    switch (p) {
        case Plethysm::Base: return base_(nu);
        case Plethysm::Square: return square()(nu);
        case Plethysm::Alt2: return exact_div(square()(nu) - psi(2, nu), 2);
        case Plethysm::Sym2: return exact_div(square()(nu) + psi(2, nu), 2);
        case Plethysm::Alt3: {
            const Cubic& c = cubic(nu);
            return exact_div(checked_add(c.cube, checked_add(checked_mul(-3, c.chi_psi2), 2 * psi(3, nu))), 6);
        }
        case Plethysm::Sym3: {
            const Cubic& c = cubic(nu);
            return exact_div(checked_add(c.cube, checked_add(checked_mul(3, c.chi_psi2), 2 * psi(3, nu))), 6);
        }
        case Plethysm::TensorAlt2: {
            const Cubic& c = cubic(nu);
            return exact_div(checked_add(c.cube, -c.chi_psi2), 2);
        }
        case Plethysm::Schur21: return exact_div(checked_add(cubic(nu).cube, -psi(3, nu)), 3);
    }
    return 0;
}

Mult mult_point(const Character& base, Plethysm p, const Weight& nu) {
    PointEvaluator ev(base);
    return ev.eval(p, nu);
}

namespace {

struct OrbitPoint {
    Weight shift;  // rho - w rho
    int64_t height;
    int sign;
};

struct RhoOrbit {
    int64_t bound = -1;
    std::vector<OrbitPoint> points;  // sorted by height
};

struct RhoOrbitCache {
    std::mutex mu;
    std::map<std::string, std::shared_ptr<const RhoOrbit>> entries;
};

RhoOrbitCache& rho_cache() {
    static RhoOrbitCache c;
    return c;
}

// Points w rho with height(rho - w rho) <= bound. Reflecting on a positive
// label only increases that height, so BFS with a height cut is complete.
std::shared_ptr<const RhoOrbit> rho_orbit(const RootSystemPtr& rsp, int64_t bound) {
    auto& cache = rho_cache();
    const std::string key = rsp->name();
    {
        std::lock_guard<std::mutex> lk(cache.mu);
        auto it = cache.entries.find(key);
        if (it != cache.entries.end() && it->second->bound >= bound) return it->second;
    }
    const RootSystem& rs = *rsp;
    const Weight rho = rs.rho();
    auto out = std::make_shared<RhoOrbit>();
    out->bound = bound;
    std::unordered_map<Weight, int, rootsys::WeightHash> seen;
    std::vector<std::pair<Weight, int>> queue{{rho, 1}};
    seen.emplace(rho, 1);
    for (size_t k = 0; k < queue.size(); ++k) {
        const auto [x, sign] = queue[k];
        for (int i = 0; i < rs.rank(); ++i) {
            if (x[i] <= 0) continue;
            Weight y = rs.reflect(i, x);
            if (rs.height(rho - y) > bound) continue;
            if (seen.emplace(y, -sign).second) queue.emplace_back(y, -sign);
        }
    }
    out->points.reserve(queue.size());
    for (auto& [x, sign] : queue) {
        Weight s = rho - x;
        out->points.push_back({s, rs.height(s), sign});
    }
    std::sort(out->points.begin(), out->points.end(),
              [](const OrbitPoint& a, const OrbitPoint& b) { return a.height < b.height; });
    std::lock_guard<std::mutex> lk(cache.mu);
    auto& slot = cache.entries[key];
    if (!slot || slot->bound < bound) slot = out;
    return slot;
}

template <class F>
Mult alternating_sum(const RootSystemPtr& rs, const Weight& lambda, int64_t support_height, F&& value) {
    if (!rs->is_dominant(lambda)) throw PreconditionError("multiplicity needs a dominant weight");
    const int64_t bound = support_height - rs->height(lambda);
    if (bound < 0) return 0;
    auto orb = rho_orbit(rs, bound);
    Mult s = 0;
    for (auto& p : orb->points) {
        if (p.height > bound) break;
        Mult v = value(lambda + p.shift);
        if (v) s = checked_add(s, p.sign > 0 ? v : -v);
    }
    return s;
}

}  // namespace

size_t rho_orbit_prefix_size(const RootSystemPtr& rs, int64_t bound) {
    auto orb = rho_orbit(rs, bound);
    return static_cast<size_t>(
        std::upper_bound(orb->points.begin(), orb->points.end(), bound,
                         [](int64_t b, const OrbitPoint& p) { return b < p.height; }) -
        orb->points.begin());
}

Mult multiplicity(const Character& chi, const Weight& lambda) {
    return alternating_sum(chi.rs_ptr(), lambda, chi.max_height(), [&](const Weight& w) { return chi(w); });
}

Mult multiplicity(PointEvaluator& ev, Plethysm p, const Weight& lambda) {
    return alternating_sum(ev.base().rs_ptr(), lambda, ev.max_height(p),
                           [&](const Weight& w) { return ev.eval(p, w); });
}

}  // namespace invconn::chars
