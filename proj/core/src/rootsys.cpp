#include "invconn/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include <boost/rational.hpp>

#include "invconn/error.hpp"

namespace invconn::rootsys {

using Rational = boost::rational<int64_t>;

int SimpleType::positive_root_count() const {
    const int n = rank;
    switch (series) {
        case 'A': return n * (n + 1) / 2;
        case 'B':
        case 'C': return n * n;
        case 'D': return n * (n - 1);
        case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
        case 'F': return 24;
        case 'G': return 6;
    }
    return 0;
}

std::string SimpleType::name() const { return std::string(1, series) + std::to_string(rank); }

SimpleType make_type(char series, int rank) {
    bool ok = false;
    switch (series) {
        case 'A': ok = rank >= 1; break;
        case 'B':
        case 'C': ok = rank >= 2; break;
        case 'D': ok = rank >= 3; break;
        case 'E': ok = rank >= 6 && rank <= 8; break;
        case 'F': ok = rank == 4; break;
        case 'G': ok = rank == 2; break;
        default: break;
    }
    if (!ok)
        throw ConfigError("invalid simple type " + std::string(1, series) + std::to_string(rank));
    return {series, rank};
}

SimpleType parse_type(const std::string& s) {
    if (s.size() < 2) throw ConfigError("bad simple type '" + s + "'");
    char series = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    int rank = 0;
    for (size_t i = 1; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw ConfigError("bad simple type '" + s + "'");
        rank = rank * 10 + (s[i] - '0');
        if (rank > 1000) throw ConfigError("bad simple type '" + s + "'");
    }
    return make_type(series, rank);
}

std::vector<SimpleType> parse_factors(const std::string& s) {
    std::vector<SimpleType> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == 'x' || c == ',' || c == '*') {
            if (!cur.empty()) out.push_back(parse_type(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (out.empty()) throw ConfigError("empty factor list");
    return out;
}

Weight operator+(const Weight& a, const Weight& b) {
    Weight r;
    for (int i = 0; i < kMaxRank; ++i) {
        int v = int(a.l[i]) + int(b.l[i]);
        if (v > INT16_MAX || v < INT16_MIN) throw ConsistencyError("weight label overflow");
        r.l[i] = static_cast<int16_t>(v);
    }
    return r;
}

Weight operator-(const Weight& a, const Weight& b) {
    Weight r;
    for (int i = 0; i < kMaxRank; ++i) {
        int v = int(a.l[i]) - int(b.l[i]);
        if (v > INT16_MAX || v < INT16_MIN) throw ConsistencyError("weight label overflow");
        r.l[i] = static_cast<int16_t>(v);
    }
    return r;
}

Weight operator-(const Weight& a) { return Weight{} - a; }

Weight scaled(const Weight& a, int k) {
    Weight r;
    for (int i = 0; i < kMaxRank; ++i) {
        int v = int(a.l[i]) * k;
        if (v > INT16_MAX || v < INT16_MIN) throw ConsistencyError("weight label overflow");
        r.l[i] = static_cast<int16_t>(v);
    }
    return r;
}

bool divide(const Weight& a, int k, Weight& out) {
    for (int i = 0; i < kMaxRank; ++i) {
        if (a.l[i] % k != 0) return false;
        out.l[i] = static_cast<int16_t>(a.l[i] / k);
    }
    return true;
}

namespace {

// Symmetric form B_ij = (alpha_i, alpha_j), short roots of squared length 2
// (4 for the long simple roots of B/C/F, 6 for G2). Bourbaki numbering.
std::vector<int> symmetric_form(const SimpleType& t) {
    const int n = t.rank;
    std::vector<int> b(n * n, 0);
    auto set = [&](int i, int j, int v) {
        b[i * n + j] = v;
        b[j * n + i] = v;
    };
    switch (t.series) {
        case 'A':
            for (int i = 0; i < n; ++i) set(i, i, 2);
            for (int i = 0; i + 1 < n; ++i) set(i, i + 1, -1);
            break;
        case 'B':
            // alpha_n short
            for (int i = 0; i < n; ++i) set(i, i, 4);
            for (int i = 0; i + 1 < n; ++i) set(i, i + 1, -2);
            set(n - 1, n - 1, 2);
            break;
        case 'C':
            // alpha_n long
            for (int i = 0; i < n; ++i) set(i, i, 2);
            for (int i = 0; i + 1 < n; ++i) set(i, i + 1, -1);
            set(n - 1, n - 1, 4);
            set(n - 2, n - 1, -2);
            break;
        case 'D':
            for (int i = 0; i < n; ++i) set(i, i, 2);
            for (int i = 0; i + 2 < n; ++i) set(i, i + 1, -1);
            set(n - 3, n - 1, -1);
            break;
        case 'E':
            for (int i = 0; i < n; ++i) set(i, i, 2);
            set(0, 2, -1);
            set(1, 3, -1);
            for (int i = 2; i + 1 < n; ++i) set(i, i + 1, -1);
            break;
        case 'F':
            set(0, 0, 4);
            set(1, 1, 4);
            set(2, 2, 2);
            set(3, 3, 2);
            set(0, 1, -2);
            set(1, 2, -2);
            set(2, 3, -1);
            break;
        case 'G':
            set(0, 0, 2);
            set(1, 1, 6);
            set(0, 1, -3);
            break;
    }
    return b;
}

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (a[p][c].numerator() == 0) ++p;
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Rational piv = a[c][c];
        for (int j = 0; j < n; ++j) {
            a[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || a[r][c].numerator() == 0) continue;
            Rational f = a[r][c];
            for (int j = 0; j < n; ++j) {
                a[r][j] -= f * a[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

}  // namespace

RootSystem::RootSystem(std::vector<SimpleType> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw ConfigError("root system needs at least one factor");
    for (auto& t : factors_) {
        t = make_type(t.series, t.rank);
        offsets_.push_back(rank_);
        for (int i = 0; i < t.rank; ++i) factor_of_.push_back(static_cast<int>(offsets_.size()) - 1);
        rank_ += t.rank;
    }
    if (rank_ > kMaxRank) throw ConfigError("total rank above " + std::to_string(kMaxRank) + " is not supported");

    const int n = rank_;
    std::vector<int> b(n * n, 0);
    for (size_t f = 0; f < factors_.size(); ++f) {
        const int o = offsets_[f], m = factors_[f].rank;
        auto bf = symmetric_form(factors_[f]);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) b[(o + i) * n + o + j] = bf[i * m + j];
    }
    d_.resize(n);
    for (int i = 0; i < n; ++i) d_[i] = b[i * n + i] / 2;
    cartan_.resize(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cartan_[i * n + j] = b[i * n + j] / d_[j];

    // Positive roots by height, in simple-root coordinates. The alpha_i-string
    // through beta extends upward iff r - <beta, alpha_i^vee> > 0 where r is the
    // length of its downward part.
    std::vector<std::vector<int>> coords;
    std::unordered_set<Weight, WeightHash> seen;
    auto coord_key = [&](const std::vector<int>& c) {
        Weight k;
        for (int i = 0; i < n; ++i) k[i] = static_cast<int16_t>(c[i]);
        return k;
    };
    auto labels_of = [&](const std::vector<int>& c) {
        Weight w;
        for (int j = 0; j < n; ++j) {
            int v = 0;
            for (int i = 0; i < n; ++i) v += c[i] * cartan_[i * n + j];
            w[j] = static_cast<int16_t>(v);
        }
        return w;
    };
    for (int i = 0; i < n; ++i) {
        std::vector<int> c(n, 0);
        c[i] = 1;
        coords.push_back(c);
        seen.insert(coord_key(c));
    }
    for (size_t k = 0; k < coords.size(); ++k) {
        const auto beta = coords[k];
        const Weight lab = labels_of(beta);
        for (int i = 0; i < n; ++i) {
            int r = 0;
            auto down = beta;
            while (true) {
                down[i] -= 1;
                if (down[i] < 0 || !seen.count(coord_key(down))) break;
                ++r;
            }
            if (r - lab[i] > 0) {
                auto up = beta;
                up[i] += 1;
                if (seen.insert(coord_key(up)).second) coords.push_back(up);
            }
        }
    }
    std::stable_sort(coords.begin(), coords.end(), [](const auto& x, const auto& y) {
        return std::accumulate(x.begin(), x.end(), 0) < std::accumulate(y.begin(), y.end(), 0);
    });
    for (auto& c : coords) {
        pos_roots_.push_back(labels_of(c));
        int norm = 0;  // (beta, beta) / 2
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) norm += c[i] * c[j] * b[i * n + j];
        norm /= 2;
        std::vector<int> co(n);
        for (int i = 0; i < n; ++i) co[i] = c[i] * d_[i] / norm;
        pos_half_norm_.push_back(norm);
        pos_coords_.push_back(c);
        pos_cocoords_.push_back(std::move(co));
    }
    size_t expected = 0;
    for (auto& t : factors_) expected += t.positive_root_count();
    if (pos_roots_.size() != expected) throw ConsistencyError("positive root count mismatch for " + name());

    // Weight coordinates: omega_i = sum_k (A^-1)_{ik} alpha_k.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = cartan_[i * n + j];
    auto ainv = invert(a);
    int64_t den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) den = std::lcm(den, ainv[i][j].denominator());
    scale_ = den;
    form_.resize(n * n);
    // (omega_i, omega_j) = (A^-1)_{ji} d_i
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational v = ainv[j][i] * d_[i] * den;
            form_[i * n + j] = v.numerator();
        }
    height_coef_.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        Rational s = 0;
        for (int k = 0; k < n; ++k) s += ainv[i][k];
        height_coef_[i] = (s * den).numerator();
    }

    for (size_t f = 0; f < factors_.size(); ++f) {
        int best = -1, best_h = -1;
        for (size_t k = 0; k < pos_coords_.size(); ++k) {
            if (factor_of_[std::find_if(pos_coords_[k].begin(), pos_coords_[k].end(), [](int v) { return v != 0; }) -
                           pos_coords_[k].begin()] != static_cast<int>(f))
                continue;
            int h = std::accumulate(pos_coords_[k].begin(), pos_coords_[k].end(), 0);
            if (h > best_h) best_h = h, best = static_cast<int>(k);
        }
        highest_root_index_.push_back(best);
    }
}

std::string RootSystem::name() const {
    std::string s;
    for (size_t f = 0; f < factors_.size(); ++f) s += (f ? "x" : "") + factors_[f].name();
    return s;
}

int RootSystem::dimension() const {
    int d = 0;
    for (auto& t : factors_) d += t.dimension();
    return d;
}

Weight RootSystem::simple_root(int i) const {
    Weight w;
    for (int j = 0; j < rank_; ++j) w[j] = static_cast<int16_t>(cartan_[i * rank_ + j]);
    return w;
}

Weight RootSystem::rho() const {
    Weight w;
    for (int i = 0; i < rank_; ++i) w[i] = 1;
    return w;
}

Weight RootSystem::highest_root(int factor) const { return pos_roots_.at(highest_root_index_.at(factor)); }

int64_t RootSystem::pairing_scaled(const Weight& a, const Weight& b) const {
    int64_t s = 0;
    for (int i = 0; i < rank_; ++i) {
        if (!a[i]) continue;
        const int64_t* row = &form_[i * rank_];
        int64_t t = 0;
        for (int j = 0; j < rank_; ++j) t += row[j] * b[j];
        s += a[i] * t;
    }
    return s;
}

int64_t RootSystem::coroot_pairing(const Weight& lambda, int k) const {
    const auto& co = pos_cocoords_[k];
    int64_t s = 0;
    for (int i = 0; i < rank_; ++i) s += int64_t(co[i]) * lambda[i];
    return s;
}

int64_t RootSystem::height(const Weight& w) const {
    int64_t s = 0;
    for (int i = 0; i < rank_; ++i) s += height_coef_[i] * w[i];
    return s;
}

Weight RootSystem::reflect(int i, const Weight& w) const {
    Weight r = w;
    const int li = w[i];
    if (!li) return r;
    const int* row = &cartan_[i * rank_];
    for (int j = 0; j < rank_; ++j) {
        int v = int(w[j]) - li * row[j];
        if (v > INT16_MAX || v < INT16_MIN) throw ConsistencyError("weight label overflow");
        r[j] = static_cast<int16_t>(v);
    }
    return r;
}

bool RootSystem::is_dominant(const Weight& w) const {
    for (int i = 0; i < rank_; ++i)
        if (w[i] < 0) return false;
    return true;
}

double RootSystem::weyl_order() const {
    double r = 1;
    for (auto& c : pos_coords_) {
        double h = std::accumulate(c.begin(), c.end(), 0);
        r *= (h + 1) / h;
    }
    return std::round(r);
}

double RootSystem::orbit_size(const Weight& dominant) const {
    // |W| / |W_J| with J the zero labels; the parabolic subgroup's positive
    // roots are exactly those supported on J.
    double stab = 1;
    for (auto& c : pos_coords_) {
        bool inside = true;
        for (int i = 0; i < rank_ && inside; ++i)
            if (c[i] && dominant[i]) inside = false;
        if (!inside) continue;
        double h = std::accumulate(c.begin(), c.end(), 0);
        stab *= (h + 1) / h;
    }
    return std::round(weyl_order() / stab);
}

Weight RootSystem::make_weight(const std::vector<int>& labels) const {
    if (static_cast<int>(labels.size()) != rank_)
        throw ConfigError("weight has " + std::to_string(labels.size()) + " labels, " + name() + " needs " +
                          std::to_string(rank_));
    Weight w;
    for (int i = 0; i < rank_; ++i) {
        if (labels[i] > INT16_MAX || labels[i] < INT16_MIN) throw ConfigError("weight label out of range");
        w[i] = static_cast<int16_t>(labels[i]);
    }
    return w;
}

Weight RootSystem::parse_weight(const std::string& s) const {
    std::vector<int> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t pos = 0;
            v.push_back(std::stoi(tok, &pos));
            while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
            if (pos != tok.size()) throw ConfigError("bad weight '" + s + "'");
        } catch (const std::logic_error&) {
            throw ConfigError("bad weight '" + s + "'");
        }
    }
    return make_weight(v);
}

std::string RootSystem::format(const Weight& w) const {
    std::string s = "(";
    for (int i = 0; i < rank_; ++i) {
        if (i) s += factor_of_[i] != factor_of_[i - 1] ? "|" : ",";
        s += std::to_string(w[i]);
    }
    return s + ")";
}

Weight RootSystem::restrict(const Weight& w, int f) const {
    Weight r;
    for (int i = 0; i < factors_[f].rank; ++i) r[i] = w[offsets_[f] + i];
    return r;
}

RootSystemPtr build_root_system(const std::vector<SimpleType>& factors) {
    return std::make_shared<const RootSystem>(factors);
}

Dominant to_dominant(const RootSystem& rs, const Weight& w, bool detect_walls) {
    Weight cur = w;
    int sign = 1;
    const int n = rs.rank();
    for (;;) {
        int i = 0;
        while (i < n && cur[i] >= 0) ++i;
        if (i == n) break;
        cur = rs.reflect(i, cur);
        sign = -sign;
    }
    if (detect_walls)
        for (int i = 0; i < n; ++i)
            if (cur[i] == 0) return {cur, 0};
    return {cur, sign};
}

boost::multiprecision::cpp_int weyl_dimension(const RootSystem& rs, const Weight& lambda) {
    if (!rs.is_dominant(lambda)) throw PreconditionError("weyl_dimension needs a dominant weight");
    using boost::multiprecision::cpp_int;
    cpp_int num = 1, den = 1;
    const Weight lr = lambda + rs.rho();
    const Weight r = rs.rho();
    for (size_t k = 0; k < rs.positive_roots().size(); ++k) {
        num *= rs.coroot_pairing(lr, static_cast<int>(k));
        den *= rs.coroot_pairing(r, static_cast<int>(k));
    }
    if (num % den != 0) throw ConsistencyError("Weyl dimension not integral");
    return num / den;
}

Weight dual_weight(const RootSystem& rs, const Weight& lambda) {
    if (!rs.is_dominant(lambda)) throw PreconditionError("dual_weight needs a dominant weight");
    return to_dominant(rs, -lambda).weight;
}

std::vector<Weight> orbit(const RootSystem& rs, const Weight& w) {
    const Weight start = to_dominant(rs, w).weight;
    std::vector<Weight> out{start};
    std::unordered_set<Weight, WeightHash> seen{start};
    // Reflecting on a positive label moves strictly down, so BFS from the
    // dominant point reaches the whole orbit.
    for (size_t k = 0; k < out.size(); ++k) {
        const Weight cur = out[k];
        for (int i = 0; i < rs.rank(); ++i) {
            if (cur[i] <= 0) continue;
            Weight nx = rs.reflect(i, cur);
            if (seen.insert(nx).second) out.push_back(nx);
        }
    }
    return out;
}

}  // namespace invconn::rootsys
