#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace invconn::rootsys {

inline constexpr int kMaxRank = 16;

struct SimpleType {
    char series = 'A';
    int rank = 1;

    int positive_root_count() const;
    int dimension() const { return rank + 2 * positive_root_count(); }
    std::string name() const;  // "A2", "E8"
    bool operator==(const SimpleType&) const = default;
};

// Throws ConfigError on e.g. "E5" or "B1".
SimpleType make_type(char series, int rank);
SimpleType parse_type(const std::string& s);
// "A1xA2" or "A1,A2"
std::vector<SimpleType> parse_factors(const std::string& s);

// Dynkin labels concatenated over factors. Unused slots are zero, so equality
// and hashing do not need the rank.
struct Weight {
    std::array<int16_t, kMaxRank> l{};

    int16_t operator[](int i) const { return l[i]; }
    int16_t& operator[](int i) { return l[i]; }
    bool operator==(const Weight& o) const { return std::memcmp(l.data(), o.l.data(), sizeof(l)) == 0; }
    bool operator<(const Weight& o) const { return l < o.l; }
    bool is_zero() const { return *this == Weight{}; }
};

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator-(const Weight& a);
Weight scaled(const Weight& a, int k);
// Exact division of every label, false if some label is not divisible.
bool divide(const Weight& a, int k, Weight& out);

struct WeightHash {
    size_t operator()(const Weight& w) const noexcept {
        uint64_t h[4];
        std::memcpy(h, w.l.data(), sizeof(h));
        uint64_t x = h[0] * 0x9E3779B97F4A7C15ull;
        x ^= (h[1] + 0x632BE59BD9B4E019ull) * 0xC2B2AE3D27D4EB4Full;
        x ^= (h[2] + 0x85EBCA77C2B2AE63ull) * 0x165667B19E3779F9ull;
        x ^= (h[3] + 0x27D4EB2F165667C5ull) * 0x94D049BB133111EBull;
        x ^= x >> 31;
        return static_cast<size_t>(x * 0xBF58476D1CE4E5B9ull);
    }
};

class RootSystem {
public:
    explicit RootSystem(std::vector<SimpleType> factors);

    const std::vector<SimpleType>& factors() const { return factors_; }
    int rank() const { return rank_; }
    int factor_offset(int f) const { return offsets_[f]; }
    std::string name() const;
    int dimension() const;  // of the Lie algebra

    // Cartan matrix entry <alpha_i, alpha_j^vee>; zero across factors.
    int cartan(int i, int j) const { return cartan_[i * rank_ + j]; }
    // Half squared length of alpha_i (short roots of each factor have 1).
    int half_norm(int i) const { return d_[i]; }

    const std::vector<Weight>& positive_roots() const { return pos_roots_; }
    // Simple-root coordinates of positive_roots()[k].
    const std::vector<std::vector<int>>& positive_root_coords() const { return pos_coords_; }
    // Coroot coordinates (in simple coroots) of positive_roots()[k].
    const std::vector<std::vector<int>>& positive_coroot_coords() const { return pos_cocoords_; }
    Weight simple_root(int i) const;
    Weight rho() const;
    Weight highest_root(int factor) const;

    // (a, b) scaled by pairing_scale(); exact integers.
    int64_t pairing_scaled(const Weight& a, const Weight& b) const;
    int64_t pairing_scale() const { return scale_; }
    // <lambda, alpha^vee> for positive root k.
    int64_t coroot_pairing(const Weight& lambda, int k) const;

    // Positive linear functional, strictly increasing along positive roots.
    // Integer-valued: sum over factors of (scaled) simple-root-coordinate sums.
    int64_t height(const Weight& w) const;

    Weight reflect(int i, const Weight& w) const;
    bool is_dominant(const Weight& w) const;

    // Weyl group order and orbit size of a dominant weight, without enumeration.
    double weyl_order() const;
    double orbit_size(const Weight& dominant) const;

    // Parses "1,0,2" (length must equal rank).
    Weight parse_weight(const std::string& s) const;
    Weight make_weight(const std::vector<int>& labels) const;
    std::string format(const Weight& w) const;
    // Restrict to / embed from factor f.
    Weight restrict(const Weight& w, int f) const;

private:
    std::vector<SimpleType> factors_;
    std::vector<int> offsets_;
    std::vector<int> factor_of_;
    int rank_ = 0;
    std::vector<int> cartan_;
    std::vector<int> d_;
    std::vector<Weight> pos_roots_;
    std::vector<std::vector<int>> pos_coords_;
    std::vector<std::vector<int>> pos_cocoords_;
    std::vector<int> pos_half_norm_;
    std::vector<int64_t> form_;  // rank x rank, scaled by scale_
    int64_t scale_ = 1;
    std::vector<int64_t> height_coef_;
    std::vector<int> highest_root_index_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

RootSystemPtr build_root_system(const std::vector<SimpleType>& factors);

struct Dominant {
    Weight weight;
    int sign;  // det of the Weyl element, or 0 on a wall
};
// With detect_walls, sign is 0 whenever the result has a zero label, i.e. the
// input is fixed by a reflection. Callers pass rho-shifted weights.
Dominant to_dominant(const RootSystem& rs, const Weight& w, bool detect_walls = false);

boost::multiprecision::cpp_int weyl_dimension(const RootSystem& rs, const Weight& lambda);
Weight dual_weight(const RootSystem& rs, const Weight& lambda);

// Full Weyl orbit of a weight, in BFS order from its dominant representative.
std::vector<Weight> orbit(const RootSystem& rs, const Weight& w);

}  // namespace invconn::rootsys
