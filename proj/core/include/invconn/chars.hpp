#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "invconn/rootsys.hpp"

namespace invconn::chars {

using rootsys::RootSystem;
using rootsys::RootSystemPtr;
using rootsys::Weight;

// Multiplicities are int64 with overflow checks on every add and multiply.
using Mult = int64_t;
using WeightMap = std::unordered_map<Weight, Mult, rootsys::WeightHash>;

Mult checked_add(Mult a, Mult b);
Mult checked_mul(Mult a, Mult b);

class Character {
public:
    explicit Character(RootSystemPtr rs) : rs_(std::move(rs)) {}

    const RootSystem& rs() const { return *rs_; }
    const RootSystemPtr& rs_ptr() const { return rs_; }
    const WeightMap& terms() const { return m_; }

    Mult operator()(const Weight& w) const {
        auto it = m_.find(w);
        return it == m_.end() ? 0 : it->second;
    }
    void add(const Weight& w, Mult c);
    void reserve(size_t n) { m_.reserve(n); }

    size_t support() const { return m_.size(); }
    Mult dimension() const;
    bool is_genuine() const;
    // Largest height over the support (0 for the empty character).
    int64_t max_height() const;

    Character& operator+=(const Character& o);
    Character& operator-=(const Character& o);
    bool operator==(const Character& o) const;

private:
    RootSystemPtr rs_;
    WeightMap m_;
};

Character operator+(Character a, const Character& b);
Character operator-(Character a, const Character& b);
Character operator*(Mult c, const Character& a);

// Dominant weights of the irreducible with highest weight lambda and their
// multiplicities, ordered by decreasing height.
std::vector<std::pair<Weight, Mult>> dominant_multiplicities(const RootSystemPtr& rs, const Weight& lambda);

// Number of distinct weights of the irreducible, from orbit sizes of the
// dominant weights below lambda (no multiplicities needed).
double support_estimate(const RootSystemPtr& rs, const Weight& lambda);

// Cached per (root system, lambda); safe to call from several threads.
const Character& irrep_character(const RootSystemPtr& rs, const Weight& lambda);
Character trivial_character(const RootSystemPtr& rs);
Character adjoint_character(const RootSystemPtr& rs);

Character tensor(const Character& a, const Character& b);
Character adams(const Character& a, int k);
Character dual(const Character& a);
// External product over the concatenated system `product` (factors of a, then b).
Character outer(const Character& a, const Character& b, const RootSystemPtr& product);
// Pulls a character of one factor (or block of factors) into `product`, other
// factors acting trivially. `offset` is the label offset of the block.
Character embed(const Character& a, const RootSystemPtr& product, int offset);

Character alt2(const Character& a);
Character sym2(const Character& a);
Character alt3(const Character& a);
Character sym3(const Character& a);
// chi (x) alt2(chi)
Character tensor_alt2(const Character& a);
// Schur functor of shape (2,1): chi (x) alt2(chi) - alt3(chi)
Character schur21(const Character& a);

enum class Plethysm { Base, Square, Alt2, Sym2, Alt3, Sym3, TensorAlt2, Schur21 };
const char* plethysm_name(Plethysm p);
Plethysm parse_plethysm(const std::string& s);
int plethysm_degree(Plethysm p);
Character materialize(const Character& a, Plethysm p);

// Evaluates plethysm expressions of one base character at single weights.
// The square is built once on first use; cubic terms then cost O(support)
// per query.
class PointEvaluator {
public:
    explicit PointEvaluator(Character base);

    const Character& base() const { return base_; }
    Mult eval(Plethysm p, const Weight& nu);
    // Upper bound for the height of any weight in the expression's support.
    int64_t max_height(Plethysm p) const { return plethysm_degree(p) * base_max_height_; }
    const Character& square();

private:
    struct Cubic {
        Mult cube, chi_psi2;
    };
    // chi^3 and chi * psi^2(chi) at nu; memoized since the cubic expressions
    // are usually queried at the same points.
    const Cubic& cubic(const Weight& nu);
    Mult psi(int k, const Weight& nu) const;

    Character base_;
    std::vector<std::pair<Weight, Mult>> flat_;
    int64_t base_max_height_ = 0;
    bool have_square_ = false;
    Character square_;
    std::unordered_map<Weight, Cubic, rootsys::WeightHash> cubic_memo_;
};

Mult mult_point(const Character& base, Plethysm p, const Weight& nu);

// Multiplicity of the irreducible with highest weight lambda, by the
// alternating sum over the rho-orbit. Only orbit points that can land in the
// support (by height) are generated.
Mult multiplicity(const Character& chi, const Weight& lambda);
Mult multiplicity(PointEvaluator& ev, Plethysm p, const Weight& lambda);

// Number of rho-orbit points with (rho - w rho) of height at most `bound`.
size_t rho_orbit_prefix_size(const RootSystemPtr& rs, int64_t bound);

struct RepSum {
    RootSystemPtr rs;
    std::vector<std::pair<Weight, Mult>> terms;  // dominant weight, multiplicity

    Mult dimension() const;
    std::string format() const;
};

Character expand(const RepSum& r);
// Throws DataError on a virtual character, BudgetError above max_support.
RepSum decompose(const Character& chi, size_t max_support = 100000);

}  // namespace invconn::chars
