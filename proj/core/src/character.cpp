#include <algorithm>

#include "invconn/chars.hpp"
#include "invconn/error.hpp"

namespace invconn::chars {

Mult checked_add(Mult a, Mult b) {
    Mult r;
    if (__builtin_add_overflow(a, b, &r)) throw ConsistencyError("multiplicity overflow (int64)");
    return r;
}

Mult checked_mul(Mult a, Mult b) {
    Mult r;
    if (__builtin_mul_overflow(a, b, &r)) throw ConsistencyError("multiplicity overflow (int64)");
    return r;
}

void Character::add(const Weight& w, Mult c) {
    if (!c) return;
    auto [it, inserted] = m_.try_emplace(w, c);
    if (inserted) return;
    it->second = checked_add(it->second, c);
    if (!it->second) m_.erase(it);
}

Mult Character::dimension() const {
    Mult d = 0;
    for (auto& [w, c] : m_) d = checked_add(d, c);
    return d;
}

bool Character::is_genuine() const {
    return std::all_of(m_.begin(), m_.end(), [](auto& kv) { return kv.second > 0; });
}

int64_t Character::max_height() const {
    int64_t h = 0;
    for (auto& [w, c] : m_) h = std::max(h, rs_->height(w));
    return h;
}

static void require_same(const Character& a, const Character& b) {
    if (a.rs_ptr() != b.rs_ptr() && a.rs().factors() != b.rs().factors())
        throw PreconditionError("characters over different root systems: " + a.rs().name() + " vs " + b.rs().name());
}

Character& Character::operator+=(const Character& o) {
    require_same(*this, o);
    for (auto& [w, c] : o.m_) add(w, c);
    return *this;
}

Character& Character::operator-=(const Character& o) {
    require_same(*this, o);
    for (auto& [w, c] : o.m_) add(w, -c);
    return *this;
}

bool Character::operator==(const Character& o) const {
    return rs_->factors() == o.rs_->factors() && m_ == o.m_;
}

Character operator+(Character a, const Character& b) { return a += b; }
Character operator-(Character a, const Character& b) { return a -= b; }

Character operator*(Mult c, const Character& a) {
    Character r(a.rs_ptr());
    if (!c) return r;
    r.reserve(a.support());
    for (auto& [w, m] : a.terms()) r.add(w, checked_mul(c, m));
    return r;
}

Character trivial_character(const RootSystemPtr& rs) {
    Character r(rs);
    r.add(Weight{}, 1);
    return r;
}

Character adjoint_character(const RootSystemPtr& rs) {
    Character r(rs);
    for (auto& a : rs->positive_roots()) {
        r.add(a, 1);
        r.add(-a, 1);
    }
    r.add(Weight{}, rs->rank());
    return r;
}

Character tensor(const Character& a, const Character& b) {
    require_same(a, b);
    Character r(a.rs_ptr());
    r.reserve(a.support() * 4 + b.support() * 4);
    for (auto& [wa, ca] : a.terms())
        for (auto& [wb, cb] : b.terms()) r.add(wa + wb, checked_mul(ca, cb));
    return r;
}

Character adams(const Character& a, int k) {
    if (k < 1) throw PreconditionError("adams needs k >= 1");
    Character r(a.rs_ptr());
    r.reserve(a.support());
    for (auto& [w, c] : a.terms()) r.add(rootsys::scaled(w, k), c);
    return r;
}

Character dual(const Character& a) {
    Character r(a.rs_ptr());
    r.reserve(a.support());
    for (auto& [w, c] : a.terms()) r.add(-w, c);
    return r;
}

Character outer(const Character& a, const Character& b, const RootSystemPtr& product) {
    const int ra = a.rs().rank();
    if (ra + b.rs().rank() != product->rank()) throw PreconditionError("outer: rank mismatch");
    Character r(product);
    r.reserve(a.support() * b.support());
    for (auto& [wa, ca] : a.terms())
        for (auto& [wb, cb] : b.terms()) {
            Weight w = wa;
            for (int i = 0; i < b.rs().rank(); ++i) w[ra + i] = wb[i];
            r.add(w, checked_mul(ca, cb));
        }
    return r;
}

Character embed(const Character& a, const RootSystemPtr& product, int offset) {
    if (offset + a.rs().rank() > product->rank()) throw PreconditionError("embed: block out of range");
    Character r(product);
    r.reserve(a.support());
    for (auto& [wa, ca] : a.terms()) {
        Weight w;
        for (int i = 0; i < a.rs().rank(); ++i) w[offset + i] = wa[i];
        r.add(w, ca);
    }
    return r;
}

static Character halve(const Character& a, Mult d) {
    Character r(a.rs_ptr());
    r.reserve(a.support());
    for (auto& [w, c] : a.terms()) {
        if (c % d) throw ConsistencyError("plethysm coefficient not divisible by " + std::to_string(d));
        r.add(w, c / d);
    }
    return r;
}

Character alt2(const Character& a) { return halve(tensor(a, a) - adams(a, 2), 2); }
Character sym2(const Character& a) { return halve(tensor(a, a) + adams(a, 2), 2); }

Character alt3(const Character& a) {
    Character sq = tensor(a, a);
    Character cube = tensor(sq, a);
    Character mix = tensor(a, adams(a, 2));
    return halve(cube - 3 * mix + 2 * adams(a, 3), 6);
}

Character sym3(const Character& a) {
    Character sq = tensor(a, a);
    Character cube = tensor(sq, a);
    Character mix = tensor(a, adams(a, 2));
    return halve(cube + 3 * mix + 2 * adams(a, 3), 6);
}

Character tensor_alt2(const Character& a) { return tensor(a, alt2(a)); }
Character schur21(const Character& a) { return tensor_alt2(a) - alt3(a); }

const char* plethysm_name(Plethysm p) {
    switch (p) {
        case Plethysm::Base: return "base";
        case Plethysm::Square: return "tensor";
        case Plethysm::Alt2: return "alt2";
        case Plethysm::Sym2: return "sym2";
        case Plethysm::Alt3: return "alt3";
        case Plethysm::Sym3: return "sym3";
        case Plethysm::TensorAlt2: return "tensor-alt2";
        case Plethysm::Schur21: return "schur21";
    }
    return "?";
}

Plethysm parse_plethysm(const std::string& s) {
    for (auto p : {Plethysm::Base, Plethysm::Square, Plethysm::Alt2, Plethysm::Sym2, Plethysm::Alt3, Plethysm::Sym3,
                   Plethysm::TensorAlt2, Plethysm::Schur21})
        if (s == plethysm_name(p)) return p;
    if (s == "irrep") return Plethysm::Base;
    if (s == "plethysm21") return Plethysm::Schur21;
    throw ConfigError("unknown expression '" + s + "' (base, tensor, alt2, sym2, alt3, sym3, tensor-alt2, schur21 or plethysm21)");
}

int plethysm_degree(Plethysm p) {
    switch (p) {
        case Plethysm::Base: return 1;
        case Plethysm::Square:
        case Plethysm::Alt2:
        case Plethysm::Sym2: return 2;
        default: return 3;
    }
}

Character materialize(const Character& a, Plethysm p) {
    switch (p) {
        case Plethysm::Base: return a;
        case Plethysm::Square: return tensor(a, a);
        case Plethysm::Alt2: return alt2(a);
        case Plethysm::Sym2: return sym2(a);
        case Plethysm::Alt3: return alt3(a);
        case Plethysm::Sym3: return sym3(a);
        case Plethysm::TensorAlt2: return tensor_alt2(a);
        case Plethysm::Schur21: return schur21(a);
    }
    return a;
}

Mult RepSum::dimension() const {
    Mult d = 0;
    for (auto& [w, c] : terms) {
        auto dim = rootsys::weyl_dimension(*rs, w);
        d = checked_add(d, checked_mul(c, dim.convert_to<Mult>()));
    }
    return d;
}

std::string RepSum::format() const {
    if (terms.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i) s += " + ";
        if (terms[i].second != 1) s += std::to_string(terms[i].second) + "*";
        s += "R" + rs->format(terms[i].first);
    }
    return s;
}

Character expand(const RepSum& r) {
    Character out(r.rs);
    for (auto& [w, c] : r.terms) out += c * irrep_character(r.rs, w);
    return out;
}

}  // namespace invconn::chars
