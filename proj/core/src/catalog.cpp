#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "invconn/error.hpp"
#include "invconn/siiclass.hpp"

namespace invconn::siiclass {

namespace detail {
extern const char* const kCatalogJson;
}

using nlohmann::json;

const char* rep_type_name(RepType t) { return t == RepType::Real ? "real" : "complex"; }

int64_t algebra_dimension(const SimpleType& t) { return t.dimension(); }

RootSystemPtr IsotropyDatum::root_system() const { return rootsys::build_root_system(factors); }

Weight IsotropyDatum::weight(const rootsys::RootSystem& rs, const Constituent& c) const {
    if (c.size() != factors.size())
        throw DataError(id + ": constituent has " + std::to_string(c.size()) + " factor blocks, expected " +
                        std::to_string(factors.size()));
    std::vector<int> labels;
    for (size_t f = 0; f < c.size(); ++f) {
        if (static_cast<int>(c[f].size()) != factors[f].rank)
            throw DataError(id + ": constituent block " + std::to_string(f) + " has wrong length");
        labels.insert(labels.end(), c[f].begin(), c[f].end());
    }
    Weight w = rs.make_weight(labels);
    if (!rs.is_dominant(w)) throw DataError(id + ": constituent " + rs.format(w) + " is not dominant");
    return w;
}

int64_t IsotropyDatum::ambient_dimension() const { return algebra_dimension(ambient); }

int64_t IsotropyDatum::subgroup_dimension() const {
    int64_t d = 0;
    for (auto& t : factors) d += algebra_dimension(t);
    return d;
}

int64_t IsotropyDatum::isotropy_dimension() const {
    auto rs = root_system();
    int64_t d = 0;
    for (auto& c : constituents) d += rootsys::weyl_dimension(*rs, weight(*rs, c)).convert_to<int64_t>();
    return d;
}

std::string IsotropyDatum::describe_m() const {
    std::string s;
    for (size_t k = 0; k < constituents.size(); ++k) {
        if (k) s += " ⊕ ";
        for (size_t f = 0; f < factors.size(); ++f) {
            if (f) s += " ⊗ ";
            s += "R(";
            for (size_t i = 0; i < constituents[k][f].size(); ++i)
                s += (i ? "," : "") + std::to_string(constituents[k][f][i]);
            s += ")";
        }
    }
    return s;
}

void IsotropyDatum::validate() const {
    if (factors.empty()) throw DataError(id + ": no subgroup factors");
    if (constituents.empty()) throw DataError(id + ": no constituents");
    const int64_t want = ambient_dimension() - subgroup_dimension();
    const int64_t got = isotropy_dimension();
    if (want != got)
        throw DataError(id + ": dim m^C = " + std::to_string(got) + " but dim g - dim k = " + std::to_string(want));
    for (auto& cand : candidates) {
        IsotropyDatum alt = *this;
        alt.constituents = cand;
        alt.candidates.clear();
        if (alt.isotropy_dimension() != want) throw DataError(id + ": candidate constituent list has wrong dimension");
    }
    if (expected && expected->N != expected->a + expected->s) throw DataError(id + ": expected N != a + s");
}

namespace {

SimpleType type_from_json(const json& j) {
    const std::string series = j.at("series").get<std::string>();
    if (series.size() != 1) throw DataError("bad series '" + series + "'");
    return rootsys::make_type(series[0], j.at("rank").get<int>());
}

json type_to_json(const SimpleType& t) { return {{"series", std::string(1, t.series)}, {"rank", t.rank}}; }

RepType rep_type_from(const std::string& s) {
    if (s == "real" || s == "r") return RepType::Real;
    if (s == "complex" || s == "c") return RepType::Complex;
    throw DataError("bad representation type '" + s + "'");
}

IsotropyDatum row_from_json(const json& j) {
    IsotropyDatum d;
    d.id = j.at("id").get<std::string>();
    d.ambient = type_from_json(j.at("ambient"));
    for (auto& f : j.at("factors")) d.factors.push_back(type_from_json(f));
    d.constituents = j.at("constituents").get<std::vector<Constituent>>();
    if (j.contains("candidates")) d.candidates = j.at("candidates").get<std::vector<std::vector<Constituent>>>();
    if (j.contains("expected") && !j.at("expected").is_null()) {
        const json& e = j.at("expected");
        Expected x;
        x.a = e.at("a").get<int>();
        x.s = e.at("s").get<int>();
        x.N = e.at("N").get<int>();
        x.l = e.at("l").get<int>();
        x.type = rep_type_from(e.at("type").get<std::string>());
        d.expected = x;
    }
    d.source = j.value("source", "");
    d.family = j.value("family", "");
    if (j.contains("params")) d.params = j.at("params").get<std::map<std::string, int>>();
    return d;
}

json row_to_json(const IsotropyDatum& d) {
    json j;
    j["id"] = d.id;
    j["ambient"] = type_to_json(d.ambient);
    j["factors"] = json::array();
    for (auto& f : d.factors) j["factors"].push_back(type_to_json(f));
    j["constituents"] = d.constituents;
    if (!d.candidates.empty()) j["candidates"] = d.candidates;
    if (d.expected)
        j["expected"] = {{"a", d.expected->a},
                         {"s", d.expected->s},
                         {"N", d.expected->N},
                         {"l", d.expected->l},
                         {"type", rep_type_name(d.expected->type)}};
    else
        j["expected"] = nullptr;
    j["source"] = d.source;
    if (!d.family.empty()) {
        j["family"] = d.family;
        j["params"] = d.params;
    }
    return j;
}

}  // namespace

std::vector<IsotropyDatum> parse_catalog(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw DataError(std::string("catalog is not valid JSON: ") + e.what());
    }
    std::vector<IsotropyDatum> rows;
    try {
        const json& arr = j.is_array() ? j : j.at("rows");
        for (auto& r : arr) rows.push_back(row_from_json(r));
    } catch (const json::exception& e) {
        throw DataError(std::string("catalog schema error: ") + e.what());
    }
    return rows;
}

std::vector<IsotropyDatum> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open catalog file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_catalog(ss.str());
}

std::string dump_catalog(const std::vector<IsotropyDatum>& rows) {
    json arr = json::array();
    for (auto& r : rows) arr.push_back(row_to_json(r));
    return json{{"version", 1}, {"rows", arr}}.dump(1) + "\n";
}

const std::vector<IsotropyDatum>& default_catalog() {
    static const std::vector<IsotropyDatum> rows = parse_catalog(detail::kCatalogJson);
    return rows;
}

// ---------------------------------------------------------------------------
// Families

namespace {

// so(n) as a Cartan type: B for odd n, D for even n.
SimpleType so_type(int n) { return n % 2 ? rootsys::make_type('B', (n - 1) / 2) : rootsys::make_type('D', n / 2); }

std::vector<int> unit(int rank, std::initializer_list<std::pair<int, int>> entries) {
    // entries are (1-based fundamental index, coefficient)
    std::vector<int> v(rank, 0);
    for (auto [i, c] : entries) v.at(i - 1) += c;
    return v;
}

int param(const std::map<std::string, int>& p, const std::string& key, const std::string& family) {
    auto it = p.find(key);
    if (it == p.end()) throw ConfigError("family " + family + " needs parameter --" + key);
    return it->second;
}

void out_of_range(const std::string& family, const std::string& what) {
    throw RangeError("family " + family + ": " + what);
}

Expected ex(int a, int s, int N, int l, RepType t = RepType::Real) { return {a, s, N, l, t}; }

std::string so_name(int n) { return "SO" + std::to_string(n); }

}  // namespace

std::vector<std::string> family_ids() {
    return {"SU_Lambda2", "SU_Sym2",      "SU_pq",   "SO_adSU",  "SO_Lambda2SO",
            "SO_Sym2SO",  "SO_Lambda2Sp", "SO_adSp", "SO_SpSp1", "Sp_SOSp1"};
}

bool is_family(const std::string& id) {
    auto ids = family_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

IsotropyDatum instantiate_family(const std::string& family, const std::map<std::string, int>& p) {
    IsotropyDatum d;
    d.family = family;
    d.source = "table4";
    const RepType C = RepType::Complex;
    if (family == "SU_Lambda2") {
        const int n = param(p, "n", family);
        if (n < 5) out_of_range(family, "n >= 5 required (n = 5 is the low-dimensional row)");
        const int N = n * (n - 1) / 2;
        d.ambient = rootsys::make_type('A', N - 1);
        d.factors = {rootsys::make_type('A', n - 1)};
        d.constituents = {{unit(n - 1, {{2, 1}, {n - 2, 1}})}};
        d.expected = n == 5 ? ex(1, 1, 2, 1) : ex(1, 2, 3, 1);
        d.id = "SU" + std::to_string(N) + "/SU" + std::to_string(n);
        d.params = {{"n", n}};
    } else if (family == "SU_Sym2") {
        const int n = param(p, "n", family);
        if (n < 3) out_of_range(family, "n >= 3 required");
        const int N = n * (n + 1) / 2;
        d.ambient = rootsys::make_type('A', N - 1);
        d.factors = {rootsys::make_type('A', n - 1)};
        d.constituents = {{unit(n - 1, {{1, 2}, {n - 1, 2}})}};
        d.expected = ex(1, 2, 3, 1);
        d.id = "SU" + std::to_string(N) + "/SU" + std::to_string(n);
        d.params = {{"n", n}};
    } else if (family == "SU_pq") {
        int pp = param(p, "p", family), q = param(p, "q", family);
        if (pp > q) std::swap(pp, q);
        if (pp < 2 || q < 3) out_of_range(family, "p, q >= 3, or p = 2 with q >= 3");
        d.ambient = rootsys::make_type('A', pp * q - 1);
        d.factors = {rootsys::make_type('A', pp - 1), rootsys::make_type('A', q - 1)};
        const auto adj_q = unit(q - 1, {{1, 1}, {q - 1, 1}});
        if (pp == 2) {
            d.constituents = {{{2}, adj_q}};
            d.expected = ex(1, 1, 2, 1);
        } else {
            d.constituents = {{unit(pp - 1, {{1, 1}, {pp - 1, 1}}), adj_q}};
            d.expected = ex(2, 2, 4, 2);
        }
        d.id = "SU" + std::to_string(pp * q) + "/SU" + std::to_string(pp) + "xSU" + std::to_string(q);
        d.params = {{"p", pp}, {"q", q}};
    } else if (family == "SO_adSU") {
        const int n = param(p, "n", family);
        if (n < 3) out_of_range(family, "n >= 3 required (n = 3 is the low-dimensional row)");
        d.ambient = so_type(n * n - 1);
        d.factors = {rootsys::make_type('A', n - 1)};
        if (n == 3) {
            d.constituents = {{{3, 0}}, {{0, 3}}};
            d.expected = ex(2, 0, 2, 2, C);
        } else {
            d.constituents = {{unit(n - 1, {{1, 2}, {n - 2, 1}})}, {unit(n - 1, {{2, 1}, {n - 1, 2}})}};
            d.expected = ex(6, 2, 8, 4, C);
        }
        d.id = so_name(n * n - 1) + "/SU" + std::to_string(n);
        d.params = {{"n", n}};
    } else if (family == "SO_Lambda2SO") {
        const int n = param(p, "n", family);
        if (n < 7) out_of_range(family, "n >= 7 required (n = 7, 8 are low-dimensional rows)");
        const SimpleType k = so_type(n);
        d.ambient = so_type(n * (n - 1) / 2);
        d.factors = {k};
        if (n == 7) {
            d.constituents = {{{1, 0, 2}}};
            d.expected = ex(3, 1, 4, 2);
        } else if (n == 8) {
            d.constituents = {{{1, 0, 1, 1}}};
            d.expected = ex(4, 3, 7, 2);
        } else {
            d.constituents = {{unit(k.rank, {{1, 1}, {3, 1}})}};
            d.expected = ex(3, 1, 4, 2);
        }
        d.id = so_name(n * (n - 1) / 2) + "/" + so_name(n);
        d.params = {{"n", n}};
    } else if (family == "SO_Sym2SO") {
        const int n = param(p, "n", family);
        if (n < 5) out_of_range(family, "n >= 5 required (n = 5, 6 are low-dimensional rows)");
        const SimpleType k = so_type(n);
        const int N = (n - 1) * (n + 2) / 2;
        d.ambient = so_type(N);
        d.factors = {k};
        if (n == 5) {
            d.constituents = {{{2, 2}}};
            d.expected = ex(3, 1, 4, 2);
        } else if (n == 6) {
            d.constituents = {{{2, 1, 1}}};
            d.expected = ex(3, 2, 5, 2);
        } else {
            d.constituents = {{unit(k.rank, {{1, 2}, {2, 1}})}};
            d.expected = ex(3, 1, 4, 2);
        }
        d.id = so_name(N) + "/" + so_name(n);
        d.params = {{"n", n}};
    } else if (family == "SO_Lambda2Sp") {
        const int n = param(p, "n", family);
        if (n < 3) out_of_range(family, "n >= 3 required (n = 3 is the low-dimensional row)");
        const int N = (n - 1) * (2 * n + 1);
        d.ambient = so_type(N);
        d.factors = {rootsys::make_type('C', n)};
        d.constituents = {{unit(n, {{1, 1}, {3, 1}})}};
        d.expected = n == 3 ? ex(1, 0, 1, 1) : ex(3, 1, 4, 2);
        d.id = so_name(N) + "/Sp" + std::to_string(n);
        d.params = {{"n", n}};
    } else if (family == "SO_adSp") {
        const int n = param(p, "n", family);
        if (n < 2) out_of_range(family, "n >= 2 required (n = 2 is the low-dimensional row)");
        const int N = n * (2 * n + 1);
        d.ambient = so_type(N);
        d.factors = {rootsys::make_type('C', n)};
        d.constituents = {{unit(n, {{1, 2}, {2, 1}})}};
        d.expected = n == 2 ? ex(2, 1, 3, 1) : ex(3, 1, 4, 2);
        d.id = so_name(N) + "/Sp" + std::to_string(n);
        d.params = {{"n", n}};
    } else if (family == "SO_SpSp1") {
        const int n = param(p, "n", family);
        if (n < 2) out_of_range(family, "n >= 2 required");
        d.ambient = so_type(4 * n);
        d.factors = {rootsys::make_type('C', n), rootsys::make_type('A', 1)};
        d.constituents = {{unit(n, {{2, 1}}), {2}}};
        d.expected = ex(1, 0, 1, 1);
        d.id = so_name(4 * n) + "/Sp" + std::to_string(n) + "xSp1";
        d.params = {{"n", n}};
    } else if (family == "Sp_SOSp1") {
        const int n = param(p, "n", family);
        if (n < 3) out_of_range(family, "n >= 3 required (n = 3, 4 are low-dimensional rows)");
        d.ambient = rootsys::make_type('C', n);
        if (n == 3) {
            d.factors = {rootsys::make_type('A', 1), rootsys::make_type('A', 1)};
            d.constituents = {{{4}, {2}}};
        } else if (n == 4) {
            // SO4 = SU2 x SU2
            d.factors = {rootsys::make_type('A', 1), rootsys::make_type('A', 1), rootsys::make_type('A', 1)};
            d.constituents = {{{2}, {2}, {2}}};
        } else {
            const SimpleType k = so_type(n);
            d.factors = {k, rootsys::make_type('A', 1)};
            d.constituents = {{unit(k.rank, {{1, 2}}), {2}}};
        }
        d.expected = ex(1, 0, 1, 1);
        d.id = "Sp" + std::to_string(n) + "/" + so_name(n) + "xSp1";
        d.params = {{"n", n}};
    } else {
        throw ConfigError("unknown family '" + family + "'");
    }
    return d;
}

namespace {

std::string normalize(std::string s) {
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        // accept the multiplication sign in place of 'x'
        if (s.compare(i, 2, "×") == 0) {
            out += 'x';
            ++i;
            continue;
        }
        char c = s[i];
        if (c == ' ' || c == '_' || c == '(' || c == ')') continue;
        out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

}  // namespace

std::vector<IsotropyDatum> select(const std::vector<IsotropyDatum>& catalog, const std::string& selector,
                                  const std::map<std::string, int>& params) {
    if (selector == "all") return catalog;
    if (selector == "table4" || selector == "classical" || selector == "table5" || selector == "exceptions") {
        const std::string src = (selector == "table4" || selector == "classical") ? "table4" : "table5";
        std::vector<IsotropyDatum> out;
        for (auto& r : catalog)
            if (r.source == src) out.push_back(r);
        return out;
    }
    if (is_family(selector)) {
        if (!params.empty()) return {instantiate_family(selector, params)};
        std::vector<IsotropyDatum> out;
        for (auto& r : catalog)
            if (r.family == selector) out.push_back(r);
        return out;
    }
    const std::string key = normalize(selector);
    for (auto& r : catalog)
        if (normalize(r.id) == key) return {r};
    throw ConfigError("unknown selector '" + selector + "'");
}

Budget Budget::parse(const std::string& s) {
    Budget b;
    if (s.empty() || s == "default") return b;
    if (s == "unlimited") {
        b.unlimited = true;
        return b;
    }
    auto colon = s.find(':');
    try {
        size_t pos = 0;
        if (colon == std::string::npos) {
            b.max_weyl_order = std::stod(s, &pos);
            if (pos != s.size()) throw ConfigError("");
        } else {
            b.max_weyl_order = std::stod(s.substr(0, colon), &pos);
            if (pos != colon) throw ConfigError("");
            const std::string rest = s.substr(colon + 1);
            b.max_support = std::stod(rest, &pos);
            if (pos != rest.size()) throw ConfigError("");
        }
    } catch (const std::exception&) {
        throw ConfigError("bad budget '" + s + "' (use 'unlimited' or W:S, e.g. 1e6:5e4)");
    }
    if (!(b.max_weyl_order > 0) || !(b.max_support > 0)) throw ConfigError("budget must be positive");
    return b;
}

}  // namespace invconn::siiclass
