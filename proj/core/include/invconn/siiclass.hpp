#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "invconn/chars.hpp"
#include "invconn/rootsys.hpp"

namespace invconn::siiclass {

using chars::Character;
using chars::Mult;
using rootsys::RootSystemPtr;
using rootsys::SimpleType;
using rootsys::Weight;

enum class RepType { Real, Complex };
const char* rep_type_name(RepType t);

struct Expected {
    int a = 0, s = 0, N = 0, l = 0;
    RepType type = RepType::Real;
};

// Per-factor Dynkin labels of one external-tensor summand of m^C.
using Constituent = std::vector<std::vector<int>>;

struct IsotropyDatum {
    std::string id;
    SimpleType ambient;
    std::vector<SimpleType> factors;
    std::vector<Constituent> constituents;
    // Alternative constituent lists when the table is ambiguous; the first
    // entry equals `constituents`. Empty otherwise.
    std::vector<std::vector<Constituent>> candidates;
    std::optional<Expected> expected;
    std::string source;  // "table4" | "table5"
    std::string family;  // empty for isolated rows
    std::map<std::string, int> params;

    RootSystemPtr root_system() const;
    Weight weight(const rootsys::RootSystem& rs, const Constituent& c) const;
    int64_t ambient_dimension() const;
    int64_t subgroup_dimension() const;
    // Sum of Weyl dimensions of the constituents.
    int64_t isotropy_dimension() const;
    // Human-readable m^C, e.g. "R(1,0) ⊗ R(4)".
    std::string describe_m() const;
    // Throws DataError unless dim m = dim g - dim k and the expected record
    // is consistent.
    void validate() const;
};

// Dimension of the ambient compact algebra for SU_n / SO_n / Sp_n style
// names is carried by `ambient` in Cartan notation (SO_2r+1 = B_r etc.).
int64_t algebra_dimension(const SimpleType& t);

// Catalog rows in table order (Table 4 families at default parameters, then
// the low-dimensional rows, then Table 5).
const std::vector<IsotropyDatum>& default_catalog();
std::vector<IsotropyDatum> parse_catalog(const std::string& json_text);
std::vector<IsotropyDatum> load_catalog(const std::string& path);
std::string dump_catalog(const std::vector<IsotropyDatum>& rows);

// Family generators. Ids: SU_Lambda2 (n), SU_Sym2 (n), SU_pq (p, q),
// SO_adSU (n), SO_Lambda2SO (n), SO_Sym2SO (n), SO_Lambda2Sp (n),
// SO_adSp (n), SO_SpSp1 (n), Sp_SOSp1 (n). Parameters below a family's
// generic range map to the table's low-dimensional rows; anything else out
// of range throws RangeError.
std::vector<std::string> family_ids();
bool is_family(const std::string& id);
IsotropyDatum instantiate_family(const std::string& family, const std::map<std::string, int>& params);

// Row ids, family ids, "all", "table4", "table5", "classical", "exceptions".
std::vector<IsotropyDatum> select(const std::vector<IsotropyDatum>& catalog, const std::string& selector,
                                  const std::map<std::string, int>& params = {});

struct Budget {
    double max_weyl_order = 1e6;
    double max_support = 5e4;
    bool unlimited = false;
    // "unlimited", "default", or "W:S" e.g. "1e6:5e4".
    static Budget parse(const std::string& s);
};

struct Feasibility {
    bool feasible = true;
    double weyl_order = 0;
    double support = 0;
    double cost_estimate = 0;  // rough count of hash lookups
    std::string reason;
};

Feasibility assess(const IsotropyDatum& entry, const Budget& budget);

enum class Status { Match, Mismatch, Skipped, Computed };
const char* status_name(Status s);

struct SIIReport {
    std::string id;
    std::string m_description;
    int candidate = 0;  // index into candidates, 0 when unambiguous
    int64_t dim_m = 0;
    int64_t a = 0, s = 0, N = 0, l = 0, epsilon = 0;
    RepType rep_type = RepType::Real;
    std::optional<Expected> expected;
    Status status = Status::Computed;
    double elapsed_ms = 0;
    Feasibility feasibility;
    std::vector<std::string> notes;  // invariant violations, skip reasons
};

// Runs every candidate constituent list; one report each.
std::vector<SIIReport> classify(const IsotropyDatum& entry, const Budget& budget = {});

// m given as a character; must be multiplicity free.
SIIReport classify_reducible(const Character& chi);

RepType duality_type(const RootSystemPtr& rs, const std::vector<Weight>& constituents);

enum class Host { Orthogonal, Unitary, Symplectic };
Character isotropy_from_embedding(Host host, const Character& pi);

struct CrossCheck {
    int64_t a_direct = 0, s_direct = 0, l_direct = 0;
    int64_t a_factored = 0, s_factored = 0, l_factored = 0;
    bool characters_agree = false;  // alt2/sym2/alt3 as full characters
    bool ok() const {
        return characters_agree && a_direct == a_factored && s_direct == s_factored && l_direct == l_factored;
    }
};
// Splits m = V (x) W with W the last factor; needs a single constituent.
CrossCheck external_cross_check(const IsotropyDatum& entry);

enum class Format { Markdown, Json, Csv };
Format parse_format(const std::string& s);
// `timing` controls whether elapsed_ms carries the measured value or null,
// so that repeated runs produce identical output by default.
std::string emit_tables(const std::vector<SIIReport>& reports, Format format, bool timing = false);
std::string summary_line(const std::vector<SIIReport>& reports);

}  // namespace invconn::siiclass
