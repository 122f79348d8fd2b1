#pragma once

#include "invariants.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace csurg {

enum class Certificate {
    NegativeCoefficient,
    BennequinViolation,
    MixedStabilization,
    WrongFirstStabilization,
    LanternReductionToTight,
    StabilizedPositiveSurgery,
};
std::string to_string(Certificate c);

struct TightnessVerdict {
    bool tight = false;
    Certificate certificate = Certificate::NegativeCoefficient;
    std::optional<Rational> meridian_tb;     // rational tb of a meridian when 0 < r < -t
    std::optional<Rational> reduced_coeff;   // coefficient on the tb -1 unknot after lantern reduction
};

TightnessVerdict unknot_tightness(long long t, long long stab_plus, long long stab_minus, const Rational& r,
                                  std::optional<int> first_stab_sign = std::nullopt);

// Sign of the first stabilization the transformation chain introduces, if any.
std::optional<int> first_chain_stabilization(const ExpansionChain& chain);

struct Bounds {
    int m_max = 3;
    long long t_min = -12;         // unknot tb floor in lens family grids
    long long k_abs = 4;           // |k| for Rolfsen twists
    long long sigma_tb_min = -20;  // K5a1 and -K5a1
    long long trefoil_tb_min = -16;
    long long lens_tb_min = -30;   // torus knots
    bool m_explicit = false;       // m was given by the caller
    // applies "key=value,key=value"
    void apply(const std::string& text);
    std::string str() const;
};

using Params = std::map<std::string, long long>;

struct FamilyValue {
    std::optional<BigInt> e;  // integer representative, before reduction
    std::optional<Rational> d3;
};

enum class Manifold { Sigma2311, NegSigma2311, Lens };
std::string to_string(Manifold m);

struct ParamAxis {
    std::string name;
    std::string domain;  // human-readable
    // admissible values given the earlier axes; bounded axes are clipped by Bounds
    std::function<std::vector<long long>(const Params&, const Bounds&)> grid;
    std::function<bool(long long, const Params&)> admits;
    bool clipped = false;
};

enum class TemplateKind { None, UnknotStandard, UnknotDual, TorusLens, Sigma, NegSigma };

// One diagram shape of a family: knot at tb with a fixed coefficient.
struct TemplatePoint {
    std::string knot;
    long long t = 0;
    long long k = 0;  // Rolfsen twist for unknot templates
    Rational coeff;
    long long factor = 1;  // image of the knot meridian in the standard generator
    bool tight = false;    // the family lists tight structures
};

struct FamilyRecord {
    std::string id;
    Manifold manifold = Manifold::Lens;
    std::vector<ParamAxis> axes;
    std::function<FamilyValue(const Params&)> eval;
    std::string euler_text;
    std::string d3_text;
    std::string citation;
    TemplateKind kind = TemplateKind::None;
    std::string template_text;
    // diagram shapes at a given m; empty for families without a template
    std::function<std::vector<TemplatePoint>(long long m, const Bounds&)> points;
    // formula points that belong to a given diagram shape
    std::function<bool(const Params&, const TemplatePoint&)> point_filter;
    std::string group;        // families sharing one diagram are verified together
    std::string obstruction;  // A, B1, B2, B3, C, D
    bool has_param(const std::string& name) const;
};

const std::vector<FamilyRecord>& family_records();
const FamilyRecord& family(const std::string& id);

BigInt lens_order(long long m);
BigInt canonical_lens_class(const BigInt& e, long long m);  // min(e, -e) mod 4m+3

// Checks the domain; throws DomainError when params are outside it. Euler
// classes of lens families are reduced mod 4m+3.
FamilyValue family_eval(const std::string& id, const Params& params);
// Same, with the integer representative the formula produces.
FamilyValue family_eval_raw(const std::string& id, const Params& params);

// Every admissible parameter point, clipped by bounds. Fixed params are held.
std::vector<Params> family_grid(const FamilyRecord& rec, const Params& fixed, const Bounds& b);

Rational unknot_lens_coefficient(long long m, long long k, long long t, bool dual);

struct TemplateInstance {
    LegendrianComponent knot;  // rot set to the first admissible value
    ExpansionChain chain;      // signs unassigned
    long long meridian_factor = 1;
    std::string description;
};
TemplateInstance family_surgery_description(const std::string& id, const Params& params,
                                            const Atlas& atlas = default_atlas());

using Invariant = std::pair<BigInt, Rational>;  // (canonical euler, d3)

struct VerifyMismatch {
    Params point;
    std::vector<Invariant> engine_only;
    std::vector<Invariant> formula_only;
};
struct VerifyResult {
    std::string id;
    std::vector<std::string> group;
    std::size_t points = 0;
    std::vector<VerifyMismatch> mismatches;
    bool ok() const { return mismatches.empty() && points > 0; }
};
VerifyResult family_verify(const std::string& id, const std::vector<long long>& ms, const Bounds& b,
                           const Atlas& atlas = default_atlas());

enum Flavor : unsigned { FlavorRational = 1, FlavorInteger = 2, FlavorReciprocal = 4, FlavorUnit = 8 };
std::string flavor_names(unsigned mask);
unsigned coefficient_flavors(const Rational& coeff);

struct Cs1Entry {
    Manifold manifold = Manifold::Lens;
    long long m = 0;
    BigInt euler;  // canonical; 0 for homology spheres
    Rational d3;
    unsigned flavors = 0;
    std::optional<bool> tight;  // unset when no criterion applies
    std::string knot;
    long long tb = 0;
    long long rot = 0;
    Rational coeff;
};

// One entry per distinct (knot, tb, |rot|, coeff, euler, d3).
std::vector<Cs1Entry> enumerate_manifold(Manifold mf, long long m, const Bounds& b, const Atlas& atlas = default_atlas());

struct FamilyStatus {
    std::string id;
    std::string status;  // member, exhausted, obstructed, unresolved
    std::string detail;
};
struct XiResult {
    long long m = 0;
    long long N = 0;
    BigInt euler;
    Rational d3;
    bool cs_gt_1 = false;
    std::vector<FamilyStatus> families;
    std::vector<std::string> findings;  // obstruction claims contradicted inside the grid
};
// Base tight structure from the two-component chain of unknots (Hopf plumbing).
ClassAndD3 lens_base_structure(long long m, BigInt* standard_euler = nullptr);
XiResult xi_Nm(long long m, long long N, const Bounds& b);

struct FlavorBound {
    std::string flavor;
    long long lo = 0;
    long long hi = 0;
    std::string source;
};
std::vector<FlavorBound> cs_bounds(Manifold mf, long long m, bool tight, std::optional<BigInt> euler,
                                   std::optional<Rational> d3, const Bounds& b);

}  // namespace csurg
