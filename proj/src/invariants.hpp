#pragma once

#include "calculus.hpp"

#include <optional>
#include <string>
#include <vector>

namespace csurg {

struct GeneralizedLinkingMatrix {
    IntMatrix Q;
    IntVector q;
    IntVector n;
    std::vector<int> signs;
};

// Requires every coefficient to be +-1/n.
GeneralizedLinkingMatrix build_q(const ContactSurgeryDiagram& d);

struct HomologyClass {
    IntVector coords;   // reduced modulo factors; factor 0 is a free coordinate
    IntVector factors;
    bool is_zero() const;
    friend bool operator==(const HomologyClass&, const HomologyClass&) = default;
    // drops the coordinates of unit factors
    HomologyClass nontrivial() const;
};

struct H1Presentation {
    IntVector factors;
    IntMatrix U;  // canonical coordinates of a meridian vector v are U*v mod factors
};

H1Presentation h1(const IntMatrix& q_matrix);
H1Presentation h1(const ContactSurgeryDiagram& d);
HomologyClass reduce_class(const H1Presentation& p, const IntVector& v);
IntVector nontrivial_factors(const IntVector& factors);

// Sum of rot_i * mu_i on the unit expansion of a reciprocal diagram.
HomologyClass euler_via_expansion(const ContactSurgeryDiagram& d);

struct Congruence {
    BigInt value;    // least non-negative representative
    BigInt modulus;  // 0 when the value is forced exactly
};
// Solves a*c = b in the group presented by p, i.e. U(b - c a) = 0 mod factors.
std::optional<Congruence> solve_multiple(const H1Presentation& p, const IntVector& a, const IntVector& b);

// e = c * mu_K for a diagram that is a single expanded knot; mu_K is the sum of
// the meridians of all unit components.
std::optional<Congruence> euler_coefficient(const ContactSurgeryDiagram& unit_diagram);

// Images of the chain meridians as multiples of the meridian of the original
// knot. t is the tb of the first chain entry, s holds the stabilization
// increments of entries 1..m (s[0] is not used).
std::vector<BigInt> meridian_images(long long l, long long m, long long t, const std::vector<long long>& s);
// The product formulas as displayed in the literature, term by term.
std::vector<BigInt> meridian_images_displayed(long long l, long long m, long long t, const std::vector<long long>& s);

struct EulerCoefficient {
    BigInt e_k;
    std::string basis = "mu_K";
    int formula_case = 0;  // 1..4, or 0 for a single unit entry
};

// t, r: tb and rot of the first chain entry; rots: rot of every unit entry.
EulerCoefficient euler_closed_form(long long t, long long r, const std::vector<long long>& rots, long long l,
                                   const std::vector<long long>& s);

struct InvariantReport {
    IntVector h1_factors;  // nontrivial invariant factors
    HomologyClass euler;   // nontrivial coordinates
    bool euler_torsion = false;
    std::optional<Rational> d3;
    std::optional<Congruence> euler_coefficient;  // single-knot diagrams only
    std::vector<int> signs;
    std::vector<long long> rots;
    SignatureTriple inertia;
    std::string expansion_trace;
};

// d must have reciprocal coefficients only.
InvariantReport evaluate_reciprocal(const ContactSurgeryDiagram& d, bool single_knot = false);

// Expands general coefficients; one report per stabilization-sign assignment.
std::vector<InvariantReport> compute_invariants(const ContactSurgeryDiagram& d,
                                                const std::optional<std::vector<int>>& signs = std::nullopt);

struct ClassAndD3 {
    HomologyClass euler;
    Rational d3;
};
ClassAndD3 connected_sum(const ClassAndD3& a, const ClassAndD3& b);

Rational meridian_rational_tb(const BigInt& p, const BigInt& q, long long t);

std::string format_vector(const std::vector<BigInt>& v);
std::string format_vector(const std::vector<long long>& v);

}  // namespace csurg
