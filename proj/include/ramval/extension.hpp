#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramval/hahn.hpp"
#include "ramval/value_group.hpp"

namespace ramval {

enum class ResidueKind {
    PrimeField,       // Kv = F_p
    Fq,               // Kv = F_{residue_q}
    RationalFunction, // Kv = F_{residue_q}(u), u a formal coefficient symbol
};

/// The ground field (K,v), never materialized as a set: a value group, a
/// residue description, the ambient coefficient field the scenario embeds
/// into, and (for defect scenarios) a declared approximant sequence.
struct GroundFieldSpec {
    ValueGroup value_group;
    ResidueKind residue_kind = ResidueKind::PrimeField;
    std::uint32_t residue_q = 2;
    std::uint32_t ambient_q = 2;
    std::vector<HahnSeries> approximants;
    std::optional<Rat> approximant_sup; // declared supremum of v(a - c_k)
};

/// Residue-field membership for a series coefficient.
inline bool coeff_in_residue_field(const Coeff& c, const GroundFieldSpec& g) {
    switch (g.residue_kind) {
    case ResidueKind::PrimeField:
    case ResidueKind::Fq: {
        if (!c.is_u_free()) return false;
        return c.constant_part().in_subfield(
            g.residue_kind == ResidueKind::PrimeField ? FqField::get(g.ambient_q).p()
                                                      : g.residue_q);
    }
    case ResidueKind::RationalFunction: {
        for (const auto& [e, fq] : c.terms())
            if (!e.is_integer() || !fq.in_subfield(g.residue_q)) return false;
        return true;
    }
    }
    return false;
}

/// Whether an ambient series certifiably represents an element of K:
/// exponents in vK, coefficients in Kv.
inline bool is_ground_element(const HahnSeries& s, const GroundFieldSpec& g) {
    for (const auto& [e, c] : s.terms())
        if (!g.value_group.contains(e) || !coeff_in_residue_field(c, g)) return false;
    return true;
}

/// Solvability of y^p - y = a0 inside the residue field (not merely in the
/// ambient coefficient field); decides whether an Artin-Schreier polynomial
/// splits at residue level.
inline bool residue_equation_splits(const Coeff& a0, const GroundFieldSpec& g) {
    if (!coeff_in_residue_field(a0, g)) return false;
    if (!a0.is_u_free()) return false; // u-polynomials of degree < p are never p-th-power minus root
    std::uint32_t p = FqField::get(g.ambient_q).p();
    std::uint32_t qk = g.residue_kind == ResidueKind::PrimeField ? p : g.residue_q;
    FqElem target = a0.constant_part();
    for (std::uint32_t y = 0; y < g.ambient_q; ++y) {
        FqElem e(g.ambient_q, y);
        if (!e.in_subfield(qk)) continue;
        if (e.pow(p) - e == target) return true;
    }
    return false;
}

enum class ExtKind { ArtinSchreier, TowerAS, KummerFormula };

struct ExtensionSpec {
    ExtKind kind = ExtKind::ArtinSchreier;
    GroundFieldSpec ground;
    TruncationPolicy truncation;
    HahnSeries rhs; // theta^p - theta = rhs (tower: right-hand side of the lower step)
    bool rhs_tail_negative = false; // hidden terms of rhs all have negative exponent
};

/// Automorphism sigma^s tau^t of a tower (s = 0 for a single degree-p step):
/// theta0 -> theta0 + s, theta -> theta + s*zeta + t.
struct Auto {
    int s = 0;
    int t = 0;
    bool is_identity() const { return s == 0 && t == 0; }
};

/// An element of L written over the embedded generators:
/// sum coords[i][j] * theta0^i * theta^j with ground-field coefficients.
/// Simple extensions use the single row i = 0.
struct ExtElem {
    std::vector<std::vector<HahnSeries>> coords;
};

struct ApproximationProfile {
    std::vector<std::optional<Rat>> values; // v(a - c_k); nullopt = infinity (a = c_k)
    bool strictly_increasing = false;
    Rat infimum_of_negatives; // = -sup v(a - c_k)
};

/// A built degree-p Galois extension (or degree-p^2 tower) with embedded
/// generators, Galois action data, and its classification invariants.
struct ExtensionData {
    ExtKind kind = ExtKind::ArtinSchreier;
    GroundFieldSpec ground;
    TruncationPolicy truncation;
    int p = 2;

    HahnSeries theta;       // generator of the (upper) degree-p step
    HahnSeries theta0;      // tower only
    HahnSeries rhs_theta;   // theta^p - theta (ground element for a simple step)
    HahnSeries rhs_theta0;  // tower only
    FqElem zeta;            // tower only: sigma(theta) - theta

    int e = 1, f = 1, d = 1, nu = 0;
    int d_lower = 1, d_upper = 1; // tower defect factors
    bool residue_separable = false;
    ValueGroup vK, vL;
    Rat v_theta;

    std::vector<int> basis_powers;             // valuation basis {theta^j}; empty for defect
    std::optional<ApproximationProfile> profile; // defect case

    std::vector<HahnSeries> theta_pows;  // theta^0 .. theta^(p-1)
    std::vector<HahnSeries> theta0_pows; // tower: theta0^0 .. theta0^(p-1)

    bool is_tower() const { return kind == ExtKind::TowerAS; }
    bool is_defect() const { return d > 1; }
    int degree() const { return is_tower() ? p * p : p; }
};

// ---------------------------------------------------------------------------
// element algebra

inline ExtElem elem_zero(const ExtensionData& x) {
    size_t rows = x.is_tower() ? x.p : 1;
    ExtElem e;
    e.coords.assign(rows, std::vector<HahnSeries>(
                              x.p, HahnSeries::zero(x.ground.ambient_q, x.truncation.max_terms)));
    return e;
}

inline ExtElem elem_monomial(const ExtensionData& x, int i, int j, HahnSeries c) {
    ExtElem e = elem_zero(x);
    e.coords.at(i).at(j) = std::move(c);
    return e;
}

inline ExtElem elem_from_ground(const ExtensionData& x, HahnSeries c) {
    return elem_monomial(x, 0, 0, std::move(c));
}

inline ExtElem elem_theta(const ExtensionData& x) {
    return elem_monomial(x, 0, 1, HahnSeries::one(x.ground.ambient_q, x.truncation.max_terms));
}

inline ExtElem elem_add(const ExtElem& a, const ExtElem& b) {
    ExtElem r = a;
    for (size_t i = 0; i < r.coords.size(); ++i)
        for (size_t j = 0; j < r.coords[i].size(); ++j) r.coords[i][j] = r.coords[i][j] + b.coords[i][j];
    return r;
}

inline ExtElem elem_neg(const ExtElem& a) {
    ExtElem r = a;
    for (auto& row : r.coords)
        for (auto& c : row) c = -c;
    return r;
}

inline ExtElem elem_sub(const ExtElem& a, const ExtElem& b) { return elem_add(a, elem_neg(b)); }

inline bool elem_is_ground(const ExtElem& a) {
    for (size_t i = 0; i < a.coords.size(); ++i)
        for (size_t j = 0; j < a.coords[i].size(); ++j)
            if ((i || j) && !a.coords[i][j].terms().empty()) return false;
    return true;
}

/// Whether every coordinate above the constant one cancelled exactly
/// (possibly up to a finite window), certifying the element lies in the
/// ground field.
inline bool elem_nonconstant_coords_vanish(const ExtElem& a) { return elem_is_ground(a); }

namespace detail {

inline std::int64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// reduction of a raw coefficient grid by theta^p = theta + R and (towers)
// theta0^p = theta0 + S
inline ExtElem reduce_grid(const ExtensionData& x,
                           std::vector<std::vector<HahnSeries>> grid) {
    const int p = x.p;
    const bool tower = x.is_tower();
    // theta-direction: theta^j, j >= p, rewrites to theta^(j-p+1) + R*theta^(j-p)
    // where for towers R = theta0 (raising the theta0-degree instead)
    for (int j = (int)grid[0].size() - 1; j >= p; --j) {
        for (int i = 0; i < (int)grid.size(); ++i) {
            HahnSeries c = grid[i][j];
            if (c.terms().empty() && c.is_exact()) continue;
            grid[i][j] = HahnSeries::zero(x.ground.ambient_q, x.truncation.max_terms);
            grid[i][j - p + 1] = grid[i][j - p + 1] + c;
            if (tower) {
                if (i + 1 >= (int)grid.size())
                    grid.resize(i + 2, std::vector<HahnSeries>(
                                           grid[0].size(),
                                           HahnSeries::zero(x.ground.ambient_q, x.truncation.max_terms)));
                grid[i + 1][j - p] = grid[i + 1][j - p] + c;
            } else {
                grid[i][j - p] = grid[i][j - p] + c * x.rhs_theta;
            }
        }
    }
    // theta0-direction: theta0^i, i >= p, rewrites to theta0^(i-p+1) + S*theta0^(i-p)
    for (int i = (int)grid.size() - 1; i >= p && tower; --i) {
        for (int j = 0; j < p; ++j) {
            HahnSeries c = grid[i][j];
            if (c.terms().empty() && c.is_exact()) continue;
            grid[i][j] = HahnSeries::zero(x.ground.ambient_q, x.truncation.max_terms);
            grid[i - p + 1][j] = grid[i - p + 1][j] + c;
            grid[i - p][j] = grid[i - p][j] + c * x.rhs_theta0;
        }
    }
    ExtElem r = elem_zero(x);
    for (int i = 0; i < (int)r.coords.size(); ++i)
        for (int j = 0; j < p; ++j) r.coords[i][j] = grid[i][j];
    return r;
}

} // namespace detail

inline ExtElem elem_mul(const ExtensionData& x, const ExtElem& a, const ExtElem& b) {
    const int p = x.p;
    size_t rows = a.coords.size() + b.coords.size() - 1;
    size_t cols = 2 * p - 1;
    std::vector<std::vector<HahnSeries>> grid(
        rows + 2, std::vector<HahnSeries>(cols + p,
                                          HahnSeries::zero(x.ground.ambient_q, x.truncation.max_terms)));
    for (size_t i = 0; i < a.coords.size(); ++i)
        for (size_t j = 0; j < a.coords[i].size(); ++j) {
            if (a.coords[i][j].terms().empty() && a.coords[i][j].is_exact()) continue;
            for (size_t k = 0; k < b.coords.size(); ++k)
                for (size_t l = 0; l < b.coords[k].size(); ++l) {
                    if (b.coords[k][l].terms().empty() && b.coords[k][l].is_exact()) continue;
                    grid[i + k][j + l] = grid[i + k][j + l] + a.coords[i][j] * b.coords[k][l];
                }
        }
    return detail::reduce_grid(x, std::move(grid));
}

/// Image under the automorphism g, by substituting the shifted generators
/// and re-expanding binomially. The shift of theta is the constant
/// g.s*zeta + g.t, the shift of theta0 the prime-field constant g.s.
inline ExtElem apply_auto(const ExtensionData& x, const ExtElem& a, const Auto& g) {
    const std::uint32_t q = x.ground.ambient_q;
    if (!x.is_tower() && g.s != 0)
        throw InvalidInput("degree-p step has no sigma component");
    FqElem dtheta = FqElem::from_int(q, g.t);
    if (x.is_tower()) dtheta = dtheta + x.zeta * FqElem::from_int(q, g.s);
    FqElem dtheta0 = FqElem::from_int(q, g.s);

    ExtElem r = elem_zero(x);
    for (size_t i = 0; i < a.coords.size(); ++i)
        for (size_t j = 0; j < a.coords[i].size(); ++j) {
            const HahnSeries& c = a.coords[i][j];
            if (c.terms().empty() && c.is_exact()) continue;
            // (theta0 + s)^i (theta + d)^j
            for (size_t i2 = 0; i2 <= i; ++i2)
                for (size_t j2 = 0; j2 <= j; ++j2) {
                    FqElem scale = FqElem::from_int(q, detail::binom((int)i, (int)i2)) *
                                   dtheta0.pow(i - i2) *
                                   FqElem::from_int(q, detail::binom((int)j, (int)j2)) *
                                   dtheta.pow(j - j2);
                    if (scale.is_zero()) continue;
                    r.coords[i2][j2] = r.coords[i2][j2] + c.scaled(Coeff(scale));
                }
        }
    return r;
}

inline HahnSeries elem_eval(const ExtensionData& x, const ExtElem& a) {
    HahnSeries acc = HahnSeries::zero(x.ground.ambient_q, x.truncation.max_terms);
    for (size_t i = 0; i < a.coords.size(); ++i)
        for (size_t j = 0; j < a.coords[i].size(); ++j) {
            const HahnSeries& c = a.coords[i][j];
            if (c.terms().empty() && c.is_exact()) continue;
            HahnSeries term = c;
            if (i) term = term * x.theta0_pows.at(i);
            if (j) term = term * x.theta_pows.at(j);
            acc = acc + term;
        }
    return acc;
}

/// All automorphisms of the (simple) degree-p step: theta -> theta + t.
inline std::vector<Auto> simple_autos(const ExtensionData& x) {
    std::vector<Auto> v;
    for (int t = 0; t < x.p; ++t) v.push_back(Auto{0, t});
    return v;
}

// ---------------------------------------------------------------------------
// construction

namespace detail {

inline HahnSeries artin_schreier_image(const HahnSeries& c) {
    return c.frobenius() - c; // c^p - c
}

} // namespace detail

/// Builds a degree-p Artin-Schreier extension inside the ambient field and
/// classifies it. The defining relation is first normalized by stripping
/// Artin-Schreier images of ground monomials from the rhs, after which the
/// embedded root's value and leading residue decide between the ramified and
/// inertial case. Defect scenarios skip the normalization and must declare
/// approximants, which are verified to give strictly increasing values.
inline ExtensionData build_extension(const ExtensionSpec& spec) {
    if (spec.kind != ExtKind::ArtinSchreier)
        throw InvalidInput("build_extension handles Artin-Schreier steps; use build_tower "
                           "or the Kummer formula mode");
    ExtensionData x;
    x.kind = spec.kind;
    x.ground = spec.ground;
    x.truncation = spec.truncation;
    x.p = (int)FqField::get(spec.ground.ambient_q).p();
    if ((std::int64_t)x.p != spec.ground.value_group.p())
        throw InvalidInput("value group prime differs from coefficient characteristic");
    x.vK = spec.ground.value_group;
    x.zeta = FqElem::zero(spec.ground.ambient_q);

    // classification runs on the rhs as declared (exact literals stay exact,
    // so that a split can be certified); the policy window is applied before
    // the root is embedded
    HahnSeries a = spec.rhs;
    if (!is_ground_element(a, spec.ground))
        throw InvalidInput("right-hand side is not a ground-field element");

    const bool have_approximants = !spec.ground.approximants.empty();

    if (!have_approximants) {
        // Normalize the relation on the rhs side: while the leading monomial
        // m of a is the Artin-Schreier image of a ground monomial c = m^(1/p),
        // replace a by a - (c^p - c). This shifts the generator by c; if a
        // reduces to nothing, the polynomial splits over K.
        for (int step = 0; step <= 4 * spec.truncation.max_terms + 64; ++step) {
            if (a.is_certified_zero())
                throw UnibranchedViolation("the defining polynomial has a root in K");
            Rat v = a.val_finite(); // throws IndeterminateValuation when truncated away
            if (v > Rat(0)) {
                // the root -sum a^(p^j) stays inside K
                throw UnibranchedViolation("X^p - X - a splits: a reduces to positive value");
            }
            if (v == Rat(0)) {
                if (residue_equation_splits(a.coefficient(Rat(0)), spec.ground))
                    throw UnibranchedViolation("X^p - X - a splits at residue level");
                break;
            }
            Rat vroot = v / Rat(x.p);
            Coeff lead = a.leading_coeff();
            Coeff croot = lead.pth_root((std::uint32_t)x.p);
            if (!x.vK.contains(vroot) || !coeff_in_residue_field(croot, spec.ground))
                break; // the leading direction genuinely ramifies or extends the residue field
            HahnSeries c = HahnSeries::monomial(spec.ground.ambient_q, vroot, croot,
                                                spec.truncation.max_terms);
            a = a - detail::artin_schreier_image(c);
            if (step == 4 * spec.truncation.max_terms + 64)
                throw IndeterminateValuation("cannot classify the extension at this truncation; "
                                             "declare approximants or refine the policy");
        }
    }

    a = a.with_policy(spec.truncation);
    x.rhs_theta = a;
    x.theta = artin_schreier_root(a, (std::uint32_t)x.p, spec.rhs_tail_negative);
    x.v_theta = x.theta.val_finite();

    if (have_approximants) {
        // declared defect scenario: immediate extension, witnessed below
        if (!x.vK.contains(x.v_theta))
            throw InvalidInput("declared defect scenario with v(theta) outside vK");
        x.d = x.p;
        x.nu = 1;
        x.vL = x.vK;
    } else if (!x.vK.contains(x.v_theta)) {
        auto idx = x.vK.index_of(x.v_theta, x.p);
        if (!idx || *idx != x.p) throw InvalidInput("generator value has index != p over vK");
        x.e = x.p;
        x.f = 1;
        x.vL = x.vK.extended_by(x.v_theta);
    } else {
        if (coeff_in_residue_field(x.theta.leading_coeff(), spec.ground))
            throw IndeterminateValuation("normalized generator still approximable from K; "
                                         "refine the truncation policy");
        x.e = 1;
        x.f = x.p;
        x.vL = x.vK;
        x.residue_separable = (x.v_theta == Rat(0));
    }

    x.theta_pows.resize(x.p);
    x.theta_pows[0] = HahnSeries::one(spec.ground.ambient_q, spec.truncation.max_terms);
    for (int j = 1; j < x.p; ++j) x.theta_pows[j] = x.theta_pows[j - 1] * x.theta;

    if (x.d == 1) {
        for (int j = 0; j < x.p; ++j) x.basis_powers.push_back(j);
    } else {
        ApproximationProfile prof;
        std::optional<Rat> prev;
        for (const auto& c : spec.ground.approximants) {
            HahnSeries diff = x.theta - c;
            std::optional<Rat> v;
            if (diff.is_certified_zero())
                v = std::nullopt; // infinity
            else
                v = diff.val_finite();
            if (prev && v && !(*v > *prev))
                throw NotIncreasing("approximant values fail to increase strictly at v = " +
                                    v->str());
            prof.values.push_back(v);
            if (v) prev = v;
        }
        if (prof.values.size() < 3)
            throw ProfileTooShort("need at least three approximants to witness a defect");
        prof.strictly_increasing = true;
        if (!spec.ground.approximant_sup)
            throw InvalidInput("defect scenario must declare the supremum of v(a - c_k)");
        for (const auto& v : prof.values)
            if (v && !(*v < *spec.ground.approximant_sup))
                throw InvalidInput("approximant value " + v->str() +
                                   " reaches the declared supremum");
        prof.infimum_of_negatives = -*spec.ground.approximant_sup;
        x.profile = std::move(prof);
    }

    // Ostrowski consistency: [L:K] = d * e * f
    if (x.d * x.e * x.f != x.p)
        throw InvalidInput("classification violates the degree formula");
    return x;
}

/// Checks the Galois criterion for the two-step tower and returns the
/// constant zeta = sigma(theta) - theta. The lower conjugation moves theta0
/// by 1 in F_p, whose Artin-Schreier roots must already lie in the
/// coefficient field.
inline FqElem verify_tower_galois(const GroundFieldSpec& ground) {
    std::uint32_t q = ground.ambient_q;
    auto z = artin_schreier_residue_root(FqElem::one(q));
    if (!z)
        throw CoefficientFieldTooSmall("zeta with zeta^p - zeta = 1 is missing from F_" +
                                       std::to_string(q) + "; enlarge the coefficient field");
    return *z;
}

/// Builds the degree-p^2 tower: a defect lower step theta0^p - theta0 = rhs,
/// then the defectless upper step theta^p - theta = theta0.
inline ExtensionData build_tower(const ExtensionSpec& spec) {
    ExtensionSpec lower = spec;
    lower.kind = ExtKind::ArtinSchreier;
    ExtensionData low = build_extension(lower);
    if (!low.is_defect())
        throw InvalidInput("tower construction expects the lower step to carry the defect");

    FqElem zeta = verify_tower_galois(spec.ground);

    ExtensionData x;
    x.kind = ExtKind::TowerAS;
    x.ground = spec.ground;
    x.truncation = spec.truncation;
    x.p = low.p;
    x.vK = low.vK;
    x.zeta = zeta;
    x.theta0 = low.theta;
    x.rhs_theta0 = low.rhs_theta;
    x.profile = low.profile;

    bool tail_negative = x.theta0.trunc() && *x.theta0.trunc() < Rat(0);
    x.theta = artin_schreier_root(x.theta0, (std::uint32_t)x.p, tail_negative);
    x.rhs_theta = x.theta0;
    x.v_theta = x.theta.val_finite();
    if (x.vK.contains(x.v_theta))
        throw InvalidInput("upper generator value unexpectedly lies in vK");
    x.vL = x.vK.extended_by(x.v_theta);

    x.e = x.p;
    x.f = 1;
    x.d_lower = low.d;
    x.d_upper = 1;
    x.d = x.d_lower * x.d_upper;
    x.nu = 1;

    x.theta_pows.resize(x.p);
    x.theta0_pows.resize(x.p);
    x.theta_pows[0] = HahnSeries::one(spec.ground.ambient_q, spec.truncation.max_terms);
    x.theta0_pows[0] = x.theta_pows[0];
    for (int j = 1; j < x.p; ++j) {
        x.theta_pows[j] = x.theta_pows[j - 1] * x.theta;
        x.theta0_pows[j] = x.theta0_pows[j - 1] * x.theta0;
    }
    for (int j = 0; j < x.p; ++j) x.basis_powers.push_back(j); // basis of L | L0

    if (x.d * x.e * x.f != x.p * x.p)
        throw InvalidInput("tower classification violates the degree formula");
    return x;
}

// ---------------------------------------------------------------------------
// approximation profiles

/// Defectless route: with a valuation basis, v(a - c) is maximized by
/// dropping the basis coordinate of 1, and the maximum is the value of the
/// remaining tail.
inline ApproximationProfile dist_values_basis(const ExtensionData& x,
                                              const std::vector<HahnSeries>& coords) {
    if (x.basis_powers.empty())
        throw NoValuationBasis("defect extension: use the approximant route");
    ApproximationProfile prof;
    HahnSeries tail = HahnSeries::zero(x.ground.ambient_q, x.truncation.max_terms);
    for (size_t j = 1; j < coords.size(); ++j) tail = tail + coords[j] * x.theta_pows.at(j);
    if (tail.is_certified_zero())
        prof.values.push_back(std::nullopt); // a lies in K; v(a - a) is infinite
    else
        prof.values.push_back(tail.val_finite());
    prof.strictly_increasing = false;
    if (prof.values[0]) prof.infimum_of_negatives = -*prof.values[0];
    return prof;
}

/// Defect route: the declared approximants give the strictly increasing
/// values v(a - c_k).
inline ApproximationProfile dist_values_approximants(const ExtensionData& x, const HahnSeries& a) {
    ApproximationProfile prof;
    std::optional<Rat> prev;
    for (const auto& c : x.ground.approximants) {
        HahnSeries diff = a - c;
        std::optional<Rat> v;
        if (!diff.is_certified_zero()) v = diff.val_finite();
        if (prev && v && !(*v > *prev))
            throw NotIncreasing("approximant values fail to increase strictly");
        prof.values.push_back(v);
        if (v) prev = v;
    }
    prof.strictly_increasing = true;
    if (x.ground.approximant_sup) prof.infimum_of_negatives = -*x.ground.approximant_sup;
    return prof;
}

// ---------------------------------------------------------------------------
// Galois-orbit oracles (simple degree-p steps)

namespace detail {

inline void require_simple(const ExtensionData& x, const char* what) {
    if (x.is_tower()) throw InvalidInput(std::string(what) + " expects a degree-p step");
}

/// Extracts the ground-field series from an element whose nonconstant
/// coordinates cancelled; throws if they did not.
inline HahnSeries ground_value(const ExtensionData& x, const ExtElem& a, const char* what) {
    if (!elem_nonconstant_coords_vanish(a))
        throw OracleMismatch(std::string(what) + " failed to land in the ground field");
    HahnSeries r = a.coords[0][0];
    if (!r.terms().empty()) {
        for (const auto& [e, c] : r.terms())
            if (!x.vK.contains(e))
                throw OracleMismatch(std::string(what) + " has an exponent outside vK: " + e.str());
    }
    return r;
}

} // namespace detail

/// Brute-force trace: the sum over all conjugates. The result is checked to
/// lie in K (coordinates above 1 cancel, support inside vK).
inline HahnSeries trace_elem(const ExtensionData& x, const ExtElem& z) {
    detail::require_simple(x, "trace_elem");
    ExtElem acc = elem_zero(x);
    for (const Auto& g : simple_autos(x)) acc = elem_add(acc, apply_auto(x, z, g));
    return detail::ground_value(x, acc, "trace");
}

/// Brute-force norm: the product over all conjugates.
inline HahnSeries norm_elem(const ExtensionData& x, const ExtElem& z) {
    detail::require_simple(x, "norm_elem");
    ExtElem acc = elem_from_ground(x, HahnSeries::one(x.ground.ambient_q, x.truncation.max_terms));
    for (const Auto& g : simple_autos(x)) acc = elem_mul(x, acc, apply_auto(x, z, g));
    return detail::ground_value(x, acc, "norm");
}

/// The different of an element: the product of b - sigma(b) over the
/// nontrivial conjugates. Returns the element and its value.
inline std::pair<ExtElem, Rat> different_of_element(const ExtensionData& x, const ExtElem& b) {
    detail::require_simple(x, "different_of_element");
    if (elem_is_ground(b)) throw ElementInGroundField("different of a ground-field element");
    ExtElem acc = elem_from_ground(x, HahnSeries::one(x.ground.ambient_q, x.truncation.max_terms));
    for (int t = 1; t < x.p; ++t)
        acc = elem_mul(x, acc, elem_sub(b, apply_auto(x, b, Auto{0, t})));
    HahnSeries v = elem_eval(x, acc);
    return {acc, v.val_finite()};
}

} // namespace ramval
