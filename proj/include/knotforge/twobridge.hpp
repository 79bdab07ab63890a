#pragma once

#include "knotforge/construct.hpp"
#include "knotforge/laurent.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace knotforge {

/// A 2-bridge fraction p/q in lowest terms, sign-normalized to p > 0.
/// q is kept in (0, p] modulo p (q = p only for the degenerate 1/1).
struct Fraction {
    long long p = 1;
    long long q = 1;
};

/// Even continued-fraction expansion [2b_1, ..., 2b_{2k}], all entries
/// nonzero even integers, under the descending-fraction convention
/// [a_1, ..., a_k] = a_1 + 1/(a_2 + 1/(... + 1/a_k)).
using EvenExpansion = std::vector<int>;

/// Raw rational value of an expansion before normalization.
struct RationalValue {
    long long num = 0;
    long long den = 1;
};

/// Exact value of the continued fraction; throws on a degenerate tail
/// (division by zero part-way through).
RationalValue evaluate_raw(const std::vector<int>& expansion);

/// Same value by the continuant recurrence; used as an independent route.
RationalValue evaluate_by_recurrence(const std::vector<int>& expansion);

/// Sign-normalized fraction of an expansion.
Fraction evaluate(const EvenExpansion& e);

/// Same |p|, and q' congruent to +-q^{+-1} mod p (mirror-inclusive).
bool fractions_equivalent(const Fraction& a, const Fraction& b);

/// All even expansions of the given length with |entries| <= bound whose
/// value is equivalent to f. Deterministic lexicographic order.
std::vector<EvenExpansion> enumerate_expansions(const Fraction& f, int length, int bound);

/// The unique even expansion of p/q of the given length with every entry of
/// magnitude in [2, cap], when it exists. Each step's entry is forced into
/// an open interval of width 2, so the walk never branches.
std::optional<EvenExpansion> strict_expansion(long long p, long long q, int length, int cap);

/// Seifert matrix of the linear plumbing of twisted bands realizing an even
/// expansion: upper bidiagonal, diagonal (-1)^(i) * b_i, superdiagonal 1.
/// The alternating diagonal sign is the frozen calibration making the
/// trefoil and figure-eight fixtures come out right under the descending
/// fraction convention above.
std::vector<std::vector<long long>> plumbing_seifert_matrix(const EvenExpansion& e);

/// det(V - t V^T), normalized.
LaurentPoly expansion_alexander(const EvenExpansion& e);

/// |det(V + V^T)|; equals |numerator| of the expansion's value.
long long plumbing_determinant(const EvenExpansion& e);

struct CrossCheckReport {
    int n = 0;
    Integer det;               ///< determinant of the built knot
    long long p = 0;           ///< same value, as the 2-bridge numerator
    int length = 0;            ///< expansion length searched (2n)
    int bound = 0;             ///< coefficient cap used
    std::uint64_t census_count = 0;
    /// matching expansions grouped by 2-bridge class q^{+-1} (no mirrors);
    /// each class is one chirality of one candidate knot. The surface count
    /// of a class follows the linear-plumbing rule: one independent binary
    /// choice per joint between two annuli that both carry at least a full
    /// twist (both entries of magnitude >= 4), provided no entry is a bare
    /// clasp (magnitude 2); otherwise it is reported as 0 (underived).
    struct ClassCount {
        long long q = 0;  // smallest representative of {q, q^-1 mod p}
        std::vector<EvenExpansion> expansions;
        std::uint64_t surface_count = 0;
    };
    std::vector<ClassCount> classes;
    std::uint64_t expansion_count = 0;  ///< common per-class surface count
    bool agree = false;
};

/// Cross-validate the census count against the two-bridge surface count
/// for L_n. The search scans every denominator class of p = det(L_n) for a
/// strict even expansion of length 2n whose Alexander polynomial matches;
/// the coefficient cap defaults to 4n + 2, the largest entry of the
/// expected chain.
CrossCheckReport cross_check(int n, const TileCatalog& cat,
                             std::optional<int> bound = std::nullopt);

/// Same search against explicitly supplied polynomial/determinant data;
/// lets callers probe the failure path with a deliberately wrong Delta.
CrossCheckReport cross_check_against(int n, const Integer& det, const LaurentPoly& delta,
                                     std::uint64_t census_count,
                                     std::optional<int> bound = std::nullopt);

} // namespace knotforge
