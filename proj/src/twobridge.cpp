#include "knotforge/twobridge.hpp"

#include "knotforge/alexander.hpp"
#include "knotforge/census.hpp"
#include "knotforge/util.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace knotforge {

namespace {

long long llgcd(long long a, long long b) {
    while (b) { long long t = a % b; a = b; b = t; }
    return a < 0 ? -a : a;
}

long long mod_pos(long long a, long long p) {
    long long r = a % p;
    return r < 0 ? r + p : r;
}

// Inverse of q mod p for gcd(q, p) = 1.
long long mod_inverse(long long q, long long p) {
    long long t = 0, newt = 1, r = p, newr = mod_pos(q, p);
    while (newr != 0) {
        long long quot = r / newr;
        t -= quot * newt; std::swap(t, newt);
        r -= quot * newr; std::swap(r, newr);
    }
    if (r != 1) throw InvalidInput("mod_inverse: arguments not coprime");
    return mod_pos(t, p);
}

void check_expansion(const std::vector<int>& e) {
    if (e.empty()) throw InvalidInput("expansion: must be nonempty");
    for (int a : e)
        if (a == 0 || a % 2 != 0)
            throw InvalidInput("expansion: entries must be nonzero even integers");
}

} // namespace

RationalValue evaluate_raw(const std::vector<int>& expansion) {
    if (expansion.empty()) throw InvalidInput("evaluate: empty expansion");
    long long num = expansion.back(), den = 1;
    for (std::size_t i = expansion.size() - 1; i-- > 0;) {
        // a + 1/(num/den) = (a*num + den)/num
        if (num == 0) throw InvalidInput("evaluate: degenerate tail (division by zero)");
        long long a = expansion[i];
        long long nnum = a * num + den;
        den = num;
        num = nnum;
    }
    // the fold keeps num and den coprime throughout
    return {num, den};
}

RationalValue evaluate_by_recurrence(const std::vector<int>& expansion) {
    if (expansion.empty()) throw InvalidInput("evaluate: empty expansion");
    // Continuants: h_i = a_i h_{i-1} + h_{i-2}, k likewise.
    long long h1 = 1, h0 = 0, k1 = 0, k0 = 1;
    for (std::size_t i = 0; i < expansion.size(); ++i) {
        long long a = expansion[i];
        long long h = a * h1 + h0;
        long long k = a * k1 + k0;
        h0 = h1; h1 = h;
        k0 = k1; k1 = k;
    }
    if (k1 == 0) throw InvalidInput("evaluate: degenerate expansion");
    // Tail-degeneracy check mirrors the descending evaluation: every suffix
    // must itself evaluate; detect by rerunning the suffix continuants.
    for (std::size_t s = 1; s < expansion.size(); ++s) {
        long long sh1 = 1, sh0 = 0;
        for (std::size_t i = s; i < expansion.size(); ++i) {
            long long h = expansion[i] * sh1 + sh0;
            sh0 = sh1; sh1 = h;
        }
        if (sh1 == 0) throw InvalidInput("evaluate: degenerate tail (division by zero)");
    }
    return {h1, k1};
}

Fraction evaluate(const EvenExpansion& e) {
    check_expansion(e);
    RationalValue v = evaluate_raw(e);
    long long g = llgcd(v.num, v.den);
    if (g != 0) { v.num /= g; v.den /= g; }
    if (v.num < 0) { v.num = -v.num; v.den = -v.den; }
    if (v.num == 0) throw InvalidInput("evaluate: expansion evaluates to 0");
    Fraction f;
    f.p = v.num;
    f.q = (f.p == 1) ? 1 : mod_pos(v.den, f.p);
    if (f.q == 0) throw InvalidInput("evaluate: denominator divides numerator");
    return f;
}

bool fractions_equivalent(const Fraction& a, const Fraction& b) {
    if (a.p != b.p) return false;
    if (a.p == 1) return true;
    long long p = a.p;
    long long q = mod_pos(a.q, p), r = mod_pos(b.q, p);
    if (llgcd(q, p) != 1 || llgcd(r, p) != 1) return false;
    long long qinv = mod_inverse(q, p);
    return r == q || r == qinv || r == mod_pos(-q, p) || r == mod_pos(-qinv, p);
}

std::vector<EvenExpansion> enumerate_expansions(const Fraction& f, int length, int bound) {
    if (length < 2 || length % 2 != 0)
        throw InvalidInput("enumerate_expansions: length must be a positive even number");
    if (bound < 2) throw InvalidInput("enumerate_expansions: bound must be >= 2");
    if (length > 12 || bound > 64)
        throw InvalidInput("enumerate_expansions: search limited to length <= 12, bound <= 64");

    std::vector<int> values;  // candidate entries, lexicographic
    for (int v = -bound; v <= bound; ++v)
        if (v != 0 && v % 2 == 0) values.push_back(v);

    std::vector<EvenExpansion> found;
    EvenExpansion cur(static_cast<std::size_t>(length));
    // depth-first odometer
    std::vector<std::size_t> idx(static_cast<std::size_t>(length), 0);
    int depth = 0;
    while (depth >= 0) {
        if (idx[static_cast<std::size_t>(depth)] == values.size()) {
            idx[static_cast<std::size_t>(depth)] = 0;
            --depth;
            if (depth >= 0) ++idx[static_cast<std::size_t>(depth)];
            continue;
        }
        cur[static_cast<std::size_t>(depth)] = values[idx[static_cast<std::size_t>(depth)]];
        if (depth + 1 < length) {
            ++depth;
            continue;
        }
        try {
            if (fractions_equivalent(evaluate(cur), f)) found.push_back(cur);
        } catch (const InvalidInput&) {
            // degenerate tail: skip
        }
        ++idx[static_cast<std::size_t>(depth)];
    }
    return found;
}

std::vector<std::vector<long long>> plumbing_seifert_matrix(const EvenExpansion& e) {
    check_expansion(e);
    const std::size_t n = e.size();
    std::vector<std::vector<long long>> v(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        long long b = e[i] / 2;
        v[i][i] = (i % 2 == 0) ? b : -b;
        if (i + 1 < n) v[i][i + 1] = 1;
    }
    return v;
}

LaurentPoly expansion_alexander(const EvenExpansion& e) {
    auto v = plumbing_seifert_matrix(e);
    const std::size_t n = v.size();
    const LaurentPoly t = LaurentPoly::t();
    std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            LaurentPoly cell(v[i][j]);
            cell -= t * LaurentPoly(v[j][i]);
            m[i][j] = cell;
        }
    return laurent_determinant(std::move(m)).normalized();
}

long long plumbing_determinant(const EvenExpansion& e) {
    auto v = plumbing_seifert_matrix(e);
    const std::size_t n = v.size();
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = Integer(static_cast<long>(v[i][j] + v[j][i]));
    Integer det = integer_determinant(std::move(m));
    Integer a = abs(det);
    if (!a.fits_slong_p()) throw IntegrityError("plumbing determinant exceeds long long");
    return a.get_si();
}

std::optional<EvenExpansion> strict_expansion(long long p, long long q, int length, int cap) {
    if (p <= 1 || q <= 0 || q >= p || llgcd(p, q) != 1) return std::nullopt;
    if (length < 1) return std::nullopt;
    EvenExpansion e;
    e.reserve(static_cast<std::size_t>(length));
    long long num = p, den = q;  // remaining value num/den, den > 0
    for (int i = 0; i < length; ++i) {
        bool last = (i + 1 == length);
        if (last) {
            if (den != 1 && den != -1) return std::nullopt;
            long long a = num * den;  // num/den as an integer
            if (a == 0 || a % 2 != 0 || std::abs(a) > cap) return std::nullopt;
            e.push_back(static_cast<int>(a));
            return e;
        }
        if (den < 0) { den = -den; num = -num; }
        if (den == 1) return std::nullopt;  // integral value cannot continue strictly
        // The only even integer in the open interval (num/den - 1, num/den + 1).
        long long fl = num >= 0 ? num / den : -((-num + den - 1) / den);  // floor
        long long a = (fl % 2 == 0) ? fl : fl + 1;
        if (a * den <= num - den || a * den >= num + den) return std::nullopt;
        if (a == 0 || std::abs(a) > cap) return std::nullopt;
        e.push_back(static_cast<int>(a));
        // tail = 1 / (num/den - a) = den / (num - a*den)
        long long nden = num - a * den;
        num = den;
        den = nden;
        if (den == 0) return std::nullopt;
    }
    return std::nullopt;
}

namespace {

// Surface count of the linear plumbing realized by a strict even expansion:
// each joint between two annuli with at least a full twist on both sides
// contributes an independent binary choice. Entries of magnitude 2 (bare
// clasps) fall outside the rule; report 0 for those.
std::uint64_t plumbing_surface_count(const EvenExpansion& e) {
    for (int a : e)
        if (std::abs(a) < 4) return 0;
    int joints = static_cast<int>(e.size()) - 1;
    if (joints >= 64) return 0;
    return std::uint64_t(1) << joints;
}

CrossCheckReport run_cross_check(int n, const Integer& det, const LaurentPoly& delta,
                                 std::uint64_t census_count, std::optional<int> bound) {
    if (n < 1) throw InvalidInput("cross_check: n must be >= 1");
    if (n > 4) throw InvalidInput("cross_check: expansion search supports n <= 4");
    CrossCheckReport rep;
    rep.n = n;
    rep.det = det;
    rep.length = 2 * n;
    rep.bound = bound.value_or(4 * n + 2);
    rep.census_count = census_count;
    if (!det.fits_slong_p())
        throw InvalidInput("cross_check: determinant exceeds the expansion search range");
    rep.p = det.get_si();

    // Every denominator class of p carries at most one strict expansion of
    // the given length; scan them all and keep the Alexander matches. The
    // walk produces the positive-valued expansion; its entrywise negation
    // covers the mirror value -p/q.
    std::map<long long, CrossCheckReport::ClassCount> classes;
    for (long long q = 1; q < rep.p; ++q) {
        if (llgcd(q, rep.p) != 1) continue;
        auto e = strict_expansion(rep.p, q, rep.length, rep.bound);
        if (!e) continue;
        if (expansion_alexander(*e) != delta) continue;
        if (plumbing_determinant(*e) != rep.p)
            throw IntegrityError("cross_check: det(V + V^T) disagrees with the fraction numerator");
        EvenExpansion neg = *e;
        for (int& a : neg) a = -a;
        for (const EvenExpansion& cand : {*e, neg}) {
            Fraction f = evaluate(cand);
            long long key = std::min(f.q, mod_inverse(f.q, rep.p));
            auto& cls = classes[key];
            cls.q = key;
            cls.expansions.push_back(cand);
        }
    }

    for (auto& [key, cls] : classes) {
        std::uint64_t count = 0;
        bool consistent = true;
        for (const auto& e : cls.expansions) {
            std::uint64_t c = plumbing_surface_count(e);
            if (count == 0) count = c;
            else if (c != count) consistent = false;
        }
        cls.surface_count = consistent ? count : 0;
        rep.classes.push_back(cls);
    }
    if (!rep.classes.empty()) {
        std::uint64_t first = rep.classes.front().surface_count;
        bool all_equal = std::all_of(rep.classes.begin(), rep.classes.end(),
                                     [&](const auto& c) { return c.surface_count == first; });
        rep.expansion_count = first;
        rep.agree = all_equal && first != 0 && first == rep.census_count;
    }
    return rep;
}

} // namespace

CrossCheckReport cross_check(int n, const TileCatalog& cat, std::optional<int> bound) {
    BuildResult built = build_link(n, cat);
    LaurentPoly delta = alexander_poly(built.diagram);
    Integer det = determinant(built.diagram);
    std::uint64_t census_count = census::count_surfaces(n, cat);
    return run_cross_check(n, det, delta, census_count, bound);
}

CrossCheckReport cross_check_against(int n, const Integer& det, const LaurentPoly& delta,
                                     std::uint64_t census_count, std::optional<int> bound) {
    return run_cross_check(n, det, delta.normalized(), census_count, bound);
}

} // namespace knotforge
