#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "vincyc/enumerate.hpp"

namespace vincyc {

/// Geometric continuation of the simple counts past the head of the series:
/// term i > head is modeled as s_{coeff_index} * base^(i - coeff_index).
struct TailSpec {
    unsigned base = 2;
    int coeff_index = 22;
};

/// Certified lower bound for the positive root of
///   1 = sum_{i=2}^{head_max+1} s_i r^{-(i-1)}   (+ geometric tail if given).
/// Bisection runs in exact rational arithmetic and the lower end of the
/// final bracket is returned, so the true root is never overstated.
/// Throws std::domain_error when the initial bracket shows no sign change.
double lower_bound_root(const SequenceTable& s, int head_max,
                        std::optional<TailSpec> tail = std::nullopt,
                        double tol = 1e-9);

struct IdentityCheck {
    int n;
    mpz_class lhs, rhs;
    bool holds;
};

/// Rewrites the one-step ratio gap through the size convolution:
///   lhs = 4 c_{n-1} - c_n
///   rhs = -s_{n-1} + sum_{i=2}^{n-2} s_{n-i} (4 c_i - c_{i+1})
/// The sides agree for every n >= 4; n = 3 is the boundary case where the
/// rewrite breaks down.
IdentityCheck conditional_upper_identity(const SequenceTable& c,
                                         const SequenceTable& s, int n);

struct RatioBound {
    int n;
    mpq_class ratio;  ///< c_n / c_{n-1}
    bool lower_ok;    ///< c_n >= 2 c_{n-1}
    bool upper_ok;    ///< c_n <= 4 c_{n-1}
};

/// Consecutive-ratio flags for n in [first, last].
std::vector<RatioBound> ratio_bounds(const SequenceTable& c, int first,
                                     int last);

struct SuperMultCheck {
    int m, n;
    mpz_class product;   ///< c_m * c_n
    mpz_class combined;  ///< c_{m+n}
    bool holds;          ///< combined >= product
};

/// All pairs 1 <= m <= n with m + n <= max_total. The glue product embeds
/// a pair of members into one of combined size, so every check should hold.
std::vector<SuperMultCheck> supermultiplicative_check(const SequenceTable& c,
                                                      int max_total);

struct FloorCheck {
    int n;
    mpz_class lhs;  ///< s_n
    mpz_class rhs;  ///< factor * s_{n-2}
    bool holds;
};

/// Two-step floor s_n >= 4 s_{n-2}, asserted from n = 5 on.
/// last_n < 0 uses everything the table holds.
std::vector<FloorCheck> tail_growth_floor(const SequenceTable& s,
                                          int first_n = 5, int last_n = -1);

/// Two-step floor s_n >= 9 s_{n-2} from n = 12 on; informational.
std::vector<FloorCheck> ninefold_floor_report(const SequenceTable& s,
                                              int first_n = 12,
                                              int last_n = -1);

/// Growth diagnostics over a member-count table: the consecutive ratios, the
/// n-th roots, and the largest root, which subadditivity turns into a lower
/// estimate of the growth rate. identity_checks stays empty until a caller
/// holding a simple-count table fills it via conditional_upper_identity.
struct GrowthReport {
    std::vector<std::pair<int, mpq_class>> ratios;  ///< n -> c_n / c_{n-1}
    std::vector<std::pair<int, double>> roots;      ///< n -> c_n^(1/n)
    double lower_bound = 0;                         ///< max of the roots
    std::vector<std::pair<int, bool>> identity_checks;
    std::vector<int> root_decreases;  ///< n where the n-th root dips

    nlohmann::json to_json() const;
    std::string str() const;
};

/// Ratios and roots for everything the table holds contiguously from its
/// base. Each n with c_n^(1/n) below its predecessor lands in
/// root_decreases; none is expected, but the scan records rather than
/// assumes that.
GrowthReport ratio_and_root_report(const SequenceTable& c);

}  // namespace vincyc
